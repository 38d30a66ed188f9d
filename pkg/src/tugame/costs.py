"""Separable-cost accounting, the ACA allocation, and the savings game.

A cost game c turns into a savings game via v(S) = sum of c_i over S minus
c(S); the savings game is 0-normalized by construction. The ACA (alternate
cost avoided) method charges each agent the separable cost

    SC_i = c(N) - c(N minus i)

plus a share of the nonseparable cost NSC = c(N) - sum SC_j, in proportion
to c_i - SC_i. In savings-game terms c_i - SC_i is the utopia payoff M_i
and NSC is sum M_j - v(N), which is what ties ACA to the Gately point: the
savings x_i = c_i - y_i of an ACA allocation y are the Gately point of the
savings game whenever that point is unique. ACA has no answer exactly when
every c_i equals SC_i, the zero-denominator case, which is the d* = -1
degeneracy of the savings game.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .game import CostGame, TUGame


class AcaStatus(Enum):
    ALLOCATED = "Allocated"
    ALLOCATED_NEGATIVE_NSC = "AllocatedNegativeNSC"
    UNDEFINED_ZERO_DENOMINATOR = "UndefinedZeroDenominator"


@dataclass(frozen=True)
class AcaResult:
    """`allocation` is present unless the proportionality denominator
    sum(c_j - SC_j) vanishes while a nonzero NSC is left to distribute;
    with NSC = 0 the separable costs alone are the (efficient) answer and
    no proportional split is needed. A negative NSC is flagged, not fatal:
    practitioners usually stop there, but the allocation and its duality
    with the savings game stay well-defined."""

    status: AcaStatus
    allocation: tuple[Fraction, ...] | None
    separable: tuple[Fraction, ...]
    nsc: Fraction


def separable_costs(cost: CostGame) -> tuple[Fraction, ...]:
    """SC_i = c(N) - c(N minus i) for each agent."""
    table = cost.table
    full = cost.grand_mask
    grand = table[full]
    return tuple(grand - table[full ^ (1 << i)] for i in range(cost.n))


def nonseparable_cost(cost: CostGame) -> Fraction:
    """NSC = c(N) - sum of separable costs."""
    return cost.grand_value - sum(separable_costs(cost))


def aca_allocation(cost: CostGame) -> AcaResult:
    """The ACA cost allocation, or the degenerate reason there is none."""
    separable = separable_costs(cost)
    nsc = cost.grand_value - sum(separable)
    margins = tuple(
        ci - sci for ci, sci in zip(cost.singleton_values(), separable)
    )
    denominator = sum(margins, Fraction(0))
    if denominator == 0:
        if nsc != 0:
            return AcaResult(
                AcaStatus.UNDEFINED_ZERO_DENOMINATOR,
                allocation=None,
                separable=separable,
                nsc=nsc,
            )
        # nothing nonseparable to distribute: the separable costs already
        # sum to c(N) and stand as the allocation
        return AcaResult(
            AcaStatus.ALLOCATED, allocation=separable, separable=separable, nsc=nsc
        )
    allocation = tuple(
        sci + nsc * margin / denominator
        for sci, margin in zip(separable, margins)
    )
    status = AcaStatus.ALLOCATED if nsc >= 0 else AcaStatus.ALLOCATED_NEGATIVE_NSC
    return AcaResult(status, allocation=allocation, separable=separable, nsc=nsc)


def savings_game(cost: CostGame) -> TUGame:
    """v(S) = sum of c_i over members of S, minus c(S).

    Singleton savings are identically zero, so the result is 0-normalized.
    """
    singles = cost.singleton_values()
    size = 1 << cost.n
    stand_alone = [Fraction(0)] * size
    for mask in range(1, size):
        low = mask & -mask
        stand_alone[mask] = stand_alone[mask ^ low] + singles[low.bit_length() - 1]
    table = tuple(
        stand_alone[mask] - cost.table[mask] for mask in range(size)
    )
    return TUGame._from_table(cost.n, table)
