"""The tau-value: the efficient point between minimal rights and utopia.

For a quasibalanced game the segment from the minimal-rights vector m to
the utopia vector M crosses the efficient hyperplane exactly once, at

    tau = alpha * m + (1 - alpha) * M,
    alpha = (sum M_j - v(N)) / (sum M_j - sum m_j),

and quasibalancedness pins alpha into [0, 1]. When the two endpoint sums
coincide the vectors coincide componentwise and the single point M is
itself the answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .bounds import minimal_rights, utopia_payoffs
from .game import TUGame
from .gately import equal_propensity
from .properties import is_essential, is_quasibalanced


class TauStatus(Enum):
    UNIQUE = "Unique"
    DEGENERATE_ENDPOINTS = "DegenerateEndpoints"
    NOT_QUASIBALANCED = "NotQuasibalanced"


@dataclass(frozen=True)
class TauResult:
    """`point` and `alpha` are present for UNIQUE; DEGENERATE_ENDPOINTS
    carries the coinciding endpoint as `point` with no alpha (the segment
    is a single point, so the mixing weight is vacuous)."""

    status: TauStatus
    point: tuple[Fraction, ...] | None = None
    alpha: Fraction | None = None


def tau_value(game: TUGame) -> TauResult:
    """The tau-value, or the reason there is none."""
    if not is_quasibalanced(game):
        return TauResult(TauStatus.NOT_QUASIBALANCED)

    lower = minimal_rights(game)
    upper = utopia_payoffs(game)
    span = sum(upper) - sum(lower)
    if span == 0:
        # m_i <= M_i with equal sums forces m = M; the common point is
        # efficient by the quasibalancedness sandwich.
        assert lower == upper
        assert sum(upper) == game.grand_value
        if is_essential(game):
            assert equal_propensity(game) == 0
        return TauResult(TauStatus.DEGENERATE_ENDPOINTS, point=upper)

    alpha = (sum(upper) - game.grand_value) / span
    point = tuple(
        alpha * m + (1 - alpha) * big for m, big in zip(lower, upper)
    )
    return TauResult(TauStatus.UNIQUE, point=point, alpha=alpha)
