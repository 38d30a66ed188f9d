"""Exact classification predicates for TU games.

Every predicate is decided by exhaustive enumeration, never by sampling:
with at most 16 players the superadditivity check over disjoint coalition
pairs costs O(3**n), which is affordable, and these flags feed uniqueness
gates where a probabilistic answer would be useless.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import minimal_rights, utopia_payoffs
from .game import TUGame


@dataclass(frozen=True)
class GameClassification:
    essential: bool
    inessential: bool
    weakly_superadditive: bool
    superadditive: bool
    weakly_constant_sum: bool
    quasibalanced: bool


def is_essential(game: TUGame) -> bool:
    """True when the singleton worths sum to strictly less than v(N)."""
    return sum(game.singleton_values()) < game.grand_value


def is_superadditive(game: TUGame) -> bool:
    """v(S union T) >= v(S) + v(T) for every disjoint nonempty pair."""
    table = game.table
    full = game.grand_mask
    for s in range(1, full + 1):
        vs = table[s]
        comp = full ^ s
        t = comp
        while t:
            # each unordered pair visited once, as (larger, smaller)
            if t < s and table[s | t] < vs + table[t]:
                return False
            t = (t - 1) & comp
    return True


def is_inessential(game: TUGame) -> bool:
    """Superadditive with singleton worths summing exactly to v(N)."""
    return (
        sum(game.singleton_values()) == game.grand_value
        and is_superadditive(game)
    )


def is_weakly_superadditive(game: TUGame) -> bool:
    """v(S union {i}) >= v(S) + v_i for every S and every i outside S."""
    table = game.table
    n = game.n
    for i in range(n):
        bit = 1 << i
        vi = table[bit]
        for s in range(1 << n):
            if s & bit:
                continue
            if table[s | bit] < table[s] + vi:
                return False
    return True


def is_weakly_constant_sum(game: TUGame) -> bool:
    """v_i + v(N minus i) = v(N) for every player.

    Equivalently every player's singleton worth equals the utopia payoff;
    both readings are evaluated and must agree.
    """
    table = game.table
    full = game.grand_mask
    grand = table[full]
    complement_sum = all(
        table[1 << i] + table[full ^ (1 << i)] == grand for i in range(game.n)
    )
    at_utopia = all(
        vi == mi for vi, mi in zip(game.singleton_values(), utopia_payoffs(game))
    )
    assert complement_sum == at_utopia
    return complement_sum


def is_quasibalanced(game: TUGame) -> bool:
    """Minimal rights below utopia payoffs componentwise, with v(N) between
    the two vector sums."""
    lower = minimal_rights(game)
    upper = utopia_payoffs(game)
    if any(m > big for m, big in zip(lower, upper)):
        return False
    grand = game.grand_value
    return sum(lower) <= grand <= sum(upper)


def classify(game: TUGame) -> GameClassification:
    """All six flags at once.

    A game with singleton sum above v(N), or with singleton sum equal to
    v(N) but no superadditivity, is neither essential nor inessential; both
    flags come back False and the solvers report their own statuses.
    """
    return GameClassification(
        essential=is_essential(game),
        inessential=is_inessential(game),
        weakly_superadditive=is_weakly_superadditive(game),
        superadditive=is_superadditive(game),
        weakly_constant_sum=is_weakly_constant_sum(game),
        quasibalanced=is_quasibalanced(game),
    )
