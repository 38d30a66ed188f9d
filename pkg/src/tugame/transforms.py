"""Strategic-equivalence transforms: scaling and per-player shifts.

Two games are strategically equivalent when one is a positive rescaling of
the other plus an additive per-player shift; every solution concept here
moves covariantly under such maps. The 0-normalization shifts singleton
worths to zero, and the 0-1-normalization additionally rescales so the
grand coalition is worth one; the latter needs an essential game.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import GameError, NotEssentialError
from .game import TUGame, to_fraction


def scale_shift(game: TUGame, scale, shift) -> TUGame:
    """The strategically equivalent game w(S) = scale * v(S) + shifts over S.

    `scale` must be a positive rational; `shift` gives one additive term
    per player.
    """
    factor = to_fraction(scale)
    if factor <= 0:
        raise GameError(f"scale must be positive, got {factor}")
    offsets = tuple(to_fraction(a) for a in shift)
    if len(offsets) != game.n:
        raise GameError(
            f"shift has {len(offsets)} entries for a {game.n}-player game"
        )
    size = 1 << game.n
    shift_sum = [Fraction(0)] * size
    for mask in range(1, size):
        low = mask & -mask
        shift_sum[mask] = shift_sum[mask ^ low] + offsets[low.bit_length() - 1]
    table = tuple(
        factor * game.table[mask] + shift_sum[mask] for mask in range(size)
    )
    return TUGame._from_table(game.n, table)


def zero_normalize(game: TUGame) -> TUGame:
    """Shift every player's singleton worth to zero."""
    return scale_shift(game, 1, tuple(-v for v in game.singleton_values()))


def zero_one_normalize(game: TUGame) -> TUGame:
    """0-normalize, then rescale so the grand coalition is worth one."""
    surplus = game.grand_value - sum(game.singleton_values())
    if surplus <= 0:
        raise NotEssentialError(
            "only essential games have a 0-1-normalization; "
            f"v(N) - sum v_j = {surplus}"
        )
    return scale_shift(
        game, 1 / surplus, tuple(-v / surplus for v in game.singleton_values())
    )
