"""Utopia payoffs and minimal rights: the two reference payoff vectors.

The utopia payoff of player i is the marginal contribution to the grand
coalition, M_i = v(N) - v(N minus i); it caps what i can credibly demand.
The minimal right m_i is the best remainder i can secure in any coalition
whose other members are paid their utopia payoffs; it floors what i can
credibly be denied. Both vectors are exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PlayerNotInCoalitionError
from .game import TUGame, as_mask, coalition_key


def utopia_payoffs(game: TUGame) -> tuple[Fraction, ...]:
    """M_i = v(N) - v(N minus i) for each player."""
    table = game.table
    full = game.grand_mask
    grand = table[full]
    return tuple(grand - table[full ^ (1 << i)] for i in range(game.n))


def remainder(game: TUGame, coalition, player: int) -> Fraction:
    """What stays for `player` if `coalition` forms and every other member
    collects the utopia payoff: v(S) minus the others' M_j."""
    mask = as_mask(coalition, game.n)
    if player < 1 or player > game.n or not mask & (1 << (player - 1)):
        raise PlayerNotInCoalitionError(
            f"player {player} is not in coalition {{{coalition_key(mask)}}}"
        )
    payoffs = utopia_payoffs(game)
    others = sum(
        (payoffs[i] for i in range(game.n) if mask & (1 << i) and i != player - 1),
        Fraction(0),
    )
    return game.table[mask] - others


def minimal_rights(game: TUGame) -> tuple[Fraction, ...]:
    """m_i = max over coalitions containing i of the remainder for i.

    The singleton coalition witnesses m_i >= v_i for every player.
    """
    table = game.table
    n = game.n
    payoffs = utopia_payoffs(game)

    # utopia_sum[mask] = sum of M_j over members of mask
    size = 1 << n
    utopia_sum = [Fraction(0)] * size
    for mask in range(1, size):
        low = mask & -mask
        utopia_sum[mask] = utopia_sum[mask ^ low] + payoffs[low.bit_length() - 1]

    rights = []
    for i in range(n):
        bit = 1 << i
        best = None
        for mask in range(1, size):
            if not mask & bit:
                continue
            rem = table[mask] - (utopia_sum[mask] - payoffs[i])
            if best is None or rem > best:
                best = rem
        rights.append(best)
    return tuple(rights)
