"""Exact-rational games in characteristic-function form.

A game on players 1..n stores one worth per nonempty coalition. Coalitions
are handled as bitmasks: bit i-1 set means player i is a member, so masks
run from 1 to 2**n - 1 and the grand coalition is the all-ones mask. The
empty coalition is representable and always worth 0.

All worths are `fractions.Fraction` values. Binary floats are refused on
input: the degeneracy checks downstream hinge on knife-edge equalities that
rounding would corrupt, so decimal text must be converted from its digit
string (which `Fraction` does exactly).
"""

from __future__ import annotations

import re
from decimal import Decimal
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import (
    DuplicateCoalitionError,
    BadNumberError,
    GameError,
    MissingCoalitionError,
    PlayerCountError,
    PlayerOutOfRangeError,
)

MAX_PLAYERS = 16

ZERO = Fraction(0)

# int, decimal, or p/q; exponents and bare "."-forms are rejected.
_NUMBER_TOKEN = re.compile(r"[+-]?\d+(\.\d+)?$|[+-]?\d+/\d+$")


def to_fraction(value) -> Fraction:
    """Convert a worth to an exact Fraction, refusing binary floats.

    Accepts int, Fraction, decimal.Decimal, and strings of the form
    "3", "-7/2", or "14.5" (parsed from the digit text, never through a
    float).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise BadNumberError(value)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: pass an int, Fraction, or a "
            f"string like '29/2' or '14.5' to keep arithmetic exact"
        )
    if isinstance(value, str):
        token = value.strip()
        if not _NUMBER_TOKEN.match(token):
            raise BadNumberError(value)
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise BadNumberError(value) from None
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def as_mask(coalition, n: int) -> int:
    """Normalize a coalition given as a mask, an index iterable, or a key
    string like "1,3" into a validated bitmask for an n-player game."""
    if isinstance(coalition, bool):
        raise PlayerOutOfRangeError(f"invalid coalition {coalition!r}")
    if isinstance(coalition, int):
        if coalition < 0 or coalition >= (1 << n):
            raise PlayerOutOfRangeError(
                f"mask {coalition} names players outside 1..{n}"
            )
        return coalition
    if isinstance(coalition, str):
        return mask_from_key(coalition, n)
    mask = 0
    for player in coalition:
        if not isinstance(player, int) or isinstance(player, bool):
            raise PlayerOutOfRangeError(f"invalid player index {player!r}")
        if player < 1 or player > n:
            raise PlayerOutOfRangeError(
                f"player {player} outside 1..{n}"
            )
        mask |= 1 << (player - 1)
    return mask


def coalition_members(mask: int) -> tuple[int, ...]:
    """1-based player indices in the mask, ascending."""
    members = []
    player = 1
    while mask:
        if mask & 1:
            members.append(player)
        mask >>= 1
        player += 1
    return tuple(members)


def coalition_key(mask: int) -> str:
    """Canonical text key: comma-separated strictly increasing indices."""
    return ",".join(str(p) for p in coalition_members(mask))


_KEY_PATTERN = re.compile(r"[1-9]\d*(,[1-9]\d*)*$")


def mask_from_key(key: str, n: int) -> int:
    """Parse a canonical coalition key, enforcing strict ascending order."""
    from .errors import BadCoalitionKeyError

    if not _KEY_PATTERN.match(key):
        raise BadCoalitionKeyError(key)
    players = [int(p) for p in key.split(",")]
    if any(b <= a for a, b in zip(players, players[1:])):
        raise BadCoalitionKeyError(key)
    for player in players:
        if player > n:
            raise PlayerOutOfRangeError(f"player {player} outside 1..{n}")
    mask = 0
    for player in players:
        mask |= 1 << (player - 1)
    return mask


def nonempty_coalitions(n: int) -> Iterator[int]:
    """All nonempty coalition masks of an n-player game, ascending."""
    return iter(range(1, 1 << n))


class _CharacteristicGame:
    """Immutable worth table over all coalitions of players 1..n."""

    kind = ""

    __slots__ = ("_n", "_table")

    def __init__(self, n: int, values: Mapping):
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise PlayerCountError(f"player count must be an integer >= 1, got {n!r}")
        if n > MAX_PLAYERS:
            raise PlayerCountError(
                f"player count {n} exceeds the supported maximum of {MAX_PLAYERS} "
                f"(the table needs 2**n - 1 entries)"
            )
        size = 1 << n
        table: list[Fraction | None] = [None] * size
        table[0] = ZERO
        for coalition, raw in values.items():
            mask = as_mask(coalition, n)
            worth = to_fraction(raw)
            if mask == 0:
                if worth != 0:
                    raise GameError(
                        f"the empty coalition must be worth 0, got {worth}"
                    )
                continue
            if table[mask] is not None:
                raise DuplicateCoalitionError(coalition_key(mask))
            table[mask] = worth
        for mask in range(1, size):
            if table[mask] is None:
                raise MissingCoalitionError(coalition_key(mask))
        self._n = n
        self._table = tuple(table)

    @classmethod
    def _from_table(cls, n: int, table: tuple[Fraction, ...]):
        """Internal constructor for games already in validated table form."""
        game = object.__new__(cls)
        game._n = n
        game._table = table
        return game

    @property
    def n(self) -> int:
        return self._n

    @property
    def table(self) -> tuple[Fraction, ...]:
        """Mask-indexed worths, length 2**n, entry 0 is the empty coalition."""
        return self._table

    @property
    def grand_mask(self) -> int:
        return (1 << self._n) - 1

    @property
    def grand_value(self) -> Fraction:
        return self._table[-1]

    def value(self, coalition) -> Fraction:
        """Worth of a coalition given as player indices, a key string, or
        a bitmask. The empty coalition is worth 0."""
        return self._table[as_mask(coalition, self._n)]

    def singleton_values(self) -> tuple[Fraction, ...]:
        return tuple(self._table[1 << i] for i in range(self._n))

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._n == other._n and self._table == other._table

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._n, self._table))

    def __repr__(self) -> str:
        worths = ", ".join(
            f"{{{coalition_key(mask)}}}: {self._table[mask]}"
            for mask in range(1, min(1 << self._n, 16))
        )
        if (1 << self._n) > 16:
            worths += ", ..."
        return f"{type(self).__name__}(n={self._n}, {worths})"


class TUGame(_CharacteristicGame):
    """Transferable-utility game: worths v(S) with v(empty) = 0."""

    kind = "tu"

    __slots__ = ()


class CostGame(_CharacteristicGame):
    """Cost game: joint costs c(S) with c(empty) = 0."""

    kind = "cost"

    __slots__ = ()
