"""Reading and writing the game file format.

A game file is a JSON object:

    {"kind": "tu" | "cost",
     "n": <int>,
     "values": {"<coalition key>": <worth>, ...}}

Coalition keys are comma-separated strictly increasing 1-based player
indices ("1", "1,3", "1,2,3"). Every nonempty coalition of an n-player
game must appear exactly once; an explicit empty-coalition entry (key "")
is tolerated when its value is exactly 0. Worths may be JSON integers,
JSON decimal literals, or strings like "29/2" or "14.5". Numeric tokens
are converted from their digit text, so decimals stay exact: "14.5"
becomes 29/2, never a binary float.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import (
    BadNumberError,
    DuplicateCoalitionError,
    GameFormatError,
)
from .game import CostGame, TUGame, coalition_key, mask_from_key, to_fraction

_TOP_LEVEL_KEYS = {"kind", "n", "values"}


def _reject_constant(token):
    raise BadNumberError(token)


def _pairs_to_dict(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            if key in _TOP_LEVEL_KEYS:
                raise GameFormatError(f"duplicate field {key!r}")
            raise DuplicateCoalitionError(key)
        out[key] = value
    return out


def parse_game(text: str) -> TUGame | CostGame:
    """Parse game file text into a TUGame or CostGame, exactly."""
    try:
        doc = json.loads(
            text,
            parse_float=Fraction,
            parse_int=int,
            parse_constant=_reject_constant,
            object_pairs_hook=_pairs_to_dict,
        )
    except json.JSONDecodeError as exc:
        raise GameFormatError(f"not valid game-file text: {exc.msg}", exc.pos) from None

    if not isinstance(doc, dict):
        raise GameFormatError("top level must be an object")
    unknown = set(doc) - _TOP_LEVEL_KEYS
    if unknown:
        raise GameFormatError(f"unknown field(s): {sorted(unknown)}")
    missing = _TOP_LEVEL_KEYS - set(doc)
    if missing:
        raise GameFormatError(f"missing field(s): {sorted(missing)}")

    kind = doc["kind"]
    if kind not in ("tu", "cost"):
        raise GameFormatError(f'"kind" must be "tu" or "cost", got {kind!r}')
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise GameFormatError(f'"n" must be an integer, got {n!r}')
    raw_values = doc["values"]
    if not isinstance(raw_values, dict):
        raise GameFormatError('"values" must be an object')

    values = {}
    for key, raw in raw_values.items():
        if isinstance(raw, bool) or not isinstance(raw, (int, Fraction, str)):
            raise BadNumberError(raw)
        if key == "":
            mask = 0
        else:
            mask = mask_from_key(key, n)
        values[mask] = to_fraction(raw)

    cls = TUGame if kind == "tu" else CostGame
    return cls(n, values)


def fraction_to_token(value: Fraction) -> int | str:
    """Canonical file token: a JSON integer when integral, else "p/q"."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def serialize_game(game: TUGame | CostGame) -> str:
    """Serialize a game so that parse_game round-trips it bit-exactly.

    Coalition keys are emitted in increasing bitmask order, which makes the
    output canonical: equal games serialize to identical text.
    """
    entries = {
        coalition_key(mask): fraction_to_token(game.table[mask])
        for mask in range(1, 1 << game.n)
    }
    return json.dumps({"kind": game.kind, "n": game.n, "values": entries})
