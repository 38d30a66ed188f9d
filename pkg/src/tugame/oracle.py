"""Brute-force cross-checks and seeded random-game generation.

Nothing here trusts the closed forms elsewhere in the package. The grid
search scans interior points of the imputation simplex and evaluates the
propensity ratio (M_i - x_i) / (x_i - v_i) literally at each one; the
recomputation walks the defining formulas with an entirely different data
layout (frozensets and dicts instead of bitmask tables). The generators
are deterministic per (seed, n, class) and emit rationals with small
denominators so that everything downstream stays exact and cheap.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .bounds import utopia_payoffs
from .errors import (
    GameError,
    GenerationFailedError,
    NotEssentialError,
    TooManyPlayersError,
)
from .game import CostGame, TUGame
from .properties import (
    GameClassification,
    is_essential,
    is_quasibalanced,
    is_superadditive,
    is_weakly_constant_sum,
)
from .transforms import zero_normalize

GRID_PLAYER_LIMIT = 4


@dataclass(frozen=True)
class GridSearchReport:
    """Best interior grid point by worst-case propensity to disrupt.

    The imputation simplex is subdivided into `resolution` barycentric
    steps of (v(N) - sum v_j) / resolution above the singleton worths;
    `best_point` is strictly interior by construction. Ties go to the
    lexicographically smallest point.
    """

    best_point: tuple[Fraction, ...]
    best_minmax: Fraction
    resolution: int


def grid_minmax_propensity(game: TUGame, resolution: int) -> GridSearchReport:
    """Exhaustively minimize the maximum propensity to disrupt on a grid.

    Exact throughout: grid coordinates are rationals and each propensity is
    the literal ratio of exact numerator and denominator, so the only
    approximation anywhere is the grid spacing itself.
    """
    n = game.n
    if n > GRID_PLAYER_LIMIT:
        raise TooManyPlayersError(
            f"grid search supports at most {GRID_PLAYER_LIMIT} players, got {n}"
        )
    if isinstance(resolution, bool) or not isinstance(resolution, int) or resolution < n:
        raise GameError(
            f"resolution must be an integer >= n = {n}, got {resolution!r}"
        )
    singles = game.singleton_values()
    surplus = game.grand_value - sum(singles)
    if surplus <= 0:
        raise NotEssentialError(
            f"grid search needs an essential game; v(N) - sum v_j = {surplus}"
        )

    margins = tuple(m - v for v, m in zip(singles, utopia_payoffs(game)))
    step = surplus / resolution

    # Integer core: multiply everything by a common denominator. At grid
    # offsets k (k_i >= 1, sum k_i = resolution) the propensity of player i
    # is (alpha_i - k_i * eta) / (k_i * eta) in scaled units, and ratio
    # comparisons cross-multiply with the positive k's (eta cancels).
    scale = math.lcm(step.denominator, *(a.denominator for a in margins))
    eta = int(step * scale)
    alphas = [int(a * scale) for a in margins]
    etak = [k * eta for k in range(resolution + 1)]

    best_num = best_k = best_offsets = None

    if n == 2:
        a1, a2 = alphas
        for k1 in range(1, resolution):
            k2 = resolution - k1
            n1 = a1 - etak[k1]
            n2 = a2 - etak[k2]
            if n1 * k2 >= n2 * k1:
                mn, mk = n1, k1
            else:
                mn, mk = n2, k2
            if best_num is None or mn * best_k < best_num * mk:
                best_num, best_k, best_offsets = mn, mk, (k1, k2)
    elif n == 3:
        a1, a2, a3 = alphas
        for k1 in range(1, resolution - 1):
            n1 = a1 - etak[k1]
            for k2 in range(1, resolution - k1):
                k3 = resolution - k1 - k2
                n2 = a2 - etak[k2]
                n3 = a3 - etak[k3]
                if n1 * k2 >= n2 * k1:
                    mn, mk = n1, k1
                else:
                    mn, mk = n2, k2
                if n3 * mk > mn * k3:
                    mn, mk = n3, k3
                if best_num is None or mn * best_k < best_num * mk:
                    best_num, best_k, best_offsets = mn, mk, (k1, k2, k3)
    else:
        a1, a2, a3, a4 = alphas
        for k1 in range(1, resolution - 2):
            n1 = a1 - etak[k1]
            for k2 in range(1, resolution - k1 - 1):
                n2 = a2 - etak[k2]
                if n1 * k2 >= n2 * k1:
                    mn12, mk12 = n1, k1
                else:
                    mn12, mk12 = n2, k2
                for k3 in range(1, resolution - k1 - k2):
                    k4 = resolution - k1 - k2 - k3
                    n3 = a3 - etak[k3]
                    n4 = a4 - etak[k4]
                    mn, mk = mn12, mk12
                    if n3 * mk > mn * k3:
                        mn, mk = n3, k3
                    if n4 * mk > mn * k4:
                        mn, mk = n4, k4
                    if best_num is None or mn * best_k < best_num * mk:
                        best_num, best_k, best_offsets = mn, mk, (k1, k2, k3, k4)

    point = tuple(v + k * step for v, k in zip(singles, best_offsets))
    return GridSearchReport(
        best_point=point,
        best_minmax=Fraction(best_num, best_k * eta),
        resolution=resolution,
    )


@dataclass(frozen=True)
class DefinitionReport:
    """Utopia payoffs, minimal rights, and classification flags, recomputed
    from the defining formulas with independent code."""

    utopia: tuple[Fraction, ...]
    minimal_rights: tuple[Fraction, ...]
    classification: GameClassification


def recompute_by_definition(game: TUGame) -> DefinitionReport:
    """Walk every definition over frozenset-keyed worths.

    Used in differential tests against the bitmask implementations; shares
    no loop structure with them.
    """
    n = game.n
    players = tuple(range(1, n + 1))
    worth: dict[frozenset, Fraction] = {}
    for size in range(n + 1):
        for combo in itertools.combinations(players, size):
            worth[frozenset(combo)] = game.value(combo)
    full = frozenset(players)

    big = {i: worth[full] - worth[full - {i}] for i in players}

    small = {}
    for i in players:
        best = None
        for size in range(1, n + 1):
            for combo in itertools.combinations(players, size):
                if i not in combo:
                    continue
                rem = worth[frozenset(combo)] - sum(
                    (big[j] for j in combo if j != i), Fraction(0)
                )
                if best is None or rem > best:
                    best = rem
        small[i] = best

    singles_sum = sum(worth[frozenset({i})] for i in players)
    essential = singles_sum < worth[full]

    superadditive = True
    for s_size in range(1, n + 1):
        for s_combo in itertools.combinations(players, s_size):
            rest = tuple(p for p in players if p not in s_combo)
            for t_size in range(1, len(rest) + 1):
                for t_combo in itertools.combinations(rest, t_size):
                    joined = frozenset(s_combo) | frozenset(t_combo)
                    if worth[joined] < worth[frozenset(s_combo)] + worth[frozenset(t_combo)]:
                        superadditive = False

    weakly_superadditive = True
    for i in players:
        rest = tuple(p for p in players if p != i)
        for size in range(len(rest) + 1):
            for combo in itertools.combinations(rest, size):
                s = frozenset(combo)
                if worth[s | {i}] < worth[s] + worth[frozenset({i})]:
                    weakly_superadditive = False

    weakly_constant_sum = all(worth[frozenset({i})] == big[i] for i in players)
    inessential = superadditive and singles_sum == worth[full]
    quasibalanced = (
        all(small[i] <= big[i] for i in players)
        and sum(small.values()) <= worth[full] <= sum(big.values())
    )

    return DefinitionReport(
        utopia=tuple(big[i] for i in players),
        minimal_rights=tuple(small[i] for i in players),
        classification=GameClassification(
            essential=essential,
            inessential=inessential,
            weakly_superadditive=weakly_superadditive,
            superadditive=superadditive,
            weakly_constant_sum=weakly_constant_sum,
            quasibalanced=quasibalanced,
        ),
    )


GAME_CLASSES = ("superadditive", "quasibalanced", "weakly_constant_sum", "arbitrary")

_RETRY_CAP = 400
_DENOMINATORS = (1, 2, 3, 4)

# Cap on the equal propensity to disrupt of generated quasibalanced games.
# The grid oracle's agreement bound (4 / resolution) is unattainable for
# quasibalanced games with large d*: already the symmetric game with zero
# singleton and pair worths has d* = 2, and pigeonholing 200 steps into 3
# interior coordinates leaves a gap of 1/33 > 4/200. Sampling the grand
# worth inside the window that keeps d* <= 3/4 stays well inside the
# provable gap (d* + 1) * n / (resolution - n).
_DSTAR_CAP = Fraction(3, 4)


def _rand_fraction(rng: random.Random, lo: int, hi: int) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(_DENOMINATORS))


def _superadditive_floor(table: list, mask: int) -> Fraction:
    """Largest worth any split of `mask` into two nonempty parts achieves."""
    best = None
    sub = (mask - 1) & mask
    while sub:
        part = table[sub] + table[mask ^ sub]
        if best is None or part > best:
            best = part
        sub = (sub - 1) & mask
    return best


def _masks_by_size(n: int) -> list[list[int]]:
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1, 1 << n):
        by_size[mask.bit_count()].append(mask)
    return by_size


def _sample_superadditive(rng: random.Random, n: int) -> TUGame:
    size = 1 << n
    table: list = [Fraction(0)] * size
    by_size = _masks_by_size(n)
    for mask in by_size[1]:
        table[mask] = _rand_fraction(rng, -4, 8)
    for coalition_size in range(2, n):
        for mask in by_size[coalition_size]:
            table[mask] = _superadditive_floor(table, mask) + _rand_fraction(rng, 0, 8)
    full = size - 1
    table[full] = _superadditive_floor(table, full) + _rand_fraction(rng, 1, 8)
    return TUGame._from_table(n, tuple(table))


def _sample_quasibalanced(rng: random.Random, n: int) -> TUGame | None:
    size = 1 << n
    table: list = [Fraction(0)] * size
    by_size = _masks_by_size(n)
    for mask in by_size[1]:
        table[mask] = _rand_fraction(rng, -4, 8)
    for coalition_size in range(2, n):
        for mask in by_size[coalition_size]:
            # strictly positive synergy keeps the floor above the singleton sum
            table[mask] = _superadditive_floor(table, mask) + _rand_fraction(rng, 1, 8)

    full = size - 1
    singles_sum = sum(table[mask] for mask in by_size[1])
    near_grand_sum = sum(table[mask] for mask in by_size[n - 1])
    if n == 2:
        # d* = 1 for every essential two-player game; no window to tune
        table[full] = singles_sum + _rand_fraction(rng, 1, 8)
        return TUGame._from_table(n, tuple(table))

    floor = _superadditive_floor(table, full)
    low = max(floor, near_grand_sum / (n - 1))
    high = (near_grand_sum - _DSTAR_CAP * singles_sum) / (n - 1 - _DSTAR_CAP)
    if low > high:
        return None
    table[full] = low + (high - low) * Fraction(rng.randint(0, 8), 8)
    return TUGame._from_table(n, tuple(table))


def _sample_weakly_constant_sum(rng: random.Random, n: int) -> TUGame:
    size = 1 << n
    table: list = [Fraction(0)] * size
    by_size = _masks_by_size(n)
    for mask in by_size[1]:
        table[mask] = _rand_fraction(rng, -4, 8)
    singles_sum = sum(table[mask] for mask in by_size[1])
    if n == 2:
        # singleton and near-grand coalitions coincide: the class forces
        # an additive, inessential game
        grand = singles_sum
    else:
        grand = singles_sum + _rand_fraction(rng, 1, 8)
    full = size - 1
    table[full] = grand
    if n > 2:
        for mask in by_size[n - 1]:
            missing = (full ^ mask).bit_length() - 1
            table[mask] = grand - table[1 << missing]
    for coalition_size in range(2, n - 1):
        for mask in by_size[coalition_size]:
            table[mask] = _rand_fraction(rng, -4, 8)
    return TUGame._from_table(n, tuple(table))


def _sample_arbitrary(rng: random.Random, n: int) -> TUGame:
    size = 1 << n
    table: list = [Fraction(0)] * size
    by_size = _masks_by_size(n)
    for mask in by_size[1]:
        table[mask] = _rand_fraction(rng, -4, 8)
    for coalition_size in range(2, n):
        for mask in by_size[coalition_size]:
            table[mask] = _rand_fraction(rng, -6, 12)
    singles_sum = sum(table[mask] for mask in by_size[1])
    table[size - 1] = singles_sum + _rand_fraction(rng, 1, 10)
    return TUGame._from_table(n, tuple(table))


_SAMPLERS = {
    "superadditive": _sample_superadditive,
    "quasibalanced": _sample_quasibalanced,
    "weakly_constant_sum": _sample_weakly_constant_sum,
    "arbitrary": _sample_arbitrary,
}


def _in_class(game: TUGame, game_class: str) -> bool:
    if game_class == "superadditive":
        return is_superadditive(game)
    if game_class == "quasibalanced":
        return is_quasibalanced(game) and is_essential(game)
    if game_class == "weakly_constant_sum":
        return is_weakly_constant_sum(game)
    return True


def generate_game(seed: int, n: int, game_class: str = "arbitrary") -> TUGame:
    """Deterministic random TU game of the requested class.

    Identical (seed, n, game_class) triples give identical games on any
    platform. Singleton worths and the grand worth are drawn first so that
    the game is essential whenever the class allows it (two-player weakly
    constant-sum games cannot be), then the remaining coalitions are filled
    and the candidate is re-checked against the class predicate, retrying
    on rejection.
    """
    if game_class not in GAME_CLASSES:
        raise GameError(f"unknown game class {game_class!r}; pick from {GAME_CLASSES}")
    if n < 2 or n > 4:
        raise GameError(f"generator supports 2..4 players, got {n}")
    rng = random.Random(f"tugame:{game_class}:{n}:{seed}")
    sampler = _SAMPLERS[game_class]
    for _ in range(_RETRY_CAP):
        game = sampler(rng, n)
        if game is not None and _in_class(game, game_class):
            return game
    raise GenerationFailedError(
        f"no {game_class} game with n={n} found for seed {seed} "
        f"within {_RETRY_CAP} attempts"
    )


def generate_cost_game(seed: int, n: int) -> CostGame:
    """Deterministic random cost game with a superadditive savings game.

    Built by inverting the savings map: draw a superadditive essential
    game, 0-normalize it, pick positive stand-alone costs, and set
    c(S) = sum of c_i over S minus the normalized savings. The resulting
    cost game is subadditive by construction.
    """
    if n < 2 or n > 4:
        raise GameError(f"generator supports 2..4 players, got {n}")
    rng = random.Random(f"tugame:cost:{n}:{seed}")
    savings = zero_normalize(_sample_superadditive(rng, n))
    singles = tuple(_rand_fraction(rng, 6, 18) for _ in range(n))
    size = 1 << n
    stand_alone = [Fraction(0)] * size
    for mask in range(1, size):
        low = mask & -mask
        stand_alone[mask] = stand_alone[mask ^ low] + singles[low.bit_length() - 1]
    table = tuple(stand_alone[mask] - savings.table[mask] for mask in range(size))
    return CostGame._from_table(n, table)
