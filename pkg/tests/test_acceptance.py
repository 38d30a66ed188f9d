"""Acceptance suite: one test per release criterion.

Each test pins the exact expected values (no tolerances anywhere except
the grid oracle's stated grid-step bounds) and the stated runtime budget.
A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import json
import random
import time
from fractions import Fraction

from tugame import (
    AcaStatus,
    GatelyStatus,
    TauStatus,
    TUGame,
    aca_allocation,
    classify,
    equal_propensity,
    gately_point,
    generate_cost_game,
    generate_game,
    grid_minmax_propensity,
    minimal_rights,
    propensity_to_disrupt,
    savings_game,
    scale_shift,
    tau_value,
    utopia_payoffs,
    zero_normalize,
    zero_one_normalize,
)
from tugame.oracle import GAME_CLASSES

from conftest import run_cli


def _structured(*argv):
    code, out, err = run_cli(*argv, "--format", "structured")
    assert code == 0, err
    return json.loads(out)


def _vector(report, name):
    return tuple(Fraction(entry["exact"]) for entry in report["vectors"][name])


def test_criterion_01_degenerate_fixture_props_dstar_gately(data_dir):
    started = time.perf_counter()
    path = str(data_dir / "ex1.game")

    props = _structured("props", path)
    assert props["flags"]["essential"] is True
    assert props["flags"]["superadditive"] is True
    assert props["flags"]["weakly_constant_sum"] is True

    dstar = _structured("dstar", path)
    assert Fraction(dstar["scalars"]["d_star"]["exact"]) == -1

    gately = _structured("gately", path)
    assert gately["status"] == "UndefinedEqualPropensityMinusOne"

    assert time.perf_counter() - started < 1.0


def test_criterion_02_unique_point_fixture_gately_and_tau(data_dir):
    started = time.perf_counter()
    path = str(data_dir / "ex2.game")

    gately = _structured("gately", path)
    assert gately["status"] == "UniqueImputation"
    assert _vector(gately, "point") == (
        Fraction(23, 6),
        Fraction(29, 6),
        Fraction(35, 6),
    )

    tau = _structured("tau", path)
    assert tau["status"] == "NotQuasibalanced"

    assert time.perf_counter() - started < 1.0


def test_criterion_03_cost_fixture_savings_and_aca(data_dir):
    started = time.perf_counter()
    path = str(data_dir / "ex3.game")

    savings = _structured("savings", path)
    emitted = savings["game"]
    assert emitted["kind"] == "tu"
    values = emitted["values"]
    assert [values[k] for k in ("1", "2", "3")] == [0, 0, 0]
    assert [values[k] for k in ("1,2", "1,3", "2,3")] == [1, 1, 1]
    assert values["1,2,3"] == 1

    aca = _structured("aca", path)
    assert aca["status"] == "UndefinedZeroDenominator"
    assert Fraction(aca["scalars"]["nsc"]["exact"]) == -1

    assert time.perf_counter() - started < 1.0


def test_criterion_04_normalization_goldens(ex1):
    expected_zero = TUGame(
        3,
        {(1,): 0, (2,): 0, (3,): 0, (1, 2): 2, (1, 3): 2, (2, 3): 2, (1, 2, 3): 2},
    )
    expected_unit = TUGame(
        3,
        {(1,): 0, (2,): 0, (3,): 0, (1, 2): 1, (1, 3): 1, (2, 3): 1, (1, 2, 3): 1},
    )
    assert zero_normalize(ex1) == expected_zero
    assert zero_one_normalize(ex1) == expected_unit


def _seeded_population():
    games = []
    for n in (2, 3, 4):
        for seed in range(500):
            games.append(generate_game(seed, n, GAME_CLASSES[seed % 4]))
    return games


def test_criterion_05_property_suite_500_games_per_size():
    started = time.perf_counter()
    checked_super = checked_wsa = checked_quasi = 0
    for game in _seeded_population():
        flags = classify(game)

        if flags.superadditive:
            checked_super += 1
            assert flags.weakly_superadditive

        if flags.weakly_superadditive:
            checked_wsa += 1
            assert all(
                v <= m
                for v, m in zip(game.singleton_values(), utopia_payoffs(game))
            )

        # complement-sum and at-utopia readings of weakly constant-sum agree
        full = game.grand_mask
        by_complement = all(
            game.table[1 << i] + game.table[full ^ (1 << i)] == game.grand_value
            for i in range(game.n)
        )
        by_utopia = all(
            v == m for v, m in zip(game.singleton_values(), utopia_payoffs(game))
        )
        assert by_complement == by_utopia == flags.weakly_constant_sum

        # uniqueness guarantee on the quasibalanced population; inessential
        # quasibalanced games (additive-like) are answered by the boundary
        # convention instead, so the guarantee reads over essential games
        if flags.quasibalanced and flags.essential:
            checked_quasi += 1
            result = gately_point(game)
            assert result.status is GatelyStatus.UNIQUE_IMPUTATION
            assert result.d_star >= 0

    assert checked_super > 500
    assert checked_wsa > 500
    assert checked_quasi > 500
    assert time.perf_counter() - started < 30.0


def test_criterion_06_gately_identities_exact():
    rng = random.Random("acceptance-6")
    checked = 0
    for game in _seeded_population():
        result = gately_point(game)
        if result.status is not GatelyStatus.UNIQUE_IMPUTATION:
            continue
        checked += 1
        point = result.point
        singles = game.singleton_values()
        upper = utopia_payoffs(game)

        assert sum(point) == game.grand_value

        d_star = equal_propensity(game)
        for player in range(1, game.n + 1):
            if upper[player - 1] != singles[player - 1]:
                assert propensity_to_disrupt(game, point, player) == d_star

        t = result.line_parameter
        assert point == tuple(v + t * (m - v) for v, m in zip(singles, upper))

        normalized = zero_normalize(game)
        assert gately_point(normalized).point == tuple(
            x - v for x, v in zip(point, singles)
        )

        alpha = Fraction(rng.randint(1, 10), rng.randint(1, 5))
        shift = tuple(
            Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(game.n)
        )
        moved = scale_shift(game, alpha, shift)
        assert gately_point(moved).point == tuple(
            alpha * x + a for x, a in zip(point, shift)
        )
    assert checked > 900


def test_criterion_07_aca_gately_duality_200_cost_games():
    matched = 0
    seed = 0
    while matched < 200:
        assert seed < 1000, "not enough cost games with a unique savings point"
        cost = generate_cost_game(seed, 3)
        seed += 1
        savings = savings_game(cost)
        result = gately_point(savings)
        if result.status is not GatelyStatus.UNIQUE_IMPUTATION:
            continue
        matched += 1
        aca = aca_allocation(cost)
        assert aca.status in (AcaStatus.ALLOCATED, AcaStatus.ALLOCATED_NEGATIVE_NSC)
        assert result.point == tuple(
            c - y for c, y in zip(cost.singleton_values(), aca.allocation)
        )
    assert matched == 200


def test_criterion_08_oracle_agreement_50_games():
    started = time.perf_counter()
    resolution = 200
    for seed in range(50):
        game = generate_game(seed, 3, "quasibalanced")
        report = grid_minmax_propensity(game, resolution)

        d_star = equal_propensity(game)
        assert abs(report.best_minmax - d_star) <= Fraction(4, resolution)

        point = gately_point(game).point
        step = (game.grand_value - sum(game.singleton_values())) / resolution
        for grid_x, exact_x in zip(report.best_point, point):
            assert abs(grid_x - exact_x) <= 2 * step
    assert time.perf_counter() - started < 60.0


def test_criterion_09_tau_degenerate_case(degenerate_pairs):
    assert minimal_rights(degenerate_pairs) == (1, 1, 1)
    assert utopia_payoffs(degenerate_pairs) == (1, 1, 1)
    result = tau_value(degenerate_pairs)
    assert result.status is TauStatus.DEGENERATE_ENDPOINTS
    assert result.point == (1, 1, 1)
    assert equal_propensity(degenerate_pairs) == 0


def test_criterion_10_inessential_convention(data_dir, additive3):
    report = _structured("gately", str(data_dir / "additive.game"))
    assert report["status"] == "InessentialBoundary"
    assert _vector(report, "point") == (1, 2, 3)

    result = gately_point(additive3)
    assert result.status is GatelyStatus.INESSENTIAL_BOUNDARY
    assert result.point == additive3.singleton_values()
