from fractions import Fraction

from tugame import (
    GatelyStatus,
    TauStatus,
    equal_propensity,
    gately_point,
    generate_game,
    is_essential,
    is_quasibalanced,
    minimal_rights,
    tau_value,
    utopia_payoffs,
)


def test_tau_not_quasibalanced(ex2):
    result = tau_value(ex2)
    assert result.status is TauStatus.NOT_QUASIBALANCED
    assert result.point is None
    assert result.alpha is None


def test_tau_symmetric(symmetric_unit):
    result = tau_value(symmetric_unit)
    assert result.status is TauStatus.UNIQUE
    assert result.point == (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    assert result.alpha == Fraction(2, 3)


def test_tau_degenerate_endpoints(degenerate_pairs):
    assert minimal_rights(degenerate_pairs) == (1, 1, 1)
    assert utopia_payoffs(degenerate_pairs) == (1, 1, 1)
    result = tau_value(degenerate_pairs)
    assert result.status is TauStatus.DEGENERATE_ENDPOINTS
    assert result.point == (1, 1, 1)
    assert result.alpha is None
    assert equal_propensity(degenerate_pairs) == 0


def test_degenerate_tau_equals_gately(degenerate_pairs):
    gately = gately_point(degenerate_pairs)
    tau = tau_value(degenerate_pairs)
    assert gately.status is GatelyStatus.UNIQUE_IMPUTATION
    assert gately.point == tau.point == utopia_payoffs(degenerate_pairs)


def test_tau_on_generated_quasibalanced_games():
    for n in (2, 3, 4):
        for seed in range(100):
            game = generate_game(seed, n, "quasibalanced")
            assert is_quasibalanced(game)
            lower = minimal_rights(game)
            upper = utopia_payoffs(game)
            assert all(m <= big for m, big in zip(lower, upper))
            assert all(m >= v for m, v in zip(lower, game.singleton_values()))

            result = tau_value(game)
            assert result.status in (TauStatus.UNIQUE, TauStatus.DEGENERATE_ENDPOINTS)
            assert sum(result.point) == game.grand_value
            for tau_i, m, big in zip(result.point, lower, upper):
                assert min(m, big) <= tau_i <= max(m, big)
            if result.status is TauStatus.UNIQUE:
                assert 0 <= result.alpha <= 1
                assert result.point == tuple(
                    result.alpha * m + (1 - result.alpha) * big
                    for m, big in zip(lower, upper)
                )
            else:
                assert lower == upper
                if is_essential(game):
                    assert equal_propensity(game) == 0
