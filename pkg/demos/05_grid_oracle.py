"""
Trust, but verify: the brute-force grid oracle
==============================================

The closed forms in this package are one-liners, which makes them easy to
get subtly wrong. The oracle subpackage re-derives everything the slow
way: a grid search over the imputation simplex for the min-max propensity
to disrupt, a from-scratch recomputation of every definition, and seeded
generators to feed both.
"""

import time
from fractions import Fraction

from tugame import (
    equal_propensity,
    gately_point,
    generate_game,
    grid_minmax_propensity,
    recompute_by_definition,
    utopia_payoffs,
)

game = generate_game(seed=11, n=3, game_class="quasibalanced")
print("a seeded quasibalanced game:", game)

# Closed form: the equalized propensity and the point achieving it.
d_star = equal_propensity(game)
point = gately_point(game).point
print("closed-form d*:", d_star, "~", float(d_star))
print("closed-form point:", point)

# Brute force: subdivide the simplex above the stand-alone worths into 200
# barycentric steps, evaluate max_i d(i, x) at every interior grid point
# exactly, and keep the minimizer. No floats anywhere; ties break toward
# the lexicographically smallest point.
started = time.perf_counter()
report = grid_minmax_propensity(game, resolution=200)
elapsed = time.perf_counter() - started
print(f"grid search over resolution 200 took {elapsed:.3f}s")
print("grid min-max:", report.best_minmax, "~", float(report.best_minmax))
print("grid argmin:", report.best_point)

gap = report.best_minmax - d_star
print("gap to closed form:", gap, "~", float(gap), "(grid-step units, one-sided)")

# The other oracle: recompute utopia payoffs, minimal rights, and all six
# classification flags from the definitions with frozensets and dicts, and
# compare against the bitmask implementations.
recomputed = recompute_by_definition(game)
print()
print("recomputed utopia == primary:", recomputed.utopia == utopia_payoffs(game))
print("recomputed flags:", recomputed.classification)

# Determinism: the same seed always gives the same game, so every number
# printed above is reproducible.
again = generate_game(seed=11, n=3, game_class="quasibalanced")
print("same seed, same game:", again == game)
