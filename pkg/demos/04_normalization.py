"""
Strategic equivalence and normal forms
======================================

Rescaling worths and shifting each player's payoffs does not change the
strategic content of a game. The 0-normalization and 0-1-normalization are
the two canonical representatives, and the solution concepts here move
covariantly: compute anywhere, translate back.
"""

from fractions import Fraction

from tugame import (
    TUGame,
    equal_propensity,
    gately_point,
    scale_shift,
    zero_normalize,
    zero_one_normalize,
)

game = TUGame(
    3,
    {(1,): 3, (2,): 4, (3,): 5, (1, 2): 9, (1, 3): 10, (2, 3): 11, (1, 2, 3): 14},
)

# Subtracting each member's stand-alone worth from every coalition zeroes
# the singletons and lays the synergies bare: every pair (and the grand
# coalition) adds exactly 2 here.
w = zero_normalize(game)
print("0-normalized singletons:", w.singleton_values())
print("0-normalized pairs:", w.value((1, 2)), w.value((1, 3)), w.value((2, 3)))
print("0-normalized grand worth:", w.grand_value)

# Rescaling by the surplus makes the grand worth 1.
u = zero_one_normalize(game)
print("0-1-normalized pairs and grand:", u.value((1, 2)), u.grand_value)

# The equal propensity to disrupt is invariant across all three forms;
# here all of them sit at the degenerate -1.
print(
    "d* in all three forms:",
    equal_propensity(game),
    equal_propensity(w),
    equal_propensity(u),
)
print("Gately status:", gately_point(game).status.value)
print()

# Covariance under a general positive rescaling plus shifts: the Gately
# point of the transformed game is the transformed Gately point.
base = TUGame(
    3,
    {
        (1,): 3,
        (2,): 4,
        (3,): 5,
        (1, 2): 9,
        (1, 3): 10,
        (2, 3): 11,
        (1, 2, 3): Fraction(29, 2),
    },
)
alpha = Fraction(3, 2)
shift = (1, -2, Fraction(1, 2))
moved = scale_shift(base, alpha, shift)

x = gately_point(base).point
y = gately_point(moved).point
print("original point: ", x)
print("moved point:    ", y)
print("alpha * x + a:  ", tuple(alpha * xi + a for xi, a in zip(x, shift)))
