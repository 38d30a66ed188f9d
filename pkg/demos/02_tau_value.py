"""
Minimal rights and the tau-value
================================

A second line-based solution concept: instead of the stand-alone worths,
its lower anchor is the vector of minimal rights, what each player can
guarantee by conceding everyone else their utopia payoff.
"""

from tugame import (
    TUGame,
    gately_point,
    is_quasibalanced,
    minimal_rights,
    remainder,
    tau_value,
    utopia_payoffs,
)

# Singletons worth nothing, pairs worth 2, the grand coalition worth 3.
values = {(1,): 0, (2,): 0, (3,): 0}
values.update({(1, 2): 2, (1, 3): 2, (2, 3): 2, (1, 2, 3): 3})
game = TUGame(3, values)

# The remainder R(S, i): if coalition S forms and everyone else in S takes
# the utopia payoff, what is left on the table for i?
print("remainders for player 1:")
for coalition in [(1,), (1, 2), (1, 3), (1, 2, 3)]:
    print(f"  R({coalition}, 1) = {remainder(game, coalition, 1)}")

# The minimal right m_i is the best of those remainders; no player should
# settle for less in the grand coalition.
m = minimal_rights(game)
M = utopia_payoffs(game)
print("minimal rights m:", m)
print("utopia payoffs M:", M)

# Quasibalancedness (m <= M componentwise, v(N) between the sums) is
# exactly what the tau-value needs.
print("quasibalanced:", is_quasibalanced(game))

# Here the two anchors coincide, so the segment from m to M is a single
# point and the answer is forced.
result = tau_value(game)
print("tau status:", result.status.value)
print("tau value:", result.point)

# The Gately point agrees in this degenerate case (both equal M, and the
# equal propensity to disrupt is 0).
print("Gately point:", gately_point(game).point)
print()

# A spread-out case: singletons 0, pairs 0, grand worth 1. The anchors
# separate and the efficient point on the segment has a proper mixing
# weight alpha.
spread = TUGame(
    3, {(1,): 0, (2,): 0, (3,): 0, (1, 2): 0, (1, 3): 0, (2, 3): 0, (1, 2, 3): 1}
)
result = tau_value(spread)
print("spread-out game: tau =", result.point, "alpha =", result.alpha)

# And a failing case: raise the grand worth to 14.5 over strong pairs and
# the minimal rights overshoot the utopia payoffs; there is no tau-value,
# which the status reports as an answer rather than an error.
from fractions import Fraction

lopsided = TUGame(
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
print("lopsided game: m =", minimal_rights(lopsided), "M =", utopia_payoffs(lopsided))
print("tau status:", tau_value(lopsided).status.value)
print("yet its Gately point exists:", gately_point(lopsided).point)
