"""
The Gately point and the propensity to disrupt
==============================================

A walk through the central solution concept: how much each player is
tempted to break up the grand coalition, and the payoff vector that makes
that temptation equal for everyone.
"""

from fractions import Fraction

from tugame import (
    TUGame,
    equal_propensity,
    gately_point,
    propensity_to_disrupt,
    utopia_payoffs,
)

# Three players can earn 14.5 together. Alone they earn 3, 4 and 5; in
# pairs 9, 10 and 11. Everything is exact: 14.5 enters as the fraction
# 29/2, never as a binary float.
game = TUGame(
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

# The utopia payoff M_i is what player i contributes by joining the other
# two: it caps any credible demand.
print("utopia payoffs:", utopia_payoffs(game))

# Pick some efficient payoff that pays everyone above the stand-alone
# worth, and ask: who is most tempted to walk out? The propensity to
# disrupt divides what the others would lose by what the leaver would lose.
x = (4, 5, Fraction(11, 2))
for player in (1, 2, 3):
    d = propensity_to_disrupt(game, x, player)
    print(f"at {x}, player {player} has propensity to disrupt {d}")

# Player 1 is the squeaky wheel. Equalizing the propensities across all
# players removes any such asymmetry, and the common value has a closed
# form from the worths of sizes 1, n-1 and n alone.
print("equal propensity d* =", equal_propensity(game))

# The payoff achieving it is the Gately point: the intersection of the
# efficient plane with the half-line from the stand-alone worths toward
# the utopia payoffs.
result = gately_point(game)
print("status:", result.status.value)
print("Gately point:", result.point)
print("half-line parameter t:", result.line_parameter)

for player in (1, 2, 3):
    d = propensity_to_disrupt(game, result.point, player)
    print(f"player {player} propensity at the Gately point: {d}")

# Now shrink the grand worth from 29/2 to 14. Every pair plus the leftover
# singleton then adds up to exactly 14, so M_i = v_i for all i: the
# half-line collapses to a point and *every* imputation equalizes the
# propensities at -1. The solver reports the degeneracy instead of
# inventing an answer.
knife_edge = TUGame(
    3,
    {(1,): 3, (2,): 4, (3,): 5, (1, 2): 9, (1, 3): 10, (2, 3): 11, (1, 2, 3): 14},
)
degenerate = gately_point(knife_edge)
print()
print("grand worth 14 instead:", degenerate.status.value, "d* =", degenerate.d_star)
