"""
Sharing joint costs: separable costs, ACA, and the savings game
===============================================================

Three agents build shared infrastructure. Who pays what? The ACA method
charges each agent its separable cost plus a proportional slice of what is
left, and its savings side is the Gately point in disguise.
"""

from tugame import (
    CostGame,
    aca_allocation,
    gately_point,
    nonseparable_cost,
    savings_game,
    separable_costs,
)

# Joint costs: cheaper together than apart (subadditive).
cost = CostGame(
    3,
    {
        (1,): 10,
        (2,): 10,
        (3,): 10,
        (1, 2): 16,
        (1, 3): 16,
        (2, 3): 16,
        (1, 2, 3): 21,
    },
)

# The separable cost of an agent is what its presence adds to the bill.
sc = separable_costs(cost)
print("separable costs:", sc)

# Charging only separable costs recovers 15 of the 21; the rest is the
# nonseparable cost, to be spread in proportion to c_i - SC_i.
print("nonseparable cost:", nonseparable_cost(cost))

result = aca_allocation(cost)
print("ACA status:", result.status.value)
print("ACA allocation:", result.allocation)
print("total charged:", sum(result.allocation))

# The savings game records what each coalition saves over going alone.
savings = savings_game(cost)
print("savings by coalition: pairs", savings.value((1, 2)), "grand", savings.grand_value)

# Each agent's saving under ACA, c_i - y_i, is exactly the Gately point of
# that savings game.
gately = gately_point(savings)
print("Gately point of the savings game:", gately.point)
print(
    "ACA savings:",
    tuple(c - y for c, y in zip(cost.singleton_values(), result.allocation)),
)
print()

# The degenerate sibling: if every coalition of size n-1 saves exactly as
# much as the grand coalition, the proportionality weights all vanish and
# ACA has no answer, just as the savings game has no unique Gately point.
stuck = CostGame(
    3,
    {
        (1,): 7,
        (2,): 8,
        (3,): 9,
        (1, 2): 14,
        (1, 3): 15,
        (2, 3): 16,
        (1, 2, 3): 23,
    },
)
result = aca_allocation(stuck)
print("degenerate cost game: ACA status", result.status.value)
print("its NSC:", result.nsc, "(negative: walking out looks attractive)")
print("its savings game Gately status:", gately_point(savings_game(stuck)).status.value)
