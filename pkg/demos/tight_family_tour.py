"""Tour the full-pile family that sits exactly on the winning bound.

Run:  python demos/tight_family_tour.py
"""

from cdsgame import (
    ONE,
    CdsState,
    SolveCache,
    bound_prediction,
    overlap_graph,
    solve_cds,
    strategic_pile,
    tight_instance,
)


def banner(text):
    print()
    print(text)
    print("-" * len(text))


n = 8
alpha, favorable = tight_instance(n)
pile = strategic_pile(alpha)

banner(f"The designated {n}-element permutation and its pile")
print(f"word           : {list(alpha)}")
print(f"strategic pile : {list(pile)}  (all {n - 1} codes - a full pile)")
print(f"overlap graph  : {overlap_graph(alpha).edge_list()}")
print(f"favorable codes: {sorted(favorable)}")

banner("What the closed-form rules can and cannot decide")
P = len(pile)
print(f"pile size P={P}, so the rules read sizes a = 0..{P}:")
for a in range(P + 1):
    pred = bound_prediction(P, a)
    fired = " + ".join(pred.rules) if pred.rules else "no rule fires"
    marker = "  <- our favorable size" if a == len(favorable) else ""
    print(f"  a={a}: {pred.verdict:<12} ({fired}){marker}")
print("The favorable size lands in the undetermined gap: the rules are")
print("silent there, and this family shows they cannot be sharpened.")

banner("Solving the game settles the gap - and is fragile")
cache = SolveCache()
report = solve_cds(CdsState(alpha, favorable, ONE), cache=cache, max_n=n)
print(f"with favorable {sorted(favorable)}: {report.winner} wins")
print(f"principal variation: {list(report.principal_variation)}")
for code in sorted(favorable):
    smaller = favorable - {code}
    rep = solve_cds(CdsState(alpha, smaller, ONE), cache=cache, max_n=n)
    print(f"drop code {code} -> favorable {sorted(smaller)}: {rep.winner} wins")
print("Removing any single favorable code hands the game to TWO, so the")
print("set is tight: exactly big enough to win with, never a code to spare.")
