"""Walk through context-directed swaps, cycle graphs, and strategic piles.

Run:  python demos/sorting_walkthrough.py
"""

from cdsgame import (
    Permutation,
    alternating_cycles,
    apply_cds,
    build_cycle_graph,
    is_sortable,
    legal_moves,
    strategic_pile,
)


def banner(text):
    print()
    print(text)
    print("-" * len(text))


banner("A context-directed swap on an 8-element permutation")
beta = Permutation([3, 6, 5, 2, 4, 8, 1, 7])
print(f"start           : {list(beta)}")
print(f"legal swaps     : {sorted(legal_moves(beta))}")
after = apply_cds(beta, 3, 6)
print(f"swap on (3, 6)  : {list(after)}")
print("afterwards 3 is followed by 4 and 6 by 7 - each swap welds two such")
print("adjacencies into place, which is what 'context-directed' buys us.")

banner("The cycle graph and its strategic pile")
cg = build_cycle_graph(beta)
print(f"black edges     : {cg.black_edges}")
print(f"alternating cycles: {len(alternating_cycles(cg))}")
pile = strategic_pile(beta)
print(f"strategic pile  : {list(pile)}")
print(f"sortable?       : {is_sortable(beta)}")
print("A non-empty pile is a certificate of unsortability; this one is as")
print("large as an 8-element pile can be, with all seven codes present.")

banner("Sorting a pile-free permutation, taking the least swap each time")
state = Permutation([1, 3, 2, 5, 4, 7, 6])
print(f"strategic pile  : {list(strategic_pile(state)) or 'empty'}")
while True:
    moves = sorted(legal_moves(state))
    if not moves:
        break
    print(f"{list(state)}  apply {moves[0]}")
    state = apply_cds(state, *moves[0])
print(f"{list(state)}  sorted")

banner("Where an unsortable permutation gets stuck")
state = beta
while True:
    moves = sorted(legal_moves(state))
    if not moves:
        break
    state = apply_cds(state, *moves[0])
print(f"fixed point     : {list(state)}")
print(f"its pile        : {list(strategic_pile(beta))} (unchanged by swapping)")
print("Swapping always terminates; with a non-empty pile it terminates at a")
print("scrambled fixed point whose 'signature' is one of the pile codes.")

banner("A permutation with no moves at all")
stuck = Permutation([3, 4, 1, 2])
print(f"word            : {list(stuck)}")
print(f"legal swaps     : {sorted(legal_moves(stuck)) or 'none'}")
print(f"strategic pile  : {list(strategic_pile(stuck))}")
print("No two pointers interlock here, so the game is over before it starts.")
