"""Play the pivot game on triangle chains and watch perfect play unfold.

Run:  python demos/graph_game_walkthrough.py
"""

from cdsgame import (
    ONE,
    GcdsState,
    Position,
    SolveCache,
    apply_gcds2,
    gcds_terminal_winner,
    gen_chain,
    gen_favorable,
    np_status,
    solve_gcds,
)


def banner(text):
    print()
    print(text)
    print("-" * len(text))


def show(graph):
    print(f"  vertices {graph.vertex_list()}  edges {graph.edge_list()}")


banner("The chain of two triangles and its favorable vertices")
chain = gen_chain(2)
favorable = gen_favorable(2)
show(chain)
print(f"  favorable vertices: {sorted(favorable)}")

banner("Perfect play, player ONE moving first")
cache = SolveCache()
report = solve_gcds(GcdsState(Position(chain, favorable), ONE), cache=cache)
print(f"winner with best play: {report.winner}")
print(f"principal variation  : {list(report.principal_variation)}")
graph, live = chain, favorable
for ply, move in enumerate(report.principal_variation):
    mover = "ONE" if ply % 2 == 0 else "TWO"
    graph = apply_gcds2(graph, move)
    live = live & graph.vertices
    print(f"{mover} pivots at {move}")
    show(graph)
    print(f"  favorable still alive: {sorted(live) or 'none'}")
print(f"terminal verdict: {gcds_terminal_winner(Position(graph, live))}")
print("Each pivot deletes its own edge's endpoints and any vertex it")
print("disconnects, except that a lone survivor is left standing; ONE wins")
print("a finished game exactly when a favorable vertex survived.")

banner("Outcome classes of the first few chains")
print("A chain is N if the player to move wins it, P if the opponent does.")
for m in range(1, 5):
    rep = np_status(Position(gen_chain(m), gen_favorable(m)), cache=cache)
    print(
        f"  m={m}: ONE-first -> {rep.winner_one_first}, "
        f"TWO-first -> {rep.winner_two_first}  =>  {rep.status}"
    )
print("The classes alternate N, P, N, P with the parity of the chain length.")
