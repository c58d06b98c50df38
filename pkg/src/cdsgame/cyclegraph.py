"""Cycle graphs, alternating-cycle decompositions, and the strategic pile.

The cycle graph of a permutation [a_1, ..., a_n] has vertices 0..n+1 and two
edge families:

* *dotted* edges i -> i+1 for 0 <= i <= n (the sorted order), and
* *black* edges a_i -> a_{i-1} for 2 <= i <= n, plus n+1 -> a_n and a_1 -> 0
  (the permutation order, reversed, framed by the two sentinels).

Every vertex has exactly one outgoing edge of each colour, so the edge set
decomposes uniquely into cycles that alternate dotted/black.  The *strategic
pile* of the permutation collects the dotted edges encountered strictly
between n -> n+1 and 0 -> 1 on their shared alternating cycle, recorded as
pointer codes in walk order; it is empty when those two dotted edges lie on
different cycles.  The pile is empty exactly when the permutation is
cds-sortable, and the pile codes are exactly the fixed-point codes reachable
by playing cds to the end (both facts are checked against brute force in the
test-suite).
"""

from __future__ import annotations

from dataclasses import dataclass

from .permutations import (
    Permutation,
    apply_cds,
    fixed_point_code,
    identity,
    is_fixed_point,
    legal_moves,
)

__all__ = [
    "SizeBoundError",
    "CycleGraph",
    "AltCycleDecomposition",
    "StrategicPile",
    "build_cycle_graph",
    "alternating_cycles",
    "strategic_pile",
    "is_sortable",
    "sortable_bruteforce",
    "achievable_fixed_points",
]


class SizeBoundError(Exception):
    """Raised when an exhaustive computation is asked to exceed its size bound."""


@dataclass(frozen=True)
class CycleGraph:
    """Cycle graph on vertices 0..n+1 with black successors stored per vertex."""

    n: int
    black_successor: dict[int, int]

    @property
    def dotted_edges(self) -> list[tuple[int, int]]:
        return [(i, i + 1) for i in range(self.n + 1)]

    @property
    def black_edges(self) -> list[tuple[int, int]]:
        return sorted(self.black_successor.items())


# An edge inside an alternating cycle is ("dotted"|"black", tail, head).
Edge = tuple[str, int, int]


@dataclass(frozen=True)
class AltCycleDecomposition:
    """Partition of all dotted and black edges into alternating cycles."""

    cycles: tuple[tuple[Edge, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class StrategicPile:
    """Pile codes in walk order (may be empty)."""

    codes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self):
        return iter(self.codes)

    def __contains__(self, code: int) -> bool:
        return code in self.codes

    def as_set(self) -> frozenset[int]:
        return frozenset(self.codes)


def build_cycle_graph(perm: Permutation) -> CycleGraph:
    e = perm.entries
    n = len(e)
    succ = {e[i]: e[i - 1] for i in range(1, n)}
    succ[n + 1] = e[-1]
    succ[e[0]] = 0
    assert set(succ) == set(range(1, n + 2))
    return CycleGraph(n=n, black_successor=succ)


def alternating_cycles(cg: CycleGraph) -> AltCycleDecomposition:
    """Trace every alternating cycle, starting each from its least dotted edge.

    From the dotted edge i -> i+1 the unique continuation is the black edge
    out of i+1, landing on some t in 0..n, followed by the dotted edge
    t -> t+1, and so on until the walk closes.
    """
    black = cg.black_successor
    cycles = []
    seen = set()
    for start in range(cg.n + 1):
        if start in seen:
            continue
        cycle: list[Edge] = []
        j = start
        while True:
            seen.add(j)
            cycle.append(("dotted", j, j + 1))
            t = black[j + 1]
            cycle.append(("black", j + 1, t))
            j = t
            if j == start:
                break
        cycles.append(tuple(cycle))
    return AltCycleDecomposition(tuple(cycles))


def strategic_pile(perm: Permutation) -> StrategicPile:
    """Walk the alternating cycle from n -> n+1; collect codes until 0 -> 1.

    Codes are the dotted edges met strictly between the two distinguished
    edges.  If the walk returns to n -> n+1 first, the distinguished edges
    lie on different cycles and the pile is empty.
    """
    black = build_cycle_graph(perm).black_successor
    n = perm.n
    codes: list[int] = []
    j = n
    while True:
        j = black[j + 1]
        if j == n:
            return StrategicPile(())
        if j == 0:
            return StrategicPile(tuple(codes))
        codes.append(j)


def is_sortable(perm: Permutation) -> bool:
    """True iff the strategic pile is empty."""
    return len(strategic_pile(perm)) == 0


def sortable_bruteforce(perm: Permutation, max_n: int = 7) -> bool:
    """Exhaustive check: can some sequence of cds moves reach the identity?

    Independent of the pile characterisation; used as its oracle.
    """
    if perm.n > max_n:
        raise SizeBoundError(f"brute force limited to n <= {max_n}, got n = {perm.n}")
    target = identity(perm.n)
    memo: dict[Permutation, bool] = {}

    def reachable(state: Permutation) -> bool:
        if state == target:
            return True
        known = memo.get(state)
        if known is not None:
            return known
        memo[state] = False  # cds strictly shrinks options; no cycles, but be safe
        result = any(
            reachable(apply_cds(state, p, q)) for p, q in sorted(legal_moves(state))
        )
        memo[state] = result
        return result

    return reachable(perm)


def achievable_fixed_points(
    perm: Permutation, max_n: int = 7
) -> frozenset[int | None]:
    """All fixed-point codes reachable by playing cds to the end.

    The identity is reported as ``None``; the rotation [k+1..n, 1..k] as k.
    Exhaustive search with memoisation, refused above ``max_n``.
    """
    if perm.n > max_n:
        raise SizeBoundError(f"brute force limited to n <= {max_n}, got n = {perm.n}")
    memo: dict[Permutation, frozenset[int | None]] = {}

    def walk(state: Permutation) -> frozenset[int | None]:
        known = memo.get(state)
        if known is not None:
            return known
        if is_fixed_point(state):
            result: frozenset[int | None] = frozenset({fixed_point_code(state)})
        else:
            acc: set[int | None] = set()
            for p, q in sorted(legal_moves(state)):
                acc |= walk(apply_cds(state, p, q))
            result = frozenset(acc)
        memo[state] = result
        return result

    return walk(perm)
