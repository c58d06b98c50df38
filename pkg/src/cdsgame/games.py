"""Exact solvers for the cds permutation game and the gcds graph game.

Both games alternate moves between players ONE and TWO until no move remains.

* CDS(alpha, A): a move applies cds at an interlocking pointer pair; play
  stops at a fixed point.  ONE wins when the fixed point is a rotation whose
  code lies in the favorable set A; the identity (and any code outside A)
  wins for TWO.
* GCDS(G, A): a move picks an edge and applies the gcds2 pivot; play stops
  when the graph is edgeless.  ONE wins when the surviving vertex set is
  nonempty and contained in A.

Solving is plain win/loss search over the exact labelled state with
memoisation; no symmetry reduction is applied, so cache keys are reproducible
strings and can be persisted to disk and reloaded across runs.  The principal
variation always plays the least winning move for the side to move (least
move at all in lost positions), and every solve replays its variation and
asserts the terminal agrees with the reported winner.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclegraph import SizeBoundError
from .graphs import Graph, Position, apply_gcds2, label_key
from .permutations import (
    Permutation,
    apply_cds,
    fixed_point_code,
    is_fixed_point,
    legal_moves,
)

__all__ = [
    "ONE",
    "TWO",
    "opponent",
    "GcdsState",
    "CdsState",
    "SolveReport",
    "NpReport",
    "SolveCache",
    "CacheFormatError",
    "graph_state_key",
    "perm_state_key",
    "gcds_terminal_winner",
    "cds_terminal_winner",
    "solve_gcds",
    "solve_cds",
    "np_status",
    "cache_save",
    "cache_load",
]

ONE = "ONE"
TWO = "TWO"


def opponent(player: str) -> str:
    if player == ONE:
        return TWO
    if player == TWO:
        return ONE
    raise ValueError(f"unknown player {player!r}")


@dataclass(frozen=True)
class GcdsState:
    position: Position
    mover: str

    def __post_init__(self):
        opponent(self.mover)  # validates


@dataclass(frozen=True)
class CdsState:
    perm: Permutation
    favorable: frozenset
    mover: str

    def __post_init__(self):
        opponent(self.mover)
        bad = [c for c in self.favorable if not (isinstance(c, int) and 1 <= c <= self.perm.n - 1)]
        if bad:
            raise ValueError(f"favorable codes {sorted(map(str, bad))} out of range 1..{self.perm.n - 1}")


@dataclass(frozen=True)
class SolveReport:
    winner: str
    principal_variation: tuple
    nodes_expanded: int
    cache_hits: int


@dataclass(frozen=True)
class NpReport:
    """Outcome class of a position: N (next player wins) or P (previous does).

    Derived from two solves, one per first mover.  When the two winners do
    not form a consistent N or P pattern the status is None and ``anomaly``
    is set; callers report this rather than crash.
    """

    status: str | None
    winner_one_first: str
    winner_two_first: str

    @property
    def anomaly(self) -> bool:
        return self.status is None


# ---------------------------------------------------------------------------
# Canonical state keys and the persistent cache.

_KEY_FORBIDDEN = set("|,-\t\n ")


def _render_label(v) -> str:
    s = str(v)
    if not s or _KEY_FORBIDDEN & set(s):
        raise ValueError(f"vertex label {v!r} cannot be used in a cache key")
    return s


def graph_state_key(graph: Graph, favorable: frozenset, mover: str) -> str:
    vs = ",".join(_render_label(v) for v in graph.vertex_list())
    es = ",".join(f"{_render_label(a)}-{_render_label(b)}" for a, b in graph.edge_list())
    fs = ",".join(_render_label(v) for v in sorted(favorable, key=label_key))
    return f"G|{vs}|{es}|{fs}|{1 if mover == ONE else 2}"


def perm_state_key(perm: Permutation, favorable: frozenset, mover: str) -> str:
    word = " ".join(str(v) for v in perm.entries)
    fs = ",".join(str(c) for c in sorted(favorable))
    return f"P|{word}|{fs}|{1 if mover == ONE else 2}"


class SolveCache:
    """Maps canonical state keys to winners; shareable between solves."""

    __slots__ = ("_table",)

    def __init__(self):
        self._table: dict[str, str] = {}

    def get(self, key: str) -> str | None:
        return self._table.get(key)

    def put(self, key: str, winner: str) -> None:
        self._table[key] = winner

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, key: str) -> bool:
        return key in self._table

    def items(self):
        return self._table.items()

    def merge(self, other: "SolveCache") -> int:
        """Adopt entries from ``other``; returns how many keys were new."""
        fresh = 0
        for key, winner in other.items():
            if key not in self._table:
                fresh += 1
            elif self._table[key] != winner:
                raise CacheFormatError(
                    f"conflicting winners for key {key!r}: "
                    f"{self._table[key]} vs {winner}"
                )
            self._table[key] = winner
        return fresh


class CacheFormatError(ValueError):
    """Raised for unreadable or version-mismatched cache files."""


_CACHE_MAGIC = "GCDSCACHE"
_CACHE_VERSION = 1


def cache_save(cache: SolveCache, path) -> None:
    """Write header plus one ``key<TAB>winner`` line per entry, keys sorted."""
    lines = [f"{_CACHE_MAGIC} {_CACHE_VERSION}\n"]
    for key, winner in sorted(cache.items()):
        assert winner in (ONE, TWO)
        assert "\t" not in key and "\n" not in key
        lines.append(f"{key}\t{winner}\n")
    with open(path, "w", encoding="ascii") as fh:
        fh.writelines(lines)


def cache_load(path) -> SolveCache:
    with open(path, "r", encoding="ascii") as fh:
        raw = fh.read().splitlines()
    if not raw:
        raise CacheFormatError("empty cache file (missing header)")
    header = raw[0].split()
    if len(header) != 2 or header[0] != _CACHE_MAGIC:
        raise CacheFormatError(f"not a cache file: bad header {raw[0]!r}")
    if header[1] != str(_CACHE_VERSION):
        raise CacheFormatError(
            f"cache version mismatch: file has {header[1]!r}, expected {_CACHE_VERSION}"
        )
    cache = SolveCache()
    bad: list[int] = []
    for lineno, line in enumerate(raw[1:], start=2):
        parts = line.split("\t")
        if (
            len(parts) != 2
            or parts[1] not in (ONE, TWO)
            or not parts[0]
            or parts[0][:2] not in ("G|", "P|")
            or (parts[0] in cache and cache.get(parts[0]) != parts[1])
        ):
            bad.append(lineno)
            continue
        cache.put(parts[0], parts[1])
    if bad:
        raise CacheFormatError(
            "corrupted cache line(s): " + ", ".join(str(n) for n in bad)
        )
    return cache


# ---------------------------------------------------------------------------
# Terminal evaluation.

def gcds_terminal_winner(position: Position) -> str:
    if position.graph.edges:
        raise ValueError("position still has edges; the gcds game is not over")
    vs = position.graph.vertices
    return ONE if vs and vs <= position.favorable else TWO


def cds_terminal_winner(perm: Permutation, favorable: frozenset) -> str:
    if not is_fixed_point(perm):
        raise ValueError("permutation still has moves; the cds game is not over")
    code = fixed_point_code(perm)
    return ONE if code is not None and code in favorable else TWO


# ---------------------------------------------------------------------------
# Successor generation, shared across solves via memoisation.

@lru_cache(maxsize=1 << 18)
def _gcds_successors(graph: Graph) -> tuple:
    out = []
    for a, b in graph.edge_list():
        out.append(((a, b), apply_gcds2(graph, (a, b))))
    return tuple(out)


@lru_cache(maxsize=1 << 18)
def _cds_successors(perm: Permutation) -> tuple:
    return tuple(
        ((p, q), apply_cds(perm, p, q)) for p, q in sorted(legal_moves(perm))
    )


def _active_count(graph: Graph) -> int:
    return graph.n_vertices() - len(graph.isolated_vertices())


@dataclass
class _Stats:
    expanded: int = 0
    hits: int = 0


# ---------------------------------------------------------------------------
# The gcds game.

def _gcds_value(graph, favorable, mover, cache, stats) -> str:
    key = graph_state_key(graph, favorable, mover)
    hit = cache.get(key)
    if hit is not None:
        stats.hits += 1
        return hit
    stats.expanded += 1
    if not graph.edges:
        winner = gcds_terminal_winner(Position(graph, favorable))
    else:
        winner = opponent(mover)
        active = _active_count(graph)
        for _move, child in _gcds_successors(graph):
            assert _active_count(child) < active  # moves strictly burn vertices
            value = _gcds_value(
                child, favorable & child.vertices, opponent(mover), cache, stats
            )
            if value == mover:
                winner = mover
                break
    cache.put(key, winner)
    return winner


def _gcds_variation(graph, favorable, mover, cache, stats):
    pv = []
    while graph.edges:
        successors = _gcds_successors(graph)
        pick = None
        for move, child in successors:
            value = _gcds_value(
                child, favorable & child.vertices, opponent(mover), cache, stats
            )
            if value == mover:
                pick = (move, child)
                break
        if pick is None:
            pick = successors[0]
        pv.append(pick[0])
        graph = pick[1]
        favorable = favorable & graph.vertices
        mover = opponent(mover)
    return tuple(pv), Position(graph, favorable)


def solve_gcds(
    state: GcdsState, cache: SolveCache | None = None, max_vertices: int = 16
) -> SolveReport:
    """Winner, principal variation, and search statistics for a gcds game."""
    graph = state.position.graph
    if graph.n_vertices() > max_vertices:
        raise SizeBoundError(
            f"gcds solver limited to {max_vertices} vertices, got {graph.n_vertices()}"
        )
    if cache is None:
        cache = SolveCache()
    stats = _Stats()
    favorable = state.position.favorable
    winner = _gcds_value(graph, favorable, state.mover, cache, stats)
    pv, final = _gcds_variation(graph, favorable, state.mover, cache, stats)
    assert gcds_terminal_winner(final) == winner
    return SolveReport(
        winner=winner,
        principal_variation=pv,
        nodes_expanded=stats.expanded,
        cache_hits=stats.hits,
    )


def np_status(
    position: Position, cache: SolveCache | None = None, max_vertices: int = 16
) -> NpReport:
    """Classify a position as N or P by solving it once per first mover."""
    if cache is None:
        cache = SolveCache()
    first = solve_gcds(GcdsState(position, ONE), cache, max_vertices).winner
    second = solve_gcds(GcdsState(position, TWO), cache, max_vertices).winner
    if first == ONE and second == TWO:
        status = "N"
    elif first == TWO and second == ONE:
        status = "P"
    else:
        status = None
    return NpReport(status=status, winner_one_first=first, winner_two_first=second)


# ---------------------------------------------------------------------------
# The cds game.

def _cds_value(perm, favorable, mover, cache, stats, depth) -> str:
    assert depth <= perm.n  # game length never exceeds n
    key = perm_state_key(perm, favorable, mover)
    hit = cache.get(key)
    if hit is not None:
        stats.hits += 1
        return hit
    stats.expanded += 1
    if is_fixed_point(perm):
        winner = cds_terminal_winner(perm, favorable)
    else:
        winner = opponent(mover)
        for _move, child in _cds_successors(perm):
            value = _cds_value(child, favorable, opponent(mover), cache, stats, depth + 1)
            if value == mover:
                winner = mover
                break
    cache.put(key, winner)
    return winner


def _cds_variation(perm, favorable, mover, cache, stats):
    pv = []
    while not is_fixed_point(perm):
        successors = _cds_successors(perm)
        pick = None
        for move, child in successors:
            if _cds_value(child, favorable, opponent(mover), cache, stats, 0) == mover:
                pick = (move, child)
                break
        if pick is None:
            pick = successors[0]
        pv.append(pick[0])
        perm = pick[1]
        mover = opponent(mover)
    return tuple(pv), perm


def solve_cds(
    state: CdsState, cache: SolveCache | None = None, max_n: int = 10
) -> SolveReport:
    """Winner, principal variation, and search statistics for a cds game."""
    if state.perm.n > max_n:
        raise SizeBoundError(
            f"cds solver limited to n <= {max_n}, got n = {state.perm.n}"
        )
    if cache is None:
        cache = SolveCache()
    stats = _Stats()
    winner = _cds_value(state.perm, state.favorable, state.mover, cache, stats, 0)
    pv, final = _cds_variation(state.perm, state.favorable, state.mover, cache, stats)
    assert cds_terminal_winner(final, state.favorable) == winner
    return SolveReport(
        winner=winner,
        principal_variation=pv,
        nodes_expanded=stats.expanded,
        cache_hits=stats.hits,
    )
