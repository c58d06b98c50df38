"""Permutations of {1..n} and the context-directed swap (cds) rewrite.

A *pointer* is an adjacent pair of values (k, k+1), identified here by the
integer code ``k`` with 1 <= k <= n-1.  In a permutation written as a word,
the pointer k occurs twice: on the right-hand side of the entry k (its
"head") and on the left-hand side of the entry k+1 (its "tail").  Two
pointers *interlock* when their four occurrences alternate along the word.
A cds move is indexed by an unordered pair of interlocking pointers; it
swaps the two blocks of entries delimited by the pointer occurrences, after
which the two values of each pointer sit adjacent in sorted order.  The
move is undefined (raises :class:`NotApplicableError`) when the pointers do
not interlock.

Fixed points of cds are the permutations with no interlocking pointer pair:
the identity and the n-1 rotations [k+1, ..., n, 1, ..., k].
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

__all__ = [
    "NotApplicableError",
    "ParseError",
    "Occurrence",
    "Permutation",
    "TAIL_LEFT",
    "HEAD_RIGHT",
    "parse_permutation",
    "pointer_occurrences",
    "interlocks",
    "legal_moves",
    "apply_cds",
    "is_fixed_point",
    "fixed_point_code",
    "identity",
]


class NotApplicableError(Exception):
    """Raised when a cds move is requested for a non-interlocking pair."""


class ParseError(ValueError):
    """Raised when permutation text cannot be parsed."""


# Sides of a pointer occurrence.  Tail-left sorts before head-right when both
# land on the same entry, which happens exactly when the two pointers are
# consecutive codes meeting at a shared value.
TAIL_LEFT = 0
HEAD_RIGHT = 1

_SIDE_NAMES = {TAIL_LEFT: "tail-left", HEAD_RIGHT: "head-right"}


class Occurrence(NamedTuple):
    """One of the two occurrences of a pointer: a 1-based position and a side."""

    position: int
    side: int

    def __repr__(self) -> str:
        return f"Occurrence({self.position}, {_SIDE_NAMES[self.side]})"


class Permutation:
    """An immutable permutation of {1..n}, n >= 1, stored as a tuple of entries."""

    __slots__ = ("entries",)

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        values = tuple(entries)
        n = len(values)
        if n == 0:
            raise ValueError("a permutation needs at least one entry")
        seen = set()
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"entry {v!r} is not an integer")
            if not 1 <= v <= n:
                raise ValueError(f"entry {v} out of range 1..{n}")
            if v in seen:
                raise ValueError(f"entry {v} appears more than once")
            seen.add(v)
        object.__setattr__(self, "entries", values)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Permutation is immutable")

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"Permutation({list(self.entries)})"

    @property
    def n(self) -> int:
        return len(self.entries)

    def position_of(self, value: int) -> int:
        """1-based position of ``value`` in the word."""
        return self.entries.index(value) + 1


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def parse_permutation(text: str) -> Permutation:
    """Parse whitespace-separated entries such as ``"3 6 5 2 4 8 1 7"``."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty permutation text")
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(f"token {tok!r} is not an integer") from None
    n = len(values)
    seen = set()
    for tok, v in zip(tokens, values):
        if not 1 <= v <= n:
            raise ParseError(f"token {tok!r} out of range 1..{n}")
        if v in seen:
            raise ParseError(f"token {tok!r} duplicates an earlier entry")
        seen.add(v)
    return Permutation(values)


def _check_pointer(perm: Permutation, p: int) -> None:
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"pointer code {p!r} is not an integer")
    if not 1 <= p <= perm.n - 1:
        raise ValueError(f"pointer code {p} out of range 1..{perm.n - 1}")


def pointer_occurrences(perm: Permutation, p: int) -> tuple[Occurrence, Occurrence]:
    """The two occurrences of pointer ``p``, in linear (left-to-right) order.

    The head-right occurrence sits at the position of entry p, the tail-left
    occurrence at the position of entry p+1.  When the positions coincide
    they cannot: p and p+1 are distinct entries.  Ordering is by position,
    with tail-left before head-right at equal positions (relevant only when
    comparing occurrences of *different* pointers).
    """
    _check_pointer(perm, p)
    head = Occurrence(perm.position_of(p), HEAD_RIGHT)
    tail = Occurrence(perm.position_of(p + 1), TAIL_LEFT)
    return (head, tail) if head < tail else (tail, head)


def _merged_occurrences(
    perm: Permutation, p: int, q: int
) -> list[tuple[Occurrence, int]]:
    """All four occurrences of p and q, tagged by owner, in linear order."""
    occs = [(o, p) for o in pointer_occurrences(perm, p)]
    occs += [(o, q) for o in pointer_occurrences(perm, q)]
    occs.sort()
    return occs


def interlocks(perm: Permutation, p: int, q: int) -> bool:
    """True iff the occurrences of p and q alternate (pattern pqpq or qpqp)."""
    if p == q:
        raise ValueError("interlocking is defined for two distinct pointers")
    _check_pointer(perm, p)
    _check_pointer(perm, q)
    owners = [owner for _, owner in _merged_occurrences(perm, p, q)]
    return owners[0] == owners[2] and owners[0] != owners[1]


def legal_moves(perm: Permutation) -> set[tuple[int, int]]:
    """All unordered interlocking pointer pairs, as tuples (p, q) with p < q."""
    n = perm.n
    moves = set()
    for p in range(1, n):
        for q in range(p + 1, n):
            if interlocks(perm, p, q):
                moves.add((p, q))
    return moves


# The four interleaving cases, keyed by the side pattern of the occurrence
# sequence (first-occurring pointer's sides in slots 0 and 2, the other's in
# slots 1 and 3).  Every interlocking pair matches exactly one pattern since
# each pointer contributes one head and one tail.
_CASE_SIDES = {
    (TAIL_LEFT, HEAD_RIGHT, HEAD_RIGHT, TAIL_LEFT): 1,
    (HEAD_RIGHT, HEAD_RIGHT, TAIL_LEFT, TAIL_LEFT): 2,
    (HEAD_RIGHT, TAIL_LEFT, TAIL_LEFT, HEAD_RIGHT): 3,
    (TAIL_LEFT, TAIL_LEFT, HEAD_RIGHT, HEAD_RIGHT): 4,
}


def _match_case(perm: Permutation, p: int, q: int) -> tuple[int, tuple[int, int, int, int]]:
    """Classify the interleaving of p and q; return (case, sorted positions).

    Fails loudly if the occurrence pattern matches zero or several case
    templates, which would mean the case analysis is not exhaustive and
    mutually exclusive.
    """
    occs = _merged_occurrences(perm, p, q)
    owners = [owner for _, owner in occs]
    if not (owners[0] == owners[2] and owners[0] != owners[1]):
        raise NotApplicableError(
            f"pointers {p} and {q} do not interlock in {list(perm.entries)}"
        )
    sides = tuple(o.side for o, _ in occs)
    matches = [case for pattern, case in _CASE_SIDES.items() if pattern == sides]
    if len(matches) != 1:
        raise AssertionError(
            f"occurrence pattern {sides} matched cases {matches}; "
            "expected exactly one"
        )
    positions = tuple(o.position for o, _ in occs)
    return matches[0], positions  # type: ignore[return-value]


def apply_cds(perm: Permutation, p: int, q: int) -> Permutation:
    """Apply the cds move indexed by the interlocking pair {p, q}.

    The four occurrence positions i1 < i2 < i3 < i4 frame two swapped blocks;
    which entries travel with which block depends on the side pattern:

    * case 1 (tail, head, head, tail): blocks [i1..i2] and (i2..i3] swap,
      carried around position i4's entry staying put at the right edge;
    * case 2 (head, head, tail, tail): blocks (i1..i2] and [i3..i4) swap;
    * case 3 (head, tail, tail, head): blocks (i1..i2) and [i3..i4] swap
      around the middle segment [i2..i3);
    * case 4 (tail, tail, head, head): blocks [i1..i2) and (i3..i4] swap.

    After the move each of the two pointers has its values adjacent and in
    order, so neither pointer interlocks with anything again.
    """
    case, (i1, i2, i3, i4) = _match_case(perm, p, q)
    e = perm.entries
    n = len(e)

    def seg(a: int, b: int) -> tuple[int, ...]:
        # entries at 1-based positions a..b inclusive; empty when a > b
        return e[a - 1 : b]

    if case == 1:
        out = seg(1, i1 - 1) + seg(i3 + 1, i4 - 1) + seg(i2 + 1, i3) + seg(i1, i2) + seg(i4, n)
    elif case == 2:
        out = seg(1, i1) + seg(i3, i4 - 1) + seg(i2 + 1, i3 - 1) + seg(i1 + 1, i2) + seg(i4, n)
    elif case == 3:
        out = seg(1, i1) + seg(i3, i4) + seg(i2, i3 - 1) + seg(i1 + 1, i2 - 1) + seg(i4 + 1, n)
    else:
        out = seg(1, i1 - 1) + seg(i3 + 1, i4) + seg(i2, i3) + seg(i1, i2 - 1) + seg(i4 + 1, n)
    return Permutation(out)


def is_fixed_point(perm: Permutation) -> bool:
    """True iff no cds move applies: perm is the identity or [k+1..n, 1..k]."""
    e = perm.entries
    n = len(e)
    return all(e[i + 1] == e[i] % n + 1 for i in range(n - 1))


def fixed_point_code(perm: Permutation) -> int | None:
    """Code of a cds fixed point: None for the identity, else k for [k+1..n,1..k].

    The code names the pointer whose values wrap around the word boundary.
    Raises ValueError when the permutation still has legal moves.
    """
    if not is_fixed_point(perm):
        raise ValueError(f"{list(perm.entries)} is not a cds fixed point")
    first = perm.entries[0]
    return None if first == 1 else first - 1
