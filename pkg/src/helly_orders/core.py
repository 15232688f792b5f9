"""Marked uniform hypergraphs, linear orders and the agreement check.

Vertices are the integers ``1..n``.  Every edge is a sorted ``r``-tuple of
vertices plus a tuple of marked vertices whose meaning depends on the
:class:`MarkVariant` of the hypergraph:

* ``TWO_EXTREME``: two boundary vertices (stored ascending), which must be
  the first and last vertex of the edge in the order.
* ``MIN_MARKED``: one vertex that must come first.
* ``ONE_EXTREME``: one vertex that must come first or last.
* ``MIN_MAX``: an ordered pair ``(A, B)``; ``A`` first and ``B`` last.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Callable, Iterable, Optional, Sequence, Union

from .errors import (
    BadArity,
    DuplicateBoundary,
    DuplicateEdge,
    HypergraphError,
    MarkNotInEdge,
    OrderNotOverSubset,
)


class MarkVariant(str, enum.Enum):
    TWO_EXTREME = "two-extreme"
    MIN_MARKED = "min-marked"
    ONE_EXTREME = "one-extreme"
    MIN_MAX = "min-max"

    @classmethod
    def parse(cls, token: str) -> "MarkVariant":
        try:
            return cls(token.strip().lower().replace("_", "-"))
        except ValueError:
            raise HypergraphError(f"unknown variant {token!r}") from None

    @property
    def mark_count(self) -> int:
        return 2 if self in (MarkVariant.TWO_EXTREME, MarkVariant.MIN_MAX) else 1

    def choices_per_edge(self, r: int) -> int:
        """Number of distinct markings of a single ``r``-edge."""
        if self is MarkVariant.TWO_EXTREME:
            return comb(r, 2)
        if self is MarkVariant.MIN_MAX:
            return r * (r - 1)
        return r

    def mark_patterns(self, r: int) -> list[tuple[int, ...]]:
        """Marks as positions inside a sorted edge, in canonical digit order.

        The index of a pattern in this list is the mixed-radix digit used
        for that edge by the census code.
        """
        if self is MarkVariant.TWO_EXTREME:
            return list(itertools.combinations(range(r), 2))
        if self is MarkVariant.MIN_MAX:
            return list(itertools.permutations(range(r), 2))
        return [(i,) for i in range(r)]


@dataclass(frozen=True)
class MarkedEdge:
    verts: tuple[int, ...]
    marks: tuple[int, ...]

    @property
    def mark(self) -> int:
        """The single marked vertex (min-marked and 1-extreme edges)."""
        return self.marks[0]

    def __contains__(self, v: int) -> bool:
        return v in self.verts

    def __str__(self) -> str:
        return " ".join(map(str, self.verts)) + " | " + " ".join(map(str, self.marks))


def make_edge(verts: Iterable[int], marks: Union[int, Iterable[int]], variant: MarkVariant) -> MarkedEdge:
    """Normalize and validate one edge.  Boundary pairs are stored ascending."""
    vs = tuple(sorted(verts))
    ms = (marks,) if isinstance(marks, int) else tuple(marks)
    if len(ms) != variant.mark_count:
        raise DuplicateBoundary(f"edge {vs}: {variant.value} needs {variant.mark_count} marks, got {ms}")
    for m in ms:
        if m not in vs:
            raise MarkNotInEdge(f"mark {m} is not a vertex of edge {vs}")
    if len(ms) == 2 and ms[0] == ms[1]:
        raise DuplicateBoundary(f"edge {vs}: marked vertices must differ, got {ms}")
    if variant is MarkVariant.TWO_EXTREME:
        ms = tuple(sorted(ms))
    return MarkedEdge(vs, ms)


@dataclass(frozen=True)
class MarkedHypergraph:
    """An ``r``-uniform hypergraph on ``1..n`` with one mark set per edge.

    Edges are kept sorted lexicographically by vertex tuple.  ``is_clique``
    is detected when not given; passing ``True`` for an incomplete edge list
    raises :class:`BadArity`.
    """

    n: int
    r: int
    variant: MarkVariant
    edges: tuple[MarkedEdge, ...]
    is_clique: Optional[bool] = None

    def __post_init__(self):
        n, r = self.n, self.r
        if r < 3:
            raise BadArity(f"uniformity must be at least 3, got r={r}")
        if n < 0:
            raise BadArity(f"negative vertex count {n}")
        variant = MarkVariant(self.variant)
        edges = tuple(sorted(self.edges, key=lambda e: e.verts))
        for i, e in enumerate(edges):
            if len(e.verts) != r or len(set(e.verts)) != r:
                raise BadArity(f"edge {e.verts} is not an {r}-set")
            if e.verts[0] < 1 or e.verts[-1] > n:
                raise BadArity(f"edge {e.verts} leaves the vertex range 1..{n}")
            if make_edge(e.verts, e.marks, variant) != e:
                raise DuplicateBoundary(f"edge {e.verts} has non-canonical marks {e.marks}")
            if i and edges[i - 1].verts == e.verts:
                raise DuplicateEdge(f"repeated edge {e.verts}")
        complete = len(edges) == comb(n, r)
        if self.is_clique and not complete:
            raise BadArity(f"clique on {n} vertices needs {comb(n, r)} edges, got {len(edges)}")
        object.__setattr__(self, "variant", variant)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "is_clique", complete)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_index(self) -> dict[tuple[int, ...], int]:
        return {e.verts: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident(self) -> dict[int, list[int]]:
        """Vertex -> indices of the edges containing it."""
        out: dict[int, list[int]] = {v: [] for v in self.vertices}
        for i, e in enumerate(self.edges):
            for v in e.verts:
                out[v].append(i)
        return out

    def edge(self, verts: Iterable[int]) -> MarkedEdge:
        return self.edges[self.edge_index[tuple(sorted(verts))]]

    def induced(self, subset: Iterable[int]) -> "MarkedHypergraph":
        """Sub-hypergraph on ``subset``, relabelled ``1..|subset|`` monotonically.

        The i-th smallest vertex of ``subset`` becomes ``i``; use
        :func:`relabel_order` to map an order of the result back.
        """
        keep = sorted(set(subset))
        new_id = {v: i + 1 for i, v in enumerate(keep)}
        edges = []
        for e in self.edges:
            if all(v in new_id for v in e.verts):
                edges.append(MarkedEdge(tuple(new_id[v] for v in e.verts), tuple(new_id[m] for m in e.marks)))
        return MarkedHypergraph(len(keep), self.r, self.variant, tuple(edges))

    def without(self, v: int) -> "MarkedHypergraph":
        return self.induced(u for u in self.vertices if u != v)


def lex_rank(verts: Sequence[int], n: int) -> int:
    """Position of a sorted ``r``-subset of ``1..n`` in lexicographic order."""
    r = len(verts)
    rank, prev = 0, 0
    for i, v in enumerate(verts):
        for skipped in range(prev + 1, v):
            rank += comb(n - skipped, r - i - 1)
        prev = v
    return rank


Marks = Union[int, Sequence[int]]


def build_clique(
    n: int,
    r: int,
    variant: MarkVariant,
    marks: Union[Sequence[Marks], Callable[[tuple[int, ...]], Marks]],
) -> MarkedHypergraph:
    """Complete ``r``-uniform hypergraph on ``1..n``.

    ``marks`` is either a sequence aligned with the r-subsets in
    lexicographic order, or a function from a sorted r-subset to its marks.
    """
    if r < 3 or n < r:
        raise BadArity(f"need n >= r >= 3, got n={n}, r={r}")
    variant = MarkVariant(variant)
    subsets = list(itertools.combinations(range(1, n + 1), r))
    if callable(marks):
        chosen = [marks(s) for s in subsets]
    else:
        chosen = list(marks)
        if len(chosen) != len(subsets):
            raise BadArity(f"expected {len(subsets)} mark entries, got {len(chosen)}")
    edges = tuple(make_edge(s, m, variant) for s, m in zip(subsets, chosen))
    return MarkedHypergraph(n, r, variant, edges, is_clique=True)


def build_hypergraph(n: int, r: int, variant: MarkVariant, edges: Iterable[tuple[Iterable[int], Marks]]) -> MarkedHypergraph:
    """General (not necessarily complete) hypergraph from ``(verts, marks)`` pairs."""
    variant = MarkVariant(variant)
    return MarkedHypergraph(n, r, variant, tuple(make_edge(v, m, variant) for v, m in edges))


@dataclass(frozen=True)
class LinearOrder:
    seq: tuple[int, ...]
    rank: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        seq = tuple(self.seq)
        rank = {v: i for i, v in enumerate(seq)}
        if len(rank) != len(seq):
            raise OrderNotOverSubset(f"order repeats a vertex: {seq}")
        object.__setattr__(self, "seq", seq)
        object.__setattr__(self, "rank", rank)

    def __len__(self):
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def __str__(self):
        return ",".join(map(str, self.seq))

    def dual(self) -> "LinearOrder":
        return LinearOrder(self.seq[::-1])

    def restrict(self, subset: Iterable[int]) -> "LinearOrder":
        keep = set(subset)
        return LinearOrder(tuple(v for v in self.seq if v in keep))


def dual(order: LinearOrder) -> LinearOrder:
    return order.dual()


def relabel_order(order: LinearOrder, subset: Iterable[int]) -> LinearOrder:
    """Map an order of ``H.induced(subset)`` back to the original labels."""
    keep = sorted(set(subset))
    return LinearOrder(tuple(keep[v - 1] for v in order.seq))


@dataclass(frozen=True)
class AgreeVerdict:
    agrees: bool
    witness_edge: Optional[MarkedEdge] = None

    def __bool__(self):
        return self.agrees


def edge_agrees(variant: MarkVariant, edge: MarkedEdge, rank: dict[int, int]) -> bool:
    """Whether ``edge`` satisfies its rule under the positions in ``rank``."""
    lo = hi = edge.verts[0]
    for v in edge.verts[1:]:
        if rank[v] < rank[lo]:
            lo = v
        elif rank[v] > rank[hi]:
            hi = v
    marks = edge.marks
    if variant is MarkVariant.TWO_EXTREME:
        return marks == ((lo, hi) if lo < hi else (hi, lo))
    if variant is MarkVariant.MIN_MARKED:
        return lo == marks[0]
    if variant is MarkVariant.ONE_EXTREME:
        return marks[0] == lo or marks[0] == hi
    return lo == marks[0] and hi == marks[1]


def check_order(H: MarkedHypergraph, order: Union[LinearOrder, Sequence[int]]) -> AgreeVerdict:
    """Check ``order`` (over a subset U of the vertices) against every edge inside U.

    The witness is the first violated edge in edge order.
    """
    if not isinstance(order, LinearOrder):
        order = LinearOrder(tuple(order))
    rank = order.rank
    for v in order.seq:
        if not 1 <= v <= H.n:
            raise OrderNotOverSubset(f"vertex {v} is not in 1..{H.n}")
    full = len(rank) == H.n
    for e in H.edges:
        if not full and any(v not in rank for v in e.verts):
            continue
        if not edge_agrees(H.variant, e, rank):
            return AgreeVerdict(False, e)
    return AgreeVerdict(True)
