"""Structured decision procedures, one per mark variant.

Each solver returns an :class:`~helly_orders.oracle.OracleResult` whose
verdict matches :func:`helly_orders.oracle.decide`; returned orders always
pass :func:`~helly_orders.core.check_order`.
"""

from __future__ import annotations

import heapq
import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import oracle
from .core import LinearOrder, MarkedHypergraph, MarkVariant, check_order, relabel_order
from .errors import ColoringSpaceTooLarge, WrongArity, WrongVariant
from .incidence import S, build_matrix, find_sf
from .oracle import OracleResult

MAX_COLORING_COMPONENTS = 20


def _require(H: MarkedHypergraph, variant: MarkVariant, clique: bool = False) -> None:
    if H.variant is not variant:
        raise WrongVariant(f"expected a {variant.value} hypergraph, got {H.variant.value}")
    if clique and not H.is_clique:
        raise WrongVariant(f"the structured {variant.value} solver needs a clique")


@dataclass(frozen=True)
class PrecedenceDigraph:
    nodes: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]
    origin: str

    @classmethod
    def from_arcs(cls, nodes: Iterable[int], arcs: Iterable[tuple[int, int]], origin: str) -> "PrecedenceDigraph":
        return cls(tuple(sorted(set(nodes))), tuple(sorted({(a, b) for a, b in arcs if a != b})), origin)

    def successors(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in self.nodes}
        for a, b in self.arcs:
            out[a].append(b)
        return out

    def topological_order(self) -> Optional[tuple[int, ...]]:
        """Least-id-first topological order, or None if there is a directed cycle."""
        succ = self.successors()
        indeg = dict.fromkeys(self.nodes, 0)
        for _, b in self.arcs:
            indeg[b] += 1
        ready = [v for v in self.nodes if indeg[v] == 0]
        heapq.heapify(ready)
        out = []
        while ready:
            v = heapq.heappop(ready)
            out.append(v)
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    heapq.heappush(ready, w)
        return tuple(out) if len(out) == len(self.nodes) else None

    def find_cycle(self) -> Optional[list[int]]:
        """Some directed cycle as a vertex list, or None."""
        succ = self.successors()
        state = dict.fromkeys(self.nodes, 0)
        for root in self.nodes:
            if state[root]:
                continue
            path = [root]
            stack = [iter(succ[root])]
            state[root] = 1
            while stack:
                nxt = next(stack[-1], None)
                if nxt is None:
                    state[path.pop()] = 2
                    stack.pop()
                elif state[nxt] == 1:
                    return path[path.index(nxt):]
                elif state[nxt] == 0:
                    state[nxt] = 1
                    path.append(nxt)
                    stack.append(iter(succ[nxt]))
        return None


# --- min-marked ------------------------------------------------------------

def d_graph(H: MarkedHypergraph) -> PrecedenceDigraph:
    """D-graph with each class of edges named by its shared marked vertex.

    Class ``a`` points to class ``b`` when some edge marked ``a`` contains ``b``.
    """
    _require(H, MarkVariant.MIN_MARKED)
    marked = {e.mark for e in H.edges}
    arcs = [(e.mark, v) for e in H.edges for v in e.verts if v in marked]
    return PrecedenceDigraph.from_arcs(marked, arcs, "D")


def solve_min_marked(H: MarkedHypergraph) -> OracleResult:
    D = d_graph(H)
    topo = D.topological_order()
    if topo is None:
        return OracleResult(False)
    unmarked = [v for v in H.vertices if v not in set(D.nodes)]
    return OracleResult(True, LinearOrder(topo + tuple(unmarked)))


# --- min&max ---------------------------------------------------------------

def min_max_graph(H: MarkedHypergraph) -> PrecedenceDigraph:
    """Arc x -> y whenever x = A(e) or y = B(e) for an edge e holding both."""
    _require(H, MarkVariant.MIN_MAX)
    arcs = []
    for e in H.edges:
        a, b = e.marks
        arcs.extend((a, v) for v in e.verts)
        arcs.extend((v, b) for v in e.verts)
    return PrecedenceDigraph.from_arcs(H.vertices, arcs, "G")


def solve_min_max(H: MarkedHypergraph) -> OracleResult:
    topo = min_max_graph(H).topological_order()
    if topo is None:
        return OracleResult(False)
    return OracleResult(True, LinearOrder(topo))


# --- 1-extreme -------------------------------------------------------------

class _DisjointSets:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


@dataclass(frozen=True)
class SFGraph:
    """Edge-level S/F graph together with its S-contraction.

    ``class_of[i]`` is the class of edge ``i``; classes are numbered by
    their least edge.  ``compound`` is the simple graph of F-edges between
    distinct classes; ``f_loops`` lists classes joined to themselves by an
    F-edge, which rules out any proper two-coloring.
    """

    base_nodes: tuple[int, ...]
    s_edges: tuple[tuple[int, int], ...]
    f_edges: tuple[tuple[int, int], ...]
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    compound: dict[int, tuple[int, ...]] = field(compare=False)
    f_loops: tuple[int, ...]

    def two_coloring(self) -> Optional[tuple[list[list[int]], dict[int, bool]]]:
        """Components (class lists) and a base coloring, or None if not bipartite.

        In the base coloring the first class of each component gets ``False``
        (color A).  Components are ordered by their least class.
        """
        if self.f_loops:
            return None
        color: dict[int, bool] = {}
        components = []
        for start in range(len(self.classes)):
            if start in color:
                continue
            color[start] = False
            comp, queue = [start], [start]
            while queue:
                c = queue.pop()
                for d in self.compound[c]:
                    if d not in color:
                        color[d] = not color[c]
                        comp.append(d)
                        queue.append(d)
                    elif color[d] == color[c]:
                        return None
            components.append(sorted(comp))
        return components, color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None


def sf_graph(H: MarkedHypergraph) -> SFGraph:
    _require(H, MarkVariant.ONE_EXTREME)
    s_edges, f_edges = set(), set()
    for hit in find_sf(build_matrix(H)):
        (s_edges if hit.kind == S else f_edges).add(hit.rows)
    m = len(H.edges)
    sets = _DisjointSets(m)
    for i, j in s_edges:
        sets.union(i, j)
    roots = sorted({sets.find(i) for i in range(m)})
    number = {root: k for k, root in enumerate(roots)}
    class_of = tuple(number[sets.find(i)] for i in range(m))
    classes = [[] for _ in roots]
    for i, c in enumerate(class_of):
        classes[c].append(i)
    adjacency = defaultdict(set)
    loops = set()
    for i, j in f_edges:
        ci, cj = class_of[i], class_of[j]
        if ci == cj:
            loops.add(ci)
        else:
            adjacency[ci].add(cj)
            adjacency[cj].add(ci)
    compound = {c: tuple(sorted(adjacency[c])) for c in range(len(classes))}
    return SFGraph(
        tuple(range(m)), tuple(sorted(s_edges)), tuple(sorted(f_edges)),
        class_of, tuple(map(tuple, classes)), compound, tuple(sorted(loops)),
    )


def ab_graph(H: MarkedHypergraph, edge_is_b: list[bool]) -> PrecedenceDigraph:
    """Vertex digraph for a split of the edges into color A (False) and B (True)."""
    arcs = []
    for e, is_b in zip(H.edges, edge_is_b):
        hat = e.mark
        if is_b:
            arcs.extend((v, hat) for v in e.verts)
        else:
            arcs.extend((hat, v) for v in e.verts)
    return PrecedenceDigraph.from_arcs(H.vertices, arcs, "AB")


def solve_one_extreme(H: MarkedHypergraph, max_components: int = MAX_COLORING_COMPONENTS) -> OracleResult:
    """Search the proper two-colorings of the contracted S/F graph.

    Colorings are tried with components in order, color A before B for the
    first class of each component; the first coloring whose AB graph is
    acyclic gives the order.
    """
    _require(H, MarkVariant.ONE_EXTREME)
    colored = sf_graph(H)
    split = colored.two_coloring()
    if split is None:
        return OracleResult(False)
    components, base = split
    if len(components) > max_components:
        raise ColoringSpaceTooLarge(f"{len(components)} components exceed the limit of {max_components}")
    comp_of = {c: k for k, comp in enumerate(components) for c in comp}
    for flips in itertools.product((False, True), repeat=len(components)):
        edge_is_b = [base[c] != flips[comp_of[c]] for c in colored.class_of]
        topo = ab_graph(H, edge_is_b).topological_order()
        if topo is not None:
            return OracleResult(True, LinearOrder(topo))
    return OracleResult(False)


# --- 2-extreme -------------------------------------------------------------

@dataclass(frozen=True)
class ExtremalReport:
    extremal_vertices: frozenset[int]


@dataclass(frozen=True)
class SimilarityClasses:
    pivot: int
    classes: tuple[tuple[int, ...], ...]


def extremal_vertices(H: MarkedHypergraph) -> ExtremalReport:
    """Vertices lying on the boundary of every edge that contains them."""
    _require(H, MarkVariant.TWO_EXTREME)
    inner = {v for e in H.edges for v in e.verts if v not in e.marks}
    return ExtremalReport(frozenset(v for v in H.vertices if v not in inner))


def similarity_classes(H: MarkedHypergraph, x: int) -> SimilarityClasses:
    """Classes of the closure of ``u ~ v  <=>  boundary({x, u, v}) != {u, v}``.

    Only meaningful for 3-uniform cliques.  More than two classes is
    reported as is.
    """
    _require(H, MarkVariant.TWO_EXTREME, clique=True)
    if H.r != 3:
        raise WrongArity(f"similarity classes are defined for r = 3, got r = {H.r}")
    others = [v for v in H.vertices if v != x]
    sets = _DisjointSets(H.n + 1)
    for u, v in itertools.combinations(others, 2):
        if H.edge((x, u, v)).marks != (u, v):
            sets.union(u, v)
    groups = defaultdict(list)
    for v in others:
        groups[sets.find(v)].append(v)
    return SimilarityClasses(x, tuple(sorted(tuple(g) for g in groups.values())))


def _single_edge_order(H: MarkedHypergraph) -> LinearOrder:
    (e,) = H.edges
    a, b = e.marks
    return LinearOrder((a,) + tuple(v for v in e.verts if v not in e.marks) + (b,))


def _sub_order(H: MarkedHypergraph, subset: list[int]):
    """Solve the induced sub-clique; returns an order in H's labels or None."""
    order = _two_extreme_order(H.induced(subset))
    return None if order is None else relabel_order(order, subset)


_NO_ORDER = object()


def _peel(H: MarkedHypergraph, ends: list[int]):
    first, last = ends
    rest = _sub_order(H, [v for v in H.vertices if v != first])
    if rest is None:
        return _NO_ORDER
    seq = rest.seq if rest.seq[-1] == last else rest.seq[::-1]
    return LinearOrder((first,) + seq)


def _concatenate(H: MarkedHypergraph, extremal: frozenset[int]):
    x = min(v for v in H.vertices if v not in extremal)
    classes = similarity_classes(H, x).classes
    if len(classes) != 2:
        return None
    left = _sub_order(H, sorted(classes[0] + (x,)))
    right = _sub_order(H, sorted(classes[1] + (x,)))
    if left is None or right is None:
        return _NO_ORDER
    left_seq = left.seq if left.seq[-1] == x else left.seq[::-1]
    right_seq = right.seq if right.seq[0] == x else right.seq[::-1]
    if left_seq[-1] != x or right_seq[0] != x:
        return None
    return LinearOrder(left_seq + right_seq[1:])


def _two_extreme_order(H: MarkedHypergraph) -> Optional[LinearOrder]:
    if H.n < H.r:
        return LinearOrder(tuple(H.vertices))
    if H.n == H.r:
        return _single_edge_order(H)
    extremal = extremal_vertices(H).extremal_vertices
    # the two ends of any agreeing order are extremal
    if len(extremal) < 2:
        return None
    if H.r == 3:
        candidate = _concatenate(H, extremal)
    else:
        candidate = _peel(H, sorted(extremal))
    if candidate is _NO_ORDER:
        return None
    if candidate is not None and check_order(H, candidate).agrees:
        return candidate
    return oracle.decide(H).order


def solve_two_extreme(H: MarkedHypergraph) -> OracleResult:
    """Build an order by similarity classes (r = 3) or extremal peeling (r >= 4).

    Any candidate that fails the agreement check is replaced by the oracle's
    answer, so the verdict is always exact.
    """
    _require(H, MarkVariant.TWO_EXTREME, clique=True)
    order = _two_extreme_order(H)
    return OracleResult(order is not None, order)


def count_agreeing(H: MarkedHypergraph) -> int:
    return oracle.count(H).count


def solve(H: MarkedHypergraph) -> OracleResult:
    """Dispatch to the structured solver, or the oracle where none applies."""
    if H.variant is MarkVariant.MIN_MARKED:
        return solve_min_marked(H)
    if H.variant is MarkVariant.MIN_MAX:
        return solve_min_max(H)
    if H.variant is MarkVariant.ONE_EXTREME:
        return solve_one_extreme(H)
    if H.is_clique:
        return solve_two_extreme(H)
    return oracle.decide(H)
