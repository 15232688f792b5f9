"""Deterministic instance families used as fixtures and exposed by the CLI."""

from __future__ import annotations

from .core import MarkedHypergraph, MarkVariant, build_clique, build_hypergraph
from .errors import BadArity, BadParity

FAMILIES = ("two-extreme-tight", "min-max-tight", "one-extreme-cycle", "sparse-cycle", "natural")


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise BadArity(message)


def gen_two_extreme_tight(r: int) -> MarkedHypergraph:
    """2-extreme clique on 2r-2 vertices with no agreeing order, though every
    (2r-3)-subset has one.

    The edge ``{1..r}`` gets boundary ``{1, r-1}``; every other edge gets
    its least and greatest vertex.
    """
    _need(r >= 3, f"r must be at least 3, got {r}")
    special = tuple(range(1, r + 1))

    def marks(e):
        return (1, r - 1) if e == special else (e[0], e[-1])

    return build_clique(2 * r - 2, r, MarkVariant.TWO_EXTREME, marks)


def gen_min_max_tight(r: int) -> MarkedHypergraph:
    """The min&max analogue of :func:`gen_two_extreme_tight`: ``(A, B) = (1, r-1)`` on ``{1..r}``."""
    _need(r >= 3, f"r must be at least 3, got {r}")
    special = tuple(range(1, r + 1))

    def marks(e):
        return (1, r - 1) if e == special else (e[0], e[-1])

    return build_clique(2 * r - 2, r, MarkVariant.MIN_MAX, marks)


def _cyclic_triples(n0: int) -> dict[tuple[int, ...], int]:
    """Triples ``{i, i+1, i+2}`` (mod n0, values in 1..n0) marked at ``i+1``."""
    wrap = lambda k: (k - 1) % n0 + 1  # noqa: E731
    return {tuple(sorted((wrap(i), wrap(i + 1), wrap(i + 2)))): wrap(i + 1) for i in range(1, n0 + 1)}


def gen_one_extreme_cycle(r: int, n: int) -> MarkedHypergraph:
    """1-extreme clique on n vertices with no agreeing order whose every
    (n-1)-vertex subhypergraph has one.  Requires ``n - r`` even.

    The core is the odd cycle of consecutive triples on ``V0 = {1..n0}``,
    ``n0 = n - r + 3``; the remaining ``r - 3`` vertices (ids above n0) are
    added to every triple.  Edges meeting V0 in four or more vertices are
    marked at their least element.
    """
    _need(r >= 3, f"r must be at least 3, got {r}")
    _need(n >= r + 1, f"need n >= r + 1, got n={n}, r={r}")
    if (n - r) % 2:
        raise BadParity(f"n - r must be even, got n={n}, r={r}")
    n0 = n - r + 3
    cycle = _cyclic_triples(n0)

    def marks(e):
        core = tuple(v for v in e if v <= n0)
        if len(core) == 3:
            return cycle.get(core, core[0])
        return core[0]

    return build_clique(n, r, MarkVariant.ONE_EXTREME, marks)


def sparse_cycle_ids(r: int, m: int) -> tuple[list[int], list[list[int]]]:
    """Vertex ids ``u_1..u_m`` and ``v^i_j`` of the sparse cycle family."""
    hubs = list(range(1, m + 1))
    leaves = [[m + (i - 1) * (r - 2) + j for j in range(1, r - 1)] for i in range(1, m + 1)]
    return hubs, leaves


def gen_sparse_min_marked_cycle(r: int, m: int) -> MarkedHypergraph:
    """m edges ``{u_i, u_i+1, v^i_1..v^i_r-2}`` around a cycle, marked at ``u_i``."""
    _need(r >= 3, f"r must be at least 3, got {r}")
    _need(m > 2, f"cycle length m must exceed 2, got {m}")
    hubs, leaves = sparse_cycle_ids(r, m)
    edges = [([hubs[i], hubs[(i + 1) % m]] + leaves[i], hubs[i]) for i in range(m)]
    return build_hypergraph(m + m * (r - 2), r, MarkVariant.MIN_MARKED, edges)


def gen_natural(r: int, n: int, variant: MarkVariant) -> MarkedHypergraph:
    """Clique whose marks are read off the order 1 < 2 < ... < n."""
    _need(r >= 3 and n >= r, f"need n >= r >= 3, got n={n}, r={r}")
    variant = MarkVariant(variant)
    if variant in (MarkVariant.TWO_EXTREME, MarkVariant.MIN_MAX):
        return build_clique(n, r, variant, lambda e: (e[0], e[-1]))
    return build_clique(n, r, variant, lambda e: e[0])


def generate(family: str, r: int, n: int | None = None, m: int | None = None,
             variant: MarkVariant | str = MarkVariant.TWO_EXTREME) -> MarkedHypergraph:
    """Look up a family by its CLI name."""
    if family == "two-extreme-tight":
        return gen_two_extreme_tight(r)
    if family == "min-max-tight":
        return gen_min_max_tight(r)
    if family == "one-extreme-cycle":
        _need(n is not None, "one-extreme-cycle needs n")
        return gen_one_extreme_cycle(r, n)
    if family == "sparse-cycle":
        _need(m is not None, "sparse-cycle needs m")
        return gen_sparse_min_marked_cycle(r, m)
    if family == "natural":
        _need(n is not None, "natural needs n")
        return gen_natural(r, n, MarkVariant.parse(variant) if isinstance(variant, str) else variant)
    raise BadArity(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
