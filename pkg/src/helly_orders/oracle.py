"""Exhaustive decision procedure for agreeing orders.

The search builds an order left to right, trying vertices in ascending id,
so orders come out in lexicographic order.  A prefix is cut as soon as
placing a vertex breaks an edge that lies entirely inside the target set;
every complete order is re-checked with :func:`check_order` before it is
reported.  Intended for n up to about 10.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .core import LinearOrder, MarkedHypergraph, MarkVariant, check_order


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    order: Optional[LinearOrder] = None
    count: Optional[int] = None


def _placement_rule(variant: MarkVariant, r: int):
    """Return ``allowed(v, marks, placed)`` for placing ``v`` into an edge.

    ``placed`` is how many members of the edge precede ``v``.  Each rule
    only rejects prefixes that no completion can repair.
    """
    last = r - 1
    if variant is MarkVariant.MIN_MARKED:
        def allowed(v, marks, placed):
            return placed or v == marks[0]
    elif variant is MarkVariant.MIN_MAX:
        def allowed(v, marks, placed):
            if not placed:
                return v == marks[0]
            return v != marks[1] or placed == last
    elif variant is MarkVariant.TWO_EXTREME:
        def allowed(v, marks, placed):
            if not placed:
                return v in marks
            return v not in marks or placed == last
    else:
        def allowed(v, marks, placed):
            return v != marks[0] or not placed or placed == last
    return allowed


def iter_agreeing(H: MarkedHypergraph, subset: Optional[Iterable[int]] = None) -> Iterator[LinearOrder]:
    """Yield every agreeing order of ``subset`` (default: all vertices) in lexicographic order."""
    U = sorted(set(H.vertices if subset is None else subset))
    inside = set(U)
    edges = [e for e in H.edges if all(v in inside for v in e.verts)]
    touching: dict[int, list[int]] = {v: [] for v in U}
    for i, e in enumerate(edges):
        for v in e.verts:
            touching[v].append(i)
    marks = [e.marks for e in edges]
    placed = [0] * len(edges)
    allowed = _placement_rule(H.variant, H.r)
    prefix: list[int] = []
    free = dict.fromkeys(U, True)

    def extend() -> Iterator[LinearOrder]:
        if len(prefix) == len(U):
            order = LinearOrder(tuple(prefix))
            if check_order(H, order).agrees:
                yield order
            return
        for v in U:
            if not free[v]:
                continue
            if not all(allowed(v, marks[i], placed[i]) for i in touching[v]):
                continue
            free[v] = False
            prefix.append(v)
            for i in touching[v]:
                placed[i] += 1
            yield from extend()
            for i in touching[v]:
                placed[i] -= 1
            prefix.pop()
            free[v] = True

    yield from extend()


def decide(H: MarkedHypergraph, subset: Optional[Iterable[int]] = None) -> OracleResult:
    """Lexicographically least agreeing order of ``subset``, if any."""
    order = next(iter_agreeing(H, subset), None)
    return OracleResult(order is not None, order)


def enumerate_orders(H: MarkedHypergraph, subset: Optional[Iterable[int]] = None, limit: Optional[int] = None) -> list[LinearOrder]:
    return list(itertools.islice(iter_agreeing(H, subset), limit))


def count(H: MarkedHypergraph, subset: Optional[Iterable[int]] = None) -> OracleResult:
    orders = iter_agreeing(H, subset)
    first = next(orders, None)
    total = 0 if first is None else 1 + sum(1 for _ in orders)
    return OracleResult(first is not None, first, total)


def brute_force(H: MarkedHypergraph, subset: Optional[Iterable[int]] = None) -> list[LinearOrder]:
    """All agreeing orders by filtering every permutation; no pruning."""
    U = sorted(set(H.vertices if subset is None else subset))
    found = []
    for perm in itertools.permutations(U):
        order = LinearOrder(perm)
        if check_order(H, order).agrees:
            found.append(order)
    return found
