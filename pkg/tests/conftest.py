import itertools

import numpy as np
import pytest

from helly_orders.core import MarkVariant, build_hypergraph

ACCEPTANCE_LINES: list[str] = []


def brute_orders(H, subset=None):
    """All agreeing orders of ``subset`` by filtering every permutation with numpy.

    Written against the definitions directly; shares no code with the
    package's agreement check or search.
    """
    U = sorted(set(H.vertices if subset is None else subset))
    inside = set(U)
    edges = [e for e in H.edges if inside.issuperset(e.verts)]
    perms = np.array(list(itertools.permutations(U)), dtype=np.int64).reshape(-1, len(U))
    if not edges:
        return [tuple(p) for p in perms.tolist()]
    pos = np.zeros((len(perms), H.n + 1), dtype=np.int64)
    rows = np.arange(len(perms))[:, None]
    pos[rows, perms] = np.arange(len(U))[None, :]
    verts = np.array([e.verts for e in edges])
    marks = np.array([e.marks for e in edges])
    ranks = pos[:, verts]
    lo = verts[np.arange(len(edges)), ranks.argmin(axis=2)]
    hi = verts[np.arange(len(edges)), ranks.argmax(axis=2)]
    if H.variant is MarkVariant.TWO_EXTREME:
        ok = ((lo == marks[:, 0]) & (hi == marks[:, 1])) | ((lo == marks[:, 1]) & (hi == marks[:, 0]))
    elif H.variant is MarkVariant.MIN_MARKED:
        ok = lo == marks[:, 0]
    elif H.variant is MarkVariant.ONE_EXTREME:
        ok = (lo == marks[:, 0]) | (hi == marks[:, 0])
    else:
        ok = (lo == marks[:, 0]) & (hi == marks[:, 1])
    return [tuple(p) for p in perms[ok.all(axis=1)].tolist()]


def triangle_edges():
    """Rows e, f, g, h, j with alpha, beta, gamma, chi, xi as ids 1..5."""
    return {
        "e": ((1, 2, 3), 1),
        "f": ((1, 2, 5), 2),
        "g": ((2, 3, 5), 2),
        "h": ((2, 3, 4), 3),
        "j": ((1, 3, 4), 3),
    }


@pytest.fixture
def triangle():
    return build_hypergraph(5, 3, MarkVariant.ONE_EXTREME, triangle_edges().values())


@pytest.fixture
def triangle_clique():
    listed = {verts: mark for verts, mark in triangle_edges().values()}
    edges = [(s, listed.get(s, s[0])) for s in itertools.combinations(range(1, 6), 3)]
    return build_hypergraph(5, 3, MarkVariant.ONE_EXTREME, edges)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
