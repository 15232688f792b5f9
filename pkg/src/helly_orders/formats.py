"""Plain-text formats for instances and reports.

Instance files::

    mh1 <variant> r=<r> n=<n> complete=<0|1>
    <r ascending ids> | <marks>
    ...

Edge lines come in lexicographic order.  Boundary pairs of 2-extreme edges
are written ascending; min&max pairs are written ``A B``.  Output is ASCII
with single spaces and a final LF.  The parser accepts any edge order and
any order of ids within an edge and canonicalizes it.
"""

from __future__ import annotations

from math import comb

from .core import AgreeVerdict, MarkedHypergraph, MarkVariant, build_hypergraph
from .errors import HypergraphError, ParseError
from .helly import CensusReport, HellyScanReport
from .oracle import OracleResult

MAGIC = "mh1"


def serialize_instance(H: MarkedHypergraph) -> str:
    lines = [f"{MAGIC} {H.variant.value} r={H.r} n={H.n} complete={int(bool(H.is_clique))}"]
    lines.extend(str(e) for e in H.edges)
    return "\n".join(lines) + "\n"


def _field(token: str, name: str) -> int:
    key, sep, value = token.partition("=")
    if key != name or not sep:
        raise ParseError(f"expected {name}=<int>, got {token!r}")
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"{name} must be an integer, got {value!r}") from None


def _ids(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer vertex id in {tokens}") from None


def parse_instance(text: str) -> MarkedHypergraph:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty instance file")
    head = lines[0].split()
    if len(head) != 5 or head[0] != MAGIC:
        raise ParseError(f"bad header {lines[0]!r}")
    try:
        variant = MarkVariant(head[1])
    except ValueError:
        raise ParseError(f"unknown variant {head[1]!r}") from None
    r, n, complete = _field(head[2], "r"), _field(head[3], "n"), _field(head[4], "complete")
    if complete not in (0, 1):
        raise ParseError(f"complete must be 0 or 1, got {complete}")
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        verts, bar, marks = line.partition("|")
        if not bar:
            raise ParseError(f"line {lineno}: missing '|'")
        vs, ms = _ids(verts.split(), lineno), _ids(marks.split(), lineno)
        if len(vs) != r:
            raise ParseError(f"line {lineno}: expected {r} vertices, got {len(vs)}")
        if len(ms) != variant.mark_count:
            raise ParseError(f"line {lineno}: expected {variant.mark_count} marks, got {len(ms)}")
        edges.append((vs, ms))
    try:
        H = build_hypergraph(n, r, variant, edges)
    except HypergraphError as exc:
        raise ParseError(str(exc)) from exc
    if bool(complete) != H.is_clique:
        raise ParseError(f"complete={complete} but the file lists {len(H.edges)} of {comb(n, r)} edges")
    return H


def format_verdict(result: OracleResult, with_count: bool = False) -> str:
    lines = [f"EXISTS {'yes' if result.exists else 'no'}"]
    if result.exists and result.order is not None:
        lines.append(f"ORDER {result.order}")
    if with_count:
        lines.append(f"COUNT {result.count}")
    return "\n".join(lines) + "\n"


def format_check(verdict: AgreeVerdict) -> str:
    if verdict.agrees:
        return "AGREES yes\n"
    return f"AGREES no\nWITNESS {verdict.witness_edge}\n"


def format_scan(report: HellyScanReport) -> str:
    lines = [f"SUBSETS {report.subsets_checked} FAIL {report.failing_count} WHOLE {'yes' if report.whole_exists else 'no'}"]
    lines.extend("FAILSET " + ",".join(map(str, s)) for s in report.failing_subsets)
    return "\n".join(lines) + "\n"


def format_census(report: CensusReport) -> str:
    head = f"CENSUS {report.variant.value} r={report.r} n={report.n} k={report.k} mode={report.mode}"
    if report.mode == "random":
        head += f" samples={report.samples} seed={report.seed}"
    lines = [
        head,
        f"INSTANCES {report.instances_total}",
        f"HELLY_PASS {report.instances_helly_k_pass}",
        f"WHOLE_PASS {report.instances_whole_pass}",
        f"COUNTEREXAMPLES {report.counterexample_count}",
    ]
    lines.extend(f"CE {index}" for index in report.counterexamples)
    return "\n".join(lines) + "\n"
