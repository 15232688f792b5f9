"""Subset scans and marking censuses.

A marking of the complete ``(r, n)`` clique is addressed by a mixed-radix
integer: one digit per edge, edges in lexicographic order, the first edge
being the most significant digit.  Digit ``d`` of an edge selects the
``d``-th entry of :meth:`MarkVariant.mark_patterns`, i.e. positions inside
the sorted edge.

Random markings come from :class:`SplitMix64`.  Each sampled marking
consumes one 64-bit output per edge, in edge order, and uses
``output % choices_per_edge`` as the digit; the sample's index is then
reported like an exhaustive one.  A report is a pure function of its
parameters and seed.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import oracle, solvers
from .core import MarkedEdge, MarkedHypergraph, MarkVariant
from .errors import BadArity, BudgetExceeded, ColoringSpaceTooLarge
from .incidence import build_matrix, find_forbidden

DEFAULT_BUDGET = 1_000_000
MAX_LISTED = 100

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 stream (Steele, Lea, Flood 2014); seeds are taken mod 2**64."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next_u64() % bound


# --- marking spaces --------------------------------------------------------

@dataclass(frozen=True)
class MarkingSpace:
    variant: MarkVariant
    r: int
    n: int
    subsets: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    patterns: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.r < 3 or self.n < self.r:
            raise BadArity(f"need n >= r >= 3, got n={self.n}, r={self.r}")
        object.__setattr__(self, "variant", MarkVariant(self.variant))
        object.__setattr__(self, "subsets", tuple(itertools.combinations(range(1, self.n + 1), self.r)))
        object.__setattr__(self, "patterns", tuple(self.variant.mark_patterns(self.r)))

    @property
    def base(self) -> int:
        return len(self.patterns)

    @property
    def size(self) -> int:
        return self.base ** len(self.subsets)

    def digits(self, index: int) -> list[int]:
        out = []
        for _ in self.subsets:
            index, d = divmod(index, self.base)
            out.append(d)
        return out[::-1]

    def index(self, digits: Sequence[int]) -> int:
        value = 0
        for d in digits:
            value = value * self.base + d
        return value

    def hypergraph(self, digits: Sequence[int]) -> MarkedHypergraph:
        edges = []
        for verts, d in zip(self.subsets, digits):
            marks = tuple(verts[p] for p in self.patterns[d])
            if self.variant is MarkVariant.TWO_EXTREME:
                marks = tuple(sorted(marks))
            edges.append(MarkedEdge(verts, marks))
        return MarkedHypergraph(self.n, self.r, self.variant, tuple(edges), is_clique=True)

    def instance(self, index: int) -> MarkedHypergraph:
        return self.hypergraph(self.digits(index))

    def digits_of(self, H: MarkedHypergraph) -> list[int]:
        lookup = {p: d for d, p in enumerate(self.patterns)}
        out = []
        for e in H.edges:
            pos = tuple(e.verts.index(m) for m in e.marks)
            if self.variant is MarkVariant.TWO_EXTREME:
                pos = tuple(sorted(pos))
            out.append(lookup[pos])
        return out

    def index_of(self, H: MarkedHypergraph) -> int:
        if not H.is_clique or (H.variant, H.r, H.n) != (self.variant, self.r, self.n):
            raise BadArity("instance does not belong to this marking space")
        return self.index(self.digits_of(H))

    def random_digits(self, rng: SplitMix64) -> list[int]:
        return [rng.below(self.base) for _ in self.subsets]


def random_clique(variant: MarkVariant, r: int, n: int, rng: SplitMix64) -> MarkedHypergraph:
    space = MarkingSpace(variant, r, n)
    return space.hypergraph(space.random_digits(rng))


def random_hypergraph(variant: MarkVariant, r: int, n: int, rng: SplitMix64, keep_permille: int = 500) -> MarkedHypergraph:
    """Keep each r-subset with probability keep_permille/1000, then mark it uniformly."""
    space = MarkingSpace(variant, r, n)
    edges = []
    for verts in space.subsets:
        kept = rng.below(1000) < keep_permille
        d = rng.below(space.base)
        if kept:
            marks = tuple(verts[p] for p in space.patterns[d])
            if space.variant is MarkVariant.TWO_EXTREME:
                marks = tuple(sorted(marks))
            edges.append(MarkedEdge(verts, marks))
    return MarkedHypergraph(n, r, space.variant, tuple(edges))


def planted_clique(variant: MarkVariant, r: int, n: int, rng: SplitMix64) -> MarkedHypergraph:
    """Clique whose marks are read off a random order, so an agreeing order exists.

    For 1-extreme edges the marked end (first or last) is drawn per edge.
    """
    space = MarkingSpace(variant, r, n)
    perm = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    pos = {v: i for i, v in enumerate(perm)}
    edges = []
    for verts in space.subsets:
        lo, hi = min(verts, key=pos.get), max(verts, key=pos.get)
        if space.variant is MarkVariant.TWO_EXTREME:
            marks = tuple(sorted((lo, hi)))
        elif space.variant is MarkVariant.MIN_MAX:
            marks = (lo, hi)
        elif space.variant is MarkVariant.MIN_MARKED:
            marks = (lo,)
        else:
            marks = (hi,) if rng.below(2) else (lo,)
        edges.append(MarkedEdge(verts, marks))
    return MarkedHypergraph(n, r, space.variant, tuple(edges), is_clique=True)


def perturb(H: MarkedHypergraph, rng: SplitMix64, flips: int) -> MarkedHypergraph:
    """Redraw the marks of ``flips`` uniformly chosen edges of a clique."""
    space = MarkingSpace(H.variant, H.r, H.n)
    digits = space.digits_of(H)
    for _ in range(flips):
        digits[rng.below(len(digits))] = rng.below(space.base)
    return space.hypergraph(digits)


# --- subset scans ----------------------------------------------------------

def decide_exists(H: MarkedHypergraph) -> bool:
    """Structured solver verdict, falling back to the oracle when the solver declines."""
    try:
        return solvers.solve(H).exists
    except ColoringSpaceTooLarge:
        return oracle.decide(H).exists


@dataclass(frozen=True)
class HellyScanReport:
    k: int
    subsets_checked: int
    failing_count: int
    failing_subsets: tuple[tuple[int, ...], ...]
    whole_exists: bool

    @property
    def all_pass(self) -> bool:
        return self.failing_count == 0


def scan_subsets(H: MarkedHypergraph, k: int, decide: Callable[[MarkedHypergraph], bool] = decide_exists) -> HellyScanReport:
    """Decide every k-subset (lexicographic order) and the whole vertex set."""
    if not H.r <= k <= H.n:
        raise BadArity(f"need r <= k <= n, got k={k}, r={H.r}, n={H.n}")
    checked, failing = 0, []
    for subset in itertools.combinations(H.vertices, k):
        checked += 1
        if not decide(H.induced(subset)):
            failing.append(subset)
    whole = decide(H)
    return HellyScanReport(k, checked, len(failing), tuple(failing[:MAX_LISTED]), whole)


# --- censuses --------------------------------------------------------------

@dataclass
class CensusReport:
    variant: MarkVariant
    r: int
    n: int
    k: int
    mode: str = "exhaustive"
    samples: Optional[int] = None
    seed: Optional[int] = None
    instances_total: int = 0
    instances_helly_k_pass: int = 0
    instances_whole_pass: int = 0
    counterexample_count: int = 0
    counterexamples: list[int] = field(default_factory=list)

    def merge(self, other: "CensusReport") -> "CensusReport":
        self.instances_total += other.instances_total
        self.instances_helly_k_pass += other.instances_helly_k_pass
        self.instances_whole_pass += other.instances_whole_pass
        self.counterexample_count += other.counterexample_count
        room = MAX_LISTED - len(self.counterexamples)
        self.counterexamples.extend(other.counterexamples[:max(room, 0)])
        return self


class _SubsetJudge:
    """Decides k-subsets of instances of one marking space, memoized by marking.

    An induced k-subset is relabelled monotonically, so its marking digits
    (the digits of its edges, in order) identify it up to that relabelling.
    """

    def __init__(self, space: MarkingSpace, k: int):
        self.space = space
        self.sub_space = MarkingSpace(space.variant, space.r, k)
        position = {s: i for i, s in enumerate(space.subsets)}
        self.edge_sets = [
            [position[e] for e in itertools.combinations(subset, space.r)]
            for subset in itertools.combinations(range(1, space.n + 1), k)
        ]
        self.cache: dict[tuple[int, ...], bool] = {}

    def subset_passes(self, key: tuple[int, ...]) -> bool:
        hit = self.cache.get(key)
        if hit is None:
            hit = self.cache[key] = decide_exists(self.sub_space.hypergraph(key))
        return hit

    def all_pass(self, digits: Sequence[int]) -> bool:
        return all(self.subset_passes(tuple(digits[i] for i in edges)) for edges in self.edge_sets)


def _evaluate(variant: MarkVariant, r: int, n: int, k: int, indices: Iterable[int]) -> CensusReport:
    space = MarkingSpace(variant, r, n)
    judge = _SubsetJudge(space, k)
    report = CensusReport(space.variant, r, n, k)
    for index in indices:
        digits = space.digits(index)
        report.instances_total += 1
        if not judge.all_pass(digits):
            # restricting an agreeing order gives agreeing orders on subsets
            continue
        report.instances_helly_k_pass += 1
        if decide_exists(space.hypergraph(digits)):
            report.instances_whole_pass += 1
        else:
            report.counterexample_count += 1
            if len(report.counterexamples) < MAX_LISTED:
                report.counterexamples.append(index)
    return report


def _evaluate_chunk(args):
    return _evaluate(*args)


def _run(variant, r, n, k, indices: list[int], jobs: int) -> CensusReport:
    if jobs <= 1 or len(indices) < 2:
        return _evaluate(variant, r, n, k, indices)
    size = -(-len(indices) // (jobs * 4))
    chunks = [(variant, r, n, k, indices[i:i + size]) for i in range(0, len(indices), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_evaluate_chunk, chunks))
    total = CensusReport(MarkVariant(variant), r, n, k)
    for part in parts:
        total.merge(part)
    return total


def census_exhaustive(variant: MarkVariant, r: int, n: int, k: int,
                      budget: int = DEFAULT_BUDGET, jobs: int = 1) -> CensusReport:
    """Check the Helly claim at k over every marking of the (r, n) clique."""
    space = MarkingSpace(variant, r, n)
    if not r <= k <= n:
        raise BadArity(f"need r <= k <= n, got k={k}, r={r}, n={n}")
    if space.size > budget:
        raise BudgetExceeded(f"{space.size} markings exceed the budget of {budget}")
    return _run(space.variant, r, n, k, list(range(space.size)), jobs)


def census_random(variant: MarkVariant, r: int, n: int, k: int, samples: int, seed: int,
                  jobs: int = 1) -> CensusReport:
    """Like :func:`census_exhaustive` over ``samples`` seeded uniform markings (repeats allowed)."""
    space = MarkingSpace(variant, r, n)
    if samples < 1:
        raise BadArity(f"samples must be positive, got {samples}")
    if not r <= k <= n:
        raise BadArity(f"need r <= k <= n, got k={k}, r={r}, n={n}")
    rng = SplitMix64(seed)
    indices = [space.index(space.random_digits(rng)) for _ in range(samples)]
    report = _run(space.variant, r, n, k, indices, jobs)
    report.mode, report.samples, report.seed = "random", samples, seed
    return report


# --- min-marked characterization -------------------------------------------

@dataclass
class EquivalenceReport:
    r: int
    n: int
    instances: int = 0
    forbidden_free: int = 0
    subsets_pass: int = 0
    whole_pass: int = 0
    predicate_mismatches: list[int] = field(default_factory=list)
    localized_mismatches: list[int] = field(default_factory=list)


def min_marked_equivalence(r: int, n: int, whole: Callable[[MarkedHypergraph], bool] = None,
                           budget: int = DEFAULT_BUDGET) -> EquivalenceReport:
    """Compare, on every min-marked (r, n) clique: no forbidden 2x2, all
    (r+1)-subsets realizable, and the whole clique realizable.

    Also compares the localized forbidden scan with the full one.  The
    whole-clique test defaults to the oracle.
    """
    if whole is None:
        whole = lambda H: oracle.decide(H).exists  # noqa: E731
    space = MarkingSpace(MarkVariant.MIN_MARKED, r, n)
    if space.size > budget:
        raise BudgetExceeded(f"{space.size} markings exceed the budget of {budget}")
    judge = _SubsetJudge(space, r + 1)
    report = EquivalenceReport(r, n)
    for index in range(space.size):
        digits = space.digits(index)
        H = space.hypergraph(digits)
        M = build_matrix(H)
        free = not find_forbidden(M, first_only=True)
        free_local = not find_forbidden(M, localized=True, first_only=True)
        subsets = judge.all_pass(digits)
        realizable = whole(H)
        report.instances += 1
        report.forbidden_free += free
        report.subsets_pass += subsets
        report.whole_pass += realizable
        if not free == subsets == realizable:
            report.predicate_mismatches.append(index)
        if free != free_local:
            report.localized_mismatches.append(index)
    return report
