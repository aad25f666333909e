"""Parameter profiles, Nordhaus-Gaddum checks and exhaustive sweeps."""

import math
import os
import time
from dataclasses import dataclass, field
from itertools import islice
from multiprocessing import Pool
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from ng_chromatic.coloring import VariantKind, variant_chromatic_numbers
from ng_chromatic.constructions import Family, FamilySpec, build
from ng_chromatic.enhanced_logger import logger
from ng_chromatic.formats import GRAPH6_MAX_ORDER, read_graph6_stream, write_graph6
from ng_chromatic.graph import (
    DegreeStats,
    Graph,
    all_pairs_share_neighbor,
    complement,
    degree_stats,
    from_edge_bitmask,
    is_triangle_free,
    pair_table,
)
from ng_chromatic.types import SweepProgress

# 2^28 labeled graphs at order 8 is the practical ceiling.
MAX_ENUMERATION_ORDER = 8
DEFAULT_CHUNK_SIZE = 4096
MAX_WORKERS = 32
WITNESS_LIMIT = 16


class SweepError(ValueError):
    """Raised for an invalid sweep source or parameter."""


@dataclass(frozen=True)
class SideProfile:
    """The four chromatic parameters of one graph plus its structure."""

    chi: int
    chi2: int
    chi_injective: int
    chi_square: int
    degrees: DegreeStats
    triangle_free: bool
    pairs_share_neighbor: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "chi": self.chi,
            "chi2": self.chi2,
            "chi_injective": self.chi_injective,
            "chi_square": self.chi_square,
            **self.degrees.to_dict(),
            "triangle_free": self.triangle_free,
        }


@dataclass(frozen=True)
class ParameterProfile:
    """All eight parameter values for a graph and its complement."""

    graph: Graph
    g: SideProfile
    complement: SideProfile

    @property
    def order(self) -> int:
        return self.graph.order

    @property
    def graph6(self) -> Optional[str]:
        if self.order > GRAPH6_MAX_ORDER:
            return None
        return write_graph6(self.graph)

    @property
    def sides(self) -> Tuple[SideProfile, SideProfile]:
        return self.g, self.complement

    def to_dict(self) -> Dict[str, object]:
        return {
            "order": self.order,
            "graph6": self.graph6,
            "g": self.g.to_dict(),
            "complement": self.complement.to_dict(),
        }


def _side(g: Graph) -> SideProfile:
    values = variant_chromatic_numbers(g)
    return SideProfile(
        chi=values[VariantKind.PROPER],
        chi2=values[VariantKind.TWO_PROPER],
        chi_injective=values[VariantKind.INJECTIVE],
        chi_square=values[VariantKind.SQUARE],
        degrees=degree_stats(g),
        triangle_free=is_triangle_free(g),
        pairs_share_neighbor=all_pairs_share_neighbor(g),
    )


def evaluate_graph(g: Graph) -> ParameterProfile:
    """Compute every parameter exactly on ``g`` and its complement."""
    return ParameterProfile(g, _side(g), _side(complement(g)))


@dataclass(frozen=True)
class CheckResult:
    """Verdict of one check on one profile.

    ``slack`` is bound minus attained value, oriented so that slack >= 0
    means the bound holds; two-sided checks keep the smaller side.
    Predicate checks carry slack 0 (or -1 when violated) and are never
    extremal.
    """

    check_id: str
    applicable: bool
    holds: bool
    slack: int
    extremal: bool
    exception: bool = False
    detail: str = ""

    @property
    def violated(self) -> bool:
        return self.applicable and not self.holds

    def to_dict(self) -> Dict[str, object]:
        return {
            "check_id": self.check_id,
            "applicable": self.applicable,
            "holds": self.holds,
            "slack": self.slack,
            "extremal": self.extremal,
            "exception": self.exception,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class TheoremReport:
    """Results of every registered check on one profile."""

    order: int
    graph6: Optional[str]
    results: Tuple[CheckResult, ...]

    @property
    def violations(self) -> List[CheckResult]:
        return [r for r in self.results if r.violated]

    def get(self, check_id: str) -> CheckResult:
        for result in self.results:
            if result.check_id == check_id:
                return result
        raise KeyError(check_id)

    def to_dict(self) -> Dict[str, object]:
        return {
            "order": self.order,
            "graph6": self.graph6,
            "checks": [r.to_dict() for r in self.results],
        }


CheckFunction = Callable[[ParameterProfile], CheckResult]

# Registration order is the report order.
CHECKS: Dict[str, CheckFunction] = {}


def _check(check_id: str) -> Callable[[CheckFunction], CheckFunction]:
    def register(func: CheckFunction) -> CheckFunction:
        CHECKS[check_id] = func
        return func

    return register


def _skip(check_id: str, reason: str, exception: bool = False) -> CheckResult:
    return CheckResult(check_id, False, True, 0, False, exception, reason)


def _bounded(
    check_id: str,
    value: int,
    lower: Optional[int] = None,
    upper: Optional[int] = None,
    label: str = "value",
) -> CheckResult:
    slacks = []
    if lower is not None:
        slacks.append(value - lower)
    if upper is not None:
        slacks.append(upper - value)
    slack = min(slacks)
    holds = slack >= 0
    low = "" if lower is None else f"{lower} <= "
    high = "" if upper is None else f" <= {upper}"
    return CheckResult(
        check_id,
        True,
        holds,
        slack,
        holds and 0 in slacks,
        detail=f"{low}{label} {value}{high}",
    )


def _predicate(check_id: str, holds: bool, detail: str) -> CheckResult:
    return CheckResult(check_id, True, holds, 0 if holds else -1, False, detail=detail)


def _ceil_two_sqrt(n: int) -> int:
    """Smallest integer s with s >= 2·sqrt(n)."""
    s = math.isqrt(4 * n)
    return s if s * s == 4 * n else s + 1


def small_order_shape(p: ParameterProfile) -> Optional[str]:
    """Name the listed small-order exception graph ``p`` is a labeled copy of.

    On at most four vertices these graphs are determined by order, edge count
    and degree sequence alone.
    """
    n = p.order
    degrees = p.g.degrees
    edge_total = sum(degrees.degree_sequence) // 2
    if n == 2:
        return "K2" if edge_total == 1 else "K2-bar"
    if n == 3 and edge_total in (1, 2):
        return "P3" if edge_total == 2 else "P3-bar"
    if n == 4 and degrees.is_regular and degrees.max_degree in (1, 2):
        return "C4" if degrees.max_degree == 2 else "C4-bar"
    return None


INJ_SUM_EXCEPTIONS = frozenset({"C4", "C4-bar"})
INJ_PROD_EXCEPTIONS = frozenset({"K2", "K2-bar", "P3", "P3-bar", "C4", "C4-bar"})


def _inj_sum(p: ParameterProfile) -> int:
    return p.g.chi_injective + p.complement.chi_injective


def _inj_prod(p: ParameterProfile) -> int:
    return p.g.chi_injective * p.complement.chi_injective


@_check("NG-CHI-SUM")
def _ng_chi_sum(p: ParameterProfile) -> CheckResult:
    """2·sqrt(n) <= χ(G) + χ(Ḡ) <= n + 1"""
    n = p.order
    if n < 1:
        return _skip("NG-CHI-SUM", "empty vertex set")
    value = p.g.chi + p.complement.chi
    return _bounded("NG-CHI-SUM", value, _ceil_two_sqrt(n), n + 1, "sum")


@_check("NG-CHI-PROD")
def _ng_chi_prod(p: ParameterProfile) -> CheckResult:
    """n <= χ(G)·χ(Ḡ) <= (n + 1)²/4"""
    n = p.order
    if n < 1:
        return _skip("NG-CHI-PROD", "empty vertex set")
    value = p.g.chi * p.complement.chi
    return _bounded("NG-CHI-PROD", value, n, (n + 1) ** 2 // 4, "product")


@_check("TWOPROP-SUM")
def _twoprop_sum(p: ParameterProfile) -> CheckResult:
    """2 <= χ₂(G) + χ₂(Ḡ) <= n + 1"""
    n = p.order
    if n < 1:
        return _skip("TWOPROP-SUM", "empty vertex set")
    value = p.g.chi2 + p.complement.chi2
    return _bounded("TWOPROP-SUM", value, 2, n + 1, "sum")


@_check("TWOPROP-PROD")
def _twoprop_prod(p: ParameterProfile) -> CheckResult:
    """1 <= χ₂(G)·χ₂(Ḡ) <= (n + 1)²/4"""
    n = p.order
    if n < 1:
        return _skip("TWOPROP-PROD", "empty vertex set")
    value = p.g.chi2 * p.complement.chi2
    return _bounded("TWOPROP-PROD", value, 1, (n + 1) ** 2 // 4, "product")


@_check("INJ-SUM")
def _inj_sum_check(p: ParameterProfile) -> CheckResult:
    """n (n = 5 or even) or n + 1 (odd n >= 7) <= χᵢ(G) + χᵢ(Ḡ) <= 2n"""
    n = p.order
    if n < 5:
        shape = small_order_shape(p)
        return _skip(
            "INJ-SUM",
            f"order {n} below 5" + (f"; small-order exception {shape}" if shape in INJ_SUM_EXCEPTIONS else ""),
            exception=shape in INJ_SUM_EXCEPTIONS,
        )
    lower = n + 1 if n % 2 == 1 and n >= 7 else n
    return _bounded("INJ-SUM", _inj_sum(p), lower, 2 * n, "sum")


@_check("INJ-PROD")
def _inj_prod_check(p: ParameterProfile) -> CheckResult:
    """n <= χᵢ(G)·χᵢ(Ḡ) <= n²"""
    n = p.order
    if n < 5:
        shape = small_order_shape(p)
        return _skip(
            "INJ-PROD",
            f"order {n} below 5" + (f"; small-order exception {shape}" if shape in INJ_PROD_EXCEPTIONS else ""),
            exception=shape in INJ_PROD_EXCEPTIONS,
        )
    return _bounded("INJ-PROD", _inj_prod(p), n, n * n, "product")


@_check("INJ-SUM-SMALL")
def _inj_sum_small(p: ParameterProfile) -> CheckResult:
    """n <= χᵢ(G) + χᵢ(Ḡ) <= 2n for n <= 4, except C4 and its complement"""
    n = p.order
    if not 1 <= n <= 4:
        return _skip("INJ-SUM-SMALL", f"order {n} outside 1..4")
    shape = small_order_shape(p)
    if shape in INJ_SUM_EXCEPTIONS:
        return _skip("INJ-SUM-SMALL", f"small-order exception {shape}", exception=True)
    return _bounded("INJ-SUM-SMALL", _inj_sum(p), n, 2 * n, "sum")


@_check("INJ-PROD-SMALL")
def _inj_prod_small(p: ParameterProfile) -> CheckResult:
    """n <= χᵢ(G)·χᵢ(Ḡ) <= n² for n <= 4, except K2, P3, C4 and complements"""
    n = p.order
    if not 1 <= n <= 4:
        return _skip("INJ-PROD-SMALL", f"order {n} outside 1..4")
    shape = small_order_shape(p)
    if shape in INJ_PROD_EXCEPTIONS:
        return _skip("INJ-PROD-SMALL", f"small-order exception {shape}", exception=True)
    return _bounded("INJ-PROD-SMALL", _inj_prod(p), n, n * n, "product")


@_check("INJ-SUM-STRICT")
def _inj_sum_strict(p: ParameterProfile) -> CheckResult:
    """χᵢ(G) + χᵢ(Ḡ) <= 2n - 1 for 2 <= n <= 8"""
    n = p.order
    if not 2 <= n <= 8:
        return _skip("INJ-SUM-STRICT", f"order {n} outside 2..8")
    return _bounded("INJ-SUM-STRICT", _inj_sum(p), upper=2 * n - 1, label="sum")


@_check("INJ-LEM4-1")
def _inj_lemma4_dense(p: ParameterProfile) -> CheckResult:
    """δ >= (n + 1)/2 implies χᵢ = n (n >= 5)"""
    n = p.order
    if n < 5:
        return _skip("INJ-LEM4-1", f"order {n} below 5")
    hits = [side for side in p.sides if 2 * side.degrees.min_degree >= n + 1]
    if not hits:
        return _skip("INJ-LEM4-1", "minimum degree below (n + 1)/2 on both sides")
    holds = all(side.chi_injective == n for side in hits)
    values = ", ".join(str(side.chi_injective) for side in hits)
    return _predicate("INJ-LEM4-1", holds, f"χᵢ {values} with n {n}")


@_check("INJ-LEM4-2")
def _inj_lemma4_half(p: ParameterProfile) -> CheckResult:
    """δ = ⌊(n - 1)/2⌋ implies χᵢ >= δ + 1 (n >= 5)"""
    n = p.order
    if n < 5:
        return _skip("INJ-LEM4-2", f"order {n} below 5")
    target = (n - 1) // 2
    hits = [side for side in p.sides if side.degrees.min_degree == target]
    if not hits:
        return _skip("INJ-LEM4-2", f"minimum degree differs from {target} on both sides")
    side = min(hits, key=lambda s: s.chi_injective)
    return _bounded("INJ-LEM4-2", side.chi_injective, lower=target + 1, label="χᵢ")


@_check("INJ-LEM5")
def _inj_lemma5(p: ParameterProfile) -> CheckResult:
    """k-regular G: sum >= n + 1 if k > n/2 or k < (n - 2)/2, >= n if k = n/2 or (n - 2)/2"""
    n = p.order
    if n < 5:
        return _skip("INJ-LEM5", f"order {n} below 5")
    if not p.g.degrees.is_regular:
        return _skip("INJ-LEM5", "graph is not regular")
    k = p.g.degrees.max_degree
    if 2 * k > n or 2 * k < n - 2:
        lower = n + 1
    elif 2 * k in (n, n - 2):
        lower = n
    else:
        return _skip("INJ-LEM5", f"regular of degree {k} = (n - 1)/2")
    return _bounded("INJ-LEM5", _inj_sum(p), lower, 2 * n, "sum")


@_check("INJ-DEGREE")
def _inj_degree(p: ParameterProfile) -> CheckResult:
    """Δ <= χᵢ <= n on both sides"""
    n = p.order
    if n < 1:
        return _skip("INJ-DEGREE", "empty vertex set")
    results = [
        _bounded("INJ-DEGREE", side.chi_injective, side.degrees.max_degree, n, "χᵢ")
        for side in p.sides
    ]
    return min(results, key=lambda r: r.slack)


@_check("INJ-FULL")
def _inj_full(p: ParameterProfile) -> CheckResult:
    """χᵢ = n exactly when every two vertices share a neighbor"""
    n = p.order
    if n < 2:
        return _skip("INJ-FULL", f"order {n} below 2")
    holds = all((side.chi_injective == n) == side.pairs_share_neighbor for side in p.sides)
    return _predicate("INJ-FULL", holds, f"χᵢ {p.g.chi_injective}/{p.complement.chi_injective} with n {n}")


@_check("SQ-SUM")
def _sq_sum(p: ParameterProfile) -> CheckResult:
    """n + 1 <= χ(G²) + χ(Ḡ²) <= 2n"""
    n = p.order
    if n < 1:
        return _skip("SQ-SUM", "empty vertex set")
    value = p.g.chi_square + p.complement.chi_square
    return _bounded("SQ-SUM", value, n + 1, 2 * n, "sum")


@_check("SQ-SUM-SMALL")
def _sq_sum_small(p: ParameterProfile) -> CheckResult:
    """χ(G²) + χ(Ḡ²) <= 2n - 1 for 2 <= n <= 4"""
    n = p.order
    if not 2 <= n <= 4:
        return _skip("SQ-SUM-SMALL", f"order {n} outside 2..4")
    value = p.g.chi_square + p.complement.chi_square
    return _bounded("SQ-SUM-SMALL", value, upper=2 * n - 1, label="sum")


@_check("SQ-PROD")
def _sq_prod(p: ParameterProfile) -> CheckResult:
    """n <= χ(G²)·χ(Ḡ²) <= n²"""
    n = p.order
    if n < 1:
        return _skip("SQ-PROD", "empty vertex set")
    value = p.g.chi_square * p.complement.chi_square
    return _bounded("SQ-PROD", value, n, n * n, "product")


@_check("CHAIN")
def _chain(p: ParameterProfile) -> CheckResult:
    """χ₂ <= χᵢ <= χ_□, χ <= χ_□, and χᵢ = χ₂ when triangle-free"""
    holds = all(
        side.chi2 <= side.chi_injective <= side.chi_square
        and side.chi <= side.chi_square
        and (not side.triangle_free or side.chi_injective == side.chi2)
        for side in p.sides
    )
    return _predicate("CHAIN", holds, "variant ordering on both sides")


def check_theorems(p: ParameterProfile) -> TheoremReport:
    """Evaluate every registered check against a complete profile."""
    return TheoremReport(
        order=p.order,
        graph6=p.graph6,
        results=tuple(check(p) for check in CHECKS.values()),
    )


def _smaller(a: Optional[str], b: Optional[str]) -> Optional[str]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass
class CheckTally:
    """Aggregate counts for one check over many graphs."""

    applicable_count: int = 0
    violation_count: int = 0
    extremal_count: int = 0
    exception_count: int = 0
    extremal_witness: Optional[str] = None
    violation_witness: Optional[str] = None
    exception_witnesses: List[str] = field(default_factory=list)

    def record(self, result: CheckResult, witness: Callable[[], str]) -> None:
        if result.exception:
            self.exception_count += 1
            self._add_exception(witness())
        if not result.applicable:
            return
        self.applicable_count += 1
        if not result.holds:
            self.violation_count += 1
            self.violation_witness = _smaller(self.violation_witness, witness())
        elif result.extremal:
            self.extremal_count += 1
            self.extremal_witness = _smaller(self.extremal_witness, witness())

    def _add_exception(self, graph6: str) -> None:
        if graph6 not in self.exception_witnesses:
            self.exception_witnesses = sorted(self.exception_witnesses + [graph6])[:WITNESS_LIMIT]

    def merge(self, other: "CheckTally") -> None:
        self.applicable_count += other.applicable_count
        self.violation_count += other.violation_count
        self.extremal_count += other.extremal_count
        self.exception_count += other.exception_count
        self.extremal_witness = _smaller(self.extremal_witness, other.extremal_witness)
        self.violation_witness = _smaller(self.violation_witness, other.violation_witness)
        merged = set(self.exception_witnesses) | set(other.exception_witnesses)
        self.exception_witnesses = sorted(merged)[:WITNESS_LIMIT]

    def to_dict(self) -> Dict[str, object]:
        return {
            "applicable_count": self.applicable_count,
            "violation_count": self.violation_count,
            "extremal_count": self.extremal_count,
            "exception_count": self.exception_count,
            "extremal_witness": self.extremal_witness,
            "violation_witness": self.violation_witness,
            "exception_witnesses": list(self.exception_witnesses),
        }


@dataclass
class SweepSummary:
    """Aggregate verdicts over a set of graphs.

    Merging is commutative and witnesses are the lexicographically smallest
    graph6 strings, so the result does not depend on how the work was split.
    ``duration_seconds`` is the only non-deterministic field.
    """

    orders: List[int] = field(default_factory=list)
    graph_count: int = 0
    checks: Dict[str, CheckTally] = field(
        default_factory=lambda: {check_id: CheckTally() for check_id in CHECKS}
    )
    duration_seconds: float = 0.0

    @property
    def violation_count(self) -> int:
        return sum(tally.violation_count for tally in self.checks.values())

    def add(self, g: Graph) -> TheoremReport:
        """Evaluate, check and tally one graph."""
        report = check_theorems(evaluate_graph(g))
        cached: List[str] = []

        def witness() -> str:
            if not cached:
                cached.append(report.graph6 or "")
            return cached[0]

        for result in report.results:
            self.checks[result.check_id].record(result, witness)
        self.graph_count += 1
        if g.order not in self.orders:
            self.orders = sorted(self.orders + [g.order])
        return report

    def merge(self, other: "SweepSummary") -> None:
        self.graph_count += other.graph_count
        self.orders = sorted(set(self.orders) | set(other.orders))
        for check_id, tally in other.checks.items():
            self.checks.setdefault(check_id, CheckTally()).merge(tally)

    def to_dict(self) -> Dict[str, object]:
        return {
            "orders": list(self.orders),
            "graph_count": self.graph_count,
            "violation_count": self.violation_count,
            "duration_seconds": round(self.duration_seconds, 3),
            "checks": {check_id: tally.to_dict() for check_id, tally in self.checks.items()},
        }


def _validate_order(n: int) -> None:
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise SweepError(
            f"Labeled enumeration supports orders 1..{MAX_ENUMERATION_ORDER}, got {n}"
        )


def labeled_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Graph]:
    """Yield every labeled graph on ``n`` vertices in ascending edge-bitmask order.

    ``start``/``stop`` restrict the enumeration to a bitmask range.

    Raises:
        SweepError: If ``n`` is outside 1..8.
    """
    _validate_order(n)
    total = labeled_count(n)
    stop = total if stop is None else min(stop, total)
    pairs = pair_table(n)
    for mask in range(start, stop):
        yield from_edge_bitmask(n, mask, pairs)


def enumerate_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Yield graphs from graph6 text lines; errors carry the line number."""
    for _, g in read_graph6_stream(lines):
        yield g


def _sweep_mask_range(task: Tuple[int, int, int]) -> SweepSummary:
    n, start, stop = task
    summary = SweepSummary()
    for g in enumerate_labeled(n, start, stop):
        summary.add(g)
    return summary


def _sweep_graphs(graphs: List[Graph]) -> SweepSummary:
    summary = SweepSummary()
    for g in graphs:
        summary.add(g)
    return summary


def _graph_chunks(graphs: Iterator[Graph], chunk_size: int) -> Iterator[List[Graph]]:
    while True:
        chunk = list(islice(graphs, chunk_size))
        if not chunk:
            return
        yield chunk


def default_workers() -> int:
    return max(1, min(os.cpu_count() or 1, MAX_WORKERS))


def sweep(
    orders: Optional[Sequence[int]] = None,
    stream: Optional[Iterable[str]] = None,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    progress: Optional[SweepProgress] = None,
) -> SweepSummary:
    """Check every graph of the given orders, or every graph in a graph6 stream.

    Work is split into chunks of ``chunk_size`` graphs; with ``workers`` > 1
    the chunks run in a process pool. The aggregate is identical for any
    worker count or chunk size.

    Raises:
        SweepError: If both or neither source is given, the order range is
            empty, or a parameter is out of range.
        Graph6Error: If a stream record is malformed; the sweep stops there.
    """
    if (orders is None) == (stream is None):
        raise SweepError("Provide exactly one of an order range or a graph6 stream")
    if workers < 1:
        raise SweepError(f"Worker count must be at least 1, got {workers}")
    if chunk_size < 1:
        raise SweepError(f"Chunk size must be at least 1, got {chunk_size}")
    if orders is not None and not orders:
        raise SweepError("Order range is empty")

    started = time.perf_counter()
    total: Optional[int] = None
    if orders is not None:
        for n in orders:
            _validate_order(n)
        total = sum(labeled_count(n) for n in orders)
        tasks: Iterable = (
            (n, start, min(start + chunk_size, labeled_count(n)))
            for n in orders
            for start in range(0, labeled_count(n), chunk_size)
        )
        worker: Callable = _sweep_mask_range
        logger.debug(f"Sweeping {total} labeled graphs of orders {list(orders)}")
    else:
        tasks = _graph_chunks(enumerate_graph6(stream), chunk_size)
        worker = _sweep_graphs
        logger.debug("Sweeping graph6 stream")

    summary = SweepSummary(orders=sorted(set(orders)) if orders is not None else [])

    def absorb(part: SweepSummary) -> None:
        summary.merge(part)
        logger.debug(f"Chunk of {part.graph_count} done, {summary.graph_count}/{total or '?'} graphs")
        if progress is not None:
            progress(summary.graph_count, total)

    if workers == 1:
        for task in tasks:
            absorb(worker(task))
    else:
        with Pool(processes=workers) as pool:
            for part in pool.imap_unordered(worker, tasks):
                absorb(part)

    summary.duration_seconds = time.perf_counter() - started
    logger.debug(
        f"Sweep finished: {summary.graph_count} graphs in {summary.duration_seconds:.2f}s"
    )
    return summary


@dataclass(frozen=True)
class ConstructionOutcome:
    """Extremality of one constructed witness for one check."""

    spec: FamilySpec
    check_id: str
    result: CheckResult

    def to_dict(self) -> Dict[str, object]:
        return {"family": str(self.spec), **self.result.to_dict()}


# Constructed witnesses and the bound each one attains.
EXTREMAL_FAMILIES: Tuple[Tuple[FamilySpec, str], ...] = (
    *((FamilySpec(Family.H_ODD, (k,)), "TWOPROP-SUM") for k in (6, 7)),
    *((FamilySpec(Family.H_EVEN, (k,)), "TWOPROP-SUM") for k in (6, 7)),
    *((FamilySpec(Family.COMPLETE, (n,)), "TWOPROP-SUM") for n in (3, 5)),
    *((FamilySpec(Family.G_INJECTIVE, (n,)), "INJ-SUM") for n in (9, 10, 11)),
    *((FamilySpec(Family.G_INJECTIVE, (n,)), "INJ-PROD") for n in (9, 10, 11)),
    (FamilySpec(Family.PATH, (5,)), "INJ-SUM"),
    *((FamilySpec(Family.COMPLETE_BIPARTITE, (k, k)), "INJ-SUM") for k in (3, 4)),
    *((FamilySpec(Family.COMPLETE_BIPARTITE, (k + 1, k)), "INJ-SUM") for k in (3, 4)),
    *((FamilySpec(Family.COMPLETE, (n,)), "INJ-PROD") for n in (5, 6, 7)),
    *((FamilySpec(Family.F_SQUARE, (n,)), "SQ-SUM") for n in range(5, 10)),
    *((FamilySpec(Family.F_SQUARE, (n,)), "SQ-PROD") for n in range(5, 10)),
    *((FamilySpec(Family.COMPLETE, (n,)), "SQ-SUM") for n in range(3, 9)),
    *((FamilySpec(Family.COMPLETE, (n,)), "SQ-PROD") for n in range(3, 9)),
)


def sweep_constructions(
    families: Sequence[Tuple[FamilySpec, str]] = EXTREMAL_FAMILIES,
) -> List[ConstructionOutcome]:
    """Evaluate each constructed witness and report its verdict on its check."""
    reports: Dict[FamilySpec, TheoremReport] = {}
    outcomes = []
    for spec, check_id in families:
        if spec not in reports:
            logger.debug(f"Evaluating {spec}")
            reports[spec] = check_theorems(evaluate_graph(build(spec)))
        outcomes.append(ConstructionOutcome(spec, check_id, reports[spec].get(check_id)))
    return outcomes
