"""Exact chromatic numbers and L(p,q) labeling numbers for small graphs."""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ng_chromatic.enhanced_logger import logger
from ng_chromatic.graph import (
    DerivedKind,
    Graph,
    derived_graph,
    derived_graphs,
    distance_matrix,
    square,
)
from ng_chromatic.types import Assignment


class VariantKind(str, Enum):
    """Chromatic parameter to compute."""

    PROPER = "proper"
    TWO_PROPER = "two-proper"
    INJECTIVE = "injective"
    SQUARE = "square"


# The derived graph whose chromatic number is the variant; None means G itself.
VARIANT_TARGETS: Dict[VariantKind, Optional[DerivedKind]] = {
    VariantKind.PROPER: None,
    VariantKind.TWO_PROPER: DerivedKind.DISTANCE_EXACTLY_TWO,
    VariantKind.INJECTIVE: DerivedKind.COMMON_NEIGHBOR,
    VariantKind.SQUARE: DerivedKind.DISTANCE_AT_MOST_TWO,
}


@dataclass(frozen=True)
class ColoringResult:
    """Optimal color count with a certificate using colors 1..value."""

    value: int
    assignment: Assignment = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:
        return {
            "value": self.value,
            "assignment": [self.assignment[v] for v in sorted(self.assignment)],
        }


@dataclass(frozen=True)
class LabelingResult:
    """λ(G;p,q) with a labeling into 0..value attaining the maximum label."""

    value: int
    labeling: Assignment = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:
        return {
            "value": self.value,
            "labeling": [self.labeling[v] for v in sorted(self.labeling)],
        }


def _popcount(x: int) -> int:
    return bin(x).count("1")


def max_clique_size(g: Graph) -> int:
    """Exact clique number by bitset branch and bound."""
    best = 0

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        while candidates:
            if size + _popcount(candidates) <= best:
                return
            low = candidates & -candidates
            candidates ^= low
            expand(size + 1, candidates & g.rows[low.bit_length() - 1])

    expand(0, (1 << g.order) - 1)
    return best


def _greedy(g: Graph) -> Tuple[int, Tuple[int, ...]]:
    colors = [0] * g.order
    for v in range(g.order):
        taken = 0
        for u in range(v):
            if g.rows[v] >> u & 1:
                taken |= 1 << colors[u]
        c = 1
        while taken >> c & 1:
            c += 1
        colors[v] = c
    return max(colors, default=0), tuple(colors)


def greedy_upper_bound(g: Graph) -> int:
    """First-fit coloring size in index order; at most Δ(g) + 1."""
    return _greedy(g)[0]


@lru_cache(maxsize=1 << 16)
def _branch_and_bound(g: Graph) -> Tuple[int, Tuple[int, ...]]:
    n = g.order
    if n == 0:
        return 0, ()
    lower = max_clique_size(g)
    upper, greedy_colors = _greedy(g)
    if lower == upper:
        return upper, greedy_colors
    logger.debug(f"Branch and bound on {n} vertices: clique {lower}, first-fit {upper}")

    rows = g.rows
    degrees = [_popcount(row) for row in rows]
    colors = [0] * n
    # Bit c of saturation[v] is set when a colored neighbor of v has color c.
    saturation = [0] * n
    best_value, best_colors = upper, greedy_colors

    def select() -> int:
        pick, pick_sat, pick_deg = -1, -1, -1
        for v in range(n):
            if colors[v]:
                continue
            sat = _popcount(saturation[v])
            if sat > pick_sat or (sat == pick_sat and degrees[v] > pick_deg):
                pick, pick_sat, pick_deg = v, sat, degrees[v]
        return pick

    def search(colored: int, used: int) -> bool:
        nonlocal best_value, best_colors
        if colored == n:
            best_value, best_colors = used, tuple(colors)
            return used == lower
        v = select()
        blocked = saturation[v]
        c = 1
        while c <= min(used + 1, best_value - 1):
            if not blocked >> c & 1:
                colors[v] = c
                touched = []
                bits = rows[v]
                while bits:
                    low = bits & -bits
                    bits ^= low
                    u = low.bit_length() - 1
                    if not colors[u] and not saturation[u] >> c & 1:
                        saturation[u] |= 1 << c
                        touched.append(u)
                done = search(colored + 1, max(used, c))
                for u in touched:
                    saturation[u] &= ~(1 << c)
                colors[v] = 0
                if done:
                    return True
            c += 1
        return False

    search(0, 0)
    return best_value, best_colors


def chromatic_number(g: Graph) -> ColoringResult:
    """Exact χ(g) by DSATUR branch and bound.

    The search is seeded with the clique number as lower bound and the
    first-fit coloring as incumbent. Vertices are picked by saturation, then
    degree, then lowest index, and colors are tried in ascending order, so
    the certificate is reproducible.
    """
    value, colors = _branch_and_bound(g)
    return ColoringResult(value, dict(enumerate(colors)))


def variant_target(g: Graph, kind: VariantKind) -> Graph:
    """The graph whose proper colorings are the ``kind`` colorings of g."""
    target = VARIANT_TARGETS[kind]
    return g if target is None else derived_graph(g, target)


def variant_chromatic(g: Graph, kind: VariantKind) -> ColoringResult:
    """χ, χ₂, χᵢ or χ_□ of g, with a certificate valid on the derived graph."""
    return chromatic_number(variant_target(g, kind))


def variant_chromatic_numbers(g: Graph) -> Dict[VariantKind, int]:
    """All four parameter values, building the derived graphs in one pass."""
    derived = derived_graphs(g)
    values = {VariantKind.PROPER: _branch_and_bound(g)[0]}
    for kind, target in VARIANT_TARGETS.items():
        if target is not None:
            values[kind] = _branch_and_bound(derived[target])[0]
    return values


def validate_coloring(g: Graph, assignment: Assignment) -> bool:
    """True if every vertex has a positive color and no edge is monochromatic."""
    if sorted(assignment) != list(range(g.order)):
        return False
    if any(color < 1 for color in assignment.values()):
        return False
    return all(
        assignment[u] != assignment[v]
        for v in range(g.order)
        for u in range(v)
        if g.rows[v] >> u & 1
    )


def brute_force_chromatic_number(g: Graph) -> int:
    """Smallest k admitting a proper k-coloring, by plain exhaustive search.

    Vertices are colored in index order with no ordering heuristic and no
    bounds; only used as an oracle on small graphs.
    """
    n = g.order
    if n == 0:
        return 0
    colors = [0] * n

    def extend(v: int, k: int) -> bool:
        if v == n:
            return True
        for c in range(1, k + 1):
            if all(colors[u] != c for u in range(v) if g.rows[v] >> u & 1):
                colors[v] = c
                if extend(v + 1, k):
                    return True
        colors[v] = 0
        return False

    k = 1
    while not extend(0, k):
        k += 1
    return k


def _band(label: int, width: int, k: int) -> int:
    """Labels in 0..k strictly closer than ``width`` to ``label``."""
    if width <= 0:
        return 0
    lo = max(0, label - width + 1)
    hi = min(k, label + width - 1)
    return ((1 << (hi - lo + 1)) - 1) << lo


def _labeling_search(
    n: int, near: List[List[int]], far: List[List[int]], p: int, q: int, k: int
) -> Optional[List[int]]:
    labels = [-1] * n
    domains = [(1 << (k + 1)) - 1] * n

    def assign(v: int) -> bool:
        if v == n:
            return True
        options = domains[v]
        while options:
            low = options & -options
            options ^= low
            label = low.bit_length() - 1
            saved = []
            feasible = True
            for group, width in ((near[v], p), (far[v], q)):
                blocked = _band(label, width, k)
                if not blocked:
                    continue
                for u in group:
                    if labels[u] < 0 and domains[u] & blocked:
                        saved.append((u, domains[u]))
                        domains[u] &= ~blocked
                        if not domains[u]:
                            feasible = False
                            break
                if not feasible:
                    break
            if feasible:
                labels[v] = label
                if assign(v + 1):
                    return True
                labels[v] = -1
            for u, domain in reversed(saved):
                domains[u] = domain
        return False

    return labels if assign(0) else None


def lpq_number(g: Graph, p: int, q: int) -> LabelingResult:
    """Exact λ(g;p,q) by increasing k with forward-checking backtracking.

    The starting k comes from clique sizes alone: a clique of g needs labels
    pairwise ``p`` apart, and a clique of g² pairwise ``min(p, q)`` apart.
    A zero coefficient imposes no constraint.
    """
    if p < 0 or q < 0:
        raise ValueError(f"L(p,q) coefficients must be non-negative, got ({p}, {q})")
    n = g.order
    if n == 0:
        return LabelingResult(0, {})
    dm = distance_matrix(g)
    near = [[u for u in range(n) if dm(v, u) == 1] for v in range(n)]
    far = [[u for u in range(n) if dm(v, u) == 2] for v in range(n)]

    lower = 0
    if p >= 1:
        lower = (max_clique_size(g) - 1) * p
    if min(p, q) >= 1:
        lower = max(lower, (max_clique_size(square(g)) - 1) * min(p, q))
    upper = (n - 1) * max(p, q)

    for k in range(lower, upper + 1):
        labels = _labeling_search(n, near, far, p, q, k)
        if labels is not None:
            logger.debug(f"L({p},{q}) labeling found at span {k} (start {lower})")
            return LabelingResult(k, dict(enumerate(labels)))
    raise RuntimeError(f"No L({p},{q}) labeling found up to span {upper}")


def validate_labeling(g: Graph, labeling: Assignment, p: int, q: int) -> bool:
    """True if ``labeling`` is a non-negative L(p,q) labeling of g."""
    if sorted(labeling) != list(range(g.order)):
        return False
    if any(label < 0 for label in labeling.values()):
        return False
    dm = distance_matrix(g)
    for v in range(g.order):
        for u in range(v):
            gap = abs(labeling[u] - labeling[v])
            if dm(u, v) == 1 and gap < p:
                return False
            if dm(u, v) == 2 and gap < q:
                return False
    return True
