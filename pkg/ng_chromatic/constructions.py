"""Builders for the graph families used as extremal witnesses.

Vertex layouts are fixed so that graph6 output is reproducible:

* complete multipartite: parts occupy consecutive index blocks, largest first;
* H-graph(k): x0..x(k-1) are 0..k-1 and y0..y(k-1) are k..2k-1; the extra
  vertices of the odd and even variants come last;
* G-injective(3k+t): blocks X, Y, Z of size k in that order, then the t
  extra vertices;
* F-square(n): the 5-cycle x1..x5 on 0..4, then y1..y(n-5).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Sequence, Tuple

from ng_chromatic.graph import Graph, from_edges
from ng_chromatic.types import Edge


class FamilyError(ValueError):
    """Raised when a family parameter is outside its allowed range."""


class Family(str, Enum):
    """Named graph families."""

    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    EMPTY = "empty"
    COMPLETE_BIPARTITE = "complete-bipartite"
    MULTIPARTITE = "multipartite"
    H_GRAPH = "h-graph"
    H_ODD = "h-odd"
    H_EVEN = "h-even"
    G_INJECTIVE = "g-injective"
    F_SQUARE = "f-square"
    PETERSEN = "petersen"


@dataclass(frozen=True)
class FamilySpec:
    """A family together with its integer parameters."""

    family: Family
    params: Tuple[int, ...] = ()

    @classmethod
    def parse(cls, tokens: Sequence[str]) -> "FamilySpec":
        """Parse ``["f-square", "7"]`` style tokens.

        Raises:
            FamilyError: On an unknown family name or non-integer parameter.
        """
        if not tokens:
            raise FamilyError("Missing family name")
        try:
            family = Family(tokens[0].lower())
        except ValueError:
            names = ", ".join(f.value for f in Family)
            raise FamilyError(f"Unknown family '{tokens[0]}' (expected one of: {names})")
        try:
            params = tuple(int(token) for token in tokens[1:])
        except ValueError:
            raise FamilyError(f"Family parameters must be integers, got {list(tokens[1:])}")
        return cls(family, params)

    def __str__(self) -> str:
        return " ".join([self.family.value, *(str(p) for p in self.params)])


def _arity(spec: FamilySpec, count: int) -> Tuple[int, ...]:
    if len(spec.params) != count:
        raise FamilyError(
            f"{spec.family.value} takes {count} parameter(s), got {len(spec.params)}"
        )
    return spec.params


def _at_least(name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise FamilyError(f"{name} requires a parameter of at least {minimum}, got {value}")


def _clique(vertices: Sequence[int]) -> List[Edge]:
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]


def path(n: int) -> Graph:
    _at_least("path", n, 1)
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _at_least("cycle", n, 3)
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _at_least("complete", n, 1)
    return from_edges(n, _clique(range(n)))


def empty(n: int) -> Graph:
    _at_least("empty", n, 0)
    return from_edges(n, [])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """K_{n1,...,nr} with n1 >= n2 >= ... >= nr >= 1."""
    if not parts:
        raise FamilyError("multipartite requires at least one part")
    if any(size < 1 for size in parts):
        raise FamilyError(f"Part sizes must be positive, got {list(parts)}")
    if list(parts) != sorted(parts, reverse=True):
        raise FamilyError(f"Part sizes must be in descending order, got {list(parts)}")
    block_of: List[int] = []
    for block, size in enumerate(parts):
        block_of.extend([block] * size)
    n = len(block_of)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if block_of[u] != block_of[v]]
    return from_edges(n, pairs)


def complete_bipartite(a: int, b: int) -> Graph:
    _at_least("complete-bipartite", min(a, b), 1)
    return complete_multipartite(sorted((a, b), reverse=True))


def _h_edges(k: int) -> List[Edge]:
    half = k // 2
    pairs = _clique([k + j for j in range(k)])
    for i in range(k):
        for t in range(half + 1):
            if t != half - 1:
                pairs.append((i, k + (i + t) % k))
    return pairs


def h_graph(k: int) -> Graph:
    """X = {x_i} independent, Y = {y_i} a clique, x_i joined to
    y_i, ..., y_{i+⌊k/2⌋} except y_{i+⌊k/2⌋-1}, indices mod k."""
    _at_least("h-graph", k, 6)
    return from_edges(2 * k, _h_edges(k))


def h_odd(k: int) -> Graph:
    """H-graph(k) plus one vertex joined to all of Y."""
    _at_least("h-odd", k, 6)
    apex = 2 * k
    return from_edges(2 * k + 1, _h_edges(k) + [(apex, k + j) for j in range(k)])


def h_even(k: int) -> Graph:
    """H-graph(k) plus two non-adjacent vertices, each joined to all of Y."""
    _at_least("h-even", k, 6)
    extra = [(2 * k + a, k + j) for a in (0, 1) for j in range(k)]
    return from_edges(2 * k + 2, _h_edges(k) + extra)


def h_complement_description(k: int) -> Graph:
    """Direct description of the complement of H-graph(k).

    X is a clique, Y is independent, and y_i is joined to x_i, ...,
    x_{i+⌈k/2⌉} except x_{i+⌈k/2⌉-1}. It equals the complement of
    ``h_graph(k)`` after renumbering x_i as x_{i-1}.
    """
    _at_least("h-graph", k, 6)
    ceil_half = k - k // 2
    pairs = _clique(range(k))
    for i in range(k):
        for t in range(ceil_half + 1):
            if t != ceil_half - 1:
                pairs.append((k + i, (i + t) % k))
    return from_edges(2 * k, pairs)


def g_injective(n: int) -> Graph:
    """Three k-cliques X, Y, Z with {x_i, y_i, z_i} a triangle, n = 3k + t.

    For t >= 1 the extra vertices are joined to all of X; when t = 2 the two
    extra vertices are not adjacent to each other.
    """
    _at_least("g-injective", n, 9)
    k, t = divmod(n, 3)
    xs = list(range(k))
    ys = [k + i for i in range(k)]
    zs = [2 * k + i for i in range(k)]
    pairs = _clique(xs) + _clique(ys) + _clique(zs)
    for i in range(k):
        pairs.extend([(xs[i], ys[i]), (xs[i], zs[i]), (ys[i], zs[i])])
    for extra in range(3 * k, 3 * k + t):
        pairs.extend((extra, x) for x in xs)
    return from_edges(n, pairs)


def f_square(n: int) -> Graph:
    """5-cycle x1..x5 plus an independent set whose vertices see x1 and x3."""
    _at_least("f-square", n, 5)
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    for y in range(5, n):
        pairs.extend([(y, 0), (y, 2)])
    return from_edges(n, pairs)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


_BUILDERS: Dict[Family, Callable[[FamilySpec], Graph]] = {
    Family.PATH: lambda s: path(*_arity(s, 1)),
    Family.CYCLE: lambda s: cycle(*_arity(s, 1)),
    Family.COMPLETE: lambda s: complete(*_arity(s, 1)),
    Family.EMPTY: lambda s: empty(*_arity(s, 1)),
    Family.COMPLETE_BIPARTITE: lambda s: complete_bipartite(*_arity(s, 2)),
    Family.MULTIPARTITE: lambda s: complete_multipartite(s.params),
    Family.H_GRAPH: lambda s: h_graph(*_arity(s, 1)),
    Family.H_ODD: lambda s: h_odd(*_arity(s, 1)),
    Family.H_EVEN: lambda s: h_even(*_arity(s, 1)),
    Family.G_INJECTIVE: lambda s: g_injective(*_arity(s, 1)),
    Family.F_SQUARE: lambda s: f_square(*_arity(s, 1)),
    Family.PETERSEN: lambda s: petersen(*_arity(s, 0)),
}


def build(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``.

    Raises:
        FamilyError: If a parameter is below the family minimum or the
            parameter count is wrong.
    """
    return _BUILDERS[spec.family](spec)


def vertex_labels(spec: FamilySpec) -> List[str]:
    """Human-readable vertex names matching the layout of ``build(spec)``."""
    g = build(spec)
    family = spec.family
    if family in (Family.H_GRAPH, Family.H_ODD, Family.H_EVEN):
        k = spec.params[0]
        names = [f"x{i}" for i in range(k)] + [f"y{i}" for i in range(k)]
        if family == Family.H_ODD:
            names.append("inf")
        elif family == Family.H_EVEN:
            names.extend(["inf1", "inf2"])
        return names
    if family == Family.G_INJECTIVE:
        k, t = divmod(spec.params[0], 3)
        names = [f"{block}{i + 1}" for block in "xyz" for i in range(k)]
        if t == 1:
            names.append("inf")
        elif t == 2:
            names.extend(["inf1", "inf2"])
        return names
    if family == Family.F_SQUARE:
        return [f"x{i + 1}" for i in range(5)] + [f"y{i + 1}" for i in range(g.order - 5)]
    return [str(v) for v in range(g.order)]
