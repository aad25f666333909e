"""Immutable simple graphs stored as adjacency bit rows."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ng_chromatic.types import Edge

# Each adjacency row must fit a single machine word.
MAX_ORDER = 64

# Strictly larger than any shortest-path length on MAX_ORDER vertices.
UNREACHABLE = MAX_ORDER


class GraphError(ValueError):
    """Raised when a graph cannot be built from the given data."""


class DerivedKind(str, Enum):
    """Auxiliary graphs whose proper colorings are the chromatic variants."""

    DISTANCE_EXACTLY_TWO = "distance-exactly-two"
    COMMON_NEIGHBOR = "common-neighbor"
    DISTANCE_AT_MOST_TWO = "distance-at-most-two"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..order-1.

    ``rows[v]`` is the neighborhood of ``v`` as a bitmask. Instances are
    immutable and hashable, so they can be shared between workers and used
    as cache keys.
    """

    order: int
    rows: Tuple[int, ...]

    def has_edge(self, u: int, v: int) -> bool:
        """Return True if ``u`` and ``v`` are adjacent."""
        return bool(self.rows[u] >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={edges(self)})"


@dataclass(frozen=True)
class DistanceMatrix:
    """Shortest-path lengths; ``UNREACHABLE`` marks pairs in different components."""

    order: int
    dist: Tuple[Tuple[int, ...], ...]

    def __call__(self, u: int, v: int) -> int:
        return self.dist[u][v]


@dataclass(frozen=True)
class DegreeStats:
    """Degree summary of a graph."""

    max_degree: int
    min_degree: int
    degree_sequence: Tuple[int, ...]

    @property
    def is_regular(self) -> bool:
        return self.max_degree == self.min_degree

    def to_dict(self) -> Dict[str, object]:
        return {
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "regular": self.is_regular,
        }


def _check_order(n: int) -> None:
    if n < 0:
        raise GraphError(f"Vertex count must be non-negative, got {n}")
    if n > MAX_ORDER:
        raise GraphError(f"Vertex count {n} exceeds the maximum of {MAX_ORDER}")


def from_edges(n: int, edge_list: Iterable[Edge]) -> Graph:
    """Build a graph on ``n`` vertices from an iterable of vertex pairs.

    Duplicate pairs and pair orientation are ignored.

    Raises:
        GraphError: If an index is out of range, a pair is a loop, or ``n``
            exceeds ``MAX_ORDER``.
    """
    _check_order(n)
    rows = [0] * n
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"Edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"Loop at vertex {u} is not allowed in a simple graph")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def edges(g: Graph) -> List[Edge]:
    """Edges as (u, v) pairs with u < v, sorted."""
    result = []
    for v in range(g.order):
        bits = g.rows[v] & ((1 << v) - 1)
        while bits:
            low = bits & -bits
            result.append((low.bit_length() - 1, v))
            bits ^= low
    return sorted(result)


def edge_count(g: Graph) -> int:
    return sum(bin(row).count("1") for row in g.rows) // 2


def neighbors(g: Graph, v: int) -> List[int]:
    return [u for u in range(g.order) if g.rows[v] >> u & 1]


def degree(g: Graph, v: int) -> int:
    return bin(g.rows[v]).count("1")


def pair_index(u: int, v: int) -> int:
    """Bit position of the pair {u, v} in column-major upper-triangle order."""
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def edge_bitmask(g: Graph) -> int:
    """Encode the edge set as an integer, one bit per vertex pair."""
    mask = 0
    for u, v in edges(g):
        mask |= 1 << pair_index(u, v)
    return mask


def pair_table(n: int) -> List[Edge]:
    """All pairs (u, v), u < v, in bit order."""
    return [(u, v) for v in range(n) for u in range(v)]


def from_edge_bitmask(n: int, mask: int, pairs: Optional[Sequence[Edge]] = None) -> Graph:
    """Inverse of ``edge_bitmask``.

    ``pairs`` may be passed in to avoid rebuilding ``pair_table(n)`` in tight
    enumeration loops.
    """
    _check_order(n)
    if pairs is None:
        pairs = pair_table(n)
    if mask >> len(pairs):
        raise GraphError(f"Edge bitmask {mask} is too wide for {n} vertices")
    rows = [0] * n
    bit = 0
    while mask:
        if mask & 1:
            u, v = pairs[bit]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        mask >>= 1
        bit += 1
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    """Graph on the same vertices with exactly the missing pairs as edges."""
    full = (1 << g.order) - 1
    return Graph(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def relabel(g: Graph, mapping: Sequence[int]) -> Graph:
    """Apply the vertex permutation ``v -> mapping[v]``."""
    if sorted(mapping) != list(range(g.order)):
        raise GraphError("Relabeling must be a permutation of the vertex set")
    return from_edges(g.order, ((mapping[u], mapping[v]) for u, v in edges(g)))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by ``vertices``, renumbered in the given order."""
    position = {v: i for i, v in enumerate(vertices)}
    if len(position) != len(vertices):
        raise GraphError("Induced subgraph vertices must be distinct")
    pairs = [
        (position[u], position[v])
        for u, v in edges(g)
        if u in position and v in position
    ]
    return from_edges(len(vertices), pairs)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs BFS distances, frontier-at-a-time over bit rows."""
    n = g.order
    dist = []
    for source in range(n):
        row = [UNREACHABLE] * n
        row[source] = 0
        seen = 1 << source
        frontier = seen
        level = 0
        while frontier:
            level += 1
            reached = 0
            bits = frontier
            while bits:
                low = bits & -bits
                reached |= g.rows[low.bit_length() - 1]
                bits ^= low
            frontier = reached & ~seen
            seen |= frontier
            bits = frontier
            while bits:
                low = bits & -bits
                row[low.bit_length() - 1] = level
                bits ^= low
        dist.append(tuple(row))
    return DistanceMatrix(n, tuple(dist))


def _common_neighbor_rows(g: Graph) -> List[int]:
    rows = [0] * g.order
    for w in range(g.order):
        nbrs = g.rows[w]
        bits = nbrs
        while bits:
            low = bits & -bits
            rows[low.bit_length() - 1] |= nbrs
            bits ^= low
    return [row & ~(1 << v) for v, row in enumerate(rows)]


def derived_graph(g: Graph, kind: DerivedKind) -> Graph:
    """Auxiliary graph whose proper colorings are the colorings of ``kind``.

    Pairs in different components are never joined: they are not at
    distance two and share no neighbor.
    """
    shared = _common_neighbor_rows(g)
    if kind == DerivedKind.COMMON_NEIGHBOR:
        rows = shared
    elif kind == DerivedKind.DISTANCE_EXACTLY_TWO:
        rows = [row & ~g.rows[v] for v, row in enumerate(shared)]
    elif kind == DerivedKind.DISTANCE_AT_MOST_TWO:
        rows = [row | g.rows[v] for v, row in enumerate(shared)]
    else:
        raise GraphError(f"Unknown derived graph kind: {kind}")
    return Graph(g.order, tuple(rows))


def derived_graphs(g: Graph) -> Dict[DerivedKind, Graph]:
    """All three derived graphs from a single common-neighbor pass."""
    shared = _common_neighbor_rows(g)
    return {
        DerivedKind.DISTANCE_EXACTLY_TWO: Graph(
            g.order, tuple(row & ~g.rows[v] for v, row in enumerate(shared))
        ),
        DerivedKind.COMMON_NEIGHBOR: Graph(g.order, tuple(shared)),
        DerivedKind.DISTANCE_AT_MOST_TWO: Graph(
            g.order, tuple(row | g.rows[v] for v, row in enumerate(shared))
        ),
    }


def square(g: Graph) -> Graph:
    """G squared: G plus every pair at distance two."""
    return derived_graph(g, DerivedKind.DISTANCE_AT_MOST_TWO)


def degree_stats(g: Graph) -> DegreeStats:
    """Degree sequence with Δ and δ; the order-0 graph reports Δ = δ = 0."""
    sequence = tuple(degree(g, v) for v in range(g.order))
    if not sequence:
        return DegreeStats(0, 0, ())
    return DegreeStats(max(sequence), min(sequence), sequence)


def is_triangle_free(g: Graph) -> bool:
    for u, v in edges(g):
        if g.rows[u] & g.rows[v]:
            return False
    return True


def has_common_neighbor(g: Graph, u: int, v: int) -> bool:
    return bool(g.rows[u] & g.rows[v])


def all_pairs_share_neighbor(g: Graph) -> bool:
    """True when every two distinct vertices have a common neighbor."""
    full = (1 << g.order) - 1
    return all(
        row | (1 << v) == full for v, row in enumerate(_common_neighbor_rows(g))
    )


def diameter(g: Graph) -> Optional[int]:
    """Largest distance, or None for the empty vertex set or a disconnected graph."""
    if g.order == 0:
        return None
    longest = max(max(row) for row in distance_matrix(g).dist)
    return None if longest == UNREACHABLE else longest
