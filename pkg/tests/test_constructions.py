"""Tests for the extremal graph families."""

import networkx as nx
import pytest

from ng_chromatic.coloring import VariantKind, variant_chromatic
from ng_chromatic.constructions import (
    Family,
    FamilyError,
    FamilySpec,
    build,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    f_square,
    g_injective,
    h_complement_description,
    h_even,
    h_graph,
    h_odd,
    petersen,
    vertex_labels,
)
from ng_chromatic.graph import (
    all_pairs_share_neighbor,
    complement,
    degree_stats,
    diameter,
    edge_count,
    edges,
    induced_subgraph,
    relabel,
)


def variant_sum(g, kind):
    return variant_chromatic(g, kind).value + variant_chromatic(complement(g), kind).value


class TestFamilySpec:
    """Parsing CLI tokens into family specifications."""

    def test_parse(self):
        spec = FamilySpec.parse(["F-Square", "7"])

        assert spec == FamilySpec(Family.F_SQUARE, (7,))
        assert str(spec) == "f-square 7"

    def test_unknown_family(self):
        with pytest.raises(FamilyError, match="Unknown family"):
            FamilySpec.parse(["wheel", "5"])

    def test_non_integer_parameter(self):
        with pytest.raises(FamilyError, match="integers"):
            FamilySpec.parse(["cycle", "five"])

    def test_missing_name(self):
        with pytest.raises(FamilyError, match="Missing"):
            FamilySpec.parse([])

    def test_wrong_arity(self):
        with pytest.raises(FamilyError, match="takes 1 parameter"):
            build(FamilySpec(Family.CYCLE, (5, 6)))

    def test_petersen_takes_no_parameter(self):
        assert build(FamilySpec.parse(["petersen"])) == petersen()


class TestBasicFamilies:
    """Paths, cycles, complete and multipartite graphs."""

    def test_cycle_minimum(self):
        with pytest.raises(FamilyError, match="at least 3"):
            cycle(2)

    def test_multipartite_requires_descending_parts(self):
        with pytest.raises(FamilyError, match="descending"):
            complete_multipartite([2, 3])

    def test_multipartite_requires_positive_parts(self):
        with pytest.raises(FamilyError, match="positive"):
            complete_multipartite([3, 0])

    def test_multipartite_layout(self):
        g = complete_multipartite([2, 1])

        assert edges(g) == [(0, 2), (1, 2)]

    def test_complete_bipartite_orders_parts(self):
        assert complete_bipartite(2, 3) == complete_multipartite([3, 2])

    def test_petersen_matches_networkx(self):
        g = petersen()
        ours = nx.Graph(edges(g))

        assert nx.is_isomorphic(ours, nx.petersen_graph())


class TestHGraphs:
    """The 2-proper upper-bound witnesses."""

    def test_minimum_parameter(self):
        with pytest.raises(FamilyError, match="at least 6"):
            h_graph(5)

    @pytest.mark.parametrize("k", [6, 7, 8])
    def test_structure(self, k):
        g = h_graph(k)
        xs = list(range(k))
        ys = list(range(k, 2 * k))

        assert edge_count(induced_subgraph(g, xs)) == 0
        assert edge_count(induced_subgraph(g, ys)) == k * (k - 1) // 2
        assert all(degree_stats(g).degree_sequence[x] == k // 2 for x in xs)

    @pytest.mark.parametrize("k", [6, 7, 8, 9])
    def test_complement_description(self, k):
        mapping = [(i - 1) % k for i in range(k)] + list(range(k, 2 * k))

        assert relabel(complement(h_graph(k)), mapping) == h_complement_description(k)

    @pytest.mark.parametrize("k", [6, 7])
    def test_complement_description_is_isomorphic(self, k):
        ours = nx.Graph(edges(h_complement_description(k)))
        theirs = nx.Graph(edges(complement(h_graph(k))))

        assert nx.is_isomorphic(ours, theirs)

    def test_odd_and_even_orders(self):
        assert h_odd(6).order == 13
        assert h_even(6).order == 14
        assert not h_even(6).has_edge(12, 13)

    @pytest.mark.parametrize(
        "builder,k,expected",
        [
            (h_odd, 6, (7, 7)),
            (h_even, 6, (8, 7)),
            (h_odd, 7, (8, 8)),
            (h_even, 7, (9, 8)),
        ],
    )
    def test_two_proper_values_on_each_side(self, builder, k, expected):
        g = builder(k)
        values = (
            variant_chromatic(g, VariantKind.TWO_PROPER).value,
            variant_chromatic(complement(g), VariantKind.TWO_PROPER).value,
        )

        assert values == expected

    @pytest.mark.parametrize("k", [6, 7])
    def test_odd_variant_attains_two_proper_bound(self, k):
        assert variant_sum(h_odd(k), VariantKind.TWO_PROPER) == 2 * k + 2

    @pytest.mark.parametrize("k", [6, 7])
    def test_even_variant_attains_two_proper_bound(self, k):
        assert variant_sum(h_even(k), VariantKind.TWO_PROPER) == 2 * k + 3


class TestInjectiveWitness:
    """G-injective(n) with every pair sharing a neighbor on both sides."""

    def test_minimum_order(self):
        with pytest.raises(FamilyError, match="at least 9"):
            g_injective(8)

    @pytest.mark.parametrize("n", [9, 10, 11])
    def test_common_neighbors_on_both_sides(self, n):
        g = g_injective(n)

        assert g.order == n
        assert all_pairs_share_neighbor(g)
        assert all_pairs_share_neighbor(complement(g))

    def test_extra_vertices_are_not_adjacent(self):
        assert not g_injective(11).has_edge(9, 10)

    @pytest.mark.parametrize("n", [9, 10, 11])
    def test_injective_numbers(self, n):
        g = g_injective(n)

        assert variant_chromatic(g, VariantKind.INJECTIVE).value == n
        assert variant_chromatic(complement(g), VariantKind.INJECTIVE).value == n


class TestSquareWitness:
    """F-square(n), diameter two on both sides."""

    @pytest.mark.parametrize("n", range(5, 10))
    def test_diameter_two_on_both_sides(self, n):
        g = f_square(n)

        assert diameter(g) == 2
        assert diameter(complement(g)) == 2

    @pytest.mark.parametrize("n", range(5, 10))
    def test_square_numbers(self, n):
        g = f_square(n)

        assert variant_chromatic(g, VariantKind.SQUARE).value == n
        assert variant_chromatic(complement(g), VariantKind.SQUARE).value == n

    @pytest.mark.parametrize("n", range(3, 9))
    def test_complete_graph_lower_sharpness(self, n):
        assert variant_sum(complete(n), VariantKind.SQUARE) == n + 1


class TestVertexLabels:
    """Names used by DOT export."""

    def test_h_even_labels(self):
        labels = vertex_labels(FamilySpec(Family.H_EVEN, (6,)))

        assert labels[:2] == ["x0", "x1"]
        assert labels[6] == "y0"
        assert labels[-2:] == ["inf1", "inf2"]

    def test_g_injective_labels(self):
        labels = vertex_labels(FamilySpec(Family.G_INJECTIVE, (10,)))

        assert labels == ["x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3", "inf"]

    def test_f_square_labels(self):
        labels = vertex_labels(FamilySpec(Family.F_SQUARE, (7,)))

        assert labels == ["x1", "x2", "x3", "x4", "x5", "y1", "y2"]

    def test_default_labels(self):
        assert vertex_labels(FamilySpec(Family.PATH, (3,))) == ["0", "1", "2"]
