"""Tests for profiles, theorem checks and sweeps."""

from unittest.mock import patch

import pytest

from ng_chromatic.constructions import complete, complete_bipartite, cycle, petersen
from ng_chromatic.formats import Graph6Error, write_graph6
from ng_chromatic.graph import complement
from ng_chromatic.verify import (
    CHECKS,
    INJ_PROD_EXCEPTIONS,
    CheckResult,
    CheckTally,
    SweepError,
    _ceil_two_sqrt,
    check_theorems,
    enumerate_graph6,
    enumerate_labeled,
    evaluate_graph,
    labeled_count,
    small_order_shape,
    sweep,
    sweep_constructions,
)


def without_duration(summary):
    document = summary.to_dict()
    document.pop("duration_seconds")
    return document


class TestProfile:
    """Parameter profiles of a graph and its complement."""

    def test_five_cycle(self, c5):
        profile = evaluate_graph(c5)

        assert profile.order == 5
        assert profile.graph6 == "Dhc"
        assert (profile.g.chi, profile.g.chi2, profile.g.chi_injective, profile.g.chi_square) == (3, 3, 3, 5)
        assert profile.complement.chi_square == 5

    def test_triangle(self):
        profile = evaluate_graph(complete(3))

        assert profile.g.chi2 == 1
        assert profile.complement.chi == 1

    def test_to_dict_fields(self, c4):
        document = evaluate_graph(c4).to_dict()

        assert list(document) == ["order", "graph6", "g", "complement"]
        assert document["g"]["chi_injective"] == 2
        assert document["complement"]["chi_injective"] == 1
        assert document["g"]["regular"] is True


class TestChecks:
    """Individual theorem checks."""

    def test_every_check_is_reported_in_order(self, c5):
        report = check_theorems(evaluate_graph(c5))

        assert [r.check_id for r in report.results] == list(CHECKS)

    def test_five_cycle_holds_everywhere(self, c5):
        report = check_theorems(evaluate_graph(c5))

        assert report.violations == []
        inj_sum = report.get("INJ-SUM")
        assert inj_sum.applicable
        assert inj_sum.slack == 1
        assert not inj_sum.extremal

    def test_five_cycle_meets_chromatic_bounds(self, c5):
        report = check_theorems(evaluate_graph(c5))

        assert report.get("NG-CHI-SUM").extremal
        assert report.get("NG-CHI-PROD").extremal
        assert report.get("INJ-LEM4-2").extremal
        assert not report.get("INJ-LEM5").applicable

    def test_four_cycle_is_an_injective_exception(self, c4):
        report = check_theorems(evaluate_graph(c4))

        inj_sum = report.get("INJ-SUM")
        assert not inj_sum.applicable
        assert inj_sum.exception
        assert report.get("INJ-SUM-SMALL").exception
        assert report.get("INJ-PROD-SMALL").exception
        assert report.violations == []

    def test_complete_graph_is_extremal(self, k5):
        report = check_theorems(evaluate_graph(k5))

        assert report.get("TWOPROP-SUM").extremal
        assert report.get("SQ-SUM").extremal
        assert report.get("SQ-PROD").extremal
        assert report.get("INJ-LEM5").extremal
        assert report.get("INJ-LEM4-1").holds

    @pytest.mark.parametrize("a,b", [(3, 3), (4, 3)])
    def test_complete_bipartite_lower_sharpness(self, a, b):
        report = check_theorems(evaluate_graph(complete_bipartite(a, b)))

        assert report.get("INJ-SUM").extremal

    def test_path_lower_sharpness(self, p5):
        assert check_theorems(evaluate_graph(p5)).get("INJ-SUM").extremal

    def test_petersen(self):
        report = check_theorems(evaluate_graph(petersen()))

        assert report.violations == []
        assert report.get("INJ-LEM5").applicable

    def test_non_applicable_checks_hold(self):
        report = check_theorems(evaluate_graph(complete(1)))

        for result in report.results:
            if not result.applicable:
                assert result.holds

    def test_report_to_dict(self, c4):
        document = check_theorems(evaluate_graph(c4)).to_dict()

        assert document["graph6"] == "Cl"
        assert set(document["checks"][0]) == {
            "check_id",
            "applicable",
            "holds",
            "slack",
            "extremal",
            "exception",
            "detail",
        }

    @pytest.mark.parametrize("n,expected", [(1, 2), (2, 3), (4, 4), (5, 5), (9, 6), (10, 7)])
    def test_integer_chromatic_sum_bound(self, n, expected):
        assert _ceil_two_sqrt(n) == expected


class TestSmallOrderExceptions:
    """Graphs of order at most four that escape the injective bounds."""

    def test_shapes(self, c4, c4_complement):
        assert small_order_shape(evaluate_graph(c4)) == "C4"
        assert small_order_shape(evaluate_graph(c4_complement)) == "C4-bar"
        assert small_order_shape(evaluate_graph(complete(2))) == "K2"
        assert small_order_shape(evaluate_graph(complete(4))) is None

    def test_injective_sum_of_four_cycle(self, c4, c4_complement):
        profile = evaluate_graph(c4)

        assert profile.g.chi_injective + profile.complement.chi_injective == 3

    def test_product_failures_are_exactly_the_listed_graphs(self):
        failing = set()
        listed = set()
        for n in range(2, 5):
            for g in enumerate_labeled(n):
                profile = evaluate_graph(g)
                if profile.g.chi_injective * profile.complement.chi_injective < n:
                    failing.add(write_graph6(g))
                if small_order_shape(profile) in INJ_PROD_EXCEPTIONS:
                    listed.add(write_graph6(g))

        assert failing == listed
        assert len(failing) == 14

    def test_sum_failures_are_the_four_cycles(self):
        failing = []
        for g in enumerate_labeled(4):
            profile = evaluate_graph(g)
            if profile.g.chi_injective + profile.complement.chi_injective < 4:
                failing.append(small_order_shape(profile))

        assert sorted(failing) == ["C4"] * 3 + ["C4-bar"] * 3


class TestEnumeration:
    """Labeled enumeration and graph6 streams."""

    def test_counts(self):
        assert labeled_count(4) == 64
        assert len(list(enumerate_labeled(4))) == 64
        assert len(set(enumerate_labeled(4))) == 64

    def test_range(self):
        graphs = list(enumerate_labeled(3, 2, 5))

        assert len(graphs) == 3

    @pytest.mark.parametrize("n", [0, 9])
    def test_order_out_of_range(self, n):
        with pytest.raises(SweepError, match="orders 1..8"):
            list(enumerate_labeled(n))

    def test_graph6_lines(self):
        graphs = list(enumerate_graph6(["Bw", "", "Dhc"]))

        assert graphs == [complete(3), cycle(5)]


class TestCheckTally:
    """Commutative aggregation."""

    def test_merge_keeps_smallest_witnesses(self):
        extremal = CheckResult("X", True, True, 0, True)
        left, right = CheckTally(), CheckTally()
        left.record(extremal, lambda: "Dhc")
        right.record(extremal, lambda: "Bw")

        left.merge(right)

        assert left.extremal_count == 2
        assert left.extremal_witness == "Bw"

    def test_exception_witnesses_are_sorted_and_capped(self):
        tally = CheckTally()
        exception = CheckResult("X", False, True, 0, False, exception=True)
        for i in range(20):
            tally.record(exception, lambda i=i: f"w{i:02d}")

        assert tally.exception_count == 20
        assert tally.exception_witnesses == [f"w{i:02d}" for i in range(16)]

    def test_violation_is_counted(self):
        tally = CheckTally()
        tally.record(CheckResult("X", True, False, -1, False), lambda: "Bw")

        assert tally.violation_count == 1
        assert tally.violation_witness == "Bw"


class TestSweep:
    """Exhaustive sweeps."""

    def test_orders_one_to_five(self):
        summary = sweep(orders=range(1, 6))

        assert summary.graph_count == 1 + 2 + 8 + 64 + 1024
        assert summary.violation_count == 0
        assert summary.orders == [1, 2, 3, 4, 5]

    def test_order_four_exceptions(self):
        summary = sweep(orders=[4])

        assert summary.checks["INJ-SUM-SMALL"].exception_count == 6
        assert summary.checks["INJ-PROD-SMALL"].exception_count == 6
        assert len(summary.checks["INJ-SUM-SMALL"].exception_witnesses) == 6

    def test_result_is_independent_of_workers_and_chunks(self):
        single = sweep(orders=[4], workers=1, chunk_size=64)
        pooled = sweep(orders=[4], workers=2, chunk_size=7)

        assert without_duration(single) == without_duration(pooled)

    def test_progress_reaches_total(self):
        calls = []
        sweep(orders=[3], chunk_size=3, progress=lambda done, total: calls.append((done, total)))

        assert calls[-1] == (8, 8)
        assert len(calls) == 3

    def test_every_chunk_is_logged(self):
        with patch("ng_chromatic.verify.logger") as mock_logger:
            sweep(orders=[3], chunk_size=3)

        messages = [call[0][0] for call in mock_logger.debug.call_args_list]
        assert sum(m.startswith("Chunk of") for m in messages) == 3
        assert messages[-1].startswith("Sweep finished: 8 graphs")

    def test_empty_order_range(self):
        with pytest.raises(SweepError, match="empty"):
            sweep(orders=range(5, 3))

    def test_stream(self):
        summary = sweep(stream=["Bw", "Dhc", "Cr"], chunk_size=2)

        assert summary.graph_count == 3
        assert summary.orders == [3, 4, 5]
        assert summary.violation_count == 0

    def test_malformed_stream_stops(self):
        with pytest.raises(Graph6Error, match="line 2"):
            sweep(stream=["Bw", "D?"])

    def test_exactly_one_source(self):
        with pytest.raises(SweepError, match="exactly one"):
            sweep()
        with pytest.raises(SweepError, match="exactly one"):
            sweep(orders=[3], stream=["Bw"])

    def test_invalid_parameters(self):
        with pytest.raises(SweepError, match="Worker count"):
            sweep(orders=[3], workers=0)
        with pytest.raises(SweepError, match="Chunk size"):
            sweep(orders=[3], chunk_size=0)
        with pytest.raises(SweepError, match="orders 1..8"):
            sweep(orders=[9])

    def test_summary_to_dict(self):
        document = sweep(orders=[2]).to_dict()

        assert list(document) == ["orders", "graph_count", "violation_count", "duration_seconds", "checks"]
        assert document["checks"]["NG-CHI-SUM"]["applicable_count"] == 2

    @pytest.mark.slow
    def test_order_six(self):
        summary = sweep(orders=[6], workers=2)

        assert summary.graph_count == 32768
        assert summary.violation_count == 0
        assert summary.checks["INJ-SUM"].applicable_count == 32768


class TestConstructions:
    """Every named witness attains the bound it is built for."""

    @pytest.mark.slow
    def test_all_constructions_are_extremal(self):
        outcomes = sweep_constructions()

        assert outcomes
        for outcome in outcomes:
            assert outcome.result.holds, str(outcome.spec)
            assert outcome.result.extremal, f"{outcome.spec} {outcome.check_id}"

    def test_complement_of_complete_graph(self):
        profile = evaluate_graph(complement(complete(6)))

        assert profile.g.chi_square + profile.complement.chi_square == 7
