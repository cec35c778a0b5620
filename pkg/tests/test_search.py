import pytest

from nutgraphs.constructions import thm6_classify
from nutgraphs.errors import PreconditionError
from nutgraphs.exactla import IntMatrix, kernel_basis
from nutgraphs.graphcore import CirculantSpec, Graph, circulant, cycles_complement, path
from nutgraphs.nutcheck import alternating_vector, is_nut, vt_feasible
from nutgraphs.search import (SearchConfig, circulant_candidates, conjecture_scan,
                              enumerate_order15, partitions_min_part, rewiring_search,
                              scan_circulants, survey)
from oracles import circulant_rows


def _brute_scan(n, d):
    """Every jump subset, kept if degree d and kernel says nut."""
    from itertools import combinations
    hits = []
    for t in range(1, n // 2 + 1):
        for jumps in combinations(range(1, n // 2 + 1), t):
            spec = CirculantSpec(n, jumps)
            if spec.degree != d:
                continue
            kd = kernel_basis(IntMatrix.from_rows(circulant_rows(n, set(jumps))))
            if kd.nullity == 1 and 0 not in kd.basis[0]:
                hits.append(jumps)
    return sorted(hits)


@pytest.mark.parametrize("n, d", [(16, 12), (18, 12), (12, 4), (14, 8), (10, 5), (12, 7), (9, 4)])
def test_scan_matches_brute_force(n, d):
    assert [s.jumps for s in scan_circulants(n, d).hits] == _brute_scan(n, d)


@pytest.mark.parametrize("n, d", [(16, 12), (20, 8), (15, 6), (14, 9)])
def test_scan_methods_agree(n, d):
    assert scan_circulants(n, d).hits == scan_circulants(n, d, method="kernel").hits


def test_scan_examples():
    assert (1, 2, 3, 4, 5, 6) in [s.jumps for s in scan_circulants(16, 12).hits]
    assert scan_circulants(8, 6).hits == []
    assert (1, 2, 3, 4, 5, 8) in [s.jumps for s in scan_circulants(18, 12).hits]


def test_candidates_have_degree_d():
    for n, d in [(12, 5), (13, 6), (20, 7), (11, 3)]:
        specs = list(circulant_candidates(n, d))
        assert all(s.degree == d for s in specs)
        assert [s.jumps for s in specs] == sorted(s.jumps for s in specs)
    assert list(circulant_candidates(11, 3)) == []


def test_scan_precondition():
    with pytest.raises(PreconditionError):
        scan_circulants(8, 8)


def test_scan_jobs_independent():
    one = scan_circulants(20, 8)
    two = scan_circulants(20, 8, jobs=2)
    assert one.hits == two.hits and one.examined == two.examined


def test_scan_hits_have_alternating_kernel():
    for n, d in [(16, 12), (18, 12), (20, 8), (24, 8), (16, 4)]:
        for spec in scan_circulants(n, d).hits:
            v = is_nut(circulant(spec))
            assert n % 2 == 0 and v.kernel == alternating_vector(n)
            assert sum(v.kernel) == 0 and vt_feasible(n, d).feasible


def test_consecutive_scan_agrees_with_thm6():
    # {1..6} is the first candidate, so a first-hit scan decides its membership
    for n in range(14, 49, 2):
        spec = CirculantSpec(n, (1, 2, 3, 4, 5, 6))
        assert next(circulant_candidates(n, 12)) == spec
        in_scan = spec in scan_circulants(n, 12, first_only=True).hits
        assert in_scan == thm6_classify(n, 12).is_nut


def test_full_scan_contains_consecutive_iff_thm6():
    for n in range(14, 25, 2):
        spec = CirculantSpec(n, (1, 2, 3, 4, 5, 6))
        assert (spec in scan_circulants(n, 12).hits) == thm6_classify(n, 12).is_nut


def test_unconfirmed_scan_same_hits():
    assert scan_circulants(22, 8).hits == scan_circulants(22, 8, confirm=False).hits


def test_conjecture_scan_reports_degree8_gaps(caplog):
    # even n >= d + 4 with no d-regular circulant nut; confirmed by brute force
    report = conjecture_scan(8, range(12, 25, 2))
    misses = [n for n, r in report.items() if not r.hits]
    assert misses == [12, 16]
    assert _brute_scan(12, 8) == [] and _brute_scan(16, 8) == []
    assert "no 8-regular circulant nut on 12 vertices" in caplog.text


def test_partitions():
    assert sorted(partitions_min_part(7)) == [(4, 3), (7,)]
    assert len(list(partitions_min_part(15))) == 17


def test_order15():
    graphs = enumerate_order15()
    assert len(graphs) == 17
    assert cycles_complement([15]) in graphs
    assert all(set(g.degrees()) == {12} for g in graphs)
    assert not any(is_nut(g).is_nut for g in graphs)


def test_rewiring_finds_21():
    seed = circulant(CirculantSpec(21, (1, 2, 3, 4, 5, 6)))
    res = rewiring_search(seed, SearchConfig(budget=200, restarts=2, seed=0))
    assert res.found
    assert res.graph.degrees() == seed.degrees()
    assert is_nut(res.graph).is_nut


def test_rewiring_deterministic():
    seed = circulant(CirculantSpec(17, (1, 2, 3, 4, 5, 6)))
    cfg = SearchConfig(budget=40, restarts=2, seed=123)
    a = rewiring_search(seed, cfg)
    b = rewiring_search(seed, cfg)
    assert a.accepted == b.accepted and a.graph == b.graph and a.moves_tried == b.moves_tried


def test_rewiring_degree_sequence_kept():
    seed = circulant(CirculantSpec(19, (1, 2, 3, 4, 5, 6)))
    res = rewiring_search(seed, SearchConfig(budget=3000, restarts=1, seed=4))
    assert res.found and res.graph.degrees() == seed.degrees()


def test_rewiring_k13_exhausts():
    res = rewiring_search(Graph.complete(13), SearchConfig(budget=50, seed=0))
    assert not res.found and res.moves_tried == 0


def test_rewiring_needs_regular_seed():
    with pytest.raises(PreconditionError):
        rewiring_search(path(4), SearchConfig())
    with pytest.raises(PreconditionError):
        SearchConfig(budget=0)


def test_survey_small_range():
    rows = survey(12, 13, 20)
    assert [r.exists for r in rows] == [False] * 3 + [True] * 5
    assert rows[0].line() == "n=13 verdict=NONE witness=exhaustive:K13"


@pytest.mark.parametrize("lo, hi", [(12, 20), (13, 65), (20, 19)])
def test_survey_range_checks(lo, hi):
    with pytest.raises(PreconditionError):
        survey(12, lo, hi)
