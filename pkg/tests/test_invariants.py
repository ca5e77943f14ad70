"""Per-order invariants, the vectorized scanner, and order searches.

The scanner in ``_scan_words`` recomputes obstruction, length, and
minimality for whole batches of orders with numpy; the heart of this
file is the exhaustive cross-check of those arrays against the plain
per-order functions, which are themselves internally double-routed.
"""

import dataclasses

import pytest

from lyubeznik import (
    AraBounds,
    BoundExceededError,
    NotMinimalError,
    OrderedIdeal,
    all_orders,
    analyze,
    ara_bounds,
    audit_courts_first,
    betti_from_preserved,
    edge_ideal,
    equivalence_audit,
    height,
    identity_order,
    is_almost_lyubeznik,
    is_lyubeznik,
    is_minimal_resolution,
    is_totally_lyubeznik,
    l_length,
    load_graph,
    load_ideal,
    min_l_length,
    min_ps,
    obstruction,
    parse_ideal,
    preserved_size,
    projdim_oracle,
    search_scan,
    taylor_betti,
    total_obstruction,
)
from lyubeznik.invariants import _scan_words

KOSZUL2 = parse_ideal("vars x y\ngen x\ngen y")

SCAN_NAMES = ["chain_three_squares", "square_edges", "chain_five_mixed",
              "mixed_powers_xyz", "five_gen_squarefree"]


def test_scanner_matches_per_order_functions():
    # The one test that licenses trusting the batch engine anywhere else:
    # every order of every small ideal, all three outputs.
    for name in SCAN_NAMES:
        ideal = load_ideal(name)
        words = [o.order for o in all_orders(ideal)]
        obs, length, minimal = _scan_words(ideal, words)
        for k, word in enumerate(words):
            ordered = OrderedIdeal(ideal, word)
            assert obs[k] == obstruction(ordered), (name, word)
            assert length[k] == l_length(ordered), (name, word)
            assert length[k] == preserved_size(ordered), (name, word)
            assert bool(minimal[k]) == is_minimal_resolution(ordered), (name, word)


def test_search_aggregates():
    expected = {
        "mixed_powers_xyz": (0, 3, 8, 120, (1, 3, 4, 2, 5)),
        "five_gen_squarefree": (3, 3, 0, 120, (1, 2, 3, 4, 5)),
        "square_edges": (3, 3, 0, 24, (1, 2, 3, 4)),
        "chain_three_squares": (0, 2, 2, 6, (1, 2, 3)),
        "chain_four_squares": (3, 3, 0, 24, (1, 2, 3, 4)),
        "chain_five_mixed": (0, 3, 24, 120, (1, 2, 3, 4, 5)),
        "triangle_edges": (0, 2, 6, 6, None),
    }
    for name, (tobsl, min_l, count, scanned, nonmin) in expected.items():
        scan = search_scan(load_ideal(name))
        assert scan.exact and not scan.stopped_early
        assert (scan.tobsl, scan.min_l, scan.minimal_count,
                scan.scanned, scan.nonminimal_witness) == (
                    tobsl, min_l, count, scanned, nonmin), name
        assert scan.min_ps == scan.min_l


def test_witnesses_are_lex_least():
    scan = search_scan(load_ideal("chain_three_squares"))
    assert scan.tobsl_witness == (3, 1, 2)
    assert obstruction(OrderedIdeal(load_ideal("chain_three_squares"),
                                    (3, 1, 2))) == 0
    scan = search_scan(load_ideal("chain_five_mixed"))
    assert scan.tobsl_witness == (5, 1, 2, 3, 4)


def test_parallel_scan_is_deterministic():
    ideal = load_ideal("mixed_powers_xyz")
    serial = search_scan(ideal)
    assert search_scan(ideal, jobs=2, chunk_size=7) == serial
    assert search_scan(ideal, jobs=3, chunk_size=1) == serial


def test_stop_policies():
    ideal = load_ideal("mixed_powers_xyz")
    scan = search_scan(ideal, stop_when="zero-obstruction", chunk_size=1)
    assert scan.stopped_early and scan.scanned == 1
    assert scan.tobsl == 0 and scan.tobsl_witness == (1, 2, 3, 4, 5)

    scan = search_scan(ideal, stop_when="nonzero-obstruction", chunk_size=1)
    assert scan.stopped_early and scan.scanned < 120
    assert scan.nonminimal_witness == (1, 3, 4, 2, 5)

    # Policies that never trigger leave the scan exhaustive.
    scan = search_scan(load_ideal("five_gen_squarefree"),
                       stop_when="zero-obstruction")
    assert not scan.stopped_early and scan.scanned == 120

    with pytest.raises(ValueError, match="stop policy"):
        search_scan(ideal, stop_when="sometimes")


def test_search_respects_generator_bound():
    ideal = load_ideal("mixed_powers_xyz")
    with pytest.raises(BoundExceededError):
        search_scan(ideal, max_exhaustive=4)
    assert search_scan(ideal, max_exhaustive=4, force=True).scanned == 120


def test_convenience_searches():
    ideal = load_ideal("mixed_powers_xyz")
    tobsl, witness = total_obstruction(ideal)
    assert tobsl == 0 and obstruction(witness) == 0
    best, at = min_l_length(ideal)
    assert best == 3 and l_length(at) == 3
    assert min_ps(ideal)[0] == 3


def test_betti_from_preserved_requires_minimality():
    ordered = identity_order(load_ideal("five_gen_squarefree"))
    with pytest.raises(NotMinimalError, match="taylor_betti"):
        betti_from_preserved(ordered)


def test_betti_from_preserved_matches_oracle():
    ideal = load_ideal("chain_three_squares")
    ordered = OrderedIdeal(ideal, (3, 1, 2))
    assert betti_from_preserved(ordered) == taylor_betti(ideal)


def test_equivalence_audit_consistent_everywhere():
    for name in ["chain_three_squares", "square_edges", "triangle_edges"]:
        ideal = load_ideal(name)
        for ordered in all_orders(ideal):
            audit = equivalence_audit(ordered)
            assert audit.consistent, (name, ordered.order)
            assert audit.minimal == is_minimal_resolution(ordered)


def test_audit_fields_track_minimality():
    ideal = load_ideal("chain_three_squares")
    good = equivalence_audit(OrderedIdeal(ideal, (3, 1, 2)))
    assert good.minimal and good.eminimal_witness_condition
    bad = equivalence_audit(identity_order(ideal))
    assert not bad.minimal and not bad.cover_witness_condition


def test_lyubeznik_verdicts():
    v = is_lyubeznik(load_ideal("chain_three_squares"))
    assert (v.verdict, v.witness.order, v.exact) == (True, (3, 1, 2), True)
    v = is_lyubeznik(load_ideal("chain_four_squares"))
    assert (v.verdict, v.witness, v.exact, v.scanned) == (False, None, True, 24)
    v = is_lyubeznik(load_ideal("chain_five_mixed"))
    assert (v.verdict, v.witness.order) == (True, (5, 1, 2, 3, 4))
    verdict, witness = is_lyubeznik(load_ideal("triangle_edges"))
    assert verdict and is_minimal_resolution(witness)


def test_heuristic_cannot_certify_failure():
    # Courts-first on an ideal whose courts are a proper subset scans an
    # incomplete stream; finding no minimal order there proves nothing.
    v = is_lyubeznik(load_ideal("five_gen_squarefree"), "courts-first")
    assert v.verdict is None and not v.exact and v.scanned == 24


def test_totally_and_almost():
    assert is_totally_lyubeznik(load_ideal("triangle_edges"))
    assert not is_totally_lyubeznik(load_ideal("mixed_powers_xyz"))
    assert is_totally_lyubeznik(KOSZUL2)
    assert is_almost_lyubeznik(load_ideal("mixed_powers_xyz"))
    assert is_almost_lyubeznik(load_ideal("five_gen_squarefree"))
    assert is_almost_lyubeznik(load_ideal("chain_four_squares"))


def test_courts_first_claim_fails_in_the_corpus():
    holds, counterexample = audit_courts_first(load_ideal("chain_five_mixed"))
    assert not holds and counterexample.order == (1, 2, 3, 4, 5)
    assert obstruction(counterexample) > 0
    # Even with only two possible courts the claim can fail.
    holds, counterexample = audit_courts_first(load_ideal("mixed_powers_xyz"))
    assert not holds and counterexample.order == (2, 1, 3, 4, 5)


def test_heights():
    assert height(load_ideal("mixed_powers_xyz")) == 3
    assert height(KOSZUL2) == 2
    assert height(load_ideal("triangle_edges")) == 2
    assert height(load_ideal("square_edges")) == 2
    assert height(edge_ideal(load_graph("star3"))) == 1
    assert height(load_ideal("chain_three_squares")) == 2


def test_ara_bounds():
    assert tuple(ara_bounds(KOSZUL2)) == (2, 2)
    assert ara_bounds(KOSZUL2).equality
    assert ara_bounds(load_ideal("mixed_powers_xyz")) == AraBounds(3, 3, True)
    assert ara_bounds(load_ideal("five_gen_squarefree")) == AraBounds(3, 3, True)
    # Non-squarefree: the lower bound comes from the height instead.
    assert ara_bounds(load_ideal("chain_three_squares")) == AraBounds(2, 2, True)


def test_ara_never_exceeds_generator_count():
    for name in SCAN_NAMES:
        ideal = load_ideal(name)
        lower, upper = ara_bounds(ideal)
        assert lower <= upper <= ideal.mu


def test_analyze_without_search():
    report = analyze(identity_order(load_ideal("five_gen_squarefree")))
    assert not report.minimal and report.obstruction == 3
    assert report.l_length == report.ps == 3
    assert report.betti is None
    assert report.lyubeznik is None
    assert report.almost_lyubeznik is None
    assert report.ara.upper == 3  # this order's length, a valid upper bound


def test_analyze_with_search():
    report = analyze(identity_order(load_ideal("mixed_powers_xyz")),
                     search_mode="exhaustive")
    assert report.minimal and report.obstruction == 0
    assert report.l_length == report.ps == 3
    assert report.betti is not None
    assert report.betti == taylor_betti(load_ideal("mixed_powers_xyz"))
    assert report.height == 3
    assert tuple(report.ara) == (3, 3)
    assert report.lyubeznik is True
    assert report.almost_lyubeznik is True
    assert report.totally_lyubeznik is False


def test_analyze_with_heuristic_search_leaves_unknowns():
    report = analyze(identity_order(load_ideal("five_gen_squarefree")),
                     search_mode="courts-first")
    assert report.lyubeznik is None
    assert report.almost_lyubeznik is None
    assert report.totally_lyubeznik is None


def test_report_is_frozen():
    report = analyze(identity_order(KOSZUL2))
    with pytest.raises(dataclasses.FrozenInstanceError):
        report.minimal = False
