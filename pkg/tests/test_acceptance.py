"""Acceptance battery: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report.  Size and variable bounds are pinned here and match the defaults of
``macpoly verify``; every comparison is exact polynomial equality.
"""

import time

import pytest

from macpoly.verify import (
    CheckResult,
    check_fixture_statistics,
    check_fixture_tableau_listing,
    check_htilde_equivalence,
    check_htilde_symmetry,
    check_integrality,
    check_j_def,
    check_j_equivalence,
    check_j_ones_closed_form,
    check_parallel_merge_order,
    check_pr_products,
    check_properties,
    check_p_symmetry,
    check_quasisymmetry,
    check_refinement,
    check_schur_chain,
)


def report(number: int, result: CheckResult, limit: float) -> None:
    line = f"criterion {number:02d}: {result.line()}"
    print(line)
    assert result.passed, line
    assert result.seconds < limit, f"criterion {number} exceeded {limit}s: {result.seconds:.2f}s"


def test_criterion_01_sorted_tableau_fixture():
    # transcribed sorted tableau: inv, maj, and the multiplicity polynomial
    report(1, check_fixture_statistics(), limit=1.0)


def test_criterion_02_tableau_listing_fixture():
    # 32 packed sorted tableaux with the listed weights; their weighted sum
    # is the compact value whose plain-route twin carries the swapped
    # parameters (the listing's own weights fix that orientation)
    report(2, check_fixture_tableau_listing(), limit=5.0)


def test_criterion_03_htilde_compact_equals_plain():
    report(3, check_htilde_equivalence(max_size=6, max_n=4), limit=600.0)


def test_criterion_04_ordered_filling_fixture():
    report(4, check_fixture_statistics(), limit=1.0)


def test_criterion_05_j_compact_equals_plain():
    report(5, check_j_equivalence(max_size=5, max_n=4), limit=600.0)


def test_criterion_06_all_ones_closed_form():
    report(6, check_j_ones_closed_form(max_n=5), limit=60.0)


def test_criterion_07_normalization_products():
    report(7, check_pr_products(max_size=8), limit=60.0)


def test_criterion_08_j_equals_p_times_norm():
    report(8, check_j_def(max_size=4, max_n=4), limit=600.0)


def test_criterion_09_integrality():
    report(9, check_integrality(max_size=5, max_n=4), limit=600.0)


def test_criterion_10_quasisymmetry():
    report(10, check_quasisymmetry(max_size=5, max_n=5), limit=600.0)


def test_criterion_11_refinement():
    report(11, check_refinement(max_size=5, max_n=5), limit=600.0)


def test_criterion_12_schur_specialization_chain():
    report(12, check_schur_chain(max_size=5, max_n=5), limit=600.0)


def test_criterion_13_symmetry():
    start = time.perf_counter()
    first = check_htilde_symmetry(max_size=5, max_n=4)
    second = check_p_symmetry(max_size=5, max_n=4)
    merged = CheckResult(
        "symmetry of the modified and monic families",
        first.instances + second.instances,
        first.passed and second.passed,
        time.perf_counter() - start,
        "; ".join(d for d in (first.detail, second.detail) if d),
    )
    report(13, merged, limit=600.0)


def test_criterion_14_property_suite():
    start = time.perf_counter()
    props = check_properties(cases=1000)
    merge = check_parallel_merge_order()
    merged = CheckResult(
        "randomized properties and merge-order independence",
        props.instances + merge.instances,
        props.passed and merge.passed,
        time.perf_counter() - start,
        props.detail,
    )
    report(14, merged, limit=60.0)
