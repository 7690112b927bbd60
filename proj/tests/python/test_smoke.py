"""Smoke tests for the Python bindings."""

import _ptri as ptri


def test_exact_helpers():
    assert ptri.gcd(12, 18) == 6
    assert ptri.isqrt(10**40) == 10**20
    assert ptri.is_perfect_square(21025) == (True, 145)
    assert ptri.is_perfect_square(73) == (False, None)
    assert ptri.squarefree_decompose(8) == (2, 2)

    surd = ptri.sqrt_of_rational(2)
    assert surd["radicand"] == 2
    assert surd["decimal"].startswith("1.41421356")

    assert ptri.nth_power_decompose(50, 18, 10, 6, 2) == (2, 5, 3)


def test_triples():
    assert ptri.validate_params(1, 2, 1) == []
    assert "order: m > n required" in ptri.validate_params(1, 1, 2)
    assert ptri.generate(1, 2, 1) == {"alpha": 5, "beta": 4, "gamma": 3}
    assert ptri.decompose(28, 96, 100) == {"delta": 4, "m": 4, "n": 3}
    assert ptri.enumerate_params(3) == [(2, 1), (3, 2)]


def test_elements_report():
    report = ptri.elements(1, 2, 1)
    assert report["triple"] == {"alpha": 5, "beta": 4, "gamma": 3}
    assert report["s"] == {"num": 6, "den": 1}
    assert report["rho"]["class"] == "Integer"
    assert report["delta_beta"]["num"] == 3
    assert report["delta_beta"]["den"] == 2
    assert report["delta_beta"]["radicand"] == 5

    big = ptri.elements(1, 10**10, 1)
    assert big["triple"]["alpha"] == 10**20 + 1

    by_triple = ptri.elements_from_triple(28, 96, 100)
    assert by_triple["delta_beta"]["num"] == 35
    assert by_triple["delta_beta"]["radicand"] == 1
    assert by_triple["d_beta"]["num"] == 140
    assert by_triple["d_beta"]["den"] == 3

    closed = ptri.closed_forms(1, 2, 1)
    assert closed["mu_gamma"] == report["mu_gamma"]


def test_bisectors():
    assert ptri.internal_bisector(96, 100, 28, "A")["num"] == 35
    assert ptri.internal_bisector(13, 14, 15, "B")["radicand"] > 1


def test_families():
    accepted = ptri.family_generate(1, 6, 1)
    assert accepted["accepted"]
    assert accepted["member"]["m"] == 1225
    rejected = ptri.family_generate(4, 2, 1)
    assert not rejected["accepted"]
    assert rejected["reasons"] == ["m=3 < n=4 (m > n required)"]

    enum = ptri.family_enumerate(5, 2)
    assert [m["m"] for m in enum["members"]] == [4]


def test_search_and_scan():
    assert ptri.search_quartic("A", "mixed", 100) == []
    assert ptri.search_quartic("A", "both-odd", 50) == [(1, 1, 1)]
    assert ptri.search_quartic("B", "both-odd", 50) == [(1, 1, 4)]
    assert ptri.median_radicand_scan(30) == []


def test_verify_paper():
    result = ptri.verify_paper(20)
    assert result["expected_match"] is True
    assert result["diagnostics"] == []
    statuses = {c["claim"]: c["status"] for c in result["claims"]}
    assert statuses["iii.delta_beta"] == "refuted"
    assert statuses["family1.delta_beta.denominator"] == "confirmed-with-erratum"
    assert statuses["i.R"] == "confirmed"
