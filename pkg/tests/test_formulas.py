import json
from fractions import Fraction

import pytest

from plethstat.eulerian import eulerian_A
from plethstat.exactalg import MultiPoly, RatFunc, TruncSeries, ratfunc_equal
from plethstat.formulas import (CheckFailed, SuiteConfig, evaluate_formula, formula_ids,
                                run_check, run_suite, suite_checks)
from plethstat.formulas import cyclic, cycletype, desmaj, fixpoints, involutions, lemmas
from plethstat.formulas.common import dist
from plethstat.formulas.general import general_pkdes
from plethstat.formulas.transforms import check_poly, check_rational, pq_series, uv_round_trip, uv_series
from plethstat.permstat import oracle_dist
from plethstat.symfunc import lyndon, p1

t, y, z, q, w = (MultiPoly.var(v) for v in "tyzqw")


def run_all(checks):
    reports = [run_check(*c) for c in checks]
    failed = [(r.id, r.n, r.witness) for r in reports if not r.passed]
    assert not failed
    return reports


# -- u, v inversion -------------------------------------------------------------------------

def test_uv_leading_terms():
    u, v = uv_series(6)
    assert list(v.coeffs[:3]) == [0, y, -2 * y * (1 - y)]
    assert list(u.coeffs[:3]) == [0, 1 - y, 2 * y * (1 - y)]


def test_P_functional_equation():
    prec = 8
    P, _ = pq_series(prec)
    tt = TruncSeries("t", [0, 1], prec)
    one = TruncSeries.constant(1, "t", prec)
    assert P == one - tt * P + tt * P * P * y


def test_uv_round_trip():
    uv_round_trip(8)


@pytest.mark.parametrize("a, b", [(0, 0), (1, 0), (2, 1), (3, 3), (0, 2)])
def test_lagrange_expansion(a, b):
    lemmas.lagrange_check(a, b, 8)


# -- general machinery ------------------------------------------------------------------------

def test_general_for_all_permutations():
    g = general_pkdes(p1() ** 4, 3)
    assert g.b == {4: 1}


def test_general_for_three_cycles():
    g = general_pkdes(lyndon(3), 4)
    third = Fraction(1, 3)
    assert g.b == {3: third, 1: -third}
    # y = 0: the theta sequence is the t-expansion of C_3(t)/(1-t)^4 with C_3 = 2t^2
    at0 = TruncSeries("t", [c.subs({"y": 0}) for c in g.theta_seq.coeffs], g.theta_seq.prec)
    assert RatFunc.from_factors(2 * t ** 2, {1 - t: 4}).series_witness(at0) is None


def test_general_d_for_two_cycles():
    g = general_pkdes(lyndon(2), 3)
    half = Fraction(1, 2)
    assert g.d == {2: half, 0: -half}


def test_general_rejects_non_symmetric_family():
    with pytest.raises(ValueError):
        evaluate_formula("thm:pkdes", 3, "nonsense")


# -- cyclic permutations --------------------------------------------------------------------

C7 = ((y + 17 * y ** 2) * t ** 2 + (2 * y + 64 * y ** 2 + 102 * y ** 3) * t ** 3
      + (3 * y + 99 * y ** 2 + 207 * y ** 3 + 39 * y ** 4) * t ** 4
      + (2 * y + 64 * y ** 2 + 102 * y ** 3) * t ** 5 + (y + 17 * y ** 2) * t ** 6)


def test_seven_cycles_small_pieces():
    assert cyclic.cycpk_b_poly(3) == 2 * t ** 2
    assert (eulerian_A(3) - (1 - t) ** 2 * eulerian_A(1)) * Fraction(1, 3) == 2 * t ** 2


def test_power_of_two_branch_at_four():
    lhs = cyclic._subs_pk(dist(4, "cyclic", "lpk"))
    check_rational(lhs, cyclic.cyclpk_rational(4, "pow2"), "n=4")
    assert cyclic.cyclpk_poly(4) == dist(4, "cyclic", "lpk")


@pytest.mark.parametrize("n", range(2, 9))
def test_branch_discrepancy(n):
    gap = cyclic.branch_discrepancy(n)
    if n in (2, 4, 8):
        expected = RatFunc.from_factors((1 - t) ** n * Fraction(1, n), {1 + t: n})
        assert ratfunc_equal(gap, expected)
    else:
        assert gap.is_zero()


def test_unknown_branch():
    with pytest.raises(ValueError):
        cyclic.cyclpk_rational(4, "power2")


def test_even_mobius_sum():
    assert [cyclic.even_mobius_sum(n) for n in range(1, 13)] == [0, -1, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0]


# -- involutions and fixed points ---------------------------------------------------------------

def test_two_involutions_square_to_identity():
    b = involutions.coefficients_at(involutions.b_gf(3), 2, zval=1)
    assert b[2] * 2 == 2
    assert involutions.square_counts(2, "b") == {2: 2}


@pytest.mark.parametrize("n", range(1, 8))
def test_a_coefficients_have_parity_of_n(n):
    for k, c in involutions.coefficients_at(involutions.a_gf(n + 1), n).items():
        assert (n - k) % 2 == 0 or c.is_zero()


def test_derangements_three():
    assert dist(3, "derangements", "des") == 2 * t ** 2
    assert dist(2, "derangements", "des") == t ** 2


def test_fixed_point_weight_disappears_at_one():
    for n in range(1, 7):
        assert dist(n, "all", "des,fix").subs({"z": 1}) == eulerian_A(n)


# -- cycle types --------------------------------------------------------------------------------

def test_necklace_counts():
    for k in range(6):
        assert cycletype.f_count(1, k) == cycletype.g_count(1, k) == cycletype.h_count(1, k) == k
    assert cycletype.f_count(2, 2) == 1
    assert cycletype.primitive_necklaces(6, 2) == cycletype.f_count(6, 2) == 9


def test_fulman_marginal_three():
    # the z3 part of the cycle-type des polynomial is C_3(t)
    F = dist(3, "all", "des,cycletype")
    z3 = F.expand_in("z3").get(1)
    assert z3 == 2 * t ** 2


# -- principal specialization -------------------------------------------------------------------

def test_desmaj_two():
    assert dist(2, "all", "desmaj") == t + q * t ** 2
    run_all(desmaj.desmaj_checks(1, 6, "all"))
    run_all(desmaj.desmaj_checks(5, 6, "cyclic"))


def test_q_integer():
    assert desmaj.q_integer(3) == 1 + q + q ** 2
    assert desmaj.q_integer(0).is_zero()


# -- reports and registry ------------------------------------------------------------------------

def test_report_format():
    r = run_check("thm:Ipkdesfix", 4, 5, lambda: None)
    d = json.loads(r.to_json())
    assert list(d) == ["id", "n", "k_max", "status", "witness", "ms"]
    assert (d["status"], d["witness"]) == ("pass", None)
    assert "ms" not in r.to_dict(timing=False)


def test_failing_and_crashing_bodies():
    def mismatch():
        check_poly(t, t + t ** 3, "demo")

    r = run_check("x", 1, None, mismatch)
    assert r.status == "fail" and "t^3" in r.witness
    r = run_check("x", 1, None, lambda: 1 / 0)
    assert r.status == "fail" and r.witness.startswith("ZeroDivisionError")
    with pytest.raises(CheckFailed):
        mismatch()


def test_formula_registry():
    ids = formula_ids()
    assert ids == sorted(ids) and "thm:cycpkdes" in ids and "eulerian:B" in ids
    poly, meta = evaluate_formula("thm:cycpkdes", 7)
    assert poly == C7
    assert meta == {"id": "thm:cycpkdes", "n": 7, "summary": meta["summary"], "t_prec": 11}
    poly, meta = evaluate_formula("thm:pkdes", 3, "involutions")
    assert poly == oracle_dist(3, "involutions", "pkdes").poly
    assert meta["family"] == "involutions"
    with pytest.raises(ValueError):
        evaluate_formula("thm:cycpkdes", 1)
    with pytest.raises(KeyError):
        evaluate_formula("thm:nothing", 3)


@pytest.mark.parametrize("fid", formula_ids())
def test_every_formula_matches_the_oracle(fid):
    profile = {
        "thm:cycpkdes": ("cyclic", "pkdes"), "cor:cycpk-a": ("cyclic", "pk"),
        "cor:cycpk-b": ("cyclic", "des"), "cor:CpkdesPpkdes": ("cyclic", "pk"),
        "thm:cyclpk": ("cyclic", "lpk"), "cor:ClpkPlpk": ("cyclic", "lpk"),
        "thm:cycudr": ("cyclic", "udr"), "thm:pkdes": ("derangements", "pkdes"),
        "thm:lpkdes": ("derangements", "lpkdes"), "thm:IpkdesAx": ("involutions", "pkdes"),
        "eulerian:A": ("all", "des"),
    }.get(fid)
    n = 5
    poly, _ = evaluate_formula(fid, n, "derangements")
    if profile is not None:
        assert poly == oracle_dist(n, *profile).poly
    else:
        assert not poly.is_zero()


def test_small_suites_pass():
    cfg = SuiteConfig(n_max=4, k_max=3, deg_max=5)
    reports = list(run_suite("all", cfg))
    assert reports and all(r.passed for r in reports)


def test_suite_names():
    with pytest.raises(KeyError):
        suite_checks("nope", SuiteConfig())


# -- the checks can fail --------------------------------------------------------------------------

def test_cyclic_checks_catch_a_corrupted_oracle(monkeypatch):
    real = cyclic.dist

    def corrupted(n, family, profile):
        p = real(n, family, profile)
        return p + t ** 2 if profile in ("des", "lpk") else p

    monkeypatch.setattr(cyclic, "dist", corrupted)
    by_id = {r.id: r for r in (run_check(*c) for c in cyclic.cyclic_checks(5, 3)[:9])}
    for fid in ("cor:cycpk-b", "thm:cyclpk", "thm:cyclpk-unified", "cor:ClpkPlpk"):
        assert not by_id[fid].passed, fid
    assert by_id["thm:cycpkdes"].passed


def test_cyclic_checks_catch_a_wrong_eulerian(monkeypatch):
    wrong = {k: eulerian_A(k) for k in range(8)}
    wrong[5] = wrong[5] + t ** 2
    monkeypatch.setattr(cyclic, "eulerian_A", lambda k: wrong[k])
    r = run_check(*cyclic.cyclic_checks(5, 3)[0])
    assert r.id == "thm:cycpkdes" and not r.passed


def test_fixpoint_checks_catch_a_wrong_closed_form(monkeypatch):
    real = fixpoints.pkdesfix_form

    def off(k, prec, zz=z, yy=y):
        s = real(k, prec, zz, yy)
        coeffs = list(s.coeffs)
        coeffs[3] = coeffs[3] + z
        return TruncSeries(s.var, coeffs, s.prec)

    monkeypatch.setattr(fixpoints, "pkdesfix_form", off)
    checks = [c for c in fixpoints.fixpoint_checks(3, 2, 4) if c[0] == "thm:pkdesfix-a"]
    assert checks and not run_check(*checks[0]).passed


def test_uv_precision_guard():
    from plethstat.formulas.transforms import series_to_poly
    s = TruncSeries("t", [0, y, 0, 0, t], 6)
    with pytest.raises(CheckFailed):
        series_to_poly(s, 2, "demo")
