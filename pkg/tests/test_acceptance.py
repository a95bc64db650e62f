"""The ten acceptance criteria, each as one test with exact comparisons and its time limit."""
import json
import os
import subprocess
import sys
import time
from math import factorial

from plethstat.exactalg import MultiPoly
from plethstat.formulas import run_check
from plethstat.formulas import cyclic, cycletype, desmaj, fixpoints, involutions, lemmas
from plethstat.formulas.symmetry import compsym1_checks, compsym2_checks, qualifying_types
from plethstat.permstat import oracle_dist

t, y = MultiPoly.var("t"), MultiPoly.var("y")

C7 = ((y + 17 * y ** 2) * t ** 2 + (2 * y + 64 * y ** 2 + 102 * y ** 3) * t ** 3
      + (3 * y + 99 * y ** 2 + 207 * y ** 3 + 39 * y ** 4) * t ** 4
      + (2 * y + 64 * y ** 2 + 102 * y ** 3) * t ** 5 + (y + 17 * y ** 2) * t ** 6)


def run_checks(checks):
    reports = [run_check(*c) for c in checks]
    failed = [f"{r.id} n={r.n}: {r.witness}" for r in reports if not r.passed]
    assert not failed, "\n".join(failed)
    return reports


def ids_of(reports):
    return {r.id for r in reports}


def test_c1_seven_cycles(criterion):
    record, _ = criterion
    record(1, "C_7 (pk,des) by u,v inversion equals the known polynomial and enumeration, < 30 s")
    start = time.perf_counter()
    got = cyclic.cycpkdes_poly(7)
    oracle = oracle_dist(7, "cyclic", "pkdes").poly
    elapsed = time.perf_counter() - start
    assert got == C7
    assert oracle == C7
    assert oracle.evaluate({"y": 1, "t": 1}) == factorial(6)
    assert elapsed < 30


def test_c2_cyclic_suite(criterion):
    record, _ = criterion
    record(2, "cyclic identities for 2 <= n <= 8, < 2 min")
    wanted = {"cor:cycpk-a", "cor:cycpk-b", "thm:cyclpk", "thm:cyclpk-unified",
              "cor:CpkdesPpkdes", "cor:ClpkPlpk", "thm:cycudr", "thm:cycpkdes"}
    start = time.perf_counter()
    reports = run_checks(cyclic.suite(8, 5))
    elapsed = time.perf_counter() - start
    assert wanted <= ids_of(reports)
    assert {r.n for r in reports} == set(range(2, 9))
    # both lpk branches are exercised: powers of two and odd-divisor sums
    for n in range(2, 9):
        assert cyclic.cyclpk_poly(n) == oracle_dist(n, "cyclic", "lpk").poly
    assert elapsed < 120


def test_c3_involution_suite(criterion):
    record, _ = criterion
    record(3, "involution suite for 1 <= n <= 8, k <= 5, with square-cycle counts")
    reports = run_checks(involutions.suite(8, 5))
    wanted = {"thm:Ipkdesfix", "thm:Ilpkdesfix", "thm:Iudrfix", "thm:eul-inv-a", "thm:eul-inv-b",
              "thm:lpk-fix-B", "thm:IudrA", "thm:IpkdesAx", "cor:IpkPpk", "cor:IlpkPlpk",
              "cor:IpkA-count-a", "cor:IpkA-count-b", "cor:IlpkA-count-d", "lem:Qinvalt"}
    assert wanted <= ids_of(reports)
    assert {r.n for r in reports} == set(range(1, 9))
    assert all(r.k_max in (None, 5) for r in reports)


def test_c4_fixpoint_suite(criterion):
    record, _ = criterion
    record(4, "fixed-point suite for 1 <= n <= 8, k <= 5; Stembridge and Petersen for n <= 9")
    reports = run_checks(fixpoints.suite(8, 5))
    wanted = {"thm:pkdesfix-a", "thm:pkdesfix-b", "cor:pkfixdesfix-a", "cor:pkfixdesfix-b",
              "cor:pkfixdesfix-c", "cor:pkfixdesfix-d", "thm:pkdesfixA-a", "thm:pkdesfixA-b",
              "cor:pkfixPpk", "thm:lpkdesfix-a", "thm:lpkdesfix-b", "thm:lpkfixB",
              "thm:udrfix-a", "thm:udrfix-b", "thm:udrfixAB"}
    assert wanted <= ids_of(reports)
    for fid in ("e:Apk", "e:Petersen"):
        assert {r.n for r in reports if r.id == fid} == set(range(1, 10))


def test_c5_cycletype_suite(criterion):
    record, _ = criterion
    record(5, "cycle-type suite for 1 <= n <= 7, k <= 5; necklace counts for i <= 12, k <= 5")
    reports = run_checks(cycletype.suite(7, 5))
    wanted = {"lem:Pproduct", "thm:pkdesct-a", "thm:pkdesct-b", "thm:pkdesct-c",
              "thm:lpkdesct-a", "thm:lpkdesct-b", "thm:udrct", "necklace:integrality",
              "necklace:enumeration", "necklace:products"}
    assert wanted <= ids_of(reports)
    assert {r.n for r in reports if r.id == "thm:pkdesct-a"} == set(range(1, 8))
    neck = [r for r in reports if r.id.startswith("necklace:")]
    assert all((r.n, r.k_max) == (12, 5) for r in neck)


def test_c6_lemma_suite(criterion):
    record, _ = criterion
    record(6, "ribbon / power-sum expansions to degree 6, Lagrange a,b <= 3, properties to degree 8, mu to 10^4")
    checks = lemmas.suite(8)
    reports = run_checks(checks)
    by_id = {r.id: r for r in reports}
    for fid in ("lem:ribexp-a", "lem:ribexp-b", "lem:ribexp-c", "lem:psexp-a", "lem:psexp-b",
                "lem:psexp-c", "e:dd", "e:biruns"):
        assert by_id[fid].n == 6
    for fid in ("lem:Hps", "lem:HE", "lem:plethHsp", "lem:spconst", "lem:scalprodh",
                "lem:expsum", "lem:HEXplus1", "thm:monic"):
        assert by_id[fid].n == 8
    assert by_id["lem:lagrange-PQ"].n == 8
    assert by_id["lem:mu"].n == 10_000
    for a in range(4):
        for b in range(4):
            lemmas.lagrange_check(a, b, 8)


def test_c7_lyndon_ribbon_pairing(criterion):
    record, _ = criterion
    record(7, "<L_lambda, r_M> equals enumeration for every lambda, M with n <= 7, < 1 min")
    start = time.perf_counter()
    for n in range(1, 8):
        lemmas.lyndon_ribbon_check(n)
    assert time.perf_counter() - start < 60


def test_c8_complementation_symmetry(criterion):
    record, _ = criterion
    record(8, "complementation symmetry for qualifying cycle types and involutions, n <= 8")
    checks = []
    for n in range(1, 9):
        checks += compsym1_checks(n) + compsym2_checks(n)
    reports = run_checks(checks)
    assert ids_of(reports) == {"thm:compsym1", "lem:compsym1", "thm:compsym2", "lem:compsym2"}
    assert sum(len(qualifying_types(n)) for n in range(1, 9)) > 8


def test_c9_desmaj(criterion):
    record, _ = criterion
    record(9, "(des, maj) by principal specialization, n <= 6, k <= 6, four families, exact in q")
    checks = desmaj.suite(6, 6)
    reports = run_checks(checks)
    families = {r.id.split("/")[1] for r in reports if "/" in r.id}
    assert families == {"all", "cyclic", "involutions", "derangements"}
    assert all(r.k_max == 6 for r in reports)
    assert max(r.n for r in reports) == 6


def _verify_payload(env):
    proc = subprocess.run([sys.executable, "-m", "plethstat", "verify", "--suite", "all",
                           "--n-max", "7"], capture_output=True, text=True, env=env)
    assert proc.returncode == 0, proc.stderr
    lines = []
    for line in proc.stdout.splitlines():
        obj = json.loads(line)
        del obj["ms"]
        lines.append(json.dumps(obj, separators=(",", ":")))
    return lines


def test_c10_determinism(criterion):
    record, _ = criterion
    record(10, "two runs of verify --suite all --n-max 7 give identical payloads (ms removed)")
    env = dict(os.environ)
    env["PERMSTAT_THREADS"] = "1"
    first = _verify_payload(env)
    env["PERMSTAT_THREADS"] = "2"
    second = _verify_payload(env)
    assert first and first == second
    assert all(json.loads(line)["status"] == "pass" for line in first)
