"""Suite and formula lookup tables used by the command line."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional

from ..eulerian import eulerian_A, eulerian_B
from ..exactalg import MultiPoly
from ..permstat import FamilySpec, family_symfunc
from . import cyclic, cycletype, desmaj, fixpoints, involutions, lemmas
from .report import VerifyReport, run_check
from .transforms import lpkdes_via_uv, pkdes_via_uv

SUITE_NAMES = ("lemmas", "cyclic", "involutions", "fixpoints", "cycletype", "desmaj")


@dataclass(frozen=True)
class SuiteConfig:
    n_max: int = 8
    k_max: int = 5
    deg_max: int = 8


def suite_checks(name: str, cfg: SuiteConfig) -> List[tuple]:
    """The (id, n, k_max, body) tuples of a suite, in a fixed order."""
    if name == "all":
        out: List[tuple] = []
        for part in SUITE_NAMES:
            out += suite_checks(part, cfg)
        return out
    if name == "lemmas":
        return lemmas.suite(cfg.deg_max, cfg.n_max)
    if name == "cyclic":
        return cyclic.suite(cfg.n_max, cfg.k_max)
    if name == "involutions":
        return involutions.suite(cfg.n_max, cfg.k_max)
    if name == "fixpoints":
        return fixpoints.suite(cfg.n_max, cfg.k_max)
    if name == "cycletype":
        return cycletype.suite(cfg.n_max, cfg.k_max)
    if name == "desmaj":
        # principal specializations are cheap; always reach t^6
        return desmaj.suite(cfg.n_max, max(cfg.k_max, 6))
    raise KeyError(name)


def run_suite(name: str, cfg: SuiteConfig) -> Iterator[VerifyReport]:
    for check in suite_checks(name, cfg):
        yield run_check(*check)


# -- formulas ------------------------------------------------------------------------

@dataclass(frozen=True)
class Formula:
    compute: Callable[[int, FamilySpec], MultiPoly]
    summary: str
    needs_family: bool = False
    min_n: int = 1
    settings: Callable[[int], dict] = field(default=lambda n: {})


def _uv_settings(n: int) -> dict:
    return {"t_prec": n + 4}


def _gf_slice(gf: Callable[[int], object]) -> Callable[[int, FamilySpec], MultiPoly]:
    return lambda n, fam: gf(n + 1).coeffs[n]


FORMULAS: Dict[str, Formula] = {
    "eulerian:A": Formula(lambda n, fam: eulerian_A(n), "A_n(t) from sum k^n t^k", min_n=0),
    "eulerian:B": Formula(lambda n, fam: eulerian_B(n), "B_n(t) from sum (2k+1)^n t^k", min_n=0),
    "thm:cycpkdes": Formula(lambda n, fam: cyclic.cycpkdes_poly(n),
                            "(pk, des) over n-cycles by u, v inversion", min_n=2, settings=_uv_settings),
    "cor:cycpk-a": Formula(lambda n, fam: cyclic.cycpk_a_poly(n), "peaks over n-cycles", min_n=2),
    "cor:cycpk-b": Formula(lambda n, fam: cyclic.cycpk_b_poly(n), "descents over n-cycles", min_n=2),
    "cor:CpkdesPpkdes": Formula(lambda n, fam: cyclic.cpk_from_peaks(n),
                                "peaks over n-cycles from peak polynomials", min_n=2),
    "thm:cyclpk": Formula(lambda n, fam: cyclic.cyclpk_poly(n), "left peaks over n-cycles", min_n=2),
    "cor:ClpkPlpk": Formula(lambda n, fam: cyclic.clpk_from_left_peaks(n),
                            "left peaks over n-cycles from left peak polynomials", min_n=2),
    "thm:cycudr": Formula(lambda n, fam: cyclic.cycudr_poly(n), "up-down runs over n-cycles", min_n=2),
    "thm:pkdes": Formula(lambda n, fam: pkdes_via_uv(family_symfunc(n, fam), n),
                         "(pk, des) of a family by u, v inversion", needs_family=True,
                         settings=_uv_settings),
    "thm:lpkdes": Formula(lambda n, fam: lpkdes_via_uv(family_symfunc(n, fam), n),
                          "(lpk, des) of a family by u, v inversion", needs_family=True,
                          settings=_uv_settings),
    "thm:IpkdesAx": Formula(lambda n, fam: pkdes_via_uv(involutions.q_squares(n), n),
                            "(pk, des) over involutions from squares of cycle types",
                            settings=_uv_settings),
    "thm:eul-inv-a": Formula(_gf_slice(involutions.a_gf), "[x^n] of the a_{n,k}(z) w^k series"),
    "thm:eul-inv-b": Formula(_gf_slice(involutions.b_gf), "[x^n] of the b_{n,k}(z) w^k series"),
    "thm:lpk-fix-B": Formula(_gf_slice(involutions.d_gf), "[x^n] of the d_{n,k}(z) w^k series"),
    "thm:pkdesfixA-a": Formula(_gf_slice(fixpoints.a_gf), "[x^n] of the fixed-point a_{n,k}(z) w^k series"),
    "thm:pkdesfixA-b": Formula(_gf_slice(fixpoints.b_gf), "[x^n] of the fixed-point b_{n,k}(z) w^k series"),
    "thm:lpkfixB": Formula(_gf_slice(fixpoints.d_gf), "[x^n] of the fixed-point d_{n,k}(z) w^k series"),
}


def formula_ids() -> List[str]:
    return sorted(FORMULAS)


def evaluate_formula(formula_id: str, n: int, family: Optional[str] = None) -> tuple:
    """(polynomial, metadata) for a formula id; raises KeyError or ValueError."""
    f = FORMULAS[formula_id]
    if n < f.min_n:
        raise ValueError(f"{formula_id} needs n >= {f.min_n}")
    fam = FamilySpec.parse(family or "all")
    meta = {"id": formula_id, "n": n, "summary": f.summary}
    if f.needs_family:
        meta["family"] = fam.label()
    meta.update(f.settings(n))
    return MultiPoly.coerce(f.compute(n, fam)), meta
