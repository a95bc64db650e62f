"""Exact rational polynomial, rational-function and power-series arithmetic."""
from .poly import (MultiPoly, REGISTRY, ONE, ZERO, VarRegistry, is_scalar, poly_arith,
                   var, variables)
from .ratfunc import RatFunc, ratfunc_equal, rational_subs
from .series import (TruncSeries, eval_at_series, geometric, series_exp_log,
                     series_inverse, series_sqrt)
from .codec import (poly_from_json, poly_to_json, ratfunc_from_json, ratfunc_to_json,
                    rational_str)

__all__ = [
    "MultiPoly", "REGISTRY", "ONE", "ZERO", "VarRegistry", "is_scalar", "poly_arith",
    "var", "variables", "RatFunc", "ratfunc_equal", "rational_subs", "TruncSeries",
    "eval_at_series", "geometric", "series_exp_log", "series_inverse", "series_sqrt",
    "poly_from_json", "poly_to_json", "ratfunc_from_json", "ratfunc_to_json",
    "rational_str",
]
