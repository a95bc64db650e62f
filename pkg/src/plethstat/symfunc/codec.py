"""JSON form of a SymFunc: partitions by degree, reverse-lex inside a degree."""
from __future__ import annotations

from ..exactalg import ratfunc_to_json
from .core import SymFunc


def symfunc_to_json(f: SymFunc) -> dict:
    return {
        "maxDegree": f.max_degree,
        "terms": [{"partition": list(lam), "coeff": ratfunc_to_json(c)}
                  for lam, c in f.sorted_terms()],
    }
