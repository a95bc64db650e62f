"""Symmetric functions in the power-sum basis, plethysm and specializations."""
from . import core
from .core import (DEFAULT_MAX_DEGREE, E_series, H_series, SymFunc, e_in_p, h_in_p,
                   h_product, lyndon, p1, ribbon_in_p, symfunc_witness)
from .partitions import (coarsenings, complement, composition_from_descents,
                         compositions_of, cycle_type_square, descent_mask, descent_set,
                         divisors, is_power_of_two, merge, mobius, multiplicities,
                         odd_parts, partitions_of, partitions_up_to, z_of)
from .plethysm import (adams, evaluate_at, lyndon_of, p_substitute, plethysm,
                       principal_spec, scalar_product, shift_X_plus_1, theta)
from .codec import symfunc_to_json

__all__ = [
    "DEFAULT_MAX_DEGREE", "E_series", "H_series", "SymFunc", "e_in_p", "h_in_p",
    "h_product", "lyndon", "p1", "ribbon_in_p", "symfunc_witness", "coarsenings",
    "complement", "composition_from_descents", "compositions_of", "cycle_type_square",
    "descent_mask", "descent_set", "divisors", "is_power_of_two", "merge", "mobius",
    "multiplicities", "odd_parts", "partitions_of", "partitions_up_to", "z_of", "adams",
    "evaluate_at", "lyndon_of", "p_substitute", "plethysm", "principal_spec",
    "scalar_product", "shift_X_plus_1", "theta", "symfunc_to_json", "set_default_max_degree",
]


def set_default_max_degree(d: int) -> None:
    """Session-wide truncation degree used when none is given explicitly."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    core.DEFAULT_MAX_DEGREE = d
