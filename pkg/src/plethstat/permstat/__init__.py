"""Brute-force oracle: permutation statistics and family distributions."""
from .enumerate import (ENUMERATION_CAP, EnumerationCapError, check_cap, class_table,
                        iter_perms, square_table, worker_count)
from .families import (ALL, CYCLIC, DERANGEMENTS, INVOLUTIONS, FamilySpec, class_weight,
                       family_symfunc)
from .oracle import (DistPoly, Profile, class_sizes, descent_table, family_size,
                     oracle_dist)
from .stats import StatRecord, comp_stats, cycle_type, mask_stats, stats_of

__all__ = [
    "ENUMERATION_CAP", "EnumerationCapError", "check_cap", "class_table", "iter_perms",
    "square_table", "worker_count", "ALL", "CYCLIC", "DERANGEMENTS", "INVOLUTIONS",
    "FamilySpec", "class_weight", "family_symfunc", "DistPoly", "Profile", "class_sizes",
    "descent_table", "family_size", "oracle_dist", "StatRecord", "comp_stats",
    "cycle_type", "mask_stats", "stats_of",
]
