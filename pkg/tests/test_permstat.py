from collections import Counter

import pytest

from plethstat.exactalg import MultiPoly
from plethstat.permstat import (EnumerationCapError, FamilySpec, Profile, check_cap, class_sizes,
                                class_table, comp_stats, cycle_type, descent_table, family_size,
                                family_symfunc, iter_perms, mask_stats, oracle_dist, stats_of)
from plethstat.permstat.enumerate import _class_chunk, _run
from plethstat.symfunc import descent_mask, lyndon, p1, z_of

t, y, z, q = (MultiPoly.var(v) for v in "tyzq")
z1, z2, z3 = (MultiPoly.var(f"z{i}") for i in (1, 2, 3))


def test_fixed_example_statistics():
    s = stats_of((7, 1, 4, 6, 2, 8, 5, 3))
    assert (s.pk, s.lpk, s.udr) == (2, 3, 6)
    assert (s.des, s.maj, s.comp, s.fix) == (4, 18, (1, 3, 2, 1, 1), 0)


def test_composition_of_example():
    assert stats_of((8, 5, 7, 1, 2, 6, 4, 3)).comp == (1, 2, 3, 1, 1)


def test_comp_stats_match_example():
    s = comp_stats((1, 3, 2, 1, 1))
    assert (s.pk, s.lpk, s.udr) == (2, 3, 6)


def test_identity_composition():
    for n in range(1, 6):
        s = comp_stats((n,))
        assert (s.des, s.pk, s.lpk, s.udr, s.br) == (0, 0, 0, 1, 1)


def test_comp_stats_rejects_bad_composition():
    with pytest.raises(ValueError):
        comp_stats((0, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_statistics_depend_only_on_composition(n):
    for perm in iter_perms(n):
        s = stats_of(perm)
        assert comp_stats(s.comp) == s.descent_part()
        assert mask_stats(descent_mask(s.comp), n) == s.descent_part()


def test_cycle_type():
    assert cycle_type((2, 3, 1, 5, 4)) == (3, 2)
    assert cycle_type((1, 2, 3)) == (1, 1, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_vectorized_table_matches_plain_loop(n):
    plain = Counter()
    for perm in iter_perms(n):
        s = stats_of(perm)
        plain[(descent_mask(s.comp), s.ctype)] += 1
    assert class_table(n) == dict(plain)


def test_worker_count_does_not_change_counts(monkeypatch):
    serial = _run(_class_chunk, 8)
    monkeypatch.setenv("PERMSTAT_THREADS", "3")
    assert _run(_class_chunk, 8) == serial


def test_class_sizes_are_n_factorial_over_z():
    from math import factorial
    for n in range(1, 8):
        for lam, size in class_sizes(n).items():
            assert size == factorial(n) // z_of(lam)


# -- distributions --------------------------------------------------------------------------

def test_single_permutation_pkdes():
    assert oracle_dist(1, "all", "pkdes").poly == y * t


def test_three_cycles_des():
    assert oracle_dist(3, "cyclic", "des").poly == 2 * t ** 2


def test_involutions_des_fix():
    # 123 -> t z^3; 132, 213 -> t^2 z; 321 -> t^3 z
    assert oracle_dist(3, "involutions", "des,fix").poly == t * z ** 3 + 2 * t ** 2 * z + t ** 3 * z


def test_desmaj_three():
    assert oracle_dist(3, "all", "desmaj").poly == t + 2 * q * t ** 2 + 2 * q ** 2 * t ** 2 + q ** 3 * t ** 3


def test_cycletype_weights():
    expected = t * z1 ** 3 + 2 * t ** 2 * z3 + 2 * t ** 2 * z1 * z2 + t ** 3 * z1 * z2
    assert oracle_dist(3, "all", "des,cycletype").poly == expected


def test_frozen_distributions():
    assert oracle_dist(4, "derangements", "des").poly == 4 * t ** 2 + 4 * t ** 3 + t ** 4
    assert oracle_dist(4, "involutions", "lpk").poly == 1 + 7 * t + 2 * t ** 2
    assert oracle_dist(4, "all", "udr").poly == t + 7 * t ** 2 + 11 * t ** 3 + 5 * t ** 4
    assert oracle_dist(5, "cyclic", "pkdes").poly == (
        t ** 2 * (y + 5 * y ** 2) + t ** 3 * (y + 8 * y ** 2 + 3 * y ** 3) + t ** 4 * (y + 5 * y ** 2))


def test_family_sizes():
    assert [family_size(n, "derangements") for n in range(1, 9)] == [0, 1, 2, 9, 44, 265, 1854, 14833]
    assert [family_size(n, "involutions") for n in range(1, 9)] == [1, 2, 4, 10, 26, 76, 232, 764]
    assert family_size(6, "cyclic") == 120
    assert family_size(5, "cycle_type:2,2,1") == 15
    assert family_size(5, "fix_count:2") == 20


def test_descent_tables():
    assert descent_table(3, "cyclic") == {(2, 1): 1, (1, 2): 1}
    assert descent_table(2, "involutions") == {(2,): 1, (1, 1): 1}


def test_profiles():
    assert Profile.parse("pkdes,fix").name == "pkdes,fix"
    for bad in ("foo", "des,fix,fix", ""):
        with pytest.raises(ValueError):
            Profile.parse(bad)


def test_family_parse():
    assert FamilySpec.parse("cycle_type:1,2").label() == "cycle_type:2,1"
    with pytest.raises(ValueError):
        FamilySpec.parse("fix:1")
    with pytest.raises(ValueError):
        FamilySpec.parse("fix_count")


def test_family_symfunc():
    assert family_symfunc(4, FamilySpec.parse("cyclic")) == lyndon(4)
    assert family_symfunc(5, FamilySpec.parse("all")) == p1() ** 5


def test_family_symfunc_needs_a_class_family():
    with pytest.raises(ValueError, match="Q not symmetric"):
        family_symfunc(3, "cyclic")


def test_cap():
    check_cap(9)
    with pytest.raises(EnumerationCapError, match="cap of 9"):
        check_cap(10)
    check_cap(10, unsafe=True)
    with pytest.raises(EnumerationCapError):
        check_cap(11, unsafe=True)
    with pytest.raises(EnumerationCapError):
        oracle_dist(10, "all", "des")


@pytest.mark.parametrize("n", range(1, 8))
def test_reverse_complement_swaps_peaks_and_valleys(n):
    for perm in iter_perms(n):
        rc = tuple(n + 1 - perm[n - i] for i in range(1, n + 1))
        a, b = stats_of(perm), stats_of(rc)
        assert (a.des, a.ctype) == (b.des, b.ctype)
        assert (a.pk, a.val) == (b.val, b.pk)


def test_derangement_recurrence():
    d = {n: family_size(n, "derangements") for n in range(1, 10)}
    for n in range(3, 10):
        assert d[n] == (n - 1) * (d[n - 1] + d[n - 2])
