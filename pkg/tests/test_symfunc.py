from fractions import Fraction

import pytest

from plethstat.exactalg import MultiPoly
from plethstat.permstat import descent_table
from plethstat.symfunc import (E_series, H_series, SymFunc, compositions_of, cycle_type_square,
                               e_in_p, h_in_p, lyndon, lyndon_of, mobius, p1, p_substitute,
                               partitions_of, plethysm, principal_spec, ribbon_in_p,
                               scalar_product, shift_X_plus_1, theta, z_of)

w = MultiPoly.var("w")
q = MultiPoly.var("q")


def test_partitions():
    assert partitions_of(0) == ((),)
    assert set(partitions_of(2)) == {(2,), (1, 1)}
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(10)) == 42


def test_z():
    assert z_of((1, 1)) == 2
    assert z_of((2, 1)) == 2
    assert z_of((3, 3, 1)) == 18


@pytest.mark.parametrize("d, mu", [(1, 1), (2, -1), (4, 0), (6, 1), (30, -1), (12, 0)])
def test_mobius(d, mu):
    assert mobius(d) == mu


def test_adams_composition():
    assert plethysm(SymFunc.p(2), SymFunc.p(3)) == SymFunc.p(6)


def test_h2_of_p1():
    half = Fraction(1, 2)
    assert plethysm(h_in_p(2), lyndon(1)) == SymFunc.p(1, 1, coeff=half) + SymFunc.p(2, coeff=half)


def test_divergent_plethysm():
    with pytest.raises(ValueError, match="divergent"):
        plethysm(H_series(4), SymFunc.constant(1) + p1())


def test_scalar_product():
    assert scalar_product(SymFunc.p(2), SymFunc.p(2)) == 2
    assert scalar_product(SymFunc.p(2), SymFunc.p(1, 1)) == 0


def test_scalar_product_of_series():
    zz = MultiPoly.var("z")
    # <H(z), H> = sum z^n, with H(z) = H[zX]
    Hz = plethysm(H_series(6), p1().scale(zz)).as_bounded()
    value = scalar_product(Hz, H_series(6))
    assert value == sum((zz ** n for n in range(7)), MultiPoly.constant(0))


def test_two_unbounded_series_refused():
    with pytest.raises(ValueError, match="undefined scalar product"):
        scalar_product(H_series(), H_series())


def test_h_and_e():
    assert h_in_p(1) == p1()
    half = Fraction(1, 2)
    assert e_in_p(2) == SymFunc.p(1, 1, coeff=half) - SymFunc.p(2, coeff=half)


def test_H_times_E_negated():
    prod = (H_series(6) * E_series(6, negate=True)).truncate(6)
    assert prod == SymFunc.constant(1)


def test_ribbons():
    for n in range(1, 5):
        assert ribbon_in_p((n,)) == h_in_p(n)
    assert ribbon_in_p((1, 1)) == e_in_p(2)
    with pytest.raises(ValueError):
        ribbon_in_p(())


def test_lyndon_ribbon_pairing_three_cycles():
    assert scalar_product(lyndon(3), ribbon_in_p((2, 1))) == 1
    assert scalar_product(lyndon(3), ribbon_in_p((1, 2))) == 1
    assert scalar_product(lyndon(3), ribbon_in_p((3,))) == 0


def test_lyndon_small():
    half = Fraction(1, 2)
    assert lyndon(1) == p1()
    assert lyndon(2) == SymFunc.p(1, 1, coeff=half) - SymFunc.p(2, coeff=half)


@pytest.mark.parametrize("n", range(1, 7))
def test_lyndon_sum_is_p1_power(n):
    total = SymFunc.zero()
    for lam in partitions_of(n):
        total = total + lyndon_of(lam)
    assert total == p1() ** n


@pytest.mark.parametrize("n", range(1, 6))
def test_ribbon_pairing_counts_all_permutations(n):
    # <p1^n, r_L> is the number of permutations with descent composition L
    table = descent_table(n)
    for comp in compositions_of(n):
        assert scalar_product(p1() ** n, ribbon_in_p(comp)) == table.get(comp, 0)


def test_shift():
    assert shift_X_plus_1(p1()) == p1() + SymFunc.constant(1)


def test_shift_of_h_is_partial_sum():
    for n in range(5):
        expected = SymFunc.zero()
        for j in range(n + 1):
            expected = expected + (h_in_p(j) if j else SymFunc.constant(1))
        assert shift_X_plus_1(h_in_p(n) if n else SymFunc.constant(1)) == expected


def test_theta():
    yy = MultiPoly.var("y")
    xx = MultiPoly.var("x")
    assert theta(p1(), 2) == 2 * (1 + yy) * xx


def test_theta_at_y_zero_counts_ones():
    for k in range(4):
        assert theta(SymFunc.p(2, 1), k, y=0, x=None) == k * k
        assert theta(h_in_p(2), k, y=0, x=None) == k * (k + 1) // 2


def test_p_substitute():
    assert p_substitute(p1() ** 4, lambda i: w) == w ** 4
    assert p_substitute(lyndon(3), lambda i: w if i % 2 else 0) == (w ** 3 - w) * Fraction(1, 3)
    assert p_substitute(lyndon(2), lambda i: w if i % 2 else 1) == (w ** 2 - 1) * Fraction(1, 2)


def test_principal_spec():
    assert principal_spec(SymFunc.p(2), 2) == 1 + q ** 2
    f = h_in_p(3)
    assert principal_spec(f, 1) == 1
    # h_2(q, 1) = 1 + q + q^2
    assert principal_spec(h_in_p(2), 2) == 1 + q + q ** 2


@pytest.mark.parametrize("lam, sq", [((3,), (3,)), ((2,), (1, 1)), ((4, 3), (3, 2, 2)),
                                     ((6,), (3, 3)), ((1, 1), (1, 1))])
def test_cycle_type_square(lam, sq):
    assert cycle_type_square(lam) == sq


def test_json_layout():
    from plethstat.symfunc import symfunc_to_json
    obj = symfunc_to_json(h_in_p(2) + SymFunc.p(3))
    assert obj["maxDegree"] == 3
    assert [term["partition"] for term in obj["terms"]] == [[2], [1, 1], [3]]
    assert obj["terms"][0]["coeff"]["num"]["terms"] == [{"c": "1/2", "e": []}]
