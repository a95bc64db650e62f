import pytest

from plethstat.eulerian import eulerian_A, eulerian_B
from plethstat.exactalg import MultiPoly
from plethstat.permstat import oracle_dist

t = MultiPoly.var("t")


def poly(coeffs):
    return sum((c * t ** j for j, c in enumerate(coeffs)), MultiPoly.constant(0))


def test_small_values():
    assert eulerian_A(0) == 1
    assert eulerian_A(1) == t
    assert eulerian_A(3) == t + 4 * t ** 2 + t ** 3
    assert eulerian_B(0) == 1
    assert eulerian_B(1) == 1 + t
    assert eulerian_B(2) == 1 + 6 * t + t ** 2


def test_A7():
    assert eulerian_A(7) == poly([0, 1, 120, 1191, 2416, 1191, 120, 1])


def test_B3():
    assert eulerian_B(3) == poly([1, 23, 23, 1])


@pytest.mark.parametrize("n", range(1, 10))
def test_A_matches_enumeration(n):
    assert eulerian_A(n) == oracle_dist(n, "all", "des").poly


@pytest.mark.parametrize("n", range(1, 12))
def test_shape(n):
    a = [eulerian_A(n).coefficient(t=j) for j in range(n + 1)]
    b = [eulerian_B(n).coefficient(t=j) for j in range(n + 1)]
    assert eulerian_A(n).degree("t") == n and eulerian_B(n).degree("t") == n
    assert a[1:] == a[1:][::-1]
    assert b == b[::-1]
    assert sum(b) == 2 ** n * sum(a)


def test_negative_n():
    with pytest.raises(ValueError):
        eulerian_A(-1)
