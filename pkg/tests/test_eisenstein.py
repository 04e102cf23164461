import pytest
from hypothesis import given
from hypothesis import strategies as st

from diagcubic.eisenstein import (
    LAMBDA,
    ONE,
    ZETA,
    EisensteinInt,
    NotPrimaryError,
    cube_free_decompose,
    divrem,
    factor,
    format_eisenstein,
    gcd,
    is_primary,
    parse_eisenstein,
    primary_associate,
    xgcd,
)

small = st.integers(min_value=-60, max_value=60)
elements = st.builds(EisensteinInt, small, small)
nonzero = elements.filter(lambda x: not x.is_zero())


def test_zeta_relations():
    assert ZETA * ZETA == EisensteinInt(-1, -1)
    assert (1 - ZETA) * (1 - ZETA * ZETA) == 3
    assert EisensteinInt(5, 2).conjugate() == EisensteinInt(3, -2)
    assert ZETA**3 == ONE
    assert LAMBDA * LAMBDA == -3 * ZETA


def test_norm_examples():
    assert LAMBDA.norm() == 3
    assert ZETA.norm() == 1
    assert EisensteinInt(2).norm() == 4


def test_divrem_examples():
    q, r = divrem(7, EisensteinInt(3, 1))
    assert q * EisensteinInt(3, 1) + r == 7 and r.norm() < 7
    x = EisensteinInt(4, -9)
    assert divrem(x, 1) == (x, EisensteinInt(0))
    assert divrem(6, 2) == (EisensteinInt(3), EisensteinInt(0))
    with pytest.raises(ZeroDivisionError):
        divrem(1, 0)


@given(elements, elements)
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(elements, nonzero)
def test_divrem_euclidean(x, y):
    q, r = divrem(x, y)
    assert q * y + r == x
    assert 4 * r.norm() <= 3 * y.norm()


@given(nonzero, nonzero)
def test_gcd_divides_and_bezout(x, y):
    g = gcd(x, y)
    assert g.divides(x) and g.divides(y)
    d, s, t = xgcd(x, y)
    assert s * x + t * y == d
    assert d.norm() == g.norm()


@given(nonzero)
def test_factor_roundtrip(x):
    f = factor(x)
    assert f.value() == x
    assert f.unit.is_unit()
    norms = []
    for p, e in f.factors:
        assert e >= 1
        assert p == LAMBDA or is_primary(p)
        norms.append(p.norm())
    assert len({(p.a, p.b) for p, _ in f.factors}) == len(f.factors)
    assert (LAMBDA in f.primes()) == (x.norm() % 3 == 0)


def test_factor_examples():
    f = factor(550)
    assert f.unit == 1 and [(p, e) for p, e in f.factors] == [(2, 1), (5, 2), (11, 1)]
    f7 = factor(7)
    assert len(f7.factors) == 2
    (p, _), (q, _) = f7.factors
    assert p.norm() == q.norm() == 7 and p.conjugate() == q
    f3 = factor(3)
    assert f3.factors == ((LAMBDA, 2),)
    assert f3.value() == 3


def test_primary_associate():
    assert primary_associate(2) == (ONE, EisensteinInt(2))
    assert primary_associate(-11) == (-ONE, EisensteinInt(11))
    u, p = primary_associate(EisensteinInt(3, 1))
    assert is_primary(p) and u * p == EisensteinInt(3, 1)
    with pytest.raises(NotPrimaryError):
        primary_associate(LAMBDA)


def test_cube_free_examples():
    assert cube_free_decompose(8) == (ONE, EisensteinInt(2))
    assert cube_free_decompose(550) == (EisensteinInt(550), ONE)
    free, cube = cube_free_decompose(-ZETA * 16)
    assert free * cube**3 == -ZETA * 16
    assert free == ZETA * 2


@given(nonzero)
def test_cube_free_property(x):
    free, cube = cube_free_decompose(x)
    assert free * cube**3 == x
    f = factor(free)
    assert all(e in (1, 2) for _, e in f.factors)
    assert f.unit in (ONE, ZETA, ZETA * ZETA)


@given(elements)
def test_string_roundtrip(x):
    assert parse_eisenstein(format_eisenstein(x)) == x


def test_parse_forms():
    assert parse_eisenstein("w") == ZETA
    assert parse_eisenstein(" 2 - 3*w ") == EisensteinInt(2, -3)
    assert parse_eisenstein("w^2") == ZETA * ZETA
    assert parse_eisenstein("-7") == -7
    with pytest.raises(ValueError):
        parse_eisenstein("2+x")
