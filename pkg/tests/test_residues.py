from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diagcubic.eisenstein import EisensteinInt, LAMBDA, split_prime
from diagcubic.residues import (
    SymbolError,
    cube_class_Q3,
    cube_class_Qp,
    cube_class_representatives,
    cubic_symbol,
    is_cube_in_Qp,
    is_residue_cube,
    p_adic_split,
)

Q7 = EisensteinInt(-1, -3)
PRIMES = [2, 3, 5, 7, 11, 13, 19, 31, 37]


def test_symbol_examples():
    assert cubic_symbol(2, Q7) == 2
    assert cubic_symbol(2, EisensteinInt(2, 3)) == 1
    assert cubic_symbol(8, Q7) == 0
    assert is_residue_cube(27, 13)


def test_symbol_errors():
    with pytest.raises(SymbolError):
        cubic_symbol(2, LAMBDA)
    with pytest.raises(SymbolError):
        cubic_symbol(7, Q7)
    with pytest.raises(SymbolError):
        cubic_symbol(2, 1)


@given(st.integers(1, 500), st.integers(1, 500))
def test_symbol_multiplicative(a, b):
    q = split_prime(13)
    if a % 13 == 0 or b % 13 == 0:
        return
    assert cubic_symbol(a * b, q) == (cubic_symbol(a, q) + cubic_symbol(b, q)) % 3


@given(st.integers(-10**6, 10**6).filter(bool), st.sampled_from(PRIMES))
def test_cube_class_of_cube_is_trivial(u, p):
    assert cube_class_Qp(u**3, p) == (0, 0)
    assert is_cube_in_Qp(u**3, p)


@given(
    st.integers(-10**4, 10**4).filter(bool),
    st.integers(-10**4, 10**4).filter(bool),
    st.sampled_from(PRIMES),
)
def test_cube_class_is_homomorphism(u, v, p):
    a, b, c = cube_class_Qp(u, p), cube_class_Qp(v, p), cube_class_Qp(u * v, p)
    assert c == ((a[0] + b[0]) % 3, (a[1] + b[1]) % 3)


@pytest.mark.parametrize("p", PRIMES)
def test_representatives_cover_every_class(p):
    reps = cube_class_representatives(p)
    classes = {cube_class_Qp(r, p) for r in reps}
    assert len(classes) == len(reps)
    assert len(reps) == (9 if p == 3 or p % 3 == 1 else 3)


def test_q3_classes():
    assert cube_class_Q3(18) == (2, 1)
    assert cube_class_Q3(10) == (0, 0)
    assert cube_class_Q3(Fraction(1, 3)) == (2, 0)
    assert p_adic_split(Fraction(50, 3), 5) == (2, Fraction(2, 3))
