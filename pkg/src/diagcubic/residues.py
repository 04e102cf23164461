"""Cubic residue symbols and cube tests in residue fields and p-adic fields."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from .eisenstein import (
    ONE,
    EisensteinInt,
    IntLike,
    divrem,
    gcd,
    zeta_power,
)

Rational = Union[int, Fraction]


class SymbolError(ValueError):
    """The cubic residue symbol is undefined for these arguments."""


def _powmod(x: EisensteinInt, n: int, q: EisensteinInt) -> EisensteinInt:
    result = ONE
    x = divrem(x, q)[1]
    while n:
        if n & 1:
            result = divrem(result * x, q)[1]
        x = divrem(x * x, q)[1]
        n >>= 1
    return result


def cubic_symbol(alpha: IntLike, q: IntLike) -> int:
    """Exponent e with ``alpha^((N(q)-1)/3) = w^e (mod q)``.

    ``q`` must be a prime of Z[w] not dividing 3, and coprime to ``alpha``.
    """
    alpha = EisensteinInt.coerce(alpha)
    q = EisensteinInt.coerce(q)
    n = q.norm()
    if n % 3 == 0:
        raise SymbolError("cubic residue symbol is undefined at the prime above 3")
    if n == 1 or n == 0:
        raise SymbolError(f"{q} is not a prime")
    if gcd(alpha, q).norm() != 1:
        raise SymbolError(f"{alpha} is not coprime to {q}")
    r = _powmod(alpha, (n - 1) // 3, q)
    for e in range(3):
        if divrem(r - zeta_power(e), q)[1].is_zero():
            return e
    raise SymbolError(f"{q} is not a prime (power residue is not a cube root of unity)")


def _as_fraction(u: Rational) -> Fraction:
    u = Fraction(u)
    if u == 0:
        raise ValueError("zero has no cube class")
    return u


def p_adic_split(u: Rational, p: int) -> tuple[int, Fraction]:
    """Return ``(v, w)`` with ``u = p^v * w`` and ``w`` a p-adic unit."""
    u = _as_fraction(u)
    num, den, v = u.numerator, u.denominator, 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def _unit_mod(w: Fraction, m: int) -> int:
    return w.numerator * pow(w.denominator, -1, m) % m


@lru_cache(maxsize=None)
def _cubic_nonresidue(p: int) -> int:
    g = 2
    while pow(g, (p - 1) // 3, p) == 1:
        g += 1
    return g


def is_cube_in_Qp(u: Rational, p: int) -> bool:
    """Membership of ``u`` in the cubes of Q_p^*."""
    v, w = p_adic_split(u, p)
    if v % 3:
        return False
    if p == 3:
        return _unit_mod(w, 9) in (1, 8)
    if p % 3 == 2:
        return True
    return pow(_unit_mod(w, p), (p - 1) // 3, p) == 1


def cube_class_Q3(u: Rational) -> tuple[int, int]:
    """Class of ``u`` in Q_3^*/(Q_3^*)^3 as ``(k, i)`` meaning 3^k * 2^i."""
    v, w = p_adic_split(u, 3)
    r = _unit_mod(w, 9)
    i = {1: 0, 8: 0, 2: 1, 7: 1, 4: 2, 5: 2}[r]
    return v % 3, i


def cube_class_Qp(u: Rational, p: int) -> tuple[int, int]:
    """Class of ``u`` in Q_p^*/(Q_p^*)^3 as ``(k, i)``.

    ``k`` is the valuation mod 3.  ``i`` indexes the unit class: the power of 2
    at p = 3, the power of the least cubic non-residue g for p = 1 (mod 3), and
    always 0 for p = 2 (mod 3) where every unit is a cube.
    """
    if p == 3:
        return cube_class_Q3(u)
    v, w = p_adic_split(u, p)
    if p % 3 == 2:
        return v % 3, 0
    e = (p - 1) // 3
    t = pow(_unit_mod(w, p), e, p)
    omega = pow(_cubic_nonresidue(p), e, p)
    for i in range(3):
        if pow(omega, i, p) == t:
            return v % 3, i
    raise AssertionError("unreachable: unit power is not a cube root of unity")


def cube_class_representatives(p: int) -> list[int]:
    """Integer representatives of every class of Q_p^*/(Q_p^*)^3."""
    if p == 3:
        units = [1, 2, 4]
    elif p % 3 == 2:
        units = [1]
    else:
        g = _cubic_nonresidue(p)
        units = [1, g, g * g % p]
    return [u * p**k for k in range(3) for u in units]


def is_residue_cube(u: IntLike, q: IntLike) -> bool:
    """Whether a q-adic unit is a cube in the residue field at q (q not above 3)."""
    return cubic_symbol(u, q) == 0
