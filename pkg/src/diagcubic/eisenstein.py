"""Exact arithmetic in the Eisenstein integers Z[w], w a primitive cube root of unity.

Elements are stored as ``a + b*w`` with ``w**2 = -1 - w``.  Z[w] is Euclidean,
so factorization reduces to factoring the rational norm and splitting each
rational prime.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from sympy import factorint

IntLike = Union[int, "EisensteinInt"]


class EisensteinInt:
    """An element a + b*w of Z[w]."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        self.a = int(a)
        self.b = int(b)

    @classmethod
    def coerce(cls, x: IntLike) -> "EisensteinInt":
        if isinstance(x, EisensteinInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to EisensteinInt")

    # ring operations
    def __add__(self, other: IntLike) -> "EisensteinInt":
        if isinstance(other, int):
            return EisensteinInt(self.a + other, self.b)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> "EisensteinInt":
        if isinstance(other, int):
            return EisensteinInt(self.a - other, self.b)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: IntLike) -> "EisensteinInt":
        return EisensteinInt.coerce(other) - self

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: IntLike) -> "EisensteinInt":
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return EisensteinInt(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "EisensteinInt":
        if n < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __floordiv__(self, other: IntLike) -> "EisensteinInt":
        return divrem(self, EisensteinInt.coerce(other))[0]

    def __mod__(self, other: IntLike) -> "EisensteinInt":
        return divrem(self, EisensteinInt.coerce(other))[1]

    def conjugate(self) -> "EisensteinInt":
        # conj(w) = w^2 = -1 - w
        return EisensteinInt(self.a - self.b, -self.b)

    def mul_zeta(self) -> "EisensteinInt":
        # w(a + bw) = aw + b(-1 - w)
        return EisensteinInt(-self.b, self.a - self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def exact_div(self, other: IntLike) -> "EisensteinInt":
        """Divide, raising ``ValueError`` unless the division is exact."""
        q, r = divrem(self, EisensteinInt.coerce(other))
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other: IntLike) -> bool:
        """True iff ``self`` divides ``other``."""
        if self.is_zero():
            return EisensteinInt.coerce(other).is_zero()
        return divrem(EisensteinInt.coerce(other), self)[1].is_zero()

    def to_complex(self) -> complex:
        return complex(self.a - self.b / 2, self.b * 0.8660254037844386)

    # comparison and hashing
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, EisensteinInt):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def key(self) -> tuple[int, int, int]:
        """Deterministic sort key: by norm, then coordinates."""
        return (self.norm(), self.a, self.b)

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b

    def __repr__(self) -> str:
        return f"EisensteinInt({self.a}, {self.b})"

    def __str__(self) -> str:
        return format_eisenstein(self)


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
ZETA = EisensteinInt(0, 1)
ZETA2 = EisensteinInt(-1, -1)
LAMBDA = EisensteinInt(1, -1)  # 1 - w, the prime above 3
UNITS = (ONE, -ONE, ZETA, -ZETA, ZETA2, -ZETA2)


def zeta_power(m: int) -> EisensteinInt:
    return (ONE, ZETA, ZETA2)[m % 3]


def _round_half_toward_zero(num: int, den: int) -> int:
    # den > 0
    q, r = divmod(abs(num), den)
    if 2 * r > den:
        q += 1
    return q if num >= 0 else -q


def divrem(x: IntLike, y: IntLike) -> tuple[EisensteinInt, EisensteinInt]:
    """Euclidean division: ``x = q*y + r`` with ``norm(r) <= 3/4 norm(y)``."""
    x = EisensteinInt.coerce(x)
    y = EisensteinInt.coerce(y)
    n = y.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[w]")
    t = x * y.conjugate()
    q = EisensteinInt(_round_half_toward_zero(t.a, n), _round_half_toward_zero(t.b, n))
    return q, x - q * y


def norm(x: IntLike) -> int:
    return EisensteinInt.coerce(x).norm()


def gcd(x: IntLike, y: IntLike) -> EisensteinInt:
    x = EisensteinInt.coerce(x)
    y = EisensteinInt.coerce(y)
    while not y.is_zero():
        x, y = y, divrem(x, y)[1]
    return x


def xgcd(x: IntLike, y: IntLike) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
    """Return ``(g, s, t)`` with ``g = s*x + t*y`` a gcd of x and y."""
    r0, r1 = EisensteinInt.coerce(x), EisensteinInt.coerce(y)
    s0, s1, t0, t1 = ONE, ZERO, ZERO, ONE
    while not r1.is_zero():
        q, r = divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def unit_exponent(u: EisensteinInt) -> tuple[int, int]:
    """Write a unit as ``sign * w**m``; returns ``(sign, m)``."""
    for m in range(3):
        z = zeta_power(m)
        if u == z:
            return 1, m
        if u == -z:
            return -1, m
    raise ValueError(f"{u} is not a unit")


def is_primary(q: EisensteinInt) -> bool:
    """Primary means congruent to 2 modulo 3."""
    return q.a % 3 == 2 and q.b % 3 == 0


def is_lambda_associate(q: IntLike) -> bool:
    return EisensteinInt.coerce(q).norm() == 3


class NotPrimaryError(ValueError):
    """Raised for the ramified prime, which has no primary associate."""


def primary_associate(q: IntLike) -> tuple[EisensteinInt, EisensteinInt]:
    """Return ``(unit, pi)`` with ``q = unit * pi`` and ``pi`` primary."""
    q = EisensteinInt.coerce(q)
    if q.norm() % 3 == 0:
        raise NotPrimaryError(f"{q} is divisible by 1 - w; no primary associate")
    for u in UNITS:
        # u runs over all units, so u.conjugate() = u^{-1} does too
        cand = q * u.conjugate()
        if is_primary(cand):
            return u, cand
    raise ValueError(f"{q} has no primary associate")


@lru_cache(maxsize=None)
def _rational_factor(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(factorint(n).items()))


@lru_cache(maxsize=None)
def split_prime(p: int) -> EisensteinInt:
    """A primary prime of norm ``p`` for a rational prime ``p = 1 (mod 3)``."""
    if p % 3 != 1:
        raise ValueError(f"{p} does not split in Z[w]")
    e = (p - 1) // 3
    g = 2
    while pow(g, e, p) == 1:
        g += 1
    r = pow(g, e, p)  # r^2 + r + 1 = 0 (mod p)
    pi = gcd(EisensteinInt(p), EisensteinInt(-r, 1))
    return primary_associate(pi)[1]


@dataclass(frozen=True)
class EisensteinFactorization:
    unit: EisensteinInt
    factors: tuple[tuple[EisensteinInt, int], ...]

    def value(self) -> EisensteinInt:
        out = self.unit
        for p, e in self.factors:
            out = out * p**e
        return out

    def primes(self) -> list[EisensteinInt]:
        return [p for p, _ in self.factors]

    def exponent(self, prime: EisensteinInt) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0


def _strip(x: EisensteinInt, p: EisensteinInt) -> tuple[EisensteinInt, int]:
    e = 0
    while True:
        q, r = divrem(x, p)
        if not r.is_zero():
            return x, e
        x, e = q, e + 1


def factor(x: IntLike) -> EisensteinFactorization:
    """Factor a nonzero element into a unit times primary primes (and 1 - w)."""
    x = EisensteinInt.coerce(x)
    if x.is_zero():
        raise ValueError("cannot factor zero")
    factors: list[tuple[EisensteinInt, int]] = []
    for p, _ in _rational_factor(x.norm()):
        if p == 3:
            primes = [LAMBDA]
        elif p % 3 == 2:
            primes = [EisensteinInt(p)]
        else:
            pi = split_prime(p)
            primes = [pi, pi.conjugate()]
        for pi in primes:
            x, e = _strip(x, pi)
            if e:
                factors.append((pi, e))
    if not x.is_unit():
        raise AssertionError(f"factorization left non-unit cofactor {x}")
    factors.sort(key=lambda t: t[0].key())
    return EisensteinFactorization(x, tuple(factors))


def cube_free_decompose(x: IntLike) -> tuple[EisensteinInt, EisensteinInt]:
    """Return ``(f, c)`` with ``x = f * c**3``, f cube-free with unit part w^m."""
    fac = factor(x)
    sign, m = unit_exponent(fac.unit)
    free = zeta_power(m)
    cube = EisensteinInt(sign)
    for p, e in fac.factors:
        free = free * p ** (e % 3)
        cube = cube * p ** (e // 3)
    return free, cube


def valuation(x: IntLike, p: IntLike) -> int:
    x = EisensteinInt.coerce(x)
    if x.is_zero():
        raise ValueError("valuation of zero")
    return _strip(x, EisensteinInt.coerce(p))[1]


def strip(x: IntLike, p: IntLike) -> tuple[int, EisensteinInt]:
    """Return ``(v, u)`` with ``x = p**v * u`` and ``p`` not dividing ``u``."""
    x = EisensteinInt.coerce(x)
    if x.is_zero():
        raise ValueError("valuation of zero")
    u, v = _strip(x, EisensteinInt.coerce(p))
    return v, u


def residue_representatives(q: IntLike) -> list[EisensteinInt]:
    """Coset representatives of Z[w]/(q) for a prime q."""
    q = EisensteinInt.coerce(q)
    n = q.norm()
    if n == 3:
        return [EisensteinInt(i) for i in range(3)]
    if q.b == 0:  # inert rational prime
        p = abs(q.a)
        return [EisensteinInt(a, b) for a in range(p) for b in range(p)]
    return [EisensteinInt(i) for i in range(n)]


def elements_up_to_norm(bound: int) -> list[EisensteinInt]:
    """All nonzero elements of norm at most ``bound``, sorted by ``key``."""
    out = []
    # a^2 - ab + b^2 >= 3b^2/4, so |b| <= sqrt(4 bound / 3)
    bmax = int((4 * bound / 3) ** 0.5) + 1
    for b in range(-bmax, bmax + 1):
        for a in range(-bmax - abs(b), bmax + abs(b) + 1):
            z = EisensteinInt(a, b)
            if 0 < z.norm() <= bound:
                out.append(z)
    out.sort(key=EisensteinInt.key)
    return out


def cube_root(x: IntLike) -> EisensteinInt | None:
    """Exact cube root in Z[w], or None when x is not a cube."""
    x = EisensteinInt.coerce(x)
    if x.is_zero():
        return ZERO
    if x.is_rational():
        r = _icbrt(abs(x.a))
        if r**3 == abs(x.a):
            return EisensteinInt(r if x.a > 0 else -r)
    c = x.to_complex()
    root = c ** (1 / 3)
    omega = complex(-0.5, 0.8660254037844386)
    for j in range(3):
        z = root * omega**j
        b = round(z.imag / 0.8660254037844386)
        a = round(z.real + b / 2)
        for da in (-1, 0, 1):
            for db in (-1, 0, 1):
                y = EisensteinInt(a + da, b + db)
                if y * y * y == x:
                    return y
    return None


def _icbrt(n: int) -> int:
    if n < 2:
        return n
    r = int(round(n ** (1 / 3)))
    # float error correction for large n
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def icbrt(n: int) -> int | None:
    """Integer cube root of n (any sign), or None if n is not a cube."""
    r = _icbrt(abs(n))
    if r**3 != abs(n):
        return None
    return r if n >= 0 else -r


_TERM = re.compile(r"([+-]?)(\d*)(\*?w(?:\^?\d)?)?")


def parse_eisenstein(text: str) -> EisensteinInt:
    """Parse ``a+b*w`` style input (whitespace-insensitive).

    Accepts forms such as ``7``, ``-11``, ``3+w``, ``2-3*w``, ``w``, ``-w``, ``5*w+2``.
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty Eisenstein integer")
    pos = 0
    a = b = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"malformed Eisenstein integer {text!r}")
        sign, digits, wpart = m.groups()
        if not digits and not wpart:
            raise ValueError(f"malformed Eisenstein integer {text!r}")
        coef = int(digits) if digits else 1
        if sign == "-":
            coef = -coef
        if wpart:
            if wpart.startswith("*") and not digits:
                raise ValueError(f"malformed Eisenstein integer {text!r}")
            power = wpart.lstrip("*")[1:].lstrip("^")
            if power in ("", "1"):
                b += coef
            elif power == "2":
                a -= coef
                b -= coef
            else:
                raise ValueError(f"unsupported power of w in {text!r}")
        else:
            a += coef
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"malformed Eisenstein integer {text!r}")
    return EisensteinInt(a, b)


def format_eisenstein(x: IntLike) -> str:
    x = EisensteinInt.coerce(x)
    if x.b == 0:
        return str(x.a)
    wterm = "w" if abs(x.b) == 1 else f"{abs(x.b)}*w"
    if x.a == 0:
        return wterm if x.b > 0 else "-" + wterm
    sign = "+" if x.b > 0 else "-"
    return f"{x.a}{sign}{wterm}"
