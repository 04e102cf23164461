"""The sqrt(-3)-Selmer group of E_A : x^3 + y^3 = A z^3 over k = Q(w).

Classes of k^*/(k^*)^3 are carried as :class:`CubeClass`.  A class alpha lies
in S(A) iff the torsor C_{A,alpha} : alpha x^3 + alpha^-1 y^3 = A z^3 is
everywhere locally solvable; only alpha supported on w and the primes of A can
qualify, and multiplying by the class of A (which has the global point
(1, 0, 1)) leaves 3^r coset representatives to test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from sympy import factorint

from .eisenstein import (
    LAMBDA,
    ZERO,
    ZETA,
    EisensteinInt,
    IntLike,
    cube_root,
    elements_up_to_norm,
    factor,
    format_eisenstein,
    unit_exponent,
    zeta_power,
)
from .localsolve import (
    CurveSpec,
    LocalVerdict,
    solvable_inert_rational,
    solvable_kq_torsor,
    solvable_lambda,
    torsor_curve,
)


class ParityViolation(RuntimeError):
    """s(A) and s0(A) disagree mod 2; some local decision is wrong."""


@dataclass(frozen=True)
class CubeClass:
    """An element of k^*/(k^*)^3: w^unit_exp times prime powers with exponents 1 or 2."""

    unit_exp: int
    support: tuple[tuple[EisensteinInt, int], ...] = ()

    @classmethod
    def make(cls, unit_exp: int, support: Iterable[tuple[EisensteinInt, int]]) -> "CubeClass":
        merged: dict[tuple[int, int], tuple[EisensteinInt, int]] = {}
        for p, e in support:
            key = (p.a, p.b)
            old = merged.get(key, (p, 0))[1]
            merged[key] = (p, (old + e) % 3)
        items = sorted(((p, e) for p, e in merged.values() if e), key=lambda t: t[0].key())
        return cls(unit_exp % 3, tuple(items))

    @classmethod
    def of(cls, x: IntLike) -> "CubeClass":
        """The class of a nonzero element (primes in primary form, 1 - w for 3)."""
        fac = factor(x)
        _, m = unit_exponent(fac.unit)
        return cls.make(m, fac.factors)

    def element(self) -> EisensteinInt:
        out = zeta_power(self.unit_exp)
        for p, e in self.support:
            out = out * p**e
        return out

    def __mul__(self, other: "CubeClass") -> "CubeClass":
        return CubeClass.make(self.unit_exp + other.unit_exp, self.support + other.support)

    def __pow__(self, n: int) -> "CubeClass":
        return CubeClass.make(self.unit_exp * n, [(p, e * n) for p, e in self.support])

    def is_trivial(self) -> bool:
        return self.unit_exp == 0 and not self.support

    def vector(self, primes: Sequence[EisensteinInt]) -> tuple[int, ...]:
        exps = {(p.a, p.b): e for p, e in self.support}
        if len(exps) != sum(1 for p in primes if (p.a, p.b) in exps):
            raise ValueError("class is not supported on the given primes")
        return (self.unit_exp,) + tuple(exps.get((p.a, p.b), 0) for p in primes)

    @classmethod
    def from_vector(cls, vec: Sequence[int], primes: Sequence[EisensteinInt]) -> "CubeClass":
        return cls.make(vec[0], zip(primes, vec[1:]))

    def __str__(self) -> str:
        parts = []
        if self.unit_exp:
            parts.append("w" if self.unit_exp == 1 else "w^2")
        for p, e in self.support:
            base = format_eisenstein(p)
            if not p.is_rational() or p.a < 0:
                base = f"({base})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class CurvePoint:
    x: EisensteinInt
    y: EisensteinInt
    z: EisensteinInt

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, EisensteinInt.coerce(getattr(self, name)))
        if self.x.is_zero() and self.y.is_zero() and self.z.is_zero():
            raise ValueError("projective point cannot be (0, 0, 0)")

    def on(self, curve: CurveSpec) -> bool:
        a, b, c = curve.eisenstein()
        return (a * self.x**3 + b * self.y**3 - c * self.z**3).is_zero()

    def same_as(self, other: "CurvePoint") -> bool:
        """Projective equality."""
        p, q = (self.x, self.y, self.z), (other.x, other.y, other.z)
        return all((p[i] * q[j] - p[j] * q[i]).is_zero() for i in range(3) for j in range(i + 1, 3))

    def as_list(self) -> list[str]:
        return [format_eisenstein(t) for t in (self.x, self.y, self.z)]


@dataclass
class SelmerResult:
    A: int
    basis: list[CubeClass]
    dimension: int
    s: int
    s0: int
    root_sign: int
    c_witnesses: list[tuple[CubeClass, CurvePoint]]
    candidates_tested: int
    primes: list[EisensteinInt] = field(default_factory=list)
    verdicts: dict[str, list[LocalVerdict]] = field(default_factory=dict)
    survivors: list[CubeClass] = field(default_factory=list)

    @property
    def order(self) -> int:
        return 3**self.dimension

    def contains(self, cls: CubeClass) -> bool:
        """Membership of a class (supported on w and the primes of A) in S(A)."""
        try:
            target = cls.vector(self.primes)
        except ValueError:
            return False
        vecs = [b.vector(self.primes) for b in self.basis]
        return _rank(vecs + [target]) == _rank(vecs)

    def conditional_statement(self) -> str | None:
        if self.dimension == 2:
            return f"C(A) = S(A) for A = {self.A}, conditional on Sha(E_{self.A}/Q) being finite"
        return None

    def hypotheses(self) -> list[str]:
        return [f"Sha(E_{self.A}/Q) finite"] if self.dimension == 2 else []

    def to_dict(self) -> dict:
        return {
            "A": self.A,
            "primes": [format_eisenstein(p) for p in self.primes],
            "basis": [str(b) for b in self.basis],
            "dimension": self.dimension,
            "order": self.order,
            "s": self.s,
            "s0": self.s0,
            "root_sign": self.root_sign,
            "candidates_tested": self.candidates_tested,
            "survivors": [str(c) for c in self.survivors],
            "c_witnesses": [{"class": str(c), "point": pt.as_list()} for c, pt in self.c_witnesses],
            "conditional": self.conditional_statement(),
        }


# ---------------------------------------------------------------------------
# F_3 linear algebra


def _reduce(vec: list[int], pivots: list[tuple[int, list[int]]]) -> list[int]:
    vec = list(vec)
    for col, row in pivots:
        if vec[col]:
            f = vec[col] * pow(row[col], -1, 3) % 3
            vec = [(v - f * r) % 3 for v, r in zip(vec, row)]
    return vec


def _rank(vectors: Iterable[Sequence[int]]) -> int:
    pivots: list[tuple[int, list[int]]] = []
    for v in vectors:
        r = _reduce([x % 3 for x in v], pivots)
        nz = next((i for i, x in enumerate(r) if x), None)
        if nz is not None:
            pivots.append((nz, r))
    return len(pivots)


def _independent(vectors: Sequence[Sequence[int]]) -> list[int]:
    """Indices of a greedy maximal independent subset."""
    chosen: list[int] = []
    pivots: list[tuple[int, list[int]]] = []
    for i, v in enumerate(vectors):
        r = _reduce([x % 3 for x in v], pivots)
        nz = next((j for j, x in enumerate(r) if x), None)
        if nz is not None:
            pivots.append((nz, r))
            chosen.append(i)
    return chosen


# ---------------------------------------------------------------------------
# operations


def _check_cube_free(A: int) -> None:
    if A in (0, 1, -1):
        raise ValueError("A must not be 0 or +-1")
    if any(e >= 3 for e in factorint(abs(A)).values()):
        raise ValueError(f"A = {A} is not cube free")


def prime_support(A: int) -> list[EisensteinInt]:
    """Primes of Z[w] dividing A, sorted by norm then coordinates."""
    return factor(A).primes()


def candidate_alphas(A: int) -> list[CubeClass]:
    """All w^m * prod_{i<r} q_i^{m_i} with exponents in {0, 1, 2}."""
    _check_cube_free(A)
    primes = prime_support(A)
    head = primes[:-1]
    out = []
    for exps in product(range(3), repeat=len(head) + 1):
        out.append(CubeClass.make(exps[0], zip(head, exps[1:])))
    return out


def local_verdicts(A: int, alpha: CubeClass, primes: Sequence[EisensteinInt] | None = None) -> list[LocalVerdict]:
    """Verdicts for C_{A,alpha} at every prime of Z[w] dividing 3A."""
    if primes is None:
        primes = prime_support(A)
    a = alpha.element()
    out = []
    for q in primes:
        if q == LAMBDA:
            continue
        if q.is_rational() and factor(A).exponent(q) == 1:
            out.append(solvable_inert_rational(A, a, q.a))
        else:
            out.append(solvable_kq_torsor(A, a, q))
    out.append(solvable_lambda(torsor_curve(A, a)))
    return out


def s0_of(A: int) -> int:
    _check_cube_free(A)
    m = sum(1 for p in factorint(abs(A)) if p % 3 == 2)
    r = A % 9
    if r in (3, 6):
        return m
    if r in (1, 8):
        return m - 2
    return m - 1


def root_sign(A: int) -> int:
    """Sign of the functional equation of L(E_A/Q, s)."""
    _check_cube_free(A)
    w3 = -1 if A % 9 in (1, 8, 3, 6) else 1
    m = sum(1 for p in factorint(abs(A)) if p % 3 == 2)
    return -w3 * (-1) ** m


def compute_selmer(A: int, witness_bound: int = 6) -> SelmerResult:
    _check_cube_free(A)
    primes = prime_support(A)
    cands = candidate_alphas(A)
    verdicts: dict[str, list[LocalVerdict]] = {}
    survivors = []
    for alpha in cands:
        vs = local_verdicts(A, alpha, primes)
        verdicts[str(alpha)] = vs
        if all(v.solvable for v in vs):
            survivors.append(alpha)
    vecs = [c.vector(primes) for c in survivors]
    rank = _rank(vecs)
    if len(survivors) != 3**rank:
        raise ParityViolation(f"locally solvable classes for A = {A} do not form a group")
    a_class = CubeClass.of(A)
    basis = [a_class] + [survivors[i] for i in _independent(vecs)]
    dimension = _rank([b.vector(primes) for b in basis])
    if dimension != rank + 1:
        raise AssertionError("class of A should be independent of the candidate transversal")
    s, s0 = dimension - 1, s0_of(A)
    if (s - s0) % 2:
        raise ParityViolation(f"s(A) = {s} but s0(A) = {s0} for A = {A}")
    witnesses = []
    for cls in basis:
        pt = torsor_point_search(A, cls, witness_bound)
        if pt is not None:
            witnesses.append((cls, pt))
    return SelmerResult(
        A=A,
        basis=basis,
        dimension=dimension,
        s=s,
        s0=s0,
        root_sign=root_sign(A),
        c_witnesses=witnesses,
        candidates_tested=len(cands),
        primes=primes,
        verdicts=verdicts,
        survivors=survivors,
    )


def sqrt_minus3_map(P: CurvePoint, A: int) -> CurvePoint:
    """Multiplication by sqrt(-3) on E_A."""
    curve = CurveSpec(1, 1, A)
    if not P.on(curve):
        raise ValueError("point is not on E_A")
    w, w2 = ZETA, zeta_power(2)
    x3, y3 = P.x**3, P.y**3
    img = CurvePoint(w * x3 - w2 * y3, w * y3 - w2 * x3, (w - w2) * P.x * P.y * P.z)
    if not img.on(curve):
        raise AssertionError("image left the curve")
    return img


def torsor_point_search(A: int, alpha: CubeClass | IntLike, bound: int) -> CurvePoint | None:
    """Search alpha^2 x^3 + y^3 = alpha A z^3 for x, z of norm at most ``bound``.

    A hit is exact and proves the class lies in C(A); a miss proves nothing.
    """
    a = alpha.element() if isinstance(alpha, CubeClass) else EisensteinInt.coerce(alpha)
    cx, cz = a * a, a * A
    pool = [ZERO] + elements_up_to_norm(bound)
    for x in pool:
        x3 = x**3
        for z in pool:
            if x.is_zero() and z.is_zero():
                continue
            y = cube_root(cz * z**3 - cx * x3)
            if y is not None:
                return CurvePoint(x, y, z)
    return None
