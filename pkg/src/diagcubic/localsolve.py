"""Local solvability of diagonal cubic curves a*x^3 + b*y^3 = c*z^3.

Decisions are made over Q_p for rational coefficients and over the
completions k_q of k = Q(w) for Eisenstein coefficients.  Away from 3 the
answer depends only on the coefficient valuations mod 3 and on one residue
cube test; at 3 the Q_3 case is classified through Q_3^*/(Q_3^*)^3 and the
remaining cases are settled by Hensel-certified enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Sequence, Union

from sympy import primefactors

from .eisenstein import (
    LAMBDA,
    UNITS,
    EisensteinInt,
    IntLike,
    divrem,
    format_eisenstein,
    is_lambda_associate,
    primary_associate,
    residue_representatives,
    strip,
)
from .residues import cube_class_Q3, cubic_symbol, is_cube_in_Qp, p_adic_split

Coefficient = Union[int, Fraction, EisensteinInt]


class DepthError(ValueError):
    """Requested enumeration depth is below the certified bound."""


@dataclass(frozen=True)
class CurveSpec:
    """The plane cubic ``a*x^3 + b*y^3 = c*z^3``."""

    a: Coefficient
    b: Coefficient
    c: Coefficient

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if isinstance(value, EisensteinInt):
                if value.is_zero():
                    raise ValueError(f"coefficient {name} is zero")
            elif value == 0:
                raise ValueError(f"coefficient {name} is zero")

    @property
    def coefficients(self) -> tuple[Coefficient, Coefficient, Coefficient]:
        return (self.a, self.b, self.c)

    def is_rational(self) -> bool:
        return all(not isinstance(t, EisensteinInt) or t.is_rational() for t in self.coefficients)

    def integral(self) -> tuple[int, int, int]:
        """Integer coefficients of a rational curve, denominators cleared."""
        if not self.is_rational():
            raise ValueError("curve has non-rational coefficients")
        vals = [Fraction(t.a) if isinstance(t, EisensteinInt) else Fraction(t) for t in self.coefficients]
        den = math.lcm(*(v.denominator for v in vals))
        a, b, c = (int(v * den) for v in vals)
        return a, b, c

    def eisenstein(self) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
        if any(isinstance(t, Fraction) and t.denominator != 1 for t in self.coefficients):
            a, b, c = self.integral()
            return EisensteinInt(a), EisensteinInt(b), EisensteinInt(c)
        return tuple(EisensteinInt.coerce(t if not isinstance(t, Fraction) else int(t)) for t in self.coefficients)  # type: ignore[return-value]

    def evaluate(self, x: Any, y: Any, z: Any) -> Any:
        return self.a * x**3 + self.b * y**3 - self.c * z**3

    def __str__(self) -> str:
        a, b, c = (format_eisenstein(t) if isinstance(t, EisensteinInt) else str(t) for t in self.coefficients)
        return f"({a})x^3 + ({b})y^3 = ({c})z^3"


@dataclass(frozen=True)
class LocalVerdict:
    solvable: bool | None
    place: str
    case: str
    certificate: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "solvable": self.solvable,
            "place": self.place,
            "case": self.case,
            "certificate": _jsonable(self.certificate),
        }


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, EisensteinInt):
        return format_eisenstein(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


# ---------------------------------------------------------------------------
# places


class RationalPlace:
    """The p-adic place of Q."""

    def __init__(self, p: int) -> None:
        self.p = p
        self.pi = p
        self.v3 = 1 if p == 3 else 0
        self.label = f"Q_{p}"

    def split(self, x: int) -> tuple[int, int]:
        v = 0
        while x % self.p == 0:
            x //= self.p
            v += 1
        return v, x

    def val(self, x: int, cap: int) -> int:
        if x == 0:
            return cap
        v = 0
        while v < cap and x % self.p == 0:
            x //= self.p
            v += 1
        return v

    def digits(self) -> list[int]:
        return list(range(self.p))

    def unit_ratio_cube(self, u1: int, u2: int) -> tuple[bool, dict]:
        ratio = Fraction(u1, u2)
        return is_cube_in_Qp(ratio, self.p), {"unit_ratio": ratio}

    def one(self) -> int:
        return 1


class EisensteinPlace:
    """The place of k = Q(w) attached to a prime element q."""

    def __init__(self, q: IntLike) -> None:
        q = EisensteinInt.coerce(q)
        if is_lambda_associate(q):
            q = LAMBDA
        else:
            q = primary_associate(q)[1]
        self.q = q
        self.pi = q
        self.v3 = 2 if q == LAMBDA else 0
        self.label = "k_lambda" if q == LAMBDA else f"k_({format_eisenstein(q)})"

    def split(self, x: EisensteinInt) -> tuple[int, EisensteinInt]:
        return strip(x, self.q)

    def val(self, x: EisensteinInt, cap: int) -> int:
        v = 0
        q = self.q
        while v < cap:
            if x.is_zero():
                return cap
            d, r = divrem(x, q)
            if not r.is_zero():
                return v
            x = d
            v += 1
        return v

    def digits(self) -> list[EisensteinInt]:
        return residue_representatives(self.q)

    def unit_ratio_cube(self, u1: EisensteinInt, u2: EisensteinInt) -> tuple[bool, dict]:
        # u1/u2 = u1*u2^2 / u2^3
        e = cubic_symbol(u1 * u2 * u2, self.q)
        return e == 0, {"residue_symbol_exponent": e}

    def one(self) -> EisensteinInt:
        return EisensteinInt(1)


def make_place(p: IntLike) -> RationalPlace | EisensteinPlace:
    if isinstance(p, int):
        return RationalPlace(p)
    return EisensteinPlace(p)


# ---------------------------------------------------------------------------
# valuation-pattern decision away from 3


def _pattern_decide(coeffs: Sequence[Any], place: RationalPlace | EisensteinPlace) -> LocalVerdict:
    """Decide solvability at a place of residue characteristic other than 3.

    With valuations reduced mod 3: three distinct residues are a valuation
    obstruction; three equal residues reduce to a smooth genus-one curve over
    the residue field (always a point); two equal residues leave the pair of
    units to satisfy u1*x^3 = -u2*y^3 modulo the prime, i.e. u1/u2 must be a
    residue cube, and any such residue point is smooth.
    """
    splits = [place.split(t) for t in coeffs]
    vals = [v for v, _ in splits]
    residues = [v % 3 for v in vals]
    pattern = {"valuations": vals}
    distinct = set(residues)
    if len(distinct) == 3:
        return LocalVerdict(False, place.label, "valuation-pattern", {**pattern, "pattern": "(0,1,2)"})
    if len(distinct) == 1:
        return LocalVerdict(True, place.label, "valuation-pattern", {**pattern, "pattern": "(0,0,0)"})
    for i in range(3):
        for j in range(i + 1, 3):
            if residues[i] == residues[j]:
                ok, detail = place.unit_ratio_cube(splits[i][1], splits[j][1])
                return LocalVerdict(
                    ok,
                    place.label,
                    "residue-cube",
                    {**pattern, "pattern": "(0,0,t)", "unit_pair": [i, j], **detail},
                )
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# Q_3 classification


def q3_canonical_form(a: Coefficient, b: Coefficient, c: Coefficient) -> tuple[str, tuple[int, ...]]:
    """Canonical Q_3 model of ``a x^3 + b y^3 = c z^3``.

    Returns ``("family", (k, i, j))`` for the model 3^k x^3 + 2^i y^3 = 2^j z^3,
    or ``("valuation", ())`` for the model x^3 + 3b'y^3 = 9c'z^3.  Signs are
    absorbed since -1 is a cube, so coefficients may be moved across the
    equals sign and permuted freely.
    """
    classes = [cube_class_Q3(Fraction(t)) for t in (a, b, c)]
    ks = [k for k, _ in classes]
    if len(set(ks)) == 3:
        return "valuation", ()
    if len(set(ks)) == 1:
        i0 = classes[0][1]
        return "family", (0, (classes[1][1] - i0) % 3, (classes[2][1] - i0) % 3)
    for odd in range(3):
        others = [t for t in range(3) if t != odd]
        if ks[others[0]] == ks[others[1]]:
            s, t = ks[others[0]], ks[odd]
            i_odd = classes[odd][1]
            i = (classes[others[0]][1] - i_odd) % 3
            j = (classes[others[1]][1] - i_odd) % 3
            return "family", ((t - s) % 3, i, j)
    raise AssertionError("unreachable")


def q3_family_solvable(k: int, i: int, j: int) -> bool:
    return (k == 0 and {i, j} != {1, 2}) or k == 1 or (k == 2 and i == j)


def solvable_Q3(curve: CurveSpec) -> LocalVerdict:
    """Q_3 solvability via the canonical model in Q_3^*/(Q_3^*)^3."""
    a, b, c = curve.integral()
    kind, data = q3_canonical_form(a, b, c)
    if kind == "valuation":
        return LocalVerdict(False, "Q_3", "q3-classification", {"canonical_form": "x^3 + 3b'y^3 = 9c'z^3"})
    k, i, j = data
    return LocalVerdict(
        q3_family_solvable(k, i, j),
        "Q_3",
        "q3-classification",
        {"canonical_form": f"3^{k} x^3 + 2^{i} y^3 = 2^{j} z^3", "kij": [k, i, j]},
    )


# ---------------------------------------------------------------------------
# Hensel-certified enumeration


def certified_depth(place: RationalPlace | EisensteinPlace) -> int:
    return 2 * (place.v3 + 2) + 1


def normalize_at(coeffs: Sequence[Any], place: RationalPlace | EisensteinPlace) -> list[Any]:
    """Strip cubes of the uniformizer and a common power so valuations lie in {0,1,2}, min 0."""
    splits = [place.split(t) for t in coeffs]
    low = min(v % 3 for v, _ in splits)
    return [u * place.pi ** (v % 3 - low) for v, u in splits]


def _determined(place: RationalPlace | EisensteinPlace, x: Any, n: int | None, vc: int) -> float:
    # c*x^3 is fixed mod pi^D by x mod pi^n: (x + pi^n t)^3 - x^3 has three terms
    if n is None:
        return math.inf
    vx = place.val(x, n)
    return vc + min(place.v3 + 2 * vx + n, place.v3 + vx + 2 * n, 3 * n)


def _lift_coordinate(place, x, n, vc, level, digits, powers):
    out, todo = [], [(x, n)]
    while todo:
        x, n = todo.pop()
        if _determined(place, x, n, vc) >= level:
            out.append((x, n))
        else:
            todo.extend((x + d * powers[n], n + 1) for d in digits)
    return out


def _enumerate(coeffs: Sequence[Any], place: RationalPlace | EisensteinPlace, depth: int) -> LocalVerdict:
    # Coordinates carry a precision and gain a digit only once their term is
    # no longer determined modulo the current level, which avoids multiplying
    # the frontier by the residue field size at every step.
    a, b, c = coeffs
    f_coeffs = (a, b, -c)
    grads = (3 * a, 3 * b, -3 * c)
    vcs = [place.val(t, 3) for t in coeffs]
    digits = place.digits()
    one = place.one()
    zero = one * 0
    powers = [one]
    for _ in range(depth + 2):
        powers.append(powers[-1] * place.pi)
    cap = depth + 2 * (place.v3 + 3)
    for branch in range(3):
        # the first unit coordinate is scaled to 1; earlier coordinates are divisible by pi
        states = [tuple((zero, 1) if i < branch else (one, None) if i == branch else (zero, 0) for i in range(3))]
        for level in range(1, depth + 1):
            survivors = []
            for st in states:
                opts = [_lift_coordinate(place, x, n, vc, level, digits, powers) for (x, n), vc in zip(st, vcs)]
                for cx in opts[0]:
                    tx = f_coeffs[0] * cx[0] ** 3
                    for cy in opts[1]:
                        txy = tx + f_coeffs[1] * cy[0] ** 3
                        for cz in opts[2]:
                            f = txy + f_coeffs[2] * cz[0] ** 3
                            vf = place.val(f, cap)
                            if vf < level:
                                continue
                            pt = (cx[0], cy[0], cz[0])
                            vg = min(place.val(g * x * x, cap) for g, x in zip(grads, pt))
                            if vf > 2 * vg:
                                return LocalVerdict(
                                    True,
                                    place.label,
                                    "hensel",
                                    {"point": list(pt), "depth": level, "v_F": vf, "min_v_grad": vg},
                                )
                            survivors.append((cx, cy, cz))
            states = survivors
            if not states:
                break
    return LocalVerdict(False, place.label, "exhausted", {"depth": depth})


def solvable_generic_local(
    curve: CurveSpec, place: IntLike | RationalPlace | EisensteinPlace, depth_override: int | None = None
) -> LocalVerdict:
    """Decide local solvability by enumeration with Hensel certificates.

    Any primitive solution has a unit coordinate x, so its gradient entry
    3*a*x^2 has valuation at most v(3) + 2 after normalization; enumerating to
    depth 2*(v(3)+2)+1 therefore finds a certificate whenever a point exists.
    """
    if not isinstance(place, (RationalPlace, EisensteinPlace)):
        place = make_place(place)
    bound = certified_depth(place)
    depth = bound if depth_override is None else depth_override
    if depth < bound:
        raise DepthError(f"depth {depth} is below the certified bound {bound}")
    if isinstance(place, RationalPlace):
        coeffs = list(curve.integral())
    else:
        coeffs = list(curve.eisenstein())
    coeffs = normalize_at(coeffs, place)
    if isinstance(place, EisensteinPlace) and place.q == LAMBDA and depth == bound:
        return _lambda_enumerate_cached(*(_lambda_key(t) for t in coeffs))
    return _enumerate(coeffs, place, depth)


def _lambda_key(t: EisensteinInt) -> tuple[int, int, int]:
    # units congruent mod 27 (a power of lambda beyond lambda^5) differ by a cube
    v, u = strip(t, LAMBDA)
    return v, u.a % 27, u.b % 27


@lru_cache(maxsize=None)
def _lambda_enumerate_cached(*keys: tuple[int, int, int]) -> LocalVerdict:
    place = EisensteinPlace(LAMBDA)
    coeffs = [LAMBDA**v * EisensteinInt(a, b) for v, a, b in keys]
    return _enumerate(coeffs, place, certified_depth(place))


# ---------------------------------------------------------------------------
# public decision procedures


def solvable_Qp(curve: CurveSpec, p: int) -> LocalVerdict:
    """Q_p solvability of a curve with rational coefficients."""
    a, b, c = curve.integral()
    label = f"Q_{p}"
    if (3 * a * b * c) % p:
        return LocalVerdict(True, label, "good-reduction")
    if p == 3:
        return solvable_Q3(curve)
    return _pattern_decide((a, b, c), RationalPlace(p))


def solvable_lambda(curve: CurveSpec) -> LocalVerdict:
    """Solvability over k_lambda, the completion of k above 3.

    A curve defined over Q (up to a common unit) has a k_lambda point iff it
    has a Q_3 point, since [k_lambda : Q_3] = 2 is prime to 3.
    """
    coeffs = curve.eisenstein()
    for u in UNITS:
        scaled = [t * u.conjugate() for t in coeffs]
        if all(t.is_rational() for t in scaled):
            v = solvable_Q3(CurveSpec(*(t.a for t in scaled)))
            return LocalVerdict(v.solvable, "k_lambda", "q3-classification", {**v.certificate, "rational_model": True})
    return solvable_generic_local(curve, LAMBDA)


def solvable_kq(curve: CurveSpec, q: IntLike) -> LocalVerdict:
    """Solvability over k_q for any prime q of Z[w]."""
    if is_lambda_associate(q):
        return solvable_lambda(curve)
    place = EisensteinPlace(q)
    coeffs = curve.eisenstein()
    if all(place.val(t, 1) == 0 for t in coeffs):
        return LocalVerdict(True, place.label, "good-reduction")
    return _pattern_decide(coeffs, place)


def torsor_curve(A: IntLike, alpha: IntLike) -> CurveSpec:
    """C_{A,alpha} cleared of denominators: alpha^2 x^3 + y^3 = alpha*A z^3."""
    A = EisensteinInt.coerce(A)
    alpha = EisensteinInt.coerce(alpha)
    return CurveSpec(alpha * alpha, EisensteinInt(1), alpha * A)


def solvable_kq_torsor(A: IntLike, alpha: IntLike, q: IntLike) -> LocalVerdict:
    """k_q-solvability of C_{A,alpha} at a prime q not above 3.

    Dispatch: q | alpha with q not dividing A is a valuation obstruction; q
    prime to 3*alpha*A gives good reduction; q || A is settled by one cubic
    residue symbol depending on v_q(alpha); anything else falls through to the
    valuation-pattern decision on the cleared model.
    """
    A = EisensteinInt.coerce(A)
    alpha = EisensteinInt.coerce(alpha)
    if A.is_zero() or alpha.is_zero():
        raise ValueError("A and alpha must be nonzero")
    if is_lambda_associate(q):
        raise ValueError("use solvable_lambda at the prime above 3")
    place = EisensteinPlace(q)
    q = place.q
    vA, A_unit = strip(A, q)
    va, alpha_unit = strip(alpha, q)
    if va % 3 and vA == 0:
        return LocalVerdict(False, place.label, "alpha-valuation", {"v_alpha": va, "v_A": vA})
    if va == 0 and vA == 0:
        return LocalVerdict(True, place.label, "coprime")
    if vA == 1 and va in (0, 1, 2):
        if va == 0:
            e, which = cubic_symbol(alpha, q), "(alpha/q)"
        elif va == 1:
            e, which = (cubic_symbol(A_unit, q) - cubic_symbol(alpha_unit, q)) % 3, "(A alpha^-1/q)"
        else:
            e, which = (cubic_symbol(A_unit, q) + cubic_symbol(alpha_unit, q)) % 3, "(A alpha q^-3/q)"
        return LocalVerdict(
            e == 0,
            place.label,
            f"residue-symbol:v_alpha={va}",
            {"symbol": which, "symbol_exponent": e},
        )
    verdict = _pattern_decide(torsor_curve(A, alpha).eisenstein(), place)
    return LocalVerdict(
        verdict.solvable,
        place.label,
        f"pattern:{verdict.case}",
        {**verdict.certificate, "v_alpha": va, "v_A": vA},
    )


def solvable_inert_rational(A: int, alpha: IntLike, p: int) -> LocalVerdict:
    """Single-symbol criterion at an inert prime p = 2 (mod 3) with p || A."""
    if p % 3 != 2:
        raise ValueError(f"{p} is not inert in Z[w]")
    A_e = EisensteinInt.coerce(A)
    v_A, _ = strip(A_e, EisensteinInt(p))
    if v_A != 1:
        raise ValueError(f"{p} does not exactly divide {A}")
    alpha = EisensteinInt.coerce(alpha)
    v, unit = strip(alpha, EisensteinInt(p))
    if v > 2:
        raise ValueError("alpha must be cube free")
    e = cubic_symbol(unit, p)
    return LocalVerdict(
        e == 0,
        f"k_({p})",
        "inert-symbol",
        {"symbol": "(alpha p^-v/p)", "symbol_exponent": e, "v_alpha": v},
    )


def everywhere_locally_solvable(curve: CurveSpec) -> tuple[bool, list[LocalVerdict]]:
    """Check every Q_p; only p dividing 3abc can fail and the real place never does."""
    a, b, c = curve.integral()
    primes = sorted(set(_rational_primes(3 * a * b * c)))
    verdicts = [solvable_Qp(curve, p) for p in primes]
    return all(v.solvable for v in verdicts), verdicts


def _rational_primes(n: int) -> list[int]:
    return sorted(primefactors(abs(n)))
