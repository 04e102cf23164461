"""Diagonal cubic surfaces a1 x1^3 + a2 x2^3 + a3 x3^3 + a4 x4^3 = 0.

Two conventions are accepted.  In the ``sum`` form the four terms add to zero;
in the ``split`` form the equation reads a1 x1^3 + a2 x2^3 = a3 x3^3 + a4 x4^3.
They differ by the signs of a3 and a4.  Every local question is insensitive to
signs because -1 is a cube, so the local machinery always works with the split
coefficients.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

from sympy import integer_nthroot, isprime, primefactors

from .eisenstein import ZETA, EisensteinInt, cube_root, elements_up_to_norm, icbrt
from .localsolve import CurveSpec, LocalVerdict, solvable_Qp
from .residues import cube_class_Q3, cube_class_Qp, cube_class_representatives, is_cube_in_Qp
from .selmer import CubeClass, SelmerResult, compute_selmer

ALLOWED_PROFILES = ((0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, 2), (0, 0, 1, 1), (0, 0, 1, 2))
FORMS = ("sum", "split")


class SelmerDimensionError(RuntimeError):
    """The Selmer group of a pipeline curve did not have the proven dimension."""


@dataclass(frozen=True)
class SurfaceSpec:
    a1: int
    a2: int
    a3: int
    a4: int
    form: str = "sum"
    valuation_profile: dict = field(default_factory=dict, compare=False)
    # normalized = scale * original with x_i(normalized) = var_scale[i] * x_i(original)
    scale: Fraction = field(default=Fraction(1), compare=False)
    var_scale: tuple = field(default=(Fraction(1),) * 4, compare=False)

    def __post_init__(self) -> None:
        if self.form not in FORMS:
            raise ValueError(f"form must be one of {FORMS}")
        if 0 in self.coefficients:
            raise ValueError("coefficients must be nonzero")

    @property
    def coefficients(self) -> tuple[int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4)

    @property
    def split_coefficients(self) -> tuple[int, int, int, int]:
        if self.form == "split":
            return self.coefficients
        return (self.a1, self.a2, -self.a3, -self.a4)

    @property
    def sum_coefficients(self) -> tuple[int, int, int, int]:
        if self.form == "sum":
            return self.coefficients
        return (self.a1, self.a2, -self.a3, -self.a4)

    def evaluate(self, pt: Sequence[int]) -> int:
        return sum(c * x**3 for c, x in zip(self.sum_coefficients, pt))

    def contains(self, pt: Sequence[int]) -> bool:
        return any(pt) and self.evaluate(pt) == 0

    def bad_primes(self) -> list[int]:
        return sorted(primefactors(3 * math.prod(abs(c) for c in self.coefficients)))

    def to_original(self, pt: Sequence[int]) -> tuple[int, ...]:
        """Map a point of the normalized surface back to the surface before normalization."""
        xs = [Fraction(x) / m for x, m in zip(pt, self.var_scale)]
        den = math.lcm(*(x.denominator for x in xs))
        ints = [int(x * den) for x in xs]
        g = math.gcd(*ints)
        return tuple(x // g for x in ints) if g else tuple(ints)

    def describe(self) -> str:
        a = self.coefficients
        if self.form == "sum":
            return f"{a[0]}x1^3 + {a[1]}x2^3 + {a[2]}x3^3 + {a[3]}x4^3 = 0"
        return f"{a[0]}x1^3 + {a[1]}x2^3 = {a[2]}x3^3 + {a[3]}x4^3"

    def to_dict(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "form": self.form,
            "equation": self.describe(),
            "valuation_profile": {str(p): list(v) for p, v in sorted(self.valuation_profile.items())},
            "scale": str(self.scale),
            "var_scale": [str(m) for m in self.var_scale],
        }


def _valuation(x: Fraction, p: int) -> int:
    v, num, den = 0, x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _profile(coeffs: Sequence[int]) -> dict[int, tuple[int, ...]]:
    primes = sorted(set().union(*(primefactors(abs(c)) for c in coeffs)))
    return {p: tuple(_valuation(Fraction(c), p) for c in coeffs) for p in primes}


def normalize(a1: Any, a2: Any, a3: Any, a4: Any, form: str = "sum") -> SurfaceSpec:
    """Rescale to cube-free integer coefficients with an allowed valuation profile at every prime.

    At each prime the whole equation is multiplied by p^s for the first
    s in (0, 1, 2) whose reduced valuations form an allowed 4-tuple; cubes of p
    are then absorbed into the variables.
    """
    coeffs = [Fraction(c) for c in (a1, a2, a3, a4)]
    if any(c == 0 for c in coeffs):
        raise ValueError("coefficients must be nonzero")
    primes: set[int] = set()
    for c in coeffs:
        primes.update(primefactors(abs(c.numerator)))
        primes.update(primefactors(c.denominator))
    scale = Fraction(1)
    var_scale = [Fraction(1)] * 4
    out = [Fraction(1 if c > 0 else -1) for c in coeffs]
    for p in sorted(primes):
        vals = [_valuation(c, p) for c in coeffs]
        for s in range(3):
            reduced = [(v + s) % 3 for v in vals]
            if tuple(sorted(reduced)) in ALLOWED_PROFILES:
                break
        else:  # pragma: no cover - some rotation of the residue counts always fits
            raise AssertionError(f"no admissible shift at {p}")
        scale *= Fraction(p) ** s
        for i, v in enumerate(vals):
            t = (v + s - reduced[i]) // 3
            var_scale[i] *= Fraction(p) ** t
            out[i] *= p ** reduced[i]
    # units away from the listed primes are +-1, so the signs carried in out are final
    ints = tuple(int(c) for c in out)
    return SurfaceSpec(*ints, form=form, valuation_profile=_profile(ints), scale=scale, var_scale=tuple(var_scale))


def _as_spec(s: SurfaceSpec | Sequence[int], form: str = "sum") -> SurfaceSpec:
    if isinstance(s, SurfaceSpec):
        return s
    return normalize(*s, form=form)


# ---------------------------------------------------------------------------
# ratio tests


def _ratios(c: Sequence[int]) -> list[tuple[str, Fraction]]:
    a1, a2, a3, a4 = c
    return [
        ("a1a2/a3a4", Fraction(a1 * a2, a3 * a4)),
        ("a1a3/a2a4", Fraction(a1 * a3, a2 * a4)),
        ("a1a4/a2a3", Fraction(a1 * a4, a2 * a3)),
    ]


def _is_rational_cube(x: Fraction) -> bool:
    return all(integer_nthroot(abs(n), 3)[1] for n in (x.numerator, x.denominator))


def selmer_ratio_criterion(s: SurfaceSpec | Sequence[int]) -> bool:
    """True iff one of a1a2/a3a4, a1a3/a2a4, a1a4/a2a3 is a rational cube."""
    s = _as_spec(s)
    return any(_is_rational_cube(r) for _, r in _ratios(s.coefficients))


def cube_ratios(s: SurfaceSpec | Sequence[int]) -> list[str]:
    s = _as_spec(s)
    return [name for name, r in _ratios(s.coefficients) if _is_rational_cube(r)]


def _birational(c: Sequence[int], p: int) -> bool:
    return any(is_cube_in_Qp(r, p) for _, r in _ratios(c))


def birational_to_plane_over_Qp(s: SurfaceSpec | Sequence[int], p: int) -> bool:
    return _birational(_as_spec(s).coefficients, p)


# ---------------------------------------------------------------------------
# local splittings


@dataclass
class DescentWitness:
    """A splitting constant C at one prime with the local verdicts for both halves.

    ``curve_pair`` holds a1 x^3 + a2 y^3 = C z^3 and a3 x^3 + a4 y^3 = C z^3 in
    split coefficients; ``obstruction_checks`` holds the verdicts for the
    twisted curves a3^2 x^3 + a4^2 y^3 = a1a2a3a4 C z^3 ("curve3") and
    a1^2 x^3 + a2^2 y^3 = a1a2a3a4 C z^3 ("curve4") when they were examined.
    """

    prime: int
    C: int
    curve_pair: tuple[CurveSpec, CurveSpec]
    verdicts: tuple[LocalVerdict, LocalVerdict]
    obstruction_checks: dict[str, LocalVerdict] = field(default_factory=dict)
    obstruction_curves: dict[str, CurveSpec] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(v.solvable for v in self.verdicts)

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "C": self.C,
            "curves": [str(c) for c in self.curve_pair],
            "verdicts": [v.to_dict() for v in self.verdicts],
            "obstruction_checks": {
                k: {"curve": str(self.obstruction_curves[k]), "verdict": v.to_dict()}
                for k, v in self.obstruction_checks.items()
            },
        }


def splitting_candidates(s: SurfaceSpec, p: int) -> list[int]:
    """Splitting constants to try at p, one per class of Q_p^*/(Q_p^*)^3.

    The coefficient shapes a_i, a_i a_j, p*those and p^2*those come first; the
    remaining classes follow so that an empty sweep is a proof of failure.
    """
    c = [abs(t) for t in s.split_coefficients]
    base = c + [c[i] * c[j] for i, j in itertools.combinations(range(4), 2)]
    ordered = base + [p * t for t in base] + [p * p * t for t in base] + cube_class_representatives(p)
    seen, out = set(), []
    for C in ordered:
        cls = cube_class_Qp(C, p)
        if cls not in seen:
            seen.add(cls)
            out.append(C)
    return out


def _splitting(s: SurfaceSpec, p: int, C: int) -> DescentWitness:
    a1, a2, a3, a4 = s.split_coefficients
    pair = (CurveSpec(a1, a2, C), CurveSpec(a3, a4, C))
    return DescentWitness(p, C, pair, (solvable_Qp(pair[0], p), solvable_Qp(pair[1], p)))


def _obstruction_curves(s: SurfaceSpec, C: int) -> dict[str, CurveSpec]:
    a1, a2, a3, a4 = s.split_coefficients
    prod = a1 * a2 * a3 * a4 * C
    return {"curve3": CurveSpec(a3 * a3, a4 * a4, prod), "curve4": CurveSpec(a1 * a1, a2 * a2, prod)}


def local_splittings(s: SurfaceSpec, p: int) -> list[DescentWitness]:
    """All valid splittings at p (one per cube class), with obstruction checks filled in."""
    out = []
    for C in splitting_candidates(s, p):
        w = _splitting(s, p, C)
        if w.valid:
            w.obstruction_curves = _obstruction_curves(s, C)
            w.obstruction_checks = {k: solvable_Qp(cv, p) for k, cv in w.obstruction_curves.items()}
            out.append(w)
    return out


def everywhere_local_surface(s: SurfaceSpec | Sequence[int]) -> tuple[bool, dict[int, DescentWitness | None]]:
    """Decide V(A_Q) != 0 through splittings; primes not dividing 3*a1a2a3a4 always pass."""
    s = _as_spec(s)
    found: dict[int, DescentWitness | None] = {}
    for p in s.bad_primes():
        found[p] = None
        for C in splitting_candidates(s, p):
            w = _splitting(s, p, C)
            if w.valid:
                found[p] = w
                break
    return all(w is not None for w in found.values()), found


# ---------------------------------------------------------------------------
# sufficient criteria


@dataclass(frozen=True)
class CriterionHit:
    label: str
    permutation: tuple[int, int, int, int]
    detail: dict

    def to_dict(self) -> dict:
        return {"label": self.label, "permutation": [i + 1 for i in self.permutation], "detail": self.detail}


@dataclass
class CriteriaReport:
    locally_solvable: bool
    hasse_by_ratio: bool
    hits: list[CriterionHit]

    @property
    def labels(self) -> list[str]:
        return [h.label for h in self.hits]

    def __contains__(self, label: str) -> bool:
        return label in self.labels

    def to_dict(self) -> dict:
        return {
            "locally_solvable": self.locally_solvable,
            "hasse_by_ratio": self.hasse_by_ratio,
            "satisfied": [h.to_dict() for h in self.hits],
        }


CRITERIA = ("3.1-a", "3.1-b", "3.1-c", "3.5-i", "3.5-ii", "3.5-iii", "3.5-iv", "3.5-v", "3.5-vi")


def _v(x: int, p: int) -> int:
    return _valuation(Fraction(x), p)


def _only_divides(p: int, a: Sequence[int], i: int) -> bool:
    return a[i] % p == 0 and all(a[j] % p for j in range(4) if j != i)


def _aux_primes(a: Sequence[int], i: int) -> list[int]:
    # primes other than 3 dividing a_i and none of the others
    return [p for p in primefactors(abs(a[i])) if p != 3 and _only_divides(p, a, i)]


def _q3(x: int) -> int:
    return cube_class_Q3(x)[1]


def _same_coset_q3(x: int, y: int) -> bool:
    return is_cube_in_Qp(Fraction(x, y), 3)


def _check(label: str, a: Sequence[int]) -> dict | None:
    """Literal evaluation of one criterion for the ordering a = (a1, a2, a3, a4)."""
    a1, a2, a3, a4 = a
    v3 = [_v(t, 3) for t in a]
    if label == "3.1-a":
        p1s, p3s = _aux_primes(a, 0), _aux_primes(a, 2)
        return {"p1": p1s[0], "p3": p3s[0]} if p1s and p3s else None
    if label == "3.1-b":
        for p in _aux_primes(a, 0):
            classes = {cube_class_Qp(t, p) for t in (a2, a3, a4)}
            if len(classes) > 1:
                return {"p": p}
        return None
    if label == "3.1-c":
        for p in primefactors(math.prod(abs(t) for t in a)):
            if p != 3 and sum(t % p == 0 for t in a) == 2 and not _birational(a, p):
                return {"p": p}
        return None
    units_234 = v3[1] == v3[2] == v3[3] == 0
    if label == "3.5-i":
        if v3[0] >= 1 and units_234:
            pairs = [(x, y) for x, y in itertools.combinations((a2, a3, a4), 2) if _same_coset_q3(x, y)]
            ps = _aux_primes(a, 2)
            if pairs and ps:
                return {"p": ps[0], "same_coset": list(pairs[0])}
        return None
    if label == "3.5-ii":
        if v3[0] == 1 and units_234:
            cosets = [_q3(t) for t in (a2, a3, a4)]
            ps = _aux_primes(a, 0)
            if len(set(cosets)) > 1 and ps:
                return {"p": ps[0], "q3_cosets": cosets}
        return None
    if label == "3.5-iii":
        if v3[0] == 2 and units_234:
            cosets = [_q3(t) for t in (a2, a3, a4)]
            if len(set(cosets)) == 2:
                return {"q3_cosets": cosets}
        return None
    not_birational_3 = not _birational(a, 3)
    if label == "3.5-iv":
        if v3[0] == 1 and v3[2] == 1 and v3[1] == v3[3] == 0 and not_birational_3 and _same_coset_q3(a1, a3):
            return {}
        return None
    if label == "3.5-v":
        if v3[0] == 2 and v3[2] == 1 and v3[1] == v3[3] == 0 and not_birational_3:
            for p in primefactors(abs(a1 * a2)):
                if (a1 % p == 0) != (a2 % p == 0) and (a3 * a4) % p:
                    return {"p": p}
        return None
    if label == "3.5-vi":
        if all(v == 0 for v in v3) and not_birational_3:
            if _same_coset_q3(a1, a2) and _same_coset_q3(a2, a3) and not _same_coset_q3(a3, a4):
                ps = _aux_primes(a, 0)
                if ps:
                    return {"p": ps[0]}
        return None
    raise ValueError(f"unknown criterion {label}")


def theorem35_criteria(s: SurfaceSpec | Sequence[int]) -> CriteriaReport:
    """Evaluate each sufficient criterion under every reordering of the coefficients.

    Reorderings are all 24 permutations: moving a term across the equals sign
    only flips its sign, which no local condition can see.
    """
    s = _as_spec(s)
    els, _ = everywhere_local_surface(s)
    report = CriteriaReport(els, selmer_ratio_criterion(s), [])
    if not els:
        return report
    c = s.split_coefficients
    for label in CRITERIA:
        for perm in itertools.permutations(range(4)):
            detail = _check(label, [c[i] for i in perm])
            if detail is not None:
                report.hits.append(CriterionHit(label, perm, detail))
                break
    return report


# ---------------------------------------------------------------------------
# obstruction witnesses for the conditional descent


@dataclass
class ObstructionWitness:
    p1: DescentWitness
    p3: DescentWitness

    def to_dict(self) -> dict:
        return {"p1": self.p1.to_dict(), "p3": self.p3.to_dict()}


def _search_order(primes: Iterable[int]) -> list[int]:
    return sorted(primes, key=lambda p: (p != 3, p))


def theorem33_witness_search(s: SurfaceSpec | Sequence[int]) -> ObstructionWitness | None:
    """Find splittings making curve3 insolvable at p1 and curve4 insolvable at p3.

    Every class of Q_p^*/(Q_p^*)^3 is swept at every bad prime, so ``None`` is
    exact over the bad primes.  At a prime of good reduction no valid splitting
    obstructs either twisted curve, so those primes are skipped.
    """
    s = _as_spec(s)
    els, _ = everywhere_local_surface(s)
    if not els:
        return None
    table = {p: local_splittings(s, p) for p in _search_order(s.bad_primes())}
    for p1, ws1 in table.items():
        for w1 in ws1:
            if w1.obstruction_checks["curve3"].solvable:
                continue
            for p3, ws3 in table.items():
                if p3 == p1:
                    if not w1.obstruction_checks["curve4"].solvable:
                        return ObstructionWitness(w1, w1)
                    continue
                for w3 in ws3:
                    if not w3.obstruction_checks["curve4"].solvable:
                        return ObstructionWitness(w1, w3)
    return None


# ---------------------------------------------------------------------------
# points


def _primitive(pt: Sequence[int]) -> tuple[int, ...]:
    g = math.gcd(*pt)
    pt = tuple(x // g for x in pt)
    for x in pt:
        if x:
            return pt if x > 0 else tuple(-y for y in pt)
    return pt


def _point_key(pt: Sequence[int]) -> tuple:
    return (max(abs(x) for x in pt), tuple((abs(x), x < 0) for x in pt))


def combine_descent_point(
    s: SurfaceSpec | Sequence[int], B: int, P1: Sequence[int], P2: Sequence[int]
) -> tuple[int, int, int, int]:
    """Glue (x1, x2, w) on a1x^3 + a2y^3 = Bw^3 and (x3, x4, w') on the other half.

    The second half is a3 x^3 + a4 y^3 = B w^3 in the split coefficients.  A
    point given for the sum-form coefficients instead is accepted and negated.
    """
    s = _as_spec(s)
    c = s.split_coefficients
    x1, x2, w1 = P1
    x3, x4, w2 = P2
    if B == 0:
        raise ValueError("B must be nonzero")
    if c[0] * x1**3 + c[1] * x2**3 != B * w1**3:
        raise ValueError("P1 is not on a1 x^3 + a2 y^3 = B w^3")
    if c[2] * x3**3 + c[3] * x4**3 != B * w2**3:
        if -c[2] * x3**3 - c[3] * x4**3 == B * w2**3:
            x3, x4 = -x3, -x4
        else:
            raise ValueError("P2 is not on a3 x^3 + a4 y^3 = B w^3")
    if (w1 == 0) != (w2 == 0):
        raise ValueError("exactly one point lies at w = 0")
    if w1 == 0:
        pt = (x1, x2, x3, x4)
    else:
        pt = (x1 * w2, x2 * w2, x3 * w1, x4 * w1)
    pt = _primitive(pt)
    if not s.contains(pt):
        raise AssertionError("combined point is not on the surface")
    return pt  # type: ignore[return-value]


def _search_slice(args: tuple) -> tuple | None:
    coeffs, bound, x3_values = args
    s1, s2, s3, s4 = coeffs
    rng = range(-bound, bound + 1)
    left: dict[int, list[tuple[int, int]]] = {}
    for x1 in rng:
        t = s1 * x1**3
        for x2 in rng:
            left.setdefault(t + s2 * x2**3, []).append((x1, x2))
    best = None
    for x3 in x3_values:
        t = s3 * x3**3
        for x4 in rng:
            for x1, x2 in left.get(-(t + s4 * x4**3), ()):
                pt = (x1, x2, x3, x4)
                if not any(pt) or math.gcd(*pt) != 1:
                    continue
                pt = _primitive(pt)
                if best is None or _point_key(pt) < _point_key(best):
                    best = pt
    return best


def surface_point_search(s: SurfaceSpec | Sequence[int], bound: int, threads: int = 1) -> tuple[int, ...] | None:
    """Smallest primitive point with all |x_i| <= bound, or None.

    Points are compared by max |x_i|, then coordinatewise in the order
    0, 1, -1, 2, -2, ...; the sign is fixed by making the first nonzero
    coordinate positive.  Work is split over x3 and merged by that order.
    """
    s = _as_spec(s)
    if bound < 1:
        raise ValueError("bound must be positive")
    xs = list(range(-bound, bound + 1))
    if threads <= 1:
        best = _search_slice((s.sum_coefficients, bound, xs))
    else:
        chunks = [xs[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            hits = [h for h in pool.map(_search_slice, [(s.sum_coefficients, bound, c) for c in chunks]) if h]
        best = min(hits, key=_point_key) if hits else None
    if best is not None and not s.contains(best):
        raise AssertionError("search returned a point off the surface")
    return best


def _conj_vec(P: Sequence[EisensteinInt]) -> list[EisensteinInt]:
    return [x.conjugate() for x in P]


def rational_point_from_k_point(s: SurfaceSpec | Sequence[int], P: Sequence[Any]) -> tuple[int, ...]:
    """Turn a point of V over Q(w) into a rational point.

    The line through P and its conjugate meets V in a third point
    R = conj(t) P - t conj(P) with t = sum a_i P_i^2 conj(P_i).  R is
    anti-invariant under conjugation, so sqrt(-3) R is rational.  When t = 0
    the whole line lies on V and P + conj(P) is used instead.
    """
    s = _as_spec(s)
    a = s.sum_coefficients
    P = [EisensteinInt.coerce(x) for x in P]
    if sum((c * x**3 for c, x in zip(a, P)), EisensteinInt(0)) != 0 or all(x.is_zero() for x in P):
        raise ValueError("P is not a point of V over Q(w)")
    Pb = _conj_vec(P)
    t = sum((c * x * x * y for c, x, y in zip(a, P, Pb)), EisensteinInt(0))
    sqrt_m3 = 1 + 2 * ZETA
    cands = []
    if not t.is_zero():
        R = [t.conjugate() * x - t * y for x, y in zip(P, Pb)]
        cands += [R, [sqrt_m3 * x for x in R]]
    cands += [[x + y for x, y in zip(P, Pb)], [sqrt_m3 * (x - y) for x, y in zip(P, Pb)]]
    # P may already be a multiple of a rational vector
    lead = next(x for x in P if not x.is_zero())
    cands.append([x * lead.conjugate() for x in P])
    for R in cands:
        if all(x.is_rational() for x in R) and any(not x.is_zero() for x in R):
            pt = _primitive([x.a for x in R])
            if s.contains(pt):
                return pt
    raise AssertionError("no rational point recovered from the conjugate line")


def curve_point_search_Q(curve: CurveSpec, bound: int) -> tuple[int, int, int] | None:
    """Integer point of a x^3 + b y^3 = c z^3 with |x|, |y| <= bound and z = 0 allowed."""
    a, b, c = curve.integral()
    for m in range(0, bound + 1):
        for x in range(-m, m + 1):
            for y in range(-m, m + 1):
                if max(abs(x), abs(y)) != m or (x == 0 and y == 0):
                    continue
                lhs = a * x**3 + b * y**3
                if lhs % c:
                    continue
                z = icbrt(lhs // c)
                if z is not None and math.gcd(math.gcd(x, y), z) == 1:
                    return (x, y, z)
    return None


def curve_point_search_k(curve: CurveSpec, bound: int) -> tuple[EisensteinInt, ...] | None:
    """Point of a x^3 + b y^3 = c z^3 over Z[w] with N(x), N(y) <= bound."""
    a, b, c = curve.eisenstein()
    pool = [EisensteinInt(0)] + elements_up_to_norm(bound)
    for x in pool:
        ax = a * x**3
        for y in pool:
            if x.is_zero() and y.is_zero():
                continue
            lhs = ax + b * y**3
            if not c.divides(lhs):
                continue
            z = cube_root(lhs.exact_div(c))
            if z is not None:
                return (x, y, z)
    return None


# ---------------------------------------------------------------------------
# the three-prime family x1^3 + p1p2 x2^3 + p2p3 x3^3 + p3p1 x4^3 = 0


def _sha(A: int) -> str:
    return f"Sha(E_{A}/Q)"


@dataclass
class FamilyReport:
    primes: tuple[int, int, int]
    ordered: tuple[int, int, int]
    pattern: str
    surface: SurfaceSpec
    A: int | None = None
    selmer: SelmerResult | None = None
    distinguished_class: str | None = None
    torsor: CurveSpec | None = None
    torsor_point_Q: tuple | None = None
    torsor_point_k: tuple | None = None
    surface_point: tuple | None = None
    point_source: str | None = None
    conditional_statement: str | None = None
    hypotheses: list[str] = field(default_factory=list)
    selmer_ratio: bool = False

    def to_dict(self) -> dict:
        return {
            "primes": list(self.primes),
            "ordered": list(self.ordered),
            "residues_mod_9": [p % 9 for p in self.ordered],
            "pattern": self.pattern,
            "surface": self.surface.to_dict(),
            "A": self.A,
            "selmer": self.selmer.to_dict() if self.selmer else None,
            "distinguished_class": self.distinguished_class,
            "torsor": str(self.torsor) if self.torsor else None,
            "torsor_point_Q": list(self.torsor_point_Q) if self.torsor_point_Q else None,
            "torsor_point_k": [str(x) for x in self.torsor_point_k] if self.torsor_point_k else None,
            "surface_point": list(self.surface_point) if self.surface_point else None,
            "point_source": self.point_source,
            "selmer_ratio": self.selmer_ratio,
            "conditional_statement": self.conditional_statement,
            "hypotheses": self.hypotheses,
        }


def family_surface(p1: int, p2: int, p3: int) -> SurfaceSpec:
    return SurfaceSpec(1, p1 * p2, p2 * p3, p3 * p1, form="sum", valuation_profile=_profile((1, p1 * p2, p2 * p3, p3 * p1)))


def _order_primes(p1: int, p2: int, p3: int) -> tuple[tuple[int, int, int], str]:
    r = [p % 9 for p in (p1, p2, p3)]
    ps = [p1, p2, p3]
    if r[0] == r[1] == r[2]:
        return (p1, p2, p3), "all-equal"
    odd = next(i for i in range(3) if r.count(r[i]) == 1)
    rest = [ps[i] for i in range(3) if i != odd]
    return (rest[0], rest[1], ps[odd]), "two-equal"


def theorem28_pipeline(p1: int, p2: int, p3: int, search: int = 0, threads: int = 1) -> FamilyReport:
    """Selmer computation, torsor and conditional conclusion for the three-prime family."""
    for p in (p1, p2, p3):
        if not isprime(p) or p % 9 not in (2, 5):
            raise ValueError(f"{p} is not a prime congruent to 2 or 5 mod 9")
    given = (p1, p2, p3)
    if len(set(given)) < 3:
        V = family_surface(*given)
        a = V.sum_coefficients
        i, j = next((i, j) for i, j in itertools.combinations(range(4), 2) if a[i] == a[j])
        pt = [0, 0, 0, 0]
        pt[i], pt[j] = 1, -1
        pt = _primitive(pt)
        assert V.contains(pt)
        return FamilyReport(
            given, given, "repeated-prime", V, surface_point=pt, point_source="equal coefficients",
            selmer_ratio=selmer_ratio_criterion(V),
        )
    (q1, q2, q3), pattern = _order_primes(*given)
    V = family_surface(q1, q2, q3)
    if pattern == "two-equal":
        A = q1 * q2 * q3 * q3
        torsor = CurveSpec(q2 * q3, q3 * q1, 1)
    else:
        A = (q1 * q2 * q3) ** 2
        torsor = CurveSpec(q2 * q3, q3 * q1, q1 * q2)
    sel = compute_selmer(A)
    if sel.dimension != 2:
        raise SelmerDimensionError(f"dim S({A}) = {sel.dimension}, expected 2")
    cls = CubeClass.of(q1 * q2 * q2)
    if not sel.contains(cls):
        raise SelmerDimensionError(f"class [{q1}*{q2}^2] missing from S({A})")
    rep = FamilyReport(given, (q1, q2, q3), pattern, V, A, sel, str(cls), torsor)
    rep.selmer_ratio = selmer_ratio_criterion(V)
    rep.hypotheses = [f"{_sha(A)} finite"]
    rep.conditional_statement = (
        f"If {_sha(A)} is finite then the torsor {torsor} has a point over Q(w), "
        f"hence V: {V.describe()} has a rational point"
    )
    if search > 0:
        _family_search(rep, search, threads)
    return rep


def _torsor_to_surface(rep: FamilyReport, pt: Sequence[Any]) -> list[Any]:
    x, y, z = pt
    zero = x * 0
    if rep.pattern == "two-equal":
        return [-z, zero, x, y]
    return [zero, -z, x, y]


def _family_search(rep: FamilyReport, bound: int, threads: int) -> None:
    assert rep.torsor is not None
    ptq = curve_point_search_Q(rep.torsor, bound)
    if ptq is not None:
        rep.torsor_point_Q = ptq
        rep.surface_point = _primitive(_torsor_to_surface(rep, ptq))
        rep.point_source = "rational torsor point"
    else:
        ptk = curve_point_search_k(rep.torsor, bound)
        if ptk is not None:
            rep.torsor_point_k = ptk
            rep.surface_point = rational_point_from_k_point(rep.surface, _torsor_to_surface(rep, ptk))
            rep.point_source = "torsor point over Q(w), descended along the conjugate line"
    if rep.surface_point is None:
        hit = surface_point_search(rep.surface, bound, threads)
        if hit is not None:
            rep.surface_point = hit
            rep.point_source = "direct search"
    if rep.surface_point is not None and not rep.surface.contains(rep.surface_point):
        raise AssertionError("reported point is not on V")
