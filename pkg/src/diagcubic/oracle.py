"""Brute-force oracles used to cross-check the analytic local decisions.

Nothing here calls into ``localsolve`` or ``residues``: congruences are
counted directly and local points are found by depth-first digit search.
Only the Eisenstein ring layer is shared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .eisenstein import (
    EisensteinInt,
    IntLike,
    divrem,
    is_lambda_associate,
    residue_representatives,
)


@dataclass(frozen=True)
class ResidueReport:
    modulus: int
    nontrivial_solutions: int
    representatives: tuple[tuple[int, int, int], ...] = ()


@dataclass(frozen=True)
class BruteVerdict:
    """Outcome of :func:`brute_local`; ``solvable`` is None when inconclusive."""

    solvable: bool | None
    place: str
    depth: int
    certified_bound: int
    point: tuple | None = None
    detail: dict = field(default_factory=dict)


def _int_coefficients(curve: Any) -> tuple[int, int, int]:
    if hasattr(curve, "integral"):
        return curve.integral()
    return tuple(int(t) for t in curve)  # type: ignore[return-value]


def count_solutions_mod(curve: Any, n: int, keep: int = 10) -> ResidueReport:
    """Count (x, y, z) mod n with gcd(x, y, z, n) = 1 and a x^3 + b y^3 = c z^3 mod n."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    a, b, c = _int_coefficients(curve)
    r = np.arange(n, dtype=object)
    cubes = np.array([pow(int(t), 3, n) for t in r], dtype=np.int64)
    lhs = (a * cubes[:, None, None] + b * cubes[None, :, None] - c * cubes[None, None, :]) % n
    xs, ys, zs = np.nonzero(lhs == 0)
    reps = []
    count = 0
    for x, y, z in zip(xs.tolist(), ys.tolist(), zs.tolist()):
        if math.gcd(math.gcd(x, y), math.gcd(z, n)) == 1:
            count += 1
            if len(reps) < keep:
                reps.append((x, y, z))
    return ResidueReport(n, count, tuple(reps))


def hasse_window(q: int) -> tuple[float, float]:
    s = 2 * math.sqrt(q)
    return q + 1 - s, q + 1 + s


def finite_field_point_count(curve: Any, q: IntLike) -> int:
    """Projective points of the reduction of a good-reduction curve at q."""
    if isinstance(q, int):
        a, b, c = _int_coefficients(curve)
        if (3 * a * b * c) % q == 0:
            raise ValueError(f"bad reduction at {q}")
        cubes = [pow(t, 3, q) for t in range(q)]
        count = 0
        for x, y, z in _projective(list(range(q)), 0, 1):
            if (a * cubes[x] + b * cubes[y] - c * cubes[z]) % q == 0:
                count += 1
        return count
    q = EisensteinInt.coerce(q)
    a, b, c = (EisensteinInt.coerce(t) for t in curve.eisenstein())
    for t in (a, b, c, EisensteinInt(3)):
        if divrem(t, q)[1].is_zero():
            raise ValueError(f"bad reduction at {q}")
    reps = residue_representatives(q)
    count = 0
    zero, one = EisensteinInt(0), EisensteinInt(1)
    for x, y, z in _projective(reps, zero, one):
        if divrem(a * x**3 + b * y**3 - c * z**3, q)[1].is_zero():
            count += 1
    return count


def _projective(field_elems: Sequence[Any], zero: Any, one: Any):
    for y in field_elems:
        for z in field_elems:
            yield one, y, z
    for z in field_elems:
        yield zero, one, z
    yield zero, zero, one


class _Ring:
    """Arithmetic modulo powers of a uniformizer, specialised per place."""

    def __init__(self, place: IntLike) -> None:
        if isinstance(place, int):
            self.rational = True
            self.pi = place
            self.digits = list(range(place))
            self.v3 = 1 if place == 3 else 0
            self.label = f"Q_{place}"
        else:
            q = EisensteinInt.coerce(place)
            self.rational = False
            self.pi = q
            self.digits = residue_representatives(q)
            self.v3 = 2 if is_lambda_associate(q) else 0
            self.label = f"k_({q})"

    def divisible(self, x: Any, modulus: Any) -> bool:
        if self.rational:
            return x % modulus == 0
        return divrem(x, modulus)[1].is_zero()

    def val(self, x: Any, cap: int) -> int:
        v, m = 0, self.pi
        while v < cap and self.divisible(x, m):
            v += 1
            m = m * self.pi
        return v

    def zero(self) -> Any:
        return 0 if self.rational else EisensteinInt(0)

    def one(self) -> Any:
        return 1 if self.rational else EisensteinInt(1)


def _reduce_coefficients(ring: _Ring, coeffs: list) -> list:
    # pull pi^3 into the variables and divide out the common power of pi
    vals, units = [], []
    for t in coeffs:
        v = ring.val(t, 10**6)
        u = t
        for _ in range(v):
            u = u // ring.pi if ring.rational else divrem(u, ring.pi)[0]
        vals.append(v % 3)
        units.append(u)
    low = min(vals)
    return [u * ring.pi ** (v - low) for u, v in zip(units, vals)]


def brute_local(curve: Any, place: IntLike, depth: int | None = None) -> BruteVerdict:
    """Depth-first digit search for a Hensel-certified local point.

    After moving cubes of the uniformizer into the variables every coefficient
    has valuation at most 2, so a primitive point has a coordinate whose partial
    derivative has valuation at most v(3) + 2; depth 2*(v(3)+2)+1 then suffices.
    A coordinate receives a new digit only when the truncation no longer pins
    down its cube term modulo the current level.
    """
    ring = _Ring(place)
    if ring.rational:
        coeffs = list(_int_coefficients(curve))
    else:
        coeffs = [EisensteinInt.coerce(t) for t in curve.eisenstein()]
    coeffs = _reduce_coefficients(ring, coeffs)
    a, b, c = coeffs
    fc = (a, b, -c)
    grads = (3 * a, 3 * b, -3 * c)
    vc = [ring.val(t, 3) for t in coeffs]
    bound = 2 * (ring.v3 + 2) + 1
    depth = bound if depth is None else depth
    cap = 2 * bound + 4
    powers = [ring.one()]
    for _ in range(depth + 2):
        powers.append(powers[-1] * ring.pi)

    state = {"alive_at_depth": False}

    def value(pt: tuple) -> Any:
        return fc[0] * pt[0] ** 3 + fc[1] * pt[1] ** 3 + fc[2] * pt[2] ** 3

    def certify(pt: tuple) -> tuple | None:
        vf = ring.val(value(pt), cap)
        vg = min(ring.val(g * x * x, cap) for g, x in zip(grads, pt))
        if vf > 2 * vg:
            return pt, vf, vg
        return None

    def pinned(i: int, x: Any, n: int) -> int:
        if n < 0:
            return 10**6
        vx = ring.val(x, n)
        return vc[i] + min(ring.v3 + 2 * vx + n, ring.v3 + vx + 2 * n, 3 * n)

    def widen(i: int, x: Any, n: int, level: int) -> list:
        if pinned(i, x, n) >= level:
            return [(x, n)]
        out = []
        for d in ring.digits:
            out.extend(widen(i, x + d * powers[n], n + 1, level))
        return out

    def dfs(coords: tuple, level: int) -> tuple | None:
        # coords[i] = (value, precision); precision -1 marks the coordinate fixed to 1
        pt = tuple(x for x, _ in coords)
        if level > 0:
            hit = certify(pt)
            if hit is not None:
                return hit
        if level == depth:
            state["alive_at_depth"] = True
            return None
        nxt = level + 1
        cands = [widen(i, x, n, nxt) for i, (x, n) in enumerate(coords)]
        for cx in cands[0]:
            for cy in cands[1]:
                for cz in cands[2]:
                    if ring.divisible(value((cx[0], cy[0], cz[0])), powers[nxt]):
                        found = dfs((cx, cy, cz), nxt)
                        if found is not None:
                            return found
        return None

    zero, one = ring.zero(), ring.one()
    for fixed in range(3):
        start = tuple((zero, 1) if i < fixed else (one, -1) if i == fixed else (zero, 0) for i in range(3))
        found = dfs(start, 0)
        if found is not None:
            p, vf, vg = found
            return BruteVerdict(True, ring.label, depth, bound, p, {"v_F": vf, "min_v_grad": vg})
    if state["alive_at_depth"] and depth < bound:
        return BruteVerdict(None, ring.label, depth, bound, None, {"reason": "inconclusive below certified depth"})
    return BruteVerdict(False, ring.label, depth, bound)
