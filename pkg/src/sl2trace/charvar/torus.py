"""Fibers of the commutator-trace map F(x, y, z) = x^2 + y^2 + z^2 - xyz - 2.

Coordinates are (x, y, z) = (t_A, t_B, t_AB).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import NamedTuple

from ..engine import commutator_trace_poly
from ..linalg import det3
from ..poly import Poly, T, X as sym, scalar_mod, symbol, trace_var
from ..sl2 import is_prime

XV, YV, ZV = trace_var(1), trace_var(2), trace_var(1, 2)


class AffinePoint3(NamedTuple):
    x: object
    y: object
    z: object


@dataclass(frozen=True)
class SingularReport:
    point: AffinePoint3
    hessian_det: object
    kind: str  # "ODP" or "degenerate"


def torus_fiber(t) -> Poly:
    """x^2 + y^2 + z^2 - xyz - 2 - t."""
    return commutator_trace_poly() - Fraction(t)


def _at(P: Poly, pt) -> object:
    return P.evaluate(dict(zip((XV, YV, ZV), pt)))


def gradient() -> list[Poly]:
    F = commutator_trace_poly()
    return [F.diff(v) for v in (XV, YV, ZV)]


def is_singular(pt, t) -> bool:
    F = commutator_trace_poly()
    return _at(F, pt) == Fraction(t) and all(_at(g, pt) == 0 for g in gradient())


def _rational_sqrt(c: Fraction) -> Fraction | None:
    if c < 0:
        return None
    n, d = isqrt(c.numerator), isqrt(c.denominator)
    if n * n == c.numerator and d * d == c.denominator:
        return Fraction(n, d)
    return None


def _clean(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def singular_points(t) -> set[AffinePoint3]:
    """Singular points of F = t, from the closed-form case analysis.

    At a singular point 2x = yz, 2y = xz, 2z = xy, hence
    x^2 = y^2 = z^2 = xyz/2 = t + 2; candidates are sign patterns of a
    rational square root of t + 2, each confirmed by exact evaluation.
    """
    t = Fraction(t)
    c = t + 2
    if c == 0:
        candidates = {(0, 0, 0)}
    else:
        r = _rational_sqrt(c)
        candidates = set() if r is None else set(product((r, -r), repeat=3))
    return {AffinePoint3(*map(_clean, pt)) for pt in candidates if is_singular(pt, t)}


def hessian_matrix(pt) -> list[list]:
    F = commutator_trace_poly()
    vs = (XV, YV, ZV)
    return [[_at(F.diff(a).diff(b), pt) for b in vs] for a in vs]


def hessian_classify(pt, t) -> SingularReport:
    """Hessian determinant at a singular point and the ODP verdict."""
    if not is_singular(pt, t):
        raise ValueError(f"{tuple(pt)} is not a singular point of F = {t}")
    det = det3(hessian_matrix(pt))
    return SingularReport(AffinePoint3(*map(_clean, pt)), _clean(det), "ODP" if det != 0 else "degenerate")


# ---------------------------------------------------------------- projective closure

def homogenized(t) -> Poly:
    """x^2 u + y^2 u + z^2 u - xyz - (2 + t) u^3 in the symbols x, y, z, u."""
    x, y, z, u = sym("x"), sym("y"), sym("z"), sym("u")
    return x * x * u + y * y * u + z * z * u - x * y * z - (2 + Fraction(t)) * u * u * u


def plane_points(p: int) -> list[tuple[int, int, int]]:
    """Normalised representatives of the p^2 + p + 1 points of P^2(F_p)."""
    pts = [(1, y, z) for y in range(p) for z in range(p)]
    pts += [(0, 1, z) for z in range(p)]
    pts.append((0, 0, 1))
    return pts


@dataclass
class ProjectiveReport:
    p: int
    t: int
    plane_size: int
    gradient_zero_at_infinity: list = field(default_factory=list)
    infinity_count: int = 0
    lines_ok: bool = False
    affine_singular: list = field(default_factory=list)

    @property
    def expected_infinity_count(self) -> int:
        return 3 * self.p

    @property
    def passed(self) -> bool:
        return (not self.gradient_zero_at_infinity
                and self.infinity_count == self.expected_infinity_count
                and self.lines_ok)

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "t": self.t,
            "plane_size": self.plane_size,
            "gradient_zero_at_infinity": [list(x) for x in self.gradient_zero_at_infinity],
            "infinity_count": self.infinity_count,
            "expected_infinity_count": self.expected_infinity_count,
            "lines_ok": self.lines_ok,
            "affine_singular": [list(x) for x in self.affine_singular],
            "passed": self.passed,
        }


def projective_checks(t, p: int) -> ProjectiveReport:
    """Exhaustive F_p checks on the closure of F = t in P^3.

    (a) the gradient of the homogenisation vanishes nowhere on the plane u = 0;
    (b) the points at infinity number 3p;
    (c) the locus at infinity is exactly the three coordinate lines xyz = 0.
    Also scans F_p^3 for affine singular points.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")
    tp = scalar_mod(Fraction(t), p)
    H = homogenized(tp)
    names = [symbol(s) for s in "xyzu"]
    grads = [H.diff(v) for v in names]
    report = ProjectiveReport(p=p, t=tp, plane_size=p * p + p + 1)

    lines_ok = True
    for x, y, z in plane_points(p):
        a = dict(zip(names, (x, y, z, 0)))
        on_surface = H.evaluate(a, p) == 0
        if on_surface:
            report.infinity_count += 1
        if on_surface != ((x * y * z) % p == 0):
            lines_ok = False
        if all(g.evaluate(a, p) == 0 for g in grads):
            report.gradient_zero_at_infinity.append((x, y, z))
    report.lines_ok = lines_ok
    report.affine_singular = affine_singular_scan(tp, p)
    return report


def affine_singular_scan(t: int, p: int) -> list[tuple[int, int, int]]:
    """All (x, y, z) in F_p^3 with F = t and zero gradient, by exhaustive search."""
    out = []
    for x, y, z in product(range(p), repeat=3):
        if (2 * x - y * z) % p or (2 * y - x * z) % p or (2 * z - x * y) % p:
            continue
        if (x * x + y * y + z * z - x * y * z - 2 - t) % p == 0:
            out.append((x, y, z))
    return out
