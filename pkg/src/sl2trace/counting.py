"""Point counts of the fibers F(x, y, z) = t over prime fields.

The fast kernel treats F = t as a quadratic in x,

    x^2 - (yz) x + (y^2 + z^2 - 2 - t) = 0,

and counts its roots with the quadratic character of the discriminant, so a
full fiber costs O(p^2).  The brute counter enumerates all p^3 triples and
serves as the oracle.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .poly import EPoly, Poly, trace_var
from .sl2 import enumerate_sl2, is_prime, mat_mul


@dataclass(frozen=True)
class CountRecord:
    p: int
    t: int
    n: int
    method: str


def _check(p: int, method: str):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if method not in ("fast", "brute"):
        raise ValueError(f"unknown method {method!r}")
    if method == "fast" and p == 2:
        raise ValueError("the fast kernel needs an odd prime; use method='brute' for p = 2")


@lru_cache(maxsize=32)
def chi_table(p: int) -> np.ndarray:
    """Quadratic character of every residue mod p (Euler's criterion)."""
    tab = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        tab[a] = 1 if pow(a, (p - 1) // 2, p) == 1 else -1
    return tab


def _fast_slice(p: int, t: int, ys: Sequence[int]) -> int:
    chi = chi_table(p)
    z = np.arange(p, dtype=np.int64)
    total = 0
    for y in ys:
        yz = (y * z) % p
        disc = (yz * yz - 4 * ((y * y + z * z - 2 - t) % p)) % p
        total += int((1 + chi[disc]).sum())
    return total


def _brute_slice(p: int, t: int, xs: Sequence[int]) -> int:
    y = np.arange(p, dtype=np.int64)[:, None]
    z = np.arange(p, dtype=np.int64)[None, :]
    total = 0
    for x in xs:
        vals = (x * x + y * y + z * z - x * y * z - 2 - t) % p
        total += int((vals == 0).sum())
    return total


def _split(p: int, workers: int) -> list[list[int]]:
    workers = max(1, min(workers, p))
    return [list(range(i, p, workers)) for i in range(workers)]


def _run(kernel, p: int, t: int, workers: int) -> int:
    chunks = _split(p, workers)
    if len(chunks) == 1:
        return kernel(p, t, chunks[0])
    with ProcessPoolExecutor(max_workers=len(chunks)) as ex:
        return sum(ex.map(kernel, [p] * len(chunks), [t] * len(chunks), chunks))


def count_fiber(p: int, t: int, method: str = "fast", workers: int = 1) -> CountRecord:
    """#{(x, y, z) in F_p^3 : F(x, y, z) = t}."""
    _check(p, method)
    t %= p
    kernel = _fast_slice if method == "fast" else _brute_slice
    return CountRecord(p, t, _run(kernel, p, t, workers), method)


def count_all_fibers(p: int, method: str = "fast", workers: int = 1) -> dict[int, CountRecord]:
    """Counts for every t in F_p.  The fibers partition F_p^3, so the counts sum to p^3."""
    _check(p, method)
    if method == "brute":
        return {t: count_fiber(p, t, "brute", workers) for t in range(p)}
    # the discriminant is B(y, z) + 4t, so one histogram of B serves every t
    chi = chi_table(p)
    y = np.arange(p, dtype=np.int64)[:, None]
    z = np.arange(p, dtype=np.int64)[None, :]
    yz = (y * z) % p
    base = (yz * yz - 4 * ((y * y + z * z - 2) % p)) % p
    hist = np.bincount(base.ravel(), minlength=p)
    b = np.arange(p, dtype=np.int64)
    out = {}
    for t in range(p):
        n = p * p + int((hist * chi[(b + 4 * t) % p]).sum())
        out[t] = CountRecord(p, t, n, "fast")
    return out


def kernel_self_test(p: int, t: int) -> bool:
    """Solve F = t for each of x, y, z in turn and check all three counts agree with the kernel.

    The quadratic coefficients are read off the polynomial F itself, so this
    also exercises the symmetry of F under permuting coordinates.
    """
    from .engine import commutator_trace_poly

    F = commutator_trace_poly() - t
    vs = [trace_var(1), trace_var(2), trace_var(1, 2)]
    chi = chi_table(p)
    expected = count_fiber(p, t, "fast").n
    for i, v in enumerate(vs):
        parts = F.coefficients_in(v)
        a, b, c = parts.get(2, Poly()), parts.get(1, Poly()), parts.get(0, Poly())
        others = [w for j, w in enumerate(vs) if j != i]
        n = 0
        for u, w in product(range(p), repeat=2):
            val = dict(zip(others, (u, w)))
            A, B, C = a.evaluate(val, p), b.evaluate(val, p), c.evaluate(val, p)
            if A == 0:
                raise AssertionError("F is not quadratic in a coordinate")
            n += 1 + int(chi[(B * B - 4 * A * C) % p])
        if n != expected:
            return False
    return True


# ---------------------------------------------------------------- polynomial fits

@dataclass
class FitResult:
    poly: EPoly | None
    residuals: dict[int, Fraction]
    interpolant: tuple[Fraction, Fraction, Fraction]

    @property
    def fits(self) -> bool:
        return self.poly is not None


def fit_count_polynomial(records: Iterable[tuple[int, int] | CountRecord]) -> FitResult:
    """Interpolate n = a q^2 + b q + c through the first three records and test the rest.

    Succeeds only with integer coefficients reproducing every record exactly.
    """
    pts = [(r.p, r.n) if isinstance(r, CountRecord) else (int(r[0]), int(r[1])) for r in records]
    if len(pts) < 3:
        raise ValueError("need at least 3 records")
    (x0, y0), (x1, y1), (x2, y2) = pts[:3]
    if len({x0, x1, x2}) != 3:
        raise ValueError("the first three records must be at distinct primes")
    # Newton divided differences
    d01 = Fraction(y1 - y0, x1 - x0)
    d12 = Fraction(y2 - y1, x2 - x1)
    a = (d12 - d01) / (x2 - x0)
    b = d01 - a * (x0 + x1)
    c = y0 - a * x0 * x0 - b * x0
    residuals = {x: y - (a * x * x + b * x + c) for x, y in pts}
    integral = all(v.denominator == 1 for v in (a, b, c))
    ok = integral and all(r == 0 for r in residuals.values())
    poly = EPoly((int(c), int(b), int(a))) if ok else None
    return FitResult(poly, residuals, (a, b, c))


# ---------------------------------------------------------------- commuting pairs

def conjugacy_class_count(p: int) -> int:
    G = [m.entries for m in enumerate_sl2(p)]
    inv = {g: (g[3], -g[1] % p, -g[2] % p, g[0]) for g in G}
    seen: set = set()
    classes = 0
    for x in G:
        if x in seen:
            continue
        classes += 1
        for g in G:
            seen.add(mat_mul(mat_mul(g, x, p), inv[g], p))
    return classes


def count_commuting_pairs(p: int) -> int:
    """#{(A, B) in SL2(F_p)^2 : AB = BA} by enumeration, checked against k(G)|G|."""
    if p not in (2, 3, 5, 7):
        raise ValueError("commuting-pair enumeration supports p in {2, 3, 5, 7}")
    G = [m.entries for m in enumerate_sl2(p)]
    n = sum(1 for A in G for B in G if mat_mul(A, B, p) == mat_mul(B, A, p))
    expected = conjugacy_class_count(p) * len(G)
    if n != expected:
        raise RuntimeError(f"enumeration gave {n}, class equation gives {expected}")
    return n


# ---------------------------------------------------------------- output

def records_to_csv(records: Iterable[CountRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", "t", "n", "method"])
    for r in records:
        w.writerow([r.p, r.t, r.n, r.method])
    return buf.getvalue()


def record_dict(r: CountRecord) -> dict:
    return asdict(r)
