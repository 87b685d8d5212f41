"""Reduction of traces of free-group words to polynomials in trace coordinates.

``reduce_trace(w)`` returns a polynomial in the variables ``t[S]`` with
``S`` strictly ascending and ``|S| <= 3`` which, evaluated at the traces of
any SL2 assignment, equals ``tr(w)``.  The rewrite works on cyclic normal
forms (trace is invariant under rotation and inversion) and applies, in
order:

* power shortcut      tr(M^r) = C_r(tr M) with C_0 = 2, C_1 = x, C_r = x C_{r-1} - C_{r-2}
* exponent removal    A^n = U_{n-1}(t_A) A - U_{n-2}(t_A) I   (iterated A^2 = t_A A - I)
* sorting             t_PBAQ = t_PQ t_AB - t_PQ t_A t_B + t_A t_PBQ + t_B t_PAQ - t_PABQ
* cutting             the four-matrix formula applied to A.B.C.(rest)
* per-triple quadratic  t_ijl^2 = X t_ijl + Y, keeping each triple variable at degree <= 1

Termination: every rule either removes an inverse letter, shortens the word
(letter count with multiplicity), or lowers the minimum over rotations of
the inversion count while keeping length; all other words produced are
strictly shorter.  A step budget guards the recursion anyway.

The output is sound but not claimed unique once four or more generators
are involved: products of distinct triple variables are left alone.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .poly import TRACE, Poly, T, Var, trace_var
from .words import Letter, Word, cyclic_normal_letters, parse_word, reduce_letters

HALF = Fraction(1, 2)


class RewriteBudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------- closed forms

def kappa(x: Poly, y: Poly, z: Poly) -> Poly:
    """x^2 + y^2 + z^2 - xyz - 2: the commutator trace in terms of t_A, t_B, t_AB."""
    return x * x + y * y + z * z - x * y * z - 2


def commutator_trace_poly() -> Poly:
    return kappa(T(1), T(2), T(1, 2))


def xy_forms(x, y, z, u, v, w) -> tuple[Poly, Poly]:
    """The coefficient pair (X, Y) with P^2 = X P + Y for P = t_ABC.

    Arguments follow the letter map x=t_A, y=t_B, z=t_C, u=t_BC, v=t_AC, w=t_AB.
    """
    X = w * z + v * y + u * x - x * y * z
    Y = (-x * x - y * y - z * z + u * y * z + v * x * z + w * x * y
         - u * v * w - u * u - v * v - w * w + 4)
    return X, Y


@lru_cache(maxsize=None)
def triple_relation(i: int, j: int, l: int) -> tuple[Poly, Poly]:
    """(X, Y) such that t[i,j,l]^2 = X t[i,j,l] + Y on the character variety."""
    if not i < j < l:
        raise ValueError(f"triple indices must be strictly ascending: {(i, j, l)}")
    if i < 1:
        raise ValueError("generator indices are 1-based")
    return xy_forms(T(i), T(j), T(l), T(j, l), T(i, l), T(i, j))


def ttt_identity_poly() -> Poly:
    """tr([A,B] C) expressed in trace coordinates of (A, B, C)."""
    return (-T(1, 2) * T(2) * T(1, 3) + T(1, 2) * T(1, 2, 3) + T(2) * T(2) * T(3)
            - T(2) * T(2, 3) + T(1) * T(1, 3) - T(3))


def quad_combination(tr: Callable[[tuple[int, ...]], Poly]) -> Poly:
    """The four-matrix trace formula for t_ABCD.

    ``tr(S)`` returns the trace polynomial of the ordered sub-product on the
    positions ``S`` of (A, B, C, D) = (0, 1, 2, 3).
    """
    A, B, C, D = tr((0,)), tr((1,)), tr((2,)), tr((3,))
    AB, AC, AD = tr((0, 1)), tr((0, 2)), tr((0, 3))
    BC, BD, CD = tr((1, 2)), tr((1, 3)), tr((2, 3))
    s = (A * tr((1, 2, 3)) + B * tr((0, 2, 3)) + C * tr((0, 1, 3)) + D * tr((0, 1, 2))
         + AD * BC - AC * BD + AB * CD
         - AD * B * C - BC * A * D - AB * C * D - CD * A * B + A * B * C * D)
    return s * HALF


def quad_trace_formula(a: int, b: int, c: int, d: int) -> Poly:
    """t_{A_a A_b A_c A_d} in traces of one, two and three of the four matrices."""
    gens = (a, b, c, d)
    if len(set(gens)) != 4:
        raise ValueError(f"indices must be pairwise distinct: {gens}")
    return quad_combination(lambda S: reduce_trace(Word(tuple((gens[i], 1) for i in S))))


# ---------------------------------------------------------------- Chebyshev helpers

def chebyshev_c(r: int, x: Poly) -> Poly:
    """C_r(x) with tr(M^r) = C_r(tr M) for M in SL2 and r >= 0."""
    a, b = Poly.const(2), x
    if r == 0:
        return a
    for _ in range(r - 1):
        a, b = b, x * b - a
    return b


def chebyshev_u(n: int, x: Poly) -> Poly:
    """U_n(x) for any integer n, with U_{-1} = 0, U_0 = 1 and U_n = x U_{n-1} - U_{n-2}."""
    if n >= -1:
        a, b = Poly(), Poly.const(1)  # U_{-1}, U_0
        if n == -1:
            return a
        for _ in range(n):
            a, b = b, x * b - a
        return b
    a, b = Poly.const(1), Poly()  # U_0, U_{-1}
    for _ in range(-1 - n):
        a, b = b, x * b - a  # backward step U_{m-1} = x U_m - U_{m+1}
    return b


# ---------------------------------------------------------------- triple normalisation

def _is_triple(v: Var) -> bool:
    return v.kind == TRACE and v.size == 3


@lru_cache(maxsize=None)
def _triple_power(v: Var, e: int) -> tuple[Poly, Poly]:
    """(a_e, b_e) with T^e = a_e T + b_e modulo T^2 = X T + Y."""
    X, Y = triple_relation(*v.index)
    a, b = Poly.const(1), Poly()  # T^1
    for _ in range(e - 1):
        a, b = a * X + b, a * Y
    return a, b


def normalize_triples(P: Poly) -> Poly:
    """Lower every triple variable to degree <= 1 using its quadratic relation."""
    if not any(_is_triple(v) and e >= 2 for m in P.terms for v, e in m):
        return P
    out = Poly()
    untouched: dict = {}
    for m, c in P.terms.items():
        high = [(v, e) for v, e in m if _is_triple(v) and e >= 2]
        if not high:
            untouched[m] = c
            continue
        rest = tuple((v, e) for v, e in m if not (_is_triple(v) and e >= 2))
        term = Poly({rest: c})
        for v, e in high:
            a, b = _triple_power(v, e)
            term = term * (a * Poly.var(v) + b)
        out = out + term
    return out + Poly(untouched)


# ---------------------------------------------------------------- the rewrite engine

def _inversions(seq: Sequence[int]) -> int:
    n = len(seq)
    return sum(1 for i in range(n) for j in range(i + 1, n) if seq[i] > seq[j])


def _power_root(key: tuple[Letter, ...]) -> tuple[tuple[Letter, ...], int] | None:
    n = len(key)
    if n == 1:
        g, e = key[0]
        if abs(e) >= 2:
            return ((g, 1 if e > 0 else -1),), abs(e)
        return None
    for d in range(1, n // 2 + 1):
        if n % d == 0 and key == key[:d] * (n // d):
            return key[:d], n // d
    return None


class TraceEngine:
    """Memoised trace reducer.  The memo is keyed on cyclic normal forms."""

    def __init__(self, max_steps: int = 2_000_000):
        self.memo: dict[tuple[Letter, ...], Poly] = {}
        self.max_steps = max_steps
        self.steps = 0

    def reduce(self, w: Word | str, k: int | None = None) -> Poly:
        if isinstance(w, str):
            w = parse_word(w, k)
        if k is not None and w.max_gen > k:
            raise ValueError(f"generator {w.max_gen} out of range (k={k})")
        self.steps = 0
        return self.trace_letters(w.letters)

    def trace_letters(self, letters: Sequence[Letter]) -> Poly:
        key = cyclic_normal_letters(reduce_letters(letters))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.steps += 1
        if self.steps > self.max_steps:
            raise RewriteBudgetExceeded(f"more than {self.max_steps} rewrite steps")
        result = normalize_triples(self._rewrite(key))
        self.memo[key] = result
        return result

    def _rewrite(self, key: tuple[Letter, ...]) -> Poly:
        n = len(key)
        if n == 0:
            return Poly.const(2)
        if n == 1 and key[0][1] == 1:
            return T(key[0][0])

        root = _power_root(key)
        if root is not None:
            u, r = root
            return chebyshev_c(r, self.trace_letters(u))

        # exponents: negative letters first, then powers >= 2
        idx = next((i for i, (_, e) in enumerate(key) if e < 0), None)
        if idx is None:
            idx = next((i for i, (_, e) in enumerate(key) if e != 1), None)
        if idx is not None:
            g, e = key[idx]
            rest = key[idx + 1:] + key[:idx]
            x = T(g)
            t_ar = self.trace_letters(((g, 1),) + rest)
            t_r = self.trace_letters(rest)
            return chebyshev_u(e - 1, x) * t_ar - chebyshev_u(e - 2, x) * t_r

        gens = [g for g, _ in key]
        best = min(range(n), key=lambda i: (_inversions(gens[i:] + gens[:i]), i))
        rot = gens[best:] + gens[:best]
        if all(a < b for a, b in zip(rot, rot[1:])):
            if n <= 3:
                return T(*rot)
            return self._cut(rot)
        i = next(i for i in range(n - 1) if rot[i] > rot[i + 1])
        P, b, a, Q = rot[:i], rot[i], rot[i + 1], rot[i + 2:]
        tr = lambda seq: self.trace_letters(tuple((g, 1) for g in seq))
        t_pq = tr(P + Q)
        t_a, t_b = T(a), T(b)
        return (t_pq * tr([a, b]) - t_pq * t_a * t_b + t_a * tr(P + [b] + Q)
                + t_b * tr(P + [a] + Q) - tr(P + [a, b] + Q))

    def _cut(self, gens: list[int]) -> Poly:
        # A, B, C single letters; the fourth letter is the product of the rest
        parts = [(gens[0],), (gens[1],), (gens[2],), tuple(gens[3:])]

        def tr(S: tuple[int, ...]) -> Poly:
            seq = [g for i in S for g in parts[i]]
            if len(seq) <= 3:
                return T(*seq)
            return self.trace_letters(tuple((g, 1) for g in seq))

        return quad_combination(tr)


_default_engine = TraceEngine()


def reduce_trace(w: Word | str, k: int | None = None) -> Poly:
    """Trace of a word as a polynomial in the coordinates t[S], |S| <= 3."""
    return _default_engine.reduce(w, k)


def trace_assignment(mats, p: int | None = None, gens: int | None = None) -> dict[Var, object]:
    """Values of every trace coordinate t[S] (|S| <= 3) at concrete matrices."""
    from itertools import combinations

    from .sl2 import word_eval

    if not isinstance(mats, dict):
        mats = {i + 1: m for i, m in enumerate(mats)}
    k = gens or max(mats)
    vals: dict[Var, object] = {}
    for size in (1, 2, 3):
        for S in combinations(range(1, k + 1), size):
            if all(g in mats for g in S):
                vals[trace_var(*S)] = word_eval(Word(tuple((g, 1) for g in S)), mats).trace
    return vals
