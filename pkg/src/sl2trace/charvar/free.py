"""Character varieties of free groups: dimensions, generators, transcendence bases."""

from __future__ import annotations

import random
from math import comb
from typing import Mapping, Sequence

from ..engine import quad_trace_formula, triple_relation, xy_forms
from ..linalg import rank_mod_p
from ..poly import Poly, T, Var, resultant, trace_var
from ..sl2 import SL2Mat, is_prime, mat_mul, random_sl2


def dimension(k: int, r: int = 2) -> int:
    """Dimension of the SL_r character variety of the free group on k generators."""
    if k < 1 or r < 2:
        raise ValueError("need k >= 1 and r >= 2")
    if k == 1:
        return r - 1
    return (r * r - 1) * (k - 1)


def generator_counts(k: int) -> tuple[int, int]:
    """(all ascending products, products of at most three) = (2^k - 1, k + C(k,2) + C(k,3))."""
    if k < 1:
        raise ValueError("k must be positive")
    return 2**k - 1, k + comb(k, 2) + comb(k, 3)


def transcendental_basis(k: int) -> list[Var]:
    """t1, t2, t12 followed by t_j, t_1j, t_2j for 3 <= j <= k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    basis = [trace_var(1), trace_var(2), trace_var(1, 2)]
    for j in range(3, k + 1):
        basis += [trace_var(j), trace_var(1, j), trace_var(2, j)]
    return basis


# ---------------------------------------------------------------- Jacobian rank

# trace-zero basis H, E, F of sl2
_TANGENTS = ((1, 0, 0, -1), (0, 1, 0, 0), (0, 0, 1, 0))


def _prod(mats, p):
    out = (1, 0, 0, 1)
    for m in mats:
        out = mat_mul(out, m, p)
    return out


def _trace_derivatives(gens: Sequence[int], mats: Mapping[int, SL2Mat], p: int, k: int) -> list[int]:
    """d/de tr(A_{g1} ... A_{gm}) along A_i -> A_i (I + e X), for all 3k directions."""
    ents = [mats[g].entries for g in gens]
    out = []
    for i in range(1, k + 1):
        for Xm in _TANGENTS:
            total = 0
            for pos, g in enumerate(gens):
                if g != i:
                    continue
                seq = ents[:pos] + [mat_mul(ents[pos], Xm, p)] + ents[pos + 1:]
                m = _prod(seq, p)
                total += m[0] + m[3]
            out.append(total % p)
    return out


def jacobian_rank(k: int, p: int = 10007, seed: int = 0, samples: int = 50) -> int:
    """Max over random points of the F_p-rank of the differential of the basis traces."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")
    rng = random.Random(seed)
    basis = transcendental_basis(k)
    best = 0
    for _ in range(samples):
        mats = {g: random_sl2(p, rng) for g in range(1, k + 1)}
        cols = [_trace_derivatives(v.gens, mats, p, k) for v in basis]
        rows = [list(r) for r in zip(*cols)]
        best = max(best, rank_mod_p(rows, p))
    return best


# ---------------------------------------------------------------- eliminating t34

class DegenerateEliminationError(ValueError):
    pass


S_VAR = trace_var(3, 4)
_TRIPLES = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]


def tcd_relation() -> Poly:
    """The quadratic for t_ABCD, viewed as t_(AB)CD, with t_ABCD replaced by the four-matrix formula."""
    q = quad_trace_formula(1, 2, 3, 4)
    X, Y = xy_forms(T(1, 2), T(3), T(4), T(3, 4), T(1, 2, 4), T(1, 2, 3))
    return q * q - X * q - Y


def _reduce_mod_quadratic(E: Poly, P: Var, X: Poly, Y: Poly, p: int | None) -> Poly:
    """Lower the degree of E in P to at most one using P^2 = X P + Y."""
    parts = E.coefficients_in(P)
    a, b = Poly.const(1), Poly()  # P^1 = a P + b
    lin, const = parts.get(1, Poly()), parts.get(0, Poly())
    for e in range(2, max(parts) + 1):
        a, b = a * X + b, a * Y
        if p is not None:
            a, b = a.mod(p), b.mod(p)
        c = parts.get(e)
        if c is not None:
            lin = lin + c * a
            const = const + c * b
    out = lin * Poly.var(P) + const
    return out.mod(p) if p is not None else out


def eliminate_tcd_at_point(values: Sequence | Mapping[Var, object], p: int | None = None) -> Poly:
    """Univariate polynomial in s = t34 that vanishes at t34 of every tuple with the given traces.

    ``values`` are the nine traces of ``transcendental_basis(4)``
    (t1, t2, t12, t3, t13, t23, t4, t14, t24), over Q or over F_p.  The
    triple traces t123, t124, t134, t234 are eliminated by successive
    resultants against their quadratic relations.
    """
    if p is not None and (p == 2 or not is_prime(p)):
        raise ValueError(f"need an odd prime, got {p}")
    basis = transcendental_basis(4)
    if not isinstance(values, Mapping):
        values = list(values)
        if len(values) != 9:
            raise ValueError(f"expected 9 values, got {len(values)}")
        values = dict(zip(basis, values))
    known = {v: values[v] for v in basis}

    E = tcd_relation().subs(known)
    if p is not None:
        E = E.mod(p)
    for triple in _TRIPLES:
        P = trace_var(*triple)
        X, Y = (f.subs(known) for f in triple_relation(*triple))
        if p is not None:
            X, Y = X.mod(p), Y.mod(p)
        E = _reduce_mod_quadratic(E, P, X, Y, p)
        if E.degree(P) >= 1:
            quad = Poly.var(P) * Poly.var(P) - X * Poly.var(P) - Y
            E = resultant(E, quad, P, p)
    if E.is_zero():
        raise DegenerateEliminationError("eliminant vanishes identically at this point")
    assert E.variables() <= {S_VAR}
    return E
