"""The character variety of F_3 as a hypersurface in seven trace coordinates."""

from __future__ import annotations

from ..engine import kappa, triple_relation
from ..poly import Poly, T

# letter map: (x, y, z, u, v, w, P) = (t1, t2, t3, t23, t13, t12, t123)


def f3_equation() -> Poly:
    """P^2 - X P - Y, vanishing on the trace coordinates of every SL2 triple."""
    X, Y = triple_relation(1, 2, 3)
    P = T(1, 2, 3)
    return P * P - X * P - Y


def discriminant_f3() -> Poly:
    """X^2 + 4Y: the discriminant in P of the defining quadratic (a sextic in six variables)."""
    X, Y = triple_relation(1, 2, 3)
    return X * X + 4 * Y


def reducible_locus_f3() -> list[Poly]:
    """Equations satisfied by pairwise commuting triples.

    A pair commutes exactly when its commutator has trace 2, and for a
    reducible triple the cover is ramified, so t123 = X/2.
    """
    X, _ = triple_relation(1, 2, 3)
    return [
        kappa(T(1), T(2), T(1, 2)) - 2,
        kappa(T(1), T(3), T(1, 3)) - 2,
        kappa(T(2), T(3), T(2, 3)) - 2,
        2 * T(1, 2, 3) - X,
    ]
