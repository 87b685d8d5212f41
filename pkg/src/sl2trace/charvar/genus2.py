"""Trace relations on the genus-2 character variety, [A,B][C,D] = I."""

from __future__ import annotations

from ..engine import reduce_trace
from ..poly import Poly, T


def genus2_relations() -> list[Poly]:
    """Four polynomials in trace coordinates of (A, B, C, D) vanishing when [A,B][C,D] = I.

    R1: t_[A,B] = t_[C,D]
    R2: [A,B]C = D C D^-1, so t_[A,B]C = t_C
    R3: [C,D]A = B A B^-1, so t_[C,D]A = t_A
    R4: D^-1 [A,B] = C D^-1 C^-1, so t_{D^-1 [A,B]} = t_D (derived by the engine)
    """
    r1 = ((T(1) ** 2 + T(2) ** 2 + T(1, 2) ** 2 - T(1) * T(2) * T(1, 2))
          - (T(3) ** 2 + T(4) ** 2 + T(3, 4) ** 2 - T(3) * T(4) * T(3, 4)))
    r2 = (-T(1, 2) * T(2) * T(1, 3) + T(1, 2) * T(1, 2, 3) + T(2) ** 2 * T(3)
          - T(2) * T(2, 3) + T(1) * T(1, 3) - 2 * T(3))
    r3 = (-T(3, 4) * T(4) * T(1, 3) + T(3, 4) * T(1, 3, 4) + T(4) ** 2 * T(1)
          - T(4) * T(1, 4) + T(3) * T(1, 3) - 2 * T(1))
    r4 = reduce_trace("[a,b] d^-1") - reduce_trace("d^-1")
    return [r1, r2, r3, r4]
