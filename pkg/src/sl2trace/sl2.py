"""Exact SL(2) arithmetic over Q and prime fields.

This is the brute-force side of every symbolic claim in the package: traces
are computed from honest matrix products, never from formulas.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .words import Word, parse_word

Entries = tuple  # (a, b, c, d), row-major


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _check_prime(p: int | None):
    if p is not None and not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _reduce(x, p):
    if p is None:
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Fraction):
        return x.numerator * pow(x.denominator, -1, p) % p
    return x % p


@dataclass(frozen=True)
class SL2Mat:
    """A 2x2 matrix of determinant one; ``p=None`` means entries in Q."""

    a: object
    b: object
    c: object
    d: object
    p: int | None = None

    def __post_init__(self):
        p = self.p
        for name in "abcd":
            object.__setattr__(self, name, _reduce(getattr(self, name), p))
        det = self.a * self.d - self.b * self.c
        if (det - 1) % p != 0 if p is not None else det != 1:
            raise ValueError(f"determinant is {det}, not 1")

    @property
    def entries(self) -> Entries:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self):
        return _reduce(self.a + self.d, self.p)

    def __matmul__(self, other: "SL2Mat") -> "SL2Mat":
        if self.p != other.p:
            raise ValueError("matrices over different fields")
        return SL2Mat(*mat_mul(self.entries, other.entries, self.p), p=self.p)

    __mul__ = __matmul__

    def inverse(self) -> "SL2Mat":
        return SL2Mat(self.d, -self.b, -self.c, self.a, p=self.p)

    def __pow__(self, n: int) -> "SL2Mat":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = identity(self.p)
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def is_scalar(self, s: int) -> bool:
        p = self.p
        return (self.b, self.c) == (0, 0) and self.a == _reduce(s, p) and self.d == _reduce(s, p)

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def sl2_from_entries(a, b, c, d, p: int | None = None) -> SL2Mat:
    return SL2Mat(a, b, c, d, p)


def identity(p: int | None = None) -> SL2Mat:
    return SL2Mat(1, 0, 0, 1, p)


def mat_mul(x: Entries, y: Entries, p: int | None = None) -> Entries:
    a, b, c, d = x
    e, f, g, h = y
    out = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    if p is None:
        return out
    return tuple(v % p for v in out)


def commutator(A: SL2Mat, B: SL2Mat) -> SL2Mat:
    return A @ B @ A.inverse() @ B.inverse()


def word_eval(w: Word | str, assignment: Mapping[int, SL2Mat] | Sequence[SL2Mat]) -> SL2Mat:
    """Product matrix of a word; ``assignment`` maps generator index to matrix.

    A sequence is read as ``(A_1, A_2, ...)``.
    """
    if isinstance(w, str):
        w = parse_word(w)
    if not isinstance(assignment, Mapping):
        assignment = {i + 1: m for i, m in enumerate(assignment)}
    p = None
    result = None
    for gen, exp in w.letters:
        try:
            M = assignment[gen]
        except KeyError:
            raise ValueError(f"generator {gen} is not assigned") from None
        p = M.p
        result = M**exp if result is None else result @ M**exp
    if result is None:
        if assignment:
            p = next(iter(assignment.values())).p
        return identity(p)
    return result


def trace_of(w: Word | str, assignment) -> object:
    return word_eval(w, assignment).trace


# ---------------------------------------------------------------- sampling

def random_sl2(p: int, rng: random.Random) -> SL2Mat:
    """Uniform element of SL2(F_p) using a single draw from ``rng``.

    The index space of size ``p^3 - p`` is split into matrices with a != 0,
    determined by ``(a, b, c)``, and those with a = 0, determined by
    ``(b != 0, d)``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n_nonzero = (p - 1) * p * p
    idx = rng.randrange(p**3 - p)
    if idx < n_nonzero:
        a = 1 + idx // (p * p)
        b = (idx // p) % p
        c = idx % p
        d = (1 + b * c) * pow(a, -1, p) % p
        return SL2Mat(a, b, c, d, p)
    j = idx - n_nonzero
    b = 1 + j // p
    d = j % p
    return SL2Mat(0, b, -pow(b, -1, p), d, p)


def random_sl2_rational(rng: random.Random, height: int = 3, steps: int = 4) -> SL2Mat:
    """Random element of SL2(Q) with small entries.

    Product of a few elementary matrices with integer parameters in
    ``[-height, height]``, times ``diag(r, 1/r)`` for a small rational ``r``.
    """
    M = identity()
    for _ in range(steps):
        n = rng.randint(-height, height)
        E = SL2Mat(1, n, 0, 1) if rng.random() < 0.5 else SL2Mat(1, 0, n, 1)
        M = M @ E
    r = Fraction(rng.choice([x for x in range(-height, height + 1) if x]), rng.randint(1, height))
    return M @ SL2Mat(r, 0, 0, 1 / r)


def enumerate_sl2(p: int) -> list[SL2Mat]:
    """All ``p^3 - p`` elements of SL2(F_p)."""
    _check_prime(p)
    out = []
    for a, b, c, d in product(range(p), repeat=4):
        if (a * d - b * c) % p == 1:
            out.append(SL2Mat(a, b, c, d, p))
    return out


def sample_genus2_tuple(p: int, rng: random.Random) -> tuple[SL2Mat, SL2Mat, SL2Mat, SL2Mat]:
    """A 4-tuple with [A,B][C,D] = I over F_p (smoke-test family, not Zariski dense).

    A = diag(1/mu, mu), B = antidiag(b, -1/b), C = diag(mu, 1/mu),
    D = antidiag(d, -1/d), then all four conjugated by a random g.
    """
    if p < 5 or not is_prime(p):
        raise ValueError("need a prime p >= 5")
    mu = rng.choice([x for x in range(2, p - 1)])
    b = rng.randrange(1, p)
    d = rng.randrange(1, p)
    inv = lambda x: pow(x, -1, p)
    A = SL2Mat(inv(mu), 0, 0, mu, p)
    B = SL2Mat(0, b, -inv(b), 0, p)
    C = SL2Mat(mu, 0, 0, inv(mu), p)
    D = SL2Mat(0, d, -inv(d), 0, p)
    g = random_sl2(p, rng)
    gi = g.inverse()
    A, B, C, D = (g @ M @ gi for M in (A, B, C, D))
    if not (commutator(A, B) @ commutator(C, D)).is_scalar(1):
        raise RuntimeError("genus-2 sampler produced a tuple violating [A,B][C,D] = I")
    return A, B, C, D


# ---------------------------------------------------------------- conjugacy

@dataclass(frozen=True)
class ConjClass:
    tag: str  # "Id", "MinusId", "JPlus", "JMinus" or "Diag"
    trace: object = None

    def __str__(self) -> str:
        return f"Diag({self.trace})" if self.tag == "Diag" else self.tag


def classify_conjugacy(M: SL2Mat) -> ConjClass:
    """Geometric conjugacy type: decided by the trace and the test M = +-I.

    Over a finite field a trace-2 non-identity element may split into two
    rational classes; both are reported as JPlus.
    """
    if M.is_scalar(1):
        return ConjClass("Id")
    if M.is_scalar(-1):
        return ConjClass("MinusId")
    t = M.trace
    if t == _reduce(2, M.p):
        return ConjClass("JPlus")
    if t == _reduce(-2, M.p):
        return ConjClass("JMinus")
    return ConjClass("Diag", t)


# ---------------------------------------------------------------- identities

def _lin(p, *pairs) -> Entries:
    """Linear combination ``sum c * M`` of 2x2 entry tuples."""
    out = [0, 0, 0, 0]
    for c, m in pairs:
        for i in range(4):
            out[i] += c * m[i]
    if p is None:
        return tuple(Fraction(x) for x in out)
    return tuple(x % p for x in out)


def _same(x: Entries, y: Entries, p) -> bool:
    if p is None:
        return all(Fraction(a) == Fraction(b) for a, b in zip(x, y))
    return all((a - b) % p == 0 for a, b in zip(x, y))


IDENTITY_ARITY = {"qp": 2, "square": 1, "inverse": 1, "ttt": 2}


def check_matrix_identity(name: str, matrices: Sequence[SL2Mat]) -> bool:
    """Check one of the basic SL2 matrix identities on concrete matrices.

    qp:      QP = (t_PQ - t_P t_Q) I + t_P Q + t_Q P - PQ
    square:  A^2 = t_A A - I
    inverse: A^-1 = t_A I - A
    ttt:     [A,B] = -t_AB t_B A + t_AB AB + t_B^2 I - t_B B + t_A A - I
    """
    if name not in IDENTITY_ARITY:
        raise ValueError(f"unknown identity {name!r}")
    if len(matrices) != IDENTITY_ARITY[name]:
        raise ValueError(f"identity {name!r} takes {IDENTITY_ARITY[name]} matrices, got {len(matrices)}")
    p = matrices[0].p
    I = (1, 0, 0, 1)
    if name == "square":
        (A,) = matrices
        return _same((A @ A).entries, _lin(p, (A.trace, A.entries), (-1, I)), p)
    if name == "inverse":
        (A,) = matrices
        return _same(A.inverse().entries, _lin(p, (A.trace, I), (-1, A.entries)), p)
    if name == "qp":
        P, Q = matrices
        PQ = P @ Q
        rhs = _lin(p, (PQ.trace - P.trace * Q.trace, I), (P.trace, Q.entries),
                   (Q.trace, P.entries), (-1, PQ.entries))
        return _same((Q @ P).entries, rhs, p)
    A, B = matrices
    AB = A @ B
    tA, tB, tAB = A.trace, B.trace, AB.trace
    rhs = _lin(p, (-tAB * tB, A.entries), (tAB, AB.entries), (tB * tB, I),
               (-tB, B.entries), (tA, A.entries), (-1, I))
    return _same(commutator(A, B).entries, rhs, p)


def tuples_for(name: str, elements: Iterable[SL2Mat]) -> Iterable[tuple[SL2Mat, ...]]:
    els = list(elements)
    return product(els, repeat=IDENTITY_ARITY[name])
