"""Sparse multivariate polynomials with exact rational coefficients.

Variables are small named tuples whose natural ordering is the registry
order: trace variables ``t[S]`` first (by ``|S|`` then ``S``), then
matrix-entry variables, then free symbols.  A monomial is a tuple of
``(Var, exp)`` pairs sorted by variable; a polynomial is a dict from
monomials to nonzero coefficients (``int`` when integral, otherwise
``Fraction``), so structural equality is dict equality.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, Iterable, Mapping, NamedTuple, Union

TRACE, ENTRY, SYMBOL = 0, 1, 2


class Var(NamedTuple):
    kind: int
    size: int
    index: tuple

    def __str__(self) -> str:
        if self.kind == TRACE:
            return "t[" + ",".join(map(str, self.index)) + "]"
        if self.kind == ENTRY:
            return "m[" + ",".join(map(str, self.index)) + "]"
        return self.index[0]

    def __repr__(self) -> str:
        return str(self)

    @property
    def gens(self) -> tuple[int, ...]:
        if self.kind != TRACE:
            raise AttributeError("only trace variables have a generator tuple")
        return self.index


def trace_var(*gens: int) -> Var:
    """The trace coordinate ``t[i,j,..]`` for a strictly ascending index tuple of length 1-3."""
    if not 1 <= len(gens) <= 3:
        raise ValueError(f"trace variables take 1 to 3 generators, got {gens}")
    if any(g < 1 for g in gens) or any(a >= b for a, b in zip(gens, gens[1:])):
        raise ValueError(f"trace variable indices must be strictly ascending and positive: {gens}")
    return Var(TRACE, len(gens), tuple(gens))


def entry_var(gen: int, row: int, col: int) -> Var:
    if row not in (1, 2) or col not in (1, 2):
        raise ValueError("matrix entries are indexed by row, col in {1, 2}")
    return Var(ENTRY, 0, (gen, row, col))


def symbol(name: str) -> Var:
    return Var(SYMBOL, 0, (name,))


Monomial = tuple  # tuple[tuple[Var, int], ...]
Scalar = Union[int, Fraction]


class NotInvertibleError(ValueError):
    pass


class UnassignedVariableError(ValueError):
    pass


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _as_scalar(c) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"unsupported coefficient {c!r}")


def _integral(terms: dict) -> tuple[dict, int]:
    """Scale coefficients by the lcm d of their denominators; returns (int terms, d)."""
    d = 1
    for c in terms.values():
        if isinstance(c, Fraction):
            d = lcm(d, c.denominator)
    if d == 1:
        return terms, 1
    return {m: c.numerator * (d // c.denominator) if isinstance(c, Fraction) else c * d
            for m, c in terms.items()}, d


@lru_cache(maxsize=1 << 18)
def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_divides(a: Monomial, b: Monomial) -> Monomial | None:
    """``b / a`` if ``a`` divides ``b``, else None."""
    d = dict(b)
    for v, e in a:
        if d.get(v, 0) < e:
            return None
        d[v] -= e
        if not d[v]:
            del d[v]
    return tuple(sorted(d.items()))


_SENTINEL = ((99,), 0)


def lex_key(m: Monomial) -> tuple:
    # ascending sort on this key puts lex-larger monomials first
    return tuple((v, -e) for v, e in m) + (_SENTINEL,)


def display_key(m: Monomial) -> tuple:
    # constant last; then highest single power, total degree, lex
    if not m:
        return (1,)
    return (0, -max(e for _, e in m), -mono_degree(m), lex_key(m))


def modinv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise NotInvertibleError(f"{a} is not invertible mod {p}")
    return pow(a, -1, p)


def scalar_mod(c: Scalar, p: int) -> int:
    if isinstance(c, Fraction):
        if c.denominator % p == 0:
            raise NotInvertibleError(f"denominator of {c} is divisible by {p}")
        return c.numerator * modinv(c.denominator, p) % p
    return c % p


class Poly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        # callers are trusted to pass canonical monomials and nonzero coefficients
        self.terms: dict = dict(terms) if terms else {}
        self._hash = None

    # construction
    @classmethod
    def const(cls, c) -> "Poly":
        c = _as_scalar(c)
        return cls({(): c} if c else None)

    @classmethod
    def var(cls, v: Var) -> "Poly":
        return cls({((v, 1),): 1})

    @classmethod
    def from_terms(cls, items: Iterable[tuple[Mapping[Var, int] | Monomial, Scalar]]) -> "Poly":
        out: dict = {}
        for mono, c in items:
            pairs = mono.items() if isinstance(mono, Mapping) else mono
            m = tuple(sorted((v, e) for v, e in pairs if e))
            if any(e < 0 for _, e in m):
                raise ValueError("negative exponent")
            out[m] = out.get(m, 0) + _as_scalar(c)
        return cls({m: _norm(c) for m, c in out.items() if c})

    @staticmethod
    def _coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return Poly.const(x)

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get((), 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # ring operations
    def __add__(self, other) -> "Poly":
        other = Poly._coerce(other)
        if len(other.terms) > len(self.terms):
            self, other = other, self
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = _norm(s)
            else:
                res.pop(m, None)
        return Poly(res)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-Poly._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return Poly._coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = _as_scalar(other)
            if not c:
                return Poly()
            return Poly({m: _norm(v * c) for m, v in self.terms.items()})
        # clear denominators so the inner loop runs on machine-friendly ints
        a, da = _integral(self.terms)
        b, db = _integral(other.terms)
        res: dict = {}
        get = res.get
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_mul(m1, m2)
                res[m] = get(m, 0) + c1 * c2
        d = da * db
        if d == 1:
            return Poly({m: c for m, c in res.items() if c})
        return Poly({m: _norm(Fraction(c, d)) for m, c in res.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        c = _as_scalar(other)
        return Poly({m: _norm(Fraction(v) / c) for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.const(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # structure
    def variables(self) -> set[Var]:
        return {v for m in self.terms for v, _ in m}

    def degree(self, v: Var | None = None) -> int:
        """Degree in ``v``, or total degree when ``v`` is None (``-1`` for zero)."""
        if not self.terms:
            return -1
        if v is None:
            return max(mono_degree(m) for m in self.terms)
        return max(dict(m).get(v, 0) for m in self.terms)

    def weighted_degree(self, weight: Callable[[Var], int]) -> int:
        if not self.terms:
            return -1
        return max(sum(weight(v) * e for v, e in m) for m in self.terms)

    def coefficients_in(self, v: Var) -> dict[int, "Poly"]:
        """Split as ``sum_i c_i * v^i``; returns ``{i: c_i}``."""
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for w, k in m:
                if w == v:
                    e = k
                else:
                    rest.append((w, k))
            parts.setdefault(e, {})[tuple(rest)] = c
        return {e: Poly(t) for e, t in parts.items()}

    def coefficient(self, mono: Mapping[Var, int]) -> Scalar:
        m = tuple(sorted((v, e) for v, e in mono.items() if e))
        return self.terms.get(m, 0)

    # calculus and substitution
    def diff(self, v: Var) -> "Poly":
        res: dict = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(v, 0)
            if not e:
                continue
            if e == 1:
                del d[v]
            else:
                d[v] = e - 1
            mm = tuple(sorted(d.items()))
            res[mm] = res.get(mm, 0) + c * e
        return Poly({m: _norm(c) for m, c in res.items() if c})

    def subs(self, mapping: Mapping[Var, "Poly | Scalar"]) -> "Poly":
        """Simultaneously replace variables by polynomials (or scalars) and expand."""
        if not mapping:
            return self
        images = {v: Poly._coerce(q) for v, q in mapping.items()}
        powers: dict[tuple[Var, int], Poly] = {}

        def power(v: Var, e: int) -> Poly:
            key = (v, e)
            if key not in powers:
                powers[key] = images[v] ** e
            return powers[key]

        total = Poly()
        for m, c in self.terms.items():
            kept = tuple((w, e) for w, e in m if w not in images)
            term = Poly({kept: c})
            for w, e in m:
                if w in images:
                    term = term * power(w, e)
                    if not term:
                        break
            total = total + term
        return total

    def evaluate(self, assignment: Mapping[Var, Scalar], p: int | None = None):
        """Evaluate over Q (``p=None``) or over F_p; returns an int or Fraction."""
        if p is None:
            total: Scalar = 0
            for m, c in self.terms.items():
                val = c
                for v, e in m:
                    try:
                        x = assignment[v]
                    except KeyError:
                        raise UnassignedVariableError(f"no value for {v}") from None
                    val = val * _as_scalar(x) ** e
                total += val
            return _norm(Fraction(total)) if isinstance(total, Fraction) else total
        total = 0
        cache: dict = {}
        for m, c in self.terms.items():
            val = scalar_mod(c, p)
            for v, e in m:
                key = (v, e)
                x = cache.get(key)
                if x is None:
                    try:
                        base = assignment[v]
                    except KeyError:
                        raise UnassignedVariableError(f"no value for {v}") from None
                    x = pow(scalar_mod(_as_scalar(base), p), e, p)
                    cache[key] = x
                val = val * x % p
            total += val
        return total % p

    def mod(self, p: int) -> "Poly":
        """Coefficients reduced to representatives in ``[0, p)``."""
        res = {}
        for m, c in self.terms.items():
            r = scalar_mod(c, p)
            if r:
                res[m] = r
        return Poly(res)

    def leading(self) -> tuple[Monomial, Scalar]:
        m = min(self.terms, key=lex_key)
        return m, self.terms[m]

    def exact_div(self, other: "Poly", p: int | None = None) -> "Poly":
        """Quotient ``self / other``; raises ValueError when the division is not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm_d, lc_d = other.leading()
        inv = modinv(lc_d, p) if p is not None else None
        rem = self.mod(p) if p is not None else self
        quot: dict = {}
        while rem:
            lm_r, lc_r = rem.leading()
            m = _mono_divides(lm_d, lm_r)
            if m is None:
                raise ValueError("polynomial division is not exact")
            c = lc_r * inv % p if p is not None else _norm(Fraction(lc_r) / lc_d)
            quot[m] = c
            rem = rem - Poly({m: c}) * other
            if p is not None:
                rem = rem.mod(p)
        return Poly(quot)

    # rendering
    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda mc: display_key(mc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            mono = "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def to_json(self) -> dict:
        vs = sorted(self.variables())
        pos = {v: i for i, v in enumerate(vs)}
        terms = []
        for m, c in self.sorted_terms():
            exps = [0] * len(vs)
            for v, e in m:
                exps[pos[v]] = e
            f = Fraction(c)
            terms.append({"coeff": f"{f.numerator}/{f.denominator}", "exps": exps})
        return {"vars": [_var_json(v) for v in vs], "terms": terms}

    @classmethod
    def from_json(cls, data: dict | str) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        vs = [_var_from_json(d) for d in data["vars"]]
        items = []
        for t in data["terms"]:
            exps = t["exps"]
            if len(exps) != len(vs):
                raise ValueError("exponent vector length does not match variable list")
            items.append((tuple(zip(vs, exps)), Fraction(t["coeff"])))
        return cls.from_terms(items)


def _var_json(v: Var) -> dict:
    if v.kind == TRACE:
        return {"id": str(v), "kind": "trace", "gens": list(v.index)}
    if v.kind == ENTRY:
        g, r, c = v.index
        return {"id": str(v), "kind": "entry", "gen": g, "row": r, "col": c}
    return {"id": str(v), "kind": "symbol"}


def _var_from_json(d: dict) -> Var:
    kind = d["kind"]
    if kind == "trace":
        return trace_var(*d["gens"])
    if kind == "entry":
        return entry_var(d["gen"], d["row"], d["col"])
    if kind == "symbol":
        return symbol(d["id"])
    raise ValueError(f"unknown variable kind {kind!r}")


def T(*gens: int) -> Poly:
    """Shorthand for the trace coordinate polynomial ``t[gens]``."""
    return Poly.var(trace_var(*gens))


def X(name: str) -> Poly:
    return Poly.var(symbol(name))


# ---------------------------------------------------------------- resultants

def determinant(matrix: list[list[Poly]], p: int | None = None) -> Poly:
    """Fraction-free (Bareiss) determinant of a square matrix of polynomials."""
    n = len(matrix)
    if n == 0:
        return Poly.const(1)
    M = [[Poly._coerce(x) for x in row] for row in matrix]
    if p is not None:
        M = [[x.mod(p) for x in row] for row in M]
    sign = 1
    prev = Poly.const(1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return Poly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                if p is not None:
                    num = num.mod(p)
                M[i][j] = num.exact_div(prev, p)
        prev = M[k][k]
    det = M[n - 1][n - 1] * sign
    return det.mod(p) if p is not None else det


def sylvester_matrix(P: Poly, Q: Poly, v: Var) -> list[list[Poly]]:
    m, n = P.degree(v), Q.degree(v)
    a = P.coefficients_in(v)
    b = Q.coefficients_in(v)
    size = m + n
    zero = Poly()
    rows = []
    for i in range(n):
        row = [zero] * size
        for d in range(m + 1):
            row[i + m - d] = a.get(d, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for d in range(n + 1):
            row[i + n - d] = b.get(d, zero)
        rows.append(row)
    return rows


def resultant(P: Poly, Q: Poly, v: Var, p: int | None = None) -> Poly:
    """Resultant of ``P`` and ``Q`` with respect to ``v`` (Sylvester determinant).

    Both inputs must have positive degree in ``v``.  With ``p`` the
    computation is carried out over F_p.
    """
    if P.degree(v) < 1 or Q.degree(v) < 1:
        raise ValueError(f"resultant needs positive degree in {v} for both inputs")
    return determinant(sylvester_matrix(P, Q, v), p)


# ---------------------------------------------------------------- E-polynomials

class EPoly:
    """Integer polynomial in ``q``; coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def q(cls) -> "EPoly":
        return cls((0, 1))

    @staticmethod
    def _coerce(x) -> "EPoly":
        return x if isinstance(x, EPoly) else EPoly((x,))

    def __add__(self, other) -> "EPoly":
        other = EPoly._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return EPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "EPoly":
        return EPoly(-x for x in self.coeffs)

    def __sub__(self, other) -> "EPoly":
        return self + (-EPoly._coerce(other))

    def __rsub__(self, other) -> "EPoly":
        return EPoly._coerce(other) - self

    def __mul__(self, other) -> "EPoly":
        other = EPoly._coerce(other)
        if not self.coeffs or not other.coeffs:
            return EPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return EPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (EPoly, int)):
            return self.coeffs == EPoly._coerce(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, q):
        return sum(c * q**i for i, c in enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            a = abs(c)
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            body = str(a) if not mono else (mono if a == 1 else f"{a}{mono}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"EPoly({self})"
