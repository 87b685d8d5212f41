"""Randomized and exhaustive checks shared by the CLI, the tests and the scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .charvar.f3 import f3_equation
from .charvar.genus2 import genus2_relations
from .engine import TraceEngine, trace_assignment
from .sl2 import (
    IDENTITY_ARITY,
    check_matrix_identity,
    enumerate_sl2,
    random_sl2,
    random_sl2_rational,
    sample_genus2_tuple,
    tuples_for,
    word_eval,
)
from .words import Word, format_word


@dataclass
class CheckReport:
    name: str
    passed: int = 0
    total: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def record(self, good: bool, detail=None):
        self.total += 1
        if good:
            self.passed += 1
        elif len(self.failures) < 10:
            self.failures.append(detail)

    def summary(self) -> str:
        return f"{self.passed}/{self.total} ok" if self.ok else f"{self.passed}/{self.total} FAILED"

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "total": self.total,
                "ok": self.ok, "failures": [str(f) for f in self.failures]}


def random_word(rng: random.Random, k: int, max_len: int, max_exp: int = 3) -> Word:
    """Pseudorandom reduced word on at most k generators (reduction may shorten it)."""
    n = rng.randint(0, max_len)
    exps = [e for e in range(-max_exp, max_exp + 1) if e]
    return Word.from_letters([(rng.randint(1, k), rng.choice(exps)) for _ in range(n)])


def verify_engine(words: int = 500, max_len: int = 10, gens: int = 4, p: int = 10007,
                  seed: int = 0, assignments: int = 20, engine: TraceEngine | None = None) -> CheckReport:
    """Compare reduce_trace(w) at random points against the trace of the product.

    One entry per word: a word passes when all of its assignments agree.
    """
    rng = random.Random(seed)
    engine = engine or TraceEngine()
    rep = CheckReport("engine")
    for _ in range(words):
        w = random_word(rng, gens, max_len)
        P = engine.reduce(w, gens)
        good = True
        for _ in range(assignments):
            mats = {g: random_sl2(p, rng) for g in range(1, gens + 1)}
            if P.evaluate(trace_assignment(mats, p, gens), p) != word_eval(w, mats).trace:
                good = False
                break
        rep.record(good, format_word(w))
    return rep


def verify_identities(p: int = 10007, samples: int = 500, seed: int = 0,
                      exhaustive_prime: int | None = 3) -> dict[str, CheckReport]:
    """The four matrix identities on random SL2(F_p) tuples and on all of SL2(F_3)."""
    rng = random.Random(seed)
    out = {}
    for name, arity in IDENTITY_ARITY.items():
        rep = CheckReport(name)
        for _ in range(samples):
            mats = [random_sl2(p, rng) for _ in range(arity)]
            rep.record(check_matrix_identity(name, mats), mats)
        if exhaustive_prime:
            for mats in tuples_for(name, enumerate_sl2(exhaustive_prime)):
                rep.record(check_matrix_identity(name, mats), mats)
        out[name] = rep
    return out


def verify_f3(p: int = 10007, samples: int = 1000, rational: int = 1000, seed: int = 0) -> CheckReport:
    """f3_equation at trace tuples of random triples over F_p and over Q."""
    rng = random.Random(seed)
    F = f3_equation()
    rep = CheckReport("f3")
    for _ in range(samples):
        mats = [random_sl2(p, rng) for _ in range(3)]
        rep.record(F.evaluate(trace_assignment(mats, p), p) == 0, mats)
    for _ in range(rational):
        mats = [random_sl2_rational(rng) for _ in range(3)]
        rep.record(F.evaluate(trace_assignment(mats)) == 0, mats)
    return rep


def verify_genus2(primes=(5, 7, 11), samples: int = 200, seed: int = 0) -> CheckReport:
    """All four relations on sampled tuples with [A,B][C,D] = I."""
    rng = random.Random(seed)
    rels = genus2_relations()
    rep = CheckReport("genus2")
    for p in primes:
        for _ in range(samples):
            vals = trace_assignment(sample_genus2_tuple(p, rng), p, 4)
            rep.record(all(R.evaluate(vals, p) == 0 for R in rels), p)
    return rep


def genus2_r1_nonzero_rate(p: int = 10007, samples: int = 200, seed: int = 0) -> float:
    """Fraction of unconstrained random 4-tuples at which R1 does not vanish."""
    rng = random.Random(seed)
    R1 = genus2_relations()[0]
    hits = 0
    for _ in range(samples):
        mats = [random_sl2(p, rng) for _ in range(4)]
        hits += R1.evaluate(trace_assignment(mats, p, 4), p) != 0
    return hits / samples
