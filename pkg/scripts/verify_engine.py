"""Fuzz the trace engine against exact matrix products and report timing and output sizes."""

import random
import time
from dataclasses import dataclass

from _config import parse_config

from sl2trace.engine import TraceEngine, trace_assignment
from sl2trace.sl2 import random_sl2, word_eval
from sl2trace.verify import random_word


@dataclass
class Config:
    """Engine fuzzing run."""
    words: int = 500
    max_len: int = 10
    gens: int = 4
    prime: int = 10007
    assignments: int = 20
    seed: int = 7


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    engine = TraceEngine()
    bad, sizes, worst = 0, [], (0.0, "")
    t0 = time.perf_counter()
    for _ in range(cfg.words):
        w = random_word(rng, cfg.gens, cfg.max_len)
        t = time.perf_counter()
        P = engine.reduce(w, cfg.gens)
        worst = max(worst, (time.perf_counter() - t, str(w)))
        sizes.append(len(P))
        for _ in range(cfg.assignments):
            mats = {g: random_sl2(cfg.prime, rng) for g in range(1, cfg.gens + 1)}
            if P.evaluate(trace_assignment(mats, cfg.prime, cfg.gens), cfg.prime) != word_eval(w, mats).trace:
                bad += 1
    total = cfg.words * cfg.assignments
    print(f"{total - bad}/{total} evaluations agree")
    print(f"terms: max {max(sizes)}, mean {sum(sizes) / len(sizes):.1f}")
    print(f"slowest reduction {worst[0]:.2f} s on '{worst[1]}'")
    print(f"total {time.perf_counter() - t0:.1f} s")
    return bad == 0


if __name__ == "__main__":
    raise SystemExit(0 if main(parse_config(Config)) else 1)
