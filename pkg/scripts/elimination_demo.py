"""Eliminate t[3,4] at random points over F_p and show where the construction degenerates."""

import random
import time
from dataclasses import dataclass

from _config import parse_config

from sl2trace.charvar.free import S_VAR, DegenerateEliminationError, eliminate_tcd_at_point, transcendental_basis
from sl2trace.engine import trace_assignment
from sl2trace.poly import trace_var
from sl2trace.sl2 import SL2Mat, random_sl2


@dataclass
class Config:
    """Elimination demo."""
    samples: int = 20
    prime: int = 10007
    seed: int = 0


def roots_mod_p(E, p):
    return [s for s in range(p) if E.evaluate({S_VAR: s}, p) == 0]


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    basis = transcendental_basis(4)
    p = cfg.prime
    t0 = time.perf_counter()
    degrees = []
    for _ in range(cfg.samples):
        vals = trace_assignment([random_sl2(p, rng) for _ in range(4)], p, 4)
        E = eliminate_tcd_at_point([vals[v] for v in basis], p)
        assert E.evaluate({S_VAR: vals[trace_var(3, 4)]}, p) == 0
        degrees.append(E.degree())
    print(f"{cfg.samples} random points: eliminant degrees {sorted(set(degrees))}, "
          f"{time.perf_counter() - t0:.1f} s, all vanish at the true t[3,4]")

    if p < 200:
        vals = trace_assignment([random_sl2(p, rng) for _ in range(4)], p, 4)
        E = eliminate_tcd_at_point([vals[v] for v in basis], p)
        print(f"roots mod {p}: {roots_mod_p(E, p)} (true value {vals[trace_var(3, 4)]})")

    try:
        eliminate_tcd_at_point([2] * 9)
    except DegenerateEliminationError as e:
        print(f"identity traces: {e}")
    I, C = SL2Mat(1, 0, 0, 1, p), SL2Mat(1, 1, 0, 1, p)
    for x in range(3):
        vals = trace_assignment([I, I, C, SL2Mat(1, 0, x, 1, p)], p, 4)
        print(f"  A = B = I, C = [[1,1],[0,1]], D = [[1,0],[{x},1]]: nine traces "
              f"{[vals[v] for v in basis]}, t[3,4] = {vals[trace_var(3, 4)]}")


if __name__ == "__main__":
    main(parse_config(Config))
