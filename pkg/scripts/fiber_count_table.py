"""Tabulate fiber counts n(p, t) over small primes and compare with q^2 + 4q + 1 and the t = +-2 values."""

from dataclasses import dataclass

from _config import parse_config

from sl2trace.counting import count_all_fibers, fit_count_polynomial


@dataclass
class Config:
    """Fiber count table."""
    primes: str = "3,5,7,11,13,17,19,23"
    workers: int = 1
    csv: bool = False


def main(cfg: Config):
    primes = [int(p) for p in cfg.primes.split(",")]
    tables = {p: count_all_fibers(p, "fast", cfg.workers) for p in primes}
    if cfg.csv:
        print("p,t,n,method")
        for p, tab in tables.items():
            for r in tab.values():
                print(f"{r.p},{r.t},{r.n},{r.method}")
        return
    print(f"{'p':>4} {'n(2)':>6} {'n(-2)':>6}  {'p^2+4p+1':>9}  generic counts")
    for p, tab in tables.items():
        generic = sorted({tab[t].n for t in range(p) if (t - 2) % p and (t + 2) % p})
        print(f"{p:>4} {tab[2 % p].n:>6} {tab[-2 % p].n:>6}  {p * p + 4 * p + 1:>9}  {generic}")
    for t in (2, -2):
        recs = [(p, tables[p][t % p].n) for p in primes if p >= 5]
        fit = fit_count_polynomial(recs)
        print(f"t={t:>2}, p>=5: " + (f"fit {fit.poly}" if fit.poly else "no polynomial fit"))


if __name__ == "__main__":
    main(parse_config(Config))
