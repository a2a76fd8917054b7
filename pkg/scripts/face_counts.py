"""Face counts of I(G_{n,t}) and I(H_{n,t}), to see which instances fit a face budget.

Counting stops at the budget, so cells past it print as ">budget".
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from matchtile.complexes import DEFAULT_BUDGET, BudgetExceeded, independence_complex
from matchtile.graphs import G_graph, H_graph


@dataclass
class CountConfig:
    n_max: int = 7
    t_max: int = 8
    budget: int = DEFAULT_BUDGET


def count(family: str, n: int, t: int, budget: int) -> int | None:
    g = G_graph(n, t) if family == "G" else H_graph(n, t)
    try:
        return independence_complex(g, budget).num_faces()
    except BudgetExceeded:
        return None


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-max", type=int, default=CountConfig.n_max)
    p.add_argument("--t-max", type=int, default=CountConfig.t_max)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    a = p.parse_args(argv)
    cfg = CountConfig(a.n_max, a.t_max, a.budget)

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["family", "n", "t", "faces"])
    for family in ("G", "H"):
        for n in range(2, cfg.n_max + 1):
            if family == "H" and n % 3:
                continue
            for t in range(cfg.t_max + 1):
                faces = count(family, n, t, cfg.budget)
                w.writerow([family, n, t, faces if faces is not None else ">budget"])
                if faces is None:
                    break  # larger t only grows
    return 0


if __name__ == "__main__":
    sys.exit(main())
