"""Run the reduction engine on G_{n,t} (or H_{n,t}) and report how far it gets.

Prints one line per instance: resolved type or UNRESOLVED, number of steps, and
rules used. Useful for seeing which tiling graphs close mechanically.
"""

import argparse
import sys
from collections import Counter

from matchtile.cli import parse_range
from matchtile.graphs import G_graph, H_graph
from matchtile.reductions import UnresolvedLeaf, evaluate, reduce
from matchtile.theory import predict


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--family", choices=["G", "H"], default="G")
    p.add_argument("--n", default="2..6")
    p.add_argument("--t", default="1..4")
    a = p.parse_args(argv)

    wrong = 0
    for n in parse_range(a.n):
        if a.family == "H" and n % 3:
            continue
        for t in parse_range(a.t):
            g = G_graph(n, t) if a.family == "G" else H_graph(n, t)
            expr, trace = reduce(g)
            rules = Counter(s.rule.value for s in trace)
            try:
                h = evaluate(expr)
                status = str(h)
                if h != predict(a.family, n, t):
                    status += "  (DIFFERS FROM PREDICTION)"
                    wrong += 1
            except UnresolvedLeaf:
                status = "UNRESOLVED"
            used = ", ".join(f"{r}x{k}" for r, k in sorted(rules.items()))
            print(f"{a.family}({n},{t}): {status}; {len(trace)} steps [{used}]")
    return 1 if wrong else 0


if __name__ == "__main__":
    sys.exit(main())
