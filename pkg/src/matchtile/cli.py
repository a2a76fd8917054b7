"""Command-line front end: build graphs, compute homology, predict, verify, reduce, tabulate.

Exit codes: 0 success/match, 1 verified mismatch, 2 usage or input error,
3 face budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .complexes import BudgetExceeded, default_budget, independence_complex, matching_complex
from .graphs import G_graph, Graph, H_graph, cycle_graph, path_graph, polygon_line_tiling
from .homology import HomologyProfile, TorsionError, connectivity_of_profile, homology_of
from .reductions import UnresolvedLeaf, evaluate, expr_to_json, reduce, trace_to_json
from .theory import INFINITY, connectivity, connectivity_G, connectivity_H, jmmv_lower_bound, predict

log = logging.getLogger("matchtile")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
CACHE_ENV = "MATCHTILE_CACHE_DIR"


class UsageError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _conn_json(c):
    if c is None:
        return None
    return "inf" if c == INFINITY else int(c)


def default_cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV, Path.home() / ".cache" / "matchtile"))


def build_graph(family: str, n: int | None = None, t: int | None = None, k: int | None = None) -> Graph:
    if family in ("path", "cycle"):
        if k is None:
            raise UsageError(f"--k is required for family {family}")
        return path_graph(k) if family == "path" else cycle_graph(k)
    if n is None or t is None:
        raise UsageError(f"--n and --t are required for family {family}")
    if family == "tiling":
        return polygon_line_tiling(n, t)
    if family == "G":
        return G_graph(n, t)
    if family == "H":
        if n % 3:
            raise UsageError("H-family is defined here only for n divisible by 3")
        return H_graph(n, t)
    raise UsageError(f"unknown family {family!r}")


def read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return Graph.from_json(json.loads(text))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed graph file {path}: {exc}") from exc


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


# --- verification -------------------------------------------------------------------


@dataclass
class VerificationReport:
    family: str
    n: int
    t: int
    predicted: dict
    computed: dict | None
    match: bool
    torsion_free: bool | None
    connectivity_predicted: "int | float | None"
    connectivity_computed: "int | float | None"
    face_count: int | None
    elapsed: float
    budget_exceeded: bool

    @property
    def status(self) -> str:
        if self.budget_exceeded:
            return "budget-exceeded"
        return "verified" if self.match else "mismatch"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "t": self.t,
            "predicted": self.predicted,
            "computed": self.computed,
            "match": self.match,
            "torsion_free": self.torsion_free,
            "connectivity_predicted": _conn_json(self.connectivity_predicted),
            "connectivity_computed": _conn_json(self.connectivity_computed),
            "face_count": self.face_count,
            "elapsed": round(self.elapsed, 3),
            "budget_exceeded": self.budget_exceeded,
            "status": self.status,
        }


def _prediction(family: str, n: int, t: int) -> tuple[dict, "int | float"]:
    h = predict(family, n, t)
    if family == "H":
        conn = connectivity_H(n, t)
    elif t >= 1:
        conn = connectivity_G(n, t)
    else:
        conn = connectivity(h)
    body = {"type": h.variant.value, "spheres": {str(d): k for d, k in h.spheres}}
    return body, conn


def _brute_force(family: str, n: int, t: int, budget: int, cache_dir: Path | None) -> tuple[HomologyProfile, int]:
    if family == "G":
        graph, kind = polygon_line_tiling(n, t), "matching"
    else:
        graph, kind = H_graph(n, t), "independence"
    cache_file = None
    if cache_dir is not None:
        cache_file = cache_dir / f"{family}-n{n}-t{t}-{kind}-{graph.digest()[:16]}.json"
        if cache_file.exists():
            cached = json.loads(cache_file.read_text())
            log.info("cache hit %s", cache_file.name)
            return HomologyProfile.from_json(cached["homology"]), cached["face_count"]
    cplx = matching_complex(graph, budget) if kind == "matching" else independence_complex(graph, budget)
    profile = homology_of(cplx)
    faces = cplx.num_faces()
    if cache_file is not None:
        _write_atomic(cache_file, dumps({"digest": graph.digest(), "face_count": faces, "homology": profile.to_json()}))
    return profile, faces


def verify(n: int, t: int, family: str = "G", budget: int | None = None, cache_dir: Path | None = None) -> VerificationReport:
    """Compare the predicted wedge of spheres with brute-force integral homology."""
    if budget is None:
        budget = default_budget()
    start = time.perf_counter()
    predicted, conn_pred = _prediction(family, n, t)
    try:
        profile, faces = _brute_force(family, n, t, budget, cache_dir)
    except BudgetExceeded:
        return VerificationReport(family, n, t, predicted, None, False, None, conn_pred, None, None,
                                  time.perf_counter() - start, True)
    torsion_free = profile.torsion_free
    expected = {int(d): k for d, k in predicted["spheres"].items()}
    match = torsion_free and profile.betti == expected
    try:
        conn_comp = connectivity_of_profile(profile)
    except TorsionError:
        conn_comp = None
    return VerificationReport(family, n, t, predicted, profile.to_json(), match, torsion_free, conn_pred,
                              conn_comp, faces, time.perf_counter() - start, False)


# --- tables --------------------------------------------------------------------------


def parse_range(text: str) -> list[int]:
    """``"1..4"``, ``"3"``, ``"2,5,8"`` or mixtures like ``"1..3,7"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = (int(x) for x in part.split(".."))
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def _table_row(args: tuple) -> dict:
    n, t, do_verify, budget, cache_dir = args
    h = predict("G", n, t)
    row = {
        "n": n,
        "t": t,
        "predicted": str(h),
        "connectivity": connectivity_G(n, t) if t >= 1 else _conn_json(connectivity(h)),
        "jmmv_bound": jmmv_lower_bound(n, t) if n % 3 == 2 and t >= 1 else None,
        "status": "predicted-only",
    }
    if do_verify:
        row["status"] = verify(n, t, "G", budget, cache_dir).status
    return row


def table(ns: list[int], ts: list[int], do_verify: bool = True, budget: int | None = None,
          cache_dir: Path | None = None, jobs: int = 1) -> list[dict]:
    cells = [(n, t, do_verify, budget, cache_dir) for n in ns for t in ts]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_table_row, cells))
    return [_table_row(c) for c in cells]


def format_table(rows: list[dict], fmt: str) -> str:
    cols = ["n", "t", "predicted", "connectivity", "jmmv_bound", "status"]
    if fmt == "json":
        return dumps(rows)
    cell = lambda v: "" if v is None else str(v)  # noqa: E731
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([cell(r[c]) for c in cols])
        return buf.getvalue().rstrip("\n")
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    lines += ["| " + " | ".join(cell(r[c]) for c in cols) + " |" for r in rows]
    return "\n".join(lines)


# --- argument handling ---------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matchtile", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    def budget_flags(sp):
        sp.add_argument("--budget", type=int, default=None, help="max number of faces (default 500000)")

    b = sub.add_parser("build", help="write a graph as JSON")
    b.add_argument("--family", required=True, choices=["path", "cycle", "tiling", "G", "H"])
    b.add_argument("--n", type=int)
    b.add_argument("--t", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--out", default="-")

    for name in ("complex", "homology"):
        sp = sub.add_parser(name, help=f"{name} of the independence or matching complex of a graph file")
        sp.add_argument("graph")
        sp.add_argument("--kind", choices=["independence", "matching"], default="independence")
        budget_flags(sp)

    pr = sub.add_parser("predict", help="predicted homotopy type")
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--t", type=int, required=True)
    pr.add_argument("--family", choices=["G", "H"], default="G")

    v = sub.add_parser("verify", help="prediction vs brute-force homology")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--t", type=int, required=True)
    v.add_argument("--family", choices=["G", "H"], default="G")
    v.add_argument("--cache-dir", default=None)
    v.add_argument("--no-cache", action="store_true")
    budget_flags(v)

    r = sub.add_parser("reduce", help="run the reduction engine on a graph file")
    r.add_argument("graph")

    tb = sub.add_parser("table", help="table of predictions and verification status")
    tb.add_argument("--n", required=True, help="e.g. 3 or 2..5 or 3,6")
    tb.add_argument("--t", required=True, help="e.g. 1..6")
    tb.add_argument("--format", choices=["csv", "json", "md"], default="md")
    tb.add_argument("--no-verify", action="store_true")
    tb.add_argument("--jobs", type=int, default=1)
    tb.add_argument("--cache-dir", default=None)
    tb.add_argument("--no-cache", action="store_true")
    budget_flags(tb)
    return p


def _cache(args) -> Path | None:
    if args.no_cache:
        return None
    return Path(args.cache_dir) if args.cache_dir else default_cache_dir()


def _run(args) -> int:
    if args.cmd == "build":
        g = build_graph(args.family, args.n, args.t, args.k)
        text = dumps(g.to_json())
        if args.out == "-":
            print(text)
        else:
            Path(args.out).write_text(text + "\n")
        return EXIT_OK

    if args.cmd in ("complex", "homology"):
        g = read_graph(args.graph)
        budget = args.budget if args.budget is not None else default_budget()
        k = matching_complex(g, budget) if args.kind == "matching" else independence_complex(g, budget)
        print(dumps(k.to_json() if args.cmd == "complex" else homology_of(k).to_json()))
        return EXIT_OK

    if args.cmd == "predict":
        if args.family == "H" and args.n % 3:
            raise UsageError("H-family predictions need n divisible by 3")
        body, conn = _prediction(args.family, args.n, args.t)
        print(dumps({"family": args.family, "n": args.n, "t": args.t, **body, "connectivity": _conn_json(conn)}))
        return EXIT_OK

    if args.cmd == "verify":
        if args.family == "H" and args.n % 3:
            raise UsageError("H-family needs n divisible by 3")
        report = verify(args.n, args.t, args.family, args.budget, _cache(args))
        print(dumps(report.to_json()))
        if report.budget_exceeded:
            return EXIT_BUDGET
        return EXIT_OK if report.match else EXIT_MISMATCH

    if args.cmd == "reduce":
        g = read_graph(args.graph)
        expr, trace = reduce(g)
        out = {"trace": trace_to_json(trace), "expression": expr_to_json(expr)}
        try:
            h = evaluate(expr)
            out.update(status="resolved", type=h.variant.value, spheres={str(d): k for d, k in h.spheres})
        except UnresolvedLeaf:
            out.update(status="UNRESOLVED_LEAF", type=None, spheres=None)
        print(dumps(out))
        return EXIT_OK

    if args.cmd == "table":
        ns, ts = parse_range(args.n), parse_range(args.t)
        rows = table(ns, ts, not args.no_verify, args.budget, _cache(args), args.jobs)
        print(format_table(rows, args.format))
        return EXIT_OK
    raise UsageError(f"unknown command {args.cmd}")


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return _run(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
