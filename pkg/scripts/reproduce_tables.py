"""Regenerate the prediction/verification table for a grid of (n, t).

    python3 scripts/reproduce_tables.py --n 2..6 --t 1..6 --format md --out table.md
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from matchtile.cli import default_cache_dir, format_table, parse_range, table
from matchtile.complexes import DEFAULT_BUDGET


@dataclass
class TableConfig:
    ns: str = "2..6"
    ts: str = "1..6"
    fmt: str = "md"
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    verify: bool = True
    cache_dir: Path | None = None
    out: Path | None = None


def parse_args(argv=None) -> TableConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", default=TableConfig.ns)
    p.add_argument("--t", default=TableConfig.ts)
    p.add_argument("--format", choices=["md", "csv", "json"], default=TableConfig.fmt)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-verify", action="store_true")
    p.add_argument("--cache-dir", type=Path, default=None)
    p.add_argument("--out", type=Path, default=None)
    a = p.parse_args(argv)
    return TableConfig(a.n, a.t, a.format, a.budget, a.jobs, not a.no_verify, a.cache_dir or default_cache_dir(), a.out)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    rows = table(parse_range(cfg.ns), parse_range(cfg.ts), cfg.verify, cfg.budget, cfg.cache_dir, cfg.jobs)
    text = format_table(rows, cfg.fmt)
    if cfg.out:
        cfg.out.write_text(text + "\n")
        logging.info("wrote %d rows to %s", len(rows), cfg.out)
    else:
        print(text)
    return 0 if all(r["status"] != "mismatch" for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
