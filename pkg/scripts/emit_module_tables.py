#!/usr/bin/env python3
"""Regenerate restricted-module tables (JSON lines) for a range of types.

Example: python scripts/emit_module_tables.py --bound 300 --families A,B,C,D --max-rank 8 --out tables/
"""

import argparse
import sys
from pathlib import Path

from orthoreps.irreps import enumerate_restricted, write_candidates_jsonl
from orthoreps.root_data import LieType

_EXCEPTIONAL = [LieType("G", 2), LieType("F", 4), LieType("E", 6), LieType("E", 7), LieType("E", 8)]
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=300)
    parser.add_argument("--families", default="A,B,C,D")
    parser.add_argument("--max-rank", type=int, default=8)
    parser.add_argument("--exceptional", action="store_true", help="include G2, F4, E6..E8")
    parser.add_argument("--out", default="-", help="directory for per-type files, or '-' for stdout")
    args = parser.parse_args()

    types = []
    for fam in args.families.split(","):
        fam = fam.strip().upper()
        if fam not in _MIN_RANK:
            parser.error(f"unknown classical family {fam!r}")
        types += [LieType(fam, m) for m in range(_MIN_RANK[fam], args.max_rank + 1)]
    if args.exceptional:
        types += _EXCEPTIONAL

    for t in sorted(set(types)):
        cands = enumerate_restricted(t, args.bound)
        if args.out == "-":
            write_candidates_jsonl(cands, sys.stdout)
        else:
            out_dir = Path(args.out)
            out_dir.mkdir(parents=True, exist_ok=True)
            path = out_dir / f"{t}_bound{args.bound}.jsonl"
            with open(path, "w") as fp:
                write_candidates_jsonl(cands, fp)
            print(f"{t}: {len(cands)} modules -> {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
