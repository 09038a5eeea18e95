#!/usr/bin/env python3
"""Run the full orthogonal classification sweep over n = 4*pi and time it.

Usage: python scripts/run_theorem1_sweep.py [--json OUT.json] [--pis 17,19,...]
"""

import argparse
import json
import time

from orthoreps.steinberg import THEOREM1_PRIMES, evidence_json, theorem1_sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", help="also write the full evidence to this path")
    parser.add_argument("--pis", help="comma-separated primes (default: all fifteen)")
    args = parser.parse_args()

    pis = [int(v) for v in args.pis.split(",")] if args.pis else list(THEOREM1_PRIMES)
    t0 = time.perf_counter()
    evidence = theorem1_sweep(pis)
    elapsed = time.perf_counter() - t0

    width = max(len(str(4 * pi)) for pi in pis)
    for ev in evidence:
        (orth,) = ev.orthogonal or [None]
        label = f"{orth.type_id} natural" if orth else "NONE"
        print(
            f"pi={ev.pi:>2}  n={ev.n:>{width}}  {'PASS' if ev.passed else 'FAIL'}  "
            f"orthogonal: {label}  symplectic has C-natural: {ev.symplectic_has_c_natural}  "
            f"A1 power: {ev.symplectic_has_a1_power}"
        )
    passed = all(ev.passed for ev in evidence)
    print(f"\n{len(evidence)} cases in {elapsed:.1f}s -> {'PASS' if passed else 'FAIL'}")

    if args.json:
        with open(args.json, "w") as fp:
            json.dump([evidence_json(ev) for ev in evidence], fp, indent=2)
        print(f"evidence written to {args.json}")
    return 0 if passed else 2


if __name__ == "__main__":
    raise SystemExit(main())
