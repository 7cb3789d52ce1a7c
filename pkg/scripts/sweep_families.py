#!/usr/bin/env python3
"""Run every solution-family instance over the standard parameter grid,
verify the whole pipeline on each, and print a Bianchi-type census.

Usage: python scripts/sweep_families.py [--skip-rank-one]
"""

import argparse
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from semidual.bialgebra import (
    coboundary_delta,
    dualco_delta,
    mcybe_check,
    r_matrix,
    semidual_algebra,
)
from semidual.bianchi import classify_m
from semidual.lie import so3, so21
from semidual.solutions import standard_sweep


def describe(inst):
    params = ", ".join(
        f"{k}={v}" if not isinstance(v, tuple) else
        f"{k}=({','.join(str(x) for x in v)})"
        for k, v in inst.params.items()
    )
    sig = "euclidean" if inst.algebra.metric[1, 1] == 1 else "lorentzian"
    return f"{inst.family.value:13s} {sig:10s} lambda={str(inst.lam):4s} {params}"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--skip-rank-one", action="store_true",
                        help="restrict to the families of the summary table")
    args = parser.parse_args()

    e, l = so3(), so21()
    semiduals = {id(e): semidual_algebra(e), id(l): semidual_algebra(l)}
    census = Counter()
    for inst in standard_sweep(e, l, include_rank_one=not args.skip_rank_one):
        sd = semiduals[id(inst.algebra)]
        r = r_matrix(inst.F)
        mcybe_ok = mcybe_check(sd, r, inst.lam).is_zero()
        delta_ok = dualco_delta(inst.algebra, inst.F) == coboundary_delta(sd, r)
        cl = classify_m(inst)
        expected = inst.expected_bianchi.label
        ok = mcybe_ok and delta_ok and cl.label == expected
        census[cl.label] += 1
        status = "ok" if ok else "MISMATCH"
        print(f"{describe(inst):70s} -> {cl.label:4s} (expected {expected:4s}) {status}")
        if not ok:
            return 1
    print()
    print("bianchi census:", dict(sorted(census.items())))
    return 0


if __name__ == "__main__":
    sys.exit(main())
