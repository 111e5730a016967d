#!/usr/bin/env python3
"""Run every acceptance suite and print one pass/fail line per criterion.

Default bounds keep this under a minute; --heavy adds the flagged paths
(n=5 rank and primitive dimension, n=6 cells, order-3 series), which take
minutes.
"""

import argparse
import sys
import time

from sethopf import verify
from sethopf.cells import dynkin_rank
from sethopf.compositions import canonical_set


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heavy", action="store_true")
    args = parser.parse_args()

    failures = 0

    def line(name, res, extra=""):
        nonlocal failures
        ok = res.passed if hasattr(res, "passed") else bool(res)
        status = "PASS" if ok else "FAIL"
        detail = f" [{res.checked} checks]" if hasattr(res, "checked") else ""
        print(f"{status}  {name}{detail}{extra}")
        if not ok:
            failures += 1

    t0 = time.time()
    line("criterion 1-3: Hopf axioms, antipode agreement, basis change (n<=4)", verify.hopf_suite(4))
    line("             : Tits algebra laws", verify.tits_suite(3))
    line("criterion 4  : primitive-part dimension ladder 1,2,6,26", verify.dimension_suite(4))
    line("criterion 5  : cell counts 2,6,32,370", verify.cells_suite(5))
    line("criterion 6  : Dynkin suite (primitivity/factorization/annihilation/rank)", verify.dynkin_suite(4))
    line("criterion 7  : Steinmann relations at n=4", verify.steinmann_suite(4))
    line("criterion 8  : Ruelle + GLZ + tree Jacobi/antisymmetry", verify.lie_suite(4))
    line("criterion 9  : Steinmann arrow suite", verify.arrows_suite(3))
    line("criterion 10 : series and T-exponential identities", verify.series_suite(4))
    line("criterion 11 : causal factorization, supports, Bogoliubov (order 2)", verify.causal_suite(4, 2))

    if args.heavy:
        line("heavy: primitive dimension 150 at n=5", verify.dimension_suite(4, include5=True))
        got = dynkin_rank(canonical_set(5))
        line("heavy: Dynkin rank (370, 150, 150) at n=5", got == (370, 150, 150), f" -> {got}")
        line("heavy: 11292 cells at n=6", verify.cells_suite(5, include6=True))
        line("heavy: order-3 Z factorization and Bogoliubov", verify.causal_suite(2, 2, heavy_order3=True))

    print(f"total wall time: {time.time()-t0:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
