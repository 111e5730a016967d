#!/usr/bin/env python3
"""End-to-end walkthrough of the causal word model.

Builds a two-observable model (an interaction s at time 0 and a field
observable a at time 1), prints the S-matrix scheme, the interacting
observable series, the generating function, and verifies Bogoliubov's
formula and the factorization identity, all exactly.
"""

import argparse
import json
from fractions import Fraction

from sethopf.causal import (
    TimedObservable,
    bogoliubov_check,
    generating_function,
    interacting_observable,
    retarded_product,
    smatrix,
    z_factorization_check,
)
from sethopf.jsonio import truncseries_to_json


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=2)
    parser.add_argument("--interaction-time", default="0")
    parser.add_argument("--observable-time", default="1")
    args = parser.parse_args()

    s = TimedObservable("s", Fraction(args.interaction_time))
    a = TimedObservable("a", Fraction(args.observable_time))

    print(f"# model: interaction {s}, observable {a}, order {args.order}\n")

    print("retarded product R(s; a):")
    print("   ", retarded_product({-1: s}, {1: a}))

    print("\nS-matrix scheme S(jA):")
    print(json.dumps(truncseries_to_json(smatrix(a, args.order)), indent=1))

    print("\ninteracting observable series:")
    print(json.dumps(truncseries_to_json(interacting_observable(a, s, args.order)), indent=1))

    z = generating_function(a, s, args.order)
    print("\ngenerating function Z_(gS)(jA):")
    print(json.dumps(truncseries_to_json(z), indent=1))

    print("\nZ = S^(-1)(gS) * S(gS + jA):", z_factorization_check(a, s, args.order))
    print("Bogoliubov extraction matches:", bogoliubov_check(a, s, args.order))


if __name__ == "__main__":
    main()
