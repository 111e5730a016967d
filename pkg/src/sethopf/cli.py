"""Command-line interface with stable JSON output.

Verification subcommands emit a run report
``{"command", "parameters", "status", "counters", "payload"}`` and exit 0
on pass, 1 on a verification failure; data subcommands (``cells count``,
``dynkin rank``) emit their documented compact payloads.  Usage errors
exit 2 (argparse's convention).
"""

from __future__ import annotations

import argparse
import json
import sys

from .causal import CausalModel
from .compositions import canonical_set
from .cells import dynkin_rank, enumerate_cells_with_witnesses
from .errors import SizeLimitError
from .jsonio import (
    cell_to_json,
    model_from_json,
    truncseries_to_json,
)
from .utils import parallel_map
from . import verify


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, separators=(",", ":"))
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _report(args, command: str, parameters: dict, results) -> int:
    if not isinstance(results, list):
        results = [results]
    counters: dict = {}
    failures: list = []
    payload: dict = {}
    for r in results:
        for k, v in r.counters.items():
            counters[k] = counters.get(k, 0) + v
        failures.extend(r.failures)
        payload.update(r.payload)
    status = "pass" if not failures else "fail"
    out = {
        "command": command,
        "parameters": parameters,
        "status": status,
        "counters": {
            "checked": sum(counters.values()),
            "failures": len(failures),
            **counters,
        },
        "payload": payload,
    }
    if failures:
        out["failureSamples"] = failures[:10]
    _emit(args, out)
    return 0 if status == "pass" else 1


def _cmd_hopf_check(args) -> int:
    suites = parallel_map(
        lambda f: f(),
        [lambda: verify.hopf_suite(args.n), lambda: verify.tits_suite(min(args.n, 3))],
    )
    return _report(args, "hopf check", {"n": args.n}, suites)


def _cmd_cells_count(args) -> int:
    cells = enumerate_cells_with_witnesses(canonical_set(args.n))
    _emit(args, {"n": args.n, "count": len(cells)})
    return 0


def _cmd_cells_enumerate(args) -> int:
    cells = enumerate_cells_with_witnesses(canonical_set(args.n))
    payload = {
        "n": args.n,
        "count": len(cells),
        "cells": [
            cell_to_json(c, w if args.witnesses else None) for c, w in cells
        ],
    }
    _emit(args, payload)
    return 0


def _cmd_dynkin_rank(args) -> int:
    try:
        cells, r, zdim = dynkin_rank(canonical_set(args.n), exact=args.exact or None)
        status = "pass"
    except ArithmeticError as e:
        _emit(args, {"n": args.n, "status": "fail", "error": str(e)})
        return 1
    _emit(args, {"cells": cells, "rank": r, "zieDim": zdim, "status": status})
    return 0


def _cmd_steinmann(args) -> int:
    return _report(args, "steinmann verify", {"n": args.n}, verify.steinmann_suite(args.n))


def _cmd_ruelle(args) -> int:
    res = verify.lie_suite(args.n)
    keep = {k: v for k, v in res.counters.items() if k.startswith("ruelle")}
    res.counters.clear()
    res.counters.update(keep)
    res.failures[:] = [f for f in res.failures if f.startswith("ruelle")]
    return _report(args, "ruelle verify", {"n": args.n}, res)


def _cmd_glz(args) -> int:
    res = verify.lie_suite(args.n)
    keep = {k: v for k, v in res.counters.items() if k.startswith("glz")}
    res.counters.clear()
    res.counters.update(keep)
    res.failures[:] = [f for f in res.failures if f.startswith("glz")]
    return _report(args, "glz verify", {"n": args.n}, res)


def _cmd_arrows(args) -> int:
    return _report(args, "arrows verify", {"n": args.n}, verify.arrows_suite(args.n))


def _cmd_series(args) -> int:
    return _report(
        args, "series identities", {"order": args.order}, verify.series_suite(args.order)
    )


def _load_model(path: str) -> CausalModel:
    with open(path) as fh:
        return model_from_json(json.load(fh))


def _cmd_toy_demo(args) -> int:
    from .causal import generating_function, smatrix, z_factorization_check

    model = _load_model(args.model)
    A = model.first_field_observable()
    S = model.interaction_observable
    z = generating_function(A, S, args.order)
    payload = {
        "model": {"interaction": model.interaction, "observable": A.id},
        "order": args.order,
        "smatrix": truncseries_to_json(smatrix(A, args.order)),
        "generatingFunction": truncseries_to_json(z),
        "factorizationHolds": z_factorization_check(A, S, args.order),
    }
    _emit(args, payload)
    return 0 if payload["factorizationHolds"] else 1


def _cmd_toy_bogoliubov(args) -> int:
    from .causal import bogoliubov_check, bogoliubov_extract, interacting_observable

    model = _load_model(args.model)
    A = model.first_field_observable()
    S = model.interaction_observable
    ok = bogoliubov_check(A, S, args.order)
    payload = {
        "model": {"interaction": model.interaction, "observable": A.id},
        "order": args.order,
        "interacting": truncseries_to_json(
            interacting_observable(A, S, max(args.order - 1, 0))
        ),
        "extracted": truncseries_to_json(bogoliubov_extract(A, S, args.order)),
        "bogoliubovHolds": ok,
    }
    _emit(args, payload)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sethopf",
        description="exact verification suites for the composition Hopf algebra "
        "and its causal-product constructions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(p, *, n=None, order=None, model=False):
        p.add_argument("--out", help="write JSON output to a file instead of stdout")
        if n is not None:
            p.add_argument("--n", type=int, default=n)
        if order is not None:
            p.add_argument("--order", type=int, default=order)
        if model:
            p.add_argument("--model", required=True, help="path to a model JSON file")
        return p

    hopf = sub.add_parser("hopf").add_subparsers(dest="action", required=True)
    add(hopf.add_parser("check"), n=3).set_defaults(fn=_cmd_hopf_check)

    cells = sub.add_parser("cells").add_subparsers(dest="action", required=True)
    add(cells.add_parser("count"), n=4).set_defaults(fn=_cmd_cells_count)
    enum_p = add(cells.add_parser("enumerate"), n=4)
    enum_p.add_argument("--witnesses", action="store_true")
    enum_p.set_defaults(fn=_cmd_cells_enumerate)

    dyn = sub.add_parser("dynkin").add_subparsers(dest="action", required=True)
    rank_p = add(dyn.add_parser("rank"), n=4)
    rank_p.add_argument("--exact", action="store_true", help="force exact Bareiss at n=5")
    rank_p.set_defaults(fn=_cmd_dynkin_rank)

    st = sub.add_parser("steinmann").add_subparsers(dest="action", required=True)
    add(st.add_parser("verify"), n=4).set_defaults(fn=_cmd_steinmann)

    ru = sub.add_parser("ruelle").add_subparsers(dest="action", required=True)
    add(ru.add_parser("verify"), n=3).set_defaults(fn=_cmd_ruelle)

    gl = sub.add_parser("glz").add_subparsers(dest="action", required=True)
    add(gl.add_parser("verify"), n=3).set_defaults(fn=_cmd_glz)

    ar = sub.add_parser("arrows").add_subparsers(dest="action", required=True)
    add(ar.add_parser("verify"), n=3).set_defaults(fn=_cmd_arrows)

    se = sub.add_parser("series").add_subparsers(dest="action", required=True)
    add(se.add_parser("identities"), order=4).set_defaults(fn=_cmd_series)

    toy = sub.add_parser("toy").add_subparsers(dest="action", required=True)
    add(toy.add_parser("demo"), order=2, model=True).set_defaults(fn=_cmd_toy_demo)
    add(toy.add_parser("bogoliubov"), order=2, model=True).set_defaults(fn=_cmd_toy_bogoliubov)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SizeLimitError as e:
        sys.stderr.write(f"size limit: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
