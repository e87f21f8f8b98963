"""Command-line front end.

Exit codes: 0 pass, 1 inequality failure, 2 input error, 3 degenerate instance.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .serialize import dumps, encode_body, encode_number, load_bodies
from .sweep import CHECKS, SweepConfig, run_check, run_sweep
from .random_bodies import GENERATORS

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_DEGENERATE = 0, 1, 2, 3

CONSTRUCTIONS = ("ruzsa-counterexample", "star", "lower-bound-table", "interval-case")

# above this many points the Ruzsa sets are described by their lattice boxes only
_MAX_EMITTED_POINTS = 20_000


def _param(text: str) -> tuple[str, object]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        return key, value


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convex-sumsets",
                                description="Exact checks of sumset and mixed-volume inequalities.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="evaluate one inequality on bodies read from a JSON file")
    c.add_argument("file", help="bodies JSON file, '-' for stdin")
    c.add_argument("--inequality", required=True, choices=sorted(CHECKS))
    c.add_argument("--param", action="append", type=_param, default=[], metavar="KEY=VALUE")
    c.add_argument("--out", help="write the report here instead of stdout")

    s = sub.add_parser("sweep", help="run a checker on seeded random instances")
    s.add_argument("--inequality", required=True, choices=sorted(CHECKS))
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--generator", default="random-polytope", choices=GENERATORS)
    s.add_argument("--bodies", type=int, help="number of bodies per instance")
    s.add_argument("--param", action="append", type=_param, default=[], metavar="KEY=VALUE")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out")

    k = sub.add_parser("construct", help="build a named extremal construction")
    k.add_argument("name", choices=CONSTRUCTIONS)
    k.add_argument("--param", action="append", type=_param, default=[], metavar="KEY=VALUE")
    k.add_argument("--out")
    return p


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text + ("" if text.endswith("\n") else "\n"))
    else:
        sys.stdout.write(text + ("" if text.endswith("\n") else "\n"))


def _exit_code(rep) -> int:
    if rep.degenerate:
        return EXIT_DEGENERATE
    return EXIT_PASS if rep.passed else EXIT_FAIL


def _cmd_check(args) -> int:
    try:
        raw = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
        bodies, params = load_bodies(json.loads(raw))
        params.update(dict(args.param))
        rep = run_check(args.inequality, bodies, params)
    except (OSError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(dumps(rep.to_json(), indent=2), args.out)
    return _exit_code(rep)


def _cmd_sweep(args) -> int:
    cfg = SweepConfig(args.inequality, args.dim, args.samples, args.generator, args.seed,
                      args.workers, args.bodies, dict(args.param))
    try:
        cfg.validate()
        agg = run_sweep(cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = agg.to_csv() if args.format == "csv" else dumps(agg.to_json(), indent=2)
    _emit(text, args.out)
    if args.format == "csv" or args.out:
        print(f"{agg.instances} instances, {len(agg.failures)} failures, "
              f"{len(agg.degenerate)} degenerate, max ratio {encode_number(agg.max_ratio)}",
              file=sys.stderr)
    return EXIT_PASS if agg.all_pass else EXIT_FAIL


def _construct(name: str, p: dict) -> dict:
    from fractions import Fraction

    from . import constructions as cons
    from .bodies import BoxUnion
    from .serialize import decode_number

    def rat(key, default):
        v = p.get(key, default)
        return decode_number(v) if isinstance(v, str) else Fraction(v)

    if name == "ruzsa-counterexample":
        m, l = p.get("m"), p.get("l")
        ex, rep = cons.build_ruzsa_counterexample(rat("beta", 10), m, l, p.get("eps"))
        bodies = []
        if ex.card_a + ex.card_b <= _MAX_EMITTED_POINTS:
            bodies = [encode_body(ex.a_points()), encode_body(ex.b_points())]
        return {"construction": name, "data": ex.to_json(), "bodies": bodies,
                "report": rep.to_json(), "ok": not rep.passed}
    if name == "star":
        ex, rep = cons.build_star_example(int(p.get("m", 10)), rat("width", 0))
        return {"construction": name, "bodies": [encode_body(ex.body)],
                "volumes": {"A": encode_number(ex.volume), "A+A": encode_number(ex.volume2),
                            "A+A+A": encode_number(ex.volume3)},
                "report": rep.to_json(), "ok": True}
    if name == "lower-bound-table":
        n = int(p.get("n", 3))
        rows = [{"i": i, "j": j, "k": k, "value": encode_number(v)}
                for i, j, k, v in cons.lower_bound_table(n)]
        i, j, k, v = cons.max_lower_bound(n)
        return {"construction": name, "n": n, "rows": rows, "bodies": [],
                "max": {"i": i, "j": j, "k": k, "value": encode_number(v)}, "ok": True}
    if name == "interval-case":
        ivs = p.get("C", [[0, 1]])
        C = BoxUnion([((decode_number(str(lo)),), (decode_number(str(hi)),)) for lo, hi in ivs], 1)
        rep = cons.interval_case_check(rat("a", 1), rat("b", 1), C)
        return {"construction": name, "bodies": list(rep.bodies), "report": rep.to_json(),
                "ok": rep.passed}
    raise ValueError(f"unknown construction {name!r}")


def _cmd_construct(args) -> int:
    try:
        out = _construct(args.name, dict(args.param))
    except (ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(dumps(out, indent=2), args.out)
    return EXIT_PASS if out["ok"] else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    return {"check": _cmd_check, "sweep": _cmd_sweep, "construct": _cmd_construct}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
