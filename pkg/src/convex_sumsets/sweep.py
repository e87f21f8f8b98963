"""Registry of checkers and the seeded sweep driver.

A sweep evaluates one checker on ``samples`` random instances.  Sample
``i`` draws its bodies from ``sample_rng(seed, i)`` only, so results do not
depend on the worker count or on completion order; the aggregate is
assembled after sorting by sample index.
"""
from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable

from . import inequalities as ineq
from .bodies import BoxUnion
from .random_bodies import GENERATORS, random_body, random_boxunion, random_zonotope, sample_rng
from .serialize import encode_number

__all__ = [
    "CHECKS",
    "SweepConfig",
    "AggregateReport",
    "run_check",
    "run_sample",
    "run_sweep",
    "decimal12",
    "CSV_COLUMNS",
]


def _rat(x, default=None):
    if x is None:
        return default
    if isinstance(x, str):
        from .scalar import parse_rational

        return parse_rational(x)
    return Fraction(x)


def _need(bodies, k, name):
    if len(bodies) != k:
        raise ValueError(f"{name} needs {k} bodies, got {len(bodies)}")
    return bodies


def _at_least(bodies, k, name):
    if len(bodies) < k:
        raise ValueError(f"{name} needs at least {k} bodies, got {len(bodies)}")
    return bodies


def _m_supermodular(bodies, p):
    k = len(bodies) - int(p.get("mixed_with", 0))
    base, cs = bodies[:k], bodies[k:]
    if "increments" in p:
        incs = p["increments"]
        s0 = p.get("s0", [])
    else:
        # default: B_k as the base, singletons 1..k-1 as increments
        s0, incs = [k], [[i] for i in range(1, k)]
    return ineq.check_m_supermodular(base, s0, incs, cs)


def _compression(bodies, p):
    if "A" not in p:
        raise ValueError("compression needs the multiset parameter 'A'")
    return ineq.check_compression(bodies, p["A"], p.get("B"))


def _fractional_superadditivity(bodies, p):
    k = len(bodies)
    if "partition" in p:
        part = ineq.FractionalPartition(k, [(s, _rat(w)) for s, w in p["partition"]])
    else:
        part = ineq.FractionalPartition.all_subsets_of_size(k, int(p.get("size", max(1, k - 1))))
    return ineq.check_fractional_superadditivity(bodies, part)


def _fractional_plunnecke(bodies, p):
    cs = p.get("cs_power")
    if cs is not None:
        cs = {frozenset(int(i) for i in key.split(",")): _rat(v) for key, v in cs.items()}
    return ineq.check_fractional_plunnecke(bodies[0], bodies[1:], int(p.get("k", 1)), cs)


def _interval_case(bodies, p):
    from .constructions import interval_case_check

    (C,) = _need(bodies, 1, "interval-case")
    return interval_case_check(_rat(p.get("a"), Fraction(1)), _rat(p.get("b"), Fraction(1)), C)


# id -> (number of bodies or None for "at least", minimum, runner)
CHECKS: dict[str, tuple[int | None, int, Callable]] = {
    "supermodular3": (3, 3, lambda b, p: ineq.check_supermodular3(*b)),
    "m-supermodular": (None, 2, _m_supermodular),
    "compression": (None, 1, _compression),
    "fractional-superadditivity": (None, 2, _fractional_superadditivity),
    "alternating-sum": (None, 2, lambda b, p: ineq.check_alternating_sum(b[0], b[1:])),
    "plunnecke3": (3, 3, lambda b, p: ineq.plunnecke_ratio3(*b, constant=_rat(p.get("constant")))),
    "plunnecke-m": (None, 2, lambda b, p: ineq.plunnecke_ratio_m(b[0], b[1:])[0]),
    "weak-plunnecke-m": (None, 2, lambda b, p: ineq.plunnecke_ratio_m(b[0], b[1:])[1]),
    "fractional-plunnecke": (None, 2, _fractional_plunnecke),
    "xiao": (3, 3, lambda b, p: ineq.check_xiao(*b, int(p.get("j", 1)), int(p.get("m", 1)))),
    "fenchel-local": (3, 3, lambda b, p: ineq.check_fenchel_local(*b, constant=_rat(p.get("constant")))),
    "ruzsa-triangle": (3, 3, lambda b, p: ineq.check_ruzsa_triangle(*b)),
    "litvak": (2, 2, lambda b, p: ineq.check_litvak(*b)),
    "triangle-variant": (3, 3, lambda b, p: ineq.check_triangle_variant(*b)),
    "planar-difference": (2, 2, lambda b, p: ineq.check_planar_difference(*b)),
    "asymmetry": (2, 2, lambda b, p: ineq.check_asymmetry(*b)),
    "delta-increment": (3, 3, lambda b, p: ineq.check_delta_increment(*b)),
    "projection-ball": (1, 1, lambda b, p: ineq.check_projection_ball(
        b[0], int(p.get("axis", 0)), int(p.get("level", 6)))),
    "zonoid-ellipsoid": (2, 2, lambda b, p: ineq.check_zonoid_ellipsoid(
        b[0], b[1], int(p.get("level", 6)))),
    "interval-case": (1, 1, _interval_case),
}


def run_check(inequality: str, bodies: list, params: dict | None = None) -> ineq.InequalityReport:
    if inequality not in CHECKS:
        raise ValueError(f"unknown inequality {inequality!r}; known: {', '.join(sorted(CHECKS))}")
    exact, least, runner = CHECKS[inequality]
    if exact is not None:
        _need(bodies, exact, inequality)
    else:
        _at_least(bodies, least, inequality)
    return runner(list(bodies), dict(params or {}))


# ---------------------------------------------------------------------------
# sweeps

@dataclass(frozen=True)
class SweepConfig:
    inequality: str
    dim: int
    samples: int
    generator: str = "random-polytope"
    seed: int = 0
    workers: int = 1
    bodies: int | None = None
    params: dict = field(default_factory=dict)

    def validate(self):
        if self.inequality not in CHECKS:
            raise ValueError(f"unknown inequality {self.inequality!r}")
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}")
        if not 1 <= self.dim <= 4:
            raise ValueError("dim must lie in 1..4")
        if self.samples < 0 or self.workers < 1:
            raise ValueError("samples must be >= 0 and workers >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def body_count(self) -> int:
        exact, least, _ = CHECKS[self.inequality]
        if self.bodies is not None:
            return self.bodies
        return exact if exact is not None else max(least, 3)

    def to_json(self) -> dict:
        return {"inequality": self.inequality, "dim": self.dim, "samples": self.samples,
                "generator": self.generator, "seed": self.seed, "workers": self.workers,
                "bodies": self.body_count(), "params": self.params}


def _with_origin(U: BoxUnion) -> BoxUnion:
    zero = tuple(Fraction(0) for _ in range(U.dim))
    return BoxUnion(list(U.boxes) + [(zero, zero)], U.dim)


def _draw(cfg: SweepConfig, rng) -> tuple[list, int]:
    n, k, gen = cfg.dim, cfg.body_count(), cfg.generator
    redraws = 0
    bodies = []
    if cfg.inequality == "delta-increment":
        for i in range(k):
            U, _ = random_boxunion(rng, n)
            bodies.append(U if i == 0 else _with_origin(U))
        return bodies, 0
    if cfg.inequality == "zonoid-ellipsoid":
        K, r1 = random_body(rng, n, gen)
        Z, r2 = random_zonotope(rng, n)
        return [K, Z], r1 + r2
    for _ in range(k):
        body, r = random_body(rng, n, gen)
        bodies.append(body)
        redraws += r
    return bodies, redraws


def decimal12(x) -> str:
    """12 significant digits of a rational."""
    if x is None:
        return ""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 12
        return format(Decimal(x.numerator) / Decimal(x.denominator), "g")


def run_sample(cfg: SweepConfig, index: int) -> dict:
    rng = sample_rng(cfg.seed, index)
    bodies, redraws = _draw(cfg, rng)
    rep = run_check(cfg.inequality, bodies, cfg.params)
    return {"sample": index, "report": rep, "redraws": redraws}


def _run_chunk(args) -> list[dict]:
    cfg, lo, hi = args
    return [run_sample(cfg, i) for i in range(lo, hi)]


CSV_COLUMNS = ("id", "dim", "seed", "sample", "lhs", "rhs", "slack", "ratio", "ratio_decimal",
               "pass")


@dataclass
class AggregateReport:
    config: SweepConfig
    instances: int
    failures: list
    degenerate: list
    max_ratio: Fraction | None
    argmax: dict | None
    redraws: int
    rows: list
    runtime: float = 0.0

    @property
    def all_pass(self) -> bool:
        return not self.failures

    def to_json(self, include_rows: bool = True, include_runtime: bool = True) -> dict:
        out = {
            "config": self.config.to_json(),
            "instances": self.instances,
            "failures": self.failures,
            "degenerate": self.degenerate,
            "max_ratio": encode_number(self.max_ratio),
            "max_ratio_decimal": decimal12(self.max_ratio),
            "argmax": self.argmax,
            "redraws": self.redraws,
        }
        if include_rows:
            out["rows"] = self.rows
        if include_runtime:
            out["runtime_seconds"] = round(self.runtime, 3)
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow([r[c] for c in CSV_COLUMNS])
        return buf.getvalue()


def _row(cfg: SweepConfig, res: dict) -> dict:
    rep = res["report"]
    return {
        "id": rep.inequality_id,
        "dim": rep.dimension,
        "seed": cfg.seed,
        "sample": res["sample"],
        "lhs": encode_number(rep.lhs),
        "rhs": encode_number(rep.rhs),
        "slack": encode_number(rep.slack),
        "ratio": encode_number(rep.ratio) if rep.ratio is not None else "",
        "ratio_decimal": decimal12(rep.ratio),
        "pass": rep.status,
    }


def aggregate(cfg: SweepConfig, results: list[dict], runtime: float = 0.0) -> AggregateReport:
    results = sorted(results, key=lambda r: r["sample"])
    failures, degenerate = [], []
    best = None
    for res in results:
        rep = res["report"]
        if rep.degenerate:
            degenerate.append(res["sample"])
        elif not rep.passed:
            failures.append({"sample": res["sample"], "slack": encode_number(rep.slack)})
        if rep.ratio is not None and (best is None or rep.ratio > best["report"].ratio):
            best = res
    argmax = None
    if best is not None:
        argmax = {"sample": best["sample"], "bodies": list(best["report"].bodies)}
    return AggregateReport(
        config=cfg,
        instances=len(results),
        failures=failures,
        degenerate=degenerate,
        max_ratio=None if best is None else best["report"].ratio,
        argmax=argmax,
        redraws=sum(r["redraws"] for r in results),
        rows=[_row(cfg, r) for r in results],
        runtime=runtime,
    )


def run_sweep(cfg: SweepConfig) -> AggregateReport:
    """Evaluate ``cfg.samples`` instances, in a process pool when ``workers > 1``."""
    cfg.validate()
    start = time.perf_counter()
    if cfg.workers == 1 or cfg.samples < 2:
        results = [run_sample(cfg, i) for i in range(cfg.samples)]
    else:
        step = max(1, cfg.samples // (4 * cfg.workers))
        chunks = [(cfg, lo, min(lo + step, cfg.samples)) for lo in range(0, cfg.samples, step)]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = [r for chunk in pool.map(_run_chunk, chunks) for r in chunk]
    return aggregate(cfg, results, time.perf_counter() - start)
