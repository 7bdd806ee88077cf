"""Command-line front end: solve, exact, generate, render, bench."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import BoundExceeded, CoverageFailure, GuardError, StructureViolation
from .generators import Family, GeneratorSpec
from .geometry import SCALE, RectilinearDomain, parse_domain
from .mobile_guards import (MobileGuardSolution, guard_segments, solve_mhsc, solve_mvsc, verify_certificate,
                            verify_mobile_cover)
from .oracle import exact_mobile, exact_msc, exact_point
from .pixelation import PixelationGraph, pixelate
from .point_guards import solve_point_guards, uncovered_edges
from .render import render_svg
from .slicing import Orientation

SCHEMA = "gg/1"
INTERNAL = (StructureViolation, CoverageFailure, BoundExceeded, AssertionError)

log = logging.getLogger("rguard")


def _q(v) -> str:
    return str(Fraction(v))


@dataclass(frozen=True)
class RunReport:
    input: dict
    m_h: int | None = None
    m_v: int | None = None
    mhsc: dict | None = None
    mvsc: dict | None = None
    point_guards: dict | None = None
    exact: dict | None = None
    verification: dict = field(default_factory=dict)
    timings_ms: dict | None = None
    schema: str = SCHEMA

    def to_json(self) -> str:
        data = {k: v for k, v in asdict(self).items() if v is not None}
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        data = json.loads(text)
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(**data)

    @property
    def ok(self) -> bool:
        return all(self.verification.values())


class _Clock:
    def __init__(self) -> None:
        self.ms: dict[str, float] = {}

    def run(self, name: str, fn, *args):
        t0 = time.perf_counter()
        out = fn(*args)
        self.ms[name] = round((time.perf_counter() - t0) * 1000, 3)
        return out


def _mobile_block(g: PixelationGraph, sol: MobileGuardSolution) -> dict:
    slices = g.hslices if sol.orientation is Orientation.H else g.vslices
    guards = []
    for i, seg in zip(sol.guards, guard_segments(g, sol)):
        r = slices[i].rect
        guards.append({
            "slice": i,
            "rect": [_q(Fraction(c, SCALE)) for c in (r.xmin, r.ymin, r.xmax, r.ymax)],
            "segment": [_q(c) for c in seg],
        })
    return {"size": sol.size, "guards": guards}


def solve_report(d: RectilinearDomain, mhsc: bool = True, mvsc: bool = True, points: bool = True,
                 exact_kind: str | None = None, cap: int | None = None, timing: bool = True) -> RunReport:
    clock = _Clock()
    g = clock.run("pixelate", pixelate, d)
    info = {"n": d.n, "s_h": g.n_h, "s_v": g.n_v, "pixels": g.m}
    out: dict = {"input": info, "verification": {}}
    check = out["verification"]
    need_h = mhsc or points
    need_v = mvsc or points
    sol_h = clock.run("mhsc", solve_mhsc, g) if need_h else None
    sol_v = clock.run("mvsc", solve_mvsc, g) if need_v else None
    if sol_h is not None:
        out["m_h"] = sol_h.size
        check["mhsc_cover"] = verify_mobile_cover(g, sol_h.guards, Orientation.H)
        check["mhsc_certificate"] = verify_certificate(g, sol_h)
        if mhsc:
            out["mhsc"] = _mobile_block(g, sol_h)
    if sol_v is not None:
        out["m_v"] = sol_v.size
        check["mvsc_cover"] = verify_mobile_cover(g, sol_v.guards, Orientation.V)
        check["mvsc_certificate"] = verify_certificate(g, sol_v)
        if mvsc:
            out["mvsc"] = _mobile_block(g, sol_v)
    if points:
        sol = clock.run("point_guards", solve_point_guards, g, False)
        check["point_cover"] = not uncovered_edges(g, sol.guards)
        check["point_bound"] = sol.size <= sol.bound
        out["point_guards"] = {
            "size": sol.size, "bound": sol.bound, "method": sol.method,
            "points": [[_q(x), _q(y)] for x, y in sol.points],
        }
    if exact_kind is not None:
        res = clock.run("exact", run_exact, g, exact_kind, cap)
        out["exact"] = {"kind": exact_kind, "optimum": res.optimum, "explored": res.explored}
    if timing:
        out["timings_ms"] = clock.ms
    return RunReport(**out)


def run_exact(g: PixelationGraph, kind: str, cap: int | None = None):
    if kind == "mhsc":
        return exact_mobile(g, Orientation.H, cap or 24)
    if kind == "mvsc":
        return exact_mobile(g, Orientation.V, cap or 24)
    if kind == "msc":
        return exact_msc(g, cap or 24)
    return exact_point(g, cap or 32)


def _read_domain(path: str) -> RectilinearDomain:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_domain(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------- commands

def cmd_solve(args) -> int:
    d = _read_domain(args.input)
    chosen = args.mhsc or args.mvsc or args.point_guards
    report = solve_report(d, mhsc=args.mhsc or not chosen, mvsc=args.mvsc or not chosen,
                          points=args.point_guards or not chosen, exact_kind=args.exact,
                          cap=args.cap, timing=not args.no_timing)
    _emit(report.to_json(), args.out)
    if not report.ok:
        log.error("verification failed: %s", report.verification)
        return 2
    return 0


def cmd_exact(args) -> int:
    g = pixelate(_read_domain(args.input))
    res = run_exact(g, args.exact, args.cap)
    witness = [list(w) if isinstance(w, tuple) else w for w in res.witness]
    data = {"schema": SCHEMA, "kind": args.exact, "optimum": res.optimum, "explored": res.explored,
            "witness": witness}
    _emit(json.dumps(data, indent=2, sort_keys=True) + "\n", args.out)
    return 0


def cmd_generate(args) -> int:
    d = GeneratorSpec(Family(args.family), args.k, args.seed).build()
    _emit(d.to_json() + "\n", args.out)
    return 0


def cmd_render(args) -> int:
    d = _read_domain(args.input)
    g = pixelate(d)
    segments: list = []
    if not args.no_mobile:
        segments += guard_segments(g, solve_mhsc(g)) + guard_segments(g, solve_mvsc(g))
    points = [] if args.no_points else solve_point_guards(g).points
    _emit(render_svg(d, None if args.no_grid else g, segments, points), args.out)
    return 0


def cmd_bench(args) -> int:
    rows = []
    k = args.min_k
    while k <= args.max_k:
        d = GeneratorSpec(Family(args.family), k, args.seed).build()
        t0 = time.perf_counter()
        g = pixelate(d)
        h, v = solve_mhsc(g), solve_mvsc(g)
        ms = (time.perf_counter() - t0) * 1000
        rows.append({"k": k, "n": d.n, "m_h": h.size, "m_v": v.size, "ms": round(ms, 3)})
        k *= 10
    if args.json:
        text = json.dumps({"schema": SCHEMA, "family": args.family, "rows": rows}, indent=2) + "\n"
    else:
        lines = [f"{'k':>8} {'n':>8} {'m_h':>7} {'m_v':>7} {'ms':>10}"]
        lines += [f"{r['k']:>8} {r['n']:>8} {r['m_h']:>7} {r['m_v']:>7} {r['ms']:>10.1f}" for r in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        # bad arguments are invalid input, which exits with 1
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rguard", description="Mobile and point r-guards for orthogonal polygons.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="mobile guard covers and point guards as a JSON report")
    s.add_argument("input", help="polygon JSON file, or - for stdin")
    s.add_argument("--mhsc", action="store_true", help="horizontal mobile guards")
    s.add_argument("--mvsc", action="store_true", help="vertical mobile guards")
    s.add_argument("--point-guards", action="store_true", help="point guards with the certified bound")
    s.add_argument("--exact", choices=["mhsc", "mvsc", "msc", "point"], help="also run an exact oracle")
    s.add_argument("--cap", type=int, help="size cap for the exact oracle")
    s.add_argument("--no-timing", action="store_true", help="omit timings for byte-stable output")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_solve)

    e = sub.add_parser("exact", help="exponential exact solvers for small inputs")
    e.add_argument("input")
    e.add_argument("--exact", choices=["mhsc", "mvsc", "msc", "point"], default="point")
    e.add_argument("--cap", type=int)
    e.add_argument("-o", "--out")
    e.set_defaults(func=cmd_exact)

    gen = sub.add_parser("generate", help="emit a polygon from a family")
    gen.add_argument("--family", choices=[f.value for f in Family], default="comb")
    gen.add_argument("--k", type=int, default=10, help="teeth, m_V + m_H total, or target vertex count")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--out")
    gen.set_defaults(func=cmd_generate)

    r = sub.add_parser("render", help="draw the domain, slices and guards as SVG")
    r.add_argument("input")
    r.add_argument("--no-grid", action="store_true")
    r.add_argument("--no-mobile", action="store_true")
    r.add_argument("--no-points", action="store_true")
    r.add_argument("-o", "--out")
    r.set_defaults(func=cmd_render)

    b = sub.add_parser("bench", help="time mobile guard solving across sizes")
    b.add_argument("--family", choices=[f.value for f in Family], default="comb")
    b.add_argument("--min-k", type=int, default=10)
    b.add_argument("--max-k", type=int, default=10000)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--json", action="store_true")
    b.add_argument("-o", "--out")
    b.set_defaults(func=cmd_bench)
    return p


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except INTERNAL as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (GuardError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
