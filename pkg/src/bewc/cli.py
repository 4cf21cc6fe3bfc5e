"""Command-line surface.

Subcommands map one-to-one onto the library studies: `code` builds and
inspects base codes, `curve`/`gap` evaluate a single code, `sweep` walks a
family, `search` runs the exhaustive subspace comparison, `ensemble` pits
random codes against a reference, and `simulate` replays the full channel.

Exit codes: 0 success, 1 usage error, 2 guard violation.  All randomness
flows from --seed (default 0x5EC0DE), so identical invocations produce
byte-identical output files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from . import codes, coset, equivocation as eq, experiments
from .codes import CodeError, CodeSpec, GuardError, RandomCodeParams

DEFAULT_SEED = 0x5EC0DE
OUTPUT_DIR_ENV = "BEWC_OUTPUT_DIR"

CURVE_CSV_HEADER = "epsilon,equivocation_bits,equivocation_rate,stderr,ci95_lo,ci95_hi,method"


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _fmt(x: Optional[float]) -> str:
    return "" if x is None else repr(float(x))


def _out_path(path: Optional[str]) -> Optional[Path]:
    if path is None:
        return None
    p = Path(path)
    if p.is_absolute():
        return p
    return Path(os.environ.get(OUTPUT_DIR_ENV, ".")) / p


def _add_code_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=sorted(experiments.FAMILY_BUILDERS))
    p.add_argument("--r", type=int, help="family size parameter (n = 2^r - 1)")
    p.add_argument("--code", metavar="FILE", help="JSON code file")
    p.add_argument("--random", action="store_true", help="Bernoulli random code")
    p.add_argument("--n", type=int)
    p.add_argument("--dim", type=int)
    p.add_argument("--alpha", type=float)


def _resolve_code(args) -> CodeSpec:
    sources = [args.family is not None, args.code is not None, args.random]
    if sum(sources) != 1:
        raise UsageError("specify exactly one code source: --family/--r, --code, or --random")
    if args.family is not None:
        if args.r is None:
            raise UsageError("--family requires --r")
        return experiments.FAMILY_BUILDERS[args.family](args.r)
    if args.code is not None:
        return codes.parse(Path(args.code).read_text())
    if args.n is None or args.dim is None or args.alpha is None:
        raise UsageError("--random requires --n, --dim, and --alpha")
    return codes.random_base(
        RandomCodeParams(n=args.n, dim=args.dim, alpha=args.alpha, seed=args.seed)
    )


def _grid(args) -> list[float]:
    if getattr(args, "eps", None):
        return list(args.eps)
    npts = getattr(args, "grid", None) or 99
    return [round(i / (npts + 1), 12) for i in range(1, npts + 1)]


def _config_echo(args) -> dict:
    # threads and output location cannot affect results, so they stay out of
    # the echo; that keeps output files byte-identical across thread counts.
    skip = {"func", "threads", "output"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _write(path: Optional[Path], text: str) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    print(f"wrote {path}")


def _curve_rows(cv: eq.EquivocationCurve) -> list[str]:
    rows = [CURVE_CSV_HEADER]
    for p in cv.points:
        rows.append(
            ",".join(
                [
                    _fmt(p.eps),
                    _fmt(p.bits),
                    _fmt(p.rate),
                    _fmt(p.stderr),
                    _fmt(p.ci95_lo),
                    _fmt(p.ci95_hi),
                    cv.method,
                ]
            )
        )
    return rows


def _curve_json(cv: eq.EquivocationCurve, args) -> str:
    return json.dumps(
        {
            "config": _config_echo(args),
            "code": cv.code_name,
            "method": cv.method,
            "points": [asdict(p) for p in cv.points],
        },
        indent=2,
    ) + "\n"


# ---------------------------------------------------------------- commands


def cmd_code(args) -> int:
    if args.action == "make":
        code = _resolve_code(args)
        doc = codes.serialize(code)
        path = _out_path(args.output) or Path(f"{code.name}.json")
        _write(path, doc)
        print(f"{code.name}: n={code.n} dim={code.dim} k={code.k} R={code.rate:.6f}")
        return 0
    if args.action == "show":
        if args.file is not None:
            code = codes.parse(Path(args.file).read_text())
        else:
            code = _resolve_code(args)
        print(f"{code.name}: n={code.n} dim={code.dim} k={code.k} R={code.rate:.6f}")
        print("G =")
        for row in code.G.row_strings():
            print(f"  {row}")
        if code.n <= 16:
            print(coset.codebook(code).format_table())
        return 0
    # validate
    try:
        code = codes.parse(Path(args.file).read_text())
    except CodeError as e:
        print(f"invalid: {e}", file=sys.stderr)
        return 1
    print(f"valid: {code.name} n={code.n} dim={code.dim} k={code.k}")
    return 0


def cmd_curve(args) -> int:
    code = _resolve_code(args)
    cv = eq.curve(code, _grid(args), method=args.method, trials=args.trials, seed=args.seed)
    if args.format == "json":
        text = _curve_json(cv, args)
    else:
        text = "\n".join(_curve_rows(cv)) + "\n"
    _write(_out_path(args.output), text)
    gap_pt = min(cv.points, key=lambda p: abs(p.eps - code.rate))
    print(
        f"{code.name} ({cv.method}): {len(cv.points)} points, "
        f"rate@eps={gap_pt.eps:g} = {gap_pt.rate:.6f}"
    )
    return 0


def cmd_gap(args) -> int:
    code = _resolve_code(args)
    rep = eq.achievability_gap(code, method=args.method, trials=args.trials, seed=args.seed)
    payload = {
        "config": _config_echo(args),
        "code": rep.code_name,
        "R": rep.rate,
        "equivocation_rate_at_R": rep.equivocation_rate_at_r,
        "Ag": rep.gap,
        "method": rep.method,
    }
    if rep.estimate is not None:
        payload["estimate"] = asdict(rep.estimate)
    _write(_out_path(args.output), json.dumps(payload, indent=2) + "\n")
    print(f"Ag = {rep.gap:.4f}")
    return 0


def cmd_sweep(args) -> int:
    reports = experiments.family_sweep(
        args.family, args.rs, method=args.method, trials=args.trials, seed=args.seed
    )
    lines = ["blocklength,R,Ag,method"]
    for r, rep in zip(args.rs, reports):
        n = (1 << r) - 1
        lines.append(f"{n},{_fmt(rep.rate)},{_fmt(rep.gap)},{rep.method}")
        print(f"{args.family} n={n}: R={rep.rate:.4f} Ag={rep.gap:.4f} ({rep.method})")
    if args.format == "json":
        text = json.dumps(
            {
                "config": _config_echo(args),
                "rows": [
                    {"blocklength": (1 << r) - 1, "R": rep.rate, "Ag": rep.gap, "method": rep.method}
                    for r, rep in zip(args.rs, reports)
                ],
            },
            indent=2,
        ) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    _write(_out_path(args.output), text)
    return 0


def cmd_search(args) -> int:
    res = experiments.exhaustive_search(args.n, args.dim, _grid(args))
    best = res.ranking[0]
    gen = res.generators[best]
    print(f"examined {res.count} ({args.n},{args.dim}) codes")
    print(f"min Ag = {res.gaps[best]:.4f} at generator {' '.join(gen.row_strings())}")
    if args.format == "json":
        text = json.dumps(
            {
                "config": _config_echo(args),
                "count": res.count,
                "min_Ag": float(res.gaps[best]),
                "best_generator": gen.row_strings(),
                "ranking_top10": [
                    {
                        "generator": res.generators[i].row_strings(),
                        "Ag": float(res.gaps[i]),
                    }
                    for i in res.ranking[:10]
                ],
            },
            indent=2,
        ) + "\n"
    else:
        lines = ["rank,Ag,generator"]
        for pos, i in enumerate(res.ranking):
            lines.append(f"{pos},{_fmt(float(res.gaps[i]))},{' '.join(res.generators[i].row_strings())}")
        text = "\n".join(lines) + "\n"
    _write(_out_path(args.output), text)
    return 0


def cmd_ensemble(args) -> int:
    if args.reference_family is not None:
        reference = experiments.FAMILY_BUILDERS[args.reference_family](args.reference_r)
    elif args.reference_file is not None:
        reference = codes.parse(Path(args.reference_file).read_text())
    else:
        raise UsageError("need --reference-family/--reference-r or --reference-file")
    rep = experiments.ensemble_study(
        n=args.n,
        dim=args.dim,
        alpha=args.alpha,
        num_codes=args.codes,
        grid=_grid(args),
        trials=args.trials,
        seed=args.seed,
        reference=reference,
    )
    lines = ["epsilon,mean_rate,best_rate,worst_rate,ci95_halfwidth,reference_rate"]
    ref_rates = rep.reference_curve.rates()
    for j, epsv in enumerate(rep.grid):
        lines.append(
            ",".join(
                [
                    _fmt(epsv),
                    _fmt(float(rep.mean_rates[j])),
                    _fmt(float(rep.best_rates[j])),
                    _fmt(float(rep.worst_rates[j])),
                    _fmt(float(rep.ci95_halfwidth[j])),
                    _fmt(float(ref_rates[j])),
                ]
            )
        )
    if args.format == "json":
        text = json.dumps(
            {
                "config": _config_echo(args),
                "reference": reference.name,
                "points": [
                    {
                        "epsilon": epsv,
                        "mean_rate": float(rep.mean_rates[j]),
                        "best_rate": float(rep.best_rates[j]),
                        "worst_rate": float(rep.worst_rates[j]),
                        "ci95_halfwidth": float(rep.ci95_halfwidth[j]),
                        "reference_rate": float(ref_rates[j]),
                    }
                    for j, epsv in enumerate(rep.grid)
                ],
            },
            indent=2,
        ) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    _write(_out_path(args.output), text)
    mid = len(rep.grid) // 2
    print(
        f"ensemble of {args.codes} random ({args.n},{args.dim}) codes vs {reference.name}: "
        f"mean rate @eps={rep.grid[mid]:g} = {rep.mean_rates[mid]:.4f}, "
        f"reference = {ref_rates[mid]:.4f}"
    )
    return 0


def cmd_simulate(args) -> int:
    code = _resolve_code(args)
    rep = experiments.simulate_session(code, args.eps, args.trials, args.seed)
    payload = {"config": _config_echo(args), **asdict(rep)}
    _write(_out_path(args.output), json.dumps(payload, indent=2) + "\n")
    print(
        f"{code.name} @eps={args.eps:g}: bob_success={rep.bob_success_rate:.4f} "
        f"mean_equivocation={rep.mean_equivocation:.4f} bits (stderr {rep.stderr:.4f})"
    )
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> _Parser:
    p = _Parser(prog="bewc", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, grid=False, mc=True):
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--threads", type=int, default=1,
                        help="parallelism cap; results do not depend on it")
        sp.add_argument("-o", "--output", help="output file (relative paths land in "
                        f"${OUTPUT_DIR_ENV} when set)")
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        if grid:
            sp.add_argument("--grid", type=int, help="number of uniform eps points (default 99)")
            sp.add_argument("--eps", type=float, nargs="+", help="explicit eps values")
        if mc:
            sp.add_argument("--trials", type=int, default=eq.DEFAULT_MC_TRIALS)

    pc = sub.add_parser("code", help="make / show / validate base codes")
    pc.add_argument("action", choices=["make", "show", "validate"])
    pc.add_argument("file", nargs="?", help="code file for show/validate")
    _add_code_source(pc)
    common(pc, grid=False, mc=False)
    pc.set_defaults(func=cmd_code)

    pcv = sub.add_parser("curve", help="equivocation rate curve for one code")
    _add_code_source(pcv)
    pcv.add_argument("--method", choices=["exact", "mc", "auto"], default="auto")
    common(pcv, grid=True)
    pcv.set_defaults(func=cmd_curve)

    pg = sub.add_parser("gap", help="achievability gap at eps = R")
    _add_code_source(pg)
    pg.add_argument("--method", choices=["exact", "mc", "auto"], default="auto")
    common(pg)
    pg.set_defaults(func=cmd_gap)

    ps = sub.add_parser("sweep", help="gap table across a code family")
    ps.add_argument("--family", choices=sorted(experiments.FAMILY_BUILDERS), required=True)
    ps.add_argument("--rs", type=int, nargs="+", default=[3, 4, 5, 6])
    ps.add_argument("--method", choices=["exact", "mc", "auto"], default="auto")
    common(ps)
    ps.set_defaults(func=cmd_sweep)

    px = sub.add_parser("search", help="exhaustive comparison of all (n,dim) codes")
    px.add_argument("--n", type=int, required=True)
    px.add_argument("--dim", type=int, required=True)
    common(px, grid=True, mc=False)
    px.set_defaults(func=cmd_search)

    pe = sub.add_parser("ensemble", help="random codes vs a reference code")
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--dim", type=int, required=True)
    pe.add_argument("--alpha", type=float, required=True)
    pe.add_argument("--codes", type=int, default=10)
    pe.add_argument("--reference-family", choices=sorted(experiments.FAMILY_BUILDERS))
    pe.add_argument("--reference-r", type=int)
    pe.add_argument("--reference-file")
    common(pe, grid=True)
    pe.set_defaults(func=cmd_ensemble)

    psim = sub.add_parser("simulate", help="end-to-end channel session")
    _add_code_source(psim)
    psim.add_argument("--eps", type=float, required=True)
    common(psim)
    psim.set_defaults(func=cmd_simulate)

    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (CodeError, ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except GuardError as e:
        print(f"guard violation: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
