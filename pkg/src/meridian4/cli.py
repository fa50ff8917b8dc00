"""Command line interface.

Subcommands:

``generate``
    Build one surface from parameter flags and export its sample grid
    (csv, obj, or json).

``verify``
    Run a single verification case, from a CaseSpec JSON file or from
    flags, and write the JSON report.

``sweep``
    Run the Cartesian product of parameter lists (``--a 0 0.5 --b 1 2``
    gives four cases) and write an aggregate report.

``theorems``
    Run the built-in suite: all nine theorem cases (CMC with both sign
    branches), the congruence transform, and the hyperplane corollary.

Exit codes: 0 all pass, 1 any verification failure, 2 usage or domain
error (unknown flags, inadmissible parameters).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from . import __version__
from .errors import DomainError
from .export import export_mesh
from .families import MeridianFamily
from .harness import (
    CaseSpec,
    Theorem,
    _build_case,
    run_theorem_suite,
    suite_to_dict,
    verify_case,
)
from .profiles import BranchSigns, ProfileParams

__all__ = ["main", "build_parser"]

_FAMILY_ALIASES = {
    "ma": MeridianFamily.FIRST_TIMELIKE,
    "mb": MeridianFamily.FIRST_SPACELIKE,
    "mpp": MeridianFamily.SECOND,
    "first-timelike": MeridianFamily.FIRST_TIMELIKE,
    "first-spacelike": MeridianFamily.FIRST_SPACELIKE,
    "second": MeridianFamily.SECOND,
}

_DEFAULT_THEOREM = {
    MeridianFamily.FIRST_TIMELIKE: Theorem.MINIMAL_A,
    MeridianFamily.FIRST_SPACELIKE: Theorem.MINIMAL_B,
    MeridianFamily.SECOND: Theorem.MINIMAL_C,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meridian4",
        description="Meridian surfaces in a neutral 4-space: build, export, verify.",
    )
    parser.add_argument("--version", action="version", version=f"meridian4 {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")

    specs = {
        "generate": "build one surface and export its sample grid",
        "verify": "run one verification case and write the JSON report",
        "sweep": "verify the Cartesian product of parameter lists",
        "theorems": "run the built-in theorem suite",
    }
    for name, help_text in specs.items():
        sp = sub.add_parser(name, help=help_text)
        many = name == "sweep"
        _add_common_flags(sp, many=many)
        if name == "verify":
            sp.add_argument(
                "case",
                nargs="?",
                type=Path,
                default=None,
                help="optional CaseSpec JSON file (flags are ignored if given)",
            )
        sp.set_defaults(func=globals()[f"_cmd_{name}"])
    return parser


def _add_common_flags(sp: argparse.ArgumentParser, many: bool = False) -> None:
    nargs = "+" if many else None
    sp.add_argument("--family", choices=sorted(_FAMILY_ALIASES), default=None,
                    help="surface family (ma/mb/mpp or long name)")
    sp.add_argument("--theorem", choices=[t.value for t in Theorem], default=None,
                    help="which statement the case instantiates")
    for pname, doc in (
        ("a", "directrix curvature constant / linear profile coefficient"),
        ("b", "second profile constant"),
        ("c", "first-integral constant; the CMC target <H,H>"),
        ("c0", "additive constant of the meridian's axial component"),
        ("f0", "initial warp value f(u_min) for ODE-built profiles"),
    ):
        sp.add_argument(f"--{pname}", type=float, nargs=nargs, default=None, help=doc)
    sp.add_argument("--u-min", type=float, default=None)
    sp.add_argument("--u-max", type=float, default=None)
    sp.add_argument("--v-min", type=float, default=None)
    sp.add_argument("--v-max", type=float, default=None)
    sp.add_argument("--nu", type=int, default=None, help="grid samples along u (default 21)")
    sp.add_argument("--nv", type=int, default=None, help="grid samples along v (default 21)")
    sp.add_argument("--step", type=float, default=None, help="integrator step (default 1e-3)")
    sp.add_argument("--branch-signs", default="++++",
                    help="sign string, order f g phi rhs; use --branch-signs=-+... for leading '-'")
    sp.add_argument("--tol-h", type=float, default=None, dest="tol_h",
                    help="tolerance on FD mean-curvature components (default 1e-5)")
    sp.add_argument("--seed", type=int, default=None, help="seed for interior sample points")
    sp.add_argument("--out", type=Path, default=None, help="mesh output path (generate)")
    sp.add_argument("--report", type=Path, default=None, help="JSON report path")
    sp.add_argument("--format", choices=("csv", "obj", "json"), default=None,
                    help="mesh format (default: inferred from --out suffix)")


def _resolve_theorem(args, parser) -> Theorem:
    family = _FAMILY_ALIASES[args.family] if args.family else None
    theorem = Theorem(args.theorem) if args.theorem else None
    if theorem is None:
        if family is None:
            parser.error("one of --theorem or --family is required")
        theorem = _DEFAULT_THEOREM[family]
    elif family is not None and theorem.family is not None and theorem.family is not family:
        parser.error(
            f"--family {args.family} does not match --theorem {theorem.value} "
            f"(expects {theorem.family.value})"
        )
    return theorem


def _span(parser, lo, hi, name) -> tuple[float, float] | None:
    if (lo is None) != (hi is None):
        parser.error(f"--{name}-min and --{name}-max must be given together")
    if lo is None:
        return None
    if not lo < hi:
        parser.error(f"--{name}-min must be below --{name}-max")
    return (lo, hi)


def _spec_from_flags(args, parser, **param_overrides) -> CaseSpec:
    theorem = _resolve_theorem(args, parser)
    values = {k: getattr(args, k) for k in ("a", "b", "c", "c0")}
    values.update({k: v for k, v in param_overrides.items() if k != "f0"})
    params = ProfileParams(
        branch=BranchSigns.from_string(args.branch_signs),
        **{k: (0.0 if v is None else float(v)) for k, v in values.items()},
    )
    f0 = param_overrides.get("f0", args.f0)
    kwargs = {}
    if args.nu is not None:
        kwargs["nu"] = args.nu
    if args.nv is not None:
        kwargs["nv"] = args.nv
    if args.step is not None:
        kwargs["step"] = args.step
    if args.seed is not None:
        kwargs["seed"] = args.seed
    if args.tol_h is not None:
        kwargs["tol_H"] = args.tol_h
    return CaseSpec(
        theorem=theorem,
        params=params,
        f0=None if f0 is None else float(f0),
        u_span=_span(parser, args.u_min, args.u_max, "u"),
        v_span=_span(parser, args.v_min, args.v_max, "v"),
        **kwargs,
    )


def _write_json(doc: dict, path: Path | None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_generate(args, parser) -> int:
    if args.out is None:
        parser.error("generate requires --out")
    spec = _spec_from_flags(args, parser)
    surface, _, _ = _build_case(spec)
    import numpy as np

    us = np.linspace(*surface.u_span, spec.nu)
    vs = np.linspace(*surface.v_span, spec.nv)
    fmt = args.format or {".csv": "csv", ".obj": "obj", ".json": "json"}.get(
        args.out.suffix.lower(), "csv"
    )
    path = export_mesh(surface, us, vs, args.out, fmt=fmt)
    print(f"wrote {spec.nu}x{spec.nv} {fmt} mesh to {path}")
    return 0


def _cmd_verify(args, parser) -> int:
    if args.case is not None:
        spec = CaseSpec.from_dict(json.loads(args.case.read_text()))
    else:
        spec = _spec_from_flags(args, parser)
    report = verify_case(spec)
    if args.report is None:
        sys.stdout.write(report.to_json())
    else:
        args.report.write_text(report.to_json())
        print(f"{report.status}: report written to {args.report}")
    return 0 if report.status == "pass" else 1


def _cmd_sweep(args, parser) -> int:
    theorem = _resolve_theorem(args, parser)
    lists = {
        k: (getattr(args, k) if getattr(args, k) is not None else [None])
        for k in ("a", "b", "c", "c0", "f0")
    }
    entries = []
    counts = {"pass": 0, "fail": 0, "domain-truncated": 0, "domain-error": 0}
    for a, b, c, c0, f0 in itertools.product(
        lists["a"], lists["b"], lists["c"], lists["c0"], lists["f0"]
    ):
        overrides = {
            k: v
            for k, v in (("a", a), ("b", b), ("c", c), ("c0", c0), ("f0", f0))
            if v is not None
        }
        try:
            spec = _spec_from_flags(args, parser, **overrides)
            report = verify_case(spec)
        except (DomainError, ValueError) as exc:
            counts["domain-error"] += 1
            entries.append({"params": overrides, "status": "domain-error", "error": str(exc)})
            continue
        counts[report.status] += 1
        entries.append(report.to_dict())
    total = sum(counts.values())
    doc = {
        "schema": 1,
        "tool_version": __version__,
        "theorem": theorem.value,
        "cases": entries,
        "counts": counts,
        "all_pass": counts["pass"] == total,
    }
    _write_json(doc, args.report)
    if args.report is not None:
        print(f"{counts['pass']}/{total} pass; report written to {args.report}")
    if counts["domain-error"]:
        return 2
    return 0 if counts["pass"] == total else 1


def _cmd_theorems(args, parser) -> int:
    overrides = {}
    if args.nu is not None:
        overrides["nu"] = args.nu
    if args.nv is not None:
        overrides["nv"] = args.nv
    if args.step is not None:
        overrides["step"] = args.step
    if args.seed is not None:
        overrides["seed"] = args.seed
    reports, corollary = run_theorem_suite(**overrides)
    for r in reports:
        p = r.case["params"]
        tag = r.case["theorem"]
        detail = f"a={p['a']:g} b={p['b']:g} c={p['c']:g}"
        print(f"{tag:<18} {r.status:<16} {detail}")
    ranks = f"minimal ranks {corollary['minimal_ranks']}, quasi ranks {corollary['quasi_ranks']}"
    print(f"{corollary['name']:<18} {'pass' if corollary['ok'] else 'fail':<16} {ranks}")
    doc = suite_to_dict(reports, corollary)
    if args.report is not None:
        _write_json(doc, args.report)
        print(f"report written to {args.report}")
    print(f"suite: {'pass' if doc['all_pass'] else 'fail'} ({len(reports)} cases)")
    return 0 if doc["all_pass"] else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (DomainError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"meridian4: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
