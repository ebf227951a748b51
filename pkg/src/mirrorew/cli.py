"""Command-line front end: catalog dumps, window/robustness tables, bounds,
mirror construction, detection queries, classification sweeps, pair
verification, and the acceptance selftest.

Exit codes: 0 success, 1 assertion/verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from . import acceptance, analysis, catalog, sepopt
from .graphs import Graph
from .linops import (
    Operator,
    eig_extremes,
    operator_from_json,
    operator_to_json,
)
from .mirror import Witness, classify_operator, compute_mu, mirror_of, spa, mspa


def _rational(value: Fraction | float) -> dict:
    if not isinstance(value, Fraction):
        value = Fraction(value).limit_denominator(10**9)
    return {"exact": f"{value.numerator}/{value.denominator}", "float": float(value)}


def _emit(payload, args) -> None:
    if args.format == "csv":
        rows = payload.get("rows")
        if rows is None:
            raise SystemExit("csv output requires tabular payload")
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
        text = buf.getvalue()
    else:
        text = json.dumps(payload, indent=2, default=str) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _catalog_entry(args):
    entries = catalog.default_catalog()
    if args.case not in entries:
        raise SystemExit(f"unknown case {args.case!r}; see the catalog subcommand")
    return entries[args.case]


def _witness_from_args(args) -> Witness:
    if getattr(args, "input", None):
        with open(args.input) as fh:
            op = operator_from_json(json.load(fh), require_hermitian=True)
        return Witness(op, family="file")
    kind, obj = _catalog_entry(args)
    if kind == "pair":
        return obj.w
    if kind == "witness":
        return obj
    raise SystemExit(f"case {args.case!r} is a state, not a witness")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_catalog(args) -> int:
    entries = catalog.default_catalog()
    manifest = {}
    for key, (kind, obj) in entries.items():
        if kind == "pair":
            manifest[key] = {
                "kind": kind,
                "family": obj.w.family,
                "params": obj.w.params,
                "mu": obj.mu,
                "m_scale": obj.m_scale,
                "w": operator_to_json(obj.w.op),
                "m": operator_to_json(obj.m),
            }
        elif kind == "witness":
            manifest[key] = {
                "kind": kind,
                "family": obj.family,
                "params": obj.params,
                "w": operator_to_json(obj.op),
            }
        else:
            manifest[key] = {
                "kind": kind,
                "family": obj.family,
                "params": obj.params,
                "rho": operator_to_json(obj.op),
            }
    _emit(manifest if args.format == "json" else {"rows": [
        {"id": k, "kind": v["kind"], "family": v["family"]} for k, v in manifest.items()
    ]}, args)
    return 0


def cmd_windows(args) -> int:
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        closed = {
            "canonical": Fraction(1, 2**n - 2),
            "two-measurement": Fraction(3, 2 * (2**n - 2)),
            "alternative": Fraction(1, 2 ** (n - 1)),
        }
        witnesses = {
            "canonical": catalog.canonical_ghz_witness(n).w,
            "two-measurement": catalog.ghz_two_measurement_witness(n).w,
            "alternative": catalog.alternative_ghz_witness(n).w,
        }
        row = {"n": n}
        for key in closed:
            got = compute_mu(witnesses[key], restarts=args.restarts, seed=args.seed)
            row[f"mu_{key}_exact"] = _rational(closed[key])["exact"]
            row[f"mu_{key}_float"] = float(closed[key])
            row[f"mu_{key}_sepopt"] = got
            row[f"mu_{key}_delta"] = got - float(closed[key])
        rows.append(row)
    _emit({"rows": rows}, args)
    return 0


def cmd_robustness(args) -> int:
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        ghz = np.zeros(2**n, dtype=complex)
        ghz[0] = ghz[-1] = 1 / np.sqrt(2)
        rho = np.outer(ghz, ghz.conj())
        closed = {
            "canonical": Fraction(-1, 2**n - 2),
            "alternative": Fraction(-1, (n - 1) * 2**n),
            "two-measurement": Fraction(-1, 2 * (2**n - 2)),
        }
        witnesses = {
            "canonical": catalog.canonical_ghz_witness(n).w,
            "alternative": catalog.alternative_ghz_witness(n).w,
            "two-measurement": catalog.ghz_two_measurement_witness(n).w,
        }
        row = {"n": n}
        for key in closed:
            direct = float(np.real(np.sum(witnesses[key].op.data.T * rho)))
            row[f"{key}_exact"] = _rational(closed[key])["exact"]
            row[f"{key}_float"] = float(closed[key])
            row[f"{key}_trace"] = direct
        rows.append(row)
    _emit({"rows": rows}, args)
    return 0


def cmd_bounds(args) -> int:
    w = _witness_from_args(args)
    report = sepopt.separable_bounds(w.op, restarts=args.restarts, seed=args.seed)
    _emit(
        {
            "family": w.family,
            "params": w.params,
            "lower": report.lower,
            "upper": report.upper,
            "restarts_used": report.restarts_used,
            "converged_basins": report.converged_basins,
            "seed": report.seed,
        },
        args,
    )
    return 0


def cmd_mirror(args) -> int:
    w = _witness_from_args(args)
    mu = args.mu if args.mu is not None else compute_mu(
        w, restarts=args.restarts, seed=args.seed
    )
    pair = mirror_of(w, mu, restarts=args.restarts, seed=args.seed)
    _emit(
        {
            "family": w.family,
            "params": w.params,
            "mu": pair.mu,
            "window": [0.0, pair.mu],
            "classification": pair.m_class,
            "m": operator_to_json(pair.m),
        },
        args,
    )
    return 0


def cmd_spa(args) -> int:
    w = _witness_from_args(args)
    _, p = spa(w.op)
    _, q = mspa(w.op)
    lam_min, lam_max = eig_extremes(w.op)
    _emit(
        {
            "family": w.family,
            "params": w.params,
            "p": p,
            "q": q,
            "lambda_min": lam_min,
            "lambda_max": lam_max,
        },
        args,
    )
    return 0


def cmd_detect(args) -> int:
    entries = catalog.default_catalog()
    if args.witness not in entries or args.state not in entries:
        raise SystemExit("unknown witness or state id; see the catalog subcommand")
    wkind, wobj = entries[args.witness]
    skind, sobj = entries[args.state]
    if skind != "state":
        raise SystemExit(f"{args.state!r} is not a state")
    target = wobj if wkind == "pair" else wobj
    verdict = analysis.detect(target, sobj)
    _emit(
        {
            "witness": args.witness,
            "state": args.state,
            "value": verdict.value,
            "bound_violated": verdict.bound_violated,
        },
        args,
    )
    return 0


def cmd_classify(args) -> int:
    samples = [float(s) for s in args.samples]
    points = analysis.classify_mirror_family(
        args.family, samples, restarts=args.restarts, seed=args.seed
    )
    rows = [
        {
            "param": pt.param,
            "a": pt.a,
            "mu": pt.mu,
            "lambda_min_M": pt.lambda_min_m,
            "tier": pt.tier,
        }
        for pt in points
    ]
    _emit({"family": args.family, "rows": rows}, args)
    return 0


def _verify_pair_case(case: str, args) -> list[tuple[str, bool, str]]:
    checks = []

    def add(name, cond, info=""):
        checks.append((name, bool(cond), info))

    if case == "example1":
        pair = catalog.bell_pair_witness("example1")
        add("identity", pair.residual() <= 1e-12)
        add("m_classification",
            classify_operator(pair.m, args.restarts, args.seed) == "witness")
    elif case == "example2":
        pair = catalog.bell_pair_witness("example2")
        add("identity", pair.residual() <= 1e-12)
        add("m_positive", classify_operator(pair.m, args.restarts, args.seed) == "positive")
    elif case.startswith("ghz-alt:"):
        n = int(case.split(":")[1])
        pair = catalog.alternative_ghz_witness(n)
        add("identity", pair.residual() <= 1e-12)
        ghz = np.zeros(2**n, dtype=complex)
        ghz[0] = ghz[-1] = 1 / np.sqrt(2)
        val = float(np.real(np.sum(pair.w.op.data.T * np.outer(ghz, ghz.conj()))))
        add("ghz_value", abs(val + 1 / ((n - 1) * 2**n)) <= 1e-12, f"{val}")
    elif case.startswith("graph:"):
        with open(case.split(":", 1)[1]) as fh:
            g = Graph.from_json(json.load(fh))
        pair = catalog.graph_witness(g)
        add("identity", pair.residual() <= 1e-12)
        from .catalog import graph_mirror_unitary

        u = graph_mirror_unitary(g)
        add("lu_relation",
            float(np.max(np.abs(u.data @ pair.w.op.data @ u.data.conj().T - pair.m.data)))
            <= 1e-10)
    elif case.startswith("w3q:"):
        bits = tuple(int(b) for b in case.split(":")[1])
        pair = catalog.w3q_pair(*bits)
        add("identity", pair.residual() <= 1e-12)
        spec = catalog.rho_bc(2.0, 0.5)
        r = analysis.rijk([1, 1, 1, 2.0], [1, 1, 1, 0.5], [-1, -1, 1, -1])
        got = analysis.expectation_via_coeffs(*bits, r)
        direct = float(np.real(np.sum(pair.w.op.data.T * spec.op.data)))
        add("coefficient_formula", abs(got - direct) <= 1e-12, f"{direct}")
    elif case == "pair33":
        p33 = catalog.pair33()
        add("identity", p33.pair.residual() <= 1e-12)
        tw = float(np.real(np.sum(p33.pair.w.op.data.T * p33.rho_w.op.data)))
        tm = float(np.real(np.sum(p33.pair.m.data.T * p33.rho_m.op.data)))
        add("trace_w", abs(tw + 0.4) <= 1e-12, f"{tw}")
        add("trace_m", abs(tm + 0.4) <= 1e-12, f"{tm}")
        add("rho_w_ppt", analysis.is_ppt_all(p33.rho_w))
        add("rho_m_ppt", analysis.is_ppt_all(p33.rho_m))
        add("lu_relation", analysis.lu_equivalent_by(
            p33.pair.w.op, Operator(p33.pair.m.data, (3, 3)),
            [p33.unitary, p33.unitary.conj()]))
    elif case.startswith(("class1:", "class2:")):
        cls = "I" if case.startswith("class1") else "II"
        theta = float(case.split(":")[1])
        w = catalog.wabcd_class(cls, theta)
        a, b, c, d = (w.params[k] for k in "abcd")
        add("sum", abs(a + b + c + d - 3) <= 1e-12)
        add("squares", abs(a**2 + b**2 + c**2 + d**2 - 3) <= 1e-12)
        add("cross", abs(a * c + b * d - 1) <= 1e-12)
        want = (2.0, 1.0) if cls == "I" else (1.0, 2.0)
        add("class_sums", abs(a + c - want[0]) <= 1e-12 and abs(b + d - want[1]) <= 1e-12)
    else:
        raise SystemExit(f"unknown case {case!r}")
    return checks


def cmd_verify_pair(args) -> int:
    checks = _verify_pair_case(args.case, args)
    payload = {
        "case": args.case,
        "checks": [{"name": n, "passed": p, "info": i} for n, p, i in checks],
        "passed": all(p for _, p, _ in checks),
    }
    _emit(payload, args)
    return 0 if payload["passed"] else 1


def cmd_selftest(args) -> int:
    cfg = acceptance.RunConfig(seed=args.seed, restarts=args.restarts, quick=args.quick)
    results = acceptance.run_all(cfg)
    payload = {
        "criteria": [
            {
                "number": r.number,
                "name": r.name,
                "passed": r.passed,
                "skipped": r.skipped,
            }
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    for r in results:
        status = "SKIP" if r.skipped else ("PASS" if r.passed else "FAIL")
        sys.stderr.write(f"[{status}] criterion {r.number}: {r.name}\n")
    _emit(payload, args)
    return 0 if payload["passed"] else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mirrorew",
        description="Mirrored entanglement witnesses: construction, windows, detection.",
    )
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--restarts", type=int, default=64)
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--out", default=None)
    # accept the global flags after the subcommand as well
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--restarts", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="dump every family at default parameters",
                   parents=[common])

    p = sub.add_parser("windows", help="GHZ window table: closed form vs seesaw",
                       parents=[common])
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=5)

    p = sub.add_parser("robustness", help="GHZ expectation table",
                       parents=[common])
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=6)

    for name, helptext in (
        ("bounds", "separable bounds of a witness"),
        ("mirror", "mirror construction and classification"),
        ("spa", "identity-admixture shifts p and q"),
    ):
        p = sub.add_parser(name, help=helptext, parents=[common])
        p.add_argument("--case", default=None, help="catalog id")
        p.add_argument("--input", default=None, help="operator JSON file")
        if name == "mirror":
            p.add_argument("--mu", type=float, default=None)

    p = sub.add_parser("detect", help="witness expectation on a state",
                       parents=[common])
    p.add_argument("--witness", required=True)
    p.add_argument("--state", required=True)

    p = sub.add_parser("classify", help="mirror classification sweep",
                       parents=[common])
    p.add_argument("--family", choices=("choi_phi", "class1", "class2"), required=True)
    p.add_argument("--samples", nargs="+", required=True)

    p = sub.add_parser("verify-pair", help="verify identities of a named pair",
                       parents=[common])
    p.add_argument("case")

    p = sub.add_parser("selftest", help="run the acceptance criteria",
                       parents=[common])
    p.add_argument("--quick", action="store_true", help="skip optimizer-heavy checks")

    return parser


COMMANDS = {
    "catalog": cmd_catalog,
    "windows": cmd_windows,
    "robustness": cmd_robustness,
    "bounds": cmd_bounds,
    "mirror": cmd_mirror,
    "spa": cmd_spa,
    "detect": cmd_detect,
    "classify": cmd_classify,
    "verify-pair": cmd_verify_pair,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except SystemExit as exc:
        # SystemExit with a message means a bad argument: report usage error
        if isinstance(exc.code, str):
            sys.stderr.write(f"error: {exc.code}\n")
            return 2
        raise
    except (ValueError, FileNotFoundError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
