"""Command-line front end: verification suites, tables, and simulations."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import dynamics, electroweak, jetspace, octonion, pheno, proca, verify
from .octonion import ImOctonion
from .refdata import MODE_CENSUS_REFERENCE
from .report import dump_json, fmt_float


def _emit(text: str, args) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _constants(args) -> pheno.Constants:
    if getattr(args, "constants", None):
        base = pheno.Constants.defaults()
        with open(args.constants, "r", encoding="utf-8") as fh:
            return base.with_overrides(**json.load(fh))
    return pheno.Constants.defaults()


def cmd_signature(args) -> int:
    p, q = jetspace.signature(args.axes, args.order)
    if args.format == "json":
        payload = {"axes": args.axes, "order": args.order, "p": p, "q": q}
        if args.list:
            basis = jetspace.enumerate_basis(args.axes, args.order)
            payload["entries"] = [
                {"monomial": m.label(args.axes), "timelike": jetspace.is_timelike(m)}
                for m in basis.entries
            ]
        _emit(dump_json(payload, args.full_precision), args)
    else:
        lines = [f"({p}, {q})"]
        if args.list:
            basis = jetspace.enumerate_basis(args.axes, args.order)
            for m in basis.entries:
                tag = "-" if jetspace.is_timelike(m) else "+"
                lines.append(f"  d^{m.label(args.axes)}  {tag}")
        _emit("\n".join(lines), args)
    return 0


_INDEX_ORDER_NOTE = (
    "1-based indices: 1-4 first-order block (h=0); 5 second-order scalar "
    "class (h=+1); 6-8 second-order t-mixed classes (h=-1); 9-15 third-order "
    "timelike monomials (h=-1); 16-28 third-order spacelike monomials (h=+1)"
)


def cmd_proca_table(args) -> int:
    table = proca.proca_table_ints()
    if args.format == "json":
        _emit(dump_json({"dim": 28, "index_order": _INDEX_ORDER_NOTE, "table": table}), args)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        for row in table:
            w.writerow(row)
        _emit(buf.getvalue().rstrip("\n"), args)
    else:
        width = max(len(str(v)) for row in table for v in row)
        _emit("\n".join(" ".join(f"{v:>{width}}" for v in row) for row in table), args)
    return 0


def _parse_sector(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.replace("(", "").replace(")", "").split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad sector {text!r}; expected e.g. 2,3") from exc
    return a, b


def cmd_census(args) -> int:
    sectors = [args.sector] if args.sector else sorted(MODE_CENSUS_REFERENCE)
    rows = []
    for sector in sectors:
        pos, neg, zero = proca.mode_census(sector)
        ref = MODE_CENSUS_REFERENCE.get(tuple(sector))
        rows.append(
            {
                "sector": list(sector),
                "positive": pos,
                "negative": neg,
                "zero": zero,
                "reference": list(ref) if ref else None,
            }
        )
    flags = proca.flagged_inconsistencies()[:1]
    if args.format == "json":
        _emit(dump_json({"censuses": rows, "flags": flags}), args)
    else:
        lines = []
        for r in rows:
            ref = f"  reference={tuple(r['reference'])}" if r["reference"] else ""
            lines.append(
                f"sector {tuple(r['sector'])}: positive={r['positive']} "
                f"negative={r['negative']} zero={r['zero']}{ref}"
            )
        for f in flags:
            lines.append(f"flagged: {f}")
        _emit("\n".join(lines), args)
    return 0


def cmd_isotropic(args) -> int:
    builders = {
        "33": proca.isotropic_33_basis,
        "23": proca.isotropic_23_basis,
        "13": proca.isotropic_13_basis,
    }
    basis = builders[args.sector]()
    gram_zero = proca.is_totally_isotropic(basis)
    payload = {
        "sector": list(basis.sector),
        "size": len(basis),
        "gram_identically_zero": gram_zero,
        "vectors": [
            {f"{i},{j}": str(c) for (i, j), c in sorted(v.coeffs.items())}
            for v in basis.vectors
        ],
    }
    if args.sector == "23":
        first = proca.u1y_first_order_variation(basis)
        payload["hypercharge_first_order_invariant"] = not any(
            x for row in first for x in row
        )
        payload["hypercharge_finite_rotation_residual_theta_0.7"] = (
            proca.u1y_finite_rotation_residual(basis, 0.7)
        )
    if args.format == "json":
        _emit(dump_json(payload, args.full_precision), args)
    else:
        lines = [
            f"sector {tuple(payload['sector'])}: {payload['size']} vectors, "
            f"gram zero: {gram_zero}"
        ]
        for v in payload["vectors"]:
            lines.append("  " + "  ".join(f"X[{k}]*({c})" for k, c in v.items()))
        _emit("\n".join(lines), args)
    return 0 if gram_zero else 1


def cmd_electroweak(args) -> int:
    payload = electroweak.breaking_report()
    if args.format == "text":
        lines = [f"{k}: {v}" for k, v in payload.items()]
        _emit("\n".join(lines), args)
    else:
        _emit(dump_json(payload, args.full_precision), args)
    return 0


def cmd_octonion(args) -> int:
    from .report import VerificationReport

    rep = VerificationReport()
    verify.suite_octonions(rep.suite("octonion algebra and su(3) reduction"), args.seed)
    text = rep.to_text(args.full_precision) if args.format == "text" else dump_json(
        rep.to_dict(args.full_precision), args.full_precision
    )
    _emit(text, args)
    return rep.exit_code


def _parse_im(text: str) -> ImOctonion:
    text = text.strip()
    if text.startswith("e") and text[1:].isdigit():
        return ImOctonion.unit(int(text[1:]))
    from fractions import Fraction

    parts = [Fraction(t) for t in text.split(",")]
    if len(parts) != 7:
        raise argparse.ArgumentTypeError(
            "expected a unit like e4 or 7 comma-separated rationals"
        )
    return ImOctonion(tuple(parts))


def cmd_su3(args) -> int:
    z = _parse_im(args.fix)
    stab = octonion.stabilizer_su3(z)
    names = [f"A{k}" for k in range(1, 8)] + [f"G{k}" for k in range(1, 8)]
    payload = {
        "fixed_element": [str(c) for c in z.coeffs],
        "dimension": len(stab),
        "basis": [
            {names[i]: str(c) for i, c in enumerate(e.coeffs) if c} for e in stab
        ],
    }
    if args.format == "text":
        lines = [f"stabilizer dimension: {len(stab)}"]
        for row in payload["basis"]:
            lines.append("  " + "  ".join(f"{k}*({c})" for k, c in row.items()))
        _emit("\n".join(lines), args)
    else:
        _emit(dump_json(payload), args)
    return 0


def cmd_pheno(args) -> int:
    k = _constants(args)
    rep = {
        "table1": pheno.table1,
        "consistency": pheno.consistency,
        "predict": pheno.predicted_masses,
    }[args.what](k)
    if args.format == "json":
        _emit(dump_json(rep.to_dict(), args.full_precision), args)
    else:
        lines = [rep.title]
        for e in rep.entries:
            val = fmt_float(e.value, args.full_precision)
            parts = [f"  {e.name:<34s} {val:<14g} {e.unit}"]
            if e.reference is not None:
                parts.append(
                    f" reference={fmt_float(e.reference, args.full_precision):g}"
                    f" dev({e.kind})={e.deviation:.2e} [{e.status}]"
                )
            lines.append("".join(parts))
        for f in rep.flags:
            lines.append(f"  flagged: {f}")
        _emit("\n".join(lines), args)
    return 1 if rep.failures else 0


def _field_from_config(cfg: dict):
    kind = cfg.get("kind")
    params = cfg.get("params", {})
    if kind == "uniform_E":
        f = dynamics.uniform_electric_f(params["E"])
        return lambda x: f
    if kind == "uniform_B":
        f = dynamics.uniform_magnetic_f(params["B"])
        return lambda x: f
    if kind == "grid":
        data = np.load(params["npz"])
        grid = dynamics.GridMetricField(data["g"], data["origin"], float(data["spacing"]))
        return dynamics.grid_field_strength_evaluator(grid)
    raise ValueError(f"unknown field kind {kind!r}")


def cmd_simulate(args) -> int:
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
        f_eval = _field_from_config(cfg["field"])
        pc = cfg["particle"]
        integ = cfg["integrator"]
        out_cfg = cfg["output"]
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"bad simulate config: {exc}", file=sys.stderr)
        return 2
    charge_spec = pc.get("I")
    if charge_spec:
        dim = int(charge_spec["dim"])
        i, j = charge_spec["pair"]
        gen = np.zeros((dim, dim))
        gen[i - 1, j - 1] = 1.0
        gen[j - 1, i - 1] = -1.0
        charge = float(charge_spec["value"]) * gen
        scalar_f = f_eval

        def algebra_f(x, _g=gen, _f=scalar_f):
            return np.asarray(_f(x))[:, :, None, None] * _g[None, None, :, :]

        state = dynamics.ParticleState(pc["x0"], pc["u0"], pc["m"], pc["q"], charge)
        traj = dynamics.integrate_wong(state, algebra_f, integ["dlambda"], integ["steps"])
    else:
        state = dynamics.ParticleState(pc["x0"], pc["u0"], pc["m"], pc["q"])
        traj = dynamics.integrate_lorentz(state, f_eval, integ["dlambda"], integ["steps"])
    path = out_cfg["path"]
    if out_cfg.get("format", "csv") == "json":
        payload = {
            "meta": {k: v for k, v in traj.meta.items()},
            "samples": [
                {"lambda": row[0], "x": row[1:5], "u": row[5:9]} for row in traj.rows()
            ],
        }
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dump_json(payload, args.full_precision))
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["lambda", "x0", "x1", "x2", "x3", "u0", "u1", "u2", "u3"])
            for row in traj.rows():
                w.writerow([repr(float(v)) for v in row])
    print(
        f"integrated {len(traj) - 1} steps ({traj.meta['law']}); "
        f"eta(u,u) drift {traj.meta['eta_drift']:.3e}; wrote {path}"
    )
    return 0


def cmd_verify_all(args) -> int:
    constants = _constants(args)
    rep = verify.build_report(args.seed, constants)
    text = rep.to_text(args.full_precision) if args.format == "text" else dump_json(
        rep.to_dict(args.full_precision), args.full_precision
    )
    _emit(text, args)
    return rep.exit_code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="jetgauge",
        description="Exact verification toolkit for jet-space gauge reductions.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--full-precision", action="store_true")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized property suites")

    p = sub.add_parser("signature", help="jet-space signature (p, q)")
    p.add_argument("--axes", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--list", action="store_true", help="also list the basis")
    common(p)
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("proca-table", help="the 28x28 quadratic-form table")
    common(p, ("text", "csv", "json"))
    p.set_defaults(func=cmd_proca_table)

    p = sub.add_parser("census", help="mode census per sector")
    p.add_argument("--sector", type=_parse_sector, default=None, metavar="A,B")
    common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("isotropic", help="totally isotropic bases and Gram checks")
    p.add_argument("--sector", choices=("33", "23", "13"), default="33")
    common(p)
    p.set_defaults(func=cmd_isotropic)

    p = sub.add_parser("electroweak", help="exact symmetry-breaking report")
    common(p, ("json", "text"))
    p.set_defaults(func=cmd_electroweak)

    p = sub.add_parser("octonion", help="octonion / g2 / su(3) property battery")
    p.add_argument("action", choices=("verify",))
    common(p)
    p.set_defaults(func=cmd_octonion)

    p = sub.add_parser("su3", help="stabilizer subalgebra of an imaginary unit")
    p.add_argument("--fix", default="e4", help="e1..e7 or 7 comma-separated rationals")
    common(p, ("json", "text"))
    p.set_defaults(func=cmd_su3)

    p = sub.add_parser("pheno", help="mass scales, consistency numbers, predictions")
    p.add_argument("what", choices=("table1", "consistency", "predict"))
    p.add_argument("--constants", help="JSON file with constant overrides")
    common(p)
    p.set_defaults(func=cmd_pheno)

    p = sub.add_parser("simulate", help="integrate a trajectory from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--full-precision", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify-all", help="run every exact verification suite")
    p.add_argument("--constants", help="JSON file with constant overrides")
    common(p)
    p.set_defaults(func=cmd_verify_all)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
