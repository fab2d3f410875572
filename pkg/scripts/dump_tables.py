#!/usr/bin/env python3
"""Dump the exact tables and numeric reports to an output directory.

Writes:
  proca_table.csv      the 28x28 quadratic-form table
  isotropic_bases.json the three totally isotropic bases with Gram status
  electroweak.json     the exact breaking report
  mass_scales.json     sector mass scales with reference comparisons
  consistency.json     conversion factor and coupling consistency numbers
"""

import argparse
import csv
import json
import pathlib

from jetgauge import electroweak, pheno, proca
from jetgauge.report import dump_json


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="tables_out")
    ap.add_argument(
        "--constants",
        choices=("stated", "table"),
        default="stated",
        help="stated inputs, or the number tables' computational inputs",
    )
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    k = (
        pheno.Constants.defaults()
        if args.constants == "stated"
        else pheno.Constants.table_inputs()
    )

    with open(out / "proca_table.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        for row in proca.proca_table_ints():
            w.writerow(row)

    bases = {}
    for tag, builder in (
        ("33", proca.isotropic_33_basis),
        ("23", proca.isotropic_23_basis),
        ("13", proca.isotropic_13_basis),
    ):
        basis = builder()
        bases[tag] = {
            "size": len(basis),
            "gram_identically_zero": proca.is_totally_isotropic(basis),
            "vectors": [
                {f"{i},{j}": str(c) for (i, j), c in sorted(v.coeffs.items())}
                for v in basis.vectors
            ],
        }
    (out / "isotropic_bases.json").write_text(dump_json(bases), encoding="utf-8")

    (out / "electroweak.json").write_text(
        dump_json(electroweak.breaking_report()), encoding="utf-8"
    )
    (out / "mass_scales.json").write_text(
        dump_json(pheno.table1(k).to_dict()), encoding="utf-8"
    )
    (out / "consistency.json").write_text(
        dump_json(pheno.consistency(k).to_dict()), encoding="utf-8"
    )
    print(f"wrote 5 files to {out}/")


if __name__ == "__main__":
    main()
