"""Regenerate the limit-theorem sweep data as CSV files.

Three families are swept and written to an output directory:

  cesaro.csv      scaled Cesaro deviations N * |avg - limit| for the
                  plain and sine-weighted averages, k = 1..4, over the
                  named corpus (resonant (graph, k) pairs are skipped)
  average_nm.csv  scaled residuals of the averaged reduced-cycle counts
                  on the Ramanujan members of the corpus
  cusp.csv        scaled averages of the normalized cusp coefficients
                  of X^{13,5}

Every row carries the proof-side reference constant so band ratios can
be recomputed downstream.  Run from the repository root:

    python3 scripts/limit_sweep.py --out-dir out
"""

from __future__ import annotations

import argparse
import csv
import os
import sys

from iharalab.errors import NotRamanujan
from iharalab.graphs import certify_regular, named_graph
from iharalab.limits import (
    angle_condition,
    average_cusp,
    average_nm_sweep,
    cesaro_a,
    cesaro_s,
    normalized_cusp_terms,
    require_ramanujan,
)
from iharalab.lps import build_lps
from iharalab.spectral import eigendecompose

NAMED = ("K3", "K4", "K33", "PETERSEN", "CUBE")


def write_cesaro(path: str, horizons: list[int], k_max: int) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["graph", "k", "variant", "N", "deviation", "scaled", "reference"])
        for name in NAMED:
            g = named_graph(name)
            sd = eigendecompose(g, certify_regular(g))
            for k in range(1, k_max + 1):
                if not angle_condition(sd, k):
                    continue
                for variant, run in (("a", cesaro_a), ("s", cesaro_s)):
                    rep = run(sd, k, horizons)
                    for n_val, dev, scaled in zip(
                        rep.N_values, rep.deviations, rep.scaled_deviations
                    ):
                        w.writerow([name, k, variant, n_val, repr(dev), repr(scaled),
                                    repr(rep.reference_constant)])


def write_average_nm(path: str, horizons: list[int]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["graph", "N", "lhs", "main_terms", "residual", "scaled", "reference"])
        for name in NAMED:
            g = named_graph(name)
            cert = certify_regular(g)
            sd = eigendecompose(g, cert)
            try:
                require_ramanujan(sd)
            except NotRamanujan:
                continue
            if cert.q < 2:
                continue
            for rep in average_nm_sweep(g, cert, sd, horizons):
                w.writerow([name, rep.N, repr(rep.lhs), repr(rep.main_terms),
                            repr(rep.residual), repr(rep.scaled_residual),
                            repr(rep.reference_constant)])


def write_cusp(path: str, horizons: list[int]) -> None:
    g, params = build_lps(13, 5)
    sd = eigendecompose(g, certify_regular(g))
    terms = normalized_cusp_terms(g, params, max(horizons))
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["N", "average", "scaled", "reference", "term_bound", "max_term"])
        for n_val in horizons:
            avg, rep = average_cusp(g, params, n_val, sd, normalized=terms)
            w.writerow([n_val, repr(avg), repr(rep["scaled_average"]),
                        repr(rep["reference_constant"]), repr(rep["term_bound"]),
                        repr(rep["max_term"])])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="out", help="directory for the CSV files")
    ap.add_argument("--horizons", default="25,50,100,200,400",
                    help="comma-separated Cesaro horizons")
    ap.add_argument("--nm-horizons", default="10,20,40,80",
                    help="comma-separated horizons for the N_m and cusp averages")
    ap.add_argument("--k-max", type=int, default=4, help="largest cosine power")
    args = ap.parse_args(argv)
    try:
        horizons = sorted(int(s) for s in args.horizons.split(","))
        nm_horizons = sorted(int(s) for s in args.nm_horizons.split(","))
    except ValueError:
        print("error: horizons must be comma-separated integers", file=sys.stderr)
        return 2
    os.makedirs(args.out_dir, exist_ok=True)
    write_cesaro(os.path.join(args.out_dir, "cesaro.csv"), horizons, args.k_max)
    print(f"wrote {args.out_dir}/cesaro.csv")
    write_average_nm(os.path.join(args.out_dir, "average_nm.csv"), nm_horizons)
    print(f"wrote {args.out_dir}/average_nm.csv")
    write_cusp(os.path.join(args.out_dir, "cusp.csv"), nm_horizons)
    print(f"wrote {args.out_dir}/cusp.csv")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
