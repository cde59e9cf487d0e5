"""Command-line front end.

Subcommands cover construction (graph, lps), spectra, cycle counts (nbt,
oracle), series (zeta, cuspgen), limit reports (limits, stf, huang), and
the verification suite (verify).  Reports are CSV for tabular sweeps and
JSON for verdicts; floats are emitted with 17 significant digits so that
identical runs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import limits, lps, nbt, oracle, suite, zeta
from .errors import IharaLabError, NotRegular, ParseError
from .graphs import certify_regular, load_graph, named_graph, save_graph
from .spectral import eigendecompose


def _fmt(x) -> str:
    """Deterministic cell formatting: ints/rationals exact, floats .17g."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _write_csv(path: str, header: list[str], rows: list[list]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(c) for c in row])


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _print_table(header: list[str], rows: list[list]) -> None:
    print("\t".join(header))
    for row in rows:
        print("\t".join(_fmt(c) for c in row))


def _emit_rows(args, header: list[str], rows: list[list]) -> None:
    if args.emit:
        if args.emit.endswith(".json"):
            payload = {"columns": header, "rows": [[_fmt(c) for c in row] for row in rows]}
            _write_json(args.emit, payload)
        else:
            _write_csv(args.emit, header, rows)
        print(f"wrote {args.emit}")
    else:
        _print_table(header, rows)


def _load_source(source: str) -> suite.SuiteContext:
    """Positional graph source: an existing file path, else a named graph."""
    if os.path.exists(source):
        cfg = suite.VerificationSuiteConfig(source_kind="file", source=source)
    else:
        cfg = suite.VerificationSuiteConfig(source_kind="named", source=source)
    return suite.resolve_source(cfg)


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_graph(args) -> int:
    ctx = _load_source(args.source)
    g = ctx.g
    print(f"vertices: {g.n}")
    print(f"edges: {g.edge_count}")
    try:
        cert = ctx.cert
        print(f"regular: yes, degree {cert.degree} (q = {cert.q})")
        print(f"bipartite: {'yes' if cert.bipartite else 'no'}")
    except NotRegular as exc:
        print(f"regular: no ({exc})")
    if args.emit:
        save_graph(g, args.emit, fmt=args.fmt)
        print(f"wrote {args.emit}")
    return 0


def cmd_lps(args) -> int:
    g, params = lps.build_lps(args.p, args.q, allow_large=args.allow_large)
    cert = certify_regular(g)
    gens = lps.quaternion_generators(args.p)
    print(f"X^{{{args.p},{args.q}}}: {params.group_kind}(F_{args.q})")
    print(f"vertices: {g.n}")
    print(f"degree: {cert.degree} ({len(gens)} generators)")
    print(f"bipartite: {'yes' if cert.bipartite else 'no'}")
    if args.emit:
        edges = []
        for i in range(g.n):
            for j in range(i, g.n):
                c = g.adj[i][j] if i != j else g.adj[i][i] // 2
                if c:
                    edges.append([i, j] if c == 1 else [i, j, c])
        payload = {
            "n": g.n,
            "edges": edges,
            "lps": {"p": args.p, "q": args.q, "kind": params.group_kind},
        }
        _write_json(args.emit, payload)
        print(f"wrote {args.emit}")
    return 0


def cmd_spectrum(args) -> int:
    ctx = _load_source(args.source)
    sd = ctx.sd
    header = ["value", "multiplicity", "theta_re", "theta_im", "principal"]
    rows = [
        [cl.value, cl.mult, cl.theta.real, cl.theta.imag, cl.principal]
        for cl in sd.clusters
    ]
    _emit_rows(args, header, rows)
    try:
        limits.require_ramanujan(sd)
        print("ramanujan: yes")
    except IharaLabError:
        print("ramanujan: no")
    return 0


def cmd_nbt(args) -> int:
    ctx = _load_source(args.source)
    if args.what == "nm":
        counts = nbt.n_reduced_range(ctx.g, ctx.cert, args.m_max, method=args.method)
        rows = [[m, counts[m - 1]] for m in range(1, args.m_max + 1)]
        _emit_rows(args, ["m", "n_m"], rows)
    elif args.what == "f":
        values = nbt.f_values(ctx.g, ctx.cert, args.m_max, v=args.vertex)
        rows = [[m, values[m]] for m in range(args.m_max + 1)]
        _emit_rows(args, ["m", "f_m"], rows)
    else:  # ttilde
        traces = nbt.t_tilde_traces(ctx.g, ctx.cert, args.m_max, method=args.method)
        rows = [[m, traces[m]] for m in range(args.m_max + 1)]
        _emit_rows(args, ["m", "trace_t_tilde_m"], rows)
    return 0


def cmd_oracle(args) -> int:
    ctx = _load_source(args.source)
    counts = oracle.count_reduced_cycles_all(ctx.g, args.m_max, budget=args.budget)
    try:
        rec = nbt.n_reduced_range(ctx.g, ctx.cert, args.m_max, method="full")
    except NotRegular:
        rec = None
    header = ["m", "bruteforce"] + (["recurrence", "equal"] if rec else [])
    rows = []
    for m in range(1, args.m_max + 1):
        row = [m, counts[m - 1]]
        if rec:
            row += [rec[m - 1], counts[m - 1] == rec[m - 1]]
        rows.append(row)
    _emit_rows(args, header, rows)
    if rec and counts != rec:
        print("MISMATCH between brute force and recurrence")
        return 1
    return 0


def cmd_zeta(args) -> int:
    ctx = _load_source(args.source)
    betti_r = ctx.g.edge_count - ctx.g.n + 1
    try:
        recip = zeta.reciprocal_series_regular(ctx.g, ctx.cert, args.order)
    except NotRegular:
        recip = zeta.ihara_bass_reciprocal(ctx.g).series(args.order)
    zs = recip.inverse()
    logder = (-recip.derivative()) * recip.inverse()
    n_m = [logder.coeffs[m - 1] for m in range(1, args.order + 1)]
    if args.mode == "float":
        recip_out = [float(c) for c in recip.coeffs]
        zeta_out = [float(c) for c in zs.coeffs]
        nm_out = [float(c) for c in n_m]
    else:
        recip_out = [str(c) for c in recip.coeffs]
        zeta_out = [str(c) for c in zs.coeffs]
        nm_out = [str(c) for c in n_m]
    payload = {
        "order": args.order,
        "betti_r": betti_r,
        "reciprocal_coeffs": recip_out,
        "zeta_coeffs": zeta_out,
        "n_m": nm_out,
    }
    if args.emit:
        _write_json(args.emit, payload)
        print(f"wrote {args.emit}")
    else:
        print(json.dumps(payload, indent=2))
    return 0


def cmd_cuspgen(args) -> int:
    g, params = lps.build_lps(args.p, args.q, allow_large=args.allow_large)
    cert = certify_regular(g)
    traces = nbt.t_tilde_traces(g, cert, args.order)
    cusps = zeta.cusp_coefficients_range(g, params, args.order)
    rows = []
    for m in range(args.order + 1):
        theta_coeff = Fraction(2 * traces[m], g.n)
        eis = zeta.eisenstein_C(args.p, args.q, m)
        row = {
            "m": m,
            "theta_coeff": str(theta_coeff),
            "eisenstein": str(eis),
            "cusp": str(cusps[m]),
        }
        # a(p^m)/(2 p^{m/2}); rational unless m is odd with a nonzero cusp term
        if m % 2 == 0:
            row["normalized"] = str(cusps[m] / (2 * Fraction(args.p) ** (m // 2)))
        elif cusps[m] == 0:
            row["normalized"] = "0"
        else:
            row["normalized"] = _fmt(float(cusps[m]) / (2.0 * args.p ** (m / 2.0)))
        rows.append(row)
    payload = {
        "p": args.p,
        "q": args.q,
        "n": g.n,
        "kind": params.group_kind,
        "bipartite": cert.bipartite,
        "rows": rows,
    }
    if args.emit:
        _write_json(args.emit, payload)
        print(f"wrote {args.emit}")
    else:
        print(json.dumps(payload, indent=2))
    return 0


def cmd_limits(args) -> int:
    ctx = _load_source(args.source)
    horizons = args.horizons
    if args.what == "cesaro":
        horizons = horizons or list(suite.DEFAULT_HORIZONS["cesaro"])
        runner = limits.cesaro_a if args.variant == "a" else limits.cesaro_s
        rep = runner(ctx.sd, args.k, horizons)
        header = ["N", "deviation", "scaled_deviation", "reference_constant", "rate_estimate"]
        rows = [
            [N, rep.deviations[i], rep.scaled_deviations[i], rep.reference_constant,
             rep.rate_estimate if rep.rate_estimate is not None else "nan"]
            for i, N in enumerate(rep.N_values)
        ]
        _emit_rows(args, header, rows)
    elif args.what == "average-nm":
        horizons = horizons or list(suite.DEFAULT_HORIZONS["average-nm"])
        reports = limits.average_nm_sweep(ctx.g, ctx.cert, ctx.sd, horizons)
        header = ["N", "lhs", "main_terms", "residual", "scaled_residual", "reference_constant"]
        rows = [
            [r.N, r.lhs, r.main_terms, r.residual, r.scaled_residual, r.reference_constant]
            for r in reports
        ]
        _emit_rows(args, header, rows)
    else:  # cusp
        if ctx.params is None:
            raise ParseError("limits --what cusp needs an LPS graph file with its parameters")
        horizons = horizons or list(suite.DEFAULT_HORIZONS["cusp"])
        normalized = limits.normalized_cusp_terms(ctx.g, ctx.params, max(horizons))
        header = ["N", "average", "scaled_average", "reference_constant"]
        rows = []
        for N in horizons:
            avg, report = limits.average_cusp(ctx.g, ctx.params, N, ctx.sd, normalized=normalized)
            rows.append([N, avg, report["scaled_average"], report["reference_constant"]])
        _emit_rows(args, header, rows)
    return 0


def _parse_hhat(pairs: list[str]) -> list[tuple[int, float]]:
    out = []
    for item in pairs:
        try:
            m_str, v_str = item.split(":", 1)
            m = int(m_str)
            v = float(v_str)
        except ValueError as exc:
            raise ParseError(f"--hhat expects m:value, got {item!r}") from exc
        if m < 1:
            raise ParseError("--hhat frequencies must be >= 1 (use --hhat0 for m = 0)")
        out.append((m, v))
    return out


def cmd_stf(args) -> int:
    ctx = _load_source(args.source)
    support = tuple(_parse_hhat(args.hhat or []))
    h = limits.StfTestFunction(hhat0=args.hhat0, support=support)
    lhs, geo, disc = limits.stf_verify(ctx.g, ctx.cert, ctx.sd, h)
    payload = {
        "lhs": lhs,
        "geometric": geo,
        "discrepancy": disc,
        "hhat0": args.hhat0,
        "support": [[m, v] for m, v in support],
    }
    if args.emit:
        _write_json(args.emit, payload)
        print(f"wrote {args.emit}")
    else:
        print(json.dumps(payload, indent=2))
    return 0


def cmd_huang(args) -> int:
    ctx = _load_source(args.source)
    values = limits.huang_range(ctx.g, ctx.cert, args.m_max)
    rows = [[m, values[m - 1]] for m in range(1, args.m_max + 1)]
    _emit_rows(args, ["m", "h_m"], rows)
    worst = min(values[m - 1] for m in range(2, args.m_max + 1, 2)) if args.m_max >= 2 else 0.0
    print(f"min even-m h_m: {_fmt(worst)}")
    return 0


def cmd_verify(args) -> int:
    if args.config:
        config = suite.VerificationSuiteConfig.from_json_file(args.config)
    else:
        if args.lps:
            try:
                p_str, q_str = args.lps.split(",")
                p, q = int(p_str), int(q_str)
            except ValueError as exc:
                raise ParseError(f"--lps expects p,q, got {args.lps!r}") from exc
            kind, source = "lps", ""
        elif args.graph:
            p = q = None
            if os.path.exists(args.graph):
                kind, source = "file", args.graph
            else:
                kind, source = "named", args.graph
        else:
            raise ParseError("verify needs --graph, --lps, or --config")
        checks = suite.validate_checks(
            tuple(args.checks.split(",")) if args.checks else suite.CHECK_ORDER
        )
        config = suite.VerificationSuiteConfig(
            source_kind=kind,
            source=source,
            p=p,
            q=q,
            checks=checks,
            horizons=tuple(args.horizons) if args.horizons else None,
            k_values=tuple(args.k) if args.k else (1, 2, 3, 4),
            tol_override=args.tol,
            budget=args.budget,
            emit=args.emit,
        )
    code, results = suite.run_suite(config)
    for r in results:
        metric = "-" if r.metric is None else _fmt(r.metric)
        print(f"[{r.status.upper():5s}] {r.check:12s} metric={metric} "
              f"tolerance={_fmt(r.tolerance)} ({r.seconds}s)")
        if r.status == "error":
            print(f"        {r.detail.get('error', '')}")
    if config.emit:
        print(f"wrote {config.emit}")
    return code


# ---------------------------------------------------------------------------
# parser


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ihara-lab",
        description="Reduced-cycle counts, Ihara zeta series, and spectral limit checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_graph = sub.add_parser("graph", help="inspect or convert a graph")
    p_graph.add_argument("source", help="named graph or file path")
    p_graph.add_argument("--emit", help="write the graph to this path")
    p_graph.add_argument("--fmt", choices=["json", "edgelist"], default=None)
    p_graph.set_defaults(func=cmd_graph)

    p_lps = sub.add_parser("lps", help="build an X^{p,q} Cayley graph")
    p_lps.add_argument("--p", type=int, required=True)
    p_lps.add_argument("--q", type=int, required=True)
    p_lps.add_argument("--allow-large", action="store_true")
    p_lps.add_argument("--emit", help="write graph JSON with embedded parameters")
    p_lps.set_defaults(func=cmd_lps)

    p_spec = sub.add_parser("spectrum", help="eigenvalue clusters and angles")
    p_spec.add_argument("source")
    p_spec.add_argument("--emit")
    p_spec.set_defaults(func=cmd_spectrum)

    p_nbt = sub.add_parser("nbt", help="reduced-cycle counts and related traces")
    p_nbt.add_argument("source")
    p_nbt.add_argument("--m-max", type=int, default=20)
    p_nbt.add_argument("--what", choices=["nm", "f", "ttilde"], default="nm")
    p_nbt.add_argument("--method", choices=["auto", "full", "row"], default="auto")
    p_nbt.add_argument("--vertex", type=int, default=0)
    p_nbt.add_argument("--emit")
    p_nbt.set_defaults(func=cmd_nbt)

    p_oracle = sub.add_parser("oracle", help="brute-force enumeration cross-check")
    p_oracle.add_argument("source")
    p_oracle.add_argument("--m-max", type=int, default=8)
    p_oracle.add_argument("--budget", type=int, default=suite.DEFAULT_BUDGET)
    p_oracle.add_argument("--emit")
    p_oracle.set_defaults(func=cmd_oracle)

    p_zeta = sub.add_parser("zeta", help="zeta series and its reciprocal")
    p_zeta.add_argument("source")
    p_zeta.add_argument("--order", type=int, default=12)
    p_zeta.add_argument("--mode", choices=["exact", "float"], default="exact")
    p_zeta.add_argument("--emit")
    p_zeta.set_defaults(func=cmd_zeta)

    p_cusp = sub.add_parser("cuspgen", help="theta, Eisenstein, and cusp coefficients")
    p_cusp.add_argument("--p", type=int, required=True)
    p_cusp.add_argument("--q", type=int, required=True)
    p_cusp.add_argument("--order", type=int, default=8)
    p_cusp.add_argument("--allow-large", action="store_true")
    p_cusp.add_argument("--emit")
    p_cusp.set_defaults(func=cmd_cuspgen)

    p_lim = sub.add_parser("limits", help="Cesaro and averaging reports")
    p_lim.add_argument("source")
    p_lim.add_argument("--what", choices=["cesaro", "average-nm", "cusp"], default="cesaro")
    p_lim.add_argument("--k", type=int, default=2)
    p_lim.add_argument("--variant", choices=["a", "s"], default="a")
    p_lim.add_argument("--horizons", type=_int_list, default=None)
    p_lim.add_argument("--emit")
    p_lim.set_defaults(func=cmd_limits)

    p_stf = sub.add_parser("stf", help="trace formula check")
    p_stf.add_argument("source")
    p_stf.add_argument("--hhat", action="append", help="frequency:value, repeatable")
    p_stf.add_argument("--hhat0", type=float, default=0.0)
    p_stf.add_argument("--emit")
    p_stf.set_defaults(func=cmd_stf)

    p_huang = sub.add_parser("huang", help="Li-criterion sequence h_m")
    p_huang.add_argument("source")
    p_huang.add_argument("--m-max", type=int, default=30)
    p_huang.add_argument("--emit")
    p_huang.set_defaults(func=cmd_huang)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--graph", help="named graph or file path")
    p_verify.add_argument("--lps", help="p,q pair")
    p_verify.add_argument("--config", help="JSON config file")
    p_verify.add_argument("--checks", help="comma-separated subset of checks")
    p_verify.add_argument("--horizons", type=_int_list, default=None)
    p_verify.add_argument("--k", type=_int_list, default=None)
    p_verify.add_argument("--tol", type=float, default=None)
    p_verify.add_argument("--budget", type=int, default=suite.DEFAULT_BUDGET)
    p_verify.add_argument("--emit", help="JSON summary path")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IharaLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
