"""Command line interface: eval, spectrum, verify, and table subcommands.

Exit codes: 0 success, 2 usage or parse error, 3 domain error (disconnected
graph, oversize graph), 4 verification failure.
"""

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import engine, expr, formulas, graphs, metric, spectral, tables
from .graphs import EdgeListError, OversizeGraphError
from .metric import DisconnectedGraphError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4

DEFAULT_MAX_VERTICES = 2000


class _CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _fmt_float(x):
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"non-finite value in report: {x}")
    return f"{x:.12g}"


def _to_json(value):
    """Deterministic JSON: floats at 12 significant digits, exact rationals as strings."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, Fraction):
        return json.dumps(str(value))
    if isinstance(value, (float, np.floating)):
        return _fmt_float(float(value))
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_to_json(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ",".join(f"{json.dumps(k)}:{_to_json(v)}" for k, v in value.items()) + "}"
    raise TypeError(f"cannot serialize {value!r}")


def _format_exact(value):
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    return _fmt_float(float(value))


def _parse_expression(text):
    try:
        return expr.parse(text)
    except expr.ExprSyntaxError as exc:
        raise _CliError(f"parse error: {exc}", EXIT_USAGE) from exc


def _build_graph(args):
    if getattr(args, "file", None):
        if args.expr is not None:
            raise _CliError("give either an expression or --file, not both", EXIT_USAGE)
        ast = expr.FromFile(args.file)
        text = expr.render(ast)
    else:
        if args.expr is None:
            raise _CliError("an expression is required (or use --file)", EXIT_USAGE)
        text = args.expr
        ast = _parse_expression(text)
    try:
        g = expr.eval_expr(ast)
    except OversizeGraphError as exc:
        raise _CliError(str(exc), EXIT_DOMAIN) from exc
    except expr.ExprEvalError as exc:
        raise _CliError(str(exc), EXIT_USAGE) from exc
    if g.n > args.max_vertices:
        raise _CliError(
            f"graph has {g.n} vertices, above the --max-vertices limit of {args.max_vertices}",
            EXIT_DOMAIN,
        )
    return expr.render(ast), ast, g


def build_eval_report(expr_text, ast, g, method="auto", want_witness=False):
    """Assemble the eval report dictionary in its canonical key order."""
    try:
        dist = metric.distance_matrix(g)
    except DisconnectedGraphError:
        raise
    result = engine.qec(g, method=method)
    spec = spectral.sym_eigenvalues(dist.astype(np.float64))
    delta1 = float(spec.values[0])
    delta2 = float(spec.values[1])
    if not (delta2 <= result.value + 1e-8 and result.value < delta1):
        raise RuntimeError(
            f"internal invariant failed: delta2={delta2!r} qec={result.value!r} delta1={delta1!r}"
        )
    formula = expr.match_formula(ast) if ast is not None else None
    params = graphs.srg_parameters(g)
    report = {
        "expr": expr_text,
        "n": g.n,
        "m": g.m,
        "diameter": int(dist.max()),
        "qec": {
            "value": float(result.value),
            "method": result.method,
            "witness": [float(x) for x in result.witness] if want_witness else None,
        },
        "formula": {
            "value": formula.value if formula is not None else None,
            "source": formula.source if formula is not None else None,
        },
        "delta1": delta1,
        "delta2": delta2,
        "lambda_min": float(spectral.lambda_min(g)),
        "srg": list(params.as_tuple()) if params is not None else None,
    }
    return report


def _print_eval_text(report):
    lines = [
        f"expr        {report['expr']}",
        f"vertices    {report['n']}",
        f"edges       {report['m']}",
        f"diameter    {report['diameter']}",
        f"qec         {_fmt_float(report['qec']['value'])}  [{report['qec']['method']}]",
    ]
    formula = report["formula"]
    if formula["value"] is not None:
        lines.append(f"formula     {_format_exact(formula['value'])}  [{formula['source']}]")
    else:
        lines.append("formula     (none)")
    lines.append(f"delta1      {_fmt_float(report['delta1'])}")
    lines.append(f"delta2      {_fmt_float(report['delta2'])}")
    lines.append(f"lambda_min  {_fmt_float(report['lambda_min'])}")
    if report["srg"] is not None:
        lines.append(f"srg         ({', '.join(str(v) for v in report['srg'])})")
    else:
        lines.append("srg         (not strongly regular)")
    witness = report["qec"]["witness"]
    if witness is not None:
        lines.append("witness     " + " ".join(_fmt_float(x) for x in witness))
    print("\n".join(lines))


def _cmd_eval(args):
    expr_text, ast, g = _build_graph(args)
    try:
        report = build_eval_report(
            expr_text, ast, g, method=args.method, want_witness=args.witness
        )
    except DisconnectedGraphError as exc:
        raise _CliError(str(exc), EXIT_DOMAIN) from exc
    if args.json:
        print(_to_json(report))
    else:
        _print_eval_text(report)
    return EXIT_OK


def _cmd_spectrum(args):
    expr_text, ast, g = _build_graph(args)
    adj_spec = spectral.adjacency_spectrum(g)
    adj_mults = adj_spec.multiplicities()
    try:
        dist = metric.distance_matrix(g)
    except DisconnectedGraphError as exc:
        raise _CliError(str(exc), EXIT_DOMAIN) from exc
    dist_spec = spectral.sym_eigenvalues(dist.astype(np.float64))
    dist_mults = dist_spec.multiplicities()
    if args.json:
        report = {
            "expr": expr_text,
            "n": g.n,
            "adjacency": [[float(v), int(m)] for v, m in adj_mults],
            "distance": [[float(v), int(m)] for v, m in dist_mults],
        }
        print(_to_json(report))
    else:
        print(f"expr       {expr_text}")
        print(f"vertices   {g.n}")
        print("adjacency  " + "  ".join(f"{_fmt_float(v)}^{m}" for v, m in adj_mults))
        print("distance   " + "  ".join(f"{_fmt_float(v)}^{m}" for v, m in dist_mults))
    return EXIT_OK


def _family_complete(max_n, samples, rng):
    for n in range(2, max_n + 1):
        golden = float(formulas.qec_complete(n).value)
        yield f"K({n})", golden, engine.qec(graphs.complete(n)).value


def _family_bipartite(max_n, samples, rng):
    for m in range(1, max_n + 1):
        for n in range(1, max_n + 1):
            golden = float(formulas.qec_complete_bipartite(m, n).value)
            g = graphs.join(graphs.empty(m), graphs.empty(n))
            yield f"Kb({m},{n})", golden, engine.qec(g).value


def _family_cycle(max_n, samples, rng):
    for n in range(3, max(max_n, 3) + 1):
        golden = float(formulas.qec_cycle(n).value)
        yield f"C({n})", golden, engine.qec(graphs.cycle(n)).value


def _family_split(max_n, samples, rng):
    for n in range(2, max_n + 1):
        for m in range(1, max_n + 1):
            golden = float(formulas.qec_complete_split(m, n).value)
            g = graphs.join(graphs.complete(n), graphs.empty(m))
            yield f"K({n})+Kbar({m})", golden, engine.qec(g).value


def _family_friendship(max_n, samples, rng):
    for n in range(1, max_n + 1):
        golden = float(formulas.qec_friendship(n).value)
        g = graphs.join(graphs.copies(n, graphs.complete(2)), graphs.complete(1))
        yield f"friendship({n})", golden, engine.qec(g).value


def _family_wheel(max_n, samples, rng):
    for n in range(3, max(max_n, 3) + 1):
        golden = float(formulas.qec_wheel(n).value)
        g = graphs.join(graphs.cycle(n), graphs.complete(1))
        yield f"wheel({n})", golden, engine.qec(g).value


def _family_cycle_join(max_n, samples, rng):
    top = max(max_n, 3)
    for n in range(3, top + 1):
        for m in range(1, top + 1):
            golden = float(formulas.qec_cycle_join_complete(n, m).value)
            g = graphs.join(graphs.cycle(n), graphs.complete(m))
            yield f"C({n})+K({m})", golden, engine.qec(g).value
        for m in range(2, top + 1):
            golden = float(formulas.qec_cycle_join_empty(n, m).value)
            g = graphs.join(graphs.cycle(n), graphs.empty(m))
            yield f"C({n})+Kbar({m})", golden, engine.qec(g).value


def _regular_instances(max_n):
    instances = []
    for n in range(1, max_n + 1):
        instances.append((f"K({n})", graphs.complete(n), (n, n - 1, formulas.lambda_min_complete(n))))
        instances.append((f"Kbar({n})", graphs.empty(n), (n, 0, Fraction(0))))
    for n in range(3, max_n + 1):
        instances.append((f"C({n})", graphs.cycle(n), (n, 2, formulas.lambda_min_cycle(n))))
    for k in range(1, max(2, max_n // 2) + 1):
        g = graphs.copies(k, graphs.complete(2))
        instances.append((f"{k}*K(2)", g, (2 * k, 1, Fraction(-1))))
    instances.append(("petersen", graphs.petersen(), (10, 3, Fraction(-2))))
    instances.append(("shrikhande", graphs.shrikhande(), (16, 6, Fraction(-2))))
    instances.append(("clebsch", graphs.clebsch(), (16, 10, Fraction(-2))))
    return instances


def _family_join(max_n, samples, rng):
    instances = _regular_instances(max_n)
    for i, (name1, g1, info1) in enumerate(instances):
        for name2, g2, info2 in instances[i:]:
            if g1.n + g2.n > 60:
                continue
            golden = float(formulas.qec_join_regular(*info1, *info2).value)
            g = graphs.join(g1, g2)
            yield f"{name1}+{name2}", golden, engine.qec(g).value


def _random_pool(samples, max_n, rng):
    pool = []
    for _ in range(samples):
        n = int(rng.integers(3, max(4, max_n) + 1))
        pool.append(graphs.random_connected(n, rng))
    return pool


def _family_double(max_n, samples, rng):
    for i, g in enumerate(_random_pool(samples, max_n, rng)):
        q = engine.qec(g).value
        golden = 2.0 * q + 2.0
        yield f"double(random {i})", golden, engine.qec(graphs.double(g)).value


def _family_lex2(max_n, samples, rng):
    for i, g in enumerate(_random_pool(samples, max_n, rng)):
        q = engine.qec(g).value
        golden = 2.0 * q + 1.0
        yield f"lex2(random {i})", golden, engine.qec(graphs.lex_k2(g)).value


def _family_srg(max_n, samples, rng):
    for name, g in [
        ("petersen", graphs.petersen()),
        ("shrikhande", graphs.shrikhande()),
        ("clebsch", graphs.clebsch()),
        ("schlafli", graphs.schlafli()),
        ("chang(1)", graphs.chang(1)),
        ("chang(2)", graphs.chang(2)),
        ("chang(3)", graphs.chang(3)),
        ("T(8)", graphs.triangular(8)),
        ("grid(4)", graphs.grid(4)),
        ("hoffman_singleton", graphs.hoffman_singleton()),
    ]:
        params = graphs.srg_parameters(g)
        if params is None:
            yield name, 0.0, math.inf
            continue
        golden = float(formulas.qec_srg(params).value)
        yield name, golden, engine.qec(g).value


def _family_srg_join(max_n, samples, rng):
    families = ["petersen", "shrikhande", "clebsch", "schlafli", "chang", "hoffman_singleton"]
    families += [f"T({n})" for n in range(4, 9)] + [f"grid({n})" for n in range(3, 6)]
    for base in families:
        for suffix in ("K", "Kbar"):
            for m in range(1, 9):
                family = f"{base}+{suffix}"
                golden = float(formulas.qec_srg_join_tables(family, m).value)
                g = tables._join_table_graph(family, m)
                if g is None:
                    continue
                yield f"{family}({m})", golden, engine.qec(g).value


def _family_methods(max_n, samples, rng):
    for i, g in enumerate(_random_pool(samples, max_n, rng)):
        a = engine.qec_compression(g).value
        b = engine.qec_stationary(g).value if g.n >= 3 else a
        values = [a, b]
        if metric.has_diameter_at_most_2(g):
            values.append(engine.qec_diam2(g).value)
        yield f"random {i} (n={g.n})", min(values), max(values)


VERIFY_FAMILIES = {
    "complete": _family_complete,
    "bipartite": _family_bipartite,
    "cycle": _family_cycle,
    "split": _family_split,
    "friendship": _family_friendship,
    "wheel": _family_wheel,
    "cycle-join": _family_cycle_join,
    "join": _family_join,
    "double": _family_double,
    "lex2": _family_lex2,
    "srg": _family_srg,
    "srg-join": _family_srg_join,
    "methods": _family_methods,
}

VERIFY_TOL = 1e-7


def _cmd_verify(args):
    if args.family == "all":
        names = list(VERIFY_FAMILIES)
    elif args.family in VERIFY_FAMILIES:
        names = [args.family]
    else:
        known = ", ".join(sorted(VERIFY_FAMILIES) + ["all"])
        raise _CliError(f"unknown family {args.family!r}; choose from: {known}", EXIT_USAGE)
    rc = EXIT_OK
    for name in names:
        rng = np.random.default_rng(args.seed)
        cases = 0
        max_dev = 0.0
        failures = []
        for label, golden, got in VERIFY_FAMILIES[name](args.max_n, args.samples, rng):
            cases += 1
            dev = abs(got - golden)
            max_dev = max(max_dev, dev)
            if dev > VERIFY_TOL:
                failures.append(f"  {label}: golden {golden:.12g}, got {got:.12g}")
        status = "PASS" if not failures and cases > 0 else "FAIL"
        print(f"family={name} cases={cases} max_dev={max_dev:.3e} status={status}")
        for line in failures:
            print(line)
        if status == "FAIL":
            rc = EXIT_VERIFY
    return rc


def _cmd_table(args):
    rows = tables.build_rows()
    if args.json:
        payload = [
            {"label": r.label, "expected": r.expected, "computed": r.computed, "ok": r.ok}
            for r in rows
        ]
        print(_to_json(payload))
    else:
        width = max(len(r.label) for r in rows)
        for r in rows:
            status = "PASS" if r.ok else "FAIL"
            print(f"{r.label:<{width}}  expected {r.expected}  computed {r.computed}  {status}")
        passed = sum(1 for r in rows if r.ok)
        print(f"{passed}/{len(rows)} rows pass")
    if any(not r.ok for r in rows):
        return EXIT_VERIFY
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qec",
        description="Quadratic embedding constants of finite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression and report its QEC")
    p_eval.add_argument("expr", nargs="?", help="graph expression, e.g. 'C(5) + K(2)'")
    p_eval.add_argument("--file", help="read the graph from an edge-list file instead")
    p_eval.add_argument(
        "--method",
        choices=["auto", "compression", "stationary", "diam2"],
        default="auto",
        help="numeric method (default: auto)",
    )
    p_eval.add_argument("--json", action="store_true", help="emit a JSON report")
    p_eval.add_argument("--witness", action="store_true", help="include the optimizing vector")
    p_eval.add_argument(
        "--max-vertices",
        type=int,
        default=DEFAULT_MAX_VERTICES,
        help=f"refuse graphs above this size (default {DEFAULT_MAX_VERTICES})",
    )
    p_eval.set_defaults(func=_cmd_eval)

    p_spec = sub.add_parser("spectrum", help="print adjacency and distance spectra")
    p_spec.add_argument("expr", nargs="?", help="graph expression")
    p_spec.add_argument("--file", help="read the graph from an edge-list file instead")
    p_spec.add_argument("--json", action="store_true", help="emit a JSON report")
    p_spec.add_argument(
        "--max-vertices", type=int, default=DEFAULT_MAX_VERTICES, help=argparse.SUPPRESS
    )
    p_spec.set_defaults(func=_cmd_spectrum)

    p_verify = sub.add_parser("verify", help="sweep a family and compare against closed forms")
    p_verify.add_argument("--family", required=True, help="family name, or 'all'")
    p_verify.add_argument(
        "--max",
        "--max-n",
        dest="max_n",
        type=int,
        default=8,
        help="largest size parameter in sweeps (default 8)",
    )
    p_verify.add_argument(
        "--samples", type=int, default=50, help="random-graph sample count (default 50)"
    )
    p_verify.add_argument("--seed", type=int, default=42, help="RNG seed (default 42)")
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="run the built-in verification table")
    p_table.add_argument(
        "--paper-examples",
        action="store_true",
        help="check the built-in table of published example values",
    )
    p_table.add_argument("--json", action="store_true", help="emit the table as JSON")
    p_table.set_defaults(func=_cmd_table)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (expr.ExprSyntaxError, expr.ExprEvalError, EdgeListError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DisconnectedGraphError, OversizeGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
