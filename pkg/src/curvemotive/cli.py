"""Command-line front end.

Subcommands: ``matrices`` (dump P, Delta, N, M), ``codim`` (stratum
codimension report), ``compute`` (one of the three series, optionally
specialized), ``check`` (run every cross-form identity on a graph) and
``oracle`` (direct access to the brute-force validators).

Exit codes: 0 success, 1 data or validation error, 2 usage error,
3 cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import oracles
from .codim import (
    Stratum,
    codim_F,
    codim_F_literal,
    codim_FD,
    hoskin_deligne,
    nhat,
    stratum_report,
    w_of,
)
from .grothendieck import Specialization, _frac_json
from .resolution import GraphValidationError, build, matrices_report
from .series import (
    SeriesCrossCheckError,
    divisorial_closed_form,
    divisorial_semigroup_stratum_sum,
    enumerate_strata,
    expand,
    expand_totally_rational,
    poincare_divisorial,
    poincare_generalised,
    poincare_generalised_totally_rational,
)

EXIT_OK = 0
EXIT_DATA = 1
EXIT_USAGE = 2
EXIT_CROSSCHECK = 3

WORKERS_ENV = "CURVEMOTIVE_WORKERS"


class _UsageError(Exception):
    pass


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvemotive",
        description="Motivic Poincare series of curve singularities from "
        "embedded-resolution combinatorics, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, bound=False):
        p.add_argument("--input", required=True, help="graph description (JSON file)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if bound:
            p.add_argument(
                "--bound",
                help="per-variable truncation bound, comma separated (e.g. 4,6,12)",
            )

    p_mat = sub.add_parser("matrices", help="dump P, Delta, N, M exactly")
    add_common(p_mat)

    p_codim = sub.add_parser("codim", help="codimension report for one stratum")
    add_common(p_codim)
    p_codim.add_argument(
        "--stratum",
        required=True,
        help="stratum description: JSON file path, or an inline JSON object",
    )

    p_compute = sub.add_parser("compute", help="compute a truncated series")
    add_common(p_compute, bound=True)
    p_compute.add_argument(
        "--series",
        required=True,
        choices=("pg", "pdg", "phatd", "phatd-closed"),
        help="pg: branch series; pdg: divisorial series; phatd: extended-"
        "semigroup series (expanded); phatd-closed: its closed form",
    )
    p_compute.add_argument(
        "--specialize",
        help="comma-separated assignments, e.g. L=1,all=1 or L=2,e[k2]=0",
    )
    p_compute.add_argument(
        "--strict-integral",
        action="store_true",
        help="drop strata with non-integral valuation vectors",
    )
    p_compute.add_argument("--workers", type=int, default=None)

    p_check = sub.add_parser("check", help="run all cross-form identities")
    add_common(p_check, bound=True)
    p_check.add_argument("--workers", type=int, default=None)

    p_oracle = sub.add_parser("oracle", help="run a brute-force validator directly")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_name", required=True)
    p_sg = oracle_sub.add_parser("semigroup-gf")
    p_sg.add_argument("--generators", required=True, help="e.g. 2,3")
    p_sg.add_argument("--bound", required=True, type=int)
    p_mc = oracle_sub.add_parser("monomial-codim")
    p_mc.add_argument("--weights", required=True, help="e.g. 1,1;1,2;2,3")
    p_mc.add_argument("--w", required=True, help="e.g. 2,3,6")
    p_cd = oracle_sub.add_parser("count-divisors")
    p_cd.add_argument("--q", required=True, type=int)
    p_cd.add_argument("--removed", required=True, type=int)
    p_cd.add_argument("--n", required=True, type=int)
    return parser


def _load_graph(path: str):
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    return build(data)


def _parse_bound(text: str | None, arity: int, what: str):
    if text is None:
        raise _UsageError(f"--bound is required for {what}")
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        bound = [int(p) for p in parts]
    except ValueError as exc:
        raise _UsageError(f"malformed bound {text!r}") from exc
    if any(b < 0 for b in bound):
        raise _UsageError("bounds must be nonnegative")
    if len(bound) == 1 and arity > 1:
        bound = bound * arity
    if len(bound) != arity:
        raise _UsageError(
            f"bound arity {len(bound)} does not match the {arity} series variables"
        )
    return tuple(bound)


def _parse_specialization(text: str) -> Specialization:
    lefschetz = None
    default = None
    symbols = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise _UsageError(f"malformed specialization assignment {chunk!r}")
        key, _, raw = chunk.partition("=")
        key = key.strip()
        try:
            value = Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise _UsageError(f"malformed specialization value {raw!r}") from exc
        if key == "L":
            lefschetz = value
        elif key == "all":
            default = value
        else:
            if key.startswith("e[") and key.endswith("]"):
                key = key[2:-1]
            symbols[key] = value
    if lefschetz is None:
        raise _UsageError("a specialization must assign L")
    return Specialization(lefschetz=lefschetz, symbols=symbols, default=default)


def _parse_stratum(raw: str, g) -> Stratum:
    if raw.lstrip().startswith("{"):
        data = json.loads(raw)
    else:
        with open(raw, encoding="utf-8") as handle:
            data = json.load(handle)
    pairs = tuple(tuple(int(x) for x in pair) for pair in data.get("I", ()))
    branches = tuple(int(j) for j in data.get("J", ()))
    point_mults = tuple(int(x) for x in data.get("n", (0,) * g.s))
    pair_mults = tuple(tuple(int(x) for x in pm) for pm in data.get("pair_mults", ()))
    branch_mults = tuple(
        tuple(int(x) for x in bm) for bm in data.get("branch_mults", ())
    )
    if len(point_mults) != g.s:
        raise GraphValidationError([f"stratum n must have {g.s} entries"])
    known = {site.key for site in g.pairs}
    for pair in pairs:
        if pair not in known:
            raise GraphValidationError([f"stratum names non-intersecting pair {pair}"])
    for j in branches:
        if not 1 <= j <= g.r:
            raise GraphValidationError([f"stratum names unknown branch {j}"])
    return Stratum(
        pairs=pairs,
        branches=branches,
        point_mults=point_mults,
        pair_mults=pair_mults,
        branch_mults=branch_mults,
    )


def _aligned(rows) -> str:
    rendered = [[str(x) for x in row] for row in rows]
    widths = [
        max(len(rendered[i][j]) for i in range(len(rendered)))
        for j in range(len(rendered[0]))
    ]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths))
        for row in rendered
    )


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _emit_graph_warnings(g) -> None:
    for message in g.warnings:
        _warn(message)


def _cmd_matrices(args) -> int:
    g = _load_graph(args.input)
    _emit_graph_warnings(g)
    report = matrices_report(g)
    if args.format == "json":
        print(json.dumps(report, indent=2))
        return EXIT_OK
    for name in ("P", "Delta", "N", "M"):
        print(f"{name}:")
        print(_aligned(report[name]))
        print()
    print(f"pairs (i1, i2, h_sigma): {[(p['i1'], p['i2'], p['h_sigma']) for p in report['pairs']]}")
    print(f"nu_bullet: {report['nu_bullet']}")
    print(f"nu_circ:   {report['nu_circ']}")
    print(f"beta:      {report['beta']}")
    print(f"epsilon:   {report['epsilon']}")
    return EXIT_OK


def _cmd_codim(args) -> int:
    g = _load_graph(args.input)
    _emit_graph_warnings(g)
    st = _parse_stratum(args.stratum, g)
    report = stratum_report(st, g)
    if args.format == "json":
        print(json.dumps(report, indent=2))
        return EXIT_OK
    print(f"nhat: {report['nhat']}")
    print(f"w:    {report['w']}  integral: {report['w_integral']}")
    print(f"v:    {report['v']}  integral: {report['v_integral']}")
    print(f"alpha: {report['alpha']}")
    print(f"hoskin_deligne: {report['hoskin_deligne']}")
    print(f"deg_AA: {report['deg_AA']}   deg_AK: {report['deg_AK']}")
    print(f"F: {report['F']}  integral: {report['F_integral']}")
    if "F_D" in report:
        print(f"F_D: {report['F_D']}")
    return EXIT_OK


def _specialized_payload(series, spec):
    values = series.specialize(spec)
    return [
        {"t": [_frac_json(e) for e in exp], "value": _frac_json(v)}
        for exp, v in values.items()
    ]


def _cmd_compute(args) -> int:
    g = _load_graph(args.input)
    _emit_graph_warnings(g)
    workers = args.workers if args.workers is not None else _default_workers()
    strictness = "integral" if args.strict_integral else "literal"

    if args.series == "phatd-closed":
        cf = divisorial_closed_form(g)
        if not cf.has_integral_exponents:
            _warn("non-integral exponents present; rendered as exact fractions")
        if args.format == "json":
            print(json.dumps(cf.to_json(), indent=2))
        else:
            print(cf.to_text())
        return EXIT_OK

    if args.series == "pg":
        bound = _parse_bound(args.bound, g.r, "the branch series")
        series = poincare_generalised(
            g, bound, strictness=strictness, workers=workers
        )
    elif args.series == "pdg":
        bound = _parse_bound(args.bound, g.s, "the divisorial series")
        series = poincare_divisorial(
            g, bound, strictness=strictness, workers=workers
        )
    else:  # phatd: expansion, cross-checked against the stratum sum
        bound = _parse_bound(args.bound, g.s, "the extended-semigroup series")
        series = expand(divisorial_closed_form(g), bound)
        direct = divisorial_semigroup_stratum_sum(
            g, bound, strictness="literal", workers=workers
        )
        if series != direct:
            print(
                "cross-check failure: closed form and stratum sum disagree",
                file=sys.stderr,
            )
            return EXIT_CROSSCHECK
        if strictness == "integral":
            series = _drop_nonintegral(series)

    if series.skipped_nonintegral:
        _warn(f"{series.skipped_nonintegral} strata with non-integral exponents dropped")
    if not series.is_integral_lattice:
        _warn("non-integral exponents present; rendered as exact fractions")

    if args.specialize:
        spec = _parse_specialization(args.specialize)
        payload = _specialized_payload(series, spec)
        if args.format == "json":
            print(json.dumps({"bound": [_frac_json(b) for b in series.bound], "terms": payload}, indent=2))
        else:
            for item in payload:
                exps = ",".join(str(x) for x in item["t"])
                print(f"t^({exps}): {item['value']}")
        return EXIT_OK

    if args.format == "json":
        print(json.dumps(series.to_json(), indent=2))
    else:
        print(series.to_text())
    return EXIT_OK


def _drop_nonintegral(series):
    from .series import TruncatedSeries

    out = TruncatedSeries.zero(series.arity, series.bound)
    dropped = 0
    for exp, value in series.sorted_items():
        if exp.is_integral and value.has_integral_lefschetz_exponents:
            out.add_term(exp, value)
        else:
            dropped += 1
    out.skipped_nonintegral = series.skipped_nonintegral + dropped
    return out


def _cmd_check(args) -> int:
    g = _load_graph(args.input)
    _emit_graph_warnings(g)
    workers = args.workers if args.workers is not None else _default_workers()
    scalar = 8
    if args.bound:
        parts = [int(p) for p in args.bound.split(",") if p.strip()]
        if len(parts) != 1:
            raise _UsageError("check takes a single scalar --bound")
        scalar = parts[0]

    failures = []

    def report(name, ok, detail=""):
        status = "ok" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        print(f"{status}: {name}{suffix}")
        if not ok:
            failures.append(name)

    # 1. matrix layer
    from . import _linalg

    p = g.proximity_matrix
    n = g.intersection_matrix
    m = g.m_matrix
    ok = _linalg.determinant(p) == 1
    ok = ok and n == _linalg.transpose(n)
    ok = ok and m == _linalg.transpose(m)
    ok = ok and _linalg.mat_mul(m, _linalg.neg(n)) == _linalg.identity(g.s)
    ok = ok and all(x > 0 for row in m for x in row)
    ok = ok and all(x >= 0 for row in _linalg.inverse(p) for x in row)
    report("matrix layer (P unimodular, N symmetric, M = inverse of -N, M > 0)", ok)

    div_bound = (scalar,) * g.s
    try:
        poincare_divisorial(g, div_bound, workers=workers)
        report("divisorial series: stratum sum vs factored display", True)
    except SeriesCrossCheckError as exc:
        report("divisorial series: stratum sum vs factored display", False, str(exc))

    closed = expand(divisorial_closed_form(g), div_bound)
    direct = divisorial_semigroup_stratum_sum(g, div_bound, workers=workers)
    report(
        "extended-semigroup series: closed form vs stratum sum",
        closed == direct,
    )

    if g.r >= 1:
        branch_bound = (scalar,) * g.r
        try:
            pg = poincare_generalised(g, branch_bound, workers=workers)
            report("branch series: stratum sum vs factored display", True)
        except SeriesCrossCheckError as exc:
            pg = None
            report("branch series: stratum sum vs factored display", False, str(exc))
    else:
        pg = None

    from .series import sym_power_class

    ok = True
    for q in (2, 3):
        for removed in (1, 2, 3):
            for n in range(5):
                spec = Specialization(lefschetz=Fraction(q), default=Fraction(1))
                counted = sym_power_class(None, 1, removed, n).specialize(spec)
                ok = ok and counted == oracles.count_divisors_open_line(q, removed, n)
    report("symmetric-power classes count divisors over GF(2), GF(3)", ok)

    strata = list(enumerate_strata(g, div_bound, mode="divisorial"))
    ok = all(codim_FD(st, g) == codim_F(st, g) == codim_F_literal(st, g) for st in strata)
    ok = ok and all(
        hoskin_deligne(w_of(nhat(st, g), g), g)
        == -(Fraction(1, 2)) * (_deg_sum(st, g))
        for st in strata
    )
    report("codimensions: composed vs expanded form, genus identity", ok)

    if g.is_totally_rational:
        tr = expand_totally_rational(g, div_bound)
        report("totally rational: extended-semigroup reduction", closed == tr)
        if pg is not None:
            tr_pg = poincare_generalised_totally_rational(
                g, (scalar,) * g.r, workers=workers
            )
            report("totally rational: branch-series reduction", pg == tr_pg)
        if g.r == 1 and pg is not None:
            report(
                "classical specialization: L -> 1 matches the value semigroup",
                _semigroup_check(g, pg, scalar),
            )

    return EXIT_CROSSCHECK if failures else EXIT_OK


def _deg_sum(st, g):
    from .codim import deg_AA, deg_AK

    nh = nhat(st, g)
    return deg_AA(nh, g) + deg_AK(nh, g)


def _semigroup_check(g, pg_series, scalar) -> bool:
    attach = g.branch(1).attach
    generators = {g.m_matrix[i][attach - 1] for i in range(g.s)}
    generators.add(g.m_matrix[attach - 1][attach - 1] + 1)
    extra = {g.m_matrix[attach - 1][attach - 1] + k for k in range(1, scalar + 1)}
    gens = sorted(int(x) for x in generators | extra)
    gf = oracles.semigroup_gf(gens, scalar)
    spec = Specialization(lefschetz=Fraction(1), default=Fraction(1))
    specialized = pg_series.specialize(spec)
    support = {int(exp[0]) for exp, value in specialized.items() if value != 0}
    expected = {k for k, hit in enumerate(gf) if hit}
    ok = support == expected
    ok = ok and all(value == 1 for value in specialized.values())
    return ok


def _cmd_oracle(args) -> int:
    if args.oracle_name == "semigroup-gf":
        gens = [int(x) for x in args.generators.split(",") if x.strip()]
        coeffs = oracles.semigroup_gf(gens, args.bound)
        print(" ".join(str(c) for c in coeffs))
    elif args.oracle_name == "monomial-codim":
        weights = tuple(
            tuple(int(x) for x in pair.split(","))
            for pair in args.weights.split(";")
            if pair.strip()
        )
        system = oracles.MonomialValuationSystem(weights)
        w = [int(x) for x in args.w.split(",")]
        print(oracles.monomial_codim(system, w))
    else:
        print(oracles.count_divisors_open_line(args.q, args.removed, args.n))
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "matrices":
            return _cmd_matrices(args)
        if args.command == "codim":
            return _cmd_codim(args)
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        raise AssertionError(f"unhandled command {args.command!r}")
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SeriesCrossCheckError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    except GraphValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
