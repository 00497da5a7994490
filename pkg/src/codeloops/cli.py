"""Command-line interface.

Subcommands: degree, polarize, interpolate, anf, build-code, level,
build-loop, verify, demo-paper-example.  All output is deterministic:
identical inputs (and --seed, reserved for randomized suites) produce
byte-identical output.  --json switches any command to a JSON report;
--figures DIR additionally renders matplotlib figures into DIR.

Exit codes: 0 success, 2 parse or configuration error, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .codes import (
    SIMPLEX_PRESETS,
    BinaryCode,
    build_code,
    codeword_from_str,
    gf2_rank,
    level_of_rows,
    verify_build,
)
from .field import Field
from .loops import (
    CodeLoop,
    is_moufang,
    latin_square_report,
    loop_to_json,
    p_from_loop,
    solve_eta,
    verify_loop_identities,
)
from .polarization import (
    INFINITY,
    comb_degree_formula,
    derived_form_eval,
    monomial_p_weight,
)
from .poly import (
    ReducedPoly,
    SubsetFamily,
    enumerate_points,
    format_poly,
    from_complemented_anf,
    interpolate,
    parse_poly,
    to_complemented_anf,
    value_table_from_json,
)

PAPER_EXAMPLE_POLY = "x2 + x1*x3 + x1*x2*x3"
POLARIZE_DUMP_CAP = 1 << 14  # max tuples for --all dumps


def _level_json(lvl):
    return "infinity" if lvl is INFINITY else lvl


def _cdeg_json(cdeg):
    return "infinity" if cdeg is INFINITY else cdeg


def _emit(obj: dict, as_json: bool, human_lines):
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        for line in human_lines:
            print(line)


def _read_matrix_file(path: str) -> list[str]:
    with open(path, "r", encoding="utf-8") as fh:
        rows = [line.strip() for line in fh if line.strip()]
    return rows


def _rows_from_strings(rows: list[str]) -> tuple[list[int], int]:
    parsed = [codeword_from_str(r) for r in rows]
    lengths = {len(r.replace(",", "").replace(" ", "")) for r in rows}
    if len(lengths) > 1:
        raise ValueError("generator rows have unequal lengths")
    return parsed, (lengths.pop() if lengths else 0)


def _poly_bits_by_mask(poly: ReducedPoly) -> list[int]:
    """GF(2) value table indexed by coordinate masks (bit i = x_{i+1})."""
    f = poly.field
    elems = (f.zero, f.one)
    out = []
    for mask in range(1 << poly.n):
        pt = tuple(elems[mask >> i & 1] for i in range(poly.n))
        out.append(poly.evaluate(pt).enc)
    return out


def _build_options(args, poly):
    simplex_matrix = None
    if getattr(args, "preset", None):
        if args.preset not in SIMPLEX_PRESETS:
            raise ValueError(
                f"unknown preset {args.preset!r}; available: {', '.join(sorted(SIMPLEX_PRESETS))}"
            )
        simplex_matrix = SIMPLEX_PRESETS[args.preset]
    if getattr(args, "hamming_matrix", None):
        simplex_matrix = _read_matrix_file(args.hamming_matrix)
    j_order = None
    if getattr(args, "order_j", None):
        j_order = SubsetFamily.from_text(poly.n, args.order_j)
    return j_order, simplex_matrix


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_degree(args) -> int:
    field = Field.from_spec(args.field)
    poly = parse_poly(field, args.expr)
    monomials = [
        {
            "monomial": format_poly(ReducedPoly(field, poly.n, ((exps, coeff),))),
            "pweight": monomial_p_weight(exps, field.p),
        }
        for exps, coeff in poly.terms
    ]
    cdeg = comb_degree_formula(poly)
    obj = {
        "field": field.spec_string(),
        "n": poly.n,
        "polynomial": format_poly(poly),
        "monomials": monomials,
        "cdeg": _cdeg_json(cdeg),
    }
    lines = [
        f"field: GF({field.q})",
        f"polynomial: {format_poly(poly)}",
    ]
    if monomials:
        lines.append("monomial p-weight sums:")
        lines.extend(f"  {m['monomial']}: {m['pweight']}" for m in monomials)
    lines.append(f"cdeg: {_cdeg_json(cdeg)}")
    _emit(obj, args.json, lines)
    return 0


def cmd_polarize(args) -> int:
    field = Field.from_spec(args.field)
    if args.all:
        return _polarize_dump(args, field)
    if not args.vec:
        raise ValueError("at least one --vec is required")
    vectors = []
    for spec in args.vec:
        try:
            encs = [int(tok) for tok in spec.split(",")]
        except ValueError:
            raise ValueError(f"malformed vector {spec!r}; expected comma-separated encodings") from None
        vectors.append(tuple(field.element(e) for e in encs))
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("all vectors must have the same number of coordinates")
    s = len(vectors)
    if args.s is not None and args.s != s:
        raise ValueError(f"--s {args.s} does not match the {s} vectors given")
    poly = parse_poly(field, args.expr, n=n)
    value = derived_form_eval(poly, vectors)
    obj = {"field": field.spec_string(), "s": s, "value": value.enc}
    _emit(obj, args.json, [str(value.enc)])
    return 0


def _polarize_dump(args, field) -> int:
    """Dump D^s f on every tuple, indexed by tuple encoding (last vector
    fastest, vectors by point enumeration order)."""
    if args.s is None:
        raise ValueError("--all requires --s")
    if args.s < 1:
        raise ValueError("--s must be at least 1")
    poly = parse_poly(field, args.expr, n=args.n)
    qn = field.q ** poly.n
    total = qn ** args.s
    if total > POLARIZE_DUMP_CAP:
        raise ValueError(f"{total} tuples exceed the dump cap {POLARIZE_DUMP_CAP}")
    points = list(enumerate_points(field, poly.n))
    values = []
    for idx in range(total):
        sel, k = [], idx
        for _ in range(args.s):
            sel.append(k % qn)
            k //= qn
        tup = tuple(points[i] for i in reversed(sel))
        values.append(derived_form_eval(poly, tup).enc)
    obj = {"field": field.spec_string(), "n": poly.n, "s": args.s, "values": values}
    _emit(obj, args.json, [" ".join(str(v) for v in values)])
    return 0


def cmd_interpolate(args) -> int:
    with open(args.table, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    field, n, table = value_table_from_json(data)
    poly = interpolate(field, n, table)
    obj = {"field": field.spec_string(), "n": n, "polynomial": format_poly(poly)}
    _emit(obj, args.json, [format_poly(poly)])
    return 0


def cmd_anf(args) -> int:
    field = Field.from_spec(args.field)
    if field.q != 2:
        raise ValueError("anf requires the two-element field")
    if args.from_j is not None:
        if args.n is None:
            raise ValueError("--from-j requires --n")
        family = SubsetFamily.from_text(args.n, args.from_j)
        poly = from_complemented_anf(family, field)
        obj = {"field": field.spec_string(), "n": args.n, "polynomial": format_poly(poly)}
        _emit(obj, args.json, [format_poly(poly)])
    else:
        if args.expr is None:
            raise ValueError("give a polynomial or --from-j")
        poly = parse_poly(field, args.expr, n=args.n)
        family = to_complemented_anf(poly)
        obj = {
            "field": field.spec_string(),
            "n": poly.n,
            "subsets": [list(s) for s in family],
        }
        _emit(obj, args.json, [family.to_text()])
    return 0


def _render_code_figures(args, rows, length):
    if getattr(args, "figures", None):
        from . import figures

        figures.ensure_dir(args.figures)
        figures.save_weight_distribution(rows, length, os.path.join(args.figures, "weights.png"))


def cmd_build_code(args) -> int:
    field = Field.from_spec(args.field)
    poly = parse_poly(field, args.expr)
    j_order, simplex_matrix = _build_options(args, poly)

    if args.check:
        row_strings = _read_matrix_file(args.check)
        rows, length = _rows_from_strings(row_strings)
        report = verify_build(poly, row_strings)
        obj = {
            "field": field.spec_string(),
            "polynomial": format_poly(poly),
            "report": {**report, "level": _level_json(report["level"])},
        }
        lines = [f"checking {args.check} against P = {format_poly(poly)}"]
        lines += _report_lines(report)
        _emit(obj, args.json, lines)
        _render_code_figures(args, rows, length)
        return 3 if report["violations"] else 0

    build = build_code(poly, j_order=j_order, simplex_matrix=simplex_matrix)
    report = build.verify()
    rows = build.code.to_strings(block=build.block_length)
    obj = {
        "field": field.spec_string(),
        "polynomial": format_poly(poly),
        "r": build.r,
        "subsets": [list(s) for s in build.subsets],
        "rows": rows,
        "report": {**report, "level": _level_json(report["level"])},
    }
    lines = [
        f"polynomial: {format_poly(poly)}",
        f"J: {build.subsets.to_text()}",
        f"r: {build.r}",
        "generator matrix:",
        *rows,
    ]
    lines += _report_lines(report)
    _emit(obj, args.json, lines)
    _render_code_figures(args, build.code.rows, build.code.length)
    return 3 if report["violations"] else 0


def _report_lines(report) -> list[str]:
    lines = [
        f"level: {_level_json(report['level'])}",
        f"length: {report['length']}",
        f"dim: {report['dim']}",
    ]
    if report["violations"]:
        lines.append("violations:")
        lines.extend(f"  {v}" for v in report["violations"])
    else:
        lines.append("violations: none")
    return lines


def cmd_level(args) -> int:
    rows, length = _rows_from_strings(_read_matrix_file(args.matrix))
    lvl = level_of_rows(rows)
    obj = {"level": _level_json(lvl), "dim": gf2_rank(rows), "length": length}
    _emit(
        obj,
        args.json,
        [f"level: {obj['level']}", f"dim: {obj['dim']}", f"length: {obj['length']}"],
    )
    _render_code_figures(args, rows, length)
    return 0


def cmd_verify(args) -> int:
    field = Field.from_spec(args.field)
    poly = parse_poly(field, args.expr)
    report = verify_build(poly, _read_matrix_file(args.matrix))
    obj = {**report, "level": _level_json(report["level"])}
    _emit(obj, args.json, _report_lines(report))
    return 3 if report["violations"] else 0


def _loop_pipeline(code: BinaryCode, poly: ReducedPoly | None):
    eta = solve_eta(code)
    loop = CodeLoop(eta)
    latin = latin_square_report(loop)
    moufang = is_moufang(loop)
    identities = verify_loop_identities(loop)
    roundtrip = None
    if poly is not None:
        recovered = p_from_loop(loop)
        roundtrip = recovered == _poly_bits_by_mask(poly)
    checks = {
        "latin_square": latin["ok"],
        "moufang": moufang["ok"],
        "identities": identities["ok"],
        "squares": len(identities["squares"]),
        "roundtrip": roundtrip,
    }
    violations = list(latin["violations"]) + list(identities["violations"])
    if not moufang["ok"]:
        violations.append(f"Moufang identity fails at {moufang['violation']}")
    if roundtrip is False:
        violations.append("squaring map does not reproduce P")
    return loop, checks, violations


def cmd_build_loop(args) -> int:
    poly = None
    if args.code:
        rows, length = _rows_from_strings(_read_matrix_file(args.code))
        nonzero = [r for r in rows if r]
        if len(nonzero) != gf2_rank(nonzero):
            raise ValueError("generator rows are linearly dependent; give a basis")
        code = BinaryCode(length, nonzero)
    else:
        if not args.expr:
            raise ValueError("give a polynomial or --code FILE")
        field = Field.from_spec(args.field)
        poly = parse_poly(field, args.expr)
        j_order, simplex_matrix = _build_options(args, poly)
        build = build_code(poly, j_order=j_order, simplex_matrix=simplex_matrix)
        report = build.verify()
        if report["violations"]:
            _emit(
                {"report": {**report, "level": _level_json(report["level"])}},
                args.json,
                _report_lines(report),
            )
            return 3
        code = build.code

    loop, checks, violations = _loop_pipeline(code, poly)
    obj = loop_to_json(loop)
    obj["checks"] = checks
    obj["violations"] = violations

    if args.export_cayley:
        with open(args.export_cayley, "w", encoding="utf-8") as fh:
            for row in loop.cayley():
                fh.write(" ".join(str(v) for v in row) + "\n")

    lines = [
        f"loop order: {loop.order}",
        f"latin square: {'ok' if checks['latin_square'] else 'FAIL'}",
        f"moufang: {'ok' if checks['moufang'] else 'FAIL'}",
        f"identities: {'ok' if checks['identities'] else 'FAIL'}",
        f"squares: {checks['squares']}",
    ]
    if checks["roundtrip"] is not None:
        lines.append(f"squaring map reproduces P: {'ok' if checks['roundtrip'] else 'FAIL'}")
    if violations:
        lines.append("violations:")
        lines.extend(f"  {v}" for v in violations)

    if args.json:
        print(json.dumps(obj, indent=2))
    else:
        for line in lines:
            print(line)

    if getattr(args, "figures", None):
        from . import figures

        figures.ensure_dir(args.figures)
        figures.save_cayley_table(loop, os.path.join(args.figures, "cayley.png"))
        figures.save_eta_table(loop.eta, os.path.join(args.figures, "eta.png"))

    return 3 if violations else 0


def cmd_demo(args) -> int:
    field = Field(2)
    poly = parse_poly(field, PAPER_EXAMPLE_POLY)
    build = build_code(poly, simplex_matrix=SIMPLEX_PRESETS["paper-example"])
    report = build.verify()
    rows = build.code.to_strings(block=build.block_length)

    e3 = build.map(0b100)
    esum = build.map(0b111)
    loop, checks, violations = _loop_pipeline(build.code, poly)
    violations = list(report["violations"]) + violations

    obj = {
        "polynomial": format_poly(poly),
        "subsets": [list(s) for s in build.subsets],
        "rows": rows,
        "w_c3": e3.bit_count(),
        "w_c1_c2_c3": esum.bit_count(),
        "report": {**report, "level": _level_json(report["level"])},
        "loop": {"order": loop.order, "checks": checks},
        "violations": violations,
    }
    lines = [
        f"P = {format_poly(poly)}",
        f"J: {build.subsets.to_text()}",
        "generator matrix:",
        *rows,
        f"w(c3) = {e3.bit_count()}, w(c3)/4 mod 2 = {(e3.bit_count() >> 2) % 2}",
        f"w(c1+c2+c3) = {esum.bit_count()}, w/4 mod 2 = {(esum.bit_count() >> 2) % 2}",
    ]
    lines += _report_lines(report)
    lines += [
        f"loop order: {loop.order}",
        f"latin square: {'ok' if checks['latin_square'] else 'FAIL'}",
        f"moufang: {'ok' if checks['moufang'] else 'FAIL'}",
        f"identities: {'ok' if checks['identities'] else 'FAIL'}",
        f"squaring map reproduces P: {'ok' if checks['roundtrip'] else 'FAIL'}",
    ]
    if violations:
        lines.append("violations:")
        lines.extend(f"  {v}" for v in violations)
    _emit(obj, args.json, lines)

    if getattr(args, "figures", None):
        from . import figures

        figures.ensure_dir(args.figures)
        figures.save_weight_distribution(
            build.code.rows, build.code.length, os.path.join(args.figures, "weights.png")
        )
        figures.save_cayley_table(loop, os.path.join(args.figures, "cayley.png"))
        figures.save_eta_table(loop.eta, os.path.join(args.figures, "eta.png"))

    return 3 if violations else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codeloops",
        description="combinatorial degree, divisibility codes and code loops over small finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, field_default="2"):
        p.add_argument("--field", default=field_default, help="field spec p or p^e (default %(default)s)")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized suites (current commands are deterministic)")

    p = sub.add_parser("degree", help="combinatorial degree of a polynomial map")
    p.add_argument("expr", help="polynomial, e.g. 'x1^3*x2^7 + x1*x2*x3^5'")
    common(p)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("polarize", help="evaluate a derived form at a tuple of vectors")
    p.add_argument("expr", help="polynomial")
    p.add_argument("--vec", action="append", default=[],
                   help="one vector as comma-separated encodings; repeat for s arguments")
    p.add_argument("--s", type=int, default=None, help="arity check against the vector count")
    p.add_argument("--all", action="store_true",
                   help="dump the form on every tuple, indexed by tuple encoding (needs --s)")
    p.add_argument("--n", type=int, default=None, help="dimension override for --all")
    common(p)
    p.set_defaults(func=cmd_polarize)

    p = sub.add_parser("interpolate", help="reduced polynomial from a JSON value table")
    p.add_argument("table", help="JSON file {field, n, table}")
    common(p)
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("anf", help="complemented algebraic normal form over GF(2)")
    p.add_argument("expr", nargs="?", default=None, help="polynomial over GF(2)")
    p.add_argument("--from-j", dest="from_j", default=None,
                   help="inverse transform from a subset family, e.g. '1,2;2,3;1,2,3'")
    p.add_argument("--n", type=int, default=None, help="number of variables")
    common(p)
    p.set_defaults(func=cmd_anf)

    p = sub.add_parser("build-code", help="build and verify the level-r code of a polynomial")
    p.add_argument("expr", help="constant-free polynomial over GF(2)")
    p.add_argument("--preset", default=None, help="named simplex generator preset (paper-example)")
    p.add_argument("--hamming-matrix", dest="hamming_matrix", default=None,
                   help="file with an explicit dual Hamming generator matrix")
    p.add_argument("--order-J", dest="order_j", default=None,
                   help="explicit subset-family order, e.g. '1,2;2,3;1,2,3'")
    p.add_argument("--check", default=None, help="verify this generator matrix file instead of building")
    p.add_argument("--figures", default=None, help="directory for report figures")
    common(p)
    p.set_defaults(func=cmd_build_code)

    p = sub.add_parser("level", help="divisibility level of a generator matrix")
    p.add_argument("matrix", help="file with rows of 0/1 characters")
    p.add_argument("--figures", default=None, help="directory for report figures")
    common(p)
    p.set_defaults(func=cmd_level)

    p = sub.add_parser("verify", help="check a generator matrix against a polynomial")
    p.add_argument("expr", help="constant-free polynomial over GF(2)")
    p.add_argument("--matrix", required=True, help="generator matrix file to check")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("build-loop", help="polynomial or code to verified code loop")
    p.add_argument("expr", nargs="?", default=None, help="constant-free polynomial over GF(2)")
    p.add_argument("--code", default=None, help="generator matrix file (skips the code build)")
    p.add_argument("--preset", default=None, help="named simplex generator preset")
    p.add_argument("--hamming-matrix", dest="hamming_matrix", default=None,
                   help="file with an explicit dual Hamming generator matrix")
    p.add_argument("--order-J", dest="order_j", default=None, help="explicit subset-family order")
    p.add_argument("--export-cayley", dest="export_cayley", default=None,
                   help="write the Cayley table to this file")
    p.add_argument("--figures", default=None, help="directory for report figures")
    common(p)
    p.set_defaults(func=cmd_build_loop)

    p = sub.add_parser("demo-paper-example", help="reproduce the built-in worked example end to end")
    p.add_argument("--figures", default=None, help="directory for report figures")
    common(p)
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
