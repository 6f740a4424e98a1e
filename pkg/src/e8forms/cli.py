"""Command-line surface: group construction reports, descent forms, the
root-system tables, the generating-function search, and the named check
harness.

Exit codes: 0 success, 2 malformed input, 3 internal invariant failure.
JSON output is byte-stable: sorted keys, fixed seeds, no timestamps.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import descent, genfun, killing, qform, roots, verify

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INTERNAL = 3


class ParseError(ValueError):
    pass


def _parse_pair(text: str) -> tuple:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 2:
        raise ParseError(f"expected two comma-separated integers, got {text!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer symbol entry in {text!r}")
    if a == 0 or b == 0:
        raise ParseError("zero symbol entry")
    return a, b


def _parse_ints(text: str, count: int) -> tuple:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != count:
        raise ParseError(f"expected {count} comma-separated integers, got {text!r}")
    try:
        vals = tuple(int(t) for t in parts)
    except ValueError:
        raise ParseError(f"non-integer entry in {text!r}")
    if any(v == 0 for v in vals):
        raise ParseError("zero symbol entry")
    return vals


def _e8_input(q1, q2, q3, q4, c, field) -> killing.E8Input:
    if field not in ("Q", "R"):
        raise ParseError(f"field must be Q or R, got {field!r}")
    if c == 0:
        raise ParseError("c must be nonzero")
    return killing.E8Input(
        field,
        qform.Quaternion(*q1),
        qform.Quaternion(*q2),
        qform.Quaternion(*q3),
        qform.Quaternion(*q4),
        c,
    )


def parse_record(line: str) -> killing.E8Input:
    """One batch record: q1=a,b q2=a,b q3=a,b q4=a,b c=n field=Q|R."""
    fields = {}
    for token in line.split():
        if "=" not in token:
            raise ParseError(f"malformed token {token!r}")
        key, _, val = token.partition("=")
        if key in fields:
            raise ParseError(f"duplicate key {key!r}")
        fields[key] = val
    missing = [k for k in ("q1", "q2", "q3", "q4", "c") if k not in fields]
    if missing:
        raise ParseError(f"missing keys: {', '.join(missing)}")
    extra = [k for k in fields if k not in ("q1", "q2", "q3", "q4", "c", "field")]
    if extra:
        raise ParseError(f"unknown keys: {', '.join(extra)}")
    try:
        c = int(fields["c"])
    except ValueError:
        raise ParseError(f"non-integer c {fields['c']!r}")
    return _e8_input(
        _parse_pair(fields["q1"]),
        _parse_pair(fields["q2"]),
        _parse_pair(fields["q3"]),
        _parse_pair(fields["q4"]),
        c,
        fields.get("field", "Q"),
    )


def format_record(inp: killing.E8Input) -> str:
    qs = " ".join(
        f"q{i}={q.a},{q.b}" for i, q in enumerate(inp.quaternions, start=1)
    )
    return f"{qs} c={inp.c} field={inp.field}"


def _emit(payload, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        _emit_text(payload, out)


def _emit_text(payload, out, indent: str = "") -> None:
    if isinstance(payload, dict):
        width = max((len(str(k)) for k in payload), default=0)
        for k in payload:
            v = payload[k]
            if isinstance(v, (dict, list)):
                out.write(f"{indent}{k}:\n")
                _emit_text(v, out, indent + "  ")
            else:
                out.write(f"{indent}{str(k):<{width}}  {v}\n")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _emit_text(v, out, indent)
                out.write("\n")
            else:
                out.write(f"{indent}{v}\n")
    else:
        out.write(f"{indent}{payload}\n")


# ---------------------------------------------------------------------------
# construct


def run_construct(args) -> int:
    out = sys.stdout
    if args.batch:
        reports = []
        worst = EXIT_OK
        with open(args.batch) as fh:
            lines = fh.readlines()
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            entry = {"line": lineno, "record": line}
            try:
                inp = parse_record(line)
            except ParseError as e:
                entry["error"] = str(e)
                worst = max(worst, EXIT_PARSE)
                reports.append(entry)
                continue
            try:
                entry["report"] = killing.build_report(inp)
            except killing.InternalCheckError as e:
                entry["error"] = f"internal: {e}"
                worst = EXIT_INTERNAL
            reports.append(entry)
        sink = open(args.out, "w") if args.out else out
        try:
            _emit(reports, args.json, sink)
        finally:
            if args.out:
                sink.close()
        return worst
    for flag in ("q1", "q2", "q3", "q4", "c"):
        if getattr(args, flag) is None:
            raise ParseError(f"--{flag} is required without --batch")
    inp = _e8_input(
        _parse_pair(args.q1),
        _parse_pair(args.q2),
        _parse_pair(args.q3),
        _parse_pair(args.q4),
        args.c,
        args.field,
    )
    try:
        report = killing.build_report(inp)
    except killing.InternalCheckError as e:
        print(f"internal invariant failure: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(report, args.json, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# tits


def run_tits(args) -> int:
    inp = killing.TitsInput(
        args.field,
        _parse_ints(args.gamma3, 3),
        _parse_ints(args.phi3, 3),
        _parse_ints(args.phi5, 5),
    )
    rep = killing.tits_construction(inp)
    payload = {
        "redkill": qform.format_form(rep["redkill"]),
        "kappa": qform.format_form(rep["kappa"]),
        "kappa_i_level": rep["kappa_i_level"],
        "rost15_zero": rep["rost15_zero"],
        "signature": rep["signature"],
    }
    _emit(payload, args.json, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# descent and crux


def run_descent(args) -> int:
    if args.a == 0 or args.c == 0:
        raise ParseError("a and c must be nonzero")
    if qform.square_class(args.a) == 1:
        raise ParseError("a must be a nonsquare")
    eta = descent.QuadExtMatrix.build(
        args.a, [[0, args.c], [Fraction(1, args.c), 0]]
    )
    form = descent.descent_form(eta, descent.second_diagonal(2))
    payload = {
        "a": args.a,
        "c": args.c,
        "form": qform.format_form(form),
        "expected": qform.format_form(
            qform.QForm.diagonal((2 * args.c, -2 * args.c * args.a))
        ),
        "witt_equal_expected": qform.witt_equal(
            form, qform.QForm.diagonal((2 * args.c, -2 * args.c * args.a))
        ),
    }
    _emit(payload, args.json, sys.stdout)
    return EXIT_OK


def run_crux(args) -> int:
    if args.a == 0 or args.b == 0:
        raise ParseError("a and b must be nonzero")
    if qform.square_class(args.a) == 1:
        raise ParseError("a must be a nonsquare")
    rep = descent.crux_form(args.a, args.b)
    payload = {
        "a": args.a,
        "b": args.b,
        "form": qform.format_form(rep["form"]),
        "plane_forms": [qform.format_form(p) for p in rep["plane_forms"]],
        "witt_index": rep["witt_index"],
        "hyperbolic": rep["hyperbolic"],
    }
    _emit(payload, args.json, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# roots


def run_roots(args) -> int:
    systems = []
    for name in ("A1", "C4", "D4", "D8", "E8"):
        sys_ = roots.RootSystem(name)
        systems.append(
            {
                "system": name,
                "roots": len(sys_.roots),
                "coxeter": sys_.coxeter_number(),
                "dual_coxeter": sys_.dual_coxeter_number(),
            }
        )
    maps = {
        "d8_in_e8": roots.d8_in_e8(),
        "a1_in_d8": roots.a1_in_d8(),
        "c4_in_d8": roots.c4_in_d8(),
        "a1_in_e8": roots.a1_in_e8(),
        "c4_in_e8": roots.c4_in_e8(),
    }
    embeddings = []
    for name, m in maps.items():
        mismatches = roots.verify_embedding([m])
        embeddings.append(
            {
                "map": name,
                "mismatches": len(mismatches),
                "rost_multiplier": roots.rost_multiplier(m),
            }
        )
    e8 = roots.RootSystem("E8")
    cent = roots.centralizer_roots(e8, roots.c4_in_e8().columns)
    sub = roots.recognize_subsystem(e8, cent)
    payload = {
        "systems": systems,
        "embeddings": embeddings,
        "c4_centralizer": {
            "type": sub.type_name,
            "roots": len(cent),
            "highest_root_ambient": list(sub.highest_root_ambient()),
        },
    }
    _emit(payload, args.json, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# appendix


def run_appendix(args) -> int:
    if args.r is not None:
        plans = [("given", args.r)]
    else:
        plans = genfun.interpretation_rs(args.s, args.deg or 2**args.s)
    searches = []
    for label, r in plans:
        sols = genfun.search_equality(args.s, r, args.n)
        searches.append(
            {
                "reading": label,
                "r": r,
                "solutions": [list(js) for js in sols],
                "all_leading_ge_s": all(js[0] >= args.s for js in sols),
                "none_below_s": not any(js[0] < args.s for js in sols),
            }
        )
    payload = {"s": args.s, "searches": searches}
    _emit(payload, args.json, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-paper


def run_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    try:
        results = verify.run_suites(names)
    except ValueError as e:
        raise ParseError(str(e))
    payload = [
        {"check_id": r.check_id, "status": r.status, "details": r.details}
        for r in results
    ]
    counts = {"pass": 0, "fail": 0, "not_witnessed": 0, "skipped": 0}
    for r in results:
        counts[r.status] += 1
    if args.json:
        _emit({"checks": payload, "counts": counts}, True, sys.stdout)
    else:
        for r in results:
            line = f"{r.status:>13}  {r.check_id}"
            if r.details:
                line += f"  ({r.details})"
            print(line)
        print(
            f"{counts['pass']} passed, {counts['fail']} failed, "
            f"{counts['not_witnessed']} not witnessed, {counts['skipped']} skipped"
        )
    return EXIT_OK if counts["fail"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="e8forms",
        description="Exact Killing-form and Witt-class computations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="reduced Killing form report for a quadruple of quaternion algebras")
    p.add_argument("--q1", help="symbol entries a,b")
    p.add_argument("--q2", help="symbol entries a,b")
    p.add_argument("--q3", help="symbol entries a,b")
    p.add_argument("--q4", help="symbol entries a,b")
    p.add_argument("--c", type=int, help="scalar square class")
    p.add_argument("--field", default="Q", choices=("Q", "R"))
    p.add_argument("--json", action="store_true")
    p.add_argument("--batch", help="file of records, one per line")
    p.add_argument("--out", help="output file for batch mode")
    p.set_defaults(handler=run_construct)

    p = sub.add_parser("tits", help="report for the octonion-Albert construction")
    p.add_argument("--gamma3", required=True, help="three Pfister entries a,b,c")
    p.add_argument("--phi3", required=True, help="three Pfister entries a,b,c")
    p.add_argument("--phi5", required=True, help="five Pfister entries extending phi3")
    p.add_argument("--field", default="Q", choices=("Q", "R"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=run_tits)

    p = sub.add_parser("descent", help="descend the rank-2 split form along a quadratic cocycle")
    p.add_argument("--a", type=int, required=True, help="nonsquare extension parameter")
    p.add_argument("--c", type=int, required=True, help="cocycle parameter")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=run_descent)

    p = sub.add_parser("crux", help="descend the 8-dimensional form along the two-parameter cocycle")
    p.add_argument("--a", type=int, required=True, help="nonsquare extension parameter")
    p.add_argument("--b", type=int, required=True, help="cocycle parameter")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=run_crux)

    p = sub.add_parser("roots", help="root-system counts, embedding tables, centralizer")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=run_roots)

    p = sub.add_parser("appendix", help="generating-function equality search")
    p.add_argument("--s", type=int, required=True, help="2-adic exponent of the index")
    p.add_argument("--r", type=int, help="factor count (default: both readings)")
    p.add_argument("--deg", type=int, help="algebra degree for the entry-count reading")
    p.add_argument("--n", type=int, help="truncation order (default 2^(s+1))")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=run_appendix)

    p = sub.add_parser("verify-paper", help="run the named check suites")
    p.add_argument(
        "--suite",
        default="all",
        choices=("all",) + tuple(verify.SUITES),
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=run_verify)

    return parser


_VALUE_FLAGS = ("--q1", "--q2", "--q3", "--q4", "--gamma3", "--phi3", "--phi5",
                "--c", "--a", "--b")


def _preparse(argv) -> list:
    """Glue negative values onto their flags so argparse accepts them."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            nxt = argv[i + 1]
            if len(nxt) > 1 and nxt[0] == "-" and nxt[1].isdigit():
                out.append(f"{tok}={nxt}")
                i += 2
                continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_preparse(sys.argv[1:] if argv is None else argv))
    try:
        return args.handler(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (killing.InternalCheckError, AssertionError) as e:
        print(f"internal invariant failure: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
