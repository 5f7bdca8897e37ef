"""Command-line front end.

Exit status: 0 on success, pass or admissible (also for inapplicable or
inconclusive verdicts), 1 on a failing or blocked verdict, 2 on usage, file
or validation errors.  ``-`` stands for standard input or output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import actiondata, localize, obstruct, surgery
from .actiondata import ActionDataError, ManifoldInvariants, rational_to_json
from .exactalg import ArgumentError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None


def _load(path: str) -> actiondata.CircleActionData:
    try:
        return actiondata.parse(_read(path))
    except actiondata.ValidationError as exc:
        lines = "\n".join(f"  {v}" for v in exc.violations)
        raise CliError(f"{path}: invalid action data:\n{lines}") from None
    except actiondata.ParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def _write(path: Optional[str], payload: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
        return
    try:
        with open(path, "wb") as fh:
            fh.write(payload)
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# reports

def invariants_report(data: actiondata.CircleActionData) -> dict:
    inv = localize.invariants(data)
    doc = actiondata.invariants_to_document(inv)
    try:
        method = localize.signature(data).method
    except ArgumentError:
        method = None
    doc["signature_method"] = method
    doc["integral"] = {p.key(): v.denominator == 1 for p, v in inv.pontryagin.items()}
    doc["convention"] = localize.CONVENTION
    notes = [n for n in inv.notes if n != localize.CONVENTION]
    if notes:
        doc["notes"] = notes
    else:
        doc.pop("notes", None)
    return doc


def _format_invariants(doc: dict) -> str:
    lines = []
    if doc.get("label"):
        lines.append(f"manifold: {doc['label']}")
    lines.append(f"dimension: {doc['dimension']}")
    lines.append(f"euler: {doc['euler']}")
    sig = doc["signature"]
    method = doc.get("signature_method")
    lines.append(f"signature: {'unknown' if sig is None else sig}" + (f" ({method})" if method else ""))
    for key, value in doc["pontryagin"].items():
        mono = actiondata.Partition.parse(key).monomial()
        flag = "" if doc.get("integral", {}).get(key, True) else "  [not integral: unrealizable data]"
        lines.append(f"{mono}: {'unknown' if value is None else value}{flag}")
    for note in doc.get("notes", []):
        lines.append(f"note: {note}")
    if "convention" in doc:
        lines.append(f"convention: {doc['convention']}")
    return "\n".join(lines)


def _format_verdict(verdict: localize.Verdict) -> str:
    if not verdict.applicable:
        status = "inapplicable"
    else:
        status = "pass" if verdict.passed else "fail"
    lines = [f"theorem {verdict.theorem}: {status}"]
    for key, value in verdict.details.items():
        lines.append(f"  {key}: {value}")
    return "\n".join(lines)


def _format_obstruction(inv: ManifoldInvariants, verdict: obstruct.ObstructionVerdict) -> str:
    name = inv.label or f"{inv.dimension}-manifold"
    word = {"yes": "admissible", "no": "blocked", "inconclusive": "inconclusive"}[verdict.admissible]
    lines = [f"{name}: {word}"]
    for cond, anchor, observed in verdict.violations:
        lines.append(f"  violates {cond} ({anchor}); observed {rational_to_json(observed)}")
    if verdict.admissible == "inconclusive":
        lines.append(f"  unknown: {', '.join(verdict.missing)}")
    if verdict.critical_points is not None:
        lines.append(f"  critical points: {verdict.critical_points}")
    lines.append("  (necessary conditions only)")
    return "\n".join(lines)


def _format_bookkeeping(report: dict) -> str:
    op = report["op"]
    if op["op"] == "blow_up":
        head = f"blow-up at point {op['points'][0]} (exponents {op['exponents']}, sign {op['sign']:+d}, {op['regime']})"
    else:
        head = f"connected sum at points {op['points'][0]},{op['points'][1]} (exponents {op['exponents']})"
    lines = [head]
    after, pred = report["after"], report["predicted"]
    for key in ("euler", "signature"):
        lines.append(f"  {key}: after {after[key]}, predicted {pred[key]}, delta {report['delta'][key]}")
    for key, value in after["pontryagin"].items():
        mono = actiondata.Partition.parse(key).monomial()
        lines.append(f"  {mono}: after {value}, predicted {pred['pontryagin'][key]}")
    lines.append(f"  consistent: {'yes' if report['consistent'] else 'NO'}")
    lines.append(f"  convention: {localize.CONVENTION}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands

def cmd_gen(args) -> int:
    if args.kind == "cp":
        data = actiondata.cp_action(args.weights)
    else:
        data = actiondata.sphere_action(args.exponents)
    _write(args.output, actiondata.serialize(data))
    return EXIT_OK


def cmd_invariants(args) -> int:
    data = _load(args.file)
    doc = invariants_report(data)
    print(_dump(doc) if args.json else _format_invariants(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    data = _load(args.file)
    verdict = localize.VERIFIERS[args.theorem](data)
    print(_dump(verdict.to_json()) if args.json else _format_verdict(verdict))
    if verdict.applicable and not verdict.passed:
        return EXIT_FAIL
    return EXIT_OK


def _emit_surgery(args, result, report) -> int:
    _write(args.output, actiondata.serialize(result))
    text = _format_bookkeeping(report)
    # keep stdout clean when it carries the dataset
    stream = sys.stderr if args.output in (None, "-") else sys.stdout
    print(text, file=stream)
    return EXIT_OK if report["consistent"] else EXIT_FAIL


def cmd_blowup(args) -> int:
    data = _load(args.file)
    op = surgery.describe_blow_up(data, args.point)
    result = surgery.blow_up(data, args.point)
    return _emit_surgery(args, result, surgery.bookkeeping(data, result, op))


def cmd_consum(args) -> int:
    if args.file_a == "-" and args.file_b == "-":
        raise CliError("only one input can be read from standard input")
    if len(args.points) != 2:
        raise CliError("--points needs exactly two indices I,J")
    a, b = _load(args.file_a), _load(args.file_b)
    i, j = args.points
    op = surgery.describe_connected_sum(a, i, b, j)
    result = surgery.connected_sum(a, i, b, j)
    return _emit_surgery(args, result, surgery.bookkeeping((a, b), result, op))


def cmd_obstruct(args) -> int:
    direct = (args.euler, args.signature, args.p1) != (None, None, None)
    if direct and (args.manifold is not None or args.file is not None):
        raise CliError("--euler/--signature/--p1 cannot be combined with --manifold or --file")
    if args.manifold is not None:
        inv = obstruct.catalog(args.manifold)
    elif args.file is not None:
        raw = _read(args.file)
        try:
            inv = actiondata.invariants_from_document(json.loads(raw))
        except json.JSONDecodeError as exc:
            raise CliError(f"{args.file}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        except actiondata.ParseError as exc:
            raise CliError(f"{args.file}: {exc}") from None
    else:
        if args.euler is None or args.signature is None:
            raise CliError("obstruct needs --manifold, --file, or both --euler and --signature")
        pont = {actiondata.Partition((1,)): args.p1}
        inv = ManifoldInvariants(4, args.euler, args.signature, pont, "4-manifold")
    verdict = obstruct.check_domain(inv)
    if args.json:
        doc = verdict.to_json()
        doc["invariants"] = actiondata.invariants_to_document(inv)
        print(_dump(doc))
    else:
        print(_format_obstruction(inv, verdict))
    return EXIT_FAIL if verdict.admissible == "no" else EXIT_OK


def cmd_catalog(args) -> int:
    entries = []
    for name, example in obstruct.EXAMPLES.items():
        inv = obstruct.catalog(example)
        entries.append({"name": name, "example": example, "invariants": actiondata.invariants_to_document(inv)})
    if args.json:
        print(_dump(entries))
        return EXIT_OK
    def shown(value):
        return "unknown" if value is None else value

    for entry in entries:
        inv = entry["invariants"]
        pont = ", ".join(f"{actiondata.Partition.parse(k).monomial()}={shown(v)}"
                         for k, v in inv["pontryagin"].items())
        print(f"{entry['name']:<12} e.g. {entry['example']:<9} dim {inv['dimension']:<3} "
              f"euler {shown(inv['euler'])}  signature {shown(inv['signature'])}" + (f"  {pont}" if pont else ""))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_help(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bottsum", description="Characteristic numbers of circle actions from fixed-point data.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate standard action data")
    gen_sub = gen.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    cp = gen_sub.add_parser("cp", help="linear action on CP^n")
    cp.add_argument("--weights", type=_ints, required=True, help="pairwise distinct integers a_0,...,a_n")
    cp.add_argument("-o", "--output")
    sph = gen_sub.add_parser("sphere", help="rotation of S^{2n}")
    sph.add_argument("--exponents", type=_ints, required=True, help="positive integers m_1,...,m_n")
    sph.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_gen)

    inv = sub.add_parser("invariants", help="Euler number, signature and Pontryagin numbers")
    inv.add_argument("file")
    inv.add_argument("--json", action="store_true")
    inv.set_defaults(func=cmd_invariants)

    ver = sub.add_parser("verify", help="check a localization theorem on the data")
    ver.add_argument("file")
    ver.add_argument("--theorem", choices=sorted(localize.VERIFIERS), required=True)
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)

    blow = sub.add_parser("blowup", help="equivariant blow-up at an isolated fixed point")
    blow.add_argument("file")
    blow.add_argument("--point", type=int, required=True, metavar="INDEX")
    blow.add_argument("-o", "--output")
    blow.set_defaults(func=cmd_blowup)

    cs = sub.add_parser("consum", help="equivariant connected sum at two fixed points")
    cs.add_argument("file_a", metavar="fileA")
    cs.add_argument("file_b", metavar="fileB")
    cs.add_argument("--points", type=_ints, required=True, metavar="I,J")
    cs.add_argument("-o", "--output")
    cs.set_defaults(func=cmd_consum)

    ob = sub.add_parser("obstruct", help="necessary conditions for harmonic-morphism domains")
    src = ob.add_mutually_exclusive_group()
    src.add_argument("--manifold", metavar="NAME")
    src.add_argument("--file", metavar="invariants.json")
    ob.add_argument("--euler", type=int)
    ob.add_argument("--signature", type=int)
    ob.add_argument("--p1", type=int)
    ob.add_argument("--json", action="store_true")
    ob.set_defaults(func=cmd_obstruct)

    cat = sub.add_parser("catalog", help="list named manifolds")
    cat.add_argument("--json", action="store_true")
    cat.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except localize.RealizabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (CliError, ActionDataError, ArgumentError, obstruct.CatalogLookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
