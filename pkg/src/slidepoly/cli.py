"""Command-line front end: enumerate, genfun, expand, verify, insert."""
from __future__ import annotations

import argparse
import json
import sys

from .bases import BasisTag, basis_polynomial, parse_basis
from .combinat import parse_weak_composition
from .expansion import (ExpansionResult, expand_basis, expand_dis_to_yfslide, expand_dis_to_yqk,
                        expand_drev_to_fslide, expand_drev_to_qk, expand_qk_to_fslide, expand_rdi_to_qs,
                        expand_yqk_to_yfslide)
from .fillings import FamilyTag, Filling, enumerate_fillings, parse_family
from .insertion import InsertionPair, format_trace, rapture_inverse, weak_insert
from .verify import IDENTITIES, run_identity

# (source, target) -> formula taking (index, m)
FORMULAS = {
    (BasisTag.DREV_SLIDE, BasisTag.FSLIDE): lambda a, m: expand_drev_to_fslide(a),
    (BasisTag.QKEY, BasisTag.FSLIDE): lambda a, m: expand_qk_to_fslide(a),
    (BasisTag.DIS_SLIDE, BasisTag.YFSLIDE): lambda a, m: expand_dis_to_yfslide(a),
    (BasisTag.YQKEY, BasisTag.YFSLIDE): lambda a, m: expand_yqk_to_yfslide(a),
    (BasisTag.DIS_SLIDE, BasisTag.YQKEY): lambda a, m: expand_dis_to_yqk(a),
    (BasisTag.DREV_SLIDE, BasisTag.QKEY): lambda a, m: expand_drev_to_qk(a),
    (BasisTag.REV_DUAL_IMM_QS, BasisTag.QS): lambda a, m: expand_rdi_to_qs(a, len(a) if m is None else m),
}


def _emit(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def cmd_enumerate(args) -> int:
    tag = parse_family(args.tag)
    shape = parse_weak_composition(args.shape)
    fillings = enumerate_fillings(tag, shape, args.max_entry)
    for f in fillings:
        if args.pretty:
            _emit(f.pretty())
            _emit()
        else:
            _emit(f.to_json(tag))
    if args.pretty:
        _emit(f"count: {len(fillings)}")
    else:
        _emit(json.dumps({"count": len(fillings)}, separators=(",", ":")))
    return 0


def cmd_genfun(args) -> int:
    tag = parse_basis(args.basis)
    p = basis_polynomial(tag, parse_weak_composition(args.index), args.m)
    if not args.jsonl:
        _emit(p.to_text())
    elif not p.is_zero():
        _emit(p.to_jsonl())
    return 0


def cmd_expand(args) -> int:
    source, target = parse_basis(args.source), parse_basis(args.target)
    index = parse_weak_composition(args.index)
    if source is target:
        m = args.m if source.quasisymmetric else None
        basis_polynomial(source, index, m)  # validates the index
        n_vars = len(index) if m is None else m
        result = ExpansionResult(target, {index: 1}, n_vars, (source.value, index))
    elif (source, target) in FORMULAS:
        result = FORMULAS[source, target](index, args.m)
    elif args.oracle:
        result = expand_basis(source, index, target, args.m)
    else:
        supported = ", ".join(f"{s.value}->{t.value}" for s, t in FORMULAS)
        raise ValueError(f"no formula for {source.value} -> {target.value} (supported: {supported}); "
                         "use --oracle for the generic change of basis")
    _emit(result.to_text())
    if not args.oracle:
        return 0
    oracle = expand_basis(source, index, target, result.num_vars if source.quasisymmetric else None)
    if oracle.coeffs == result.coeffs:
        _emit("# oracle: agree")
        return 0
    _emit("# oracle: DISAGREE")
    for b in sorted(set(oracle.coeffs) | set(result.coeffs)):
        got, want = result.coeffs.get(b, 0), oracle.coeffs.get(b, 0)
        if got != want:
            _emit(f"# {','.join(map(str, b))}\tformula {got}\toracle {want}")
    return 1


def cmd_verify(args) -> int:
    report = run_identity(args.identity, args.max_n, args.max_len, args.max_vars, args.jobs)
    _emit(report.pretty() if args.pretty else report.to_json())
    return 0 if report.status == "PASS" else 1


def _read_record(text: str) -> dict:
    if text == "-":
        text = sys.stdin.read()
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"record is not valid JSON: {exc}") from None
    if not isinstance(rec, dict):
        raise ValueError("record must be a JSON object")
    return rec


def cmd_insert(args) -> int:
    rec = _read_record(args.record)
    if args.invert:
        u = rapture_inverse(InsertionPair.from_record(rec))
        _emit(u.to_json(FamilyTag.SIF))
        return 0
    if rec.get("family", "SIF") != "SIF":
        raise ValueError(f"expected a SIF record, got family {rec['family']}")
    trace = [] if args.trace else None
    pair = weak_insert(Filling.from_record(rec), trace)
    if trace is not None:
        for line in format_trace(trace):
            _emit(line)
    _emit(pair.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slidepoly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the fillings of one family and shape")
    p.add_argument("tag", help="family tag, e.g. SSRIF")
    p.add_argument("shape", help="comma-separated weak composition, e.g. 0,3,0,2")
    p.add_argument("--max-entry", type=int, default=None,
                   help="largest entry for semistandard families (default: number of rows)")
    p.add_argument("--pretty", action="store_true", help="draw fillings instead of JSON records")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("genfun", help="print a basis element as a polynomial")
    p.add_argument("basis", help="basis tag, e.g. QKEY")
    p.add_argument("index", help="comma-separated index")
    p.add_argument("--m", type=int, default=None, help="number of variables for quasisymmetric bases")
    p.add_argument("--jsonl", action="store_true", help="one {exponent, coeff} record per line")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("expand", help="expand a basis element in another basis")
    p.add_argument("source")
    p.add_argument("index")
    p.add_argument("target")
    p.add_argument("--m", type=int, default=None, help="number of variables for quasisymmetric bases")
    p.add_argument("--oracle", action="store_true",
                   help="also run the generic change of basis and report differences")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check an identity over a bounded range")
    p.add_argument("identity", choices=sorted(IDENTITIES))
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--max-vars", type=int, default=None, help="default: --max-len")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("insert", help="weak insertion of a SIF record, or its inverse")
    p.add_argument("record", help="JSON record, or - to read stdin")
    p.add_argument("--trace", action="store_true", help="print one line per bump")
    p.add_argument("--invert", action="store_true", help="read a {P,Q} pair and recover the SIF")
    p.set_defaults(func=cmd_insert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, TypeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"slidepoly: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
