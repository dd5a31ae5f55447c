"""aperyres command line.

Exit codes: 0 success, 1 a verification failed, 2 invalid input.
The default output format can be set with APERYRES_FORMAT.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import oracle
from .complexes import build_apery_complex, i_generators, subring_context
from .errors import AperyError
from .kunz import face_signature, kunz_point, signature_of
from .linalg import parse_field
from .minimal import (
    format_polynomial_t,
    koszul_relation_check,
    minimalize,
    pivot_uniformity_report,
    residue_class_sums,
)
from .ring import format_poly
from .semigroup import apery, from_generators, is_med
from .serialize import (
    betti_text,
    betti_to_json,
    complex_latex,
    complex_text,
    document,
    graded_betti_text,
    semigroup_text,
)

FORMATS = ("text", "json", "latex")
CHECKS = ("complex", "exactness", "euler", "grobner", "reduction")
FORMAT_ENV = "APERYRES_FORMAT"


class Usage(Exception):
    pass


def parse_gens(s: str):
    try:
        gens = [int(x) for x in s.replace(" ", "").split(",") if x]
    except ValueError:
        raise Usage(f"cannot parse generators {s!r}; expected e.g. 4,9,11,14")
    if any(g <= 0 for g in gens):
        raise Usage("generators must be positive integers")
    return from_generators(gens)


def _emit(args, text, doc, latex=None):
    if args.format == "json":
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    elif args.format == "latex":
        print(latex if latex is not None else text)
    else:
        print(text)


def _betti_pair(S, field):
    rep = koszul_relation_check(S, field)
    return rep.j_table, rep.i_table, rep


# ---------------------------------------------------------------- commands


def cmd_apery(args):
    S = parse_gens(args.gens)
    apery(S)
    _emit(args, semigroup_text(S), document(S))
    return 0


def cmd_resolve(args):
    S = parse_gens(args.gens)
    F = build_apery_complex(S)
    if args.minimal or args.target == "I":
        F = minimalize(F)
    check = oracle.check_complex(F)
    extra = {}
    text = complex_text(F)
    if args.target == "I":
        rep = koszul_relation_check(S, parse_field(args.field), minimal_complex=F)
        ctx = subring_context(S)
        gens = [format_poly(g, ctx) for g in i_generators(S)]
        extra = {"koszul": {"r": rep.r, "f": list(rep.f), "g": list(rep.g)}, "iGenerators": gens}
        text += (
            f"\n\nKoszul factor (1+t)^{rep.r}: f = {format_polynomial_t(rep.f)}, g = {format_polynomial_t(rep.g)}"
            + "\nI_S generators:\n" + "\n".join("  " + g for g in gens)
        )
        betti = rep.i_table
    else:
        betti = None
    if not check.passed:
        extra["verification"] = [check.summary()]
        text += "\n\n" + check.summary()
    _emit(args, text, document(S, F, betti, **extra), complex_latex(F))
    return 0 if check.passed else 1


def cmd_betti(args):
    S = parse_gens(args.gens)
    jt, it, _ = _betti_pair(S, parse_field(args.field))
    m = S.multiplicity
    lines = [
        betti_text(jt, "R/J"),
        betti_text(jt.to_ideal(), "J"),
        betti_text(it, "R/I"),
        betti_text(it.to_ideal(), "I"),
    ]
    doc = document(S, betti=jt, bettiI=betti_to_json(it))
    if args.graded:
        for name, t in (("R/J", jt), ("R/I", it)):
            lines.append(f"\n{name} graded (d: degree:beta):")
            lines.append(graded_betti_text(t))
            lines.append(f"{name} residue-class sums mod {m}:")
            for d, row in residue_class_sums(t, m).items():
                lines.append(f"  d={d}  " + " ".join(map(str, row)))
        doc["residueSums"] = {
            "J": {str(d): list(r) for d, r in residue_class_sums(jt, m).items()},
            "I": {str(d): list(r) for d, r in residue_class_sums(it, m).items()},
        }
    _emit(args, "\n".join(lines), doc)
    return 0


def cmd_face(args):
    S = parse_gens(args.gens)
    p = kunz_point(apery(S))
    sig = face_signature(p)
    text = "\n".join([
        f"S = {S}",
        "Kunz point: (" + ", ".join(str(z) for z in p.z) + ")",
        f"face signature: {sig}",
        f"interior (MED): {'yes' if is_med(S) else 'no'}",
    ])
    _emit(args, text, document(S))
    return 0


def _run_check(name, S, F, bound, field):
    if name == "complex":
        return [oracle.check_complex(F)]
    if name == "exactness":
        return [oracle.check_exactness_graded(F, S, bound, field=field)]
    if name == "euler":
        return [oracle.euler_characteristic_check(F, S, bound)]
    if name == "grobner":
        B = bound if bound is not None else 3 * max(S.witness)
        return [oracle.check_initial_ideal(S, B), oracle.check_generators(S)]
    if name == "reduction":
        return [oracle.check_artinian_reduction(F, S, bound, field)]
    raise Usage(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")


def cmd_verify(args):
    S = parse_gens(args.gens)
    field = parse_field(args.field)
    names = [c for c in args.checks.split(",") if c] if args.checks else list(CHECKS)
    for n in names:
        if n not in CHECKS:
            raise Usage(f"unknown check {n!r}; choose from {', '.join(CHECKS)}")
    F = build_apery_complex(S)
    reports = []
    for n in names:
        reports.extend(_run_check(n, S, F, args.bound, field))
    ok = all(r.passed for r in reports)
    lines = [f"S = {S}"] + [r.summary() for r in reports]
    for r in reports:
        for d in r.details[:10]:
            lines.append(f"  {r.check_name}: {d}")
    doc = document(S, checks=[
        {"name": r.check_name, "passed": r.passed, "bound": r.bound, "details": r.details[:50]} for r in reports
    ])
    _emit(args, "\n".join(lines), doc)
    return 0 if ok else 1


def cmd_compare(args):
    S, T = parse_gens(args.a), parse_gens(args.b)
    if S.multiplicity != T.multiplicity:
        raise Usage(f"multiplicities differ ({S.multiplicity} vs {T.multiplicity})")
    sa, sb = signature_of(S), signature_of(T)
    lines = [f"A = {S}: face {sa}", f"B = {T}: face {sb}"]
    doc = {"schemaVersion": 1, "a": document(S)["semigroup"], "b": document(T)["semigroup"]}
    if sa != sb:
        lines.append("different faces: not comparable")
        doc["verdict"] = "not comparable"
        _emit(args, "\n".join(lines), doc)
        return 0
    field = parse_field(args.field)
    jS, iS, _ = _betti_pair(S, field)
    jT, iT, _ = _betti_pair(T, field)
    m = S.multiplicity
    checks = {
        "bettiJ": jS.total == jT.total,
        "bettiI": iS.total == iT.total,
        "residueSumsJ": residue_class_sums(jS, m) == residue_class_sums(jT, m),
        "residueSumsI": residue_class_sums(iS, m) == residue_class_sums(iT, m),
    }
    uni = pivot_uniformity_report(S, T)
    checks["pivots"] = uni.passed
    lines.append(f"same face {sa}")
    lines.append(f"J betti: {jS.total} vs {jT.total}: {'equal' if checks['bettiJ'] else 'DIFFERENT'}")
    lines.append(f"I betti: {iS.total} vs {iT.total}: {'equal' if checks['bettiI'] else 'DIFFERENT'}")
    lines.append(f"residue-class sums: {'equal' if checks['residueSumsJ'] and checks['residueSumsI'] else 'DIFFERENT'}")
    lines.append(f"pivot steps: {len(uni.steps)}, {'coincide' if uni.passed else 'DIFFER'}")
    for k, mat, phase, ps, pt, match in uni.steps:
        lines.append(f"  step {k}: matrix {mat} phase {phase} {ps} {pt} {'ok' if match else 'MISMATCH'}")
    ok = all(checks.values())
    doc["verdict"] = "same face"
    doc["checks"] = checks
    doc["pivots"] = [list(s[:3]) + [list(s[3] or []), list(s[4] or []), s[5]] for s in uni.steps]
    _emit(args, "\n".join(lines), doc)
    return 0 if ok else 1


# ---------------------------------------------------------------- entry point


def build_parser():
    default_fmt = os.environ.get(FORMAT_ENV, "text")
    if default_fmt not in FORMATS:
        default_fmt = "text"
    p = argparse.ArgumentParser(prog="aperyres", description="Apery resolutions of numerical semigroup rings")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=default_fmt)
    common.add_argument("--field", default="rational", help="rational or prime:p")
    sub = p.add_subparsers(dest="command", required=True)

    def with_gens(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("--gens", required=True, help="comma-separated generators, e.g. 4,9,11,14")
        sp.set_defaults(fn=fn)
        return sp

    with_gens("apery", cmd_apery, "Apery set, c and b tables, face signature")
    sp = with_gens("resolve", cmd_resolve, "print the Apery resolution")
    sp.add_argument("--target", choices=("J", "I"), default="J")
    sp.add_argument("--minimal", action="store_true")
    sp = with_gens("betti", cmd_betti, "Betti numbers of R/J_S and R/I_S")
    sp.add_argument("--graded", action="store_true")
    with_gens("face", cmd_face, "Kunz point and face signature")
    sp = with_gens("verify", cmd_verify, "run oracle checks")
    sp.add_argument("--bound", type=int)
    sp.add_argument("--checks", help="comma list from " + ",".join(CHECKS))
    sp = sub.add_parser("compare", parents=[common], help="compare two semigroups of equal multiplicity")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(fn=cmd_compare)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args)
    except (Usage, AperyError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
