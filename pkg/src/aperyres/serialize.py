"""JSON, text and LaTeX renderings of semigroups, complexes and Betti tables.

The JSON layout is versioned; ``complex_from_json`` and ``betti_from_json``
invert ``complex_to_json`` and ``betti_to_json`` exactly.
"""
from __future__ import annotations

from fractions import Fraction

from .complexes import FreeComplex
from .kunz import signature_of
from .minimal import BettiTable
from .ring import GradedMatrix, Polynomial, RingContext, format_poly
from .semigroup import NumericalSemigroup, apery

SCHEMA_VERSION = 1


# ---------------------------------------------------------------- JSON


def semigroup_to_json(S: NumericalSemigroup) -> dict:
    out = {
        "generators": list(S.generators),
        "multiplicity": S.multiplicity,
        "apery": list(S.witness),
        "minimalGenerators": list(S.minimal_generators),
    }
    if S.multiplicity >= 2:
        out["faceSignature"] = [list(p) for p in signature_of(S).sorted_pairs()]
    return out


def _is_apery_label(lab):
    return (
        isinstance(lab, tuple) and len(lab) == 2 and isinstance(lab[0], int)
        and isinstance(lab[1], tuple) and all(isinstance(v, int) for v in lab[1])
    )


def _label_to_json(lab):
    if isinstance(lab, tuple):
        return [_label_to_json(v) for v in lab]
    return lab


def _label_from_json(v):
    if isinstance(v, list):
        return tuple(_label_from_json(x) for x in v)
    return v


def poly_to_json(p: Polynomial) -> list:
    terms = []
    for mono, c in sorted(p.items()):
        c = Fraction(c)
        terms.append({"num": c.numerator, "den": c.denominator, "exps": list(mono)})
    return terms


def poly_from_json(terms) -> Polynomial:
    return Polynomial((tuple(t["exps"]), Fraction(t["num"], t["den"])) for t in terms)


def complex_to_json(F: FreeComplex) -> dict:
    modules = []
    for labs, degs in zip(F.labels, F.degrees):
        basis = []
        for lab, dg in zip(labs, degs):
            if _is_apery_label(lab):
                basis.append({"i": lab[0], "A": list(lab[1]), "degree": dg})
            else:
                basis.append({"label": _label_to_json(lab), "degree": dg})
        modules.append({"rank": len(labs), "basis": basis})
    maps = []
    for M in F.maps:
        entries = [
            {"row": r, "col": c, "terms": poly_to_json(p)}
            for (r, c), p in sorted(M.entries.items())
        ]
        maps.append({"entries": entries})
    ring = {"m": F.ctx.m, "degrees": list(F.ctx.degrees), "variables": list(F.ctx.variables)}
    return {"ring": ring, "kind": F.kind, "modules": modules, "maps": maps}


def complex_from_json(doc: dict) -> FreeComplex:
    ring = doc["ring"]
    ctx = RingContext(ring["m"], tuple(ring["degrees"]), tuple(ring["variables"]))
    labels, degrees = [], []
    for mod in doc["modules"]:
        labs, degs = [], []
        for b in mod["basis"]:
            if "i" in b:
                labs.append((b["i"], tuple(b["A"])))
            else:
                labs.append(_label_from_json(b["label"]))
            degs.append(b["degree"])
        if len(labs) != mod["rank"]:
            raise ValueError("module rank does not match its basis")
        labels.append(tuple(labs))
        degrees.append(tuple(degs))
    maps = []
    for d, mp in enumerate(doc["maps"], start=1):
        entries = {(e["row"], e["col"]): poly_from_json(e["terms"]) for e in mp["entries"]}
        maps.append(GradedMatrix(degrees[d - 1], degrees[d], entries))
    return FreeComplex(ctx, tuple(labels), tuple(degrees), tuple(maps), doc.get("kind", ""))


def betti_to_json(t: BettiTable) -> dict:
    return {
        "convention": t.convention,
        "total": list(t.total),
        "graded": [{"d": d, "b": b, "beta": v} for (d, b), v in sorted(t.graded.items())],
    }


def betti_from_json(doc: dict) -> BettiTable:
    graded = {(g["d"], g["b"]): g["beta"] for g in doc["graded"]}
    return BettiTable(doc["convention"], tuple(doc["total"]), graded)


def document(S=None, F=None, betti=None, **extra) -> dict:
    doc = {"schemaVersion": SCHEMA_VERSION}
    if S is not None:
        doc["semigroup"] = semigroup_to_json(S)
    if F is not None:
        doc["complex"] = complex_to_json(F)
    if betti is not None:
        doc["betti"] = betti_to_json(betti) if isinstance(betti, BettiTable) else betti
    doc.update(extra)
    return doc


# ---------------------------------------------------------------- text


def label_text(lab, m: int) -> str:
    """"i,A" with A as a digit string; "[k]" for {1..k} when k >= 3; bracketed list past m = 10."""
    if not _is_apery_label(lab):
        return str(lab)
    i, A = lab
    if not A:
        return "0"
    if m > 10:
        return f"{i},[" + ",".join(map(str, A)) + "]"
    if len(A) >= 3 and A == tuple(range(1, len(A) + 1)):
        return f"{i},[{len(A)}]"
    return f"{i}," + "".join(map(str, A))


def matrix_text(M: GradedMatrix, row_labels, col_labels, ctx: RingContext) -> str:
    m = ctx.m
    rows = [label_text(l, m) for l in row_labels]
    cols = [label_text(l, m) for l in col_labels]
    cells = [
        [format_poly(M.entries[(r, c)], ctx) if (r, c) in M.entries else "·" for c in range(len(cols))]
        for r in range(len(rows))
    ]
    widths = [max([len(cols[c])] + [len(cells[r][c]) for r in range(len(rows))]) for c in range(len(cols))]
    lw = max((len(s) for s in rows), default=0)
    lines = [" " * lw + " | " + "  ".join(h.rjust(w) for h, w in zip(cols, widths))]
    lines.append("-" * len(lines[0]))
    for r, name in enumerate(rows):
        lines.append(name.rjust(lw) + " | " + "  ".join(s.rjust(w) for s, w in zip(cells[r], widths)))
    return "\n".join(lines)


def complex_text(F: FreeComplex) -> str:
    out = ["ranks: " + ", ".join(map(str, F.ranks()))]
    for d, M in enumerate(F.maps, start=1):
        out.append(f"\nd_{d}: F_{d} -> F_{d - 1}")
        out.append(matrix_text(M, F.labels[d - 1], F.labels[d], F.ctx))
    return "\n".join(out)


def betti_text(t: BettiTable, name="") -> str:
    head = f"{name} " if name else ""
    lines = [f"{head}betti ({t.convention}): (" + ",".join(map(str, t.total)) + ")"]
    return "\n".join(lines)


def graded_betti_text(t: BettiTable) -> str:
    lines = []
    for d in sorted({d for d, _ in t.graded}):
        parts = [f"{b}:{v}" for (dd, b), v in sorted(t.graded.items()) if dd == d]
        lines.append(f"  d={d}  " + " ".join(parts))
    return "\n".join(lines)


def semigroup_text(S: NumericalSemigroup) -> str:
    from .semigroup import is_med

    t = apery(S)
    m = t.m
    lines = [
        f"S = {S}",
        f"m = {m}",
        "Ap(S) = {" + ",".join(map(str, S.witness)) + "}",
        f"MED: {'yes' if is_med(S) else 'no'}",
    ]
    for name, get in (("c", t.cij), ("b", t.bij)):
        lines.append(f"{name}_ij:")
        for i in range(1, m):
            lines.append("  " + " ".join(f"{get(i, j):>3}" for j in range(1, m)))
    lines.append(f"face signature: {signature_of(S)}")
    return "\n".join(lines)


# ---------------------------------------------------------------- LaTeX


def _latex_poly(p: Polynomial, ctx) -> str:
    s = format_poly(p, ctx).replace("*", " ")
    out = []
    for tok in s.split(" "):
        if "^" in tok:
            base, e = tok.split("^")
            tok = f"{base}^{{{e}}}"
        out.append(tok)
    return " ".join(out)


def complex_latex(F: FreeComplex) -> str:
    """Block-array style matrices, one per boundary map."""
    m = F.ctx.m
    chunks = []
    for d, M in enumerate(F.maps, start=1):
        cols = [label_text(l, m) for l in F.labels[d]]
        lines = [
            f"% d_{d}",
            r"\begin{blockarray}{r" + "c" * len(cols) + "}",
            " & ".join([""] + cols) + r" \\",
            r"\begin{block}{r(" + "c" * len(cols) + ")}",
        ]
        for r, lab in enumerate(F.labels[d - 1]):
            cells = [_latex_poly(M.entries[(r, c)], F.ctx) if (r, c) in M.entries else "" for c in range(len(cols))]
            lines.append(" & ".join([label_text(lab, m)] + cells) + r" \\")
        lines += [r"\end{block}", r"\end{blockarray}"]
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks)
