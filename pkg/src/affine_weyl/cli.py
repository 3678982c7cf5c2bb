"""Command-line front end: ``affine-weyl <command> <type> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import linalg
from .casestudies import table3, verify_e8_elliptic, verify_f4_in_e8
from .dualspace import coroot, coroot_coefficients, format_dual, fundamental_weight, parse_weight
from .dynkin import DynkinDiagram, build_diagram, cartan_matrix, parse_type
from .extended import OrbitBoundExceeded, normal_form, orbit, parse_ext_word, sorted_orbit
from .reference import compare_row, expected_row, fixture_types
from .rootspace import (
    DEFAULT_LEVEL_BOUND,
    enumerate_roots,
    format_affine,
    format_root,
    parse_root,
    reflection_word,
    simple_root,
)
from .weyl import act, act_dual, decompose, translation_element, translation_word

CASES = ("e8", "f4", "table3", "all")


def _emit(args, text_lines, doc) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _table(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]


def _affine(d: DynkinDiagram) -> DynkinDiagram:
    return d if d.affine else d.affinization()


def _context(type_text: str, word: str) -> DynkinDiagram:
    """Weight translations ``uJ`` only exist in the affine group."""
    d = parse_type(type_text)
    return _affine(d) if "u" in word.lower() else d


# -- commands ----------------------------------------------------------------


def cmd_cartan(args) -> int:
    d = parse_type(args.type)
    a = cartan_matrix(d)
    head = [""] + [str(j) for j in d.nodes]
    rows = [head] + [[str(i)] + [str(x) for x in row] for i, row in zip(d.nodes, a)]
    _emit(args, _table(rows), {"type": d.name, "nodes": list(d.nodes), "matrix": [list(r) for r in a]})
    return 0


def cmd_roots(args) -> int:
    d = parse_type(args.type).finite()
    table = enumerate_roots(d)
    rows = [["height", "root", "length", "witness"]]
    doc = []
    for e in table.positive:
        tag = "long" if e.long else "short"
        rows.append([str(e.height), format_root(e.root), tag, str(e.witness)])
        doc.append({"root": list(e.root.coords), "height": e.height, "long": e.long, "witness": str(e.witness)})
    lines = _table(rows) + [f"{len(table)} positive roots: {len(table.long_roots)} long, {len(table.short_roots)} short"]
    _emit(args, lines, {"type": d.name, "positive_roots": doc})
    return 0


def cmd_coroot(args) -> int:
    d = parse_type(args.type)
    beta = parse_root(d, args.root)
    f = coroot(beta)
    b = coroot_coefficients(beta)
    pairs = {str(j): linalg.fmt(x) for j, x in zip(d.nodes, b)}
    lines = [f"coroot of {format_affine(beta) if d.affine else format_root(beta)}: {f}"]
    lines += [f"<a{j}, coroot> = {v}" for j, v in pairs.items()]
    refl = reflection_word(beta, args.level_bound)
    lines.append(f"reflection: {refl}")
    doc = {"type": d.name, "root": format_root(beta), "coroot": str(f), "pairings": pairs, "reflection": str(refl)}
    _emit(args, lines, doc)
    return 0


def _fmt_root(v) -> str:
    return format_affine(v) if v.diagram.affine else format_root(v)


def cmd_act(args) -> int:
    d = _context(args.type, args.word)
    x = parse_ext_word(d, args.word)
    if args.dual:
        if args.target == "basis":
            targets = [fundamental_weight(d, j) for j in range(1, d.rank + 1)]
            if d.affine:
                targets.append(parse_weight(d, "hd"))
        else:
            targets = [parse_weight(d, args.target)]
        pairs = [(str(f), str(act_dual(x, f))) for f in targets]
    else:
        if args.target == "basis":
            targets = [simple_root(d, j) for j in d.nodes]
        else:
            targets = [parse_root(d, args.target)]
        pairs = [(_fmt_root(v), _fmt_root(act(x, v))) for v in targets]
    lines = _table([[src, "->", dst] for src, dst in pairs])
    _emit(args, lines, {"type": d.name, "word": args.word, "dual": args.dual, "images": [list(p) for p in pairs]})
    return 0


def cmd_translate(args) -> int:
    d = _affine(parse_type(args.type))
    h = parse_weight(d, args.vector)
    nf = normal_form(translation_element(h))
    doc = {"type": d.name, "vector": str(h), "normal_form": nf.to_json()}
    lines = [f"translation by {h}", f"normal form: {nf}"]
    if not nf.auto.is_identity():
        doc["word"] = None
    else:
        word = translation_word(h)
        doc["word"] = str(word)
        lines.append(f"length: {len(word)}")
    images = [(_fmt_root(simple_root(d, j)), _fmt_root(act(nf, simple_root(d, j)))) for j in d.nodes]
    lines += _table([[src, "->", dst] for src, dst in images])
    doc["images"] = [list(p) for p in images]
    _emit(args, lines, doc)
    return 0


def cmd_normalform(args) -> int:
    d = _context(args.type, args.word)
    nf = normal_form(parse_ext_word(d, args.word))
    doc = {"type": d.name, "input": args.word, **nf.to_json(), "length": len(nf.word)}
    _emit(args, [str(nf), f"length: {len(nf.word)}"], doc)
    return 0


def cmd_decompose(args) -> int:
    d = _affine(parse_type(args.type))
    dec = decompose(parse_ext_word(d, args.word))
    lines = [f"finite: {dec.finite}", f"lattice: {format_dual(dec.lattice)}"]
    lines.append("coroot coefficients: " + " ".join(linalg.fmt(x) for x in dec.coroot_coeffs))
    _emit(args, lines, {"type": d.name, "input": args.word, **dec.to_json()})
    return 0


def cmd_orbit(args) -> int:
    d = parse_type(args.type)
    f = parse_weight(d, args.weight)
    if args.count:
        n = len(orbit(f, args.orbit_cap))
        _emit(args, [str(n)], {"type": d.name, "weight": str(f), "count": n})
        return 0
    pts = sorted_orbit(f, args.orbit_cap)
    _emit(args, [str(p) for p in pts], {"type": d.name, "weight": str(f), "orbit": [str(p) for p in pts]})
    return 0


def _table3_mismatches() -> dict[str, list[str]]:
    out = {}
    for family, n in fixture_types():
        bad = compare_row(table3(build_diagram(family, n)), expected_row(family, n))
        if bad:
            out[f"{family}{n}"] = bad
    return out


def cmd_verify(args) -> int:
    reports = []
    if args.case in ("e8", "all"):
        reports.append(verify_e8_elliptic())
    if args.case in ("f4", "all"):
        reports.append(verify_f4_in_e8())
    lines, doc = [], {"cases": [r.to_json() for r in reports]}
    ok = all(r.passed for r in reports)
    for r in reports:
        for c in r.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{mark} {r.case_id}/{c.check_id} {c.description}" + ("" if c.passed else f": {c.computed}"))
    if args.case in ("table3", "all"):
        bad = _table3_mismatches()
        ok = ok and not bad
        doc["table3"] = {"passed": not bad, "mismatches": bad}
        lines.append(f"{'PASS' if not bad else 'FAIL'} table3 fixture ({len(fixture_types())} types)")
        lines += [f"  {name}: {', '.join(fields)}" for name, fields in bad.items()]
    doc["passed"] = ok
    _emit(args, lines, doc)
    return 0 if ok else 1


def cmd_table3(args) -> int:
    row = table3(parse_type(args.type))
    doc = row.to_json()
    show = lambda v: "-" if v is None else " ".join(map(str, v)) if isinstance(v, list) else str(v)  # noqa: E731
    lines = _table([[k, show(v)] for k, v in doc.items()])
    _emit(args, lines, doc)
    return 0


# -- parser ------------------------------------------------------------------


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print one JSON document")
    common.add_argument("--level-bound", type=_positive_int, default=argparse.SUPPRESS, metavar="N")
    common.add_argument("--orbit-cap", type=_positive_int, default=argparse.SUPPRESS, metavar="N")

    p = argparse.ArgumentParser(prog="affine-weyl", description="Affine Weyl group computations.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *positional):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        sp.add_argument("type", help="diagram type such as B3, E8~ or F4^(1)")
        for arg in positional:
            sp.add_argument(arg)
        sp.set_defaults(func=func)
        return sp

    add("cartan", cmd_cartan, "print the Cartan matrix")
    add("roots", cmd_roots, "list positive roots")
    add("coroot", cmd_coroot, "coroot of a root", "root")
    sp = add("act", cmd_act, "apply a word to a root, weight or the whole basis", "word", "target")
    sp.add_argument("--dual", action="store_true", help="act on the dual space")
    add("translate", cmd_translate, "translation by a weight", "vector")
    add("normalform", cmd_normalform, "automorphism times reduced word", "word")
    add("decompose", cmd_decompose, "split into translation and finite part", "word")
    sp = add("orbit", cmd_orbit, "finite Weyl orbit of a weight", "weight")
    sp.add_argument("--count", action="store_true", help="print only the orbit size")
    add("table3", cmd_table3, "per-type data row")

    vp = sub.add_parser("verify", help="run the built-in case studies", parents=[common])
    vp.add_argument("case", choices=CASES)
    vp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.level_bound = getattr(args, "level_bound", DEFAULT_LEVEL_BOUND)
    env_cap = os.environ.get("AFFINE_WEYL_ORBIT_CAP")
    args.orbit_cap = getattr(args, "orbit_cap", int(env_cap) if env_cap else None)
    try:
        return args.func(args)
    except OrbitBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

