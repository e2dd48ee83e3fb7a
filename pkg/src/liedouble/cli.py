"""Command-line front end.

Every command renders one report in the format picked by ``--format``
(text, json, or csv); all three views are produced from the same report
document, and re-running a command is deterministic byte for byte.  JSON
documents carry ``"schema": 1``.

Exit status: 0 when the computation completed (verdicts live in the
output, so a failing identity still exits 0), 2 for usage, parse, or
validation problems.

``--param NAME=VALUE`` assigns catalog parameters (repeatable);
``--catalog PATH`` merges external catalog files after checking for name
collisions (repeatable).  Both may appear before or after the command.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import acceptance
from .catalog import check_no_builtin_collision, entry, get, load_file, names, table1
from .derivations import derivation_space, generalized_derivation_space, is_characteristically_nilpotent
from .errors import DuplicateName, JacobiViolation, LieDoubleError, NotADerivation
from .identities import Fixed, canonical_identity, check_quantified, quantifier_from_name
from .lie_core import (
    LieAlgebra,
    LinearMap,
    center,
    derived_series,
    is_abelian,
    is_center_by_metabelian,
    is_metabelian,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    nilpotency_class,
    parse_element,
    solvability_class,
)
from .rmatrix import build_double, is_classical_rmatrix, mybe_solve, recognize_r31
from .scalars import parse_scalar


class _Usage(Exception):
    """Raised for option errors so main() can exit with status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


_FORMATS = ("text", "json", "csv")
_QUANTIFIER_NAMES = ("all-der", "all-inner", "all-elem", "fixed")


def _add_common(p) -> None:
    sup = argparse.SUPPRESS
    p.add_argument("--format", choices=_FORMATS, default=sup,
                   help="output format (default text)")
    p.add_argument("--param", action="append", metavar="NAME=VALUE", default=sup,
                   help="assign a catalog parameter; repeatable")
    p.add_argument("--catalog", action="append", metavar="PATH", default=sup,
                   help="merge an external catalog file; repeatable")


def build_parser() -> _Parser:
    p = _Parser(prog="liedouble", description="Exact checks on structure-constant Lie algebras.")
    p.set_defaults(format="text", param=[], catalog=[])
    _add_common(p)
    sub = p.add_subparsers(dest="command", metavar="COMMAND")

    q = sub.add_parser("catalog-list", help="list catalog entries")
    _add_common(q)

    q = sub.add_parser("show", help="print an algebra's brackets")
    q.add_argument("name")
    _add_common(q)

    q = sub.add_parser("invariants", help="series, classes, center, derivation dimension")
    q.add_argument("name")
    _add_common(q)

    q = sub.add_parser("derivations", help="basis of the (weighted) derivation algebra")
    q.add_argument("name")
    q.add_argument("--general", metavar="T", default=None,
                   help="weight t of the rule t*D[x,y] = [Dx,y] + [x,Dy]")
    _add_common(q)

    q = sub.add_parser("identity", help="check one of the bracket identities")
    q.add_argument("name")
    q.add_argument("--id", dest="ident", required=True, metavar="CODE",
                   help="1, 2, 3, 4, 6 or s5")
    q.add_argument("--quantifier", choices=_QUANTIFIER_NAMES, default=None)
    q.add_argument("--z", default=None, metavar="EXPR",
                   help="element for a fixed-element check (identities 3, 4)")
    q.add_argument("--map", dest="map_file", default=None, metavar="FILE",
                   help="JSON matrix for a fixed-map check (identities 1, 2)")
    _add_common(q)

    q = sub.add_parser("rmatrix", help="R-matrix verdict, modified equation, double")
    q.add_argument("name")
    q.add_argument("--z", default=None, metavar="EXPR", help="use R = ad(z)")
    q.add_argument("--matrix", default=None, metavar="FILE", help="use an explicit matrix R")
    q.add_argument("--build-double", dest="build_double", action="store_true",
                   help="also print the doubled bracket table")
    _add_common(q)

    q = sub.add_parser("table1", help="regenerate the verdict table for dim <= 4")
    _add_common(q)

    q = sub.add_parser("check-paper", help="run the full verification suite")
    _add_common(q)
    return p


# ---------------------------------------------------------------------------
# shared plumbing

def _parse_params(pairs) -> dict:
    out = {}
    for raw in pairs:
        name, sep, value = raw.partition("=")
        if not sep or not name or not value:
            raise _Usage(f"--param needs NAME=VALUE, got {raw!r}")
        out[name] = value
    return out


def _load_external(paths) -> dict:
    merged: dict = {}
    for path in paths:
        found = load_file(path)
        check_no_builtin_collision(found)
        for name, g in found.items():
            if name in merged:
                raise DuplicateName(name)
            merged[name] = g
    return merged


def _materialize(name: str, params: dict, external: dict) -> LieAlgebra:
    if name in external:
        g = external[name]
        if params:
            unknown = sorted(set(params) - set(g.params))
            if unknown:
                raise ValueError(f"{name} has no parameter {', '.join(unknown)}")
            g = g.specialize({k: Fraction(v) for k, v in params.items()})
        return g
    return get(name, params or None)


def _read_matrix(path: str, dim: int) -> LinearMap:
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list) or len(raw) != dim or any(
        not isinstance(row, list) or len(row) != dim for row in raw
    ):
        raise ValueError(f"{path}: expected a {dim}x{dim} JSON array of rows")
    rows = []
    for row in raw:
        done = []
        for cell in row:
            if isinstance(cell, bool) or isinstance(cell, float):
                raise ValueError(f"{path}: entries must be exact (int or string)")
            done.append(parse_scalar(str(cell)))
        rows.append(done)
    return LinearMap(rows)


def _fractions_sorted(values) -> list:
    return [str(v) for v in sorted(values)]


def _csv_text(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _bracket_doc(g: LieAlgebra) -> list:
    out = []
    for i, j in sorted(g.table):
        comps = g.table[(i, j)]
        out.append({
            "i": i + 1,
            "j": j + 1,
            "value": {str(k + 1): str(c) for k, c in sorted(comps.items())},
        })
    return out


def _yesno(flag) -> str:
    return "yes" if flag else "no"


# ---------------------------------------------------------------------------
# commands; each returns (doc, text_lines, csv_rows)

def _cmd_catalog_list(args, params, external):
    entries = []
    for n in names():
        e = entry(n)
        entries.append({
            "name": e.name,
            "dim": e.dim,
            "params": [
                {
                    "name": s.name,
                    "kind": s.kind,
                    "special": [str(v) for v in s.special],
                    "excluded": [str(v) for v in s.excluded],
                }
                for s in e.params
            ],
            "note": e.note,
        })
    for name, g in external.items():
        entries.append({
            "name": name,
            "dim": g.dim,
            "params": [
                {"name": p, "kind": "scalar", "special": [], "excluded": []}
                for p in g.params
            ],
            "note": "external",
        })
    doc = {"schema": 1, "command": "catalog-list", "entries": entries}

    def dim_text(e):
        return str(e["dim"]) if e["dim"] is not None else e["params"][0]["name"]

    width = max(len(e["name"]) for e in entries)
    pwidth = max(
        [len(",".join(s["name"] for s in e["params"])) for e in entries] + [6]
    )
    text = [f"{'name':<{width}}  {'dim':>3}  {'params':<{pwidth}}  note"]
    for e in entries:
        ps = ",".join(s["name"] for s in e["params"])
        text.append(f"{e['name']:<{width}}  {dim_text(e):>3}  {ps:<{pwidth}}  {e['note']}")
    rows = [("name", "dim", "params", "note")]
    for e in entries:
        rows.append(
            (e["name"], dim_text(e), ",".join(s["name"] for s in e["params"]), e["note"])
        )
    return doc, text, rows


def _cmd_show(args, params, external):
    g = _materialize(args.name, params, external)
    doc = {
        "schema": 1,
        "command": "show",
        "name": args.name,
        "dim": g.dim,
        "params": list(g.params),
        "labels": list(g.labels),
        "brackets": _bracket_doc(g),
    }
    text = [f"{args.name}: dimension {g.dim}"]
    if g.params:
        text.append("parameters: " + ", ".join(g.params))
    lines = g.bracket_lines()
    text.extend(lines if lines else ["all brackets vanish"])
    rows = [("i", "j", "k", "coefficient")]
    for b in doc["brackets"]:
        for k, c in b["value"].items():
            rows.append((b["i"], b["j"], k, c))
    return doc, text, rows


def _cmd_invariants(args, params, external):
    g = _materialize(args.name, params, external)
    lcs = lower_central_series(g)
    ds = derived_series(g)
    space = derivation_space(g)
    parametric = bool(g.params) or g.is_parametric()
    cnla = None if parametric else is_characteristically_nilpotent(g)
    doc = {
        "schema": 1,
        "command": "invariants",
        "name": args.name,
        "dim": g.dim,
        "params": list(g.params),
        "lower_central_dims": [s.dim for s in lcs],
        "derived_dims": [s.dim for s in ds],
        "nilpotency_class": nilpotency_class(g),
        "solvability_class": solvability_class(g),
        "center_dim": center(g).dim,
        "abelian": is_abelian(g),
        "nilpotent": is_nilpotent(g),
        "solvable": is_solvable(g),
        "metabelian": is_metabelian(g),
        "center_by_metabelian": is_center_by_metabelian(g),
        "characteristically_nilpotent": cnla,
        "derivation_dim": space.dim,
        "derivation_exceptional": [str(p) for p in space.exceptional],
    }
    order = (
        ("dim", str(doc["dim"])),
        ("params", ", ".join(doc["params"]) or "-"),
        ("lower central dims", " ".join(map(str, doc["lower_central_dims"]))),
        ("derived dims", " ".join(map(str, doc["derived_dims"]))),
        ("nilpotency class", "-" if doc["nilpotency_class"] is None else str(doc["nilpotency_class"])),
        ("solvability class", "-" if doc["solvability_class"] is None else str(doc["solvability_class"])),
        ("center dim", str(doc["center_dim"])),
        ("abelian", _yesno(doc["abelian"])),
        ("nilpotent", _yesno(doc["nilpotent"])),
        ("solvable", _yesno(doc["solvable"])),
        ("metabelian", _yesno(doc["metabelian"])),
        ("center-by-metabelian", _yesno(doc["center_by_metabelian"])),
        ("characteristically nilpotent", "-" if cnla is None else _yesno(cnla)),
        ("dim Der", str(doc["derivation_dim"])),
        ("Der exceptional", "; ".join(doc["derivation_exceptional"]) or "-"),
    )
    text = [f"{args.name}: invariants"] + [f"  {k}: {v}" for k, v in order]
    rows = [("key", "value")] + [(k, v) for k, v in order]
    return doc, text, rows


def _cmd_derivations(args, params, external):
    g = _materialize(args.name, params, external)
    if args.general is None:
        space = derivation_space(g)
    else:
        space = generalized_derivation_space(g, Fraction(args.general))
    doc = {
        "schema": 1,
        "command": "derivations",
        "name": args.name,
        "weight": str(space.weight),
        "dim": space.dim,
        "exceptional": [str(p) for p in space.exceptional],
        "basis": [
            [[str(e) for e in row] for row in m.entries] for m in space.basis
        ],
    }
    text = [f"{args.name}: derivation space of weight {doc['weight']}, dimension {space.dim}"]
    if doc["exceptional"]:
        text.append("exceptional: " + "; ".join(doc["exceptional"]))
    for t, m in enumerate(space.basis):
        text.append(f"D{t + 1}:")
        for row in m.entries:
            text.append("  " + " ".join(str(e) for e in row))
    rows = [("map", "row", "col", "value")]
    for t, m in enumerate(space.basis):
        for a, row in enumerate(m.entries):
            for b, e in enumerate(row):
                if not e.is_zero():
                    rows.append((t + 1, a + 1, b + 1, str(e)))
    return doc, text, rows


_DEFAULT_QUANTIFIER = {"1": "all-der", "2": "all-der", "3": "all-elem",
                       "4": "all-elem", "6": "all-elem", "s5": "all-elem"}


def _identity_quantifier(args, g, code):
    qname = args.quantifier
    if args.z is not None and args.map_file is not None:
        raise ValueError("--z and --map are mutually exclusive")
    has_payload = args.z is not None or args.map_file is not None
    if qname is None:
        qname = "fixed" if has_payload else _DEFAULT_QUANTIFIER[code]
    if qname != "fixed":
        if has_payload:
            raise ValueError(f"--quantifier {qname} does not take --z or --map")
        return qname, quantifier_from_name(qname)
    if code in ("1", "2"):
        if args.map_file is None:
            raise ValueError(f"identity {code} with fixed quantifier needs --map FILE")
        payload = _read_matrix(args.map_file, g.dim)
    else:
        if args.z is None:
            raise ValueError(f"identity {code} with fixed quantifier needs --z EXPR")
        payload = parse_element(g, args.z)
    return "fixed", Fixed(payload)


def _report_doc(rep) -> dict:
    """Shared serializer for identity and R-matrix reports."""
    roots = []
    for rs in rep.roots:
        roots.append(None if rs is None else _fractions_sorted(rs))
    common = getattr(rep, "common_roots", None)
    return {
        "status": rep.status,
        "witness": None if rep.witness is None else list(rep.witness),
        "value": None if rep.value is None else str(rep.value),
        "conditions": [str(p) for p in rep.conditions],
        "roots": roots,
        "common_roots": None if common is None else _fractions_sorted(common),
        "exceptional": [str(p) for p in getattr(rep, "exceptional", ())],
    }


def _report_text(prefix, d) -> list:
    text = [f"{prefix}: {d['status']}"]
    if d["witness"] is not None:
        text.append(f"  witness: {tuple(d['witness'])}")
    if d["value"] is not None:
        text.append(f"  value: {d['value']}")
    if d["conditions"]:
        text.append("  conditions: " + "; ".join(d["conditions"]))
        shown = ["{" + ", ".join(rs) + "}" if rs is not None else "-" for rs in d["roots"]]
        text.append("  rational roots: " + "; ".join(shown))
    if d["common_roots"] is not None:
        text.append("  common roots: {" + ", ".join(d["common_roots"]) + "}")
    if d["exceptional"]:
        text.append("  exceptional: " + "; ".join(d["exceptional"]))
    return text


def _report_rows(d) -> list:
    return [
        ("status", d["status"]),
        ("witness", "" if d["witness"] is None else " ".join(map(str, d["witness"]))),
        ("value", d["value"] or ""),
        ("conditions", "; ".join(d["conditions"])),
        ("common_roots", "" if d["common_roots"] is None else " ".join(d["common_roots"])),
        ("exceptional", "; ".join(d["exceptional"])),
    ]


def _cmd_identity(args, params, external):
    code = canonical_identity(args.ident)
    g = _materialize(args.name, params, external)
    qname, quant = _identity_quantifier(args, g, code)
    rep = check_quantified(g, code, quant)
    d = _report_doc(rep)
    doc = {
        "schema": 1,
        "command": "identity",
        "name": args.name,
        "identity": code,
        "quantifier": qname,
    }
    doc.update(d)
    label = {"all-der": "over all derivations", "all-inner": "over all inner derivations",
             "all-elem": "over all elements", "fixed": "at the fixed argument"}[qname]
    text = _report_text(f"identity {code} {label} on {args.name}", d)
    rows = [("key", "value"), ("identity", code), ("quantifier", qname)] + _report_rows(d)
    return doc, text, rows


def _cmd_rmatrix(args, params, external):
    g = _materialize(args.name, params, external)
    if (args.z is None) == (args.matrix is None):
        raise ValueError("rmatrix needs exactly one of --z EXPR or --matrix FILE")
    if args.z is not None:
        op = g.ad(parse_element(g, args.z))
        source = f"ad({args.z})"
    else:
        op = _read_matrix(args.matrix, g.dim)
        source = args.matrix
    rep = is_classical_rmatrix(g, op)
    d = _report_doc(rep)
    sol = mybe_solve(g, op)
    mybe = {
        "status": sol.status,
        "value": None if sol.value is None else str(sol.value),
        "exceptional": [str(p) for p in sol.exceptional],
    }
    doc = {
        "schema": 1,
        "command": "rmatrix",
        "name": args.name,
        "operator": source,
        "classical": d,
        "mybe": mybe,
        "r31": None,
        "double": None,
    }
    double = None
    double_error = None
    if rep.status == "holds" and (args.build_double or g.dim == 3):
        try:
            double = build_double(g, op, kind="rbracket")
        except (JacobiViolation, NotADerivation) as e:
            double_error = str(e)
    if double is not None and g.dim == 3 and not double.params:
        doc["r31"] = recognize_r31(double)
    if args.build_double:
        if double is not None:
            doc["double"] = {
                "dim": double.dim,
                "params": list(double.params),
                "brackets": _bracket_doc(double),
            }
        elif double_error is not None:
            doc["double"] = {"error": double_error}

    text = _report_text(f"R-matrix check for {source} on {args.name}", d)
    word = {"unique": "unique scalar", "all": "every scalar", "none": "no scalar"}[mybe["status"]]
    line = f"modified equation: {word}"
    if mybe["value"] is not None:
        line += f", lambda = {mybe['value']}"
    text.append(line)
    if mybe["exceptional"]:
        text.append("  exceptional: " + "; ".join(mybe["exceptional"]))
    if doc["r31"] is not None:
        text.append(f"double recognized as the 3-dim solvable type: {_yesno(doc['r31'])}")
    if args.build_double:
        if double is not None:
            text.append("double bracket table:")
            lines = double.bracket_lines()
            text.extend("  " + ln for ln in (lines or ["all brackets vanish"]))
        elif double_error is not None:
            text.append(f"double not formed: {double_error}")
    rows = [("key", "value")] + _report_rows(d)
    rows.append(("mybe_status", mybe["status"]))
    rows.append(("mybe_value", mybe["value"] or ""))
    rows.append(("r31", "" if doc["r31"] is None else _yesno(doc["r31"])))
    return doc, text, rows


def _cmd_table1(args, params, external):
    rows_data = table1()
    doc = {
        "schema": 1,
        "command": "table1",
        "rows": [
            {"name": r.name, "note": r.note, "marks": dict(r.marks)} for r in rows_data
        ],
    }
    width = max(len(r.name) for r in rows_data)
    nwidth = max(len(r.note) for r in rows_data)
    text = [f"{'algebra':<{width}}  {'case':<{nwidth}}  1 2 3 4"]
    for r in rows_data:
        marks = " ".join(r.marks[c] for c in "1234")
        text.append(f"{r.name:<{width}}  {r.note:<{nwidth}}  {marks}")
    rows = [("name", "note", "id1", "id2", "id3", "id4")]
    for r in rows_data:
        rows.append((r.name, r.note, r.marks["1"], r.marks["2"], r.marks["3"], r.marks["4"]))
    return doc, text, rows


def _cmd_check_paper(args, params, external):
    results = acceptance.run_all()
    doc = {
        "schema": 1,
        "command": "check-paper",
        "ok": all(r.ok for r in results),
        "criteria": [
            {"number": r.number, "title": r.title, "ok": r.ok, "facts": list(r.lines)}
            for r in results
        ],
    }
    text = []
    for r in results:
        text.append(f"criterion {r.number:2d} [{'pass' if r.ok else 'FAIL'}] {r.title}")
        text.extend("    " + ln for ln in r.lines)
    text.append(f"overall: {'pass' if doc['ok'] else 'FAIL'}")
    rows = [("number", "status", "title")]
    for r in results:
        rows.append((r.number, "pass" if r.ok else "FAIL", r.title))
    return doc, text, rows


_COMMANDS = {
    "catalog-list": _cmd_catalog_list,
    "show": _cmd_show,
    "invariants": _cmd_invariants,
    "derivations": _cmd_derivations,
    "identity": _cmd_identity,
    "rmatrix": _cmd_rmatrix,
    "table1": _cmd_table1,
    "check-paper": _cmd_check_paper,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise _Usage("a command is required (see --help)")
        params = _parse_params(args.param)
        external = _load_external(args.catalog)
        doc, text, rows = _COMMANDS[args.command](args, params, external)
    except _Usage as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (LieDoubleError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    elif args.format == "csv":
        sys.stdout.write(_csv_text(rows))
    else:
        sys.stdout.write("\n".join(text) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
