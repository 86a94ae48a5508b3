"""Command-line interface: classify, verify, batch, family.

Exit codes: 0 success, 1 a verification or batch item failed, 2 malformed
input (documents, scalars, arguments), 3 an internal consistency check fired.
Output is deterministic: identical inputs yield byte-identical reports.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import (
    DegenerateInput,
    DependentVectors,
    InconsistencyDetected,
    InvalidParameters,
    ParseError,
)
from .families import FAMILY_NAMES, build as build_family, family_spec
from .report import (
    TensorDocument,
    build_report,
    coordinate_json,
    document_from_tensor,
    document_to_json,
    parse_tensor_document,
    render_report_json,
    render_report_text,
    tensor_from_document,
)
from .scalar import (
    FieldMode,
    GaussianRational,
    parse_rational,
    parse_scalar,
    render_scalar_json,
    render_scalar_text,
)
from .subspace import Line, PlaneDescriptor, PlaneKind, is_ideal_line, is_ideal_plane
from .algebra import StructureTensor
from .poly import matrix_det

__all__ = ["main"]

_MODES = {"real": FieldMode.REAL, "complex": FieldMode.COMPLEX}
_PLANE_KINDS = {"I": PlaneKind.TYPE_I, "II": PlaneKind.TYPE_II,
                "III": PlaneKind.TYPE_III, "IV": PlaneKind.TYPE_IV}


# ---------------------------------------------------------------------------
# Argument and document loading helpers.
# ---------------------------------------------------------------------------


def _read_text(path):
    """Return (text, label) from a path or standard input ('-' or None)."""
    if path in (None, "-"):
        return sys.stdin.read(), "<stdin>"
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read(), path
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _decode_json(text: str, label: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{label}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _load_document(path, default_mode) -> TensorDocument:
    text, label = _read_text(path)
    data = _decode_json(text, label)
    try:
        return parse_tensor_document(data, default_mode)
    except ParseError as exc:
        raise ParseError(f"{label}: {exc}") from exc


def parse_scalar_argument(text: str, mode: FieldMode):
    """Parse an exact scalar from a command-line string.

    Real mode accepts "p" or "p/q".  Complex mode additionally accepts the
    textual form "a+bi" (also "i", "-i", "2i", "1/2-3/4i").
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a scalar string, got {text!r}")
    s = text.strip()
    if mode is FieldMode.REAL or not s.endswith("i"):
        f = parse_rational(s)
        return f if mode is FieldMode.REAL else GaussianRational(f, Fraction(0))
    body = s[:-1]
    cut = max(body.rfind("+", 1), body.rfind("-", 1))
    if cut == -1:
        re_part, im_text = Fraction(0), body
    else:
        re_part, im_text = parse_rational(body[:cut]), body[cut:]
    if im_text in ("", "+"):
        im_part = Fraction(1)
    elif im_text == "-":
        im_part = Fraction(-1)
    else:
        im_part = parse_rational(im_text)
    return GaussianRational(re_part, im_part)


def _family_params(pairs, mode: FieldMode) -> dict:
    """Turn repeated "key=value" strings into family keyword parameters."""
    params = {}
    for raw in pairs or ():
        if "=" not in raw:
            raise ParseError(f"parameter {raw!r} is not of the form key=value")
        key, value = raw.split("=", 1)
        key = key.strip()
        if not key:
            raise ParseError(f"parameter {raw!r} has an empty key")
        if key == "variant":
            params[key] = value.strip()
        elif "," in value:
            params[key] = tuple(
                parse_scalar_argument(part, mode) for part in value.split(",")
            )
        else:
            params[key] = parse_scalar_argument(value, mode)
    return params


def _param_text(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (tuple, list)):
        return ",".join(render_scalar_text(v) for v in value)
    return render_scalar_text(value)


def _document_for_classify(args) -> TensorDocument:
    mode = _MODES[args.field] if args.field else None
    if args.family:
        if args.input is not None:
            raise ParseError("give either an input document or --family, not both")
        family_mode = mode if mode is not None else FieldMode.REAL
        spec = family_spec(
            args.family, family_mode, **_family_params(args.param, family_mode)
        )
        tensor = build_family(spec)
        label = args.family
        if spec.params:
            label += "(" + ", ".join(
                f"{k}={_param_text(v)}" for k, v in spec.params
            ) + ")"
        return document_from_tensor(tensor, name=label)
    if args.param:
        raise ParseError("--param requires --family")
    return _load_document(args.input, mode)


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def _write_output(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _render(report: dict, doc: TensorDocument, fmt: str) -> str:
    if fmt == "json":
        return render_report_json(report)
    return render_report_text(report, doc)


def _reconstruct_subspace(entry, mode: FieldMode):
    """Rebuild a Line or PlaneDescriptor from an indexed-ideal report entry.

    Only entries whose coordinates are all base scalars round-trip; algebraic
    parameters return None (their verification happened at build time).
    """
    def back(cell):
        if "exact" not in cell:
            return None
        return parse_scalar(cell["exact"], mode)

    if entry["kind"] == "line":
        coords = [back(c) for c in entry["coordinates"]]
        if any(c is None for c in coords):
            return None
        return Line(tuple(coords))
    kind = _PLANE_KINDS[entry["type"]]
    x = y = None
    if "x" in entry:
        x = back(entry["x"])
        if x is None:
            return None
    if "y" in entry:
        y = back(entry["y"])
        if y is None:
            return None
    return PlaneDescriptor(kind, x=x, y=y)


def _check_report(report: dict, doc: TensorDocument, rendered: str, fmt: str,
                  quotient_index) -> None:
    """Re-verify the rendered report from its own serialized form.

    The echoed input is re-parsed into a fresh tensor, the classification is
    re-run, the bytes must match, and every indexed ideal that round-trips
    through its exact literals is re-verified against the definition.
    """
    echo = parse_tensor_document(report["input"])
    again = build_report(echo, quotient_index=quotient_index)
    if _render(again, echo, fmt) != rendered:
        raise InconsistencyDetected(
            "re-running the classification on the echoed input changed the report"
        )
    tensor = tensor_from_document(echo)
    for entry in report["ideals"]:
        subspace = _reconstruct_subspace(entry, echo.mode)
        if subspace is None:
            continue
        ok = (
            is_ideal_line(tensor, subspace)
            if isinstance(subspace, Line)
            else is_ideal_plane(tensor, subspace)
        )
        if not ok:
            raise InconsistencyDetected(
                f"ideal {entry['index']} failed re-verification after round-trip"
            )


def cmd_classify(args) -> int:
    doc = _document_for_classify(args)
    report = build_report(doc, quotient_index=args.quotient)
    rendered = _render(report, doc, args.format)
    if args.check:
        _check_report(report, doc, rendered, args.format, args.quotient)
    _write_output(rendered, args.output)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _line_certificate(tensor: StructureTensor, line: Line):
    """Exact 2x2 minors proving or refuting invariance under multiplication."""
    u = line.coords
    names = ("left e1", "left e2", "left e3", "right e1", "right e2", "right e3")
    rows = []
    ok = True
    for name, m in zip(names, tensor.multiplication_matrices()):
        w = tuple(
            sum((m[r][c] * u[c] for c in range(3)), tensor.zero) for r in range(3)
        )
        minors = (
            w[0] * u[1] - w[1] * u[0],
            w[0] * u[2] - w[2] * u[0],
            w[1] * u[2] - w[2] * u[1],
        )
        ok = ok and all(m_ == 0 for m_ in minors)
        rows.append((name, minors))
    return ok, rows


def _plane_certificate(tensor: StructureTensor, plane: PlaneDescriptor):
    """Exact 3x3 determinants det[product, u, v] over generators and sides."""
    u, v = plane.spanning_vectors(tensor.mode)
    zero, one = tensor.mode.zero, tensor.mode.one
    basis = [
        (one, zero, zero),
        (zero, one, zero),
        (zero, zero, one),
    ]
    rows = []
    ok = True
    for gen_name, w in (("u", u), ("v", v)):
        for b_idx, e in enumerate(basis, start=1):
            for side, prod in (("left", tensor.product(e, w)), ("right", tensor.product(w, e))):
                det = matrix_det([[prod[r], u[r], v[r]] for r in range(3)])
                ok = ok and det == 0
                label = f"det(e{b_idx}*{gen_name}, u, v)" if side == "left" else f"det({gen_name}*e{b_idx}, u, v)"
                rows.append((label, det))
    return ok, rows


def _subspace_from_args(args, mode: FieldMode):
    if args.line is not None and args.plane is not None:
        raise ParseError("give exactly one of --line or --plane")
    if args.line is not None:
        parts = args.line.split(",")
        if len(parts) != 3:
            raise ParseError("--line takes three comma-separated scalars")
        coords = tuple(parse_scalar_argument(p, mode) for p in parts)
        try:
            return Line(coords)
        except DegenerateInput as exc:
            raise ParseError(str(exc)) from exc
    if args.plane is None:
        raise ParseError("give a subspace: --line a,b,c or --plane TYPE [--x X] [--y Y]")
    kind = _PLANE_KINDS.get(args.plane.upper())
    if kind is None:
        raise ParseError(f"--plane must be one of I, II, III, IV, not {args.plane!r}")
    x = parse_scalar_argument(args.x, mode) if args.x is not None else None
    y = parse_scalar_argument(args.y, mode) if args.y is not None else None
    try:
        return PlaneDescriptor(kind, x=x, y=y)
    except DegenerateInput as exc:
        raise ParseError(str(exc)) from exc


def _verify_payload(tensor: StructureTensor, doc: TensorDocument, subspace):
    if isinstance(subspace, Line):
        ok, rows = _line_certificate(tensor, subspace)
        sub_json = {
            "kind": "line",
            "coordinates": [coordinate_json(c, doc.mode) for c in subspace.coords],
        }
        cert = [
            {
                "multiplication": name,
                "minors": [render_scalar_json(m) for m in minors],
            }
            for name, minors in rows
        ]
    else:
        ok, rows = _plane_certificate(tensor, subspace)
        sub_json = {"kind": "plane", "type": subspace.kind.value}
        if subspace.x is not None:
            sub_json["x"] = coordinate_json(subspace.x, doc.mode)
        if subspace.y is not None:
            sub_json["y"] = coordinate_json(subspace.y, doc.mode)
        cert = [
            {"determinant": label, "value": render_scalar_json(det)}
            for label, det in rows
        ]
    return ok, {
        "input": document_to_json(doc),
        "subspace": sub_json,
        "certificate": cert,
        "ideal": ok,
    }


def _scalar_json_text(v) -> str:
    if isinstance(v, str):
        return v
    sign = "" if v["im"].startswith("-") else "+"
    return f"{v['re']}{sign}{v['im']}i"


def _verify_text(payload: dict) -> str:
    lines = []
    sub = payload["subspace"]
    if sub["kind"] == "line":
        coords = ", ".join(c["decimal"] for c in sub["coordinates"])
        lines.append(f"subspace: line ({coords})")
    else:
        desc = f"subspace: plane type {sub['type']}"
        if "x" in sub:
            desc += f", x = {sub['x']['decimal']}"
        if "y" in sub:
            desc += f", y = {sub['y']['decimal']}"
        lines.append(desc)
    lines.append("certificate:")
    for entry in payload["certificate"]:
        if "minors" in entry:
            vals = ", ".join(_scalar_json_text(v) for v in entry["minors"])
            lines.append(f"  {entry['multiplication']}: minors [{vals}]")
        else:
            lines.append(f"  {entry['determinant']} = {_scalar_json_text(entry['value'])}")
    lines.append(f"verdict: {'ideal' if payload['ideal'] else 'not an ideal'}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    mode = _MODES[args.field] if args.field else None
    doc = _load_document(args.input, mode)
    tensor = tensor_from_document(doc)
    subspace = _subspace_from_args(args, doc.mode)
    ok, payload = _verify_payload(tensor, doc, subspace)
    if args.format == "json":
        rendered = json.dumps(payload, indent=2) + "\n"
    else:
        rendered = _verify_text(payload)
    if args.check:
        echo = parse_tensor_document(payload["input"])
        ok2, payload2 = _verify_payload(tensor_from_document(echo), echo, subspace)
        again = (
            json.dumps(payload2, indent=2) + "\n"
            if args.format == "json"
            else _verify_text(payload2)
        )
        if ok2 is not ok or again != rendered:
            raise InconsistencyDetected(
                "re-running the verification on the echoed input changed the certificate"
            )
    sys.stdout.write(rendered)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# batch
# ---------------------------------------------------------------------------


def _batch_inputs(path):
    """Resolve a directory or manifest into a sorted list of (name, path)."""
    if os.path.isdir(path):
        names = sorted(n for n in os.listdir(path) if n.endswith(".json"))
        return [(n, os.path.join(path, n)) for n in names]
    text, label = _read_text(path)
    base = os.path.dirname(os.path.abspath(path))
    entries = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entries.append(line)
    entries.sort()
    return [(e, e if os.path.isabs(e) else os.path.join(base, e)) for e in entries]


def _count_text(value) -> str:
    return "inf" if value is None else str(value)


def cmd_batch(args) -> int:
    mode = _MODES[args.field] if args.field else None
    items = _batch_inputs(args.path)
    summary = []
    reports = {}
    failed = 0
    for name, full in items:
        try:
            doc = _load_document(full, mode)
            report = build_report(doc)
            rendered = _render(report, doc, args.format)
            if args.check:
                _check_report(report, doc, rendered, args.format, None)
            one = report["one_dimensional"]
            two = report["two_dimensional"]
            summary.append(
                {
                    "file": name,
                    "status": "ok",
                    "one_dimensional": one["count"],
                    "two_dimensional": two["count"],
                }
            )
            reports[name] = (report, doc, rendered)
        except (ParseError, InvalidParameters) as exc:
            failed += 1
            summary.append({"file": name, "status": "failed", "error": str(exc)})
        except InconsistencyDetected as exc:
            failed += 1
            summary.append(
                {"file": name, "status": "inconsistent", "error": str(exc)}
            )
    if args.format == "json":
        body = {
            "summary": summary,
            "processed": len(items),
            "failed": failed,
            "reports": {name: reports[name][0] for name in sorted(reports)},
        }
        out = json.dumps(body, indent=2) + "\n"
    else:
        lines = []
        width = max([len(s["file"]) for s in summary] + [4])
        lines.append(f"{'file'.ljust(width)}  {'status'.ljust(12)}  one-dim  two-dim")
        for s in summary:
            if s["status"] == "ok":
                lines.append(
                    f"{s['file'].ljust(width)}  {'ok'.ljust(12)}  "
                    f"{_count_text(s['one_dimensional']).ljust(7)}  "
                    f"{_count_text(s['two_dimensional'])}"
                )
            else:
                lines.append(
                    f"{s['file'].ljust(width)}  {s['status'].ljust(12)}  -        -"
                )
                lines.append(f"  error: {s['error']}")
        lines.append(f"processed {len(items)}, failed {failed}")
        for name in sorted(reports):
            _, _, rendered = reports[name]
            lines.append("")
            lines.append(f"== {name} ==")
            lines.append(rendered.rstrip("\n"))
        out = "\n".join(lines) + "\n"
    _write_output(out, args.output)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


def cmd_family(args) -> int:
    if args.list:
        sys.stdout.write("\n".join(FAMILY_NAMES) + "\n")
        return 0
    if not args.name:
        raise ParseError("give a family name or --list")
    mode = _MODES[args.field] if args.field else FieldMode.REAL
    spec = family_spec(args.name, mode, **_family_params(args.param, mode))
    tensor = build_family(spec)
    doc = document_from_tensor(tensor, name=args.name)
    sys.stdout.write(json.dumps(document_to_json(doc), indent=2) + "\n")
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _add_common(p, with_format=True):
    p.add_argument("--field", choices=("real", "complex"),
                   help="scalar field (documents may also carry it)")
    if with_format:
        p.add_argument("--format", choices=("json", "text"), default="json",
                       help="report rendering (default json)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ideals3",
        description="Enumerate, verify, and quotient the ideals of a "
                    "3-dimensional algebra given by exact structure constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full ideal classification report")
    p.add_argument("input", nargs="?", help="tensor document path, or - for stdin")
    p.add_argument("--family", help="build the input from a named family instead")
    p.add_argument("--param", action="append", metavar="KEY=VALUE",
                   help="family parameter (repeatable)")
    p.add_argument("--output", "-o", help="write the report here instead of stdout")
    p.add_argument("--check", action="store_true",
                   help="re-verify every reported ideal from the serialized report")
    p.add_argument("--quotient", type=int, metavar="IDEAL-INDEX",
                   help="include the quotient table by the indexed ideal")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check one line or plane, with certificate")
    p.add_argument("input", help="tensor document path, or - for stdin")
    p.add_argument("--line", metavar="A,B,C", help="line through (a, b, c)")
    p.add_argument("--plane", metavar="TYPE", help="plane type: I, II, III, or IV")
    p.add_argument("--x", help="plane parameter x (types II, III, IV)")
    p.add_argument("--y", help="plane parameter y (type IV)")
    p.add_argument("--check", action="store_true",
                   help="recompute the certificate from the echoed document")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="classify a directory or manifest of documents")
    p.add_argument("path", help="directory of .json documents, or manifest file")
    p.add_argument("--output", "-o", help="write the combined output here")
    p.add_argument("--check", action="store_true",
                   help="re-verify every report from its serialized form")
    _add_common(p)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("family", help="materialize a named family as a document")
    p.add_argument("name", nargs="?", help="family name")
    p.add_argument("--param", action="append", metavar="KEY=VALUE",
                   help="family parameter (repeatable)")
    p.add_argument("--list", action="store_true", help="list family names")
    _add_common(p, with_format=False)
    p.set_defaults(func=cmd_family)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidParameters, DependentVectors, DegenerateInput) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except InconsistencyDetected as exc:
        sys.stderr.write(f"internal consistency violation: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
