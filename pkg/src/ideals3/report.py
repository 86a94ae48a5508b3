"""Exact tensor documents and classification reports.

Documents carry the 27 structure constants as scalar literals (strings or
re/im objects) so exactness survives serialization. Reports echo the input,
list every ideal with exact parameters and a verification flag, and attach
decimal renderings as annotations only. Field ordering is fixed so identical
inputs produce byte-identical reports.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import StructureTensor
from .errors import InconsistencyDetected, ParseError
from .onedim import enumerate_onedim
from .scalar import (
    FieldMode,
    GaussianRational,
    is_base_scalar,
    parse_scalar,
    render_rational,
    render_scalar_json,
    render_scalar_text,
)
from .subspace import (
    PlaneDescriptor,
    is_ideal_line,
    is_ideal_plane,
    quotient_by_line,
    quotient_by_plane,
)
from .twodim import enumerate_twodim, t_system, type_iv_equations

__all__ = [
    "TensorDocument",
    "parse_tensor_document",
    "document_from_tensor",
    "tensor_from_document",
    "build_report",
    "render_report_json",
    "render_report_text",
]

_FIELD_NAMES = {"real": FieldMode.REAL, "complex": FieldMode.COMPLEX}


@dataclass(frozen=True)
class TensorDocument:
    """Parsed input document: field mode, 27 exact scalars, optional metadata.

    omega[i][j][k] (0-based here) holds the coefficient of e_{k+1} in the
    product e_{i+1} e_{j+1}.
    """

    mode: FieldMode
    omega: tuple
    name: Optional[str] = None
    provenance: Optional[str] = None


def _field_name(mode: FieldMode) -> str:
    return "real" if mode is FieldMode.REAL else "complex"


def parse_tensor_document(data, default_mode: Optional[FieldMode] = None) -> TensorDocument:
    """Validate a decoded JSON object into a TensorDocument.

    data is the result of json.loads; string inputs are not accepted here so
    position information from the JSON decoder stays with the caller.
    """
    if not isinstance(data, dict):
        raise ParseError("top-level value must be an object")
    unknown = set(data) - {"field", "omega", "name", "provenance"}
    if unknown:
        raise ParseError(f"unknown keys: {', '.join(sorted(unknown))}")
    if "omega" not in data:
        raise ParseError('missing required key "omega"')
    field = data.get("field")
    if field is None:
        mode = default_mode if default_mode is not None else FieldMode.REAL
    else:
        if field not in _FIELD_NAMES:
            raise ParseError(f'"field" must be "real" or "complex", not {field!r}')
        mode = _FIELD_NAMES[field]
        if default_mode is not None and mode is not default_mode:
            raise ParseError(
                f'document field "{field}" conflicts with the requested '
                f'--field {_field_name(default_mode)}'
            )
    raw = data["omega"]
    if not isinstance(raw, list) or len(raw) != 3:
        raise ParseError('"omega" must be a 3x3x3 nested array')
    omega = []
    for i, plane in enumerate(raw):
        if not isinstance(plane, list) or len(plane) != 3:
            raise ParseError(f"omega[{i}] must be an array of 3 rows")
        rows = []
        for j, row in enumerate(plane):
            if not isinstance(row, list) or len(row) != 3:
                raise ParseError(f"omega[{i}][{j}] must be an array of 3 scalars")
            cells = []
            for k, cell in enumerate(row):
                try:
                    cells.append(parse_scalar(cell, mode))
                except ParseError as exc:
                    raise ParseError(f"omega[{i}][{j}][{k}]: {exc}") from exc
            rows.append(tuple(cells))
        omega.append(tuple(rows))
    for key in ("name", "provenance"):
        if key in data and not isinstance(data[key], str):
            raise ParseError(f'"{key}" must be a string')
    return TensorDocument(
        mode=mode,
        omega=tuple(omega),
        name=data.get("name"),
        provenance=data.get("provenance"),
    )


def tensor_from_document(doc: TensorDocument) -> StructureTensor:
    return StructureTensor(doc.omega, doc.mode)


def document_from_tensor(
    tensor: StructureTensor, name: Optional[str] = None
) -> TensorDocument:
    return TensorDocument(mode=tensor.mode, omega=tensor.omega, name=name)


def document_to_json(doc: TensorDocument) -> dict:
    out = {"field": _field_name(doc.mode)}
    if doc.name is not None:
        out["name"] = doc.name
    if doc.provenance is not None:
        out["provenance"] = doc.provenance
    out["omega"] = [
        [[render_scalar_json(c) for c in row] for row in plane] for plane in doc.omega
    ]
    return out


# ---------------------------------------------------------------------------
# Scalar rendering with decimal annotations.
# ---------------------------------------------------------------------------


def _decimal_string(value, mode: FieldMode) -> str:
    if is_base_scalar(value):
        if isinstance(value, GaussianRational):
            re, im = float(value.re), float(value.im)
            if im == 0:
                return repr(re)
            sign = "+" if im >= 0 else "-"
            return f"{re!r}{sign}{abs(im)!r}i"
        return repr(float(Fraction(value)))
    approx = value.approx()
    if isinstance(approx, complex):
        sign = "+" if approx.imag >= 0 else "-"
        return f"{approx.real!r}{sign}{abs(approx.imag)!r}i"
    return repr(approx)


def _interval_json(iv) -> dict:
    return {"lo": render_rational(iv.lo), "hi": render_rational(iv.hi)}


def coordinate_json(value, mode: FieldMode):
    """Exact JSON form of a coordinate, with a decimal annotation.

    Base scalars render directly; algebraic scalars carry their minimal
    polynomial plus an isolating region with exact rational endpoints.
    """
    if is_base_scalar(value):
        return {"exact": render_scalar_json(value), "decimal": _decimal_string(value, mode)}
    minpoly = value.value_minpoly()
    region = value.value_region(Fraction(1, 10**12))
    if mode is FieldMode.REAL:
        region_json = _interval_json(region)
    else:
        region_json = {"re": _interval_json(region.re), "im": _interval_json(region.im)}
    return {
        "minimal_polynomial": [render_scalar_json(c) for c in minpoly.coeffs],
        "isolating_region": region_json,
        "decimal": _decimal_string(value, mode),
    }


def coordinate_text(value, mode: FieldMode) -> str:
    if is_base_scalar(value):
        return render_scalar_text(value)
    return f"algebraic({_decimal_string(value, mode)})"


# ---------------------------------------------------------------------------
# Report assembly.
# ---------------------------------------------------------------------------


_ZERO_PRODUCT_NOTE = "zero product: every subspace is an ideal"


def _verified(flag: bool, what: str):
    if not flag:
        raise InconsistencyDetected(f"{what} failed re-verification for the report")
    return "passed"


def _line_json(tensor: StructureTensor, record) -> dict:
    mode = tensor.mode
    return {
        "coordinates": [coordinate_json(c, mode) for c in record.line.coords],
        "left_eigenvalues": [coordinate_json(c, mode) for c in record.left_eigenvalues],
        "right_eigenvalues": [coordinate_json(c, mode) for c in record.right_eigenvalues],
        "verification": _verified(is_ideal_line(tensor, record.line), "an ideal line"),
    }


def _line_family_json(tensor: StructureTensor, family) -> dict:
    mode = tensor.mode
    out = {"whole_space": family.whole_space}
    if family.plane_normal is not None:
        out["plane_normal"] = [coordinate_json(c, mode) for c in family.plane_normal]
    out["extra_lines"] = [
        {
            "coordinates": [coordinate_json(c, mode) for c in rec.line.coords],
            "verification": _verified(is_ideal_line(tensor, rec.line), "an ideal line"),
        }
        for rec in family.extra_lines
    ]
    return out


def _plane_params_json(descriptor: PlaneDescriptor, mode: FieldMode) -> dict:
    out = {"type": descriptor.kind.value}
    if descriptor.x is not None:
        out["x"] = coordinate_json(descriptor.x, mode)
    if descriptor.y is not None:
        out["y"] = coordinate_json(descriptor.y, mode)
    return out


def _plane_family_json(family, mode: FieldMode) -> dict:
    out = {"shape": family.kind.value}
    if family.value is not None:
        out["value"] = coordinate_json(family.value, mode)
    if family.defining:
        out["defining"] = [
            {f"x^{dx} y^{dy}": render_scalar_json(coeff) for (dx, dy), coeff in poly.terms}
            for poly in family.defining
        ]
    return out


def _scalar_set_json(solutions, mode: FieldMode) -> dict:
    return {
        "all_scalars": solutions.all_scalars,
        "roots": [coordinate_json(r, mode) for r in solutions.roots],
    }


def build_report(doc: TensorDocument, quotient_index: Optional[int] = None) -> dict:
    """Classify the documented algebra and assemble the full report object.

    Raises InconsistencyDetected (or BoundViolation) if any internal check
    fails; every ideal present in the result has been re-verified.  When
    quotient_index names an entry of the indexed ideal list, the report also
    carries the quotient multiplication table.
    """
    tensor = tensor_from_document(doc)
    mode = tensor.mode

    ones = enumerate_onedim(tensor)
    twos = enumerate_twodim(tensor)
    k_diag = twos.type_II_diagnostic
    matrix_rank_12x7 = type_iv_equations(tensor).rank
    sym = tensor if tensor.is_commutative() else tensor.symmetrize()
    ts = t_system(sym)

    one_json = {
        "finite": not ones.is_infinite,
        "count": ones.count(),
        "lines": [_line_json(tensor, rec) for rec in (ones.lines or ())],
        "family": _line_family_json(tensor, ones.family) if ones.family else None,
    }

    planes_json = []
    for descriptor in twos.planes:
        planes_json.append(
            {
                "plane": _plane_params_json(descriptor, mode),
                "verification": _verified(
                    is_ideal_plane(tensor, descriptor), "an ideal plane"
                ),
            }
        )
    two_json = {
        "finite": not twos.is_infinite,
        "count": twos.count(),
        "type_I": {"present": twos.type_I},
        "type_II": _scalar_set_json(twos.type_II, mode),
        "type_III": _scalar_set_json(twos.type_III, mode),
        "type_IV": {
            "points": [
                {"x": coordinate_json(x, mode), "y": coordinate_json(y, mode)}
                for x, y in twos.type_IV.points
            ],
            "families": [
                _plane_family_json(f, mode) for f in twos.type_IV.families
            ],
            "dropped_y_zero": [
                {
                    "x": "any" if x == "*" else coordinate_json(x, mode),
                    "y": coordinate_json(y, mode),
                }
                for x, y in twos.type_IV.dropped_y_zero
            ],
        },
        "planes": planes_json,
    }

    k_json = {"verdict": k_diag.verdict}
    if k_diag.i0 is not None:
        k_json["i0"] = k_diag.i0
    if k_diag.discriminant is not None:
        k_json["discriminant"] = render_scalar_json(k_diag.discriminant)
    if k_diag.case_tag is not None:
        k_json["case"] = k_diag.case_tag
    if k_diag.x0 is not None:
        k_json["x0"] = coordinate_json(k_diag.x0, mode)

    diagnostics = {
        "commutative": tensor.is_commutative(),
        "k_condition": k_json,
        "equation_matrix_rank": matrix_rank_12x7,
        "linear_system": {
            "symmetrized": not tensor.is_commutative(),
            "rank": ts.rank,
            "rank_augmented": ts.rank_augmented,
            "det": render_scalar_json(ts.det),
        },
    }

    notes = []
    if tensor.is_zero():
        notes.append(_ZERO_PRODUCT_NOTE)

    ann = tensor.annihilator_basis()
    report = {
        "input": document_to_json(doc),
        "notes": notes,
        "annihilator": {
            "dimension": len(ann),
            "basis": [[render_scalar_json(c) for c in vec] for vec in ann],
        },
        "one_dimensional": one_json,
        "two_dimensional": two_json,
        "diagnostics": diagnostics,
        "ideals": _indexed_ideals(tensor, ones, twos),
    }
    if quotient_index is not None:
        report["quotient"] = quotient_json(tensor, ones, twos, quotient_index)
    return report


def _indexed_ideals(tensor: StructureTensor, ones, twos) -> list:
    """Flat, stably indexed list of the isolated ideals (for quotients)."""
    mode = tensor.mode
    out = []
    records = list(ones.lines or ())
    if ones.family is not None:
        records.extend(ones.family.extra_lines)
    for rec in records:
        out.append(
            {
                "index": len(out),
                "kind": "line",
                "coordinates": [coordinate_json(c, mode) for c in rec.line.coords],
            }
        )
    for descriptor in twos.planes:
        entry = {"index": len(out), "kind": "plane"}
        entry.update(_plane_params_json(descriptor, mode))
        out.append(entry)
    return out


def quotient_json(tensor: StructureTensor, ones, twos, index: int) -> dict:
    """Quotient table for the indexed ideal, in coset basis coordinates."""
    records = list(ones.lines or ())
    if ones.family is not None:
        records.extend(ones.family.extra_lines)
    planes = list(twos.planes)
    total = len(records) + len(planes)
    if index < 0 or index >= total:
        raise ParseError(
            f"quotient index {index} out of range (have {total} isolated ideals)"
        )
    if index < len(records):
        q = quotient_by_line(tensor, records[index].line)
    else:
        q = quotient_by_plane(tensor, planes[index - len(records)])
    return {
        "ideal_index": index,
        "dimension": q.dim,
        "coset_basis": [f"e{i + 1}" for i in q.complement_indices],
        "table": [
            [[render_scalar_json(c) for c in row] for row in plane]
            for plane in q.gamma
        ],
    }


# ---------------------------------------------------------------------------
# Text rendering.
# ---------------------------------------------------------------------------


def _vector_text(coords, mode: FieldMode) -> str:
    return "(" + ", ".join(coordinate_text(c, mode) for c in coords) + ")"


def render_report_text(report: dict, doc: TensorDocument) -> str:
    mode = doc.mode
    lines = []
    name = report["input"].get("name")
    head = f"algebra over {report['input']['field']}"
    if name:
        head += f" ({name})"
    lines.append(head)
    for note in report["notes"]:
        lines.append(f"note: {note}")
    lines.append(f"commutative: {'yes' if report['diagnostics']['commutative'] else 'no'}")
    lines.append(f"annihilator dimension: {report['annihilator']['dimension']}")

    one = report["one_dimensional"]
    if one["finite"]:
        lines.append(f"one-dimensional ideals: {one['count']}")
        for entry in one["lines"]:
            coords = ", ".join(c["decimal"] for c in entry["coordinates"])
            lines.append(f"  line ({coords}) [verified]")
    else:
        fam = one["family"]
        if fam["whole_space"]:
            lines.append("one-dimensional ideals: infinite (every line)")
        else:
            normal = ", ".join(c["decimal"] for c in fam["plane_normal"])
            lines.append(f"one-dimensional ideals: infinite (plane with normal ({normal}))")
        for entry in fam.get("extra_lines", []):
            coords = ", ".join(c["decimal"] for c in entry["coordinates"])
            lines.append(f"  extra line ({coords}) [verified]")

    two = report["two_dimensional"]
    if two["finite"]:
        lines.append(f"two-dimensional ideals: {two['count']}")
    else:
        lines.append("two-dimensional ideals: infinite")
    if two["type_I"]["present"]:
        lines.append("  type I plane present [verified]")
    for label in ("type_II", "type_III"):
        block = two[label]
        tag = label.replace("_", " ")
        if block["all_scalars"]:
            lines.append(f"  {tag}: every parameter works")
        else:
            for root in block["roots"]:
                lines.append(f"  {tag}: x = {root['decimal']} [verified]")
    iv = two["type_IV"]
    for point in iv["points"]:
        lines.append(
            f"  type IV: (x, y) = ({point['x']['decimal']}, {point['y']['decimal']}) [verified]"
        )
    for fam in iv["families"]:
        desc = fam["shape"]
        if "value" in fam:
            desc += f" at {fam['value']['decimal']}"
        lines.append(f"  type IV family: {desc}")

    diag = report["diagnostics"]
    k = diag["k_condition"]["verdict"]
    lines.append(f"diagnostics: K condition {k if k else 'none'}, "
                 f"equation matrix rank {diag['equation_matrix_rank']}, "
                 f"linear system rank {diag['linear_system']['rank']}"
                 f"/{diag['linear_system']['rank_augmented']} (augmented)")
    if "quotient" in report:
        q = report["quotient"]
        lines.append(
            f"quotient by ideal {q['ideal_index']}: dimension {q['dimension']}, "
            f"coset basis {', '.join(q['coset_basis'])}"
        )
    return "\n".join(lines) + "\n"


def render_report_json(report: dict) -> str:
    import json

    return json.dumps(report, indent=2, sort_keys=False) + "\n"
