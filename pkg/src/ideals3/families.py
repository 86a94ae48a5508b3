"""Constructors for the named algebra families used by tests and the CLI.

Each family fixes a pattern of structure constants with a handful of free
parameters. Families are addressed by name plus keyword parameters, so the
command line and the test suite share one registry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import StructureTensor
from .errors import InvalidParameters
from .scalar import FieldMode, GaussianRational, as_base_scalar

__all__ = [
    "FamilySpec",
    "FAMILY_NAMES",
    "family_spec",
    "build",
    "section7_T_matrix",
]


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus normalized parameters; build() turns it into a tensor."""

    name: str
    params: tuple = ()  # sorted ((key, value), ...) pairs
    mode: FieldMode = FieldMode.REAL

    def param_map(self) -> dict:
        return dict(self.params)


# name -> (scalar parameter names with defaults, other allowed keys)
_SCALAR_PARAMS = {
    "zero": {},
    "all-ones": {},
    "diagonal-idempotent": {},
    "dime1": {"omega": 0, "omega_tilde": 0},
    "two-onedim": {
        "w111": 0,
        "w131": 0,
        "w331": 0,
        "w222": 0,
        "w232": 0,
        "w332": 0,
        "w333": 0,
    },
    "section7": {"a": 0, "b": 0, "c": 0, "d": 0, "e": 0, "f": 0, "g": 0, "k": 0},
    "section7-rank3": {},
    "section7-rank4": {},
    "section7-rank5": {},
}

_VARIANTS = ("i", "ii", "iii")

FAMILY_NAMES = tuple(sorted(_SCALAR_PARAMS))

# The three concrete parameter choices exercised by the plane-system ranks.
SECTION7_PRESETS = {
    "section7-rank3": {"a": 1, "b": 0, "c": 1, "d": 0, "e": 0, "f": 1, "g": 0, "k": 0},
    "section7-rank4": {"a": 1, "b": 0, "c": -1, "d": 1, "e": -1, "f": -1, "g": 1, "k": 0},
    "section7-rank5": {"a": 1, "b": 0, "c": 1, "d": 1, "e": -1, "f": 0, "g": -1, "k": 0},
}


def _coerce(name: str, key: str, value, mode: FieldMode):
    try:
        return as_base_scalar(value, mode)
    except Exception as exc:
        raise InvalidParameters(f"{name}: parameter {key}={value!r} is not a scalar") from exc


def family_spec(name: str, mode: FieldMode = FieldMode.REAL, **params) -> FamilySpec:
    """Validate and normalize parameters for the named family."""
    if name not in _SCALAR_PARAMS:
        raise InvalidParameters(f"unknown family {name!r}; expected one of {FAMILY_NAMES}")
    allowed = dict(_SCALAR_PARAMS[name])
    normalized = {}
    for key, default in allowed.items():
        normalized[key] = _coerce(name, key, params.pop(key, default), mode)
    if name == "diagonal-idempotent":
        variant = params.pop("variant", None)
        if variant not in _VARIANTS:
            raise InvalidParameters(
                f"diagonal-idempotent requires variant in {_VARIANTS}, got {variant!r}"
            )
        normalized["variant"] = variant
    if name == "dime1":
        e3sq = params.pop("e3sq", (0, 0, 0))
        if not isinstance(e3sq, (tuple, list)) or len(e3sq) != 3:
            raise InvalidParameters("dime1 parameter e3sq must be a 3-vector")
        normalized["e3sq"] = tuple(_coerce(name, "e3sq", v, mode) for v in e3sq)
    if params:
        raise InvalidParameters(f"{name}: unexpected parameters {sorted(params)}")
    return FamilySpec(name, tuple(sorted(normalized.items(), key=lambda kv: kv[0])), mode)


def _diagonal_idempotent(variant: str, mode: FieldMode) -> StructureTensor:
    one = mode.one
    # e_i e_j = 0 off the diagonal; the squares select the variant.
    if variant == "i":
        entries = {(1, 1, 1): one, (2, 2, 2): one, (3, 3, 3): one}
    elif variant == "ii":
        entries = {(1, 1, 1): one, (2, 2, 2): one, (3, 3, 2): one}
    else:
        entries = {(1, 1, 1): one, (2, 2, 3): one, (3, 3, 2): one}
    return StructureTensor.from_entries(entries, mode)


def _dime1(omega, omega_tilde, e3sq, mode: FieldMode) -> StructureTensor:
    entries = {
        (3, 1, 1): omega,
        (3, 2, 2): omega,
        (1, 3, 1): omega_tilde,
        (2, 3, 2): omega_tilde,
    }
    for k, v in enumerate(e3sq, start=1):
        entries[(3, 3, k)] = v
    return StructureTensor.from_entries(entries, mode)


def _symmetric_entries(entries: dict) -> dict:
    """Complete a sparse (i<=j) table to a commutative one."""
    full = dict(entries)
    for (i, j, k), v in entries.items():
        full[(j, i, k)] = v
    return full


def _two_onedim(p: dict, mode: FieldMode) -> StructureTensor:
    entries = _symmetric_entries(
        {
            (1, 1, 1): p["w111"],
            (1, 3, 1): p["w131"],
            (3, 3, 1): p["w331"],
            (2, 2, 2): p["w222"],
            (2, 3, 2): p["w232"],
            (3, 3, 2): p["w332"],
            (3, 3, 3): p["w333"],
        }
    )
    return StructureTensor.from_entries(entries, mode)


def _section7(p: dict, mode: FieldMode) -> StructureTensor:
    a, b, c = p["a"], p["b"], p["c"]
    d, e, f = p["d"], p["e"], p["f"]
    g, k = p["g"], p["k"]
    entries = _symmetric_entries(
        {
            (1, 1, 1): d + e + f,
            (1, 1, 2): d,
            (1, 1, 3): f,
            (1, 2, 1): a,
            (1, 2, 2): e,
            (1, 2, 3): a,
            (1, 3, 1): g,
            (1, 3, 2): -d,
            (1, 3, 3): g + d + e,
            (2, 2, 1): b,
            (2, 2, 2): -e,
            (2, 2, 3): b,
            (2, 3, 1): c,
            (2, 3, 2): -e,
            (2, 3, 3): c,
            (3, 3, 1): k,
            (3, 3, 2): d,
            (3, 3, 3): k - d - e,
        }
    )
    tensor = StructureTensor.from_entries(entries, mode)
    assert tensor.is_commutative()
    return tensor


def build(spec: FamilySpec) -> StructureTensor:
    """Materialize the structure tensor described by spec."""
    mode = spec.mode
    p = spec.param_map()
    if spec.name == "zero":
        return StructureTensor.from_entries({}, mode)
    if spec.name == "all-ones":
        one = mode.one
        return StructureTensor.build(
            [[[one] * 3 for _ in range(3)] for _ in range(3)], mode
        )
    if spec.name == "diagonal-idempotent":
        return _diagonal_idempotent(p["variant"], mode)
    if spec.name == "dime1":
        return _dime1(p["omega"], p["omega_tilde"], p["e3sq"], mode)
    if spec.name == "two-onedim":
        return _two_onedim(p, mode)
    if spec.name == "section7":
        return _section7(p, mode)
    if spec.name in SECTION7_PRESETS:
        preset = family_spec("section7", mode, **SECTION7_PRESETS[spec.name])
        return _section7(preset.param_map(), mode)
    raise InvalidParameters(f"unknown family {spec.name!r}")  # pragma: no cover


def section7_T_matrix(spec: FamilySpec):
    """Linearized plane-system matrix for a section7-family tensor."""
    if spec.name != "section7" and spec.name not in SECTION7_PRESETS:
        raise InvalidParameters("section7_T_matrix needs a section7 family spec")
    from .twodim import t_system

    return t_system(build(spec))
