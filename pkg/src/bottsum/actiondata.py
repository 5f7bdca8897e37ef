"""Fixed-point data of circle actions: types, validation, JSON, generators."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Optional, Sequence

from .exactalg import ArgumentError, Partition, partitions_of


class ActionDataError(Exception):
    """Base class for problems with fixed-point data documents."""


class ParseError(ActionDataError):
    """The document is not well formed, or a field has the wrong type or value."""


class ValidationError(ActionDataError):
    """The document parsed but violates the dataset invariants."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class DegenerateActionError(ArgumentError):
    """The requested action has a positive-dimensional fixed set."""


@dataclass(frozen=True)
class Violation:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


@dataclass(frozen=True)
class IsolatedFixedPoint:
    exponents: tuple[int, ...]
    sign: int

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))

    def reversed(self) -> IsolatedFixedPoint:
        return IsolatedFixedPoint(self.exponents, -self.sign)


@dataclass(frozen=True)
class SurfaceComponent:
    """A fixed surface in a 4-manifold: its genus and normal Euler number."""

    genus: int
    normal_euler: int
    label: Optional[str] = None

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus


@dataclass(frozen=True)
class CircleActionData:
    """Fixed-point data of a circle action on a closed oriented 2n-manifold.

    Point order is significant only as an index for surgeries; every
    invariant computed from the data is order independent.
    """

    half_dimension: int
    isolated: tuple[IsolatedFixedPoint, ...] = ()
    surfaces: tuple[SurfaceComponent, ...] = ()
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "isolated", tuple(self.isolated))
        object.__setattr__(self, "surfaces", tuple(self.surfaces))

    @property
    def dimension(self) -> int:
        return 2 * self.half_dimension

    def reversed(self) -> CircleActionData:
        """The same action on the manifold with opposite orientation."""
        return CircleActionData(
            self.half_dimension,
            tuple(p.reversed() for p in self.isolated),
            tuple(SurfaceComponent(s.genus, -s.normal_euler, s.label) for s in self.surfaces),
            None if self.label is None else f"-({self.label})",
        )

    def multiset_key(self):
        """Order-free identity of the data, for comparing datasets as multisets."""
        return (
            self.half_dimension,
            sorted((tuple(sorted(p.exponents)), p.sign) for p in self.isolated),
            sorted((s.genus, s.normal_euler) for s in self.surfaces),
        )


@dataclass(frozen=True)
class ManifoldInvariants:
    """Characteristic numbers of a closed oriented manifold; ``None`` means unknown.

    ``pontryagin`` is keyed by the partitions of ``dimension // 4`` (empty when
    4 does not divide the dimension).  ``torus`` marks a flat torus factor,
    which lets products keep their Pontryagin numbers.
    """

    dimension: int
    euler: Optional[int] = None
    signature: Optional[int] = None
    pontryagin: Mapping[Partition, Optional[Fraction]] = field(default_factory=dict)
    label: Optional[str] = None
    notes: tuple[str, ...] = ()
    torus: bool = False

    def __post_init__(self):
        if self.dimension < 0:
            raise ArgumentError("dimension must be nonnegative")
        if self.dimension % 4:
            if any(v is not None for v in self.pontryagin.values()):
                raise ArgumentError(f"dimension {self.dimension} carries no Pontryagin numbers")
            pont = {}
            if self.signature not in (None, 0):
                raise ArgumentError(f"dimension {self.dimension} has signature 0")
            object.__setattr__(self, "signature", 0)
        else:
            expected = partitions_of(self.dimension // 4) if self.dimension else []
            extra = set(self.pontryagin) - set(expected)
            if extra:
                raise ArgumentError(
                    f"Pontryagin keys {sorted(p.key() for p in extra)} are not "
                    f"partitions of {self.dimension // 4}"
                )
            pont = {
                p: None if self.pontryagin.get(p) is None else Fraction(self.pontryagin[p])
                for p in expected
            }
        object.__setattr__(self, "pontryagin", pont)
        object.__setattr__(self, "notes", tuple(self.notes))

    def __hash__(self):
        return hash((self.dimension, self.euler, self.signature, tuple(self.pontryagin.items())))

    def pontryagin_known(self) -> bool:
        return all(v is not None for v in self.pontryagin.values())

    def reversed(self) -> ManifoldInvariants:
        return ManifoldInvariants(
            self.dimension,
            self.euler,
            None if self.signature is None else -self.signature,
            {p: None if v is None else -v for p, v in self.pontryagin.items()},
            None if self.label is None else f"-{self.label}",
            self.notes,
            self.torus,
        )


# ---------------------------------------------------------------------------
# validation

def validate(data: CircleActionData) -> list[Violation]:
    """List every broken invariant of ``data``; an empty list means valid."""
    out: list[Violation] = []
    n = data.half_dimension
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        out.append(Violation("half_dimension", f"must be an integer >= 1, got {n!r}"))
        n = None
    for i, point in enumerate(data.isolated):
        path = f"isolated[{i}]"
        if n is not None and len(point.exponents) != n:
            out.append(Violation(f"{path}.exponents",
                                 f"has {len(point.exponents)} entries, half_dimension is {n}"))
        for j, m in enumerate(point.exponents):
            if isinstance(m, bool) or not isinstance(m, int) or m < 1:
                out.append(Violation(f"{path}.exponents[{j}]",
                                     f"exponents must be positive integers, got {m!r}"))
        if point.sign not in (1, -1) or isinstance(point.sign, bool):
            out.append(Violation(f"{path}.sign", f"sign must be 1 or -1, got {point.sign!r}"))
    if data.surfaces and n is not None and n != 2:
        out.append(Violation("surfaces", f"surfaces require dimension 4, got dimension {2 * n}"))
    for i, surf in enumerate(data.surfaces):
        path = f"surfaces[{i}]"
        if isinstance(surf.genus, bool) or not isinstance(surf.genus, int) or surf.genus < 0:
            out.append(Violation(f"{path}.genus", f"must be a nonnegative integer, got {surf.genus!r}"))
        if isinstance(surf.normal_euler, bool) or not isinstance(surf.normal_euler, int):
            out.append(Violation(f"{path}.normal_euler", f"must be an integer, got {surf.normal_euler!r}"))
    return out


def check(data: CircleActionData) -> CircleActionData:
    violations = validate(data)
    if violations:
        raise ValidationError(violations)
    return data


# ---------------------------------------------------------------------------
# generators

def _sign(x: int) -> int:
    return 1 if x > 0 else -1


def cp_action(weights: Sequence[int], label: Optional[str] = None) -> CircleActionData:
    """Linear action on CP^n with pairwise distinct weights ``a_0..a_n``.

    Point ``j`` has exponents ``|a_k - a_j|`` (k != j, in index order) and the
    sign of the product of the signed tangent weights ``a_k - a_j``.
    """
    weights = [int(a) for a in weights]
    if len(weights) < 2:
        raise ArgumentError("cp_action needs at least two weights")
    if len(set(weights)) != len(weights):
        raise DegenerateActionError(
            f"repeated weights {weights}: positive-dimensional fixed set; "
            "use blow_up semantics instead"
        )
    points = []
    for j, aj in enumerate(weights):
        diffs = [ak - aj for k, ak in enumerate(weights) if k != j]
        sign = 1
        for d in diffs:
            sign *= _sign(d)
        points.append(IsolatedFixedPoint(tuple(abs(d) for d in diffs), sign))
    if label is None:
        label = f"CP{len(weights) - 1}(" + ",".join(map(str, weights)) + ")"
    return CircleActionData(len(weights) - 1, tuple(points), (), label)


def sphere_action(exponents: Sequence[int], label: Optional[str] = None) -> CircleActionData:
    """Rotation of S^{2n} with the given exponents; fixed points are the two poles."""
    exponents = tuple(int(m) for m in exponents)
    if not exponents:
        raise ArgumentError("sphere_action needs at least one exponent")
    if any(m < 1 for m in exponents):
        raise ArgumentError(f"exponents must be positive, got {exponents}")
    if label is None:
        label = f"S{2 * len(exponents)}(" + ",".join(map(str, exponents)) + ")"
    poles = (IsolatedFixedPoint(exponents, 1), IsolatedFixedPoint(exponents, -1))
    return CircleActionData(len(exponents), poles, (), label)


# ---------------------------------------------------------------------------
# JSON

def to_document(data: CircleActionData) -> dict:
    doc: dict[str, Any] = {
        "half_dimension": data.half_dimension,
        "isolated": [{"exponents": list(p.exponents), "sign": p.sign} for p in data.isolated],
        "surfaces": [],
    }
    for s in data.surfaces:
        entry: dict[str, Any] = {"genus": s.genus, "normal_euler": s.normal_euler}
        if s.label is not None:
            entry["label"] = s.label
        doc["surfaces"].append(entry)
    if data.label is not None:
        doc["label"] = data.label
    return doc


def serialize(data: CircleActionData) -> bytes:
    """Canonical JSON bytes: sorted keys, two-space indent, trailing newline."""
    text = json.dumps(to_document(data), sort_keys=True, indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def _int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{path}: expected an integer, got {json.dumps(value)}")
    return value


def _label(obj: Mapping, path: str) -> Optional[str]:
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise ParseError(f"{path}.label: expected a string")
    return label


def _object(value, path: str, allowed: set[str], required: set[str]) -> Mapping:
    if not isinstance(value, dict):
        raise ParseError(f"{path}: expected an object")
    unknown = set(value) - allowed
    if unknown:
        raise ParseError(f"{path}: unknown field(s) {sorted(unknown)}")
    missing = required - set(value)
    if missing:
        raise ParseError(f"{path}: missing field(s) {sorted(missing)}")
    return value


def from_document(doc) -> CircleActionData:
    """Build data from a decoded JSON document, checking shapes and invariants."""
    root = _object(doc, "$", {"label", "half_dimension", "isolated", "surfaces"},
                   {"half_dimension"})
    n = _int(root["half_dimension"], "half_dimension")
    isolated = root.get("isolated", [])
    surfaces = root.get("surfaces", [])
    if not isinstance(isolated, list):
        raise ParseError("isolated: expected a list")
    if not isinstance(surfaces, list):
        raise ParseError("surfaces: expected a list")
    points = []
    for i, item in enumerate(isolated):
        path = f"isolated[{i}]"
        item = _object(item, path, {"exponents", "sign"}, {"exponents", "sign"})
        exps = item["exponents"]
        if not isinstance(exps, list):
            raise ParseError(f"{path}.exponents: expected a list")
        exps = tuple(_int(m, f"{path}.exponents[{j}]") for j, m in enumerate(exps))
        sign = _int(item["sign"], f"{path}.sign")
        if sign not in (1, -1):
            raise ParseError(f"{path}.sign: sign must be 1 or -1, got {sign}")
        points.append(IsolatedFixedPoint(exps, sign))
    comps = []
    for i, item in enumerate(surfaces):
        path = f"surfaces[{i}]"
        item = _object(item, path, {"genus", "normal_euler", "label"}, {"genus", "normal_euler"})
        comps.append(SurfaceComponent(_int(item["genus"], f"{path}.genus"),
                                      _int(item["normal_euler"], f"{path}.normal_euler"),
                                      _label(item, path)))
    data = CircleActionData(n, tuple(points), tuple(comps), _label(root, "$"))
    return check(data)


def parse(raw: bytes | str) -> CircleActionData:
    """Inverse of :func:`serialize`; raises ParseError or ValidationError."""
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8 text: {exc}") from None
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


# ManifoldInvariants documents share the key conventions of the reports:
# Pontryagin numbers keyed by "2,1,1", rationals as ints or "a/b" strings.

def rational_to_json(value: Optional[Fraction]):
    if value is None:
        return None
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def rational_from_json(value, path: str) -> Optional[Fraction]:
    if value is None:
        return None
    if isinstance(value, bool):
        raise ParseError(f"{path}: expected a rational, got {json.dumps(value)}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            pass
    raise ParseError(f"{path}: expected an integer, an \"a/b\" string or null, got {json.dumps(value)}")


def invariants_to_document(inv: ManifoldInvariants) -> dict:
    doc: dict[str, Any] = {
        "dimension": inv.dimension,
        "euler": inv.euler,
        "signature": inv.signature,
        "pontryagin": {p.key(): rational_to_json(v) for p, v in inv.pontryagin.items()},
    }
    if inv.label is not None:
        doc["label"] = inv.label
    if inv.notes:
        doc["notes"] = list(inv.notes)
    if inv.torus:
        doc["torus"] = True
    return doc


def invariants_from_document(doc) -> ManifoldInvariants:
    if not isinstance(doc, dict):
        raise ParseError("$: expected an object")
    if "dimension" not in doc:
        raise ParseError("$: missing field 'dimension'")
    dim = _int(doc["dimension"], "dimension")

    def opt_int(key):
        v = doc.get(key)
        return None if v is None else _int(v, key)

    pont_doc = doc.get("pontryagin") or {}
    if not isinstance(pont_doc, dict):
        raise ParseError("pontryagin: expected an object")
    pont = {}
    for key, value in pont_doc.items():
        try:
            part = Partition.parse(key)
        except ArgumentError as exc:
            raise ParseError(f"pontryagin: {exc}") from None
        pont[part] = rational_from_json(value, f"pontryagin[{key!r}]")
    notes = doc.get("notes", [])
    if not isinstance(notes, list) or not all(isinstance(x, str) for x in notes):
        raise ParseError("notes: expected a list of strings")
    try:
        return ManifoldInvariants(dim, opt_int("euler"), opt_int("signature"), pont,
                                  _label(doc, "$"), tuple(notes), bool(doc.get("torus", False)))
    except ArgumentError as exc:
        raise ParseError(str(exc)) from None

