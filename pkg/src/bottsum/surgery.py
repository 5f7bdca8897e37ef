"""Equivariant connected sum and blow-up acting on fixed-point data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .actiondata import (
    CircleActionData,
    IsolatedFixedPoint,
    SurfaceComponent,
    check,
    cp_action,
    rational_to_json,
)
from .exactalg import ArgumentError
from .localize import RealizabilityError, euler_number, pontryagin_numbers, signature


class SurgeryHypothesisError(ArgumentError):
    """The selected fixed points do not meet the gluing hypotheses."""


class UnsupportedDegeneracyError(ArgumentError):
    """The blow-up would create a fixed component the data model cannot hold."""


@dataclass(frozen=True)
class SurgeryOp:
    """What a surgery did, for bookkeeping and reports."""

    kind: str  # "connected_sum" or "blow_up"
    points: tuple[int, ...]
    exponents: tuple[int, ...]
    sign: int  # sign of the (first) selected point
    regime: Optional[str] = None  # blow-up: "surface" or "isolated"

    def to_json(self) -> dict:
        doc = {"op": self.kind, "points": list(self.points),
               "exponents": list(self.exponents), "sign": self.sign}
        if self.regime is not None:
            doc["regime"] = self.regime
        return doc


def _point(data: CircleActionData, index: int) -> IsolatedFixedPoint:
    if not 0 <= index < len(data.isolated):
        raise ArgumentError(f"point index {index} out of range 0..{len(data.isolated) - 1}")
    return data.isolated[index]


def _without(points: Sequence[IsolatedFixedPoint], index: int) -> tuple[IsolatedFixedPoint, ...]:
    return tuple(p for k, p in enumerate(points) if k != index)


def connected_sum(a: CircleActionData, ia: int, b: CircleActionData, ib: int) -> CircleActionData:
    """Glue ``a`` and ``b`` at isolated points with equal exponents and opposite signs."""
    check(a)
    check(b)
    if a.half_dimension != b.half_dimension:
        raise ArgumentError(f"dimensions differ: {a.dimension} and {b.dimension}")
    x, y = _point(a, ia), _point(b, ib)
    if sorted(x.exponents) != sorted(y.exponents):
        raise SurgeryHypothesisError(
            f"equivariant connected sum needs equal exponents (Definition 2.1), "
            f"got {x.exponents} and {y.exponents}"
        )
    if x.sign != -y.sign:
        raise SurgeryHypothesisError(
            f"equivariant connected sum needs opposite signs (Definition 2.1), both are {x.sign:+d}"
        )
    label = None
    if a.label is not None or b.label is not None:
        label = f"{a.label or '?'}#{b.label or '?'}"
    return CircleActionData(
        a.half_dimension,
        _without(a.isolated, ia) + _without(b.isolated, ib),
        a.surfaces + b.surfaces,
        label,
    )


def blow_up_regime(data: CircleActionData, index: int) -> str:
    point = _point(data, index)
    m = point.exponents
    n = data.half_dimension
    if n == 2 and m[0] == m[1]:
        return "surface"
    if len(set((0,) + m)) == n + 1:
        return "isolated"
    if len(set(m)) == 1:
        raise UnsupportedDegeneracyError(
            f"equal exponents {m} in dimension {data.dimension}: the exceptional "
            f"CP^{n - 1} is not a surface"
        )
    raise UnsupportedDegeneracyError(f"exponents {m} repeat without all being equal")


def blow_up(data: CircleActionData, index: int) -> CircleActionData:
    """Replace an isolated point by the fixed data of ``-sign * CP^r``.

    Equal exponents in dimension 4 leave a sphere of normal Euler number
    ``-sign``; pairwise distinct exponents leave the r isolated points of the
    weighted CP^r away from the gluing point.
    """
    check(data)
    point = _point(data, index)
    regime = blow_up_regime(data, index)
    rest = _without(data.isolated, index)
    label = None if data.label is None else f"Bl[{index}]({data.label})"
    if regime == "surface":
        exceptional = SurfaceComponent(0, -point.sign, "E")
        return CircleActionData(data.half_dimension, rest, data.surfaces + (exceptional,), label)
    model = cp_action((0,) + point.exponents)
    new = tuple(IsolatedFixedPoint(p.exponents, -point.sign * p.sign) for p in model.isolated[1:])
    return CircleActionData(data.half_dimension, rest + new, data.surfaces, label)


def describe_blow_up(data: CircleActionData, index: int) -> SurgeryOp:
    point = _point(data, index)
    return SurgeryOp("blow_up", (index,), point.exponents, point.sign, blow_up_regime(data, index))


def describe_connected_sum(a: CircleActionData, ia: int, b: CircleActionData, ib: int) -> SurgeryOp:
    x = _point(a, ia)
    _point(b, ib)
    return SurgeryOp("connected_sum", (ia, ib), x.exponents, x.sign)


def _summary(data: CircleActionData) -> dict:
    try:
        sig: Optional[int] = signature(data).value
    except (ArgumentError, RealizabilityError):
        sig = None
    return {"euler": euler_number(data), "signature": sig, "pontryagin": pontryagin_numbers(data)}


def _add(x, y):
    return None if x is None or y is None else x + y


def _projective_space(r: int) -> dict:
    return _summary(cp_action(range(r + 1)))


def bookkeeping(
    before: Union[CircleActionData, tuple[CircleActionData, CircleActionData]],
    after: CircleActionData,
    op: SurgeryOp,
) -> dict:
    """Compare localized invariants of ``after`` with those predicted from ``before``.

    A connected sum adds signatures and Pontryagin numbers and lowers the sum
    of Euler numbers by 2.  A blow-up at a point of sign ``eps`` is a connected
    sum with ``-eps * CP^r``.
    """
    if op.kind == "connected_sum":
        a, b = before
        sa, sb = _summary(a), _summary(b)
        start = {"euler": sa["euler"] + sb["euler"], "signature": _add(sa["signature"], sb["signature"]),
                 "pontryagin": {k: sa["pontryagin"][k] + sb["pontryagin"][k] for k in sa["pontryagin"]}}
        predicted = {"euler": start["euler"] - 2, "signature": start["signature"],
                     "pontryagin": dict(start["pontryagin"])}
        shown_before = {"a": sa, "b": sb}
        # deltas are measured against the first summand
        base = sa
    elif op.kind == "blow_up":
        start = _summary(before)
        r = len(op.exponents)
        cp = _projective_space(r)
        eps = op.sign
        predicted = {
            "euler": start["euler"] + cp["euler"] - 2,
            "signature": None if start["signature"] is None else start["signature"] - eps * cp["signature"],
            "pontryagin": {k: v - eps * cp["pontryagin"][k] for k, v in start["pontryagin"].items()},
        }
        shown_before = start
        base = start
    else:
        raise ArgumentError(f"unknown surgery {op.kind!r}")
    observed = _summary(after)
    consistent = all(
        predicted[key] is None or predicted[key] == observed[key]
        for key in ("euler", "signature", "pontryagin")
    )

    def js(summary):
        return {"euler": summary["euler"], "signature": summary["signature"],
                "pontryagin": {p.key(): rational_to_json(v) for p, v in summary["pontryagin"].items()}}

    deltas = {
        "euler": observed["euler"] - base["euler"],
        "signature": None if observed["signature"] is None or base["signature"] is None
        else observed["signature"] - base["signature"],
    }
    return {
        "op": op.to_json(),
        "before": {k: js(v) for k, v in shown_before.items()} if op.kind == "connected_sum" else js(shown_before),
        "after": js(observed),
        "predicted": js(predicted),
        "delta": deltas,
        "consistent": consistent,
    }

