"""Characteristic numbers from fixed-point data by Bott localization.

Each isolated fixed point with exponents ``m`` and sign ``eps`` contributes
``eps * f(m**2) / prod(m)`` to the localized integral of an invariant
polynomial ``f`` written in the elementary symmetric functions of the squared
exponents.  With this normalization ``p_1[CP^2] = +3``.  A fixed surface in
dimension 4 contributes its normal Euler number to ``p_1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Any, Sequence

from .actiondata import (
    CircleActionData,
    IsolatedFixedPoint,
    ManifoldInvariants,
    check,
    rational_to_json,
)
from .exactalg import ArgumentError, Partition, elementary_symmetric, evaluate, l_genus, partitions_of

CONVENTION = "p_1[CP^2]=+3 orientation convention"

# Verdict and method identifiers are part of the JSON report format.
ISOLATED_SINGULARITIES = "1.1"
FIXED_SURFACE_SIGNATURE = "2.8"


class UnsupportedDataError(ArgumentError):
    """The data lies outside what a closed-form sum can handle."""


class RealizabilityError(ValueError):
    """The data cannot come from an actual circle action."""


def _parts(monomial: Partition | Sequence[int] | None) -> tuple[int, ...]:
    if monomial is None:
        return ()
    if isinstance(monomial, Partition):
        return monomial.parts
    return Partition(monomial).parts if len(monomial) else ()


def point_term(point: IsolatedFixedPoint, parts: Sequence[int]) -> Fraction:
    """Contribution of one isolated point to the localized monomial ``prod e_i(m^2)``."""
    squares = [m * m for m in point.exponents]
    num = Fraction(point.sign)
    for i in parts:
        num *= elementary_symmetric(i, squares)
    return num / prod(point.exponents)


def vanishing_sum(data: CircleActionData, monomial: Partition | Sequence[int] | None = None) -> Fraction:
    """Localized sum of a monomial of degree below the dimension.

    ``monomial`` lists the indices of the ``e_i(m^2)`` factors; ``None`` or an
    empty sequence means ``f = 1``.  Genuine actions give exactly 0.
    """
    check(data)
    if data.surfaces:
        raise UnsupportedDataError("vanishing sums over fixed surfaces are not supported")
    parts = _parts(monomial)
    if 2 * sum(parts) >= data.half_dimension:
        raise ArgumentError(
            f"monomial of weight {sum(parts)} has degree {2 * sum(parts)} >= "
            f"{data.half_dimension}; use pontryagin_number for top-degree monomials"
        )
    return sum((point_term(p, parts) for p in data.isolated), Fraction(0))


def pontryagin_number(data: CircleActionData, index: Partition | Sequence[int]) -> Fraction:
    """The Pontryagin number ``p_I[M]`` localized at the fixed-point data."""
    check(data)
    part = index if isinstance(index, Partition) else Partition(index)
    n = data.half_dimension
    if n % 2 or part.weight != n // 2:
        raise ArgumentError(
            f"{part.monomial()} has weight {part.weight}; a {2 * n}-manifold needs weight {n / 2:g}"
        )
    total = sum((point_term(p, part.parts) for p in data.isolated), Fraction(0))
    if data.surfaces:
        if n != 2:
            raise UnsupportedDataError("fixed surfaces are only supported in dimension 4")
        total += sum(s.normal_euler for s in data.surfaces)
    return total


def pontryagin_numbers(data: CircleActionData) -> dict[Partition, Fraction]:
    n = data.half_dimension
    if n % 2:
        return {}
    return {part: pontryagin_number(data, part) for part in partitions_of(n // 2)}


def euler_number(data: CircleActionData) -> int:
    """Euler number of the fixed set, which equals that of the manifold."""
    check(data)
    return len(data.isolated) + sum(s.euler for s in data.surfaces)


@dataclass(frozen=True)
class SignatureResult:
    value: int
    method: str


def _equal_exponents(data: CircleActionData) -> bool:
    return all(len(set(p.exponents)) == 1 for p in data.isolated)


def signature(data: CircleActionData) -> SignatureResult:
    """Signature of the manifold, with a tag naming how it was obtained.

    In dimension 4 with fixed surfaces and equal exponents at every isolated
    point, the sign sum, the normal Euler sum and ``p_1/3`` must agree;
    otherwise :class:`RealizabilityError` is raised.
    """
    check(data)
    n = data.half_dimension
    if n % 2:
        return SignatureResult(0, "trivial-dimension")
    if data.surfaces and _equal_exponents(data):
        signs = sum(p.sign for p in data.isolated)
        normal = sum(s.normal_euler for s in data.surfaces)
        p1 = pontryagin_number(data, (1,))
        if not signs == normal == p1 / 3:
            raise RealizabilityError(
                "data not realizable by a circle action (Theorem 2.8 violated): "
                f"sum of signs {signs}, normal Euler sum {normal}, p_1/3 = {p1 / 3}"
            )
        return SignatureResult(signs, "theorem-2.8")
    value = evaluate(l_genus(n // 2), pontryagin_numbers(data))
    if value.denominator != 1:
        raise RealizabilityError(
            f"data not realizable by a circle action: L-genus evaluates to {value}"
        )
    return SignatureResult(int(value), "L-genus")


def invariants(data: CircleActionData) -> ManifoldInvariants:
    """Euler number, signature and Pontryagin numbers of the data.

    The signature is left unknown when the L-polynomial degree is out of range.
    """
    notes = [CONVENTION]
    try:
        sig: int | None = signature(data).value
    except ArgumentError as exc:
        sig = None
        notes.append(f"signature unknown: {exc}")
    return ManifoldInvariants(
        data.dimension, euler_number(data), sig, pontryagin_numbers(data), data.label, tuple(notes)
    )


@dataclass
class Verdict:
    theorem: str
    applicable: bool
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "applicable": self.applicable,
                "pass": self.passed, "details": self.details}


def verify_isolated_singularities(data: CircleActionData) -> Verdict:
    """All exponents 1, no fixed surfaces: sign sum 0, Pontryagin numbers 0, Euler even."""
    check(data)
    if data.surfaces or any(m != 1 for p in data.isolated for m in p.exponents):
        return Verdict(ISOLATED_SINGULARITIES, False, False,
                       {"reason": "needs isolated fixed points with all exponents 1 and no surfaces"})
    signs = sum(p.sign for p in data.isolated)
    pont = pontryagin_numbers(data)
    euler = euler_number(data)
    fixed = len(data.isolated)
    ok = signs == 0 and all(v == 0 for v in pont.values()) and euler % 2 == 0 and euler == fixed
    details = {
        "sum_signs": signs,
        "pontryagin": {p.key(): rational_to_json(v) for p, v in pont.items()},
        "euler": euler,
        "fixed_points": fixed,
        "euler_even": euler % 2 == 0,
    }
    return Verdict(ISOLATED_SINGULARITIES, True, ok, details)


def verify_fixed_surface_signature(data: CircleActionData) -> Verdict:
    """Dimension 4, equal exponents: ``p_1/3``, sign sum and normal Euler sum coincide."""
    check(data)
    if data.half_dimension != 2 or not _equal_exponents(data):
        return Verdict(FIXED_SURFACE_SIGNATURE, False, False,
                       {"reason": "needs dimension 4 with equal exponents at every isolated point"})
    p1_third = pontryagin_number(data, (1,)) / 3
    signs = sum(p.sign for p in data.isolated)
    normal = sum(s.normal_euler for s in data.surfaces)
    details = {"p1_over_3": rational_to_json(p1_third), "sum_signs": signs, "normal_euler_sum": normal}
    return Verdict(FIXED_SURFACE_SIGNATURE, True, p1_third == signs == normal, details)


VERIFIERS = {
    ISOLATED_SINGULARITIES: verify_isolated_singularities,
    FIXED_SURFACE_SIGNATURE: verify_fixed_surface_signature,
}
