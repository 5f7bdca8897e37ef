"""Necessary conditions for a manifold to carry a harmonic morphism with 1-dimensional fibres.

Conditions checked by :func:`check_domain`:

* dimension >= 5: every Pontryagin number vanishes, the signature vanishes
  and the Euler number is zero;
* dimension 4: ``p_1 = 0`` (equivalently signature 0) and the Euler number is
  even and nonnegative; it then equals the number of critical points.

Unknown invariants never count as violations.  A verdict is ``no`` as soon as
one known invariant breaks a condition, ``inconclusive`` when no known value
does but some needed one is missing, ``yes`` otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .actiondata import ManifoldInvariants, cp_action, rational_to_json, sphere_action
from .exactalg import MAX_L_DEGREE, ArgumentError, evaluate, l_genus, partitions_of
from .localize import invariants as localized_invariants

ANCHOR = "Theorem 3.3"


class OutOfScopeError(ArgumentError):
    """Dimension below 4."""


class InconsistentInvariantsError(ArgumentError):
    """Stored signature and Pontryagin numbers contradict the signature theorem."""


class CatalogLookupError(LookupError):
    pass


@dataclass(frozen=True)
class ObstructionVerdict:
    admissible: str  # "yes", "no" or "inconclusive"
    violations: tuple[tuple[str, str, object], ...] = ()
    critical_points: Optional[int] = None
    missing: tuple[str, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "admissible": self.admissible,
            "violations": [
                {"condition": cond, "anchor": anchor, "observed": rational_to_json(obs)}
                for cond, anchor, obs in self.violations
            ],
            "critical_points": self.critical_points,
        }


def _derived_signature(inv: ManifoldInvariants) -> Optional[Fraction]:
    """Signature from the Pontryagin numbers, when all are known and L is tabulated."""
    k = inv.dimension // 4
    if inv.dimension % 4 or not 1 <= k <= MAX_L_DEGREE or not inv.pontryagin_known():
        return None
    return evaluate(l_genus(k), inv.pontryagin)


def check_domain(inv: ManifoldInvariants) -> ObstructionVerdict:
    if inv.dimension < 4:
        raise OutOfScopeError(f"dimension {inv.dimension} < 4 is outside the obstruction theory")
    derived = _derived_signature(inv)
    if derived is not None and inv.signature is not None and derived != inv.signature:
        raise InconsistentInvariantsError(
            f"stored signature {inv.signature} disagrees with L-genus value {derived}"
        )

    violations = []
    missing = []

    def need(name: str, value, ok: Callable[[object], bool], condition: str):
        if value is None:
            missing.append(name)
        elif not ok(value):
            violations.append((condition, ANCHOR, value))

    if inv.dimension == 4:
        p1 = inv.pontryagin[next(iter(inv.pontryagin))]
        if p1 is not None:
            need("p_1", p1, lambda v: v == 0, "p1=0")
        else:
            need("signature", inv.signature, lambda v: v == 0, "signature=0")
        need("euler", inv.euler, lambda v: v % 2 == 0, "euler even")
        need("euler", inv.euler, lambda v: v >= 0, "euler>=0")
    else:
        for part, value in inv.pontryagin.items():
            need(part.monomial(), value, lambda v: v == 0, f"{part.monomial().replace(' ', '')}=0")
        if inv.signature is not None:
            need("signature", inv.signature, lambda v: v == 0, "signature=0")
        need("euler", inv.euler, lambda v: v == 0, "euler=0")

    if violations:
        return ObstructionVerdict("no", tuple(violations), None, tuple(missing))
    if missing:
        return ObstructionVerdict("inconclusive", (), None, tuple(dict.fromkeys(missing)))
    critical = inv.euler if inv.dimension == 4 else None
    return ObstructionVerdict("yes", (), critical)


# ---------------------------------------------------------------------------
# combinators

def combine_connected_sum(a: ManifoldInvariants, b: ManifoldInvariants) -> ManifoldInvariants:
    if a.dimension != b.dimension:
        raise ArgumentError(f"connected sum needs equal dimensions, got {a.dimension} and {b.dimension}")
    if a.dimension % 2:
        raise ArgumentError("Euler bookkeeping for connected sums needs even dimension")

    def add(x, y):
        return None if x is None or y is None else x + y

    return ManifoldInvariants(
        a.dimension,
        None if a.euler is None or b.euler is None else a.euler + b.euler - 2,
        add(a.signature, b.signature),
        {p: add(a.pontryagin[p], b.pontryagin[p]) for p in a.pontryagin},
        f"{a.label or '?'}#{b.label or '?'}",
        ("connected sum: signature and Pontryagin numbers add, Euler numbers add minus 2",),
    )


def combine_product(a: ManifoldInvariants, b: ManifoldInvariants) -> ManifoldInvariants:
    dim = a.dimension + b.dimension
    euler = None if a.euler is None or b.euler is None else a.euler * b.euler
    if dim % 4:
        sig = 0
    elif a.signature is not None and b.signature is not None:
        sig = a.signature * b.signature
    else:
        sig = None
    # a flat torus factor kills every Pontryagin number of the product
    flat = any(
        t.torus and o.pontryagin_known() and all(v == 0 for v in o.pontryagin.values())
        for t, o in ((a, b), (b, a))
    )
    pont = {}
    if dim % 4 == 0:
        pont = {p: Fraction(0) if flat else None for p in partitions_of(dim // 4)}
    return ManifoldInvariants(
        dim, euler, sig, pont, f"{a.label or '?'}x{b.label or '?'}",
        ("product: Euler number and signature multiply",),
        a.torus and b.torus,
    )


# ---------------------------------------------------------------------------
# catalog

def surface(genus: int) -> ManifoldInvariants:
    if genus < 0:
        raise ArgumentError("genus must be nonnegative")
    return ManifoldInvariants(2, 2 - 2 * genus, 0, {}, f"P_{genus}", ("surface of genus g: Euler number 2-2g",),
                              torus=genus == 1)


def projective_space(n: int) -> ManifoldInvariants:
    if n < 1:
        raise ArgumentError("CP^n needs n >= 1")
    loc = localized_invariants(cp_action(range(n + 1)))
    notes = ("Euler number n+1",
             "signature and Pontryagin numbers localized from the action with weights 0..n")
    return ManifoldInvariants(2 * n, n + 1, loc.signature, loc.pontryagin, f"CP^{n}", notes)


def sphere(dim: int) -> ManifoldInvariants:
    if dim < 2 or dim % 2:
        raise ArgumentError("S^{2n} needs an even dimension >= 2")
    loc = localized_invariants(sphere_action([1] * (dim // 2)))
    return ManifoldInvariants(dim, loc.euler, loc.signature, loc.pontryagin, f"S^{dim}",
                              ("localized from the rotation with two poles",))


def torus(dim: int) -> ManifoldInvariants:
    if dim < 1:
        raise ArgumentError("T^m needs m >= 1")
    zero = {p: Fraction(0) for p in partitions_of(dim // 4)} if dim % 4 == 0 else {}
    return ManifoldInvariants(dim, 0, 0, zero, f"T^{dim}", ("flat torus: every invariant vanishes",),
                              torus=True)


def k3() -> ManifoldInvariants:
    return ManifoldInvariants(4, None, -16, {}, "K3",
                              ("signature -16; Euler number not recorded here",))


def sphere_times_surface(dim: int, genus: int) -> ManifoldInvariants:
    inv = combine_product(sphere(dim), surface(genus))
    return ManifoldInvariants(inv.dimension, inv.euler, inv.signature, inv.pontryagin,
                              f"S^{dim}xP_{genus}", inv.notes + ("Euler number 4(1-g)",))


def cp2_minus_cp2() -> ManifoldInvariants:
    cp2 = projective_space(2)
    inv = combine_connected_sum(cp2, cp2.reversed())
    return ManifoldInvariants(4, inv.euler, inv.signature, inv.pontryagin, "CP2#-CP2", inv.notes)


CATALOG = {
    "CP^n": (re.compile(r"CP\^?(\d+)"), lambda m: projective_space(int(m[1]))),
    "K3": (re.compile(r"K3"), lambda m: k3()),
    "S^{2n}xP_g": (re.compile(r"S\^?(\d+)[xX]P_?(\d+)"),
                   lambda m: sphere_times_surface(int(m[1]), int(m[2]))),
    "T^m": (re.compile(r"T\^?(\d+)"), lambda m: torus(int(m[1]))),
    "S^{2n}": (re.compile(r"S\^?(\d+)"), lambda m: sphere(int(m[1]))),
    "CP2#-CP2": (re.compile(r"CP\^?2#-CP\^?2"), lambda m: cp2_minus_cp2()),
}

EXAMPLES = {"CP^n": "CP^4", "K3": "K3", "S^{2n}xP_g": "S^4xP_2", "T^m": "T^4",
            "S^{2n}": "S^4", "CP2#-CP2": "CP2#-CP2"}


def catalog(name: str) -> ManifoldInvariants:
    """Invariants of a named manifold, e.g. ``CP^3``, ``K3``, ``S^4xP_2``, ``T^4``."""
    key = name.strip()
    for pattern, build in CATALOG.values():
        m = pattern.fullmatch(key)
        if m:
            return build(m)
    raise CatalogLookupError(f"unknown manifold {name!r}; known forms: {', '.join(CATALOG)}")
