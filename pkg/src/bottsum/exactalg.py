"""Exact rational arithmetic, integer partitions and the Hirzebruch L-polynomials.

Scalars are :class:`fractions.Fraction` throughout.  A Pontryagin polynomial is
a homogeneous polynomial in the classes ``p_1, p_2, ...`` where ``p_i`` has
weight ``i``; its monomials are indexed by partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

ExactRational = Fraction

Rational = Union[int, Fraction]

MAX_L_DEGREE = 5


class ArgumentError(ValueError):
    """An argument lies outside the domain of an operation."""


class UnknownValueError(LookupError):
    """A value needed for an exact result is missing or marked unknown."""


@dataclass(frozen=True, order=False)
class Partition:
    """A partition of ``weight`` into weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ArgumentError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise ArgumentError(f"partition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    # Larger partitions in lexicographic order sort first.
    def __lt__(self, other: Partition) -> bool:
        return self.parts > other.parts

    def key(self) -> str:
        """Compact text form used in JSON documents, e.g. ``"2,1,1"``."""
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError as exc:
            raise ArgumentError(f"cannot read partition {text!r}: {exc}") from None

    def monomial(self) -> str:
        """Human-readable monomial, e.g. ``p_2 p_1^2``."""
        out = []
        for part in sorted(set(self.parts), reverse=True):
            mult = self.parts.count(part)
            out.append(f"p_{part}" + (f"^{mult}" if mult > 1 else ""))
        return " ".join(out)

    def __repr__(self) -> str:
        return f"Partition({self.parts})"


def as_rational(value: Rational) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    return Fraction(value)


def elementary_symmetric(k: int, values: Sequence[Rational]) -> Fraction:
    """Return ``e_k(values)``; ``e_0`` is 1."""
    if not 0 <= k <= len(values):
        raise ArgumentError(f"k={k} outside 0..{len(values)}")
    # e[j] holds e_j of the values consumed so far
    e = [Fraction(1)] + [Fraction(0)] * k
    for v in values:
        v = as_rational(v)
        for j in range(k, 0, -1):
            e[j] += v * e[j - 1]
    return e[k]


def _partitions_desc(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_desc(n - first, first):
            yield (first,) + rest


def partitions_of(p: int) -> list[Partition]:
    """All partitions of ``p`` in lexicographic descending order."""
    if p < 1:
        raise ArgumentError(f"partitions_of needs p >= 1, got {p}")
    return [Partition(parts) for parts in _partitions_desc(p, p)]


@dataclass(frozen=True, eq=True)
class PontryaginPolynomial:
    """Homogeneous polynomial in Pontryagin classes, keyed by monomial partition."""

    terms: Mapping[Partition, Fraction]
    degree: int

    def __post_init__(self):
        clean = {}
        for part, coeff in self.terms.items():
            if part.weight != self.degree:
                raise ArgumentError(
                    f"monomial {part.monomial()} has weight {part.weight}, "
                    f"polynomial degree is {self.degree}"
                )
            coeff = as_rational(coeff)
            if coeff:
                clean[part] = coeff
        ordered = dict(sorted(clean.items()))
        object.__setattr__(self, "terms", MappingProxyType(ordered))

    def __hash__(self):
        return hash((self.degree, tuple(self.terms.items())))

    def __eq__(self, other):
        if not isinstance(other, PontryaginPolynomial):
            return NotImplemented
        return self.degree == other.degree and dict(self.terms) == dict(other.terms)

    def coefficient(self, part: Partition | Sequence[int]) -> Fraction:
        if not isinstance(part, Partition):
            part = Partition(part)
        return self.terms.get(part, Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for part, coeff in self.terms.items():
            pieces.append(f"({coeff})*{part.monomial().replace(' ', '*')}")
        return " + ".join(pieces)


def evaluate(poly: PontryaginPolynomial, values: Mapping[Partition, Rational | None]) -> Fraction:
    """Sum of coefficient times assigned monomial value over the terms of ``poly``."""
    total = Fraction(0)
    for part, coeff in poly.terms.items():
        value = values.get(part)
        if value is None:
            raise UnknownValueError(f"no value for {part.monomial()}")
        total += coeff * as_rational(value)
    return total


# Graded polynomials in p_1, p_2, ... as {sorted-desc exponent tuple: coeff};
# the empty tuple is the constant monomial.
def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(sorted(ma + mb, reverse=True))
            out[m] = out.get(m, Fraction(0)) + ca * cb
    return {m: c for m, c in out.items() if c}


def _add_into(acc: dict, poly: dict, scale: Fraction) -> None:
    for m, c in poly.items():
        acc[m] = acc.get(m, Fraction(0)) + scale * c


def _x_over_tanh_series(k: int) -> list[Fraction]:
    """Coefficients q_0..q_k of x/tanh(x) as a series in y = x**2."""
    num = [Fraction(1, factorial(2 * i)) for i in range(k + 1)]  # cosh
    den = [Fraction(1, factorial(2 * i + 1)) for i in range(k + 1)]  # sinh(x)/x
    q = []
    for i in range(k + 1):
        q.append(num[i] - sum((den[j] * q[i - j] for j in range(1, i + 1)), Fraction(0)))
    return q


def _log_series(q: list[Fraction]) -> list[Fraction]:
    """Coefficients of log(q) for a series with q[0] == 1 (constant term dropped)."""
    k = len(q) - 1
    c = [Fraction(0)] * (k + 1)
    for n in range(1, k + 1):
        s = n * q[n] - sum((j * c[j] * q[n - j] for j in range(1, n)), Fraction(0))
        c[n] = s / n
    return c


def _power_sums_in_elementary(k: int) -> list[dict]:
    """Newton's identities: power sums P_1..P_k written in e_i (= p_i)."""
    power = [{}]
    for i in range(1, k + 1):
        acc: dict = {}
        for j in range(1, i):
            _add_into(acc, _mul({(j,): Fraction(1)}, power[i - j]), Fraction((-1) ** (j - 1)))
        _add_into(acc, {(i,): Fraction(1)}, Fraction((-1) ** (i - 1) * i))
        power.append({m: c for m, c in acc.items() if c})
    return power


@lru_cache(maxsize=None)
def l_genus(k: int) -> PontryaginPolynomial:
    """The k-th Hirzebruch L-polynomial in p_1..p_k.

    The multiplicative sequence of x/tanh(x) is taken through its logarithm:
    the product over k variables equals exp(sum_i c_i P_i) where the c_i are
    the coefficients of log(x/tanh x) in x**2 and P_i are power sums of the
    squared variables, rewritten in elementary symmetric functions.
    """
    if not 1 <= k <= MAX_L_DEGREE:
        raise ArgumentError(f"L-polynomial degree must be in 1..{MAX_L_DEGREE}, got {k}")
    c = _log_series(_x_over_tanh_series(k))
    power = _power_sums_in_elementary(k)
    s = [{}] + [{m: c[i] * v for m, v in power[i].items()} for i in range(1, k + 1)]
    # E = exp(S) graded by weight: m E_m = sum_i i S_i E_{m-i}
    e = [{(): Fraction(1)}]
    for m in range(1, k + 1):
        acc: dict = {}
        for i in range(1, m + 1):
            _add_into(acc, _mul(s[i], e[m - i]), Fraction(i, m))
        e.append({mono: v for mono, v in acc.items() if v})
    return PontryaginPolynomial({Partition(m): v for m, v in e[k].items()}, k)
