"""Exact scalars and sparse exponent polynomials.

Index values are exact rationals.  ``Rat`` is ``fractions.Fraction``, which
already keeps numerator/denominator reduced with a positive denominator and
grows without overflow (Python integers are arbitrary precision), so the
scalar layer is thin wrappers plus the power helpers the index transforms
need.

``ExpPoly`` is the polynomial form of an index: a sparse sum of terms
``coeff * x^exponent`` with integer coefficients and *rational* exponents
(reciprocal-kernel exponents such as 48/(n-2)^2 are not integers).  Values
are immutable once built and safe to share between threads.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DivisionByZero, UnsupportedEvaluation

Rat = Fraction

RatLike = Union[Rat, int]


def rat(num, den=1) -> Rat:
    """Build a reduced rational, raising DivisionByZero on a zero denominator."""
    try:
        return Fraction(num, den)
    except ZeroDivisionError as exc:
        raise DivisionByZero(f"rational {num}/{den}") from exc


def rat_pow(base: RatLike, k: int) -> Rat:
    """Exact integer power of a rational; 0 to a negative power is an error."""
    if k < 0 and base == 0:
        raise DivisionByZero("0 raised to a negative power")
    return Fraction(base) ** k


def general_pow(base: RatLike, a: RatLike) -> Union[Rat, float]:
    """``base ** a`` for a rational exponent.

    Integral ``a`` stays exact; a non-integer exponent leaves the rationals,
    so the result is a float (documented 1e-9 relative tolerance) and the
    base must be positive.
    """
    a = Fraction(a)
    if a.denominator == 1:
        return rat_pow(base, a.numerator)
    if base < 0:
        raise UnsupportedEvaluation(f"negative base {base} with non-integer exponent {a}")
    if base == 0:
        if a < 0:
            raise DivisionByZero("0 raised to a negative power")
        return Fraction(0)
    return float(base) ** float(a)


def exact_sqrt(value: RatLike):
    """Return the exact rational square root of ``value``, or None if irrational."""
    value = Fraction(value)
    if value < 0:
        raise UnsupportedEvaluation(f"square root of negative value {value}")
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def sqrt_sum(radicands: Iterable[RatLike]) -> Union[Rat, float]:
    """Sum of square roots: exact when every radicand is a perfect square.

    Square-root indices report exactly when possible (e.g. regular graphs,
    where every radicand collapses); otherwise the sum falls back to floats.
    """
    exact_total = Fraction(0)
    items = [Fraction(r) for r in radicands]
    for r in items:
        root = exact_sqrt(r)
        if root is None:
            return math.fsum(math.sqrt(r) for r in items)
        exact_total += root
    return exact_total


_TERM_RE = re.compile(r"^(-?\d+)\*x\^(-?\d+)(?:/(\d+))?$")


class ExpPoly:
    """Sparse polynomial in one variable with rational exponents.

    Terms map exponent -> integer coefficient; zero coefficients are never
    stored and exponents are unique, so equality is structural.  Instances
    are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        acc: dict[Fraction, int] = {}
        if terms:
            pairs = terms.items() if isinstance(terms, Mapping) else terms
            for exponent, coeff in pairs:
                exponent = Fraction(exponent)
                coeff = int(coeff)
                acc[exponent] = acc.get(exponent, 0) + coeff
        object.__setattr__(self, "_terms", {e: c for e, c in acc.items() if c != 0})

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    @classmethod
    def zero(cls) -> "ExpPoly":
        return cls()

    @classmethod
    def monomial(cls, exponent: RatLike, coeff: int = 1) -> "ExpPoly":
        return cls({Fraction(exponent): coeff})

    def terms(self) -> list[tuple[Fraction, int]]:
        """Term list in canonical order (descending exponent)."""
        return sorted(self._terms.items(), key=lambda item: item[0], reverse=True)

    def coefficient(self, exponent: RatLike) -> int:
        return self._terms.get(Fraction(exponent), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        if not isinstance(other, ExpPoly):
            return NotImplemented
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, 0) + c
        return ExpPoly(merged)

    def __mul__(self, other) -> "ExpPoly":
        if isinstance(other, int):
            return ExpPoly({e: c * other for e, c in self._terms.items()})
        if isinstance(other, ExpPoly):
            # Product of monomials adds exponents: x^e1 * x^e2 = x^(e1+e2).
            out: dict[Fraction, int] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = e1 + e2
                    out[e] = out.get(e, 0) + c1 * c2
            return ExpPoly(out)
        return NotImplemented

    __rmul__ = __mul__

    def evaluate(self, x: RatLike) -> Rat:
        """Exact evaluation at a rational point.

        Non-integer exponents only support x = 1 (where every term is its
        coefficient); negative exponents require x != 0.
        """
        x = Fraction(x)
        if x == 1:
            return Fraction(sum(self._terms.values()))
        total = Fraction(0)
        for e, c in self._terms.items():
            if e.denominator != 1:
                raise UnsupportedEvaluation(
                    f"non-integer exponent {e} is only evaluable at x=1"
                )
            if e < 0 and x <= 0:
                raise UnsupportedEvaluation(
                    f"negative exponent {e} requires x > 0, got {x}"
                )
            total += c * rat_pow(x, e.numerator)
        return total

    def derivative_at_one(self) -> Rat:
        """d/dx at x=1: sum of coefficient * exponent (exact)."""
        return sum((c * e for e, c in self._terms.items()), Fraction(0))

    def render(self) -> str:
        """Canonical text form, bit-exact for golden files.

        Terms descend by exponent as ``<coeff>*x^<num>/<den>`` with ``/den``
        omitted when the exponent is an integer, joined by `` + ``.
        """
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            suffix = f"{e.numerator}" if e.denominator == 1 else f"{e.numerator}/{e.denominator}"
            parts.append(f"{c}*x^{suffix}")
        return " + ".join(parts)

    __str__ = render

    def __repr__(self) -> str:
        return f"ExpPoly({self.render()!r})"

    @classmethod
    def parse(cls, text: str) -> "ExpPoly":
        """Inverse of render: parse(render(p)) == p for canonical output."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms = []
        for part in text.split(" + "):
            match = _TERM_RE.match(part.strip())
            if match is None:
                raise UnsupportedEvaluation(f"unparseable polynomial term {part!r}")
            coeff, num, den = match.groups()
            terms.append((Fraction(int(num), int(den) if den else 1), int(coeff)))
        return cls(terms)
