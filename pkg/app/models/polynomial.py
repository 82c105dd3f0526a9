from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from types import MappingProxyType

from app.core.config import settings
from app.core.errors import CoefficientOverflowError, InputFormatError

Exponent = tuple[int, int]

_TERM = re.compile(r"^(\d*)(x(?:\^(\d+))?)?(y(?:\^(\d+))?)?$")


def _term_order(exponent: Exponent) -> tuple[int, int, int]:
    k, l = exponent
    return (k + l, l, k)


def _check(coefficient: int, limit: int) -> int:
    if coefficient > limit:
        raise CoefficientOverflowError(f"coefficient {coefficient} exceeds {limit}")
    return coefficient


class BivariatePolynomial:
    """Sparse polynomial in x, y with positive integer coefficients.

    Terms map (k, l) to the coefficient of x^k y^l; zero coefficients are never
    stored, so equality of term maps is equality of polynomials.
    """
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        canonical: dict[Exponent, int] = {}
        for (k, l), c in items:
            if k < 0 or l < 0 or c < 0:
                raise ValueError(f"negative exponent or coefficient in term {(k, l)}: {c}")
            if c:
                canonical[(k, l)] = canonical.get((k, l), 0) + c
        for c in canonical.values():
            _check(c, settings.COEFFICIENT_LIMIT)
        ordered = dict(sorted(canonical.items(), key=lambda item: _term_order(item[0])))
        self.terms: Mapping[Exponent, int] = MappingProxyType(ordered)

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    def coefficient(self, k: int, l: int = 0) -> int:
        return self.terms.get((k, l), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return poly_add(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return poly_eq(self, other)

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __str__(self) -> str:
        return poly_to_string(self)

    def __repr__(self) -> str:
        return f"BivariatePolynomial({poly_to_string(self)!r})"

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**k * y**l for (k, l), c in self.terms.items())

    def y0_slice(self) -> "BivariatePolynomial":
        """Terms without y, i.e. the polynomial at y = 0."""
        return BivariatePolynomial({(k, l): c for (k, l), c in self.terms.items() if l == 0})

    def to_json(self) -> list[list[int]]:
        """List of [k, l, coefficient] triples sorted by (k + l, l, k)."""
        return [[k, l, c] for (k, l), c in self.terms.items()]

    @classmethod
    def from_json(cls, triples: Iterable[Iterable[int]]) -> "BivariatePolynomial":
        terms: dict[Exponent, int] = {}
        for k, l, c in triples:
            terms[(k, l)] = terms.get((k, l), 0) + c
        return cls(terms)


def poly_add(a: BivariatePolynomial, b: BivariatePolynomial) -> BivariatePolynomial:
    """Termwise sum; raises CoefficientOverflowError past the configured limit."""
    terms = dict(a.terms)
    for exponent, c in b.terms.items():
        terms[exponent] = _check(terms.get(exponent, 0) + c, settings.COEFFICIENT_LIMIT)
    return BivariatePolynomial(terms)


def poly_eq(a: BivariatePolynomial, b: BivariatePolynomial) -> bool:
    return dict(a.terms) == dict(b.terms)


def _monomial(variable: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return variable
    return f"{variable}^{exponent}"


def poly_to_string(a: BivariatePolynomial) -> str:
    """Render as e.g. ``3+2x+y``: ascending total degree, then ascending y-degree."""
    if a.is_zero():
        return "0"
    parts = []
    for (k, l), c in a.terms.items():
        monomial = _monomial("x", k) + _monomial("y", l)
        if not monomial:
            parts.append(str(c))
        elif c == 1:
            parts.append(monomial)
        else:
            parts.append(f"{c}{monomial}")
    return "+".join(parts)


def parse_polynomial(text: str) -> BivariatePolynomial:
    """Inverse of poly_to_string; accepts any term order and repeated terms."""
    cleaned = re.sub(r"\s+", "", text)
    if cleaned in ("", "0"):
        return BivariatePolynomial.zero()
    terms: dict[Exponent, int] = {}
    for chunk in cleaned.split("+"):
        match = _TERM.match(chunk)
        if not chunk or not match or not (match.group(1) or match.group(2) or match.group(4)):
            raise InputFormatError(f"cannot parse polynomial term {chunk!r}")
        digits, x_part, x_exp, y_part, y_exp = match.groups()
        k = (int(x_exp) if x_exp else 1) if x_part else 0
        l = (int(y_exp) if y_exp else 1) if y_part else 0
        c = int(digits) if digits else 1
        terms[(k, l)] = terms.get((k, l), 0) + c
    return BivariatePolynomial(terms)
