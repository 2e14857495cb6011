"""Sparse single-variable Laurent polynomials with integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

__all__ = ["LaurentPolynomial"]

_TERM = re.compile(r"^(-?\d+)\*([A-Za-z]+)\^(-?\d+)$")


class LaurentPolynomial:
    """Immutable ``{exponent: coefficient}`` map; zero coefficients are dropped.

    >>> A = LaurentPolynomial.monomial(1, var="A")
    >>> str(-(A**2) - A**-2)
    '-1*A^-2+-1*A^2'
    """

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "A"):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self.var = var

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "A") -> "LaurentPolynomial":
        return cls({exponent: coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "A") -> "LaurentPolynomial":
        return cls({0: c}, var)

    @classmethod
    def parse(cls, text: str) -> "LaurentPolynomial":
        text = text.strip()
        if text == "0":
            return cls()
        var = None
        terms = []
        for chunk in text.split("+"):
            m = _TERM.match(chunk.strip())
            if not m:
                raise ValueError(f"bad term {chunk!r}")
            if var is not None and m.group(2) != var:
                raise ValueError("mixed variables")
            var = m.group(2)
            terms.append((int(m.group(3)), int(m.group(1))))
        return cls(terms, var or "A")

    # -- inspection ------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    def span(self) -> int:
        return self.max_degree() - self.min_degree()

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other: Union["LaurentPolynomial", int]) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other._terms and self._terms and other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPolynomial({-e * -k: c ** -k}, self.var)
        result = LaurentPolynomial.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- substitutions ---------------------------------------------------

    def substitute_power(self, factor: int, var: str | None = None) -> "LaurentPolynomial":
        """Replace ``x`` by ``y**factor`` (``factor=-1`` inverts the variable)."""
        return LaurentPolynomial(
            {e * factor: c for e, c in self._terms.items()}, var or self.var
        )

    def inverted(self) -> "LaurentPolynomial":
        return self.substitute_power(-1)

    def shifted(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()}, self.var)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.var)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.var == other.var and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.var, tuple(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return "+".join(f"{c}*{self.var}^{e}" for e, c in self._terms.items())

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"
