"""Independent reference computations for the test suite.

These deliberately avoid the package's own algorithms: the bracket is the
plain 2^n state sum with union-find loop counting, and Jones polynomials
from the KnotInfo fixture are parsed with sympy.
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

import sympy

from tieknots.laurent import LaurentPolynomial

FIXTURE = Path(__file__).parent / "data" / "knotinfo_le8.json"


def knotinfo() -> dict[str, dict]:
    return {row["name"]: row for row in json.loads(FIXTURE.read_text("utf-8"))}


def _find(parent: dict, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def brute_bracket(pd) -> LaurentPolynomial:
    """<K> = sum over states of A^(a-b) d^(loops-1), d = -A^2 - A^-2.

    An A-smoothing of (i, j, k, l) joins i with j and k with l; a B-smoothing
    joins i with l and j with k.
    """
    crossings = [tuple(x) for x in pd]
    if not crossings:
        return LaurentPolynomial.constant(1)
    a = LaurentPolynomial.monomial(1)
    d = -(a**2) - a**-2
    arcs = {label for x in crossings for label in x}
    total = LaurentPolynomial()
    for state in itertools.product((0, 1), repeat=len(crossings)):
        parent = {arc: arc for arc in arcs}
        for (i, j, k, l), s in zip(crossings, state):
            pairs = ((i, j), (k, l)) if s == 0 else ((i, l), (j, k))
            for x, y in pairs:
                rx, ry = _find(parent, x), _find(parent, y)
                if rx != ry:
                    parent[rx] = ry
        loops = len({_find(parent, arc) for arc in arcs})
        n_a = state.count(0)
        total = total + a ** (n_a - (len(state) - n_a)) * d ** (loops - 1)
    return total


def brute_writhe(pd) -> int:
    """Sign of (i, j, k, l) is +1 when the over strand leaves through j."""
    crossings = [tuple(x) for x in pd]
    n = 2 * len(crossings)
    total = 0
    for i, j, k, l in crossings:
        # consecutive labels (mod 2n) give the over strand's direction
        total += 1 if (l % n) + 1 == j else -1
    return total


def brute_jones(pd) -> LaurentPolynomial:
    """Jones polynomial in q with t = q^4, via A = q^-1."""
    a = LaurentPolynomial.monomial(1)
    v = (-(a**3)) ** (-brute_writhe(pd)) * brute_bracket(pd)
    return LaurentPolynomial({-e: c for e, c in v.terms.items()}, var="q")


def jones_from_t_text(text: str) -> LaurentPolynomial:
    """KnotInfo's polynomial in t, re-expressed in q = t^(1/4)."""
    t = sympy.Symbol("t")
    expr = sympy.expand(sympy.sympify(text.replace("^", "**"), locals={"t": t}))
    terms = {}
    for term in sympy.Add.make_args(expr):
        coeff, power = term.as_coeff_exponent(t)
        terms[int(power * 4)] = int(coeff)
    return LaurentPolynomial(terms, var="q")
