"""Shared helpers for the test suite."""

from fractions import Fraction

from cassurg.algebra import LaurentPoly


def units_equal(p: LaurentPoly, q: LaurentPoly) -> bool:
    """Equality of Laurent polynomials up to +-1 and monomial factors."""
    return p.normalized() == q.normalized()


def poly_from_string_terms(variables, terms) -> LaurentPoly:
    return LaurentPoly(variables, terms)


def eval_univariate(p: LaurentPoly, x: Fraction) -> Fraction:
    """Evaluate a one-variable Laurent polynomial at an exact rational."""
    assert len(p.variables) == 1
    total = Fraction(0)
    for (e,), c in p.terms.items():
        total += c * (x ** e)
    return total
