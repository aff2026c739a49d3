"""Seminormality of plane curve germs at the origin.

A reduced plane curve is seminormal at a point exactly when the point is an
ordinary n-fold point: multiplicity ``n`` and ``n`` distinct tangents, that
is, a squarefree initial form.
"""

from __future__ import annotations

from typing import Sequence

import sympy

from .poly import Scalar, SparsePolynomial


class _Indeterminate:
    """Verdict for a characteristic-p initial form whose partials both vanish."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INDETERMINATE"

    def __bool__(self):
        raise TypeError("an indeterminate verdict has no truth value")


INDETERMINATE = _Indeterminate()


def _to_sympy(f: SparsePolynomial) -> sympy.Poly:
    gens = sympy.symbols(f.vars)
    domain = sympy.GF(f.modulus) if f.modulus else sympy.QQ
    terms = {e: (int(c) if f.modulus else sympy.Rational(c.numerator, c.denominator))
             for e, c in f.terms.items()}
    return sympy.Poly.from_dict(terms, *gens, domain=domain)


def _gcd_is_constant(polys: Sequence[SparsePolynomial]) -> bool:
    nonzero = [_to_sympy(p) for p in polys if not p.is_zero()]
    g = nonzero[0]
    for h in nonzero[1:]:
        g = g.gcd(h)
    return g.total_degree() == 0


class PlaneCurveGerm:
    """Germ at the origin of the reduced curve ``f = 0`` in the plane."""

    def __init__(self, f: SparsePolynomial):
        if len(f.vars) != 2:
            raise ValueError(f"need a polynomial in two variables, got {f.vars}")
        if f.is_zero():
            raise ValueError("the zero polynomial does not define a curve")
        if f.constant_term():
            raise ValueError(f"{f} does not vanish at the origin")
        x, y = f.vars
        if not _gcd_is_constant([f, f.derivative(x), f.derivative(y)]):
            raise ValueError(f"{f} is not squarefree")
        self.f = f

    def __repr__(self):
        return f"PlaneCurveGerm({self.f})"

    @classmethod
    def at_point(cls, f: SparsePolynomial, point: Sequence[Scalar]) -> "PlaneCurveGerm":
        """Germ of ``f`` at ``point``, moved to the origin by translation."""
        return cls(translate(f, point))


def translate(f: SparsePolynomial, point: Sequence[Scalar]) -> SparsePolynomial:
    """``f(x + a, y + b)``."""
    if len(point) != len(f.vars):
        raise ValueError(f"point {tuple(point)} does not match variables {f.vars}")
    shift = {
        v: SparsePolynomial.variable(v, f.vars, f.modulus) + a
        for v, a in zip(f.vars, point)
    }
    return f.substitute(shift)


def initial_form(g: PlaneCurveGerm) -> tuple[int, SparsePolynomial]:
    n = g.f.min_degree()
    return n, g.f.homogeneous_part(n)


def is_ordinary_point(g: PlaneCurveGerm):
    """True iff the initial form has no repeated linear factor.

    For a binary form ``h`` a repeated factor ``l`` divides both partials,
    and conversely a common factor of ``h`` and its partials appears twice
    in ``h``.  When both partials vanish (``h`` a ``p``-th power) the
    answer is :data:`INDETERMINATE`.
    """
    _, h = initial_form(g)
    x, y = h.vars
    hx, hy = h.derivative(x), h.derivative(y)
    if hx.is_zero() and hy.is_zero():
        return INDETERMINATE
    return _gcd_is_constant([h, hx, hy])


def is_seminormal_at_origin(g: PlaneCurveGerm):
    return is_ordinary_point(g)
