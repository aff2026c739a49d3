"""Rees valuations, the asymptotic Samuel function and the ideal ``I_>``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ideals import BoxCertificationError, MonomialIdeal, order, require_proper, upset_generators
from .lattice import Vector, dot


@dataclass(frozen=True, order=True)
class MonomialValuation:
    """``v(x^gamma) = <normal, gamma>``; ``value`` is ``v(I)``."""

    normal: Vector
    value: int

    def __call__(self, gamma: Sequence[int]) -> int:
        return dot(self.normal, gamma)


def rees_valuations(I: MonomialIdeal) -> list[MonomialValuation]:
    """Monomial valuations of the Newton facets with positive offset."""
    require_proper(I)
    return [MonomialValuation(a, b) for a, b in I.newton_polyhedron.facets if b > 0]


def samuel_value(I: MonomialIdeal, gamma: Sequence[int]) -> Fraction:
    return min(Fraction(v(gamma), v.value) for v in rees_valuations(I))


def samuel_estimate(I: MonomialIdeal, gamma: Sequence[int], n: int) -> Fraction:
    """``ord_I(x^(n gamma)) / n``; increases to ``samuel_value`` as ``n`` grows."""
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(order(I, tuple(n * x for x in gamma)), n)


def i_greater(I: MonomialIdeal) -> MonomialIdeal:
    """Monomials whose asymptotic Samuel value exceeds 1.

    Uses the integer form ``v(gamma) >= v(I) + 1`` for every Rees valuation.
    A minimal generator drops below the bound when any coordinate with a
    positive weight is lowered, which caps coordinate ``j`` at
    ``max (v(I) // a_j) + 1``.
    """
    vals = rees_valuations(I)
    box = []
    for j in range(I.dim):
        caps = [v.value // v.normal[j] + 1 for v in vals if v.normal[j] > 0]
        box.append(max(caps) + 1 if caps else 1)

    def member(gamma):
        return all(v(gamma) >= v.value + 1 for v in vals)

    gens, certified = upset_generators(member, box)
    result = MonomialIdeal(gens, I.dim)
    if not certified:
        raise BoxCertificationError(result, tuple(box))
    return result
