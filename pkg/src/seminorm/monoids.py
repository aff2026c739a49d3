"""Numerical semigroups, affine monoids and their seminormalizations.

Semigroup extensions ``S ⊆ T`` stand for the graded extensions
``K[S] ⊆ K[T]``; for monomials the coefficient conditions in the
elementwise rules are automatic, so everything reduces to exponents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce
from itertools import product as cartesian
from math import gcd
from typing import Iterable, Sequence

from .lattice import (
    ConeDescription,
    DimensionError,
    IntegerLattice,
    Vector,
    cone_description,
    dot,
    hermite_basis,
)
from .weak import CharSpec


class NumericalSemigroup:
    """Submonoid of ``N`` generated by finitely many positive integers.

    When the generators share a factor ``d`` the semigroup lives in ``dN``;
    ``frobenius`` and ``gaps`` refer to the scaled semigroup ``S/d``.
    """

    def __init__(self, generators: Iterable[int]):
        gens = sorted({int(g) for g in generators if int(g) != 0})
        if not gens:
            raise ValueError("a numerical semigroup needs a positive generator")
        if gens[0] < 0:
            raise ValueError("generators must be positive")
        self.gcd = reduce(gcd, gens)
        scaled = [g // self.gcd for g in gens]
        # Schur: the Frobenius number is below (a_1 - 1)(a_k - 1)
        limit = max((scaled[0] - 1) * (scaled[-1] - 1), 1)
        table = [False] * (limit + 1)
        table[0] = True
        for x in range(1, limit + 1):
            table[x] = any(x >= g and table[x - g] for g in scaled)
        self._table = table
        self.frobenius = max((x for x, ok in enumerate(table) if not ok), default=-1)
        self.generators = tuple(
            g for g in gens
            if not self._member_excluding(g // self.gcd, g // self.gcd, scaled)
        )

    def _member_excluding(self, x: int, skip: int, scaled: list[int]) -> bool:
        ok = [True] + [False] * x
        for y in range(1, x + 1):
            ok[y] = any(y >= g and ok[y - g] for g in scaled if g != skip)
        return ok[x]

    def __contains__(self, x: int) -> bool:
        if x < 0 or x % self.gcd:
            return False
        y = x // self.gcd
        return y > self.frobenius or self._table[y]

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"NumericalSemigroup({list(self.generators)})"

    @property
    def gaps(self) -> tuple[int, ...]:
        """Gaps of the scaled semigroup."""
        return tuple(x for x in range(self.frobenius + 1) if not self._table[x])

    @property
    def conductor(self) -> int:
        """Least ``c`` such that every multiple of ``gcd`` from ``c`` on is a member."""
        return self.gcd * (self.frobenius + 1)

    def issubset(self, other: "NumericalSemigroup") -> bool:
        return all(g in other for g in self.generators)


def ns_membership(S: NumericalSemigroup, x: int) -> bool:
    return x in S


NATURALS = NumericalSemigroup([1])


def _fires(U: NumericalSemigroup, T: NumericalSemigroup, x: int, p: int) -> bool:
    if x in U or x not in T:
        return False
    if 2 * x in U and 3 * x in U:
        return True
    return bool(p) and p * x in U


def _scan_limit(U: NumericalSemigroup, T: NumericalSemigroup, p: int) -> int:
    """Beyond this bound no rule can fire for the first time.

    Multiples of ``gcd(U)`` above the conductor are already in ``U``.  The
    Frobenius rule can also fire at ``x`` outside ``gcd(U) Z``; shifting such
    an ``x`` down by ``lcm(gcd(U), gcd(T))`` keeps it firing, so the first
    one sits below the returned bound.
    """
    limit = U.conductor
    if p:
        lcm = U.gcd * T.gcd // gcd(U.gcd, T.gcd)
        limit = max(limit, U.conductor // p + 1 + T.conductor + lcm)
    return limit


@dataclass(frozen=True)
class Saturation:
    """Result of a relative (semi/weak) normalization with the adjoined elements in order."""

    semigroup: NumericalSemigroup
    adjoined: tuple[int, ...] = field(default=())


def _saturate(S: NumericalSemigroup, T: NumericalSemigroup, p: int) -> Saturation:
    if not S.issubset(T):
        raise ValueError(f"{S!r} is not contained in {T!r}")
    U = S
    adjoined: list[int] = []
    while True:
        limit = _scan_limit(U, T, p)
        x = next((x for x in range(1, limit + 1) if _fires(U, T, x, p)), None)
        if x is None:
            return Saturation(U, tuple(adjoined))
        adjoined.append(x)
        U = NumericalSemigroup(U.generators + (x,))


def saturation_trace(S: NumericalSemigroup, T: NumericalSemigroup, p: int = 0) -> Saturation:
    """Relative weak normalization (seminormalization for ``p = 0``) with its trace."""
    if p:
        CharSpec(p)
    return _saturate(S, T, p)


def relative_seminormalization(S: NumericalSemigroup, T: NumericalSemigroup) -> NumericalSemigroup:
    """Smallest ``U`` between ``S`` and ``T`` with ``2x, 3x ∈ U, x ∈ T ⇒ x ∈ U``."""
    return _saturate(S, T, 0).semigroup


def relative_weak_normalization(S: NumericalSemigroup, T: NumericalSemigroup, p: int) -> NumericalSemigroup:
    """As ``relative_seminormalization``, plus ``p x ∈ U, x ∈ T ⇒ x ∈ U`` when ``p`` is prime."""
    return saturation_trace(S, T, p).semigroup


def ns_seminormalize(S: NumericalSemigroup) -> NumericalSemigroup:
    if S.gcd != 1:
        raise ValueError(f"generators of {S!r} are not coprime")
    return relative_seminormalization(S, NATURALS)


# ---------------------------------------------------------------------------
# affine monoids

class AffineMonoid:
    """Submonoid of ``N^d`` generated by finitely many exponent vectors."""

    def __init__(self, generators: Iterable[Sequence[int]], dim: int | None = None):
        gens = sorted({tuple(int(x) for x in g) for g in generators})
        for g in gens:
            if dim is None:
                dim = len(g)
            elif len(g) != dim:
                raise DimensionError(f"generator {g} is not in dimension {dim}")
            if any(x < 0 for x in g):
                raise ValueError(f"negative entry in {g}")
        if dim is None:
            raise ValueError("dimension required for the trivial monoid")
        self.dim = dim
        self.generators: tuple[Vector, ...] = tuple(g for g in gens if any(g))

    def __repr__(self):
        return f"AffineMonoid({[list(g) for g in self.generators]})"

    def __eq__(self, other):
        if not isinstance(other, AffineMonoid):
            return NotImplemented
        return (self.dim, self.generators) == (other.dim, other.generators)

    def __hash__(self):
        return hash((self.dim, self.generators))

    def __contains__(self, x) -> bool:
        return monoid_membership(self, x)

    @cached_property
    def group(self) -> IntegerLattice:
        return hermite_basis(self.generators, self.dim)

    @cached_property
    def cone(self) -> ConeDescription:
        return cone_description(self.generators, self.dim)

    @cached_property
    def _represents(self):
        gens = self.generators

        @lru_cache(maxsize=None)
        def rec(i: int, rem: Vector) -> bool:
            if not any(rem):
                return True
            if i == len(gens):
                return False
            g = gens[i]
            top = min((r // a for r, a in zip(rem, g) if a), default=0)
            for c in range(top, -1, -1):
                if rec(i + 1, tuple(r - c * a for r, a in zip(rem, g))):
                    return True
            return False

        return rec


def _check_dim(M: AffineMonoid, x: Sequence[int]) -> None:
    if len(x) != M.dim:
        raise DimensionError(f"{tuple(x)} is not in dimension {M.dim}")


def monoid_membership(M: AffineMonoid, x: Sequence[int]) -> bool:
    """Exact search for a nonnegative integer combination of the generators."""
    _check_dim(M, x)
    x = tuple(x)
    if any(c < 0 for c in x) or not M.cone.contains(x):
        return False
    return M._represents(0, x)


def seminormalization_contains(M: AffineMonoid, x: Sequence[int]) -> bool:
    """Membership in the seminormalization of ``M``.

    ``x`` must lie in the cone of ``M`` and in the group generated by the
    generators of ``M`` on the face of the cone carrying ``x``.
    """
    _check_dim(M, x)
    cone = M.cone
    if any(c < 0 for c in x) or not cone.contains(x):
        return False
    tight = [a for a in cone.normals if dot(a, x) == 0]
    on_face = [g for g in M.generators if all(dot(a, g) == 0 for a in tight)]
    return tuple(x) in hermite_basis(on_face, M.dim)


def is_seminormal_monoid(M: AffineMonoid, box: Sequence[int]) -> tuple[bool, list[Vector]]:
    """Search ``[0, box]`` for points of the seminormalization missing from ``M``.

    The verdict only covers the box.
    """
    if len(box) != M.dim:
        raise DimensionError(f"box {tuple(box)} is not in dimension {M.dim}")
    witnesses = [
        x for x in cartesian(*(range(b + 1) for b in box))
        if seminormalization_contains(M, x) and not monoid_membership(M, x)
    ]
    return not witnesses, witnesses


# ---------------------------------------------------------------------------
# monomial algebras

@dataclass(frozen=True)
class MonomialAlgebraContext:
    """The algebra ``K[M]`` spanned by monomials with exponents in ``monoid``."""

    char: CharSpec
    monoid: AffineMonoid | NumericalSemigroup

    @property
    def dim(self) -> int:
        return 1 if isinstance(self.monoid, NumericalSemigroup) else self.monoid.dim

    def contains_exponent(self, e: Sequence[int]) -> bool:
        if len(e) != self.dim:
            raise DimensionError(f"exponent {tuple(e)} is not in dimension {self.dim}")
        if isinstance(self.monoid, NumericalSemigroup):
            return e[0] in self.monoid
        return monoid_membership(self.monoid, e)


def algebra_contains(ctx: MonomialAlgebraContext, f) -> bool:
    """True iff every monomial in the support of ``f`` lies in the algebra."""
    if len(f.vars) != ctx.dim:
        raise DimensionError(f"polynomial in {len(f.vars)} variables, algebra in {ctx.dim}")
    if f.modulus != ctx.char.value:
        raise ValueError("coefficient field does not match the algebra")
    return all(ctx.contains_exponent(e) for e in f.terms)
