"""Monomial ideals given by their minimal generator exponents."""

from __future__ import annotations

from functools import cached_property
from itertools import product as cartesian
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .lattice import (
    DimensionError,
    RationalPolyhedron,
    Vector,
    dominates,
    facet_description,
    minimal_elements,
)

_INF = np.iinfo(np.int64).max // 4


class BoxCertificationError(RuntimeError):
    """A minimal generator touched the upper face of the search box.

    The generators found so far are attached as ``ideal`` so callers can
    still report them, flagged as uncertified.
    """

    def __init__(self, ideal: "MonomialIdeal", box: Vector):
        super().__init__(f"search box {box} could not be certified")
        self.ideal = ideal
        self.box = box


class MonomialIdeal:
    """Monomial ideal in ``n`` variables stored as an antichain of exponents."""

    __slots__ = ("dim", "generators", "__dict__")

    def __init__(self, generators: Iterable[Sequence[int]], dim: int | None = None):
        gens = [tuple(int(x) for x in g) for g in generators]
        for g in gens:
            if dim is None:
                dim = len(g)
            elif len(g) != dim:
                raise DimensionError(f"generator {g} is not in dimension {dim}")
            if any(x < 0 for x in g):
                raise ValueError(f"negative exponent in {g}")
        if dim is None:
            raise ValueError("dimension required for the zero ideal")
        self.dim = dim
        self.generators: tuple[Vector, ...] = tuple(minimal_elements(gens))

    def __repr__(self):
        return f"MonomialIdeal({[list(g) for g in self.generators]})"

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.dim == other.dim and self.generators == other.generators

    def __hash__(self):
        return hash((self.dim, self.generators))

    def __contains__(self, gamma) -> bool:
        return contains(self, gamma)

    def __le__(self, other: "MonomialIdeal") -> bool:
        """Ideal containment."""
        return all(contains(other, g) for g in self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    @cached_property
    def newton_polyhedron(self) -> RationalPolyhedron:
        if self.is_zero:
            raise ValueError("the zero ideal has no Newton polyhedron")
        return facet_description(self.generators)

    @cached_property
    def max_exponents(self) -> Vector:
        return tuple(max(g[j] for g in self.generators) for j in range(self.dim))


def _check(I: MonomialIdeal, gamma: Sequence[int]) -> None:
    if len(gamma) != I.dim:
        raise DimensionError(f"exponent {tuple(gamma)} is not in dimension {I.dim}")


def require_proper(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise ValueError("the zero ideal is not allowed here")
    if I.is_unit:
        raise ValueError("the unit ideal is not allowed here")


def contains(I: MonomialIdeal, gamma: Sequence[int]) -> bool:
    _check(I, gamma)
    return any(dominates(gamma, g) for g in I.generators)


# ---------------------------------------------------------------------------
# powers

def _power_table(gens: Sequence[Vector], budget: Sequence[int]) -> Iterator[np.ndarray]:
    """Yield ``f_1, f_2, ...`` where ``f_t[X]`` is the least last coordinate of a
    sum of ``t`` generators whose other coordinates are bounded by ``X``.

    ``X`` ranges over the box ``[0, budget[:-1]]``; unreachable cells hold a
    large sentinel.  Membership of ``gamma`` in ``I^t`` is then
    ``f_t[gamma[:-1]] <= gamma[-1]``.
    """
    if len(budget) == 1:
        step = min(g[0] for g in gens)
        t = 0
        while True:
            t += 1
            yield np.array(t * step, dtype=np.int64)
    shape = tuple(b + 1 for b in budget[:-1])
    f = np.zeros(shape, dtype=np.int64)
    while True:
        g_next = np.full(shape, _INF, dtype=np.int64)
        for g in gens:
            head = g[:-1]
            if any(h > b for h, b in zip(head, budget[:-1])):
                continue
            dst = tuple(slice(h, None) for h in head)
            src = tuple(slice(0, s - h) for h, s in zip(head, shape))
            np.minimum(g_next[dst], f[src] + g[-1], out=g_next[dst])
        np.minimum(g_next, _INF, out=g_next)
        f = g_next
        yield f


def scaled_power_memberships(I: MonomialIdeal, gamma: Sequence[int], m_hi: int) -> list[bool]:
    """``[x^{m gamma} in I^m for m = 1..m_hi]``, computed in one sweep."""
    _check(I, gamma)
    if m_hi < 1:
        return []
    if I.dim == 0:
        return [True] * m_hi
    budget = [m_hi * x for x in gamma]
    gens = [g for g in I.generators]
    out = []
    for t, f in enumerate(_power_table(gens, budget), start=1):
        idx = tuple(t * x for x in gamma[:-1])
        out.append(bool(f[idx] <= t * gamma[-1]))
        if t == m_hi:
            break
    return out


def power_contains(I: MonomialIdeal, k: int, gamma: Sequence[int]) -> bool:
    """True iff ``x^gamma`` lies in ``I^k``."""
    _check(I, gamma)
    if k < 1:
        raise ValueError("power must be positive")
    if I.is_zero:
        return False
    if I.dim == 0:
        return True
    gens = [g for g in I.generators if dominates(gamma, g)]
    if not gens:
        return False
    for t, f in enumerate(_power_table(gens, gamma), start=1):
        if t == k:
            return bool(f[tuple(gamma[:-1])] <= gamma[-1])


def order(I: MonomialIdeal, gamma: Sequence[int]) -> int:
    """Largest ``k`` with ``x^gamma`` in ``I^k`` (0 when not in ``I``).

    Finite for every proper ideal: each generator has positive value under
    some facet functional, which bounds ``k``.
    """
    _check(I, gamma)
    require_proper(I)
    gens = [g for g in I.generators if dominates(gamma, g)]
    if not gens:
        return 0
    if I.dim == 0:
        raise ValueError("order is infinite in dimension 0")
    k = 0
    for t, f in enumerate(_power_table(gens, gamma), start=1):
        if f[tuple(gamma[:-1])] > gamma[-1]:
            return k
        k = t


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative power")
    result = MonomialIdeal([(0,) * I.dim], I.dim)
    base = I
    while k:
        if k & 1:
            result = combine("product", result, base)
        k >>= 1
        if k:
            base = combine("product", base, base)
    return result


# ---------------------------------------------------------------------------
# lattice operations

def _colon_monomial(I: MonomialIdeal, h: Vector) -> MonomialIdeal:
    return MonomialIdeal([tuple(max(a - b, 0) for a, b in zip(g, h)) for g in I.generators], I.dim)


def combine(op: str, I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``op`` is one of ``sum``, ``product``, ``intersection``, ``colon``."""
    if I.dim != J.dim:
        raise DimensionError(f"dimensions {I.dim} and {J.dim} differ")
    n = I.dim
    if op == "sum":
        return MonomialIdeal(I.generators + J.generators, n)
    if op == "product":
        return MonomialIdeal(
            [tuple(a + b for a, b in zip(g, h)) for g in I.generators for h in J.generators], n)
    if op == "intersection":
        return MonomialIdeal(
            [tuple(max(a, b) for a, b in zip(g, h)) for g in I.generators for h in J.generators], n)
    if op == "colon":
        result = MonomialIdeal([(0,) * n], n)
        for h in J.generators:
            result = combine("intersection", result, _colon_monomial(I, h))
        return result
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# bounded generator search

def default_box(I: MonomialIdeal) -> Vector:
    """Search box for closures: one past the largest generator exponent."""
    return tuple(m + 1 for m in I.max_exponents)


def upset_generators(member: Callable[[Vector], bool], box: Sequence[int]) -> tuple[list[Vector], bool]:
    """Minimal elements of an up-closed set inside ``[0, box]``.

    Points are scanned in lexicographic order, so anything a point
    dominates was seen before it.  The flag is ``False`` when a minimal
    element sits on the upper boundary of the box, i.e. the box may have
    cut the set short.
    """
    found: list[Vector] = []
    for p in cartesian(*(range(b + 1) for b in box)):
        if any(dominates(p, g) for g in found):
            continue
        if member(p):
            found.append(p)
    certified = not any(g[j] == box[j] for g in found for j in range(len(box)))
    return found, certified


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Ideal of the lattice points of the Newton polyhedron."""
    if I.is_zero:
        raise ValueError("integral closure of the zero ideal")
    if I.is_unit:
        return I
    P = I.newton_polyhedron
    box = default_box(I)
    gens, certified = upset_generators(P.contains, box)
    result = MonomialIdeal(gens, I.dim)
    if not certified:
        raise BoxCertificationError(result, box)
    return result


def exponents_in_box(I: MonomialIdeal, box: Sequence[int]) -> set[Vector]:
    return {p for p in cartesian(*(range(b + 1) for b in box)) if contains(I, p)}


def ratliff_rush(I: MonomialIdeal, horizon: int) -> tuple[MonomialIdeal, bool]:
    """Union of ``I^(n+1) : I^n`` for ``0 <= n <= horizon``.

    The flag reports whether the last two terms of the chain agree.
    """
    require_proper(I)
    if horizon < 1:
        raise ValueError("horizon must be positive")
    terms = [I]
    lower = I
    for _ in range(horizon):
        upper = combine("product", lower, I)
        terms.append(combine("colon", upper, lower))
        lower = upper
    union = terms[0]
    for t in terms[1:]:
        union = combine("sum", union, t)
    return union, terms[-1] == terms[-2]
