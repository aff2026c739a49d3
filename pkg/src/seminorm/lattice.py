"""Exact integer lattices and orthant-recession polyhedra.

Everything here works over the integers or over ``Fraction``; no floating
point is involved anywhere.  The polyhedra handled are those of the form
``conv(G) + R^n_{>=0}`` for a finite set ``G`` of exponent vectors, which is
the shape of every Newton polyhedron of a monomial ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]


class DimensionError(ValueError):
    """Operands live in lattices of different dimension."""


def _check_dims(vectors: Iterable[Sequence[int]], n: int | None = None) -> int | None:
    for v in vectors:
        if n is None:
            n = len(v)
        elif len(v) != n:
            raise DimensionError(f"expected dimension {n}, got {len(v)} for {tuple(v)}")
    return n


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a >= b`` componentwise."""
    return all(x >= y for x, y in zip(a, b))


def minimal_elements(points: Iterable[Sequence[int]]) -> list[Vector]:
    """Componentwise-minimal elements, deduplicated and sorted lexicographically."""
    pts = sorted({tuple(p) for p in points}, key=lambda p: (sum(p), p))
    kept: list[Vector] = []
    for p in pts:
        if not any(dominates(p, q) for q in kept):
            kept.append(p)
    return sorted(kept)


def primitive(v: Sequence[int]) -> Vector:
    g = reduce(gcd, (abs(x) for x in v), 0)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


# ---------------------------------------------------------------------------
# exact linear algebra over Q

def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [r[:] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(vectors: Sequence[Sequence[int]], n: int | None = None) -> int:
    if not vectors:
        return 0
    n = len(vectors[0]) if n is None else n
    _, piv = _rref([[Fraction(x) for x in v] for v in vectors], n)
    return len(piv)


def nullspace(vectors: Sequence[Sequence[int]], n: int) -> list[Vector]:
    """Primitive integer basis of ``{x : <v, x> = 0 for all v}``."""
    if not vectors:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    red, piv = _rref([[Fraction(x) for x in v] for v in vectors], n)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, pc in zip(red, piv):
            x[pc] = -row[f]
        den = reduce(lambda a, b: a * b // gcd(a, b), (q.denominator for q in x), 1)
        basis.append(primitive([int(q * den) for q in x]))
    return basis


# ---------------------------------------------------------------------------
# lattices

@dataclass(frozen=True)
class IntegerLattice:
    """Sublattice of ``Z^n`` stored by its row-style Hermite normal form."""

    dim: int
    basis: tuple[Vector, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return lattice_contains(self, v)


def hermite_basis(points: Iterable[Sequence[int]], dim: int | None = None) -> IntegerLattice:
    """Canonical basis of the lattice generated by ``points``.

    Rows come out in echelon form with positive pivots and entries above
    each pivot reduced into ``[0, pivot)``; equal lattices therefore give
    equal bases.  ``dim`` is required when ``points`` is empty.
    """
    rows = [list(p) for p in points]
    n = _check_dims(rows, dim)
    if n is None:
        raise ValueError("dimension required for an empty generating set")
    rows = [r for r in rows if any(r)]
    out: list[list[int]] = []
    col = 0
    while rows and col < n:
        active = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not active:
            col += 1
            continue
        # gcd elimination on this column
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = []
            for r in active[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = [piv] + nxt
        piv = active[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        out.append(piv)
        rows = [r for r in rest if any(r)]
        col += 1
    # reduce entries above pivots
    for i, row in enumerate(out):
        pc = next(c for c, a in enumerate(row) if a)
        for j in range(i):
            q = out[j][pc] // row[pc]
            if q:
                out[j] = [a - q * b for a, b in zip(out[j], row)]
    return IntegerLattice(n, tuple(tuple(r) for r in out))


def lattice_contains(L: IntegerLattice, v: Sequence[int]) -> bool:
    if len(v) != L.dim:
        raise DimensionError(f"lattice has dimension {L.dim}, vector {tuple(v)} does not")
    v = list(v)
    for row in L.basis:
        pc = next(c for c, a in enumerate(row) if a)
        if v[pc] % row[pc]:
            return False
        q = v[pc] // row[pc]
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


# ---------------------------------------------------------------------------
# polyhedra of the form conv(G) + orthant

Facet = tuple[Vector, int]


@dataclass(frozen=True, eq=False)
class Face:
    """A nonempty face, identified by the facets active on it."""

    active: frozenset[int]
    points: tuple[Vector, ...]
    rays: tuple[Vector, ...]
    dim: int
    sample: tuple[Fraction, ...]
    directions: IntegerLattice

    def __eq__(self, other):
        if not isinstance(other, Face):
            return NotImplemented
        return (self.active, self.points, self.rays) == (other.active, other.points, other.rays)

    def __hash__(self):
        return hash((self.active, self.points, self.rays))

    def __repr__(self):
        return f"Face(dim={self.dim}, points={list(self.points)}, rays={list(self.rays)})"

    @property
    def is_bounded(self) -> bool:
        return not self.rays


@dataclass(frozen=True)
class RationalPolyhedron:
    """``conv(generators) + R^n_{>=0}`` with its irredundant facet list.

    A facet ``(a, b)`` stands for the inequality ``<a, x> >= b``.
    """

    dim: int
    facets: tuple[Facet, ...]
    generators: tuple[Vector, ...]

    @cached_property
    def vertices_candidates(self) -> tuple[Vector, ...]:
        return tuple(minimal_elements(self.generators))

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(enumerate_faces(self))

    @cached_property
    def _face_index(self) -> dict[frozenset[int], Face]:
        return {f.active: f for f in self.faces}

    def contains(self, v: Sequence) -> bool:
        return all(dot(a, v) >= b for a, b in self.facets)

    def active_set(self, v: Sequence) -> frozenset[int] | None:
        """Indices of facets tight at ``v``; ``None`` if ``v`` is outside."""
        tight = []
        for i, (a, b) in enumerate(self.facets):
            s = dot(a, v)
            if s < b:
                return None
            if s == b:
                tight.append(i)
        return frozenset(tight)


def facet_description(generators: Iterable[Sequence[int]]) -> RationalPolyhedron:
    """Facets of ``conv(generators) + orthant``.

    Every facet hyperplane passes through ``k`` affinely independent
    generators and contains ``n - k`` coordinate directions, so all such
    configurations are enumerated and the resulting normals are kept when
    they are nonnegative and valid for every generator.  Exponential in
    ``n`` but exact; meant for small ambient dimension.
    """
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("Newton polyhedron of an empty generator set")
    n = _check_dims(gens)
    if any(x < 0 for g in gens for x in g):
        raise ValueError("exponent vectors must be nonnegative")
    pts = minimal_elements(gens)
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found: set[Facet] = set()
    for k in range(1, n + 1):
        for dirs in combinations(range(n), n - k):
            for chosen in combinations(pts, k):
                p0 = chosen[0]
                rows = [tuple(p - q for p, q in zip(c, p0)) for c in chosen[1:]]
                rows += [units[j] for j in dirs]
                if rank(rows, n) != n - 1:
                    continue
                (a,) = nullspace(rows, n)
                if all(x <= 0 for x in a):
                    a = tuple(-x for x in a)
                if any(x < 0 for x in a):
                    continue
                b = dot(a, p0)
                if all(dot(a, g) >= b for g in pts):
                    found.add((a, b))
    facets = tuple(sorted(found))
    return RationalPolyhedron(n, facets, tuple(sorted(set(gens))))


def _face_from_active(P: RationalPolyhedron, S: frozenset[int]) -> Face | None:
    """Smallest face whose active set contains ``S``; ``None`` if empty."""
    pts = [g for g in P.vertices_candidates
           if all(dot(P.facets[i][0], g) == P.facets[i][1] for i in S)]
    if not pts:
        return None
    n = P.dim
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)
            if all(P.facets[f][0][i] == 0 for f in S)]
    closed = frozenset(
        i for i, (a, b) in enumerate(P.facets)
        if all(dot(a, g) == b for g in pts) and all(dot(a, r) == 0 for r in rays)
    )
    diffs = [tuple(x - y for x, y in zip(g, pts[0])) for g in pts[1:]] + rays
    dim = rank(diffs, n) if diffs else 0
    sample = tuple(
        Fraction(sum(g[j] for g in pts), len(pts)) + sum(r[j] for r in rays)
        for j in range(n)
    )
    return Face(closed, tuple(pts), tuple(rays), dim, sample, hermite_basis(diffs, n))


def enumerate_faces(P: RationalPolyhedron) -> list[Face]:
    """All nonempty faces of ``P`` (``P`` itself included), largest first."""
    top = _face_from_active(P, frozenset())
    seen = {top.active: top}
    queue = [top]
    while queue:
        F = queue.pop()
        for i in range(len(P.facets)):
            if i in F.active:
                continue
            G = _face_from_active(P, F.active | {i})
            if G is not None and G.active not in seen:
                seen[G.active] = G
                queue.append(G)
    return sorted(seen.values(), key=lambda f: (-f.dim, sorted(f.active)))


def carrier_face(P: RationalPolyhedron, v: Sequence[int]) -> Face | None:
    """The face whose relative interior contains ``v``, or ``None`` if ``v`` is outside ``P``."""
    if len(v) != P.dim:
        raise DimensionError(f"point {tuple(v)} is not in dimension {P.dim}")
    S = P.active_set(v)
    if S is None:
        return None
    return P._face_index[S]


# ---------------------------------------------------------------------------
# cones spanned by monoid generators

@dataclass(frozen=True)
class ConeDescription:
    """``pos(generators)`` as ``{x : E x = 0, <a, x> >= 0 for a in normals}``."""

    dim: int
    equations: tuple[Vector, ...]
    normals: tuple[Vector, ...]

    def contains(self, v: Sequence[int]) -> bool:
        return (all(dot(e, v) == 0 for e in self.equations)
                and all(dot(a, v) >= 0 for a in self.normals))


def cone_description(generators: Sequence[Sequence[int]], dim: int) -> ConeDescription:
    gens = [tuple(g) for g in generators if any(g)]
    _check_dims(gens, dim)
    eqs = nullspace(gens, dim) if gens else [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    d = dim - len(eqs)
    normals: set[Vector] = set()
    if d > 0:
        for chosen in combinations(gens, d - 1):
            rows = list(chosen) + list(eqs)
            if rank(rows, dim) != dim - 1:
                continue
            (a,) = nullspace(rows, dim)
            signs = {(dot(a, g) > 0) - (dot(a, g) < 0) for g in gens}
            if signs <= {0, 1}:
                normals.add(a)
            elif signs <= {0, -1}:
                normals.add(tuple(-x for x in a))
    return ConeDescription(dim, tuple(eqs), tuple(sorted(normals)))
