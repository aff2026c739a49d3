"""Weak subintegral closure of monomial ideals.

In characteristic 0 a lattice point of the Newton polyhedron belongs to the
closure exactly when it lies in the group generated by the exponents of
the ideal on its carrier face.  In characteristic ``p`` membership is
decided by Frobenius powers, which is only a semi-decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Sequence

from .ideals import (
    BoxCertificationError,
    MonomialIdeal,
    contains,
    default_box,
    power_contains,
    require_proper,
    scaled_power_memberships,
    upset_generators,
)
from .lattice import Face, IntegerLattice, Vector, carrier_face, dominates, hermite_basis


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class CharSpec:
    """Characteristic of the coefficient field: 0 or a prime."""

    value: int = 0

    def __post_init__(self):
        if self.value != 0 and not is_prime(self.value):
            raise ValueError(f"characteristic must be 0 or prime, got {self.value}")

    @property
    def exponent(self) -> int:
        """Characteristic exponent: 1 in characteristic 0, ``p`` otherwise."""
        return self.value or 1


@dataclass(frozen=True)
class StarFaceResult:
    face: Face
    group: IntegerLattice
    members: tuple[Vector, ...]


def face_group(I: MonomialIdeal, F: Face, box: Sequence[int] | None = None) -> IntegerLattice:
    """Lattice generated by the exponents of ``I`` on ``F`` (within ``box``) and the rays of ``F``.

    Any exponent of ``I`` on ``F`` is a generator on ``F`` plus a nonnegative
    combination of the rays of ``F``, so generators suffice.
    """
    P = I.newton_polyhedron
    pts = [g for g in I.generators
           if F.active <= P.active_set(g) and (box is None or dominates(box, g))]
    return hermite_basis(pts + list(F.rays), I.dim)


def _check_face(I: MonomialIdeal, F: Face) -> None:
    if F not in I.newton_polyhedron.faces:
        raise ValueError(f"{F!r} is not a face of the Newton polyhedron of {I!r}")


def star_face(I: MonomialIdeal, F: Face, box: Sequence[int] | None = None) -> StarFaceResult:
    """Lattice points of ``relint(F)`` inside ``box`` that lie in the face group."""
    require_proper(I)
    _check_face(I, F)
    box = tuple(box) if box is not None else default_box(I)
    group = face_group(I, F, box)
    P = I.newton_polyhedron
    members = tuple(
        p for p in cartesian(*(range(b + 1) for b in box))
        if P.active_set(p) == F.active and p in group
    )
    return StarFaceResult(F, group, members)


class _Char0Membership:
    def __init__(self, I: MonomialIdeal):
        self.I = I
        self.P = I.newton_polyhedron
        self.groups: dict = {}

    def __call__(self, gamma: Vector) -> bool:
        F = carrier_face(self.P, gamma)
        if F is None:
            return False
        group = self.groups.get(F.active)
        if group is None:
            group = self.groups[F.active] = face_group(self.I, F)
        return gamma in group


def weak_closure_char0(I: MonomialIdeal, box: Sequence[int] | None = None) -> MonomialIdeal:
    """Weak subintegral closure over a field of characteristic 0.

    Raises ``BoxCertificationError`` if a minimal generator reaches the
    edge of the search box.
    """
    require_proper(I)
    box = tuple(box) if box is not None else default_box(I)
    gens, certified = upset_generators(_Char0Membership(I), box)
    result = MonomialIdeal(list(I.generators) + gens, I.dim)
    if not certified:
        raise BoxCertificationError(result, box)
    return result


def in_weak_closure_char0(I: MonomialIdeal, gamma: Sequence[int]) -> bool:
    """Pointwise face-group test (no box involved)."""
    require_proper(I)
    return _Char0Membership(I)(tuple(gamma))


def weak_closure_charp(I: MonomialIdeal, p: int, m_max: int = 6) -> tuple[MonomialIdeal, bool]:
    """Weak subintegral closure over a field of characteristic ``p``.

    A candidate ``gamma`` of the integral closure is accepted once
    ``x^(p^m gamma)`` lies in ``I^(p^m)`` for some ``m <= m_max``.  The flag
    is ``False`` when some candidate stayed undecided, in which case the
    returned ideal is a lower bound.
    """
    require_proper(I)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    P = I.newton_polyhedron
    box = default_box(I)
    accepted: list[Vector] = []
    certified = True
    for gamma in cartesian(*(range(b + 1) for b in box)):
        if not P.contains(gamma) or contains(I, gamma):
            continue
        if any(dominates(gamma, a) for a in accepted):
            continue
        if any(power_contains(I, p ** m, tuple(p ** m * x for x in gamma))
               for m in range(1, m_max + 1)):
            accepted.append(gamma)
        else:
            certified = False
    # candidates on the box's outer layer would mean the box was too small
    if any(a[j] == box[j] for a in accepted for j in range(I.dim)):
        certified = False
    return MonomialIdeal(list(I.generators) + accepted, I.dim), certified


@dataclass(frozen=True)
class OracleVerdict:
    """``failed_at`` is ``None`` when every tested power passed."""

    failed_at: int | None = None

    @property
    def all_pass(self) -> bool:
        return self.failed_at is None

    def __repr__(self):
        return "AllPass" if self.all_pass else f"FailsAt({self.failed_at})"


def wsi_membership_oracle_char0(I: MonomialIdeal, gamma: Sequence[int], m_lo: int, m_hi: int) -> OracleVerdict:
    """Brute-force check of ``x^(m gamma) in I^m`` for every ``m`` in ``[m_lo, m_hi]``."""
    if not 1 <= m_lo <= m_hi:
        raise ValueError("need 1 <= m_lo <= m_hi")
    flags = scaled_power_memberships(I, gamma, m_hi)
    for m in range(m_lo, m_hi + 1):
        if not flags[m - 1]:
            return OracleVerdict(m)
    return OracleVerdict()

