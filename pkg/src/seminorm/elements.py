"""Elementwise certificates of weak subintegrality.

All verifications take place inside monomial algebras (or against monomial
ideals), where membership is a question about exponents and therefore
decidable.  Searching for certificates is bounded; failing to find one
never proves that none exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .ideals import MonomialIdeal, power_contains, scaled_power_memberships
from .lattice import DimensionError
from .monoids import MonomialAlgebraContext, algebra_contains
from .poly import SparsePolynomial
from .valuations import samuel_value


@dataclass(frozen=True)
class SOSICertificate:
    """System of subintegrality: ``b^n + sum_i C(n,i) c_i b^(n-i)`` lies in ``A`` for ``N <= n <= 2N+2q-1``."""

    q: int
    N: int
    c: tuple[SparsePolynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))
        if self.q < 0 or self.N < 1:
            raise ValueError("need q >= 0 and N >= 1")
        if len(self.c) != self.q:
            raise ValueError(f"expected {self.q} coefficients, got {len(self.c)}")


@dataclass(frozen=True)
class WSICertificate:
    """Coefficients ``a_1, ..., a_(2q+1)`` of the structured equations."""

    q: int
    a: tuple[SparsePolynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if self.q < 0:
            raise ValueError("q must be nonnegative")
        if len(self.a) != 2 * self.q + 1:
            raise ValueError(f"expected {2 * self.q + 1} coefficients, got {len(self.a)}")


def _same_ring(ctx: MonomialAlgebraContext, *polys: SparsePolynomial) -> None:
    for f in polys:
        if len(f.vars) != ctx.dim:
            raise DimensionError(f"{f!r} has {len(f.vars)} variables, algebra has {ctx.dim}")
        if f.modulus != ctx.char.value:
            raise ValueError(f"{f!r} is not over the field of the algebra")
    if len({f.vars for f in polys}) > 1:
        raise ValueError("polynomials use different variable names")


def verify_sosi(ctx: MonomialAlgebraContext, b: SparsePolynomial, cert: SOSICertificate) -> bool:
    _same_ring(ctx, b, *cert.c)
    powers = [b.one()]
    for _ in range(2 * cert.N + 2 * cert.q - 1):
        powers.append(powers[-1] * b)
    for n in range(cert.N, 2 * cert.N + 2 * cert.q):
        value = powers[n]
        for i, c in enumerate(cert.c, start=1):
            if i <= n:
                value = value + comb(n, i) * c * powers[n - i]
        if not algebra_contains(ctx, value):
            return False
    return True


def _wsi_residues(b: SparsePolynomial, a: Sequence[SparsePolynomial], q: int, signed: bool):
    """Left-hand sides of the structured equations for ``q+1 <= n <= 2q+1``."""
    powers = [b.one()]
    for _ in range(2 * q + 1):
        powers.append(powers[-1] * b)
    for n in range(q + 1, 2 * q + 2):
        value = powers[n]
        for i in range(1, n + 1):
            sign = -1 if (signed and i % 2) else 1
            value = value + (sign * comb(n, i)) * a[i - 1] * powers[n - i]
        yield n, value


def verify_wsi_ring(ctx: MonomialAlgebraContext, b: SparsePolynomial, cert: WSICertificate,
                    check_membership: bool = True) -> bool:
    """``b^n + sum_i (-1)^i C(n,i) a_i b^(n-i) = 0`` for ``q+1 <= n <= 2q+1`` with every ``a_i`` in ``A``.

    ``check_membership=False`` drops the ``a_i ∈ A`` requirement; it exists
    only to show that the requirement matters.
    """
    _same_ring(ctx, b, *cert.a)
    if check_membership and not all(algebra_contains(ctx, a) for a in cert.a):
        return False
    return all(r.is_zero() for _, r in _wsi_residues(b, cert.a, cert.q, signed=True))


def _monomial_exponent(f: SparsePolynomial) -> tuple[int, ...]:
    if not f.is_monomial():
        raise ValueError(f"{f} is not a monomial")
    return f.support[0]


def verify_wsi_ideal(I: MonomialIdeal, b: SparsePolynomial, cert: WSICertificate) -> bool:
    """Weak subintegrality of the monomial ``b`` over ``I``: unsigned equations, ``a_i ∈ I^i``."""
    if len(b.vars) != I.dim:
        raise DimensionError(f"{b!r} has {len(b.vars)} variables, ideal has {I.dim}")
    _monomial_exponent(b)
    for i, a in enumerate(cert.a, start=1):
        if a.is_zero():
            continue
        if not power_contains(I, i, _monomial_exponent(a)):
            return False
    return all(r.is_zero() for _, r in _wsi_residues(b, cert.a, cert.q, signed=False))


def wsi_certificate_from_high_powers(I: MonomialIdeal, b: SparsePolynomial, q_max: int) -> WSICertificate | None:
    """Certificate built from ``b^n ∈ I^n`` on a window ``q < n <= 2q+1``.

    ``a_1 = ... = a_q = 0`` and each later ``a_n`` is the integer multiple
    of ``b^n`` that solves the ``n``-th equation.  Returns ``None`` when no
    ``q <= q_max`` has a full window.
    """
    gamma = _monomial_exponent(b)
    if len(gamma) != I.dim:
        raise DimensionError(f"{b!r} has {len(gamma)} variables, ideal has {I.dim}")
    if samuel_value(I, gamma) < 1:
        return None
    flags = scaled_power_memberships(I, gamma, 2 * q_max + 1)
    for q in range(q_max + 1):
        if not all(flags[n - 1] for n in range(q + 1, 2 * q + 2)):
            continue
        a = [b.zero()] * q
        for n in range(q + 1, 2 * q + 2):
            value = b ** n
            for i in range(q + 1, n):
                value = value + comb(n, i) * a[i - 1] * b ** (n - i)
            a.append(-value)
        return WSICertificate(q, tuple(a))
    return None


def build_characteristic_poly(cert: WSICertificate, var: str = "T") -> SparsePolynomial:
    """``F(T) = T^n + sum_i (-1)^i C(n,i) a_i T^(n-i)`` with ``n = 2q+1``."""
    ring = cert.a[0]
    if var in ring.vars:
        raise ValueError(f"variable {var!r} already used by the coefficients")
    vars = (var,) + ring.vars
    T = SparsePolynomial.variable(var, vars, ring.modulus)
    n = 2 * cert.q + 1
    F = T ** n
    for i, a in enumerate(cert.a, start=1):
        sign = -1 if i % 2 else 1
        F = F + (sign * comb(n, i)) * a.embed(vars) * T ** (n - i)
    return F


def derivative_criterion(F: SparsePolynomial, b: SparsePolynomial, var: str = "T") -> bool:
    """True iff ``b`` is a root of ``F`` and of its first ``floor(n/2)`` derivatives."""
    n = F.degree_in(var)
    if n < 1:
        raise ValueError("F must have positive degree")
    lead = F.coefficient_in(var, n)
    if lead != lead.one():
        raise ValueError(f"{F} is not monic in {var}")
    b = b.embed(F.vars)
    for k in range(n // 2 + 1):
        if not F.derivative(var, k).substitute({var: b}).is_zero():
            return False
    return True


@dataclass(frozen=True)
class Root:
    """``a`` lies in the algebra with ``a^2 = b`` and ``a^3 = c``."""

    a: SparsePolynomial


@dataclass(frozen=True)
class Witness:
    """``a = c/b`` exists in the polynomial ring but not in the algebra."""

    a: SparsePolynomial


def swan_root_test(ctx: MonomialAlgebraContext, b: SparsePolynomial, c: SparsePolynomial) -> Root | Witness:
    _same_ring(ctx, b, c)
    if b ** 3 != c ** 2:
        raise ValueError("need b^3 = c^2")
    if b.is_zero():
        return Root(b.zero())
    if not (algebra_contains(ctx, b) and algebra_contains(ctx, c)):
        raise ValueError("b and c must lie in the algebra")
    eb, ec = _monomial_exponent(b), _monomial_exponent(c)
    # b^3 = c^2 forces 3 eb = 2 ec, so ec - eb = eb / 2 >= 0
    e = tuple(y - x for x, y in zip(eb, ec))
    cb, cc = b.terms[eb], c.terms[ec]
    coeff = cc * pow(cb, -1, b.modulus) if b.modulus else cc / cb
    a = SparsePolynomial.monomial(e, b.vars, b.modulus, coeff)
    assert a * a == b and a ** 3 == c
    return Root(a) if algebra_contains(ctx, a) else Witness(a)


def schanuel_matrix(a: SparsePolynomial, var: str = "X") -> tuple[list[list[SparsePolynomial]], dict]:
    """Rank-one projection ``M = (f_i g_j)`` built from ``a`` and ``b = a^2``.

    The report records whether ``f_1 g_1 + f_2 g_2 = 1``, whether ``M`` is
    idempotent, and whether ``M(0)`` is ``diag(1, 0)``.
    """
    if var in a.vars:
        raise ValueError(f"variable {var!r} already used")
    vars = a.vars + (var,)
    a = a.embed(vars)
    X = SparsePolynomial.variable(var, vars, a.modulus)
    one = a.one()
    b = a * a
    f = [one + a * X, b * X ** 2]
    g = [(one - a * X) * (one + b * X ** 2), b * X ** 2]
    M = [[fi * gj for gj in g] for fi in f]
    square = [[sum((M[i][k] * M[k][j] for k in range(2)), a.zero()) for j in range(2)] for i in range(2)]
    at_zero = [[m.substitute({var: 0}) for m in row] for row in M]
    report = {
        "trace_identity": f[0] * g[0] + f[1] * g[1] == one,
        "idempotent": square == M,
        "at_zero_is_P2": at_zero == [[one, a.zero()], [a.zero(), a.zero()]],
    }
    return M, report
