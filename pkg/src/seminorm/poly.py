"""Sparse multivariate polynomials over Q or a prime field F_p."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class SparsePolynomial:
    """Polynomial stored as ``{exponent tuple: coefficient}`` with no zero entries.

    ``modulus`` is 0 for rational coefficients (kept as ``Fraction``) or a
    prime ``p`` (coefficients reduced into ``[0, p)``).  Two polynomials
    can be combined only when their variable lists and moduli agree.
    """

    __slots__ = ("vars", "modulus", "terms")

    def __init__(self, terms: Mapping[Sequence[int], Scalar] | None = None,
                 vars: Sequence[str] = ("x",), modulus: int = 0):
        self.vars = tuple(vars)
        self.modulus = modulus
        clean: dict[tuple[int, ...], Scalar] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != len(self.vars):
                raise ValueError(f"exponent {e} does not match variables {self.vars}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent {e}")
            c = self._coerce(c)
            if c:
                c = self._coerce(clean.get(e, 0) + c)
                if c:
                    clean[e] = c
                else:
                    clean.pop(e, None)
        self.terms = dict(sorted(clean.items(), reverse=True))

    # -- construction helpers -------------------------------------------------

    def _coerce(self, c: Scalar) -> Scalar:
        if self.modulus:
            if isinstance(c, Fraction):
                num = c.numerator % self.modulus
                den = c.denominator % self.modulus
                if den == 0:
                    raise ZeroDivisionError(f"{c} has no image in F_{self.modulus}")
                return num * pow(den, -1, self.modulus) % self.modulus
            return int(c) % self.modulus
        return Fraction(c)

    @classmethod
    def constant(cls, c: Scalar, vars: Sequence[str], modulus: int = 0) -> "SparsePolynomial":
        return cls({(0,) * len(vars): c}, vars, modulus)

    @classmethod
    def variable(cls, name: str, vars: Sequence[str], modulus: int = 0) -> "SparsePolynomial":
        vars = tuple(vars)
        e = tuple(int(v == name) for v in vars)
        if not any(e):
            raise ValueError(f"unknown variable {name!r}")
        return cls({e: 1}, vars, modulus)

    @classmethod
    def monomial(cls, exponent: Sequence[int], vars: Sequence[str], modulus: int = 0,
                 coeff: Scalar = 1) -> "SparsePolynomial":
        return cls({tuple(exponent): coeff}, vars, modulus)

    def zero(self) -> "SparsePolynomial":
        return SparsePolynomial({}, self.vars, self.modulus)

    def one(self) -> "SparsePolynomial":
        return SparsePolynomial.constant(1, self.vars, self.modulus)

    def _lift(self, other) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            if other.vars != self.vars or other.modulus != self.modulus:
                raise ValueError(
                    f"incompatible rings: {self.vars}/F_{self.modulus} vs {other.vars}/F_{other.modulus}")
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePolynomial.constant(other, self.vars, self.modulus)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(out, self.vars, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial({e: -c for e, c in self.terms.items()}, self.vars, self.modulus)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePolynomial(out, self.vars, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._lift(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return (self.vars, self.modulus, self.terms) == (other.vars, other.modulus, other.terms)

    def __hash__(self):
        return hash((self.vars, self.modulus, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        """A single term (any nonzero coefficient)."""
        return len(self.terms) == 1

    @property
    def support(self) -> list[tuple[int, ...]]:
        return list(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no order")
        return min(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "SparsePolynomial":
        return SparsePolynomial({e: c for e, c in self.terms.items() if sum(e) == d},
                                self.vars, self.modulus)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * len(self.vars), self._coerce(0))

    def coefficient_in(self, var: str, k: int) -> "SparsePolynomial":
        """Coefficient of ``var^k``, still written in the full variable list."""
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                e = list(e)
                e[i] = 0
                out[tuple(e)] = c
        return SparsePolynomial(out, self.vars, self.modulus)

    # -- calculus and substitution ----------------------------------------------

    def derivative(self, var: str, times: int = 1) -> "SparsePolynomial":
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] >= times:
                f = list(e)
                f[i] -= times
                # falling factorial e_i (e_i - 1) ... (e_i - times + 1)
                out[tuple(f)] = c * comb(e[i], times) * factorial(times)
        return SparsePolynomial(out, self.vars, self.modulus)

    def substitute(self, values: Mapping[str, "SparsePolynomial | Scalar"]) -> "SparsePolynomial":
        """Replace variables by polynomials in the same ring or by scalars."""
        idx = {self.vars.index(v): val for v, val in values.items()}
        result = self.zero()
        cache: dict[tuple[int, int], SparsePolynomial] = {}
        for e, c in self.terms.items():
            keep = [0 if i in idx else x for i, x in enumerate(e)]
            term = SparsePolynomial({tuple(keep): c}, self.vars, self.modulus)
            for i, val in idx.items():
                if e[i]:
                    key = (i, e[i])
                    if key not in cache:
                        base = val if isinstance(val, SparsePolynomial) else self.constant(val, self.vars, self.modulus)
                        cache[key] = self._lift(base) ** e[i]
                    term = term * cache[key]
            result = result + term
        return result

    def embed(self, vars: Sequence[str]) -> "SparsePolynomial":
        """Same polynomial written in a larger variable list."""
        vars = tuple(vars)
        missing = [v for v in self.vars if v not in vars]
        if missing:
            raise ValueError(f"variables {missing} missing from {vars}")
        pos = [vars.index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(vars)
            for p, x in zip(pos, e):
                f[p] = x
            out[tuple(f)] = c
        return SparsePolynomial(out, vars, self.modulus)

    def restrict(self, vars: Sequence[str]) -> "SparsePolynomial":
        """Drop variables that do not occur."""
        vars = tuple(vars)
        pos = [self.vars.index(v) for v in vars]
        out = {}
        for e, c in self.terms.items():
            if any(x for i, x in enumerate(e) if i not in pos):
                raise ValueError(f"polynomial involves variables outside {vars}")
            out[tuple(e[p] for p in pos)] = c
        return SparsePolynomial(out, vars, self.modulus)

    # -- printing -----------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.vars, e) if x)
            if isinstance(c, Fraction) and c.denominator == 1:
                c = c.numerator
            neg = (not self.modulus) and c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            parts.append(("-" if neg else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        field = f"F_{self.modulus}" if self.modulus else "Q"
        return f"SparsePolynomial({str(self)!r}, vars={list(self.vars)}, over {field})"


def binomial(n: int, i: int, ring: SparsePolynomial) -> SparsePolynomial:
    """``C(n, i)`` computed over the integers, then mapped into the ring of ``ring``."""
    return ring.constant(comb(n, i), ring.vars, ring.modulus)
