"""Exact q-analog arithmetic.

Integer Laurent polynomials in q, Gaussian binomials, cyclotomic
polynomials, and exact evaluation at roots of unity.  All arithmetic is
integer arithmetic; no floating point enters any verification path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd


class IntLaurentPoly:
    """Sparse Laurent polynomial in q with integer coefficients.

    Terms map exponents (possibly negative) to nonzero arbitrary-precision
    integers.  Instances are treated as immutable and are hashable, so equal
    polynomials always have identical term maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, int] | int = 0):
        if isinstance(terms, int):
            terms = {0: terms}
        self._terms = {int(e): int(c) for e, c in terms.items() if c}
        self._hash = None

    @staticmethod
    def monomial(exponent: int, coeff: int = 1) -> "IntLaurentPoly":
        return IntLaurentPoly({exponent: coeff})

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the exponent -> coefficient map (no zero coefficients)."""
        return dict(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant: %s" % self)
        return self._terms.get(0, 0)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntLaurentPoly(other)
        if not isinstance(other, IntLaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return IntLaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntLaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return IntLaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = IntLaurentPoly(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, s: int) -> "IntLaurentPoly":
        """Multiply by q**s."""
        return IntLaurentPoly({e + s: c for e, c in self._terms.items()})

    def subst_power(self, s: int) -> "IntLaurentPoly":
        """Substitute q -> q**s.  s = 0 collapses to the value at q = 1."""
        if s < 0:
            raise ValueError("substitution power must be nonnegative")
        out: dict[int, int] = {}
        for e, c in self._terms.items():
            ne = e * s
            out[ne] = out.get(ne, 0) + c
        return IntLaurentPoly(out)

    def fold_exponents(self, m: int) -> "IntLaurentPoly":
        """Reduce exponents mod m, i.e. the residue mod q**m - 1."""
        if m <= 0:
            raise ValueError("modulus must be positive")
        out: dict[int, int] = {}
        for e, c in self._terms.items():
            ne = e % m
            out[ne] = out.get(ne, 0) + c
        return IntLaurentPoly(out)

    def exact_div(self, other: "IntLaurentPoly") -> "IntLaurentPoly":
        """Exact polynomial division; a nonzero remainder is a hard error."""
        other = _coerce(other)
        if other is None or not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return IntLaurentPoly(0)
        sv, ov = self.valuation(), other.valuation()
        num = {e - sv: c for e, c in self._terms.items()}
        den = {e - ov: c for e, c in other._terms.items()}
        ddeg = max(den)
        lead = den[ddeg]
        ndeg = max(num)
        if ndeg < ddeg:
            raise ArithmeticError("non-exact division: degree too small")
        quot: dict[int, int] = {}
        work = dict(num)
        for e in range(ndeg - ddeg, -1, -1):
            c = work.get(e + ddeg, 0)
            if not c:
                continue
            qc, r = divmod(c, lead)
            if r:
                raise ArithmeticError("non-exact division: leading coefficient")
            quot[e] = qc
            for de, dc in den.items():
                ne = e + de
                v = work.get(ne, 0) - qc * dc
                if v:
                    work[ne] = v
                elif ne in work:
                    del work[ne]
        if work:
            raise ArithmeticError("non-exact division: nonzero remainder")
        return IntLaurentPoly({e + sv - ov: c for e, c in quot.items() if c})

    def evaluate(self, x):
        """Evaluate at a concrete number (int, Fraction or complex).

        Used by tests for cross-checks only; verification paths stay in
        exact integer arithmetic.
        """
        if isinstance(x, int) and self._terms and min(self._terms) < 0:
            x = Fraction(x)
        total = 0
        for e, c in self._terms.items():
            total += c * x ** e
        return total

    def to_json_dict(self) -> dict[str, str]:
        """Exponent -> coefficient map with decimal-string coefficients."""
        return {str(e): str(c) for e, c in sorted(self._terms.items())}

    @staticmethod
    def from_json_dict(data: dict[str, str]) -> "IntLaurentPoly":
        return IntLaurentPoly({int(e): int(c) for e, c in data.items()})

    def __repr__(self) -> str:
        return "IntLaurentPoly(%r)" % (dict(sorted(self._terms.items())),)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                term = str(abs(c))
            else:
                qpow = "q" if e == 1 else "q^%d" % e
                term = qpow if abs(c) == 1 else "%d*%s" % (abs(c), qpow)
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


def _coerce(value) -> IntLaurentPoly | None:
    if isinstance(value, IntLaurentPoly):
        return value
    if isinstance(value, int):
        return IntLaurentPoly(value)
    return None


ZERO = IntLaurentPoly(0)
ONE = IntLaurentPoly(1)
Q = IntLaurentPoly({1: 1})


def q_int(m: int) -> IntLaurentPoly:
    """[m]_q = 1 + q + ... + q^(m-1); [0]_q = 0."""
    if m < 0:
        raise ValueError("q_int needs m >= 0")
    return IntLaurentPoly({i: 1 for i in range(m)})


def q_factorial(m: int) -> IntLaurentPoly:
    """[m]!_q = [1]_q [2]_q ... [m]_q."""
    if m < 0:
        raise ValueError("q_factorial needs m >= 0")
    out = ONE
    for i in range(1, m + 1):
        out = out * q_int(i)
    return out


def q_binomial(m: int, r: int) -> IntLaurentPoly:
    """Gaussian binomial [m choose r]_q by exact division."""
    if r < 0 or m < 0 or r > m:
        raise ValueError("q_binomial needs 0 <= r <= m")
    num = q_factorial(m)
    den = q_factorial(r) * q_factorial(m - r)
    return num.exact_div(den)


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntLaurentPoly:
    """m-th cyclotomic polynomial, by exact division of q^m - 1."""
    if m < 1:
        raise ValueError("cyclotomic index must be >= 1")
    p = IntLaurentPoly({m: 1, 0: -1})
    for dd in range(1, m):
        if m % dd == 0:
            p = p.exact_div(cyclotomic(dd))
    return p


def _mod_monic(terms: dict[int, int], modulus: IntLaurentPoly) -> dict[int, int]:
    # remainder of division by a monic polynomial with exponents >= 0
    mterms = modulus._terms
    mdeg = max(mterms)
    if mterms[mdeg] != 1:
        raise ValueError("modulus must be monic")
    work = dict(terms)
    while work:
        d = max(work)
        if d < mdeg:
            break
        c = work[d]
        for e, mc in mterms.items():
            ne = d - mdeg + e
            v = work.get(ne, 0) - c * mc
            if v:
                work[ne] = v
            elif ne in work:
                del work[ne]
    return work


@dataclass(frozen=True)
class RootEvaluation:
    """Value of a polynomial at a root of unity.

    Either an exact integer (value set, residue None) or a non-rational
    algebraic number, recorded as the nonzero residue mod the cyclotomic
    polynomial of order `order`.
    """

    value: int | None
    residue: IntLaurentPoly | None = None
    order: int | None = None

    @property
    def is_integer(self) -> bool:
        return self.value is not None

    @staticmethod
    def integer(v: int) -> "RootEvaluation":
        return RootEvaluation(value=int(v))

    @staticmethod
    def nonrational(residue: IntLaurentPoly, order: int) -> "RootEvaluation":
        return RootEvaluation(value=None, residue=residue, order=order)

    def to_json_obj(self):
        if self.is_integer:
            return str(self.value)
        return {"order": self.order, "residue": self.residue.to_json_dict()}

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.value)
        return "nonrational(order=%d, residue=%s)" % (self.order, self.residue)


def eval_at_unity_root(p: IntLaurentPoly, m: int, d: int) -> RootEvaluation:
    """Evaluate p at zeta**d where zeta = exp(2*pi*i/m), exactly.

    Reduce d/m to lowest terms d'/m', substitute q -> q**d', and reduce
    modulo the m'-th cyclotomic polynomial.  A constant residue is an exact
    integer value; anything else is reported as non-rational.
    """
    if m < 1:
        raise ValueError("root order must be >= 1")
    if d < 0:
        d %= m
    g = gcd(m, d)
    m2 = m // g
    d2 = d // g
    # zeta^m = 1, so exponents only matter mod m (this also clears any
    # negative Laurent exponents)
    folded = p.fold_exponents(m)
    substituted = folded.subst_power(d2)
    residue = IntLaurentPoly(_mod_monic(substituted._terms, cyclotomic(m2)))
    if residue.is_constant():
        return RootEvaluation.integer(residue.constant_value())
    return RootEvaluation.nonrational(residue, m2)
