"""Exact Laurent polynomials and truncated power series over Z.

Exponents live on a rational lattice: each value stores integer numerators
together with a positive denominator ``den``, so ``q**(k/den)`` powers are
exact.  Mixed arithmetic promotes to the lcm lattice.  Coefficients are
Python ints, hence arbitrary precision.  All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import ExactDivisionError

__all__ = [
    "LaurentPoly",
    "TruncatedSeries",
    "bar",
    "q_int",
    "q_fact",
    "gauss_balanced",
    "qbinom_lower",
    "phi",
    "inv_phi",
    "inv_pochhammer",
]


def _as_exp(e) -> Fraction:
    if isinstance(e, Fraction):
        return e
    if isinstance(e, int):
        return Fraction(e)
    if isinstance(e, tuple):
        return Fraction(e[0], e[1])
    raise TypeError(f"bad exponent {e!r}")


class LaurentPoly:
    """Integer-coefficient Laurent polynomial with rational exponents.

    ``terms`` maps exponent numerators to nonzero coefficients; the actual
    exponent of a term is ``num / den``.  The pair is kept canonical: no zero
    coefficients, and ``den`` minimal (gcd-reduced).
    """

    __slots__ = ("terms", "den")

    def __init__(self, terms: dict[int, int] | None = None, den: int = 1):
        if den <= 0:
            raise ValueError("denominator must be positive")
        terms = {n: c for n, c in (terms or {}).items() if c != 0}
        if terms:
            g = den
            for n in terms:
                g = gcd(g, n)
                if g == 1:
                    break
            if g > 1:
                terms = {n // g: c for n, c in terms.items()}
                den //= g
        else:
            den = 1
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return _ONE

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def q_power(e, coeff: int = 1) -> "LaurentPoly":
        e = _as_exp(e)
        return LaurentPoly({e.numerator: coeff}, e.denominator)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, e) -> int:
        e = _as_exp(e) * self.den
        if e.denominator != 1:
            return 0
        return self.terms.get(e.numerator, 0)

    def min_exp(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return Fraction(min(self.terms), self.den)

    def max_exp(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return Fraction(max(self.terms), self.den)

    def support(self) -> list[Fraction]:
        return [Fraction(n, self.den) for n in sorted(self.terms)]

    def is_bar_invariant(self) -> bool:
        return all(self.terms.get(-n, 0) == c for n, c in self.terms.items())

    def in_qZq(self) -> bool:
        """True iff every exponent is a positive integer."""
        return all(n > 0 and n % self.den == 0 for n in self.terms)

    def is_poly(self) -> bool:
        """True iff every exponent is a nonnegative integer."""
        return all(n >= 0 and n % self.den == 0 for n in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _promoted(self, other: "LaurentPoly") -> tuple[dict, dict, int]:
        d = lcm(self.den, other.den)
        f1, f2 = d // self.den, d // other.den
        t1 = self.terms if f1 == 1 else {n * f1: c for n, c in self.terms.items()}
        t2 = other.terms if f2 == 1 else {n * f2: c for n, c in other.terms.items()}
        return t1, t2, d

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        t1, t2, d = self._promoted(other)
        out = dict(t1)
        for n, c in t2.items():
            out[n] = out.get(n, 0) + c
        return LaurentPoly(out, d)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        t1, t2, d = self._promoted(other)
        out = dict(t1)
        for n, c in t2.items():
            out[n] = out.get(n, 0) - c
        return LaurentPoly(out, d)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({n: -c for n, c in self.terms.items()}, self.den)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({n: c * other for n, c in self.terms.items()}, self.den)
        t1, t2, d = self._promoted(other)
        out: dict[int, int] = {}
        for n1, c1 in t1.items():
            for n2, c2 in t2.items():
                k = n1 + n2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out, d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers not supported")
        out = _ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shifted(self, e) -> "LaurentPoly":
        """Multiply by q**e."""
        e = _as_exp(e)
        d = lcm(self.den, e.denominator)
        f = d // self.den
        s = e.numerator * (d // e.denominator)
        return LaurentPoly({n * f + s: c for n, c in self.terms.items()}, d)

    def bar(self) -> "LaurentPoly":
        """The involution q -> q**-1."""
        return LaurentPoly({-n: c for n, c in self.terms.items()}, self.den)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Divide, raising ExactDivisionError unless the division is exact."""
        if other.is_zero():
            raise ExactDivisionError("division by zero polynomial")
        if self.is_zero():
            return _ZERO
        t1, t2, d = self._promoted(other)
        rem = dict(t1)
        dn = max(t2)
        dc = t2[dn]
        # exponents of an exact quotient lie in [min1 - min2, max1 - dn]
        qmin = min(t1) - min(t2)
        quot: dict[int, int] = {}
        while rem:
            rn = max(rem)
            rc = rem[rn]
            qn = rn - dn
            if rc % dc != 0 or qn < qmin:
                raise ExactDivisionError("polynomial division left a remainder")
            qc = rc // dc
            quot[qn] = qc
            for n2, c2 in t2.items():
                k = n2 + qn
                v = rem.get(k, 0) - c2 * qc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot, d)

    def eval_one(self) -> int:
        return sum(self.terms.values())

    def eval_int(self, v: int) -> Fraction:
        """Exact evaluation at an integer value (Fraction when v divides)."""
        if v == 0:
            raise ValueError("cannot evaluate Laurent polynomial at 0")
        acc = Fraction(0)
        for n, c in self.terms.items():
            e = Fraction(n, self.den)
            if e.denominator != 1:
                raise ValueError("fractional exponent cannot be evaluated at an integer")
            acc += c * Fraction(v) ** e.numerator
        return acc

    # -- comparisons and rendering ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.den == other.den and self.terms == other.terms

    def __hash__(self):
        return hash((self.den, tuple(sorted(self.terms.items()))))

    def to_text(self, var: str = "q") -> str:
        """Canonical text: terms in ascending exponent order.

        Examples: ``1 + q^2``, ``q^-1 + q``, ``q^1/2``, ``-v^2``.
        """
        if not self.terms:
            return "0"
        parts = []
        for n in sorted(self.terms):
            c = self.terms[n]
            e = Fraction(n, self.den)
            if e == 0:
                body = str(abs(c))
            else:
                if e == 1:
                    p = var
                elif e.denominator == 1:
                    p = f"{var}^{e.numerator}"
                else:
                    p = f"{var}^{e.numerator}/{e.denominator}"
                body = p if abs(c) == 1 else f"{abs(c)}*{p}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"


_ZERO = LaurentPoly({})
_ONE = LaurentPoly({0: 1})


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


@lru_cache(maxsize=None)
def q_int(k: int) -> LaurentPoly:
    """Balanced q-integer: q^(k-1) + q^(k-3) + ... + q^(1-k), for k >= 0."""
    if k < 0:
        raise ValueError("q_int requires k >= 0")
    return LaurentPoly({e: 1 for e in range(-(k - 1), k, 2)})


@lru_cache(maxsize=None)
def q_fact(k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError("q_fact requires k >= 0")
    if k == 0:
        return _ONE
    return q_fact(k - 1) * q_int(k)


@lru_cache(maxsize=None)
def gauss_balanced(m: int, k: int) -> LaurentPoly:
    """Balanced (bar-invariant) q-binomial; 0 outside 0 <= k <= m."""
    if k < 0 or m < 0 or k > m:
        return _ZERO
    return q_fact(m).exact_div(q_fact(m - k)).exact_div(q_fact(k))


@lru_cache(maxsize=None)
def _pochhammer(k: int) -> LaurentPoly:
    """(q)_k = (1-q)(1-q^2)...(1-q^k)."""
    if k == 0:
        return _ONE
    return _pochhammer(k - 1) * LaurentPoly({0: 1, k: -1})


@lru_cache(maxsize=None)
def qbinom_lower(m: int, k: int) -> LaurentPoly:
    """Gaussian binomial in nonnegative powers; 0 outside 0 <= k <= m."""
    if k < 0 or m < 0 or k > m:
        return _ZERO
    return _pochhammer(m).exact_div(_pochhammer(m - k)).exact_div(_pochhammer(k))


class TruncatedSeries:
    """Power series known exactly up to a rational order bound.

    Same exponent-lattice storage as LaurentPoly.  Operations never report
    coefficients beyond ``order``; multiplying two series truncates at the
    smaller of the two orders.
    """

    __slots__ = ("terms", "den", "order")

    def __init__(self, terms: dict[int, int], den: int, order):
        order = _as_exp(order)
        if den <= 0:
            raise ValueError("denominator must be positive")
        cut = order * den
        terms = {n: c for n, c in terms.items() if c != 0 and n <= cut}
        if terms:
            g = den
            for n in terms:
                g = gcd(g, n)
                if g == 1:
                    break
            if g > 1:
                terms = {n // g: c for n, c in terms.items()}
                den //= g
        else:
            den = 1
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "order", order)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("TruncatedSeries is immutable")

    @staticmethod
    def from_poly(p: LaurentPoly, order) -> "TruncatedSeries":
        return TruncatedSeries(p.terms, p.den, order)

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly(dict(self.terms), self.den)

    def coeff(self, e) -> int:
        e = _as_exp(e)
        if e > self.order:
            raise ValueError(f"coefficient of q^{e} is beyond order {self.order}")
        e = e * self.den
        if e.denominator != 1:
            return 0
        return self.terms.get(e.numerator, 0)

    def coeffs_upto(self, d: int) -> list[int]:
        """Integer-exponent coefficients [q^0] .. [q^d]."""
        return [self.coeff(k) for k in range(d + 1)]

    def _promoted(self, other: "TruncatedSeries"):
        d = lcm(self.den, other.den)
        f1, f2 = d // self.den, d // other.den
        t1 = {n * f1: c for n, c in self.terms.items()}
        t2 = {n * f2: c for n, c in other.terms.items()}
        return t1, t2, d, min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        t1, t2, d, order = self._promoted(other)
        for n, c in t2.items():
            t1[n] = t1.get(n, 0) + c
        return TruncatedSeries(t1, d, order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        t1, t2, d, order = self._promoted(other)
        for n, c in t2.items():
            t1[n] = t1.get(n, 0) - c
        return TruncatedSeries(t1, d, order)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(
                {n: c * other for n, c in self.terms.items()}, self.den, self.order
            )
        if isinstance(other, LaurentPoly):
            # a polynomial is exact, so only self's order limits the product
            d = lcm(self.den, other.den)
            f1, f2 = d // self.den, d // other.den
            t1 = {n * f1: c for n, c in self.terms.items()}
            t2 = {n * f2: c for n, c in other.terms.items()}
            order = self.order
        else:
            t1, t2, d, order = self._promoted(other)
        cut = order * d
        out: dict[int, int] = {}
        for n1, c1 in t1.items():
            for n2, c2 in t2.items():
                k = n1 + n2
                if k <= cut:
                    out[k] = out.get(k, 0) + c1 * c2
        return TruncatedSeries(out, d, order)

    __rmul__ = __mul__

    def shifted(self, e) -> "TruncatedSeries":
        e = _as_exp(e)
        d = lcm(self.den, e.denominator)
        f = d // self.den
        s = e.numerator * (d // e.denominator)
        return TruncatedSeries(
            {n * f + s: c for n, c in self.terms.items()}, d, self.order + e
        )

    def truncate(self, order) -> "TruncatedSeries":
        order = _as_exp(order)
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.terms, self.den, order)

    def min_exp(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero series has no exponents")
        return Fraction(min(self.terms), self.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.den == other.den
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.order, self.den, tuple(sorted(self.terms.items()))))

    def to_text(self, var: str = "q") -> str:
        body = self.to_poly().to_text(var)
        return f"{body} + O({var}^{self.order + 1})"

    def __repr__(self):
        return f"TruncatedSeries({self.to_text()!r})"


def phi(order: int) -> TruncatedSeries:
    """The Euler product (1-q)(1-q^2)... truncated at the given order."""
    p = _ONE
    for n in range(1, order + 1):
        p = p * LaurentPoly({0: 1, n: -1})
        p = LaurentPoly({k: c for k, c in p.terms.items() if k <= order * p.den}, p.den)
    return TruncatedSeries.from_poly(p, order)


def inv_phi(order: int) -> TruncatedSeries:
    """1/phi(q); the q^k coefficient is the number of partitions of k."""
    if order < 0:
        raise ValueError("order must be >= 0")
    # p(k) via the classical bounded-part recurrence
    table = [[0] * (order + 1) for _ in range(order + 1)]
    for j in range(order + 1):
        table[j][0] = 1
    for j in range(1, order + 1):
        for k in range(1, order + 1):
            table[j][k] = table[j - 1][k] + (table[j][k - j] if k >= j else 0)
    return TruncatedSeries({k: table[order][k] for k in range(order + 1)}, 1, order)


def inv_pochhammer(k: int, order: int) -> TruncatedSeries:
    """1/(q)_k truncated at the given order."""
    out = TruncatedSeries({0: 1}, 1, order)
    for j in range(1, k + 1):
        geo = TruncatedSeries({t * j: 1 for t in range(order // j + 1)}, 1, order)
        out = out * geo
    return out
