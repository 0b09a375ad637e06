"""Exact truncated power series over the rationals.

Coefficients are `fractions.Fraction` throughout; nothing in this module
touches floating point. Every series carries a fixed truncation order and
binary operations require equal orders, so precision is never lost
silently; `truncate` is the one explicit way to change order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

ExactRational = Fraction
Rational = Union[int, Fraction]


class TruncatedSeries:
    """A power series known exactly through x**order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(cs) > order + 1:
            raise ValueError(
                f"{len(cs) - 1} exceeds order {order}; use truncate() to drop terms"
            )
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # ---- constructors ----

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def identity(cls, order: int) -> TruncatedSeries:
        """The series x."""
        return cls([0, 1] if order >= 1 else [0], order)

    @classmethod
    def constant(cls, c: Rational, order: int) -> TruncatedSeries:
        return cls([c], order)

    # ---- basic accessors ----

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise ValueError(f"coefficient {k} outside truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> TruncatedSeries:
        """Re-truncate to a (usually lower) order; raising the order pads with zeros."""
        if order < 0:
            raise ValueError("order must be nonnegative")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c != 0]
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O(x^{self.order + 1})>"

    # ---- ring operations ----

    def _check_order(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}; truncate() explicitly"
            )

    def _promote(self, other: TruncatedSeries | Rational) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other: TruncatedSeries | Rational) -> TruncatedSeries:
        other = self._promote(other)
        self._check_order(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other: TruncatedSeries | Rational) -> TruncatedSeries:
        return self + (-self._promote(other))

    def __mul__(self, other: TruncatedSeries | Rational) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries([a * c for a in self.coeffs], self.order)
        self._check_order(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> TruncatedSeries:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def mul_x(self) -> TruncatedSeries:
        """Multiply by x, dropping the top coefficient to keep the order."""
        return TruncatedSeries((Fraction(0),) + self.coeffs[:-1], self.order)

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """self(inner(x)), truncated. Requires inner(0) == 0 and equal orders.

        A nonzero inner constant term would make every output coefficient
        depend on infinitely many coefficients of self, which a truncation
        cannot represent.
        """
        self._check_order(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires inner constant term zero")
        result = TruncatedSeries.constant(self.coeffs[self.order], self.order)
        for k in range(self.order - 1, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def scale_argument(self, c: Rational) -> TruncatedSeries:
        """The series self(c*x): coefficient k is multiplied by c**k."""
        c = Fraction(c)
        out = []
        power = Fraction(1)
        for a in self.coeffs:
            out.append(a * power)
            power *= c
        return TruncatedSeries(out, self.order)


def solve_power_fixed_point(G: TruncatedSeries, r: int, order: int) -> TruncatedSeries:
    """The unique series f with f(0) = 0 and f = x * (G(f))**r, through `order`.

    Solved by iterating f <- x*(G(f))**r starting from f = 0; each pass
    fixes at least one further coefficient, so `order` passes suffice.
    Requires G(0) == 1 so that the fixed point exists and is unique.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    if order < 0:
        raise ValueError("order must be nonnegative")
    if G.coefficient(0) != 1:
        raise ValueError("G must have constant term 1")
    if G.order < order:
        raise ValueError(f"G is only known to order {G.order}, need {order}")
    g = G.truncate(order)
    f = TruncatedSeries.zero(order)
    for _ in range(order):
        nxt = (g.compose(f) ** r).mul_x()
        if nxt == f:
            break
        f = nxt
    return f


def lagrange_coefficient(phi: TruncatedSeries, n: int) -> Fraction:
    """[x**n] of the solution of f = x*phi(f), as (1/n)[z**(n-1)] phi(z)**n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if phi.coefficient(0) == 0:
        raise ValueError("phi(0) must be nonzero")
    if n - 1 > phi.order:
        raise ValueError(f"n={n} exceeds the available truncation order {phi.order}")
    powered = phi.truncate(n - 1) ** n
    return powered.coefficient(n - 1) / n
