"""Truncated formal power series with exact rational coefficients.

``TruncatedSeries`` keeps coefficients 0..order inclusive; every binary
operation truncates at the smaller operand's order and is exact on what
it keeps. On top of the ring operations this module builds the Motzkin
generating function two independent ways and the difference-number
generating function two more, so the identities between them can be
checked coefficient by coefficient:

* ``motzkin_series`` solves ``M = 1 + x*M + x^2*M^2`` term by term, or
  evaluates the closed form ``2 / (1 - x + sqrt(1 - 2x - 3x^2))``. The
  equivalent closed form ``(1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2)`` is
  avoided because its denominator vanishes at x = 0.
* ``nat_series`` evaluates either ``x + x^2*M^2`` or ``x - 1 + (1-x)*M``.

Intermediate coefficients are rational in general (division and square
root introduce denominators), so integrality of the final tables is
asserted rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import BadConstantTermError, InternalError, ZeroConstantTermError

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients 0..order of a formal power series, exact rationals."""

    coefficients: tuple[Fraction, ...]

    @classmethod
    def from_coefficients(cls, values: Iterable[Scalar], order: int | None = None) -> "TruncatedSeries":
        """Build a series from low-order coefficients, padding with zeros
        (or truncating) to the requested order."""
        coeffs = [Fraction(v) for v in values]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            coeffs = coeffs[: order + 1]
            coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        elif not coeffs:
            coeffs = [Fraction(0)]
        return cls(tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coefficients[: order + 1])

    def _aligned(self, other: "TruncatedSeries") -> tuple[int, tuple[Fraction, ...], tuple[Fraction, ...]]:
        order = min(self.order, other.order)
        return order, self.coefficients, other.coefficients

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order, a, b = self._aligned(other)
        return TruncatedSeries(tuple(a[n] + b[n] for n in range(order + 1)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order, a, b = self._aligned(other)
        return TruncatedSeries(tuple(a[n] - b[n] for n in range(order + 1)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def scale(self, factor: Scalar) -> "TruncatedSeries":
        factor = Fraction(factor)
        return TruncatedSeries(tuple(factor * c for c in self.coefficients))

    def __mul__(self, other: "TruncatedSeries | Scalar") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        order, a, b = self._aligned(other)
        return TruncatedSeries(
            tuple(sum((a[k] * b[n - k] for k in range(n + 1)), Fraction(0)) for n in range(order + 1))
        )

    def __rmul__(self, other: Scalar) -> "TruncatedSeries":
        return self.scale(other)

    def __truediv__(self, other: "TruncatedSeries | Scalar") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(Fraction(1, 1) / Fraction(other))
        order, num, den = self._aligned(other)
        if den[0] == 0:
            raise ZeroConstantTermError("series division needs a nonzero constant term")
        quotient: list[Fraction] = []
        for n in range(order + 1):
            acc = num[n]
            for k in range(n):
                acc -= quotient[k] * den[n - k]
            quotient.append(acc / den[0])
        return TruncatedSeries(tuple(quotient))

    def __rtruediv__(self, numerator: Scalar) -> "TruncatedSeries":
        return TruncatedSeries.from_coefficients([numerator], self.order) / self

    def sqrt(self) -> "TruncatedSeries":
        """Series square root; requires constant term 1 and squares back
        to the operand exactly through the order."""
        if self.coefficients[0] != 1:
            raise BadConstantTermError("series square root needs constant term 1")
        root: list[Fraction] = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = self.coefficients[n]
            for k in range(1, n):
                acc -= root[k] * root[n - k]
            root.append(acc / 2)
        return TruncatedSeries(tuple(root))

    def integer_coefficients(self) -> list[int]:
        """Coefficients as ints; raises InternalError if any is fractional."""
        for n, c in enumerate(self.coefficients):
            if c.denominator != 1:
                raise InternalError(f"coefficient {n} is {c}, not an integer")
        return [c.numerator for c in self.coefficients]

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coefficients[:8])
        if self.order >= 8:
            shown += ", ..."
        return f"TruncatedSeries([{shown}], order={self.order})"


MOTZKIN_METHODS = ("functional", "closed_form")
NAT_FORMS = ("product", "linear")


def motzkin_series(order: int, method: str = "functional") -> TruncatedSeries:
    """Generating function of the Motzkin numbers through ``order``.

    ``functional`` solves ``M = 1 + x*M + x^2*M^2`` coefficient by
    coefficient; ``closed_form`` evaluates
    ``2 / (1 - x + sqrt(1 - 2x - 3x^2))`` with series square root and
    division. Both return the same integer-valued series.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if method not in MOTZKIN_METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "functional":
        # Coefficient n of 1 + x*M + x^2*M^2 must equal coefficient n of M.
        coeffs = [Fraction(1)]
        for n in range(1, order + 1):
            acc = coeffs[n - 1]
            for k in range(n - 1):
                acc += coeffs[k] * coeffs[n - 2 - k]
            coeffs.append(acc)
        result = TruncatedSeries(tuple(coeffs))
    else:
        root = TruncatedSeries.from_coefficients([1, -2, -3], order).sqrt()
        denominator = TruncatedSeries.from_coefficients([1, -1], order) + root
        result = 2 / denominator
    result.integer_coefficients()
    return result


def nat_series(order: int, form: str = "product") -> TruncatedSeries:
    """Generating function of the difference numbers through ``order``.

    ``product`` evaluates ``x + x^2*M^2``; ``linear`` evaluates
    ``x - 1 + (1-x)*M``. The two agree coefficient by coefficient.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if form not in NAT_FORMS:
        raise ValueError(f"unknown form {form!r}")
    m = motzkin_series(order, "functional")
    x = TruncatedSeries.from_coefficients([0, 1], order)
    if form == "product":
        result = x + x * x * m * m
    else:
        one_minus_x = TruncatedSeries.from_coefficients([1, -1], order)
        result = TruncatedSeries.from_coefficients([-1, 1], order) + one_minus_x * m
    result.integer_coefficients()
    return result
