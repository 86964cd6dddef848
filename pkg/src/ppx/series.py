"""Truncated formal power series over a pluggable exact coefficient ring.

A series carries its truncation order; every binary operation requires equal
orders so that silent precision loss cannot happen.  The coefficient ring is
one of the protocol objects from :mod:`ppx.rings` (``QQ``, ``QFUNC``, ``ZX``,
``ZZ``, or a ``QuotientRing`` instance); coefficients themselves do their own
arithmetic through operators.
"""

from __future__ import annotations


class TruncatedSeries:
    """Coefficients a_0..a_N of a formal power series, exact, truncated at N.

    >>> from ppx.rings import QQ
    >>> from fractions import Fraction
    >>> f = TruncatedSeries(QQ, [Fraction(1), Fraction(-1)] + [Fraction(0)] * 4)
    >>> (f * f.inverse()).coeffs[:3]
    (Fraction(1, 1), Fraction(0, 1), Fraction(0, 1))
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a series carries at least its constant term")

    @classmethod
    def one(cls, ring, order: int) -> "TruncatedSeries":
        return cls(ring, [ring.one] + [ring.zero] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def _require_compatible(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if self.ring != other.ring:
            raise ValueError(f"mixing coefficient rings {self.ring!r} and {other.ring!r}")
        if self.order != other.order:
            raise ValueError(
                f"mixing truncation orders {self.order} and {other.order}"
            )

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        self._require_compatible(other)
        return TruncatedSeries(self.ring, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._require_compatible(other)
        return TruncatedSeries(self.ring, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TruncatedSeries(self.ring, (-a for a in self.coeffs))

    def __mul__(self, other):
        """Cauchy product truncated at the common order."""
        self._require_compatible(other)
        ring = self.ring
        n = self.order
        out = [ring.zero] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == ring.zero:
                continue
            for j in range(n - i + 1):
                b = other.coeffs[j]
                if b == ring.zero:
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(ring, out)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a unit."""
        ring = self.ring
        b0 = ring.inv(self.coeffs[0])
        n = self.order
        out = [b0] + [ring.zero] * n
        for m in range(1, n + 1):
            acc = ring.zero
            for k in range(1, m + 1):
                a = self.coeffs[k]
                if a == ring.zero:
                    continue
                acc = acc + a * out[m - k]
            out[m] = -(b0 * acc)
        return TruncatedSeries(ring, out)

    def log(self) -> "TruncatedSeries":
        """Logarithm sum((-1)^(d-1) (f-1)^d / d of a series with constant term 1.

        Needs exact division by the integers 1..N in the coefficient ring, so
        it is meant for rational or rational-function coefficients.
        """
        ring = self.ring
        if self.coeffs[0] != ring.one:
            raise ValueError("log requires constant term 1")
        n = self.order
        h = self - TruncatedSeries.one(ring, n)
        total = [ring.zero] * (n + 1)
        power = h
        for d in range(1, n + 1):
            negative = d % 2 == 0
            for k in range(d, n + 1):
                c = power.coeffs[k]
                if c == ring.zero:
                    continue
                term = ring.div_int(c, d)
                total[k] = total[k] - term if negative else total[k] + term
            if d < n:
                power = power * h
        return TruncatedSeries(ring, total)

    def negate_argument(self) -> "TruncatedSeries":
        """The series f(-x): flip the sign of every odd coefficient."""
        return TruncatedSeries(
            self.ring,
            (c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)),
        )

    # -- comparisons ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({self.ring!r}, {list(self.coeffs)!r})"
