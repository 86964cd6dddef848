"""Exact coefficient arithmetic for power product expansion computations.

Value types:

* built-in ``int`` and ``fractions.Fraction`` carry integers and rationals,
* :class:`IntPoly` is a dense polynomial over Z in the indeterminate q,
* :class:`RatFunc` is a reduced quotient of two :class:`IntPoly`,
* :class:`QuotientRing` / :class:`QuotientElem` give arithmetic in
  Z[q]/(m(q)) for a modulus with leading coefficient +-1 (cyclotomic
  polynomials, powers of q),
* :class:`ModInt` is a residue modulo a fixed integer.

Everything is immutable and exact; no floating point anywhere.  The ring
singletons at the bottom (``ZZ``, ``QQ``, ``ZX``, ``QFUNC``) bundle the few
ring facts (zero, one, integer embedding, unit inversion, exact division by
an integer) that the generic series and matrix code needs; a
:class:`QuotientRing` instance plays the same role for its own elements.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction


class InexactDivisionError(ArithmeticError):
    """A division that was required to be exact left a remainder."""


class ConsistencyError(RuntimeError):
    """An identity guaranteed by theory failed to hold.

    Raised when a computation contradicts a proven statement (an integrality,
    divisibility, or closed-form cross-check).  It always signals a bug or a
    genuinely broken hypothesis, never bad user input.
    """


# ---------------------------------------------------------------------------
# Integer polynomials


def _as_poly(value) -> "IntPoly":
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly((value,))
    raise TypeError(f"cannot interpret {value!r} as an integer polynomial")


class IntPoly:
    """Dense polynomial over Z in the indeterminate q.

    Coefficients are stored ascending by degree with no trailing zeros; the
    zero polynomial is the empty tuple.

    >>> str(IntPoly((1, 0, -2)))
    '1-2q^2'
    >>> IntPoly((1, 1)) * IntPoly((1, -1))
    IntPoly([1, 0, -1])
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, coeff: int, k: int) -> "IntPoly":
        """The polynomial coeff * q^k."""
        return cls((0,) * k + (coeff,))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def content(self) -> int:
        """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
        return functools.reduce(math.gcd, self.coeffs, 0)

    def primitive_positive(self) -> "IntPoly":
        """Divide out the content and normalize the leading coefficient > 0."""
        if self.is_zero:
            return self
        c = self.content
        if self.lead < 0:
            c = -c
        if c == 1:
            return self
        return IntPoly(tuple(x // c for x in self.coeffs))

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by q^k."""
        if self.is_zero or k == 0:
            return self
        return IntPoly((0,) * k + self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return P_ZERO
            return IntPoly(tuple(other * c for c in self.coeffs))
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return P_ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = P_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- division -----------------------------------------------------------

    def divexact(self, other) -> "IntPoly":
        """Exact division over Z; raises :class:`InexactDivisionError` if the
        quotient does not exist with integer coefficients."""
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("exact division by the zero polynomial")
        if self.is_zero:
            return P_ZERO
        da, db = self.degree, other.degree
        if da < db:
            raise InexactDivisionError(f"({self}) is not divisible by ({other})")
        lb = other.lead
        rem = list(self.coeffs)
        quo = [0] * (da - db + 1)
        for k in range(da - db, -1, -1):
            c = rem[db + k]
            if c == 0:
                continue
            t, leftover = divmod(c, lb)
            if leftover:
                raise InexactDivisionError(f"({self}) is not divisible by ({other})")
            quo[k] = t
            for i, bc in enumerate(other.coeffs):
                rem[i + k] -= t * bc
        if any(rem):
            raise InexactDivisionError(f"({self}) is not divisible by ({other})")
        return IntPoly(quo)

    def _prem(self, other: "IntPoly") -> "IntPoly":
        # Pseudo-remainder: repeatedly scale by the divisor's leading
        # coefficient so that elimination stays in Z[q].  Only the primitive
        # part of the result is meaningful to callers.
        r = self
        db = other.degree
        lb = other.lead
        while not r.is_zero and r.degree >= db:
            r = r * lb - other.shifted(r.degree - db) * r.lead
        return r

    def gcd(self, other) -> "IntPoly":
        """Primitive gcd with positive leading coefficient (primitive PRS)."""
        return poly_gcd(self, other)

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x):
        """Horner evaluation; exact for int or Fraction arguments.

        >>> IntPoly((1, 1, 1))(1)
        3
        """
        result = x * 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    # -- comparisons and rendering ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                body = mag + ("q" if k == 1 else f"q^{k}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("-" if c < 0 else "+") + body)
        return "".join(parts)


P_ZERO = IntPoly()
P_ONE = IntPoly((1,))
Q = IntPoly((0, 1))


def poly_gcd(a, b) -> IntPoly:
    """Primitive gcd of two integer polynomials, positive leading coefficient.

    Uses the primitive pseudo-remainder sequence, so all intermediate values
    stay in Z[q].  The result divides both inputs exactly.

    >>> poly_gcd(IntPoly((1, 1)), IntPoly((1, 0, -1)))
    IntPoly([1, 1])
    """
    a, b = _as_poly(a), _as_poly(b)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a = a.primitive_positive()
    b = b.primitive_positive()
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.degree == 0 or b.degree == 0:
        return P_ONE
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        if b.degree == 0:
            return P_ONE
        r = a._prem(b)
        a, b = b, r.primitive_positive()
    return a


def _gcd_full(a: IntPoly, b: IntPoly) -> IntPoly:
    # gcd in Z[q] including integer content; used to reduce fractions.
    if a.is_zero:
        return b.primitive_positive() * abs(b.content)
    if b.is_zero:
        return a.primitive_positive() * abs(a.content)
    c = math.gcd(a.content, b.content)
    g = poly_gcd(a, b)
    return g * c if c != 1 else g


@functools.cache
def cyclotomic(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, by exact division of q^m - 1.

    >>> str(cyclotomic(6))
    '1-q+q^2'
    """
    if m < 1:
        raise ValueError("cyclotomic index must be a positive integer")
    f = IntPoly((-1,) + (0,) * (m - 1) + (1,))
    for d in range(1, m):
        if m % d == 0:
            f = f.divexact(cyclotomic(d))
    return f


# ---------------------------------------------------------------------------
# Rational functions


class RatFunc:
    """Reduced quotient of two integer polynomials.

    Invariants: the denominator is nonzero with positive leading coefficient,
    and numerator and denominator share no polynomial or integer content
    factor.  Equality is structural, which the normalization makes canonical.

    >>> str(RatFunc(IntPoly((0, 1)), IntPoly((1, 1))))
    'q/(1+q)'
    >>> RatFunc(IntPoly((0, 2, 2)), IntPoly((2, 2)))
    RatFunc(IntPoly([0, 1]), IntPoly([1]))
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num = P_ZERO
            self.den = P_ONE
            return
        g = _gcd_full(num, den)
        if g != P_ONE:
            num = num.divexact(g)
            den = den.divexact(g)
        if den.lead < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly) -> "RatFunc":
        # num/den already fully normalized.
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def _from_coprime(cls, num: IntPoly, den: IntPoly) -> "RatFunc":
        # Primitive parts are already coprime; fix integer content and sign.
        if num.is_zero:
            return RF_ZERO
        c = math.gcd(num.content, den.content)
        if den.lead < 0:
            c = -c
        if c != 1:
            num = IntPoly(tuple(x // c for x in num.coeffs))
            den = IntPoly(tuple(x // c for x in den.coeffs))
        return cls._raw(num, den)

    @staticmethod
    def _coerce(value):
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, (IntPoly, int)):
            return RatFunc(value)
        return None

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == P_ONE

    def as_poly(self) -> IntPoly:
        if not self.is_polynomial:
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        g = _gcd_full(self.den, other.den)
        if g == P_ONE:
            num = self.num * other.den + other.num * self.den
            den = self.den * other.den
            return RatFunc(num, den)
        db = other.den.divexact(g)
        num = self.num * db + other.num * self.den.divexact(g)
        if num.is_zero:
            return RF_ZERO
        den = self.den * db
        # Any remaining common factor of num and den divides g.
        h = _gcd_full(num, g)
        if h != P_ONE:
            num = num.divexact(h)
            den = den.divexact(h)
        return RatFunc._from_coprime(num, den)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RF_ZERO
        g1 = _gcd_full(self.num, other.den)
        g2 = _gcd_full(other.num, self.den)
        n1 = self.num.divexact(g1) if g1 != P_ONE else self.num
        d2 = other.den.divexact(g1) if g1 != P_ONE else other.den
        n2 = other.num.divexact(g2) if g2 != P_ONE else other.num
        d1 = self.den.divexact(g2) if g2 != P_ONE else self.den
        return RatFunc._from_coprime(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        num, den = self.den, self.num
        if den.lead < 0:
            num, den = -num, -den
        return RatFunc._raw(num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, k: int):
        if k == 0:
            return RF_ONE
        if k < 0:
            return self.reciprocal() ** (-k)
        # Powers of a reduced fraction stay reduced (Gauss's lemma).
        return RatFunc._from_coprime(self.num ** k, self.den ** k)

    # -- substitution and evaluation ------------------------------------------

    def subst_inverse(self) -> "RatFunc":
        """The rational function f(1/q), cleared of negative powers.

        >>> str(RatFunc(IntPoly((0, 1)), IntPoly((1, 1))).subst_inverse())
        '1/(1+q)'
        """
        if self.is_zero:
            return self
        m = max(self.num.degree, self.den.degree)

        def reverse(p: IntPoly) -> IntPoly:
            return IntPoly((0,) * (m - p.degree) + tuple(reversed(p.coeffs)))

        return RatFunc(reverse(self.num), reverse(self.den))

    def __call__(self, x) -> Fraction:
        """Exact evaluation at a rational point (the denominator must not
        vanish there)."""
        den_val = Fraction(self.den(x))
        if den_val == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes at {x}")
        return Fraction(self.num(x)) / den_val

    # -- comparisons and rendering ---------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == P_ONE:
            return str(self.num)

        def wrap(s: str) -> str:
            return f"({s})" if ("+" in s or "-" in s[1:]) else s

        return f"{wrap(str(self.num))}/{wrap(str(self.den))}"


RF_ZERO = RatFunc._raw(P_ZERO, P_ONE)
RF_ONE = RatFunc._raw(P_ONE, P_ONE)


# ---------------------------------------------------------------------------
# Quotient rings Z[q]/(m)


def _frac_coeffs(p: IntPoly) -> list:
    return [Fraction(c) for c in p.coeffs]


def _fp_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_divmod(a: list, b: list):
    # Division over Q[q] on plain coefficient lists.
    r = list(a)
    quo = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    while len(r) >= len(b):
        t = r[-1] * inv_lead
        k = len(r) - len(b)
        quo[k] = t
        for i, bc in enumerate(b):
            r[i + k] -= t * bc
        r.pop()
        _fp_trim(r)
        if not r:
            break
    return quo, r


def _fp_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac == 0:
            continue
        for j, bc in enumerate(b):
            out[i + j] += ac * bc
    return _fp_trim(out)


def _fp_sub(a: list, b: list) -> list:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _fp_trim(out)


def _fp_half_xgcd(a: list, b: list):
    # Returns (g, s) with s*a = g (mod b), g the last nonzero remainder.
    r0, r1 = _fp_trim(list(a)), _fp_trim(list(b))
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _fp_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1))
    return r0, s0


class QuotientRing:
    """Arithmetic in Z[q]/(m(q)) for a modulus with leading coefficient +-1.

    Reduction is by plain long division, which stays in Z because the
    leading coefficient is a unit.
    """

    __slots__ = ("modulus",)

    def __init__(self, modulus):
        modulus = _as_poly(modulus)
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if modulus.lead not in (1, -1):
            raise ValueError("modulus must have leading coefficient +-1")
        self.modulus = modulus

    def __eq__(self, other):
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return self.modulus == other.modulus

    def __hash__(self):
        return hash(("QuotientRing", self.modulus.coeffs))

    def __repr__(self):
        return f"QuotientRing({self.modulus!r})"

    @property
    def zero(self) -> "QuotientElem":
        return QuotientElem(self, P_ZERO)

    @property
    def one(self) -> "QuotientElem":
        return self.reduce(P_ONE)

    def from_int(self, n: int) -> "QuotientElem":
        return self.reduce(IntPoly((n,)))

    def reduce(self, f) -> "QuotientElem":
        """Canonical representative of f modulo the modulus."""
        f = _as_poly(f)
        m = self.modulus
        dm = m.degree
        if f.degree < dm:
            return QuotientElem(self, f)
        rem = list(f.coeffs)
        lm = m.lead
        for k in range(f.degree - dm, -1, -1):
            c = rem[dm + k]
            if c == 0:
                continue
            t, leftover = divmod(c, lm)
            if leftover:
                raise InexactDivisionError("reduction requires a unit leading coefficient")
            for i, mc in enumerate(m.coeffs):
                rem[i + k] -= t * mc
        return QuotientElem(self, IntPoly(rem[:dm]))

    def inv(self, a: "QuotientElem") -> "QuotientElem":
        """Multiplicative inverse in Z[q]/(m), when it exists.

        Found over Q[q] by the extended Euclidean algorithm; the candidate
        must come out with integer coefficients to be an inverse here.
        """
        if a.ring != self:
            raise ValueError("element belongs to a different quotient ring")
        if a.rep.is_zero:
            raise ZeroDivisionError("zero is not invertible")
        g, s = _fp_half_xgcd(_frac_coeffs(a.rep), _frac_coeffs(self.modulus))
        if len(g) != 1:
            raise ValueError(f"{a.rep} is not invertible modulo {self.modulus}")
        scale = g[0]
        coeffs = []
        for c in s:
            v = c / scale
            if v.denominator != 1:
                raise ValueError(
                    f"{a.rep} has no inverse with integer coefficients modulo {self.modulus}"
                )
            coeffs.append(v.numerator)
        inv = self.reduce(IntPoly(coeffs))
        if (inv * a).rep != P_ONE:
            raise ConsistencyError("inverse verification failed")
        return inv

    def div_int(self, a: "QuotientElem", n: int) -> "QuotientElem":
        if a.ring != self:
            raise ValueError("element belongs to a different quotient ring")
        coeffs = []
        for c in a.rep.coeffs:
            t, leftover = divmod(c, n)
            if leftover:
                raise InexactDivisionError(f"{a.rep} is not divisible by {n} in {self!r}")
            coeffs.append(t)
        return QuotientElem(self, IntPoly(coeffs))


class QuotientElem:
    """An element of a :class:`QuotientRing`, stored by its canonical
    representative of degree below the modulus."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: QuotientRing, rep: IntPoly):
        self.ring = ring
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, QuotientElem):
            if other.ring != self.ring:
                raise ValueError("mixing elements of different quotient rings")
            return other
        if isinstance(other, (int, IntPoly)):
            return self.ring.reduce(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuotientElem(self.ring, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return QuotientElem(self.ring, -self.rep)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuotientElem(self.ring, self.rep - other.rep)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.ring.reduce(self.rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use QuotientRing.inv for inverses")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash(("QuotientElem", self.ring.modulus.coeffs, self.rep.coeffs))

    def __repr__(self):
        return f"QuotientElem({self.rep!r} mod {self.ring.modulus!r})"

    def __str__(self):
        return str(self.rep)


def quotient_reduce(f, modulus) -> QuotientElem:
    """Reduce an integer polynomial modulo a unit-leading-coefficient modulus.

    >>> str(quotient_reduce(IntPoly((1, 3)), IntPoly((1, 1))))
    '-2'
    """
    return QuotientRing(modulus).reduce(f)


# ---------------------------------------------------------------------------
# Residues modulo an integer


class ModInt:
    """Residue modulo a fixed integer p >= 2."""

    __slots__ = ("residue", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        self.residue = value % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ValueError("mixing different moduli")
            return other
        if isinstance(other, int):
            return ModInt(other, self.modulus)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ModInt(self.residue + other.residue, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return ModInt(-self.residue, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ModInt(self.residue - other.residue, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ModInt(self.residue * other.residue, self.modulus)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.residue == other.residue

    def __hash__(self):
        return hash(("ModInt", self.residue, self.modulus))

    def __repr__(self):
        return f"ModInt({self.residue}, {self.modulus})"

    def __str__(self):
        return str(self.residue)


# ---------------------------------------------------------------------------
# Ring protocol singletons


class _IntegerRing:
    zero = 0
    one = 1

    @staticmethod
    def from_int(n: int) -> int:
        return n

    @staticmethod
    def inv(a: int) -> int:
        if a in (1, -1):
            return a
        raise InexactDivisionError(f"{a} is not a unit in Z")

    @staticmethod
    def div_int(a: int, n: int) -> int:
        t, leftover = divmod(a, n)
        if leftover:
            raise InexactDivisionError(f"{a} is not divisible by {n}")
        return t

    def __repr__(self):
        return "ZZ"


class _RationalField:
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n: int) -> Fraction:
        return Fraction(n)

    @staticmethod
    def inv(a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("zero is not invertible")
        return 1 / a

    @staticmethod
    def div_int(a: Fraction, n: int) -> Fraction:
        return a / n

    def __repr__(self):
        return "QQ"


class _PolyRing:
    zero = P_ZERO
    one = P_ONE

    @staticmethod
    def from_int(n: int) -> IntPoly:
        return IntPoly((n,))

    @staticmethod
    def inv(a: IntPoly) -> IntPoly:
        if a == P_ONE or a == IntPoly((-1,)):
            return a
        raise InexactDivisionError(f"{a} is not a unit in Z[q]")

    @staticmethod
    def div_int(a: IntPoly, n: int) -> IntPoly:
        return a.divexact(IntPoly((n,)))

    def __repr__(self):
        return "ZX"


class _RatFuncField:
    zero = RF_ZERO
    one = RF_ONE

    @staticmethod
    def from_int(n: int) -> RatFunc:
        return RatFunc(n)

    @staticmethod
    def inv(a: RatFunc) -> RatFunc:
        return a.reciprocal()

    @staticmethod
    def div_int(a: RatFunc, n: int) -> RatFunc:
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return RatFunc._from_coprime(a.num, a.den * n) if not a.is_zero else RF_ZERO

    def __repr__(self):
        return "QFUNC"


ZZ = _IntegerRing()
QQ = _RationalField()
ZX = _PolyRing()
QFUNC = _RatFuncField()


# ---------------------------------------------------------------------------
# Serialization used by the CLI layer


def serialize(value):
    """JSON-friendly exact encoding.

    Integers become decimal strings (they can exceed 64 bits), rationals
    "num/den" strings, polynomials arrays of decimal-string coefficients in
    ascending degree, and rational functions {"num": ..., "den": ...}.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not ring values")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, IntPoly):
        return [str(c) for c in value.coeffs]
    if isinstance(value, RatFunc):
        return {"num": [str(c) for c in value.num.coeffs],
                "den": [str(c) for c in value.den.coeffs]}
    if isinstance(value, QuotientElem):
        return [str(c) for c in value.rep.coeffs]
    if isinstance(value, ModInt):
        return str(value.residue)
    raise TypeError(f"cannot serialize {value!r}")
