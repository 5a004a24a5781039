"""Dense univariate polynomial arithmetic over Z and Q, done exactly.

Coefficients are Python ints (arbitrary precision) or Fractions, stored in
ascending degree order.  The zero polynomial is the empty coefficient tuple.
All operations are pure; IntPolynomial and RatPolynomial values are immutable
and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

# Schoolbook multiplication below this many coefficients, Karatsuba above.
# Correctness does not depend on the value.
KARATSUBA_THRESHOLD = 32


class NotDivisible(ArithmeticError):
    """Exact division failed: the dividend is not a Z[x]-multiple of the divisor."""


# ---------------------------------------------------------------------------
# Raw coefficient-list kernel.  Lists of ints, ascending degree, normalized
# (no trailing zeros).  These are the hot loops; everything else wraps them.
# ---------------------------------------------------------------------------

def _strip(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _add(a: Sequence[int], b: Sequence[int]) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _strip(out)


def _sub(a: Sequence[int], b: Sequence[int]) -> list:
    out = list(a) + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return _strip(out)


def _neg(a: Sequence[int]) -> list:
    return [-x for x in a]


def _mul_school(a: Sequence[int], b: Sequence[int]) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _mul(a: Sequence[int], b: Sequence[int]) -> list:
    if not a or not b:
        return []
    n = min(len(a), len(b))
    if n <= KARATSUBA_THRESHOLD:
        return _mul_school(a, b)
    h = max(len(a), len(b)) // 2
    a0, a1 = list(a[:h]), list(a[h:])
    b0, b1 = list(b[:h]), list(b[h:])
    z0 = _mul(a0, b0)
    z2 = _mul(a1, b1)
    z1 = _sub(_sub(_mul(_add(a0, a1), _add(b0, b1)), z0), z2)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(z0):
        out[i] += x
    for i, x in enumerate(z1):
        out[i + h] += x
    for i, x in enumerate(z2):
        out[i + 2 * h] += x
    return _strip(out)


def _mul_scalar(a: Sequence[int], k: int) -> list:
    if k == 0:
        return []
    return [x * k for x in a]


def _exact_div(a: Sequence[int], b: Sequence[int]) -> list:
    """Quotient a/b when b divides a exactly in Z[x]; raise NotDivisible otherwise."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        raise NotDivisible("degree of dividend below divisor")
    q = [0] * (len(r) - db)
    for i in range(len(q) - 1, -1, -1):
        c = r[i + db]
        if c == 0:
            continue
        t, rem = divmod(c, lb)
        if rem:
            raise NotDivisible("leading coefficient does not divide")
        q[i] = t
        for j, y in enumerate(b):
            r[i + j] -= t * y
    if any(r):
        raise NotDivisible("nonzero remainder")
    return _strip(q)


def _pseudo_rem(a: Sequence[int], b: Sequence[int]) -> list:
    """Pseudo remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x]."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    for i in range(da - db, -1, -1):
        top = r[i + db]
        r = [x * lb for x in r]
        if top:
            for j, y in enumerate(b):
                r[i + j] -= top * y
        # the eliminated coefficient is exactly zero
        r[i + db] = 0
    return _strip(r)


def _content(a: Sequence[int]) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def _primitive(a: Sequence[int]) -> list:
    """Primitive part with positive leading coefficient."""
    if not a:
        return []
    g = _content(a)
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def _gcd(a: Sequence[int], b: Sequence[int]) -> list:
    """Primitive gcd, positive leading coefficient; subresultant PRS."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    g, h = 1, 1
    while True:
        delta = (len(a) - 1) - (len(b) - 1)
        r = _pseudo_rem(a, b)
        if not r:
            return _primitive(b)
        if len(r) == 1:
            return [1]
        a, b = b, [x // (g * h**delta) for x in r]
        g = a[-1]
        if delta:
            h = g**delta // h ** (delta - 1)


def _resultant(a: Sequence[int], b: Sequence[int]) -> int:
    """Res(a, b) with the Sylvester convention, via the subresultant PRS."""
    if not a or not b:
        raise ZeroDivisionError("resultant of the zero polynomial")
    da, db = len(a) - 1, len(b) - 1
    if da == 0 and db == 0:
        return 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    sign = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if da * db % 2:
            sign = -sign
    ca, cb = _content(a), _content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca**db * cb**da
    g, h = 1, 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = _pseudo_rem(a, b)
        if not r:
            return 0
        a, b = b, [x // (g * h**delta) for x in r]
        g = a[-1]
        if delta:
            h = g**delta // h ** (delta - 1)
        if len(b) == 1:
            da = len(a) - 1
            # last nonzero subresultant; collapse the h power exactly
            res = b[0] ** da // h ** (da - 1) if da > 1 else b[0] ** da
            return sign * t * res


def _shift_mul(a: Sequence[int], k: int) -> list:
    """a * x^k."""
    if not a:
        return []
    return [0] * k + list(a)


# ---------------------------------------------------------------------------
# IntPolynomial
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial over Z, coefficients ascending, canonical form.

    The zero polynomial is the empty tuple; otherwise the last coefficient is
    nonzero and degree == len(coeffs) - 1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    # -- inspection ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner; works for int, Fraction, or any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _coerce(other)
        return IntPolynomial(_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _coerce(other)
        return IntPolynomial(_sub(self.coeffs, other.coeffs))

    def __rsub__(self, other: int) -> "IntPolynomial":
        return _coerce(other) - self

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(_neg(self.coeffs))

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(_mul_scalar(self.coeffs, other))
        return IntPolynomial(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        return IntPolynomial(_shift_mul(self.coeffs, k))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        return _content(self.coeffs)

    def primitive_part(self) -> "IntPolynomial":
        return IntPolynomial(_primitive(self.coeffs))

    def to_rational(self) -> "RatPolynomial":
        return RatPolynomial(tuple(Fraction(c) for c in self.coeffs))

    def __str__(self) -> str:
        return format_poly(self.coeffs, "c")

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


def _coerce(v) -> IntPolynomial:
    if isinstance(v, IntPolynomial):
        return v
    if isinstance(v, int):
        return IntPolynomial((v,))
    raise TypeError(f"cannot coerce {type(v).__name__} to IntPolynomial")


X = IntPolynomial((0, 1))

ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))


def poly(*coeffs: int) -> IntPolynomial:
    """Convenience constructor, ascending coefficients."""
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# Named operations (the module-level API used by the rest of the package)
# ---------------------------------------------------------------------------

def zx_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def zx_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p - q


def zx_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def zx_exact_div(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact quotient in Z[x]; NotDivisible if p is not a multiple of q."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    return IntPolynomial(_exact_div(p.coeffs, q.coeffs))


def zx_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return IntPolynomial(_gcd(p.coeffs, q.coeffs))


def zx_resultant(p: IntPolynomial, q: IntPolynomial) -> int:
    """Resultant with the standard Sylvester-determinant sign convention."""
    return _resultant(p.coeffs, q.coeffs)


def zx_discriminant(p: IntPolynomial) -> int:
    """disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p)."""
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    res = _resultant(p.coeffs, p.derivative().coeffs)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    d, rem = divmod(sign * res, p.lc)
    assert rem == 0, "Res(p, p') is always divisible by lc(p)"
    return d


# ---------------------------------------------------------------------------
# RatPolynomial: the same canonical form, Fraction coefficients.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RatPolynomial:
    """Dense polynomial over Q; Fractions keep themselves in lowest terms."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_integer(self) -> IntPolynomial:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return IntPolynomial(tuple(int(c) for c in self.coeffs))

    def __mul__(self, other: "RatPolynomial") -> "RatPolynomial":
        if not self.coeffs or not other.coeffs:
            return RatPolynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return RatPolynomial(out)

    def __str__(self) -> str:
        return format_poly(self.coeffs, "X")

    def __repr__(self) -> str:
        return f"RatPolynomial({[str(c) for c in self.coeffs]!r})"


# ---------------------------------------------------------------------------
# Elementary number theory helpers
# ---------------------------------------------------------------------------

def divisors(n: int) -> list[int]:
    """Ascending divisor list by trial division; n is small in this package."""
    if n < 1:
        raise ValueError("divisors of a non-positive integer")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius of a non-positive integer")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def primes_from(start: int):
    """Yield primes >= start, forever."""
    n = max(2, start)
    while True:
        if _is_prime_small(n):
            yield n
        n += 1


def _is_prime_small(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# ---------------------------------------------------------------------------
# Pretty printing
# ---------------------------------------------------------------------------

def format_poly(coeffs: Sequence, var: str = "c") -> str:
    """Human form, descending terms: 'c^4 + 3c^2 + 3'."""
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = " + " if c > 0 else " - "
        mag = c if c > 0 else -c
        if i == 0:
            term = f"{mag}"
        else:
            stem = var if i == 1 else f"{var}^{i}"
            term = stem if mag == 1 else f"{mag}{stem}"
        if not parts:
            parts.append(("" if c > 0 else "-") + term)
        else:
            parts.append(sign + term)
    return "".join(parts)
