"""Critical-orbit polynomials and Misiurewicz polynomials for x^d + c.

The critical point of x^d + c is 0; its orbit polynomials a_i(c) satisfy
a_1 = c and a_{i+1} = a_i^d + c.  Parameters c where the orbit has tail m
and period n are the roots of a monic polynomial G_d(m,n), produced here by
Moebius-weighted products of orbit differences and exact divisions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .polycore import (
    IntPolynomial,
    NotDivisible,
    divisors,
    moebius,
    zx_exact_div,
)

# Orbit polynomials grow as d^(i-1) coefficients; refuse to build anything
# past this many coefficients unless the caller raises the budget.
DEFAULT_DEGREE_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """Requested orbit polynomial exceeds the configured degree budget."""


class NotMonic(ArithmeticError):
    """A constructed Misiurewicz polynomial failed its monicity invariant."""


@dataclass(frozen=True)
class OrbitSequence:
    """Orbit polynomials [a_1, ..., a_T] of the critical point for x^d + c."""

    d: int
    polys: tuple[IntPolynomial, ...]

    def a(self, i: int) -> IntPolynomial:
        """a_i(c); a_0 is the zero polynomial (the critical point itself)."""
        if i == 0:
            return IntPolynomial(())
        return self.polys[i - 1]


def orbit_polys(d: int, upto: int, budget: int = DEFAULT_DEGREE_BUDGET) -> OrbitSequence:
    """Exact orbit polynomials a_1..a_upto via the defining recurrence."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if upto < 1:
        raise ValueError("upto must be at least 1")
    if d ** (upto - 1) + 1 > budget:
        raise BudgetExceeded(
            f"a_{upto} for d={d} needs {d**(upto-1)+1} coefficients, budget {budget}"
        )
    c = IntPolynomial((0, 1))
    polys = [c]
    for _ in range(upto - 1):
        polys.append(polys[-1] ** d + c)
    return OrbitSequence(d, tuple(polys))


def dyn_product_at_orbit(
    d: int, j: int, n: int, budget: int = DEFAULT_DEGREE_BUDGET
) -> IntPolynomial:
    """Period-n dynatomic product evaluated along the orbit at index j.

    Equals prod over k | n of (a_{j+k} - a_j)^mu(n/k), with a_0 = 0; the
    Moebius-positive factors are multiplied out, the negative ones divide
    exactly.  A failed division means a broken divisibility guarantee and
    aborts with the offending parameters.
    """
    if j < 0 or n < 1:
        raise ValueError("need j >= 0 and n >= 1")
    orbit = orbit_polys(d, j + n, budget)
    num = IntPolynomial((1,))
    den = IntPolynomial((1,))
    for k in divisors(n):
        mu = moebius(n // k)
        if mu == 0:
            continue
        diff = orbit.a(j + k) - orbit.a(j)
        if mu == 1:
            num = num * diff
        else:
            den = den * diff
    try:
        return zx_exact_div(num, den)
    except NotDivisible as exc:
        raise NotDivisible(
            f"dynatomic product not polynomial at (d={d}, j={j}, n={n}): {exc}"
        ) from exc


@dataclass(frozen=True)
class MisiurewiczPoly:
    """G_d(m,n) together with its parameters.

    degenerate marks the constant-1 cases (zero prescribed degree); the
    verifier skips those.
    """

    d: int
    m: int
    n: int
    G: IntPolynomial
    degenerate: bool = field(default=False)

    @property
    def degree(self) -> int:
        return self.G.degree


def gdmn(d: int, m: int, n: int, budget: int = DEFAULT_DEGREE_BUDGET) -> MisiurewiczPoly:
    """Misiurewicz polynomial for tail m and period n under x^d + c.

    m = 0 gives the period-n (Gleason-type) polynomial.  For m >= 1 the
    generalized dynatomic value at the critical point is divided by the
    (d-1)-th power of the periodic value whenever n divides m - 1.
    """
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    if m == 0:
        G = dyn_product_at_orbit(d, 0, n, budget)
    else:
        num = dyn_product_at_orbit(d, m, n, budget)
        den = dyn_product_at_orbit(d, m - 1, n, budget)
        try:
            G = zx_exact_div(num, den)
            if (m - 1) % n == 0:
                G = zx_exact_div(G, dyn_product_at_orbit(d, 0, n, budget) ** (d - 1))
        except NotDivisible as exc:
            raise NotDivisible(f"G_{d}({m},{n}) construction: {exc}") from exc
    if not G.is_monic():
        raise NotMonic(f"G_{d}({m},{n}) came out non-monic: lc={G.lc}")
    return MisiurewiczPoly(d, m, n, G, degenerate=(G.degree == 0))


@dataclass(frozen=True)
class ExponentA:
    """The exponent A with (a_i)^A = (d) on periodic-index orbit elements."""

    value: int


def exponent_formula(d: int, m: int, n: int) -> ExponentA:
    """Piecewise exponent: d^(m-1)(d-1) generally, (d^(m-1)-1)(d-1) when n | m-1."""
    if m < 1:
        raise ValueError("exponent formula needs m >= 1")
    if (m - 1) % n == 0:
        return ExponentA((d ** (m - 1) - 1) * (d - 1))
    return ExponentA(d ** (m - 1) * (d - 1))


def expected_degree(d: int, m: int, n: int) -> int | None:
    """Known degree of G_d(m,n), where a formula exists; None otherwise.

    Covers n = 1 for every d and (d, n) = (2, 2); degrees for other cases are
    recorded as computed, without an asserted expectation.
    """
    if m >= 1 and n == 1:
        return (d ** (m - 1) - 1) * (d - 1)
    if d == 2 and n == 2 and m >= 1:
        return 2 ** (m - 1) - 1 if (m - 1) % 2 == 0 else 2 ** (m - 1)
    return None


def brute_force_root_poly(d: int, m: int, n: int) -> IntPolynomial:
    """Independent oracle: squarefree polynomial whose roots are the exact
    tail-m period-n parameters, obtained by gcd-stripping of orbit-closure
    conditions.  Exponential in m+n; only for small cross-checks.
    """
    from .polycore import zx_gcd

    def closure(mm: int, nn: int) -> IntPolynomial:
        # parameters with f^(mm+nn)(0) = f^mm(0), i.e. all tails <= mm with
        # period dividing nn
        orbit = orbit_polys(d, mm + nn)
        return orbit.a(mm + nn) - orbit.a(mm)

    def squarefree(p: IntPolynomial) -> IntPolynomial:
        g = zx_gcd(p, p.derivative())
        return zx_exact_div(p * (1 if p.lc > 0 else -1), g * (1 if g.lc > 0 else 0) or g)

    def sf(p: IntPolynomial) -> IntPolynomial:
        g = zx_gcd(p, p.derivative())
        q = zx_exact_div(p, g * (p.lc // abs(p.lc)))
        return q.primitive_part()

    target = sf(closure(m, n))
    strip = IntPolynomial((1,))
    if m >= 1:
        strip = strip * sf(closure(m - 1, n))
    for np in divisors(n)[:-1]:
        strip = strip * sf(closure(m, np))
    g = zx_gcd(target, strip)
    return zx_exact_div(target, g * (1 if (target.lc > 0) == (g.lc > 0) else -1)).primitive_part()
