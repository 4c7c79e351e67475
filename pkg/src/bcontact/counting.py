"""Exact counting arithmetic for tight structures on the solid torus.

The number of tight contact structures on a solid torus whose boundary
carries 2n dividing curves of slope -p/q is

    N(n, -p, q) = C_n * ((r - s) * n + s),

where C_n is the n-th Catalan number and r, s are absolute products read
off the negative continued fraction expansion

    -p/q = a0 - 1/(a1 - 1/(... - 1/ak)),   a_i <= -2,

namely r = |(a0+1)(a1+1)...(a_{k-1}+1) * ak| and
s = |(a0+1)(a1+1)...(a_{k-1}+1) * (ak+1)|.  The boundary slope p = q = 1
degenerates: its expansion is the single coefficient [-1] and r = s = 1,
which collapses the count to C_n.

Everything here is exact integer arithmetic; the counts outgrow 64 bits
quickly (C_34 already does).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd


@dataclass(frozen=True)
class ContinuedFractionExpansion:
    """Coefficients a0..ak of a negative continued fraction, all <= -2.

    The single-coefficient expansion [-1] only arises from p = q = 1 and
    is flagged ``degenerate``.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if not self.coefficients:
            raise ValueError("expansion needs at least one coefficient")
        if self.coefficients == (-1,):
            return
        bad = [a for a in self.coefficients if a > -2]
        if bad:
            raise ValueError(f"coefficients must be <= -2, got {bad}")

    @property
    def degenerate(self) -> bool:
        return self.coefficients == (-1,)

    def value(self) -> Fraction:
        """Evaluate a0 - 1/(a1 - 1/(... - 1/ak)) exactly."""
        acc = Fraction(self.coefficients[-1])
        for a in reversed(self.coefficients[:-1]):
            acc = a - Fraction(1, 1) / acc
        return acc


@dataclass(frozen=True)
class TightCountResult:
    """N(n, -p, q) together with every intermediate the formula used."""

    n: int
    p: int
    q: int
    r: int
    s: int
    count: int
    expansion: ContinuedFractionExpansion


def _check_slope(p: int, q: int) -> None:
    if not (0 < q <= p):
        raise ValueError(f"slope ({p},{q}) must satisfy 0 < q <= p")
    if gcd(p, q) != 1:
        raise ValueError(f"slope ({p},{q}) must be coprime")


def negative_continued_fraction(p: int, q: int) -> ContinuedFractionExpansion:
    """Expand -p/q with every coefficient <= -2 (p = q = 1 gives [-1]).

    Runs the exact recursion x0 = -p/q; a_i = floor(x_i), stopping when
    x_i is an integer; x_{i+1} = 1/(a_i - x_i).  Plain integer pairs
    throughout: flooring floats near integers is exactly the failure mode
    this must not have.
    """
    _check_slope(p, q)
    coefficients = []
    num, den = -p, q
    while True:
        a, rem = divmod(num, den)
        if rem == 0:
            coefficients.append(a)
            break
        coefficients.append(a)
        # x - floor(x) = rem/den, so 1/(a - x) = -den/rem.
        num, den = -den, rem
    return ContinuedFractionExpansion(tuple(coefficients))


def expansion_products(cf: ContinuedFractionExpansion) -> tuple[int, int]:
    """The pair (r, s) of absolute coefficient products entering the count.

    r multiplies the last coefficient into the running product of
    (a_i + 1); s multiplies in (ak + 1) instead.  The degenerate
    expansion [-1] yields (1, 1).
    """
    if cf.degenerate:
        return (1, 1)
    prefix = 1
    for a in cf.coefficients[:-1]:
        prefix *= a + 1
    last = cf.coefficients[-1]
    return (abs(prefix * last), abs(prefix * (last + 1)))


def catalan(n: int) -> int:
    """The n-th Catalan number binom(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError("catalan is defined for n >= 0")
    return comb(2 * n, n) // (n + 1)


def tight_count_solid_torus(n: int, p: int, q: int) -> TightCountResult:
    """N(n, -p, q) = C_n ((r - s) n + s) for 2n boundary curves of slope -p/q."""
    if n < 1:
        raise ValueError("the boundary carries 2n curves with n >= 1")
    cf = negative_continued_fraction(p, q)
    r, s = expansion_products(cf)
    count = catalan(n) * ((r - s) * n + s)
    return TightCountResult(n=n, p=p, q=q, r=r, s=s, count=count, expansion=cf)
