"""SL2 representation data for the twist-knot group <a, b | a w^n = w^n b>.

With ``w = a b^-1 a^-1 b`` the normal form is

    rho(a) = [[M, 1], [0, M^-1]],    rho(b) = [[M, 0], [Z, M^-1]],

and every polynomial here lives in Z[L, M^{+-1}, Z].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .poly_core import (
    L,
    M,
    ONE,
    ZERO,
    Z,
    LaurentPoly,
    bar_involution,
    degree_range,
)

MINV = M**-1
# U = (M - M^-1)^2
U = (M - MINV) ** 2


@dataclass(frozen=True)
class Mat2:
    a11: LaurentPoly
    a12: LaurentPoly
    a21: LaurentPoly
    a22: LaurentPoly

    @classmethod
    def identity(cls) -> Mat2:
        return cls(ONE, ZERO, ZERO, ONE)

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __add__(self, other: Mat2) -> Mat2:
        return Mat2(self.a11 + other.a11, self.a12 + other.a12,
                    self.a21 + other.a21, self.a22 + other.a22)

    def __sub__(self, other: Mat2) -> Mat2:
        return Mat2(self.a11 - other.a11, self.a12 - other.a12,
                    self.a21 - other.a21, self.a22 - other.a22)

    def scale(self, c: LaurentPoly) -> Mat2:
        return Mat2(c * self.a11, c * self.a12, c * self.a21, c * self.a22)

    def det(self) -> LaurentPoly:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> LaurentPoly:
        return self.a11 + self.a22

    def sl2_inverse(self) -> Mat2:
        """Adjugate; the inverse when det = 1."""
        return Mat2(self.a22, -self.a12, -self.a21, self.a11)

    def entries(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.a11, self.a12, self.a21, self.a22)


def rho_a() -> Mat2:
    return Mat2(M, ONE, ZERO, MINV)


def rho_b() -> Mat2:
    return Mat2(M, ZERO, Z, MINV)


@lru_cache(maxsize=None)
def rho_w() -> Mat2:
    """rho(a b^-1 a^-1 b), computed by multiplying the generator matrices."""
    a, b = rho_a(), rho_b()
    return a @ b.sl2_inverse() @ a.sl2_inverse() @ b


def rho_w_displayed() -> Mat2:
    """The matrix of rho(w) written out by hand, kept as a transcription check."""
    return Mat2(
        M**2 * Z + (1 - Z) ** 2,
        M - MINV + Z * MINV,
        -Z * MINV + Z * M + Z**2 * MINV,
        1 + Z * M**-2,
    )


@lru_cache(maxsize=None)
def chi() -> LaurentPoly:
    """Trace of rho(w): Z^2 + (M - M^-1)^2 Z + 2."""
    return rho_w().trace()


@lru_cache(maxsize=None)
def rho_w_power(n: int) -> Mat2:
    """rho(w^n) by the Cayley-Hamilton recurrence X_n = chi X_{n-1} - X_{n-2}.

    Negative powers start from rho(w)^-1 = chi I - rho(w) and run the same
    recurrence downwards.
    """
    if n == 0:
        return Mat2.identity()
    if n == 1:
        return rho_w()
    c = chi()
    if n == -1:
        return Mat2.identity().scale(c) - rho_w()
    if n > 0:
        return rho_w_power(n - 1).scale(c) - rho_w_power(n - 2)
    return rho_w_power(n + 1).scale(c) - rho_w_power(n + 2)


def r_poly_matrix(n: int) -> LaurentPoly:
    """(M - M^-1) w12 + w22 read off the entries of rho(w^n)."""
    w = rho_w_power(n)
    return (M - MINV) * w.a12 + w.a22


@lru_cache(maxsize=None)
def r_poly_recursive(n: int) -> LaurentPoly:
    """r_n from the seeds r_0 = 1, r_1 = 1 + Z + U and r_n = chi r_{n-1} - r_{n-2}."""
    if n == 0:
        return ONE
    if n == 1:
        return 1 + Z + U
    if n > 1:
        return chi() * r_poly_recursive(n - 1) - r_poly_recursive(n - 2)
    # r_{n} = chi r_{n+1} - r_{n+2}
    return chi() * r_poly_recursive(n + 1) - r_poly_recursive(n + 2)


def binomial(top: int, bottom: int) -> int:
    """Binomial coefficient, zero unless 0 <= bottom <= top."""
    if bottom < 0 or top < 0 or bottom > top:
        return 0
    return comb(top, bottom)


@lru_cache(maxsize=None)
def r_poly_closed(n: int) -> LaurentPoly:
    """r_n as a finite binomial sum.

    For n >= 1::

        sum_{i=0}^{2n-1} C(n + floor((i-1)/2), i) Z^i (1 + Z^-1 U)^floor((i+1)/2)

    and for n <= 0::

        sum_{i=0}^{-2n} C(-n + floor(i/2), i) (-Z)^i (1 + Z^-1 U)^floor((i+1)/2)

    n = 0 takes the second branch, which gives r_0 = 1.
    """
    inner = 1 + Z**-1 * U
    total = ZERO
    if n >= 1:
        for i in range(2 * n):
            c = binomial(n + (i - 1) // 2, i)
            if c:
                total += c * Z**i * inner ** ((i + 1) // 2)
    else:
        for i in range(-2 * n + 1):
            c = binomial(-n + i // 2, i)
            if c:
                total += c * (-Z) ** i * inner ** ((i + 1) // 2)
    if not total.is_zero() and degree_range(total, "Z")[0] < 0:
        raise ArithmeticError(f"negative powers of Z survived in r_{n}")
    return total


def s_poly(n: int) -> LaurentPoly:
    """w12 L + bar(w12) for the (1, 2) entry w12 of rho(w^n)."""
    w12 = rho_w_power(n).a12
    return w12 * L + bar_involution(w12)


def s_prime() -> LaurentPoly:
    """The n = 1 instance of s_n, which cuts out Z for every twist knot."""
    return (M - MINV + Z * MINV) * L + MINV - M + Z * M


def z_substitution() -> tuple[LaurentPoly, LaurentPoly]:
    """(numerator, denominator) of Z solved from s' = 0."""
    return (M - MINV) * (1 - L), M + L * MINV


def longitude_entry(n: int) -> LaurentPoly:
    """w11 bar(w22) + Z w12 bar(w12): the longitude eigenvalue as a function of M, Z."""
    w = rho_w_power(n)
    return w.a11 * bar_involution(w.a22) + Z * w.a12 * bar_involution(w.a12)
