"""A-polynomials of the twist knots K_n = J(2, 2n) by three independent routes.

* ``explicit``: the closed binomial sum in L and M, denominators pre-cleared.
* ``substitution``: r_n from the recurrence with Z replaced by its value
  solved from s' = 0.
* ``resultant``: Res_Z(r_n, s') through a Sylvester determinant.

All three are compared on canonical forms (see ``poly_core.canonicalize``).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .elimination import Indivisible, exact_divide, resultant
from .poly_core import (
    ZERO,
    ExpVec,
    L,
    LaurentPoly,
    M,
    canonicalize,
    degree_range,
    substitute_monomial,
)
from .rep_engine import (
    binomial,
    r_poly_recursive,
    s_poly,
    s_prime,
    z_substitution,
)

METHODS = ("explicit", "substitution", "resultant")


@dataclass(frozen=True)
class APoly:
    n: int
    method: str
    poly: LaurentPoly
    unit_shift: ExpVec
    sign: int
    content: int
    # only set by the full s_n resultant route
    extraneous_factor: LaurentPoly | None = None

    def raw(self) -> LaurentPoly:
        """The uncanonicalized value the pipeline produced."""
        return (self.sign * self.content * self.poly).shift(*self.unit_shift)


def _package(n: int, method: str, raw: LaurentPoly, **extra) -> APoly:
    if raw.is_zero():
        raise ArithmeticError(f"{method} pipeline produced 0 for n = {n}")
    if any(e.e_Z for e, _ in raw.items()):
        raise ArithmeticError(f"{method} pipeline left Z in A_{n}")
    cf = canonicalize(raw)
    return APoly(n, method, cf.poly, cf.unit_shift, cf.sign, cf.content, **extra)


def explicit_raw(n: int) -> LaurentPoly:
    """The closed-form sum multiplied by its clearing prefactor, before canonicalizing.

    For n >= 1 the prefactor M^{2n} (L + M^2)^{2n-1} is distributed into the
    sum; for n <= 0 it is M^{-2n} (L + M^2)^{-2n}. The n <= 0 summands carry
    the sign (-1)^i inherited from the (-Z)^i of the r_n sum.
    """
    q = M**2 - L * M**-2
    base = L + M**2
    total = ZERO
    if n >= 1:
        top = 2 * n - 1
        for i in range(top + 1):
            c = binomial(n + (i - 1) // 2, i)
            if c:
                total += (
                    c * (M**2 - 1) ** i * base ** (top - i)
                    * (1 - L) ** (i // 2) * q ** ((i + 1) // 2)
                )
        prefactor_m = 2 * n
    else:
        top = -2 * n
        for i in range(top + 1):
            c = binomial(-n + i // 2, i)
            if c:
                total += (
                    (-1) ** i * c * (M**2 - 1) ** i * base ** (top - i)
                    * (1 - L) ** (i // 2) * q ** ((i + 1) // 2)
                )
        prefactor_m = -2 * n
    total = total.shift(0, prefactor_m, 0)
    if not total.is_zero() and degree_range(total, "M")[0] < 0:
        raise ArithmeticError(f"negative powers of M survived clearing for n = {n}")
    return total


def a_poly_explicit(n: int) -> APoly:
    return _package(n, "explicit", explicit_raw(n))


def a_poly_substitution(n: int) -> APoly:
    """Substitute Z = (M - M^-1)(1 - L) / (M + L M^-1) into r_n and clear denominators.

    Clearing with (M + L M^-1)^d and then multiplying by M^d turns the
    denominator into (L + M^2)^d, matching the prefactor of the closed form.
    """
    num, den = z_substitution()
    cleared, d = substitute_monomial(r_poly_recursive(n), "Z", num, den)
    return _package(n, "substitution", cleared.shift(0, d, 0))


def a_poly_resultant(n: int, full: bool = False) -> APoly:
    """Eliminate Z from r_n = 0 and s' = 0 (or s_n = 0 when ``full``).

    With ``full`` the s'-route answer must divide Res_Z(r_n, s_n); the
    quotient is reported as ``extraneous_factor`` and the returned ``poly``
    is the canonical form of the full resultant itself.
    """
    r = r_poly_recursive(n)
    if not full:
        return _package(n, "resultant", resultant(r, s_prime(), "Z"))
    if n == 0:
        raise ValueError("s_0 = 0, so the full resultant is degenerate at n = 0")
    big = resultant(r, s_poly(n), "Z")
    small = a_poly_resultant(n).poly
    try:
        factor = exact_divide(big, small)
    except Indivisible:
        raise ArithmeticError(
            f"A_{n} from the s' route does not divide Res_Z(r_n, s_n)"
        ) from None
    return _package(n, "resultant", big, extraneous_factor=canonicalize(factor).poly)


PIPELINES: dict[str, Callable[[int], APoly]] = {
    "explicit": a_poly_explicit,
    "substitution": a_poly_substitution,
    "resultant": a_poly_resultant,
}


def compute(n: int, method: str) -> APoly:
    try:
        return PIPELINES[method](n)
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}") from None


@dataclass
class VerifyReport:
    n: int
    agree: bool
    canonical: LaurentPoly | None
    per_method: dict[str, tuple[LaurentPoly, float]] = field(default_factory=dict)
    errors: dict[str, str] = field(default_factory=dict)
    extraneous_factor: LaurentPoly | None = None


def verify(
    n: int,
    full: bool = False,
    overrides: Mapping[str, Callable[[int], APoly]] | None = None,
) -> VerifyReport:
    """Run every pipeline for ``n`` and compare canonical forms.

    ``overrides`` replaces individual pipelines by name; it exists so the
    disagreement path can be exercised. A pipeline that raises is recorded
    in ``errors`` and counts as a disagreement.
    """
    pipelines = dict(PIPELINES)
    if overrides:
        pipelines.update(overrides)
    per_method: dict[str, tuple[LaurentPoly, float]] = {}
    errors: dict[str, str] = {}
    for name in METHODS:
        start = time.perf_counter()
        try:
            result = pipelines[name](n)
        except Exception as exc:  # noqa: BLE001 - reported, not swallowed
            errors[name] = f"{type(exc).__name__}: {exc}"
            continue
        elapsed = (time.perf_counter() - start) * 1000.0
        per_method[name] = (result.poly, elapsed)

    polys = {p for p, _ in per_method.values()}
    agree = not errors and len(polys) == 1
    canonical = next(iter(polys)) if len(polys) == 1 else None

    extraneous = None
    if full and n != 0:
        try:
            extraneous = a_poly_resultant(n, full=True).extraneous_factor
        except ArithmeticError as exc:
            errors["resultant_full"] = str(exc)
            agree = False
    return VerifyReport(n, agree, canonical, per_method, errors, extraneous)
