"""Resultants over Z[L^{+-1}, M^{+-1}] via Sylvester matrices and Bareiss elimination."""

from __future__ import annotations

from dataclasses import dataclass

from .poly_core import (
    ONE,
    ZERO,
    ExpVec,
    LaurentPoly,
    degree_range,
    mul,
    var_index,
)


class Indivisible(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


@dataclass(frozen=True)
class SylvesterMatrix:
    size: int
    entries: tuple[tuple[LaurentPoly, ...], ...]
    # powers of var multiplied into p and q to clear negative exponents
    shifts: tuple[int, int] = (0, 0)


def _to_polynomial(p: LaurentPoly) -> tuple[LaurentPoly, ExpVec]:
    """Shift ``p`` so every variable has minimum exponent 0."""
    exps = [e for e, _ in p.items()]
    lo = ExpVec(*(min(e[i] for e in exps) for i in range(3)))
    return p.shift(-lo[0], -lo[1], -lo[2]), lo


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``r`` with ``p == q * r`` in the Laurent ring, else raise Indivisible.

    Monomial divisors are units of the ring up to content, so they only fail
    on integer content. Otherwise both operands are shifted to true
    polynomials and divided by leading terms in lex(L > M > Z) order; since
    the shifted divisor has no monomial factor this decides Laurent
    divisibility exactly.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    P, sp = _to_polynomial(p)
    Q, sq = _to_polynomial(q)

    qterms = Q.sorted_terms()
    (lq, cq), rest = qterms[0], qterms[1:]
    rem = dict(P.items())
    quot: dict[ExpVec, int] = {}
    while rem:
        lr = max(rem)
        cr = rem[lr]
        e = (lr[0] - lq[0], lr[1] - lq[1], lr[2] - lq[2])
        if min(e) < 0 or cr % cq:
            raise Indivisible(f"{p} is not divisible by {q}")
        c = cr // cq
        quot[ExpVec(*e)] = c
        del rem[lr]
        for (a, b, d), v in rest:
            key = ExpVec(a + e[0], b + e[1], d + e[2])
            s = rem.get(key, 0) - c * v
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return LaurentPoly(quot).shift(sp[0] - sq[0], sp[1] - sq[1], sp[2] - sq[2])


def divides(q: LaurentPoly, p: LaurentPoly) -> bool:
    try:
        exact_divide(p, q)
    except Indivisible:
        return False
    return True


def _coeff_list(p: LaurentPoly, idx: int) -> list[LaurentPoly]:
    """Coefficients of var^d, ..., var^0 (highest first) for p without negative var-powers."""
    parts = p.coefficients_in(idx)
    d = max(parts)
    return [parts.get(k, ZERO) for k in range(d, -1, -1)]


def sylvester(p: LaurentPoly, q: LaurentPoly, var: str | int = "Z") -> SylvesterMatrix:
    """Sylvester matrix of ``p`` and ``q`` as polynomials in ``var``.

    Negative powers of ``var`` are first cleared by multiplying through by a
    power of ``var``; the powers used are recorded in ``shifts``.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("sylvester matrix of a zero polynomial is undefined")
    idx = var_index(var)
    shifts = []
    cleared = []
    for f in (p, q):
        k = max(0, -degree_range(f, idx)[0])
        sh = [0, 0, 0]
        sh[idx] = k
        cleared.append(f.shift(*sh))
        shifts.append(k)
    pc, qc = (_coeff_list(f, idx) for f in cleared)
    m, n = len(pc) - 1, len(qc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append(tuple([ZERO] * i + pc + [ZERO] * (size - m - 1 - i)))
    for i in range(m):
        rows.append(tuple([ZERO] * i + qc + [ZERO] * (size - n - 1 - i)))
    return SylvesterMatrix(size, tuple(rows), (shifts[0], shifts[1]))


def bareiss_det(rows) -> LaurentPoly:
    """Determinant by fraction-free Gaussian elimination.

    Each step divides exactly by the previous pivot. Zero pivots are handled
    by a row interchange (flipping the sign); a column with no nonzero
    candidate makes the determinant zero.
    """
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        # smallest nonzero pivot keeps the intermediate products cheap
        candidates = [i for i in range(k, n) if not a[i][k].is_zero()]
        if not candidates:
            return ZERO
        piv = min(candidates, key=lambda i: len(a[i][k]))
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                num = mul(akk, row_i[j])
                if not aik.is_zero() and not row_k[j].is_zero():
                    num = num - mul(aik, row_k[j])
                row_i[j] = num if prev == ONE else exact_divide(num, prev)
            row_i[k] = ZERO
        prev = akk
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def resultant(p: LaurentPoly, q: LaurentPoly, var: str | int = "Z") -> LaurentPoly:
    """Res_var(p, q) as the determinant of the Sylvester matrix."""
    return bareiss_det(sylvester(p, q, var).entries)
