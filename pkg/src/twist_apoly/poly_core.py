"""Sparse Laurent polynomials in L, M, Z with arbitrary-precision integer coefficients.

A polynomial is an immutable map from exponent triples ``(e_L, e_M, e_Z)`` to
nonzero ``int`` coefficients. Triples compare lexicographically, so the
ordinary tuple order is the monomial order lex(L > M > Z).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, NamedTuple

VARIABLES = ("L", "M", "Z")


class ExpVec(NamedTuple):
    e_L: int = 0
    e_M: int = 0
    e_Z: int = 0


def var_index(var: str | int) -> int:
    if isinstance(var, int):
        if var not in (0, 1, 2):
            raise ValueError(f"variable index out of range: {var}")
        return var
    try:
        return VARIABLES.index(var)
    except ValueError:
        raise ValueError(f"unknown variable {var!r}; expected one of {VARIABLES}") from None


class LaurentPoly:
    """An element of Z[L^{+-1}, M^{+-1}, Z^{+-1}].

    >>> M = LaurentPoly.var("M")
    >>> (M - M**-1) ** 2
    LaurentPoly('M^2 - 2 + M^-2')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    clean[ExpVec(*exp)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> LaurentPoly:
        # terms must already be zero-free with ExpVec keys
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw({ExpVec(0, 0, 0): int(c)} if c else {})

    @classmethod
    def var(cls, name: str | int, power: int = 1) -> LaurentPoly:
        exp = [0, 0, 0]
        exp[var_index(name)] = power
        return cls._raw({ExpVec(*exp): 1})

    @classmethod
    def monomial(cls, coeff: int, e_L: int = 0, e_M: int = 0, e_Z: int = 0) -> LaurentPoly:
        return cls._raw({ExpVec(e_L, e_M, e_Z): int(coeff)} if coeff else {})

    @property
    def terms(self) -> dict[ExpVec, int]:
        """A copy of the term map."""
        return dict(self._terms)

    def items(self) -> Iterable[tuple[ExpVec, int]]:
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for +-L^a M^b Z^c, the invertible elements of the ring."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> LaurentPoly:
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        return add(self, -_coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return add(_coerce(other), -self)

    def __mul__(self, other) -> LaurentPoly:
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            return pow_poly(unit_inverse(self), -k)
        return pow_poly(self, k)

    # -- inspection --------------------------------------------------------

    def leading_term(self) -> tuple[ExpVec, int]:
        """Largest term under lex(L > M > Z)."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms)
        return e, self._terms[e]

    def coefficient(self, e_L: int = 0, e_M: int = 0, e_Z: int = 0) -> int:
        return self._terms.get(ExpVec(e_L, e_M, e_Z), 0)

    def variables(self) -> set[str]:
        used = set()
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e:
                    used.add(VARIABLES[i])
        return used

    def coefficients_in(self, var: str | int) -> dict[int, LaurentPoly]:
        """Split as sum_k c_k * var^k; returns {k: c_k} with var-free c_k."""
        idx = var_index(var)
        out: dict[int, dict] = {}
        for exp, c in self._terms.items():
            k = exp[idx]
            e = list(exp)
            e[idx] = 0
            out.setdefault(k, {})[ExpVec(*e)] = c
        return {k: LaurentPoly._raw(t) for k, t in out.items()}

    def shift(self, e_L: int = 0, e_M: int = 0, e_Z: int = 0) -> LaurentPoly:
        """Multiply by the monomial L^e_L M^e_M Z^e_Z."""
        return LaurentPoly._raw(
            {ExpVec(a + e_L, b + e_M, c + e_Z): v for (a, b, c), v in self._terms.items()}
        )

    def sorted_terms(self) -> list[tuple[ExpVec, int]]:
        """Terms in descending lex(L > M > Z) order."""
        return sorted(self._terms.items(), reverse=True)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"LaurentPoly('{to_text(self, sep=' ')}')"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a LaurentPoly")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
L = LaurentPoly.var("L")
M = LaurentPoly.var("M")
Z = LaurentPoly.var("Z")


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if len(p._terms) < len(q._terms):
        p, q = q, p
    out = dict(p._terms)
    for e, c in q._terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return LaurentPoly._raw(out)


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if not p._terms or not q._terms:
        return ZERO
    if len(p._terms) < len(q._terms):
        p, q = q, p
    out: dict[tuple, int] = {}
    get = out.get
    qitems = list(q._terms.items())
    for (a1, b1, c1), v1 in p._terms.items():
        for (a2, b2, c2), v2 in qitems:
            e = (a1 + a2, b1 + b2, c1 + c2)
            out[e] = get(e, 0) + v1 * v2
    return LaurentPoly._raw({ExpVec(*e): c for e, c in out.items() if c})


def pow_poly(p: LaurentPoly, k: int) -> LaurentPoly:
    """p**k for k >= 0 by repeated squaring; pow_poly(0, 0) is 1 (empty product)."""
    if k < 0:
        raise ValueError("exponent must be nonnegative; use unit_inverse for units")
    result = ONE
    base = p
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def unit_inverse(p: LaurentPoly) -> LaurentPoly:
    if not p.is_unit():
        raise ValueError(f"{p} is not a unit of the Laurent ring")
    ((a, b, c), v) = next(iter(p._terms.items()))
    return LaurentPoly.monomial(v, -a, -b, -c)


def signed_power(p: LaurentPoly, k: int) -> LaurentPoly:
    return pow_poly(p, k) if k >= 0 else pow_poly(unit_inverse(p), -k)


def bar_involution(p: LaurentPoly) -> LaurentPoly:
    """Substitute M -> M^-1."""
    return LaurentPoly._raw({ExpVec(a, -b, c): v for (a, b, c), v in p._terms.items()})


def degree_range(p: LaurentPoly, var: str | int) -> tuple[int, int]:
    if p.is_zero():
        raise ValueError("degree_range of the zero polynomial is undefined")
    idx = var_index(var)
    exps = [e[idx] for e in p._terms]
    return min(exps), max(exps)


def substitute_monomial(
    p: LaurentPoly, var: str | int, num: LaurentPoly, den: LaurentPoly
) -> tuple[LaurentPoly, int]:
    """Substitute ``var := num/den`` and clear denominators without fractions.

    With var-exponents of ``p`` in ``[a, b]`` the result is

        q = den^hi * num^(-lo) * p(var := num/den)

    where ``hi = max(b, 0)`` and ``lo = min(a, 0)``. A factor that is a unit of
    the Laurent ring (for instance ``den = 1`` or ``num = M``) is inverted
    exactly instead of cleared, so its clearing exponent is 0. Returns
    ``(q, hi)``, the power of ``den`` that was multiplied in.
    """
    if den.is_zero():
        raise ZeroDivisionError("substitution denominator is zero")
    if p.is_zero():
        return ZERO, 0
    idx = var_index(var)
    a, b = degree_range(p, idx)
    lo = 0 if num.is_unit() else min(a, 0)
    hi = 0 if den.is_unit() else max(b, 0)
    if lo < 0 and num.is_zero():
        raise ZeroDivisionError("negative powers of a zero substitution value")

    num_pows: dict[int, LaurentPoly] = {}
    den_pows: dict[int, LaurentPoly] = {}

    def cached(cache, base, k):
        if k not in cache:
            cache[k] = signed_power(base, k)
        return cache[k]

    result = ZERO
    for k, coeff in p.coefficients_in(idx).items():
        term = mul(coeff, cached(num_pows, num, k - lo))
        term = mul(term, cached(den_pows, den, hi - k))
        result = add(result, term)
    return result, hi


def content(p: LaurentPoly) -> int:
    g = 0
    for c in p._terms.values():
        g = gcd(g, c)
    return g


@dataclass(frozen=True)
class CanonicalForm:
    """``original == sign * content * x^unit_shift * poly``."""

    poly: LaurentPoly
    unit_shift: ExpVec
    sign: int
    content: int

    def reconstruct(self) -> LaurentPoly:
        return (self.sign * self.content * self.poly).shift(*self.unit_shift)


def canonicalize(p: LaurentPoly) -> CanonicalForm:
    """Unique representative of ``p`` modulo units and integer content.

    The result is a true polynomial with minimum exponent 0 in each variable,
    coprime coefficients and a positive lex-leading coefficient.
    """
    if p.is_zero():
        raise ValueError("cannot canonicalize the zero polynomial")
    exps = list(p._terms)
    shift = ExpVec(*(min(e[i] for e in exps) for i in range(3)))
    g = content(p)
    lead = p._terms[max(exps)]
    sign = 1 if lead > 0 else -1
    div = sign * g
    out = {
        ExpVec(a - shift[0], b - shift[1], c - shift[2]): v // div
        for (a, b, c), v in p._terms.items()
    }
    return CanonicalForm(LaurentPoly._raw(out), shift, sign, g)


def equal_up_to_units(p: LaurentPoly, q: LaurentPoly) -> bool:
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return canonicalize(p).poly == canonicalize(q).poly


def eval_mod(p: LaurentPoly, prime: int, assign: Mapping[str, int]) -> int:
    """Evaluate ``p`` in the field with ``prime`` elements.

    ``assign`` maps variable names to residues. Only variables occurring in
    ``p`` need values; negative exponents use the modular inverse.
    """
    vals = []
    for i, name in enumerate(VARIABLES):
        if name in assign:
            vals.append(assign[name] % prime)
        else:
            vals.append(None)
    acc = 0
    for exp, c in p._terms.items():
        t = c % prime
        for i, e in enumerate(exp):
            if e == 0:
                continue
            x = vals[i]
            if x is None:
                raise KeyError(f"no value assigned to {VARIABLES[i]}")
            if e < 0:
                if x == 0:
                    raise ZeroDivisionError(f"{VARIABLES[i]} = 0 has no inverse mod {prime}")
                x = pow(x, -1, prime)
                e = -e
            t = t * pow(x, e, prime) % prime
        acc += t
    return acc % prime


def _monomial_text(exp, var_sep: str, exp_fmt: str) -> str:
    parts = []
    for name, e in zip(VARIABLES, exp):
        if e == 0:
            continue
        parts.append(name if e == 1 else name + exp_fmt.format(e))
    return var_sep.join(parts)


def _render(p: LaurentPoly, var_sep: str, exp_fmt: str, coeff_sep: str) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for i, (exp, c) in enumerate(p.sorted_terms()):
        mono = _monomial_text(exp, var_sep, exp_fmt)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{coeff_sep}{mono}"
        if i == 0:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append((" + " if c > 0 else " - ") + body)
    return "".join(pieces)


def to_text(p: LaurentPoly, sep: str = "*") -> str:
    """Plain-text rendering, terms in descending lex order: ``L + M^6``."""
    return _render(p, sep, "^{}", sep)


def to_latex(p: LaurentPoly) -> str:
    """LaTeX rendering with braced exponents: ``L^{2} M^{4} - 2 L M^{4}``."""
    return _render(p, " ", "^{{{}}}", " ")
