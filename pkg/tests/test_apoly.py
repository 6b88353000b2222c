import pytest

from twist_apoly.apoly import (
    METHODS,
    APoly,
    a_poly_explicit,
    a_poly_resultant,
    a_poly_substitution,
    explicit_raw,
    verify,
)
from twist_apoly.elimination import divides, exact_divide
from twist_apoly.poly_core import ONE, L, M, canonicalize, degree_range, eval_mod
from twist_apoly.rep_engine import longitude_entry, r_poly_matrix

TREFOIL = L + M**6
NONZERO_N = [n for n in range(-6, 7) if n != 0]


def test_trefoil_hand_expansion():
    # i = 0: M^2 (L + M^2); i = 1: M^2 (M^2 - 1)(M^2 - L M^-2)
    i0 = M**2 * (L + M**2)
    i1 = M**2 * (M**2 - 1) * (M**2 - L * M**-2)
    assert i0 + i1 == L + M**6
    assert explicit_raw(1) == L + M**6


@pytest.mark.parametrize("fn", [a_poly_explicit, a_poly_substitution, a_poly_resultant])
def test_trefoil_each_method(fn):
    assert fn(1).poly == TREFOIL


@pytest.mark.parametrize("fn", [a_poly_explicit, a_poly_substitution, a_poly_resultant])
def test_unknot(fn):
    assert fn(0).poly == ONE


def test_figure_eight(figure_eight):
    for fn in (a_poly_explicit, a_poly_substitution, a_poly_resultant):
        assert fn(-1).poly == canonicalize(figure_eight).poly


def test_substitution_matches_explicit_minus_two():
    assert a_poly_substitution(-2).poly == a_poly_explicit(-2).poly


@pytest.mark.parametrize("n", range(-6, 7))
def test_methods_agree(n):
    report = verify(n)
    assert report.agree, report.errors
    assert set(report.per_method) == set(METHODS)


@pytest.mark.parametrize("n", range(-6, 7))
def test_golden_regression(n, golden_apoly):
    assert a_poly_explicit(n).poly == golden_apoly[n]


@pytest.mark.parametrize("n", range(-6, 7))
def test_no_z_and_canonical(n):
    for fn in (a_poly_explicit, a_poly_substitution, a_poly_resultant):
        a = fn(n)
        assert all(e.e_Z == 0 for e, _ in a.poly.items())
        assert canonicalize(a.poly).poly == a.poly
        assert canonicalize(a.raw()).poly == a.poly


@pytest.mark.parametrize("n", range(-6, 7))
def test_explicit_prefactor_is_exact(n):
    # after distributing the prefactor no negative M powers remain and no unit
    # beyond sign and content needs stripping
    raw = explicit_raw(n)
    assert degree_range(raw, "M")[0] >= 0
    assert degree_range(raw, "L")[0] == 0


def test_l_degree_growth():
    deg = {n: degree_range(a_poly_explicit(n).poly, "L")[1] for n in NONZERO_N}
    for sign in (1, -1):
        seq = [deg[sign * k] for k in range(1, 7)]
        assert seq == sorted(seq)
    for k in range(1, 6):
        assert max(deg[k], deg[-k]) <= min(deg[k + 1], deg[-k - 1])
    # regression values from the verified computation
    assert deg == {n: (2 * n - 1 if n > 0 else -2 * n) for n in NONZERO_N}


@pytest.mark.parametrize("n", [-3, -2, -1, 1, 2, 3])
def test_full_resultant_divisible(n):
    full = a_poly_resultant(n, full=True)
    small = a_poly_resultant(n).poly
    assert divides(small, full.raw())
    assert exact_divide(full.raw(), small) is not None
    assert full.extraneous_factor == ONE


def test_full_resultant_rejects_unknot():
    with pytest.raises(ValueError):
        a_poly_resultant(0, full=True)


def test_verify_reports_disagreement():
    def wrong(n):
        good = a_poly_explicit(n)
        return APoly(n, "explicit", good.poly + M, good.unit_shift, good.sign, good.content)

    report = verify(2, overrides={"explicit": wrong})
    assert not report.agree
    assert report.canonical is None


def test_verify_reports_exceptions():
    def broken(n):
        raise RuntimeError("boom")

    report = verify(1, overrides={"resultant": broken})
    assert not report.agree
    assert "resultant" in report.errors


def test_verify_full_flag():
    report = verify(2, full=True)
    assert report.agree
    assert report.extraneous_factor == ONE


def _roots_in_z(r, prime, m):
    parts = r.coefficients_in("Z")
    coeffs = {k: eval_mod(c, prime, {"M": m}) for k, c in parts.items()}
    for z in range(prime):
        if sum(c * pow(z, k, prime) for k, c in coeffs.items()) % prime == 0:
            yield z


def finite_field_counterexamples(n, prime):
    A = a_poly_explicit(n).poly
    r = r_poly_matrix(n)
    lon = longitude_entry(n)
    solutions = bad = 0
    for m in range(1, prime):
        minv = pow(m, -1, prime)
        for z in _roots_in_z(r, prime, m):
            lval = eval_mod(lon, prime, {"M": m, "Z": z})
            if (m + lval * minv) % prime == 0:
                continue
            solutions += 1
            if eval_mod(A, prime, {"L": lval, "M": m}):
                bad += 1
    return solutions, bad


@pytest.mark.parametrize("n", [-1, 1])
def test_finite_field_soundness_small(n):
    solutions, bad = finite_field_counterexamples(n, 101)
    assert solutions > 0
    assert bad == 0


def test_apoly_concurrent_determinism():
    from concurrent.futures import ThreadPoolExecutor

    ns = list(range(-4, 5)) * 3
    with ThreadPoolExecutor(max_workers=6) as pool:
        results = list(pool.map(lambda n: (n, a_poly_resultant(n).poly), ns))
    for n, p in results:
        assert p == a_poly_explicit(n).poly


@pytest.mark.parametrize("n", [-3, -2, -1])
def test_negative_branch_needs_alternating_sign(n):
    # the same sum without (-1)^i is not A_n up to units
    from twist_apoly.poly_core import ZERO
    from twist_apoly.rep_engine import binomial

    q = M**2 - L * M**-2
    unsigned = ZERO
    for i in range(-2 * n + 1):
        unsigned += (
            binomial(-n + i // 2, i) * (M**2 - 1) ** i * (L + M**2) ** (-2 * n - i)
            * (1 - L) ** (i // 2) * q ** ((i + 1) // 2)
        )
    assert canonicalize(unsigned).poly != a_poly_substitution(n).poly
