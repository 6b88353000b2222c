import pytest

from twist_apoly.poly_core import ONE, ZERO, L, LaurentPoly, M, Z, degree_range
from twist_apoly.rep_engine import (
    U,
    Mat2,
    binomial,
    chi,
    longitude_entry,
    r_poly_closed,
    r_poly_matrix,
    r_poly_recursive,
    rho_a,
    rho_b,
    rho_w,
    rho_w_displayed,
    rho_w_power,
    s_poly,
    s_prime,
)

MINV = M**-1


def test_generators():
    assert rho_a().a11 == M
    assert rho_a() == Mat2(M, ONE, ZERO, MINV)
    assert rho_b() == Mat2(M, ZERO, Z, MINV)
    assert rho_a().det() == ONE
    assert rho_b().det() == ONE


def test_rho_w_matches_hand_computation():
    w = rho_w()
    assert w.a11 == M**2 * Z + (1 - Z) ** 2
    assert w.a22 == 1 + Z * M**-2
    assert w == rho_w_displayed()
    assert w.det() == ONE


def test_chi():
    assert chi() == Z**2 + (M**2 - 2 + M**-2) * Z + 2
    assert chi() - rho_w().trace() == ZERO
    from twist_apoly.poly_core import eval_mod

    assert eval_mod(chi(), 7, {"M": 1, "Z": 1}) == 3


def test_small_powers():
    assert rho_w_power(0) == Mat2.identity()
    assert rho_w_power(1) == rho_w()
    assert rho_w_power(-1) @ rho_w() == Mat2.identity()
    assert rho_w_power(2) == rho_w() @ rho_w()
    assert rho_w_power(-2) @ rho_w_power(2) == Mat2.identity()


@pytest.mark.parametrize("n", range(-6, 7))
def test_power_determinant(n):
    assert rho_w_power(n).det() == ONE


@pytest.mark.parametrize("n", range(-5, 7))
def test_cayley_hamilton(n):
    expected = rho_w_power(n - 1).scale(chi()) - rho_w_power(n - 2)
    assert rho_w_power(n) == expected


@pytest.mark.parametrize("n", range(-4, 5))
def test_power_by_repeated_product(n):
    # independent of the recurrence: multiply rho(w) or its adjugate |n| times
    step = rho_w() if n >= 0 else rho_w().sl2_inverse()
    acc = Mat2.identity()
    for _ in range(abs(n)):
        acc = acc @ step
    assert rho_w_power(n) == acc


def test_r_seeds():
    assert r_poly_matrix(0) == ONE
    assert r_poly_matrix(1) == 1 + Z + (M - MINV) ** 2
    assert r_poly_matrix(-1) == Z**2 + U * Z - Z - U + 1


def test_r_recursive_one_step():
    assert r_poly_recursive(2) == chi() * (1 + Z + U) - 1


def test_r_closed_examples():
    assert r_poly_closed(1) == 1 + Z + U
    assert r_poly_closed(0) == ONE
    assert r_poly_closed(-1) == 1 - Z - U + Z**2 + U * Z


@pytest.mark.parametrize("n", range(-8, 9))
def test_r_three_routes_agree(n):
    closed = r_poly_closed(n)
    assert r_poly_recursive(n) == r_poly_matrix(n) == closed
    assert degree_range(closed, "Z")[0] >= 0


@pytest.mark.parametrize("n", [n for n in range(-8, 9) if n not in (0, 1)])
def test_closed_form_satisfies_recurrence(n):
    if n >= 2:
        assert chi() * r_poly_closed(n - 1) - r_poly_closed(n - 2) == r_poly_closed(n)
    else:
        assert chi() * r_poly_closed(n + 1) - r_poly_closed(n + 2) == r_poly_closed(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_r_degree_in_z(n):
    assert degree_range(r_poly_recursive(n), "Z")[1] == 2 * n - 1
    assert degree_range(r_poly_recursive(-n), "Z")[1] == 2 * n


def test_binomial_convention():
    assert binomial(-1, 0) == 0
    assert binomial(3, 4) == 0
    assert binomial(2, -1) == 0
    assert binomial(5, 2) == 10


def test_s_poly():
    assert s_poly(1) == (M - MINV + Z * MINV) * L + (MINV - M + Z * M)
    assert s_poly(1) == s_prime()
    assert s_poly(0) == ZERO


def _invert_l(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly({(-a, b, c): v for (a, b, c), v in p.items()})


@pytest.mark.parametrize("n", range(-4, 5))
def test_s_poly_bar_symmetry(n):
    from twist_apoly.poly_core import bar_involution

    s = s_poly(n)
    assert s == L * _invert_l(bar_involution(s))


def test_longitude_trivial_power():
    assert longitude_entry(0) == ONE
