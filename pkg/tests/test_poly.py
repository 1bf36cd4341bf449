from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chebknots.errors import NonzeroRemainder
from chebknots.poly import (
    NEG_INF,
    Poly,
    T,
    U,
    cheb_t,
    cheb_u,
    compose,
    derivative,
    divmod_poly,
    eval_rational,
    exact_div,
    monic_cheb,
)

import oracles

t = Poly.t()
ONE_MINUS_T2 = Poly([1, 0, -1])


def from_dict(d):
    return Poly([d.get(e, 0) for e in range(max(d) + 1)])


# -- construction and basic arithmetic ---------------------------------------


def test_zero_polynomial_degree_sentinel():
    z = Poly([0, 0, 0])
    assert z.is_zero()
    assert z.degree == NEG_INF
    assert z.coeffs == ()


def test_trailing_zeros_are_trimmed():
    p = Poly([1, 2, 0, 0])
    assert p.degree == 1
    assert p.leading_coefficient() == 2


def test_rational_coefficients_round_trip():
    p = Poly([Fraction(1, 3), Fraction(-5, 6), 2])
    assert p.coeffs == (Fraction(1, 3), Fraction(-5, 6), Fraction(2))
    assert Poly.from_json(p.to_json()) == p


def test_known_chebyshev_values():
    assert cheb_t(0) == Poly([1])
    assert cheb_t(3) == from_dict(oracles.T3)
    assert cheb_t(11) == from_dict(oracles.T11)
    assert cheb_u(-1).is_zero()
    assert cheb_u(1) == Poly([0, 2])
    assert cheb_u(2) == Poly([-1, 0, 4])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_monic_chebyshev(n):
    assert monic_cheb(n) == from_dict(oracles.MONIC[n])


def test_products_and_sums():
    assert t * t == Poly([0, 0, 1])
    assert T(2) * T(3) * 2 == T(5) + T(1)
    p = Poly([3, -1, 7])
    assert p + Poly([]) == p
    assert p - p == Poly([])


def test_compose_examples():
    assert compose(T(3), T(4)) == T(12)
    p = Poly([5, Fraction(1, 2), -3, 1])
    assert compose(p, t) == p
    assert compose(T(2), T(2)) == Poly([1, 0, -8, 0, 8])


def test_derivative_examples():
    assert derivative(T(5)) == U(4) * 5
    assert derivative(Poly([7])).is_zero()
    assert derivative(Poly([0, -3, 0, 4])) == Poly([-3, 0, 12])


def test_exact_div_examples():
    q = exact_div(U(14), U(2) * U(4))
    assert q.degree == 8
    p = Poly([2, 0, 1])
    assert exact_div(p, Poly([1])) == p
    assert exact_div(Poly([-1, 0, 1]), Poly([1, 1])) == Poly([-1, 1])


def test_exact_div_rejects_remainder():
    with pytest.raises(NonzeroRemainder):
        exact_div(Poly([1, 0, 1]), Poly([1, 1]))


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(Poly([1]), Poly([]))


def test_eval_rational_examples():
    assert eval_rational(T(7), 1) == 1
    assert eval_rational(U(6), 1) == 7
    assert eval_rational(T(2), 0) == -1
    assert eval_rational(T(3), Fraction(1, 2)) == -1


def test_large_composition_uses_fast_product():
    # T_225 o T_15 exercises the Kronecker path
    assert compose(T(225), T(15)) == T(3375)


# -- identity suite -------------------------------------------------------------

PAIRS = [(m, n) for m in range(31) for n in range(m + 1)]


def test_sum_and_difference_identities():
    for m, n in PAIRS:
        cross = ONE_MINUS_T2 * U(m - 1) * U(n - 1)
        prod = T(m) * T(n)
        assert T(m + n) == prod - cross, (m, n)
        assert T(m - n) == prod + cross, (m, n)
        assert prod * 2 == T(m + n) + T(m - n), (m, n)


def test_second_kind_identities():
    for m, n in PAIRS:
        assert U(m + n) == U(m) * T(n) + T(m + 1) * U(n - 1), (m, n)
        assert U(m - n) == U(m) * T(n) - T(m + 1) * U(n - 1), (m, n)
        assert U(m) * T(n) * 2 == U(m + n) + U(m - n), (m, n)


def test_composition_semigroup():
    for m in range(1, 13):
        for n in range(1, 13):
            tmn = compose(T(m), T(n))
            assert tmn == T(m * n)
            assert compose(T(n), T(m)) == tmn
            assert U(m * n - 1) == compose(U(n - 1), T(m)) * U(m - 1)
            assert U(m * n - 1) == compose(U(m - 1), T(n)) * U(n - 1)


def test_derivative_identity():
    for n in range(41):
        assert derivative(T(n)) == U(n - 1) * n


def test_degree_parity_and_leading_coefficient():
    for n in range(1, 41):
        assert T(n).degree == n
        assert T(n).leading_coefficient() == 2 ** (n - 1)
        assert T(n).reflect() == T(n) * (-1) ** n


# -- properties -------------------------------------------------------------------

coef = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(coef, min_size=0, max_size=21).map(Poly)
nonzero = polys.filter(lambda p: not p.is_zero())


@given(polys, nonzero)
@settings(max_examples=60, deadline=None)
def test_exact_div_inverts_mul(p, q):
    assert exact_div(p * q, q) == p


@given(polys, nonzero)
@settings(max_examples=60, deadline=None)
def test_division_identity(p, q):
    quo, rem = divmod_poly(p, q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


@given(polys, polys, st.fractions(min_value=-3, max_value=3, max_denominator=7))
@settings(max_examples=60, deadline=None)
def test_evaluation_is_a_ring_map(p, q, x):
    assert eval_rational(p * q, x) == eval_rational(p, x) * eval_rational(q, x)
    assert eval_rational(p + q, x) == eval_rational(p, x) + eval_rational(q, x)


@given(st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=120),
       st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=120))
@settings(max_examples=40, deadline=None)
def test_fast_and_schoolbook_products_agree(a, b):
    from chebknots import poly as P

    assert P._conv_kronecker(a, b) == P._conv_school(a, b)


@given(polys, polys, st.fractions(min_value=-2, max_value=2, max_denominator=5))
@settings(max_examples=40, deadline=None)
def test_compose_matches_evaluation(p, q, x):
    assert eval_rational(compose(p, q), x) == eval_rational(p, eval_rational(q, x))


@given(polys)
@settings(max_examples=40, deadline=None)
def test_json_round_trip(p):
    assert Poly.from_json(p.to_json()) == p
