import itertools
from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given

from topical.errors import ParseError
from topical.scalar import (
    EPS, TOP, E, Semifield, finite, invert, leq, oplus, otimes, otimes_dot, residual_scalar, scalar, sup, inf,
    to_fraction,
)

from conftest import extended, rationals

KBAR = (EPS, E, TOP)
q = mpq


# cell-by-cell product tables over {EPS, finite, TOP}
@pytest.mark.parametrize("a,b,lower,upper", [
    (EPS, EPS, EPS, EPS),
    (EPS, q(3), EPS, EPS),
    (EPS, TOP, EPS, TOP),
    (q(3), EPS, EPS, EPS),
    (q(2), q(3), q(5), q(5)),
    (q(3), TOP, TOP, TOP),
    (TOP, EPS, EPS, TOP),
    (TOP, q(3), TOP, TOP),
    (TOP, TOP, TOP, TOP),
])
def test_product_tables(a, b, lower, upper):
    assert otimes(a, b) == lower
    assert otimes_dot(a, b) == upper


def test_examples():
    assert oplus(TOP, q(3)) is TOP
    assert oplus(EPS, q(5)) == 5
    assert oplus(q(2), q(3)) == 3
    assert otimes_dot(EPS, q(4)) is EPS
    assert invert(EPS) is TOP and invert(TOP) is EPS and invert(q(3)) == -3
    assert residual_scalar(q(5), q(3)) == 2
    assert residual_scalar(EPS, EPS) is TOP
    assert residual_scalar(q(5), TOP) is EPS
    assert leq(EPS, TOP) and not leq(q(3), q(2))


def test_order_is_total_with_extremes():
    vals = [TOP, q(1, 2), EPS, q(-7), E]
    assert sorted(vals) == [EPS, q(-7), E, q(1, 2), TOP]
    assert sup([]) is EPS and inf([]) is TOP
    assert sup(vals) is TOP and inf(vals) is EPS


def test_conventions_are_not_group_inverses():
    assert otimes(invert(EPS), EPS) is EPS
    assert otimes_dot(invert(TOP), TOP) is TOP


def test_floats_rejected():
    with pytest.raises(TypeError):
        finite(0.5)
    assert scalar(Fraction(1, 3)) == q(1, 3)
    assert to_fraction(q(-2, 6)) == Fraction(-1, 3)


def test_boolean_rejects_other_finite_values():
    assert Semifield.BOOLEAN.check(E) == E
    with pytest.raises(ParseError):
        Semifield.BOOLEAN.check(q(1))
    assert Semifield.QMAX.check(q(1)) == 1


@given(extended)
def test_invert_involution(a):
    assert invert(invert(a)) == a


@given(extended, extended)
def test_duality(a, b):
    assert otimes_dot(a, b) == invert(otimes(invert(a), invert(b)))
    assert otimes(a, b) == invert(otimes_dot(invert(a), invert(b)))


@given(extended, extended)
def test_commutative_with_unit(a, b):
    assert otimes(a, b) == otimes(b, a)
    assert otimes_dot(a, b) == otimes_dot(b, a)
    assert otimes(a, E) == a == otimes_dot(a, E)
    assert (a <= b) == (oplus(a, b) == b)


@given(extended, extended, extended)
def test_associative(a, b, c):
    assert otimes(otimes(a, b), c) == otimes(a, otimes(b, c))
    assert otimes_dot(otimes_dot(a, b), c) == otimes_dot(a, otimes_dot(b, c))


@given(extended, extended, extended)
def test_inequality_equivalences(lam, mu, beta):
    assert (otimes(lam, mu) <= beta) == (otimes(invert(beta), mu) <= invert(lam))
    assert (otimes_dot(lam, mu) >= beta) == (otimes_dot(invert(beta), mu) >= invert(lam))


@given(extended, extended, extended)
def test_galois(lam, mu, nu):
    assert (otimes(mu, nu) <= lam) == (nu <= otimes_dot(lam, invert(mu)))


def test_exhaustive_extended_triples():
    for lam, mu, beta in itertools.product(KBAR, repeat=3):
        assert (otimes(lam, mu) <= beta) == (otimes(invert(beta), mu) <= invert(lam))
        assert (otimes_dot(lam, mu) >= beta) == (otimes_dot(invert(beta), mu) >= invert(lam))
        assert (otimes(mu, beta) <= lam) == (beta <= otimes_dot(lam, invert(mu)))


@given(rationals)
def test_non_law_at_eps(mu):
    # lam = beta = EPS: lam mu <= beta holds but mu <= lam^-1 beta fails
    assert otimes(EPS, mu) <= EPS
    assert not mu <= otimes(invert(EPS), EPS)


@given(rationals)
def test_non_law_at_top(mu):
    # lam = beta = TOP: lam (.) mu >= beta holds but mu >= lam^-1 (.) beta fails
    assert otimes_dot(TOP, mu) >= TOP
    assert not mu >= otimes_dot(invert(TOP), TOP)


@given(rationals, extended)
def test_residual_is_largest_finite_solution(mu, lam):
    # for finite mu the residual is attained or is an extreme
    r = residual_scalar(lam, mu)
    if r is not TOP and r is not EPS:
        assert otimes(mu, r) <= lam
        assert not otimes(mu, r + 1) <= lam
