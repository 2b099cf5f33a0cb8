import pytest

from conftest import make_series, plain_theta_args
from thetadissect.dissect import (
    DissectionSpec, boundary_monomials, closed_form_parts, dissect_closed,
    dissect_filter, transform_lhs, transform_rhs,
)
from thetadissect.laurent import Monomial, ScaledMonomial
from thetadissect.theta import ThetaArgs, theta_expand


def test_boundary_monomials():
    assert boundary_monomials(2) == (Monomial(3, 1), Monomial(1, 3))
    assert boundary_monomials(3) == (Monomial(6, 3), Monomial(3, 6))
    assert boundary_monomials(4) == (Monomial(10, 6), Monomial(6, 10))


def test_spec_validation():
    with pytest.raises(ValueError):
        DissectionSpec(2, 2)
    with pytest.raises(ValueError):
        DissectionSpec(0, 0)


def test_filter_m2_through_9():
    even = dissect_filter(DissectionSpec(2, 0), 9)
    assert even.render() == "1 + a^3*b + a*b^3"
    odd = dissect_filter(DissectionSpec(2, 1), 9)
    assert odd.render() == "a + b + a^6*b^3 + a^3*b^6"


def test_filter_m1_is_the_full_series():
    assert dissect_filter(DissectionSpec(1, 0), 25) == theta_expand(plain_theta_args(), 25)


def test_closed_form_parts_m2_k1():
    prefix, args = closed_form_parts(DissectionSpec(2, 1))
    assert prefix == Monomial(1, 0)
    assert args.first.mono == Monomial(5, 3)
    assert args.second.mono == Monomial(-1, 1)


def test_closed_form_parts_m4_k2():
    # second argument is B_4 (ab)^(-8) = a^-2 b^2
    prefix, args = closed_form_parts(DissectionSpec(4, 2))
    assert prefix == Monomial(3, 1)
    assert args.first.mono == Monomial(18, 14)
    assert args.second.mono == Monomial(-2, 2)


def test_closed_equals_filter_m2_k0_through_9():
    spec = DissectionSpec(2, 0)
    closed = dissect_closed(spec, 9)
    assert closed.render() == "1 + a^3*b + a*b^3"
    assert closed == dissect_filter(spec, 9)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_oracle_equivalence_small_grid(m):
    for k in range(m):
        spec = DissectionSpec(m, k)
        assert dissect_filter(spec, 30) == dissect_closed(spec, 30)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_residue_classes_sum_to_f(m):
    total = dissect_filter(DissectionSpec(m, 0), 40)
    for k in range(1, m):
        total = total + dissect_filter(DissectionSpec(m, k), 40)
    assert total == theta_expand(plain_theta_args(), 40)


def test_low_bound_keeps_lifted_negative_degree_terms():
    # S_3 mod 4 at bound 2 is exactly the n = -1 term b: the inner theta
    # budget is negative but its negative-degree index must still be found
    spec = DissectionSpec(4, 3)
    expected = make_series({(0, 1): 1}, 2)
    assert dissect_filter(spec, 2) == expected
    assert dissect_closed(spec, 2) == expected


def test_transform_m1_is_f():
    assert transform_lhs(1, 1, 20) == theta_expand(plain_theta_args(), 20)
    assert transform_rhs(1, 1, 20) == transform_lhs(1, 1, 20)


def test_transform_m2_matches_sign_flip():
    rhs = transform_rhs(2, 1, 9)
    assert rhs.render() == "1 - a - b + a^3*b + a*b^3 - a^6*b^3 - a^3*b^6"
    assert transform_lhs(2, 1, 9) == rhs


def test_transform_m3_matches_omega_expansion():
    assert transform_lhs(3, 1, 9).equal_through(transform_rhs(3, 1, 9), 9)


def test_transform_m4_lhs_through_4():
    assert transform_lhs(4, 1, 4).render() == "1 + zeta4*a + zeta4*b + a^3*b + a*b^3"


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_transform_all_exponents(m):
    for e in range(m):
        lhs = transform_lhs(m, e, 30)
        rhs = transform_rhs(m, e, 30)
        assert lhs.equal_through(rhs, 30), (m, e)


def test_scaling_the_inner_theta_reproduces_the_odd_part():
    # a * f(a^5*b^3, a^-1*b) is S_1 of the mod-2 split
    inner = theta_expand(
        ThetaArgs(ScaledMonomial.make(1, 5, 3), ScaledMonomial.make(1, -1, 1)), 8)
    lifted = inner.scale(ScaledMonomial.make(1, 1, 0))
    assert lifted == dissect_filter(DissectionSpec(2, 1), 9)


def test_specialize_of_m4_component_s0():
    s0 = dissect_filter(DissectionSpec(4, 0), 60).specialize_q()
    direct = theta_expand(
        ThetaArgs(ScaledMonomial.make(1, 16, 0), ScaledMonomial.make(1, 16, 0)), 60)
    assert s0 == direct


def test_exponent_integrality_across_grid():
    # closed_form_parts asserts exact division by 2 internally; sweep it
    for m in range(1, 9):
        for k in range(m):
            prefix, args = closed_form_parts(DissectionSpec(m, k))
            assert prefix.total_degree == k * k
            assert args.first.total_degree + args.second.total_degree == 2 * m * m
