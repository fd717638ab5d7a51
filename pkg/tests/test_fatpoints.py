"""Interpolation matrices, vanishing dimensions, and kernel polynomials."""

import random
from fractions import Fraction

import pytest

from nagata.configs import generic_points, make_config, two_point_example
from nagata.exactla import PrimeField
from nagata.fatpoints import (
    DimensionSearch,
    InterpolationProblem,
    condition_matrix,
    condition_row,
    homogeneous_vanishing_dimension,
    kernel_polynomials,
    monomial_count,
    monomials,
    poly_mul,
    proportional,
    taylor_shift,
    uniform_orders,
    vanishing_dimension,
    vanishing_order,
)

F = PrimeField()


def test_monomials_order_and_counts():
    assert monomials(2, 1) == [(0, 0), (1, 0), (0, 1)]
    assert monomials(2, 2) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert len(monomials(2, 3)) == 10
    assert len(monomials(3, 2)) == 10
    assert monomial_count(2, 3) == 10
    assert monomial_count(3, 2) == 10


def test_condition_row_evaluation_at_origin():
    basis = monomials(2, 2)
    row = condition_row((0, 0), (0, 0), basis)
    assert row == [Fraction(1)] + [Fraction(0)] * 5


def test_condition_row_first_derivative():
    basis = monomials(2, 1)
    row = condition_row((1, 0), (1, 0), basis)
    assert row == [Fraction(0), Fraction(1), Fraction(0)]


def test_condition_row_half_point():
    basis = monomials(2, 2)
    row = condition_row((Fraction(1, 2), 0), (0, 0), basis)
    assert row == [Fraction(1), Fraction(1, 2), Fraction(0), Fraction(1, 4),
                   Fraction(0), Fraction(0)]


def test_vanishing_dimension_one_point_order_two():
    cfg = make_config([[0, 0]])
    assert vanishing_dimension(InterpolationProblem.uniform(cfg, 2, 1)) == 0


@pytest.mark.parametrize("fld", [None, F])
def test_vanishing_dimension_double_conic(fld):
    cfg = generic_points(2, 5, seed=3)
    assert vanishing_dimension(InterpolationProblem.uniform(cfg, 2, 4, fld)) == 1


@pytest.mark.parametrize("fld", [None, F])
def test_vanishing_dimension_nine_points_cubic(fld):
    cfg = generic_points(2, 9, seed=7)
    assert vanishing_dimension(InterpolationProblem.uniform(cfg, 1, 3, fld)) == 1


def test_condition_counts_match_formula():
    cfg = generic_points(2, 3, seed=1)
    pr = InterpolationProblem(cfg, 4, (2, 3, 1))
    mat = condition_matrix(pr)
    assert mat.rows == pr.n_conditions == 3 + 6 + 1
    assert mat.cols == pr.n_columns == 15


def test_kernel_polynomials_single_point_linear():
    cfg = make_config([[0, 0]])
    polys = kernel_polynomials(InterpolationProblem.uniform(cfg, 1, 1))
    assert len(polys) == 2
    assert {p.coefficients for p in polys} == {
        (((1, 0), Fraction(1)),),
        (((0, 1), Fraction(1)),),
    }
    assert all(p.achieved_orders == (1,) for p in polys)


def test_kernel_polynomials_two_point_line():
    polys = kernel_polynomials(
        InterpolationProblem.uniform(two_point_example(), 1, 1)
    )
    assert len(polys) == 1
    assert polys[0].as_dict() == {(0, 1): Fraction(1)}  # the line through both
    assert polys[0].achieved_orders == (1, 1)
    assert polys[0].degree == 1


def test_kernel_polynomial_vanishes_exactly_at_points():
    cfg = generic_points(2, 4, seed=2)
    for p in kernel_polynomials(InterpolationProblem.uniform(cfg, 1, 2)):
        for pt in cfg.points:
            assert p.evaluate_exact(pt) == 0


@pytest.mark.parametrize("fld", [None, F])
def test_double_conic_factors_as_square(fld):
    cfg = generic_points(2, 5, seed=3)
    (quartic,) = kernel_polynomials(InterpolationProblem.uniform(cfg, 2, 4, fld))
    (conic,) = kernel_polynomials(InterpolationProblem.uniform(cfg, 1, 2, fld))
    assert quartic.achieved_orders == (2, 2, 2, 2, 2)
    square = poly_mul(conic.as_dict(), conic.as_dict(), fld)
    assert proportional(quartic.as_dict(), square, fld)


def test_empty_kernel_raises():
    cfg = make_config([[0, 0]])
    with pytest.raises(ValueError, match="empty"):
        kernel_polynomials(InterpolationProblem.uniform(cfg, 1, 0))


def test_taylor_shift_and_vanishing_order():
    # P = z1^2 - z2 has order 1 at (1, 1); shifted constant term vanishes
    coeffs = {(2, 0): Fraction(1), (0, 1): Fraction(-1)}
    shifted = taylor_shift(coeffs, (1, 1))
    assert shifted.get((0, 0), 0) == 0
    assert vanishing_order(coeffs, (1, 1)) == 1
    assert vanishing_order(coeffs, (0, 0)) == 1  # -z2 term
    assert vanishing_order({(2, 0): Fraction(1)}, (0, 0)) == 2
    f7 = PrimeField(7)
    assert vanishing_order({(2, 0): 1}, (0, 0), f7) == 2


def test_dimension_search_monotonicity_in_degree_and_orders():
    rng = random.Random(11)
    for _ in range(6):
        n = rng.choice([2, 3])
        r = rng.randint(1, 4)
        cfg = generic_points(n, r, seed=rng.randint(0, 999))
        for l in (1, 2):
            dims = []
            search = DimensionSearch(cfg, uniform_orders(cfg, l), F)
            for d in range(l, l + 4):
                dims.append(search.dimension_at(d))
            assert dims == sorted(dims)  # non-decreasing in d
            # raising the order can only cut the space
            hi = InterpolationProblem.uniform(cfg, l + 1, l + 3, F)
            lo = InterpolationProblem.uniform(cfg, l, l + 3, F)
            assert vanishing_dimension(hi) <= vanishing_dimension(lo)


def test_dimension_lower_bound_virtual():
    cfg = generic_points(2, 6, seed=9)
    pr = InterpolationProblem.uniform(cfg, 2, 5, F)
    dim = vanishing_dimension(pr)
    assert dim >= pr.n_columns - pr.n_conditions


def test_field_rational_agreement_small_systems():
    # spec cap: assert on instances up to 60 columns
    rng = random.Random(4)
    checked = 0
    for _ in range(8):
        n = rng.choice([2, 3])
        r = rng.randint(1, 5)
        cfg = generic_points(n, r, seed=rng.randint(0, 999))
        l = rng.randint(1, 2)
        d = rng.randint(l, l + 3)
        if monomial_count(n, d) > 60:
            continue
        dim_f = vanishing_dimension(InterpolationProblem.uniform(cfg, l, d, F))
        dim_q = vanishing_dimension(InterpolationProblem.uniform(cfg, l, d, None))
        assert dim_f == dim_q
        checked += 1
    assert checked >= 4


def test_homogeneous_matches_affine_dimension():
    for seed, (n, r, l, d) in enumerate([(2, 3, 1, 2), (2, 5, 2, 4), (3, 2, 1, 2)]):
        cfg = generic_points(n, r, seed=seed)
        pr = InterpolationProblem.uniform(cfg, l, d, F)
        assert homogeneous_vanishing_dimension(pr) == vanishing_dimension(pr)


def test_achieved_orders_meet_requirements_with_multiplicities():
    cfg = make_config([[0, 0], [1, 0]], multiplicities=[1, 2])
    orders = uniform_orders(cfg, 1)
    assert orders == (1, 2)
    polys = kernel_polynomials(InterpolationProblem(cfg, 2, orders))
    for p in polys:
        assert p.achieved_orders[0] >= 1 and p.achieved_orders[1] >= 2


def test_column_cap_enforced():
    cfg = generic_points(2, 3, seed=0)
    search = DimensionSearch(cfg, uniform_orders(cfg, 1), None, column_cap=5)
    with pytest.raises(ValueError, match="column cap"):
        search.dimension_at(3)
