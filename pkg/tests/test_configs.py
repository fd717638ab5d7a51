"""Point configuration construction, generators, and JSON round-trips."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nagata.configs import (
    PointConfig,
    generic_points,
    grid_points,
    make_config,
    two_point_example,
)


def test_generic_single_point_in_range():
    cfg = generic_points(2, 1, seed=0)
    assert cfg.r == 1
    assert all(abs(x) <= 1000 for x in cfg.points[0])


def test_generic_points_distinct_and_deterministic():
    a = generic_points(2, 9, seed=7)
    b = generic_points(2, 9, seed=7)
    assert a == b
    assert len(set(a.points)) == 9
    c = generic_points(2, 9, seed=8)
    assert c != a


def test_generic_points_bound_too_small():
    with pytest.raises(ValueError):
        generic_points(2, 10, seed=0, bound=15)


def test_grid_points_enumeration():
    g = grid_points(2, 2)
    assert set(g.points) == {
        (Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1)),
        (Fraction(1), Fraction(0)),
        (Fraction(1), Fraction(1)),
    }
    assert grid_points(1, 3).points == ((Fraction(0),), (Fraction(1),), (Fraction(2),))
    assert grid_points(2, 4).r == 16


def test_two_point_example():
    cfg = two_point_example()
    assert cfg.dimension == 2
    assert cfg.r == 2
    assert set(cfg.points) == {
        (Fraction(1, 2), Fraction(0)),
        (Fraction(-1, 2), Fraction(0)),
    }


def test_validation_rejects_duplicates_and_bad_mults():
    with pytest.raises(ValueError):
        make_config([[0, 0], [0, 0]])
    with pytest.raises(ValueError):
        make_config([[0, 0], [1, 1]], multiplicities=[1])
    with pytest.raises(ValueError):
        make_config([[0, 0]], multiplicities=[0])
    with pytest.raises(ValueError):
        make_config([])


def test_scaled_and_drop_point():
    cfg = two_point_example()
    s = cfg.scaled(Fraction(1, 10))
    assert s.points[0] == (Fraction(1, 20), Fraction(0))
    with pytest.raises(ValueError):
        cfg.scaled(0)
    d = cfg.drop_point(0)
    assert d.r == 1 and d.points[0] == (Fraction(-1, 2), Fraction(0))


def test_json_round_trip_simple():
    cfg = make_config([["1/2", 0], ["-1/2", "3/7"]], multiplicities=[1, 2],
                      label="demo", seed=5)
    back = PointConfig.from_json(cfg.to_json())
    assert back == cfg


fracs = st.fractions(
    min_value=-100, max_value=100, max_denominator=997
)


@settings(deadline=None, max_examples=100)
@given(st.lists(st.tuples(fracs, fracs), min_size=1, max_size=6, unique=True))
def test_json_round_trip_exact(points):
    cfg = make_config(points, label="fuzz")
    assert PointConfig.from_json(cfg.to_json()) == cfg


def test_max_norms():
    cfg = make_config([[3, 4], [0, 1]])
    assert cfg.max_norm_squared() == 25
    assert cfg.max_sup_norm() == 4
