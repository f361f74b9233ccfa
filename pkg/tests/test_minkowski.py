import pytest

from symbolic.minkowski import (
    DIM_1_1,
    DIM_2_1,
    DIM_3_1,
    Dim,
    DimensionMismatchError,
    FourVector,
    IndexPositionError,
    coordinate_vector,
    dot,
    lower,
    raise_index,
    rest_velocity,
    zero_vector,
)
from symbolic.symbols import const, sym

t, x, y, z = sym("t"), sym("x"), sym("y"), sym("z")


def test_dim_labels():
    assert Dim.parse("2+1") == DIM_2_1
    assert str(DIM_3_1) == "3+1"
    assert DIM_1_1.total == 2
    for bad in ("9", "2+2", "x+1", ""):
        with pytest.raises(ValueError):
            Dim.parse(bad)
    with pytest.raises(ValueError):
        Dim(4)


def test_interval_of_coordinate_vector():
    assert dot(coordinate_vector(DIM_1_1), coordinate_vector(DIM_1_1)) == t ** 2 - x ** 2
    assert dot(coordinate_vector(DIM_2_1), coordinate_vector(DIM_2_1)) == t ** 2 - x ** 2 - y ** 2
    assert dot(coordinate_vector(DIM_3_1), coordinate_vector(DIM_3_1)) == t ** 2 - x ** 2 - y ** 2 - z ** 2


def test_rest_velocity_projects_time():
    assert dot(rest_velocity(DIM_2_1), coordinate_vector(DIM_2_1)) == t
    assert dot(rest_velocity(DIM_2_1), rest_velocity(DIM_2_1)) == const(1)


def test_lower_and_raise():
    v = coordinate_vector(DIM_2_1)
    low = lower(v)
    assert low.covariant
    assert low.components == (t, -x, -y)
    assert raise_index(low) == v
    with pytest.raises(IndexPositionError):
        lower(low)
    with pytest.raises(IndexPositionError):
        raise_index(v)
    with pytest.raises(IndexPositionError):
        dot(low, v)
    with pytest.raises(IndexPositionError):
        v + low


def test_dimension_checks():
    with pytest.raises(DimensionMismatchError):
        FourVector(DIM_2_1, (t, x))
    with pytest.raises(DimensionMismatchError):
        dot(coordinate_vector(DIM_1_1), coordinate_vector(DIM_2_1))
    with pytest.raises(DimensionMismatchError):
        coordinate_vector(DIM_1_1) + zero_vector(DIM_3_1)


def test_vector_arithmetic():
    v = coordinate_vector(DIM_1_1)
    assert (v - v) == zero_vector(DIM_1_1)
    assert v.scale(2)[1] == x * 2
    assert str(v) == "(t, x)"
