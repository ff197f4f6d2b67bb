from fractions import Fraction as F

from genpos.lp import feasible_point, strict_feasible_point


def check_ge(x, ge):
    return all(sum(F(a) * v for a, v in zip(coeffs, x)) >= b for coeffs, b in ge)


def test_feasible_simple_box():
    ge = [((1, 0), 0), ((0, 1), 0), ((-1, 0), -3), ((0, -1), -3)]
    x = feasible_point(2, ge)
    assert x is not None and check_ge(x, ge)


def test_infeasible_by_design():
    assert feasible_point(1, [((1,), 1), ((-1,), 0)]) is None


def test_equality_handling():
    x = feasible_point(2, ge=[((1, 0), 0)], eq=[((1, 1), 5)])
    assert x is not None
    assert x[0] + x[1] == 5 and x[0] >= 0


def test_negative_rhs_rows():
    ge = [((1, 0), -10), ((0, 1), -10), ((-1, -1), -1)]
    x = feasible_point(2, ge)
    assert x is not None and check_ge(x, ge)


def test_strict_open_triangle():
    # x > 0, y > 0, x + y < 2
    strict = [((1, 0), 0), ((0, 1), 0), ((-1, -1), -2)]
    x = strict_feasible_point(2, strict)
    assert x is not None
    assert x[0] > 0 and x[1] > 0 and x[0] + x[1] < 2


def test_strict_infeasible_thin():
    # x > 0 and x < 0
    assert strict_feasible_point(1, [((1,), 0), ((-1,), 0)]) is None
    # nonempty closed but empty open region: x >= 0, x <= 0 strictified
    assert strict_feasible_point(1, [((1,), 0), ((-1,), 0)]) is None


def test_strict_with_equality():
    # on the line x + y = 1 with x > 0, y > 0
    x = strict_feasible_point(
        2, strict_ge=[((1, 0), 0), ((0, 1), 0)], eq=[((1, 1), 1)]
    )
    assert x is not None
    assert x[0] + x[1] == 1 and x[0] > 0 and x[1] > 0


def test_strict_unbounded_direction():
    # open half-space, witness exists despite unbounded region
    x = strict_feasible_point(3, [((1, 1, 1), 100)])
    assert x is not None and sum(x) > 100


def test_rational_coefficients():
    ge = [((F(1, 3), F(-1, 7)), F(2, 5))]
    x = feasible_point(2, ge)
    assert x is not None and check_ge(x, ge)
