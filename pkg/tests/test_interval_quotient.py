import random
from fractions import Fraction as Q

import pytest

from fintop.errors import FinTopError, InvalidPiecewiseLinear, OutOfDomain
from fintop.interval_quotient import (
    CotsQuotient,
    Interval,
    PiecewiseLinear,
    RationalIntervalSet,
    evaluate,
    image_of_cell,
    induced_multifunction,
    project,
)
from fintop.maps import PointFunction, is_continuous, is_lsc, is_usc, usc_failures
from fintop.properties import dimension_inductive, is_cots, is_t0, is_t_half

PI = PiecewiseLinear.from_pairs([(0, Q(1, 2)), (Q(1, 2), 1), (1, 1)])
PI1 = PiecewiseLinear.from_pairs([(0, Q(3, 4)), (Q(1, 4), Q(1, 4)), (1, Q(1, 2))])
TENT = PiecewiseLinear.from_pairs([(0, 1), (Q(1, 2), 0), (1, 1)])
HALVES = CotsQuotient([0, Q(1, 2), 1])

a, b, c, d, e = (1 << i for i in range(5))


def test_evaluate_examples():
    assert evaluate(PI, 0) == Q(1, 2)
    assert evaluate(PI1, Q(1, 2)) == Q(1, 3)
    assert PI1(Q(1, 4)) == Q(1, 4)
    for f in (PI, PI1, TENT):
        for x, y in zip(f.breakpoints, f.values):
            assert evaluate(f, x) == y


def test_evaluate_out_of_domain():
    with pytest.raises(OutOfDomain):
        evaluate(PI, Q(3, 2))
    with pytest.raises(OutOfDomain):
        evaluate(PI, -1)


@pytest.mark.parametrize("pairs", [
    [(0, 0)],
    [(0, 0), (Q(1, 2), 1)],
    [(0, 0), (Q(1, 2), 1), (Q(1, 2), 0), (1, 1)],
    [(0, 0), (1, 2)],
])
def test_invalid_pwl(pairs):
    with pytest.raises(InvalidPiecewiseLinear):
        PiecewiseLinear.from_pairs(pairs)


def test_image_of_cell_examples():
    assert image_of_cell(PI1, Interval.open(0, Q(1, 2))) == RationalIntervalSet(
        [Interval(Q(1, 4), Q(3, 4), True, False)])
    assert image_of_cell(PI, Interval.open(Q(1, 2), 1)) == RationalIntervalSet([Interval.point(1)])
    const = PiecewiseLinear.from_pairs([(0, Q(2, 5)), (1, Q(2, 5))])
    assert image_of_cell(const, Interval.open(0, 1)) == RationalIntervalSet([Interval.point(Q(2, 5))])
    assert image_of_cell(TENT, Interval.open(0, 1)) == RationalIntervalSet(
        [Interval(Q(0), Q(1), True, False)])


def test_interval_set_normalizes():
    s = RationalIntervalSet([Interval.open(0, Q(1, 2)), Interval.point(Q(1, 2)), Interval.open(Q(1, 2), 1)])
    assert s.parts == (Interval.open(0, 1),)
    gap = RationalIntervalSet([Interval.open(0, Q(1, 2)), Interval.open(Q(1, 2), 1)])
    assert len(gap.parts) == 2 and not gap.contains(Q(1, 2))


def test_project_examples():
    assert project(HALVES, RationalIntervalSet([Interval(Q(1, 4), Q(3, 4), True, False)])) == b | c | d
    assert project(HALVES, RationalIntervalSet([Interval.point(Q(1, 2))])) == c
    assert project(HALVES, RationalIntervalSet()) == 0


def test_project_fiber_identity():
    q = CotsQuotient([0, Q(1, 3), Q(1, 2), 1])
    for p in range(q.n):
        assert project(q, RationalIntervalSet([q.fiber(p)])) == 1 << p


def test_bad_cuts():
    for cuts in ([0], [0, Q(1, 2)], [0, Q(1, 2), Q(1, 2), 1], [Q(1, 3), 1]):
        with pytest.raises(FinTopError):
            CotsQuotient(cuts)


def test_induced_pi():
    g = induced_multifunction(PI, HALVES)
    assert g.image == (c, d, e, e, e)
    f = PointFunction(HALVES.cot_space, HALVES.cot_space, [2, 3, 4, 4, 4])
    assert is_continuous(f)
    assert is_usc(g) and is_lsc(g)


def test_induced_pi1():
    g = induced_multifunction(PI1, HALVES)
    assert g.image == (d, b | c | d, b, b, c)
    assert is_lsc(g) and not is_usc(g)
    fail = usc_failures(g)[0]
    assert fail.point == 0 and fail.image_of_nbhd == b | c | d and fail.bound == d


def test_induced_tent():
    g = induced_multifunction(TENT, HALVES)
    assert g.image == (e, b | c | d, a, b | c | d, e)
    assert not is_usc(g)


@pytest.mark.parametrize("cuts", [[0, 1], [0, Q(1, 2), 1], [0, Q(1, 5), Q(2, 3), Q(7, 8), 1]])
def test_quotient_space_invariants(cuts):
    s = CotsQuotient(cuts).cot_space
    assert is_cots(s) and is_t0(s) and is_t_half(s)
    assert dimension_inductive(s) == 1


def _random_rationals(rng, k, den=24):
    return sorted({Q(rng.randrange(1, den), den) for _ in range(k)})


def random_cases(seed=7, count=100):
    rng = random.Random(seed)
    for _ in range(count):
        xs = [Q(0), *_random_rationals(rng, rng.randrange(0, 5)), Q(1)]
        ys = [Q(rng.randrange(0, 13), 12) for _ in xs]
        cuts = [Q(0), *_random_rationals(rng, rng.randrange(0, 4), 12), Q(1)]
        yield PiecewiseLinear(tuple(xs), tuple(ys)), CotsQuotient(cuts)


def test_induced_is_lsc_on_random_maps():
    cases = list(random_cases())
    assert len(cases) == 100
    for f, q in cases + [(PI, HALVES), (PI1, HALVES), (TENT, HALVES)]:
        assert is_lsc(induced_multifunction(f, q))


def test_sample_points_land_in_induced_values():
    for f, q in list(random_cases(seed=11, count=40)) + [(PI, HALVES), (PI1, HALVES), (TENT, HALVES)]:
        g = induced_multifunction(f, q)
        for i in range(121):
            x = Q(i, 120)
            assert g.image[q.point_of(x)] >> q.point_of(f(x)) & 1
