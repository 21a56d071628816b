import pytest
from hypothesis import given, settings

import oracles
from fintop import bits
from fintop.catalog import chain, indiscrete, sierpinski, discrete
from fintop.errors import FinTopError
from fintop.operators import (
    boundary,
    classify_set,
    closure,
    closure_of_interior,
    closure_of_interior_by_maxima,
    derived_set,
    exterior,
    interior,
    interior_of_closure,
    interior_of_closure_by_maxima,
    order_characterizations,
)
from fintop.properties import is_t0, open_points
from strategies import space_and_set

X, Y, Z = 1, 2, 4
METHODS = ["order", "definition"]


@pytest.mark.parametrize("method", METHODS)
def test_closure_examples(tau, method):
    t3 = tau["tau3"]
    assert closure(t3, Y, method) == Y | Z
    assert closure(t3, 0, method) == 0
    assert closure(t3, Y | Z, method) == Y | Z


@pytest.mark.parametrize("method", METHODS)
def test_interior_examples(tau, method):
    assert interior(tau["tau3"], Y | Z, method) == Y
    assert interior(tau["tau3"], 7, method) == 7
    assert interior(chain(3), 0b011, method) == 0


@pytest.mark.parametrize("method", METHODS)
def test_clint_intcl_examples(tau, method):
    t3 = tau["tau3"]
    assert closure_of_interior(t3, Y | Z, method) == Y | Z
    assert interior_of_closure(t3, Y | Z, method) == Y
    assert closure_of_interior(t3, 0, method) == 0
    assert interior_of_closure(t3, 0, method) == 0
    i2 = indiscrete(2)
    assert closure_of_interior(i2, 1, method) == 0
    assert interior_of_closure(i2, 1, method) == 3


@pytest.mark.parametrize("method", METHODS)
def test_boundary_exterior_examples(tau, method):
    assert boundary(sierpinski(), 1, method) == 2
    assert boundary(tau["tau3"], 7, method) == 0
    assert boundary(tau["tau3"], Y | Z, method) == Z
    assert exterior(tau["tau3"], Y | Z, method) == X
    assert exterior(tau["tau3"], 0, method) == 7
    assert exterior(tau["tau3"], 7, method) == 0


@pytest.mark.parametrize("method", METHODS)
def test_derived_examples(tau, method):
    assert derived_set(tau["tau3"], Y, method) == Z
    for a in range(8):
        assert derived_set(discrete(3), a, method) == 0
    assert derived_set(sierpinski(), 1, method) == 2


def test_classify_examples(tau):
    c = classify_set(tau["tau3"], X | Z)
    assert (c.semiopen, c.preopen, c.gamma_open) == (True, False, True)
    c = classify_set(indiscrete(3), 1)
    assert (c.preopen, c.semiopen) == (True, False)
    c = classify_set(tau["tau6"], X)
    assert c.open and not c.dense


def test_dense_without_open_dense_subset(tau):
    t6 = tau["tau6"]
    assert classify_set(t6, X | Z).dense
    assert not any(classify_set(t6, g).dense for g in t6.opens if bits.is_subset(g, X | Z))


def test_every_indiscrete_subset_is_preopen_not_semiopen():
    s = indiscrete(3)
    for a in range(1, 7):
        c = classify_set(s, a)
        assert c.preopen and not c.semiopen


def test_out_of_universe_rejected(tau):
    with pytest.raises(FinTopError):
        closure(tau["tau3"], 8)
    with pytest.raises(ValueError):
        closure(tau["tau3"], 1, "fast")


def test_against_frozenset_oracle(small_spaces):
    for s in small_spaces:
        fam = oracles.opens_of(s)
        pts = range(s.n)
        for a in bits.subsets(s.full):
            aset = oracles.to_set(a)
            assert oracles.to_mask(oracles.closure(pts, fam, aset)) == closure(s, a)
            assert oracles.to_mask(oracles.interior(pts, fam, aset)) == interior(s, a)


def test_kuratowski_axioms(spaces4):
    for s in spaces4:
        assert closure(s, 0) == 0
        for a in bits.subsets(s.full):
            ca = closure(s, a)
            assert bits.is_subset(a, ca)
            assert closure(s, ca) == ca
            for b in bits.subsets(s.full):
                assert closure(s, a | b) == ca | closure(s, b)


def test_duality(spaces4):
    for s in spaces4:
        for a in bits.subsets(s.full):
            for m in METHODS:
                assert interior(s, a, m) == s.full ^ closure(s, s.full ^ a, m)
                assert exterior(s, a, m) == interior(s, s.full ^ a, m)
                assert exterior(s, a, m) == s.full ^ closure(s, a, m)
                assert boundary(s, a, m) == closure(s, a, m) & ~interior(s, a, m)


def test_order_matches_definition(spaces4):
    ops = [closure, interior, boundary, exterior, derived_set, closure_of_interior, interior_of_closure]
    for s in spaces4:
        for a in bits.subsets(s.full):
            for op in ops:
                assert op(s, a, "order") == op(s, a, "definition"), (s, a, op.__name__)
            assert classify_set(s, a, "order") == classify_set(s, a, "definition")


def test_derived_set_matches_every_open_definition(spaces4):
    for s in spaces4:
        for a in bits.subsets(s.full):
            d = derived_set(s, a)
            for x in range(s.n):
                every = all((g & ~(1 << x)) & a for g in s.opens if g >> x & 1)
                assert bool(d >> x & 1) == every


def test_intcl_inside_clint_for_t0(spaces4):
    for s in spaces4:
        if not is_t0(s):
            continue
        for a in bits.subsets(s.full):
            assert bits.is_subset(interior_of_closure(s, a), closure_of_interior(s, a))
            c = classify_set(s, a)
            assert not c.preopen or c.semiopen
            assert c.semiopen == c.gamma_open
            assert not c.open or c.preopen
            assert not c.clopen or (c.open and c.closed)


def test_inclusion_fails_without_t0():
    s = indiscrete(2)
    assert not bits.is_subset(interior_of_closure(s, 1), closure_of_interior(s, 1))


def test_maxima_characterizations_on_t0(spaces4):
    for s in spaces4:
        if not is_t0(s):
            continue
        for a in bits.subsets(s.full):
            assert closure_of_interior_by_maxima(s, a) == closure_of_interior(s, a)
            assert interior_of_closure_by_maxima(s, a) == interior_of_closure(s, a)


def test_point_closure_is_down_set(spaces4):
    for s in spaces4:
        if not is_t0(s):
            continue
        for p in range(s.n):
            below = bits.from_indices(x for x in range(s.n) if s.order.leq(x, p))
            assert closure(s, 1 << p, "definition") == below


def test_density_order_forms_on_t0(spaces4):
    for s in spaces4:
        if not is_t0(s):
            continue
        for a in bits.subsets(s.full):
            c = classify_set(s, a)
            forms = order_characterizations(s, a)
            assert forms["dense"] == c.dense
            assert forms["codense"] == c.codense
            assert forms["nowhere_dense"] == c.nowhere_dense
            assert forms["dense_in_itself_weak"] == c.dense_in_itself_weak


def test_open_points_dense_and_density_criterion(spaces4):
    for s in spaces4:
        if not is_t0(s):
            continue
        top = open_points(s)
        assert classify_set(s, top).dense
        for a in bits.subsets(s.full):
            assert classify_set(s, a).dense == bits.is_subset(top, a)


def test_lower_bound_form_of_dense_in_itself_is_not_valid():
    # "contains all its lower bounds" describes closed sets, not dense-in-itself ones
    s = discrete(1)
    c = classify_set(s, 1)
    assert c.closed and not c.dense_in_itself


@settings(max_examples=200, deadline=None)
@given(space_and_set())
def test_routes_agree_on_random_spaces(sa):
    s, a = sa
    for op in (closure, interior, boundary, exterior, derived_set):
        assert op(s, a, "order") == op(s, a, "definition")
    ca = closure(s, a)
    assert bits.is_subset(a, ca) and closure(s, ca) == ca
