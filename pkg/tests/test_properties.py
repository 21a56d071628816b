from itertools import combinations

import pytest

import oracles
from conftest import spaces_upto
from fintop import bits
from fintop.catalog import chain, discrete, indiscrete, sierpinski
from fintop.enumeration import enumerate_classes
from fintop.errors import NotT0
from fintop.interval_quotient import CotsQuotient
from fintop.properties import (
    closed_points,
    components_by_comparability,
    connected_components,
    dimension_by_subspaces,
    dimension_inductive,
    has_clopen_base,
    has_isolated_point,
    is_connected,
    is_cots,
    is_discrete,
    is_submaximal,
    is_t0,
    is_t1,
    is_t_half,
    non_isolated_chain_free,
    open_points,
    poset_height,
    quotient_height,
    space_report,
)
from fintop.space import space_from_minbase, subspace

X, Y, Z = 1, 2, 4


def test_t0_catalog(tau):
    assert {k for k, s in tau.items() if is_t0(s)} == {"tau1", "tau2", "tau3", "tau5", "tau7"}
    assert is_t0(discrete(1))


@pytest.mark.parametrize("name, opened, closed", [
    ("tau3", X | Y, Z),
    ("tau1", 7, 7),
    ("tau2", X | Y, Y | Z),
])
def test_open_closed_points(tau, name, opened, closed):
    assert open_points(tau[name]) == opened
    assert closed_points(tau[name]) == closed


def test_open_closed_points_are_maxima_minima_on_t0(spaces4):
    for s in spaces4:
        if is_t0(s):
            assert open_points(s) == s.order.maximal()
            assert closed_points(s) == s.order.minimal()


def test_isolated_points(tau, spaces4):
    assert all(has_isolated_point(s) for s in spaces4 if is_t0(s))
    assert not has_isolated_point(indiscrete(2))
    assert has_isolated_point(tau["tau4"])


def test_every_open_of_t0_space_has_isolated_point(spaces4):
    for s in spaces4:
        if is_t0(s):
            top = open_points(s)
            assert all(g & top for g in s.opens if g)


def test_t_half_examples(tau):
    assert is_t_half(tau["tau3"])
    assert not is_t_half(chain(3))
    assert is_t_half(discrete(3))


@pytest.mark.parametrize("space, dim", [
    (discrete(3), 0),
    (chain(3), 2),
    (sierpinski(), 1),
    (discrete(1), 0),
])
def test_dimension_examples(space, dim):
    assert dimension_inductive(space) == dim
    assert dimension_by_subspaces(space) == dim


def test_dimension_tau3(tau):
    assert dimension_inductive(tau["tau3"]) == 1


def test_dimension_of_empty_subspace(tau):
    assert dimension_inductive(subspace(tau["tau3"], 0)) == -1


def test_dimension_routes_agree(spaces4):
    for s in spaces4:
        assert dimension_inductive(s) == dimension_by_subspaces(s)


def test_height(tau):
    assert poset_height(discrete(3)) == 1
    assert poset_height(tau["tau3"]) == 2
    assert poset_height(chain(3)) == 3
    with pytest.raises(NotT0):
        poset_height(tau["tau6"])
    assert quotient_height(tau["tau6"]) == 1
    assert quotient_height(tau["tau8"]) == 2


def test_dimension_is_height_minus_one():
    for n in range(1, 6):
        for cls in enumerate_classes(n, is_t0):
            s = cls.representative
            assert dimension_inductive(s) == poset_height(s) - 1


def test_dim_at_most_one_iff_t_half():
    for n in range(1, 6):
        for cls in enumerate_classes(n, is_t0):
            s = cls.representative
            assert (dimension_inductive(s) <= 1) == is_t_half(s)


def test_dim_zero_iff_clopen_base(spaces4):
    for s in spaces4:
        assert (dimension_inductive(s) == 0) == has_clopen_base(s)


def test_t0_clopen_base_is_discrete(tau, spaces4):
    for s in spaces4:
        if is_t0(s) and has_clopen_base(s):
            assert is_discrete(s)
    assert has_clopen_base(tau["tau6"]) and not is_discrete(tau["tau6"])


def test_closed_and_open_point_parts_are_discrete(spaces4):
    for s in spaces4:
        cp, op = closed_points(s), open_points(s)
        for c in bits.subsets(cp):
            v = s.full & ~c
            if bits.is_subset(v, op):
                assert is_discrete(subspace(s, c))
                assert is_discrete(subspace(s, v))


@pytest.mark.parametrize("space, expected", [
    (discrete(3), True),
    (sierpinski(), True),
    (chain(3), False),
])
def test_submaximal_examples(space, expected):
    assert is_submaximal(space) == expected


def test_submaximal_t0_criterion(spaces4):
    for s in spaces4:
        if is_t0(s):
            assert is_submaximal(s) == non_isolated_chain_free(s)


def test_single_non_isolated_point_reading_fails(tau):
    # tau7 has two non-isolated points and is still submaximal
    t7 = tau["tau7"]
    assert is_submaximal(t7)
    assert bits.size(t7.full & ~open_points(t7)) == 2


def test_submaximal_t0_implies_t_half_implies_dim_one(spaces4):
    for s in spaces4:
        if is_t0(s) and is_submaximal(s):
            assert is_t_half(s)
        if is_t_half(s):
            assert is_t0(s) and dimension_inductive(s) <= 1


def _oracle_components(s):
    """Quasi-components from relatively clopen sets, with frozensets."""
    fam = oracles.opens_of(s)
    pts = frozenset(range(s.n))
    clopens = [g for g in fam if pts - g in fam]
    comps = set()
    for x in pts:
        comp = pts
        for c in clopens:
            if x in c:
                comp &= c
        comps.add(comp)
    return comps


def test_components_examples(tau):
    assert connected_components(tau["tau6"]) == [X, Y | Z]
    assert connected_components(tau["tau3"]) == [7]


def test_components_agree(spaces4):
    for s in spaces4:
        comps = connected_components(s)
        assert comps == components_by_comparability(s)
        assert {oracles.to_set(c) for c in comps} == _oracle_components(s)
        union = 0
        for c in comps:
            assert union & c == 0
            union |= c
        assert union == s.full
        assert is_connected(s) == (len(comps) == 1)


def _oracle_cots(s):
    for trio in combinations(range(s.n), 3):
        ok = False
        for y in trio:
            rest = s.full & ~(1 << y)
            sub = subspace(s, rest)
            idx = [i for i in range(s.n) if i != y]
            comps = _oracle_components(sub)
            p, q = [idx.index(t) for t in trio if t != y]
            if not any(p in c and q in c for c in comps):
                ok = True
        if not ok:
            return False
    return True


def test_cots_examples(tau):
    five = space_from_minbase([0b00011, 0b00010, 0b01110, 0b01000, 0b11000], "abcde")
    assert is_cots(five)
    assert is_cots(discrete(3)) == _oracle_cots(discrete(3)) is True
    assert not is_cots(chain(3))
    assert is_cots(CotsQuotient([0, 1]).cot_space)


def test_cots_against_oracle():
    for s in spaces_upto(4):
        assert is_cots(s) == _oracle_cots(s)


def test_report_invariants(spaces4):
    for s in spaces4:
        r = space_report(s)
        assert not r.t1 or r.t0
        assert not r.discrete or r.t1
        assert not r.t_half or r.t0
        assert r.connected == (len(r.components) == 1)
        assert r.isolated_points == r.open_points
        if r.t0:
            assert r.height == poset_height(s)


def test_report_as_dict(tau):
    d = space_report(tau["tau3"]).as_dict(tau["tau3"])
    assert d["open_points"] == ["x", "y"] and d["dim_inductive"] == 1 and d["height"] == 2
