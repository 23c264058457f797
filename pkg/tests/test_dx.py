import random
from itertools import permutations

import pytest
from hypothesis import given, settings

from _support import SINGLE, F, bipartites, integer_sets
from bipcomplete.dx import (
    build_dx,
    check_integer_set,
    dx_order,
    dx_representation,
    dx_vertex_values,
    has_4_dicycle,
    is_acyclic,
    is_bitransitive,
)
from bipcomplete.graph import GraphError
from bipcomplete.oracle import all_bipartite, random_bipartite
from bipcomplete.tri import build_special_X


def named_arcs(xs):
    d = build_dx(xs)
    val = dx_vertex_values(xs)
    return {(val[a], val[b]) for a, b in d.arcs()}


def test_two_element_set():
    assert named_arcs({1, 2}) == {(1, 2)}


def test_X1_8_arcs():
    expected = {(a, b) for a in (1, 3) for b in (4, 6, 10, 12)}
    expected |= {(a, b) for a in (4, 6) for b in (7, 9)}
    expected |= {(a, b) for a in (7, 9) for b in (10, 12)}
    assert named_arcs(build_special_X(1, 8)) == expected
    assert len(expected) == 16


@pytest.mark.parametrize("xs", [{1, 3}, {2, 4, 6}, set()])
def test_single_parity_rejected(xs):
    with pytest.raises(GraphError):
        build_dx(xs)


@pytest.mark.parametrize("xs", [{0, 1}, {-1, 2}])
def test_nonpositive_rejected(xs):
    with pytest.raises(GraphError):
        check_integer_set(xs)


def test_F_has_4_dicycle():
    c = has_4_dicycle(F())
    assert c is not None and c.k == 4
    assert all(F().has_arc(a, b) for a, b in c.arcs())


def test_acyclic_examples():
    assert has_4_dicycle(build_dx({1, 2, 3, 4})) is None
    assert has_4_dicycle(SINGLE) is None
    assert not is_acyclic(F())
    assert is_acyclic(SINGLE)


def test_bitransitive_examples():
    quad = is_bitransitive(F())
    assert quad is not None
    a, b, c, e = quad
    f = F()
    assert f.has_arc(a, b) and f.has_arc(b, c) and f.has_arc(c, e) and not f.has_arc(a, e)
    assert is_bitransitive(build_dx({1, 2, 5, 8})) is None
    assert is_bitransitive(SINGLE) is None


def test_representation_examples():
    xs = dx_representation(build_dx(build_special_X(1, 8)))
    assert [x % 2 for x in xs] == [1, 1, 0, 0, 1, 1, 0, 0]
    assert xs == (1, 3, 4, 6, 7, 9, 10, 12)
    assert dx_representation(F()) is None
    assert dx_representation(SINGLE) == (1, 2)


def four_way(d):
    return (
        is_acyclic(d),
        has_4_dicycle(d) is None,
        is_bitransitive(d) is None,
        dx_representation(d) is not None,
    )


def test_four_way_equivalence_exhaustive():
    for n1 in range(1, 4):
        for n2 in range(1, 4):
            for d in all_bipartite(n1, n2):
                assert len(set(four_way(d))) == 1


def test_four_way_equivalence_random_4_4():
    rng = random.Random(7)
    for _ in range(1000):
        d = random_bipartite(4, 4, rng)
        assert len(set(four_way(d))) == 1


def is_isomorphic_by(d, e, order_d, order_e):
    m = dict(zip(order_d, order_e))
    return all(e.has_arc(m[a], m[b]) for a, b in d.arcs())


@settings(max_examples=150, deadline=None)
@given(integer_sets(8))
def test_round_trip(xs):
    d = build_dx(xs)
    ys = dx_representation(d)
    assert ys is not None and len(ys) == len(xs)
    e = build_dx(ys)
    val_e = {x: v for v, x in dx_vertex_values(ys).items()}
    order_e = [val_e[y] for y in ys]
    assert is_isomorphic_by(d, e, dx_order(d), order_e)


@settings(max_examples=150, deadline=None)
@given(integer_sets(8))
def test_outdegree_monotone(xs):
    d = build_dx(xs)
    val = dx_vertex_values(xs)
    for a, b in permutations(d.vertices(), 2):
        if a.side is b.side and d.out_degree(a) > d.out_degree(b):
            assert val[a] < val[b]


@settings(max_examples=80, deadline=None)
@given(bipartites(4, 4))
def test_dx_order_realizes_arcs(d):
    order = dx_order(d)
    if order is None:
        assert not is_acyclic(d)
        return
    pos = {v: i for i, v in enumerate(order)}
    for a, b in d.arcs():
        assert pos[a] < pos[b]
