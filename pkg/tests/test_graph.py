import pytest
from hypothesis import given, settings

from _support import SINGLE, F, T, bipartites
from bipcomplete.graph import (
    BipartiteTournament,
    Completion,
    Dicycle,
    GraphError,
    Side,
    Signature,
    VertexId,
    augmented_dicycles,
    completion_from_arcs,
    dicycles_of_length,
    make_bipartite,
    make_completion,
    normalize_signatures,
    signature,
    vertex,
)
from bipcomplete.oracle import brute_dicycles, enumerate_completions


def arcs_of(g, *pairs):
    return all(g.has_arc(vertex(a), vertex(b)) for a, b in pairs)


def test_vertex_labels():
    assert vertex("u3") == VertexId(Side.ONE, 2)
    assert vertex("v1").label == "v1"
    assert Side.ONE.other is Side.TWO
    with pytest.raises(GraphError):
        vertex("w1")


def test_single_arc():
    assert SINGLE.order == 2
    assert SINGLE.arcs() == [(vertex("u1"), vertex("v1"))]


def test_F_arcs():
    f = F()
    assert (f.n1, f.n2) == (2, 4)
    assert arcs_of(f, ("u1", "v1"), ("u1", "v2"), ("v1", "u2"), ("v2", "u2"),
                   ("u2", "v3"), ("u2", "v4"), ("v3", "u1"), ("v4", "u1"))
    assert len(f.arcs()) == 8


@pytest.mark.parametrize("n1,n2,cross", [(0, 1, []), (1, 0, [[]]), (2, 1, [[True]]), (1, 2, [[True]])])
def test_make_bipartite_rejects(n1, n2, cross):
    with pytest.raises(GraphError):
        make_bipartite(n1, n2, cross)


def test_from_arcs_rejects_gaps_and_doubles():
    u1, v1, v2 = vertex("u1"), vertex("v1"), vertex("v2")
    with pytest.raises(GraphError, match="not oriented"):
        BipartiteTournament.from_arcs(1, 2, [(u1, v1)])
    with pytest.raises(GraphError, match="twice"):
        BipartiteTournament.from_arcs(1, 2, [(u1, v1), (v1, u1), (u1, v2)])
    with pytest.raises(GraphError):
        BipartiteTournament.from_arcs(1, 2, [(u1, v1), (v1, v2)])


def test_completion_of_figure():
    t = T()
    assert isinstance(t, Completion)
    assert sorted(t.added_arcs()) == sorted(
        (vertex(a), vertex(b))
        for a, b in [("u1", "u2"), ("v1", "v2"), ("v2", "v3"), ("v4", "v3"), ("v1", "v3"), ("v2", "v4"), ("v4", "v1")]
    )
    assert all(t.has_arc(a, b) for a, b in F().arcs())


def test_completion_single_arc():
    t = make_completion(SINGLE, [], [])
    assert t.added_arcs() == []


def test_completion_missing_pair():
    arcs = [(vertex(a), vertex(b)) for a, b in [("u1", "u2"), ("v1", "v2"), ("v2", "v3"), ("v4", "v3"),
                                                ("v1", "v3"), ("v2", "v4")]]
    with pytest.raises(GraphError):
        completion_from_arcs(F(), arcs)


def test_completion_rejects_self_arc_and_double():
    with pytest.raises(GraphError):
        make_completion(SINGLE, [(0, 0)], [])
    d = make_bipartite(2, 1, [[True], [False]])
    with pytest.raises(GraphError):
        make_completion(d, [(0, 1), (1, 0)], [])


def test_F_has_no_odd_cycles():
    assert dicycles_of_length(F(), 3) == []
    assert Dicycle.of("u1", "v2", "u2", "v3") in dicycles_of_length(F(), 4)


def test_figure_three_cycles():
    found = dicycles_of_length(T(), 3)
    for c in (("v1", "v2", "v4"), ("u1", "u2", "v3"), ("v2", "v3", "u1")):
        assert Dicycle.of(*c) in found
    assert set(found) == brute_dicycles(T(), 3)


def test_dicycle_canonical_form():
    c = Dicycle.of("v2", "v3", "u1", "v2")
    assert c.vertices[0] == vertex("u1")
    assert str(c) == "u1 v2 v3 u1"


def test_cycle_length_out_of_range():
    with pytest.raises(GraphError):
        dicycles_of_length(F(), 2)
    with pytest.raises(GraphError):
        dicycles_of_length(SINGLE, 3)
    with pytest.raises(GraphError):
        dicycles_of_length(T(), 7)


def test_signatures_of_figure_cycles():
    f = F()
    assert signature(Dicycle.of("u1", "u2", "v4", "v3"), f) == Signature(2, 2)
    assert signature(Dicycle.of("v1", "v2", "v4"), f) == Signature(3, 0)
    assert signature(Dicycle.of("u1", "u2", "v3"), f) == Signature(2, 1)


def test_augmented_examples():
    t = T()
    assert Dicycle.of("v1", "v2", "v4") in augmented_dicycles(t, 3, {(3, 0)})
    four = augmented_dicycles(t, 4, {(2, 2)})
    assert Dicycle.of("u1", "u2", "v4", "v3") in four
    assert Dicycle.of("u1", "v2", "u2", "v3") not in augmented_dicycles(t, 4, {(2, 2), (3, 1), (4, 0)})


def test_augmented_on_tiny_instance_is_empty():
    for t in enumerate_completions(SINGLE):
        assert augmented_dicycles(t, 3, {(2, 1), (3, 0)}) == []


@pytest.mark.parametrize("k,sigs", [(3, [(1, 2)]), (4, [(3, 2)]), (4, [(5, -1)]), (4, [(1, 3)])])
def test_malformed_signature_sets(k, sigs):
    with pytest.raises(GraphError):
        normalize_signatures(k, sigs)


def test_signature_rejects_foreign_vertex():
    with pytest.raises(GraphError):
        signature(Dicycle.of("u1", "u2", "v9"), F())


@settings(max_examples=60, deadline=None)
@given(bipartites(3, 3))
def test_no_odd_dicycles_in_bipartite(d):
    for k in range(3, min(d.order, 6) + 1, 2):
        assert dicycles_of_length(d, k) == []


@settings(max_examples=40, deadline=None)
@given(bipartites(3, 3, min1=2, min2=2))
def test_enumeration_matches_brute_force(d):
    t = next(iter(enumerate_completions(d)))
    for k in range(3, min(d.order, 5) + 1):
        cycles = dicycles_of_length(t, k)
        assert len(cycles) == len(set(cycles))
        assert set(cycles) == brute_dicycles(t, k)
        for c in cycles:
            s = signature(c, d)
            assert s.major + s.minor == k
            assert all(t.has_arc(a, b) for a, b in c.arcs())


@settings(max_examples=40, deadline=None)
@given(bipartites(3, 3, min1=2, min2=2))
def test_augmented_cycles_use_added_arcs(d):
    for t in list(enumerate_completions(d))[:8]:
        for c in augmented_dicycles(t, 4, {(4, 0), (3, 1), (2, 2)}):
            assert any(a.side is b.side for a, b in c.arcs())


def test_rotation_independence():
    t = T()
    for c in dicycles_of_length(t, 4):
        vs = c.vertices
        for r in range(4):
            rotated = vs[r:] + vs[:r]
            i = rotated.index(min(rotated))
            assert Dicycle(rotated[i:] + rotated[:i]) == c
