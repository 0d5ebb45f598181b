import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import random_connected_graph, random_f2theta
from kgraph.abelian import AbelianInvariants
from kgraph.corpus import build_f2theta, build_projective_plane, build_sphere, build_tn
from kgraph.errors import BudgetExceeded, Disconnected
from kgraph.graphs import spanning_tree, validate_graph
from kgraph.presentation import (
    GroupPresentation,
    abelianize,
    pi1,
    pi1_graph,
    pi1_textile,
    recognize,
    tietze_simplify,
)


def test_presentation_stores_reduced_relators():
    p = GroupPresentation(("a", "b"), ((("b", -1), ("a", 1), ("a", -1), ("a", 1), ("b", 1)),))
    assert p.relators == ((("a", 1),),)


def test_pi1_graph():
    g = validate_graph(["v"], [("a", "v", "v")])
    assert recognize(pi1_graph(g)).tag == "free"
    g = validate_graph(["v"], [(f"l{i}", "v", "v") for i in range(4)])
    rec = recognize(pi1_graph(g))
    assert (rec.tag, rec.value) == ("free", 4)
    cg, _ = build_sphere()
    with pytest.raises(Disconnected):
        pi1_graph(cg.colour_subgraph(1))


def test_tietze_simple():
    assert tietze_simplify(GroupPresentation(("a",), ((("a", 1),),))).generators == ()


def test_sphere_trivial():
    cg, C = build_sphere()
    p = pi1(cg, C, "w")
    assert len(p.generators) == 8 and len(p.relators) == 5 + 4
    assert tietze_simplify(p).generators == ()
    assert recognize(p).tag == "trivial"


def test_projective_plane_z2():
    cg, C = build_projective_plane()
    p = pi1(cg, C)
    s = tietze_simplify(p)
    assert len(s.generators) == 1
    x = s.generators[0]
    assert s.relators in (((( x, 1), (x, 1)),), (((x, -1), (x, -1)),))
    rec = recognize(p)
    assert (rec.tag, rec.value) == ("cyclic", 2)
    assert abelianize(p) == AbelianInvariants(0, (2,))


def test_f2theta_abelianizations():
    ident = build_f2theta(2, 2, lambda i, j: (i, j))
    flip = build_f2theta(2, 2, lambda i, j: (j, i))
    assert abelianize(pi1(*ident)) == AbelianInvariants(4)
    rec = recognize(pi1(*flip))
    assert rec.tag == "unrecognized" and rec.abelianization == AbelianInvariants(3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_tn(n):
    p = pi1_textile(build_tn(n))
    assert abelianize(p) == AbelianInvariants(2)
    s = tietze_simplify(p)
    assert len(s.generators) <= 2 and len(s.relators) <= 1


def test_budget_exceeded_carries_best_so_far():
    cg, C = build_sphere()
    with pytest.raises(BudgetExceeded) as exc:
        tietze_simplify(pi1(cg, C), budget=3)
    assert len(exc.value.presentation.generators) == 5
    rec = recognize(pi1(cg, C), budget=3)
    assert rec.budget_exceeded


def test_one_generator_gcd():
    x = "x"
    p = GroupPresentation((x,), (((x, 1),) * 4, ((x, 1),) * 6))
    rec = recognize(p)
    assert (rec.tag, rec.value) == ("cyclic", 2)
    p = GroupPresentation((x,), ((("x", 1), ("x", -1)),))
    assert recognize(p).tag == "free"


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 7), st.integers(0, 7))
def test_pi1_graph_rank(seed, nv, extra):
    g = random_connected_graph(random.Random(seed), nv, extra)
    p = pi1_graph(g)
    assert len(p.generators) == len(g.edges) - len(g.vertices) + 1
    assert len(p.generators) == len(g.edges) - len(spanning_tree(g).edges)


words = st.lists(st.tuples(st.sampled_from("abc"), st.sampled_from([1, -1])), max_size=8)


@settings(max_examples=300, deadline=None)
@given(st.lists(words, max_size=4))
def test_tietze_preserves_abelianization(relators):
    p = GroupPresentation(("a", "b", "c"), tuple(tuple(r) for r in relators))
    assert abelianize(tietze_simplify(p)) == abelianize(p)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_tree_independence(seed):
    rng = random.Random(seed)
    cg, C = random_f2theta(rng) if rng.random() < 0.3 else build_sphere()
    g = cg.graph
    base = abelianize(pi1(cg, C))
    for v in g.vertices:
        for _ in range(3):
            order = list(g.edge_names)
            rng.shuffle(order)
            assert abelianize(pi1(cg, C, tree=spanning_tree(g, v, order))) == base
