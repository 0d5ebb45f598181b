import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import random_f2theta, random_product_2graph, random_textile
from kgraph.abelian import AbelianInvariants, IntMatrix
from kgraph.corpus import (
    build_extex1,
    build_projective_plane,
    build_quantum3sphere,
    build_sphere,
    build_sphere_textile,
)
from kgraph.errors import IncompleteSquares, NotAComplex, UnknownBasisElement
from kgraph.coloured import SquareSet, make_square_set, validate_coloured
from kgraph.graphs import validate_graph
from kgraph.homology import (
    ChainComplex,
    chain_complex_2graph,
    chain_complex_graph,
    chain_complex_textile,
    h2_circuit_generators,
    homology,
    simple_circuits,
    trail,
)
from kgraph.presentation import abelianize, pi1
from kgraph.textile import from_2graph, validate_textile
from oracles import homology_oracle, mod_p_rank, rational_rank

Z = AbelianInvariants(1)
ZERO = AbelianInvariants()


def _column(cx, label):
    j = cx.labels2.index(label)
    return {x: cx.d2[i, j] for i, x in enumerate(cx.labels1) if cx.d2[i, j]}


def _check_against_oracle(cx, h):
    """Free ranks always; torsion by minors when small, and its p-rank for small p."""
    for (rank, tors), H in zip(homology_oracle(cx.d1.tolist(), cx.d2.tolist(), *cx.dims), h):
        assert H.free_rank == rank
        if tors is not None:
            assert H.torsion == AbelianInvariants.from_cyclic(0, tors).torsion
    n0, n1, n2 = cx.dims
    for p in (2, 3, 5, 7):
        for M, H, ok in ((cx.d1, h.H0, n0 and n1), (cx.d2, h.H1, n1 and n2)):
            if ok:
                rows = M.tolist()
                drop = rational_rank(rows) - mod_p_rank(rows, p)
                assert sum(1 for d in H.torsion if d % p == 0) == drop


def test_graph_complexes():
    loop = validate_graph(["v"], [("a", "v", "v")])
    assert tuple(homology(chain_complex_graph(loop))) == (Z, Z, ZERO)
    pair = validate_graph(["u", "v"], [])
    assert homology(chain_complex_graph(pair)).H0 == AbelianInvariants(2)
    F = build_extex1().F
    h = homology(chain_complex_graph(F))
    assert (h.H0, h.H1) == (Z, AbelianInvariants(2))


def test_extex1_boundaries():
    cx = chain_complex_textile(build_extex1())
    assert _column(cx, "c1") == {"a2": 1, "a1": -1}
    assert _column(cx, "c2") == {"a1": 1, "a2": -1}
    assert _column(cx, "l2") == {"b1": 1, "b2": -1}
    assert tuple(homology(cx)) == (Z, AbelianInvariants(2), Z)


def test_quantum_boundaries():
    cx = chain_complex_textile(build_quantum3sphere())
    assert cx.labels1 == ("a", "b", "c", "u", "v", "w")
    assert _column(cx, "a") == {}
    assert _column(cx, "b") == {"a": 1, "b": -1}
    assert _column(cx, "c") == {"v": 1, "u": -1}


def test_sphere_and_projective_plane():
    cg, C = build_sphere()
    cx = chain_complex_2graph(cg, C)
    assert _column(cx, "alpha") == {"c": 1, "e": 1, "a": -1, "g": -1}
    assert tuple(homology(cx)) == (Z, ZERO, Z)
    assert tuple(homology(chain_complex_textile(build_sphere_textile()))) == (Z, ZERO, Z)
    cg, C = build_projective_plane()
    assert tuple(homology(chain_complex_2graph(cg, C))) == (Z, AbelianInvariants(0, (2,)), ZERO)


def test_single_square_loop():
    g = validate_graph(["v"], [("a", "v", "v"), ("b", "v", "v")])
    cg = validate_coloured(g, 2, {"a": 1, "b": 2})
    C = make_square_set(cg, [{"i": 1, "j": 2, "f": "a", "g": "b", "gp": "b", "fp": "a"}])
    cx = chain_complex_2graph(cg, C)
    assert cx.d2.is_zero()
    assert homology(cx).H2 == Z


def test_2graph_requires_complete():
    cg, C = build_sphere()
    with pytest.raises(IncompleteSquares):
        chain_complex_2graph(cg, SquareSet(C.squares[:3]))


def test_not_a_complex():
    with pytest.raises(NotAComplex):
        ChainComplex(("v",), ("a",), ("s",), IntMatrix.from_rows([[1]]), IntMatrix.from_rows([[1]]))


def test_trails():
    F = build_sphere_textile().F
    assert trail((("alpha", 1), ("alpha", -1)), F.edge_names).coefficients == (0, 0, 0, 0)
    words = [
        (("alpha", 1), ("beta", -1), ("gamma", 1), ("delta", -1)),
        (("delta", -1), ("alpha", 1), ("beta", -1), ("gamma", 1)),
        (("gamma", 1), ("delta", -1), ("alpha", 1), ("beta", -1)),
        (("beta", -1), ("gamma", 1), ("delta", -1), ("alpha", 1)),
    ]
    for w in words:
        t = trail(w, F.edge_names)
        assert t.coefficients == (1, -1, 1, -1)
        assert str(t) == "alpha - beta + gamma - delta"
    with pytest.raises(UnknownBasisElement):
        trail((("zeta", 1),), F.edge_names)


def test_h2_generators_sphere():
    res = h2_circuit_generators(build_sphere_textile())
    assert [t.coefficients for t in res.trails] == [(1, -1, 1, -1)]
    assert res.spans_kernel


def test_h2_generators_extex1():
    res = h2_circuit_generators(build_extex1())
    assert [dict(zip(t.labels, t.coefficients)) for t in res.trails] == [{"c1": 1, "c2": 1, "l2": 0}]
    assert res.spans_kernel


def test_h2_generators_tree():
    E = validate_graph(["v"], [("b", "v", "v")])
    F = validate_graph(["x", "y"], [("f", "x", "y")])
    T = validate_textile(E, F, ({"x": "v", "y": "v"}, {"f": "b"}), ({"x": "v", "y": "v"}, {"f": "b"}))
    res = h2_circuit_generators(T)
    assert res.trails == [] and res.spans_kernel


def test_simple_circuits_counts():
    # a triangle with one doubled edge and a loop
    F = validate_graph(["x", "y", "z"], [("p", "y", "x"), ("q", "z", "y"), ("r", "x", "z"),
                                         ("p2", "y", "x"), ("l", "z", "z")])
    circuits = simple_circuits(F)
    assert sorted(sorted(x for x, _ in w) for w in circuits) == sorted(
        [["l"], ["p", "p2"], ["p", "q", "r"], ["p2", "q", "r"]])


def test_p_equals_q_textile():
    # with p = q: H0(T)=H0(E), H1(T)=H1(E)+H0(F), H2(T)=H1(F)
    E = validate_graph(["v"], [("b1", "v", "v"), ("b2", "v", "v")])
    F = validate_graph(["a1", "a2"], [("c1", "a1", "a2"), ("c2", "a2", "a1"),
                                      ("m1", "a1", "a1"), ("m2", "a2", "a2")])
    vm = {"a1": "v", "a2": "v"}
    em = {"c1": "b1", "c2": "b1", "m1": "b2", "m2": "b2"}
    T = validate_textile(E, F, (vm, em), (vm, em))
    hT, hE, hF = (homology(chain_complex_textile(T)), homology(chain_complex_graph(E)),
                  homology(chain_complex_graph(F)))
    assert hT.H0 == hE.H0
    assert hT.H1 == AbelianInvariants(hE.H1.free_rank + hF.H0.free_rank)
    assert hT.H2 == hF.H1


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**6))
def test_random_textile_complexes(seed):
    T = random_textile(random.Random(seed))
    cx = chain_complex_textile(T)
    assert (cx.d1 @ cx.d2).is_zero()
    _check_against_oracle(cx, homology(cx))
    res = h2_circuit_generators(T)
    # the circuit trails always lie in the kernel
    for t in res.trails:
        assert all(v == 0 for v in cx.d2.apply(t.coefficients))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_2graph_complex_matches_textile_complex(seed):
    cg, C = random_product_2graph(random.Random(seed))
    a = chain_complex_2graph(cg, C)
    b = chain_complex_textile(from_2graph(cg, C))
    assert a == b
    _check_against_oracle(a, homology(a))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_h1_is_abelianized_pi1(seed):
    cg, C = random_f2theta(random.Random(seed))
    assert abelianize(pi1(cg, C)) == homology(chain_complex_2graph(cg, C)).H1


def test_h2_generators_can_miss_the_kernel():
    # two loops of F whose p/q images are swapped: only their sum is a cycle of
    # the textile complex, and no single simple circuit satisfies p_* t = q_* t
    E = validate_graph(["x", "y"], [("a", "x", "x"), ("b", "y", "y")])
    F = validate_graph(["w0", "w1"], [("f", "w1", "w1"), ("g", "w0", "w0")])
    T = validate_textile(E, F, ({"w0": "y", "w1": "x"}, {"f": "a", "g": "b"}),
                         ({"w0": "x", "w1": "y"}, {"f": "b", "g": "a"}))
    assert homology(chain_complex_textile(T)).H2 == Z
    res = h2_circuit_generators(T)
    assert res.trails == [] and not res.spans_kernel
