import random
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import random_f2theta, random_product_2graph
from kgraph.coloured import (
    Square,
    SquareSet,
    UncheckedAssociativityWarning,
    check_complete,
    deduce_squares,
    make_square_set,
    model_graph,
    square_isomorphism,
    validate_coloured,
    validate_square,
)
from kgraph.corpus import build_f2theta, build_projective_plane, build_sphere
from kgraph.errors import (
    Ambiguous,
    ColourMismatch,
    ColourOutOfRange,
    CornerMismatch,
    MissingColour,
    NoCandidate,
    SearchLimitExceeded,
    ValidationError,
)
from kgraph.graphs import validate_graph


def test_colour_validation():
    g = validate_graph(["v"], [("a", "v", "v"), ("b", "v", "v")])
    with pytest.raises(MissingColour):
        validate_coloured(g, 2, {"a": 1})
    with pytest.raises(ColourOutOfRange):
        validate_coloured(g, 2, {"a": 1, "b": 3})
    cg = validate_coloured(g, 2, {"a": 1, "b": 2})
    assert cg.edges_of_colour(2) == ["b"]


def test_square_checks():
    cg, _ = build_sphere()
    s = validate_square(cg, 1, 2, "c", "e", "g", "a")
    assert s.relator() == (("c", 1), ("e", 1), ("a", -1), ("g", -1))
    with pytest.raises(ColourMismatch):
        validate_square(cg, 1, 2, "e", "c", "g", "a")
    with pytest.raises(CornerMismatch):
        validate_square(cg, 1, 2, "c", "e", "h", "a")
    flipped = validate_square(cg, 2, 1, "g", "a", "c", "e")
    assert flipped.key == s.key


def test_model_graph():
    m = model_graph(2, (1, 1))
    assert len(m.graph.vertices) == 4 and len(m.graph.edges) == 4
    assert m.graph.r("eps1^(0,0)") == "(0,0)" and m.graph.s("eps1^(0,0)") == "(1,0)"
    assert len(model_graph(3, (1, 1, 1)).graph.edges) == 12


def test_sphere_squares_complete_and_deducible():
    cg, C = build_sphere()
    assert check_complete(cg, C).complete
    assert deduce_squares(cg).keys() == C.keys()


def test_projective_plane_not_deducible():
    cg, C = build_projective_plane()
    assert check_complete(cg, C).complete
    with pytest.raises(Ambiguous):
        deduce_squares(cg)


def test_missing_square_detected():
    cg, C = build_sphere()
    partial = SquareSet(C.squares[1:])
    rep = check_complete(cg, partial)
    assert not rep.complete
    assert (1, 2, "ij", ("c", "e"), 0) in rep.uncovered
    assert (1, 2, "ji", ("g", "a"), 0) in rep.uncovered


def test_deduce_no_candidate():
    g = validate_graph(["00", "10", "01", "11"],
                       [("e", "00", "10"), ("f", "10", "11")])
    cg = validate_coloured(g, 2, {"e": 1, "f": 2})
    with pytest.raises(NoCandidate):
        deduce_squares(cg)


def test_repeated_square_rejected():
    cg, C = build_sphere()
    raw = [C.squares[0], C.squares[0]]
    with pytest.raises(ValidationError):
        make_square_set(cg, raw)


def test_k3_warns():
    cg = model_graph(3, (1, 1, 1))
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        rep = check_complete(cg, deduce_squares(cg))
    assert rep.complete
    assert any(issubclass(x.category, UncheckedAssociativityWarning) for x in w)


def test_f2theta_isomorphism_classes():
    ident = build_f2theta(2, 2, lambda i, j: (i, j))
    flip = build_f2theta(2, 2, lambda i, j: (j, i))
    assert square_isomorphism(ident, ident) is not None
    assert square_isomorphism(ident, flip) is None


def test_isomorphism_budget():
    a = build_f2theta(3, 3, lambda i, j: (i, j))
    with pytest.raises(SearchLimitExceeded):
        square_isomorphism(a, a, budget=2)


def _relabel(cg, C, rng):
    g = cg.graph
    vs = list(g.vertices)
    es = list(g.edge_names)
    rng.shuffle(vs)
    rng.shuffle(es)
    vmap = {v: f"V{i}" for i, v in enumerate(vs)}
    emap = {e: f"E{i}" for i, e in enumerate(es)}
    order = list(g.edges)
    rng.shuffle(order)
    g2 = validate_graph([vmap[v] for v in vs],
                        [(emap[e.name], vmap[e.range], vmap[e.source]) for e in order])
    cg2 = validate_coloured(g2, cg.k, {emap[e]: c for e, c in cg.colour.items()})
    C2 = SquareSet(tuple(Square(s.i, s.j, emap[s.f], emap[s.g], emap[s.gp], emap[s.fp])
                         for s in C))
    return cg2, C2


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_random_products_are_complete_and_self_isomorphic(seed):
    rng = random.Random(seed)
    cg, C = random_product_2graph(rng)
    assert check_complete(cg, C).complete
    cg2, C2 = _relabel(cg, C, rng)
    phi = square_isomorphism((cg, C), (cg2, C2))
    assert phi is not None
    images = {(s.i, s.j, phi(s.f), phi(s.g), phi(s.gp), phi(s.fp)) for s in C}
    assert images == C2.keys()


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_random_f2theta_complete(seed):
    cg, C = random_f2theta(random.Random(seed))
    assert check_complete(cg, C).complete
    # dropping any square breaks completeness
    assert not check_complete(cg, SquareSet(C.squares[1:])).complete
