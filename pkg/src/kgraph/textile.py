"""Textile systems ``T = (E, F, p, q)`` and their passage to and from 2-coloured graphs.

``G_T`` has vertices ``E^0``, blue (colour 1) edges ``E^1`` and red (colour 2)
edges ``F^0``, a red edge ``w`` running from ``p(w)`` to ``q(w)``.  Each ``f`` in
``F^1`` gives the square ``q(f) s_F(f) ~ r_F(f) p(f)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .coloured import (
    DEFAULT_NODE_BUDGET,
    ColouredGraph,
    Square,
    SquareSet,
    check_complete,
    square_isomorphism,
    validate_coloured,
    validate_square,
)
from .errors import (
    IdentifierCollision,
    IncompleteSquares,
    InjectivityViolation,
    InternalConsistencyError,
    ValidationError,
)
from .graphs import (
    DirectedGraph,
    GraphMorphism,
    compose,
    identity_morphism,
    validate_graph,
    validate_morphism,
)

BLUE_PREFIX, RED_PREFIX = "b:", "r:"


@dataclass(frozen=True)
class TextileSystem:
    E: DirectedGraph
    F: DirectedGraph
    p: GraphMorphism
    q: GraphMorphism

    def __hash__(self):
        return hash((self.E, self.F, self.p, self.q))

    def name_collisions(self) -> set[str]:
        return set(self.E.edge_names) & set(self.F.vertices)


def _as_morphism(F, E, m) -> GraphMorphism:
    if isinstance(m, GraphMorphism):
        return validate_morphism(F, E, m.vmap, m.emap)
    vmap, emap = m
    return validate_morphism(F, E, vmap, emap)


def validate_textile(E: DirectedGraph, F: DirectedGraph, p, q) -> TextileSystem:
    """``p`` and ``q`` are :class:`GraphMorphism` objects or ``(vertex_map, edge_map)`` pairs."""
    p, q = _as_morphism(F, E, p), _as_morphism(F, E, q)
    seen: dict[tuple, str] = {}
    for f in F.edges:
        quad = (p(f.name), q(f.name), f.range, f.source)
        if quad in seen:
            raise InjectivityViolation(seen[quad], f.name)
        seen[quad] = f.name
    return TextileSystem(E, F, p, q)


# -- path lifting ------------------------------------------------------------

class LiftingCase(NamedTuple):
    has_lifting: bool
    unique: bool
    # (E-edge, F-vertex, number of lifts) for every pair with zero or several lifts
    counterexamples: tuple


@dataclass(frozen=True)
class LiftingReport:
    cases: Mapping[tuple[str, str], LiftingCase]

    def __getitem__(self, key: tuple[str, str]) -> LiftingCase:
        return self.cases[key]


def _lifting_case(T: TextileSystem, which: str, side: str) -> LiftingCase:
    phi = T.p if which == "p" else T.q
    E, F = T.E, T.F
    end_E = E.r if side == "r" else E.s
    end_F = F.r if side == "r" else F.s
    bad = []
    for w in F.vertices:
        for e in E.edge_names:
            if end_E(e) != phi.vertex(w):
                continue
            n = sum(1 for f in F.edge_names if end_F(f) == w and phi(f) == e)
            if n != 1:
                bad.append((e, w, n))
    has = all(n >= 1 for _, _, n in bad)
    return LiftingCase(has, not bad, tuple(bad))


def lifting(T: TextileSystem) -> LiftingReport:
    return LiftingReport({(m, s): _lifting_case(T, m, s) for m in "pq" for s in "rs"})


# -- to / from coloured graphs ----------------------------------------------

@dataclass(frozen=True)
class ColouredView:
    """``(G_T, C_T)`` together with the names used for E-edges and F-vertices."""

    graph: ColouredGraph
    squares: SquareSet
    blue: Mapping[str, str] = field(compare=False)
    red: Mapping[str, str] = field(compare=False)


def coloured_view(T: TextileSystem, disambiguate: bool = True) -> ColouredView:
    clash = T.name_collisions()
    if clash and not disambiguate:
        raise IdentifierCollision(clash)
    bp, rp = (BLUE_PREFIX, RED_PREFIX) if clash else ("", "")
    blue = {e: bp + e for e in T.E.edge_names}
    red = {w: rp + w for w in T.F.vertices}
    edges = [(blue[e.name], e.range, e.source) for e in T.E.edges]
    edges += [(red[w], T.q.vertex(w), T.p.vertex(w)) for w in T.F.vertices]
    colour = {**{b: 1 for b in blue.values()}, **{r: 2 for r in red.values()}}
    cg = validate_coloured(validate_graph(T.E.vertices, edges), 2, colour)
    squares = SquareSet(tuple(
        validate_square(cg, 1, 2, blue[T.q(f.name)], red[f.source], red[f.range],
                        blue[T.p(f.name)], name=f.name)
        for f in T.F.edges))
    return ColouredView(cg, squares, blue, red)


def to_coloured(T: TextileSystem, disambiguate: bool = False) -> tuple[ColouredGraph, SquareSet]:
    """``(G_T, C_T)``; squares carry the name of the F-edge they come from.

    If E-edge and F-vertex names clash, raises :class:`IdentifierCollision` unless
    ``disambiguate`` is set, in which case blue names get ``b:`` and red names ``r:``.
    """
    v = coloured_view(T, disambiguate)
    return v.graph, v.squares


class Admissibility(NamedTuple):
    admits: bool
    reason: str


def admits_2graph(T: TextileSystem) -> Admissibility:
    """Whether ``T`` comes from a 2-graph: ``p`` has unique r-path lifting and ``q``
    unique s-path lifting.  Cross-checked against completeness of ``C_T``."""
    rep = lifting(T)
    pr, qs = rep[("p", "r")], rep[("q", "s")]
    verdict = pr.unique and qs.unique
    cg, sq = to_coloured(T, disambiguate=True)
    if check_complete(cg, sq).complete != verdict:
        raise InternalConsistencyError("lifting criterion and square completeness disagree")
    if verdict:
        return Admissibility(True, "p has unique r-path lifting and q has unique s-path lifting")
    parts = []
    if not pr.unique:
        parts.append(f"p lacks unique r-path lifting at {list(pr.counterexamples)}")
    if not qs.unique:
        parts.append(f"q lacks unique s-path lifting at {list(qs.counterexamples)}")
    return Admissibility(False, "; ".join(parts))


def from_2graph(cg: ColouredGraph, C: SquareSet) -> TextileSystem:
    """The textile system ``T_Λ``: E is the blue subgraph, F has the red edges as
    vertices and the squares as edges."""
    if cg.k != 2:
        raise ValidationError(f"need a 2-coloured graph, got k={cg.k}")
    if not check_complete(cg, C).complete:
        raise IncompleteSquares("square collection is not complete")
    g = cg.graph
    E = cg.colour_subgraph(1)
    reds = cg.edges_of_colour(2)
    F = validate_graph(reds, [(s.label, s.gp, s.g) for s in C])
    p = validate_morphism(F, E, {w: g.s(w) for w in reds}, {s.label: s.fp for s in C})
    q = validate_morphism(F, E, {w: g.r(w) for w in reds}, {s.label: s.f for s in C})
    return validate_textile(E, F, p, q)


def hat_graph(T: TextileSystem) -> DirectedGraph:
    """The red graph ``(E^0, F^0, q^0, p^0)``."""
    return validate_graph(T.E.vertices, [(w, T.q.vertex(w), T.p.vertex(w)) for w in T.F.vertices])


# -- structural properties ---------------------------------------------------

@dataclass(frozen=True)
class PropertyReport:
    sources: Mapping[int, tuple[str, ...]]
    sinks: Mapping[int, tuple[str, ...]]
    essential: bool
    row_finite: bool
    max_in_degree: Mapping[int, int]
    admits_2graph: bool
    # None where the textile does not come from a 2-graph
    locally_convex: bool | None
    finitely_aligned: bool | None
    mce_table: Mapping[tuple[str, str], int] | None


def properties(T: TextileSystem) -> PropertyReport:
    E, Ehat = T.E, hat_graph(T)
    sources = {1: tuple(E.sources()), 2: tuple(Ehat.sources())}
    sinks = {1: tuple(E.sinks()), 2: tuple(Ehat.sinks())}
    essential = not any(sources.values()) and not any(sinks.values())
    indeg = {c: max(Counter(e.range for e in g.edges).values(), default=0)
             for c, g in ((1, E), (2, Ehat))}
    row_finite = all(isinstance(n, int) for n in indeg.values())
    admits = admits_2graph(T).admits
    if not admits:
        return PropertyReport(sources, sinks, essential, row_finite, indeg, False,
                              None, None, None)
    F, q = T.F, T.q
    locally_convex = True
    mce: dict[tuple[str, str], int] = {}
    for e in E.edge_names:
        for w in F.vertices:
            if q.vertex(w) != E.r(e):
                continue
            has_f1 = any(F.r(f) == w for f in F.edge_names)
            has_f2 = any(q(f) == e for f in F.edge_names)
            locally_convex &= has_f1 and has_f2
            mce[(e, w)] = sum(1 for f in F.edge_names if F.r(f) == w and q(f) == e)
    return PropertyReport(sources, sinks, essential, row_finite, indeg, True,
                          locally_convex, all(isinstance(n, int) for n in mce.values()), mce)


# -- morphisms and isomorphism -----------------------------------------------

@dataclass(frozen=True)
class TextileMorphism:
    phiE: GraphMorphism
    phiF: GraphMorphism


def validate_textile_morphism(S: TextileSystem, T: TextileSystem,
                              phiE: GraphMorphism, phiF: GraphMorphism) -> TextileMorphism:
    phiE = validate_morphism(S.E, T.E, phiE.vmap, phiE.emap)
    phiF = validate_morphism(S.F, T.F, phiF.vmap, phiF.emap)
    for a, b, which in ((S.p, T.p, "p"), (S.q, T.q, "q")):
        left, right = compose(phiE, a), compose(b, phiF)
        if dict(left.vmap) != dict(right.vmap) or dict(left.emap) != dict(right.emap):
            raise ValidationError(f"phiE∘{which}_S != {which}_T∘phiF")
    return TextileMorphism(phiE, phiF)


def identity_textile_morphism(T: TextileSystem) -> TextileMorphism:
    return TextileMorphism(identity_morphism(T.E), identity_morphism(T.F))


def textile_isomorphism(S: TextileSystem, T: TextileSystem,
                        budget: int = DEFAULT_NODE_BUDGET) -> TextileMorphism | None:
    """Search a square isomorphism ``(G_S, C_S) -> (G_T, C_T)`` and pull it back
    through the bijection between F-edges and squares."""
    vs, vt = coloured_view(S), coloured_view(T)
    psi = square_isomorphism((vs.graph, vs.squares), (vt.graph, vt.squares), budget)
    if psi is None:
        return None
    blue_back = {g: e for e, g in vt.blue.items()}
    red_back = {g: w for w, g in vt.red.items()}
    phiE = GraphMorphism(S.E, T.E, dict(psi.vmap),
                         {e: blue_back[psi(vs.blue[e])] for e in S.E.edge_names})
    fv = {w: red_back[psi(vs.red[w])] for w in S.F.vertices}
    by_key = {(s.f, s.g, s.gp, s.fp): s.name for s in vt.squares}
    fe = {s.name: by_key[(psi(s.f), psi(s.g), psi(s.gp), psi(s.fp))] for s in vs.squares}
    return validate_textile_morphism(S, T, phiE, GraphMorphism(S.F, T.F, fv, fe))


# -- constructors for standard families ---------------------------------------

def textile_from_maps(E: DirectedGraph, F: DirectedGraph,
                      p: tuple[Mapping, Mapping], q: tuple[Mapping, Mapping]) -> TextileSystem:
    return validate_textile(E, F, p, q)


def automorphism_textile(E: DirectedGraph, alpha: GraphMorphism) -> TextileSystem:
    """``T_{E,α} = (E, E, id, α)``."""
    return validate_textile(E, E, identity_morphism(E), alpha)


__all__ = [
    "TextileSystem", "validate_textile", "LiftingCase", "LiftingReport", "lifting",
    "ColouredView", "coloured_view", "to_coloured", "Admissibility", "admits_2graph",
    "from_2graph", "hat_graph", "PropertyReport", "properties", "TextileMorphism",
    "validate_textile_morphism", "identity_textile_morphism", "textile_isomorphism",
    "textile_from_maps", "automorphism_textile", "Square",
]
