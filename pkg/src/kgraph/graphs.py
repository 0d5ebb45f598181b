"""Finite directed multigraphs, paths, undirected words, morphisms and spanning trees.

Conventions
-----------
Every edge has a *range* ``r(e)`` and a *source* ``s(e)``; an arrow is drawn
from its source to its range.  A path ``mu_1 mu_2 ... mu_n`` is composable when
``s(mu_i) == r(mu_{i+1})``, so paths compose like morphisms: ``r(mu) = r(mu_1)``
and ``s(mu) = s(mu_n)``.

An undirected word is a tuple of letters ``(edge, exponent)`` with exponent
``+1`` or ``-1``.  The inverse letter ``(e, -1)`` has range ``s(e)`` and source
``r(e)``.  Vertex and edge identifiers are opaque strings, and the order in which
they were given is the canonical basis order used by every matrix downstream.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    DanglingEndpoint,
    Disconnected,
    DuplicateIdentifier,
    IntertwiningViolation,
    NotComposable,
    ValidationError,
)

Letter = tuple[str, int]
Word = tuple[Letter, ...]


class Edge(NamedTuple):
    name: str
    range: str
    source: str


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {e.name: e for e in self.edges})

    @property
    def edge_names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self.edges)

    def edge(self, name: str) -> Edge:
        return self._index[name]

    def has_edge(self, name: str) -> bool:
        return name in self._index

    def r(self, name: str) -> str:
        return self._index[name].range

    def s(self, name: str) -> str:
        return self._index[name].source

    def in_edges(self, v: str) -> list[str]:
        return [e.name for e in self.edges if e.range == v]

    def out_edges(self, v: str) -> list[str]:
        return [e.name for e in self.edges if e.source == v]

    def sources(self) -> list[str]:
        """Vertices receiving no edge."""
        hit = {e.range for e in self.edges}
        return [v for v in self.vertices if v not in hit]

    def sinks(self) -> list[str]:
        """Vertices emitting no edge."""
        hit = {e.source for e in self.edges}
        return [v for v in self.vertices if v not in hit]

    def subgraph(self, edge_names: Iterable[str]) -> DirectedGraph:
        keep = set(edge_names)
        return DirectedGraph(self.vertices, tuple(e for e in self.edges if e.name in keep))

    def as_raw(self) -> tuple[list[str], list[tuple[str, str, str]]]:
        return list(self.vertices), [tuple(e) for e in self.edges]


def validate_graph(vertices: Sequence[str], edges: Iterable) -> DirectedGraph:
    """Build a :class:`DirectedGraph` from a vertex list and ``(name, range, source)`` triples.

    All violations are collected before raising.  The empty graph is rejected.
    """
    vertices = [str(v) for v in vertices]
    edge_list = [Edge(*map(str, e)) for e in edges]
    duplicates, dangling = [], []
    if not vertices:
        duplicates.append(("vertex", "<empty graph>"))
    seen: set[str] = set()
    for v in vertices:
        if v in seen:
            duplicates.append(("vertex", v))
        seen.add(v)
    seen_e: set[str] = set()
    for e in edge_list:
        if e.name in seen_e:
            duplicates.append(("edge", e.name))
        seen_e.add(e.name)
        for which, v in (("range", e.range), ("source", e.source)):
            if v not in seen:
                dangling.append((e.name, which, v))
    if duplicates or dangling:
        violations = duplicates + dangling
        cls = DuplicateIdentifier if duplicates else DanglingEndpoint
        raise cls(f"invalid graph: {violations}", violations)
    return DirectedGraph(tuple(vertices), tuple(edge_list))


@dataclass(frozen=True)
class Path:
    edges: tuple[str, ...]
    range: str
    source: str


def check_path(g: DirectedGraph, edge_ids: Sequence[str]) -> Path:
    if not edge_ids:
        raise ValidationError("a path needs at least one edge")
    for name in edge_ids:
        if not g.has_edge(name):
            raise ValidationError(f"unknown edge {name!r}", [name])
    for i in range(1, len(edge_ids)):
        if g.s(edge_ids[i - 1]) != g.r(edge_ids[i]):
            raise NotComposable(i)
    return Path(tuple(edge_ids), g.r(edge_ids[0]), g.s(edge_ids[-1]))


# -- undirected words --------------------------------------------------------

def letter_range(g: DirectedGraph, letter: Letter) -> str:
    name, exp = letter
    return g.r(name) if exp == 1 else g.s(name)


def letter_source(g: DirectedGraph, letter: Letter) -> str:
    name, exp = letter
    return g.s(name) if exp == 1 else g.r(name)


def check_word(g: DirectedGraph, word: Word) -> tuple[str, str]:
    """Return ``(range, source)`` of a nonempty undirected word, checking composability."""
    if not word:
        raise ValidationError("empty word has no endpoints")
    for i in range(1, len(word)):
        if letter_source(g, word[i - 1]) != letter_range(g, word[i]):
            raise NotComposable(i)
    return letter_range(g, word[0]), letter_source(g, word[-1])


def inverse_word(word: Sequence[Letter]) -> Word:
    return tuple((x, -e) for x, e in reversed(word))


def free_reduce(word: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for x, e in word:
        if out and out[-1][0] == x and out[-1][1] == -e:
            out.pop()
        else:
            out.append((x, e))
    return tuple(out)


def cyclic_reduce(word: Iterable[Letter]) -> Word:
    w = list(free_reduce(word))
    i, j = 0, len(w) - 1
    while i < j and w[i][0] == w[j][0] and w[i][1] == -w[j][1]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1])


# -- morphisms ---------------------------------------------------------------

@dataclass(frozen=True)
class GraphMorphism:
    src: DirectedGraph
    dst: DirectedGraph
    vmap: Mapping[str, str]
    emap: Mapping[str, str]

    def __hash__(self):
        return hash((tuple(sorted(self.vmap.items())), tuple(sorted(self.emap.items()))))

    def __call__(self, name: str) -> str:
        return self.emap[name]

    def vertex(self, name: str) -> str:
        return self.vmap[name]

    def is_bijective(self) -> bool:
        return (len(set(self.vmap.values())) == len(self.dst.vertices) == len(self.src.vertices)
                and len(set(self.emap.values())) == len(self.dst.edges) == len(self.src.edges))


def validate_morphism(src: DirectedGraph, dst: DirectedGraph,
                      vmap: Mapping[str, str], emap: Mapping[str, str]) -> GraphMorphism:
    problems = []
    for v in src.vertices:
        if v not in vmap:
            problems.append((v, "vertex map undefined"))
        elif vmap[v] not in dst.vertices:
            problems.append((v, f"image {vmap[v]!r} is not a vertex"))
    for e in src.edges:
        if e.name not in emap:
            problems.append((e.name, "edge map undefined"))
        elif not dst.has_edge(emap[e.name]):
            problems.append((e.name, f"image {emap[e.name]!r} is not an edge"))
    if problems:
        raise ValidationError(f"maps are not total: {problems}", problems)
    for e in src.edges:
        img = emap[e.name]
        if dst.r(img) != vmap[e.range]:
            problems.append((e.name, "range"))
        if dst.s(img) != vmap[e.source]:
            problems.append((e.name, "source"))
    if problems:
        raise IntertwiningViolation(f"range/source not preserved: {problems}", problems)
    return GraphMorphism(src, dst, dict(vmap), dict(emap))


def identity_morphism(g: DirectedGraph) -> GraphMorphism:
    return GraphMorphism(g, g, {v: v for v in g.vertices}, {e: e for e in g.edge_names})


def compose(second: GraphMorphism, first: GraphMorphism) -> GraphMorphism:
    """``second ∘ first``, validated."""
    return validate_morphism(
        first.src, second.dst,
        {v: second.vmap[first.vmap[v]] for v in first.src.vertices},
        {e: second.emap[first.emap[e]] for e in first.src.edge_names},
    )


# -- connectivity and trees --------------------------------------------------

def _neighbours(g: DirectedGraph) -> dict[str, list[tuple[str, str]]]:
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in g.vertices}
    for e in g.edges:
        adj[e.range].append((e.name, e.source))
        if e.source != e.range:
            adj[e.source].append((e.name, e.range))
    return adj


def connected_components(g: DirectedGraph) -> list[list[str]]:
    adj = _neighbours(g)
    seen: set[str] = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp, todo = [], deque([v])
        seen.add(v)
        while todo:
            u = todo.popleft()
            comp.append(u)
            for _, w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        comps.append(comp)
    return comps


def is_connected(g: DirectedGraph) -> bool:
    return len(connected_components(g)) <= 1


@dataclass(frozen=True)
class SpanningTree:
    root: str
    edges: frozenset[str]
    # vertex -> (tree edge, exponent, parent); the letter has range `vertex` and source `parent`
    parent: Mapping[str, tuple[str, int, str]]

    def eta(self, v: str) -> Word:
        """The reduced tree word with range ``v`` and source the root."""
        out: list[Letter] = []
        while v != self.root:
            e, exp, u = self.parent[v]
            out.append((e, exp))
            v = u
        return tuple(out)


def spanning_tree(g: DirectedGraph, root: str | None = None,
                  edge_order: Sequence[str] | None = None) -> SpanningTree:
    """Breadth-first spanning tree of the underlying undirected graph.

    The tree grows one layer at a time; within a layer, edges are scanned in
    ``edge_order`` (default: canonical order) and the first edge reaching an
    unvisited vertex from the current frontier wins.
    """
    root = g.vertices[0] if root is None else root
    if root not in g.vertices:
        raise ValidationError(f"root {root!r} is not a vertex")
    if not is_connected(g):
        raise Disconnected("spanning tree requested for a disconnected graph")
    order = [g.edge(n) for n in (edge_order if edge_order is not None else g.edge_names)]
    visited = {root}
    frontier = {root}
    parent: dict[str, tuple[str, int, str]] = {}
    while frontier:
        nxt: set[str] = set()
        for e in order:
            if e.range in frontier and e.source not in visited:
                parent[e.source] = (e.name, -1, e.range)
                visited.add(e.source)
                nxt.add(e.source)
            elif e.source in frontier and e.range not in visited:
                parent[e.range] = (e.name, 1, e.source)
                visited.add(e.range)
                nxt.add(e.range)
        frontier = nxt
    return SpanningTree(root, frozenset(p[0] for p in parent.values()), parent)


def tree_path(t: SpanningTree, start: str, end: str) -> Word:
    """Reduced tree word with source ``start`` and range ``end``."""
    return free_reduce(t.eta(end) + inverse_word(t.eta(start)))
