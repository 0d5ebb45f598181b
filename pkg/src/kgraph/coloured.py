"""k-coloured graphs and collections of squares.

A square is recorded with its two colours ``i < j`` and the four edges it hits
in the model graph ``E_{k, e_i + e_j}``::

    f  = phi(eps_i^0)        g  = phi(eps_j^{e_i})      (the c_i c_j side, f g)
    gp = phi(eps_j^0)        fp = phi(eps_i^{e_j})      (the c_j c_i side, gp fp)

so the square records the commuting relation ``f g ~ gp fp``.
"""

from __future__ import annotations

import itertools
import warnings
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    Ambiguous,
    ColourMismatch,
    ColourOutOfRange,
    CornerMismatch,
    MissingColour,
    NoCandidate,
    SearchLimitExceeded,
    ValidationError,
)
from .graphs import DirectedGraph, GraphMorphism, validate_graph

DEFAULT_NODE_BUDGET = 10 ** 6


class UncheckedAssociativityWarning(UserWarning):
    """Raised for k >= 3, where only pairwise completeness is checked."""


@dataclass(frozen=True)
class ColouredGraph:
    graph: DirectedGraph
    k: int
    colour: Mapping[str, int]

    def __hash__(self):
        return hash((self.graph, self.k, tuple(sorted(self.colour.items()))))

    def edges_of_colour(self, i: int) -> list[str]:
        return [e for e in self.graph.edge_names if self.colour[e] == i]

    def colour_subgraph(self, i: int) -> DirectedGraph:
        return self.graph.subgraph(self.edges_of_colour(i))

    def paths(self, i: int, j: int) -> list[tuple[str, str]]:
        """All ``c_i c_j`` coloured paths ``(x, y)`` with ``s(x) = r(y)``."""
        g = self.graph
        out = []
        for x in self.edges_of_colour(i):
            for y in self.edges_of_colour(j):
                if g.s(x) == g.r(y):
                    out.append((x, y))
        return out


def validate_coloured(g: DirectedGraph, k: int, colour: Mapping[str, int]) -> ColouredGraph:
    if k < 1:
        raise ColourOutOfRange(f"colour count must be >= 1, got {k}", [k])
    missing = [e for e in g.edge_names if e not in colour]
    if missing:
        raise MissingColour(f"edges without a colour: {missing}", missing)
    bad = [(e, colour[e]) for e in g.edge_names if not (1 <= int(colour[e]) <= k)]
    if bad:
        raise ColourOutOfRange(f"colours outside 1..{k}: {bad}", bad)
    return ColouredGraph(g, int(k), {e: int(colour[e]) for e in g.edge_names})


@dataclass(frozen=True)
class Square:
    i: int
    j: int
    f: str
    g: str
    gp: str
    fp: str
    name: str | None = field(default=None, compare=False)

    @property
    def key(self) -> tuple:
        return (self.i, self.j, self.f, self.g, self.gp, self.fp)

    @property
    def label(self) -> str:
        return self.name if self.name is not None else f"{self.f}.{self.g}"

    def relator(self) -> tuple[tuple[str, int], ...]:
        """``f g fp^-1 gp^-1``."""
        return ((self.f, 1), (self.g, 1), (self.fp, -1), (self.gp, -1))


@dataclass(frozen=True)
class SquareSet:
    squares: tuple[Square, ...]

    def __iter__(self):
        return iter(self.squares)

    def __len__(self):
        return len(self.squares)

    def keys(self) -> set[tuple]:
        return {s.key for s in self.squares}


def validate_square(cg: ColouredGraph, i: int, j: int, f: str, g: str, gp: str, fp: str,
                    name: str | None = None) -> Square:
    """Check colours and the four corners; squares with ``i > j`` are normalised to ``i < j``."""
    if i == j:
        raise ColourMismatch(f"a square needs two distinct colours, got {i}, {j}", [(i, j)])
    if i > j:
        i, j, f, g, gp, fp = j, i, gp, fp, f, g
    graph = cg.graph
    unknown = [x for x in (f, g, gp, fp) if not graph.has_edge(x)]
    if unknown:
        raise ValidationError(f"unknown edges {unknown}", unknown)
    wrong = [(x, want) for x, want in ((f, i), (fp, i), (g, j), (gp, j)) if cg.colour[x] != want]
    if wrong:
        raise ColourMismatch(f"colour mismatch {wrong}", wrong)
    r, s = graph.r, graph.s
    for which, a, b in (("r(f)=r(gp)", r(f), r(gp)), ("s(f)=r(g)", s(f), r(g)),
                        ("s(gp)=r(fp)", s(gp), r(fp)), ("s(g)=s(fp)", s(g), s(fp))):
        if a != b:
            raise CornerMismatch(which, f"corner {which} fails: {a!r} != {b!r}")
    return Square(i, j, f, g, gp, fp, name)


def make_square_set(cg: ColouredGraph, raw: Iterable) -> SquareSet:
    """Validate raw squares given as mappings or :class:`Square` records."""
    out = []
    for sq in raw:
        if isinstance(sq, Square):
            sq = {k: getattr(sq, k) for k in ("i", "j", "f", "g", "gp", "fp", "name")}
        out.append(validate_square(cg, int(sq["i"]), int(sq["j"]), sq["f"], sq["g"], sq["gp"],
                                   sq["fp"], sq.get("name")))
    dup = [k for k, n in Counter(s.key for s in out).items() if n > 1]
    if dup:
        raise ValidationError(f"repeated squares {dup}", dup)
    return SquareSet(tuple(out))


def model_graph(k: int, m: Sequence[int]) -> ColouredGraph:
    """The model coloured graph ``E_{k,m}``: lattice points ``0 <= n <= m`` with unit steps."""
    m = tuple(int(x) for x in m)
    if len(m) != k or any(x < 0 for x in m):
        raise ValueError(f"need a nonnegative {k}-tuple, got {m}")
    points = list(itertools.product(*(range(x + 1) for x in m)))
    vname = lambda n: "(" + ",".join(map(str, n)) + ")"
    edges, colour = [], {}
    for i in range(k):
        for n in points:
            if n[i] < m[i]:
                up = n[:i] + (n[i] + 1,) + n[i + 1:]
                name = f"eps{i + 1}^{vname(n)}"
                edges.append((name, vname(n), vname(up)))
                colour[name] = i + 1
    return validate_coloured(validate_graph([vname(n) for n in points], edges), k, colour)


@dataclass(frozen=True)
class CompletenessReport:
    complete: bool
    # entries: (i, j, "ij" or "ji", path, number of covering squares)
    uncovered: tuple = ()
    multiply_covered: tuple = ()
    warnings: tuple[str, ...] = ()


def check_complete(cg: ColouredGraph, squares: SquareSet) -> CompletenessReport:
    """Every ``c_i c_j`` path must be the ``(f, g)`` side of exactly one square and every
    ``c_j c_i`` path the ``(gp, fp)`` side of exactly one square."""
    uncovered, multiple, notes = [], [], []
    if cg.k >= 3:
        msg = "k >= 3: only pairwise completeness checked; cube conditions are not verified"
        warnings.warn(msg, UncheckedAssociativityWarning, stacklevel=2)
        notes.append(msg)
    for i, j in itertools.combinations(range(1, cg.k + 1), 2):
        sq = [s for s in squares if (s.i, s.j) == (i, j)]
        for order, paths, cover in (("ij", cg.paths(i, j), Counter((s.f, s.g) for s in sq)),
                                    ("ji", cg.paths(j, i), Counter((s.gp, s.fp) for s in sq))):
            for path in paths:
                n = cover.get(path, 0)
                if n == 0:
                    uncovered.append((i, j, order, path, 0))
                elif n > 1:
                    multiple.append((i, j, order, path, n))
    return CompletenessReport(not uncovered and not multiple, tuple(uncovered),
                              tuple(multiple), tuple(notes))


def deduce_squares(cg: ColouredGraph) -> SquareSet:
    """Pair each two-coloured path with the unique path of the opposite colour order
    sharing its range and source."""
    g = cg.graph
    out = []
    for i, j in itertools.combinations(range(1, cg.k + 1), 2):
        ij, ji = cg.paths(i, j), cg.paths(j, i)
        corners_ji = defaultdict(list)
        for gp, fp in ji:
            corners_ji[(g.r(gp), g.s(fp))].append((gp, fp))
        corners_ij = defaultdict(list)
        for f, gg in ij:
            corners_ij[(g.r(f), g.s(gg))].append((f, gg))
        for path, corners, other in [(p, (g.r(p[0]), g.s(p[1])), corners_ji) for p in ij] + \
                                    [(p, (g.r(p[0]), g.s(p[1])), corners_ij) for p in ji]:
            cands = other.get(corners, [])
            if not cands:
                raise NoCandidate(path)
            if len(cands) > 1:
                raise Ambiguous(path, cands)
        for f, gg in ij:
            (gp, fp), = corners_ji[(g.r(f), g.s(gg))]
            out.append(validate_square(cg, i, j, f, gg, gp, fp))
    return SquareSet(tuple(out))


# -- square isomorphism ------------------------------------------------------

def _profile(cg: ColouredGraph, v: str) -> tuple:
    g = cg.graph
    prof = []
    for c in range(1, cg.k + 1):
        es = cg.edges_of_colour(c)
        prof.append((sum(g.r(e) == v for e in es), sum(g.s(e) == v for e in es),
                     sum(g.r(e) == v == g.s(e) for e in es)))
    return tuple(prof)


def _bfs_order(g: DirectedGraph) -> list[str]:
    adj = defaultdict(list)
    for e in g.edges:
        adj[e.range].append(e.source)
        adj[e.source].append(e.range)
    order, seen = [], set()
    for start in g.vertices:
        if start in seen:
            continue
        todo = [start]
        seen.add(start)
        while todo:
            u = todo.pop(0)
            order.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
    return order


def square_isomorphism(a: tuple[ColouredGraph, SquareSet], b: tuple[ColouredGraph, SquareSet],
                       budget: int = DEFAULT_NODE_BUDGET) -> GraphMorphism | None:
    """Find a colour-preserving graph isomorphism carrying the squares of ``a`` onto those of ``b``.

    Backtracking assigns vertices first (pruned by per-colour degree profiles and
    edge multiplicities between assigned vertices), then matches parallel edges,
    checking each square as soon as its four edges are assigned.  Returns ``None``
    once the search space is exhausted.
    """
    (ca, sa), (cb, sb) = a, b
    ga, gb = ca.graph, cb.graph
    if (ca.k != cb.k or len(ga.vertices) != len(gb.vertices) or len(ga.edges) != len(gb.edges)
            or len(sa) != len(sb)):
        return None
    if Counter(ca.colour.values()) != Counter(cb.colour.values()):
        return None
    if Counter((s.i, s.j) for s in sa) != Counter((s.i, s.j) for s in sb):
        return None
    pa = {v: _profile(ca, v) for v in ga.vertices}
    pb = {v: _profile(cb, v) for v in gb.vertices}
    if Counter(pa.values()) != Counter(pb.values()):
        return None

    def bundles(cg):
        out = defaultdict(list)
        for e in cg.graph.edges:
            out[(cg.colour[e.name], e.range, e.source)].append(e.name)
        return out

    bun_a, bun_b = bundles(ca), bundles(cb)
    mult_a = {k: len(v) for k, v in bun_a.items()}
    mult_b = {k: len(v) for k, v in bun_b.items()}
    colours = range(1, ca.k + 1)
    vorder = _bfs_order(ga)
    keys_b = sb.keys()
    nodes = 0

    def tick():
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchLimitExceeded(f"square isomorphism search exceeded {budget} nodes")

    vmap: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v, w):
        for u, x in list(vmap.items()) + [(v, w)]:
            for c in colours:
                if mult_a.get((c, v, u), 0) != mult_b.get((c, w, x), 0):
                    return False
                if mult_a.get((c, u, v), 0) != mult_b.get((c, x, w), 0):
                    return False
        return True

    # edges in an order that closes squares early
    eorder: list[str] = []
    for s in sa:
        for e in (s.f, s.g, s.gp, s.fp):
            if e not in eorder:
                eorder.append(e)
    eorder += [e for e in ga.edge_names if e not in eorder]
    pos = {e: n for n, e in enumerate(eorder)}
    closing = defaultdict(list)
    for s in sa:
        closing[max(pos[e] for e in (s.f, s.g, s.gp, s.fp))].append(s)

    emap: dict[str, str] = {}
    eused: set[str] = set()

    def match_edges(n):
        if n == len(eorder):
            return True
        e = eorder[n]
        ed = ga.edge(e)
        for img in bun_b[(ca.colour[e], vmap[ed.range], vmap[ed.source])]:
            if img in eused:
                continue
            tick()
            emap[e] = img
            eused.add(img)
            if all((s.i, s.j, emap[s.f], emap[s.g], emap[s.gp], emap[s.fp]) in keys_b
                   for s in closing[n]) and match_edges(n + 1):
                return True
            del emap[e]
            eused.discard(img)
        return False

    def match_vertices(n):
        if n == len(vorder):
            return match_edges(0)
        v = vorder[n]
        for w in gb.vertices:
            if w in used or pb[w] != pa[v]:
                continue
            tick()
            if not consistent(v, w):
                continue
            vmap[v] = w
            used.add(w)
            if match_vertices(n + 1):
                return True
            del vmap[v]
            used.discard(w)
        return False

    if not match_vertices(0):
        return None
    return GraphMorphism(ga, gb, dict(vmap), {e: emap[e] for e in ga.edge_names})


def apply_to_square(phi: GraphMorphism, s: Square) -> tuple:
    return (s.i, s.j, phi(s.f), phi(s.g), phi(s.gp), phi(s.fp))
