"""Integral chain complexes of graphs, 2-graphs and textile systems, and their homology.

A complex is stored by its three ordered bases and the two boundary matrices;
matrices act on column vectors, one column per basis element of the domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .abelian import AbelianInvariants, IntMatrix, cokernel, lattice_is_saturated, snf
from .coloured import ColouredGraph, SquareSet, check_complete
from .errors import EnumerationLimitExceeded, IncompleteSquares, NotAComplex, UnknownBasisElement
from .graphs import DirectedGraph, Word, check_word

DEFAULT_CIRCUIT_LIMIT = 100_000


@dataclass(frozen=True)
class ChainComplex:
    labels0: tuple[str, ...]
    labels1: tuple[str, ...]
    labels2: tuple[str, ...]
    d1: IntMatrix
    d2: IntMatrix

    def __post_init__(self):
        n0, n1, n2 = len(self.labels0), len(self.labels1), len(self.labels2)
        if (self.d1.rows, self.d1.cols) != (n0, n1) or (self.d2.rows, self.d2.cols) != (n1, n2):
            raise NotAComplex("boundary matrix shapes do not match the bases")
        if not (self.d1 @ self.d2).is_zero():
            raise NotAComplex("d1 @ d2 is not zero")

    @property
    def dims(self) -> tuple[int, int, int]:
        return len(self.labels0), len(self.labels1), len(self.labels2)


def _column_matrix(rows: int, columns: list[list[int]]) -> IntMatrix:
    return IntMatrix.from_rows([[c[i] for c in columns] for i in range(rows)], len(columns))


def _graph_columns(vertices, edges, index=None):
    index = index or {v: i for i, v in enumerate(vertices)}
    cols = []
    for _, r, s in edges:
        col = [0] * len(index)
        col[index[s]] += 1
        col[index[r]] -= 1
        cols.append(col)
    return cols


def chain_complex_graph(E: DirectedGraph) -> ChainComplex:
    """``d1(e) = s(e) - r(e)``; no 2-cells."""
    d1 = _column_matrix(len(E.vertices), _graph_columns(E.vertices, E.edges))
    return ChainComplex(E.vertices, E.edge_names, (), d1, IntMatrix.zeros(len(E.edges), 0))


def chain_complex_textile(T) -> ChainComplex:
    """Bases ``E^0``; ``E^1`` then ``F^0``; ``F^1``.

    ``d1(w) = p(w) - q(w)`` on ``F^0`` and
    ``d2(f) = (q(f) - p(f)) + (s_F(f) - r_F(f))``.
    """
    E, F, p, q = T.E, T.F, T.p, T.q
    labels1 = E.edge_names + F.vertices
    edges = list(E.edges) + [(w, q.vertex(w), p.vertex(w)) for w in F.vertices]
    d1 = _column_matrix(len(E.vertices), _graph_columns(E.vertices, edges))
    idx = {x: i for i, x in enumerate(labels1)}
    cols = []
    for f in F.edges:
        col = [0] * len(labels1)
        col[idx[q(f.name)]] += 1
        col[idx[p(f.name)]] -= 1
        col[idx[f.source]] += 1
        col[idx[f.range]] -= 1
        cols.append(col)
    return ChainComplex(E.vertices, labels1, F.edge_names, d1, _column_matrix(len(labels1), cols))


def chain_complex_2graph(cg: ColouredGraph, C: SquareSet) -> ChainComplex:
    """Bases: vertices; edges (blue first, then red); squares.  ``d2 = f + g - fp - gp``."""
    if not check_complete(cg, C).complete:
        raise IncompleteSquares("the square collection is not complete")
    g = cg.graph
    order = cg.edges_of_colour(1) + [e for e in g.edge_names if cg.colour[e] != 1]
    d1 = _column_matrix(len(g.vertices), _graph_columns(g.vertices, [g.edge(e) for e in order]))
    idx = {x: i for i, x in enumerate(order)}
    cols = []
    for s in C:
        col = [0] * len(order)
        for x, sign in ((s.f, 1), (s.g, 1), (s.fp, -1), (s.gp, -1)):
            col[idx[x]] += sign
        cols.append(col)
    return ChainComplex(g.vertices, tuple(order), tuple(s.label for s in C), d1,
                        _column_matrix(len(order), cols))


class Homology(NamedTuple):
    H0: AbelianInvariants
    H1: AbelianInvariants
    H2: AbelianInvariants

    def as_dict(self) -> dict:
        return {"H0": self.H0.as_dict(), "H1": self.H1.as_dict(), "H2": self.H2.as_dict()}


def homology(cx: ChainComplex) -> Homology:
    n0, n1, n2 = cx.dims
    if not (cx.d1 @ cx.d2).is_zero():
        raise NotAComplex("d1 @ d2 is not zero")
    H0 = cokernel(cx.d1)
    H2 = AbelianInvariants(n2 - snf(cx.d2).rank)
    # Kernel of d1 is spanned by the last n1 - r columns of V; in those
    # coordinates the image of d2 is given by the matching rows of V^{-1} d2.
    res = snf(cx.d1, with_transforms=True)
    r = res.rank
    X = res.V_inv @ cx.d2
    if any(X[i, j] for i in range(r) for j in range(n2)):
        raise NotAComplex("image of d2 is not inside the kernel of d1")
    X = IntMatrix.from_rows([X.entries[i] for i in range(r, n1)], n2)
    return Homology(H0, cokernel(X), H2)


# -- trails -------------------------------------------------------------------

@dataclass(frozen=True)
class Trail:
    """Signed edge count of an undirected word, over an ordered basis."""

    labels: tuple[str, ...]
    coefficients: tuple[int, ...]
    word: Word = ()

    def __str__(self):
        out = ""
        for x, c in zip(self.labels, self.coefficients):
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if out else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            out += (f" {sign} " if out else sign) + f"{mag}{x}"
        return out or "0"

    def as_dict(self) -> dict:
        return {"trail": {x: c for x, c in zip(self.labels, self.coefficients) if c},
                "word": [[x, e] for x, e in self.word]}


def trail(w: Sequence, basis) -> Trail:
    """Trail of ``w`` over ``basis``: a label sequence, or a complex (its C_1 basis)."""
    labels = tuple(basis.labels1 if isinstance(basis, ChainComplex) else basis)
    idx = {x: i for i, x in enumerate(labels)}
    vec = [0] * len(labels)
    for x, e in w:
        if x not in idx:
            raise UnknownBasisElement(f"{x!r} is not a basis element")
        vec[idx[x]] += e
    return Trail(labels, tuple(vec), tuple(w))


class CircuitGenerators(NamedTuple):
    trails: list[Trail]
    spans_kernel: bool


def simple_circuits(F: DirectedGraph, limit: int = DEFAULT_CIRCUIT_LIMIT) -> list[Word]:
    """Simple closed undirected words in ``F``, one per edge set.

    Each circuit starts at its least vertex (canonical order); loops are circuits
    of length one and two distinct parallel edges form a circuit of length two.
    """
    pos = {v: i for i, v in enumerate(F.vertices)}
    adj: dict[str, list[tuple[str, int, str]]] = {v: [] for v in F.vertices}
    out: list[Word] = []
    seen: set[frozenset] = set()

    def emit(word):
        key = frozenset(x for x, _ in word)
        if key not in seen:
            seen.add(key)
            out.append(tuple(word))
            if len(out) > limit:
                raise EnumerationLimitExceeded(f"more than {limit} simple circuits")

    for e in F.edges:
        if e.range == e.source:
            emit([(e.name, 1)])
            continue
        # from the range side the letter (e, +1) steps to the source
        adj[e.range].append((e.name, 1, e.source))
        adj[e.source].append((e.name, -1, e.range))

    for start in F.vertices:
        lo = pos[start]
        word: list = []
        on_path = {start}

        def dfs(u):
            for name, exp, w in adj[u]:
                if any(x == name for x, _ in word):
                    continue
                if w == start and word:
                    emit(word + [(name, exp)])
                elif w not in on_path and pos[w] > lo:
                    on_path.add(w)
                    word.append((name, exp))
                    dfs(w)
                    word.pop()
                    on_path.discard(w)

        dfs(start)
    return out


def h2_circuit_generators(T, limit: int = DEFAULT_CIRCUIT_LIMIT) -> CircuitGenerators:
    """Trails of simple circuits in ``F`` whose pushforwards along ``p`` and ``q`` agree.

    Trails are signed so the first nonzero coefficient is positive.
    ``spans_kernel`` says whether they generate ``ker d2`` of the textile complex.
    """
    F = T.F
    kept = []
    for word in simple_circuits(F, limit):
        check_word(F, word)
        t = trail(word, F.edge_names)
        first = next(c for c in t.coefficients if c)
        if first < 0:
            t = Trail(t.labels, tuple(-c for c in t.coefficients),
                      tuple((x, -e) for x, e in reversed(word)))
        push_p: dict[str, int] = {}
        push_q: dict[str, int] = {}
        for x, c in zip(t.labels, t.coefficients):
            if c:
                push_p[T.p(x)] = push_p.get(T.p(x), 0) + c
                push_q[T.q(x)] = push_q.get(T.q(x), 0) + c
        if {k: v for k, v in push_p.items() if v} == {k: v for k, v in push_q.items() if v}:
            kept.append(t)
    cx = chain_complex_textile(T)
    n2 = len(F.edges)
    kernel_rank = n2 - snf(cx.d2).rank
    if not kept:
        return CircuitGenerators([], kernel_rank == 0)
    M = IntMatrix.from_rows([[t.coefficients[i] for t in kept] for i in range(n2)], len(kept))
    spans = M.rank() == kernel_rank and lattice_is_saturated(M)
    return CircuitGenerators(kept, spans)
