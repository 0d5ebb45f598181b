"""Finite group presentations of fundamental groups, Tietze simplification and
abelianization.

Words are tuples of ``(generator, ±1)`` letters, the same representation used
for undirected words in :mod:`kgraph.graphs`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .abelian import AbelianInvariants, IntMatrix, snf
from .coloured import ColouredGraph, SquareSet
from .errors import BudgetExceeded, Disconnected, ValidationError
from .graphs import (
    DirectedGraph,
    SpanningTree,
    Word,
    cyclic_reduce,
    inverse_word,
    is_connected,
    spanning_tree,
)

DEFAULT_BUDGET = 10_000
DEFAULT_MAX_LENGTH = 10_000


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise ValidationError("repeated generator")
        rels = tuple(cyclic_reduce(r) for r in self.relators)
        bad = [x for r in rels for x, _ in r if x not in gens]
        if bad:
            raise ValidationError(f"relators mention unknown generators {sorted(set(bad))}")
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", rels)

    def as_dict(self) -> dict:
        return {"generators": list(self.generators),
                "relators": [format_word(r) for r in self.relators]}

    def __str__(self):
        return f"< {', '.join(self.generators)} | {', '.join(format_word(r) for r in self.relators)} >"


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(x if e == 1 else f"{x}^-1" for x, e in w)


# -- fundamental groups -------------------------------------------------------

def pi1_graph(g: DirectedGraph, tree: SpanningTree | None = None) -> GroupPresentation:
    """Free group on the edges outside a spanning tree."""
    if not is_connected(g):
        raise Disconnected("the fundamental group needs a connected graph")
    tree = tree or spanning_tree(g)
    return GroupPresentation(tuple(e for e in g.edge_names if e not in tree.edges), ())


def pi1(cg: ColouredGraph, C: SquareSet, base: str | None = None,
        tree: SpanningTree | None = None) -> GroupPresentation:
    """Generators: every edge.  Relators: each tree edge, and ``f g fp^-1 gp^-1`` per square."""
    g = cg.graph
    if not is_connected(g):
        raise Disconnected("the fundamental group needs a connected coloured graph")
    if tree is None:
        tree = spanning_tree(g, base)
    rels = [((e, 1),) for e in g.edge_names if e in tree.edges]
    rels += [s.relator() for s in C]
    return GroupPresentation(g.edge_names, tuple(rels))


def pi1_textile(T, base: str | None = None, tree: SpanningTree | None = None) -> GroupPresentation:
    from .textile import to_coloured

    cg, C = to_coloured(T, disambiguate=True)
    return pi1(cg, C, base, tree)


# -- Tietze simplification ---------------------------------------------------

def _canonical(w: Word) -> Word:
    """Representative of ``w`` up to cyclic permutation and inversion."""
    if not w:
        return w
    inv = inverse_word(w)
    return min(min(v[i:] + v[:i] for i in range(len(v))) for v in (w, inv))


def _substitute(w: Word, x: str, value: Word) -> Word:
    inv = inverse_word(value)
    out: list = []
    for y, e in w:
        if y == x:
            out.extend(value if e == 1 else inv)
        else:
            out.append((y, e))
    return cyclic_reduce(out)


def _tidy(rels) -> list[Word]:
    seen, out = set(), []
    for r in rels:
        r = cyclic_reduce(r)
        c = _canonical(r)
        if r and c not in seen:
            seen.add(c)
            out.append(r)
    return out


def tietze_simplify(p: GroupPresentation, budget: int = DEFAULT_BUDGET,
                    max_length: int = DEFAULT_MAX_LENGTH) -> GroupPresentation:
    """Repeatedly eliminate a generator occurring exactly once in some relator.

    Each move rewrites that relator as ``x = w`` and substitutes ``w`` for ``x``
    everywhere.  Shortest relators are tried first; a move that would push any
    relator past ``max_length`` letters is skipped.  Raises :class:`BudgetExceeded`
    (carrying the best presentation so far) after ``budget`` moves.
    """
    gens = list(p.generators)
    rels = _tidy(p.relators)
    moves = 0
    while True:
        done = _one_generator(gens, rels)
        if done is not None:
            rels = done
        move = None
        for ri in sorted(range(len(rels)), key=lambda i: len(rels[i])):
            r = rels[ri]
            counts = Counter(x for x, _ in r)
            for x in sorted((x for x, n in counts.items() if n == 1),
                            key=lambda x: (sum(y == x for rr in rels for y, _ in rr), gens.index(x))):
                k = next(i for i, (y, _) in enumerate(r) if y == x)
                rot = r[k:] + r[:k]
                rest = rot[1:]
                value = inverse_word(rest) if rot[0][1] == 1 else rest
                new = [_substitute(rr, x, value) for j, rr in enumerate(rels) if j != ri]
                if any(len(rr) > max_length for rr in new):
                    continue
                move = (x, new)
                break
            if move:
                break
        if move is None:
            return GroupPresentation(tuple(gens), tuple(rels))
        if moves >= budget:
            raise BudgetExceeded(GroupPresentation(tuple(gens), tuple(rels)))
        x, new = move
        gens.remove(x)
        rels = _tidy(new)
        moves += 1


def _one_generator(gens, rels):
    # In a one-generator group the relators x^a, x^b, ... may be replaced by x^gcd.
    if len(gens) != 1 or len(rels) < 2:
        return None
    x = gens[0]
    d = 0
    for r in rels:
        d = gcd(d, sum(e for _, e in r))
    return [((x, 1),) * d] if d else []


# -- abelianization and recognition ------------------------------------------

def exponent_matrix(p: GroupPresentation) -> IntMatrix:
    idx = {x: i for i, x in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for x, e in r:
            row[idx[x]] += e
        rows.append(row)
    return IntMatrix.from_rows(rows, len(p.generators))


def abelianize(p: GroupPresentation) -> AbelianInvariants:
    d = snf(exponent_matrix(p)).diagonal
    rank = sum(1 for x in d if x)
    return AbelianInvariants(len(p.generators) - rank, tuple(x for x in d if x > 1))


@dataclass(frozen=True)
class RecognizedGroup:
    tag: str            # "trivial" | "free" | "cyclic" | "unrecognized"
    value: int          # free rank, cyclic order, or 0
    presentation: GroupPresentation
    abelianization: AbelianInvariants
    budget_exceeded: bool = False

    def describe(self) -> str:
        return {"trivial": "trivial", "free": f"free of rank {self.value}",
                "cyclic": f"Z/{self.value}"}.get(self.tag, "unrecognized")

    def as_dict(self) -> dict:
        out = {"group": self.tag}
        if self.tag in ("free", "cyclic"):
            out["rank" if self.tag == "free" else "order"] = self.value
        out["abelianization"] = self.abelianization.as_dict()
        out["simplified"] = self.presentation.as_dict()
        if self.budget_exceeded:
            out["budget_exceeded"] = True
        return out


def recognize(p: GroupPresentation, budget: int = DEFAULT_BUDGET) -> RecognizedGroup:
    exceeded = False
    try:
        s = tietze_simplify(p, budget)
    except BudgetExceeded as exc:
        s, exceeded = exc.presentation, True
    ab = abelianize(s)
    if not s.generators:
        return RecognizedGroup("trivial", 0, s, ab, exceeded)
    if not s.relators:
        return RecognizedGroup("free", len(s.generators), s, ab, exceeded)
    if len(s.generators) == 1:
        d = 0
        for r in s.relators:
            d = gcd(d, sum(e for _, e in r))
        if d == 0:
            return RecognizedGroup("free", 1, s, ab, exceeded)
        if d == 1:
            return RecognizedGroup("trivial", 0, s, ab, exceeded)
        return RecognizedGroup("cyclic", d, s, ab, exceeded)
    return RecognizedGroup("unrecognized", 0, s, ab, exceeded)


def presentation_from_words(generators: Sequence[str], relators: Sequence[Word]) -> GroupPresentation:
    return GroupPresentation(tuple(generators), tuple(tuple(r) for r in relators))
