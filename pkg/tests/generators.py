"""Seeded random instances shared by the property tests."""

from __future__ import annotations

import itertools
import random
from collections import defaultdict

from kgraph.coloured import make_square_set, validate_coloured
from kgraph.corpus import build_f2theta
from kgraph.graphs import is_connected, validate_graph
from kgraph.textile import validate_textile


def random_graph(rng: random.Random, nv: int, ne: int, prefix: str = "e", vprefix: str = "v"):
    vs = [f"{vprefix}{i}" for i in range(nv)]
    edges = [(f"{prefix}{k}", rng.choice(vs), rng.choice(vs)) for k in range(ne)]
    return validate_graph(vs, edges)


def random_connected_graph(rng: random.Random, nv: int, extra: int, prefix: str = "e"):
    vs = [f"v{i}" for i in range(nv)]
    edges = []
    for i in range(1, nv):
        j = rng.randrange(i)
        edges.append((vs[i], vs[j]) if rng.random() < 0.5 else (vs[j], vs[i]))
    edges += [(rng.choice(vs), rng.choice(vs)) for _ in range(extra)]
    rng.shuffle(edges)
    return validate_graph(vs, [(f"{prefix}{k}", r, s) for k, (r, s) in enumerate(edges)])


def random_textile(rng: random.Random, max_e_vertices: int = 3, max_f_vertices: int = 4,
                   max_f_edges: int = 7):
    """A random textile system; F-edges are added only where compatible lifts exist."""
    E = random_graph(rng, rng.randint(1, max_e_vertices), rng.randint(1, 5), prefix="b")
    nf = rng.randint(1, max_f_vertices)
    fv = [f"w{i}" for i in range(nf)]
    p0 = {w: rng.choice(E.vertices) for w in fv}
    q0 = {w: rng.choice(E.vertices) for w in fv}
    by_pair = defaultdict(list)
    for w in fv:
        by_pair[(p0[w], q0[w])].append(w)
    fe, pe, qe, seen = [], {}, {}, set()
    for _ in range(4 * max_f_edges):
        if len(fe) >= max_f_edges:
            break
        e1, e2 = rng.choice(E.edges), rng.choice(E.edges)
        rs = by_pair.get((e1.range, e2.range))
        ss = by_pair.get((e1.source, e2.source))
        if not rs or not ss:
            continue
        r, s = rng.choice(rs), rng.choice(ss)
        quad = (e1.name, e2.name, r, s)
        if quad in seen:
            continue
        seen.add(quad)
        name = f"f{len(fe)}"
        fe.append((name, r, s))
        pe[name], qe[name] = e1.name, e2.name
    F = validate_graph(fv, fe)
    return validate_textile(E, F, (p0, pe), (q0, qe))


def random_product_2graph(rng: random.Random, max_vertices: int = 3, max_edges: int = 4):
    """Product of a blue and a red graph with the squares permuted at random
    among those sharing both corners; always complete."""
    A = random_graph(rng, rng.randint(1, max_vertices), rng.randint(1, max_edges), "x", "a")
    B = random_graph(rng, rng.randint(1, max_vertices), rng.randint(1, max_edges), "y", "c")
    vert = lambda a, b: f"{a}|{b}"
    vs = [vert(a, b) for a, b in itertools.product(A.vertices, B.vertices)]
    edges, colour = [], {}
    for e in A.edges:
        for b in B.vertices:
            n = f"{e.name}@{b}"
            edges.append((n, vert(e.range, b), vert(e.source, b)))
            colour[n] = 1
    for a in A.vertices:
        for e in B.edges:
            n = f"{e.name}@{a}"
            edges.append((n, vert(a, e.range), vert(a, e.source)))
            colour[n] = 2
    cg = validate_coloured(validate_graph(vs, edges), 2, colour)
    g = cg.graph
    ij, ji = defaultdict(list), defaultdict(list)
    for f, gg in cg.paths(1, 2):
        ij[(g.r(f), g.s(gg))].append((f, gg))
    for gp, fp in cg.paths(2, 1):
        ji[(g.r(gp), g.s(fp))].append((gp, fp))
    raw = []
    for corner, left in ij.items():
        right = list(ji[corner])
        assert len(right) == len(left)
        rng.shuffle(right)
        for (f, gg), (gp, fp) in zip(left, right):
            raw.append({"i": 1, "j": 2, "f": f, "g": gg, "gp": gp, "fp": fp})
    return cg, make_square_set(cg, raw)


def random_theta(rng: random.Random, m: int, n: int):
    cells = list(itertools.product(range(1, m + 1), range(1, n + 1)))
    image = cells[:]
    rng.shuffle(image)
    table = dict(zip(cells, image))
    return lambda i, j: table[(i, j)]


def random_f2theta(rng: random.Random, max_m: int = 3, max_n: int = 3):
    m, n = rng.randint(1, max_m), rng.randint(1, max_n)
    return build_f2theta(m, n, random_theta(rng, m, n))


def connected(cg) -> bool:
    return is_connected(cg.graph)
