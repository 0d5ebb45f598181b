"""The worked examples shipped with the package, as builders and as JSON files.

``load(name)`` reads a shipped file; the ``build_*`` functions construct the same
objects directly and are what the data files were generated from.
"""

from __future__ import annotations

from importlib import resources
from itertools import product

from .coloured import ColouredGraph, SquareSet, make_square_set, validate_coloured
from .document import Document, coloured_document, parse_document, textile_document
from .graphs import validate_graph
from .textile import TextileSystem, validate_textile

FILES = (
    "sphere.cg.json",
    "sphere.tex.json",
    "projective_plane.cg.json",
    "f2theta_identity.cg.json",
    "f2theta_flip.cg.json",
    "extex1.tex.json",
    "tn1.tex.json",
    "tn2.tex.json",
    "tn3.tex.json",
    "tn4.tex.json",
    "quantum3sphere.tex.json",
    "locvxfinal.cg.json",
)


def path(name: str):
    return resources.files("kgraph") / "data" / name


def load(name: str) -> Document:
    return parse_document(path(name).read_text(encoding="utf-8"))


def _coloured(vertices, blue, red, squares) -> tuple[ColouredGraph, SquareSet]:
    g = validate_graph(vertices, blue + red)
    cg = validate_coloured(g, 2, {**{e[0]: 1 for e in blue}, **{e[0]: 2 for e in red}})
    raw = [{"i": 1, "j": 2, "f": f, "g": gg, "gp": gp, "fp": fp, **({"name": n} if n else {})}
           for n, f, gg, gp, fp in squares]
    return cg, make_square_set(cg, raw)


def build_sphere() -> tuple[ColouredGraph, SquareSet]:
    """Six vertices, two triangles of squares glued along their boundary."""
    return _coloured(
        ["u", "v", "w", "x", "y", "z"],
        [("a", "w", "u"), ("b", "w", "v"), ("c", "y", "x"), ("d", "z", "x")],
        [("e", "x", "u"), ("f", "x", "v"), ("g", "y", "w"), ("h", "z", "w")],
        [("alpha", "c", "e", "g", "a"), ("beta", "d", "e", "h", "a"),
         ("gamma", "d", "f", "h", "b"), ("delta", "c", "f", "g", "b")],
    )


def build_sphere_textile() -> TextileSystem:
    E = validate_graph(["u", "v", "w", "x", "y", "z"],
                       [("a", "w", "u"), ("b", "w", "v"), ("c", "y", "x"), ("d", "z", "x")])
    F = validate_graph(["e", "f", "g", "h"],
                       [("alpha", "g", "e"), ("beta", "h", "e"),
                        ("gamma", "h", "f"), ("delta", "g", "f")])
    p = ({"e": "u", "f": "v", "g": "w", "h": "w"},
         {"alpha": "a", "beta": "a", "gamma": "b", "delta": "b"})
    q = ({"e": "x", "f": "x", "g": "y", "h": "z"},
         {"alpha": "c", "beta": "d", "gamma": "d", "delta": "c"})
    return validate_textile(E, F, p, q)


def build_projective_plane() -> tuple[ColouredGraph, SquareSet]:
    return _coloured(
        ["u", "v", "w", "x", "y"],
        [("a", "w", "y"), ("b", "w", "x"), ("c", "u", "v"), ("d", "u", "v")],
        [("e", "v", "y"), ("f", "v", "x"), ("g", "u", "w"), ("h", "u", "w")],
        [(None, "c", "e", "g", "a"), (None, "d", "f", "g", "b"),
         (None, "c", "f", "h", "b"), (None, "d", "e", "h", "a")],
    )


def build_f2theta(m: int, n: int, theta) -> tuple[ColouredGraph, SquareSet]:
    """One vertex, blue loops ``f1..fm``, red loops ``g1..gn`` and the squares
    ``f_i g_j ~ g_j' f_i'`` where ``theta(i, j) = (i', j')`` is a bijection of
    ``{1..m} x {1..n}``."""
    blue = [(f"f{i}", "v", "v") for i in range(1, m + 1)]
    red = [(f"g{j}", "v", "v") for j in range(1, n + 1)]
    squares = []
    for i, j in product(range(1, m + 1), range(1, n + 1)):
        i2, j2 = theta(i, j)
        squares.append((None, f"f{i}", f"g{j}", f"g{j2}", f"f{i2}"))
    return _coloured(["v"], blue, red, squares)


def build_extex1() -> TextileSystem:
    """One vertex with two loops; F has two vertices joined both ways plus a loop."""
    E = validate_graph(["v"], [("b1", "v", "v"), ("b2", "v", "v")])
    F = validate_graph(["a1", "a2"], [("c1", "a1", "a2"), ("c2", "a2", "a1"), ("l2", "a2", "a2")])
    vm = {"a1": "v", "a2": "v"}
    return validate_textile(E, F, (vm, {"c1": "b1", "c2": "b2", "l2": "b2"}),
                            (vm, {"c1": "b1", "c2": "b2", "l2": "b1"}))


def build_tn(n: int) -> TextileSystem:
    """F is an ``n``-cycle ``c_i: a_{i+1} -> a_i`` with loops ``l_i`` at ``a_i`` for ``i >= 2``;
    ``p`` and ``q`` agree on the cycle and ``q`` shifts the loops down by one."""
    E = validate_graph(["v"], [(f"b{i}", "v", "v") for i in range(1, n + 1)])
    fv = [f"a{i}" for i in range(1, n + 1)]
    fe = [(f"c{i}", f"a{i}", f"a{i % n + 1}") for i in range(1, n + 1)]
    fe += [(f"l{i}", f"a{i}", f"a{i}") for i in range(2, n + 1)]
    F = validate_graph(fv, fe)
    vm = {a: "v" for a in fv}
    pe = {f"c{i}": f"b{i}" for i in range(1, n + 1)} | {f"l{i}": f"b{i}" for i in range(2, n + 1)}
    qe = {f"c{i}": f"b{i}" for i in range(1, n + 1)} | {f"l{i}": f"b{i - 1}" for i in range(2, n + 1)}
    return validate_textile(E, F, (vm, pe), (vm, qe))


def build_quantum3sphere() -> TextileSystem:
    """``(E, E, id, q)`` where ``q`` folds ``w`` onto ``u`` and both loops onto ``a``."""
    E = validate_graph(["u", "v", "w"], [("a", "u", "u"), ("b", "w", "w"), ("c", "u", "v")])
    ident = ({v: v for v in E.vertices}, {e: e for e in E.edge_names})
    q = ({"u": "u", "v": "v", "w": "u"}, {"a": "a", "b": "a", "c": "c"})
    return validate_textile(E, E, ident, q)


def build_locvxfinal() -> tuple[ColouredGraph, SquareSet]:
    """A blue and a red edge into the same vertex and no squares at all."""
    return _coloured(["00", "10", "01"], [("e", "00", "10")], [("f", "00", "01")], [])


def documents() -> dict[str, Document]:
    return {
        "sphere.cg.json": coloured_document(*build_sphere()),
        "sphere.tex.json": textile_document(build_sphere_textile()),
        "projective_plane.cg.json": coloured_document(*build_projective_plane()),
        "f2theta_identity.cg.json": coloured_document(*build_f2theta(2, 2, lambda i, j: (i, j))),
        "f2theta_flip.cg.json": coloured_document(*build_f2theta(2, 2, lambda i, j: (j, i))),
        "extex1.tex.json": textile_document(build_extex1()),
        **{f"tn{n}.tex.json": textile_document(build_tn(n)) for n in range(1, 5)},
        "quantum3sphere.tex.json": textile_document(build_quantum3sphere()),
        "locvxfinal.cg.json": coloured_document(*build_locvxfinal()),
    }
