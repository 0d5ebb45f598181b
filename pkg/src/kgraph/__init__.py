"""Finite 2-graphs and textile systems.

Validation and conversion between textile systems, coloured graphs with squares
and 2-graph skeletons; presentations of fundamental groups; integral homology
and cohomology with finitely generated coefficients.
"""

from .abelian import AbelianInvariants, IntMatrix, snf
from .cohomology import brute_force_cohomology, cohomology, h2_representatives, parse_coefficients
from .coloured import (
    ColouredGraph,
    Square,
    SquareSet,
    check_complete,
    deduce_squares,
    make_square_set,
    model_graph,
    square_isomorphism,
    validate_coloured,
    validate_square,
)
from .document import Document, parse_document, serialise_document
from .graphs import DirectedGraph, GraphMorphism, spanning_tree, validate_graph, validate_morphism
from .homology import (
    ChainComplex,
    chain_complex_2graph,
    chain_complex_graph,
    chain_complex_textile,
    h2_circuit_generators,
    homology,
    trail,
)
from .presentation import (
    GroupPresentation,
    abelianize,
    pi1,
    pi1_graph,
    pi1_textile,
    recognize,
    tietze_simplify,
)
from .textile import (
    TextileSystem,
    admits_2graph,
    from_2graph,
    lifting,
    properties,
    textile_isomorphism,
    to_coloured,
    validate_textile,
)

__version__ = "0.1.0"
