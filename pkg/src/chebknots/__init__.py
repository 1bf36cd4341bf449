"""Chebyshev curves, polynomial line embeddings and the knots they carry.

Everything is exact: polynomials have rational coefficients, node data are
angles ``k pi / N`` compared by integer arithmetic, and generic height
comparisons use certified interval evaluation.
"""

from .algebra import (
    InvolutionStep,
    ReductionTrace,
    Triple,
    Witness,
    embedding_witness,
    frobenius,
    is_embedding,
    is_reduced,
    pgcd,
    rectification,
    reduce_triple,
    remnant,
    verify_witness,
)
from .diagram import (
    ALTERNATING,
    CrossingSequence,
    PDCode,
    SignedGaussCode,
    alternating_sequence,
    build_gauss_code,
    diagram_for,
    gauss_to_pd,
    mirror,
    torus_sequence,
    writhe,
    z_crossing_sequence,
)
from .errors import (
    ChebKnotsError,
    DomainError,
    NotAnEmbedding,
    NotCoprime,
    TooManyCrossings,
    ZFailsToSeparate,
)
from .geometry import AngleCos, alternating_z, check_parity, node_count, nodes, pairing_positions
from .invariants import LaurentPoly, identify, jones, kauffman_bracket, knot_table, standard_torus_pd
from .poly import Poly, T, U, compose, derivative, exact_div, monic_cheb

__version__ = "0.1.0"
