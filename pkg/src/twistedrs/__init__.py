"""Twisted Reed-Solomon codes over small finite fields.

Construction of twisted evaluation codes and their always-MDS subclasses,
MDS and GRS membership tests, canonical forms under monomial equivalence,
hook-guess decoding, and exhaustive censuses of the parameter space.
"""

from .construct import (
    LinearCode,
    RothLempelSpec,
    TwistedCodeSpec,
    grs_code,
    plus_twisted,
    roth_lempel_code,
    rs_code,
    star_twisted,
    twisted_code,
)
from .decode import encode, rs_decode, twisted_decode
from .equiv import canonical_form, count_classes, dual, is_grs, systematic_form
from .galois import (
    INF,
    FiniteField,
    additive_subgroups,
    make_field,
    multiplicative_subgroups,
    subfields,
)
from .mdscheck import (
    MdsVerdict,
    is_k_sum_generator,
    is_mds_condition_plus,
    is_mds_condition_star,
    is_mds_general,
    is_mds_minors,
    m_bound,
)

__version__ = "0.1.0"
