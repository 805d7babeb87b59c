"""Exact invariants of monomial ideals: Łojasiewicz exponents, mixed
multiplicities, Demailly-Pham numbers and log canonical thresholds."""

from .errors import (
    ConsistencyError,
    DimensionMismatch,
    EmptyIdeal,
    InfiniteColength,
    InfiniteCovolume,
    InfiniteThreshold,
    LctKitError,
    NegativeCoordinate,
    NonPositiveEntry,
    ParseError,
    UnitIdeal,
    ZeroDirection,
    ZeroRestriction,
)
from .ideal import (
    MonomialIdeal,
    ideal_sum,
    maximal_ideal,
    normalize,
    order,
    parse_ideal,
    power,
    product,
    restrict,
)
from .invariants import (
    ChainReport,
    InvariantReport,
    chain_report,
    dp,
    dp_from,
    e_sequence,
    invariant_report,
    is_diagonal,
    is_hickel,
    is_power_of_maximal,
    lct,
    li,
    li_from,
    loj_exponent,
    loj_sequence,
    mixed_multiplicity,
    multiplicity,
    projectively_equivalent,
)
from .polyhedron import HalfSpace, NewtonPolyhedron, from_ideal

__version__ = "0.1.0"

__all__ = [
    "ChainReport",
    "ConsistencyError",
    "DimensionMismatch",
    "EmptyIdeal",
    "HalfSpace",
    "InfiniteColength",
    "InfiniteCovolume",
    "InfiniteThreshold",
    "InvariantReport",
    "LctKitError",
    "MonomialIdeal",
    "NegativeCoordinate",
    "NewtonPolyhedron",
    "NonPositiveEntry",
    "ParseError",
    "UnitIdeal",
    "ZeroDirection",
    "ZeroRestriction",
    "chain_report",
    "dp",
    "dp_from",
    "e_sequence",
    "from_ideal",
    "ideal_sum",
    "invariant_report",
    "is_diagonal",
    "is_hickel",
    "is_power_of_maximal",
    "lct",
    "li",
    "li_from",
    "loj_exponent",
    "loj_sequence",
    "maximal_ideal",
    "mixed_multiplicity",
    "multiplicity",
    "normalize",
    "order",
    "parse_ideal",
    "power",
    "product",
    "projectively_equivalent",
    "restrict",
]
