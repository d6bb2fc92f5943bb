"""Residue-restricted multiplicities vs congruence-restricted parts.

Two families of integer partitions, parameterized by a triple (p, a, r):
an A-side constrained on multiplicities and a B-side constrained on parts,
with an explicit weight-preserving bijection between them plus exhaustive
and generating-function oracles that verify the correspondence.
"""

from .bijection import (
    FamilyViolationError,
    MultiplicityDecomposition,
    aepr_forward,
    decompose_multiplicity,
    forward,
    inverse,
)
from .enumeration import (
    DEFAULT_CAP,
    PerNRecord,
    VerificationReport,
    count_family,
    enumerate_partitions,
    verify_bijection,
)
from .families import (
    ParameterError,
    Params,
    PartClass,
    classify_part,
    in_A,
    in_B,
    is_allowed_multiplicity,
    validate_params,
)
from .partitions import (
    EMPTY,
    Partition,
    format_partition,
    from_json_dict,
    make_partition,
    parse_partition,
    to_json_dict,
)
from .series import (
    DEFAULT_SERIES_CAP,
    SeriesCoefficients,
    a_side_series,
    b_side_series,
    compare_series,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_SERIES_CAP",
    "EMPTY",
    "FamilyViolationError",
    "MultiplicityDecomposition",
    "ParameterError",
    "Params",
    "PartClass",
    "Partition",
    "PerNRecord",
    "SeriesCoefficients",
    "VerificationReport",
    "a_side_series",
    "aepr_forward",
    "b_side_series",
    "classify_part",
    "compare_series",
    "count_family",
    "decompose_multiplicity",
    "enumerate_partitions",
    "format_partition",
    "forward",
    "from_json_dict",
    "in_A",
    "in_B",
    "inverse",
    "is_allowed_multiplicity",
    "make_partition",
    "parse_partition",
    "to_json_dict",
    "validate_params",
    "verify_bijection",
]
