"""Exact positivity checks for homogeneous vector bundles on flag varieties G/P."""

from .curvecalc import (
    FiniteCover,
    SplitBundle,
    is_ample_hartshorne,
    lemma1_equivalence_check,
    min_line_quotient_degree,
    pullback,
)
from .errors import InvalidInputError, InvariantViolation, SpecParseError
from .flagbundle import (
    HomogeneousBundle,
    ParabolicSpec,
    SplittingType,
    Status,
    Verdict,
    check_fiber_triviality,
    classify,
    is_globally_generated_snow,
    line_degree_on_curve,
    restrict_to_curve,
)
from .rootsys import (
    Root,
    RootSystem,
    SimpleType,
    Weight,
    cartan_matrix,
    pairing,
    positive_roots,
    root_in_weight_coords,
)
from .specio import parse_record, parse_text, serialize
from .weights import WeightMultiset, is_dominant, leq, maximal_weights

__version__ = "0.1.0"
