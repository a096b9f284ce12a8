"""Trace ideals, conductors and minimal resolutions over numerical semigroup rings."""

from .errors import (BoundTooLarge, DegreeBoundTooSmall, EmptyGenerators, GcdNotOne,
                     HypothesisFailed, MixedSemigroups, NotAMember, NotInsideR,
                     NotIntegral, ParseError, SemitraceError, ZeroDivisorIdeal)
from .graded import (GradedFreeModule, GradedMap, GradedRing, Presentation, Resolution,
                     check_hom_equality, entry_ideal, ext_vanishes, hom_to_R,
                     minimal_resolution, presentation_of_ideal, quotient_presentation,
                     residue_field_presentation, syzygy_presentation, trace_of_module,
                     verify_resolution)
from .harness import CheckReport
from .ideals import (MonomialFractionalIdeal, ZeroIdeal, canonical_ideal, colon, conductor,
                     make_ideal, maximal_ideal, ord, order_by_powers, principal, tau, trace,
                     unit_ideal)
from .semigroup import NumericalSemigroup, enumerate_semigroups, parse_semigroup

__version__ = "0.1.0"

__all__ = [
    "BoundTooLarge",
    "CheckReport",
    "DegreeBoundTooSmall",
    "EmptyGenerators",
    "GcdNotOne",
    "GradedFreeModule",
    "GradedMap",
    "GradedRing",
    "HypothesisFailed",
    "MixedSemigroups",
    "MonomialFractionalIdeal",
    "NotAMember",
    "NotInsideR",
    "NotIntegral",
    "NumericalSemigroup",
    "ParseError",
    "Presentation",
    "Resolution",
    "SemitraceError",
    "ZeroDivisorIdeal",
    "ZeroIdeal",
    "canonical_ideal",
    "check_hom_equality",
    "colon",
    "conductor",
    "entry_ideal",
    "enumerate_semigroups",
    "ext_vanishes",
    "hom_to_R",
    "make_ideal",
    "maximal_ideal",
    "minimal_resolution",
    "ord",
    "order_by_powers",
    "parse_semigroup",
    "presentation_of_ideal",
    "principal",
    "quotient_presentation",
    "residue_field_presentation",
    "syzygy_presentation",
    "tau",
    "trace",
    "trace_of_module",
    "unit_ideal",
    "verify_resolution",
]
