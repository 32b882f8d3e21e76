"""Exact ideal calculus over prime fields with closure diagnostics."""

__version__ = "0.1.0"

from .field import PrimeField
from .monomials import MonomialOrder, mono_compare
from .poly import Poly, PolyRing, frobenius_power, parse_poly
from .groebner import groebner_basis, is_groebner_basis, normal_form
from .ideals import Ideal, ring_map_kernel
from .grading import positive_grading
from .rings import (
    QuotientRing,
    classify,
    cm_probe,
    is_regular_sequence,
    is_system_of_parameters,
    make_ring,
)
from .closure import (
    ClosureReport,
    bounded_frobenius_check,
    closedness_necessary_test,
    colon_capture_report,
    construct_ne_test_data,
    decomposition_closure,
    normalize_sop_generators,
    structural_verdict,
    theorem_contain_verdict,
)
from .script import ReportDocument, RunOptions, parse_script, print_script, run_script
from .scenarios import SCENARIOS, run_scenario

__all__ = [
    "PrimeField",
    "MonomialOrder",
    "mono_compare",
    "Poly",
    "PolyRing",
    "frobenius_power",
    "parse_poly",
    "groebner_basis",
    "is_groebner_basis",
    "normal_form",
    "Ideal",
    "ring_map_kernel",
    "positive_grading",
    "QuotientRing",
    "classify",
    "cm_probe",
    "is_regular_sequence",
    "is_system_of_parameters",
    "make_ring",
    "ClosureReport",
    "bounded_frobenius_check",
    "closedness_necessary_test",
    "colon_capture_report",
    "construct_ne_test_data",
    "decomposition_closure",
    "normalize_sop_generators",
    "structural_verdict",
    "theorem_contain_verdict",
    "ReportDocument",
    "RunOptions",
    "parse_script",
    "print_script",
    "run_script",
    "SCENARIOS",
    "run_scenario",
    "__version__",
]
