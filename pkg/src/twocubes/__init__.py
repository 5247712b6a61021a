"""Decide, count and construct representations of binary sextics as sums of
two cubes of quadratic forms, classify the equal-sum families that result,
and exactly verify the identity catalogue that drives the whole theory."""

from .exact import CycNum, ParamPoly, Rational
from .forms import EXACT, FLOAT, BinaryForm, FloatKernel, LinearChange, form_compose
from .decomp import rep_count, report_to_json
from .classify import canonicalize_type, tame_complete, type_detect, wild_family
from .families import verify_identity_suite
from .ecurve import EBParams, RationalFunction, curve_add, curve_third_rep, eb_forward, eb_inverse

__all__ = [
    "CycNum",
    "ParamPoly",
    "Rational",
    "BinaryForm",
    "LinearChange",
    "FloatKernel",
    "form_compose",
    "EXACT",
    "FLOAT",
    "rep_count",
    "report_to_json",
    "type_detect",
    "canonicalize_type",
    "tame_complete",
    "wild_family",
    "verify_identity_suite",
    "EBParams",
    "RationalFunction",
    "eb_forward",
    "eb_inverse",
    "curve_add",
    "curve_third_rep",
]
