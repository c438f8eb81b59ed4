"""Smoothness of monomial points on the Hilbert scheme of points of affine space."""

from .arrow import Arrow, ArrowClass, translation_class
from .bunch import StandardBunch, build_bunch, verify_bunch
from .classify import classify, is_compound_box, rigid_nonstandard_witnesses
from .cotangent import class_report, cotangent_dimension, is_smooth
from .oracle import cross_check, tangent_dimension
from .staircase import (BasisSet, add_box, box, enumerate_basis_sets, from_minimal_generators,
                        from_monomials, thicken, truncate, two_box_union)

__version__ = "0.1.0"

__all__ = [
    "Arrow", "ArrowClass", "BasisSet", "StandardBunch", "add_box", "box", "build_bunch",
    "class_report", "classify", "cotangent_dimension", "cross_check", "enumerate_basis_sets",
    "from_minimal_generators", "from_monomials", "is_compound_box", "is_smooth",
    "rigid_nonstandard_witnesses", "tangent_dimension", "thicken", "translation_class",
    "truncate", "two_box_union", "verify_bunch",
]
