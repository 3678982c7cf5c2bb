"""Exact computations in finite, affine and extended affine Weyl groups."""

from .dualspace import DualVec, coroot, fundamental_weight, pair, parse_weight, pi_map
from .dynkin import DynkinDiagram, build_diagram, cartan_matrix, marks, parse_type
from .extended import ExtElement, automorphism_group, normal_form, orbit, weight_translation
from .rootspace import RootVec, enumerate_roots, format_affine, format_root, highest_root, null_root, parse_root, simple_root
from .weyl import act, act_dual, decompose, make_translation, translation_element, translation_vector
from .words import Element, WeylWord, parse_word

__all__ = [
    "DualVec",
    "DynkinDiagram",
    "Element",
    "ExtElement",
    "RootVec",
    "WeylWord",
    "act",
    "act_dual",
    "automorphism_group",
    "build_diagram",
    "cartan_matrix",
    "coroot",
    "decompose",
    "enumerate_roots",
    "format_affine",
    "format_root",
    "fundamental_weight",
    "highest_root",
    "make_translation",
    "marks",
    "normal_form",
    "null_root",
    "orbit",
    "pair",
    "parse_root",
    "parse_type",
    "parse_weight",
    "parse_word",
    "pi_map",
    "simple_root",
    "translation_element",
    "translation_vector",
    "weight_translation",
]
