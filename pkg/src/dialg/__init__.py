"""Polynomial identities in nonassociative algebras and dialgebras."""
from importlib import resources

from .bso import bso_expand, bso_family
from .checker import (
    PRESETS,
    PointedWord,
    VarietyPresentation,
    Verdict,
    are_equivalent,
    conditional_consequence,
    holds_in_variety,
    is_consequence,
    normal_form_assoc_dialgebra,
)
from .kp import kp_identity, kp_transform, zero_identities
from .parser import Identity, IdentityFile, ParseError, parse, parse_identity, parse_poly, to_text
from .qlinalg import EchelonBasis, QMatrix, rank, row_space_contains, row_space_equal, rref
from .spaces import association_types, basis, lift, sn_orbit, straighten, table1_basis
from .terms import (
    Poly,
    canonical,
    canonicalize,
    center,
    collapse_right_anticommutative,
    expand_macros,
    linearize,
    substitute,
)


def corpus(name: str) -> IdentityFile:
    """Bundled identity file: ``"algebra"`` or ``"dialgebra"``."""
    return parse(resources.files(__package__).joinpath("data", f"{name}.ids").read_text(encoding="utf-8"))


__all__ = [
    "are_equivalent",
    "association_types",
    "basis",
    "bso_expand",
    "bso_family",
    "canonical",
    "canonicalize",
    "center",
    "collapse_right_anticommutative",
    "conditional_consequence",
    "corpus",
    "EchelonBasis",
    "expand_macros",
    "holds_in_variety",
    "Identity",
    "IdentityFile",
    "is_consequence",
    "kp_identity",
    "kp_transform",
    "lift",
    "linearize",
    "normal_form_assoc_dialgebra",
    "parse",
    "parse_identity",
    "parse_poly",
    "ParseError",
    "PointedWord",
    "Poly",
    "PRESETS",
    "QMatrix",
    "rank",
    "row_space_contains",
    "row_space_equal",
    "rref",
    "sn_orbit",
    "straighten",
    "substitute",
    "table1_basis",
    "to_text",
    "VarietyPresentation",
    "Verdict",
    "zero_identities",
]
