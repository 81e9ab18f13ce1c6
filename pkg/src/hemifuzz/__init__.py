"""Finite hemirings, left h-ideals and intuitionistic fuzzy left h-ideals."""
from .algebra import (Hemiring, Morphism, WindowedNaturals, automorphisms, is_homomorphism,
                      product_hemiring, validate_hemiring)
from .analysis import (DegreeGrid, grid_nifi_enumerate, is_characteristic,
                       is_completely_normal, is_normal, maximality_status)
from .constructions import (MonotoneFn, average_with_element, monotone_transform,
                            normalize_plus, preimage_under_hom, two_valued_ifs)
from .fuzzy import (FuzzySet, Ifs, complement, image_pairs, is_fuzzy_left_h_ideal,
                    is_if_left_h_ideal, is_if_left_ideal, level_subset, lower_cut, upper_cut)
from .ideals import (enumerate_left_h_ideals, h_closure, is_left_h_ideal, is_left_ideal,
                     maximal_left_h_ideals)
from .verify import ClaimId, Instance, Verdict, sweep, verify_claim

__all__ = [
    "Hemiring", "Morphism", "WindowedNaturals", "automorphisms", "is_homomorphism",
    "product_hemiring", "validate_hemiring", "DegreeGrid", "grid_nifi_enumerate",
    "is_characteristic", "is_completely_normal", "is_normal", "maximality_status",
    "MonotoneFn", "average_with_element", "monotone_transform", "normalize_plus",
    "preimage_under_hom", "two_valued_ifs", "FuzzySet", "Ifs", "complement", "image_pairs",
    "is_fuzzy_left_h_ideal", "is_if_left_h_ideal", "is_if_left_ideal", "level_subset",
    "lower_cut", "upper_cut", "enumerate_left_h_ideals", "h_closure", "is_left_h_ideal",
    "is_left_ideal", "maximal_left_h_ideals", "ClaimId", "Instance", "Verdict", "sweep",
    "verify_claim",
]

__version__ = "0.1.0"
