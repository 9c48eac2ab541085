"""
Genus-0 module for Johnson Lab
Special derivations of the punctured sphere, their divergence and edge
map, the pure braid presentation and the depth filtration.
"""

from .special import (
    SpecialDer0,
    puncture_element,
    sder_correspondence_rank,
    sder_to_cyclic,
    special_der_basis,
)
from .presentation import RelationsReport, ejk_generator, mutated_relation, relations_check
from .divergence import (
    RotationData,
    cocycle_defect,
    divergence,
    edge_map,
    framing_change,
    sder_from_sym2,
    sym2_framing_change,
)
from .depth import depth, depth_reduce, in_depth, letter_degrees
from .polylog import (
    PolylogIdentityResult,
    appendix_a_check,
    binomial_expansion,
    polylog_rhs,
    sigma_polylog,
    sigma_special_residual,
)

__all__ = [
    'SpecialDer0', 'puncture_element', 'sder_correspondence_rank', 'sder_to_cyclic',
    'special_der_basis',
    'RelationsReport', 'ejk_generator', 'mutated_relation', 'relations_check',
    'RotationData', 'cocycle_defect', 'divergence', 'edge_map', 'framing_change',
    'sder_from_sym2', 'sym2_framing_change',
    'depth', 'depth_reduce', 'in_depth', 'letter_degrees',
    'PolylogIdentityResult', 'appendix_a_check', 'binomial_expansion', 'polylog_rhs',
    'sigma_polylog', 'sigma_special_residual',
]
