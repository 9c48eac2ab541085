"""
Johnson Lab - Core Algebra Module
Exact sparse words, tensor, Lie and cyclic polynomials over the two surface models.
"""

from .alphabet import Alphabet, SurfaceModel, letter_pairing, partner
from .words import (
    canonical_rotation,
    is_lyndon,
    lyndon_words,
    lyndon_words_upto,
    necklace_count,
    necklaces,
    period,
    standard_factorization,
    witt_dimension,
)
from .poly import (
    CyclicPair,
    CyclicPoly,
    LiePoly,
    SparsePoly,
    TensorPoly,
    boundary_power,
    change_eliminated,
    cyclic_project,
    dynkin_operator,
    is_lie_element,
    letter_degree,
    lie_bracket,
    lie_to_tensor,
    pbw_symmetrize,
    tensor_to_lie,
    theta_element,
    theta_tensor,
    to_coefficient,
)
from .sym import (
    adams_cyclic,
    adams_tensor,
    cyclic_basis,
    power_operation,
    sym_basis,
    sym_component_project,
    sym_dimensions,
)

__all__ = [
    'Alphabet', 'SurfaceModel', 'letter_pairing', 'partner',
    'canonical_rotation', 'is_lyndon', 'lyndon_words', 'lyndon_words_upto',
    'necklace_count', 'necklaces', 'period', 'standard_factorization', 'witt_dimension',
    'CyclicPair', 'CyclicPoly', 'LiePoly', 'SparsePoly', 'TensorPoly',
    'boundary_power', 'change_eliminated', 'cyclic_project', 'dynkin_operator',
    'is_lie_element', 'letter_degree', 'lie_bracket', 'lie_to_tensor', 'pbw_symmetrize',
    'tensor_to_lie', 'theta_element', 'theta_tensor', 'to_coefficient',
    'adams_cyclic', 'adams_tensor', 'cyclic_basis', 'power_operation',
    'sym_basis', 'sym_component_project', 'sym_dimensions',
]
