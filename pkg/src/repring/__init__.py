"""
Johnson Lab - Representation Ring Module
Characters of Sp(2g), their decomposition into irreducibles, lambda
operations and Moebius inversion of Euler characteristic series.
"""

from .character import SpCharacter, dominant_representative, orbit_size, weyl_orbit
from .weyl import (
    RepElement,
    char_of_subspace,
    decompose,
    dominant_multiplicities,
    irr_character,
    normalize_partition,
    weyl_dimension,
)
from .lambda_ops import OPERATIONS, adams, apply_operation, exterior_power, symmetric_power
from .mobius import GradedSeries, euler_series, log_derivative, mobius_invert

__all__ = [
    'SpCharacter',
    'dominant_representative',
    'orbit_size',
    'weyl_orbit',
    'RepElement',
    'char_of_subspace',
    'decompose',
    'dominant_multiplicities',
    'irr_character',
    'normalize_partition',
    'weyl_dimension',
    'OPERATIONS',
    'adams',
    'apply_operation',
    'exterior_power',
    'symmetric_power',
    'GradedSeries',
    'euler_series',
    'log_derivative',
    'mobius_invert',
]
