"""
Johnson Lab - Goldman-Turaev Module
Graded Goldman bracket, Turaev cobracket and Kawazumi-Kuno action.
"""

from .bracket import antisymmetry_residual, goldman_bracket, jacobi_residual
from .cobracket import (
    act_on_pair,
    cojacobi_residual,
    compatibility_residual,
    involutivity_residual,
    reduced_cobracket,
    turaev_cobracket,
)
from .kappa import der_on_cyclic, kappa_derivation, kappa_inverse, kappa_letter_values, kk_action
from src.algebra.sym import cyclic_basis, sym_basis

__all__ = [
    'antisymmetry_residual',
    'goldman_bracket',
    'jacobi_residual',
    'act_on_pair',
    'cojacobi_residual',
    'compatibility_residual',
    'involutivity_residual',
    'reduced_cobracket',
    'turaev_cobracket',
    'der_on_cyclic',
    'kappa_derivation',
    'kappa_inverse',
    'kappa_letter_values',
    'kk_action',
    'cyclic_basis',
    'sym_basis',
]
