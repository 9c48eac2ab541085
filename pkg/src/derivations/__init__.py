"""
Johnson Lab - Derivations Module
Theta-derivations of the free Lie and tensor algebras and the subspaces
built from them.
"""

from .derivation import DerivationKind, ThetaDerivation
from .basis import Subspace, theta_der_basis, weight_table
from .johnson import QuadraticRelations, cobracket_on_image, johnson_image, quadratic_relations, tau1
from .genus_one import (
    PERTURBED_RELATION,
    RELATIONS,
    PollackResult,
    epsilon,
    epsilon_solution_dimension,
    pollack_check,
)
from .nakamura import explore_mu2, invariant_line_dimension, mu_odd, mu_squared
from .trace import es_trace, trace_rank

__all__ = [
    'DerivationKind',
    'ThetaDerivation',
    'Subspace',
    'theta_der_basis',
    'weight_table',
    'QuadraticRelations',
    'cobracket_on_image',
    'johnson_image',
    'quadratic_relations',
    'tau1',
    'PERTURBED_RELATION',
    'RELATIONS',
    'PollackResult',
    'epsilon',
    'epsilon_solution_dimension',
    'pollack_check',
    'explore_mu2',
    'invariant_line_dimension',
    'mu_odd',
    'mu_squared',
    'es_trace',
    'trace_rank',
]
