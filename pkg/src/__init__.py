"""
Johnson Lab Package
Exact computations in the Goldman-Turaev Lie bialgebra, the Lie algebra of
theta-derivations and the genus-0 divergence cocycle.
"""

__version__ = '1.0.0'
__author__ = 'Johnson Lab Project'
__description__ = 'Exact Goldman-Turaev, Johnson image and divergence computations'
