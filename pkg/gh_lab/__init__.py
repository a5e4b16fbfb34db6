"""
GH Lab - computational certificates for Gromov-Hausdorff distances between spheres.

This package reproduces and explores lower and upper bounds on 2·d_GH(S^n, S^k):
closed-form constants, explicit low-distortion correspondences, covering
certificates in projective space, Z/2-equivariant Vietoris-Rips machinery with
homology over the two-element field, and empirical estimators for odd functions.
"""

__version__ = "0.1.0"
__author__ = "GH Lab Team"
__license__ = "MIT"

# Package metadata
__all__ = [
    "__version__",
    "__author__",
    "__license__",
]
