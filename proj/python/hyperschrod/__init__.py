"""Spherical analysis and Schrodinger propagation on hyperbolic spaces.

Thin numpy-facing wrapper around the compiled core. All heavy lifting lives
in the C++ library; this package re-exports the bound surface.
"""

from ._core import (  # noqa: F401
    __version__,
    beurling,
    c0,
    c0_closed_form,
    check_c_normalization,
    classify,
    decay_fit,
    extremal,
    gaussian_field,
    gaussian_oracle,
    inverse_spherical,
    plancherel_density,
    propagate_euclid,
    propagate_radial,
    psi,
    run_audit,
    space_info,
    spherical_transform,
    xi,
)

__all__ = [
    "__version__",
    "beurling",
    "c0",
    "c0_closed_form",
    "check_c_normalization",
    "classify",
    "decay_fit",
    "extremal",
    "gaussian_field",
    "gaussian_oracle",
    "inverse_spherical",
    "plancherel_density",
    "propagate_euclid",
    "propagate_radial",
    "psi",
    "run_audit",
    "space_info",
    "spherical_transform",
    "xi",
]
