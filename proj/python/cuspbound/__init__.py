"""Analytic invariants of the modular curves X0(N).

Thin python surface over the C++ core: group profiles, Eisenstein series,
Kronecker limit functions, scattering constants, hyperbolic kernels, and the
canonical Green's function bound ledger and sweep.
"""

from ._core import (  # noqa: F401
    bessel_k,
    cusp_count,
    cusp_sum_a_0,
    cusp_sum_a_inf,
    divisors,
    eisenstein_fourier,
    eisenstein_lattice,
    eisenstein_level,
    elliptic_counts,
    euler_phi,
    gamma_fn,
    genus,
    green_can_ledger,
    green_from_heat,
    green_h,
    green_h_s,
    heat_kernel_diag,
    heat_kernel_h,
    hyp_distance,
    is_prime,
    klf_elliptic_weighted_sum,
    klf_infty,
    klf_level1,
    klf_zero,
    moebius,
    point_pair_u,
    profile,
    profile_json,
    scattering_const_0inf,
    scattering_const_a_0,
    scattering_const_a_inf,
    scattering_constant_level1,
    scattering_phi_level1,
    selberg_local_factor,
    sweep,
    volume,
    zeta_fn,
    zeta_prime_minus1,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
