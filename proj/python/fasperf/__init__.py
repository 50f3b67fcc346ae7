# SPDX-License-Identifier: Apache-2.0
"""Outage and ergodic-rate analysis of a port-selection fluid antenna
receiver under spatially correlated Rician fading.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._fasperf import (  # noqa: F401
    AccuracyError,
    CapacityError,
    CorrelationProfile,
    EmpiricalEstimate,
    LayoutError,
    MetricResult,
    RicianSpec,
    SingularityError,
    ValidationError,
    __version__,
    bessel_i0_scaled,
    bessel_j0,
    correlation_profile,
    er_empirical,
    er_exact,
    er_lower_closed,
    er_upper,
    exp_integral_ei,
    figure_names,
    gaussian_q_lower,
    marcum_q,
    mrc_empirical,
    op_empirical,
    op_exact,
    op_lower_bound,
    op_lower_series,
    op_mrc,
    op_rayleigh_lower,
    op_upper_bound,
    reg_gamma_lower,
    rician_from_kappa,
    run_sweep_json,
    sample_port_gains,
    slope_loglog,
    snr_cdf,
    ula_displacements,
    upa_distances,
)
