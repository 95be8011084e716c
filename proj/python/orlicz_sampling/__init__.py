"""Marcinkiewicz sampling inequalities in Orlicz spaces.

Python bindings over the C++ core: N-functions with their analytic
certificates, trigonometric polynomials, the three Luxemburg norms, the
sampling-inequality verifiers, Dirichlet-kernel tables and sampling
functions.
"""

from ._core import (  # noqa: F401
    ConditionReport,
    Delta2Result,
    IndexEstimate,
    MultMode,
    MultiplicativityCertificate,
    NFunction,
    NormResult,
    RawBound,
    TrigPoly,
    VerificationReport,
    check_big_condition,
    check_small_condition,
    continuous_modular,
    delta2_constant,
    dirichlet,
    dirichlet_norm,
    discrete_norm_ln,
    discrete_norm_omega,
    estimate_cphi,
    hilbert_transform,
    loglog_slope_at_zero,
    luxemburg_norm_continuous,
    matuszewska_indices,
    multiplicativity_constant,
    necessity_check,
    node_samples,
    nodes,
    project,
    project_via_modulation,
    random_poly,
    raw_sampling_bound,
    run_scan,
    sampling_function,
    spike_poly,
    verify_dirichlet_lemma,
    verify_lambda_monotonicity,
    verify_lower_sampling,
    verify_modular_zygmund,
    verify_simple,
    verify_upper_sampling,
    weak_type_estimate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
