//! Constants and auxiliary functions from the positivity proofs.

mod bounds;
mod constants;
mod functions;
mod pipeline;
mod quad;

pub use bounds::{g_max, tail_bound_checks, BoundCheck, TailReport};
pub use constants::{
    alpha, alpha_hypotheses, alpha_quartic_roots, alpha_refined, beta_star, constants_table, kv2_hypotheses, sigma,
    sigma_fn, thresholds, ProofConstant, Thresholds,
};
pub use functions::{
    f1_tail, f_n, f_n_profile, f_n_quadrature, f_n_x2, g_critical_point, g_difference, g_hat, g_hat_quadrature,
    h_k_monotonicity, h_n, xi, xi2, xi_displayed, CriticalProfile, HMonotonicity,
};
pub use pipeline::{
    alpha_pipeline_check, p_from_f1, p_of_t_check, p_printed, p_variant, pa_from_sine, pa_printed, AlphaPipeline, PofT,
    PositivityOnUnit, PA_SCALE, P_PRINTED, P_SCALE,
};
pub use quad::integrate;
