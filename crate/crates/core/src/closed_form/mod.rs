//! Closed-form product formulas, evaluated with certified intervals.

mod asymptotic;
mod cycle_power;
mod digraph;
pub mod identities;

pub use asymptotic::{
    asymptotic_estimate, asymptotic_ratio_exact, asymptotic_target, convergence_point, ConvergencePoint,
};
pub use cycle_power::{
    cycle_power_beta_two, cycle_power_count, cycle_power_enclosure, cycle_power_prefactor_simplified,
    cycle_power_terms, modulus_product_exact, CyclePowerPrefactor, CyclePowerTerm, CyclePowerTerms,
};
pub use digraph::{
    betaproduct_count, betaproduct_enclosure, digraph_spectral_terms, directed_cycle_count, theorem1_count,
    theorem1_enclosure, theorem2_count, theorem2_enclosure, DigraphSpectralTerms, DigraphTerm, PhaseForm,
};
