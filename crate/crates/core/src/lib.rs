//! Spanning tree and arborescence counts for circulant graphs with
//! generators growing linearly in `n`, and for cycle power graphs.
//!
//! Closed forms are evaluated in outward-rounded interval arithmetic and
//! rounded only once the enclosure isolates a single integer. Two exact
//! oracles (cofactor determinant, eigenvalue product) check them.

pub mod certify;
pub mod closed_form;
pub mod count;
mod cyclotomic;
pub mod error;
pub mod graph;
pub mod interval;
pub mod oracle;

pub use certify::{certify_integer, CertifiedInteger, PrecisionBudget};
pub use closed_form::{
    asymptotic_estimate, asymptotic_ratio_exact, betaproduct_count, convergence_point, cycle_power_count,
    directed_cycle_count, theorem1_count, theorem2_count, PhaseForm,
};
pub use count::{CountResult, TreeCount};
pub use error::{Error, Result};
pub use graph::{
    cycle_power_instance, is_structurally_zero, laplacian, reduce_to_instance, CyclePowerSpec, CyclePowerVariant,
    DirectedCirculantSpec, GeneralCirculantInstance, LaplacianMatrix, ZeroReason,
};
pub use interval::{ComplexInterval, Interval};
pub use oracle::{tau_directed, tau_eigenproduct, tau_eigenproduct_count, tau_undirected};
pub use rug;
