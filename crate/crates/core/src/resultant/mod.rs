//! Toric resultant matrices, the perturbed resultant and univariate reduction.

mod lp;
mod pert;
mod plan;
pub(crate) mod reduction;
mod support;

pub use pert::{Eliminant, PertEngine, PertOptions, PertResult, SchurData};
pub use plan::{
    build_matrix, build_matrix_or_dense, eval_resultant, macaulay_plan, size_constant, PlanKind,
    ResultantMatrixPlan, RowSpec,
};
pub use reduction::{
    compute_pert, default_square_up_set, monomial_reduction, square_up, univariate_reduction,
    PertConfig, ReductionOptions, UnivariateReduction,
};
pub use support::{segment_condition, simplex_support, system_supports, SupportPolicy, SupportTuple};
