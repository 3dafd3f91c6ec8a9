//! Instances shared by the benchmarks.

use std::sync::Arc;

use hitt::algebra::BoundQuiverAlgebra;
use hitt::ct::{build_ct_catalog, iterate_auslander, CtCatalog};
use hitt::module::Algebra;

/// The Auslander algebra of `A_3`.
pub fn eg1_algebra() -> Algebra {
    Arc::new(iterate_auslander(3, 2).expect("Auslander algebra of A_3"))
}

/// `A_7` modulo paths of length 3.
pub fn eg2_algebra() -> Algebra {
    Arc::new(BoundQuiverAlgebra::linear_an(7, Some(3)).expect("truncated A_7"))
}

pub fn eg1() -> CtCatalog {
    build_ct_catalog(&eg1_algebra(), 2, None).expect("eg1 catalog")
}

pub fn eg2() -> CtCatalog {
    build_ct_catalog(&eg2_algebra(), 4, None).expect("eg2 catalog")
}
