//! The double Lie algebra and double Lie group built from affine-symplectic
//! data, with nilpotency, centre and group-law checks.

mod algebra;
mod group;

pub use algebra::{
    basis_label, centre_from_data, BracketEntry, BracketTable, CentralSeries, LieAlgebra,
};
pub use group::{AuditFailure, AuditReport, AuditSummary, DoubleGroup, GroupElement};
