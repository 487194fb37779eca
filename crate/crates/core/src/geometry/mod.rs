//! The hypersymplectic package on the double Lie algebra: forms, structures,
//! metric, Levi-Civita connection, curvature and geodesics.

mod curvature;
mod geodesic;
mod structures;

pub use curvature::{
    curvature, curvature_identity_check, curvature_of, flatness_report, levi_civita, ricci,
    ricci_of, CurvatureTensor, FlatnessReport, MetricConnection,
};
pub use geodesic::{
    geodesic_closed_form, geodesic_numeric, residual_coefficients, rk4, GeodesicCurve, Trajectory,
};
pub use structures::{
    build_forms, build_j_e, build_metric, d_closed, hypersymplectic_identities,
    integrability_check, Endomorphism, Forms, HypersymplecticIdentities, Metric, StructureKind,
    TwoForm,
};
