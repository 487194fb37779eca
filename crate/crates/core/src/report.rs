//! The full verification pipeline and its JSON report.
//!
//! Field order in the serialized report is fixed by the struct layout, so the
//! same input always produces byte-identical output.

use serde::Serialize;

use crate::abelian::{abelian_report, AbelianReport};
use crate::algebra::{AffineSymplecticData, ValidationReport};
use crate::error::{Error, Result};
use crate::geometry::{
    build_forms, build_j_e, build_metric, curvature, curvature_identity_check, d_closed,
    flatness_report, geodesic_closed_form, hypersymplectic_identities, integrability_check,
    levi_civita, ricci_of, FlatnessReport, Forms, HypersymplecticIdentities, Metric, StructureKind,
};
use crate::lie::{centre_from_data, AuditSummary, BracketTable, DoubleGroup, GroupElement, LieAlgebra};
use crate::linalg::{add, scale, unit_vector, Matrix};
use crate::rational;

#[derive(Debug, Clone, Serialize)]
pub struct ClosedForms {
    pub omega1: bool,
    pub omega2: bool,
    pub omega3: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Integrability {
    pub j: bool,
    pub e: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CentreReport {
    pub basis: Vec<Vec<String>>,
    pub matches_data: bool,
    pub j_stable: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LeviCivitaReport {
    pub torsion_free: bool,
    pub metric: bool,
    pub j_parallel: bool,
    pub e_parallel: bool,
    /// Only meaningful when flat; `null` otherwise.
    pub right_operators_square_zero: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurvatureSummary {
    pub nonzero_pairs: usize,
    pub minus_four_ad_identity: bool,
    pub antisymmetric: bool,
    pub first_bianchi: bool,
}

/// Geodesics through every basis initial condition and a few mixed ones are
/// linear in `t` with vanishing residual, hence defined for all `t`.
#[derive(Debug, Clone, Serialize)]
pub struct CompletenessWitness {
    pub initial_conditions: usize,
    pub residual_free: bool,
    pub linear: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub dim: usize,
    pub algebra_dim: usize,
    pub validation: ValidationReport,
    pub brackets: BracketTable,
    pub jacobi: bool,
    pub central_series_dims: Vec<usize>,
    pub step: usize,
    pub centre_dim: usize,
    pub centre: CentreReport,
    pub closed: ClosedForms,
    pub integrable: Integrability,
    pub identities: HypersymplecticIdentities,
    pub signature: [usize; 2],
    pub forms: Forms,
    pub metric: Metric,
    pub levi_civita: LeviCivitaReport,
    pub curvature: CurvatureSummary,
    pub flatness: FlatnessReport,
    pub flat: bool,
    pub ricci_zero: bool,
    pub abelian: AbelianReport,
    pub group_audit: AuditSummary,
    pub completeness: CompletenessWitness,
}

/// `curvature` subcommand output.
#[derive(Debug, Clone, Serialize)]
pub struct CurvatureReport {
    pub step: usize,
    pub flat: bool,
    pub ricci_zero: bool,
    pub flatness: FlatnessReport,
    pub curvature: CurvatureSummary,
    /// `(i, j)` with `R(b_i, b_j) ≠ 0`, `i < j`.
    pub nonzero: Vec<CurvatureEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurvatureEntry {
    pub i: usize,
    pub j: usize,
    pub map: Matrix,
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::internal(format!("{what} failed on validated data")))
    }
}

/// A deterministic set of `2m` triples mixing basis directions.
pub fn audit_triples(m: usize) -> Vec<[GroupElement; 3]> {
    let n = 2 * m;
    let b = |i: usize| unit_vector(n, i % n);
    let at = |v: Vec<rational::Rational>| GroupElement::from_coords(&v);
    (0..n)
        .map(|i| {
            let q = add(&scale(&rational::int(2), &b(i + 1)), &scale(&rational::int(-1), &b(i)));
            let r = add(&scale(&rational::frac(1, 2), &b(i + 3)), &b(i + m));
            [at(b(i)), at(q), at(r)]
        })
        .collect()
}

fn curvature_summary(data: &AffineSymplecticData, algebra: &LieAlgebra) -> Result<(CurvatureSummary, Vec<CurvatureEntry>, bool)> {
    let r = curvature(data)?;
    let n = r.dim();
    let nonzero = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !r.map(i, j).is_zero())
        .map(|(i, j)| CurvatureEntry {
            i,
            j,
            map: r.map(i, j).clone(),
        })
        .collect();
    let summary = CurvatureSummary {
        nonzero_pairs: r.nonzero_pairs(),
        minus_four_ad_identity: curvature_identity_check(&r, algebra).pass,
        antisymmetric: r.antisymmetry_check().pass,
        first_bianchi: r.first_bianchi_check().pass,
    };
    require(summary.antisymmetric, "curvature antisymmetry")?;
    require(summary.first_bianchi, "first Bianchi identity")?;
    let ricci_zero = ricci_of(&r).is_zero();
    require(ricci_zero, "Ricci flatness")?;
    Ok((summary, nonzero, ricci_zero))
}

pub fn curvature_report(data: &AffineSymplecticData) -> Result<CurvatureReport> {
    let algebra = LieAlgebra::from_data(data);
    let flatness = flatness_report(data)?;
    let (curvature, nonzero, ricci_zero) = curvature_summary(data, &algebra)?;
    Ok(CurvatureReport {
        step: flatness.step,
        flat: flatness.flat,
        ricci_zero,
        flatness,
        curvature,
        nonzero,
    })
}

fn completeness(data: &AffineSymplecticData) -> Result<CompletenessWitness> {
    let m = data.dim();
    let mut count = 0;
    for i in 0..2 * m {
        let v = add(&unit_vector(2 * m, i), &scale(&rational::frac(-1, 3), &unit_vector(2 * m, (i + 1) % (2 * m))));
        for w in [unit_vector(2 * m, i), v] {
            let (a0, b0) = w.split_at(m);
            // nonzero residual is an internal error inside the call
            geodesic_closed_form(data, a0, b0)?;
            count += 1;
        }
    }
    Ok(CompletenessWitness {
        initial_conditions: count,
        residual_free: true,
        linear: true,
    })
}

/// Runs every check on validated data. Any failure of an identity that holds
/// for all valid data is returned as an internal error.
pub fn verify_all(data: &AffineSymplecticData) -> Result<VerifyReport> {
    let m = data.dim();
    let algebra = LieAlgebra::from_data(data);
    let jacobi = algebra.jacobi_check().pass;
    require(jacobi, "Jacobi identity")?;

    let series = algebra.lower_central_series();
    let flatness = flatness_report(data)?;

    let centre = algebra.centre();
    let (j, e) = build_j_e(m);
    let centre_report = CentreReport {
        basis: centre.basis_strings(),
        matches_data: centre == centre_from_data(data),
        j_stable: centre.image(j.matrix()) == centre,
    };
    require(centre_report.matches_data, "centre description")?;

    let forms = build_forms(data);
    let closed = ClosedForms {
        omega1: d_closed(&forms.omega1, &algebra)?.pass,
        omega2: d_closed(&forms.omega2, &algebra)?.pass,
        omega3: d_closed(&forms.omega3, &algebra)?.pass,
    };
    require(closed.omega1 && closed.omega2 && closed.omega3, "closedness of the forms")?;
    let integrable = Integrability {
        j: integrability_check(&j, StructureKind::Complex, &algebra)?.pass,
        e: integrability_check(&e, StructureKind::Product, &algebra)?.pass,
    };
    require(integrable.j && integrable.e, "integrability of J and E")?;

    let metric = build_metric(data);
    let identities = hypersymplectic_identities(&forms, &j, &e, &metric);
    require(identities.all_hold(), "hypersymplectic identities")?;

    let conn = levi_civita(data)?;
    let lc = LeviCivitaReport {
        torsion_free: conn.torsion_free_check(&algebra).pass,
        metric: conn.metric_check(&metric).pass,
        j_parallel: conn.parallel_check(&j).pass,
        e_parallel: conn.parallel_check(&e).pass,
        right_operators_square_zero: flatness.flat.then(|| conn.right_operators_square_zero().pass),
    };
    require(lc.j_parallel && lc.e_parallel, "parallelism of J and E")?;
    require(lc.right_operators_square_zero != Some(false), "nilpotency of the flat connection")?;

    let (curv, _, ricci_zero) = curvature_summary(data, &algebra)?;

    let abelian = abelian_report(&algebra, &j, &e)?;
    require(abelian.complex_product && abelian.values() == [true; 4], "abelian conditions")?;

    let audit = DoubleGroup::new(data).audit_samples(&audit_triples(m));
    if let Some(f) = &audit.failure {
        return Err(Error::internal(format!("group law {} fails", f.law)));
    }

    Ok(VerifyReport {
        dim: m,
        algebra_dim: 2 * m,
        validation: data.report().clone(),
        brackets: algebra.to_table(),
        jacobi,
        central_series_dims: series.dims(),
        step: flatness.step,
        centre_dim: centre.dim(),
        centre: centre_report,
        closed,
        integrable,
        signature: [identities.signature.0, identities.signature.1],
        identities,
        forms,
        metric,
        levi_civita: lc,
        curvature: curv,
        flat: flatness.flat,
        flatness,
        ricci_zero,
        abelian,
        group_audit: (&audit).into(),
        completeness: completeness(data)?,
    })
}

/// Pretty JSON with two-space indent and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
