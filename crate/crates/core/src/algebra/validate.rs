//! Exact checks of the affine-symplectic conditions.
//!
//! Every condition is bilinear or trilinear in its arguments, so checking it
//! on basis vectors is equivalent to checking it everywhere. Witness indices
//! are zero-based basis indices.

use serde::Serialize;

use super::connection::{Connection, SymplecticForm};
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Matrix};

/// Which piece of the data a witness refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Nabla,
    NablaPrime,
    Pair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub role: Role,
    pub indices: Vec<usize>,
}

/// Outcome of one exact check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn ok() -> Self {
        Self {
            pass: true,
            witness: None,
        }
    }

    pub fn fail(role: Role, indices: Vec<usize>) -> Self {
        Self {
            pass: false,
            witness: Some(Witness { role, indices }),
        }
    }

    fn with_role(mut self, role: Role) -> Self {
        if let Some(w) = &mut self.witness {
            w.role = role;
        }
        self
    }

    /// First failure of `self` and `other`, preferring `self`.
    pub fn and(self, other: Check) -> Check {
        if self.pass {
            other
        } else {
            self
        }
    }
}

fn require_same_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch {
            expected: a,
            found: b,
        });
    }
    Ok(())
}

/// `∇_x y = ∇_y x`.
pub fn check_torsion_free(c: &Connection) -> Check {
    let m = c.dim();
    let t = c.tensor();
    for i in 0..m {
        for j in i + 1..m {
            if t.basis_apply(i, j) != t.basis_apply(j, i) {
                return Check::fail(Role::Nabla, vec![i, j]);
            }
        }
    }
    Check::ok()
}

/// First `(i, j, k)` where `left(i, j) e_k ≠ right(i, j) e_k`.
fn compare_products(
    m: usize,
    left: impl Fn(usize, usize) -> Matrix,
    right: impl Fn(usize, usize) -> Matrix,
    role: Role,
) -> Check {
    for i in 0..m {
        for j in 0..m {
            let (l, r) = (left(i, j), right(i, j));
            if l != r {
                let k = (0..m)
                    .find(|&k| l.column(k) != r.column(k))
                    .expect("unequal matrices differ in some column");
                return Check::fail(role, vec![i, j, k]);
            }
        }
    }
    Check::ok()
}

/// `∇_x ∇_y = ∇_y ∇_x`.
pub fn check_commuting(c: &Connection) -> Check {
    let ops = c.operators();
    compare_products(
        c.dim(),
        |i, j| ops[i].mul(&ops[j]),
        |i, j| ops[j].mul(&ops[i]),
        Role::Nabla,
    )
}

/// Both affine conditions: torsion-free, then commuting operators.
pub fn check_affine(c: &Connection) -> Check {
    check_torsion_free(c).and(check_commuting(c))
}

/// `ω(∇_x y, z) = ω(∇_x z, y)`.
pub fn check_omega_compat(c: &Connection, w: &SymplecticForm) -> Result<Check> {
    require_same_dim(c.dim(), w.dim())?;
    let m = c.dim();
    let t = c.tensor();
    for i in 0..m {
        for j in 0..m {
            let xy = t.basis_apply(i, j);
            for k in j..m {
                let xz = t.basis_apply(i, k);
                if w.eval(&xy, &unit_vector(m, k)) != w.eval(&xz, &unit_vector(m, j)) {
                    return Ok(Check::fail(Role::Nabla, vec![i, j, k]));
                }
            }
        }
    }
    Ok(Check::ok())
}

/// `∇_x ∇_y = 0`.
pub fn check_square_zero(c: &Connection) -> Check {
    let ops = c.operators();
    let zero = Matrix::zeros(c.dim(), c.dim());
    compare_products(c.dim(), |i, j| ops[i].mul(&ops[j]), |_, _| zero.clone(), Role::Nabla)
}

/// `∇_x ∇'_y = ∇_y ∇'_x`.
pub fn check_pair(c1: &Connection, c2: &Connection) -> Result<Check> {
    require_same_dim(c1.dim(), c2.dim())?;
    let (a, b) = (c1.operators(), c2.operators());
    Ok(compare_products(
        c1.dim(),
        |i, j| a[i].mul(&b[j]),
        |i, j| a[j].mul(&b[i]),
        Role::Pair,
    ))
}

/// `∇'_x ∇_y = ∇'_y ∇_x`.
pub fn check_pair_swapped(c1: &Connection, c2: &Connection) -> Result<Check> {
    check_pair(c2, c1).map(|c| c.with_role(Role::Pair))
}

/// `∇_x ∇'_y = −∇'_y ∇_x`.
pub fn check_anticommuting(c1: &Connection, c2: &Connection) -> Result<Check> {
    require_same_dim(c1.dim(), c2.dim())?;
    let (a, b) = (c1.operators(), c2.operators());
    Ok(compare_products(
        c1.dim(),
        |i, j| a[i].mul(&b[j]),
        |i, j| b[j].mul(&a[i]).neg(),
        Role::Pair,
    ))
}

/// Outcome of all seven conditions on a candidate `(∇, ∇′, ω)`.
///
/// The hypotheses are: both connections torsion-free, with commuting
/// operators and compatible with `ω`, plus `∇_x ∇′_y = ∇_y ∇′_x`. The other
/// three conditions follow from those, so a derived failure alongside passing
/// hypotheses is an internal error rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub dim: usize,
    pub torsion_free: Check,
    pub commuting: Check,
    pub omega_compatible: Check,
    pub square_zero: Check,
    pub pair_compatible: Check,
    pub pair_compatible_swapped: Check,
    pub anticommuting: Check,
}

impl ValidationReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.torsion_free.pass && self.commuting.pass && self.omega_compatible.pass && self.pair_compatible.pass
    }

    /// Derived conditions that fail although their premises pass.
    pub fn internal_failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let base = self.torsion_free.pass && self.commuting.pass && self.omega_compatible.pass;
        if base && !self.square_zero.pass {
            out.push("square_zero");
        }
        if base && self.pair_compatible.pass {
            if !self.pair_compatible_swapped.pass {
                out.push("pair_compatible_swapped");
            }
            if !self.anticommuting.pass {
                out.push("anticommuting");
            }
        }
        out
    }

    pub fn checks(&self) -> [(&'static str, &Check); 7] {
        [
            ("torsion_free", &self.torsion_free),
            ("commuting", &self.commuting),
            ("omega_compatible", &self.omega_compatible),
            ("square_zero", &self.square_zero),
            ("pair_compatible", &self.pair_compatible),
            ("pair_compatible_swapped", &self.pair_compatible_swapped),
            ("anticommuting", &self.anticommuting),
        ]
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let failed: Vec<String> = self
            .checks()
            .iter()
            .filter(|(_, c)| !c.pass)
            .map(|(n, c)| match &c.witness {
                Some(w) => format!("{n} at {:?} {:?}", w.role, w.indices),
                None => n.to_string(),
            })
            .collect();
        if failed.is_empty() {
            write!(f, "all conditions hold")
        } else {
            write!(f, "failed {}", failed.join(", "))
        }
    }
}

/// Runs every condition on `(∇, ∇′, ω)` and reports each one.
pub fn validate_data(
    nabla: &Connection,
    nabla_prime: &Connection,
    omega: &SymplecticForm,
) -> Result<ValidationReport> {
    let m = omega.dim();
    require_same_dim(m, nabla.dim())?;
    require_same_dim(m, nabla_prime.dim())?;
    if m == 0 || !m.is_multiple_of(2) {
        return Err(Error::OddDimension(m));
    }
    let primed = |c: Check| c.with_role(Role::NablaPrime);
    Ok(ValidationReport {
        dim: m,
        torsion_free: check_torsion_free(nabla).and(primed(check_torsion_free(nabla_prime))),
        commuting: check_commuting(nabla).and(primed(check_commuting(nabla_prime))),
        omega_compatible: check_omega_compat(nabla, omega)?.and(primed(check_omega_compat(nabla_prime, omega)?)),
        square_zero: check_square_zero(nabla).and(primed(check_square_zero(nabla_prime))),
        pair_compatible: check_pair(nabla, nabla_prime)?,
        pair_compatible_swapped: check_pair_swapped(nabla, nabla_prime)?,
        anticommuting: check_anticommuting(nabla, nabla_prime)?,
    })
}

/// A validated triple `(∇, ∇′, ω)` on `Qᵐ`.
#[derive(Debug, Clone)]
pub struct AffineSymplecticData {
    nabla: Connection,
    nabla_prime: Connection,
    omega: SymplecticForm,
    report: ValidationReport,
}

impl AffineSymplecticData {
    pub fn new(nabla: Connection, nabla_prime: Connection, omega: SymplecticForm) -> Result<Self> {
        let report = validate_data(&nabla, &nabla_prime, &omega)?;
        if !report.hypotheses_hold() {
            return Err(Error::InvalidData(Box::new(report)));
        }
        let bad = report.internal_failures();
        if !bad.is_empty() {
            return Err(Error::internal(format!(
                "derived conditions {bad:?} fail on data satisfying the hypotheses"
            )));
        }
        Ok(Self {
            nabla,
            nabla_prime,
            omega,
            report,
        })
    }

    /// `m`, the dimension of the base space.
    pub fn dim(&self) -> usize {
        self.omega.dim()
    }

    pub fn nabla(&self) -> &Connection {
        &self.nabla
    }

    pub fn nabla_prime(&self) -> &Connection {
        &self.nabla_prime
    }

    pub fn omega(&self) -> &SymplecticForm {
        &self.omega
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }

    /// `∇_{e_i} ∇′_{e_j} = 0` for every basis pair.
    pub fn nabla_product_zero(&self) -> bool {
        let (a, b) = (self.nabla.operators(), self.nabla_prime.operators());
        a.iter().all(|x| b.iter().all(|y| x.mul(y).is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn asymmetric() -> Connection {
        // ∇_{e_1} e_2 = e_1, everything else zero.
        Connection::from_fn(2, |i, j| {
            if (i, j) == (0, 1) {
                vec![int(1), int(0)]
            } else {
                vec![int(0), int(0)]
            }
        })
    }

    #[test]
    fn torsion_witness_points_at_the_asymmetric_pair() {
        let c = check_affine(&asymmetric());
        assert!(!c.pass);
        assert_eq!(c.witness.unwrap().indices, vec![0, 1]);
    }

    #[test]
    fn zero_connection_is_compatible_with_any_form() {
        let w = SymplecticForm::canonical(4).unwrap();
        assert!(check_omega_compat(&Connection::zero(4), &w).unwrap().pass);
        assert!(check_pair(&Connection::zero(4), &Connection::zero(4)).unwrap().pass);
    }

    #[test]
    fn validate_reports_hypothesis_failures_as_invalid_input() {
        let w = SymplecticForm::canonical(2).unwrap();
        let err = AffineSymplecticData::new(asymmetric(), Connection::zero(2), w).unwrap_err();
        match err {
            Error::InvalidData(r) => {
                assert!(!r.torsion_free.pass);
                assert_eq!(r.torsion_free.witness.as_ref().unwrap().role, Role::Nabla);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mismatched_dimensions_are_input_errors() {
        let w = SymplecticForm::canonical(4).unwrap();
        let err = validate_data(&Connection::zero(2), &Connection::zero(4), &w).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }
}
