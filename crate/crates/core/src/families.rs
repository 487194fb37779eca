//! Built-in affine symplectic data: the 2-step Kodaira family, the
//! three-parameter 3-step family on `R⁴`, and semidirect data with `∇′ = 0`.
//! Also the left-invariant coframe and metric in the global `(x, x')` chart.

use crate::algebra::{check_affine, check_omega_compat, AffineSymplecticData, Connection, SymplecticForm};
use crate::error::{Error, Result};
use crate::geometry::build_metric;
use crate::lie::{DoubleGroup, GroupElement};
use crate::linalg::{unit_vector, zero_vector, Matrix};
use crate::rational::Rational;

/// `∇_{e_i} e_i = e_{i+1}` for odd `i ≤ 2n`, `∇′_{e_i} e_i = e_{i+1}` for odd
/// `2n < i ≤ 4n` (one-based), all other products zero, canonical `ω` on `R^{4n}`.
pub fn kodaira_data(n: usize) -> Result<AffineSymplecticData> {
    if n == 0 {
        return Err(Error::Input("Kodaira family needs n >= 1".into()));
    }
    let m = 4 * n;
    // zero-based: even i is one-based odd
    let diag = |range: std::ops::Range<usize>| {
        Connection::from_fn(m, move |i, j| {
            if i == j && i % 2 == 0 && range.contains(&i) {
                unit_vector(m, i + 1)
            } else {
                zero_vector(m)
            }
        })
    };
    AffineSymplecticData::new(diag(0..2 * n), diag(2 * n..m), SymplecticForm::canonical(m)?)
}

fn ops(rows: [[[Rational; 4]; 4]; 4]) -> Vec<Matrix> {
    rows.into_iter()
        .map(|m| Matrix::from_rows(m.into_iter().map(Vec::from).collect()))
        .collect()
}

/// The family on `R⁴` with `ω = e¹∧e² + e³∧e⁴`, valid for every rational
/// `(a, b, c)`. The algebra is 3-step nilpotent unless `b = c`.
pub fn threestep_data(a: &Rational, b: &Rational, c: &Rational) -> Result<AffineSymplecticData> {
    let q = |n: i64| Rational::from_integer(n.into());
    let (z, o) = (q(0), q(1));
    let n1 = [
        [o.clone(), z.clone(), o.clone(), z.clone()],
        [z.clone(), -&o, z.clone(), o.clone()],
        [-&o, z.clone(), -&o, z.clone()],
        [z.clone(), -&o, z.clone(), o.clone()],
    ];
    let n2 = [
        [z.clone(), z.clone(), z.clone(), z.clone()],
        [-&o, z.clone(), -&o, z.clone()],
        [z.clone(), z.clone(), z.clone(), z.clone()],
        [-&o, z.clone(), -&o, z.clone()],
    ];
    let n4 = n2.clone().map(|r| r.map(|x| -x));
    let nabla = Connection::from_operators(&ops([n1.clone(), n2, n1, n4]))?;

    let (ma, bc, b2c) = (-a, -b + c * q(2), -(b * q(2)) + c * q(3));
    let p1 = [
        [a.clone(), z.clone(), a.clone(), z.clone()],
        [b.clone(), ma.clone(), c.clone(), a.clone()],
        [ma.clone(), z.clone(), ma.clone(), z.clone()],
        [c.clone(), ma.clone(), bc.clone(), a.clone()],
    ];
    let p2 = [
        [z.clone(), z.clone(), z.clone(), z.clone()],
        [ma.clone(), z.clone(), ma.clone(), z.clone()],
        [z.clone(), z.clone(), z.clone(), z.clone()],
        [ma.clone(), z.clone(), ma.clone(), z.clone()],
    ];
    let p3 = [
        [a.clone(), z.clone(), a.clone(), z.clone()],
        [c.clone(), ma.clone(), bc.clone(), a.clone()],
        [ma.clone(), z.clone(), ma.clone(), z.clone()],
        [bc, ma, b2c, a.clone()],
    ];
    let p4 = p2.clone().map(|r| r.map(|x| -x));
    let nabla_prime = Connection::from_operators(&ops([p1, p2, p3, p4]))?;

    AffineSymplecticData::new(nabla, nabla_prime, SymplecticForm::canonical(4)?)
}

/// Data `(c, 0, w)`; the resulting algebra is `A ⋉ A` for the left-symmetric
/// algebra `A` defined by `c`.
pub fn affa_data(c: Connection, w: SymplecticForm) -> Result<AffineSymplecticData> {
    if c.dim() != w.dim() {
        return Err(Error::DimensionMismatch {
            expected: w.dim(),
            found: c.dim(),
        });
    }
    if let Some(wit) = check_affine(&c).witness {
        return Err(Error::Input(format!("connection is not affine at {wit:?}")));
    }
    if let Some(wit) = check_omega_compat(&c, &w)?.witness {
        return Err(Error::Input(format!(
            "connection is not compatible with the symplectic form at {wit:?}"
        )));
    }
    let m = c.dim();
    AffineSymplecticData::new(c, Connection::zero(m), w)
}

/// Components of the left-invariant coframe `(e¹..eᵐ, f¹..fᵐ)` at `p`:
/// row `k` holds the `dx_1..dx_m, dx'_1..dx'_m` coefficients of the `k`-th
/// form. This is the inverse of the differential of `L_p` at the identity.
pub fn coframe_at_point(data: &AffineSymplecticData, p: &GroupElement) -> Result<Matrix> {
    check_point(data, p)?;
    let group = DoubleGroup::new(data);
    group
        .left_translation_jacobian(p, &group.identity())
        .inverse()
        .ok_or_else(|| Error::internal("left translation has a singular differential"))
}

/// The left-invariant metric at `p` in chart coordinates, `Θᵀ G Θ`.
pub fn metric_at_point(data: &AffineSymplecticData, p: &GroupElement) -> Result<Matrix> {
    let theta = coframe_at_point(data, p)?;
    Ok(theta.transpose().mul(build_metric(data).matrix()).mul(&theta))
}

fn check_point(data: &AffineSymplecticData, p: &GroupElement) -> Result<()> {
    if p.dim() != data.dim() {
        return Err(Error::DimensionMismatch {
            expected: 2 * data.dim(),
            found: 2 * p.dim(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;
    use crate::rational::{frac, int};

    #[test]
    fn kodaira_brackets_for_n_1() {
        let data = kodaira_data(1).unwrap();
        let l = LieAlgebra::from_data(&data);
        // [e1, f1] = f2, [e3, f3] = -e4
        let mut f2 = vec![int(0); 8];
        f2[5] = int(1);
        let mut me4 = vec![int(0); 8];
        me4[3] = int(-1);
        assert_eq!(l.basis_bracket(0, 4), f2);
        assert_eq!(l.basis_bracket(2, 6), me4);
        assert_eq!(l.to_table().brackets.len(), 2);
    }

    #[test]
    fn kodaira_rejects_zero() {
        assert!(kodaira_data(0).is_err());
    }

    #[test]
    fn threestep_validates_for_sample_parameters() {
        for (a, b, c) in [(0, 1, 0), (1, 1, 1), (-2, 2, 1)] {
            threestep_data(&int(a), &int(b), &int(c)).unwrap();
        }
        threestep_data(&frac(1, 2), &frac(-3, 7), &int(5)).unwrap();
    }

    #[test]
    fn threestep_product_is_rank_one() {
        let (b, c) = (int(3), int(-1));
        let data = threestep_data(&int(2), &b, &c).unwrap();
        let prod = data
            .nabla()
            .basis_operator(0)
            .mul(&data.nabla_prime().basis_operator(0));
        let v = -&b + &c;
        let z = int(0);
        let expected = Matrix::from_rows(vec![
            vec![z.clone(), z.clone(), z.clone(), z.clone()],
            vec![v.clone(), z.clone(), v.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), z.clone()],
            vec![v.clone(), z.clone(), v, z],
        ]);
        assert_eq!(prod, expected);
    }

    #[test]
    fn affa_rejects_non_affine() {
        let mut op = Matrix::zeros(2, 2);
        op[(0, 0)] = int(1);
        let c = Connection::from_operators(&[op, Matrix::zeros(2, 2)]).unwrap();
        assert!(affa_data(c, SymplecticForm::canonical(2).unwrap()).is_err());
    }

    #[test]
    fn affa_zero_is_abelian() {
        let data = affa_data(Connection::zero(4), SymplecticForm::canonical(4).unwrap()).unwrap();
        assert!(LieAlgebra::from_data(&data).is_abelian());
    }

    #[test]
    fn coframe_at_identity_is_identity() {
        let data = threestep_data(&int(1), &int(2), &int(3)).unwrap();
        let e = GroupElement::identity(4);
        assert_eq!(coframe_at_point(&data, &e).unwrap(), Matrix::identity(8));
        assert_eq!(&metric_at_point(&data, &e).unwrap(), build_metric(&data).matrix());
    }
}
