//! Levi-Civita connection of the neutral metric, its curvature and Ricci
//! tensor, and the flatness equivalence.

use serde::Serialize;

use super::structures::{build_metric, Endomorphism, Metric};
use crate::algebra::AffineSymplecticData;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{add, concat, is_zero_vector, sub, unit_vector, Matrix};
use crate::rational::{self, Rational};
use crate::tensor::Tensor3;
use crate::verdict::Verdict;

/// Left-invariant connection on the algebra,
/// `coeffs[k][i][j] = (∇^g_{b_i} b_j)^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricConnection(Tensor3);

impl MetricConnection {
    pub fn tensor(&self) -> &Tensor3 {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// `∇^g_u v`.
    pub fn apply(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        self.0.apply(u, v)
    }

    /// Matrix of `∇^g_u`.
    pub fn operator(&self, u: &[Rational]) -> Matrix {
        self.0.left_operator(u)
    }

    pub fn basis_operator(&self, i: usize) -> Matrix {
        self.0.basis_operator(i)
    }

    /// `∇^g_u v − ∇^g_v u = [u, v]` on basis pairs.
    pub fn torsion_free_check(&self, algebra: &LieAlgebra) -> Verdict {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let t = sub(&self.0.basis_apply(i, j), &self.0.basis_apply(j, i));
                if t != algebra.basis_bracket(i, j) {
                    return Verdict::fail(vec![i, j]);
                }
            }
        }
        Verdict::pass()
    }

    /// `g(∇^g_u v, w) + g(v, ∇^g_u w) = 0` on basis triples.
    pub fn metric_check(&self, g: &Metric) -> Verdict {
        let n = self.dim();
        for i in 0..n {
            // g-skew: AᵀG + GA = 0
            let a = self.basis_operator(i);
            let s = a.transpose().mul(g.matrix()).add(&g.matrix().mul(&a));
            if !s.is_zero() {
                let (j, k) = (0..n)
                    .flat_map(|j| (0..n).map(move |k| (j, k)))
                    .find(|&(j, k)| !num_traits::Zero::is_zero(&s[(j, k)]))
                    .expect("nonzero matrix has a nonzero entry");
                return Verdict::fail(vec![i, j, k]);
            }
        }
        Verdict::pass()
    }

    /// `∇^g_u S = S ∇^g_u` for every basis `u`.
    pub fn parallel_check(&self, s: &Endomorphism) -> Verdict {
        for i in 0..self.dim() {
            let a = self.basis_operator(i);
            if a.mul(s.matrix()) != s.matrix().mul(&a) {
                return Verdict::fail(vec![i]);
            }
        }
        Verdict::pass()
    }

    /// Matrix of `u ↦ ∇^g_u v`.
    pub fn right_operator(&self, v: &[Rational]) -> Matrix {
        self.0.right_operator(v)
    }

    /// `(u ↦ ∇^g_u v)² = 0` for every `v`, checked in polarized form
    /// `T_v T_w + T_w T_v = 0` over basis pairs.
    pub fn right_operators_square_zero(&self) -> Verdict {
        let n = self.dim();
        let ts: Vec<Matrix> = (0..n).map(|i| self.right_operator(&unit_vector(n, i))).collect();
        for i in 0..n {
            for j in i..n {
                if !ts[i].mul(&ts[j]).add(&ts[j].mul(&ts[i])).is_zero() {
                    return Verdict::fail(vec![i, j]);
                }
            }
        }
        Verdict::pass()
    }
}

/// `∇^g_{(x,x')} = (∇_x + ∇′_{x'}) ⊕ (∇_x + ∇′_{x'})`, checked against the
/// torsion-free and metric conditions that characterize the Levi-Civita
/// connection.
pub fn levi_civita(data: &AffineSymplecticData) -> Result<MetricConnection> {
    let conn = levi_civita_unchecked(data);
    let algebra = LieAlgebra::from_data(data);
    if let Some(w) = conn.torsion_free_check(&algebra).witness {
        return Err(Error::internal(format!("Levi-Civita connection has torsion at {w:?}")));
    }
    if let Some(w) = conn.metric_check(&build_metric(data)).witness {
        return Err(Error::internal(format!("Levi-Civita connection is not metric at {w:?}")));
    }
    Ok(conn)
}

fn levi_civita_unchecked(data: &AffineSymplecticData) -> MetricConnection {
    let m = data.dim();
    let (n, np) = (data.nabla(), data.nabla_prime());
    MetricConnection(Tensor3::from_fn(2 * m, |i, j| {
        let u = unit_vector(2 * m, i);
        let v = unit_vector(2 * m, j);
        let (x, xp) = u.split_at(m);
        let (y, yp) = v.split_at(m);
        concat(
            &add(&n.apply(x, y), &np.apply(xp, y)),
            &add(&n.apply(x, yp), &np.apply(xp, yp)),
        )
    }))
}

/// Curvature endomorphisms `R(b_i, b_j)` for all basis pairs.
#[derive(Debug, Clone)]
pub struct CurvatureTensor {
    dim: usize,
    maps: Vec<Matrix>,
}

impl CurvatureTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `R(b_i, b_j)`.
    pub fn map(&self, i: usize, j: usize) -> &Matrix {
        &self.maps[i * self.dim + j]
    }

    /// `(R(b_i, b_j) b_k)^l`.
    pub fn component(&self, l: usize, k: usize, i: usize, j: usize) -> &Rational {
        &self.map(i, j)[(l, k)]
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn nonzero_pairs(&self) -> usize {
        self.maps.iter().filter(|m| !m.is_zero()).count()
    }

    /// `R(u,v)w + R(v,w)u + R(w,u)v = 0` on basis triples.
    pub fn first_bianchi_check(&self) -> Verdict {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s = add(
                        &add(&self.map(i, j).column(k), &self.map(j, k).column(i)),
                        &self.map(k, i).column(j),
                    );
                    if !is_zero_vector(&s) {
                        return Verdict::fail(vec![i, j, k]);
                    }
                }
            }
        }
        Verdict::pass()
    }

    /// `R(u, v) = −R(v, u)`, including `R(u, u) = 0`.
    pub fn antisymmetry_check(&self) -> Verdict {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                if self.map(i, j).add(self.map(j, i)) != Matrix::zeros(n, n) {
                    return Verdict::fail(vec![i, j]);
                }
            }
        }
        Verdict::pass()
    }
}

/// `R(u,v) = ∇^g_u ∇^g_v − ∇^g_v ∇^g_u − ∇^g_{[u,v]}` on every basis pair,
/// with no simplification.
pub fn curvature_of(conn: &MetricConnection, algebra: &LieAlgebra) -> CurvatureTensor {
    let n = conn.dim();
    let ops: Vec<Matrix> = (0..n).map(|i| conn.basis_operator(i)).collect();
    let mut maps = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let r = ops[i]
                .mul(&ops[j])
                .sub(&ops[j].mul(&ops[i]))
                .sub(&conn.operator(&algebra.basis_bracket(i, j)));
            maps.push(r);
        }
    }
    CurvatureTensor { dim: n, maps }
}

/// Curvature of the hypersymplectic metric, asserting `R(u,v) = −4 ad_{[u,v]}`
/// on every basis pair.
pub fn curvature(data: &AffineSymplecticData) -> Result<CurvatureTensor> {
    let conn = levi_civita(data)?;
    let algebra = LieAlgebra::from_data(data);
    let r = curvature_of(&conn, &algebra);
    if let Some(w) = curvature_identity_check(&r, &algebra).witness {
        return Err(Error::internal(format!(
            "curvature differs from -4 ad of the bracket at {w:?}"
        )));
    }
    Ok(r)
}

/// `R(b_i, b_j) = −4 ad_{[b_i, b_j]}`.
pub fn curvature_identity_check(r: &CurvatureTensor, algebra: &LieAlgebra) -> Verdict {
    let n = r.dim();
    let minus_four = rational::int(-4);
    for i in 0..n {
        for j in 0..n {
            let expected = algebra.ad(&algebra.basis_bracket(i, j)).scale(&minus_four);
            if *r.map(i, j) != expected {
                return Verdict::fail(vec![i, j]);
            }
        }
    }
    Verdict::pass()
}

/// `Ric(u, v) = tr(w ↦ R(w, u) v)`.
pub fn ricci_of(r: &CurvatureTensor) -> Matrix {
    let n = r.dim();
    let mut ric = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = rational::zero();
            for l in 0..n {
                acc += r.component(l, j, l, i);
            }
            ric[(i, j)] = acc;
        }
    }
    ric
}

/// Ricci tensor of the hypersymplectic metric; nonzero is an internal error.
pub fn ricci(data: &AffineSymplecticData) -> Result<Matrix> {
    let ric = ricci_of(&curvature(data)?);
    if !ric.is_zero() {
        return Err(Error::internal("Ricci tensor of a hypersymplectic metric is nonzero"));
    }
    Ok(ric)
}

/// The three conditions that must agree: the algebra is at most 2-step
/// nilpotent, `∇_x ∇′_y = 0`, and the metric is flat.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatnessReport {
    pub step: usize,
    pub nabla_product_zero: bool,
    pub flat: bool,
}

pub fn flatness_report(data: &AffineSymplecticData) -> Result<FlatnessReport> {
    let algebra = LieAlgebra::from_data(data);
    let step = algebra
        .lower_central_series()
        .step
        .ok_or_else(|| Error::internal("double Lie algebra is not nilpotent"))?;
    if step > 3 {
        return Err(Error::internal(format!("nilpotency step {step} exceeds 3")));
    }
    let report = FlatnessReport {
        step,
        nabla_product_zero: data.nabla_product_zero(),
        flat: curvature(data)?.is_zero(),
    };
    let two_step = step <= 2;
    if two_step != report.nabla_product_zero || two_step != report.flat {
        return Err(Error::internal(format!(
            "flatness conditions disagree: {report:?}"
        )));
    }
    Ok(report)
}
