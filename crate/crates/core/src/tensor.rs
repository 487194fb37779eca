//! Rank-3 coefficient arrays encoding bilinear maps `Qⁿ × Qⁿ → Qⁿ`.

use num_traits::Zero;

use crate::linalg::{zero_vector, Matrix, Vector};
use crate::rational::Rational;

/// Coefficients `t[k][i][j]` of a bilinear map `B`, with
/// `B(e_i, e_j) = Σ_k t[k][i][j] e_k`.
///
/// Connections, structure constants and the Levi-Civita connection all use
/// this layout. Nonzero entries are indexed separately because every tensor
/// in this crate is sparse.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Rational>,
    nonzero: Vec<(usize, usize, usize)>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Rational::zero(); dim * dim * dim],
            nonzero: Vec::new(),
        }
    }

    /// Builds the tensor from `f(i, j) = B(e_i, e_j)`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut t = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "bilinear map output has wrong length");
                for (k, c) in v.into_iter().enumerate() {
                    t.data[(k * dim + i) * dim + j] = c;
                }
            }
        }
        t.reindex();
        t
    }

    /// Builds the tensor from the operator matrices `L_i = B(e_i, ·)`, so that
    /// column `j` of `ops[i]` is `B(e_i, e_j)`.
    pub fn from_operators(ops: &[Matrix]) -> Self {
        let dim = ops.len();
        Self::from_fn(dim, |i, j| ops[i].column(j))
    }

    fn reindex(&mut self) {
        let d = self.dim;
        self.nonzero.clear();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !self.data[(k * d + i) * d + j].is_zero() {
                        self.nonzero.push((k, i, j));
                    }
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.data[(k * self.dim + i) * self.dim + j]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, v: Rational) {
        let d = self.dim;
        self.data[(k * d + i) * d + j] = v;
        self.reindex();
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero.is_empty()
    }

    /// Indices `(k, i, j)` of the nonzero coefficients.
    pub fn support(&self) -> &[(usize, usize, usize)] {
        &self.nonzero
    }

    /// `B(x, y)`.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim);
        for &(k, i, j) in &self.nonzero {
            let (a, b) = (&x[i], &y[j]);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            out[k] += self.get(k, i, j) * a * b;
        }
        out
    }

    /// `B(e_i, e_j)`.
    pub fn basis_apply(&self, i: usize, j: usize) -> Vector {
        (0..self.dim).map(|k| self.get(k, i, j).clone()).collect()
    }

    /// Matrix of `y ↦ B(x, y)`.
    pub fn left_operator(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for &(k, i, j) in &self.nonzero {
            if !x[i].is_zero() {
                m[(k, j)] += self.get(k, i, j) * &x[i];
            }
        }
        m
    }

    /// Matrix of `x ↦ B(x, y)`.
    pub fn right_operator(&self, y: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for &(k, i, j) in &self.nonzero {
            if !y[j].is_zero() {
                m[(k, i)] += self.get(k, i, j) * &y[j];
            }
        }
        m
    }

    /// Matrix of `B(e_i, ·)`.
    pub fn basis_operator(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for &(k, ii, j) in &self.nonzero {
            if ii == i {
                m[(k, j)] = self.get(k, i, j).clone();
            }
        }
        m
    }

    pub fn operators(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.basis_operator(i)).collect()
    }

    pub fn scale(&self, s: &Rational) -> Tensor3 {
        let mut t = self.clone();
        for v in &mut t.data {
            *v *= s;
        }
        t.reindex();
        t
    }
}

impl std::fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Tensor3")
            .field("dim", &self.dim)
            .field("nonzero", &self.nonzero.len())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;
    use crate::rational::int;

    #[test]
    fn operators_and_apply_agree() {
        let t = Tensor3::from_fn(3, |i, j| {
            (0..3).map(|k| int((k * 9 + i * 3 + j) as i64 % 5 - 2)).collect()
        });
        let x = vec![int(1), int(-2), int(3)];
        let y = vec![int(0), int(4), int(-1)];
        let direct = t.apply(&x, &y);
        assert_eq!(t.left_operator(&x).mul_vec(&y), direct);
        assert_eq!(t.right_operator(&y).mul_vec(&x), direct);
        assert_eq!(Tensor3::from_operators(&t.operators()), t);
        assert_eq!(t.apply(&unit_vector(3, 1), &unit_vector(3, 2)), t.basis_apply(1, 2));
    }
}
