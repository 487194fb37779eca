use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::rational::Rational;
use crate::tensor::Tensor3;

/// A bilinear map `∇ : Qᵐ × Qᵐ → Qᵐ`, `(x, y) ↦ ∇_x y`.
///
/// Coefficients follow `coeffs[k][i][j] = (∇_{e_i} e_j)^k`; equivalently,
/// column `j` of the operator matrix of `∇_{e_i}` is `∇_{e_i} e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection(Tensor3);

impl Connection {
    pub fn zero(dim: usize) -> Self {
        Self(Tensor3::zeros(dim))
    }

    pub fn from_tensor(t: Tensor3) -> Self {
        Self(t)
    }

    /// From the operator matrices of `∇_{e_1}, …, ∇_{e_m}`.
    pub fn from_operators(ops: &[Matrix]) -> Result<Self> {
        let m = ops.len();
        for op in ops {
            if op.rows() != m || op.cols() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: if op.rows() != m { op.rows() } else { op.cols() },
                });
            }
        }
        Ok(Self(Tensor3::from_operators(ops)))
    }

    /// From the values `∇_{e_i} e_j`.
    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Vector) -> Self {
        Self(Tensor3::from_fn(dim, f))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `∇_x y`, checking lengths.
    pub fn try_apply(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        Ok(self.0.apply(x, y))
    }

    /// `∇_x y`. Panics on length mismatch; use [`Connection::try_apply`] for
    /// unchecked input.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        assert_eq!(x.len(), self.dim());
        assert_eq!(y.len(), self.dim());
        self.0.apply(x, y)
    }

    /// Matrix of `∇_x`.
    pub fn operator(&self, x: &[Rational]) -> Matrix {
        self.0.left_operator(x)
    }

    /// Matrix of `∇_{e_i}`.
    pub fn basis_operator(&self, i: usize) -> Matrix {
        self.0.basis_operator(i)
    }

    pub fn operators(&self) -> Vec<Matrix> {
        self.0.operators()
    }
}

/// A non-degenerate antisymmetric form, `matrix[i][j] = ω(e_i, e_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticForm {
    matrix: Matrix,
}

impl SymplecticForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let m = matrix.rows();
        if matrix.cols() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: matrix.cols(),
            });
        }
        if m == 0 || !m.is_multiple_of(2) {
            return Err(Error::OddDimension(m));
        }
        if let Some((i, j)) = matrix.antisymmetry_violation() {
            return Err(Error::NotAntisymmetric(i, j));
        }
        if matrix.determinant().is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(Self { matrix })
    }

    /// `e¹∧e² + e³∧e⁴ + … + e^{m-1}∧e^m`.
    pub fn canonical(m: usize) -> Result<Self> {
        if m == 0 || !m.is_multiple_of(2) {
            return Err(Error::OddDimension(m));
        }
        let mut w = Matrix::zeros(m, m);
        for p in (0..m).step_by(2) {
            w[(p, p + 1)] = crate::rational::one();
            w[(p + 1, p)] = -crate::rational::one();
        }
        Self::new(w)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `ω(x, y)`.
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.matrix.bilinear(x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;
    use crate::rational::int;

    #[test]
    fn zero_connection_applies_to_zero() {
        let c = Connection::zero(4);
        let x = vec![int(1), int(2), int(3), int(4)];
        assert_eq!(c.apply(&x, &x), vec![int(0); 4]);
    }

    #[test]
    fn apply_rejects_wrong_length() {
        let c = Connection::zero(4);
        assert!(matches!(
            c.try_apply(&[int(1)], &unit_vector(4, 0)),
            Err(Error::DimensionMismatch { expected: 4, found: 1 })
        ));
    }

    #[test]
    fn degenerate_and_odd_forms_are_rejected() {
        assert!(matches!(SymplecticForm::new(Matrix::zeros(4, 4)), Err(Error::Degenerate)));
        assert!(matches!(SymplecticForm::canonical(3), Err(Error::OddDimension(3))));
        let sym = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(matches!(SymplecticForm::new(sym), Err(Error::NotAntisymmetric(0, 1))));
    }
}
