use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::AffineSymplecticData;
use crate::error::{Error, Result};
use crate::linalg::{add, concat, is_zero_vector, sub, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::rational::{self, Rational};
use crate::tensor::Tensor3;
use crate::verdict::Verdict;

/// Label of basis vector `i` of `Qᵐ ⊕ Qᵐ` in the ordering `e_1..e_m, f_1..f_m`.
pub fn basis_label(i: usize, m: usize) -> String {
    if i < m {
        format!("e{}", i + 1)
    } else {
        format!("f{}", i - m + 1)
    }
}

/// A finite-dimensional algebra with an antisymmetric bracket, given by its
/// structure constants `C[k][i][j] = [b_i, b_j]^k`.
///
/// Antisymmetry is enforced on construction. The Jacobi identity is not,
/// so corrupted tables can be represented and rejected by
/// [`LieAlgebra::jacobi_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    constants: Tensor3,
}

impl LieAlgebra {
    pub fn from_constants(constants: Tensor3) -> Result<Self> {
        let n = constants.dim();
        for i in 0..n {
            for j in i..n {
                let (a, b) = (constants.basis_apply(i, j), constants.basis_apply(j, i));
                if add(&a, &b).iter().any(|c| !c.is_zero()) {
                    return Err(Error::Input(format!(
                        "structure constants are not antisymmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { constants })
    }

    /// Builds the algebra from `[b_i, b_j]` for `i < j`.
    pub fn from_brackets(dim: usize, mut bracket: impl FnMut(usize, usize) -> Vector) -> Result<Self> {
        let mut table = vec![vec![zero_vector(dim); dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let v = bracket(i, j);
                table[j][i] = v.iter().map(|c| -c).collect();
                table[i][j] = v;
            }
        }
        Self::from_constants(Tensor3::from_fn(dim, |i, j| table[i][j].clone()))
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            constants: Tensor3::zeros(dim),
        }
    }

    /// The double Lie algebra of validated data, on `Qᵐ ⊕ Qᵐ`:
    /// `[(x,x'),(y,y')] = (∇'_y x' − ∇'_x y', ∇_x y' − ∇_y x')`.
    pub fn from_data(data: &AffineSymplecticData) -> Self {
        let m = data.dim();
        let (nabla, nabla_prime) = (data.nabla(), data.nabla_prime());
        let constants = Tensor3::from_fn(2 * m, |i, j| {
            let u = unit_vector(2 * m, i);
            let v = unit_vector(2 * m, j);
            let (x, xp) = u.split_at(m);
            let (y, yp) = v.split_at(m);
            let first = sub(&nabla_prime.apply(y, xp), &nabla_prime.apply(x, yp));
            let second = sub(&nabla.apply(x, yp), &nabla.apply(y, xp));
            concat(&first, &second)
        });
        Self { constants }
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn constants(&self) -> &Tensor3 {
        &self.constants
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_zero()
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vector {
        self.constants.apply(u, v)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        self.constants.basis_apply(i, j)
    }

    /// Matrix of `ad_u = [u, ·]`.
    pub fn ad(&self, u: &[Rational]) -> Matrix {
        self.constants.left_operator(u)
    }

    /// First basis triple violating Jacobi, checked over `i < j < k`.
    pub fn jacobi_check(&self) -> Verdict {
        let n = self.dim();
        let nested = |a: usize, b: usize, c: usize| {
            self.bracket(&self.basis_bracket(a, b), &unit_vector(n, c))
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let total = add(&add(&nested(i, j, k), &nested(j, k, i)), &nested(k, i, j));
                    if !is_zero_vector(&total) {
                        return Verdict::fail(vec![i, j, k]);
                    }
                }
            }
        }
        Verdict::pass()
    }

    /// `[A, B]` for subspaces, as the span of brackets of basis vectors.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for u in a.basis() {
            for v in b.basis() {
                let w = self.bracket(u, v);
                if !is_zero_vector(&w) {
                    vs.push(w);
                }
            }
        }
        Subspace::span(self.dim(), &vs)
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …`, stopping at zero or when the series
    /// stabilizes.
    pub fn lower_central_series(&self) -> CentralSeries {
        let n = self.dim();
        let whole = Subspace::whole(n);
        let mut terms = vec![whole.clone()];
        for _ in 0..=n {
            let last = terms.last().expect("series is never empty");
            if last.is_zero() {
                let step = terms.len() - 1;
                return CentralSeries { terms, step: Some(step) };
            }
            let next = self.bracket_subspaces(&whole, last);
            if next.dim() == last.dim() {
                terms.push(next);
                return CentralSeries { terms, step: None };
            }
            terms.push(next);
        }
        CentralSeries { terms, step: None }
    }

    /// `{u : [u, v] = 0 for all v}`.
    pub fn centre(&self) -> Subspace {
        let n = self.dim();
        let mut m = Matrix::zeros(n * n, n);
        for &(k, i, j) in self.constants.support() {
            m[(j * n + k, i)] = self.constants.get(k, i, j).clone();
        }
        Subspace::kernel(&m)
    }

    /// Structure constants as the exchange document.
    pub fn to_table(&self) -> BracketTable {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.basis_bracket(i, j);
                if !is_zero_vector(&v) {
                    brackets.push(BracketEntry {
                        i,
                        j,
                        coeffs: v.iter().map(rational::format).collect(),
                    });
                }
            }
        }
        BracketTable { dim: n, brackets }
    }

    pub fn from_table(table: &BracketTable) -> Result<Self> {
        let n = table.dim;
        let mut map = std::collections::BTreeMap::new();
        for e in &table.brackets {
            if e.i >= e.j || e.j >= n || e.coeffs.len() != n {
                return Err(Error::Parse(format!("bad bracket entry ({}, {})", e.i, e.j)));
            }
            let v = e.coeffs.iter().map(|s| rational::parse(s)).collect::<Result<Vector>>()?;
            map.insert((e.i, e.j), v);
        }
        Self::from_brackets(n, |i, j| map.get(&(i, j)).cloned().unwrap_or_else(|| zero_vector(n)))
    }
}

/// Lower central series and nilpotency step. `step` is the first index whose
/// term vanishes (term 0 is the whole algebra); `None` when not nilpotent.
#[derive(Debug, Clone)]
pub struct CentralSeries {
    pub terms: Vec<Subspace>,
    pub step: Option<usize>,
}

impl CentralSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

/// `{"dim": n, "brackets": [{"i", "j", "coeffs"}]}` with zero-based `i < j`
/// and only nonzero brackets listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketTable {
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

/// `{(x, x') : ∇_x = ∇_{x'} = ∇′_x = ∇′_{x'} = 0}`, the centre predicted from
/// the data alone.
pub fn centre_from_data(data: &AffineSymplecticData) -> Subspace {
    let m = data.dim();
    let mut rows = Matrix::zeros(2 * m * m, m);
    for (c, conn) in [data.nabla(), data.nabla_prime()].into_iter().enumerate() {
        let t = conn.tensor();
        for &(k, i, j) in t.support() {
            rows[(c * m * m + k * m + j, i)] = t.get(k, i, j).clone();
        }
    }
    let kernel = rows.null_space();
    let zero = zero_vector(m);
    let mut vs = Vec::new();
    for x in &kernel {
        vs.push(concat(x, &zero));
        vs.push(concat(&zero, x));
    }
    Subspace::span(2 * m, &vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{kodaira_data, threestep_data};
    use crate::rational::int;

    fn from_pairs(dim: usize, pairs: &[(usize, usize, usize)]) -> LieAlgebra {
        LieAlgebra::from_brackets(dim, |i, j| {
            let mut v = zero_vector(dim);
            for &(a, b, k) in pairs {
                if (a, b) == (i, j) {
                    v[k] = int(1);
                }
            }
            v
        })
        .unwrap()
    }

    #[test]
    fn labels() {
        assert_eq!(basis_label(0, 4), "e1");
        assert_eq!(basis_label(5, 4), "f2");
    }

    #[test]
    fn rejects_non_antisymmetric_constants() {
        let mut t = Tensor3::zeros(2);
        t.set(0, 0, 1, int(1));
        assert!(LieAlgebra::from_constants(t).is_err());
    }

    #[test]
    fn jacobi_failure_has_witness() {
        // [b0,b1] = b2, [b1,b2] = b1
        let l = from_pairs(3, &[(0, 1, 2), (1, 2, 1)]);
        assert_eq!(l.jacobi_check().witness, Some(vec![0, 1, 2]));
        assert!(from_pairs(3, &[(0, 1, 2)]).jacobi_check().pass);
    }

    #[test]
    fn nilpotency_steps() {
        assert_eq!(LieAlgebra::abelian(3).lower_central_series().step, Some(1));
        let heis = from_pairs(3, &[(0, 1, 2)]);
        let series = heis.lower_central_series();
        assert_eq!((series.step, series.dims()), (Some(2), vec![3, 1, 0]));
        // [b0, b1] = b1 is solvable, not nilpotent
        assert_eq!(from_pairs(2, &[(0, 1, 1)]).lower_central_series().step, None);
    }

    #[test]
    fn heisenberg_centre() {
        let c = from_pairs(3, &[(0, 1, 2)]).centre();
        assert_eq!(c.basis(), &[unit_vector(3, 2)]);
    }

    #[test]
    fn family_steps_and_centres() {
        let k = kodaira_data(1).unwrap();
        let l = LieAlgebra::from_data(&k);
        assert_eq!(l.lower_central_series().step, Some(2));
        assert_eq!(l.centre(), centre_from_data(&k));
        let t = threestep_data(&int(0), &int(1), &int(0)).unwrap();
        let l = LieAlgebra::from_data(&t);
        assert_eq!(l.lower_central_series().step, Some(3));
        assert_eq!(l.centre(), centre_from_data(&t));
    }

    #[test]
    fn table_round_trip() {
        let l = LieAlgebra::from_data(&threestep_data(&int(2), &int(-1), &int(3)).unwrap());
        let table = l.to_table();
        let json = serde_json::to_string(&table).unwrap();
        let back: BracketTable = serde_json::from_str(&json).unwrap();
        assert_eq!(LieAlgebra::from_table(&back).unwrap(), l);
    }

    #[test]
    fn table_rejects_bad_entry() {
        let table = BracketTable {
            dim: 2,
            brackets: vec![BracketEntry {
                i: 1,
                j: 0,
                coeffs: vec!["1".into(), "0".into()],
            }],
        };
        assert!(LieAlgebra::from_table(&table).is_err());
    }
}
