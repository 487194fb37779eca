//! Left-invariant forms, the complex and product structures, and the neutral
//! metric on the double Lie algebra, all as matrices in the basis
//! `e_1..e_m, f_1..f_m`.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::AffineSymplecticData;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{add, is_zero_vector, sub, unit_vector, Matrix};
use crate::rational::Rational;
use crate::verdict::Verdict;

/// Antisymmetric bilinear form, `matrix[i][j] = ω(b_i, b_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TwoForm {
    matrix: Matrix,
}

impl TwoForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Input("two-form matrix must be square".into()));
        }
        if let Some((i, j)) = matrix.antisymmetry_violation() {
            return Err(Error::NotAntisymmetric(i, j));
        }
        Ok(Self { matrix })
    }

    /// `e^i ∧ e^j` on an `n`-dimensional space.
    pub fn wedge(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        if i != j {
            m[(i, j)] = crate::rational::one();
            m[(j, i)] = -crate::rational::one();
        }
        Self { matrix: m }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        self.matrix.bilinear(u, v)
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.determinant().is_zero()
    }

    /// Restriction to `Q^k` embedded at coordinates `offset..offset+k`.
    pub fn restrict(&self, offset: usize, k: usize) -> Matrix {
        self.matrix.sub_block(offset, offset, k, k)
    }
}

/// The three forms built from `ω`:
/// `ω1 = ω(x,y) + ω(x',y')`, `ω2 = −ω(x,y') + ω(y,x')`, `ω3 = ω(x,y) − ω(x',y')`.
#[derive(Debug, Clone, Serialize)]
pub struct Forms {
    pub omega1: TwoForm,
    pub omega2: TwoForm,
    pub omega3: TwoForm,
}

impl Forms {
    pub fn all(&self) -> [(&'static str, &TwoForm); 3] {
        [("omega1", &self.omega1), ("omega2", &self.omega2), ("omega3", &self.omega3)]
    }
}

pub fn build_forms(data: &AffineSymplecticData) -> Forms {
    let w = data.omega().matrix();
    let m = data.dim();
    let z = Matrix::zeros(m, m);
    let form = |mat| TwoForm::new(mat).expect("forms built from ω are antisymmetric");
    Forms {
        omega1: form(Matrix::block(w, &z, &z, w)),
        omega2: form(Matrix::block(&z, &w.neg(), &w.neg(), &z)),
        omega3: form(Matrix::block(w, &z, &z, &w.neg())),
    }
}

/// `dω(x,y,z) = ω(x,[y,z]) + ω(y,[z,x]) + ω(z,[x,y])` on every basis triple.
pub fn d_closed(form: &TwoForm, algebra: &LieAlgebra) -> Result<Verdict> {
    let n = algebra.dim();
    if form.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: form.dim(),
        });
    }
    let b = |i| unit_vector(n, i);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let total = form.eval(&b(i), &algebra.basis_bracket(j, k))
                    + form.eval(&b(j), &algebra.basis_bracket(k, i))
                    + form.eval(&b(k), &algebra.basis_bracket(i, j));
                if !total.is_zero() {
                    return Ok(Verdict::fail(vec![i, j, k]));
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// Whether an endomorphism squares to `−Id` or `+Id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    Complex,
    Product,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Endomorphism {
    matrix: Matrix,
}

impl Endomorphism {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Input("endomorphism matrix must be square".into()));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v)
    }

    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism {
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn is_kind(&self, kind: StructureKind) -> bool {
        let sq = self.matrix.mul(&self.matrix);
        let id = Matrix::identity(self.dim());
        match kind {
            StructureKind::Complex => sq == id.neg(),
            StructureKind::Product => sq == id,
        }
    }
}

/// `J(x, y) = (−y, x)` and `E(x, y) = (x, −y)` on `Qᵐ ⊕ Qᵐ`.
pub fn build_j_e(m: usize) -> (Endomorphism, Endomorphism) {
    let id = Matrix::identity(m);
    let z = Matrix::zeros(m, m);
    (
        Endomorphism {
            matrix: Matrix::block(&z, &id.neg(), &id, &z),
        },
        Endomorphism {
            matrix: Matrix::block(&id, &z, &z, &id.neg()),
        },
    )
}

/// Vanishing of the Nijenhuis-type tensor on every basis pair:
/// `S[u,v] = [Su,v] + [u,Sv] ∓ S[Su,Sv]` (minus for product, plus for complex).
pub fn integrability_check(s: &Endomorphism, kind: StructureKind, algebra: &LieAlgebra) -> Result<Verdict> {
    let n = algebra.dim();
    if s.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: s.dim(),
        });
    }
    if !s.is_kind(kind) {
        return Err(Error::Input(format!("endomorphism is not of {kind:?} type")));
    }
    let cols: Vec<Vec<Rational>> = (0..n).map(|i| s.matrix.column(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let (u, v) = (unit_vector(n, i), unit_vector(n, j));
            let lhs = s.apply(&algebra.basis_bracket(i, j));
            let twisted = s.apply(&algebra.bracket(&cols[i], &cols[j]));
            let sum = add(&algebra.bracket(&cols[i], &v), &algebra.bracket(&u, &cols[j]));
            let rhs = match kind {
                StructureKind::Product => sub(&sum, &twisted),
                StructureKind::Complex => add(&sum, &twisted),
            };
            if !is_zero_vector(&sub(&lhs, &rhs)) {
                return Ok(Verdict::fail(vec![i, j]));
            }
        }
    }
    Ok(Verdict::pass())
}

/// Symmetric bilinear form on the algebra, `matrix[i][j] = g(b_i, b_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Metric {
    matrix: Matrix,
}

impl Metric {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::Input("metric matrix must be symmetric".into()));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        self.matrix.bilinear(u, v)
    }

    /// `(positive, negative, null)` counts.
    pub fn signature(&self) -> (usize, usize, usize) {
        self.matrix.signature()
    }

    /// `S ↦ Sᵀ G S`, the matrix of `g(S·, S·)`.
    pub fn pulled_back(&self, s: &Endomorphism) -> Matrix {
        s.matrix.transpose().mul(&self.matrix).mul(&s.matrix)
    }

    /// Matrix of `g(S·, ·)`.
    pub fn lowered(&self, s: &Endomorphism) -> Matrix {
        s.matrix.transpose().mul(&self.matrix)
    }

    /// `g(v, w) = 0` for all `v, w` in the span of basis vectors `range`.
    pub fn is_isotropic_on(&self, range: std::ops::Range<usize>) -> bool {
        range.clone().all(|i| range.clone().all(|j| self.matrix[(i, j)].is_zero()))
    }
}

/// `g((x,x'),(y,y')) = −ω(x,y') + ω(x',y)`.
pub fn build_metric(data: &AffineSymplecticData) -> Metric {
    let w = data.omega().matrix();
    let z = Matrix::zeros(data.dim(), data.dim());
    Metric::new(Matrix::block(&z, &w.neg(), w, &z)).expect("metric built from ω is symmetric")
}

/// The algebraic identities tying `J`, `E`, `g` and `ω1..ω3` together.
#[derive(Debug, Clone, Serialize)]
pub struct HypersymplecticIdentities {
    pub j_squared_minus_id: bool,
    pub e_squared_id: bool,
    pub j_e_anticommute: bool,
    pub g_j_invariant: bool,
    pub g_e_anti_invariant: bool,
    pub omega1_from_g: bool,
    pub omega2_from_g: bool,
    pub omega3_from_g: bool,
    pub signature: (usize, usize),
    pub neutral: bool,
    pub n_plus_isotropic: bool,
    pub n_minus_isotropic: bool,
}

impl HypersymplecticIdentities {
    pub fn all_hold(&self) -> bool {
        self.j_squared_minus_id
            && self.e_squared_id
            && self.j_e_anticommute
            && self.g_j_invariant
            && self.g_e_anti_invariant
            && self.omega1_from_g
            && self.omega2_from_g
            && self.omega3_from_g
            && self.neutral
            && self.n_plus_isotropic
            && self.n_minus_isotropic
    }
}

pub fn hypersymplectic_identities(
    forms: &Forms,
    j: &Endomorphism,
    e: &Endomorphism,
    g: &Metric,
) -> HypersymplecticIdentities {
    let n = g.dim();
    let half = n / 2;
    let je = j.compose(e);
    let ej = e.compose(j);
    let (pos, negs, null) = g.signature();
    HypersymplecticIdentities {
        j_squared_minus_id: j.is_kind(StructureKind::Complex),
        e_squared_id: e.is_kind(StructureKind::Product),
        j_e_anticommute: je.matrix == ej.matrix.neg(),
        g_j_invariant: g.pulled_back(j) == g.matrix,
        g_e_anti_invariant: g.pulled_back(e) == g.matrix.neg(),
        omega1_from_g: g.lowered(j) == forms.omega1.matrix,
        omega2_from_g: g.lowered(e) == forms.omega2.matrix,
        omega3_from_g: g.lowered(&je) == forms.omega3.matrix,
        signature: (pos, negs),
        neutral: pos == half && negs == half && null == 0,
        n_plus_isotropic: g.is_isotropic_on(0..half),
        n_minus_isotropic: g.is_isotropic_on(half..n),
    }
}
