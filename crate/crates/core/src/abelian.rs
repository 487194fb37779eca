//! Abelian complex and product structures and the four conditions that
//! characterize them for a complex product structure `{J, E}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{integrability_check, Endomorphism, StructureKind};
use crate::lie::LieAlgebra;
use crate::linalg::{dot, is_zero_vector, Matrix, Subspace, Vector};
use crate::rational;
use crate::verdict::Verdict;

fn check_dim(l: &LieAlgebra, s: &Endomorphism) -> Result<()> {
    if s.dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: s.dim(),
        });
    }
    Ok(())
}

/// `[S b_i, S b_j] = sign·[b_i, b_j]` on every basis pair.
fn twisted_bracket_check(l: &LieAlgebra, s: &Endomorphism, sign: i64) -> Verdict {
    let n = l.dim();
    let cols: Vec<Vector> = (0..n).map(|i| s.matrix().column(i)).collect();
    let sign = rational::int(sign);
    for i in 0..n {
        for j in i + 1..n {
            let lhs = l.bracket(&cols[i], &cols[j]);
            let rhs: Vector = l.basis_bracket(i, j).iter().map(|c| c * &sign).collect();
            if lhs != rhs {
                return Verdict::fail(vec![i, j]);
            }
        }
    }
    Verdict::pass()
}

/// `[Jx, Jy] = [x, y]`.
pub fn abelian_j(l: &LieAlgebra, j: &Endomorphism) -> Result<Verdict> {
    check_dim(l, j)?;
    Ok(twisted_bracket_check(l, j, 1))
}

/// `[Ex, Ey] = −[x, y]`.
pub fn abelian_e(l: &LieAlgebra, e: &Endomorphism) -> Result<Verdict> {
    check_dim(l, e)?;
    Ok(twisted_bracket_check(l, e, -1))
}

/// The `±1` eigenspaces `(g₊, g₋)` of a product structure.
pub fn eigenspaces(e: &Endomorphism) -> Result<(Subspace, Subspace)> {
    if !e.is_kind(StructureKind::Product) {
        return Err(Error::Input("E does not square to the identity".into()));
    }
    let id = Matrix::identity(e.dim());
    Ok((
        Subspace::kernel(&e.matrix().sub(&id)),
        Subspace::kernel(&e.matrix().add(&id)),
    ))
}

/// Indices into the concatenated bases of `g₊` then `g₋`.
fn abelian_pairs(l: &LieAlgebra, plus: &Subspace, minus: &Subspace) -> Verdict {
    for (offset, space) in [(0, plus), (plus.dim(), minus)] {
        let b = space.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !is_zero_vector(&l.bracket(&b[i], &b[j])) {
                    return Verdict::fail(vec![offset + i, offset + j]);
                }
            }
        }
    }
    Verdict::pass()
}

/// Both eigenspaces of `E` are abelian subalgebras. The witness indexes the
/// concatenated eigenspace bases (`g₊` first), which for the canonical `E`
/// is the ambient basis order.
pub fn subalgebras_abelian(l: &LieAlgebra, e: &Endomorphism) -> Result<Verdict> {
    check_dim(l, e)?;
    let (plus, minus) = eigenspaces(e)?;
    Ok(abelian_pairs(l, &plus, &minus))
}

/// `{f ∈ g* : f(v) = 0 for v ∈ V}` as coefficient vectors in the dual basis.
fn annihilator(space: &Subspace) -> Vec<Vector> {
    if space.is_zero() {
        return Subspace::whole(space.ambient()).basis().to_vec();
    }
    Matrix::from_rows(space.basis().to_vec()).null_space()
}

/// For `f` in bases of both annihilators, `df(x, y) = −f([x, y])` vanishes
/// whenever `x, y` both lie in `g₊` or both in `g₋`. Witness: the index of
/// `f` in the concatenated annihilator bases (`A₊` first) and the pair.
pub fn annihilator_condition(l: &LieAlgebra, e: &Endomorphism) -> Result<Verdict> {
    check_dim(l, e)?;
    let (plus, minus) = eigenspaces(e)?;
    let duals: Vec<Vector> = annihilator(&plus).into_iter().chain(annihilator(&minus)).collect();
    for (offset, space) in [(0, &plus), (plus.dim(), &minus)] {
        let b = space.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let br = l.bracket(&b[i], &b[j]);
                for (k, f) in duals.iter().enumerate() {
                    let df = -dot(f, &br);
                    if !num_traits::Zero::is_zero(&df) {
                        return Ok(Verdict::fail(vec![k, offset + i, offset + j]));
                    }
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// Conditions for `{J, E}` to be a complex product structure on `l`.
fn is_complex_product(l: &LieAlgebra, j: &Endomorphism, e: &Endomorphism) -> Result<bool> {
    if !l.jacobi_check().pass || !j.is_kind(StructureKind::Complex) || !e.is_kind(StructureKind::Product) {
        return Ok(false);
    }
    if !j.compose(e).matrix().add(e.compose(j).matrix()).is_zero() {
        return Ok(false);
    }
    let (plus, minus) = eigenspaces(e)?;
    Ok(plus.dim() == minus.dim()
        && integrability_check(j, StructureKind::Complex, l)?.pass
        && integrability_check(e, StructureKind::Product, l)?.pass)
}

/// The four conditions, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianReport {
    pub abelian_j: bool,
    pub subalgebras_abelian: bool,
    pub annihilator_condition: bool,
    pub abelian_e: bool,
    /// Whether `{J, E}` is a complex product structure, so the four must agree.
    pub complex_product: bool,
}

impl AbelianReport {
    pub fn values(&self) -> [bool; 4] {
        [
            self.abelian_j,
            self.subalgebras_abelian,
            self.annihilator_condition,
            self.abelian_e,
        ]
    }

    pub fn coincide(&self) -> bool {
        let v = self.values();
        v.iter().all(|&b| b == v[0])
    }
}

/// Evaluates the four conditions. When `{J, E}` is a complex product
/// structure they must coincide, and disagreement is an internal error.
/// Otherwise each is reported on its own.
pub fn abelian_report(l: &LieAlgebra, j: &Endomorphism, e: &Endomorphism) -> Result<AbelianReport> {
    check_dim(l, j)?;
    let report = AbelianReport {
        abelian_j: abelian_j(l, j)?.pass,
        subalgebras_abelian: subalgebras_abelian(l, e)?.pass,
        annihilator_condition: annihilator_condition(l, e)?.pass,
        abelian_e: abelian_e(l, e)?.pass,
        complex_product: is_complex_product(l, j, e)?,
    };
    if report.complex_product && !report.coincide() {
        return Err(Error::internal(format!(
            "abelian conditions disagree on a complex product structure: {report:?}"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{kodaira_data, threestep_data};
    use crate::geometry::build_j_e;
    use crate::linalg::{unit_vector, zero_vector};
    use crate::rational::int;

    fn algebra(dim: usize, brackets: &[(usize, usize, usize, i64)]) -> LieAlgebra {
        LieAlgebra::from_brackets(dim, |i, j| {
            let mut v = zero_vector(dim);
            for &(a, b, k, c) in brackets {
                if (a, b) == (i, j) {
                    v[k] = int(c);
                }
            }
            v
        })
        .unwrap()
    }

    #[test]
    fn constructed_algebras_are_abelian_in_all_four_senses() {
        for data in [kodaira_data(1).unwrap(), threestep_data(&int(0), &int(1), &int(0)).unwrap()] {
            let l = LieAlgebra::from_data(&data);
            let (j, e) = build_j_e(data.dim());
            let r = abelian_report(&l, &j, &e).unwrap();
            assert!(r.complex_product);
            assert_eq!(r.values(), [true; 4]);
        }
    }

    #[test]
    fn abelian_algebra_passes_everything() {
        let (j, e) = build_j_e(3);
        let r = abelian_report(&LieAlgebra::abelian(6), &j, &e).unwrap();
        assert_eq!(r.values(), [true; 4]);
    }

    #[test]
    fn heisenberg_with_centre_swapping_j_fails() {
        // [b0, b1] = b2; J: b0 -> b2 -> -b0, b1 -> b3 -> -b1
        let l = algebra(4, &[(0, 1, 2, 1)]);
        let cols = [unit_vector(4, 2), unit_vector(4, 3), crate::linalg::neg(&unit_vector(4, 0)), crate::linalg::neg(&unit_vector(4, 1))];
        let j = Endomorphism::new(Matrix::from_columns(&cols)).unwrap();
        assert!(j.is_kind(StructureKind::Complex));
        assert_eq!(abelian_j(&l, &j).unwrap().witness, Some(vec![0, 1]));
    }

    #[test]
    fn identity_as_e_fails_on_nonabelian() {
        let l = algebra(4, &[(0, 1, 2, 1)]);
        let id = Endomorphism::new(Matrix::identity(4)).unwrap();
        assert!(!abelian_e(&l, &id).unwrap().pass);
        assert!(!subalgebras_abelian(&l, &id).unwrap().pass);
        assert!(!annihilator_condition(&l, &id).unwrap().pass);
    }

    #[test]
    fn corrupted_bracket_is_caught_at_e1_e2() {
        // [e1, e2] = f1 on Q² ⊕ Q²
        let l = algebra(4, &[(0, 1, 2, 1)]);
        let (j, e) = build_j_e(2);
        assert_eq!(subalgebras_abelian(&l, &e).unwrap().witness, Some(vec![0, 1]));
        assert!(!annihilator_condition(&l, &e).unwrap().pass);
        let r = abelian_report(&l, &j, &e).unwrap();
        assert!(!r.complex_product);
    }

    #[test]
    fn semidirect_from_nonabelian_lsa_fails_all_four() {
        // A = aff(R) with e1·e2 = e2; g = A ⋉ A: [a1, a2] = a2, [a1, b2] = b2
        let l = algebra(4, &[(0, 1, 1, 1), (0, 3, 3, 1)]);
        assert!(l.jacobi_check().pass);
        let (j, e) = build_j_e(2);
        let r = abelian_report(&l, &j, &e).unwrap();
        assert!(r.complex_product);
        assert_eq!(r.values(), [false; 4]);
    }

    #[test]
    fn rejects_non_product_e() {
        let (j, _) = build_j_e(2);
        assert!(subalgebras_abelian(&LieAlgebra::abelian(4), &j).is_err());
    }
}
