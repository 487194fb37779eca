//! JSON data files.
//!
//! ```json
//! { "dim": 4, "nabla": [...], "nabla_prime": [...], "omega": [[0, 1, 0, 0], ...] }
//! ```
//!
//! `nabla[i]` is the `m×m` matrix of `∇_{e_i}` (row `k`, column `j` holds
//! `(∇_{e_i} e_j)^k`), matching how the operators are usually written down.
//! Entries are integers or `"p/q"` strings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{AffineSymplecticData, Connection, SymplecticForm};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::RationalRepr;

type Grid = Vec<Vec<RationalRepr>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataFile {
    pub dim: usize,
    pub nabla: Vec<Grid>,
    pub nabla_prime: Vec<Grid>,
    pub omega: Grid,
}

fn grid_to_matrix(g: &Grid, m: usize, what: &str) -> Result<Matrix> {
    if g.len() != m || g.iter().any(|r| r.len() != m) {
        return Err(Error::Parse(format!("{what} must be a {m}x{m} array")));
    }
    let rows = g
        .iter()
        .map(|r| r.iter().map(RationalRepr::to_rational).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows))
}

fn matrix_to_grid(m: &Matrix) -> Grid {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(RationalRepr::from_rational).collect())
        .collect()
}

fn connection_from(ops: &[Grid], m: usize, what: &str) -> Result<Connection> {
    if ops.len() != m {
        return Err(Error::Parse(format!("{what} must hold {m} operator matrices")));
    }
    let mats = ops
        .iter()
        .enumerate()
        .map(|(i, g)| grid_to_matrix(g, m, &format!("{what}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Connection::from_operators(&mats)
}

impl DataFile {
    pub fn from_parts(nabla: &Connection, nabla_prime: &Connection, omega: &SymplecticForm) -> Self {
        Self {
            dim: omega.dim(),
            nabla: nabla.operators().iter().map(matrix_to_grid).collect(),
            nabla_prime: nabla_prime.operators().iter().map(matrix_to_grid).collect(),
            omega: matrix_to_grid(omega.matrix()),
        }
    }

    pub fn from_data(data: &AffineSymplecticData) -> Self {
        Self::from_parts(data.nabla(), data.nabla_prime(), data.omega())
    }

    /// Decodes the three pieces without checking any affine condition. A
    /// degenerate or non-antisymmetric `omega` is already an error here.
    pub fn parts(&self) -> Result<(Connection, Connection, SymplecticForm)> {
        let m = self.dim;
        if m == 0 || !m.is_multiple_of(2) {
            return Err(Error::OddDimension(m));
        }
        let nabla = connection_from(&self.nabla, m, "nabla")?;
        let nabla_prime = connection_from(&self.nabla_prime, m, "nabla_prime")?;
        let omega = SymplecticForm::new(grid_to_matrix(&self.omega, m, "omega")?)?;
        Ok((nabla, nabla_prime, omega))
    }

    pub fn to_data(&self) -> Result<AffineSymplecticData> {
        let (a, b, w) = self.parts()?;
        AffineSymplecticData::new(a, b, w)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("data file serializes");
        s.push('\n');
        s
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{kodaira_data, threestep_data};
    use crate::rational::{frac, int};

    #[test]
    fn round_trip_preserves_data() {
        for data in [kodaira_data(1).unwrap(), threestep_data(&frac(1, 2), &int(-1), &frac(7, 3)).unwrap()] {
            let text = DataFile::from_data(&data).to_json();
            let back = DataFile::from_json(&text).unwrap().to_data().unwrap();
            assert_eq!(back.nabla(), data.nabla());
            assert_eq!(back.nabla_prime(), data.nabla_prime());
            assert_eq!(back.omega(), data.omega());
        }
    }

    #[test]
    fn operator_layout_is_row_k_column_j() {
        // ∇_{e1} e1 = e2 in the Kodaira family
        let f = DataFile::from_data(&kodaira_data(1).unwrap());
        assert_eq!(f.nabla[0][1][0], RationalRepr::Int(1));
        assert_eq!(f.nabla[0][0][1], RationalRepr::Int(0));
    }

    #[test]
    fn degenerate_omega_is_rejected() {
        let text = r#"{"dim": 2, "nabla": [[[0,0],[0,0]],[[0,0],[0,0]]],
            "nabla_prime": [[[0,0],[0,0]],[[0,0],[0,0]]], "omega": [[0,0],[0,0]]}"#;
        assert!(matches!(DataFile::from_json(text).unwrap().parts(), Err(Error::Degenerate)));
    }

    #[test]
    fn malformed_files_are_parse_errors() {
        assert!(matches!(DataFile::from_json("{\"dim\": 2}"), Err(Error::Parse(_))));
        let extra = r#"{"dim": 2, "nabla": [], "nabla_prime": [], "omega": [], "x": 1}"#;
        assert!(DataFile::from_json(extra).is_err());
        let short = r#"{"dim": 2, "nabla": [[[0,0],[0,0]]], "nabla_prime": [], "omega": [[0,1],[-1,0]]}"#;
        assert!(matches!(DataFile::from_json(short).unwrap().parts(), Err(Error::Parse(_))));
        let bad = r#"{"dim": 2, "nabla": [[[0,"x"],[0,0]],[[0,0],[0,0]]],
            "nabla_prime": [[[0,0],[0,0]],[[0,0],[0,0]]], "omega": [[0,1],[-1,0]]}"#;
        assert!(DataFile::from_json(bad).unwrap().parts().is_err());
    }
}
