//! Affine-symplectic input data and its validation.

mod connection;
mod io;
mod validate;

pub use connection::{Connection, SymplecticForm};
pub use io::DataFile;
pub use validate::{
    check_affine, check_anticommuting, check_commuting, check_omega_compat, check_pair,
    check_pair_swapped, check_square_zero, check_torsion_free, validate_data,
    AffineSymplecticData, Check, Role, ValidationReport, Witness,
};
