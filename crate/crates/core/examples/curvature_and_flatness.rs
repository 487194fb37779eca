//! Levi-Civita connection and curvature of the neutral metric, compared with
//! `-4 ad_[u,v]`.

use hypersymplectic::families::{kodaira_data, threestep_data};
use hypersymplectic::geometry::{curvature, curvature_identity_check, levi_civita, ricci_of};
use hypersymplectic::lie::{basis_label, LieAlgebra};
use hypersymplectic::rational::int;
use hypersymplectic::algebra::AffineSymplecticData;

fn describe(name: &str, data: &AffineSymplecticData) -> anyhow::Result<()> {
    let l = LieAlgebra::from_data(data);
    let conn = levi_civita(data)?;
    let r = curvature(data)?;
    println!("{name}");
    println!("  torsion free: {}", conn.torsion_free_check(&l).pass);
    println!("  R = -4 ad_[u,v]: {}", curvature_identity_check(&r, &l).pass);
    println!("  nonzero R(b_i, b_j): {}", r.nonzero_pairs());
    println!("  Ricci zero: {}", ricci_of(&r).is_zero());
    let m = data.dim();
    for i in 0..2 * m {
        for j in i + 1..2 * m {
            if !r.map(i, j).is_zero() {
                println!("    R({}, {}) has rank {}", basis_label(i, m), basis_label(j, m), r.map(i, j).rank());
            }
        }
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    describe("Kodaira n=1", &kodaira_data(1)?)?;
    describe("three-step (0, 1, 0)", &threestep_data(&int(0), &int(1), &int(0))?)?;
    Ok(())
}
