//! The four abelian conditions on a complex product structure, evaluated on a
//! constructed algebra and on a semidirect product where all fail together.

use hypersymplectic::abelian::abelian_report;
use hypersymplectic::families::threestep_data;
use hypersymplectic::geometry::build_j_e;
use hypersymplectic::lie::LieAlgebra;
use hypersymplectic::linalg::zero_vector;
use hypersymplectic::rational::int;

fn main() -> anyhow::Result<()> {
    let data = threestep_data(&int(0), &int(1), &int(0))?;
    let (j, e) = build_j_e(data.dim());
    let r = abelian_report(&LieAlgebra::from_data(&data), &j, &e)?;
    println!("three-step (0,1,0): {r:?}");

    // aff(R) ⋉ aff(R): [a1, a2] = a2, [a1, b2] = b2
    let l = LieAlgebra::from_brackets(4, |i, k| {
        let mut v = zero_vector(4);
        match (i, k) {
            (0, 1) => v[1] = int(1),
            (0, 3) => v[3] = int(1),
            _ => {}
        }
        v
    })?;
    let (j, e) = build_j_e(2);
    let r = abelian_report(&l, &j, &e)?;
    println!("semidirect product: {r:?}");
    println!("conditions coincide: {}", r.coincide());
    Ok(())
}
