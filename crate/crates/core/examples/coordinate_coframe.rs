//! Left-invariant coframe and metric in the global chart of a three-step group.

use hypersymplectic::families::{coframe_at_point, metric_at_point, threestep_data};
use hypersymplectic::lie::{DoubleGroup, GroupElement};
use hypersymplectic::linalg::Matrix;
use hypersymplectic::rational::{frac, int};

fn print(name: &str, m: &Matrix) {
    println!("{name}:");
    for row in m.to_strings() {
        println!("  [{}]", row.iter().map(|s| format!("{s:>5}")).collect::<Vec<_>>().join(" "));
    }
}

fn main() -> anyhow::Result<()> {
    let data = threestep_data(&int(1), &frac(1, 2), &int(-1))?;
    let p = GroupElement::from_coords(&[0, 0, 0, 0, 1, -2, 3, 1].map(int));
    print("coframe at p", &coframe_at_point(&data, &p)?);
    let g = metric_at_point(&data, &p)?;
    print("metric at p", &g);
    println!("signature {:?}", g.signature());

    let group = DoubleGroup::new(&data);
    let q = GroupElement::from_coords(&[1, 0, 0, 2, 0, 0, 1, 0].map(int));
    let jac = group.left_translation_jacobian(&q, &p);
    let pulled = jac.transpose().mul(&metric_at_point(&data, &group.multiply(&q, &p))?).mul(&jac);
    println!("left invariant at p under L_q: {}", pulled == g);
    Ok(())
}
