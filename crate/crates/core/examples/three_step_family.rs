//! Sweeps the three-parameter family and tabulates step and flatness.
//!
//! The connection is flat exactly when `b = c`, in which case the step drops
//! from 3 to 2.

use hypersymplectic::families::threestep_data;
use hypersymplectic::geometry::{curvature, flatness_report, ricci};
use hypersymplectic::rational::{self, frac, int};

fn main() -> anyhow::Result<()> {
    let values = [int(-1), int(0), frac(1, 2), int(2)];
    println!("{:>5} {:>5} {:>5}  step  flat  curved_pairs  ricci_zero", "a", "b", "c");
    for a in &values {
        for b in &values {
            for c in &values[..2] {
                let data = threestep_data(a, b, c)?;
                let f = flatness_report(&data)?;
                let r = curvature(&data)?;
                println!(
                    "{:>5} {:>5} {:>5}  {:>4}  {:>4}  {:>12}  {}",
                    rational::format(a),
                    rational::format(b),
                    rational::format(c),
                    f.step,
                    f.flat,
                    r.nonzero_pairs(),
                    ricci(&data)?.is_zero()
                );
            }
        }
    }
    Ok(())
}
