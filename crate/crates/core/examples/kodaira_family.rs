//! Builds the Kodaira family for a few `n`, prints its brackets and centre.
//!
//! ```text
//! cargo run --example kodaira_family -- 2
//! ```

use hypersymplectic::families::kodaira_data;
use hypersymplectic::lie::{basis_label, centre_from_data, LieAlgebra};
use hypersymplectic::rational;

fn main() -> anyhow::Result<()> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1);
    let data = kodaira_data(n)?;
    let m = data.dim();
    let l = LieAlgebra::from_data(&data);
    println!("Kodaira n={n}: m={m}, algebra dimension {}", l.dim());
    for e in l.to_table().brackets {
        let terms: Vec<String> = e
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.as_str() != "0")
            .map(|(k, c)| format!("{c}·{}", basis_label(k, m)))
            .collect();
        println!("  [{}, {}] = {}", basis_label(e.i, m), basis_label(e.j, m), terms.join(" + "));
    }
    let series = l.lower_central_series();
    println!("central series dims {:?}, step {:?}", series.dims(), series.step);
    let centre = l.centre();
    println!("centre dim {} (matches data: {})", centre.dim(), centre == centre_from_data(&data));
    for v in centre.basis() {
        let s: Vec<String> = v.iter().map(rational::format).collect();
        println!("  ({})", s.join(", "));
    }
    Ok(())
}
