//! Multiplies, inverts and audits elements of the simply connected group
//! attached to a three-step algebra.

use hypersymplectic::families::threestep_data;
use hypersymplectic::lie::{DoubleGroup, GroupElement};
use hypersymplectic::rational::{self, frac, int};
use hypersymplectic::report::audit_triples;

fn show(p: &GroupElement) -> String {
    let v: Vec<String> = p.coords().iter().map(rational::format).collect();
    format!("({})", v.join(", "))
}

fn main() -> anyhow::Result<()> {
    let data = threestep_data(&frac(1, 2), &int(-1), &int(2))?;
    let g = DoubleGroup::new(&data);
    let p = GroupElement::from_coords(&[1, 0, 2, 0, 0, 1, 0, -1].map(int));
    let q = GroupElement::from_coords(&[0, 1, 0, 0, 3, 0, 1, 0].map(int));
    println!("p      = {}", show(&p));
    println!("q      = {}", show(&q));
    println!("pq     = {}", show(&g.multiply(&p, &q)));
    println!("qp     = {}", show(&g.multiply(&q, &p)));
    println!("p^-1   = {}", show(&g.inverse(&p)));
    println!("p p^-1 = {}", show(&g.multiply(&p, &g.inverse(&p))));

    let report = g.audit(&audit_triples(data.dim()));
    println!("audit: {} checks, passed {}", report.checks, report.passed());
    if let Some(f) = &report.failure {
        println!("  first failure: {}", f.law);
    }
    Ok(())
}
