//! Walk the Borel-Weil-Bott reflection loop step by step on two weights: one
//! that runs into a singular wall (so the bundle is acyclic) and one that
//! reaches a regular dominant chamber (a single cohomology group survives).
//!
//!     cargo run --example reflection_walkthrough

use bwbverify::{ParabolicData, Weight};
use num::{Signed, Zero};

fn walk(p: &ParabolicData, mu: &Weight) {
    let sys = p.ambient();
    println!("mu = {mu}");
    let mut lam = mu.add(&sys.rho());
    print!("  mu + rho = {:?}", lam.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    loop {
        if lam.coeffs().iter().any(|c| c.is_zero()) {
            println!("  -> singular wall reached");
            break;
        }
        let Some(j) = (1..=sys.rank()).find(|&j| lam.coeff(j).is_negative()) else {
            println!("  -> regular dominant");
            break;
        };
        lam = sys.simple_reflection(j, &lam).unwrap();
        print!("\n  s{j} -> {:?}", lam.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    println!("  result: {}\n", p.bwb_cohomology(mu).unwrap());
}

fn main() {
    let p = ParabolicData::e6_p2();
    // S^{w1+w6}(-4): four reflections end on a wall.
    walk(p, &Weight::from_ints(&[1, -4, 0, 0, 0, 1]));
    // S^{w1+w3+w5}(-3): two reflections reach the dominant chamber.
    walk(p, &Weight::from_ints(&[1, -3, 1, 0, 1, 0]));
    // The canonical bundle O(-11) concentrates in top degree.
    walk(p, &Weight::from_ints(&[0, -11, 0, 0, 0, 0]));
}
