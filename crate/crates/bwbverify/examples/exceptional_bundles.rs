//! Graded Ext computations: duals of irreducibles, endomorphism algebras of
//! the symmetric powers S^{t w1} (all exceptional), and the Ext pattern that
//! pins the tangent bundle as a unique nontrivial extension.
//!
//!     cargo run --example exceptional_bundles

use bwbverify::bundles::ObjectSpec;
use bwbverify::literal::display_irreducible;
use bwbverify::{BundleExpr, ParabolicData, Weight};

fn main() {
    let p = ParabolicData::e6_p2();

    println!("duals of irreducibles:");
    for c in [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, -1, 0, 1, 0, 0], [1, -1, 0, 0, 0, 1]] {
        let mu = Weight::from_ints(&c);
        let dual = p.dual_weight(&mu).unwrap();
        println!(
            "  ({})^dual = {}",
            display_irreducible(p, &mu),
            display_irreducible(p, &dual)
        );
    }

    println!("\nendomorphism algebras:");
    for t in 0..=5 {
        let mu = Weight::from_ints(&[t, 0, 0, 0, 0, 0]);
        let e = BundleExpr::irreducible(mu.clone());
        let ext = p.ext_groups(&e, &e).unwrap();
        println!("  Ext({0}, {0}) = {1}", display_irreducible(p, &mu), ext);
    }

    println!("\nextension patterns:");
    let sub = ObjectSpec::irreducible(Weight::from_ints(&[0, -1, 0, 1, 0, 0]));
    let quot = ObjectSpec::Expr(BundleExpr::irreducible(p.line_bundle(1)));
    let out = p.check_extension_exceptional(&sub, &quot).unwrap();
    println!("  sub = S[w4](-1), quot = O(1): {}", out.report());
    println!("  (the degree-one class is the tangent bundle's extension)");

    let sub = ObjectSpec::irreducible(Weight::from_ints(&[1, 1, 0, 0, 0, 0]));
    let out = p.check_extension_exceptional(&sub, &quot).unwrap();
    println!("  sub = S[w1](1), quot = O(1): {}", out.report());
    println!("  (no degree-one class: no nontrivial extension exists here)");
}
