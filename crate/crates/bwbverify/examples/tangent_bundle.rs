//! The tangent bundle of E6/P2 from the root system: the nilradical grading,
//! the graded pieces S^{w4}(-1) and O(1), global sections, and the rank
//! arithmetic of the three-term complex around its enlargement.
//!
//!     cargo run --example tangent_bundle

use bwbverify::bundles::ObjectSpec;
use bwbverify::literal::display_irreducible;
use bwbverify::ParabolicData;

fn main() {
    let p = ParabolicData::e6_p2();

    let grading = p.nilradical_grading().unwrap();
    println!(
        "positive non-parabolic roots: {} (= dim X)",
        grading.total_roots()
    );
    for (deg, comp) in &grading.by_degree {
        println!(
            "  degree {deg}: {} roots, Levi-highest weight {}",
            comp.roots.len(),
            display_irreducible(p, &comp.highest)
        );
    }

    for name in ["T_X", "Ttilde", "Etilde", "Ftilde"] {
        let spec = ObjectSpec::named(name);
        let sections = p.global_sections(&spec).unwrap();
        println!(
            "{name}: rank {}, H^0 = {} (dim {})",
            p.spec_rank(&spec).unwrap(),
            sections,
            p.global_sections_dimension(&spec).unwrap(),
        );
    }

    println!(
        "three-term complex rank identity (79 - 22 - 22 = 35): {}",
        p.complex_rank_check().unwrap()
    );
}
