//! Tensor products of equivariant bundles on E6/P2: restrict to the A5 Levi,
//! decompose there, lift back with central-charge twists. Each decomposition
//! is cross-checked against the Freudenthal character oracle and the rank
//! count.
//!
//!     cargo run --example tensor_products

use bwbverify::literal::{display_decomposition, display_irreducible};
use bwbverify::tensor::ORACLE_DIMENSION_CAP;
use bwbverify::{ParabolicData, Weight};

fn main() {
    let p = ParabolicData::e6_p2();
    let pairs = [
        ([0, -1, 0, 0, 0, 1], [1, 0, 0, 0, 0, 0]), // S^{w6}(-1) (x) S^{w1}
        ([0, 0, 0, 1, 0, 0], [0, 0, 0, 1, 0, 0]),  // S^{w4} (x) S^{w4}
        ([0, 0, 0, 1, 0, 0], [1, 0, 0, 0, 0, 1]),  // S^{w4} (x) S^{w1+w6}
        ([0, 0, 0, 0, 0, 1], [0, 0, 1, 0, 0, 0]),  // S^{w6} (x) S^{w3}
        ([0, 0, 0, 0, 1, 0], [1, 0, 0, 0, 0, 1]),  // S^{w5} (x) S^{w1+w6}
    ];
    for (a, b) in pairs {
        let a = Weight::from_ints(&a);
        let b = Weight::from_ints(&b);
        let product = p.tensor_bundles(&a, &b).unwrap();
        let ra = p.rank_of_bundle(&a).unwrap();
        let rb = p.rank_of_bundle(&b).unwrap();
        let total: u128 = product
            .iter()
            .map(|(w, m)| p.rank_of_bundle(w).unwrap() * m)
            .sum();
        assert_eq!(total, ra * rb);
        println!(
            "{} (x) {}  =  {}   [ranks {ra} x {rb} = {total}]",
            display_irreducible(p, &a),
            display_irreducible(p, &b),
            display_decomposition(p, &product),
        );

        // the same decomposition through the character-theoretic oracle
        let (la, _) = p.restrict_levi(&a);
        let (lb, _) = p.restrict_levi(&b);
        let lr = p.lr_decompose(&la, &lb).unwrap();
        let oracle = p.lr_oracle(&la, &lb, ORACLE_DIMENSION_CAP).unwrap();
        assert_eq!(lr, oracle);
    }
    println!("\nevery line agrees with the character oracle and the rank count");
}
