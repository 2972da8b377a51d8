//! The canonical index and the K-theory rank of a few generalized
//! Grassmannians, straight from the root data: E6/P2 (index 11, rank 72),
//! Gr(2,4) = A3/P2 (index 4, rank 6) and the projective line (index 2).
//!
//!     cargo run --example canonical_index

use bwbverify::ParabolicData;

fn show(p: &ParabolicData) {
    println!(
        "{:?}: dim {}, canonical bundle O(-{}), |W_G| = {}, |W_L| = {}, K-rank {}",
        p,
        p.dim_x(),
        p.canonical_index().unwrap(),
        p.ambient().weyl_group_order(),
        p.levi().weyl_group_order(),
        p.k_theory_rank().unwrap(),
    );
}

fn main() {
    show(ParabolicData::e6_p2());
    show(&ParabolicData::a_n_p_k(3, 2).unwrap());
    show(&ParabolicData::a_n_p_k(1, 1).unwrap());
    for n in 2..=5 {
        show(&ParabolicData::a_n_p_k(n, 1).unwrap());
    }
}
