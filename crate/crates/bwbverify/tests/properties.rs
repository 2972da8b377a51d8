//! Structural invariants of the kernel: involutions, conservation laws,
//! additivity, and concurrency of the memo tables.

use bwbverify::bundles::{BundleExpr, ObjectSpec};
use bwbverify::tensor::{partition_to_weight, weight_to_partition, ORACLE_DIMENSION_CAP};
use bwbverify::{ParabolicData, RootSystemData, Weight};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn weight_strategy(rank: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(-9i64..=9, rank).prop_map(|v| Weight::from_ints(&v))
}

proptest! {
    #[test]
    fn reflections_are_involutions(w in weight_strategy(6), j in 1usize..=6) {
        let e6 = RootSystemData::e6();
        let twice = e6
            .simple_reflection(j, &e6.simple_reflection(j, &w).unwrap())
            .unwrap();
        prop_assert_eq!(twice, w);
    }

    #[test]
    fn reflections_preserve_inner_product(
        a in weight_strategy(6),
        b in weight_strategy(6),
        j in 1usize..=6
    ) {
        let e6 = RootSystemData::e6();
        let sa = e6.simple_reflection(j, &a).unwrap();
        let sb = e6.simple_reflection(j, &b).unwrap();
        prop_assert_eq!(e6.inner_product(&sa, &sb), e6.inner_product(&a, &b));
    }

    #[test]
    fn partition_round_trip(v in proptest::collection::vec(0i64..=6, 5)) {
        let w = Weight::from_ints(&v);
        let p = weight_to_partition(&w).unwrap();
        prop_assert_eq!(partition_to_weight(&p, 5).unwrap(), w);
    }
}

fn random_levi_dominant(rng: &mut impl Rng) -> Weight {
    let coords = [
        rng.gen_range(0..=4),
        rng.gen_range(-9..=4),
        rng.gen_range(0..=4),
        rng.gen_range(0..=4),
        rng.gen_range(0..=4),
        rng.gen_range(0..=4),
    ];
    Weight::from_ints(&coords)
}

#[test]
fn dual_weight_involution_charge_and_flip() {
    let p = ParabolicData::e6_p2();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let mu = random_levi_dominant(&mut rng);
        let dual = p.dual_weight(&mu).unwrap();
        assert!(p.is_levi_dominant(&dual));
        assert_eq!(p.dual_weight(&dual).unwrap(), mu, "involution at {mu}");
        let (levi, charge) = p.restrict_levi(&mu);
        let (levi_dual, charge_dual) = p.restrict_levi(&dual);
        assert_eq!(charge_dual, -charge, "charge negation at {mu}");
        // the Levi part flips under the A5 diagram involution
        let flipped: Vec<_> = levi.coeffs().iter().rev().cloned().collect();
        assert_eq!(levi_dual.coeffs(), &flipped[..], "diagram flip at {mu}");
        assert_eq!(
            p.rank_of_bundle(&dual).unwrap(),
            p.rank_of_bundle(&mu).unwrap(),
            "rank preserved at {mu}"
        );
    }
}

#[test]
fn tensor_commutes_and_respects_duality() {
    let p = ParabolicData::e6_p2();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    // small Levi parts keep both the tensor products and the rank sums cheap
    let mut pool = Vec::new();
    for a in 0..=3i64 {
        for b in 0..=3 - a {
            for c in 0..=3 - a - b {
                for d in 0..=3 - a - b - c {
                    for e in 0..=3 - a - b - c - d {
                        pool.push([a, b, c, d, e]);
                    }
                }
            }
        }
    }
    for _ in 0..40 {
        let pick = |rng: &mut ChaCha8Rng| {
            let l = pool[rng.gen_range(0..pool.len())];
            Weight::from_ints(&[l[0], rng.gen_range(-9..=4), l[1], l[2], l[3], l[4]])
        };
        let a = pick(&mut rng);
        let b = pick(&mut rng);
        let ab = p.tensor_bundles(&a, &b).unwrap();
        assert_eq!(ab, p.tensor_bundles(&b, &a).unwrap(), "commutativity at {a}, {b}");

        // dualizing every summand gives the product of the duals
        let mut dual_sum = bwbverify::Decomposition::empty();
        for (w, m) in ab.iter() {
            dual_sum.add(p.dual_weight(w).unwrap(), m);
        }
        let dual_prod = p
            .tensor_bundles(&p.dual_weight(&a).unwrap(), &p.dual_weight(&b).unwrap())
            .unwrap();
        assert_eq!(dual_sum, dual_prod, "duality compatibility at {a}, {b}");

        // rank multiplicativity
        let total: u128 = ab.iter().map(|(w, m)| p.rank_of_bundle(w).unwrap() * m).sum();
        assert_eq!(total, p.rank_of_bundle(&a).unwrap() * p.rank_of_bundle(&b).unwrap());
    }
}

#[test]
fn lr_matches_oracle_on_random_structured_pairs() {
    let p = ParabolicData::e6_p2();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut done = 0;
    while done < 25 {
        let a = Weight::from_ints(&[
            rng.gen_range(0..=3),
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
            rng.gen_range(0..=3),
        ]);
        let b = Weight::from_ints(&[
            rng.gen_range(0..=2),
            rng.gen_range(0..=1),
            rng.gen_range(0..=1),
            rng.gen_range(0..=1),
            rng.gen_range(0..=2),
        ]);
        match p.lr_oracle(&a, &b, ORACLE_DIMENSION_CAP) {
            Ok(oracle) => {
                assert_eq!(p.lr_decompose(&a, &b).unwrap(), oracle, "at {a} (x) {b}");
                done += 1;
            }
            Err(_) => continue,
        }
    }
}

#[test]
fn ext_is_additive_in_direct_sums() {
    let p = ParabolicData::e6_p2();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..15 {
        let a1 = random_levi_dominant(&mut rng);
        let a2 = random_levi_dominant(&mut rng);
        let b = random_levi_dominant(&mut rng);
        if [&a1, &a2, &b]
            .iter()
            .any(|w| p.rank_of_bundle(w).unwrap() > 200)
        {
            continue;
        }
        let mut sum = BundleExpr::irreducible(a1.clone());
        sum.add(a2.clone(), 1);
        let eb = BundleExpr::irreducible(b.clone());
        let whole = p.ext_groups(&sum, &eb).unwrap();
        let mut parts = p.ext_groups(&BundleExpr::irreducible(a1), &eb).unwrap();
        parts.merge(&p.ext_groups(&BundleExpr::irreducible(a2), &eb).unwrap());
        assert_eq!(whole, parts);
    }
}

#[test]
fn canonical_twist_concentrates_in_top_degree() {
    let p = ParabolicData::e6_p2();
    let canonical = p.line_bundle(-(p.canonical_index().unwrap() as i64));
    let res = p.bwb_cohomology(&canonical).unwrap();
    assert_eq!(res.outcome(), Some((p.dim_x(), Weight::zero(6))));
}

#[test]
fn semisimplification_of_twisted_dual_is_stable() {
    // ss((V)^dual (1)) = ss(V) for the enlarged tangent bundle
    let p = ParabolicData::e6_p2();
    let spec = ObjectSpec::named("Ttilde");
    let ss = p.spec_ss(&spec).unwrap();
    let dual_tw = p.twist_expr(&p.dualize_expr(&ss).unwrap(), 1);
    assert_eq!(dual_tw, ss);
}

#[test]
fn memo_tables_are_consistent_under_concurrency() {
    use rayon::prelude::*;
    let p = ParabolicData::e6_p2_owned();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let weights: Vec<Weight> = (0..64).map(|_| random_levi_dominant(&mut rng)).collect();
    let first: Vec<_> = weights
        .par_iter()
        .map(|w| p.bwb_cohomology(w).unwrap())
        .collect();
    let second: Vec<_> = weights
        .par_iter()
        .map(|w| p.bwb_cohomology(w).unwrap())
        .collect();
    assert_eq!(first, second);
}
