//! Parabolic data for a maximal parabolic P_k inside a simply-laced group:
//! restriction of weights to the Levi, central charges, duals computed by
//! descent, the canonical index, and bundle ranks.
//!
//! The longest Weyl elements w_0 and w_0^L are never stored as matrices.
//! Their actions are realized by reflecting to dominance, which is
//! convention-free: w_0 rho = -rho exactly, and on a Levi-antidominant weight
//! the Levi descent computes the w_0^L image.

use crate::bwb::CohomologyResult;
use crate::bundles::FilteredBundle;
use crate::error::{KernelError, Result};
use crate::root_system::{Q, RootSystemData, Weight};
use crate::tensor::{CharTable, Decomposition};
use num::{Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

/// Ambient group together with a marked Dynkin vertex. All caches live here,
/// so one shared instance memoizes across the whole process; every cached
/// value is a pure function of its key, making the tables write-once in
/// effect (concurrent writers always store identical values).
pub struct ParabolicData {
    ambient: RootSystemData,
    k: usize,
    levi: RootSystemData,
    /// When set, restriction asserts that every central charge has
    /// denominator dividing this bound (2 for E6/P2).
    charge_denom_bound: Option<u64>,
    pub(crate) bwb_cache: RwLock<HashMap<Weight, CohomologyResult>>,
    pub(crate) lr_cache: RwLock<HashMap<(Weight, Weight), Decomposition>>,
    pub(crate) char_table: CharTable,
    pub(crate) named: OnceLock<BTreeMap<String, FilteredBundle>>,
}

impl std::fmt::Debug for ParabolicData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/P{}", self.ambient.label(), self.k)
    }
}

impl ParabolicData {
    pub fn new(ambient: RootSystemData, k: usize, levi_label: impl Into<String>) -> Result<Self> {
        let levi = ambient.delete_vertex(k, levi_label)?;
        Ok(ParabolicData {
            ambient,
            k,
            levi,
            charge_denom_bound: None,
            bwb_cache: RwLock::new(HashMap::new()),
            lr_cache: RwLock::new(HashMap::new()),
            char_table: CharTable::default(),
            named: OnceLock::new(),
        })
    }

    /// The adjoint Grassmannian setup E6/P2, with the A5 Levi.
    pub fn e6_p2_owned() -> Self {
        let mut p = ParabolicData::new(RootSystemData::e6(), 2, "A5").expect("valid");
        p.charge_denom_bound = Some(2);
        p
    }

    /// Shared process-wide E6/P2 instance (all memo tables are reused).
    pub fn e6_p2() -> &'static ParabolicData {
        static INSTANCE: OnceLock<ParabolicData> = OnceLock::new();
        INSTANCE.get_or_init(ParabolicData::e6_p2_owned)
    }

    /// A_n with vertex k marked; for (3, 2) this is Gr(2,4).
    pub fn a_n_p_k(n: usize, k: usize) -> Result<Self> {
        ParabolicData::new(RootSystemData::a(n), k, format!("levi(A{n},{k})"))
    }

    pub fn ambient(&self) -> &RootSystemData {
        &self.ambient
    }

    pub fn levi(&self) -> &RootSystemData {
        &self.levi
    }

    pub fn marked_vertex(&self) -> usize {
        self.k
    }

    /// The vertex bijection sigma: ambient vertex (not k) -> Levi position,
    /// both 1-based. Deleting k and closing the gap preserves order.
    pub fn levi_position(&self, ambient_vertex: usize) -> Result<usize> {
        if ambient_vertex == self.k || ambient_vertex < 1 || ambient_vertex > self.ambient.rank() {
            return Err(KernelError::IndexOutOfRange(ambient_vertex, self.ambient.rank()));
        }
        Ok(if ambient_vertex > self.k {
            ambient_vertex - 1
        } else {
            ambient_vertex
        })
    }

    pub fn ambient_vertex(&self, levi_position: usize) -> Result<usize> {
        if levi_position < 1 || levi_position > self.levi.rank() {
            return Err(KernelError::IndexOutOfRange(levi_position, self.levi.rank()));
        }
        Ok(if levi_position >= self.k {
            levi_position + 1
        } else {
            levi_position
        })
    }

    /// Dominant for the Levi: non-negative coefficients at every vertex other
    /// than the marked one.
    pub fn is_levi_dominant(&self, mu: &Weight) -> bool {
        mu.coeffs()
            .iter()
            .enumerate()
            .all(|(i, c)| i + 1 == self.k || !c.is_negative())
    }

    /// Central charge r_mu = <mu, w_k> / <w_k, w_k>. The ratio is independent
    /// of the inner-product normalization.
    pub fn charge(&self, mu: &Weight) -> Q {
        let wk = Weight::fundamental(self.ambient.rank(), self.k);
        let r = self.ambient.inner_product(mu, &wk) / self.ambient.inner_product(&wk, &wk);
        if let Some(b) = self.charge_denom_bound {
            assert!(
                (r.clone() * crate::root_system::q(b as i64)).is_integer(),
                "central charge {r} has denominator not dividing {b}"
            );
        }
        r
    }

    /// Restriction to the Levi: the coordinates off the marked vertex,
    /// re-indexed, together with the central charge.
    pub fn restrict_levi(&self, mu: &Weight) -> (Weight, Q) {
        let coeffs = (1..=self.levi.rank())
            .map(|p| {
                let v = self.ambient_vertex(p).expect("in range");
                mu.coeff(v).clone()
            })
            .collect();
        (Weight::new(coeffs), self.charge(mu))
    }

    /// Lift of a Levi weight: same coordinates at the unmarked vertices, zero
    /// at the marked one. `restrict_levi(lift(s)).0 == s`.
    pub fn lift(&self, levi_weight: &Weight) -> Weight {
        let mut coeffs = vec![Q::zero(); self.ambient.rank()];
        for p in 1..=self.levi.rank() {
            let v = self.ambient_vertex(p).expect("in range");
            coeffs[v - 1] = levi_weight.coeff(p).clone();
        }
        Weight::new(coeffs)
    }

    /// The ambient weight with the given Levi part and central charge.
    pub fn assemble(&self, levi_weight: &Weight, charge: &Q) -> Weight {
        let lifted = self.lift(levi_weight);
        let base = self.charge(&lifted);
        let wk = Weight::fundamental(self.ambient.rank(), self.k);
        lifted.add(&wk.scale(&(charge - base)))
    }

    /// Reflect at strictly negative unmarked coordinates until Levi-dominant.
    /// Returns the weight reached and the number of reflections. Bounded by
    /// the number of positive Levi roots.
    pub fn levi_descent(&self, w: &Weight) -> Result<(Weight, usize)> {
        let bound = self.levi.positive_roots().len();
        let mut cur = w.clone();
        let mut steps = 0usize;
        loop {
            let neg = (1..=self.ambient.rank())
                .find(|&j| j != self.k && cur.coeff(j).is_negative());
            match neg {
                None => return Ok((cur, steps)),
                Some(j) => {
                    if steps >= bound {
                        return Err(KernelError::IterationBound(bound));
                    }
                    cur = self.ambient.simple_reflection(j, &cur)?;
                    steps += 1;
                }
            }
        }
    }

    /// Highest weight of the dual bundle: -w_0^L . mu, computed by negating
    /// and descending to Levi dominance. Involutive on Levi-dominant weights.
    pub fn dual_weight(&self, mu: &Weight) -> Result<Weight> {
        if !self.is_levi_dominant(mu) {
            return Err(KernelError::NotLeviDominant(mu.to_string()));
        }
        let (dual, _) = self.levi_descent(&mu.neg())?;
        Ok(dual)
    }

    /// -w_0(lam) for a dominant ambient weight: negate and descend to full
    /// dominance (bounded by the number of positive ambient roots).
    pub fn g_dual(&self, lam: &Weight) -> Result<Weight> {
        if !lam.is_dominant() {
            return Err(KernelError::NotDominant(lam.to_string()));
        }
        let bound = self.ambient.positive_roots().len();
        let mut cur = lam.neg();
        let mut steps = 0usize;
        while let Some(j) = (1..=self.ambient.rank()).find(|&j| cur.coeff(j).is_negative()) {
            if steps >= bound {
                return Err(KernelError::IterationBound(bound));
            }
            cur = self.ambient.simple_reflection(j, &cur)?;
            steps += 1;
        }
        Ok(cur)
    }

    /// Index r of the Fano variety G/P_k: the canonical bundle is O(-r).
    /// Computed as `<rho - w_0^L w_0 rho, a_k> / <w_k, a_k>`, with
    /// w_0 rho = -rho and the w_0^L action realized by Levi descent.
    pub fn canonical_index(&self) -> Result<u128> {
        let rho = self.ambient.rho();
        let (w0l_w0_rho, _) = self.levi_descent(&rho.neg())?;
        let diff = rho.sub(&w0l_w0_rho);
        let ak = self.ambient.simple_root(self.k)?;
        let wk = Weight::fundamental(self.ambient.rank(), self.k);
        let r = self.ambient.inner_product(&diff, &ak) / self.ambient.inner_product(&wk, &ak);
        if !r.is_integer() || !r.is_positive() {
            return Err(KernelError::NonIntegralValue(format!(
                "canonical index = {r}"
            )));
        }
        u128::try_from(r.to_integer()).map_err(|_| KernelError::Overflow("canonical_index"))
    }

    /// Rank of the equivariant bundle S^mu: the dimension of the irreducible
    /// Levi representation with highest weight the Levi part of mu.
    pub fn rank_of_bundle(&self, mu: &Weight) -> Result<u128> {
        if !mu.is_integral() {
            return Err(KernelError::NonIntegral(mu.to_string()));
        }
        if !self.is_levi_dominant(mu) {
            return Err(KernelError::NotLeviDominant(mu.to_string()));
        }
        let (levi_part, _) = self.restrict_levi(mu);
        self.levi.weyl_dim(&levi_part)
    }

    /// Dimension of G/P: the number of positive roots outside the Levi.
    pub fn dim_x(&self) -> usize {
        self.ambient.positive_roots().len() - self.levi.positive_roots().len()
    }

    /// Rank of the Grothendieck group: |W_G| / |W_L|, an exact integer.
    pub fn k_theory_rank(&self) -> Result<u128> {
        let wg = self.ambient.weyl_group_order();
        let wl = self.levi.weyl_group_order();
        if wg % wl != 0 {
            return Err(KernelError::NonIntegralValue(format!(
                "{wg} / {wl} is not an integer"
            )));
        }
        Ok(wg / wl)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{q, qr};

    fn w(coeffs: &[i64]) -> Weight {
        Weight::from_ints(coeffs)
    }

    #[test]
    fn vertex_map_matches_diagram() {
        let p = ParabolicData::e6_p2();
        assert_eq!(p.levi().label(), "A5");
        for (amb, lev) in [(1, 1), (3, 2), (4, 3), (5, 4), (6, 5)] {
            assert_eq!(p.levi_position(amb).unwrap(), lev);
            assert_eq!(p.ambient_vertex(lev).unwrap(), amb);
        }
        assert!(p.levi_position(2).is_err());
    }

    #[test]
    fn levi_cartan_is_a5() {
        let p = ParabolicData::e6_p2();
        let a5 = RootSystemData::a(5);
        assert_eq!(p.levi().cartan(), a5.cartan());
    }

    #[test]
    fn charges_of_fundamental_weights() {
        let p = ParabolicData::e6_p2();
        let expect = [qr(1, 2), q(1), q(1), qr(3, 2), q(1), qr(1, 2)];
        for j in 1..=6 {
            assert_eq!(p.charge(&Weight::fundamental(6, j)), expect[j - 1]);
        }
    }

    #[test]
    fn restriction_examples() {
        let p = ParabolicData::e6_p2();
        let (l1, r1) = p.restrict_levi(&Weight::fundamental(6, 1));
        assert_eq!(l1, Weight::fundamental(5, 1));
        assert_eq!(r1, qr(1, 2));
        let (l2, r2) = p.restrict_levi(&Weight::fundamental(6, 2));
        assert_eq!(l2, Weight::zero(5));
        assert_eq!(r2, q(1));
        let (l4, r4) = p.restrict_levi(&Weight::fundamental(6, 4));
        assert_eq!(l4, Weight::fundamental(5, 3));
        assert_eq!(r4, qr(3, 2));
    }

    #[test]
    fn lift_examples() {
        let p = ParabolicData::e6_p2();
        assert_eq!(p.lift(&Weight::fundamental(5, 1)), Weight::fundamental(6, 1));
        assert_eq!(p.lift(&Weight::zero(5)), Weight::zero(6));
        assert_eq!(
            p.lift(&w(&[1, 0, 0, 0, 1])),
            w(&[1, 0, 0, 0, 0, 1]),
        );
        let lifted = p.lift(&w(&[2, 1, 0, 3, 4]));
        assert_eq!(p.restrict_levi(&lifted).0, w(&[2, 1, 0, 3, 4]));
        assert!(lifted.coeff(2).is_zero());
    }

    #[test]
    fn dual_weight_examples() {
        let p = ParabolicData::e6_p2();
        assert_eq!(
            p.dual_weight(&Weight::fundamental(6, 1)).unwrap(),
            w(&[0, -1, 0, 0, 0, 1]),
        );
        assert_eq!(p.dual_weight(&Weight::zero(6)).unwrap(), Weight::zero(6));
        assert_eq!(
            p.dual_weight(&Weight::fundamental(6, 4)).unwrap(),
            w(&[0, -3, 0, 1, 0, 0]),
        );
        assert!(p.dual_weight(&w(&[-1, 0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn canonical_indices() {
        assert_eq!(ParabolicData::e6_p2().canonical_index().unwrap(), 11);
        assert_eq!(ParabolicData::a_n_p_k(3, 2).unwrap().canonical_index().unwrap(), 4);
        assert_eq!(ParabolicData::a_n_p_k(1, 1).unwrap().canonical_index().unwrap(), 2);
    }

    #[test]
    fn bundle_ranks() {
        let p = ParabolicData::e6_p2();
        assert_eq!(p.rank_of_bundle(&w(&[0, -1, 0, 1, 0, 0])).unwrap(), 20);
        assert_eq!(p.rank_of_bundle(&w(&[1, -1, 0, 0, 0, 1])).unwrap(), 35);
        for i in -3..=3 {
            assert_eq!(p.rank_of_bundle(&w(&[0, i, 0, 0, 0, 0])).unwrap(), 1);
        }
    }

    #[test]
    fn k_theory_ranks() {
        assert_eq!(ParabolicData::e6_p2().k_theory_rank().unwrap(), 72);
        assert_eq!(ParabolicData::a_n_p_k(3, 2).unwrap().k_theory_rank().unwrap(), 6);
        for n in 1..=6 {
            assert_eq!(
                ParabolicData::a_n_p_k(n, 1).unwrap().k_theory_rank().unwrap(),
                (n + 1) as u128
            );
        }
    }

    #[test]
    fn dim_x_is_21() {
        assert_eq!(ParabolicData::e6_p2().dim_x(), 21);
    }

    #[test]
    fn g_dual_is_diagram_flip_on_e6() {
        let p = ParabolicData::e6_p2();
        let lam = w(&[3, 1, 0, 2, 5, 4]);
        assert_eq!(p.g_dual(&lam).unwrap(), w(&[4, 1, 5, 2, 0, 3]));
        assert_eq!(p.g_dual(&Weight::fundamental(6, 1)).unwrap(), Weight::fundamental(6, 6));
        assert_eq!(p.g_dual(&Weight::fundamental(6, 2)).unwrap(), Weight::fundamental(6, 2));
    }
}
