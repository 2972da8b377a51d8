//! Tensor decomposition for the Levi factor.
//!
//! Two independent routes compute the same decomposition:
//!
//! * `lr_decompose` runs the Littlewood-Richardson rule directly, by
//!   enumerating chains of horizontal strips whose filling satisfies the
//!   lattice-word condition. Column strictness is automatic for such chains,
//!   and the lattice condition is checked row-cumulatively, which for
//!   semistandard fillings is equivalent to the reverse-reading-word
//!   condition.
//! * `lr_oracle` computes each factor's full weight multiset with
//!   Freudenthal's multiplicity formula, convolves the multisets, and peels
//!   off dominant highest weights until nothing is left.
//!
//! The two must agree; that equality is a test, not an assumption.
//!
//! `tensor_bundles` glues the Levi decomposition back into ambient weights
//! with the central-charge bookkeeping: each constituent is twisted by
//! `r_mu + r_nu - r_sigma` copies of the marked fundamental weight, and that
//! coefficient must come out an exact integer.

use crate::error::{KernelError, Result};
use crate::levi::ParabolicData;
use crate::root_system::{q, Q, RootSystemData, Weight};
use num::{BigInt, One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

/// Default cap on `dim(a) * dim(b)` for the character-based oracle.
pub const ORACLE_DIMENSION_CAP: u128 = 1_000_000;

const MAX_ROWS: usize = 6;

/// A partition: weakly decreasing non-negative parts, trailing zeros removed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u16>);

impl Partition {
    pub fn new(mut parts: Vec<u16>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(KernelError::Parse(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Multiset of weights with multiplicities; the output of every tensor
/// decomposition. Deterministically ordered.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    entries: BTreeMap<Weight, u128>,
}

impl Decomposition {
    pub fn empty() -> Self {
        Decomposition::default()
    }

    pub fn add(&mut self, w: Weight, mult: u128) {
        if mult == 0 {
            return;
        }
        *self.entries.entry(w).or_insert(0) += mult;
    }

    pub fn single(w: Weight) -> Self {
        let mut d = Decomposition::empty();
        d.add(w, 1);
        d
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u128)> {
        self.entries.iter().map(|(w, m)| (w, *m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, w: &Weight) -> u128 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn total_dimension(&self, sys: &RootSystemData) -> Result<u128> {
        let mut t: u128 = 0;
        for (w, m) in &self.entries {
            t += sys.weyl_dim(w)? * m;
        }
        Ok(t)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(w, m)| {
                if *m == 1 {
                    format!("({w})")
                } else {
                    format!("{m}*({w})")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// SL(n+1) conversion: part_i = sum of the weight coordinates from i on, with
/// one trailing zero row. Inverse up to full columns, which are trivial for
/// the special linear group.
pub fn weight_to_partition(w: &Weight) -> Result<Partition> {
    if !w.is_integral() {
        return Err(KernelError::NonIntegral(w.to_string()));
    }
    if !w.is_dominant() {
        return Err(KernelError::NotDominant(w.to_string()));
    }
    let a = w.to_ints()?;
    let mut parts = Vec::with_capacity(a.len() + 1);
    let mut run: i64 = a.iter().sum();
    for &ai in &a {
        parts.push(u16::try_from(run).map_err(|_| KernelError::Overflow("partition part"))?);
        run -= ai;
    }
    parts.push(0);
    Partition::new(parts)
}

pub fn partition_to_weight(p: &Partition, rank: usize) -> Result<Weight> {
    if p.len() > rank + 1 {
        return Err(KernelError::Parse(format!(
            "partition {p} has more than {} rows",
            rank + 1
        )));
    }
    let mut full = vec![0i64; rank + 1];
    for (i, &part) in p.parts().iter().enumerate() {
        full[i] = part as i64;
    }
    let last = full[rank];
    let coeffs: Vec<i64> = (0..rank).map(|i| full[i] - full[i + 1]).collect();
    debug_assert!(coeffs.iter().all(|&c| c >= 0));
    let _ = last; // full columns stripped implicitly by differencing
    Ok(Weight::from_ints(&coeffs))
}

type Shape = [u16; MAX_ROWS];

fn partition_to_shape(p: &Partition) -> Result<Shape> {
    if p.len() > MAX_ROWS {
        return Err(KernelError::Parse(format!("partition {p} exceeds {MAX_ROWS} rows")));
    }
    let mut s = [0u16; MAX_ROWS];
    for (i, &part) in p.parts().iter().enumerate() {
        s[i] = part;
    }
    Ok(s)
}

fn shape_to_partition(s: &Shape) -> Partition {
    Partition::new(s.to_vec()).expect("shapes are weakly decreasing")
}

/// All ways to add a horizontal strip of `size` boxes of one entry value to
/// `prev`, within MAX_ROWS rows. `lattice_cum`, when present, carries the
/// cumulative row counts of the previous entry value; a placement is kept
/// only if (count of this entry in rows 1..=r) <= (count of previous entry in
/// rows 1..=r-1) for every r. Returns each new shape with this entry's
/// per-row counts.
fn horizontal_strips(prev: &Shape, size: u16, lattice_cum: Option<&[u16; MAX_ROWS]>) -> Vec<(Shape, [u16; MAX_ROWS])> {
    let mut out = Vec::new();
    let mut counts = [0u16; MAX_ROWS];
    let mut shape = *prev;

    fn rec(
        r: usize,
        remaining: u16,
        cum_cur: u16,
        shape: &mut Shape,
        counts: &mut [u16; MAX_ROWS],
        prev: &Shape,
        lattice_cum: Option<&[u16; MAX_ROWS]>,
        out: &mut Vec<(Shape, [u16; MAX_ROWS])>,
    ) {
        if r == MAX_ROWS {
            if remaining == 0 {
                out.push((*shape, *counts));
            }
            return;
        }
        // upper bound for the new length of row r
        let row_cap = if r == 0 {
            prev[0] + remaining
        } else {
            prev[r - 1]
        };
        let mut max_add = row_cap.saturating_sub(prev[r]).min(remaining);
        if let Some(cum) = lattice_cum {
            let allowance = if r == 0 { 0 } else { cum[r - 1] };
            max_add = max_add.min(allowance.saturating_sub(cum_cur));
        }
        for add in 0..=max_add {
            shape[r] = prev[r] + add;
            counts[r] = add;
            rec(
                r + 1,
                remaining - add,
                cum_cur + add,
                shape,
                counts,
                prev,
                lattice_cum,
                out,
            );
        }
        shape[r] = prev[r];
        counts[r] = 0;
    }

    rec(0, size, 0, &mut shape, &mut counts, prev, lattice_cum, &mut out);
    out
}

/// Littlewood-Richardson product of Schur functions restricted to MAX_ROWS
/// rows: multiplicity of nu is the number of lattice fillings of nu/lam with
/// content mu.
pub fn lr_mul(lam: &Partition, mu: &Partition, ) -> Result<BTreeMap<Partition, u128>> {
    let base = partition_to_shape(lam)?;
    if mu.len() > MAX_ROWS {
        return Err(KernelError::Parse(format!("content {mu} exceeds {MAX_ROWS} rows")));
    }
    let mut acc: BTreeMap<Partition, u128> = BTreeMap::new();
    // stack of intermediate (shape, cumulative counts of the latest entry)
    fn rec(
        entry: usize,
        mu: &[u16],
        shape: &Shape,
        last_cum: Option<[u16; MAX_ROWS]>,
        acc: &mut BTreeMap<Partition, u128>,
    ) {
        if entry == mu.len() {
            *acc.entry(shape_to_partition(shape)).or_insert(0) += 1;
            return;
        }
        for (next, counts) in horizontal_strips(shape, mu[entry], last_cum.as_ref()) {
            let mut cum = [0u16; MAX_ROWS];
            let mut run = 0;
            for r in 0..MAX_ROWS {
                run += counts[r];
                cum[r] = run;
            }
            rec(entry + 1, mu, &next, Some(cum), acc);
        }
    }
    rec(0, mu.parts(), &base, None, &mut acc);
    Ok(acc)
}

/// Packed integer-coordinate key for character tables: each coordinate is
/// offset by 512 and packed into 10 bits. Valid while all coordinates stay in
/// (-512, 512), which holds with huge margin for every representation the
/// oracle is allowed to touch.
const PACK_OFFSET: i64 = 512;
const PACK_BITS: u32 = 10;

/// Multiplicative hasher for the packed keys; the character tables are the
/// hottest maps in the crate and the default hasher dominates their cost.
#[derive(Clone, Copy, Default)]
struct KeyHasher(u64);

impl std::hash::Hasher for KeyHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 ^ b as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        }
    }

    fn write_u64(&mut self, x: u64) {
        let h = x.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        self.0 = h ^ (h >> 29);
    }
}

#[derive(Clone, Copy, Default)]
struct KeyHashBuilder;

impl std::hash::BuildHasher for KeyHashBuilder {
    type Hasher = KeyHasher;

    fn build_hasher(&self) -> KeyHasher {
        KeyHasher::default()
    }
}

type KeyMap<V> = HashMap<u64, V, KeyHashBuilder>;

fn pack(coords: &[i64]) -> u64 {
    let mut key = 0u64;
    for (i, &c) in coords.iter().enumerate() {
        let v = c + PACK_OFFSET;
        debug_assert!((0..1 << PACK_BITS).contains(&v));
        key |= (v as u64) << (PACK_BITS * i as u32);
    }
    key
}

fn unpack(key: u64, rank: usize) -> Vec<i64> {
    (0..rank)
        .map(|i| ((key >> (PACK_BITS * i as u32)) & ((1 << PACK_BITS) - 1)) as i64 - PACK_OFFSET)
        .collect()
}

fn pack_zero(rank: usize) -> u64 {
    pack(&vec![0; rank])
}

/// Exact determinant of a small integer matrix.
fn det_exact(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .map(|row| row.iter().map(|&e| q(e)).collect())
        .collect();
    let mut det = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if p != col {
            a.swap(col, p);
            det = -det;
        }
        let pv = a[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pv;
            for j in col..n {
                let t = &a[col][j] * &f;
                a[r][j] -= t;
            }
        }
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}

/// Integer geometry of the Levi root system used by the Freudenthal oracle:
/// the Gram matrix scaled by det(Cartan), positive roots in fundamental
/// coordinates, and their heights.
struct LeviGeometry {
    rank: usize,
    scaled_gram: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    root_heights: Vec<i64>,
    height_row: Vec<i64>,
}

impl LeviGeometry {
    fn build(levi: &RootSystemData) -> Result<LeviGeometry> {
        let a_chain = RootSystemData::a(levi.rank());
        if levi.cartan() != a_chain.cartan() {
            return Err(KernelError::Parse(format!(
                "tensor decomposition requires an A-type Levi chain, got {}",
                levi.label()
            )));
        }
        let rank = levi.rank();
        let det = i64::try_from(&det_exact(levi.cartan())).map_err(|_| KernelError::Overflow("det"))?;
        let fw: Vec<Weight> = (1..=rank).map(|j| Weight::fundamental(rank, j)).collect();
        let mut scaled_gram = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let v = levi.inner_product(&fw[i], &fw[j]) * q(det);
                if !v.is_integer() {
                    return Err(KernelError::NonIntegralValue(format!("scaled gram {v}")));
                }
                scaled_gram[i][j] =
                    i64::try_from(v.to_integer()).map_err(|_| KernelError::Overflow("gram"))?;
            }
        }
        let mut roots = Vec::new();
        let mut root_heights = Vec::new();
        for r in levi.positive_roots() {
            let coords = r.to_ints()?;
            let b = levi.to_simple_root_basis(r);
            let mut h = Q::zero();
            for x in &b {
                h += x;
            }
            if !h.is_integer() {
                return Err(KernelError::NonIntegralValue("root height".into()));
            }
            roots.push(coords);
            root_heights.push(i64::try_from(h.to_integer()).map_err(|_| KernelError::Overflow("height"))?);
        }
        let height_row = (0..rank)
            .map(|i| (0..rank).map(|j| scaled_gram[j][i]).sum())
            .collect();
        Ok(LeviGeometry {
            rank,
            scaled_gram,
            roots,
            root_heights,
            height_row,
        })
    }

    fn ip_scaled(&self, x: &[i64], y: &[i64]) -> i128 {
        let mut acc: i128 = 0;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            let mut row = 0i128;
            for j in 0..self.rank {
                row += self.scaled_gram[i][j] as i128 * y[j] as i128;
            }
            acc += x[i] as i128 * row;
        }
        acc
    }

    /// det-scaled height of a root-lattice vector in fundamental coordinates.
    fn height_scaled(&self, x: &[i64]) -> i128 {
        (0..self.rank)
            .map(|i| self.height_row[i] as i128 * x[i] as i128)
            .sum()
    }
}

/// Full weight multiset of one irreducible, shared and cached.
pub struct CharData {
    weights: KeyMap<i64>,
    pub dim: u128,
}

impl CharData {
    pub fn distinct_weights(&self) -> usize {
        self.weights.len()
    }
}

#[derive(Default)]
pub struct CharTable {
    geometry: OnceLock<LeviGeometry>,
    chars: RwLock<HashMap<Vec<i64>, Arc<CharData>>>,
}

impl CharTable {
    fn geometry(&self, levi: &RootSystemData) -> Result<&LeviGeometry> {
        if let Some(g) = self.geometry.get() {
            return Ok(g);
        }
        let g = LeviGeometry::build(levi)?;
        let _ = self.geometry.set(g);
        Ok(self.geometry.get().expect("just set"))
    }

    /// Freudenthal's recursion, processing weights level by level downward
    /// from the highest weight. Every weight of the module is reached through
    /// simple-root steps from weights of positive multiplicity.
    ///
    /// The inner sums run on packed keys: adding a root moves the key by a
    /// fixed integer delta, since the packing is base-1024 positional and
    /// every coordinate stays comfortably inside its lane. Inner products
    /// against a fixed root grow linearly in k, so they are tracked
    /// incrementally as well.
    fn character(&self, levi: &RootSystemData, hw: &[i64]) -> Result<Arc<CharData>> {
        if let Some(hit) = self.chars.read().unwrap().get(hw) {
            return Ok(hit.clone());
        }
        let geom = self.geometry(levi)?;
        let rank = geom.rank;
        let rho = vec![1i64; rank];
        let add = |x: &[i64], y: &[i64]| -> Vec<i64> {
            x.iter().zip(y).map(|(a, b)| a + b).collect()
        };
        let hw_rho = add(hw, &rho);
        let norm_top = geom.ip_scaled(&hw_rho, &hw_rho);

        let simple_roots: Vec<Vec<i64>> = levi.cartan().to_vec();
        let zero_key = pack_zero(rank);
        // per positive root: packed step, S*alpha row, <alpha,alpha> scaled
        let root_data: Vec<(u64, Vec<i64>, i128)> = geom
            .roots
            .iter()
            .map(|alpha| {
                let delta = pack(alpha).wrapping_sub(zero_key);
                let s_alpha: Vec<i64> = (0..rank)
                    .map(|i| (0..rank).map(|j| geom.scaled_gram[i][j] * alpha[j]).sum())
                    .collect();
                let ip_aa = geom.ip_scaled(alpha, alpha);
                (delta, s_alpha, ip_aa)
            })
            .collect();

        let mut mults: KeyMap<i64> = KeyMap::default();
        mults.insert(pack(hw), 1);
        let mut level: Vec<Vec<i64>> = vec![hw.to_vec()];
        let mut depth: i64 = 0;

        while !level.is_empty() {
            depth += 1;
            let mut candidates: KeyMap<Vec<i64>> = KeyMap::default();
            for nu in &level {
                for alpha in &simple_roots {
                    let cand: Vec<i64> = nu.iter().zip(alpha).map(|(a, b)| a - b).collect();
                    candidates.entry(pack(&cand)).or_insert(cand);
                }
            }
            let mut next = Vec::new();
            for (key, nu) in candidates {
                let nu_rho = add(&nu, &rho);
                let denom = norm_top - geom.ip_scaled(&nu_rho, &nu_rho);
                if denom <= 0 {
                    continue;
                }
                let mut num: i128 = 0;
                for ((delta, s_alpha, ip_aa), &ht) in root_data.iter().zip(&geom.root_heights) {
                    let ip_nu_alpha: i128 = (0..rank)
                        .map(|i| nu[i] as i128 * s_alpha[i] as i128)
                        .sum();
                    let mut k: i64 = 1;
                    let mut xi_key = key;
                    while k * ht <= depth {
                        xi_key = xi_key.wrapping_add(*delta);
                        if let Some(&m) = mults.get(&xi_key) {
                            num += m as i128 * (ip_nu_alpha + k as i128 * ip_aa);
                        }
                        k += 1;
                    }
                }
                let twice = 2 * num;
                if twice == 0 {
                    continue;
                }
                if twice % denom != 0 {
                    return Err(KernelError::NonIntegralValue(format!(
                        "Freudenthal multiplicity {twice}/{denom}"
                    )));
                }
                let m = twice / denom;
                if m < 0 {
                    return Err(KernelError::NonIntegralValue(format!(
                        "negative Freudenthal multiplicity {m}"
                    )));
                }
                if m > 0 {
                    mults.insert(key, m as i64);
                    next.push(nu);
                }
            }
            level = next;
        }

        let dim: u128 = mults.values().map(|&m| m as u128).sum();
        let expected = levi.weyl_dim(&Weight::from_ints(hw))?;
        if dim != expected {
            return Err(KernelError::NonIntegralValue(format!(
                "character dimension {dim} != Weyl dimension {expected}"
            )));
        }
        let data = Arc::new(CharData {
            weights: mults,
            dim,
        });
        self.chars
            .write()
            .unwrap()
            .entry(hw.to_vec())
            .or_insert_with(|| data.clone());
        Ok(data)
    }
}

impl ParabolicData {
    fn levi_dominant_integral(&self, w: &Weight) -> Result<Vec<i64>> {
        if !w.is_integral() {
            return Err(KernelError::NonIntegral(w.to_string()));
        }
        if !w.is_dominant() {
            return Err(KernelError::NotDominant(w.to_string()));
        }
        w.to_ints()
    }

    /// Littlewood-Richardson decomposition of the tensor product of two
    /// irreducible Levi representations, as Levi weights. Memoized.
    pub fn lr_decompose(&self, lam: &Weight, mu: &Weight) -> Result<Decomposition> {
        self.levi_dominant_integral(lam)?;
        self.levi_dominant_integral(mu)?;
        let key = (lam.clone(), mu.clone());
        if let Some(hit) = self.lr_cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        // validate A-type chain once through the oracle geometry
        self.char_table.geometry(self.levi())?;
        let pl = weight_to_partition(lam)?;
        let pm = weight_to_partition(mu)?;
        let mut out = Decomposition::empty();
        for (nu, mult) in lr_mul(&pl, &pm)? {
            out.add(partition_to_weight(&nu, self.levi().rank())?, mult);
        }
        self.lr_cache
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| out.clone());
        Ok(out)
    }

    /// Character-theoretic oracle for the same decomposition: Freudenthal
    /// multiplicities, convolution, peeling. Refuses products larger than
    /// `cap` (total dimension) to stay desk-scale.
    pub fn lr_oracle(&self, lam: &Weight, mu: &Weight, cap: u128) -> Result<Decomposition> {
        let li = self.levi_dominant_integral(lam)?;
        let mi = self.levi_dominant_integral(mu)?;
        let dl = self.levi().weyl_dim(lam)?;
        let dm = self.levi().weyl_dim(mu)?;
        let product = dl
            .checked_mul(dm)
            .ok_or(KernelError::Overflow("oracle dimension"))?;
        if product > cap {
            return Err(KernelError::DimensionCap(product, cap));
        }
        let rank = self.levi().rank();
        let ca = self.char_table.character(self.levi(), &li)?;
        let cb = self.char_table.character(self.levi(), &mi)?;

        // convolve the two multisets
        let (small, big) = if ca.distinct_weights() <= cb.distinct_weights() {
            (&ca, &cb)
        } else {
            (&cb, &ca)
        };
        let zero = pack_zero(rank);
        let small_v: Vec<(u64, i64)> = small.weights.iter().map(|(&k, &m)| (k, m)).collect();
        let big_v: Vec<(u64, i64)> = big.weights.iter().map(|(&k, &m)| (k, m)).collect();
        let mut conv: KeyMap<i64> = HashMap::with_capacity_and_hasher(
            small_v.len() * big_v.len() / 2 + 16,
            KeyHashBuilder,
        );
        for &(ka, ma) in &small_v {
            for &(kb, mb) in &big_v {
                let key = ka + kb - zero;
                *conv.entry(key).or_insert(0) += ma * mb;
            }
        }

        // peel dominant highest weights, scanning downwards by height with a
        // lazily-purged heap
        let geom = self.char_table.geometry(self.levi())?;
        let mut heap: std::collections::BinaryHeap<(i128, std::cmp::Reverse<u64>)> = conv
            .keys()
            .map(|&k| (geom.height_scaled(&unpack(k, rank)), std::cmp::Reverse(k)))
            .collect();
        let mut out = Decomposition::empty();
        while !conv.is_empty() {
            let top_key = loop {
                let Some((_, std::cmp::Reverse(k))) = heap.pop() else {
                    return Err(KernelError::NonIntegralValue(
                        "oracle peel exhausted its heap with weights remaining".into(),
                    ));
                };
                if conv.contains_key(&k) {
                    break k;
                }
            };
            let top = unpack(top_key, rank);
            if top.iter().any(|&c| c < 0) {
                return Err(KernelError::NonIntegralValue(format!(
                    "oracle peel reached non-dominant maximal weight {top:?}"
                )));
            }
            let coeff = conv[&top_key];
            if coeff <= 0 {
                return Err(KernelError::NonIntegralValue(format!(
                    "oracle peel found non-positive leading multiplicity {coeff}"
                )));
            }
            let ch = self.char_table.character(self.levi(), &top)?;
            for (&k, &m) in &ch.weights {
                let entry = conv.entry(k).or_insert(0);
                *entry -= coeff * m;
                match (*entry).cmp(&0) {
                    std::cmp::Ordering::Less => {
                        return Err(KernelError::NonIntegralValue(
                            "oracle peel drove a multiplicity negative".into(),
                        ))
                    }
                    std::cmp::Ordering::Equal => {
                        conv.remove(&k);
                    }
                    std::cmp::Ordering::Greater => {}
                }
            }
            out.add(Weight::from_ints(&top), coeff as u128);
        }
        Ok(out)
    }

    /// Tensor product of equivariant bundles: restrict to the Levi, decompose
    /// there, lift each constituent and twist it by the charge difference.
    /// The twist coefficient must be an exact integer; anything else means
    /// the charge bookkeeping is broken and is reported as an error.
    pub fn tensor_bundles(&self, a: &Weight, b: &Weight) -> Result<Decomposition> {
        if !a.is_integral() || !b.is_integral() {
            return Err(KernelError::NonIntegral(format!("{a}, {b}")));
        }
        if !self.is_levi_dominant(a) || !self.is_levi_dominant(b) {
            return Err(KernelError::NotLeviDominant(format!("{a} or {b}")));
        }
        let (la, ra) = self.restrict_levi(a);
        let (lb, rb) = self.restrict_levi(b);
        let levi_dec = self.lr_decompose(&la, &lb)?;
        let wk = Weight::fundamental(self.ambient().rank(), self.marked_vertex());
        let mut out = Decomposition::empty();
        for (sigma_levi, mult) in levi_dec.iter() {
            let sigma = self.lift(sigma_levi);
            let r_sigma = self.charge(&sigma);
            let twist = &ra + &rb - r_sigma;
            if !twist.is_integer() {
                return Err(KernelError::NonIntegralTwist(twist.to_string()));
            }
            out.add(sigma.add(&wk.scale(&twist)), mult);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lw(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    fn part(p: &[u16]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn partition_conversions() {
        assert_eq!(weight_to_partition(&lw(&[1, 0, 0, 0, 0])).unwrap(), part(&[1]));
        assert_eq!(weight_to_partition(&lw(&[0, 0, 1, 0, 0])).unwrap(), part(&[1, 1, 1]));
        assert_eq!(
            weight_to_partition(&lw(&[1, 0, 0, 0, 1])).unwrap(),
            part(&[2, 1, 1, 1, 1])
        );
        assert_eq!(
            partition_to_weight(&part(&[2, 1, 1, 1, 1]), 5).unwrap(),
            lw(&[1, 0, 0, 0, 1])
        );
        // full columns are invisible to SL6
        assert_eq!(
            partition_to_weight(&part(&[2, 1, 1, 1, 1, 1]), 5).unwrap(),
            lw(&[1, 0, 0, 0, 0])
        );
        assert_eq!(partition_to_weight(&part(&[]), 5).unwrap(), Weight::zero(5));
    }

    #[test]
    fn lr_vector_by_dual_vector() {
        let p = ParabolicData::e6_p2();
        // pi5 (x) pi1 = trivial + adjoint
        let d = p
            .lr_decompose(&lw(&[0, 0, 0, 0, 1]), &lw(&[1, 0, 0, 0, 0]))
            .unwrap();
        let mut expect = Decomposition::empty();
        expect.add(Weight::zero(5), 1);
        expect.add(lw(&[1, 0, 0, 0, 1]), 1);
        assert_eq!(d, expect);
    }

    #[test]
    fn lr_unit_and_square() {
        let p = ParabolicData::e6_p2();
        let lam = lw(&[2, 0, 1, 0, 0]);
        let unit = p.lr_decompose(&lam, &Weight::zero(5)).unwrap();
        assert_eq!(unit, Decomposition::single(lam.clone()));
        // pi1 (x) pi1 = 2pi1 + pi2
        let sq = p
            .lr_decompose(&lw(&[1, 0, 0, 0, 0]), &lw(&[1, 0, 0, 0, 0]))
            .unwrap();
        let mut expect = Decomposition::empty();
        expect.add(lw(&[2, 0, 0, 0, 0]), 1);
        expect.add(lw(&[0, 1, 0, 0, 0]), 1);
        assert_eq!(sq, expect);
    }

    #[test]
    fn oracle_matches_lr_on_small_cases() {
        let p = ParabolicData::e6_p2();
        let cases = [
            (lw(&[0, 0, 0, 0, 1]), lw(&[1, 0, 0, 0, 0])),
            (lw(&[0, 0, 0, 0, 0]), lw(&[0, 0, 0, 0, 0])),
            (lw(&[0, 0, 1, 0, 0]), lw(&[0, 0, 1, 0, 0])),
            (lw(&[1, 1, 0, 0, 0]), lw(&[0, 0, 0, 1, 1])),
            (lw(&[2, 0, 0, 0, 1]), lw(&[1, 0, 1, 0, 0])),
        ];
        for (a, b) in cases {
            let lhs = p.lr_decompose(&a, &b).unwrap();
            let rhs = p.lr_oracle(&a, &b, ORACLE_DIMENSION_CAP).unwrap();
            assert_eq!(lhs, rhs, "mismatch at {a} (x) {b}");
        }
    }

    #[test]
    fn oracle_conserves_dimension() {
        let p = ParabolicData::e6_p2();
        let a = lw(&[0, 0, 1, 0, 0]);
        let d = p.lr_oracle(&a, &a, ORACLE_DIMENSION_CAP).unwrap();
        assert_eq!(d.total_dimension(p.levi()).unwrap(), 400);
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let p = ParabolicData::e6_p2();
        let a = lw(&[0, 0, 1, 0, 0]);
        assert!(matches!(
            p.lr_oracle(&a, &a, 100),
            Err(KernelError::DimensionCap(400, 100))
        ));
    }

    #[test]
    fn tensor_bundles_dual_vector_pair() {
        let p = ParabolicData::e6_p2();
        // S^{w6}(-1) (x) S^{w1} = O + S^{w1+w6}(-1)
        let d = p
            .tensor_bundles(&Weight::from_ints(&[0, -1, 0, 0, 0, 1]), &Weight::from_ints(&[1, 0, 0, 0, 0, 0]))
            .unwrap();
        let mut expect = Decomposition::empty();
        expect.add(Weight::zero(6), 1);
        expect.add(Weight::from_ints(&[1, -1, 0, 0, 0, 1]), 1);
        assert_eq!(d, expect);
    }

    #[test]
    fn tensor_bundles_adjoint_square() {
        let p = ParabolicData::e6_p2();
        // S^{w4} (x) S^{w4} = O(3) + S^{w1+w6}(2) + S^{w3+w5}(1) + S^{2w4}
        let w4 = Weight::fundamental(6, 4);
        let d = p.tensor_bundles(&w4, &w4).unwrap();
        let mut expect = Decomposition::empty();
        expect.add(Weight::from_ints(&[0, 3, 0, 0, 0, 0]), 1);
        expect.add(Weight::from_ints(&[1, 2, 0, 0, 0, 1]), 1);
        expect.add(Weight::from_ints(&[0, 1, 1, 0, 1, 0]), 1);
        expect.add(Weight::from_ints(&[0, 0, 0, 2, 0, 0]), 1);
        assert_eq!(d, expect);
    }

    #[test]
    fn tensor_bundles_w6_w3() {
        let p = ParabolicData::e6_p2();
        // S^{w6} (x) S^{w3} = S^{w3+w6} + S^{w1}(1)
        let d = p
            .tensor_bundles(&Weight::fundamental(6, 6), &Weight::fundamental(6, 3))
            .unwrap();
        let mut expect = Decomposition::empty();
        expect.add(Weight::from_ints(&[0, 0, 1, 0, 0, 1]), 1);
        expect.add(Weight::from_ints(&[1, 1, 0, 0, 0, 0]), 1);
        assert_eq!(d, expect);
    }

    #[test]
    fn tensor_bundles_line_bundle_twist() {
        let p = ParabolicData::e6_p2();
        let mu = Weight::from_ints(&[1, -2, 0, 1, 0, 0]);
        let oi = Weight::from_ints(&[0, 3, 0, 0, 0, 0]);
        let d = p.tensor_bundles(&oi, &mu).unwrap();
        assert_eq!(d, Decomposition::single(Weight::from_ints(&[1, 1, 0, 1, 0, 0])));
    }

    #[test]
    fn tensor_bundles_rank_multiplicative() {
        let p = ParabolicData::e6_p2();
        let a = Weight::from_ints(&[1, -1, 0, 0, 0, 1]);
        let b = Weight::fundamental(6, 4);
        let d = p.tensor_bundles(&a, &b).unwrap();
        let total: u128 = d
            .iter()
            .map(|(w, m)| p.rank_of_bundle(w).unwrap() * m)
            .sum();
        assert_eq!(
            total,
            p.rank_of_bundle(&a).unwrap() * p.rank_of_bundle(&b).unwrap()
        );
    }

    #[test]
    fn tensor_bundles_commutative_sample() {
        let p = ParabolicData::e6_p2();
        let a = Weight::from_ints(&[0, -1, 1, 0, 0, 1]);
        let b = Weight::from_ints(&[2, 1, 0, 0, 0, 0]);
        assert_eq!(
            p.tensor_bundles(&a, &b).unwrap(),
            p.tensor_bundles(&b, &a).unwrap()
        );
    }
}
