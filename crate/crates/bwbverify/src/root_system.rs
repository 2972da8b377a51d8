//! Exact root-system arithmetic for simply-laced Cartan types.
//!
//! Everything is driven by an integer Cartan matrix; weights live in the
//! fundamental-weight basis as vectors of exact rationals. Reflections and
//! dominance tests are then single-row operations, and the inner product is
//! the inverse Cartan matrix under the normalization `<a_j, a_j> = 2` for
//! every simple root.
//!
//! Reducible diagrams (block-diagonal Cartan matrices) are supported; they
//! arise as Levi subsystems of maximal parabolics, e.g. A1 x A1 inside A3.
//! Multiply-laced types are out of scope: the constructor rejects any
//! off-diagonal entry other than 0 or -1.

use crate::error::{KernelError, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::sync::OnceLock;

/// Exact rational scalar used throughout the kernel.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A weight in the fundamental-weight basis: `coeffs[i]` is the coefficient
/// of w_{i+1}. All arithmetic is exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coeffs: Vec<Q>,
}

impl Weight {
    pub fn new(coeffs: Vec<Q>) -> Self {
        Weight { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coeffs: vec![Q::zero(); rank],
        }
    }

    /// The fundamental weight w_j (1-based vertex label).
    pub fn fundamental(rank: usize, j: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coeffs[j - 1] = Q::one();
        w
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Weight {
            coeffs: coeffs.iter().map(|&c| q(c)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient at vertex j (1-based).
    pub fn coeff(&self, j: usize) -> &Q {
        &self.coeffs[j - 1]
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_positive())
    }

    pub fn to_ints(&self) -> Result<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).map_err(|_| KernelError::Overflow("weight coordinate"))
                } else {
                    Err(KernelError::NonIntegral(self.to_string()))
                }
            })
            .collect()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: &Q) -> Weight {
        Weight {
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    /// Canonical symbolic form, e.g. `w1+w6-4w2` prints as `w1-4w2+w6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            write!(f, "w{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// An ordered word in the simple reflections, recorded by 1-based vertex
/// labels. Words emitted by the cohomology loop are reduced by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(|j| format!("s{j}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

const CLOSURE_BOUND: usize = 10_000;

/// Root datum of a simply-laced (possibly reducible) diagram.
pub struct RootSystemData {
    label: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Inverse Cartan matrix = Gram matrix of the fundamental weights under
    /// the normalization `<a,a> = 2` for all roots.
    gram: Vec<Vec<Q>>,
    pos_roots: OnceLock<Vec<Weight>>,
    weyl_order: OnceLock<u128>,
}

impl fmt::Debug for RootSystemData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystemData({}, rank {})", self.label, self.rank)
    }
}

impl RootSystemData {
    pub fn new(label: impl Into<String>, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let rank = cartan.len();
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank {
                return Err(KernelError::InvalidCartan("not square".into()));
            }
            for (j, &e) in row.iter().enumerate() {
                if i == j && e != 2 {
                    return Err(KernelError::InvalidCartan(format!(
                        "diagonal entry {e} at {i}"
                    )));
                }
                if i != j && e != 0 && e != -1 {
                    return Err(KernelError::InvalidCartan(format!(
                        "off-diagonal entry {e} at ({i},{j}); only simply-laced types are supported"
                    )));
                }
                if i != j && cartan[i][j] != cartan[j][i] {
                    return Err(KernelError::InvalidCartan("matrix not symmetric".into()));
                }
            }
        }
        let gram = invert_exact(&cartan)
            .ok_or_else(|| KernelError::InvalidCartan("singular matrix".into()))?;
        Ok(RootSystemData {
            label: label.into(),
            rank,
            cartan,
            gram,
            pos_roots: OnceLock::new(),
            weyl_order: OnceLock::new(),
        })
    }

    /// E6 with the Bourbaki vertex ordering: the chain 1-3-4-5-6 with vertex 2
    /// attached to vertex 4.
    pub fn e6() -> Self {
        let mut c = vec![vec![0i64; 6]; 6];
        for i in 0..6 {
            c[i][i] = 2;
        }
        for &(a, b) in &[(1usize, 3usize), (3, 4), (4, 5), (5, 6), (2, 4)] {
            c[a - 1][b - 1] = -1;
            c[b - 1][a - 1] = -1;
        }
        RootSystemData::new("E6", c).expect("E6 Cartan matrix is valid")
    }

    /// A_n as the chain 1-2-...-n.
    pub fn a(n: usize) -> Self {
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
            if i + 1 < n {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        RootSystemData::new(format!("A{n}"), c).expect("A_n Cartan matrix is valid")
    }

    /// Root datum obtained by deleting vertex `k` (1-based) and re-indexing
    /// the remaining vertices in order. This is the Levi subsystem of the
    /// maximal parabolic P_k.
    pub fn delete_vertex(&self, k: usize, label: impl Into<String>) -> Result<Self> {
        if k < 1 || k > self.rank {
            return Err(KernelError::IndexOutOfRange(k, self.rank));
        }
        let keep: Vec<usize> = (0..self.rank).filter(|&i| i != k - 1).collect();
        let cartan = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        RootSystemData::new(label, cartan)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// rho = sum of the fundamental weights = (1,...,1).
    pub fn rho(&self) -> Weight {
        Weight {
            coeffs: vec![Q::one(); self.rank],
        }
    }

    /// Simple root a_j in fundamental coordinates: row j of the Cartan matrix.
    pub fn simple_root(&self, j: usize) -> Result<Weight> {
        if j < 1 || j > self.rank {
            return Err(KernelError::IndexOutOfRange(j, self.rank));
        }
        Ok(Weight {
            coeffs: self.cartan[j - 1].iter().map(|&e| q(e)).collect(),
        })
    }

    /// s_j(lam) = lam - lam_j * a_j. Involutive.
    pub fn simple_reflection(&self, j: usize, lam: &Weight) -> Result<Weight> {
        if j < 1 || j > self.rank {
            return Err(KernelError::IndexOutOfRange(j, self.rank));
        }
        let cj = lam.coeffs[j - 1].clone();
        if cj.is_zero() {
            return Ok(lam.clone());
        }
        let row = &self.cartan[j - 1];
        let coeffs = lam
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c - &cj * q(row[i]))
            .collect();
        Ok(Weight { coeffs })
    }

    /// Bilinear form with `<a_j, a_j> = 2`, i.e. `<w_i, w_j> = (C^-1)_ij`.
    pub fn inner_product(&self, lam: &Weight, mu: &Weight) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.rank {
            if lam.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if mu.coeffs[j].is_zero() {
                    continue;
                }
                acc += &lam.coeffs[i] * &mu.coeffs[j] * &self.gram[i][j];
            }
        }
        acc
    }

    /// Coordinates of `w` in the simple-root basis (exact rationals; they are
    /// integers exactly when `w` lies in the root lattice).
    pub fn to_simple_root_basis(&self, w: &Weight) -> Vec<Q> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| &self.gram[i][j] * &w.coeffs[j])
                    .sum()
            })
            .collect()
    }

    /// All positive roots in fundamental coordinates, computed as the
    /// reflection closure of the simple roots.
    pub fn positive_roots(&self) -> &[Weight] {
        self.pos_roots.get_or_init(|| {
            self.compute_positive_roots()
                .expect("reflection closure of a validated Cartan matrix terminates")
        })
    }

    fn compute_positive_roots(&self) -> Result<Vec<Weight>> {
        use std::collections::BTreeSet;
        let mut all: BTreeSet<Weight> = BTreeSet::new();
        let mut frontier: Vec<Weight> = (1..=self.rank)
            .map(|j| self.simple_root(j))
            .collect::<Result<_>>()?;
        for r in &frontier {
            all.insert(r.clone());
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for j in 1..=self.rank {
                    let s = self.simple_reflection(j, r)?;
                    if !all.contains(&s) {
                        all.insert(s.clone());
                        next.push(s);
                    }
                }
            }
            if all.len() > CLOSURE_BOUND {
                return Err(KernelError::ClosureBound(CLOSURE_BOUND));
            }
            frontier = next;
        }
        let mut pos: Vec<Weight> = all
            .into_iter()
            .filter(|r| {
                self.to_simple_root_basis(r)
                    .iter()
                    .all(|c| !c.is_negative())
            })
            .collect();
        pos.sort();
        Ok(pos)
    }

    /// Order of the Weyl group, by breadth-first enumeration of the orbit of
    /// rho (a regular weight, so the orbit size equals the group order).
    pub fn weyl_group_order(&self) -> u128 {
        *self.weyl_order.get_or_init(|| {
            use std::collections::HashSet;
            let mut seen: HashSet<Weight> = HashSet::new();
            let rho = self.rho();
            seen.insert(rho.clone());
            let mut frontier = vec![rho];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for w in &frontier {
                    for j in 1..=self.rank {
                        let s = self
                            .simple_reflection(j, w)
                            .expect("index in range");
                        if seen.insert(s.clone()) {
                            next.push(s);
                        }
                    }
                }
                frontier = next;
            }
            seen.len() as u128
        })
    }

    /// Weyl dimension formula: prod over positive roots of
    /// `<lam+rho, a> / <rho, a>`. Requires `lam` dominant and integral; the
    /// rational product must cancel to an exact positive integer.
    pub fn weyl_dim(&self, lam: &Weight) -> Result<u128> {
        if !lam.is_integral() {
            return Err(KernelError::NonIntegral(lam.to_string()));
        }
        if !lam.is_dominant() {
            return Err(KernelError::NotDominant(lam.to_string()));
        }
        let rho = self.rho();
        let shifted = lam.add(&rho);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in self.positive_roots() {
            let a = self.inner_product(&shifted, alpha);
            let b = self.inner_product(&rho, alpha);
            num *= a.numer() * b.denom();
            den *= a.denom() * b.numer();
        }
        let ratio = Q::new(num, den);
        if !ratio.is_integer() {
            return Err(KernelError::NonIntegralValue(format!(
                "weyl_dim({lam}) = {ratio}"
            )));
        }
        u128::try_from(ratio.to_integer()).map_err(|_| KernelError::Overflow("weyl_dim"))
    }
}

/// Exact Gauss-Jordan inverse of a small integer matrix; `None` if singular.
fn invert_exact(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .map(|row| row.iter().map(|&e| q(e)).collect())
        .collect();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &a[col][j] * &f;
                a[r][j] -= t;
                let t = &inv[col][j] * &f;
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}
