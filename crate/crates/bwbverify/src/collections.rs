//! Lefschetz-collection verification.
//!
//! A collection spec (starting block + support partition) expands into a
//! deterministic, duplicate-free list of machine-checkable obligations:
//! per-object exceptionality, semiorthogonality inside the starting block,
//! and the twisted vanishings demanded by the block structure. Each
//! obligation is discharged to Proven / Refuted / Unknown through the kernel.
//!
//! The semi-simplification criterion cannot decide every Ext involving the
//! named filtered bundles. Such obligations are never promoted silently: a
//! proof script may cover them with explicit reduction steps (Serre
//! transport, the three-term complex, the left-orthogonality argument for a
//! certified nontrivial extension), each of which re-checks its own
//! hypotheses through the kernel and records what it used. Anything a script
//! does not cover stays Unknown in the report.

use crate::bwb::GradedVector;
use crate::bundles::{ExtensionOutcome, ObjectSpec};
use crate::error::{KernelError, Result};
use crate::levi::ParabolicData;
use crate::literal;
use crate::root_system::Weight;
use crate::tensor::Decomposition;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Discharge status of one obligation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Proven,
    Refuted,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Proven => write!(f, "Proven"),
            Status::Refuted => write!(f, "Refuted"),
            Status::Unknown => write!(f, "Unknown"),
        }
    }
}

/// One machine-checkable claim.
#[derive(Clone, Debug)]
pub struct Obligation {
    pub kind: ObligationKind,
    pub provenance: String,
}

#[derive(Clone, Debug)]
pub enum ObligationKind {
    /// S^w has vanishing cohomology.
    Acyclic { weight: Weight },
    /// Ext(a, b) = 0.
    ExtVanishes { a: ObjectSpec, b: ObjectSpec },
    /// Ext(a, b) equals the given graded vector exactly.
    ExtEquals {
        a: ObjectSpec,
        b: ObjectSpec,
        expected: GradedVector,
    },
    /// tensor(a, b) equals the given decomposition exactly, and ranks
    /// multiply.
    TensorEquals {
        a: Weight,
        b: Weight,
        expected: Decomposition,
    },
    /// Ext(S^w, S^w) = C[0].
    ExceptionalIrreducible { weight: Weight },
    /// The clean unique-extension pattern holds and the extension is
    /// exceptional.
    ExceptionalExtension { sub: ObjectSpec, quot: ObjectSpec },
    RankEquals { weight: Weight, rank: u128 },
    KRankEquals { rank: u128 },
    /// Census of the positive non-parabolic roots by marked-coefficient
    /// degree, with the expected Levi-dominant weights.
    NilradicalCensus {
        degrees: BTreeMap<u32, usize>,
        dominant: Vec<Weight>,
    },
    FilteredRankEquals { object: ObjectSpec, rank: u128 },
    GlobalSectionsDim { object: ObjectSpec, dim: u128 },
    /// The shipped three-term complex satisfies its rank arithmetic.
    ComplexRankIdentity,
    /// Reduction: Ext(a, b) = 0 via Serre duality from Ext(b, a(-r)).
    SerreTransport { a: ObjectSpec, b: ObjectSpec },
    /// Reduction: Ext(a, V(j)) = 0 via the three-term complex of V, from
    /// Ext(a, O(j)), Ext(a, V(j-1)) and Ext(a, H(j-1)).
    ThreeTermTransport { a: ObjectSpec, twist: i64 },
    /// Reduction: Ext(a, V(j)) equals `expected` via the same complex, with
    /// the value read off one degree up in Ext(a, H(j-1)).
    ThreeTermValue {
        a: ObjectSpec,
        twist: i64,
        expected: GradedVector,
    },
    /// Reduction: for a certified nontrivial extension 0 -> A -> V -> B -> 0
    /// with Ext(B, A) = C[-1] and Ext(A, A) = C[0], Ext(V, A) = 0.
    LeftOrthogonalToSub { object: String },
    /// Reduction: Ext(a, b) = 0 via Ext(b-dual, a-dual) = 0; named bundles
    /// dualize through their declared duals.
    DualTransport { a: ObjectSpec, b: ObjectSpec },
    /// Reduction: Ext(a, b) = 0 once Ext against every graded piece of the
    /// chosen side vanishes, each settled by the kernel or by the ledger.
    PiecewiseVanishing {
        a: ObjectSpec,
        b: ObjectSpec,
        expand_first: bool,
    },
}

impl ObligationKind {
    pub fn tag(&self) -> &'static str {
        match self {
            ObligationKind::Acyclic { .. } => "acyclic",
            ObligationKind::ExtVanishes { .. } => "ext-vanishes",
            ObligationKind::ExtEquals { .. } => "ext-equals",
            ObligationKind::TensorEquals { .. } => "tensor-equals",
            ObligationKind::ExceptionalIrreducible { .. } => "exceptional-irreducible",
            ObligationKind::ExceptionalExtension { .. } => "exceptional-extension",
            ObligationKind::RankEquals { .. } => "rank-equals",
            ObligationKind::KRankEquals { .. } => "k-rank-equals",
            ObligationKind::NilradicalCensus { .. } => "nilradical-census",
            ObligationKind::FilteredRankEquals { .. } => "filtered-rank-equals",
            ObligationKind::GlobalSectionsDim { .. } => "global-sections-dim",
            ObligationKind::ComplexRankIdentity => "complex-rank-identity",
            ObligationKind::SerreTransport { .. } => "serre-transport",
            ObligationKind::ThreeTermTransport { .. } => "three-term-transport",
            ObligationKind::ThreeTermValue { .. } => "three-term-value",
            ObligationKind::LeftOrthogonalToSub { .. } => "left-orthogonal-sub",
            ObligationKind::DualTransport { .. } => "dual-transport",
            ObligationKind::PiecewiseVanishing { .. } => "piecewise-vanishing",
        }
    }
}

/// A Lefschetz collection spec: an ordered starting block and a weakly
/// decreasing support partition, with blocks twisted by O(1).
#[derive(Clone, Debug)]
pub struct LefschetzSpec {
    pub starting_block: Vec<ObjectSpec>,
    pub partition: Vec<usize>,
}

impl LefschetzSpec {
    pub fn total_objects(&self) -> usize {
        self.partition.iter().sum()
    }

    pub fn validate(&self, parab: &ParabolicData) -> Result<()> {
        if self.starting_block.is_empty() || self.partition.is_empty() {
            return Err(KernelError::InvalidSpec("empty block or partition".into()));
        }
        if self.partition.windows(2).any(|w| w[0] < w[1]) {
            return Err(KernelError::InvalidSpec(
                "partition is not weakly decreasing".into(),
            ));
        }
        if self.partition.iter().any(|&p| p == 0) {
            return Err(KernelError::InvalidSpec("partition entry is zero".into()));
        }
        if self.partition[0] != self.starting_block.len() {
            return Err(KernelError::InvalidSpec(format!(
                "partition head {} must equal the starting block length {}",
                self.partition[0],
                self.starting_block.len()
            )));
        }
        let r = parab.canonical_index()? as usize;
        if self.partition.len() > r {
            return Err(KernelError::InvalidSpec(format!(
                "{} blocks exceed the canonical index {r}",
                self.partition.len()
            )));
        }
        for spec in &self.starting_block {
            // every object must resolve
            parab.spec_pieces(spec)?;
        }
        Ok(())
    }
}

/// A proof script: optional collection plus explicit obligations, in order.
#[derive(Clone, Debug)]
pub struct Script {
    pub lemma: String,
    pub notes: Vec<String>,
    pub collection: Option<LefschetzSpec>,
    pub obligations: Vec<Obligation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObligationReport {
    pub kind: String,
    pub args: String,
    pub status: Status,
    pub witness: String,
    pub provenance: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counts {
    pub proven: usize,
    pub refuted: usize,
    pub unknown: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub lemma: String,
    pub notes: Vec<String>,
    pub obligations: Vec<ObligationReport>,
    pub counts: Counts,
    pub verdict: String,
}

impl Report {
    pub fn verified(&self) -> bool {
        self.verdict == "verified"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("script: {}\n", self.lemma));
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        for ob in &self.obligations {
            out.push_str(&format!(
                "[{}] {} {} :: {}",
                ob.status, ob.kind, ob.args, ob.witness
            ));
            if !ob.provenance.is_empty() {
                out.push_str(&format!(" ({})", ob.provenance));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "counts: proven {} / refuted {} / unknown {} / total {}\n",
            self.counts.proven, self.counts.refuted, self.counts.unknown, self.counts.total
        ));
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

struct Discharged {
    status: Status,
    witness: String,
}

fn proven(witness: impl Into<String>) -> Discharged {
    Discharged {
        status: Status::Proven,
        witness: witness.into(),
    }
}

fn refuted(witness: impl Into<String>) -> Discharged {
    Discharged {
        status: Status::Refuted,
        witness: witness.into(),
    }
}

fn unknown(witness: impl Into<String>) -> Discharged {
    Discharged {
        status: Status::Unknown,
        witness: witness.into(),
    }
}

/// The integer twist used to normalize an object pair up to a common twist.
fn spec_twist_level(parab: &ParabolicData, spec: &ObjectSpec) -> i64 {
    match spec {
        ObjectSpec::Named { twist, .. } => *twist,
        ObjectSpec::Expr(e) => e
            .first_weight()
            .map(|w| {
                let c = w.coeff(parab.marked_vertex());
                if c.is_integer() {
                    i64::try_from(c.to_integer()).unwrap_or(0)
                } else {
                    0
                }
            })
            .unwrap_or(0),
    }
}

/// Canonical key of an Ext pair: Ext(A(s), B(s)) has the same key for all s.
fn ext_pair_key(parab: &ParabolicData, a: &ObjectSpec, b: &ObjectSpec) -> String {
    let s = spec_twist_level(parab, a);
    let an = parab.twist_spec(a, -s);
    let bn = parab.twist_spec(b, -s);
    format!(
        "ext0|{}|{}",
        literal::display_object(parab, &an),
        literal::display_object(parab, &bn)
    )
}

fn ext_equals_key(
    parab: &ParabolicData,
    a: &ObjectSpec,
    b: &ObjectSpec,
    expected: &GradedVector,
) -> String {
    let s = spec_twist_level(parab, a);
    let an = parab.twist_spec(a, -s);
    let bn = parab.twist_spec(b, -s);
    format!(
        "ext|{}|{}|{}",
        literal::display_object(parab, &an),
        literal::display_object(parab, &bn),
        expected
    )
}

impl Obligation {
    /// Stable key identifying the claim itself (used for script coverage).
    pub fn key(&self, parab: &ParabolicData) -> String {
        match &self.kind {
            ObligationKind::Acyclic { weight } => format!("acyclic|{weight}"),
            ObligationKind::ExtVanishes { a, b } => ext_pair_key(parab, a, b),
            ObligationKind::ExtEquals { a, b, expected } => ext_equals_key(parab, a, b, expected),
            ObligationKind::TensorEquals { a, b, .. } => format!("tensor|{a}|{b}"),
            ObligationKind::ExceptionalIrreducible { weight } => {
                ext_equals_key(
                    parab,
                    &ObjectSpec::irreducible(weight.clone()),
                    &ObjectSpec::irreducible(weight.clone()),
                    &point(parab),
                )
            }
            ObligationKind::ExceptionalExtension { sub, quot } => {
                format!(
                    "excext|{}|{}",
                    literal::display_object(parab, sub),
                    literal::display_object(parab, quot)
                )
            }
            ObligationKind::RankEquals { weight, rank } => format!("rank|{weight}|{rank}"),
            ObligationKind::KRankEquals { rank } => format!("krank|{rank}"),
            ObligationKind::NilradicalCensus { .. } => "nilradical".into(),
            ObligationKind::FilteredRankEquals { object, rank } => format!(
                "frank|{}|{rank}",
                literal::display_object(parab, object)
            ),
            ObligationKind::GlobalSectionsDim { object, dim } => format!(
                "h0dim|{}|{dim}",
                literal::display_object(parab, object)
            ),
            ObligationKind::ComplexRankIdentity => "complex-rank".into(),
            ObligationKind::SerreTransport { a, b } => {
                format!("serre>{}", ext_pair_key(parab, a, b))
            }
            ObligationKind::ThreeTermTransport { a, twist } => {
                let b = target_of_complex(parab, *twist);
                format!("3term>{}", ext_pair_key(parab, a, &b))
            }
            ObligationKind::ThreeTermValue { a, twist, expected } => {
                let b = target_of_complex(parab, *twist);
                format!("3termv>{}", ext_equals_key(parab, a, &b, expected))
            }
            ObligationKind::LeftOrthogonalToSub { object } => format!("lorth|{object}"),
            ObligationKind::DualTransport { a, b } => {
                format!("dual>{}", ext_pair_key(parab, a, b))
            }
            ObligationKind::PiecewiseVanishing { a, b, expand_first } => {
                format!(
                    "piece{}>{}",
                    if *expand_first { "a" } else { "b" },
                    ext_pair_key(parab, a, b)
                )
            }
        }
    }

    /// The key of the generic obligation this one covers, if it is a
    /// reduction step.
    pub fn covers(&self, parab: &ParabolicData) -> Option<String> {
        match &self.kind {
            ObligationKind::SerreTransport { a, b } => Some(ext_pair_key(parab, a, b)),
            ObligationKind::ThreeTermTransport { a, twist } => {
                let b = target_of_complex(parab, *twist);
                Some(ext_pair_key(parab, a, &b))
            }
            ObligationKind::ThreeTermValue { a, twist, expected } => {
                let b = target_of_complex(parab, *twist);
                Some(ext_equals_key(parab, a, &b, expected))
            }
            ObligationKind::LeftOrthogonalToSub { object } => {
                let fb = parab.named_bundle(object).ok()?;
                let (sub, _) = fb.extension.as_ref()?;
                Some(ext_pair_key(parab, &ObjectSpec::named(object), sub))
            }
            ObligationKind::DualTransport { a, b } => Some(ext_pair_key(parab, a, b)),
            ObligationKind::PiecewiseVanishing { a, b, .. } => Some(ext_pair_key(parab, a, b)),
            _ => None,
        }
    }

    pub fn args_string(&self, parab: &ParabolicData) -> String {
        match &self.kind {
            ObligationKind::Acyclic { weight } => {
                literal::display_irreducible(parab, weight)
            }
            ObligationKind::ExtVanishes { a, b } => format!(
                "Ext({}, {}) = 0",
                literal::display_object(parab, a),
                literal::display_object(parab, b)
            ),
            ObligationKind::ExtEquals { a, b, expected } => format!(
                "Ext({}, {}) = {}",
                literal::display_object(parab, a),
                literal::display_object(parab, b),
                expected
            ),
            ObligationKind::TensorEquals { a, b, expected } => format!(
                "{} (x) {} = {}",
                literal::display_irreducible(parab, a),
                literal::display_irreducible(parab, b),
                literal::display_decomposition(parab, expected)
            ),
            ObligationKind::ExceptionalIrreducible { weight } => {
                format!("{} exceptional", literal::display_irreducible(parab, weight))
            }
            ObligationKind::ExceptionalExtension { sub, quot } => format!(
                "extension 0 -> {} -> V -> {} -> 0 exceptional",
                literal::display_object(parab, sub),
                literal::display_object(parab, quot)
            ),
            ObligationKind::RankEquals { weight, rank } => format!(
                "rank {} = {rank}",
                literal::display_irreducible(parab, weight)
            ),
            ObligationKind::KRankEquals { rank } => format!("K-rank = {rank}"),
            ObligationKind::NilradicalCensus { degrees, dominant } => {
                let degs: Vec<String> = degrees.iter().map(|(d, n)| format!("{d}:{n}")).collect();
                let doms: Vec<String> = dominant.iter().map(|w| w.to_string()).collect();
                format!("degrees {{{}}}, dominant {{{}}}", degs.join(", "), doms.join(", "))
            }
            ObligationKind::FilteredRankEquals { object, rank } => format!(
                "rank {} = {rank}",
                literal::display_object(parab, object)
            ),
            ObligationKind::GlobalSectionsDim { object, dim } => format!(
                "dim H^0({}) = {dim}",
                literal::display_object(parab, object)
            ),
            ObligationKind::ComplexRankIdentity => "three-term complex rank identity".into(),
            ObligationKind::SerreTransport { a, b } => format!(
                "Ext({}, {}) = 0 [Serre transport]",
                literal::display_object(parab, a),
                literal::display_object(parab, b)
            ),
            ObligationKind::ThreeTermTransport { a, twist } => format!(
                "Ext({}, {}) = 0 [three-term complex]",
                literal::display_object(parab, a),
                literal::display_object(parab, &target_of_complex(parab, *twist))
            ),
            ObligationKind::ThreeTermValue { a, twist, expected } => format!(
                "Ext({}, {}) = {} [three-term complex]",
                literal::display_object(parab, a),
                literal::display_object(parab, &target_of_complex(parab, *twist)),
                expected
            ),
            ObligationKind::LeftOrthogonalToSub { object } => {
                format!("Ext({object}, sub({object})) = 0 [extension class]")
            }
            ObligationKind::DualTransport { a, b } => format!(
                "Ext({}, {}) = 0 [dualize both arguments]",
                literal::display_object(parab, a),
                literal::display_object(parab, b)
            ),
            ObligationKind::PiecewiseVanishing { a, b, expand_first } => format!(
                "Ext({}, {}) = 0 [piecewise in the {} argument]",
                literal::display_object(parab, a),
                literal::display_object(parab, b),
                if *expand_first { "first" } else { "second" }
            ),
        }
    }
}

fn point(parab: &ParabolicData) -> GradedVector {
    GradedVector::single(0, Weight::zero(parab.ambient().rank()), 1)
}

fn target_of_complex(parab: &ParabolicData, twist: i64) -> ObjectSpec {
    match parab.complex_data() {
        Ok(data) => parab.twist_spec(&data.object, twist),
        Err(_) => ObjectSpec::Named {
            name: "(no complex)".into(),
            twist,
        },
    }
}

/// Expand a collection spec into its generic obligation list:
/// exceptionality of each starting-block object; Ext(E_i, E_j) = 0 for
/// i > j inside the block; and for each twist 1 <= t < l and each E_m in
/// block t, E_n in block 0, Ext(E_m, E_n(-t)) = 0. Partition entries are
/// block cardinalities: block t holds the first p_t objects.
pub fn enumerate_obligations(
    parab: &ParabolicData,
    spec: &LefschetzSpec,
) -> Result<Vec<Obligation>> {
    spec.validate(parab)?;
    let block = &spec.starting_block;
    let mut out = Vec::new();
    for (i, obj) in block.iter().enumerate() {
        let kind = match obj {
            ObjectSpec::Expr(e) => match e.as_single() {
                Some(w) => ObligationKind::ExceptionalIrreducible { weight: w.clone() },
                None => ObligationKind::ExtEquals {
                    a: obj.clone(),
                    b: obj.clone(),
                    expected: point(parab),
                },
            },
            ObjectSpec::Named { .. } => ObligationKind::ExtEquals {
                a: obj.clone(),
                b: obj.clone(),
                expected: point(parab),
            },
        };
        out.push(Obligation {
            kind,
            provenance: format!("starting block object {}", i + 1),
        });
    }
    for i in 0..block.len() {
        for j in 0..i {
            out.push(Obligation {
                kind: ObligationKind::ExtVanishes {
                    a: block[i].clone(),
                    b: block[j].clone(),
                },
                provenance: format!("starting block semiorthogonality ({} > {})", i + 1, j + 1),
            });
        }
    }
    for t in 1..spec.partition.len() {
        let p_t = spec.partition[t];
        for m in 0..p_t {
            for n in 0..block.len() {
                out.push(Obligation {
                    kind: ObligationKind::ExtVanishes {
                        a: block[m].clone(),
                        b: parab.twist_spec(&block[n], -(t as i64)),
                    },
                    provenance: format!("block {t}: Ext(E{}, E{}(-{t}))", m + 1, n + 1),
                });
            }
        }
    }
    Ok(out)
}

/// Acyclic-summand witness for a vanishing Ext: the tensor summands that the
/// semi-simplification reduction visits, in bundle notation.
pub fn ext_summand_witness(
    parab: &ParabolicData,
    a: &ObjectSpec,
    b: &ObjectSpec,
) -> Result<Vec<Weight>> {
    let mut summands: Vec<Weight> = Vec::new();
    let sa = parab.spec_ss(a)?;
    let sb = parab.spec_ss(b)?;
    for (wa, _) in sa.iter() {
        let da = parab.dual_weight(wa)?;
        for (wb, _) in sb.iter() {
            for (s, _) in parab.tensor_bundles(&da, wb)?.iter() {
                summands.push(s.clone());
            }
        }
    }
    summands.sort();
    summands.dedup();
    Ok(summands)
}

fn format_summands(parab: &ParabolicData, ws: &[Weight]) -> String {
    let parts: Vec<String> = ws
        .iter()
        .map(|w| literal::display_irreducible(parab, w))
        .collect();
    parts.join(", ")
}

type Ledger = BTreeMap<String, Status>;

/// Discharge one obligation. Errors never panic and never abort a run: they
/// surface as Refuted with a diagnostic witness.
pub fn discharge(parab: &ParabolicData, ob: &Obligation, ledger: Option<&Ledger>) -> (Status, String) {
    let d = match discharge_inner(parab, ob, ledger) {
        Ok(d) => d,
        Err(e) => refuted(format!("error during discharge: {e}")),
    };
    (d.status, d.witness)
}

fn lookup_or_ss(
    parab: &ParabolicData,
    ledger: Option<&Ledger>,
    a: &ObjectSpec,
    b: &ObjectSpec,
) -> Result<(Status, String)> {
    let ss = parab.ext_semisimplified(a, b)?;
    if ss.graded.is_empty() {
        return Ok((
            Status::Proven,
            format!(
                "Ext({}, {}) = 0 by semi-simplification",
                literal::display_object(parab, a),
                literal::display_object(parab, b)
            ),
        ));
    }
    let key = ext_pair_key(parab, a, b);
    if let Some(Status::Proven) = ledger.and_then(|l| l.get(&key)) {
        return Ok((
            Status::Proven,
            format!("Ext pair {key} already proven in this ledger"),
        ));
    }
    Ok((
        Status::Unknown,
        format!(
            "Ext({}, {}) not settled: ss bound {}",
            literal::display_object(parab, a),
            literal::display_object(parab, b),
            ss.graded
        ),
    ))
}

fn discharge_inner(
    parab: &ParabolicData,
    ob: &Obligation,
    ledger: Option<&Ledger>,
) -> Result<Discharged> {
    Ok(match &ob.kind {
        ObligationKind::Acyclic { weight } => {
            let res = parab.bwb_cohomology(weight)?;
            match res {
                crate::bwb::CohomologyResult::Acyclic { .. } => proven(res.to_string()),
                crate::bwb::CohomologyResult::Concentrated { .. } => {
                    refuted(format!("not acyclic: {res}"))
                }
            }
        }
        ObligationKind::ExtVanishes { a, b } => {
            let ss = parab.ext_semisimplified(a, b)?;
            if ss.graded.is_empty() {
                let witness = ext_summand_witness(parab, a, b)?;
                proven(format!(
                    "all summands acyclic: {}",
                    format_summands(parab, &witness)
                ))
            } else if ss.exact {
                refuted(format!("Ext = {} (exact)", ss.graded))
            } else if let Some((w, chi)) = ss.graded.nonzero_euler_witness() {
                refuted(format!(
                    "nonzero Euler characteristic {chi} at weight {w}; ss bound {}",
                    ss.graded
                ))
            } else {
                unknown(format!("ss bound {} admits cancellation", ss.graded))
            }
        }
        ObligationKind::ExtEquals { a, b, expected } => {
            let ss = parab.ext_semisimplified(a, b)?;
            if ss.exact {
                if &ss.graded == expected {
                    proven(format!("Ext = {}", ss.graded))
                } else {
                    refuted(format!("computed {} != expected {expected}", ss.graded))
                }
            } else if ss.graded == *expected && expected.is_empty() {
                proven("vanishes by semi-simplification")
            } else {
                unknown(format!("ss bound {} admits cancellation", ss.graded))
            }
        }
        ObligationKind::TensorEquals { a, b, expected } => {
            let computed = parab.tensor_bundles(a, b)?;
            let ra = parab.rank_of_bundle(a)?;
            let rb = parab.rank_of_bundle(b)?;
            let mut total = 0u128;
            for (w, m) in computed.iter() {
                total += parab.rank_of_bundle(w)? * m;
            }
            if total != ra * rb {
                return Ok(refuted(format!(
                    "rank multiplicativity fails: {total} != {ra}*{rb}"
                )));
            }
            if &computed == expected {
                proven(format!(
                    "decomposition {} ; ranks {ra}*{rb} = {total}",
                    literal::display_decomposition(parab, &computed)
                ))
            } else {
                refuted(format!(
                    "computed {} != expected {}",
                    literal::display_decomposition(parab, &computed),
                    literal::display_decomposition(parab, expected)
                ))
            }
        }
        ObligationKind::ExceptionalIrreducible { weight } => {
            let e = BundleExprSpec(weight.clone()).spec();
            let ext = parab.ext_semisimplified(&e, &e)?;
            if ext.graded.is_point() {
                proven("Ext(E, E) = C[0]")
            } else {
                refuted(format!("Ext(E, E) = {}", ext.graded))
            }
        }
        ObligationKind::ExceptionalExtension { sub, quot } => {
            match parab.check_extension_exceptional(sub, quot)? {
                ExtensionOutcome::Exceptional(r) => proven(r.to_string()),
                ExtensionOutcome::NoNontrivialExtension(r) => {
                    refuted(format!("no nontrivial extension: {r}"))
                }
                ExtensionOutcome::Inconclusive(r) => unknown(r.to_string()),
            }
        }
        ObligationKind::RankEquals { weight, rank } => {
            let r = parab.rank_of_bundle(weight)?;
            if r == *rank {
                proven(format!("rank = {r}"))
            } else {
                refuted(format!("rank = {r}, expected {rank}"))
            }
        }
        ObligationKind::KRankEquals { rank } => {
            let r = parab.k_theory_rank()?;
            if r == *rank {
                proven(format!(
                    "|W_G| / |W_L| = {} / {} = {r}",
                    parab.ambient().weyl_group_order(),
                    parab.levi().weyl_group_order()
                ))
            } else {
                refuted(format!("K-rank = {r}, expected {rank}"))
            }
        }
        ObligationKind::NilradicalCensus { degrees, dominant } => {
            let g = parab.nilradical_grading()?;
            let got_degrees: BTreeMap<u32, usize> = g
                .by_degree
                .iter()
                .map(|(d, c)| (*d, c.roots.len()))
                .collect();
            let got_dominant = g.dominant_weights();
            let mut want_dominant = dominant.clone();
            want_dominant.sort();
            if got_degrees == *degrees && got_dominant == want_dominant {
                proven(format!(
                    "total {} roots; dominant weights as expected",
                    g.total_roots()
                ))
            } else {
                refuted(format!(
                    "computed degrees {got_degrees:?}, dominant {got_dominant:?}"
                ))
            }
        }
        ObligationKind::FilteredRankEquals { object, rank } => {
            let r = parab.spec_rank(object)?;
            if r == *rank {
                proven(format!("rank = {r}"))
            } else {
                refuted(format!("rank = {r}, expected {rank}"))
            }
        }
        ObligationKind::GlobalSectionsDim { object, dim } => {
            let sections = parab.global_sections(object)?;
            let d = sections.total_dimension(parab.ambient())?;
            if d == *dim {
                proven(format!("H^0 = {sections}, dimension {d}"))
            } else {
                refuted(format!("dim H^0 = {d}, expected {dim}"))
            }
        }
        ObligationKind::ComplexRankIdentity => {
            if parab.complex_rank_check()? {
                proven("rank arithmetic of the three-term complex checks")
            } else {
                refuted("rank arithmetic of the three-term complex fails")
            }
        }
        ObligationKind::SerreTransport { a, b } => {
            let r = parab.canonical_index()? as i64;
            let a_serre = b.clone();
            let b_serre = parab.twist_spec(a, -r);
            let (status, inner) = lookup_or_ss(parab, ledger, &a_serre, &b_serre)?;
            match status {
                Status::Proven => proven(format!(
                    "Serre duality (index {r}): reduces to Ext({}, {}); {inner}",
                    literal::display_object(parab, &a_serre),
                    literal::display_object(parab, &b_serre)
                )),
                _ => unknown(format!("Serre-dual side not settled: {inner}")),
            }
        }
        ObligationKind::ThreeTermTransport { a, twist } => {
            let data = parab.complex_data()?;
            if !parab.complex_rank_identity(&data)? {
                return Ok(unknown("three-term complex data fails its rank identity"));
            }
            let j = *twist;
            let hyps = [
                (
                    ObjectSpec::Expr(crate::bundles::BundleExpr::irreducible(
                        parab.line_bundle(j),
                    )),
                    "middle term",
                ),
                (parab.twist_spec(&data.object, j - 1), "left flank"),
                (
                    ObjectSpec::Expr(crate::bundles::BundleExpr::irreducible(
                        data.homology.add(&parab.line_bundle(j)),
                    )),
                    "middle cohomology",
                ),
            ];
            let mut used = Vec::new();
            for (b, label) in &hyps {
                let (status, inner) = lookup_or_ss(parab, ledger, a, b)?;
                if status != Status::Proven {
                    return Ok(unknown(format!("{label} hypothesis not settled: {inner}")));
                }
                used.push(format!("{label}: {inner}"));
            }
            proven(format!(
                "three-term complex reduction; {}",
                used.join(" | ")
            ))
        }
        ObligationKind::ThreeTermValue { a, twist, expected } => {
            let data = parab.complex_data()?;
            if !parab.complex_rank_identity(&data)? {
                return Ok(unknown("three-term complex data fails its rank identity"));
            }
            let j = *twist;
            let middle = ObjectSpec::Expr(crate::bundles::BundleExpr::irreducible(
                parab.line_bundle(j),
            ));
            let flank = parab.twist_spec(&data.object, j - 1);
            for (b, label) in [(&middle, "middle term"), (&flank, "left flank")] {
                let (status, inner) = lookup_or_ss(parab, ledger, a, b)?;
                if status != Status::Proven {
                    return Ok(unknown(format!("{label} hypothesis not settled: {inner}")));
                }
            }
            let hom = ObjectSpec::Expr(crate::bundles::BundleExpr::irreducible(
                data.homology.add(&parab.line_bundle(j)),
            ));
            let value = parab.ext_semisimplified(a, &hom)?;
            if !value.exact {
                return Ok(unknown(format!(
                    "Ext against the middle cohomology is inexact: ss bound {}",
                    value.graded
                )));
            }
            let shifted = match value.graded.shift_degrees(-1) {
                Ok(s) => s,
                Err(_) => {
                    return Ok(unknown(format!(
                        "middle-cohomology Ext {} has a degree-0 part; complex hypotheses inconsistent",
                        value.graded
                    )))
                }
            };
            if &shifted == expected {
                proven(format!(
                    "Ext against middle cohomology = {}; shifted value {shifted}",
                    value.graded
                ))
            } else {
                refuted(format!(
                    "three-term value {shifted} != expected {expected}"
                ))
            }
        }
        ObligationKind::LeftOrthogonalToSub { object } => {
            let fb = parab.named_bundle(object)?;
            let Some((sub, quot)) = fb.extension.clone() else {
                return Ok(unknown(format!("{object} carries no extension data")));
            };
            let class = parab.ext_semisimplified(&quot, &sub)?;
            let unique = GradedVector::single(1, Weight::zero(parab.ambient().rank()), 1);
            if !(class.exact && class.graded == unique) {
                return Ok(unknown(format!(
                    "Ext(quot, sub) = {}{} is not the unique-class pattern",
                    class.graded,
                    if class.exact { "" } else { " (ss bound)" }
                )));
            }
            let endo = parab.ext_semisimplified(&sub, &sub)?;
            if !(endo.exact && endo.graded.is_point()) {
                return Ok(unknown(format!(
                    "Ext(sub, sub) = {} is not C[0]",
                    endo.graded
                )));
            }
            proven(format!(
                "unique nontrivial class in Ext({}, {}) pairs isomorphically against C[0] endomorphisms; Ext({object}, sub) = 0",
                literal::display_object(parab, &quot),
                literal::display_object(parab, &sub)
            ))
        }
        ObligationKind::DualTransport { a, b } => {
            let Some(da) = parab.dual_spec(a)? else {
                return Ok(unknown(format!(
                    "{} has no declared dual",
                    literal::display_object(parab, a)
                )));
            };
            let Some(db) = parab.dual_spec(b)? else {
                return Ok(unknown(format!(
                    "{} has no declared dual",
                    literal::display_object(parab, b)
                )));
            };
            let (status, inner) = lookup_or_ss(parab, ledger, &db, &da)?;
            match status {
                Status::Proven => proven(format!(
                    "both arguments dualized: reduces to Ext({}, {}); {inner}",
                    literal::display_object(parab, &db),
                    literal::display_object(parab, &da)
                )),
                _ => unknown(format!("dualized side not settled: {inner}")),
            }
        }
        ObligationKind::PiecewiseVanishing { a, b, expand_first } => {
            let (expanded, fixed) = if *expand_first { (a, b) } else { (b, a) };
            let pieces = parab.spec_pieces(expanded)?;
            if pieces.len() < 2 {
                return Ok(unknown(format!(
                    "{} is not filtered; nothing to expand",
                    literal::display_object(parab, expanded)
                )));
            }
            let mut used = Vec::new();
            for piece in pieces {
                let piece_spec = ObjectSpec::Expr(piece);
                let (status, inner) = if *expand_first {
                    lookup_or_ss(parab, ledger, &piece_spec, fixed)?
                } else {
                    lookup_or_ss(parab, ledger, fixed, &piece_spec)?
                };
                if status != Status::Proven {
                    return Ok(unknown(format!("graded piece not settled: {inner}")));
                }
                used.push(inner);
            }
            proven(format!(
                "filtration long exact sequence over the graded pieces; {}",
                used.join(" | ")
            ))
        }
    })
}

// Small helper to build an irreducible ObjectSpec without importing in the
// match arm above.
struct BundleExprSpec(Weight);
impl BundleExprSpec {
    fn spec(self) -> ObjectSpec {
        ObjectSpec::irreducible(self.0)
    }
}

/// Run a script: enumerate its collection (when present), discharge every
/// generic obligation, then walk the script's explicit obligations in order,
/// letting reduction steps upgrade Unknown generic obligations they cover.
/// The report is a deterministic fold, independent of discharge parallelism.
pub fn verify_collection(parab: &ParabolicData, script: &Script, jobs: usize) -> Result<Report> {
    let mut notes = script.notes.clone();
    let generic = match &script.collection {
        Some(spec) => {
            notes.push(format!(
                "partition entries are block cardinalities: block t holds the first p_t objects of the starting block; {} objects in {} blocks",
                spec.total_objects(),
                spec.partition.len()
            ));
            enumerate_obligations(parab, spec)?
        }
        None => Vec::new(),
    };

    let run = |obs: &[Obligation]| -> Vec<(Status, String)> {
        if jobs == 1 {
            obs.iter().map(|ob| discharge(parab, ob, None)).collect()
        } else {
            use rayon::prelude::*;
            obs.par_iter().map(|ob| discharge(parab, ob, None)).collect()
        }
    };
    let pool;
    let generic_results = if jobs > 1 {
        pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| KernelError::Script(format!("thread pool: {e}")))?;
        pool.install(|| run(&generic))
    } else {
        run(&generic)
    };

    let mut rows: Vec<ObligationReport> = Vec::new();
    let mut ledger: Ledger = BTreeMap::new();
    let mut key_index: BTreeMap<String, usize> = BTreeMap::new();
    // Refuted is never overwritten; Proven is never downgraded to Unknown.
    fn merge(ledger: &mut Ledger, key: String, status: Status) {
        match ledger.get(&key) {
            Some(Status::Refuted) => {}
            Some(Status::Proven) if status == Status::Unknown => {}
            _ => {
                ledger.insert(key, status);
            }
        }
    }
    for (ob, (status, witness)) in generic.iter().zip(generic_results) {
        let key = ob.key(parab);
        merge(&mut ledger, key.clone(), status);
        key_index.entry(key).or_insert(rows.len());
        rows.push(ObligationReport {
            kind: ob.kind.tag().into(),
            args: ob.args_string(parab),
            status,
            witness,
            provenance: ob.provenance.clone(),
        });
    }

    for ob in &script.obligations {
        let (status, witness) = discharge(parab, ob, Some(&ledger));
        merge(&mut ledger, ob.key(parab), status);
        if status == Status::Proven {
            if let Some(target) = ob.covers(parab) {
                if let Some(&idx) = key_index.get(&target) {
                    if rows[idx].status == Status::Unknown {
                        rows[idx].status = Status::Proven;
                        rows[idx].witness = format!(
                            "by script step [{}] {}: {witness}",
                            ob.kind.tag(),
                            ob.provenance
                        );
                    }
                }
                if ledger.get(&target) != Some(&Status::Refuted) {
                    ledger.insert(target, Status::Proven);
                }
            }
        }
        key_index.entry(ob.key(parab)).or_insert(rows.len());
        rows.push(ObligationReport {
            kind: ob.kind.tag().into(),
            args: ob.args_string(parab),
            status,
            witness,
            provenance: ob.provenance.clone(),
        });
    }

    let counts = Counts {
        proven: rows.iter().filter(|r| r.status == Status::Proven).count(),
        refuted: rows.iter().filter(|r| r.status == Status::Refuted).count(),
        unknown: rows.iter().filter(|r| r.status == Status::Unknown).count(),
        total: rows.len(),
    };
    let verdict = if counts.refuted > 0 {
        "refuted"
    } else if counts.unknown > 0 {
        "unknown"
    } else {
        "verified"
    };
    Ok(Report {
        lemma: script.lemma.clone(),
        notes,
        obligations: rows,
        counts,
        verdict: verdict.into(),
    })
}

// ---------------------------------------------------------------------------
// Script parsing
// ---------------------------------------------------------------------------

fn as_weight(parab: &ParabolicData, v: &serde_json::Value, field: &str) -> Result<Weight> {
    let s = v
        .as_str()
        .ok_or_else(|| KernelError::Script(format!("{field}: expected a string")))?;
    literal::parse_weight(s, parab.ambient().rank())
}

fn as_single_object_weight(
    parab: &ParabolicData,
    v: &serde_json::Value,
    field: &str,
) -> Result<Weight> {
    let s = v
        .as_str()
        .ok_or_else(|| KernelError::Script(format!("{field}: expected a string")))?;
    match literal::parse_object(parab, s)? {
        ObjectSpec::Expr(e) => e
            .as_single()
            .cloned()
            .ok_or_else(|| KernelError::Script(format!("{field}: expected a single irreducible"))),
        ObjectSpec::Named { name, .. } => Err(KernelError::Script(format!(
            "{field}: named bundle {name} is not an irreducible"
        ))),
    }
}

fn as_object(parab: &ParabolicData, v: &serde_json::Value, field: &str) -> Result<ObjectSpec> {
    let s = v
        .as_str()
        .ok_or_else(|| KernelError::Script(format!("{field}: expected a string")))?;
    literal::parse_object(parab, s)
}

fn as_u128(v: &serde_json::Value, field: &str) -> Result<u128> {
    v.as_u64()
        .map(|x| x as u128)
        .ok_or_else(|| KernelError::Script(format!("{field}: expected a non-negative integer")))
}

fn as_graded(parab: &ParabolicData, v: &serde_json::Value, field: &str) -> Result<GradedVector> {
    let arr = v
        .as_array()
        .ok_or_else(|| KernelError::Script(format!("{field}: expected an array")))?;
    let mut g = GradedVector::empty();
    for entry in arr {
        let triple = entry
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| KernelError::Script(format!("{field}: expected [degree, weight, mult]")))?;
        let d = triple[0]
            .as_u64()
            .ok_or_else(|| KernelError::Script(format!("{field}: bad degree")))? as usize;
        let w = as_weight(parab, &triple[1], field)?;
        let m = as_u128(&triple[2], field)?;
        g.add(d, w, m);
    }
    Ok(g)
}

fn as_decomposition(
    parab: &ParabolicData,
    v: &serde_json::Value,
    field: &str,
) -> Result<Decomposition> {
    let arr = v
        .as_array()
        .ok_or_else(|| KernelError::Script(format!("{field}: expected an array")))?;
    let mut d = Decomposition::empty();
    for entry in arr {
        let pair = entry
            .as_array()
            .filter(|t| t.len() == 2)
            .ok_or_else(|| KernelError::Script(format!("{field}: expected [object, mult]")))?;
        let w = as_single_object_weight(parab, &pair[0], field)?;
        let m = as_u128(&pair[1], field)?;
        d.add(w, m);
    }
    Ok(d)
}

/// Parse a proof script from its JSON source.
pub fn parse_script(parab: &ParabolicData, source: &str) -> Result<Script> {
    let root: serde_json::Value = serde_json::from_str(source)?;
    let obj = root
        .as_object()
        .ok_or_else(|| KernelError::Script("script must be a JSON object".into()))?;
    let lemma = obj
        .get("lemma")
        .and_then(|v| v.as_str())
        .ok_or_else(|| KernelError::Script("missing lemma name".into()))?
        .to_string();
    let notes = obj
        .get("notes")
        .and_then(|v| v.as_array())
        .map(|arr| {
            arr.iter()
                .filter_map(|v| v.as_str().map(str::to_string))
                .collect()
        })
        .unwrap_or_default();
    let collection = obj
        .get("collection")
        .map(|c| -> Result<LefschetzSpec> {
            let co = c
                .as_object()
                .ok_or_else(|| KernelError::Script("collection must be an object".into()))?;
            let block = co
                .get("starting_block")
                .and_then(|v| v.as_array())
                .ok_or_else(|| KernelError::Script("collection.starting_block missing".into()))?
                .iter()
                .map(|v| as_object(parab, v, "starting_block"))
                .collect::<Result<Vec<_>>>()?;
            let partition = co
                .get("partition")
                .and_then(|v| v.as_array())
                .ok_or_else(|| KernelError::Script("collection.partition missing".into()))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| KernelError::Script("bad partition entry".into()))
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Ok(LefschetzSpec {
                starting_block: block,
                partition,
            })
        })
        .transpose()?;
    let mut obligations = Vec::new();
    for entry in obj
        .get("obligations")
        .and_then(|v| v.as_array())
        .ok_or_else(|| KernelError::Script("missing obligations array".into()))?
    {
        let eo = entry
            .as_object()
            .ok_or_else(|| KernelError::Script("obligation must be an object".into()))?;
        let kind_tag = eo
            .get("kind")
            .and_then(|v| v.as_str())
            .ok_or_else(|| KernelError::Script("obligation missing kind".into()))?;
        let args = eo
            .get("args")
            .cloned()
            .unwrap_or(serde_json::Value::Object(Default::default()));
        let provenance = eo
            .get("provenance")
            .and_then(|v| v.as_str())
            .unwrap_or("")
            .to_string();
        let get = |k: &str| -> Result<serde_json::Value> {
            args.get(k)
                .cloned()
                .ok_or_else(|| KernelError::Script(format!("{kind_tag}: missing arg {k:?}")))
        };
        let kind = match kind_tag {
            "acyclic" => ObligationKind::Acyclic {
                weight: as_single_object_weight(parab, &get("weight")?, "weight")?,
            },
            "ext-vanishes" => ObligationKind::ExtVanishes {
                a: as_object(parab, &get("a")?, "a")?,
                b: as_object(parab, &get("b")?, "b")?,
            },
            "ext-equals" => ObligationKind::ExtEquals {
                a: as_object(parab, &get("a")?, "a")?,
                b: as_object(parab, &get("b")?, "b")?,
                expected: as_graded(parab, &get("expected")?, "expected")?,
            },
            "tensor-equals" => ObligationKind::TensorEquals {
                a: as_single_object_weight(parab, &get("a")?, "a")?,
                b: as_single_object_weight(parab, &get("b")?, "b")?,
                expected: as_decomposition(parab, &get("expected")?, "expected")?,
            },
            "exceptional-irreducible" => ObligationKind::ExceptionalIrreducible {
                weight: as_single_object_weight(parab, &get("weight")?, "weight")?,
            },
            "exceptional-extension" => ObligationKind::ExceptionalExtension {
                sub: as_object(parab, &get("sub")?, "sub")?,
                quot: as_object(parab, &get("quot")?, "quot")?,
            },
            "rank-equals" => ObligationKind::RankEquals {
                weight: as_single_object_weight(parab, &get("object")?, "object")?,
                rank: as_u128(&get("rank")?, "rank")?,
            },
            "k-rank-equals" => ObligationKind::KRankEquals {
                rank: as_u128(&get("rank")?, "rank")?,
            },
            "nilradical-census" => {
                let degrees = get("degrees")?
                    .as_object()
                    .ok_or_else(|| KernelError::Script("degrees must be an object".into()))?
                    .iter()
                    .map(|(k, v)| {
                        let d = k
                            .parse::<u32>()
                            .map_err(|_| KernelError::Script(format!("bad degree {k:?}")))?;
                        let n = v
                            .as_u64()
                            .ok_or_else(|| KernelError::Script("bad degree count".into()))?;
                        Ok((d, n as usize))
                    })
                    .collect::<Result<BTreeMap<u32, usize>>>()?;
                let dominant = get("dominant")?
                    .as_array()
                    .ok_or_else(|| KernelError::Script("dominant must be an array".into()))?
                    .iter()
                    .map(|v| as_weight(parab, v, "dominant"))
                    .collect::<Result<Vec<_>>>()?;
                ObligationKind::NilradicalCensus { degrees, dominant }
            }
            "filtered-rank-equals" => ObligationKind::FilteredRankEquals {
                object: as_object(parab, &get("object")?, "object")?,
                rank: as_u128(&get("rank")?, "rank")?,
            },
            "global-sections-dim" => ObligationKind::GlobalSectionsDim {
                object: as_object(parab, &get("object")?, "object")?,
                dim: as_u128(&get("dim")?, "dim")?,
            },
            "complex-rank-identity" => ObligationKind::ComplexRankIdentity,
            "serre-transport" => ObligationKind::SerreTransport {
                a: as_object(parab, &get("a")?, "a")?,
                b: as_object(parab, &get("b")?, "b")?,
            },
            "three-term-transport" => ObligationKind::ThreeTermTransport {
                a: as_object(parab, &get("a")?, "a")?,
                twist: get("twist")?
                    .as_i64()
                    .ok_or_else(|| KernelError::Script("twist must be an integer".into()))?,
            },
            "three-term-value" => ObligationKind::ThreeTermValue {
                a: as_object(parab, &get("a")?, "a")?,
                twist: get("twist")?
                    .as_i64()
                    .ok_or_else(|| KernelError::Script("twist must be an integer".into()))?,
                expected: as_graded(parab, &get("expected")?, "expected")?,
            },
            "left-orthogonal-sub" => ObligationKind::LeftOrthogonalToSub {
                object: get("object")?
                    .as_str()
                    .ok_or_else(|| KernelError::Script("object must be a string".into()))?
                    .to_string(),
            },
            "dual-transport" => ObligationKind::DualTransport {
                a: as_object(parab, &get("a")?, "a")?,
                b: as_object(parab, &get("b")?, "b")?,
            },
            "piecewise-vanishing" => ObligationKind::PiecewiseVanishing {
                a: as_object(parab, &get("a")?, "a")?,
                b: as_object(parab, &get("b")?, "b")?,
                expand_first: match get("side")?.as_str() {
                    Some("a") => true,
                    Some("b") => false,
                    _ => return Err(KernelError::Script("side must be \"a\" or \"b\"".into())),
                },
            },
            other => {
                return Err(KernelError::Script(format!(
                    "unknown obligation kind {other:?}"
                )))
            }
        };
        obligations.push(Obligation { kind, provenance });
    }
    Ok(Script {
        lemma,
        notes,
        collection,
        obligations,
    })
}

/// Built-in proof scripts, keyed by the names the CLI accepts.
pub fn builtin_scripts() -> &'static [(&'static str, &'static str)] {
    &[
        ("lemma-3.5", include_str!("../fixtures/scripts/lemma-3.5.json")),
        ("lemma-3.6", include_str!("../fixtures/scripts/lemma-3.6.json")),
        ("lemma-3.7", include_str!("../fixtures/scripts/lemma-3.7.json")),
        ("lemma-3.8", include_str!("../fixtures/scripts/lemma-3.8.json")),
        ("lemma-3.9", include_str!("../fixtures/scripts/lemma-3.9.json")),
        ("lemma-3.15", include_str!("../fixtures/scripts/lemma-3.15.json")),
        ("lemma-4.2", include_str!("../fixtures/scripts/lemma-4.2.json")),
        ("lemma-4.4", include_str!("../fixtures/scripts/lemma-4.4.json")),
        ("lemma-4.5", include_str!("../fixtures/scripts/lemma-4.5.json")),
        ("main-theorem", include_str!("../fixtures/scripts/main-theorem.json")),
    ]
}

pub fn builtin_script_source(name: &str) -> Option<&'static str> {
    builtin_scripts()
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
}
