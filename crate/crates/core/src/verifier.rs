//! Bounded exhaustive searches for counterexamples to the non-existence
//! claims and the two divisibility lemmas.
//!
//! Each search walks its loop variables in lexicographic order; the
//! outermost loop may be split across workers, and the merged report is
//! identical to the sequential one. Every counterexample is re-checked
//! against the claim's defining equations before it enters a report.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{self, exact_sqrt, gcd_nonzero};
use crate::boxes::equal_edge_boxes_with_jobs;
use crate::error::{Error, Result, Violation};
use crate::partition;
use crate::triples::{enumerate_triples_with_jobs, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// `a² | b²` implies `a | b`.
    Result1,
    /// Coprime `a, b` with square product are both squares.
    Result2,
    /// No `m > n` with both `m² + n²` and `m² − n²` square.
    Result3,
    /// `z² = x⁴ + 4y⁴` has no positive solution.
    Prop1,
    /// `z² = w² + y²`, `w² = y² + x²` has no positive solution.
    Prop2,
    /// No triangle pair where the longer leg of the first is the hypotenuse
    /// of the second and the shorter leg of the first is a leg of the second.
    Theorem1,
    /// No box with a pair of square faces whose other faces have integral
    /// diagonals.
    Theorem2,
    /// Deliberately false: "no Pythagorean triple exists". Used to prove
    /// the harness can find counterexamples.
    #[doc(hidden)]
    FaultNoTriples,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::Prop1,
        Claim::Prop2,
        Claim::Result1,
        Claim::Result2,
        Claim::Result3,
        Claim::Theorem1,
        Claim::Theorem2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Result1 => "result1",
            Claim::Result2 => "result2",
            Claim::Result3 => "result3",
            Claim::Prop1 => "prop1",
            Claim::Prop2 => "prop2",
            Claim::Theorem1 => "theorem1",
            Claim::Theorem2 => "theorem2",
            Claim::FaultNoTriples => "fault-no-triples",
        }
    }

    /// Name of the search bound.
    pub fn bound_name(self) -> &'static str {
        match self {
            Claim::Result1 => "max_ab",
            Claim::Result2 => "max_prod",
            Claim::Result3 => "max_mn",
            Claim::Prop1 => "max_xy",
            Claim::Prop2 => "max_w",
            Claim::Theorem1 => "max_c",
            Claim::Theorem2 => "max_q",
            Claim::FaultNoTriples => "max_c",
        }
    }

    /// What `examined` counts for this claim.
    pub fn counting_rule(self) -> &'static str {
        match self {
            Claim::Result1 => "pairs (a, b) in [1, max_ab]² with a² | b²",
            Claim::Result2 => "coprime pairs (a, b) with ab ≤ max_prod and ab a perfect square",
            Claim::Result3 => "pairs 1 ≤ n < m ≤ max_mn",
            Claim::Prop1 => "pairs (x, y) in [1, max_xy]²",
            Claim::Prop2 => {
                "Pythagorean triples with hypotenuse w ≤ max_w, once per choice of leg y"
            }
            Claim::Theorem1 => {
                "pairs of triples (a, b, c), c ≤ max_c, and (·, ·, b) with hypotenuse b"
            }
            Claim::Theorem2 => "boxes (r, r, p, q) with q ≤ max_q",
            Claim::FaultNoTriples => "Pythagorean triples with c ≤ max_c",
        }
    }

    /// Tuple layout of a counterexample.
    pub fn witness_layout(self) -> &'static [&'static str] {
        match self {
            Claim::Result1 | Claim::Result2 => &["a", "b"],
            Claim::Result3 => &["m", "n"],
            Claim::Prop1 => &["x", "y", "z"],
            Claim::Prop2 => &["x", "y", "z", "w"],
            Claim::Theorem1 => &["a", "d", "b", "c"],
            Claim::Theorem2 => &["r", "p", "q", "d"],
            Claim::FaultNoTriples => &["a", "b", "c"],
        }
    }

    /// Whether `w` substituted into the claim's equations refutes it.
    pub fn refuted_by(self, w: &[u64]) -> bool {
        if w.len() != self.witness_layout().len() || w.contains(&0) {
            return false;
        }
        let sq = |v: u64| v as u128 * v as u128;
        let is_sq = |v: Option<u128>| v.is_some_and(arith::is_perfect_square_wide);
        match self {
            Claim::Result1 => {
                let (a, b) = (w[0], w[1]);
                sq(b) % sq(a) == 0 && b % a != 0
            }
            Claim::Result2 => {
                let (a, b) = (w[0], w[1]);
                gcd_nonzero(a, b) == 1
                    && is_sq((a as u128).checked_mul(b as u128))
                    && !(arith::is_perfect_square(a) && arith::is_perfect_square(b))
            }
            Claim::Result3 => {
                let (m, n) = (w[0], w[1]);
                m > n && is_sq(Some(sq(m) + sq(n))) && is_sq(Some(sq(m) - sq(n)))
            }
            Claim::Prop1 => {
                let (x, y, z) = (w[0], w[1], w[2]);
                let rhs = sq(x)
                    .checked_mul(sq(x))
                    .zip(sq(y).checked_mul(sq(y)).and_then(|y4| y4.checked_mul(4)))
                    .and_then(|(x4, y4)| x4.checked_add(y4));
                rhs == Some(sq(z))
            }
            Claim::Prop2 => {
                let (x, y, z, wv) = (w[0], w[1], w[2], w[3]);
                sq(z) == sq(wv) + sq(y) && sq(wv) == sq(y) + sq(x)
            }
            Claim::Theorem1 => {
                let (a, d, b, c) = (w[0], w[1], w[2], w[3]);
                a < b && sq(c) == sq(b) + sq(a) && sq(b) == sq(d) + sq(a)
            }
            Claim::Theorem2 => {
                let (r, p, q, d) = (w[0], w[1], w[2], w[3]);
                sq(q) == 2 * sq(r) + sq(p) && sq(d) == sq(r) + sq(p)
            }
            Claim::FaultNoTriples => sq(w[0]) + sq(w[1]) == sq(w[2]),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .chain([Claim::FaultNoTriples])
            .find(|c| c.name() == s)
            .ok_or_else(|| Violation::Unsupported(format!("unknown claim {s:?}")).into())
    }
}

impl Serialize for Claim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Claim {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Outcome of one bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    claim: Claim,
    bounds: BTreeMap<String, u64>,
    examined: u64,
    counterexamples: Vec<Vec<u64>>,
    elapsed: Duration,
}

impl SearchReport {
    pub fn new(claim: Claim, bound: u64) -> Self {
        Self {
            claim,
            bounds: BTreeMap::from([(claim.bound_name().to_owned(), bound)]),
            examined: 0,
            counterexamples: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// Adds a counterexample after confirming it actually refutes the claim.
    pub fn record_counterexample(&mut self, witness: Vec<u64>) -> Result<()> {
        if !self.claim.refuted_by(&witness) {
            return Err(Violation::EquationFails {
                equation: "claim refutation",
                values: witness,
            }
            .into());
        }
        self.counterexamples.push(witness);
        Ok(())
    }

    pub fn claim(&self) -> Claim {
        self.claim
    }

    pub fn bounds(&self) -> &BTreeMap<String, u64> {
        &self.bounds
    }

    pub fn bound(&self) -> u64 {
        self.bounds[self.claim.bound_name()]
    }

    pub fn examined(&self) -> u64 {
        self.examined
    }

    pub fn counterexamples(&self) -> &[Vec<u64>] {
        &self.counterexamples
    }

    pub fn elapsed(&self) -> Duration {
        self.elapsed
    }

    /// No counterexample was found within the bound.
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct ReportRepr {
    claim: Claim,
    bounds: BTreeMap<String, u64>,
    examined: u64,
    #[serde(default)]
    counting_rule: String,
    counterexamples: Vec<Vec<u64>>,
    elapsed_ms: u64,
}

impl Serialize for SearchReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ReportRepr {
            claim: self.claim,
            bounds: self.bounds.clone(),
            examined: self.examined,
            counting_rule: self.claim.counting_rule().to_owned(),
            counterexamples: self.counterexamples.clone(),
            elapsed_ms: self.elapsed.as_millis() as u64,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SearchReport {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ReportRepr::deserialize(d)?;
        if !r.bounds.contains_key(r.claim.bound_name()) {
            return Err(serde::de::Error::missing_field("bounds"));
        }
        let mut report = SearchReport {
            claim: r.claim,
            bounds: r.bounds,
            examined: r.examined,
            counterexamples: Vec::new(),
            elapsed: Duration::from_millis(r.elapsed_ms),
        };
        for w in r.counterexamples {
            report
                .record_counterexample(w)
                .map_err(serde::de::Error::custom)?;
        }
        Ok(report)
    }
}

/// Per-index partial result of a sweep.
type Partial = (u64, Vec<Vec<u64>>);

fn finish(
    claim: Claim,
    bound: u64,
    partials: Vec<Partial>,
    start: Instant,
) -> Result<SearchReport> {
    let mut report = SearchReport::new(claim, bound);
    let mut witnesses = Vec::new();
    for (examined, found) in partials {
        report.examined += examined;
        witnesses.extend(found);
    }
    witnesses.sort();
    for w in witnesses {
        report.record_counterexample(w)?;
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn require_bound(claim: Claim, bound: u64) -> Result<()> {
    if bound == 0 {
        return Err(Violation::NonPositive(claim.bound_name()).into());
    }
    arith::fits(bound)?;
    Ok(())
}

/// Runs the search for `claim` up to `bound` on `jobs` workers.
pub fn verify(claim: Claim, bound: u64, jobs: usize) -> Result<SearchReport> {
    match claim {
        Claim::Result1 => verify_result1(bound, jobs),
        Claim::Result2 => verify_result2(bound, jobs),
        Claim::Result3 => verify_result3(bound, jobs),
        Claim::Prop1 => verify_prop1(bound, jobs),
        Claim::Prop2 => verify_prop2(bound, jobs),
        Claim::Theorem1 => verify_theorem1(bound, jobs),
        Claim::Theorem2 => verify_theorem2(bound, jobs),
        Claim::FaultNoTriples => verify_fault_no_triples(bound, jobs),
    }
}

/// `x⁴ + 4y⁴` is never a square for `1 ≤ x, y ≤ max_xy`.
pub fn verify_prop1(max_xy: u64, jobs: usize) -> Result<SearchReport> {
    let start = Instant::now();
    require_bound(Claim::Prop1, max_xy)?;
    arith::wide_mul(arith::pow4(max_xy)?, 5)?;
    let partials = partition::map_ordered(1..max_xy + 1, jobs, |x| {
        let x4 = arith::pow4(x)?;
        let mut found = Vec::new();
        for y in 1..=max_xy {
            let rhs = arith::wide_add(x4, arith::wide_mul(4, arith::pow4(y)?)?)?;
            if let Some(z) = arith::exact_sqrt_wide(rhs) {
                let z = u64::try_from(z).map_err(|_| Error::Overflow("prop1 witness"))?;
                found.push(vec![x, y, z]);
            }
        }
        Ok((max_xy, found))
    })?;
    finish(Claim::Prop1, max_xy, partials, start)
}

fn prop2_partials(triples: &[Triple], jobs: usize) -> Result<Vec<Partial>> {
    partition::map_ordered(0..triples.len() as u64, jobs, |i| {
        let t = triples[i as usize];
        let w2 = arith::sq(t.c())?;
        let mut found = Vec::new();
        for (y, x) in [(t.a(), t.b()), (t.b(), t.a())] {
            let z2 = arith::add(w2, arith::sq(y)?)?;
            if let Some(z) = exact_sqrt(z2) {
                found.push(vec![x, y, z, t.c()]);
            }
        }
        Ok((2, found))
    })
}

/// No `(x, y, w)` triple with `w ≤ max_w` extends to `z² = w² + y²`.
pub fn verify_prop2(max_w: u64, jobs: usize) -> Result<SearchReport> {
    let start = Instant::now();
    require_bound(Claim::Prop2, max_w)?;
    let triples = enumerate_triples_with_jobs(max_w, false, jobs)?;
    let partials = prop2_partials(&triples, jobs)?;
    finish(Claim::Prop2, max_w, partials, start)
}

/// No `1 ≤ n < m ≤ max_mn` with `m² + n²` and `m² − n²` both square.
pub fn verify_result3(max_mn: u64, jobs: usize) -> Result<SearchReport> {
    let start = Instant::now();
    require_bound(Claim::Result3, max_mn)?;
    arith::mul(2, arith::sq(max_mn)?)?;
    let partials = partition::map_ordered(2..max_mn + 1, jobs, |m| {
        let m2 = m * m;
        let found = (1..m)
            .filter(|&n| {
                arith::is_perfect_square(m2 + n * n) && arith::is_perfect_square(m2 - n * n)
            })
            .map(|n| vec![m, n])
            .collect();
        Ok((m - 1, found))
    })?;
    finish(Claim::Result3, max_mn, partials, start)
}

/// Searches pairs of triangles `(a, b, c)` and `(a, d, b)`: the longer leg
/// of the first is the hypotenuse of the second and the shorter leg is
/// shared. Every witness found is cross-checked against the corresponding
/// four-variable system at the same bound.
pub fn verify_theorem1(max_c: u64, jobs: usize) -> Result<SearchReport> {
    let start = Instant::now();
    require_bound(Claim::Theorem1, max_c)?;
    let triples = enumerate_triples_with_jobs(max_c, false, jobs)?;
    let mut by_hypotenuse: HashMap<u64, Vec<Triple>> = HashMap::new();
    for t in &triples {
        by_hypotenuse.entry(t.c()).or_default().push(*t);
    }
    let partials = partition::map_ordered(0..triples.len() as u64, jobs, |i| {
        let first = triples[i as usize];
        let seconds = by_hypotenuse.get(&first.b()).map_or(&[][..], Vec::as_slice);
        let found = seconds
            .iter()
            .filter_map(|s| match s.legs() {
                [x, d] | [d, x] if x == first.a() => Some(vec![first.a(), d, first.b(), first.c()]),
                _ => None,
            })
            .collect();
        Ok((seconds.len() as u64, found))
    })?;
    let report = finish(Claim::Theorem1, max_c, partials, start)?;
    let system = finish(
        Claim::Prop2,
        max_c,
        prop2_partials(&triples, jobs)?,
        Instant::now(),
    )?;
    theorem1_agrees_with_prop2(&report, &system)?;
    Ok(report)
}

/// Maps a Theorem 1 witness `(a, d, b, c)` to the system witness
/// `(x, y, z, w) = (d, a, c, b)`.
pub fn theorem1_to_prop2(w: &[u64]) -> Vec<u64> {
    vec![w[1], w[0], w[3], w[2]]
}

/// Witness-level agreement between a Theorem 1 search and a system search
/// at the same bound: each Theorem 1 witness is a system witness, and each
/// system witness with `z` inside the bound is a Theorem 1 witness.
pub fn theorem1_agrees_with_prop2(t1: &SearchReport, p2: &SearchReport) -> Result<()> {
    if t1.claim != Claim::Theorem1 || p2.claim != Claim::Prop2 || t1.bound() != p2.bound() {
        return Err(Error::Inconsistent(
            "expected theorem1 and prop2 reports with equal bounds".into(),
        ));
    }
    let mapped: BTreeSet<Vec<u64>> = t1
        .counterexamples
        .iter()
        .map(|w| theorem1_to_prop2(w))
        .collect();
    let system: BTreeSet<Vec<u64>> = p2
        .counterexamples
        .iter()
        .filter(|w| w[2] <= t1.bound())
        .cloned()
        .collect();
    let all_system: BTreeSet<&Vec<u64>> = p2.counterexamples.iter().collect();
    if mapped != system || !mapped.iter().all(|w| all_system.contains(w)) {
        return Err(Error::Inconsistent(format!(
            "theorem1 witnesses {mapped:?} vs prop2 witnesses {system:?}"
        )));
    }
    Ok(())
}

/// No box `(r, r, p, q)` with `q ≤ max_q` has `r² + p²` square.
pub fn verify_theorem2(max_q: u64, jobs: usize) -> Result<SearchReport> {
    let start = Instant::now();
    require_bound(Claim::Theorem2, max_q)?;
    let boxes = equal_edge_boxes_with_jobs(max_q, jobs)?;
    let partials = partition::map_ordered(0..boxes.len() as u64, jobs, |i| {
        let b = boxes[i as usize];
        let (r, p) = (b.x(), b.z());
        let found = exact_sqrt(arith::add(arith::sq(r)?, arith::sq(p)?)?)
            .map(|d| vec![r, p, b.t(), d])
            .into_iter()
            .collect();
        Ok((1, found))
    })?;
    finish(Claim::Theorem2, max_q, partials, start)
}

/// For `1 ≤ a, b ≤ max_ab` with `a² | b²`, also `a | b`.
pub fn verify_result1(max_ab: u64, jobs: usize) -> Result<SearchReport> {
    let start = Instant::now();
    require_bound(Claim::Result1, max_ab)?;
    arith::sq(max_ab)?;
    let partials = partition::map_ordered(1..max_ab + 1, jobs, |a| {
        let a2 = a * a;
        let mut examined = 0;
        let mut found = Vec::new();
        for b in 1..=max_ab {
            if (b * b) % a2 != 0 {
                continue;
            }
            examined += 1;
            if b % a != 0 {
                found.push(vec![a, b]);
            }
        }
        Ok((examined, found))
    })?;
    finish(Claim::Result1, max_ab, partials, start)
}

/// Coprime `a, b` with square product `ab ≤ max_prod` are both squares.
pub fn verify_result2(max_prod: u64, jobs: usize) -> Result<SearchReport> {
    let start = Instant::now();
    require_bound(Claim::Result2, max_prod)?;
    let partials = partition::map_ordered(1..max_prod + 1, jobs, |a| {
        let mut examined = 0;
        let mut found = Vec::new();
        for b in 1..=max_prod / a {
            if gcd_nonzero(a, b) != 1 || !arith::is_perfect_square(a * b) {
                continue;
            }
            examined += 1;
            if !(arith::is_perfect_square(a) && arith::is_perfect_square(b)) {
                found.push(vec![a, b]);
            }
        }
        Ok((examined, found))
    })?;
    finish(Claim::Result2, max_prod, partials, start)
}

#[doc(hidden)]
pub fn verify_fault_no_triples(max_c: u64, jobs: usize) -> Result<SearchReport> {
    let start = Instant::now();
    require_bound(Claim::FaultNoTriples, max_c)?;
    let triples = enumerate_triples_with_jobs(max_c, false, jobs)?;
    let partials = triples
        .iter()
        .map(|t| (1, vec![vec![t.a(), t.b(), t.c()]]))
        .collect();
    finish(Claim::FaultNoTriples, max_c, partials, start)
}
