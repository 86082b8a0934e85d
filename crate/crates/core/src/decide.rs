//! Decision procedures built on the core: generation and maximality.

use alloc::vec::Vec;
use core::fmt;

use crate::automaton::{AutomatonError, TreeAutomaton};
use crate::element::{AbelianImage, TreeDiagram};
use crate::rewriting::{is_core_automaton, CoreWitness, Verdict};
use crate::stallings::{build_core, closure_contains_derived, middle_vertices, CoreError};

/// Default bound on the number of quotients examined.
pub const DEFAULT_CAP: usize = 10_000;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, s, t)` with `g = gcd(a, b) ≥ 0` and `s a + t b = g`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1, 0);
    let (mut t0, mut t1) = (0, 1);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// A subgroup of `Z^2`, kept in Hermite normal form.
///
/// The lattice is spanned by `(a, b)` (when `a > 0`) and `(0, d)`, with
/// `0 ≤ b < d` whenever `d > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianSubgroup {
    generators: Vec<AbelianImage>,
    row: Option<(i64, i64)>,
    d: i64,
}

impl AbelianSubgroup {
    pub fn trivial() -> Self {
        AbelianSubgroup {
            generators: Vec::new(),
            row: None,
            d: 0,
        }
    }

    pub fn generated_by(images: impl IntoIterator<Item = AbelianImage>) -> Self {
        let mut k = Self::trivial();
        for img in images {
            k.add(img);
        }
        k
    }

    /// Image of the subgroup generated by `gens` under abelianization.
    pub fn of_diagrams(gens: &[TreeDiagram]) -> Self {
        Self::generated_by(gens.iter().map(TreeDiagram::abelianize))
    }

    fn add(&mut self, img: AbelianImage) {
        self.generators.push(img);
        let AbelianImage(x, y) = img;
        if x == 0 {
            self.d = gcd(self.d, y);
        } else {
            match self.row {
                None => self.row = Some(if x < 0 { (-x, -y) } else { (x, y) }),
                Some((a, b)) => {
                    let (g, s, t) = ext_gcd(a, x);
                    self.d = gcd(self.d, (a / g) * y - (x / g) * b);
                    self.row = Some((g, s * b + t * y));
                }
            }
        }
        if let (Some((_, b)), true) = (self.row.as_mut(), self.d > 0) {
            *b = b.rem_euclid(self.d);
        }
    }

    pub fn generators(&self) -> &[AbelianImage] {
        &self.generators
    }

    /// Basis `[(a, b), (0, d)]`, omitting zero vectors.
    pub fn basis(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        if let Some(r) = self.row {
            out.push(r);
        }
        if self.d != 0 {
            out.push((0, self.d));
        }
        out
    }

    pub fn contains(&self, (x, y): (i64, i64)) -> bool {
        let rest = match self.row {
            None if x != 0 => return false,
            None => y,
            Some((a, b)) => {
                if x % a != 0 {
                    return false;
                }
                y - (x / a) * b
            }
        };
        if self.d == 0 {
            rest == 0
        } else {
            rest % self.d == 0
        }
    }

    /// Whether the subgroup is all of `Z^2`.
    pub fn is_full(&self) -> bool {
        matches!(self.row, Some((1, _))) && self.d == 1
    }

    /// `Some((p, q))` if the subgroup equals `pZ × qZ`.
    pub fn closed_form(&self) -> Option<(i64, i64)> {
        let p = self.generators.iter().fold(0, |g, i| gcd(g, i.0));
        let q = self.generators.iter().fold(0, |g, i| gcd(g, i.1));
        (self.contains((p, 0)) && self.contains((0, q))).then_some((p, q))
    }

    pub fn is_closed(&self) -> bool {
        self.closed_form().is_some()
    }
}

/// Whether `gens` generate `F`.
pub fn is_generating(gens: &[TreeDiagram]) -> Result<bool, CoreError> {
    if !AbelianSubgroup::of_diagrams(gens).is_full() {
        return Ok(false);
    }
    Ok(closure_contains_derived(&build_core(gens)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecideError {
    Core(CoreError),
    Automaton(AutomatonError),
}

impl core::error::Error for DecideError {}

impl fmt::Display for DecideError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecideError::Core(e) => write!(f, "{}", e),
            DecideError::Automaton(e) => write!(f, "{}", e),
        }
    }
}

impl From<CoreError> for DecideError {
    fn from(e: CoreError) -> Self {
        DecideError::Core(e)
    }
}

impl From<AutomatonError> for DecideError {
    fn from(e: AutomatonError) -> Self {
        DecideError::Automaton(e)
    }
}

/// The four conditions characterizing maximal subgroups of infinite index
/// among closed subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// The image in the abelianization is all of `Z^2`.
    AbelianImageFull = 1,
    /// The core has no leaves.
    CoreFull = 2,
    /// The core has more than one middle vertex.
    SeveralMiddleVertices = 3,
    /// Every proper quotient of the core other than the core of `F` fails to
    /// be a core-automaton.
    QuotientsRefuted = 4,
}

impl Condition {
    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn describe(self) -> &'static str {
        match self {
            Condition::AbelianImageFull => "abelian image is Z^2",
            Condition::CoreFull => "core has no leaves",
            Condition::SeveralMiddleVertices => "core has more than one middle vertex",
            Condition::QuotientsRefuted => "no proper quotient other than C(F) is a core-automaton",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientStatus {
    /// Isomorphic to the core itself.
    Core,
    /// Isomorphic to the core of `F`.
    CoreOfF,
    Tested(Verdict<(), CoreWitness>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientEntry {
    pub automaton: TreeAutomaton,
    pub status: QuotientStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotMaximalWitness {
    ConditionFailed(Condition),
    /// A core-automaton quotient strictly between the core and `C(F)`.
    Quotient(TreeAutomaton),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Maximality {
    MaximalInfiniteIndex,
    NotMaximal(NotMaximalWitness),
    Unknown,
}

/// Caveat attached to every maximality report.
pub const CLOSURE_CAVEAT: &str = "conditions 2-4 depend only on the core, so the verdict concerns the closure Cl(H); \
     whether H = Cl(H) is not checked";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityReport {
    pub core: TreeAutomaton,
    pub abelian_image_full: bool,
    pub core_full: bool,
    pub middle_vertices: usize,
    /// `None` when the census was skipped or contains undecided quotients.
    pub quotients_refuted: Option<bool>,
    pub census: Vec<QuotientEntry>,
    pub verdict: Maximality,
}

impl MaximalityReport {
    /// `Some(true|false)` per condition, `None` when not decided.
    pub fn condition(&self, c: Condition) -> Option<bool> {
        match c {
            Condition::AbelianImageFull => Some(self.abelian_image_full),
            Condition::CoreFull => Some(self.core_full),
            Condition::SeveralMiddleVertices => Some(self.middle_vertices > 1),
            Condition::QuotientsRefuted => self.quotients_refuted,
        }
    }
}

/// Tests whether the closure of `⟨gens⟩` is a maximal subgroup of infinite index.
///
/// The quotient census only runs when the first three conditions hold.
pub fn maximality_verdict(gens: &[TreeDiagram], budget: usize, cap: usize) -> Result<MaximalityReport, DecideError> {
    let core = build_core(gens)?;
    let mut report = MaximalityReport {
        abelian_image_full: AbelianSubgroup::of_diagrams(gens).is_full(),
        core_full: core.is_full(),
        middle_vertices: middle_vertices(&core).len(),
        quotients_refuted: None,
        census: Vec::new(),
        verdict: Maximality::Unknown,
        core,
    };
    for c in [
        Condition::AbelianImageFull,
        Condition::CoreFull,
        Condition::SeveralMiddleVertices,
    ] {
        if report.condition(c) == Some(false) {
            report.verdict = Maximality::NotMaximal(NotMaximalWitness::ConditionFailed(c));
            return Ok(report);
        }
    }
    let own = report.core.canonical_form();
    let cf = TreeAutomaton::core_of_f().canonical_form();
    let mut counterexample = None;
    let mut undecided = false;
    for q in report.core.enumerate_quotients(cap)? {
        let form = q.canonical_form();
        let status = if form == own {
            QuotientStatus::Core
        } else if form == cf {
            QuotientStatus::CoreOfF
        } else {
            let v = is_core_automaton(&q, budget);
            match v {
                Verdict::Yes(()) if counterexample.is_none() => counterexample = Some(q.clone()),
                Verdict::Unknown { .. } => undecided = true,
                _ => {}
            }
            QuotientStatus::Tested(v)
        };
        report.census.push(QuotientEntry { automaton: q, status });
    }
    report.verdict = if let Some(q) = counterexample {
        report.quotients_refuted = Some(false);
        Maximality::NotMaximal(NotMaximalWitness::Quotient(q))
    } else if undecided {
        Maximality::Unknown
    } else {
        report.quotients_refuted = Some(true);
        Maximality::MaximalInfiniteIndex
    };
    Ok(report)
}
