//! Numerical audits of the lemma-level bounds and identities.
//!
//! Each audit evaluates one inequality (or identity) at concrete parameters,
//! tracks whether the proof-side preconditions hold there, and emits a
//! [`BoundReport`]. Audits whose decision compares two exact counts work in
//! `Count` arithmetic only; comparisons of a count against a real-valued
//! bound happen in log domain with a small guard band in the bound's favor
//! (a pass inside the band is flagged `marginal`).

mod asymptotic;
mod exact;
mod ratio;
mod scalars;

pub use asymptotic::{
    audit_dixmier_nicolas_upper, audit_interval_upper, audit_liminf_lower_main,
    audit_liminf_upper_main, audit_szekeres, sweep_interval_upper, DEFAULT_LOGLOG_COEFF,
};
pub use exact::{
    audit_first_is_best, audit_pigeonhole, audit_pk_sandwich, audit_shift_identity,
    audit_trivial_bound, shift_bijection_bound, stars_bars_injection_bound,
    sweep_pk_sandwich, sweep_shift_bijection, sweep_shift_identity, sweep_stars_bars_injection,
};
pub use ratio::{geometric_samples, ratio_curve, RatioSample, EXACT_REF_LIMIT};
pub use scalars::{
    audit_fbeta_peak, binary_entropy, entropy_binomial_bound, f_beta, g_a,
    sweep_entropy_binomial, uniform_grid,
};

use std::fmt;

use crate::count::Count;
use crate::logdomain::LogMag;

/// Absolute guard band, in log units, granted to the bound side of a
/// count-vs-real comparison to absorb float noise.
pub const GUARD_BAND: f64 = 1e-9;

/// Configured floors standing in for the paper-side thresholds n1(alpha),
/// n2(gamma), n3(lambda), alpha0 and lambda0, which are never given
/// numerically; the audits additionally check the proofs' explicit
/// sufficient conditions at the chosen parameters. Defaults are non-binding.
#[derive(Debug, Clone, Copy)]
pub struct Thresholds {
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
    pub alpha0: f64,
    pub lambda0: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            n1: 1,
            n2: 1,
            n3: 1,
            alpha0: 1.0,
            lambda0: 1.0,
        }
    }
}

/// Which lemma-level statement an audit exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaId {
    TrivialBound,
    PkSandwich,
    ShiftIdentity,
    FirstIsBest,
    StarsBarsInjection,
    LiminfLowerMain,
    Szekeres,
    ShiftBijection,
    DixmierNicolasUpper,
    LiminfUpperMain,
    Pigeonhole,
    IntervalUpper,
    EntropyBinomial,
    FbetaPeak,
}

impl LemmaId {
    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::TrivialBound => "trivial-bound",
            LemmaId::PkSandwich => "pk-sandwich",
            LemmaId::ShiftIdentity => "shift-identity",
            LemmaId::FirstIsBest => "first-is-best",
            LemmaId::StarsBarsInjection => "stars-bars-injection",
            LemmaId::LiminfLowerMain => "liminf-lower",
            LemmaId::Szekeres => "szekeres",
            LemmaId::ShiftBijection => "shift-bijection",
            LemmaId::DixmierNicolasUpper => "dixmier-nicolas",
            LemmaId::LiminfUpperMain => "liminf-upper",
            LemmaId::Pigeonhole => "pigeonhole",
            LemmaId::IntervalUpper => "interval-upper",
            LemmaId::EntropyBinomial => "entropy-binomial",
            LemmaId::FbetaPeak => "fbeta-peak",
        }
    }

    pub const ALL: [LemmaId; 14] = [
        LemmaId::TrivialBound,
        LemmaId::PkSandwich,
        LemmaId::ShiftIdentity,
        LemmaId::FirstIsBest,
        LemmaId::StarsBarsInjection,
        LemmaId::LiminfLowerMain,
        LemmaId::Szekeres,
        LemmaId::ShiftBijection,
        LemmaId::DixmierNicolasUpper,
        LemmaId::LiminfUpperMain,
        LemmaId::Pigeonhole,
        LemmaId::IntervalUpper,
        LemmaId::EntropyBinomial,
        LemmaId::FbetaPeak,
    ];
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for LemmaId {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .iter()
            .copied()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| crate::error::Error::InvalidParameter(format!("unknown lemma `{s}`")))
    }
}

/// A side of an audited inequality: an exact count or a log-domain value.
#[derive(Debug, Clone, PartialEq)]
pub enum Magnitude {
    Exact(Count),
    Log(LogMag),
}

impl Magnitude {
    /// Natural-log view; negative infinity for a zero count.
    pub fn log_value(&self) -> f64 {
        match self {
            Magnitude::Exact(c) => c.ln().value_or_neg_inf(),
            Magnitude::Log(l) => l.value_or_neg_inf(),
        }
    }
}

/// Outcome of one lemma audit at concrete parameters.
///
/// `slack` is oriented so that a nonnegative value means the audited relation
/// holds, in natural-log units (for two-sided audits it is the smaller of the
/// two margins). `pass` implies `preconditions_met`; a report with
/// `preconditions_met == false` carries no verdict.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub lemma_id: LemmaId,
    pub params: Vec<(String, String)>,
    pub lhs: Magnitude,
    pub rhs: Magnitude,
    pub slack: f64,
    pub preconditions_met: bool,
    pub pass: bool,
    /// The relation holds for structural reasons (e.g. a nonpositive bound).
    pub trivial: bool,
    /// Passed only within the guard band.
    pub marginal: bool,
}

impl BoundReport {
    pub fn verdict(&self) -> Verdict {
        if !self.preconditions_met {
            Verdict::NoVerdict
        } else if self.pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn params_string(&self) -> String {
        let mut s = String::new();
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                s.push(';');
            }
            s.push_str(k);
            s.push('=');
            s.push_str(v);
        }
        s
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.verdict() {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NoVerdict => "SKIP",
        };
        write!(
            f,
            "[{tag}] {} {} lhs_log={:.6} rhs_log={:.6} slack={:.6}",
            self.lemma_id,
            self.params_string(),
            self.lhs.log_value(),
            self.rhs.log_value(),
            self.slack
        )?;
        if self.trivial {
            write!(f, " [trivial]")?;
        }
        if self.marginal {
            write!(f, " [marginal]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NoVerdict,
}

/// Aggregate of a parameter sweep: counts, the binding (smallest slack)
/// report, and the first failure if any.
#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub lemma_id: LemmaId,
    pub cases: u64,
    pub failures: u64,
    pub skipped: u64,
    pub binding: Option<BoundReport>,
    pub first_failure: Option<BoundReport>,
}

impl SweepSummary {
    pub fn new(lemma_id: LemmaId) -> Self {
        SweepSummary {
            lemma_id,
            cases: 0,
            failures: 0,
            skipped: 0,
            binding: None,
            first_failure: None,
        }
    }

    pub fn record(&mut self, report: BoundReport) {
        if !report.preconditions_met {
            self.skipped += 1;
            return;
        }
        self.cases += 1;
        if !report.pass && self.first_failure.is_none() {
            self.first_failure = Some(report.clone());
        }
        if !report.pass {
            self.failures += 1;
        }
        let tighter = match &self.binding {
            None => true,
            Some(b) => report.slack < b.slack,
        };
        if tighter {
            self.binding = Some(report);
        }
    }

    /// All evaluated cases passed (and at least one case ran).
    pub fn pass(&self) -> bool {
        self.cases > 0 && self.failures == 0
    }
}

/// Guarded `lhs <= rhs` in log domain: passes up to `GUARD_BAND` past the
/// bound; `marginal` when the decision fell inside the band.
pub(crate) fn guarded_le(lhs_log: f64, rhs_log: f64) -> (bool, bool) {
    let pass = lhs_log <= rhs_log + GUARD_BAND;
    let marginal = pass && lhs_log > rhs_log - GUARD_BAND;
    (pass, marginal)
}

/// Oriented slack `ln(hi) - ln(lo)` for exact counts, with zero counts mapped
/// to the conventional values (0 slack when both sides vanish).
pub(crate) fn count_slack(hi: &Count, lo: &Count) -> f64 {
    match (hi.is_zero(), lo.is_zero()) {
        (true, true) => 0.0,
        (false, true) => f64::INFINITY,
        (true, false) => f64::NEG_INFINITY,
        (false, false) => hi.ln().value_or_neg_inf() - lo.ln().value_or_neg_inf(),
    }
}

pub(crate) fn param(k: &str, v: impl fmt::Display) -> (String, String) {
    (k.to_string(), v.to_string())
}
