//! Log-domain magnitudes and the overflow-safe counting engine.
//!
//! p(m) outgrows machine floats near m ≈ 4*10^4, so quantities of the form
//! log p_A(m) are carried as natural-log magnitudes with a distinguished
//! sentinel for an exact zero count. The DP mirrors the exact coin-change
//! engine with log-sum-exp accumulation; the zero sentinel is handled by
//! branching, it never enters the floating-point arithmetic.

use crate::count::Count;
use crate::partset::PartSet;

/// Natural-log magnitude of a nonnegative count.
///
/// `Zero` is the sentinel for a count of exactly 0; it never compares equal
/// to any finite log value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogMag {
    Zero,
    Finite(f64),
}

impl LogMag {
    pub fn finite(v: f64) -> Self {
        debug_assert!(v.is_finite(), "finite log magnitude expected, got {v}");
        LogMag::Finite(v)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, LogMag::Zero)
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            LogMag::Zero => None,
            LogMag::Finite(v) => Some(*v),
        }
    }

    /// Finite value, or negative infinity for the zero sentinel. Handy for
    /// comparisons and report emission; never fed back into accumulation.
    pub fn value_or_neg_inf(&self) -> f64 {
        match self {
            LogMag::Zero => f64::NEG_INFINITY,
            LogMag::Finite(v) => *v,
        }
    }

    /// log(e^a + e^b) with the zero sentinel as the identity element.
    pub fn log_add(self, other: LogMag) -> LogMag {
        match (self, other) {
            (LogMag::Zero, x) | (x, LogMag::Zero) => x,
            (LogMag::Finite(a), LogMag::Finite(b)) => LogMag::Finite(logaddexp(a, b)),
        }
    }

    pub fn exp(&self) -> f64 {
        match self {
            LogMag::Zero => 0.0,
            LogMag::Finite(v) => v.exp(),
        }
    }
}

/// log(e^a + e^b) for finite a, b, stable for widely separated magnitudes.
#[inline]
pub fn logaddexp(a: f64, b: f64) -> f64 {
    if a >= b {
        a + (b - a).exp().ln_1p()
    } else {
        b + (a - b).exp().ln_1p()
    }
}

/// Natural log of an exact count. Counts below 2^53 convert exactly; larger
/// ones use the top 53 bits plus a power-of-two offset, with relative error
/// well under 1e-12.
pub fn ln_count(c: &Count) -> LogMag {
    if c.is_zero() {
        return LogMag::Zero;
    }
    let bits = c.bits();
    if bits <= 53 {
        let v = c.to_u64().expect("fits in u64") as f64;
        LogMag::Finite(v.ln())
    } else {
        let shift = bits - 53;
        let top: u64 = (c.big() >> shift)
            .iter_u64_digits()
            .next()
            .expect("nonzero");
        LogMag::Finite((top as f64).ln() + shift as f64 * std::f64::consts::LN_2)
    }
}

impl Count {
    pub fn ln(&self) -> LogMag {
        ln_count(self)
    }
}

/// Log of the Hardy-Ramanujan estimate for p(n):
/// pi*sqrt(2n/3) - log(4n*sqrt(3)).
pub fn hardy_ramanujan_log(n: u64) -> f64 {
    assert!(n >= 1, "hardy_ramanujan_log requires n >= 1");
    let nf = n as f64;
    std::f64::consts::PI * (2.0 * nf / 3.0).sqrt() - (4.0 * nf * 3.0f64.sqrt()).ln()
}

/// Largest n for which the log engine materializes a full DP table.
pub const DIRECT_DP_LIMIT: u64 = 1 << 24;

/// log p_A(n) with relative error <= 1e-6 against the exact engine wherever
/// both run; returns the zero sentinel iff p_A(n) = 0.
///
/// Dispatch: closed forms for empty and singleton generator sets; a full
/// log-sum-exp DP table for n within [`DIRECT_DP_LIMIT`]; beyond that, sets
/// whose top block [l, h] has 2l > n (each top part usable at most once over
/// an empty/singleton remainder) are evaluated structurally. Anything else at
/// that scale is out of the engine's budget and panics.
pub fn log_count_restricted(a: &PartSet, n: u64) -> LogMag {
    match plan(a, n) {
        EvalPlan::Closed(v) => v,
        EvalPlan::Direct => {
            let t = log_count_restricted_table(a, n);
            table_get(&t, n)
        }
        EvalPlan::TopBlockPeel => peel_eval(a, n),
        EvalPlan::Infeasible => panic!(
            "log_count_restricted: n={n} exceeds the direct DP budget ({DIRECT_DP_LIMIT}) \
             and the set has no top-heavy structure"
        ),
    }
}

/// True when [`log_count_restricted`] can evaluate (A, n) within budget.
pub fn log_count_feasible(a: &PartSet, n: u64) -> bool {
    !matches!(plan(a, n), EvalPlan::Infeasible)
}

enum EvalPlan {
    Closed(LogMag),
    Direct,
    TopBlockPeel,
    Infeasible,
}

fn plan(a: &PartSet, n: u64) -> EvalPlan {
    let s = a.intersect_range(1, n);
    if s.is_empty() {
        return EvalPlan::Closed(if n == 0 { LogMag::Finite(0.0) } else { LogMag::Zero });
    }
    if let Some(g) = s.as_singleton() {
        return EvalPlan::Closed(if n % g == 0 {
            LogMag::Finite(0.0)
        } else {
            LogMag::Zero
        });
    }
    if n <= DIRECT_DP_LIMIT {
        return EvalPlan::Direct;
    }
    let top = *s.intervals().last().expect("nonempty");
    if top.lo > n / 2 {
        let rest = s.intersect_range(1, top.lo - 1);
        if rest.is_empty() || rest.as_singleton().is_some() {
            return EvalPlan::TopBlockPeel;
        }
    }
    EvalPlan::Infeasible
}

/// Log-domain DP table for p_A(0..=n). Entries are `LogMag`; the same
/// prefix-locality argument as the exact engine makes every slot m <= n exact
/// in structure (only within-float-precision error).
pub fn log_count_restricted_table(a: &PartSet, n: u64) -> Vec<LogMag> {
    let n = n as usize;
    let mut dp: Vec<LogMag> = vec![LogMag::Zero; n + 1];
    dp[0] = LogMag::Finite(0.0);
    for g in a.iter_up_to(n as u64) {
        let g = g as usize;
        for m in g..=n {
            let src = dp[m - g];
            if !src.is_zero() {
                dp[m] = dp[m].log_add(src);
            }
        }
    }
    dp
}

fn table_get(t: &[LogMag], n: u64) -> LogMag {
    t[n as usize]
}

/// Structural evaluation for n beyond the DP budget: the top block [l, h] of
/// A ∩ [1, n] has l > n/2, so a partition of n uses at most one part from it.
/// With R = A ∩ [1, l-1],
///     p_A(n) = p_R(n) + sum_{x in [l, min(h,n)]} p_R(n - x),
/// and for R empty or a singleton {g} every p_R value is 0 or 1, so the sum
/// is a plain solution count.
fn peel_eval(a: &PartSet, n: u64) -> LogMag {
    let s = a.intersect_range(1, n);
    let top = *s.intervals().last().expect("nonempty");
    let (lo, hi) = (top.lo, top.hi.min(n));
    debug_assert!(lo > n / 2);
    let rest = s.intersect_range(1, lo - 1);
    let hits: u64 = if rest.is_empty() {
        // only the bare top part can tile n
        u64::from(lo <= n && n <= hi)
    } else {
        let g = rest.as_singleton().expect("plan guarantees singleton rest");
        // x in [lo, hi] with x ≡ n (mod g), plus the all-g partition if g | n
        let residue = n % g;
        let first = if lo % g <= residue {
            lo - lo % g + residue
        } else {
            lo - lo % g + g + residue
        };
        let in_block = if first <= hi { (hi - first) / g + 1 } else { 0 };
        in_block + u64::from(n % g == 0)
    };
    if hits == 0 {
        LogMag::Zero
    } else {
        LogMag::Finite((hits as f64).ln())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{count_restricted, count_restricted_table};

    fn set(spec: &str) -> PartSet {
        spec.parse().unwrap()
    }

    #[test]
    fn ln_count_round_trips_below_2_53() {
        for v in [1u64, 2, 42, 190569292, (1 << 53) - 1] {
            let c = Count::from(v);
            let l = ln_count(&c).value().unwrap();
            let back = l.exp();
            assert!(
                (back - v as f64).abs() <= 1e-12 * v as f64,
                "v={v} back={back}"
            );
        }
        assert!(ln_count(&Count::zero()).is_zero());
    }

    #[test]
    fn ln_count_handles_huge_values() {
        // 2^100: ln = 100 ln 2
        let c = Count::from(1u64 << 50) * &Count::from(1u64 << 50);
        let l = ln_count(&c).value().unwrap();
        assert!((l - 100.0 * std::f64::consts::LN_2).abs() < 1e-9);
    }

    #[test]
    fn zero_sentinel_never_equals_finite() {
        assert_ne!(LogMag::Zero, LogMag::Finite(0.0));
        assert_ne!(LogMag::Zero, LogMag::Finite(f64::MIN));
        assert_eq!(LogMag::Zero.log_add(LogMag::Zero), LogMag::Zero);
        assert_eq!(
            LogMag::Zero.log_add(LogMag::Finite(2.0)),
            LogMag::Finite(2.0)
        );
    }

    #[test]
    fn logaddexp_is_stable() {
        let v = logaddexp(1234.0, 1232.0);
        assert!((v - (1234.0 + (-2.0f64).exp().ln_1p())).abs() < 1e-12);
        let w = logaddexp(0.5, 2.0);
        assert!((w - (0.5f64.exp() + 2.0f64.exp()).ln()).abs() < 1e-12);
    }

    #[test]
    fn log_engine_examples() {
        assert_eq!(log_count_restricted(&set("1"), 1000), LogMag::Finite(0.0));
        let l = log_count_restricted(&set("1,2"), 100).value().unwrap();
        assert!((l - 51f64.ln()).abs() < 1e-9);
        // zero sentinel iff p = 0
        assert!(log_count_restricted(&set("2"), 3).is_zero());
        assert_eq!(log_count_restricted(&PartSet::empty(), 0), LogMag::Finite(0.0));
    }

    #[test]
    fn log_engine_matches_exact_engine() {
        let a = set("1-50");
        let exact = count_restricted(&a, 500).ln().value().unwrap();
        let approx = log_count_restricted(&a, 500).value().unwrap();
        assert!(
            (exact - approx).abs() <= 1e-6 * exact.max(1.0),
            "exact={exact} approx={approx}"
        );
    }

    #[test]
    fn log_table_matches_exact_table() {
        let a = set("1,3,7-9,20");
        let exact = count_restricted_table(&a, 120);
        let approx = log_count_restricted_table(&a, 120);
        for m in 0..=120usize {
            match (&approx[m], exact[m].ln()) {
                (LogMag::Zero, LogMag::Zero) => {}
                (LogMag::Finite(x), LogMag::Finite(y)) => {
                    assert!((x - y).abs() <= 1e-6 * y.max(1.0), "m={m}: {x} vs {y}")
                }
                (got, want) => panic!("m={m}: sentinel mismatch {got:?} vs {want:?}"),
            }
        }
    }

    #[test]
    fn peel_matches_direct_dp_on_small_instances() {
        // same structure the big upper-family checkpoints have
        for (rest, lo, hi, n) in [
            ("3", 50, 80, 90),
            ("3", 50, 80, 79),
            ("7", 61, 120, 120),
            ("", 55, 100, 100),
            ("", 55, 100, 77),
        ] {
            let mut iv = vec![(lo, hi)];
            if !rest.is_empty() {
                let g: u64 = rest.parse().unwrap();
                iv.push((g, g));
            }
            let a = PartSet::from_intervals(iv).unwrap();
            let direct = table_get(&log_count_restricted_table(&a, n), n);
            let peeled = peel_eval(&a, n);
            match (direct, peeled) {
                (LogMag::Zero, LogMag::Zero) => {}
                (LogMag::Finite(x), LogMag::Finite(y)) => {
                    assert!((x - y).abs() < 1e-9, "{rest} [{lo},{hi}] n={n}: {x} vs {y}")
                }
                (d, p) => panic!("{rest} [{lo},{hi}] n={n}: {d:?} vs {p:?}"),
            }
        }
    }

    #[test]
    fn feasibility_dispatch() {
        let big_n = (1u64 << 32) + 64;
        // singleton: closed form at any n
        assert!(log_count_feasible(&set("32"), big_n));
        // top-heavy with singleton rest: peel
        let a = PartSet::from_intervals([(32, 32), (4_160_749_569, 4_294_967_296)]).unwrap();
        assert!(log_count_feasible(&a, 1 << 32));
        // dense set at huge n: out of budget
        assert!(!log_count_feasible(&set("2,3"), big_n));
        assert!(log_count_feasible(&set("2,3"), DIRECT_DP_LIMIT));
    }

    #[test]
    fn hardy_ramanujan_examples() {
        let h6 = hardy_ramanujan_log(6);
        let want = 2.0 * std::f64::consts::PI - (24.0 * 3.0f64.sqrt()).ln();
        assert!((h6 - want).abs() < 1e-12);
        assert!((h6 - 2.5559).abs() < 1e-3);
        let h100 = hardy_ramanujan_log(100);
        assert!((h100 - 19.11).abs() < 0.01);
        // exact log p(100) = ln 190569292 ≈ 19.0659 sits just below the estimate
        let exact = Count::from(190569292u64).ln().value().unwrap();
        assert!(h100 > exact && h100 - exact < 0.1);
    }
}
