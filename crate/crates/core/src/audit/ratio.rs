//! Ratio curves log p_A(m) / log p(floor(alpha m)).

use crate::construct::floor_mul;
use crate::count::partition_table;
use crate::error::{Error, Result};
use crate::logdomain::{
    hardy_ramanujan_log, log_count_feasible, log_count_restricted, log_count_restricted_table,
    LogMag, DIRECT_DP_LIMIT,
};
use crate::partset::PartSet;

/// Largest reference index computed exactly by the pentagonal recurrence;
/// beyond it the denominator falls back to the Hardy-Ramanujan estimate and
/// the sample is flagged.
pub const EXACT_REF_LIMIT: u64 = 100_000;

/// One point of a ratio curve.
#[derive(Debug, Clone, Copy)]
pub struct RatioSample {
    pub m: u64,
    /// log p_A(m) from the log engine; the zero sentinel when p_A(m) = 0.
    pub log_p_a: LogMag,
    /// log p(floor(alpha m)), exact for small references, estimated otherwise.
    pub log_p_ref: f64,
    pub ref_estimated: bool,
    /// log p_A(m) / log p(floor(alpha m)); negative infinity marks p_A(m) = 0.
    pub ratio: f64,
}

/// Evaluates the ratio at each sample point. Every sample needs
/// floor(alpha m) >= 2 (so the denominator log p is strictly positive) and
/// must be within the log engine's budget.
pub fn ratio_curve(a: &PartSet, alpha: f64, samples: &[u64]) -> Result<Vec<RatioSample>> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in (0,1], got {alpha}"
        )));
    }
    let mut refs = Vec::with_capacity(samples.len());
    for &m in samples {
        let r = floor_mul_or_id(alpha, m);
        if r < 2 {
            return Err(Error::InvalidParameter(format!(
                "sample m={m}: floor(alpha*m)={r} < 2, the reference count p(..) is not > 1"
            )));
        }
        if !log_count_feasible(a, m) {
            return Err(Error::InvalidParameter(format!(
                "sample m={m} exceeds the log engine budget for this set"
            )));
        }
        refs.push(r);
    }

    // one exact table covers all exact references; one DP table covers all
    // direct-range numerators
    let exact_max = refs.iter().copied().filter(|&r| r <= EXACT_REF_LIMIT).max();
    let ref_table = exact_max.map(partition_table);
    let direct_max = samples
        .iter()
        .copied()
        .filter(|&m| m <= DIRECT_DP_LIMIT)
        .max();
    let num_table = direct_max.map(|n| log_count_restricted_table(a, n));

    let mut out = Vec::with_capacity(samples.len());
    for (&m, &r) in samples.iter().zip(&refs) {
        let log_p_a = if m <= DIRECT_DP_LIMIT {
            num_table.as_ref().expect("table built")[m as usize]
        } else {
            log_count_restricted(a, m)
        };
        let (log_p_ref, ref_estimated) = if r <= EXACT_REF_LIMIT {
            let t = ref_table.as_ref().expect("table built");
            (t[r as usize].ln().value_or_neg_inf(), false)
        } else {
            (hardy_ramanujan_log(r), true)
        };
        let ratio = match log_p_a {
            LogMag::Zero => f64::NEG_INFINITY,
            LogMag::Finite(v) => v / log_p_ref,
        };
        out.push(RatioSample {
            m,
            log_p_a,
            log_p_ref,
            ref_estimated,
            ratio,
        });
    }
    Ok(out)
}

fn floor_mul_or_id(alpha: f64, m: u64) -> u64 {
    if alpha == 1.0 {
        m
    } else {
        floor_mul(alpha, m as u128) as u64
    }
}

/// Geometrically spaced sample points from lo to hi inclusive (deduplicated,
/// ascending), for sampling a gap region.
pub fn geometric_samples(lo: u64, hi: u64, points: usize) -> Vec<u64> {
    assert!(lo >= 1 && lo <= hi && points >= 1);
    if points == 1 || lo == hi {
        return vec![lo];
    }
    let (lf, hf) = (lo as f64, hi as f64);
    let mut out: Vec<u64> = (0..points)
        .map(|j| {
            let t = j as f64 / (points - 1) as f64;
            (lf * (hf / lf).powf(t)).round() as u64
        })
        .collect();
    out.dedup();
    *out.last_mut().expect("nonempty") = hi;
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::count_restricted;

    #[test]
    fn full_set_ratio_is_one() {
        let a = PartSet::range(1, 2000).unwrap();
        let samples = [500u64, 2000];
        let curve = ratio_curve(&a, 1.0, &samples).unwrap();
        for s in &curve {
            assert!(!s.ref_estimated);
            assert!((s.ratio - 1.0).abs() < 1e-6, "m={} ratio={}", s.m, s.ratio);
        }
    }

    #[test]
    fn ones_and_evens_ratio_decreases_toward_one() {
        // {1} ∪ evens has density 1/2; doubling a partition of floor(m/2)
        // injects into it, so the ratio stays >= 1 and drifts down
        let cap = 4000u64;
        let mut blocks = vec![(1u64, 2u64)];
        blocks.extend((2..=cap / 2).map(|i| (2 * i, 2 * i)));
        let a = PartSet::from_intervals(blocks).unwrap();
        let samples = [400u64, 1200, 4000];
        let curve = ratio_curve(&a, 0.5, &samples).unwrap();
        for s in &curve {
            assert!(s.ratio >= 1.0, "m={} ratio={}", s.m, s.ratio);
        }
        assert!(curve[0].ratio > curve[2].ratio);
        assert!(curve[2].ratio < 1.1);
    }

    #[test]
    fn zero_count_marks_sentinel() {
        let a = PartSet::singleton(2).unwrap();
        let curve = ratio_curve(&a, 1.0, &[9]).unwrap();
        assert!(curve[0].log_p_a.is_zero());
        assert_eq!(curve[0].ratio, f64::NEG_INFINITY);
    }

    #[test]
    fn small_reference_rejected() {
        let a = PartSet::range(1, 100).unwrap();
        assert!(ratio_curve(&a, 0.01, &[150]).is_err()); // floor(1.5) < 2
    }

    #[test]
    fn numerator_matches_exact_engine() {
        let a: PartSet = "1-2,9-40".parse().unwrap();
        let curve = ratio_curve(&a, 0.5, &[64]).unwrap();
        let exact = count_restricted(&a, 64).ln().value_or_neg_inf();
        assert!((curve[0].log_p_a.value_or_neg_inf() - exact).abs() < 1e-6 * exact.max(1.0));
    }

    #[test]
    fn geometric_sampling() {
        assert_eq!(
            geometric_samples(2048, 32768, 5),
            vec![2048, 4096, 8192, 16384, 32768]
        );
        assert_eq!(geometric_samples(7, 7, 3), vec![7]);
    }
}
