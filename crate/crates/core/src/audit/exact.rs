//! Audits decided entirely in exact count arithmetic.

use super::{count_slack, param, BoundReport, LemmaId, Magnitude, SweepSummary};
use crate::count::{
    binomial, count_exact_parts, count_parts_leq, count_restricted, count_restricted_table,
    exact_parts_table, factorial, stars_and_bars, Count,
};
use crate::partset::PartSet;

/// p_A(n) <= (n+1)^|A|: each element appears at most n times.
pub fn audit_trivial_bound(a: &PartSet, n: u64) -> BoundReport {
    let k = a.size();
    let lhs = count_restricted(a, n);
    // (n+1)^k is materialized exactly; desk-scale k keeps this cheap
    let rhs = Count::from(n + 1).pow(k as u32);
    let pass = lhs <= rhs;
    BoundReport {
        lemma_id: LemmaId::TrivialBound,
        params: vec![param("set", a), param("n", n), param("k", k)],
        slack: count_slack(&rhs, &lhs),
        lhs: Magnitude::Exact(lhs),
        rhs: Magnitude::Exact(rhs),
        preconditions_met: true,
        pass,
        trivial: false,
        marginal: false,
    }
}

/// C(n-1, k-1) <= k! * p_k(n) <= C(n + C(k,2) - 1, k-1).
pub fn audit_pk_sandwich(n: u64, k: u64) -> BoundReport {
    audit_pk_sandwich_mid(n, k, &(factorial(k) * &count_exact_parts(n, k)))
}

fn audit_pk_sandwich_mid(n: u64, k: u64, mid: &Count) -> BoundReport {
    let preconditions_met = n >= 1 && k >= 1;
    let lower = binomial(n.saturating_sub(1), k.saturating_sub(1));
    let upper = binomial(
        (n + k.saturating_sub(1) * k / 2).saturating_sub(1),
        k.saturating_sub(1),
    );
    let pass = preconditions_met && &lower <= mid && mid <= &upper;
    let slack = count_slack(&upper, mid).min(count_slack(mid, &lower));
    BoundReport {
        lemma_id: LemmaId::PkSandwich,
        params: vec![
            param("n", n),
            param("k", k),
            param("lower_log", lower.ln().value_or_neg_inf()),
        ],
        lhs: Magnitude::Exact(mid.clone()),
        rhs: Magnitude::Exact(upper),
        slack,
        preconditions_met,
        pass,
        trivial: false,
        marginal: false,
    }
}

/// Exhaustive sandwich check over 1 <= n <= n_max, 1 <= k <= k_max.
pub fn sweep_pk_sandwich(n_max: u64, k_max: u64) -> SweepSummary {
    let table = exact_parts_table(n_max, k_max);
    let mut summary = SweepSummary::new(LemmaId::PkSandwich);
    for k in 1..=k_max {
        let kfac = factorial(k);
        for n in 1..=n_max {
            let mid = &kfac * &table[k as usize][n as usize];
            summary.record(audit_pk_sandwich_mid(n, k, &mid));
        }
    }
    summary
}

/// p_[k](n) = p_k(n+k): strip one from each part of a k-part partition.
pub fn audit_shift_identity(n: u64, k: u64) -> BoundReport {
    let lhs = count_parts_leq(k, n);
    let rhs = count_exact_parts(n + k, k);
    audit_shift_identity_values(n, k, lhs, rhs)
}

fn audit_shift_identity_values(n: u64, k: u64, lhs: Count, rhs: Count) -> BoundReport {
    let pass = lhs == rhs;
    BoundReport {
        lemma_id: LemmaId::ShiftIdentity,
        params: vec![param("n", n), param("k", k)],
        slack: count_slack(&rhs, &lhs),
        lhs: Magnitude::Exact(lhs),
        rhs: Magnitude::Exact(rhs),
        preconditions_met: k >= 1,
        pass,
        trivial: false,
        marginal: false,
    }
}

/// Exhaustive shift-identity check over 0 <= n <= n_max, 1 <= k <= k_max.
pub fn sweep_shift_identity(n_max: u64, k_max: u64) -> SweepSummary {
    let parts = exact_parts_table(n_max + k_max, k_max);
    let mut summary = SweepSummary::new(LemmaId::ShiftIdentity);
    for k in 1..=k_max {
        let leq = count_restricted_table(&PartSet::range(1, k).unwrap(), n_max);
        for n in 0..=n_max {
            summary.record(audit_shift_identity_values(
                n,
                k,
                leq[n as usize].clone(),
                parts[k as usize][(n + k) as usize].clone(),
            ));
        }
    }
    summary
}

/// p_A(n) <= p_[k](n) for |A| = k: relabeling the i-th smallest element of A
/// to i and padding with ones only gains partitions.
pub fn audit_first_is_best(a: &PartSet, n: u64) -> BoundReport {
    let k = a.size() as u64;
    let lhs = count_restricted(a, n);
    let rhs = if k == 0 {
        // [0] is the empty set: only the empty partition
        if n == 0 {
            Count::one()
        } else {
            Count::zero()
        }
    } else {
        count_parts_leq(k, n)
    };
    let pass = lhs <= rhs;
    BoundReport {
        lemma_id: LemmaId::FirstIsBest,
        params: vec![param("set", a), param("n", n), param("k", k)],
        slack: count_slack(&rhs, &lhs),
        lhs: Magnitude::Exact(lhs),
        rhs: Magnitude::Exact(rhs),
        preconditions_met: true,
        pass,
        trivial: false,
        marginal: false,
    }
}

/// Solutions of x_0 + ... + x_span = s inject into partitions of m over
/// {1} ∪ [n, n+span] (take n+k exactly x_k times, pad with ones), so
/// p_{{1} ∪ [n, n+span]}(m) >= C(s + span, span). Needs s*(n+span) <= m so
/// the image fits, and n >= 2 so the ones are distinguishable.
pub fn stars_bars_injection_bound(n: u64, span: u64, s: u64, m: u64) -> BoundReport {
    let preconditions_met = n >= 2 && s.checked_mul(n + span).map_or(false, |v| v <= m);
    let set = PartSet::from_intervals([(1, 1), (n, n + span)]).expect("valid blocks");
    let lhs = count_restricted(&set, m);
    let rhs = stars_and_bars(s, span + 1);
    let pass = preconditions_met && lhs >= rhs;
    BoundReport {
        lemma_id: LemmaId::StarsBarsInjection,
        params: vec![param("n", n), param("span", span), param("s", s), param("m", m)],
        slack: count_slack(&lhs, &rhs),
        lhs: Magnitude::Exact(lhs),
        rhs: Magnitude::Exact(rhs),
        preconditions_met,
        pass,
        trivial: false,
        marginal: false,
    }
}

/// Exhaustive injection check: n in [2, n_max], span in [0, span_max],
/// m in [0, m_max], every s with s*(n+span) <= m.
pub fn sweep_stars_bars_injection(n_max: u64, span_max: u64, m_max: u64) -> SweepSummary {
    let mut summary = SweepSummary::new(LemmaId::StarsBarsInjection);
    for n in 2..=n_max {
        for span in 0..=span_max {
            let set = PartSet::from_intervals([(1, 1), (n, n + span)]).expect("valid blocks");
            let table = count_restricted_table(&set, m_max);
            for m in 0..=m_max {
                let mut s = 0;
                while s * (n + span) <= m {
                    let lhs = table[m as usize].clone();
                    let rhs = stars_and_bars(s, span + 1);
                    let pass = lhs >= rhs;
                    summary.record(BoundReport {
                        lemma_id: LemmaId::StarsBarsInjection,
                        params: vec![
                            param("n", n),
                            param("span", span),
                            param("s", s),
                            param("m", m),
                        ],
                        slack: count_slack(&lhs, &rhs),
                        lhs: Magnitude::Exact(lhs),
                        rhs: Magnitude::Exact(rhs),
                        preconditions_met: true,
                        pass,
                        trivial: false,
                        marginal: false,
                    });
                    s += 1;
                }
            }
        }
    }
    summary
}

/// p_{[l, n]}(n) >= p_k(n - k*l): add l to each part of a k-part partition.
pub fn shift_bijection_bound(l: u64, k: u64, n: u64) -> BoundReport {
    let preconditions_met = l >= 1 && k >= 1;
    let lhs = if l > n {
        if n == 0 {
            Count::one()
        } else {
            Count::zero()
        }
    } else {
        count_restricted(&PartSet::range(l, n).expect("l <= n"), n)
    };
    let rhs = match n.checked_sub(k * l) {
        Some(rest) => count_exact_parts(rest, k),
        None => Count::zero(),
    };
    let pass = preconditions_met && lhs >= rhs;
    BoundReport {
        lemma_id: LemmaId::ShiftBijection,
        params: vec![param("l", l), param("k", k), param("n", n)],
        slack: count_slack(&lhs, &rhs),
        lhs: Magnitude::Exact(lhs),
        rhs: Magnitude::Exact(rhs),
        preconditions_met,
        pass,
        trivial: false,
        marginal: false,
    }
}

/// Exhaustive bijection check over l in [1, l_max], k in [1, k_max],
/// n in [0, n_max]. One DP table per l serves every n.
pub fn sweep_shift_bijection(l_max: u64, k_max: u64, n_max: u64) -> SweepSummary {
    let parts = exact_parts_table(n_max, k_max);
    let mut summary = SweepSummary::new(LemmaId::ShiftBijection);
    for l in 1..=l_max {
        let table = count_restricted_table(&PartSet::range(l, n_max.max(l)).unwrap(), n_max);
        for k in 1..=k_max {
            for n in 0..=n_max {
                let lhs = table[n as usize].clone();
                let rhs = match n.checked_sub(k * l) {
                    Some(rest) => parts[k as usize][rest as usize].clone(),
                    None => Count::zero(),
                };
                let pass = lhs >= rhs;
                summary.record(BoundReport {
                    lemma_id: LemmaId::ShiftBijection,
                    params: vec![param("l", l), param("k", k), param("n", n)],
                    slack: count_slack(&lhs, &rhs),
                    lhs: Magnitude::Exact(lhs),
                    rhs: Magnitude::Exact(rhs),
                    preconditions_met: true,
                    pass,
                    trivial: false,
                    marginal: false,
                });
            }
        }
    }
    summary
}

/// Budget guard for the pigeonhole window DP.
const PIGEONHOLE_DP_BUDGET: u64 = 5_000_000;

/// Pigeonhole count spreading: with A ⊆ [1,m], a = |A|, A1/A2 the smallest
/// and largest floor(a/2) elements, the C(a-1, floor(a/2))^2 half-and-half
/// multiset choices all land in the window [ceil(a^2/4), a*m - ceil(a^2/4)],
/// so some n in the window has p_A(n) >= ceil(C^2 / windowsize).
/// Reports the smallest maximizing n and the asymptotic reference exponent
/// (2 log 2) * sqrt(beta*n / (1 - beta/4)).
pub fn audit_pigeonhole(a: &PartSet, m: u64) -> BoundReport {
    let size = a.size() as u64;
    let within = a.max().map_or(true, |x| x <= m);
    let half = size / 2;
    let lo = (size * size).div_ceil(4);
    let hi = size * m - lo;
    let feasible = within && half >= 1 && hi <= PIGEONHOLE_DP_BUDGET && lo <= hi;
    if !feasible {
        return BoundReport {
            lemma_id: LemmaId::Pigeonhole,
            params: vec![param("set", a), param("m", m), param("size", size)],
            lhs: Magnitude::Exact(Count::zero()),
            rhs: Magnitude::Exact(Count::zero()),
            slack: f64::NAN,
            preconditions_met: false,
            pass: false,
            trivial: false,
            marginal: false,
        };
    }
    let window = hi - lo + 1;
    let choices = binomial(size - 1, half);
    let required = (&choices * &choices).div_ceil(&Count::from(window));
    let table = count_restricted_table(a, hi);
    let (mut best, mut argmax) = (Count::zero(), lo);
    for n in lo..=hi {
        let v = &table[n as usize];
        if *v > best {
            best = v.clone();
            argmax = n;
        }
    }
    let beta = size as f64 / m as f64;
    let asymptotic =
        2.0 * std::f64::consts::LN_2 * (beta * argmax as f64 / (1.0 - beta / 4.0)).sqrt();
    let pass = best >= required;
    BoundReport {
        lemma_id: LemmaId::Pigeonhole,
        params: vec![
            param("set", a),
            param("m", m),
            param("size", size),
            param("window_lo", lo),
            param("window_hi", hi),
            param("argmax_n", argmax),
            param("asymptotic_rhs", asymptotic),
        ],
        slack: count_slack(&best, &required),
        lhs: Magnitude::Exact(best),
        rhs: Magnitude::Exact(required),
        preconditions_met: true,
        pass,
        trivial: false,
        marginal: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audit::Verdict;

    fn set(spec: &str) -> PartSet {
        spec.parse().unwrap()
    }

    #[test]
    fn trivial_bound_examples() {
        let r = audit_trivial_bound(&set("1,2"), 4);
        assert!(r.pass);
        assert_eq!(r.lhs, Magnitude::Exact(Count::from(3u64)));
        assert_eq!(r.rhs, Magnitude::Exact(Count::from(25u64)));
        assert!(audit_trivial_bound(&PartSet::empty(), 5).pass); // 0 <= 1
        assert!(audit_trivial_bound(&set("1-30"), 30).pass); // p(30) <= 31^30
    }

    #[test]
    fn sandwich_examples() {
        let r = audit_pk_sandwich(4, 2);
        assert!(r.pass);
        assert_eq!(r.lhs, Magnitude::Exact(Count::from(4u64))); // 2! * p_2(4)
        assert_eq!(r.rhs, Magnitude::Exact(Count::from(4u64))); // C(4,1)
        assert!(audit_pk_sandwich(1, 1).pass); // 1 <= 1 <= 1
        let sweep = sweep_pk_sandwich(30, 8);
        assert!(sweep.pass(), "failures={}", sweep.failures);
    }

    #[test]
    fn shift_identity_examples() {
        assert!(audit_shift_identity(2, 2).pass);
        assert!(audit_shift_identity(9, 1).pass);
        let sweep = sweep_shift_identity(30, 8);
        assert!(sweep.pass());
        assert_eq!(sweep.cases, 31 * 8);
    }

    #[test]
    fn first_is_best_examples() {
        let r = audit_first_is_best(&set("3,5"), 8);
        assert!(r.pass);
        assert_eq!(r.lhs, Magnitude::Exact(Count::one()));
        assert_eq!(r.rhs, Magnitude::Exact(Count::from(5u64)));
        // A = [1,k] gives equality
        let r = audit_first_is_best(&set("1-4"), 11);
        assert_eq!(r.lhs, r.rhs);
        assert!(r.pass);
        assert!(audit_first_is_best(&PartSet::empty(), 0).pass);
    }

    #[test]
    fn stars_bars_injection_examples() {
        let r = stars_bars_injection_bound(3, 2, 2, 10);
        assert!(r.pass);
        assert_eq!(r.rhs, Magnitude::Exact(Count::from(6u64))); // C(4,2)
        assert_eq!(r.lhs, Magnitude::Exact(Count::from(12u64)));
        // s = 0: p >= 1 via the all-ones partition
        assert!(stars_bars_injection_bound(5, 3, 0, 7).pass);
        // violated budget: report only
        let r = stars_bars_injection_bound(3, 2, 4, 10);
        assert_eq!(r.verdict(), Verdict::NoVerdict);
    }

    #[test]
    fn shift_bijection_examples() {
        let r = shift_bijection_bound(3, 2, 10);
        assert!(r.pass);
        assert_eq!(r.lhs, Magnitude::Exact(Count::from(5u64)));
        assert_eq!(r.rhs, Magnitude::Exact(Count::from(2u64)));
        // k*l = n leaves nothing to partition into k >= 1 positive parts
        let r = shift_bijection_bound(5, 2, 10);
        assert_eq!(r.rhs, Magnitude::Exact(Count::zero()));
        assert!(r.pass);
        // n < k*l: rhs clamps to zero
        assert!(shift_bijection_bound(9, 3, 10).pass);
    }

    #[test]
    fn pigeonhole_examples() {
        let r = audit_pigeonhole(&set("1,2,7,8"), 8);
        assert!(r.pass, "{r}");
        assert_eq!(r.rhs, Magnitude::Exact(Count::one())); // ceil(9/25)
        // beta = 1: A = [1, m]
        let r = audit_pigeonhole(&set("1-20"), 20);
        assert!(r.pass, "{r}");
        // degenerate |A| = 2
        let r = audit_pigeonhole(&set("3,9"), 10);
        assert!(r.pass, "{r}");
        assert_eq!(r.rhs, Magnitude::Exact(Count::one()));
        // |A| = 1 cannot split
        let r = audit_pigeonhole(&set("3"), 10);
        assert_eq!(r.verdict(), Verdict::NoVerdict);
    }
}
