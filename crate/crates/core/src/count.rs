//! Exact partition counting.
//!
//! - [`count_partitions`]: unrestricted p(n) via Euler's pentagonal recurrence,
//!   O(n^1.5) big-integer additions.
//! - [`count_restricted`]: p_A(n) by unbounded coin-change DP over A ∩ [1,n],
//!   one pass per generator.
//! - [`count_exact_parts`]: p_k(n), partitions into exactly k positive parts.
//! - [`count_parts_leq`]: p_[k](n), all parts <= k (= at most k parts).
//! - [`brute_force_count`]: exponential-time recursive enumeration, kept as an
//!   independent test oracle.
//!
//! Everything is exact: counts are arbitrary-precision nonnegative integers.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partset::PartSet;

/// Exact nonnegative partition count. Arithmetic never overflows or rounds.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn one() -> Self {
        Count(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn big(&self) -> &BigUint {
        &self.0
    }

    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Ceiling division by a nonzero count.
    pub fn div_ceil(&self, d: &Count) -> Count {
        assert!(!d.is_zero(), "division by zero count");
        Count((&self.0 + &d.0 - BigUint::one()) / &d.0)
    }

    pub fn pow(&self, exp: u32) -> Count {
        Count(self.0.pow(exp))
    }

    /// Number of decimal digits.
    pub fn decimal_digits(&self) -> u64 {
        if self.0.is_zero() {
            return 1;
        }
        self.0.to_str_radix(10).len() as u64
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Add<&Count> for Count {
    type Output = Count;
    fn add(self, rhs: &Count) -> Count {
        Count(self.0 + &rhs.0)
    }
}

impl AddAssign<&Count> for Count {
    fn add_assign(&mut self, rhs: &Count) {
        self.0 += &rhs.0;
    }
}

impl Mul<&Count> for Count {
    type Output = Count;
    fn mul(self, rhs: &Count) -> Count {
        Count(self.0 * &rhs.0)
    }
}

impl Mul<&Count> for &Count {
    type Output = Count;
    fn mul(self, rhs: &Count) -> Count {
        Count(&self.0 * &rhs.0)
    }
}

/// Exact p(n). p(0) = 1.
pub fn count_partitions(n: u64) -> Count {
    partition_table(n).pop().expect("table is never empty")
}

/// Table of p(0), p(1), ..., p(n) via the pentagonal recurrence
///   p(i) = sum_{k>=1} (-1)^{k+1} [ p(i - k(3k-1)/2) + p(i - k(3k+1)/2) ].
///
/// Positive and negative contributions are accumulated separately so the
/// whole computation stays in nonnegative integers.
pub fn partition_table(n: u64) -> Vec<Count> {
    let n = n as usize;
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for i in 1..=n {
        let mut pos = BigUint::zero();
        let mut neg = BigUint::zero();
        let mut k: usize = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let acc = if k % 2 == 1 { &mut pos } else { &mut neg };
            *acc += &table[i - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                *acc += &table[i - g2];
            }
            k += 1;
        }
        // p(i) >= 0, so pos >= neg here.
        table.push(pos - neg);
    }
    table.into_iter().map(Count).collect()
}

/// Exact p_A(n). p_A(0) = 1 for every A (the empty partition), and the result
/// depends only on A ∩ [1, n].
pub fn count_restricted(a: &PartSet, n: u64) -> Count {
    count_restricted_table(a, n).pop().expect("nonempty table")
}

/// Table of p_A(0..=n). Unbounded coin-change DP: after processing all
/// generators g <= n, slot m holds p_A(m) exactly for every m <= n (parts
/// larger than m cannot occur in a partition of m).
pub fn count_restricted_table(a: &PartSet, n: u64) -> Vec<Count> {
    let n = n as usize;
    let mut dp: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    dp[0] = BigUint::one();
    for g in a.iter_up_to(n as u64) {
        let g = g as usize;
        for m in g..=n {
            let (lo, hi) = dp.split_at_mut(m);
            hi[0] += &lo[m - g];
        }
    }
    dp.into_iter().map(Count).collect()
}

/// Exact p_k(n): partitions of n into exactly k positive parts.
/// p_0(0) = 1 and p_k(n) = 0 whenever n < k.
pub fn count_exact_parts(n: u64, k: u64) -> Count {
    let table = exact_parts_table(n, k);
    table[k as usize][n as usize].clone()
}

/// Table `t[k][n]` of p_k(n) for k <= k_max, n <= n_max, via
///   p_k(n) = p_{k-1}(n-1) + p_k(n-k)
/// (smallest part is 1, or subtract 1 from every part).
pub fn exact_parts_table(n_max: u64, k_max: u64) -> Vec<Vec<Count>> {
    let (n_max, k_max) = (n_max as usize, k_max as usize);
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(k_max + 1);
    let mut row0 = vec![BigUint::zero(); n_max + 1];
    row0[0] = BigUint::one();
    rows.push(row0);
    for k in 1..=k_max {
        let mut row = vec![BigUint::zero(); n_max + 1];
        for n in 1..=n_max {
            let mut v = rows[k - 1][n - 1].clone();
            if n >= k {
                let prev = row[n - k].clone();
                v += prev;
            }
            row[n] = v;
        }
        rows.push(row);
    }
    rows.into_iter()
        .map(|r| r.into_iter().map(Count).collect())
        .collect()
}

/// Exact p_[k](n) = p_{[1,k]}(n): partitions with all parts <= k, which also
/// counts partitions of n into at most k parts.
pub fn count_parts_leq(k: u64, n: u64) -> Count {
    assert!(k >= 1, "count_parts_leq requires k >= 1");
    let a = PartSet::range(1, k).expect("valid range");
    count_restricted(&a, n)
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1); // exact at every step
    }
    Count(acc)
}

/// Exact n!.
pub fn factorial(n: u64) -> Count {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    Count(acc)
}

/// Number of solutions in nonnegative integers of x_1 + ... + x_vars = s,
/// i.e. C(s + vars - 1, vars - 1).
pub fn stars_and_bars(s: u64, vars: u64) -> Count {
    assert!(vars >= 1, "stars_and_bars requires at least one variable");
    binomial(s + vars - 1, vars - 1)
}

/// Default cap for the brute-force oracle.
pub const DEFAULT_ORACLE_CAP: u64 = 60;

/// Exhaustive recursive enumeration of p_A(n); exponential time, used as an
/// independent oracle for the DP engines. Rejects n above `DEFAULT_ORACLE_CAP`.
pub fn brute_force_count(a: &PartSet, n: u64) -> Result<Count> {
    brute_force_count_capped(a, n, DEFAULT_ORACLE_CAP)
}

/// As [`brute_force_count`] with an explicit cap.
pub fn brute_force_count_capped(a: &PartSet, n: u64, cap: u64) -> Result<Count> {
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    let elems: Vec<u64> = a.iter_up_to(n).collect();
    fn rec(elems: &[u64], rem: u64) -> u64 {
        if rem == 0 {
            return 1;
        }
        match elems.split_last() {
            None => 0,
            Some((&e, rest)) => {
                let with = if e <= rem { rec(elems, rem - e) } else { 0 };
                with + rec(rest, rem)
            }
        }
    }
    Ok(Count::from(rec(&elems, n)))
}

impl Count {
    /// Renders the count exactly in decimal when it has at most `digit_limit`
    /// digits, otherwise in log form `~e^<log>` (the `~` marks the estimate).
    pub fn display_capped(&self, digit_limit: u64) -> String {
        // bits * log10(2) slightly underestimates the digit count; only
        // materialize the decimal string when it can plausibly fit.
        let approx_digits = (self.bits() as f64) * std::f64::consts::LOG10_2;
        if approx_digits <= digit_limit as f64 + 2.0 {
            let s = self.0.to_str_radix(10);
            if s.len() as u64 <= digit_limit {
                return s;
            }
        }
        match crate::logdomain::ln_count(self) {
            crate::logdomain::LogMag::Zero => "0".to_string(),
            crate::logdomain::LogMag::Finite(v) => format!("~e^{v:.6}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(spec: &str) -> PartSet {
        spec.parse().unwrap()
    }

    #[test]
    fn oracle_hand_checked_cases() {
        // 7 = 7*1 = 3+4*1 = 3+3+1
        assert_eq!(
            brute_force_count(&set("1,3"), 7).unwrap(),
            Count::from(3u64)
        );
        assert_eq!(
            brute_force_count(&set("1-7"), 7).unwrap(),
            Count::from(15u64)
        );
        assert_eq!(brute_force_count(&set("5"), 4).unwrap(), Count::zero());
        assert_eq!(brute_force_count(&set(""), 0).unwrap(), Count::one());
        assert_eq!(brute_force_count(&set(""), 3).unwrap(), Count::zero());
        assert!(matches!(
            brute_force_count(&set("1"), 61),
            Err(Error::OracleCap { .. })
        ));
    }

    #[test]
    fn unrestricted_counts_match_oracle() {
        assert_eq!(count_partitions(0), Count::one());
        assert_eq!(count_partitions(4), Count::from(5u64));
        assert_eq!(count_partitions(10), Count::from(42u64));
        for n in 0..=30u64 {
            let full = PartSet::range(1, n.max(1)).unwrap();
            assert_eq!(
                count_partitions(n),
                brute_force_count(&full, n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(count_restricted(&set("1,2"), 4), Count::from(3u64));
        assert_eq!(count_restricted(&set("2"), 3), Count::zero());
        assert_eq!(count_restricted(&PartSet::empty(), 0), Count::one());
        // depends only on A ∩ [1,n]
        assert_eq!(
            count_restricted(&set("1,2,40-90"), 4),
            count_restricted(&set("1,2"), 4)
        );
    }

    #[test]
    fn exact_parts_examples() {
        // 4 = 3+1 = 2+2
        assert_eq!(count_exact_parts(4, 2), Count::from(2u64));
        for n in 1..=20u64 {
            assert_eq!(count_exact_parts(n, 1), Count::one());
        }
        assert_eq!(count_exact_parts(3, 5), Count::zero());
        assert_eq!(count_exact_parts(0, 0), Count::one());
        assert_eq!(count_exact_parts(5, 0), Count::zero());
    }

    #[test]
    fn parts_leq_examples() {
        assert_eq!(count_parts_leq(2, 4), Count::from(3u64));
        assert_eq!(count_parts_leq(1, 7), Count::one());
        // p_[k](n) = p_k(n+k)
        assert_eq!(count_parts_leq(2, 4), count_exact_parts(6, 2));
    }

    #[test]
    fn binomials_and_stars_bars() {
        assert_eq!(binomial(10, 5), Count::from(252u64));
        assert_eq!(binomial(5, 7), Count::zero());
        assert_eq!(binomial(0, 0), Count::one());
        assert_eq!(stars_and_bars(4, 2), Count::from(5u64));
        assert_eq!(stars_and_bars(0, 7), Count::one());
        assert_eq!(stars_and_bars(5, 3), Count::from(21u64));
        assert_eq!(factorial(0), Count::one());
        assert_eq!(factorial(5), Count::from(120u64));
    }

    #[test]
    fn display_capped_switches_to_log_form() {
        let p = count_partitions(100);
        assert_eq!(p.display_capped(10_000), "190569292");
        let s = p.display_capped(5);
        assert!(s.starts_with("~e^19.06"), "{s}");
    }

    #[test]
    fn div_ceil_rounds_up() {
        let c = Count::from(9u64);
        assert_eq!(c.div_ceil(&Count::from(25u64)), Count::one());
        assert_eq!(c.div_ceil(&Count::from(3u64)), Count::from(3u64));
        assert_eq!(c.div_ceil(&Count::from(4u64)), Count::from(3u64));
    }
}
