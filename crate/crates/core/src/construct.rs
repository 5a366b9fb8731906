//! The two extremal set families, their density profiles, and the m-range
//! where the liminf lower bound applies.
//!
//! Lower family: f(0)=1, f(1)=n0, f(i+1)=f(i)^2, blocks [f(i-1), floor(alpha*f(i))].
//! Upper family: f(0)=ceil(1/beta), f(i+1)=2^f(i), blocks [floor((1-beta)*f(i))+1, f(i)].
//!
//! Growth is lazy: f values are only produced while they stay at or below the
//! materialization cap, so the doubly-exponential upper family never builds a
//! huge integer.

use crate::error::{Error, Result};
use crate::partset::PartSet;

/// floor(alpha * x), exact: alpha is decomposed into its IEEE mantissa and
/// exponent so the product is computed in integers. Requires 0 < alpha < 1
/// (normal) and x < 2^75 or so; callers stay far below that.
pub(crate) fn floor_mul(alpha: f64, x: u128) -> u128 {
    let (mant, shift) = decompose(alpha);
    let prod = mant as u128 * x;
    if shift >= 128 {
        0
    } else {
        prod >> shift
    }
}

/// floor(alpha * x) for u64 inputs; the reference index floor(alpha m)
/// recurs throughout the experiments.
pub fn floor_scaled(alpha: f64, x: u64) -> u64 {
    floor_mul(alpha, x as u128) as u64
}

/// alpha = mant * 2^-shift exactly, for normal positive alpha < 1.
fn decompose(alpha: f64) -> (u64, u32) {
    assert!(
        alpha > 0.0 && alpha < 1.0 && alpha.is_normal(),
        "expected a normal real in (0,1), got {alpha}"
    );
    let bits = alpha.to_bits();
    let mant = (bits & ((1u64 << 52) - 1)) | (1u64 << 52);
    let biased = (bits >> 52) & 0x7ff;
    let shift = 1023 + 52 - biased as i64;
    (mant, shift as u32)
}

/// Parameters of the liminf (lower-density) construction.
#[derive(Debug, Clone, Copy)]
pub struct LowerFamilyParams {
    pub alpha: f64,
    pub n0: u64,
    pub cap: u64,
}

impl LowerFamilyParams {
    pub fn new(alpha: f64, n0: u64, cap: u64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) || !alpha.is_normal() {
            return Err(Error::InvalidParameter(format!(
                "alpha must lie in (0,1), got {alpha}"
            )));
        }
        if (n0 as f64) * alpha <= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "n0={n0} must exceed 1/alpha={}",
                1.0 / alpha
            )));
        }
        if cap == 0 {
            return Err(Error::InvalidParameter("cap must be >= 1".into()));
        }
        Ok(Self { alpha, n0, cap })
    }

    /// Default starting point max(ceil(2/alpha), 16): satisfies n0 > 1/alpha
    /// with margin and makes the first block non-degenerate.
    pub fn with_default_n0(alpha: f64, cap: u64) -> Result<Self> {
        let n0 = ((2.0 / alpha).ceil() as u64).max(16);
        Self::new(alpha, n0, cap)
    }
}

/// Parameters of the limsup (upper-density) construction.
/// The starting point is derived: n0 = ceil(1/beta).
#[derive(Debug, Clone, Copy)]
pub struct UpperFamilyParams {
    pub beta: f64,
    pub cap: u64,
}

impl UpperFamilyParams {
    pub fn new(beta: f64, cap: u64) -> Result<Self> {
        if !(beta > 0.0 && beta < 1.0) || !beta.is_normal() {
            return Err(Error::InvalidParameter(format!(
                "beta must lie in (0,1), got {beta}"
            )));
        }
        let n0 = (1.0 / beta).ceil() as u64;
        if cap < n0 {
            return Err(Error::InvalidParameter(format!(
                "cap={cap} must be at least n0=ceil(1/beta)={n0}"
            )));
        }
        Ok(Self { beta, cap })
    }

    pub fn n0(&self) -> u64 {
        (1.0 / self.beta).ceil() as u64
    }
}

/// The f(i) values of the lower family that fit under the cap:
/// 1, n0, n0^2, n0^4, ...
pub fn lower_growth(p: &LowerFamilyParams) -> Vec<u64> {
    let mut out = vec![1u64];
    if p.n0 > p.cap {
        return out;
    }
    out.push(p.n0);
    loop {
        let last = *out.last().unwrap() as u128;
        let next = last * last;
        if next > p.cap as u128 {
            break;
        }
        out.push(next as u64);
    }
    out
}

/// Materializes the lower set: union over i >= 1 of [f(i-1), floor(alpha*f(i))],
/// intersected with [1, cap].
pub fn build_lower_set(p: &LowerFamilyParams) -> PartSet {
    let mut blocks = Vec::new();
    let mut f_prev: u128 = 1; // f(0)
    let mut f: u128 = p.n0 as u128; // f(1)
    while f_prev <= p.cap as u128 {
        let end = floor_mul(p.alpha, f).min(p.cap as u128);
        if f_prev <= end {
            blocks.push((f_prev as u64, end as u64));
        }
        f_prev = f;
        f = f * f;
    }
    PartSet::from_intervals(blocks).expect("block endpoints are valid")
}

/// The f(i) values of the upper family that fit under the cap:
/// ceil(1/beta), 2^ceil(1/beta), ...
pub fn upper_growth(p: &UpperFamilyParams) -> Vec<u64> {
    let mut out = vec![p.n0()];
    loop {
        let last = *out.last().unwrap();
        if last >= 64 {
            break; // 2^last overflows u64 and certainly exceeds any cap
        }
        let next = 1u64 << last;
        if next > p.cap {
            break;
        }
        out.push(next);
    }
    out
}

/// Materializes the upper set: union over i >= 0 of
/// [floor((1-beta)*f(i)) + 1, f(i)], intersected with [1, cap]. A block whose
/// top f(i) exceeds the cap still contributes its truncated prefix; once a
/// block starts beyond the cap, all later ones do too and generation stops.
pub fn build_upper_set(p: &UpperFamilyParams) -> PartSet {
    let mut blocks = Vec::new();
    let mut f = p.n0();
    loop {
        let lo = floor_mul(1.0 - p.beta, f as u128) as u64 + 1;
        if lo > p.cap {
            break;
        }
        blocks.push((lo, f.min(p.cap)));
        if f >= 64 {
            break; // 2^f overflows u64; its block floor certainly passes the cap
        }
        f = 1u64 << f;
    }
    PartSet::from_intervals(blocks).expect("block endpoints are valid")
}

/// One density sample: exact prefix count at n and the quotient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensitySample {
    pub n: u64,
    pub prefix_count: u64,
    pub density: f64,
}

/// Exact prefix counts of A at the given checkpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityProfile {
    pub samples: Vec<DensitySample>,
}

/// Samples |A ∩ [1,n]| / n at each checkpoint. `cap` is the bound A was
/// materialized under; checkpoints beyond it would silently undercount and
/// are rejected.
pub fn density_profile(a: &PartSet, checkpoints: &[u64], cap: u64) -> Result<DensityProfile> {
    let mut samples = Vec::with_capacity(checkpoints.len());
    for &n in checkpoints {
        if n == 0 {
            return Err(Error::InvalidParameter("checkpoint must be >= 1".into()));
        }
        if n > cap {
            return Err(Error::CheckpointBeyondCap {
                checkpoint: n,
                cap,
            });
        }
        let prefix_count = a.prefix_count(n);
        samples.push(DensitySample {
            n,
            prefix_count,
            density: prefix_count as f64 / n as f64,
        });
    }
    Ok(DensityProfile { samples })
}

/// The m-range where the liminf lower-bound inequality applies with n = f(i):
/// [ceil(16*alpha*f(i+1)), floor(alpha*f(i+2)/16)]. Empty when lo > hi.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapRegion {
    pub lo: u64,
    pub hi: u64,
}

impl GapRegion {
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}

/// Gap region for family index i >= 1 (so that n = f(i) >= n0). Needs f(i+2)
/// = f(i)^4 to be representable; far larger indices are out of any budget.
pub fn gap_region(p: &LowerFamilyParams, i: usize) -> Result<GapRegion> {
    if i == 0 {
        return Err(Error::InvalidParameter(
            "gap region needs i >= 1 (f(0) = 1 is below every threshold)".into(),
        ));
    }
    let mut f: u128 = p.n0 as u128; // f(1)
    for _ in 1..i {
        f = f.checked_mul(f).ok_or_else(|| {
            Error::InvalidParameter(format!("f({i}) overflows the materialization budget"))
        })?;
    }
    let f1 = f.checked_mul(f); // f(i+1)
    let f2 = f1.and_then(|v| v.checked_mul(v)); // f(i+2)
    let (f1, f2) = match (f1, f2) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "f({}) overflows the materialization budget",
                i + 2
            )))
        }
    };
    let (lo, hi) = gap_endpoints(p.alpha, f1 as f64, f2 as f64);
    let clamp = |v: u128| v.min(u64::MAX as u128) as u64;
    Ok(GapRegion {
        lo: clamp(lo),
        hi: clamp(hi),
    })
}

/// Raw endpoints [ceil(16*alpha*n^2), floor(alpha*n^4/16)] for arbitrary n,
/// used by the liminf lower-bound audit to test membership directly.
pub fn liminf_gap_bounds(alpha: f64, n: u64) -> (u128, u128) {
    let nf = n as f64;
    gap_endpoints(alpha, nf * nf, nf * nf * nf * nf)
}

/// Integer gap endpoints with a 1e-9 relative admission guard, so that a
/// decimal alpha like 0.01 (whose IEEE value sits a hair above 1/100) does
/// not push an intended boundary point out of the region.
fn gap_endpoints(alpha: f64, f1: f64, f2: f64) -> (u128, u128) {
    const ADMIT: f64 = 1e-9;
    let lo = (16.0 * alpha * f1 * (1.0 - ADMIT)).ceil().max(0.0);
    let hi = (alpha * f2 / 16.0 * (1.0 + ADMIT)).floor().max(0.0);
    (lo as u128, hi as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_floor_mul() {
        assert_eq!(floor_mul(0.5, 5), 2);
        assert_eq!(floor_mul(0.5, 4), 2);
        assert_eq!(floor_mul(0.1, 20), 2); // 0.1 is slightly above 1/10 in IEEE
        // (1 - 1/32) * 2^32 = 31 * 2^27 exactly
        assert_eq!(floor_mul(1.0 - 1.0 / 32.0, 1u128 << 32), 31 << 27);
        assert_eq!(floor_mul(1.0 / 16.0, 65536), 4096);
    }

    #[test]
    fn lower_family_spec_cases() {
        // f = (1, 4, 16): blocks [1,2], [4,8]
        let p = LowerFamilyParams::new(0.5, 4, 8).unwrap();
        let a = build_lower_set(&p);
        assert_eq!(a.to_string(), "1-2,4-8");
        // every generated block start is a member (f(0)=1 sits in A_1)
        for f in lower_growth(&p) {
            assert!(a.contains(f), "f={f}");
        }

        let p = LowerFamilyParams::new(0.1, 20, 19).unwrap();
        assert_eq!(build_lower_set(&p).to_string(), "1-2");
    }

    #[test]
    fn lower_family_rejects_bad_params() {
        assert!(LowerFamilyParams::new(0.1, 10, 100).is_err()); // n0 <= 1/alpha
        assert!(LowerFamilyParams::new(0.5, 4, 0).is_err()); // no range at all
        assert!(LowerFamilyParams::new(1.5, 4, 8).is_err());
        // a cap below n0 is fine: only the first block materializes
        assert!(LowerFamilyParams::new(0.1, 20, 19).is_ok());
        assert!(LowerFamilyParams::with_default_n0(1.0 / 32.0, 1 << 20)
            .map(|p| p.n0)
            .unwrap() == 64);
    }

    #[test]
    fn upper_family_spec_cases() {
        // f = (2, 4, 16): blocks [2,2], [3,4], [9,16] (== {2,3,4} ∪ [9,16])
        let p = UpperFamilyParams::new(0.5, 20).unwrap();
        let a = build_upper_set(&p);
        assert_eq!(a.to_string(), "2-4,9-16");
        assert!(a.contains(2) && a.contains(3)); // consecutive => gcd 1

        let p = UpperFamilyParams::new(0.5, 3).unwrap();
        assert_eq!(build_upper_set(&p).to_string(), "2-3");

        assert_eq!(upper_growth(&UpperFamilyParams::new(0.5, 100_000).unwrap()),
            vec![2, 4, 16, 65536]);
    }

    #[test]
    fn density_profile_spec_cases() {
        let full = PartSet::range(1, 10).unwrap();
        let d = density_profile(&full, &[10], 10).unwrap();
        assert_eq!(d.samples[0].density, 1.0);

        let p = LowerFamilyParams::new(0.5, 4, 100).unwrap();
        let a = build_lower_set(&p);
        let d = density_profile(&a, &[4], 100).unwrap();
        assert_eq!(d.samples[0].prefix_count, 3); // {1, 2, 4}
        assert!((d.samples[0].density - 0.75).abs() < 1e-15);

        let p = UpperFamilyParams::new(0.5, 100).unwrap();
        let a = build_upper_set(&p);
        let d = density_profile(&a, &[16], 100).unwrap();
        assert_eq!(d.samples[0].prefix_count, 11); // {2,3,4} ∪ [9,16]

        assert!(density_profile(&a, &[101], 100).is_err());
        assert!(density_profile(&a, &[0], 100).is_err());
    }

    #[test]
    fn gap_region_formula() {
        // alpha=1/16, n0=32: i=1 has n=f(1)=32, f(2)=1024, f(3)=1048576
        let p = LowerFamilyParams::new(1.0 / 16.0, 32, 1 << 20).unwrap();
        let g = gap_region(&p, 1).unwrap();
        assert_eq!((g.lo, g.hi), (1024, 4096));
        assert!(!g.is_empty());

        // endpoints scale as n^2 and n^4
        let (lo, hi) = liminf_gap_bounds(1.0 / 16.0, 16);
        assert_eq!((lo, hi), (256, 256));
        let (lo4, hi4) = liminf_gap_bounds(1.0 / 16.0, 32);
        assert_eq!(lo4, 4 * lo);
        assert_eq!(hi4, 16 * hi);

        // tiny n: empty region
        let (lo, hi) = liminf_gap_bounds(0.5, 2);
        assert!(lo > hi);
        assert_eq!(lo, 32);
    }

    #[test]
    fn lower_density_approaches_alpha_at_growth_points() {
        let alpha = 1.0 / 16.0;
        let p = LowerFamilyParams::new(alpha, 32, 1_000_000).unwrap();
        let a = build_lower_set(&p);
        let growth = lower_growth(&p);
        for i in 1..growth.len() {
            let d = density_profile(&a, &[growth[i]], p.cap).unwrap().samples[0];
            let bound = 2.0 / growth[i - 1] as f64;
            assert!(
                (d.density - alpha).abs() <= bound,
                "i={i} density={} alpha={alpha} bound={bound}",
                d.density
            );
        }
        // block ends approach density 1: upper density of the family is 1
        // (observational; the construction's stated guarantee is the liminf).
        let end = floor_mul(alpha, (growth[2] as u128) * (growth[2] as u128)) as u64;
        let d = density_profile(&a, &[end], p.cap).unwrap().samples[0];
        assert!(d.density > 0.9, "density at block end = {}", d.density);
    }

    #[test]
    fn upper_density_approaches_beta_at_growth_points() {
        let beta = 0.5;
        let p = UpperFamilyParams::new(beta, 100_000).unwrap();
        let a = build_upper_set(&p);
        for f in upper_growth(&p) {
            let d = density_profile(&a, &[f], p.cap).unwrap().samples[0];
            let bound = 2.0 * (f as f64).log2() / f as f64;
            assert!(
                (d.density - beta).abs() <= bound,
                "f={f} density={} bound={bound}",
                d.density
            );
        }
        // density at the left edge of the next block's gap tends to 0-ish:
        // just below a block start the prefix is still the old blocks.
        let d = density_profile(&a, &[32768], p.cap).unwrap().samples[0];
        assert!(d.density < 0.001, "density just before top block = {}", d.density);
    }
}
