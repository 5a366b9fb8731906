//! The verification suite behind `partlab verify-all` and the acceptance
//! test target: one function per criterion, each deterministic given its
//! fixed seeds and parameters.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use partlab_core::audit::{
    audit_dixmier_nicolas_upper, audit_fbeta_peak, audit_pigeonhole, audit_szekeres,
    geometric_samples, ratio_curve, sweep_entropy_binomial, sweep_interval_upper,
    sweep_pk_sandwich, sweep_shift_bijection, sweep_shift_identity, uniform_grid, Thresholds,
};
use partlab_core::construct::{
    build_lower_set, build_upper_set, density_profile, gap_region, lower_growth, upper_growth,
    LowerFamilyParams, UpperFamilyParams,
};
use partlab_core::count::{
    brute_force_count, count_restricted, count_restricted_table, partition_table, Count,
};
use partlab_core::PartSet;

use crate::csvout::{real, Csv};

/// Regression locks, frozen from the first audited run of this suite with
/// the seeds and parameters fixed in this file. NaN means not yet locked.
mod locks {
    /// log p(1000) / (pi sqrt(2000/3)).
    pub const HR_RATIO_1K: f64 = f64::NAN;
    /// log p(10000) / (pi sqrt(20000/3)).
    pub const HR_RATIO_10K: f64 = f64::NAN;
    /// Smallest lower-family gap-region ratio, minus 5%.
    pub const LOWER_RATIO_FLOOR: f64 = f64::NAN;
    /// Largest upper-family checkpoint ratio, plus 5%.
    pub const UPPER_RATIO_CEIL: f64 = f64::NAN;
}

fn lock_ok(observed: f64, lock: f64) -> bool {
    // NaN = not yet locked (first derivation run)
    lock.is_nan() || (observed - lock).abs() <= 1e-9
}

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

type CriterionFn = fn() -> (bool, String);

const CRITERIA: &[(u32, &'static str, CriterionFn)] = &[
    (1, "oracle-equivalence", c1_oracle_equivalence),
    (2, "identity-suite", c2_identity_suite),
    (3, "hardy-ramanujan-consistency", c3_hardy_ramanujan),
    (4, "szekeres-explicit-constants", c4_szekeres),
    (5, "dixmier-nicolas-upper", c5_dixmier_nicolas),
    (6, "entropy-interval-suite", c6_entropy_interval),
    (7, "pigeonhole-exact", c7_pigeonhole),
    (8, "construction-densities", c8_densities),
    (9, "ratio-separation", c9_ratio_separation),
];

fn within(start: Instant, budget: Duration) -> bool {
    start.elapsed() <= budget
}

fn c1_oracle_equivalence() -> (bool, String) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0001);
    let mut cases = 0u64;
    let mut mismatches = 0u64;
    for _ in 0..500 {
        let elems: Vec<u64> = (1..=20).filter(|_| rng.gen_bool(0.5)).collect();
        let a = PartSet::from_elements(elems).expect("valid elements");
        let n = rng.gen_range(0..=25u64);
        cases += 1;
        if count_restricted(&a, n) != brute_force_count(&a, n).expect("below cap") {
            mismatches += 1;
        }
    }
    for k in 1..=10u64 {
        let a = PartSet::range(1, k).expect("valid");
        for n in 0..=25u64 {
            cases += 1;
            if count_restricted(&a, n) != brute_force_count(&a, n).expect("below cap") {
                mismatches += 1;
            }
        }
    }
    let in_budget = within(start, Duration::from_secs(60));
    (
        mismatches == 0 && in_budget,
        format!("cases={cases};mismatches={mismatches};in_budget={in_budget}"),
    )
}

fn c2_identity_suite() -> (bool, String) {
    let shift = sweep_shift_identity(60, 12);
    let sandwich = sweep_pk_sandwich(60, 12);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0002);
    let mut conv_failures = 0u64;
    for _ in 0..100 {
        let elems: Vec<u64> = (1..=50).filter(|_| rng.gen_bool(0.4)).collect();
        let a = PartSet::from_elements(elems).expect("valid elements");
        let t = rng.gen_range(0..=50u64);
        let m = rng.gen_range(0..=200u64) as usize;
        let full = count_restricted(&a, m as u64);
        let t1 = count_restricted_table(&a.intersect_range(1, t), m as u64);
        let t2 = count_restricted_table(&a.intersect_range(t + 1, m.max(1) as u64), m as u64);
        let mut sum = Count::zero();
        for k in 0..=m {
            sum += &(&t1[k] * &t2[m - k]);
        }
        if sum != full {
            conv_failures += 1;
        }
    }
    let pass = shift.pass() && sandwich.pass() && conv_failures == 0;
    (
        pass,
        format!(
            "shift_cases={};shift_failures={};sandwich_cases={};sandwich_failures={};conv_cases=100;conv_failures={conv_failures}",
            shift.cases, shift.failures, sandwich.cases, sandwich.failures
        ),
    )
}

fn hr_ratio(table: &[Count], n: usize) -> f64 {
    let exact = table[n].ln().value_or_neg_inf();
    exact / (std::f64::consts::PI * (2.0 * n as f64 / 3.0).sqrt())
}

fn c3_hardy_ramanujan() -> (bool, String) {
    let start = Instant::now();
    let table = partition_table(10_000);
    let r1k = hr_ratio(&table, 1000);
    let r10k = hr_ratio(&table, 10_000);
    let band = (0.94..=1.0).contains(&r10k);
    let increasing = r1k < r10k;
    let locked = lock_ok(r1k, locks::HR_RATIO_1K) && lock_ok(r10k, locks::HR_RATIO_10K);
    let in_budget = within(start, Duration::from_secs(30));
    (
        band && increasing && locked && in_budget,
        format!(
            "r1000={};r10000={};band={band};increasing={increasing};locked={locked};in_budget={in_budget}",
            real(r1k),
            real(r10k)
        ),
    )
}

fn c4_szekeres() -> (bool, String) {
    let start = Instant::now();
    let t = Thresholds::default();
    let a = audit_szekeres(0.9, 1000, &t);
    let b = audit_szekeres(0.5, 4000, &t);
    let pass = a.preconditions_met && a.pass && b.preconditions_met && b.pass;
    let in_budget = within(start, Duration::from_secs(60));
    (
        pass && in_budget,
        format!(
            "case1_slack={};case2_slack={};in_budget={in_budget}",
            real(a.slack),
            real(b.slack)
        ),
    )
}

fn c5_dixmier_nicolas() -> (bool, String) {
    let t = Thresholds::default();
    let a = audit_dixmier_nicolas_upper(2.0, 400, &t);
    let b = audit_dixmier_nicolas_upper(4.0, 2500, &t);
    let sweep = sweep_shift_bijection(10, 6, 120);
    let pass = a.preconditions_met && a.pass && b.preconditions_met && b.pass && sweep.pass();
    (
        pass,
        format!(
            "dn_slack_400={};dn_slack_2500={};bijection_cases={};bijection_failures={}",
            real(a.slack),
            real(b.slack),
            sweep.cases,
            sweep.failures
        ),
    )
}

fn c6_entropy_interval() -> (bool, String) {
    let entropy = sweep_entropy_binomial(500);
    let interval = sweep_interval_upper(&[0.25, 0.5, 0.75], 300, 2000);
    let grid = uniform_grid(0.002, 1.2);
    let mut fbeta_failures = 0u64;
    for i in 1..=9u32 {
        let r = audit_fbeta_peak(i as f64 / 10.0, &grid);
        if !(r.preconditions_met && r.pass) {
            fbeta_failures += 1;
        }
    }
    let pass = entropy.pass() && interval.pass() && fbeta_failures == 0;
    (
        pass,
        format!(
            "entropy_cases={};entropy_failures={};interval_cases={};interval_failures={};fbeta_failures={fbeta_failures}",
            entropy.cases, entropy.failures, interval.cases, interval.failures
        ),
    )
}

fn c7_pigeonhole() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0007);
    let mut failures = 0u64;
    for _ in 0..50 {
        let (a, m) = loop {
            let m = rng.gen_range(4..=60u64);
            let elems: Vec<u64> = (1..=m).filter(|_| rng.gen_bool(0.5)).collect();
            if elems.len() >= 2 {
                break (PartSet::from_elements(elems).expect("valid"), m);
            }
        };
        let r = audit_pigeonhole(&a, m);
        if !(r.preconditions_met && r.pass) {
            failures += 1;
        }
    }
    (failures == 0, format!("cases=50;failures={failures}"))
}

fn c8_densities() -> (bool, String) {
    let alpha = 1.0 / 16.0;
    let p = LowerFamilyParams::new(alpha, 32, 1_000_000).expect("valid params");
    let a = build_lower_set(&p);
    let growth = lower_growth(&p);
    let mut worst_lower = 0.0f64;
    let mut lower_ok = true;
    for i in 1..growth.len() {
        let d = density_profile(&a, &[growth[i]], p.cap).expect("within cap").samples[0];
        let bound = 2.0 / growth[i - 1] as f64;
        let dev = (d.density - alpha).abs();
        worst_lower = worst_lower.max(dev / bound);
        lower_ok &= dev <= bound;
    }

    let beta = 0.5;
    let q = UpperFamilyParams::new(beta, 100_000).expect("valid params");
    let b = build_upper_set(&q);
    let mut worst_upper = 0.0f64;
    let mut upper_ok = true;
    for f in upper_growth(&q) {
        let d = density_profile(&b, &[f], q.cap).expect("within cap").samples[0];
        let bound = 2.0 * (f as f64).log2() / f as f64;
        let dev = (d.density - beta).abs();
        worst_upper = worst_upper.max(dev / bound);
        upper_ok &= dev <= bound;
    }
    (
        lower_ok && upper_ok,
        format!(
            "lower_checkpoints={};lower_worst_frac={};upper_checkpoints={};upper_worst_frac={}",
            growth.len() - 1,
            real(worst_lower),
            upper_growth(&q).len(),
            real(worst_upper)
        ),
    )
}

fn c9_ratio_separation() -> (bool, String) {
    let start = Instant::now();
    let alpha = 1.0 / 32.0;
    let p = LowerFamilyParams::with_default_n0(alpha, 1 << 20).expect("valid params");
    let gap = gap_region(&p, 1).expect("representable");
    let a = build_lower_set(&p);
    let samples = geometric_samples(gap.lo, gap.hi, 5);
    let lower_curve = ratio_curve(&a, alpha, &samples).expect("feasible samples");
    let lower_min = lower_curve
        .iter()
        .map(|s| s.ratio)
        .fold(f64::INFINITY, f64::min);
    let lower_ok = lower_curve.iter().all(|s| s.ratio > 1.0)
        && lock_ok_floor(lower_min, locks::LOWER_RATIO_FLOOR);

    let beta = 1.0 / 32.0;
    let q = UpperFamilyParams::new(beta, 1 << 32).expect("valid params");
    let b = build_upper_set(&q);
    let checkpoints: Vec<u64> = upper_growth(&q)
        .into_iter()
        .filter(|&f| partlab_core::construct::floor_scaled(beta, f) >= 2)
        .collect();
    let upper_curve = ratio_curve(&b, beta, &checkpoints).expect("feasible checkpoints");
    let upper_max = upper_curve
        .iter()
        .map(|s| s.ratio)
        .fold(f64::NEG_INFINITY, f64::max);
    let upper_ok = !upper_curve.is_empty()
        && upper_curve.iter().all(|s| s.ratio < 1.0)
        && lock_ok_ceil(upper_max, locks::UPPER_RATIO_CEIL);

    let in_budget = within(start, Duration::from_secs(600));
    (
        lower_ok && upper_ok && in_budget,
        format!(
            "gap_lo={};gap_hi={};lower_samples={};lower_min_ratio={};upper_checkpoints={};upper_max_ratio={};in_budget={in_budget}",
            gap.lo,
            gap.hi,
            lower_curve.len(),
            real(lower_min),
            upper_curve.len(),
            real(upper_max)
        ),
    )
}

fn lock_ok_floor(observed: f64, floor: f64) -> bool {
    floor.is_nan() || observed >= floor
}

fn lock_ok_ceil(observed: f64, ceil: f64) -> bool {
    ceil.is_nan() || observed <= ceil
}

/// Runs criteria 1-9, optionally sharded across worker threads. Outcomes are
/// sorted by criterion id, so verdicts and emission order are independent of
/// the parallelism degree.
pub fn run_criteria(threads: usize) -> Vec<CriterionOutcome> {
    let threads = threads.max(1).min(CRITERIA.len());
    let run_one = |&(id, name, f): &(u32, &'static str, CriterionFn)| {
        let (pass, detail) = f();
        CriterionOutcome {
            id,
            name,
            pass,
            detail,
        }
    };
    let mut outcomes: Vec<CriterionOutcome> = if threads == 1 {
        CRITERIA.iter().map(run_one).collect()
    } else {
        let chunk = CRITERIA.len().div_ceil(threads);
        std::thread::scope(|scope| {
            let handles: Vec<_> = CRITERIA
                .chunks(chunk)
                .map(|part| scope.spawn(move || part.iter().map(run_one).collect::<Vec<_>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("criterion worker panicked"))
                .collect()
        })
    };
    outcomes.sort_by_key(|o| o.id);
    outcomes
}

pub fn criteria_csv(outcomes: &[CriterionOutcome]) -> String {
    let mut csv = Csv::new(&["criterion", "name", "pass", "detail"]);
    for o in outcomes {
        csv.row(vec![
            o.id.to_string(),
            o.name.to_string(),
            o.pass.to_string(),
            o.detail.replace(',', ";"),
        ]);
    }
    csv.render()
}

/// Full verify-all: criteria 1-9 evaluated twice; criterion 10 asserts the
/// two CSV renderings are byte-identical (determinism of the whole pipeline,
/// including the seeded randomized suites).
pub fn run_verify_all(threads: usize) -> (Vec<CriterionOutcome>, String) {
    let first = run_criteria(threads);
    let second = run_criteria(threads);
    let csv1 = criteria_csv(&first);
    let csv2 = criteria_csv(&second);
    let identical = csv1 == csv2;
    let mut outcomes = first;
    outcomes.push(CriterionOutcome {
        id: 10,
        name: "determinism",
        pass: identical,
        detail: format!("double_run_identical={identical}"),
    });
    let csv = criteria_csv(&outcomes);
    (outcomes, csv)
}
