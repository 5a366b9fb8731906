//! The scalar functions of the entropy argument and their grid-level facts.

use num_bigint::BigUint;
use num_traits::One;

use super::{count_slack, guarded_le, param, BoundReport, LemmaId, Magnitude, SweepSummary};
use crate::count::{binomial, Count};
use crate::logdomain::LogMag;

/// Binary entropy H2(x) = -x log2(x) - (1-x) log2(1-x), with H2(0) = H2(1) = 0
/// by continuity. Panics outside [0, 1].
pub fn binary_entropy(x: f64) -> f64 {
    assert!((0.0..=1.0).contains(&x), "binary_entropy domain is [0,1], got {x}");
    if x == 0.0 || x == 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// f_beta(gamma) = H2(gamma / (gamma + beta(1-beta))) * (gamma/(1-beta) + beta) / sqrt(gamma).
pub fn f_beta(beta: f64, gamma: f64) -> f64 {
    assert!(beta > 0.0 && beta < 1.0, "beta must lie in (0,1), got {beta}");
    assert!(gamma > 0.0, "gamma must be positive, got {gamma}");
    let h = binary_entropy(gamma / (gamma + beta * (1.0 - beta)));
    h * (gamma / (1.0 - beta) + beta) / gamma.sqrt()
}

/// g_a(x) = a log2(a/(a+x)) - x log2(x/(a+x)); g_a(a) = 0, positive on (0,a),
/// negative on (a, inf).
pub fn g_a(a: f64, x: f64) -> f64 {
    assert!(a > 0.0 && x > 0.0, "g_a needs a > 0 and x > 0");
    a * (a / (a + x)).log2() - x * (x / (a + x)).log2()
}

/// C(n, k) <= 2^(H2(k/n) n), decided exactly:
/// C(n,k) * k^k * (n-k)^(n-k) <= n^n in integers (0^0 = 1).
pub fn entropy_binomial_bound(n: u64, k: u64) -> BoundReport {
    entropy_binomial_with(n, k, &binomial(n, k), &int_pow(k), &int_pow(n - k), &int_pow(n))
}

fn int_pow(v: u64) -> BigUint {
    // v^v with 0^0 = 1
    if v == 0 {
        BigUint::one()
    } else {
        BigUint::from(v).pow(v as u32)
    }
}

fn entropy_binomial_with(
    n: u64,
    k: u64,
    binom: &Count,
    kk: &BigUint,
    nkk: &BigUint,
    nn: &BigUint,
) -> BoundReport {
    let preconditions_met = n >= 1 && k <= n;
    let lhs_scaled = Count::from(binom.big() * kk * nkk);
    let rhs_scaled = Count::from(nn.clone());
    let pass = preconditions_met && lhs_scaled <= rhs_scaled;
    let rhs_log = binary_entropy(k as f64 / n as f64) * n as f64 * std::f64::consts::LN_2;
    BoundReport {
        lemma_id: LemmaId::EntropyBinomial,
        params: vec![param("n", n), param("k", k), param("rhs_log", rhs_log)],
        slack: count_slack(&rhs_scaled, &lhs_scaled),
        lhs: Magnitude::Exact(binom.clone()),
        rhs: Magnitude::Log(LogMag::finite(rhs_log)),
        preconditions_met,
        pass,
        trivial: false,
        marginal: false,
    }
}

/// Exhaustive entropy bound check for 1 <= n <= n_max, 0 <= k <= n.
pub fn sweep_entropy_binomial(n_max: u64) -> SweepSummary {
    let pows: Vec<BigUint> = (0..=n_max).map(int_pow).collect();
    let mut summary = SweepSummary::new(LemmaId::EntropyBinomial);
    let mut row: Vec<BigUint> = vec![BigUint::one()]; // Pascal row n = 0
    for n in 1..=n_max {
        let mut next = vec![BigUint::one(); n as usize + 1];
        for k in 1..n as usize {
            next[k] = &row[k - 1] + &row[k];
        }
        row = next;
        for k in 0..=n {
            summary.record(entropy_binomial_with(
                n,
                k,
                &Count::from(row[k as usize].clone()),
                &pows[k as usize],
                &pows[(n - k) as usize],
                &pows[n as usize],
            ));
        }
    }
    summary
}

/// Grid-level shape of f_beta: its maximum over the grid sits within one grid
/// step of gamma = beta(1-beta), never exceeds 2 sqrt(beta/(1-beta)) (plus
/// the guard band), and g_a with a = beta(1-beta) is positive left of a and
/// negative right of it (points within half a step of a are exempt, where the
/// sign is numerically meaningless).
pub fn audit_fbeta_peak(beta: f64, grid: &[f64]) -> BoundReport {
    let preconditions_met = beta > 0.0
        && beta < 1.0
        && grid.len() >= 3
        && grid.iter().all(|&g| g > 0.0)
        && grid.windows(2).all(|w| w[0] < w[1]);
    let a = beta * (1.0 - beta);
    let bound = 2.0 * (beta / (1.0 - beta)).sqrt();
    if !preconditions_met {
        return BoundReport {
            lemma_id: LemmaId::FbetaPeak,
            params: vec![param("beta", beta)],
            lhs: Magnitude::Log(LogMag::Zero),
            rhs: Magnitude::Log(LogMag::finite(bound)),
            slack: f64::NAN,
            preconditions_met: false,
            pass: false,
            trivial: false,
            marginal: false,
        };
    }
    let values: Vec<f64> = grid.iter().map(|&g| f_beta(beta, g)).collect();
    let (argmax, &max) = values
        .iter()
        .enumerate()
        .max_by(|(_, x), (_, y)| x.partial_cmp(y).expect("finite values"))
        .expect("nonempty grid");
    // peak localization: a must fall inside the neighbors of the argmax
    let left = if argmax == 0 { grid[0] } else { grid[argmax - 1] };
    let right = if argmax + 1 == grid.len() {
        grid[argmax]
    } else {
        grid[argmax + 1]
    };
    let peak_near = left <= a && a <= right;
    let (below_bound, marginal) = guarded_le(max, bound);
    // sign pattern of g_a on the same grid
    let mut sign_ok = true;
    for (i, &x) in grid.iter().enumerate() {
        let step = if i + 1 < grid.len() {
            grid[i + 1] - x
        } else {
            x - grid[i - 1]
        };
        if (x - a).abs() <= step / 2.0 {
            continue;
        }
        let g = g_a(a, x);
        if x < a && g <= 0.0 {
            sign_ok = false;
        }
        if x > a && g >= 0.0 {
            sign_ok = false;
        }
    }
    let pass = peak_near && below_bound && sign_ok;
    BoundReport {
        lemma_id: LemmaId::FbetaPeak,
        params: vec![
            param("beta", beta),
            param("peak_gamma", a),
            param("argmax_gamma", grid[argmax]),
            param("grid_points", grid.len()),
            param("peak_near", peak_near),
            param("sign_ok", sign_ok),
        ],
        lhs: Magnitude::Log(LogMag::finite(max)),
        rhs: Magnitude::Log(LogMag::finite(bound)),
        slack: bound - max,
        preconditions_met,
        pass,
        trivial: false,
        marginal,
    }
}

/// Uniform grid, handy default for [`audit_fbeta_peak`]: step, 2*step, ...
/// up to and including `hi`.
pub fn uniform_grid(step: f64, hi: f64) -> Vec<f64> {
    assert!(step > 0.0 && hi > step, "degenerate grid");
    let n = (hi / step).floor() as usize;
    (1..=n).map(|i| i as f64 * step).collect()
}
