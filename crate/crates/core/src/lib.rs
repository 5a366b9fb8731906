//! Exact and log-domain computation of restricted partition functions,
//! generation of the extremal integer-set families, and numerical audits of
//! the lemma-level bounds that govern them.
//!
//! - [`count`]: exact engines (pentagonal recurrence for p(n), coin-change DP
//!   for p_A(n), fixed-part-count tables, binomials) plus a brute-force
//!   enumeration oracle.
//! - [`logdomain`]: log-sum-exp counterparts for magnitudes beyond
//!   float range, with an exact-zero sentinel.
//! - [`partset`]: finite integer sets as sorted disjoint intervals.
//! - [`construct`]: the squared-growth and tower-growth set families, density
//!   profiles, and the bound's applicability region.
//! - [`audit`]: one audit per lemma-level statement, emitting
//!   [`audit::BoundReport`]s, plus ratio-curve experiments.
//!
//! All operations are pure functions of immutable inputs with per-call
//! scratch tables; values are safe to share and send across threads.

pub mod audit;
pub mod construct;
pub mod count;
pub mod error;
pub mod logdomain;
pub mod partset;

pub use count::Count;
pub use error::{Error, Result};
pub use logdomain::LogMag;
pub use partset::PartSet;
