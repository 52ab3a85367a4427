//! Constants, sign regions and inequality certification built on top of the
//! evaluators in [`crate::kurepa`].

pub mod bounds;
pub mod constants;
pub mod optimize;
pub mod verify;

pub use bounds::{
    bound_ga1, bounds_ga2, bounds_ga3, bounds_ga4, check_gamma_dominance, BoundsTriple,
    EqualityFlag, GammaDominance, RegionE,
};
pub use constants::{
    constants, find_beta_minimum, find_re_a_roots, sign_region, BetaMinimum, Constants,
    ReARoots, SignRegion,
};
pub use verify::{
    limit_scan, verify_inequality, EqualityCheck, GridSpec, LimitRow, PointMargin, Side,
    TheoremId, Verdict, VerificationReport, Violation,
};
