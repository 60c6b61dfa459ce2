//! Exact numerical criteria for positivity of divisors `aT + bf` on
//! projective bundles `P(E)` over an elliptic curve.
//!
//! Bundles are direct sums of indecomposables recorded by `(rank, degree)`;
//! every quantity is an integer or an exact fraction.
//!
//! ```
//! use vample::{classify_very_ample, embedding_profile, Bundle, Divisor, Status};
//!
//! let e: Bundle = "3:4".parse().unwrap();
//! let profile = embedding_profile(&e, 2, -1).unwrap();
//! assert_eq!((profile.degree, profile.ambient_dim), (20, 9));
//!
//! let verdict = classify_very_ample(&e, Divisor::new(2, -1)).unwrap();
//! assert_eq!(verdict.status, Status::Yes);
//! ```

pub mod atiyah;
pub mod bundle;
pub mod chow;
pub mod criteria;
mod error;
pub mod rational;

pub use atiyah::{
    binomial, gcd_factor, pushforward_mu_minus, sym_degree, sym_power_split, sym_rank, tensor_f,
    FBundle, SplitDegrees,
};
pub use bundle::{all_bundles, Bundle, HNStage, IndecBundle};
pub use chow::{
    divisor_degree, embedding_profile, h0_divisor, section_curve_class, EmbeddingProfile, NumClass,
};
pub use criteria::{
    applicable_rules, canonical_frames, classify_ample, classify_globally_generated,
    classify_normally_generated, classify_very_ample, Divisor, Frame, Outcome, Property,
    RuleFiring, RuleId, Status, Strength, Verdict,
};
pub use error::{Error, ParseError, Result};
pub use rational::Rational;
