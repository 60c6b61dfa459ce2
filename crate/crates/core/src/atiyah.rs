//! Numerical bookkeeping for Atiyah's bundles `F_r` and for symmetric powers.
//!
//! Only conserved quantities are tracked: ranks, degrees, and multisets of
//! summand orders or line-bundle degrees. Which line bundles occur in a
//! decomposition is never computed.

use num_integer::Integer;

use crate::bundle::{Bundle, IndecBundle};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `F_r`: the indecomposable rank-`r` bundle of degree 0 with a section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FBundle(u32);

impl FBundle {
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroRank(0));
        }
        Ok(FBundle(order))
    }

    pub fn order(&self) -> u32 {
        self.0
    }

    pub fn rank(&self) -> i64 {
        self.0 as i64
    }

    pub fn degree(&self) -> i64 {
        0
    }

    /// `h^0(F_r) = 1`, from the tower `0 -> O -> F_r -> F_{r-1} -> 0`.
    pub fn h0(&self) -> i64 {
        1
    }

    /// Summands of `F_r ⊗ F_s`, ascending.
    ///
    /// Characteristic-zero Clebsch–Gordan: `F_r ⊗ F_s = ⊕_{i=1}^{m} F_{r+s+1-2i}`
    /// with `m = min(r, s)`.
    pub fn tensor(&self, other: &FBundle) -> Vec<FBundle> {
        let (r, s) = (self.0, other.0);
        let m = r.min(s);
        (1..=m).rev().map(|i| FBundle(r + s + 1 - 2 * i)).collect()
    }
}

/// Orders of the `F_k` summands of `F_r ⊗ F_s`.
pub fn tensor_f(r: u32, s: u32) -> Result<Vec<u32>> {
    let fr = FBundle::new(r)?;
    let fs = FBundle::new(s)?;
    Ok(fr.tensor(&fs).into_iter().map(|f| f.order()).collect())
}

/// Writes an indecomposable `E(r, d)` as `E' ⊗ F_h` with `h = gcd(|d|, r)`.
///
/// Degree zero gives `h = r` and `E' = O`.
pub fn gcd_factor(e: &IndecBundle) -> (IndecBundle, i64) {
    let h = e.degree().abs().gcd(&e.rank());
    let prime = IndecBundle::new(e.rank() / h, e.degree() / h).expect("h divides the rank");
    (prime, h)
}

/// Degrees of line-bundle summands of a split bundle `⊕ O(d_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDegrees(Vec<i64>);

impl SplitDegrees {
    pub fn new(mut degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyBundle);
        }
        degrees.sort_unstable();
        Ok(SplitDegrees(degrees))
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> i64 {
        self.0.len() as i64
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn min(&self) -> i64 {
        self.0[0]
    }

    pub fn to_bundle(&self) -> Bundle {
        Bundle::new(self.0.iter().map(|&d| IndecBundle::new_unchecked(1, d))).expect("non-empty")
    }
}

/// `S^a(⊕ O(d_i)) = ⊕ O(Σ m_i d_i)` over all multi-indices with `Σ m_i = a`.
pub fn sym_power_split(split: &SplitDegrees, a: u32) -> Result<SplitDegrees> {
    if a == 0 {
        return Err(Error::NonPositiveA(0));
    }
    let mut out = Vec::new();
    monomials(split.degrees(), a, 0, &mut out);
    SplitDegrees::new(out)
}

fn monomials(degrees: &[i64], remaining: u32, acc: i64, out: &mut Vec<i64>) {
    match degrees {
        [] => {}
        [last] => out.push(acc + remaining as i64 * last),
        [first, rest @ ..] => {
            for m in 0..=remaining {
                monomials(rest, remaining - m, acc + m as i64 * first, out);
            }
        }
    }
}

/// `C(n, k)`, exact, with overflow reported.
pub fn binomial(n: i64, k: i64) -> Result<i64> {
    if k < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 1..=k as i128 {
        // acc * (n - k + i) is divisible by i at every step
        acc = acc * (n as i128 - k as i128 + i) / i;
        if acc > i64::MAX as i128 {
            return Err(Error::Overflow("binomial coefficient"));
        }
    }
    Ok(acc as i64)
}

/// Rank of `S^a E` for `rank E = r`.
pub fn sym_rank(r: i64, a: i64) -> Result<i64> {
    check_sym_args(r, a)?;
    binomial(a + r - 1, r - 1)
}

/// Degree of `S^a E` for `rank E = r`, `deg E = d`.
///
/// From `μ(S^a E) = a μ(E)`: `sym_rank · a · d / r`, which equals
/// `C(a + r - 1, r) · d` and is therefore always an integer.
pub fn sym_degree(r: i64, d: i64, a: i64) -> Result<i64> {
    check_sym_args(r, a)?;
    binomial(a + r - 1, r)?
        .checked_mul(d)
        .ok_or(Error::Overflow("symmetric power degree"))
}

fn check_sym_args(r: i64, a: i64) -> Result<()> {
    if r < 1 {
        return Err(Error::ZeroRank(r));
    }
    if a < 1 {
        return Err(Error::NonPositiveA(a));
    }
    Ok(())
}

/// `μ⁻(π_* D) = a μ⁻(E) + b` for `π_* D = S^a E ⊗ O(B)`.
///
/// Also the frame-invariant quantity `b + a μ⁻(E)` that every very-ampleness
/// threshold is compared against.
pub fn pushforward_mu_minus(e: &Bundle, a: i64, b: i64) -> Rational {
    e.mu_minus() * a + b
}
