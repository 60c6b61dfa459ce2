//! The numerical ring `Num(P(E))` over an elliptic curve and the embedding
//! invariants of a divisor `aT + bf`.
//!
//! With `r = rank E` and `d = deg E` the ring is generated by the tautological
//! class `T` and the fiber class `f`, subject to `f² = 0` and
//! `T^r = d·T^{r-1}·f`. The point class `T^{r-1}·f` has degree 1.

use std::fmt;

use crate::atiyah::{pushforward_mu_minus, sym_degree, sym_rank};
use crate::bundle::{Bundle, IndecBundle};
use crate::error::{Error, Result};

/// A class `Σ c_{i,j} T^i f^j` with `0 <= i < r` and `j ∈ {0, 1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct NumClass {
    rank: i64,
    degree: i64,
    // coeffs[i] = [coefficient of T^i, coefficient of T^i f]
    coeffs: Vec<[i64; 2]>,
}

impl NumClass {
    pub fn zero(rank: i64, degree: i64) -> Result<Self> {
        if rank < 1 {
            return Err(Error::ZeroRank(rank));
        }
        Ok(NumClass {
            rank,
            degree,
            coeffs: vec![[0, 0]; rank as usize],
        })
    }

    pub fn for_bundle(e: &Bundle) -> Self {
        NumClass::zero(e.rank(), e.degree()).expect("bundle rank is positive")
    }

    /// `c · T^i f^j`, reduced.
    pub fn monomial(rank: i64, degree: i64, c: i64, i: u32, j: u32) -> Result<Self> {
        let mut out = NumClass::zero(rank, degree)?;
        out.add_reduced(c, i as usize, j as usize);
        Ok(out)
    }

    pub fn one(rank: i64, degree: i64) -> Result<Self> {
        NumClass::monomial(rank, degree, 1, 0, 0)
    }

    /// The divisor class `aT + bf`.
    pub fn divisor(rank: i64, degree: i64, a: i64, b: i64) -> Result<Self> {
        let mut out = NumClass::zero(rank, degree)?;
        out.add_reduced(a, 1, 0);
        out.add_reduced(b, 0, 1);
        Ok(out)
    }

    pub fn context(&self) -> (i64, i64) {
        (self.rank, self.degree)
    }

    /// Coefficient of `T^i f^j` in reduced form.
    pub fn coeff(&self, i: usize, j: usize) -> i64 {
        self.coeffs.get(i).map_or(0, |c| c[j])
    }

    /// Degree of the zero-cycle part: the coefficient of the point class.
    pub fn degree(&self) -> i64 {
        self.coeffs[self.rank as usize - 1][1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == [0, 0])
    }

    fn add_reduced(&mut self, c: i64, i: usize, j: usize) {
        let r = self.rank as usize;
        match (i, j) {
            (_, j) if j >= 2 => {}
            (i, j) if i < r => self.coeffs[i][j] += c,
            // T^r = d T^{r-1} f
            (i, 0) if i == r => self.coeffs[r - 1][1] += c * self.degree,
            // T^r f = d T^{r-1} f^2 = 0, and T^{r+1} = d T^r f = 0
            _ => {}
        }
    }

    pub fn multiply(&self, other: &NumClass) -> Result<NumClass> {
        self.check_context(other)?;
        let mut out = NumClass::zero(self.rank, self.degree)?;
        for (i, x) in self.coeffs.iter().enumerate() {
            for (k, y) in other.coeffs.iter().enumerate() {
                for (j, &xj) in x.iter().enumerate() {
                    if xj == 0 {
                        continue;
                    }
                    for (l, &yl) in y.iter().enumerate() {
                        if yl != 0 {
                            out.add_reduced(xj * yl, i + k, j + l);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &NumClass) -> Result<NumClass> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (o, x) in out.coeffs.iter_mut().zip(&other.coeffs) {
            o[0] += x[0];
            o[1] += x[1];
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> NumClass {
        let mut acc = NumClass::one(self.rank, self.degree).expect("valid context");
        for _ in 0..n {
            acc = acc.multiply(self).expect("same context");
        }
        acc
    }

    fn check_context(&self, other: &NumClass) -> Result<()> {
        if self.context() != other.context() {
            return Err(Error::ContextMismatch {
                left: self.context(),
                right: other.context(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumClass(r={}, d={}; ", self.rank, self.degree)?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            for (j, &v) in c.iter().enumerate() {
                if v == 0 {
                    continue;
                }
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "{v}·T^{i}")?;
                if j == 1 {
                    f.write_str("f")?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str(")")
    }
}

/// `D^{dim X} = a^r d + r a^{r-1} b`.
pub fn divisor_degree(e: &Bundle, a: i64, b: i64) -> Result<i64> {
    let r = e.rank();
    let d = e.degree();
    let overflow = || Error::Overflow("divisor degree");
    let exp = u32::try_from(r - 1).map_err(|_| overflow())?;
    let a_pow = a.checked_pow(exp).ok_or_else(overflow)?;
    let lead = a_pow
        .checked_mul(a)
        .and_then(|x| x.checked_mul(d))
        .ok_or_else(overflow)?;
    let tail = a_pow
        .checked_mul(r)
        .and_then(|x| x.checked_mul(b))
        .ok_or_else(overflow)?;
    lead.checked_add(tail).ok_or_else(overflow)
}

/// `h^0(X, D) = h^0(C, S^a E ⊗ O(B))`, which on a genus-1 base equals the
/// degree of `S^a E ⊗ O(B)` once `h^1` vanishes, i.e. when `a μ⁻(E) + b > 0`.
pub fn h0_divisor(e: &Bundle, a: i64, b: i64) -> Result<i64> {
    if a < 1 {
        return Err(Error::NonPositiveA(a));
    }
    let mu = pushforward_mu_minus(e, a, b);
    if !mu.is_positive() {
        return Err(Error::H0Undefined(mu));
    }
    let r = e.rank();
    let sym_deg = sym_degree(r, e.degree(), a)?;
    sym_rank(r, a)?
        .checked_mul(b)
        .and_then(|x| x.checked_add(sym_deg))
        .ok_or(Error::Overflow("h0"))
}

/// Degree of `φ_D(X)` and the dimension of the projective space it maps to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingProfile {
    pub degree: i64,
    pub h0: i64,
    pub ambient_dim: i64,
}

pub fn embedding_profile(e: &Bundle, a: i64, b: i64) -> Result<EmbeddingProfile> {
    let h0 = h0_divisor(e, a, b)?;
    Ok(EmbeddingProfile {
        degree: divisor_degree(e, a, b)?,
        h0,
        ambient_dim: h0 - 1,
    })
}

/// Class of the section curve `P(W) ⊂ P(E)` for a line-bundle summand `W`.
///
/// The complement `E/W` cuts out `T - deg(E/W)·f` in rank 2 and
/// `T² - deg(E/W)·T f` in rank 3, so that `(aT + bf)·P(W) = b + a·deg W`.
pub fn section_curve_class(e: &Bundle, w: &IndecBundle) -> Result<NumClass> {
    let r = e.rank();
    if !(2..=3).contains(&r) {
        return Err(Error::UnsupportedRank(r));
    }
    if !w.is_line_bundle() || !e.atoms().contains(w) {
        return Err(Error::NotALineSummand(w.to_string()));
    }
    let complement = e.degree() - w.degree();
    let top = (r - 1) as u32;
    NumClass::monomial(r, e.degree(), 1, top, 0)?.add(&NumClass::monomial(
        r,
        e.degree(),
        -complement,
        top - 1,
        1,
    )?)
}
