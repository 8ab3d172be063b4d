//! Truncated power series in one weight variable `x`.
//!
//! All arithmetic discards terms of degree above the truncation order, so
//! every operation is exact on the retained coefficients.

use super::{rat, Coeff, Rat, YPoly};
use crate::{Error, Result};

/// A power series truncated at a fixed order `N`: coefficients for
/// `x^0 ..= x^N` in a coefficient ring `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        TruncatedSeries { coeffs }
    }

    pub fn zero(trunc: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = C::one();
        s
    }

    /// The series `x` (requires truncation order at least 1).
    pub fn x(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[1] = C::one();
        s
    }

    /// Truncation order `N`.
    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, value: C) {
        self.coeffs[k] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.trunc(), rhs.trunc(), "truncation orders differ");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.trunc(), rhs.trunc(), "truncation orders differ");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.trunc(), rhs.trunc(), "truncation orders differ");
        let n = self.trunc();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    let acc = std::mem::replace(&mut out[i + j], C::zero());
                    out[i + j] = acc + a.clone() * b.clone();
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect(),
        }
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `exp(u) = Σ u^k / k!` truncated; `u` must have zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpNonzeroConstant);
        }
        let n = self.trunc();
        let mut acc = Self::one(n);
        let mut term = Self::one(n);
        for k in 1..=n {
            term = term.mul(self).scale(&Rat::new(1.into(), k.into()));
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::InverseNonUnitConstant);
        }
        let n = self.trunc();
        let mut inv = vec![C::zero(); n + 1];
        inv[0] = C::one();
        for k in 1..=n {
            // t_k = -(s_1 t_{k-1} + ... + s_k t_0), using s_0 = 1.
            let mut acc = C::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !inv[k - j].is_zero() {
                    acc = acc + self.coeffs[j].clone() * inv[k - j].clone();
                }
            }
            inv[k] = -acc;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }
}

/// `(e^u - 1)/u` built directly from factorial coefficients
/// `Σ u^k / (k+1)!`, so that no series with zero constant term is ever
/// divided. Requires `u` with zero constant term.
pub fn expm1_over_arg<C: Coeff>(u: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    if !u.coeffs[0].is_zero() {
        return Err(Error::ExpNonzeroConstant);
    }
    let n = u.trunc();
    let mut acc = TruncatedSeries::one(n);
    let mut term = TruncatedSeries::one(n);
    for k in 1..=n {
        // term = u^k / (k+1)!; going from k-1 to k multiplies by u/(k+1).
        term = term.mul(u).scale(&Rat::new(1.into(), (k + 1).into()));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// The characteristic series of the chi_y-genus,
/// `Q(y;x) = x + x(y+1)/(e^{x(y+1)} - 1)`,
/// truncated at order `trunc`, with coefficients polynomial in `y`.
pub fn chi_y_series(trunc: usize) -> TruncatedSeries<YPoly> {
    let mut u = TruncatedSeries::<YPoly>::zero(trunc);
    if trunc >= 1 {
        u.coeffs[1] = YPoly::new(vec![rat(1), rat(1)]);
    }
    let quotient = expm1_over_arg(&u).expect("u has zero constant term");
    let inv = quotient.inverse().expect("quotient has unit constant term");
    if trunc == 0 {
        return inv;
    }
    TruncatedSeries::<YPoly>::x(trunc).add(&inv)
}

/// Evaluates every `y`-polynomial coefficient at `y = y0`.
pub fn specialize_y(s: &TruncatedSeries<YPoly>, y0: &Rat) -> TruncatedSeries<Rat> {
    s.map(|c| c.eval(y0))
}
