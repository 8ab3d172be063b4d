//! Polynomials in the genus variable `y` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Coeff, Rat};

/// A polynomial in `y`; `coeffs[p]` is the coefficient of `y^p`. Trailing
/// zeros are trimmed, so the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YPoly {
    coeffs: Vec<Rat>,
}

impl YPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        YPoly::new(vec![c])
    }

    /// The monomial `y`.
    pub fn y() -> Self {
        YPoly::new(vec![Rat::zero(), Rat::one()])
    }

    /// Coefficient of `y^p` (zero beyond the degree).
    pub fn coeff(&self, p: usize) -> Rat {
        self.coeffs.get(p).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Evaluation at `y = y0` by Horner's rule.
    pub fn eval(&self, y0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * y0 + c;
        }
        acc
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match p {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*y")?,
                _ => write!(f, "({c})*y^{p}")?,
            }
        }
        Ok(())
    }
}

impl Add for YPoly {
    type Output = YPoly;

    fn add(self, rhs: YPoly) -> YPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::new((0..len).map(|p| self.coeff(p) + rhs.coeff(p)).collect())
    }
}

impl Sub for YPoly {
    type Output = YPoly;

    fn sub(self, rhs: YPoly) -> YPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::new((0..len).map(|p| self.coeff(p) - rhs.coeff(p)).collect())
    }
}

impl Mul for YPoly {
    type Output = YPoly;

    fn mul(self, rhs: YPoly) -> YPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return YPoly::default();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        YPoly::new(out)
    }
}

impl Neg for YPoly {
    type Output = YPoly;

    fn neg(self) -> YPoly {
        YPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Zero for YPoly {
    fn zero() -> Self {
        YPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for YPoly {
    fn one() -> Self {
        YPoly::constant(Rat::one())
    }
}

impl Coeff for YPoly {
    fn scale(&self, factor: &Rat) -> Self {
        YPoly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }
}
