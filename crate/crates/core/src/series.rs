//! Laurent series in `q` known up to a truncation degree.

use crate::laurent::LaurentPoly;
use std::fmt;

/// A Laurent series whose coefficients are known exactly for every exponent
/// `<= trunc`. Coefficients above `trunc` are discarded.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    known: LaurentPoly,
    trunc: i32,
}

impl PowerSeries {
    /// The polynomial `p` regarded as a series, keeping exponents `<= trunc`.
    pub fn from_laurent(p: &LaurentPoly, trunc: i32) -> Self {
        let known = LaurentPoly::from_terms(p.terms().filter(|&(e, _)| e <= trunc));
        Self { known, trunc }
    }

    pub fn zero(trunc: i32) -> Self {
        Self { known: LaurentPoly::zero(), trunc }
    }

    pub fn trunc(&self) -> i32 {
        self.trunc
    }

    pub fn coeff(&self, e: i32) -> Option<i64> {
        (e <= self.trunc).then(|| self.known.coeff(e))
    }

    /// The known part as a polynomial.
    pub fn known(&self) -> &LaurentPoly {
        &self.known
    }

    /// A lower bound for the lowest exponent of the true series.
    fn low_bound(&self) -> i32 {
        self.known.min_exp().unwrap_or(self.trunc + 1)
    }

    /// Divides by `1 - q^k` (`k > 0`), i.e. multiplies by `sum_j q^{jk}`.
    /// The truncation degree is preserved.
    pub fn div_one_minus_q_pow(&self, k: i32) -> Self {
        assert!(k > 0, "geometric factor needs a positive exponent");
        let Some(lo) = self.known.min_exp() else {
            return self.clone();
        };
        let mut acc = vec![0i64; (self.trunc - lo + 1) as usize];
        for e in lo..=self.trunc {
            let idx = (e - lo) as usize;
            let prev = if idx >= k as usize { acc[idx - k as usize] } else { 0 };
            acc[idx] = self.known.coeff(e) + prev;
        }
        let known = LaurentPoly::from_terms(acc.into_iter().enumerate().map(|(i, c)| (lo + i as i32, c)));
        Self { known, trunc: self.trunc }
    }

    /// Multiplication by an exact Laurent polynomial.
    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        let Some(pmin) = p.min_exp() else {
            return Self::zero(self.trunc);
        };
        let trunc = self.trunc + pmin;
        Self::from_laurent(&(&self.known * p), trunc)
    }

    pub fn mul(&self, other: &PowerSeries) -> Self {
        let trunc = (self.trunc + other.low_bound()).min(other.trunc + self.low_bound());
        Self::from_laurent(&(&self.known * &other.known), trunc)
    }

    pub fn add(&self, other: &PowerSeries) -> Self {
        let trunc = self.trunc.min(other.trunc);
        Self::from_laurent(&(&self.known + &other.known), trunc)
    }

    pub fn sub(&self, other: &PowerSeries) -> Self {
        let trunc = self.trunc.min(other.trunc);
        Self::from_laurent(&(&self.known - &other.known), trunc)
    }

    /// Cuts the series down to a smaller truncation degree.
    pub fn truncate(&self, trunc: i32) -> Self {
        assert!(trunc <= self.trunc, "cannot extend a truncated series");
        Self::from_laurent(&self.known, trunc)
    }

    /// Equality of all coefficients at exponents `<= d`. Both series must be
    /// known up to `d`.
    pub fn agrees_up_to(&self, other: &PowerSeries, d: i32) -> bool {
        assert!(self.trunc >= d && other.trunc >= d, "series not known up to degree {d}");
        self.truncate(d) == other.truncate(d)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "trunc": self.trunc, "coeff": self.known.to_json() })
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.known, self.trunc + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        let s = PowerSeries::from_laurent(&LaurentPoly::one(), 6).div_one_minus_q_pow(2);
        assert_eq!(s.known(), &LaurentPoly::from_terms([(0, 1), (2, 1), (4, 1), (6, 1)]));
    }

    #[test]
    fn division_round_trip() {
        let a = LaurentPoly::from_terms([(-2, 1), (0, 3), (1, -1)]);
        let s = PowerSeries::from_laurent(&a, 10).div_one_minus_q_pow(2);
        let back = s.mul_laurent(&LaurentPoly::from_terms([(0, 1), (2, -1)]));
        assert!(back.agrees_up_to(&PowerSeries::from_laurent(&a, 10), 10));
    }

    #[test]
    fn truncation_tracks_negative_exponents() {
        let a = PowerSeries::from_laurent(&LaurentPoly::q_pow(-2), 5);
        let b = PowerSeries::from_laurent(&LaurentPoly::one(), 5).div_one_minus_q_pow(1);
        let c = a.mul(&b);
        assert_eq!(c.trunc(), 3);
        assert_eq!(c.coeff(3), Some(1));
        assert_eq!(c.coeff(-2), Some(1));
    }
}
