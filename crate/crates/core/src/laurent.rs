//! Integer Laurent polynomials in `q` and quantum integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A Laurent polynomial with integer coefficients, stored densely from its
/// lowest non-zero exponent. The zero polynomial has an empty coefficient
/// vector; otherwise the first and last coefficients are non-zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { low: e, coeffs: vec![c] }
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let map: BTreeMap<i32, i64> = terms.into_iter().fold(BTreeMap::new(), |mut m, (e, c)| {
            *m.entry(e).or_insert(0) += c;
            m
        });
        let mut nz = map.into_iter().filter(|&(_, c)| c != 0).peekable();
        let Some(&(low, _)) = nz.peek() else {
            return Self::zero();
        };
        let mut coeffs = Vec::new();
        for (e, c) in nz {
            let idx = (e - low) as usize;
            coeffs.resize(idx + 1, 0);
            coeffs[idx] = c;
        }
        Self { low, coeffs }
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a non-zero coefficient.
    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a non-zero coefficient.
    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, e: i32) -> i64 {
        let idx = e - self.low;
        if idx < 0 {
            return 0;
        }
        self.coeffs.get(idx as usize).copied().unwrap_or(0)
    }

    /// Non-zero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => Self { low: -hi, coeffs: self.coeffs.iter().rev().copied().collect() },
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        match (self.min_exp(), self.max_exp()) {
            (None, _) | (_, None) => true,
            (Some(lo), Some(hi)) => lo == -hi && self.coeffs.iter().eq(self.coeffs.iter().rev()),
        }
    }

    /// Substitutes `q -> q^k` for `k > 0`.
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k > 0, "substitution exponent must be positive");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Sum of coefficients (value at `q = 1`).
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Exact division; `None` if `divisor` is zero or does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dlead = *divisor.coeffs.last().unwrap();
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return None;
        }
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![0i64; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + dlen - 1];
            if top == 0 {
                continue;
            }
            if top % dlead != 0 {
                return None;
            }
            let f = top / dlead;
            quot[k] = f;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= f * dc;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Self { low: self.low - divisor.low, coeffs: quot }.normalize())
    }

    /// Renders as a JSON object `{"exponent": coefficient}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> =
            self.terms().map(|(e, c)| (e.to_string(), serde_json::Value::from(c))).collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let obj = v.as_object()?;
        let mut terms = Vec::with_capacity(obj.len());
        for (k, c) in obj {
            terms.push((k.parse().ok()?, c.as_i64()?));
        }
        Some(Self::from_terms(terms))
    }
}

/// Balanced quantum integer `[n] = (q^n - q^{-n}) / (q - q^{-1})`.
pub fn qint(n: i32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    if n < 0 {
        return -qint(-n);
    }
    LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, 1)))
}

/// `[n]_d`: the quantum integer evaluated at `q^d`.
pub fn qint_d(n: i32, d: i32) -> LaurentPoly {
    qint(n).substitute_power(d)
}

/// `[n]^!_d = [1]_d [2]_d ... [n]_d`.
pub fn qfactorial_d(n: u32, d: i32) -> LaurentPoly {
    (1..=n as i32).fold(LaurentPoly::one(), |acc, k| &acc * &qint_d(k, d))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match (e, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "q".to_string(),
                (1, m) => format!("{m}q"),
                (e, 1) => format!("q^{e}"),
                (e, m) => format!("{m}q^{e}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        if low < self.low {
            let pad = (self.low - low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(0, pad));
            self.low = low;
        }
        self.coeffs.resize((high - low + 1) as usize, 0);
        let off = (rhs.low - low) as usize;
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[off + i] += c;
        }
        *self = std::mem::take(self).normalize();
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self += &-rhs;
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly { low: self.low + rhs.low, coeffs }.normalize()
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers() {
        assert_eq!(qint(2), LaurentPoly::from_terms([(1, 1), (-1, 1)]));
        assert_eq!(qint(3), LaurentPoly::from_terms([(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(qint_d(2, 3), LaurentPoly::from_terms([(3, 1), (-3, 1)]));
        assert!(qint(1).is_bar_invariant());
        assert_eq!(qfactorial_d(3, 1), &qint(2) * &qint(3));
    }

    #[test]
    fn exact_division() {
        let a = &qint(2) * &qint(3);
        assert_eq!(a.div_exact(&qint(3)), Some(qint(2)));
        let one_minus = LaurentPoly::from_terms([(0, 1), (2, -1)]);
        assert_eq!(one_minus.div_exact(&one_minus), Some(LaurentPoly::one()));
        assert_eq!(LaurentPoly::q_pow(1).div_exact(&qint(2)), None);
    }

    #[test]
    fn bar_and_display() {
        let p = LaurentPoly::from_terms([(3, 2), (-1, -1)]);
        assert_eq!(p.bar(), LaurentPoly::from_terms([(-3, 2), (1, -1)]));
        assert_eq!(p.to_string(), "2q^3-q^-1");
        assert!(!p.is_bar_invariant());
        assert!((&p + &p.bar()).is_bar_invariant());
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = qint(3);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).min_exp(), None);
    }
}
