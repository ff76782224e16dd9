//! Elements of `H_alpha` in the monomial basis `x^k tau_w 1_i` and the
//! straightening procedures that keep them there.

use super::perm::{self, Perm};
use crate::error::{Error, Result};
use crate::root_data::RootSystem;
use crate::shuffle::{word_to_string, Word};
use serde_json::{json, Value};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

/// `x^x tau_w 1_word`, with `tau_w` taken along the canonical reduced word
/// of `w`. Exponents refer to the positions of the left-hand word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub x: Vec<u8>,
    pub w: Perm,
    pub word: Word,
}

impl Monomial {
    pub fn idempotent(word: Word) -> Self {
        let n = word.len();
        Self { x: vec![0; n], w: perm::identity(n), word }
    }

    /// The idempotent on the left, `w(word)`.
    pub fn left_word(&self) -> Word {
        perm::act_on_word(&self.w, &self.word)
    }

    pub fn degree(&self, rs: &RootSystem) -> i32 {
        let left = self.left_word();
        let xdeg: i32 = self.x.iter().zip(&left).map(|(&k, &l)| 2 * rs.letter_d(l) * k as i32).sum();
        let mut tdeg = 0;
        for a in 0..self.w.len() {
            for b in a + 1..self.w.len() {
                if self.w[a] > self.w[b] {
                    tdeg -= rs.letter_dot(self.word[a], self.word[b]);
                }
            }
        }
        xdeg + tdeg
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, &k) in self.x.iter().enumerate() {
            match k {
                0 => {}
                1 => write!(f, "x{} ", p + 1)?,
                _ => write!(f, "x{}^{} ", p + 1, k)?,
            }
        }
        for r in perm::canonical_word(&self.w) {
            write!(f, "t{} ", r + 1)?;
        }
        write!(f, "1_{}", word_to_string(&self.word))
    }
}

/// A polynomial in `x_1, ..., x_n` as exponent vectors with coefficients.
pub type XPoly = Vec<(Vec<u8>, i64)>;

/// A finite integer combination of basis monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KlrElement {
    terms: BTreeMap<Monomial, i64>,
}

impl KlrElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn idempotent(word: Word) -> Self {
        Self::monomial(Monomial::idempotent(word), 1)
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &KlrElement, c: i64) {
        for (m, &d) in &other.terms {
            self.add_term(m.clone(), c * d);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn sub(&self, other: &KlrElement) -> KlrElement {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }

    pub fn add(&self, other: &KlrElement) -> KlrElement {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }

    pub fn scale(&self, c: i64) -> KlrElement {
        let mut out = KlrElement::zero();
        out.add_scaled(self, c);
        out
    }

    /// Left multiplication by a polynomial in the `x`'s.
    pub fn mul_poly(&self, poly: &[(Vec<u8>, i64)]) -> KlrElement {
        let mut out = KlrElement::zero();
        for (m, &c) in &self.terms {
            for (k, d) in poly {
                let x = m.x.iter().zip(k).map(|(a, b)| a + b).collect();
                out.add_term(Monomial { x, w: m.w.clone(), word: m.word.clone() }, c * d);
            }
        }
        out
    }

    /// All degrees occurring.
    pub fn degrees(&self, rs: &RootSystem) -> BTreeSet<i32> {
        self.terms.keys().map(|m| m.degree(rs)).collect()
    }

    /// The common degree of all terms, if the element is homogeneous and non-zero.
    pub fn degree(&self, rs: &RootSystem) -> Option<i32> {
        let d = self.degrees(rs);
        (d.len() == 1).then(|| *d.iter().next().unwrap())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    json!({
                        "x": m.x,
                        "tau": perm::canonical_word(&m.w).iter().map(|r| r + 1).collect::<Vec<_>>(),
                        "word": word_to_string(&m.word),
                        "coeff": c,
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for KlrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {m}")?;
        }
        Ok(())
    }
}

/// Generators of `H_alpha`, with 1-based indices as in the usual notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Idempotent(Word),
    X(usize),
    Tau(usize),
}

/// The signs `eps_{i,j}` for connected pairs, with `eps_{i,j} eps_{j,i} = -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignConvention {
    eps: Vec<Vec<i64>>,
}

impl SignConvention {
    /// `eps_{i,j} = +1` whenever `i < j`.
    pub fn standard(rs: &RootSystem) -> Self {
        let r = rs.rank();
        let eps = (0..r)
            .map(|i| (0..r).map(|j| if rs.cartan[i][j] < 0 { if i < j { 1 } else { -1 } } else { 0 }).collect())
            .collect();
        Self { eps }
    }

    /// Sets `eps_{i,j} = s` and `eps_{j,i} = -s` (letters are 1-based).
    pub fn with_sign(mut self, i: u8, j: u8, s: i64) -> Result<Self> {
        let (a, b) = (i as usize - 1, j as usize - 1);
        if self.eps[a][b] == 0 || s.abs() != 1 {
            return Err(Error::Precondition(format!("no sign for ({i},{j}) or bad value {s}")));
        }
        self.eps[a][b] = s;
        self.eps[b][a] = -s;
        Ok(self)
    }

    pub fn get(&self, i: u8, j: u8) -> i64 {
        self.eps[i as usize - 1][j as usize - 1]
    }
}

/// Default cap on the number of terms in any intermediate element.
pub const DEFAULT_BUDGET: usize = 10_000_000;

/// The straightening engine for `H_alpha` over a fixed Cartan datum.
pub struct KlrAlgebra<'a> {
    pub rs: &'a RootSystem,
    pub signs: SignConvention,
    pub budget: usize,
    tau_memo: RwLock<HashMap<(u8, Perm, Word), Arc<KlrElement>>>,
    reduced_memo: RwLock<HashMap<(Vec<u8>, Word), Arc<KlrElement>>>,
}

impl<'a> KlrAlgebra<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Self::with_signs(rs, SignConvention::standard(rs))
    }

    pub fn with_signs(rs: &'a RootSystem, signs: SignConvention) -> Self {
        Self {
            rs,
            signs,
            budget: DEFAULT_BUDGET,
            tau_memo: RwLock::new(HashMap::new()),
            reduced_memo: RwLock::new(HashMap::new()),
        }
    }

    fn check_budget(&self, e: &KlrElement) -> Result<()> {
        if e.len() > self.budget {
            return Err(Error::Budget(format!("{} terms exceed the budget of {}", e.len(), self.budget)));
        }
        Ok(())
    }

    /// The polynomial `Q` with `tau_r^2 1_j = Q 1_j` (0-based `r`).
    pub fn quadratic(&self, r: usize, j: &[u8]) -> XPoly {
        let (a, b) = (j[r], j[r + 1]);
        let n = j.len();
        if a == b {
            return Vec::new();
        }
        let cab = self.rs.letter_cartan(a, b);
        if cab == 0 {
            return vec![(vec![0; n], 1)];
        }
        let cba = self.rs.letter_cartan(b, a);
        let e = self.signs.get(a, b);
        let mut p = vec![0; n];
        p[r] = (-cab) as u8;
        let mut q = vec![0; n];
        q[r + 1] = (-cba) as u8;
        vec![(p, e), (q, -e)]
    }

    /// The polynomial `B` with
    /// `(tau_{k+1} tau_k tau_{k+1} - tau_k tau_{k+1} tau_k) 1_j = B 1_j`.
    pub fn braid_defect(&self, k: usize, j: &[u8]) -> XPoly {
        let (a, b) = (j[k], j[k + 1]);
        let c = self.rs.letter_cartan(a, b);
        if a != j[k + 2] || a == b || c >= 0 {
            return Vec::new();
        }
        let e = self.signs.get(a, b);
        let top = -1 - c;
        (0..=top)
            .map(|r| {
                let mut x = vec![0; j.len()];
                x[k] = r as u8;
                x[k + 2] = (top - r) as u8;
                (x, e)
            })
            .collect()
    }

    /// `tau_r x^k = s_r(x^k) tau_r + [equal letters] d_r(x^k)`: returns the
    /// divided difference `(f - s_r f) / (x_{r+1} - x_r)` of a monomial.
    fn divided_difference(k: &[u8], r: usize) -> XPoly {
        let (a, b) = (k[r] as i32, k[r + 1] as i32);
        if a == b {
            return Vec::new();
        }
        let (lo, m, sign) = if a > b { (b, a - b, -1) } else { (a, b - a, 1) };
        (0..m)
            .map(|t| {
                let mut e = k.to_vec();
                e[r] = (lo + t) as u8;
                e[r + 1] = (lo + m - 1 - t) as u8;
                (e, sign)
            })
            .collect()
    }

    /// `1_j e`.
    pub fn left_mul_idempotent(&self, j: &[u8], e: &KlrElement) -> KlrElement {
        let mut out = KlrElement::zero();
        for (m, &c) in e.iter() {
            if m.left_word() == j {
                out.add_term(m.clone(), c);
            }
        }
        out
    }

    /// `x_p e` (0-based `p`).
    pub fn left_mul_x(&self, p: usize, e: &KlrElement) -> KlrElement {
        let mut out = KlrElement::zero();
        for (m, &c) in e.iter() {
            let mut m = m.clone();
            m.x[p] += 1;
            out.add_term(m, c);
        }
        out
    }

    /// `tau_r e` (0-based `r`).
    pub fn left_mul_tau(&self, r: usize, e: &KlrElement) -> Result<KlrElement> {
        let mut out = KlrElement::zero();
        for (m, &c) in e.iter() {
            let j = m.left_word();
            let t = self.tau_times(r, &m.w, &m.word)?;
            let mut sx = m.x.clone();
            sx.swap(r, r + 1);
            for (tm, &tc) in t.iter() {
                let x = sx.iter().zip(&tm.x).map(|(a, b)| a + b).collect();
                out.add_term(Monomial { x, w: tm.w.clone(), word: tm.word.clone() }, c * tc);
            }
            if j[r] == j[r + 1] {
                for (x, d) in Self::divided_difference(&m.x, r) {
                    out.add_term(Monomial { x, w: m.w.clone(), word: m.word.clone() }, c * d);
                }
            }
        }
        self.check_budget(&out)?;
        Ok(out)
    }

    /// `tau_r tau_w 1_i` in normal form.
    pub fn tau_times(&self, r: usize, w: &[u8], i: &[u8]) -> Result<Arc<KlrElement>> {
        let key = (r as u8, w.to_vec(), i.to_vec());
        if let Some(hit) = self.tau_memo.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let result = if !perm::is_left_descent(w, r) {
            let mut word = vec![r as u8];
            word.extend(perm::canonical_word(w));
            self.reduced_to_normal(&word, i)?
        } else {
            // tau_{can w} = tau_r tau_{can u} - F, so
            // tau_r tau_{can w} = Q tau_{can u} - tau_r F.
            let u = perm::left_mul(r, w);
            let lead = Monomial { x: vec![0; i.len()], w: w.to_vec(), word: i.to_vec() };
            let mut word = vec![r as u8];
            word.extend(perm::canonical_word(&u));
            let mut f = (*self.reduced_to_normal(&word, i)?).clone();
            f.add_term(lead, -1);
            let q = self.quadratic(r, &perm::act_on_word(&u, i));
            let base = KlrElement::monomial(Monomial { x: vec![0; i.len()], w: u, word: i.to_vec() }, 1);
            let mut out = base.mul_poly(&q);
            out.add_scaled(&self.left_mul_tau(r, &f)?, -1);
            Arc::new(out)
        };
        self.tau_memo.write().unwrap().insert(key, result.clone());
        Ok(result)
    }

    /// `tau_{word} 1_i` for a reduced `word`, in normal form.
    pub fn reduced_to_normal(&self, word: &[u8], i: &[u8]) -> Result<Arc<KlrElement>> {
        let n = i.len();
        let u = perm::from_word(n, word);
        let zero_x = vec![0; n];
        if perm::canonical_word(&u) == word {
            return Ok(Arc::new(KlrElement::monomial(Monomial { x: zero_x, w: u, word: i.to_vec() }, 1)));
        }
        let key = (word.to_vec(), i.to_vec());
        if let Some(hit) = self.reduced_memo.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let a = perm::first_descent(&u).expect("non-identity permutation");
        let (moved, corr) = self.move_to_front(word, a, i)?;
        let mut tail = (*self.reduced_to_normal(&moved[1..], i)?).clone();
        let tail_lead = Monomial { x: zero_x.clone(), w: perm::left_mul(a, &u), word: i.to_vec() };
        tail.add_term(tail_lead, -1);
        let mut out = self.left_mul_tau(a, &tail)?;
        out.add_scaled(&corr, 1);
        out.add_term(Monomial { x: zero_x, w: u, word: i.to_vec() }, 1);
        self.check_budget(&out)?;
        let out = Arc::new(out);
        self.reduced_memo.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// Rewrites a reduced word whose product has `a` as a left descent into
    /// one starting with `a`: `tau_word 1_i = tau_moved 1_i + corrections`.
    fn move_to_front(&self, word: &[u8], a: usize, i: &[u8]) -> Result<(Vec<u8>, KlrElement)> {
        let r = word[0] as usize;
        if r == a {
            return Ok((word.to_vec(), KlrElement::zero()));
        }
        let (w1, c1) = self.move_to_front(&word[1..], a, i)?;
        if r.abs_diff(a) >= 2 {
            let mut moved = vec![a as u8, r as u8];
            moved.extend_from_slice(&w1[1..]);
            return Ok((moved, self.left_mul_tau(r, &c1)?));
        }
        let (w2, c2) = self.move_to_front(&w1[1..], r, i)?;
        let v = &w2[1..];
        let k = r.min(a);
        let j = perm::act_on_word(&perm::from_word(i.len(), v), i);
        let sign = if r == k + 1 { 1 } else { -1 };
        let defect = self.braid_defect(k, &j);
        let mut corr = KlrElement::zero();
        if !defect.is_empty() {
            corr.add_scaled(&self.reduced_to_normal(v, i)?.mul_poly(&defect), sign);
        }
        let inner = self.left_mul_tau(a, &c2)?;
        let mut rest = c1;
        rest.add_scaled(&inner, 1);
        corr.add_scaled(&self.left_mul_tau(r, &rest)?, 1);
        let mut moved = vec![a as u8, r as u8, a as u8];
        moved.extend_from_slice(v);
        Ok((moved, corr))
    }

    /// Left multiplication by one generator.
    pub fn apply(&self, g: &Generator, e: &KlrElement) -> Result<KlrElement> {
        let n = e.iter().next().map_or(0, |(m, _)| m.word.len());
        let check = |k: usize, bound: usize| {
            if k == 0 || k > bound {
                Err(Error::Precondition(format!("generator index {k} out of range 1..={bound}")))
            } else {
                Ok(k - 1)
            }
        };
        match g {
            Generator::Idempotent(j) => Ok(self.left_mul_idempotent(j, e)),
            Generator::X(p) if e.is_zero() => check(*p, usize::MAX).map(|_| KlrElement::zero()),
            Generator::X(p) => Ok(self.left_mul_x(check(*p, n)?, e)),
            Generator::Tau(r) if e.is_zero() => check(*r, usize::MAX).map(|_| KlrElement::zero()),
            Generator::Tau(r) => self.left_mul_tau(check(*r, n - 1)?, e),
        }
    }

    /// `1_alpha` as the sum of all idempotents of the given weight.
    pub fn unit(&self, weight: &[i32]) -> KlrElement {
        let mut out = KlrElement::zero();
        for w in crate::pbw::words_of_weight(weight) {
            out.add_term(Monomial::idempotent(w), 1);
        }
        out
    }

    /// Normal form of the product `expr[0] expr[1] ...` in `H_weight`.
    pub fn normal_form(&self, expr: &[Generator], weight: &[i32]) -> Result<KlrElement> {
        self.normal_form_on(expr, self.unit(weight))
    }

    /// Normal form of `expr[0] expr[1] ... e`.
    pub fn normal_form_on(&self, expr: &[Generator], e: KlrElement) -> Result<KlrElement> {
        let mut cur = e;
        for g in expr.iter().rev() {
            cur = self.apply(g, &cur)?;
        }
        Ok(cur)
    }

    /// The product `a b`.
    pub fn multiply(&self, a: &KlrElement, b: &KlrElement) -> Result<KlrElement> {
        let mut out = KlrElement::zero();
        for (m, &c) in a.iter() {
            let mut cur = self.left_mul_idempotent(&m.word, b);
            for r in perm::canonical_word(&m.w).iter().rev() {
                cur = self.left_mul_tau(*r as usize, &cur)?;
            }
            out.add_scaled(&cur.mul_poly(&[(m.x.clone(), 1)]), c);
            self.check_budget(&out)?;
        }
        Ok(out)
    }

    /// The anti-automorphism fixing every generator.
    pub fn transpose(&self, e: &KlrElement) -> Result<KlrElement> {
        let mut out = KlrElement::zero();
        for (m, &c) in e.iter() {
            let n = m.word.len();
            let start = Monomial { x: m.x.clone(), w: perm::identity(n), word: m.left_word() };
            let mut cur = KlrElement::monomial(start, c);
            for &r in &perm::canonical_word(&m.w) {
                cur = self.left_mul_tau(r as usize, &cur)?;
            }
            out.add_scaled(&cur, 1);
        }
        Ok(out)
    }

    /// `e_m = x_2 x_3^2 ... x_m^{m-1} tau_{w_0} 1_{i^m}` for a letter `i`.
    pub fn nilhecke_idempotent(&self, m: usize, letter: u8) -> Result<KlrElement> {
        if m == 0 {
            return Err(Error::Precondition("m must be at least 1".into()));
        }
        let w0: Perm = (0..m as u8).rev().collect();
        let x = (0..m as u8).collect();
        Ok(KlrElement::monomial(Monomial { x, w: w0, word: vec![letter; m] }, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{build_root_system, CartanType, Family};
    use Generator::*;

    fn rs(f: Family, r: usize) -> RootSystem {
        build_root_system(CartanType::new(f, r).unwrap()).unwrap()
    }

    #[test]
    fn quadratic_and_x_tau_relations() {
        let a1 = rs(Family::A, 1);
        let h = KlrAlgebra::new(&a1);
        let e = h.normal_form(&[Tau(1), Tau(1)], &[2]).unwrap();
        assert!(e.is_zero());
        let e = h.normal_form(&[Tau(1), X(2)], &[2]).unwrap();
        let mut expect = KlrElement::idempotent(vec![1, 1]);
        expect.add_term(Monomial { x: vec![1, 0], w: vec![1, 0], word: vec![1, 1] }, 1);
        assert_eq!(e, expect);
    }

    #[test]
    fn a2_braid_defect() {
        let a2 = rs(Family::A, 2);
        let h = KlrAlgebra::new(&a2);
        let one = KlrElement::idempotent(vec![1, 2, 1]);
        let lhs = h.normal_form_on(&[Tau(2), Tau(1), Tau(2)], one.clone()).unwrap();
        let rhs = h.normal_form_on(&[Tau(1), Tau(2), Tau(1)], one.clone()).unwrap();
        assert_eq!(lhs.sub(&rhs), one);
    }

    #[test]
    fn nil_hecke_idempotents() {
        let a1 = rs(Family::A, 1);
        let h = KlrAlgebra::new(&a1);
        for m in 1..=3 {
            let e = h.nilhecke_idempotent(m, 1).unwrap();
            assert_eq!(h.multiply(&e, &e).unwrap(), e, "m = {m}");
        }
    }

    #[test]
    fn transpose_examples() {
        let a2 = rs(Family::A, 2);
        let h = KlrAlgebra::new(&a2);
        let t = h.normal_form_on(&[Tau(1)], KlrElement::idempotent(vec![1, 2])).unwrap();
        let expect = h.normal_form_on(&[Idempotent(vec![1, 2]), Tau(1)], h.unit(&[1, 1])).unwrap();
        assert_eq!(h.transpose(&t).unwrap(), expect);

        let a1 = rs(Family::A, 1);
        let h = KlrAlgebra::new(&a1);
        let e = h.normal_form_on(&[X(1), Tau(1)], KlrElement::idempotent(vec![1, 1])).unwrap();
        let mut expect = KlrElement::zero();
        expect.add_term(Monomial { x: vec![0, 1], w: vec![1, 0], word: vec![1, 1] }, 1);
        expect.add_term(Monomial::idempotent(vec![1, 1]), -1);
        assert_eq!(h.transpose(&e).unwrap(), expect);
        assert_eq!(h.transpose(&expect).unwrap(), e);
    }
}
