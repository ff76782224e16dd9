//! Words, the quantum shuffle algebra and graded characters.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::root_data::{RootSystem, RootVec};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A word in the simple-root alphabet; letters are 1-based node labels.
pub type Word = Vec<u8>;

pub fn word_to_string(w: &[u8]) -> String {
    w.iter().map(|&l| char::from_digit(l as u32, 36).expect("letter out of range")).collect()
}

pub fn parse_word(s: &str) -> Result<Word> {
    s.chars()
        .map(|c| {
            c.to_digit(36)
                .filter(|&d| d > 0)
                .map(|d| d as u8)
                .ok_or_else(|| Error::Precondition(format!("bad letter {c:?} in word {s:?}")))
        })
        .collect()
}

/// `deg(w; i) = - sum_{j<k, w(j) > w(k)} alpha_{i_j} . alpha_{i_k}` for a
/// permutation given in one-line notation (0-based values).
pub fn deg_perm(rs: &RootSystem, perm: &[usize], word: &[u8]) -> i32 {
    let n = word.len();
    let mut d = 0;
    for j in 0..n {
        for k in j + 1..n {
            if perm[j] > perm[k] {
                d -= rs.letter_dot(word[j], word[k]);
            }
        }
    }
    d
}

/// The permuted word `w(i)`, whose letter at position `w(k)` is `i_k`.
pub fn permute_word(perm: &[usize], word: &[u8]) -> Word {
    let mut out = vec![0u8; word.len()];
    for (k, &p) in perm.iter().enumerate() {
        out[p] = word[k];
    }
    out
}

/// A finite `Z[q, q^{-1}]`-linear combination of words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ShuffleElement {
    terms: BTreeMap<Word, LaurentPoly>,
}

impl ShuffleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty word, unit of the shuffle product.
    pub fn unit() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: Word, c: LaurentPoly) -> Self {
        let mut s = Self::zero();
        s.add_term(w, &c);
        s
    }

    pub fn add_term(&mut self, w: Word, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u8]) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &ShuffleElement) -> ShuffleElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &ShuffleElement) -> ShuffleElement {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> ShuffleElement {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &(v * c));
        }
        out
    }

    pub fn shift(&self, e: i32) -> ShuffleElement {
        Self { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.shift(e))).collect() }
    }

    /// Coefficientwise bar involution.
    pub fn bar(&self) -> ShuffleElement {
        Self { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.bar())).collect() }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_bar_invariant)
    }

    /// Exact coefficientwise division by a Laurent polynomial.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<ShuffleElement> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &c.div_exact(d)?);
        }
        Some(out)
    }

    /// Sum of all coefficients: the graded dimension of a module with this
    /// character.
    pub fn total(&self) -> LaurentPoly {
        self.terms.values().fold(LaurentPoly::zero(), |acc, c| &acc + c)
    }

    /// The common weight of all words, if the element is non-zero.
    pub fn weight(&self, rs: &RootSystem) -> Option<RootVec> {
        self.terms.keys().next().map(|w| rs.weight_of_word(w))
    }

    /// Sorted `[{"word": .., "coeff": {..}}]` rendering.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| serde_json::json!({ "word": word_to_string(w), "coeff": c.to_json() }))
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::Precondition("malformed shuffle element JSON".into());
        let mut out = Self::zero();
        for t in v.as_array().ok_or_else(bad)? {
            let w = parse_word(t.get("word").and_then(|w| w.as_str()).ok_or_else(bad)?)?;
            let c = LaurentPoly::from_json(t.get("coeff").ok_or_else(bad)?).ok_or_else(bad)?;
            out.add_term(w, &c);
        }
        Ok(out)
    }
}

impl fmt::Display for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if *c == LaurentPoly::one() {
                    word_to_string(w)
                } else {
                    format!("({c}){}", word_to_string(w))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All interleavings of `u` and `v` with their degrees `deg(w; uv)`.
fn interleave(rs: &RootSystem, u: &[u8], v: &[u8], out: &mut Vec<(Word, i32)>) {
    let r = rs.rank();
    // suffix[i][l] = sum_{k >= i} alpha_{u_k} . alpha_l
    let mut suffix = vec![vec![0i32; r + 1]; u.len() + 1];
    for i in (0..u.len()).rev() {
        for l in 1..=r {
            suffix[i][l] = suffix[i + 1][l] + rs.letter_dot(u[i], l as u8);
        }
    }
    let mut buf = Vec::with_capacity(u.len() + v.len());
    fn rec(u: &[u8], v: &[u8], i: usize, j: usize, deg: i32, suffix: &[Vec<i32>], buf: &mut Word, out: &mut Vec<(Word, i32)>) {
        if i == u.len() && j == v.len() {
            out.push((buf.clone(), deg));
            return;
        }
        if i < u.len() {
            buf.push(u[i]);
            rec(u, v, i + 1, j, deg, suffix, buf, out);
            buf.pop();
        }
        if j < v.len() {
            buf.push(v[j]);
            rec(u, v, i, j + 1, deg - suffix[i][v[j] as usize], suffix, buf, out);
            buf.pop();
        }
    }
    rec(u, v, 0, 0, 0, &suffix, &mut buf, out);
}

/// The quantum shuffle product.
pub fn shuffle(rs: &RootSystem, a: &ShuffleElement, b: &ShuffleElement) -> ShuffleElement {
    let mut acc: HashMap<Word, LaurentPoly> = HashMap::new();
    let mut scratch = Vec::new();
    for (u, cu) in &a.terms {
        for (v, cv) in &b.terms {
            scratch.clear();
            interleave(rs, u, v, &mut scratch);
            scratch.sort_unstable();
            let cuv = cu * cv;
            let mut k = 0;
            while k < scratch.len() {
                let mut e = k;
                while e < scratch.len() && scratch[e].0 == scratch[k].0 {
                    e += 1;
                }
                let degs = LaurentPoly::from_terms(scratch[k..e].iter().map(|(_, d)| (*d, 1)));
                let c = &degs * &cuv;
                match acc.get_mut(&scratch[k].0) {
                    Some(x) => *x += &c,
                    None => {
                        acc.insert(scratch[k].0.clone(), c);
                    }
                }
                k = e;
            }
        }
    }
    ShuffleElement { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
}

/// Shuffle product of several elements from left to right.
pub fn shuffle_all(rs: &RootSystem, parts: &[&ShuffleElement]) -> ShuffleElement {
    parts.iter().fold(ShuffleElement::unit(), |acc, p| shuffle(rs, &acc, p))
}

/// Coefficients of the deconcatenations of every word into consecutive
/// blocks of the given weights.
pub fn restrict_character(
    rs: &RootSystem,
    a: &ShuffleElement,
    parts: &[RootVec],
) -> Result<BTreeMap<Vec<Word>, LaurentPoly>> {
    let total: RootVec = parts.iter().fold(vec![0; rs.rank()], |acc, p| acc.iter().zip(p).map(|(x, y)| x + y).collect());
    if let Some(w) = a.weight(rs) {
        if w != total {
            return Err(Error::WeightMismatch(format!("character weight {w:?} vs parts sum {total:?}")));
        }
    }
    let lens: Vec<usize> = parts.iter().map(|p| p.iter().sum::<i32>() as usize).collect();
    let mut out = BTreeMap::new();
    'words: for (w, c) in &a.terms {
        let mut blocks = Vec::with_capacity(parts.len());
        let mut pos = 0;
        for (p, &l) in parts.iter().zip(&lens) {
            let block = &w[pos..pos + l];
            if &rs.weight_of_word(block) != p {
                continue 'words;
            }
            blocks.push(block.to_vec());
            pos += l;
        }
        out.insert(blocks, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{build_root_system, CartanType, Family};

    fn rs(f: Family, r: usize) -> RootSystem {
        build_root_system(CartanType::new(f, r).unwrap()).unwrap()
    }

    #[test]
    fn a2_basic_shuffles() {
        let a2 = rs(Family::A, 2);
        let p = shuffle(&a2, &ShuffleElement::word(vec![1]), &ShuffleElement::word(vec![2]));
        let mut expect = ShuffleElement::word(vec![1, 2]);
        expect.add_term(vec![2, 1], &LaurentPoly::q_pow(1));
        assert_eq!(p, expect);
        let u = shuffle(&a2, &ShuffleElement::unit(), &ShuffleElement::word(vec![1, 2]));
        assert_eq!(u, ShuffleElement::word(vec![1, 2]));
    }

    #[test]
    fn a1_square() {
        let a1 = rs(Family::A, 1);
        let p = shuffle(&a1, &ShuffleElement::word(vec![1]), &ShuffleElement::word(vec![1]));
        assert_eq!(p, ShuffleElement::term(vec![1, 1], LaurentPoly::from_terms([(0, 1), (-2, 1)])));
    }

    #[test]
    fn bar_twist_a2() {
        let a2 = rs(Family::A, 2);
        let one = ShuffleElement::word(vec![1]);
        let two = ShuffleElement::word(vec![2]);
        let lhs = shuffle(&a2, &one, &two).bar();
        let rhs = shuffle(&a2, &two, &one).shift(a2.letter_dot(1, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn restriction_splits() {
        let a2 = rs(Family::A, 2);
        let x = ShuffleElement::word(vec![1, 2]);
        let r = restrict_character(&a2, &x, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[&vec![vec![1], vec![2]]], LaurentPoly::one());
        assert!(restrict_character(&a2, &x, &[vec![0, 1], vec![1, 0]]).unwrap().is_empty());
        assert!(restrict_character(&a2, &x, &[vec![1, 0]]).is_err());
    }

    #[test]
    fn json_is_sorted() {
        let mut x = ShuffleElement::word(vec![2, 1]);
        x.add_term(vec![1, 2], &LaurentPoly::from_terms([(1, 2), (0, 1)]));
        assert_eq!(
            serde_json::to_string(&x.to_json()).unwrap(),
            r#"[{"word":"12","coeff":{"0":1,"1":2}},{"word":"21","coeff":{"0":1}}]"#
        );
        assert_eq!(ShuffleElement::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn degree_and_permutation() {
        let a2 = rs(Family::A, 2);
        assert_eq!(deg_perm(&a2, &[1, 0], &[1, 2]), 1);
        assert_eq!(permute_word(&[1, 0], &[1, 2]), vec![2, 1]);
        assert_eq!(deg_perm(&a2, &[0, 1], &[1, 2]), 0);
    }
}
