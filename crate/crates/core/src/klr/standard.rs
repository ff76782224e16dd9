//! Proper standard modules `q^{s_lambda} H 1_lambda (x)_{H_lambda} L'` with
//! homogeneous cuspidal factors, their generator action and contravariant form.

use super::algebra::{Generator, KlrAlgebra, KlrElement, Monomial};
use super::homog::HomogRep;
use super::linalg::rank_over;
use super::perm::{self, Perm};
use crate::error::{Error, Result};
use crate::kostant::{kp_scalars, KostantPartition};
use crate::pbw::DualPbw;
use crate::root_data::RootSystem;
use crate::shuffle::{word_to_string, Word};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

/// `tau_w 1_lambda (x) v_word` with `w` a minimal coset representative and
/// `word` the concatenation of the factors' basis words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisVector {
    pub w: Perm,
    pub word: Word,
}

impl BasisVector {
    /// The word space this vector lies in.
    pub fn left_word(&self) -> Word {
        perm::act_on_word(&self.w, &self.word)
    }
}

/// A vector of a proper standard module in the basis of [`BasisVector`]s.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StandardModuleElement {
    terms: BTreeMap<BasisVector, i64>,
}

impl StandardModuleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: BasisVector) -> Self {
        let mut v = Self::zero();
        v.add_term(b, 1);
        v
    }

    pub fn add_term(&mut self, b: BasisVector, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(b) {
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

    pub fn add_scaled(&mut self, other: &StandardModuleElement, c: i64) {
        for (b, &d) in &other.terms {
            self.add_term(b.clone(), c * d);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisVector, &i64)> {
        self.terms.iter()
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

    pub fn coeff(&self, b: &BasisVector) -> i64 {
        self.terms.get(b).copied().unwrap_or(0)
    }

    fn retain(&mut self, f: impl Fn(&BasisVector) -> bool) {
        self.terms.retain(|b, _| f(b));
    }
}

type ActKey = (u8, Perm, Word);

/// `bar-Delta(lambda)` over a fixed KLR algebra.
pub struct StandardModule<'h, 'a> {
    h: &'h KlrAlgebra<'a>,
    pub lambda: KostantPartition,
    reps: Vec<Arc<HomogRep>>,
    /// `(start, len)` of each block.
    pub blocks: Vec<(usize, usize)>,
    /// Block-permuting involution of maximal length.
    pub x: Perm,
    /// Reversal of equal parts, `lambda_{y(k)} = lambda_k`.
    pub y: Vec<usize>,
    pub s_lambda: i32,
    /// Multiplies every pairing (the form is unique up to a scalar).
    pub normalization: i64,
    tau_memo: RwLock<HashMap<ActKey, Arc<StandardModuleElement>>>,
    x_memo: RwLock<HashMap<ActKey, Arc<StandardModuleElement>>>,
}

impl<'h, 'a> StandardModule<'h, 'a> {
    pub fn new(h: &'h KlrAlgebra<'a>, pbw: &DualPbw, lambda: &KostantPartition) -> Result<Self> {
        let rs = h.rs;
        let mut reps_by_root: HashMap<usize, Arc<HomogRep>> = HashMap::new();
        let mut reps = Vec::new();
        let mut blocks = Vec::new();
        let mut start = 0;
        for &p in &lambda.parts {
            let rep = match reps_by_root.get(&p) {
                Some(r) => r.clone(),
                None => {
                    let r = Arc::new(HomogRep::cuspidal(pbw, p)?);
                    reps_by_root.insert(p, r.clone());
                    r
                }
            };
            let len = rs.height(p);
            blocks.push((start, len));
            start += len;
            reps.push(rep);
        }
        let l = lambda.len();
        let mut y: Vec<usize> = (0..l).collect();
        for (_, s, len) in lambda.runs() {
            y[s..s + len].reverse();
        }
        let mut x = vec![0u8; start];
        for (k, &(s, len)) in blocks.iter().enumerate() {
            let t = blocks[y[k]].0;
            for o in 0..len {
                x[s + o] = (t + o) as u8;
            }
        }
        let s_lambda = kp_scalars(rs, &pbw.words, lambda).s;
        Ok(Self {
            h,
            lambda: lambda.clone(),
            reps,
            blocks,
            x,
            y,
            s_lambda,
            normalization: 1,
            tau_memo: RwLock::new(HashMap::new()),
            x_memo: RwLock::new(HashMap::new()),
        })
    }

    fn rs(&self) -> &'a RootSystem {
        self.h.rs
    }

    pub fn height(&self) -> usize {
        self.x.len()
    }

    /// Whether `w` is the minimal representative of `w S_lambda`.
    pub fn is_coset_rep(&self, w: &[u8]) -> bool {
        self.blocks.iter().all(|&(s, len)| (s..s + len - 1).all(|k| w[k] < w[k + 1]))
    }

    /// Whether `word` is a concatenation of basis words of the factors.
    pub fn is_tensor_word(&self, word: &[u8]) -> bool {
        self.blocks.iter().zip(&self.reps).all(|(&(s, len), rep)| rep.contains(&word[s..s + len]))
    }

    fn block_of(&self, pos: usize) -> usize {
        self.blocks.iter().position(|&(s, len)| pos >= s && pos < s + len).unwrap()
    }

    /// All `1_lambda (x) v` for basis vectors `v` of `L'`.
    pub fn cyclic_vectors(&self) -> Vec<BasisVector> {
        let mut words: Vec<Word> = vec![Vec::new()];
        for rep in &self.reps {
            words = words
                .iter()
                .flat_map(|pre| rep.basis.iter().map(move |b| [pre.clone(), b.clone()].concat()))
                .collect();
        }
        let id = perm::identity(self.height());
        words.into_iter().map(|word| BasisVector { w: id.clone(), word }).collect()
    }

    pub fn degree(&self, b: &BasisVector) -> i32 {
        self.s_lambda + Monomial { x: vec![0; b.w.len()], w: b.w.clone(), word: b.word.clone() }.degree(self.rs())
    }

    fn lead(&self, w: &[u8], word: &[u8]) -> Monomial {
        Monomial { x: vec![0; word.len()], w: w.to_vec(), word: word.to_vec() }
    }

    /// `x_p` (0-based) applied to a basis vector.
    pub fn act_x(&self, p: usize, b: &BasisVector) -> Result<Arc<StandardModuleElement>> {
        let key = (p as u8, b.w.clone(), b.word.clone());
        if let Some(hit) = self.x_memo.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let mut out = StandardModuleElement::zero();
        if let Some(a) = perm::first_descent(&b.w) {
            // x_p tau_a = tau_a x_{s_a p} - c, with c = +-1 for equal letters.
            let rest = BasisVector { w: perm::left_mul(a, &b.w), word: b.word.clone() };
            let sp = if p == a { a + 1 } else if p == a + 1 { a } else { p };
            let inner = self.act_x(sp, &rest)?;
            out = self.act_tau_vec(a, &inner)?;
            let right = rest.left_word();
            if right[a] == right[a + 1] {
                let c = if p == a { 1 } else if p == a + 1 { -1 } else { 0 };
                out.add_term(rest, -c);
            }
        }
        let out = Arc::new(out);
        self.x_memo.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// `tau_r` (0-based) applied to a basis vector.
    pub fn act_tau(&self, r: usize, b: &BasisVector) -> Result<Arc<StandardModuleElement>> {
        let key = (r as u8, b.w.clone(), b.word.clone());
        if let Some(hit) = self.tau_memo.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let h = self.h;
        let (w, j) = (&b.w, &b.word);
        let u = perm::left_mul(r, w);
        let mut out = StandardModuleElement::zero();
        if perm::is_left_descent(w, r) {
            // tau_{can w} = tau_r tau_{can u} - F.
            let mut word = vec![r as u8];
            word.extend(perm::canonical_word(&u));
            let mut f = (*h.reduced_to_normal(&word, j)?).clone();
            f.add_term(self.lead(w, j), -1);
            let base = KlrElement::monomial(self.lead(&u, j), 1);
            let q = base.mul_poly(&h.quadratic(r, &perm::act_on_word(&u, j)));
            out.add_scaled(&self.reduce(&q)?, 1);
            let rf = self.reduce(&f)?;
            out.add_scaled(&self.act_tau_vec(r, &rf)?, -1);
        } else {
            let mut word = vec![r as u8];
            word.extend(perm::canonical_word(w));
            let mut c1 = (*h.reduced_to_normal(&word, j)?).clone();
            c1.add_term(self.lead(&u, j), -1);
            if self.is_coset_rep(&u) {
                out.add_term(BasisVector { w: u, word: j.clone() }, 1);
                out.add_scaled(&self.reduce(&c1)?, 1);
            } else {
                // s_r w = w s_t with t inside a block.
                let t = perm::inverse(w)[r] as usize;
                let mut word2 = perm::canonical_word(w);
                word2.push(t as u8);
                let mut c2 = (*h.reduced_to_normal(&word2, j)?).clone();
                c2.add_term(self.lead(&u, j), -1);
                let rep = &self.reps[self.block_of(t)];
                if let Some(nj) = rep.tau(self.rs(), t, j) {
                    out.add_term(BasisVector { w: w.clone(), word: nj }, 1);
                }
                out.add_scaled(&self.reduce(&c1.sub(&c2))?, 1);
            }
        }
        let out = Arc::new(out);
        self.tau_memo.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    fn act_tau_vec(&self, r: usize, v: &StandardModuleElement) -> Result<StandardModuleElement> {
        let mut out = StandardModuleElement::zero();
        for (b, &c) in v.iter() {
            let image = self.act_tau(r, b)?;
            out.add_scaled(&image, c);
        }
        Ok(out)
    }

    fn act_x_vec(&self, p: usize, v: &StandardModuleElement) -> Result<StandardModuleElement> {
        let mut out = StandardModuleElement::zero();
        for (b, &c) in v.iter() {
            let image = self.act_x(p, b)?;
            out.add_scaled(&image, c);
        }
        Ok(out)
    }

    /// `e (1_lambda (x) v)` summed over the right idempotents of `e`.
    pub fn reduce(&self, e: &KlrElement) -> Result<StandardModuleElement> {
        let mut out = StandardModuleElement::zero();
        for (m, &c) in e.iter() {
            if !self.is_tensor_word(&m.word) {
                continue;
            }
            let mut v = StandardModuleElement::basis(BasisVector { w: perm::identity(m.word.len()), word: m.word.clone() });
            for &r in perm::canonical_word(&m.w).iter().rev() {
                v = self.act_tau_vec(r as usize, &v)?;
            }
            for (p, &k) in m.x.iter().enumerate() {
                for _ in 0..k {
                    v = self.act_x_vec(p, &v)?;
                }
            }
            out.add_scaled(&v, c);
        }
        Ok(out)
    }

    /// Left action of a generator (1-based indices).
    pub fn act(&self, g: &Generator, v: &StandardModuleElement) -> Result<StandardModuleElement> {
        let n = self.height();
        match *g {
            Generator::Idempotent(ref i) => {
                let mut out = v.clone();
                out.retain(|b| &b.left_word() == i);
                Ok(out)
            }
            Generator::X(p) if (1..=n).contains(&p) => self.act_x_vec(p - 1, v),
            Generator::Tau(r) if (1..n).contains(&r) => self.act_tau_vec(r - 1, v),
            _ => Err(Error::Precondition(format!("generator {g:?} out of range for height {n}"))),
        }
    }

    /// `expr[0] expr[1] ... v`.
    pub fn act_all(&self, expr: &[Generator], v: &StandardModuleElement) -> Result<StandardModuleElement> {
        expr.iter().rev().try_fold(v.clone(), |acc, g| self.act(g, &acc))
    }

    /// Image under the top Mackey projection, as a vector of `L'` keyed by word.
    fn project(&self, v: &StandardModuleElement) -> BTreeMap<Word, i64> {
        let mut out = BTreeMap::new();
        for (b, &c) in v.iter() {
            if b.w == self.x {
                let mut word = Vec::with_capacity(b.word.len());
                for k in 0..self.blocks.len() {
                    let (s, len) = self.blocks[self.y[k]];
                    word.extend_from_slice(&b.word[s..s + len]);
                }
                *out.entry(word).or_insert(0) += c;
            }
        }
        out
    }

    /// `T(tau_{can w}) v`, dropping terms that cannot reach the length of `x`.
    fn transpose_tau_act(&self, w: &[u8], v: &StandardModuleElement) -> Result<StandardModuleElement> {
        let target = perm::length(&self.x);
        let word = perm::canonical_word(w);
        let mut cur = v.clone();
        for (t, &r) in word.iter().enumerate() {
            let remaining = word.len() - t - 1;
            cur = self.act_tau_vec(r as usize, &cur)?;
            cur.retain(|b| perm::length(&b.w) + remaining >= target);
        }
        Ok(cur)
    }

    /// The contravariant form on two vectors.
    pub fn pair(&self, u: &StandardModuleElement, v: &StandardModuleElement) -> Result<i64> {
        let mut total = 0;
        for (b, &c) in v.iter() {
            let m = self.transpose_tau_act(&b.w, u)?;
            total += c * self.project(&m).get(&b.word).copied().unwrap_or(0);
        }
        Ok(self.normalization * total)
    }

    /// Standard basis vectors in the `i`-word space of degree `m`.
    pub fn slice_basis(&self, i: &[u8], m: i32) -> Vec<BasisVector> {
        let mut out = self.word_basis(i);
        out.retain(|b| self.degree(b) == m);
        out
    }

    /// Standard basis vectors in the `i`-word space, all degrees.
    pub fn word_basis(&self, i: &[u8]) -> Vec<BasisVector> {
        if i.len() != self.height() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut assigned: Vec<Vec<usize>> = vec![Vec::new(); self.blocks.len()];
        self.slice_rec(i, 0, &mut assigned, &mut out);
        out.sort();
        out
    }

    fn slice_rec(&self, i: &[u8], p: usize, assigned: &mut Vec<Vec<usize>>, out: &mut Vec<BasisVector>) {
        if p == i.len() {
            let n = i.len();
            let mut w = vec![0u8; n];
            let mut word = vec![0u8; n];
            for (k, pos) in assigned.iter().enumerate() {
                let s = self.blocks[k].0;
                for (o, &q) in pos.iter().enumerate() {
                    w[s + o] = q as u8;
                    word[s + o] = i[q];
                }
            }
            out.push(BasisVector { w, word });
            return;
        }
        for k in 0..self.blocks.len() {
            if assigned[k].len() == self.blocks[k].1 {
                continue;
            }
            let mut prefix: Word = assigned[k].iter().map(|&q| i[q]).collect();
            prefix.push(i[p]);
            if self.reps[k].is_prefix(&prefix) {
                assigned[k].push(p);
                self.slice_rec(i, p + 1, assigned, out);
                assigned[k].pop();
            }
        }
    }

    /// Pairings of the degree-`m` slice against the degree-`-m` slice.
    pub fn gram_matrix(&self, i: &[u8], m: i32) -> Result<Vec<Vec<i64>>> {
        let rows = self.slice_basis(i, m);
        let cols = self.slice_basis(i, -m);
        self.gram_of(&rows, &cols)
    }

    /// Pairings between two lists of basis vectors.
    pub fn gram_of(&self, rows: &[BasisVector], cols: &[BasisVector]) -> Result<Vec<Vec<i64>>> {
        let vecs = |bs: &[BasisVector]| bs.iter().cloned().map(StandardModuleElement::basis).collect::<Vec<_>>();
        self.gram_of_vectors(&vecs(rows), &vecs(cols))
    }

    /// Pairings between two lists of vectors, computed in parallel.
    pub fn gram_of_vectors(
        &self,
        rows: &[StandardModuleElement],
        cols: &[StandardModuleElement],
    ) -> Result<Vec<Vec<i64>>> {
        rows.par_iter().map(|r| cols.iter().map(|c| self.pair(r, c)).collect()).collect()
    }
}

/// A Gram matrix with its ranks, in the exported JSON layout.
pub fn gram_report(
    rs: &RootSystem,
    lambda: &KostantPartition,
    i: &[u8],
    degree: i32,
    matrix: &[Vec<i64>],
    primes: &[u64],
) -> Value {
    let rank_mod: serde_json::Map<String, Value> =
        primes.iter().map(|&p| (p.to_string(), json!(rank_over(matrix, p)))).collect();
    json!({
        "lambda": lambda.to_json(rs),
        "word": word_to_string(i),
        "degree": degree,
        "matrix": matrix,
        "rank_char0": rank_over(matrix, 0),
        "rank_mod": rank_mod,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex_order::lyndon_order;
    use crate::root_data::{build_root_system, CartanType, Family};

    #[test]
    fn a2_small_module() {
        let a2 = build_root_system(CartanType::new(Family::A, 2).unwrap()).unwrap();
        let o = lyndon_order(&a2).unwrap();
        let pbw = DualPbw::new(&a2, &o).unwrap();
        let h = KlrAlgebra::new(&a2);
        let lam = KostantPartition::new(&o, vec![a2.simple(1), a2.simple(2)]);
        let m = StandardModule::new(&h, &pbw, &lam).unwrap();
        let one = StandardModuleElement::basis(m.cyclic_vectors()[0].clone());
        let t = m.act(&Generator::Tau(1), &one).unwrap();
        let s1 = BasisVector { w: vec![1, 0], word: vec![2, 1] };
        assert_eq!(t, StandardModuleElement::basis(s1.clone()));
        assert!(m.act(&Generator::Tau(1), &t).unwrap().is_zero());
        assert_eq!(m.pair(&one, &one).unwrap(), 1);
        assert_eq!(m.pair(&t, &t).unwrap(), 0);
        assert_eq!(m.gram_matrix(&[2, 1], 0).unwrap(), vec![vec![1]]);
        assert!(m.gram_matrix(&[1, 1], 0).unwrap().is_empty());
        assert_eq!(m.slice_basis(&[1, 2], 1), vec![s1]);
    }
}
