//! Convex orders on positive roots: reduced words for the longest element,
//! good Lyndon words, minimal pairs.

use crate::error::{Error, Result};
use crate::root_data::{RootId, RootSystem, RootVec};
use crate::shuffle::{word_to_string, Word};
use rand::seq::SliceRandom;
use rand::Rng;

/// Where a convex order came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderSource {
    ReducedWord(Vec<u8>),
    Lyndon,
}

/// A total order on the positive roots, smallest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexOrder {
    seq: Vec<RootId>,
    pos: Vec<usize>,
    pub source: OrderSource,
}

impl ConvexOrder {
    fn from_seq(seq: Vec<RootId>, source: OrderSource) -> Self {
        let mut pos = vec![0; seq.len()];
        for (k, &r) in seq.iter().enumerate() {
            pos[r] = k;
        }
        Self { seq, pos, source }
    }

    /// Roots from smallest to largest.
    pub fn roots(&self) -> &[RootId] {
        &self.seq
    }

    /// Position of a root, 0 being the smallest.
    pub fn position(&self, a: RootId) -> usize {
        self.pos[a]
    }

    pub fn less(&self, a: RootId, b: RootId) -> bool {
        self.pos[a] < self.pos[b]
    }

    /// A stable identifier of the order, used as a cache key.
    pub fn fingerprint(&self) -> String {
        match &self.source {
            OrderSource::Lyndon => "lyndon".to_string(),
            OrderSource::ReducedWord(w) => format!("w{}", word_to_string(w)),
        }
    }

    /// The reduced word for the longest element inducing this order.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<u8> {
        match &self.source {
            OrderSource::ReducedWord(w) => w.clone(),
            OrderSource::Lyndon => reduced_word_for_sequence(rs, &self.seq).expect("convex order"),
        }
    }
}

/// The order `alpha_{i_1} < s_{i_1}(alpha_{i_2}) < ...` attached to a
/// reduced expression of the longest element.
pub fn order_from_reduced_word(rs: &RootSystem, word: &[u8]) -> Result<ConvexOrder> {
    let n = rs.num_positive();
    if word.len() != n {
        return Err(Error::NotLongestWord(format!("length {} but {} positive roots", word.len(), n)));
    }
    let mut seen = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    for k in 0..n {
        let i = word[k] as usize;
        if i == 0 || i > rs.rank() {
            return Err(Error::NotLongestWord(format!("letter {i} out of range")));
        }
        let mut v: RootVec = rs.root(rs.simple(i)).clone();
        for j in (0..k).rev() {
            v = rs.reflect(word[j] as usize, &v);
        }
        let id = rs.root_id(&v).filter(|&id| !seen[id]).ok_or_else(|| {
            Error::NotLongestWord(format!("{} is not reduced at position {}", word_to_string(word), k + 1))
        })?;
        seen[id] = true;
        seq.push(id);
    }
    Ok(ConvexOrder::from_seq(seq, OrderSource::ReducedWord(word.to_vec())))
}

/// Recovers the reduced word from a convex sequence of roots: the `k`-th
/// letter is the simple root `s_{i_{k-1}} ... s_{i_1}(beta_k)`.
fn reduced_word_for_sequence(rs: &RootSystem, seq: &[RootId]) -> Option<Vec<u8>> {
    let mut word: Vec<u8> = Vec::with_capacity(seq.len());
    for &b in seq {
        let mut v = rs.root(b).clone();
        for &j in &word {
            v = rs.reflect(j as usize, &v);
        }
        let id = rs.root_id(&v)?;
        if !rs.is_simple(id) {
            return None;
        }
        word.push(v.iter().position(|&c| c == 1).unwrap() as u8 + 1);
    }
    Some(word)
}

/// Checks `beta < beta + gamma < gamma` whenever `beta < gamma` and
/// `beta + gamma` is a root. `seq` must list every positive root once.
pub fn is_convex(rs: &RootSystem, seq: &[RootId]) -> bool {
    let n = rs.num_positive();
    if seq.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (k, &r) in seq.iter().enumerate() {
        if r >= n || pos[r] != usize::MAX {
            return false;
        }
        pos[r] = k;
    }
    for a in 0..n {
        for b in 0..n {
            if pos[a] >= pos[b] {
                continue;
            }
            let s: RootVec = rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x + y).collect();
            if let Some(c) = rs.root_id(&s) {
                if !(pos[a] < pos[c] && pos[c] < pos[b]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Images `w(alpha_j)` of the simple roots, updated along a word.
struct WeylTracker<'a> {
    rs: &'a RootSystem,
    images: Vec<RootVec>,
}

impl<'a> WeylTracker<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        let images = (1..=rs.rank()).map(|i| rs.root(rs.simple(i)).clone()).collect();
        Self { rs, images }
    }

    /// Letters `i` with `l(w s_i) > l(w)`.
    fn ascents(&self) -> Vec<u8> {
        (0..self.rs.rank()).filter(|&i| self.images[i].iter().all(|&c| c >= 0)).map(|i| i as u8 + 1).collect()
    }

    /// `w -> w s_i`.
    fn push(&mut self, i: u8) {
        let i = i as usize - 1;
        let img_i = self.images[i].clone();
        for j in 0..self.rs.rank() {
            let c = self.rs.cartan[i][j];
            if c != 0 {
                for (x, y) in self.images[j].iter_mut().zip(&img_i) {
                    *x -= c * y;
                }
            }
        }
    }
}

/// Every reduced word of the longest element, or `None` if there are more
/// than `cap` of them.
pub fn all_reduced_words(rs: &RootSystem, cap: usize) -> Option<Vec<Vec<u8>>> {
    fn rec(t: &WeylTracker, word: &mut Vec<u8>, n: usize, cap: usize, out: &mut Vec<Vec<u8>>) -> bool {
        if word.len() == n {
            out.push(word.clone());
            return out.len() <= cap;
        }
        for i in t.ascents() {
            let mut t2 = WeylTracker { rs: t.rs, images: t.images.clone() };
            t2.push(i);
            word.push(i);
            let ok = rec(&t2, word, n, cap, out);
            word.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    let t = WeylTracker::new(rs);
    rec(&t, &mut Vec::new(), rs.num_positive(), cap, &mut out).then_some(out)
}

/// A reduced word of the longest element built by a random walk that picks
/// a uniformly random ascent at every step.
pub fn random_reduced_word<R: Rng>(rs: &RootSystem, rng: &mut R) -> Vec<u8> {
    let mut t = WeylTracker::new(rs);
    let mut word = Vec::with_capacity(rs.num_positive());
    for _ in 0..rs.num_positive() {
        let asc = t.ascents();
        let i = *asc.choose(rng).expect("an ascent exists below the longest element");
        t.push(i);
        word.push(i);
    }
    word
}

/// The reduced word `(s_1 ... s_r)(s_1 ... s_{r-1}) ... s_1` in type A.
pub fn type_a_lex_word(r: usize) -> Vec<u8> {
    (1..=r).rev().flat_map(|top| 1..=top as u8).collect()
}

/// Good Lyndon words `l(alpha)` indexed by root id, defined by
/// `l(alpha_i) = i` and `l(alpha) = max l(gamma) l(beta)` over
/// `beta + gamma = alpha` with `l(beta) > l(gamma)`.
///
/// Fails with `Unsupported` if the resulting words do not induce a convex
/// order (the construction is only guaranteed in simply-laced types).
pub fn good_lyndon_words(rs: &RootSystem) -> Result<Vec<Word>> {
    let n = rs.num_positive();
    let mut l: Vec<Option<Word>> = vec![None; n];
    for a in 0..n {
        if rs.is_simple(a) {
            let i = rs.root(a).iter().position(|&c| c == 1).unwrap();
            l[a] = Some(vec![i as u8 + 1]);
            continue;
        }
        let mut best: Option<Word> = None;
        for b in 0..n {
            let diff: RootVec = rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x - y).collect();
            let Some(g) = rs.root_id(&diff) else { continue };
            let (lb, lg) = (l[b].as_ref().unwrap(), l[g].as_ref().unwrap());
            if lb > lg {
                let cand: Word = lg.iter().chain(lb).copied().collect();
                if best.as_ref().is_none_or(|x| cand > *x) {
                    best = Some(cand);
                }
            }
        }
        l[a] = best;
    }
    let words: Vec<Word> = l.into_iter().map(|w| w.expect("every non-simple root decomposes")).collect();
    let order = lyndon_order_from_words(&words);
    if !is_convex(rs, order.roots()) {
        return Err(Error::Unsupported(format!("Lyndon order for {} is not convex", rs.cartan_type)));
    }
    Ok(words)
}

fn lyndon_order_from_words(words: &[Word]) -> ConvexOrder {
    let mut seq: Vec<RootId> = (0..words.len()).collect();
    seq.sort_by(|&a, &b| words[a].cmp(&words[b]));
    ConvexOrder::from_seq(seq, OrderSource::Lyndon)
}

/// The Lyndon order `alpha < beta` iff `l(alpha) < l(beta)`.
pub fn lyndon_order(rs: &RootSystem) -> Result<ConvexOrder> {
    Ok(lyndon_order_from_words(&good_lyndon_words(rs)?))
}

/// A two-part decomposition `alpha = beta + gamma` with `beta > gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinimalPair {
    pub beta: RootId,
    pub gamma: RootId,
}

/// All `(beta, gamma)` with `beta + gamma = alpha` and `beta > gamma`.
pub fn two_part_decompositions(rs: &RootSystem, order: &ConvexOrder, alpha: RootId) -> Vec<MinimalPair> {
    let mut out = Vec::new();
    for b in 0..rs.num_positive() {
        let diff: RootVec = rs.root(alpha).iter().zip(rs.root(b)).map(|(x, y)| x - y).collect();
        if let Some(g) = rs.root_id(&diff) {
            if order.less(g, b) {
                out.push(MinimalPair { beta: b, gamma: g });
            }
        }
    }
    out
}

/// Pairs `(beta, gamma)` admitting no `(beta', gamma')` with
/// `beta > beta' > alpha > gamma' > gamma`.
pub fn minimal_pairs(rs: &RootSystem, order: &ConvexOrder, alpha: RootId) -> Result<Vec<MinimalPair>> {
    if rs.is_simple(alpha) {
        return Err(Error::Precondition(format!("{} is simple", rs.root_label(alpha))));
    }
    let all = two_part_decompositions(rs, order, alpha);
    let mut out: Vec<MinimalPair> = all
        .iter()
        .filter(|p| {
            !all.iter().any(|q| {
                order.less(q.beta, p.beta)
                    && order.less(alpha, q.beta)
                    && order.less(q.gamma, alpha)
                    && order.less(p.gamma, q.gamma)
            })
        })
        .copied()
        .collect();
    out.sort_by_key(|p| order.position(p.gamma));
    Ok(out)
}

/// The minimal pair whose `gamma` is largest.
pub fn mp_choice(rs: &RootSystem, order: &ConvexOrder, alpha: RootId) -> Result<MinimalPair> {
    let pairs = minimal_pairs(rs, order, alpha)?;
    pairs.into_iter().max_by_key(|p| order.position(p.gamma)).ok_or_else(|| {
        Error::Precondition(format!("no minimal pair for {}", rs.root_label(alpha)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{build_root_system, CartanType, Family};

    fn rs(f: Family, r: usize) -> RootSystem {
        build_root_system(CartanType::new(f, r).unwrap()).unwrap()
    }

    #[test]
    fn a2_reduced_word_order() {
        let a2 = rs(Family::A, 2);
        let o = order_from_reduced_word(&a2, &[1, 2, 1]).unwrap();
        let labels: Vec<_> = o.roots().iter().map(|&r| a2.root(r).clone()).collect();
        assert_eq!(labels, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert!(order_from_reduced_word(&a2, &[1, 1, 2]).is_err());
        assert!(order_from_reduced_word(&a2, &[1, 2]).is_err());
    }

    #[test]
    fn non_convex_example() {
        let a2 = rs(Family::A, 2);
        let seq = vec![a2.root_id(&[1, 1]).unwrap(), a2.simple(1), a2.simple(2)];
        assert!(!is_convex(&a2, &seq));
    }

    #[test]
    fn counts_of_reduced_words() {
        assert_eq!(all_reduced_words(&rs(Family::A, 3), 1000).unwrap().len(), 16);
        assert_eq!(all_reduced_words(&rs(Family::G, 2), 1000).unwrap().len(), 2);
        assert!(all_reduced_words(&rs(Family::A, 4), 10).is_none());
    }

    #[test]
    fn reduced_word_round_trip() {
        let d4 = rs(Family::D, 4);
        let o = lyndon_order(&d4).unwrap();
        let w = o.reduced_word(&d4);
        assert_eq!(order_from_reduced_word(&d4, &w).unwrap().roots(), o.roots());
    }

    #[test]
    fn type_a_lex_matches_lyndon() {
        for r in 1..=5 {
            let a = rs(Family::A, r);
            let lex = order_from_reduced_word(&a, &type_a_lex_word(r)).unwrap();
            assert_eq!(lex.roots(), lyndon_order(&a).unwrap().roots());
        }
    }

    #[test]
    fn a3_minimal_pairs() {
        let a3 = rs(Family::A, 3);
        let o = lyndon_order(&a3).unwrap();
        let top = a3.highest_root();
        let mps = minimal_pairs(&a3, &o, top).unwrap();
        let id = |v: &[i32]| a3.root_id(v).unwrap();
        let expect = vec![
            MinimalPair { beta: id(&[0, 1, 1]), gamma: id(&[1, 0, 0]) },
            MinimalPair { beta: id(&[0, 0, 1]), gamma: id(&[1, 1, 0]) },
        ];
        assert_eq!(mps, expect);
        assert_eq!(mp_choice(&a3, &o, top).unwrap(), expect[1]);
        assert!(mp_choice(&a3, &o, a3.simple(2)).is_err());
    }

    #[test]
    fn g2_lyndon_words() {
        let g2 = rs(Family::G, 2);
        let l = good_lyndon_words(&g2).unwrap();
        let mut words: Vec<String> = l.iter().map(|w| word_to_string(w)).collect();
        words.sort();
        assert_eq!(words, vec!["1", "1112", "112", "11212", "12", "2"]);
    }
}
