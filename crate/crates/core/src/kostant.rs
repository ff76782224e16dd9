//! Kostant partitions, their partial order, and the words and scalars
//! attached to them through the chosen minimal pairs.

use crate::convex_order::{mp_choice, ConvexOrder, MinimalPair};
use crate::error::{Error, Result};
use crate::laurent::{qfactorial_d, qint, LaurentPoly};
use crate::root_data::{p_max_ids, RootId, RootSystem, RootVec};
use crate::shuffle::Word;
use std::collections::BTreeMap;

/// A weakly decreasing sequence of positive roots (largest part first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KostantPartition {
    pub parts: Vec<RootId>,
}

impl KostantPartition {
    /// Sorts arbitrary parts into canonical (decreasing) order.
    pub fn new(order: &ConvexOrder, mut parts: Vec<RootId>) -> Self {
        parts.sort_by(|&a, &b| order.position(b).cmp(&order.position(a)));
        Self { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self, rs: &RootSystem) -> RootVec {
        let mut w = vec![0; rs.rank()];
        for &p in &self.parts {
            for (x, y) in w.iter_mut().zip(rs.root(p)) {
                *x += y;
            }
        }
        w
    }

    /// `m_beta(lambda)` for every part, keyed by root.
    pub fn multiplicities(&self) -> BTreeMap<RootId, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Maximal runs of equal parts as `(root, start, length)`.
    pub fn runs(&self) -> Vec<(RootId, usize, usize)> {
        let mut out: Vec<(RootId, usize, usize)> = Vec::new();
        for (k, &p) in self.parts.iter().enumerate() {
            match out.last_mut() {
                Some((r, _, len)) if *r == p => *len += 1,
                _ => out.push((p, k, 1)),
            }
        }
        out
    }

    pub fn label(&self, rs: &RootSystem) -> String {
        let parts: Vec<String> = self.parts.iter().map(|&p| rs.root_label(p)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        serde_json::Value::Array(self.parts.iter().map(|&p| serde_json::json!(rs.root(p))).collect())
    }
}

/// All Kostant partitions of `weight`, in lexicographic order of their part
/// positions (which is a linear extension of the partial order).
pub fn kostant_partitions(rs: &RootSystem, order: &ConvexOrder, weight: &[i32]) -> Vec<KostantPartition> {
    fn rec(
        rs: &RootSystem,
        order: &ConvexOrder,
        rem: &mut RootVec,
        max_pos: usize,
        cur: &mut Vec<RootId>,
        out: &mut Vec<KostantPartition>,
    ) {
        if rem.iter().all(|&c| c == 0) {
            out.push(KostantPartition { parts: cur.clone() });
            return;
        }
        for pos in (0..=max_pos).rev() {
            let r = order.roots()[pos];
            let root = rs.root(r);
            if root.iter().zip(rem.iter()).all(|(a, b)| a <= b) {
                for (x, y) in rem.iter_mut().zip(root) {
                    *x -= y;
                }
                cur.push(r);
                rec(rs, order, rem, pos, cur, out);
                cur.pop();
                for (x, y) in rem.iter_mut().zip(root) {
                    *x += y;
                }
            }
        }
    }
    let mut out = Vec::new();
    if weight.iter().any(|&c| c < 0) {
        return out;
    }
    let mut rem = weight.to_vec();
    rec(rs, order, &mut rem, rs.num_positive() - 1, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| {
        let pa: Vec<usize> = a.parts.iter().map(|&r| order.position(r)).collect();
        let pb: Vec<usize> = b.parts.iter().map(|&r| order.position(r)).collect();
        pa.cmp(&pb)
    });
    out
}

/// The strict partial order on Kostant partitions of a common weight.
pub fn kp_less(rs: &RootSystem, order: &ConvexOrder, lam: &KostantPartition, mu: &KostantPartition) -> Result<bool> {
    if lam.weight(rs) != mu.weight(rs) {
        return Err(Error::WeightMismatch(format!("{} vs {}", lam.label(rs), mu.label(rs))));
    }
    Ok(kp_less_unchecked(order, lam, mu))
}

pub(crate) fn kp_less_unchecked(order: &ConvexOrder, lam: &KostantPartition, mu: &KostantPartition) -> bool {
    let head = lam
        .parts
        .iter()
        .zip(&mu.parts)
        .find(|(a, b)| a != b)
        .is_some_and(|(&a, &b)| order.less(a, b));
    let tail = lam
        .parts
        .iter()
        .rev()
        .zip(mu.parts.iter().rev())
        .find(|(a, b)| a != b)
        .is_some_and(|(&a, &b)| order.less(b, a));
    head && tail
}

/// Minimal-pair choices, words `i_alpha` and scalars `kappa_alpha` for every
/// positive root under a fixed convex order.
#[derive(Clone, Debug)]
pub struct RootWords {
    pub mp: Vec<Option<MinimalPair>>,
    pub p: Vec<i32>,
    pub word: Vec<Word>,
    pub kappa: Vec<LaurentPoly>,
}

impl RootWords {
    /// Uses `mp_choice` for every non-simple root.
    pub fn new(rs: &RootSystem, order: &ConvexOrder) -> Result<Self> {
        let n = rs.num_positive();
        let mut mps = vec![None; n];
        for a in 0..n {
            if !rs.is_simple(a) {
                mps[a] = Some(mp_choice(rs, order, a)?);
            }
        }
        Ok(Self::with_pairs(rs, mps))
    }

    /// Builds the data from an explicit choice of pairs (roots are stored
    /// by increasing height, so parts are always processed first).
    pub fn with_pairs(rs: &RootSystem, mp: Vec<Option<MinimalPair>>) -> Self {
        let n = rs.num_positive();
        let mut word = vec![Vec::new(); n];
        let mut kappa = vec![LaurentPoly::one(); n];
        let mut p = vec![0; n];
        for a in 0..n {
            match mp[a] {
                None => {
                    let i = rs.root(a).iter().position(|&c| c == 1).unwrap();
                    word[a] = vec![i as u8 + 1];
                }
                Some(MinimalPair { beta, gamma }) => {
                    p[a] = p_max_ids(rs, beta, gamma);
                    word[a] = word[gamma].iter().chain(&word[beta]).copied().collect();
                    kappa[a] = &(&qint(p[a] + 1) * &kappa[beta]) * &kappa[gamma];
                }
            }
        }
        Self { mp, p, word, kappa }
    }
}

/// `[lambda]!`, `s_lambda`, `kappa_lambda` and `i_lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KpScalars {
    pub factorial: LaurentPoly,
    pub s: i32,
    pub kappa: LaurentPoly,
    pub word: Word,
}

pub fn kp_scalars(rs: &RootSystem, words: &RootWords, lam: &KostantPartition) -> KpScalars {
    let mut factorial = LaurentPoly::one();
    let mut s = 0;
    for (&b, &m) in &lam.multiplicities() {
        let d = rs.d_root(b);
        factorial = &factorial * &qfactorial_d(m, d);
        s += d * (m as i32) * (m as i32 - 1) / 2;
    }
    let mut kappa = factorial.clone();
    let mut word = Vec::new();
    for &p in &lam.parts {
        kappa = &kappa * &words.kappa[p];
        word.extend_from_slice(&words.word[p]);
    }
    KpScalars { factorial, s, kappa, word }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex_order::lyndon_order;
    use crate::root_data::{build_root_system, CartanType, Family};

    fn rs(f: Family, r: usize) -> RootSystem {
        build_root_system(CartanType::new(f, r).unwrap()).unwrap()
    }

    #[test]
    fn a2_partitions_and_order() {
        let a2 = rs(Family::A, 2);
        let o = lyndon_order(&a2).unwrap();
        let kps = kostant_partitions(&a2, &o, &[1, 1]);
        assert_eq!(kps.len(), 2);
        let single = KostantPartition { parts: vec![a2.highest_root()] };
        let split = KostantPartition::new(&o, vec![a2.simple(1), a2.simple(2)]);
        assert_eq!(split.parts, vec![a2.simple(2), a2.simple(1)]);
        assert!(kps.contains(&single) && kps.contains(&split));
        assert!(kp_less(&a2, &o, &single, &split).unwrap());
        assert!(!kp_less(&a2, &o, &split, &single).unwrap());
        assert!(!kp_less(&a2, &o, &single, &single).unwrap());
        assert!(kp_less(&a2, &o, &single, &KostantPartition { parts: vec![a2.simple(1)] }).is_err());
    }

    #[test]
    fn a3_highest_root_has_four_partitions() {
        let a3 = rs(Family::A, 3);
        let o = lyndon_order(&a3).unwrap();
        assert_eq!(kostant_partitions(&a3, &o, &[1, 1, 1]).len(), 4);
        assert_eq!(kostant_partitions(&a3, &o, &[2, 0, 0]).len(), 1);
        assert_eq!(kostant_partitions(&a3, &o, &[0, 0, 0]), vec![KostantPartition { parts: vec![] }]);
    }

    #[test]
    fn scalars() {
        let a2 = rs(Family::A, 2);
        let o = lyndon_order(&a2).unwrap();
        let w = RootWords::new(&a2, &o).unwrap();
        let sc = kp_scalars(&a2, &w, &KostantPartition::new(&o, vec![a2.simple(1), a2.simple(2)]));
        assert_eq!(sc, KpScalars { factorial: LaurentPoly::one(), s: 0, kappa: LaurentPoly::one(), word: vec![2, 1] });
        let twice = kp_scalars(&a2, &w, &KostantPartition::new(&o, vec![a2.simple(1), a2.simple(1)]));
        assert_eq!(twice.s, 1);
        assert_eq!(twice.factorial, qint(2));

        let g2 = rs(Family::G, 2);
        let o = lyndon_order(&g2).unwrap();
        let w = RootWords::new(&g2, &o).unwrap();
        let a = g2.root_id(&[3, 1]).unwrap();
        let sc = kp_scalars(&g2, &w, &KostantPartition { parts: vec![a] });
        assert_eq!(sc.kappa, &qint(2) * &qint(3));
        assert_eq!(sc.word, vec![1, 1, 1, 2]);
    }
}
