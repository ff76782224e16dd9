//! Characters of dual root vectors, dual PBW monomials (proper standard
//! modules), standard modules, and the graded dimension of `H_alpha`.

use crate::convex_order::{ConvexOrder, MinimalPair};
use crate::error::{Error, Result};
use crate::kostant::{kostant_partitions, kp_scalars, KostantPartition, RootWords};
use crate::laurent::LaurentPoly;
use crate::root_data::{RootId, RootSystem};
use crate::series::PowerSeries;
use crate::shuffle::{deg_perm, permute_word, shuffle, shuffle_all, ShuffleElement, Word};
use std::collections::BTreeMap;

/// A character whose coefficients are truncated series.
pub type SeriesCharacter = BTreeMap<Word, PowerSeries>;

/// Dual root vector characters under a fixed convex order and choice of
/// minimal pairs.
#[derive(Clone, Debug)]
pub struct DualPbw<'a> {
    pub rs: &'a RootSystem,
    pub order: ConvexOrder,
    pub words: RootWords,
    roots: Vec<ShuffleElement>,
}

impl<'a> DualPbw<'a> {
    /// Uses `mp_choice` for every root.
    pub fn new(rs: &'a RootSystem, order: &ConvexOrder) -> Result<Self> {
        let words = RootWords::new(rs, order)?;
        Self::with_words(rs, order, words)
    }

    /// Uses an explicit choice of minimal pair for each non-simple root.
    pub fn with_pairs(rs: &'a RootSystem, order: &ConvexOrder, mp: Vec<Option<MinimalPair>>) -> Result<Self> {
        Self::with_words(rs, order, RootWords::with_pairs(rs, mp))
    }

    fn with_words(rs: &'a RootSystem, order: &ConvexOrder, words: RootWords) -> Result<Self> {
        let n = rs.num_positive();
        let mut roots: Vec<ShuffleElement> = Vec::with_capacity(n);
        for a in 0..n {
            let ch = match words.mp[a] {
                None => ShuffleElement::word(words.word[a].clone()),
                Some(MinimalPair { beta, gamma }) => {
                    scale_factor_quotient(rs, &roots[beta], &roots[gamma], beta, gamma, words.p[a])
                        .ok_or_else(|| Error::InexactDivision { root: rs.root_label(a) })?
                }
            };
            roots.push(ch);
        }
        Ok(Self { rs, order: order.clone(), words, roots })
    }

    /// `Ch r*_alpha`, which is also `Ch L(alpha)`.
    pub fn ch_dual_root(&self, a: RootId) -> &ShuffleElement {
        &self.roots[a]
    }

    /// `q^{s_lambda} Ch L(lambda_1) o ... o Ch L(lambda_l)`.
    pub fn ch_proper_standard(&self, lam: &KostantPartition) -> ShuffleElement {
        let parts: Vec<&ShuffleElement> = lam.parts.iter().map(|&p| &self.roots[p]).collect();
        let s = kp_scalars(self.rs, &self.words, lam).s;
        shuffle_all(self.rs, &parts).shift(s)
    }

    /// `prod_{beta, 1 <= r <= m_beta} (1 - q_beta^{2r})` as the list of
    /// exponents `2 r d_beta`.
    fn standard_denominator(&self, lam: &KostantPartition) -> Vec<i32> {
        let mut out = Vec::new();
        for (&b, &m) in &lam.multiplicities() {
            let d = self.rs.d_root(b);
            out.extend((1..=m as i32).map(|r| 2 * r * d));
        }
        out
    }

    /// Word-by-word character of the standard module `Delta(lambda)`.
    pub fn dim_standard(&self, lam: &KostantPartition, trunc: i32) -> SeriesCharacter {
        let den = self.standard_denominator(lam);
        self.ch_proper_standard(lam)
            .iter()
            .map(|(w, c)| (w.clone(), divide_geometric(c, &den, trunc)))
            .collect()
    }

    /// Graded dimension of `Delta(lambda)` up to degree `trunc`.
    pub fn graded_dim_standard(&self, lam: &KostantPartition, trunc: i32) -> PowerSeries {
        divide_geometric(&self.ch_proper_standard(lam).total(), &self.standard_denominator(lam), trunc)
    }

    /// `sum_lambda Dim Delta(lambda) * Dim proper-Delta(lambda)` over `KP(alpha)`.
    pub fn sum_standard_products(&self, weight: &[i32], trunc: i32) -> PowerSeries {
        let mut total = PowerSeries::zero(trunc);
        for lam in kostant_partitions(self.rs, &self.order, weight) {
            let proper = self.ch_proper_standard(&lam).total();
            let sq = &proper * &proper;
            total = total.add(&divide_geometric(&sq, &self.standard_denominator(&lam), trunc));
        }
        total
    }
}

/// Solves `r*_gamma r*_beta - q^{-beta.gamma} r*_beta r*_gamma =
/// q^{-p}(1 - q^{2(p - beta.gamma)}) r*_alpha` for `r*_alpha`.
pub fn scale_factor_quotient(
    rs: &RootSystem,
    ch_beta: &ShuffleElement,
    ch_gamma: &ShuffleElement,
    beta: RootId,
    gamma: RootId,
    p: i32,
) -> Option<ShuffleElement> {
    let bg = rs.root_dot(beta, gamma);
    let lhs = shuffle(rs, ch_gamma, ch_beta).sub(&shuffle(rs, ch_beta, ch_gamma).shift(-bg));
    let den = LaurentPoly::from_terms([(-p, 1), (p - 2 * bg, -1)]);
    lhs.div_exact(&den)
}

/// Expands `num / prod_e (1 - q^e)` as a series known up to `trunc`.
pub fn divide_geometric(num: &LaurentPoly, exps: &[i32], trunc: i32) -> PowerSeries {
    exps.iter().fold(PowerSeries::from_laurent(num, trunc), |s, &e| s.div_one_minus_q_pow(e))
}

/// All words with the given letter multiplicities, in lexicographic order.
pub fn words_of_weight(weight: &[i32]) -> Vec<Word> {
    fn rec(rem: &mut [i32], cur: &mut Word, n: usize, out: &mut Vec<Word>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..rem.len() {
            if rem[i] > 0 {
                rem[i] -= 1;
                cur.push(i as u8 + 1);
                rec(rem, cur, n, out);
                cur.pop();
                rem[i] += 1;
            }
        }
    }
    let n = weight.iter().sum::<i32>() as usize;
    let mut out = Vec::new();
    rec(&mut weight.to_vec(), &mut Vec::new(), n, &mut out);
    out
}

/// All permutations of `0..n` in one-line notation.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                rec(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Largest height for which `dim_h` enumerates `S_n` directly.
pub const DIM_H_MAX_HEIGHT: usize = 8;

/// Graded dimension of `H_alpha` from the monomial basis
/// `x^k tau_w 1_i`.
pub fn dim_h(rs: &RootSystem, weight: &[i32], trunc: i32) -> Result<PowerSeries> {
    let n = weight.iter().sum::<i32>() as usize;
    if n > DIM_H_MAX_HEIGHT {
        return Err(Error::HeightTooLarge(n));
    }
    let perms = permutations(n);
    let mut num = BTreeMap::<i32, i64>::new();
    for i in words_of_weight(weight) {
        for w in &perms {
            *num.entry(deg_perm(rs, w, &i)).or_insert(0) += 1;
        }
    }
    let den: Vec<i32> = weight
        .iter()
        .enumerate()
        .flat_map(|(k, &m)| std::iter::repeat_n(2 * rs.d[k], m as usize))
        .collect();
    Ok(divide_geometric(&LaurentPoly::from_terms(num), &den, trunc))
}

/// Character of the projective module `H_alpha 1_j`: the coefficient of
/// `i` is `sum_{w(j) = i} q^{deg(w; j)} / prod_k (1 - q^{2 d_{j_k}})`.
pub fn ch_projective(rs: &RootSystem, j: &[u8], trunc: i32) -> SeriesCharacter {
    let mut nums: BTreeMap<Word, Vec<(i32, i64)>> = BTreeMap::new();
    for w in permutations(j.len()) {
        nums.entry(permute_word(&w, j)).or_default().push((deg_perm(rs, &w, j), 1));
    }
    let den: Vec<i32> = j.iter().map(|&l| 2 * rs.letter_d(l)).collect();
    nums.into_iter()
        .map(|(i, t)| (i, divide_geometric(&LaurentPoly::from_terms(t), &den, trunc)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex_order::lyndon_order;
    use crate::laurent::qint;
    use crate::root_data::{build_root_system, CartanType, Family};

    fn rs(f: Family, r: usize) -> RootSystem {
        build_root_system(CartanType::new(f, r).unwrap()).unwrap()
    }

    #[test]
    fn a2_dual_roots() {
        let a2 = rs(Family::A, 2);
        let o = lyndon_order(&a2).unwrap();
        let t = DualPbw::new(&a2, &o).unwrap();
        assert_eq!(t.ch_dual_root(a2.highest_root()), &ShuffleElement::word(vec![1, 2]));
        assert_eq!(t.ch_dual_root(a2.simple(2)), &ShuffleElement::word(vec![2]));
    }

    #[test]
    fn g2_long_dual_root() {
        let g2 = rs(Family::G, 2);
        let o = lyndon_order(&g2).unwrap();
        let t = DualPbw::new(&g2, &o).unwrap();
        let a = g2.root_id(&[3, 1]).unwrap();
        assert_eq!(t.ch_dual_root(a), &ShuffleElement::term(vec![1, 1, 1, 2], &qint(2) * &qint(3)));
    }

    #[test]
    fn proper_standard_characters() {
        let a2 = rs(Family::A, 2);
        let o = lyndon_order(&a2).unwrap();
        let t = DualPbw::new(&a2, &o).unwrap();
        let lam = KostantPartition::new(&o, vec![a2.simple(1), a2.simple(2)]);
        let mut expect = ShuffleElement::word(vec![2, 1]);
        expect.add_term(vec![1, 2], &LaurentPoly::q_pow(1));
        assert_eq!(t.ch_proper_standard(&lam), expect);

        let a1 = rs(Family::A, 1);
        let o1 = lyndon_order(&a1).unwrap();
        let t1 = DualPbw::new(&a1, &o1).unwrap();
        let sq = KostantPartition { parts: vec![0, 0] };
        assert_eq!(t1.ch_proper_standard(&sq), ShuffleElement::term(vec![1, 1], qint(2)));
    }

    #[test]
    fn small_dimension_series() {
        let a1 = rs(Family::A, 1);
        let h1 = dim_h(&a1, &[1], 6).unwrap();
        assert_eq!(h1.known(), &LaurentPoly::from_terms([(0, 1), (2, 1), (4, 1), (6, 1)]));
        // (1 + q^-2) / (1 - q^2)^2
        let h2 = dim_h(&a1, &[2], 4).unwrap();
        let expect = divide_geometric(&LaurentPoly::from_terms([(0, 1), (-2, 1)]), &[2, 2], 4);
        assert_eq!(h2, expect);
        let o = lyndon_order(&a1).unwrap();
        let t = DualPbw::new(&a1, &o).unwrap();
        assert!(t.sum_standard_products(&[2], 4).agrees_up_to(&h2, 4));
        assert!(dim_h(&a1, &[9], 4).is_err());
    }
}
