//! Explicit projective resolutions of root modules for multiplicity-free
//! positive roots.

use crate::error::{Error, Result};
use crate::klr::perm::Perm;
use crate::klr::{KlrAlgebra, KlrElement, Monomial};
use crate::kostant::RootWords;
use crate::laurent::LaurentPoly;
use crate::pbw::{ch_projective, SeriesCharacter};
use crate::root_data::{RootId, RootSystem};
use crate::shuffle::{word_to_string, Word};
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

/// One summand `q^shift H_alpha 1_word` of the resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionIndex {
    pub sigma: Vec<u8>,
    pub word: Word,
    pub shift: i32,
}

impl ResolutionIndex {
    pub fn degree(&self) -> usize {
        self.sigma.iter().map(|&s| s as usize).sum()
    }
}

/// A bounded complex of projectives. `differentials[d - 1]` is the matrix of
/// `P_d -> P_{d-1}`, rows indexed by `terms[d]` and columns by
/// `terms[d - 1]`, acting by right multiplication on row vectors.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub alpha: RootId,
    pub terms: Vec<Vec<ResolutionIndex>>,
    pub differentials: Vec<Vec<Vec<KlrElement>>>,
}

/// Word and shift for `sigma`, following the split at `m = ht(gamma)`.
fn index_data(rs: &RootSystem, words: &RootWords, alpha: RootId, sigma: &[u8]) -> Result<(Word, i32)> {
    let Some(mp) = words.mp[alpha] else {
        return Ok((words.word[alpha].clone(), 0));
    };
    let m = rs.height(mp.gamma);
    if sigma.len() + 1 != rs.height(alpha) {
        return Err(Error::Precondition(format!("sigma has length {}, expected {}", sigma.len(), rs.height(alpha) - 1)));
    }
    let (wg, dg) = index_data(rs, words, mp.gamma, &sigma[..m - 1])?;
    let (wb, db) = index_data(rs, words, mp.beta, &sigma[m..])?;
    Ok(if sigma[m - 1] == 0 {
        (wg.into_iter().chain(wb).collect(), db + dg)
    } else {
        (wb.into_iter().chain(wg).collect(), db + dg - rs.root_dot(mp.beta, mp.gamma))
    })
}

/// The summand attached to `sigma`.
pub fn resolution_index(rs: &RootSystem, words: &RootWords, alpha: RootId, sigma: &[u8]) -> Result<ResolutionIndex> {
    let (word, shift) = index_data(rs, words, alpha, sigma)?;
    Ok(ResolutionIndex { sigma: sigma.to_vec(), word, shift })
}

/// The unique `w` with `w(from) = to`; fails if it is not unique.
fn unique_perm(from: &[u8], to: &[u8]) -> Result<Perm> {
    let mut sorted = from.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::Precondition(format!("word {} has a repeated letter", word_to_string(from))));
    }
    from.iter()
        .map(|l| to.iter().position(|t| t == l).map(|p| p as u8))
        .collect::<Option<Perm>>()
        .ok_or_else(|| Error::WeightMismatch(format!("{} vs {}", word_to_string(from), word_to_string(to))))
}

/// `P_*(alpha)` with the closed-form differential entries
/// `(-1)^{sigma_1 + ... + sigma_{r-1}} tau_w`.
pub fn resolution(rs: &RootSystem, words: &RootWords, alpha: RootId) -> Result<ChainComplex> {
    if !rs.is_multiplicity_free(alpha) {
        return Err(Error::Unsupported(format!(
            "{} is not multiplicity-free; no closed form for the differentials",
            rs.root_label(alpha)
        )));
    }
    let len = rs.height(alpha) - 1;
    let mut terms = vec![Vec::new(); len + 1];
    // Ascending binary integers, sigma_1 the least significant bit.
    for k in 0u64..(1 << len) {
        let sigma: Vec<u8> = (0..len).map(|j| ((k >> j) & 1) as u8).collect();
        let idx = resolution_index(rs, words, alpha, &sigma)?;
        terms[idx.degree()].push(idx);
    }
    let mut differentials = Vec::with_capacity(len);
    for d in 1..=len {
        let mut matrix = Vec::with_capacity(terms[d].len());
        for s in &terms[d] {
            let mut row = Vec::with_capacity(terms[d - 1].len());
            for r in &terms[d - 1] {
                let diff: Vec<usize> = (0..len).filter(|&j| s.sigma[j] != r.sigma[j]).collect();
                let entry = if let [j] = diff[..] {
                    let sign = if s.sigma[..j].iter().filter(|&&b| b == 1).count() % 2 == 0 { 1 } else { -1 };
                    let w = unique_perm(&r.word, &s.word)?;
                    KlrElement::monomial(Monomial { x: vec![0; r.word.len()], w, word: r.word.clone() }, sign)
                } else {
                    KlrElement::zero()
                };
                row.push(entry);
            }
            matrix.push(row);
        }
        differentials.push(matrix);
    }
    Ok(ChainComplex { alpha, terms, differentials })
}

impl ChainComplex {
    /// Largest homological degree with a nonzero term.
    pub fn length(&self) -> usize {
        self.terms.iter().rposition(|t| !t.is_empty()).unwrap_or(0)
    }

    /// `M_d M_{d-1}` for `d >= 2`, entry by entry.
    pub fn composite(&self, h: &KlrAlgebra, d: usize) -> Result<Vec<Vec<KlrElement>>> {
        let (a, b) = (&self.differentials[d - 1], &self.differentials[d - 2]);
        let cells: Vec<(usize, usize)> =
            (0..a.len()).flat_map(|i| (0..self.terms[d - 2].len()).map(move |k| (i, k))).collect();
        let values: Vec<KlrElement> = cells
            .par_iter()
            .map(|&(i, k)| {
                let mut acc = KlrElement::zero();
                for (j, bj) in b.iter().enumerate() {
                    if !a[i][j].is_zero() && !bj[k].is_zero() {
                        acc.add_scaled(&h.multiply(&a[i][j], &bj[k])?, 1);
                    }
                }
                Ok(acc)
            })
            .collect::<Result<_>>()?;
        let cols = self.terms[d - 2].len();
        Ok(values.chunks(cols.max(1)).map(<[KlrElement]>::to_vec).collect())
    }

    /// Flips the sign of one random nonzero differential entry.
    pub fn corrupt_sign<R: Rng>(&mut self, rng: &mut R) -> bool {
        let cells: Vec<(usize, usize, usize)> = self
            .differentials
            .iter()
            .enumerate()
            .flat_map(|(d, m)| {
                m.iter().enumerate().flat_map(move |(i, row)| {
                    row.iter().enumerate().filter(|(_, e)| !e.is_zero()).map(move |(j, _)| (d, i, j))
                })
            })
            .collect();
        if cells.is_empty() {
            return false;
        }
        let (d, i, j) = cells[rng.gen_range(0..cells.len())];
        self.differentials[d][i][j] = self.differentials[d][i][j].scale(-1);
        true
    }

    /// Alternating sum of the characters of the terms.
    pub fn euler_character(&self, rs: &RootSystem, trunc: i32) -> SeriesCharacter {
        let mut out = SeriesCharacter::new();
        for (d, term) in self.terms.iter().enumerate() {
            let sign = if d % 2 == 0 { 1 } else { -1 };
            for idx in term {
                let factor = LaurentPoly::monomial(sign, idx.shift);
                for (w, s) in ch_projective(rs, &idx.word, trunc) {
                    let add = s.mul_laurent(&factor).truncate(trunc);
                    let e = out.entry(w).or_insert_with(|| crate::series::PowerSeries::zero(trunc));
                    *e = e.add(&add);
                }
            }
        }
        out.retain(|_, s| !s.known().is_zero());
        out
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .enumerate()
            .map(|(d, t)| {
                let summands: Vec<Value> =
                    t.iter().map(|i| json!({ "shift": i.shift, "word": word_to_string(&i.word) })).collect();
                json!({ "d": d, "summands": summands })
            })
            .collect();
        let differentials: Vec<Value> = self
            .differentials
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let matrix: Vec<Value> =
                    m.iter().map(|row| Value::Array(row.iter().map(KlrElement::to_json).collect())).collect();
                json!({ "from": k + 1, "matrix": matrix })
            })
            .collect();
        json!({ "alpha": rs.root(self.alpha), "terms": terms, "differentials": differentials })
    }
}

/// True iff every composite of consecutive differentials is zero.
pub fn verify_complex(h: &KlrAlgebra, c: &ChainComplex) -> bool {
    (2..=c.differentials.len()).all(|d| {
        c.composite(h, d).is_ok_and(|m| m.iter().all(|row| row.iter().all(KlrElement::is_zero)))
    })
}

/// All-zero `sigma` recovers `i_alpha` with shift zero.
pub fn base_index_matches(rs: &RootSystem, words: &RootWords, alpha: RootId) -> Result<bool> {
    let idx = resolution_index(rs, words, alpha, &vec![0; rs.height(alpha) - 1])?;
    Ok(idx.word == words.word[alpha] && idx.shift == 0)
}

/// `tau_w 1_from` with `w(from) = to`, for callers building entries by hand.
pub fn tau_between(from: &[u8], to: &[u8]) -> Result<KlrElement> {
    let w = unique_perm(from, to)?;
    Ok(KlrElement::monomial(Monomial { x: vec![0; from.len()], w, word: from.to_vec() }, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex_order::lyndon_order;
    use crate::kostant::KostantPartition;
    use crate::pbw::DualPbw;
    use crate::root_data::{build_root_system, CartanType, Family};
    use rand::SeedableRng;

    fn rs(f: Family, r: usize) -> RootSystem {
        build_root_system(CartanType::new(f, r).unwrap()).unwrap()
    }

    #[test]
    fn a3_highest_root_complex() {
        let a3 = rs(Family::A, 3);
        let o = lyndon_order(&a3).unwrap();
        let words = RootWords::new(&a3, &o).unwrap();
        let c = resolution(&a3, &words, a3.highest_root()).unwrap();
        let show = |t: &[ResolutionIndex]| t.iter().map(|i| (word_to_string(&i.word), i.shift)).collect::<Vec<_>>();
        assert_eq!(show(&c.terms[0]), vec![("123".to_string(), 0)]);
        assert_eq!(show(&c.terms[1]), vec![("213".to_string(), 1), ("312".to_string(), 1)]);
        assert_eq!(show(&c.terms[2]), vec![("321".to_string(), 2)]);
        let m2 = &c.differentials[1];
        let mut t12 = tau_between(&[2, 1, 3], &[3, 2, 1]).unwrap().scale(-1);
        assert_eq!(m2[0][0], t12);
        assert_eq!(m2[0][1], tau_between(&[3, 1, 2], &[3, 2, 1]).unwrap());
        t12 = tau_between(&[1, 2, 3], &[3, 1, 2]).unwrap();
        assert_eq!(c.differentials[0][1][0], t12);
        assert_eq!(format!("{}", m2[0][0]), "(-1) t1 t2 1_213");
        let h = KlrAlgebra::new(&a3);
        assert!(verify_complex(&h, &c));
        let mut bad = c.clone();
        assert!(bad.corrupt_sign(&mut rand_chacha::ChaCha8Rng::seed_from_u64(7)));
        assert!(!verify_complex(&h, &bad));
        let pbw = DualPbw::new(&a3, &o).unwrap();
        let lam = KostantPartition::new(&o, vec![a3.highest_root()]);
        assert_eq!(c.euler_character(&a3, 12), pbw.dim_standard(&lam, 12));
    }

    #[test]
    fn simple_and_non_multiplicity_free() {
        let b2 = rs(Family::B, 2);
        let o = lyndon_order(&b2).unwrap();
        let words = RootWords::new(&b2, &o).unwrap();
        let c = resolution(&b2, &words, b2.simple(1)).unwrap();
        assert_eq!(c.length(), 0);
        assert!(c.differentials.is_empty());
        assert!(resolution(&b2, &words, b2.highest_root()).is_err());
    }
}
