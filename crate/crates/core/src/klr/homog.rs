//! Homogeneous representations: `x`'s act as zero and `tau_k` swaps two
//! unconnected letters (or kills the vector).

use crate::error::{Error, Result};
use crate::pbw::DualPbw;
use crate::root_data::{RootId, RootSystem};
use crate::shuffle::{word_to_string, ShuffleElement, Word};
use std::collections::{BTreeSet, HashSet};

#[derive(Clone, Debug)]
pub struct HomogRep {
    /// The equivalence class of the defining word, sorted.
    pub basis: Vec<Word>,
    members: HashSet<Word>,
    prefixes: HashSet<Word>,
}

fn commute(rs: &RootSystem, a: u8, b: u8) -> bool {
    a != b && rs.letter_dot(a, b) == 0
}

impl HomogRep {
    /// The representation on the class of `word` under swaps of adjacent
    /// unconnected letters; fails unless the word is homogeneous.
    pub fn new(rs: &RootSystem, word: &[u8]) -> Result<Self> {
        let mut seen = BTreeSet::from([word.to_vec()]);
        let mut stack = vec![word.to_vec()];
        while let Some(w) = stack.pop() {
            if w.windows(2).any(|p| p[0] == p[1]) || w.windows(3).any(|p| p[0] == p[2]) {
                return Err(Error::Unsupported(format!("word {} is not homogeneous", word_to_string(word))));
            }
            for k in 0..w.len().saturating_sub(1) {
                if commute(rs, w[k], w[k + 1]) {
                    let mut v = w.clone();
                    v.swap(k, k + 1);
                    if seen.insert(v.clone()) {
                        stack.push(v);
                    }
                }
            }
        }
        let members: HashSet<Word> = seen.iter().cloned().collect();
        let prefixes = members.iter().flat_map(|w| (0..=w.len()).map(|k| w[..k].to_vec())).collect();
        Ok(Self { basis: seen.into_iter().collect(), members, prefixes })
    }

    /// The cuspidal module `L(alpha)` for the given dual PBW data, provided its
    /// character is the sum of a homogeneous class.
    pub fn cuspidal(pbw: &DualPbw, alpha: RootId) -> Result<Self> {
        let rep = Self::new(pbw.rs, &pbw.words.word[alpha])?;
        if &rep.character() != pbw.ch_dual_root(alpha) {
            return Err(Error::Unsupported(format!(
                "cuspidal module for {} is not a homogeneous representation",
                pbw.rs.root_label(alpha)
            )));
        }
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, w: &[u8]) -> bool {
        self.members.contains(w)
    }

    pub fn is_prefix(&self, w: &[u8]) -> bool {
        self.prefixes.contains(w)
    }

    /// `tau_k v_w` (0-based `k`), `None` meaning zero.
    pub fn tau(&self, rs: &RootSystem, k: usize, w: &[u8]) -> Option<Word> {
        commute(rs, w[k], w[k + 1]).then(|| {
            let mut v = w.to_vec();
            v.swap(k, k + 1);
            v
        })
    }

    pub fn character(&self) -> ShuffleElement {
        let mut ch = ShuffleElement::zero();
        for w in &self.basis {
            ch.add_term(w.clone(), &crate::laurent::LaurentPoly::one());
        }
        ch
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex_order::lyndon_order;
    use crate::root_data::{build_root_system, CartanType, Family};

    #[test]
    fn d4_highest_root_class() {
        let d4 = build_root_system(CartanType::new(Family::D, 4).unwrap()).unwrap();
        let o = lyndon_order(&d4).unwrap();
        let pbw = DualPbw::new(&d4, &o).unwrap();
        for a in 0..d4.num_positive() {
            let rep = HomogRep::cuspidal(&pbw, a).unwrap();
            assert!(rep.contains(&pbw.words.word[a]));
        }
        let rep = HomogRep::new(&d4, &[1, 2, 4, 3, 2]).unwrap();
        assert_eq!(rep.dim(), 2);
        assert_eq!(rep.tau(&d4, 2, &[1, 2, 4, 3, 2]), Some(vec![1, 2, 3, 4, 2]));
        assert_eq!(rep.tau(&d4, 0, &[1, 2, 4, 3, 2]), None);
        assert!(HomogRep::new(&d4, &[1, 1]).is_err());
    }
}
