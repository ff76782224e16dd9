//! Dual canonical basis characters via Leclerc's correction algorithm.

use crate::error::{Error, Result};
use crate::kostant::{kostant_partitions, kp_less_unchecked, kp_scalars, KostantPartition};
use crate::laurent::LaurentPoly;
use crate::pbw::DualPbw;
use crate::root_data::{RootSystem, RootVec};
use crate::shuffle::ShuffleElement;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

/// The unique `c in qZ[q]` making `a - c * kappa` bar-invariant.
pub fn correction(a: &LaurentPoly, kappa: &LaurentPoly) -> Result<LaurentPoly> {
    let (Some(top), Some(bottom)) = (kappa.max_exp(), kappa.min_exp()) else {
        return Err(Error::NoCorrection("kappa is zero".into()));
    };
    if !kappa.is_bar_invariant() || top != -bottom {
        return Err(Error::NoCorrection(format!("kappa {kappa} is not bar-invariant")));
    }
    let lead = kappa.coeff(top);
    let mut c = LaurentPoly::zero();
    let mut rest = a.clone();
    while let Some(e) = asymmetric_top(&rest) {
        let delta = rest.coeff(e) - rest.coeff(-e);
        let s = e - top;
        if s < 1 || delta % lead != 0 {
            return Err(Error::NoCorrection(format!(
                "a = {a}, kappa = {kappa}: exponent {e} (delta {delta}) cannot be cancelled"
            )));
        }
        let step = LaurentPoly::monomial(delta / lead, s);
        rest = &rest - &(&step * kappa);
        c = &c + &step;
    }
    Ok(c)
}

/// Largest `e > 0` with `coeff(e) != coeff(-e)`.
fn asymmetric_top(p: &LaurentPoly) -> Option<i32> {
    let hi = p.max_exp()?.max(-p.min_exp()?);
    (1..=hi).rev().find(|&e| p.coeff(e) != p.coeff(-e))
}

/// Memoised `Ch b*_lambda` under a fixed convex order.
pub struct CanonicalTable<'p, 'a> {
    pbw: &'p DualPbw<'a>,
    entries: BTreeMap<KostantPartition, ShuffleElement>,
    partitions: BTreeMap<RootVec, Vec<KostantPartition>>,
}

/// Outcome of one run of the correction loop.
#[derive(Clone, Debug)]
pub struct LeclercRun {
    pub character: ShuffleElement,
    pub corrections: usize,
}

impl<'p, 'a> CanonicalTable<'p, 'a> {
    pub fn new(pbw: &'p DualPbw<'a>) -> Self {
        Self { pbw, entries: BTreeMap::new(), partitions: BTreeMap::new() }
    }

    fn rs(&self) -> &'a RootSystem {
        self.pbw.rs
    }

    /// `KP(weight)` in increasing linear-extension order.
    pub fn partitions(&mut self, weight: &[i32]) -> Vec<KostantPartition> {
        let (rs, order) = (self.rs(), &self.pbw.order);
        self.partitions
            .entry(weight.to_vec())
            .or_insert_with(|| kostant_partitions(rs, order, weight))
            .clone()
    }

    /// `Ch b*_lambda`, computing lower entries on demand.
    pub fn get(&mut self, lam: &KostantPartition) -> Result<ShuffleElement> {
        if let Some(ch) = self.entries.get(lam) {
            return Ok(ch.clone());
        }
        let run = self.leclerc_from(lam, self.pbw.ch_proper_standard(lam))?;
        self.entries.insert(lam.clone(), run.character.clone());
        Ok(run.character)
    }

    /// Runs the correction loop starting from `start` (normally `Ch r*_lambda`).
    pub fn leclerc_from(&mut self, lam: &KostantPartition, start: ShuffleElement) -> Result<LeclercRun> {
        let rs = self.rs();
        let below: Vec<KostantPartition> = self
            .partitions(&lam.weight(rs))
            .into_iter()
            .rev()
            .filter(|mu| kp_less_unchecked(&self.pbw.order, mu, lam))
            .collect();
        let scalars: Vec<_> = below.iter().map(|mu| kp_scalars(rs, &self.pbw.words, mu)).collect();
        let span = start.iter().filter_map(|(_, c)| Some(c.max_exp()? - c.min_exp()?)).max().unwrap_or(0);
        let cap = (below.len() + 1) * (span as usize + 1);

        let mut chi = start;
        let mut corrections = 0;
        loop {
            let hit = below.iter().zip(&scalars).find_map(|(mu, sc)| {
                let a = chi.coeff(&sc.word);
                (!a.is_bar_invariant()).then(|| (mu.clone(), a, sc.kappa.clone()))
            });
            let Some((mu, a, kappa)) = hit else { break };
            if corrections >= cap {
                return Err(Error::IterationBound(format!("{} after {cap} corrections", lam.label(rs))));
            }
            let c = correction(&a, &kappa)
                .map_err(|e| Error::NoCorrection(format!("at {} below {}: {e}", mu.label(rs), lam.label(rs))))?;
            let b_mu = self.get(&mu)?;
            chi = chi.sub(&b_mu.scale(&c));
            corrections += 1;
        }
        if !chi.is_bar_invariant() {
            return Err(Error::NoCorrection(format!("result for {} is not bar-invariant", lam.label(rs))));
        }
        Ok(LeclercRun { character: chi, corrections })
    }

    /// `Ch b*_lambda` for every `lambda in KP(weight)`, lowest first.
    pub fn compute_weight(&mut self, weight: &[i32]) -> Result<Vec<(KostantPartition, ShuffleElement)>> {
        self.partitions(weight).into_iter().map(|lam| Ok((lam.clone(), self.get(&lam)?))).collect()
    }

    /// Writes `chi = sum_mu c_mu Ch r*_mu`, reading coefficients off the
    /// words `i_mu` from the top of the linear extension down.
    pub fn expand_in_dual_pbw(&mut self, chi: &ShuffleElement) -> Result<Vec<(KostantPartition, LaurentPoly)>> {
        let rs = self.rs();
        let Some(weight) = chi.weight(rs) else { return Ok(Vec::new()) };
        let mut rest = chi.clone();
        let mut out = Vec::new();
        for mu in self.partitions(&weight).into_iter().rev() {
            let sc = kp_scalars(rs, &self.pbw.words, &mu);
            let a = rest.coeff(&sc.word);
            if a.is_zero() {
                continue;
            }
            let c = a.div_exact(&sc.kappa).ok_or_else(|| Error::InexactDivision { root: mu.label(rs) })?;
            rest = rest.sub(&self.pbw.ch_proper_standard(&mu).scale(&c));
            out.push((mu, c));
        }
        if !rest.is_zero() {
            return Err(Error::Precondition("character is not in the span of dual PBW monomials".into()));
        }
        out.reverse();
        Ok(out)
    }

    fn cache_path(&self, dir: &Path) -> PathBuf {
        dir.join(format!("{}-{}.json", self.rs().cartan_type, self.pbw.order.fingerprint()))
    }

    pub fn to_json(&self) -> Value {
        let rs = self.rs();
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(kp, ch)| json!({"kp": kp.to_json(rs), "character": ch.to_json()}))
            .collect();
        json!({
            "type": rs.cartan_type.to_string(),
            "ordering": self.pbw.order.fingerprint(),
            "entries": entries,
        })
    }

    /// Persists all computed entries to `dir`.
    pub fn save(&self, dir: &Path) -> Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = self.cache_path(dir);
        fs::write(&path, serde_json::to_string_pretty(&self.to_json())?)?;
        Ok(path)
    }

    /// Loads previously saved entries; returns how many were read.
    pub fn load(&mut self, dir: &Path) -> Result<usize> {
        let path = self.cache_path(dir);
        if !path.exists() {
            return Ok(0);
        }
        let doc: Value = serde_json::from_str(&fs::read_to_string(&path)?)?;
        let bad = || Error::Precondition(format!("malformed cache {}", path.display()));
        let rs = self.rs();
        let mut n = 0;
        for e in doc["entries"].as_array().ok_or_else(bad)? {
            let parts = e["kp"]
                .as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|v| {
                    let root: Option<RootVec> = serde_json::from_value(v.clone()).ok();
                    root.and_then(|r| rs.root_id(&r)).ok_or_else(bad)
                })
                .collect::<Result<Vec<_>>>()?;
            let kp = KostantPartition::new(&self.pbw.order, parts);
            self.entries.insert(kp, ShuffleElement::from_json(&e["character"])?);
            n += 1;
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex_order::lyndon_order;
    use crate::laurent::qint;
    use crate::root_data::{build_root_system, CartanType, Family};

    #[test]
    fn correction_examples() {
        let q = LaurentPoly::q_pow(1);
        assert_eq!(correction(&q, &LaurentPoly::one()).unwrap(), q);
        assert!(correction(&qint(2), &qint(2)).unwrap().is_zero());
        let a = LaurentPoly::from_terms([(3, 1), (1, 1)]);
        assert_eq!(correction(&a, &qint(2)).unwrap(), LaurentPoly::q_pow(2));
        let a = LaurentPoly::from_terms([(1, 1)]);
        assert!(correction(&a, &qint(2)).is_err());
    }

    #[test]
    fn g2_small_entries() {
        let g2 = build_root_system(CartanType::new(Family::G, 2).unwrap()).unwrap();
        let o = lyndon_order(&g2).unwrap();
        let pbw = DualPbw::new(&g2, &o).unwrap();
        let mut t = CanonicalTable::new(&pbw);
        let lam = KostantPartition::new(&o, vec![g2.simple(1), g2.simple(2)]);
        assert_eq!(t.get(&lam).unwrap(), ShuffleElement::word(vec![2, 1]));
        let run = t.leclerc_from(&lam, ShuffleElement::word(vec![2, 1])).unwrap();
        assert_eq!(run.corrections, 0);
    }
}
