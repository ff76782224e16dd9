//! Cartan data and positive roots for the finite types.
//!
//! Node numbering: A, B, C, F and G are chains `1 - 2 - ... - r`; in D_r the
//! node `r` hangs off `r-2`, in E_r the node `r` hangs off `r-3`. B_r has `r`
//! short, C_r has `r` long, F_4 has `1, 2` long and `3, 4` short, and G_2 has
//! `1` short and `2` long.

use crate::error::{Error, Result};
use crate::laurent::{qint, LaurentPoly};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            other => return Err(Error::InvalidCartanType(format!("unknown family {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok || rank > 15 {
            return Err(Error::InvalidCartanType(format!("{family:?}{rank}")));
        }
        Ok(Self { family, rank })
    }

    /// Symmetrizers `d_i = alpha_i . alpha_i / 2`, with minimal sum.
    fn symmetrizers(&self) -> Vec<i32> {
        let r = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![1; r],
            Family::B => (1..=r).map(|i| if i < r { 2 } else { 1 }).collect(),
            Family::C => (1..=r).map(|i| if i < r { 1 } else { 2 }).collect(),
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
        }
    }

    /// Edges of the Dynkin diagram as 1-based node pairs.
    fn edges(&self) -> Vec<(usize, usize)> {
        let r = self.rank;
        let chain = |len: usize| (1..len).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::D => {
                let mut e = chain(r - 1);
                e.push((r - 2, r));
                e
            }
            Family::E => {
                let mut e = chain(r - 1);
                e.push((r - 3, r));
                e
            }
            _ => chain(r),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// Index of a positive root in [`RootSystem::roots`].
pub type RootId = usize;

/// A root written in simple-root coordinates.
pub type RootVec = Vec<i32>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// `c_{i,j} = alpha_i . alpha_j / d_i` (0-based indices).
    pub cartan: Vec<Vec<i32>>,
    pub d: Vec<i32>,
    /// `alpha_i . alpha_j` (0-based indices).
    pub form: Vec<Vec<i32>>,
    /// Positive roots sorted by height, then coordinates.
    pub roots: Vec<RootVec>,
    index: HashMap<RootVec, RootId>,
}

pub fn build_root_system(t: CartanType) -> Result<RootSystem> {
    let t = CartanType::new(t.family, t.rank)?;
    let r = t.rank;
    let d = t.symmetrizers();
    let mut form = vec![vec![0i32; r]; r];
    for i in 0..r {
        form[i][i] = 2 * d[i];
    }
    for (a, b) in t.edges() {
        let v = -d[a - 1].max(d[b - 1]);
        form[a - 1][b - 1] = v;
        form[b - 1][a - 1] = v;
    }
    let cartan = (0..r).map(|i| (0..r).map(|j| form[i][j] / d[i]).collect()).collect();

    let simple: Vec<RootVec> = (0..r).map(|i| unit(r, i)).collect();
    let mut roots = simple.clone();
    let mut seen: std::collections::HashSet<RootVec> = simple.into_iter().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..r {
                let pairing: i32 = (0..r).map(|j| form[i][j] * beta[j]).sum::<i32>() / d[i];
                let mut img = beta.clone();
                img[i] -= pairing;
                if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) && seen.insert(img.clone()) {
                    next.push(img);
                }
            }
        }
        roots.extend(next.iter().cloned());
        frontier = next;
    }
    roots.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let index = roots.iter().enumerate().map(|(k, v)| (v.clone(), k)).collect();
    Ok(RootSystem { cartan_type: t, cartan, d, form, roots, index })
}

fn unit(r: usize, i: usize) -> RootVec {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn dot(&self, a: &[i32], b: &[i32]) -> i32 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            if a[i] == 0 {
                continue;
            }
            for j in 0..r {
                s += a[i] * self.form[i][j] * b[j];
            }
        }
        s
    }

    /// `alpha_i . alpha_j` for 1-based letters.
    pub fn letter_dot(&self, i: u8, j: u8) -> i32 {
        self.form[i as usize - 1][j as usize - 1]
    }

    /// `c_{i,j}` for 1-based letters.
    pub fn letter_cartan(&self, i: u8, j: u8) -> i32 {
        self.cartan[i as usize - 1][j as usize - 1]
    }

    /// `d_i` for a 1-based letter.
    pub fn letter_d(&self, i: u8) -> i32 {
        self.d[i as usize - 1]
    }

    pub fn root(&self, id: RootId) -> &RootVec {
        &self.roots[id]
    }

    pub fn root_id(&self, v: &[i32]) -> Option<RootId> {
        self.index.get(v).copied()
    }

    pub fn simple(&self, i: usize) -> RootId {
        self.root_id(&unit(self.rank(), i - 1)).expect("simple root")
    }

    /// Membership in the full root system (negative roots included).
    pub fn is_root(&self, v: &[i32]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        let neg: RootVec = v.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    pub fn height(&self, id: RootId) -> usize {
        self.roots[id].iter().sum::<i32>() as usize
    }

    pub fn root_dot(&self, a: RootId, b: RootId) -> i32 {
        self.dot(&self.roots[a], &self.roots[b])
    }

    /// `d_alpha = alpha . alpha / 2`.
    pub fn d_root(&self, a: RootId) -> i32 {
        self.root_dot(a, a) / 2
    }

    pub fn is_simple(&self, a: RootId) -> bool {
        self.height(a) == 1
    }

    /// The simple reflection `s_i` (1-based) applied to a lattice vector.
    pub fn reflect(&self, i: usize, v: &[i32]) -> RootVec {
        let k = i - 1;
        let pairing: i32 = (0..self.rank()).map(|j| self.form[k][j] * v[j]).sum::<i32>() / self.d[k];
        let mut out = v.to_vec();
        out[k] -= pairing;
        out
    }

    pub fn highest_root(&self) -> RootId {
        self.roots.len() - 1
    }

    /// A root is multiplicity-free when all its coordinates are 0 or 1.
    pub fn is_multiplicity_free(&self, a: RootId) -> bool {
        self.roots[a].iter().all(|&c| c <= 1)
    }

    /// The weight `sum_k alpha_{w_k}` of a word, in simple-root coordinates.
    pub fn weight_of_word(&self, w: &[u8]) -> RootVec {
        let mut v = vec![0; self.rank()];
        for &l in w {
            v[l as usize - 1] += 1;
        }
        v
    }

    /// Display form such as `a1+2a2`.
    pub fn root_label(&self, a: RootId) -> String {
        let parts: Vec<String> = self.roots[a]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { format!("a{}", i + 1) } else { format!("{c}a{}", i + 1) })
            .collect();
        parts.join("+")
    }
}

/// `max { p : beta - p gamma in R }`, searching the full root system.
pub fn p_max(rs: &RootSystem, beta: &[i32], gamma: &[i32]) -> i32 {
    let mut p = 0;
    loop {
        let cand: RootVec = beta.iter().zip(gamma).map(|(b, g)| b - (p + 1) * g).collect();
        if !rs.is_root(&cand) {
            return p;
        }
        p += 1;
    }
}

/// The string number `p_{beta,gamma}` for positive roots.
pub fn p_max_ids(rs: &RootSystem, beta: RootId, gamma: RootId) -> i32 {
    p_max(rs, rs.root(beta), rs.root(gamma))
}

/// Checks both identities relating `d`'s, `p` and `beta . gamma` for a
/// decomposition `alpha = beta + gamma` of positive roots.
pub fn check_cases_identity(rs: &RootSystem, alpha: RootId, beta: RootId, gamma: RootId) -> Result<bool> {
    let sum: RootVec = rs.root(beta).iter().zip(rs.root(gamma)).map(|(a, b)| a + b).collect();
    if &sum != rs.root(alpha) {
        return Err(Error::Precondition(format!(
            "{} + {} != {}",
            rs.root_label(beta),
            rs.root_label(gamma),
            rs.root_label(alpha)
        )));
    }
    let p = p_max_ids(rs, beta, gamma);
    let bg = rs.root_dot(beta, gamma);
    let (da, db, dg) = (rs.d_root(alpha), rs.d_root(beta), rs.d_root(gamma));
    let scalar = da * (p - bg) == db * dg * (p + 1);
    let quantum: LaurentPoly = &qint(da) * &qint(p - bg);
    let rhs = &(&qint(db) * &qint(dg)) * &qint(p + 1);
    Ok(scalar && quantum == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, r: usize) -> RootSystem {
        build_root_system(CartanType::new(f, r).unwrap()).unwrap()
    }

    #[test]
    fn classical_root_counts() {
        let cases = [
            (Family::A, 3, 6),
            (Family::B, 3, 9),
            (Family::C, 3, 9),
            (Family::D, 4, 12),
            (Family::D, 5, 20),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
            (Family::F, 4, 24),
            (Family::G, 2, 6),
        ];
        for (f, r, n) in cases {
            assert_eq!(rs(f, r).num_positive(), n, "{f:?}{r}");
        }
    }

    #[test]
    fn a2_and_g2_data() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.cartan, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.d, vec![1, 1]);
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.d, vec![1, 3]);
        assert_eq!(g2.letter_dot(1, 2), -3);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(g2.d[i] * g2.cartan[i][j], g2.d[j] * g2.cartan[j][i]);
            }
        }
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(CartanType::new(Family::D, 3).is_err());
        assert!(CartanType::new(Family::E, 9).is_err());
        assert!(CartanType::new(Family::G, 3).is_err());
        assert!(CartanType::new(Family::B, 1).is_err());
    }

    #[test]
    fn string_numbers() {
        let g2 = rs(Family::G, 2);
        let b = g2.root_id(&[2, 1]).unwrap();
        let g = g2.root_id(&[1, 0]).unwrap();
        assert_eq!(p_max_ids(&g2, b, g), 2);
        let b2 = rs(Family::B, 2);
        // a1 long, a2 short: a2 + (a1 + a2) = a1 + 2 a2 is long.
        let s1 = b2.root_id(&[0, 1]).unwrap();
        let s2 = b2.root_id(&[1, 1]).unwrap();
        assert_eq!(p_max_ids(&b2, s2, s1), 1);
        let a3 = rs(Family::A, 3);
        assert_eq!(p_max_ids(&a3, a3.root_id(&[0, 1, 1]).unwrap(), a3.simple(1)), 0);
    }

    #[test]
    fn cases_identity_g2_triple() {
        let g2 = rs(Family::G, 2);
        let a = g2.root_id(&[3, 1]).unwrap();
        let b = g2.root_id(&[2, 1]).unwrap();
        let g = g2.root_id(&[1, 0]).unwrap();
        assert!(check_cases_identity(&g2, a, b, g).unwrap());
        assert!(check_cases_identity(&g2, a, g, g).is_err());
    }
}
