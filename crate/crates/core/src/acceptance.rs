//! The acceptance checks, shared by the `acceptance` test target and the
//! `verify-all` command.

use crate::canonical::CanonicalTable;
use crate::convex_order::{
    good_lyndon_words, is_convex, lyndon_order, minimal_pairs, order_from_reduced_word, random_reduced_word,
    ConvexOrder,
};
use crate::error::{Error, Result};
use crate::golden;
use crate::klr::{rank_over, Generator, KlrAlgebra, KlrElement, Monomial, StandardModule, StandardModuleElement};
use crate::kostant::{kostant_partitions, kp_less, KostantPartition, RootWords};
use crate::laurent::LaurentPoly;
use crate::pbw::{dim_h, DualPbw, SeriesCharacter};
use crate::resolution::{resolution, verify_complex};
use crate::root_data::{build_root_system, p_max_ids, CartanType, Family, RootSystem};
use crate::series::PowerSeries;
use crate::shuffle::{parse_word, shuffle, word_to_string, ShuffleElement, Word};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::time::Instant;

pub const DEFAULT_SEED: u64 = 20240601;
pub const CRITERIA: [u8; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    /// Wall-clock budget in seconds, if the criterion has one.
    pub budget: Option<f64>,
}

impl CriterionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "budget_seconds": self.budget,
        })
    }

    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!("{verdict} criterion {}: {} ({:.2}s) {}", self.id, self.title, self.seconds, self.detail)
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { passed, detail })
}

fn system(f: Family, r: usize) -> Result<RootSystem> {
    build_root_system(CartanType::new(f, r)?)
}

/// The types sampled by the scale-factor and length-two checks.
pub const SAMPLED_TYPES: [(Family, usize); 9] = [
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::B, 3),
    (Family::C, 3),
    (Family::D, 4),
    (Family::F, 4),
    (Family::G, 2),
];

/// Every finite type up to the given ranks, used by the relation check.
pub fn finite_types() -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    out.extend((1..=5).map(|r| (Family::A, r)));
    out.extend((2..=4).map(|r| (Family::B, r)));
    out.extend((2..=4).map(|r| (Family::C, r)));
    out.extend((4..=6).map(|r| (Family::D, r)));
    out.extend((6..=8).map(|r| (Family::E, r)));
    out.push((Family::F, 4));
    out.push((Family::G, 2));
    out
}

/// The Lyndon order followed by `n` orders from seeded random reduced words.
pub fn sampled_orders(rs: &RootSystem, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<ConvexOrder>> {
    let mut out = vec![lyndon_order(rs)?];
    for _ in 0..n {
        out.push(order_from_reduced_word(rs, &random_reduced_word(rs, rng))?);
    }
    Ok(out)
}

/// Nonzero weights in `Q^+` of height at most `h`.
pub fn weights_up_to(rank: usize, h: i32) -> Vec<Vec<i32>> {
    fn rec(rank: usize, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == rank {
            if cur.iter().any(|&c| c > 0) {
                out.push(cur.clone());
            }
            return;
        }
        for c in 0..=left {
            cur.push(c);
            rec(rank, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, h, &mut Vec::new(), &mut out);
    out
}

fn seed_rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn g2_table() -> Result<Outcome> {
    let g2 = system(Family::G, 2)?;
    let o = lyndon_order(&g2)?;
    let pbw = DualPbw::new(&g2, &o)?;
    let mut table = CanonicalTable::new(&pbw);
    let reference = golden::g2_canonical_table();
    let mut wrong = Vec::new();
    let mut weights = BTreeSet::new();
    let mut listed = BTreeSet::new();
    for (parts, terms) in &reference {
        let ids = parts
            .iter()
            .map(|p| g2.root_id(p).ok_or_else(|| Error::Precondition(format!("{p:?} is not a root"))))
            .collect::<Result<Vec<_>>>()?;
        let lam = KostantPartition::new(&o, ids);
        weights.insert(lam.weight(&g2));
        listed.insert(lam.parts.clone());
        let mut expect = ShuffleElement::zero();
        for (w, c) in terms {
            expect.add_term(parse_word(w)?, c);
        }
        if table.get(&lam)? != expect {
            wrong.push(lam.label(&g2));
        }
    }
    let unlisted: usize = weights
        .iter()
        .map(|w| kostant_partitions(&g2, &o, w).iter().filter(|l| !listed.contains(&l.parts)).count())
        .sum();
    outcome(
        wrong.is_empty() && unlisted == 0,
        format!(
            "{} printed entries, mismatched {:?}, {} partitions of the listed weights without an entry",
            reference.len(),
            wrong,
            unlisted
        ),
    )
}

fn sorted_lyndon(rs: &RootSystem) -> Result<Vec<String>> {
    let mut out: Vec<String> = good_lyndon_words(rs)?.iter().map(|w| word_to_string(w)).collect();
    out.sort();
    Ok(out)
}

fn segment(a: usize, b: usize) -> String {
    (a..=b).map(|l| word_to_string(&[l as u8])).collect()
}

/// Increasing segments `i ... j`.
pub fn expected_lyndon_a(r: usize) -> Vec<String> {
    let mut out: Vec<String> = (1..=r).flat_map(|i| (i..=r).map(move |j| segment(i, j))).collect();
    out.sort();
    out
}

/// `i ... j` for `j < r` and `i ... (r-2)` followed by the decreasing
/// segment `r ... j` for `i < j`.
pub fn expected_lyndon_d(r: usize) -> Vec<String> {
    let mut out: Vec<String> = (1..r).flat_map(|i| (i..r).map(move |j| segment(i, j))).collect();
    for i in 1..=r {
        for j in i + 1..=r {
            let head = if i <= r - 2 { segment(i, r - 2) } else { String::new() };
            let tail: String = (j..=r).rev().map(|l| word_to_string(&[l as u8])).collect();
            out.push(head + &tail);
        }
    }
    out.sort();
    out
}

fn lyndon_words() -> Result<Outcome> {
    let mut bad = Vec::new();
    for r in 1..=8 {
        if sorted_lyndon(&system(Family::A, r)?)? != expected_lyndon_a(r) {
            bad.push(format!("A{r}"));
        }
    }
    for r in 4..=8 {
        if sorted_lyndon(&system(Family::D, r)?)? != expected_lyndon_d(r) {
            bad.push(format!("D{r}"));
        }
    }
    let printed: [(usize, &[&str]); 3] =
        [(6, &golden::LYNDON_E6), (7, &golden::LYNDON_E7), (8, &golden::LYNDON_E8)];
    for (r, list) in printed {
        if sorted_lyndon(&system(Family::E, r)?)? != list {
            bad.push(format!("E{r}"));
        }
    }
    outcome(bad.is_empty(), format!("A1-A8, D4-D8, E6-E8 checked; mismatched {bad:?}"))
}

const RANDOM_ORDERS: usize = 100;

fn scale_factor(seed: u64) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut orders = 0;
    for (k, &(f, r)) in SAMPLED_TYPES.iter().enumerate() {
        let rs = system(f, r)?;
        for o in sampled_orders(&rs, RANDOM_ORDERS, &mut seed_rng(seed, k as u64))? {
            orders += 1;
            match DualPbw::new(&rs, &o) {
                Ok(pbw) => {
                    if let Some(a) = (0..rs.num_positive()).find(|&a| !pbw.ch_dual_root(a).is_bar_invariant()) {
                        bad.push(format!("{}: {} not bar-invariant ({})", rs.cartan_type, rs.root_label(a), o.fingerprint()));
                    }
                }
                Err(e) => bad.push(format!("{}: {e} ({})", rs.cartan_type, o.fingerprint())),
            }
        }
    }
    outcome(bad.is_empty(), format!("seed {seed}, {orders} orders, failures {bad:?}"))
}

/// `q^{-b.g}(L(b) o L(g) - q^{p - b.g} L(a)) = L(g) o L(b) - q^{-p} L(a)`.
pub fn length_two_identity(pbw: &DualPbw, alpha: usize, beta: usize, gamma: usize) -> bool {
    let rs = pbw.rs;
    let p = p_max_ids(rs, beta, gamma);
    let bg = rs.root_dot(beta, gamma);
    let (la, lb, lg) = (pbw.ch_dual_root(alpha), pbw.ch_dual_root(beta), pbw.ch_dual_root(gamma));
    let lhs = shuffle(rs, lb, lg).sub(&la.shift(p - bg)).shift(-bg);
    let rhs = shuffle(rs, lg, lb).sub(&la.shift(-p));
    lhs == rhs
}

fn length_two(seed: u64) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for (k, &(f, r)) in SAMPLED_TYPES.iter().enumerate() {
        let rs = system(f, r)?;
        for o in sampled_orders(&rs, RANDOM_ORDERS, &mut seed_rng(seed, k as u64))? {
            let pbw = DualPbw::new(&rs, &o)?;
            for a in (0..rs.num_positive()).filter(|&a| !rs.is_simple(a)) {
                for mp in minimal_pairs(&rs, &o, a)? {
                    pairs += 1;
                    if !length_two_identity(&pbw, a, mp.beta, mp.gamma) {
                        bad.push(format!("{} {} ({})", rs.cartan_type, rs.root_label(a), o.fingerprint()));
                    }
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("seed {seed}, {pairs} minimal pairs, failures {bad:?}"))
}

const DIM_TRUNC: i32 = 10;

fn dimension_formula() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut count = 0;
    for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G, 2)] {
        let rs = system(f, r)?;
        let o = lyndon_order(&rs)?;
        let pbw = DualPbw::new(&rs, &o)?;
        for w in weights_up_to(r, 4) {
            count += 1;
            let lhs = dim_h(&rs, &w, DIM_TRUNC)?;
            if !lhs.agrees_up_to(&pbw.sum_standard_products(&w, DIM_TRUNC), DIM_TRUNC) {
                bad.push(format!("{} {w:?}", rs.cartan_type));
            }
        }
    }
    outcome(bad.is_empty(), format!("{count} weights up to q^{DIM_TRUNC}, failures {bad:?}"))
}

/// Whether `d g d = target` for some diagonal `d` with entries `+-1`.
pub fn equal_up_to_signs(g: &[Vec<i64>], target: &[Vec<i64>]) -> bool {
    let n = g.len();
    n == target.len()
        && (0u32..1 << n).any(|mask| {
            let s = |i: usize| if mask >> i & 1 == 1 { -1 } else { 1 };
            (0..n).all(|i| (0..n).all(|j| s(i) * s(j) * g[i][j] == target[i][j]))
        })
}

/// Whether some simultaneous permutation and sign change maps `g` to `target`.
pub fn equivalent_up_to_order_and_signs(g: &[Vec<i64>], target: &[Vec<i64>]) -> bool {
    fn rec(g: &[Vec<i64>], t: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = g.len();
        if perm.len() == n {
            let pg: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| g[perm[i]][perm[j]]).collect()).collect();
            return equal_up_to_signs(&pg, t);
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                perm.push(k);
                if rec(g, t, perm, used) {
                    return true;
                }
                perm.pop();
                used[k] = false;
            }
        }
        false
    }
    g.len() == target.len() && rec(g, target, &mut Vec::new(), &mut vec![false; g.len()])
}

fn taus(word: &[usize]) -> Vec<Generator> {
    word.iter().map(|&k| Generator::Tau(k)).collect()
}

/// Gram data for the A5 example, with the form normalized so that
/// `<1 (x) v, tau_x (x) v> = -1`.
pub struct WilliamsonData {
    pub slice_dim: usize,
    pub gram: Vec<Vec<i64>>,
    pub printed_basis_gram: Vec<Vec<i64>>,
    pub printed_basis_rank: usize,
    pub c_product_is_tau_x: bool,
    pub degrees: (i32, i32),
}

pub fn williamson() -> Result<WilliamsonData> {
    let rs = system(Family::A, 5)?;
    let o = lyndon_order(&rs)?;
    let pbw = DualPbw::new(&rs, &o)?;
    let h = KlrAlgebra::new(&rs);
    let parts = golden::WILLIAMSON_LAMBDA
        .iter()
        .map(|p| rs.root_id(p).ok_or_else(|| Error::Precondition(format!("{p:?} is not a root"))))
        .collect::<Result<Vec<_>>>()?;
    let lam = KostantPartition::new(&o, parts);
    let i = parse_word(golden::WILLIAMSON_WORD)?;
    let mut m = StandardModule::new(&h, &pbw, &lam)?;
    let cyclic = m.cyclic_vectors()[0].clone();
    let top = crate::klr::BasisVector { w: m.x.clone(), word: cyclic.word.clone() };
    let v = StandardModuleElement::basis(cyclic.clone());
    let vx = StandardModuleElement::basis(top.clone());
    let raw = m.pair(&v, &vx)?;
    if raw.abs() != 1 {
        return Err(Error::Precondition(format!("<1 v, tau_x v> = {raw}, expected a unit")));
    }
    m.normalization = -raw;
    let basis = m.slice_basis(&i, 0);
    let gram = m.gram_matrix(&i, 0)?;
    let c: Vec<Vec<Generator>> = golden::WILLIAMSON_C.iter().map(|w| taus(w)).collect();
    let c_product_is_tau_x = m.act_all(&c.concat(), &v)? == vx;
    let mut vecs = vec![m.act_all(&[taus(&golden::WILLIAMSON_A), c.concat()].concat(), &v)?];
    for skip in 0..c.len() {
        let mut e = taus(&golden::WILLIAMSON_B);
        for (k, ck) in c.iter().enumerate() {
            if k != skip {
                e.extend(ck.iter().cloned());
            }
        }
        vecs.push(m.act_all(&e, &v)?);
    }
    let coords: Vec<Vec<i64>> = vecs.iter().map(|u| basis.iter().map(|b| u.coeff(b)).collect()).collect();
    let spans_outside = vecs.iter().any(|u| u.iter().any(|(b, _)| !basis.contains(b)));
    Ok(WilliamsonData {
        slice_dim: basis.len(),
        gram,
        printed_basis_gram: m.gram_of_vectors(&vecs, &vecs)?,
        printed_basis_rank: if spans_outside { 0 } else { rank_over(&coords, 0) },
        c_product_is_tau_x,
        degrees: (m.degree(&cyclic), m.degree(&top)),
    })
}

fn williamson_check() -> Result<Outcome> {
    let d = williamson()?;
    let printed: Vec<Vec<i64>> = golden::WILLIAMSON_GRAM.iter().map(|r| r.to_vec()).collect();
    let g = &d.gram;
    let units = g.iter().flatten().all(|x| x.abs() <= 1);
    let symmetric = (0..g.len()).all(|i| (0..g.len()).all(|j| g[i][j] == g[j][i]));
    let (r0, r2) = (rank_over(g, 0), rank_over(g, 2));
    let printed_basis = equal_up_to_signs(&d.printed_basis_gram, &printed);
    let standard = equivalent_up_to_order_and_signs(g, &printed);
    let passed = d.slice_dim == 5
        && units
        && symmetric
        && r0 == 3
        && r2 == 2
        && printed_basis
        && standard
        && d.printed_basis_rank == 5
        && d.c_product_is_tau_x
        && d.degrees == (4, -4);
    outcome(
        passed,
        format!(
            "slice dim {}, entries in {{0,+-1}} {units}, symmetric {symmetric}, rank Q {r0}, rank F2 {r2}, \
             printed vectors give printed matrix up to signs {printed_basis} (span rank {}), \
             standard basis equivalent up to order and signs {standard}, c1c2c3c4 v = tau_x v {}, degrees {:?}",
            d.slice_dim, d.printed_basis_rank, d.c_product_is_tau_x, d.degrees
        ),
    )
}

const RES_TRUNC: i32 = 12;

fn a3_resolution(seed: u64) -> Result<Outcome> {
    let a3 = system(Family::A, 3)?;
    let o = lyndon_order(&a3)?;
    let words = RootWords::new(&a3, &o)?;
    let c = resolution(&a3, &words, a3.highest_root())?;
    let h = KlrAlgebra::new(&a3);
    let summands: Vec<Vec<(String, i32)>> =
        c.terms.iter().map(|t| t.iter().map(|i| (word_to_string(&i.word), i.shift)).collect()).collect();
    let expected_terms = vec![
        vec![("123".to_string(), 0)],
        vec![("213".to_string(), 1), ("312".to_string(), 1)],
        vec![("321".to_string(), 2)],
    ];
    use Generator::Tau;
    let nf = |g: &[Generator], w: &[u8]| h.normal_form_on(g, KlrElement::idempotent(w.to_vec()));
    let d2 = vec![vec![nf(&[Tau(1), Tau(2)], &[2, 1, 3])?.scale(-1), nf(&[Tau(2)], &[3, 1, 2])?]];
    let d1 = vec![vec![nf(&[Tau(1)], &[1, 2, 3])?], vec![nf(&[Tau(1), Tau(2)], &[1, 2, 3])?]];
    let matrices = c.differentials == vec![d1, d2];
    let closed = verify_complex(&h, &c);
    let mut corrupted = c.clone();
    corrupted.corrupt_sign(&mut seed_rng(seed, 7));
    let control = !verify_complex(&h, &corrupted);
    let series: PowerSeries = PowerSeries::from_laurent(&LaurentPoly::one(), RES_TRUNC).div_one_minus_q_pow(2);
    let expected_euler: SeriesCharacter = [(vec![1, 2, 3], series)].into_iter().collect();
    let euler = c.euler_character(&a3, RES_TRUNC) == expected_euler;
    outcome(
        summands == expected_terms && matrices && closed && control && euler,
        format!(
            "terms {}, differentials {matrices}, d^2 = 0 {closed}, corrupted copy rejected {control}, \
             Euler = 123/(1-q^2) to q^{RES_TRUNC} {euler}",
            summands == expected_terms
        ),
    )
}

fn resolutions(seed: u64) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut count = 0;
    for (k, (f, r)) in [(Family::A, 4), (Family::D, 4), (Family::D, 5)].into_iter().enumerate() {
        let rs = system(f, r)?;
        let o = lyndon_order(&rs)?;
        let words = RootWords::new(&rs, &o)?;
        let pbw = DualPbw::new(&rs, &o)?;
        let h = KlrAlgebra::new(&rs);
        let mut rng = seed_rng(seed, 100 + k as u64);
        for a in (0..rs.num_positive()).filter(|&a| rs.is_multiplicity_free(a)) {
            count += 1;
            let c = resolution(&rs, &words, a)?;
            let lam = KostantPartition::new(&o, vec![a]);
            let mut corrupted = c.clone();
            let control = rs.height(a) < 3 || (corrupted.corrupt_sign(&mut rng) && !verify_complex(&h, &corrupted));
            let ok = verify_complex(&h, &c)
                && c.euler_character(&rs, RES_TRUNC) == pbw.dim_standard(&lam, RES_TRUNC)
                && c.length() < rs.height(a)
                && control;
            if !ok {
                bad.push(format!("{} {}", rs.cartan_type, rs.root_label(a)));
            }
        }
    }
    outcome(bad.is_empty(), format!("{count} multiplicity-free roots in A4, D4, D5, failures {bad:?}"))
}

fn random_monomial(word: Word, rng: &mut ChaCha8Rng) -> Monomial {
    let n = word.len();
    let mut w: Vec<u8> = (0..n as u8).collect();
    w.shuffle(rng);
    let x = (0..n).map(|_| rng.gen_range(0..2)).collect();
    Monomial { x, w, word }
}

fn random_word(rank: usize, len: usize, rng: &mut ChaCha8Rng) -> Word {
    (0..len).map(|_| rng.gen_range(1..=rank as u8)).collect()
}

/// Property suites; each returns a list of failures.
pub fn property_papi(seed: u64) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (k, (f, r)) in finite_types().into_iter().enumerate() {
        let rs = system(f, r)?;
        let mut rng = seed_rng(seed, 200 + k as u64);
        for _ in 0..20 {
            let o = order_from_reduced_word(&rs, &random_reduced_word(&rs, &mut rng))?;
            if !is_convex(&rs, o.roots()) {
                bad.push(format!("{} {}", rs.cartan_type, o.fingerprint()));
            }
        }
    }
    Ok(bad)
}

pub fn property_kp_lemmas(seed: u64) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (k, &(f, r)) in SAMPLED_TYPES.iter().enumerate() {
        let rs = system(f, r)?;
        for o in sampled_orders(&rs, 5, &mut seed_rng(seed, 300 + k as u64))? {
            for a in 0..rs.num_positive() {
                let ht = rs.height(a);
                for m in 1..=3usize {
                    if m * ht > 6 {
                        break;
                    }
                    let weight: Vec<i32> = rs.root(a).iter().map(|c| c * m as i32).collect();
                    let bottom = KostantPartition::new(&o, vec![a; m]);
                    for mu in kostant_partitions(&rs, &o, &weight) {
                        if mu != bottom && !kp_less(&rs, &o, &bottom, &mu)? {
                            bad.push(format!("{} ({})^{m} not below {}", rs.cartan_type, rs.root_label(a), mu.label(&rs)));
                        }
                    }
                }
                if !(2..=6).contains(&ht) {
                    continue;
                }
                let top = KostantPartition::new(&o, vec![a]);
                let others: Vec<KostantPartition> =
                    kostant_partitions(&rs, &o, rs.root(a)).into_iter().filter(|l| *l != top).collect();
                for lam in &others {
                    let mut minimal = true;
                    for mu in &others {
                        if kp_less(&rs, &o, mu, lam)? {
                            minimal = false;
                            break;
                        }
                    }
                    if minimal && lam.len() != 2 {
                        bad.push(format!("{} minimal {} has {} parts", rs.cartan_type, lam.label(&rs), lam.len()));
                    }
                }
            }
        }
    }
    Ok(bad)
}

pub fn property_bar_twist(seed: u64, samples: usize) -> Result<Vec<String>> {
    let types = finite_types();
    let systems = types.iter().map(|&(f, r)| system(f, r)).collect::<Result<Vec<_>>>()?;
    let mut rng = seed_rng(seed, 400);
    let mut bad = Vec::new();
    for _ in 0..samples {
        let rs = &systems[rng.gen_range(0..systems.len())];
        let (la, lb) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let i = random_word(rs.rank(), la, &mut rng);
        let j = random_word(rs.rank(), lb, &mut rng);
        let twist = rs.dot(&rs.weight_of_word(&i), &rs.weight_of_word(&j));
        let (wi, wj) = (ShuffleElement::word(i.clone()), ShuffleElement::word(j.clone()));
        if shuffle(rs, &wi, &wj).bar() != shuffle(rs, &wj, &wi).shift(twist) {
            bad.push(format!("{} {} {}", rs.cartan_type, word_to_string(&i), word_to_string(&j)));
        }
    }
    Ok(bad)
}

pub fn property_nil_hecke() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (f, r) in [(Family::A, 1), (Family::B, 2), (Family::G, 2)] {
        let rs = system(f, r)?;
        let h = KlrAlgebra::new(&rs);
        for letter in 1..=r as u8 {
            for m in 2..=3 {
                let e = h.nilhecke_idempotent(m, letter)?;
                if h.multiply(&e, &e)? != e {
                    bad.push(format!("{} e_{m} on letter {letter}", rs.cartan_type));
                }
            }
        }
    }
    Ok(bad)
}

pub fn property_relations(max_height: i32) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (f, r) in finite_types() {
        let rs = system(f, r)?;
        let h = KlrAlgebra::new(&rs);
        for w in weights_up_to(r, max_height) {
            for name in crate::klr::relations::failing_relations(&h, &w)? {
                bad.push(format!("{} {w:?}: {name}", rs.cartan_type));
            }
        }
    }
    Ok(bad)
}

pub fn property_degrees(seed: u64, samples: usize) -> Result<Vec<String>> {
    let types = [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::F, 4), (Family::G, 2)];
    let systems = types.iter().map(|&(f, r)| system(f, r)).collect::<Result<Vec<_>>>()?;
    let algebras: Vec<KlrAlgebra> = systems.iter().map(KlrAlgebra::new).collect();
    let mut rng = seed_rng(seed, 500);
    let mut bad = Vec::new();
    for _ in 0..samples {
        let k = rng.gen_range(0..systems.len());
        let (rs, h) = (&systems[k], &algebras[k]);
        let len = rng.gen_range(2..=4);
        let b = random_monomial(random_word(rs.rank(), len, &mut rng), &mut rng);
        let a = random_monomial(b.left_word(), &mut rng);
        let expected = a.degree(rs) + b.degree(rs);
        let product = h.multiply(&KlrElement::monomial(a.clone(), 1), &KlrElement::monomial(b.clone(), 1))?;
        if product.degrees(rs).iter().any(|&d| d != expected) {
            bad.push(format!("{} ({a}) ({b})", rs.cartan_type));
        }
    }
    Ok(bad)
}

fn properties(seed: u64) -> Result<Outcome> {
    let parts: [(&str, Vec<String>); 6] = [
        ("a papi", property_papi(seed)?),
        ("b kp lemmas", property_kp_lemmas(seed)?),
        ("c bar twist", property_bar_twist(seed, 1000)?),
        ("d nil hecke", property_nil_hecke()?),
        ("e relations", property_relations(4)?),
        ("f degrees", property_degrees(seed, 1000)?),
    ];
    let failed: Vec<String> =
        parts.iter().filter(|(_, b)| !b.is_empty()).map(|(n, b)| format!("{n}: {:?}", &b[..b.len().min(3)])).collect();
    outcome(failed.is_empty(), format!("seed {seed}, failing suites {failed:?}"))
}

pub fn title(id: u8) -> &'static str {
    match id {
        1 => "G2 dual canonical table",
        2 => "good Lyndon words",
        3 => "scale-factor divisibility",
        4 => "length-two character identity",
        5 => "dimension formula",
        6 => "Gram matrix example in A5",
        7 => "A3 resolution",
        8 => "resolutions in A4, D4, D5",
        9 => "property suites",
        _ => "unknown",
    }
}

pub fn budget(id: u8) -> Option<f64> {
    match id {
        1 => Some(1.0),
        2 => Some(5.0),
        3 => Some(60.0),
        5 => Some(120.0),
        6 => Some(1800.0),
        7 => Some(10.0),
        8 | 9 => Some(300.0),
        _ => None,
    }
}

/// Runs one criterion; a computation error counts as a failure.
pub fn run_criterion(id: u8, seed: u64) -> CriterionReport {
    let start = Instant::now();
    let result = match id {
        1 => g2_table(),
        2 => lyndon_words(),
        3 => scale_factor(seed),
        4 => length_two(seed),
        5 => dimension_formula(),
        6 => williamson_check(),
        7 => a3_resolution(seed),
        8 => resolutions(seed),
        9 => properties(seed),
        _ => Err(Error::Precondition(format!("no criterion {id}"))),
    };
    let seconds = start.elapsed().as_secs_f64();
    let budget = budget(id);
    let (mut passed, mut detail) = match result {
        Ok(o) => (o.passed, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(b) = budget {
        if seconds > b {
            passed = false;
            detail.push_str(&format!("; over the {b}s budget"));
        }
    }
    CriterionReport { id, title: title(id), passed, detail, seconds, budget }
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    CRITERIA.iter().map(|&id| run_criterion(id, seed)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_pattern_lists() {
        assert_eq!(expected_lyndon_a(2), vec!["1", "12", "2"]);
        let d4 = expected_lyndon_d(4);
        assert_eq!(d4.len(), 12);
        assert!(d4.contains(&"1243".to_string()) && d4.contains(&"12432".to_string()) && d4.contains(&"4".to_string()));
    }

    #[test]
    fn sign_equivalence() {
        let g = vec![vec![0, 1], vec![1, 0]];
        assert!(equal_up_to_signs(&g, &[vec![0, -1], vec![-1, 0]]));
        assert!(!equal_up_to_signs(&g, &[vec![0, -1], vec![1, 0]]));
        let h = vec![vec![1, 0], vec![0, 0]];
        assert!(equivalent_up_to_order_and_signs(&h, &[vec![0, 0], vec![0, 1]]));
        assert!(!equal_up_to_signs(&h, &[vec![0, 0], vec![0, 1]]));
        assert_eq!(weights_up_to(2, 2).len(), 5);
    }
}
