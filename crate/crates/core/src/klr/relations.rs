//! Mechanical check that the normal form respects every defining relation.

use super::algebra::{Generator, KlrAlgebra, KlrElement};
use super::perm;
use crate::error::Result;
use crate::pbw::words_of_weight;
use crate::shuffle::{word_to_string, Word};
use Generator::{Idempotent as E, Tau as T, X};

/// A signed sum of generator products, each applied to `1_i` on the right.
type Side = Vec<(i64, Vec<Generator>)>;

/// A defining relation `lhs = rhs` instantiated at one word.
pub struct Relation {
    pub name: String,
    pub lhs: Side,
    pub rhs: Side,
}

fn xs(p: usize, k: i32) -> Vec<Generator> {
    (0..k).map(|_| X(p)).collect()
}

/// All defining relations on `1_i`, 1-based generator indices.
pub fn relations_at(h: &KlrAlgebra, i: &[u8], weight_words: &[Word]) -> Vec<Relation> {
    let n = i.len();
    let rs = h.rs;
    let tag = word_to_string(i);
    let mut out = Vec::new();
    let one = |g: Vec<Generator>| vec![(1, g)];
    for j in weight_words {
        let rhs = if j.as_slice() == i { one(vec![]) } else { vec![] };
        out.push(Relation { name: format!("1_{} 1_{tag}", word_to_string(j)), lhs: one(vec![E(j.clone())]), rhs });
    }
    for k in 1..=n {
        out.push(Relation {
            name: format!("x{k} 1_{tag} = 1_{tag} x{k}"),
            lhs: one(vec![X(k)]),
            rhs: one(vec![E(i.to_vec()), X(k)]),
        });
        for l in k + 1..=n {
            out.push(Relation {
                name: format!("x{k} x{l} 1_{tag}"),
                lhs: one(vec![X(k), X(l)]),
                rhs: one(vec![X(l), X(k)]),
            });
        }
    }
    for k in 1..n {
        let (a, b) = (i[k - 1], i[k + 1 - 1]);
        let swapped = perm::act_on_word(&perm::from_word(n, &[(k - 1) as u8]), i);
        out.push(Relation {
            name: format!("t{k} 1_{tag} = 1_s(i) t{k}"),
            lhs: one(vec![T(k)]),
            rhs: one(vec![E(swapped), T(k)]),
        });
        for l in 1..=n {
            let sl = if l == k { k + 1 } else if l == k + 1 { k } else { l };
            let c = if a != b { 0 } else if l == k + 1 { 1 } else if l == k { -1 } else { 0 };
            out.push(Relation {
                name: format!("(t{k} x{l} - x{sl} t{k}) 1_{tag}"),
                lhs: vec![(1, vec![T(k), X(l)]), (-1, vec![X(sl), T(k)])],
                rhs: if c == 0 { vec![] } else { vec![(c, vec![])] },
            });
        }
        let cab = rs.letter_cartan(a, b);
        let quad = if a == b {
            vec![]
        } else if cab < 0 {
            let e = h.signs.get(a, b);
            vec![(e, xs(k, -cab)), (-e, xs(k + 1, -rs.letter_cartan(b, a)))]
        } else {
            vec![(1, vec![])]
        };
        out.push(Relation { name: format!("t{k}^2 1_{tag}"), lhs: one(vec![T(k), T(k)]), rhs: quad });
        for l in k + 2..n {
            out.push(Relation {
                name: format!("t{k} t{l} 1_{tag}"),
                lhs: one(vec![T(k), T(l)]),
                rhs: one(vec![T(l), T(k)]),
            });
        }
        if k + 1 < n {
            let c = i[k + 1];
            let mut rhs = vec![];
            if a == c && cab < 0 {
                let e = h.signs.get(a, b);
                for r in 0..=(-1 - cab) {
                    let mut g = xs(k, r);
                    g.extend(xs(k + 2, -1 - cab - r));
                    rhs.push((e, g));
                }
            }
            out.push(Relation {
                name: format!("braid at {k} on 1_{tag}"),
                lhs: vec![(1, vec![T(k + 1), T(k), T(k + 1)]), (-1, vec![T(k), T(k + 1), T(k)])],
                rhs,
            });
        }
    }
    out
}

fn evaluate(h: &KlrAlgebra, side: &Side, i: &[u8]) -> Result<KlrElement> {
    let mut out = KlrElement::zero();
    for (c, g) in side {
        out.add_scaled(&h.normal_form_on(g, KlrElement::idempotent(i.to_vec()))?, *c);
    }
    Ok(out)
}

/// Names of relations whose two sides have different normal forms, over
/// every word of the given weight.
pub fn failing_relations(h: &KlrAlgebra, weight: &[i32]) -> Result<Vec<String>> {
    let words = words_of_weight(weight);
    let mut bad = Vec::new();
    for i in &words {
        for rel in relations_at(h, i, &words) {
            if evaluate(h, &rel.lhs, i)? != evaluate(h, &rel.rhs, i)? {
                bad.push(rel.name);
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{build_root_system, CartanType, Family};

    #[test]
    fn g2_relations_hold() {
        let g2 = build_root_system(CartanType::new(Family::G, 2).unwrap()).unwrap();
        let h = KlrAlgebra::new(&g2);
        assert!(failing_relations(&h, &[2, 1]).unwrap().is_empty());
    }
}
