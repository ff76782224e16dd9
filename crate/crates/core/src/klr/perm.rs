//! Permutations in one-line notation (0-based) and their canonical reduced
//! words. `s_r` swaps positions `r` and `r + 1` (0-based).

/// `perm[k] = w(k)`.
pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

pub fn is_identity(w: &[u8]) -> bool {
    w.iter().enumerate().all(|(k, &v)| k == v as usize)
}

pub fn inverse(w: &[u8]) -> Perm {
    let mut inv = vec![0; w.len()];
    for (k, &v) in w.iter().enumerate() {
        inv[v as usize] = k as u8;
    }
    inv
}

pub fn length(w: &[u8]) -> usize {
    let mut l = 0;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if w[a] > w[b] {
                l += 1;
            }
        }
    }
    l
}

/// `s_r w`.
pub fn left_mul(r: usize, w: &[u8]) -> Perm {
    w.iter()
        .map(|&v| match v as usize {
            x if x == r => v + 1,
            x if x == r + 1 => v - 1,
            _ => v,
        })
        .collect()
}

/// `w s_r`.
pub fn right_mul(w: &[u8], r: usize) -> Perm {
    let mut out = w.to_vec();
    out.swap(r, r + 1);
    out
}

/// Whether `l(s_r w) < l(w)`.
pub fn is_left_descent(w: &[u8], r: usize) -> bool {
    let (mut pr, mut pr1) = (0, 0);
    for (k, &v) in w.iter().enumerate() {
        if v as usize == r {
            pr = k;
        } else if v as usize == r + 1 {
            pr1 = k;
        }
    }
    pr > pr1
}

/// The product `s_{word[0]} s_{word[1]} ...`.
pub fn from_word(n: usize, word: &[u8]) -> Perm {
    let mut w = identity(n);
    for &r in word {
        w.swap(r as usize, r as usize + 1);
    }
    w
}

/// Canonical reduced word: repeatedly strip the smallest left descent.
pub fn canonical_word(w: &[u8]) -> Vec<u8> {
    let mut cur = w.to_vec();
    let mut out = Vec::with_capacity(length(w));
    while let Some(r) = (0..cur.len().saturating_sub(1)).find(|&r| is_left_descent(&cur, r)) {
        out.push(r as u8);
        cur = left_mul(r, &cur);
    }
    out
}

/// Smallest left descent, if any.
pub fn first_descent(w: &[u8]) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&r| is_left_descent(w, r))
}

/// Whether `word` is a reduced expression.
pub fn is_reduced(n: usize, word: &[u8]) -> bool {
    length(&from_word(n, word)) == word.len()
}

/// `w(i)`: the letter `i_k` moves to position `w(k)`.
pub fn act_on_word(w: &[u8], i: &[u8]) -> Vec<u8> {
    let mut out = vec![0; i.len()];
    for (k, &v) in w.iter().enumerate() {
        out[v as usize] = i[k];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_words() {
        let w = from_word(3, &[1, 0]);
        assert_eq!(canonical_word(&w), vec![1, 0]);
        let w0 = from_word(3, &[1, 0, 1]);
        assert_eq!(canonical_word(&w0), vec![0, 1, 0]);
        assert_eq!(length(&w0), 3);
        assert!(is_identity(&left_mul(0, &from_word(3, &[0]))));
        assert_eq!(act_on_word(&from_word(2, &[0]), &[1, 2]), vec![2, 1]);
        assert!(!is_reduced(3, &[0, 0]));
    }

    #[test]
    fn word_action_composes() {
        let i = [1, 2, 3, 4];
        let u = from_word(4, &[0, 2]);
        let v = from_word(4, &[1]);
        let uv = from_word(4, &[0, 2, 1]);
        assert_eq!(act_on_word(&uv, &i), act_on_word(&u, &act_on_word(&v, &i)));
    }
}
