//! Reference data transcribed from published examples.

use crate::laurent::{qint, qint_d, LaurentPoly};

pub const LYNDON_E6: [&str; 36] = [
    "1", "12", "123", "1234", "12345", "1236", "12364", "123643",
    "1236432", "123645", "1236453", "12364532", "12364534", "123645342", "1236453423", "12364534236",
    "2", "23", "234", "2345", "236", "2364", "23643", "23645",
    "236453", "2364534", "3", "34", "345", "36", "364", "3645",
    "4", "45", "5", "6",
];

pub const LYNDON_E7: [&str; 63] = [
    "1", "12", "123", "1234", "12345", "123456", "12347", "123475",
    "1234754", "12347543", "123475432", "1234756", "12347564", "123475643", "1234756432", "123475645",
    "1234756453", "12347564532", "12347564534", "123475645342", "1234756453423", "123475645347", "1234756453472", "12347564534723",
    "123475645347234", "1234756453472345", "12347564534723456", "2", "23", "234", "2345", "23456",
    "2347", "23475", "234754", "2347543", "234756", "2347564", "23475643", "23475645",
    "234756453", "2347564534", "23475645347", "3", "34", "345", "3456", "347",
    "3475", "34754", "34756", "347564", "3475645", "4", "45", "456",
    "47", "475", "4756", "5", "56", "6", "7",
];

pub const LYNDON_E8: [&str; 120] = [
    "1", "12", "123", "1234", "12345", "123456", "1234567", "123458",
    "1234586", "12345865", "123458654", "1234586543", "12345865432", "12345867", "123458675", "1234586754",
    "12345867543", "123458675432", "1234586756", "12345867564", "123458675643", "1234586756432", "123458675645", "1234586756453",
    "12345867564532", "12345867564534", "123458675645342", "1234586756453423", "12345867564534231234586756458", "1234586756458", "12345867564583", "123458675645832",
    "123458675645834", "1234586756458342", "12345867564583423", "1234586756458345", "12345867564583452", "123458675645834523", "1234586756458345234", "12345867564583456",
    "123458675645834562", "1234586756458345623", "12345867564583456234", "123458675645834562345", "1234586756458345623458", "123458675645834567", "1234586756458345672", "12345867564583456723",
    "123458675645834567234", "1234586756458345672345", "12345867564583456723456", "12345867564583456723458", "123458675645834567234586", "1234586756458345672345865", "12345867564583456723458654", "123458675645834567234586543",
    "1234586756458345672345865432", "2", "23", "234", "2345", "23456", "234567", "23458",
    "234586", "2345865", "23458654", "234586543", "2345867", "23458675", "234586754", "2345867543",
    "234586756", "2345867564", "23458675643", "23458675645", "234586756453", "2345867564534", "234586756458", "2345867564583",
    "23458675645834", "234586756458345", "2345867564583456", "23458675645834567", "3", "34", "345", "3456",
    "34567", "3458", "34586", "345865", "3458654", "345867", "3458675", "34586754",
    "34586756", "345867564", "3458675645", "34586756458", "4", "45", "456", "4567",
    "458", "4586", "45865", "45867", "458675", "4586756", "5", "56",
    "567", "58", "586", "5867", "6", "67", "7", "8",
];

fn prod(fs: &[LaurentPoly]) -> LaurentPoly {
    fs.iter().fold(LaurentPoly::one(), |a, b| &a * b)
}

/// Dual canonical characters in type G2 for the order with `a1 < a2`
/// (`a1` short): Kostant partition (largest part first) and its terms.
pub fn g2_canonical_table() -> Vec<(Vec<[i32; 2]>, Vec<(&'static str, LaurentPoly)>)> {
    let t1 = qint(2);
    let t2 = qint_d(2, 3);
    let h1 = qint(3);
    let one = LaurentPoly::one();
    let (a1, a2) = ([1, 0], [0, 1]);
    let (b, c, e, f) = ([1, 1], [2, 1], [3, 1], [3, 2]);
    vec![
        (vec![a1], vec![("1", one.clone())]),
        (vec![e], vec![("1112", prod(&[t1.clone(), h1.clone()]))]),
        (vec![c, a1], vec![("1121", t1.clone())]),
        (vec![b, a1, a1], vec![("1211", t1.clone())]),
        (vec![a2, a1, a1, a1], vec![("2111", prod(&[t1.clone(), h1.clone()]))]),
        (vec![c], vec![("112", t1.clone())]),
        (vec![b, a1], vec![("121", one.clone())]),
        (vec![a2, a1, a1], vec![("211", t1.clone())]),
        (
            vec![f],
            vec![
                ("11122", prod(&[t2.clone(), t1.clone(), h1.clone()])),
                ("11212", prod(&[t1.clone(), h1.clone()])),
            ],
        ),
        (vec![b, c], vec![("12112", t1.clone())]),
        (
            vec![b, b, a1],
            vec![("11212", t1.clone()), ("11221", prod(&[t2.clone(), t1.clone()])), ("12121", t1.clone())],
        ),
        (vec![a2, e], vec![("21112", prod(&[t1.clone(), h1.clone()]))]),
        (vec![a2, c, a1], vec![("21121", t1.clone())]),
        (
            vec![a2, b, a1, a1],
            vec![("12121", t1.clone()), ("12211", prod(&[t2.clone(), t1.clone()])), ("21211", t1.clone())],
        ),
        (
            vec![a2, a2, a1, a1, a1],
            vec![
                ("21211", prod(&[t1.clone(), h1.clone()])),
                ("22111", prod(&[t2.clone(), t1.clone(), h1.clone()])),
            ],
        ),
        (vec![b], vec![("12", one.clone())]),
        (vec![a2, a1], vec![("21", one.clone())]),
        (vec![a2], vec![("2", one)]),
    ]
}

/// Kostant partition for the Gram matrix example in type A5 (Lyndon order),
/// as simple-root coordinates, largest part first.
pub const WILLIAMSON_LAMBDA: [[i32; 5]; 8] = [
    [0, 0, 0, 1, 1],
    [0, 0, 0, 1, 1],
    [0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0],
    [0, 1, 1, 1, 0],
    [0, 1, 1, 1, 0],
    [1, 1, 0, 0, 0],
    [1, 1, 0, 0, 0],
];

/// The word `i` whose degree-zero slice is examined.
pub const WILLIAMSON_WORD: &str = "4534234523123412";

/// The printed Gram matrix of the five spanning vectors below.
pub const WILLIAMSON_GRAM: [[i64; 5]; 5] = [
    [0, 1, 1, 1, 1],
    [1, 0, 0, 0, 1],
    [1, 0, 0, 0, 1],
    [1, 0, 0, 0, 1],
    [1, 1, 1, 1, 0],
];

/// Reduced words (1-based `tau` indices) of the elements `a`, `b` and
/// `c_1, ..., c_4`; the spanning vectors are `a c1 c2 c3 c4 v` and
/// `b c1 ... (c_k omitted) ... c4 v` for `k = 1, ..., 4`.
pub const WILLIAMSON_A: [usize; 13] = [3, 7, 6, 5, 4, 9, 8, 7, 6, 12, 11, 13, 12];
pub const WILLIAMSON_B: [usize; 14] = [3, 7, 6, 5, 4, 12, 11, 10, 9, 8, 7, 6, 13, 12];
pub const WILLIAMSON_C: [&[usize]; 4] = [&[2, 1, 3, 2], &[5], &[9, 8, 7, 10, 9, 8, 11, 10, 9], &[14, 13, 15, 14]];
