//! Reference values for catalog algebras without parameters.
//!
//! A check compares against these values when one is listed and otherwise
//! only runs its self-consistency oracle.

use liebialg::exact::QMatrix;

/// Killing form and its extensions to `Λ^1`, `Λ^2`, `Λ^3`, as integer rows.
pub fn killing(name: &str, m: usize) -> Option<QMatrix> {
    let rows: &[&[i64]] = match (name, m) {
        ("sl2", 1) => &[&[2, 0, 0], &[0, 0, 2], &[0, 2, 0]],
        ("sl2", 2) => &[&[0, 4, 0], &[4, 0, 0], &[0, 0, -4]],
        ("sl2", 3) => &[&[-8]],
        ("su2", 1) => &[&[-2, 0, 0], &[0, -2, 0], &[0, 0, -2]],
        ("su2", 2) => &[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4]],
        ("su2", 3) => &[&[-8]],
        ("h", 1) => &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]],
        _ => return None,
    };
    Some(QMatrix::from_i64(rows))
}

/// Spanning basis elements of `(Λ^m g)^g` for `m = 2, 3`, as 1-based index lists.
pub fn invariants(name: &str, m: usize) -> Option<&'static [&'static [usize]]> {
    let e: &'static [&'static [usize]] = match (name, m) {
        ("sl2", 2) | ("s1", 3) | ("s2", 2) | ("s2", 3) => &[],
        ("s6", 2) | ("s7", 2) | ("gl2", 2) => &[],
        ("sl2", 3) | ("s6", 3) | ("s7", 3) | ("gl2", 3) => &[&[1, 2, 3]],
        ("s1", 2) | ("n1", 2) => &[&[1, 2]],
        ("n1", 3) => &[&[1, 2, 3], &[1, 2, 4]],
        _ => return None,
    };
    Some(e)
}

/// Monic generators of the mCYBE system, and of the CYBE system when listed.
pub fn ybe(name: &str) -> Option<(&'static [&'static str], Option<&'static [&'static str]>)> {
    match name {
        "sl2" => Some((&[], None)),
        "s12" => Some((
            &[
                "x2*x3 + x4*x5",
                "2*x1*x6 - x2*x5 + x3^2 + x3*x4 + x5^2",
                "(x2 + x5)*x6",
                "(x3 - x4)*x6",
            ],
            None,
        )),
        "gl2" => Some((
            &["x1*x3 - x4*x5", "x2*x3 + x4*x6", "x2*x5 + x1*x6"],
            Some(&["x1*x3 - x4*x5", "x2*x3 + x4*x6", "x2*x5 + x1*x6", "2*x1*x2 - x4^2"]),
        )),
        _ => None,
    }
}

/// Generators of the mCYBE and CYBE systems after real simplification.
pub fn ybe_real(name: &str) -> Option<(&'static [&'static str], Option<&'static [&'static str]>)> {
    match name {
        "s1" => Some((&["x3*x4", "x3*x6", "x5"], None)),
        "s7" => Some((&["x5", "x6"], Some(&["x4", "x5", "x6"]))),
        _ => None,
    }
}
