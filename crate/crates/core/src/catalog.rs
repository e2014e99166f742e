//! Built-in Lie algebras: the nine three-dimensional classes, the thirteen
//! four-dimensional indecomposable classes `s1..s12, n1`, `gl2 = sl2 ⊕ R`,
//! `so22 = sl2 ⊕ sl2`, and two algebras with center used by the center
//! extension (`s6_231` and the seven-dimensional `g7`).
//!
//! Parametric families take rational parameters named `alpha`, `beta`, `k`
//! or `lambda`; ranges are checked when the algebra is instantiated.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::exact::{q, Rational};
use crate::liealg::{LieAlgebra, LieError};

/// Names of the three-dimensional catalog algebras.
pub const THREE_DIM: [&str; 9] = [
    "sl2", "su2", "h", "r3_0p", "r3_m1", "r3_1", "r3", "r3_l", "r3_lp",
];

/// Names of the four-dimensional indecomposable catalog algebras.
pub const FOUR_DIM: [&str; 13] = [
    "s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8", "s9", "s10", "s11", "s12", "n1",
];

/// Further catalog algebras.
pub const OTHERS: [&str; 4] = ["gl2", "so22", "s6_231", "g7"];

/// All catalog names.
pub fn names() -> Vec<&'static str> {
    THREE_DIM
        .iter()
        .chain(FOUR_DIM.iter())
        .chain(OTHERS.iter())
        .copied()
        .collect()
}

/// Parameters a catalog algebra requires.
pub fn required_params(name: &str) -> &'static [&'static str] {
    match name {
        "s3" | "s5" => &["alpha", "beta"],
        "s4" | "s8" | "s9" => &["alpha"],
        "r3_l" | "r3_lp" => &["lambda"],
        _ => &[],
    }
}

fn get(params: &BTreeMap<String, Rational>, key: &str) -> Result<Rational, LieError> {
    params
        .get(key)
        .cloned()
        .ok_or_else(|| LieError::Catalog(format!("missing parameter {key}")))
}

fn range(ok: bool, msg: &str) -> Result<(), LieError> {
    if ok {
        Ok(())
    } else {
        Err(LieError::Catalog(msg.to_string()))
    }
}

type Rel = (usize, usize, Vec<(usize, Rational)>);

fn r(i: usize, j: usize, terms: &[(usize, Rational)]) -> Rel {
    (i, j, terms.to_vec())
}

/// Instantiates a catalog algebra at concrete parameter values.
///
/// Parameters that the family does not use are ignored, except that they are
/// recorded on the algebra (the `k` of a parametrized row is kept this way).
pub fn algebra(name: &str, params: &BTreeMap<String, Rational>) -> Result<LieAlgebra, LieError> {
    let one = q(1);
    let m1 = q(-1);
    let rels: (usize, Vec<Rel>) = match name {
        "sl2" => (
            3,
            vec![
                r(1, 2, &[(2, one.clone())]),
                r(1, 3, &[(3, m1.clone())]),
                r(2, 3, &[(1, one.clone())]),
            ],
        ),
        "su2" => (
            3,
            vec![
                r(1, 2, &[(3, one.clone())]),
                r(1, 3, &[(2, m1.clone())]),
                r(2, 3, &[(1, one.clone())]),
            ],
        ),
        "h" => (3, vec![r(1, 2, &[(3, one.clone())])]),
        "r3_0p" => (3, vec![r(1, 2, &[(3, m1.clone())]), r(1, 3, &[(2, one.clone())])]),
        "r3_m1" => (3, vec![r(1, 2, &[(2, one.clone())]), r(1, 3, &[(3, m1.clone())])]),
        "r3_1" => (3, vec![r(1, 2, &[(2, one.clone())]), r(1, 3, &[(3, one.clone())])]),
        "r3" => (
            3,
            vec![
                r(1, 3, &[(1, m1.clone())]),
                r(2, 3, &[(1, m1.clone()), (2, m1.clone())]),
            ],
        ),
        "r3_l" => {
            let l = get(params, "lambda")?;
            range(l > q(-1) && l < q(1) && !l.is_zero(), "lambda must lie in (-1,1) minus 0")?;
            (3, vec![r(1, 3, &[(1, m1.clone())]), r(2, 3, &[(2, -l)])])
        }
        "r3_lp" => {
            let l = get(params, "lambda")?;
            range(l > q(0), "lambda must be positive")?;
            (
                3,
                vec![
                    r(1, 3, &[(1, -l.clone()), (2, one.clone())]),
                    r(2, 3, &[(1, m1.clone()), (2, -l)]),
                ],
            )
        }
        "s1" => (4, vec![r(2, 4, &[(1, m1.clone())]), r(3, 4, &[(3, m1.clone())])]),
        "s2" => (
            4,
            vec![
                r(1, 4, &[(1, m1.clone())]),
                r(2, 4, &[(1, m1.clone()), (2, m1.clone())]),
                r(3, 4, &[(2, m1.clone()), (3, m1.clone())]),
            ],
        ),
        "s3" => {
            let a = get(params, "alpha")?;
            let b = get(params, "beta")?;
            range(
                !b.is_zero() && b.abs() <= a.abs() && a.abs() <= q(1),
                "s3 requires 0 < |beta| <= |alpha| <= 1",
            )?;
            range(!(a == m1 && b == m1), "s3 excludes (alpha, beta) = (-1, -1)")?;
            range(a.abs() != b.abs() || a >= b, "s3 requires alpha >= beta when |alpha| = |beta|")?;
            (
                4,
                vec![
                    r(1, 4, &[(1, m1.clone())]),
                    r(2, 4, &[(2, -a)]),
                    r(3, 4, &[(3, -b)]),
                ],
            )
        }
        "s4" => {
            let a = get(params, "alpha")?;
            range(!a.is_zero(), "s4 requires alpha != 0")?;
            (
                4,
                vec![
                    r(1, 4, &[(1, m1.clone())]),
                    r(2, 4, &[(1, m1.clone()), (2, m1.clone())]),
                    r(3, 4, &[(3, -a)]),
                ],
            )
        }
        "s5" => {
            let a = get(params, "alpha")?;
            let b = get(params, "beta")?;
            range(a > q(0), "s5 requires alpha > 0")?;
            (
                4,
                vec![
                    r(1, 4, &[(1, -a)]),
                    r(2, 4, &[(2, -b.clone()), (3, one.clone())]),
                    r(3, 4, &[(2, m1.clone()), (3, -b)]),
                ],
            )
        }
        "s6" => (
            4,
            vec![
                r(2, 3, &[(1, one.clone())]),
                r(2, 4, &[(2, m1.clone())]),
                r(3, 4, &[(3, one.clone())]),
            ],
        ),
        "s7" => (
            4,
            vec![
                r(2, 3, &[(1, one.clone())]),
                r(2, 4, &[(3, one.clone())]),
                r(3, 4, &[(2, m1.clone())]),
            ],
        ),
        "s8" => {
            let a = get(params, "alpha")?;
            range(a > q(-1) && a <= q(1) && !a.is_zero(), "s8 requires alpha in (-1,1] minus 0")?;
            (
                4,
                vec![
                    r(1, 4, &[(1, -(&one + &a))]),
                    r(2, 3, &[(1, one.clone())]),
                    r(2, 4, &[(2, m1.clone())]),
                    r(3, 4, &[(3, -a)]),
                ],
            )
        }
        "s9" => {
            let a = get(params, "alpha")?;
            range(a > q(0), "s9 requires alpha > 0")?;
            (
                4,
                vec![
                    r(1, 4, &[(1, -(q(2) * &a))]),
                    r(2, 3, &[(1, one.clone())]),
                    r(2, 4, &[(2, -a.clone()), (3, one.clone())]),
                    r(3, 4, &[(2, m1.clone()), (3, -a)]),
                ],
            )
        }
        "s10" => (
            4,
            vec![
                r(1, 4, &[(1, q(-2))]),
                r(2, 3, &[(1, one.clone())]),
                r(2, 4, &[(2, m1.clone())]),
                r(3, 4, &[(2, m1.clone()), (3, m1.clone())]),
            ],
        ),
        "s11" => (
            4,
            vec![
                r(1, 4, &[(1, m1.clone())]),
                r(2, 3, &[(1, one.clone())]),
                r(2, 4, &[(2, m1.clone())]),
            ],
        ),
        "s12" => (
            4,
            vec![
                r(1, 3, &[(1, m1.clone())]),
                r(1, 4, &[(2, one.clone())]),
                r(2, 3, &[(2, m1.clone())]),
                r(2, 4, &[(1, m1.clone())]),
            ],
        ),
        "n1" => (4, vec![r(2, 4, &[(1, one.clone())]), r(3, 4, &[(2, one.clone())])]),
        "gl2" => (
            4,
            vec![
                r(1, 2, &[(2, one.clone())]),
                r(1, 3, &[(3, m1.clone())]),
                r(2, 3, &[(1, one.clone())]),
            ],
        ),
        "so22" => (
            6,
            vec![
                r(1, 2, &[(2, one.clone())]),
                r(1, 3, &[(3, m1.clone())]),
                r(2, 3, &[(1, one.clone())]),
                r(4, 5, &[(5, one.clone())]),
                r(4, 6, &[(6, m1.clone())]),
                r(5, 6, &[(4, one.clone())]),
            ],
        ),
        "s6_231" => (
            6,
            vec![
                r(2, 3, &[(1, one.clone())]),
                r(5, 1, &[(1, one.clone())]),
                r(5, 2, &[(2, one.clone())]),
                r(6, 1, &[(1, one.clone())]),
                r(6, 3, &[(3, one.clone())]),
                r(6, 5, &[(4, one.clone())]),
            ],
        ),
        "g7" => (
            7,
            vec![
                r(1, 2, &[(3, one.clone())]),
                r(1, 3, &[(4, one.clone())]),
                r(1, 4, &[(5, one.clone())]),
                r(1, 6, &[(7, one.clone())]),
                r(2, 3, &[(6, one.clone())]),
                r(2, 4, &[(7, one.clone())]),
                r(2, 5, &[(7, one.clone())]),
                r(2, 6, &[(7, one.clone())]),
                r(3, 4, &[(7, m1.clone())]),
            ],
        ),
        other => return Err(LieError::Catalog(format!("unknown algebra {other:?}"))),
    };
    let (dim, relations) = rels;
    let mut kept = BTreeMap::new();
    for key in required_params(name) {
        kept.insert(key.to_string(), get(params, key)?);
    }
    if let Some(k) = params.get("k") {
        kept.insert("k".to_string(), k.clone());
    }
    LieAlgebra::from_sparse(name, dim, &relations, kept)
}
