//! Gradations of a Lie algebra by `ℤ^k` (optionally reduced modulo an
//! integer), the induced decompositions of `Λ^m g`, limit homogeneous spaces
//! and the root-gradation test.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{solve_linear, QMatrix, Rational};
use crate::grassmann::{schouten, wedge_basis, MultiVector};
use crate::liealg::LieAlgebra;

/// Errors raised when a gradation does not fit the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    /// The number of degree tuples differs from the dimension.
    #[error("expected {expected} degree tuples, got {got}")]
    Length {
        /// Algebra dimension.
        expected: usize,
        /// Supplied tuple count.
        got: usize,
    },
    /// A degree tuple has the wrong rank.
    #[error("degree of e{index} has {got} components, expected {k}")]
    Rank {
        /// 1-based basis index.
        index: usize,
        /// Declared lattice rank.
        k: usize,
        /// Supplied component count.
        got: usize,
    },
    /// The bracket does not respect the degrees.
    #[error("[e{i}, e{j}] has a component along e{l} of the wrong degree")]
    Incompatible {
        /// 1-based first index.
        i: usize,
        /// 1-based second index.
        j: usize,
        /// 1-based offending component.
        l: usize,
    },
}

/// Degree assignment of the basis vectors in `ℤ^k`, or `(ℤ/modulus)^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gradation {
    /// Rank of the lattice.
    pub k: usize,
    /// Optional modulus applied componentwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<i64>,
    /// One degree tuple per basis vector.
    pub degrees: Vec<Vec<i64>>,
}

/// Degree tuple.
pub type Degree = Vec<i64>;

impl Gradation {
    /// Gradation over `ℤ^k` from explicit tuples.
    pub fn new(degrees: Vec<Vec<i64>>) -> Self {
        let k = degrees.first().map_or(0, Vec::len);
        Self {
            k,
            modulus: None,
            degrees,
        }
    }

    /// Gradation over `ℤ` from one integer per basis vector.
    pub fn scalar(degrees: &[i64]) -> Self {
        Self::new(degrees.iter().map(|&d| vec![d]).collect())
    }

    /// Same degrees reduced modulo `m`.
    pub fn with_modulus(mut self, m: i64) -> Self {
        self.modulus = Some(m);
        self
    }

    /// Canonical representative of a degree.
    pub fn normalize(&self, d: &[i64]) -> Degree {
        match self.modulus {
            Some(m) => d.iter().map(|x| x.rem_euclid(m)).collect(),
            None => d.to_vec(),
        }
    }

    /// Sum of two degrees, normalized.
    pub fn add(&self, a: &[i64], b: &[i64]) -> Degree {
        self.normalize(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    /// Degree of a wedge basis element given by 1-based indices.
    pub fn wedge_degree(&self, idx: &[usize]) -> Degree {
        let mut d = vec![0; self.k];
        for &i in idx {
            d = self.add(&d, &self.degrees[i - 1]);
        }
        self.normalize(&d)
    }

    fn is_zero_degree(&self, d: &[i64]) -> bool {
        self.normalize(d).iter().all(|&x| x == 0)
    }

    fn check_shape(&self, g: &LieAlgebra) -> Result<(), GradingError> {
        if self.degrees.len() != g.dim() {
            return Err(GradingError::Length {
                expected: g.dim(),
                got: self.degrees.len(),
            });
        }
        for (i, d) in self.degrees.iter().enumerate() {
            if d.len() != self.k {
                return Err(GradingError::Rank {
                    index: i + 1,
                    k: self.k,
                    got: d.len(),
                });
            }
        }
        Ok(())
    }
}

/// Outcome of [`verify_gradation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradationCheck {
    /// Whether the bracket respects the degrees.
    pub valid: bool,
    /// Whether the gradation is a root gradation.
    pub root: bool,
    /// First incompatible triple found, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<(usize, usize, usize)>,
}

/// Checks compatibility of the degrees with the bracket and runs the root test.
pub fn verify_gradation(g: &LieAlgebra, grad: &Gradation) -> Result<GradationCheck, GradingError> {
    grad.check_shape(g)?;
    let n = g.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            let expected = grad.add(&grad.degrees[i], &grad.degrees[j]);
            for (l, c) in g.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() && grad.normalize(&grad.degrees[l]) != expected {
                    return Ok(GradationCheck {
                        valid: false,
                        root: false,
                        violation: Some((i + 1, j + 1, l + 1)),
                    });
                }
            }
        }
    }
    Ok(GradationCheck {
        valid: true,
        root: is_root(g, grad),
        violation: None,
    })
}

/// Root test: the degree-zero part is abelian of dimension `k`, acts
/// diagonally on the basis, and the weight of `e_j` is `deg(e_j)·Ξ` for an
/// injective linear map `Ξ`. Gradations with a modulus are never root
/// gradations, since a finite group has no injective additive map to `ℝ`.
fn is_root(g: &LieAlgebra, grad: &Gradation) -> bool {
    if grad.modulus.is_some() {
        return false;
    }
    let n = g.dim();
    let k = grad.k;
    let zero: Vec<usize> = (0..n).filter(|&i| grad.is_zero_degree(&grad.degrees[i])).collect();
    if zero.len() != k || k == 0 {
        return false;
    }
    for &a in &zero {
        for &b in &zero {
            if g.bracket_basis(a, b).iter().any(|c| !c.is_zero()) {
                return false;
            }
        }
    }
    // Weights λ_j(h_a) with ad(h_a) e_j = λ_j(h_a) e_j.
    let mut weights = vec![vec![Rational::zero(); n]; k];
    for (a, &h) in zero.iter().enumerate() {
        let ad = g.ad(h);
        for j in 0..n {
            let col = ad.col(j);
            for (l, c) in col.iter().enumerate() {
                if l != j && !c.is_zero() {
                    return false;
                }
            }
            weights[a][j] = col[j].clone();
        }
    }
    // Solve deg_j · Ξ_a = λ_j(h_a) for each a, then require rank Ξ = k.
    let deg = QMatrix::from_rows(
        grad.degrees
            .iter()
            .map(|d| d.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect(),
    )
    .expect("rectangular");
    let mut xi_rows = Vec::with_capacity(k);
    for w in &weights {
        match solve_linear(&deg, w) {
            Ok(sol) => xi_rows.push(sol.particular),
            Err(_) => return false,
        }
    }
    QMatrix::from_rows(xi_rows).expect("rectangular").rank() == k
}

/// Homogeneous decomposition of `Λ^m g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaDecomposition {
    /// Exterior degree `m`.
    pub m: usize,
    /// Degree to sorted list of wedge basis elements (1-based indices).
    pub spaces: BTreeMap<Degree, Vec<Vec<usize>>>,
}

impl LambdaDecomposition {
    /// Wedge basis elements of a given degree, empty when absent.
    pub fn space(&self, d: &[i64]) -> &[Vec<usize>] {
        self.spaces.get(d).map_or(&[], Vec::as_slice)
    }

    /// Echelon basis (unit coordinate vectors) of the space of degree `d`.
    pub fn echelon(&self, n: usize, d: &[i64]) -> Vec<Vec<Rational>> {
        let basis = wedge_basis(n, self.m);
        self.space(d)
            .iter()
            .map(|idx| {
                let pos = basis.iter().position(|b| b == idx).expect("wedge index");
                let mut v = vec![Rational::zero(); basis.len()];
                v[pos] = Rational::one();
                v
            })
            .collect()
    }
}

/// Partitions the wedge basis of `Λ^m g` by summed degree.
pub fn decompose_lambda(g: &LieAlgebra, grad: &Gradation, m: usize) -> LambdaDecomposition {
    let mut spaces: BTreeMap<Degree, Vec<Vec<usize>>> = BTreeMap::new();
    for idx in wedge_basis(g.dim(), m) {
        spaces.entry(grad.wedge_degree(&idx)).or_default().push(idx);
    }
    LambdaDecomposition { m, spaces }
}

/// Limit homogeneous space of `Λ^2 g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitSpace {
    /// Its degree `α`.
    pub degree: Degree,
    /// Wedge basis elements spanning it.
    pub basis: Vec<Vec<usize>>,
    /// Whether `[u, v]_S = 0` was confirmed for every pair of generators.
    pub verified: bool,
}

/// Degrees `α` with `(Λ^2 g)^{(α)} ≠ 0` and `(Λ^3 g)^{(2α)} = 0`.
pub fn limit_spaces(g: &LieAlgebra, grad: &Gradation) -> Vec<LimitSpace> {
    let l2 = decompose_lambda(g, grad, 2);
    let l3 = decompose_lambda(g, grad, 3);
    let n = g.dim();
    l2.spaces
        .iter()
        .filter(|(d, _)| l3.space(&grad.add(d, d)).is_empty())
        .map(|(d, basis)| {
            let gens: Vec<MultiVector> = basis.iter().map(|i| MultiVector::basis(n, i)).collect();
            let verified = gens
                .iter()
                .all(|u| gens.iter().all(|v| schouten(g, u, v).is_zero()));
            LimitSpace {
                degree: d.clone(),
                basis: basis.clone(),
                verified,
            }
        })
        .collect()
}

/// True when `α` and `β` are limit degrees and `(Λ^3 g)^{(α+β)} = 0`, so any
/// sum of bivectors from the two spaces solves the CYBE.
pub fn compatible_limit_pair(g: &LieAlgebra, grad: &Gradation, a: &[i64], b: &[i64]) -> bool {
    let l3 = decompose_lambda(g, grad, 3);
    let empty = |d: Degree| l3.space(&d).is_empty();
    empty(grad.add(a, a)) && empty(grad.add(b, b)) && empty(grad.add(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact::q;

    fn cat(name: &str) -> LieAlgebra {
        catalog::algebra(name, &BTreeMap::new()).unwrap()
    }

    fn so22_grading() -> Gradation {
        Gradation::new(vec![
            vec![0, 0],
            vec![1, 0],
            vec![-1, 0],
            vec![0, 0],
            vec![0, 1],
            vec![0, -1],
        ])
    }

    #[test]
    fn three_dimensional_gradations() {
        let check = |name: &str, g: Gradation| verify_gradation(&cat(name), &g).unwrap();
        let sl2 = check("sl2", Gradation::scalar(&[0, 1, -1]));
        assert!(sl2.valid && sl2.root);
        let h = check("h", Gradation::scalar(&[1, 2, 3]));
        assert!(h.valid && !h.root);
        let su2 = check("su2", Gradation::scalar(&[0, 1, 1]).with_modulus(2));
        assert!(su2.valid && !su2.root);
        assert!(!check("su2", Gradation::scalar(&[0, 1, 1])).valid);
        let r = check("r3_m1", Gradation::scalar(&[0, 1, -1]));
        assert!(r.valid && r.root);
        let r = check("r3_1", Gradation::scalar(&[0, 1, 1]));
        assert!(r.valid && r.root);
        let r = check("r3_1", Gradation::new(vec![vec![0, 0], vec![1, 0], vec![0, 1]]));
        assert!(r.valid && !r.root);
        let r = check("r3_0p", Gradation::scalar(&[0, 1, 1]));
        assert!(r.valid && !r.root);
        let r = check("r3", Gradation::scalar(&[1, 1, 0]));
        assert!(r.valid && !r.root);
    }

    #[test]
    fn rescaled_real_gradation_of_r3_lambda() {
        let mut p = BTreeMap::new();
        p.insert("lambda".to_string(), crate::exact::qf(2, 3));
        let g = catalog::algebra("r3_l", &p).unwrap();
        let c = verify_gradation(&g, &Gradation::scalar(&[3, 2, 0])).unwrap();
        assert!(c.valid && c.root);
    }

    #[test]
    fn incompatible_gradation_is_reported() {
        let c = verify_gradation(&cat("sl2"), &Gradation::scalar(&[0, 1, 1])).unwrap();
        assert!(!c.valid);
        assert_eq!(c.violation, Some((2, 3, 1)));
        assert!(verify_gradation(&cat("sl2"), &Gradation::scalar(&[0, 1])).is_err());
    }

    #[test]
    fn so22_decomposition_and_limit_spaces() {
        let g = cat("so22");
        let grad = so22_grading();
        assert!(verify_gradation(&g, &grad).unwrap().root);
        let d = decompose_lambda(&g, &grad, 2);
        assert_eq!(d.space(&[1, 1]), &[vec![2, 5]]);
        let limits = limit_spaces(&g, &grad);
        assert!(limits.iter().all(|l| l.verified));
        assert!(limits.iter().any(|l| l.degree == vec![1, 1]));
        assert!(limits.iter().any(|l| l.degree == vec![0, 1]));
        assert!(compatible_limit_pair(&g, &grad, &[0, 1], &[1, 1]));
    }

    #[test]
    fn top_degree_has_single_space_and_trivial_grading_has_no_limits() {
        let g = cat("sl2");
        let d = decompose_lambda(&g, &Gradation::scalar(&[0, 1, -1]), 3);
        assert_eq!(d.spaces.len(), 1);
        let triv = Gradation::scalar(&[0, 0, 0]);
        assert_eq!(decompose_lambda(&g, &triv, 2).spaces.len(), 1);
        assert!(limit_spaces(&g, &triv).is_empty());
        let e = decompose_lambda(&g, &triv, 2).echelon(3, &[0]);
        assert_eq!(e.len(), 3);
        assert_eq!(e[0][0], q(1));
    }
}
