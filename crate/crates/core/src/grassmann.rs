//! Exterior algebra of a Lie algebra: multivectors, the algebraic Schouten
//! bracket, lifts of linear maps to `Λ^m g`, invariant subspaces, the reduced
//! quotient by invariants and the invariant top wedges of traceless ideals.
//!
//! The wedge basis of `Λ^m g` is ordered lexicographically on strictly
//! increasing index tuples, e.g. `e12, e13, e14, e23, e24, e34` for `n = 4`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{echelon_basis, in_span, q, QMatrix, Rational};
use crate::liealg::LieAlgebra;

/// Errors raised by the Grassmann-algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrassmannError {
    /// A user-supplied subspace is not closed under the adjoint action.
    #[error("subspace is not an ideal: [e{basis}, w{vector}] leaves it")]
    NotAnIdeal {
        /// 1-based basis index of the acting element.
        basis: usize,
        /// 0-based index of the subspace vector.
        vector: usize,
    },
    /// A user-supplied ideal has an adjoint restriction with nonzero trace.
    #[error("ideal is not traceless: tr(ad e{basis} restricted) = {trace}")]
    NotTraceless {
        /// 1-based basis index.
        basis: usize,
        /// The offending trace.
        trace: String,
    },
    /// Multivector degrees or ambient dimensions do not match.
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
}

/// Lexicographic wedge basis of `Λ^m` of an `n`-dimensional space (1-based).
pub fn wedge_basis(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    rec(1, n, m, &mut cur, &mut out);
    out
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Position of a strictly increasing 1-based tuple in the lexicographic basis.
pub fn wedge_index(n: usize, idx: &[usize]) -> usize {
    let m = idx.len();
    let mut pos = 0;
    let mut prev = 0;
    for (t, &v) in idx.iter().enumerate() {
        for skipped in prev + 1..v {
            pos += binomial(n - skipped, m - t - 1);
        }
        prev = v;
    }
    pos
}

/// Sorts an index list, returning the permutation sign, or `None` when an
/// index repeats (the wedge vanishes).
pub fn sort_sign(idx: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for a in 0..v.len() {
        for b in 0..v.len().saturating_sub(a + 1) {
            if v[b] == v[b + 1] {
                return None;
            }
            if v[b] > v[b + 1] {
                v.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

/// Homogeneous element of `Λ^m g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiVector {
    n: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

/// One term of the JSON form of a multivector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiVectorTerm {
    /// Strictly increasing 1-based indices.
    pub idx: Vec<usize>,
    /// Coefficient.
    #[serde(with = "crate::exact::serde_rational")]
    pub c: Rational,
}

/// JSON form of a multivector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiVectorJson {
    /// Degree `m`.
    pub degree: usize,
    /// Nonzero terms.
    pub terms: Vec<MultiVectorTerm>,
}

/// Which rule extends a linear map on `g` to `Λ^m g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftMode {
    /// Sum over slots, the action of a derivation.
    Derivation,
    /// `T e_{i1} ∧ ... ∧ T e_{im}`, the action of a group element.
    Group,
}

impl MultiVector {
    /// The zero element of `Λ^m` of an `n`-dimensional algebra.
    pub fn zero(n: usize, degree: usize) -> Self {
        Self {
            n,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The scalar `c` in `Λ^0`.
    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut w = Self::zero(n, 0);
        w.add_term(&[], c);
        w
    }

    /// The basis wedge `e_{i1} ∧ ... ∧ e_{im}` (any order, 1-based).
    pub fn basis(n: usize, idx: &[usize]) -> Self {
        let mut w = Self::zero(n, idx.len());
        w.add_term(idx, Rational::one());
        w
    }

    /// Builds from coordinates in the lexicographic wedge basis.
    pub fn from_coords(n: usize, degree: usize, coords: &[Rational]) -> Self {
        let mut w = Self::zero(n, degree);
        for (b, c) in wedge_basis(n, degree).iter().zip(coords) {
            w.add_term(b, c.clone());
        }
        w
    }

    /// Builds a degree-1 element from a vector.
    pub fn from_vector(v: &[Rational]) -> Self {
        Self::from_coords(v.len(), 1, v)
    }

    /// Adds `c` times the wedge of `idx`, reordering with sign.
    pub fn add_term(&mut self, idx: &[usize], c: Rational) {
        assert_eq!(idx.len(), self.degree, "term degree mismatch");
        assert!(idx.iter().all(|&i| i >= 1 && i <= self.n), "index out of range");
        if c.is_zero() {
            return;
        }
        let Some((sign, key)) = sort_sign(idx) else {
            return;
        };
        let entry = self.coeffs.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c * q(sign);
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// Dimension of the parent algebra.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree `m`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero terms keyed by increasing index tuples.
    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.coeffs
    }

    /// Coefficient of a sorted index tuple.
    pub fn coeff(&self, idx: &[usize]) -> Rational {
        self.coeffs.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    /// True when no term is stored.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coordinates in the lexicographic wedge basis.
    pub fn coords(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); binomial(self.n, self.degree)];
        for (k, c) in &self.coeffs {
            v[wedge_index(self.n, k)] = c.clone();
        }
        v
    }

    /// Sum of two multivectors of equal degree.
    pub fn add(&self, other: &MultiVector) -> MultiVector {
        assert_eq!((self.n, self.degree), (other.n, other.degree), "shape mismatch");
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k, c.clone());
        }
        out
    }

    /// Difference of two multivectors of equal degree.
    pub fn sub(&self, other: &MultiVector) -> MultiVector {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rational) -> MultiVector {
        let mut out = MultiVector::zero(self.n, self.degree);
        for (k, c) in &self.coeffs {
            out.add_term(k, c * s);
        }
        out
    }

    /// Wedge product.
    pub fn wedge(&self, other: &MultiVector) -> MultiVector {
        assert_eq!(self.n, other.n, "parent dimension mismatch");
        let mut out = MultiVector::zero(self.n, self.degree + other.degree);
        if self.degree + other.degree > self.n {
            return out;
        }
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(&idx, ca * cb);
            }
        }
        out
    }

    /// JSON form.
    pub fn to_json(&self) -> MultiVectorJson {
        MultiVectorJson {
            degree: self.degree,
            terms: self
                .coeffs
                .iter()
                .map(|(k, c)| MultiVectorTerm {
                    idx: k.clone(),
                    c: c.clone(),
                })
                .collect(),
        }
    }

    /// Builds from the JSON form for an `n`-dimensional algebra.
    pub fn from_json(n: usize, json: &MultiVectorJson) -> Result<Self, GrassmannError> {
        let mut w = MultiVector::zero(n, json.degree);
        for t in &json.terms {
            if t.idx.len() != json.degree || t.idx.iter().any(|&i| i == 0 || i > n) {
                return Err(GrassmannError::DegreeMismatch(format!(
                    "term {:?} does not fit degree {} in dimension {n}",
                    t.idx, json.degree
                )));
            }
            w.add_term(&t.idx, t.c.clone());
        }
        Ok(w)
    }

    /// Compact text such as `e12 - 2*e34` (indices concatenated when `n < 10`).
    pub fn describe(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (t, (k, c)) in self.coeffs.iter().enumerate() {
            let name = if k.is_empty() {
                String::new()
            } else if self.n < 10 {
                format!("e{}", k.iter().map(usize::to_string).collect::<String>())
            } else {
                format!("e{}", k.iter().map(usize::to_string).collect::<Vec<_>>().join("_"))
            };
            let neg = c < &Rational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if t > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            match (a.is_one(), name.is_empty()) {
                (true, false) => s.push_str(&name),
                (_, true) => s.push_str(&a.to_string()),
                (false, false) => s.push_str(&format!("{a}*{name}")),
            }
        }
        s
    }
}

/// Algebraic Schouten bracket.
///
/// On decomposable arguments it is
/// `[X1∧…∧Xp, Y1∧…∧Yq] = Σ (-1)^{i+j} [Xi, Yj] ∧ X1…X̂i…Xp ∧ Y1…Ŷj…Yq`,
/// extended bilinearly; brackets with a scalar vanish.
pub fn schouten(g: &LieAlgebra, u: &MultiVector, v: &MultiVector) -> MultiVector {
    let n = g.dim();
    assert_eq!((u.n, v.n), (n, n), "multivectors must live on the same algebra");
    if u.degree == 0 || v.degree == 0 {
        return MultiVector::zero(n, (u.degree + v.degree).saturating_sub(1));
    }
    let mut out = MultiVector::zero(n, u.degree + v.degree - 1);
    for (a, ca) in &u.coeffs {
        for (b, cb) in &v.coeffs {
            let f = ca * cb;
            for i in 0..a.len() {
                for j in 0..b.len() {
                    let br = g.bracket_basis(a[i] - 1, b[j] - 1);
                    let sign = if (i + j) % 2 == 0 { q(1) } else { q(-1) };
                    for (k, c) in br.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut idx = Vec::with_capacity(out.degree);
                        idx.push(k + 1);
                        idx.extend(a.iter().enumerate().filter(|&(t, _)| t != i).map(|(_, &x)| x));
                        idx.extend(b.iter().enumerate().filter(|&(t, _)| t != j).map(|(_, &x)| x));
                        out.add_term(&idx, &f * c * &sign);
                    }
                }
            }
        }
    }
    out
}

/// Lift of a linear map on `g` to `Λ^m g` in the lexicographic wedge basis.
pub fn lift(t: &QMatrix, m: usize, mode: LiftMode) -> QMatrix {
    let n = t.rows();
    let basis = wedge_basis(n, m);
    let size = basis.len();
    let mut out = QMatrix::zeros(size, size);
    match mode {
        LiftMode::Derivation => {
            for (col, jdx) in basis.iter().enumerate() {
                for slot in 0..m {
                    for k in 0..n {
                        let c = t.get(k, jdx[slot] - 1);
                        if c.is_zero() {
                            continue;
                        }
                        let mut idx = jdx.clone();
                        idx[slot] = k + 1;
                        if let Some((sign, key)) = sort_sign(&idx) {
                            out.add_to(wedge_index(n, &key), col, &(c * q(sign)));
                        }
                    }
                }
            }
        }
        LiftMode::Group => {
            for (col, jdx) in basis.iter().enumerate() {
                for (row, idx) in basis.iter().enumerate() {
                    let mut minor = QMatrix::zeros(m, m);
                    for (a, &i) in idx.iter().enumerate() {
                        for (b, &j) in jdx.iter().enumerate() {
                            minor.set(a, b, t.get(i - 1, j - 1).clone());
                        }
                    }
                    let d = if m == 0 { Rational::one() } else { minor.det().expect("square") };
                    out.set(row, col, d);
                }
            }
        }
    }
    out
}

/// Echelon basis of the invariant subspace `(Λ^m g)^g`: the joint kernel of
/// the derivation lifts of all `ad_{e_i}`.
pub fn invariant_subspace(g: &LieAlgebra, m: usize) -> Vec<Vec<Rational>> {
    let size = binomial(g.dim(), m);
    let mut stacked = QMatrix::zeros(0, size);
    for i in 0..g.dim() {
        stacked = stacked
            .vstack(&lift(&g.ad(i), m, LiftMode::Derivation))
            .expect("same width");
    }
    stacked.rank_kernel().1
}

/// Class of a multivector modulo the invariant subspace of its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedClass {
    /// A representative of the class.
    pub representative: MultiVector,
    /// Echelon basis of the invariant subspace of the same degree.
    pub invariant_basis: Vec<Vec<Rational>>,
}

impl ReducedClass {
    /// True when both classes contain the same elements.
    pub fn same_class(&self, other: &ReducedClass) -> bool {
        self.representative.degree == other.representative.degree
            && in_span(
                &self.invariant_basis,
                &self.representative.sub(&other.representative).coords(),
            )
    }

    /// True when this is the class of zero.
    pub fn is_zero(&self) -> bool {
        in_span(&self.invariant_basis, &self.representative.coords())
    }
}

/// Projects `w` to the reduced space.
pub fn reduce(g: &LieAlgebra, w: &MultiVector) -> ReducedClass {
    ReducedClass {
        representative: w.clone(),
        invariant_basis: invariant_subspace(g, w.degree()),
    }
}

/// Reduced Schouten bracket `[[u], [v]]_R = [[u, v]_S]`.
pub fn reduced_bracket(g: &LieAlgebra, a: &ReducedClass, b: &ReducedClass) -> ReducedClass {
    reduce(g, &schouten(g, &a.representative, &b.representative))
}

/// A traceless ideal together with its invariant top wedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracelessIdeal {
    /// Echelon basis of the ideal.
    pub ideal: Vec<Vec<Rational>>,
    /// Wedge of the basis vectors, an element of `Λ^{dim} g`.
    pub top_wedge: MultiVector,
    /// Result of checking `[e_i, top_wedge]_S = 0` for every basis vector.
    pub invariant: bool,
}

/// Checks that `basis` spans a traceless ideal and returns its top wedge.
pub fn traceless_ideal(
    g: &LieAlgebra,
    basis: &[Vec<Rational>],
) -> Result<TracelessIdeal, GrassmannError> {
    let n = g.dim();
    let ideal = echelon_basis(n, basis);
    let pivots: Vec<usize> = ideal
        .iter()
        .map(|v| v.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect();
    for i in 0..n {
        let mut trace = Rational::zero();
        for (b, w) in ideal.iter().enumerate() {
            let img = g.bracket(&g.basis_vector(i), w);
            if !in_span(&ideal, &img) {
                return Err(GrassmannError::NotAnIdeal { basis: i + 1, vector: b });
            }
            trace += &img[pivots[b]];
        }
        if !trace.is_zero() {
            return Err(GrassmannError::NotTraceless {
                basis: i + 1,
                trace: trace.to_string(),
            });
        }
    }
    let mut top = MultiVector::scalar(n, Rational::one());
    for w in &ideal {
        top = top.wedge(&MultiVector::from_vector(w));
    }
    let invariant = (0..n).all(|i| {
        schouten(g, &MultiVector::from_vector(&g.basis_vector(i)), &top).is_zero()
    });
    Ok(TracelessIdeal {
        ideal,
        top_wedge: top,
        invariant,
    })
}

/// Traceless ideals found among the center, the terms of the lower central
/// and derived series, and the user-supplied subspaces.
///
/// Candidates from the series that fail to be traceless are skipped; a
/// user-supplied subspace that fails is reported as an error.
pub fn traceless_ideal_invariants(
    g: &LieAlgebra,
    user: &[Vec<Vec<Rational>>],
) -> Result<Vec<TracelessIdeal>, GrassmannError> {
    let series = g.ideals_and_series();
    let mut candidates = vec![series.center.clone()];
    candidates.extend(series.lower_central.iter().cloned());
    candidates.extend(series.derived.iter().cloned());
    let mut seen: Vec<Vec<Vec<Rational>>> = Vec::new();
    let mut out = Vec::new();
    for c in candidates {
        if c.is_empty() || seen.contains(&c) {
            continue;
        }
        seen.push(c.clone());
        if let Ok(t) = traceless_ideal(g, &c) {
            out.push(t);
        }
    }
    for u in user {
        let t = traceless_ideal(g, u)?;
        if !seen.contains(&t.ideal) {
            seen.push(t.ideal.clone());
            out.push(t);
        }
    }
    Ok(out)
}

/// Bivectors `z ∧ y` with `z` central and `y` in `g_{p-2}`, where `g_p` is the
/// first vanishing term of the lower central series of a nilpotent algebra.
/// Empty for algebras that are not nilpotent.
pub fn center_wedge_series(g: &LieAlgebra) -> Vec<MultiVector> {
    let s = g.ideals_and_series();
    let Some(last) = s.lower_central.last() else {
        return Vec::new();
    };
    if !last.is_empty() || s.lower_central.len() < 3 {
        return Vec::new();
    }
    // lower_central[t] is g_{t+1}; the first zero term is g_p with p = len.
    let p = s.lower_central.len();
    let part = &s.lower_central[p - 3];
    let mut out = Vec::new();
    for z in &s.center {
        for y in part {
            let w = MultiVector::from_vector(z).wedge(&MultiVector::from_vector(y));
            if !w.is_zero() {
                out.push(w);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact::QMatrix;

    fn empty() -> BTreeMap<String, Rational> {
        BTreeMap::new()
    }

    /// The alternative `sl2` basis with `[e1,e2]=e1, [e1,e3]=2e2, [e2,e3]=e3`.
    fn sl2_alt() -> LieAlgebra {
        LieAlgebra::from_sparse(
            "sl2_alt",
            3,
            &[
                (1, 2, vec![(1, q(1))]),
                (1, 3, vec![(2, q(2))]),
                (2, 3, vec![(3, q(1))]),
            ],
            empty(),
        )
        .unwrap()
    }

    #[test]
    fn wedge_basis_is_lexicographic() {
        assert_eq!(
            wedge_basis(4, 2),
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        for (i, b) in wedge_basis(5, 3).iter().enumerate() {
            assert_eq!(wedge_index(5, b), i);
        }
        assert_eq!(wedge_basis(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn schouten_examples_in_alternative_sl2_basis() {
        let g = sl2_alt();
        let e1 = MultiVector::basis(3, &[1]);
        assert_eq!(
            schouten(&g, &e1, &MultiVector::basis(3, &[2, 3])),
            MultiVector::basis(3, &[1, 3])
        );
        assert!(schouten(&g, &e1, &MultiVector::basis(3, &[1, 2, 3])).is_zero());
    }

    #[test]
    fn schouten_with_scalar_vanishes() {
        let g = sl2_alt();
        let w = MultiVector::basis(3, &[1, 2]);
        assert!(schouten(&g, &MultiVector::scalar(3, q(5)), &w).is_zero());
    }

    #[test]
    fn degree_one_schouten_is_the_bracket() {
        let g = catalog::algebra("s12", &empty()).unwrap();
        for i in 1..=4 {
            for j in 1..=4 {
                let s = schouten(&g, &MultiVector::basis(4, &[i]), &MultiVector::basis(4, &[j]));
                assert_eq!(s.coords(), g.bracket_basis(i - 1, j - 1));
            }
        }
    }

    #[test]
    fn derivation_lift_of_identity_doubles() {
        let l = lift(&QMatrix::identity(4), 2, LiftMode::Derivation);
        assert_eq!(l, QMatrix::identity(6).scale(&q(2)));
    }

    #[test]
    fn group_lift_at_top_degree_is_determinant() {
        let t = QMatrix::from_i64(&[&[1, 2, 0], &[0, 3, 1], &[2, 0, 1]]);
        let l = lift(&t, 3, LiftMode::Group);
        assert_eq!(l, QMatrix::from_rows(vec![vec![t.det().unwrap()]]).unwrap());
    }

    #[test]
    fn s1_component_representatives_lift_to_diagonal_matrices() {
        let g = catalog::algebra("s1", &empty()).unwrap();
        for (l1, l2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let t = QMatrix::from_i64(&[&[l1, 0, 0, 0], &[0, l1, 0, 0], &[0, 0, l2, 0], &[0, 0, 0, 1]]);
            assert!(g.automorphism_check(&t));
            let mut expect = QMatrix::zeros(6, 6);
            for (i, v) in [1, l1 * l2, l1, l1 * l2, l1, l2].iter().enumerate() {
                expect.set(i, i, q(*v));
            }
            assert_eq!(lift(&t, 2, LiftMode::Group), expect);
        }
    }

    #[test]
    fn invariant_subspaces_of_examples() {
        let sl2 = catalog::algebra("sl2", &empty()).unwrap();
        assert!(invariant_subspace(&sl2, 2).is_empty());
        assert_eq!(invariant_subspace(&sl2, 3), vec![vec![q(1)]]);
        let n1 = catalog::algebra("n1", &empty()).unwrap();
        let e = |i: usize| {
            let mut v = vec![q(0); 4];
            v[i] = q(1);
            v
        };
        assert_eq!(invariant_subspace(&n1, 3), vec![e(0), e(1)]);
        let h = catalog::algebra("h", &empty()).unwrap();
        let mut e13 = vec![q(0); 3];
        e13[1] = q(1);
        let mut e23 = vec![q(0); 3];
        e23[2] = q(1);
        assert_eq!(invariant_subspace(&h, 2), vec![e13, e23]);
    }

    #[test]
    fn s1_reduction_kills_e12() {
        let g = catalog::algebra("s1", &empty()).unwrap();
        let a = reduce(&g, &MultiVector::basis(4, &[1, 2]));
        assert!(a.is_zero());
        assert!(a.same_class(&reduce(&g, &MultiVector::zero(4, 2))));
    }

    #[test]
    fn reduced_square_vanishes_in_sl2() {
        let g = catalog::algebra("sl2", &empty()).unwrap();
        let r = reduce(&g, &MultiVector::basis(3, &[2, 3]));
        assert!(reduced_bracket(&g, &r, &r).is_zero());
    }

    #[test]
    fn heisenberg_center_is_traceless_ideal() {
        let h = catalog::algebra("h", &empty()).unwrap();
        let t = traceless_ideal(&h, &[vec![q(0), q(0), q(1)]]).unwrap();
        assert_eq!(t.top_wedge, MultiVector::basis(3, &[3]));
        assert!(t.invariant);
    }

    #[test]
    fn unimodular_algebra_has_invariant_volume() {
        let g = catalog::algebra("sl2", &empty()).unwrap();
        let found = traceless_ideal_invariants(&g, &[]).unwrap();
        assert!(found
            .iter()
            .any(|t| t.top_wedge == MultiVector::basis(3, &[1, 2, 3]) && t.invariant));
    }

    #[test]
    fn user_subspace_errors() {
        let g = catalog::algebra("sl2", &empty()).unwrap();
        assert!(matches!(
            traceless_ideal(&g, &[vec![q(1), q(0), q(0)]]),
            Err(GrassmannError::NotAnIdeal { .. })
        ));
        let r = catalog::algebra("r3_1", &empty()).unwrap();
        assert!(matches!(
            traceless_ideal(&r, &[vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]]),
            Err(GrassmannError::NotTraceless { .. })
        ));
    }

    #[test]
    fn heisenberg_center_wedges_are_invariant() {
        let h = catalog::algebra("h", &empty()).unwrap();
        let ws = center_wedge_series(&h);
        assert_eq!(ws.len(), 2);
        let inv = invariant_subspace(&h, 2);
        for w in ws {
            assert!(in_span(&inv, &w.coords()));
        }
    }
}
