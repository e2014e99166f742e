//! Finite-dimensional real Lie algebras given by rational structure
//! constants.
//!
//! Covers construction with an exhaustive Jacobi check, brackets and adjoint
//! matrices, the Killing form, derivations, center and the lower central and
//! derived series, automorphism checks, exponentials of derivations and the
//! center extension that turns a Lie algebra with nontrivial center into a
//! faithful matrix algebra.
//!
//! Matrices act on column vectors: the image of `e_j` is column `j`, so
//! `D e_j = sum_i D[i][j] e_i`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{
    echelon_basis, format_rational, parse_rational, q, ExactError, QMatrix, Rational,
};
use crate::invforms::SymForm;

/// Errors raised while building or manipulating Lie algebras.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    /// The Jacobi identity fails for basis triple `(i, j, k)` in component `l`
    /// (all indices 1-based).
    #[error("Jacobi identity fails for (e{i}, e{j}, e{k}) in component e{l}")]
    JacobiViolation {
        /// First basis index.
        i: usize,
        /// Second basis index.
        j: usize,
        /// Third basis index.
        k: usize,
        /// Offending output component.
        l: usize,
    },
    /// A basis index or coefficient vector does not fit the dimension.
    #[error("index error: {0}")]
    IndexError(String),
    /// No center extension with nonzero central weights exists.
    #[error("center extension infeasible: the weight of central vector e{forced_zero} is forced to zero")]
    Infeasible {
        /// 1-based index of a central basis vector whose weight must vanish.
        forced_zero: usize,
    },
    /// The center is not spanned by basis vectors, so the weight method does not apply.
    #[error("center is not spanned by basis vectors")]
    CenterNotCoordinate,
    /// A catalog name or parameter could not be resolved.
    #[error("unknown algebra or bad parameters: {0}")]
    Catalog(String),
    /// Propagated exact-kernel error.
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// One bracket `[e_i, e_j] = sum_k coeffs[k-1] e_k` with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bracket {
    /// Left basis index (1-based).
    pub i: usize,
    /// Right basis index (1-based).
    pub j: usize,
    /// Coefficients of the result in the basis, length `dim`.
    #[serde(with = "crate::exact::serde_rational_vec")]
    pub coeffs: Vec<Rational>,
}

/// A Lie algebra over the rationals with validated structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    /// `table[pair(i, j)]` holds `[e_i, e_j]` for `i < j` (0-based).
    table: Vec<Vec<Rational>>,
    labels: Vec<String>,
    params: BTreeMap<String, Rational>,
}

/// JSON form of a Lie algebra: omitted pairs have zero bracket.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieAlgebraJson {
    /// Display name.
    pub name: String,
    /// Dimension.
    pub dim: usize,
    /// Basis labels; defaults to `e1..en` when empty.
    #[serde(default)]
    pub basis: Vec<String>,
    /// Nonzero brackets with `i < j`.
    pub brackets: Vec<Bracket>,
}

/// A derivation of a Lie algebra, stored as its matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    /// Matrix of the derivation acting on column vectors.
    pub matrix: QMatrix,
}

/// Center together with the lower central and derived series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    /// Echelon basis of the center.
    pub center: Vec<Vec<Rational>>,
    /// `g = g_1 ⊃ g_2 = [g, g_1] ⊃ ...` until it stabilizes, as echelon bases.
    pub lower_central: Vec<Vec<Vec<Rational>>>,
    /// `g ⊃ [g, g] ⊃ ...` until it stabilizes, as echelon bases.
    pub derived: Vec<Vec<Vec<Rational>>>,
}

/// Exponential of a derivation.
#[derive(Clone, Debug, PartialEq)]
pub enum ExpMatrix {
    /// Exact truncated series for a nilpotent derivation.
    Exact(QMatrix),
    /// Floating-point series for a non-nilpotent derivation, row-major.
    Float(Vec<Vec<f64>>),
}

/// Faithful matrix representation obtained by adjoining a weight element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterExtension {
    /// Weights `alpha_i` with `[e, e_i] = alpha_i e_i`.
    pub alphas: Vec<Rational>,
    /// `R_{e_i}` acting on the extended basis `(e_1, ..., e_n, e)`.
    pub rep_matrices: Vec<QMatrix>,
    /// 1-based indices of the central basis vectors.
    pub central: Vec<usize>,
    /// Basis order used by the method: central vectors first (1-based).
    pub center_first_order: Vec<usize>,
}

impl CenterExtension {
    /// Checks `[R_{e_i}, R_{e_j}] = sum_k c_ij^k R_{e_k}` for all pairs.
    pub fn satisfies_relations(&self, g: &LieAlgebra) -> bool {
        let n = g.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = self.rep_matrices[i]
                    .commutator(&self.rep_matrices[j])
                    .expect("square");
                let mut rhs = QMatrix::zeros(n + 1, n + 1);
                for (k, c) in g.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        rhs = rhs.add(&self.rep_matrices[k].scale(c)).expect("size");
                    }
                }
                lhs == rhs
            })
        })
    }

    /// Echelon basis of `{ a : sum_i a_i R_{e_i} = 0 }`; empty exactly when
    /// the representation is faithful.
    pub fn joint_kernel(&self) -> Vec<Vec<Rational>> {
        let cols: Vec<Vec<Rational>> = self
            .rep_matrices
            .iter()
            .map(|m| m.entries().to_vec())
            .collect();
        let rows = cols.first().map_or(0, Vec::len);
        QMatrix::from_columns(rows, &cols).rank_kernel().1
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// Builds and validates an algebra from brackets with 1-based indices.
    ///
    /// A bracket given with `i > j` is stored through antisymmetry. Brackets
    /// for the same pair are summed.
    pub fn build(
        name: &str,
        dim: usize,
        brackets: &[Bracket],
        labels: Option<Vec<String>>,
        params: BTreeMap<String, Rational>,
    ) -> Result<Self, LieError> {
        let mut table = vec![vec![Rational::zero(); dim]; dim * dim.saturating_sub(1) / 2];
        for b in brackets {
            if b.i == 0 || b.j == 0 || b.i > dim || b.j > dim {
                return Err(LieError::IndexError(format!(
                    "bracket [e{}, e{}] outside 1..={dim}",
                    b.i, b.j
                )));
            }
            if b.coeffs.len() != dim {
                return Err(LieError::IndexError(format!(
                    "bracket [e{}, e{}] has {} coefficients, expected {dim}",
                    b.i,
                    b.j,
                    b.coeffs.len()
                )));
            }
            if b.i == b.j {
                if b.coeffs.iter().any(|c| !c.is_zero()) {
                    return Err(LieError::IndexError(format!(
                        "[e{0}, e{0}] must vanish",
                        b.i
                    )));
                }
                continue;
            }
            let (i, j, sign) = if b.i < b.j {
                (b.i - 1, b.j - 1, Rational::one())
            } else {
                (b.j - 1, b.i - 1, -Rational::one())
            };
            let slot = &mut table[pair_index(dim, i, j)];
            for (s, c) in slot.iter_mut().zip(&b.coeffs) {
                *s += c * &sign;
            }
        }
        let labels = labels.unwrap_or_else(|| (1..=dim).map(|i| format!("e{i}")).collect());
        if labels.len() != dim {
            return Err(LieError::IndexError("label count differs from dimension".into()));
        }
        let g = LieAlgebra {
            name: name.to_string(),
            dim,
            table,
            labels,
            params,
        };
        g.check_jacobi()?;
        Ok(g)
    }

    /// Builds from sparse relations `(i, j, [(k, c)])`, all 1-based.
    pub fn from_sparse(
        name: &str,
        dim: usize,
        relations: &[(usize, usize, Vec<(usize, Rational)>)],
        params: BTreeMap<String, Rational>,
    ) -> Result<Self, LieError> {
        let mut brackets = Vec::new();
        for (i, j, terms) in relations {
            let mut coeffs = vec![Rational::zero(); dim];
            for (k, c) in terms {
                if *k == 0 || *k > dim {
                    return Err(LieError::IndexError(format!("component e{k} outside 1..={dim}")));
                }
                coeffs[k - 1] += c;
            }
            brackets.push(Bracket {
                i: *i,
                j: *j,
                coeffs,
            });
        }
        Self::build(name, dim, &brackets, None, params)
    }

    /// Parses the JSON form and validates it.
    pub fn from_json(json: &LieAlgebraJson) -> Result<Self, LieError> {
        let labels = (!json.basis.is_empty()).then(|| json.basis.clone());
        Self::build(&json.name, json.dim, &json.brackets, labels, BTreeMap::new())
    }

    /// JSON form listing the nonzero brackets with `i < j`.
    pub fn to_json(&self) -> LieAlgebraJson {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = &self.table[pair_index(self.dim, i, j)];
                if c.iter().any(|x| !x.is_zero()) {
                    brackets.push(Bracket {
                        i: i + 1,
                        j: j + 1,
                        coeffs: c.clone(),
                    });
                }
            }
        }
        LieAlgebraJson {
            name: self.name.clone(),
            dim: self.dim,
            basis: self.labels.clone(),
            brackets,
        }
    }

    /// Display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis labels.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Parameter values the algebra was instantiated with.
    pub fn params(&self) -> &BTreeMap<String, Rational> {
        &self.params
    }

    /// `[e_i, e_j]` for 0-based indices.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => vec![Rational::zero(); self.dim],
            std::cmp::Ordering::Less => self.table[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => self.table[pair_index(self.dim, j, i)]
                .iter()
                .map(|c| -c)
                .collect(),
        }
    }

    /// Structure constant `c_ij^k` for 0-based indices.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Rational::zero(),
            std::cmp::Ordering::Less => self.table[pair_index(self.dim, i, j)][k].clone(),
            std::cmp::Ordering::Greater => -self.table[pair_index(self.dim, j, i)][k].clone(),
        }
    }

    /// Bracket of two vectors given in basis coordinates.
    pub fn bracket(&self, v: &[Rational], w: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if w[j].is_zero() || i == j {
                    continue;
                }
                let f = &v[i] * &w[j];
                for (o, c) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_{e_i}` (0-based `i`).
    pub fn ad(&self, i: usize) -> QMatrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.bracket_basis(i, j)).collect();
        QMatrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `ad_v` for a vector `v`.
    pub fn ad_vec(&self, v: &[Rational]) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.ad(i).scale(c)).expect("same shape");
            }
        }
        m
    }

    /// Basis vector `e_{i+1}` as coordinates.
    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let ei = self.basis_vector(i);
                    let ej = self.basis_vector(j);
                    let ek = self.basis_vector(k);
                    let a = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let b = self.bracket(&ej, &self.bracket(&ek, &ei));
                    let c = self.bracket(&ek, &self.bracket(&ei, &ej));
                    for l in 0..n {
                        if !(&a[l] + &b[l] + &c[l]).is_zero() {
                            return Err(LieError::JacobiViolation {
                                i: i + 1,
                                j: j + 1,
                                k: k + 1,
                                l: l + 1,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Killing form `kappa(e_i, e_j) = tr(ad_{e_i} ad_{e_j})`.
    pub fn killing_form(&self) -> SymForm {
        let ads: Vec<QMatrix> = (0..self.dim).map(|i| self.ad(i)).collect();
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = ads[i].mul(&ads[j]).expect("square").trace();
                m.set(i, j, t.clone());
                m.set(j, i, t);
            }
        }
        SymForm::new(self.name.clone(), 1, m)
    }

    /// True when `d` satisfies the Leibniz rule on every basis pair.
    pub fn is_derivation(&self, d: &QMatrix) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(&self.bracket_basis(i, j)).expect("n x n");
                let a = self.bracket(&d.col(i), &self.basis_vector(j));
                let b = self.bracket(&self.basis_vector(i), &d.col(j));
                if lhs.iter().zip(a.iter().zip(&b)).any(|(l, (x, y))| *l != x + y) {
                    return false;
                }
            }
        }
        true
    }

    /// Canonical echelon basis of the derivation algebra.
    ///
    /// The unknown matrix is flattened row-major; the basis is the reduced
    /// row echelon basis of the kernel of the Leibniz equations.
    pub fn derivations(&self) -> Vec<Derivation> {
        let n = self.dim;
        let unk = n * n;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let cij = self.bracket_basis(i, j);
                for l in 0..n {
                    // D[e_i,e_j]_l - [D e_i, e_j]_l - [e_i, D e_j]_l = 0
                    let mut row = vec![Rational::zero(); unk];
                    for (k, c) in cij.iter().enumerate() {
                        if !c.is_zero() {
                            row[l * n + k] += c;
                        }
                    }
                    for a in 0..n {
                        let caj = self.structure_constant(a, j, l);
                        if !caj.is_zero() {
                            row[a * n + i] -= caj;
                        }
                        let cia = self.structure_constant(i, a, l);
                        if !cia.is_zero() {
                            row[a * n + j] -= cia;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let basis = if rows.is_empty() {
            QMatrix::identity(unk).to_rows()
        } else {
            QMatrix::from_rows(rows).expect("rectangular").rank_kernel().1
        };
        basis
            .into_iter()
            .map(|v| Derivation {
                matrix: QMatrix::from_rows(v.chunks(n).map(<[Rational]>::to_vec).collect())
                    .expect("square"),
            })
            .collect()
    }

    /// Span of all brackets `[a, b]` with `a` in `left` and `b` in `right`.
    fn bracket_span(&self, left: &[Vec<Rational>], right: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let mut out = Vec::new();
        for a in left {
            for b in right {
                let c = self.bracket(a, b);
                if c.iter().any(|x| !x.is_zero()) {
                    out.push(c);
                }
            }
        }
        echelon_basis(self.dim, &out)
    }

    /// Center and both series, each series listed until it stabilizes.
    pub fn ideals_and_series(&self) -> Series {
        let n = self.dim;
        let full = QMatrix::identity(n).to_rows();
        let center = self.center();
        let mut lower = vec![full.clone()];
        loop {
            let next = self.bracket_span(&full, lower.last().expect("nonempty"));
            if next.len() == lower.last().expect("nonempty").len() {
                break;
            }
            lower.push(next);
        }
        let mut derived = vec![full];
        loop {
            let last = derived.last().expect("nonempty");
            let next = self.bracket_span(last, last);
            if next.len() == last.len() {
                break;
            }
            derived.push(next);
        }
        Series {
            center,
            lower_central: lower,
            derived,
        }
    }

    /// Echelon basis of the center: the joint kernel of all `ad_{e_i}`.
    pub fn center(&self) -> Vec<Vec<Rational>> {
        let n = self.dim;
        let mut stacked = QMatrix::zeros(0, n);
        for i in 0..n {
            stacked = stacked.vstack(&self.ad(i)).expect("same width");
        }
        stacked.rank_kernel().1
    }

    /// True when `t` is invertible and preserves every basis bracket.
    pub fn automorphism_check(&self, t: &QMatrix) -> bool {
        let n = self.dim;
        if t.rows() != n || t.cols() != n || t.det().map_or(true, |d| d.is_zero()) {
            return false;
        }
        for i in 0..n {
            for j in i + 1..n {
                let lhs = t.mul_vec(&self.bracket_basis(i, j)).expect("n x n");
                let rhs = self.bracket(&t.col(i), &t.col(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Floating-point automorphism check with absolute tolerance `tol`.
    pub fn automorphism_check_f64(&self, t: &[Vec<f64>], tol: f64) -> bool {
        let n = self.dim;
        let c = |i: usize, j: usize, k: usize| crate::exact::to_f64(&self.structure_constant(i, j, k));
        for i in 0..n {
            for j in i + 1..n {
                for l in 0..n {
                    let lhs: f64 = (0..n).map(|k| t[l][k] * c(i, j, k)).sum();
                    let mut rhs = 0.0;
                    for p in 0..n {
                        for qq in 0..n {
                            rhs += t[p][i] * t[qq][j] * c(p, qq, l);
                        }
                    }
                    if (lhs - rhs).abs() > tol {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `exp(d)`: exact when `d` is nilpotent, otherwise a floating series
    /// summed until the next term falls below `tol`.
    pub fn exp_derivation(&self, d: &QMatrix, tol: f64) -> ExpMatrix {
        exp_matrix(d, tol)
    }

    /// Center extension with weights found automatically.
    ///
    /// Solves `alpha_i + alpha_j = alpha_k` for every nonzero `c_ij^k`, then
    /// sets the free parameters of the solution space to 1 and, if a central
    /// weight vanishes, walks through integer choices in `1..=10`.
    pub fn extend_center(&self) -> Result<CenterExtension, LieError> {
        let central = self.central_indices()?;
        let n = self.dim;
        let kernel = self.weight_space();
        if let Some(&c) = central.iter().find(|&&c| kernel.iter().all(|v| v[c - 1].is_zero())) {
            return Err(LieError::Infeasible { forced_zero: c });
        }
        let d = kernel.len();
        let combine = |t: &[i64]| -> Vec<Rational> {
            let mut a = vec![Rational::zero(); n];
            for (v, &ti) in kernel.iter().zip(t) {
                for (x, y) in a.iter_mut().zip(v) {
                    *x += y * q(ti);
                }
            }
            a
        };
        let ok = |a: &[Rational]| central.iter().all(|&c| !a[c - 1].is_zero());
        let mut t = vec![1i64; d];
        let mut tries = 0usize;
        loop {
            let a = combine(&t);
            if ok(&a) {
                return self.extend_center_with(&a);
            }
            tries += 1;
            if tries > 100_000 || !advance(&mut t, 10) {
                // Each central weight is a nonzero linear form on the grid, so
                // this point is only reached when the grid is exhausted.
                return Err(LieError::Infeasible {
                    forced_zero: central[0],
                });
            }
        }
    }

    /// Center extension for explicitly chosen weights.
    pub fn extend_center_with(&self, alphas: &[Rational]) -> Result<CenterExtension, LieError> {
        let n = self.dim;
        if alphas.len() != n {
            return Err(LieError::IndexError("one weight per basis vector required".into()));
        }
        let central = self.central_indices()?;
        for i in 0..n {
            for j in i + 1..n {
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() && &alphas[i] + &alphas[j] != alphas[k] {
                        return Err(LieError::IndexError(format!(
                            "weights violate alpha{} + alpha{} = alpha{}",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        if let Some(&c) = central.iter().find(|&&c| alphas[c - 1].is_zero()) {
            return Err(LieError::Infeasible { forced_zero: c });
        }
        let rep_matrices = (0..n)
            .map(|i| {
                let mut m = QMatrix::zeros(n + 1, n + 1);
                for j in 0..n {
                    for (k, c) in self.bracket_basis(i, j).into_iter().enumerate() {
                        m.set(k, j, c);
                    }
                }
                // [e_i, e] = -alpha_i e_i
                m.set(i, n, -alphas[i].clone());
                m
            })
            .collect();
        let mut order = central.clone();
        order.extend((1..=n).filter(|i| !central.contains(i)));
        Ok(CenterExtension {
            alphas: alphas.to_vec(),
            rep_matrices,
            central,
            center_first_order: order,
        })
    }

    /// Echelon basis of the weight solutions `alpha_i + alpha_j = alpha_k`.
    pub fn weight_space(&self) -> Vec<Vec<Rational>> {
        let n = self.dim;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut row = vec![Rational::zero(); n];
                    row[i] += Rational::one();
                    row[j] += Rational::one();
                    row[k] -= Rational::one();
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return QMatrix::identity(n).to_rows();
        }
        QMatrix::from_rows(rows).expect("rectangular").rank_kernel().1
    }

    fn central_indices(&self) -> Result<Vec<usize>, LieError> {
        let central: Vec<usize> = (0..self.dim)
            .filter(|&i| (0..self.dim).all(|j| self.bracket_basis(j, i).iter().all(Zero::is_zero)))
            .map(|i| i + 1)
            .collect();
        if central.len() != self.center().len() {
            return Err(LieError::CenterNotCoordinate);
        }
        Ok(central)
    }

    /// Direct sum `self ⊕ other`, with `other`'s basis appended.
    pub fn direct_sum(&self, other: &LieAlgebra, name: &str) -> LieAlgebra {
        let n = self.dim + other.dim;
        let mut brackets = Vec::new();
        for (g, off) in [(self, 0), (other, self.dim)] {
            for i in 0..g.dim {
                for j in i + 1..g.dim {
                    let c = g.bracket_basis(i, j);
                    if c.iter().all(Zero::is_zero) {
                        continue;
                    }
                    let mut coeffs = vec![Rational::zero(); n];
                    for (k, v) in c.into_iter().enumerate() {
                        coeffs[off + k] = v;
                    }
                    brackets.push(Bracket {
                        i: off + i + 1,
                        j: off + j + 1,
                        coeffs,
                    });
                }
            }
        }
        let mut params = self.params.clone();
        params.extend(other.params.clone());
        LieAlgebra::build(name, n, &brackets, None, params).expect("direct sum of Lie algebras")
    }

    /// Human-readable list of nonzero brackets, e.g. `[e1,e2] = e2`.
    pub fn describe(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = self.bracket_basis(i, j);
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| format!("{}*{}", format_rational(v), self.labels[k]))
                    .collect();
                if !terms.is_empty() {
                    out.push(format!(
                        "[{},{}] = {}",
                        self.labels[i],
                        self.labels[j],
                        terms.join(" + ")
                    ));
                }
            }
        }
        out
    }
}

/// Advances `t` through `{1..=max}^d` in lexicographic order; false when done.
fn advance(t: &mut [i64], max: i64) -> bool {
    for x in t.iter_mut().rev() {
        if *x < max {
            *x += 1;
            return true;
        }
        *x = 1;
    }
    false
}

/// Exponential of a square matrix: exact for nilpotent input, else floating.
pub fn exp_matrix(d: &QMatrix, tol: f64) -> ExpMatrix {
    let n = d.rows();
    let mut power = QMatrix::identity(n);
    let mut sum = QMatrix::identity(n);
    let mut fact = Rational::one();
    for k in 1..=n {
        power = power.mul(d).expect("square");
        if power.is_zero() {
            return ExpMatrix::Exact(sum);
        }
        fact *= q(k as i64);
        sum = sum.add(&power.scale(&fact.recip())).expect("same shape");
    }
    let df: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| crate::exact::to_f64(d.get(i, j))).collect())
        .collect();
    let mut term: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut total = term.clone();
    for k in 1..500 {
        let mut next = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|m| term[i][m] * df[m][j]).sum::<f64>() / k as f64;
            }
        }
        term = next;
        let mut norm = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                total[i][j] += term[i][j];
                norm = norm.max(term[i][j].abs());
            }
        }
        if norm < tol * 1e-3 {
            break;
        }
    }
    ExpMatrix::Float(total)
}

/// Parses `name=value` pairs separated by commas, e.g. `alpha=1/2,beta=-1/2`.
///
/// Greek letters `α`, `β`, `λ` are accepted as aliases.
pub fn parse_params(s: &str) -> Result<BTreeMap<String, Rational>, LieError> {
    let mut out = BTreeMap::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| LieError::Catalog(format!("expected name=value, got {part:?}")))?;
        let key = match k.trim() {
            "α" | "a" => "alpha",
            "β" | "b" => "beta",
            "λ" | "l" => "lambda",
            other => other,
        };
        out.insert(key.to_string(), parse_rational(v)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact::qf;

    fn sl2() -> LieAlgebra {
        catalog::algebra("sl2", &BTreeMap::new()).unwrap()
    }

    #[test]
    fn sl2_brackets_match_table() {
        let g = sl2();
        assert_eq!(g.bracket_basis(0, 1), vec![q(0), q(1), q(0)]);
        let v = vec![q(1), q(2), q(-3)];
        assert!(g.bracket(&v, &v).iter().all(Zero::is_zero));
    }

    #[test]
    fn broken_sl2_violates_jacobi() {
        let err = LieAlgebra::from_sparse(
            "bad",
            3,
            &[
                (1, 2, vec![(2, q(1))]),
                (1, 3, vec![(3, q(-1))]),
                (3, 2, vec![(2, q(-1))]),
            ],
            BTreeMap::new(),
        )
        .unwrap_err();
        assert!(matches!(err, LieError::JacobiViolation { .. }));
    }

    #[test]
    fn s1_bracket_e2_e4() {
        let g = catalog::algebra("s1", &BTreeMap::new()).unwrap();
        assert_eq!(g.bracket_basis(1, 3), vec![q(-1), q(0), q(0), q(0)]);
    }

    #[test]
    fn index_errors() {
        let e = LieAlgebra::from_sparse("x", 2, &[(1, 3, vec![(1, q(1))])], BTreeMap::new());
        assert!(matches!(e, Err(LieError::IndexError(_))));
        let j = LieAlgebraJson {
            name: "x".into(),
            dim: 2,
            basis: vec![],
            brackets: vec![Bracket {
                i: 1,
                j: 2,
                coeffs: vec![q(1)],
            }],
        };
        assert!(matches!(LieAlgebra::from_json(&j), Err(LieError::IndexError(_))));
    }

    #[test]
    fn killing_forms_of_three_dimensional_examples() {
        assert_eq!(
            sl2().killing_form().matrix,
            QMatrix::from_i64(&[&[2, 0, 0], &[0, 0, 2], &[0, 2, 0]])
        );
        let su2 = catalog::algebra("su2", &BTreeMap::new()).unwrap();
        assert_eq!(su2.killing_form().matrix, QMatrix::identity(3).scale(&q(-2)));
        let h = catalog::algebra("h", &BTreeMap::new()).unwrap();
        assert!(h.killing_form().matrix.is_zero());
    }

    #[test]
    fn derivations_dimensions() {
        assert_eq!(sl2().derivations().len(), 3);
        let s2 = catalog::algebra("s2", &BTreeMap::new()).unwrap();
        assert_eq!(s2.derivations().len(), 6);
        let ab = LieAlgebra::build("R3", 3, &[], None, BTreeMap::new()).unwrap();
        assert_eq!(ab.derivations().len(), 9);
    }

    #[test]
    fn s2_derivations_are_upper_triangular_family() {
        let s2 = catalog::algebra("s2", &BTreeMap::new()).unwrap();
        // Support of the family: mu11, mu12, mu13, mu14, mu24, mu34 plus the
        // diagonal entries tied to mu11 by the Leibniz rule.
        for d in s2.derivations() {
            for r in 0..4 {
                for c in 0..r {
                    assert!(d.matrix.get(r, c).is_zero(), "lower entry ({r},{c}) nonzero");
                }
            }
            assert!(d.matrix.get(3, 3).is_zero());
            assert_eq!(d.matrix.get(0, 0), d.matrix.get(1, 1));
            assert_eq!(d.matrix.get(1, 1), d.matrix.get(2, 2));
        }
    }

    #[test]
    fn heisenberg_lower_central_series() {
        let h = catalog::algebra("h", &BTreeMap::new()).unwrap();
        let s = h.ideals_and_series();
        assert_eq!(s.lower_central.len(), 3);
        assert_eq!(s.lower_central[1], vec![vec![q(0), q(0), q(1)]]);
        assert!(s.lower_central[2].is_empty());
        assert_eq!(s.center, vec![vec![q(0), q(0), q(1)]]);
    }

    #[test]
    fn abelian_series_terminate_immediately() {
        let ab = LieAlgebra::build("R2", 2, &[], None, BTreeMap::new()).unwrap();
        let s = ab.ideals_and_series();
        assert_eq!(s.center.len(), 2);
        assert_eq!(s.lower_central.len(), 2);
        assert!(s.lower_central[1].is_empty());
    }

    #[test]
    fn s1_center_is_e1() {
        let g = catalog::algebra("s1", &BTreeMap::new()).unwrap();
        assert_eq!(g.center(), vec![vec![q(1), q(0), q(0), q(0)]]);
    }

    #[test]
    fn s1_center_extension() {
        let g = catalog::algebra("s1", &BTreeMap::new()).unwrap();
        let auto = g.extend_center().unwrap();
        assert_eq!(auto.alphas, vec![q(1), q(1), q(1), q(0)]);
        let ext = g.extend_center_with(&[q(1), q(1), q(0), q(0)]).unwrap();
        let entry = |i: usize, r: usize, c: usize| ext.rep_matrices[i].get(r - 1, c - 1).clone();
        assert_eq!(entry(0, 1, 5), q(-1));
        assert_eq!(entry(1, 1, 4), q(-1));
        assert_eq!(entry(1, 2, 5), q(-1));
        assert_eq!(entry(2, 3, 4), q(-1));
        assert_eq!(entry(3, 1, 2), q(1));
        assert_eq!(entry(3, 3, 3), q(1));
        assert!(ext.satisfies_relations(&g));
        assert!(ext.joint_kernel().is_empty());
    }

    #[test]
    fn infeasible_center_extensions() {
        for name in ["s6_231", "g7"] {
            let g = catalog::algebra(name, &BTreeMap::new()).unwrap();
            assert!(matches!(g.extend_center(), Err(LieError::Infeasible { .. })));
        }
    }

    #[test]
    fn automorphisms_from_the_examples() {
        let g = sl2();
        assert!(g.automorphism_check(&QMatrix::identity(3)));
        let t = QMatrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
        assert!(g.automorphism_check(&t));
        let h = catalog::algebra("h", &BTreeMap::new()).unwrap();
        for a in [qf(1, 2), q(-3), q(5)] {
            let mut t = QMatrix::identity(3);
            t.set(0, 0, a.clone());
            t.set(2, 2, a);
            assert!(h.automorphism_check(&t));
        }
        assert!(!g.automorphism_check(&QMatrix::zeros(3, 3)));
    }

    #[test]
    fn exp_of_zero_and_nilpotent() {
        let h = catalog::algebra("h", &BTreeMap::new()).unwrap();
        assert_eq!(
            h.exp_derivation(&QMatrix::zeros(3, 3), 1e-12),
            ExpMatrix::Exact(QMatrix::identity(3))
        );
        // e1 -> e2 is a derivation of the Heisenberg algebra.
        let mut d = QMatrix::zeros(3, 3);
        d.set(1, 0, q(1));
        assert!(h.is_derivation(&d));
        match h.exp_derivation(&d, 1e-12) {
            ExpMatrix::Exact(m) => {
                let mut expect = QMatrix::identity(3);
                expect.set(1, 0, q(1));
                assert_eq!(m, expect);
                assert!(h.automorphism_check(&m));
            }
            ExpMatrix::Float(_) => panic!("nilpotent derivation must give an exact exponential"),
        }
    }

    #[test]
    fn exp_of_sl2_semisimple_derivation_is_numerical_automorphism() {
        let g = sl2();
        match g.exp_derivation(&g.ad(0), 1e-12) {
            ExpMatrix::Float(m) => {
                assert!(g.automorphism_check_f64(&m, 1e-12));
                assert!((m[1][1] - std::f64::consts::E).abs() < 1e-12);
            }
            ExpMatrix::Exact(_) => panic!("ad_e1 is not nilpotent"),
        }
    }

    #[test]
    fn params_parser_accepts_greek_aliases() {
        let p = parse_params("α=1/2, β=-1/2").unwrap();
        assert_eq!(p["alpha"], qf(1, 2));
        assert_eq!(p["beta"], qf(-1, 2));
        assert!(parse_params("alpha").is_err());
    }
}
