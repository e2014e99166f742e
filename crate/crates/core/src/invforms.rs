//! Invariant multilinear forms: extension of bilinear forms to `Λ^m g`,
//! the linear solver for all invariant bilinear forms on `Λ^m g`, and
//! trace-based and Casimir-based `k`-linear forms on `g`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{format_rational, parse_rational, q, ExactError, QMatrix, Rational};
use crate::grassmann::{binomial, lift, wedge_basis, LiftMode};
use crate::liealg::LieAlgebra;

/// Errors raised by the invariant-form routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    /// The supplied tensor is not a symmetric invariant element of `g^{⊗k}`.
    #[error("not a Casimir element: {0}")]
    NotACasimir(String),
    /// Only orders up to three are supported for multilinear extensions.
    #[error("unsupported order {0}; at most 3 is supported")]
    UnsupportedOrder(usize),
    /// Propagated exact-kernel error.
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Symmetric or general bilinear form on `Λ^m g` in the lexicographic wedge basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymForm {
    /// Name of the algebra the form lives on.
    pub algebra: String,
    /// Degree `m` of the exterior power.
    pub degree: usize,
    /// Gram matrix in the lexicographic wedge basis.
    pub matrix: QMatrix,
}

/// JSON form of a [`SymForm`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFormJson {
    /// Algebra name.
    pub algebra: String,
    /// Degree `m`.
    pub degree: usize,
    /// Dense rows of rational strings.
    pub matrix: Vec<Vec<String>>,
}

impl SymForm {
    /// Wraps a matrix.
    pub fn new(algebra: String, degree: usize, matrix: QMatrix) -> Self {
        Self {
            algebra,
            degree,
            matrix,
        }
    }

    /// Value on two coordinate vectors.
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let by = self.matrix.mul_vec(y).expect("matching size");
        crate::exact::dot(x, &by)
    }

    /// JSON form.
    pub fn to_json(&self) -> SymFormJson {
        SymFormJson {
            algebra: self.algebra.clone(),
            degree: self.degree,
            matrix: self
                .matrix
                .to_rows()
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        }
    }

    /// Parses the JSON form.
    pub fn from_json(j: &SymFormJson) -> Result<Self, FormError> {
        let rows = j
            .matrix
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(j.algebra.clone(), j.degree, QMatrix::from_rows(rows)?))
    }
}

/// Requested symmetry of solved forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    /// `b(x, y) = b(y, x)`.
    Sym,
    /// `b(x, y) = -b(y, x)`.
    Antisym,
    /// No symmetry constraint.
    None,
}

/// All rational linear combinations of `basis_forms`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormFamily {
    /// Parameter names, one per basis form.
    pub parameters: Vec<String>,
    /// Canonical echelon basis of the family.
    pub basis_forms: Vec<SymForm>,
}

impl FormFamily {
    /// Number of free parameters.
    pub fn dim(&self) -> usize {
        self.basis_forms.len()
    }

    /// Echelon basis of the span, with each matrix flattened row-major.
    pub fn span(&self) -> Vec<Vec<Rational>> {
        flatten_span(self.basis_forms.iter().map(|f| &f.matrix))
    }
}

/// Echelon basis of the span of matrices, flattened row-major.
pub fn flatten_span<'a>(mats: impl Iterator<Item = &'a QMatrix>) -> Vec<Vec<Rational>> {
    let flat: Vec<Vec<Rational>> = mats.map(|m| m.entries().to_vec()).collect();
    let dim = flat.first().map_or(0, Vec::len);
    crate::exact::echelon_basis(dim, &flat)
}

/// Extends a bilinear form on `g` to `Λ^m g` by Gram determinants:
/// `b(e_J, e_K) = det[b(e_{J_i}, e_{K_j})]`, with `b(1, 1) = 1` on `Λ^0`.
pub fn extend_form(b: &SymForm, m: usize) -> SymForm {
    let n = b.matrix.rows();
    let basis = wedge_basis(n, m);
    let mut out = QMatrix::zeros(basis.len(), basis.len());
    for (r, jr) in basis.iter().enumerate() {
        for (c, jc) in basis.iter().enumerate() {
            let mut gram = QMatrix::zeros(m, m);
            for (a, &i) in jr.iter().enumerate() {
                for (bb, &j) in jc.iter().enumerate() {
                    gram.set(a, bb, b.matrix.get(i - 1, j - 1).clone());
                }
            }
            let d = if m == 0 { Rational::one() } else { gram.det().expect("square") };
            out.set(r, c, d);
        }
    }
    SymForm::new(b.algebra.clone(), m, out)
}

/// True when `b` satisfies `b(L x, y) + b(x, L y) = 0` for every lifted
/// `ad_{e_i}`, i.e. `L^T B + B L = 0`.
pub fn is_invariant(g: &LieAlgebra, b: &SymForm) -> bool {
    (0..g.dim()).all(|i| {
        let l = lift(&g.ad(i), b.degree, LiftMode::Derivation);
        let lhs = l
            .transpose()
            .mul(&b.matrix)
            .and_then(|x| x.add(&b.matrix.mul(&l)?))
            .expect("matching sizes");
        lhs.is_zero()
    })
}

/// Checks `b(L_v x, x) = 0` on every basis vector `x` and basis element `v`,
/// which every symmetric invariant form satisfies.
pub fn sym_form_condition(g: &LieAlgebra, b: &SymForm) -> bool {
    let size = b.matrix.rows();
    (0..g.dim()).all(|i| {
        let l = lift(&g.ad(i), b.degree, LiftMode::Derivation);
        (0..size).all(|x| {
            let mut ex = vec![Rational::zero(); size];
            ex[x] = Rational::one();
            b.eval(&l.col(x), &ex).is_zero()
        })
    })
}

/// Solves the linear invariance equations for bilinear forms on `Λ^m g`.
pub fn solve_invariant_forms(g: &LieAlgebra, m: usize, symmetry: Symmetry) -> FormFamily {
    let size = binomial(g.dim(), m);
    let unk = size * size;
    let at = |r: usize, c: usize| r * size + c;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for i in 0..g.dim() {
        let l = lift(&g.ad(i), m, LiftMode::Derivation);
        // (L^T B + B L)[r][c] = sum_k L[k][r] B[k][c] + B[r][k] L[k][c]
        for r in 0..size {
            for c in 0..size {
                let mut row = vec![Rational::zero(); unk];
                for k in 0..size {
                    let a = l.get(k, r);
                    if !a.is_zero() {
                        row[at(k, c)] += a;
                    }
                    let b = l.get(k, c);
                    if !b.is_zero() {
                        row[at(r, k)] += b;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if symmetry != Symmetry::None {
        let s = if symmetry == Symmetry::Sym { q(-1) } else { q(1) };
        for r in 0..size {
            for c in r..size {
                let mut row = vec![Rational::zero(); unk];
                row[at(r, c)] += Rational::one();
                row[at(c, r)] += &s;
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        QMatrix::identity(unk).to_rows()
    } else {
        QMatrix::from_rows(rows).expect("rectangular").rank_kernel().1
    };
    let basis_forms: Vec<SymForm> = kernel
        .into_iter()
        .map(|v| {
            SymForm::new(
                g.name().to_string(),
                m,
                QMatrix::from_rows(v.chunks(size).map(<[Rational]>::to_vec).collect())
                    .expect("square"),
            )
        })
        .collect();
    let parameters = (1..=basis_forms.len()).map(|i| format!("p{i}")).collect();
    FormFamily {
        parameters,
        basis_forms,
    }
}

/// Dense `k`-linear form on an `n`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiForm {
    /// Dimension of the underlying space.
    pub n: usize,
    /// Order `k`.
    pub k: usize,
    /// Values on basis tuples (0-based), row-major over `k` indices.
    pub values: Vec<Rational>,
}

impl MultiForm {
    fn offset(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.n + i)
    }

    /// Value on a tuple of basis indices (0-based).
    pub fn eval_basis(&self, idx: &[usize]) -> &Rational {
        &self.values[self.offset(idx)]
    }

    /// All basis tuples in row-major order.
    pub fn tuples(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..self.k {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..self.n).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// Invariance identity: `sum_s b(x_1, ..., rho_v(x_s), ..., x_k) = 0` for
    /// all basis tuples, where `rho_v` is given by the matrices `reps`.
    pub fn is_invariant_under(&self, reps: &[QMatrix]) -> bool {
        let tuples = self.tuples();
        reps.iter().all(|rho| {
            tuples.iter().all(|t| {
                let mut total = Rational::zero();
                for s in 0..self.k {
                    for j in 0..self.n {
                        let c = rho.get(j, t[s]);
                        if c.is_zero() {
                            continue;
                        }
                        let mut u = t.clone();
                        u[s] = j;
                        total += c * self.eval_basis(&u);
                    }
                }
                total.is_zero()
            })
        })
    }

    /// Restriction of a bilinear form to a [`SymForm`] matrix.
    pub fn to_matrix(&self) -> Option<QMatrix> {
        if self.k != 2 {
            return None;
        }
        QMatrix::from_rows(self.values.chunks(self.n).map(<[Rational]>::to_vec).collect()).ok()
    }
}

/// Kind of derived `k`-linear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivedKind {
    /// `sum_σ Tr(ad_{v_σ(1)} ... ad_{v_σ(k)})`.
    TraceSym,
    /// `sum_σ sgn(σ) Tr(ad_{v_σ(1)} ... ad_{v_σ(k)})`.
    TraceAntisym,
    /// Contraction of a Casimir tensor with the Killing map.
    Casimir(MultiForm),
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut np = p.clone();
            np.insert(pos, k - 1);
            // Inserting at `pos` moves the new largest element past len - pos others.
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((np, sign));
        }
    }
    out
}

/// Builds a trace-based or Casimir-based `k`-linear form on `g` (`k <= 3`).
pub fn derived_forms(g: &LieAlgebra, k: usize, kind: &DerivedKind) -> Result<MultiForm, FormError> {
    if k == 0 || k > 3 {
        return Err(FormError::UnsupportedOrder(k));
    }
    let n = g.dim();
    let mut form = MultiForm {
        n,
        k,
        values: vec![Rational::zero(); n.pow(k as u32)],
    };
    let ads: Vec<QMatrix> = (0..n).map(|i| g.ad(i)).collect();
    match kind {
        DerivedKind::TraceSym | DerivedKind::TraceAntisym => {
            let perms = permutations(k);
            for t in form.tuples() {
                let mut total = Rational::zero();
                for (p, s) in &perms {
                    let mut m = QMatrix::identity(n);
                    for &slot in p {
                        m = m.mul(&ads[t[slot]])?;
                    }
                    let tr = m.trace();
                    if *kind == DerivedKind::TraceAntisym && *s < 0 {
                        total -= tr;
                    } else {
                        total += tr;
                    }
                }
                let off = form.offset(&t);
                form.values[off] = total;
            }
        }
        DerivedKind::Casimir(c) => {
            if c.n != n || c.k != k {
                return Err(FormError::NotACasimir("shape does not match the algebra".into()));
            }
            for t in c.tuples() {
                for (p, _) in permutations(k) {
                    let u: Vec<usize> = p.iter().map(|&i| t[i]).collect();
                    if c.eval_basis(&t) != c.eval_basis(&u) {
                        return Err(FormError::NotACasimir("tensor is not symmetric".into()));
                    }
                }
            }
            // Invariance of C in g^{⊗k}: sum_s (ad_v in slot s) C = 0. As a
            // tensor this is sum_s sum_j ad_v[i_s][j] C[.., j, ..] = 0.
            for (vi, ad) in ads.iter().enumerate() {
                for t in c.tuples() {
                    let mut total = Rational::zero();
                    for s in 0..k {
                        for j in 0..n {
                            let a = ad.get(t[s], j);
                            if a.is_zero() {
                                continue;
                            }
                            let mut u = t.clone();
                            u[s] = j;
                            total += a * c.eval_basis(&u);
                        }
                    }
                    if !total.is_zero() {
                        return Err(FormError::NotACasimir(format!(
                            "not annihilated by ad e{} at {:?}",
                            vi + 1,
                            t
                        )));
                    }
                }
            }
            let kappa = g.killing_form().matrix;
            for t in form.tuples() {
                let mut total = Rational::zero();
                for u in c.tuples() {
                    let cu = c.eval_basis(&u);
                    if cu.is_zero() {
                        continue;
                    }
                    let mut prod = cu.clone();
                    for s in 0..k {
                        prod *= kappa.get(t[s], u[s]);
                        if prod.is_zero() {
                            break;
                        }
                    }
                    total += prod;
                }
                let off = form.offset(&t);
                form.values[off] = total;
            }
        }
    }
    Ok(form)
}

/// Extends a `k`-linear form on `g` (`k <= 3`) to `Λ^m g` by
/// `b(x^1, ..., x^k) = sum_{σ_2..σ_k} sgn(σ_2)...sgn(σ_k) prod_j b(x^1_j, x^2_{σ_2(j)}, ..., x^k_{σ_k(j)})`
/// on decomposable basis elements.
pub fn extend_multiform(b: &MultiForm, m: usize) -> Result<MultiForm, FormError> {
    if b.k == 0 || b.k > 3 {
        return Err(FormError::UnsupportedOrder(b.k));
    }
    let basis = wedge_basis(b.n, m);
    let size = basis.len();
    let mut out = MultiForm {
        n: size,
        k: b.k,
        values: vec![Rational::zero(); size.pow(b.k as u32)],
    };
    let perms = permutations(m);
    let tuples = out.tuples();
    for t in tuples {
        let slots: Vec<&Vec<usize>> = t.iter().map(|&i| &basis[i]).collect();
        let mut total = Rational::zero();
        // Mixed-radix enumeration of (σ_2, ..., σ_k).
        let combos = perms.len().pow((b.k - 1) as u32);
        for mut code in 0..combos {
            let mut choice = Vec::with_capacity(b.k - 1);
            for _ in 1..b.k {
                choice.push(code % perms.len());
                code /= perms.len();
            }
            let sign: i64 = choice.iter().map(|&pi| perms[pi].1).product();
            let mut term = Rational::one();
            for j in 0..m {
                let mut idx = vec![slots[0][j] - 1];
                for (c, &pi) in choice.iter().enumerate() {
                    idx.push(slots[c + 1][perms[pi].0[j]] - 1);
                }
                term *= b.eval_basis(&idx);
                if term.is_zero() {
                    break;
                }
            }
            if sign < 0 {
                total -= term;
            } else {
                total += term;
            }
        }
        let off = out.offset(&t);
        out.values[off] = total;
    }
    Ok(out)
}

/// Converts a bilinear [`SymForm`] on `g` to a [`MultiForm`].
pub fn as_multiform(b: &SymForm) -> MultiForm {
    MultiForm {
        n: b.matrix.rows(),
        k: 2,
        values: b.matrix.entries().to_vec(),
    }
}

/// Parameter labels for display, e.g. `{"a": form, "b": form}`.
pub fn labelled(family: &FormFamily, names: &[&str]) -> BTreeMap<String, SymForm> {
    family
        .basis_forms
        .iter()
        .zip(names)
        .map(|(f, n)| (n.to_string(), f.clone()))
        .collect()
}
