//! Exact rational scalars, dense rational matrices and sparse multivariate
//! polynomials.
//!
//! Every other module builds on these three kernels. Matrices are reduced to
//! canonical reduced row echelon form, so two subspaces are equal exactly when
//! their echelon bases are equal as matrices.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

/// Errors raised by the exact kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// A linear system has no solution.
    #[error("linear system is inconsistent")]
    Inconsistent,
    /// Operand shapes do not fit together.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A rational or polynomial string could not be parsed.
    #[error("parse error at byte {pos}: {msg}")]
    Parse {
        /// Byte offset of the offending token.
        pos: usize,
        /// Human readable description.
        msg: String,
    },
}

/// Builds the rational `n`.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `n/d`.
///
/// # Panics
/// Panics when `d` is zero.
pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` (optional sign, surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    let bad = |msg: &str| ExactError::Parse {
        pos: 0,
        msg: format!("{msg}: {s:?}"),
    };
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad("invalid numerator"))?;
    let d: BigInt = den.parse().map_err(|_| bad("invalid denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Formats a rational as `"p"` or `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Serde adapter storing a [`Rational`] as a `"p/q"` string.
pub mod serde_rational {
    use super::*;

    /// Serializes a rational as a string.
    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    /// Deserializes a rational from a string.
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter storing a `Vec<Rational>` as a list of strings.
pub mod serde_rational_vec {
    use super::*;

    /// Serializes a vector of rationals as strings.
    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = v.iter().map(format_rational).collect();
        strings.serialize(s)
    }

    /// Deserializes a vector of rationals from strings.
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// The reduced row echelon form, same shape as the input.
    pub matrix: QMatrix,
    /// Pivot column of each nonzero row, in row order.
    pub pivots: Vec<usize>,
}

/// Affine solution set `particular + span(kernel)` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    /// One solution of the system.
    pub particular: Vec<Rational>,
    /// Canonical echelon basis of the homogeneous solution space.
    pub kernel: Vec<Vec<Rational>>,
}

impl QMatrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from explicit rows; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from integer rows.
    ///
    /// # Panics
    /// Panics when the rows are ragged.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect(),
        )
        .expect("rectangular integer rows")
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at row `r`, column `c` (zero-based).
    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    /// Overwrites the entry at row `r`, column `c`.
    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    /// Adds `v` to the entry at row `r`, column `c`.
    pub fn add_to(&mut self, r: usize, c: usize, v: &Rational) {
        let e = &mut self.entries[r * self.cols + c];
        *e += v;
    }

    /// Row `r` as a slice.
    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Column `c` as an owned vector.
    pub fn col(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// All rows as owned vectors.
    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// True when the matrix is square and equals its transpose.
    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.add_to(r, c, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| dot(self.row(r), v))
            .collect())
    }

    /// Entrywise sum.
    pub fn add(&self, other: &QMatrix) -> Result<QMatrix, ExactError> {
        self.zip(other, |a, b| a + b)
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &QMatrix) -> Result<QMatrix, ExactError> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(
        &self,
        other: &QMatrix,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<QMatrix, ExactError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::DimensionMismatch("entrywise shape".into()));
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Commutator `self * other - other * self` of square matrices.
    pub fn commutator(&self, other: &QMatrix) -> Result<QMatrix, ExactError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &QMatrix) -> Result<QMatrix, ExactError> {
        if self.rows != other.rows {
            return Err(ExactError::DimensionMismatch("hstack rows".into()));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &QMatrix) -> Result<QMatrix, ExactError> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(ExactError::DimensionMismatch("vstack cols".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(QMatrix {
            rows: self.rows + other.rows,
            cols,
            entries,
        })
    }

    /// Gauss-Jordan elimination to canonical reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - &f * m.get(row, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank of the matrix.
    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Rank together with a canonical echelon basis of the right kernel.
    ///
    /// The kernel vectors are the rows of a reduced row echelon matrix, so
    /// each has leading entry 1 and the basis is unique for the subspace.
    pub fn rank_kernel(&self) -> (usize, Vec<Vec<Rational>>) {
        let Rref { matrix, pivots } = self.rref();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let raw: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(i, f).clone();
                }
                v
            })
            .collect();
        (rank, echelon_basis(self.cols, &raw))
    }

    /// Nonzero rows of the reduced row echelon form: the canonical basis of
    /// the row space.
    pub fn row_space(&self) -> QMatrix {
        let Rref { matrix, pivots } = self.rref();
        let mut out = QMatrix::zeros(pivots.len(), self.cols);
        for r in 0..pivots.len() {
            for c in 0..self.cols {
                out.set(r, c, matrix.get(r, c).clone());
            }
        }
        out
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<Rational, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::DimensionMismatch("det of non-square".into()));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                let f = m.get(r, col) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c) - &f * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Dot product of two rational vectors of equal length.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Canonical echelon basis (RREF rows) of the span of `vectors` in dimension `dim`.
pub fn echelon_basis(dim: usize, vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = QMatrix::from_rows(vectors.to_vec()).expect("equal-length vectors");
    debug_assert_eq!(m.cols(), dim);
    m.row_space().to_rows()
}

/// Rank of a list of vectors of a common length.
pub fn rank_of(vectors: &[Vec<Rational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::from_rows(vectors.to_vec())
        .expect("equal-length vectors")
        .rank()
}

/// True when `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    rank_of(&all) == rank_of(basis)
}

/// Solves `A x = b` exactly.
pub fn solve_linear(a: &QMatrix, b: &[Rational]) -> Result<AffineSolution, ExactError> {
    if a.rows() != b.len() {
        return Err(ExactError::DimensionMismatch(format!(
            "{} rows but right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    let bcol = QMatrix::from_columns(a.rows(), &[b.to_vec()]);
    let aug = a.hstack(&bcol)?;
    let Rref { matrix, pivots } = aug.rref();
    if pivots.last() == Some(&a.cols()) {
        return Err(ExactError::Inconsistent);
    }
    let mut particular = vec![Rational::zero(); a.cols()];
    for (i, &p) in pivots.iter().enumerate() {
        particular[p] = matrix.get(i, a.cols()).clone();
    }
    let (_, kernel) = a.rank_kernel();
    Ok(AffineSolution { particular, kernel })
}

/// Monomial exponent vector of a [`Poly`], one entry per variable.
pub type Exponents = Vec<u32>;

/// Sparse multivariate polynomial over the rationals in variables
/// `x1..x_vars`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    /// The coordinate `x_{i+1}` (zero-based index `i`).
    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, Rational::one());
        p
    }

    /// Linear form `sum_i c_i x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let vars = coeffs.len();
        let mut p = Self::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; vars];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// monomials are summed.
    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars, "exponent length must equal variable count");
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c * x^e` in place, dropping the monomial if it cancels.
    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Number of variables.
    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when no monomial is stored, i.e. for the zero polynomial.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value when the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// True when every monomial has total degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    /// Leading term under lexicographic order with `x1 > x2 > ...`.
    pub fn leading_term(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Rescales so the lexicographically leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.vars);
        }
        Poly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Non-negative integer power.
    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::constant(self.vars, Rational::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact evaluation at a point.
    ///
    /// # Panics
    /// Panics when the point length differs from the variable count.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars, "point length must equal variable count");
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    if x.is_zero() {
                        t = Rational::zero();
                        break;
                    }
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Partial derivative with respect to `x_{i+1}`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c * q(i64::from(e[i])));
        }
        out
    }

    /// Substitutes `x_{i+1} := value` everywhere.
    pub fn substitute(&self, i: usize, value: &Poly) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e, c) in &self.terms {
            let mut base = e.clone();
            let k = base[i];
            base[i] = 0;
            let mono = Poly::from_terms(self.vars, [(base, c.clone())]);
            out = &out + &(&mono * &value.pow(k));
        }
        out
    }

    /// Indices of variables that occur in some monomial.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.vars)
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect()
    }

    /// Coefficients of a polynomial of degree at most one, as
    /// `(constant, [linear coefficients])`, or `None` if nonlinear.
    pub fn linear_parts(&self) -> Option<(Rational, Vec<Rational>)> {
        let mut c0 = Rational::zero();
        let mut lin = vec![Rational::zero(); self.vars];
        for (e, c) in &self.terms {
            match e.iter().sum::<u32>() {
                0 => c0 = c.clone(),
                1 => {
                    let i = e.iter().position(|&k| k == 1)?;
                    lin[i] = c.clone();
                }
                _ => return None,
            }
        }
        Some((c0, lin))
    }

    /// Parses an expression in `x1..x_vars`, rational literals, the operators
    /// `+ - * / ^` and parentheses. Names found in `params` are replaced by
    /// their values; division is only allowed by constants.
    pub fn parse(
        src: &str,
        vars: usize,
        params: &BTreeMap<String, Rational>,
    ) -> Result<Poly, ExactError> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
            vars,
            params,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&a), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = Poly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: usize,
    params: &'a BTreeMap<String, Rational>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ExactError {
        ExactError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, ExactError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ExactError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let Some(dc) = d.as_constant().filter(|v| !v.is_zero()) else {
                        return Err(self.err("division by a non-constant or zero"));
                    };
                    acc = acc.scale(&dc.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ExactError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, ExactError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let k: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| self.err("expected a non-negative integer exponent"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ExactError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let n: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(Poly::constant(self.vars, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if let Some(v) = self.params.get(name) {
                    return Ok(Poly::constant(self.vars, v.clone()));
                }
                if let Some(idx) = name.strip_prefix('x').and_then(|s| s.parse::<usize>().ok()) {
                    if idx >= 1 && idx <= self.vars {
                        return Ok(Poly::var(self.vars, idx - 1));
                    }
                    self.pos = start;
                    return Err(self.err(&format!("variable {name} out of range 1..={}", self.vars)));
                }
                self.pos = start;
                Err(self.err(&format!("unknown identifier {name}")))
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

/// Rounds a rational to the nearest `f64`.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> BTreeMap<String, Rational> {
        BTreeMap::new()
    }

    #[test]
    fn identity_has_full_rank_and_no_kernel() {
        let (r, k) = QMatrix::identity(3).rank_kernel();
        assert_eq!(r, 3);
        assert!(k.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let (r, k) = QMatrix::zeros(3, 3).rank_kernel();
        assert_eq!(r, 0);
        assert_eq!(k, QMatrix::identity(3).to_rows());
    }

    #[test]
    fn lambda_two_killing_matrix_is_nondegenerate() {
        let m = QMatrix::from_i64(&[&[0, 4, 0], &[4, 0, 0], &[0, 0, -4]]);
        assert_eq!(m.rank_kernel(), (3, vec![]));
    }

    #[test]
    fn kernel_vectors_have_unit_leading_entries() {
        let m = QMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let (r, k) = m.rank_kernel();
        assert_eq!(r, 2);
        assert_eq!(k.len(), 2);
        for v in &k {
            let lead = v.iter().find(|x| !x.is_zero()).unwrap();
            assert!(lead.is_one());
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_identity_system() {
        let s = solve_linear(&QMatrix::identity(2), &[q(1), q(2)]).unwrap();
        assert_eq!(s.particular, vec![q(1), q(2)]);
        assert!(s.kernel.is_empty());
    }

    #[test]
    fn solve_zero_system() {
        let s = solve_linear(&QMatrix::zeros(2, 2), &[q(0), q(0)]).unwrap();
        assert_eq!(s.particular, vec![q(0), q(0)]);
        assert_eq!(s.kernel.len(), 2);
    }

    #[test]
    fn solve_inconsistent_system() {
        assert_eq!(
            solve_linear(&QMatrix::zeros(2, 2), &[q(1), q(0)]),
            Err(ExactError::Inconsistent)
        );
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = QMatrix::from_i64(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2*(3-2) - 0 + 1*(1-3) = 0
        assert_eq!(m.det().unwrap(), q(0));
        let m = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det().unwrap(), q(-1));
    }

    #[test]
    fn rational_round_trip() {
        for s in ["0", "-3", "1/2", "-7/4"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("2/4").unwrap(), qf(1, 2));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn poly_eval_examples() {
        let p = Poly::parse("x3*x4", 6, &params()).unwrap();
        let mut pt = vec![q(0); 6];
        pt[2] = q(1);
        assert_eq!(p.eval(&pt), q(0));
        let p = Poly::parse("x5^2", 6, &params()).unwrap();
        let mut pt = vec![q(0); 6];
        pt[4] = q(2);
        assert_eq!(p.eval(&pt), q(4));
        let p = Poly::parse("-2*x5^2", 6, &params()).unwrap();
        let mut pt = vec![q(0); 6];
        pt[3] = q(1);
        assert_eq!(p.eval(&pt), q(0));
    }

    #[test]
    fn parser_handles_params_fractions_and_parentheses() {
        let mut ps = BTreeMap::new();
        ps.insert("alpha".to_string(), qf(-1, 2));
        let p = Poly::parse("(1+alpha)*x3 + x4 - 1/2*x1^2", 4, &ps).unwrap();
        let expect = Poly::from_terms(
            4,
            [
                (vec![0, 0, 1, 0], qf(1, 2)),
                (vec![0, 0, 0, 1], q(1)),
                (vec![2, 0, 0, 0], qf(-1, 2)),
            ],
        );
        assert_eq!(p, expect);
        assert!(Poly::parse("x7", 6, &params()).is_err());
        assert!(Poly::parse("x1/x2", 6, &params()).is_err());
        assert!(Poly::parse("gamma", 6, &params()).is_err());
    }

    #[test]
    fn display_round_trips_through_parser() {
        let p = Poly::parse("2*x1*x6 - x2*x5 + x3^2 + 3/2", 6, &params()).unwrap();
        let back = Poly::parse(&p.to_string(), 6, &params()).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn monic_uses_lex_leading_term() {
        let p = Poly::parse("-2*x3*x4 + 4*x5^2", 6, &params()).unwrap();
        assert_eq!(p.monic(), Poly::parse("x3*x4 - 2*x5^2", 6, &params()).unwrap());
    }

    #[test]
    fn substitution_and_derivative() {
        let p = Poly::parse("x1*x2 + x2^2", 2, &params()).unwrap();
        let s = p.substitute(1, &Poly::parse("x1", 2, &params()).unwrap());
        assert_eq!(s, Poly::parse("2*x1^2", 2, &params()).unwrap());
        assert_eq!(p.derivative(1), Poly::parse("x1 + 2*x2", 2, &params()).unwrap());
    }
}
