//! Darboux families for the action of derivations on `Λ^2 g`: fundamental
//! matrices, orbit dimensions, brick search, cofactor solving and sampled
//! rank reports on loci of the Darboux trees.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{
    echelon_basis, parse_rational, rank_of, solve_linear, ExactError, Exponents, Poly, QMatrix,
    Rational,
};
use crate::grassmann::{invariant_subspace, lift, schouten, wedge_basis, LiftMode, MultiVector};
use crate::liealg::{LieAlgebra, LieError};
use crate::ybe::{check_solution, ybe_system, RegionCond, SolutionStatus, YbeSystem};

/// Errors raised by the Darboux routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DarbouxError {
    /// Some `X f_j` is not in the module generated by the family.
    #[error("not a Darboux family: X{field} f{generator} has no cofactors of degree <= {bound}")]
    NotDarboux {
        /// 1-based generator index.
        generator: usize,
        /// 1-based vector field index.
        field: usize,
        /// Cofactor degree bound used.
        bound: u32,
    },
    /// The sampling grid contains no point of the locus.
    #[error("no grid point of radius {radius} satisfies the constraints")]
    EmptySample {
        /// Grid radius used.
        radius: i64,
    },
    /// A generator is the zero polynomial.
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    /// A fixture is malformed.
    #[error("fixture error: {0}")]
    Fixture(String),
    /// Propagated algebra error.
    #[error(transparent)]
    Lie(#[from] LieError),
    /// Propagated exact-arithmetic error.
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Rank of `{ lift(d, 2)(w) : d }`, optionally counted modulo `(Λ^2 g)^g`.
pub fn aut_rank(g: &LieAlgebra, ders: &[QMatrix], w: &[Rational], modulo_invariants: bool) -> usize {
    let cols: Vec<Vec<Rational>> = ders
        .iter()
        .map(|d| lift(d, 2, LiftMode::Derivation).mul_vec(w).expect("size"))
        .collect();
    if !modulo_invariants {
        return rank_of(&cols);
    }
    let inv2 = invariant_subspace(g, 2);
    let mut all = inv2.clone();
    all.extend(cols);
    rank_of(&all) - rank_of(&inv2)
}

/// Matrix of the fundamental vector fields: row `d`, column `k` holds the
/// linear polynomial `(lift(d, 2) x)_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalMatrix {
    /// Rows, one per derivation basis element.
    pub rows: Vec<Vec<Poly>>,
    /// Lifted derivation matrices, in row order.
    pub lifts: Vec<QMatrix>,
}

impl FundamentalMatrix {
    /// Number of coordinates `C(n, 2)`.
    pub fn vars(&self) -> usize {
        self.lifts.first().map_or(0, QMatrix::rows)
    }

    /// Numeric matrix at a point.
    pub fn eval(&self, p: &[Rational]) -> QMatrix {
        let rows = self
            .lifts
            .iter()
            .map(|l| l.mul_vec(p).expect("size"))
            .collect::<Vec<_>>();
        if rows.is_empty() {
            return QMatrix::zeros(0, p.len());
        }
        QMatrix::from_rows(rows).expect("rectangular")
    }

    /// Rank at a point, i.e. the orbit dimension there.
    pub fn rank_at(&self, p: &[Rational]) -> usize {
        self.eval(p).rank()
    }

    /// `X_d f = sum_k (L_d x)_k ∂f/∂x_k`.
    pub fn apply(&self, field: usize, f: &Poly) -> Poly {
        let mut out = Poly::zero(f.vars());
        for (k, coeff) in self.rows[field].iter().enumerate() {
            let df = f.derivative(k);
            if !df.is_zero() && !coeff.is_zero() {
                out = &out + &(coeff * &df);
            }
        }
        out
    }
}

/// Builds the fundamental matrix from the derivation basis.
pub fn fundamental_matrix(g: &LieAlgebra) -> FundamentalMatrix {
    let lifts: Vec<QMatrix> = g
        .derivations()
        .iter()
        .map(|d| lift(&d.matrix, 2, LiftMode::Derivation))
        .collect();
    let rows = lifts
        .iter()
        .map(|l| (0..l.rows()).map(|k| Poly::linear(l.row(k))).collect())
        .collect();
    FundamentalMatrix { rows, lifts }
}

/// Orbit dimensions at a bivector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDims {
    /// Rank of `{ [e_i, w]_S }`, the inner automorphism orbit.
    pub inner: usize,
    /// Rank of the lifted derivation basis applied to `w`.
    pub aut: usize,
}

/// Orbit dimensions under inner and full automorphism groups.
pub fn orbit_dims(g: &LieAlgebra, w: &MultiVector) -> OrbitDims {
    let n = g.dim();
    let inner_cols: Vec<Vec<Rational>> = (0..n)
        .map(|i| schouten(g, &MultiVector::basis(n, &[i + 1]), w).coords())
        .collect();
    let ders: Vec<QMatrix> = g.derivations().into_iter().map(|d| d.matrix).collect();
    OrbitDims {
        inner: rank_of(&inner_cols),
        aut: aut_rank(g, &ders, &w.coords(), false),
    }
}

/// Characteristic polynomial coefficients `[c_0, ..., c_n]` of
/// `det(t I - A)` by the Faddeev-LeVerrier recursion, with `c_n = 1`.
pub fn char_poly(a: &QMatrix) -> Vec<Rational> {
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = QMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
        let mut next = a.mul(&m).expect("square");
        for i in 0..n {
            next.add_to(i, i, &coeffs[n - k + 1]);
        }
        m = next;
        let am = a.mul(&m).expect("square");
        coeffs[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
    }
    coeffs
}

fn divisors(v: &BigInt) -> Vec<BigInt> {
    let v = v.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= v {
        if (&v % &d).is_zero() {
            out.push(d.clone());
            let other = &v / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

/// Rational roots with multiplicity, and whether other roots remain.
pub fn rational_roots(coeffs: &[Rational]) -> (Vec<Rational>, bool) {
    let mut p: Vec<Rational> = coeffs.to_vec();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let mut roots = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        roots.push(Rational::zero());
        p.remove(0);
    }
    if p.len() <= 1 {
        return (roots, false);
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut candidates = Vec::new();
    for num in divisors(&ints[0]) {
        for den in divisors(ints.last().expect("nonempty")) {
            let r = Rational::new(num.clone(), den);
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        loop {
            if p.len() <= 1 {
                break;
            }
            // Synthetic division by (t - r), highest degree first.
            let deg = p.len() - 1;
            let mut q = vec![Rational::zero(); deg];
            let mut acc = Rational::zero();
            for i in (0..=deg).rev() {
                acc = &acc * &r + &p[i];
                if i > 0 {
                    q[i - 1] = acc.clone();
                }
            }
            if acc.is_zero() {
                roots.push(r.clone());
                p = q;
            } else {
                break;
            }
        }
    }
    (roots, p.len() > 1)
}

/// Result of the brick search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrickSearch {
    /// Monic linear forms spanning each common rational eigenspace, deduplicated.
    pub bricks: Vec<Poly>,
    /// Common eigenspaces as echelon bases of covector coordinates.
    pub spaces: Vec<Vec<Vec<Rational>>>,
    /// Set when some characteristic polynomial has non-rational roots, so
    /// bricks with irrational eigenvalues may exist undetected.
    pub undetected_possible: bool,
}

/// Common rational eigen-covectors of the transposed lifted derivations.
pub fn find_bricks(g: &LieAlgebra) -> BrickSearch {
    let fm = fundamental_matrix(g);
    let nv = wedge_basis(g.dim(), 2).len();
    let transposed: Vec<QMatrix> = fm.lifts.iter().map(QMatrix::transpose).collect();
    let mut undetected = false;
    let mut eigen: Vec<Vec<Rational>> = Vec::new();
    for t in &transposed {
        let (mut roots, rest) = rational_roots(&char_poly(t));
        undetected |= rest;
        roots.dedup();
        eigen.push(roots);
    }
    // Each space is an echelon basis; refine it by every field in turn.
    let mut spaces: Vec<Vec<Vec<Rational>>> = vec![QMatrix::identity(nv).to_rows()];
    for (t, roots) in transposed.iter().zip(&eigen) {
        let mut next = Vec::new();
        for space in &spaces {
            for lambda in roots {
                let mut shifted = t.clone();
                for i in 0..nv {
                    shifted.add_to(i, i, &-lambda);
                }
                let basis = QMatrix::from_columns(nv, space);
                let image = shifted.mul(&basis).expect("size");
                let (_, ker) = image.rank_kernel();
                if ker.is_empty() {
                    continue;
                }
                let vecs: Vec<Vec<Rational>> =
                    ker.iter().map(|c| basis.mul_vec(c).expect("size")).collect();
                next.push(echelon_basis(nv, &vecs));
            }
        }
        next.sort();
        next.dedup();
        spaces = next;
    }
    let mut bricks: Vec<Poly> = Vec::new();
    for space in &spaces {
        for v in space {
            let p = Poly::linear(v).monic();
            if !bricks.contains(&p) {
                bricks.push(p);
            }
        }
    }
    BrickSearch {
        bricks,
        spaces,
        undetected_possible: undetected,
    }
}

/// Verified Darboux family with its cofactors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDarbouxFamily {
    /// Generators `f_1..f_s`.
    pub generators: Vec<Poly>,
    /// `cofactors[X][j][i] = h^i_{jX}` with `X f_j = sum_i h^i_{jX} f_i`.
    pub cofactors: Vec<Vec<Vec<Poly>>>,
}

impl LinearDarbouxFamily {
    /// True when every cofactor is constant.
    pub fn constant_cofactors(&self) -> bool {
        self.cofactors
            .iter()
            .flatten()
            .flatten()
            .all(|h| h.as_constant().is_some())
    }
}

fn monomials(vars: usize, max_degree: u32) -> Vec<Exponents> {
    let mut out = vec![vec![0u32; vars]];
    let mut frontier = out.clone();
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for e in &frontier {
            let start = e.iter().rposition(|&k| k > 0).unwrap_or(0);
            for i in start..vars {
                let mut ne = e.clone();
                ne[i] += 1;
                next.push(ne);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Solves `X f_j = sum_i h^i f_i` for polynomial cofactors of degree at most
/// `bound`, for every fundamental field `X` and generator `f_j`.
pub fn check_darboux_family(
    g: &LieAlgebra,
    generators: &[Poly],
    bound: u32,
) -> Result<LinearDarbouxFamily, DarbouxError> {
    if let Some(i) = generators.iter().position(Poly::is_zero) {
        return Err(DarbouxError::ZeroGenerator(i + 1));
    }
    let fm = fundamental_matrix(g);
    let nv = fm.vars();
    let monos = monomials(nv, bound);
    // Columns: products m * f_i, indexed by (i, monomial).
    let products: Vec<Poly> = generators
        .iter()
        .flat_map(|f| {
            monos
                .iter()
                .map(move |m| &Poly::from_terms(nv, [(m.clone(), Rational::one())]) * f)
        })
        .collect();
    let mut cofactors = Vec::with_capacity(fm.rows.len());
    for field in 0..fm.rows.len() {
        let mut per_gen = Vec::with_capacity(generators.len());
        for (j, f) in generators.iter().enumerate() {
            let target = fm.apply(field, f);
            let mut index: BTreeMap<Exponents, usize> = BTreeMap::new();
            for p in products.iter().chain(std::iter::once(&target)) {
                for (e, _) in p.terms() {
                    let len = index.len();
                    index.entry(e.clone()).or_insert(len);
                }
            }
            let mut a = QMatrix::zeros(index.len(), products.len());
            for (c, p) in products.iter().enumerate() {
                for (e, v) in p.terms() {
                    a.set(index[e], c, v.clone());
                }
            }
            let mut b = vec![Rational::zero(); index.len()];
            for (e, v) in target.terms() {
                b[index[e]] = v.clone();
            }
            let sol = if index.is_empty() {
                vec![Rational::zero(); products.len()]
            } else {
                solve_linear(&a, &b)
                    .map_err(|_| DarbouxError::NotDarboux {
                        generator: j + 1,
                        field: field + 1,
                        bound,
                    })?
                    .particular
            };
            let h: Vec<Poly> = sol
                .chunks(monos.len())
                .map(|cs| {
                    Poly::from_terms(nv, monos.iter().cloned().zip(cs.iter().cloned()))
                })
                .collect();
            per_gen.push(h);
        }
        cofactors.push(per_gen);
    }
    Ok(LinearDarbouxFamily {
        generators: generators.to_vec(),
        cofactors,
    })
}

/// Integer-scaled copy of a polynomial for fast sign evaluation on grid points.
struct IntPoly {
    terms: Vec<(Vec<u32>, i128)>,
}

impl IntPoly {
    fn new(p: &Poly) -> Self {
        let lcm = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms = p
            .terms()
            .map(|(e, c)| {
                let v = (c * Rational::from_integer(lcm.clone())).to_integer();
                (e.clone(), v.to_i128().expect("coefficient fits in i128"))
            })
            .collect();
        Self { terms }
    }

    fn eval(&self, x: &[i64]) -> i128 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(*c, |acc, (&k, &v)| acc * i128::from(v).pow(k))
            })
            .sum()
    }
}

fn holds(cond: RegionCond, v: i128) -> bool {
    match cond {
        RegionCond::Zero => v == 0,
        RegionCond::Nonzero => v != 0,
        RegionCond::Pos => v > 0,
        RegionCond::Neg => v < 0,
    }
}

/// Maximum number of sample points kept by [`sample_locus`].
pub const SAMPLE_CAP: usize = 64;

/// Deterministic integer sample of `{ p = 0 for equalities, sign(q) for inequalities }`
/// in `[-radius, radius]^vars`. Coordinates constrained by an equality of the
/// form `c·x_i` are pinned to zero. Points are kept in lexicographic order and
/// thinned to at most [`SAMPLE_CAP`] by taking indices `i·len/64`.
pub fn sample_locus(
    vars: usize,
    equalities: &[Poly],
    inequalities: &[(Poly, RegionCond)],
    radius: i64,
) -> Result<Vec<Vec<Rational>>, DarbouxError> {
    let mut pinned = vec![false; vars];
    for p in equalities {
        let sv = p.support_vars();
        if sv.len() == 1 && p.len() == 1 && p.is_homogeneous_of(1) {
            pinned[sv[0]] = true;
        }
    }
    let constraints: Vec<(IntPoly, RegionCond)> = equalities
        .iter()
        .map(|p| (IntPoly::new(p), RegionCond::Zero))
        .chain(inequalities.iter().map(|(p, c)| (IntPoly::new(p), *c)))
        .collect();
    let width = (2 * radius + 1) as u64;
    let free: Vec<usize> = (0..vars).filter(|&i| !pinned[i]).collect();
    let total = width.pow(free.len() as u32);
    let points: Vec<Vec<i64>> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut x = vec![0i64; vars];
            for &i in free.iter().rev() {
                x[i] = (code % width) as i64 - radius;
                code /= width;
            }
            constraints
                .iter()
                .all(|(p, c)| holds(*c, p.eval(&x)))
                .then_some(x)
        })
        .collect();
    if points.is_empty() {
        return Err(DarbouxError::EmptySample { radius });
    }
    let chosen: Vec<&Vec<i64>> = if points.len() <= SAMPLE_CAP {
        points.iter().collect()
    } else {
        (0..SAMPLE_CAP)
            .map(|i| &points[i * points.len() / SAMPLE_CAP])
            .collect()
    };
    Ok(chosen
        .into_iter()
        .map(|x| x.iter().map(|&v| Rational::from_integer(v.into())).collect())
        .collect())
}

/// Sampled evidence on a locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusReport {
    /// Sample points.
    pub points: Vec<Vec<Rational>>,
    /// Rank of the fundamental matrix at each point.
    pub ranks: Vec<usize>,
    /// Solution status at each point.
    pub status: Vec<SolutionStatus>,
    /// Minimum sampled rank.
    pub min_rank: usize,
    /// Maximum sampled rank.
    pub max_rank: usize,
}

impl LocusReport {
    /// The common rank when every sampled rank agrees.
    pub fn constant_rank(&self) -> Option<usize> {
        (self.min_rank == self.max_rank).then_some(self.min_rank)
    }

    /// True when every sampled point solves the mCYBE.
    pub fn all_solutions(&self) -> bool {
        self.status.iter().all(|s| s.mcybe)
    }

    /// True when no sampled point solves the mCYBE.
    pub fn no_solutions(&self) -> bool {
        self.status.iter().all(|s| !s.mcybe)
    }
}

/// Samples a locus and reports ranks and Yang-Baxter status at each point.
pub fn locus_report(
    fm: &FundamentalMatrix,
    sys: &YbeSystem,
    equalities: &[Poly],
    inequalities: &[(Poly, RegionCond)],
    radius: i64,
) -> Result<LocusReport, DarbouxError> {
    let points = sample_locus(sys.vars, equalities, inequalities, radius)?;
    let ranks: Vec<usize> = points.par_iter().map(|p| fm.rank_at(p)).collect();
    let status = points.iter().map(|p| check_solution(sys, p)).collect();
    Ok(LocusReport {
        min_rank: ranks.iter().copied().min().unwrap_or(0),
        max_rank: ranks.iter().copied().max().unwrap_or(0),
        points,
        ranks,
        status,
    })
}

/// Expected outcome of a tree node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeLabel {
    /// The locus consists of mCYBE solutions.
    Solutions,
    /// The locus contains no mCYBE solution.
    NoSolutions,
}

/// Inequality of a tree node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeInequality {
    /// Polynomial.
    pub poly: String,
    /// Required sign.
    pub sign: RegionCond,
}

/// One leaf of a Darboux tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNode {
    /// Polynomials vanishing on the locus.
    pub equalities: Vec<String>,
    /// Sign conditions on the locus.
    pub inequalities: Vec<NodeInequality>,
    /// Expected constant orbit dimension, when stated.
    pub expected_rank: Option<usize>,
    /// Expected solution label.
    pub expected_label: NodeLabel,
    /// Orbit label of the classification row, when any.
    #[serde(default)]
    pub orbit: Option<String>,
    /// Grid radius override.
    #[serde(default)]
    pub grid_radius: Option<i64>,
}

/// A Darboux tree instantiated at fixed parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DarbouxTree {
    /// Tree name.
    pub tree: String,
    /// Catalog name of the algebra.
    pub algebra: String,
    /// Parameter values as rational strings.
    pub params: BTreeMap<String, String>,
    /// Leaves.
    pub nodes: Vec<TreeNode>,
}

/// Bundled tree fixtures.
pub fn darboux_trees() -> Vec<DarbouxTree> {
    serde_json::from_str(include_str!("../data/darboux_trees.json")).expect("bundled fixture")
}

impl DarbouxTree {
    /// Parsed parameters.
    pub fn parsed_params(&self) -> Result<BTreeMap<String, Rational>, DarbouxError> {
        self.params
            .iter()
            .map(|(k, v)| Ok((k.clone(), parse_rational(v)?)))
            .collect()
    }
}

impl TreeNode {
    /// Parsed equalities and inequalities.
    pub fn constraints(
        &self,
        vars: usize,
        params: &BTreeMap<String, Rational>,
    ) -> Result<(Vec<Poly>, Vec<(Poly, RegionCond)>), DarbouxError> {
        let eqs = self
            .equalities
            .iter()
            .map(|s| Poly::parse(s, vars, params))
            .collect::<Result<Vec<_>, _>>()?;
        let ineqs = self
            .inequalities
            .iter()
            .map(|i| Ok((Poly::parse(&i.poly, vars, params)?, i.sign)))
            .collect::<Result<Vec<_>, ExactError>>()?;
        Ok((eqs, ineqs))
    }
}

/// Outcome of checking one tree node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeReport {
    /// Node position in the tree.
    pub index: usize,
    /// Orbit label, when any.
    pub orbit: Option<String>,
    /// Number of sampled points (0 when empty).
    pub samples: usize,
    /// Sampled rank range.
    pub ranks: (usize, usize),
    /// Expected rank.
    pub expected_rank: Option<usize>,
    /// Expected label.
    pub expected_label: NodeLabel,
    /// Whether the rank check passed (constant and equal when expected).
    pub rank_ok: bool,
    /// Whether the label check passed.
    pub label_ok: bool,
}

impl NodeReport {
    /// True when the node passes.
    pub fn passed(&self) -> bool {
        self.samples > 0 && self.rank_ok && self.label_ok
    }
}

/// Checks every node of a tree: nonempty sample, constant rank equal to the
/// expected one on solution nodes, and labels matching the solution status.
/// No-solution nodes are checked on their label only.
pub fn verify_tree(tree: &DarbouxTree, default_radius: i64) -> Result<Vec<NodeReport>, DarbouxError> {
    let params = tree.parsed_params()?;
    let g = crate::catalog::algebra(&tree.algebra, &params)?;
    let fm = fundamental_matrix(&g);
    let sys = ybe_system(&g);
    tree.nodes
        .iter()
        .enumerate()
        .map(|(index, node)| {
            let (eqs, ineqs) = node.constraints(sys.vars, &params)?;
            let radius = node.grid_radius.unwrap_or(default_radius);
            let base = NodeReport {
                index,
                orbit: node.orbit.clone(),
                samples: 0,
                ranks: (0, 0),
                expected_rank: node.expected_rank,
                expected_label: node.expected_label,
                rank_ok: false,
                label_ok: false,
            };
            let rep = match locus_report(&fm, &sys, &eqs, &ineqs, radius) {
                Ok(r) => r,
                Err(DarbouxError::EmptySample { .. }) => return Ok(base),
                Err(e) => return Err(e),
            };
            let (rank_ok, label_ok) = match node.expected_label {
                NodeLabel::Solutions => (
                    rep.constant_rank().is_some()
                        && node.expected_rank.is_none_or(|r| rep.constant_rank() == Some(r)),
                    rep.all_solutions(),
                ),
                NodeLabel::NoSolutions => (true, rep.no_solutions()),
            };
            Ok(NodeReport {
                samples: rep.points.len(),
                ranks: (rep.min_rank, rep.max_rank),
                rank_ok,
                label_ok,
                ..base
            })
        })
        .collect()
}
