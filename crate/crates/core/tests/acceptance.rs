//! Acceptance suite: one pass/fail line per criterion 1-9.
//!
//! Each criterion is evaluated in full and printed. Failures whose cause is
//! a documented inconsistency in the published data are listed in
//! `KNOWN_CONFLICTS`; the test fails on any other failure, so a new
//! regression cannot hide behind the printed FAIL line.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use common::{cat, cat_with, random_coords, random_multivector};
use liebialg::catalog;
use liebialg::darboux::{
    check_darboux_family, darboux_trees, find_bricks, sample_locus, verify_tree,
};
use liebialg::exact::{echelon_basis, q, Poly, QMatrix, Rational};
use liebialg::grading::{compatible_limit_pair, limit_spaces, Gradation};
use liebialg::grassmann::{invariant_subspace, lift, schouten, LiftMode, MultiVector};
use liebialg::invforms::{
    extend_form, flatten_span, is_invariant, solve_invariant_forms, sym_form_condition, SymForm,
    Symmetry,
};
use liebialg::liealg::{ExpMatrix, LieAlgebra, LieError};
use liebialg::ybe::{
    check_solution_direct, cojacobi_check, orbit_rows, rows_3d, rows_4d, simplify_real,
    verify_rows, ybe_system,
};
use num_traits::Zero;

/// Writes a line to the process stdout, bypassing the test harness capture so
/// the criterion lines appear in a plain `cargo test` run.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, $($arg)*);
        let _ = out.flush();
    }};
}
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Exact equality everywhere; kept explicit so the tolerance is visible.
const TOLERANCE: &str = "exact";
/// Default sampling grid radius for Darboux-tree nodes.
const GRID_RADIUS: i64 = 3;
/// Random samples per algebra for the Schouten identities (criterion 8a).
const SCHOUTEN_SAMPLES: usize = 100;
/// Random bivectors per 3D algebra for the co-Jacobi check (criterion 8c).
const COJACOBI_SAMPLES: usize = 50;

/// Failures traced to inconsistent published data, as `(criterion, item)`.
/// s12 row III: the printed representative has orbit dimension 2 while the
/// row and the tree leaf state 3.
const KNOWN_CONFLICTS: &[(u32, &str)] = &[(4, "s12/III {}"), (9, "s12/s12 node 5 (III)")];

struct Outcome {
    pass: bool,
    detail: String,
    failures: Vec<String>,
}

fn outcome(failures: Vec<String>, detail: String) -> Outcome {
    Outcome {
        pass: failures.is_empty(),
        detail,
        failures,
    }
}

fn poly_set(vars: usize, src: &[&str]) -> BTreeSet<String> {
    src.iter()
        .map(|s| {
            Poly::parse(s, vars, &BTreeMap::new())
                .expect("literal")
                .monic()
                .to_string()
        })
        .collect()
}

fn as_set(polys: &[Poly]) -> BTreeSet<String> {
    polys.iter().map(|p| p.monic().to_string()).collect()
}

fn criterion_1() -> Outcome {
    let mut fails = Vec::new();
    let sl2 = cat("sl2");
    let k = sl2.killing_form();
    let checks = [
        ("sl2 k1", k.matrix.clone(), QMatrix::from_i64(&[&[2, 0, 0], &[0, 0, 2], &[0, 2, 0]])),
        (
            "sl2 k2",
            extend_form(&k, 2).matrix,
            QMatrix::from_i64(&[&[0, 4, 0], &[4, 0, 0], &[0, 0, -4]]),
        ),
        ("sl2 k3", extend_form(&k, 3).matrix, QMatrix::from_i64(&[&[-8]])),
    ];
    let su2 = cat("su2").killing_form();
    let more = [
        ("su2 k1", su2.matrix.clone(), QMatrix::identity(3).scale(&q(-2))),
        ("su2 k2", extend_form(&su2, 2).matrix, QMatrix::identity(3).scale(&q(4))),
        ("su2 k3", extend_form(&su2, 3).matrix, QMatrix::from_i64(&[&[-8]])),
        ("h k1", cat("h").killing_form().matrix, QMatrix::zeros(3, 3)),
    ];
    for (name, got, want) in checks.into_iter().chain(more) {
        if got != want {
            fails.push(name.to_string());
        }
    }
    outcome(fails, "sl2, su2, h Killing forms and extensions".into())
}

fn criterion_2() -> Outcome {
    type Case = (&'static str, Vec<(&'static str, i64, i64)>, Vec<&'static [usize]>, Vec<&'static [usize]>);
    let cases: Vec<Case> = vec![
        ("sl2", vec![], vec![], vec![&[1, 2, 3]]),
        ("s1", vec![], vec![&[1, 2]], vec![]),
        ("s2", vec![], vec![], vec![]),
        ("s6", vec![], vec![], vec![&[1, 2, 3]]),
        ("s7", vec![], vec![], vec![&[1, 2, 3]]),
        ("n1", vec![], vec![&[1, 2]], vec![&[1, 2, 3], &[1, 2, 4]]),
        ("gl2", vec![], vec![], vec![&[1, 2, 3]]),
        // s3: e12 for alpha=-1, e13 for beta=-1, e23 for alpha+beta=0,
        // e123 for alpha+beta=-1.
        ("s3", vec![("alpha", -1, 1), ("beta", 1, 2)], vec![&[1, 2]], vec![]),
        ("s3", vec![("alpha", 1, 1), ("beta", -1, 1)], vec![&[1, 3], &[2, 3]], vec![]),
        ("s3", vec![("alpha", 1, 2), ("beta", -1, 2)], vec![&[2, 3]], vec![]),
        ("s3", vec![("alpha", -1, 2), ("beta", -1, 2)], vec![], vec![&[1, 2, 3]]),
        ("s3", vec![("alpha", -3, 4), ("beta", -1, 4)], vec![], vec![&[1, 2, 3]]),
        ("s3", vec![("alpha", 1, 1), ("beta", 1, 2)], vec![], vec![]),
        // s4: e123 for alpha=-2, e13 for alpha=-1.
        ("s4", vec![("alpha", -2, 1)], vec![], vec![&[1, 2, 3]]),
        ("s4", vec![("alpha", -1, 1)], vec![&[1, 3]], vec![]),
        ("s4", vec![("alpha", 1, 1)], vec![], vec![]),
        // s5: e23 for beta=0, e123 for alpha+2beta=0.
        ("s5", vec![("alpha", 1, 1), ("beta", 0, 1)], vec![&[2, 3]], vec![]),
        ("s5", vec![("alpha", 1, 1), ("beta", -1, 2)], vec![], vec![&[1, 2, 3]]),
        ("s5", vec![("alpha", 2, 1), ("beta", 1, 1)], vec![], vec![]),
        // s8: e13 for alpha=-1/2.
        ("s8", vec![("alpha", -1, 2)], vec![&[1, 3]], vec![]),
        ("s8", vec![("alpha", 1, 2)], vec![], vec![]),
    ];
    let mut fails = Vec::new();
    for (name, params, two, three) in &cases {
        let g = cat_with(name, params);
        let n = g.dim();
        for (m, expected) in [(2usize, two), (3usize, three)] {
            let want: Vec<Vec<Rational>> =
                expected.iter().map(|e| MultiVector::basis(n, e).coords()).collect();
            let want = echelon_basis(liebialg::grassmann::binomial(n, m), &want);
            if invariant_subspace(&g, m) != want {
                fails.push(format!("{name} {params:?} m={m}"));
            }
        }
    }
    outcome(fails, format!("{} algebra instances, m = 2, 3", cases.len()))
}

fn criterion_3() -> Outcome {
    let mut fails = Vec::new();
    let mut check = |label: &str, got: BTreeSet<String>, want: BTreeSet<String>| {
        if got != want {
            fails.push(format!("{label}: got {got:?}"));
        }
    };
    let s1 = ybe_system(&cat("s1"));
    check("s1 mcybe", as_set(&simplify_real(&s1.mcybe_polys)), poly_set(6, &["x3*x4", "x3*x6", "x5"]));
    let s7 = ybe_system(&cat("s7"));
    check("s7 mcybe", as_set(&simplify_real(&s7.mcybe_polys)), poly_set(6, &["x5", "x6"]));
    check("s7 cybe", as_set(&simplify_real(&s7.cybe_polys)), poly_set(6, &["x4", "x5", "x6"]));
    let sl2 = ybe_system(&cat("sl2"));
    check("sl2 mcybe", as_set(&sl2.mcybe_polys), BTreeSet::new());
    for beta in [(1, 2), (-1, 4), (1, 1)] {
        let s5 = ybe_system(&cat_with("s5", &[("alpha", 1, 1), ("beta", beta.0, beta.1)]));
        check(
            &format!("s5 beta={}/{}", beta.0, beta.1),
            as_set(&simplify_real(&s5.mcybe_polys)),
            poly_set(6, &["x3*x4", "x5", "x6"]),
        );
    }
    let s12 = ybe_system(&cat("s12"));
    check(
        "s12 mcybe",
        as_set(&s12.mcybe_polys),
        poly_set(
            6,
            &[
                "x2*x3 + x4*x5",
                "2*x1*x6 - x2*x5 + x3^2 + x3*x4 + x5^2",
                "(x2 + x5)*x6",
                "(x3 - x4)*x6",
            ],
        ),
    );
    let gl2 = ybe_system(&cat("gl2"));
    let gl2_m = ["x1*x3 - x4*x5", "x2*x3 + x4*x6", "x2*x5 + x1*x6"];
    check("gl2 mcybe", as_set(&gl2.mcybe_polys), poly_set(6, &gl2_m));
    let mut gl2_c = gl2_m.to_vec();
    gl2_c.push("2*x1*x2 - x4^2");
    check("gl2 cybe", as_set(&gl2.cybe_polys), poly_set(6, &gl2_c));
    outcome(fails, "s1, s7, sl2, s5, s12, gl2 generator sets".into())
}

fn criterion_4() -> Outcome {
    let mut fixtures = rows_4d();
    fixtures.extend(rows_3d());
    let rows = orbit_rows(&fixtures, None).expect("fixtures instantiate");
    let results = verify_rows(&rows);
    let mut fails = Vec::new();
    for (row, res) in rows.iter().zip(&results) {
        if let Err(e) = res {
            let params: BTreeMap<String, String> = row
                .params
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect();
            let key = format!("{}/{} {}", row.algebra, row.label, fmt_params(&params));
            say!(
                "  row {key}: failed {:?}, rank {} vs {}",
                e.report.failed, e.report.rank, e.report.published_dim
            );
            fails.push(format!("{}/{} {}", row.algebra, row.label, fmt_params(&params)));
        }
    }
    outcome(fails, format!("{} row instances", rows.len()))
}

fn fmt_params(p: &BTreeMap<String, String>) -> String {
    if p.is_empty() {
        "{}".into()
    } else {
        format!("{p:?}")
    }
}

fn criterion_5() -> Outcome {
    let mut fails = Vec::new();
    let p = |s: &str| Poly::parse(s, 6, &BTreeMap::new()).expect("literal");
    for name in ["s1", "s2", "s12"] {
        let g = cat(name);
        let found = find_bricks(&g);
        let ok = match name {
            "s1" => found.bricks.contains(&p("x5")) && found.bricks.contains(&p("x6")),
            _ => found.bricks == vec![p("x6")],
        };
        if !ok {
            fails.push(format!("{name}: {:?}", as_set(&found.bricks)));
        }
        for b in &found.bricks {
            match check_darboux_family(&g, std::slice::from_ref(b), 0) {
                Ok(f) if f.constant_cofactors() => {}
                _ => fails.push(format!("{name}: brick {b} not Darboux")),
            }
        }
    }
    outcome(fails, "bricks of s1, s2, s12".into())
}

fn criterion_6() -> Outcome {
    let mut fails = Vec::new();
    let s1 = cat("s1");
    if s1.extend_center().is_err() {
        fails.push("s1 automatic extension infeasible".into());
    }
    match s1.extend_center_with(&[q(1), q(1), q(0), q(0)]) {
        Ok(ext) => {
            // Nonzero entries (row, column, value), 1-based, per R_{e_i}.
            let expected: [&[(usize, usize, i64)]; 4] = [
                &[(1, 5, -1)],
                &[(1, 4, -1), (2, 5, -1)],
                &[(3, 4, -1)],
                &[(1, 2, 1), (3, 3, 1)],
            ];
            for (i, entries) in expected.iter().enumerate() {
                let mut want = QMatrix::zeros(5, 5);
                for &(r, c, v) in *entries {
                    want.set(r - 1, c - 1, q(v));
                }
                if ext.rep_matrices[i] != want {
                    fails.push(format!("R_e{} differs:\n{}", i + 1, ext.rep_matrices[i]));
                }
            }
            if !ext.satisfies_relations(&s1) {
                fails.push("s1 relations".into());
            }
            if !ext.joint_kernel().is_empty() {
                fails.push("nonzero joint kernel".into());
            }
        }
        Err(e) => fails.push(format!("s1 explicit weights: {e}")),
    }
    for name in ["s6_231", "g7"] {
        match cat(name).extend_center() {
            Err(LieError::Infeasible { .. }) => {}
            other => fails.push(format!("{name}: {:?}", other.map(|e| e.alphas))),
        }
    }
    outcome(fails, "s1 feasible, s6_231 and g7 infeasible".into())
}

fn criterion_7() -> Outcome {
    let g = cat("gl2");
    let family = solve_invariant_forms(&g, 2, Symmetry::Sym);
    // [[0,a,0,0,0,-b],[a,0,0,0,b,0],[0,0,c,-b,0,0],[0,0,-b,-a,0,0],[0,b,0,0,0,c],[-b,0,0,0,c,0]]
    let form = |a: i64, b: i64, c: i64| {
        SymForm::new(
            "gl2".into(),
            2,
            QMatrix::from_i64(&[
                &[0, a, 0, 0, 0, -b],
                &[a, 0, 0, 0, b, 0],
                &[0, 0, c, -b, 0, 0],
                &[0, 0, -b, -a, 0, 0],
                &[0, b, 0, 0, 0, c],
                &[-b, 0, 0, 0, c, 0],
            ]),
        )
    };
    let printed = [form(1, 0, 0), form(0, 1, 0), form(0, 0, 1)];
    let want = flatten_span(printed.iter().map(|f| &f.matrix));
    let fails = if family.span() == want {
        Vec::new()
    } else {
        vec![format!("family dimension {}", family.dim())]
    };
    outcome(fails, "3-parameter symmetric family on Λ²gl2".into())
}

fn schouten_identities(g: &LieAlgebra, rng: &mut ChaCha8Rng) -> bool {
    let n = g.dim();
    let sign = |e: usize| if e % 2 == 0 { q(1) } else { q(-1) };
    for s in 0..SCHOUTEN_SAMPLES {
        let (p, qd, r) = (1 + s % 2, 1 + (s / 2) % 2, 1 + (s / 4) % 2);
        let u = random_multivector(rng, n, p, 2);
        let v = random_multivector(rng, n, qd, 2);
        let w = random_multivector(rng, n, r, 2);
        // [u, v] = -(-1)^{(p-1)(q-1)} [v, u]
        let anti = schouten(g, &v, &u).scale(&-sign((p - 1) * (qd - 1)));
        if schouten(g, &u, &v) != anti {
            return false;
        }
        // [u, v∧w] = [u, v]∧w + (-1)^{(p-1)q} v∧[u, w]
        let lhs = schouten(g, &u, &v.wedge(&w));
        let rhs = schouten(g, &u, &v)
            .wedge(&w)
            .add(&v.wedge(&schouten(g, &u, &w)).scale(&sign((p - 1) * qd)));
        if lhs != rhs {
            return false;
        }
        // graded Jacobi with signs (-1)^{(p-1)(r-1)} and cyclic
        let j = schouten(g, &u, &schouten(g, &v, &w))
            .scale(&sign((p - 1) * (r - 1)))
            .add(&schouten(g, &v, &schouten(g, &w, &u)).scale(&sign((qd - 1) * (p - 1))))
            .add(&schouten(g, &w, &schouten(g, &u, &v)).scale(&sign((r - 1) * (qd - 1))));
        if !j.is_zero() {
            return false;
        }
    }
    true
}

fn nilpotent(d: &QMatrix) -> bool {
    let mut m = d.clone();
    for _ in 0..d.rows() {
        m = m.mul(d).expect("square");
    }
    m.is_zero()
}

fn criterion_8() -> Outcome {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    // (a) Schouten identities
    for name in catalog::THREE_DIM.iter().chain(catalog::FOUR_DIM.iter()) {
        if !schouten_identities(&cat(name), &mut rng) {
            fails.push(format!("8a {name}"));
        }
    }

    // (b) invariance of every returned invariant form
    for name in catalog::THREE_DIM.iter().chain(["gl2", "s1", "n1"].iter()) {
        let g = cat(name);
        for m in 1..=2 {
            for sym in [Symmetry::Sym, Symmetry::Antisym, Symmetry::None] {
                for f in solve_invariant_forms(&g, m, sym).basis_forms {
                    if !is_invariant(&g, &f) || (sym == Symmetry::Sym && !sym_form_condition(&g, &f)) {
                        fails.push(format!("8b {name} m={m} {sym:?}"));
                    }
                }
            }
        }
    }

    // (c) co-Jacobi identity iff mCYBE
    for name in catalog::THREE_DIM {
        let g = cat(name);
        for _ in 0..COJACOBI_SAMPLES {
            let r = random_multivector(&mut rng, 3, 2, 3);
            if cojacobi_check(&g, &r) != check_solution_direct(&g, &r).mcybe {
                fails.push(format!("8c {name} {}", r.describe()));
            }
        }
    }
    for name in ["s1", "s7", "n1"] {
        let g = cat(name);
        for _ in 0..10 {
            let r = random_multivector(&mut rng, 4, 2, 2);
            if cojacobi_check(&g, &r) != check_solution_direct(&g, &r).mcybe {
                fails.push(format!("8c {name} {}", r.describe()));
            }
        }
    }

    // (d) nondegeneracy propagates to every exterior power
    for name in ["sl2", "su2"] {
        let k = cat(name).killing_form();
        for m in 0..=3 {
            if extend_form(&k, m).matrix.det().expect("square").is_zero() {
                fails.push(format!("8d {name} m={m}"));
            }
        }
    }

    // (e) limit spaces of the so(2,2) root gradation solve the CYBE
    let so22 = cat("so22");
    let grad = Gradation::new(vec![
        vec![0, 0],
        vec![1, 0],
        vec![-1, 0],
        vec![0, 0],
        vec![0, 1],
        vec![0, -1],
    ]);
    let limits = limit_spaces(&so22, &grad);
    for l in &limits {
        for _ in 0..5 {
            let mut r = MultiVector::zero(6, 2);
            for b in &l.basis {
                r.add_term(b, random_coords(&mut rng, 1, 3).remove(0));
            }
            if !schouten(&so22, &r, &r).is_zero() {
                fails.push(format!("8e {:?}", l.degree));
            }
        }
    }
    for a in &limits {
        for b in &limits {
            if compatible_limit_pair(&so22, &grad, &a.degree, &b.degree) {
                let mut r = MultiVector::zero(6, 2);
                for idx in a.basis.iter().chain(&b.basis) {
                    r.add_term(idx, random_coords(&mut rng, 1, 3).remove(0));
                }
                if !schouten(&so22, &r, &r).is_zero() {
                    fails.push(format!("8e pair {:?} {:?}", a.degree, b.degree));
                }
            }
        }
    }

    // (f) Darboux-tree loci are preserved by exp of nilpotent derivations
    let mut transported = 0usize;
    for tree in darboux_trees() {
        let params = tree.parsed_params().expect("params");
        let g = catalog::algebra(&tree.algebra, &params).expect("algebra");
        let mut cands: Vec<QMatrix> = g.derivations().into_iter().map(|d| d.matrix).collect();
        cands.extend((0..g.dim()).map(|i| g.ad(i)));
        let groups: Vec<QMatrix> = cands
            .iter()
            .filter(|d| !d.is_zero() && nilpotent(d))
            .filter_map(|d| match g.exp_derivation(d, 1e-12) {
                ExpMatrix::Exact(t) => Some(lift(&t, 2, LiftMode::Group)),
                ExpMatrix::Float(_) => None,
            })
            .collect();
        for node in &tree.nodes {
            let (eqs, ineqs) = node.constraints(6, &params).expect("node");
            if eqs.is_empty() || check_darboux_family(&g, &eqs, 1).is_err() {
                continue;
            }
            let Ok(points) = sample_locus(6, &eqs, &ineqs, node.grid_radius.unwrap_or(GRID_RADIUS))
            else {
                continue;
            };
            for p in points.iter().take(8) {
                for t in &groups {
                    let moved = t.mul_vec(p).expect("size");
                    transported += 1;
                    if eqs.iter().any(|f| !f.eval(&moved).is_zero()) {
                        fails.push(format!("8f {} node {:?}", tree.tree, node.orbit));
                    }
                }
            }
        }
    }
    fails.dedup();
    outcome(fails, format!("(a)-(f); {transported} transported locus points"))
}

fn criterion_9() -> Outcome {
    let mut fails = Vec::new();
    let mut nodes = 0usize;
    let mut algebras = BTreeSet::new();
    for tree in darboux_trees() {
        algebras.insert(tree.algebra.clone());
        let reports = verify_tree(&tree, GRID_RADIUS).expect("tree instantiates");
        for r in reports {
            nodes += 1;
            if !r.passed() {
                say!(
                    "  node {}/{} #{} ({:?}) {:?}: samples {}, ranks {:?}, expected {:?}",
                    tree.algebra,
                    tree.tree,
                    r.index,
                    r.orbit,
                    tree.params,
                    r.samples,
                    r.ranks,
                    r.expected_rank
                );
                let orbit = r.orbit.clone().unwrap_or_default();
                fails.push(format!("{}/{} node {} ({orbit})", tree.algebra, tree.tree, r.index));
            }
        }
    }
    outcome(fails, format!("{nodes} nodes over {} algebras", algebras.len()))
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, fn() -> Outcome); 9] = [
        (1, "Killing forms", criterion_1),
        (2, "invariant subspaces", criterion_2),
        (3, "YBE systems", criterion_3),
        (4, "classification tables", criterion_4),
        (5, "bricks", criterion_5),
        (6, "center extension", criterion_6),
        (7, "gl2 invariant forms", criterion_7),
        (8, "property suites", criterion_8),
        (9, "Darboux-tree fixtures", criterion_9),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed: Duration = start.elapsed();
        say!(
            "criterion {id} [{name}]: {} ({}; tolerance {TOLERANCE}; {:.2}s)",
            if out.pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64()
        );
        for f in &out.failures {
            let known = KNOWN_CONFLICTS.iter().any(|(c, k)| *c == id && k == f);
            say!("  {} {f}", if known { "known conflict:" } else { "UNEXPECTED:" });
            if !known {
                unexpected.push(format!("criterion {id}: {f}"));
            }
        }
    }
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:#?}");
}
