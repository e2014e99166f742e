//! Subcommand implementations. Each returns a [`Report`].

use std::collections::{BTreeMap, BTreeSet};

use liebialg::catalog;
use liebialg::darboux::{
    check_darboux_family, darboux_trees, find_bricks, fundamental_matrix, orbit_dims, verify_tree,
};
use liebialg::exact::{format_rational, q, Poly, Rational};
use liebialg::grassmann::{binomial, invariant_subspace, schouten, MultiVector};
use liebialg::invforms::{extend_form, is_invariant};
use liebialg::liealg::{ExpMatrix, LieAlgebra};
use liebialg::ybe::{
    check_solution, check_solution_direct, orbit_rows, rows_3d, rows_4d, simplify_real, verify_rows,
    ybe_system,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{bivector_flag, rational_list, resolve, Target};
use crate::reference;
use crate::report::{matrix_json, vector_json, AlgebraInfo, Check, Report};

/// Settings shared by all subcommands.
#[derive(Clone, Debug, PartialEq)]
pub struct Options {
    /// Parameter values for parametric catalog families.
    pub params: BTreeMap<String, Rational>,
    /// Half-width of the integer sampling grid for Darboux-tree nodes.
    pub grid_radius: i64,
    /// Degree bound on Darboux cofactors.
    pub cofactor_degree: u32,
    /// Tolerance of floating-point automorphism checks.
    pub float_tol: f64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            params: BTreeMap::new(),
            grid_radius: 3,
            cofactor_degree: 1,
            float_tol: 1e-12,
        }
    }
}

/// Check groups of `verify`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifySelection {
    /// Classification rows of the algebra.
    pub tables: bool,
    /// Killing form and its extensions.
    pub killing: bool,
    /// Invariant multivectors.
    pub invariants: bool,
    /// mCYBE and CYBE systems.
    pub ybe: bool,
    /// Linear Darboux polynomials.
    pub bricks: bool,
    /// Darboux-tree fixtures.
    pub trees: bool,
    /// Exponentials of derivations are automorphisms.
    pub derivations: bool,
}

impl VerifySelection {
    /// Every group.
    pub fn all() -> Self {
        VerifySelection {
            tables: true,
            killing: true,
            invariants: true,
            ybe: true,
            bricks: true,
            trees: true,
            derivations: true,
        }
    }

    /// True when no group is selected.
    pub fn is_empty(&self) -> bool {
        *self == VerifySelection::default()
    }
}

fn info(t: &Target) -> AlgebraInfo {
    let source = match &t.source {
        crate::input::Source::Catalog(n) => format!("catalog:{n}"),
        crate::input::Source::File(p) => p.clone(),
    };
    AlgebraInfo::new(&t.algebra, &source)
}

fn slug(t: &Target) -> String {
    t.catalog_name().unwrap_or(t.algebra.name()).to_string()
}

/// `catalog [name]`: lists the catalog or describes one entry.
pub fn catalog_cmd(name: Option<&str>, opts: &Options) -> Result<Report, CliError> {
    if let Some(name) = name {
        if !catalog::names().contains(&name) {
            return Err(CliError::UnknownTarget(name.to_string()));
        }
        let t = resolve(name, &opts.params)?;
        let check = Check::new(name, format!("catalog/{name}"), true, json!({ "jacobi": true }));
        let data = json!({
            "required_params": catalog::required_params(name),
            "algebra": t.algebra.to_json(),
        });
        return Ok(Report::new("catalog", Some(info(&t)), vec![check], data));
    }
    let mut entries = Vec::new();
    let mut checks = Vec::new();
    for name in catalog::names() {
        let required = catalog::required_params(name);
        let built = if required.iter().all(|p| opts.params.contains_key(*p)) {
            Some(catalog::algebra(name, &opts.params))
        } else {
            None
        };
        let mut entry = json!({ "name": name, "required_params": required });
        match built {
            Some(Ok(g)) => {
                entry["dim"] = json!(g.dim());
                entry["brackets"] = json!(g.describe());
                checks.push(Check::new(name, format!("catalog/{name}"), true, json!({ "jacobi": true })));
            }
            Some(Err(e)) => checks.push(Check::failed(name, format!("catalog/{name}"), e)),
            None => {}
        }
        entries.push(entry);
    }
    Ok(Report::new("catalog", None, checks, json!({ "algebras": entries })))
}

/// `verify <target>`: runs the selected check groups.
pub fn verify(target: &str, sel: VerifySelection, opts: &Options) -> Result<Report, CliError> {
    let t = resolve(target, &opts.params)?;
    let sel = if sel.is_empty() { VerifySelection::all() } else { sel };
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    if sel.killing {
        checks.extend(killing_checks(&t));
    }
    if sel.invariants {
        checks.extend(invariant_checks(&t));
    }
    if sel.ybe {
        checks.extend(ybe_checks(&t));
    }
    if sel.derivations {
        checks.push(derivation_check(&t, opts.float_tol));
    }
    if sel.bricks {
        checks.extend(brick_checks(&t, opts.cofactor_degree).0);
    }
    match t.catalog_name() {
        Some(name) => {
            if sel.tables {
                let rows = table_checks(name)?;
                if rows.is_empty() {
                    skipped.push("tables: no classification rows for this algebra");
                }
                checks.extend(rows);
            }
            if sel.trees {
                let nodes = tree_checks(Some(name), opts.grid_radius)?;
                if nodes.is_empty() {
                    skipped.push("trees: no Darboux-tree fixture for this algebra");
                }
                checks.extend(nodes);
            }
        }
        None => {
            if sel.tables {
                skipped.push("tables: fixtures exist only for catalog algebras");
            }
            if sel.trees {
                skipped.push("trees: fixtures exist only for catalog algebras");
            }
        }
    }
    Ok(Report::new("verify", Some(info(&t)), checks, json!({ "skipped": skipped })))
}

fn killing_checks(t: &Target) -> Vec<Check> {
    let g = &t.algebra;
    let name = slug(t);
    let k = g.killing_form();
    (1..=g.dim())
        .map(|m| {
            let form = extend_form(&k, m);
            let invariant = is_invariant(g, &form);
            let want = t.catalog_name().and_then(|n| reference::killing(n, m));
            let matches = want.as_ref().map(|w| *w == form.matrix);
            let details = json!({
                "degree": m,
                "matrix": matrix_json(&form.matrix),
                "invariant": invariant,
                "matches_reference": matches,
            });
            Check::new(
                format!("killing L{m}"),
                format!("killing/{name}/L{m}"),
                invariant && matches != Some(false),
                details,
            )
        })
        .collect()
}

fn invariant_checks(t: &Target) -> Vec<Check> {
    let g = &t.algebra;
    let n = g.dim();
    let name = slug(t);
    (1..=n)
        .map(|m| {
            let basis = invariant_subspace(g, m);
            let elems: Vec<MultiVector> =
                basis.iter().map(|c| MultiVector::from_coords(n, m, c)).collect();
            // Independent oracle: every element commutes with every basis vector.
            let annihilated = elems.iter().all(|w| {
                (1..=n).all(|i| schouten(g, &MultiVector::basis(n, &[i]), w).is_zero())
            });
            let want = t.catalog_name().and_then(|c| reference::invariants(c, m));
            let matches = want.map(|w| {
                let coords: Vec<Vec<Rational>> =
                    w.iter().map(|e| MultiVector::basis(n, e).coords()).collect();
                liebialg::exact::echelon_basis(binomial(n, m), &coords) == basis
            });
            let details = json!({
                "degree": m,
                "dim": basis.len(),
                "basis": elems.iter().map(MultiVector::describe).collect::<Vec<_>>(),
                "annihilated_by_ad": annihilated,
                "matches_reference": matches,
            });
            Check::new(
                format!("invariants L{m}"),
                format!("invariants/{name}/L{m}"),
                annihilated && matches != Some(false),
                details,
            )
        })
        .collect()
}

/// Deterministic integer sample points in `[-2, 2]^vars`.
fn probe_points(vars: usize) -> Vec<Vec<Rational>> {
    (0..24usize)
        .map(|t| (0..vars).map(|k| q(((t * 7 + k * 3 + t * k) % 5) as i64 - 2)).collect())
        .collect()
}

fn poly_strings(ps: &[Poly]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

fn monic_set(ps: &[Poly]) -> BTreeSet<String> {
    ps.iter().map(|p| p.monic().to_string()).collect()
}

fn parsed_set(vars: usize, src: &[&str]) -> BTreeSet<String> {
    src.iter()
        .map(|s| {
            Poly::parse(s, vars, &BTreeMap::new())
                .expect("reference polynomial")
                .monic()
                .to_string()
        })
        .collect()
}

fn ybe_checks(t: &Target) -> Vec<Check> {
    let g = &t.algebra;
    let name = slug(t);
    let sys = ybe_system(g);
    let n = g.dim();
    let disagreements: Vec<Value> = probe_points(sys.vars)
        .into_iter()
        .filter(|p| check_solution(&sys, p) != check_solution_direct(g, &MultiVector::from_coords(n, 2, p)))
        .map(|p| vector_json(&p))
        .collect();
    let mcybe_real = simplify_real(&sys.mcybe_polys);
    let cybe_real = simplify_real(&sys.cybe_polys);
    let mut checks = vec![Check::new(
        "ybe system",
        format!("ybe/{name}/system"),
        disagreements.is_empty(),
        json!({
            "vars": sys.vars,
            "mcybe": poly_strings(&sys.mcybe_polys),
            "cybe": poly_strings(&sys.cybe_polys),
            "mcybe_real": poly_strings(&mcybe_real),
            "cybe_real": poly_strings(&cybe_real),
            "probe_points": 24,
            "disagreements": disagreements,
        }),
    )];
    let Some(cat) = t.catalog_name() else {
        return checks;
    };
    let mut compare = |label: &str, got: &[Poly], want: &[&str]| {
        let (got, want) = (monic_set(got), parsed_set(sys.vars, want));
        checks.push(Check::new(
            format!("ybe {label}"),
            format!("ybe/{name}/{label}"),
            got == want,
            json!({ "computed": got, "reference": want }),
        ));
    };
    if let Some((m, c)) = reference::ybe(cat) {
        compare("mcybe", &sys.mcybe_polys, m);
        if let Some(c) = c {
            compare("cybe", &sys.cybe_polys, c);
        }
    }
    if let Some((m, c)) = reference::ybe_real(cat) {
        compare("mcybe-real", &mcybe_real, m);
        if let Some(c) = c {
            compare("cybe-real", &cybe_real, c);
        }
    }
    checks
}

fn derivation_check(t: &Target, tol: f64) -> Check {
    let g = &t.algebra;
    let ders = g.derivations();
    let (mut exact, mut float, mut bad) = (0usize, 0usize, Vec::new());
    for (k, d) in ders.iter().enumerate() {
        let ok = match g.exp_derivation(&d.matrix, tol) {
            ExpMatrix::Exact(m) => {
                exact += 1;
                g.automorphism_check(&m)
            }
            ExpMatrix::Float(m) => {
                float += 1;
                g.automorphism_check_f64(&m, tol)
            }
        };
        if !ok {
            bad.push(k + 1);
        }
    }
    Check::new(
        "derivations",
        format!("derivations/{}", slug(t)),
        bad.is_empty(),
        json!({
            "dim": ders.len(),
            "exact_exponentials": exact,
            "float_exponentials": float,
            "float_tol": tol,
            "not_automorphisms": bad,
        }),
    )
}

fn brick_checks(t: &Target, bound: u32) -> (Vec<Check>, Value) {
    let g = &t.algebra;
    let name = slug(t);
    let search = find_bricks(g);
    let checks = search
        .bricks
        .iter()
        .map(|b| {
            let anchor = format!("bricks/{name}/{b}");
            match check_darboux_family(g, std::slice::from_ref(b), bound) {
                Ok(fam) => Check::new(
                    format!("brick {b}"),
                    anchor,
                    true,
                    json!({ "constant_cofactors": fam.constant_cofactors(), "cofactor_degree": bound }),
                ),
                Err(e) => Check::failed(format!("brick {b}"), anchor, e),
            }
        })
        .collect();
    let data = json!({
        "bricks": poly_strings(&search.bricks),
        "undetected_possible": search.undetected_possible,
    });
    (checks, data)
}

fn table_checks(name: &str) -> Result<Vec<Check>, CliError> {
    let mut fixtures = rows_4d();
    fixtures.extend(rows_3d());
    let rows = orbit_rows(&fixtures, Some(name)).map_err(|e| CliError::BadFlag {
        flag: "target",
        message: e.to_string(),
    })?;
    Ok(rows
        .iter()
        .zip(verify_rows(&rows))
        .map(|(row, res)| {
            let params: Vec<String> = row
                .params
                .iter()
                .map(|(k, v)| format!("{k}={}", format_rational(v)))
                .collect();
            let label = format!("row {} {{{}}}", row.label, params.join(","));
            let anchor = format!("classification/{}/{}", row.algebra, row.label);
            match res {
                Ok(r) => Check::new(label, anchor, true, serde_json::to_value(r).expect("row report")),
                Err(e) => Check::new(label, anchor, false, serde_json::to_value(&e.report).expect("row report")),
            }
        })
        .collect())
}

fn tree_checks(algebra: Option<&str>, radius: i64) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    for tree in darboux_trees() {
        if algebra.is_some_and(|a| a != tree.algebra) {
            continue;
        }
        match verify_tree(&tree, radius) {
            Ok(nodes) => checks.extend(nodes.into_iter().map(|n| {
                let label = match &n.orbit {
                    Some(o) => format!("tree {} node {} ({o})", tree.tree, n.index),
                    None => format!("tree {} node {}", tree.tree, n.index),
                };
                let anchor = format!("darboux-tree/{}/{}", tree.tree, n.index);
                Check::new(label, anchor, n.passed(), serde_json::to_value(&n).expect("node report"))
            })),
            Err(e) => checks.push(Check::failed(
                format!("tree {}", tree.tree),
                format!("darboux-tree/{}", tree.tree),
                e,
            )),
        }
    }
    Ok(checks)
}

/// `ybe <target> [--point]`: the polynomial systems and optionally a point check.
pub fn ybe(target: &str, point: Option<&str>, opts: &Options) -> Result<Report, CliError> {
    let t = resolve(target, &opts.params)?;
    let mut checks = ybe_checks(&t);
    let mut data = json!({});
    if let Some(raw) = point {
        let r = bivector_flag(t.algebra.dim(), raw)?;
        let status = check_solution_direct(&t.algebra, &r);
        data = json!({ "point": r.describe(), "status": status });
        checks.push(Check::new(
            "point solves mCYBE",
            format!("ybe/{}/point", slug(&t)),
            status.mcybe,
            json!({ "point": r.describe(), "status": status }),
        ));
    }
    Ok(Report::new("ybe", Some(info(&t)), checks, data))
}

/// `bricks <target>`: linear Darboux polynomials with constant cofactors.
pub fn bricks(target: &str, opts: &Options) -> Result<Report, CliError> {
    let t = resolve(target, &opts.params)?;
    let (checks, data) = brick_checks(&t, opts.cofactor_degree);
    Ok(Report::new("bricks", Some(info(&t)), checks, data))
}

/// `rep <target> [--alphas]`: faithful representation by adjoining a weight element.
pub fn rep(target: &str, alphas: Option<&str>, opts: &Options) -> Result<Report, CliError> {
    let t = resolve(target, &opts.params)?;
    let g = &t.algebra;
    let name = slug(&t);
    let result = match alphas {
        Some(raw) => {
            let a = rational_list("--alphas", raw)?;
            if a.len() != g.dim() {
                return Err(CliError::BadFlag {
                    flag: "--alphas",
                    message: format!("expected {} weights, got {}", g.dim(), a.len()),
                });
            }
            g.extend_center_with(&a)
        }
        None => g.extend_center(),
    };
    let anchor = format!("center-extension/{name}");
    let (checks, data) = match result {
        Err(e) => (vec![Check::failed("feasible", anchor, e)], Value::Null),
        Ok(ext) => {
            let kernel = ext.joint_kernel();
            let data = json!({
                "alphas": vector_json(&ext.alphas),
                "central": ext.central,
                "matrices": ext.rep_matrices.iter().map(matrix_json).collect::<Vec<_>>(),
            });
            let checks = vec![
                Check::new("feasible", anchor.clone(), true, json!({ "alphas": vector_json(&ext.alphas) })),
                Check::new(
                    "commutation relations",
                    format!("{anchor}/relations"),
                    ext.satisfies_relations(g),
                    Value::Null,
                ),
                Check::new(
                    "faithful",
                    format!("{anchor}/kernel"),
                    kernel.is_empty(),
                    json!({ "joint_kernel": kernel.iter().map(|v| vector_json(v)).collect::<Vec<_>>() }),
                ),
            ];
            (checks, data)
        }
    };
    Ok(Report::new("rep", Some(info(&t)), checks, data))
}

/// `orbit-dim <target> --point`: orbit dimensions at a bivector.
pub fn orbit_dim(target: &str, point: &str, opts: &Options) -> Result<Report, CliError> {
    let t = resolve(target, &opts.params)?;
    let g: &LieAlgebra = &t.algebra;
    let r = bivector_flag(g.dim(), point)?;
    let dims = orbit_dims(g, &r);
    let rank = fundamental_matrix(g).rank_at(&r.coords());
    let status = check_solution_direct(g, &r);
    let name = slug(&t);
    let checks = vec![
        Check::new(
            "inner orbit within full orbit",
            format!("orbit-dim/{name}/inner"),
            dims.inner <= dims.aut,
            json!({ "inner": dims.inner, "aut": dims.aut }),
        ),
        Check::new(
            "fundamental matrix rank",
            format!("orbit-dim/{name}/aut"),
            rank == dims.aut,
            json!({ "rank": rank, "aut": dims.aut }),
        ),
    ];
    let data = json!({ "point": r.describe(), "dims": dims, "status": status });
    Ok(Report::new("orbit-dim", Some(info(&t)), checks, data))
}

/// `darboux-tree [target]`: verifies tree fixtures for one algebra or all.
pub fn darboux_tree(target: Option<&str>, opts: &Options) -> Result<Report, CliError> {
    if let Some(name) = target {
        if !darboux_trees().iter().any(|t| t.algebra == name) {
            return Err(CliError::UnknownTarget(format!("{name} (no Darboux-tree fixture)")));
        }
    }
    let checks = tree_checks(target, opts.grid_radius)?;
    let trees: Vec<String> = darboux_trees()
        .into_iter()
        .filter(|t| target.is_none_or(|a| a == t.algebra))
        .map(|t| format!("{} {:?}", t.tree, t.params))
        .collect();
    let data = json!({ "grid_radius": opts.grid_radius, "trees": trees });
    Ok(Report::new("darboux-tree", None, checks, data))
}
