//! Helpers shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use liebialg::catalog;
use liebialg::exact::{q, qf, Rational};
use liebialg::grassmann::{binomial, MultiVector};
use liebialg::liealg::LieAlgebra;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Admissible parameter values used when a test needs one instance of a family.
pub fn default_params(name: &str) -> BTreeMap<String, Rational> {
    let mut p = BTreeMap::new();
    for key in catalog::required_params(name) {
        let v = match *key {
            "alpha" => qf(1, 2),
            "beta" => qf(1, 4),
            _ => qf(1, 2),
        };
        p.insert((*key).to_string(), v);
    }
    p
}

/// Catalog algebra at its default parameters.
pub fn cat(name: &str) -> LieAlgebra {
    catalog::algebra(name, &default_params(name)).expect("catalog algebra")
}

/// Catalog algebra at explicit parameters given as `(name, p, q)` for `p/q`.
pub fn cat_with(name: &str, params: &[(&str, i64, i64)]) -> LieAlgebra {
    let p = params
        .iter()
        .map(|(k, a, b)| ((*k).to_string(), qf(*a, *b)))
        .collect();
    catalog::algebra(name, &p).expect("catalog algebra")
}

/// Random coordinates in `[-range, range]`.
pub fn random_coords(rng: &mut ChaCha8Rng, len: usize, range: i64) -> Vec<Rational> {
    (0..len).map(|_| q(rng.gen_range(-range..=range))).collect()
}

/// Random element of `Λ^m` of an `n`-dimensional algebra.
pub fn random_multivector(rng: &mut ChaCha8Rng, n: usize, m: usize, range: i64) -> MultiVector {
    MultiVector::from_coords(n, m, &random_coords(rng, binomial(n, m), range))
}
