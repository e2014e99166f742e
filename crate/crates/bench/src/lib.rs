//! Fixed inputs for the kernel benchmarks.

use std::collections::BTreeMap;

use liebialg::catalog;
use liebialg::exact::{q, qf, Rational};
use liebialg::grassmann::MultiVector;
use liebialg::liealg::LieAlgebra;

/// Catalog algebra at its default benchmark parameters.
pub fn algebra(name: &str) -> LieAlgebra {
    let params: BTreeMap<String, Rational> = [("alpha", qf(1, 2)), ("beta", qf(1, 4)), ("lambda", qf(1, 2))]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    catalog::algebra(name, &params).expect("catalog algebra")
}

/// Deterministic multivector of degree `m` with small integer coefficients.
pub fn multivector(n: usize, m: usize, seed: i64) -> MultiVector {
    let len = liebialg::grassmann::binomial(n, m);
    let coords: Vec<Rational> = (0..len as i64).map(|k| q((seed * 7 + k * 5) % 9 - 4)).collect();
    MultiVector::from_coords(n, m, &coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_well_formed() {
        assert_eq!(algebra("s3").dim(), 4);
        let w = multivector(4, 2, 1);
        assert_eq!(w.degree(), 2);
        assert_eq!(w, multivector(4, 2, 1));
    }
}
