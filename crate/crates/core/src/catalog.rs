//! Built-in example inputs: group algebras, function algebras, Sweedler's
//! four-dimensional Hopf algebra, cocycle cross products, braided lines and
//! Taft-type bosonisations.

use crate::error::{Error, Result};
use crate::hopf::{Algebra, Coalgebra, Dqt, HopfAlgebra};
use crate::linalg::{unit_vec, zero_vec, LinMap, Space};
use crate::par::ExecMode;
use crate::scalar::Scalar;

/// The group algebra kZ_n: basis 1, g, ..., g^(n-1), grouplike generator.
pub fn kzn(n: usize) -> HopfAlgebra {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n)
        .map(|a| match a {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{a}"),
        })
        .collect();
    let space = Space::new(labels);
    let products = (0..n)
        .map(|a| (0..n).map(|b| unit_vec(n, (a + b) % n)).collect())
        .collect();
    let algebra = Algebra::from_products(space.clone(), unit_vec(n, 0), products);
    let delta = (0..n).map(|a| vec![(a, a, Scalar::one())]).collect();
    let counit = vec![Scalar::one(); n];
    let coalgebra = Coalgebra::from_terms(space.clone(), delta, counit);
    let antipode_cols: Vec<Vec<Scalar>> = (0..n).map(|a| unit_vec(n, (n - a) % n)).collect();
    let antipode = LinMap::from_columns(space.clone(), space, antipode_cols);
    HopfAlgebra::new(algebra, coalgebra, antipode)
}

pub fn kz2() -> HopfAlgebra {
    kzn(2)
}

/// kZ_n with its standard dual-quasitriangular structure
/// R(g^a ⊗ g^b) = zeta_n^(ab) at a primitive n-th root of unity.
pub fn kzn_dqt(n: usize, mode: ExecMode) -> (HopfAlgebra, Dqt) {
    let h = kzn(n);
    let vals = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| Scalar::root_of_unity(n as u32, (a * b) as i64))
                .collect()
        })
        .collect();
    let dqt = Dqt::from_matrix(&h, vals, mode).expect("bicharacter is convolution-invertible");
    (h, dqt)
}

/// The function Hopf algebra k(Z_n) on delta-function basis d0..d(n-1).
pub fn fn_zn(n: usize) -> HopfAlgebra {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n).map(|a| format!("d{a}")).collect();
    let space = Space::new(labels);
    let products = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| if a == b { unit_vec(n, a) } else { zero_vec(n) })
                .collect()
        })
        .collect();
    let algebra = Algebra::from_products(space.clone(), vec![Scalar::one(); n], products);
    let delta = (0..n)
        .map(|a| {
            (0..n)
                .map(|j| (j, (a + n - j) % n, Scalar::one()))
                .collect()
        })
        .collect();
    let mut counit = vec![Scalar::zero(); n];
    counit[0] = Scalar::one();
    let coalgebra = Coalgebra::from_terms(space.clone(), delta, counit);
    let antipode_cols: Vec<Vec<Scalar>> = (0..n).map(|a| unit_vec(n, (n - a) % n)).collect();
    let antipode = LinMap::from_columns(space.clone(), space, antipode_cols);
    HopfAlgebra::new(algebra, coalgebra, antipode)
}

/// Sweedler's four-dimensional Hopf algebra H4: basis 1, g, x, gx with
/// g^2 = 1, x^2 = 0, xg = -gx, Δg = g⊗g, Δx = x⊗1 + g⊗x, Sg = g, Sx = -gx.
pub fn sweedler() -> HopfAlgebra {
    let space = Space::new(vec!["1", "g", "x", "gx"]);
    let one = Scalar::one;
    let m = |k: usize| unit_vec(4, k);
    let neg = |mut v: Vec<Scalar>| {
        for c in v.iter_mut() {
            *c = c.neg();
        }
        v
    };
    // rows indexed by left factor 1, g, x, gx
    let products = vec![
        vec![m(0), m(1), m(2), m(3)],
        vec![m(1), m(0), m(3), m(2)],
        vec![m(2), neg(m(3)), zero_vec(4), zero_vec(4)],
        vec![m(3), neg(m(2)), zero_vec(4), zero_vec(4)],
    ];
    let algebra = Algebra::from_products(space.clone(), m(0), products);
    let delta = vec![
        vec![(0, 0, one())],
        vec![(1, 1, one())],
        vec![(2, 0, one()), (1, 2, one())],
        vec![(3, 1, one()), (0, 3, one())],
    ];
    let counit = vec![one(), one(), Scalar::zero(), Scalar::zero()];
    let coalgebra = Coalgebra::from_terms(space.clone(), delta, counit);
    let antipode_cols = vec![m(0), m(1), neg(m(3)), m(2)];
    let antipode = LinMap::from_columns(space.clone(), space, antipode_cols);
    HopfAlgebra::new(algebra, coalgebra, antipode)
}

/// Generator metadata for the isomorphism search: basis indices of (g, x)
/// and the exponent table basis[b] = g^e0 x^e1 for catalog presentations.
pub fn sweedler_generators() -> (Vec<usize>, Vec<Vec<u32>>) {
    (vec![1, 2], vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])
}

/// Parse a catalog name, e.g. "kZ2", "kZn:6", "taft:3", "crossprod-mu:3/2".
pub fn parse_name(name: &str) -> Result<(String, Option<String>)> {
    let mut parts = name.splitn(2, ':');
    let head = parts.next().unwrap_or_default().to_string();
    let param = parts.next().map(str::to_string);
    if head.is_empty() {
        return Err(Error::ParseError("empty catalog name".into()));
    }
    Ok((head, param))
}

pub fn parse_usize_param(name: &str, param: Option<String>, min: usize) -> Result<usize> {
    let p = param.ok_or_else(|| {
        Error::ParseError(format!("catalog entry `{name}` needs a numeric parameter, e.g. {name}:2"))
    })?;
    let n: usize = p
        .parse()
        .map_err(|_| Error::ParseError(format!("invalid parameter `{p}` for `{name}`")))?;
    if n < min {
        return Err(Error::ParseError(format!("parameter for `{name}` must be ≥ {min}")));
    }
    Ok(n)
}

pub fn parse_scalar_param(name: &str, param: Option<String>) -> Result<Scalar> {
    let p = param.ok_or_else(|| {
        Error::ParseError(format!("catalog entry `{name}` needs a rational parameter, e.g. {name}:2"))
    })?;
    let mut parts = p.splitn(2, '/');
    let num: i64 = parts
        .next()
        .unwrap()
        .parse()
        .map_err(|_| Error::ParseError(format!("invalid rational `{p}`")))?;
    let den: i64 = match parts.next() {
        None => 1,
        Some(d) => d
            .parse()
            .map_err(|_| Error::ParseError(format!("invalid rational `{p}`")))?,
    };
    if den == 0 {
        return Err(Error::ParseError("zero denominator".into()));
    }
    Ok(Scalar::rational(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_hopf_algebras_pass_axioms() {
        for h in [kz2(), kzn(3), fn_zn(4), sweedler()] {
            let report = h.check_axioms(ExecMode::Sequential);
            assert!(report.all_passed(), "{report}");
        }
    }
}
