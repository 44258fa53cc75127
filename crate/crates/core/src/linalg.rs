//! Finite-dimensional spaces with named bases, vectors, and exact linear maps.

use std::fmt;
use std::sync::Arc;

use crate::par::{self, ExecMode};
use crate::scalar::Scalar;

/// A finite-dimensional vector space with a distinguished, labelled basis.
#[derive(Debug, PartialEq, Eq)]
pub struct Space {
    labels: Vec<String>,
}

pub type SpaceRef = Arc<Space>;

impl Space {
    pub fn new<S: Into<String>>(labels: Vec<S>) -> SpaceRef {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            assert!(seen.insert(l.clone()), "duplicate basis label {l}");
        }
        Arc::new(Space { labels })
    }

    pub fn with_prefix(prefix: &str, dim: usize) -> SpaceRef {
        Space::new((0..dim).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>())
    }

    /// The ground field as a one-dimensional space.
    pub fn field() -> SpaceRef {
        Space::new(vec!["1"])
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Tensor product space, row-major: index of `a_i (x) b_j` is `i*dim(b)+j`.
    pub fn tensor(a: &SpaceRef, b: &SpaceRef) -> SpaceRef {
        let mut labels = Vec::with_capacity(a.dim() * b.dim());
        for la in a.labels() {
            for lb in b.labels() {
                labels.push(format!("{la}⊗{lb}"));
            }
        }
        Space::new(labels)
    }

    pub fn tensor_power(a: &SpaceRef, k: usize) -> SpaceRef {
        assert!(k >= 1);
        let mut out = a.clone();
        for _ in 1..k {
            out = Space::tensor(&out, a);
        }
        out
    }
}

// ---- vectors -------------------------------------------------------------

pub fn zero_vec(dim: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); dim]
}

pub fn unit_vec(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(dim);
    v[i] = Scalar::one();
    v
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

pub fn vec_add_assign(a: &mut [Scalar], b: &[Scalar]) {
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x + y;
        }
    }
}

pub fn vec_add_scaled(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x + &(c * y);
        }
    }
}

/// Kronecker product of vectors, row-major ordering.
pub fn vec_tensor(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        if x.is_zero() {
            out.extend(std::iter::repeat_with(Scalar::zero).take(b.len()));
        } else {
            out.extend(b.iter().map(|y| x * y));
        }
    }
    out
}

/// Pretty form of a vector against its space's basis labels, for witnesses.
pub fn format_vector(space: &Space, v: &[Scalar]) -> String {
    if vec_is_zero(v) {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = if c.is_one() {
            format!("({})", space.label(i))
        } else {
            format!("{c}*({})", space.label(i))
        };
        if out.is_empty() {
            out = term;
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    out
}

/// Multi-index bookkeeping for iterated tensor powers, row-major.
#[derive(Clone, Debug)]
pub struct TensorShape(pub Vec<usize>);

impl TensorShape {
    pub fn homogeneous(dim: usize, factors: usize) -> TensorShape {
        TensorShape(vec![dim; factors])
    }

    pub fn total(&self) -> usize {
        self.0.iter().product()
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.0.len());
        let mut out = 0;
        for (i, d) in idx.iter().zip(&self.0) {
            debug_assert!(i < d);
            out = out * d + i;
        }
        out
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.0.len()];
        for k in (0..self.0.len()).rev() {
            out[k] = flat % self.0[k];
            flat /= self.0[k];
        }
        out
    }
}

// ---- linear maps ----------------------------------------------------------

/// An exact linear map, stored dense row-major: `rows[i][j]` is the
/// coefficient of target basis element `i` in the image of source basis
/// element `j`.
#[derive(Clone)]
pub struct LinMap {
    source: SpaceRef,
    target: SpaceRef,
    rows: Vec<Vec<Scalar>>,
}

impl LinMap {
    pub fn new(source: SpaceRef, target: SpaceRef, rows: Vec<Vec<Scalar>>) -> LinMap {
        assert_eq!(rows.len(), target.dim(), "row count must equal target dim");
        for r in &rows {
            assert_eq!(r.len(), source.dim(), "row length must equal source dim");
        }
        LinMap { source, target, rows }
    }

    pub fn zero(source: SpaceRef, target: SpaceRef) -> LinMap {
        let rows = vec![zero_vec(source.dim()); target.dim()];
        LinMap { source, target, rows }
    }

    pub fn identity(space: SpaceRef) -> LinMap {
        let d = space.dim();
        let rows = (0..d).map(|i| unit_vec(d, i)).collect();
        LinMap { source: space.clone(), target: space, rows }
    }

    pub fn from_columns(source: SpaceRef, target: SpaceRef, cols: Vec<Vec<Scalar>>) -> LinMap {
        assert_eq!(cols.len(), source.dim());
        let mut rows = vec![zero_vec(source.dim()); target.dim()];
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), target.dim());
            for (i, c) in col.iter().enumerate() {
                if !c.is_zero() {
                    rows[i][j] = c.clone();
                }
            }
        }
        LinMap { source, target, rows }
    }

    pub fn source(&self) -> &SpaceRef {
        &self.source
    }

    pub fn target(&self) -> &SpaceRef {
        &self.target
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| vec_is_zero(r))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.source.dim(), "apply: dimension mismatch");
        let nz: Vec<usize> = (0..v.len()).filter(|&j| !v[j].is_zero()).collect();
        self.rows
            .iter()
            .map(|row| {
                let mut acc = Scalar::zero();
                for &j in &nz {
                    if !row[j].is_zero() {
                        acc = &acc + &(&row[j] * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinMap) -> LinMap {
        assert_eq!(
            inner.target.dim(),
            self.source.dim(),
            "compose: dimension mismatch"
        );
        let mode = ExecMode::default_mode();
        let n_out = self.target.dim();
        let rows = par::map_indexed(mode, n_out, |i| {
            let mut out = zero_vec(inner.source.dim());
            for (k, c) in self.rows[i].iter().enumerate() {
                if !c.is_zero() {
                    vec_add_scaled(&mut out, c, &inner.rows[k]);
                }
            }
            out
        });
        LinMap { source: inner.source.clone(), target: self.target.clone(), rows }
    }

    /// Kronecker product with row-major ordering of the tensor bases.
    pub fn tensor(&self, other: &LinMap) -> LinMap {
        let source = Space::tensor(&self.source, &other.source);
        let target = Space::tensor(&self.target, &other.target);
        let (ds, dos) = (self.source.dim(), other.source.dim());
        let dot = other.target.dim();
        let mut rows = vec![zero_vec(source.dim()); target.dim()];
        for (i, ri) in self.rows.iter().enumerate() {
            for (j, a) in ri.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, rk) in other.rows.iter().enumerate() {
                    for (l, b) in rk.iter().enumerate() {
                        if !b.is_zero() {
                            rows[i * dot + k][j * dos + l] = a * b;
                        }
                    }
                }
            }
        }
        let _ = ds;
        LinMap { source, target, rows }
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.source.dim(), other.source.dim());
        assert_eq!(self.target.dim(), other.target.dim());
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| vec_add(a, b))
            .collect();
        LinMap { source: self.source.clone(), target: self.target.clone(), rows }
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.source.dim(), other.source.dim());
        assert_eq!(self.target.dim(), other.target.dim());
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| vec_sub(a, b))
            .collect();
        LinMap { source: self.source.clone(), target: self.target.clone(), rows }
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        let rows = self.rows.iter().map(|r| vec_scale(c, r)).collect();
        LinMap { source: self.source.clone(), target: self.target.clone(), rows }
    }

    /// Transpose as a map between the dual spaces (same labelled bases).
    pub fn transpose(&self) -> LinMap {
        let mut rows = vec![zero_vec(self.target.dim()); self.source.dim()];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in r.iter().enumerate() {
                if !c.is_zero() {
                    rows[j][i] = c.clone();
                }
            }
        }
        LinMap { source: self.target.clone(), target: self.source.clone(), rows }
    }

    /// Vertical stack: target is the formal direct sum of the targets.
    pub fn stack(maps: &[&LinMap]) -> LinMap {
        assert!(!maps.is_empty());
        let src = maps[0].source.clone();
        let mut rows = Vec::new();
        for m in maps {
            assert_eq!(m.source.dim(), src.dim());
            rows.extend(m.rows.iter().cloned());
        }
        let target = Space::with_prefix("c", rows.len());
        LinMap { source: src, target, rows }
    }
}

impl PartialEq for LinMap {
    fn eq(&self, other: &LinMap) -> bool {
        self.source.dim() == other.source.dim()
            && self.target.dim() == other.target.dim()
            && self.rows == other.rows
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} [", self.target.dim(), self.source.dim())?;
        for r in &self.rows {
            let entries: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", entries.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_of_identities_is_identity() {
        let a = Space::with_prefix("a", 2);
        let b = Space::with_prefix("b", 3);
        let t = LinMap::identity(a.clone()).tensor(&LinMap::identity(b.clone()));
        assert_eq!(t, LinMap::identity(Space::tensor(&a, &b)));
    }

    #[test]
    fn tensor_map_on_basis_vectors() {
        let a = Space::with_prefix("a", 2);
        let f = LinMap::new(
            a.clone(),
            a.clone(),
            vec![
                vec![Scalar::from_int(1), Scalar::from_int(2)],
                vec![Scalar::from_int(3), Scalar::from_int(4)],
            ],
        );
        let g = LinMap::identity(a.clone());
        let fg = f.tensor(&g);
        for i in 0..2 {
            for j in 0..2 {
                let lhs = fg.apply(&vec_tensor(&unit_vec(2, i), &unit_vec(2, j)));
                let rhs = vec_tensor(&f.apply(&unit_vec(2, i)), &g.apply(&unit_vec(2, j)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn tensor_shape_round_trip() {
        let sh = TensorShape::homogeneous(3, 3);
        for flat in 0..sh.total() {
            assert_eq!(sh.flatten(&sh.unflatten(flat)), flat);
        }
    }
}
