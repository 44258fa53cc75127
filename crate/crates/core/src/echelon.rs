//! Deterministic exact Gaussian elimination: reduced row echelon form,
//! kernels, images, solving, inversion, subspaces and quotient spaces.
//!
//! Pivoting is leftmost-column with first available row, and the RREF of a
//! row space is unique, so every basis and witness the library reports is
//! reproducible. Row elimination below/above a pivot is data-parallel.

use crate::linalg::{
    format_vector, unit_vec, vec_is_zero, vec_scale, zero_vec, LinMap, Space, SpaceRef,
};
use crate::par::{self, ExecMode};
use crate::scalar::Scalar;

/// Reduced row echelon form of a list of row vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

pub fn rref(mut rows: Vec<Vec<Scalar>>, ncols: usize, mode: ExecMode) -> Rref {
    for r in &rows {
        assert_eq!(r.len(), ncols);
    }
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][col].inv().expect("pivot entry nonzero");
        if !inv.is_one() {
            rows[rank] = vec_scale(&inv, &rows[rank]);
        }
        let pivot_row = rows[rank].clone();
        par::for_each_mut(mode, &mut rows, |i, row| {
            if i == rank || row[col].is_zero() {
                return;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        });
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Rref { rows, pivots, ncols }
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after eliminating all pivot coordinates, together with
    /// the coefficients used. `v` is in the row space iff the residual is 0.
    pub fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        assert_eq!(v.len(), self.ncols);
        let mut w = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !c.is_zero() {
                for (x, y) in w.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x = &*x - &(&c * y);
                    }
                }
            }
            coeffs.push(c);
        }
        (w, coeffs)
    }
}

/// A subspace of an ambient space, held as the unique RREF basis of its span.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub ambient: SpaceRef,
    pub basis: Rref,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Subspace) -> bool {
        self.ambient.dim() == other.ambient.dim() && self.basis == other.basis
    }
}

impl Subspace {
    pub fn from_spanning(ambient: SpaceRef, vectors: Vec<Vec<Scalar>>, mode: ExecMode) -> Subspace {
        let ncols = ambient.dim();
        Subspace { ambient, basis: rref(vectors, ncols, mode) }
    }

    pub fn zero(ambient: SpaceRef) -> Subspace {
        let ncols = ambient.dim();
        Subspace { ambient, basis: rref(Vec::new(), ncols, ExecMode::Sequential) }
    }

    pub fn full(ambient: SpaceRef) -> Subspace {
        let d = ambient.dim();
        let vectors = (0..d).map(|i| unit_vec(d, i)).collect();
        Subspace::from_spanning(ambient, vectors, ExecMode::Sequential)
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis_vectors(&self) -> &[Vec<Scalar>] {
        &self.basis.rows
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.basis.reduce(v).0)
    }

    /// Coefficients of `v` on the RREF basis, if `v` is a member.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (residual, coeffs) = self.basis.reduce(v);
        if vec_is_zero(&residual) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// First basis vector of `other` outside `self`, as a witness string.
    pub fn first_escapee(&self, other: &Subspace) -> Option<String> {
        other
            .basis_vectors()
            .iter()
            .find(|v| !self.contains(v))
            .map(|v| format_vector(&self.ambient, v))
    }
}

/// Kernel of a linear map as a subspace of its source.
pub fn kernel(f: &LinMap, mode: ExecMode) -> Subspace {
    let n = f.source().dim();
    let re = rref(f.rows().to_vec(), n, mode);
    let mut pivots_set = vec![false; n];
    for &p in &re.pivots {
        pivots_set[p] = true;
    }
    let mut basis = Vec::new();
    for j in 0..n {
        if pivots_set[j] {
            continue;
        }
        let mut v = zero_vec(n);
        v[j] = Scalar::one();
        for (row, &p) in re.rows.iter().zip(&re.pivots) {
            if !row[j].is_zero() {
                v[p] = row[j].neg();
            }
        }
        basis.push(v);
    }
    Subspace::from_spanning(f.source().clone(), basis, mode)
}

/// Image (column space) of a linear map as a subspace of its target.
pub fn image(f: &LinMap, mode: ExecMode) -> Subspace {
    let cols: Vec<Vec<Scalar>> = (0..f.source().dim()).map(|j| f.column(j)).collect();
    Subspace::from_spanning(f.target().clone(), cols, mode)
}

/// One exact solution of `f(x) = y`, or `None` when `y` is outside the image.
/// Deterministic: free variables are set to zero after leftmost pivoting.
pub fn solve(f: &LinMap, y: &[Scalar], mode: ExecMode) -> Option<Vec<Scalar>> {
    assert_eq!(y.len(), f.target().dim());
    let n = f.source().dim();
    let mut rows = f.rows().to_vec();
    for (row, rhs) in rows.iter_mut().zip(y) {
        row.push(rhs.clone());
    }
    let re = rref(rows, n + 1, mode);
    if re.pivots.contains(&n) {
        return None;
    }
    let mut x = zero_vec(n);
    for (row, &p) in re.rows.iter().zip(&re.pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// Exact inverse of a square bijective map.
pub fn invert(f: &LinMap, mode: ExecMode) -> Option<LinMap> {
    let n = f.source().dim();
    if f.target().dim() != n {
        return None;
    }
    let mut rows = f.rows().to_vec();
    for (i, row) in rows.iter_mut().enumerate() {
        row.extend(unit_vec(n, i));
    }
    let re = rref(rows, 2 * n, mode);
    if re.rank() < n || re.pivots[..n.min(re.pivots.len())] != (0..n).collect::<Vec<_>>()[..] {
        return None;
    }
    let inv_rows: Vec<Vec<Scalar>> = re.rows.iter().map(|r| r[n..].to_vec()).collect();
    Some(LinMap::new(f.target().clone(), f.source().clone(), inv_rows))
}

/// A quotient `V / W` with a deterministic section.
///
/// The quotient basis is indexed by the non-pivot columns of the relation
/// RREF; `projection ∘ section = id` on the quotient and
/// `kernel(projection) = relations` hold by construction and are also
/// asserted in tests.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    pub ambient: SpaceRef,
    pub relations: Subspace,
    pub space: SpaceRef,
    pub projection: LinMap,
    pub section: LinMap,
}

pub fn quotient(ambient: SpaceRef, relations: Subspace, mode: ExecMode) -> QuotientSpace {
    assert_eq!(relations.ambient.dim(), ambient.dim());
    let n = ambient.dim();
    let mut is_pivot = vec![false; n];
    for &p in &relations.basis.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let labels: Vec<String> = free.iter().map(|&j| format!("[{}]", ambient.label(j))).collect();
    let qspace = Space::new(labels);
    let proj_cols = par::map_indexed(mode, n, |j| {
        let (residual, _) = relations.basis.reduce(&unit_vec(n, j));
        free.iter().map(|&c| residual[c].clone()).collect::<Vec<_>>()
    });
    let projection = LinMap::from_columns(ambient.clone(), qspace.clone(), proj_cols);
    let sect_cols: Vec<Vec<Scalar>> = free.iter().map(|&j| unit_vec(n, j)).collect();
    let section = LinMap::from_columns(qspace.clone(), ambient.clone(), sect_cols);
    QuotientSpace { ambient, relations, space: qspace, projection, section }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn int_map(space: &SpaceRef, entries: &[&[i64]]) -> LinMap {
        let rows = entries
            .iter()
            .map(|r| r.iter().map(|&k| Scalar::from_int(k)).collect())
            .collect();
        LinMap::new(space.clone(), space.clone(), rows)
    }

    #[test]
    fn solve_identity_and_zero() {
        let s = Space::with_prefix("e", 2);
        let id = LinMap::identity(s.clone());
        let y = vec![Scalar::one(), Scalar::zero()];
        assert_eq!(solve(&id, &y, ExecMode::Sequential).unwrap(), y);

        let one = Space::field();
        let z = LinMap::zero(one.clone(), one);
        assert_eq!(solve(&z, &[Scalar::one()], ExecMode::Sequential), None);
    }

    #[test]
    fn solve_upper_triangular_by_back_substitution() {
        let s = Space::with_prefix("e", 2);
        let f = int_map(&s, &[&[1, 1], &[0, 1]]);
        let y = vec![Scalar::from_int(3), Scalar::from_int(1)];
        let x = solve(&f, &y, ExecMode::Sequential).unwrap();
        assert_eq!(x, vec![Scalar::from_int(2), Scalar::from_int(1)]);
        assert_eq!(f.apply(&x), y);
    }

    #[test]
    fn kernel_of_identity_and_image_of_zero_are_trivial() {
        let s = Space::with_prefix("e", 3);
        assert_eq!(kernel(&LinMap::identity(s.clone()), ExecMode::Sequential).dim(), 0);
        assert_eq!(image(&LinMap::zero(s.clone(), s), ExecMode::Sequential).dim(), 0);
    }

    #[test]
    fn quotient_of_plane_by_diagonal() {
        let s = Space::with_prefix("e", 2);
        let w = Subspace::from_spanning(
            s.clone(),
            vec![vec![Scalar::one(), Scalar::one()]],
            ExecMode::Sequential,
        );
        let q = quotient(s, w, ExecMode::Sequential);
        assert_eq!(q.space.dim(), 1);
        // projection is (a,b) |-> b - a up to the documented convention
        let p = |a: i64, b: i64| {
            q.projection.apply(&[Scalar::from_int(a), Scalar::from_int(b)])[0].clone()
        };
        assert_eq!(p(1, 1), Scalar::zero());
        assert_eq!(p(2, 5), p(0, 3));
        // projection ∘ section = id
        let comp = q.projection.compose(&q.section);
        assert_eq!(comp, LinMap::identity(q.space.clone()));
        // kernel(projection) = relations
        assert_eq!(kernel(&q.projection, ExecMode::Sequential), q.relations);
    }

    #[test]
    fn invert_round_trip() {
        let s = Space::with_prefix("e", 3);
        let f = int_map(&s, &[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        let inv = invert(&f, ExecMode::Sequential).unwrap();
        assert_eq!(f.compose(&inv), LinMap::identity(s.clone()));
        assert_eq!(inv.compose(&f), LinMap::identity(s.clone()));
        let singular = int_map(&s, &[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert!(invert(&singular, ExecMode::Sequential).is_none());
    }
}
