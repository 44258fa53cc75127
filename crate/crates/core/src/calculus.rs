//! Universal differential calculus on an algebra: Ω^n P inside P^{⊗(n+1)},
//! the differential d, the concatenation product of forms, and the
//! horizontal subspaces P(Ω¹M)P and (Ω^n M)P.
//!
//! Forms are stored as raw tensors of the ambient tensor power together with
//! membership in the form subspace; all bundle formulas act on the ambient
//! legs directly.

use crate::comodule::FixedSubalgebra;
use crate::echelon::{rref, Subspace};
use crate::error::{Error, Result};
use crate::hopf::Algebra;
use crate::linalg::{zero_vec, LinMap, Space, SpaceRef, TensorShape};
use crate::par::ExecMode;
use crate::scalar::Scalar;

/// Ambient space P^{⊗(n+1)} for n-forms.
pub fn form_ambient(p: &Algebra, n: usize) -> SpaceRef {
    Space::tensor_power(p.space(), n + 1)
}

/// The space of universal n-forms Ω^n P ⊆ P^{⊗(n+1)}: the intersection of
/// the kernels of multiplication applied at each adjacent pair of legs.
/// Degree 0 is P itself.
pub fn universal_forms(p: &Algebra, n: usize, mode: ExecMode) -> Subspace {
    let d = p.dim();
    let ambient = form_ambient(p, n);
    if n == 0 {
        return Subspace::full(ambient);
    }
    let amb_dim = ambient.dim();
    assert!(
        amb_dim <= 1 << 16,
        "universal forms of degree {n} on dimension {d} exceed the supported size"
    );
    let out_shape = TensorShape::homogeneous(d, n);
    let in_shape = TensorShape::homogeneous(d, n + 1);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for pos in 0..n {
        let mut block = vec![zero_vec(amb_dim); out_shape.total()];
        for col in 0..amb_dim {
            let idx = in_shape.unflatten(col);
            let prod = p.basis_product(idx[pos], idx[pos + 1]);
            for (s, c) in prod.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut out_idx = Vec::with_capacity(n);
                out_idx.extend_from_slice(&idx[..pos]);
                out_idx.push(s);
                out_idx.extend_from_slice(&idx[pos + 2..]);
                let r = out_shape.flatten(&out_idx);
                block[r][col] = &block[r][col] + c;
            }
        }
        rows.extend(block);
    }
    let re = rref(rows, amb_dim, mode);
    // kernel from the echelonised constraints
    let mut is_pivot = vec![false; amb_dim];
    for &p in &re.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for j in 0..amb_dim {
        if is_pivot[j] {
            continue;
        }
        let mut v = zero_vec(amb_dim);
        v[j] = Scalar::one();
        for (row, &piv) in re.rows.iter().zip(&re.pivots) {
            if !row[j].is_zero() {
                v[piv] = row[j].neg();
            }
        }
        basis.push(v);
    }
    Subspace::from_spanning(ambient, basis, mode)
}

/// d(u₀⊗…⊗u_n) = Σ_{i=0}^{n+1} (−1)^i · (1 inserted at slot i); the inserted
/// element is the algebra unit. The alternating sum squares to zero.
pub fn differential(p: &Algebra, n: usize, xi: &[Scalar]) -> Vec<Scalar> {
    let d = p.dim();
    let in_shape = TensorShape::homogeneous(d, n + 1);
    let out_shape = TensorShape::homogeneous(d, n + 2);
    assert_eq!(xi.len(), in_shape.total());
    let mut out = zero_vec(out_shape.total());
    for (flat, c) in xi.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let idx = in_shape.unflatten(flat);
        for slot in 0..=n + 1 {
            for (u, uc) in p.unit().iter().enumerate() {
                if uc.is_zero() {
                    continue;
                }
                let mut oidx = Vec::with_capacity(n + 2);
                oidx.extend_from_slice(&idx[..slot]);
                oidx.push(u);
                oidx.extend_from_slice(&idx[slot..]);
                let r = out_shape.flatten(&oidx);
                let term = &(c * uc);
                out[r] = if slot % 2 == 0 { &out[r] + term } else { &out[r] - term };
            }
        }
    }
    out
}

/// Differential with a membership precheck on the input.
pub fn differential_checked(
    p: &Algebra,
    forms_n: &Subspace,
    n: usize,
    xi: &[Scalar],
) -> Result<Vec<Scalar>> {
    if !forms_n.contains(xi) {
        return Err(Error::NotAForm);
    }
    Ok(differential(p, n, xi))
}

/// Concatenation product Ω^a P × Ω^b P → Ω^{a+b} P:
/// (u₀⊗…⊗u_a)·(v₀⊗…⊗v_b) = u₀⊗…⊗(u_a v₀)⊗…⊗v_b.
pub fn form_mul(p: &Algebra, a: usize, xi: &[Scalar], b: usize, eta: &[Scalar]) -> Vec<Scalar> {
    let d = p.dim();
    let sa = TensorShape::homogeneous(d, a + 1);
    let sb = TensorShape::homogeneous(d, b + 1);
    let so = TensorShape::homogeneous(d, a + b + 1);
    assert_eq!(xi.len(), sa.total());
    assert_eq!(eta.len(), sb.total());
    let mut out = zero_vec(so.total());
    for (fa, ca) in xi.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        let ia = sa.unflatten(fa);
        for (fb, cb) in eta.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            let ib = sb.unflatten(fb);
            let c = ca * cb;
            let prod = p.basis_product(ia[a], ib[0]);
            for (s, pc) in prod.iter().enumerate() {
                if pc.is_zero() {
                    continue;
                }
                let mut oidx = Vec::with_capacity(a + b + 1);
                oidx.extend_from_slice(&ia[..a]);
                oidx.push(s);
                oidx.extend_from_slice(&ib[1..]);
                let r = so.flatten(&oidx);
                out[r] = &out[r] + &(&c * pc);
            }
        }
    }
    out
}

/// Embed an M-form into P^{⊗(n+1)} along the inclusion, leg by leg.
pub fn embed_form(incl: &LinMap, n: usize, xi: &[Scalar]) -> Vec<Scalar> {
    let dm = incl.source().dim();
    let dp = incl.target().dim();
    let sm = TensorShape::homogeneous(dm, n + 1);
    let sp = TensorShape::homogeneous(dp, n + 1);
    assert_eq!(xi.len(), sm.total());
    let mut out = zero_vec(sp.total());
    for (flat, c) in xi.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let idx = sm.unflatten(flat);
        // expand the tensor of inclusion columns
        let mut terms: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), c.clone())];
        for &mi in &idx {
            let col = incl.column(mi);
            let mut next = Vec::new();
            for (prefix, pc) in &terms {
                for (s, sc) in col.iter().enumerate() {
                    if sc.is_zero() {
                        continue;
                    }
                    let mut p2 = prefix.clone();
                    p2.push(s);
                    next.push((p2, pc * sc));
                }
            }
            terms = next;
        }
        for (oidx, oc) in terms {
            let r = sp.flatten(&oidx);
            out[r] = &out[r] + &oc;
        }
    }
    out
}

/// P(Ω¹M)P ⊆ P⊗P: the span of u·dm·v = u⊗mv − um⊗v over basis u, v of P
/// and basis m of M.
pub fn p_dm_p(p: &Algebra, m: &FixedSubalgebra, mode: ExecMode) -> Subspace {
    let d = p.dim();
    let ambient = form_ambient(p, 1);
    let mut spanning = Vec::new();
    for mk in 0..m.dim() {
        let mvec = m.inclusion.column(mk);
        for u in 0..d {
            let um = p.mul_vec(&crate::linalg::unit_vec(d, u), &mvec);
            for v in 0..d {
                let mv = p.mul_vec(&mvec, &crate::linalg::unit_vec(d, v));
                // u ⊗ m v − u m ⊗ v
                let mut vec = zero_vec(d * d);
                for (s, c) in mv.iter().enumerate() {
                    if !c.is_zero() {
                        vec[u * d + s] = &vec[u * d + s] + c;
                    }
                }
                for (s, c) in um.iter().enumerate() {
                    if !c.is_zero() {
                        vec[s * d + v] = &vec[s * d + v] - c;
                    }
                }
                spanning.push(vec);
            }
        }
    }
    Subspace::from_spanning(ambient, spanning, mode)
}

/// (Ω^n M)P ⊆ P^{⊗(n+1)}: the span of Ω^n M (embedded along the inclusion)
/// multiplied on the right by P. Degree 0 is M·P.
pub fn omega_n_m_p(p: &Algebra, m: &FixedSubalgebra, n: usize, mode: ExecMode) -> Subspace {
    let d = p.dim();
    let ambient = form_ambient(p, n);
    let m_forms = universal_forms(&m.algebra, n, mode);
    let mut spanning = Vec::new();
    for base in m_forms.basis_vectors() {
        let lifted = embed_form(&m.inclusion, n, base);
        for j in 0..d {
            spanning.push(form_mul(p, n, &lifted, 0, &crate::linalg::unit_vec(d, j)));
        }
    }
    Subspace::from_spanning(ambient, spanning, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::kz2;
    use crate::linalg::unit_vec;

    #[test]
    fn d_squared_is_zero_pointwise() {
        let h = kz2();
        let p = &h.algebra;
        for i in 0..2 {
            let du = differential(p, 0, &unit_vec(2, i));
            let ddu = differential(p, 1, &du);
            assert!(crate::linalg::vec_is_zero(&ddu));
        }
    }
}
