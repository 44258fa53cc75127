//! Right comodules and comodule algebras, fixed (coinvariant) subalgebras,
//! the standard comodules H_R, H_L, H_Ad, tensor-product comodules and an
//! exact solver for intertwiner spaces.

use std::sync::Arc;

use crate::echelon::{kernel, Subspace};
use crate::error::{Error, Result};
use crate::hopf::{tensor_mul, Algebra, HopfAlgebra};
use crate::linalg::{
    unit_vec, vec_is_zero, vec_tensor, zero_vec, LinMap, Space, SpaceRef,
};
use crate::par::{self, ExecMode};
use crate::report::{Check, CheckReport, Witness};
use crate::scalar::Scalar;

pub type HopfRef = Arc<HopfAlgebra>;

/// A right H-comodule: coaction ρ: V → V⊗H, held sparsely.
#[derive(Clone)]
pub struct Comodule {
    space: SpaceRef,
    host: HopfRef,
    /// Sparse coaction terms: rho[i] = [(v, h, c)] with ρ(e_i) = Σ c e_v⊗e_h.
    rho: Vec<Vec<(usize, usize, Scalar)>>,
}

impl Comodule {
    pub fn new(space: SpaceRef, host: HopfRef, coaction: LinMap) -> Comodule {
        let (dv, dh) = (space.dim(), host.dim());
        assert_eq!(coaction.source().dim(), dv);
        assert_eq!(coaction.target().dim(), dv * dh);
        let mut rho = vec![Vec::new(); dv];
        for i in 0..dv {
            for (p, c) in coaction.column(i).into_iter().enumerate() {
                if !c.is_zero() {
                    rho[i].push((p / dh, p % dh, c));
                }
            }
        }
        Comodule { space, host, rho }
    }

    pub fn from_terms(
        space: SpaceRef,
        host: HopfRef,
        rho: Vec<Vec<(usize, usize, Scalar)>>,
    ) -> Comodule {
        assert_eq!(rho.len(), space.dim());
        Comodule { space, host, rho }
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn host(&self) -> &HopfRef {
        &self.host
    }

    /// Dense coaction matrix V → V⊗H (built on demand; hot paths use the
    /// sparse terms).
    pub fn coaction_matrix(&self) -> LinMap {
        let (dv, dh) = (self.dim(), self.host.dim());
        let target = Space::tensor(&self.space, self.host.space());
        let mut cols = Vec::with_capacity(dv);
        for terms in &self.rho {
            let mut col = zero_vec(dv * dh);
            for (v, h, c) in terms {
                col[v * dh + h] = &col[v * dh + h] + c;
            }
            cols.push(col);
        }
        LinMap::from_columns(self.space.clone(), target, cols)
    }

    pub fn rho_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.rho[i]
    }

    /// ρ(e_i) as a dense vector in V⊗H.
    pub fn coact_basis(&self, i: usize) -> Vec<Scalar> {
        let dh = self.host.dim();
        let mut out = zero_vec(self.dim() * dh);
        for (v, h, c) in &self.rho[i] {
            out[v * dh + h] = &out[v * dh + h] + c;
        }
        out
    }

    pub fn coact_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        let dh = self.host.dim();
        assert_eq!(v.len(), self.dim());
        let mut out = zero_vec(self.dim() * dh);
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (vv, h, c) in &self.rho[i] {
                out[vv * dh + h] = &out[vv * dh + h] + &(x * c);
            }
        }
        out
    }

    /// Comodule axioms on all basis elements.
    pub fn check(&self, mode: ExecMode) -> CheckReport {
        let (dv, dh) = (self.dim(), self.host.dim());
        let mut report = CheckReport::new();
        let t3 = Space::tensor(
            &Space::tensor(&self.space, self.host.space()),
            self.host.space(),
        );
        let coassoc = par::find_first(mode, dv, |i| {
            // (ρ⊗id)∘ρ vs (id⊗Δ)∘ρ in V⊗H⊗H
            let mut lhs = zero_vec(dv * dh * dh);
            let mut rhs = zero_vec(dv * dh * dh);
            for (v, h, c) in &self.rho[i] {
                for (v2, h2, c2) in &self.rho[*v] {
                    let idx = (v2 * dh + h2) * dh + h;
                    lhs[idx] = &lhs[idx] + &(c * c2);
                }
                for (a, b, c2) in self.host.coalgebra.delta_terms(*h) {
                    let idx = (v * dh + a) * dh + b;
                    rhs[idx] = &rhs[idx] + &(c * c2);
                }
            }
            (lhs != rhs).then(|| Witness::vectors(self.space.label(i), &t3, &lhs, &rhs))
        });
        report.push(Check::from_witness("comodule/coassociativity", coassoc));
        let counit = par::find_first(mode, dv, |i| {
            let mut acc = zero_vec(dv);
            for (v, h, c) in &self.rho[i] {
                acc[*v] = &acc[*v] + &(c * self.host.coalgebra.counit_basis(*h));
            }
            let e = unit_vec(dv, i);
            (acc != e).then(|| Witness::vectors(self.space.label(i), &self.space, &acc, &e))
        });
        report.push(Check::from_witness("comodule/counit", counit));
        report
    }

    /// The subspace of coinvariants {v | ρ(v) = v⊗1}.
    pub fn invariants(&self, mode: ExecMode) -> Subspace {
        let (dv, dh) = (self.dim(), self.host.dim());
        let mut diff_cols = Vec::with_capacity(dv);
        for i in 0..dv {
            let mut col = self.coact_basis(i);
            for (h, c) in self.host.unit().iter().enumerate() {
                if !c.is_zero() {
                    col[i * dh + h] = &col[i * dh + h] - c;
                }
            }
            diff_cols.push(col);
        }
        let target = Space::tensor(&self.space, self.host.space());
        let diff = LinMap::from_columns(self.space.clone(), target, diff_cols);
        kernel(&diff, mode)
    }
}

/// Trivial comodule on the ground field: 1 ↦ 1⊗1.
pub fn trivial_comodule(host: &HopfRef) -> Comodule {
    let space = Space::field();
    let terms = vec![host
        .unit()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(h, c)| (0usize, h, c.clone()))
        .collect()];
    Comodule::from_terms(space, host.clone(), terms)
}

/// The regular, left-regular and adjoint right coactions on H itself.
pub struct StandardComodules {
    pub h_r: Comodule,
    pub h_l: Comodule,
    pub h_ad: Comodule,
}

pub fn standard_comodules(host: &HopfRef) -> StandardComodules {
    let d = host.dim();
    let space = host.space().clone();
    // H_R: ρ = Δ
    let rho_r = (0..d)
        .map(|i| {
            host.coalgebra
                .delta_terms(i)
                .iter()
                .map(|(a, b, c)| (*a, *b, c.clone()))
                .collect()
        })
        .collect();
    let h_r = Comodule::from_terms(space.clone(), host.clone(), rho_r);
    // H_L: ρ(h) = h₂ ⊗ S h₁
    let rho_l = (0..d)
        .map(|i| {
            let mut terms = Vec::new();
            for (a, b, c) in host.coalgebra.delta_terms(i) {
                for (s, sc) in host.antipode.column(*a).into_iter().enumerate() {
                    if !sc.is_zero() {
                        terms.push((*b, s, c * &sc));
                    }
                }
            }
            terms
        })
        .collect();
    let h_l = Comodule::from_terms(space.clone(), host.clone(), rho_l);
    // H_Ad: ρ(h) = h₂ ⊗ (S h₁) h₃
    let rho_ad = (0..d)
        .map(|i| {
            let mut terms = Vec::new();
            for (a, b, k, c) in host.coalgebra.delta3_terms(i) {
                let prod = host.algebra.mul_vec(&host.antipode.column(a), &unit_vec(d, k));
                for (s, sc) in prod.into_iter().enumerate() {
                    if !sc.is_zero() {
                        terms.push((b, s, &c * &sc));
                    }
                }
            }
            terms
        })
        .collect();
    let h_ad = Comodule::from_terms(space, host.clone(), rho_ad);
    StandardComodules { h_r, h_l, h_ad }
}

/// Tensor product comodule: v⊗w ↦ v⁽¹⁾⊗w⁽¹⁾⊗v⁽²⁾w⁽²⁾.
pub fn tensor_comodule(v: &Comodule, w: &Comodule) -> Comodule {
    assert!(Arc::ptr_eq(&v.host, &w.host) || v.host.dim() == w.host.dim());
    let host = v.host.clone();
    let (dv, dw) = (v.dim(), w.dim());
    let space = Space::tensor(&v.space, &w.space);
    let mut rho = Vec::with_capacity(dv * dw);
    for i in 0..dv {
        for j in 0..dw {
            let mut terms = Vec::new();
            for (vi, hi, c1) in &v.rho[i] {
                for (wj, hj, c2) in &w.rho[j] {
                    let c = c1 * c2;
                    for (s, sc) in host.algebra.basis_product(*hi, *hj).iter().enumerate() {
                        if !sc.is_zero() {
                            terms.push((vi * dw + wj, s, &c * sc));
                        }
                    }
                }
            }
            rho.push(terms);
        }
    }
    Comodule::from_terms(space, host, rho)
}

// ---- comodule algebras -----------------------------------------------------

/// An algebra with a right coaction that is an algebra map.
#[derive(Clone)]
pub struct ComoduleAlgebra {
    pub algebra: Algebra,
    pub comodule: Comodule,
}

impl ComoduleAlgebra {
    pub fn new(algebra: Algebra, comodule: Comodule) -> ComoduleAlgebra {
        assert_eq!(algebra.dim(), comodule.dim());
        ComoduleAlgebra { algebra, comodule }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn space(&self) -> &SpaceRef {
        self.algebra.space()
    }

    pub fn host(&self) -> &HopfRef {
        self.comodule.host()
    }

    /// Coaction axioms plus multiplicativity ρ(uv) = ρ(u)ρ(v), ρ(1) = 1⊗1.
    pub fn check(&self, mode: ExecMode) -> CheckReport {
        let mut report = self.algebra.check(mode);
        report.extend(self.comodule.check(mode));
        let host = self.host().clone();
        let d = self.dim();
        let space = self.space();
        let target = Space::tensor(space, host.space());
        let mult = par::find_first(mode, d * d, |t| {
            let (i, j) = (t / d, t % d);
            let lhs = self.comodule.coact_vec(self.algebra.basis_product(i, j));
            let rhs = tensor_mul(
                &self.algebra,
                &host.algebra,
                &self.comodule.coact_basis(i),
                &self.comodule.coact_basis(j),
            );
            (lhs != rhs).then(|| {
                Witness::vectors(
                    format!("({},{})", space.label(i), space.label(j)),
                    &target,
                    &lhs,
                    &rhs,
                )
            })
        });
        report.push(Check::from_witness("comodule-algebra/multiplicative", mult));
        let unit_check = {
            let lhs = self.comodule.coact_vec(self.algebra.unit());
            let rhs = vec_tensor(self.algebra.unit(), host.unit());
            Check::from_witness(
                "comodule-algebra/unit",
                (lhs != rhs).then(|| Witness::vectors("1", &target, &lhs, &rhs)),
            )
        };
        report.push(unit_check);
        report
    }
}

/// The fixed-point (coinvariant) subalgebra M of a comodule algebra, with
/// its induced product on the echelon basis.
#[derive(Clone)]
pub struct FixedSubalgebra {
    pub subspace: Subspace,
    pub algebra: Algebra,
    /// M → P on the echelon basis.
    pub inclusion: LinMap,
}

impl FixedSubalgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Coordinates of an ambient element in the echelon basis of M.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.subspace.coords(v)
    }

    /// Build from a coinvariant subspace of an ambient algebra, verifying
    /// closure under multiplication and membership of the unit.
    pub fn from_subspace(p: &Algebra, sub: Subspace) -> Result<FixedSubalgebra> {
        let dm = sub.dim();
        let mspace = Space::with_prefix("m", dm);
        let inclusion =
            LinMap::from_columns(mspace.clone(), p.space().clone(), sub.basis_vectors().to_vec());
        let unit = sub.coords(p.unit()).ok_or_else(|| Error::InvariantFailure {
            clause: "fixed subalgebra contains the unit".into(),
            witness: "1".into(),
        })?;
        let mut products = Vec::with_capacity(dm);
        for i in 0..dm {
            let mut row = Vec::with_capacity(dm);
            for j in 0..dm {
                let prod = p.mul_vec(&sub.basis_vectors()[i], &sub.basis_vectors()[j]);
                let coords = sub.coords(&prod).ok_or_else(|| Error::InvariantFailure {
                    clause: "fixed subalgebra closed under multiplication".into(),
                    witness: format!("(m{i},m{j})"),
                })?;
                row.push(coords);
            }
            products.push(row);
        }
        let algebra = Algebra::from_products(mspace, unit, products);
        Ok(FixedSubalgebra { subspace: sub, algebra, inclusion })
    }
}

/// Compute M = ker(ρ - id⊗1) and verify it is closed under multiplication
/// and contains the unit.
pub fn fixed_subalgebra(p: &ComoduleAlgebra, mode: ExecMode) -> Result<FixedSubalgebra> {
    let sub = p.comodule.invariants(mode);
    FixedSubalgebra::from_subspace(&p.algebra, sub)
}

/// The comodule with trivial coaction v ↦ v⊗1 on an arbitrary space.
pub fn inert_comodule(space: SpaceRef, host: &HopfRef) -> Comodule {
    let rho = (0..space.dim())
        .map(|i| {
            host.unit()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(h, c)| (i, h, c.clone()))
                .collect()
        })
        .collect();
    Comodule::from_terms(space, host.clone(), rho)
}

// ---- intertwiners -----------------------------------------------------------

/// Index of the hom coordinate for f: V→W with f(e_in) ∋ c e_out.
pub fn hom_index(dw: usize, out: usize, input: usize) -> usize {
    input * dw + out
}

pub fn hom_vec_to_map(v: &Comodule, w: &Comodule, x: &[Scalar]) -> LinMap {
    let (dv, dw) = (v.dim(), w.dim());
    assert_eq!(x.len(), dv * dw);
    let cols: Vec<Vec<Scalar>> = (0..dv)
        .map(|input| (0..dw).map(|out| x[hom_index(dw, out, input)].clone()).collect())
        .collect();
    LinMap::from_columns(v.space().clone(), w.space().clone(), cols)
}

pub fn map_to_hom_vec(f: &LinMap) -> Vec<Scalar> {
    let (dv, dw) = (f.source().dim(), f.target().dim());
    let mut x = zero_vec(dv * dw);
    for input in 0..dv {
        for out in 0..dw {
            x[hom_index(dw, out, input)] = f.entry(out, input).clone();
        }
    }
    x
}

/// The space of H-colinear maps {f: V→W | (f⊗id)∘ρ_V = ρ_W∘f}, as a
/// subspace of Hom(V,W) in the `hom_index` coordinates.
pub fn intertwiner_space(v: &Comodule, w: &Comodule, mode: ExecMode) -> Subspace {
    let (dv, dw, dh) = (v.dim(), w.dim(), v.host.dim());
    let hom = Space::with_prefix("f", dv * dw);
    let mut rows = Vec::with_capacity(dv * dw * dh);
    for i in 0..dv {
        for out in 0..dw {
            for h in 0..dh {
                let mut row = zero_vec(dv * dw);
                // LHS: Σ_{(j,hh,c) ∈ ρ_V(i), hh=h} c f[out][j]
                for (j, hh, c) in &v.rho[i] {
                    if *hh == h {
                        let idx = hom_index(dw, out, *j);
                        row[idx] = &row[idx] + c;
                    }
                }
                // RHS: Σ_s f[s][i] ρ_W(e_s)[(out,h)]
                for s in 0..dw {
                    for (ws, hs, c) in &w.rho[s] {
                        if *ws == out && *hs == h {
                            let idx = hom_index(dw, s, i);
                            row[idx] = &row[idx] - c;
                        }
                    }
                }
                if !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let constraints = LinMap::new(hom.clone(), Space::with_prefix("c", rows.len()), rows);
    kernel(&constraints, mode)
}

/// Check that a given map is an intertwiner V→W, with witness.
pub fn intertwines(name: &str, v: &Comodule, w: &Comodule, f: &LinMap, mode: ExecMode) -> Check {
    let (dw, dh) = (w.dim(), v.host.dim());
    let target = Space::tensor(w.space(), v.host.space());
    let witness = par::find_first(mode, v.dim(), |i| {
        let mut lhs = zero_vec(dw * dh);
        for (j, h, c) in &v.rho[i] {
            for (out, fc) in f.column(*j).into_iter().enumerate() {
                if !fc.is_zero() {
                    lhs[out * dh + h] = &lhs[out * dh + h] + &(c * &fc);
                }
            }
        }
        let rhs = w.coact_vec(&f.column(i));
        (lhs != rhs).then(|| Witness::vectors(v.space.label(i), &target, &lhs, &rhs))
    });
    Check::from_witness(name, witness)
}

/// A comodule with a distinguished coaction-fixed element 1.
#[derive(Clone)]
pub struct PointedComodule {
    pub comodule: Comodule,
    pub one: Vec<Scalar>,
}

impl PointedComodule {
    pub fn new(comodule: Comodule, one: Vec<Scalar>) -> Result<PointedComodule> {
        let lhs = comodule.coact_vec(&one);
        let rhs = vec_tensor(&one, comodule.host().unit());
        if lhs != rhs {
            return Err(Error::InvariantFailure {
                clause: "pointed comodule: ρ(1) = 1⊗1".into(),
                witness: "1".into(),
            });
        }
        Ok(PointedComodule { comodule, one })
    }
}
