//! Quantum principal bundles with universal calculus: Galois verification,
//! the translation map, the connection-form/projection correspondence,
//! strong connections and the covariant derivative.

pub mod associated;
pub mod cocycle;
pub mod gauge;

use crate::calculus::{differential, omega_n_m_p, p_dm_p, universal_forms};
use crate::comodule::{
    fixed_subalgebra, inert_comodule, intertwines, standard_comodules, tensor_comodule, Comodule,
    ComoduleAlgebra, FixedSubalgebra, HopfRef, StandardComodules,
};
use crate::echelon::{invert, kernel, quotient, QuotientSpace, Subspace};
use crate::error::{Error, Result};
use crate::hopf::Algebra;
use crate::linalg::{
    format_vector, unit_vec, vec_add_scaled, vec_is_zero, vec_scale, vec_sub, vec_tensor,
    zero_vec, LinMap, Space, SpaceRef,
};
use crate::par::{self, ExecMode};
use crate::report::{Check, CheckReport, Witness};
use crate::scalar::Scalar;

/// Left multiplication on the first tensor leg of A⊗W: u·(a⊗w) = (ua)⊗w.
pub fn left_mult_first_leg(alg: &Algebra, u: &[Scalar], xi: &[Scalar], tail: usize) -> Vec<Scalar> {
    let d = alg.dim();
    assert_eq!(xi.len(), d * tail);
    let mut out = zero_vec(d * tail);
    for (i, c) in xi.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (a, b) = (i / tail, i % tail);
        let prod = alg.mul_vec(u, &unit_vec(d, a));
        for (s, pc) in prod.iter().enumerate() {
            if !pc.is_zero() {
                out[s * tail + b] = &out[s * tail + b] + &(c * pc);
            }
        }
    }
    out
}

/// Left multiplication on the first tensor leg of A⊗A.
pub fn left_mult_leg(alg: &Algebra, u: &[Scalar], xi: &[Scalar]) -> Vec<Scalar> {
    left_mult_first_leg(alg, u, xi, alg.dim())
}

/// Right multiplication on the last tensor leg: (a⊗b)·v = a⊗(bv).
pub fn right_mult_leg(alg: &Algebra, xi: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let d = alg.dim();
    assert_eq!(xi.len(), d * d);
    let mut out = zero_vec(d * d);
    for (i, c) in xi.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (a, b) = (i / d, i % d);
        let prod = alg.mul_vec(&unit_vec(d, b), v);
        for (s, pc) in prod.iter().enumerate() {
            if !pc.is_zero() {
                out[a * d + s] = &out[a * d + s] + &(c * pc);
            }
        }
    }
    out
}

/// The Galois core shared by the quantum, braided and entwining flavours:
/// everything derivable from an algebra P, a coaction P → P⊗F into a fiber
/// with a distinguished group-like unit, and the fixed subalgebra M.
pub struct GaloisData {
    pub chi_tilde: LinMap,
    pub tensor_over_m: QuotientSpace,
    pub chi: LinMap,
    pub chi_inv: LinMap,
    /// τ = χ⁻¹(1⊗·): F → P⊗_M P.
    pub translation: LinMap,
}

/// Sparse coaction terms of a vector: [(p, f, c)].
fn coact_terms_of(rho: &[Vec<(usize, usize, Scalar)>], v: &[Scalar]) -> Vec<(usize, usize, Scalar)> {
    let mut out = Vec::new();
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (p, f, c) in &rho[i] {
            out.push((*p, *f, x * c));
        }
    }
    out
}

pub fn build_galois(
    p: &Algebra,
    rho: &[Vec<(usize, usize, Scalar)>],
    fiber_space: &SpaceRef,
    m: &FixedSubalgebra,
    mode: ExecMode,
) -> Result<GaloisData> {
    let d = p.dim();
    let df = fiber_space.dim();
    let pp = Space::tensor(p.space(), p.space());
    let pf = Space::tensor(p.space(), fiber_space);

    // χ̃(u⊗v) = u v⁽¹⁾ ⊗ v⁽²⁾
    let cols = par::map_indexed(mode, d * d, |t| {
        let (u, v) = (t / d, t % d);
        let mut col = zero_vec(d * df);
        for (vp, f, c) in &rho[v] {
            let prod = p.basis_product(u, *vp);
            for (s, pc) in prod.iter().enumerate() {
                if !pc.is_zero() {
                    col[s * df + f] = &col[s * df + f] + &(c * pc);
                }
            }
        }
        col
    });
    let chi_tilde = LinMap::from_columns(pp.clone(), pf.clone(), cols);

    // freeness: χ̃ surjective
    let im = crate::echelon::image(&chi_tilde, mode);
    if im.dim() < d * df {
        let missing = (0..d * df)
            .find(|&k| !im.contains(&unit_vec(d * df, k)))
            .map(|k| pf.label(k).to_string())
            .unwrap_or_else(|| "corank > 0".into());
        return Err(Error::NotFree { witness: missing });
    }

    // relations u m ⊗ v − u ⊗ m v
    let mut rel_span = Vec::new();
    for mk in 0..m.dim() {
        let mvec = m.inclusion.column(mk);
        for u in 0..d {
            let um = p.mul_vec(&unit_vec(d, u), &mvec);
            for v in 0..d {
                let mv = p.mul_vec(&mvec, &unit_vec(d, v));
                let mut w = zero_vec(d * d);
                for (s, c) in um.iter().enumerate() {
                    if !c.is_zero() {
                        w[s * d + v] = &w[s * d + v] + c;
                    }
                }
                for (s, c) in mv.iter().enumerate() {
                    if !c.is_zero() {
                        w[u * d + s] = &w[u * d + s] - c;
                    }
                }
                if !vec_is_zero(&w) {
                    rel_span.push(w);
                }
            }
        }
    }
    let relations = Subspace::from_spanning(pp.clone(), rel_span, mode);
    // χ̃ must vanish on the relations (it descends to P⊗_M P)
    for r in relations.basis_vectors() {
        if !vec_is_zero(&chi_tilde.apply(r)) {
            return Err(Error::InvariantFailure {
                clause: "chi-tilde descends to P⊗_M P".into(),
                witness: format_vector(&pp, r),
            });
        }
    }
    let tensor_over_m = quotient(pp, relations, mode);

    let chi = chi_tilde.compose(&tensor_over_m.section);
    let ker = kernel(&chi, mode);
    if ker.dim() > 0 {
        return Err(Error::NotGalois {
            witness: format_vector(&tensor_over_m.space, &ker.basis_vectors()[0]),
        });
    }
    if tensor_over_m.space.dim() != d * df {
        return Err(Error::NotGalois {
            witness: format!(
                "dim P⊗_M P = {} but dim P⊗F = {}",
                tensor_over_m.space.dim(),
                d * df
            ),
        });
    }
    let chi_inv = invert(&chi, mode).ok_or_else(|| Error::NotGalois {
        witness: "chi not invertible".into(),
    })?;

    let one_p = p.unit().to_vec();
    let tau_cols = (0..df)
        .map(|f| chi_inv.apply(&vec_tensor(&one_p, &unit_vec(df, f))))
        .collect();
    let translation =
        LinMap::from_columns(fiber_space.clone(), tensor_over_m.space.clone(), tau_cols);
    Ok(GaloisData { chi_tilde, tensor_over_m, chi, chi_inv, translation })
}

impl GaloisData {
    /// τ(v) lifted to P⊗P along the canonical section.
    pub fn translation_lift(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.tensor_over_m.section.apply(&self.translation.apply(v))
    }
}

/// A verified quantum principal bundle (universal calculus).
pub struct PrincipalBundle {
    pub p: ComoduleAlgebra,
    pub m: FixedSubalgebra,
    pub galois: GaloisData,
    pub std: StandardComodules,
    /// Ω¹P ⊆ P⊗P.
    pub omega1p: Subspace,
    /// P(Ω¹M)P ⊆ P⊗P.
    pub pdmp: Subspace,
    /// (Ω¹M)P ⊆ P⊗P.
    pub omega1mp: Subspace,
    /// Ω¹M embedded in P⊗P (for gauge fields A: H → Ω¹M).
    pub omega1m_emb: Subspace,
}

impl PrincipalBundle {
    pub fn host(&self) -> &HopfRef {
        self.p.host()
    }

    pub fn dim(&self) -> usize {
        self.p.dim()
    }

    /// The tensor-square comodule P_ρ⊗P_ρ (H-legs multiplied) on P⊗P.
    pub fn rho_both(&self) -> Comodule {
        tensor_comodule(&self.p.comodule, &self.p.comodule)
    }

    /// τ̂(h) ∈ P⊗P for a fiber vector, along the canonical section.
    pub fn tau_hat(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.galois.translation_lift(h)
    }
}

/// Build and fully verify a principal bundle from a comodule algebra.
pub fn build_bundle(p: ComoduleAlgebra, mode: ExecMode) -> Result<PrincipalBundle> {
    let precheck = p.check(mode);
    if let Some(fail) = precheck.first_failure() {
        return Err(Error::AxiomPrecheck(format!(
            "{} (witness {})",
            fail.name,
            fail.witness.as_ref().map(|w| w.element.clone()).unwrap_or_default()
        )));
    }
    let m = fixed_subalgebra(&p, mode)?;
    let host = p.host().clone();
    let rho: Vec<Vec<(usize, usize, Scalar)>> =
        (0..p.dim()).map(|i| p.comodule.rho_terms(i).to_vec()).collect();
    let galois = build_galois(&p.algebra, &rho, host.space(), &m, mode)?;
    let std = standard_comodules(&host);
    let omega1p = universal_forms(&p.algebra, 1, mode);
    let pdmp = p_dm_p(&p.algebra, &m, mode);
    let omega1mp = omega_n_m_p(&p.algebra, &m, 1, mode);
    let omega1m_emb = {
        let m_forms = universal_forms(&m.algebra, 1, mode);
        let lifted = m_forms
            .basis_vectors()
            .iter()
            .map(|b| crate::calculus::embed_form(&m.inclusion, 1, b))
            .collect();
        Subspace::from_spanning(Space::tensor(p.space(), p.space()), lifted, mode)
    };
    Ok(PrincipalBundle { p, m, galois, std, omega1p, pdmp, omega1mp, omega1m_emb })
}

/// The kernel condition ker χ̃ = P(Ω¹M)P, exact.
pub fn check_kernel_condition(b: &PrincipalBundle, mode: ExecMode) -> Check {
    let ker = kernel(&b.galois.chi_tilde, mode);
    if ker == b.pdmp {
        Check::pass("bundle/kernel-chi-tilde-horizontal")
    } else {
        let w = b
            .pdmp
            .first_escapee(&ker)
            .or_else(|| ker.first_escapee(&b.pdmp))
            .unwrap_or_else(|| "dimension mismatch".into());
        Check::fail(
            "bundle/kernel-chi-tilde-horizontal",
            Witness::new("ker chi-tilde vs P(dM)P", w, ""),
        )
    }
}

/// The comodule structure a quotient inherits from a comodule on its
/// ambient space (errors if the coaction does not descend).
pub fn induced_quotient_comodule(
    q: &QuotientSpace,
    ambient: &Comodule,
    mode: ExecMode,
) -> Result<Comodule> {
    let dh = ambient.host().dim();
    let dq = q.space.dim();
    let proj = &q.projection;
    // well-definedness: (proj⊗id)∘ρ kills the relations
    for r in q.relations.basis_vectors() {
        let img = ambient.coact_vec(r);
        // apply proj⊗id_H
        let mut out = zero_vec(dq * dh);
        for (idx, c) in img.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, h) = (idx / dh, idx % dh);
            for (s, pc) in proj.column(a).iter().enumerate() {
                if !pc.is_zero() {
                    out[s * dh + h] = &out[s * dh + h] + &(c * pc);
                }
            }
        }
        if !vec_is_zero(&out) {
            return Err(Error::InvariantFailure {
                clause: "coaction descends to the quotient".into(),
                witness: format_vector(&q.ambient, r),
            });
        }
    }
    let mut rho = Vec::with_capacity(dq);
    for i in 0..dq {
        let lifted = q.section.column(i);
        let img = ambient.coact_vec(&lifted);
        let mut terms = Vec::new();
        for (idx, c) in img.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, h) = (idx / dh, idx % dh);
            for (s, pc) in proj.column(a).iter().enumerate() {
                if !pc.is_zero() {
                    terms.push((s, h, c * pc));
                }
            }
        }
        rho.push(terms);
    }
    let _ = mode;
    Ok(Comodule::from_terms(q.space.clone(), ambient.host().clone(), rho))
}

/// The three intertwining statements for χ̃ and, via inversion, for χ⁻¹.
pub fn check_chi_covariance(b: &PrincipalBundle, mode: ExecMode) -> CheckReport {
    let mut report = CheckReport::new();
    let host = b.host();
    let p_rho = &b.p.comodule;
    let p_inert = inert_comodule(b.p.space().clone(), host);
    let h_r_t = tensor_comodule(&p_inert, &b.std.h_r);
    let h_l_t = tensor_comodule(p_rho, &b.std.h_l);
    let h_ad_t = tensor_comodule(p_rho, &b.std.h_ad);
    let src_right = tensor_comodule(&p_inert, p_rho);
    let src_left = tensor_comodule(p_rho, &p_inert);
    let src_both = tensor_comodule(p_rho, p_rho);

    report.push(intertwines("covariance/chi-tilde-right-regular", &src_right, &h_r_t, &b.galois.chi_tilde, mode));
    report.push(intertwines("covariance/chi-tilde-left-regular", &src_left, &h_l_t, &b.galois.chi_tilde, mode));
    report.push(intertwines("covariance/chi-tilde-adjoint", &src_both, &h_ad_t, &b.galois.chi_tilde, mode));

    // χ⁻¹ versions on the quotient
    let q = &b.galois.tensor_over_m;
    for (name, src_amb, tgt) in [
        ("covariance/chi-inv-right-regular", &src_right, &h_r_t),
        ("covariance/chi-inv-left-regular", &src_left, &h_l_t),
        ("covariance/chi-inv-adjoint", &src_both, &h_ad_t),
    ] {
        match induced_quotient_comodule(q, src_amb, mode) {
            Ok(q_com) => {
                report.push(intertwines(name, tgt, &q_com, &b.galois.chi_inv, mode));
            }
            Err(e) => report.push(Check::fail(
                name,
                Witness::new("quotient coaction", e.to_string(), ""),
            )),
        }
    }
    report
}

/// Galois exactness: χ∘χ⁻¹ = id and χ⁻¹∘χ = id.
pub fn check_galois_roundtrip(b: &PrincipalBundle) -> CheckReport {
    let mut report = CheckReport::new();
    let g = &b.galois;
    let idq = LinMap::identity(g.tensor_over_m.space.clone());
    let idpf = LinMap::identity(g.chi.target().clone());
    report.push(if g.chi.compose(&g.chi_inv) == idpf {
        Check::pass("bundle/chi-right-inverse")
    } else {
        Check::fail("bundle/chi-right-inverse", Witness::new("chi∘chi⁻¹", "≠ id", "id"))
    });
    report.push(if g.chi_inv.compose(&g.chi) == idq {
        Check::pass("bundle/chi-left-inverse")
    } else {
        Check::fail("bundle/chi-left-inverse", Witness::new("chi⁻¹∘chi", "≠ id", "id"))
    });
    report
}

// ---- connections -------------------------------------------------------------

/// A connection form ω: H_Ad → Ω¹P, verified at construction.
#[derive(Clone)]
pub struct ConnectionForm {
    pub omega: LinMap,
}

/// A covariant idempotent Π on Ω¹P with kernel P(Ω¹M)P, stored on the
/// ambient P⊗P (its action is only contracted on Ω¹P).
#[derive(Clone)]
pub struct ConnectionProjection {
    pub pi: LinMap,
}

impl PrincipalBundle {
    /// Verify the connection-form conditions for a candidate ω.
    pub fn connection_checks(&self, omega: &LinMap, mode: ExecMode) -> CheckReport {
        let mut report = CheckReport::new();
        let host = self.host();
        let (d, dh) = (self.dim(), host.dim());
        let pp = Space::tensor(self.p.space(), self.p.space());

        let values = par::find_first(mode, dh, |h| {
            let col = omega.column(h);
            (!self.omega1p.contains(&col)).then(|| {
                Witness::new(host.space().label(h), format_vector(&pp, &col), "∈ Ω¹P")
            })
        });
        report.push(Check::from_witness("connection/values-in-forms", values));

        let unit_val = omega.apply(host.unit());
        report.push(Check::from_witness(
            "connection/vanishes-on-unit",
            (!vec_is_zero(&unit_val))
                .then(|| Witness::vectors("1", &pp, &unit_val, &zero_vec(d * d))),
        ));

        // χ̃∘ω(h) = 1⊗h − ε(h) 1⊗1
        let pf = self.galois.chi_tilde.target().clone();
        let one_p = self.p.algebra.unit().to_vec();
        let splitting = par::find_first(mode, dh, |h| {
            let lhs = self.galois.chi_tilde.apply(&omega.column(h));
            let mut rhs = vec_tensor(&one_p, &unit_vec(dh, h));
            let eps = host.coalgebra.counit_basis(h);
            if !eps.is_zero() {
                let ones = vec_tensor(&one_p, host.unit());
                rhs = vec_sub(&rhs, &vec_scale(eps, &ones));
            }
            (lhs != rhs).then(|| Witness::vectors(host.space().label(h), &pf, &lhs, &rhs))
        });
        report.push(Check::from_witness("connection/splits-chi-tilde", splitting));

        report.push(intertwines(
            "connection/ad-covariant",
            &self.std.h_ad,
            &self.rho_both(),
            omega,
            mode,
        ));
        report
    }

    /// Construct a verified connection form.
    pub fn connection_form(&self, omega: LinMap, mode: ExecMode) -> Result<ConnectionForm> {
        let report = self.connection_checks(&omega, mode);
        match report.first_failure() {
            None => Ok(ConnectionForm { omega }),
            Some(fail) => Err(Error::InvariantFailure {
                clause: fail.name.clone(),
                witness: fail
                    .witness
                    .as_ref()
                    .map(|w| w.element.clone())
                    .unwrap_or_default(),
            }),
        }
    }

    /// Π = (·⊗id)∘(id⊗ω)∘χ̃ on the ambient P⊗P.
    pub fn projection_matrix(&self, omega: &LinMap, mode: ExecMode) -> LinMap {
        let d = self.dim();
        let pp = Space::tensor(self.p.space(), self.p.space());
        let cols = par::map_indexed(mode, d * d, |t| {
            let (u, v) = (t / d, t % d);
            let mut out = zero_vec(d * d);
            for (vp, h, c) in self.p.comodule.rho_terms(v) {
                let uv = self.p.algebra.basis_product(u, *vp).to_vec();
                let contrib = left_mult_leg(&self.p.algebra, &uv, &omega.column(*h));
                vec_add_scaled(&mut out, c, &contrib);
            }
            out
        });
        LinMap::from_columns(pp.clone(), pp, cols)
    }

    /// Verify the projection conditions for a candidate Π (idempotent
    /// covariant left P-module map on Ω¹P with kernel P(Ω¹M)P, χ̃∘Π = χ̃).
    pub fn projection_checks(&self, pi: &LinMap, mode: ExecMode) -> CheckReport {
        let mut report = CheckReport::new();
        let d = self.dim();
        let pp = Space::tensor(self.p.space(), self.p.space());
        let forms = &self.omega1p;
        let nf = forms.dim();

        let preserves = par::find_first(mode, nf, |k| {
            let img = pi.apply(&forms.basis_vectors()[k]);
            (!forms.contains(&img))
                .then(|| Witness::new(format!("form {k}"), format_vector(&pp, &img), "∈ Ω¹P"))
        });
        report.push(Check::from_witness("projection/preserves-forms", preserves));

        let idem = par::find_first(mode, nf, |k| {
            let once = pi.apply(&forms.basis_vectors()[k]);
            let twice = pi.apply(&once);
            (once != twice).then(|| Witness::vectors(format!("form {k}"), &pp, &twice, &once))
        });
        report.push(Check::from_witness("projection/idempotent", idem));

        let module = par::find_first(mode, d * nf, |t| {
            let (u, k) = (t / nf, t % nf);
            let xi = &forms.basis_vectors()[k];
            let u_vec = unit_vec(d, u);
            let lhs = pi.apply(&left_mult_leg(&self.p.algebra, &u_vec, xi));
            let rhs = left_mult_leg(&self.p.algebra, &u_vec, &pi.apply(xi));
            (lhs != rhs).then(|| {
                Witness::vectors(
                    format!("({}, form {k})", self.p.space().label(u)),
                    &pp,
                    &lhs,
                    &rhs,
                )
            })
        });
        report.push(Check::from_witness("projection/left-module-map", module));

        // kernel of Π restricted to Ω¹P equals P(Ω¹M)P
        let restricted_cols: Vec<Vec<Scalar>> =
            forms.basis_vectors().iter().map(|v| pi.apply(v)).collect();
        let fspace = Space::with_prefix("w", nf);
        let restricted = LinMap::from_columns(fspace, pp.clone(), restricted_cols);
        let ker_coords = kernel(&restricted, mode);
        let ker_ambient: Vec<Vec<Scalar>> = ker_coords
            .basis_vectors()
            .iter()
            .map(|coef| {
                let mut v = zero_vec(d * d);
                for (k, c) in coef.iter().enumerate() {
                    vec_add_scaled(&mut v, c, &forms.basis_vectors()[k]);
                }
                v
            })
            .collect();
        let ker_sub = Subspace::from_spanning(pp.clone(), ker_ambient, mode);
        report.push(if ker_sub == self.pdmp {
            Check::pass("projection/kernel-is-horizontal")
        } else {
            let w = ker_sub
                .first_escapee(&self.pdmp)
                .or_else(|| self.pdmp.first_escapee(&ker_sub))
                .unwrap_or_else(|| "dimension mismatch".into());
            Check::fail("projection/kernel-is-horizontal", Witness::new("ker Π vs P(dM)P", w, ""))
        });

        // covariance: ρ∘Π = (Π⊗id)∘ρ on Ω¹P
        let rho2 = self.rho_both();
        let dh = self.host().dim();
        let cov = par::find_first(mode, nf, |k| {
            let xi = &forms.basis_vectors()[k];
            let lhs = rho2.coact_vec(&pi.apply(xi));
            let img = rho2.coact_vec(xi);
            let mut rhs = zero_vec(d * d * dh);
            for (idx, c) in img.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (a, h) = (idx / dh, idx % dh);
                for (s, pc) in pi.column(a).iter().enumerate() {
                    if !pc.is_zero() {
                        rhs[s * dh + h] = &rhs[s * dh + h] + &(c * pc);
                    }
                }
            }
            (lhs != rhs).then(|| {
                Witness::new(format!("form {k}"), "ρ∘Π".to_string(), "(Π⊗id)∘ρ".to_string())
            })
        });
        report.push(Check::from_witness("projection/covariant", cov));

        // χ̃∘Π = χ̃ on Ω¹P
        let chi_pi = par::find_first(mode, nf, |k| {
            let xi = &forms.basis_vectors()[k];
            let lhs = self.galois.chi_tilde.apply(&pi.apply(xi));
            let rhs = self.galois.chi_tilde.apply(xi);
            (lhs != rhs).then(|| {
                Witness::vectors(format!("form {k}"), self.galois.chi_tilde.target(), &lhs, &rhs)
            })
        });
        report.push(Check::from_witness("projection/chi-tilde-invariant", chi_pi));
        report
    }

    /// Connection form → covariant projection, with all projection
    /// invariants verified before returning.
    pub fn projection_from_connection(
        &self,
        omega: &ConnectionForm,
        mode: ExecMode,
    ) -> Result<ConnectionProjection> {
        let pi = self.projection_matrix(&omega.omega, mode);
        let report = self.projection_checks(&pi, mode);
        match report.first_failure() {
            None => Ok(ConnectionProjection { pi }),
            Some(fail) => Err(Error::InvariantFailure {
                clause: fail.name.clone(),
                witness: fail
                    .witness
                    .as_ref()
                    .map(|w| w.element.clone())
                    .unwrap_or_default(),
            }),
        }
    }

    /// Covariant projection → connection form: ω(h) = Π(τ̂(h − ε(h)1)).
    ///
    /// The lift along the quotient section is legitimate because Π kills the
    /// relation subspace P(dM)P; that is verified as a precondition.
    pub fn connection_from_projection(
        &self,
        pi: &ConnectionProjection,
        mode: ExecMode,
    ) -> Result<ConnectionForm> {
        for r in self.galois.tensor_over_m.relations.basis_vectors() {
            if !vec_is_zero(&pi.pi.apply(r)) {
                return Err(Error::InvariantFailure {
                    clause: "projection kills the relation subspace".into(),
                    witness: format_vector(pi.pi.source(), r),
                });
            }
        }
        let host = self.host();
        let dh = host.dim();
        let tau_one = self.tau_hat(host.unit());
        let cols = (0..dh)
            .map(|h| {
                let mut arg = self.tau_hat(&unit_vec(dh, h));
                let eps = host.coalgebra.counit_basis(h);
                if !eps.is_zero() {
                    arg = vec_sub(&arg, &vec_scale(eps, &tau_one));
                }
                pi.pi.apply(&arg)
            })
            .collect();
        let omega = LinMap::from_columns(
            host.space().clone(),
            pi.pi.target().clone(),
            cols,
        );
        self.connection_form(omega, mode)
    }

    /// Strong-connection test: the Π-form membership (id−Π)du ∈ (Ω¹M)P for
    /// all u, cross-checked against the coaction form of the condition. The
    /// two verdicts must agree; disagreement is an implementation bug.
    pub fn is_strong(&self, omega: &ConnectionForm, mode: ExecMode) -> Result<(bool, CheckReport)> {
        let mut report = CheckReport::new();
        let d = self.dim();
        let dh = self.host().dim();
        let pi = self.projection_matrix(&omega.omega, mode);
        let pp = Space::tensor(self.p.space(), self.p.space());

        // route 1: (id−Π) du ∈ (Ω¹M)P
        let route1 = par::find_first(mode, d, |u| {
            let du = differential(&self.p.algebra, 0, &unit_vec(d, u));
            let horiz = vec_sub(&du, &pi.apply(&du));
            (!self.omega1mp.contains(&horiz)).then(|| {
                Witness::new(
                    self.p.space().label(u),
                    format_vector(&pp, &horiz),
                    "∈ (Ω¹M)P",
                )
            })
        });
        let verdict1 = route1.is_none();
        report.push(match route1 {
            None => Check::pass("strong/horizontal-differentials"),
            Some(w) => Check::fail("strong/horizontal-differentials", w),
        });

        // route 2: ρ(u⁽¹⁾ω(u⁽²⁾)) = u⊗1⊗1 − u⁽¹⁾⊗1⊗u⁽²⁾ + u⁽¹⁾ω(u⁽²⁾)⊗1
        let one_p = self.p.algebra.unit().to_vec();
        let route2 = par::find_first(mode, d, |u| {
            let mut xi = zero_vec(d * d);
            for (up, h, c) in self.p.comodule.rho_terms(u) {
                let contrib =
                    left_mult_leg(&self.p.algebra, &unit_vec(d, *up), &omega.omega.column(*h));
                vec_add_scaled(&mut xi, c, &contrib);
            }
            // LHS: coaction on the first leg, H part far right
            let mut lhs = zero_vec(d * d * dh);
            for (idx, c) in xi.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (a, b) = (idx / d, idx % d);
                for (ap, h, cc) in self.p.comodule.rho_terms(a) {
                    lhs[(ap * d + b) * dh + h] = &lhs[(ap * d + b) * dh + h] + &(c * cc);
                }
            }
            let mut rhs = zero_vec(d * d * dh);
            // u⊗1⊗1
            for (s, c) in one_p.iter().enumerate() {
                if !c.is_zero() {
                    for (t, hc) in self.host().unit().iter().enumerate() {
                        if !hc.is_zero() {
                            rhs[(u * d + s) * dh + t] = &rhs[(u * d + s) * dh + t] + &(c * hc);
                        }
                    }
                }
            }
            // − u⁽¹⁾⊗1⊗u⁽²⁾
            for (up, h, c) in self.p.comodule.rho_terms(u) {
                for (s, oc) in one_p.iter().enumerate() {
                    if !oc.is_zero() {
                        rhs[(up * d + s) * dh + h] = &rhs[(up * d + s) * dh + h] - &(c * oc);
                    }
                }
            }
            // + ξ⊗1
            for (idx, c) in xi.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (t, hc) in self.host().unit().iter().enumerate() {
                    if !hc.is_zero() {
                        rhs[idx * dh + t] = &rhs[idx * dh + t] + &(c * hc);
                    }
                }
            }
            (lhs != rhs).then(|| Witness::new(self.p.space().label(u), "ρ̃(u⁽¹⁾ω(u⁽²⁾))", "strong form"))
        });
        let verdict2 = route2.is_none();
        report.push(match route2 {
            None => Check::pass("strong/coaction-form"),
            Some(w) => Check::fail("strong/coaction-form", w),
        });

        if verdict1 != verdict2 {
            return Err(Error::InternalInconsistency(format!(
                "strongness verdicts disagree: horizontal-differentials={verdict1}, coaction-form={verdict2}"
            )));
        }
        Ok((verdict1, report))
    }

    /// Covariant derivative DΣ = (id−Π)∘d∘Σ of a (strongly) tensorial
    /// n-form Σ: V → Ω^n P; id−Π acts on the last two tensor legs.
    pub fn covariant_derivative(
        &self,
        pi: &ConnectionProjection,
        degree: usize,
        sigma: &LinMap,
    ) -> LinMap {
        let d = self.dim();
        let dv = sigma.source().dim();
        let out_space = crate::calculus::form_ambient(&self.p.algebra, degree + 1);
        let cols = (0..dv)
            .map(|v| {
                let dsig = differential(&self.p.algebra, degree, &sigma.column(v));
                apply_on_last_two_legs_complement(&pi.pi, d, degree + 1, &dsig)
            })
            .collect();
        LinMap::from_columns(sigma.source().clone(), out_space, cols)
    }
}

/// (id − Π) applied to the last two legs of a vector in P^{⊗(n+1)}.
fn apply_on_last_two_legs_complement(
    pi: &LinMap,
    d: usize,
    degree: usize,
    xi: &[Scalar],
) -> Vec<Scalar> {
    assert_eq!(xi.len(), d.pow(degree as u32 + 1));
    let blocks = xi.len() / (d * d);
    let mut out = zero_vec(xi.len());
    for blk in 0..blocks {
        let tail = &xi[blk * d * d..(blk + 1) * d * d];
        if vec_is_zero(tail) {
            continue;
        }
        let pit = pi.apply(tail);
        for (i, c) in tail.iter().enumerate() {
            let v = c - &pit[i];
            if !v.is_zero() {
                out[blk * d * d + i] = v;
            }
        }
    }
    out
}

/// Strongly tensorial check for an n-form map Σ: V → P^{⊗(n+1)}: values in
/// (Ω^n M)P and V-coaction intertwining.
pub fn strongly_tensorial_checks(
    b: &PrincipalBundle,
    v: &Comodule,
    degree: usize,
    sigma: &LinMap,
    mode: ExecMode,
) -> CheckReport {
    let mut report = CheckReport::new();
    let horiz = if degree == 1 {
        b.omega1mp.clone()
    } else {
        omega_n_m_p(&b.p.algebra, &b.m, degree, mode)
    };
    let w = par::find_first(mode, v.dim(), |k| {
        let val = sigma.column(k);
        (!horiz.contains(&val)).then(|| {
            Witness::new(v.space().label(k), "Σ(v)", format!("∈ (Ω^{degree}M)P"))
        })
    });
    report.push(Check::from_witness("tensorial/values-horizontal", w));
    // intertwiner into the tensor-power coaction of P^{⊗(n+1)}
    let mut target = b.p.comodule.clone();
    for _ in 0..degree {
        target = tensor_comodule(&target, &b.p.comodule);
    }
    report.push(intertwines("tensorial/intertwiner", v, &target, sigma, mode));
    report
}
