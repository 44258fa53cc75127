//! Associated fiber bundles E = (P⊗V)^H for a pointed comodule V, the
//! section ↔ pseudotensorial-0-form correspondence, and the associated
//! trivialisation Φ_E on trivial bundles.

use super::gauge::Trivialisation;
use super::{left_mult_first_leg, PrincipalBundle};
use crate::comodule::{intertwines, tensor_comodule, PointedComodule};
use crate::echelon::{invert, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{
    format_vector, unit_vec, vec_add_scaled, vec_tensor, zero_vec, LinMap, Space, SpaceRef,
};
use crate::par::ExecMode;
use crate::report::{Check, CheckReport, Witness};
use crate::scalar::Scalar;

/// An associated bundle: the invariant subspace E ⊆ P⊗V with its left
/// M-module structure.
pub struct AssociatedBundle {
    pub fiber: PointedComodule,
    /// E as a subspace of P⊗V.
    pub e: Subspace,
    /// Abstract basis labels for E (coordinates = subspace coordinates).
    pub e_space: SpaceRef,
}

impl AssociatedBundle {
    pub fn dim(&self) -> usize {
        self.e.dim()
    }

    /// Coordinates in E of 1_P ⊗ 1_V.
    pub fn unit_coords(&self, b: &PrincipalBundle) -> Option<Vec<Scalar>> {
        self.e.coords(&vec_tensor(b.p.algebra.unit(), &self.fiber.one))
    }
}

impl PrincipalBundle {
    /// E = (P⊗V)^H with M⊗1 ⊆ E and closure under left multiplication by M
    /// verified.
    pub fn associated_bundle(
        &self,
        fiber: PointedComodule,
        mode: ExecMode,
    ) -> Result<AssociatedBundle> {
        let t = tensor_comodule(&self.p.comodule, &fiber.comodule);
        let e = t.invariants(mode);
        let dv = fiber.comodule.dim();
        for mk in 0..self.m.dim() {
            let mv = self.m.inclusion.column(mk);
            let emb = vec_tensor(&mv, &fiber.one);
            if !e.contains(&emb) {
                return Err(Error::InvariantFailure {
                    clause: "M⊗1 ⊆ E".into(),
                    witness: format!("m{mk}"),
                });
            }
            for (k, base) in e.basis_vectors().iter().enumerate() {
                let acted = left_mult_first_leg(&self.p.algebra, &mv, base, dv);
                if !e.contains(&acted) {
                    return Err(Error::InvariantFailure {
                        clause: "E closed under left multiplication by M".into(),
                        witness: format!("(m{mk}, E basis {k})"),
                    });
                }
            }
        }
        let e_space = Space::with_prefix("E", e.dim());
        Ok(AssociatedBundle { fiber, e, e_space })
    }

    /// Cross section s: E → M from a pseudotensorial 0-form Σ: V → P via
    /// s(u⊗v) = uΣ(v). Values are verified to land in M, s(1) = 1, and s is
    /// a left M-module map.
    pub fn section_from_form(
        &self,
        eb: &AssociatedBundle,
        sigma: &LinMap,
        mode: ExecMode,
    ) -> Result<LinMap> {
        let d = self.dim();
        let dv = eb.fiber.comodule.dim();
        assert_eq!(sigma.source().dim(), dv);
        assert_eq!(sigma.target().dim(), d);
        let check = intertwines(
            "section/form-is-intertwiner",
            &eb.fiber.comodule,
            &self.p.comodule,
            sigma,
            mode,
        );
        if !check.passed() {
            return Err(Error::InvariantFailure {
                clause: check.name,
                witness: check.witness.map(|w| w.element).unwrap_or_default(),
            });
        }
        let mut cols = Vec::with_capacity(eb.dim());
        for (k, base) in eb.e.basis_vectors().iter().enumerate() {
            let mut val = zero_vec(d);
            for (idx, c) in base.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (u, v) = (idx / dv, idx % dv);
                let prod = self.p.algebra.mul_vec(&unit_vec(d, u), &sigma.column(v));
                vec_add_scaled(&mut val, c, &prod);
            }
            let coords = self.m.coords(&val).ok_or_else(|| Error::InvariantFailure {
                clause: "section valued in M".into(),
                witness: format!("E basis {k}"),
            })?;
            cols.push(coords);
        }
        let s = LinMap::from_columns(eb.e_space.clone(), self.m.algebra.space().clone(), cols);
        // s(1_E) = 1_M
        let one_e = eb.unit_coords(self).ok_or_else(|| Error::InvariantFailure {
            clause: "1⊗1 ∈ E".into(),
            witness: "1".into(),
        })?;
        if s.apply(&one_e) != self.m.algebra.unit() {
            return Err(Error::InvariantFailure {
                clause: "section preserves the unit".into(),
                witness: "1".into(),
            });
        }
        // M-module map: s(m·e) = m s(e)
        for mk in 0..self.m.dim() {
            let mv = self.m.inclusion.column(mk);
            for (k, base) in eb.e.basis_vectors().iter().enumerate() {
                let acted = left_mult_first_leg(&self.p.algebra, &mv, base, dv);
                let coords = eb.e.coords(&acted).expect("closure already verified");
                let lhs = s.apply(&coords);
                let rhs = self
                    .m
                    .algebra
                    .mul_vec(&unit_vec(self.m.dim(), mk), &s.apply(&unit_vec(eb.dim(), k)));
                if lhs != rhs {
                    return Err(Error::InvariantFailure {
                        clause: "section is a left M-module map".into(),
                        witness: format!("(m{mk}, E basis {k})"),
                    });
                }
            }
        }
        Ok(s)
    }

    /// Pseudotensorial 0-form Σ: V → P from a cross section s: E → M:
    /// Σ(v) = χ⁻⁽¹⁾(1⊗S⁻¹v⁽²⁾) · s(χ⁻⁽²⁾(1⊗S⁻¹v⁽²⁾) ⊗ v⁽¹⁾).
    ///
    /// The combination T(v) = τ̂(S⁻¹v⁽²⁾)⊗v⁽¹⁾ is verified to lie in P⊗E so
    /// that s can be applied to the second factor.
    pub fn form_from_section(
        &self,
        eb: &AssociatedBundle,
        s: &LinMap,
        mode: ExecMode,
    ) -> Result<LinMap> {
        let d = self.dim();
        let dv = eb.fiber.comodule.dim();
        let s_inv = self.host().antipode_inverse(mode)?;
        let mut cols = Vec::with_capacity(dv);
        for v in 0..dv {
            // T(v) ∈ P⊗(P⊗V), sliced along the first leg
            let mut slices: Vec<Vec<Scalar>> = vec![zero_vec(d * dv); d];
            for (vp, h, c) in eb.fiber.comodule.rho_terms(v) {
                let w = s_inv.column(*h);
                let tau = self.tau_hat(&w);
                for (idx, tc) in tau.iter().enumerate() {
                    if tc.is_zero() {
                        continue;
                    }
                    let (i, j) = (idx / d, idx % d);
                    slices[i][j * dv + vp] = &slices[i][j * dv + vp] + &(c * tc);
                }
            }
            let mut val = zero_vec(d);
            for (i, slice) in slices.iter().enumerate() {
                if crate::linalg::vec_is_zero(slice) {
                    continue;
                }
                let coords = eb.e.coords(slice).ok_or_else(|| Error::InvariantFailure {
                    clause: "translation combination lands in P⊗E".into(),
                    witness: eb.fiber.comodule.space().label(v).to_string(),
                })?;
                let m_val = self.m.inclusion.apply(&s.apply(&coords));
                let prod = self.p.algebra.mul_vec(&unit_vec(d, i), &m_val);
                vec_add_scaled(&mut val, &Scalar::one(), &prod);
            }
            cols.push(val);
        }
        Ok(LinMap::from_columns(
            eb.fiber.comodule.space().clone(),
            self.p.space().clone(),
            cols,
        ))
    }

    /// Φ_E(v) = Φ(S⁻¹v⁽²⁾) ⊗ v⁽¹⁾ and the induced map M⊗V → E; on a trivial
    /// bundle the induced map is an isomorphism.
    pub fn associated_trivialisation(
        &self,
        eb: &AssociatedBundle,
        phi: &Trivialisation,
        mode: ExecMode,
    ) -> Result<LinMap> {
        let d = self.dim();
        let dv = eb.fiber.comodule.dim();
        let s_inv = self.host().antipode_inverse(mode)?;
        let mut phi_e_cols = Vec::with_capacity(dv);
        for v in 0..dv {
            let mut val = zero_vec(d * dv);
            for (vp, h, c) in eb.fiber.comodule.rho_terms(v) {
                let pv = phi.phi.apply(&s_inv.column(*h));
                for (i, pc) in pv.iter().enumerate() {
                    if !pc.is_zero() {
                        val[i * dv + vp] = &val[i * dv + vp] + &(c * pc);
                    }
                }
            }
            if !eb.e.contains(&val) {
                return Err(Error::InvariantFailure {
                    clause: "Φ_E lands in E".into(),
                    witness: eb.fiber.comodule.space().label(v).to_string(),
                });
            }
            phi_e_cols.push(val);
        }
        // M⊗V → E, m⊗v ↦ m·Φ_E(v), in E coordinates
        let dm = self.m.dim();
        let mv_space = Space::tensor(self.m.algebra.space(), eb.fiber.comodule.space());
        let mut cols = Vec::with_capacity(dm * dv);
        for mk in 0..dm {
            let m_amb = self.m.inclusion.column(mk);
            for v in 0..dv {
                let acted = left_mult_first_leg(&self.p.algebra, &m_amb, &phi_e_cols[v], dv);
                let coords = eb.e.coords(&acted).ok_or_else(|| Error::InvariantFailure {
                    clause: "m·Φ_E(v) ∈ E".into(),
                    witness: format!("(m{mk},{})", eb.fiber.comodule.space().label(v)),
                })?;
                cols.push(coords);
            }
        }
        Ok(LinMap::from_columns(mv_space, eb.e_space.clone(), cols))
    }
}

/// Roundtrip checks of the section correspondence on a given associated
/// bundle and form.
pub fn check_section_correspondence(
    b: &PrincipalBundle,
    eb: &AssociatedBundle,
    sigma: &LinMap,
    mode: ExecMode,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let s = b.section_from_form(eb, sigma, mode)?;
    let sigma_back = b.form_from_section(eb, &s, mode)?;
    report.push(if &sigma_back == sigma {
        Check::pass("section/roundtrip-form")
    } else {
        Check::fail(
            "section/roundtrip-form",
            Witness::new(
                "Σ → s → Σ",
                format_vector(sigma_back.target(), &sigma_back.column(0)),
                format_vector(sigma.target(), &sigma.column(0)),
            ),
        )
    });
    let s_back = b.section_from_form(eb, &sigma_back, mode)?;
    report.push(if s_back == s {
        Check::pass("section/roundtrip-section")
    } else {
        Check::fail("section/roundtrip-section", Witness::new("s → Σ → s", "≠", "="))
    });
    Ok(report)
}

/// Bijectivity of the associated trivialisation M⊗V ≅ E.
pub fn check_associated_trivialisation(
    b: &PrincipalBundle,
    eb: &AssociatedBundle,
    phi: &Trivialisation,
    mode: ExecMode,
) -> Result<Check> {
    let map = b.associated_trivialisation(eb, phi, mode)?;
    if map.source().dim() != map.target().dim() {
        return Ok(Check::fail(
            "associated/trivialisation-bijective",
            Witness::new(
                "Φ_E",
                format!("dim M⊗V = {}", map.source().dim()),
                format!("dim E = {}", map.target().dim()),
            ),
        ));
    }
    Ok(match invert(&map, mode) {
        Some(_) => Check::pass("associated/trivialisation-bijective"),
        None => Check::fail(
            "associated/trivialisation-bijective",
            Witness::new("Φ_E", "singular", "bijective"),
        ),
    })
}
