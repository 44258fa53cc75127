//! Structure-constant algebras, coalgebras, Hopf algebras, the convolution
//! algebra, and dual-quasitriangular structures.
//!
//! All axioms are multilinear, so every checker sweeps basis tuples
//! exhaustively and reports the first failing tuple as a witness.

use crate::echelon::{invert, solve};
use crate::error::{Error, Result};
use crate::linalg::{
    unit_vec, vec_add_scaled, vec_scale, vec_tensor, zero_vec, LinMap, Space,
    SpaceRef,
};
use crate::par::{self, ExecMode};
use crate::report::{Check, CheckReport, Witness};
use crate::scalar::Scalar;

/// A finite-dimensional unital associative algebra with structure constants.
#[derive(Clone)]
pub struct Algebra {
    space: SpaceRef,
    mult: LinMap,
    unit: Vec<Scalar>,
    /// prod[i][j] = e_i * e_j expanded on the basis.
    prod: Vec<Vec<Vec<Scalar>>>,
}

impl Algebra {
    pub fn new(space: SpaceRef, mult: LinMap, unit: Vec<Scalar>) -> Algebra {
        let d = space.dim();
        assert_eq!(mult.source().dim(), d * d, "mult must be defined on A⊗A");
        assert_eq!(mult.target().dim(), d);
        assert_eq!(unit.len(), d);
        let prod = (0..d)
            .map(|i| (0..d).map(|j| mult.column(i * d + j)).collect())
            .collect();
        Algebra { space, mult, unit, prod }
    }

    /// Build from an explicit product table `products[i][j] = e_i e_j`.
    pub fn from_products(
        space: SpaceRef,
        unit: Vec<Scalar>,
        products: Vec<Vec<Vec<Scalar>>>,
    ) -> Algebra {
        let d = space.dim();
        let sq = Space::tensor(&space, &space);
        let mut cols = Vec::with_capacity(d * d);
        for row in &products {
            for col in row {
                assert_eq!(col.len(), d);
                cols.push(col.clone());
            }
        }
        let mult = LinMap::from_columns(sq, space.clone(), cols);
        Algebra { space, mult, unit, prod: products }
    }

    pub fn ground_field() -> Algebra {
        let space = Space::field();
        Algebra::from_products(space, vec![Scalar::one()], vec![vec![vec![Scalar::one()]]])
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.prod[i][j]
    }

    pub fn mul_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        assert_eq!(u.len(), d);
        assert_eq!(v.len(), d);
        let mut out = zero_vec(d);
        for (i, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                vec_add_scaled(&mut out, &c, &self.prod[i][j]);
            }
        }
        out
    }

    /// Product of several vectors, left to right.
    pub fn mul_all(&self, vs: &[&[Scalar]]) -> Vec<Scalar> {
        let mut acc = self.unit.to_vec();
        for v in vs {
            acc = self.mul_vec(&acc, v);
        }
        acc
    }

    /// Associativity and unit laws, checked on all basis tuples.
    pub fn check(&self, mode: ExecMode) -> CheckReport {
        let d = self.dim();
        let mut report = CheckReport::new();
        let assoc = par::find_first(mode, d * d * d, |t| {
            let (i, j, k) = (t / (d * d), (t / d) % d, t % d);
            let lhs = self.mul_vec(&self.prod[i][j], &unit_vec(d, k));
            let rhs = self.mul_vec(&unit_vec(d, i), &self.prod[j][k]);
            (lhs != rhs).then(|| {
                Witness::vectors(
                    format!(
                        "({},{},{})",
                        self.space.label(i),
                        self.space.label(j),
                        self.space.label(k)
                    ),
                    &self.space,
                    &lhs,
                    &rhs,
                )
            })
        });
        report.push(Check::from_witness("algebra/associativity", assoc));
        let unit = par::find_first(mode, d, |i| {
            let e = unit_vec(d, i);
            let l = self.mul_vec(&self.unit, &e);
            let r = self.mul_vec(&e, &self.unit);
            (l != e || r != e).then(|| {
                Witness::vectors(self.space.label(i), &self.space, &l, &r)
            })
        });
        report.push(Check::from_witness("algebra/unit", unit));
        report
    }
}

/// Componentwise product on A⊗B for two algebras: (a⊗b)(a'⊗b') = aa'⊗bb'.
pub fn tensor_mul(a: &Algebra, b: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let (da, db) = (a.dim(), b.dim());
    assert_eq!(x.len(), da * db);
    assert_eq!(y.len(), da * db);
    let mut out = zero_vec(da * db);
    for (p, xv) in x.iter().enumerate() {
        if xv.is_zero() {
            continue;
        }
        let (i, j) = (p / db, p % db);
        for (q, yv) in y.iter().enumerate() {
            if yv.is_zero() {
                continue;
            }
            let (k, l) = (q / db, q % db);
            let c = xv * yv;
            let m1 = a.basis_product(i, k);
            let m2 = b.basis_product(j, l);
            for (s, ms) in m1.iter().enumerate() {
                if ms.is_zero() {
                    continue;
                }
                let cs = &c * ms;
                for (t, mt) in m2.iter().enumerate() {
                    if !mt.is_zero() {
                        out[s * db + t] = &out[s * db + t] + &(&cs * mt);
                    }
                }
            }
        }
    }
    out
}

/// A finite-dimensional coalgebra with structure constants.
#[derive(Clone)]
pub struct Coalgebra {
    space: SpaceRef,
    comult: LinMap,
    counit: LinMap,
    /// Sparse Sweedler terms: delta[i] = [(j, k, c)] with Δe_i = Σ c e_j⊗e_k.
    delta: Vec<Vec<(usize, usize, Scalar)>>,
    counit_vals: Vec<Scalar>,
}

impl Coalgebra {
    pub fn new(space: SpaceRef, comult: LinMap, counit: LinMap) -> Coalgebra {
        let d = space.dim();
        assert_eq!(comult.source().dim(), d);
        assert_eq!(comult.target().dim(), d * d);
        assert_eq!(counit.source().dim(), d);
        assert_eq!(counit.target().dim(), 1);
        let mut delta = vec![Vec::new(); d];
        for i in 0..d {
            let col = comult.column(i);
            for (p, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    delta[i].push((p / d, p % d, c));
                }
            }
        }
        let counit_vals = (0..d).map(|i| counit.entry(0, i).clone()).collect();
        Coalgebra { space, comult, counit, delta, counit_vals }
    }

    /// Build from sparse Sweedler terms.
    pub fn from_terms(
        space: SpaceRef,
        delta: Vec<Vec<(usize, usize, Scalar)>>,
        counit_vals: Vec<Scalar>,
    ) -> Coalgebra {
        let d = space.dim();
        let sq = Space::tensor(&space, &space);
        let mut cols = Vec::with_capacity(d);
        for terms in &delta {
            let mut col = zero_vec(d * d);
            for (j, k, c) in terms {
                col[j * d + k] = &col[j * d + k] + c;
            }
            cols.push(col);
        }
        let comult = LinMap::from_columns(space.clone(), sq, cols);
        let counit = LinMap::new(space.clone(), Space::field(), vec![counit_vals.clone()]);
        Coalgebra { space, comult, counit, delta, counit_vals }
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn delta_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.delta[i]
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit_vals[i]
    }

    pub fn counit_vec(&self, v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (c, e) in v.iter().zip(&self.counit_vals) {
            if !c.is_zero() && !e.is_zero() {
                acc = &acc + &(c * e);
            }
        }
        acc
    }

    pub fn comult_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.comult.apply(v)
    }

    /// Two-fold coproduct terms (Δ⊗id)Δ e_i = Σ c e_a⊗e_b⊗e_c.
    pub fn delta3_terms(&self, i: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (j, k, c) in &self.delta[i] {
            for (a, b, c2) in &self.delta[*j] {
                out.push((*a, *b, *k, c * c2));
            }
        }
        out
    }

    /// Tensor-square coalgebra on C⊗C.
    pub fn tensor_square(&self) -> Coalgebra {
        let d = self.dim();
        let sq = Space::tensor(&self.space, &self.space);
        let mut delta = Vec::with_capacity(d * d);
        let mut counit = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut terms = Vec::new();
                for (a, b, c1) in &self.delta[i] {
                    for (x, y, c2) in &self.delta[j] {
                        terms.push((a * d + x, b * d + y, c1 * c2));
                    }
                }
                delta.push(terms);
                counit.push(self.counit_basis(i) * self.counit_basis(j));
            }
        }
        Coalgebra::from_terms(sq, delta, counit)
    }

    /// Coassociativity and counit laws on all basis elements.
    pub fn check(&self, mode: ExecMode) -> CheckReport {
        let d = self.dim();
        let mut report = CheckReport::new();
        let t3 = Space::tensor_power(&self.space, 3);
        let coassoc = par::find_first(mode, d, |i| {
            let mut lhs = zero_vec(d * d * d);
            for (a, b, k, c) in self.delta3_terms(i) {
                let idx = (a * d + b) * d + k;
                lhs[idx] = &lhs[idx] + &c;
            }
            let mut rhs = zero_vec(d * d * d);
            for (j, k, c) in &self.delta[i] {
                for (a, b, c2) in &self.delta[*k] {
                    let idx = (*j * d + a) * d + b;
                    rhs[idx] = &rhs[idx] + &(c * c2);
                }
            }
            (lhs != rhs).then(|| Witness::vectors(self.space.label(i), &t3, &lhs, &rhs))
        });
        report.push(Check::from_witness("coalgebra/coassociativity", coassoc));
        let counit = par::find_first(mode, d, |i| {
            let mut left = zero_vec(d);
            let mut right = zero_vec(d);
            for (j, k, c) in &self.delta[i] {
                left[*k] = &left[*k] + &(c * self.counit_basis(*j));
                right[*j] = &right[*j] + &(c * self.counit_basis(*k));
            }
            let e = unit_vec(d, i);
            (left != e || right != e)
                .then(|| Witness::vectors(self.space.label(i), &self.space, &left, &right))
        });
        report.push(Check::from_witness("coalgebra/counit", counit));
        report
    }
}

/// A Hopf algebra: compatible algebra and coalgebra on one space plus an
/// antipode.
#[derive(Clone)]
pub struct HopfAlgebra {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
    pub antipode: LinMap,
}

impl HopfAlgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, antipode: LinMap) -> HopfAlgebra {
        assert_eq!(algebra.dim(), coalgebra.dim(), "algebra and coalgebra must share the space");
        assert_eq!(antipode.source().dim(), algebra.dim());
        assert_eq!(antipode.target().dim(), algebra.dim());
        HopfAlgebra { algebra, coalgebra, antipode }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn space(&self) -> &SpaceRef {
        self.algebra.space()
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    /// Itemised verification of every Hopf axiom, with witnesses.
    pub fn check_axioms(&self, mode: ExecMode) -> CheckReport {
        let d = self.dim();
        let alg = &self.algebra;
        let coa = &self.coalgebra;
        let space = self.space();
        let mut report = alg.check(mode);
        report.extend(coa.check(mode));

        // Δ is an algebra map into H⊗H with componentwise product.
        let sq = Space::tensor(space, space);
        let comult_mult = par::find_first(mode, d * d, |t| {
            let (i, j) = (t / d, t % d);
            let lhs = coa.comult_vec(alg.basis_product(i, j));
            let rhs = tensor_mul(alg, alg, &coa.comult.column(i), &coa.comult.column(j));
            (lhs != rhs).then(|| {
                Witness::vectors(
                    format!("({},{})", space.label(i), space.label(j)),
                    &sq,
                    &lhs,
                    &rhs,
                )
            })
        });
        report.push(Check::from_witness("bialgebra/comult-multiplicative", comult_mult));
        let unit_glike = {
            let lhs = coa.comult_vec(alg.unit());
            let rhs = vec_tensor(alg.unit(), alg.unit());
            Check::from_witness(
                "bialgebra/comult-unit",
                (lhs != rhs).then(|| Witness::vectors("1", &sq, &lhs, &rhs)),
            )
        };
        report.push(unit_glike);
        let counit_mult = par::find_first(mode, d * d, |t| {
            let (i, j) = (t / d, t % d);
            let lhs = coa.counit_vec(alg.basis_product(i, j));
            let rhs = coa.counit_basis(i) * coa.counit_basis(j);
            (lhs != rhs).then(|| {
                Witness::new(
                    format!("({},{})", space.label(i), space.label(j)),
                    lhs.to_string(),
                    rhs.to_string(),
                )
            })
        });
        report.push(Check::from_witness("bialgebra/counit-multiplicative", counit_mult));
        let counit_unit = {
            let lhs = coa.counit_vec(alg.unit());
            Check::from_witness(
                "bialgebra/counit-unit",
                (!lhs.is_one()).then(|| Witness::new("1", lhs.to_string(), "1")),
            )
        };
        report.push(counit_unit);

        // S * id = η∘ε = id * S
        for (name, left) in [("hopf/antipode-left", true), ("hopf/antipode-right", false)] {
            let w = par::find_first(mode, d, |i| {
                let mut acc = zero_vec(d);
                for (j, k, c) in coa.delta_terms(i) {
                    let val = if left {
                        alg.mul_vec(&self.antipode.column(*j), &unit_vec(d, *k))
                    } else {
                        alg.mul_vec(&unit_vec(d, *j), &self.antipode.column(*k))
                    };
                    vec_add_scaled(&mut acc, c, &val);
                }
                let expected = vec_scale(coa.counit_basis(i), alg.unit());
                (acc != expected)
                    .then(|| Witness::vectors(space.label(i), space, &acc, &expected))
            });
            report.push(Check::from_witness(name, w));
        }
        report
    }

    /// Exact inverse of the antipode matrix.
    pub fn antipode_inverse(&self, mode: ExecMode) -> Result<LinMap> {
        invert(&self.antipode, mode)
            .ok_or_else(|| Error::NotInvertible("antipode matrix is singular".into()))
    }
}

// ---- convolution algebra ---------------------------------------------------

/// Convolution product (f*g)(c) = f(c₁)g(c₂) of maps C → A.
pub fn convolve(c: &Coalgebra, a: &Algebra, f: &LinMap, g: &LinMap) -> LinMap {
    assert_eq!(f.source().dim(), c.dim());
    assert_eq!(g.source().dim(), c.dim());
    assert_eq!(f.target().dim(), a.dim());
    assert_eq!(g.target().dim(), a.dim());
    let cols = (0..c.dim())
        .map(|i| {
            let mut acc = zero_vec(a.dim());
            for (j, k, coef) in c.delta_terms(i) {
                let prod = a.mul_vec(&f.column(*j), &g.column(*k));
                vec_add_scaled(&mut acc, coef, &prod);
            }
            acc
        })
        .collect();
    LinMap::from_columns(c.space().clone(), a.space().clone(), cols)
}

/// Convolution unit η∘ε.
pub fn convolution_unit(c: &Coalgebra, a: &Algebra) -> LinMap {
    let cols = (0..c.dim())
        .map(|i| vec_scale(c.counit_basis(i), a.unit()))
        .collect();
    LinMap::from_columns(c.space().clone(), a.space().clone(), cols)
}

/// Convolution inverse by one exact linear solve in Hom(C,A): the operator
/// X ↦ f*X is linear, so invertibility of f reduces to solvability of
/// f*X = η∘ε. Returns `None` when the system is unsolvable.
pub fn convolution_inverse(
    c: &Coalgebra,
    a: &Algebra,
    f: &LinMap,
    mode: ExecMode,
) -> Option<LinMap> {
    let (dc, da) = (c.dim(), a.dim());
    let hom = Space::with_prefix("h", dc * da);
    // hom coordinate (src, out) = src*da + out
    let mut cols = Vec::with_capacity(dc * da);
    for b in 0..dc {
        for out in 0..da {
            let mut col = zero_vec(dc * da);
            for i in 0..dc {
                for (j, k, coef) in c.delta_terms(i) {
                    if *k != b {
                        continue;
                    }
                    let prod = a.mul_vec(&f.column(*j), &unit_vec(da, out));
                    for (r, pv) in prod.iter().enumerate() {
                        if !pv.is_zero() {
                            col[i * da + r] = &col[i * da + r] + &(coef * pv);
                        }
                    }
                }
            }
            cols.push(col);
        }
    }
    let op = LinMap::from_columns(hom.clone(), hom, cols);
    let target = convolution_unit(c, a);
    let mut rhs = zero_vec(dc * da);
    for i in 0..dc {
        for (r, v) in target.column(i).into_iter().enumerate() {
            rhs[i * da + r] = v;
        }
    }
    let x = solve(&op, &rhs, mode)?;
    let inv_cols: Vec<Vec<Scalar>> = (0..dc).map(|i| x[i * da..(i + 1) * da].to_vec()).collect();
    let g = LinMap::from_columns(c.space().clone(), a.space().clone(), inv_cols);
    // One-sided inverses in a finite-dimensional unital algebra are two-sided.
    let other = convolve(c, a, &g, f);
    assert_eq!(other, target, "convolution inverse failed the two-sided check");
    Some(g)
}

// ---- dual quasitriangular structures ----------------------------------------

/// A dual-quasitriangular structure R: H⊗H → k with its convolution inverse.
#[derive(Clone)]
pub struct Dqt {
    dim: usize,
    r: LinMap,
    r_inv: LinMap,
}

impl Dqt {
    /// Build from the d×d value matrix vals[i][j] = R(e_i⊗e_j); the
    /// convolution inverse is computed exactly (None if R is not
    /// convolution-invertible).
    pub fn from_matrix(h: &HopfAlgebra, vals: Vec<Vec<Scalar>>, mode: ExecMode) -> Option<Dqt> {
        let d = h.dim();
        assert_eq!(vals.len(), d);
        let sq = Space::tensor(h.space(), h.space());
        let mut row = Vec::with_capacity(d * d);
        for r in &vals {
            assert_eq!(r.len(), d);
            row.extend(r.iter().cloned());
        }
        let r = LinMap::new(sq, Space::field(), vec![row]);
        let tsq = h.coalgebra.tensor_square();
        let r_inv = convolution_inverse(&tsq, &Algebra::ground_field(), &r, mode)?;
        Some(Dqt { dim: d, r, r_inv })
    }

    pub fn r(&self) -> &LinMap {
        &self.r
    }

    pub fn r_inv(&self) -> &LinMap {
        &self.r_inv
    }

    pub fn eval(&self, i: usize, j: usize) -> &Scalar {
        self.r.entry(0, i * self.dim + j)
    }

    pub fn eval_inv(&self, i: usize, j: usize) -> &Scalar {
        self.r_inv.entry(0, i * self.dim + j)
    }

    /// R evaluated on a general element of H⊗H.
    pub fn eval_vec(&self, v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(c * self.r.entry(0, p));
            }
        }
        acc
    }
}

/// The trivial structure R = ε⊗ε.
pub fn trivial_dqt(h: &HopfAlgebra, mode: ExecMode) -> Dqt {
    let d = h.dim();
    let vals = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| h.coalgebra.counit_basis(i) * h.coalgebra.counit_basis(j))
                .collect()
        })
        .collect();
    Dqt::from_matrix(h, vals, mode).expect("trivial structure is convolution-invertible")
}

/// Bicharacter identities, units, invertibility and quasi-commutativity.
pub fn check_dqt(h: &HopfAlgebra, dqt: &Dqt, mode: ExecMode) -> CheckReport {
    let d = h.dim();
    let alg = &h.algebra;
    let coa = &h.coalgebra;
    let space = h.space();
    let mut report = CheckReport::new();
    let pair_label =
        |i: usize, j: usize| format!("({},{})", space.label(i), space.label(j));

    // R(ab⊗c) = R(a⊗c₁)R(b⊗c₂)
    let bich_l = par::find_first(mode, d * d * d, |t| {
        let (i, j, k) = (t / (d * d), (t / d) % d, t % d);
        let mut lhs = Scalar::zero();
        for (s, c) in alg.basis_product(i, j).iter().enumerate() {
            if !c.is_zero() {
                lhs = &lhs + &(c * dqt.eval(s, k));
            }
        }
        let mut rhs = Scalar::zero();
        for (a, b, c) in coa.delta_terms(k) {
            rhs = &rhs + &(&(c * dqt.eval(i, *a)) * dqt.eval(j, *b));
        }
        (lhs != rhs).then(|| {
            Witness::new(
                format!("({},{};{})", space.label(i), space.label(j), space.label(k)),
                lhs.to_string(),
                rhs.to_string(),
            )
        })
    });
    report.push(Check::from_witness("dqt/bicharacter-left", bich_l));

    // R(a⊗bc) = R(a₁⊗c)R(a₂⊗b)
    let bich_r = par::find_first(mode, d * d * d, |t| {
        let (i, j, k) = (t / (d * d), (t / d) % d, t % d);
        let mut lhs = Scalar::zero();
        for (s, c) in alg.basis_product(j, k).iter().enumerate() {
            if !c.is_zero() {
                lhs = &lhs + &(c * dqt.eval(i, s));
            }
        }
        let mut rhs = Scalar::zero();
        for (p, q, c) in coa.delta_terms(i) {
            rhs = &rhs + &(&(c * dqt.eval(*p, k)) * dqt.eval(*q, j));
        }
        (lhs != rhs).then(|| {
            Witness::new(
                format!("({};{},{})", space.label(i), space.label(j), space.label(k)),
                lhs.to_string(),
                rhs.to_string(),
            )
        })
    });
    report.push(Check::from_witness("dqt/bicharacter-right", bich_r));

    // R(1⊗h) = ε(h) = R(h⊗1)
    let units = par::find_first(mode, d, |i| {
        let mut left = Scalar::zero();
        let mut right = Scalar::zero();
        for (s, c) in h.unit().iter().enumerate() {
            if !c.is_zero() {
                left = &left + &(c * dqt.eval(s, i));
                right = &right + &(c * dqt.eval(i, s));
            }
        }
        let expected = coa.counit_basis(i);
        (left != *expected || right != *expected).then(|| {
            Witness::new(space.label(i), format!("{left} / {right}"), expected.to_string())
        })
    });
    report.push(Check::from_witness("dqt/unit", units));

    // convolution invertibility: R * R⁻¹ = ε⊗ε = R⁻¹ * R
    let tsq = coa.tensor_square();
    let k_alg = Algebra::ground_field();
    let conv_unit = convolution_unit(&tsq, &k_alg);
    let lhs = convolve(&tsq, &k_alg, dqt.r(), dqt.r_inv());
    let rhs = convolve(&tsq, &k_alg, dqt.r_inv(), dqt.r());
    report.push(Check::from_witness(
        "dqt/convolution-invertible",
        (lhs != conv_unit || rhs != conv_unit)
            .then(|| Witness::new("R*R⁻¹", "≠ ε⊗ε", "ε⊗ε")),
    ));

    // R(a₁⊗b₁) b₂a₂ = a₁b₁ R(a₂⊗b₂)
    let qc = par::find_first(mode, d * d, |t| {
        let (i, j) = (t / d, t % d);
        let mut lhs = zero_vec(d);
        let mut rhs = zero_vec(d);
        for (a1, a2, ca) in coa.delta_terms(i) {
            for (b1, b2, cb) in coa.delta_terms(j) {
                let c = ca * cb;
                vec_add_scaled(&mut lhs, &(&c * dqt.eval(*a1, *b1)), alg.basis_product(*b2, *a2));
                vec_add_scaled(&mut rhs, &(&c * dqt.eval(*a2, *b2)), alg.basis_product(*a1, *b1));
            }
        }
        (lhs != rhs).then(|| Witness::vectors(pair_label(i, j), space, &lhs, &rhs))
    });
    report.push(Check::from_witness("dqt/quasi-commutativity", qc));
    report
}

// ---- dual Hopf algebra ------------------------------------------------------

/// The dual Hopf algebra on the dual basis: product ← Δᵀ, coproduct ← multᵀ,
/// antipode ← Sᵀ.
pub fn dualize(h: &HopfAlgebra) -> HopfAlgebra {
    let d = h.dim();
    let dual_space = Space::new(
        h.space().labels().iter().map(|l| format!("{l}*")).collect::<Vec<_>>(),
    );
    let sq = Space::tensor(&dual_space, &dual_space);
    let mult_rows: Vec<Vec<Scalar>> = (0..d)
        .map(|k| {
            // (e_i* e_j*)(e_k) = coefficient of e_i⊗e_j in Δe_k, laid out as row k
            let col = h.coalgebra.comult().column(k);
            col
        })
        .collect();
    let mult = LinMap::new(sq.clone(), dual_space.clone(), mult_rows);
    let unit: Vec<Scalar> = (0..d).map(|i| h.coalgebra.counit_basis(i).clone()).collect();
    let algebra = Algebra::new(dual_space.clone(), mult, unit);

    let comult_rows: Vec<Vec<Scalar>> = (0..d * d)
        .map(|p| {
            let (i, j) = (p / d, p % d);
            // coefficient of e_i*⊗e_j* in Δ*(e_k*) = coefficient of e_k in e_i e_j
            (0..d).map(|k| h.algebra.basis_product(i, j)[k].clone()).collect()
        })
        .collect();
    let comult = LinMap::new(dual_space.clone(), sq, comult_rows);
    let counit = LinMap::new(
        dual_space.clone(),
        Space::field(),
        vec![h.unit().to_vec()],
    );
    let coalgebra = Coalgebra::new(dual_space.clone(), comult, counit);

    let antipode_rows: Vec<Vec<Scalar>> =
        (0..d).map(|i| (0..d).map(|j| h.antipode.entry(j, i).clone()).collect()).collect();
    let antipode = LinMap::new(dual_space.clone(), dual_space, antipode_rows);
    HopfAlgebra::new(algebra, coalgebra, antipode)
}

// ---- isomorphism search ------------------------------------------------------

/// Verify that `phi` is a Hopf algebra isomorphism H → K.
pub fn is_hopf_isomorphism(h: &HopfAlgebra, k: &HopfAlgebra, phi: &LinMap) -> bool {
    if h.dim() != k.dim() {
        return false;
    }
    let d = h.dim();
    if phi.apply(h.unit()) != k.unit() {
        return false;
    }
    for i in 0..d {
        let img = phi.column(i);
        if k.coalgebra.counit_vec(&img) != *h.coalgebra.counit_basis(i) {
            return false;
        }
        // Δ_K(φ e_i) = (φ⊗φ)(Δ_H e_i)
        let lhs = k.coalgebra.comult_vec(&img);
        let mut rhs = zero_vec(d * d);
        for (a, b, c) in h.coalgebra.delta_terms(i) {
            let t = vec_tensor(&phi.column(*a), &phi.column(*b));
            vec_add_scaled(&mut rhs, c, &t);
        }
        if lhs != rhs {
            return false;
        }
        if phi.apply(&h.antipode.column(i)) != k.antipode.apply(&img) {
            return false;
        }
        for j in 0..d {
            let lhs = phi.apply(h.algebra.basis_product(i, j));
            let rhs = k.algebra.mul_vec(&phi.column(i), &phi.column(j));
            if lhs != rhs {
                return false;
            }
        }
    }
    invert(phi, ExecMode::Sequential).is_some()
}

/// Bounded search for an explicit Hopf isomorphism H → K.
///
/// `gens` lists basis indices of algebra generators of H, ordered so that the
/// coproduct of each generator only involves monomials in earlier generators
/// and itself; `monomials[b]` gives the exponent vector of basis element b in
/// those generators. Candidate images are single or double basis monomials of
/// K with coefficients drawn from small rationals and roots of unity of the
/// given conductor. Returns the first isomorphism found in deterministic
/// order, or None if the bounded candidate set contains no isomorphism.
pub fn find_hopf_isomorphism(
    h: &HopfAlgebra,
    k: &HopfAlgebra,
    gens: &[usize],
    monomials: &[Vec<u32>],
    conductor: u32,
) -> Option<LinMap> {
    if h.dim() != k.dim() {
        return None;
    }
    let d = k.dim();
    let mut coeffs: Vec<Scalar> = vec![
        Scalar::from_int(1),
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::from_int(-2),
        Scalar::rational(1, 2),
        Scalar::rational(-1, 2),
    ];
    for t in 1..conductor {
        let z = Scalar::root_of_unity(conductor, t as i64);
        if !coeffs.contains(&z) {
            coeffs.push(z.clone());
            coeffs.push(z.neg());
        }
    }
    let mut candidates: Vec<Vec<Scalar>> = Vec::new();
    for m in 0..d {
        for c in &coeffs {
            let mut v = zero_vec(d);
            v[m] = c.clone();
            candidates.push(v);
        }
    }
    for m1 in 0..d {
        for m2 in m1 + 1..d {
            for c1 in &coeffs {
                for c2 in &coeffs {
                    let mut v = zero_vec(d);
                    v[m1] = c1.clone();
                    v[m2] = c2.clone();
                    candidates.push(v);
                }
            }
        }
    }

    let mut images: Vec<Vec<Scalar>> = Vec::new();
    search(h, k, gens, monomials, &candidates, &mut images)
}

fn monomial_image(k: &HopfAlgebra, images: &[Vec<Scalar>], exps: &[u32]) -> Vec<Scalar> {
    let mut acc = k.unit().to_vec();
    for (img, e) in images.iter().zip(exps) {
        for _ in 0..*e {
            acc = k.algebra.mul_vec(&acc, img);
        }
    }
    acc
}

fn search(
    h: &HopfAlgebra,
    k: &HopfAlgebra,
    gens: &[usize],
    monomials: &[Vec<u32>],
    candidates: &[Vec<Scalar>],
    images: &mut Vec<Vec<Scalar>>,
) -> Option<LinMap> {
    let level = images.len();
    if level == gens.len() {
        let d = h.dim();
        let cols: Vec<Vec<Scalar>> =
            (0..d).map(|b| monomial_image(k, images, &monomials[b])).collect();
        let phi = LinMap::from_columns(h.space().clone(), k.space().clone(), cols);
        return is_hopf_isomorphism(h, k, &phi).then_some(phi);
    }
    let gen = gens[level];
    let d = h.dim();
    for cand in candidates {
        // prune: coproduct compatibility of the candidate image, evaluable
        // because Δ(gen) only involves monomials in gens[0..=level]
        let lhs = k.coalgebra.comult_vec(cand);
        let mut rhs = zero_vec(d * d);
        images.push(cand.clone());
        let mut evaluable = true;
        for (a, b, c) in h.coalgebra.delta_terms(gen) {
            let (ea, eb) = (&monomials[*a], &monomials[*b]);
            if ea[level + 1..].iter().any(|&e| e > 0) || eb[level + 1..].iter().any(|&e| e > 0) {
                evaluable = false;
                break;
            }
            let t = vec_tensor(
                &monomial_image(k, images, ea),
                &monomial_image(k, images, eb),
            );
            vec_add_scaled(&mut rhs, c, &t);
        }
        if evaluable && lhs != rhs {
            images.pop();
            continue;
        }
        if let Some(found) = search(h, k, gens, monomials, candidates, images) {
            return Some(found);
        }
        images.pop();
    }
    None
}
