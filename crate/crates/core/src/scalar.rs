//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! A [`Scalar`] is an element of Q(zeta_n) stored on the reduced power basis
//! `1, zeta, ..., zeta^(phi(n)-1)` modulo the n-th cyclotomic polynomial, with
//! arbitrary-precision rational coefficients. Representation within a fixed
//! conductor is canonical, so equality is decidable; scalars of different
//! conductors are compared after embedding both into the field of conductor
//! `lcm`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(n: u32) -> Vec<u32> {
    let mut divs: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    divs.sort_unstable();
    divs
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

/// Exact division of polynomials over Q; `num` must be divisible by `den`.
/// Coefficient vectors are low-to-high degree.
fn poly_div_exact(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd && !den[dd].is_zero());
    let mut rem = num.to_vec();
    let mut quot = vec![Rat::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = &rem[k + dd] / &den[dd];
        if !c.is_zero() {
            for i in 0..=dd {
                let t = &c * &den[i];
                rem[k + i] -= t;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Rat::is_zero), "inexact polynomial division");
    quot
}

/// Monic n-th cyclotomic polynomial, coefficients low-to-high.
fn cyclotomic_poly(n: u32) -> Vec<Rat> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Rat>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let poly = if n == 1 {
        vec![rat(-1, 1), rat(1, 1)]
    } else {
        // (x^n - 1) / prod_{d|n, d<n} Phi_d
        let mut num = vec![Rat::zero(); n as usize + 1];
        num[0] = rat(-1, 1);
        num[n as usize] = rat(1, 1);
        let mut acc = num;
        for d in divisors(n) {
            if d < n {
                acc = poly_div_exact(&acc, &cyclotomic_poly(d));
            }
        }
        acc
    };
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Precomputed reduction data for one conductor.
struct CycloField {
    phi: usize,
    /// zeta^k on the reduced basis, for k = 0..=max_pow.
    powers: Vec<Vec<Rat>>,
}

impl CycloField {
    fn get(n: u32) -> Arc<CycloField> {
        static REGISTRY: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
        let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = reg.lock().unwrap().get(&n) {
            return f.clone();
        }
        let built = Arc::new(CycloField::build(n));
        reg.lock().unwrap().insert(n, built.clone());
        built
    }

    fn build(n: u32) -> CycloField {
        let poly = cyclotomic_poly(n);
        let phi = poly.len() - 1;
        // Embeddings need powers up to n, products up to 2*phi-2.
        let max_pow = std::cmp::max(n as usize, 2 * phi);
        let mut powers: Vec<Vec<Rat>> = Vec::with_capacity(max_pow + 1);
        let mut e0 = vec![Rat::zero(); phi];
        e0[0] = Rat::one();
        powers.push(e0);
        for _ in 1..=max_pow {
            let prev = powers.last().unwrap();
            let mut next = vec![Rat::zero(); phi];
            let lead = prev[phi - 1].clone();
            for i in (1..phi).rev() {
                next[i] = prev[i - 1].clone();
            }
            if !lead.is_zero() {
                // x^phi = -(lower coefficients of Phi_n)
                for (i, c) in poly.iter().take(phi).enumerate() {
                    let t = &lead * c;
                    next[i] -= t;
                }
            }
            powers.push(next);
        }
        CycloField { phi, powers }
    }
}

/// An element of the cyclotomic field Q(zeta_n), exact.
#[derive(Clone)]
pub struct Scalar {
    conductor: u32,
    coeffs: Vec<Rat>,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { conductor: 1, coeffs: vec![Rat::zero()] }
    }

    pub fn one() -> Scalar {
        Scalar { conductor: 1, coeffs: vec![Rat::one()] }
    }

    pub fn from_int(k: i64) -> Scalar {
        Scalar { conductor: 1, coeffs: vec![rat(k, 1)] }
    }

    pub fn from_rat(r: Rat) -> Scalar {
        Scalar { conductor: 1, coeffs: vec![r] }
    }

    pub fn rational(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar { conductor: 1, coeffs: vec![rat(num, den)] }
    }

    /// zeta_n^k, stored with the reduced conductor n/gcd(n,k).
    pub fn root_of_unity(n: u32, k: i64) -> Scalar {
        assert!(n >= 1);
        let kk = k.rem_euclid(n as i64) as u32;
        if kk == 0 {
            return Scalar::one();
        }
        let g = gcd(n, kk);
        let (n, kk) = (n / g, kk / g);
        if n == 1 {
            return Scalar::one();
        }
        let field = CycloField::get(n);
        Scalar { conductor: n, coeffs: field.powers[kk as usize].clone() }.normalized()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    /// Rational part collapse: an element with no zeta components moves to conductor 1.
    fn normalized(mut self) -> Scalar {
        if self.conductor > 1 && self.coeffs[1..].iter().all(Rat::is_zero) {
            self.coeffs.truncate(1);
            self.conductor = 1;
        }
        self
    }

    /// Embed into Q(zeta_n) for a multiple n of the current conductor.
    pub fn lift_to(&self, n: u32) -> Scalar {
        if self.conductor == n {
            return self.clone();
        }
        assert!(
            n % self.conductor == 0,
            "cannot embed conductor {} into {}",
            self.conductor,
            n
        );
        let field = CycloField::get(n);
        let step = (n / self.conductor) as usize;
        let mut out = vec![Rat::zero(); field.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, p) in field.powers[i * step].iter().enumerate() {
                if !p.is_zero() {
                    out[j] += c * p;
                }
            }
        }
        Scalar { conductor: n, coeffs: out }
    }

    fn unify(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        if a.conductor == b.conductor {
            (a.clone(), b.clone())
        } else {
            let n = lcm(a.conductor, b.conductor);
            (a.lift_to(n), b.lift_to(n))
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (mut a, b) = Scalar::unify(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a.normalized()
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        if other.is_zero() {
            return self.clone();
        }
        let (mut a, b) = Scalar::unify(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a.normalized()
    }

    pub fn neg(&self) -> Scalar {
        Scalar { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        // rational fast paths
        if self.conductor == 1 {
            let c = &self.coeffs[0];
            return Scalar {
                conductor: other.conductor,
                coeffs: other.coeffs.iter().map(|x| c * x).collect(),
            }
            .normalized();
        }
        if other.conductor == 1 {
            return other.mul(self);
        }
        let (a, b) = Scalar::unify(self, other);
        let phi = a.coeffs.len();
        let mut prod = vec![Rat::zero(); 2 * phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let field = CycloField::get(a.conductor);
        let mut out = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (j, p) in field.powers[k].iter().enumerate() {
                if !p.is_zero() {
                    out[j] += c * p;
                }
            }
        }
        Scalar { conductor: a.conductor, coeffs: out }.normalized()
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Scalar { conductor: 1, coeffs: vec![self.coeffs[0].recip()] });
        }
        // Extended Euclid in Q[x] against Phi_n: u*self + v*Phi = 1.
        let modulus = cyclotomic_poly(self.conductor);
        let inv = poly_modinv(&self.coeffs, &modulus);
        Ok(Scalar { conductor: self.conductor, coeffs: inv }.normalized())
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Inverse of `a` modulo the monic polynomial `m` (coprime by irreducibility).
fn poly_modinv(a: &[Rat], m: &[Rat]) -> Vec<Rat> {
    let trim = |v: &[Rat]| -> Vec<Rat> {
        let mut v = v.to_vec();
        while v.len() > 1 && v.last().unwrap().is_zero() {
            v.pop();
        }
        v
    };
    let mut r0 = trim(m);
    let mut r1 = trim(a);
    let mut s0 = vec![Rat::zero()];
    let mut s1 = vec![Rat::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = trim(&r);
        s0 = s1;
        s1 = trim(&s);
    }
    // r0 is a nonzero constant gcd
    assert!(r0.len() == 1 && !r0[0].is_zero(), "non-unit gcd with cyclotomic modulus");
    let c = r0[0].recip();
    let mut out: Vec<Rat> = s0.iter().map(|x| x * &c).collect();
    out.resize(m.len() - 1, Rat::zero());
    out
}

fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = den.len() - 1;
    if num.len() < den.len() {
        return (vec![Rat::zero()], num.to_vec());
    }
    let dn = num.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![Rat::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = &rem[k + dd] / &den[dd];
        if !c.is_zero() {
            for i in 0..=dd {
                let t = &c * &den[i];
                rem[k + i] -= t;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dd.max(1));
    (quot, rem)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Scalar::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Scalar {}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if i == 0 {
                format!("{c}")
            } else {
                let z = if i == 1 {
                    format!("z{}", self.conductor)
                } else {
                    format!("z{}^{}", self.conductor, i)
                };
                if c.is_one() {
                    z
                } else if (-c).is_one() {
                    format!("-{z}")
                } else {
                    format!("{c}*{z}")
                }
            };
            if first {
                write!(f, "{term}")?;
                first = false;
            } else if term.starts_with('-') {
                write!(f, " - {}", &term[1..])?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

fn rat_to_pair(r: &Rat) -> std::result::Result<(i64, i64), String> {
    let n = r
        .numer()
        .to_i64()
        .ok_or_else(|| format!("numerator {} does not fit in i64", r.numer()))?;
    let d = r
        .denom()
        .to_i64()
        .ok_or_else(|| format!("denominator {} does not fit in i64", r.denom()))?;
    Ok((n, d))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Scalar", 2)?;
        st.serialize_field("conductor", &self.conductor)?;
        let pairs: std::result::Result<Vec<(i64, i64)>, String> =
            self.coeffs.iter().map(rat_to_pair).collect();
        st.serialize_field("coeffs", &pairs.map_err(S::Error::custom)?)?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Int(i64),
    Pair([i64; 2]),
    Full { conductor: u32, coeffs: Vec<[i64; 2]> },
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match ScalarRepr::deserialize(deserializer)? {
            ScalarRepr::Int(k) => Ok(Scalar::from_int(k)),
            ScalarRepr::Pair([n, d]) => {
                if d == 0 {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(Scalar::rational(n, d))
            }
            ScalarRepr::Full { conductor, coeffs } => {
                if conductor == 0 {
                    return Err(D::Error::custom("conductor must be positive"));
                }
                let phi = euler_phi(conductor);
                if coeffs.len() != phi {
                    return Err(D::Error::custom(format!(
                        "expected {phi} coefficients for conductor {conductor}, got {}",
                        coeffs.len()
                    )));
                }
                if coeffs.iter().any(|[_, d]| *d == 0) {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(Scalar {
                    conductor,
                    coeffs: coeffs.iter().map(|[n, d]| rat(*n, *d)).collect(),
                }
                .normalized())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_fourth_root_squares_to_minus_one() {
        let i = Scalar::root_of_unity(4, 1);
        assert_eq!(i.mul(&i), Scalar::from_int(-1));
    }

    #[test]
    fn cyclotomic_relation_conductor_three() {
        let z = Scalar::root_of_unity(3, 1);
        let sum = Scalar::one().add(&z).add(&z.mul(&z));
        assert!(sum.is_zero());
    }

    #[test]
    fn rational_inverse() {
        assert_eq!(Scalar::from_int(2).inv().unwrap(), Scalar::rational(1, 2));
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn cross_conductor_equality() {
        // zeta_6^3 = -1 = zeta_2
        let a = Scalar::root_of_unity(6, 3);
        assert_eq!(a, Scalar::from_int(-1));
        let b = Scalar::root_of_unity(12, 2); // = zeta_6
        assert_eq!(b, Scalar::root_of_unity(6, 1));
    }

    #[test]
    fn root_of_unity_inverse_is_conjugate_power() {
        for n in [3u32, 4, 5, 8, 12] {
            let z = Scalar::root_of_unity(n, 1);
            assert_eq!(z.inv().unwrap(), Scalar::root_of_unity(n, n as i64 - 1));
            assert!(z.pow(n).is_one());
        }
    }

    #[test]
    fn serde_round_trip() {
        let s = Scalar::root_of_unity(4, 1).add(&Scalar::rational(1, 2));
        let js = serde_json::to_string(&s).unwrap();
        let back: Scalar = serde_json::from_str(&js).unwrap();
        assert_eq!(s, back);
        let short: Scalar = serde_json::from_str("-3").unwrap();
        assert_eq!(short, Scalar::from_int(-3));
        let pair: Scalar = serde_json::from_str("[1,2]").unwrap();
        assert_eq!(pair, Scalar::rational(1, 2));
    }
}
