//! Cyclotomic quotient rings `Z[x]/Phi_N(x)` and their mod-p reductions.
//!
//! Elements are stored as dense coefficient vectors in the power basis
//! `1, x, ..., x^(d-1)` with `d = phi(N)`. Every operation reduces back to
//! this canonical basis, so `==` is equality in the ring.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::{power_name, write_terms, Coeff, LaurentPoly, Var};

// ---------------------------------------------------------------------------
// Dense integer polynomial helpers (ascending coefficients).

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial; `None` if the remainder is nonzero.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    if num.len() < den.len() {
        return if num.iter().all(Zero::is_zero) { Some(vec![]) } else { None };
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(quot)
    } else {
        None
    }
}

fn x_pow_minus_one(d: u64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); d as usize + 1];
    v[0] = BigInt::from(-1);
    v[d as usize] = BigInt::one();
    v
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn mobius(n: u64) -> i32 {
    let mut n = n;
    let mut result = 1;
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            n /= f;
            if n.is_multiple_of(f) {
                return 0;
            }
            result = -result;
        }
        f += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            while n.is_multiple_of(f) {
                n /= f;
            }
            result -= result / f;
        }
        f += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Coefficients of the `n`-th cyclotomic polynomial in ascending order,
/// computed as `prod_{d | n} (x^d - 1)^{mu(n/d)}` with the negative factors
/// removed by exact division.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut num = vec![BigInt::one()];
    let mut dens = Vec::new();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = poly_mul(&num, &x_pow_minus_one(d)),
            -1 => dens.push(d),
            _ => {}
        }
    }
    for d in dens {
        num = poly_div_exact(&num, &x_pow_minus_one(d))
            .expect("Mobius product divides exactly");
    }
    num
}

/// Independent route: `Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d`.
fn cyclotomic_by_recursion(n: u64) -> Vec<BigInt> {
    let mut den = vec![BigInt::one()];
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        den = poly_mul(&den, &cyclotomic_by_recursion(d));
    }
    poly_div_exact(&x_pow_minus_one(n), &den).expect("x^n - 1 is divisible by its proper factors")
}

// ---------------------------------------------------------------------------

/// The ring `Z[x]/Phi_N(x)`, or `F_p[x]/Phi_N(x)` when `characteristic = p`.
#[derive(Clone, Debug)]
pub struct CycloRing {
    order: u64,
    modulus: Vec<BigInt>,
    degree: usize,
    characteristic: u64,
    var: Var,
}

impl PartialEq for CycloRing {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.characteristic == other.characteristic
    }
}

impl Eq for CycloRing {}

impl CycloRing {
    pub fn new(order: u64) -> Arc<Self> {
        Self::build(order, 0, Var::X)
    }

    pub fn with_var(order: u64, var: Var) -> Arc<Self> {
        Self::build(order, 0, var)
    }

    pub fn new_mod(order: u64, p: u64) -> Arc<Self> {
        assert!(is_prime(p), "characteristic must be prime");
        Self::build(order, p, Var::X)
    }

    fn build(order: u64, characteristic: u64, var: Var) -> Arc<Self> {
        assert!(order >= 1, "root-of-unity order must be positive");
        let modulus = cyclotomic_polynomial(order);
        assert_eq!(
            modulus,
            cyclotomic_by_recursion(order),
            "cyclotomic polynomial routes disagree for N = {order}"
        );
        let degree = modulus.len() - 1;
        assert_eq!(degree as u64, euler_phi(order));
        Arc::new(Self { order, modulus, degree, characteristic, var })
    }

    /// The same ring with coefficients reduced mod `p`.
    pub fn mod_p(&self, p: u64) -> Arc<Self> {
        assert!(is_prime(p), "characteristic must be prime");
        Arc::new(Self { characteristic: p, ..self.clone() })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn var(&self) -> Var {
        self.var
    }

    fn modulus_as<R: Coeff + From<BigInt>>(&self) -> Vec<R> {
        self.modulus.iter().cloned().map(R::from).collect()
    }

    fn modulus_mod_p(&self) -> Vec<u64> {
        let p = BigInt::from(self.characteristic);
        self.modulus
            .iter()
            .map(|c| c.mod_floor(&p).to_u64().expect("residue fits in u64"))
            .collect()
    }

    /// Reduces a dense vector of arbitrary length modulo `Phi_N`.
    fn reduce_dense<R: Coeff + From<BigInt>>(&self, mut v: Vec<R>) -> Vec<R> {
        let d = self.degree;
        if v.len() > d {
            let m: Vec<R> = self.modulus_as();
            for i in (d..v.len()).rev() {
                let c = std::mem::replace(&mut v[i], R::zero());
                if c.is_zero() {
                    continue;
                }
                for (j, mj) in m.iter().enumerate().take(d) {
                    if mj.is_zero() {
                        continue;
                    }
                    let k = i - d + j;
                    let t = std::mem::replace(&mut v[k], R::zero());
                    v[k] = t - c.clone() * mj.clone();
                }
            }
        }
        v.resize(d, R::zero());
        v
    }

    /// Folds a vector indexed by exponents mod `N` (length `N`) into the
    /// canonical basis.
    pub fn reduce_cyclic<R: Coeff + From<BigInt>>(self: &Arc<Self>, v: Vec<R>) -> CycloElem<R> {
        assert_eq!(v.len() as u64, self.order, "cyclic vector has wrong length");
        CycloElem { ring: self.clone(), coeffs: self.reduce_dense(v) }
    }

    /// Canonical representative of a Laurent polynomial in `x`; negative
    /// exponents are cleared with `x^-1 = x^(N-1)`.
    pub fn reduce<R: Coeff + From<BigInt>>(self: &Arc<Self>, poly: &LaurentPoly<R>) -> CycloElem<R> {
        let n = self.order as i64;
        let mut v = vec![R::zero(); self.order as usize];
        for (e, c) in poly.terms() {
            let k = e.rem_euclid(n) as usize;
            let t = std::mem::replace(&mut v[k], R::zero());
            v[k] = t + c.clone();
        }
        self.reduce_cyclic(v)
    }

    pub fn zero<R: Coeff>(self: &Arc<Self>) -> CycloElem<R> {
        CycloElem { ring: self.clone(), coeffs: vec![R::zero(); self.degree] }
    }

    pub fn one<R: Coeff + From<BigInt>>(self: &Arc<Self>) -> CycloElem<R> {
        self.monomial(0, R::one())
    }

    /// `c * x^exp` for any integer exponent.
    pub fn monomial<R: Coeff + From<BigInt>>(self: &Arc<Self>, exp: i64, c: R) -> CycloElem<R> {
        let mut v = vec![R::zero(); self.order as usize];
        v[exp.rem_euclid(self.order as i64) as usize] = c;
        self.reduce_cyclic(v)
    }

    pub fn from_coeffs<R: Coeff + From<BigInt>>(self: &Arc<Self>, coeffs: Vec<R>) -> CycloElem<R> {
        CycloElem { ring: self.clone(), coeffs: self.reduce_dense(coeffs) }
    }

    pub fn residue_zero(self: &Arc<Self>) -> ResidueElem {
        assert!(self.characteristic > 0, "ring has characteristic zero");
        ResidueElem { ring: self.clone(), coeffs: vec![0; self.degree] }
    }

    /// Reduction of an integer Laurent polynomial into this (mod-p) ring.
    pub fn reduce_residue(self: &Arc<Self>, poly: &LaurentPoly<BigInt>) -> ResidueElem {
        assert!(self.characteristic > 0, "ring has characteristic zero");
        let p = BigInt::from(self.characteristic);
        let n = self.order as i64;
        let mut v = vec![0u64; self.order as usize];
        for (e, c) in poly.terms() {
            let k = e.rem_euclid(n) as usize;
            let r = c.mod_floor(&p).to_u64().expect("residue fits");
            v[k] = (v[k] + r) % self.characteristic;
        }
        ResidueElem { coeffs: self.reduce_residue_dense(v), ring: self.clone() }
    }

    fn reduce_residue_dense(&self, mut v: Vec<u64>) -> Vec<u64> {
        let d = self.degree;
        let p = self.characteristic;
        if v.len() > d {
            let m = self.modulus_mod_p();
            for i in (d..v.len()).rev() {
                let c = v[i] % p;
                v[i] = 0;
                if c == 0 {
                    continue;
                }
                for (j, &mj) in m.iter().enumerate().take(d) {
                    if mj == 0 {
                        continue;
                    }
                    let k = i - d + j;
                    v[k] = (v[k] + p - (c * mj) % p) % p;
                }
            }
        }
        v.resize(d, 0);
        v
    }

    pub fn residue_monomial(self: &Arc<Self>, exp: i64) -> ResidueElem {
        let mut v = vec![0u64; self.order as usize];
        v[exp.rem_euclid(self.order as i64) as usize] = 1;
        ResidueElem { coeffs: self.reduce_residue_dense(v), ring: self.clone() }
    }
}

// ---------------------------------------------------------------------------

/// Element of a characteristic-zero cyclotomic ring.
#[derive(Clone, PartialEq)]
pub struct CycloElem<R> {
    ring: Arc<CycloRing>,
    coeffs: Vec<R>,
}

pub type IntElem = CycloElem<BigInt>;
pub type RatElem = CycloElem<BigRational>;

impl<R: Coeff + From<BigInt>> CycloElem<R> {
    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(*self.ring, *other.ring, "operands live in different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Self { ring: self.ring.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_ring(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Self { ring: self.ring.clone(), coeffs }
    }

    pub fn neg(&self) -> Self {
        Self { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        let d = self.ring.degree;
        let mut out = vec![R::zero(); (2 * d).saturating_sub(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = std::mem::replace(&mut out[i + j], R::zero());
                out[i + j] = t + a.clone() * b.clone();
            }
        }
        Self { coeffs: self.ring.reduce_dense(out), ring: self.ring.clone() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn mul_x_pow(&self, k: i64) -> Self {
        let n = self.ring.order as i64;
        let mut v = vec![R::zero(); self.ring.order as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            v[(i as i64 + k).rem_euclid(n) as usize] = a.clone();
        }
        self.ring.reduce_cyclic(v)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// The ring map `x -> x^k` (an automorphism when `gcd(k, N) = 1`).
    pub fn substitute_power(&self, k: i64) -> Self {
        let n = self.ring.order as i64;
        let mut v = vec![R::zero(); self.ring.order as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            let idx = (i as i64 * k).rem_euclid(n) as usize;
            let t = std::mem::replace(&mut v[idx], R::zero());
            v[idx] = t + a.clone();
        }
        self.ring.reduce_cyclic(v)
    }

    /// Galois conjugation `x -> x^-1`; complex conjugation under every
    /// embedding.
    pub fn galois_conj(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Image under `x -> y^2` in the ring of twice the order.
    pub fn lift_square(&self, target: &Arc<CycloRing>) -> Self {
        assert_eq!(target.order, 2 * self.ring.order, "target must have twice the order");
        let mut v = vec![R::zero(); target.order as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            v[2 * i] = a.clone();
        }
        target.reduce_cyclic(v)
    }

    /// Inverse of [`lift_square`](Self::lift_square): defined when only even
    /// powers carry coefficients and `Phi_{2M}(y) = Phi_M(y^2)`.
    pub fn descend_square(&self, target: &Arc<CycloRing>) -> Option<Self> {
        if self.ring.order != 2 * target.order || !target.order.is_multiple_of(2) {
            return None;
        }
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        let coeffs: Vec<R> = self.coeffs.iter().step_by(2).cloned().collect();
        debug_assert_eq!(coeffs.len(), target.degree);
        Some(Self { ring: target.clone(), coeffs })
    }
}

impl IntElem {
    pub fn to_rational(&self) -> RatElem {
        CycloElem {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().cloned().map(BigRational::from_integer).collect(),
        }
    }

    /// Coefficient-wise exact division.
    pub fn exact_div_int(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    coefficient: c.to_string(),
                    divisor: d.to_string(),
                });
            }
            coeffs.push(q);
        }
        Ok(Self { ring: self.ring.clone(), coeffs })
    }

    /// Coefficient-wise reduction into `F_p[x]/Phi_N`.
    pub fn mod_p_reduce(&self, p: u64) -> ResidueElem {
        let ring = self.ring.mod_p(p);
        let pb = BigInt::from(p);
        let v = self
            .coeffs
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
            .collect();
        ResidueElem { coeffs: ring.reduce_residue_dense(v), ring }
    }
}

impl RatElem {
    /// `Some` iff every coefficient is an integer.
    pub fn to_integer(&self) -> Option<IntElem> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()?;
        Some(CycloElem { ring: self.ring.clone(), coeffs })
    }

    /// Floating-point value at `x = exp(2 pi i k / N)`. Only used to pick a
    /// sign; no exact result depends on it.
    pub fn approx_eval(&self, k: u64) -> (f64, f64) {
        let n = self.ring.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let c = c.to_f64().expect("finite coefficient");
            let theta = 2.0 * std::f64::consts::PI * (k as f64) * (i as f64) / n;
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re, im)
    }
}

impl<R: Coeff + From<BigInt> + fmt::Display + Signed> fmt::Display for CycloElem<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.ring.var.symbol();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c));
        write_terms(f, terms, |e| power_name(name, e))
    }
}

impl<R: fmt::Debug> fmt::Debug for CycloElem<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem[N={}]{:?}", self.ring.order, self.coeffs)
    }
}

// ---------------------------------------------------------------------------

/// Element of `F_p[x]/Phi_N(x)`.
#[derive(Clone, PartialEq, Eq)]
pub struct ResidueElem {
    ring: Arc<CycloRing>,
    coeffs: Vec<u64>,
}

impl ResidueElem {
    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn p(&self) -> u64 {
        self.ring.characteristic
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(*self.ring, *other.ring);
        let p = self.p();
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a + b) % p).collect();
        Self { ring: self.ring.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(*self.ring, *other.ring);
        let p = self.p();
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a + p - b) % p).collect();
        Self { ring: self.ring.clone(), coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(*self.ring, *other.ring);
        let p = self.p();
        let d = self.ring.degree;
        let mut out = vec![0u64; (2 * d).saturating_sub(1)];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self { coeffs: self.ring.reduce_residue_dense(out), ring: self.ring.clone() }
    }

    pub fn mul_x_pow(&self, k: i64) -> Self {
        let n = self.ring.order as i64;
        let mut v = vec![0u64; self.ring.order as usize];
        for (i, &a) in self.coeffs.iter().enumerate() {
            v[(i as i64 + k).rem_euclid(n) as usize] = a;
        }
        Self { coeffs: self.ring.reduce_residue_dense(v), ring: self.ring.clone() }
    }

    pub fn galois_conj(&self) -> Self {
        let n = self.ring.order as i64;
        let p = self.p();
        let mut v = vec![0u64; self.ring.order as usize];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let idx = (-(i as i64)).rem_euclid(n) as usize;
            v[idx] = (v[idx] + a) % p;
        }
        Self { coeffs: self.ring.reduce_residue_dense(v), ring: self.ring.clone() }
    }
}

impl fmt::Display for ResidueElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.ring.var.symbol();
        let as_int: Vec<BigInt> = self.coeffs.iter().map(|&c| BigInt::from(c)).collect();
        let terms = as_int
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c));
        write_terms(f, terms, |e| power_name(name, e))?;
        write!(f, " (mod {})", self.p())
    }
}

impl fmt::Debug for ResidueElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ResidueElem[N={}, p={}]{:?}", self.ring.order, self.p(), self.coeffs)
    }
}
