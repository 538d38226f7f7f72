//! The SO(3) quantum invariant `I_p(M, J)` at an odd prime `p`.
//!
//! `A` is a primitive `2p`-th root of unity and lives in `Z[A]/Phi_{2p}`.
//! The normalization constants `k` and `eta` need a primitive `4p`-th root
//! `x` with `A = x^2`; they live in `Q[x]/Phi_{4p}`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bracket::{cabled_sum, chebyshev_coeffs, twist_power, BracketCache, Poly, DEFAULT_CROSSING_CAP};
use crate::cyclotomic::{is_prime, CycloRing, IntElem, RatElem};
use crate::error::{Error, Result};
use crate::laurent::Var;
use crate::link::{determinant, signature_exact, FramedLinkDiagram, SurgeryPresentation};

/// `Delta_i = (-1)^i sum_{t=0}^{i} A^(2i - 4t)`, the value of `e_i` on the
/// 0-framed unknot.
pub fn delta_poly(i: usize) -> Poly {
    let sign = if i.is_multiple_of(2) { 1 } else { -1 };
    let i = i as i64;
    Poly::from_terms(Var::A, (0..=i).map(|t| (2 * i - 4 * t, BigInt::from(sign))))
}

/// `A^3 (A^2 - A^-2) A^(p(p-1)/2) sum_{m=1}^{2p} (-1)^m A^(m^2)`; equals
/// `2p * eta / k`.
pub fn gauss_factor(p: u64) -> Poly {
    let p = p as i64;
    let sum = Poly::from_terms(
        Var::A,
        (1..=2 * p).map(|m| (m * m, BigInt::from(if m % 2 == 0 { 1 } else { -1 }))),
    );
    let pre = Poly::from_terms(Var::A, [(5, BigInt::one()), (1, BigInt::from(-1))]);
    (&pre * &sum).shift(p * (p - 1) / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Surgery,
    Brieskorn,
}

/// A value of `I_p`. Homology-sphere values also carry their integral form in
/// `Z[A]/Phi_{2p}`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantValue {
    p: u64,
    value: RatElem,
    integral: Option<IntElem>,
    provenance: Provenance,
}

impl InvariantValue {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The value in `Q[x]/Phi_{4p}`, `A = x^2`.
    pub fn value(&self) -> &RatElem {
        &self.value
    }

    /// The value in `Z[A]/Phi_{2p}`, present for homology spheres.
    pub fn integral(&self) -> Option<&IntElem> {
        self.integral.as_ref()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn ring_name(&self) -> String {
        match self.integral {
            Some(_) => format!("Z[A]/Phi_{{{}}}", 2 * self.p),
            None => format!("Q[x]/Phi_{{{}}}, A = x^2", 4 * self.p),
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.integral {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}", self.value),
        }
    }
}

/// Everything that depends only on `p`.
#[derive(Clone, Debug)]
pub struct So3Context {
    p: u64,
    cap: usize,
    ring2p: Arc<CycloRing>,
    ring4p: Arc<CycloRing>,
    k_sign: i64,
    k_exp: i64,
    gauss: IntElem,
    eta: RatElem,
    deltas: Vec<Poly>,
}

impl So3Context {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        let ring2p = CycloRing::with_var(2 * p, Var::A);
        let ring4p = CycloRing::with_var(4 * p, Var::X);
        let pi = p as i64;
        let k_exp = -6 - pi * (pi + 1) / 2;
        let gauss = Self::lift(&ring4p, &gauss_factor(p));
        let two_p = BigRational::from_integer(BigInt::from(2 * p));
        let eta_unsigned = gauss.mul_x_pow(k_exp).to_rational().scale(&(BigRational::one() / two_p));
        // eta is real at x = exp(2 pi i c / 4p), c = (1 + p^2) / 2; take the
        // square root k that makes it positive there.
        let (re, im) = eta_unsigned.approx_eval((p * p).div_ceil(2));
        assert!(im.abs() < 1e-6 * (1.0 + re.abs()), "eta is not real at the chosen embedding");
        let k_sign = if re > 0.0 { 1 } else { -1 };
        let eta = eta_unsigned.scale(&BigRational::from_integer(BigInt::from(k_sign)));
        let deltas = (0..=(p as usize - 3) / 2).map(delta_poly).collect();
        let ctx = Self { p, cap: DEFAULT_CROSSING_CAP, ring2p, ring4p, k_sign, k_exp, gauss, eta, deltas };
        ctx.self_check()?;
        Ok(ctx)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    fn self_check(&self) -> Result<()> {
        let k2 = self.k_pow(2);
        let expected = self.ring4p.monomial(2 * (-6 - (self.p * (self.p + 1) / 2) as i64), BigInt::one());
        if k2 != expected {
            return Err(Error::IntegralityViolation("k^2 != A^(-6-p(p+1)/2)".into()));
        }
        let cache = BracketCache::new();
        for f in [1, -1] {
            let unknot = FramedLinkDiagram::framed(crate::link::catalog::unknot(), vec![f])?;
            let v = self.surgery_invariant(&SurgeryPresentation::surgery(unknot)?, &cache)?;
            if v.integral() != Some(&self.ring2p.one()) {
                return Err(Error::IntegralityViolation(format!("{f}-framed unknot evaluates to {v}")));
            }
        }
        Ok(())
    }

    fn lift(ring4p: &Arc<CycloRing>, poly: &Poly) -> IntElem {
        ring4p.reduce(&poly.map_exponents(Var::X, |e| 2 * e))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn ring2p(&self) -> &Arc<CycloRing> {
        &self.ring2p
    }

    pub fn ring4p(&self) -> &Arc<CycloRing> {
        &self.ring4p
    }

    /// A Laurent polynomial in `A` as an element of `Z[A]/Phi_{2p}`.
    pub fn to_ring2p(&self, poly: &Poly) -> IntElem {
        self.ring2p.reduce(poly)
    }

    /// A Laurent polynomial in `A` as an element of `Z[x]/Phi_{4p}`.
    pub fn to_ring4p(&self, poly: &Poly) -> IntElem {
        Self::lift(&self.ring4p, poly)
    }

    pub fn k(&self) -> IntElem {
        self.k_pow(1)
    }

    /// `k^n` for any integer `n`; `k` is a signed power of `x`.
    pub fn k_pow(&self, n: i64) -> IntElem {
        let sign = if n % 2 == 0 { 1 } else { self.k_sign };
        self.ring4p.monomial(self.k_exp * n, BigInt::from(sign))
    }

    pub fn eta(&self) -> &RatElem {
        &self.eta
    }

    /// `2p * eta / k`, an integral element.
    pub fn gauss(&self) -> &IntElem {
        &self.gauss
    }

    pub fn delta(&self, i: usize) -> IntElem {
        self.to_ring2p(&delta_poly(i))
    }

    /// `(i, Delta_i)` for `i = 0..=(p-3)/2`, the coefficients of `Omega_p`.
    pub fn omega_coefficients(&self) -> Vec<(usize, IntElem)> {
        self.deltas.iter().enumerate().map(|(i, d)| (i, self.to_ring2p(d))).collect()
    }

    /// `[Omega_p]` on the 0-framed unknot, `sum Delta_i^2`.
    pub fn omega_on_unknot(&self) -> IntElem {
        let sum = self.deltas.iter().fold(Poly::zero(Var::A), |acc, d| &acc + &(d * d));
        self.to_ring2p(&sum)
    }

    fn max_color(&self) -> usize {
        (self.p as usize - 3) / 2
    }

    /// Replaces a color above `(p-3)/2` by `p-2` minus it.
    pub fn trade_color(&self, c: u32) -> usize {
        let c = c as usize;
        if c > self.max_color() {
            self.p as usize - 2 - c
        } else {
            c
        }
    }

    /// `I_p(M, J) = k^(-sigma) [L(eta Omega_p) + J]`.
    pub fn surgery_invariant(&self, pres: &SurgeryPresentation, cache: &BracketCache) -> Result<InvariantValue> {
        let d = pres.diagram();
        d.validate_colors(self.p)?;
        let pd = d.pd();
        let matrix = pres.surgery_linking_matrix();
        let m = matrix.len() as i64;
        let sigma = signature_exact(&matrix);
        let det = determinant(&matrix);

        let mut weights = Vec::with_capacity(pd.component_count());
        for c in 0..pd.component_count() {
            let excess = d.framings()[c] - pd.self_writhe(c);
            let w: Vec<Poly> = match d.colors()[c] {
                None => {
                    let mut w = vec![Poly::zero(Var::A); self.max_color() + 1];
                    for (i, delta) in self.deltas.iter().enumerate() {
                        let f = delta * &twist_power(i, excess);
                        for (mm, cm) in chebyshev_coeffs(i).iter().enumerate() {
                            w[mm] = &w[mm] + &f.scale(cm);
                        }
                    }
                    w
                }
                Some(color) => {
                    let i = self.trade_color(color);
                    let t = twist_power(i, excess);
                    chebyshev_coeffs(i).iter().map(|cm| t.scale(cm)).collect()
                }
            };
            weights.push(w);
        }
        let s = cabled_sum(pd, &weights, self.cap, cache)?;

        // eta^m k^(-sigma) = k^(m - sigma) gauss^m / (2p)^m
        let mut num = self.k_pow(m - sigma).mul(&self.to_ring4p(&s));
        for _ in 0..m {
            num = num.mul(&self.gauss);
        }
        let denom = BigInt::from(2 * self.p).pow(m as u32);
        let value = num.to_rational().scale(&BigRational::new(BigInt::one(), denom));
        let integral = if det == BigInt::one() || det == -BigInt::one() {
            Some(self.descend(&value)?)
        } else {
            None
        };
        Ok(InvariantValue { p: self.p, value, integral, provenance: Provenance::Surgery })
    }

    /// Maps a homology-sphere value into `Z[A]/Phi_{2p}`, failing if it is
    /// not there.
    fn descend(&self, value: &RatElem) -> Result<IntElem> {
        let int = value
            .to_integer()
            .ok_or_else(|| Error::IntegralityViolation(format!("non-integral homology sphere value {value}")))?;
        int.descend_square(&self.ring2p)
            .ok_or_else(|| Error::IntegralityViolation(format!("odd powers of x survive in {int}")))
    }

    /// `<<M, J>>_p = eta I_p(M, J)`; checked to be integral when the surgery
    /// linking matrix is singular.
    pub fn double_bracket(&self, pres: &SurgeryPresentation, cache: &BracketCache) -> Result<RatElem> {
        let v = self.surgery_invariant(pres, cache)?.value.mul(&self.eta);
        if determinant(&pres.surgery_linking_matrix()).is_zero() && v.to_integer().is_none() {
            return Err(Error::IntegralityViolation(format!("<<M>> = {v} is not integral")));
        }
        Ok(v)
    }

    /// Closed formula for the Brieskorn sphere `M_n`, +1 surgery on the
    /// `(2, n)` torus knot.
    pub fn brieskorn_invariant(&self, n: i64) -> Result<InvariantValue> {
        if n % 2 == 0 || n.abs() < 3 {
            return Err(Error::InvalidInput(format!("n must be odd with |n| >= 3, got {n}")));
        }
        let mut total = Poly::zero(Var::A);
        for i in 0..=self.max_color() as i64 {
            let mut inner = Poly::zero(Var::A);
            for j in 0..=i {
                // lambda^(-n), lambda = (-1)^(i-j) A^(i(i+2) - j(2j+2))
                let e = -n * (i * (i + 2) - j * (2 * j + 2));
                let sign = if ((i - j) * n) % 2 == 0 { 1 } else { -1 };
                inner = &inner + &delta_poly(2 * j as usize).shift(e).scale(&BigInt::from(sign));
            }
            let te = i * (i + 2) * (1 - n);
            let tsign = if te % 2 == 0 { 1 } else { -1 };
            let term = (&delta_poly(i as usize) * &inner).shift(te).scale(&BigInt::from(tsign));
            total = &total + &term;
        }
        // eta / k = gauss / (2p), and gauss is a polynomial in A.
        let num = self.to_ring2p(&(&gauss_factor(self.p) * &total));
        let int = num.exact_div_int(&BigInt::from(2 * self.p)).map_err(|_| {
            Error::IntegralityViolation(format!("I_{}(M_{n}) is not integral", self.p))
        })?;
        let value = int.lift_square(&self.ring4p).to_rational();
        Ok(InvariantValue { p: self.p, value, integral: Some(int), provenance: Provenance::Brieskorn })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::catalog::*;
    use crate::link::PdCode;

    fn a(ctx: &So3Context, terms: &[(i64, i64)]) -> IntElem {
        ctx.to_ring2p(&Poly::from_terms(Var::A, terms.iter().map(|&(e, c)| (e, BigInt::from(c)))))
    }

    fn surgery(pd: PdCode, framings: Vec<i64>) -> SurgeryPresentation {
        SurgeryPresentation::surgery(FramedLinkDiagram::framed(pd, framings).unwrap()).unwrap()
    }

    #[test]
    fn rejects_non_primes() {
        assert_eq!(So3Context::new(9).unwrap_err(), Error::NotOddPrime(9));
        assert_eq!(So3Context::new(2).unwrap_err(), Error::NotOddPrime(2));
    }

    #[test]
    fn delta_examples() {
        let ctx = So3Context::new(7).unwrap();
        assert_eq!(ctx.delta(0), ctx.ring2p().one());
        assert_eq!(ctx.delta(1), a(&ctx, &[(2, -1), (-2, -1)]));
        assert_eq!(ctx.delta(2), a(&ctx, &[(4, 1), (0, 1), (-4, 1)]));
    }

    #[test]
    fn omega_lengths() {
        let ctx = So3Context::new(5).unwrap();
        let om = ctx.omega_coefficients();
        assert_eq!(om.len(), 2);
        assert_eq!(om[1], (1, a(&ctx, &[(2, -1), (-2, -1)])));
        let ctx = So3Context::new(7).unwrap();
        let om = ctx.omega_coefficients();
        assert_eq!(om.len(), 3);
        assert_eq!(om[2], (2, a(&ctx, &[(4, 1), (0, 1), (-4, 1)])));
        for p in [11u64, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61] {
            assert_eq!(So3Context::new(p).unwrap().omega_coefficients().len() as u64, (p - 1) / 2);
        }
    }

    #[test]
    fn k_squared_at_five() {
        let ctx = So3Context::new(5).unwrap();
        let k2 = ctx.k().mul(&ctx.k());
        let down = k2.descend_square(ctx.ring2p()).unwrap();
        assert_eq!(down, a(&ctx, &[(4, -1)]));
        assert_eq!(down, a(&ctx, &[(-21, 1)]));
    }

    #[test]
    fn gauss_factor_is_even_but_not_divisible_by_p() {
        for p in [5u64, 7, 11] {
            let ctx = So3Context::new(p).unwrap();
            assert!(ctx.gauss().exact_div_int(&BigInt::from(2)).is_ok());
            assert!(matches!(
                ctx.gauss().exact_div_int(&BigInt::from(2 * p)),
                Err(Error::NotDivisible { .. })
            ));
        }
    }

    #[test]
    fn eta_identities() {
        for p in [3u64, 5, 7, 11, 13] {
            let ctx = So3Context::new(p).unwrap();
            let eta2 = ctx.eta().mul(ctx.eta());
            let x = ctx.to_ring4p(&Poly::from_terms(Var::A, [(2, BigInt::one()), (-2, BigInt::from(-1))]));
            let rhs = x.mul(&x).neg().to_rational();
            assert_eq!(eta2.scale(&BigRational::from_integer(BigInt::from(p))), rhs);
            let om = ctx.omega_on_unknot().lift_square(ctx.ring4p()).to_rational();
            assert_eq!(eta2.mul(&om), ctx.ring4p().one());
        }
    }

    #[test]
    fn empty_presentation_is_one() {
        let ctx = So3Context::new(5).unwrap();
        let cache = BracketCache::new();
        let v = ctx.surgery_invariant(&SurgeryPresentation::empty(), &cache).unwrap();
        assert_eq!(v.integral(), Some(&ctx.ring2p().one()));
        assert_eq!(ctx.double_bracket(&SurgeryPresentation::empty(), &cache).unwrap(), *ctx.eta());
    }

    #[test]
    fn poincare_sphere_by_surgery() {
        let cache = BracketCache::new();
        let ctx = So3Context::new(5).unwrap();
        let v = ctx.surgery_invariant(&surgery(trefoil_right(), vec![1]), &cache).unwrap();
        assert_eq!(v.integral().unwrap(), &a(&ctx, &[(0, 1), (1, -2), (2, 2), (3, -1)]));
        assert_eq!(v.to_string(), "1 - 2A + 2A^2 - A^3");
    }

    #[test]
    fn brieskorn_examples() {
        let ctx5 = So3Context::new(5).unwrap();
        assert_eq!(ctx5.brieskorn_invariant(3).unwrap().to_string(), "1 - 2A + 2A^2 - A^3");
        let ctx7 = So3Context::new(7).unwrap();
        assert_eq!(ctx7.brieskorn_invariant(3).unwrap().to_string(), "-2 + A + 2A^3 - A^4");
        assert!(matches!(ctx7.brieskorn_invariant(4), Err(Error::InvalidInput(_))));
        assert!(matches!(ctx7.brieskorn_invariant(1), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn brieskorn_matches_surgery_on_torus_knots() {
        let cache = BracketCache::new();
        for (n, p) in [(3, 5), (3, 7), (5, 5), (-3, 5), (-5, 5), (5, 7), (-3, 7)] {
            let ctx = So3Context::new(p).unwrap();
            let surg = ctx.surgery_invariant(&surgery(torus_2n(n as i32), vec![1]), &cache).unwrap();
            let closed = ctx.brieskorn_invariant(n).unwrap();
            assert_eq!(surg.integral(), closed.integral(), "n={n} p={p}");
        }
    }

    #[test]
    fn blow_up_invariance() {
        let cache = BracketCache::new();
        for p in [5u64, 7] {
            let ctx = So3Context::new(p).unwrap();
            for pres in [
                SurgeryPresentation::empty(),
                surgery(unknot(), vec![1]),
                surgery(trefoil_right(), vec![1]),
            ] {
                let base = ctx.surgery_invariant(&pres, &cache).unwrap();
                for f in [1, -1] {
                    let blown = ctx.surgery_invariant(&pres.blow_up(f), &cache).unwrap();
                    assert_eq!(blown.value(), base.value(), "p={p} framing {f}");
                }
            }
        }
    }

    #[test]
    fn color_trading_on_unknot() {
        let cache = BracketCache::new();
        for p in [5u64, 7] {
            let ctx = So3Context::new(p).unwrap();
            for f in [0, 1, -2] {
                for c in 0..=(p - 2) as u32 {
                    let observed = |c: u32| {
                        let d = FramedLinkDiagram::new(unknot(), vec![f], vec![Some(c)]).unwrap();
                        ctx.surgery_invariant(&SurgeryPresentation::new(d), &cache).unwrap()
                    };
                    assert_eq!(observed(c).value(), observed(p as u32 - 2 - c).value());
                }
            }
        }
    }

    #[test]
    fn trading_preserves_delta_and_twist() {
        for p in [5u64, 7, 11, 13] {
            let ctx = So3Context::new(p).unwrap();
            for i in 0..=(p as usize - 2) {
                let j = p as usize - 2 - i;
                assert_eq!(ctx.delta(i), ctx.delta(j));
                assert_eq!(ctx.to_ring2p(&twist_power(i, 1)), ctx.to_ring2p(&twist_power(j, 1)));
            }
        }
    }

    #[test]
    fn out_of_range_color_is_rejected() {
        let ctx = So3Context::new(5).unwrap();
        let d = FramedLinkDiagram::new(unknot(), vec![0], vec![Some(4)]).unwrap();
        let err = ctx.surgery_invariant(&SurgeryPresentation::new(d), &BracketCache::new());
        assert!(matches!(err, Err(Error::InvalidColor { .. })));
    }

    #[test]
    fn s1_x_s2_double_bracket_is_integral() {
        let cache = BracketCache::new();
        for p in [5u64, 7] {
            let ctx = So3Context::new(p).unwrap();
            let pres = surgery(unknot(), vec![0]);
            let v = ctx.surgery_invariant(&pres, &cache).unwrap();
            assert!(v.integral().is_none());
            assert!(ctx.double_bracket(&pres, &cache).unwrap().to_integer().is_some());
        }
    }

    #[test]
    fn mirror_conjugates_homology_sphere_value() {
        let cache = BracketCache::new();
        let ctx = So3Context::new(5).unwrap();
        let d = FramedLinkDiagram::framed(trefoil_right(), vec![1]).unwrap();
        let v = ctx.surgery_invariant(&SurgeryPresentation::surgery(d.clone()).unwrap(), &cache).unwrap();
        let m = ctx.surgery_invariant(&SurgeryPresentation::surgery(d.mirror()).unwrap(), &cache).unwrap();
        assert_eq!(m.integral().unwrap(), &v.integral().unwrap().galois_conj());
    }
}
