//! Sparse Laurent polynomials in one variable with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact coefficient ring. Implemented for `BigInt`, `BigRational` and the
/// machine integers.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Display name of the polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    A,
    T,
    S,
    Z,
    X,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::T => "t",
            Var::S => "s",
            Var::Z => "z",
            Var::X => "x",
        }
    }
}

/// A Laurent polynomial `sum c_e x^e`. Zero coefficients are never stored, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<R> {
    var: Var,
    terms: BTreeMap<i64, R>,
}

impl<R: Coeff> LaurentPoly<R> {
    pub fn zero(var: Var) -> Self {
        Self { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, R::one())
    }

    pub fn constant(var: Var, c: R) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn monomial(var: Var, exp: i64, c: R) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, c);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(var: Var, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, R)>,
    {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> R {
        self.terms.get(&exp).cloned().unwrap_or_else(R::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(exp, s);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.var, self.terms().map(|(e, a)| (e, a.clone() * c.clone())))
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// The substitution `x -> x^-1`.
    pub fn invert_var(&self) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Applies `e -> f(e)` to every exponent, summing collisions.
    pub fn map_exponents<F: Fn(i64) -> i64>(&self, var: Var, f: F) -> Self {
        Self::from_terms(var, self.terms().map(|(e, c)| (f(e), c.clone())))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.var);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluates at `x = 1`.
    pub fn eval_one(&self) -> R {
        self.terms.values().fold(R::zero(), |acc, c| acc + c.clone())
    }
}

impl LaurentPoly<BigInt> {
    /// Coefficient-wise exact division by a nonzero integer.
    pub fn exact_div_int(&self, d: &BigInt) -> Result<Self, Error> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = Self::zero(self.var);
        for (e, c) in self.terms() {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    coefficient: c.to_string(),
                    divisor: d.to_string(),
                });
            }
            out.add_term(e, q);
        }
        Ok(out)
    }
}

impl<R: Coeff> Add for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<R: Coeff> Sub for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<R: Coeff> Mul for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        debug_assert_eq!(self.var, rhs.var, "mixing polynomial variables");
        let mut out = LaurentPoly::zero(self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<R: Coeff> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Coeff> $tr for LaurentPoly<R> {
            type Output = LaurentPoly<R>;
            fn $m(self, rhs: LaurentPoly<R>) -> LaurentPoly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Coeff> Neg for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        -&self
    }
}

/// Writes `sum c_e name^e` in ascending exponent order with explicit signs,
/// e.g. `1 - 2A + 2A^2 - A^3`. `render_exp` formats a nonzero exponent.
pub(crate) fn write_terms<'a, R, I, F>(
    f: &mut fmt::Formatter<'_>,
    terms: I,
    render_var: F,
) -> fmt::Result
where
    R: fmt::Display + Signed + 'a,
    I: Iterator<Item = (i64, &'a R)>,
    F: Fn(i64) -> String,
{
    let mut first = true;
    for (e, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let var = if e == 0 { String::new() } else { render_var(e) };
        let mag_s = mag.to_string();
        if var.is_empty() {
            f.write_str(&mag_s)?;
        } else if mag.is_one() {
            f.write_str(&var)?;
        } else if mag_s.contains('/') {
            write!(f, "({mag_s}){var}")?;
        } else {
            write!(f, "{mag_s}{var}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn power_name(name: &str, e: i64) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

impl<R: Coeff + fmt::Display + Signed> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.var.symbol();
        write_terms(f, self.terms(), |e| power_name(name, e))
    }
}

impl<R: Coeff> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly<{}>{:?}", self.var.symbol(), self.terms)
    }
}
