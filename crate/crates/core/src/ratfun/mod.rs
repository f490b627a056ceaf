//! Exact arithmetic in Z[v, v^-1] and its fraction field Q(v).
//!
//! A [`RatFun`] is kept in a canonical form, so structural equality is
//! equality of rational functions: the numerator is a Laurent polynomial, the
//! denominator a polynomial not divisible by `v` with positive leading
//! coefficient, the two are coprime over Q[v], and the integer contents of
//! numerator and denominator are coprime.

mod laurent;
mod parse;

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use laurent::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFun {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(BigInt::from(c)))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::normalized(
            LaurentPoly::constant(q.numer().clone()),
            LaurentPoly::constant(q.denom().clone()),
        )
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// The indeterminate `v`.
    pub fn v() -> Self {
        Self::v_pow(1)
    }

    pub fn v_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::monomial(BigInt::one(), k))
    }

    /// `v - 1`.
    pub fn v_minus_one() -> Self {
        Self::from_laurent(LaurentPoly::from_coeffs(0, vec![(-1).into(), 1.into()]))
    }

    /// `v^k - 1` for `k >= 1`.
    pub fn v_pow_minus_one(k: u32) -> Self {
        let mut c = vec![BigInt::zero(); k as usize + 1];
        c[0] = (-1).into();
        c[k as usize] = 1.into();
        Self::from_laurent(LaurentPoly::from_coeffs(0, c))
    }

    /// `num / den`, reduced to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        // v is a unit: move every power of v into the numerator.
        let (k, mut den) = den.split_v_power();
        let num = num.shifted(-k);
        let (e, mut num) = num.split_v_power();
        if !den.is_constant() && !num.is_constant() {
            let g = LaurentPoly::poly_gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        let c = num.content().gcd(&den.content());
        let mut num = num.div_scalar_exact(&c);
        den = den.div_scalar_exact(&c);
        if den.leading_coeff().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        Self {
            num: num.shifted(e),
            den,
        }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator; never divisible by `v`.
    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in Z[v, v^-1].
    pub fn is_laurent_integral(&self) -> bool {
        self.den.is_one()
    }

    /// True when the value is a polynomial in `v` over Q.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant() && self.num.valuation().is_none_or(|e| e >= 0)
    }

    /// The constant value, if this is a constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_constant())
            .then(|| BigRational::new(self.num.coeff(0), self.den.coeff(0)))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if q.is_one() {
            return self.clone();
        }
        Self::normalized(self.num.scale(q.numer()), self.den.scale(q.denom()))
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() {
            return Self::from_laurent(self.num.scale(c));
        }
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// Exact value at `v = 1`. Since the form is reduced, a vanishing
    /// denominator is a genuine pole.
    pub fn eval_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne(self.to_string()));
        }
        Ok(BigRational::new(self.num.eval_at_one(), d))
    }

    /// Numerator and denominator shifted to nonnegative exponents, as printed.
    fn print_parts(&self) -> (LaurentPoly, LaurentPoly) {
        match self.num.valuation() {
            Some(e) if e < 0 => (self.num.shift(-e), self.den.shift(-e)),
            _ => (self.num.clone(), self.den.clone()),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.print_parts();
        if den.is_one() {
            return num.fmt_dense(f);
        }
        let wrap = |p: &LaurentPoly, bare: bool, f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if bare {
                p.fmt_dense(f)
            } else {
                f.write_str("(")?;
                p.fmt_dense(f)?;
                f.write_str(")")
            }
        };
        // a single-term numerator binds left-to-right; a denominator stays
        // bare only if it is an integer or a plain power of v
        wrap(&num, num.num_terms() == 1, f)?;
        f.write_str("/")?;
        let den_bare = den.is_constant() || (den.is_monomial() && den.leading_coeff().unwrap().is_one());
        wrap(&den, den_bare, f)
    }
}

impl FromStr for RatFun {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse(s)
    }
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for RatFun {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

fn add_sub(a: &RatFun, b: &RatFun, sub: bool) -> RatFun {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if sub { -b } else { b.clone() };
    }
    let combine = |x: &LaurentPoly, y: &LaurentPoly| if sub { x - y } else { x + y };
    if a.den == b.den {
        let num = combine(&a.num, &b.num);
        if a.den.is_one() {
            return RatFun::from_laurent(num);
        }
        return RatFun::normalized(num, a.den.clone());
    }
    let num = combine(&(&a.num * &b.den), &(&b.num * &a.den));
    RatFun::normalized(num, &a.den * &b.den)
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        add_sub(self, rhs, false)
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        add_sub(self, rhs, true)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_laurent(&self.num * &rhs.num);
        }
        RatFun::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                self.$m(&rhs)
            }
        }
        impl $atr<&RatFun> for RatFun {
            fn $am(&mut self, rhs: &RatFun) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<RatFun> for RatFun {
            fn $am(&mut self, rhs: RatFun) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}
forward_owned!(Add, add, AddAssign, add_assign);
forward_owned!(Sub, sub, SubAssign, sub_assign);
forward_owned!(Mul, mul, MulAssign, mul_assign);

impl Sum for RatFun {
    fn sum<I: Iterator<Item = RatFun>>(iter: I) -> RatFun {
        iter.fold(RatFun::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a RatFun> for RatFun {
    fn sum<I: Iterator<Item = &'a RatFun>>(iter: I) -> RatFun {
        iter.fold(RatFun::zero(), |a, b| a + b)
    }
}
