use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in `v` with integer coefficients.
///
/// Stored densely: `coeffs[k]` is the coefficient of `v^(low + k)`. The
/// vector is trimmed so that the first and last entries are nonzero; the zero
/// polynomial is the empty vector with `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    /// Builds `sum_k coeffs[k] v^(low + k)`, trimming zeros at both ends.
    pub fn from_coeffs(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        Self {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for zero and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero terms as `(exponent, coefficient)`, increasing exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub(crate) fn shifted(mut self, k: i64) -> Self {
        if !self.is_zero() {
            self.low += k;
        }
        self
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Gcd of the absolute values of the coefficients (zero for zero).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub(crate) fn div_scalar_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at an integer point, only meaningful for nonnegative exponents.
    pub fn eval_int(&self, x: &BigInt) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.low < 0 {
            return None;
        }
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Some(acc * x.pow(self.low as u32))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self` shifted so that its lowest exponent is zero, together with the
    /// shift removed.
    pub(crate) fn split_v_power(&self) -> (i64, Self) {
        if self.is_zero() {
            return (0, Self::zero());
        }
        (
            self.low,
            Self {
                low: 0,
                coeffs: self.coeffs.clone(),
            },
        )
    }

    /// Exact quotient of polynomials (both with `low == 0`), `divisor` must
    /// divide `self` over Z.
    pub(crate) fn div_exact(&self, divisor: &Self) -> Self {
        debug_assert!(self.low >= 0 && divisor.low == 0);
        if divisor.is_one() {
            return self.clone();
        }
        let mut rem: Vec<BigInt> = {
            let mut r = vec![BigInt::zero(); self.low as usize];
            r.extend(self.coeffs.iter().cloned());
            r
        };
        let dlen = divisor.coeffs.len();
        if rem.len() < dlen {
            debug_assert!(self.is_zero());
            return Self::zero();
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            debug_assert!(r.is_zero(), "inexact polynomial division");
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Self::from_coeffs(0, quot)
    }

    fn primitive(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        let mut p = self.div_scalar_exact(&c);
        if p.leading_coeff().is_some_and(|l| l.is_negative()) {
            p = -p;
        }
        p
    }

    /// Primitive gcd in Z[v] of two polynomials with `low == 0` that are not
    /// divisible by `v`, normalized to a positive leading coefficient.
    pub(crate) fn poly_gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        if a.is_constant() || b.is_constant() {
            return Self::one();
        }
        let (mut a, mut b) = (a.primitive(), b.primitive());
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return Self::one();
            }
            // the gcd is prime to v, so powers of v can be dropped
            let r = Self::pseudo_rem(&a, &b).split_v_power().1;
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    fn pseudo_rem(a: &Self, b: &Self) -> Self {
        let mut r: Vec<BigInt> = {
            let mut r = vec![BigInt::zero(); a.low as usize];
            r.extend(a.coeffs.iter().cloned());
            r
        };
        let blen = b.coeffs.len();
        let lb = b.coeffs.last().unwrap();
        while r.len() >= blen {
            let lr = r.last().unwrap().clone();
            let off = r.len() - blen;
            for c in r.iter_mut() {
                *c *= lb;
            }
            for (j, d) in b.coeffs.iter().enumerate() {
                r[off + j] -= &lr * d;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Self::from_coeffs(0, r)
    }

    /// Dense human-readable form in decreasing exponent, e.g. `2*v^2 - v + 1`.
    pub(crate) fn fmt_dense(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if e == 1 {
                        f.write_str("v")?;
                    } else {
                        write!(f, "v^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_dense(f)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

fn add_impl(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.low.min(b.low);
    let hi = a.degree().unwrap().max(b.degree().unwrap());
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (k, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - lo) as usize + k] += c;
    }
    for (k, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - lo) as usize + k];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_coeffs(lo, coeffs)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_impl(self, rhs, false)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_impl(self, rhs, true)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn trimming_and_zero() {
        assert!(p(3, &[0, 0]).is_zero());
        let q = p(-1, &[0, 2, 0]);
        assert_eq!(q.valuation(), Some(0));
        assert_eq!(q.degree(), Some(0));
        assert!(q.is_constant());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (v^2 - 1) and (v^3 - 1) share v - 1
        let a = p(0, &[-1, 0, 1]);
        let b = p(0, &[-1, 0, 0, 1]);
        assert_eq!(LaurentPoly::poly_gcd(&a, &b), p(0, &[-1, 1]));
        // non-primitive inputs: 2(v+1), 4(v+1)(v-1)
        let a = p(0, &[2, 2]);
        let b = p(0, &[-4, 0, 4]);
        assert_eq!(LaurentPoly::poly_gcd(&a, &b), p(0, &[1, 1]));
    }

    #[test]
    fn gcd_contains_common_factor() {
        // small polynomials with nonzero constant term, including pairs whose
        // pseudo-remainders are divisible by v
        let polys: Vec<LaurentPoly> = [[1, 1, 0], [2, 0, 1], [1, -1, 1], [3, 1, 0], [1, 0, 2], [-1, 2, 1]]
            .iter()
            .map(|c| p(0, c))
            .collect();
        for f in &polys {
            for g in &polys {
                for h in &polys {
                    let (a, b) = (f * g, f * h);
                    let d = LaurentPoly::poly_gcd(&a, &b);
                    assert_eq!(d.valuation(), Some(0));
                    let q = d.div_exact(&f.primitive());
                    assert_eq!(&q * &f.primitive(), d);
                    let (qa, qb) = (a.div_exact(&d), b.div_exact(&d));
                    assert!(LaurentPoly::poly_gcd(&qa, &qb).is_one());
                }
            }
        }
    }

    #[test]
    fn exact_division() {
        let a = p(0, &[-1, 0, 0, 1]);
        let b = p(0, &[-1, 1]);
        assert_eq!(a.div_exact(&b), p(0, &[1, 1, 1]));
    }

    #[test]
    fn dense_printing() {
        assert_eq!(p(0, &[1, -1, 0, 2]).to_string(), "2*v^3 - v + 1");
        assert_eq!(p(1, &[-1]).to_string(), "-v");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
