//! Rational functions over an exact field, kept reduced with monic denominator.

use crate::poly::Poly;
use crate::scalar::{BigRat, Scalar};
use num::Zero;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct RatFunc<F: Scalar> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Scalar> RatFunc<F> {
    /// Build from numerator and denominator, reducing to lowest terms.
    /// Panics if `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lc = den.leading_coeff().unwrap().inv();
        den = den.scale(&lc);
        num = num.scale(&lc);
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn constant(c: F) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        RatFunc::from_poly(Poly::var())
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly<F>> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverting zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Shift of the main variable by an integer.
    pub fn shift(&self, i: i64) -> Self {
        if i == 0 {
            return self.clone();
        }
        // shifting preserves coprimality; renormalize the leading unit only
        RatFunc::new(self.num.shift(i), self.den.shift(i))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(n, &self.den * &self.den)
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Split into polynomial part and proper fraction: self = poly + num/den.
    pub fn split_proper(&self) -> (Poly<F>, RatFunc<F>) {
        let (q, r) = self.num.divrem(&self.den);
        (
            q,
            RatFunc {
                num: r,
                den: self.den.clone(),
            },
        )
    }

    pub fn to_text(&self, var: &str) -> String {
        self.to_text2(var, "n")
    }

    pub fn to_text2(&self, var: &str, param: &str) -> String {
        if self.den.is_one() {
            return self.num.to_text2(var, param);
        }
        let n = self.num.to_text2(var, param);
        let d = self.den.to_text2(var, param);
        let nw = if self.num.degree().map_or(false, |deg| deg > 0) || n.starts_with('-') {
            format!("({n})")
        } else {
            n
        };
        let dw = if self.den.degree().map_or(false, |deg| deg > 0) || d.contains('*') || d.contains('/') {
            format!("({d})")
        } else {
            d
        };
        format!("{nw}/{dw}")
    }
}

impl RatFunc<BigRat> {
    /// Constant rational function from an integer pair.
    pub fn from_int(v: i64) -> Self {
        RatFunc::constant(BigRat::from_i64(v))
    }
}

impl<F: Scalar> Add for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        let g = self.den.gcd(&rhs.den);
        let (da, db) = (self.den.div_exact(&g), rhs.den.div_exact(&g));
        let num = &(&self.num * &db) + &(&rhs.num * &da);
        let den = &(&self.den * &db);
        RatFunc::new(num, den.clone())
    }
}

impl<F: Scalar> Sub for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        self + &(-rhs)
    }
}

impl<F: Scalar> Mul for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        // cross-cancel first to keep intermediate products small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let d = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        RatFunc::new(n, d)
    }
}

impl<F: Scalar> Div for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn div(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        self * &rhs.inv()
    }
}

impl<F: Scalar> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: Scalar> Add for RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: RatFunc<F>) -> RatFunc<F> {
        &self + &rhs
    }
}

impl<F: Scalar> Sub for RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: RatFunc<F>) -> RatFunc<F> {
        &self - &rhs
    }
}

impl<F: Scalar> Mul for RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: RatFunc<F>) -> RatFunc<F> {
        &self * &rhs
    }
}

impl<F: Scalar> Div for RatFunc<F> {
    type Output = RatFunc<F>;
    fn div(self, rhs: RatFunc<F>) -> RatFunc<F> {
        &self / &rhs
    }
}

impl<F: Scalar> Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        -&self
    }
}

impl<F: Scalar> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("k"))
    }
}

impl<F: Scalar> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("k"))
    }
}

// RatFunc over a Scalar is itself a Scalar, so Poly<RatFunc<BigRat>> models
// the ring Q(n)[k] used by the bivariate layer.
impl<F: Scalar> Zero for RatFunc<F> {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl<F: Scalar> num::One for RatFunc<F> {
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
}

impl<F: Scalar> Scalar for RatFunc<F> {
    fn from_i64(v: i64) -> Self {
        RatFunc::constant(F::from_i64(v))
    }

    fn from_rat(v: &BigRat) -> Self {
        RatFunc::constant(F::from_rat(v))
    }

    fn to_rat(&self) -> Option<BigRat> {
        if !self.den.is_one() || self.num.degree().map_or(false, |d| d > 0) {
            return None;
        }
        if self.num.is_zero() {
            return Some(BigRat::zero());
        }
        self.num.coeff(0).to_rat()
    }

    fn inv(&self) -> Self {
        RatFunc::inv(self)
    }

    fn needs_parens(&self) -> bool {
        self.to_rat().is_none()
    }

    fn coeff_text(&self, param: &str) -> String {
        match self.to_rat() {
            Some(r) => r.to_string(),
            None => self.to_text(param),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::QPoly;

    type R = RatFunc<BigRat>;

    #[test]
    fn reduced_and_monic() {
        // (2k + 2)/(4k) reduces to (k + 1)/(2k) with monic denominator
        let r = R::new(QPoly::from_ints(&[2, 2]), QPoly::from_ints(&[0, 4]));
        assert_eq!(r.denom(), &QPoly::from_ints(&[0, 1]));
        assert_eq!(r.numer().coeff(0), num::rational::Ratio::new(1.into(), 2.into()));
    }

    #[test]
    fn shift_example() {
        // 1/(2k+1) shifted by 1 is 1/(2k+3); stored monic as (1/2)/(k+3/2)
        let r = R::new(QPoly::one(), QPoly::from_ints(&[1, 2]));
        let s = r.shift(1);
        let expect = R::new(QPoly::one(), QPoly::from_ints(&[3, 2]));
        assert_eq!(s, expect);
        assert_eq!(s.shift(-1), r);
    }

    #[test]
    fn arithmetic_keeps_invariants() {
        let a = R::new(QPoly::from_ints(&[1, 1]), QPoly::from_ints(&[0, 2]));
        let b = R::new(QPoly::from_ints(&[0, 1]), QPoly::from_ints(&[1, 1]));
        for r in [&a + &b, &a - &b, &a * &b, &a / &b] {
            assert!(r.denom().leading_coeff().map_or(true, |c| c.is_one()));
            assert!(r.numer().gcd(r.denom()).is_one() || r.is_zero());
        }
    }

    #[test]
    fn nested_scalar() {
        // a polynomial in k with coefficients in Q(n)
        use crate::{NkPoly, NRat};
        let c = NRat::new(QPoly::from_ints(&[1, 1]), QPoly::from_ints(&[2, 1]));
        let p = NkPoly::from_coeffs(vec![c.clone(), NRat::one()]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.to_text2("k", "n"), "k + ((n + 1)/(n + 2))");
        assert_eq!(c.eval(&NRat::constant(int(0))), Some(NRat::constant(rat(1, 2))));
    }
}
