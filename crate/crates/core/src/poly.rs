//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored lowest degree first with no trailing zeros; the zero
//! polynomial is the empty list and reports degree `None`.

use crate::scalar::Scalar;
use num::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct Poly<F: Scalar> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Poly<F> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Poly::from_coeffs(vec![F::zero(), F::one()])
    }

    /// c * x^d
    pub fn monomial(c: F, d: usize) -> Self {
        let mut coeffs = vec![F::zero(); d + 1];
        coeffs[d] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::from_coeffs(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as i64 with zero mapped to -1, for size arithmetic only.
    pub(crate) fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Coefficient of x^d (zero when absent).
    pub fn coeff(&self, d: usize) -> F {
        self.coeffs.get(d).cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Evaluate into any field given an embedding of the coefficients.
    pub fn eval_map<G: Scalar>(&self, x: &G, embed: impl Fn(&F) -> G) -> G {
        let mut acc = G::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + embed(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.clone() * F::from_i64(i as i64 + 1))
                .collect(),
        )
    }

    /// p(x + c) for a scalar shift c, via Horner in (x + c).
    pub fn shift_by(&self, c: &F) -> Self {
        let mut acc = Poly::zero();
        for a in self.coeffs.iter().rev() {
            // acc = acc * (x + c) + a
            let mut next = acc.mul_shifted(c);
            if !a.is_zero() {
                next = next + Poly::constant(a.clone());
            }
            acc = next;
        }
        acc
    }

    /// p(x + i) for an integer shift.
    pub fn shift(&self, i: i64) -> Self {
        if i == 0 {
            return self.clone();
        }
        self.shift_by(&F::from_i64(i))
    }

    /// self * (x + c)
    fn mul_shifted(&self, c: &F) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] = out[i + 1].clone() + a.clone();
            out[i] = out[i].clone() + a.clone() * c.clone();
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; panics if `div` is zero.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        let dd = div.degree().expect("division by zero polynomial");
        if self.degree().map_or(true, |d| d < dd) {
            return (Poly::zero(), self.clone());
        }
        let dlc = div.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![F::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].clone() / dlc.clone();
            if !c.is_zero() {
                quo[k - dd] = c.clone();
                for (j, dc) in div.coeffs.iter().enumerate() {
                    rem[k - dd + j] = rem[k - dd + j].clone() - c.clone() * dc.clone();
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (Poly::from_coeffs(quo), Poly::from_coeffs(rem))
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.divrem(div).1
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.divrem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*other = g, g monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (Poly::zero(), Poly::zero(), Poly::zero());
        }
        let lc = r0.leading_coeff().unwrap().inv();
        (r0.scale(&lc), s0.scale(&lc), t0.scale(&lc))
    }

    /// Solve x*a + y*b = c for coprime a, b with deg x < deg b.
    /// Panics if gcd(a, b) does not divide c.
    pub fn solve_diophantine(a: &Self, b: &Self, c: &Self) -> (Self, Self) {
        let (g, s, _t) = a.ext_gcd(b);
        let c_red = c.div_exact(&g);
        // x = s*c mod b, y = (c - x*a)/b
        let x = (&s * &c_red).rem(b);
        let y = (c - &(&x * a)).div_exact(b);
        (x, y)
    }

    /// Resultant of self and other.
    pub fn resultant(&self, other: &Self) -> F {
        fn res<F: Scalar>(a: &Poly<F>, b: &Poly<F>) -> F {
            let da = a.deg_i();
            let db = b.deg_i();
            if da < 0 || db < 0 {
                return F::zero();
            }
            if db == 0 {
                return pow_scalar(b.coeffs[0].clone(), da as u32);
            }
            if da < db {
                let sign = if (da * db) % 2 == 1 {
                    -F::one()
                } else {
                    F::one()
                };
                return sign * res(b, a);
            }
            let r = a.rem(b);
            let dr = r.deg_i();
            if dr < 0 {
                return F::zero();
            }
            let sign = if (da * db) % 2 == 1 {
                -F::one()
            } else {
                F::one()
            };
            sign * pow_scalar(b.leading_coeff().unwrap().clone(), (da - dr) as u32) * res(b, &r)
        }
        res(self, other)
    }

    /// Lagrange interpolation through (x_i, y_i) with distinct x_i.
    pub fn interpolate(points: &[(F, F)]) -> Self {
        let mut acc = Poly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut num = Poly::constant(yi.clone());
            let mut den = F::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                num = num.mul_shifted(&-xj.clone());
                den = den * (xi.clone() - xj.clone());
            }
            acc = acc + num.scale(&den.inv());
        }
        acc
    }

    /// A polynomial f with f(x+1) - f(x) = self, and f(0) = 0.
    pub fn antidifference(&self) -> Self {
        let mut f = Poly::zero();
        let mut rem = self.clone();
        while let Some(d) = rem.degree() {
            // delta(x^{d+1}) = (d+1) x^d + lower order terms
            let lead = rem.coeffs[d].clone() / F::from_i64(d as i64 + 1);
            let m = Poly::monomial(lead, d + 1);
            rem = rem - (m.shift(1) - m.clone());
            f = f + m;
            debug_assert!(rem.degree().map_or(true, |dr| dr < d));
        }
        f
    }

    /// Render with a variable name: expanded, decreasing degree, explicit * and ^.
    pub fn to_text(&self, var: &str) -> String {
        self.to_text2(var, "n")
    }

    /// Render with explicit names for the main variable and the coefficient
    /// field's parameter variable.
    pub fn to_text2(&self, var: &str, param: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = if c.needs_parens() {
                (false, format!("({})", c.coeff_text(param)))
            } else {
                let s = c.coeff_text(param);
                match s.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, s),
                }
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let is_unit = body == "1";
            match d {
                0 => out.push_str(&body),
                1 if is_unit => out.push_str(var),
                1 => out.push_str(&format!("{body}*{var}")),
                _ if is_unit => out.push_str(&format!("{var}^{d}")),
                _ => out.push_str(&format!("{body}*{var}^{d}")),
            }
        }
        out
    }
}

fn pow_scalar<F: Scalar>(base: F, e: u32) -> F {
    let mut acc = F::one();
    for _ in 0..e {
        acc = acc * base.clone();
    }
    acc
}

impl<F: Scalar> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("k"))
    }
}

impl<F: Scalar> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("k"))
    }
}

impl<F: Scalar> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            out.push(a + b);
        }
        Poly::from_coeffs(out)
    }
}

impl<F: Scalar> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            out.push(a - b);
        }
        Poly::from_coeffs(out)
    }
}

impl<F: Scalar> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<F: Scalar> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_ops {
    ($t:ident) => {
        impl<F: Scalar> Add for $t<F> {
            type Output = $t<F>;
            fn add(self, rhs: $t<F>) -> $t<F> {
                &self + &rhs
            }
        }
        impl<F: Scalar> Sub for $t<F> {
            type Output = $t<F>;
            fn sub(self, rhs: $t<F>) -> $t<F> {
                &self - &rhs
            }
        }
        impl<F: Scalar> Mul for $t<F> {
            type Output = $t<F>;
            fn mul(self, rhs: $t<F>) -> $t<F> {
                &self * &rhs
            }
        }
        impl<F: Scalar> Neg for $t<F> {
            type Output = $t<F>;
            fn neg(self) -> $t<F> {
                -&self
            }
        }
    };
}

owned_ops!(Poly);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, BigRat};

    type P = Poly<BigRat>;

    #[test]
    fn degree_of_zero_is_none() {
        assert_eq!(P::zero().degree(), None);
        assert_eq!(P::from_ints(&[0, 0]).degree(), None);
        assert_eq!(P::from_ints(&[5]).degree(), Some(0));
    }

    #[test]
    fn shift_binomial_expansion() {
        // (k^2 + 1) shifted by 1 is k^2 + 2k + 2
        let p = P::from_ints(&[1, 0, 1]);
        assert_eq!(p.shift(1), P::from_ints(&[2, 2, 1]));
        assert_eq!(p.shift(0), p);
        assert_eq!(p.shift(3).shift(-3), p);
    }

    #[test]
    fn divrem_and_gcd() {
        let a = P::from_ints(&[-1, 0, 1]); // k^2 - 1
        let b = P::from_ints(&[1, 1]); // k + 1
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, P::from_ints(&[-1, 1]));
        assert_eq!(a.gcd(&b), b.monic());
        let (g, s, t) = a.ext_gcd(&P::from_ints(&[1, 0, 1]));
        assert_eq!(g, P::one());
        let lhs = &(&s * &a) + &(&t * &P::from_ints(&[1, 0, 1]));
        assert_eq!(lhs, P::one());
    }

    #[test]
    fn resultant_matches_root_product() {
        // res(k^2 - 1, k - 2) = (2^2 - 1) = 3 up to sign conventions
        let a = P::from_ints(&[-1, 0, 1]);
        let b = P::from_ints(&[-2, 1]);
        let r = a.resultant(&b);
        assert_eq!(r, int(3));
    }

    #[test]
    fn antidifference_telescopes() {
        let p = P::from_ints(&[3, 1, 4, 0, 2]);
        let f = p.antidifference();
        assert_eq!(&f.shift(1) - &f, p);
    }

    #[test]
    fn interpolation_recovers() {
        let p = P::from_coeffs(vec![rat(1, 2), int(-3), int(1)]);
        let pts: Vec<_> = (0..3).map(|i| (int(i), p.eval(&int(i)))).collect();
        assert_eq!(P::interpolate(&pts), p);
    }

    #[test]
    fn text_form() {
        let p = P::from_coeffs(vec![rat(1, 2), int(-3), int(2)]);
        assert_eq!(p.to_text("k"), "2*k^2 - 3*k + 1/2");
        assert_eq!(P::zero().to_text("k"), "0");
        assert_eq!(P::from_ints(&[0, 1]).to_text("n"), "n");
    }
}
