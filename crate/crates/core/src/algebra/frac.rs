//! Polynomials divided by a monomial.
//!
//! Structure constants of some families carry powers of a parameter that is
//! assumed nonzero in their denominators. A `Frac` keeps those exact without
//! a general rational-function field: the denominator is always a monomial
//! coprime to the monomial content of the numerator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{Assignment, Monomial, Poly, Var};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Frac {
    num: Poly,
    den: Monomial,
}

impl Frac {
    pub fn new(num: Poly, den: Monomial) -> Self {
        let mut f = Frac { num, den };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Monomial::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let g = self.num.monomial_content().gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_monomial(&g).expect("gcd divides numerator");
            self.den = self.den.checked_div(&g).expect("gcd divides denominator");
        }
    }

    pub fn zero() -> Self {
        Frac::default()
    }

    pub fn one() -> Self {
        Poly::one().into()
    }

    pub fn int(c: i64) -> Self {
        Poly::int(c).into()
    }

    pub fn constant(c: Rational) -> Self {
        Poly::constant(c).into()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Monomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> Frac {
        Frac::new(self.num.scale(c), self.den.clone())
    }

    /// Divide by a monomial.
    pub fn div_monomial(&self, m: &Monomial) -> Frac {
        Frac::new(self.num.clone(), self.den.mul(m))
    }

    /// `self * m` as a polynomial when `m` clears the denominator.
    pub fn times_monomial(&self, m: &Monomial) -> Option<Poly> {
        let k = m.checked_div(&self.den)?;
        Some(self.num.mul_monomial(&k))
    }

    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.factors().map(|(x, _)| x));
        v
    }

    pub fn eval(&self, point: &Assignment) -> Result<Rational> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::Degenerate(self.den.to_string()));
        }
        Ok(self.num.eval(point)? / d)
    }

    /// Substitute assigned variables, keeping the rest symbolic.
    pub fn partial_eval(&self, point: &Assignment) -> Result<Frac> {
        let num = self.num.partial_eval(point);
        let mut den_const = Rational::one();
        let mut den = Monomial::one();
        for (v, e) in self.den.factors() {
            match point.get(&v) {
                Some(x) => den_const *= num_traits::pow(x.clone(), e as usize),
                None => den = den.mul(&Monomial::var_pow(v, e)),
            }
        }
        if den_const.is_zero() {
            return Err(Error::Degenerate(self.den.to_string()));
        }
        Ok(Frac::new(num.scale(&(Rational::one() / den_const)), den))
    }

    pub fn pow(&self, e: u32) -> Frac {
        let mut acc = Frac::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

/// Substitute every variable of `p` by a `Frac`; unmapped variables stay as they are.
pub fn substitute(p: &Poly, map: &std::collections::BTreeMap<Var, Frac>) -> Frac {
    let mut out = Frac::zero();
    for (m, c) in p.terms() {
        let mut t = Frac::constant(c.clone());
        for (v, e) in m.factors() {
            let base = match map.get(&v) {
                Some(f) => f.clone(),
                None => Frac::from(Poly::term(Rational::one(), Monomial::var(v))),
            };
            t = &t * &base.pow(e);
        }
        out = &out + &t;
    }
    out
}

impl From<Poly> for Frac {
    fn from(num: Poly) -> Self {
        Frac { num, den: Monomial::one() }
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() == 1 {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl Add for &Frac {
    type Output = Frac;
    fn add(self, rhs: &Frac) -> Frac {
        if self.den == rhs.den {
            return Frac::new(&self.num + &rhs.num, self.den.clone());
        }
        let l = self.den.lcm(&rhs.den);
        let a = self.num.mul_monomial(&l.checked_div(&self.den).expect("lcm"));
        let b = rhs.num.mul_monomial(&l.checked_div(&rhs.den).expect("lcm"));
        Frac::new(a + b, l)
    }
}

impl Sub for &Frac {
    type Output = Frac;
    fn sub(self, rhs: &Frac) -> Frac {
        self + &(-rhs)
    }
}

impl Mul for &Frac {
    type Output = Frac;
    fn mul(self, rhs: &Frac) -> Frac {
        if self.is_zero() || rhs.is_zero() {
            return Frac::zero();
        }
        Frac::new(&self.num * &rhs.num, self.den.mul(&rhs.den))
    }
}

impl Neg for &Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Frac {
            type Output = Frac;
            fn $f(self, rhs: Frac) -> Frac {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Frac> for Frac {
            type Output = Frac;
            fn $f(self, rhs: &Frac) -> Frac {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
