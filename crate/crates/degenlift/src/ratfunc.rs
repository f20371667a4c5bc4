//! Rational functions in canonical reduced form.
//!
//! Invariant: the denominator is integer-primitive with positive leading
//! coefficient under the graded-lex order, and shares no factor with the
//! numerator. Equality of values is therefore equality of representations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let den_canon = den.canonical();
        // den = k * den_canon for a nonzero rational k; fold k into num.
        let k = {
            let (m, c) = den.leading().expect("nonzero denominator");
            &(c.clone()) / &den_canon.coeff_of(m)
        };
        Ok(RatFunc {
            num: num.scale(&k.recip()?),
            den: den_canon,
        })
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_rat(Rat::from_int(n))
    }

    pub fn var(name: &str) -> Self {
        RatFunc::from_poly(Poly::var(name))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Constant value if the function is a rational number.
    pub fn as_rat(&self) -> Option<Rat> {
        if !self.den.is_constant() {
            return None;
        }
        let d = self.den.as_constant()?;
        let n = self.num.as_constant()?;
        Some(&n / &d)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn inv(&self) -> Result<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Normalized numerator in canonical generator form (primitive integer
    /// coefficients, positive leading coefficient).
    pub fn vanishing_condition(&self) -> Poly {
        self.num.canonical()
    }

    /// Substitutes rational constants for the listed variables.
    pub fn eval_map(&self, vals: &BTreeMap<Var, Rat>) -> Result<RatFunc> {
        RatFunc::new(self.num.eval_map(vals), self.den.eval_map(vals))
    }

    /// Substitutes rational functions for the listed variables.
    pub fn subst_map(&self, vals: &BTreeMap<Var, RatFunc>) -> Result<RatFunc> {
        let n = poly_eval_ratfunc(&self.num, vals);
        let d = poly_eval_ratfunc(&self.den, vals);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(&n / &d)
    }

    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }
}

/// Evaluates a polynomial with rational-function values for some variables;
/// unlisted variables stay symbolic.
pub fn poly_eval_ratfunc(p: &Poly, vals: &BTreeMap<Var, RatFunc>) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (m, c) in p.terms() {
        let mut term = RatFunc::from_rat(c.clone());
        let mut kept: Vec<(Var, u32)> = Vec::new();
        for (v, e) in m.pairs() {
            match vals.get(v) {
                Some(val) => {
                    let mut pw = RatFunc::one();
                    for _ in 0..*e {
                        pw = &pw * val;
                    }
                    term = &term * &pw;
                }
                None => kept.push((v.clone(), *e)),
            }
        }
        if !kept.is_empty() {
            let mono = crate::poly::Mono::from_pairs(kept);
            term = &term * &RatFunc::from_poly(Poly::term(Rat::one(), mono));
        }
        acc = &acc + &term;
    }
    acc
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den).expect("product of nonzero denominators")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("nonzero denominator")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.num_terms() > 1 {
            format!("({})", self.num)
        } else {
            format!("{}", self.num)
        };
        let den = if self.den.num_terms() > 1 {
            format!("({})", self.den)
        } else {
            format!("{}", self.den)
        };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s, None).unwrap()
    }

    fn rf(n: &str, d: &str) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn reduces_scalars() {
        assert_eq!(rf("2*x", "4"), rf("x", "2"));
        assert_eq!(rf("2*x", "4").to_string(), "1/2*x");
    }

    #[test]
    fn cancels_common_factor() {
        assert_eq!(rf("x^2-1", "x-1"), RatFunc::from_poly(p("x+1")));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RatFunc::new(p("1"), Poly::zero()),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn kuranishi_sum_normal_form() {
        // (a+b+2)/(4+a) + (a+b-2)/2 has normalized numerator
        // a^2 + a*b + 4*a + 6*b - 4, the worked vanishing condition.
        let s = &rf("a+b+2", "4+a") + &rf("a+b-2", "2");
        assert_eq!(s.vanishing_condition(), p("a^2 + a*b + 4*a + 6*b - 4"));
        assert_eq!(s.denom(), &p("a + 4"));
    }

    #[test]
    fn canonical_denominator_sign() {
        let r = rf("1", "-x + 1");
        assert_eq!(r.denom(), &p("x - 1"));
        assert_eq!(r.numer(), &p("-1"));
    }

    #[test]
    fn subst_map_values() {
        let r = rf("a+b+2", "4+a");
        let vals: BTreeMap<Var, Rat> =
            [(Var::new("a"), Rat::zero()), (Var::new("b"), Rat::from_int(1))]
                .into_iter()
                .collect();
        assert_eq!(r.eval_map(&vals).unwrap().as_rat(), Some(Rat::from_frac(3, 4)));
    }
}
