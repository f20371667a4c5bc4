//! Truncated power series in the distinguished variables `s` and `t`.
//!
//! A series carries its truncation orders explicitly; binary operations on
//! mismatched truncations fail instead of silently truncating, so every
//! order appearing in an obstruction computation is auditable. Coefficients
//! are rational functions in the remaining (ambient, parameter, unknown)
//! variables.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::ratfunc::RatFunc;

pub const VAR_S: &str = "s";
pub const VAR_T: &str = "t";

/// Truncation orders for the distinguished variables. `None` means the
/// variable is not distinguished and must not occur.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Trunc {
    pub s: Option<u32>,
    pub t: Option<u32>,
}

impl Trunc {
    pub fn s_only(n: u32) -> Self {
        Trunc {
            s: Some(n),
            t: None,
        }
    }

    pub fn st(ns: u32, nt: u32) -> Self {
        Trunc {
            s: Some(ns),
            t: Some(nt),
        }
    }

    fn admits(&self, i: u32, j: u32) -> bool {
        i <= self.s.unwrap_or(0) && j <= self.t.unwrap_or(0)
    }
}

impl fmt::Display for Trunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.s, self.t) {
            (Some(a), Some(b)) => write!(f, "(s^{a}, t^{b})"),
            (Some(a), None) => write!(f, "(s^{a})"),
            (None, Some(b)) => write!(f, "(t^{b})"),
            (None, None) => write!(f, "()"),
        }
    }
}

/// Truncated power series; keys are `(s-order, t-order)`, stored
/// coefficients are nonzero and within truncation.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    trunc: Trunc,
    coeffs: BTreeMap<(u32, u32), RatFunc>,
}

impl Series {
    pub fn zero(trunc: Trunc) -> Self {
        Series {
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: RatFunc, trunc: Trunc) -> Self {
        let mut s = Series::zero(trunc);
        s.set_coeff(0, 0, c);
        s
    }

    pub fn var_s(trunc: Trunc) -> Result<Self> {
        if trunc.s.is_none() {
            return Err(Error::TruncationMismatch(
                "s is not distinguished here".into(),
            ));
        }
        let mut out = Series::zero(trunc);
        out.set_coeff(1, 0, RatFunc::one());
        Ok(out)
    }

    pub fn var_t(trunc: Trunc) -> Result<Self> {
        if trunc.t.is_none() {
            return Err(Error::TruncationMismatch(
                "t is not distinguished here".into(),
            ));
        }
        let mut out = Series::zero(trunc);
        out.set_coeff(0, 1, RatFunc::one());
        Ok(out)
    }

    pub fn trunc(&self) -> Trunc {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> RatFunc {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn set_coeff(&mut self, i: u32, j: u32, c: RatFunc) {
        if !self.trunc.admits(i, j) || c.is_zero() {
            self.coeffs.remove(&(i, j));
        } else {
            self.coeffs.insert((i, j), c);
        }
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&(u32, u32), &RatFunc)> {
        self.coeffs.iter()
    }

    /// Coefficients of `t^j` as a list of `(s-order, coefficient)`.
    pub fn t_slice(&self, j: u32) -> Vec<(u32, RatFunc)> {
        self.coeffs
            .iter()
            .filter(|((_, jj), _)| *jj == j)
            .map(|((i, _), c)| (*i, c.clone()))
            .collect()
    }

    /// The `t = 0` slice; `t` is no longer distinguished in the result.
    pub fn eval_t_zero(&self) -> Series {
        let trunc = Trunc {
            s: self.trunc.s,
            t: None,
        };
        let mut out = Series::zero(trunc);
        for ((i, j), c) in &self.coeffs {
            if *j == 0 {
                out.set_coeff(*i, 0, c.clone());
            }
        }
        out
    }

    fn check_compatible(&self, other: &Series) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(Error::TruncationMismatch(format!(
                "{} vs {}",
                self.trunc, other.trunc
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for ((i, j), c) in &other.coeffs {
            let sum = &out.coeff(*i, *j) + c;
            out.set_coeff(*i, *j, sum);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (*k, -c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Series {
        if c.is_zero() {
            return Series::zero(self.trunc);
        }
        Series {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_compatible(other)?;
        let mut out = Series::zero(self.trunc);
        for ((i1, j1), c1) in &self.coeffs {
            for ((i2, j2), c2) in &other.coeffs {
                let (i, j) = (i1 + i2, j1 + j2);
                if out.trunc.admits(i, j) {
                    let sum = &out.coeff(i, j) + &(c1 * c2);
                    out.set_coeff(i, j, sum);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Series> {
        let mut acc = Series::constant(RatFunc::one(), self.trunc);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse up to truncation. The constant coefficient
    /// must be a nonzero rational function.
    pub fn invert(&self) -> Result<Series> {
        let u0 = self.coeff(0, 0);
        if u0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let u0_inv = u0.inv()?;
        let ns = self.trunc.s.unwrap_or(0);
        let nt = self.trunc.t.unwrap_or(0);
        let mut out = Series::zero(self.trunc);
        out.set_coeff(0, 0, u0_inv.clone());
        for i in 0..=ns {
            for j in 0..=nt {
                if i == 0 && j == 0 {
                    continue;
                }
                // v_ij = -u00^{-1} * sum_{(k,l) < (i,j)} u_{i-k,j-l} v_{kl}
                let mut acc = RatFunc::zero();
                for k in 0..=i {
                    for l in 0..=j {
                        if k == i && l == j {
                            continue;
                        }
                        let u = self.coeff(i - k, j - l);
                        if u.is_zero() {
                            continue;
                        }
                        let v = out.coeff(k, l);
                        if v.is_zero() {
                            continue;
                        }
                        acc = &acc + &(&u * &v);
                    }
                }
                out.set_coeff(i, j, -&(&u0_inv * &acc));
            }
        }
        Ok(out)
    }

    /// Applies a map to every coefficient (dropping resulting zeros).
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> Result<RatFunc>) -> Result<Series> {
        let mut out = Series::zero(self.trunc);
        for ((i, j), c) in &self.coeffs {
            out.set_coeff(*i, *j, f(c)?);
        }
        Ok(out)
    }
}

/// Substitutes series for polynomial variables; unbound variables stay
/// symbolic inside the coefficients. Every bound series must carry exactly
/// the truncation `trunc`, and the distinguished names `s`, `t` may not
/// appear unbound.
pub fn substitute(p: &Poly, bindings: &BTreeMap<Var, Series>, trunc: Trunc) -> Result<Series> {
    for (v, s) in bindings {
        if s.trunc() != trunc {
            return Err(Error::TruncationMismatch(format!(
                "binding for {v} has {}, expected {trunc}",
                s.trunc()
            )));
        }
    }
    for v in p.vars() {
        if !bindings.contains_key(&v) && (v.name() == VAR_S || v.name() == VAR_T) {
            return Err(Error::TruncationMismatch(format!(
                "distinguished variable {v} must be bound explicitly"
            )));
        }
    }
    // Per-variable power cache.
    let mut powers: BTreeMap<Var, Vec<Series>> = BTreeMap::new();
    for (v, series) in bindings {
        let max_e = p.degree_in(v);
        let mut pw = Vec::with_capacity(max_e as usize + 1);
        pw.push(Series::constant(RatFunc::one(), trunc));
        for e in 1..=max_e {
            let next = pw[(e - 1) as usize].mul(series)?;
            pw.push(next);
        }
        powers.insert(v.clone(), pw);
    }
    let mut acc = Series::zero(trunc);
    for (m, c) in p.terms() {
        let mut term = Series::constant(RatFunc::from_rat(c.clone()), trunc);
        let mut symbolic = Poly::one();
        for (v, e) in m.pairs() {
            match powers.get(v) {
                Some(pw) => term = term.mul(&pw[*e as usize])?,
                None => symbolic = &symbolic * &Poly::var(v.name()).pow(*e),
            }
        }
        if !symbolic.is_constant() {
            term = term.scale(&RatFunc::from_poly(symbolic));
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 + O{}", self.trunc);
        }
        let mut first = true;
        // t-order outer, s-order inner: lift expansions read order by order.
        let mut keys: Vec<&(u32, u32)> = self.coeffs.keys().collect();
        keys.sort_by_key(|(i, j)| (*j, *i));
        for (i, j) in keys {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = &self.coeffs[&(*i, *j)];
            write!(f, "({c})")?;
            if *i > 0 {
                write!(f, "*s^{i}")?;
            }
            if *j > 0 {
                write!(f, "*t^{j}")?;
            }
        }
        write!(f, " + O{}", self.trunc)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
