//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Variables are named; the monomial order is graded lexicographic with
//! variables compared by name (earlier names dominate). The order is total
//! and fixed, so every normal form and printed report is deterministic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Interned variable name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Self {
        Var::new(s)
    }
}

/// Monomial: sorted `(variable, exponent)` pairs, all exponents positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mono(Vec<(Var, u32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Mono(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Mono(map.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exp_of(&self, v: &Var) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = &Var> {
        self.0.iter().map(|(v, _)| v)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(b)) => {
                    out.push(b.clone());
                    j += 1;
                }
                (Some(a), Some(b)) => match a.0.cmp(&b.0) {
                    Ordering::Less => {
                        out.push(a.clone());
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push(b.clone());
                        j += 1;
                    }
                    Ordering::Equal => {
                        out.push((a.0.clone(), a.1 + b.1));
                        i += 1;
                        j += 1;
                    }
                },
                (None, None) => unreachable!(),
            }
        }
        Mono(out)
    }

    /// Exact monomial quotient, `None` when some exponent would go negative.
    pub fn try_div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::new();
        let mut i = 0;
        for (v, e) in &other.0 {
            loop {
                let (w, f) = self.0.get(i)?;
                match w.cmp(v) {
                    Ordering::Less => {
                        out.push((w.clone(), *f));
                        i += 1;
                    }
                    Ordering::Equal => {
                        if f < e {
                            return None;
                        }
                        if f > e {
                            out.push((w.clone(), f - e));
                        }
                        i += 1;
                        break;
                    }
                    Ordering::Greater => return None,
                }
            }
        }
        out.extend(self.0[i..].iter().cloned());
        Some(Mono(out))
    }

    pub fn pow(&self, e: u32) -> Mono {
        if e == 0 {
            return Mono::one();
        }
        Mono(self.0.iter().map(|(v, k)| (v.clone(), k * e)).collect())
    }

    /// Splits into (part on vars where `pred` holds, rest).
    pub fn split(&self, pred: impl Fn(&Var) -> bool) -> (Mono, Mono) {
        let (a, b) = self.0.iter().cloned().partition(|(v, _)| pred(v));
        (Mono(a), Mono(b))
    }
}

impl Ord for Mono {
    /// Graded lexicographic: total degree first, then lex with earlier
    /// variable names dominant.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((v1, e1)), Some((v2, e2))) => match v1.cmp(v2) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if e1 != e2 {
                            return e1.cmp(e2);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse multivariate polynomial. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Poly::zero();
        p.add_term(Mono::one(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(Rat::from_int(n))
    }

    pub fn var(name: &str) -> Self {
        let mut p = Poly::zero();
        p.add_term(Mono::var(Var::new(name)), Rat::one());
        p
    }

    pub fn term(c: Rat, m: Mono) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// Constant value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return self.terms.get(&Mono::one()).cloned();
        }
        None
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff_of(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading term under the graded-lex order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            s.extend(m.vars().cloned());
        }
        s
    }

    pub fn contains_var(&self, v: &Var) -> bool {
        self.terms.keys().any(|m| m.exp_of(v) > 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: &Var) -> u32 {
        self.terms.keys().map(|m| m.exp_of(v)).max().unwrap_or(0)
    }

    /// `Some(d)` when every term has total degree `d` (zero counts as any
    /// degree and reports 0).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut iter = self.terms.keys().map(|m| m.degree());
        let d = match iter.next() {
            None => return Some(0),
            Some(d) => d,
        };
        iter.all(|e| e == d).then_some(d)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Checked power for the public `pow` operation.
    pub fn checked_pow(&self, e: i64) -> Result<Poly> {
        if e < 0 {
            return Err(Error::NegativeExponent(e));
        }
        Ok(self.pow(e as u32))
    }

    /// Formal partial derivative. Absent variables differentiate to zero.
    pub fn partial(&self, v: &Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp_of(v);
            if e == 0 {
                continue;
            }
            let mut pairs: Vec<(Var, u32)> = m.pairs().to_vec();
            for p in pairs.iter_mut() {
                if &p.0 == v {
                    p.1 -= 1;
                }
            }
            out.add_term(
                Mono::from_pairs(pairs),
                c * &Rat::from_int(e as i64),
            );
        }
        out
    }

    /// Substitutes rational constants for the listed variables.
    pub fn eval_map(&self, vals: &BTreeMap<Var, Rat>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut kept: Vec<(Var, u32)> = Vec::new();
            for (v, e) in m.pairs() {
                match vals.get(v) {
                    Some(val) => coeff = &coeff * &val.pow(*e),
                    None => kept.push((v.clone(), *e)),
                }
            }
            out.add_term(Mono(kept), coeff);
        }
        out
    }

    /// Substitutes a polynomial for one variable.
    pub fn subst_var(&self, v: &Var, q: &Poly) -> Poly {
        let max_e = self.degree_in(v);
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(Poly::one());
        for _ in 0..max_e {
            powers.push(powers.last().unwrap() * q);
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp_of(v);
            let rest = Mono(
                m.pairs()
                    .iter()
                    .filter(|(w, _)| w != v)
                    .cloned()
                    .collect(),
            );
            let piece = powers[e as usize].mul_mono(&rest).scale(c);
            out = &out + &piece;
        }
        out
    }

    /// Groups terms by the sub-monomial on variables where `pred` holds:
    /// `p = Σ_m m * bucket(m)` with each bucket free of those variables.
    pub fn group_by(&self, pred: impl Fn(&Var) -> bool) -> BTreeMap<Mono, Poly> {
        let mut out: BTreeMap<Mono, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (key, rest) = m.split(&pred);
            out.entry(key).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Views the polynomial as univariate in `v` with polynomial coefficients.
    pub fn as_univar(&self, v: &Var) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp_of(v);
            let rest = Mono(
                m.pairs()
                    .iter()
                    .filter(|(w, _)| w != v)
                    .cloned()
                    .collect(),
            );
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    pub fn from_univar(v: &Var, coeffs: &BTreeMap<u32, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (e, p) in coeffs {
            let m = if *e == 0 {
                Mono::one()
            } else {
                Mono::var(v.clone()).pow(*e)
            };
            out = &out + &p.mul_mono(&m);
        }
        out
    }

    /// Exact quotient `self / d`; errors when the division leaves a remainder.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        self.try_div_exact(d)
            .ok_or_else(|| Error::InexactDivision(d.to_string(), self.to_string()))
    }

    pub fn try_div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.try_div(dm)?;
            let qc = &rc / dc;
            rem = &rem - &d.mul_mono(&qm).scale(&qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.try_div_exact(self).is_some()
    }

    /// Positive rational `c` with `self / c` primitive over the integers.
    pub fn rational_content(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::from(1);
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm).expect("lcm of denominators is nonzero")
    }

    /// Canonical generator form: integer-primitive with positive leading
    /// coefficient under the graded-lex order. Zero stays zero.
    pub fn canonical(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.rational_content();
        if self.leading().map(|(_, k)| k.is_negative()).unwrap_or(false) {
            c = -c;
        }
        self.scale(&c.recip().expect("content of a nonzero poly is nonzero"))
    }

    /// Multivariate gcd, returned in canonical form. `gcd(0, q) = canonical(q)`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        gcd_int(&self.canonical(), &other.canonical()).canonical()
    }
}

/// gcd up to a rational unit, by primitive pseudo-remainder sequences
/// recursing on the coefficient ring. Rational scalars are units, so a
/// nonzero constant argument short-circuits to 1.
fn gcd_int(p: &Poly, q: &Poly) -> Poly {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return Poly::one();
    }
    // Main variable: smallest name occurring in either.
    let mut vars = p.vars();
    vars.extend(q.vars());
    let x = vars.into_iter().next().expect("non-constant poly has a var");

    let (cont_p, pp_p) = split_content(p, &x);
    let (cont_q, pp_q) = split_content(q, &x);
    let cont = gcd_int(&cont_p, &cont_q);

    let (mut a, mut b) = if p.degree_in(&x) >= q.degree_in(&x) {
        (pp_p, pp_q)
    } else {
        (pp_q, pp_p)
    };
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b, &x);
        a = b;
        b = if r.is_zero() {
            Poly::zero()
        } else {
            split_content(&r, &x).1
        };
    }
    (&cont * &a).canonical()
}

/// Content/primitive-part split of `p` viewed as univariate in `x`.
fn split_content(p: &Poly, x: &Var) -> (Poly, Poly) {
    let coeffs = p.as_univar(x);
    let mut cont = Poly::zero();
    for c in coeffs.values() {
        cont = gcd_int(&cont, &c.canonical());
        if cont.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            break;
        }
    }
    let cont = cont.canonical();
    let prim = p.div_exact(&cont).expect("content divides");
    (cont, prim)
}

/// Pseudo-remainder of `a` by `b` in the variable `x`.
fn pseudo_rem(a: &Poly, b: &Poly, x: &Var) -> Poly {
    let db = b.degree_in(x);
    let bu = b.as_univar(x);
    let lb = bu.get(&db).expect("leading coefficient").clone();
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(x);
        if dr < db {
            break;
        }
        let ru = r.as_univar(x);
        let lr = ru.get(&dr).expect("leading coefficient").clone();
        let shift = Mono::var(x.clone()).pow(dr - db);
        r = &(&r * &lb) - &(&b.mul_mono(&shift) * &lr);
    }
    r
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    /// Terms in descending graded-lex order, leading term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    allowed: Option<&'a BTreeSet<Var>>,
}

impl Poly {
    /// Parses an arithmetic expression: rationals, variables, `+ - * / ^`
    /// and parentheses. `/` requires a constant right operand. When
    /// `allowed` is given, identifiers outside the set are rejected.
    pub fn parse(input: &str, allowed: Option<&BTreeSet<Var>>) -> Result<Poly> {
        let mut p = Parser {
            chars: input.chars().peekable(),
            allowed,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.chars.peek().is_some() {
            return Err(Error::Parse {
                line: 0,
                msg: format!("trailing input in expression `{input}`"),
            });
        }
        Ok(e)
    }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        self.skip_ws();
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some('+') => {
                    self.chars.next();
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.chars.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some('*') => {
                    self.chars.next();
                    acc = &acc * &self.factor()?;
                }
                Some('/') => {
                    self.chars.next();
                    let rhs = self.factor()?;
                    let c = rhs.as_constant().ok_or_else(|| Error::Parse {
                        line: 0,
                        msg: "division by a non-constant in expression".into(),
                    })?;
                    if c.is_zero() {
                        return Err(Error::ZeroDenominator);
                    }
                    acc = acc.scale(&c.recip()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        self.skip_ws();
        if let Some('-') = self.chars.peek() {
            self.chars.next();
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        self.skip_ws();
        if let Some('^') = self.chars.peek() {
            self.chars.next();
            self.skip_ws();
            let mut digits = String::new();
            while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                digits.push(self.chars.next().unwrap());
            }
            let e: u32 = digits.parse().map_err(|_| Error::Parse {
                line: 0,
                msg: "expected exponent after `^`".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        self.skip_ws();
        match self.chars.peek() {
            Some('(') => {
                self.chars.next();
                let e = self.expr()?;
                self.skip_ws();
                if self.chars.next() != Some(')') {
                    return Err(Error::Parse {
                        line: 0,
                        msg: "expected `)`".into(),
                    });
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let mut s = String::new();
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                    s.push(self.chars.next().unwrap());
                }
                let n: Rat = s.parse()?;
                Ok(Poly::constant(n))
            }
            Some(c) if c.is_ascii_alphabetic() || *c == '_' => {
                let mut s = String::new();
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                {
                    s.push(self.chars.next().unwrap());
                }
                let v = Var::new(&s);
                if let Some(allowed) = self.allowed {
                    if !allowed.contains(&v) {
                        return Err(Error::UnknownVariable(s));
                    }
                }
                Ok(Poly::var(&s))
            }
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unexpected token {other:?}"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s, None).unwrap()
    }

    #[test]
    fn additive_inverse() {
        let x = Poly::var("x");
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let r = &p("x+1") * &p("x-1");
        assert_eq!(r, p("x^2-1"));
    }

    #[test]
    fn section_example_edge_factorization() {
        // (x-1)(x^3+x^2+(1+a)x+1) expands to the quartic edge restriction.
        let r = &p("x-1") * &p("x^3+x^2+(1+a)*x+1");
        assert_eq!(r, p("x^4+a*x^2-a*x-1"));
    }

    #[test]
    fn negative_pow_rejected() {
        assert!(matches!(
            Poly::var("x").checked_pow(-1),
            Err(Error::NegativeExponent(-1))
        ));
    }

    #[test]
    fn partial_derivatives() {
        let f = p("x^2*y");
        assert_eq!(f.partial(&Var::new("x")), p("2*x*y"));
        assert!(p("5").partial(&Var::new("x")).is_zero());
        // d/dy of the worked quartic at (1,0,0) is 1.
        let f = p("x^4 - z^4 - 2*z - 1 + a*x^2 + b*x*z - a*x + y + y^4");
        let fy = f.partial(&Var::new("y"));
        let vals: BTreeMap<Var, Rat> = [
            (Var::new("x"), Rat::one()),
            (Var::new("y"), Rat::zero()),
            (Var::new("z"), Rat::zero()),
        ]
        .into_iter()
        .collect();
        assert_eq!(fy.eval_map(&vals), Poly::one());
    }

    #[test]
    fn grlex_leading_term() {
        let f = p("a^2 + a*b + 4*a + 6*b - 4");
        let (m, c) = f.leading().unwrap();
        assert_eq!(m.to_string(), "a^2");
        assert!(c.is_one());
        assert_eq!(f.to_string(), "a^2 + a*b + 4*a + 6*b - 4");
    }

    #[test]
    fn exact_division() {
        let f = p("x^2 - 1");
        let q = f.div_exact(&p("x - 1")).unwrap();
        assert_eq!(q, p("x + 1"));
        assert!(p("x^2 + 1").div_exact(&p("x - 1")).is_err());
    }

    #[test]
    fn gcd_multivariate() {
        let g = p("x + y");
        let a = &g * &p("x - y");
        let b = &g * &p("x^2 + 3");
        assert_eq!(a.gcd(&b), p("x + y"));
        assert_eq!(p("0").gcd(&p("2*x")), p("x"));
        // coprime
        assert_eq!(p("x + 1").gcd(&p("x - 1")), Poly::one());
    }

    #[test]
    fn canonical_form() {
        let f = p("-2*x^2 + 4*x - 6").canonical();
        assert_eq!(f, p("x^2 - 2*x + 3"));
        let g = p("x/2 + 1/3").canonical();
        assert_eq!(g, p("3*x + 2"));
    }

    #[test]
    fn subst_var_shift() {
        // substituting x -> x+1 into x^2 gives x^2+2x+1
        let f = p("x^2").subst_var(&Var::new("x"), &p("x+1"));
        assert_eq!(f, p("x^2+2*x+1"));
    }

    #[test]
    fn group_by_params() {
        let f = p("x^4 + a*x^2 - a*x - 1");
        let groups = f.group_by(|v| v.name() == "a");
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[&Mono::one()], p("x^4 - 1"));
        assert_eq!(groups[&Mono::var(Var::new("a"))], p("x^2 - x"));
    }
}
