//! The degeneration `a_1 ... a_d + t f = 0` in projective space: components
//! of the central fiber, toric strata, and the singular points of the total
//! space sitting on the one-dimensional strata.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rat::Rat;
use crate::series::{VAR_S, VAR_T};

/// The degeneration data: ambient dimension, degree, linear factors of the
/// central fiber, the perturbation `f`, and symbolic parameter names.
#[derive(Clone, PartialEq, Eq)]
pub struct FamilySpec {
    n: usize,
    d: u32,
    coords: Vec<Var>,
    factors: Vec<Poly>,
    f: Poly,
    params: Vec<Var>,
    default_chart: usize,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
        && s != VAR_S
        && s != VAR_T
}

impl FamilySpec {
    pub fn new(
        n: usize,
        d: u32,
        coords: Vec<Var>,
        factors: Vec<Poly>,
        f: Poly,
        params: Vec<Var>,
        default_chart: usize,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidFamily(format!("ambient dimension {n} < 2")));
        }
        if d < 2 {
            return Err(Error::InvalidFamily(format!("degree {d} < 2")));
        }
        if coords.len() != n + 1 {
            return Err(Error::InvalidFamily(format!(
                "expected {} coordinates, got {}",
                n + 1,
                coords.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for v in coords.iter().chain(params.iter()) {
            if !valid_name(v.name()) {
                return Err(Error::InvalidFamily(format!(
                    "invalid variable name `{v}` (alphanumeric, not `s`/`t`)"
                )));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::InvalidFamily(format!("duplicate name `{v}`")));
            }
        }
        if factors.len() != d as usize {
            return Err(Error::InvalidFamily(format!(
                "expected {d} linear factors, got {}",
                factors.len()
            )));
        }
        let coord_set: BTreeSet<Var> = coords.iter().cloned().collect();
        for fac in &factors {
            if fac.is_zero() || fac.homogeneous_degree() != Some(1) {
                return Err(Error::InvalidFamily(format!(
                    "factor `{fac}` is not a nonzero linear form"
                )));
            }
            if !fac.vars().is_subset(&coord_set) {
                return Err(Error::InvalidFamily(format!(
                    "factor `{fac}` uses non-coordinate variables"
                )));
            }
        }
        let mut allowed = coord_set.clone();
        allowed.extend(params.iter().cloned());
        if !f.vars().is_subset(&allowed) {
            return Err(Error::InvalidFamily(
                "f uses undeclared variables".to_string(),
            ));
        }
        match f.homogeneous_degree_in(&coord_set) {
            Some(deg) if deg == d => {}
            Some(deg) => {
                return Err(Error::NonHomogeneous {
                    expected: d,
                    found: deg,
                })
            }
            None => {
                return Err(Error::InvalidFamily(
                    "f is not homogeneous in the coordinates".to_string(),
                ))
            }
        }
        if default_chart > n {
            return Err(Error::InvalidFamily(format!(
                "chart index {default_chart} out of range"
            )));
        }
        Ok(FamilySpec {
            n,
            d,
            coords,
            factors,
            f,
            params,
            default_chart,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn coords(&self) -> &[Var] {
        &self.coords
    }

    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn params(&self) -> &[Var] {
        &self.params
    }

    pub fn default_chart(&self) -> usize {
        self.default_chart
    }

    pub fn coord_index(&self, v: &Var) -> Option<usize> {
        self.coords.iter().position(|c| c == v)
    }

    pub fn t_var(&self) -> Var {
        Var::new(VAR_T)
    }

    /// `a_1 ... a_d + t f` as a polynomial in coordinates, `t`, parameters.
    pub fn total_equation(&self) -> Poly {
        let mut prod = Poly::one();
        for fac in &self.factors {
            prod = &prod * fac;
        }
        &prod + &(&Poly::var(VAR_T) * &self.f)
    }

    /// Indices: factor -> coordinate. Errors when some factor is not a
    /// single monic coordinate (non-toric central fibers are out of scope).
    pub fn toric_factor_coords(&self) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut seen = BTreeSet::new();
        for fac in &self.factors {
            let idx = self
                .coords
                .iter()
                .position(|c| fac == &Poly::var(c.name()))
                .ok_or_else(|| {
                    Error::InvalidFamily(format!(
                        "factor `{fac}` is not a coordinate; toric strata unavailable"
                    ))
                })?;
            if !seen.insert(idx) {
                return Err(Error::InvalidFamily(format!(
                    "repeated factor `{fac}`"
                )));
            }
            out.push(idx);
        }
        Ok(out)
    }

    /// The codimension-0 stratum `{factor_i = 0}` of the central fiber.
    pub fn component(&self, factor_index: usize) -> Result<Stratum> {
        self.stratum([factor_index].into_iter().collect(), None)
    }

    pub fn components(&self) -> Result<Vec<Stratum>> {
        (0..self.factors.len()).map(|i| self.component(i)).collect()
    }

    /// All dimension-1 strata (pairs in P^3, triples in P^4, ...).
    pub fn edges(&self) -> Result<Vec<Stratum>> {
        let k = self.n - 1; // |indices| with dim = n - |indices| = 1
        let m = self.factors.len();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = vec![vec![]];
        while let Some(cur) = stack.pop() {
            if cur.len() == k {
                out.push(self.stratum(cur.iter().cloned().collect(), None)?);
                continue;
            }
            let start = cur.last().map(|&x| x + 1).unwrap_or(0);
            for i in start..m {
                let mut next = cur.clone();
                next.push(i);
                stack.push(next);
            }
        }
        out.sort_by(|a, b| a.defining.cmp(&b.defining));
        Ok(out)
    }

    /// Builds a stratum from defining factor indices. The chart defaults to
    /// the last declared coordinate not set to zero.
    pub fn stratum(&self, defining: BTreeSet<usize>, chart: Option<usize>) -> Result<Stratum> {
        let coord_of = self.toric_factor_coords()?;
        let mut zero_coords = BTreeSet::new();
        for &i in &defining {
            if i >= self.factors.len() {
                return Err(Error::InvalidFamily(format!(
                    "factor index {i} out of range"
                )));
            }
            zero_coords.insert(coord_of[i]);
        }
        if defining.is_empty() || zero_coords.len() > self.n {
            return Err(Error::InvalidFamily(
                "stratum must fix between 1 and n coordinates".to_string(),
            ));
        }
        let chart = match chart {
            Some(c) => {
                if c > self.n || zero_coords.contains(&c) {
                    return Err(Error::InvalidFamily(format!(
                        "chart coordinate {c} unavailable on this stratum"
                    )));
                }
                c
            }
            None => {
                let preferred = self.default_chart;
                if !zero_coords.contains(&preferred) {
                    preferred
                } else {
                    (0..=self.n)
                        .rev()
                        .find(|c| !zero_coords.contains(c))
                        .expect("some coordinate is free")
                }
            }
        };
        let dim = self.n - zero_coords.len();
        let kind = match dim {
            0 => StratumKind::Point,
            1 => StratumKind::Edge,
            _ if dim == self.n - 1 => StratumKind::Component,
            _ => StratumKind::Divisor,
        };
        Ok(Stratum {
            defining,
            zero_coords,
            chart,
            kind,
        })
    }

    /// `f` with the stratum's coordinates set to zero in the stratum's chart.
    pub fn restrict_to_stratum(&self, st: &Stratum) -> Result<Poly> {
        if st.kind == StratumKind::Point {
            return Err(Error::InvalidFamily(
                "cannot restrict to a 0-dimensional stratum; evaluate instead".to_string(),
            ));
        }
        let mut vals: BTreeMap<Var, Rat> = BTreeMap::new();
        for &c in &st.zero_coords {
            vals.insert(self.coords[c].clone(), Rat::zero());
        }
        vals.insert(self.coords[st.chart].clone(), Rat::one());
        Ok(self.f.eval_map(&vals))
    }

    /// Free coordinates of a dimension-1 stratum, in declared order.
    pub fn edge_free_coords(&self, edge: &Stratum) -> Result<(usize, usize)> {
        if edge.kind != StratumKind::Edge {
            return Err(Error::InvalidFamily("not an edge stratum".to_string()));
        }
        let free: Vec<usize> = (0..=self.n)
            .filter(|c| !edge.zero_coords.contains(c))
            .collect();
        debug_assert_eq!(free.len(), 2);
        Ok((free[0], free[1]))
    }

    /// Rational singular points of the total space on an edge, together with
    /// counts of excluded (torus-fixed) and unresolved (irrational or
    /// parameter-dependent) roots.
    pub fn singular_points_on_edge(&self, edge: &Stratum) -> Result<EdgeLocus> {
        let (a, b) = self.edge_free_coords(edge)?;
        let h = edge.chart;
        let r = if h == a { b } else { a };
        let g = self.restrict_to_stratum(edge)?;
        let rv = self.coords[r].clone();
        let edge_desc = edge.describe(self);

        if g.is_zero() {
            return Err(Error::DegenerateSingularity(
                edge_desc,
                "restriction vanishes identically".to_string(),
            ));
        }
        let deg = g.degree_in(&rv);
        let mut fixed_excluded = self.d - deg; // roots at the (r:h)=(1:0) vertex

        // Group by parameter monomials: a rational root must kill every bucket.
        let buckets: Vec<Poly> = g
            .group_by(|v| v != &rv)
            .into_values()
            .collect();
        let candidates = rational_roots(&buckets[0], &rv);
        let mut points = Vec::new();
        let mut accounted = 0u32;
        for root in candidates {
            let mult = buckets
                .iter()
                .map(|b| root_multiplicity(b, &rv, &root))
                .min()
                .unwrap_or(0);
            if mult == 0 {
                continue;
            }
            accounted += mult;
            if root.is_zero() {
                fixed_excluded += mult;
                continue;
            }
            if mult > 1 {
                return Err(Error::DegenerateSingularity(
                    edge_desc.clone(),
                    root.to_string(),
                ));
            }
            let mut homog = vec![Rat::zero(); self.n + 1];
            homog[h] = Rat::one();
            homog[r] = root.clone();
            points.push(SingularPoint {
                edge: edge.clone(),
                chart: h,
                edge_coord: r,
                alpha: root,
                homog,
            });
        }
        points.sort_by(|p, q| p.alpha.cmp(&q.alpha));
        Ok(EdgeLocus {
            edge: edge.clone(),
            points,
            fixed_excluded,
            unresolved: deg - accounted,
        })
    }

    /// True when the edge restriction has a simple zero at the point and the
    /// point avoids the torus-fixed vertices.
    pub fn is_ordinary_singularity(&self, p: &SingularPoint) -> bool {
        if p.alpha.is_zero() {
            return false;
        }
        let edge = match p.edge.with_chart(p.chart) {
            Ok(e) => e,
            Err(_) => return false,
        };
        let g = match self.restrict_to_stratum(&edge) {
            Ok(g) => g,
            Err(_) => return false,
        };
        let rv = self.coords[p.edge_coord].clone();
        let at = |q: &Poly| -> Poly {
            q.eval_map(&[(rv.clone(), p.alpha.clone())].into_iter().collect())
        };
        at(&g).is_zero() && !at(&g.partial(&rv)).is_zero()
    }

    /// Evaluates `f` at a homogeneous point; the result is a polynomial in
    /// the parameters (constant when the family has none).
    pub fn eval_f_at_point(&self, pt: &[Rat]) -> Poly {
        let vals: BTreeMap<Var, Rat> = self
            .coords
            .iter()
            .cloned()
            .zip(pt.iter().cloned())
            .collect();
        self.f.eval_map(&vals)
    }

    /// Substitutes rational values for (some) parameters.
    pub fn specialize(&self, vals: &BTreeMap<Var, Rat>) -> Result<FamilySpec> {
        for v in vals.keys() {
            if !self.params.contains(v) {
                return Err(Error::UnknownVariable(v.name().to_string()));
            }
        }
        FamilySpec::new(
            self.n,
            self.d,
            self.coords.clone(),
            self.factors.clone(),
            self.f.eval_map(vals),
            self.params
                .iter()
                .filter(|p| !vals.contains_key(p))
                .cloned()
                .collect(),
            self.default_chart,
        )
    }
}

impl Poly {
    /// Homogeneous degree counting only the listed variables.
    pub fn homogeneous_degree_in(&self, vars: &BTreeSet<Var>) -> Option<u32> {
        let mut deg = None;
        for (m, _) in self.terms() {
            let d: u32 = m
                .pairs()
                .iter()
                .filter(|(v, _)| vars.contains(v))
                .map(|(_, e)| e)
                .sum();
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                _ => return None,
            }
        }
        deg.or(Some(0))
    }
}

/// Rational roots of a nonzero univariate polynomial (in `v`) over Q.
pub fn rational_roots(p: &Poly, v: &Var) -> Vec<Rat> {
    let mut out = Vec::new();
    if p.is_zero() {
        return out;
    }
    let coeffs = p.as_univar(v);
    let lead = coeffs.keys().max().cloned().unwrap_or(0);
    let low = coeffs.keys().min().cloned().unwrap_or(0);
    if low > 0 {
        out.push(Rat::zero());
    }
    if lead == low {
        return out;
    }
    // Clear denominators; candidates p/q from trailing and leading terms.
    let poly = p.canonical();
    let coeffs = poly.as_univar(v);
    let c0 = coeffs[&low].as_constant().expect("univariate");
    let cl = coeffs[&lead].as_constant().expect("univariate");
    let eval = |r: &Rat| -> bool {
        poly.eval_map(&[(v.clone(), r.clone())].into_iter().collect())
            .is_zero()
    };
    for pn in divisors(c0.numer()) {
        for qn in divisors(cl.numer()) {
            for sign in [1i64, -1] {
                let cand = Rat::new(&pn * BigInt::from(sign), qn.clone())
                    .expect("nonzero divisor");
                if !out.contains(&cand) && eval(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out.sort();
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::from(1)];
    }
    let mut out = Vec::new();
    let mut i = BigInt::from(1);
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            out.push(i.clone());
            let j = &n / &i;
            if j != i {
                out.push(j);
            }
        }
        i += 1;
    }
    out.sort();
    out
}

/// Multiplicity of `root` in `p` as a polynomial in `v` (coefficients may
/// involve parameters; the multiplicity is the vanishing order of every
/// parameter bucket).
pub fn root_multiplicity(p: &Poly, v: &Var, root: &Rat) -> u32 {
    let mut q = p.clone();
    let mut mult = 0;
    loop {
        if q.is_zero() {
            return mult;
        }
        let at = q.eval_map(&[(v.clone(), root.clone())].into_iter().collect());
        if !at.is_zero() {
            return mult;
        }
        // exact division by (v - root)
        let lin = &Poly::var(v.name()) - &Poly::constant(root.clone());
        q = q.div_exact(&lin).expect("root divides");
        mult += 1;
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StratumKind {
    Component,
    Divisor,
    Edge,
    Point,
}

/// A closed toric stratum of the central fiber: the factor indices set to
/// zero plus the inhomogenization convention in force.
#[derive(Clone, PartialEq, Eq)]
pub struct Stratum {
    defining: BTreeSet<usize>,
    zero_coords: BTreeSet<usize>,
    chart: usize,
    kind: StratumKind,
}

impl Stratum {
    pub fn defining(&self) -> &BTreeSet<usize> {
        &self.defining
    }

    pub fn zero_coords(&self) -> &BTreeSet<usize> {
        &self.zero_coords
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn kind(&self) -> StratumKind {
        self.kind
    }

    pub fn with_chart(&self, chart: usize) -> Result<Stratum> {
        if self.zero_coords.contains(&chart) {
            return Err(Error::InvalidFamily(format!(
                "chart coordinate {chart} vanishes on the stratum"
            )));
        }
        let mut out = self.clone();
        out.chart = chart;
        Ok(out)
    }

    pub fn contains_point(&self, pt: &[Rat]) -> bool {
        self.zero_coords.iter().all(|&c| pt[c].is_zero())
    }

    pub fn describe(&self, spec: &FamilySpec) -> String {
        let names: Vec<String> = self
            .zero_coords
            .iter()
            .map(|&c| format!("{}=0", spec.coords()[c]))
            .collect();
        format!("{{{}}}", names.join(", "))
    }
}

impl fmt::Debug for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Stratum{:?}", self.zero_coords)
    }
}

/// An ordinary double point of the total space on an edge of the central
/// fiber, with its edge coordinate in a fixed chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingularPoint {
    pub edge: Stratum,
    /// Coordinate index set to 1.
    pub chart: usize,
    /// Coordinate index carrying the edge parameter.
    pub edge_coord: usize,
    /// Value of the edge coordinate; nonzero by construction.
    pub alpha: Rat,
    pub homog: Vec<Rat>,
}

impl SingularPoint {
    pub fn describe(&self) -> String {
        let vals: Vec<String> = self.homog.iter().map(|r| r.to_string()).collect();
        format!("({})", vals.join(":"))
    }
}

/// Result of scanning one edge for singular points.
#[derive(Clone, Debug)]
pub struct EdgeLocus {
    pub edge: Stratum,
    pub points: Vec<SingularPoint>,
    /// Roots at torus-fixed vertices, excluded per the non-fixed-point rule.
    pub fixed_excluded: u32,
    /// Degree not accounted for by rational roots.
    pub unresolved: u32,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn p(s: &str) -> Poly {
        Poly::parse(s, None).unwrap()
    }

    #[test]
    fn total_equation_shapes() {
        let k3 = fixtures::k3_worked_example();
        assert_eq!(
            k3.total_equation(),
            &p("x*y*z*w") + &(&Poly::var("t") * k3.f())
        );
        let cubic = fixtures::cubic_toric_example();
        assert_eq!(
            cubic.total_equation(),
            &p("x*y*z") + &(&Poly::var("t") * cubic.f())
        );
        let quintic = fixtures::quintic_example();
        assert_eq!(
            quintic.total_equation(),
            &p("z0*z1*z2*z3*z4") + &(&Poly::var("t") * quintic.f())
        );
    }

    #[test]
    fn central_fiber_factors_exactly() {
        let k3 = fixtures::k3_worked_example();
        let t = Var::new("t");
        let eq = k3.total_equation();
        let at_t0 = eq.eval_map(&[(t, Rat::zero())].into_iter().collect());
        assert_eq!(at_t0, p("x*y*z*w"));
    }

    #[test]
    fn worked_edge_restriction() {
        // y = z = 0, chart w = 1 gives x^4 + a x^2 - a x - 1.
        let k3 = fixtures::k3_worked_example();
        let edge = k3
            .stratum([1, 2].into_iter().collect(), None)
            .unwrap();
        assert_eq!(k3.restrict_to_stratum(&edge).unwrap(), p("x^4 + a*x^2 - a*x - 1"));
    }

    #[test]
    fn restrict_trivial_and_point_error() {
        let k3 = fixtures::k3_worked_example();
        let pt = k3
            .stratum([0, 1, 2].into_iter().collect(), None)
            .unwrap();
        assert_eq!(pt.kind(), StratumKind::Point);
        assert!(k3.restrict_to_stratum(&pt).is_err());
    }

    #[test]
    fn worked_singular_points() {
        let k3 = fixtures::k3_worked_example();
        // edge {y=z=0}: root x = 1 for all parameter values
        let edge = k3.stratum([1, 2].into_iter().collect(), None).unwrap();
        let locus = k3.singular_points_on_edge(&edge).unwrap();
        assert_eq!(locus.points.len(), 1);
        assert_eq!(locus.points[0].alpha, Rat::one());
        assert_eq!(locus.unresolved, 3);
        assert_eq!(
            locus.points[0].homog,
            vec![Rat::one(), Rat::zero(), Rat::zero(), Rat::one()]
        );
        // edge {x=y=0}: root z = -1
        let edge = k3.stratum([0, 1].into_iter().collect(), None).unwrap();
        let locus = k3.singular_points_on_edge(&edge).unwrap();
        assert_eq!(locus.points.len(), 1);
        assert_eq!(locus.points[0].alpha, Rat::from_int(-1));
        // edge {y=w=0}: roots x = 1, -1 in chart z
        let edge = k3.stratum([1, 3].into_iter().collect(), None).unwrap();
        let locus = k3.singular_points_on_edge(&edge).unwrap();
        assert_eq!(locus.points.len(), 2);
        assert_eq!(locus.unresolved, 2);
    }

    #[test]
    fn singular_points_satisfy_equations() {
        let k3 = fixtures::k3_worked_example();
        for edge in k3.edges().unwrap() {
            let locus = k3.singular_points_on_edge(&edge).unwrap();
            for pt in &locus.points {
                assert!(k3.eval_f_at_point(&pt.homog).is_zero());
                assert!(k3.is_ordinary_singularity(pt));
            }
        }
    }

    #[test]
    fn irrational_quartic_unresolved() {
        // x^4 + x + 1 has no rational roots: 0 points, 4 unresolved.
        let spec = fixtures::k3_with_f(p("x^4 + x*w^3 + w^4 - z^4 + y^4"));
        let edge = spec.stratum([1, 2].into_iter().collect(), None).unwrap();
        let locus = spec.singular_points_on_edge(&edge).unwrap();
        assert!(locus.points.is_empty());
        assert_eq!(locus.unresolved, 4);
    }

    #[test]
    fn repeated_root_rejected() {
        // (x-w)^2 (x^2 + w^2) on the edge {y=z=0}
        let f = &(&p("(x-w)^2") * &p("x^2+w^2")) + &p("y^4 - z^4");
        let spec = fixtures::k3_with_f(f);
        let edge = spec.stratum([1, 2].into_iter().collect(), None).unwrap();
        assert!(matches!(
            spec.singular_points_on_edge(&edge),
            Err(Error::DegenerateSingularity(_, _))
        ));
    }

    #[test]
    fn fixed_point_roots_excluded() {
        // x^3 w on the edge {y=z=0}: triple root at the x=0 vertex plus a
        // degree drop at the opposite vertex; nothing materializes.
        let f = &p("x^3*w") + &p("y^4 - z^4");
        let spec = fixtures::k3_with_f(f);
        let edge = spec.stratum([1, 2].into_iter().collect(), None).unwrap();
        let locus = spec.singular_points_on_edge(&edge).unwrap();
        assert!(locus.points.is_empty());
        assert_eq!(locus.fixed_excluded, 4);
        assert_eq!(locus.unresolved, 0);
        // x^2 w^2 - w^4 = w^2 (x^2 - w^2): roots x = 1, -1 materialize and
        // the double root at infinity is excluded.
        let f = &p("x^2*w^2 - w^4") + &p("y^4 - z^4");
        let spec = fixtures::k3_with_f(f);
        let edge = spec.stratum([1, 2].into_iter().collect(), None).unwrap();
        let locus = spec.singular_points_on_edge(&edge).unwrap();
        assert_eq!(locus.points.len(), 2);
        assert_eq!(locus.fixed_excluded, 2);
        assert_eq!(locus.unresolved, 0);
    }

    #[test]
    fn chart_accounting_consistent_across_edge_charts() {
        let k3 = fixtures::k3_worked_example();
        for edge in k3.edges().unwrap() {
            let (a, b) = k3.edge_free_coords(&edge).unwrap();
            let l1 = k3.singular_points_on_edge(&edge).unwrap();
            let other = edge.with_chart(if edge.chart() == a { b } else { a }).unwrap();
            let l2 = k3.singular_points_on_edge(&other).unwrap();
            assert_eq!(l1.points.len(), l2.points.len());
            // same points, reciprocal edge coordinates
            let set1: BTreeSet<String> =
                l1.points.iter().map(|p| p.alpha.to_string()).collect();
            let set2: BTreeSet<String> = l2
                .points
                .iter()
                .map(|p| p.alpha.recip().unwrap().to_string())
                .collect();
            assert_eq!(set1, set2);
            let total1 = l1.points.len() as u32 + l1.fixed_excluded + l1.unresolved;
            let total2 = l2.points.len() as u32 + l2.fixed_excluded + l2.unresolved;
            assert_eq!(total1, k3.d());
            assert_eq!(total2, k3.d());
        }
    }

    #[test]
    fn specialization() {
        let k3 = fixtures::k3_worked_example();
        let spec = k3
            .specialize(
                &[(Var::new("a"), Rat::zero()), (Var::new("b"), Rat::from_frac(2, 3))]
                    .into_iter()
                    .collect(),
            )
            .unwrap();
        assert!(spec.params().is_empty());
        assert!(spec.f().vars().iter().all(|v| v.name() != "a"));
    }
}
