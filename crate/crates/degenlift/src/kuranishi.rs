//! The first-order obstruction scalar of a pre-log line, assembled from
//! local frames at its three singular boundary intersections, plus the
//! higher-order scalars (delegated to the lifting solver) and the
//! logarithmic-tangent membership test that kills class-(2) quintic lines.
//!
//! At a singular point with edge coordinate `c = alpha`, the local model
//! splits `f = (c - alpha) f1 + e f2 + m f3` with `f1` a unit; the residue
//! `b1` of the line's first-order correction satisfies
//! `b1 f1(0) + f5(0) = -f4(0) h1(0)` with `f4 = f3/c`, `f5 = -f2 f3/c`,
//! `h1(0) = -slope * f1(0)`. Residues are normalized to logarithmic form
//! (`b1/alpha`), paired against the divisor covectors of the dual
//! obstruction basis, and summed with the kernel weighting.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::family::{FamilySpec, SingularPoint, Stratum};
use crate::lifter::{self, LiftStatus};
use crate::lines::Line;
use crate::poly::{Poly, Var};
use crate::rat::Rat;
use crate::ratfunc::RatFunc;
use crate::sheaf;

/// Coordinate roles of a local frame at one singular point.
#[derive(Clone, Copy, Debug)]
pub struct FrameRoles {
    /// Coordinate cutting the component (the lemma's `y`).
    pub normal: usize,
    /// In-plane coordinate vanishing at the point (the lemma's `x`).
    pub transverse: usize,
    /// Edge coordinate carrying `alpha` (the lemma's `z`).
    pub edge: usize,
    /// Coordinate set to 1.
    pub chart: usize,
}

/// The local decomposition data of `f` at one singular intersection.
#[derive(Clone, Debug)]
pub struct LocalFrame {
    pub point: SingularPoint,
    pub component: Stratum,
    pub roles: FrameRoles,
    pub alpha: Rat,
    /// Direction coefficient of the line: `edge_shift = slope * transverse`.
    pub slope: Rat,
    pub f1: Poly,
    pub f2: Poly,
    pub f3: Poly,
    pub f4: RatFunc,
    pub f5: RatFunc,
    /// `f1` at the point; nonzero exactly when the point is ordinary.
    pub unit: RatFunc,
}

/// Which of the two in-plane coordinates is peeled first in the division.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DivisionOrder {
    TransverseFirst,
    NormalFirst,
}

impl LocalFrame {
    /// Evaluates a polynomial of the frame at the singular point, leaving
    /// parameters symbolic.
    fn at_point(&self, spec: &FamilySpec, p: &Poly) -> Poly {
        let coords = spec.coords();
        let vals: BTreeMap<Var, Rat> = [
            (coords[self.roles.transverse].clone(), Rat::zero()),
            (coords[self.roles.normal].clone(), Rat::zero()),
            (coords[self.roles.edge].clone(), self.alpha.clone()),
            (coords[self.roles.chart].clone(), Rat::one()),
        ]
        .into_iter()
        .collect();
        p.eval_map(&vals)
    }

    /// `f` restricted to the frame's chart.
    pub fn f_chart(&self, spec: &FamilySpec) -> Poly {
        let coords = spec.coords();
        spec.f().eval_map(
            &[(coords[self.roles.chart].clone(), Rat::one())]
                .into_iter()
                .collect(),
        )
    }
}

/// Builds the Lemma-style local frame of `line` at an ordinary singular
/// point on its component's boundary.
pub fn local_frame(spec: &FamilySpec, line: &Line, point: &SingularPoint) -> Result<LocalFrame> {
    local_frame_with(spec, line, point, DivisionOrder::TransverseFirst)
}

/// As [`local_frame`], with a chosen division order for the non-unique
/// `(f2, f3)` split; the residue `b1` must not depend on the choice.
pub fn local_frame_with(
    spec: &FamilySpec,
    line: &Line,
    point: &SingularPoint,
    order: DivisionOrder,
) -> Result<LocalFrame> {
    if spec.n() != 3 {
        return Err(Error::Unsupported(
            "local frames are defined for plane components (ambient P^3)".to_string(),
        ));
    }
    if !spec.is_ordinary_singularity(point) {
        return Err(Error::NotOrdinary(point.describe()));
    }
    if !line.contains(&point.homog) {
        return Err(Error::NotPrelog(format!(
            "line misses the singular point {}",
            point.describe()
        )));
    }
    let component = line.host_component(spec)?;
    if !line.is_torically_transverse(spec, &component)? {
        return Err(Error::NotPrelog(
            "line is not torically transverse".to_string(),
        ));
    }
    let normal = *component
        .zero_coords()
        .iter()
        .next()
        .expect("component coordinate");
    if !point.edge.zero_coords().contains(&normal) {
        return Err(Error::NotPrelog(format!(
            "singular point {} does not lie on the component's boundary",
            point.describe()
        )));
    }
    let transverse = *point
        .edge
        .zero_coords()
        .iter()
        .find(|&&c| c != normal)
        .expect("edge fixes two coordinates");
    let roles = FrameRoles {
        normal,
        transverse,
        edge: point.edge_coord,
        chart: point.chart,
    };
    let coords = spec.coords();
    let alpha = point.alpha.clone();

    // Slope d(edge)/d(transverse) of the line in the frame chart, from its
    // in-plane equation; nonzero and finite for transverse lines.
    let form = line.plane_form(spec, &component)?;
    let free: Vec<usize> = (0..=spec.n())
        .filter(|c| !component.zero_coords().contains(c))
        .collect();
    let pos = |c: usize| free.iter().position(|&x| x == c).expect("free coordinate");
    let slope = -&(&form[pos(roles.transverse)] / &form[pos(roles.edge)]);

    // Decomposition f = (c - alpha) f1 + e f2 + m f3 in the chart.
    let fc = spec.f().eval_map(
        &[(coords[roles.chart].clone(), Rat::one())]
            .into_iter()
            .collect(),
    );
    let e = coords[roles.transverse].clone();
    let m = coords[roles.normal].clone();
    let c = coords[roles.edge].clone();
    let g0 = fc.eval_map(&[(c.clone(), alpha.clone())].into_iter().collect());
    let (f2, f3) = match order {
        DivisionOrder::TransverseFirst => {
            let g0_m0 = g0.eval_map(&[(m.clone(), Rat::zero())].into_iter().collect());
            let f2 = g0_m0.div_exact(&Poly::var(e.name())).map_err(|_| {
                Error::NotPrelog(format!("f does not vanish at {}", point.describe()))
            })?;
            let f3 = (&g0 - &(&Poly::var(e.name()) * &f2))
                .div_exact(&Poly::var(m.name()))
                .expect("remaining part is a normal-coordinate multiple");
            (f2, f3)
        }
        DivisionOrder::NormalFirst => {
            let g0_e0 = g0.eval_map(&[(e.clone(), Rat::zero())].into_iter().collect());
            let f3 = g0_e0.div_exact(&Poly::var(m.name())).map_err(|_| {
                Error::NotPrelog(format!("f does not vanish at {}", point.describe()))
            })?;
            let f2 = (&g0 - &(&Poly::var(m.name()) * &f3))
                .div_exact(&Poly::var(e.name()))
                .expect("remaining part is a transverse-coordinate multiple");
            (f2, f3)
        }
    };
    let shift = &Poly::var(c.name()) - &Poly::constant(alpha.clone());
    let rest = &(&fc - &(&Poly::var(e.name()) * &f2)) - &(&Poly::var(m.name()) * &f3);
    let f1 = rest
        .div_exact(&shift)
        .expect("edge-direction remainder is divisible by the shift");

    let f4 = RatFunc::new(f3.clone(), Poly::var(c.name()))?;
    let f5 = RatFunc::new(-&(&f2 * &f3), Poly::var(c.name()))?;
    let frame = LocalFrame {
        point: point.clone(),
        component,
        roles,
        alpha,
        slope,
        f1,
        f2,
        f3,
        f4,
        f5,
        unit: RatFunc::zero(),
    };
    let unit = RatFunc::from_poly(frame.at_point(spec, &frame.f1));
    if unit.is_zero() {
        return Err(Error::NotOrdinary(point.describe()));
    }
    Ok(LocalFrame { unit, ..frame })
}

fn dehomogenize(pt: &[Rat], chart: usize) -> Result<Vec<Rat>> {
    if pt[chart].is_zero() {
        return Err(Error::NotPrelog(
            "point at infinity of the frame chart".to_string(),
        ));
    }
    let inv = pt[chart].recip()?;
    Ok(pt.iter().map(|v| v * &inv).collect())
}

/// An obstruction residue extracted from one local frame.
#[derive(Clone, Debug)]
pub struct ResidueDatum {
    pub frame: LocalFrame,
    pub order: u32,
    /// The raw frame residue `b_order`.
    pub b: RatFunc,
}

/// The first-order residue: `b1 = (-f4(0) h1(0) - f5(0)) / f1(0)` with
/// `h1(0) = -slope * f1(0)`.
pub fn first_order_residue(spec: &FamilySpec, frame: &LocalFrame) -> Result<ResidueDatum> {
    let slope = RatFunc::from_rat(frame.slope.clone());
    let alpha = RatFunc::from_rat(frame.alpha.clone());
    let f1_0 = frame.unit.clone();
    let f2_0 = RatFunc::from_poly(frame.at_point(spec, &frame.f2));
    let f3_0 = RatFunc::from_poly(frame.at_point(spec, &frame.f3));
    let f4_0 = &f3_0 / &alpha;
    let f5_0 = -&(&(&f2_0 * &f3_0) / &alpha);
    let h1_0 = -&(&slope * &f1_0);
    let b = &(&(-&(&f4_0 * &h1_0)) - &f5_0) / &f1_0;
    // The defining relation b1 f1(0) + f5(0) = -f4(0) h1(0), exactly.
    debug_assert!(
        (&(&(&b * &f1_0) + &f5_0) + &(&f4_0 * &h1_0)).is_zero(),
        "residue relation violated"
    );
    Ok(ResidueDatum {
        frame: frame.clone(),
        order: 1,
        b,
    })
}

/// Pairing weight of a frame's residue in the obstruction sum: the kernel
/// weighting of the dual basis applied to the logarithmic residue
/// direction. Chart changes flip the raw residue and this weight together.
pub fn pairing_weight(spec: &FamilySpec, frame: &LocalFrame) -> i64 {
    // Plane coordinates of the component, name-ordered, fix the fan.
    let mut plane: Vec<usize> = (0..=spec.n())
        .filter(|c| !frame.component.zero_coords().contains(c))
        .collect();
    plane.sort_by(|&a, &b| spec.coords()[a].name().cmp(spec.coords()[b].name()));
    let cpos = plane
        .iter()
        .position(|&c| c == frame.roles.transverse)
        .expect("transverse coordinate is in the plane");
    let hpos = plane
        .iter()
        .position(|&c| c == frame.roles.chart)
        .expect("chart coordinate is in the plane");
    sheaf::residue_pairing_weight(cpos, hpos)
}

/// The paired contribution of one residue: `weight * b / alpha`.
pub fn paired_contribution(spec: &FamilySpec, datum: &ResidueDatum) -> RatFunc {
    let weight = pairing_weight(spec, &datum.frame);
    let alpha = RatFunc::from_rat(datum.frame.alpha.clone());
    &(&datum.b / &alpha) * &RatFunc::from_int(weight)
}

/// The obstruction scalar at one order, with its normalized vanishing
/// condition on the parameters.
#[derive(Clone, Debug)]
pub struct KuranishiValue {
    pub order: u32,
    pub value: RatFunc,
    pub vanishing_condition: Poly,
    /// Per-point data at order 1: `(point, raw b1, pairing weight)`.
    pub residues: Vec<(SingularPoint, RatFunc, i64)>,
}

/// Locates the line's three boundary intersections as singular points,
/// building them in the edge's default chart.
pub fn boundary_feet(spec: &FamilySpec, line: &Line) -> Result<Vec<SingularPoint>> {
    let component = line.host_component(spec)?;
    if !line.is_torically_transverse(spec, &component)? {
        return Err(Error::NotPrelog(
            "line is not torically transverse".to_string(),
        ));
    }
    let coord_of = spec.toric_factor_coords()?;
    let own_factor = *component
        .defining()
        .iter()
        .next()
        .expect("component factor");
    let mut feet = Vec::new();
    for (factor, &coord) in coord_of.iter().enumerate() {
        if factor == own_factor {
            continue;
        }
        let Some(pt) = line.hyperplane_intersection(coord) else {
            return Err(Error::NotPrelog(
                "line lies inside a toric divisor".to_string(),
            ));
        };
        if !spec.eval_f_at_point(&pt).is_zero() {
            return Err(Error::NotPrelog(format!(
                "boundary intersection {} lies outside the singular locus",
                crate::lines::fmt_point(&pt)
            )));
        }
        let edge = spec.stratum([own_factor, factor].into_iter().collect(), None)?;
        let chart = edge.chart();
        let (a, b) = spec.edge_free_coords(&edge)?;
        let edge_coord = if chart == a { b } else { a };
        let affine = dehomogenize(&pt, chart)?;
        let alpha = affine[edge_coord].clone();
        feet.push(SingularPoint {
            edge,
            chart,
            edge_coord,
            alpha,
            homog: affine,
        });
    }
    Ok(feet)
}

/// First-order obstruction scalar of a pre-log line in a quartic family:
/// the weighted sum of the three paired residues.
pub fn kuranishi_first_order(spec: &FamilySpec, line: &Line) -> Result<KuranishiValue> {
    if spec.d() != 4 || spec.n() != 3 {
        return Err(Error::Unsupported(
            "the first-order scalar is defined for quartic threefold families".to_string(),
        ));
    }
    let feet = boundary_feet(spec, line)?;
    debug_assert_eq!(feet.len(), 3);
    let mut value = RatFunc::zero();
    let mut residues = Vec::new();
    for foot in feet {
        let frame = local_frame(spec, line, &foot)?;
        let datum = first_order_residue(spec, &frame)?;
        let weight = pairing_weight(spec, &frame);
        value = &value + &paired_contribution(spec, &datum);
        residues.push((foot, datum.b, weight));
    }
    let vanishing_condition = value.vanishing_condition();
    Ok(KuranishiValue {
        order: 1,
        value,
        vanishing_condition,
        residues,
    })
}

/// Order-`k` obstruction scalar (`k >= 2`) of a fully specialized family,
/// extracted from the lifting solver at `t^(k+1)`. All lower-order scalars
/// must vanish.
pub fn kuranishi_higher(spec: &FamilySpec, line: &Line, order: u32) -> Result<KuranishiValue> {
    if order < 2 {
        return Err(Error::Unsupported(
            "use kuranishi_first_order for order 1".to_string(),
        ));
    }
    if !spec.params().is_empty() {
        return Err(Error::Unsupported(
            "higher-order scalars need specialized (parameter-free) families".to_string(),
        ));
    }
    let res = lifter::lift_solve(spec, line, order + 1)?;
    let value = match res.status {
        LiftStatus::Solved(_) => RatFunc::zero(),
        LiftStatus::Obstructed(k) if k == order + 1 => res
            .obstruction_values
            .first()
            .cloned()
            .unwrap_or_else(RatFunc::zero),
        LiftStatus::Obstructed(k) => {
            return Err(Error::ObstructedAtLowerOrder(k.saturating_sub(1)))
        }
    };
    let vanishing_condition = value.vanishing_condition();
    Ok(KuranishiValue {
        order,
        value,
        vanishing_condition,
        residues: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// Class-(2) kill test: logarithmic tangent membership at xyz + tw = 0
// ---------------------------------------------------------------------------

/// A logarithmic vector field in the basis
/// `x d/dx, y d/dy, z d/dz, w d/dw, t d/dt`.
#[derive(Clone, Debug, PartialEq)]
pub struct LogVector(pub [RatFunc; 5]);

impl LogVector {
    pub fn from_ints(v: [i64; 5]) -> Self {
        LogVector(v.map(RatFunc::from_int))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        LogVector([
            &self.0[0] * c,
            &self.0[1] * c,
            &self.0[2] * c,
            &self.0[3] * c,
            &self.0[4] * c,
        ])
    }

    pub fn add(&self, other: &LogVector) -> Self {
        LogVector([
            &self.0[0] + &other.0[0],
            &self.0[1] + &other.0[1],
            &self.0[2] + &other.0[2],
            &self.0[3] + &other.0[3],
            &self.0[4] + &other.0[4],
        ])
    }
}

/// Generators of the logarithmic tangent sheaf of the local model
/// `xyz + tw = 0` at a class-(2) intersection point.
pub fn log_tangent_generators() -> [LogVector; 4] {
    [
        LogVector::from_ints([1, -1, 0, 0, 0]),  // x dx - y dy
        LogVector::from_ints([0, 1, -1, 0, 0]),  // y dy - z dz
        LogVector::from_ints([0, 0, 0, 1, -1]),  // w dw - t dt
        LogVector::from_ints([0, 0, 1, 1, 0]),   // z dz + w dw
    ]
}

/// Logarithmic tangent direction of the class-(2) curve
/// `x = a w, y = b w, z = t = 0` (`a, b` nonzero): `x dx + y dy + w dw`.
pub fn class2_curve_tangent(a: &Rat, b: &Rat) -> Result<LogVector> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidFamily(
            "class-(2) curve needs nonzero direction coefficients".to_string(),
        ));
    }
    // w d/dw pulls back to a w dx + b w dy + w dw = x dx + y dy + w dw.
    Ok(LogVector::from_ints([1, 1, 0, 1, 0]))
}

/// Exact membership of `v` in the module spanned by the four generators
/// over the function ring of the curve.
pub fn log_tangent_membership(v: &LogVector) -> bool {
    let gens = log_tangent_generators();
    let base_rank = ratfunc_rank(gens.iter().map(|g| g.0.to_vec()).collect());
    let mut rows: Vec<Vec<RatFunc>> = gens.iter().map(|g| g.0.to_vec()).collect();
    rows.push(v.0.to_vec());
    ratfunc_rank(rows) == base_rank
}

fn ratfunc_rank(mut rows: Vec<Vec<RatFunc>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        let prow: Vec<RatFunc> = rows[rank].iter().map(|v| v * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                *row = row
                    .iter()
                    .zip(prow.iter())
                    .map(|(v, p)| v - &(&factor * p))
                    .collect();
            }
        }
        rows[rank] = prow;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn pt(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| Rat::from_int(v)).collect()
    }

    fn worked_line() -> Line {
        Line::through(&pt(&[1, 0, 0, 1]), &pt(&[0, 0, -1, 1])).unwrap()
    }

    fn rf(s: &str) -> RatFunc {
        let p = Poly::parse(s, None).unwrap();
        RatFunc::from_poly(p)
    }

    fn foot_at(spec: &FamilySpec, line: &Line, coord: usize) -> SingularPoint {
        boundary_feet(spec, line)
            .unwrap()
            .into_iter()
            .find(|f| f.edge.zero_coords().contains(&coord))
            .unwrap()
    }

    #[test]
    fn worked_frame_at_first_point() {
        let spec = fixtures::k3_worked_example();
        let line = worked_line();
        let foot = foot_at(&spec, &line, 2); // on {y = z = 0}
        assert_eq!(foot.alpha, Rat::one());
        let frame = local_frame(&spec, &line, &foot).unwrap();
        // f1 restricted to the edge matches the worked value; the split
        // itself is only canonical up to multiples of the vanishing
        // coordinates.
        let edge_f1 = frame.f1.eval_map(
            &[
                (Var::new("y"), Rat::zero()),
                (Var::new("z"), Rat::zero()),
            ]
            .into_iter()
            .collect(),
        );
        assert_eq!(edge_f1, Poly::parse("x^3 + x^2 + (1+a)*x + 1", None).unwrap());
        assert_eq!(frame.unit, rf("4 + a"));
        assert_eq!(frame.f3, Poly::parse("1 + y^3", None).unwrap());
        // decomposition identity: f = (c - alpha) f1 + e f2 + m f3
        let fc = frame.f_chart(&spec);
        let recombined = &(&(&Poly::parse("x - 1", None).unwrap() * &frame.f1)
            + &(&Poly::var("z") * &frame.f2))
            + &(&Poly::var("y") * &frame.f3);
        assert_eq!(fc, recombined);
        // worked values of f4, f5 at the point
        let d = first_order_residue(&spec, &frame).unwrap();
        assert_eq!(d.b, RatFunc::new(
            Poly::parse("a + b + 2", None).unwrap(),
            Poly::parse("4 + a", None).unwrap()
        ).unwrap());
    }

    #[test]
    fn worked_residues_at_all_points() {
        let spec = fixtures::k3_worked_example();
        let line = worked_line();
        let cases: Vec<(usize, RatFunc)> = vec![
            (2, RatFunc::new(rf("a + b + 2").numer().clone(), rf("4 + a").numer().clone()).unwrap()),
            (0, RatFunc::new(rf("a + b - 2").numer().clone(), rf("2").numer().clone()).unwrap()),
            (3, RatFunc::zero()),
        ];
        for (coord, expected) in cases {
            let foot = foot_at(&spec, &line, coord);
            let frame = local_frame(&spec, &line, &foot).unwrap();
            let d = first_order_residue(&spec, &frame).unwrap();
            assert_eq!(d.b, expected, "residue at divisor {coord}");
        }
    }

    #[test]
    fn worked_kuranishi_vanishing_condition() {
        let spec = fixtures::k3_worked_example();
        let value = kuranishi_first_order(&spec, &worked_line()).unwrap();
        assert_eq!(
            value.vanishing_condition,
            Poly::parse("a^2 + a*b + 4*a + 6*b - 4", None).unwrap()
        );
    }

    #[test]
    fn residue_independent_of_division_order() {
        let spec = fixtures::k3_worked_example();
        let line = worked_line();
        for foot in boundary_feet(&spec, &line).unwrap() {
            let plain = local_frame_with(&spec, &line, &foot, DivisionOrder::TransverseFirst)
                .and_then(|f| first_order_residue(&spec, &f))
                .unwrap();
            let swapped = local_frame_with(&spec, &line, &foot, DivisionOrder::NormalFirst)
                .and_then(|f| first_order_residue(&spec, &f))
                .unwrap();
            assert_eq!(plain.b, swapped.b);
        }
    }

    #[test]
    fn model_case_all_residues_vanish() {
        let spec = fixtures::k3_model_case();
        let value = kuranishi_first_order(&spec, &worked_line()).unwrap();
        assert!(value.value.is_zero());
        assert!(value.vanishing_condition.is_zero());
        for (_, b, _) in &value.residues {
            assert!(b.is_zero());
        }
    }

    #[test]
    fn chart_covariance_of_paired_residue() {
        // The paired contribution weight * b1 / alpha is chart-independent;
        // exercised at the worked family's finite points and at the
        // infinity point of the default chart.
        let spec = fixtures::k3_worked_example();
        let line = worked_line();
        for foot in boundary_feet(&spec, &line).unwrap() {
            let (a, b) = spec.edge_free_coords(&foot.edge).unwrap();
            let other_chart = if foot.chart == a { b } else { a };
            let frame1 = local_frame(&spec, &line, &foot).unwrap();
            let c1 = paired_contribution(
                &spec,
                &first_order_residue(&spec, &frame1).unwrap(),
            );
            // Rebuild the same point in the opposite chart of its edge.
            let locus = spec
                .singular_points_on_edge(&foot.edge.with_chart(other_chart).unwrap())
                .unwrap();
            let twin = locus
                .points
                .into_iter()
                .find(|p| fixtures::homog_eq(&p.homog, &foot.homog))
                .expect("same point in the other chart");
            let frame2 = local_frame(&spec, &line, &twin).unwrap();
            let c2 = paired_contribution(
                &spec,
                &first_order_residue(&spec, &frame2).unwrap(),
            );
            assert_eq!(c1, c2, "chart covariance at {}", foot.describe());
        }
    }

    #[test]
    fn higher_order_on_specialized_family() {
        let spec = fixtures::k3_worked_example();
        // On the vanishing locus: a = 0, b = 2/3.
        let good = spec
            .specialize(
                &[
                    (Var::new("a"), Rat::zero()),
                    (Var::new("b"), Rat::from_frac(2, 3)),
                ]
                .into_iter()
                .collect(),
            )
            .unwrap();
        let line = worked_line();
        let value = kuranishi_higher(&good, &line, 2).unwrap();
        // Cross-check against direct solvability at t^3.
        let lifted = lifter::lift_solve(&good, &line, 3).unwrap();
        match lifted.status {
            LiftStatus::Solved(_) => assert!(value.value.is_zero()),
            LiftStatus::Obstructed(3) => assert!(!value.value.is_zero()),
            other => panic!("unexpected status {other:?}"),
        }
        // Off the locus: the order-1 obstruction blocks order 2.
        let bad = spec
            .specialize(
                &[(Var::new("a"), Rat::zero()), (Var::new("b"), Rat::zero())]
                    .into_iter()
                    .collect(),
            )
            .unwrap();
        assert!(matches!(
            kuranishi_higher(&bad, &line, 2),
            Err(Error::ObstructedAtLowerOrder(1))
        ));
    }

    #[test]
    fn model_family_higher_orders_vanish() {
        let spec = fixtures::k3_model_case();
        let line = worked_line();
        for k in 2..=3 {
            let value = kuranishi_higher(&spec, &line, k).unwrap();
            assert!(value.value.is_zero(), "order {k}");
        }
    }

    #[test]
    fn log_tangent_kill_test() {
        let tangent = class2_curve_tangent(&Rat::from_int(2), &Rat::from_int(-3)).unwrap();
        assert!(!log_tangent_membership(&tangent));
        for g in log_tangent_generators() {
            assert!(log_tangent_membership(&g));
        }
        // an explicit combination: 2(y dy - z dz) + (z dz + w dw)
        let gens = log_tangent_generators();
        let combo = gens[1].scale(&RatFunc::from_int(2)).add(&gens[3]);
        assert!(log_tangent_membership(&combo));
        assert!(class2_curve_tangent(&Rat::zero(), &Rat::one()).is_err());
    }
}
