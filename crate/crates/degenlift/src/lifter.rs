//! Direct order-by-order lifting of a line: substitute a truncated ansatz
//! into the total equation, collect the coefficient of each `s^i t^k` and
//! solve the resulting exact linear systems over the parameter field one
//! t-order at a time. Inconsistencies become the obstruction ideal.
//!
//! The ansatz fixes the curve parameter on the first in-plane coordinate
//! (`u = s`), corrects the second in-plane coordinate and the component's
//! normal coordinate by degree-one polynomials per t-order, and uses the
//! chart where the last coordinate is 1:
//!
//! ```text
//! u = s,
//! v = intercept + slope s + sum_k t^k (a_k s + b_k),
//! m =                       sum_k t^k (c_k s + d_k).
//! ```

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::family::{FamilySpec, Stratum};
use crate::lines::Line;
use crate::poly::{Poly, Var};
use crate::rat::Rat;
use crate::ratfunc::RatFunc;
use crate::series::{self, Series, Trunc};

/// Chart and coordinate roles for the lifting ansatz of one line.
#[derive(Clone, Debug)]
pub struct LiftFrame {
    pub component: Stratum,
    /// Coordinate set to 1.
    pub chart: usize,
    /// In-plane coordinate carrying the curve parameter `s`.
    pub param_coord: usize,
    /// In-plane coordinate receiving the `a_k s + b_k` corrections.
    pub corrected_coord: usize,
    /// Component coordinate receiving the `c_k s + d_k` corrections.
    pub normal_coord: usize,
    pub slope: Rat,
    pub intercept: Rat,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LiftStatus {
    /// All t-orders up to the bound solved.
    Solved(u32),
    /// First inconsistent t-order.
    Obstructed(u32),
}

/// Outcome of an order-by-order lift.
#[derive(Clone, Debug)]
pub struct LiftResult {
    pub frame: LiftFrame,
    pub status: LiftStatus,
    /// Solved coefficients in canonical order (`a1, b1, c1, d1, a2, ...`);
    /// unconstrained trailing coefficients are reported as zero.
    pub solved: Vec<(String, RatFunc)>,
    /// Normalized parameter conditions required for solvability.
    pub ideal: Vec<Poly>,
    /// Raw inconsistent residuals at the obstructed order (empty когда solved).
    pub obstruction_values: Vec<RatFunc>,
}

/// Options for the lifting ansatz; `reparametrize` adds redundant
/// `u`-corrections, exercising invariance of the obstruction ideal.
#[derive(Clone, Copy, Default)]
pub struct LiftOptions {
    pub reparametrize: bool,
}

const UNKNOWN_PREFIX: char = '_';

fn unknown(letter: char, order: u32) -> Var {
    Var::new(&format!("{UNKNOWN_PREFIX}{letter}{order}"))
}

fn is_unknown(v: &Var) -> bool {
    v.name().starts_with(UNKNOWN_PREFIX)
}

fn display_unknown(v: &Var) -> String {
    v.name().trim_start_matches(UNKNOWN_PREFIX).to_string()
}

/// Builds the ansatz frame for a line in a plane component, or explains why
/// the ansatz shape does not apply.
pub fn build_frame(spec: &FamilySpec, line: &Line) -> Result<LiftFrame> {
    if spec.n() != 3 {
        return Err(Error::AnsatzInapplicable(
            "the degree-one ansatz needs plane components (ambient P^3)".to_string(),
        ));
    }
    let component = line.host_component(spec)?;
    if !line.is_torically_transverse(spec, &component)? {
        return Err(Error::AnsatzInapplicable(
            "line passes through a torus-fixed point of its component".to_string(),
        ));
    }
    let normal_coord = *component
        .zero_coords()
        .iter()
        .next()
        .expect("component fixes one coordinate");
    let chart = component.chart();
    let inplane: Vec<usize> = (0..=spec.n())
        .filter(|&c| c != normal_coord && c != chart)
        .collect();
    let (u, v) = (inplane[0], inplane[1]);
    let (slope, intercept) = line
        .chart_form(spec, &component)?
        .expect("transverse line has nonzero equation coefficients");
    Ok(LiftFrame {
        component,
        chart,
        param_coord: u,
        corrected_coord: v,
        normal_coord,
        slope,
        intercept,
    })
}

/// Expands the total equation along the ansatz and solves the per-order
/// linear systems up to `t^order`.
pub fn lift_solve(spec: &FamilySpec, line: &Line, order: u32) -> Result<LiftResult> {
    lift_solve_with(spec, line, order, LiftOptions::default())
}

pub fn lift_solve_with(
    spec: &FamilySpec,
    line: &Line,
    order: u32,
    opts: LiftOptions,
) -> Result<LiftResult> {
    if order < 1 {
        return Err(Error::Unsupported("lift order must be >= 1".to_string()));
    }
    let frame = build_frame(spec, line)?;
    let equation = spec.total_equation();
    let trunc = Trunc::st(spec.d() + 3, order);
    let max_s = spec.d() + 1;

    // Unknowns, introduction-ordered.
    let mut priority: Vec<Var> = Vec::new();
    for k in 1..=order {
        for letter in ['a', 'b', 'c', 'd'] {
            priority.push(unknown(letter, k));
        }
        if opts.reparametrize {
            priority.push(unknown('e', k));
            priority.push(unknown('g', k));
        }
    }

    let mut solved: BTreeMap<Var, RatFunc> = BTreeMap::new();
    let mut ideal: Vec<Poly> = Vec::new();
    let mut obstruction_values: Vec<RatFunc> = Vec::new();
    let mut status = LiftStatus::Solved(order);

    'orders: for k in 1..=order {
        let bindings = ansatz_bindings(spec, &frame, order, trunc, &solved, opts)?;
        let expansion = series::substitute(&equation, &bindings, trunc)?;
        let slice = expansion.t_slice(k);
        for (i, _) in &slice {
            if *i > max_s {
                return Err(Error::Unsupported(format!(
                    "order-{k} residual has s-degree {i} > {max_s}; expansion bug"
                )));
            }
        }
        let rows = extract_rows(&slice)?;
        let outcome = eliminate(rows, &priority);
        for (var, value) in outcome.solutions {
            solved.insert(var, value);
        }
        if !outcome.leftovers.is_empty() {
            status = LiftStatus::Obstructed(k);
            for residual in outcome.leftovers {
                obstruction_values.push(residual.clone());
                let gen = residual.vanishing_condition();
                if !gen.is_constant() && !ideal.contains(&gen) {
                    ideal.push(gen);
                }
            }
            break 'orders;
        }
    }

    // Solutions reference free unknowns only; free coefficients (such as
    // the top-order a_N, b_N) default to zero.
    let mut resolved: BTreeMap<Var, RatFunc> = BTreeMap::new();
    for var in &priority {
        let value = match solved.get(var) {
            Some(v) => {
                let subs: BTreeMap<Var, RatFunc> = v
                    .vars()
                    .into_iter()
                    .filter(is_unknown)
                    .map(|w| (w, RatFunc::zero()))
                    .collect();
                if subs.is_empty() {
                    v.clone()
                } else {
                    v.subst_map(&subs)?
                }
            }
            None => RatFunc::zero(),
        };
        resolved.insert(var.clone(), value);
    }

    if matches!(status, LiftStatus::Solved(_)) {
        verify_substitution(spec, &frame, order, trunc, &resolved, opts)?;
    }

    ideal.sort();
    let solved_list: Vec<(String, RatFunc)> = priority
        .iter()
        .filter(|v| solved.contains_key(v) || matches!(status, LiftStatus::Solved(_)))
        .map(|v| (display_unknown(v), resolved[v].clone()))
        .collect();
    Ok(LiftResult {
        frame,
        status,
        solved: solved_list,
        ideal,
        obstruction_values,
    })
}

/// The obstruction ideal: parameter conditions for solvability to `t^order`.
pub fn obstruction_ideal(spec: &FamilySpec, line: &Line, order: u32) -> Result<Vec<Poly>> {
    Ok(lift_solve(spec, line, order)?.ideal)
}

fn ansatz_bindings(
    spec: &FamilySpec,
    frame: &LiftFrame,
    order: u32,
    trunc: Trunc,
    solved: &BTreeMap<Var, RatFunc>,
    opts: LiftOptions,
) -> Result<BTreeMap<Var, Series>> {
    let coeff = |letter: char, k: u32| -> RatFunc {
        let var = unknown(letter, k);
        solved
            .get(&var)
            .cloned()
            .unwrap_or_else(|| RatFunc::var(var.name()))
    };
    let mut u_series = Series::var_s(trunc)?;
    let mut v_series = Series::zero(trunc);
    v_series.set_coeff(0, 0, RatFunc::from_rat(frame.intercept.clone()));
    v_series.set_coeff(1, 0, RatFunc::from_rat(frame.slope.clone()));
    let mut m_series = Series::zero(trunc);
    for k in 1..=order {
        v_series.set_coeff(1, k, coeff('a', k));
        v_series.set_coeff(0, k, coeff('b', k));
        m_series.set_coeff(1, k, coeff('c', k));
        m_series.set_coeff(0, k, coeff('d', k));
        if opts.reparametrize {
            u_series.set_coeff(1, k, coeff('e', k));
            u_series.set_coeff(0, k, coeff('g', k));
        }
    }
    let coords = spec.coords();
    let mut bindings: BTreeMap<Var, Series> = BTreeMap::new();
    bindings.insert(coords[frame.param_coord].clone(), u_series);
    bindings.insert(coords[frame.corrected_coord].clone(), v_series);
    bindings.insert(coords[frame.normal_coord].clone(), m_series);
    bindings.insert(
        coords[frame.chart].clone(),
        Series::constant(RatFunc::one(), trunc),
    );
    bindings.insert(spec.t_var(), Series::var_t(trunc)?);
    Ok(bindings)
}

/// Re-substitutes the fully resolved ansatz and checks that every t-order
/// up to the solved bound vanishes identically.
fn verify_substitution(
    spec: &FamilySpec,
    frame: &LiftFrame,
    order: u32,
    trunc: Trunc,
    resolved: &BTreeMap<Var, RatFunc>,
    opts: LiftOptions,
) -> Result<()> {
    let bindings = ansatz_bindings(spec, frame, order, trunc, resolved, opts)?;
    let expansion = series::substitute(&spec.total_equation(), &bindings, trunc)?;
    for k in 0..=order {
        let slice = expansion.t_slice(k);
        if !slice.is_empty() {
            return Err(Error::Unsupported(format!(
                "solved lift leaves a t^{k} residual; solver bug"
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Linear rows and elimination over the parameter field
// ---------------------------------------------------------------------------

/// One `s^i` coefficient: a linear form in the unknowns over Q(params).
#[derive(Clone)]
struct LinRow {
    s_index: u32,
    coeffs: BTreeMap<Var, RatFunc>,
    konst: RatFunc,
}

impl LinRow {
    fn live(&self) -> usize {
        self.coeffs.len()
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.is_empty() && self.konst.is_zero()
    }
}

impl fmt::Debug for LinRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s^{}:", self.s_index)?;
        for (v, c) in &self.coeffs {
            write!(f, " + ({c})*{v}")?;
        }
        write!(f, " + ({})", self.konst)
    }
}

/// Splits each series coefficient into a linear row over the unknowns.
fn extract_rows(slice: &[(u32, RatFunc)]) -> Result<Vec<LinRow>> {
    let mut rows = Vec::new();
    for (i, value) in slice {
        for v in value.denom().vars() {
            if is_unknown(&v) {
                return Err(Error::Unsupported(
                    "unknown appears in a denominator; nonlinear system".to_string(),
                ));
            }
        }
        let den = RatFunc::from_poly(value.denom().clone());
        let mut coeffs = BTreeMap::new();
        let mut konst = RatFunc::zero();
        for (mono, bucket) in value.numer().group_by(is_unknown) {
            let part = &RatFunc::from_poly(bucket) / &den;
            match mono.pairs() {
                [] => konst = part,
                [(v, 1)] => {
                    coeffs.insert(v.clone(), part);
                }
                _ => {
                    return Err(Error::Unsupported(format!(
                        "residual is nonlinear in the unknowns (term {mono})"
                    )))
                }
            }
        }
        let row = LinRow {
            s_index: *i,
            coeffs,
            konst,
        };
        if !row.is_trivial() {
            rows.push(row);
        }
    }
    Ok(rows)
}

struct Elimination {
    /// `(unknown, value)` where values may reference still-free unknowns.
    solutions: Vec<(Var, RatFunc)>,
    /// Unknown-free nonzero residuals: the consistency conditions.
    leftovers: Vec<RatFunc>,
}

/// Gauss-Jordan over Q(params) with a deterministic pivot rule: unknowns in
/// canonical order; for each, the row with the fewest live unknowns, ties
/// broken toward the lowest s-power.
fn eliminate(mut rows: Vec<LinRow>, priority: &[Var]) -> Elimination {
    let mut solutions = Vec::new();
    for u in priority {
        let mut best: Option<usize> = None;
        for (idx, row) in rows.iter().enumerate() {
            if !row.coeffs.contains_key(u) {
                continue;
            }
            best = match best {
                None => Some(idx),
                Some(b) => {
                    let better = (rows[idx].live(), rows[idx].s_index)
                        < (rows[b].live(), rows[b].s_index);
                    Some(if better { idx } else { b })
                }
            };
        }
        let Some(pivot_idx) = best else { continue };
        let pivot = rows.swap_remove(pivot_idx);
        let lead = pivot.coeffs[u].clone();
        // u = -(konst + sum coeffs_w w)/lead
        let mut value_coeffs: BTreeMap<Var, RatFunc> = BTreeMap::new();
        for (w, c) in &pivot.coeffs {
            if w != u {
                value_coeffs.insert(w.clone(), -&(c / &lead));
            }
        }
        let value_konst = -&(&pivot.konst / &lead);
        let value = linform_to_ratfunc(&value_coeffs, &value_konst);
        // substitute into the remaining rows
        for row in rows.iter_mut() {
            if let Some(c) = row.coeffs.remove(u) {
                row.konst = &row.konst + &(&c * &value_konst);
                for (w, vc) in &value_coeffs {
                    let updated = &row.coeffs.get(w).cloned().unwrap_or_else(RatFunc::zero)
                        + &(&c * vc);
                    if updated.is_zero() {
                        row.coeffs.remove(w);
                    } else {
                        row.coeffs.insert(w.clone(), updated);
                    }
                }
            }
        }
        rows.retain(|r| !r.is_trivial());
        solutions.push((u.clone(), value));
    }
    // Back-substitute until each value references free unknowns only; the
    // elimination is triangular, so this terminates.
    let table: BTreeMap<Var, RatFunc> = solutions.iter().cloned().collect();
    let solutions = solutions
        .into_iter()
        .map(|(u, mut v)| {
            loop {
                let subs: BTreeMap<Var, RatFunc> = v
                    .vars()
                    .into_iter()
                    .filter(|w| table.contains_key(w))
                    .map(|w| (w.clone(), table[&w].clone()))
                    .collect();
                if subs.is_empty() {
                    break;
                }
                v = v.subst_map(&subs).expect("substitution of solved values");
            }
            (u, v)
        })
        .collect();
    let mut leftovers = Vec::new();
    for row in rows {
        debug_assert!(row.coeffs.is_empty(), "unpivoted unknown in {row:?}");
        if !row.konst.is_zero() {
            leftovers.push(row.konst);
        }
    }
    Elimination {
        solutions,
        leftovers,
    }
}

fn linform_to_ratfunc(coeffs: &BTreeMap<Var, RatFunc>, konst: &RatFunc) -> RatFunc {
    let mut acc = konst.clone();
    for (w, c) in coeffs {
        acc = &acc + &(c * &RatFunc::var(w.name()));
    }
    acc
}

// ---------------------------------------------------------------------------
// Model case
// ---------------------------------------------------------------------------

/// Order-by-order lift of the curve `X = s, Z = s zeta(s), Y = 0` inside the
/// model `XY + tZ = 0`. True when the Z-correction of every order computed
/// by the solver is forced to vanish at `s = 0` (its constant, the
/// `b`-type obstruction, is pinned to zero), for the orders the system
/// constrains (`1..order`).
pub fn model_case_check(zeta: &Poly, order: u32) -> Result<bool> {
    let s_var = Var::new(series::VAR_S);
    for v in zeta.vars() {
        if v != s_var {
            return Err(Error::UnknownVariable(v.name().to_string()));
        }
    }
    let deg = zeta.degree_in(&s_var);
    let trunc = Trunc::st(deg + 3, order);
    let equation = Poly::parse("X*Y + t*Z", None).expect("model equation");

    // Unknown coefficient grids: Y corrections of degree <= deg, Z
    // corrections of degree <= deg + 1.
    let yc = |k: u32, i: u32| Var::new(&format!("_y{k}x{i}"));
    let zc = |k: u32, i: u32| Var::new(&format!("_z{k}x{i}"));
    let mut priority = Vec::new();
    for k in 1..=order {
        for i in 0..=deg + 1 {
            priority.push(zc(k, i));
        }
        for i in 0..=deg {
            priority.push(yc(k, i));
        }
    }

    let s = Series::var_s(trunc)?;
    let mut z0 = Series::zero(trunc);
    for (m, c) in zeta.terms() {
        z0.set_coeff(m.exp_of(&s_var) + 1, 0, RatFunc::from_rat(c.clone()));
    }
    let mut y_series = Series::zero(trunc);
    let mut z_series = z0;
    for k in 1..=order {
        for i in 0..=deg {
            y_series.set_coeff(i, k, RatFunc::var(yc(k, i).name()));
        }
        for i in 0..=deg + 1 {
            z_series.set_coeff(i, k, RatFunc::var(zc(k, i).name()));
        }
    }
    let bindings: BTreeMap<Var, Series> = [
        (Var::new("X"), s),
        (Var::new("Y"), y_series),
        (Var::new("Z"), z_series),
        (Var::new("t"), Series::var_t(trunc)?),
    ]
    .into_iter()
    .collect();
    let expansion = series::substitute(&equation, &bindings, trunc)?;

    let mut rows = Vec::new();
    for k in 1..=order {
        rows.extend(extract_rows(&expansion.t_slice(k))?);
    }
    let outcome = eliminate(rows, &priority);
    if !outcome.leftovers.is_empty() {
        return Ok(false);
    }
    let solved: BTreeMap<Var, RatFunc> = outcome.solutions.into_iter().collect();
    // Constants of Z-corrections constrained by the system: orders 1..order.
    for k in 1..order {
        match solved.get(&zc(k, 0)) {
            Some(v) if v.is_zero() => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lines::Line;

    fn pt(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| Rat::from_int(v)).collect()
    }

    fn worked_line() -> Line {
        Line::through(&pt(&[1, 0, 0, 1]), &pt(&[0, 0, -1, 1])).unwrap()
    }

    #[test]
    fn frame_roles_match_chart() {
        let spec = fixtures::k3_worked_example();
        let frame = build_frame(&spec, &worked_line()).unwrap();
        assert_eq!(frame.chart, 3); // w
        assert_eq!(frame.param_coord, 0); // x
        assert_eq!(frame.corrected_coord, 2); // z
        assert_eq!(frame.normal_coord, 1); // y
        assert_eq!(frame.slope, Rat::one());
        assert_eq!(frame.intercept, Rat::from_int(-1));
    }

    #[test]
    fn worked_first_order_coefficients() {
        let spec = fixtures::k3_worked_example();
        let res = lift_solve(&spec, &worked_line(), 1).unwrap();
        assert_eq!(res.status, LiftStatus::Solved(1));
        let get = |name: &str| {
            res.solved
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| v.clone())
                .unwrap()
        };
        assert_eq!(get("c1"), RatFunc::from_int(-4));
        assert_eq!(
            get("d1"),
            RatFunc::from_poly(Poly::parse("2 - a - b", None).unwrap())
        );
        assert!(res.ideal.is_empty());
    }

    #[test]
    fn worked_second_order_obstruction() {
        let spec = fixtures::k3_worked_example();
        let res = lift_solve(&spec, &worked_line(), 2).unwrap();
        assert_eq!(res.status, LiftStatus::Obstructed(2));
        assert_eq!(res.ideal.len(), 1);
        assert_eq!(
            res.ideal[0],
            Poly::parse("a^2 + a*b + 4*a + 6*b - 4", None).unwrap()
        );
        let get = |name: &str| {
            res.solved
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| v.clone())
                .unwrap()
        };
        assert_eq!(get("c1"), RatFunc::from_int(-4));
        assert_eq!(
            get("d1"),
            RatFunc::from_poly(Poly::parse("2 - a - b", None).unwrap())
        );
        assert!(get("a1").is_zero());
        assert_eq!(
            get("b1"),
            RatFunc::new(
                Poly::parse("a + b - 2", None).unwrap(),
                Poly::parse("2", None).unwrap()
            )
            .unwrap()
        );
    }

    #[test]
    fn reparametrized_ansatz_same_ideal() {
        let spec = fixtures::k3_worked_example();
        let plain = lift_solve(&spec, &worked_line(), 2).unwrap();
        let wide = lift_solve_with(
            &spec,
            &worked_line(),
            2,
            LiftOptions {
                reparametrize: true,
            },
        )
        .unwrap();
        assert_eq!(plain.ideal, wide.ideal);
        assert_eq!(wide.status, LiftStatus::Obstructed(2));
    }

    #[test]
    fn trivial_family_lifts_identically() {
        let spec = fixtures::k3_trivial_on_plane();
        let res = lift_solve(&spec, &worked_line(), 4).unwrap();
        assert_eq!(res.status, LiftStatus::Solved(4));
        assert!(res.ideal.is_empty());
        assert!(res.solved.iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn model_like_family_lifts() {
        let spec = fixtures::k3_model_case();
        let res = lift_solve(&spec, &worked_line(), 3).unwrap();
        assert_eq!(res.status, LiftStatus::Solved(3));
        assert!(res.ideal.is_empty());
    }

    #[test]
    fn specialized_on_locus_solves_order_two() {
        let spec = fixtures::k3_worked_example();
        // a = 0, b = 2/3 satisfies a^2 + ab + 4a + 6b - 4 = 0.
        let special = spec
            .specialize(
                &[
                    (Var::new("a"), Rat::zero()),
                    (Var::new("b"), Rat::from_frac(2, 3)),
                ]
                .into_iter()
                .collect(),
            )
            .unwrap();
        let res = lift_solve(&special, &worked_line(), 2).unwrap();
        assert_eq!(res.status, LiftStatus::Solved(2));
        // a = b = 0 violates it.
        let bad = spec
            .specialize(
                &[(Var::new("a"), Rat::zero()), (Var::new("b"), Rat::zero())]
                    .into_iter()
                    .collect(),
            )
            .unwrap();
        let res = lift_solve(&bad, &worked_line(), 2).unwrap();
        assert_eq!(res.status, LiftStatus::Obstructed(2));
        assert!(res.ideal.is_empty()); // constant residual, no parameters
        assert!(!res.obstruction_values.is_empty());
    }

    #[test]
    fn cubic_lines_lift_to_order_three() {
        let spec = fixtures::cubic_toric_example();
        let comp = spec.component(0).unwrap();
        let res =
            crate::lines::prelog_lines_cubic(&spec, &comp, crate::lines::LocusPolicy::Strict)
                .unwrap();
        assert_eq!(res.lines.len(), 9);
        for line in &res.lines {
            let lifted = lift_solve(&spec, line, 3).unwrap();
            assert_eq!(lifted.status, LiftStatus::Solved(3), "line {line:?}");
            assert!(lifted.ideal.is_empty());
        }
    }

    #[test]
    fn model_case_examples() {
        let one = Poly::parse("1", None).unwrap();
        assert!(model_case_check(&one, 3).unwrap());
        let zeta = Poly::parse("1 + s^2", None).unwrap();
        assert!(model_case_check(&zeta, 4).unwrap());
    }

    #[test]
    fn model_case_randomized() {
        let mut rng = fixtures::Rng::new(7);
        for _ in 0..10 {
            let mut zeta = Poly::zero();
            for e in 0..=3u32 {
                zeta = &zeta
                    + &Poly::parse(&format!("s^{e}"), None)
                        .unwrap()
                        .scale(&rng.rat(5));
            }
            if zeta.is_zero() {
                continue;
            }
            assert!(model_case_check(&zeta, 4).unwrap(), "zeta = {zeta}");
        }
    }
}
