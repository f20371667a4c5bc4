//! Lines in components of the central fiber: exact collinearity, the
//! pre-log incidence enumeration on quartic and cubic degenerations, and
//! the incidence classification of lines in quintic components.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::family::{FamilySpec, SingularPoint, Stratum, StratumKind};

use crate::rat::Rat;

/// A projective line given by two distinct spanning points, with a canonical
/// reduced-row-echelon presentation used for equality and ordering.
#[derive(Clone)]
pub struct Line {
    points: [Vec<Rat>; 2],
    canonical: Vec<Vec<Rat>>,
}

impl PartialEq for Line {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for Line {}

impl Line {
    /// The unique line through two distinct points.
    pub fn through(p: &[Rat], q: &[Rat]) -> Result<Line> {
        if p.len() != q.len() {
            return Err(Error::InvalidFamily(
                "points of different ambient dimension".to_string(),
            ));
        }
        let (rank, canonical) = rref(vec![p.to_vec(), q.to_vec()]);
        if rank != 2 {
            return Err(Error::InvalidFamily(format!(
                "points {} and {} do not span a line",
                fmt_point(p),
                fmt_point(q)
            )));
        }
        Ok(Line {
            points: [p.to_vec(), q.to_vec()],
            canonical,
        })
    }

    pub fn points(&self) -> &[Vec<Rat>; 2] {
        &self.points
    }

    /// Canonical primitive-integer spanning rows; equal lines have equal rows.
    pub fn canonical_rows(&self) -> &[Vec<Rat>] {
        &self.canonical
    }

    pub fn contains(&self, pt: &[Rat]) -> bool {
        let rows = vec![
            self.points[0].clone(),
            self.points[1].clone(),
            pt.to_vec(),
        ];
        let (rank, _) = rref(rows);
        rank <= 2
    }

    /// Coordinates vanishing identically on the line.
    pub fn zero_coords(&self) -> BTreeSet<usize> {
        (0..self.points[0].len())
            .filter(|&i| self.points[0][i].is_zero() && self.points[1][i].is_zero())
            .collect()
    }

    /// Factor indices of the central-fiber components containing the line.
    pub fn host_components(&self, spec: &FamilySpec) -> Result<Vec<usize>> {
        let coord_of = spec.toric_factor_coords()?;
        let zeros = self.zero_coords();
        Ok((0..coord_of.len())
            .filter(|&i| zeros.contains(&coord_of[i]))
            .collect())
    }

    /// The unique component hosting the line; errors when the line lies in
    /// a deeper stratum or outside the central fiber.
    pub fn host_component(&self, spec: &FamilySpec) -> Result<Stratum> {
        let hosts = self.host_components(spec)?;
        match hosts.as_slice() {
            [i] => spec.component(*i),
            [] => Err(Error::InvalidFamily(
                "line lies in no component of the central fiber".to_string(),
            )),
            _ => Err(Error::InvalidFamily(
                "line lies in a toric boundary stratum".to_string(),
            )),
        }
    }

    /// In-plane equation coefficients over the component's three free
    /// coordinates (ascending coordinate index), canonically normalized.
    pub fn plane_form(&self, spec: &FamilySpec, component: &Stratum) -> Result<Vec<Rat>> {
        if component.kind() != StratumKind::Component || spec.n() != 3 {
            return Err(Error::Unsupported(
                "plane form needs a plane component of a threefold family".to_string(),
            ));
        }
        let free: Vec<usize> = (0..=spec.n())
            .filter(|c| !component.zero_coords().contains(c))
            .collect();
        // coefficients orthogonal to both points
        let p: Vec<Rat> = free.iter().map(|&c| self.points[0][c].clone()).collect();
        let q: Vec<Rat> = free.iter().map(|&c| self.points[1][c].clone()).collect();
        let cross = [
            &(&p[1] * &q[2]) - &(&p[2] * &q[1]),
            &(&p[2] * &q[0]) - &(&p[0] * &q[2]),
            &(&p[0] * &q[1]) - &(&p[1] * &q[0]),
        ];
        if cross.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidFamily(
                "line is not contained in the component".to_string(),
            ));
        }
        Ok(normalize_primitive(cross.to_vec()))
    }

    /// A line is torically transverse in its plane component when its
    /// equation has no zero coefficient: it then misses the torus-fixed
    /// vertices and meets each boundary line once, in the interior.
    pub fn is_torically_transverse(&self, spec: &FamilySpec, component: &Stratum) -> Result<bool> {
        Ok(self
            .plane_form(spec, component)?
            .iter()
            .all(|c| !c.is_zero()))
    }

    /// Intersection with the hyperplane `{coordinate c = 0}`; `None` when
    /// the line lies inside it.
    pub fn hyperplane_intersection(&self, c: usize) -> Option<Vec<Rat>> {
        let vp = &self.points[0][c];
        let vq = &self.points[1][c];
        if vp.is_zero() && vq.is_zero() {
            return None;
        }
        // vq * P - vp * Q vanishes at coordinate c.
        let pt: Vec<Rat> = (0..self.points[0].len())
            .map(|i| &(vq * &self.points[0][i]) - &(vp * &self.points[1][i]))
            .collect();
        Some(normalize_primitive(pt))
    }

    /// `(slope, intercept)` of the line in the chart of `component`, as
    /// functions of the first free coordinate: second = slope * first +
    /// intercept. `None` when the line is vertical in this chart.
    pub fn chart_form(&self, spec: &FamilySpec, component: &Stratum) -> Result<Option<(Rat, Rat)>> {
        let form = self.plane_form(spec, component)?;
        let free: Vec<usize> = (0..=spec.n())
            .filter(|c| !component.zero_coords().contains(c))
            .collect();
        let hpos = free
            .iter()
            .position(|&c| c == component.chart())
            .expect("chart is free on the component");
        let inplane: Vec<usize> = (0..3).filter(|&i| i != hpos).collect();
        let (u, v) = (inplane[0], inplane[1]);
        // form[u] * U + form[v] * V + form[h] = 0 in the chart
        if form[v].is_zero() {
            return Ok(None);
        }
        let slope = -&(&form[u] / &form[v]);
        let intercept = -&(&form[hpos] / &form[v]);
        Ok(Some((slope, intercept)))
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.canonical.iter().map(|r| fmt_point(r)).collect();
        write!(f, "Line[{}]", rows.join("; "))
    }
}

impl PartialOrd for Line {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Line {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical.cmp(&other.canonical)
    }
}

pub fn fmt_point(p: &[Rat]) -> String {
    let parts: Vec<String> = p.iter().map(|r| r.to_string()).collect();
    format!("({})", parts.join(":"))
}

/// Exact collinearity: the three points span at most a line.
pub fn collinear(p: &[Rat], q: &[Rat], r: &[Rat]) -> bool {
    let (rank, _) = rref(vec![p.to_vec(), q.to_vec(), r.to_vec()]);
    rank <= 2
}

/// Reduced row echelon form over the rationals; rows normalized to
/// primitive integers with positive leading entry. Zero rows dropped.
fn rref(mut rows: Vec<Vec<Rat>>) -> (usize, Vec<Vec<Rat>>) {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip().expect("nonzero pivot");
        let prow: Vec<Rat> = rows[rank].iter().map(|v| v * &inv).collect();
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
    rows.truncate(rank);
    let rows = rows.into_iter().map(normalize_primitive).collect();
    (rank, rows)
}

/// Scales a rational vector to primitive integers with positive first
/// nonzero entry.
fn normalize_primitive(v: Vec<Rat>) -> Vec<Rat> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Zero;
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::from(1);
    for c in &v {
        if !c.is_zero() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    if num_gcd.is_zero() {
        return v;
    }
    let mut content = Rat::new(num_gcd, den_lcm).expect("nonzero lcm");
    if v.iter().find(|c| !c.is_zero()).map(|c| c.is_negative()) == Some(true) {
        content = -content;
    }
    let inv = content.recip().expect("nonzero content");
    v.into_iter().map(|c| &c * &inv).collect()
}

/// Enumeration policy when an edge carries unresolved (irrational or
/// parameter-dependent) singular points.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LocusPolicy {
    /// Error out on any unresolved root on a relevant edge.
    Strict,
    /// Enumerate over the materialized rational points only.
    Partial,
}

/// Result of a pre-log line enumeration on one component.
#[derive(Clone, Debug)]
pub struct PrelogLines {
    pub component: Stratum,
    pub lines: Vec<Line>,
    /// Unresolved root count per relevant edge, in edge order.
    pub unresolved: Vec<(Stratum, u32)>,
}

/// Edges of the component glued to another component of the central fiber,
/// ordered by their defining factor sets.
pub fn gluing_edges(spec: &FamilySpec, component: &Stratum) -> Result<Vec<Stratum>> {
    if component.kind() != StratumKind::Component {
        return Err(Error::InvalidFamily("not a component stratum".to_string()));
    }
    if spec.n() != 3 {
        return Err(Error::Unsupported(
            "gluing-edge enumeration is implemented for threefold ambients".to_string(),
        ));
    }
    let own = *component
        .defining()
        .iter()
        .next()
        .expect("component has one defining factor");
    let mut out = Vec::new();
    for other in 0..spec.factors().len() {
        if other == own {
            continue;
        }
        out.push(spec.stratum([own, other].into_iter().collect(), None)?);
    }
    Ok(out)
}

/// All lines in a quartic (K3-type) component meeting each of the three
/// boundary lines in a singular point of the total space: brute force over
/// the point triples, exact collinearity, toric transversality enforced.
pub fn prelog_lines_k3(
    spec: &FamilySpec,
    component: &Stratum,
    policy: LocusPolicy,
) -> Result<PrelogLines> {
    if spec.d() != 4 || spec.n() != 3 {
        return Err(Error::Unsupported(
            "pre-log K3 enumeration needs a quartic threefold family".to_string(),
        ));
    }
    let edges = gluing_edges(spec, component)?;
    debug_assert_eq!(edges.len(), 3);
    let loci = collect_loci(spec, &edges, policy)?;
    let (l0, l1, l2) = (&loci[0], &loci[1], &loci[2]);
    let triples: Vec<[&SingularPoint; 3]> = l0
        .iter()
        .flat_map(|p| {
            l1.iter()
                .flat_map(move |q| l2.iter().map(move |r| [p, q, r]))
        })
        .collect();
    let found = par_filter_map(&triples, |t: &[&SingularPoint; 3]| {
        let [p, q, r] = *t;
        if !collinear(&p.homog, &q.homog, &r.homog) {
            return None;
        }
        let line = Line::through(&p.homog, &q.homog).ok()?;
        Some((line, [p.clone(), q.clone(), r.clone()]))
    });
    let mut lines = Vec::new();
    for (line, feet) in found {
        if !line.is_torically_transverse(spec, component)? {
            continue;
        }
        verify_feet(spec, &line, &feet)?;
        lines.push(line);
    }
    lines.sort();
    lines.dedup();
    Ok(PrelogLines {
        component: component.clone(),
        lines,
        unresolved: edges
            .iter()
            .map(|e| {
                let unres = spec
                    .singular_points_on_edge(e)
                    .map(|l| l.unresolved)
                    .unwrap_or(0);
                (e.clone(), unres)
            })
            .collect(),
    })
}

/// Lines in a cubic-surface component through one singular point on each of
/// the two gluing edges; the third boundary line is unconstrained.
pub fn prelog_lines_cubic(
    spec: &FamilySpec,
    component: &Stratum,
    policy: LocusPolicy,
) -> Result<PrelogLines> {
    if spec.d() != 3 || spec.n() != 3 {
        return Err(Error::Unsupported(
            "pre-log cubic enumeration needs a cubic threefold family".to_string(),
        ));
    }
    let edges = gluing_edges(spec, component)?;
    debug_assert_eq!(edges.len(), 2);
    let loci = collect_loci(spec, &edges, policy)?;
    let (l0, l1) = (&loci[0], &loci[1]);
    let pairs: Vec<[&SingularPoint; 2]> = l0
        .iter()
        .flat_map(|p| l1.iter().map(move |q| [p, q]))
        .collect();
    let found = par_filter_map(&pairs, |t: &[&SingularPoint; 2]| {
        let [p, q] = *t;
        let line = Line::through(&p.homog, &q.homog).ok()?;
        Some((line, [p.clone(), q.clone()]))
    });
    let mut lines = Vec::new();
    for (line, feet) in found {
        // Excluded when the spanned line passes through a torus-fixed vertex.
        if !line.is_torically_transverse(spec, component)? {
            continue;
        }
        verify_feet(spec, &line, &feet)?;
        lines.push(line);
    }
    lines.sort();
    lines.dedup();
    Ok(PrelogLines {
        component: component.clone(),
        lines,
        unresolved: edges
            .iter()
            .map(|e| {
                let unres = spec
                    .singular_points_on_edge(e)
                    .map(|l| l.unresolved)
                    .unwrap_or(0);
                (e.clone(), unres)
            })
            .collect(),
    })
}

fn collect_loci(
    spec: &FamilySpec,
    edges: &[Stratum],
    policy: LocusPolicy,
) -> Result<Vec<Vec<SingularPoint>>> {
    let mut out = Vec::new();
    for edge in edges {
        let locus = spec.singular_points_on_edge(edge)?;
        if policy == LocusPolicy::Strict && locus.unresolved > 0 {
            return Err(Error::IncompleteLocus(
                edge.describe(spec),
                locus.unresolved,
            ));
        }
        out.push(locus.points);
    }
    Ok(out)
}

/// Independent re-check that each foot of the line lies on the boundary and
/// kills `f` there.
fn verify_feet(spec: &FamilySpec, line: &Line, feet: &[SingularPoint]) -> Result<()> {
    for foot in feet {
        if !line.contains(&foot.homog) {
            return Err(Error::NotPrelog(format!(
                "foot {} fell off the line",
                foot.describe()
            )));
        }
        if !spec.eval_f_at_point(&foot.homog).is_zero() {
            return Err(Error::NotPrelog(format!(
                "f does not vanish at {}",
                foot.describe()
            )));
        }
    }
    Ok(())
}

/// Maps `f` over `items` with bounded parallelism and order-preserving,
/// deterministic collection. `DEGENLIFT_THREADS` caps the worker count.
pub fn par_filter_map<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(&T) -> Option<U> + Sync,
) -> Vec<U> {
    let workers = thread_cap().min(items.len().max(1));
    if workers <= 1 || items.len() < 16 {
        return items.iter().filter_map(|t| f(t)).collect();
    }
    let chunk = items.len().div_ceil(workers);
    let mut buckets: Vec<Vec<U>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|slice| scope.spawn(|| slice.iter().filter_map(|t| f(t)).collect::<Vec<U>>()))
            .collect();
        for h in handles {
            buckets.push(h.join().expect("enumeration worker panicked"));
        }
    });
    buckets.into_iter().flatten().collect()
}

fn thread_cap() -> usize {
    std::env::var("DEGENLIFT_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .min(8)
}

// ---------------------------------------------------------------------------
// Quintic incidence classification
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LineClass {
    /// Meets no codimension-2 stratum.
    Class1,
    /// Meets two or more different codimension-2 strata.
    Class2I,
    /// Meets exactly one codimension-2 stratum.
    Class2II,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DivisorFlag {
    InSingularLocus,
    NotInSingularLocus,
    /// Extra vanishing coordinates: the point lies on a deeper stratum.
    DeeperStratum(BTreeSet<usize>),
}

#[derive(Clone, Debug)]
pub struct IncidenceProfile {
    /// Per toric divisor of the host component: the divisor's cutting
    /// coordinate, the intersection point, and its flag.
    pub intersections: Vec<(usize, Vec<Rat>, DivisorFlag)>,
    pub class: LineClass,
}

/// Classifies a line in a quintic-threefold component by its incidence with
/// the codimension-2 toric strata.
pub fn classify_quintic_line(spec: &FamilySpec, line: &Line) -> Result<IncidenceProfile> {
    if spec.d() != 5 || spec.n() != 4 {
        return Err(Error::Unsupported(
            "classification needs a quintic fourfold family".to_string(),
        ));
    }
    let coord_of = spec.toric_factor_coords()?;
    let hosts = line.host_components(spec)?;
    let [host] = hosts.as_slice() else {
        return Err(Error::InvalidFamily(
            "line must lie in exactly one component".to_string(),
        ));
    };
    let own_coord = coord_of[*host];
    let mut intersections = Vec::new();
    let mut strata_met: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for (i, &c) in coord_of.iter().enumerate() {
        if i == *host {
            continue;
        }
        let pt = line.hyperplane_intersection(c).ok_or_else(|| {
            Error::InvalidFamily("line is contained in a toric divisor".to_string())
        })?;
        let deeper: BTreeSet<usize> = coord_of
            .iter()
            .filter(|&&c2| c2 != c && c2 != own_coord && pt[c2].is_zero())
            .cloned()
            .collect();
        let flag = if !deeper.is_empty() {
            for &c2 in &deeper {
                strata_met.insert([c, c2].into_iter().collect());
            }
            DivisorFlag::DeeperStratum(deeper)
        } else if spec.eval_f_at_point(&pt).is_zero() {
            DivisorFlag::InSingularLocus
        } else {
            DivisorFlag::NotInSingularLocus
        };
        intersections.push((c, pt, flag));
    }
    let class = match strata_met.len() {
        0 => LineClass::Class1,
        1 => LineClass::Class2II,
        _ => LineClass::Class2I,
    };
    Ok(IncidenceProfile {
        intersections,
        class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn pt(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| Rat::from_int(v)).collect()
    }

    #[test]
    fn worked_line_through() {
        let line = Line::through(&pt(&[1, 0, 0, 1]), &pt(&[0, 0, -1, 1])).unwrap();
        // x - z - w = 0, y = 0: the third singular point lies on it.
        assert!(line.contains(&pt(&[1, 0, 1, 0])));
        assert!(!line.contains(&pt(&[1, 1, 0, 0])));
        let spec = fixtures::k3_worked_example();
        let comp = line.host_component(&spec).unwrap();
        assert_eq!(comp.zero_coords().iter().copied().collect::<Vec<_>>(), vec![1]);
        let form = line.plane_form(&spec, &comp).unwrap();
        // over (x, z, w): x - z - w
        assert_eq!(form, pt(&[1, -1, -1]));
        assert!(line.is_torically_transverse(&spec, &comp).unwrap());
    }

    #[test]
    fn degenerate_line_through() {
        assert!(Line::through(&pt(&[1, 0, 0, 1]), &pt(&[2, 0, 0, 2])).is_err());
        // spanning an edge is fine
        let edge_line = Line::through(&pt(&[1, 0, 0, 0]), &pt(&[0, 1, 0, 0])).unwrap();
        assert_eq!(edge_line.zero_coords().len(), 2);
    }

    #[test]
    fn collinearity_is_exact() {
        assert!(collinear(&pt(&[1, 0, 0, 1]), &pt(&[0, 0, -1, 1]), &pt(&[1, 0, 1, 0])));
        assert!(!collinear(
            &pt(&[1, 0, 0, 1]),
            &pt(&[0, 0, -1, 1]),
            &pt(&[-1, 0, 1, 0])
        ));
    }

    #[test]
    fn worked_family_prelog_enumeration() {
        let spec = fixtures::k3_worked_example();
        let comp = spec.component(1).unwrap(); // {y = 0}
        let res = prelog_lines_k3(&spec, &comp, LocusPolicy::Partial).unwrap();
        assert_eq!(res.lines.len(), 1);
        assert!(res.lines[0].contains(&pt(&[1, 0, 1, 0])));
        // strict mode refuses: the cubic cofactors are irrational
        assert!(matches!(
            prelog_lines_k3(&spec, &comp, LocusPolicy::Strict),
            Err(Error::IncompleteLocus(_, _))
        ));
    }

    #[test]
    fn fixture_without_collinear_triples() {
        let spec = fixtures::k3_no_collinear_fixture();
        let comp = spec.component(1).unwrap();
        let res = prelog_lines_k3(&spec, &comp, LocusPolicy::Strict).unwrap();
        assert!(res.lines.is_empty());
        // brute-force confirmation over all 64 triples
        assert_eq!(count_collinear_triples(&spec), 0);
    }

    #[test]
    fn fixture_with_two_collinear_triples() {
        let spec = fixtures::k3_two_line_fixture();
        let comp = spec.component(1).unwrap();
        let res = prelog_lines_k3(&spec, &comp, LocusPolicy::Strict).unwrap();
        assert_eq!(res.lines.len(), 2);
        assert_eq!(count_collinear_triples(&spec), 2);
    }

    /// Independent brute force over all point triples of the component
    /// {y = 0}, counting collinear ones.
    fn count_collinear_triples(spec: &crate::FamilySpec) -> usize {
        let comp = spec.component(1).unwrap();
        let edges = gluing_edges(spec, &comp).unwrap();
        let loci: Vec<Vec<SingularPoint>> = edges
            .iter()
            .map(|e| spec.singular_points_on_edge(e).unwrap().points)
            .collect();
        let mut count = 0;
        for p in &loci[0] {
            for q in &loci[1] {
                for r in &loci[2] {
                    if collinear(&p.homog, &q.homog, &r.homog) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn k3_enumeration_edge_permutation_invariant() {
        // The result cannot depend on which edge supplies which foot: the
        // line set is recomputed from loci in a permuted edge order.
        let spec = fixtures::k3_two_line_fixture();
        let comp = spec.component(1).unwrap();
        let baseline = prelog_lines_k3(&spec, &comp, LocusPolicy::Strict).unwrap();
        let edges = gluing_edges(&spec, &comp).unwrap();
        let loci: Vec<Vec<SingularPoint>> = edges
            .iter()
            .map(|e| spec.singular_points_on_edge(e).unwrap().points)
            .collect();
        let mut permuted: BTreeSet<Line> = BTreeSet::new();
        for p in &loci[2] {
            for q in &loci[0] {
                for r in &loci[1] {
                    if collinear(&p.homog, &q.homog, &r.homog) {
                        permuted.insert(Line::through(&p.homog, &q.homog).unwrap());
                    }
                }
            }
        }
        let baseline: BTreeSet<Line> = baseline.lines.into_iter().collect();
        assert_eq!(baseline, permuted);
    }

    #[test]
    fn cubic_enumeration_nine_per_component() {
        let spec = fixtures::cubic_toric_example();
        let mut total = 0;
        for comp in spec.components().unwrap() {
            let res = prelog_lines_cubic(&spec, &comp, LocusPolicy::Strict).unwrap();
            assert_eq!(res.lines.len(), 9);
            total += res.lines.len();
        }
        assert_eq!(total, 27);
    }

    #[test]
    fn cubic_transversality_filter_rejects_vertex_lines() {
        // A line through two interior points of distinct gluing edges can
        // never hit a vertex (each vertex test reduces to a product of
        // nonzero coordinates), so the filter passes all nine; exercise the
        // filter itself on a synthetic vertex line.
        let spec = fixtures::cubic_toric_example();
        let comp = spec.component(0).unwrap(); // {x = 0}
        let vertex_line = Line::through(&pt(&[0, 1, 0, 0]), &pt(&[0, 0, 1, 1])).unwrap();
        assert!(!vertex_line.is_torically_transverse(&spec, &comp).unwrap());
    }

    #[test]
    fn quintic_classification() {
        let spec = fixtures::quintic_example();
        // class (2)-II: meets exactly one codim-2 stratum (z1 = z2 = 0 at the
        // first point).
        let line = Line::through(&pt(&[0, 0, 0, 1, 2]), &pt(&[0, 1, 3, 0, 1])).unwrap();
        let profile = classify_quintic_line(&spec, &line).unwrap();
        assert_eq!(profile.class, LineClass::Class2II);
        // class (2)-I: meets two disjoint strata.
        let line = Line::through(&pt(&[0, 0, 0, 1, 2]), &pt(&[0, 1, 1, 0, 0])).unwrap();
        let profile = classify_quintic_line(&spec, &line).unwrap();
        assert_eq!(profile.class, LineClass::Class2I);
        // class (1): all four divisor intersections interior.
        let line = Line::through(&pt(&[0, 1, 2, 3, 4]), &pt(&[0, 4, 3, 2, 1])).unwrap();
        let profile = classify_quintic_line(&spec, &line).unwrap();
        assert_eq!(profile.class, LineClass::Class1);
        assert_eq!(profile.intersections.len(), 4);
        for (_, _, flag) in &profile.intersections {
            assert!(!matches!(flag, DivisorFlag::DeeperStratum(_)));
        }
    }
}
