//! Line-bundle bookkeeping on rational curves: degree shifts from singular
//! intersections, cohomology on the projective line and on two-component
//! nodal curves, the dual obstruction basis of a balanced edge triple, and
//! the disk profiles.

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Degree of the logarithmic normal sheaf: the usual degree twisted down by
/// one at each singular intersection.
pub fn log_normal_degree(usual_degree: i64, singular_hits: u32) -> i64 {
    usual_degree - singular_hits as i64
}

/// `(h0, h1)` of a line bundle of degree `k` on the projective line.
pub fn cohomology_p1(k: i64) -> (u64, u64) {
    ((k + 1).max(0) as u64, (-k - 1).max(0) as u64)
}

/// Degree data of a direct sum of line bundles on a rational carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SheafProfile {
    /// Summand degrees on a single projective line.
    P1(Vec<i64>),
    /// Per-summand degree pairs on a two-component nodal rational curve.
    Nodal(Vec<(i64, i64)>),
}

impl SheafProfile {
    pub fn rank(&self) -> usize {
        match self {
            SheafProfile::P1(v) => v.len(),
            SheafProfile::Nodal(v) => v.len(),
        }
    }

    /// Total `(h0, h1)` summed over the summands.
    pub fn cohomology(&self) -> (u64, u64) {
        match self {
            SheafProfile::P1(v) => v
                .iter()
                .map(|&k| cohomology_p1(k))
                .fold((0, 0), |(a, b), (c, d)| (a + c, b + d)),
            SheafProfile::Nodal(v) => v
                .iter()
                .map(|&(d1, d2)| nodal_summand_cohomology(d1, d2))
                .fold((0, 0), |(a, b), (c, d)| (a + c, b + d)),
        }
    }
}

/// `(h0, h1)` of a line bundle with degrees `(d1, d2)` on a two-component
/// nodal rational curve: sections are pairs agreeing at the node, and h1
/// follows from the Euler characteristic `d1 + d2 + 1`.
pub fn nodal_summand_cohomology(d1: i64, d2: i64) -> (u64, u64) {
    let s1 = (d1 + 1).max(0);
    let s2 = (d2 + 1).max(0);
    // Node evaluation (s1_at_node - s2_at_node) is onto C whenever either
    // side has sections at all.
    let node_rank = if s1 > 0 || s2 > 0 { 1 } else { 0 };
    let h0 = s1 + s2 - node_rank;
    let chi = d1 + d2 + 1;
    let h1 = h0 - chi;
    debug_assert!(h0 >= 0 && h1 >= 0);
    (h0 as u64, h1 as u64)
}

/// The dual description of the obstruction space attached to a balanced
/// triple of primitive edge directions: per-edge annihilating covectors and
/// the one-dimensional space of weightings summing to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualObstructionBasis {
    pub edges: [[i64; 2]; 3],
    pub covectors: [[i64; 2]; 3],
    pub kernel: [Rat; 3],
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn is_primitive(v: &[i64; 2]) -> bool {
    gcd_i64(v[0], v[1]) == 1
}

/// Quarter-turn: the primitive annihilator of `v` with a fixed orientation.
fn rot90(v: &[i64; 2]) -> [i64; 2] {
    [-v[1], v[0]]
}

pub fn dual_obstruction_basis(edges: [[i64; 2]; 3]) -> Result<DualObstructionBasis> {
    for e in &edges {
        if !is_primitive(e) {
            return Err(Error::InvalidFamily(format!(
                "edge direction {e:?} is not primitive"
            )));
        }
    }
    let sum = [
        edges[0][0] + edges[1][0] + edges[2][0],
        edges[0][1] + edges[1][1] + edges[2][1],
    ];
    if sum != [0, 0] {
        return Err(Error::InvalidFamily(format!(
            "edge directions do not balance: sum {sum:?}"
        )));
    }
    let covectors = [rot90(&edges[0]), rot90(&edges[1]), rot90(&edges[2])];
    // The covectors themselves sum to zero, so (1,1,1) spans the kernel of
    // (k1, k2, k3) -> k1 v1 + k2 v2 + k3 v3.
    Ok(DualObstructionBasis {
        edges,
        covectors,
        kernel: [Rat::one(), Rat::one(), Rat::one()],
    })
}

/// Rays of the plane's fan, indexed by the plane coordinate (0, 1, 2) that
/// cuts the corresponding toric divisor.
pub const PLANE_RAYS: [[i64; 2]; 3] = [[1, 0], [0, 1], [-1, -1]];

/// Character of the plane coordinate `j` in the basis where coordinate 2 is
/// the chart.
const PLANE_CHARS: [[i64; 2]; 3] = [[1, 0], [0, 1], [0, 0]];

/// Direction in the cocharacter lattice of the logarithmic field
/// `u d/du`, where `u` is the edge coordinate at a point of the divisor cut
/// by plane coordinate `c`, computed in the chart where plane coordinate
/// `h` is 1. The remaining coordinate is the edge coordinate.
pub fn residue_direction(c: usize, h: usize) -> [i64; 2] {
    assert!(c < 3 && h < 3 && c != h);
    let r = 3 - c - h;
    let mr = PLANE_CHARS[r];
    let mh = PLANE_CHARS[h];
    let mc = PLANE_CHARS[c];
    // Solve <m_r - m_h, n> = 1, <m_c - m_h, n> = 0 (unimodular 2x2).
    let row1 = [mr[0] - mh[0], mr[1] - mh[1]];
    let row2 = [mc[0] - mh[0], mc[1] - mh[1]];
    let det = row1[0] * row2[1] - row1[1] * row2[0];
    assert!(det == 1 || det == -1);
    // n = A^{-1} (1, 0) for A = [row1; row2].
    [row2[1] / det, -row2[0] / det]
}

/// Weight pairing the local residue at a point on the divisor cut by plane
/// coordinate `c`, computed in the chart of plane coordinate `h`, against
/// the kernel-normalized covector of that divisor: `<n(c, h), rot90(ray_c)>`.
pub fn residue_pairing_weight(c: usize, h: usize) -> i64 {
    let n = residue_direction(c, h);
    let v = rot90(&PLANE_RAYS[c]);
    n[0] * v[0] + n[1] * v[1]
}

/// Degree profile and deformation-family dimension of the boundary disks in
/// dimension `n`: two `O(-1)` summands (one for `n = 3`) padded by trivial
/// summands, with `h1 = 0` throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskProfile {
    pub summands: Vec<i64>,
    pub family_dimension: u32,
}

pub fn disk_profile(n: u32) -> Result<DiskProfile> {
    if n < 3 {
        return Err(Error::Unsupported(format!(
            "disk profiles need ambient dimension >= 3, got {n}"
        )));
    }
    let summands = if n == 3 {
        vec![-1]
    } else {
        let mut v = vec![-1, -1];
        v.extend(std::iter::repeat(0).take((n - 4) as usize));
        v
    };
    // Isolated for n = 3; for n >= 4 the section space contributes n - 4
    // real directions and the ambient torus n - 2 more.
    let family_dimension = if n == 3 { 0 } else { 2 * n - 6 };
    let profile = SheafProfile::P1(summands.clone());
    debug_assert_eq!(profile.cohomology().1, 0);
    Ok(DiskProfile {
        summands,
        family_dimension,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_degree_shifts() {
        assert_eq!(log_normal_degree(1, 3), -2);
        assert_eq!(log_normal_degree(1, 2), -1);
        assert_eq!(log_normal_degree(5, 0), 5);
    }

    #[test]
    fn p1_cohomology() {
        assert_eq!(cohomology_p1(-2), (0, 1));
        assert_eq!(cohomology_p1(-1), (0, 0));
        assert_eq!(cohomology_p1(0), (1, 0));
        // Riemann-Roch: h0 - h1 = k + 1.
        for k in -10..=10 {
            let (h0, h1) = cohomology_p1(k);
            assert_eq!(h0 as i64 - h1 as i64, k + 1);
        }
    }

    #[test]
    fn nodal_cohomology_cases() {
        assert_eq!(nodal_summand_cohomology(-1, 0), (0, 0));
        assert_eq!(nodal_summand_cohomology(0, 0), (1, 0));
        assert_eq!(nodal_summand_cohomology(-1, -1), (0, 1));
        for d1 in -3..=3 {
            for d2 in -3..=3 {
                let (h0, h1) = nodal_summand_cohomology(d1, d2);
                assert_eq!(h0 as i64 - h1 as i64, d1 + d2 + 1);
            }
        }
        // The split normal sheaf of the degenerated class-(1) line.
        let n = SheafProfile::Nodal(vec![(-1, 0), (0, -1)]);
        assert_eq!(n.cohomology(), (0, 0));
    }

    #[test]
    fn standard_fan_dual_basis() {
        let b = dual_obstruction_basis(PLANE_RAYS).unwrap();
        assert_eq!(b.covectors, [[0, 1], [-1, 0], [1, -1]]);
        assert_eq!(b.kernel, [Rat::one(), Rat::one(), Rat::one()]);
        // each covector annihilates its edge
        for i in 0..3 {
            let dot = b.edges[i][0] * b.covectors[i][0] + b.edges[i][1] * b.covectors[i][1];
            assert_eq!(dot, 0);
        }
        // kernel weighting: sum of weighted covectors vanishes
        let sum = [
            b.covectors[0][0] + b.covectors[1][0] + b.covectors[2][0],
            b.covectors[0][1] + b.covectors[1][1] + b.covectors[2][1],
        ];
        assert_eq!(sum, [0, 0]);
    }

    #[test]
    fn dual_basis_equivariance_and_errors() {
        let permuted = dual_obstruction_basis([[0, 1], [-1, -1], [1, 0]]).unwrap();
        assert_eq!(permuted.covectors, [[-1, 0], [1, -1], [0, 1]]);
        assert!(dual_obstruction_basis([[1, 0], [0, 1], [1, 1]]).is_err());
        assert!(dual_obstruction_basis([[2, 0], [0, 1], [-2, -1]]).is_err());
    }

    #[test]
    fn pairing_weights() {
        // Divisor coordinate c computed in chart h; signs flip with the chart.
        assert_eq!(residue_pairing_weight(0, 2), 1);
        assert_eq!(residue_pairing_weight(0, 1), -1);
        assert_eq!(residue_pairing_weight(1, 2), -1);
        assert_eq!(residue_pairing_weight(1, 0), 1);
        assert_eq!(residue_pairing_weight(2, 1), 1);
        assert_eq!(residue_pairing_weight(2, 0), -1);
    }

    #[test]
    fn disk_profiles() {
        assert_eq!(disk_profile(3).unwrap().summands, vec![-1]);
        assert_eq!(disk_profile(3).unwrap().family_dimension, 0);
        assert_eq!(disk_profile(4).unwrap().summands, vec![-1, -1]);
        assert_eq!(disk_profile(4).unwrap().family_dimension, 2);
        assert_eq!(disk_profile(5).unwrap().summands, vec![-1, -1, 0]);
        assert_eq!(disk_profile(5).unwrap().family_dimension, 4);
        assert!(disk_profile(2).is_err());
    }
}
