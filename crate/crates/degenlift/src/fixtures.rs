//! Built-in families: the worked quartic example, rational cubic and K3
//! fixtures constructed by interpolation through prescribed singular points,
//! and deterministic randomized fixtures for the oracle suites.
//!
//! K3 fixtures for one component are built from prescribed edge restrictions
//! `prod (x - r_i w)`, `g2 prod (z - q_i w)`, `g3 prod (x - u_i z)`; the
//! shared corner monomials force `prod r = prod q * prod u`, so eleven roots
//! are free and the twelfth is solved. For feet `(r, 0, 0, 1)`,
//! `(0, 0, q, 1)`, `(u, 0, 1, 0)` of the component `{y = 0}`, collinearity
//! reduces to `r + q u = 0`, which the builders use to prescribe or avoid
//! collinear triples.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::family::FamilySpec;
use crate::poly::{Poly, Var};
use crate::rat::Rat;

fn pp(s: &str) -> Poly {
    Poly::parse(s, None).expect("fixture polynomial")
}

fn coord_vars(names: &[&str]) -> Vec<Var> {
    names.iter().map(|n| Var::new(n)).collect()
}

/// The worked quartic degeneration
/// `xyzw + t(x^4 - z^4 - 2zw^3 - w^4 + ax^2w^2 + bxzw^2 - axw^3 + yw^3 + y^4)`
/// with symbolic parameters `a`, `b`.
pub fn k3_worked_example() -> FamilySpec {
    k3_with_f(pp(
        "x^4 - z^4 - 2*z*w^3 - w^4 + a*x^2*w^2 + b*x*z*w^2 - a*x*w^3 + y*w^3 + y^4",
    ))
}

/// Quartic K3 spec with factors `x, y, z, w` and the given `f`; parameters
/// are inferred from the non-coordinate variables of `f`.
pub fn k3_with_f(f: Poly) -> FamilySpec {
    let coords = coord_vars(&["x", "y", "z", "w"]);
    let params: Vec<Var> = f
        .vars()
        .into_iter()
        .filter(|v| !coords.contains(v))
        .collect();
    FamilySpec::new(
        3,
        4,
        coords,
        vec![pp("x"), pp("y"), pp("z"), pp("w")],
        f,
        params,
        3,
    )
    .expect("valid K3 fixture")
}

/// A quartic whose `f` is divisible by the plane of the line `x - z - w = 0`,
/// `y = 0`: every local residue along that line vanishes.
pub fn k3_model_case() -> FamilySpec {
    k3_with_f(&pp("x - z - w") * &pp("x^3 + 2*z^3 + 3*w^3 + 5*y^3"))
}

/// A quartic with `f = y g`: the central-fiber line `x - z - w = 0` in
/// `{y = 0}` persists identically to every order.
pub fn k3_trivial_on_plane() -> FamilySpec {
    k3_with_f(&pp("y") * &pp("x^3 + z^3 + w^3 + y^3"))
}

/// Cubic degeneration `xyz + t f = 0` whose three gluing edges carry the
/// prescribed rational singular points. Roots must be nonzero, distinct per
/// edge, and satisfy no relation; the shared `w^3` corner fixes the scalars.
///
/// `roots_xy` sit on `{x = y = 0}` (coordinate `z`), `roots_yz` on
/// `{y = z = 0}` (coordinate `x`), `roots_xz` on `{x = z = 0}` (coordinate `y`).
pub fn cubic_with_roots(
    roots_xy: [Rat; 3],
    roots_yz: [Rat; 3],
    roots_xz: [Rat; 3],
) -> Result<FamilySpec> {
    let prod = |rs: &[Rat; 3]| &(&rs[0] * &rs[1]) * &rs[2];
    let p_xy = prod(&roots_xy);
    let p_yz = prod(&roots_yz);
    let p_xz = prod(&roots_xz);
    // w^3 coefficient must agree across the three restrictions.
    let g_xy = Rat::one();
    let g_yz = &p_xy / &p_yz;
    let g_xz = &p_xy / &p_xz;
    let binary = |var: &str, scale: &Rat, roots: &[Rat; 3]| -> Poly {
        let mut acc = Poly::constant(scale.clone());
        for r in roots {
            let lin = &Poly::var(var) - &Poly::var("w").scale(r);
            acc = &acc * &lin;
        }
        acc
    };
    let rest_xy = binary("z", &g_xy, &roots_xy);
    let rest_yz = binary("x", &g_yz, &roots_yz);
    let rest_xz = binary("y", &g_xz, &roots_xz);
    // Shared corner w^3 is counted three times in the sum.
    let w3 = crate::poly::Mono::from_pairs([(Var::new("w"), 3u32)]);
    let corner = rest_xy.coeff_of(&w3);
    let mut f = &(&rest_xy + &rest_yz) + &rest_xz;
    f.add_term(w3, &(-&corner) * &Rat::from_int(2));

    let coords = coord_vars(&["x", "y", "z", "w"]);
    FamilySpec::new(
        3,
        3,
        coords,
        vec![pp("x"), pp("y"), pp("z")],
        f,
        vec![],
        3,
    )
}

/// The cubic fixture used throughout: roots 1, 2, 3 on every gluing edge.
pub fn cubic_toric_example() -> FamilySpec {
    let r = |n: i64| Rat::from_int(n);
    cubic_with_roots(
        [r(1), r(2), r(3)],
        [r(1), r(2), r(3)],
        [r(1), r(2), r(3)],
    )
    .expect("valid cubic fixture")
}

/// Generic quintic degeneration `z0 z1 z2 z3 z4 + t f = 0` (Fermat `f`).
pub fn quintic_example() -> FamilySpec {
    let coords = coord_vars(&["z0", "z1", "z2", "z3", "z4"]);
    let f = pp("z0^5 + z1^5 + z2^5 + z3^5 + z4^5");
    let factors = coords.iter().map(|c| Poly::var(c.name())).collect();
    FamilySpec::new(4, 5, coords, factors, f, vec![], 4).expect("valid quintic fixture")
}

// ---------------------------------------------------------------------------
// K3 component fixtures: prescribed edge roots on {y = 0}
// ---------------------------------------------------------------------------

/// Quartic whose component `{y = 0}` has fully rational singular loci with
/// the prescribed edge roots. `roots_z` sit on `{y = z = 0}` (coordinate
/// `x`), `roots_x` on `{x = y = 0}` (coordinate `z`), and `roots_w[0..3]` on
/// `{y = w = 0}` (coordinate `x` in the chart `z = 1`); the fourth root on
/// that edge is solved from the corner relation `prod r = prod q * prod u`.
///
/// A triple `(r, q, u)` of such roots is collinear exactly when `r + q u = 0`.
pub fn k3_component_fixture(
    roots_z: [Rat; 4],
    roots_x: [Rat; 4],
    roots_w_free: [Rat; 3],
) -> Result<(FamilySpec, [Rat; 4])> {
    let prod_r = roots_z.iter().fold(Rat::one(), |a, b| &a * b);
    let prod_q = roots_x.iter().fold(Rat::one(), |a, b| &a * b);
    let prod_u3 = roots_w_free.iter().fold(Rat::one(), |a, b| &a * b);
    let u4 = &(&prod_r / &prod_q) / &prod_u3;
    let roots_w = [
        roots_w_free[0].clone(),
        roots_w_free[1].clone(),
        roots_w_free[2].clone(),
        u4,
    ];

    let binary = |va: &str, vb: &str, scale: &Rat, roots: &[Rat; 4]| -> Poly {
        let mut acc = Poly::constant(scale.clone());
        for r in roots {
            let lin = &Poly::var(va) - &Poly::var(vb).scale(r);
            acc = &acc * &lin;
        }
        acc
    };
    let g2 = roots_w.iter().fold(Rat::one(), |a, b| &a * b);
    let rest_z = binary("x", "w", &Rat::one(), &roots_z); // {y=z=0}
    let rest_x = binary("z", "w", &g2, &roots_x); // {x=y=0}
    let rest_w = binary("x", "z", &Rat::one(), &roots_w); // {y=w=0}

    // Corners counted twice: x^4 (edges z and w), w^4 (edges z and x),
    // z^4 (edges x and w).
    let mono = |v: &str| crate::poly::Mono::from_pairs([(Var::new(v), 4u32)]);
    let mut f = &(&rest_z + &rest_x) + &rest_w;
    for v in ["x", "z", "w"] {
        let m = mono(v);
        let total = f.coeff_of(&m);
        let single = if v == "x" {
            rest_z.coeff_of(&m)
        } else if v == "w" {
            rest_z.coeff_of(&m)
        } else {
            rest_x.coeff_of(&m)
        };
        f.add_term(m, &single - &total);
    }
    // Keep the other components non-degenerate.
    f = &f + &pp("y^4");
    Ok((k3_with_f_checked(f)?, roots_w))
}

fn k3_with_f_checked(f: Poly) -> Result<FamilySpec> {
    let coords = coord_vars(&["x", "y", "z", "w"]);
    let params: Vec<Var> = f
        .vars()
        .into_iter()
        .filter(|v| !coords.contains(v))
        .collect();
    FamilySpec::new(
        3,
        4,
        coords,
        vec![pp("x"), pp("y"), pp("z"), pp("w")],
        f,
        params,
        3,
    )
}

/// K3 fixture whose component `{y = 0}` has no collinear triple of singular
/// points: no root relation `r = -q u` holds. Verified by brute force in the
/// test suite.
pub fn k3_no_collinear_fixture() -> FamilySpec {
    let r = Rat::from_int;
    // roots_w solves to 60/(24*6) = 5/12; no r in {1,2,3,4} equals -q*u.
    let (spec, _) = k3_component_fixture(
        [r(1), r(2), r(3), r(10)],
        [r(1), r(2), r(3), r(4)],
        [r(1), r(2), r(3)],
    )
    .expect("valid fixture");
    spec
}

/// K3 fixture whose component `{y = 0}` has exactly two collinear triples:
/// `(r, q, u) = (-2, 1, 2)` and `(-6, 2, 3)`.
pub fn k3_two_line_fixture() -> FamilySpec {
    let r = Rat::from_int;
    let (spec, roots_w) = k3_component_fixture(
        [r(-2), r(-6), r(1), r(5)],
        [r(1), r(2), r(4), r(5)],
        [r(2), r(3), r(7)],
    )
    .expect("valid fixture");
    // Fourth root on {y=w=0}: (60*5)/(40*42) = 5/28; guard against
    // accidental extra collinearity r = -q u.
    for rr in [r(-2), r(-6), r(1), r(5)] {
        for q in [r(1), r(2), r(4), r(5)] {
            for u in &roots_w {
                let coll = &rr + &(&q * u);
                let expected = (rr == r(-2) && q == r(1) && u == &r(2))
                    || (rr == r(-6) && q == r(2) && u == &r(3));
                assert_eq!(coll.is_zero(), expected, "unexpected collinear triple");
            }
        }
    }
    spec
}

// ---------------------------------------------------------------------------
// Deterministic randomized fixtures for the oracle suites
// ---------------------------------------------------------------------------

/// SplitMix64: deterministic across platforms, no dependencies.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Nonzero integer in `[-bound, bound]`.
    pub fn nonzero_int(&mut self, bound: u64) -> i64 {
        let mag = 1 + self.below(bound) as i64;
        if self.below(2) == 0 {
            mag
        } else {
            -mag
        }
    }

    pub fn rat(&mut self, bound: u64) -> Rat {
        Rat::from_frac(self.nonzero_int(bound), 1 + self.below(3) as i64)
    }
}

/// A symbolic K3 fixture for the oracle-equivalence suite: the component
/// `{y = 0}` carries a prescribed collinear triple of singular points (the
/// feet of the line `cx*x + cz*z + cw*w = 0`), the rest of `f` is random,
/// and two parameter terms `a y m1 + b y m2` make the obstruction depend on
/// `(a, b)` without moving the singular points.
///
/// Returns the spec and the three feet (homogeneous points).
pub fn k3_oracle_fixture(seed: u64) -> (FamilySpec, [Vec<Rat>; 3]) {
    let mut rng = Rng::new(seed.wrapping_mul(0x5851f42d4c957f2d).wrapping_add(1));
    loop {
        let cx = Rat::from_int(rng.nonzero_int(4));
        let cz = Rat::from_int(rng.nonzero_int(4));
        let cw = Rat::from_int(rng.nonzero_int(4));
        // Feet of the line in {y=0}.
        let p_x = vec![Rat::zero(), Rat::zero(), -&(&cw / &cz), Rat::one()];
        let p_z = vec![-&(&cw / &cx), Rat::zero(), Rat::zero(), Rat::one()];
        let p_w = vec![-&(&cz / &cx), Rat::zero(), Rat::one(), Rat::zero()];

        // Random quartic in x, z, w with small coefficients.
        let monos: Vec<&str> = vec![
            "x^3*z", "x^2*z^2", "x*z^3", "x^3*w", "z^3*w", "x^2*z*w", "x*z^2*w", "x^2*w^2",
            "z^2*w^2", "x*z*w^2", "x*w^3", "z*w^3",
        ];
        let mut base = Poly::zero();
        for m in &monos {
            let c = rng.nonzero_int(3);
            if rng.below(3) > 0 {
                base = &base + &pp(m).scale(&Rat::from_int(c));
            }
        }
        // Adjust the x^4, z^4, w^4 coefficients so f vanishes at the feet.
        let val = |p: &Poly, pt: &[Rat]| -> Rat {
            let vals: BTreeMap<Var, Rat> = ["x", "y", "z", "w"]
                .iter()
                .map(|n| Var::new(n))
                .zip(pt.iter().cloned())
                .collect();
            p.eval_map(&vals).as_constant().expect("numeric")
        };
        let (x4, z4, w4) = (pp("x^4"), pp("z^4"), pp("w^4"));
        // Unknown corrections A, B, C for x^4, z^4, w^4:
        //   A x4(p) + B z4(p) + C w4(p) = -base(p) at each foot.
        let m = [
            [val(&x4, &p_x), val(&z4, &p_x), val(&w4, &p_x)],
            [val(&x4, &p_z), val(&z4, &p_z), val(&w4, &p_z)],
            [val(&x4, &p_w), val(&z4, &p_w), val(&w4, &p_w)],
        ];
        let rhs = [-&val(&base, &p_x), -&val(&base, &p_z), -&val(&base, &p_w)];
        let sol = match solve3(&m, &rhs) {
            Some(s) => s,
            None => continue,
        };
        let f = &(&(&base + &x4.scale(&sol[0])) + &z4.scale(&sol[1]))
            + &w4.scale(&sol[2]);
        // Parameter terms vanishing on {y = 0}.
        let pool = ["z^3", "x^3", "w^3", "x*z*w", "x^2*w", "z^2*w"];
        let m1 = pool[rng.below(pool.len() as u64) as usize];
        let m2 = pool[rng.below(pool.len() as u64) as usize];
        let f = &(&f + &pp("y^4"))
            + &(&(&pp("a*y") * &pp(m1)) + &(&pp("b*y") * &pp(m2)));

        let spec = match k3_with_f_checked(f) {
            Ok(s) => s,
            Err(_) => continue,
        };
        // The feet must be simple zeros of the edge restrictions.
        if !feet_ordinary(&spec, [&p_x, &p_z, &p_w]) {
            continue;
        }
        return (spec, [p_x, p_z, p_w]);
    }
}

fn feet_ordinary(spec: &FamilySpec, feet: [&Vec<Rat>; 3]) -> bool {
    for pt in feet {
        // Identify the edge through the point inside {y = 0}.
        let zero: Vec<usize> = (0..4).filter(|&c| pt[c].is_zero()).collect();
        if zero.len() != 2 {
            return false;
        }
        let edge = match spec.stratum(zero.iter().cloned().collect(), None) {
            Ok(e) => e,
            Err(_) => return false,
        };
        let locus = match spec.singular_points_on_edge(&edge) {
            Ok(l) => l,
            Err(_) => return false,
        };
        if !locus
            .points
            .iter()
            .any(|p| homog_eq(&p.homog, pt))
        {
            return false;
        }
    }
    true
}

/// Projective equality of homogeneous rational points.
pub fn homog_eq(p: &[Rat], q: &[Rat]) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let pivot = match (0..p.len()).find(|&i| !p[i].is_zero() || !q[i].is_zero()) {
        Some(i) => i,
        None => return true,
    };
    if p[pivot].is_zero() || q[pivot].is_zero() {
        return false;
    }
    (0..p.len()).all(|i| (&(&p[i] * &q[pivot]) - &(&q[i] * &p[pivot])).is_zero())
}

/// Exact 3x3 solve; `None` when the matrix is singular.
fn solve3(m: &[[Rat; 3]; 3], rhs: &[Rat; 3]) -> Option<[Rat; 3]> {
    let mut a: Vec<Vec<Rat>> = (0..3)
        .map(|i| {
            let mut row: Vec<Rat> = m[i].to_vec();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for col in 0..3 {
        let pivot = (col..3).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip().ok()?;
        let prow: Vec<Rat> = a[col].iter().map(|v| v * &inv).collect();
        a[col] = prow.clone();
        for r in 0..3 {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let new_row: Vec<Rat> = a[r]
                    .iter()
                    .zip(prow.iter())
                    .map(|(v, p)| v - &(&factor * p))
                    .collect();
                a[r] = new_row;
            }
        }
    }
    Some([a[0][3].clone(), a[1][3].clone(), a[2][3].clone()])
}

/// Rational parameter pairs on and off the worked vanishing locus
/// `a^2 + ab + 4a + 6b - 4 = 0`, avoiding the frame units `a = -4, -6`.
pub fn worked_specializations(count: usize) -> Vec<(Rat, Rat, bool)> {
    let mut out = Vec::new();
    let mut k: i64 = 0;
    while out.len() < count {
        k += 1;
        let a = Rat::from_int(match k % 7 {
            0 => k % 11 - 5,
            m => m - 3,
        });
        if a == Rat::from_int(-4) || a == Rat::from_int(-6) {
            continue;
        }
        if out.len() % 2 == 0 {
            // On the locus: b = (4 - 4a - a^2)/(a + 6).
            let num = &(&Rat::from_int(4) - &a.pow(2)) - &(&Rat::from_int(4) * &a);
            let b = &num / &(&a + &Rat::from_int(6));
            out.push((a, b, true));
        } else {
            let b = Rat::from_int((k % 9) - 4);
            let g = gval(&a, &b);
            out.push((a.clone(), b.clone(), g.is_zero()));
        }
    }
    out
}

fn gval(a: &Rat, b: &Rat) -> Rat {
    // a^2 + ab + 4a + 6b - 4
    &(&(&(&a.pow(2) + &(a * b)) + &(&Rat::from_int(4) * a)) + &(&Rat::from_int(6) * b))
        - &Rat::from_int(4)
}
