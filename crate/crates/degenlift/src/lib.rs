//! Exact-arithmetic toolkit for lines in toric degenerations of projective
//! hypersurfaces.
//!
//! A degeneration `a_1 ... a_d + t f = 0` of a degree-`d` hypersurface has a
//! central fiber that is a union of hyperplanes; lines in a component lift
//! to nearby fibers only when order-by-order obstructions vanish. This crate
//! computes those obstructions two independent ways — a residue-based
//! obstruction scalar assembled from local frames at the singular points,
//! and a direct power-series lifting solver — entirely over exact rationals,
//! and reproduces the classical line counts (27 on the cubic surface, 2875
//! on the quintic threefold) from their combinatorial factors.

pub mod census;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod kuranishi;
pub mod lifter;
pub mod lines;
pub mod series;
pub mod sheaf;

pub use error::{Error, Result};
pub use family::{FamilySpec, SingularPoint, Stratum};
pub use poly::{Mono, Poly, Var};
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use series::{Series, Trunc};

#[cfg(test)]
mod concurrency {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_shareable() {
        assert_send_sync::<crate::Rat>();
        assert_send_sync::<crate::Poly>();
        assert_send_sync::<crate::RatFunc>();
        assert_send_sync::<crate::Series>();
        assert_send_sync::<crate::FamilySpec>();
    }
}
