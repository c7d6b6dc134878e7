//! Scalar abstraction for the floating-point parts of the library.
//!
//! Everything spectral is written against [`Real`] so the same code runs on
//! `f32` and `f64`; the crate root exposes `f64` aliases for the common case.
//! Exact topology (integer ranks, Betti numbers) never goes through this
//! trait — see [`crate::eigensolve::integer_rank`].

use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps};

/// Floating-point scalar used by meshes, assemblies and eigensolvers.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssignOps
    + std::iter::Sum
    + std::fmt::Debug
    + std::fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Lossless-enough conversion for literal constants baked into algorithms.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }

    /// Conversion for counts and indices entering formulas.
    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("count not representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64;
}

impl Real for f32 {
    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}

impl Real for f64 {
    fn to_f64_lossy(self) -> f64 {
        self
    }
}
