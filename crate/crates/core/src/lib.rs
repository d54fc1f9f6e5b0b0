//! Numerical laboratory for fractional integral operators with rough
//! homogeneous kernels on weighted Morrey, BMO and `L^∞(w)` spaces.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod experiments;
pub mod exponent;
pub mod geometry;
pub mod kernels;
pub mod operators;
pub mod spaces;
pub mod special;
pub mod sum;
pub mod weights;

mod par;

pub use error::{Error, Result};
pub use exponent::{conjugate_exponent, exponent_identities, DerivedExponents, Exponent};
pub use geometry::{
    make_grid, Ball, BallFamily, BoundingBox, Dim, Grid, Point, Region, SampledFunction,
};
pub use kernels::{HomogeneousKernel, KernelForm};
pub use spaces::{FamilySpec, NormReport, NormSpec, SupReport};
pub use weights::{apq_constant, w_measure, ApqReport, Weight};
