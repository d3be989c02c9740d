//! Exact-arithmetic kernel for plane curve and foliation germs at the origin
//! of ℂ²: iterated point blow-ups with full dual-tree bookkeeping, weight
//! inference and the algebraic quasi-homogeneity certificates (Euler identity,
//! ideal/jacobian membership, Takens normal form), the Euclid predictor for
//! the resolution tree of a quasi-homogeneous curve, and numerical projective
//! holonomy over the central component with a jet-conjugacy test.
//!
//! The crate is `no_std` + `alloc`: all exact arithmetic is over arbitrary
//! precision rationals, all numerics are `f64` complex with explicit error
//! estimates. IO, serialization and the CLI live in the companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algnum;
pub mod bipoly;
pub mod blowup;
pub mod desing;
pub mod diffeo;
pub mod error;
pub mod holonomy;
pub mod jet;
pub mod linalg;
pub mod quasihom;
pub mod rat;
pub mod takens;
pub mod unipoly;

pub use bipoly::BiPoly;
pub use blowup::{OneForm, ResolutionTree};
pub use error::Error;
pub use quasihom::Weight;
pub use rat::Rat;
