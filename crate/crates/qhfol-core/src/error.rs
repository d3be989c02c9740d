//! Error type shared by every module of the kernel.

use alloc::string::String;
use core::fmt;

/// All domain errors. Numerical failures carry enough context to be
/// actionable (which fiber, which order, which generator).
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The zero polynomial where a nonzero one is required.
    ZeroPolynomial,
    /// gcd of the 1-form coefficients is not a constant: the singularity is
    /// not isolated (the singular locus contains a curve).
    NonIsolated,
    /// The curve has a repeated factor; strict transforms need it reduced.
    NonReducedCurve,
    /// A blow-up center was requested at a point without exact rational
    /// coordinates.
    IrrationalCenter,
    /// The requested center is not a marked point or the origin.
    NotAPoint,
    /// The strict transform of the 1-form does not leave the new exceptional
    /// component invariant.
    Dicritical { component: usize },
    /// The graded Takens system is unsolvable at the given weighted degree.
    NotQuasiHomogeneousType { obstruction_degree: u32 },
    /// Weight inference failed: the support is not on an admissible line.
    NotQuasiHomogeneous,
    /// The point is not a singular point of the foliation.
    NotSingular,
    /// The tree has no unique component carrying all separatrix attachments.
    NotUnique,
    /// The resolution driver exceeded its blow-up cap (64).
    BlowupCapExceeded,
    /// Path integration ran into a fiber on which the 1-form degenerates.
    SingularFiberHit { at_abscissa: (f64, f64) },
    /// Step-halving changed the lifted endpoint by more than the allowed
    /// factor; the integration cannot certify the requested tolerance.
    ToleranceNotMet { discrepancy: f64 },
    /// The lifted leaf coordinate left the validity radius of the transversal.
    LeafEscaped { radius: f64 },
    /// The offset ladder for jet fitting is degenerate.
    IllConditionedFit,
    /// A jet with vanishing linear coefficient cannot be inverted.
    NonInvertible,
    /// The two holonomy representations have different generator counts.
    OrderMismatch,
    /// Free-form parse failure with byte offset into the input.
    Parse { offset: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::NonIsolated => write!(f, "non-isolated singularity: gcd(a, b) is not constant"),
            Error::NonReducedCurve => write!(f, "curve is not reduced (repeated factor)"),
            Error::IrrationalCenter => write!(f, "blow-up center has irrational coordinates"),
            Error::NotAPoint => write!(f, "center is not a marked point or the origin"),
            Error::Dicritical { component } => {
                write!(f, "component D{} is dicritical (exceptional line not invariant)", component)
            }
            Error::NotQuasiHomogeneousType { obstruction_degree } => write!(
                f,
                "not of Takens type for this weight: obstruction at weighted degree {}",
                obstruction_degree
            ),
            Error::NotQuasiHomogeneous => write!(f, "support is not quasi-homogeneous"),
            Error::NotSingular => write!(f, "point is not singular for the foliation"),
            Error::NotUnique => write!(f, "no unique component carries all separatrix attachments"),
            Error::BlowupCapExceeded => write!(f, "resolution exceeded the 64 blow-up cap"),
            Error::SingularFiberHit { at_abscissa } => write!(
                f,
                "hit a singular fiber near u = {} + {}i",
                at_abscissa.0, at_abscissa.1
            ),
            Error::ToleranceNotMet { discrepancy } => {
                write!(f, "step-halving discrepancy {} exceeds the allowed factor", discrepancy)
            }
            Error::LeafEscaped { radius } => {
                write!(f, "leaf left the transversal validity radius {}", radius)
            }
            Error::IllConditionedFit => write!(f, "offset ladder is degenerate"),
            Error::NonInvertible => write!(f, "jet has (numerically) vanishing linear part"),
            Error::OrderMismatch => write!(f, "generator tuples have mismatched lengths"),
            Error::Parse { offset, message } => write!(f, "parse error at offset {}: {}", offset, message),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
