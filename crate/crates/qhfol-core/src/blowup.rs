//! Placeholder.

use crate::bipoly::BiPoly;

/// a dx + b dy.
#[derive(Clone, Debug, PartialEq)]
pub struct OneForm {
    pub a: BiPoly,
    pub b: BiPoly,
}

/// Placeholder tree.
#[derive(Clone, Debug)]
pub struct ResolutionTree;
