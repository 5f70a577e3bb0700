//! Error types shared across the symbolic layer.

use thiserror::Error;

use crate::symbols::{Coordinate, FieldAtom};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("frame mismatch: {atom} differentiated along {coord}")]
    FrameMismatch { atom: FieldAtom, coord: Coordinate },
    #[error("boost input already contains primed symbols")]
    PrimedInputToBoost,
    #[error("bare Psi cannot be transformed directly; polar-split first")]
    BarePsiInTransform,
    #[error("split requires all atoms declared real, found {0}")]
    ComplexAtomInSplit(FieldAtom),
    #[error("cofactor normalizes to zero")]
    ZeroCofactor,
    #[error("cofactor must be a single nonzero monomial")]
    NonMonomialCofactor,
    #[error("negative exponent on non-parameter base")]
    NegativePowerOfNonParameter,
    #[error("residual mixes monomials of different Psi weight; polar substitution undefined")]
    NonuniformPsiWeight,
    #[error("density depends on {0} through an unsupported derivative")]
    UnsupportedDependency(FieldAtom),
    #[error("unknown catalog key `{0}`")]
    UnknownCatalogKey(String),
    #[error("expression mixes primed and unprimed symbols")]
    MixedFrames,
}

/// Parse failure with byte offset into the source text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}
