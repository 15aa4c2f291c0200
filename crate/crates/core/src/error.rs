use thiserror::Error;

/// Errors raised by the combinatorial and linear-algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau shapes differ")]
    ShapeMismatch,
    #[error("{0} does not lie in the two-column double cell")]
    NotInTwoColumnCell(String),
    #[error("{0} is not a minimal coset representative")]
    NotCosetRepresentative(String),
    #[error("{0} is not one of the cycles w_ij with i != j")]
    NotMinimalCycle(String),
    #[error("box set is not a connected border strip: {0}")]
    NotConnectedStrip(String),
    #[error("weight not in the lattice: {0}")]
    NotInLattice(String),
    #[error("weight is not regular dominant")]
    NotRegularDominant,
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(index: usize, lo: usize, n: usize) -> Result<()> {
    if index < lo || index > n {
        Err(Error::IndexOutOfRange { index, n })
    } else {
        Ok(())
    }
}
