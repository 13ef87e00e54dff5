use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("morphisms not composable: target of `{f}` is not the source of `{g}`")]
    NotComposable { g: String, f: String },
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("no dual found for {0}")]
    MissingDual(String),
    #[error("map is not monotone: {0}")]
    NotMonotone(String),
    #[error("poset is not a chain: {0}")]
    NotAChain(String),
    #[error("invalid algebra object: {0}")]
    InvalidAlgebra(String),
    #[error("lax limit is empty")]
    EmptyLimit,
    #[error("object is not dualizable: {0}")]
    NotDualizable(String),
    #[error("projection composite unexpectedly non-invertible at word {0}")]
    SquareCellFailure(String),
    #[error("round trip mismatch: {0}")]
    RoundTripMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Global size guard applied by every constructor that can explode
/// combinatorially.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_objects: usize,
    pub max_morphisms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_objects: 100_000, max_morphisms: 1_000_000 }
    }
}

impl Limits {
    pub fn check_objects(&self, n: usize, what: &str) -> Result<()> {
        if n > self.max_objects {
            return Err(Error::SizeLimit(format!("{what}: {n} objects (max {})", self.max_objects)));
        }
        Ok(())
    }

    pub fn check_morphisms(&self, n: usize, what: &str) -> Result<()> {
        if n > self.max_morphisms {
            return Err(Error::SizeLimit(format!(
                "{what}: {n} morphisms (max {})",
                self.max_morphisms
            )));
        }
        Ok(())
    }
}
