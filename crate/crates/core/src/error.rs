use thiserror::Error;

/// Errors produced by construction and validation routines.
///
/// Computational routines (ranks, multiplicities) are total once their
/// inputs validate, so they return plain values.
#[derive(Debug, Error)]
pub enum Error {
    #[error("relation closure violates antisymmetry: {0} <= {1} and {1} <= {0}")]
    Cycle(usize, usize),

    #[error("index {0} out of range for poset with {1} elements")]
    IndexOutOfRange(usize, usize),

    #[error("subset is not convex: {witness} lies between members {low} and {high}")]
    NotConvex {
        low: usize,
        witness: usize,
        high: usize,
    },

    #[error("subset is not connected in the Hasse quiver")]
    NotConnected,

    #[error("empty subset where a nonempty interval is required")]
    EmptyInterval,

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error(
        "structure maps do not commute over the pair ({x}, {y}): \
         two Hasse paths compose to different matrices"
    )]
    Commutativity { x: usize, y: usize },

    #[error("modules live over different posets")]
    PosetMismatch,

    #[error("map is not order-preserving: {x} <= {y} in the domain but images are not comparable")]
    NotOrderPreserving { x: usize, y: usize },

    #[error("interval module is not injective: the interval is not the down-set of a maximum")]
    NotInjectiveInterval,

    #[error("poset is not a 2D grid in canonical numbering")]
    NotAGrid,

    #[error("poset is not a chain")]
    NotAChain,

    #[error("poset is not a bipath in canonical numbering")]
    NotABipath,

    #[error("the order map does not essentially cover the interval")]
    NotEssentiallyCovering,

    #[error("restriction is not a direct sum of multiplicity-one interval modules")]
    NotIntervalDecomposableRestriction,

    #[error("invalid scalar `{0}` for field {1}")]
    BadScalar(String, String),

    #[error("invalid field spec `{0}` (expected GF(p) or Q)")]
    BadField(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("simplicial filtration is invalid: {0}")]
    BadFiltration(String),

    #[error("bad input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
