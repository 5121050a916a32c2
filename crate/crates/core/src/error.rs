//! Crate-wide error type. Every fallible operation reports enough context to
//! diagnose the failing input without re-running it.

use thiserror::Error;

/// Errors produced by the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A matrix operation received operands of incompatible shape.
    #[error("shape mismatch in {op}: {detail}")]
    Shape { op: &'static str, detail: String },

    /// A scalar or other literal failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// The quiver data is inconsistent (bad labels, dangling endpoints, ...).
    #[error("invalid quiver: {0}")]
    QuiverInvalid(String),

    /// A relation violates the input contract (non-parallel paths, length < 2,
    /// zero leading coefficient, ...).
    #[error("invalid relation: {0}")]
    RelationInvalid(String),

    /// The quotient by the relations is not finite-dimensional within the
    /// configured path-length budget; the witness is an irreducible path of
    /// maximal length.
    #[error("relations do not truncate paths: irreducible path `{witness}` reaches the length budget")]
    NotAdmissible { witness: String },

    /// The rewriting system derived from the relations is not confluent; the
    /// two words are distinct normal forms of the same overlap.
    #[error("relations are not confluent: overlap `{overlap}` reduces to both `{left}` and `{right}`")]
    NotConfluent {
        overlap: String,
        left: String,
        right: String,
    },

    /// A structure-constant table fails associativity or idempotent checks.
    #[error("invalid algebra table: {0}")]
    AlgebraInvalid(String),

    /// A representation-level operation needs a quiver presentation, but the
    /// algebra was built from bare structure constants.
    #[error("operation requires an algebra with a quiver presentation")]
    NoPresentation,

    /// A module's matrices have the wrong shapes or violate a relation.
    #[error("invalid module {name}: {detail}")]
    ModuleInvalid { name: String, detail: String },

    /// A putative module map is malformed or fails the intertwining equations.
    #[error("invalid module map: {0}")]
    MapInvalid(String),

    /// Two operands live over different algebras.
    #[error("operands are defined over different algebras")]
    AlgebraMismatch,

    /// The operation rejects the zero module.
    #[error("{op} is undefined for the zero module")]
    ZeroModule { op: &'static str },

    /// The operation requires an indecomposable input.
    #[error("{op} requires an indecomposable module")]
    DecomposableInput { op: &'static str },

    /// Random splitting failed within the retry budget even though the module
    /// is certified decomposable.
    #[error("failed to split a decomposable module (dims {dims:?}) within {attempts} attempts")]
    SplitFailure { dims: Vec<usize>, attempts: u32 },

    /// An isomorphism was needed but could not be certified within the retry
    /// budget.
    #[error("modules have equal hom data but no isomorphism was certified within {attempts} attempts")]
    IsoNotCertified { attempts: u32 },

    /// A higher kernel/cokernel construction produced an object outside the
    /// additive closure of the subcategory.
    #[error("construction leaves the additive closure of the subcategory at stage {stage}: {detail}")]
    NotInAdd { stage: usize, detail: String },

    /// A resolution by subcategory members did not close within the step
    /// budget.
    #[error("resolution did not close within {steps} steps; remaining kernel has dims {dims:?}")]
    ResolutionNotClosed { steps: usize, dims: Vec<usize> },

    /// The subcategory misses a module that the operation requires.
    #[error("subcategory is missing a required module: {0}")]
    MissingMember(String),

    /// The subcategory data violates its invariants.
    #[error("invalid subcategory: {0}")]
    SubcategoryInvalid(String),

    /// A functor-level object is malformed.
    #[error("invalid functor module: {0}")]
    FunctorInvalid(String),

    /// Internal invariant violation; indicates a bug, reported loudly rather
    /// than silently producing wrong mathematics.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
