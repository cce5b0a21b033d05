use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("unknown type label `{0}`")]
    UnknownType(String),
    #[error("not of finite type: {0}")]
    NotFiniteType(String),
    #[error("not crystallographic: {0}")]
    NotCrystallographic(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("vectors live in different lattices ({0} and {1})")]
    SpaceMismatch(String, String),
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("input contains vectors that are not positive roots")]
    InputNotPositiveRoots,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoldingError {
    #[error("not an involution of the simple-root index set")]
    NotInvolution,
    #[error("not a folding: {0}")]
    NotFolding(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal classification failure: {0}")]
    InternalClassificationFailure(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WssError {
    #[error("no Table 1 pattern matches {0}")]
    NoPatternMatch(String),
    #[error("several patterns match {0}")]
    AmbiguousPattern(String),
    #[error("invalid weak spherical system: {0}")]
    Invalid(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualizeError {
    #[error("associated roots of {0} are not unique ({1} decompositions)")]
    UniquenessFailure(String, usize),
    #[error("lemma violated: {0}")]
    LemmaViolation(String),
    #[error("associated roots are not additively closed: {0}")]
    AdditiveClosureFailure(String),
    #[error("adapted folding check failed: {0}")]
    FoldingCheckFailure(String),
    #[error("Weyl lift relation failed: {0}")]
    RelationFailure(String),
    #[error("unrecognized fixed-point component: {0}")]
    UnrecognizedComponent(String),
    #[error(transparent)]
    Wss(#[from] WssError),
    #[error(transparent)]
    Folding(#[from] FoldingError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LgroupError {
    #[error("permutation is not a diagram automorphism: {0}")]
    NotAutomorphism(String),
    #[error("action does not preserve the system: {0}")]
    NotPreserved(String),
    #[error("element is not stabilized by the action")]
    NotStabilized,
    #[error(transparent)]
    Dualize(#[from] DualizeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("ambient rank {0} exceeds the bound {1}")]
    RankBoundExceeded(usize, usize),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Wss(#[from] WssError),
}
