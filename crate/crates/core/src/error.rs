use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("element has zero norm and is not invertible")]
    ZeroDivisor,
    #[error("unknown folding or type identifier `{0}`")]
    UnknownFolding(String),
    #[error("reflection along an isotropic vector")]
    IsotropicRoot,
    #[error("root closure did not terminate within {cap} iterations")]
    NonTerminating { cap: usize },
    #[error("generator index {index} out of range for rank {rank}")]
    BadIndex { index: usize, rank: usize },
    #[error("element of length {length} exceeds the reduced-word cap {cap}")]
    LengthCapExceeded { length: usize, cap: usize },
    #[error("quotient has more than {cap} elements")]
    SizeCapExceeded { cap: usize },
    #[error("element is not a minimal coset representative for the parabolic subgroup")]
    NotInQuotient,
    #[error("class is not in the span of Schubert classes")]
    NotInSpan,
    #[error("linear form has no invertible coefficient")]
    NoUnitCoefficient,
    #[error("folding invariant violated: {0}")]
    InvariantViolation(String),
    #[error("parabolic subset is not stable under the folding")]
    ParabolicNotThetaStable,
    #[error("word is not reduced")]
    NotReduced,
    #[error("element is not in the folding subset")]
    NotInFoldingSet,
    #[error("coefficient is not a power of t")]
    NotAPowerOfTau,
    #[error("malformed input: {0}")]
    Parse(String),
}
