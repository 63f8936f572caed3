//! Exact-arithmetic tensor algebra kit.
//!
//! Builds the free tensor algebra on two finite-dimensional spaces in
//! duality, the joint tensor algebra of the pair, and the structure living
//! on top of them: the Hopf maps (coproduct, antipode, counit), the
//! symmetrization and antisymmetrization projections with their quotient
//! products, the Laplace pairing, the square product, the symmetric and
//! antisymmetric circle products, and the phi maps relating the ordinary
//! and deformed algebra structures.
//!
//! All coefficients are arbitrary-precision rationals; every operation is
//! exact, so algebraic identities can be asserted with `==`. Values are
//! immutable and operations are pure functions.
//!
//! The companion binary exposes an expression evaluator (`eval`), a
//! randomized invariant check-runner (`check`), and a `phi-matrix`
//! subcommand; see the crate README.

pub mod checks;
pub mod eval;
pub mod expr;
pub mod hopf;
pub mod laplace;
pub(crate) mod permutations;
pub mod products;
pub mod scalar;
pub mod space;
pub mod symmetry;
pub mod tensor;

pub use scalar::Scalar;
pub use space::{Side, SpaceSpec};
pub use tensor::{Element, JointElement, Word};

use thiserror::Error;

/// Hard cap on the grade of any word fed to a coproduct. A grade-n word
/// splits into 2^n Sweedler terms.
pub const COPRODUCT_GRADE_CAP: usize = 8;

/// Hard cap on the grade of any word fed to a permutation sum
/// (symmetrize, antisymmetrize, the closed-form pairing). A grade-n word
/// expands into n! terms; 7! = 5040 keeps every operation desk-scale.
pub const PERMUTATION_GRADE_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("side mismatch: expected {expected} element, found {found}")]
    SideMismatch { expected: Side, found: Side },
    #[error("gram matrix has {rows} rows and {cols} columns, expected {dim_u} x {dim_v}")]
    GramShape {
        rows: usize,
        cols: usize,
        dim_u: usize,
        dim_v: usize,
    },
    #[error("self-dual space requires dim_u = dim_v, got {dim_u} and {dim_v}")]
    SelfDualDims { dim_u: usize, dim_v: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("basis index {index} out of range for side {side} of dimension {dim}")]
    IndexOutOfRange { side: Side, index: u32, dim: usize },
    #[error("grade {grade} exceeds the coproduct cap {cap}")]
    CoproductCap { grade: usize, cap: usize },
    #[error("grade {grade} exceeds the permutation cap {cap}")]
    PermutationCap { grade: usize, cap: usize },
    #[error("operation requires a self-dual space")]
    SelfDualityRequired,
    #[error("operand is not symmetric (not fixed by symmetrize)")]
    NotSymmetric,
    #[error("operand is not antisymmetric (not fixed by antisymmetrize)")]
    NotAntisymmetric,
    #[error("operand must be a combination of words of grade at most 1")]
    NotGradeOne,
    #[error("polarization needs at least one vector")]
    EmptyPolarization,
    #[error("element is not in the span of the requested basis")]
    NotInSpan,
    #[error("space file: {0}")]
    SpaceFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
