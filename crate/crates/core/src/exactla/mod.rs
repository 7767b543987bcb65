//! Exact linear algebra over prime fields and rationals: matrices, ranks,
//! canonical subspaces, complete flags, Schubert membership and exhaustive
//! Grassmannian enumeration. No floating point anywhere.

pub mod field;
pub mod grassmannian;
pub mod matrix;
pub mod rng;
pub mod subspace;

pub use field::{Field, FiniteField, Gf, Rat};
pub use grassmannian::{enumerate_grassmannian, gaussian_binomial, GrassmannianIter};
pub use matrix::Matrix;
pub use subspace::{
    embed_h, embed_v, flag_b, flag_d, flag_l, flag_profile, schubert_membership,
    schubert_membership_by_intersection, scrambled_flag, FlagSpec, Subspace,
};

use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExactLaError {
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    BudgetExceeded {
        required: u128,
        budget: u64,
    },
    RankDeficient,
}

impl fmt::Display for ExactLaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactLaError::DimensionMismatch {
                what,
                expected,
                found,
            } => write!(f, "{what} mismatch: expected {expected}, found {found}"),
            ExactLaError::BudgetExceeded { required, budget } => write!(
                f,
                "enumeration budget exceeded: {required} subspaces needed, budget {budget}"
            ),
            ExactLaError::RankDeficient => write!(f, "basis is rank deficient"),
        }
    }
}

impl std::error::Error for ExactLaError {}
