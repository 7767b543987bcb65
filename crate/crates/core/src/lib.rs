//! Diagram-level Schubert calculus for two Grassmannian embeddings.
//!
//! Young diagrams in a `d x c` box index the Schubert classes of the
//! Grassmannian of d-dimensional subspaces of an (d+c)-dimensional space.
//! Extending the ambient space by an `s`-dimensional summand embeds the
//! Grassmannian in two ways, `P -> P + 0` and `P -> P + S`, and the induced
//! pushforward and pullback of classes are plain diagram surgeries: add `s`
//! full columns on the left, add `s` full rows on top, delete empty trailing
//! columns or rows, or kill the class.
//!
//! The crate has three layers:
//!
//! * [`partitions`] and [`chow`] implement the diagrams and the four
//!   surgeries;
//! * [`charts`] realizes the affine chart attached to a partition, where a
//!   Schubert variety becomes the vanishing of an explicit set of chart
//!   coordinates;
//! * [`exactla`] and [`verify`] form an independent oracle: exact linear
//!   algebra over small prime fields enumerates every point of a
//!   Grassmannian and re-derives each identity set-theoretically, with no
//!   input from the surgery code beyond the statement being checked.
//!
//! ```
//! use schubert::{h_push, BoxShape, Partition};
//!
//! let bx = BoxShape::new(4, 7)?;
//! let lambda = Partition::parse_parts(bx, "5,2,1")?;
//!
//! // Push forward along P -> P + 0 with a 2-dimensional summand: two full
//! // columns appear on the left, the cycle dimension stays put.
//! let pushed = h_push(&lambda, 2)?;
//! assert_eq!(pushed.to_string(), "7,4,3,2");
//! assert_eq!(pushed.box_shape().to_string(), "4x9");
//! assert_eq!(pushed.empty_squares(), lambda.empty_squares());
//!
//! // Re-derive the image identity over GF(2) by enumerating both sides.
//! let small = Partition::parse_parts(BoxShape::new(2, 2)?, "1")?;
//! let report = schubert::verify::check_prop1(&small, 1, 2, 1_000_000)?;
//! assert!(report.verified());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod charts;
pub mod chow;
pub mod exactla;
pub mod partitions;
pub mod verify;

pub use charts::{
    build_ma, chart_point, insertion_walk, ma_template, zero_pattern, ChartsError, InsertionWalk,
    MaskedGrid, ZeroPattern,
};
pub use chow::{h_pull, h_push, v_pull, v_push, ChowError, CycleClass, Embedding, EmbeddingKind};
pub use exactla::{ExactLaError, Field, FiniteField, FlagSpec, Gf, Matrix, Rat, Subspace};
pub use partitions::{BoxShape, Partition, PartitionError};
pub use verify::{
    Claim, Counts, ParamSet, Status, VerificationReport, VerifyError, Witness, DEFAULT_BUDGET,
};
