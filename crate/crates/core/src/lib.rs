//! Arc combinatorics and Grothendieck groups of the discrete cluster
//! categories of Dynkin type A∞ and of their completions.
//!
//! The combinatorial model is a circle with `n` two-sided accumulation
//! points. Objects are arcs between marked points, `Ext¹` is crossing and
//! the suspension rotates every endpoint one step clockwise.
//!
//! ```
//! use arck0::{compute_k0_cn, GroupPresentation};
//!
//! let report = compute_k0_cn(3, &[0, 0, 0], 4).unwrap();
//! assert_eq!(report.presentation, GroupPresentation::free(3));
//! ```

pub mod arcs;
pub mod circle;
pub mod cli;
pub mod completion;
pub mod error;
pub mod k0;
pub mod linalg;
pub mod render;
pub mod tilting;

pub use arcs::{ext1_dim, induced_triangles, quadrilateral_sides, Arc, InducedTriangle, MaybeArc};
pub use circle::{CircleModel, InteriorCount, PointIndex};
pub use completion::{
    compute_k0_completed, f_matrix, verify_f_oracle, CompletionModel, CompletionReport,
};
pub use error::{Error, Result};
pub use k0::{
    class_same_segment, class_same_segment_with_anchors, compute_k0_cn, euler_oracle, fountain_arc,
    k0_of_tilting, palu_relation_matrix, parity_class, segment_generator_class, EulerOracle,
    K0Class, K0Report, ParityClass,
};
pub use linalg::{
    cokernel_of_rows, cokernel_presentation, smith_normal_form, GroupPresentation, IntMatrix,
    Quotient, QuotientClass, SparseQuotientBuilder,
};
pub use render::render_svg;
pub use tilting::{ExchangePair, Relation, StandardTilting};
