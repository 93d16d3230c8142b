//! Virtual knot and link diagrams as signed Gauss codes.
//!
//! A diagram is a list of components, each a cyclic sequence of passages
//! such as `O1+` (over crossing 1, positive). Arcs get affine labels; the
//! labels give each crossing a weight, and the weights give the affine
//! index polynomial, the odd writhe and the writhe spectrum.
//!
//! ```
//! use vknot::{affine_index_polynomial, parse, LabelingMode};
//!
//! let vt = parse("O1+O2+U1+U2+").unwrap();
//! let p = affine_index_polynomial(&vt, &LabelingMode::Symbolic).unwrap();
//! assert_eq!(p.to_string(), "t^-1 + t - 2");
//! ```

pub mod cobordism;
pub mod error;
pub mod gauss;
pub mod invariants;
pub mod labeling;
pub mod moves;
pub mod poly;
pub mod random;
pub mod report;
pub mod transforms;

pub use cobordism::{
    birth, death, four_ball_genus_bounds, labels_equal_at, null_weight_reduction, replay, saddle, saddle_labeled,
    seifert_stats, smooth_crossing, smooth_crossings, smoothing_preserves_labeling, trace_genus, CobordismEvent, CobordismTrace, GenusBounds,
    SaddleSite, SeifertStats, TraceReport,
};
pub use error::{Error, Result, ValidationKind};
pub use gauss::{parse, serialize, ArcRef, Diagram, Passage, Role, Sign, Slot};
pub use invariants::{
    affine_index_polynomial, flat_affine_polynomial, odd_writhe, writhe, wr_spectrum, InvariantReport, WritheSpectrum,
};
pub use labeling::{
    compute_labeling, crossing_parity, crossing_weights, is_compatible, AffineLabel, AffineLabeling, CrossingWeight,
    LabelingMode, Parity,
};
pub use moves::{enumerate_sites, scramble, MoveKind, MoveSite};
pub use poly::{AffineExponent, FlatPolynomial, IndexPolynomial};
pub use transforms::{connected_sum, reverse, switch_all, switch_crossing, vertical_mirror};
