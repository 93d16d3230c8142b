use std::fmt;

use thiserror::Error;

/// Why a set of passages fails to describe a valid Gauss code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationKind {
    /// The crossing occurs only once.
    MissingTwin,
    /// Both passages of the crossing have the same role.
    DuplicateRole,
    /// The two passages disagree on the crossing sign.
    SignMismatch,
    /// The crossing occurs more than twice.
    TooManyPassages,
    /// Crossing ids must be positive.
    ZeroId,
}

impl fmt::Display for ValidationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ValidationKind::MissingTwin => "missing twin passage",
            ValidationKind::DuplicateRole => "both passages have the same role",
            ValidationKind::SignMismatch => "sign mismatch",
            ValidationKind::TooManyPassages => "occurs more than twice",
            ValidationKind::ZeroId => "crossing id must be positive",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("crossing {crossing}: {kind}")]
    Validation { crossing: u32, kind: ValidationKind },

    #[error("link is not compatible: component {component} has net label change {defect}")]
    IncompatibleLink { component: usize, defect: i64 },

    #[error("operation requires a one-component diagram, got {components} components")]
    MultiComponent { components: usize },

    #[error("crossing {0} joins two different components")]
    CrossingSpansComponents(u32),

    #[error("unknown crossing {0}")]
    UnknownCrossing(u32),

    #[error("no arc at component {component}, position {position}")]
    InvalidArc { component: usize, position: usize },

    #[error("no component {0}")]
    InvalidComponent(usize),

    #[error("expected {expected} pinned bases, got {got}")]
    PinnedArity { expected: usize, got: usize },

    #[error("labeling does not fit the diagram: {0}")]
    InvalidLabeling(String),

    #[error("no value assigned to base variable x{0}")]
    MissingAssignment(usize),

    #[error("crossing {0} is not a removable kink")]
    NotAKink(u32),

    #[error("crossings {0} and {1} do not form a removable bigon")]
    NotAnR2Pair(u32, u32),

    #[error("both ends of the operation lie on the same arc")]
    SameArc,

    #[error("crossings {0:?} do not form a supported triangle")]
    NotAnR3Triangle([u32; 3]),

    #[error("component {0} still has crossings")]
    ComponentNotUnknottedCircle(usize),

    #[error("event {index} cannot be applied: {source}")]
    InapplicableEvent {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::Validation { .. } => "validation",
            Error::IncompatibleLink { .. } => "incompatible_link",
            Error::MultiComponent { .. } => "multi_component",
            Error::CrossingSpansComponents(_) => "crossing_spans_components",
            Error::UnknownCrossing(_) => "unknown_crossing",
            Error::InvalidArc { .. } => "invalid_arc",
            Error::InvalidComponent(_) => "invalid_component",
            Error::PinnedArity { .. } => "pinned_arity",
            Error::InvalidLabeling(_) => "invalid_labeling",
            Error::MissingAssignment(_) => "missing_assignment",
            Error::NotAKink(_) => "not_a_kink",
            Error::NotAnR2Pair(..) => "not_an_r2_pair",
            Error::SameArc => "same_arc",
            Error::NotAnR3Triangle(_) => "not_an_r3_triangle",
            Error::ComponentNotUnknottedCircle(_) => "component_not_unknotted_circle",
            Error::InapplicableEvent { .. } => "inapplicable_event",
        }
    }

    /// Whether the input text itself is malformed, as opposed to a valid
    /// diagram on which the operation does not apply.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::Validation { .. })
    }
}
