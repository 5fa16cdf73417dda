use thiserror::Error;

/// Errors produced by the orientation, topology and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("points {0} and {1} have identical coordinates")]
    CoincidentPoints(usize, usize),
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("point ids must be contiguous from 0 in order (position {position} holds id {id})")]
    InvalidIds { position: usize, id: usize },
    #[error("point {0} has a non-finite coordinate")]
    NonFiniteCoordinate(usize),
    #[error("the unit disk graph of the input is not connected")]
    DisconnectedInput,
    #[error("at least {needed} points are required, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("at most {limit} points are supported, got {got}")]
    TooManyPoints { limit: usize, got: usize },
    #[error("the four points are not in general position")]
    NotGeneralPosition,
    #[error("no orientation of the four points passed verification")]
    SearchExhausted,
    #[error("construction failed verification at radius {radius}")]
    ConstructionInvariantViolated { radius: f64 },
    #[error("no orientation given for point {0}")]
    MissingOrientation(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
