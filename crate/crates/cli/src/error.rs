use knotsurgery_core::basicclass::BasicClassError;
use knotsurgery_core::knot::KnotError;
use knotsurgery_core::laurent::LaurentError;
use knotsurgery_core::manifold::ManifoldError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{message}")]
    Json { line: usize, message: String },
    #[error("knot `{name}`: {source}")]
    Knot { name: String, source: KnotError },
    #[error("polynomial: {0}")]
    Laurent(#[from] LaurentError),
    #[error("construction: {0}")]
    Manifold(#[from] ManifoldError),
    #[error("basic classes: {0}")]
    BasicClass(#[from] BasicClassError),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub fn knot(name: &str, source: KnotError) -> Self {
        Error::Knot { name: name.to_string(), source }
    }

    /// 2 for bad input, 3 for a violated mathematical invariant, 4 for a
    /// construction precondition.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Io { .. } | Error::Json { .. } => 2,
            Error::Laurent(LaurentError::Parse { .. }) => 2,
            Error::Knot { source, .. } => knot_code(source),
            Error::Manifold(ManifoldError::Knot(k)) => knot_code(k),
            Error::Manifold(ManifoldError::InvalidParameter { .. } | ManifoldError::NotATorus(_)) => 4,
            Error::Manifold(ManifoldError::GenusMismatch { .. } | ManifoldError::NoSuchSurface(_)) => 4,
            Error::BasicClass(BasicClassError::BoundTooSmall { .. }) => 4,
            Error::Laurent(_) | Error::Manifold(_) | Error::BasicClass(_) | Error::Verification(_) => 3,
        }
    }
}

fn knot_code(e: &KnotError) -> i32 {
    match e {
        KnotError::BraidParse { .. }
        | KnotError::GeneratorOutOfRange { .. }
        | KnotError::NotSquare
        | KnotError::OddSize(_)
        | KnotError::NoPresentation => 2,
        KnotError::DegreeExceedsGenus { .. } | KnotError::GenusExceedsSurface { .. } | KnotError::GenusAbsent => 4,
        _ => 3,
    }
}

pub fn json_error(e: serde_json::Error) -> Error {
    Error::Json { line: e.line(), message: e.to_string() }
}
