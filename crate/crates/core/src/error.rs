use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Mesh construction rejected (nonpositive lengths or counts).
    InvalidMesh(String),
    /// Field values inconsistent with the mesh or not finite.
    InvalidField(String),
    /// Two fields live on different meshes.
    MeshMismatch,
    /// Reaction catalog violates a structural assumption.
    InvalidReaction(String),
    /// Evolution or objective parameters out of range.
    InvalidSpec(String),
    /// Explicit Lipschitz split requires dtau * K < 1.
    UnstableSplit { dtau: f64, lipschitz: f64 },
    /// Brute-force oracle restricted to small meshes.
    MeshTooLarge { nodes: usize, limit: usize },
    /// Configuration file missing, malformed or schema-invalid.
    Config(String),
    /// Underlying I/O failure while reading or writing artifacts.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidMesh(msg) => write!(f, "invalid mesh: {msg}"),
            Error::InvalidField(msg) => write!(f, "invalid field: {msg}"),
            Error::MeshMismatch => write!(f, "fields are defined on different meshes"),
            Error::InvalidReaction(msg) => write!(f, "invalid reaction: {msg}"),
            Error::InvalidSpec(msg) => write!(f, "invalid specification: {msg}"),
            Error::UnstableSplit { dtau, lipschitz } => write!(
                f,
                "explicit splitting unstable: dtau * K = {} * {} >= 1",
                dtau, lipschitz
            ),
            Error::MeshTooLarge { nodes, limit } => write!(
                f,
                "mesh has {nodes} interior nodes, brute-force oracle allows at most {limit}"
            ),
            Error::Config(msg) => write!(f, "config error: {msg}"),
            Error::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
