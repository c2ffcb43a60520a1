use std::fmt;
use std::io;

/// Errors produced across the crate.
#[derive(Debug)]
pub enum Error {
    /// A parameter violated a documented precondition.
    InvalidParameter(&'static str),
    /// `n * k` does not fit in 64 bits; the instance is rejected up front
    /// so no later arithmetic can wrap.
    InstanceTooLarge { n: u64, k: u64 },
    /// A checked arithmetic step would exceed 64 bits.
    ArithmeticOverflow { x: u64, k: u64 },
    /// The block recursion would need more stack frames than the guard allows.
    RecursionDepthExceeded { required: u64, guard: u64 },
    /// The brute-force simulation refuses circles larger than its cap.
    SimulationCapExceeded { n: u64, cap: u64 },
    /// The Grundy table would need more entries than the configured cap.
    TableCapExceeded { entries: u64, cap: u64 },
    /// Chart rendering was handed an empty sample list.
    EmptySamples,
    /// A CSV document did not match the benchmark schema.
    CsvFormat(String),
    /// Underlying I/O failure.
    Io(io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InstanceTooLarge { n, k } => {
                write!(f, "instance too large: {n} * {k} does not fit in 64 bits")
            }
            Error::ArithmeticOverflow { x, k } => {
                write!(f, "arithmetic overflow stepping x = {x} with k = {k}")
            }
            Error::RecursionDepthExceeded { required, guard } => {
                write!(f, "recursion depth {required} exceeds guard {guard}")
            }
            Error::SimulationCapExceeded { n, cap } => {
                write!(f, "simulation refused: n = {n} exceeds cap {cap}")
            }
            Error::TableCapExceeded { entries, cap } => {
                write!(f, "grundy table of {entries} entries exceeds cap {cap}")
            }
            Error::EmptySamples => write!(f, "no samples to render"),
            Error::CsvFormat(msg) => write!(f, "malformed csv: {msg}"),
            Error::Io(err) => write!(f, "i/o error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(err: io::Error) -> Self {
        Error::Io(err)
    }
}
