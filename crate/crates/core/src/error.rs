use alloc::string::String;
use core::fmt;

/// Errors raised by the analysis pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input.
    Parse {
        line: usize,
        message: String,
    },
    /// A value lies outside its admissible range (digit ≥ base, point outside [0,1], ...).
    Domain(String),
    /// The recognized ω-language is empty.
    EmptyLanguage,
    /// The operation requires a trim automaton.
    NotTrim,
    /// The operation requires a closed automaton (every state accepting).
    NotClosed,
    /// The operation requires a sparse language.
    NotSparse,
    BaseMismatch {
        left: u32,
        right: u32,
    },
    ArityMismatch {
        left: usize,
        right: usize,
    },
    IndexOutOfRange {
        index: usize,
        arity: usize,
    },
    /// The operation only supports arity-1 automata.
    Arity(usize),
    /// ω-power applied to a language containing the empty word.
    OmegaArity,
    /// Every V-W component is countable; there is no perfect kernel.
    NoCantor,
    /// Some projection has dimension 1, so the closure has interior.
    InteriorPresent,
    /// The description denotes a finite set.
    FiniteSet,
    /// The two bases are multiplicatively dependent.
    DependentBases {
        k: u64,
        l: u64,
    },
    /// A configurable enumeration cap was exceeded.
    ResourceLimit {
        what: &'static str,
        cap: usize,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    /// Short machine-readable kind, used by the CLI's `error: <kind>` line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Domain(_) => "domain",
            Error::EmptyLanguage => "empty-language",
            Error::NotTrim => "not-trim",
            Error::NotClosed => "not-closed",
            Error::NotSparse => "not-sparse",
            Error::BaseMismatch { .. } => "base-mismatch",
            Error::ArityMismatch { .. } => "arity-mismatch",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::Arity(_) => "arity",
            Error::OmegaArity => "omega-arity",
            Error::NoCantor => "no-cantor",
            Error::InteriorPresent => "interior-present",
            Error::FiniteSet => "finite-set",
            Error::DependentBases { .. } => "dependent-bases",
            Error::ResourceLimit { .. } => "resource-limit",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
            Error::Domain(msg) => write!(f, "{msg}"),
            Error::EmptyLanguage => f.write_str("the automaton recognizes the empty language"),
            Error::NotTrim => f.write_str("automaton is not trim"),
            Error::NotClosed => f.write_str("automaton is not closed"),
            Error::NotSparse => f.write_str("language is not sparse"),
            Error::BaseMismatch { left, right } => write!(f, "base mismatch: {left} vs {right}"),
            Error::ArityMismatch { left, right } => {
                write!(f, "arity mismatch: {left} vs {right}")
            }
            Error::IndexOutOfRange { index, arity } => {
                write!(f, "coordinate {index} out of range for arity {arity}")
            }
            Error::Arity(m) => write!(f, "expected arity 1, got {m}"),
            Error::OmegaArity => f.write_str("omega-power of a language containing the empty word"),
            Error::NoCantor => f.write_str("all V-W components are countable"),
            Error::InteriorPresent => f.write_str("closure has Hausdorff dimension 1"),
            Error::FiniteSet => f.write_str("description denotes a finite set"),
            Error::DependentBases { k, l } => {
                write!(f, "bases {k} and {l} are multiplicatively dependent")
            }
            Error::ResourceLimit { what, cap } => write!(f, "{what} exceeded cap {cap}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
