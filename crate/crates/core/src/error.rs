use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("norm of amplitudes is {found}, expected 2^{k} = {expected}")]
    NormalizationViolation { k: u32, found: u64, expected: u64 },

    #[error("amplitude bound exceeded: component {component} (limit {limit}) or exponent k = {k} (limit {k_limit})")]
    AmplitudeBound {
        component: i64,
        limit: i64,
        k: u32,
        k_limit: u32,
    },

    #[error("malformed state encoding: {0}")]
    Decode(String),

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("closure exceeded capacity of {capacity} states")]
    CapacityExceeded { capacity: usize },

    #[error("state {0} is not in the set")]
    NotInSet(String),

    #[error("generator {gate} maps a member of the set outside it")]
    NotClosed { gate: String },

    #[error("reduced spectrum is not flat across cut {cut}")]
    FlatSpectrumViolation { cut: String },

    #[error("population is not uniform over the support of {0}")]
    NonUniform(String),

    #[error("ambiguous orbit label: {0}")]
    AmbiguousLabel(String),

    #[error("orbit graph is disconnected")]
    Disconnected,

    #[error("state {0} was not enumerated in this mode")]
    NotEnumerated(String),

    #[error("real mode requires real amplitudes, got {0}")]
    RealModeViolation(String),

    #[error("state file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
