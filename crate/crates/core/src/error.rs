use thiserror::Error;

/// Every failure mode of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("budget exhausted after {steps} reduction steps")]
    BudgetExhausted { steps: u64 },

    #[error("no stabilization of J((c/p)*a_(p*l)) for p <= {max_p}")]
    StabilizationBudget { max_p: u32 },

    #[error("witness {witness} does not avoid component {component}")]
    InvalidWitness { component: String, witness: String },

    #[error("cross-check failed: generator {generator} of the computed symbolic power fails the derivative test")]
    CrossCheck { generator: String },

    #[error("colength is infinite")]
    InfiniteColength,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
