use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration (cover, table, ...) would exceed the configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// Arithmetic capacity guard (e.g. smoothness order above the configured cap).
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("derivative order {order} outside the certified range 1..={k}")]
    UnsupportedOrder { order: u32, k: u32 },
}

impl Error {
    /// Process exit code for the CLI: 1 for validation errors, 2 for
    /// budget/capacity overruns.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget(_) | Error::Capacity(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
