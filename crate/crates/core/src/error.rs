use thiserror::Error;

pub type Result<T, E = GeomError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("walk does not close: position residual {position:.3e}, heading residual {heading:.3e}")]
    Closure { position: f64, heading: f64 },
    /// The result (or input) self-intersects where a simple polygon is required.
    #[error("geometry error: {0}")]
    Geometry(String),
    #[error("degenerate polygon: {0}")]
    Degenerate(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("search exhausted after {0} candidates")]
    SearchExhausted(usize),
    /// Inconsistent combinatorial or file data.
    #[error("data error: {0}")]
    Data(String),
}

impl GeomError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        GeomError::Domain(msg.into())
    }
}
