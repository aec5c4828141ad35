use crate::arith::ArithError;
use crate::conic::ConicError;
use crate::construct::ConstructError;
use crate::curve::CurveError;
use crate::local::LocalError;
use crate::ratfunc::RatFuncError;
use thiserror::Error;

/// Any library error, for callers that do not care which layer failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Conic(#[from] ConicError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("thread pool: {0}")]
    Jobs(String),
}

/// Runs `f` on a pool of `jobs` threads, or on the global pool for `None`.
/// Results never depend on the thread count.
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, Error> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().map_err(|e| Error::Jobs(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}
