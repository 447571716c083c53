use crate::error::{Error, Result};

/// Environment variable capping the ambient dimension accepted from user input.
pub const MAX_DIM_ENV: &str = "HOLOPRIME_MAX_DIM";
pub const DEFAULT_MAX_DIM: usize = 12;

/// Hard limit imposed by the bitmask blade representation.
pub const HARD_MAX_DIM: usize = 30;

pub fn max_dim() -> Result<usize> {
    match std::env::var(MAX_DIM_ENV) {
        Ok(raw) => {
            let cap: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{MAX_DIM_ENV}={raw:?} is not an integer")))?;
            if cap == 0 || cap > HARD_MAX_DIM {
                return Err(Error::InvalidArgument(format!(
                    "{MAX_DIM_ENV} must lie in 1..={HARD_MAX_DIM}"
                )));
            }
            Ok(cap)
        }
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

pub fn check_ambient(n: usize) -> Result<()> {
    let cap = max_dim()?;
    if n > cap {
        return Err(Error::AmbientTooLarge { n, cap });
    }
    Ok(())
}
