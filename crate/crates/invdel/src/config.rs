use std::path::PathBuf;

use crate::error::{Error, Result};

/// Hard ceiling on genome size, set by the fixed-width partial permutation
/// representation.
pub const MAX_N_LIMIT: usize = invdel_core::pperm::MAX_DEGREE;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    /// Breadth-first search directly over the alignment states.
    #[default]
    OnTheFly,
    /// Search over cached D-class graphs of the symmetric inverse monoid.
    Cayley,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub cache_dir: Option<PathBuf>,
    pub max_n: usize,
    pub engine: Engine,
    pub fast_pairs: bool,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            cache_dir: None,
            max_n: 8,
            engine: Engine::OnTheFly,
            fast_pairs: false,
            seed: 0,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_n > MAX_N_LIMIT {
            return Err(Error::Usage(format!(
                "--max-n must be between 1 and {MAX_N_LIMIT}, got {}",
                self.max_n
            )));
        }
        Ok(())
    }

    /// Rejects genomes larger than `max_n`.
    pub fn check_size(&self, what: &str, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::Usage(format!(
                "{what} has {n} regions, above --max-n {}",
                self.max_n
            )));
        }
        Ok(())
    }
}
