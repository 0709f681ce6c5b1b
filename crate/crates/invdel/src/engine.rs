//! Distance queries behind either search engine, plus the parallel matrix.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use invdel_core::align::{reference_pairs, solve_pair_via_cayley, PairMode};
use invdel_core::cayley::{
    build_union, enumerate_monoid, induce_dclass, DClassGraph, MonoidEnumeration,
};
use invdel_core::distance::{mrca_distance_with, DistanceResult};
use invdel_core::genome::Genome;
use invdel_core::pperm::sigma_from_frames;
use rayon::prelude::*;

use crate::cache::{self, CacheStatus};
use crate::config::{Config, Engine};
use crate::error::{Error, Result};

/// D-class graphs shared between queries, backed by an optional cache
/// directory.
#[derive(Default)]
pub struct DeltaCache {
    dir: Option<PathBuf>,
    enumerations: Mutex<HashMap<usize, Arc<MonoidEnumeration>>>,
    graphs: Mutex<HashMap<(usize, usize, usize), Arc<DClassGraph>>>,
    notes: Mutex<Vec<String>>,
}

impl DeltaCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        DeltaCache {
            dir,
            ..Default::default()
        }
    }

    pub fn dir(&self) -> Option<&PathBuf> {
        self.dir.as_ref()
    }

    fn enumeration(&self, n: usize) -> invdel_core::Result<Arc<MonoidEnumeration>> {
        if let Some(e) = self.enumerations.lock().unwrap().get(&n) {
            return Ok(Arc::clone(e));
        }
        // Built outside the lock; a concurrent duplicate is harmless.
        let e = Arc::new(enumerate_monoid(n)?);
        Ok(Arc::clone(
            self.enumerations.lock().unwrap().entry(n).or_insert(e),
        ))
    }

    fn build(&self, m: usize, n: usize, r: usize) -> invdel_core::Result<DClassGraph> {
        let en = self.enumeration(n)?;
        induce_dclass(&build_union(m, n, &en)?, r)
    }

    /// The rank-`r` class with left degree `m` inside `I_n`.
    pub fn graph(&self, m: usize, n: usize, r: usize) -> Result<Arc<DClassGraph>> {
        if let Some(g) = self.graphs.lock().unwrap().get(&(n, m, r)) {
            return Ok(Arc::clone(g));
        }
        let graph = match &self.dir {
            Some(dir) => {
                let loaded = cache::load_or_build(dir, n, m, r, || self.build(m, n, r))?;
                let name = cache::file_name(n, m, r);
                let mut notes = self.notes.lock().unwrap();
                match &loaded.status {
                    CacheStatus::Hit => {}
                    CacheStatus::Built => notes.push(format!("cache: built {name}")),
                    CacheStatus::Rebuilt(why) => {
                        notes.push(format!("cache: rebuilt {name} ({why})"))
                    }
                }
                if let Some(e) = &loaded.store_error {
                    notes.push(format!("cache: could not write {name}: {e}"));
                }
                loaded.graph
            }
            None => self.build(m, n, r)?,
        };
        let graph = Arc::new(graph);
        Ok(Arc::clone(
            self.graphs
                .lock()
                .unwrap()
                .entry((n, m, r))
                .or_insert(graph),
        ))
    }

    /// Messages about cache files built or replaced since the last call.
    pub fn take_notes(&self) -> Vec<String> {
        std::mem::take(&mut *self.notes.lock().unwrap())
    }
}

pub struct Calculator {
    pub engine: Engine,
    pub mode: PairMode,
    pub cache: DeltaCache,
}

impl Calculator {
    pub fn new(config: &Config) -> Self {
        Calculator {
            engine: config.engine,
            mode: if config.fast_pairs {
                PairMode::Fast
            } else {
                PairMode::All
            },
            cache: DeltaCache::new(cache::resolve_dir(config.cache_dir.as_deref())),
        }
    }

    /// MRCA distance. The Cayley engine computes the alignment cost on the
    /// D-class graphs and checks it against the direct search, which also
    /// supplies the witness words.
    pub fn distance(&self, g1: &Genome, g2: &Genome) -> Result<DistanceResult> {
        let direct = mrca_distance_with(g1, g2, self.mode)?;
        if self.engine == Engine::Cayley {
            let mu = self.mu_via_cayley(g1, g2)?;
            if mu != direct.mu {
                return Err(Error::Verification(format!(
                    "engines disagree: Cayley graph gives {mu} inversions, direct search {}",
                    direct.mu
                )));
            }
        }
        Ok(direct)
    }

    fn mu_via_cayley(&self, g1: &Genome, g2: &Genome) -> Result<usize> {
        let mut best = usize::MAX;
        for p in reference_pairs(g1, g2, self.mode) {
            let sigma = sigma_from_frames(&p.g1, &p.g2)?;
            let (m, n) = (sigma.source_size(), sigma.target_size());
            let r = sigma.rank();
            if r <= 1 || sigma.is_orientation_preserving() {
                return Ok(0);
            }
            let graph = self.cache.graph(m.min(n), m.max(n), r)?;
            best = best.min(solve_pair_via_cayley(&sigma, &graph)?);
        }
        Ok(best)
    }

    /// Symmetric all-pairs matrix with a zero diagonal. Pairs run in
    /// parallel; the result does not depend on scheduling.
    pub fn matrix(&self, genomes: &[Genome]) -> Result<Vec<Vec<usize>>> {
        let k = genomes.len();
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .collect();
        let values = pairs
            .par_iter()
            .map(|&(i, j)| self.distance(&genomes[i], &genomes[j]).map(|d| d.total))
            .collect::<Result<Vec<_>>>()?;
        let mut out = vec![vec![0; k]; k];
        for (&(i, j), d) in pairs.iter().zip(values) {
            out[i][j] = d;
            out[j][i] = d;
        }
        Ok(out)
    }
}
