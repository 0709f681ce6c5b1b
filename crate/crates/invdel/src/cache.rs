//! D-class graphs stored on disk, one file per `(n, r, m)`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use invdel_core::cayley::DClassGraph;

use crate::error::{Error, Result};

pub const ENV_VAR: &str = "INVDEL_CACHE";

/// `flag`, then `$INVDEL_CACHE`, then the platform cache directory.
pub fn resolve_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.to_path_buf());
    }
    if let Some(p) = std::env::var_os(ENV_VAR).filter(|p| !p.is_empty()) {
        return Some(PathBuf::from(p));
    }
    dirs::cache_dir().map(|d| d.join("invdel"))
}

/// `delta_{n}_{r}.bin`, with an `_m{m}` suffix when the left degree is
/// smaller than `n`.
pub fn file_name(n: usize, m: usize, r: usize) -> String {
    if m == n {
        format!("delta_{n}_{r}.bin")
    } else {
        format!("delta_{n}_{r}_m{m}.bin")
    }
}

#[derive(Debug)]
pub enum Lookup {
    Hit(DClassGraph),
    Missing,
    /// Present but unusable; the reason says why.
    Stale(String),
}

pub fn load(dir: &Path, n: usize, m: usize, r: usize) -> io::Result<Lookup> {
    let path = dir.join(file_name(n, m, r));
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Lookup::Missing),
        Err(e) => return Err(e),
    };
    Ok(match DClassGraph::decode(&bytes) {
        Ok(g) if (g.n(), g.m(), g.rank()) == (n, m, r) => Lookup::Hit(g),
        Ok(g) => Lookup::Stale(format!(
            "header describes n={} m={} r={}",
            g.n(),
            g.m(),
            g.rank()
        )),
        Err(e) => Lookup::Stale(e.to_string()),
    })
}

/// Writes through a temporary file so readers never see a partial graph.
pub fn store(dir: &Path, graph: &DClassGraph) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(file_name(graph.n(), graph.m(), graph.rank()));
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&graph.encode())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, &path)?;
    Ok(path)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Built,
    /// The cached file was unusable and has been replaced.
    Rebuilt(String),
}

#[derive(Debug)]
pub struct Loaded {
    pub graph: DClassGraph,
    pub status: CacheStatus,
    /// Set when a fresh graph could not be written back.
    pub store_error: Option<io::Error>,
}

pub fn load_or_build(
    dir: &Path,
    n: usize,
    m: usize,
    r: usize,
    build: impl FnOnce() -> invdel_core::Result<DClassGraph>,
) -> Result<Loaded> {
    let status = match load(dir, n, m, r).map_err(|source| Error::Io {
        context: format!("reading cache in {}", dir.display()),
        source,
    })? {
        Lookup::Hit(graph) => {
            return Ok(Loaded {
                graph,
                status: CacheStatus::Hit,
                store_error: None,
            })
        }
        Lookup::Missing => CacheStatus::Built,
        Lookup::Stale(why) => CacheStatus::Rebuilt(why),
    };
    let graph = build()?;
    let store_error = store(dir, &graph).err();
    Ok(Loaded {
        graph,
        status,
        store_error,
    })
}
