//! Genome files: one genome per line as `NAME: token token ...`, with `#`
//! starting a comment. All genomes in a file share one region alphabet.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use invdel_core::genome::{canonicalize, Genome, ReferenceFrame, RegionAlphabet};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub struct NamedGenome {
    pub name: String,
    /// The frame as written in the file.
    pub frame: ReferenceFrame,
    pub genome: Genome,
    pub line: usize,
}

#[derive(Debug, Clone)]
pub struct GenomeSet {
    pub alphabet: RegionAlphabet,
    pub genomes: Vec<NamedGenome>,
}

impl GenomeSet {
    pub fn get(&self, name: &str) -> Result<&NamedGenome> {
        self.genomes
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenome(name.to_string()))
    }

    pub fn render(&self, frame: &ReferenceFrame) -> String {
        self.alphabet.render(frame, " ")
    }

    pub fn names(&self) -> Vec<&str> {
        self.genomes.iter().map(|g| g.name.as_str()).collect()
    }
}

pub fn parse_genomes(text: &str) -> Result<GenomeSet, ParseError> {
    let err = |line, message: String| ParseError { line, message };
    let mut rows: Vec<(usize, String, Vec<&str>)> = Vec::new();
    let mut names = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let Some((name, rest)) = body.split_once(':') else {
            return Err(err(line, "expected `NAME: region region ...`".into()));
        };
        let name = name.trim();
        if name.is_empty() {
            return Err(err(line, "genome name is empty".into()));
        }
        if !names.insert(name.to_string()) {
            return Err(err(line, format!("genome `{name}` is defined twice")));
        }
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(err(line, format!("genome `{name}` has no regions")));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = tokens.iter().find(|t| !seen.insert(**t)) {
            return Err(err(
                line,
                format!("region `{dup}` appears twice in `{name}`"),
            ));
        }
        rows.push((line, name.to_string(), tokens));
    }

    let alphabet = RegionAlphabet::from_tokens(rows.iter().flat_map(|r| r.2.iter().copied()))
        .map_err(|e| err(0, e.to_string()))?;
    let genomes = rows
        .into_iter()
        .map(|(line, name, tokens)| {
            let frame = alphabet
                .frame(&tokens)
                .map_err(|e| err(line, e.to_string()))?;
            Ok(NamedGenome {
                genome: canonicalize(&frame),
                name,
                frame,
                line,
            })
        })
        .collect::<Result<Vec<_>, ParseError>>()?;
    Ok(GenomeSet { alphabet, genomes })
}

pub fn read_genome_file(path: &Path) -> Result<GenomeSet> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Input {
        path: path.to_path_buf(),
        source,
    })?;
    parse_genomes(&text).map_err(|source| Error::Parse {
        path: path.to_path_buf(),
        source,
    })
}
