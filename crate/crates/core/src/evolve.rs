//! Forward simulation of two lineages from a shared ancestor: single-region
//! deletions followed by adjacent inversions on each branch.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{apply_to_frame, Generator, Word};
use crate::error::{invalid, Error, Result};
use crate::genome::{canonicalize, Genome, ReferenceFrame, Region};
use crate::pperm::MAX_DEGREE;

/// Uniformly random arrangement of regions `0..n`.
pub fn random_genome(n: usize, seed: u64) -> Result<Genome> {
    if n == 0 {
        return Err(invalid("genome needs at least one region"));
    }
    if n > MAX_DEGREE {
        return Err(Error::Capacity {
            what: "genome size",
            requested: n,
            limit: MAX_DEGREE,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word: Vec<Region> = (0..n as u16).map(Region).collect();
    word.shuffle(&mut rng);
    Ok(canonicalize(&ReferenceFrame::new(word)?))
}

/// Event counts for one branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct BranchEvents {
    pub deletions: usize,
    pub inversions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvolutionScenario {
    pub ancestor: ReferenceFrame,
    pub events_1: Word,
    pub events_2: Word,
    pub g1: Genome,
    pub g2: Genome,
    pub seed: u64,
}

impl EvolutionScenario {
    pub fn event_count(&self) -> usize {
        self.events_1.len() + self.events_2.len()
    }

    /// Replays both branches and compares with the stored genomes.
    pub fn replays(&self) -> bool {
        matches!(replay(&self.ancestor, &self.events_1), Ok(g) if g == self.g1)
            && matches!(replay(&self.ancestor, &self.events_2), Ok(g) if g == self.g2)
    }
}

/// The genome obtained by applying `events` to `ancestor`.
pub fn replay(ancestor: &ReferenceFrame, events: &Word) -> Result<Genome> {
    Ok(canonicalize(&apply_to_frame(ancestor, events)?))
}

fn branch<R: Rng>(n: usize, ev: BranchEvents, rng: &mut R) -> Result<Word> {
    let mut letters = Vec::with_capacity(ev.deletions + ev.inversions);
    let mut size = n;
    for _ in 0..ev.deletions {
        letters.push(Generator::Del {
            i: rng.gen_range(1..=size),
            n: size,
        });
        size -= 1;
    }
    for _ in 0..ev.inversions {
        letters.push(Generator::Inv {
            i: rng.gen_range(1..=size),
            n: size,
        });
    }
    Word::new(letters)
}

/// Evolves the canonical frame of `ancestor` along two branches.
pub fn simulate(
    ancestor: &Genome,
    branch_1: BranchEvents,
    branch_2: BranchEvents,
    seed: u64,
) -> Result<EvolutionScenario> {
    let n = ancestor.len();
    if branch_1.deletions >= n || branch_2.deletions >= n {
        return Err(invalid("a branch would delete every region"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frame = ancestor.canonical().clone();
    let events_1 = branch(n, branch_1, &mut rng)?;
    let events_2 = branch(n, branch_2, &mut rng)?;
    Ok(EvolutionScenario {
        g1: replay(&frame, &events_1)?,
        g2: replay(&frame, &events_2)?,
        ancestor: frame,
        events_1,
        events_2,
        seed,
    })
}
