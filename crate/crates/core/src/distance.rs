//! Inversion/deletion distances between genomes and the ancestor that
//! realises the undirected one.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::algebra::{apply_to_frame, Generator, Word};
use crate::align::{min_over_reference_pairs, AlignmentSolution, PairMode, ReferencePair};
use crate::error::{invalid, Error, Result};
use crate::genome::{canonicalize, region_set_ops, Genome, ReferenceFrame, Region};
use crate::pperm::sigma_from_frames;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub total: usize,
    /// Regions present in exactly one genome.
    pub deletions: usize,
    pub mu: usize,
    pub best_pair: ReferencePair,
    pub solution: AlignmentSolution,
}

/// Fewest deletions plus inversions separating two genomes from a common
/// ancestor, trying every reference pair.
pub fn mrca_distance(g1: &Genome, g2: &Genome) -> Result<DistanceResult> {
    mrca_distance_with(g1, g2, PairMode::All)
}

pub fn mrca_distance_with(g1: &Genome, g2: &Genome, mode: PairMode) -> Result<DistanceResult> {
    let deletions = region_set_ops(g1, g2).symmetric_difference.len();
    let (best_pair, solution) = min_over_reference_pairs(g1, g2, mode)?;
    Ok(DistanceResult {
        total: deletions + solution.cost,
        deletions,
        mu: solution.cost,
        best_pair,
        solution,
    })
}

/// Fewest deletions then inversions turning `g1` into `g2`.
///
/// Deleting single regions keeps the survivors in cyclic order, so every
/// such history passes through `g1` restricted to the regions of `g2`; the
/// remaining inversions are found by BFS over its frames.
pub fn directed_distance(g1: &Genome, g2: &Genome) -> Result<usize> {
    let r1 = g1.region_set();
    let r2 = g2.region_set();
    let missing: Vec<Region> = r2.difference(&r1).copied().collect();
    if !missing.is_empty() {
        return Err(Error::NoPath(format!(
            "{} region(s) of the second genome are absent from the first; deletions cannot create them",
            missing.len()
        )));
    }
    let deletions = r1.len() - r2.len();
    let start = g1
        .canonical()
        .retain(|r| r2.contains(&r))
        .expect("second genome is nonempty");
    let n = start.len();

    let mut seen: HashSet<Vec<Region>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.regions().to_vec());
    queue.push_back((start.regions().to_vec(), 0usize));
    while let Some((word, d)) = queue.pop_front() {
        let frame = ReferenceFrame::from_vec_unchecked(word.clone());
        if g2.contains_frame(&frame) {
            return Ok(deletions + d);
        }
        let swaps = match n {
            0 | 1 => 0,
            2 => 1,
            _ => n,
        };
        for i in 0..swaps {
            let mut next = word.clone();
            next.swap(i, (i + 1) % n);
            if seen.insert(next.clone()) {
                queue.push_back((next, d + 1));
            }
        }
    }
    Err(Error::NoPath(String::from(
        "frames exhausted without reaching the target",
    )))
}

/// A common ancestor and the events leading from it to each genome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AncestorScenario {
    pub ancestor: Genome,
    /// The frame the event words act on.
    pub ancestor_frame: ReferenceFrame,
    pub events_to_g1: Word,
    pub events_to_g2: Word,
    /// `U_0, ..., U_h`: second-genome-only regions before the first shared
    /// region and after each shared region.
    pub gap_sets: Vec<Vec<Region>>,
}

/// Result of merging two aligned frames.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapInsertion {
    pub ancestor: ReferenceFrame,
    pub gap_sets: Vec<Vec<Region>>,
    /// How far `g2` was rotated left so that it ends with the last shared
    /// region.
    pub rotation: usize,
}

/// Merges two frames whose shared regions are in the same cyclic order.
///
/// The second frame is rotated to end with the last shared region (in the
/// first frame's order), then each of its gaps is inserted into the first
/// frame after that gap's own first-frame regions.
pub fn insert_gaps(g1: &ReferenceFrame, g2: &ReferenceFrame) -> Result<GapInsertion> {
    if !sigma_from_frames(g1, g2)?.is_orientation_preserving() {
        return Err(invalid("shared regions are not in the same cyclic order"));
    }
    let in2 = g2.region_set();
    let in1 = g1.region_set();
    let shared: Vec<Region> = g1
        .regions()
        .iter()
        .copied()
        .filter(|r| in2.contains(r))
        .collect();

    let rotation = shared
        .last()
        .map_or(0, |&r| g2.position(r).unwrap() % g2.len());
    let g2 = g2.rotate_left(rotation);

    let mut gap_sets: Vec<Vec<Region>> = vec![Vec::new()];
    for &r in g2.regions() {
        if in1.contains(&r) {
            gap_sets.push(Vec::new());
        } else {
            gap_sets.last_mut().unwrap().push(r);
        }
    }

    let mut word: Vec<Region> = gap_sets[0].clone();
    let mut k = 0;
    for &r in g1.regions() {
        if in2.contains(&r) {
            if k > 0 {
                word.extend_from_slice(&gap_sets[k]);
            }
            k += 1;
        }
        word.push(r);
    }
    if k > 0 {
        word.extend_from_slice(&gap_sets[k]);
    }
    Ok(GapInsertion {
        ancestor: ReferenceFrame::new(word)?,
        gap_sets,
        rotation,
    })
}

/// Single-region deletions, highest position first, removing every region
/// of `frame` that `keep` rejects.
fn deletions_outside(frame: &ReferenceFrame, keep: &BTreeSet<Region>) -> Vec<Generator> {
    let mut size = frame.len();
    let mut out = Vec::new();
    for (p, r) in frame.regions().iter().enumerate().rev() {
        if !keep.contains(r) {
            out.push(Generator::Del { i: p + 1, n: size });
            size -= 1;
        }
    }
    out
}

/// Builds the ancestor from an optimal alignment, following the
/// constructive argument: align both frames, insert the second genome's
/// private regions into the gaps of the first, then read off deletions
/// and the undone inversions on each side.
pub fn construct_ancestor(g1: &Genome, g2: &Genome) -> Result<AncestorScenario> {
    let d = mrca_distance(g1, g2)?;
    let ReferencePair { g1: f1, g2: f2 } = &d.best_pair;
    let t_m = &d.solution.t_m;
    let t_n = &d.solution.t_n;

    let g1p = apply_to_frame(f1, &t_m.reversed())?;
    let g2p = apply_to_frame(f2, t_n)?;
    let merged = insert_gaps(&g1p, &g2p)?;

    let k = merged.rotation;
    let undo2: Vec<Generator> = t_n
        .reversed()
        .letters()
        .iter()
        .map(|g| match *g {
            Generator::Inv { i, n } => Generator::Inv {
                i: (i - 1 + n - k % n) % n + 1,
                n,
            },
            other => other,
        })
        .collect();

    let r1 = g1.region_set();
    let r2 = g2.region_set();
    let mut to1 = deletions_outside(&merged.ancestor, &r1);
    to1.extend_from_slice(t_m.letters());
    let mut to2 = deletions_outside(&merged.ancestor, &r2);
    to2.extend(undo2);

    Ok(AncestorScenario {
        ancestor: canonicalize(&merged.ancestor),
        ancestor_frame: merged.ancestor,
        events_to_g1: Word::new(to1)?,
        events_to_g2: Word::new(to2)?,
        gap_sets: merged.gap_sets,
    })
}

/// Outcome of replaying a scenario.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioCheck {
    pub reaches_g1: bool,
    pub reaches_g2: bool,
    pub event_count: usize,
    pub expected_count: usize,
    /// Human-readable description of each failure.
    pub problems: Vec<String>,
}

impl ScenarioCheck {
    pub fn is_ok(&self) -> bool {
        self.problems.is_empty()
    }
}

pub fn verify_scenario(s: &AncestorScenario, g1: &Genome, g2: &Genome) -> ScenarioCheck {
    let mut problems = Vec::new();
    let mut reaches = |w: &Word, target: &Genome, side: &str| -> bool {
        match apply_to_frame(&s.ancestor_frame, w) {
            Ok(f) if target.contains_frame(&f) => true,
            Ok(f) => {
                problems.push(format!(
                    "branch {side}: reached {:?}, expected a frame of {:?}",
                    f,
                    target.canonical()
                ));
                false
            }
            Err(e) => {
                problems.push(format!("branch {side}: {e}"));
                false
            }
        }
    };
    let reaches_g1 = reaches(&s.events_to_g1, g1, "1");
    let reaches_g2 = reaches(&s.events_to_g2, g2, "2");
    if canonicalize(&s.ancestor_frame) != s.ancestor {
        problems.push(String::from(
            "ancestor frame is not a frame of the ancestor",
        ));
    }
    let event_count = s.events_to_g1.len() + s.events_to_g2.len();
    let expected_count = match mrca_distance(g1, g2) {
        Ok(d) => d.total,
        Err(e) => {
            problems.push(format!("distance failed: {e}"));
            usize::MAX
        }
    };
    if expected_count != usize::MAX && event_count != expected_count {
        problems.push(format!(
            "{event_count} events, distance is {expected_count}"
        ));
    }
    ScenarioCheck {
        reaches_g1,
        reaches_g2,
        event_count,
        expected_count,
        problems,
    }
}

/// All-pairs distances, in input order.
pub fn distance_matrix(genomes: &[Genome], mode: PairMode) -> Result<Vec<Vec<usize>>> {
    if genomes.len() < 2 {
        return Err(invalid("distance matrix needs at least two genomes"));
    }
    let k = genomes.len();
    let mut out = vec![vec![0; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let d = mrca_distance_with(&genomes[i], &genomes[j], mode)?.total;
            out[i][j] = d;
            out[j][i] = d;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genome::RegionAlphabet;

    fn g(al: &RegionAlphabet, s: &str) -> Genome {
        canonicalize(&al.frame_from_chars(s).unwrap())
    }

    #[test]
    fn mrca_examples() {
        let al = RegionAlphabet::letters(12);
        let abc = g(&al, "abc");
        assert_eq!(mrca_distance(&abc, &abc).unwrap().total, 0);
        let d = mrca_distance(&abc, &g(&al, "abd")).unwrap();
        assert_eq!((d.total, d.deletions, d.mu), (2, 2, 0));
    }

    #[test]
    fn mostly_disjoint_pair() {
        let al = RegionAlphabet::letters(12);
        let g1 = g(&al, "bcdegkhl");
        let g2 = g(&al, "aebfhijk");
        let d = mrca_distance(&g1, &g2).unwrap();
        assert_eq!(d.deletions, 8);
        assert!(d.total <= 10);
        assert_eq!(d.total, d.deletions + d.mu);
        let s = construct_ancestor(&g1, &g2).unwrap();
        assert!(verify_scenario(&s, &g1, &g2).is_ok());
    }

    #[test]
    fn directed_examples() {
        let al = RegionAlphabet::letters(4);
        let abcd = g(&al, "abcd");
        assert_eq!(directed_distance(&abcd, &g(&al, "abc")).unwrap(), 1);
        assert_eq!(directed_distance(&abcd, &abcd).unwrap(), 0);
        assert_eq!(directed_distance(&abcd, &g(&al, "bacd")).unwrap(), 1);
        assert!(matches!(
            directed_distance(&g(&al, "abc"), &g(&al, "abd")),
            Err(Error::NoPath(_))
        ));
    }

    #[test]
    fn gap_insertion_example() {
        let al = RegionAlphabet::letters(12);
        let g1p = al.frame_from_chars("aefbgcdh").unwrap();
        let g2p = al.frame_from_chars("iajkblcd").unwrap();
        let m = insert_gaps(&g1p, &g2p).unwrap();
        assert_eq!(al.render_compact(&m.ancestor), "iaefjkbglcdh");
        let names: Vec<String> = m
            .gap_sets
            .iter()
            .map(|u| u.iter().map(|&r| al.name(r)).collect())
            .collect();
        assert_eq!(names, ["i", "jk", "l", "", ""]);
        assert_eq!(m.rotation, 0);
    }

    #[test]
    fn gap_example_scenario_verifies() {
        let al = RegionAlphabet::letters(12);
        let g1 = g(&al, "aefbgcdh");
        let g2 = g(&al, "iajkblcd");
        let s = construct_ancestor(&g1, &g2).unwrap();
        let check = verify_scenario(&s, &g1, &g2);
        assert!(check.is_ok(), "{:?}", check.problems);
        assert_eq!(check.event_count, 8);
    }

    #[test]
    fn identical_genomes_need_no_events() {
        let al = RegionAlphabet::letters(5);
        let x = g(&al, "acebd");
        let s = construct_ancestor(&x, &x).unwrap();
        assert_eq!(s.ancestor, x);
        assert!(s.events_to_g1.is_empty() && s.events_to_g2.is_empty());
        assert!(verify_scenario(&s, &x, &x).is_ok());
    }

    #[test]
    fn dropped_event_fails_verification() {
        let al = RegionAlphabet::letters(7);
        let g1 = g(&al, "abcdef");
        let g2 = g(&al, "acbedg");
        let mut s = construct_ancestor(&g1, &g2).unwrap();
        assert!(verify_scenario(&s, &g1, &g2).is_ok());
        let mut letters = s.events_to_g1.letters().to_vec();
        letters.pop();
        s.events_to_g1 = Word::new(letters).unwrap();
        assert!(!verify_scenario(&s, &g1, &g2).is_ok());
    }

    #[test]
    fn rotated_second_frame_maps_inversions() {
        let al = RegionAlphabet::letters(7);
        for (a, b) in [
            ("abcdefg", "dcbaefg"),
            ("abcde", "cadbe"),
            ("abcdef", "fbdace"),
        ] {
            let g1 = g(&al, a);
            let g2 = g(&al, b);
            let s = construct_ancestor(&g1, &g2).unwrap();
            assert!(verify_scenario(&s, &g1, &g2).is_ok(), "{a} {b}");
            let s = construct_ancestor(&g2, &g1).unwrap();
            assert!(verify_scenario(&s, &g2, &g1).is_ok(), "{b} {a}");
        }
    }

    #[test]
    fn disjoint_genomes() {
        let al = RegionAlphabet::letters(6);
        let g1 = g(&al, "abc");
        let g2 = g(&al, "def");
        assert_eq!(mrca_distance(&g1, &g2).unwrap().total, 6);
        let s = construct_ancestor(&g1, &g2).unwrap();
        assert!(verify_scenario(&s, &g1, &g2).is_ok());
    }

    #[test]
    fn matrix_shape() {
        let al = RegionAlphabet::letters(5);
        let gs = [g(&al, "abcde"), g(&al, "abcde")];
        assert_eq!(
            distance_matrix(&gs, PairMode::All).unwrap(),
            vec![vec![0, 0], vec![0, 0]]
        );
        let gs = [g(&al, "abcde"), g(&al, "badce"), g(&al, "abd")];
        let m = distance_matrix(&gs, PairMode::All).unwrap();
        for (i, row) in m.iter().enumerate() {
            assert_eq!(row[i], 0);
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, m[j][i]);
            }
        }
        assert!(distance_matrix(&gs[..1], PairMode::All).is_err());
    }
}
