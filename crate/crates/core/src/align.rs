//! Region alignment: the fewest adjacent inversions, on the left of `sigma`
//! (first genome) and on the right (second genome), that make `sigma`
//! orientation preserving.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::algebra::{Generator, Word};
use crate::cayley::DClassGraph;
use crate::error::{invalid, Result};
use crate::genome::{Genome, ReferenceFrame};
use crate::pperm::{sigma_from_frames, PartialPerm};

/// One step of the search. Ordering is the tie-break order: every left
/// move sorts before every right move, then by index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Move {
    Left(u8),
    Right(u8),
}

/// Distinct indices `i` for which `s_{i;n}` is a non-trivial inversion.
fn inversion_indices(n: usize) -> core::ops::RangeInclusive<usize> {
    let top = match n {
        0 | 1 => 0,
        2 => 1,
        _ => n,
    };
    1..=top
}

fn moves(m: usize, n: usize) -> Vec<Move> {
    inversion_indices(m)
        .map(|i| Move::Left(i as u8))
        .chain(inversion_indices(n).map(|j| Move::Right(j as u8)))
        .collect()
}

fn step(p: &PartialPerm, mv: Move) -> PartialPerm {
    match mv {
        Move::Left(i) => {
            let i = i as usize;
            p.swap_sources(i, i % p.source_size() + 1)
        }
        Move::Right(j) => {
            let j = j as usize;
            p.swap_targets(j, j % p.target_size() + 1)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlignmentSolution {
    pub cost: usize,
    /// Inversions acting on the first genome, as a product on the left.
    pub t_m: Word,
    /// Inversions acting on the second genome, as a product on the right.
    pub t_n: Word,
    /// `t_m . sigma . t_n`, orientation preserving.
    pub witness: PartialPerm,
}

impl AlignmentSolution {
    fn trivial(sigma: &PartialPerm) -> Self {
        AlignmentSolution {
            cost: 0,
            t_m: Word::empty(),
            t_n: Word::empty(),
            witness: *sigma,
        }
    }
}

struct Node {
    state: PartialPerm,
    parent: u32,
    mv: Option<Move>,
    origin: u32,
}

/// Multi-source BFS. Returns the index of the source the optimum grew from
/// and the solution for that source.
fn search(sources: &[PartialPerm]) -> (usize, AlignmentSolution) {
    let first = &sources[0];
    let (m, n) = (first.source_size(), first.target_size());
    if first.rank() <= 1 {
        return (0, AlignmentSolution::trivial(first));
    }
    for (k, s) in sources.iter().enumerate() {
        if s.is_orientation_preserving() {
            return (k, AlignmentSolution::trivial(s));
        }
    }

    let moves = moves(m, n);
    let mut seen: HashSet<PartialPerm> = HashSet::new();
    let mut nodes: Vec<Node> = Vec::new();
    for (k, s) in sources.iter().enumerate() {
        if seen.insert(*s) {
            nodes.push(Node {
                state: *s,
                parent: u32::MAX,
                mv: None,
                origin: k as u32,
            });
        }
    }
    let mut head = 0;
    let goal = loop {
        let cur = nodes[head].state;
        let origin = nodes[head].origin;
        let mut found = None;
        for &mv in &moves {
            let next = step(&cur, mv);
            if seen.insert(next) {
                nodes.push(Node {
                    state: next,
                    parent: head as u32,
                    mv: Some(mv),
                    origin,
                });
                if next.is_orientation_preserving() {
                    found = Some(nodes.len() - 1);
                    break;
                }
            }
        }
        if let Some(g) = found {
            break g;
        }
        head += 1;
    };

    let mut path = Vec::new();
    let mut at = goal;
    while let Some(mv) = nodes[at].mv {
        path.push(mv);
        at = nodes[at].parent as usize;
    }
    path.reverse();
    let origin = nodes[goal].origin as usize;

    // Left moves were applied one after another on the left, so the product
    // reads them back to front.
    let mut left: Vec<Generator> = path
        .iter()
        .filter_map(|mv| match *mv {
            Move::Left(i) => Some(Generator::Inv {
                i: i as usize,
                n: m,
            }),
            Move::Right(_) => None,
        })
        .collect();
    left.reverse();
    let right: Vec<Generator> = path
        .iter()
        .filter_map(|mv| match *mv {
            Move::Right(j) => Some(Generator::Inv { i: j as usize, n }),
            Move::Left(_) => None,
        })
        .collect();
    let solution = AlignmentSolution {
        cost: path.len(),
        t_m: Word::from_vec_unchecked(left),
        t_n: Word::from_vec_unchecked(right),
        witness: nodes[goal].state,
    };
    (origin, solution)
}

/// Minimum alignment of a single `sigma`, found by BFS over `I_{m,n}`.
///
/// Inversions preserve rank, so the search never leaves the D-class of
/// `sigma` and always terminates.
pub fn solve_pair(sigma: &PartialPerm) -> AlignmentSolution {
    search(core::slice::from_ref(sigma)).1
}

/// The same minimum computed on a prebuilt D-class graph.
///
/// `delta` must be the rank-`r` class of `I_N` with left degree `m`, where
/// `sigma` (or its inverse, when it has more sources than targets) lies in
/// `I_{m,N}` with rank `r`.
pub fn solve_pair_via_cayley(sigma: &PartialPerm, delta: &DClassGraph) -> Result<usize> {
    let sigma = if sigma.source_size() > sigma.target_size() {
        sigma.inverse()
    } else {
        *sigma
    };
    let (m, n, r) = (sigma.source_size(), sigma.target_size(), sigma.rank());
    if delta.n() != n || delta.m() != m || delta.rank() != r {
        return Err(invalid("D-class graph parameters do not match sigma"));
    }
    if r <= 1 {
        return Ok(0);
    }
    let target = |v: u32| {
        delta.vertices()[v as usize]
            .restrict(m, n)
            .map(|p| p.is_orientation_preserving())
            .unwrap_or(false)
    };
    let start = delta
        .vertex_index(&sigma.embed(n)?)
        .ok_or_else(|| invalid("sigma is not a vertex of the D-class graph"))?;
    if target(start) {
        return Ok(0);
    }
    let mut dist = vec![u32::MAX; delta.vertices().len()];
    dist[start as usize] = 0;
    let mut queue = alloc::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for e in delta.out_edges(v) {
            let w = e.target;
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = dist[v as usize] + 1;
                if target(w) {
                    return Ok(dist[w as usize] as usize);
                }
                queue.push_back(w);
            }
        }
    }
    Err(invalid("no orientation preserving element reachable"))
}

/// Result of [`mu_oracle`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleOutcome {
    Exact(usize),
    Exceeded,
}

/// Brute-force reference for the alignment cost, by iterative deepening
/// over raw image arrays. Deliberately shares no code with the BFS engines.
pub fn mu_oracle(sigma: &PartialPerm, depth_cap: usize) -> OracleOutcome {
    let (m, n) = (sigma.source_size(), sigma.target_size());
    let mut img: Vec<usize> = (1..=m).map(|i| sigma.get(i).unwrap_or(0)).collect();

    fn cyclic_ok(img: &[usize]) -> bool {
        let seq: Vec<usize> = img.iter().copied().filter(|&v| v != 0).collect();
        if seq.len() <= 2 {
            return true;
        }
        let drops = (0..seq.len())
            .filter(|&k| seq[k] > seq[(k + 1) % seq.len()])
            .count();
        drops <= 1
    }

    // Left and right multiplications commute, so every sequence can be
    // reordered with all left swaps first.
    fn dfs(img: &mut [usize], n: usize, depth: usize, last: Option<(bool, usize)>) -> bool {
        if cyclic_ok(img) {
            return true;
        }
        if depth == 0 {
            return false;
        }
        let m = img.len();
        let in_right = matches!(last, Some((true, _)));
        if !in_right && m >= 2 {
            let top = if m == 2 { 1 } else { m };
            for a in 0..top {
                if last == Some((false, a)) {
                    continue;
                }
                let b = (a + 1) % m;
                img.swap(a, b);
                let hit = dfs(img, n, depth - 1, Some((false, a)));
                img.swap(a, b);
                if hit {
                    return true;
                }
            }
        }
        if n >= 2 {
            let top = if n == 2 { 1 } else { n };
            for a in 1..=top {
                if last == Some((true, a)) {
                    continue;
                }
                let b = a % n + 1;
                let swap = |img: &mut [usize]| {
                    for v in img.iter_mut() {
                        if *v == a {
                            *v = b;
                        } else if *v == b {
                            *v = a;
                        }
                    }
                };
                swap(img);
                let hit = dfs(img, n, depth - 1, Some((true, a)));
                swap(img);
                if hit {
                    return true;
                }
            }
        }
        false
    }

    for depth in 0..=depth_cap {
        if dfs(&mut img, n, depth, None) {
            return OracleOutcome::Exact(depth);
        }
    }
    OracleOutcome::Exceeded
}

/// Which reference pairs to try.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PairMode {
    /// Every frame of the first genome against every frame of the second.
    #[default]
    All,
    /// Canonical first frame against the canonical second frame and its
    /// reversal. Rotations on either side, and reflecting both sides at
    /// once, leave the cost unchanged.
    Fast,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferencePair {
    pub g1: ReferenceFrame,
    pub g2: ReferenceFrame,
}

/// The reference pairs `mode` considers, in search order.
pub fn reference_pairs(g1: &Genome, g2: &Genome, mode: PairMode) -> Vec<ReferencePair> {
    match mode {
        PairMode::All => {
            let f2 = g2.frames();
            g1.frames()
                .into_iter()
                .flat_map(|a| {
                    f2.iter().map(move |b| ReferencePair {
                        g1: a.clone(),
                        g2: b.clone(),
                    })
                })
                .collect()
        }
        PairMode::Fast => {
            let c1 = g1.canonical().clone();
            let c2 = g2.canonical().clone();
            let rev = c2.reversed();
            vec![
                ReferencePair {
                    g1: c1.clone(),
                    g2: c2,
                },
                ReferencePair { g1: c1, g2: rev },
            ]
        }
    }
}

/// The least alignment cost over reference pairs, and a pair attaining it.
pub fn min_over_reference_pairs(
    g1: &Genome,
    g2: &Genome,
    mode: PairMode,
) -> Result<(ReferencePair, AlignmentSolution)> {
    let pairs = reference_pairs(g1, g2, mode);
    let sigmas = pairs
        .iter()
        .map(|p| sigma_from_frames(&p.g1, &p.g2))
        .collect::<Result<Vec<_>>>()?;
    let (k, solution) = search(&sigmas);
    Ok((pairs[k].clone(), solution))
}
