//! The reduction from PARTITION to balanced sorting, and exact solvers for
//! small instances of both problems.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::error::{invalid, Error, Result};
use crate::pperm::PartialPerm;

/// A multiset of positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionInstance {
    values: Vec<u64>,
}

impl PartitionInstance {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.contains(&0) {
            return Err(invalid("partition values must be positive"));
        }
        Ok(PartitionInstance { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }
}

/// Does some `t_m . sigma . t_n` with `len(t_m) = len(t_n)` and total
/// length at most `k` preserve order?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedSortInstance {
    pub sigma: PartialPerm,
    pub k: usize,
}

/// Largest `m` or `n` [`solve_balancedsort`] accepts.
pub const BALANCED_MAX_DEGREE: usize = 12;
/// Largest budget [`solve_balancedsort`] accepts.
pub const BALANCED_MAX_BUDGET: usize = 10;

/// Element `j` becomes the swapped pair `p_j <-> q_j` with `a_j` unused
/// points between them, so the pairs nest nowhere and each costs exactly
/// `a_j` inversions to untangle.
pub fn reduce_partition(a: &PartitionInstance) -> Result<BalancedSortInstance> {
    if a.values.is_empty() {
        return Err(invalid("partition instance is empty"));
    }
    let k = a.sum() as usize;
    let m = a.values.len() + k;
    if m > crate::pperm::MAX_DEGREE {
        return Err(Error::Capacity {
            what: "reduced permutation size",
            requested: m,
            limit: crate::pperm::MAX_DEGREE,
        });
    }
    let mut pairs = Vec::with_capacity(2 * a.values.len());
    let mut before = 0;
    for (j, &aj) in a.values.iter().enumerate() {
        let p = j + 1 + before;
        let q = p + aj as usize;
        pairs.push((p, q));
        pairs.push((q, p));
        before += aj as usize;
    }
    Ok(BalancedSortInstance {
        sigma: PartialPerm::from_pairs(m, m, &pairs)?,
        k,
    })
}

/// Which adjacent transpositions count as inversions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum InversionModel {
    /// All of `T_n`, including the wraparound `(1, n)`.
    #[default]
    Cyclic,
    /// Only `(i, i+1)` for `i < n`.
    Linear,
}

impl InversionModel {
    fn swaps(self, n: usize) -> usize {
        match (self, n) {
            (_, 0 | 1) => 0,
            (_, 2) => 1,
            (InversionModel::Cyclic, _) => n,
            (InversionModel::Linear, _) => n - 1,
        }
    }
}

/// Every permutation of `1..=n` within `radius` swaps, as (images, length)
/// in BFS order.
fn ball(n: usize, radius: usize, model: InversionModel) -> Vec<(Vec<u8>, usize)> {
    let start: Vec<u8> = (1..=n as u8).collect();
    let swaps = model.swaps(n);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(start.clone());
    let mut out = vec![(start, 0)];
    let mut head = 0;
    while head < out.len() {
        let (p, d) = out[head].clone();
        head += 1;
        if d == radius {
            continue;
        }
        for i in 0..swaps {
            let mut q = p.clone();
            q.swap(i, (i + 1) % n);
            if seen.insert(q.clone()) {
                out.push((q, d + 1));
            }
        }
    }
    out
}

/// Can a word of exactly `len` letters on a side of size `size` evaluate to
/// a permutation whose shortest words, by parity, are `best`?
fn reaches(size: usize, model: InversionModel, best: [usize; 2], len: usize) -> bool {
    match (size, model) {
        // The lone inversion on one point is the identity.
        (1, InversionModel::Cyclic) => best[0] == 0,
        (1, InversionModel::Linear) => best[0] == 0 && len == 0,
        _ => best[len % 2] <= len,
    }
}

/// Exact decision over the full inversion set.
pub fn solve_balancedsort(inst: &BalancedSortInstance) -> Result<bool> {
    solve_balancedsort_with(inst, InversionModel::Cyclic)
}

/// Exact decision by meet in the middle.
///
/// Every inversion is a transposition, so a word of exactly `L` letters
/// reaches precisely the permutations of length at most `L` and sign
/// `(-1)^L`. Balls of radius `k/2` on both sides are therefore enough, and
/// only the shortest left element per target sequence and parity matters.
pub fn solve_balancedsort_with(inst: &BalancedSortInstance, model: InversionModel) -> Result<bool> {
    let (m, n) = (inst.sigma.source_size(), inst.sigma.target_size());
    for (what, v, limit) in [
        ("balanced sort source size", m, BALANCED_MAX_DEGREE),
        ("balanced sort target size", n, BALANCED_MAX_DEGREE),
        ("balanced sort budget", inst.k, BALANCED_MAX_BUDGET),
    ] {
        if v > limit {
            return Err(Error::Capacity {
                what,
                requested: v,
                limit,
            });
        }
    }
    if inst.sigma.is_order_preserving() {
        return Ok(true);
    }
    let radius = inst.k / 2;

    // Target sequence of g.sigma in source order -> shortest g by parity.
    let mut left: HashMap<Vec<u8>, [usize; 2]> = HashMap::new();
    for (g, d) in ball(m, radius, model) {
        let seq: Vec<u8> = g
            .iter()
            .filter_map(|&gi| inst.sigma.get(gi as usize).map(|t| t as u8))
            .collect();
        let best = left.entry(seq).or_insert([usize::MAX; 2]);
        best[d % 2] = best[d % 2].min(d);
    }
    let right = ball(n, radius, model);
    for (seq, best) in &left {
        for (h, dh) in &right {
            let ordered = seq
                .windows(2)
                .all(|w| h[w[0] as usize - 1] < h[w[1] as usize - 1]);
            if !ordered {
                continue;
            }
            let mut hbest = [usize::MAX; 2];
            hbest[dh % 2] = *dh;
            if (0..=radius)
                .any(|len| reaches(m, model, *best, len) && reaches(n, model, hbest, len))
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Largest multiset [`partition_brute`] scans.
pub const PARTITION_MAX_LEN: usize = 24;

/// An equal-sum split: `in_first[i]` says which side element `i` joins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSplit {
    pub in_first: Vec<bool>,
}

/// Exhaustive search for an equal-sum split.
pub fn partition_brute(a: &PartitionInstance) -> Result<Option<PartitionSplit>> {
    let len = a.values.len();
    if len > PARTITION_MAX_LEN {
        return Err(Error::Capacity {
            what: "partition size",
            requested: len,
            limit: PARTITION_MAX_LEN,
        });
    }
    let total = a.sum();
    if total % 2 == 1 {
        return Ok(None);
    }
    for mask in 0u32..(1 << len) {
        let s: u64 = (0..len)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| a.values[i])
            .sum();
        if 2 * s == total {
            return Ok(Some(PartitionSplit {
                in_first: (0..len).map(|i| mask >> i & 1 == 1).collect(),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(v: &[u64]) -> PartitionInstance {
        PartitionInstance::new(v.to_vec()).unwrap()
    }

    #[test]
    fn reduction_layout() {
        let b = reduce_partition(&inst(&[1, 1, 2, 3, 4])).unwrap();
        assert_eq!(b.sigma.source_size(), 16);
        assert_eq!(b.k, 11);
        let pairs: Vec<_> = b.sigma.pairs().collect();
        assert_eq!(
            pairs,
            [
                (1, 2),
                (2, 1),
                (3, 4),
                (4, 3),
                (5, 7),
                (7, 5),
                (8, 11),
                (11, 8),
                (12, 16),
                (16, 12)
            ]
        );
        assert_eq!(b.sigma.crossings().count(), 5);
        assert_eq!(b.sigma.inverse(), b.sigma);
    }

    #[test]
    fn small_reductions() {
        let b = reduce_partition(&inst(&[1])).unwrap();
        assert_eq!((b.sigma.source_size(), b.k), (2, 1));
        assert_eq!(b.sigma.pairs().collect::<Vec<_>>(), [(1, 2), (2, 1)]);
        let b = reduce_partition(&inst(&[2])).unwrap();
        assert_eq!((b.sigma.source_size(), b.k), (3, 2));
        assert_eq!(b.sigma.pairs().collect::<Vec<_>>(), [(1, 3), (3, 1)]);
        assert!(reduce_partition(&inst(&[])).is_err());
        assert!(PartitionInstance::new(vec![1, 0]).is_err());
    }

    #[test]
    fn balanced_examples() {
        assert!(solve_balancedsort(&reduce_partition(&inst(&[1, 1])).unwrap()).unwrap());
        assert!(!solve_balancedsort(&reduce_partition(&inst(&[1, 2])).unwrap()).unwrap());
        let id = BalancedSortInstance {
            sigma: PartialPerm::identity(5).unwrap(),
            k: 0,
        };
        assert!(solve_balancedsort(&id).unwrap());
        let big = reduce_partition(&inst(&[1, 1, 2, 3, 4])).unwrap();
        assert!(matches!(
            solve_balancedsort(&big),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn brute_examples() {
        let split = partition_brute(&inst(&[1, 1, 2])).unwrap().unwrap();
        let first: u64 = split
            .in_first
            .iter()
            .zip([1, 1, 2])
            .filter(|(b, _)| **b)
            .map(|(_, v)| v)
            .sum();
        assert_eq!(first, 2);
        assert!(partition_brute(&inst(&[1, 1, 2, 3, 4])).unwrap().is_none());
        assert!(partition_brute(&inst(&[])).unwrap().is_some());
        assert!(partition_brute(&inst(&[1; 25])).is_err());
    }

    #[test]
    fn linear_model_agrees_on_pairs_and_triples() {
        let mut cases: Vec<Vec<u64>> = Vec::new();
        for a in 1..=4u64 {
            for b in 1..=4u64 {
                cases.push(vec![a, b]);
            }
        }
        cases.extend([
            vec![1, 1, 2],
            vec![1, 2, 2],
            vec![2, 2, 2],
            vec![1, 1, 1],
            vec![3],
        ]);
        for v in cases {
            let p = inst(&v);
            let expect = partition_brute(&p).unwrap().is_some();
            let b = reduce_partition(&p).unwrap();
            assert_eq!(
                solve_balancedsort_with(&b, InversionModel::Linear).unwrap(),
                expect,
                "{v:?}"
            );
        }
    }

    #[test]
    fn wraparound_inversion_defeats_reduction() {
        // {2} has no equal split, but s_{3;3} on the left fixes sigma = (1 3)
        // and any right inversion pads the budget to 1 + 1.
        let p = inst(&[2]);
        assert!(partition_brute(&p).unwrap().is_none());
        let b = reduce_partition(&p).unwrap();
        assert!(solve_balancedsort(&b).unwrap());
        let fixed = PartialPerm::transposition(3, 1, 3)
            .unwrap()
            .compose(&b.sigma)
            .unwrap()
            .compose(&PartialPerm::transposition(3, 1, 2).unwrap())
            .unwrap();
        assert!(fixed.is_order_preserving());

        let p = inst(&[2, 4]);
        assert!(partition_brute(&p).unwrap().is_none());
        assert!(solve_balancedsort(&reduce_partition(&p).unwrap()).unwrap());
    }

    #[test]
    fn partitionable_instances_are_balanced_in_both_models() {
        for v in [
            vec![1, 1],
            vec![2, 2],
            vec![1, 1, 2],
            vec![1, 2, 3],
            vec![2, 1, 1, 2],
        ] {
            let b = reduce_partition(&inst(&v)).unwrap();
            assert!(solve_balancedsort(&b).unwrap(), "{v:?}");
            assert!(
                solve_balancedsort_with(&b, InversionModel::Linear).unwrap(),
                "{v:?}"
            );
        }
    }
}
