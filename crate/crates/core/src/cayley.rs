//! Enumeration of the symmetric inverse monoid `I_n`, its left and right
//! Cayley graphs, their union and the per-rank D-class subgraphs.
//!
//! Elements are discovered breadth first from the identity by right
//! multiplication, trying generators in a fixed order, so indices are
//! reproducible across runs and machines.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::algebra::Generator;
use crate::error::{invalid, Error, Result};
use crate::pperm::PartialPerm;

/// Largest `n` for which `I_n` is enumerated.
pub const MAX_ENUMERATION_DEGREE: usize = 8;

/// `sum_r C(n,r)^2 r!`, the order of `I_n`.
pub fn expected_monoid_size(n: usize) -> u64 {
    (0..=n as u64)
        .map(|r| {
            let c = binomial(n as u64, r);
            c * c * (1..=r).product::<u64>()
        })
        .sum()
}

/// Size of the rank-`r` D-class of `I_n`.
pub fn expected_dclass_size(n: usize, r: usize) -> u64 {
    let c = binomial(n as u64, r as u64);
    c * c * (1..=r as u64).product::<u64>()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("monoid degree must be positive"));
    }
    if n > MAX_ENUMERATION_DEGREE {
        return Err(Error::Capacity {
            what: "monoid degree",
            requested: n,
            limit: MAX_ENUMERATION_DEGREE,
        });
    }
    Ok(())
}

/// The generating set `X_n = T_n + id_{1..n-1}`, viewed inside `I_N` for
/// some `N >= n`.
///
/// Duplicate elements (`s_{1;2} = s_{2;2}`) are kept once; the first symbol
/// wins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSet {
    n: usize,
    carrier: usize,
    elements: Vec<PartialPerm>,
    symbols: Vec<Option<Generator>>,
}

impl GenSet {
    pub fn new(n: usize) -> Result<Self> {
        Self::embedded(n, n)
    }

    /// `X_n` embedded into `I_carrier`: the embedded elements are defined
    /// only on `{1..n}`.
    pub fn embedded(n: usize, carrier: usize) -> Result<Self> {
        check_degree(carrier)?;
        if n == 0 || n > carrier {
            return Err(invalid("generating set larger than its carrier"));
        }
        let mut elements: Vec<PartialPerm> = Vec::new();
        let mut symbols = Vec::new();
        for i in 1..=n {
            let g = Generator::Inv { i, n };
            let p = g.eval()?.embed(carrier)?;
            if !elements.contains(&p) {
                elements.push(p);
                symbols.push(Some(g));
            }
        }
        elements.push(PartialPerm::partial_identity(n, n - 1)?.embed(carrier)?);
        symbols.push(None);
        Ok(GenSet {
            n,
            carrier,
            elements,
            symbols,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PartialPerm] {
        &self.elements
    }

    /// The inversion a generator stands for; `None` for the partial
    /// identity.
    pub fn symbol(&self, k: usize) -> Option<Generator> {
        self.symbols[k]
    }
}

/// All of `I_n` with its left and right Cayley edges for `X_n`.
#[derive(Clone, Debug)]
pub struct MonoidEnumeration {
    gens: GenSet,
    elements: Vec<PartialPerm>,
    index: HashMap<u32, u32>,
    right: Vec<u32>,
    left: Vec<u32>,
}

/// Breadth-first closure of the identity under right multiplication by
/// `X_n`. Left edges are filled in once every element has an index.
pub fn enumerate_monoid(n: usize) -> Result<MonoidEnumeration> {
    check_degree(n)?;
    let gens = GenSet::new(n)?;
    let k = gens.len();
    let expected = expected_monoid_size(n) as usize;
    let mut elements = Vec::with_capacity(expected);
    let mut index: HashMap<u32, u32> = HashMap::with_capacity(expected);
    let mut right = Vec::with_capacity(expected * k);

    let id = PartialPerm::identity(n)?;
    index.insert(id.pack(), 0);
    elements.push(id);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head];
        for g in gens.elements() {
            let y = x.mul(g);
            let next = elements.len() as u32;
            let idx = *index.entry(y.pack()).or_insert_with(|| {
                elements.push(y);
                next
            });
            right.push(idx);
        }
        head += 1;
    }

    let mut left = Vec::with_capacity(elements.len() * k);
    for x in &elements {
        for g in gens.elements() {
            left.push(index[&g.mul(x).pack()]);
        }
    }

    Ok(MonoidEnumeration {
        gens,
        elements,
        index,
        right,
        left,
    })
}

impl MonoidEnumeration {
    pub fn degree(&self) -> usize {
        self.gens.degree()
    }

    pub fn generators(&self) -> &GenSet {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PartialPerm] {
        &self.elements
    }

    pub fn element(&self, idx: u32) -> &PartialPerm {
        &self.elements[idx as usize]
    }

    pub fn index_of(&self, p: &PartialPerm) -> Option<u32> {
        if p.source_size() != self.degree() || p.target_size() != self.degree() {
            return None;
        }
        self.index.get(&p.pack()).copied()
    }

    /// Index of `x . g_k`.
    pub fn right_edge(&self, x: u32, k: usize) -> u32 {
        self.right[x as usize * self.gens.len() + k]
    }

    /// Index of `g_k . x`.
    pub fn left_edge(&self, x: u32, k: usize) -> u32 {
        self.left[x as usize * self.gens.len() + k]
    }
}

/// Which side of the alignment an edge acts on: left edges move the first
/// genome, right edges the second.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Edge provenance: side plus the generator's index in its [`GenSet`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EdgeLabel {
    pub side: Side,
    pub generator: u8,
}

/// The union of the left Cayley graph for `X_m` (embedded) and the right
/// Cayley graph for `X_n`, on the node set `I_n`.
///
/// Left edges are present at every node of `I_n`, not only on the embedded
/// copy of `I_m`; alignment searches start from `sigma` in `I_{m,n}`, which
/// in general lies outside that copy.
#[derive(Debug)]
pub struct UnionGraph<'a> {
    m: usize,
    enumeration: &'a MonoidEnumeration,
    left_gens: GenSet,
    left: Vec<u32>,
}

pub fn build_union(m: usize, n: usize, enumeration: &MonoidEnumeration) -> Result<UnionGraph<'_>> {
    if enumeration.degree() != n {
        return Err(invalid("enumeration degree differs from n"));
    }
    if m == 0 || m > n {
        return Err(invalid("union needs 1 <= m <= n"));
    }
    let left_gens = GenSet::embedded(m, n)?;
    let left = if m == n {
        enumeration.left.clone()
    } else {
        let mut left = Vec::with_capacity(enumeration.len() * left_gens.len());
        for x in enumeration.elements() {
            for g in left_gens.elements() {
                let y = g.mul(x);
                left.push(enumeration.index_of(&y).expect("I_n is closed"));
            }
        }
        left
    };
    Ok(UnionGraph {
        m,
        enumeration,
        left_gens,
        left,
    })
}

impl<'a> UnionGraph<'a> {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.enumeration.degree()
    }

    pub fn enumeration(&self) -> &'a MonoidEnumeration {
        self.enumeration
    }

    pub fn left_generators(&self) -> &GenSet {
        &self.left_gens
    }

    pub fn right_generators(&self) -> &GenSet {
        self.enumeration.generators()
    }

    pub fn left_edge_count(&self) -> usize {
        self.left.len()
    }

    pub fn right_edge_count(&self) -> usize {
        self.enumeration.right.len()
    }

    pub fn edge_count(&self) -> usize {
        self.left_edge_count() + self.right_edge_count()
    }

    /// Every `(source, label, target)` triple, left edges first.
    pub fn edges(&self) -> impl Iterator<Item = (u32, EdgeLabel, u32)> + '_ {
        let kl = self.left_gens.len();
        let kr = self.enumeration.gens.len();
        let left = self.left.iter().enumerate().map(move |(e, &y)| {
            let label = EdgeLabel {
                side: Side::Left,
                generator: (e % kl) as u8,
            };
            ((e / kl) as u32, label, y)
        });
        let right = self
            .enumeration
            .right
            .iter()
            .enumerate()
            .map(move |(e, &y)| {
                let label = EdgeLabel {
                    side: Side::Right,
                    generator: (e % kr) as u8,
                };
                ((e / kr) as u32, label, y)
            });
        left.chain(right)
    }
}

/// An edge of a [`DClassGraph`], with vertex ids local to the graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Edge {
    pub source: u32,
    pub label: EdgeLabel,
    pub target: u32,
}

/// The subgraph of the union graph induced by the rank-`r` elements.
///
/// Vertices are sorted by their packed encoding; edges are sorted by
/// source, then label (left before right, ascending generator), and
/// indexed by `offsets` for adjacency lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DClassGraph {
    n: usize,
    m: usize,
    r: usize,
    vertices: Vec<PartialPerm>,
    edges: Vec<Edge>,
    offsets: Vec<u32>,
}

/// Keeps the rank-`r` vertices and the edges between them, minus
/// self-loops.
pub fn induce_dclass(union: &UnionGraph<'_>, r: usize) -> Result<DClassGraph> {
    let n = union.n();
    if r > n {
        return Err(invalid("rank exceeds degree"));
    }
    let en = union.enumeration();
    let mut members: Vec<(u32, u32)> = en
        .elements()
        .iter()
        .enumerate()
        .filter(|(_, p)| p.rank() == r)
        .map(|(i, p)| (p.pack(), i as u32))
        .collect();
    members.sort_unstable();
    let mut local: HashMap<u32, u32> = HashMap::with_capacity(members.len());
    for (v, &(_, global)) in members.iter().enumerate() {
        local.insert(global, v as u32);
    }
    let vertices: Vec<PartialPerm> = members.iter().map(|&(_, g)| *en.element(g)).collect();

    let mut edges: Vec<Edge> = union
        .edges()
        .filter(|(s, _, t)| s != t)
        .filter_map(|(s, label, t)| {
            let source = *local.get(&s)?;
            let target = *local.get(&t)?;
            Some(Edge {
                source,
                label,
                target,
            })
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(DClassGraph::from_parts(n, union.m(), r, vertices, edges))
}

impl DClassGraph {
    fn from_parts(
        n: usize,
        m: usize,
        r: usize,
        vertices: Vec<PartialPerm>,
        edges: Vec<Edge>,
    ) -> Self {
        let mut offsets = vec![0u32; vertices.len() + 1];
        for e in &edges {
            offsets[e.source as usize + 1] += 1;
        }
        for v in 0..vertices.len() {
            offsets[v + 1] += offsets[v];
        }
        DClassGraph {
            n,
            m,
            r,
            vertices,
            edges,
            offsets,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn vertices(&self) -> &[PartialPerm] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, p: &PartialPerm) -> Option<u32> {
        if p.source_size() != self.n || p.target_size() != self.n {
            return None;
        }
        let key = p.pack();
        self.vertices
            .binary_search_by_key(&key, PartialPerm::pack)
            .ok()
            .map(|v| v as u32)
    }

    pub fn out_edges(&self, v: u32) -> &[Edge] {
        let lo = self.offsets[v as usize] as usize;
        let hi = self.offsets[v as usize + 1] as usize;
        &self.edges[lo..hi]
    }

    fn reaches_all(&self, reversed: bool) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            if reversed {
                adj[e.target as usize].push(e.source);
            } else {
                adj[e.source as usize].push(e.target);
            }
        }
        let mut seen = vec![false; self.vertices.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([0u32]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.vertices.len()
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.reaches_all(false) && self.reaches_all(true)
    }
}

/// Magic bytes opening every cached D-class graph.
pub const CACHE_MAGIC: [u8; 4] = *b"IDCG";
/// Bumped whenever the byte layout changes.
pub const CACHE_FORMAT_VERSION: u32 = 1;

const HEADER_LEN: usize = 4 + 4 * 6;
const EDGE_LEN: usize = 4 + 4 + 1 + 1;

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

impl DClassGraph {
    /// Little-endian layout: magic, version, n, m, r, vertex count, edge
    /// count, packed vertices, `(source, target, side, generator)` edges,
    /// then an FNV-1a checksum of everything before it.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(
            HEADER_LEN + 4 * self.vertices.len() + EDGE_LEN * self.edges.len() + 8,
        );
        out.extend_from_slice(&CACHE_MAGIC);
        for v in [
            CACHE_FORMAT_VERSION,
            self.n as u32,
            self.m as u32,
            self.r as u32,
            self.vertices.len() as u32,
            self.edges.len() as u32,
        ] {
            out.extend_from_slice(&v.to_le_bytes());
        }
        for p in &self.vertices {
            out.extend_from_slice(&p.pack().to_le_bytes());
        }
        for e in &self.edges {
            out.extend_from_slice(&e.source.to_le_bytes());
            out.extend_from_slice(&e.target.to_le_bytes());
            out.push(match e.label.side {
                Side::Left => 0,
                Side::Right => 1,
            });
            out.push(e.label.generator);
        }
        let sum = fnv1a(&out);
        out.extend_from_slice(&sum.to_le_bytes());
        out
    }

    pub fn decode(bytes: &[u8]) -> Result<DClassGraph> {
        let corrupt = Error::CacheIntegrity;
        if bytes.len() < HEADER_LEN + 8 {
            return Err(corrupt("truncated header"));
        }
        if bytes[..4] != CACHE_MAGIC {
            return Err(corrupt("bad magic"));
        }
        let word = |k: usize| u32::from_le_bytes(bytes[4 + 4 * k..8 + 4 * k].try_into().unwrap());
        if word(0) != CACHE_FORMAT_VERSION {
            return Err(corrupt("format version mismatch"));
        }
        let (n, m, r) = (word(1) as usize, word(2) as usize, word(3) as usize);
        let (nv, ne) = (word(4) as usize, word(5) as usize);
        if n == 0 || n > MAX_ENUMERATION_DEGREE || m == 0 || m > n || r > n {
            return Err(corrupt("header parameters out of range"));
        }
        let body = HEADER_LEN + 4 * nv + EDGE_LEN * ne;
        if bytes.len() != body + 8 {
            return Err(corrupt("length does not match header counts"));
        }
        let stored = u64::from_le_bytes(bytes[body..].try_into().unwrap());
        if stored != fnv1a(&bytes[..body]) {
            return Err(corrupt("checksum mismatch"));
        }

        let mut vertices = Vec::with_capacity(nv);
        let mut at = HEADER_LEN;
        for _ in 0..nv {
            let key = u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap());
            let p =
                PartialPerm::unpack(key, n, n).map_err(|_| corrupt("invalid vertex encoding"))?;
            if p.rank() != r {
                return Err(corrupt("vertex outside the D-class"));
            }
            vertices.push(p);
            at += 4;
        }
        if vertices.windows(2).any(|w| w[0].pack() >= w[1].pack()) {
            return Err(corrupt("vertices not strictly sorted"));
        }
        let mut edges = Vec::with_capacity(ne);
        for _ in 0..ne {
            let source = u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap());
            let target = u32::from_le_bytes(bytes[at + 4..at + 8].try_into().unwrap());
            let side = match bytes[at + 8] {
                0 => Side::Left,
                1 => Side::Right,
                _ => return Err(corrupt("invalid edge side")),
            };
            if source as usize >= nv || target as usize >= nv {
                return Err(corrupt("edge endpoint out of range"));
            }
            edges.push(Edge {
                source,
                label: EdgeLabel {
                    side,
                    generator: bytes[at + 9],
                },
                target,
            });
            at += EDGE_LEN;
        }
        if edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(corrupt("edges not strictly sorted"));
        }
        Ok(DClassGraph::from_parts(n, m, r, vertices, edges))
    }
}

/// Builds `Delta_{n,r}` for left degree `m` from scratch.
pub fn build_dclass(m: usize, n: usize, r: usize) -> Result<DClassGraph> {
    let en = enumerate_monoid(n)?;
    let union = build_union(m, n, &en)?;
    induce_dclass(&union, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_monoid_sizes() {
        assert_eq!(enumerate_monoid(1).unwrap().len(), 2);
        assert_eq!(enumerate_monoid(2).unwrap().len(), 7);
        assert_eq!(enumerate_monoid(3).unwrap().len(), 34);
        assert_eq!(enumerate_monoid(4).unwrap().len(), 209);
        assert_eq!(enumerate_monoid(5).unwrap().len(), 1546);
        for n in 1..=8 {
            assert_eq!(
                expected_monoid_size(n),
                [2, 7, 34, 209, 1546, 13327, 130922, 1441729][n - 1]
            );
        }
    }

    #[test]
    fn capacity_guard() {
        assert!(matches!(enumerate_monoid(9), Err(Error::Capacity { .. })));
        assert!(enumerate_monoid(0).is_err());
    }

    #[test]
    fn indexing_is_deterministic() {
        let a = enumerate_monoid(4).unwrap();
        let b = enumerate_monoid(4).unwrap();
        assert_eq!(a.elements(), b.elements());
        assert_eq!(a.right, b.right);
        assert_eq!(a.left, b.left);
        assert_eq!(a.element(0), &PartialPerm::identity(4).unwrap());
    }

    #[test]
    fn cayley_edges_are_products() {
        let en = enumerate_monoid(4).unwrap();
        for x in 0..en.len() as u32 {
            for (k, g) in en.generators().elements().iter().enumerate() {
                assert_eq!(
                    en.element(en.right_edge(x, k)),
                    &en.element(x).compose(g).unwrap()
                );
                assert_eq!(
                    en.element(en.left_edge(x, k)),
                    &g.compose(en.element(x)).unwrap()
                );
                assert!(en.element(en.right_edge(x, k)).rank() <= en.element(x).rank());
            }
        }
    }

    #[test]
    fn generating_set_dedups_degree_two() {
        let g = GenSet::new(2).unwrap();
        assert_eq!(g.len(), 2);
        let g = GenSet::new(5).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.symbol(5), None);
    }

    #[test]
    fn union_edge_counts() {
        let en = enumerate_monoid(3).unwrap();
        let u = build_union(3, 3, &en).unwrap();
        assert_eq!(u.left_edge_count(), u.right_edge_count());
        assert!(u.edge_count() <= (2 * en.generators().len()) * en.len());

        let u = build_union(2, 3, &en).unwrap();
        assert_eq!(u.left_generators().len(), 2);
        for (s, label, t) in u.edges().filter(|(_, l, _)| l.side == Side::Left) {
            let g = u.left_generators().elements()[label.generator as usize];
            assert!(g.domain().all(|i| i <= 2));
            assert_eq!(*en.element(t), g.compose(en.element(s)).unwrap());
        }
        assert!(build_union(4, 3, &en).is_err());
    }

    #[test]
    fn dclass_vertex_counts() {
        let en = enumerate_monoid(4).unwrap();
        let u = build_union(4, 4, &en).unwrap();
        let d0 = induce_dclass(&u, 0).unwrap();
        assert_eq!(d0.vertices().len(), 1);
        assert!(d0.edges().is_empty());
        assert_eq!(induce_dclass(&u, 4).unwrap().vertices().len(), 24);
        assert_eq!(induce_dclass(&u, 2).unwrap().vertices().len(), 72);
        for r in 0..=4 {
            let d = induce_dclass(&u, r).unwrap();
            assert_eq!(d.vertices().len() as u64, expected_dclass_size(4, r));
            assert!(d.edges().iter().all(|e| e.source != e.target));
        }
    }

    #[test]
    fn dclasses_are_strongly_connected() {
        for n in 1..=5 {
            let en = enumerate_monoid(n).unwrap();
            let u = build_union(n, n, &en).unwrap();
            for r in 0..=n {
                assert!(
                    induce_dclass(&u, r).unwrap().is_strongly_connected(),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn encode_round_trip() {
        let d = build_dclass(3, 4, 2).unwrap();
        let bytes = d.encode();
        assert_eq!(&bytes[..4], b"IDCG");
        assert_eq!(DClassGraph::decode(&bytes).unwrap(), d);
    }

    #[test]
    fn decode_rejects_damage() {
        let d = build_dclass(4, 4, 2).unwrap();
        let bytes = d.encode();

        let mut bad = bytes.clone();
        bad[0] = b'X';
        assert_eq!(
            DClassGraph::decode(&bad),
            Err(Error::CacheIntegrity("bad magic"))
        );

        let mut bad = bytes.clone();
        bad[4] = 99;
        assert_eq!(
            DClassGraph::decode(&bad),
            Err(Error::CacheIntegrity("format version mismatch"))
        );

        let mut bad = bytes.clone();
        let mid = bad.len() / 2;
        bad[mid] ^= 0x40;
        assert!(DClassGraph::decode(&bad).is_err());

        assert!(DClassGraph::decode(&bytes[..bytes.len() - 3]).is_err());
    }
}
