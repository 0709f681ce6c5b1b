//! Circular genomes as dihedral orbits of region words.
//!
//! Regions are interned in a [`RegionAlphabet`] whose indices follow the
//! lexicographic order of the tokens, so comparing region indices compares
//! tokens. A [`Genome`] keeps the least frame of its orbit as its canonical
//! representative.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Result};

/// Index of a region token in its alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Region(pub u16);

/// Sorted, duplicate-free list of region tokens.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RegionAlphabet {
    names: Vec<String>,
}

impl RegionAlphabet {
    /// Interns every token; repeats across the input are merged.
    pub fn from_tokens<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let set: BTreeSet<String> = tokens.into_iter().map(|t| t.as_ref().to_string()).collect();
        if set.iter().any(|t| t.is_empty()) {
            return Err(invalid("empty region token"));
        }
        if set.len() > u16::MAX as usize {
            return Err(invalid("too many region tokens"));
        }
        Ok(RegionAlphabet {
            names: set.into_iter().collect(),
        })
    }

    /// `a`, `b`, `c`, ... for the first 26 regions, then `r27`, `r28`, ...
    pub fn letters(n: usize) -> Self {
        let names = (0..n)
            .map(|i| {
                if i < 26 {
                    char::from(b'a' + i as u8).to_string()
                } else {
                    alloc::format!("r{}", i + 1)
                }
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        RegionAlphabet { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn region(&self, token: &str) -> Option<Region> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(token))
            .ok()
            .map(|i| Region(i as u16))
    }

    pub fn name(&self, r: Region) -> &str {
        &self.names[r.0 as usize]
    }

    pub fn frame<S: AsRef<str>>(&self, tokens: &[S]) -> Result<ReferenceFrame> {
        let regions = tokens
            .iter()
            .map(|t| {
                self.region(t.as_ref())
                    .ok_or_else(|| invalid(alloc::format!("unknown region `{}`", t.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        ReferenceFrame::new(regions)
    }

    /// Frame whose tokens are the individual characters of `word`.
    pub fn frame_from_chars(&self, word: &str) -> Result<ReferenceFrame> {
        let mut buf = [0u8; 4];
        let tokens: Vec<String> = word
            .chars()
            .map(|c| c.encode_utf8(&mut buf).to_string())
            .collect();
        self.frame(&tokens)
    }

    /// Joins the frame's tokens with `sep`.
    pub fn render(&self, frame: &ReferenceFrame, sep: &str) -> String {
        let mut s = String::new();
        for (k, r) in frame.regions().iter().enumerate() {
            if k > 0 {
                s.push_str(sep);
            }
            s.push_str(self.name(*r));
        }
        s
    }

    /// Renders single-character alphabets without separators, others with
    /// spaces.
    pub fn render_compact(&self, frame: &ReferenceFrame) -> String {
        let sep = if frame
            .regions()
            .iter()
            .all(|r| self.name(*r).chars().count() == 1)
        {
            ""
        } else {
            " "
        };
        self.render(frame, sep)
    }
}

/// One clockwise reading of a genome from a distinguished point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReferenceFrame {
    word: Vec<Region>,
}

impl ReferenceFrame {
    pub fn new(word: Vec<Region>) -> Result<Self> {
        if word.is_empty() {
            return Err(invalid("reference frame must hold at least one region"));
        }
        let distinct: BTreeSet<Region> = word.iter().copied().collect();
        if distinct.len() != word.len() {
            return Err(invalid("reference frame repeats a region"));
        }
        Ok(ReferenceFrame { word })
    }

    pub(crate) fn from_vec_unchecked(word: Vec<Region>) -> Self {
        ReferenceFrame { word }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn regions(&self) -> &[Region] {
        &self.word
    }

    /// 1-based position of `r`.
    pub fn position(&self, r: Region) -> Option<usize> {
        self.word.iter().position(|&x| x == r).map(|p| p + 1)
    }

    pub fn region_set(&self) -> BTreeSet<Region> {
        self.word.iter().copied().collect()
    }

    /// The frame read starting from position `k + 1`.
    pub fn rotate_left(&self, k: usize) -> ReferenceFrame {
        let mut word = self.word.clone();
        let len = word.len();
        word.rotate_left(k % len);
        ReferenceFrame { word }
    }

    pub fn reversed(&self) -> ReferenceFrame {
        let mut word = self.word.clone();
        word.reverse();
        ReferenceFrame { word }
    }

    /// Keeps only regions for which `keep` holds, in their current order.
    /// Returns `None` if nothing survives.
    pub fn retain(&self, mut keep: impl FnMut(Region) -> bool) -> Option<ReferenceFrame> {
        let word: Vec<Region> = self.word.iter().copied().filter(|&r| keep(r)).collect();
        if word.is_empty() {
            None
        } else {
            Some(ReferenceFrame { word })
        }
    }
}

impl fmt::Debug for ReferenceFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.word.iter().map(|r| r.0))
            .finish()
    }
}

/// Element of the dihedral group acting on positions `1..=n`.
///
/// As a map on positions it sends `i` to `rot(refl(i))`, where `refl`
/// (only when `reflected`) is `i -> n + 1 - i` and `rot` adds `rotation`
/// modulo `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DihedralElement {
    n: usize,
    rotation: usize,
    reflected: bool,
}

impl DihedralElement {
    pub fn new(n: usize, rotation: usize, reflected: bool) -> Result<Self> {
        if n == 0 {
            return Err(invalid("dihedral group of an empty frame"));
        }
        Ok(DihedralElement {
            n,
            rotation: rotation % n,
            reflected,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, false)
    }

    pub fn rotation(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, false)
    }

    pub fn reflection(n: usize) -> Result<Self> {
        Self::new(n, 0, true)
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn rotation_amount(&self) -> usize {
        self.rotation
    }

    pub fn is_reflected(&self) -> bool {
        self.reflected
    }

    /// Image of position `i` (1-based).
    pub fn point(&self, i: usize) -> usize {
        let j = if self.reflected { self.n + 1 - i } else { i };
        (j - 1 + self.rotation) % self.n + 1
    }

    fn from_points(n: usize, img1: usize, img2: usize) -> Self {
        Self::all_raw(n)
            .find(|g| g.point(1) == img1 && (n == 1 || g.point(2) == img2))
            .expect("dihedral closure")
    }

    fn all_raw(n: usize) -> impl Iterator<Item = DihedralElement> {
        (0..n).flat_map(move |k| {
            [false, true]
                .into_iter()
                .map(move |reflected| DihedralElement {
                    n,
                    rotation: k,
                    reflected,
                })
        })
    }

    /// `self` followed by `other` as maps on positions.
    pub fn then(&self, other: &DihedralElement) -> Result<Self> {
        if self.n != other.n {
            return Err(invalid("dihedral modulus mismatch"));
        }
        let n = self.n;
        let img2 = if n >= 2 {
            other.point(self.point(2))
        } else {
            1
        };
        Ok(Self::from_points(n, other.point(self.point(1)), img2))
    }

    pub fn inverse(&self) -> Self {
        let n = self.n;
        let pre = |target: usize| (1..=n).find(|&i| self.point(i) == target).unwrap();
        let img2 = if n >= 2 { pre(2) } else { 1 };
        Self::from_points(n, pre(1), img2)
    }

    /// The distinct elements of the group: `2n` of them for `n >= 3`,
    /// two for `n = 2` and one for `n = 1`.
    pub fn all(n: usize) -> Result<Vec<DihedralElement>> {
        if n == 0 {
            return Err(invalid("dihedral group of an empty frame"));
        }
        let mut out: Vec<DihedralElement> = Vec::new();
        for g in Self::all_raw(n) {
            let dup = out
                .iter()
                .any(|h| (1..=n).all(|i| h.point(i) == g.point(i)));
            if !dup {
                out.push(g);
            }
        }
        Ok(out)
    }
}

/// `g . x_1..x_n = x_{(1)g} .. x_{(n)g}`.
pub fn dihedral_apply(frame: &ReferenceFrame, g: &DihedralElement) -> Result<ReferenceFrame> {
    if g.modulus() != frame.len() {
        return Err(invalid("dihedral modulus differs from frame length"));
    }
    let word = (1..=frame.len())
        .map(|i| frame.word[g.point(i) - 1])
        .collect();
    Ok(ReferenceFrame { word })
}

/// A circular genome: the dihedral orbit of a frame.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Genome {
    canonical: ReferenceFrame,
}

impl Genome {
    pub fn canonical(&self) -> &ReferenceFrame {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    pub fn region_set(&self) -> BTreeSet<Region> {
        self.canonical.region_set()
    }

    /// All distinct frames in the orbit, sorted.
    pub fn frames(&self) -> Vec<ReferenceFrame> {
        let set: BTreeSet<ReferenceFrame> = orbit(&self.canonical).collect();
        set.into_iter().collect()
    }

    /// Orbit frames in group order (rotations of the canonical frame, then
    /// of its reversal), without duplicates.
    pub fn frames_in_group_order(&self) -> Vec<ReferenceFrame> {
        let mut out: Vec<ReferenceFrame> = Vec::new();
        for f in orbit(&self.canonical) {
            if !out.contains(&f) {
                out.push(f);
            }
        }
        out
    }

    pub fn contains_frame(&self, frame: &ReferenceFrame) -> bool {
        canonicalize(frame) == *self
    }
}

fn orbit(frame: &ReferenceFrame) -> impl Iterator<Item = ReferenceFrame> + '_ {
    let n = frame.len();
    let rev = frame.reversed();
    (0..n)
        .map(move |k| frame.rotate_left(k))
        .chain((0..n).map(move |k| rev.rotate_left(k)))
}

/// The least frame of the orbit, under region (token) order.
pub fn canonicalize(frame: &ReferenceFrame) -> Genome {
    let canonical = orbit(frame).min().expect("frames are nonempty");
    Genome { canonical }
}

pub fn frames(g: &Genome) -> Vec<ReferenceFrame> {
    g.frames()
}

/// Set algebra over the region sets of two genomes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionSets {
    pub intersection: BTreeSet<Region>,
    pub symmetric_difference: BTreeSet<Region>,
    pub union: BTreeSet<Region>,
}

pub fn region_set_ops(g1: &Genome, g2: &Genome) -> RegionSets {
    let r1 = g1.region_set();
    let r2 = g2.region_set();
    RegionSets {
        intersection: r1.intersection(&r2).copied().collect(),
        symmetric_difference: r1.symmetric_difference(&r2).copied().collect(),
        union: r1.union(&r2).copied().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc(n: usize) -> RegionAlphabet {
        RegionAlphabet::letters(n)
    }

    fn render(a: &RegionAlphabet, f: &ReferenceFrame) -> String {
        a.render(f, "")
    }

    #[test]
    fn dihedral_apply_rotation_and_reflection() {
        let a = abc(8);
        let f = a.frame_from_chars("abcdefgh").unwrap();
        let r2 = DihedralElement::rotation(8, 2).unwrap();
        assert_eq!(render(&a, &dihedral_apply(&f, &r2).unwrap()), "cdefghab");
        let refl = DihedralElement::reflection(8).unwrap();
        assert_eq!(render(&a, &dihedral_apply(&f, &refl).unwrap()), "hgfedcba");
        let id = DihedralElement::identity(8).unwrap();
        assert_eq!(dihedral_apply(&f, &id).unwrap(), f);
    }

    #[test]
    fn dihedral_apply_checks_modulus() {
        let a = abc(4);
        let f = a.frame_from_chars("abcd").unwrap();
        assert!(dihedral_apply(&f, &DihedralElement::rotation(5, 1).unwrap()).is_err());
    }

    #[test]
    fn inverse_undoes_action() {
        let a = abc(7);
        let f = a.frame_from_chars("gbadcfe").unwrap();
        for g in DihedralElement::all(7).unwrap() {
            let there = dihedral_apply(&f, &g).unwrap();
            assert_eq!(dihedral_apply(&there, &g.inverse()).unwrap(), f);
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(DihedralElement::all(1).unwrap().len(), 1);
        assert_eq!(DihedralElement::all(2).unwrap().len(), 2);
        for n in 3..10 {
            assert_eq!(DihedralElement::all(n).unwrap().len(), 2 * n);
        }
    }

    #[test]
    fn composition_is_closed() {
        let all = DihedralElement::all(6).unwrap();
        for g in &all {
            for h in &all {
                let gh = g.then(h).unwrap();
                for i in 1..=6 {
                    assert_eq!(gh.point(i), h.point(g.point(i)));
                }
            }
        }
    }

    #[test]
    fn canonicalize_examples() {
        let a = abc(8);
        let g = canonicalize(&a.frame_from_chars("cdab").unwrap());
        assert_eq!(render(&a, g.canonical()), "abcd");
        let g = canonicalize(&a.frame_from_chars("hgfedcba").unwrap());
        assert_eq!(render(&a, g.canonical()), "abcdefgh");
        let g = canonicalize(&a.frame_from_chars("a").unwrap());
        assert_eq!(render(&a, g.canonical()), "a");
    }

    #[test]
    fn frames_examples() {
        let a = abc(8);
        let g = canonicalize(&a.frame_from_chars("abc").unwrap());
        let mut fr: Vec<String> = g.frames().iter().map(|f| render(&a, f)).collect();
        fr.sort();
        assert_eq!(fr, ["abc", "acb", "bac", "bca", "cab", "cba"]);

        let g = canonicalize(&a.frame_from_chars("ab").unwrap());
        assert_eq!(g.frames().len(), 2);

        let g = canonicalize(&a.frame_from_chars("abcdefgh").unwrap());
        let fr: Vec<String> = g.frames().iter().map(|f| render(&a, f)).collect();
        assert_eq!(fr.len(), 16);
        assert!(fr.iter().any(|f| f == "cdefghab"));
        assert!(fr.iter().any(|f| f == "hgfedcba"));
    }

    #[test]
    fn region_set_examples() {
        let a = RegionAlphabet::letters(9);
        let g1 = canonicalize(&a.frame_from_chars("abcdefgh").unwrap());
        let g2 = canonicalize(&a.frame_from_chars("eibach").unwrap());
        let s = region_set_ops(&g1, &g2);
        let names = |set: &BTreeSet<Region>| set.iter().map(|r| a.name(*r)).collect::<String>();
        assert_eq!(names(&s.intersection), "abceh");
        assert_eq!(names(&s.symmetric_difference), "dfgi");
        assert_eq!(names(&s.union), "abcdefghi");

        let same = region_set_ops(&g1, &g1);
        assert!(same.symmetric_difference.is_empty());

        let d1 = canonicalize(&a.frame_from_chars("abc").unwrap());
        let d2 = canonicalize(&a.frame_from_chars("def").unwrap());
        let s = region_set_ops(&d1, &d2);
        assert!(s.intersection.is_empty());
        assert_eq!(s.symmetric_difference.len(), 6);
    }

    #[test]
    fn alphabet_rejects_bad_frames() {
        let a = abc(4);
        assert!(a.frame_from_chars("aab").is_err());
        assert!(a.frame_from_chars("").is_err());
        assert!(a.frame_from_chars("az").is_err());
        assert!(RegionAlphabet::from_tokens([""]).is_err());
    }

    #[test]
    fn alphabet_orders_tokens() {
        let a = RegionAlphabet::from_tokens(["dnaA", "gyrB", "adk", "dnaA"]).unwrap();
        assert_eq!(a.names(), ["adk", "dnaA", "gyrB"]);
        assert!(a.region("adk").unwrap() < a.region("gyrB").unwrap());
    }
}
