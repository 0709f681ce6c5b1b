//! Partial permutations `I_{m,n}`: injective maps from a subset of
//! `{1..m}` into `{1..n}`.
//!
//! Every public interface speaks 1-based positions. Maps compose left to
//! right, so `f.compose(&g)` sends `i` to `g(f(i))`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Error, Result};
use crate::genome::ReferenceFrame;

/// Largest source or target size a [`PartialPerm`] can hold.
pub const MAX_DEGREE: usize = 16;

const UNDEFINED: u8 = 0;

/// An injective partial map `{1..m} -> {1..n}` stored inline.
///
/// Entries beyond `m` are always zero, so the derived equality, ordering
/// and hashing only see the defined part.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPerm {
    m: u8,
    n: u8,
    img: [u8; MAX_DEGREE],
}

fn check_size(size: usize) -> Result<()> {
    if size > MAX_DEGREE {
        return Err(Error::Capacity {
            what: "partial permutation size",
            requested: size,
            limit: MAX_DEGREE,
        });
    }
    Ok(())
}

impl PartialPerm {
    /// The empty map in `I_{m,n}`.
    pub fn empty(m: usize, n: usize) -> Result<Self> {
        check_size(m)?;
        check_size(n)?;
        Ok(Self::empty_unchecked(m, n))
    }

    pub(crate) fn empty_unchecked(m: usize, n: usize) -> Self {
        PartialPerm {
            m: m as u8,
            n: n as u8,
            img: [UNDEFINED; MAX_DEGREE],
        }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::partial_identity(n, n)
    }

    /// The identity on `{1..k}` viewed as an element of `I_{n,n}`.
    pub fn partial_identity(n: usize, k: usize) -> Result<Self> {
        check_size(n)?;
        if k > n {
            return Err(invalid("partial identity wider than its carrier"));
        }
        let mut p = Self::empty_unchecked(n, n);
        for i in 0..k {
            p.img[i] = (i + 1) as u8;
        }
        Ok(p)
    }

    /// The transposition `(a, b)` as a full permutation of `{1..n}`.
    /// `a == b` gives the identity.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(invalid("transposition point out of range"));
        }
        let mut p = Self::identity(n)?;
        p.img.swap(a - 1, b - 1);
        Ok(p)
    }

    /// Builds a map from its image list: entry `i` (0-based) is the image
    /// of `i + 1`, or `None` when undefined.
    pub fn from_images(n: usize, images: &[Option<usize>]) -> Result<Self> {
        check_size(images.len())?;
        check_size(n)?;
        let mut p = Self::empty_unchecked(images.len(), n);
        let mut seen = [false; MAX_DEGREE + 1];
        for (i, v) in images.iter().enumerate() {
            if let Some(j) = *v {
                if j == 0 || j > n {
                    return Err(invalid("image outside target range"));
                }
                if seen[j] {
                    return Err(invalid("partial permutation is not injective"));
                }
                seen[j] = true;
                p.img[i] = j as u8;
            }
        }
        Ok(p)
    }

    /// Builds a map in `I_{m,n}` from `(i, j)` pairs meaning `i -> j`.
    pub fn from_pairs(m: usize, n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        check_size(m)?;
        let mut images = alloc::vec![None; m];
        for &(i, j) in pairs {
            if i == 0 || i > m {
                return Err(invalid("domain point outside source range"));
            }
            if images[i - 1].is_some() {
                return Err(invalid("domain point mapped twice"));
            }
            images[i - 1] = Some(j);
        }
        Self::from_images(n, &images)
    }

    #[inline]
    pub fn source_size(&self) -> usize {
        self.m as usize
    }

    #[inline]
    pub fn target_size(&self) -> usize {
        self.n as usize
    }

    /// Image of `i`, if defined.
    #[inline]
    pub fn get(&self, i: usize) -> Option<usize> {
        if i == 0 || i > self.m as usize {
            return None;
        }
        match self.img[i - 1] {
            UNDEFINED => None,
            v => Some(v as usize),
        }
    }

    pub fn rank(&self) -> usize {
        self.img[..self.m as usize]
            .iter()
            .filter(|&&v| v != UNDEFINED)
            .count()
    }

    /// Defined `(i, (i)f)` pairs in ascending domain order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.img[..self.m as usize]
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != UNDEFINED)
            .map(|(i, &v)| (i + 1, v as usize))
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs().map(|(i, _)| i)
    }

    /// Images listed along the ascending domain.
    pub fn image_sequence(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs().map(|(_, j)| j)
    }

    pub fn is_permutation(&self) -> bool {
        self.m == self.n && self.rank() == self.m as usize
    }

    /// Left-to-right product: `(i)(fg) = ((i)f)g`.
    pub fn compose(&self, g: &PartialPerm) -> Result<PartialPerm> {
        if self.n != g.m {
            return Err(invalid("composition size mismatch"));
        }
        Ok(self.mul(g))
    }

    /// Unchecked product; sizes must already agree.
    #[inline]
    pub(crate) fn mul(&self, g: &PartialPerm) -> PartialPerm {
        debug_assert_eq!(self.n, g.m);
        let mut out = Self::empty_unchecked(self.m as usize, g.n as usize);
        for i in 0..self.m as usize {
            let v = self.img[i];
            if v != UNDEFINED {
                out.img[i] = g.img[v as usize - 1];
            }
        }
        out
    }

    pub fn inverse(&self) -> PartialPerm {
        let mut out = Self::empty_unchecked(self.n as usize, self.m as usize);
        for (i, j) in self.pairs() {
            out.img[j - 1] = i as u8;
        }
        out
    }

    pub fn is_order_preserving(&self) -> bool {
        let mut prev = 0;
        for j in self.image_sequence() {
            if j < prev {
                return false;
            }
            prev = j;
        }
        true
    }

    /// True iff the image sequence along the ascending domain has at most
    /// one cyclic descent, counting the wraparound comparison.
    pub fn is_orientation_preserving(&self) -> bool {
        let mut first = None;
        let mut prev = 0usize;
        let mut descents = 0;
        for j in self.image_sequence() {
            match first {
                None => first = Some(j),
                Some(_) => {
                    if prev > j {
                        descents += 1;
                    }
                }
            }
            prev = j;
        }
        match first {
            None => true,
            Some(f) => {
                if prev > f {
                    descents += 1;
                }
                descents <= 1
            }
        }
    }

    /// Every pair `i < j` in the domain with `(i)f > (j)f`.
    pub fn crossings(&self) -> Crossings {
        let defined: Vec<(usize, usize)> = self.pairs().collect();
        let mut pairs = Vec::new();
        for (a, &(i, fi)) in defined.iter().enumerate() {
            for &(j, fj) in &defined[a + 1..] {
                if fi > fj {
                    pairs.push((i, j));
                }
            }
        }
        Crossings { pairs }
    }

    /// Re-reads the same mappings as an element of `I_{size,size}`.
    pub fn embed(&self, size: usize) -> Result<PartialPerm> {
        check_size(size)?;
        if size < self.m as usize || size < self.n as usize {
            return Err(invalid("embedding target smaller than the map"));
        }
        let mut out = *self;
        out.m = size as u8;
        out.n = size as u8;
        Ok(out)
    }

    /// Restricts the source and target sizes back down after an embedding.
    pub fn restrict(&self, m: usize, n: usize) -> Result<PartialPerm> {
        if self.pairs().any(|(i, j)| i > m || j > n) {
            return Err(invalid("restriction would drop defined points"));
        }
        let mut out = *self;
        out.m = m as u8;
        out.n = n as u8;
        Ok(out)
    }

    /// Nibble-packed key for maps with both sizes at most 8.
    #[inline]
    pub(crate) fn pack(&self) -> u32 {
        debug_assert!(self.m <= 8 && self.n <= 15);
        let mut key = 0u32;
        for i in 0..self.m as usize {
            key |= (self.img[i] as u32) << (4 * i);
        }
        key
    }

    pub(crate) fn unpack(key: u32, m: usize, n: usize) -> Result<PartialPerm> {
        let mut images = [None; 8];
        for (i, slot) in images.iter_mut().enumerate().take(m) {
            let v = (key >> (4 * i)) & 0xF;
            if v != 0 {
                *slot = Some(v as usize);
            }
        }
        if m < 8 && key >> (4 * m) != 0 {
            return Err(invalid("packed map has entries beyond its size"));
        }
        Self::from_images(n, &images[..m])
    }

    /// Left multiplication by the transposition `(a, a')` of source
    /// positions, without building the transposition.
    #[inline]
    pub(crate) fn swap_sources(&self, a: usize, b: usize) -> PartialPerm {
        let mut out = *self;
        out.img.swap(a - 1, b - 1);
        out
    }

    /// Right multiplication by the transposition `(a, b)` of target values.
    #[inline]
    pub(crate) fn swap_targets(&self, a: usize, b: usize) -> PartialPerm {
        let (a, b) = (a as u8, b as u8);
        let mut out = *self;
        for v in out.img[..self.m as usize].iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
        out
    }

    /// Two-row diagram: sources on top, targets below, one line per edge.
    pub fn diagram(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = write!(s, "top:    ");
        for i in 1..=self.m {
            let _ = write!(s, "{:>3}", i);
        }
        s.push('\n');
        let _ = write!(s, "bottom: ");
        for j in 1..=self.n {
            let _ = write!(s, "{:>3}", j);
        }
        s.push('\n');
        for (i, j) in self.pairs() {
            let _ = writeln!(s, "  {} -- {}", i, j);
        }
        s
    }
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I[{},{}]{}", self.m, self.n, self)
    }
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, j)) in self.pairs().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}->{}", i, j)?;
        }
        f.write_str("}")
    }
}

/// Crossing witnesses of a partial permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossings {
    pub pairs: Vec<(usize, usize)>,
}

impl Crossings {
    pub fn count(&self) -> usize {
        self.pairs.len()
    }
}

/// `sigma_{g1,g2}`: `(i) -> j` iff region `x_i` of `g1` equals `y_j` of `g2`.
pub fn sigma_from_frames(g1: &ReferenceFrame, g2: &ReferenceFrame) -> Result<PartialPerm> {
    let (m, n) = (g1.len(), g2.len());
    check_size(m)?;
    check_size(n)?;
    let mut p = PartialPerm::empty_unchecked(m, n);
    for (i, x) in g1.regions().iter().enumerate() {
        if let Some(j) = g2.position(*x) {
            p.img[i] = j as u8;
        }
    }
    Ok(p)
}
