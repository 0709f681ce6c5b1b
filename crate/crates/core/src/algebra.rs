//! Generators of the rearrangement digraph (inversions, deletions,
//! rotations, reflections), words over them, the relation table and the
//! deletions-first rewriter.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::genome::ReferenceFrame;
use crate::pperm::{PartialPerm, MAX_DEGREE};

/// One edge label of the digraph. Indices and sizes are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Generator {
    /// `s_{i;n}`: swaps positions `i` and `i + 1` (mod `n`).
    Inv { i: usize, n: usize },
    /// `d_{i;n}`: deletes position `i`, mapping `n` onto `n - 1`.
    Del { i: usize, n: usize },
    /// `c_n`: the rotation `j -> j + 1 (mod n)`.
    Rot { n: usize },
    /// `a_n`: the reflection `j -> n + 1 - j`.
    Refl { n: usize },
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("generator size must be positive"));
    }
    if n > MAX_DEGREE {
        return Err(Error::Capacity {
            what: "generator size",
            requested: n,
            limit: MAX_DEGREE,
        });
    }
    Ok(())
}

impl Generator {
    pub fn inv(i: usize, n: usize) -> Result<Self> {
        let g = Generator::Inv { i, n };
        g.validate()?;
        Ok(g)
    }

    pub fn del(i: usize, n: usize) -> Result<Self> {
        let g = Generator::Del { i, n };
        g.validate()?;
        Ok(g)
    }

    pub fn rot(n: usize) -> Result<Self> {
        let g = Generator::Rot { n };
        g.validate()?;
        Ok(g)
    }

    pub fn refl(n: usize) -> Result<Self> {
        let g = Generator::Refl { n };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Generator::Inv { i, n } => {
                check_n(n)?;
                if i == 0 || i > n {
                    return Err(invalid("inversion index out of range"));
                }
            }
            Generator::Del { i, n } => {
                check_n(n)?;
                if n < 2 {
                    return Err(invalid("deletion needs at least two regions"));
                }
                if i == 0 || i > n {
                    return Err(invalid("deletion index out of range"));
                }
            }
            Generator::Rot { n } | Generator::Refl { n } => check_n(n)?,
        }
        Ok(())
    }

    pub fn source(&self) -> usize {
        match *self {
            Generator::Inv { n, .. }
            | Generator::Del { n, .. }
            | Generator::Rot { n }
            | Generator::Refl { n } => n,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            Generator::Del { n, .. } => n - 1,
            _ => self.source(),
        }
    }

    pub fn is_deletion(&self) -> bool {
        matches!(self, Generator::Del { .. })
    }

    pub fn is_inversion(&self) -> bool {
        matches!(self, Generator::Inv { .. })
    }

    pub fn is_dihedral(&self) -> bool {
        matches!(self, Generator::Rot { .. } | Generator::Refl { .. })
    }

    /// The partial permutation this letter denotes.
    pub fn eval(&self) -> Result<PartialPerm> {
        self.validate()?;
        let n = self.source();
        let images: Vec<Option<usize>> = match *self {
            Generator::Inv { i, n } => {
                return PartialPerm::transposition(n, i, i % n + 1);
            }
            Generator::Del { i, .. } => (1..=n)
                .map(|j| match j.cmp(&i) {
                    core::cmp::Ordering::Less => Some(j),
                    core::cmp::Ordering::Equal => None,
                    core::cmp::Ordering::Greater => Some(j - 1),
                })
                .collect(),
            Generator::Rot { .. } => (1..=n).map(|j| Some(j % n + 1)).collect(),
            Generator::Refl { .. } => (1..=n).map(|j| Some(n + 1 - j)).collect(),
        };
        PartialPerm::from_images(self.target(), &images)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Inv { i, n } => write!(f, "s{};{}", i, n),
            Generator::Del { i, n } => write!(f, "d{};{}", i, n),
            Generator::Rot { n } => write!(f, "c{}", n),
            Generator::Refl { n } => write!(f, "a{}", n),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || invalid(alloc::format!("bad generator token `{}`", s));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let (head, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(k, _)| k));
        match head {
            "s" | "d" => {
                let (i, n) = rest.split_once(';').ok_or_else(bad)?;
                let (i, n) = (num(i)?, num(n)?);
                if head == "s" {
                    Generator::inv(i, n)
                } else {
                    Generator::del(i, n)
                }
            }
            "c" => Generator::rot(num(rest)?),
            "a" => Generator::refl(num(rest)?),
            _ => Err(bad()),
        }
    }
}

/// A path in the digraph: consecutive letters must have matching sizes.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Generator>,
}

fn type_check(letters: &[Generator], source: Option<usize>) -> Result<()> {
    let mut expected = source;
    for (position, g) in letters.iter().enumerate() {
        g.validate()?;
        if let Some(e) = expected {
            if g.source() != e {
                return Err(Error::IllTypedWord {
                    position,
                    expected: e,
                    found: g.source(),
                });
            }
        }
        expected = Some(g.target());
    }
    Ok(())
}

impl Word {
    pub fn new(letters: Vec<Generator>) -> Result<Self> {
        type_check(&letters, None)?;
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<Generator>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Source size, if the word is nonempty.
    pub fn source(&self) -> Option<usize> {
        self.letters.first().map(Generator::source)
    }

    pub fn target(&self) -> Option<usize> {
        self.letters.last().map(Generator::target)
    }

    /// Number of deletion and inversion letters.
    pub fn nondihedral_len(&self) -> usize {
        self.letters.iter().filter(|g| !g.is_dihedral()).count()
    }

    /// Left-to-right product of the letters, starting from size `source`.
    /// The empty word evaluates to the identity on `source`.
    pub fn eval(&self, source: usize) -> Result<PartialPerm> {
        type_check(&self.letters, Some(source))?;
        let mut acc = PartialPerm::identity(source)?;
        for g in &self.letters {
            acc = acc.mul(&g.eval()?);
        }
        Ok(acc)
    }

    pub fn push(&mut self, g: Generator) -> Result<()> {
        if let Some(t) = self.target() {
            if g.source() != t {
                return Err(Error::IllTypedWord {
                    position: self.letters.len(),
                    expected: t,
                    found: g.source(),
                });
            }
        }
        g.validate()?;
        self.letters.push(g);
        Ok(())
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::new(letters)
    }

    /// The letters in reverse order. For a word of involutions (inversions,
    /// reflections) this is its inverse.
    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    /// True when the word reads (deletions)(inversions)(dihedral letters).
    pub fn is_deletions_first(&self) -> bool {
        let phase = |g: &Generator| match g {
            Generator::Del { .. } => 0,
            Generator::Inv { .. } => 1,
            _ => 2,
        };
        self.letters
            .windows(2)
            .all(|w| phase(&w[0]) <= phase(&w[1]))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", g)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(Generator::from_str)
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

/// Applies `w` to a frame: each surviving region moves to its new position
/// and deleted regions disappear.
pub fn apply_to_frame(frame: &ReferenceFrame, w: &Word) -> Result<ReferenceFrame> {
    let p = w.eval(frame.len())?;
    let mut out = vec![None; p.target_size()];
    for (i, j) in p.pairs() {
        out[j - 1] = Some(frame.regions()[i - 1]);
    }
    let word = out
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| invalid("word leaves a gap in the frame"))?;
    if word.is_empty() {
        return Err(invalid("word deletes every region"));
    }
    Ok(ReferenceFrame::from_vec_unchecked(word))
}

/// One instance of a defining relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: Word,
    pub rhs: Word,
}

fn w(letters: &[Generator]) -> Word {
    Word::new(letters.to_vec()).expect("relation words are well typed")
}

fn rot_power(n: usize, k: usize) -> Vec<Generator> {
    vec![Generator::Rot { n }; k]
}

/// Every instance of R1 to R14 with left-hand sides at size `n`.
///
/// R3 uses the exponent `n - 2`; `c_{n-1}` has order `n - 1`, so the
/// inverse rotation is `c_{n-1}^{n-2}`.
pub fn relation_table(n: usize) -> Result<Vec<Relation>> {
    if n < 2 {
        return Err(invalid("relation table needs n >= 2"));
    }
    check_n(n)?;
    use Generator::{Del, Inv, Refl, Rot};
    let mut out = Vec::new();
    let mut push = |name, lhs: Vec<Generator>, rhs: Vec<Generator>| {
        out.push(Relation {
            name,
            lhs: w(&lhs),
            rhs: w(&rhs),
        })
    };

    for i in 1..=n {
        for j in 1..=n {
            let lhs = vec![Inv { i, n }, Del { i: j, n }];
            if i == n {
                if 1 < j && j < n {
                    push("R1", lhs, vec![Del { i: j, n }, Inv { i: n - 1, n: n - 1 }]);
                } else if j == n {
                    push("R2", lhs, vec![Del { i: 1, n }, Rot { n: n - 1 }]);
                } else {
                    let mut rhs = vec![Del { i: n, n }];
                    rhs.extend(rot_power(n - 1, n - 2));
                    push("R3", lhs, rhs);
                }
            } else if i > j {
                push("R4", lhs, vec![Del { i: j, n }, Inv { i: i - 1, n: n - 1 }]);
            } else if i + 1 < j {
                push("R5", lhs, vec![Del { i: j, n }, Inv { i, n: n - 1 }]);
            } else if i == j {
                push("R6", lhs, vec![Del { i: j + 1, n }]);
            } else {
                push("R7", lhs, vec![Del { i, n }]);
            }
        }
    }

    for i in 1..=n {
        let lhs = vec![Rot { n }, Inv { i, n }];
        if i >= 2 {
            push("R8", lhs, vec![Inv { i: i - 1, n }, Rot { n }]);
        } else {
            push("R9", lhs, vec![Inv { i: n, n }, Rot { n }]);
        }
    }
    for i in 1..=n {
        let lhs = vec![Rot { n }, Del { i, n }];
        if i >= 2 {
            push("R10", lhs, vec![Del { i: i - 1, n }, Rot { n: n - 1 }]);
        } else {
            push("R11", lhs, vec![Del { i: n, n }]);
        }
    }
    for i in 1..=n {
        push(
            "R12",
            vec![Refl { n }, Del { i, n }],
            vec![Del { i: n - i + 1, n }, Refl { n: n - 1 }],
        );
    }
    for i in 1..=n {
        let lhs = vec![Refl { n }, Inv { i, n }];
        if i < n {
            push("R13", lhs, vec![Inv { i: n - i, n }, Refl { n }]);
        } else {
            push("R14", lhs, vec![Inv { i: n, n }, Refl { n }]);
        }
    }
    Ok(out)
}

/// Moves a deletion left across one letter: `a d -> d' tail`.
fn swap_past_deletion(a: Generator, d: Generator) -> (Generator, Vec<Generator>) {
    use Generator::{Del, Inv, Refl, Rot};
    let Del { i: j, n } = d else {
        unreachable!("second letter must be a deletion")
    };
    match a {
        Inv { i, .. } => {
            if i == n {
                if 1 < j && j < n {
                    (Del { i: j, n }, vec![Inv { i: n - 1, n: n - 1 }])
                } else if j == n {
                    (Del { i: 1, n }, vec![Rot { n: n - 1 }])
                } else {
                    (Del { i: n, n }, rot_power(n - 1, n - 2))
                }
            } else if i > j {
                (Del { i: j, n }, vec![Inv { i: i - 1, n: n - 1 }])
            } else if i + 1 < j {
                (Del { i: j, n }, vec![Inv { i, n: n - 1 }])
            } else if i == j {
                (Del { i: j + 1, n }, vec![])
            } else {
                (Del { i, n }, vec![])
            }
        }
        Rot { .. } => {
            if j >= 2 {
                (Del { i: j - 1, n }, vec![Rot { n: n - 1 }])
            } else {
                (Del { i: n, n }, vec![])
            }
        }
        Refl { .. } => (Del { i: n - j + 1, n }, vec![Refl { n: n - 1 }]),
        Del { .. } => unreachable!("first letter must not be a deletion"),
    }
}

/// Moves a dihedral letter right across one inversion: `r s -> s' r`.
fn swap_past_inversion(r: Generator, s: Generator) -> Generator {
    use Generator::{Inv, Refl, Rot};
    let Inv { i, n } = s else {
        unreachable!("second letter must be an inversion")
    };
    match r {
        Rot { .. } => {
            if i >= 2 {
                Inv { i: i - 1, n }
            } else {
                Inv { i: n, n }
            }
        }
        Refl { .. } => {
            if i < n {
                Inv { i: n - i, n }
            } else {
                Inv { i: n, n }
            }
        }
        _ => unreachable!("first letter must be dihedral"),
    }
}

/// Shortest word over `{c_n, a_n}` for every dihedral element, keyed by
/// the element's partial permutation.
fn shortest_dihedral_word(n: usize, target: &PartialPerm) -> Result<Vec<Generator>> {
    let gens = [Generator::Rot { n }, Generator::Refl { n }];
    let id = PartialPerm::identity(n)?;
    let mut seen = vec![(id, Vec::<Generator>::new())];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let (p, word) = seen[k].clone();
        if p == *target {
            return Ok(word);
        }
        for g in gens {
            let q = p.mul(&g.eval()?);
            if !seen.iter().any(|(x, _)| *x == q) {
                let mut wq = word.clone();
                wq.push(g);
                seen.push((q, wq));
                queue.push_back(seen.len() - 1);
            }
        }
    }
    Err(invalid("element is not dihedral"))
}

/// Rewrites a word into the shape (deletions)(inversions)(dihedral letters)
/// with the same evaluation.
///
/// Deletions are bubbled leftward with R1 to R7 and R10 to R12, then
/// dihedral letters are bubbled rightward with R8, R9, R13 and R14, and the
/// dihedral tail is collapsed to a shortest word for its group element.
/// No step increases the number of deletion and inversion letters.
pub fn rewrite_deletions_first(w: &Word) -> Result<Word> {
    let mut letters = w.letters.clone();

    // deletions to the front
    let mut prefix = 0;
    loop {
        while prefix < letters.len() && letters[prefix].is_deletion() {
            prefix += 1;
        }
        let Some(mut k) = (prefix..letters.len()).find(|&k| letters[k].is_deletion()) else {
            break;
        };
        while k > prefix {
            let (d, tail) = swap_past_deletion(letters[k - 1], letters[k]);
            let mut replacement = vec![d];
            replacement.extend(tail);
            letters.splice(k - 1..=k, replacement);
            k -= 1;
        }
    }

    // dihedral letters behind the inversions
    let mut changed = true;
    while changed {
        changed = false;
        for k in prefix..letters.len().saturating_sub(1) {
            if letters[k].is_dihedral() && letters[k + 1].is_inversion() {
                let s = swap_past_inversion(letters[k], letters[k + 1]);
                letters[k + 1] = letters[k];
                letters[k] = s;
                changed = true;
            }
        }
    }

    let tail_start = letters
        .iter()
        .position(Generator::is_dihedral)
        .unwrap_or(letters.len());
    if tail_start < letters.len() {
        let n = letters[tail_start].source();
        let tail = Word::from_vec_unchecked(letters.split_off(tail_start));
        let element = tail.eval(n)?;
        letters.extend(shortest_dihedral_word(n, &element)?);
    }
    Ok(Word { letters })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genome::RegionAlphabet;
    use alloc::string::ToString;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn eval_generator_examples() {
        let d = Generator::del(2, 5).unwrap().eval().unwrap();
        assert_eq!(
            d,
            PartialPerm::from_pairs(5, 4, &[(1, 1), (3, 2), (4, 3), (5, 4)]).unwrap()
        );
        let a4 = Generator::refl(4).unwrap().eval().unwrap();
        assert_eq!(
            a4,
            PartialPerm::from_pairs(4, 4, &[(1, 4), (4, 1), (2, 3), (3, 2)]).unwrap()
        );
        let a5 = Generator::refl(5).unwrap().eval().unwrap();
        assert_eq!(a5.get(3), Some(3));
        assert_eq!(
            Generator::inv(1, 1).unwrap().eval().unwrap(),
            PartialPerm::identity(1).unwrap()
        );
        assert_eq!(
            Generator::inv(4, 4).unwrap().eval().unwrap(),
            PartialPerm::transposition(4, 1, 4).unwrap()
        );
    }

    #[test]
    fn generator_validation() {
        assert!(Generator::inv(0, 3).is_err());
        assert!(Generator::inv(4, 3).is_err());
        assert!(Generator::del(1, 1).is_err());
        assert!(Generator::rot(0).is_err());
        assert!(Generator::rot(17).is_err());
    }

    #[test]
    fn word_tokens_round_trip() {
        let w = word("d12;12 d7;11 d4;10 d3;9 s2;8 c8 a8");
        assert_eq!(w.to_string(), "d12;12 d7;11 d4;10 d3;9 s2;8 c8 a8");
        assert!("x1;2".parse::<Word>().is_err());
        assert!("s1".parse::<Word>().is_err());
    }

    #[test]
    fn ill_typed_word_is_rejected() {
        let err = "d2;5 s1;5".parse::<Word>().unwrap_err();
        assert_eq!(
            err,
            Error::IllTypedWord {
                position: 1,
                expected: 4,
                found: 5
            }
        );
        assert!(word("s1;4").eval(5).is_err());
    }

    #[test]
    fn apply_to_frame_examples() {
        let a = RegionAlphabet::letters(12);
        let f = a.frame_from_chars("abcdefghijkl").unwrap();
        let out = apply_to_frame(&f, &word("d12;12 d7;11 d4;10 d3;9 s2;8")).unwrap();
        assert_eq!(a.render(&out, ""), "aebfhijk");
        assert_eq!(apply_to_frame(&f, &Word::empty()).unwrap(), f);
        let g = a.frame_from_chars("abcd").unwrap();
        assert_eq!(
            a.render(&apply_to_frame(&g, &word("s1;4")).unwrap(), ""),
            "bacd"
        );
    }

    #[test]
    fn relation_table_holds() {
        for n in 2..=8 {
            let table = relation_table(n).unwrap();
            assert!(!table.is_empty());
            for r in &table {
                assert_eq!(
                    r.lhs.eval(n).unwrap(),
                    r.rhs.eval(n).unwrap(),
                    "{} at n={}: {} = {}",
                    r.name,
                    n,
                    r.lhs,
                    r.rhs
                );
            }
        }
    }

    #[test]
    fn relation_table_contains_worked_instances() {
        let table = relation_table(5).unwrap();
        let has = |l: &str, r: &str| table.iter().any(|x| x.lhs == word(l) && x.rhs == word(r));
        assert!(has("s5;5 d5;5", "d1;5 c4"));
        assert!(has("s3;5 d2;5", "d2;5 s2;4"));
    }

    #[test]
    fn printed_r3_exponent_is_wrong() {
        // c_{n-1}^{n-1} is the identity, which would make s_{n;n} d_{1;n}
        // equal to a bare deletion
        let n = 6;
        let lhs = word("s6;6 d1;6").eval(n).unwrap();
        let mut printed = vec![Generator::Del { i: n, n }];
        printed.extend(rot_power(n - 1, n - 1));
        assert_ne!(Word::new(printed).unwrap().eval(n).unwrap(), lhs);
    }

    #[test]
    fn rewrite_examples() {
        assert_eq!(
            rewrite_deletions_first(&word("s5;5 d5;5")).unwrap(),
            word("d1;5 c4")
        );
        assert_eq!(
            rewrite_deletions_first(&word("s3;5 d2;5")).unwrap(),
            word("d2;5 s2;4")
        );
        assert_eq!(
            rewrite_deletions_first(&word("d2;5")).unwrap(),
            word("d2;5")
        );
        assert_eq!(
            rewrite_deletions_first(&Word::empty()).unwrap(),
            Word::empty()
        );
    }

    #[test]
    fn rewrite_collapses_dihedral_tail() {
        let w = word("c5 c5 c5 c5 c5 a5 a5 s2;5");
        let r = rewrite_deletions_first(&w).unwrap();
        assert_eq!(r, word("s2;5"));
    }

    /// No (deletions)(inversions)(dihedral) word of length <= 2 equals
    /// `s_{n;n} d_{1;n}` once `n >= 4`, so the full word length cannot be
    /// preserved by any deletions-first normal form.
    #[test]
    fn full_length_bound_is_unattainable_for_wraparound_deletion() {
        for n in 4..=7 {
            let target = word(&alloc::format!("s{n};{n} d1;{n}")).eval(n).unwrap();
            let mut candidates: Vec<Vec<Generator>> = Vec::new();
            for j in 1..=n {
                let d = Generator::Del { i: j, n };
                candidates.push(vec![d]);
                for i in 1..=n - 1 {
                    candidates.push(vec![d, Generator::Inv { i, n: n - 1 }]);
                }
                candidates.push(vec![d, Generator::Rot { n: n - 1 }]);
                candidates.push(vec![d, Generator::Refl { n: n - 1 }]);
                for k in 1..=n - 1 {
                    candidates.push(vec![d, Generator::Del { i: k, n: n - 1 }]);
                }
            }
            for c in candidates {
                let w = Word::new(c).unwrap();
                assert_ne!(w.eval(n).unwrap(), target, "{}", w);
            }
            let r = rewrite_deletions_first(&word(&alloc::format!("s{n};{n} d1;{n}"))).unwrap();
            assert_eq!(r.eval(n).unwrap(), target);
            assert_eq!(r.nondihedral_len(), 1);
        }
    }

    #[test]
    fn dihedral_letters_generate_dihedral_group() {
        for n in 3..=8 {
            let c = Generator::rot(n).unwrap().eval().unwrap();
            let a = Generator::refl(n).unwrap().eval().unwrap();
            let mut group = vec![PartialPerm::identity(n).unwrap()];
            let mut k = 0;
            while k < group.len() {
                for g in [c, a] {
                    let q = group[k].compose(&g).unwrap();
                    if !group.contains(&q) {
                        group.push(q);
                    }
                }
                k += 1;
            }
            assert_eq!(group.len(), 2 * n);

            // the frames they produce are exactly the genome's orbit
            let alpha = RegionAlphabet::letters(n);
            let regions: Vec<_> = (0..n as u16).map(crate::genome::Region).collect();
            let f = ReferenceFrame::new(regions).unwrap();
            let mut produced: Vec<ReferenceFrame> = group
                .iter()
                .map(|p| {
                    let mut out = vec![f.regions()[0]; n];
                    for (i, j) in p.pairs() {
                        out[j - 1] = f.regions()[i - 1];
                    }
                    ReferenceFrame::new(out).unwrap()
                })
                .collect();
            produced.sort();
            let orbit = crate::genome::canonicalize(&f).frames();
            assert_eq!(produced, orbit, "{}", alpha.render(&f, ""));
        }
    }
}
