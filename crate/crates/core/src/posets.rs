//! Finite, graded truncations of the word, permutation, boolean and chain
//! posets.
//!
//! Elements are listed in graded-lexicographic order (ascending rank, then
//! lexicographic within a rank), so that `x ≤ y` implies `index(x) ≤ index(y)`
//! and every incidence element is an upper triangular matrix. Each truncation
//! is a down-set of the infinite poset, hence every interval is complete.

use std::collections::HashMap;
use std::fmt;

use num::Zero;
use thiserror::Error;

use crate::patterns::{is_subword, pattern_count, Alphabet, Permutation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("{what} = {requested} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        bound: usize,
    },
    #[error("element {0} is not in this universe")]
    NotInUniverse(String),
}

/// A finite subset of `[n]`, members sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subset(Vec<usize>);

impl Subset {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subset(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.0.iter().all(|m| other.0.binary_search(m).is_ok())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Word(Word),
    Perm(Permutation),
    Subset(Subset),
    Nat(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetKind {
    Words {
        alphabet: Alphabet,
        max_length: usize,
    },
    Permutations {
        max_length: usize,
    },
    Boolean {
        n: usize,
    },
    Chain {
        max: usize,
    },
}

impl PosetKind {
    pub fn name(&self) -> &'static str {
        match self {
            PosetKind::Words { .. } => "words",
            PosetKind::Permutations { .. } => "perms",
            PosetKind::Boolean { .. } => "boolean",
            PosetKind::Chain { .. } => "chain",
        }
    }
}

/// Size guards applied by [`build_universe_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniverseLimits {
    pub max_permutation_length: usize,
    pub max_elements: usize,
}

impl Default for UniverseLimits {
    fn default() -> Self {
        UniverseLimits {
            max_permutation_length: 6,
            max_elements: 4096,
        }
    }
}

/// `[lo, hi]` as universe indices in universe order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
    pub members: Vec<usize>,
}

impl Interval {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug)]
pub struct PosetUniverse {
    kind: PosetKind,
    elements: Vec<Element>,
    ranks: Vec<usize>,
    index: HashMap<Element, usize>,
    /// `upper[x]`: every `y ≥ x`, ascending.
    upper: Vec<Vec<usize>>,
    /// `pair_offset[x]`: position of `(x, x)` in the flat pair numbering.
    pair_offset: Vec<usize>,
    covers: Vec<Vec<usize>>,
}

pub fn build_universe(kind: PosetKind) -> Result<PosetUniverse, PosetError> {
    build_universe_with(kind, UniverseLimits::default())
}

pub fn build_universe_with(
    kind: PosetKind,
    limits: UniverseLimits,
) -> Result<PosetUniverse, PosetError> {
    let expected = universe_size(&kind, limits)?;
    if expected > limits.max_elements {
        return Err(PosetError::BoundExceeded {
            what: "universe size",
            requested: expected,
            bound: limits.max_elements,
        });
    }
    let elements: Vec<Element> = match &kind {
        PosetKind::Words {
            alphabet,
            max_length,
        } => (0..=*max_length)
            .flat_map(|len| words_of_length(alphabet.len(), len))
            .map(Element::Word)
            .collect(),
        PosetKind::Permutations { max_length } => (0..=*max_length)
            .flat_map(permutations_of_length)
            .map(Element::Perm)
            .collect(),
        PosetKind::Boolean { n } => (0..=*n)
            .flat_map(|k| crate::patterns::KSubsets::new(*n, k))
            .map(|s| Element::Subset(Subset(s)))
            .collect(),
        PosetKind::Chain { max } => (0..=*max).map(Element::Nat).collect(),
    };
    Ok(PosetUniverse::from_elements(kind, elements))
}

fn universe_size(kind: &PosetKind, limits: UniverseLimits) -> Result<usize, PosetError> {
    let too_big = |what, requested| PosetError::BoundExceeded {
        what,
        requested,
        bound: limits.max_elements,
    };
    match kind {
        PosetKind::Words {
            alphabet,
            max_length,
        } => {
            let mut total: usize = 0;
            let mut level: usize = 1;
            for _ in 0..=*max_length {
                total = total.saturating_add(level);
                level = level.saturating_mul(alphabet.len());
            }
            Ok(total)
        }
        PosetKind::Permutations { max_length } => {
            if *max_length > limits.max_permutation_length {
                return Err(PosetError::BoundExceeded {
                    what: "permutation length",
                    requested: *max_length,
                    bound: limits.max_permutation_length,
                });
            }
            let mut total: usize = 0;
            let mut level: usize = 1;
            for len in 0..=*max_length {
                level = level.saturating_mul(len.max(1));
                total = total.saturating_add(level);
            }
            Ok(total)
        }
        PosetKind::Boolean { n } => {
            if *n >= usize::BITS as usize - 1 {
                return Err(too_big("boolean universe size", usize::MAX));
            }
            Ok(1usize << n)
        }
        PosetKind::Chain { max } => Ok(max.saturating_add(1)),
    }
}

/// All words of length `len` over `size` letters, lexicographically.
pub fn words_of_length(size: usize, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut digits = vec![0u8; len];
    if size == 0 && len > 0 {
        return out;
    }
    loop {
        out.push(Word::new(digits.clone()));
        let Some(i) = (0..len).rev().find(|&i| usize::from(digits[i]) + 1 < size) else {
            return out;
        };
        digits[i] += 1;
        for d in &mut digits[i + 1..] {
            *d = 0;
        }
    }
}

/// All permutations of `[n]` in lexicographic order of one-line notation.
pub fn permutations_of_length(n: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::new(current.clone()).expect("rearrangement of 1..n"));
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let pivot = i - 1;
        let j = (i..n).rev().find(|&j| current[j] > current[pivot]).unwrap();
        current.swap(pivot, j);
        current[i..].reverse();
    }
}

impl PosetUniverse {
    fn from_elements(kind: PosetKind, elements: Vec<Element>) -> Self {
        let ranks: Vec<usize> = elements.iter().map(element_rank).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let len = elements.len();
        let upper: Vec<Vec<usize>> = (0..len)
            .map(|x| {
                (x..len)
                    .filter(|&y| ranks[x] <= ranks[y] && related(&elements[x], &elements[y]))
                    .collect()
            })
            .collect();
        let mut pair_offset = Vec::with_capacity(len + 1);
        let mut running = 0;
        for row in &upper {
            pair_offset.push(running);
            running += row.len();
        }
        pair_offset.push(running);

        // y covers x unless some x < z < y
        let mut covers = Vec::with_capacity(len);
        let mut blocked = vec![usize::MAX; len];
        for x in 0..len {
            for &z in &upper[x][1..] {
                for &y in &upper[z][1..] {
                    blocked[y] = x;
                }
            }
            covers.push(
                upper[x][1..]
                    .iter()
                    .copied()
                    .filter(|&y| blocked[y] != x)
                    .collect(),
            );
        }

        PosetUniverse {
            kind,
            elements,
            ranks,
            index,
            upper,
            pair_offset,
            covers,
        }
    }

    pub fn kind(&self) -> &PosetKind {
        &self.kind
    }

    pub fn alphabet(&self) -> Option<&Alphabet> {
        match &self.kind {
            PosetKind::Words { alphabet, .. } => Some(alphabet),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Like [`index_of`](Self::index_of), reporting a missing element.
    pub fn locate(&self, e: &Element) -> Result<usize, PosetError> {
        self.index_of(e)
            .ok_or_else(|| PosetError::NotInUniverse(format!("{e:?}")))
    }

    pub fn word_index(&self, w: &Word) -> Option<usize> {
        self.index.get(&Element::Word(w.clone())).copied()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn max_rank(&self) -> usize {
        self.ranks.last().copied().unwrap_or(0)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.upper[x].binary_search(&y).is_ok()
    }

    pub fn leq_elements(&self, x: &Element, y: &Element) -> Result<bool, PosetError> {
        Ok(self.leq(self.locate(x)?, self.locate(y)?))
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.covers[x].binary_search(&y).is_ok()
    }

    pub fn covers_elements(&self, x: &Element, y: &Element) -> Result<bool, PosetError> {
        Ok(self.covers(self.locate(x)?, self.locate(y)?))
    }

    /// Elements covering `x`, ascending.
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.covers[x]
    }

    /// Every `y ≥ x`, ascending; the first entry is `x` itself.
    pub fn upper(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn interval(&self, x: usize, y: usize) -> Interval {
        let members = if self.leq(x, y) {
            self.upper[x]
                .iter()
                .copied()
                .filter(|&z| z <= y && self.leq(z, y))
                .collect()
        } else {
            Vec::new()
        };
        Interval {
            lo: x,
            hi: y,
            members,
        }
    }

    pub fn interval_elements(&self, x: &Element, y: &Element) -> Result<Interval, PosetError> {
        Ok(self.interval(self.locate(x)?, self.locate(y)?))
    }

    /// Number of comparable pairs `(x, y)` with `x ≤ y`.
    pub fn pair_count(&self) -> usize {
        *self.pair_offset.last().unwrap_or(&0)
    }

    pub fn pair_offset(&self, x: usize) -> usize {
        self.pair_offset[x]
    }

    /// Flat position of `(x, y)`, if comparable.
    pub fn pair_index(&self, x: usize, y: usize) -> Option<usize> {
        self.upper[x]
            .binary_search(&y)
            .ok()
            .map(|p| self.pair_offset[x] + p)
    }

    /// Machine label: empty words and permutations render as `""`.
    pub fn label(&self, i: usize) -> String {
        match &self.elements[i] {
            Element::Word(w) => self.alphabet().map(|a| a.render(w)).unwrap_or_default(),
            Element::Perm(p) => p.to_string(),
            Element::Subset(s) => s.to_string(),
            Element::Nat(n) => n.to_string(),
        }
    }

    /// Human label: empty words and permutations render as `ε`.
    pub fn display_label(&self, i: usize) -> String {
        match &self.elements[i] {
            Element::Word(w) if w.is_empty() => "ε".to_string(),
            Element::Perm(p) if p.is_empty() => "ε".to_string(),
            _ => self.label(i),
        }
    }
}

fn element_rank(e: &Element) -> usize {
    match e {
        Element::Word(w) => w.len(),
        Element::Perm(p) => p.len(),
        Element::Subset(s) => s.len(),
        Element::Nat(n) => *n,
    }
}

fn related(x: &Element, y: &Element) -> bool {
    match (x, y) {
        (Element::Word(u), Element::Word(v)) => is_subword(u, v),
        (Element::Perm(s), Element::Perm(p)) => !pattern_count(s, p).is_zero(),
        (Element::Subset(s), Element::Subset(t)) => s.is_subset_of(t),
        (Element::Nat(i), Element::Nat(j)) => i <= j,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(letters: &str, max_length: usize) -> PosetUniverse {
        let alphabet = Alphabet::new(letters).unwrap();
        build_universe(PosetKind::Words {
            alphabet,
            max_length,
        })
        .unwrap()
    }

    fn labels(u: &PosetUniverse) -> Vec<String> {
        (0..u.len()).map(|i| u.label(i)).collect()
    }

    fn at(u: &PosetUniverse, label: &str) -> usize {
        (0..u.len()).find(|&i| u.label(i) == label).unwrap()
    }

    #[test]
    fn element_orders() {
        assert_eq!(
            labels(&words("ab", 2)),
            ["", "a", "b", "aa", "ab", "ba", "bb"]
        );
        let perms = build_universe(PosetKind::Permutations { max_length: 2 }).unwrap();
        assert_eq!(labels(&perms), ["", "1", "12", "21"]);
        let boolean = build_universe(PosetKind::Boolean { n: 2 }).unwrap();
        assert_eq!(labels(&boolean), ["{}", "{1}", "{2}", "{1,2}"]);
        let chain = build_universe(PosetKind::Chain { max: 3 }).unwrap();
        assert_eq!(labels(&chain), ["0", "1", "2", "3"]);
    }

    #[test]
    fn sizes() {
        assert_eq!(words("ab", 4).len(), 31);
        assert_eq!(words("abc", 3).len(), 40);
        let perms = build_universe(PosetKind::Permutations { max_length: 4 }).unwrap();
        assert_eq!(perms.len(), 34);
        assert_eq!(
            build_universe(PosetKind::Boolean { n: 5 }).unwrap().len(),
            32
        );
    }

    #[test]
    fn bounds_are_enforced() {
        let err = build_universe(PosetKind::Permutations { max_length: 7 }).unwrap_err();
        assert!(matches!(
            err,
            PosetError::BoundExceeded {
                requested: 7,
                bound: 6,
                ..
            }
        ));
        let alphabet = Alphabet::new("abcd").unwrap();
        assert!(build_universe(PosetKind::Words {
            alphabet,
            max_length: 8
        })
        .is_err());
        assert!(build_universe(PosetKind::Boolean { n: 20 }).is_err());
    }

    #[test]
    fn order_and_cover_examples() {
        let u = words("ab", 4);
        assert!(u.leq(at(&u, "ab"), at(&u, "aaba")));
        assert!(!u.leq(at(&u, "b"), at(&u, "aa")));
        assert!(u.covers(at(&u, "a"), at(&u, "ab")));
        assert!(!u.covers(at(&u, "a"), at(&u, "aba")));

        let perms = build_universe(PosetKind::Permutations { max_length: 3 }).unwrap();
        assert!(perms.leq(at(&perms, "12"), at(&perms, "231")));
        assert!(!perms.leq(at(&perms, "21"), at(&perms, "123")));

        let boolean = build_universe(PosetKind::Boolean { n: 2 }).unwrap();
        assert!(boolean.covers(at(&boolean, "{1}"), at(&boolean, "{1,2}")));
        let missing = Element::Word(Word::new(vec![0; 9]));
        assert!(u.leq_elements(&missing, &missing).is_err());
    }

    #[test]
    fn interval_examples() {
        let u = words("ab", 3);
        let iv = u.interval(at(&u, "a"), at(&u, "aba"));
        let got: Vec<String> = iv.members.iter().map(|&i| u.label(i)).collect();
        assert_eq!(got, ["a", "aa", "ab", "ba", "aba"]);
        let x = at(&u, "bab");
        assert_eq!(u.interval(x, x).members, vec![x]);
        assert!(u.interval(at(&u, "b"), at(&u, "aa")).is_empty());
    }

    #[test]
    fn word_hasse_diagram_matches_figure() {
        let u = words("ab", 3);
        let drawn = [
            ("", "a"),
            ("", "b"),
            ("a", "aa"),
            ("a", "ab"),
            ("a", "ba"),
            ("b", "ab"),
            ("b", "ba"),
            ("b", "bb"),
            ("aa", "aaa"),
            ("aa", "aab"),
            ("aa", "aba"),
            ("aa", "baa"),
            ("ab", "aab"),
            ("ab", "aba"),
            ("ab", "abb"),
            ("ab", "bab"),
            ("ba", "aba"),
            ("ba", "baa"),
            ("ba", "bab"),
            ("ba", "bba"),
            ("bb", "abb"),
            ("bb", "bab"),
            ("bb", "bba"),
            ("bb", "bbb"),
        ];
        let mut expected: Vec<(usize, usize)> =
            drawn.iter().map(|(x, y)| (at(&u, x), at(&u, y))).collect();
        expected.sort_unstable();
        let got: Vec<(usize, usize)> = (0..u.len())
            .flat_map(|x| u.upper_covers(x).iter().map(move |&y| (x, y)))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn permutation_hasse_diagram_matches_figure() {
        let u = build_universe(PosetKind::Permutations { max_length: 3 }).unwrap();
        let drawn = [
            ("", "1"),
            ("1", "12"),
            ("1", "21"),
            ("12", "123"),
            ("12", "132"),
            ("12", "213"),
            ("12", "231"),
            ("12", "312"),
            ("21", "132"),
            ("21", "213"),
            ("21", "231"),
            ("21", "312"),
            ("21", "321"),
        ];
        let mut expected: Vec<(usize, usize)> =
            drawn.iter().map(|(x, y)| (at(&u, x), at(&u, y))).collect();
        expected.sort_unstable();
        let got: Vec<(usize, usize)> = (0..u.len())
            .flat_map(|x| u.upper_covers(x).iter().map(move |&y| (x, y)))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn covers_are_graded() {
        let universes = [
            words("ab", 4),
            build_universe(PosetKind::Permutations { max_length: 4 }).unwrap(),
            build_universe(PosetKind::Boolean { n: 5 }).unwrap(),
            build_universe(PosetKind::Chain { max: 6 }).unwrap(),
        ];
        for u in &universes {
            for x in 0..u.len() {
                for y in 0..u.len() {
                    let graded = u.leq(x, y) && u.rank(y) == u.rank(x) + 1;
                    assert_eq!(u.covers(x, y), graded, "{} {}", u.label(x), u.label(y));
                    assert_eq!(u.leq(x, y), !u.interval(x, y).is_empty());
                    if u.leq(x, y) {
                        assert!(u.rank(x) <= u.rank(y));
                        assert!(x <= y);
                    }
                }
            }
        }
    }

    #[test]
    fn pair_indexing_is_dense() {
        let u = words("ab", 3);
        let mut seen = vec![false; u.pair_count()];
        for x in 0..u.len() {
            for &y in u.upper(x) {
                let p = u.pair_index(x, y).unwrap();
                assert!(!seen[p]);
                seen[p] = true;
            }
        }
        assert!(seen.into_iter().all(|s| s));
        assert_eq!(u.display_label(0), "ε");
    }
}
