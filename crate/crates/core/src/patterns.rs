//! Words, permutations and restricted patterns, together with the counting
//! engines for (restricted) subword occurrences and (vincular) permutation
//! pattern occurrences.
//!
//! Positions are 1-based throughout. An occurrence of a pattern of length `k`
//! in a host of length `n` is an increasing map `φ: [k] → [n]`; adjacency
//! constraints `i ∈ R` demand `φ(i+1) = φ(i) + 1` under the sentinels
//! `φ(0) = 0` and `φ(k+1) = n + 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::{BigUint, One, Zero};
use thiserror::Error;

/// Index of a letter within its [`Alphabet`].
pub type Letter = u8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("alphabet must not be empty")]
    EmptyAlphabet,
    #[error("alphabet declares letter {0:?} twice")]
    DuplicateLetter(char),
    #[error("alphabet has {0} letters; at most 256 are supported")]
    AlphabetTooLarge(usize),
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("letter index {index} is out of range for an alphabet of {size} letters")]
    LetterOutOfRange { index: usize, size: usize },
    #[error("adjacency index {index} lies outside [0, {len}]")]
    AdjacencyOutOfRange { index: usize, len: usize },
    #[error("{0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<usize>),
    #[error("malformed permutation {0:?}")]
    MalformedPermutation(String),
    #[error("sequences have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("sequence contains a repeated entry {0}")]
    RepeatedEntry(i64),
}

/// An ordered list of distinct letters. Declaration order is letter order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: &str) -> Result<Self, PatternError> {
        let letters: Vec<char> = letters.chars().collect();
        if letters.is_empty() {
            return Err(PatternError::EmptyAlphabet);
        }
        if letters.len() > usize::from(Letter::MAX) + 1 {
            return Err(PatternError::AlphabetTooLarge(letters.len()));
        }
        let mut seen = BTreeSet::new();
        for &c in &letters {
            if !seen.insert(c) {
                return Err(PatternError::DuplicateLetter(c));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn index_of(&self, c: char) -> Option<Letter> {
        self.letters
            .iter()
            .position(|&l| l == c)
            .map(|i| i as Letter)
    }

    /// Parses a string of alphabet characters into a word.
    pub fn word(&self, s: &str) -> Result<Word, PatternError> {
        s.chars()
            .map(|c| self.index_of(c).ok_or(PatternError::UnknownLetter(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    /// Fails if `w` uses a letter index this alphabet does not have.
    pub fn check(&self, w: &Word) -> Result<(), PatternError> {
        match w.0.iter().find(|&&l| usize::from(l) >= self.len()) {
            Some(&l) => Err(PatternError::LetterOutOfRange {
                index: usize::from(l),
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn render(&self, w: &Word) -> String {
        w.0.iter().map(|&l| self.letters[usize::from(l)]).collect()
    }
}

/// A finite word, stored as a sequence of alphabet indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The word `letter^n`.
    pub fn repeat(letter: Letter, n: usize) -> Self {
        Word(vec![letter; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self, PatternError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e > n || seen[e] {
                return Err(PatternError::NotAPermutation(entries));
            }
            seen[e] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for Permutation {
    type Err = PatternError;

    /// Accepts `43152` (single digits) or `10,2,1,...` (comma separated).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || PatternError::MalformedPermutation(s.to_string());
        let entries: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(entries)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() < 10 {
            for e in &self.0 {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// Anything that can serve as the body of a restricted pattern.
pub trait PatternBody: Clone + fmt::Debug + PartialEq + Eq {
    fn body_len(&self) -> usize;
}

impl PatternBody for Word {
    fn body_len(&self) -> usize {
        self.len()
    }
}

impl PatternBody for Permutation {
    fn body_len(&self) -> usize {
        self.len()
    }
}

/// A pattern body together with an adjacency set `R ⊆ [0, k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedPattern<B> {
    body: B,
    adjacency: BTreeSet<usize>,
}

pub type WordPattern = RestrictedPattern<Word>;
pub type VincularPattern = RestrictedPattern<Permutation>;

impl<B: PatternBody> RestrictedPattern<B> {
    pub fn new(body: B, adjacency: impl IntoIterator<Item = usize>) -> Result<Self, PatternError> {
        let len = body.body_len();
        let adjacency: BTreeSet<usize> = adjacency.into_iter().collect();
        if let Some(&index) = adjacency.iter().find(|&&i| i > len) {
            return Err(PatternError::AdjacencyOutOfRange { index, len });
        }
        Ok(RestrictedPattern { body, adjacency })
    }

    /// The pattern with `R = ∅`.
    pub fn plain(body: B) -> Self {
        RestrictedPattern {
            body,
            adjacency: BTreeSet::new(),
        }
    }

    /// The pattern with `R = [0, k]`.
    pub fn pinned(body: B) -> Self {
        let adjacency = (0..=body.body_len()).collect();
        RestrictedPattern { body, adjacency }
    }

    pub fn body(&self) -> &B {
        &self.body
    }

    pub fn adjacency(&self) -> &BTreeSet<usize> {
        &self.adjacency
    }

    pub fn len(&self) -> usize {
        self.body.body_len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Membership flags for `0..=k`.
    fn adjacency_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.len() + 1];
        for &i in &self.adjacency {
            mask[i] = true;
        }
        mask
    }

    /// Same body, adjacency set complemented within `[0, k]`.
    pub fn dual(&self) -> Self {
        let adjacency = (0..=self.len())
            .filter(|i| !self.adjacency.contains(i))
            .collect();
        RestrictedPattern {
            body: self.body.clone(),
            adjacency,
        }
    }
}

/// Free-function form of [`RestrictedPattern::dual`].
pub fn dual_pattern<B: PatternBody>(p: &RestrictedPattern<B>) -> RestrictedPattern<B> {
    p.dual()
}

/// The image `{φ(1) < … < φ(k)}` of an occurrence, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    positions: Vec<usize>,
}

impl Occurrence {
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }
}

impl From<Vec<usize>> for Occurrence {
    fn from(positions: Vec<usize>) -> Self {
        Occurrence { positions }
    }
}

/// Number of occurrences of `u` as a (scattered) subword of `v`.
pub fn subword_count(u: &Word, v: &Word) -> BigUint {
    let u = u.letters();
    // ways[i] = occurrences of u[..i] in the host prefix read so far
    let mut ways = vec![BigUint::zero(); u.len() + 1];
    ways[0] = BigUint::one();
    for &b in v.letters() {
        for i in (1..=u.len()).rev() {
            if u[i - 1] == b && !ways[i - 1].is_zero() {
                let prev = ways[i - 1].clone();
                ways[i] += prev;
            }
        }
    }
    ways.pop().unwrap_or_else(BigUint::one)
}

/// Greedy containment test, equivalent to `subword_count(u, v) > 0`.
pub fn is_subword(u: &Word, v: &Word) -> bool {
    let mut rest = u.letters().iter().peekable();
    for b in v.letters() {
        if rest.peek() == Some(&b) {
            rest.next();
        }
    }
    rest.peek().is_none()
}

/// Number of occurrences of the restricted pattern `p = (u, R)` in `v`.
pub fn restricted_count(p: &WordPattern, v: &Word) -> BigUint {
    let u = p.body().letters();
    let v = v.letters();
    let (k, n) = (u.len(), v.len());
    let pinned = p.adjacency_mask();

    // ending[j]: partial occurrences of u[..i] with φ(i) = j
    let mut ending = vec![BigUint::zero(); n + 1];
    ending[0] = BigUint::one();
    for i in 1..=k {
        let mut next = vec![BigUint::zero(); n + 1];
        if pinned[i - 1] {
            for j in 1..=n {
                if u[i - 1] == v[j - 1] {
                    next[j] = ending[j - 1].clone();
                }
            }
        } else {
            let mut below = BigUint::zero();
            for j in 1..=n {
                below += &ending[j - 1];
                if u[i - 1] == v[j - 1] {
                    next[j] = below.clone();
                }
            }
        }
        ending = next;
    }
    if pinned[k] {
        std::mem::take(&mut ending[n])
    } else {
        ending.into_iter().sum()
    }
}

/// Same value as [`restricted_count`], evaluated by the last-letter
/// recursion
///
/// `C(va; ub, R) = [k ∉ R]·C(v; ub, R) + [a = b]·C(v; u, R ∖ {k})`
///
/// where `k = |ub|`. Inner calls see `R ∩ [0, |u|]`, so a state is fully
/// described by the pattern prefix length and the host prefix length.
pub fn restricted_count_recursive(p: &WordPattern, v: &Word) -> BigUint {
    struct Pascal<'a> {
        u: &'a [Letter],
        v: &'a [Letter],
        pinned: Vec<bool>,
        memo: Vec<Option<BigUint>>,
    }

    impl Pascal<'_> {
        fn count(&mut self, i: usize, j: usize) -> BigUint {
            let slot = i * (self.v.len() + 1) + j;
            if let Some(hit) = &self.memo[slot] {
                return hit.clone();
            }
            let value = if i == 0 {
                // (ε, ∅) occurs once everywhere; (ε, {0}) only in ε
                if self.pinned[0] && j > 0 {
                    BigUint::zero()
                } else {
                    BigUint::one()
                }
            } else if j == 0 {
                BigUint::zero()
            } else {
                let mut total = BigUint::zero();
                if !self.pinned[i] {
                    total += self.count(i, j - 1);
                }
                if self.u[i - 1] == self.v[j - 1] {
                    total += self.count(i - 1, j - 1);
                }
                total
            };
            self.memo[slot] = Some(value.clone());
            value
        }
    }

    let mut engine = Pascal {
        u: p.body().letters(),
        v: v.letters(),
        pinned: p.adjacency_mask(),
        memo: vec![None; (p.len() + 1) * (v.len() + 1)],
    };
    engine.count(p.len(), v.len())
}

/// All occurrences of `p` in `v`, in lexicographic order of positions.
pub fn enumerate_occurrences(p: &WordPattern, v: &Word) -> Vec<Occurrence> {
    fn extend(
        u: &[Letter],
        v: &[Letter],
        pinned: &[bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Occurrence>,
    ) {
        let (i, k, n) = (chosen.len(), u.len(), v.len());
        let prev = chosen.last().copied().unwrap_or(0);
        if i == k {
            if !pinned[k] || prev == n {
                out.push(Occurrence::from(chosen.clone()));
            }
            return;
        }
        let last = n - (k - i - 1);
        let range = if pinned[i] {
            (prev + 1)..=(prev + 1).min(last)
        } else {
            (prev + 1)..=last
        };
        for j in range {
            if v[j - 1] == u[i] {
                chosen.push(j);
                extend(u, v, pinned, chosen, out);
                chosen.pop();
            }
        }
    }

    let mut out = Vec::new();
    let (u, v) = (p.body().letters(), v.letters());
    if u.len() <= v.len() {
        extend(u, v, &p.adjacency_mask(), &mut Vec::new(), &mut out);
    }
    out
}

/// Whether `s` and `t` have the same relative order.
pub fn order_isomorphic<T: Copy + Ord + Into<i64>>(s: &[T], t: &[T]) -> Result<bool, PatternError> {
    if s.len() != t.len() {
        return Err(PatternError::LengthMismatch(s.len(), t.len()));
    }
    for seq in [s, t] {
        let mut sorted: Vec<T> = seq.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(PatternError::RepeatedEntry(w[0].into()));
        }
    }
    Ok(same_shape(s, t))
}

fn same_shape<T: Ord>(s: &[T], t: &[T]) -> bool {
    (0..s.len()).all(|i| (0..i).all(|j| (s[j] < s[i]) == (t[j] < t[i])))
}

/// Lexicographic iterator over the `k`-subsets of `[n]`, 1-based.
#[derive(Debug, Clone)]
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (1..=k).collect());
        KSubsets { n, current }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        // rightmost slot that can still move right
        if let Some(i) = (0..k).rev().find(|&i| next[i] < self.n - (k - 1 - i)) {
            next[i] += 1;
            for t in i + 1..k {
                next[t] = next[t - 1] + 1;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Number of occurrences of the classical pattern `sigma` in `pi`.
pub fn pattern_count(sigma: &Permutation, pi: &Permutation) -> BigUint {
    let (s, host) = (sigma.entries(), pi.entries());
    let mut image = Vec::with_capacity(s.len());
    let mut total = BigUint::zero();
    for positions in KSubsets::new(host.len(), s.len()) {
        image.clear();
        image.extend(positions.iter().map(|&j| host[j - 1]));
        if same_shape(&image, s) {
            total += 1u32;
        }
    }
    total
}

/// Number of occurrences of the vincular pattern `p = (σ, R)` in `pi`.
pub fn vincular_count(p: &VincularPattern, pi: &Permutation) -> BigUint {
    fn extend(
        s: &[usize],
        host: &[usize],
        pinned: &[bool],
        chosen: &mut Vec<usize>,
        total: &mut BigUint,
    ) {
        let (i, k, n) = (chosen.len(), s.len(), host.len());
        let prev = chosen.last().copied().unwrap_or(0);
        if i == k {
            if !pinned[k] || prev == n {
                *total += 1u32;
            }
            return;
        }
        let last = n - (k - i - 1);
        let range = if pinned[i] {
            (prev + 1)..=(prev + 1).min(last)
        } else {
            (prev + 1)..=last
        };
        for j in range {
            let fits = chosen
                .iter()
                .zip(s)
                .all(|(&pos, &entry)| (host[pos - 1] < host[j - 1]) == (entry < s[i]));
            if fits {
                chosen.push(j);
                extend(s, host, pinned, chosen, total);
                chosen.pop();
            }
        }
    }

    let mut total = BigUint::zero();
    let (s, host) = (p.body().entries(), pi.entries());
    if s.len() <= host.len() {
        extend(s, host, &p.adjacency_mask(), &mut Vec::new(), &mut total);
    }
    total
}
