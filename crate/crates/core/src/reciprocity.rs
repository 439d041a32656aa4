//! Mahler expansions of functions on words.
//!
//! Every `f : A* → Q` is uniquely `f = Σ_v c(v)·binom(·, v)`, i.e. `f = c ∗ P`.
//! For the counting function of a restricted pattern `p = (u, R)` the
//! coefficients are, up to sign, counts of the dual pattern:
//! `c(v) = (−1)^{|v|−|u|} · binom(v; u, [0,|u|] ∖ R)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num::{BigInt, BigUint, One, Zero};
use thiserror::Error;

use crate::algebra::{
    element_p, int, inverse, right_action, sign, AlgebraError, CoefficientTable, Rational,
};
use crate::patterns::{
    restricted_count, subword_count, vincular_count, Alphabet, PatternError, Permutation,
    VincularPattern, Word, WordPattern,
};
use crate::posets::{
    build_universe, permutations_of_length, Element, PosetError, PosetKind, PosetUniverse,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReciprocityError {
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("host has length {len}, but the expansion is only exact up to length {max}")]
    HostTooLong { len: usize, max: usize },
    #[error("truncation length {max} is shorter than the pattern ({len})")]
    TruncationTooShort { len: usize, max: usize },
    #[error("expected a universe of words")]
    NotAWordsUniverse,
    #[error("boolean functions need the alphabet \"01\", got {0:?}")]
    NonBinaryAlphabet(String),
    #[error("unknown boolean function {0:?} (expected xor, and or or)")]
    UnknownFunction(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpansionSource {
    Pattern(WordPattern),
    Function,
}

/// Coefficients of a Mahler expansion, exact for hosts up to `max_length`.
#[derive(Debug, Clone)]
pub struct MahlerExpansion {
    pub source: ExpansionSource,
    pub coefficients: CoefficientTable,
    pub max_length: usize,
}

impl MahlerExpansion {
    pub fn universe(&self) -> &Arc<PosetUniverse> {
        self.coefficients.universe()
    }

    /// Nonzero `(word, coefficient)` pairs in graded-lex order.
    pub fn nonzero(&self) -> Vec<(Word, Rational)> {
        let u = self.universe();
        self.coefficients
            .iter()
            .filter_map(|(i, c)| match u.element(i) {
                Element::Word(w) => Some((w.clone(), c.clone())),
                _ => None,
            })
            .collect()
    }

    pub fn coefficient_of(&self, v: &Word) -> Rational {
        self.universe()
            .word_index(v)
            .map(|i| self.coefficients.get(i))
            .unwrap_or_else(|| int(0))
    }
}

pub fn mahler_coefficient(p: &WordPattern, v: &Word) -> BigInt {
    if v.len() < p.len() {
        return BigInt::zero();
    }
    sign(v.len() - p.len()) * BigInt::from(restricted_count(&p.dual(), v))
}

fn words_universe(
    alphabet: &Alphabet,
    max_length: usize,
) -> Result<Arc<PosetUniverse>, PosetError> {
    build_universe(PosetKind::Words {
        alphabet: alphabet.clone(),
        max_length,
    })
    .map(Arc::new)
}

pub fn mahler_expansion(
    p: &WordPattern,
    alphabet: &Alphabet,
    max_length: usize,
) -> Result<MahlerExpansion, ReciprocityError> {
    alphabet.check(p.body())?;
    if max_length < p.len() {
        return Err(ReciprocityError::TruncationTooShort {
            len: p.len(),
            max: max_length,
        });
    }
    mahler_expansion_in(&words_universe(alphabet, max_length)?, p)
}

/// Expansion of `binom(·, p)` over an existing words universe; the universe's
/// maximum rank is the truncation length.
pub fn mahler_expansion_in(
    universe: &Arc<PosetUniverse>,
    p: &WordPattern,
) -> Result<MahlerExpansion, ReciprocityError> {
    let alphabet = universe
        .alphabet()
        .ok_or(ReciprocityError::NotAWordsUniverse)?;
    alphabet.check(p.body())?;
    let max_length = universe.max_rank();
    if max_length < p.len() {
        return Err(ReciprocityError::TruncationTooShort {
            len: p.len(),
            max: max_length,
        });
    }
    let coefficients = CoefficientTable::from_fn(universe, |i| match universe.element(i) {
        Element::Word(v) if v.len() >= p.len() => Rational::from_integer(mahler_coefficient(p, v)),
        _ => int(0),
    });
    Ok(MahlerExpansion {
        source: ExpansionSource::Pattern(p.clone()),
        coefficients,
        max_length,
    })
}

/// `Σ_v c(v) · binom(w, v)`.
pub fn evaluate_mahler(e: &MahlerExpansion, w: &Word) -> Result<Rational, ReciprocityError> {
    if w.len() > e.max_length {
        return Err(ReciprocityError::HostTooLong {
            len: w.len(),
            max: e.max_length,
        });
    }
    if let Some(alphabet) = e.universe().alphabet() {
        alphabet.check(w)?;
    }
    let mut total = Rational::zero();
    for (v, c) in e.nonzero() {
        if v.len() > w.len() {
            break;
        }
        let count = subword_count(&v, w);
        if !count.is_zero() {
            total += c * Rational::from_integer(BigInt::from(count));
        }
    }
    Ok(total)
}

/// `c = f ∗ P⁻¹` on the universe of `f`.
pub fn mahler_of_function(f: &CoefficientTable) -> Result<MahlerExpansion, ReciprocityError> {
    let u = f.universe();
    if u.alphabet().is_none() {
        return Err(ReciprocityError::NotAWordsUniverse);
    }
    let coefficients = right_action(f, &inverse(&element_p(u))?)?;
    Ok(MahlerExpansion {
        source: ExpansionSource::Function,
        coefficients,
        max_length: u.max_rank(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BooleanFunction {
    /// Odd number of ones.
    Xor,
    /// No zeros.
    And,
    /// At least one one.
    Or,
}

impl BooleanFunction {
    pub const ALL: [BooleanFunction; 3] = [
        BooleanFunction::Xor,
        BooleanFunction::And,
        BooleanFunction::Or,
    ];

    pub fn apply(self, w: &Word) -> bool {
        let ones = w.letters().iter().filter(|&&l| l == 1).count();
        match self {
            BooleanFunction::Xor => ones % 2 == 1,
            BooleanFunction::And => ones == w.len(),
            BooleanFunction::Or => ones > 0,
        }
    }
}

impl FromStr for BooleanFunction {
    type Err = ReciprocityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "xor" => Ok(BooleanFunction::Xor),
            "and" | "band" => Ok(BooleanFunction::And),
            "or" | "bor" => Ok(BooleanFunction::Or),
            other => Err(ReciprocityError::UnknownFunction(other.to_string())),
        }
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BooleanFunction::Xor => "xor",
            BooleanFunction::And => "and",
            BooleanFunction::Or => "or",
        })
    }
}

/// Tabulates `name` on a words universe over the alphabet `01`.
pub fn boolean_function(
    name: BooleanFunction,
    u: &Arc<PosetUniverse>,
) -> Result<CoefficientTable, ReciprocityError> {
    let alphabet = u.alphabet().ok_or(ReciprocityError::NotAWordsUniverse)?;
    if alphabet.letters() != ['0', '1'] {
        return Err(ReciprocityError::NonBinaryAlphabet(
            alphabet.letters().iter().collect(),
        ));
    }
    Ok(CoefficientTable::from_fn(u, |i| match u.element(i) {
        Element::Word(w) if name.apply(w) => int(1),
        _ => int(0),
    }))
}

/// Number of `k`-subsets `s₁ < … < s_k` of `[n]` with `s_{i+1} = s_i + 1` for
/// every `i ∈ R`, where `s₀ = 0` and `s_{k+1} = n + 1`.
///
/// The `k + 1` gaps `s_{i+1} − s_i − 1` are nonnegative and sum to `n − k`;
/// indices in `R` force their gap to zero, so the count is a
/// stars-and-bars number over the remaining gaps.
pub fn generalized_binomial(
    n: usize,
    k: usize,
    r: &BTreeSet<usize>,
) -> Result<BigUint, ReciprocityError> {
    if let Some(&index) = r.iter().find(|&&i| i > k) {
        return Err(PatternError::AdjacencyOutOfRange { index, len: k }.into());
    }
    if n < k {
        return Ok(BigUint::zero());
    }
    let free = k + 1 - r.len();
    let slack = n - k;
    Ok(match free {
        0 if slack == 0 => BigUint::one(),
        0 => BigUint::zero(),
        _ => num::integer::binomial(BigUint::from(slack + free - 1), BigUint::from(free - 1)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryViolation {
    pub n: usize,
    pub k: usize,
    pub r: BTreeSet<usize>,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CorollaryReport {
    pub checked: usize,
    pub violations: Vec<CorollaryViolation>,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Right-hand side `Σ_ℓ (−1)^{ℓ−k} binom(ℓ; k, Rᶜ) binom(n, ℓ)`.
pub fn corollary_rhs(n: usize, k: usize, r: &BTreeSet<usize>) -> Result<BigInt, ReciprocityError> {
    let complement: BTreeSet<usize> = (0..=k).filter(|i| !r.contains(i)).collect();
    let mut total = BigInt::zero();
    for l in k..=n {
        let term = BigInt::from(generalized_binomial(l, k, &complement)?)
            * num::integer::binomial(BigInt::from(n), BigInt::from(l));
        total += sign(l - k) * term;
    }
    Ok(total)
}

/// Checks the generalized-binomial expansion for all `n ≤ n_max`, `k ≤ n`
/// and `R ⊆ [0, k]`.
pub fn verify_corollary(n_max: usize) -> CorollaryReport {
    let mut report = CorollaryReport::default();
    for n in 0..=n_max {
        for k in 0..=n {
            for bits in 0u64..(1 << (k + 1)) {
                let r: BTreeSet<usize> = (0..=k).filter(|i| bits >> i & 1 == 1).collect();
                let lhs = BigInt::from(generalized_binomial(n, k, &r).expect("R within [0, k]"));
                let rhs = corollary_rhs(n, k, &r).expect("R within [0, k]");
                report.checked += 1;
                if lhs != rhs {
                    report
                        .violations
                        .push(CorollaryViolation { n, k, r, lhs, rhs });
                }
            }
        }
    }
    report
}

/// `(−1)^{|υ|−|σ|} · binom(υ; dual(p))`.
pub fn permutation_mahler_coefficient(p: &VincularPattern, upsilon: &Permutation) -> BigInt {
    if upsilon.len() < p.len() {
        return BigInt::zero();
    }
    sign(upsilon.len() - p.len()) * BigInt::from(vincular_count(&p.dual(), upsilon))
}

/// `Σ_υ c(υ) · binom(π, υ)` over all permutations `υ` with `|υ| ≤ |π|`.
pub fn permutation_reciprocity_sum(p: &VincularPattern, pi: &Permutation) -> BigInt {
    let mut total = BigInt::zero();
    for len in p.len()..=pi.len() {
        for upsilon in permutations_of_length(len) {
            let c = permutation_mahler_coefficient(p, &upsilon);
            if !c.is_zero() {
                total += c * BigInt::from(crate::patterns::pattern_count(&upsilon, pi));
            }
        }
    }
    total
}
