//! Brute-force reference implementations.
//!
//! Nothing here calls into the counting engines of [`crate::patterns`] or the
//! cover tables of [`crate::posets`]; the only shared input is the order
//! relation `leq` of a universe.

use itertools::Itertools;
use num::{BigUint, One, Zero};

use crate::patterns::{Permutation, RestrictedPattern, Word};
use crate::posets::PosetUniverse;

/// A host type that the oracle knows how to match against a pattern body.
pub trait OracleHost {
    fn host_len(&self) -> usize;
    /// Does the subsequence at `positions` (1-based, increasing) match `pattern`?
    fn matches_at(pattern: &Self, host: &Self, positions: &[usize]) -> bool;
}

impl OracleHost for Word {
    fn host_len(&self) -> usize {
        self.letters().len()
    }

    fn matches_at(pattern: &Self, host: &Self, positions: &[usize]) -> bool {
        positions
            .iter()
            .zip(pattern.letters())
            .all(|(&j, &a)| host.letters()[j - 1] == a)
    }
}

impl OracleHost for Permutation {
    fn host_len(&self) -> usize {
        self.entries().len()
    }

    fn matches_at(pattern: &Self, host: &Self, positions: &[usize]) -> bool {
        let s = pattern.entries();
        let image: Vec<usize> = positions.iter().map(|&j| host.entries()[j - 1]).collect();
        for i in 0..s.len() {
            for j in 0..s.len() {
                if (s[i] < s[j]) != (image[i] < image[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Counts occurrences by testing every increasing position sequence.
pub fn brute_count<B>(p: &RestrictedPattern<B>, host: &B) -> BigUint
where
    B: OracleHost + crate::patterns::PatternBody,
{
    let k = p.body().host_len();
    let n = host.host_len();
    let mut total = BigUint::zero();
    for positions in (1..=n).combinations(k) {
        if !B::matches_at(p.body(), host, &positions) {
            continue;
        }
        let mut phi = Vec::with_capacity(k + 2);
        phi.push(0);
        phi.extend_from_slice(&positions);
        phi.push(n + 1);
        if p.adjacency().iter().all(|&i| phi[i + 1] == phi[i] + 1) {
            total += 1u32;
        }
    }
    total
}

/// `x₀ < x₁ < … < x_ℓ` with every step a cover (universe indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturatedChain {
    pub steps: Vec<usize>,
}

/// `x₀ ≤ x₁ ≤ … ≤ x_d` (universe indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multichain {
    pub steps: Vec<usize>,
}

fn strictly_below(u: &PosetUniverse, a: usize, b: usize) -> bool {
    a != b && u.leq(a, b)
}

fn is_cover(u: &PosetUniverse, a: usize, b: usize) -> bool {
    strictly_below(u, a, b)
        && !(0..u.len()).any(|z| strictly_below(u, a, z) && strictly_below(u, z, b))
}

pub fn enumerate_saturated_chains(u: &PosetUniverse, x: usize, y: usize) -> Vec<SaturatedChain> {
    fn walk(u: &PosetUniverse, y: usize, path: &mut Vec<usize>, out: &mut Vec<SaturatedChain>) {
        let here = *path.last().unwrap();
        if here == y {
            out.push(SaturatedChain {
                steps: path.clone(),
            });
            return;
        }
        for z in 0..u.len() {
            if u.leq(z, y) && is_cover(u, here, z) {
                path.push(z);
                walk(u, y, path, out);
                path.pop();
            }
        }
    }

    let mut out = Vec::new();
    if u.leq(x, y) {
        walk(u, y, &mut vec![x], &mut out);
    }
    out
}

pub fn enumerate_multichains(u: &PosetUniverse, x: usize, y: usize, d: usize) -> Vec<Multichain> {
    fn walk(
        u: &PosetUniverse,
        y: usize,
        remaining: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Multichain>,
    ) {
        let here = *path.last().unwrap();
        if remaining == 1 {
            if u.leq(here, y) {
                path.push(y);
                out.push(Multichain {
                    steps: path.clone(),
                });
                path.pop();
            }
            return;
        }
        for z in 0..u.len() {
            if u.leq(here, z) && u.leq(z, y) {
                path.push(z);
                walk(u, y, remaining - 1, path, out);
                path.pop();
            }
        }
    }

    let mut out = Vec::new();
    if d == 0 {
        if x == y {
            out.push(Multichain { steps: vec![x] });
        }
    } else {
        walk(u, y, d, &mut vec![x], &mut out);
    }
    out
}

pub fn count_multichains(u: &PosetUniverse, x: usize, y: usize, d: usize) -> BigUint {
    BigUint::from(enumerate_multichains(u, x, y, d).len())
}

fn restrict(v: &Word, mask: u64) -> Vec<u8> {
    v.letters()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &a)| a)
        .collect()
}

fn positions(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

/// Pairs `(m₀ m₁ … m_{ℓ−1}, o₀)` obtained from every nested sequence of
/// index sets `o₀ ⊂ o₁ ⊂ … ⊂ o_ℓ = [n]`, one index per step, whose bottom
/// spells `u`. Each such sequence is a saturated chain from `u` to `v` in the
/// subword order together with compatible occurrences; `oᵢ₊₁ = oᵢ ∪ {mᵢ}`.
pub fn chain_occurrence_pairs(u: &Word, v: &Word, l: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn shrink(
        u: &Word,
        v: &Word,
        mask: u64,
        left: usize,
        removed: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        if left == 0 {
            if restrict(v, mask) == u.letters() {
                let added: Vec<usize> = removed.iter().rev().copied().collect();
                out.push((added, positions(mask)));
            }
            return;
        }
        for i in 0..v.letters().len() {
            if mask >> i & 1 == 1 {
                removed.push(i + 1);
                shrink(u, v, mask & !(1 << i), left - 1, removed, out);
                removed.pop();
            }
        }
    }

    let n = v.letters().len();
    assert!(n < 64, "host too long for the chain oracle");
    let mut out = Vec::new();
    if l <= n {
        shrink(u, v, (1u64 << n) - 1, l, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

pub fn count_chain_occurrence_pairs(u: &Word, v: &Word, l: usize) -> BigUint {
    BigUint::from(chain_occurrence_pairs(u, v, l).len())
}

/// Nested index sets `o₀ ⊆ o₁ ⊆ … ⊆ o_d = [n]` whose bottom spells `u`:
/// multichains from `u` to `v` with compatible occurrences.
pub fn count_multichain_occurrence_pairs(u: &Word, v: &Word, d: usize) -> BigUint {
    fn descend(u: &Word, v: &Word, mask: u64, left: usize) -> BigUint {
        if left == 0 {
            return if restrict(v, mask) == u.letters() {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        let mut total = BigUint::zero();
        // every submask of `mask`, including `mask` and 0
        let mut sub = mask;
        loop {
            total += descend(u, v, sub, left - 1);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        total
    }

    let n = v.letters().len();
    assert!(n < 64, "host too long for the multichain oracle");
    descend(u, v, (1u64 << n) - 1, d)
}
