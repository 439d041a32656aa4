//! The incidence algebra of a [`PosetUniverse`] over the rationals.
//!
//! An [`IncidenceElement`] stores one exact rational per comparable pair
//! `(x, y)`, laid out row by row in the universe's pair numbering. Reads of
//! incomparable pairs return zero.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

use crate::patterns::{pattern_count, subword_count};
use crate::posets::{Element, PosetError, PosetUniverse};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live in different universes")]
    UniverseMismatch,
    #[error("not invertible: diagonal entry at {element} is zero")]
    ZeroDiagonal { element: String },
    #[error("exponential needs a zero diagonal, but the entry at {element} is nonzero")]
    NotNilpotent { element: String },
    #[error("entry ({row}, {col}) is nonzero but the pair is not comparable")]
    IncomparableEntry { row: usize, col: usize },
    #[error("expected a {expected}x{expected} matrix")]
    ShapeMismatch { expected: usize },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn same_universe(a: &Arc<PosetUniverse>, b: &Arc<PosetUniverse>) -> Result<(), AlgebraError> {
    if Arc::ptr_eq(a, b) {
        Ok(())
    } else {
        Err(AlgebraError::UniverseMismatch)
    }
}

#[derive(Debug, Clone)]
pub struct IncidenceElement {
    universe: Arc<PosetUniverse>,
    entries: Vec<Rational>,
}

impl PartialEq for IncidenceElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) && self.entries == other.entries
    }
}

impl IncidenceElement {
    pub fn zero(universe: &Arc<PosetUniverse>) -> Self {
        IncidenceElement {
            universe: Arc::clone(universe),
            entries: vec![Rational::zero(); universe.pair_count()],
        }
    }

    /// Builds an element from its values on comparable pairs (indices).
    pub fn from_fn(
        universe: &Arc<PosetUniverse>,
        mut f: impl FnMut(usize, usize) -> Rational,
    ) -> Self {
        let mut entries = Vec::with_capacity(universe.pair_count());
        for x in 0..universe.len() {
            for &y in universe.upper(x) {
                entries.push(f(x, y));
            }
        }
        IncidenceElement {
            universe: Arc::clone(universe),
            entries,
        }
    }

    /// Inverse of [`to_dense`](Self::to_dense); rejects nonzero entries on
    /// incomparable pairs.
    pub fn from_dense(
        universe: &Arc<PosetUniverse>,
        rows: &[Vec<Rational>],
    ) -> Result<Self, AlgebraError> {
        let n = universe.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::ShapeMismatch { expected: n });
        }
        for (row, values) in rows.iter().enumerate() {
            for (col, v) in values.iter().enumerate() {
                if !v.is_zero() && !universe.leq(row, col) {
                    return Err(AlgebraError::IncomparableEntry { row, col });
                }
            }
        }
        Ok(Self::from_fn(universe, |x, y| rows[x][y].clone()))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let n = self.universe.len();
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for (x, row) in rows.iter_mut().enumerate() {
            let off = self.universe.pair_offset(x);
            for (p, &y) in self.universe.upper(x).iter().enumerate() {
                row[y] = self.entries[off + p].clone();
            }
        }
        rows
    }

    pub fn universe(&self) -> &Arc<PosetUniverse> {
        &self.universe
    }

    /// Entry at `(x, y)`; zero when `x ≰ y`.
    pub fn get(&self, x: usize, y: usize) -> Rational {
        self.universe
            .pair_index(x, y)
            .map(|p| self.entries[p].clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn get_elements(&self, x: &Element, y: &Element) -> Result<Rational, AlgebraError> {
        Ok(self.get(self.universe.locate(x)?, self.universe.locate(y)?))
    }

    fn diagonal(&self, x: usize) -> &Rational {
        &self.entries[self.universe.pair_offset(x)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Applies `f(x, y, value)` to every stored entry.
    pub fn map(&self, mut f: impl FnMut(usize, usize, &Rational) -> Rational) -> Self {
        let u = &self.universe;
        let mut entries = Vec::with_capacity(self.entries.len());
        for x in 0..u.len() {
            let off = u.pair_offset(x);
            for (p, &y) in u.upper(x).iter().enumerate() {
                entries.push(f(x, y, &self.entries[off + p]));
            }
        }
        IncidenceElement {
            universe: Arc::clone(u),
            entries,
        }
    }
}

pub fn delta(u: &Arc<PosetUniverse>) -> IncidenceElement {
    IncidenceElement::from_fn(u, |x, y| if x == y { int(1) } else { int(0) })
}

pub fn zeta(u: &Arc<PosetUniverse>) -> IncidenceElement {
    IncidenceElement::from_fn(u, |_, _| int(1))
}

pub fn eta(u: &Arc<PosetUniverse>) -> IncidenceElement {
    IncidenceElement::from_fn(u, |x, y| if u.covers(x, y) { int(1) } else { int(0) })
}

/// `ζ⁻¹`.
pub fn mobius(u: &Arc<PosetUniverse>) -> IncidenceElement {
    inverse(&zeta(u)).expect("zeta has a unit diagonal")
}

/// Occurrence counts: subwords, classical patterns, `binom(j, i)` on the
/// chain, and `ζ` on a boolean algebra (each subset occurs once in a superset).
pub fn element_p(u: &Arc<PosetUniverse>) -> IncidenceElement {
    IncidenceElement::from_fn(u, |x, y| occurrence_value(u, x, y))
}

/// `P` restricted to cover pairs.
pub fn element_h(u: &Arc<PosetUniverse>) -> IncidenceElement {
    IncidenceElement::from_fn(u, |x, y| {
        if u.covers(x, y) {
            occurrence_value(u, x, y)
        } else {
            int(0)
        }
    })
}

fn occurrence_value(u: &PosetUniverse, x: usize, y: usize) -> Rational {
    let count = match (u.element(x), u.element(y)) {
        (Element::Word(a), Element::Word(b)) => BigInt::from(subword_count(a, b)),
        (Element::Perm(a), Element::Perm(b)) => BigInt::from(pattern_count(a, b)),
        (Element::Nat(i), Element::Nat(j)) => {
            num::integer::binomial(BigInt::from(*j), BigInt::from(*i))
        }
        _ => BigInt::one(),
    };
    Rational::from_integer(count)
}

/// Diagonal element with entry `d^rank(x)` at `(x, x)`.
pub fn diagonal_d(u: &Arc<PosetUniverse>, d: &Rational) -> IncidenceElement {
    IncidenceElement::from_fn(u, |x, y| {
        if x == y {
            num::pow(d.clone(), u.rank(x))
        } else {
            int(0)
        }
    })
}

pub fn add(f: &IncidenceElement, g: &IncidenceElement) -> Result<IncidenceElement, AlgebraError> {
    same_universe(&f.universe, &g.universe)?;
    let entries = f
        .entries
        .iter()
        .zip(&g.entries)
        .map(|(a, b)| a + b)
        .collect();
    Ok(IncidenceElement {
        universe: Arc::clone(&f.universe),
        entries,
    })
}

pub fn scale(c: &Rational, f: &IncidenceElement) -> IncidenceElement {
    IncidenceElement {
        universe: Arc::clone(&f.universe),
        entries: f.entries.iter().map(|a| c * a).collect(),
    }
}

/// `(FG)(x, y) = Σ_{x ≤ z ≤ y} F(x, z) G(z, y)`.
pub fn convolve(
    f: &IncidenceElement,
    g: &IncidenceElement,
) -> Result<IncidenceElement, AlgebraError> {
    same_universe(&f.universe, &g.universe)?;
    let u = &f.universe;
    let mut entries = vec![Rational::zero(); u.pair_count()];
    let mut slot = vec![0usize; u.len()];
    for x in 0..u.len() {
        let row = u.upper(x);
        let off = u.pair_offset(x);
        for (p, &y) in row.iter().enumerate() {
            slot[y] = p;
        }
        for (pz, &z) in row.iter().enumerate() {
            let left = &f.entries[off + pz];
            if left.is_zero() {
                continue;
            }
            let zoff = u.pair_offset(z);
            for (q, &y) in u.upper(z).iter().enumerate() {
                let right = &g.entries[zoff + q];
                if !right.is_zero() {
                    entries[off + slot[y]] += left * right;
                }
            }
        }
    }
    Ok(IncidenceElement {
        universe: Arc::clone(u),
        entries,
    })
}

/// Two-sided inverse by the triangular recursion
/// `G(x, y) = (δ(x, y) − Σ_{x ≤ z < y} G(x, z) F(z, y)) / F(y, y)`.
pub fn inverse(f: &IncidenceElement) -> Result<IncidenceElement, AlgebraError> {
    let u = &f.universe;
    if let Some(x) = (0..u.len()).find(|&x| f.diagonal(x).is_zero()) {
        return Err(AlgebraError::ZeroDiagonal {
            element: u.display_label(x),
        });
    }
    let mut entries = vec![Rational::zero(); u.pair_count()];
    let mut slot = vec![0usize; u.len()];
    for x in 0..u.len() {
        let row = u.upper(x);
        let off = u.pair_offset(x);
        for (p, &y) in row.iter().enumerate() {
            slot[y] = p;
        }
        // partial[p] accumulates Σ G(x, z) F(z, row[p]) over finished z
        let mut partial = vec![Rational::zero(); row.len()];
        for (p, &y) in row.iter().enumerate() {
            let target = if p == 0 { int(1) } else { int(0) };
            let g = (target - &partial[p]) / f.diagonal(y);
            if !g.is_zero() {
                let yoff = u.pair_offset(y);
                for (q, &t) in u.upper(y).iter().enumerate().skip(1) {
                    let step = &f.entries[yoff + q];
                    if !step.is_zero() {
                        partial[slot[t]] += &g * step;
                    }
                }
            }
            entries[off + p] = g;
        }
    }
    Ok(IncidenceElement {
        universe: Arc::clone(u),
        entries,
    })
}

/// `F^d`; negative exponents go through [`inverse`].
pub fn power(f: &IncidenceElement, d: i64) -> Result<IncidenceElement, AlgebraError> {
    let base = if d < 0 { inverse(f)? } else { f.clone() };
    let mut exponent = d.unsigned_abs();
    let mut result = delta(&f.universe);
    let mut square = base;
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = convolve(&result, &square)?;
        }
        exponent >>= 1;
        if exponent > 0 {
            square = convolve(&square, &square)?;
        }
    }
    Ok(result)
}

/// `Σ_ℓ F^ℓ / ℓ!` for an element with zero diagonal. On a graded
/// truncation `F^ℓ` vanishes once `ℓ` exceeds the maximum rank.
pub fn exponential(f: &IncidenceElement) -> Result<IncidenceElement, AlgebraError> {
    let u = &f.universe;
    if let Some(x) = (0..u.len()).find(|&x| !f.diagonal(x).is_zero()) {
        return Err(AlgebraError::NotNilpotent {
            element: u.display_label(x),
        });
    }
    let mut sum = delta(u);
    let mut term = delta(u);
    for l in 1..=u.max_rank() {
        term = scale(
            &Rational::new(BigInt::one(), BigInt::from(l)),
            &convolve(&term, f)?,
        );
        if term.is_zero() {
            break;
        }
        sum = add(&sum, &term)?;
    }
    Ok(sum)
}

/// A function from universe elements to the rationals; absent keys are zero.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    universe: Arc<PosetUniverse>,
    values: BTreeMap<usize, Rational>,
}

impl PartialEq for CoefficientTable {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) && self.values == other.values
    }
}

impl CoefficientTable {
    pub fn new(universe: &Arc<PosetUniverse>) -> Self {
        CoefficientTable {
            universe: Arc::clone(universe),
            values: BTreeMap::new(),
        }
    }

    pub fn from_fn(universe: &Arc<PosetUniverse>, mut f: impl FnMut(usize) -> Rational) -> Self {
        let mut table = Self::new(universe);
        for x in 0..universe.len() {
            table.set(x, f(x));
        }
        table
    }

    pub fn universe(&self) -> &Arc<PosetUniverse> {
        &self.universe
    }

    pub fn get(&self, x: usize) -> Rational {
        self.values.get(&x).cloned().unwrap_or_else(Rational::zero)
    }

    /// Stores `value`; zero removes the key.
    pub fn set(&mut self, x: usize, value: Rational) {
        assert!(x < self.universe.len(), "index {x} outside universe");
        if value.is_zero() {
            self.values.remove(&x);
        } else {
            self.values.insert(x, value);
        }
    }

    /// Nonzero entries in universe order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.values.iter().map(|(&x, v)| (x, v))
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }
}

/// `(f ∗ F)(y) = Σ_{x ≤ y} f(x) F(x, y)`.
pub fn right_action(
    f: &CoefficientTable,
    big_f: &IncidenceElement,
) -> Result<CoefficientTable, AlgebraError> {
    same_universe(&f.universe, &big_f.universe)?;
    let u = &f.universe;
    let mut acc = vec![Rational::zero(); u.len()];
    for (x, fx) in f.iter() {
        let off = u.pair_offset(x);
        for (p, &y) in u.upper(x).iter().enumerate() {
            let entry = &big_f.entries[off + p];
            if !entry.is_zero() {
                acc[y] += fx * entry;
            }
        }
    }
    let mut out = CoefficientTable::new(u);
    for (y, v) in acc.into_iter().enumerate() {
        out.set(y, v);
    }
    Ok(out)
}

/// `(−1)^{rank(y) − rank(x)} F(x, y)`.
pub fn alternate(f: &IncidenceElement) -> IncidenceElement {
    let u = Arc::clone(f.universe());
    f.map(|x, y, v| {
        if (u.rank(y) - u.rank(x)) % 2 == 1 {
            -v.clone()
        } else {
            v.clone()
        }
    })
}

/// Integer part of a rational known to be integral.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

/// Sign helper: `(−1)^e`.
pub fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}
