//! Verification suites: each check recomputes an identity exhaustively on a
//! finite universe and reports the first counterexample it meets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num::{BigInt, BigUint, Zero};
use thiserror::Error;

use crate::algebra::{
    alternate, convolve, delta, diagonal_d, element_h, element_p, eta, exponential, int, inverse,
    mobius, power, scale, zeta, AlgebraError, IncidenceElement, Rational,
};
use crate::oracle::{
    brute_count, count_chain_occurrence_pairs, count_multichains, enumerate_saturated_chains,
};
use crate::patterns::{
    pattern_count, restricted_count, restricted_count_recursive, vincular_count, Alphabet,
    PatternError, RestrictedPattern, Word,
};
use crate::posets::{
    build_universe, permutations_of_length, words_of_length, Element, PosetError, PosetKind,
    PosetUniverse,
};
use crate::reciprocity::{
    boolean_function, corollary_rhs, evaluate_mahler, generalized_binomial, mahler_expansion_in,
    mahler_of_function, permutation_mahler_coefficient, verify_corollary, BooleanFunction,
    ReciprocityError,
};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Reciprocity(#[from] ReciprocityError),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub size: String,
    pub passed: bool,
    /// First counterexample, or a short summary on success.
    pub detail: String,
}

impl Check {
    fn new(name: &str, size: impl Into<String>, failure: Option<String>, cases: usize) -> Self {
        let passed = failure.is_none();
        Check {
            name: name.to_string(),
            size: size.into(),
            passed,
            detail: failure.unwrap_or_else(|| format!("{cases} cases")),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} [{}] {}", self.name, self.size, self.detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Exp,
    Powers,
    Reciprocity,
    Boolean,
    Corollary,
    Oracle,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Exp,
        Suite::Powers,
        Suite::Reciprocity,
        Suite::Boolean,
        Suite::Corollary,
        Suite::Oracle,
    ];
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "exp" => Suite::Exp,
            "powers" => Suite::Powers,
            "reciprocity" => Suite::Reciprocity,
            "boolean" => Suite::Boolean,
            "corollary" => Suite::Corollary,
            "oracle" => Suite::Oracle,
            "all" => Suite::All,
            other => return Err(SuiteError::UnknownSuite(other.to_string())),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Exp => "exp",
            Suite::Powers => "powers",
            Suite::Reciprocity => "reciprocity",
            Suite::Boolean => "boolean",
            Suite::Corollary => "corollary",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        })
    }
}

pub fn universe(kind: PosetKind) -> Result<Arc<PosetUniverse>, SuiteError> {
    Ok(Arc::new(build_universe(kind)?))
}

pub fn words(alphabet: &str, max_length: usize) -> Result<Arc<PosetUniverse>, SuiteError> {
    universe(PosetKind::Words {
        alphabet: Alphabet::new(alphabet)?,
        max_length,
    })
}

fn describe(u: &PosetUniverse) -> String {
    let shape = match u.kind() {
        PosetKind::Words {
            alphabet,
            max_length,
        } => format!(
            "words({},{max_length})",
            alphabet.letters().iter().collect::<String>()
        ),
        PosetKind::Permutations { max_length } => format!("perms({max_length})"),
        PosetKind::Boolean { n } => format!("boolean({n})"),
        PosetKind::Chain { max } => format!("chain({max})"),
    };
    format!("{shape}, {} elements", u.len())
}

fn rank_gap(u: &PosetUniverse, x: usize, y: usize) -> usize {
    u.rank(y) - u.rank(x)
}

fn pow(base: &Rational, e: usize) -> Rational {
    num::pow(base.clone(), e)
}

fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).map(BigInt::from).product())
}

/// Compares `f` with `expected(x, y)` on every comparable pair.
fn mismatch(
    f: &IncidenceElement,
    what: &str,
    mut expected: impl FnMut(usize, usize) -> Rational,
) -> Option<String> {
    let u = f.universe();
    for x in 0..u.len() {
        for &y in u.upper(x) {
            let want = expected(x, y);
            let got = f.get(x, y);
            if got != want {
                return Some(format!(
                    "{what} at ({}, {}): got {got}, expected {want}",
                    u.display_label(x),
                    u.display_label(y)
                ));
            }
        }
    }
    None
}

fn differs(f: &IncidenceElement, g: &IncidenceElement, what: &str) -> Option<String> {
    mismatch(f, what, |x, y| g.get(x, y))
}

/// `P = exp(H)`.
pub fn check_exp_theorem(u: &Arc<PosetUniverse>) -> Result<Check, SuiteError> {
    let p = element_p(u);
    let failure = differs(&exponential(&element_h(u))?, &p, "exp(H) vs P");
    Ok(Check::new(
        "P = exp(H)",
        describe(u),
        failure,
        u.pair_count(),
    ))
}

/// `H^ℓ(x, y) = ℓ! · P(x, y)` when the rank gap is `ℓ`, zero otherwise.
pub fn check_power_lemma(u: &Arc<PosetUniverse>) -> Result<Check, SuiteError> {
    let h = element_h(u);
    let p = element_p(u);
    let mut failure = None;
    let mut hl = delta(u);
    for l in 0..=u.max_rank() + 1 {
        if l > 0 {
            hl = convolve(&hl, &h)?;
        }
        let fl = factorial(l);
        let what = format!("H^{l}");
        failure = mismatch(&hl, &what, |x, y| {
            if rank_gap(u, x, y) == l {
                &fl * p.get(x, y)
            } else {
                int(0)
            }
        });
        if failure.is_some() {
            break;
        }
    }
    Ok(Check::new(
        "H^l = l! P on rank gap l",
        describe(u),
        failure,
        u.pair_count() * (u.max_rank() + 2),
    ))
}

/// `P^d(x, y) = d^{gap} · P(x, y)` for each `d` in `ds`.
pub fn check_powers_of_p(
    u: &Arc<PosetUniverse>,
    ds: impl IntoIterator<Item = i64>,
) -> Result<Check, SuiteError> {
    let p = element_p(u);
    let mut failure = None;
    let mut cases = 0;
    for d in ds {
        let pd = power(&p, d)?;
        let base = int(d);
        failure = mismatch(&pd, &format!("P^{d}"), |x, y| {
            pow(&base, rank_gap(u, x, y)) * p.get(x, y)
        });
        cases += u.pair_count();
        if failure.is_some() {
            break;
        }
    }
    Ok(Check::new("P^d = d^gap P", describe(u), failure, cases))
}

/// `P⁻¹ = D₋₁ P D₋₁` and `P^d = D_{1/d} P D_d` for nonzero `d` in `ds`.
pub fn check_conjugation(
    u: &Arc<PosetUniverse>,
    ds: impl IntoIterator<Item = i64>,
) -> Result<Check, SuiteError> {
    let p = element_p(u);
    let conjugate = |a: &Rational, b: &Rational| -> Result<IncidenceElement, AlgebraError> {
        convolve(&convolve(&diagonal_d(u, a), &p)?, &diagonal_d(u, b))
    };
    let mut failure = differs(
        &inverse(&p)?,
        &conjugate(&int(-1), &int(-1))?,
        "P^-1 vs D_-1 P D_-1",
    );
    let mut cases = u.pair_count();
    for d in ds.into_iter().filter(|&d| d != 0) {
        if failure.is_some() {
            break;
        }
        let dd = int(d);
        let conj = conjugate(&dd.recip(), &dd)?;
        failure = differs(&power(&p, d)?, &conj, &format!("P^{d} vs D_1/{d} P D_{d}"));
        cases += u.pair_count();
    }
    Ok(Check::new("P^d = D_1/d P D_d", describe(u), failure, cases))
}

/// The alternating element `(−1)^{gap} P` is a two-sided inverse of `P`.
pub fn check_alternating_inverse(u: &Arc<PosetUniverse>) -> Result<Check, SuiteError> {
    let p = element_p(u);
    let alt = alternate(&p);
    let id = delta(u);
    let left = convolve(&alt, &p)?;
    let right = convolve(&p, &alt)?;
    let failure = differs(&left, &id, "alt(P) * P vs delta")
        .or_else(|| differs(&right, &id, "P * alt(P) vs delta"));
    Ok(Check::new(
        "(-1)^gap P inverts P",
        describe(u),
        failure,
        2 * u.pair_count(),
    ))
}

/// `exp(H)⁻¹ = exp(−H)`.
pub fn check_exp_inverse(u: &Arc<PosetUniverse>) -> Result<Check, SuiteError> {
    let h = element_h(u);
    let lhs = inverse(&exponential(&h)?)?;
    let rhs = exponential(&scale(&int(-1), &h))?;
    let failure = differs(&lhs, &rhs, "exp(H)^-1 vs exp(-H)");
    Ok(Check::new(
        "exp(H)^-1 = exp(-H)",
        describe(u),
        failure,
        u.pair_count(),
    ))
}

/// `exp(η) = ζ` on `B_n`.
pub fn check_boolean_exp(n: usize) -> Result<Check, SuiteError> {
    let u = universe(PosetKind::Boolean { n })?;
    let failure = differs(&exponential(&eta(&u))?, &zeta(&u), "exp(eta) vs zeta");
    Ok(Check::new(
        "exp(eta) = zeta",
        describe(&u),
        failure,
        u.pair_count(),
    ))
}

/// `μ(S, T) = (−1)^{|T∖S|}` on `B_n`, with `μ` computed as `ζ⁻¹`.
pub fn check_boolean_mobius(n: usize) -> Result<Check, SuiteError> {
    let u = universe(PosetKind::Boolean { n })?;
    let mu = inverse(&zeta(&u))?;
    let mut failure = mismatch(&mu, "zeta^-1", |x, y| pow(&int(-1), rank_gap(&u, x, y)));
    if failure.is_none() && mu != mobius(&u) {
        failure = Some("mobius() disagrees with zeta^-1".to_string());
    }
    Ok(Check::new(
        "mu(S,T) = (-1)^|T-S|",
        describe(&u),
        failure,
        u.pair_count(),
    ))
}

/// Saturated chains from `S` to `T ⊇ S` in `B_n` number `|T∖S|!`.
pub fn check_saturated_chain_counts(n: usize) -> Result<Check, SuiteError> {
    let u = universe(PosetKind::Boolean { n })?;
    let mut failure = None;
    'outer: for x in 0..u.len() {
        for &y in u.upper(x) {
            let got = enumerate_saturated_chains(&u, x, y).len();
            let want: usize = (1..=rank_gap(&u, x, y)).product();
            if got != want {
                failure = Some(format!(
                    "chains {} -> {}: got {got}, expected {want}",
                    u.display_label(x),
                    u.display_label(y)
                ));
                break 'outer;
            }
        }
    }
    Ok(Check::new(
        "saturated chains = l!",
        describe(&u),
        failure,
        u.pair_count(),
    ))
}

/// `d`-step multichains from `∅` to `[ℓ]` in `B_ℓ` number `d^ℓ`.
pub fn check_multichain_counts(l_max: usize, d_max: usize) -> Result<Check, SuiteError> {
    let mut failure = None;
    let mut cases = 0;
    'outer: for l in 0..=l_max {
        let u = universe(PosetKind::Boolean { n: l })?;
        for d in 1..=d_max {
            let got = count_multichains(&u, 0, u.len() - 1, d);
            let want = num::pow(BigUint::from(d), l);
            cases += 1;
            if got != want {
                failure = Some(format!("B_{l}, d = {d}: got {got}, expected {want}"));
                break 'outer;
            }
        }
    }
    Ok(Check::new(
        "multichains = d^l",
        format!("l <= {l_max}, d <= {d_max}"),
        failure,
        cases,
    ))
}

fn adjacency_sets(k: usize) -> impl Iterator<Item = BTreeSet<usize>> {
    (0u64..1 << (k + 1)).map(move |bits| (0..=k).filter(|i| bits >> i & 1 == 1).collect())
}

fn all_words(size: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|len| words_of_length(size, len))
        .collect()
}

/// Evaluated Mahler expansion of `(u, R)` equals `binom(w; u, R)` for all
/// `|u| ≤ pattern_max`, `R ⊆ [0, |u|]`, `|w| ≤ host_max`.
pub fn check_reciprocity_sweep(
    alphabet: &str,
    pattern_max: usize,
    host_max: usize,
) -> Result<Check, SuiteError> {
    let u = words(alphabet, host_max)?;
    let a = u.alphabet().expect("words universe").clone();
    let hosts = all_words(a.len(), host_max);
    let mut failure = None;
    let mut cases = 0;
    'outer: for body in all_words(a.len(), pattern_max.min(host_max)) {
        for r in adjacency_sets(body.len()) {
            let p = RestrictedPattern::new(body.clone(), r)?;
            let e = mahler_expansion_in(&u, &p)?;
            for w in &hosts {
                let got = evaluate_mahler(&e, w)?;
                let want = Rational::from_integer(restricted_count(&p, w).into());
                cases += 1;
                if got != want {
                    failure = Some(format!(
                        "pattern ({}, {:?}) on {:?}: got {got}, expected {want}",
                        a.render(&body),
                        p.adjacency(),
                        a.render(w)
                    ));
                    break 'outer;
                }
            }
        }
    }
    Ok(Check::new(
        "reciprocity (words)",
        format!("{alphabet}: |u| <= {pattern_max}, |w| <= {host_max}"),
        failure,
        cases,
    ))
}

/// `Σ_υ (−1)^{|υ|−|σ|} binom(υ; p*) binom(π, υ) = binom(π; p)` over
/// permutations, for `|σ| ≤ pattern_max`, `|π| ≤ host_max`.
pub fn check_permutation_reciprocity(
    pattern_max: usize,
    host_max: usize,
) -> Result<Check, SuiteError> {
    let u = universe(PosetKind::Permutations {
        max_length: host_max,
    })?;
    let p_elem = element_p(&u);
    let mut failure = None;
    let mut cases = 0;
    'outer: for k in 0..=pattern_max.min(host_max) {
        for sigma in permutations_of_length(k) {
            for r in adjacency_sets(k) {
                let p = RestrictedPattern::new(sigma.clone(), r)?;
                let coeff: Vec<BigInt> = (0..u.len())
                    .map(|i| match u.element(i) {
                        Element::Perm(v) => permutation_mahler_coefficient(&p, v),
                        _ => unreachable!("permutation universe"),
                    })
                    .collect();
                for y in 0..u.len() {
                    let Element::Perm(pi) = u.element(y) else {
                        unreachable!("permutation universe")
                    };
                    let mut got = Rational::zero();
                    for (x, c) in coeff.iter().enumerate() {
                        if !c.is_zero() && u.leq(x, y) {
                            got += Rational::from_integer(c.clone()) * p_elem.get(x, y);
                        }
                    }
                    let want = Rational::from_integer(vincular_count(&p, pi).into());
                    cases += 1;
                    if got != want {
                        failure = Some(format!(
                            "pattern ({sigma}, {:?}) on {}: got {got}, expected {want}",
                            p.adjacency(),
                            u.display_label(y)
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(Check::new(
        "reciprocity (perms)",
        format!("|sigma| <= {pattern_max}, |pi| <= {host_max}"),
        failure,
        cases,
    ))
}

/// Expected Mahler coefficient of a builtin boolean function at `w`.
pub fn boolean_mahler_closed_form(f: BooleanFunction, w: &Word) -> Rational {
    let k = w.len();
    let all = |letter| k > 0 && w.letters().iter().all(|&l| l == letter);
    match f {
        BooleanFunction::Xor if all(1) => pow(&int(-2), k - 1),
        BooleanFunction::And if w.letters().iter().all(|&l| l == 0) => pow(&int(-1), k),
        BooleanFunction::Or if all(1) => pow(&int(-1), k - 1),
        _ => int(0),
    }
}

/// `mahler_of_function` on `Words({0,1}, max_len)` recovers the closed forms.
pub fn check_mahler_boolean(f: BooleanFunction, max_len: usize) -> Result<Check, SuiteError> {
    let u = words("01", max_len)?;
    let e = mahler_of_function(&boolean_function(f, &u)?)?;
    let mut failure = None;
    for i in 0..u.len() {
        let Element::Word(w) = u.element(i) else {
            unreachable!("words universe")
        };
        let got = e.coefficient_of(w);
        let want = boolean_mahler_closed_form(f, w);
        if got != want {
            failure = Some(format!(
                "{f} at {}: got {got}, expected {want}",
                u.display_label(i)
            ));
            break;
        }
    }
    Ok(Check::new(
        &format!("mahler expansion of {f}"),
        describe(&u),
        failure,
        u.len(),
    ))
}

/// The generalized-binomial identity for `n ≤ n_max`, plus the worked case
/// `(4, 2, {1})` term by term when it is in range.
pub fn check_corollary(n_max: usize) -> Result<Check, SuiteError> {
    let report = verify_corollary(n_max);
    let mut failure = report.violations.first().map(|v| {
        format!(
            "(n, k, R) = ({}, {}, {:?}): {} vs {}",
            v.n, v.k, v.r, v.lhs, v.rhs
        )
    });
    if failure.is_none() && n_max >= 4 {
        let r = BTreeSet::from([1]);
        let complement = BTreeSet::from([0, 2]);
        let mut terms = Vec::new();
        for l in 2..=4usize {
            let t = BigInt::from(generalized_binomial(l, 2, &complement)?)
                * num::integer::binomial(BigInt::from(4), BigInt::from(l));
            terms.push(if l % 2 == 0 { t } else { -t });
        }
        let lhs = BigInt::from(generalized_binomial(4, 2, &r)?);
        let expected_terms = [6, -4, 1].map(BigInt::from);
        if lhs != BigInt::from(3) || terms != expected_terms || corollary_rhs(4, 2, &r)? != lhs {
            failure = Some(format!("worked case: {lhs} vs terms {terms:?}"));
        }
    }
    Ok(Check::new(
        "generalized binomial identity",
        format!("n <= {n_max}"),
        failure,
        report.checked,
    ))
}

/// `brute_count`, `restricted_count` and `restricted_count_recursive` agree.
pub fn check_word_oracle(
    alphabet: &str,
    pattern_max: usize,
    host_max: usize,
) -> Result<Check, SuiteError> {
    let a = Alphabet::new(alphabet)?;
    let hosts = all_words(a.len(), host_max);
    let mut failure = None;
    let mut cases = 0;
    'outer: for body in all_words(a.len(), pattern_max) {
        for r in adjacency_sets(body.len()) {
            let p = RestrictedPattern::new(body.clone(), r)?;
            for w in &hosts {
                let oracle = brute_count(&p, w);
                let dp = restricted_count(&p, w);
                let rec = restricted_count_recursive(&p, w);
                cases += 1;
                if dp != oracle || rec != oracle {
                    failure = Some(format!(
                        "pattern ({}, {:?}) on {:?}: oracle {oracle}, dp {dp}, recursive {rec}",
                        a.render(&body),
                        p.adjacency(),
                        a.render(w)
                    ));
                    break 'outer;
                }
            }
        }
    }
    Ok(Check::new(
        "oracle agreement (words)",
        format!("{alphabet}: |u| <= {pattern_max}, |w| <= {host_max}"),
        failure,
        cases,
    ))
}

/// `brute_count` agrees with `vincular_count`, and with `pattern_count` for
/// `R = ∅`.
pub fn check_permutation_oracle(pattern_max: usize, host_max: usize) -> Result<Check, SuiteError> {
    let hosts: Vec<_> = (0..=host_max).flat_map(permutations_of_length).collect();
    let mut failure = None;
    let mut cases = 0;
    'outer: for k in 0..=pattern_max {
        for sigma in permutations_of_length(k) {
            for r in adjacency_sets(k) {
                let plain = r.is_empty();
                let p = RestrictedPattern::new(sigma.clone(), r)?;
                for pi in &hosts {
                    let oracle = brute_count(&p, pi);
                    let engine = vincular_count(&p, pi);
                    cases += 1;
                    let classical_ok = !plain || pattern_count(&sigma, pi) == oracle;
                    if engine != oracle || !classical_ok {
                        failure = Some(format!(
                            "pattern ({sigma}, {:?}) on {pi}: oracle {oracle}, engine {engine}",
                            p.adjacency()
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(Check::new(
        "oracle agreement (perms)",
        format!("|sigma| <= {pattern_max}, |pi| <= {host_max}"),
        failure,
        cases,
    ))
}

/// Chain/occurrence pairs counted by enumeration equal `H^ℓ(u, v)`.
pub fn check_lemma_bijection(alphabet: &str, max_len: usize) -> Result<Check, SuiteError> {
    let u = words(alphabet, max_len)?;
    let h = element_h(&u);
    let mut powers = vec![delta(&u)];
    for _ in 0..max_len {
        let next = convolve(powers.last().expect("nonempty"), &h)?;
        powers.push(next);
    }
    let mut failure = None;
    'outer: for x in 0..u.len() {
        for &y in u.upper(x) {
            let (Element::Word(a), Element::Word(b)) = (u.element(x), u.element(y)) else {
                unreachable!("words universe")
            };
            for (l, hl) in powers.iter().enumerate() {
                let got = Rational::from_integer(count_chain_occurrence_pairs(a, b, l).into());
                if got != hl.get(x, y) {
                    failure = Some(format!(
                        "({}, {}, {l}): enumerated {got}, H^{l} gives {}",
                        u.display_label(x),
                        u.display_label(y),
                        hl.get(x, y)
                    ));
                    break 'outer;
                }
            }
        }
    }
    Ok(Check::new(
        "chain/occurrence pairs = H^l",
        describe(&u),
        failure,
        u.pair_count() * powers.len(),
    ))
}

/// Runs `suite` at size `max_len`. Universe sizes follow `max_len` except
/// where a cheaper bound is noted.
pub fn run_suite(suite: Suite, max_len: usize) -> Result<Vec<Check>, SuiteError> {
    let n = max_len;
    let mut out = Vec::new();
    match suite {
        Suite::All => {
            for s in Suite::EACH {
                out.extend(run_suite(s, max_len)?);
            }
        }
        Suite::Exp => {
            let universes = [
                words("ab", n)?,
                words("abc", n)?,
                universe(PosetKind::Permutations {
                    max_length: n.min(6),
                })?,
                universe(PosetKind::Chain { max: n })?,
            ];
            for u in &universes {
                out.push(check_exp_theorem(u)?);
            }
            for u in &universes {
                out.push(check_power_lemma(u)?);
            }
        }
        Suite::Powers => {
            let universes = [
                words("ab", n)?,
                universe(PosetKind::Permutations {
                    max_length: n.min(6),
                })?,
            ];
            for u in &universes {
                out.push(check_powers_of_p(u, -3..=3)?);
                out.push(check_conjugation(u, -3..=3)?);
                out.push(check_exp_inverse(u)?);
            }
            out.push(check_alternating_inverse(&universes[0])?);
        }
        Suite::Reciprocity => {
            out.push(check_reciprocity_sweep("ab", n.min(3), n)?);
            out.push(check_permutation_reciprocity(n.min(3), n.min(5))?);
            for f in BooleanFunction::ALL {
                out.push(check_mahler_boolean(f, n)?);
            }
        }
        Suite::Boolean => {
            for k in 0..=n.min(6) {
                out.push(check_boolean_exp(k)?);
                out.push(check_boolean_mobius(k)?);
            }
            out.push(check_saturated_chain_counts(n.min(5))?);
            out.push(check_multichain_counts(n.min(5), 4)?);
        }
        Suite::Corollary => out.push(check_corollary(n)?),
        Suite::Oracle => {
            out.push(check_word_oracle("ab", n.min(3), n)?);
            out.push(check_word_oracle("abc", n.min(3), n)?);
            out.push(check_permutation_oracle(n.min(3), n.min(5))?);
            out.push(check_lemma_bijection("ab", n)?);
        }
    }
    Ok(out)
}
