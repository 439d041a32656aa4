//! Argument parsing, serialization formats and command handlers for `psw`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use pascal_subwords::algebra::{
    delta, element_h, element_p, eta, exponential, inverse, mobius, power, zeta, AlgebraError,
    IncidenceElement, Rational,
};
use pascal_subwords::patterns::{
    restricted_count, vincular_count, Alphabet, PatternError, Permutation, RestrictedPattern,
};
use pascal_subwords::posets::{build_universe, PosetError, PosetKind, PosetUniverse};
use pascal_subwords::reciprocity::{
    boolean_function, mahler_expansion, mahler_of_function, BooleanFunction, MahlerExpansion,
    ReciprocityError,
};
use pascal_subwords::suites::{run_suite, Suite, SuiteError};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flag values or unparsable input; exit code 2.
    #[error("{0}")]
    Malformed(String),
    /// A library precondition does not hold for the request; exit code 3.
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Malformed(_) | CliError::Io(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl From<PatternError> for CliError {
    fn from(e: PatternError) -> Self {
        CliError::Malformed(e.to_string())
    }
}

impl From<PosetError> for CliError {
    fn from(e: PosetError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Poset(p) => p.into(),
            AlgebraError::ShapeMismatch { .. } | AlgebraError::IncomparableEntry { .. } => {
                CliError::Malformed(e.to_string())
            }
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<ReciprocityError> for CliError {
    fn from(e: ReciprocityError) -> Self {
        match e {
            ReciprocityError::Pattern(p) => p.into(),
            ReciprocityError::Poset(p) => p.into(),
            ReciprocityError::Algebra(a) => a.into(),
            ReciprocityError::UnknownFunction(_) | ReciprocityError::NonBinaryAlphabet(_) => {
                CliError::Malformed(e.to_string())
            }
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::Pattern(p) => p.into(),
            SuiteError::Poset(p) => p.into(),
            SuiteError::Algebra(a) => a.into(),
            SuiteError::Reciprocity(r) => r.into(),
            SuiteError::UnknownSuite(_) => CliError::Malformed(e.to_string()),
        }
    }
}

// ---------------------------------------------------------------- rationals

/// `7`, `-3/2`; always reduced with a positive denominator.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Malformed(format!("not a rational: {s:?}"));
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(int(n)?, d))
        }
    }
}

/// Comma separated indices in `[0, k]`; duplicates are an error.
pub fn parse_restriction(s: &str, k: usize) -> Result<BTreeSet<usize>, CliError> {
    let mut out = BTreeSet::new();
    if s.trim().is_empty() {
        return Ok(out);
    }
    for part in s.split(',') {
        let i: usize = part
            .trim()
            .parse()
            .map_err(|_| CliError::Malformed(format!("bad restriction index {part:?}")))?;
        if i > k {
            return Err(CliError::Malformed(format!(
                "restriction index {i} lies outside [0, {k}]"
            )));
        }
        if !out.insert(i) {
            return Err(CliError::Malformed(format!(
                "restriction index {i} given twice"
            )));
        }
    }
    Ok(out)
}

// ----------------------------------------------------------------- posets

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosetName {
    Words,
    Perms,
    Boolean,
    Chain,
}

/// What the `"poset"` field of a matrix document records: enough to rebuild
/// the universe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSpec {
    pub kind: PosetName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<String>,
    pub max_len: usize,
}

impl PosetSpec {
    pub fn build(&self) -> Result<Arc<PosetUniverse>, CliError> {
        let kind = match self.kind {
            PosetName::Words => {
                let letters = self.alphabet.as_deref().ok_or_else(|| {
                    CliError::Malformed("--alphabet is required for the words poset".into())
                })?;
                PosetKind::Words {
                    alphabet: Alphabet::new(letters)?,
                    max_length: self.max_len,
                }
            }
            PosetName::Perms => PosetKind::Permutations {
                max_length: self.max_len,
            },
            PosetName::Boolean => PosetKind::Boolean { n: self.max_len },
            PosetName::Chain => PosetKind::Chain { max: self.max_len },
        };
        Ok(Arc::new(build_universe(kind)?))
    }
}

// ---------------------------------------------------------------- formats

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub poset: PosetSpec,
    pub elements: Vec<String>,
    /// Row-major, one string per entry including incomparable zeros.
    pub entries: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn new(poset: PosetSpec, f: &IncidenceElement) -> Self {
        let u = f.universe();
        MatrixDocument {
            poset,
            elements: (0..u.len()).map(|i| u.label(i)).collect(),
            entries: f
                .to_dense()
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        }
    }

    /// Rebuilds the element in a fresh universe described by `poset`.
    pub fn to_element(&self) -> Result<IncidenceElement, CliError> {
        self.to_element_in(&self.poset.build()?)
    }

    pub fn to_element_in(&self, u: &Arc<PosetUniverse>) -> Result<IncidenceElement, CliError> {
        let labels: Vec<String> = (0..u.len()).map(|i| u.label(i)).collect();
        if labels != self.elements {
            return Err(CliError::Malformed(
                "element labels do not match the poset description".into(),
            ));
        }
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Ok(IncidenceElement::from_dense(u, &rows)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes") + "\n"
    }

    pub fn from_json(s: &str) -> Result<Self, CliError> {
        serde_json::from_str(s).map_err(|e| CliError::Malformed(format!("bad matrix json: {e}")))
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| CliError::Malformed(e.to_string());
        w.write_record(&self.elements).map_err(csv_err)?;
        for row in &self.entries {
            w.write_record(row).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("utf-8 labels"))
    }

    /// Aligned text with row labels; the empty word shows as `ε`.
    pub fn to_table(&self) -> String {
        let shown: Vec<String> = self
            .elements
            .iter()
            .map(|l| {
                if l.is_empty() {
                    "ε".to_string()
                } else {
                    l.clone()
                }
            })
            .collect();
        let width = |s: &str| s.chars().count();
        let label_w = shown.iter().map(|s| width(s)).max().unwrap_or(0);
        let col_w: Vec<usize> = (0..shown.len())
            .map(|j| {
                self.entries
                    .iter()
                    .map(|r| width(&r[j]))
                    .chain([width(&shown[j])])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut out = String::new();
        let _ = write!(out, "{:label_w$}", "");
        for (j, l) in shown.iter().enumerate() {
            let _ = write!(out, "  {:>w$}", l, w = col_w[j]);
        }
        out.push('\n');
        for (i, row) in self.entries.iter().enumerate() {
            let _ = write!(out, "{:<w$}", shown[i], w = label_w);
            for (j, v) in row.iter().enumerate() {
                let _ = write!(out, "  {:>w$}", v, w = col_w[j]);
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientEntry {
    pub word: String,
    pub coefficient: String,
}

pub fn expansion_entries(e: &MahlerExpansion) -> Vec<CoefficientEntry> {
    let alphabet = e.universe().alphabet().expect("expansions live on words");
    e.nonzero()
        .iter()
        .map(|(w, c)| CoefficientEntry {
            word: alphabet.render(w),
            coefficient: format_rational(c),
        })
        .collect()
}

// -------------------------------------------------------------- arguments

#[derive(Debug, Parser)]
#[command(
    name = "psw",
    version,
    about = "Subword and pattern counting in incidence algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count occurrences of a (restricted) pattern in a host.
    Count(CountArgs),
    /// Build an incidence algebra element and print it as a matrix.
    Matrix(MatrixArgs),
    /// Print a Mahler expansion.
    Mahler(MahlerArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Treat pattern and host as permutations in one-line notation.
    #[arg(long, conflicts_with = "alphabet")]
    pub perm: bool,
    #[arg(long, required_unless_present = "perm")]
    pub alphabet: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub pattern: String,
    /// Adjacency indices, comma separated.
    #[arg(long, default_value = "")]
    pub restriction: String,
    #[arg(long)]
    pub host: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ElementName {
    #[value(name = "P")]
    P,
    #[value(name = "H")]
    H,
    Zeta,
    Eta,
    Mobius,
    Delta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[arg(long, value_enum)]
    pub poset: PosetName,
    #[arg(long)]
    pub alphabet: Option<String>,
    /// Maximum word/permutation length, `n` of the boolean algebra, or the
    /// top of the chain.
    #[arg(long)]
    pub max_len: usize,
    #[arg(long, value_enum)]
    pub element: ElementName,
    #[arg(long, group = "op")]
    pub exp: bool,
    #[arg(long, group = "op", allow_hyphen_values = true)]
    pub power: Option<i64>,
    #[arg(long, group = "op")]
    pub inverse: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MahlerArgs {
    #[arg(long, conflicts_with = "builtin")]
    pub alphabet: Option<String>,
    #[arg(long, requires = "alphabet", allow_hyphen_values = true)]
    pub pattern: Option<String>,
    #[arg(long, default_value = "", requires = "pattern")]
    pub restriction: String,
    /// Boolean function on words over `01`.
    #[arg(long)]
    pub builtin: Option<String>,
    #[arg(long)]
    pub max_len: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 4)]
    pub max_len: usize,
}

// --------------------------------------------------------------- handlers

pub fn cmd_count(a: &CountArgs) -> Result<String, CliError> {
    let count = if a.perm {
        let sigma: Permutation = a.pattern.parse()?;
        let pi: Permutation = a.host.parse()?;
        let r = parse_restriction(&a.restriction, sigma.len())?;
        vincular_count(&RestrictedPattern::new(sigma, r)?, &pi)
    } else {
        let alphabet = Alphabet::new(a.alphabet.as_deref().unwrap_or_default())?;
        let u = alphabet.word(&a.pattern)?;
        let v = alphabet.word(&a.host)?;
        let r = parse_restriction(&a.restriction, u.len())?;
        restricted_count(&RestrictedPattern::new(u, r)?, &v)
    };
    Ok(format!("{count}\n"))
}

pub fn build_matrix(a: &MatrixArgs) -> Result<MatrixDocument, CliError> {
    if a.poset != PosetName::Words && a.alphabet.is_some() {
        return Err(CliError::Malformed(
            "--alphabet only applies to the words poset".into(),
        ));
    }
    let spec = PosetSpec {
        kind: a.poset,
        alphabet: a.alphabet.clone(),
        max_len: a.max_len,
    };
    let u = spec.build()?;
    let base = match a.element {
        ElementName::P => element_p(&u),
        ElementName::H => element_h(&u),
        ElementName::Zeta => zeta(&u),
        ElementName::Eta => eta(&u),
        ElementName::Mobius => mobius(&u),
        ElementName::Delta => delta(&u),
    };
    let f = if a.exp {
        exponential(&base)?
    } else if a.inverse {
        inverse(&base)?
    } else if let Some(d) = a.power {
        power(&base, d)?
    } else {
        base
    };
    Ok(MatrixDocument::new(spec, &f))
}

pub fn cmd_matrix(a: &MatrixArgs) -> Result<String, CliError> {
    let doc = build_matrix(a)?;
    match a.format {
        Format::Json => Ok(doc.to_json()),
        Format::Csv => doc.to_csv(),
        Format::Table => Ok(doc.to_table()),
    }
}

pub fn cmd_mahler(a: &MahlerArgs) -> Result<String, CliError> {
    let expansion = match (&a.builtin, &a.pattern) {
        (Some(name), None) => {
            let f: BooleanFunction = name.parse()?;
            let u = PosetSpec {
                kind: PosetName::Words,
                alphabet: Some("01".into()),
                max_len: a.max_len,
            }
            .build()?;
            mahler_of_function(&boolean_function(f, &u)?)?
        }
        (None, Some(pattern)) => {
            let alphabet = Alphabet::new(a.alphabet.as_deref().unwrap_or_default())?;
            let u = alphabet.word(pattern)?;
            let r = parse_restriction(&a.restriction, u.len())?;
            mahler_expansion(&RestrictedPattern::new(u, r)?, &alphabet, a.max_len)?
        }
        _ => {
            return Err(CliError::Malformed(
                "give exactly one of --pattern or --builtin".into(),
            ))
        }
    };
    Ok(
        serde_json::to_string(&expansion_entries(&expansion)).expect("plain data serializes")
            + "\n",
    )
}

/// Report text and whether every check passed.
pub fn cmd_verify(a: &VerifyArgs) -> Result<(String, bool), CliError> {
    let suite: Suite = a.suite.parse()?;
    let checks = run_suite(suite, a.max_len)?;
    let mut out = String::new();
    for c in &checks {
        let _ = writeln!(out, "{c}");
    }
    Ok((out, checks.iter().all(|c| c.passed)))
}

/// Runs a parsed command; returns the text for stdout and the exit code.
pub fn run(cli: &Cli) -> Result<(String, u8), CliError> {
    let write_or_return = |text: String, path: &Option<PathBuf>| -> Result<String, CliError> {
        match path {
            Some(p) => {
                std::fs::write(p, text)?;
                Ok(String::new())
            }
            None => Ok(text),
        }
    };
    match &cli.command {
        Command::Count(a) => Ok((cmd_count(a)?, 0)),
        Command::Matrix(a) => Ok((write_or_return(cmd_matrix(a)?, &a.output)?, 0)),
        Command::Mahler(a) => Ok((write_or_return(cmd_mahler(a)?, &a.output)?, 0)),
        Command::Verify(a) => {
            let (text, ok) = cmd_verify(a)?;
            Ok((text, if ok { 0 } else { 1 }))
        }
    }
}
