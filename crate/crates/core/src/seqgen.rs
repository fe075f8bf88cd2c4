//! Out-degree sequence families.
//!
//! Every family is indexed from 1: `term(1)` is the out-degree of `v1`.
//! All families except Fibonacci fit in `u64`; Fibonacci terms past index 93
//! are available exactly through [`SequenceSpec::term_big`] and saturate in
//! [`SequenceSpec::term_saturating`], which is all graph construction needs.

use std::fmt;
use std::path::Path;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{JacoError, Result};
use crate::pascal::binomial;

/// Largest index whose Fibonacci term fits in a `u64`.
pub const FIB_U64_MAX_INDEX: u64 = 93;

/// Largest ground-set size accepted by the set family (2^base - 1 must fit).
pub const MAX_SET_BASE: u32 = 63;

/// The printed sequence for base 3 as shown in the set-family figure.
const PAPER_FIGURE_PERIOD: [u64; 7] = [1, 2, 3, 4, 4, 5, 6];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum SetVariant {
    /// a_i is the element sum of the i-th non-empty subset.
    #[default]
    Definitional,
    /// The periodic sequence (1,2,3,4,4,5,6) as printed for base 3.
    PaperFigure,
}

impl std::str::FromStr for SetVariant {
    type Err = JacoError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "definitional" => Ok(SetVariant::Definitional),
            "paper-figure" => Ok(SetVariant::PaperFigure),
            other => Err(JacoError::invalid(format!("unknown set variant `{other}`"))),
        }
    }
}

impl fmt::Display for SetVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetVariant::Definitional => f.write_str("definitional"),
            SetVariant::PaperFigure => f.write_str("paper-figure"),
        }
    }
}

/// Declarative description of an out-degree sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum SequenceSpec {
    /// s1: a_i = i.
    PositiveIntegers,
    /// s2: 1, 1, 2, 3, 5, ...
    Fibonacci,
    /// s3: a_i = i mod k.
    ModuloK { k: u64 },
    /// s4: subset sums over the non-empty subsets of {1..base}, repeating.
    SetSequence { base: u32, variant: SetVariant },
    /// a_i = i - floor(2(i+1)/(3+sqrt 5)), the out-degrees of the linear Jaco graph.
    LinearJaco,
    /// A finite, user supplied sequence.
    Explicit { terms: Vec<u64> },
}

impl SequenceSpec {
    pub fn modulo(k: u64) -> Self {
        SequenceSpec::ModuloK { k }
    }

    pub fn set_sequence(base: u32, variant: SetVariant) -> Self {
        SequenceSpec::SetSequence { base, variant }
    }

    pub fn explicit(terms: impl Into<Vec<u64>>) -> Self {
        SequenceSpec::Explicit {
            terms: terms.into(),
        }
    }

    /// Short family tag as used on the command line.
    pub fn family_name(&self) -> &'static str {
        match self {
            SequenceSpec::PositiveIntegers => "s1",
            SequenceSpec::Fibonacci => "s2",
            SequenceSpec::ModuloK { .. } => "s3",
            SequenceSpec::SetSequence { .. } => "s4",
            SequenceSpec::LinearJaco => "linear",
            SequenceSpec::Explicit { .. } => "custom",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            SequenceSpec::ModuloK { k } if *k < 2 => Err(JacoError::invalid(format!(
                "modulo-k needs k >= 2, got {k}"
            ))),
            SequenceSpec::SetSequence { base, variant } => {
                if *base == 0 || *base > MAX_SET_BASE {
                    return Err(JacoError::invalid(format!(
                        "set-sequence base must be in 1..={MAX_SET_BASE}, got {base}"
                    )));
                }
                if *variant == SetVariant::PaperFigure && *base != 3 {
                    return Err(JacoError::invalid(
                        "the paper-figure set variant is only defined for base 3",
                    ));
                }
                Ok(())
            }
            SequenceSpec::Explicit { terms } if terms.is_empty() => {
                Err(JacoError::invalid("explicit sequence has no terms"))
            }
            _ => Ok(()),
        }
    }

    /// The i-th term (1-based). Fibonacci terms beyond index 93 overflow.
    pub fn term(&self, i: u64) -> Result<u64> {
        self.check_index(i)?;
        match self {
            SequenceSpec::PositiveIntegers => Ok(i),
            SequenceSpec::Fibonacci => {
                if i > FIB_U64_MAX_INDEX {
                    return Err(JacoError::overflow(format!(
                        "fibonacci term {i} exceeds 64 bits; use term_big"
                    )));
                }
                Ok(fib_u64(i))
            }
            SequenceSpec::ModuloK { k } => Ok(i % k),
            SequenceSpec::SetSequence { base, variant } => {
                let period = (1u64 << base) - 1;
                let idx = 1 + (i - 1) % period;
                match variant {
                    SetVariant::Definitional => Ok(subset_at(*base, idx)?.iter().sum()),
                    SetVariant::PaperFigure => Ok(PAPER_FIGURE_PERIOD[(idx - 1) as usize]),
                }
            }
            SequenceSpec::LinearJaco => Ok(linear_jaco_term(i)),
            SequenceSpec::Explicit { terms } => {
                terms
                    .get((i - 1) as usize)
                    .copied()
                    .ok_or_else(|| JacoError::IndexOutOfRange {
                        index: i,
                        detail: format!("explicit sequence has {} terms", terms.len()),
                    })
            }
        }
    }

    /// Exact term with unbounded width.
    pub fn term_big(&self, i: u64) -> Result<BigUint> {
        match self {
            SequenceSpec::Fibonacci => {
                self.check_index(i)?;
                Ok(fib_big(i))
            }
            _ => self.term(i).map(BigUint::from),
        }
    }

    /// Like [`term`](Self::term) but clamps oversized terms to `u64::MAX`.
    pub fn term_saturating(&self, i: u64) -> Result<u64> {
        match self {
            SequenceSpec::Fibonacci if i > FIB_U64_MAX_INDEX => Ok(u64::MAX),
            _ => self.term(i),
        }
    }

    /// First `n` terms, saturating.
    pub fn terms(&self, n: usize) -> Result<Vec<u64>> {
        (1..=n as u64).map(|i| self.term_saturating(i)).collect()
    }

    fn check_index(&self, i: u64) -> Result<()> {
        if i == 0 {
            return Err(JacoError::invalid("sequence indices start at 1"));
        }
        self.validate()
    }

    /// Parse an explicit sequence: one decimal per line, `#` comments and
    /// blank lines ignored.
    pub fn parse_explicit(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let v = line.parse::<u64>().map_err(|_| {
                JacoError::invalid(format!(
                    "line {}: `{line}` is not a non-negative integer",
                    lineno + 1
                ))
            })?;
            terms.push(v);
        }
        let spec = SequenceSpec::Explicit { terms };
        spec.validate()?;
        Ok(spec)
    }

    pub fn load_explicit(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse_explicit(&text)
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::ModuloK { k } => write!(f, "s3(k={k})"),
            SequenceSpec::SetSequence { base, variant } => {
                write!(f, "s4(base={base},{variant})")
            }
            SequenceSpec::Explicit { terms } => {
                let shown: Vec<String> = terms.iter().map(u64::to_string).collect();
                write!(f, "custom({})", shown.join(","))
            }
            other => f.write_str(other.family_name()),
        }
    }
}

fn fib_u64(i: u64) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 2..i {
        let c = a + b;
        a = b;
        b = c;
    }
    if i == 1 {
        a
    } else {
        b
    }
}

fn fib_big(i: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::from(1u32), BigUint::from(1u32));
    for _ in 2..i {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    if i == 1 {
        a
    } else {
        b
    }
}

/// i - floor(2(i+1)/(3+sqrt 5)) without floating point.
///
/// With m = i+1, floor(2m/(3+sqrt 5)) = floor(m(3-sqrt 5)/2). Since 5m^2 is
/// never a perfect square, t = isqrt(5m^2) satisfies t < m sqrt 5 < t+1 and
/// the floor equals floor((3m - t - 1)/2).
fn linear_jaco_term(i: u64) -> u64 {
    let m = i as u128 + 1;
    let t = (5 * m * m).isqrt();
    let fl = (3 * m - t - 1) / 2;
    i - fl as u64
}

/// The idx-th (1-based) non-empty subset of {1..base}: all 1-subsets, then
/// 2-subsets in lexicographic order, and so on up to the full set.
pub fn subset_at(base: u32, idx: u64) -> Result<Vec<u64>> {
    if base == 0 || base > MAX_SET_BASE {
        return Err(JacoError::invalid(format!(
            "subset base must be in 1..={MAX_SET_BASE}, got {base}"
        )));
    }
    let total = (1u64 << base) - 1;
    if idx == 0 || idx > total {
        return Err(JacoError::IndexOutOfRange {
            index: idx,
            detail: format!("base {base} has {total} non-empty subsets"),
        });
    }
    let n = base as u64;
    let mut rank = idx - 1;
    let mut size = 1;
    loop {
        let block = binomial(n, size)?;
        if rank < block {
            break;
        }
        rank -= block;
        size += 1;
    }
    // unrank a lexicographic combination
    let mut out = Vec::with_capacity(size as usize);
    let mut next = 1;
    for remaining in (1..=size).rev() {
        loop {
            let with_next = binomial(n - next, remaining - 1)?;
            if rank < with_next {
                out.push(next);
                next += 1;
                break;
            }
            rank -= with_next;
            next += 1;
        }
    }
    Ok(out)
}
