//! Plain-text code files.
//!
//! ```text
//! # comment lines start with '#'
//! field F2
//! 3 4
//! 1 0 0 1
//! 0 1 0 1
//! 0 0 1 1
//! ```
//!
//! Entries are integers, reduced modulo `p` over `F<p>`; `p/q` literals
//! are accepted only over `Q`.

use std::fmt;

use num::{BigInt, BigRational};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{make_field, parse_rational, Field, FieldCtx, Fp, Rationals};

/// A code over whichever field its file named.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyCode {
    Prime(LinearCode<Fp>),
    Rational(LinearCode<Rationals>),
}

impl AnyCode {
    pub fn n(&self) -> usize {
        match self {
            AnyCode::Prime(c) => c.n(),
            AnyCode::Rational(c) => c.n(),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            AnyCode::Prime(c) => c.k(),
            AnyCode::Rational(c) => c.k(),
        }
    }

    pub fn field(&self) -> FieldCtx {
        match self {
            AnyCode::Prime(c) => c.field().ctx(),
            AnyCode::Rational(_) => FieldCtx::Rational,
        }
    }

    /// Builds a code from integer rows over the given field.
    pub fn from_i64(field: FieldCtx, rows: &[Vec<i64>]) -> Result<Self> {
        Ok(match field {
            FieldCtx::Prime(fp) => AnyCode::Prime(LinearCode::from_i64(fp, rows)?),
            FieldCtx::Rational => AnyCode::Rational(LinearCode::from_i64(Rationals, rows)?),
        })
    }
}

impl fmt::Display for AnyCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn body<F: Field>(c: &LinearCode<F>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            writeln!(f, "field {}", c.field().ctx())?;
            writeln!(f, "{} {}", c.k(), c.n())?;
            for row in c.generator().to_rows() {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                writeln!(f, "{}", cells.join(" "))?;
            }
            Ok(())
        }
        match self {
            AnyCode::Prime(c) => body(c, f),
            AnyCode::Rational(c) => body(c, f),
        }
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Non-comment lines split into tokens with 1-based line and column.
fn tokenize(text: &str) -> Vec<(usize, Vec<(usize, &str)>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let trimmed = line.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                return None;
            }
            let mut toks = Vec::new();
            let mut start = None;
            for (j, ch) in line.char_indices().chain([(line.len(), ' ')]) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(j),
                    (true, Some(s)) => {
                        toks.push((s + 1, &line[s..j]));
                        start = None;
                    }
                    _ => {}
                }
            }
            Some((i + 1, toks))
        })
        .collect()
}

pub fn parse_code_file(text: &str) -> Result<AnyCode> {
    let lines = tokenize(text);
    let mut it = lines.into_iter();
    let last_line = text.lines().count().max(1);

    let (ln, toks) = it.next().ok_or_else(|| err(last_line, 1, "missing field line"))?;
    let field = match toks.as_slice() {
        [(_, "field"), (_, spec)] => make_field(spec)?,
        [(c, tok), ..] if *tok != "field" => return Err(err(ln, *c, "expected `field <spec>`")),
        _ => return Err(err(ln, 1, "expected `field <spec>`")),
    };

    let (ln, toks) = it.next().ok_or_else(|| err(last_line, 1, "missing dimension line `k n`"))?;
    let dims: Vec<usize> = toks
        .iter()
        .map(|(c, t)| t.parse::<usize>().map_err(|_| err(ln, *c, format!("bad dimension {t:?}"))))
        .collect::<Result<_>>()?;
    let [k, n] = dims[..] else {
        return Err(err(ln, 1, "expected two dimensions `k n`"));
    };

    let mut rows: Vec<Vec<(usize, usize, &str)>> = Vec::with_capacity(k);
    for r in 0..k {
        let (ln, toks) = it
            .next()
            .ok_or_else(|| err(last_line, 1, format!("expected {k} rows, found {r}")))?;
        if toks.len() != n {
            let col = toks.get(n).map_or(1, |t| t.0);
            return Err(err(ln, col, format!("expected {n} entries, found {}", toks.len())));
        }
        rows.push(toks.into_iter().map(|(c, t)| (ln, c, t)).collect());
    }
    if let Some((ln, toks)) = it.next() {
        return Err(err(ln, toks[0].0, "unexpected content after the last row"));
    }

    match field {
        FieldCtx::Prime(fp) => {
            let p = BigInt::from(fp.modulus());
            let parsed = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&(ln, c, t)| {
                            if t.contains('/') {
                                return Err(err(ln, c, "fractions are only allowed over Q"));
                            }
                            let v: BigInt = t.parse().map_err(|_| err(ln, c, format!("bad integer {t:?}")))?;
                            let r = ((v % &p) + &p) % &p;
                            Ok(u64::try_from(r).expect("residue fits"))
                        })
                        .collect::<Result<Vec<u64>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyCode::Prime(LinearCode::new(fp, parsed)?))
        }
        FieldCtx::Rational => {
            let parsed = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&(ln, c, t)| parse_rational(t).ok_or_else(|| err(ln, c, format!("bad rational {t:?}"))))
                        .collect::<Result<Vec<BigRational>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyCode::Rational(LinearCode::new(Rationals, parsed)?))
        }
    }
}
