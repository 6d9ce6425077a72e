//! Built-in example codes, given by integer generator matrices.

use crate::code::LinearCode;
use crate::codefile::AnyCode;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, Fp, Rationals};

#[derive(Debug, Clone, PartialEq)]
pub struct NamedExample {
    pub name: String,
    pub description: String,
    pub rows: Vec<Vec<i64>>,
    /// Field used when none is requested.
    pub default_field: FieldCtx,
}

impl NamedExample {
    pub fn code(&self) -> Result<AnyCode> {
        self.code_over(self.default_field)
    }

    pub fn code_over(&self, field: FieldCtx) -> Result<AnyCode> {
        AnyCode::from_i64(field, &self.rows)
    }

    /// The same integer matrix over Q.
    pub fn rational(&self) -> Result<LinearCode<Rationals>> {
        LinearCode::from_i64(Rationals, &self.rows)
    }
}

fn fp(p: u64) -> FieldCtx {
    FieldCtx::Prime(Fp::new(p).expect("prime"))
}

fn fixed(name: &str) -> Option<(&'static str, Vec<Vec<i64>>, FieldCtx)> {
    Some(match name {
        "paper-g1" => (
            "[4,3,2]: x, y, z, x+y+z",
            vec![vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]],
            fp(2),
        ),
        "paper-g2" => (
            "[5,3,3]: x, y, z, x+y+z, x+2y+5z",
            vec![vec![1, 0, 0, 1, 1], vec![0, 1, 0, 1, 2], vec![0, 0, 1, 1, 5]],
            fp(7),
        ),
        "paper-c2" => (
            "[6,3,2]: x, y, x+y, x-y, z, y-z",
            vec![vec![1, 0, 1, 1, 0, 0], vec![0, 1, 1, -1, 0, 1], vec![0, 0, 0, 0, 1, -1]],
            fp(7),
        ),
        "braid6" => (
            "[6,3,3] braid arrangement: x, y, z, x-y, x-z, y-z",
            vec![vec![1, 0, 0, 1, 1, 0], vec![0, 1, 0, -1, 0, 1], vec![0, 0, 1, 0, -1, -1]],
            fp(7),
        ),
        "hamming74" => (
            "[7,4,3] binary Hamming code",
            vec![
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
            fp(2),
        ),
        _ => return None,
    })
}

const FIXED: [&str; 5] = ["paper-g1", "paper-g2", "paper-c2", "braid6", "hamming74"];

/// Looks up `paper-g1`, `paper-g2`, `paper-c2`, `braid6`, `hamming74`,
/// `rep-<n>` (repetition code) or `id-<k>` (identity code).
pub fn example(name: &str) -> Result<NamedExample> {
    let unknown = || Error::UnknownExample(name.to_string());
    if let Some((description, rows, default_field)) = fixed(name) {
        return Ok(NamedExample { name: name.into(), description: description.into(), rows, default_field });
    }
    let param = |prefix: &str| -> Option<usize> {
        name.strip_prefix(prefix)?.parse().ok().filter(|&m| (1..=64).contains(&m))
    };
    if let Some(n) = param("rep-") {
        return Ok(NamedExample {
            name: name.into(),
            description: format!("[{n},1,{n}] repetition code"),
            rows: vec![vec![1; n]],
            default_field: fp(2),
        });
    }
    if let Some(k) = param("id-") {
        return Ok(NamedExample {
            name: name.into(),
            description: format!("[{k},{k},1] identity code"),
            rows: (0..k).map(|i| (0..k).map(|j| (i == j) as i64).collect()).collect(),
            default_field: fp(2),
        });
    }
    Err(unknown())
}

/// `(name, description)` for every built-in, with the parametric families
/// shown as patterns.
pub fn list_examples() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = FIXED
        .iter()
        .map(|&n| {
            let e = example(n).expect("fixed example");
            (format!("{n} ({})", e.default_field), e.description)
        })
        .collect();
    out.push(("rep-<n> (F2)".into(), "[n,1,n] repetition code".into()));
    out.push(("id-<k> (F2)".into(), "[k,k,1] identity code".into()));
    out
}
