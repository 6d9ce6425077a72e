use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size limits that keep every computation at desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Maximum `q^k` for codeword enumeration.
    pub enumeration: u64,
    /// Maximum `n` for `2^n` subset expansions.
    pub subset_n: usize,
    /// Maximum spanning rows assembled for one graded piece.
    pub rows: u64,
    /// Default top degree for degreewise checks.
    pub t_max: usize,
    /// Maximum `n` for evaluation tables over `F_2^n`.
    pub boolean_n: usize,
    /// Variables, degree and homological index for Koszul computations.
    pub betti_vars: usize,
    pub betti_degree: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration: 10_000_000,
            subset_n: 22,
            rows: 200_000,
            t_max: 12,
            boolean_n: 16,
            betti_vars: 8,
            betti_degree: 8,
        }
    }
}

pub(crate) fn check(what: &'static str, needed: u128, limit: u128) -> Result<()> {
    if needed > limit {
        Err(Error::BudgetExceeded { what, needed, limit })
    } else {
        Ok(())
    }
}
