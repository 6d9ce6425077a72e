//! The column matroid of a generator matrix: rank oracle, Tutte
//! polynomial, circuits and girth.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::{self, Budget};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Echelon, Matrix};
use crate::poly::binomial;

/// Rank oracle on subsets of the columns of a code.
pub struct Matroid<'a, F: Field> {
    code: &'a LinearCode<F>,
}

impl<'a, F: Field> Matroid<'a, F> {
    pub fn new(code: &'a LinearCode<F>) -> Self {
        Matroid { code }
    }

    pub fn ground_size(&self) -> usize {
        self.code.n()
    }

    pub fn rank(&self, subset: &[usize]) -> usize {
        if subset.is_empty() {
            return 0;
        }
        self.code.generator().select_columns(subset).rank()
    }

    pub fn rank_mask(&self, mask: u64) -> usize {
        self.rank(&mask_to_vec(mask))
    }

    /// Ranks of all `2^n` subsets, indexed by bitmask.
    pub fn all_ranks(&self, budget: &Budget) -> Result<Vec<u8>> {
        let n = self.code.n();
        budget::check("subset expansion n", n as u128, budget.subset_n as u128)?;
        let cols = self.code.columns();
        let mut ranks = vec![0u8; 1 << n];
        let root = Echelon::new(self.code.field().clone(), self.code.k());
        fill_ranks(&cols, 0, 0, &root, &mut ranks);
        Ok(ranks)
    }
}

fn fill_ranks<F: Field>(cols: &[Vec<F::Elem>], i: usize, mask: usize, span: &Echelon<F>, ranks: &mut [u8]) {
    if i == cols.len() {
        ranks[mask] = span.rank() as u8;
        return;
    }
    fill_ranks(cols, i + 1, mask, span, ranks);
    let mut with = span.clone();
    with.insert(cols[i].clone());
    fill_ranks(cols, i + 1, mask | 1 << i, &with, ranks);
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Bivariate integer polynomial; key `(i, j)` is the coefficient of
/// `x^i y^j`. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuttePoly {
    pub coeffs: BTreeMap<(u32, u32), i128>,
}

impl TuttePoly {
    pub fn from_terms(terms: &[((u32, u32), i128)]) -> Self {
        let mut t = TuttePoly::default();
        for &(e, c) in terms {
            t.add(e, c);
        }
        t
    }

    pub fn add(&mut self, e: (u32, u32), c: i128) {
        if c == 0 {
            return;
        }
        let v = self.coeffs.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> i128 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Adds `scale * (x-1)^a * y^b * (y-1)^c`.
    pub(crate) fn add_expanded(&mut self, scale: i128, a: u32, b: u32, c: u32) {
        for i in 0..=a {
            let ci = signed_binomial(a, i);
            for j in 0..=c {
                let cj = signed_binomial(c, j);
                self.add((i, b + j), scale * ci * cj);
            }
        }
    }

    /// `T(x + s, y)` by exact binomial expansion.
    pub fn shift_x(&self, s: i128) -> TuttePoly {
        let mut out = TuttePoly::default();
        for (&(i, j), &c) in &self.coeffs {
            let mut sp = 1i128;
            for m in (0..=i).rev() {
                // x^i -> sum_m C(i, m) x^m s^(i-m)
                out.add((m, j), c * binomial(i as u64, m as u64) as i128 * sp);
                sp *= s;
            }
        }
        out
    }

    pub fn eval(&self, x: i128, y: i128) -> i128 {
        self.coeffs
            .iter()
            .map(|(&(i, j), &c)| c * x.pow(i) * y.pow(j))
            .sum()
    }
}

/// Coefficient of `z^i` in `(z - 1)^a`.
fn signed_binomial(a: u32, i: u32) -> i128 {
    let b = binomial(a as u64, i as u64) as i128;
    if (a - i).is_multiple_of(2) {
        b
    } else {
        -b
    }
}

impl fmt::Display for TuttePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), &c) in self.coeffs.iter().rev() {
            let mono = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let px = match i {
                        0 => String::new(),
                        1 => "x".into(),
                        _ => format!("x^{i}"),
                    };
                    let py = match j {
                        0 => String::new(),
                        1 => "y".into(),
                        _ => format!("y^{j}"),
                    };
                    [px, py].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("*")
                }
            };
            let abs = c.abs();
            let body = if mono.is_empty() {
                abs.to_string()
            } else if abs == 1 {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            match (first, c < 0) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Tutte polynomial by the full `2^n` subset expansion.
pub fn tutte<F: Field>(code: &LinearCode<F>, budget: &Budget) -> Result<TuttePoly> {
    let ranks = Matroid::new(code).all_ranks(budget)?;
    Ok(tutte_from_ranks(&ranks, code.k()))
}

pub(crate) fn tutte_from_ranks(ranks: &[u8], k: usize) -> TuttePoly {
    // counts[r][s] = number of subsets with rank r and size s
    let n = ranks.len().trailing_zeros() as usize;
    let mut counts = vec![vec![0i128; n + 1]; k + 1];
    for (mask, &r) in ranks.iter().enumerate() {
        counts[r as usize][mask.count_ones() as usize] += 1;
    }
    let mut t = TuttePoly::default();
    for (r, row) in counts.iter().enumerate() {
        for (s, &cnt) in row.iter().enumerate() {
            if cnt > 0 {
                t.add_expanded(cnt, (k - r) as u32, 0, (s - r) as u32);
            }
        }
    }
    t
}

/// Minimum distance and projective minimum-weight count read off the
/// `x y^p` terms of `T(x + 1, y)`: `d = n - p - k + 1`.
pub fn distance_from_tutte(t: &TuttePoly, n: usize, k: usize) -> Result<(usize, u64)> {
    // A loop makes y divide T, so T(x, 0) vanishes.
    if t.coeffs.keys().all(|&(_, j)| j > 0) {
        return Err(Error::LoopInMatroid);
    }
    let shifted = t.shift_x(1);
    let (p, c) = shifted
        .coeffs
        .iter()
        .filter(|(&(i, _), _)| i == 1)
        .map(|(&(_, j), &c)| (j as usize, c))
        .max_by_key(|&(j, _)| j)
        .ok_or(Error::NoLinearTerm)?;
    if n + 1 < p + k {
        return Err(Error::BadRange(format!("p = {p} too large for n = {n}, k = {k}")));
    }
    Ok((n + 1 - p - k, c as u64))
}

/// A minimal dependent set of columns with its dependency coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit<E> {
    pub support: Vec<usize>,
    /// `sum coeffs[j] * column[support[j]] = 0`, first coefficient 1.
    pub coeffs: Vec<E>,
}

impl<E> Circuit<E> {
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn mask(&self) -> u64 {
        self.support.iter().fold(0, |m, &i| m | 1 << i)
    }
}

/// All circuits, sorted lexicographically by support.
///
/// Supports are visited by increasing size; a set is a circuit exactly when
/// it is dependent and contains no smaller circuit.
pub fn circuits<F: Field>(code: &LinearCode<F>) -> Result<Vec<Circuit<F::Elem>>> {
    if let Some(&c) = code.zero_columns().first() {
        return Err(Error::ZeroColumn(c));
    }
    let n = code.n();
    if n > 63 {
        return Err(Error::BudgetExceeded { what: "circuit enumeration n", needed: n as u128, limit: 63 });
    }
    let g = code.generator();
    let f = code.field();
    let mut found: Vec<Circuit<F::Elem>> = Vec::new();
    let mut masks: Vec<u64> = Vec::new();
    for size in 2..=(code.k() + 1).min(n) {
        for_each_combination(n, size, |subset| {
            let mask = subset.iter().fold(0u64, |m, &i| m | 1 << i);
            if masks.iter().any(|&c| c & mask == c) {
                return;
            }
            let sub = g.select_columns(subset);
            let ker = sub.kernel_basis();
            if ker.is_empty() {
                return;
            }
            debug_assert_eq!(ker.len(), 1);
            let v = &ker[0];
            let inv = f.inv(&v[0]).expect("circuit coefficients are nonzero");
            let coeffs = v.iter().map(|x| f.mul(x, &inv)).collect();
            masks.push(mask);
            found.push(Circuit { support: subset.to_vec(), coeffs });
        });
    }
    found.sort_by(|a, b| a.support.cmp(&b.support));
    Ok(found)
}

/// Size of the smallest circuit; `None` when the columns are independent.
pub fn girth<F: Field>(code: &LinearCode<F>) -> Option<usize> {
    let n = code.n();
    if !code.zero_columns().is_empty() {
        return Some(1);
    }
    let g = code.generator();
    for size in 2..=(code.k() + 1).min(n) {
        let mut hit = false;
        for_each_combination(n, size, |subset| {
            if !hit && g.select_columns(subset).rank() < size {
                hit = true;
            }
        });
        if hit {
            return Some(size);
        }
    }
    None
}

/// Verifies the circuit invariants directly against the generator.
pub fn is_valid_circuit<F: Field>(g: &Matrix<F>, c: &Circuit<F::Elem>) -> bool {
    let f = g.field();
    let sub = g.select_columns(&c.support);
    let combo = sub.mul_vec(&c.coeffs);
    if !combo.iter().all(|x| f.is_zero(x)) || c.coeffs.iter().any(|x| f.is_zero(x)) {
        return false;
    }
    if !f.is_one(&c.coeffs[0]) {
        return false;
    }
    (0..c.support.len()).all(|drop| {
        let rest: Vec<usize> = c.support.iter().enumerate().filter(|(i, _)| *i != drop).map(|(_, &s)| s).collect();
        g.select_columns(&rest).rank() == rest.len()
    })
}

pub(crate) fn for_each_combination(n: usize, size: usize, mut visit: impl FnMut(&[usize])) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        visit(&idx);
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - size {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `d = n - k + 1`, using enumeration over finite fields within budget and
/// the Tutte polynomial otherwise.
pub fn is_mds<F: Field>(code: &LinearCode<F>, budget: &Budget) -> Result<bool> {
    Ok(code_distance(code, budget)? == code.n() - code.k() + 1)
}

/// Exact minimum distance by the cheapest available exact route.
pub fn code_distance<F: Field>(code: &LinearCode<F>, budget: &Budget) -> Result<usize> {
    match code.min_distance_brute(budget) {
        Ok(r) => Ok(r.d),
        Err(Error::UnsupportedField(_)) | Err(Error::BudgetExceeded { .. }) => {
            let t = tutte(code, budget)?;
            Ok(distance_from_tutte(&t, code.n(), code.k())?.0)
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};

    fn fp(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    /// Subset expansion using an independent rank computation per subset.
    fn tutte_oracle<F: Field>(code: &LinearCode<F>) -> TuttePoly {
        let n = code.n();
        let k = code.k() as u32;
        let mut t = TuttePoly::default();
        for mask in 0u64..1 << n {
            let sub = mask_to_vec(mask);
            let r = if sub.is_empty() { 0 } else { code.generator().select_columns(&sub).rref().rank as u32 };
            let s = sub.len() as u32;
            t.add_expanded(1, k - r, 0, s - r);
        }
        t
    }

    fn g1<F: Field>(f: F) -> LinearCode<F> {
        LinearCode::from_i64(f, &[vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap()
    }

    fn hamming() -> LinearCode<Fp> {
        LinearCode::from_i64(
            fp(2),
            &[
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap()
    }

    fn braid() -> LinearCode<Rationals> {
        LinearCode::from_i64(
            Rationals,
            &[vec![1, 0, 0, 1, 1, 0], vec![0, 1, 0, -1, 0, 1], vec![0, 0, 1, 0, -1, -1]],
        )
        .unwrap()
    }

    #[test]
    fn tutte_examples() {
        let b = Budget::default();
        let u12 = LinearCode::from_i64(fp(2), &[vec![1, 1]]).unwrap();
        assert_eq!(tutte(&u12, &b).unwrap(), TuttePoly::from_terms(&[((1, 0), 1), ((0, 1), 1)]));
        let t = tutte(&g1(fp(2)), &b).unwrap();
        assert_eq!(
            t,
            TuttePoly::from_terms(&[((3, 0), 1), ((2, 0), 1), ((1, 0), 1), ((0, 1), 1)])
        );
        assert_eq!(t.to_string(), "x^3 + x^2 + x + y");
        let loopy = LinearCode::with_options(fp(2), vec![vec![1, 0]], true).unwrap();
        assert_eq!(tutte(&loopy, &b).unwrap(), TuttePoly::from_terms(&[((1, 1), 1)]));
        for c in [g1(fp(2)), hamming(), g1(fp(5))] {
            assert_eq!(tutte(&c, &b).unwrap(), tutte_oracle(&c));
        }
        assert_eq!(tutte(&braid(), &b).unwrap(), tutte_oracle(&braid()));
    }

    #[test]
    fn tutte_distance() {
        let t = TuttePoly::from_terms(&[((3, 0), 1), ((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
        let shifted = t.shift_x(1);
        assert_eq!(
            shifted,
            TuttePoly::from_terms(&[((3, 0), 1), ((2, 0), 4), ((1, 0), 6), ((0, 0), 3), ((0, 1), 1)])
        );
        assert_eq!(distance_from_tutte(&t, 4, 3).unwrap(), (2, 6));
        let t = TuttePoly::from_terms(&[((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(distance_from_tutte(&t, 2, 1).unwrap(), (2, 1));
        let th = tutte(&hamming(), &Budget::default()).unwrap();
        assert_eq!(distance_from_tutte(&th, 7, 4).unwrap(), (3, 7));
        let loopy = TuttePoly::from_terms(&[((1, 1), 1)]);
        assert_eq!(distance_from_tutte(&loopy, 2, 1), Err(Error::LoopInMatroid));
        assert_eq!(
            distance_from_tutte(&TuttePoly::from_terms(&[((0, 0), 1)]), 1, 0),
            Err(Error::NoLinearTerm)
        );
    }

    #[test]
    fn bases_count_and_row_invariance() {
        let b = Budget::default();
        for c in [hamming(), g1(fp(3))] {
            let t = tutte(&c, &b).unwrap();
            let m = Matroid::new(&c);
            let mut bases = 0;
            for_each_combination(c.n(), c.k(), |s| {
                if m.rank(s) == c.k() {
                    bases += 1;
                }
            });
            assert_eq!(t.eval(1, 1), bases);
            // Row operations: add row 0 to every other row.
            let mut g = c.generator().clone();
            let one = c.field().one();
            for r in 1..c.k() {
                g.sub_row_multiple(r, 0, &c.field().neg(&one));
            }
            let c2 = c.with_generator(g).unwrap();
            assert_eq!(tutte(&c2, &b).unwrap(), t);
        }
    }

    #[test]
    fn circuit_examples() {
        let cs = circuits(&g1(fp(7))).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].support, vec![0, 1, 2, 3]);
        assert_eq!(cs[0].coeffs, vec![1, 1, 1, 6]);

        let cs = circuits(&braid()).unwrap();
        let triples: Vec<Vec<usize>> = cs.iter().filter(|c| c.len() == 3).map(|c| c.support.clone()).collect();
        assert_eq!(triples, vec![vec![0, 1, 3], vec![0, 2, 4], vec![1, 2, 5], vec![3, 4, 5]]);
        assert_eq!(cs.len(), 7);
        for c in &cs {
            assert!(is_valid_circuit(braid().generator(), c));
        }
        let id = LinearCode::from_i64(fp(2), &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(circuits(&id).unwrap().is_empty());
        for c in circuits(&hamming()).unwrap() {
            assert!(is_valid_circuit(hamming().generator(), &c));
        }
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&g1(fp(2))), Some(4));
        assert_eq!(girth(&braid()), Some(3));
        let id = LinearCode::from_i64(fp(2), &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(girth(&id), None);
    }

    #[test]
    fn rank_is_submodular_on_samples() {
        let c = hamming();
        let m = Matroid::new(&c);
        assert_eq!(m.rank(&[]), 0);
        for a in (0u64..128).step_by(7) {
            for b in (0u64..128).step_by(11) {
                let (ra, rb) = (m.rank_mask(a), m.rank_mask(b));
                assert!(m.rank_mask(a | b) + m.rank_mask(a & b) <= ra + rb);
                if a & b == a {
                    assert!(ra <= rb);
                }
            }
        }
    }

    #[test]
    fn mds_flags() {
        let b = Budget::default();
        assert!(is_mds(&g1(fp(2)), &b).unwrap());
        let g2 = LinearCode::from_i64(fp(7), &[vec![1, 0, 0, 1, 1], vec![0, 1, 0, 1, 2], vec![0, 0, 1, 1, 5]]).unwrap();
        assert!(is_mds(&g2, &b).unwrap());
        assert!(!is_mds(&hamming(), &b).unwrap());
        assert!(is_mds(&g1(Rationals), &b).unwrap());
    }
}
