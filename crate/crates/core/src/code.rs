//! Linear codes given by a generator matrix.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::budget::{self, Budget};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// An `[n, k]` linear code: the row space of a full-rank `k x n` generator.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearCode<F: Field> {
    generator: Matrix<F>,
    allow_zero_columns: bool,
}

/// Result of exhaustive codeword enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteDistance<E> {
    pub d: usize,
    /// Minimum-weight codewords counted up to scalar multiples.
    pub projective_count: u64,
    /// Weight to number of codewords, over all `q^k` codewords.
    pub weight_distribution: BTreeMap<usize, u64>,
    /// A message whose codeword has minimum weight.
    pub witness: Vec<E>,
}

impl<F: Field> LinearCode<F> {
    /// Zero columns are rejected.
    pub fn new(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        Self::with_options(field, rows, false)
    }

    pub fn with_options(field: F, rows: Vec<Vec<F::Elem>>, allow_zero_columns: bool) -> Result<Self> {
        let g = Matrix::from_rows(field, rows)
            .ok_or_else(|| Error::Shape("rows have different lengths".into()))?;
        Self::from_matrix(g, allow_zero_columns)
    }

    pub fn from_i64(field: F, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::new(field, rows)
    }

    pub fn from_matrix(generator: Matrix<F>, allow_zero_columns: bool) -> Result<Self> {
        let (k, n) = (generator.nrows(), generator.ncols());
        if k == 0 || n == 0 {
            return Err(Error::Shape(format!("generator is {k}x{n}; need k >= 1 and n >= 1")));
        }
        if k > n {
            return Err(Error::Shape(format!("k = {k} exceeds n = {n}")));
        }
        let rank = generator.rank();
        if rank < k {
            return Err(Error::RankDeficient { rank, k });
        }
        let code = LinearCode { generator, allow_zero_columns };
        if !allow_zero_columns {
            if let Some(c) = code.zero_columns().first() {
                return Err(Error::ZeroColumn(*c));
            }
        }
        Ok(code)
    }

    pub fn field(&self) -> &F {
        self.generator.field()
    }

    pub fn generator(&self) -> &Matrix<F> {
        &self.generator
    }

    pub fn n(&self) -> usize {
        self.generator.ncols()
    }

    pub fn k(&self) -> usize {
        self.generator.nrows()
    }

    pub fn allows_zero_columns(&self) -> bool {
        self.allow_zero_columns
    }

    pub fn column(&self, i: usize) -> Vec<F::Elem> {
        self.generator.column(i)
    }

    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.n()).map(|i| self.column(i)).collect()
    }

    pub fn zero_columns(&self) -> Vec<usize> {
        let f = self.field();
        (0..self.n())
            .filter(|&c| (0..self.k()).all(|r| f.is_zero(self.generator.get(r, c))))
            .collect()
    }

    pub fn encode(&self, message: &[F::Elem]) -> Vec<F::Elem> {
        self.generator.vec_mul(message)
    }

    /// Exhaustive minimum distance over a finite field.
    pub fn min_distance_brute(&self, budget: &Budget) -> Result<BruteDistance<F::Elem>> {
        let f = self.field();
        let elems = f
            .elements()
            .ok_or_else(|| Error::UnsupportedField("a finite field for enumeration".into()))?;
        let q = elems.len() as u128;
        let k = self.k();
        let total = q.checked_pow(k as u32).unwrap_or(u128::MAX);
        budget::check("codeword enumeration q^k", total, budget.enumeration as u128)?;
        let total = total as u64;
        let n = self.n();

        // Message index i <-> digits base q, least significant first.
        let chunks = rayon::current_num_threads().max(1) as u64 * 4;
        let step = total.div_ceil(chunks).max(1);
        let ranges: Vec<(u64, u64)> = (0..total)
            .step_by(step as usize)
            .map(|s| (s, (s + step).min(total)))
            .collect();
        let partial: Vec<(Vec<u64>, Option<(usize, u64)>)> = ranges
            .par_iter()
            .map(|&(lo, hi)| {
                let mut hist = vec![0u64; n + 1];
                let mut best: Option<(usize, u64)> = None;
                for idx in lo..hi {
                    let msg = digits(idx, q as u64, k, &elems);
                    let w = weight(f, &self.encode(&msg));
                    hist[w] += 1;
                    if w > 0 && best.is_none_or(|(bw, _)| w < bw) {
                        best = Some((w, idx));
                    }
                }
                (hist, best)
            })
            .collect();

        let mut hist = vec![0u64; n + 1];
        let mut best: Option<(usize, u64)> = None;
        for (h, b) in partial {
            for (acc, x) in hist.iter_mut().zip(h) {
                *acc += x;
            }
            if let Some((w, idx)) = b {
                if best.is_none_or(|(bw, bi)| (w, idx) < (bw, bi)) {
                    best = Some((w, idx));
                }
            }
        }
        let (d, witness_idx) = best.expect("k >= 1 gives a nonzero codeword");
        let weight_distribution = hist
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
            .collect();
        Ok(BruteDistance {
            d,
            projective_count: hist[d] / (q as u64 - 1),
            weight_distribution,
            witness: digits(witness_idx, q as u64, k, &elems),
        })
    }

    /// Code whose generator rows span the right kernel of this generator.
    pub fn dual(&self) -> Result<LinearCode<F>> {
        if self.k() == self.n() {
            return Err(Error::ZeroDual);
        }
        let rows = self.generator.kernel_basis();
        LinearCode::with_options(self.field().clone(), rows, true)
    }

    /// Deletes column `i`.
    pub fn puncture(&self, i: usize) -> Result<LinearCode<F>> {
        self.check_column(i)?;
        if self.n() == 1 {
            return Err(Error::ColoopPuncture(i));
        }
        let g = self.generator.remove_column(i);
        if g.rank() < self.k() {
            return Err(Error::ColoopPuncture(i));
        }
        LinearCode::from_matrix(g, true)
    }

    /// Row-equivalent generator whose column `i` is the last unit vector.
    pub fn normalize_column(&self, i: usize) -> Result<Matrix<F>> {
        self.check_column(i)?;
        let f = self.field().clone();
        let k = self.k();
        let mut g = self.generator.clone();
        let pivot = (0..k)
            .rev()
            .find(|&r| !f.is_zero(g.get(r, i)))
            .ok_or(Error::ZeroColumn(i))?;
        g.swap_rows(pivot, k - 1);
        let inv = f.inv(g.get(k - 1, i)).expect("nonzero pivot");
        g.scale_row(k - 1, &inv);
        for r in 0..k - 1 {
            let s = g.get(r, i).clone();
            g.sub_row_multiple(r, k - 1, &s);
        }
        Ok(g)
    }

    /// Normalizes column `i` to `(0,...,0,1)^T`, then drops the last row and
    /// column `i`: an `[n-1, k-1]` code.
    pub fn shorten(&self, i: usize) -> Result<LinearCode<F>> {
        self.check_column(i)?;
        if (0..self.k()).all(|r| self.field().is_zero(self.generator.get(r, i))) {
            return Err(Error::ZeroColumn(i));
        }
        if self.k() < 2 {
            return Err(Error::DimensionUnderflow);
        }
        let g = self.normalize_column(i)?;
        let g = g.remove_row(self.k() - 1).remove_column(i);
        LinearCode::from_matrix(g, true)
    }

    /// Same code with `G` replaced by a row-equivalent generator.
    pub fn with_generator(&self, g: Matrix<F>) -> Result<LinearCode<F>> {
        LinearCode::from_matrix(g, self.allow_zero_columns)
    }

    fn check_column(&self, i: usize) -> Result<()> {
        if i >= self.n() {
            Err(Error::ColumnOutOfRange(i))
        } else {
            Ok(())
        }
    }
}

fn digits<E: Clone>(mut idx: u64, q: u64, k: usize, elems: &[E]) -> Vec<E> {
    (0..k)
        .map(|_| {
            let d = idx % q;
            idx /= q;
            elems[d as usize].clone()
        })
        .collect()
}

/// Number of nonzero entries.
pub fn weight<F: Field>(field: &F, word: &[F::Elem]) -> usize {
    word.iter().filter(|x| !field.is_zero(x)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};

    fn fp(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    fn g1(f: Fp) -> LinearCode<Fp> {
        LinearCode::from_i64(f, &[vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap()
    }

    fn g2() -> LinearCode<Fp> {
        LinearCode::from_i64(
            fp(7),
            &[vec![1, 0, 0, 1, 1], vec![0, 1, 0, 1, 2], vec![0, 0, 1, 1, 5]],
        )
        .unwrap()
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

    fn id3() -> LinearCode<Fp> {
        LinearCode::from_i64(fp(2), &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap()
    }

    #[test]
    fn construction() {
        let c = g1(fp(2));
        assert_eq!((c.n(), c.k()), (4, 3));
        assert_eq!((g2().n(), g2().k()), (5, 3));
        assert_eq!(
            LinearCode::from_i64(fp(2), &[vec![1, 1], vec![1, 1]]),
            Err(Error::RankDeficient { rank: 1, k: 2 })
        );
        assert_eq!(
            LinearCode::from_i64(fp(2), &[vec![1, 0], vec![0, 0]]).unwrap_err(),
            Error::RankDeficient { rank: 1, k: 2 }
        );
        assert_eq!(
            LinearCode::from_i64(fp(2), &[vec![1, 0]]).unwrap_err(),
            Error::ZeroColumn(1)
        );
        assert!(LinearCode::with_options(fp(2), vec![vec![1, 0]], true).is_ok());
    }

    #[test]
    fn weights() {
        let f3 = fp(3);
        assert_eq!(weight(&f3, &[0, 0, 0, 0]), 0);
        assert_eq!(weight(&f3, &[1, 0, 2]), 2);
        assert_eq!(weight(&fp(2), &[1, 1, 1, 1, 1]), 5);
    }

    #[test]
    fn brute_distances() {
        let b = Budget::default();
        let r = g1(fp(2)).min_distance_brute(&b).unwrap();
        assert_eq!((r.d, r.projective_count), (2, 6));
        assert_eq!(r.weight_distribution.values().sum::<u64>(), 8);
        let r = id3().min_distance_brute(&b).unwrap();
        assert_eq!((r.d, r.projective_count), (1, 3));
        let rep = LinearCode::from_i64(fp(3), &[vec![1, 1, 1, 1]]).unwrap();
        let r = rep.min_distance_brute(&b).unwrap();
        assert_eq!((r.d, r.projective_count), (4, 1));
        let w = g2().encode(&g2().min_distance_brute(&b).unwrap().witness);
        assert_eq!(weight(&fp(7), &w), 3);

        let q = LinearCode::from_i64(Rationals, &[vec![1, 1]]).unwrap();
        assert!(matches!(q.min_distance_brute(&b), Err(Error::UnsupportedField(_))));
        let tight = Budget { enumeration: 10, ..b };
        assert!(matches!(g2().min_distance_brute(&tight), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn hamming_weight_distribution() {
        let r = hamming().min_distance_brute(&Budget::default()).unwrap();
        let wd: Vec<(usize, u64)> = r.weight_distribution.into_iter().collect();
        assert_eq!(wd, vec![(0, 1), (3, 7), (4, 7), (7, 1)]);
    }

    #[test]
    fn duals() {
        let d = g1(fp(2)).dual().unwrap();
        assert_eq!(d.generator().to_rows(), vec![vec![1, 1, 1, 1]]);
        let rep = LinearCode::from_i64(fp(2), &[vec![1, 1, 1]]).unwrap();
        let d = rep.dual().unwrap();
        assert_eq!(d.k(), 2);
        let want = Matrix::from_i64(fp(2), &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let mut both = d.generator().to_rows();
        both.extend(want.to_rows());
        assert_eq!(Matrix::from_rows(fp(2), both).unwrap().rank(), 2);
        assert_eq!(id3().dual(), Err(Error::ZeroDual));
        // [I | P] -> [-P^T | I]
        let d = g2().dual().unwrap();
        assert_eq!(d.generator().to_rows(), vec![vec![6, 6, 6, 1, 0], vec![6, 5, 2, 0, 1]]);
    }

    #[test]
    fn double_dual_has_same_row_space() {
        for c in [g1(fp(2)), g2(), hamming()] {
            let dd = c.dual().unwrap().dual().unwrap();
            assert_eq!(dd.k(), c.k());
            let mut rows = c.generator().to_rows();
            rows.extend(dd.generator().to_rows());
            assert_eq!(Matrix::from_rows(*c.field(), rows).unwrap().rank(), c.k());
        }
    }

    #[test]
    fn punctures() {
        let p = g2().puncture(4).unwrap();
        assert_eq!(p.generator(), g1(fp(7)).generator());
        assert_eq!(id3().puncture(0), Err(Error::ColoopPuncture(0)));
        let rep = LinearCode::from_i64(fp(2), &[vec![1, 1, 1]]).unwrap();
        let p = rep.puncture(2).unwrap();
        assert_eq!(p.n(), 2);
        assert_eq!(p.min_distance_brute(&Budget::default()).unwrap().d, 2);
    }

    #[test]
    fn shortenings() {
        let b = Budget::default();
        let s = g2().shorten(2).unwrap();
        assert_eq!(s.generator().to_rows(), vec![vec![1, 0, 1, 1], vec![0, 1, 1, 2]]);
        assert_eq!(s.min_distance_brute(&b).unwrap().d, 3);
        let rep = LinearCode::from_i64(fp(2), &[vec![1, 1, 1]]).unwrap();
        assert_eq!(rep.shorten(0), Err(Error::DimensionUnderflow));
        let s = hamming().shorten(0).unwrap();
        assert_eq!((s.n(), s.k()), (6, 3));
        assert_eq!(s.min_distance_brute(&b).unwrap().d, 3);
        let z = LinearCode::with_options(fp(2), vec![vec![1, 0, 1], vec![0, 0, 1]], true).unwrap();
        assert_eq!(z.shorten(1), Err(Error::ZeroColumn(1)));
    }

    #[test]
    fn puncture_and_shorten_distance_relations() {
        let b = Budget::default();
        for c in [g2(), hamming(), g1(fp(3))] {
            let d = c.min_distance_brute(&b).unwrap().d;
            for i in 0..c.n() {
                let Ok(p) = c.puncture(i) else { continue };
                let dp = p.min_distance_brute(&b).unwrap().d;
                assert!(dp == d || dp + 1 == d);
                if let Ok(s) = c.shorten(i) {
                    assert!(s.min_distance_brute(&b).unwrap().d >= dp);
                }
            }
        }
    }
}
