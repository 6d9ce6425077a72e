//! Dense exact linear algebra.

use std::fmt;

use crate::field::Field;

/// Dense row-major matrix over an exact field.
#[derive(Clone)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone)]
pub struct Rref<F: Field> {
    pub rank: usize,
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Builds from rows; every row must have the same length.
    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        let data = rows.into_iter().flatten().collect();
        Some(Matrix { field, rows: r, cols: c, data })
    }

    pub fn from_i64(field: F, rows: &[Vec<i64>]) -> Option<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, rows)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let rows = (0..self.rows)
            .map(|r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
            .collect();
        Matrix::from_rows(self.field.clone(), rows)
            .unwrap_or_else(|| Matrix::zeros(self.field.clone(), self.rows, cols.len()))
    }

    pub fn remove_column(&self, c: usize) -> Self {
        let keep: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.select_columns(&keep)
    }

    pub fn remove_row(&self, r: usize) -> Self {
        let rows: Vec<Vec<F::Elem>> = (0..self.rows)
            .filter(|&i| i != r)
            .map(|i| self.row(i).to_vec())
            .collect();
        if rows.is_empty() {
            return Matrix::zeros(self.field.clone(), 0, self.cols);
        }
        Matrix::from_rows(self.field.clone(), rows).expect("rows share a length")
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn scale_row(&mut self, r: usize, s: &F::Elem) {
        for c in 0..self.cols {
            let v = self.field.mul(self.get(r, c), s);
            self.set(r, c, v);
        }
    }

    /// row[dst] -= s * row[src]
    pub fn sub_row_multiple(&mut self, dst: usize, src: usize, s: &F::Elem) {
        if self.field.is_zero(s) {
            return;
        }
        for c in 0..self.cols {
            let t = self.field.mul(self.get(src, c), s);
            let v = self.field.sub(self.get(dst, c), &t);
            self.set(dst, c, v);
        }
    }

    /// `self · v`.
    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        (0..self.rows)
            .map(|r| dot(&self.field, self.row(r), v))
            .collect()
    }

    /// `u · self` for a row vector `u`.
    pub fn vec_mul(&self, u: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (r, ur) in u.iter().enumerate() {
            if f.is_zero(ur) {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(o, &f.mul(ur, self.get(r, c)));
            }
        }
        out
    }

    /// Reduced row echelon form. Pivots are chosen as the leftmost column
    /// with a nonzero entry at or below the current row, taking the first
    /// such row.
    pub fn rref(&self) -> Rref<F> {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row {
                    let s = m.get(r, col).clone();
                    m.sub_row_multiple(r, row, &s);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { rank: pivots.len(), reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field.clone(), self.cols);
        for r in 0..self.rows {
            e.insert(self.row(r).to_vec());
            if e.is_full() {
                break;
            }
        }
        e.rank()
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free
    /// column in increasing column order.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let Rref { reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(reduced.get(r, free));
                }
                v
            })
            .collect()
    }
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field.ctx())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter()
        .zip(b)
        .fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}

/// Incrementally built row-echelon basis of a subspace of `F^ncols`.
///
/// Stored rows have a leading 1 in their pivot column and are zero in the
/// pivot columns of every row inserted before them. Reducing a vector
/// against the rows in insertion order therefore clears every pivot
/// column, which gives a canonical normal form modulo the span.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    is_pivot: Vec<bool>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            is_pivot: vec![false; ncols],
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.is_pivot[col]
    }

    /// Reduces `v` in place against the basis.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let s = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&s, r));
                }
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let f = &self.field;
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).expect("nonzero");
        for x in v.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        self.is_pivot[p] = true;
        true
    }
}

/// Bit-packed elimination over GF(2).
pub mod gf2 {
    /// Row of bits packed into 64-bit words.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct BitRow {
        words: Vec<u64>,
        len: usize,
    }

    impl BitRow {
        pub fn zeros(len: usize) -> Self {
            BitRow { words: vec![0; len.div_ceil(64)], len }
        }

        pub fn from_bools(bits: &[bool]) -> Self {
            let mut r = Self::zeros(bits.len());
            for (i, &b) in bits.iter().enumerate() {
                if b {
                    r.set(i);
                }
            }
            r
        }

        pub fn from_words(words: Vec<u64>, len: usize) -> Self {
            BitRow { words, len }
        }

        pub fn len(&self) -> usize {
            self.len
        }

        pub fn is_empty(&self) -> bool {
            self.len == 0
        }

        pub fn get(&self, i: usize) -> bool {
            self.words[i / 64] >> (i % 64) & 1 == 1
        }

        pub fn set(&mut self, i: usize) {
            self.words[i / 64] |= 1 << (i % 64);
        }

        pub fn xor_assign(&mut self, other: &BitRow) {
            for (a, b) in self.words.iter_mut().zip(&other.words) {
                *a ^= b;
            }
        }

        pub fn and_assign(&mut self, other: &BitRow) {
            for (a, b) in self.words.iter_mut().zip(&other.words) {
                *a &= b;
            }
        }

        pub fn or_assign(&mut self, other: &BitRow) {
            for (a, b) in self.words.iter_mut().zip(&other.words) {
                *a |= b;
            }
        }

        pub fn count_ones(&self) -> usize {
            self.words.iter().map(|w| w.count_ones() as usize).sum()
        }

        pub fn is_zero(&self) -> bool {
            self.words.iter().all(|&w| w == 0)
        }

        /// Every set bit of `self` is set in `other`.
        pub fn is_subset(&self, other: &BitRow) -> bool {
            self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
        }

        pub fn leading(&self) -> Option<usize> {
            self.words
                .iter()
                .enumerate()
                .find(|(_, w)| **w != 0)
                .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
        }
    }

    /// Rank of a set of GF(2) rows.
    pub fn rank(rows: impl IntoIterator<Item = BitRow>) -> usize {
        let mut basis: Vec<(usize, BitRow)> = Vec::new();
        for mut r in rows {
            for (p, b) in &basis {
                if r.get(*p) {
                    r.xor_assign(b);
                }
            }
            if let Some(p) = r.leading() {
                basis.push((p, r));
            }
        }
        basis.len()
    }
}
