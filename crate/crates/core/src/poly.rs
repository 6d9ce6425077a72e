//! Sparse multivariate polynomials and graded monomial bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::field::Field;

pub type Exponents = Vec<u32>;

/// Sparse polynomial: exponent vector to nonzero coefficient.
#[derive(Clone)]
pub struct MultiPoly<F: Field> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Exponents, F::Elem>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        MultiPoly { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(field: F, nvars: usize) -> Self {
        let one = field.one();
        Self::constant(field, nvars, one)
    }

    pub fn var(field: F, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let one = field.one();
        let mut p = Self::zero(field, nvars);
        p.add_term(e, one);
        p
    }

    pub fn monomial(field: F, exps: Exponents, c: F::Elem) -> Self {
        let mut p = Self::zero(field, exps.len());
        p.add_term(exps, c);
        p
    }

    /// The linear form `sum coeffs[i] * x_i`.
    pub fn linear(field: F, coeffs: &[F::Elem]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(field, n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &F::Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> F::Elem {
        self.terms.get(exps).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * x^exps`, dropping the term if it cancels.
    pub fn add_term(&mut self, exps: Exponents, c: F::Elem) {
        debug_assert_eq!(exps.len(), self.nvars);
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v = self.field.add(v, &c);
                if self.field.is_zero(v) {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(d)` when every term has degree `d`; `None` for the zero
    /// polynomial or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), self.field.neg(c));
        }
        out
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), self.field.mul(c, s));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, f.mul(c1, c2));
            }
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, f.mul(c, &f.from_i64(e[i] as i64)));
        }
        out
    }

    /// Derivative along the direction `q`: `sum_j q_j * d/dx_j`.
    pub fn directional(&self, q: &[F::Elem]) -> Self {
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (j, qj) in q.iter().enumerate() {
            if self.field.is_zero(qj) {
                continue;
            }
            out = out.add(&self.partial(j).scale(qj));
        }
        out
    }

    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        self.terms.iter().fold(f.zero(), |acc, (e, c)| {
            let m = e
                .iter()
                .zip(point)
                .fold(c.clone(), |m, (&k, x)| f.mul(&m, &f.pow(x, k as u64)));
            f.add(&acc, &m)
        })
    }

    /// Coefficient-wise image in another field; `None` if some coefficient
    /// has no image.
    pub fn map_field<G: Field>(
        &self,
        target: G,
        mut conv: impl FnMut(&F::Elem) -> Option<G::Elem>,
    ) -> Option<MultiPoly<G>> {
        let mut out = MultiPoly::zero(target, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), conv(c)?);
        }
        Some(out)
    }

    /// Coefficient vector over a monomial basis of matching degree.
    pub fn to_dense(&self, basis: &MonomialBasis) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); basis.len()];
        for (e, c) in &self.terms {
            let idx = basis
                .index_of(e)
                .expect("polynomial must be homogeneous of the basis degree");
            v[idx] = c.clone();
        }
        v
    }

    pub fn from_dense(field: F, basis: &MonomialBasis, v: &[F::Elem]) -> Self {
        let mut p = Self::zero(field, basis.nvars());
        for (i, c) in v.iter().enumerate() {
            p.add_term(basis.monomial(i).clone(), c.clone());
        }
        p
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let f = &self.field;
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            let mono = mono.join("*");
            let term = if mono.is_empty() {
                c.to_string()
            } else if f.is_one(c) {
                mono
            } else {
                format!("{c}*{mono}")
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

/// `x, y, z` for up to three variables, otherwise `<prefix>1 ..`.
pub fn default_var_names(nvars: usize, prefix: &str) -> Vec<String> {
    if nvars <= 3 && prefix == "x" {
        ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=nvars).map(|i| format!("{prefix}{i}")).collect()
    }
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_var_names(self.nvars, "x")))
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_var_names(self.nvars, "x")))
    }
}

/// Monomials of a fixed degree in lexicographic order (`x1^t` first).
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    nvars: usize,
    degree: u32,
    monos: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let mut monos = Vec::new();
        let mut cur = vec![0u32; nvars];
        fill(&mut monos, &mut cur, 0, degree);
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialBasis { nvars, degree, monos, index }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomial(&self, i: usize) -> &Exponents {
        &self.monos[i]
    }

    pub fn monomials(&self) -> &[Exponents] {
        &self.monos
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }
}

fn fill(out: &mut Vec<Exponents>, cur: &mut Exponents, pos: usize, left: u32) {
    let n = cur.len();
    if n == 0 {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if pos == n - 1 {
        cur[pos] = left;
        out.push(cur.clone());
        cur[pos] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(out, cur, pos + 1, left - e);
    }
    cur[pos] = 0;
}

/// Monomial bases for every degree up to a bound, with precomputed
/// multiplication-by-variable maps between consecutive degrees.
#[derive(Debug, Clone)]
pub struct GradedMonomials {
    nvars: usize,
    bases: Vec<MonomialBasis>,
    /// `shift[t][c * nvars + v]` is the index of `x_v * m_c` in degree `t+1`.
    shift: Vec<Vec<usize>>,
}

impl GradedMonomials {
    pub fn new(nvars: usize) -> Self {
        GradedMonomials { nvars, bases: vec![MonomialBasis::new(nvars, 0)], shift: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ensure(&mut self, degree: u32) {
        while self.bases.len() <= degree as usize {
            let t = self.bases.len() as u32;
            let next = MonomialBasis::new(self.nvars, t);
            let prev = &self.bases[t as usize - 1];
            let mut table = Vec::with_capacity(prev.len() * self.nvars);
            for m in prev.monomials() {
                for v in 0..self.nvars {
                    let mut e = m.clone();
                    e[v] += 1;
                    table.push(next.index_of(&e).expect("degree t+1 monomial"));
                }
            }
            self.shift.push(table);
            self.bases.push(next);
        }
    }

    pub fn basis(&mut self, degree: u32) -> &MonomialBasis {
        self.ensure(degree);
        &self.bases[degree as usize]
    }

    pub fn dim(&mut self, degree: u32) -> usize {
        self.basis(degree).len()
    }

    /// Index of `x_v * m_c` where `m_c` has degree `t`.
    pub fn times_var(&mut self, t: u32, c: usize, v: usize) -> usize {
        self.ensure(t + 1);
        self.shift[t as usize][c * self.nvars + v]
    }

    /// Multiplies a dense degree-`t` vector by `x_v`.
    pub fn raise<F: Field>(&mut self, field: &F, t: u32, v: &[F::Elem], var: usize) -> Vec<F::Elem> {
        self.ensure(t + 1);
        let mut out = vec![field.zero(); self.bases[t as usize + 1].len()];
        let table = &self.shift[t as usize];
        for (c, x) in v.iter().enumerate() {
            if !field.is_zero(x) {
                out[table[c * self.nvars + var]] = x.clone();
            }
        }
        out
    }

    /// Multiplies a dense degree-`t` vector by a linear form.
    pub fn times_linear<F: Field>(
        &mut self,
        field: &F,
        t: u32,
        v: &[F::Elem],
        form: &[F::Elem],
    ) -> Vec<F::Elem> {
        self.ensure(t + 1);
        let mut out = vec![field.zero(); self.bases[t as usize + 1].len()];
        let table = &self.shift[t as usize];
        for (c, x) in v.iter().enumerate() {
            if field.is_zero(x) {
                continue;
            }
            for (var, a) in form.iter().enumerate() {
                if field.is_zero(a) {
                    continue;
                }
                let idx = table[c * self.nvars + var];
                out[idx] = field.add(&out[idx], &field.mul(x, a));
            }
        }
        out
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `dim R_t` for `R` a polynomial ring in `nvars` variables.
pub fn graded_dim(nvars: usize, t: usize) -> usize {
    if nvars == 0 {
        return (t == 0) as usize;
    }
    binomial((nvars - 1 + t) as u64, (nvars - 1) as u64) as usize
}
