//! Ideals generated by products of the dual linear forms of a code,
//! compared degree by degree through exact spans.
//!
//! `I(C, a)` is generated in degree `a` by all products of `a` distinct
//! forms, so every piece `I(C, a)_t` with `t > a` is obtained from the
//! previous one by multiplying with the variables. No Gröbner machinery is
//! involved: every ideal comparison is a rank comparison inside a fixed
//! graded piece `R_t`, with monomials in lexicographic order.
//!
//! Conventions for out-of-range indices: `I(C, b) = R` for `b <= 0` and
//! `I(C, b) = 0` once `b` exceeds the number of forms.

use std::collections::{BTreeMap, HashMap};

use crate::budget::{self, Budget};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Echelon, Matrix};
use crate::matroid::{code_distance, Matroid, TuttePoly};
use crate::poly::{binomial, graded_dim, GradedMonomials, MultiPoly};

/// `sum coeffs[j] * x_j`, dual to one column of the generator.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm<E> {
    pub coeffs: Vec<E>,
}

impl<E: Clone> LinearForm<E> {
    pub fn to_poly<F: Field<Elem = E>>(&self, field: F) -> MultiPoly<F> {
        MultiPoly::linear(field, &self.coeffs)
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, point: &[E]) -> E {
        crate::matrix::dot(field, &self.coeffs, point)
    }
}

/// The forms `l_i` whose coefficient vectors are the columns of `G`.
pub fn dual_forms<F: Field>(code: &LinearCode<F>) -> Result<Vec<LinearForm<F::Elem>>> {
    if let Some(&c) = code.zero_columns().first() {
        return Err(Error::ZeroColumn(c));
    }
    Ok(code.columns().into_iter().map(|coeffs| LinearForm { coeffs }).collect())
}

/// One graded piece `I_t`, as an echelon basis over the degree-`t`
/// monomials.
#[derive(Debug, Clone)]
pub struct GradedSpan<F: Field> {
    pub degree: usize,
    pub basis: Echelon<F>,
}

impl<F: Field> GradedSpan<F> {
    pub fn dim(&self) -> usize {
        self.basis.rank()
    }
}

/// Lazily computed pieces `I(C, a)_t` for one list of forms.
pub struct ProductIdeals<F: Field> {
    field: F,
    nvars: usize,
    forms: Vec<Vec<F::Elem>>,
    budget: Budget,
    mons: GradedMonomials,
    /// `spans[a][t - a]`
    spans: HashMap<usize, Vec<GradedSpan<F>>>,
}

impl<F: Field> ProductIdeals<F> {
    pub fn new(field: F, nvars: usize, forms: Vec<Vec<F::Elem>>, budget: Budget) -> Self {
        ProductIdeals {
            field,
            nvars,
            forms,
            budget,
            mons: GradedMonomials::new(nvars),
            spans: HashMap::new(),
        }
    }

    pub fn from_code(code: &LinearCode<F>, budget: &Budget) -> Result<Self> {
        let forms = dual_forms(code)?.into_iter().map(|f| f.coeffs).collect();
        Ok(Self::new(code.field().clone(), code.k(), forms, *budget))
    }

    pub fn num_forms(&self) -> usize {
        self.forms.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomials(&mut self) -> &mut GradedMonomials {
        &mut self.mons
    }

    /// `dim I(C, a)_t` for a genuine product ideal (`1 <= a <= #forms`,
    /// `t >= a`).
    pub fn span(&mut self, a: usize, t: usize) -> Result<&GradedSpan<F>> {
        assert!(a >= 1 && a <= self.forms.len() && t >= a);
        let n = self.forms.len() as u64;
        let rows = binomial(n, a as u64).saturating_mul(graded_dim(self.nvars, t - a) as u128);
        budget::check("spanning rows for I(C,a)_t", rows, self.budget.rows as u128)?;
        if !self.spans.contains_key(&a) {
            let gens = self.generators(a);
            self.spans.insert(a, vec![gens]);
        }
        loop {
            let have = self.spans[&a].len();
            if a + have > t {
                break;
            }
            let prev = self.spans[&a].last().expect("nonempty");
            let next = raise_span(&self.field, &mut self.mons, prev, self.nvars);
            self.spans.get_mut(&a).expect("present").push(next);
        }
        Ok(&self.spans[&a][t - a])
    }

    /// Dimension with the out-of-range conventions applied.
    pub fn dim(&mut self, a: isize, t: isize) -> Result<usize> {
        if t < 0 {
            return Ok(0);
        }
        if a <= 0 {
            return Ok(graded_dim(self.nvars, t as usize));
        }
        let (a, t) = (a as usize, t as usize);
        if a > self.forms.len() || t < a {
            return Ok(0);
        }
        Ok(self.span(a, t)?.dim())
    }

    /// Spanning rows of `I(C, a)_t` with the conventions applied.
    pub fn rows(&mut self, a: isize, t: isize) -> Result<Vec<Vec<F::Elem>>> {
        if t < 0 {
            return Ok(Vec::new());
        }
        let tt = t as usize;
        if a <= 0 {
            let d = self.mons.dim(tt as u32);
            return Ok((0..d)
                .map(|i| {
                    let mut v = vec![self.field.zero(); d];
                    v[i] = self.field.one();
                    v
                })
                .collect());
        }
        let a = a as usize;
        if a > self.forms.len() || tt < a {
            return Ok(Vec::new());
        }
        Ok(self.span(a, tt)?.basis.rows().to_vec())
    }

    /// Span of all `a`-fold products, in degree `a`.
    fn generators(&mut self, a: usize) -> GradedSpan<F> {
        let dim = self.mons.dim(a as u32);
        let mut basis = Echelon::new(self.field.clone(), dim);
        let one = vec![self.field.one()];
        let forms = self.forms.clone();
        products_rec(&self.field, &mut self.mons, &forms, 0, a, 0, &one, &mut basis);
        GradedSpan { degree: a, basis }
    }
}

#[allow(clippy::too_many_arguments)]
fn products_rec<F: Field>(
    field: &F,
    mons: &mut GradedMonomials,
    forms: &[Vec<F::Elem>],
    start: usize,
    left: usize,
    deg: u32,
    cur: &[F::Elem],
    out: &mut Echelon<F>,
) {
    if out.is_full() {
        return;
    }
    if left == 0 {
        out.insert(cur.to_vec());
        return;
    }
    for i in start..=forms.len() - left {
        let next = mons.times_linear(field, deg, cur, &forms[i]);
        products_rec(field, mons, forms, i + 1, left - 1, deg + 1, &next, out);
    }
}

fn raise_span<F: Field>(field: &F, mons: &mut GradedMonomials, prev: &GradedSpan<F>, nvars: usize) -> GradedSpan<F> {
    let t = prev.degree as u32;
    let dim = mons.dim(t + 1);
    let mut basis = Echelon::new(field.clone(), dim);
    'outer: for row in prev.basis.rows() {
        for v in 0..nvars {
            basis.insert(mons.raise(field, t, row, v));
            if basis.is_full() {
                break 'outer;
            }
        }
    }
    GradedSpan { degree: prev.degree + 1, basis }
}

/// `dim I(C, a)_t`.
pub fn afold_dim<F: Field>(code: &LinearCode<F>, a: usize, t: usize, budget: &Budget) -> Result<usize> {
    ProductIdeals::from_code(code, budget)?.dim(a as isize, t as isize)
}

/// Largest `a` with `I(C, b) = m^b` for every `1 <= b <= a`.
pub fn distance_via_afold<F: Field>(code: &LinearCode<F>, budget: &Budget) -> Result<usize> {
    let mut ideals = ProductIdeals::from_code(code, budget)?;
    afold_distance(&mut ideals)
}

pub(crate) fn afold_distance<F: Field>(ideals: &mut ProductIdeals<F>) -> Result<usize> {
    let n = ideals.num_forms();
    let k = ideals.nvars();
    for a in 1..=n {
        if ideals.dim(a as isize, a as isize)? < graded_dim(k, a) {
            return Ok(a - 1);
        }
    }
    Ok(n)
}

/// Initial degree of `m * Fitt(C)`.
///
/// The `j`-th summand of `m * Fitt(C)` is `m I(C, j) / I(C, j+1)`, nonzero in
/// degree `t` exactly when `R_1 * I(C, j)_{t-1}` is strictly larger than
/// `I(C, j+1)_t`.
pub fn alpha_m_fitt<F: Field>(code: &LinearCode<F>, budget: &Budget) -> Result<usize> {
    let mut ideals = ProductIdeals::from_code(code, budget)?;
    let n = code.n();
    for t in 1..=n + 1 {
        for j in 0..=(t - 1).min(n) {
            // I(C, j) is generated in degree j <= t-1, so R_1 * I(C, j)_{t-1}
            // is exactly the raised piece I(C, j)_t.
            let lhs = ideals.dim(j as isize, t as isize)?;
            let rhs = ideals.dim(j as isize + 1, t as isize)?;
            if lhs > rhs {
                return Ok(t);
            }
        }
    }
    unreachable!("m * I(C, n) is nonzero in degree n + 1")
}

/// `dim P(C)_{u,v}` for every occurring pair, where `P(C)_{u,v}` is spanned
/// by the products `l_I` with `|I| = n - v` whose complementary forms span
/// a `u`-dimensional space.
pub fn p_dims<F: Field>(code: &LinearCode<F>, budget: &Budget) -> Result<BTreeMap<(usize, usize), usize>> {
    let forms: Vec<Vec<F::Elem>> = dual_forms(code)?.into_iter().map(|f| f.coeffs).collect();
    let ranks = Matroid::new(code).all_ranks(budget)?;
    let n = code.n();
    let full = (1usize << n) - 1;
    let field = code.field().clone();
    let mut mons = GradedMonomials::new(code.k());
    let mut groups: HashMap<(usize, usize), Echelon<F>> = HashMap::new();
    let mut stack = vec![(0usize, 0usize, vec![field.one()])];
    // Depth-first over subsets: (next index, mask, product of the chosen forms).
    while let Some((i, mask, prod)) = stack.pop() {
        if i == n {
            let size = mask.count_ones() as usize;
            let u = ranks[full & !mask] as usize;
            let v = n - size;
            let dim = mons.dim(size as u32);
            groups
                .entry((u, v))
                .or_insert_with(|| Echelon::new(field.clone(), dim))
                .insert(prod);
            continue;
        }
        let deg = mask.count_ones();
        let with = mons.times_linear(&field, deg, &prod, &forms[i]);
        stack.push((i + 1, mask | 1 << i, with));
        stack.push((i + 1, mask, prod));
    }
    Ok(groups.into_iter().map(|(key, e)| (key, e.rank())).collect())
}

/// `sum (x-1)^{k-u} y^{v-u} dim P(C)_{u,v}`.
pub fn tutte_via_berget<F: Field>(code: &LinearCode<F>, budget: &Budget) -> Result<TuttePoly> {
    let dims = p_dims(code, budget)?;
    Ok(berget_polynomial(&dims, code.k()))
}

pub fn berget_polynomial(dims: &BTreeMap<(usize, usize), usize>, k: usize) -> TuttePoly {
    let mut t = TuttePoly::default();
    for (&(u, v), &dim) in dims {
        t.add_expanded(dim as i128, (k - u) as u32, (v - u) as u32, 0);
    }
    t
}

/// `dim_K Fitt(C) / m Fitt(C) = 1 + sum_j dim I(C, j)_j`.
pub fn fitt_tensor_total_dim<F: Field>(code: &LinearCode<F>, budget: &Budget) -> Result<usize> {
    let mut ideals = ProductIdeals::from_code(code, budget)?;
    let mut total = 1;
    for j in 1..=code.n() {
        total += ideals.dim(j as isize, j as isize)?;
    }
    Ok(total)
}

/// Power-series coefficients of the star-configuration Hilbert series
/// `sum_{u=0}^{n-c} C(c-1+u, c-1) t^u / (1-t)^{k-c}` up to `t_max`.
pub fn star_hs_coeffs(n: usize, k: usize, c: usize, t_max: usize) -> Result<Vec<u64>> {
    if c < 1 || c + 1 > k || c > n {
        return Err(Error::BadRange(format!("star configuration needs 1 <= c <= k-1, got c = {c}, k = {k}")));
    }
    let num: Vec<u128> = (0..=n - c).map(|u| binomial((c - 1 + u) as u64, (c - 1) as u64)).collect();
    let m = (k - c) as u64;
    let series: Vec<u128> = (0..=t_max).map(|s| binomial(m - 1 + s as u64, m - 1)).collect();
    Ok((0..=t_max)
        .map(|t| {
            (0..=t.min(num.len() - 1))
                .map(|u| num[u] * series[t - u])
                .sum::<u128>() as u64
        })
        .collect())
}

fn require_mds<F: Field>(code: &LinearCode<F>, budget: &Budget) -> Result<()> {
    let d = code_distance(code, budget)?;
    let singleton = code.n() - code.k() + 1;
    if d != singleton {
        return Err(Error::NotMds { d, singleton });
    }
    Ok(())
}

/// For an MDS code: `HF(R / I(C, j), t)` matches the star-configuration
/// series with `c = n - j + 1` for all `n - k + 2 <= j <= n`, `t <= t_max`.
pub fn mds_star_check<F: Field>(code: &LinearCode<F>, t_max: usize, budget: &Budget) -> Result<bool> {
    require_mds(code, budget)?;
    let mut ideals = ProductIdeals::from_code(code, budget)?;
    Ok(star_mismatches(&mut ideals, code.n(), code.k(), t_max)?.is_empty())
}

/// `(j, t)` pairs where the Hilbert function and the closed form differ.
pub fn star_mismatches<F: Field>(
    ideals: &mut ProductIdeals<F>,
    n: usize,
    k: usize,
    t_max: usize,
) -> Result<Vec<(usize, usize)>> {
    let mut bad = Vec::new();
    if k < 2 {
        return Ok(bad);
    }
    for j in n - k + 2..=n {
        let series = star_hs_coeffs(n, k, n - j + 1, t_max)?;
        for (t, &want) in series.iter().enumerate() {
            let hf = graded_dim(k, t) - ideals.dim(j as isize, t as isize)?;
            if hf as u64 != want {
                bad.push((j, t));
            }
        }
    }
    Ok(bad)
}

/// Deletion `C'` and restriction `C''` at the last column, after the
/// generator has been row-reduced so that `l_n = x_k`.
pub struct DeletionRestriction<F: Field> {
    pub whole: ProductIdeals<F>,
    pub deletion: ProductIdeals<F>,
    pub restriction: ProductIdeals<F>,
    nvars: usize,
}

impl<F: Field> DeletionRestriction<F> {
    pub fn new(code: &LinearCode<F>, budget: &Budget) -> Result<Self> {
        let n = code.n();
        let k = code.k();
        if let Some(&c) = code.zero_columns().first() {
            return Err(Error::ZeroColumn(c));
        }
        let g: Matrix<F> = code.normalize_column(n - 1)?;
        let field = code.field().clone();
        let cols: Vec<Vec<F::Elem>> = (0..n).map(|c| g.column(c)).collect();
        let deleted: Vec<Vec<F::Elem>> = cols[..n - 1].to_vec();
        let restricted: Vec<Vec<F::Elem>> = deleted.iter().map(|c| c[..k - 1].to_vec()).collect();
        Ok(DeletionRestriction {
            whole: ProductIdeals::new(field.clone(), k, cols, *budget),
            deletion: ProductIdeals::new(field.clone(), k, deleted, *budget),
            restriction: ProductIdeals::new(field, k - 1, restricted, *budget),
            nvars: k,
        })
    }

    /// Degree-`t` pieces of `I(C, a)` and `x_k I(C', a-1) + I(C', a)`
    /// coincide.
    pub fn delres_identity(&mut self, a: usize, t: usize) -> Result<bool> {
        if a == 0 {
            return Err(Error::BadRange("deletion-restriction identity needs a >= 1".into()));
        }
        let (a, t) = (a as isize, t as isize);
        let field = self.whole.field.clone();
        let dim_t = graded_dim(self.nvars, t as usize);
        let mut lhs = Echelon::new(field.clone(), dim_t);
        for r in self.whole.rows(a, t)? {
            lhs.insert(r);
        }
        let mut rhs = Echelon::new(field.clone(), dim_t);
        if t >= 1 {
            let lower = self.deletion.rows(a - 1, t - 1)?;
            let mons = self.deletion.monomials();
            for r in lower {
                rhs.insert(mons.raise(&field, (t - 1) as u32, &r, self.nvars - 1));
            }
        }
        for r in self.deletion.rows(a, t)? {
            rhs.insert(r);
        }
        let mut both = lhs.clone();
        for r in rhs.rows() {
            both.insert(r.clone());
        }
        Ok(lhs.rank() == rhs.rank() && both.rank() == lhs.rank())
    }

    /// `dim (I_a/I_{a+1})_t = dim (I'_{a-1}/I'_a)_{t-1} + dim (I''_a/I''_{a+1})_t`.
    pub fn ses_dims(&mut self, a: usize, t: usize) -> Result<bool> {
        let (a, t) = (a as isize, t as isize);
        let mid = quotient_dim(&mut self.whole, a, t)?;
        let left = quotient_dim(&mut self.deletion, a - 1, t - 1)?;
        let right = quotient_dim(&mut self.restriction, a, t)?;
        Ok(mid == left + right)
    }
}

fn quotient_dim<F: Field>(ideals: &mut ProductIdeals<F>, a: isize, t: isize) -> Result<usize> {
    Ok(ideals.dim(a, t)? - ideals.dim(a + 1, t)?)
}

pub fn delres_identity_check<F: Field>(code: &LinearCode<F>, a: usize, t: usize, budget: &Budget) -> Result<bool> {
    DeletionRestriction::new(code, budget)?.delres_identity(a, t)
}

/// Degreewise form of the short exact sequence
/// `0 -> Fitt(C')(-1) -> Fitt(C) -> Fitt(C'') -> 0` for MDS codes.
pub fn ses_dim_check<F: Field>(code: &LinearCode<F>, a: usize, t: usize, budget: &Budget) -> Result<bool> {
    require_mds(code, budget)?;
    if code.k() < 2 {
        return Err(Error::DimensionUnderflow);
    }
    DeletionRestriction::new(code, budget)?.ses_dims(a, t)
}
