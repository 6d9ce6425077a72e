//! Binary codes through the Boolean ring `F2[y] / (y_i^2 - y_i)`.
//!
//! The ring is a product of copies of GF(2), one per point of `F2^n`, so an
//! element is stored as its table of values and an ideal is determined by
//! its common zero set: `dim I = 2^n - |Z(I)|`. The filtration by
//! squarefree monomial ideals `I(Y, a)` then relates ideal dimensions to
//! the weight distribution of the code.

use serde::{Deserialize, Serialize};

use crate::budget::{self, Budget};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::matrix::gf2::{self, BitRow};
use crate::matroid::for_each_combination;

/// A function `F2^n -> F2`. Bit `j` of a point index is the value of
/// `y_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolFn {
    n: usize,
    table: BitRow,
}

impl BoolFn {
    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Self {
        let mut table = BitRow::zeros(1 << n);
        for p in 0..1usize << n {
            if f(p) {
                table.set(p);
            }
        }
        BoolFn { n, table }
    }

    pub fn zero(n: usize) -> Self {
        BoolFn { n, table: BitRow::zeros(1 << n) }
    }

    pub fn one(n: usize) -> Self {
        Self::from_fn(n, |_| true)
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::from_fn(n, |p| p >> i & 1 == 1)
    }

    /// `prod_{i in vars} y_i`.
    pub fn monomial(n: usize, vars: &[usize]) -> Self {
        let mask: usize = vars.iter().map(|&i| 1 << i).sum();
        Self::from_fn(n, |p| p & mask == mask)
    }

    /// `sum coeffs[i] * y_i`.
    pub fn linear(n: usize, coeffs: &[bool]) -> Self {
        let mask: usize = coeffs.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| 1 << i).sum();
        Self::from_fn(n, |p| (p & mask).count_ones() % 2 == 1)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &BitRow {
        &self.table
    }

    pub fn eval(&self, point: usize) -> bool {
        self.table.get(point)
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }

    pub fn add(&self, other: &BoolFn) -> BoolFn {
        let mut table = self.table.clone();
        table.xor_assign(&other.table);
        BoolFn { n: self.n, table }
    }

    pub fn mul(&self, other: &BoolFn) -> BoolFn {
        let mut table = self.table.clone();
        table.and_assign(&other.table);
        BoolFn { n: self.n, table }
    }
}

/// An ideal of the Boolean ring, kept with the set of points where some
/// generator is nonzero.
#[derive(Debug, Clone)]
pub struct BoolIdeal {
    n: usize,
    pub generators: Vec<BoolFn>,
    support: BitRow,
}

impl BoolIdeal {
    pub fn new(n: usize, generators: Vec<BoolFn>) -> Self {
        let mut support = BitRow::zeros(1 << n);
        for g in &generators {
            support.or_assign(&g.table);
        }
        BoolIdeal { n, generators, support }
    }

    pub fn dim(&self) -> usize {
        self.support.count_ones()
    }

    pub fn zero_set(&self) -> Vec<usize> {
        (0..1usize << self.n).filter(|&p| !self.support.get(p)).collect()
    }

    pub fn contains(&self, f: &BoolFn) -> bool {
        f.table.is_subset(&self.support)
    }
}

fn check_n(n: usize, budget: &Budget) -> Result<()> {
    budget::check("boolean table variables", n as u128, budget.boolean_n as u128)
}

/// `2^n - |common zero set|`.
pub fn ideal_dim(gens: &[BoolFn], n: usize, budget: &Budget) -> Result<usize> {
    check_n(n, budget)?;
    Ok(BoolIdeal::new(n, gens.to_vec()).dim())
}

/// Rank over GF(2) of all products of generators with squarefree monomials.
pub fn ideal_dim_by_rank(gens: &[BoolFn], n: usize, budget: &Budget) -> Result<usize> {
    check_n(n, budget)?;
    let rows = (gens.len() as u128) << n;
    budget::check("boolean multiple rows", rows, budget.rows as u128)?;
    let monomials: Vec<BoolFn> = (0..1usize << n)
        .map(|mask| BoolFn::from_fn(n, |p| p & mask == mask))
        .collect();
    Ok(gf2::rank(
        gens.iter().flat_map(|g| monomials.iter().map(move |m| g.mul(m).table)),
    ))
}

/// Points where some `a`-fold squarefree monomial is nonzero, built from
/// the monomial tables themselves.
fn monomial_ideal_support(n: usize, a: usize) -> BitRow {
    let vars: Vec<BoolFn> = (0..n).map(|i| BoolFn::var(n, i)).collect();
    let mut support = BitRow::zeros(1 << n);
    fn rec(vars: &[BoolFn], start: usize, left: usize, cur: &BitRow, out: &mut BitRow) {
        if left == 0 {
            out.or_assign(cur);
            return;
        }
        for i in start..=vars.len() - left {
            let mut next = cur.clone();
            next.and_assign(&vars[i].table);
            rec(vars, i + 1, left - 1, &next, out);
        }
    }
    if a <= n {
        rec(&vars, 0, a, &BoolFn::one(n).table, &mut support);
    }
    support
}

/// `I(Y, a)` with all its generators.
pub fn monomial_ideal(n: usize, a: usize) -> BoolIdeal {
    let mut gens = Vec::new();
    if a <= n {
        for_each_combination(n, a, |s| gens.push(BoolFn::monomial(n, s)));
    }
    BoolIdeal::new(n, gens)
}

fn require_binary(c: &LinearCode<Fp>) -> Result<()> {
    if c.field().modulus() != 2 {
        return Err(Error::UnsupportedField("GF(2)".into()));
    }
    Ok(())
}

/// The `n - k` linear forms cutting out the code, read off the dual
/// generator.
pub fn relation_forms(c: &LinearCode<Fp>) -> Result<Vec<BoolFn>> {
    require_binary(c)?;
    let dual = c.dual()?;
    Ok(dual
        .generator()
        .to_rows()
        .iter()
        .map(|row| BoolFn::linear(c.n(), &row.iter().map(|&x| x == 1).collect::<Vec<_>>()))
        .collect())
}

/// Dimensions of `F + I(Y, a)` for `a = 0..=n+1`, where `F` is the ideal of
/// the relation forms.
pub struct Filtration {
    n: usize,
    k: usize,
    relation_support: BitRow,
}

impl Filtration {
    pub fn new(c: &LinearCode<Fp>, budget: &Budget) -> Result<Self> {
        require_binary(c)?;
        check_n(c.n(), budget)?;
        let n = c.n();
        let forms = if c.k() == c.n() { Vec::new() } else { relation_forms(c)? };
        Ok(Filtration { n, k: c.k(), relation_support: BoolIdeal::new(n, forms).support })
    }

    /// `dim(F + I(Y, a))`.
    pub fn sum_dim(&self, a: usize) -> usize {
        let mut s = monomial_ideal_support(self.n, a);
        s.or_assign(&self.relation_support);
        s.count_ones()
    }

    pub fn gr_dims(&self) -> GrDims {
        let n = self.n;
        let dims = (0..=n).map(|i| self.sum_dim(n - i) - self.sum_dim(n - i + 1)).collect();
        GrDims { dims }
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Dimensions of the pieces of the associated graded ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrDims {
    pub dims: Vec<usize>,
}

impl GrDims {
    /// Largest `0 <= i <= n-1` with a nonzero piece.
    pub fn top_jump(&self) -> usize {
        let n = self.dims.len() - 1;
        (0..n).rev().find(|&i| self.dims[i] != 0).unwrap_or(0)
    }

    /// Smallest `1 <= i <= n-1` with a nonzero piece.
    pub fn literal_alpha_positive(&self) -> Option<usize> {
        let n = self.dims.len() - 1;
        (1..n).find(|&i| self.dims[i] != 0)
    }
}

/// `F + I(Y, a)` is the whole maximal ideal `(y_1, ..., y_n)`.
pub fn prop_check(c: &LinearCode<Fp>, a: usize, budget: &Budget) -> Result<bool> {
    if a < 1 || a > c.n() {
        return Err(Error::BadRange(format!("need 1 <= a <= n, got a = {a}")));
    }
    let f = Filtration::new(c, budget)?;
    Ok(f.sum_dim(a) == (1 << c.n()) - 1)
}

pub fn gr_dims(c: &LinearCode<Fp>, budget: &Budget) -> Result<GrDims> {
    Ok(Filtration::new(c, budget)?.gr_dims())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrJumps {
    pub top_jump: usize,
    pub literal_alpha_positive: Option<usize>,
}

pub fn gr_jump_indices(c: &LinearCode<Fp>, budget: &Budget) -> Result<GrJumps> {
    let g = gr_dims(c, budget)?;
    Ok(GrJumps { top_jump: g.top_jump(), literal_alpha_positive: g.literal_alpha_positive() })
}

/// Every product of an `(n-a)`-fold and an `(n-b)`-fold squarefree monomial
/// lies in `I(Y, n-a-b)`.
pub fn filtration_product_check(n: usize, a: usize, b: usize, budget: &Budget) -> Result<bool> {
    budget::check("exhaustive filtration variables", n as u128, budget.boolean_n.min(12) as u128)?;
    if a > n || b > n {
        return Err(Error::BadRange(format!("need 0 <= a, b <= {n}")));
    }
    let target = BoolIdeal::new(n, Vec::new());
    let target = if a + b >= n {
        BoolIdeal { support: BoolFn::one(n).table, ..target }
    } else {
        BoolIdeal { support: monomial_ideal_support(n, n - a - b), ..target }
    };
    let left = monomial_ideal(n, n - a).generators;
    let right = monomial_ideal(n, n - b).generators;
    Ok(left.iter().all(|x| right.iter().all(|y| target.contains(&x.mul(y)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    fn code(rows: &[Vec<i64>]) -> LinearCode<Fp> {
        LinearCode::from_i64(f2(), rows).unwrap()
    }

    fn hamming() -> LinearCode<Fp> {
        code(&[
            vec![1, 0, 0, 0, 1, 1, 0],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 1, 1, 1],
        ])
    }

    fn rep(n: usize) -> LinearCode<Fp> {
        code(&[vec![1; n]])
    }

    fn parity3() -> LinearCode<Fp> {
        code(&[vec![1, 0, 1], vec![0, 1, 1]])
    }

    #[test]
    fn ring_operations() {
        let y0 = BoolFn::var(2, 0);
        assert_eq!(y0.mul(&y0), y0);
        assert!(y0.add(&y0).is_zero());
        let l = BoolFn::linear(3, &[true, true, false]);
        assert!(l.eval(0b001) && l.eval(0b010) && !l.eval(0b011));
    }

    #[test]
    fn relation_form_examples() {
        let g1 = code(&[vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]);
        assert_eq!(relation_forms(&g1).unwrap(), vec![BoolFn::linear(4, &[true; 4])]);
        let forms = relation_forms(&rep(3)).unwrap();
        assert_eq!(forms.len(), 2);
        let zeros = BoolIdeal::new(3, forms).zero_set();
        assert_eq!(zeros, vec![0b000, 0b111]);
        let id = code(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(relation_forms(&id), Err(Error::ZeroDual));
        let f3 = LinearCode::from_i64(Fp::new(3).unwrap(), &[vec![1, 1]]).unwrap();
        assert!(matches!(relation_forms(&f3), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn ideal_dims() {
        assert_eq!(ideal_dim(&[BoolFn::var(2, 0)], 2, &b()).unwrap(), 2);
        let vars: Vec<BoolFn> = (0..4).map(|i| BoolFn::var(4, i)).collect();
        assert_eq!(ideal_dim(&vars, 4, &b()).unwrap(), 15);
        assert_eq!(ideal_dim(&[], 3, &b()).unwrap(), 0);
        assert!(matches!(ideal_dim(&[], 17, &b()), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn zero_set_dim_matches_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(1..=6);
            let count = rng.gen_range(0..4);
            let gens: Vec<BoolFn> = (0..count)
                .map(|_| {
                    let bits: Vec<bool> = (0..1usize << n).map(|_| rng.gen_bool(0.3)).collect();
                    BoolFn::from_fn(n, |p| bits[p])
                })
                .collect();
            assert_eq!(ideal_dim(&gens, n, &b()).unwrap(), ideal_dim_by_rank(&gens, n, &b()).unwrap());
        }
        let m = monomial_ideal(5, 2);
        assert_eq!(m.dim(), ideal_dim_by_rank(&m.generators, 5, &b()).unwrap());
        assert_eq!(m.dim(), monomial_ideal_support(5, 2).count_ones());
    }

    #[test]
    fn proposition_boundary() {
        let h = hamming();
        assert!(prop_check(&h, 3, &b()).unwrap());
        assert!(!prop_check(&h, 4, &b()).unwrap());
        assert!(prop_check(&rep(3), 3, &b()).unwrap());
        assert!(prop_check(&parity3(), 1, &b()).unwrap());
        assert!(matches!(prop_check(&h, 0, &b()), Err(Error::BadRange(_))));
    }

    #[test]
    fn graded_dims() {
        assert_eq!(gr_dims(&rep(2), &b()).unwrap().dims, vec![1, 0, 1]);
        assert_eq!(gr_dims(&hamming(), &b()).unwrap().dims, vec![1, 0, 0, 7, 7, 0, 0, 1]);
        let p = gr_dims(&parity3(), &b()).unwrap().dims;
        assert_eq!((p[0], p[1], p[3]), (0, 3, 1));
        let id = code(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(gr_dims(&id, &b()).unwrap().dims, vec![1, 2, 1]);
    }

    #[test]
    fn jumps() {
        let h = gr_jump_indices(&hamming(), &b()).unwrap();
        assert_eq!(h, GrJumps { top_jump: 4, literal_alpha_positive: Some(3) });
        let r = gr_jump_indices(&rep(2), &b()).unwrap();
        assert_eq!(r, GrJumps { top_jump: 0, literal_alpha_positive: None });
        assert_eq!(gr_jump_indices(&parity3(), &b()).unwrap().top_jump, 1);
    }

    #[test]
    fn filtration_products() {
        assert!(filtration_product_check(4, 1, 1, &b()).unwrap());
        assert!(filtration_product_check(4, 3, 2, &b()).unwrap());
        assert!(filtration_product_check(4, 0, 2, &b()).unwrap());
        for a in 0..=5 {
            for c in 0..=5 {
                assert!(filtration_product_check(5, a, c, &b()).unwrap());
            }
        }
        assert!(matches!(filtration_product_check(13, 1, 1, &b()), Err(Error::BudgetExceeded { .. })));
    }
}
