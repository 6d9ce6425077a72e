//! Orlik-Terao ideals of the hyperplane arrangement of a code, their graded
//! Betti numbers through Koszul homology, and the distance bound for
//! three-dimensional codes read off the linear strand.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::{self, Budget};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Field, Fp};
use crate::graded::LinearForm;
use crate::matrix::Echelon;
use crate::matroid::{circuits, code_distance, Circuit};
use crate::poly::{binomial, default_var_names, GradedMonomials, MultiPoly};

/// Prime used for Betti numbers of rational ideals.
pub const DEFAULT_BETTI_PRIME: u64 = 32003;
/// Second prime for the agreement screen.
pub const SECOND_BETTI_PRIME: u64 = 65521;

/// Generators of the Orlik-Terao ideal in `y_1..y_n`, one per circuit.
#[derive(Debug, Clone)]
pub struct OTIdeal<F: Field> {
    field: F,
    pub n: usize,
    pub generators: Vec<MultiPoly<F>>,
    pub circuits: Vec<Circuit<F::Elem>>,
}

/// `sum_j a_j prod_{l != j} y_{i_l}` for the relation `sum_j a_j l_{i_j} = 0`.
pub fn circuit_generator<F: Field>(field: &F, n: usize, c: &Circuit<F::Elem>) -> MultiPoly<F> {
    let mut p = MultiPoly::zero(field.clone(), n);
    for (j, a) in c.coeffs.iter().enumerate() {
        let mut e = vec![0u32; n];
        for (l, &i) in c.support.iter().enumerate() {
            if l != j {
                e[i] = 1;
            }
        }
        p.add_term(e, a.clone());
    }
    p
}

fn check_simple<F: Field>(cs: &[Circuit<F::Elem>]) -> Result<()> {
    match cs.iter().find(|c| c.len() == 2) {
        Some(c) => Err(Error::ProportionalColumns(c.support[0], c.support[1])),
        None => Ok(()),
    }
}

pub fn ot_generators<F: Field>(code: &LinearCode<F>) -> Result<OTIdeal<F>> {
    let cs = circuits(code)?;
    check_simple::<F>(&cs)?;
    let field = code.field().clone();
    let n = code.n();
    let generators = cs.iter().map(|c| circuit_generator(&field, n, c)).collect();
    Ok(OTIdeal { field, n, generators, circuits: cs })
}

impl<F: Field> OTIdeal<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Smallest generator degree.
    pub fn alpha(&self) -> Option<usize> {
        self.circuits.iter().map(|c| c.len() - 1).min()
    }

    /// Substitutes `y_i = 1 / l_i(point)` into every generator; `None` when
    /// the point lies on one of the hyperplanes.
    pub fn vanishes_at_reciprocals(&self, forms: &[LinearForm<F::Elem>], point: &[F::Elem]) -> Option<bool> {
        let f = &self.field;
        let ys: Option<Vec<F::Elem>> = forms.iter().map(|l| f.inv(&l.eval(f, point))).collect();
        let ys = ys?;
        Some(self.generators.iter().all(|g| f.is_zero(&g.eval(&ys))))
    }

    /// The same generators with coefficients reduced into GF(p).
    pub fn to_prime(&self, p: u64) -> Result<OTIdeal<Fp>> {
        let fp = Fp::new(p)?;
        let bad = || Error::UnsupportedField(format!("coefficients with an image in GF({p})"));
        let generators = self
            .generators
            .iter()
            .map(|g| g.map_field(fp, |c| self.field.reduce_mod(c, p)).ok_or_else(bad))
            .collect::<Result<Vec<_>>>()?;
        let circuits = self
            .circuits
            .iter()
            .map(|c| {
                let coeffs = c.coeffs.iter().map(|x| self.field.reduce_mod(x, p).ok_or_else(bad));
                Ok(Circuit { support: c.support.clone(), coeffs: coeffs.collect::<Result<_>>()? })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(OTIdeal { field: fp, n: self.n, generators, circuits })
    }

    /// Prime for Betti computations: the field's own characteristic, or the
    /// default large prime over Q.
    pub fn betti_prime(&self, requested: Option<u64>) -> Result<u64> {
        match (self.field.characteristic(), requested) {
            (0, Some(p)) => Ok(p),
            (0, None) => Ok(DEFAULT_BETTI_PRIME),
            (c, Some(p)) if p != c => Err(Error::UnsupportedField(format!("Betti prime equal to the code field GF({c})"))),
            (c, _) => Ok(c),
        }
    }

    pub fn display(&self) -> Vec<String> {
        let names = default_var_names(self.n, "y");
        self.generators.iter().map(|g| g.display_with(&names)).collect()
    }
}

/// `girth - 1`.
pub fn alpha_iot<F: Field>(code: &LinearCode<F>) -> Result<usize> {
    ot_generators(code)?.alpha().ok_or(Error::ZeroIdeal)
}

/// Graded Betti numbers `beta_{i,j}(S/I)`; every `(i, j)` inside the bounds
/// is present, zeros included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub nvars: usize,
    pub max_i: usize,
    pub max_j: usize,
    #[serde(with = "pairs")]
    pub entries: BTreeMap<(usize, usize), u64>,
}

mod pairs {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<(usize, usize), u64>, s: S) -> Result<S::Ok, S::Error> {
        m.iter().map(|(&(i, j), &b)| (i, j, b)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, usize), u64>, D::Error> {
        let v: Vec<(usize, usize, u64)> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|(i, j, b)| ((i, j), b)).collect())
    }
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> Option<u64> {
        if i > self.nvars {
            return Some(0);
        }
        self.entries.get(&(i, j)).copied()
    }

    pub fn nonzero(&self) -> BTreeMap<(usize, usize), u64> {
        self.entries.iter().filter(|(_, &b)| b != 0).map(|(&k, &b)| (k, b)).collect()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz = self.nonzero();
        let parts: Vec<String> = nz.iter().map(|((i, j), b)| format!("b{i},{j}={b}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Koszul homology of `S/I` over GF(p), computed slice by slice on demand.
pub struct KoszulBetti {
    field: Fp,
    n: usize,
    budget: Budget,
    mons: GradedMonomials,
    gens: Vec<MultiPoly<Fp>>,
    /// `I_t` as an echelon basis over the degree-`t` monomials.
    ideal: Vec<Echelon<Fp>>,
    /// Monomial indices forming a basis of `(S/I)_t`.
    quotient: Vec<Vec<usize>>,
    /// Monomial index to quotient coordinate.
    coord: Vec<Vec<Option<usize>>>,
    /// Subsets of each size as bitmasks, and each mask's position.
    subsets: Vec<Vec<usize>>,
    subset_pos: Vec<usize>,
    ranks: HashMap<(usize, usize), usize>,
}

impl KoszulBetti {
    pub fn new(ideal: &OTIdeal<Fp>, budget: &Budget) -> Result<Self> {
        let n = ideal.n;
        budget::check("Koszul variables", n as u128, budget.betti_vars as u128)?;
        let mut subsets = vec![Vec::new(); n + 1];
        let mut subset_pos = vec![0; 1 << n];
        for mask in 0..1usize << n {
            let s = mask.count_ones() as usize;
            subset_pos[mask] = subsets[s].len();
            subsets[s].push(mask);
        }
        Ok(KoszulBetti {
            field: *ideal.field(),
            n,
            budget: *budget,
            mons: GradedMonomials::new(n),
            gens: ideal.generators.clone(),
            ideal: Vec::new(),
            quotient: Vec::new(),
            coord: Vec::new(),
            subsets,
            subset_pos,
            ranks: HashMap::new(),
        })
    }

    fn ensure_degree(&mut self, t: usize) -> Result<()> {
        budget::check("Koszul degree", t as u128, self.budget.betti_degree as u128 + 1)?;
        while self.ideal.len() <= t {
            let d = self.ideal.len();
            let dim = self.mons.dim(d as u32);
            let mut e = Echelon::new(self.field, dim);
            if d > 0 {
                let prev = self.ideal[d - 1].rows().to_vec();
                'raise: for row in prev {
                    for v in 0..self.n {
                        e.insert(self.mons.raise(&self.field, d as u32 - 1, &row, v));
                        if e.is_full() {
                            break 'raise;
                        }
                    }
                }
            }
            let basis = self.mons.basis(d as u32).clone();
            for g in &self.gens {
                if g.homogeneous_degree() == Some(d as u32) {
                    e.insert(g.to_dense(&basis));
                }
            }
            let quotient: Vec<usize> = (0..dim).filter(|&c| !e.is_pivot(c)).collect();
            let mut coord = vec![None; dim];
            for (q, &c) in quotient.iter().enumerate() {
                coord[c] = Some(q);
            }
            self.ideal.push(e);
            self.quotient.push(quotient);
            self.coord.push(coord);
        }
        Ok(())
    }

    /// `dim (S/I)_t`.
    pub fn quotient_dim(&mut self, t: isize) -> Result<usize> {
        if t < 0 {
            return Ok(0);
        }
        self.ensure_degree(t as usize)?;
        Ok(self.quotient[t as usize].len())
    }

    /// `dim (wedge^i V (x) S/I)_j`.
    fn koszul_dim(&mut self, i: usize, j: usize) -> Result<usize> {
        if i > self.n || j < i {
            return Ok(0);
        }
        Ok(binomial(self.n as u64, i as u64) as usize * self.quotient_dim((j - i) as isize)?)
    }

    /// Normal form of `y_v * m` in `(S/I)_{t+1}` for the `q`-th quotient
    /// basis monomial `m` of degree `t`.
    fn times_var(&mut self, t: usize, q: usize, v: usize) -> Vec<(usize, u64)> {
        let m = self.quotient[t][q];
        let idx = self.mons.times_var(t as u32, m, v);
        let e = &self.ideal[t + 1];
        let mut vec = vec![0u64; e.ncols()];
        vec[idx] = 1;
        e.reduce(&mut vec);
        let coord = &self.coord[t + 1];
        vec.iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(c, &x)| (coord[c].expect("reduced vectors vanish on pivots"), x))
            .collect()
    }

    /// Rank of `d_i : (wedge^i V (x) S/I)_j -> (wedge^{i-1} V (x) S/I)_j`.
    fn rank(&mut self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || i > self.n || j < i {
            return Ok(0);
        }
        if let Some(&r) = self.ranks.get(&(i, j)) {
            return Ok(r);
        }
        let rows = self.koszul_dim(i, j)?;
        budget::check("Koszul slice rows", rows as u128, self.budget.rows as u128)?;
        let t = j - i;
        self.ensure_degree(t + 1)?;
        let target_q = self.quotient[t + 1].len();
        let cols = self.koszul_dim(i - 1, j)?;
        let mut e = Echelon::new(self.field, cols);
        let masks = self.subsets[i].clone();
        let src_q = self.quotient[t].len();
        for mask in masks {
            for q in 0..src_q {
                let mut row = vec![0u64; cols];
                let mut sign_neg = false;
                for v in 0..self.n {
                    if mask >> v & 1 == 0 {
                        continue;
                    }
                    let block = self.subset_pos[mask & !(1 << v)] * target_q;
                    for (c, x) in self.times_var(t, q, v) {
                        let x = if sign_neg { self.field.neg(&x) } else { x };
                        row[block + c] = self.field.add(&row[block + c], &x);
                    }
                    sign_neg = !sign_neg;
                }
                e.insert(row);
                if e.is_full() {
                    break;
                }
            }
        }
        let r = e.rank();
        self.ranks.insert((i, j), r);
        Ok(r)
    }

    /// `beta_{i,j}(S/I)`.
    pub fn betti(&mut self, i: usize, j: usize) -> Result<u64> {
        if i > self.n || j < i {
            return Ok(0);
        }
        let dim = self.koszul_dim(i, j)?;
        let r_in = self.rank(i + 1, j)?;
        let r_out = self.rank(i, j)?;
        Ok((dim - r_out - r_in) as u64)
    }

    pub fn table(&mut self, max_i: usize, max_j: usize) -> Result<BettiTable> {
        let mut entries = BTreeMap::new();
        for i in 0..=max_i.min(self.n) {
            for j in i..=max_j {
                entries.insert((i, j), self.betti(i, j)?);
            }
        }
        Ok(BettiTable { nvars: self.n, max_i, max_j, entries })
    }

    /// Largest `i` with `beta_{i+1, alpha+i}(S/I) != 0`, extending the
    /// computation until the strand stops.
    pub fn linear_strand_length(&mut self, alpha: usize) -> Result<usize> {
        if self.betti(1, alpha)? == 0 {
            return Err(Error::BadRange(format!("no minimal generators in degree {alpha}")));
        }
        let mut i = 1;
        while i < self.n && self.betti(i + 1, alpha + i)? != 0 {
            i += 1;
        }
        Ok(i - 1)
    }
}

/// `beta_{i,j}(S/I)` for `i <= max_i`, `j <= max_j`, over GF(prime) (or the
/// field's own prime).
pub fn graded_betti<F: Field>(
    ideal: &OTIdeal<F>,
    prime: Option<u64>,
    max_i: usize,
    max_j: usize,
    budget: &Budget,
) -> Result<BettiTable> {
    let p = ideal.betti_prime(prime)?;
    KoszulBetti::new(&ideal.to_prime(p)?, budget)?.table(max_i, max_j)
}

/// Length of the linear strand of the ideal, read from a table of
/// `beta(S/I)`.
///
/// The strand stops at its first zero: in a minimal resolution of an ideal
/// generated in degrees `>= alpha`, `beta_{i, alpha+i} = 0` forces all later
/// strand entries to vanish.
pub fn linear_strand_length(b: &BettiTable, alpha: usize) -> Result<usize> {
    let first = b.get(1, alpha).ok_or(Error::InsufficientBounds(1, alpha))?;
    if first == 0 {
        return Err(Error::BadRange(format!("no minimal generators in degree {alpha}")));
    }
    let mut i = 1;
    loop {
        match b.get(i + 1, alpha + i) {
            None => return Err(Error::InsufficientBounds(i + 1, alpha + i)),
            Some(0) => return Ok(i - 1),
            Some(_) => i += 1,
        }
    }
}

/// Outcome of the distance bound for a three-dimensional code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OtDistanceReport {
    pub n: usize,
    pub alpha: usize,
    /// Present when `alpha = 2`.
    pub delta: Option<usize>,
    /// `n - 2` (MDS) when `alpha = 3`, else `n - delta - 3`.
    pub bound: usize,
    pub mds: bool,
    pub actual_d: Option<usize>,
    pub tight: Option<bool>,
}

pub fn ot_distance_report<F: Field>(code: &LinearCode<F>, prime: Option<u64>, budget: &Budget) -> Result<OtDistanceReport> {
    if code.k() != 3 {
        return Err(Error::WrongDimension(code.k()));
    }
    let ideal = ot_generators(code)?;
    let alpha = ideal.alpha().ok_or(Error::ZeroIdeal)?;
    let n = code.n();
    let actual_d = code_distance(code, budget).ok();
    let (delta, bound, mds) = if alpha == 3 {
        (None, n - 2, true)
    } else {
        let p = ideal.betti_prime(prime)?;
        let delta = KoszulBetti::new(&ideal.to_prime(p)?, budget)?.linear_strand_length(alpha)?;
        (Some(delta), (n).saturating_sub(delta + 3), false)
    };
    Ok(OtDistanceReport { n, alpha, delta, bound, mds, actual_d, tight: actual_d.map(|d| d == bound) })
}

/// `3s < 2t`, for `s` three-element supports with union of size `t`.
pub fn no_linear_syzygy_predicate(supports: &[Vec<usize>]) -> Result<bool> {
    if let Some(s) = supports.iter().find(|s| s.len() != 3) {
        return Err(Error::BadSupportSize(s.len()));
    }
    let mut union: Vec<usize> = supports.iter().flatten().copied().collect();
    union.sort_unstable();
    union.dedup();
    Ok(3 * supports.len() < 2 * union.len())
}
