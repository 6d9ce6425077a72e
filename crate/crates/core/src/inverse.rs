//! The Chow form of a code and its apolar algebra: Hilbert function via
//! spans of partial derivatives, the initial degree of the annihilator, and
//! the resulting lower bound on the minimum distance.

use crate::budget::Budget;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{dual_forms, LinearForm};
use crate::matrix::Echelon;
use crate::poly::{graded_dim, MonomialBasis, MultiPoly};

/// Product of the forms, expanded.
pub fn chow_form<F: Field>(field: &F, forms: &[LinearForm<F::Elem>]) -> Result<MultiPoly<F>> {
    let nvars = forms.first().map_or(0, |l| l.coeffs.len());
    let mut p = MultiPoly::one(field.clone(), nvars);
    for (i, l) in forms.iter().enumerate() {
        if l.coeffs.iter().all(|c| field.is_zero(c)) {
            return Err(Error::ZeroForm(i));
        }
        p = p.mul(&l.to_poly(field.clone()));
    }
    Ok(p)
}

pub fn code_chow_form<F: Field>(code: &LinearCode<F>) -> Result<MultiPoly<F>> {
    chow_form(code.field(), &dual_forms(code)?)
}

fn degree_of<F: Field>(p: &MultiPoly<F>) -> Result<usize> {
    p.homogeneous_degree()
        .map(|d| d as usize)
        .ok_or_else(|| Error::BadRange("expected a nonzero homogeneous polynomial".into()))
}

fn check_characteristic<F: Field>(field: &F, degree: usize) -> Result<()> {
    let characteristic = field.characteristic();
    if characteristic != 0 && characteristic <= degree as u64 {
        return Err(Error::BadCharacteristic { characteristic, degree });
    }
    Ok(())
}

/// Hilbert function of the apolar algebra of `p`.
#[derive(Debug, Clone)]
pub struct ApolarProfile<F: Field> {
    pub p: MultiPoly<F>,
    /// `hf[i]` for `0 <= i <= deg p`; zero beyond.
    pub hf: Vec<usize>,
}

impl<F: Field> ApolarProfile<F> {
    pub fn new(p: &MultiPoly<F>) -> Result<Self> {
        let n = degree_of(p)?;
        check_characteristic(p.field(), n)?;
        let field = p.field().clone();
        let k = p.nvars();
        let mut hf = Vec::with_capacity(n + 1);
        // The order-(i+1) derivatives are spanned by first partials of any
        // basis of the order-i derivatives.
        let mut basis = MonomialBasis::new(k, n as u32);
        let mut span = Echelon::new(field.clone(), basis.len());
        span.insert(p.to_dense(&basis));
        hf.push(span.rank());
        for i in 1..=n {
            let lower = MonomialBasis::new(k, (n - i) as u32);
            let mut next = Echelon::new(field.clone(), lower.len());
            for row in span.rows() {
                let q = MultiPoly::from_dense(field.clone(), &basis, row);
                for v in 0..k {
                    next.insert(q.partial(v).to_dense(&lower));
                    if next.is_full() {
                        break;
                    }
                }
            }
            hf.push(next.rank());
            basis = lower;
            span = next;
        }
        Ok(ApolarProfile { p: p.clone(), hf })
    }

    pub fn degree(&self) -> usize {
        self.hf.len() - 1
    }

    pub fn get(&self, i: usize) -> usize {
        self.hf.get(i).copied().unwrap_or(0)
    }

    /// Smallest `i` where the derivatives fail to fill `R_{n-i}` dually, i.e.
    /// where `Ann(p)` has a nonzero element of degree `i`.
    pub fn alpha_ann(&self) -> usize {
        let k = self.p.nvars();
        (0..=self.degree() + 1)
            .find(|&i| self.get(i) < graded_dim(k, i))
            .expect("hf vanishes above the degree")
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.degree();
        (0..=n).all(|i| self.hf[i] == self.hf[n - i])
    }
}

/// Dimension of the span of all order-`i` partial derivatives of `p`.
pub fn deriv_span_dim<F: Field>(p: &MultiPoly<F>, i: usize) -> Result<usize> {
    Ok(ApolarProfile::new(p)?.get(i))
}

pub fn alpha_ann<F: Field>(p: &MultiPoly<F>) -> Result<usize> {
    Ok(ApolarProfile::new(p)?.alpha_ann())
}

pub fn symmetry_check<F: Field>(p: &MultiPoly<F>) -> Result<bool> {
    Ok(ApolarProfile::new(p)?.is_symmetric())
}

/// `alpha(Ann(cf(C))) - 1`, a lower bound for `d`.
pub fn inverse_bound<F: Field>(code: &LinearCode<F>) -> Result<usize> {
    check_characteristic(code.field(), code.n())?;
    Ok(alpha_ann(&code_chow_form(code)?)? - 1)
}

/// Applies `(sum q_j d/dx_j)^order` to the Chow form and reports whether
/// the result vanishes.
///
/// `q` must be a nonzero point on at least `k - 1` of the hyperplanes
/// `l_i = 0`.
pub fn codeword_derivative_vanishes<F: Field>(code: &LinearCode<F>, q: &[F::Elem], order: usize) -> Result<bool> {
    check_characteristic(code.field(), code.n())?;
    let field = code.field();
    let forms = dual_forms(code)?;
    if q.len() != code.k() || q.iter().all(|x| field.is_zero(x)) {
        return Err(Error::NotAnIntersectionPoint);
    }
    let on = forms.iter().filter(|l| field.is_zero(&l.eval(field, q))).count();
    if on + 1 < code.k() {
        return Err(Error::NotAnIntersectionPoint);
    }
    let mut p = chow_form(field, &forms)?;
    for _ in 0..order {
        if p.is_zero() {
            break;
        }
        p = p.directional(q);
    }
    Ok(p.is_zero())
}

/// A point on `n - d` of the hyperplanes: the message of a minimum-weight
/// codeword.
pub fn intersection_point<F: Field>(code: &LinearCode<F>, budget: &Budget) -> Result<Vec<F::Elem>> {
    Ok(code.min_distance_brute(budget)?.witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use num::BigRational;
    use proptest::prelude::*;

    fn q(rows: &[Vec<i64>]) -> LinearCode<Rationals> {
        LinearCode::from_i64(Rationals, rows).unwrap()
    }

    fn g1() -> LinearCode<Rationals> {
        q(&[vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]])
    }

    fn g2() -> LinearCode<Rationals> {
        q(&[vec![1, 0, 0, 1, 1], vec![0, 1, 0, 1, 2], vec![0, 0, 1, 1, 5]])
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn form(c: &[i64]) -> LinearForm<BigRational> {
        LinearForm { coeffs: c.iter().map(|&x| r(x)).collect() }
    }

    /// Rank of `d^m p` over every monomial operator `m` of degree `i`,
    /// applying the variables in the order given by `schedule`.
    fn deriv_oracle(p: &MultiPoly<Rationals>, i: usize, schedule: &[usize]) -> usize {
        let k = p.nvars();
        let n = p.homogeneous_degree().unwrap() as usize;
        if i > n {
            return 0;
        }
        let target = MonomialBasis::new(k, (n - i) as u32);
        let mut e = Echelon::new(Rationals, target.len());
        for m in MonomialBasis::new(k, i as u32).monomials() {
            let mut d = p.clone();
            for &v in schedule {
                for _ in 0..m[v] {
                    d = d.partial(v);
                }
            }
            e.insert(d.to_dense(&target));
        }
        e.rank()
    }

    #[test]
    fn chow_forms() {
        let cf = code_chow_form(&g1()).unwrap();
        assert_eq!(cf.to_string(), "x^2*y*z + x*y^2*z + x*y*z^2");
        let x = chow_form(&Rationals, &[form(&[1])]).unwrap();
        assert_eq!(x.to_string(), "x");
        let xx = chow_form(&Rationals, &[form(&[1]), form(&[1])]).unwrap();
        assert_eq!(xx.to_string(), "x^2");
        assert_eq!(chow_form(&Rationals, &[form(&[1, 0]), form(&[0, 0])]), Err(Error::ZeroForm(1)));
    }

    #[test]
    fn derivative_spans() {
        let cf = code_chow_form(&g1()).unwrap();
        assert_eq!(deriv_span_dim(&cf, 0).unwrap(), 1);
        assert_eq!(deriv_span_dim(&cf, 1).unwrap(), 3);
        let xyz = chow_form(&Rationals, &[form(&[1, 0, 0]), form(&[0, 1, 0]), form(&[0, 0, 1])]).unwrap();
        assert_eq!(deriv_span_dim(&xyz, 2).unwrap(), 3);
        assert_eq!(deriv_span_dim(&xyz, 4).unwrap(), 0);
        for i in 0..=5 {
            assert_eq!(deriv_span_dim(&cf, i).unwrap(), deriv_oracle(&cf, i, &[0, 1, 2]));
            assert_eq!(deriv_span_dim(&cf, i).unwrap(), deriv_oracle(&cf, i, &[2, 0, 1]));
        }
        let f2 = Fp::new(2).unwrap();
        let cf2 = code_chow_form(&LinearCode::from_i64(f2, &[vec![1, 1]]).unwrap()).unwrap();
        assert_eq!(
            deriv_span_dim(&cf2, 1),
            Err(Error::BadCharacteristic { characteristic: 2, degree: 2 })
        );
    }

    #[test]
    fn annihilator_alpha() {
        assert_eq!(alpha_ann(&code_chow_form(&g1()).unwrap()).unwrap(), 3);
        assert_eq!(alpha_ann(&code_chow_form(&g2()).unwrap()).unwrap(), 3);
        let x4 = chow_form(&Rationals, &vec![form(&[1]); 4]).unwrap();
        assert_eq!(alpha_ann(&x4).unwrap(), 5);
    }

    #[test]
    fn symmetry() {
        assert!(symmetry_check(&code_chow_form(&g1()).unwrap()).unwrap());
        let x2 = chow_form(&Rationals, &vec![form(&[1]); 2]).unwrap();
        let prof = ApolarProfile::new(&x2).unwrap();
        assert_eq!(prof.hf, vec![1, 1, 1]);
        assert!(prof.is_symmetric());
        assert!(symmetry_check(&code_chow_form(&g2()).unwrap()).unwrap());
    }

    #[test]
    fn bounds() {
        assert_eq!(inverse_bound(&g1()).unwrap(), 2);
        assert_eq!(inverse_bound(&g2()).unwrap(), 2);
        let id = q(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(inverse_bound(&id).unwrap(), 1);
        let g2_f7 = LinearCode::from_i64(
            Fp::new(7).unwrap(),
            &[vec![1, 0, 0, 1, 1], vec![0, 1, 0, 1, 2], vec![0, 0, 1, 1, 5]],
        )
        .unwrap();
        assert_eq!(inverse_bound(&g2_f7).unwrap(), 2);
    }

    #[test]
    fn directional_vanishing() {
        let c = g1();
        let pt = vec![r(0), r(0), r(1)];
        assert!(codeword_derivative_vanishes(&c, &pt, 3).unwrap());
        assert!(!codeword_derivative_vanishes(&c, &pt, 2).unwrap());
        let x = q(&[vec![1]]);
        assert!(codeword_derivative_vanishes(&x, &[r(1)], 2).unwrap());
        assert_eq!(
            codeword_derivative_vanishes(&c, &[r(1), r(2), r(3)], 3),
            Err(Error::NotAnIntersectionPoint)
        );
        assert_eq!(
            codeword_derivative_vanishes(&c, &[r(0), r(0), r(0)], 3),
            Err(Error::NotAnIntersectionPoint)
        );
    }

    #[test]
    fn witness_points_kill_at_d_plus_one() {
        let f = Fp::new(11).unwrap();
        let c = LinearCode::from_i64(f, &[vec![1, 0, 0, 1, 1], vec![0, 1, 0, 1, 2], vec![0, 0, 1, 1, 5]]).unwrap();
        let pt = intersection_point(&c, &Budget::default()).unwrap();
        assert!(codeword_derivative_vanishes(&c, &pt, 4).unwrap());
    }

    proptest! {
        #[test]
        fn chow_forms_are_gorenstein(rows in prop::collection::vec(prop::collection::vec(prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), 4), 2..4)) {
            let k = rows.len();
            let mut g = rows.clone();
            for (i, row) in g.iter_mut().enumerate() {
                row.extend((0..k).map(|j| (i == j) as i64));
            }
            let c = q(&g);
            prop_assert!(symmetry_check(&code_chow_form(&c).unwrap()).unwrap());
        }
    }
}
