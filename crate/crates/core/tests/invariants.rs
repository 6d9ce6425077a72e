use mindist::inverse::{codeword_derivative_vanishes, intersection_point};
use mindist::matroid::code_distance;
use mindist::*;
use proptest::prelude::*;

fn b() -> Budget {
    Budget::default()
}

fn swap(t: &TuttePoly) -> TuttePoly {
    let terms: Vec<((u32, u32), i128)> = t.coeffs.iter().map(|(&(i, j), &c)| ((j, i), c)).collect();
    TuttePoly::from_terms(&terms)
}

fn sum(a: &TuttePoly, b: &TuttePoly) -> TuttePoly {
    let mut out = a.clone();
    for (&e, &c) in &b.coeffs {
        out.add(e, c);
    }
    out
}

/// A generator `[I | A]` over GF(p) with no zero column.
fn code_strategy(primes: &'static [u64]) -> impl Strategy<Value = LinearCode<Fp>> {
    (prop::sample::select(primes), 2usize..=4, 1usize..=4).prop_flat_map(|(p, k, extra)| {
        prop::collection::vec(prop::collection::vec(0..p, k), extra).prop_map(move |mut tail| {
            for col in tail.iter_mut() {
                if col.iter().all(|&x| x == 0) {
                    col[0] = 1;
                }
            }
            let rows = (0..k)
                .map(|r| {
                    let mut row: Vec<u64> = (0..k).map(|j| (r == j) as u64).collect();
                    row.extend(tail.iter().map(|c| c[r]));
                    row
                })
                .collect();
            LinearCode::new(Fp::new(p).unwrap(), rows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_swaps_tutte_variables(c in code_strategy(&[2, 3, 5])) {
        let dual = c.dual().unwrap();
        prop_assert_eq!(tutte(&dual, &b()).unwrap(), swap(&tutte(&c, &b()).unwrap()));
    }

    #[test]
    fn deletion_contraction(c in code_strategy(&[2, 3, 5]), pick in 0usize..8) {
        let i = pick % c.n();
        let deleted = c.puncture(i);
        let contracted = c.shorten(i);
        if let (Ok(del), Ok(con)) = (deleted, contracted) {
            let whole = tutte(&c, &b()).unwrap();
            let is_loop_free = whole.coeff(0, 0) == 0 || c.n() > 1;
            prop_assume!(is_loop_free);
            prop_assert_eq!(whole, sum(&tutte(&del, &b()).unwrap(), &tutte(&con, &b()).unwrap()));
        }
    }

    #[test]
    fn afold_dims_ignore_row_operations(c in code_strategy(&[3, 5, 7]), s in 1u64..7) {
        let f = *c.field();
        let mut g = c.generator().clone();
        let s = s % f.modulus();
        prop_assume!(s != 0);
        g.sub_row_multiple(0, 1, &s);
        let c2 = c.with_generator(g).unwrap();
        for a in 1..=c.n().min(4) {
            prop_assert_eq!(afold_dim(&c, a, a + 1, &b()).unwrap(), afold_dim(&c2, a, a + 1, &b()).unwrap());
        }
    }

    #[test]
    fn inverse_bound_below_distance(c in code_strategy(&[11, 13])) {
        let d = c.min_distance_brute(&b()).unwrap().d;
        prop_assert!(inverse_bound(&c).unwrap() <= d);
        let pt = intersection_point(&c, &b()).unwrap();
        prop_assert!(codeword_derivative_vanishes(&c, &pt, d + 1).unwrap());
    }

    #[test]
    fn distances_agree(c in code_strategy(&[2, 3, 5, 7])) {
        let d = c.min_distance_brute(&b()).unwrap().d;
        prop_assert_eq!(code_distance(&c, &b()).unwrap(), d);
        prop_assert_eq!(distance_via_afold(&c, &b()).unwrap(), d);
        prop_assert_eq!(alpha_m_fitt(&c, &b()).unwrap(), d + 1);
    }
}

#[test]
fn quadric_generators_without_linear_syzygy() {
    // Two disjoint 3-circuits: x, y, x+y and z, w, z+w.
    let rows = vec![
        vec![1, 0, 1, 0, 0, 0],
        vec![0, 1, 1, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 1],
        vec![0, 0, 0, 0, 1, 1],
    ];
    let c = LinearCode::from_i64(Rationals, &rows).unwrap();
    let ideal = ot_generators(&c).unwrap();
    let supports: Vec<Vec<usize>> =
        ideal.circuits.iter().filter(|c| c.len() == 3).map(|c| c.support.clone()).collect();
    assert!(no_linear_syzygy_predicate(&supports).unwrap());
    let t = graded_betti(&ideal, None, 3, 5, &b()).unwrap();
    assert_eq!(t.get(2, 3), Some(0));
    assert_eq!(t.get(1, 2), Some(2));
}

#[test]
fn circuit_generators_bound_low_degree_betti() {
    for name in ["braid6", "paper-c2", "paper-g1", "paper-g2"] {
        let c = example(name).unwrap().rational().unwrap();
        let ideal = ot_generators(&c).unwrap();
        let alpha = ideal.alpha().unwrap();
        let t = graded_betti(&ideal, None, 1, alpha + 1, &b()).unwrap();
        // Circuits lying in a common rank-2 flat are linearly dependent.
        assert!(t.get(1, alpha).unwrap() > 0, "{name}");
        for j in alpha..=alpha + 1 {
            let count = ideal.circuits.iter().filter(|c| c.len() == j + 1).count() as u64;
            assert!(t.get(1, j).unwrap() <= count, "{name} degree {j}");
        }
    }
}

#[test]
fn betti_tables_agree_across_primes() {
    for name in ["braid6", "paper-c2", "paper-g1", "paper-g2"] {
        let ideal = ot_generators(&example(name).unwrap().rational().unwrap()).unwrap();
        let a = graded_betti(&ideal, Some(32003), 4, 6, &b()).unwrap();
        let z = graded_betti(&ideal, Some(65521), 4, 6, &b()).unwrap();
        assert_eq!(a, z, "{name}");
    }
}
