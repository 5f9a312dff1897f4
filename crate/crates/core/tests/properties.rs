//! Randomized invariant checks over the public API.

use canstrat_core::{
    canonical_stratification, canonical_stratification_with, link_chain_complex,
    smith_normal_form, verify_with_oracle, ComplexView, Dispatch, IntMatrix, SimplicialComplex,
    StratifyOptions,
};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn tuples_strategy(
    vertex_pool: u64,
    max_arity: usize,
    max_tuples: usize,
) -> impl Strategy<Value = Vec<Vec<u64>>> {
    proptest::collection::vec(
        proptest::collection::btree_set(0..vertex_pool, 1..=max_arity),
        1..=max_tuples,
    )
    .prop_map(|sets| sets.into_iter().map(|s| s.into_iter().collect()).collect())
}

fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    assert_eq!(a.cols(), b.rows());
    let mut out = IntMatrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut acc = BigInt::zero();
            for k in 0..a.cols() {
                acc += a.get(i, k) * b.get(k, j);
            }
            out.set(i, j, acc);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn tables_are_closed_and_incidence_is_mutual(tuples in tuples_strategy(12, 4, 16)) {
        let c = SimplicialComplex::build(&tuples).unwrap();
        for id in c.iter_ids() {
            let verts = c.vertices(id);
            prop_assert!(verts.windows(2).all(|w| w[0] < w[1]));
            for (i, &face) in c.faces(id).iter().enumerate() {
                let mut expect = verts.to_vec();
                expect.remove(i);
                prop_assert_eq!(c.vertices(face), &expect[..]);
                prop_assert!(c.cofaces(face).contains(&id));
            }
            for &cf in c.cofaces(id) {
                prop_assert!(c.faces(cf).contains(&id));
            }
        }
    }

    #[test]
    fn double_boundary_vanishes_on_random_links(tuples in tuples_strategy(10, 5, 10)) {
        let c = SimplicialComplex::build(&tuples).unwrap();
        let view = ComplexView::fresh(&c);
        let sigma = c.iter_ids().next().unwrap();
        let cc = link_chain_complex(&view, sigma, 4);
        for j in 2..cc.depth() {
            if let (Some(low), Some(high)) = (cc.boundary(j - 1), cc.boundary(j)) {
                prop_assert!(matmul(low, high).is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn stratification_satisfies_its_invariants(tuples in tuples_strategy(10, 4, 12)) {
        let c = SimplicialComplex::build(&tuples).unwrap();
        let s = canonical_stratification(c, true);
        prop_assert_eq!(s.validate(), Ok(()));
        prop_assert_eq!(verify_with_oracle(&s), Ok(()));
        let members: usize = s.strata().iter().map(|r| r.member_count()).sum();
        prop_assert_eq!(members, s.complex().len());
    }

    #[test]
    fn general_dispatch_agrees_with_shortcuts(tuples in tuples_strategy(10, 4, 10)) {
        let c = SimplicialComplex::build(&tuples).unwrap();
        let fast = canonical_stratification(c.clone(), true);
        let general = canonical_stratification_with(
            c,
            StratifyOptions { strict: true, dispatch: Dispatch::GeneralOnly },
        );
        prop_assert_eq!(fast.assignment(), general.assignment());
        prop_assert_eq!(fast.strata(), general.strata());
    }

    #[test]
    fn input_line_order_does_not_matter(tuples in tuples_strategy(10, 4, 12)) {
        let mut reversed = tuples.clone();
        reversed.reverse();
        let a = canonical_stratification(SimplicialComplex::build(&tuples).unwrap(), true);
        let b = canonical_stratification(SimplicialComplex::build(&reversed).unwrap(), true);
        prop_assert_eq!(a.assignment(), b.assignment());
        prop_assert_eq!(a.strata(), b.strata());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn snf_chain_divides_and_survives_transpose(
        rows in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-5i64..=5, c), r)
        })
    ) {
        let m = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&m);
        prop_assert!(snf.rank <= m.rows().min(m.cols()));
        prop_assert_eq!(snf.divisors.len(), snf.rank);
        for d in &snf.divisors {
            prop_assert!(*d > BigInt::zero());
        }
        for pair in snf.divisors.windows(2) {
            prop_assert!((&pair[1] % &pair[0]).is_zero());
        }
        let mut t_rows = vec![vec![0i64; rows.len()]; rows[0].len()];
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                t_rows[j][i] = x;
            }
        }
        let tsnf = smith_normal_form(&IntMatrix::from_rows(&t_rows));
        prop_assert_eq!(tsnf.rank, snf.rank);
        prop_assert_eq!(tsnf.divisors, snf.divisors);
    }
}
