use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use plethyrs_core::alphabet::{chi_k_series, eval_chain_on_1mxmy, eval_schur_at, hc_extract};
use plethyrs_core::flip::{flip, hc_sequence, is_flip_symmetric, FlipMode};
use plethyrs_core::partition::{hook_column_decompose, hook_columns_of, partition_counts, partitions_of, two_sign};
use plethyrs_core::plethysm::{iterated, p_compose, plethysm};
use plethyrs_core::symfunc::{p_to_schur, schur_to_p};
use plethyrs_core::{BivariatePoly, CharacterTable, HookColumnShape, Partition, PSeries, PlethysmExpression};

fn partition_of(max: u32) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| {
        let all: Vec<Partition> = partitions_of(n).collect();
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn hook_column(max_weight: u32) -> impl Strategy<Value = HookColumnShape> {
    (1..=max_weight).prop_flat_map(|n| {
        let all = hook_columns_of(n);
        (0..all.len()).prop_map(move |i| all[i])
    })
}

/// Random small Schur combination of one degree, as a p-series.
fn small_function(max_degree: u32) -> impl Strategy<Value = PSeries> {
    (1..=max_degree).prop_flat_map(|n| {
        let all: Vec<Partition> = partitions_of(n).collect();
        let k = all.len();
        prop::collection::vec((0..k, -3i64..=3), 1..=3).prop_map(move |picks| {
            picks.iter().fold(PSeries::zero(n), |acc, &(i, c)| {
                let term = schur_to_p(&all[i]).scale(&BigRational::from_integer(BigInt::from(c)));
                acc.checked_add(&term).unwrap()
            })
        })
    })
}

fn shape_2(which: bool) -> Partition {
    if which {
        Partition::row(2)
    } else {
        Partition::column(2)
    }
}

fn alphabet_hook_columns(expr: &PlethysmExpression) -> plethyrs_core::SchurExpansion {
    let memo = CharacterTable::new();
    let poly = eval_chain_on_1mxmy(&memo, expr).unwrap();
    hc_extract(&poly, expr.degree()).unwrap().to_schur()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(lam in partition_of(20)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().weight(), lam.weight());
    }

    #[test]
    fn hook_column_round_trip(h in hook_column(30)) {
        prop_assert_eq!(hook_column_decompose(&h.to_partition()), Some(h));
        prop_assert_eq!(h.to_partition().weight(), h.weight());
    }

    #[test]
    fn flip_is_a_weight_and_gamma_preserving_involution(h in hook_column(30), r in 2u32..12) {
        let lam = h.to_partition();
        if let Some(img) = flip(r, &lam, FlipMode::Standard) {
            let back = flip(r, &img.image, FlipMode::Standard).map(|b| b.image);
            prop_assert_eq!(back, Some(lam.clone()));
            prop_assert_eq!(img.image.weight(), lam.weight());
            prop_assert_eq!(img.image.hook_column().map(|s| s.gamma), Some(h.gamma));
            if let (Some(before), Some(after)) = (two_sign(&lam), two_sign(&img.image)) {
                prop_assert_eq!(before, after);
            }
        }
    }

    #[test]
    fn non_hook_columns_vanish_at_one_minus_x_minus_y(lam in partition_of(12)) {
        prop_assume!(!lam.is_hook_column());
        let memo = CharacterTable::new();
        prop_assert!(eval_schur_at(&memo, &lam, &BivariatePoly::one_minus_x_minus_y()).is_zero());
    }

    #[test]
    fn power_sums_commute_with_plethysm(f in small_function(4), n in 1u32..4) {
        let pn = PSeries::p(Partition::row(n));
        prop_assert_eq!(plethysm(&pn, &f).unwrap(), plethysm(&f, &pn).unwrap());
        prop_assert_eq!(plethysm(&pn, &f).unwrap(), p_compose(n, &f));
    }

    #[test]
    fn plethysm_is_a_ring_map_in_the_outer_argument(
        f in small_function(3),
        g in small_function(3),
        h in small_function(3),
    ) {
        let fg = f.multiply(&g);
        let lhs = plethysm(&fg, &h).unwrap();
        let rhs = plethysm(&f, &h).unwrap().multiply(&plethysm(&g, &h).unwrap());
        prop_assert_eq!(lhs, rhs);
        if f.degree() == g.degree() {
            let lhs = plethysm(&f.checked_add(&g).unwrap(), &h).unwrap();
            let rhs = plethysm(&f, &h).unwrap().checked_add(&plethysm(&g, &h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn chains_are_schur_positive(chain in prop::collection::vec(partition_of(3), 2..=3)) {
        let expr = PlethysmExpression::new(chain).unwrap();
        prop_assume!(expr.degree() <= 12);
        let memo = CharacterTable::new();
        let f = p_to_schur(&memo, &iterated(&memo, &expr).unwrap(), None).unwrap();
        prop_assert!(f.is_schur_positive(), "{}", expr);
        prop_assert_eq!(alphabet_hook_columns(&expr), f.hook_column_part());
    }

    #[test]
    fn degree_two_outer_layers_keep_flip_symmetry(
        a in 2u32..=4,
        b in 2u32..=3,
        outer in prop::collection::vec(any::<bool>(), 1..=2),
    ) {
        let mut chain: Vec<Partition> = outer.iter().map(|&w| shape_2(w)).collect();
        chain.push(Partition::row(b));
        chain.push(Partition::row(a));
        let expr = PlethysmExpression::new(chain).unwrap();
        prop_assume!(expr.degree() <= 48);
        let r = (a * b - 2 * (b - 1)) as i64;
        let k = outer.len() as u32;
        let offset = (1i64 << k) * r - (1i64 << (k + 1)) + 2;
        let f = alphabet_hook_columns(&expr);
        prop_assert!(is_flip_symmetric(&f, offset as u32, FlipMode::Standard).holds, "{} offset {}", expr, offset);
    }
}

#[test]
fn character_identity_for_two_row_complete_products() {
    for c in 1..=6u32 {
        for k in 0..=c / 2 {
            let h = schur_to_p(&Partition::row(c - k)).multiply(&schur_to_p(&Partition::row(k)));
            assert_eq!(chi_k_series(c, k), h, "c={c} k={k}");
        }
    }
}

#[test]
fn row_of_two_of_two_is_palindromic() {
    for c in 1..=6 {
        let expr = PlethysmExpression::rows(&[c, 2, 2]).unwrap();
        let seq = hc_sequence(&alphabet_hook_columns(&expr), 0);
        let core = seq.nonzero_core();
        assert!(core.iter().eq(core.iter().rev()), "c={c}: {:?}", seq.to_i64s());
    }
}

#[test]
fn class_sizes_sum_to_factorial() {
    for n in 1..=14u32 {
        let factorial: BigUint = (1..=n).map(BigUint::from).product();
        let total = partitions_of(n).fold(BigRational::zero(), |acc, mu| {
            acc + BigRational::new(BigInt::from(factorial.clone()), BigInt::from(mu.z()))
        });
        assert_eq!(total, BigRational::from_integer(BigInt::from(factorial)));
        let ones = partitions_of(n).fold(BigRational::zero(), |acc, mu| {
            acc + BigRational::new(BigInt::one(), BigInt::from(mu.z()))
        });
        assert_eq!(ones, BigRational::one(), "Σ 1/z = 1 at n={n}");
    }
}

#[test]
fn partition_counts_match_enumeration() {
    let counts = partition_counts(30);
    for n in 1..=30u32 {
        assert_eq!(BigUint::from(partitions_of(n).count()), counts[n as usize], "n={n}");
    }
    assert_eq!(counts[30], BigUint::from(5604u32));
}

#[test]
fn leading_entries_stabilize_in_the_outer_row() {
    let row = |c: u32, b: u32| {
        let expr = PlethysmExpression::rows(&[c, b, 2]).unwrap();
        hc_sequence(&alphabet_hook_columns(&expr), 0).to_i64s()
    };
    for b in [3, 4] {
        for c in 2..=5 {
            let (small, large) = (row(c, b), row(c + 1, b));
            let stable = c as usize;
            assert_eq!(small[..stable], large[..stable], "b={b} c={c}");
        }
    }
}
