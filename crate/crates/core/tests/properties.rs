use proptest::prelude::*;

use cherednik::character::{graded_char_invariants, graded_dim_l};
use cherednik::classify::{
    check_violation, is_diagonalizable, is_unitary, verify_blocked, UnitaryCertificate, ViolationTarget,
};
use cherednik::gamma::{
    enumerate_gamma_c, in_gamma, is_folded, mu_t_to_pq, near_folds, pq_to_mu_t, verify_near_fold, weight_of,
};
use cherednik::oracle::linalg::{symmetric_inertia, Matrix};
use cherednik::params::{ExtendedNat, Parameter};
use cherednik::rational::{int, rat, Rational};
use cherednik::shapes::{box_leq, MultiPartition, Partition};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max, 0..=max).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// A multipartition with `1..=max_n` boxes and `r` components.
fn shape(r: usize, max_n: usize) -> impl Strategy<Value = MultiPartition> {
    (1..=max_n).prop_flat_map(move |n| {
        let all = MultiPartition::all(n, r);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (1i64..=6).prop_flat_map(|q| (-2 * q..=2 * q).prop_map(move |p| rat(p, q)))
}

fn param(r: usize) -> impl Strategy<Value = Parameter> {
    (small_rational(), prop::collection::vec(small_rational(), r - 1))
        .prop_map(move |(c0, tail)| Parameter::new(r, c0, &tail).unwrap())
}

fn case(max_n: usize) -> impl Strategy<Value = (MultiPartition, Parameter)> {
    (1usize..=3).prop_flat_map(move |r| (shape(r, max_n), param(r)))
}

/// Parameters off every special hyperplane at small degree.
fn generic_param(r: usize) -> impl Strategy<Value = Parameter> {
    (1i64..=200, prop::collection::vec(-200i64..=200, r - 1)).prop_map(move |(p, tail)| {
        let tail: Vec<Rational> = tail.into_iter().map(|t| rat(t, 211)).collect();
        Parameter::new(r, rat(p, 197), &tail).unwrap()
    })
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn transpose_is_an_involution(p in partition(5)) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().size(), p.size());
    }

    #[test]
    fn removing_a_corner_leaves_a_multipartition(s in (1usize..=3).prop_flat_map(|r| shape(r, 5))) {
        let corners: usize = s.components().iter().map(|p| p.removable().len()).sum();
        prop_assert_eq!(s.removable_boxes().len(), corners);
        for b in s.removable_boxes() {
            if s.n() > 1 {
                prop_assert_eq!(s.remove(&b).unwrap().n(), s.n() - 1);
            }
        }
    }

    #[test]
    fn addable_cells_are_outside_or_match_one_rim_end(p in partition(5)) {
        let outside = p.outside_addable();
        for (row, col) in p.addable() {
            let ct = col as i64 - row as i64;
            if outside.iter().any(|&(r, c, _)| (r, c) == (row, col)) {
                continue;
            }
            // The box at the end of the diagonal of content `ct`.
            let ends = (1..=p.len())
                .filter(|&i| {
                    let j = i as i64 + ct;
                    j >= 1 && p.contains(i, j as usize) && !p.contains(i + 1, j as usize + 1)
                })
                .count();
            prop_assert_eq!(ends, 1, "cell ({}, {})", row, col);
        }
    }

    #[test]
    fn box_order_is_tableau_order(s in (1usize..=3).prop_flat_map(|r| shape(r, 5))) {
        let tableaux = s.standard_tableaux();
        prop_assert_eq!(tableaux.len() as u128, s.hook_count());
        let boxes = s.boxes();
        for (i, b) in boxes.iter().enumerate() {
            for (j, b2) in boxes.iter().enumerate() {
                let all = tableaux.iter().all(|t| t.entry(i) <= t.entry(j));
                prop_assert_eq!(box_leq(b, b2), all, "{} vs {}", b, b2);
            }
        }
    }

    #[test]
    fn m_is_complementary(r in 1usize..=5, i in -6i64..6, j in -6i64..6) {
        let c = Parameter::with_c0(r, int(0));
        let sum = c.m(i, j) + c.m(j, i);
        let same = (i - j).rem_euclid(r as i64) == 0;
        prop_assert_eq!(sum, if same { 2 * r as i64 } else { r as i64 });
    }

    #[test]
    fn statistics_are_infinite_at_zero(s in (1usize..=3).prop_flat_map(|r| shape(r, 4))) {
        let c = Parameter::with_c0(s.r(), int(0));
        for b in s.boxes() {
            prop_assert_eq!(c.k_stat(b, &s), ExtendedNat::Infinity);
            prop_assert_eq!(c.l_stat(b, &s), ExtendedNat::Infinity);
            prop_assert_eq!(c.l_prime_stat(b, &s), ExtendedNat::Infinity);
        }
    }

    #[test]
    fn statistics_see_only_differences((s, c) in case(4), shift in small_rational()) {
        // Rewriting the same differences d_i - d_j through the full d-vector.
        let d: Vec<Rational> = c.d_vec().iter().map(|x| x + &shift).collect();
        let total: Rational = d.iter().sum();
        let mean = total / int(c.r() as i64);
        let back = Parameter::from_full(c.r(), c.c0().clone(), d.iter().map(|x| x - &mean).collect()).unwrap();
        prop_assert_eq!(&back, &c);
        for b in s.boxes() {
            prop_assert_eq!(back.k_stat(b, &s), c.k_stat(b, &s));
            prop_assert_eq!(back.l_stat(b, &s), c.l_stat(b, &s));
        }
    }

    #[test]
    fn l_prime_never_exceeds_l((s, c) in case(4)) {
        for b in s.boxes() {
            prop_assert!(c.l_prime_stat(b, &s) <= c.l_stat(b, &s), "box {} of {} at {}", b, s, c);
        }
    }

    #[test]
    fn mu_t_round_trip(s in (1usize..=2).prop_flat_map(|r| shape(r, 4)), seed in prop::collection::vec(0u64..3, 4), k in 0usize..64) {
        let tableaux = s.standard_tableaux();
        let t = &tableaux[k % tableaux.len()];
        let mu: Vec<u64> = seed[..s.n()].to_vec();
        let pq = mu_t_to_pq(&mu, t);
        prop_assert!(in_gamma(&pq, &s).is_ok());
        let (mu2, t2) = pq_to_mu_t(&pq);
        prop_assert_eq!(mu2, mu);
        prop_assert_eq!(&t2, t);
    }

    #[test]
    fn transpose_symmetry((s, c) in case(4)) {
        let (st, ct) = (s.transpose(), c.with_new_c0(-c.c0().clone()));
        prop_assert_eq!(is_diagonalizable(&s, &c).diagonalizable, is_diagonalizable(&st, &ct).diagonalizable);
        prop_assert_eq!(is_unitary(&s, &c).unwrap().unitary, is_unitary(&st, &ct).unwrap().unitary);
    }

    #[test]
    fn near_folds_match_the_classifier((s, c) in case(4)) {
        prop_assume!(!c.is_c0_zero());
        let (rs, rc, _) = cherednik::classify::reduce_sign(&s, &c);
        let folds = near_folds(&rs, &rc);
        prop_assert_eq!(folds.is_empty(), is_diagonalizable(&s, &c).diagonalizable);
        for nf in &folds {
            prop_assert!(verify_near_fold(nf, &rs, &rc).is_ok());
        }
    }

    #[test]
    fn unitarity_certificates_revalidate((s, c) in case(4)) {
        let v = is_unitary(&s, &c).unwrap();
        match &v.certificate {
            UnitaryCertificate::Blocked { .. } => prop_assert!(verify_blocked(&v)),
            UnitaryCertificate::PairUnblocked { b1, b2, witness, .. } => {
                prop_assert!(check_violation(&ViolationTarget::Pair(*b1, *b2), witness, &v.shape, &v.param).is_ok());
                let found = enumerate_gamma_c(&v.shape, &v.param, witness.degree());
                prop_assert!(found[witness.degree() as usize].contains(witness));
            }
            UnitaryCertificate::CharUnblocked { b, j, witness, .. } => {
                prop_assert!(check_violation(&ViolationTarget::Char(*b, *j), witness, &v.shape, &v.param).is_ok());
                let found = enumerate_gamma_c(&v.shape, &v.param, witness.degree());
                prop_assert!(found[witness.degree() as usize].contains(witness));
            }
            UnitaryCertificate::C0Zero { .. } => prop_assert!(c.is_c0_zero()),
            UnitaryCertificate::NotDiagonalizable(_) => prop_assert!(!is_diagonalizable(&s, &c).diagonalizable),
        }
    }

    #[test]
    fn invariants_fit_inside_the_module((s, c) in case(3)) {
        prop_assume!(!c.is_c0_zero() && is_diagonalizable(&s, &c).diagonalizable);
        let dims = graded_dim_l(&s, &c, 4).unwrap();
        let inv = graded_char_invariants(&s, &c, 4).unwrap();
        for (a, b) in inv.iter().zip(&dims) {
            prop_assert!(a <= b);
        }
        prop_assert_eq!(&graded_dim_l(&s, &c, 2).unwrap()[..], &dims[..3]);
        prop_assert_eq!(&graded_char_invariants(&s, &c, 2).unwrap()[..], &inv[..3]);
    }

    #[test]
    fn congruence_preserves_inertia(
        entries in prop::collection::vec(-3i64..=3, 16),
        change in prop::collection::vec(-2i64..=2, 16),
    ) {
        let n = 4;
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                g.set(i, j, int(entries[i * n + j]));
                g.set(j, i, int(entries[i * n + j]));
            }
        }
        // Unit upper triangular, hence invertible.
        let mut p = Matrix::identity(n);
        for i in 0..n {
            for j in i + 1..n {
                p.set(i, j, int(change[i * n + j]));
            }
        }
        let h = p.transpose().mul(&g).mul(&p);
        let (a, b) = (symmetric_inertia(&g), symmetric_inertia(&h));
        prop_assert_eq!((a.positive, a.negative, a.zero), (b.positive, b.negative, b.zero));
        prop_assert_eq!(g.rank(), a.rank());
    }
}

proptest! {
    #![proptest_config(config(16))]

    #[test]
    fn generic_weights_separate_gamma_c((s, c) in (1usize..=3).prop_flat_map(|r| (shape(r, 3), generic_param(r)))) {
        let levels = enumerate_gamma_c(&s, &c, 3);
        let mut seen = std::collections::HashSet::new();
        for pq in levels.iter().flatten() {
            let w: Vec<(Rational, usize)> = weight_of(pq, &s, &c).into_iter().map(|e| (e.z, e.zeta)).collect();
            prop_assert!(seen.insert(w), "repeated weight at {:?}", pq);
            prop_assert_eq!(is_folded(pq, &s, &c), None);
        }
    }

    #[test]
    fn diagonalizable_gamma_c_is_unfolded((s, c) in case(3)) {
        prop_assume!(!c.is_c0_zero() && is_diagonalizable(&s, &c).diagonalizable);
        let (rs, rc, _) = cherednik::classify::reduce_sign(&s, &c);
        for pq in enumerate_gamma_c(&rs, &rc, 3).iter().flatten() {
            prop_assert_eq!(is_folded(pq, &rs, &rc), None);
        }
    }
}
