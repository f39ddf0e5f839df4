
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::common::random::{diag_pair, hermitian, kernel_lemma, small_gauss};
use concavity_core::crflag::{concavity_verdict, parabolic, Check};
use concavity_core::exactla::{classify_eigenvalues, float_eigen_oracle, hermitian_classify, DefinitenessClass, ExactMatrix};
use concavity_core::realform::{build_real_form, parse_form};

const FORMS: &[&str] = &["su(2,3)", "su(1,4)", "sp(1,2)", "sp(2,3)", "so*(8)", "so(2,5)", "FII", "su*(6)", "sl(4,R)"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn exact_matches_float(seed in any::<u64>(), n in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = hermitian(&mut rng, n);
        let exact = hermitian_classify(&m).unwrap();
        let float = classify_eigenvalues(&m, &float_eigen_oracle(&m), 1e-9);
        prop_assert_eq!(exact, float);
    }

    #[test]
    fn planted_rank(seed in any::<u64>(), n in 1usize..=7, r in 0usize..=7) {
        let r = r.min(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = ExactMatrix::from_fn(n, r.max(1), |_, _| if r == 0 { Default::default() } else { small_gauss(&mut rng, false) });
        let g = b.mul(&b.conj_transpose());
        prop_assert_eq!(g.rank(), b.rank());
        let class = hermitian_classify(&g).unwrap();
        let expected = match b.rank() {
            0 => DefinitenessClass::Zero,
            k if k == n => DefinitenessClass::PositiveDefinite,
            _ => DefinitenessClass::PositiveSemidefiniteNonzero,
        };
        prop_assert_eq!(class, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn semidefinite_diagonal_split(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (d, a) = diag_pair(&mut rng, n);
        if let Some(ok) = kernel_lemma(&d, &a) {
            prop_assert!(ok);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parabolic_monotone_and_sufficiency(form in 0..FORMS.len(), mask in any::<u32>(), extra in any::<u32>(), seed in any::<u64>()) {
        let f = build_real_form(&parse_form(FORMS[form]).unwrap(), None).unwrap();
        let n = f.rs.rank();
        let phi: Vec<usize> = (1..=n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let bigger: Vec<usize> = (1..=n).filter(|j| (mask | extra) >> (j - 1) & 1 == 1).collect();
        let small = parabolic(&f, &phi).unwrap();
        let big = parabolic(&f, &bigger).unwrap();
        for r in 0..f.rs.len() {
            prop_assert!(!big.in_q(r) || small.in_q(r));
        }
        let v = concavity_verdict(&f, &phi, Check::All).unwrap();
        if v.finite_type {
            prop_assert!(!v.mot_satisfied || v.span_satisfied);
        }
        let g = build_real_form(&parse_form(FORMS[form]).unwrap(), Some(seed)).unwrap();
        let w = concavity_verdict(&g, &phi, Check::All).unwrap();
        prop_assert_eq!(v.verdict, w.verdict);
        prop_assert_eq!(v.k_phi, w.k_phi);
        prop_assert_eq!(v.mot_satisfied, w.mot_satisfied);
        let flip = |c: DefinitenessClass| if c.is_semidefinite() { 1 } else { 0 };
        prop_assert_eq!(v.levi.iter().map(|l| flip(l.class)).collect::<Vec<_>>(), w.levi.iter().map(|l| flip(l.class)).collect::<Vec<_>>());
    }
}
