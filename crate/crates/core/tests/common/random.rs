//! Random exact matrices for the definiteness and kernel checks.

use num_traits::Zero;
use rand::Rng;

use concavity_core::exactla::{hermitian_classify, kernel, ExactMatrix};
use concavity_core::scalar::{ratio, Gauss};
use num_complex::Complex;

pub fn small_gauss(rng: &mut impl Rng, real_only: bool) -> Gauss {
    let den = rng.gen_range(1..=3);
    let re = ratio(rng.gen_range(-4..=4), den);
    let im = if real_only { ratio(0, 1) } else { ratio(rng.gen_range(-4..=4), den) };
    Complex::new(re, im)
}

/// Hermitian matrix of the given size; with probability 1/2 a Gram matrix
/// `B B*` of random rank, so semidefinite cases are well represented.
pub fn hermitian(rng: &mut impl Rng, n: usize) -> ExactMatrix {
    if rng.gen_bool(0.5) {
        let r = rng.gen_range(0..=n);
        let b = ExactMatrix::from_fn(n, r.max(1), |_, _| if r == 0 { Gauss::zero() } else { small_gauss(rng, false) });
        let g = b.mul(&b.conj_transpose());
        if rng.gen_bool(0.5) {
            g.scale(&Complex::new(ratio(-1, 1), ratio(0, 1)))
        } else {
            g
        }
    } else {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, small_gauss(rng, true));
            for j in i + 1..n {
                let z = small_gauss(rng, false);
                m.set(j, i, z.conj());
                m.set(i, j, z);
            }
        }
        m
    }
}

/// `(D, A)`: `D` real diagonal with some zeros, `A` Hermitian with zero
/// diagonal and sparse entries. Half the time `D + A` is a planted Gram
/// matrix split into its diagonal and off-diagonal parts.
pub fn diag_pair(rng: &mut impl Rng, n: usize) -> (ExactMatrix, ExactMatrix) {
    let m = if rng.gen_bool(0.5) {
        let b = ExactMatrix::from_fn(n, n, |_, _| if rng.gen_bool(0.4) { small_gauss(rng, false) } else { Gauss::zero() });
        b.mul(&b.conj_transpose())
    } else {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            if rng.gen_bool(0.6) {
                m.set(i, i, small_gauss(rng, true));
            }
            for j in i + 1..n {
                if rng.gen_bool(0.25) {
                    let z = small_gauss(rng, false);
                    m.set(j, i, z.conj());
                    m.set(i, j, z);
                }
            }
        }
        m
    };
    let d = ExactMatrix::from_fn(n, n, |i, j| if i == j { m.get(i, i).clone() } else { Gauss::zero() });
    let a = ExactMatrix::from_fn(n, n, |i, j| if i == j { Gauss::zero() } else { m.get(i, j).clone() });
    (d, a)
}

/// Returns `None` when `D + A` is not semidefinite, otherwise whether
/// `ker D ⊂ ker(D + A)`.
pub fn kernel_lemma(d: &ExactMatrix, a: &ExactMatrix) -> Option<bool> {
    let s = d.add(a);
    if !hermitian_classify(&s).unwrap().is_semidefinite() {
        return None;
    }
    Some(kernel(d).iter().all(|v| s.mul_vec(v).iter().all(Zero::is_zero)))
}
