//! Classical real forms as fixed points of explicit anti-linear involutions
//! of matrix algebras, used as an oracle for the root conjugation.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64 as C;

use concavity_core::realform::{build_real_form, parse_form, RealForm};
use concavity_core::rootsys::Family;

#[derive(Clone, Copy, PartialEq)]
pub enum Kind {
    Sl,
    So,
    Sp,
}

pub struct Model {
    kind: Kind,
    n: usize,
    /// Bilinear form for so/sp.
    s: DMatrix<C>,
}

impl Model {
    pub fn new(kind: Kind, n: usize) -> Model {
        let s = DMatrix::from_fn(n, n, |i, j| {
            if i + j + 1 != n {
                C::new(0.0, 0.0)
            } else if kind == Kind::Sp && i >= n / 2 {
                C::new(-1.0, 0.0)
            } else {
                C::new(1.0, 0.0)
            }
        });
        Model { kind, n, s }
    }

    fn contains(&self, x: &DMatrix<C>) -> bool {
        match self.kind {
            Kind::Sl => x.trace().norm() < 1e-9,
            _ => (x.transpose() * &self.s + &self.s * x).norm() < 1e-9,
        }
    }

    /// Spanning set of the complex algebra.
    fn span(&self) -> Vec<DMatrix<C>> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut e = DMatrix::zeros(n, n);
                e[(i, j)] = C::new(1.0, 0.0);
                let x = match self.kind {
                    Kind::Sl if i == j => {
                        if i + 1 == n {
                            continue;
                        }
                        let mut d = e.clone();
                        d[(i + 1, i + 1)] = C::new(-1.0, 0.0);
                        d
                    }
                    Kind::Sl => e,
                    _ => {
                        let sinv = self.s.clone().try_inverse().unwrap();
                        &e - sinv * e.transpose() * &self.s
                    }
                };
                if x.norm() > 1e-12 {
                    out.push(x);
                }
            }
        }
        out
    }

    /// Cartan coordinate `a_i` as a diagonal matrix.
    fn cartan(&self, i: usize) -> DMatrix<C> {
        let mut h = DMatrix::zeros(self.n, self.n);
        h[(i, i)] = C::new(1.0, 0.0);
        if self.kind != Kind::Sl {
            h[(self.n - 1 - i, self.n - 1 - i)] = C::new(-1.0, 0.0);
        }
        h
    }

    fn coords(&self) -> usize {
        if self.kind == Kind::Sl {
            self.n
        } else {
            self.n / 2
        }
    }
}

/// `X ↦ T X̄ T⁻¹` or `X ↦ -P X* P⁻¹`.
pub enum Structure {
    Conj(DMatrix<C>),
    Unitary(DMatrix<C>),
}

impl Structure {
    pub fn apply(&self, x: &DMatrix<C>) -> DMatrix<C> {
        match self {
            Structure::Conj(t) => t * x.map(|z| z.conj()) * t.clone().try_inverse().unwrap(),
            Structure::Unitary(p) => -(p * x.adjoint() * p.clone().try_inverse().unwrap()),
        }
    }
}

pub fn monomial(n: usize, entries: &[(usize, usize, C)]) -> DMatrix<C> {
    let mut m = DMatrix::zeros(n, n);
    for &(i, j, z) in entries {
        m[(i, j)] = z;
    }
    m
}

pub fn re(x: f64) -> C {
    C::new(x, 0.0)
}

/// Negative index of the trace form on the real points.
pub fn compact_dim(model: &Model, sigma: &Structure) -> usize {
    let mut real = Vec::new();
    for x in model.span() {
        let s = sigma.apply(&x);
        real.push(&x + &s);
        real.push((&x - &s) * C::new(0.0, 1.0));
    }
    let k = real.len();
    let g = DMatrix::from_fn(k, k, |a, b| (&real[a] * &real[b]).trace().re);
    let eig = SymmetricEigen::new(g).eigenvalues;
    let scale = eig.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    eig.iter().filter(|&&e| e < -1e-8 * scale).count()
}

pub fn is_real_structure(model: &Model, sigma: &Structure) -> bool {
    let span = model.span();
    span.iter().all(|x| {
        let s = sigma.apply(x);
        model.contains(&s) && (sigma.apply(&s) - x).norm() < 1e-9
    }) && span.iter().zip(span.iter().skip(3)).all(|(x, y)| {
        let lhs = sigma.apply(&(x * y - y * x));
        let (sx, sy) = (sigma.apply(x), sigma.apply(y));
        (lhs - (&sx * &sy - &sy * &sx)).norm() < 1e-9
    }) && (0..model.coords()).all(|i| {
        let s = sigma.apply(&model.cartan(i));
        (0..model.n).all(|a| (0..model.n).all(|b| a == b || s[(a, b)].norm() < 1e-12))
    })
}

/// Root conjugation on ε-coordinates: `c(λ)_i = Σ_k λ_k b⁽ⁱ⁾_k`.
pub fn epsilon_conjugation(model: &Model, sigma: &Structure) -> Vec<Vec<f64>> {
    let m = model.coords();
    (0..m)
        .map(|i| {
            let s = sigma.apply(&model.cartan(i));
            (0..m).map(|k| s[(k, k)].re).collect()
        })
        .collect()
}

pub fn simple_roots_eps(family: Family, l: usize) -> Vec<Vec<i64>> {
    let dim = if family == Family::A { l + 1 } else { l };
    let mut out = Vec::new();
    for j in 0..l {
        let mut v = vec![0i64; dim];
        if j + 1 < l || family == Family::A {
            v[j] = 1;
            v[j + 1] = -1;
        } else {
            match family {
                Family::B => v[j] = 1,
                Family::C => v[j] = 2,
                Family::D => {
                    v[j - 1] = 1;
                    v[j] = 1;
                }
                _ => unreachable!(),
            }
        }
        out.push(v);
    }
    out
}

pub fn to_eps(simple: &[Vec<i64>], coeffs: &[i32]) -> Vec<i64> {
    let mut v = vec![0i64; simple[0].len()];
    for (s, &c) in simple.iter().zip(coeffs) {
        for (x, y) in v.iter_mut().zip(s) {
            *x += i64::from(c) * y;
        }
    }
    v
}

pub fn check_against(form: &RealForm, model: &Model, sigma: &Structure) {
    let d = &form.diagram;
    assert!(is_real_structure(model, sigma), "{}: not an anti-linear involutive automorphism", d.name);
    let simple = simple_roots_eps(d.family, d.rank);
    let cmat = epsilon_conjugation(model, sigma);
    for r in 0..form.rs.len() {
        let lam = to_eps(&simple, &form.rs.root(r).0);
        let via_matrix: Vec<i64> = (0..lam.len())
            .map(|i| lam.iter().zip(&cmat[i]).map(|(a, b)| *a as f64 * b).sum::<f64>().round() as i64)
            .collect();
        let ours = to_eps(&simple, &form.rs.root(form.conj.bar(r)).0);
        assert_eq!(via_matrix, ours, "{}: c({}) differs", d.name, form.rs.root(r));
    }
}

pub fn form(name: &str) -> RealForm {
    build_real_form(&parse_form(name).unwrap(), None).unwrap()
}

/// Hermitian monomial `P` with `P[π(i), i]` running over unit phases; returns
/// the first real structure with the requested compact dimension.
pub fn search_unitary(model: &Model, pi: &[usize], want_k: usize, signature: (usize, usize)) -> Option<Structure> {
    let n = model.n;
    let orbits: Vec<(usize, usize)> = (0..n).filter(|&i| pi[i] >= i).map(|i| (i, pi[i])).collect();
    let choices = |(i, j): (usize, usize)| -> Vec<C> {
        if i == j {
            vec![re(1.0), re(-1.0)]
        } else {
            vec![re(1.0), re(-1.0), C::new(0.0, 1.0), C::new(0.0, -1.0)]
        }
    };
    let sizes: Vec<usize> = orbits.iter().map(|&o| choices(o).len()).collect();
    let total: usize = sizes.iter().product();
    let probe = {
        let span = model.span();
        span.iter().enumerate().fold(DMatrix::zeros(n, n), |acc, (k, x)| acc + x * re(1.0 + (k % 7) as f64 * 0.37))
    };
    for code in 0..total {
        let mut c = code;
        let mut entries = Vec::new();
        for (o, &sz) in orbits.iter().zip(&sizes) {
            let z = choices(*o)[c % sz];
            c /= sz;
            entries.push((o.1, o.0, z));
            if o.0 != o.1 {
                entries.push((o.0, o.1, z.conj()));
            }
        }
        let p = monomial(n, &entries);
        let hp = SymmetricEigen::new(hermitian_as_real(&p)).eigenvalues;
        let pos = hp.iter().filter(|&&e| e > 0.0).count() / 2;
        let neg = hp.iter().filter(|&&e| e < 0.0).count() / 2;
        if (pos, neg) != signature && (neg, pos) != signature {
            continue;
        }
        let sigma = Structure::Unitary(p);
        if !model.contains(&sigma.apply(&probe)) {
            continue;
        }
        if is_real_structure(model, &sigma) && compact_dim(model, &sigma) == want_k {
            return Some(sigma);
        }
    }
    None
}

/// Real symmetric `2n × 2n` embedding of a Hermitian matrix; each eigenvalue
/// appears twice.
pub fn hermitian_as_real(p: &DMatrix<C>) -> DMatrix<f64> {
    let n = p.nrows();
    DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let z = p[(i % n, j % n)];
        match (i < n, j < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    })
}

/// Pairs `2k-1 ↔ n+1-2k`, `2k ↔ n+2-2k` (1-based) for `k ≤ pairs`, fixed otherwise.
pub fn quaternionic_pi(n: usize, pairs: usize) -> Vec<usize> {
    let mut pi: Vec<usize> = (0..n).collect();
    for k in 1..=pairs {
        let (a, b) = (2 * k - 1, n + 1 - 2 * k);
        let (c, d) = (2 * k, n + 2 - 2 * k);
        pi[a - 1] = b - 1;
        pi[b - 1] = a - 1;
        pi[c - 1] = d - 1;
        pi[d - 1] = c - 1;
    }
    pi
}


/// Every classical family checked against a matrix model; returns the
/// number of forms compared.
pub fn check_all_classical() -> usize {
    let mut count = 0;
    for n in 2..=6 {
        let model = Model::new(Kind::Sl, n);
        let sigma = Structure::Conj(DMatrix::identity(n, n));
        assert_eq!(compact_dim(&model, &sigma), n * (n - 1) / 2);
        check_against(&form(&format!("sl({n},R)")), &model, &sigma);
        count += 1;
    }
    for m in 2..=4 {
        let n = 2 * m;
        let mut e = Vec::new();
        for k in 0..m {
            e.push((2 * k, 2 * k + 1, re(1.0)));
            e.push((2 * k + 1, 2 * k, re(-1.0)));
        }
        let model = Model::new(Kind::Sl, n);
        let sigma = Structure::Conj(monomial(n, &e));
        assert_eq!(compact_dim(&model, &sigma), m * (2 * m + 1));
        check_against(&form(&format!("su*({n})")), &model, &sigma);
        count += 1;
    }
    for (p, q) in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (1, 5)] {
        let n = p + q;
        let pi: Vec<usize> = (0..n).map(|i| if i < p || i >= n - p { n - 1 - i } else { i }).collect();
        let model = Model::new(Kind::Sl, n);
        let sigma = search_unitary(&model, &pi, p * p + q * q - 1, (p, q)).expect("no unitary structure");
        check_against(&form(&format!("su({p},{q})")), &model, &sigma);
        count += 1;
    }
    for (p, q) in [(1, 4), (2, 3), (1, 6), (2, 5), (3, 4), (1, 7), (2, 6), (3, 5), (4, 4), (3, 3), (2, 7), (4, 5)] {
        let n = p + q;
        let swapped: Vec<(usize, usize, C)> = (0..n)
            .map(|i| {
                let mirror = n - 1 - i;
                if i >= p && mirror >= p && i != mirror {
                    (i, mirror, re(1.0))
                } else {
                    (i, i, re(1.0))
                }
            })
            .collect();
        let model = Model::new(Kind::So, n);
        let sigma = Structure::Conj(monomial(n, &swapped));
        assert_eq!(compact_dim(&model, &sigma), p * (p - 1) / 2 + q * (q - 1) / 2, "so({p},{q})");
        let f = form(&format!("so({p},{q})"));
        assert_eq!(f.diagram.family, if n % 2 == 1 { Family::B } else { Family::D });
        check_against(&f, &model, &sigma);
        count += 1;
    }
    for l in 2..=4 {
        let model = Model::new(Kind::Sp, 2 * l);
        let sigma = Structure::Conj(DMatrix::identity(2 * l, 2 * l));
        assert_eq!(compact_dim(&model, &sigma), l * l);
        check_against(&form(&format!("sp({},R)", 2 * l)), &model, &sigma);
        count += 1;
    }
    for (p, q) in [(1, 1), (1, 2), (1, 3), (2, 2)] {
        let l = p + q;
        let model = Model::new(Kind::Sp, 2 * l);
        let pi = quaternionic_pi(2 * l, p);
        let sigma =
            search_unitary(&model, &pi, p * (2 * p + 1) + q * (2 * q + 1), (2 * p, 2 * q)).expect("no unitary structure");
        check_against(&form(&format!("sp({p},{q})")), &model, &sigma);
        count += 1;
    }
    for l in 4..=6 {
        let model = Model::new(Kind::So, 2 * l);
        let pi = quaternionic_pi(2 * l, l / 2);
        let sigma = search_unitary(&model, &pi, l * l, (l, l)).expect("no unitary structure");
        check_against(&form(&format!("so*({})", 2 * l)), &model, &sigma);
        count += 1;
    }
    count
}
