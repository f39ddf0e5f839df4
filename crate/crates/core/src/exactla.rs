//! Exact linear algebra over the Gaussian rationals.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{g_display, g_one, g_to_c64, g_zero, sign, Gauss};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Gauss>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix { rows, cols, data: vec![g_zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, g_one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Gauss) -> ExactMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Gauss>>) -> ExactMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data = rows.into_iter().flatten().collect::<Vec<_>>();
        assert_eq!(data.len(), r * c, "ragged rows");
        ExactMatrix { rows: r, cols: c, data }
    }

    pub fn diag(entries: &[Gauss]) -> ExactMatrix {
        let n = entries.len();
        let mut m = ExactMatrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Gauss {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gauss) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.is_zero())
    }

    pub fn conj_transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.conj_transpose()
    }

    pub fn scale(&self, s: &Gauss) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = &out.data[idx] + a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Gauss]) -> Vec<Gauss> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(g_zero(), |acc, j| {
                    let a = self.get(i, j);
                    if a.is_zero() || v[j].is_zero() {
                        acc
                    } else {
                        acc + a * &v[j]
                    }
                })
            })
            .collect()
    }

    pub fn trace(&self) -> Gauss {
        (0..self.rows.min(self.cols)).fold(g_zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn diagonal_is_zero(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| self.get(i, i).is_zero())
    }

    pub fn has_offdiagonal(&self) -> bool {
        (0..self.rows).any(|i| (0..self.cols).any(|j| i != j && !self.get(i, j).is_zero()))
    }

    pub fn to_c64(&self) -> DMatrix<Complex<f64>> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| g_to_c64(self.get(i, j)))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = g_one() / m.get(r, c);
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let rj = m.get(r, j);
                    if rj.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &f * rj;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| g_display(self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Basis of the right null space.
pub fn kernel(m: &ExactMatrix) -> Vec<Vec<Gauss>> {
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![g_zero(); m.cols()];
            v[f] = g_one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, f).clone();
            }
            v
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DefinitenessClass {
    Zero,
    PositiveSemidefiniteNonzero,
    NegativeSemidefiniteNonzero,
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
}

impl DefinitenessClass {
    /// Semidefinite in either sign, the zero form included.
    pub fn is_semidefinite(self) -> bool {
        !matches!(self, DefinitenessClass::Indefinite)
    }

    /// Class of the negated form.
    pub fn flipped(self) -> DefinitenessClass {
        use DefinitenessClass::*;
        match self {
            PositiveSemidefiniteNonzero => NegativeSemidefiniteNonzero,
            NegativeSemidefiniteNonzero => PositiveSemidefiniteNonzero,
            PositiveDefinite => NegativeDefinite,
            NegativeDefinite => PositiveDefinite,
            other => other,
        }
    }

    pub fn from_inertia(i: Inertia) -> DefinitenessClass {
        use DefinitenessClass::*;
        match (i.positive, i.negative, i.zero) {
            (0, 0, _) => Zero,
            (_, 0, 0) => PositiveDefinite,
            (0, _, 0) => NegativeDefinite,
            (_, 0, _) => PositiveSemidefiniteNonzero,
            (0, _, _) => NegativeSemidefiniteNonzero,
            _ => Indefinite,
        }
    }
}

impl fmt::Display for DefinitenessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DefinitenessClass::Zero => "zero",
            DefinitenessClass::PositiveSemidefiniteNonzero => "psd",
            DefinitenessClass::NegativeSemidefiniteNonzero => "nsd",
            DefinitenessClass::PositiveDefinite => "pd",
            DefinitenessClass::NegativeDefinite => "nd",
            DefinitenessClass::Indefinite => "indefinite",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Sylvester inertia of a Hermitian matrix by symmetric congruence, pivoting
/// on nonzero diagonal entries and on 2x2 blocks `[[0, a], [ā, 0]]` when the
/// remaining diagonal vanishes.
pub fn inertia(m: &ExactMatrix) -> Result<Inertia> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let n = m.rows();
    let mut a: Vec<Vec<Gauss>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&k| !a[k][k].is_zero()) {
            let k = active.remove(pos);
            let d = a[k][k].clone();
            match sign(&d.re) {
                1 => out.positive += 1,
                _ => out.negative += 1,
            }
            for &i in &active {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &d;
                for &j in &active {
                    if a[k][j].is_zero() {
                        continue;
                    }
                    let v = &a[i][j] - &f * &a[k][j];
                    a[i][j] = v;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..].iter().find(|&&j| !a[i][j].is_zero()).map(|&j| (i, j))
        });
        let Some((i, j)) = pair else {
            out.zero += active.len();
            break;
        };
        active.retain(|&k| k != i && k != j);
        let aij = a[i][j].clone();
        let aji = a[j][i].clone();
        for &r in &active {
            for &s in &active {
                let mut v = a[r][s].clone();
                if !a[r][i].is_zero() && !a[j][s].is_zero() {
                    v -= &a[r][i] * &a[j][s] / &aji;
                }
                if !a[r][j].is_zero() && !a[i][s].is_zero() {
                    v -= &a[r][j] * &a[i][s] / &aij;
                }
                a[r][s] = v;
            }
        }
        out.positive += 1;
        out.negative += 1;
    }
    Ok(out)
}

pub fn hermitian_classify(m: &ExactMatrix) -> Result<DefinitenessClass> {
    Ok(DefinitenessClass::from_inertia(inertia(m)?))
}

/// Floating-point eigenvalues of a Hermitian matrix (cross-check only).
pub fn float_eigen_oracle(m: &ExactMatrix) -> Vec<f64> {
    if m.rows() == 0 {
        return Vec::new();
    }
    let mut e: Vec<f64> = m.to_c64().symmetric_eigen().eigenvalues.iter().copied().collect();
    e.sort_by(|a, b| a.partial_cmp(b).unwrap());
    e
}

/// Class read off floating eigenvalues, with zero threshold
/// `rel_tol * max(1, ‖M‖_F)`.
pub fn classify_eigenvalues(m: &ExactMatrix, eigs: &[f64], rel_tol: f64) -> DefinitenessClass {
    let norm = m.to_c64().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let tol = rel_tol * norm.max(1.0);
    let positive = eigs.iter().filter(|&&x| x > tol).count();
    let negative = eigs.iter().filter(|&&x| x < -tol).count();
    DefinitenessClass::from_inertia(Inertia { positive, negative, zero: eigs.len() - positive - negative })
}

/// Finitely supported vector over an ordered basis.
pub type SparseVec = BTreeMap<usize, Gauss>;

pub fn sparse_axpy(target: &mut SparseVec, f: &Gauss, v: &SparseVec) {
    for (k, c) in v {
        let entry = target.entry(*k).or_insert_with(g_zero);
        *entry = &*entry + f * c;
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

/// Semi-echelon basis of a subspace: each stored row has its pivot as its
/// smallest index, with coefficient 1.
#[derive(Debug, Clone, Default)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new() -> SparseEchelon {
        SparseEchelon::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        v.retain(|_, c| !c.is_zero());
        let mut cursor = 0;
        loop {
            let next = v
                .range(cursor..)
                .find(|(k, _)| self.rows.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            sparse_axpy(&mut v, &(-c), &self.rows[&k]);
            cursor = k + 1;
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns the new basis row if the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> Option<SparseVec> {
        let mut r = self.reduce(&v);
        let (&p, lead) = r.iter().next()?;
        let inv = g_one() / lead;
        for c in r.values_mut() {
            *c = &*c * &inv;
        }
        self.rows.insert(p, r.clone());
        Some(r)
    }
}

/// Least subspace containing `generators` and closed under the linear maps
/// returned by `step`; also reports the cumulative dimension after each
/// round (round 0 = the generators).
pub fn span_closure_levels<F>(generators: Vec<SparseVec>, mut step: F) -> (SparseEchelon, Vec<usize>)
where
    F: FnMut(&SparseVec) -> Vec<SparseVec>,
{
    let mut ech = SparseEchelon::new();
    let mut frontier: VecDeque<SparseVec> = generators.into_iter().filter_map(|g| ech.insert(g)).collect();
    let mut dims = vec![ech.dim()];
    while !frontier.is_empty() {
        let mut next = VecDeque::new();
        for v in frontier {
            for w in step(&v) {
                if let Some(r) = ech.insert(w) {
                    next.push_back(r);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        dims.push(ech.dim());
        frontier = next;
    }
    (ech, dims)
}

pub fn span_closure<F>(generators: Vec<SparseVec>, step: F) -> SparseEchelon
where
    F: FnMut(&SparseVec) -> Vec<SparseVec>,
{
    span_closure_levels(generators, step).0
}

pub fn dense_to_sparse(v: &[Gauss]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}
