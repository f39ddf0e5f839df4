//! Chevalley basis, structure constants and the Killing form.
//!
//! The canonical ordered basis is `H_1, …, H_ℓ` (simple coroots) followed by
//! `Z_α` for every root in [`RootSystem::roots`] order. Brackets:
//!
//! * `[H_j, Z_β] = β(H_j) Z_β`
//! * `[Z_α, Z_{-α}] = -H_α`
//! * `[Z_α, Z_β] = N_{α,β} Z_{α+β}` when `α+β` is a root.
//!
//! With these conventions `H ↦ -H`, `Z_α ↦ Z_{-α}` is an automorphism.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{sparse_axpy, ExactMatrix, SparseVec};
use crate::rootsys::RootSystem;
use crate::scalar::{g_int, g_zero, Gauss};

/// Finitely supported element over the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    coeffs: SparseVec,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement::default()
    }

    pub fn basis(i: usize) -> AlgebraElement {
        AlgebraElement::from_sparse(BTreeMap::from([(i, g_int(1))]))
    }

    pub fn from_sparse(mut coeffs: SparseVec) -> AlgebraElement {
        coeffs.retain(|_, c| !c.is_zero());
        AlgebraElement { coeffs }
    }

    pub fn sparse(&self) -> &SparseVec {
        &self.coeffs
    }

    pub fn into_sparse(self) -> SparseVec {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Gauss {
        self.coeffs.get(&i).cloned().unwrap_or_else(g_zero)
    }

    /// Coefficients over `H_1, …, H_ℓ`.
    pub fn cartan_part(&self, rank: usize) -> Vec<Gauss> {
        (0..rank).map(|i| self.coeff(i)).collect()
    }

    /// `(root index, coefficient)` pairs of the root-space part.
    pub fn root_part(&self, rank: usize) -> impl Iterator<Item = (usize, &Gauss)> {
        self.coeffs.range(rank..).map(move |(k, c)| (k - rank, c))
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut c = self.coeffs.clone();
        sparse_axpy(&mut c, &g_int(1), &other.coeffs);
        AlgebraElement { coeffs: c }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut c = self.coeffs.clone();
        sparse_axpy(&mut c, &g_int(-1), &other.coeffs);
        AlgebraElement { coeffs: c }
    }

    pub fn scale(&self, s: &Gauss) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement { coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * s)).collect() }
    }

    pub fn axpy(&mut self, s: &Gauss, other: &AlgebraElement) {
        sparse_axpy(&mut self.coeffs, s, &other.coeffs);
    }
}

/// Bracket table of the Chevalley basis attached to a root system.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    rs: Arc<RootSystem>,
    /// `n[a * len + b] = N_{a,b}`, zero when `a + b` is not a root.
    n: Vec<i32>,
    /// `evals[r][j] = β_r(H_j)`.
    evals: Vec<Vec<i32>>,
    /// Coroot of each root over the simple coroots.
    coroots: Vec<Vec<i32>>,
}

#[derive(Serialize)]
struct NTableJson<'a> {
    #[serde(rename = "type")]
    kind: String,
    entries: Vec<(&'a [i32], &'a [i32], i32)>,
}

pub fn build_chevalley(rs: Arc<RootSystem>) -> Result<StructureConstants> {
    build_chevalley_gauged(rs, None)
}

/// As [`build_chevalley`], but with `Z_α` rescaled by random signs
/// `ε_α = ε_{-α}` drawn from `seed`.
pub fn build_chevalley_gauged(rs: Arc<RootSystem>, seed: Option<u64>) -> Result<StructureConstants> {
    let len = rs.len();
    let ne = extraspecial_table(&rs)?;
    let gauge: Vec<i32> = match seed {
        None => vec![1; len],
        Some(s) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let mut g = vec![1; len];
            for &p in rs.positives() {
                let e = if rng.gen::<bool>() { 1 } else { -1 };
                g[p] = e;
                g[rs.neg_index(p)] = e;
            }
            g
        }
    };
    let sgn = |r: usize| if rs.root(r).is_positive() { 1 } else { -1 };
    let mut n = vec![0i32; len * len];
    for a in 0..len {
        for b in 0..len {
            if let Some(c) = rs.sum_index(a, b) {
                let e = ne.get(&rs, a, b)?;
                n[a * len + b] = sgn(a) * sgn(b) * sgn(c) * gauge[a] * gauge[b] * gauge[c] * e;
            }
        }
    }
    let evals = (0..len)
        .map(|r| (0..rs.rank()).map(|j| rs.eval_coroot(rs.root(r), j)).collect())
        .collect();
    let coroots = (0..len).map(|r| rs.coroot_coeffs(rs.root(r))).collect();
    Ok(StructureConstants { rs, n, evals, coroots })
}

/// `N` in the basis `e_α` with `[e_α, e_{-α}] = h_α`, extraspecial pairs
/// positive and `N_{-α,-β} = -N_{α,β}`. Only positive pairs are stored.
struct ETable {
    pos: HashMap<(usize, usize), i32>,
}

impl ETable {
    fn get(&self, rs: &RootSystem, a: usize, b: usize) -> Result<i32> {
        let Some(c) = rs.sum_index(a, b) else { return Ok(0) };
        let pa = rs.root(a).is_positive();
        let pb = rs.root(b).is_positive();
        if pa && pb {
            return self
                .pos
                .get(&(a, b))
                .copied()
                .ok_or_else(|| Error::Internal(format!("missing N for {} {}", rs.root(a), rs.root(b))));
        }
        if !pa && !pb {
            return Ok(-self.get(rs, rs.neg_index(a), rs.neg_index(b))?);
        }
        // a + b + c' = 0 with c' = -c; N_{a,b}/(c',c') = N_{b,c'}/(a,a) = N_{c',a}/(b,b).
        let cn = rs.neg_index(c);
        let (sq_c, sq_a, sq_b) = (rs.norm2(rs.root(cn)), rs.norm2(rs.root(a)), rs.norm2(rs.root(b)));
        let (num, den) = if rs.root(cn).is_positive() == pb {
            (sq_c * self.get(rs, b, cn)?, sq_a)
        } else {
            (sq_c * self.get(rs, cn, a)?, sq_b)
        };
        if num % den != 0 {
            return Err(Error::Internal("non-integral structure constant".into()));
        }
        Ok(num / den)
    }
}

fn extraspecial_table(rs: &RootSystem) -> Result<ETable> {
    let rank = rs.rank();
    let mut order: Vec<usize> = rs.positives().to_vec();
    order.sort_by_key(|&i| rs.root(i).height());
    let mut t = ETable { pos: HashMap::new() };
    let string_p = |a: usize, b: usize| -> Result<i32> { Ok(rs.root_string(rs.root(a), rs.root(b))?.0) };
    for &xi in &order {
        let xr = rs.root(xi);
        if xr.height() < 2 {
            continue;
        }
        let (ai, bi) = (0..rank)
            .find_map(|i| {
                let s = rs.simple_index(i);
                rs.index_of(&xr.sub(rs.root(s))).map(|b| (s, b))
            })
            .ok_or_else(|| Error::Internal(format!("no extraspecial pair for {xr}")))?;
        let n_ex = string_p(ai, bi)? + 1;
        let sq_xi = rs.norm2(xr);
        let mut pairs: Vec<(usize, usize)> = rs
            .positives()
            .iter()
            .filter_map(|&a| rs.index_of(&xr.sub(rs.root(a))).map(|b| (a, b)))
            .filter(|&(_, b)| rs.root(b).is_positive())
            .collect();
        pairs.sort();
        for (a, b) in pairs {
            let v = if (a, b) == (ai, bi) {
                n_ex
            } else if (a, b) == (bi, ai) {
                -n_ex
            } else {
                let na = rs.neg_index(ai);
                let nb = rs.neg_index(bi);
                let mut s = Ratio::<i64>::zero();
                if let Some(d) = rs.sum_index(b, na) {
                    let sq = i64::from(rs.norm2(rs.root(d)));
                    s += Ratio::new(i64::from(t.get(rs, b, na)? * t.get(rs, a, nb)?), sq);
                }
                if let Some(d) = rs.sum_index(a, na) {
                    let sq = i64::from(rs.norm2(rs.root(d)));
                    s += Ratio::new(i64::from(t.get(rs, na, a)? * t.get(rs, b, nb)?), sq);
                }
                let v = s * Ratio::from_integer(i64::from(sq_xi)) / Ratio::from_integer(i64::from(n_ex));
                if !v.is_integer() {
                    return Err(Error::Internal(format!("non-integral N for {}", xr)));
                }
                *v.numer() as i32
            };
            t.pos.insert((a, b), v);
        }
    }
    Ok(t)
}

impl StructureConstants {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.rs)
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.rs.rank() + self.rs.len()
    }

    /// Basis index of `Z_α` for root index `r`.
    pub fn z_index(&self, r: usize) -> usize {
        self.rs.rank() + r
    }

    pub fn z(&self, r: usize) -> AlgebraElement {
        AlgebraElement::basis(self.z_index(r))
    }

    pub fn h(&self, j: usize) -> AlgebraElement {
        AlgebraElement::basis(j)
    }

    /// `N_{α,β}` by root index, zero when `α+β` is not a root.
    pub fn n(&self, a: usize, b: usize) -> i32 {
        self.n[a * self.rs.len() + b]
    }

    pub fn coroot(&self, r: usize) -> &[i32] {
        &self.coroots[r]
    }

    /// `β_r(H_j)`.
    pub fn eval(&self, r: usize, j: usize) -> i32 {
        self.evals[r][j]
    }

    /// `H_α` for root index `r` as an element.
    pub fn coroot_element(&self, r: usize) -> AlgebraElement {
        AlgebraElement::from_sparse(
            self.coroots[r].iter().enumerate().map(|(j, &k)| (j, g_int(i64::from(k)))).collect(),
        )
    }

    /// Bracket of two basis vectors as integer combinations.
    pub fn basis_bracket(&self, x: usize, y: usize) -> Vec<(usize, i32)> {
        let l = self.rs.rank();
        match (x < l, y < l) {
            (true, true) => Vec::new(),
            (true, false) => {
                let v = self.eval(y - l, x);
                if v == 0 { Vec::new() } else { vec![(y, v)] }
            }
            (false, true) => {
                let v = self.eval(x - l, y);
                if v == 0 { Vec::new() } else { vec![(x, -v)] }
            }
            (false, false) => {
                let (a, b) = (x - l, y - l);
                if self.rs.neg_index(a) == b {
                    self.coroots[a].iter().enumerate().filter(|(_, k)| **k != 0).map(|(j, &k)| (j, -k)).collect()
                } else if let Some(c) = self.rs.sum_index(a, b) {
                    vec![(l + c, self.n(a, b))]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// The Chevalley involution `H ↦ -H`, `Z_α ↦ Z_{-α}` on a basis index.
    pub fn involution_index(&self, x: usize) -> (usize, i32) {
        let l = self.rs.rank();
        if x < l { (x, -1) } else { (l + self.rs.neg_index(x - l), 1) }
    }

    pub fn to_json(&self) -> Result<String> {
        let len = self.rs.len();
        let mut entries = Vec::new();
        for a in 0..len {
            for b in 0..len {
                let v = self.n(a, b);
                if v != 0 {
                    entries.push((self.rs.root(a).coeffs(), self.rs.root(b).coeffs(), v));
                }
            }
        }
        Ok(serde_json::to_string(&NTableJson { kind: self.rs.kind().to_string(), entries })?)
    }

    /// Jacobi identity on the basis triple `(x, y, z)`.
    pub fn jacobi_holds(&self, x: usize, y: usize, z: usize) -> bool {
        let (ex, ey, ez) = (AlgebraElement::basis(x), AlgebraElement::basis(y), AlgebraElement::basis(z));
        let t1 = bracket(self, &ex, &bracket(self, &ey, &ez));
        let t2 = bracket(self, &ey, &bracket(self, &ez, &ex));
        let t3 = bracket(self, &ez, &bracket(self, &ex, &ey));
        t1.add(&t2).add(&t3).is_zero()
    }

    pub fn check_jacobi_exhaustive(&self) -> Result<()> {
        let d = self.dim();
        for x in 0..d {
            for y in x + 1..d {
                for z in y + 1..d {
                    if !self.jacobi_holds(x, y, z) {
                        return Err(Error::Internal(format!("Jacobi fails on basis triple {x},{y},{z}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_jacobi_random(&self, samples: usize, seed: u64) -> Result<()> {
        let d = self.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let (x, y, z) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
            if !self.jacobi_holds(x, y, z) {
                return Err(Error::Internal(format!("Jacobi fails on basis triple {x},{y},{z}")));
            }
        }
        Ok(())
    }

    pub fn check_antisymmetry(&self) -> Result<()> {
        let d = self.dim();
        for x in 0..d {
            for y in 0..d {
                let a = self.basis_bracket(x, y);
                let mut b = self.basis_bracket(y, x);
                b.iter_mut().for_each(|t| t.1 = -t.1);
                if a != b {
                    return Err(Error::Internal(format!("antisymmetry fails on {x},{y}")));
                }
            }
        }
        Ok(())
    }

    /// `|N_{α,β}| = p + 1` on every pair with `α+β` a root.
    pub fn check_string_law(&self) -> Result<()> {
        let rs = &self.rs;
        for a in 0..rs.len() {
            for b in 0..rs.len() {
                if rs.sum_index(a, b).is_none() {
                    continue;
                }
                let (p, _) = rs.root_string(rs.root(a), rs.root(b))?;
                if self.n(a, b).abs() != p + 1 {
                    return Err(Error::Internal(format!(
                        "|N| = {} but p+1 = {} for {} {}",
                        self.n(a, b).abs(),
                        p + 1,
                        rs.root(a),
                        rs.root(b)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn check_involution(&self) -> Result<()> {
        let d = self.dim();
        for x in 0..d {
            for y in 0..d {
                let (ox, sx) = self.involution_index(x);
                let (oy, sy) = self.involution_index(y);
                let mut lhs: Vec<(usize, i32)> = self
                    .basis_bracket(x, y)
                    .into_iter()
                    .map(|(k, c)| {
                        let (ok, sk) = self.involution_index(k);
                        (ok, c * sk)
                    })
                    .collect();
                let mut rhs: Vec<(usize, i32)> =
                    self.basis_bracket(ox, oy).into_iter().map(|(k, c)| (k, c * sx * sy)).collect();
                lhs.sort();
                rhs.sort();
                if lhs != rhs {
                    return Err(Error::Internal(format!("involution is not an automorphism on {x},{y}")));
                }
            }
        }
        Ok(())
    }
}

pub fn bracket(sc: &StructureConstants, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let mut out = SparseVec::new();
    for (i, a) in x.sparse() {
        for (j, b) in y.sparse() {
            let terms = sc.basis_bracket(*i, *j);
            if terms.is_empty() {
                continue;
            }
            let ab = a * b;
            for (k, c) in terms {
                let e = out.entry(k).or_insert_with(g_zero);
                *e = &*e + &ab * g_int(i64::from(c));
                if e.is_zero() {
                    out.remove(&k);
                }
            }
        }
    }
    AlgebraElement { coeffs: out }
}

/// Matrix of `ad x` in the canonical basis.
pub fn adjoint_matrix(sc: &StructureConstants, x: &AlgebraElement) -> ExactMatrix {
    let d = sc.dim();
    let mut m = ExactMatrix::zeros(d, d);
    for b in 0..d {
        for (k, c) in bracket(sc, x, &AlgebraElement::basis(b)).into_sparse() {
            m.set(k, b, c);
        }
    }
    m
}

/// `κ(x, y) = tr(ad x ∘ ad y)`, summed column by column over the sparse
/// adjoint action.
pub fn killing(sc: &StructureConstants, x: &AlgebraElement, y: &AlgebraElement) -> Gauss {
    let mut acc = g_zero();
    for b in 0..sc.dim() {
        let eb = AlgebraElement::basis(b);
        let v = bracket(sc, y, &eb);
        if v.is_zero() {
            continue;
        }
        let w = bracket(sc, x, &v);
        acc += w.coeff(b);
    }
    acc
}

/// Killing form through dense adjoint matrices.
pub fn killing_dense(sc: &StructureConstants, x: &AlgebraElement, y: &AlgebraElement) -> Gauss {
    adjoint_matrix(sc, x).mul(&adjoint_matrix(sc, y)).trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, SimpleType};

    fn sc(s: &str) -> StructureConstants {
        build_chevalley(Arc::new(build_root_system(SimpleType::parse(s).unwrap()).unwrap())).unwrap()
    }

    #[test]
    fn a1_killing_is_eight() {
        let c = sc("A1");
        assert_eq!(killing(&c, &c.h(0), &c.h(0)), g_int(8));
        assert_eq!(killing_dense(&c, &c.h(0), &c.h(0)), g_int(8));
    }

    #[test]
    fn simple_brackets_and_involution() {
        for t in ["A3", "B3", "C3", "G2", "F4"] {
            let c = sc(t);
            let rs = c.root_system();
            for j in 0..rs.rank() {
                let s = rs.simple_index(j);
                assert_eq!(bracket(&c, &c.h(j), &c.z(s)), c.z(s).scale(&g_int(2)));
                let ns = rs.neg_index(s);
                assert_eq!(bracket(&c, &c.z(s), &c.z(ns)), c.h(j).scale(&g_int(-1)));
            }
        }
    }

    #[test]
    fn a2_bracket_has_unit_constant() {
        let c = sc("A2");
        let rs = c.root_system();
        let (a, b) = (rs.simple_index(0), rs.simple_index(1));
        let s = rs.sum_index(a, b).unwrap();
        assert_eq!(c.n(a, b).abs(), 1);
        assert_eq!(bracket(&c, &c.z(a), &c.z(b)), c.z(s).scale(&g_int(i64::from(c.n(a, b)))));
        assert!(bracket(&c, &c.z(a), &c.z(a)).is_zero());
    }

    #[test]
    fn invariants_small_ranks() {
        for t in ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"] {
            let c = sc(t);
            c.check_antisymmetry().unwrap();
            c.check_string_law().unwrap();
            c.check_involution().unwrap();
        }
        for t in ["A2", "B2", "G2", "A3", "B3", "C3"] {
            sc(t).check_jacobi_exhaustive().unwrap();
        }
    }

    #[test]
    fn gauge_preserves_invariants() {
        let rs = Arc::new(build_root_system(SimpleType::parse("G2").unwrap()).unwrap());
        let c = build_chevalley_gauged(rs, Some(7)).unwrap();
        c.check_antisymmetry().unwrap();
        c.check_string_law().unwrap();
        c.check_involution().unwrap();
        c.check_jacobi_exhaustive().unwrap();
    }

    #[test]
    fn adjoint_traces_and_gradings() {
        let c = sc("B2");
        for r in 0..c.root_system().len() {
            assert!(adjoint_matrix(&c, &c.z(r)).trace().is_zero());
        }
        assert!(adjoint_matrix(&c, &AlgebraElement::zero()).is_zero());
        let a = c.root_system().simple_index(0);
        let b = c.root_system().simple_index(1);
        assert!(killing(&c, &c.z(a), &c.z(b)).is_zero());
    }

    #[test]
    fn json_dump_parses() {
        let v: serde_json::Value = serde_json::from_str(&sc("A2").to_json().unwrap()).unwrap();
        assert_eq!(v["type"], "A2");
        assert_eq!(v["entries"].as_array().unwrap().len(), 12);
    }
}
