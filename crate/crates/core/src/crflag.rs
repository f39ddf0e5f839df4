//! CR geometry of minimal orbits: parabolic data, Levi forms of the
//! characteristic real roots, the kernel set `K_Φ`, the root-chain condition,
//! the bracket-module span condition and finite type.
//!
//! Levi forms are built from the covectors `ξ_γ = κ(Z_γ, ·)`, which detect
//! the `g_{-γ}` component and vanish on `q + q̄` exactly when
//! `γ ∈ Qⁿ ∩ Q̄ⁿ`.

use std::collections::{HashMap, VecDeque};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::chevalley::{bracket, killing, AlgebraElement};
use crate::error::{Error, Result};
use crate::exactla::{float_eigen_oracle, hermitian_classify, span_closure_levels, DefinitenessClass, ExactMatrix};
use crate::realform::{RealForm, RootClass};
use crate::rootsys::{Root, RootSystem};
use crate::scalar::{g_i, g_int, Gauss};

/// Parabolic sets attached to `Φ`; membership flags are indexed by root index.
#[derive(Debug, Clone)]
pub struct ParabolicData {
    /// 1-based simple root indices.
    pub phi: Vec<usize>,
    pub q: Vec<bool>,
    pub qbar: Vec<bool>,
    pub qn: Vec<bool>,
}

impl ParabolicData {
    pub fn in_q(&self, r: usize) -> bool {
        self.q[r]
    }

    pub fn in_qbar(&self, r: usize) -> bool {
        self.qbar[r]
    }

    pub fn in_qn(&self, r: usize) -> bool {
        self.qn[r]
    }

    /// Reductive part: support disjoint from `Φ`.
    pub fn in_qr(&self, r: usize) -> bool {
        self.q[r] && !self.qn[r]
    }
}

fn phi0(rs: &RootSystem, phi: &[usize]) -> Result<Vec<usize>> {
    phi.iter()
        .map(|&j| {
            if j == 0 || j > rs.rank() {
                Err(Error::BadPhi { index: j, rank: rs.rank() })
            } else {
                Ok(j - 1)
            }
        })
        .collect()
}

/// `Q = R⁺ ∪ {α < 0 : supp(α) ∩ Φ = ∅}`, `Qⁿ = {α > 0 : supp(α) ∩ Φ ≠ ∅}`,
/// `Q̄ = c(Q)`.
pub fn parabolic(form: &RealForm, phi: &[usize]) -> Result<ParabolicData> {
    let rs = &form.rs;
    let p0 = phi0(rs, phi)?;
    let len = rs.len();
    let q: Vec<bool> = rs.roots().iter().map(|r| r.is_positive() || !r.support_meets(&p0)).collect();
    let qn: Vec<bool> = rs.roots().iter().map(|r| r.is_positive() && r.support_meets(&p0)).collect();
    let qbar: Vec<bool> = (0..len).map(|r| q[form.conj.bar(r)]).collect();
    let mut phi = phi.to_vec();
    phi.sort_unstable();
    phi.dedup();
    Ok(ParabolicData { phi, q, qbar, qn })
}

/// Positive real roots in `Qⁿ` (hence in `Q̄ⁿ`).
pub fn characteristic_real_roots(form: &RealForm, pd: &ParabolicData) -> Vec<usize> {
    form.rs
        .positives()
        .iter()
        .copied()
        .filter(|&r| pd.in_qn(r) && form.conj.class(r) == RootClass::Real)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeviConvention {
    /// Rows are roots `α ∈ Q̄ \ Q` with vectors `σ(Z_α) ∈ q`; entry `(α, β)`
    /// is nonzero only when `ᾱ + β = -γ`.
    Standard,
    /// Rows are roots `a ∈ Q \ Q̄` with vectors `Z_a`; entry `(a, b)` is
    /// nonzero only when `a + b̄ = -γ`.
    Mirrored,
}

/// Structural category of a real Levi form by its entry pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeviCategory {
    /// Semidefinite (hence diagonal), zero included.
    H0,
    /// Indefinite and diagonal.
    H1,
    /// No nonzero diagonal entry.
    H2,
    /// Indefinite with entries on and off the diagonal.
    H3,
}

#[derive(Debug, Clone)]
pub struct LeviMatrix {
    pub gamma: usize,
    pub convention: LeviConvention,
    pub index: Vec<usize>,
    pub entries: ExactMatrix,
    /// Whether the raw form `i ξ_γ([Z, σW])` had to be multiplied by `-i`
    /// to become Hermitian (the case `t_γ = -1`).
    pub rotated: bool,
}

impl LeviMatrix {
    pub fn rank(&self) -> usize {
        self.entries.rank()
    }

    /// Index roots with a nonzero diagonal entry.
    pub fn diagonal_contributors(&self) -> Vec<usize> {
        (0..self.index.len()).filter(|&i| !self.entries.get(i, i).is_zero()).map(|i| self.index[i]).collect()
    }

    pub fn category(&self, class: DefinitenessClass) -> LeviCategory {
        let diag = !self.entries.diagonal_is_zero();
        let off = self.entries.has_offdiagonal();
        if class.is_semidefinite() {
            LeviCategory::H0
        } else if !diag {
            LeviCategory::H2
        } else if !off {
            LeviCategory::H1
        } else {
            LeviCategory::H3
        }
    }
}

fn kappa_gamma(form: &RealForm, gamma: usize) -> Gauss {
    killing(&form.sc, &form.sc.z(gamma), &form.sc.z(form.rs.neg_index(gamma)))
}

/// Matrix of the Levi form `L_γ(Z, W̄) = i ξ_γ([Z, σW])` on `q / (q ∩ q̄)`.
pub fn levi_matrix(form: &RealForm, pd: &ParabolicData, gamma: usize, convention: LeviConvention) -> Result<LeviMatrix> {
    let rs = &form.rs;
    let conj = &form.conj;
    if !(rs.root(gamma).is_positive() && pd.in_qn(gamma) && conj.class(gamma) == RootClass::Real) {
        return Err(Error::NotCharacteristic(rs.root(gamma).to_string()));
    }
    let index: Vec<usize> = (0..rs.len())
        .filter(|&r| match convention {
            LeviConvention::Standard => pd.in_qbar(r) && !pd.in_q(r),
            LeviConvention::Mirrored => pd.in_q(r) && !pd.in_qbar(r),
        })
        .collect();
    let pos: HashMap<usize, usize> = index.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let k = kappa_gamma(form, gamma);
    let minus_gamma = rs.root(gamma).neg();
    let n = index.len();
    let mut m = ExactMatrix::zeros(n, n);
    for (i, &a) in index.iter().enumerate() {
        let (partner, value) = match convention {
            LeviConvention::Standard => {
                // ᾱ + β = -γ, entry i t_α N_{ᾱ,β} κ(Z_γ, Z_{-γ}).
                let ca = conj.bar(a);
                let Some(b) = rs.index_of(&minus_gamma.sub(rs.root(ca))) else { continue };
                (b, i64::from(conj.sign(a)) * i64::from(form.sc.n(ca, b)))
            }
            LeviConvention::Mirrored => {
                // a + b̄ = -γ, entry i t_b N_{a,b̄} κ(Z_γ, Z_{-γ}).
                let Some(cb) = rs.index_of(&minus_gamma.sub(rs.root(a))) else { continue };
                let b = conj.bar(cb);
                (b, i64::from(conj.sign(b)) * i64::from(form.sc.n(a, cb)))
            }
        };
        if let Some(&j) = pos.get(&partner) {
            m.set(i, j, g_i() * g_int(value) * &k);
        }
    }
    let (entries, rotated) = if m.is_hermitian() {
        (m, false)
    } else {
        let r = m.scale(&-g_i());
        if !r.is_hermitian() {
            return Err(Error::Internal(format!("Levi form of {} is neither Hermitian nor anti-Hermitian", rs.root(gamma))));
        }
        (r, true)
    };
    Ok(LeviMatrix { gamma, convention, index, entries, rotated })
}

pub fn classify_levi(m: &LeviMatrix) -> Result<DefinitenessClass> {
    hermitian_classify(&m.entries)
}

/// `K_Φ`: roots `α ∈ Q` except those with `γ = -(α + ᾱ)` a characteristic
/// real root whose Levi form is semidefinite. Such `α` lie in `Q \ Q̄`; every
/// root of `Q ∩ Q̄` and every imaginary root is in `K_Φ`.
pub fn k_phi(form: &RealForm, pd: &ParabolicData, classes: &HashMap<usize, DefinitenessClass>) -> Vec<bool> {
    let rs = &form.rs;
    (0..rs.len())
        .map(|a| {
            if !pd.in_q(a) {
                return false;
            }
            let s = rs.root(a).add(rs.root(form.conj.bar(a)));
            let Some(g) = rs.index_of(&s.neg()) else { return true };
            match classes.get(&g) {
                Some(c) => !c.is_semidefinite(),
                None => true,
            }
        })
        .collect()
}

/// Closure of `Q ∪ Q̄` under root addition equals `R`.
pub fn finite_type(form: &RealForm, pd: &ParabolicData) -> bool {
    let rs = &form.rs;
    let mut inside: Vec<bool> = (0..rs.len()).map(|r| pd.in_q(r) || pd.in_qbar(r)).collect();
    loop {
        let members: Vec<usize> = (0..rs.len()).filter(|&r| inside[r]).collect();
        let mut grew = false;
        for &a in &members {
            for &b in &members {
                if let Some(s) = rs.sum_index(a, b) {
                    if !inside[s] {
                        inside[s] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return inside.iter().all(|&x| x);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reachability {
    pub gamma: Root,
    pub reachable: bool,
    /// `(α_0, α_1, …, α_r)` with `α_0 ∈ Q̄`, `α_j ∈ K ∪ K̄`.
    pub witness: Option<Vec<Root>>,
    pub certificate: Option<String>,
    /// Same search with target `+γ` (diagnostic only).
    pub plus_gamma_reachable: bool,
}

/// Breadth-first search over roots: start at `Q̄`, step by `κ ∈ K ∪ K̄` while
/// staying in `R`, target `-γ`.
pub fn hlc_reachability(form: &RealForm, pd: &ParabolicData, k: &[bool], gamma: usize) -> Reachability {
    let rs = &form.rs;
    let len = rs.len();
    let steps: Vec<usize> = (0..len).filter(|&r| k[r] || k[form.conj.bar(r)]).collect();
    let mut parent: Vec<Option<Option<(usize, usize)>>> = vec![None; len];
    let mut queue = VecDeque::new();
    for r in 0..len {
        if pd.in_qbar(r) {
            parent[r] = Some(None);
            queue.push_back(r);
        }
    }
    while let Some(r) = queue.pop_front() {
        for &s in &steps {
            if let Some(t) = rs.sum_index(r, s) {
                if parent[t].is_none() {
                    parent[t] = Some(Some((r, s)));
                    queue.push_back(t);
                }
            }
        }
    }
    let target = rs.neg_index(gamma);
    let g = rs.root(gamma).clone();
    let plus_gamma_reachable = parent[gamma].is_some();
    if parent[target].is_some() {
        let mut chain = Vec::new();
        let mut cur = target;
        while let Some(Some((prev, step))) = parent[cur] {
            chain.push(rs.root(step).clone());
            cur = prev;
        }
        chain.push(rs.root(cur).clone());
        chain.reverse();
        return Reachability { gamma: g, reachable: true, witness: Some(chain), certificate: None, plus_gamma_reachable };
    }
    let reach: Vec<usize> = (0..len).filter(|&r| parent[r].is_some()).collect();
    let tgt = rs.root(target);
    let certificate = (0..rs.rank())
        .find_map(|j| {
            let min = reach.iter().map(|&r| rs.root(r).0[j]).min()?;
            (tgt.0[j] < min).then(|| {
                format!(
                    "coefficient of α{} in -γ is {} but every reachable root has coefficient ≥ {}",
                    j + 1,
                    tgt.0[j],
                    min
                )
            })
        })
        .unwrap_or_else(|| format!("-γ = {tgt} is not among the {} reachable roots", reach.len()));
    Reachability { gamma: g, reachable: false, witness: None, certificate: Some(certificate), plus_gamma_reachable }
}

/// Root-level shadow of the span condition: closure of `Q ∪ Q̄` under adding
/// elements of `K ∪ K̄` equals `R`.
pub fn root_span(form: &RealForm, pd: &ParabolicData, k: &[bool]) -> bool {
    let rs = &form.rs;
    let len = rs.len();
    let steps: Vec<usize> = (0..len).filter(|&r| k[r] || k[form.conj.bar(r)]).collect();
    let mut inside: Vec<bool> = (0..len).map(|r| pd.in_q(r) || pd.in_qbar(r)).collect();
    let mut queue: VecDeque<usize> = (0..len).filter(|&r| inside[r]).collect();
    while let Some(r) = queue.pop_front() {
        for &s in &steps {
            if let Some(t) = rs.sum_index(r, s) {
                if !inside[t] {
                    inside[t] = true;
                    queue.push_back(t);
                }
            }
        }
    }
    inside.iter().all(|&x| x)
}

/// Bracket-module span in the real form: `T⁽⁰⁾ = (q + q̄) ∩ g`, `𝔸 = (k_q + k̄_q) ∩ g`,
/// `T⁽ʰ⁾ = [𝔸, T⁽ʰ⁻¹⁾]`; returns whether `Σ T⁽ʰ⁾ = g` and the cumulative
/// real dimensions per round.
pub fn t_module_span(form: &RealForm, pd: &ParabolicData, k: &[bool]) -> (bool, Vec<usize>) {
    let rs = &form.rs;
    let l = rs.rank();
    let realify_all = |roots: &mut dyn Iterator<Item = usize>| -> Vec<AlgebraElement> {
        let mut out = Vec::new();
        for j in 0..l {
            out.extend(form.realify(&form.sc.h(j)));
        }
        for r in roots {
            out.extend(form.realify(&form.sc.z(r)));
        }
        out.retain(|x| !x.is_zero());
        out
    };
    let t0 = realify_all(&mut (0..rs.len()).filter(|&r| pd.in_q(r)));
    let a = realify_all(&mut (0..rs.len()).filter(|&r| k[r]));
    let (ech, dims) = span_closure_levels(t0.into_iter().map(AlgebraElement::into_sparse).collect(), |v| {
        let x = AlgebraElement::from_sparse(v.clone());
        a.iter().map(|g| bracket(&form.sc, g, &x).into_sparse()).filter(|w| !w.is_empty()).collect()
    });
    (ech.dim() == form.dim(), dims)
}

/// Number of triples `(α, β, γ)` with `α+ᾱ, β+β̄, γ+γ̄ ∈ R`, `α+ᾱ ≠ β+β̄` and
/// `α+β̄ = γ+γ̄`.
pub fn verify_no_triples(form: &RealForm) -> usize {
    let rs = &form.rs;
    let d: Vec<(usize, Root)> = (0..rs.len())
        .filter_map(|a| {
            let s = rs.root(a).add(rs.root(form.conj.bar(a)));
            rs.index_of(&s).map(|_| (a, s))
        })
        .collect();
    let mut multiplicity: HashMap<&Root, usize> = HashMap::new();
    for (_, s) in &d {
        *multiplicity.entry(s).or_default() += 1;
    }
    let mut count = 0;
    for (a, sa) in &d {
        for (b, sb) in &d {
            if sa == sb {
                continue;
            }
            let v = rs.root(*a).add(rs.root(form.conj.bar(*b)));
            count += multiplicity.get(&v).copied().unwrap_or(0);
        }
    }
    count
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviRecord {
    pub gamma: Root,
    pub class: DefinitenessClass,
    pub category: LeviCategory,
    pub rank: usize,
    pub size: usize,
    pub diagonal_contributors: Vec<Root>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcavityVerdict {
    pub form: String,
    pub label: String,
    pub phi: Vec<usize>,
    pub finite_type: bool,
    pub levi: Vec<LeviRecord>,
    pub k_phi: Vec<Root>,
    /// Indices of `k_phi` in the root order of the system.
    pub k_phi_index: Vec<usize>,
    pub mot_satisfied: bool,
    pub mot: Vec<Reachability>,
    pub span_satisfied: bool,
    pub span_dims: Vec<usize>,
    pub verdict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Which conditions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Check {
    Mot,
    Span,
    All,
}

/// Levi classes of all characteristic real roots, keyed by root index.
pub fn levi_classes(form: &RealForm, pd: &ParabolicData) -> Result<Vec<(LeviMatrix, DefinitenessClass)>> {
    characteristic_real_roots(form, pd)
        .into_iter()
        .map(|g| {
            let m = levi_matrix(form, pd, g, LeviConvention::Standard)?;
            let c = classify_levi(&m)?;
            Ok((m, c))
        })
        .collect()
}

/// Full pipeline for one `(form, Φ)`. With [`Check::Mot`] the span is not
/// computed and `span_satisfied` mirrors `mot_satisfied`.
pub fn concavity_verdict(form: &RealForm, phi: &[usize], check: Check) -> Result<ConcavityVerdict> {
    let rs = &form.rs;
    let pd = parabolic(form, phi)?;
    let ft = finite_type(form, &pd);
    let levis = levi_classes(form, &pd)?;
    let classes: HashMap<usize, DefinitenessClass> = levis.iter().map(|(m, c)| (m.gamma, *c)).collect();
    let k = k_phi(form, &pd, &classes);
    let mut mot = Vec::new();
    for (m, c) in &levis {
        if c.is_semidefinite() {
            mot.push(hlc_reachability(form, &pd, &k, m.gamma));
        }
    }
    let mot_satisfied = mot.iter().all(|r| r.reachable);
    let (span_satisfied, span_dims) = match check {
        Check::Mot => (mot_satisfied, Vec::new()),
        Check::Span | Check::All => t_module_span(form, &pd, &k),
    };
    if check == Check::All && span_satisfied != root_span(form, &pd, &k) {
        return Err(Error::Internal(format!("span and root closure disagree for {} Φ={:?}", form.diagram.name, pd.phi)));
    }
    let levi = levis
        .iter()
        .map(|(m, c)| LeviRecord {
            gamma: rs.root(m.gamma).clone(),
            class: *c,
            category: m.category(*c),
            rank: m.rank(),
            size: m.index.len(),
            diagonal_contributors: m.diagonal_contributors().into_iter().map(|r| rs.root(r).clone()).collect(),
        })
        .collect();
    let note = pd.phi.is_empty().then(|| "Φ = ∅: the orbit is a point".to_string());
    Ok(ConcavityVerdict {
        form: form.diagram.name.clone(),
        label: form.diagram.label.clone(),
        phi: pd.phi.clone(),
        finite_type: ft,
        levi,
        k_phi: (0..rs.len()).filter(|&r| k[r]).map(|r| rs.root(r).clone()).collect(),
        k_phi_index: (0..rs.len()).filter(|&r| k[r]).collect(),
        mot_satisfied,
        mot,
        span_satisfied,
        span_dims,
        verdict: ft && span_satisfied,
        note,
    })
}

/// Exact class against the floating eigenvalue oracle.
pub fn float_agrees(m: &LeviMatrix, class: DefinitenessClass) -> bool {
    let e = float_eigen_oracle(&m.entries);
    crate::exactla::classify_eigenvalues(&m.entries, &e, 1e-9) == class
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::{build_real_form, parse_form};

    fn form(name: &str) -> RealForm {
        build_real_form(&parse_form(name).unwrap(), None).unwrap()
    }

    fn idx(f: &RealForm, v: &[i32]) -> usize {
        f.rs.index_of(&Root(v.to_vec())).unwrap()
    }

    #[test]
    fn parabolic_sets() {
        let f = form("sl(3,R)");
        let pd = parabolic(&f, &[]).unwrap();
        assert!(pd.q.iter().all(|&x| x) && pd.qn.iter().all(|&x| !x));
        let pd = parabolic(&f, &[1]).unwrap();
        let q: Vec<&Root> = (0..f.rs.len()).filter(|&r| pd.in_q(r)).map(|r| f.rs.root(r)).collect();
        assert_eq!(q.len(), 4);
        assert!(q.contains(&&Root(vec![0, -1])));
        assert!(parabolic(&f, &[3]).is_err());
        let f = form("FII");
        let pd = parabolic(&f, &[3]).unwrap();
        assert!(pd.in_qn(idx(&f, &[1, 2, 3, 2])));
    }

    #[test]
    fn q_is_parabolic_and_qn_an_ideal() {
        let f = form("su(2,4)");
        for phi in [vec![1], vec![2, 4], vec![1, 3, 5]] {
            let pd = parabolic(&f, &phi).unwrap();
            for a in 0..f.rs.len() {
                for b in 0..f.rs.len() {
                    if let Some(s) = f.rs.sum_index(a, b) {
                        if pd.in_q(a) && pd.in_q(b) {
                            assert!(pd.in_q(s));
                        }
                        if pd.in_qn(a) && pd.in_q(b) {
                            assert!(pd.in_qn(s));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fii_alpha3() {
        let f = form("FII");
        let pd = parabolic(&f, &[3]).unwrap();
        let g = idx(&f, &[1, 2, 3, 2]);
        assert_eq!(characteristic_real_roots(&f, &pd), vec![g]);
        let m = levi_matrix(&f, &pd, g, LeviConvention::Standard).unwrap();
        assert_eq!(m.rank(), 1);
        assert!(classify_levi(&m).unwrap().is_semidefinite());
        let v = concavity_verdict(&f, &[3], Check::All).unwrap();
        assert!(!v.mot_satisfied && !v.span_satisfied && !v.verdict);
        assert!(v.mot[0].certificate.as_ref().unwrap().contains("α4 in -γ is -2"));
        let v = concavity_verdict(&f, &[1, 2], Check::All).unwrap();
        assert!(v.verdict);
    }

    #[test]
    fn eiii_alpha3() {
        let f = form("EIII");
        let pd = parabolic(&f, &[3]).unwrap();
        let g = idx(&f, &[1, 2, 2, 3, 2, 1]);
        let other = idx(&f, &[1, 0, 1, 1, 1, 1]);
        assert_eq!(characteristic_real_roots(&f, &pd), vec![other, g]);
        let m = levi_matrix(&f, &pd, g, LeviConvention::Standard).unwrap();
        assert_eq!(m.diagonal_contributors(), vec![idx(&f, &[-1, -1, -2, -2, -1, 0])]);
        assert_eq!(classify_levi(&m).unwrap(), DefinitenessClass::PositiveSemidefiniteNonzero);
        let m = levi_matrix(&f, &pd, other, LeviConvention::Standard).unwrap();
        assert_eq!(classify_levi(&m).unwrap(), DefinitenessClass::Indefinite);
        let v = concavity_verdict(&f, &[3], Check::All).unwrap();
        assert!(v.mot_satisfied && v.verdict);
    }

    #[test]
    fn conventions_agree() {
        for name in ["su(2,4)", "sp(2,3)", "FII", "EIII"] {
            let f = form(name);
            let n = f.rs.rank();
            for mask in 1u32..(1 << n) {
                let phi: Vec<usize> = (1..=n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
                let pd = parabolic(&f, &phi).unwrap();
                for g in characteristic_real_roots(&f, &pd) {
                    let a = classify_levi(&levi_matrix(&f, &pd, g, LeviConvention::Standard).unwrap()).unwrap();
                    let b = classify_levi(&levi_matrix(&f, &pd, g, LeviConvention::Mirrored).unwrap()).unwrap();
                    assert_eq!(a, b, "{name} {phi:?}");
                }
            }
        }
    }

    #[test]
    fn finite_type_examples() {
        let f = form("su(2,3)");
        assert!(finite_type(&f, &parabolic(&f, &[]).unwrap()));
        assert!(!finite_type(&f, &parabolic(&f, &[1, 4]).unwrap()));
        assert!(finite_type(&f, &parabolic(&f, &[1]).unwrap()));
    }

    #[test]
    fn no_triples_small() {
        for name in ["su(2,3)", "compact-A2", "sp(4,R)", "EIII", "FII"] {
            assert_eq!(verify_no_triples(&form(name)), 0, "{name}");
        }
    }

    #[test]
    fn compact_is_always_concave() {
        let f = form("compact-G2");
        for phi in [vec![1], vec![2], vec![1, 2]] {
            let v = concavity_verdict(&f, &phi, Check::All).unwrap();
            assert!(v.verdict && v.levi.is_empty());
        }
    }
}
