//! Abstract root systems of the simple types and their doubles.
//!
//! Roots are integer coefficient vectors over the simple roots, numbered as
//! in Bourbaki's tables. The invariant inner product is the symmetrized
//! Cartan matrix normalized so that short roots have squared length 2.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<SimpleType> {
        let legal = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            // D3 is admitted so that so(3,3) can be written in its own family.
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if legal {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::IllegalType { family: family.letter(), rank })
        }
    }

    /// Parses names such as `A2`, `e6`, `G2`.
    pub fn parse(s: &str) -> Result<SimpleType> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::UnknownForm(s.to_string()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnknownForm(s.to_string()))?;
        SimpleType::new(fam, rank)
    }

    pub fn root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1),
            Family::B | Family::C => 2 * l * l,
            Family::D => 2 * l * (l - 1),
            Family::E => match l {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Cartan matrix with `m[i][j] = 2(α_i|α_j)/(α_j|α_j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let l = self.rank;
        let mut m = vec![vec![0i32; l]; l];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            m[i][j] = -1;
            m[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..l - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..l - 2 {
                    link(i, i + 1);
                }
                link(l - 3, l - 1);
            }
            Family::E => {
                // Bourbaki: 1-3-4-5-6(-7-8), with 2 attached to 4.
                link(0, 2);
                link(1, 3);
                for i in 2..l - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => m[l - 2][l - 1] = -2,
            Family::C => m[l - 1][l - 2] = -2,
            Family::F => m[1][2] = -2,
            Family::G => m[1][0] = -3,
            _ => {}
        }
        m
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A simple type, or the disjoint union of two copies of one (the root
/// system of a complex simple Lie algebra viewed as a real one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SystemType {
    Simple(SimpleType),
    Doubled(SimpleType),
}

impl SystemType {
    pub fn base(&self) -> SimpleType {
        match *self {
            SystemType::Simple(t) | SystemType::Doubled(t) => t,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            SystemType::Simple(t) => t.rank,
            SystemType::Doubled(t) => 2 * t.rank,
        }
    }

    pub fn root_count(&self) -> usize {
        match self {
            SystemType::Simple(t) => t.root_count(),
            SystemType::Doubled(t) => 2 * t.root_count(),
        }
    }
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemType::Simple(t) => write!(f, "{t}"),
            SystemType::Doubled(t) => write!(f, "{t}x{t}"),
        }
    }
}

/// Integer coordinates of a root over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn zero(rank: usize) -> Root {
        Root(vec![0; rank])
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&k| k >= 0) && self.0.iter().any(|&k| k > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|k| -k).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i32) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }

    /// Indices (0-based) of simple roots with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_meets(&self, set: &[usize]) -> bool {
        set.iter().any(|&i| self.0[i] != 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &k) in self.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let sign = if k < 0 { "-" } else if first { "" } else { "+" };
            let mag = k.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Integer linear map on the root lattice; `m[i][j]` is the coefficient of
/// `α_i` in the image of `α_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeMap {
    pub m: Vec<Vec<i32>>,
}

impl LatticeMap {
    pub fn identity(rank: usize) -> LatticeMap {
        let mut m = vec![vec![0; rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        LatticeMap { m }
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn apply(&self, v: &Root) -> Root {
        let n = self.rank();
        let mut out = vec![0; n];
        for (j, &vj) in v.0.iter().enumerate() {
            if vj == 0 {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                *o += self.m[i][j] * vj;
            }
        }
        Root(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LatticeMap) -> LatticeMap {
        let n = self.rank();
        let mut m = vec![vec![0; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..n).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        LatticeMap { m }
    }

    pub fn is_identity(&self) -> bool {
        *self == LatticeMap::identity(self.rank())
    }

    /// Image of the `j`-th simple root.
    pub fn column(&self, j: usize) -> Root {
        Root(self.m.iter().map(|row| row[j]).collect())
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: SystemType,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    sym: Vec<Vec<i32>>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    neg: Vec<usize>,
    positives: Vec<usize>,
    component: Vec<usize>,
}

pub fn build_root_system(t: SimpleType) -> Result<RootSystem> {
    let t = SimpleType::new(t.family, t.rank)?;
    Ok(RootSystem::from_cartan(SystemType::Simple(t), t.cartan_matrix()))
}

pub fn build_doubled_root_system(t: SimpleType) -> Result<RootSystem> {
    let t = SimpleType::new(t.family, t.rank)?;
    let base = t.cartan_matrix();
    let l = t.rank;
    let mut m = vec![vec![0; 2 * l]; 2 * l];
    for i in 0..l {
        for j in 0..l {
            m[i][j] = base[i][j];
            m[i + l][j + l] = base[i][j];
        }
    }
    Ok(RootSystem::from_cartan(SystemType::Doubled(t), m))
}

pub fn build_system(kind: SystemType) -> Result<RootSystem> {
    match kind {
        SystemType::Simple(t) => build_root_system(t),
        SystemType::Doubled(t) => build_doubled_root_system(t),
    }
}

impl RootSystem {
    fn from_cartan(kind: SystemType, cartan: Vec<Vec<i32>>) -> RootSystem {
        let rank = cartan.len();
        let (sq, component) = squared_lengths(&cartan);
        let sym: Vec<Vec<i32>> = (0..rank)
            .map(|i| (0..rank).map(|j| cartan[i][j] * sq[j] / 2).collect())
            .collect();

        // Closure of the simple roots under simple reflections.
        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..rank {
            let r = Root::simple(rank, i);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..rank {
                let c: i32 = (0..rank).map(|j| r.0[j] * cartan[j][i]).sum();
                if c == 0 {
                    continue;
                }
                let mut img = r.clone();
                img.0[i] -= c;
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let index: HashMap<Root, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let neg = roots.iter().map(|r| index[&r.neg()]).collect();
        let positives = (0..roots.len()).filter(|&i| roots[i].is_positive()).collect();
        RootSystem { kind, rank, cartan, sym, roots, index, neg, positives, component }
    }

    pub fn kind(&self) -> SystemType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn positives(&self) -> &[usize] {
        &self.positives
    }

    pub fn index_of(&self, v: &Root) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &[i32]) -> bool {
        v.len() == self.rank && self.index.contains_key(&Root(v.to_vec()))
    }

    pub fn neg_index(&self, i: usize) -> usize {
        self.neg[i]
    }

    pub fn simple_index(&self, j: usize) -> usize {
        self.index[&Root::simple(self.rank, j)]
    }

    /// Irreducible component containing simple root `j`.
    pub fn component_of(&self, j: usize) -> usize {
        self.component[j]
    }

    /// Index of `a + b` when it is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.index.get(&self.roots[a].add(&self.roots[b])).copied()
    }

    /// Invariant inner product `(x|y)`.
    pub fn inner(&self, x: &Root, y: &Root) -> i32 {
        let mut s = 0;
        for i in 0..self.rank {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += x.0[i] * self.sym[i][j] * y.0[j];
            }
        }
        s
    }

    pub fn norm2(&self, x: &Root) -> i32 {
        self.inner(x, x)
    }

    /// `⟨α|β⟩ = 2(α|β)/(α|α)`.
    pub fn pairing(&self, a: &Root, b: &Root) -> i32 {
        let n = self.norm2(a);
        let two_ip = 2 * self.inner(a, b);
        debug_assert!(two_ip % n == 0, "non-integral pairing");
        two_ip / n
    }

    /// `β(H_j)` for the simple coroot `H_j`, i.e. `⟨α_j|β⟩`.
    pub fn eval_coroot(&self, beta: &Root, j: usize) -> i32 {
        (0..self.rank).map(|i| beta.0[i] * self.cartan[i][j]).sum()
    }

    /// Coefficients of the coroot of `α` over the simple coroots.
    pub fn coroot_coeffs(&self, a: &Root) -> Vec<i32> {
        let n = self.norm2(a);
        (0..self.rank)
            .map(|i| {
                let num = a.0[i] * self.sym[i][i];
                debug_assert!(num % n == 0);
                num / n
            })
            .collect()
    }

    /// `(p, q)` with `p = max{k : β - kα ∈ R}` and `q = max{k : β + kα ∈ R}`.
    pub fn root_string(&self, a: &Root, b: &Root) -> Result<(i32, i32)> {
        if !self.index.contains_key(a) {
            return Err(Error::NotARoot(a.0.clone()));
        }
        if !self.index.contains_key(b) {
            return Err(Error::NotARoot(b.0.clone()));
        }
        if *a == *b || *a == b.neg() {
            return Err(Error::Proportional(a.0.clone(), b.0.clone()));
        }
        let mut p = 0;
        while self.index.contains_key(&b.sub(&a.scale(p + 1))) {
            p += 1;
        }
        let mut q = 0;
        while self.index.contains_key(&b.add(&a.scale(q + 1))) {
            q += 1;
        }
        Ok((p, q))
    }

    /// Simple reflection `s_i` as a lattice map.
    pub fn reflection(&self, i: usize) -> LatticeMap {
        let mut m = LatticeMap::identity(self.rank);
        for j in 0..self.rank {
            m.m[i][j] -= self.cartan[j][i];
        }
        m
    }

    /// Longest element of the parabolic subgroup generated by `{s_i : i ∈ subset}`.
    pub fn weyl_longest_element(&self, subset: &[usize]) -> LatticeMap {
        let mut w = LatticeMap::identity(self.rank);
        loop {
            let next = subset.iter().copied().find(|&i| w.column(i).is_positive());
            match next {
                Some(i) => w = w.compose(&self.reflection(i)),
                None => return w,
            }
        }
    }

    /// Distinct squared root lengths per irreducible component.
    pub fn lengths_by_component(&self) -> Vec<Vec<i32>> {
        let ncomp = self.component.iter().max().map_or(0, |m| m + 1);
        let mut out: Vec<Vec<i32>> = vec![Vec::new(); ncomp];
        for r in &self.roots {
            let c = self.component[r.support()[0]];
            let n = self.norm2(r);
            if !out[c].contains(&n) {
                out[c].push(n);
            }
        }
        for v in &mut out {
            v.sort_unstable();
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        let dump = RootSystemDump {
            r#type: self.kind.to_string(),
            cartan: self.cartan.clone(),
            roots: self.roots.iter().map(|r| r.0.clone()).collect(),
        };
        Ok(serde_json::to_string(&dump)?)
    }
}

#[derive(Serialize)]
struct RootSystemDump {
    r#type: String,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Vec<i32>>,
}

/// Squared lengths of the simple roots (short roots = 2 in each component)
/// and the component id of each simple root.
fn squared_lengths(cartan: &[Vec<i32>]) -> (Vec<i32>, Vec<usize>) {
    let n = cartan.len();
    let mut len = vec![Ratio::<i64>::zero(); n];
    let mut comp = vec![usize::MAX; n];
    let mut ncomp = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = ncomp;
        len[s] = Ratio::one();
        let mut stack = vec![s];
        let mut members = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || cartan[i][j] == 0 || comp[j] != usize::MAX {
                    continue;
                }
                // cartan[i][j] * d_j = cartan[j][i] * d_i
                comp[j] = ncomp;
                len[j] = len[i] * Ratio::new(cartan[j][i] as i64, cartan[i][j] as i64);
                stack.push(j);
                members.push(j);
            }
        }
        let shortest = members.iter().map(|&i| len[i]).min().unwrap();
        for &i in &members {
            len[i] = len[i] * 2 / shortest;
        }
        ncomp += 1;
    }
    (len.iter().map(|d| d.to_integer() as i32).collect(), comp)
}
