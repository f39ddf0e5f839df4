//! Real forms through Satake diagrams: catalog, conjugation on roots and on
//! the Chevalley basis, root classification and the real basis.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chevalley::{build_chevalley_gauged, killing, AlgebraElement, StructureConstants};
use crate::error::{Error, Result};
use crate::exactla::{inertia, ExactMatrix, Inertia, SparseEchelon};
use crate::rootsys::{build_system, Family, LatticeMap, Root, RootSystem, SimpleType, SystemType};
use crate::scalar::{g_i, g_int, g_zero, Gauss};

pub const CATALOG_VERSION: u32 = 1;

/// Satake diagram of a simple real form. Node indices are 1-based, in
/// Bourbaki numbering; for complex-type forms the second copy of the
/// diagram is numbered `ℓ+1..2ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatakeDiagram {
    pub label: String,
    pub name: String,
    pub family: Family,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub complex: bool,
    pub black: Vec<usize>,
    pub arrows: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
}

impl SatakeDiagram {
    pub fn simple_type(&self) -> SimpleType {
        SimpleType { family: self.family, rank: self.rank }
    }

    pub fn system_type(&self) -> SystemType {
        if self.complex {
            SystemType::Doubled(self.simple_type())
        } else {
            SystemType::Simple(self.simple_type())
        }
    }

    /// Number of simple roots of the complexified system.
    pub fn total_rank(&self) -> usize {
        self.system_type().rank()
    }

    pub fn is_black(&self, j: usize) -> bool {
        self.black.contains(&j)
    }

    /// Arrow partner of a 1-based node (itself when it carries no arrow).
    pub fn tau(&self, j: usize) -> usize {
        self.arrows
            .iter()
            .find_map(|&(a, b)| if a == j { Some(b) } else if b == j { Some(a) } else { None })
            .unwrap_or(j)
    }
}

impl fmt::Display for SatakeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

fn diagram(label: &str, name: String, t: SimpleType, black: Vec<usize>, arrows: Vec<(usize, usize)>) -> SatakeDiagram {
    SatakeDiagram {
        label: label.into(),
        name,
        family: t.family,
        rank: t.rank,
        complex: false,
        black,
        arrows,
        p: None,
        q: None,
    }
}

fn with_pq(mut d: SatakeDiagram, p: usize, q: usize) -> SatakeDiagram {
    d.p = Some(p);
    d.q = Some(q);
    d
}

pub fn compact(t: SimpleType) -> SatakeDiagram {
    diagram("compact", format!("compact-{t}"), t, range(1, t.rank), Vec::new())
}

pub fn complex_type(t: SimpleType) -> SatakeDiagram {
    let l = t.rank;
    let mut d = diagram("complex", format!("complex-{t}"), t, Vec::new(), (1..=l).map(|i| (i, i + l)).collect());
    d.complex = true;
    d
}

fn ty(family: Family, rank: usize) -> Result<SimpleType> {
    SimpleType::new(family, rank)
}

fn need(v: Option<usize>, what: &str, label: &str) -> Result<usize> {
    v.ok_or_else(|| Error::UnknownForm(format!("{label} needs --{what}")))
}

/// Resolves `(p, q, l)` for families where real forms carry a signature.
/// Returns `(p, q)` with `p ≤ q` and `p + q = total`.
fn signature(label: &str, p: Option<usize>, q: Option<usize>, l: Option<usize>, total: impl Fn(usize) -> usize) -> Result<(usize, usize)> {
    let (p, q) = match (p, q, l) {
        (Some(p), Some(q), _) => (p, q),
        (Some(p), None, Some(l)) if total(l) >= p => (p, total(l) - p),
        _ => return Err(Error::UnknownForm(format!("{label} needs --p and --q (or --p and --l)"))),
    };
    Ok((p.min(q), p.max(q)))
}

/// Satake diagram from a label and its parameters.
///
/// Classical labels: `AI` (l), `AII` (l odd), `AIII`/`AIIIa`/`AIIIb`/`AIV`
/// (p, q), `BI`/`BII` (p, q), `CI` (l), `CII`/`CIIa`/`CIIb` (p, q),
/// `DI`/`DII` (p, q), `DIII` (l). Exceptional labels take no parameters.
pub fn satake(label: &str, p: Option<usize>, q: Option<usize>, l: Option<usize>) -> Result<SatakeDiagram> {
    use Family::*;
    let bad = || Error::UnknownForm(label.to_string());
    let d = match label {
        "AI" => {
            let l = need(l, "l", label)?;
            diagram("AI", format!("sl({},R)", l + 1), ty(A, l)?, Vec::new(), Vec::new())
        }
        "AII" => {
            let l = need(l, "l", label)?;
            if l < 3 || l % 2 == 0 {
                return Err(bad());
            }
            diagram("AII", format!("su*({})", l + 1), ty(A, l)?, (1..=l).step_by(2).collect(), Vec::new())
        }
        "AIII" | "AIIIa" | "AIIIb" | "AIV" => {
            let (p, q) = signature(label, p, q, l, |l| l + 1)?;
            if p == 0 {
                return Ok(compact(ty(A, q - 1)?));
            }
            let l = p + q - 1;
            let sub = if p == q { "AIIIb" } else if p == 1 { "AIV" } else { "AIIIa" };
            if label != "AIII" && label != sub {
                return Err(Error::UnknownForm(format!("su({p},{q}) is {sub}, not {label}")));
            }
            let arrows = (1..=p.min(l / 2)).filter(|&j| j != l + 1 - j).map(|j| (j, l + 1 - j)).collect();
            with_pq(diagram(sub, format!("su({p},{q})"), ty(A, l)?, range(p + 1, q - 1), arrows), p, q)
        }
        "BI" | "BII" => {
            let (p, q) = signature(label, p, q, l, |l| 2 * l + 1)?;
            if (p + q) % 2 == 0 {
                return Err(bad());
            }
            let l = (p + q - 1) / 2;
            if p == 0 {
                return Ok(compact(ty(B, l)?));
            }
            let sub = if p == 1 { "BII" } else { "BI" };
            with_pq(diagram(sub, format!("so({p},{q})"), ty(B, l)?, range(p + 1, l), Vec::new()), p, q)
        }
        "CI" => {
            let l = need(l, "l", label)?;
            diagram("CI", format!("sp({},R)", 2 * l), ty(C, l)?, Vec::new(), Vec::new())
        }
        "CII" | "CIIa" | "CIIb" => {
            let (p, q) = signature(label, p, q, l, |l| l)?;
            let l = p + q;
            if p == 0 {
                return Ok(compact(ty(C, l)?));
            }
            let sub = if 2 * p == l { "CIIb" } else { "CIIa" };
            if label != "CII" && label != sub {
                return Err(Error::UnknownForm(format!("sp({p},{q}) is {sub}, not {label}")));
            }
            let mut black: Vec<usize> = (1..2 * p).step_by(2).collect();
            black.extend(range(2 * p + 1, l));
            with_pq(diagram(sub, format!("sp({p},{q})"), ty(C, l)?, black, Vec::new()), p, q)
        }
        "DI" | "DII" => {
            let (p, q) = signature(label, p, q, l, |l| 2 * l)?;
            if (p + q) % 2 == 1 {
                return Err(bad());
            }
            let l = (p + q) / 2;
            if p == 0 {
                return Ok(compact(ty(D, l)?));
            }
            let sub = if p == 1 { "DII" } else { "DI" };
            let (black, arrows) = if p + 1 == l {
                (Vec::new(), vec![(l - 1, l)])
            } else {
                (range(p + 1, l), Vec::new())
            };
            with_pq(diagram(sub, format!("so({p},{q})"), ty(D, l)?, black, arrows), p, q)
        }
        "DIII" => {
            let l = need(l, "l", label)?;
            let t = ty(D, l)?;
            if l % 2 == 0 {
                diagram("DIII", format!("so*({})", 2 * l), t, (1..l).step_by(2).collect(), Vec::new())
            } else {
                diagram("DIII", format!("so*({})", 2 * l), t, (1..l - 1).step_by(2).collect(), vec![(l - 1, l)])
            }
        }
        "EI" => diagram("EI", "e6(6)".into(), ty(E, 6)?, Vec::new(), Vec::new()),
        "EII" => diagram("EII", "e6(2)".into(), ty(E, 6)?, Vec::new(), vec![(1, 6), (3, 5)]),
        "EIII" => diagram("EIII", "e6(-14)".into(), ty(E, 6)?, vec![3, 4, 5], vec![(1, 6)]),
        "EIV" => diagram("EIV", "e6(-26)".into(), ty(E, 6)?, vec![2, 3, 4, 5], Vec::new()),
        "EV" => diagram("EV", "e7(7)".into(), ty(E, 7)?, Vec::new(), Vec::new()),
        "EVI" => diagram("EVI", "e7(-5)".into(), ty(E, 7)?, vec![2, 5, 7], Vec::new()),
        "EVII" => diagram("EVII", "e7(-25)".into(), ty(E, 7)?, vec![2, 3, 4, 5], Vec::new()),
        "EVIII" => diagram("EVIII", "e8(8)".into(), ty(E, 8)?, Vec::new(), Vec::new()),
        "EIX" => diagram("EIX", "e8(-24)".into(), ty(E, 8)?, vec![2, 3, 4, 5], Vec::new()),
        "FI" => diagram("FI", "f4(4)".into(), ty(F, 4)?, Vec::new(), Vec::new()),
        "FII" => diagram("FII", "f4(-20)".into(), ty(F, 4)?, vec![1, 2, 3], Vec::new()),
        "G" | "GI" => diagram("G", "g2(2)".into(), ty(G, 2)?, Vec::new(), Vec::new()),
        _ => return Err(bad()),
    };
    Ok(d)
}

fn nums(inner: &str) -> Option<Vec<usize>> {
    inner.split(',').map(|s| s.trim().parse().ok()).collect()
}

/// Parses a human form name: `su(2,3)`, `sl(3,R)`, `sl(3,C)`, `su*(6)`,
/// `so(2,5)`, `sp(1,2)`, `sp(4,R)`, `so*(8)`, `su(3)`, `compact-G2`,
/// `complex-A2`, `e6(-14)`, or a bare exceptional label such as `EIII`.
pub fn parse_form(name: &str) -> Result<SatakeDiagram> {
    use Family::*;
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::UnknownForm(name.to_string());
    if let Some(t) = s.strip_prefix("compact-") {
        return Ok(compact(SimpleType::parse(t)?));
    }
    if let Some(t) = s.strip_prefix("complex-") {
        return Ok(complex_type(SimpleType::parse(t)?));
    }
    let exceptional = [
        ("e6(6)", "EI"),
        ("e6(2)", "EII"),
        ("e6(-14)", "EIII"),
        ("e6(-26)", "EIV"),
        ("e7(7)", "EV"),
        ("e7(-5)", "EVI"),
        ("e7(-25)", "EVII"),
        ("e8(8)", "EVIII"),
        ("e8(-24)", "EIX"),
        ("f4(4)", "FI"),
        ("f4(-20)", "FII"),
        ("g2(2)", "G"),
    ];
    if let Some((_, label)) = exceptional.iter().find(|(n, l)| *n == s.to_lowercase() || *l == s) {
        return satake(label, None, None, None);
    }
    let open = s.find('(').ok_or_else(bad)?;
    if !s.ends_with(')') {
        return Err(bad());
    }
    let head = &s[..open];
    let inner = &s[open + 1..s.len() - 1];
    let field = |suffix: &str| inner.strip_suffix(suffix).and_then(|x| x.strip_suffix(',')).and_then(|x| x.parse::<usize>().ok());
    match head {
        "sl" => {
            if let Some(n) = field("R") {
                return satake("AI", None, None, Some(n.checked_sub(1).ok_or_else(bad)?));
            }
            if let Some(n) = field("C") {
                return Ok(complex_type(SimpleType::new(A, n.checked_sub(1).ok_or_else(bad)?)?));
            }
            Err(bad())
        }
        "su*" => {
            let n = nums(inner).filter(|v| v.len() == 1).ok_or_else(bad)?[0];
            satake("AII", None, None, Some(n.checked_sub(1).ok_or_else(bad)?))
        }
        "so*" => {
            let n = nums(inner).filter(|v| v.len() == 1).ok_or_else(bad)?[0];
            if n % 2 == 1 {
                return Err(bad());
            }
            satake("DIII", None, None, Some(n / 2))
        }
        "sp" => {
            if let Some(n) = field("R") {
                if n % 2 == 1 {
                    return Err(bad());
                }
                return satake("CI", None, None, Some(n / 2));
            }
            if let Some(n) = field("C") {
                if n % 2 == 1 {
                    return Err(bad());
                }
                return Ok(complex_type(SimpleType::new(C, n / 2)?));
            }
            match nums(inner).ok_or_else(bad)?.as_slice() {
                [n] => Ok(compact(SimpleType::new(C, *n)?)),
                [p, q] => satake("CII", Some(*p), Some(*q), None),
                _ => Err(bad()),
            }
        }
        "su" => match nums(inner).ok_or_else(bad)?.as_slice() {
            [n] => Ok(compact(SimpleType::new(A, n.checked_sub(1).ok_or_else(bad)?)?)),
            [p, q] => satake("AIII", Some(*p), Some(*q), None),
            _ => Err(bad()),
        },
        "so" => {
            if let Some(n) = field("C") {
                return Ok(complex_type(orthogonal_type(n).ok_or_else(bad)?));
            }
            match nums(inner).ok_or_else(bad)?.as_slice() {
                [n] => Ok(compact(orthogonal_type(*n).ok_or_else(bad)?)),
                [p, q] if (p + q) % 2 == 1 => satake("BI", Some(*p), Some(*q), None),
                [p, q] => satake("DI", Some(*p), Some(*q), None),
                _ => Err(bad()),
            }
        }
        _ => Err(bad()),
    }
}

fn orthogonal_type(n: usize) -> Option<SimpleType> {
    if n % 2 == 1 {
        SimpleType::new(Family::B, (n - 1) / 2).ok()
    } else {
        SimpleType::new(Family::D, n / 2).ok()
    }
}

/// Every simple real form whose complexified simple type has rank at most
/// `max_rank`, one entry per isomorphism class of Satake diagram in the
/// standard families (`C_ℓ` from ℓ = 3, `D_ℓ` from ℓ = 4).
pub fn catalog(max_rank: usize) -> Vec<SatakeDiagram> {
    use Family::*;
    let mut out = Vec::new();
    let push_end = |out: &mut Vec<SatakeDiagram>, t: SimpleType| {
        out.push(compact(t));
        out.push(complex_type(t));
    };
    for l in 1..=max_rank {
        let t = SimpleType { family: A, rank: l };
        out.push(satake("AI", None, None, Some(l)).unwrap());
        if l >= 3 && l % 2 == 1 {
            out.push(satake("AII", None, None, Some(l)).unwrap());
        }
        for p in 1..=l.div_ceil(2) {
            out.push(satake("AIII", Some(p), Some(l + 1 - p), None).unwrap());
        }
        push_end(&mut out, t);
    }
    for l in 2..=max_rank {
        for p in 1..=l {
            out.push(satake("BI", Some(p), Some(2 * l + 1 - p), None).unwrap());
        }
        push_end(&mut out, SimpleType { family: B, rank: l });
    }
    for l in 3..=max_rank {
        out.push(satake("CI", None, None, Some(l)).unwrap());
        for p in 1..=l / 2 {
            out.push(satake("CII", Some(p), Some(l - p), None).unwrap());
        }
        push_end(&mut out, SimpleType { family: C, rank: l });
    }
    for l in 4..=max_rank {
        for p in 1..=l {
            out.push(satake("DI", Some(p), Some(2 * l - p), None).unwrap());
        }
        out.push(satake("DIII", None, None, Some(l)).unwrap());
        push_end(&mut out, SimpleType { family: D, rank: l });
    }
    let exceptional: [(usize, Family, &[&str]); 5] = [
        (2, G, &["G"]),
        (4, F, &["FI", "FII"]),
        (6, E, &["EI", "EII", "EIII", "EIV"]),
        (7, E, &["EV", "EVI", "EVII"]),
        (8, E, &["EVIII", "EIX"]),
    ];
    for (rank, family, labels) in exceptional {
        if rank <= max_rank {
            for l in labels {
                out.push(satake(l, None, None, None).unwrap());
            }
            push_end(&mut out, SimpleType { family, rank });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub version: u32,
    pub max_rank: usize,
    pub forms: Vec<SatakeDiagram>,
}

pub fn catalog_file(max_rank: usize) -> CatalogFile {
    CatalogFile { version: CATALOG_VERSION, max_rank, forms: catalog(max_rank) }
}

/// The catalog shipped with the crate.
pub const CATALOG_JSON: &str = include_str!("../data/satake_catalog.json");

pub fn shipped_catalog() -> Result<CatalogFile> {
    Ok(serde_json::from_str(CATALOG_JSON)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootClass {
    Real,
    ImaginaryCompact,
    ImaginaryNoncompact,
    Complex,
}

/// Conjugation `α ↦ ᾱ` on the roots together with the sign table
/// `σ(Z_α) = t_α Z_{ᾱ}` on the Chevalley basis.
#[derive(Debug, Clone)]
pub struct Conjugation {
    pub label: String,
    pub lattice: LatticeMap,
    perm: Vec<usize>,
    classes: Vec<RootClass>,
    signs: Vec<i8>,
    /// Positive real roots on which `t = +1` could not be imposed in the
    /// fixed Chevalley basis.
    pub real_sign_defects: Vec<usize>,
}

impl Conjugation {
    pub fn bar(&self, r: usize) -> usize {
        self.perm[r]
    }

    pub fn bar_root(&self, r: &Root) -> Root {
        self.lattice.apply(r)
    }

    pub fn class(&self, r: usize) -> RootClass {
        self.classes[r]
    }

    pub fn sign(&self, r: usize) -> i8 {
        self.signs[r]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

pub fn classify_root(conj: &Conjugation, r: usize) -> RootClass {
    conj.class(r)
}

/// Lattice part of the conjugation, `c = w_• ∘ ε`, where `w_•` is the longest
/// element of the Weyl group of the black nodes and `ε` the diagram
/// automorphism acting by the arrows on white nodes and by the opposition
/// involution of the black subdiagram on black nodes. Equivalently
/// `c(α_j) = -α_j` for black `j` and `c(α_i) = w_•(α_{τ(i)})` for white `i`.
///
/// The result is validated: `ε` preserves the Cartan matrix, `c² = id`,
/// `c(R) = R`, positivity is preserved on complex roots, and the imaginary
/// roots are exactly those supported on black nodes.
pub fn root_conjugation(diag: &SatakeDiagram, rs: &RootSystem) -> Result<Conjugation> {
    let n = rs.rank();
    let fail = |detail: String| Error::Conjugation { label: diag.name.clone(), detail };
    if n != diag.total_rank() || rs.kind() != diag.system_type() {
        return Err(fail(format!("diagram is for {} but root system is {}", diag.system_type(), rs.kind())));
    }
    for &(a, b) in &diag.arrows {
        if a == 0 || b == 0 || a > n || b > n || a == b || diag.is_black(a) || diag.is_black(b) {
            return Err(fail(format!("bad arrow {a}<->{b}")));
        }
    }
    if let Some(&j) = diag.black.iter().find(|&&j| j == 0 || j > n) {
        return Err(fail(format!("black node {j} out of range")));
    }
    let black: Vec<usize> = diag.black.iter().map(|j| j - 1).collect();
    let w = rs.weyl_longest_element(&black);
    let eps: Vec<usize> = (0..n)
        .map(|j| {
            if black.contains(&j) {
                let img = w.column(j).neg();
                (0..n).find(|&k| img == Root::simple(n, k)).ok_or_else(|| fail(format!("w_• does not oppose α{}", j + 1)))
            } else {
                Ok(diag.tau(j + 1) - 1)
            }
        })
        .collect::<Result<_>>()?;
    let cm = rs.cartan();
    for i in 0..n {
        for j in 0..n {
            if cm[eps[i]][eps[j]] != cm[i][j] {
                return Err(fail("ε is not a diagram automorphism".into()));
            }
        }
    }
    let mut m = vec![vec![0; n]; n];
    for j in 0..n {
        let col = w.column(eps[j]);
        for i in 0..n {
            m[i][j] = col.0[i];
        }
    }
    let lattice = LatticeMap { m };
    if !lattice.compose(&lattice).is_identity() {
        return Err(fail("c² ≠ id".into()));
    }
    let mut perm = Vec::with_capacity(rs.len());
    for r in rs.roots() {
        let img = lattice.apply(r);
        perm.push(rs.index_of(&img).ok_or_else(|| fail(format!("c({r}) = {img} is not a root")))?);
    }
    let mut classes = Vec::with_capacity(rs.len());
    for (i, r) in rs.roots().iter().enumerate() {
        let img = rs.root(perm[i]);
        let in_black = r.support().iter().all(|k| black.contains(k));
        let class = if *img == *r {
            RootClass::Real
        } else if *img == r.neg() {
            RootClass::ImaginaryCompact
        } else {
            if img.is_positive() != r.is_positive() {
                return Err(fail(format!("positivity not preserved on complex root {r}")));
            }
            RootClass::Complex
        };
        if (class == RootClass::ImaginaryCompact) != in_black {
            return Err(fail(format!("imaginary roots differ from the black subsystem at {r}")));
        }
        classes.push(class);
    }
    Ok(Conjugation {
        label: diag.name.clone(),
        lattice,
        perm,
        classes,
        signs: vec![1; rs.len()],
        real_sign_defects: Vec::new(),
    })
}

/// Dense GF(2) system kept in reduced row echelon form.
struct Gf2 {
    words: usize,
    rows: Vec<(usize, Vec<u64>, bool)>,
    pivot_row: Vec<Option<usize>>,
}

impl Gf2 {
    fn new(vars: usize) -> Gf2 {
        Gf2 { words: vars.div_ceil(64), rows: Vec::new(), pivot_row: vec![None; vars] }
    }

    fn equation(&self, vars: &[usize], rhs: bool) -> (Vec<u64>, bool) {
        let mut e = vec![0u64; self.words];
        for &v in vars {
            e[v / 64] ^= 1 << (v % 64);
        }
        (e, rhs)
    }

    fn reduce(&self, mut e: Vec<u64>, mut rhs: bool) -> (Vec<u64>, bool) {
        for (p, row, b) in &self.rows {
            if e[p / 64] >> (p % 64) & 1 == 1 {
                for (x, y) in e.iter_mut().zip(row) {
                    *x ^= y;
                }
                rhs ^= b;
            }
        }
        (e, rhs)
    }

    /// `Ok(())` if consistent (possibly redundant), `Err(())` otherwise.
    fn insert(&mut self, e: Vec<u64>, rhs: bool) -> std::result::Result<(), ()> {
        let (e, rhs) = self.reduce(e, rhs);
        let Some(p) = e.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
        else {
            return if rhs { Err(()) } else { Ok(()) };
        };
        for (_, row, b) in self.rows.iter_mut() {
            if row[p / 64] >> (p % 64) & 1 == 1 {
                for (x, y) in row.iter_mut().zip(&e) {
                    *x ^= y;
                }
                *b ^= rhs;
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push((p, e, rhs));
        Ok(())
    }

    fn solve(&self, mut free_value: impl FnMut(usize) -> bool) -> Vec<bool> {
        let n = self.pivot_row.len();
        let mut x = vec![false; n];
        for (v, slot) in x.iter_mut().enumerate() {
            if self.pivot_row[v].is_none() {
                *slot = free_value(v);
            }
        }
        for (p, row, b) in &self.rows {
            let mut val = *b;
            for (v, &xv) in x.iter().enumerate() {
                if v != *p && xv && row[v / 64] >> (v % 64) & 1 == 1 {
                    val ^= true;
                }
            }
            x[*p] = val;
        }
        x
    }
}

/// Completes the conjugation with the sign table `t_α = (-1)^{x_α}`, solving
/// over GF(2):
///
/// * `x_α + x_β + x_{α+β} = [N_{ᾱ,β̄} / N_{α,β} < 0]` (σ is a homomorphism),
/// * `x_{-α} = x_α` (σ fixes the bracket `[Z_α, Z_{-α}] = -H_α`),
/// * `x_{ᾱ} = x_α` (σ² = id),
/// * `x_α = 0` on imaginary roots (compactness),
/// * `x_α = 0` on real roots, imposed greedily; roots where it conflicts are
///   reported in `real_sign_defects`.
///
/// Free variables are 0, or random when `gauge_seed` is given.
pub fn basis_conjugation_signs(mut conj: Conjugation, sc: &StructureConstants, gauge_seed: Option<u64>) -> Result<Conjugation> {
    let rs = sc.root_system();
    let len = rs.len();
    let fail = |detail: String| Error::SignSystem { label: conj.label.clone(), detail };
    let mut sys = Gf2::new(len);
    for a in 0..len {
        let b = rs.neg_index(a);
        let (e, r) = sys.equation(&[a, b], false);
        sys.insert(e, r).map_err(|_| fail("x(-α) = x(α) inconsistent".into()))?;
        let cb = conj.bar(a);
        if cb != a {
            let (e, r) = sys.equation(&[a, cb], false);
            sys.insert(e, r).map_err(|_| fail("x(ᾱ) = x(α) inconsistent".into()))?;
        }
    }
    for a in 0..len {
        for b in a + 1..len {
            let Some(s) = rs.sum_index(a, b) else { continue };
            let n = sc.n(a, b);
            let nb = sc.n(conj.bar(a), conj.bar(b));
            if n.abs() != nb.abs() {
                return Err(fail(format!("|N| not preserved on {} {}", rs.root(a), rs.root(b))));
            }
            let (e, r) = sys.equation(&[a, b, s], n != nb);
            sys.insert(e, r)
                .map_err(|_| fail(format!("cocycle fails at {} + {}", rs.root(a), rs.root(b))))?;
        }
    }
    for a in 0..len {
        if conj.class(a) == RootClass::ImaginaryCompact {
            let (e, r) = sys.equation(&[a], false);
            sys.insert(e, r).map_err(|_| fail(format!("imaginary root {} is noncompact", rs.root(a))))?;
        }
    }
    let mut defects = Vec::new();
    for &a in rs.positives() {
        if conj.class(a) == RootClass::Real {
            let (e, r) = sys.equation(&[a], false);
            if sys.insert(e, r).is_err() {
                defects.push(a);
            }
        }
    }
    let mut rng = gauge_seed.map(ChaCha8Rng::seed_from_u64);
    let x = sys.solve(|_| rng.as_mut().is_some_and(|g| g.gen::<bool>()));
    conj.signs = x.iter().map(|&b| if b { -1 } else { 1 }).collect();
    conj.real_sign_defects = defects;
    Ok(conj)
}

/// A simple real form with all data needed downstream.
#[derive(Debug, Clone)]
pub struct RealForm {
    pub diagram: SatakeDiagram,
    pub rs: Arc<RootSystem>,
    pub sc: StructureConstants,
    pub conj: Conjugation,
}

/// Builds root system, Chevalley basis and conjugation. A gauge seed
/// re-randomizes both the Chevalley signs and the free signs of the table.
pub fn build_real_form(diag: &SatakeDiagram, gauge_seed: Option<u64>) -> Result<RealForm> {
    let rs = Arc::new(build_system(diag.system_type())?);
    let sc = build_chevalley_gauged(Arc::clone(&rs), gauge_seed)?;
    let lattice = root_conjugation(diag, &rs)?;
    let conj = basis_conjugation_signs(lattice, &sc, gauge_seed.map(|s| s.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ 1))?;
    Ok(RealForm { diagram: diag.clone(), rs, sc, conj })
}

impl RealForm {
    pub fn dim(&self) -> usize {
        self.sc.dim()
    }

    /// σ on a basis index: `(image index, coefficient)` pairs.
    pub fn sigma_basis(&self, k: usize) -> Vec<(usize, i32)> {
        let l = self.rs.rank();
        if k < l {
            let s = self.rs.simple_index(k);
            self.sc
                .coroot(self.conj.bar(s))
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(j, &c)| (j, c))
                .collect()
        } else {
            let r = k - l;
            vec![(l + self.conj.bar(r), i32::from(self.conj.sign(r)))]
        }
    }

    /// The anti-linear involution σ of the complexification fixing the real form.
    pub fn sigma(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = BTreeMap::new();
        for (k, c) in x.sparse() {
            let cc = c.conj();
            for (j, v) in self.sigma_basis(*k) {
                let e = out.entry(j).or_insert_with(g_zero);
                *e = &*e + &cc * g_int(i64::from(v));
            }
        }
        AlgebraElement::from_sparse(out)
    }

    /// σ² = id and σ[x, y] = [σx, σy] on all basis elements.
    pub fn check_sigma(&self) -> Result<()> {
        let d = self.dim();
        let fail = |detail: String| Error::SignSystem { label: self.diagram.name.clone(), detail };
        let basis: Vec<AlgebraElement> = (0..d).map(AlgebraElement::basis).collect();
        let images: Vec<AlgebraElement> = basis.iter().map(|b| self.sigma(b)).collect();
        for (k, img) in images.iter().enumerate() {
            if self.sigma(img) != basis[k] {
                return Err(fail(format!("σ² ≠ id on basis element {k}")));
            }
        }
        for x in 0..d {
            for y in x + 1..d {
                let lhs = self.sigma(&crate::chevalley::bracket(&self.sc, &basis[x], &basis[y]));
                let rhs = crate::chevalley::bracket(&self.sc, &images[x], &images[y]);
                if lhs != rhs {
                    return Err(fail(format!("σ is not a homomorphism on basis pair {x},{y}")));
                }
            }
        }
        Ok(())
    }

    /// Real-form elements `v + σv` and `i(v - σv)` generated by `v`.
    pub fn realify(&self, v: &AlgebraElement) -> [AlgebraElement; 2] {
        let s = self.sigma(v);
        [v.add(&s), v.sub(&s).scale(&g_i())]
    }

    /// Basis of the real form `{x : σx = x}` as elements of the
    /// complexification; its size equals `dim_C g^C`.
    pub fn real_basis(&self) -> Vec<AlgebraElement> {
        let mut ech = SparseEchelon::new();
        let mut out = Vec::new();
        for k in 0..self.dim() {
            for v in self.realify(&AlgebraElement::basis(k)) {
                if v.is_zero() {
                    continue;
                }
                if ech.insert(v.sparse().clone()).is_some() {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Killing form values `κ(b_i, b_j)` on the canonical basis, computed
    /// once on the nonzero pattern (`H` with `H`, `Z_α` with `Z_{-α}`).
    pub fn killing_pattern(&self) -> BTreeMap<(usize, usize), Gauss> {
        let l = self.rs.rank();
        let mut out = BTreeMap::new();
        for i in 0..l {
            for j in 0..l {
                let v = killing(&self.sc, &self.sc.h(i), &self.sc.h(j));
                if !v.is_zero() {
                    out.insert((i, j), v);
                }
            }
        }
        for r in 0..self.rs.len() {
            let v = killing(&self.sc, &self.sc.z(r), &self.sc.z(self.rs.neg_index(r)));
            out.insert((l + r, l + self.rs.neg_index(r)), v);
        }
        out
    }

    /// Inertia of the Killing form restricted to the real form; the number
    /// of negative directions is the dimension of a maximal compact subalgebra.
    pub fn killing_signature(&self) -> Result<Inertia> {
        let basis = self.real_basis();
        let pat = self.killing_pattern();
        let n = basis.len();
        let gram = ExactMatrix::from_fn(n, n, |a, b| {
            let mut acc = g_zero();
            for (i, x) in basis[a].sparse() {
                for ((p, q), k) in pat.range((*i, 0)..(*i + 1, 0)) {
                    debug_assert_eq!(*p, *i);
                    let y = basis[b].coeff(*q);
                    if !y.is_zero() {
                        acc += x * &y * k;
                    }
                }
            }
            acc
        });
        inertia(&gram)
    }
}
