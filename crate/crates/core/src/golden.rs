//! Expected verdicts per real form, stored as parameterized predicates on `Φ`.
//!
//! Schema of `golden.json`:
//!
//! ```text
//! { "version": 1,
//!   "rows": [ { "labels": ["AIIIa", "AIV"], "case": "2",
//!               "family": "A",              (optional)
//!               "l_parity": "even",         (optional)
//!               "readings": [ { "name": "...", "predicate": P }, ... ] } ] }
//! ```
//!
//! A predicate `P` is one of `{"all": {}}`, `{"none": {}}`,
//! `{"disjoint": S}`, `{"subset_of_any": [S, ...]}` where a set `S` is a list
//! of ranges `{"from": e, "to": e, "step": n}` and `e` is an affine
//! expression in `p`, `q`, `l` such as `"2p-1"`. Rows with more than one
//! reading are ambiguous transcriptions. `Φ = ∅` is expected true for every
//! form. Forms not matched by any row are expected false.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::realform::SatakeDiagram;
use crate::rootsys::Family;

pub const GOLDEN_JSON: &str = include_str!("../data/golden.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Range {
    pub from: String,
    pub to: String,
    #[serde(default = "one")]
    pub step: usize,
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    All {},
    None {},
    Disjoint(Vec<Range>),
    SubsetOfAny(Vec<Vec<Range>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reading {
    pub name: String,
    pub predicate: Predicate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub labels: Vec<String>,
    pub case: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l_parity: Option<String>,
    pub readings: Vec<Reading>,
}

impl GoldenRow {
    pub fn ambiguous(&self) -> bool {
        self.readings.len() > 1
    }

    fn matches(&self, d: &SatakeDiagram) -> bool {
        self.labels.iter().any(|l| l == &d.label)
            && self.family.is_none_or(|f| f == d.family)
            && self.l_parity.as_deref().is_none_or(|p| d.rank.is_multiple_of(2) == (p == "even"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenTable {
    pub version: u32,
    pub rows: Vec<GoldenRow>,
}

/// Form parameters an expression may refer to.
#[derive(Debug, Clone, Copy)]
pub struct Params {
    pub p: i64,
    pub q: i64,
    pub l: i64,
}

impl Params {
    pub fn of(d: &SatakeDiagram) -> Params {
        let l = d.rank as i64;
        Params { p: d.p.map_or(0, |x| x as i64), q: d.q.map_or(0, |x| x as i64), l }
    }
}

/// Evaluate an affine expression like `2p-1`, `l`, `q+1`.
pub fn eval_expr(expr: &str, v: Params) -> Result<i64> {
    let bad = || Error::Golden(format!("bad expression `{expr}`"));
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad());
    }
    let mut total = 0i64;
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let digits = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
        let coeff = if digits == 0 { 1 } else { term[..digits].parse::<i64>().map_err(|_| bad())? };
        let value = match &term[digits..] {
            "" if digits > 0 => 1,
            "p" => v.p,
            "q" => v.q,
            "l" => v.l,
            _ => return Err(bad()),
        };
        total += sign * coeff * value;
    }
    Ok(total)
}

fn expand(set: &[Range], v: Params) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for r in set {
        if r.step == 0 {
            return Err(Error::Golden("zero step".into()));
        }
        let (a, b) = (eval_expr(&r.from, v)?, eval_expr(&r.to, v)?);
        let mut j = a.max(1);
        if (j - a) % r.step as i64 != 0 {
            j += r.step as i64 - (j - a) % r.step as i64;
        }
        while j <= b.min(v.l) {
            out.push(j as usize);
            j += r.step as i64;
        }
    }
    Ok(out)
}

impl Predicate {
    pub fn eval(&self, phi: &[usize], v: Params) -> Result<bool> {
        if phi.is_empty() {
            return Ok(true);
        }
        Ok(match self {
            Predicate::All {} => true,
            Predicate::None {} => false,
            Predicate::Disjoint(s) => {
                let s = expand(s, v)?;
                phi.iter().all(|j| !s.contains(j))
            }
            Predicate::SubsetOfAny(sets) => {
                let mut any = false;
                for s in sets {
                    let s = expand(s, v)?;
                    any |= phi.iter().all(|j| s.contains(j));
                }
                any
            }
        })
    }
}

impl GoldenTable {
    pub fn parse(json: &str) -> Result<GoldenTable> {
        let t: GoldenTable = serde_json::from_str(json)?;
        if t.rows.iter().any(|r| r.readings.is_empty()) {
            return Err(Error::Golden("row without readings".into()));
        }
        Ok(t)
    }

    pub fn shipped() -> GoldenTable {
        GoldenTable::parse(GOLDEN_JSON).expect("shipped golden table parses")
    }

    pub fn row_for(&self, d: &SatakeDiagram) -> Option<&GoldenRow> {
        self.rows.iter().find(|r| r.matches(d))
    }

    /// Expected verdict under each reading; a form with no row gets a single
    /// all-false reading.
    pub fn expected(&self, d: &SatakeDiagram, phi: &[usize]) -> Result<Vec<(String, bool)>> {
        let v = Params::of(d);
        match self.row_for(d) {
            Some(row) => row.readings.iter().map(|r| Ok((r.name.clone(), r.predicate.eval(phi, v)?))).collect(),
            None => Ok(vec![("unlisted".into(), Predicate::None {}.eval(phi, v)?)]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::parse_form;

    fn exp(name: &str, phi: &[usize]) -> Vec<bool> {
        let t = GoldenTable::shipped();
        t.expected(&parse_form(name).unwrap(), phi).unwrap().into_iter().map(|x| x.1).collect()
    }

    #[test]
    fn expressions() {
        let v = Params { p: 2, q: 5, l: 7 };
        assert_eq!(eval_expr("2p-1", v).unwrap(), 3);
        assert_eq!(eval_expr("l", v).unwrap(), 7);
        assert_eq!(eval_expr("q+1", v).unwrap(), 6);
        assert_eq!(eval_expr("-p+3", v).unwrap(), 1);
        assert!(eval_expr("x", v).is_err());
        assert!(eval_expr("", v).is_err());
    }

    #[test]
    fn theorem_cases() {
        assert_eq!(exp("su(2,3)", &[2]), vec![false]);
        assert_eq!(exp("su(2,3)", &[1]), vec![true]);
        assert_eq!(exp("su(2,3)", &[3]), vec![false]);
        assert_eq!(exp("su(1,3)", &[2]), vec![true]);
        assert_eq!(exp("su(1,3)", &[1]), vec![false]);
        assert_eq!(exp("compact-G2", &[1, 2]), vec![true]);
        assert_eq!(exp("sl(3,R)", &[1]), vec![false]);
        assert_eq!(exp("sl(3,R)", &[]), vec![true]);
        assert_eq!(exp("EIII", &[3, 4]), vec![true]);
        assert_eq!(exp("EIII", &[2]), vec![false]);
        assert_eq!(exp("FII", &[1, 2]), vec![true]);
        assert_eq!(exp("FII", &[3]), vec![false]);
        // sp(2,3): odd roots below 2p, or the same minus α_{2p-1} plus the tail
        assert_eq!(exp("sp(2,3)", &[1, 3]), vec![true]);
        assert_eq!(exp("sp(2,3)", &[1, 5]), vec![true]);
        assert_eq!(exp("sp(2,3)", &[3, 5]), vec![false]);
        assert_eq!(exp("sp(2,3)", &[2]), vec![false]);
        assert_eq!(exp("sp(1,2)", &[1]), vec![true]);
        assert_eq!(exp("sp(1,2)", &[3]), vec![true]);
        assert_eq!(exp("sp(1,2)", &[2, 3]), vec![false]);
        assert_eq!(exp("sp(1,2)", &[1, 2]), vec![false]);
        assert_eq!(exp("so*(8)", &[1, 2]), vec![true, true]);
        assert_eq!(exp("so*(8)", &[3]), vec![false, true]);
        assert_eq!(exp("so*(10)", &[2]), vec![true, false]);
    }

    #[test]
    fn every_catalog_form_is_covered_or_false() {
        let t = GoldenTable::shipped();
        for d in crate::realform::catalog(8) {
            let r = t.expected(&d, &[1]).unwrap();
            assert!(!r.is_empty());
        }
    }
}
