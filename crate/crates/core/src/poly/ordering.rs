//! Term orderings.
//!
//! [`TermOrdering`] is a serializable descriptor naming variables by
//! identifier. Binding it to a [`Universe`] yields a [`MonomialOrder`], the
//! comparator used in every hot loop.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Term, Universe};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TermOrdering {
    /// Lexicographic; `vars[0]` is the largest variable.
    Lex { vars: Vec<String> },
    /// Total degree, ties by `Lex`.
    DegLex { vars: Vec<String> },
    /// Total degree, ties by the last variable with differing exponent (smaller exponent wins).
    DegRevLex { vars: Vec<String> },
    /// Weighted degree first, then `tiebreak`.
    Weighted {
        weights: BTreeMap<String, u64>,
        tiebreak: Box<TermOrdering>,
    },
    /// Block order: compare the `block` part with `inner`, then the rest with `outer`.
    Elimination {
        block: Vec<String>,
        inner: Box<TermOrdering>,
        outer: Box<TermOrdering>,
    },
    /// `(V,W)`-degree first, then the x-parts by `sigma`, then the c-parts by `c_tiebreak`.
    SigmaBar {
        weights: BTreeMap<String, u64>,
        sigma: Box<TermOrdering>,
        c_tiebreak: Box<TermOrdering>,
    },
}

impl TermOrdering {
    pub fn lex<S: AsRef<str>>(vars: &[S]) -> Self {
        TermOrdering::Lex {
            vars: to_strings(vars),
        }
    }

    pub fn deglex<S: AsRef<str>>(vars: &[S]) -> Self {
        TermOrdering::DegLex {
            vars: to_strings(vars),
        }
    }

    pub fn degrevlex<S: AsRef<str>>(vars: &[S]) -> Self {
        TermOrdering::DegRevLex {
            vars: to_strings(vars),
        }
    }

    /// Parse a basic ordering name (`lex`, `deglex`, `degrevlex`) over `vars`.
    pub fn from_name<S: AsRef<str>>(name: &str, vars: &[S]) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "lex" => Ok(Self::lex(vars)),
            "deglex" => Ok(Self::deglex(vars)),
            "degrevlex" | "grevlex" => Ok(Self::degrevlex(vars)),
            other => Err(Error::InvalidArgument(format!("unknown ordering `{other}`"))),
        }
    }

    /// The default ordering on a whole universe (DegRevLex in canonical order).
    pub fn default_for(universe: &Universe) -> Self {
        Self::degrevlex(&universe.names())
    }

    /// All variable names this ordering ranks.
    pub fn covered(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_covered(&mut out);
        out
    }

    fn collect_covered(&self, out: &mut Vec<String>) {
        let mut push = |n: &String| {
            if !out.contains(n) {
                out.push(n.clone());
            }
        };
        match self {
            TermOrdering::Lex { vars }
            | TermOrdering::DegLex { vars }
            | TermOrdering::DegRevLex { vars } => vars.iter().for_each(&mut push),
            TermOrdering::Weighted { weights, tiebreak } => {
                weights.keys().for_each(&mut push);
                tiebreak.collect_covered(out);
            }
            TermOrdering::Elimination { inner, outer, .. } => {
                inner.collect_covered(out);
                outer.collect_covered(out);
            }
            TermOrdering::SigmaBar {
                weights,
                sigma,
                c_tiebreak,
            } => {
                weights.keys().for_each(&mut push);
                sigma.collect_covered(out);
                c_tiebreak.collect_covered(out);
            }
        }
    }

    /// Resolve names against `universe`.
    ///
    /// Every name mentioned must exist in the universe. Universe variables the
    /// ordering does not rank are allowed, but comparing terms that use them
    /// through [`MonomialOrder::compare`] is an error.
    pub fn bind(&self, universe: &Arc<Universe>) -> Result<MonomialOrder> {
        let kind = self.bind_kind(universe)?;
        let mut covered = vec![false; universe.len()];
        for name in self.covered() {
            covered[universe.require(&name)?] = true;
        }
        Ok(MonomialOrder {
            kind,
            covered,
            universe: universe.clone(),
            descriptor: self.clone(),
        })
    }

    /// Like [`bind`](Self::bind) but every universe variable must be ranked.
    pub fn bind_total(&self, universe: &Arc<Universe>) -> Result<MonomialOrder> {
        let ord = self.bind(universe)?;
        if let Some(k) = ord.covered.iter().position(|c| !c) {
            return Err(Error::OrderingDomain(universe.name(k).to_string()));
        }
        Ok(ord)
    }

    fn bind_kind(&self, u: &Universe) -> Result<Kind> {
        let idx = |vars: &[String]| -> Result<Vec<usize>> {
            vars.iter().map(|v| u.require(v)).collect()
        };
        let weights = |w: &BTreeMap<String, u64>| -> Result<Vec<(usize, u64)>> {
            w.iter().map(|(n, &wt)| Ok((u.require(n)?, wt))).collect()
        };
        Ok(match self {
            TermOrdering::Lex { vars } => Kind::Lex(idx(vars)?),
            TermOrdering::DegLex { vars } => Kind::DegLex(idx(vars)?),
            TermOrdering::DegRevLex { vars } => Kind::DegRevLex(idx(vars)?),
            TermOrdering::Weighted { weights: w, tiebreak } => {
                Kind::Weighted(weights(w)?, Box::new(tiebreak.bind_kind(u)?))
            }
            TermOrdering::Elimination {
                block,
                inner,
                outer,
            } => {
                let inner_cov = inner.covered();
                if block.iter().any(|b| !inner_cov.contains(b)) {
                    return Err(Error::InvalidArgument(
                        "elimination inner ordering must rank every block variable".into(),
                    ));
                }
                Kind::Block(vec![inner.bind_kind(u)?, outer.bind_kind(u)?])
            }
            TermOrdering::SigmaBar {
                weights: w,
                sigma,
                c_tiebreak,
            } => Kind::Weighted(
                weights(w)?,
                Box::new(Kind::Block(vec![
                    sigma.bind_kind(u)?,
                    c_tiebreak.bind_kind(u)?,
                ])),
            ),
        })
    }
}

fn to_strings<S: AsRef<str>>(v: &[S]) -> Vec<String> {
    v.iter().map(|s| s.as_ref().to_string()).collect()
}

#[derive(Debug, Clone)]
enum Kind {
    Lex(Vec<usize>),
    DegLex(Vec<usize>),
    DegRevLex(Vec<usize>),
    Weighted(Vec<(usize, u64)>, Box<Kind>),
    Block(Vec<Kind>),
}

impl Kind {
    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            Kind::Lex(vars) => lex(vars, a, b),
            Kind::DegLex(vars) => deg(vars, a, b).then_with(|| lex(vars, a, b)),
            Kind::DegRevLex(vars) => deg(vars, a, b).then_with(|| {
                for &v in vars.iter().rev() {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
            Kind::Weighted(w, tie) => {
                let wa: u64 = w.iter().map(|&(v, wt)| wt * a[v] as u64).sum();
                let wb: u64 = w.iter().map(|&(v, wt)| wt * b[v] as u64).sum();
                wa.cmp(&wb).then_with(|| tie.cmp(a, b))
            }
            Kind::Block(parts) => {
                for p in parts {
                    match p.cmp(a, b) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

fn lex(vars: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &v in vars {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn deg(vars: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = vars.iter().map(|&v| a[v] as u64).sum();
    let db: u64 = vars.iter().map(|&v| b[v] as u64).sum();
    da.cmp(&db)
}

/// A term ordering bound to a universe.
#[derive(Debug, Clone)]
pub struct MonomialOrder {
    kind: Kind,
    covered: Vec<bool>,
    universe: Arc<Universe>,
    descriptor: TermOrdering,
}

impl MonomialOrder {
    /// Unchecked comparison; both terms must live in the bound universe.
    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.kind.cmp(a.exponents(), b.exponents())
    }

    /// Checked comparison: errors if a term uses a variable the ordering does not rank.
    pub fn compare(&self, a: &Term, b: &Term) -> Result<Ordering> {
        for t in [a, b] {
            if t.nvars() != self.universe.len() {
                return Err(Error::UniverseMismatch(
                    "term length differs from the ordering's universe".into(),
                ));
            }
            if let Some((k, _)) = t.support().find(|&(k, _)| !self.covered[k]) {
                return Err(Error::OrderingDomain(self.universe.name(k).to_string()));
            }
        }
        Ok(self.cmp(a, b))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn descriptor(&self) -> &TermOrdering {
        &self.descriptor
    }

    pub fn is_total(&self) -> bool {
        self.covered.iter().all(|&c| c)
    }
}

/// Compare two terms under a descriptor, binding it to `universe` on the fly.
pub fn compare(
    ord: &TermOrdering,
    universe: &Arc<Universe>,
    t: &Term,
    u: &Term,
) -> Result<Ordering> {
    ord.bind(universe)?.compare(t, u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<Universe> {
        Universe::with_x(&["x", "y"]).unwrap()
    }

    fn t(e: &[u32]) -> Term {
        Term::from_exponents(e.to_vec())
    }

    #[test]
    fn degrevlex_xy_beats_y_squared() {
        let u = xy();
        let ord = TermOrdering::degrevlex(&["x", "y"]);
        assert_eq!(compare(&ord, &u, &t(&[1, 1]), &t(&[0, 2])).unwrap(), Ordering::Greater);
        assert_eq!(compare(&ord, &u, &t(&[2, 0]), &t(&[1, 1])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let u = xy();
        let ord = TermOrdering::lex(&["x", "y"]);
        assert_eq!(compare(&ord, &u, &t(&[1, 0]), &t(&[0, 3])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn reflexive() {
        let u = xy();
        for ord in [
            TermOrdering::lex(&["x", "y"]),
            TermOrdering::deglex(&["y", "x"]),
            TermOrdering::degrevlex(&["x", "y"]),
        ] {
            assert_eq!(compare(&ord, &u, &t(&[3, 1]), &t(&[3, 1])).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn uncovered_variable_is_a_domain_error() {
        let u = Universe::with_x(&["x", "y", "z"]).unwrap();
        let ord = TermOrdering::lex(&["x", "y"]);
        let err = compare(&ord, &u, &t(&[0, 0, 1]), &t(&[1, 0, 0])).unwrap_err();
        assert_eq!(err, Error::OrderingDomain("z".into()));
        assert!(compare(&ord, &u, &t(&[0, 1, 0]), &t(&[1, 0, 0])).is_ok());
        assert!(ord.bind_total(&u).is_err());
    }

    #[test]
    fn unknown_name_fails_to_bind() {
        let ord = TermOrdering::lex(&["x", "w"]);
        assert_eq!(ord.bind(&xy()).unwrap_err(), Error::UnknownVariable("w".into()));
    }

    #[test]
    fn sigma_bar_prefers_x_part_at_equal_weight() {
        // x, y and c with V = (1,1), W(c) = 1: x*1 vs c*1 at degree 1.
        let u = Universe::with_blocks(&["x", "y"], &[(1, 1)], None).unwrap();
        let mut w = BTreeMap::new();
        w.insert("x".to_string(), 1);
        w.insert("y".to_string(), 1);
        w.insert("c[1,1]".to_string(), 1);
        let ord = TermOrdering::SigmaBar {
            weights: w,
            sigma: Box::new(TermOrdering::deglex(&["x", "y"])),
            c_tiebreak: Box::new(TermOrdering::degrevlex(&["c[1,1]"])),
        }
        .bind_total(&u)
        .unwrap();
        assert_eq!(ord.cmp(&t(&[1, 0, 0]), &t(&[0, 0, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&t(&[0, 1, 0]), &t(&[0, 0, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&t(&[0, 0, 2]), &t(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn descriptor_json_round_trip() {
        let ord = TermOrdering::Elimination {
            block: vec!["y".into()],
            inner: Box::new(TermOrdering::degrevlex(&["y"])),
            outer: Box::new(TermOrdering::degrevlex(&["x"])),
        };
        let s = serde_json::to_string(&ord).unwrap();
        assert!(s.contains("\"kind\":\"elimination\""));
        let back: TermOrdering = serde_json::from_str(&s).unwrap();
        assert_eq!(back, ord);
    }
}
