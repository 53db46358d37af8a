//! Polynomials as term lists sorted decreasingly under a fixed ordering.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::poly::{Coeff, MonomialOrder, Polynomial, Term, Universe};

#[derive(Clone, Debug)]
pub(crate) struct Row {
    pub terms: Vec<(Term, Coeff)>,
}

impl Row {
    pub fn from_poly(p: &Polynomial, ord: &MonomialOrder) -> Row {
        let mut terms: Vec<(Term, Coeff)> = p.terms().map(|(t, c)| (t.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Row { terms }
    }

    pub fn to_poly(&self, u: &Arc<Universe>) -> Polynomial {
        Polynomial::from_terms(u, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lt(&self) -> &Term {
        &self.terms[0].0
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
    }

    /// `a - factor * mult * g[1..]`, i.e. the result of cancelling a term equal to
    /// `factor * mult * lt(g)` that was already removed from `a`.
    pub fn sub_tail(
        a: &[(Term, Coeff)],
        factor: &Coeff,
        mult: &Term,
        g: &[(Term, Coeff)],
        ord: &MonomialOrder,
    ) -> Vec<(Term, Coeff)> {
        let mut out = Vec::with_capacity(a.len() + g.len());
        let mut ia = 0;
        let mut ib = 1;
        let mut bt: Option<Term> = g.get(1).map(|(t, _)| t.mul(mult));
        while ia < a.len() || bt.is_some() {
            let order = match (&bt, a.get(ia)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some(b), Some((ta, _))) => ord.cmp(ta, b),
            };
            match order {
                Ordering::Greater => {
                    out.push(a[ia].clone());
                    ia += 1;
                }
                Ordering::Less => {
                    let c = -(factor * &g[ib].1);
                    out.push((bt.take().unwrap(), c));
                    ib += 1;
                    bt = g.get(ib).map(|(t, _)| t.mul(mult));
                }
                Ordering::Equal => {
                    let c = &a[ia].1 - factor * &g[ib].1;
                    if !c.is_zero() {
                        out.push((a[ia].0.clone(), c));
                    }
                    ia += 1;
                    ib += 1;
                    bt = g.get(ib).map(|(t, _)| t.mul(mult));
                }
            }
        }
        out
    }
}

/// A reducer with cached leading-term data.
pub(crate) struct Reducer<'a> {
    pub row: &'a Row,
    pub mask: u64,
}

impl<'a> Reducer<'a> {
    pub fn new(row: &'a Row) -> Self {
        Reducer {
            mask: row.lt().mask(),
            row,
        }
    }

    #[inline]
    pub fn divides(&self, t: &Term, tmask: u64) -> bool {
        self.mask & !tmask == 0 && self.row.lt().divides(t)
    }
}

/// How to pick among several reducers whose leading terms divide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReducerChoice {
    First,
    Last,
}

/// Full reduction of `p` (every term, not just the leading one).
pub(crate) fn reduce_full(
    mut p: Vec<(Term, Coeff)>,
    reducers: &[Reducer<'_>],
    ord: &MonomialOrder,
    choice: ReducerChoice,
) -> Row {
    let mut rem = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (t, c) = &p[start];
        let m = t.mask();
        let found = match choice {
            ReducerChoice::First => reducers.iter().find(|r| r.divides(t, m)),
            ReducerChoice::Last => reducers.iter().rev().find(|r| r.divides(t, m)),
        };
        match found {
            Some(r) => {
                let g = &r.row.terms;
                let mult = t.div(&g[0].0).expect("divides");
                let factor = c / &g[0].1;
                p = Row::sub_tail(&p[start + 1..], &factor, &mult, g, ord);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    Row { terms: rem }
}

/// Multivariate division: returns `(quotients, remainder)` with
/// `f = sum q_i d_i + r`; the first divisor whose leading term divides wins.
pub(crate) fn divide_rows(
    f: &Row,
    divisors: &[Row],
    ord: &MonomialOrder,
) -> (Vec<Vec<(Term, Coeff)>>, Row) {
    let reducers: Vec<Reducer<'_>> = divisors.iter().map(Reducer::new).collect();
    let mut quotients: Vec<Vec<(Term, Coeff)>> = vec![Vec::new(); divisors.len()];
    let mut p = f.terms.clone();
    let mut rem = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (t, c) = &p[start];
        let m = t.mask();
        match reducers.iter().position(|r| r.divides(t, m)) {
            Some(k) => {
                let g = &divisors[k].terms;
                let mult = t.div(&g[0].0).expect("divides");
                let factor = c / &g[0].1;
                quotients[k].push((mult.clone(), factor.clone()));
                p = Row::sub_tail(&p[start + 1..], &factor, &mult, g, ord);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    (quotients, Row { terms: rem })
}
