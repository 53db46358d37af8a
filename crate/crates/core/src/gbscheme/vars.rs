use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::order_ideal::OrderIdeal;
use crate::poly::{MonomialOrder, TermOrdering};

/// Split of the coefficient grid by whether `b_j >_σ t_i`. Keys are 1-based `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchemeVars {
    pub mu: usize,
    pub nu: usize,
    pub eta: usize,
    pub s_o: BTreeSet<(usize, usize)>,
    pub l_o: BTreeSet<(usize, usize)>,
    pub s_co: BTreeSet<(usize, usize)>,
    pub l_co: BTreeSet<(usize, usize)>,
}

impl SchemeVars {
    pub fn new(o: &OrderIdeal, sigma: &MonomialOrder) -> Self {
        let mut v = SchemeVars {
            mu: o.mu(),
            nu: o.nu(),
            eta: o.eta(),
            s_o: BTreeSet::new(),
            l_o: BTreeSet::new(),
            s_co: BTreeSet::new(),
            l_co: BTreeSet::new(),
        };
        for (j, b) in o.border().iter().enumerate() {
            for (i, t) in o.terms().iter().enumerate() {
                let key = (i + 1, j + 1);
                let corner = j < o.eta();
                if sigma.cmp(b, t).is_gt() {
                    v.s_o.insert(key);
                    if corner {
                        v.s_co.insert(key);
                    }
                } else {
                    v.l_o.insert(key);
                    if corner {
                        v.l_co.insert(key);
                    }
                }
            }
        }
        v
    }

    /// `s(cO, σ)`.
    pub fn s(&self) -> usize {
        self.s_co.len()
    }

    pub fn in_s(&self, i: usize, j: usize) -> bool {
        self.s_o.contains(&(i, j))
    }

    /// Keys of `S_O` outside the corner columns.
    pub fn non_corner_s(&self) -> impl Iterator<Item = &(usize, usize)> + '_ {
        self.s_o.iter().filter(move |&&(_, j)| j > self.eta)
    }

    /// Keys sorted by `(j, i)`, the canonical variable order.
    pub fn sorted(keys: &BTreeSet<(usize, usize)>) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = keys.iter().copied().collect();
        v.sort_by_key(|&(i, j)| (j, i));
        v
    }
}

/// The split for `(O, σ)`; `σ` must rank every x-variable.
pub fn split_variables(o: &OrderIdeal, sigma: &TermOrdering) -> Result<SchemeVars> {
    let ord = sigma.bind_total(o.universe())?;
    Ok(SchemeVars::new(o, &ord))
}
