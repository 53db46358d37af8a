use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order_ideal::OrderIdeal;
use crate::poly::{c_name, Term, Universe, VarKind};

use super::vars::SchemeVars;

/// Positive integer weights: `v` on the x-variables, `w` on `S_cO`, `wbar` on `S_O`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightSystem {
    pub v: Vec<u64>,
    pub w: BTreeMap<(usize, usize), u64>,
    pub wbar: BTreeMap<(usize, usize), u64>,
}

impl WeightSystem {
    pub fn deg_v(&self, t: &Term) -> i64 {
        t.exponents()
            .iter()
            .zip(&self.v)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    /// Weight vector for `u`: x-variables get `v`, c-variables `wbar` (or `w`
    /// when `bar` is false), zero where undefined and for the parameter.
    pub fn vector_for(&self, u: &Universe, bar: bool) -> Vec<i64> {
        let c_map = if bar { &self.wbar } else { &self.w };
        let mut x = 0;
        u.vars()
            .iter()
            .map(|var| match var.kind {
                VarKind::X => {
                    x += 1;
                    self.v.get(x - 1).map_or(0, |&w| w as i64)
                }
                VarKind::C { i, j } => c_map.get(&(i, j)).map_or(0, |&w| w as i64),
                VarKind::Param => 0,
            })
            .collect()
    }

    /// Copy with the weight of `c_ij` shifted by `delta` in both `w` and `wbar`.
    pub fn perturbed(&self, key: (usize, usize), delta: i64) -> WeightSystem {
        let mut out = self.clone();
        for map in [&mut out.w, &mut out.wbar] {
            if let Some(w) = map.get_mut(&key) {
                *w = (*w as i64 + delta).max(0) as u64;
            }
        }
        out
    }

    /// Name-keyed view for display and JSON.
    pub fn named(&self, x_names: &[String]) -> NamedWeights {
        NamedWeights {
            v: x_names.iter().cloned().zip(self.v.iter().copied()).collect(),
            w: self.w.iter().map(|(&(i, j), &w)| (c_name(i, j), w)).collect(),
            wbar: self.wbar.iter().map(|(&(i, j), &w)| (c_name(i, j), w)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NamedWeights {
    pub v: BTreeMap<String, u64>,
    pub w: BTreeMap<String, u64>,
    pub wbar: BTreeMap<String, u64>,
}

/// Exponent differences `b_j − t_i` over `S_O`; `V` must pair positively with each.
fn constraints(o: &OrderIdeal, vars: &SchemeVars) -> Vec<Vec<i64>> {
    vars.s_o
        .iter()
        .map(|&(i, j)| {
            let b = o.border()[j - 1].exponents();
            let t = o.terms()[i - 1].exponents();
            b.iter().zip(t).map(|(&x, &y)| x as i64 - y as i64).collect()
        })
        .collect()
}

fn feasible(v: &[i64], cons: &[Vec<i64>]) -> bool {
    cons.iter().all(|d| d.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() > 0)
}

/// Smallest-max-entry search, vectors of equal max in lexicographic order.
fn scan(n: usize, cons: &[Vec<i64>], cap: i64) -> Option<Vec<i64>> {
    for m in 1..=cap {
        let mut v = vec![1i64; n];
        'vectors: loop {
            if v.contains(&m) && feasible(&v, cons) {
                return Some(v);
            }
            let mut k = n;
            loop {
                if k == 0 {
                    break 'vectors;
                }
                k -= 1;
                if v[k] < m {
                    v[k] += 1;
                    v[k + 1..].iter_mut().for_each(|x| *x = 1);
                    break;
                }
            }
        }
    }
    None
}

/// Integer perceptron on the constraints plus positivity of every coordinate.
fn perceptron(n: usize, cons: &[Vec<i64>]) -> Option<Vec<i64>> {
    let mut all = cons.to_vec();
    for k in 0..n {
        let mut e = vec![0; n];
        e[k] = 1;
        all.push(e);
    }
    let mut v = vec![1i64; n];
    for _ in 0..1_000_000 {
        match all.iter().find(|d| d.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>() <= 0) {
            None => return Some(v),
            Some(d) => v.iter_mut().zip(d).for_each(|(x, y)| *x += y),
        }
    }
    None
}

pub(crate) fn find_weights_for(o: &OrderIdeal, vars: &SchemeVars) -> Result<WeightSystem> {
    let n = o.n();
    let cons = constraints(o, vars);
    let cap = (4 * o.mu() as u64 * o.max_degree()).max(1) as i64;
    let v = scan(n, &cons, cap)
        .or_else(|| perceptron(n, &cons))
        .ok_or_else(|| Error::InvariantViolation("no positive weight vector found".into()))?;
    let ws_v: Vec<u64> = v.iter().map(|&x| x as u64).collect();
    let mut ws = WeightSystem {
        v: ws_v,
        w: BTreeMap::new(),
        wbar: BTreeMap::new(),
    };
    for &(i, j) in &vars.s_o {
        let d = ws.deg_v(&o.border()[j - 1]) - ws.deg_v(&o.terms()[i - 1]);
        if d <= 0 {
            return Err(Error::InvariantViolation(format!(
                "non-positive weight {d} for {}",
                c_name(i, j)
            )));
        }
        ws.wbar.insert((i, j), d as u64);
        if j <= vars.eta {
            ws.w.insert((i, j), d as u64);
        }
    }
    Ok(ws)
}
