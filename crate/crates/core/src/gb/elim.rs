use std::collections::{HashMap, HashSet};

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Coeff, Polynomial, Term, TermOrdering};

use super::buchberger::GbConfig;
use super::ideal::Ideal;

/// `I ∩ K[keep]` via a block ordering that ranks the eliminated variables first.
///
/// The result lives in the sub-universe spanned by `keep`.
pub fn eliminate(ideal: &Ideal, keep: &[usize], cfg: &GbConfig) -> Result<Ideal> {
    let u = ideal.universe();
    let keep_set: HashSet<usize> = keep.iter().copied().collect();
    if let Some(&k) = keep.iter().find(|&&k| k >= u.len()) {
        return Err(Error::UnknownVariable(format!("variable index {k}")));
    }
    let target = u.restrict(|v| keep_set.contains(&u.index_of(&v.name).unwrap()));
    let dropped: Vec<String> = (0..u.len())
        .filter(|k| !keep_set.contains(k))
        .map(|k| u.name(k).to_string())
        .collect();
    if dropped.is_empty() {
        return Ideal::rebased(&target, &ideal.nonzero_generators());
    }
    let kept: Vec<String> = target.names();
    let ord = TermOrdering::Elimination {
        block: dropped.clone(),
        inner: Box::new(TermOrdering::degrevlex(&dropped)),
        outer: Box::new(TermOrdering::degrevlex(&kept)),
    };
    let gb = ideal.groebner_basis(&ord, cfg)?;
    let gens: Vec<Polynomial> = gb
        .polys()
        .iter()
        .filter(|p| p.variables().iter().all(|k| keep_set.contains(k)))
        .cloned()
        .collect();
    Ideal::rebased(&target, &gens)
}

/// Ideal generated by the generators of `ideal` after substituting every
/// rule `var → f`. Rule right sides may not mention any ruled variable.
///
/// The result lives in the universe with the ruled variables removed.
pub fn substitution_eliminate(ideal: &Ideal, rules: &HashMap<usize, Polynomial>) -> Result<Ideal> {
    let u = ideal.universe();
    for (v, f) in rules {
        if *v >= u.len() {
            return Err(Error::UnknownVariable(format!("variable index {v}")));
        }
        if let Some(w) = f.variables().into_iter().find(|w| rules.contains_key(w)) {
            return Err(Error::MalformedRules(format!(
                "rule for {} mentions eliminated variable {}",
                u.name(*v),
                u.name(w)
            )));
        }
    }
    let target = u.restrict(|var| !rules.contains_key(&u.index_of(&var.name).unwrap()));
    let mut gens = Vec::new();
    for g in ideal.generators() {
        let s = g.substitute(rules)?;
        if !s.is_zero() {
            gens.push(s.rebase(&target)?);
        }
    }
    Ideal::new(&target, gens)
}

/// Outcome of repeatedly solving generators that are linear in some variable.
#[derive(Debug, Clone)]
pub struct LinearReduction {
    /// The remaining ideal over the surviving variables.
    pub residual: Ideal,
    /// Eliminated variables with their values in terms of the survivors, in elimination order.
    pub eliminated: Vec<(String, Polynomial)>,
}

/// Repeatedly pick a generator containing a term `a·c` where the variable `c`
/// occurs in no other term, solve for `c`, and substitute everywhere.
///
/// Among candidates, the one whose solution has the smallest total degree wins,
/// then the shortest generator, then the smallest variable index.
pub fn linear_preprocess(ideal: &Ideal) -> Result<LinearReduction> {
    let u = ideal.universe().clone();
    let mut gens = ideal.nonzero_generators();
    let mut solved: Vec<(usize, Polynomial)> = Vec::new();
    loop {
        let mut best: Option<((u64, usize, usize), usize, usize, Coeff)> = None;
        for (gi, g) in gens.iter().enumerate() {
            for (t, c) in g.terms() {
                if t.degree() != 1 {
                    continue;
                }
                let v = t.support().next().unwrap().0;
                let occurrences = g.terms().filter(|(s, _)| s.uses(v)).count();
                if occurrences != 1 {
                    continue;
                }
                let rest_deg = g
                    .terms()
                    .filter(|(s, _)| *s != t)
                    .map(|(s, _)| s.degree())
                    .max()
                    .unwrap_or(0);
                let key = (rest_deg, g.len(), v);
                if best.as_ref().is_none_or(|b| key < b.0) {
                    best = Some((key, gi, v, c.clone()));
                }
            }
        }
        let Some((_, gi, v, a)) = best else { break };
        let g = gens.swap_remove(gi);
        let vt = Term::var(u.len(), v, 1);
        let rest = &g - &Polynomial::monomial(&u, vt, a.clone());
        let value = rest.scale(&(-Coeff::one() / a));
        let rule: HashMap<usize, Polynomial> = [(v, value.clone())].into_iter().collect();
        let mut next = Vec::with_capacity(gens.len());
        for h in &gens {
            let s = h.substitute(&rule)?;
            if !s.is_zero() && !next.contains(&s) {
                next.push(s);
            }
        }
        gens = next;
        for (_, w) in solved.iter_mut() {
            *w = w.substitute(&rule)?;
        }
        solved.push((v, value));
    }
    let gone: HashSet<usize> = solved.iter().map(|(v, _)| *v).collect();
    let target = u.restrict(|var| !gone.contains(&u.index_of(&var.name).unwrap()));
    let residual = Ideal::rebased(&target, &gens)?;
    let eliminated = solved
        .into_iter()
        .map(|(v, p)| Ok((u.name(v).to_string(), p.rebase(&target)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearReduction { residual, eliminated })
}
