//! Krull dimension by splitting on coefficients of linearly occurring variables.
//!
//! A generator `a*v + b` with `v` absent from `a` and `b` splits the variety into
//! the piece where `a` vanishes and the piece where `a` is invertible. On the
//! second piece `v = -b/a`, so `v` disappears from the ring after clearing
//! denominators. The recursion tracks the polynomials that are assumed nonzero.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Coeff, Polynomial, Term, TermOrdering, Universe, Variable};

use super::buchberger::GbConfig;
use super::elim::linear_preprocess;
use super::ideal::{divide, Ideal};
use super::monomial::leading_term_ideal;

const MAX_DEPTH: usize = 64;

/// Krull dimension of `ideal`, splitting the variety along linear variables
/// before falling back to a Gröbner basis. Errors on the unit ideal.
pub fn krull_dimension_split(ideal: &Ideal, cfg: &GbConfig) -> Result<usize> {
    let mut best = None;
    dim_rec(ideal.universe(), ideal.nonzero_generators(), Vec::new(), cfg, 0, &mut best)?;
    best.ok_or(Error::UnitIdeal)
}

/// `p` as a polynomial in `v`: entry `k` is the coefficient of `v^k`.
fn coefficients_in(p: &Polynomial, v: usize) -> Vec<Polynomial> {
    let u = p.universe();
    let mut parts: Vec<Vec<(Term, Coeff)>> = Vec::new();
    for (t, c) in p.terms() {
        let k = t.exp(v) as usize;
        if parts.len() <= k {
            parts.resize_with(k + 1, Vec::new);
        }
        let mut e = t.exponents().to_vec();
        e[v] = 0;
        parts[k].push((Term::from_exponents(e), c.clone()));
    }
    parts.into_iter().map(|ts| Polynomial::from_terms(u, ts)).collect()
}

/// Numerator of `p(v = -b/a)`, scaled by `a^deg_v(p)`.
fn clear_substitute(p: &Polynomial, v: usize, a: &Polynomial, minus_b: &Polynomial) -> Polynomial {
    let parts = coefficients_in(p, v);
    let d = parts.len().saturating_sub(1) as u32;
    let mut out = Polynomial::zero(p.universe());
    for (k, h) in parts.iter().enumerate() {
        if h.is_zero() {
            continue;
        }
        let term = &(h * &minus_b.pow(k as u32)) * &a.pow(d - k as u32);
        out = &out + &term;
    }
    out
}

/// The generator and variable to split on: `v` of degree one in `g`, with the
/// simplest coefficient.
fn pick_split(gens: &[Polynomial]) -> Option<(usize, usize, Polynomial, Polynomial)> {
    let mut best: Option<((u64, usize, usize, usize), usize, usize)> = None;
    for (gi, g) in gens.iter().enumerate() {
        for v in g.variables() {
            if g.terms().any(|(t, _)| t.exp(v) > 1) {
                continue;
            }
            let parts = coefficients_in(g, v);
            let a = &parts[1];
            let key = (a.total_degree().unwrap_or(0), a.len(), g.len(), v);
            if best.as_ref().is_none_or(|b| key < b.0) {
                best = Some((key, gi, v));
            }
        }
    }
    best.map(|(_, gi, v)| {
        let mut parts = coefficients_in(&gens[gi], v);
        let a = parts.pop().expect("degree one");
        let b = parts.pop().expect("constant part");
        (gi, v, a, b)
    })
}

fn normalize(gens: Vec<Polynomial>) -> Option<Vec<Polynomial>> {
    let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.is_constant() {
            return None;
        }
        if !out.contains(&g) {
            out.push(g);
        }
    }
    Some(out)
}

fn dim_rec(
    u: &Arc<Universe>,
    gens: Vec<Polynomial>,
    inverted: Vec<Polynomial>,
    cfg: &GbConfig,
    depth: usize,
    best: &mut Option<usize>,
) -> Result<()> {
    if depth > MAX_DEPTH {
        return Err(Error::ResourceLimit {
            cutoff: "split_depth",
            limit: MAX_DEPTH,
        });
    }
    let Some(gens) = normalize(gens) else { return Ok(()) };
    if inverted.iter().any(|f| f.is_zero()) {
        return Ok(());
    }
    let red = linear_preprocess(&Ideal::new(u, gens)?)?;
    let target = red.residual.universe().clone();
    let rules: HashMap<usize, Polynomial> = red
        .eliminated
        .iter()
        .map(|(v, p)| Ok((u.require(v)?, p.rebase(u)?)))
        .collect::<Result<_>>()?;
    let mut inv = Vec::with_capacity(inverted.len());
    for f in &inverted {
        let g = f.substitute(&rules)?.rebase(&target)?;
        if g.is_zero() {
            return Ok(());
        }
        if !g.is_constant() && !inv.contains(&g) {
            inv.push(g);
        }
    }
    let Some(gens) = normalize(red.residual.generators().to_vec()) else { return Ok(()) };
    let n = target.len();
    if best.is_some_and(|b| b >= n) {
        return Ok(());
    }
    if gens.is_empty() {
        *best = Some(best.map_or(n, |b| b.max(n)));
        return Ok(());
    }
    let Some((gi, v, a, b)) = pick_split(&gens) else {
        return fallback(&target, gens, inv, cfg, best);
    };
    let a_rest = strip_units(&a, &inv)?;
    // Piece where `a` is invertible: eliminate `v`.
    let minus_b = -&b;
    let rest = target.restrict(|var| var.name != target.name(v));
    let mut local = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        if k != gi {
            local.push(clear_substitute(g, v, &a, &minus_b).rebase(&rest)?);
        }
    }
    let mut local_inv = Vec::with_capacity(inv.len() + 1);
    for f in &inv {
        local_inv.push(clear_substitute(f, v, &a, &minus_b).rebase(&rest)?);
    }
    if let Some(r) = &a_rest {
        local_inv.push(r.rebase(&rest)?);
    }
    dim_rec(&rest, local, local_inv, cfg, depth + 1, best)?;
    // Piece where `a` vanishes, of dimension below `n`.
    if let Some(r) = a_rest {
        if best.is_none_or(|d| d + 1 < n) {
            let mut zero = gens;
            zero[gi] = b;
            zero.push(r);
            dim_rec(&target, zero, inv, cfg, depth + 1, best)?;
        }
    }
    Ok(())
}

/// `a` with every factor from `inv` divided out, or `None` when nothing but a
/// constant remains.
fn strip_units(a: &Polynomial, inv: &[Polynomial]) -> Result<Option<Polynomial>> {
    let ord = TermOrdering::default_for(a.universe());
    let mut a = a.clone();
    loop {
        if a.is_constant() {
            return Ok(None);
        }
        let mut reduced = false;
        for f in inv {
            let (q, r) = divide(&a, std::slice::from_ref(f), &ord)?;
            if r.is_zero() {
                a = q.into_iter().next().expect("one quotient");
                reduced = true;
            }
        }
        if !reduced {
            return Ok(Some(a));
        }
    }
}

/// `dim(V(gens) ∩ D(∏ inv))`, read off `gens + (z*∏inv - 1)` whose variety is isomorphic.
fn fallback(
    u: &Arc<Universe>,
    mut gens: Vec<Polynomial>,
    inv: Vec<Polynomial>,
    cfg: &GbConfig,
    best: &mut Option<usize>,
) -> Result<()> {
    let ring = if inv.is_empty() {
        u.clone()
    } else {
        let mut name = String::from("z");
        while u.index_of(&name).is_some() {
            name.push('z');
        }
        let ring = u.extend(vec![Variable::x(name.clone())])?;
        let z = Polynomial::var(&ring, ring.require(&name)?);
        let mut prod = Polynomial::one(&ring);
        for f in &inv {
            prod = &prod * &f.rebase(&ring)?;
        }
        gens = gens.iter().map(|g| g.rebase(&ring)).collect::<Result<_>>()?;
        gens.push(&(&z * &prod) - &Polynomial::constant(&ring, Coeff::one()));
        ring
    };
    let lt = leading_term_ideal(&Ideal::new(&ring, gens)?, &TermOrdering::default_for(&ring), cfg)?;
    if lt.is_unit() {
        return Ok(());
    }
    let d = lt.krull_dimension()?;
    *best = Some(best.map_or(d, |b| b.max(d)));
    Ok(())
}
