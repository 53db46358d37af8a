//! Buchberger's algorithm with the Gebauer–Möller pair update.

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Term};

use super::row::{reduce_full, Reducer, ReducerChoice, Row};

/// Order in which critical pairs are processed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    /// Smallest total degree of the lcm first, ties in creation order.
    Normal,
    /// Creation order.
    Fifo,
    /// Reverse creation order (most recent pair first).
    Lifo,
    /// Smallest sugar degree first, then as `Normal`.
    Sugar,
}

/// Safety cutoffs. Hitting one is an error, never a truncated answer.
#[derive(Debug, Clone)]
pub struct GbConfig {
    pub max_basis: usize,
    pub max_degree: u64,
    pub max_pairs: usize,
    pub selection: Selection,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_basis: 20_000,
            max_degree: 200,
            max_pairs: 2_000_000,
            selection: Selection::Normal,
        }
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
    degree: u64,
    sugar: u64,
    seq: usize,
}

struct State<'a> {
    ord: &'a MonomialOrder,
    rows: Vec<Row>,
    sugars: Vec<u64>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    seq: usize,
}

impl<'a> State<'a> {
    fn reduce(&self, p: Vec<(Term, crate::poly::Coeff)>) -> Row {
        let reducers: Vec<Reducer<'_>> = self.active.iter().map(|&k| Reducer::new(&self.rows[k])).collect();
        reduce_full(p, &reducers, self.ord, ReducerChoice::First)
    }

    fn spoly(&self, p: &Pair) -> Vec<(Term, crate::poly::Coeff)> {
        let (f, g) = (&self.rows[p.i], &self.rows[p.j]);
        let mf = p.lcm.div(f.lt()).expect("lcm");
        let mg = p.lcm.div(g.lt()).expect("lcm");
        // Both rows are monic: S = mf*f - mg*g with the leading terms cancelled.
        let fa: Vec<_> = f.terms[1..]
            .iter()
            .map(|(t, c)| (t.mul(&mf), c.clone()))
            .collect();
        let one = num_traits::One::one();
        Row::sub_tail(&fa, &one, &mg, &g.terms, self.ord)
    }

    fn update(&mut self, h: usize) {
        let lt_h = self.rows[h].lt().clone();
        let candidates: Vec<usize> = self.active.clone();
        let lcms: Vec<Term> = candidates
            .iter()
            .map(|&g| lt_h.lcm(self.rows[g].lt()))
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        for idx in 0..candidates.len() {
            let g1 = candidates[idx];
            if lt_h.is_coprime(self.rows[g1].lt()) {
                kept.push(idx);
                continue;
            }
            let l1 = &lcms[idx];
            let dominated = (idx + 1..candidates.len())
                .chain(kept.iter().copied())
                .any(|k| lcms[k].divides(l1));
            if !dominated {
                kept.push(idx);
            }
        }
        let rows = &self.rows;
        self.pairs.retain(|p| {
            !(lt_h.divides(&p.lcm)
                && rows[p.i].lt().lcm(&lt_h) != p.lcm
                && lt_h.lcm(rows[p.j].lt()) != p.lcm)
        });
        for idx in kept {
            let g = candidates[idx];
            if lt_h.is_coprime(self.rows[g].lt()) {
                continue;
            }
            let lcm = lcms[idx].clone();
            let sugar = (self.sugars[g] + lcm.degree() - self.rows[g].lt().degree())
                .max(self.sugars[h] + lcm.degree() - lt_h.degree());
            self.pairs.push(Pair {
                i: g,
                j: h,
                degree: lcm.degree(),
                sugar,
                lcm,
                seq: self.seq,
            });
            self.seq += 1;
        }
        let rows = &self.rows;
        self.active.retain(|&g| !lt_h.divides(rows[g].lt()));
        self.active.push(h);
    }

    fn take_pair(&mut self, sel: Selection) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let k = match sel {
            Selection::Normal => (0..self.pairs.len())
                .min_by_key(|&k| (self.pairs[k].degree, self.pairs[k].seq))
                .unwrap(),
            Selection::Fifo => (0..self.pairs.len())
                .min_by_key(|&k| self.pairs[k].seq)
                .unwrap(),
            Selection::Lifo => (0..self.pairs.len())
                .max_by_key(|&k| self.pairs[k].seq)
                .unwrap(),
            Selection::Sugar => (0..self.pairs.len())
                .min_by_key(|&k| (self.pairs[k].sugar, self.pairs[k].degree, self.pairs[k].seq))
                .unwrap(),
        };
        Some(self.pairs.swap_remove(k))
    }

    /// Add a nonzero reduced row; returns `true` if it is a unit.
    fn insert(&mut self, mut row: Row, sugar: u64, cfg: &GbConfig) -> Result<bool> {
        row.make_monic();
        let sugar = sugar.max(row.terms.iter().map(|(t, _)| t.degree()).max().unwrap_or(0));
        self.sugars.push(sugar);
        if row.is_constant() {
            self.rows.push(row);
            return Ok(true);
        }
        self.rows.push(row);
        let h = self.rows.len() - 1;
        self.update(h);
        if self.active.len() > cfg.max_basis {
            return Err(Error::ResourceLimit {
                cutoff: "max_basis",
                limit: cfg.max_basis,
            });
        }
        Ok(false)
    }
}

/// The reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// decreasing leading term. Generators must share the ordering's universe.
pub fn reduced_groebner_basis(
    gens: &[Polynomial],
    ord: &MonomialOrder,
    cfg: &GbConfig,
) -> Result<Vec<Polynomial>> {
    let u = ord.universe().clone();
    for g in gens {
        if !crate::poly::Universe::same(g.universe(), &u) {
            return Err(Error::UniverseMismatch(
                "generator and ordering universes differ".into(),
            ));
        }
    }
    if !ord.is_total() {
        return Err(Error::OrderingDomain(
            "ordering does not rank every variable of the universe".into(),
        ));
    }
    let rows = gb_rows(gens, ord, cfg)?;
    Ok(rows.iter().map(|r| r.to_poly(&u)).collect())
}

pub(crate) fn gb_rows(gens: &[Polynomial], ord: &MonomialOrder, cfg: &GbConfig) -> Result<Vec<Row>> {
    let mut st = State {
        ord,
        rows: Vec::new(),
        sugars: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        seq: 0,
    };
    let unit = |st: &State| vec![st.rows.last().unwrap().clone()];
    for g in gens {
        let row = st.reduce(Row::from_poly(g, ord).terms);
        if row.is_zero() {
            continue;
        }
        if st.insert(row, 0, cfg)? {
            return Ok(unit(&st));
        }
    }
    let mut processed = 0usize;
    while let Some(pair) = st.take_pair(cfg.selection) {
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(Error::ResourceLimit {
                cutoff: "max_pairs",
                limit: cfg.max_pairs,
            });
        }
        if pair.degree > cfg.max_degree {
            return Err(Error::ResourceLimit {
                cutoff: "max_degree",
                limit: cfg.max_degree as usize,
            });
        }
        let s = st.spoly(&pair);
        let h = st.reduce(s);
        if h.is_zero() {
            continue;
        }
        if st.insert(h, pair.sugar, cfg)? {
            return Ok(unit(&st));
        }
    }
    // Inter-reduce the minimal basis.
    let mut active = st.active.clone();
    active.sort_by(|&a, &b| ord.cmp(st.rows[b].lt(), st.rows[a].lt()));
    let mut out = Vec::with_capacity(active.len());
    for (pos, &k) in active.iter().enumerate() {
        let others: Vec<Reducer<'_>> = active
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos)
            .map(|(_, &o)| Reducer::new(&st.rows[o]))
            .collect();
        let row = &st.rows[k];
        let tail = reduce_full(row.terms[1..].to_vec(), &others, ord, ReducerChoice::First);
        let mut terms = vec![row.terms[0].clone()];
        terms.extend(tail.terms);
        let mut r = Row { terms };
        r.make_monic();
        out.push(r);
    }
    Ok(out)
}
