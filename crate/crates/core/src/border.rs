//! Generic border prebases, formal multiplication matrices and the border basis scheme.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gb::{GbConfig, Ideal};
use crate::linalg::{self, Matrix};
use crate::order_ideal::{OrderIdeal, Target};
use crate::poly::text::{format_coeff, parse_coeff};
use crate::poly::{Coeff, Polynomial, Term, TermOrdering, Universe};

/// A `μ×μ` matrix of polynomials in the c-variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericMatrix {
    pub entries: Vec<Vec<Polynomial>>,
}

impl GenericMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r][c]
    }

    pub fn mul(&self, other: &GenericMatrix) -> GenericMatrix {
        let n = self.size();
        let u = self.entries[0][0].universe().clone();
        let mut entries = vec![vec![Polynomial::zero(&u); n]; n];
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                let mut acc = Polynomial::zero(&u);
                for k in 0..n {
                    let (a, b) = (&self.entries[r][k], &other.entries[k][c]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                *cell = acc;
            }
        }
        GenericMatrix { entries }
    }

    pub fn sub(&self, other: &GenericMatrix) -> GenericMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(a, b)| a - b).collect())
            .collect();
        GenericMatrix { entries }
    }

    /// Substitute numeric values for the c-variables.
    pub fn evaluate(&self, values: &HashMap<usize, Coeff>) -> Matrix {
        self.entries
            .iter()
            .map(|row| row.iter().map(|p| p.evaluate(values)).collect())
            .collect()
    }
}

impl fmt::Display for GenericMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// An assignment `c_ij → a_ij`; absent coordinates are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchemePoint {
    values: BTreeMap<(usize, usize), Coeff>,
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    c: BTreeMap<String, String>,
}

impl SchemePoint {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_map(values: impl IntoIterator<Item = ((usize, usize), Coeff)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), v) in values {
            p.set(i, j, v);
        }
        p
    }

    /// `a_ij` (1-based indices).
    pub fn get(&self, i: usize, j: usize) -> Coeff {
        self.values.get(&(i, j)).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Coeff) {
        if v.is_zero() {
            self.values.remove(&(i, j));
        } else {
            self.values.insert((i, j), v);
        }
    }

    /// Nonzero coordinates.
    pub fn nonzero(&self) -> impl Iterator<Item = (&(usize, usize), &Coeff)> {
        self.values.iter()
    }

    pub fn is_origin(&self) -> bool {
        self.values.is_empty()
    }

    /// Errors if a coordinate lies outside the `μ×ν` grid.
    pub fn check_grid(&self, mu: usize, nu: usize) -> Result<()> {
        match self.values.keys().find(|&&(i, j)| i == 0 || j == 0 || i > mu || j > nu) {
            Some((i, j)) => Err(Error::InvalidArgument(format!(
                "coordinate c[{i},{j}] outside the {mu}x{nu} grid"
            ))),
            None => Ok(()),
        }
    }

    /// Values keyed by variable index in `u`; coordinates missing from `u` are skipped.
    pub fn values_in(&self, u: &Universe) -> HashMap<usize, Coeff> {
        let mut out = HashMap::new();
        for k in u.c_indices() {
            if let crate::poly::VarKind::C { i, j } = u.var(k).kind {
                out.insert(k, self.get(i, j));
            }
        }
        out
    }

    /// Keep only the coordinates accepted by `keep`.
    pub fn restrict(&self, keep: impl Fn(usize, usize) -> bool) -> SchemePoint {
        SchemePoint {
            values: self
                .values
                .iter()
                .filter(|(&(i, j), _)| keep(i, j))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let c = self
            .values
            .iter()
            .map(|(&(i, j), v)| (format!("{i},{j}"), format_coeff(v)))
            .collect();
        serde_json::to_value(PointJson { c }).expect("serializable")
    }

    pub fn to_json_string(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let js: PointJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut p = Self::zero();
        for (key, v) in js.c {
            let bad = || Error::Parse(format!("bad coordinate key `{key}`"));
            let (i, j) = key.split_once(',').ok_or_else(bad)?;
            let i: usize = i.trim().parse().map_err(|_| bad())?;
            let j: usize = j.trim().parse().map_err(|_| bad())?;
            if i == 0 || j == 0 {
                return Err(bad());
            }
            p.set(i, j, parse_coeff(&v)?);
        }
        Ok(p)
    }
}

/// Data shared by every border-scheme construction for a fixed order ideal.
#[derive(Debug, Clone)]
pub struct BorderScheme {
    o: OrderIdeal,
    xc: Arc<Universe>,
    c: Arc<Universe>,
}

impl BorderScheme {
    pub fn new(o: &OrderIdeal) -> Result<Self> {
        let keys: Vec<(usize, usize)> = (1..=o.nu())
            .flat_map(|j| (1..=o.mu()).map(move |i| (i, j)))
            .collect();
        let xc = Universe::with_blocks(&o.universe().names(), &keys, None)?;
        let c = Universe::with_blocks::<&str>(&[], &keys, None)?;
        Ok(BorderScheme {
            o: o.clone(),
            xc,
            c,
        })
    }

    pub fn order_ideal(&self) -> &OrderIdeal {
        &self.o
    }

    /// `x`-variables followed by every `c_ij`.
    pub fn xc_universe(&self) -> &Arc<Universe> {
        &self.xc
    }

    /// The `c_ij` alone.
    pub fn c_universe(&self) -> &Arc<Universe> {
        &self.c
    }

    fn x_term(&self, t: &Term) -> Term {
        let mut e = t.exponents().to_vec();
        e.resize(self.xc.len(), 0);
        Term::from_exponents(e)
    }

    /// `g_j = b_j − Σ_i c_ij t_i` for `j = 1..ν`, over the x+c universe.
    pub fn generic_prebasis(&self) -> Vec<Polynomial> {
        (0..self.o.nu()).map(|j| self.prebasis_element(j, |_| true)).collect()
    }

    /// `b_j − Σ c_ij t_i` over the `i` accepted by `keep` (0-based `j` and `i`).
    pub(crate) fn prebasis_element(&self, j: usize, keep: impl Fn(usize) -> bool) -> Polynomial {
        let u = &self.xc;
        let mut g = Polynomial::monomial(u, self.x_term(&self.o.border()[j]), Coeff::one());
        for (i, t) in self.o.terms().iter().enumerate() {
            if keep(i) {
                let cv = u.c_index(i + 1, j + 1).expect("grid variable");
                let term = self.x_term(t).mul(&Term::var(u.len(), cv, 1));
                g = &g - &Polynomial::monomial(u, term, Coeff::one());
            }
        }
        g
    }

    /// Formal multiplication matrix of `x_k` (0-based `k`) over the c universe.
    pub fn multiplication_matrix(&self, k: usize) -> Result<GenericMatrix> {
        if k >= self.o.n() {
            return Err(Error::InvalidArgument(format!("axis {} out of range", k + 1)));
        }
        let mu = self.o.mu();
        let u = &self.c;
        let mut entries = vec![vec![Polynomial::zero(u); mu]; mu];
        for i in 0..mu {
            match self.o.target(k, i) {
                Target::Interior(r) => entries[r][i] = Polynomial::one(u),
                Target::Border(j) => {
                    for (r, row) in entries.iter_mut().enumerate() {
                        row[i] = Polynomial::var(u, u.c_index(r + 1, j + 1).unwrap());
                    }
                }
            }
        }
        Ok(GenericMatrix { entries })
    }

    pub fn multiplication_matrices(&self) -> Vec<GenericMatrix> {
        (0..self.o.n())
            .map(|k| self.multiplication_matrix(k).expect("axis in range"))
            .collect()
    }

    /// Entries of every commutator `A_k A_l − A_l A_k` (`k < l`), row-major,
    /// with zeros and repeats removed.
    pub fn commutator_generators(&self) -> Vec<Polynomial> {
        let ms = self.multiplication_matrices();
        let mut out: Vec<Polynomial> = Vec::new();
        for k in 0..ms.len() {
            for l in k + 1..ms.len() {
                let d = ms[k].mul(&ms[l]).sub(&ms[l].mul(&ms[k]));
                for row in d.entries {
                    for e in row {
                        if !e.is_zero() && !out.contains(&e) {
                            out.push(e);
                        }
                    }
                }
            }
        }
        out
    }

    /// `I(B_O)` in the c universe.
    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.c, self.commutator_generators()).expect("generators share the universe")
    }

    /// Numeric multiplication matrices at `p`.
    pub fn numeric_matrices(&self, p: &SchemePoint) -> Result<Vec<Matrix>> {
        p.check_grid(self.o.mu(), self.o.nu())?;
        let vals = p.values_in(&self.c);
        Ok(self.multiplication_matrices().iter().map(|m| m.evaluate(&vals)).collect())
    }

    /// The first commutator entry not vanishing at `p`, as `(k, l, row, col)` (0-based).
    pub fn commutator_witness(&self, p: &SchemePoint) -> Result<Option<(usize, usize, usize, usize)>> {
        let ms = self.numeric_matrices(p)?;
        for k in 0..ms.len() {
            for l in k + 1..ms.len() {
                let a = linalg::mul(&ms[k], &ms[l]);
                let b = linalg::mul(&ms[l], &ms[k]);
                for r in 0..a.len() {
                    for c in 0..a.len() {
                        if a[r][c] != b[r][c] {
                            return Ok(Some((k, l, r, c)));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Whether the specialized multiplication matrices commute.
    pub fn is_point(&self, p: &SchemePoint) -> Result<bool> {
        Ok(self.commutator_witness(p)?.is_none())
    }

    /// `b_j − Σ a_ij t_i` in the x universe.
    pub fn specialize(&self, p: &SchemePoint) -> Result<Vec<Polynomial>> {
        p.check_grid(self.o.mu(), self.o.nu())?;
        let u = self.o.universe();
        Ok((0..self.o.nu())
            .map(|j| {
                let mut g = Polynomial::monomial(u, self.o.border()[j].clone(), Coeff::one());
                for (i, t) in self.o.terms().iter().enumerate() {
                    let a = p.get(i + 1, j + 1);
                    if !a.is_zero() {
                        g = &g - &Polynomial::monomial(u, t.clone(), a);
                    }
                }
                g
            })
            .collect())
    }

    /// Decide through a Gröbner basis whether `P = (specialized prebasis) ⊕ ⟨O⟩`.
    pub fn oracle(&self, p: &SchemePoint, cfg: &GbConfig) -> Result<OracleVerdict> {
        let gens = self.specialize(p)?;
        quotient_has_basis(&self.o, &gens, cfg)
    }
}

/// Answer of the Gröbner-basis oracle, with a reason when negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub holds: bool,
    pub diagnostic: Option<String>,
}

impl OracleVerdict {
    fn yes() -> Self {
        OracleVerdict {
            holds: true,
            diagnostic: None,
        }
    }

    fn no(msg: impl Into<String>) -> Self {
        OracleVerdict {
            holds: false,
            diagnostic: Some(msg.into()),
        }
    }
}

/// Whether the residue classes of `O` form a basis of `P/(gens)`.
///
/// The quotient must be zero-dimensional of dimension `μ`, and the normal
/// forms of `t_1..t_μ` must be linearly independent.
pub fn quotient_has_basis(o: &OrderIdeal, gens: &[Polynomial], cfg: &GbConfig) -> Result<OracleVerdict> {
    let u = o.universe();
    let ideal = Ideal::rebased(u, gens)?;
    let gb = ideal.groebner_basis(&TermOrdering::default_for(u), cfg)?;
    if gb.is_unit() {
        return Ok(OracleVerdict::no("the ideal is the unit ideal"));
    }
    let lt = crate::gb::MonomialIdeal::new(u, gb.leading_terms())?;
    let std = match lt.complement() {
        crate::gb::Complement::Infinite => return Ok(OracleVerdict::no("the ideal is not zero-dimensional")),
        crate::gb::Complement::Finite(s) => s,
    };
    if std.len() != o.mu() {
        return Ok(OracleVerdict::no(format!(
            "the quotient has dimension {} instead of {}",
            std.len(),
            o.mu()
        )));
    }
    let col: HashMap<&Term, usize> = std.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut m = linalg::zeros(o.mu(), std.len());
    for (i, t) in o.terms().iter().enumerate() {
        let nf = gb.normal_form(&Polynomial::monomial(u, t.clone(), Coeff::one()))?;
        for (s, c) in nf.terms() {
            m[i][col[s]] = c.clone();
        }
    }
    let r = linalg::rank(m);
    if r != o.mu() {
        return Ok(OracleVerdict::no(format!(
            "the residues of the order ideal span only {r} dimensions"
        )));
    }
    Ok(OracleVerdict::yes())
}

pub fn generic_prebasis(o: &OrderIdeal) -> Result<Vec<Polynomial>> {
    Ok(BorderScheme::new(o)?.generic_prebasis())
}

/// `k` is 0-based.
pub fn multiplication_matrix(o: &OrderIdeal, k: usize) -> Result<GenericMatrix> {
    BorderScheme::new(o)?.multiplication_matrix(k)
}

pub fn border_scheme_ideal(o: &OrderIdeal) -> Result<Ideal> {
    Ok(BorderScheme::new(o)?.ideal())
}

pub fn is_border_basis_point(o: &OrderIdeal, p: &SchemePoint) -> Result<bool> {
    BorderScheme::new(o)?.is_point(p)
}

pub fn specialize_prebasis(o: &OrderIdeal, p: &SchemePoint) -> Result<Vec<Polynomial>> {
    BorderScheme::new(o)?.specialize(p)
}

pub fn oracle_is_border_basis(o: &OrderIdeal, p: &SchemePoint, cfg: &GbConfig) -> Result<OracleVerdict> {
    BorderScheme::new(o)?.oracle(p, cfg)
}
