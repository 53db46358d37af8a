#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use bbscheme_core::border::SchemePoint;
use bbscheme_core::gb::{linear_preprocess, Complement, GbConfig, Ideal, MonomialIdeal};
use bbscheme_core::gbscheme::{GbScheme, Route};
use bbscheme_core::linalg;
use bbscheme_core::order_ideal::OrderIdeal;
use bbscheme_core::poly::{rat, Coeff, Polynomial, Term, TermOrdering, Universe, VarKind};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An order ideal with its term ordering.
#[derive(Clone)]
pub struct Instance {
    pub label: &'static str,
    pub o: OrderIdeal,
    pub sigma: TermOrdering,
}

fn instance(label: &'static str, vars: &[&str], o: &str, sigma: &str) -> Instance {
    let u = Universe::with_x(vars).unwrap();
    Instance {
        label,
        o: OrderIdeal::parse(o, &u).unwrap(),
        sigma: TermOrdering::from_name(sigma, vars).unwrap(),
    }
}

/// Small instances with `n ≤ 3` and `μ ≤ 6`.
pub fn corpus() -> Vec<Instance> {
    vec![
        instance("x-segment", &["x"], "1, x, x^2", "deglex"),
        instance("two-line", &["x", "y"], "1, y", "lex"),
        instance("three-line", &["x", "y"], "1, y, y^2", "lex"),
        instance("triangle", &["x", "y"], "1, x, y", "degrevlex"),
        instance("box", &["x", "y"], "1, x, y, x*y", "degrevlex"),
        instance("hook", &["x", "y"], "1, x, y, x^2", "deglex"),
        instance("square", &["x", "y"], "1, x, y, x^2, y^2", "deglex"),
        instance("staircase", &["x", "y"], "1, x, y, x^2, x*y, x^3", "lex"),
        instance("tetrahedron", &["x", "y", "z"], "1, x, y, z", "degrevlex"),
        instance("spike", &["x", "y", "z"], "1, x, y, z, x^2", "deglex"),
    ]
}

pub fn small_rational(r: &mut impl Rng) -> Coeff {
    rat(r.gen_range(-6..=6), r.gen_range(1..=3))
}

pub fn nonzero_rational(r: &mut impl Rng) -> Coeff {
    loop {
        let c = small_rational(r);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn eval_term(t: &Term, p: &[Coeff]) -> Coeff {
    let mut v = Coeff::one();
    for (k, e) in t.support() {
        for _ in 0..e {
            v *= &p[k];
        }
    }
    v
}

/// Border basis point of the ideal of `μ` random distinct points.
pub fn point_of_distinct_points(o: &OrderIdeal, r: &mut impl Rng) -> SchemePoint {
    let n = o.n();
    loop {
        let pts: Vec<Vec<Coeff>> = (0..o.mu())
            .map(|_| (0..n).map(|_| Coeff::from_integer(r.gen_range(-5..=5).into())).collect())
            .collect();
        let e: linalg::Matrix = pts.iter().map(|p| o.terms().iter().map(|t| eval_term(t, p)).collect()).collect();
        let mut out = SchemePoint::zero();
        let mut ok = true;
        for (j, b) in o.border().iter().enumerate() {
            let rhs: Vec<Coeff> = pts.iter().map(|p| eval_term(b, p)).collect();
            match linalg::solve(&e, &rhs) {
                Some(col) => {
                    for (i, c) in col.into_iter().enumerate() {
                        out.set(i + 1, j + 1, c);
                    }
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return out;
        }
    }
}

/// Border basis point of the ideal generated by `gens`, when the residue
/// classes of `O` form a basis of the quotient.
pub fn point_of_quotient(o: &OrderIdeal, gens: &[Polynomial], cfg: &GbConfig) -> Option<SchemePoint> {
    let u = o.universe();
    let gb = Ideal::new(u, gens.to_vec()).ok()?.groebner_basis(&TermOrdering::default_for(u), cfg).ok()?;
    if gb.is_unit() {
        return None;
    }
    let lt = MonomialIdeal::new(u, gb.leading_terms()).ok()?;
    let Complement::Finite(std) = lt.complement() else { return None };
    if std.len() != o.mu() {
        return None;
    }
    let col: HashMap<&Term, usize> = std.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let coords = |t: &Term| -> Vec<Coeff> {
        let nf = gb.normal_form(&Polynomial::monomial(u, t.clone(), Coeff::one())).unwrap();
        let mut v = vec![Coeff::zero(); std.len()];
        for (s, c) in nf.terms() {
            v[col[s]] = c.clone();
        }
        v
    };
    // Columns of `m` are the normal forms of t_1..t_μ.
    let rows: Vec<Vec<Coeff>> = o.terms().iter().map(coords).collect();
    let m: linalg::Matrix = (0..std.len()).map(|s| rows.iter().map(|row| row[s].clone()).collect()).collect();
    let mut out = SchemePoint::zero();
    for (j, b) in o.border().iter().enumerate() {
        let a = linalg::solve(&m, &coords(b))?;
        for (i, c) in a.into_iter().enumerate() {
            out.set(i + 1, j + 1, c);
        }
    }
    Some(out)
}

/// The corner monomials of `O` moved by a random affine change of coordinates.
pub fn fat_point_generators(o: &OrderIdeal, r: &mut impl Rng) -> Vec<Polynomial> {
    let u = o.universe();
    let n = o.n();
    let rules: HashMap<usize, Polynomial> = (0..n)
        .map(|k| {
            let mut p = Polynomial::constant(u, small_rational(r));
            for l in 0..n {
                let c = if l == k { nonzero_rational(r) } else { small_rational(r) };
                p = &p + &Polynomial::var(u, l).scale(&c);
            }
            (k, p)
        })
        .collect();
    o.corners()
        .iter()
        .map(|t| Polynomial::monomial(u, t.clone(), Coeff::one()).substitute(&rules).unwrap())
        .collect()
}

/// A border basis point of the ideal of a moved fat point.
pub fn point_of_fat_point(o: &OrderIdeal, r: &mut impl Rng, cfg: &GbConfig) -> SchemePoint {
    loop {
        if let Some(p) = point_of_quotient(o, &fat_point_generators(o, r), cfg) {
            return p;
        }
    }
}

/// `c_ij ↦ λ^(deg b_j − deg t_i) c_ij`, which preserves the border scheme.
pub fn scale_point(o: &OrderIdeal, p: &SchemePoint, lambda: &Coeff) -> SchemePoint {
    let mut out = SchemePoint::zero();
    for (&(i, j), c) in p.nonzero() {
        let d = o.border()[j - 1].degree() as i64 - o.terms()[i - 1].degree() as i64;
        let mut f = Coeff::one();
        for _ in 0..d.unsigned_abs() {
            f *= lambda;
        }
        let f = if d < 0 { f.recip() } else { f };
        out.set(i, j, c * &f);
    }
    out
}

/// Samples mixing points on and off the border basis scheme.
pub fn sample_points(o: &OrderIdeal, count: usize, r: &mut impl Rng, cfg: &GbConfig) -> Vec<SchemePoint> {
    let (mu, nu) = (o.mu(), o.nu());
    let mut out = vec![SchemePoint::zero()];
    while out.len() < count {
        let p = match out.len() % 6 {
            0 => point_of_distinct_points(o, r),
            1 => point_of_fat_point(o, r, cfg),
            2 => {
                let lambda = [rat(2, 1), rat(1, 2), rat(-1, 1), rat(3, 1)][r.gen_range(0..4)].clone();
                let base = point_of_distinct_points(o, r);
                scale_point(o, &base, &lambda)
            }
            3 | 4 => {
                let mut p = if r.gen_bool(0.5) {
                    point_of_distinct_points(o, r)
                } else {
                    point_of_fat_point(o, r, cfg)
                };
                let (i, j) = (r.gen_range(1..=mu), r.gen_range(1..=nu));
                let v = &p.get(i, j) + &nonzero_rational(r);
                p.set(i, j, v);
                p
            }
            _ => {
                let mut p = SchemePoint::zero();
                for i in 1..=mu {
                    for j in 1..=nu {
                        if r.gen_bool(0.4) {
                            p.set(i, j, small_rational(r));
                        }
                    }
                }
                p
            }
        };
        out.push(p);
    }
    out
}

fn random_linear(u: &Arc<Universe>, r: &mut impl Rng) -> Polynomial {
    let x = Polynomial::var(u, 0).scale(&Coeff::from_integer(r.gen_range(1..=4).into()));
    let y = Polynomial::var(u, 1).scale(&Coeff::from_integer(r.gen_range(-4..=4).into()));
    &(&x + &y) + &Polynomial::constant(u, Coeff::from_integer(r.gen_range(-3..=3).into()))
}

fn random_below(u: &Arc<Universe>, deg: u32, r: &mut impl Rng) -> Polynomial {
    let mut p = Polynomial::zero(u);
    for a in 0..deg {
        for b in 0..deg - a {
            if r.gen_bool(0.3) {
                let t = Term::from_exponents(vec![a, b]);
                p = &p + &Polynomial::monomial(u, t, small_rational(r));
            }
        }
    }
    p
}

/// Zero-dimensional ideals in `x, y` built from products of linear forms plus
/// lower-degree perturbations, with quotient dimension at most 6.
pub fn round_trip_ideals(count: usize, r: &mut impl Rng) -> Vec<Ideal> {
    let u = Universe::with_x(&["x", "y"]).unwrap();
    let shapes = [(1, 1), (1, 2), (1, 3), (2, 2), (1, 4), (2, 3), (1, 5), (1, 6), (3, 2)];
    let cfg = GbConfig::default();
    let mut out = Vec::with_capacity(count);
    let mut k = 0;
    while out.len() < count {
        let (a, b) = shapes[k % shapes.len()];
        k += 1;
        let mut f = Polynomial::one(&u);
        for _ in 0..a {
            f = &f * &random_linear(&u, r);
        }
        let mut g = Polynomial::one(&u);
        for _ in 0..b {
            g = &g * &swap_xy(&random_linear(&u, r));
        }
        let f = &f + &random_below(&u, a, r);
        let g = &g + &random_below(&u, b, r);
        let ideal = Ideal::new(&u, vec![f, g]).unwrap();
        let gb = ideal.groebner_basis(&TermOrdering::default_for(&u), &cfg).unwrap();
        if gb.is_unit() {
            continue;
        }
        let lt = MonomialIdeal::new(&u, gb.leading_terms()).unwrap();
        if let Complement::Finite(s) = lt.complement() {
            if s.len() <= 6 {
                out.push(ideal);
            }
        }
    }
    out
}

fn swap_xy(p: &Polynomial) -> Polynomial {
    let u = p.universe();
    Polynomial::from_terms(
        u,
        p.terms().map(|(t, c)| (Term::from_exponents(vec![t.exp(1), t.exp(0)]), c.clone())),
    )
}

pub fn orderings_xy() -> Vec<TermOrdering> {
    let v = ["x", "y"];
    vec![TermOrdering::lex(&v), TermOrdering::deglex(&v), TermOrdering::degrevlex(&v)]
}

/// Random points of the Gröbner basis scheme, expanded to the full grid, when
/// its ideal is solved away completely by linear substitutions.
pub fn gb_scheme_points(sch: &GbScheme, count: usize, r: &mut impl Rng, cfg: &GbConfig) -> Vec<SchemePoint> {
    let ig = sch.ideal(Route::Substitution, cfg).unwrap();
    let red = linear_preprocess(&ig).unwrap();
    if !red.residual.has_zero_generators_only() {
        return Vec::new();
    }
    let free = red.residual.universe().clone();
    let s = ig.universe().clone();
    (0..count)
        .map(|_| {
            let vals: HashMap<usize, Coeff> = (0..free.len()).map(|k| (k, small_rational(r))).collect();
            let mut p = SchemePoint::zero();
            let mut put = |name: &str, v: Coeff| {
                if let VarKind::C { i, j } = s.var(s.require(name).unwrap()).kind {
                    p.set(i, j, v);
                }
            };
            for (k, v) in &vals {
                put(free.name(*k), v.clone());
            }
            for (name, f) in &red.eliminated {
                put(name, f.evaluate(&vals));
            }
            sch.expand_point(&p).unwrap()
        })
        .collect()
}
