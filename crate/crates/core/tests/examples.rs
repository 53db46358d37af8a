use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use bbscheme_core::border::{
    border_scheme_ideal, generic_prebasis, is_border_basis_point, multiplication_matrix, oracle_is_border_basis,
    specialize_prebasis, SchemePoint,
};
use bbscheme_core::gb::{
    divide, eliminate, krull_dimension, leading_term_ideal, normal_form, substitution_eliminate, Complement, GbConfig,
    GroebnerBasis, Ideal, MonomialIdeal,
};
use bbscheme_core::gbscheme::{
    affine_cell_detect, deform, find_weights, gb_scheme_ideal, generic_gb_prebasis, h_polynomials, ideal_from_point,
    is_sigma_cornercut, point_from_ideal, split_variables, verify_homogeneity, AffineCell, GbScheme, Route,
};
use bbscheme_core::order_ideal::OrderIdeal;
use bbscheme_core::poly::{
    compare, int, parse_polynomial, parse_polynomial_list, parse_terms, Polynomial, Term, TermOrdering, Universe,
};
use bbscheme_core::Error;

fn xy() -> Arc<Universe> {
    Universe::with_x(&["x", "y"]).unwrap()
}

fn oi(s: &str) -> OrderIdeal {
    OrderIdeal::parse(s, &xy()).unwrap()
}

fn ord(name: &str) -> TermOrdering {
    TermOrdering::from_name(name, &["x", "y"]).unwrap()
}

fn cfg() -> GbConfig {
    GbConfig::default()
}

fn p(s: &str, u: &Arc<Universe>) -> Polynomial {
    parse_polynomial(s, u).unwrap()
}

fn ps(s: &str, u: &Arc<Universe>) -> Vec<Polynomial> {
    parse_polynomial_list(s, u).unwrap()
}

fn terms(s: &str) -> Vec<Term> {
    parse_terms(s, &xy()).unwrap()
}

fn t(s: &str) -> Term {
    terms(s).remove(0)
}

#[test]
fn term_comparison() {
    let u = xy();
    assert_eq!(compare(&ord("degrevlex"), &u, &t("x*y"), &t("y^2")).unwrap(), Ordering::Greater);
    assert_eq!(compare(&ord("lex"), &u, &t("x"), &t("y^3")).unwrap(), Ordering::Greater);
    for name in ["lex", "deglex", "degrevlex"] {
        assert_eq!(compare(&ord(name), &u, &t("x^2*y"), &t("x^2*y")).unwrap(), Ordering::Equal);
    }
    let partial = TermOrdering::lex(&["x"]);
    assert!(matches!(compare(&partial, &u, &t("x"), &t("y")), Err(Error::OrderingDomain(_))));
}

#[test]
fn arithmetic_and_substitution() {
    let u = xy();
    assert_eq!(&p("x + y", &u) * &p("x - y", &u), p("x^2 - y^2", &u));
    let sch = GbScheme::new(&oi("1, x, y, x*y"), &ord("degrevlex")).unwrap();
    let xso = sch.xso_universe();
    let g2 = &sch.generic_gb_prebasis()[1];
    let vals = [("c[1,2]", 1), ("c[2,2]", 0), ("c[3,2]", 0)]
        .into_iter()
        .map(|(n, v)| (xso.require(n).unwrap(), Polynomial::constant(xso, int(v))))
        .collect();
    assert_eq!(g2.substitute(&vals).unwrap(), p("y^2 - 1", xso));
    let rule: HashMap<usize, Polynomial> = [(1, p("x^2", &u))].into_iter().collect();
    assert!(p("y - x^2", &u).substitute(&rule).unwrap().is_zero());
}

#[test]
fn division() {
    let o = oi("1, x, y");
    let g1 = generic_prebasis(&o).unwrap().remove(0);
    let u = g1.universe().clone();
    let c: Vec<String> = u.c_indices().iter().map(|&k| u.name(k).to_string()).collect();
    let block = TermOrdering::Elimination {
        block: vec!["x".into(), "y".into()],
        inner: Box::new(ord("deglex")),
        outer: Box::new(TermOrdering::degrevlex(&c)),
    };
    let (q, r) = divide(&p("x^2*y", &u), std::slice::from_ref(&g1), &block).unwrap();
    assert_eq!(q, vec![p("y", &u)]);
    assert_eq!(r, p("c[1,1]*y + c[2,1]*x*y + c[3,1]*y^2", &u));

    let v = xy();
    let f = p("x^3 - 2*x*y + 5", &v);
    let (q, r) = divide(&f, std::slice::from_ref(&f), &ord("deglex")).unwrap();
    assert_eq!((q, r.is_zero()), (vec![Polynomial::one(&v)], true));
    let w = Universe::with_x(&["x", "y", "c"]).unwrap();
    let (q, r) = divide(&p("y", &w), &[p("x - c", &w)], &TermOrdering::lex(&["x", "y", "c"])).unwrap();
    assert!(q[0].is_zero());
    assert_eq!(r, p("y", &w));
    let (q, r) = divide(&f, &[], &ord("lex")).unwrap();
    assert!(q.is_empty() && r == f);
}

#[test]
fn weighted_homogeneity() {
    let u = Universe::with_x(&["x", "c11"]).unwrap();
    let f = p("x^2 - c11", &u);
    assert_eq!(f.homogeneous_degree(&[1, 2]), Some(2));
    assert_eq!(f.homogeneous_degree(&[1, 3]), None);
    let sch = GbScheme::new(&oi("1, x, y, x*y"), &ord("degrevlex")).unwrap();
    let g2 = &sch.generic_gb_prebasis()[1];
    let wv = sch.weights().vector_for(g2.universe(), false);
    assert_eq!(sch.weights().v, vec![3, 2]);
    assert_eq!(g2.homogeneous_degree(&wv), Some(4));
}

#[test]
fn groebner_bases() {
    let u = xy();
    let gb = GroebnerBasis::compute(&ps("x - y^2, y^3 - 1", &u), &ord("lex"), &u, &cfg()).unwrap();
    assert_eq!(gb.polys(), ps("x - y^2, y^3 - 1", &u).as_slice());
    let gb = GroebnerBasis::compute(&[Polynomial::zero(&u)], &ord("lex"), &u, &cfg()).unwrap();
    assert!(gb.polys().is_empty());
    let gb = GroebnerBasis::compute(&ps("x - y, y^2 - 1", &u), &ord("deglex"), &u, &cfg()).unwrap();
    assert_eq!(gb.polys(), ps("y^2 - 1, x - y", &u).as_slice());

    let i = Ideal::new(&u, ps("x^2 - 1", &u)).unwrap();
    assert_eq!(normal_form(&p("x^2", &u), &i, &ord("lex"), &cfg()).unwrap(), Polynomial::one(&u));
    let i = Ideal::new(&u, ps("x - y, y^2 - 1", &u)).unwrap();
    assert_eq!(normal_form(&p("x*y", &u), &i, &ord("deglex"), &cfg()).unwrap(), Polynomial::one(&u));
    let f = p("x^3 + y", &u);
    assert_eq!(normal_form(&f, &Ideal::zero(&u), &ord("lex"), &cfg()).unwrap(), f);
}

#[test]
fn leading_terms_and_complements() {
    let u = xy();
    let i = Ideal::new(&u, ps("x - y, y^2 - 1", &u)).unwrap();
    let lt = leading_term_ideal(&i, &ord("deglex"), &cfg()).unwrap();
    assert_eq!(lt.generators().iter().cloned().collect::<BTreeSet<_>>(), terms("x, y^2").into_iter().collect());
    match lt.complement() {
        Complement::Finite(s) => assert_eq!(s.into_iter().collect::<BTreeSet<_>>(), terms("1, y").into_iter().collect()),
        Complement::Infinite => panic!(),
    }
    let m = MonomialIdeal::new(&u, terms("x^2, x*y, y^2")).unwrap();
    match m.complement() {
        Complement::Finite(s) => assert_eq!(s.into_iter().collect::<BTreeSet<_>>(), terms("1, x, y").into_iter().collect()),
        Complement::Infinite => panic!(),
    }
    assert!(matches!(MonomialIdeal::new(&u, terms("x")).unwrap().complement(), Complement::Infinite));
}

#[test]
fn elimination_examples() {
    let u = xy();
    let i = Ideal::new(&u, ps("y - x^2, y^2 - x", &u)).unwrap();
    let e = eliminate(&i, &[0], &cfg()).unwrap();
    let ux = Universe::with_x(&["x"]).unwrap();
    assert!(e.same_ideal(&Ideal::new(&ux, ps("x^4 - x", &ux)).unwrap(), &cfg()).unwrap());
    let rules: HashMap<usize, Polynomial> = [(1, p("x^2", &u))].into_iter().collect();
    let s = substitution_eliminate(&i, &rules).unwrap();
    assert!(s.same_ideal(&e, &cfg()).unwrap());
    let line = Ideal::new(&u, ps("x - y", &u)).unwrap();
    assert!(eliminate(&line, &[0, 1], &cfg()).unwrap().same_ideal(&line, &cfg()).unwrap());
    assert_eq!(substitution_eliminate(&i, &HashMap::new()).unwrap().generators(), i.generators());
    let two = Ideal::new(&u, ps("y - x, y - x^2", &u)).unwrap();
    let rules: HashMap<usize, Polynomial> = [(1, p("x", &u))].into_iter().collect();
    let s = substitution_eliminate(&two, &rules).unwrap();
    assert!(s.same_ideal(&Ideal::new(&ux, ps("x^2 - x", &ux)).unwrap(), &cfg()).unwrap());

    // A variable absent from the rest splits off as its own block.
    let w = Universe::with_x(&["c41", "a", "b"]).unwrap();
    let j = Ideal::new(&w, ps("c41, a^2 - b, a*b - 1", &w)).unwrap();
    let cut = eliminate(&j, &[1, 2], &cfg()).unwrap();
    let ab = Universe::with_x(&["a", "b"]).unwrap();
    assert!(cut.same_ideal(&Ideal::new(&ab, ps("a^2 - b, a*b - 1", &ab)).unwrap(), &cfg()).unwrap());
}

#[test]
fn dimensions() {
    let u = xy();
    let dim = |s: &str| krull_dimension(&Ideal::new(&u, ps(s, &u)).unwrap(), &cfg()).unwrap();
    assert_eq!(dim("x"), 1);
    assert_eq!(dim("x*y"), 1);
    assert_eq!(krull_dimension(&Ideal::zero(&Universe::with_x(&["a", "b", "c"]).unwrap()), &cfg()).unwrap(), 3);
}

#[test]
fn order_ideals() {
    let u = xy();
    let o = oi("1, x, y, x*y");
    assert_eq!(o.mu(), 4);
    assert!(matches!(OrderIdeal::parse("1, x*y", &u), Err(Error::NotDivisorClosed { .. })));
    assert_eq!(oi("1").border(), terms("x, y").as_slice());
    let set = |v: &[Term]| v.iter().cloned().collect::<BTreeSet<_>>();
    assert_eq!(set(o.border()), set(&terms("x^2, y^2, x^2*y, x*y^2")));
    assert_eq!(set(o.corners()), set(&terms("x^2, y^2")));
    let tri = oi("1, x, y");
    assert_eq!(tri.border(), tri.corners());
    assert_eq!(set(tri.border()), set(&terms("x^2, x*y, y^2")));
    let sq = oi("1, x, y, x^2, y^2");
    assert_eq!(set(sq.corners()), set(&terms("x*y, y^3, x^3")));
    assert_eq!(sq.nu(), 5);
    assert_eq!(sq.border(), terms("x*y, x^3, y^3, x^2*y, x*y^2").as_slice());
}

#[test]
fn generic_prebases_and_matrices() {
    let o = oi("1, x, y, x*y");
    let g = generic_prebasis(&o).unwrap();
    let u = g[0].universe().clone();
    assert_eq!(g[1], p("y^2 - c[1,2] - c[2,2]*x - c[3,2]*y - c[4,2]*x*y", &u));
    let g = generic_prebasis(&oi("1")).unwrap();
    assert_eq!(g, ps("x - c[1,1], y - c[1,2]", g[0].universe()));
    let ux = Universe::with_x(&["x"]).unwrap();
    let g = generic_prebasis(&OrderIdeal::parse("1, x", &ux).unwrap()).unwrap();
    assert_eq!(g, ps("x^2 - c[1,1] - c[2,1]*x", g[0].universe()));

    let tri = oi("1, x, y");
    let ax = multiplication_matrix(&tri, 0).unwrap();
    let ay = multiplication_matrix(&tri, 1).unwrap();
    let c = ax.get(0, 1).universe().clone();
    let grid = |m: &bbscheme_core::border::GenericMatrix| -> Vec<Vec<Polynomial>> { m.entries.clone() };
    let want = |s: [&str; 9]| -> Vec<Vec<Polynomial>> { s.chunks(3).map(|r| r.iter().map(|e| p(e, &c)).collect()).collect() };
    assert_eq!(grid(&ax), want(["0", "c[1,1]", "c[1,2]", "1", "c[2,1]", "c[2,2]", "0", "c[3,1]", "c[3,2]"]));
    assert_eq!(grid(&ay), want(["0", "c[1,2]", "c[1,3]", "0", "c[2,2]", "c[2,3]", "1", "c[3,2]", "c[3,3]"]));
    let one = multiplication_matrix(&oi("1"), 0).unwrap();
    assert_eq!(one.size(), 1);
    assert_eq!(one.get(0, 0), &p("c[1,1]", one.get(0, 0).universe()));

    let comm = ax.mul(&ay).sub(&ay.mul(&ax));
    assert_eq!(comm.get(0, 1), &p("c[1,1]*c[2,2] + c[1,2]*c[3,2] - c[1,2]*c[2,1] - c[1,3]*c[3,1]", &c));
    assert!(border_scheme_ideal(&oi("1")).unwrap().has_zero_generators_only());
    let ux = Universe::with_x(&["x"]).unwrap();
    assert!(border_scheme_ideal(&OrderIdeal::parse("1, x, x^2", &ux).unwrap()).unwrap().has_zero_generators_only());
}

#[test]
fn border_basis_points() {
    let u = xy();
    for s in ["1", "1, x, y", "1, x, y, x*y", "1, x, y, x^2, y^2"] {
        let o = oi(s);
        assert!(is_border_basis_point(&o, &SchemePoint::zero()).unwrap());
        assert!(oracle_is_border_basis(&o, &SchemePoint::zero(), &cfg()).unwrap().holds);
        let specialized = specialize_prebasis(&o, &SchemePoint::zero()).unwrap();
        let monos: Vec<Polynomial> = o.border().iter().map(|b| Polynomial::monomial(&u, b.clone(), int(1))).collect();
        assert_eq!(specialized, monos);
    }
    let tri = oi("1, x, y");
    let bad = SchemePoint::from_map([((1, 2), int(1))]);
    assert!(!is_border_basis_point(&tri, &bad).unwrap());
    assert!(!oracle_is_border_basis(&tri, &bad, &cfg()).unwrap().holds);

    let line = oi("1, y");
    let good = SchemePoint::from_map([((2, 1), int(1)), ((1, 2), int(1)), ((1, 3), int(1))]);
    assert!(is_border_basis_point(&line, &good).unwrap());
    assert_eq!(specialize_prebasis(&line, &good).unwrap(), ps("x - y, y^2 - 1, x*y - 1", &u));
    assert!(oracle_is_border_basis(&line, &good, &cfg()).unwrap().holds);
}

#[test]
fn variable_splits_and_gb_prebases() {
    let v = split_variables(&oi("1, x, y, x*y"), &ord("degrevlex")).unwrap();
    assert_eq!(v.l_o.iter().copied().collect::<Vec<_>>(), vec![(4, 2)]);
    assert!(split_variables(&oi("1, x, y"), &ord("deglex")).unwrap().l_o.is_empty());
    for s in ["lex", "deglex", "degrevlex"] {
        assert!(split_variables(&oi("1"), &ord(s)).unwrap().l_o.is_empty());
    }

    let o = oi("1, x, y, x*y");
    let star = generic_gb_prebasis(&o, &ord("degrevlex")).unwrap();
    let u = star[0].universe().clone();
    assert_eq!(star[1], p("y^2 - (c[1,2] + c[2,2]*x + c[3,2]*y)", &u));
    let full = generic_prebasis(&o).unwrap();
    assert_eq!(star[0], full[0].rebase(&u).unwrap());
    let tri = oi("1, x, y");
    let star = generic_gb_prebasis(&tri, &ord("deglex")).unwrap();
    for (a, b) in star.iter().zip(generic_prebasis(&tri).unwrap()) {
        assert_eq!(a, &b.rebase(a.universe()).unwrap());
    }
}

#[test]
fn weights() {
    let ws = find_weights(&oi("1, x, y, x*y"), &ord("degrevlex")).unwrap();
    assert_eq!(ws.v, vec![3, 2]);
    let want = [((1, 1), 6), ((2, 1), 3), ((3, 1), 4), ((4, 1), 1), ((1, 2), 4), ((2, 2), 1), ((3, 2), 2)];
    assert_eq!(ws.w, want.into_iter().collect());
    let seg = find_weights(&oi("1, y, y^2"), &ord("lex")).unwrap();
    assert!(seg.v[0] > 2 * seg.v[1]);
    let one = find_weights(&oi("1"), &ord("deglex")).unwrap();
    assert_eq!(one.v, vec![1, 1]);
    assert!(one.w.values().all(|&w| w == 1));
}

#[test]
fn homogeneity_reports() {
    for (o, s) in [("1, x, y, x*y", "degrevlex"), ("1", "deglex")] {
        let sch = GbScheme::new(&oi(o), &ord(s)).unwrap();
        assert!(verify_homogeneity(&sch, sch.weights()).unwrap().all_passed());
    }
    let sch = GbScheme::new(&oi("1, x, y, x^2"), &ord("deglex")).unwrap();
    let ig = sch.ideal(Route::Substitution, &cfg()).unwrap();
    let s = ig.universe();
    let moving = ig
        .generators()
        .iter()
        .flat_map(|g| g.variables())
        .find_map(|k| match s.var(k).kind {
            bbscheme_core::poly::VarKind::C { i, j } => Some((i, j)),
            _ => None,
        })
        .unwrap();
    let mut found = false;
    for delta in [1, -1] {
        let rep = verify_homogeneity(&sch, &sch.weights().perturbed(moving, delta)).unwrap();
        let b = rep.claim('b').unwrap();
        if !b.passed {
            assert!(b.witness.is_some());
            found = true;
        }
    }
    assert!(found);
}

#[test]
fn h_polynomials_examples() {
    let o = oi("1, x, y, x*y");
    let sch = GbScheme::new(&o, &ord("degrevlex")).unwrap();
    let h = sch.h_polynomials();
    assert!(h.keys().any(|&(_, j)| j == 3));
    let c = sch.border_scheme().c_universe();
    let mut gens = sch.border_scheme().commutator_generators();
    gens.push(Polynomial::var(c, c.c_index(4, 2).unwrap()));
    let ideal = Ideal::new(c, gens).unwrap();
    for (&(i, j), hij) in h.iter().filter(|((_, j), _)| *j == 3) {
        let diff = &Polynomial::var(c, c.c_index(i, j).unwrap()) - &hij.rebase(c).unwrap();
        assert!(ideal.contains(&diff, &cfg()).unwrap());
    }
    assert!(h_polynomials(&oi("1, x, y"), &ord("deglex")).unwrap().is_empty());
    assert!(h_polynomials(&oi("1"), &ord("lex")).unwrap().is_empty());
}

#[test]
fn scheme_ideals() {
    for s in ["lex", "deglex", "degrevlex"] {
        assert!(gb_scheme_ideal(&oi("1"), &ord(s), Route::Substitution, &cfg()).unwrap().is_zero_ideal(&cfg()).unwrap());
    }
    for seg in ["1, y", "1, y, y^2", "1, y, y^2, y^3"] {
        let ig = gb_scheme_ideal(&oi(seg), &ord("lex"), Route::Substitution, &cfg()).unwrap();
        assert!(ig.is_zero_ideal(&cfg()).unwrap(), "{seg}");
    }
    let tri = oi("1, x, y");
    let bo = border_scheme_ideal(&tri).unwrap();
    for route in [Route::Substitution, Route::reduction(), Route::EliminationOracle] {
        let ig = gb_scheme_ideal(&tri, &ord("deglex"), route, &cfg()).unwrap();
        assert!(ig.same_ideal(&bo, &cfg()).unwrap());
    }
}

#[test]
fn cornercuts() {
    assert!(!is_sigma_cornercut(&oi("1, x, y, x*y"), &ord("degrevlex")).unwrap());
    assert!(is_sigma_cornercut(&oi("1, y"), &ord("lex")).unwrap());
    for s in ["deglex", "degrevlex"] {
        assert!(is_sigma_cornercut(&oi("1, x, y"), &ord(s)).unwrap());
    }
}

#[test]
fn affine_cells() {
    let u = Universe::with_x(&["c1", "c2", "c3"]).unwrap();
    match affine_cell_detect(&Ideal::zero(&u), &[1, 1, 1]).unwrap() {
        AffineCell::AffineSpace(v) => assert_eq!(v.len(), 3),
        AffineCell::Residual(_) => panic!(),
    }
    let cone = Ideal::new(&u, ps("c1^2 - c2*c3", &u)).unwrap();
    assert!(matches!(affine_cell_detect(&cone, &[1, 1, 1]).unwrap(), AffineCell::Residual(_)));
    let sch = GbScheme::new(&oi("1, x, y, x^2, y^2"), &ord("deglex")).unwrap();
    let ig = sch.ideal(Route::Substitution, &cfg()).unwrap();
    let w = sch.weights().vector_for(ig.universe(), false);
    match affine_cell_detect(&ig, &w).unwrap() {
        AffineCell::AffineSpace(v) => assert_eq!(v.len(), 9),
        AffineCell::Residual(_) => panic!(),
    }
}

#[test]
fn points_and_ideals() {
    let u = xy();
    let i = Ideal::new(&u, ps("x - y, y^2 - 1", &u)).unwrap();
    let (o, pt) = point_from_ideal(&i, &ord("deglex"), &cfg()).unwrap();
    assert_eq!(o.terms(), terms("1, y").as_slice());
    assert_eq!(o.border(), terms("x, y^2, x*y").as_slice());
    assert_eq!(pt, SchemePoint::from_map([((2, 1), int(1)), ((1, 2), int(1)), ((1, 3), int(1))]));

    for (s, sigma) in [("1, x, y, x*y", "degrevlex"), ("1, x, y, x^2", "deglex"), ("1, y", "lex")] {
        let o = oi(s);
        let g = ideal_from_point(&o, &ord(sigma), &SchemePoint::zero()).unwrap();
        let lts: BTreeSet<Term> = g.iter().map(|q| {
            assert_eq!(q.len(), 1);
            q.terms().next().unwrap().0.clone()
        }).collect();
        assert_eq!(lts, o.corners().iter().cloned().collect());
    }
    let line = Ideal::new(&u, ps("x", &u)).unwrap();
    assert!(matches!(point_from_ideal(&line, &ord("lex"), &cfg()), Err(Error::NotZeroDimensional)));
    let off = SchemePoint::from_map([((1, 2), int(1))]);
    assert!(matches!(ideal_from_point(&oi("1, x, y"), &ord("deglex"), &off), Err(Error::NotAPoint { .. })));
}

#[test]
fn deformations() {
    let u = xy();
    let i = Ideal::new(&u, ps("x - y, y^2 - 1", &u)).unwrap();
    let (o, pt) = point_from_ideal(&i, &ord("lex"), &cfg()).unwrap();
    let sch = GbScheme::new(&o, &ord("lex")).unwrap();
    assert_eq!(sch.weights().v, vec![2, 1]);
    let fam = deform(&sch, &pt).unwrap();
    assert_eq!(fam.generators, ps("x - t*y, y^2 - t^2", &fam.universe));
    assert_eq!(fam.fiber_generators(&int(0)).unwrap(), ps("x, y^2", &u));
    let one = fam.fiber(&int(1)).unwrap().groebner_basis(&ord("lex"), &cfg()).unwrap();
    assert_eq!(one.polys(), ideal_from_point(&o, &ord("lex"), &pt).unwrap().as_slice());

    let sch = GbScheme::new(&oi("1, x, y, x*y"), &ord("degrevlex")).unwrap();
    let fam = deform(&sch, &SchemePoint::zero()).unwrap();
    let special = fam.fiber_generators(&int(0)).unwrap();
    for t0 in [int(1), int(2), int(-1)] {
        assert_eq!(fam.fiber_generators(&t0).unwrap(), special);
    }
    let off = SchemePoint::from_map([((1, 2), int(1))]);
    let tri = GbScheme::new(&oi("1, x, y"), &ord("deglex")).unwrap();
    assert!(deform(&tri, &off).is_err());
}
