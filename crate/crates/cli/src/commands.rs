use std::fmt::Write as _;

use bbscheme_core::border::{is_border_basis_point, oracle_is_border_basis, BorderScheme, SchemePoint};
use bbscheme_core::gb::{krull_dimension, krull_dimension_split, linear_preprocess, GbConfig, Ideal};
use bbscheme_core::gbscheme::{
    affine_cell_detect, point_from_ideal, verify_homogeneity, AffineCell, GbScheme, ReductionPolicy, Route,
};
use bbscheme_core::order_ideal::OrderIdeal;
use bbscheme_core::poly::text::parse_coeff;
use bbscheme_core::poly::{c_name, parse_polynomial_list, Polynomial, TermOrdering};
use bbscheme_core::Error;
use serde_json::{json, Value};

use crate::{input, Command, Common, Failure, Policy, Preprocess, RouteName, SchemeIdeal};

/// What a command prints, plus a failure to report after printing.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub failure: Option<Failure>,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            failure: None,
        }
    }
}

pub fn run(common: &Common, cmd: &Command) -> Result<Output, Failure> {
    let cfg = common.gb_config();
    match cmd {
        Command::Validate => validate(common),
        Command::BorderScheme { matrices } => border_scheme(common, *matrices),
        Command::GbScheme {
            route,
            policy,
            reverse_pairs,
            cross_check,
        } => gb_scheme(common, &cfg, route_of(*route, *policy, *reverse_pairs), *cross_check),
        Command::Weights { verify } => weights(common, *verify),
        Command::CheckPoint { point } => check_point(common, &cfg, &input::point(point)?),
        Command::RoundTrip { ideal, point } => match (ideal, point) {
            (Some(s), None) => round_trip_ideal(common, &cfg, s),
            (None, Some(p)) => round_trip_point(common, &cfg, &input::point(p)?),
            _ => Err(Failure::input("round-trip needs exactly one of --ideal or --point")),
        },
        Command::Deform { point, at } => deform(common, &input::point(point)?, at),
        Command::AffineCell => affine_cell(common, &cfg),
        Command::Dimension { ideal, preprocess } => dimension(common, &cfg, *ideal, *preprocess),
    }
}

fn route_of(name: RouteName, policy: Policy, reverse_pairs: bool) -> Route {
    match name {
        RouteName::Substitution => Route::Substitution,
        RouteName::Elimination => Route::EliminationOracle,
        RouteName::Reduction => Route::Reduction(ReductionPolicy {
            largest_reducer: policy == Policy::Largest,
            reverse_pairs,
        }),
    }
}

fn route_label(r: &Route) -> String {
    match r {
        Route::Substitution => "substitution".into(),
        Route::EliminationOracle => "elimination".into(),
        Route::Reduction(p) => {
            let who = if p.largest_reducer { "largest" } else { "smallest" };
            let pairs = if p.reverse_pairs { ", reverse pairs" } else { "" };
            format!("reduction ({who} reducer{pairs})")
        }
    }
}

fn order_ideal(common: &Common) -> Result<OrderIdeal, Failure> {
    input::order_ideal(common.order_ideal.as_deref(), common.order_ideal_file.as_deref(), common.n)
}

fn sigma(common: &Common, o: &OrderIdeal) -> TermOrdering {
    TermOrdering::from_name(common.sigma.name(), &o.universe().names()).expect("known ordering")
}

fn scheme(common: &Common) -> Result<(OrderIdeal, TermOrdering, GbScheme), Failure> {
    let o = order_ideal(common)?;
    let s = sigma(common, &o);
    let sch = GbScheme::new(&o, &s)?;
    Ok((o, s, sch))
}

fn term_list(o: &OrderIdeal, ts: &[bbscheme_core::poly::Term]) -> Vec<String> {
    ts.iter().map(|t| o.format_term(t)).collect()
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn key_names<'a>(keys: impl IntoIterator<Item = &'a (usize, usize)>) -> Vec<String> {
    let mut ks: Vec<(usize, usize)> = keys.into_iter().copied().collect();
    ks.sort_by_key(|&(i, j)| (j, i));
    ks.into_iter().map(|(i, j)| c_name(i, j)).collect()
}

fn push_list(text: &mut String, title: &str, items: &[String]) {
    let _ = writeln!(text, "{title} ({}):", items.len());
    for it in items {
        let _ = writeln!(text, "  {it}");
    }
}

fn validate(common: &Common) -> Result<Output, Failure> {
    let o = order_ideal(common)?;
    let names = o.universe().names();
    let (terms, border, corners) = (term_list(&o, o.terms()), term_list(&o, o.border()), term_list(&o, o.corners()));
    let mut text = String::new();
    let _ = writeln!(text, "variables: {}", names.join(", "));
    let _ = writeln!(text, "mu = {}", o.mu());
    let _ = writeln!(text, "nu = {}", o.nu());
    let _ = writeln!(text, "eta = {}", o.eta());
    let _ = writeln!(text, "order ideal: {}", terms.join(", "));
    let _ = writeln!(text, "border: {}", border.join(", "));
    let _ = writeln!(text, "corners: {}", corners.join(", "));
    let js = json!({
        "variables": names,
        "mu": o.mu(),
        "nu": o.nu(),
        "eta": o.eta(),
        "order_ideal": terms,
        "border": border,
        "corners": corners,
    });
    Ok(Output::ok(text, js))
}

fn border_scheme(common: &Common, matrices: bool) -> Result<Output, Failure> {
    let o = order_ideal(common)?;
    let bs = BorderScheme::new(&o)?;
    let gens = strings(&bs.commutator_generators());
    let mut text = String::new();
    let _ = writeln!(text, "c-variables: {}", bs.c_universe().len());
    push_list(&mut text, "generators", &gens);
    let mut js = json!({
        "c_variables": bs.c_universe().names(),
        "generators": gens,
    });
    if matrices {
        let ms: Vec<String> = bs.multiplication_matrices().iter().map(|m| m.to_string()).collect();
        for (k, m) in ms.iter().enumerate() {
            let _ = writeln!(text, "multiplication matrix of {}:\n{m}", o.universe().name(k));
        }
        js["multiplication_matrices"] = json!(ms);
    }
    Ok(Output::ok(text, js))
}

/// Whether two ideals over the same ring have the same reduced Gröbner basis
/// under the membership ordering of the first.
fn same_reduced_basis(a: &Ideal, b: &Ideal, cfg: &GbConfig) -> Result<bool, Failure> {
    let ga = a.membership_basis(cfg)?;
    let b = Ideal::rebased(a.universe(), b.generators())?;
    let gb = b.groebner_basis(ga.ordering(), cfg)?;
    Ok(ga.polys() == gb.polys())
}

fn gb_scheme(common: &Common, cfg: &GbConfig, route: Route, cross: Option<RouteName>) -> Result<Output, Failure> {
    let (o, _, sch) = scheme(common)?;
    let ideal = sch.ideal(route, cfg)?;
    let gens = strings(&ideal.nonzero_generators());
    let l = key_names(&sch.vars().l_o);
    let scos = key_names(&sch.vars().s_co);
    let mut text = String::new();
    let _ = writeln!(text, "order ideal: {}", term_list(&o, o.terms()).join(", "));
    let _ = writeln!(text, "ordering: {}", common.sigma.name());
    let _ = writeln!(text, "L: {}", if l.is_empty() { "(none)".to_string() } else { l.join(", ") });
    let _ = writeln!(text, "scheme variables ({}): {}", scos.len(), scos.join(", "));
    let star = strings(&sch.generic_gb_prebasis());
    push_list(&mut text, "gb prebasis", &star);
    let _ = writeln!(text, "route: {}", route_label(&route));
    push_list(&mut text, "generators", &gens);
    let mut js = json!({
        "order_ideal": term_list(&o, o.terms()),
        "ordering": common.sigma.name(),
        "l": l,
        "scheme_variables": scos,
        "route": route_label(&route),
        "gb_prebasis": star,
        "generators": gens,
    });
    let mut failure = None;
    if let Some(other) = cross {
        let r2 = route_of(other, Policy::Smallest, false);
        let second = sch.ideal(r2, cfg)?;
        let equal = same_reduced_basis(&ideal, &second, cfg)?;
        let _ = writeln!(text, "cross-check: {}", route_label(&r2));
        let _ = writeln!(text, "{}", if equal { "IDEALS EQUAL" } else { "IDEALS DIFFER" });
        js["cross_check"] = json!({ "route": route_label(&r2), "equal": equal });
        if !equal {
            failure = Some(Failure::math("the two routes produced different ideals"));
        }
    }
    Ok(Output { text, json: js, failure })
}

fn weights(common: &Common, verify: bool) -> Result<Output, Failure> {
    let (o, _, sch) = scheme(common)?;
    let ws = sch.weights();
    let named = ws.named(&o.universe().names());
    let mut text = String::new();
    let _ = writeln!(
        text,
        "V: {}",
        named.v.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")
    );
    let fmt = |m: &std::collections::BTreeMap<(usize, usize), u64>| -> String {
        let mut ks: Vec<_> = m.iter().collect();
        ks.sort_by_key(|(&(i, j), _)| (j, i));
        ks.into_iter().map(|(&(i, j), w)| format!("{}={w}", c_name(i, j))).collect::<Vec<_>>().join(", ")
    };
    let _ = writeln!(text, "W: {}", fmt(&ws.w));
    let _ = writeln!(text, "Wbar: {}", fmt(&ws.wbar));
    let mut js = json!({ "v": named.v, "w": named.w, "wbar": named.wbar });
    let mut failure = None;
    if verify {
        let rep = verify_homogeneity(&sch, ws)?;
        for c in &rep.claims {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(text, "claim {}: {verdict} ({})", c.claim, c.description);
            if let Some(w) = &c.witness {
                let _ = writeln!(text, "  witness: {w}");
            }
        }
        js["homogeneity"] = serde_json::to_value(&rep).expect("serializable");
        if !rep.all_passed() {
            failure = Some(Failure::math("a homogeneity claim failed"));
        }
    }
    Ok(Output { text, json: js, failure })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn on_gb_scheme(sch: &GbScheme, p: &SchemePoint) -> Result<bool, Failure> {
    match sch.expand_point(p) {
        Ok(full) => Ok(sch.border_scheme().is_point(&full)?),
        Err(Error::NotAPoint { .. }) => Ok(false),
        Err(e) => Err(e.into()),
    }
}

fn check_point(common: &Common, cfg: &GbConfig, p: &SchemePoint) -> Result<Output, Failure> {
    let (o, _, sch) = scheme(common)?;
    p.check_grid(o.mu(), o.nu())?;
    let fast = is_border_basis_point(&o, p)?;
    let oracle = oracle_is_border_basis(&o, p, cfg)?;
    let on_g = fast && on_gb_scheme(&sch, p)?;
    let mut text = String::new();
    let _ = writeln!(text, "border basis point: {}", yes(fast));
    let _ = writeln!(text, "oracle: {}", yes(oracle.holds));
    if let Some(d) = &oracle.diagnostic {
        let _ = writeln!(text, "  {d}");
    }
    let _ = writeln!(text, "gb scheme point: {}", yes(on_g));
    let js = json!({
        "border_basis_point": fast,
        "oracle": oracle.holds,
        "oracle_diagnostic": oracle.diagnostic,
        "gb_scheme_point": on_g,
    });
    let failure = (fast != oracle.holds).then(|| Failure::math("commutator check and oracle disagree"));
    Ok(Output { text, json: js, failure })
}

fn round_trip_ideal(common: &Common, cfg: &GbConfig, s: &str) -> Result<Output, Failure> {
    let u = input::universe(s, common.n)?;
    let ideal = Ideal::new(&u, parse_polynomial_list(s, &u)?)?;
    let sg = TermOrdering::from_name(common.sigma.name(), &u.names())?;
    let (o, p) = point_from_ideal(&ideal, &sg, cfg)?;
    let sch = GbScheme::new(&o, &sg)?;
    let back = sch.ideal_from_point(&p)?;
    let gb = ideal.groebner_basis(&sg, cfg)?;
    let (o2, p2) = point_from_ideal(&Ideal::new(&u, back.clone())?, &sg, cfg)?;
    let ok = back == gb.polys() && o2.terms() == o.terms() && p2 == p;
    let mut text = String::new();
    let _ = writeln!(text, "order ideal: {}", term_list(&o, o.terms()).join(", "));
    let _ = writeln!(text, "point: {}", p.to_json_string());
    push_list(&mut text, "reduced basis", &strings(&back));
    let _ = writeln!(text, "{}", if ok { "ROUND TRIP OK" } else { "ROUND TRIP FAILED" });
    let js = json!({
        "order_ideal": term_list(&o, o.terms()),
        "point": p.to_json_value(),
        "reduced_basis": strings(&back),
        "ok": ok,
    });
    let failure = (!ok).then(|| Failure::math("round trip did not reproduce its input"));
    Ok(Output { text, json: js, failure })
}

fn round_trip_point(common: &Common, cfg: &GbConfig, p: &SchemePoint) -> Result<Output, Failure> {
    let (o, s, sch) = scheme(common)?;
    let gens = sch.ideal_from_point(p)?;
    let full = sch.expand_point(&p.restrict(|i, j| sch.vars().s_co.contains(&(i, j))))?;
    let (o2, p2) = point_from_ideal(&Ideal::new(o.universe(), gens.clone())?, &s, cfg)?;
    let ok = o2.terms() == o.terms() && p2 == full && on_gb_scheme(&sch, p)?;
    let mut text = String::new();
    push_list(&mut text, "reduced basis", &strings(&gens));
    let _ = writeln!(text, "point: {}", p2.to_json_string());
    let _ = writeln!(text, "{}", if ok { "ROUND TRIP OK" } else { "ROUND TRIP FAILED" });
    let js = json!({
        "reduced_basis": strings(&gens),
        "point": p2.to_json_value(),
        "ok": ok,
    });
    let failure = (!ok).then(|| Failure::math("round trip did not reproduce its input"));
    Ok(Output { text, json: js, failure })
}

fn deform(common: &Common, p: &SchemePoint, at: &[String]) -> Result<Output, Failure> {
    let (_, _, sch) = scheme(common)?;
    let fam = sch.deform(p, "t")?;
    let gens = strings(&fam.generators);
    let mut text = String::new();
    push_list(&mut text, "family", &gens);
    let mut fibers = Vec::new();
    for s in at {
        let t0 = parse_coeff(s).map_err(|e| Failure::input(e.to_string()))?;
        let fiber = strings(&fam.fiber_generators(&t0)?);
        let _ = writeln!(text, "fiber at t = {s}: {}", fiber.join(", "));
        fibers.push(json!({ "t": s, "generators": fiber }));
    }
    let js = json!({ "parameter": "t", "generators": gens, "fibers": fibers });
    Ok(Output::ok(text, js))
}

fn affine_cell(common: &Common, cfg: &GbConfig) -> Result<Output, Failure> {
    let (_, _, sch) = scheme(common)?;
    let ig = sch.ideal(Route::Substitution, cfg)?;
    let w = sch.weights().vector_for(ig.universe(), false);
    let (text, js) = match affine_cell_detect(&ig, &w)? {
        AffineCell::AffineSpace(vars) => (
            format!("AFFINE SPACE of dimension {}\nfree variables: {}\n", vars.len(), vars.join(", ")),
            json!({ "affine": true, "free_variables": vars }),
        ),
        AffineCell::Residual(r) => {
            let gens = strings(r.generators());
            let mut text = format!("RESIDUAL in {} variables\n", r.universe().len());
            push_list(&mut text, "generators", &gens);
            (text, json!({ "affine": false, "variables": r.universe().names(), "generators": gens }))
        }
    };
    Ok(Output::ok(text, js))
}

fn dimension(common: &Common, cfg: &GbConfig, which: SchemeIdeal, pre: Preprocess) -> Result<Output, Failure> {
    let ideal = match which {
        SchemeIdeal::BorderScheme => BorderScheme::new(&order_ideal(common)?)?.ideal(),
        SchemeIdeal::GbScheme => scheme(common)?.2.ideal(Route::Substitution, cfg)?,
    };
    let (d, reduced) = match pre {
        Preprocess::Linear => {
            let red = linear_preprocess(&ideal)?;
            let counts = (red.residual.universe().len(), red.residual.nonzero_generators().len());
            (krull_dimension_split(&ideal, cfg)?, Some(counts))
        }
        Preprocess::None => (krull_dimension(&ideal, cfg)?, None),
    };
    let mut text = format!("dimension: {d}\n");
    let _ = writeln!(text, "ambient variables: {}", ideal.universe().len());
    let mut js = json!({ "dimension": d, "ambient_variables": ideal.universe().len() });
    if let Some((v, g)) = reduced {
        let _ = writeln!(text, "after linear preprocessing: {v} variables, {g} generators");
        js["preprocessed"] = json!({ "variables": v, "generators": g });
    }
    Ok(Output::ok(text, js))
}
