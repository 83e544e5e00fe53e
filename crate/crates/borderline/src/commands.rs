//! Command dispatch: every command returns an [`Outcome`].

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use serde_json::{json, Value};

use borderline_core::apolarity;
use borderline_core::border::enumerate::{default_cap, hf_row};
use borderline_core::border::monomial::{monomial_border_rank_with, monomial_vps_report};
use borderline_core::border::omega::{generic_omega_rank, OmegaOutcome, OMEGA_TRIPLES};
use borderline_core::border::vsp::{ci_vspbar, cw_cubic_vspbar, plateau_identifiability, sylvester_binary, ternary_cubic_vspbar, CwKind, PlateauVerdict};
use borderline_core::border::wild::{tensor_wildness, wild_tensor_replay, Wildness};
use borderline_core::border::{Certificate, EnumerationConfig, Shape, VspBarReport};
use borderline_core::groebner;
use borderline_core::hilbert;
use borderline_core::homological;
use borderline_core::{GradedRing, Ideal, Multidegree};

use crate::args::{Cli, Command, Global};
use crate::error::{usage, Result};
use crate::input;
use crate::parallel;
use crate::report::{certificate_lines, Report, Timings};

#[derive(Clone, Debug)]
pub struct Context {
    /// Directory against which `@file` arguments are resolved.
    pub base_dir: PathBuf,
    pub threads: usize,
}

impl Context {
    pub fn from_env() -> Context {
        Context { base_dir: std::env::current_dir().unwrap_or_default(), threads: parallel::threads() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::Inconclusive => 2,
        }
    }

    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Success
        } else {
            Status::Inconclusive
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub status: Status,
    /// Human-readable lines, certificates excluded.
    pub text: Vec<String>,
    /// Ideals produced along the way, for cross-checks over a corpus run.
    pub ideals: Vec<Ideal>,
}

impl Outcome {
    fn new(report: Report, status: Status, text: Vec<String>) -> Outcome {
        Outcome { report, status, text, ideals: Vec::new() }
    }

    fn with_ideals(mut self, ideals: Vec<Ideal>) -> Outcome {
        self.ideals = ideals;
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return self.report.to_json();
        }
        let mut lines = self.text.clone();
        lines.extend(certificate_lines(&self.report.certificates));
        lines.join("\n")
    }
}

/// Minimal generators in a fixed order: by degree, then by the polynomial order.
pub fn generators(i: &Ideal) -> Vec<String> {
    let mut gens = groebner::minimal_generators(i);
    gens.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| b.cmp(a)));
    gens.iter().map(|g| g.to_string_with(i.ring().var_names())).collect()
}

pub fn ideal_text(i: &Ideal) -> String {
    format!("({})", generators(i).join(", "))
}

fn degree_json(v: &Multidegree) -> Value {
    json!(v.0)
}

fn hf_table(i: &Ideal, lo: &Multidegree, hi: &Multidegree) -> Vec<(Multidegree, u64)> {
    let gb = groebner::grevlex_basis(i);
    Multidegree::box_range(lo, hi).into_iter().map(|v| {
        let h = hilbert::hilbert_function_gb(&gb, &v);
        (v, h)
    }).collect()
}

fn hf_text(table: &[(Multidegree, u64)], single: bool) -> Vec<String> {
    if single {
        vec![table.iter().map(|(_, h)| h.to_string()).collect::<Vec<_>>().join(" ")]
    } else {
        table.iter().map(|(v, h)| format!("{}: {}", v, h)).collect()
    }
}

fn hf_json(table: &[(Multidegree, u64)]) -> Value {
    json!({
        "degrees": table.iter().map(|(v, _)| degree_json(v)).collect::<Vec<_>>(),
        "values": table.iter().map(|(_, h)| *h).collect::<Vec<_>>(),
    })
}

fn input_map(cli: &Cli) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    let mut put = |k: &str, v: Option<String>| {
        if let Some(v) = v {
            m.insert(k.to_string(), v);
        }
    };
    let g = &cli.global;
    put("command", Some(cli.command.name().to_string()));
    put("ring", g.ring.clone());
    put("order", g.order.clone());
    put("range", g.range.clone());
    put("cap", g.cap.map(|c| c.to_string()));
    put("legacy_cap", g.legacy_cap.then(|| "true".into()));
    put("seed", g.seed.map(|s| s.to_string()));
    let flag = |b: bool| b.then(|| "true".to_string());
    match &cli.command {
        Command::Ring | Command::Corpus { .. } => {}
        Command::Ann { form, up_to } => {
            put("form", Some(form.clone()));
            put("up_to", up_to.map(|d| d.to_string()));
        }
        Command::Hf { ideal, form } => {
            put("ideal", ideal.clone());
            put("form", form.clone());
        }
        Command::Gb { ideal } | Command::Sat { ideal } | Command::Hom0 { ideal } => put("ideal", Some(ideal.clone())),
        Command::Ext1 { ideal, over, ci } => {
            put("ideal", Some(ideal.clone()));
            put("over", over.clone());
            put("ci", ci.map(|d| d.to_string()));
        }
        Command::Enumerate { r, form, base, base_degree, apolar, ext_filter } => {
            put("r", Some(r.to_string()));
            put("form", form.clone());
            put("base", base.clone());
            put("base_degree", base_degree.map(|d| d.to_string()));
            put("apolar", flag(*apolar));
            put("ext_filter", flag(*ext_filter));
        }
        Command::MonomialBr { form, no_search } => {
            put("form", Some(form.clone()));
            put("no_search", flag(*no_search));
        }
        Command::Wild3 { m: mm, tensor, replay } => {
            put("m", mm.map(|x| x.to_string()));
            put("tensor", tensor.clone());
            put("replay", flag(*replay));
        }
        Command::Identifiable { form, r, omega } => {
            put("form", form.clone());
            put("r", r.map(|x| x.to_string()));
            put("omega", omega.clone());
        }
        Command::Vspbar { form, ci, cw, vps } => {
            put("form", form.clone());
            put("ci", ci.clone());
            put("cw", cw.clone());
            put("vps", vps.clone());
        }
    }
    m
}

/// Runs one command; input errors come back as `Err`.
pub fn run(cli: &Cli, ctx: &Context) -> Result<Outcome> {
    let start = Instant::now();
    let input = input_map(cli);
    let g = &cli.global;
    let mut out = match &cli.command {
        Command::Ring => ring_cmd(g, input)?,
        Command::Ann { form, up_to } => ann_cmd(g, input, form, *up_to)?,
        Command::Hf { ideal, form } => hf_cmd(g, input, ideal.as_deref(), form.as_deref())?,
        Command::Gb { ideal } => gb_cmd(g, input, ideal)?,
        Command::Sat { ideal } => sat_cmd(g, input, ideal)?,
        Command::Hom0 { ideal } => hom0_cmd(g, input, ideal)?,
        Command::Ext1 { ideal, over, ci } => ext1_cmd(g, input, ideal, over.as_deref(), *ci)?,
        Command::Enumerate { r, form, base, base_degree, apolar, ext_filter } => {
            enumerate_cmd(g, ctx, input, *r, form.as_deref(), base.as_deref(), *base_degree, *apolar, *ext_filter)?
        }
        Command::MonomialBr { form, no_search } => monomial_br_cmd(g, input, form, !no_search)?,
        Command::Wild3 { m, tensor, replay } => wild3_cmd(ctx, input, *m, tensor.as_deref(), *replay)?,
        Command::Identifiable { form, r, omega } => identifiable_cmd(g, input, form.as_deref(), *r, omega.as_deref())?,
        Command::Vspbar { form, ci, cw, vps } => vspbar_cmd(g, input, form.as_deref(), ci.as_deref(), cw.as_deref(), vps.as_deref())?,
        Command::Corpus { dir, bless } => crate::corpus::corpus_cmd(ctx, input, dir.clone(), *bless)?,
    };
    out.report.timings = Some(Timings { total_ms: start.elapsed().as_secs_f64() * 1000.0 });
    Ok(out)
}

fn check_order(g: &Global, ring: &GradedRing) -> Result<()> {
    input::order(g.order.as_deref(), ring).map(|_| ())
}

fn ring_cmd(g: &Global, input: BTreeMap<String, String>) -> Result<Outcome> {
    let Some(desc) = g.ring.as_deref() else {
        return usage("ring needs --ring");
    };
    let ring = input::ring(Some(desc), &[], false)?;
    check_order(g, &ring)?;
    let names = ring.var_names();
    let irrelevant: Vec<String> = ring.irrelevant_gens().iter().map(|m| m.display(names).to_string()).collect();
    let blocks: Vec<Value> = ring.blocks().iter().map(|b| json!({"name": b.name, "size": b.size})).collect();
    let result = json!({
        "variables": names,
        "dual_variables": ring.dual_var_names(),
        "blocks": blocks,
        "grading_rank": ring.rank(),
        "irrelevant": irrelevant,
    });
    let text = vec![
        format!("S = Q[{}]", names.join(", ")),
        format!("T = Q[{}]", ring.dual_var_names().join(", ")),
        format!("Pic rank {}", ring.rank()),
        format!("irrelevant ideal ({})", irrelevant.join(", ")),
    ];
    let report = Report::new(input, "ring", "ok").with_result(result);
    Ok(Outcome::new(report, Status::Success, text))
}

fn ann_cmd(g: &Global, input: BTreeMap<String, String>, text: &str, up_to: Option<i32>) -> Result<Outcome> {
    let ring = input::ring(g.ring.as_deref(), &[text], true)?;
    check_order(g, &ring)?;
    let f = input::form(text, &ring)?;
    let ann = match up_to {
        Some(d) => apolarity::annihilator_up_to(&f, d)?,
        None => apolarity::annihilator(&f)?,
    };
    let table = hf_table(&ann, &ring.zero_degree(), f.degree());
    let gens = generators(&ann);
    let mut lines = vec![format!("Ann(F) = ({})", gens.join(", "))];
    let hf = hf_text(&table, ring.rank() == 1);
    if ring.rank() == 1 {
        lines.push(format!("HF: {}", hf[0]));
    } else {
        lines.extend(hf);
    }
    let result = json!({"generators": gens, "hilbert_function": hf_json(&table)});
    let report = Report::new(input, "annihilator", "ok").with_result(result);
    Ok(Outcome::new(report, Status::Success, lines).with_ideals(vec![ann]))
}

fn hf_cmd(g: &Global, input: BTreeMap<String, String>, ideal: Option<&str>, form: Option<&str>) -> Result<Outcome> {
    let (i, top) = match (ideal, form) {
        (Some(t), None) => {
            let ring = input::ring(g.ring.as_deref(), &[t], false)?;
            let i = input::ideal(t, &ring)?;
            let top = i.max_gen_degree() as i32 + 3;
            (i, top)
        }
        (None, Some(t)) => {
            let ring = input::ring(g.ring.as_deref(), &[t], true)?;
            let f = input::form(t, &ring)?;
            let top = f.degree().0.iter().copied().max().unwrap_or(0) + 1;
            (apolarity::annihilator(&f)?, top)
        }
        _ => return usage("hf needs exactly one of --ideal and --form"),
    };
    let ring = i.ring_arc().clone();
    check_order(g, &ring)?;
    let (lo, hi) = input::range(g.range.as_deref(), &ring, top)?;
    let table = hf_table(&i, &lo, &hi);
    let text = hf_text(&table, ring.rank() == 1);
    let report = Report::new(input, "hilbert_function", "ok").with_result(hf_json(&table));
    Ok(Outcome::new(report, Status::Success, text).with_ideals(vec![i]))
}

fn gb_cmd(g: &Global, input: BTreeMap<String, String>, text: &str) -> Result<Outcome> {
    let ring = input::ring(g.ring.as_deref(), &[text], false)?;
    let ord = input::order(g.order.as_deref(), &ring)?;
    let i = input::ideal(text, &ring)?;
    let gb = groebner::buchberger(&i, &ord);
    let names = ring.var_names();
    let elems: Vec<String> = gb.elements().iter().map(|p| p.to_string_with(names)).collect();
    let leads: Vec<String> = gb.leading_monomials().iter().map(|m| m.display(names).to_string()).collect();
    let cert = Certificate::new("Buchberger criterion", groebner::is_groebner_basis(gb.elements(), &ord), format!("{} elements", elems.len()));
    let result = json!({"basis": elems, "leading_monomials": leads});
    let report = Report::new(input, "groebner_basis", "ok").with_certificates([&cert]).with_result(result);
    let status = Status::from_bool(report.all_hold());
    let mut lines = vec![format!("{} elements", elems.len())];
    lines.extend(elems.iter().map(|e| format!("  {}", e)));
    Ok(Outcome::new(report, status, lines).with_ideals(vec![i]))
}

fn sat_cmd(g: &Global, input: BTreeMap<String, String>, text: &str) -> Result<Outcome> {
    let ring = input::ring(g.ring.as_deref(), &[text], false)?;
    check_order(g, &ring)?;
    let i = input::ideal(text, &ring)?;
    let sat = groebner::saturate_irrelevant(&i);
    let saturated = groebner::ideals_equal(&i, &sat);
    let verdict = if saturated { "saturated" } else { "not saturated" };
    let gens = generators(&sat);
    let result = json!({"saturated": saturated, "saturation": gens});
    let lines = vec![verdict.to_string(), format!("saturation = ({})", gens.join(", "))];
    let report = Report::new(input, "saturation", verdict).with_result(result);
    Ok(Outcome::new(report, Status::Success, lines).with_ideals(vec![i, sat]))
}

fn hom0_cmd(g: &Global, input: BTreeMap<String, String>, text: &str) -> Result<Outcome> {
    let ring = input::ring(g.ring.as_deref(), &[text], false)?;
    check_order(g, &ring)?;
    let i = input::ideal(text, &ring)?;
    let n = homological::hom_degree0_dim(&i);
    let report = Report::new(input, "hom_degree0", "ok").with_result(json!({"dim": n}));
    Ok(Outcome::new(report, Status::Success, vec![n.to_string()]).with_ideals(vec![i]))
}

fn ext1_cmd(g: &Global, input: BTreeMap<String, String>, text: &str, over: Option<&str>, ci: Option<i32>) -> Result<Outcome> {
    let texts: Vec<&str> = [Some(text), over].into_iter().flatten().collect();
    let ring = input::ring(g.ring.as_deref(), &texts, false)?;
    check_order(g, &ring)?;
    let i = input::ideal(text, &ring)?;
    let j = match over {
        Some(t) => input::ideal(t, &ring)?,
        None => groebner::saturate_irrelevant(&i),
    };
    if !groebner::is_subset(&i, &j) {
        return usage("--ideal must be contained in --over");
    }
    let n = homological::ext1_degree0_dim(&j, &i)?;
    let mut certs = Vec::new();
    let mut result = json!({"dim": n, "over": generators(&j)});
    if let Some(d) = ci {
        let formula = homological::ext1_ci_formula(&j, &i, d)?;
        result["ci_formula"] = json!(formula);
        certs.push(Certificate::new("complete-intersection formula agrees", formula == n, format!("dim J_d/(I_d + (J^2)_d) = {}", formula)));
    }
    let report = Report::new(input, "ext1_degree0", "ok").with_certificates(&certs).with_result(result);
    let status = Status::from_bool(report.all_hold());
    Ok(Outcome::new(report, status, vec![n.to_string()]).with_ideals(vec![i, j]))
}

#[allow(clippy::too_many_arguments)]
fn enumerate_cmd(
    g: &Global,
    ctx: &Context,
    input: BTreeMap<String, String>,
    r: u64,
    form: Option<&str>,
    base: Option<&str>,
    base_degree: Option<i32>,
    apolar: bool,
    ext_filter: bool,
) -> Result<Outcome> {
    let ring = match (form, base) {
        (Some(t), _) => input::ring(g.ring.as_deref(), &[t], true)?,
        (None, Some(b)) => input::ring(g.ring.as_deref(), &[b], false)?,
        (None, None) => input::ring(g.ring.as_deref(), &[], false)?,
    };
    check_order(g, &ring)?;
    let f = form.map(|t| input::form(t, &ring)).transpose()?;
    let j0 = match (base, base_degree, &f) {
        (Some(b), _, _) => input::ideal(b, &ring)?,
        (None, Some(d), Some(f)) => apolarity::annihilator_up_to(f, d)?,
        (None, Some(_), None) => return usage("--base-degree needs --form"),
        (None, None, _) => Ideal::zero(&ring),
    };
    if apolar && f.is_none() {
        return usage("--apolar needs --form");
    }
    let cap = match (g.cap, g.legacy_cap) {
        (Some(_), true) => return usage("--cap and --legacy-cap are exclusive"),
        (Some(c), false) => c,
        (None, true) => r as u32,
        (None, false) => default_cap(&j0, r),
    };
    let cfg = EnumerationConfig::with_cap(j0.clone(), r, cap, if apolar { f.clone() } else { None })?;
    let found = parallel::enumerate(&cfg, ctx.threads)?;
    let listed: Vec<Value> =
        found.iter().map(|i| json!({"generators": generators(i), "hilbert_function": hf_row(i, cap + 1)})).collect();
    let mut result = json!({"r": r, "cap": cap, "base": generators(&j0), "count": found.len(), "ideals": listed});
    let mut lines = vec![format!("{} ideals (cap {})", found.len(), cap)];
    let mut verdict = format!("{} ideals", found.len());
    let mut ideals = found.clone();
    if ext_filter {
        let verdicts = parallel::ext_filter(&found, ctx.threads)?;
        let kept: Vec<_> = verdicts.iter().filter(|v| v.possibly_in_slip()).collect();
        let mut kept_json = Vec::new();
        lines.push(format!("{} kept by the Ext^1 filter", kept.len()));
        for v in &kept {
            let hom = homological::hom_degree0_dim(&v.ideal);
            lines.push(format!("  {}  hom0 = {}", ideal_text(&v.ideal), hom));
            kept_json.push(json!({"generators": generators(&v.ideal), "saturated": v.saturated, "ext1": v.ext1, "hom0": hom}));
        }
        result["ext_filter"] = json!({"kept": kept_json, "excluded": verdicts.len() - kept.len()});
        verdict = format!("{} ideals, {} kept", found.len(), kept.len());
    } else {
        lines.extend(found.iter().map(|i| format!("  {}", ideal_text(i))));
    }
    ideals.push(j0);
    let report = Report::new(input, "enumerate_monomial_apolar_ideals", verdict).with_result(result);
    Ok(Outcome::new(report, Status::Success, lines).with_ideals(ideals))
}

fn monomial_br_cmd(g: &Global, input: BTreeMap<String, String>, text: &str, search: bool) -> Result<Outcome> {
    let ring = input::ring(g.ring.as_deref(), &[text], true)?;
    check_order(g, &ring)?;
    let f = input::form(text, &ring)?;
    let rep = monomial_border_rank_with(&f, search)?;
    let ok = rep.certificates.iter().all(|c| c.holds);
    let verdict = if ok { format!("border rank {}", rep.value) } else { "inconclusive".into() };
    let result = json!({
        "value": rep.value,
        "exponents": rep.exponents,
        "upper_ideal": generators(&rep.upper_ideal),
        "search_empty": rep.search_empty,
    });
    let report = Report::new(input, "monomial_border_rank", verdict).with_certificates(&rep.certificates).with_result(result);
    let lines = vec![rep.value.to_string()];
    Ok(Outcome::new(report, Status::from_bool(ok), lines).with_ideals(vec![rep.upper_ideal]))
}

fn wild3_cmd(ctx: &Context, input: BTreeMap<String, String>, m: Option<u64>, tensor: Option<&str>, replay: bool) -> Result<Outcome> {
    if replay {
        let rep = wild_tensor_replay()?;
        let points = |v: &[(Ideal, usize, bool)]| -> Vec<Value> {
            v.iter().map(|(i, hom, gen)| json!({"generators": generators(i), "hom0": hom, "generic_hf": gen})).collect()
        };
        let result = json!({
            "tensor": input::tensor_json(&rep.form),
            "quadrics": rep.quadrics.len(),
            "groebner_checks": rep.groebner_checks,
            "distinguished": points(&rep.distinguished),
            "monomial": points(&rep.monomial),
        });
        let verdict = rep.wildness.verdict.label();
        let lines = vec![
            verdict.to_string(),
            format!("I' = {}", ideal_text(&rep.i_prime)),
            format!("{} coefficient patterns; tangent dimensions {:?}", rep.groebner_checks.len(), rep.distinguished.iter().map(|d| d.1).collect::<Vec<_>>()),
        ];
        let report = Report::new(input, "wild_tensor_replay", verdict).with_certificates(&rep.certificates).with_result(result);
        return Ok(Outcome::new(report, Status::from_bool(rep.certified()), lines));
    }
    let (Some(m), Some(t)) = (m, tensor) else {
        return usage("wild3 needs --m and --tensor, or --replay");
    };
    let f = input::tensor(t, &ctx.base_dir)?;
    let rep = tensor_wildness(&f, m)?;
    let mut certs = vec![Certificate::new("HF(S/I, 1) = m", rep.sharp, format!("{} (m = {})", rep.hf_one, m))];
    if let Some(v) = &rep.vspbar {
        certs = v.certificates.clone();
    }
    let comparisons: Vec<Value> =
        rep.comparisons.iter().map(|(v, a, b)| json!({"degree": degree_json(v), "dim_i": a, "dim_k": b})).collect();
    let mut result = json!({
        "m": m,
        "concise": rep.concise,
        "hf_one": rep.hf_one,
        "sharp": rep.sharp,
        "comparisons": comparisons,
        "i": generators(&rep.i),
        "k": generators(&rep.k),
    });
    let mut lines = vec![rep.verdict.label().to_string(), format!("K = {}", ideal_text(&rep.k))];
    if let Some(v) = &rep.vspbar {
        result["vspbar"] = vsp_json(v);
        lines.push(format!("VSP: {}", v.verdict()));
    }
    let status = Status::from_bool(rep.verdict != Wildness::Inconclusive);
    let report = Report::new(input, "tensor_wildness", rep.verdict.label()).with_certificates(&certs).with_result(result);
    Ok(Outcome::new(report, status, lines))
}

fn parse_triple(text: &str) -> Result<Vec<u64>> {
    let v: std::result::Result<Vec<u64>, _> = text.split(',').map(|s| s.trim().parse::<u64>()).collect();
    match v {
        Ok(v) if v.len() == 3 => Ok(v),
        _ => usage(format!("expected three comma-separated integers, got `{}`", text)),
    }
}

fn identifiable_cmd(g: &Global, input: BTreeMap<String, String>, form: Option<&str>, r: Option<u64>, omega: Option<&str>) -> Result<Outcome> {
    if let Some(o) = omega {
        let triples: Vec<(u32, u32, usize)> = if o.trim() == "all" {
            OMEGA_TRIPLES.to_vec()
        } else {
            let v = parse_triple(o)?;
            vec![(v[0] as u32, v[1] as u32, v[2] as usize)]
        };
        let seed = g.seed.unwrap_or(1);
        let mut certs = Vec::new();
        let mut rows = Vec::new();
        for (a, e, t) in triples {
            let holds = generic_omega_rank(a, e, t, seed) == OmegaOutcome::Holds;
            certs.push(Certificate::new(&format!("generic rank ≥ {} for (a, e) = ({}, {})", t, a, e), holds, format!("seed {}", seed)));
            rows.push(json!({"a": a, "e": e, "target": t, "holds": holds}));
        }
        let ok = certs.iter().all(|c| c.holds);
        let verdict = if ok { "holds" } else { "inconclusive" };
        let report = Report::new(input, "generic_omega_rank", verdict).with_certificates(&certs).with_result(json!({"triples": rows}));
        return Ok(Outcome::new(report, Status::from_bool(ok), vec![verdict.to_string()]));
    }
    let (Some(text), Some(r)) = (form, r) else {
        return usage("identifiable needs a form and --r, or --omega");
    };
    let ring = input::ring(g.ring.as_deref(), &[text], true)?;
    check_order(g, &ring)?;
    let f = input::form(text, &ring)?;
    let v = plateau_identifiability(&f, r)?;
    let verdict = v.label();
    let mut lines = vec![verdict.clone()];
    let mut ideals = Vec::new();
    let (result, status) = match &v {
        PlateauVerdict::Identifiable { degree, ideal } => {
            lines.push(format!("plateau at {}: {}", degree, ideal_text(ideal)));
            ideals.push(ideal.clone());
            (json!({"degree": degree_json(degree), "ideal": generators(ideal)}), Status::Success)
        }
        PlateauVerdict::PlateauWithoutWitness { degree } => (json!({"degree": degree_json(degree)}), Status::Inconclusive),
        PlateauVerdict::NoPlateau => (Value::Null, Status::Inconclusive),
    };
    let report = Report::new(input, "plateau_identifiability", verdict).with_result(result);
    Ok(Outcome::new(report, status, lines).with_ideals(ideals))
}

fn vsp_json(rep: &VspBarReport) -> Value {
    let mut v = json!({"r": rep.r, "shape": rep.shape.label()});
    match &rep.shape {
        Shape::Point { ideal, criterion } => {
            v["ideal"] = json!(generators(ideal));
            v["criterion"] = json!(criterion);
        }
        Shape::Projective { n, members } => {
            v["dimension"] = json!(n);
            v["members"] = json!(members.iter().map(generators).collect::<Vec<_>>());
        }
        Shape::BirationalComponent { n } => v["dimension"] = json!(n),
        Shape::Reducible { witnesses } => v["witnesses"] = json!([generators(&witnesses.0), generators(&witnesses.1)]),
        Shape::Unresolved { reason } => v["reason"] = json!(reason),
    }
    v
}

fn vsp_outcome(input: BTreeMap<String, String>, rep: VspBarReport) -> Outcome {
    let mut lines = vec![rep.verdict()];
    if let Some(r) = rep.r {
        lines.push(format!("r = {}", r));
    }
    let mut ideals = Vec::new();
    match &rep.shape {
        Shape::Point { ideal, .. } => {
            lines.push(format!("ideal {}", ideal_text(ideal)));
            ideals.push(ideal.clone());
        }
        Shape::Projective { members, .. } => {
            for m in members {
                lines.push(format!("member {}", ideal_text(m)));
            }
            ideals.extend(members.iter().cloned());
        }
        Shape::Unresolved { reason } => lines.push(reason.clone()),
        _ => {}
    }
    let status = Status::from_bool(rep.certified());
    let report = Report::new(input, "vspbar", rep.verdict()).with_certificates(&rep.certificates).with_result(vsp_json(&rep));
    Outcome::new(report, status, lines).with_ideals(ideals)
}

fn vspbar_cmd(
    g: &Global,
    input: BTreeMap<String, String>,
    form: Option<&str>,
    ci: Option<&str>,
    cw: Option<&str>,
    vps: Option<&str>,
) -> Result<Outcome> {
    if let Some(c) = cw {
        let c = c.trim();
        let kind = match c.chars().next() {
            Some('A') => CwKind::A,
            Some('B') => CwKind::B,
            Some('C') => CwKind::C,
            _ => return usage(format!("bad --cw `{}`; expected A<n>, B<n> or C<n>", c)),
        };
        let n: usize = c[1..].parse().map_err(|_| crate::CliError::Usage(format!("bad --cw `{}`", c)))?;
        return Ok(vsp_outcome(input, cw_cubic_vspbar(kind, n)?));
    }
    if let Some(t) = vps {
        let v = parse_triple(t)?;
        let rep = monomial_vps_report(v[0] as u32, v[1] as u32, v[2] as u32)?;
        let members: Vec<Vec<String>> = rep.members.iter().map(generators).collect();
        let result = json!({
            "r": rep.r,
            "regime": format!("{:?}", rep.regime).to_lowercase(),
            "shape": format!("{:?}", rep.shape).to_lowercase(),
            "dimension": rep.dimension(),
            "members": members,
            "fiber_type": rep.fiber_type,
            "vsp_equals_vps": rep.vsp_equals_vps,
        });
        let mut lines = vec![rep.description.clone(), format!("r = {}", rep.r)];
        lines.extend(rep.members.iter().map(|m| format!("member {}", ideal_text(m))));
        let report = Report::new(input, "monomial_vps", rep.description.clone()).with_certificates(&rep.certificates).with_result(result);
        return Ok(Outcome::new(report, Status::from_bool(rep.certified()), lines).with_ideals(rep.members));
    }
    let Some(text) = form else {
        return usage("vspbar needs a form, --cw or --vps");
    };
    let ring: Arc<GradedRing> = input::ring(g.ring.as_deref(), &[text], true)?;
    check_order(g, &ring)?;
    let f = input::form(text, &ring)?;
    if let Some(j) = ci {
        let j = input::ideal(j, &ring)?;
        return Ok(vsp_outcome(input, ci_vspbar(&f, &j)?));
    }
    let rep = match (ring.rank(), ring.nvars(), f.degree().0[0]) {
        (1, 2, _) => sylvester_binary(&f)?,
        (1, 3, 3) => ternary_cubic_vspbar(&f)?,
        _ => return usage("no classification applies; binary forms and plane cubics are automatic, otherwise pass --ci, --cw or --vps"),
    };
    Ok(vsp_outcome(input, rep))
}
