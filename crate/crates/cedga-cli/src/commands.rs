use std::fmt::Write as _;

use serde_json::{json, Value};

use cedga_algebra::{validate_presentation, Presentation};
use cedga_analysis::{
    check_d_squared, check_parity_flip, exactness_search, h0 as compute_h0, is_trivial, Bounds, DSquared, Exactness,
    Parity, SearchCertificate, Triviality,
};
use cedga_coeff::CoeffRing;
use cedga_dsl::{parse_element, parse_with_context, serialize, Bundle};
use cedga_morphisms::{
    obstruct_y_filling, partial_linearize, verify_augmentation, verify_chain_map, AugVerdict, Augmentation, DgMap,
    Obstruction,
};

use crate::input::{find, is_file, load, pick, read_source, CliError};

/// What a subcommand found: `ok` selects exit code 0 over 1.
pub struct Outcome {
    pub ok: bool,
    pub verdict: Value,
    pub certificates: Value,
    pub text: String,
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn certificate_json(p: &Presentation, c: &SearchCertificate) -> Value {
    json!({
        "target": p.render(&c.target),
        "degree": c.degree,
        "parity": c.parity.map(|x| x.to_string()),
        "block": [p.idempotent_label(c.block.0), p.idempotent_label(c.block.1)],
        "candidates": c.candidates,
        "rank": c.rank,
    })
}

fn certificate_text(p: &Presentation, c: &SearchCertificate) -> String {
    let parity = c.parity.map(|x| format!(" of {x} length")).unwrap_or_default();
    format!(
        "no preimage of {} among {} words{parity} in block {} -> {} (rank {}, {})",
        p.render(&c.target),
        c.candidates,
        p.idempotent_label(c.block.0),
        p.idempotent_label(c.block.1),
        c.rank,
        c.bounds
    )
}

pub fn check_d2(file: &str, name: Option<&str>, ring: Option<&CoeffRing>) -> Result<Outcome, CliError> {
    let b = load(file, ring, &[])?;
    let p = pick(&b, name)?;
    Ok(match check_d_squared(p).map_err(CliError::engine)? {
        DSquared::Pass => Outcome {
            ok: true,
            verdict: json!({ "status": "pass", "generators": p.num_generators() }),
            certificates: json!({}),
            text: format!("d^2 = 0 on all {} generators of {}\n", p.num_generators(), p.name()),
        },
        DSquared::Counterexample { generator, residual } => {
            let g = &p.generator(generator).name;
            Outcome {
                ok: false,
                verdict: json!({ "status": "counterexample", "generator": g }),
                certificates: json!({ "residual": p.render(&residual) }),
                text: format!("d^2 {g} = {}\n", p.render(&residual)),
            }
        }
    })
}

pub fn grade(file: &str, name: Option<&str>, ring: Option<&CoeffRing>) -> Result<Outcome, CliError> {
    let b = load(file, ring, &[])?;
    let p = pick(&b, name)?;
    let report = validate_presentation(p);
    let lines: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    let mut text = String::new();
    if lines.is_empty() {
        let _ = writeln!(text, "every differential of {} raises degree by 1", p.name());
    }
    for l in &lines {
        let _ = writeln!(text, "{l}");
    }
    Ok(Outcome {
        ok: report.is_ok(),
        verdict: json!({ "status": status(report.is_ok()), "violations": lines.len() }),
        certificates: json!({ "violations": lines }),
        text,
    })
}

pub fn parity(file: &str, name: Option<&str>, ring: Option<&CoeffRing>) -> Result<Outcome, CliError> {
    let b = load(file, ring, &[])?;
    let p = pick(&b, name)?;
    let r = check_parity_flip(p);
    let witness = r.counterexample.as_ref().map(|(g, w)| (p.generator(*g).name.clone(), p.render_word(w)));
    let text = match &witness {
        None => format!("the differential of {} flips word-length parity\n", p.name()),
        Some((g, w)) => format!("d{g} contains `{w}`, whose length has the parity of `{g}`\n"),
    };
    Ok(Outcome {
        ok: r.holds,
        verdict: json!({ "status": status(r.holds) }),
        certificates: json!({ "counterexample": witness.map(|(g, w)| json!({ "generator": g, "word": w })) }),
        text,
    })
}

pub fn h0(file: &str, name: Option<&str>, ring: Option<&CoeffRing>, bounds: &Bounds) -> Result<Outcome, CliError> {
    let b = load(file, ring, &[])?;
    let p = pick(&b, name)?;
    let r = compute_h0(p, bounds.degree_bound).map_err(CliError::engine)?;
    let relations: Vec<String> =
        r.relations.iter().map(|(g, x)| format!("d{} = {}", p.generator(*g).name, p.render(x))).collect();
    let rules: Vec<String> = r
        .system
        .rules
        .iter()
        .map(|rule| format!("{} -> {}", p.render_word(&rule.lhs), p.render(&rule.rhs)))
        .collect();
    let killed: Vec<&str> = r.system.killed.iter().map(|e| p.idempotent_label(*e)).collect();
    let basis: Vec<String> = r.basis.iter().map(|w| p.render_word(w)).collect();
    let mut text = String::new();
    let _ = writeln!(text, "relations:");
    for l in &relations {
        let _ = writeln!(text, "  {l}");
    }
    let _ = writeln!(text, "rewrite rules:");
    for l in &rules {
        let _ = writeln!(text, "  {l}");
    }
    if !killed.is_empty() {
        let _ = writeln!(text, "idempotents set to zero: {}", killed.join(" "));
    }
    if r.system.truncated {
        let _ = writeln!(text, "completion truncated at degree bound {}", bounds.degree_bound);
    }
    let _ = writeln!(text, "basis up to length {}: {}", bounds.degree_bound, basis.join(" "));
    let _ = writeln!(text, "is_ground_ring = {}, dimension = {}", r.is_ground_ring, r.dimension());
    Ok(Outcome {
        ok: true,
        verdict: json!({
            "status": "computed",
            "is_ground_ring": r.is_ground_ring,
            "dimension": r.dimension(),
        }),
        certificates: json!({
            "relations": relations,
            "rules": rules,
            "killed": killed,
            "truncated": r.system.truncated,
            "basis": basis,
        }),
        text,
    })
}

pub fn exact(
    file: &str,
    name: Option<&str>,
    ring: Option<&CoeffRing>,
    bounds: &Bounds,
    target: &str,
    parity: Option<Parity>,
) -> Result<Outcome, CliError> {
    let b = load(file, ring, &[])?;
    let p = pick(&b, name)?;
    let target = parse_element(p, target).map_err(|e| CliError::Usage(format!("--target {e}")))?;
    exactness_outcome(p, exactness_search(p, &target, bounds, parity).map_err(CliError::engine)?)
}

fn exactness_outcome(p: &Presentation, r: Exactness) -> Result<Outcome, CliError> {
    Ok(match r {
        Exactness::Witness(x) => Outcome {
            ok: true,
            verdict: json!({ "status": "witness" }),
            certificates: json!({ "witness": p.render(&x) }),
            text: format!("witness: {}\n", p.render(&x)),
        },
        Exactness::NoneWithinBounds(c) => Outcome {
            ok: false,
            verdict: json!({ "status": "none_within_bounds" }),
            certificates: json!({ "search": certificate_json(p, &c) }),
            text: format!("{}\n", certificate_text(p, &c)),
        },
    })
}

pub fn trivial(file: &str, name: Option<&str>, ring: Option<&CoeffRing>, bounds: &Bounds) -> Result<Outcome, CliError> {
    let b = load(file, ring, &[])?;
    let p = pick(&b, name)?;
    Ok(match is_trivial(p, bounds).map_err(CliError::engine)? {
        Triviality::CertifiedTrivial(x) => Outcome {
            ok: true,
            verdict: json!({ "status": "certified_trivial" }),
            certificates: json!({ "witness": p.render(&x) }),
            text: format!("trivial: d({}) = 1\n", p.render(&x)),
        },
        Triviality::NotWithinBounds(c) => Outcome {
            ok: false,
            verdict: json!({ "status": "not_within_bounds" }),
            certificates: json!({ "search": certificate_json(p, &c) }),
            text: format!("{}\n", certificate_text(p, &c)),
        },
    })
}

fn only<'a, T>(items: impl Iterator<Item = (&'a String, &'a T)>, wanted: Option<&str>, what: &str) -> Result<&'a T, CliError> {
    let items: Vec<(&String, &T)> = items.collect();
    match wanted {
        Some(w) => items
            .iter()
            .find(|(n, _)| n.as_str() == w)
            .map(|(_, t)| *t)
            .ok_or_else(|| CliError::Usage(format!("no {what} named `{w}`"))),
        None if items.len() == 1 => Ok(items[0].1),
        None if items.is_empty() => Err(CliError::Usage(format!("the input declares no {what}"))),
        None => {
            let names: Vec<&str> = items.iter().map(|(n, _)| n.as_str()).collect();
            Err(CliError::Usage(format!("several {what}s ({}); choose one by name", names.join(", "))))
        }
    }
}

pub fn verify_map(file: &str, map: Option<&str>, with: &[String], ring: Option<&CoeffRing>) -> Result<Outcome, CliError> {
    let extra = with.iter().map(|f| load(f, ring, &[])).collect::<Result<Vec<_>, _>>()?;
    let context: Vec<&Bundle> = extra.iter().collect();
    let b = load(file, ring, &context)?;
    let phi = only(b.maps.iter(), map, "map")?;
    let mut all = vec![&b];
    all.extend(context.iter().copied());
    let (src, tgt) = (find(&all, &phi.source)?, find(&all, &phi.target)?);
    let report = verify_chain_map(phi, src, tgt).map_err(CliError::engine)?;
    let mut text = String::new();
    let mut checks = Vec::new();
    for c in &report.checks {
        let g = &src.generator(c.generator).name;
        let (lhs, rhs) = (tgt.render(&c.boundary_of_image), tgt.render(&c.image_of_boundary));
        let mark = if c.holds() { "ok  " } else { "FAIL" };
        let _ = writeln!(text, "{mark} d({}({g})) = {lhs}   {}(d{g}) = {rhs}", phi.name, phi.name);
        checks.push(json!({ "generator": g, "d_of_image": lhs, "image_of_d": rhs, "holds": c.holds() }));
    }
    let failure = report.first_failure().map(|c| {
        json!({ "generator": src.generator(c.generator).name, "residual": tgt.render(&c.residual()) })
    });
    Ok(Outcome {
        ok: report.passed(),
        verdict: json!({ "status": status(report.passed()), "map": phi.name, "first_failure": failure }),
        certificates: json!({ "checks": checks }),
        text,
    })
}

fn augmentation<'a>(b: &'a Bundle, p: &Presentation, aug: Option<&str>) -> Result<&'a Augmentation, CliError> {
    let on_p = b.augmentations.iter().filter(|(_, a)| a.source == p.name());
    only(on_p, aug, "augmentation")
}

pub fn verify_aug(file: &str, name: Option<&str>, aug: Option<&str>, ring: Option<&CoeffRing>) -> Result<Outcome, CliError> {
    let b = load(file, ring, &[])?;
    let p = match name {
        Some(_) => pick(&b, name)?,
        None => match (aug, b.augmentations.len()) {
            (Some(a), _) => find(&[&b], &b.augmentations.get(a).ok_or_else(|| CliError::Usage(format!("no augmentation named `{a}`")))?.source)?,
            (None, 1) => find(&[&b], &b.augmentations.values().next().expect("one").source)?,
            _ => pick(&b, None)?,
        },
    };
    let eps = augmentation(&b, p, aug)?;
    Ok(match verify_augmentation(eps, p).map_err(CliError::engine)? {
        AugVerdict::Pass => Outcome {
            ok: true,
            verdict: json!({ "status": "pass", "augmentation": eps.name }),
            certificates: json!({}),
            text: format!("{} is an augmentation of {} on scope {}\n", eps.name, p.name(), eps.scope.join(" ")),
        },
        AugVerdict::Failure { generator, residual } => {
            let g = &p.generator(generator).name;
            Outcome {
                ok: false,
                verdict: json!({ "status": "fail", "augmentation": eps.name, "generator": g }),
                certificates: json!({ "residual": residual.to_string() }),
                text: format!("{}(d{g}) = {residual}, expected 0\n", eps.name),
            }
        }
    })
}

pub fn linearize(
    file: &str,
    name: Option<&str>,
    aug: Option<&str>,
    output: Option<&str>,
    ring: Option<&CoeffRing>,
) -> Result<Outcome, CliError> {
    let b = load(file, ring, &[])?;
    let p = match (name, aug) {
        (None, Some(a)) => {
            let src = &b.augmentations.get(a).ok_or_else(|| CliError::Usage(format!("no augmentation named `{a}`")))?.source;
            find(&[&b], src)?
        }
        _ => pick(&b, name)?,
    };
    let eps = augmentation(&b, p, aug)?;
    let lin = partial_linearize(p, eps).map_err(CliError::engine)?;
    let mut out = Bundle::new(lin.ring().clone());
    out.notes.push(format!("Partial linearization of {} by {}.", p.name(), eps.name));
    let generators = lin.num_generators();
    out.insert(lin);
    let text = serialize(&out);
    let (shown, written) = match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Io { path: path.to_string(), source })?;
            (format!("wrote {path} ({generators} generator{})\n", if generators == 1 { "" } else { "s" }), Some(path.to_string()))
        }
        None => (text.clone(), None),
    };
    Ok(Outcome {
        ok: true,
        verdict: json!({ "status": "computed", "generators": generators }),
        certificates: json!({ "output": written, "text": text }),
        text: shown,
    })
}

pub fn obstruct(
    file: &str,
    domain: Option<&str>,
    codomain: Option<&str>,
    link_map: Option<&str>,
    ring: Option<&CoeffRing>,
    bounds: &Bounds,
) -> Result<Outcome, CliError> {
    let b = load(file, ring, &[])?;
    let cb = match codomain {
        Some(c) if is_file(c) => Some(load(c, ring, &[&b])?),
        _ => None,
    };
    let mut bundles = vec![&b];
    bundles.extend(cb.as_ref());
    let map_bundle;
    let phi: &DgMap = match link_map {
        Some(m) if is_file(m) => {
            let text = read_source(m)?;
            map_bundle = parse_with_context(&text, &bundles)
                .map_err(|source| CliError::Parse { path: m.to_string(), source })?;
            only(map_bundle.maps.iter(), None, "map")?
        }
        m => only(b.maps.iter(), m, "map")?,
    };
    let dom = find(&bundles, domain.unwrap_or(&phi.source))?;
    let cod = match (&cb, codomain) {
        (Some(c), _) => pick(c, Some(&phi.target)).or_else(|_| pick(c, None))?,
        (None, Some(name)) => find(&bundles, name)?,
        (None, None) => find(&bundles, &phi.target)?,
    };
    let r = obstruct_y_filling(dom, cod, phi, bounds).map_err(CliError::engine)?;
    Ok(match r {
        Obstruction::Obstructed(o) => {
            let a = &dom.generator(o.decisive.generator).name;
            let mut text = String::new();
            for l in &o.transcript {
                let _ = writeln!(text, "{l}");
            }
            let _ = writeln!(text, "{}", certificate_text(cod, &o.certificate));
            let _ = writeln!(
                text,
                "obstructed: {} has no solution ({} unknowns in the joint system, {})",
                o.equation, o.joint_candidates, o.bounds
            );
            Outcome {
                ok: true,
                verdict: json!({
                    "status": "obstructed",
                    "generator": a,
                    "component": o.decisive.component.to_string(),
                    "equation": o.equation,
                }),
                certificates: json!({
                    "target": cod.render(&o.target),
                    "tolerated": o.tolerated,
                    "joint_candidates": o.joint_candidates,
                    "search": certificate_json(cod, &o.certificate),
                    "transcript": o.transcript,
                }),
                text,
            }
        }
        Obstruction::Inconclusive(i) => {
            let mut text = String::new();
            for l in i.transcript.iter().chain(&i.reasons) {
                let _ = writeln!(text, "{l}");
            }
            let _ = writeln!(text, "inconclusive within {}", i.bounds);
            Outcome {
                ok: false,
                verdict: json!({ "status": "inconclusive", "reasons": i.reasons }),
                certificates: json!({ "transcript": i.transcript }),
                text,
            }
        }
    })
}

pub fn catalog(name: Option<&str>, list: bool, emit: bool, p_max: u32) -> Result<Outcome, CliError> {
    let Some(name) = name.filter(|_| !list) else {
        let names = cedga_catalog::list();
        return Ok(Outcome {
            ok: true,
            verdict: json!({ "status": "listed", "examples": names }),
            certificates: json!({}),
            text: names.iter().map(|n| format!("{n}\n")).collect(),
        });
    };
    let b = cedga_catalog::example_with_level(name, p_max).map_err(|e| CliError::Usage(e.to_string()))?;
    let text = serialize(&b);
    let summary: Vec<Value> = b
        .presentations
        .values()
        .map(|p| json!({ "name": p.name(), "idempotents": p.num_idempotents(), "generators": p.num_generators() }))
        .collect();
    let shown = if emit {
        text.clone()
    } else {
        let mut s = String::new();
        for n in &b.notes {
            let _ = writeln!(s, "{n}");
        }
        for p in b.presentations.values() {
            let _ = writeln!(s, "presentation {}: {} idempotents, {} generators", p.name(), p.num_idempotents(), p.num_generators());
        }
        for m in b.maps.values() {
            let _ = writeln!(s, "map {}: {} -> {}", m.name, m.source, m.target);
        }
        for a in b.augmentations.values() {
            let _ = writeln!(s, "augmentation {} on {}", a.name, a.source);
        }
        s
    };
    Ok(Outcome {
        ok: true,
        verdict: json!({ "status": "found", "example": name, "presentations": summary }),
        certificates: json!({ "text": if emit { Some(text) } else { None } }),
        text: shown,
    })
}
