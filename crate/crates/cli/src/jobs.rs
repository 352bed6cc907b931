//! One function per subcommand. Each returns an [`Outcome`] or a core error.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use ensketch::fcat::{
    check_loose_natural, enumerate_fmaps, enumerate_loose_transformations, FAmbient, FObjectDoc,
    LooseTransformation, TransformationOptions, TwoCategory, ViolationKind, Weakness, WeaknessPair,
};
use ensketch::fincat::{enumerate_functors, FunctorDoc};
use ensketch::fixtures::limits::{dotted_fixtures, marked_fixtures, weighted_fixtures};
use ensketch::fixtures::monads::{adjunctions, monad_fixtures};
use ensketch::fixtures::monoidal::{enumerate_lax_monoidal, lax_monoidal_of, monoidal_fixtures, ProductFragment};
use ensketch::fixtures::orthogonal::generalized_adjunctions;
use ensketch::fixtures::sketches::{arrow_models, arrow_sketch, span_models, span_sketch, terminal_models, terminal_sketch};
use ensketch::limits::{
    certify_cone, check_weighted_limit_universal, dotted_lax_limit, marked_lax_limit, oracle_apex, test_categories,
    test_fobjects, weighted_limit_end, weighted_oracle_apex,
};
use ensketch::monad::{
    check_algebra, check_doctrinal_lift, check_monad, enumerate_algebras, equivalence_witness, mate_transformation,
};
use ensketch::orthogonal::{
    check_generalized_adjunction, generator_lifting, in_right_class, random_fmap, random_pair, verify_bridge, Base,
};
use ensketch::sketch::{check_model, sigma_map, Model, Sketch};
use ensketch::{Error, Result};

use crate::input::{self, Document};
use crate::{BaseArg, EnumerateWhat, Job, LimitKind, Outcome};

fn unknown(what: &str, name: &str, known: &[String]) -> Error {
    Error::Parse(format!("unknown {what} fixture {name:?}; known: {}", known.join(", ")))
}

fn outcome(ok: bool, result: Value, summary: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { ok, result, summary: summary.into() })
}

pub fn validate(path: &str) -> Result<Outcome> {
    let (kind, result) = match input::document(path)? {
        Document::Category(c) => {
            ("category", json!({ "objects": c.num_objects(), "morphisms": c.num_morphisms() }))
        }
        Document::FObject(x) => {
            x.validate()?;
            ("F-object", json!({ "objects": x.loose.num_objects(), "tight_objects": x.tight.num_objects() }))
        }
        Document::FCategory(c) => {
            c.validate()?;
            ("F-category", json!({ "objects": c.num_objects(), "one_cells": c.all_one_cells().len(), "two_cells": c.all_two_cells().len() }))
        }
        Document::FMap(f) => {
            f.validate()?;
            ("F-map", json!({ "isomorphism": f.is_isomorphism(), "equivalence": f.is_equivalence() }))
        }
    };
    let mut result = result;
    result["kind"] = kind.into();
    outcome(true, result, format!("valid {kind}"))
}

fn pair(w: Weakness) -> WeaknessPair {
    WeaknessPair { tight: w, loose: w }
}

pub fn limit(kind: LimitKind, name: &str, job: &Job) -> Result<Outcome> {
    let (apex, cert, oracle_iso) = match kind {
        LimitKind::Weighted => {
            let all = weighted_fixtures();
            let known: Vec<String> = all.iter().map(|f| f.name.to_string()).collect();
            let fx = all.into_iter().find(|f| f.name == name).ok_or_else(|| unknown("weighted", name, &known))?;
            let lim = weighted_limit_end(&fx.weight, &fx.diagram, job.bound)?;
            let cert = check_weighted_limit_universal(&lim.cone, &fx.weight, &fx.diagram, &test_fobjects(job.apex_bound), job.bound)?;
            let oracle = weighted_oracle_apex(&fx.weight, &fx.diagram, job.bound)?;
            let iso = lim.apex.isomorphism_to(&oracle).is_some();
            (lim.apex, cert, Some(iso))
        }
        LimitKind::MarkedLax => {
            let all = marked_fixtures();
            let known: Vec<String> = all.iter().map(|f| f.name.to_string()).collect();
            let fx = all.into_iter().find(|f| f.name == name).ok_or_else(|| unknown("marked", name, &known))?;
            let lim = marked_lax_limit(&fx.shape, &fx.functor, job.bound)?;
            let options = fx.shape.as_dotted().options();
            let cert = certify_cone(&FAmbient, &lim.apex, &lim.cone, pair(Weakness::L), &options, &test_categories(job.apex_bound), job.bound)?;
            (lim.apex, cert, None)
        }
        LimitKind::DottedLax => {
            let all = dotted_fixtures();
            let known: Vec<String> = all.iter().map(|f| f.name.to_string()).collect();
            let fx = all.into_iter().find(|f| f.name == name).ok_or_else(|| unknown("dotted", name, &known))?;
            let lim = dotted_lax_limit(&fx.shape, &fx.functor, fx.weakness, job.bound)?;
            let options = fx.shape.options();
            let cert = certify_cone(&FAmbient, &lim.apex, &lim.cone, pair(fx.weakness), &options, &test_fobjects(job.apex_bound), job.bound)?;
            let oracle = oracle_apex(&fx.functor, pair(fx.weakness), &options, job.bound)?;
            (lim.apex.clone(), cert, Some(lim.apex.isomorphism_to(&oracle).is_some()))
        }
    };
    let ok = cert.holds() && oracle_iso != Some(false);
    let result = json!({
        "apex": FObjectDoc::from_fobject(&apex),
        "apex_objects": apex.loose.num_objects(),
        "certificate": {
            "tests": cert.tests,
            "one_cells_checked": cert.one_cells_checked,
            "two_cells_checked": cert.two_cells_checked,
            "failures": cert.failures,
        },
        "oracle_isomorphic": oracle_iso,
    });
    let summary = if ok {
        format!("limit with {} objects, certified against {} test objects", apex.loose.num_objects(), cert.tests)
    } else {
        format!("limit not certified: {}", cert.failures.first().cloned().unwrap_or_else(|| "apex differs from the oracle".into()))
    };
    outcome(ok, result, summary)
}

/// Named models: `span:NAME`, `arrow:NAME`, `terminal:NAME` or `monoidal:NAME`.
fn named_model(name: &str) -> Result<(Sketch, Model)> {
    let (family, model) = name.split_once(':').unwrap_or((name, ""));
    let pick = |sketch: Sketch, models: Vec<(&'static str, Model)>| {
        let known: Vec<String> = models.iter().map(|(n, _)| format!("{family}:{n}")).collect();
        let m = models.into_iter().find(|(n, _)| *n == model).map(|(_, m)| m).ok_or_else(|| unknown("model", name, &known))?;
        Ok((sketch, m))
    };
    match family {
        "span" => {
            let s = span_sketch();
            let models = span_models(&s);
            pick(s, models)
        }
        "arrow" => {
            let s = arrow_sketch();
            let models = arrow_models(&s);
            pick(s, models)
        }
        "terminal" => {
            let s = terminal_sketch();
            let models = terminal_models(&s);
            pick(s, models)
        }
        "monoidal" => {
            let frag = ProductFragment::new();
            let models = monoidal_fixtures().into_iter().map(|m| (m.name, m.model(&frag))).collect();
            pick(frag.sketch, models)
        }
        _ => Err(unknown("model", name, &model_names())),
    }
}

fn model_names() -> Vec<String> {
    let mut out: Vec<String> = span_models(&span_sketch()).iter().map(|(n, _)| format!("span:{n}")).collect();
    out.extend(arrow_models(&arrow_sketch()).iter().map(|(n, _)| format!("arrow:{n}")));
    out.extend(terminal_models(&terminal_sketch()).iter().map(|(n, _)| format!("terminal:{n}")));
    out.extend(monoidal_fixtures().iter().map(|m| format!("monoidal:{}", m.name)));
    out
}

/// The product model of the span sketch and a lax candidate whose
/// 2-component at the first projection is not an identity.
fn obstruction(job: &Job) -> Result<Outcome> {
    let sketch = span_sketch();
    let (_, m) = span_models(&sketch).remove(0);
    let leg = sketch.carrier.one_cells(0, 1).next().expect("first projection");
    let loose = pair(Weakness::L);
    let all = enumerate_loose_transformations(&FAmbient, &m, &m, loose, &TransformationOptions::default(), job.bound)?;
    let bent = all
        .into_iter()
        .find(|p| !FAmbient.is_identity_cell(p.cell(&leg)))
        .ok_or_else(|| Error::Invalid("no candidate bends the first projection".into()))?;
    let candidate = LooseTransformation { weakness: WeaknessPair { tight: Weakness::S, loose: Weakness::L }, ..bent };
    let report = check_loose_natural(&FAmbient, &candidate, &m, &m)?;
    let witness = report.violations.iter().find(|v| v.kind == ViolationKind::NotStrictAtTight).cloned();
    let result = json!({
        "candidate": "lax transformation of the product model bent at π₁",
        "projections": { "π₁": sketch.carrier.one_cell_name(&leg) },
        "violations": report.violations,
        "witness": witness.as_ref().map(|v| format!("π₁ ({})", v.at)),
    });
    let summary = match &witness {
        Some(v) => format!("rejected: not strict at the tight projection π₁ ({})", v.at),
        None => "candidate unexpectedly accepted".into(),
    };
    outcome(report.is_valid(), result, summary)
}

pub fn model_check(name: &str, job: &Job) -> Result<Outcome> {
    if name == "obstruction" {
        return obstruction(job);
    }
    let (sketch, model) = named_model(name)?;
    let report = check_model(&model, &sketch, job.r, job.apex_bound, job.bound)?;
    let mut sigma = Vec::new();
    for i in 0..sketch.cones.len() {
        sigma.push(match sigma_map(&sketch, i, job.colimit_bound) {
            Ok(s) => json!({ "cone": i, "orthogonal": s.is_orthogonal(&model, job.r, job.bound)? }),
            Err(e) if e.is_bound_exhaustion() => json!({ "cone": i, "orthogonal": Value::Null, "note": e.to_string() }),
            Err(e) => return Err(e),
        });
    }
    let failing = report.failing();
    let result = json!({ "report": report, "sigma": sigma });
    let summary = if failing.is_empty() {
        format!("model: all {} cones are limits", sketch.cones.len())
    } else {
        let c = &report.cones[failing[0]];
        format!("not a model: cone {} fails ({})", c.cone, c.reason.clone().unwrap_or_default())
    };
    outcome(failing.is_empty(), result, summary)
}

/// `A:B` for monoidal fixtures: all `(w, w)` candidates between the two
/// models are checked as morphisms of models, and for `w = l` or `s` the
/// accepted ones are compared with lax monoidal functors.
pub fn nat_check(name: &str, job: &Job) -> Result<Outcome> {
    if name == "obstruction" {
        return obstruction(job);
    }
    let (a, b) = name.split_once(':').ok_or_else(|| Error::Parse(format!("expected SOURCE:TARGET, got {name:?}")))?;
    let all = monoidal_fixtures();
    let known: Vec<String> = all.iter().map(|m| m.name.to_string()).collect();
    let find = |n: &str| all.iter().find(|m| m.name == n).ok_or_else(|| unknown("monoidal", n, &known));
    let (ma, mb) = (find(a)?, find(b)?);
    let frag = ProductFragment::with_arity(2);
    let (m, n) = (ma.model(&frag), mb.model(&frag));
    let candidates = enumerate_loose_transformations(&FAmbient, &m, &n, pair(job.w), &TransformationOptions::default(), job.bound)?;
    let mut accepted = Vec::new();
    let mut rejected: BTreeMap<String, usize> = BTreeMap::new();
    let mut first_rejection = None;
    for c in candidates.iter() {
        let as_morphism = LooseTransformation { weakness: WeaknessPair { tight: Weakness::S, loose: job.w }, ..c.clone() };
        let report = check_loose_natural(&FAmbient, &as_morphism, &m, &n)?;
        match report.violations.first() {
            None => accepted.push(as_morphism),
            Some(v) => {
                *rejected.entry(format!("{:?}", v.kind)).or_default() += 1;
                first_rejection.get_or_insert_with(|| v.clone());
            }
        }
    }
    let comparison = match job.w {
        Weakness::L | Weakness::S => {
            let mut got: Vec<_> = accepted.iter().map(|p| lax_monoidal_of(&frag, ma, p)).collect();
            got.sort();
            let mut expected = enumerate_lax_monoidal(ma, mb, job.bound)?;
            if job.w == Weakness::S {
                expected.retain(|l| l.mu.iter().chain([&l.eta]).all(|&c| mb.cat.is_identity(c)));
            }
            Some((got.len(), expected.len(), got == expected))
        }
        _ => None,
    };
    let ok = comparison.map_or(true, |(_, _, same)| same);
    let result = json!({
        "candidates": candidates.len(),
        "accepted": accepted.len(),
        "rejected_by_kind": rejected,
        "first_rejection": first_rejection,
        "monoidal_comparison": comparison.map(|(g, e, s)| json!({ "accepted": g, "enumerated": e, "agree": s })),
    });
    let summary = format!("{} of {} candidates are morphisms of models", accepted.len(), candidates.len());
    outcome(ok, result, summary)
}

fn monad_fixture(name: &str, w: Weakness) -> Result<ensketch::fixtures::monads::MonadFixture> {
    let all = monad_fixtures(w);
    let known: Vec<String> = all.iter().map(|f| f.name.to_string()).collect();
    all.into_iter().find(|f| f.name == name).ok_or_else(|| unknown("monad", name, &known))
}

pub fn monad_check(name: &str, job: &Job) -> Result<Outcome> {
    let f = monad_fixture(name, job.w)?;
    let t = &f.monad;
    let laws = check_monad(t)?;
    let c = &t.carrier;
    let algebras: Vec<Value> = enumerate_algebras(t)
        .into_iter()
        .map(|a| {
            let failures = check_algebra(t, &a);
            json!({ "object": c.object_name(a.object), "structure": c.one_cell_name(&a.structure), "failures": failures })
        })
        .collect();
    let valid = algebras.iter().filter(|a| a["failures"].as_array().is_some_and(|v| v.is_empty())).count();
    let result = json!({
        "carrier_objects": c.num_objects(),
        "law_violations": laws,
        "candidate_algebras": algebras,
        "algebras": valid,
    });
    let summary = match laws.first() {
        None => format!("monad laws hold; {valid} algebras"),
        Some(v) => format!("{} fails at {}", v.law, v.at),
    };
    outcome(laws.is_empty(), result, summary)
}

pub fn mate(name: &str) -> Result<Outcome> {
    let all = adjunctions();
    let known: Vec<String> = all.iter().map(|(n, _)| n.clone()).collect();
    let d = all.into_iter().find(|(n, _)| n == name).map(|(_, d)| d).ok_or_else(|| unknown("adjunction", name, &known))?;
    let bar = mate_transformation(&d)?;
    let s = &bar.source.source;
    let bent: Vec<String> = s
        .all_one_cells()
        .into_iter()
        .filter(|t| s.is_tight_cell(t) && !FAmbient.is_identity_cell(bar.cell(t)))
        .map(|t| s.one_cell_name(&t))
        .collect();
    let report = check_loose_natural(&FAmbient, &bar, &bar.source, &bar.target)?;
    let lift = check_doctrinal_lift(&d, &bar)?;
    let ok = bent.is_empty() && report.is_valid() && lift.is_empty();
    let result = json!({
        "weakness": bar.weakness,
        "non_identity_at_tight": bent,
        "naturality_violations": report.violations,
        "lift_failures": lift,
    });
    let summary = if ok { "mate is natural, strict on tight 1-cells, and the adjunction lifts".to_string() } else { "mate check failed".into() };
    outcome(ok, result, summary)
}

pub fn equiv_witness(name: &str, job: &Job) -> Result<Outcome> {
    let f = monad_fixture(name, job.w)?;
    let r = equivalence_witness(&f.models, &f.inclusion, &f.carrier, &f.monad, &f.correspondence, job.w, job.bound)?;
    let summary = if r.certified {
        format!("{} models and {} algebras: every hom comparison matches", r.models, r.algebras)
    } else {
        format!("not certified: {}", r.first_failure.clone().unwrap_or_else(|| "algebras left unreached".into()))
    };
    outcome(r.certified, serde_json::to_value(&r).map_err(|e| Error::Invalid(e.to_string()))?, summary)
}

fn base_of(b: BaseArg) -> Base {
    match b {
        BaseArg::Cat => Base::Cat,
        BaseArg::F => Base::F,
    }
}

pub fn orthogonal(
    k: Option<&str>,
    m: Option<&str>,
    base: BaseArg,
    audit: Option<usize>,
    adjunction: Option<&str>,
    job: &Job,
) -> Result<Outcome> {
    if let Some(n) = audit {
        return wfs_audit(n, job);
    }
    if let Some(name) = adjunction {
        let all = generalized_adjunctions();
        let known: Vec<String> = all.iter().map(|(n, _)| n.to_string()).collect();
        let adj = all.into_iter().find(|(n, _)| *n == name).map(|(_, a)| a).ok_or_else(|| unknown("adjunction", name, &known))?;
        let r = check_generalized_adjunction(&adj, job.r, job.bound)?;
        let summary = if r.certified { "generalized adjunction certified".to_string() } else { "not a generalized adjunction".into() };
        return outcome(r.certified, serde_json::to_value(&r).map_err(|e| Error::Invalid(e.to_string()))?, summary);
    }
    let (Some(k), Some(m)) = (k, m) else {
        return Err(Error::Parse("orthogonal needs --k and --m, --wfs-audit or --adjunction".into()));
    };
    let (k, m) = (input::fobject(k)?, input::fmap(m)?);
    let base = base_of(base);
    let bridge = verify_bridge(&k, &m, job.r, base, job.bound)?;
    let result = json!({
        "orthogonal": bridge.orthogonal,
        "lifting_against_terminal": bridge.lifting,
        "bridge": bridge,
        "generator_lifting": generator_lifting(&m, job.bound)?.into_iter().collect::<BTreeMap<_, _>>(),
        "right_class": in_right_class(&m),
    });
    if !bridge.holds() {
        return outcome(false, result, "bridge check disagrees: orthogonality and lifting differ");
    }
    let summary = if bridge.orthogonal { "K is orthogonal to m" } else { "K is not orthogonal to m" };
    outcome(bridge.orthogonal, result, summary)
}

/// Seeded audit: generator lifting against random maps versus the right
/// class, and the bridge on random pairs in both ambients.
fn wfs_audit(n: usize, job: &Job) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(job.seed);
    let mut disagreements = Vec::new();
    let (mut right, mut bridges) = (0, 0);
    for i in 0..n {
        let f = random_fmap(&mut rng, false)?;
        let lifts = generator_lifting(&f, job.bound)?.iter().all(|(_, ok)| *ok);
        let iso = in_right_class(&f);
        right += usize::from(iso);
        if lifts != iso {
            disagreements.push(json!({ "sample": i, "kind": "generators", "lifts": lifts, "right_class": iso }));
        }
        let chordate = i % 2 == 0;
        let (k, m) = random_pair(&mut rng, chordate)?;
        let base = if chordate { Base::Cat } else { Base::F };
        let b = verify_bridge(&k, &m, job.r, base, job.bound)?;
        bridges += 1;
        if !b.holds() {
            disagreements.push(json!({ "sample": i, "kind": "bridge", "check": b }));
        }
    }
    let ok = disagreements.is_empty();
    let result = json!({
        "samples": n,
        "in_right_class": right,
        "bridge_checks": bridges,
        "disagreements": disagreements,
    });
    outcome(ok, result, format!("{n} samples, {} disagreements", disagreements.len()))
}

pub fn enumerate(source: &str, target: &str, what: EnumerateWhat, job: &Job) -> Result<Outcome> {
    let items: Vec<Value> = match what {
        EnumerateWhat::Functors => {
            let (a, b) = (input::category(source)?, input::category(target)?);
            enumerate_functors(&a, &b, job.bound)?.iter().map(|f| json!(FunctorDoc::from_functor(f))).collect()
        }
        EnumerateWhat::Fmaps => {
            let (x, y) = (input::fobject(source)?, input::fobject(target)?);
            enumerate_fmaps(&x, &y, job.bound)?
                .iter()
                .map(|f| json!({ "loose": FunctorDoc::from_functor(&f.loose), "isomorphism": f.is_isomorphism() }))
                .collect()
        }
    };
    let n = items.len();
    outcome(true, json!({ "count": n, "items": items }), format!("{n} found"))
}

pub fn fixtures() -> Outcome {
    let names = |v: Vec<String>| Value::from(v);
    let result = json!({
        "limit": {
            "weighted": names(weighted_fixtures().iter().map(|f| f.name.to_string()).collect()),
            "marked-lax": names(marked_fixtures().iter().map(|f| f.name.to_string()).collect()),
            "dotted-lax": names(dotted_fixtures().iter().map(|f| f.name.to_string()).collect()),
        },
        "model-check": names(model_names().into_iter().chain(["obstruction".to_string()]).collect()),
        "nat-check": "SOURCE:TARGET over monoidal fixtures, or obstruction",
        "monad-check": ["identity", "idempotent"],
        "equiv-witness": ["identity", "idempotent"],
        "mate": names(adjunctions().into_iter().map(|(n, _)| n).collect()),
        "orthogonal --adjunction": names(generalized_adjunctions().into_iter().map(|(n, _)| n.to_string()).collect()),
        "standard categories": ["empty", "terminal", "walking-arrow", "parallel-pair", "three-chain", "chain:N", "discrete:N", "chaotic:N"],
    });
    Outcome { ok: true, result, summary: "fixture list".into() }
}
