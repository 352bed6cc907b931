//! Acceptance suite. Each test prints one `criterion N ... PASS|FAIL` line on
//! stderr (written directly, so it shows without `--nocapture`) and then
//! asserts the verdict.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ensketch::fcat::{
    check_loose_natural, enumerate_loose_transformations, FAmbient, FFunctor, FObject, FiniteFCategory,
    LooseTransformation, OneCell, TransformationOptions, TwoCategory, ViolationKind, Weakness, WeaknessPair,
};
use ensketch::fincat::DEFAULT_BOUND;
use ensketch::fixtures::limits::{dotted_fixtures, marked_fixtures, weighted_fixtures};
use ensketch::fixtures::monads::{adjunctions, monad_fixtures};
use ensketch::fixtures::monoidal::{
    enumerate_lax_monoidal, lax_monoidal_of, loose_model_morphisms, monoidal_fixture, ProductFragment,
};
use ensketch::fixtures::sketches::{arrow_models, arrow_sketch, span_models, span_sketch, terminal_models, terminal_sketch};
use ensketch::limits::{
    certify_cone, certify_pointwise_limit, check_weighted_limit_universal, dotted_lax_limit, loose_arrow_shape,
    marked_lax_limit, oracle_apex, pointwise_model_limit, test_categories, test_fobjects, weighted_limit_end,
    weighted_oracle_apex,
};
use ensketch::monad::{check_doctrinal_lift, equivalence_witness, mate_transformation};
use ensketch::orthogonal::{generator_lifting, in_right_class, random_fmap, random_pair, verify_bridge, Base};
use ensketch::sketch::{
    check_model, enumerate_model_transformations, restrict_model, restrict_transformation, sigma_map,
    tight_part_sketch, Model, RClass, Sketch,
};

use common::*;

type Verdict = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn run(n: usize, title: &str, limit: Option<Duration>, body: impl FnOnce() -> Verdict) {
    let start = Instant::now();
    let mut verdict = body();
    let elapsed = start.elapsed();
    if let (Ok(_), Some(limit)) = (&verdict, limit) {
        if elapsed > limit {
            verdict = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
    }
    let line = match &verdict {
        Ok(detail) => format!("criterion {n:>2} [{title}]: PASS ({detail}; {elapsed:.2?})"),
        Err(why) => format!("criterion {n:>2} [{title}]: FAIL ({why}; {elapsed:.2?})"),
    };
    let _ = writeln!(std::io::stderr(), "{line}");
    assert!(verdict.is_ok(), "{line}");
}

fn pair(w: Weakness) -> WeaknessPair {
    WeaknessPair { tight: w, loose: w }
}

fn e(err: ensketch::Error) -> String {
    err.to_string()
}

#[test]
fn criterion_01_axiom_suites() {
    run(1, "axiom suites", Some(Duration::from_secs(10)), || {
        const PER_FIXTURE: usize = 200;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (mut fixtures, mut rejected) = (0, 0);
        for (name, c) in category_fixtures() {
            ensure!(c.validate().is_ok() && is_category(&c), "{name} fails the category axioms");
            for _ in 0..PER_FIXTURE {
                let (desc, bad) = corrupt_category(&mut rng, &c);
                let Err(v) = bad.validate() else { return Err(format!("{name}: {desc} accepted")) };
                ensure!(recheck(&bad, &v), "{name}: {desc}: reported {v}, which does not hold");
                rejected += 1;
            }
            fixtures += 1;
        }
        for (name, c) in fcategory_fixtures() {
            c.validate().map_err(|err| format!("{name}: {err}"))?;
            let words = vocabulary(&c);
            let (mut done, mut tries) = (0, 0);
            while done < PER_FIXTURE {
                tries += 1;
                ensure!(tries < 100 * PER_FIXTURE, "{name}: too few applicable corruptions");
                let Some((desc, built)) = corrupt_fcategory(&mut rng, &c) else { continue };
                let Err(err) = built else { return Err(format!("{name}: {desc} accepted")) };
                let msg = err.to_string();
                ensure!(words.iter().any(|w| msg.contains(w.as_str())), "{name}: {desc}: unlocated witness {msg}");
                done += 1;
            }
            rejected += done;
            fixtures += 1;
        }
        Ok(format!("{fixtures} fixtures valid, {rejected} corruptions rejected with witnesses"))
    });
}

fn shape_size_ok(c: &FiniteFCategory) -> bool {
    let n = c.num_objects();
    n <= 4 && (0..n).all(|x| (0..n).all(|y| c.hom_cat(x, y).cat.num_morphisms() <= 3))
}

#[test]
fn criterion_02_limit_oracle_equivalence() {
    run(2, "limit oracle equivalence", Some(Duration::from_secs(300)), || {
        let (objects, categories) = (test_fobjects(3), test_categories(3));
        let mut count = 0;
        for fx in dotted_fixtures() {
            ensure!(shape_size_ok(&fx.shape.cat), "dotted {}: shape too large", fx.name);
            let lim = dotted_lax_limit(&fx.shape, &fx.functor, fx.weakness, DEFAULT_BOUND).map_err(e)?;
            let options = fx.shape.options();
            let oracle = oracle_apex(&fx.functor, pair(fx.weakness), &options, DEFAULT_BOUND).map_err(e)?;
            ensure!(lim.apex.isomorphism_to(&oracle).is_some(), "dotted {}: apex differs from the oracle", fx.name);
            let cert = certify_cone(&FAmbient, &lim.apex, &lim.cone, pair(fx.weakness), &options, &objects, DEFAULT_BOUND)
                .map_err(e)?;
            ensure!(cert.holds(), "dotted {}: {:?}", fx.name, cert.failures);
            count += 1;
        }
        for fx in marked_fixtures() {
            let dotted = fx.shape.as_dotted();
            ensure!(shape_size_ok(&dotted.cat), "marked {}: shape too large", fx.name);
            let lim = marked_lax_limit(&fx.shape, &fx.functor, DEFAULT_BOUND).map_err(e)?;
            let options = dotted.options();
            let oracle = oracle_apex(&fx.functor, pair(Weakness::L), &options, DEFAULT_BOUND).map_err(e)?;
            ensure!(lim.apex.isomorphism_to(&oracle).is_some(), "marked {}: apex differs from the oracle", fx.name);
            let cert = certify_cone(&FAmbient, &lim.apex, &lim.cone, pair(Weakness::L), &options, &categories, DEFAULT_BOUND)
                .map_err(e)?;
            ensure!(cert.holds(), "marked {}: {:?}", fx.name, cert.failures);
            count += 1;
        }
        for fx in weighted_fixtures() {
            ensure!(shape_size_ok(&fx.weight.source), "weighted {}: shape too large", fx.name);
            let lim = weighted_limit_end(&fx.weight, &fx.diagram, DEFAULT_BOUND).map_err(e)?;
            let oracle = weighted_oracle_apex(&fx.weight, &fx.diagram, DEFAULT_BOUND).map_err(e)?;
            ensure!(lim.apex.isomorphism_to(&oracle).is_some(), "weighted {}: apex differs from the oracle", fx.name);
            let cert = check_weighted_limit_universal(&lim.cone, &fx.weight, &fx.diagram, &objects, DEFAULT_BOUND).map_err(e)?;
            ensure!(cert.holds(), "weighted {}: {:?}", fx.name, cert.failures);
            count += 1;
        }
        ensure!(count >= 20, "only {count} fixtures");
        Ok(format!("{count} fixtures match the oracle and certify against test apexes of up to 3 objects"))
    });
}

#[test]
fn criterion_03_intro_obstruction() {
    run(3, "strictness at tight projections", None, || {
        // arity 2 keeps the unrestricted (l, l) enumeration under the bound
        let small = ProductFragment::with_arity(2);
        let mut bent_total = 0;
        for (a, b) in [("meet2", "join2"), ("meet2", "chain3-max"), ("z2", "join2"), ("terminal", "chaotic2")] {
            let (m, n) = (monoidal_fixture(a).model(&small), monoidal_fixture(b).model(&small));
            let all = enumerate_loose_transformations(&FAmbient, &m, &n, pair(Weakness::L), &TransformationOptions::default(), DEFAULT_BOUND)
                .map_err(e)?;
            for j in 0..2 {
                let pi = small.projection(2, j);
                let name = small.carrier().one_cell_name(&pi);
                let target = n.obj(pi.dst).loose.clone();
                for phi in all.iter().filter(|p| !p.cell(&pi).components.iter().all(|&c| target.is_identity(c))) {
                    let mut candidate = phi.clone();
                    candidate.weakness = WeaknessPair { tight: Weakness::S, loose: Weakness::L };
                    let report = check_loose_natural(&FAmbient, &candidate, &m, &n).map_err(e)?;
                    ensure!(
                        report.violations.iter().any(|v| v.kind == ViolationKind::NotStrictAtTight && v.at.contains(&name)),
                        "{a} → {b}: a candidate bent at {name} was not rejected there"
                    );
                    bent_total += 1;
                }
            }
        }
        ensure!(bent_total > 0, "no candidate is bent at a projection");
        let frag = ProductFragment::new();
        let mut checked = Vec::new();
        for (a, b) in [("join2", "chain3-max"), ("z2", "join2"), ("meet2", "join2"), ("bz2", "chaotic2")] {
            let (ma, mb) = (monoidal_fixture(a), monoidal_fixture(b));
            ensure!(ma.cat.num_morphisms() <= 6 && mb.cat.num_morphisms() <= 6, "{a} or {b} too large");
            let phis = enumerate_model_transformations(&ma.model(&frag), &mb.model(&frag), Weakness::L, DEFAULT_BOUND).map_err(e)?;
            let mut got: Vec<_> = phis.iter().map(|p| lax_monoidal_of(&frag, &ma, p)).collect();
            got.sort();
            let expected = enumerate_lax_monoidal(&ma, &mb, DEFAULT_BOUND).map_err(e)?;
            ensure!(got == expected, "{a} → {b}: {} transformations against {} lax monoidal functors", got.len(), expected.len());
            checked.push(format!("{a}→{b}: {}", got.len()));
        }
        Ok(format!("{bent_total} bent candidates rejected at π₁/π₂; lax transformations match ({})", checked.join(", ")))
    });
}

/// `ev_T · S` for the loose arrow `φ`, assembled by hand.
fn evaluated(phi: &LooseTransformation<FAmbient>, t: usize) -> FFunctor<FAmbient> {
    let shape = loose_arrow_shape();
    let (m, n) = (phi.source.obj(t).clone(), phi.target.obj(t).clone());
    let value = |c: &OneCell| match (shape.cat.is_unit(c), c.src) {
        (false, _) => phi.components[t].clone(),
        (true, 0) => FAmbient.identity(&m),
        (true, _) => FAmbient.identity(&n),
    };
    FFunctor::build(&shape.cat, &FAmbient, |d| if d == 0 { m.clone() } else { n.clone() }, value, |a| {
        FAmbient.identity_cell(&value(&shape.cat.cell_source(a)))
    })
    .expect("evaluation at an object")
}

#[test]
fn criterion_04_limits_of_loose_morphisms() {
    run(4, "limits of loose model morphisms", None, || {
        let frag = ProductFragment::with_arity(2);
        let mut counts = Vec::new();
        for w in [Weakness::C, Weakness::L] {
            let pairs = loose_model_morphisms(&frag, w, DEFAULT_BOUND).map_err(e)?;
            ensure!(pairs.len() >= 5, "only {} pairs for w = {w}", pairs.len());
            for (name, phi) in &pairs {
                let lim = pointwise_model_limit(phi, DEFAULT_BOUND).map_err(e)?;
                let report = check_model(&lim.functor, &frag.sketch, RClass::Iso, 0, DEFAULT_BOUND).map_err(e)?;
                ensure!(report.is_model(), "{w} {name}: limit is not a model: {:?}", report.failing());
                for t in 0..frag.carrier().num_objects() {
                    let oracle = oracle_apex(&evaluated(phi, t), pair(w.bar()), &lim.shape.options(), DEFAULT_BOUND).map_err(e)?;
                    ensure!(lim.functor.obj(t).isomorphism_to(&oracle).is_some(), "{w} {name}: differs from the oracle at {t}");
                }
                let terminal = FFunctor::constant(&phi.source.source, &FAmbient, &FObject::terminal());
                let tests: [Model; 3] = [terminal, phi.source.clone(), phi.target.clone()];
                let cert = certify_pointwise_limit(&lim, &tests, DEFAULT_BOUND).map_err(e)?;
                ensure!(cert.holds(), "{w} {name}: {:?}", cert.failures);
            }
            counts.push(format!("w = {w}: {}", pairs.len()));
        }
        Ok(format!("model, pointwise oracle and universal property hold ({})", counts.join(", ")))
    });
}

#[test]
fn criterion_05_restriction_creates_limits() {
    run(5, "restriction to the tight part", None, || {
        let frag = ProductFragment::with_arity(2);
        let (tau, incl) = tight_part_sketch(&frag.sketch, DEFAULT_BOUND).map_err(e)?;
        let mut count = 0;
        for w in [Weakness::C, Weakness::L] {
            for (name, phi) in loose_model_morphisms(&frag, w, DEFAULT_BOUND).map_err(e)? {
                let lim = pointwise_model_limit(&phi, DEFAULT_BOUND).map_err(e)?;
                let restricted = restrict_model(&incl, &lim.functor, &tau, RClass::Iso, 0, DEFAULT_BOUND).map_err(e)?;
                let direct = pointwise_model_limit(&restrict_transformation(&incl, &phi).map_err(e)?, DEFAULT_BOUND).map_err(e)?;
                ensure!(restricted == direct.functor, "{w} {name}: restriction differs from the direct limit");
                count += 1;
            }
        }
        Ok(format!("{count} restricted limits equal the limits computed on the tight part"))
    });
}

#[test]
fn criterion_06_generators_detect_right_class() {
    run(6, "generating set for F", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let (mut inside, mut disagreements) = (0, Vec::new());
        for i in 0..100 {
            let f = random_fmap(&mut rng, false).map_err(e)?;
            let lifts = generator_lifting(&f, DEFAULT_BOUND).map_err(e)?.iter().all(|(_, ok)| *ok);
            let right = in_right_class(&f);
            inside += right as usize;
            if lifts != right {
                disagreements.push(i);
            }
        }
        ensure!(disagreements.is_empty(), "disagreements at samples {disagreements:?}");
        ensure!(inside > 0 && inside < 100, "sample is one-sided ({inside} in the class)");
        Ok(format!("100 maps, {inside} componentwise isomorphisms, zero disagreements"))
    });
}

#[test]
fn criterion_07_bridge() {
    run(7, "orthogonality against the terminal map", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut orthogonal = 0;
        for (chordate, base) in [(true, Base::Cat), (false, Base::F)] {
            for i in 0..50 {
                let (k, m) = random_pair(&mut rng, chordate).map_err(e)?;
                for r in [RClass::Iso, RClass::Equivalence] {
                    let check = verify_bridge(&k, &m, r, base, DEFAULT_BOUND).map_err(e)?;
                    ensure!(check.holds(), "{base:?} sample {i} {r:?}: {check:?}");
                    orthogonal += check.orthogonal as usize;
                }
            }
        }
        ensure!(orthogonal > 0 && orthogonal < 200, "verdicts are one-sided ({orthogonal} of 200 orthogonal)");
        Ok(format!("100 pairs under both classes, {orthogonal} of 200 orthogonal, zero disagreements"))
    });
}

#[test]
fn criterion_08_mates() {
    run(8, "mates of adjunctions", None, || {
        let all = adjunctions();
        for (name, d) in &all {
            let bar = mate_transformation(d).map_err(e)?;
            let s = &d.alpha.source.source;
            for t in s.all_one_cells().into_iter().filter(|t| s.is_tight_cell(t)) {
                ensure!(FAmbient.is_identity_cell(bar.cell(&t)), "{name}: mate at {} is not an identity", s.one_cell_name(&t));
            }
            let report = check_loose_natural(&FAmbient, &bar, &d.alpha.target, &d.alpha.source).map_err(e)?;
            ensure!(report.is_valid(), "{name}: {:?}", report.violations);
            let lift = check_doctrinal_lift(d, &bar).map_err(e)?;
            ensure!(lift.is_empty(), "{name}: {lift:?}");
        }
        Ok(format!("{} adjunctions", all.len()))
    });
}

#[test]
fn criterion_09_equivalence_witness() {
    run(9, "models against algebras", None, || {
        let mut done = Vec::new();
        for w in [Weakness::L, Weakness::C, Weakness::P, Weakness::S] {
            for f in monad_fixtures(w) {
                let r = equivalence_witness(&f.models, &f.inclusion, &f.carrier, &f.monad, &f.correspondence, w, 10_000)
                    .map_err(|err| format!("{} w = {w}: {err}", f.name))?;
                ensure!(r.certified, "{} w = {w}: {:?}", f.name, r.first_failure);
                done.push(format!("{}/{w}", f.name));
            }
        }
        Ok(format!("certified for {}", done.join(", ")))
    });
}

fn sigma_agrees(name: &str, sketch: &Sketch, models: Vec<(&'static str, Model)>, seen: &mut BTreeSet<bool>) -> Result<usize, String> {
    let mut checks = 0;
    for i in 0..sketch.cones.len() {
        let sigma = sigma_map(sketch, i, 2_000).map_err(e)?;
        for (m, model) in &models {
            for r in [RClass::Iso, RClass::Equivalence] {
                let orth = sigma.is_orthogonal(model, r, DEFAULT_BOUND).map_err(e)?;
                let holds = check_model(model, sketch, r, 2, DEFAULT_BOUND).map_err(e)?.cones[i].holds;
                ensure!(orth == holds, "{name} cone {i} model {m} {r:?}: σ says {orth}, check_model says {holds}");
                seen.insert(orth);
                checks += 1;
            }
        }
    }
    Ok(checks)
}

#[test]
fn criterion_10_model_orthogonality() {
    run(10, "models are σ-orthogonal", None, || {
        let mut seen = BTreeSet::new();
        let (arrow, span, terminal) = (arrow_sketch(), span_sketch(), terminal_sketch());
        let checks = sigma_agrees("arrow", &arrow, arrow_models(&arrow), &mut seen)?
            + sigma_agrees("span", &span, span_models(&span), &mut seen)?
            + sigma_agrees("terminal", &terminal, terminal_models(&terminal), &mut seen)?;
        ensure!(seen.len() == 2, "verdicts are one-sided");
        Ok(format!("3 sketches, {checks} per-cone verdicts agree"))
    });
}
