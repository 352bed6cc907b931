//! Adjunctions between models for the mate construction, and monads on
//! restricted models with their correspondences to models.

use std::sync::Arc;

use crate::error::Result;
use crate::fcat::{
    materialize, AmbCell, FAmbient, FFunctor, FObject, FiniteFCategory, FunCategory, LooseMap, LooseTransformation,
    Materialized, Modification, OneCell, TwoCategory, Weakness, WeaknessPair,
};
use crate::fincat::{FiniteCategory, ObjId};
use crate::monad::{enumerate_algebras, AdjunctionData, Correspondence, EnhancedMonad};
use crate::sketch::{tight_part_sketch, Model, Sketch};

use super::sketches::{span_models, span_sketch};
use super::{chain_obj, locally_discrete, poset_functor, poset_map};

/// The monotone map with the given object assignment.
pub fn monotone(a: &FObject, b: &FObject, objects: &[ObjId]) -> LooseMap {
    LooseMap::new(a.clone(), b.clone(), poset_map(&a.loose, &b.loose, objects)).expect("typed map")
}

/// The unique cell `f ⇒ g` between maps into a preorder.
pub fn poset_cell(f: &LooseMap, g: &LooseMap) -> AmbCell {
    let t = &f.dst.loose;
    let components = (0..f.src.loose.num_objects())
        .map(|x| t.hom(f.functor.obj(x), g.functor.obj(x)).first().copied().expect("pointwise below"))
        .collect();
    AmbCell { src: f.clone(), dst: g.clone(), components }
}

/// A transformation with the given components whose 2-components are all
/// identities.
pub fn strict_transformation<B: TwoCategory>(
    b: &B,
    m: &FFunctor<B>,
    n: &FFunctor<B>,
    components: Vec<B::Mor>,
    weakness: WeaknessPair,
) -> Result<LooseTransformation<B>> {
    let s = &m.source;
    let k = s.num_objects();
    let mut cells = Vec::with_capacity(k * k);
    for x in 0..k {
        for y in 0..k {
            let row = s
                .one_cells(x, y)
                .map(|t| Ok(b.identity_cell(&b.compose(n.one(&t), &components[x])?)))
                .collect::<Result<Vec<_>>>()?;
            cells.push(row);
        }
    }
    Ok(LooseTransformation { weakness, source: m.clone(), target: n.clone(), components, cells })
}

/// `u, v : 0 ⇉ 1` with `u` tight and `v` loose.
pub fn pair_carrier() -> Arc<FiniteFCategory> {
    locally_discrete(FiniteCategory::parallel_pair(), |m| m == 2)
}

fn pair_model(carrier: &Arc<FiniteFCategory>, obj: FObject, loose: Vec<ObjId>) -> Model {
    let u = carrier.find_one_cell(0, 1, "u").expect("u");
    let n = obj.loose.num_objects();
    poset_functor(carrier, &[obj.clone(), obj], move |f| if *f == u { (0..n).collect() } else { loose.clone() })
}

/// The Galois connection `p ⊣ q` between `3` and `2`, with `p = (0, 1, 1)`
/// and `q = (0, 2)`, placed between two models of [`pair_carrier`].
///
/// Lax: `α = p : M ⇒ N` with `M(v)`, `N(v)` constant at the top.
/// Colax: `α = q : M ⇒ N` with `M(v) = 1` and `N(v) = (0, 0, 2)`, and `β = p`.
pub fn galois_adjunction(w: Weakness) -> AdjunctionData {
    let carrier = pair_carrier();
    let (three, two) = (chain_obj(3), chain_obj(2));
    let p = monotone(&three, &two, &[0, 1, 1]);
    let q = monotone(&two, &three, &[0, 2]);
    let pair = WeaknessPair::strict_on_tight(Weakness::S);
    let a = &FAmbient;
    if w.is_colax() {
        let m = pair_model(&carrier, two.clone(), vec![0, 1]);
        let n = pair_model(&carrier, three.clone(), vec![0, 0, 2]);
        let alpha = strict_transformation(a, &m, &n, vec![q.clone(), q.clone()], pair).expect("α");
        let qp = a.compose(&q, &p).expect("qp");
        let pq = a.compose(&p, &q).expect("pq");
        let unit = poset_cell(&a.identity(&three), &qp);
        let counit = poset_cell(&pq, &a.identity(&two));
        AdjunctionData { weakness: w, alpha, beta: vec![p.clone(), p], unit: vec![unit.clone(), unit], counit: vec![counit.clone(), counit] }
    } else {
        let m = pair_model(&carrier, three.clone(), vec![1, 1, 1]);
        let n = pair_model(&carrier, two.clone(), vec![1, 1]);
        let alpha = strict_transformation(a, &m, &n, vec![p.clone(), p.clone()], pair).expect("α");
        let qp = a.compose(&q, &p).expect("qp");
        let pq = a.compose(&p, &q).expect("pq");
        let unit = poset_cell(&a.identity(&three), &qp);
        let counit = poset_cell(&pq, &a.identity(&two));
        AdjunctionData { weakness: w, alpha, beta: vec![q.clone(), q], unit: vec![unit.clone(), unit], counit: vec![counit.clone(), counit] }
    }
}

/// `1 ⊣ 1` on a model with identity unit and counit.
pub fn identity_adjunction(m: &Model, w: Weakness) -> AdjunctionData {
    let a = &FAmbient;
    let alpha = LooseTransformation::identity(a, m, WeaknessPair::strict_on_tight(Weakness::S));
    let ids: Vec<LooseMap> = m.objects.iter().map(|o| a.identity(o)).collect();
    let cells: Vec<AmbCell> = ids.iter().map(|f| a.identity_cell(f)).collect();
    AdjunctionData { weakness: w, alpha, beta: ids, unit: cells.clone(), counit: cells }
}

/// Named adjunctions: both Galois connections and identity adjunctions on
/// the lax Galois models.
pub fn adjunctions() -> Vec<(String, AdjunctionData)> {
    let mut out = Vec::new();
    for w in [Weakness::L, Weakness::C] {
        let g = galois_adjunction(w);
        out.push((format!("identity-on-source-{w}"), identity_adjunction(&g.alpha.source, w)));
        out.push((format!("identity-on-target-{w}"), identity_adjunction(&g.alpha.target, w)));
        out.push((format!("galois-{w}"), g));
    }
    out.push(("identity-p".into(), identity_adjunction(&galois_adjunction(Weakness::L).alpha.source, Weakness::P)));
    out
}

/// A monad on materialized restricted models together with the models and
/// their assigned algebras.
pub struct MonadFixture {
    pub name: &'static str,
    pub sketch: Sketch,
    pub restricted: Sketch,
    pub inclusion: FFunctor<FiniteFCategory>,
    pub carrier: Materialized<FunCategory<FAmbient>>,
    pub monad: EnhancedMonad,
    pub models: Vec<(String, Model)>,
    pub correspondence: Correspondence,
    pub weakness: Weakness,
}

const BOUND: usize = 4096;

fn correspondence_for(
    models: &[(String, Model)],
    inclusion: &FFunctor<FiniteFCategory>,
    carrier: &Materialized<FunCategory<FAmbient>>,
    monad: &EnhancedMonad,
) -> Correspondence {
    let algebras = enumerate_algebras(monad);
    let pick = |m: &Model| {
        let r = inclusion.then(m).expect("restriction");
        let x = carrier.objects.iter().position(|o| *o == r).expect("restriction in carrier");
        *algebras.iter().find(|a| a.object == x).expect("algebra over the restriction")
    };
    Correspondence { algebras: models.iter().map(|(_, m)| pick(m)).collect() }
}

/// The identity monad on the models of the all-tight span sketch.
pub fn identity_monad_fixture(w: Weakness) -> MonadFixture {
    let sketch = span_sketch();
    let (restricted, inclusion) = tight_part_sketch(&sketch, BOUND).expect("tight part");
    let models: Vec<(String, Model)> = span_models(&sketch)
        .into_iter()
        .filter(|(n, _)| *n != "diagonal")
        .map(|(n, m)| (n.to_string(), m))
        .collect();
    let objects: Vec<_> = models.iter().map(|(_, m)| inclusion.then(m).expect("restriction")).collect();
    let names: Vec<String> = models.iter().map(|(n, _)| n.clone()).collect();
    let fun = FunCategory::new(FAmbient, restricted.carrier.clone(), WeaknessPair::strict_on_tight(w));
    let carrier = materialize(&fun, &objects, &names, BOUND).expect("carrier");
    let monad = EnhancedMonad::identity(&carrier.category);
    let correspondence = correspondence_for(&models, &inclusion, &carrier, &monad);
    MonadFixture { name: "identity", sketch, restricted, inclusion, carrier, monad, models, correspondence, weakness: w }
}

/// `X ⇄ Y` with `l : Y → X` tight and its inverse `t` loose, and no cones.
pub fn iso_sketch() -> Sketch {
    let c = FiniteCategory::chaotic(2);
    let tight: Vec<bool> = (0..c.num_morphisms()).map(|m| c.src(m) == 1 && c.dst(m) == 0).collect();
    Sketch::bare(locally_discrete(c, |m| tight[m]))
}

/// The monad `T(g : A_Y → A_X) = 1_{A_X}` on restrictions of models of
/// [`iso_sketch`] to its tight part, with `η = (1, g)` and `μ = 1`. Its
/// algebras are the restrictions whose `g` is invertible.
pub fn idempotent_monad_fixture(w: Weakness) -> MonadFixture {
    let sketch = iso_sketch();
    let (restricted, inclusion) = tight_part_sketch(&sketch, BOUND).expect("tight part");
    let tau = restricted.carrier.clone();
    let arrow = |ax: FObject, ay: FObject, g: Vec<ObjId>| poset_functor(&tau, &[ax, ay], move |_| g.clone());
    let (c1, c2) = (chain_obj(1), chain_obj(2));
    let objects = vec![
        arrow(c1.clone(), c1.clone(), vec![0]),
        arrow(c2.clone(), c2.clone(), vec![0, 1]),
        arrow(c2.clone(), c1.clone(), vec![0]),
        arrow(c2.clone(), c1.clone(), vec![1]),
        arrow(c1.clone(), c2.clone(), vec![0, 0]),
    ];
    let names: Vec<String> = ["id1", "id2", "pick0", "pick1", "collapse"].iter().map(|s| s.to_string()).collect();
    let pair = WeaknessPair::strict_on_tight(w);
    let fun = FunCategory::new(FAmbient, tau.clone(), pair);
    let carrier = materialize(&fun, &objects, &names, BOUND).expect("carrier");
    let a = &FAmbient;
    let l = tau.one_cells(1, 0).next().expect("l");
    let t_obj = |x: usize| {
        let ax = objects[x].obj(0).clone();
        let r = arrow(ax.clone(), ax.clone(), (0..ax.loose.num_objects()).collect());
        objects.iter().position(|o| *o == r).expect("T closes the carrier")
    };
    let t_one = |f: &OneCell| {
        let key = carrier.one_cell_key(f);
        let (x, y) = (t_obj(f.src), t_obj(f.dst));
        let c = key.components[0].clone();
        let phi = strict_transformation(a, &objects[x], &objects[y], vec![c.clone(), c], pair).expect("Tφ");
        carrier.find_one_cell(x, y, &phi).expect("Tφ in carrier")
    };
    let category = carrier.category.clone();
    let functor = FFunctor::build_unchecked(
        &category,
        t_obj,
        t_one,
        |c| {
            let key = carrier.two_cell_key(c);
            let (f, g) = (t_one(&category.cell_source(c)), t_one(&category.cell_target(c)));
            let gamma = Modification {
                source: carrier.one_cell_key(&f).clone(),
                target: carrier.one_cell_key(&g).clone(),
                components: vec![key.components[0].clone(), key.components[0].clone()],
            };
            carrier.find_two_cell(t_obj(c.src), t_obj(c.dst), &gamma).expect("TΓ in carrier")
        },
    );
    let n = objects.len();
    let eta = (0..n)
        .map(|x| {
            let tx = t_obj(x);
            let g = objects[x].one(&l).clone();
            let phi = strict_transformation(a, &objects[x], &objects[tx], vec![a.identity(objects[x].obj(0)), g], pair)
                .expect("η");
            carrier.find_one_cell(x, tx, &phi).expect("η in carrier")
        })
        .collect();
    let mu = (0..n).map(|x| category.unit(t_obj(x))).collect();
    let monad = EnhancedMonad { carrier: category.clone(), functor, mu, eta };
    let models: Vec<(String, Model)> = [(c1.clone(), vec![0]), (c2.clone(), vec![0, 1])]
        .into_iter()
        .enumerate()
        .map(|(i, (o, g))| {
            let m = poset_functor(&sketch.carrier, &[o.clone(), o], move |_| g.clone());
            (format!("iso{}", i + 1), m)
        })
        .collect();
    let correspondence = correspondence_for(&models, &inclusion, &carrier, &monad);
    MonadFixture { name: "idempotent", sketch, restricted, inclusion, carrier, monad, models, correspondence, weakness: w }
}

/// Every monad fixture at the given weakness.
pub fn monad_fixtures(w: Weakness) -> Vec<MonadFixture> {
    vec![identity_monad_fixture(w), idempotent_monad_fixture(w)]
}

pub fn fixture_object(f: &MonadFixture, name: &str) -> Option<usize> {
    f.carrier.category.find_object(name)
}
