//! Gluing finite categories: the quotient of a disjoint union by identified
//! objects and morphisms, computed by bounded word generation.
//!
//! Morphisms of the quotient are words of identified generator classes,
//! reduced by composing adjacent letters that come from one component. The
//! irreducible words are generated breadth-first; exceeding `bound` of them
//! fails with `FinitenessExceeded`. Irreducible words that are equal through
//! overlapping reductions are then merged by congruence closure.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::category::{FiniteCategory, MorId, ObjId};
use super::construct::build_category;

/// A place in the disjoint union: `(component, index)`.
pub type Place = (usize, usize);

/// A glued category with the images of the component data.
#[derive(Clone, Debug)]
pub struct Glued {
    pub cat: Arc<FiniteCategory>,
    pub object_of: Vec<Vec<ObjId>>,
    pub morphism_of: Vec<Vec<MorId>>,
    /// Component morphisms whose composite (first factor first) is each
    /// morphism; consecutive factors meet at identified objects.
    pub words: Vec<Vec<Place>>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.0[hi] = lo;
        true
    }
}

type Word = (usize, usize, Vec<usize>);

struct Gluer {
    obj_off: Vec<usize>,
    mor_off: Vec<usize>,
    objs: UnionFind,
    mors: UnionFind,
    /// Generator classes containing an identity.
    trivial: BTreeSet<usize>,
    rules: BTreeMap<(usize, usize), BTreeSet<Option<usize>>>,
    letter_ends: BTreeMap<usize, (usize, usize)>,
}

impl Gluer {
    fn mor_place(&self, g: usize) -> Place {
        let c = self.mor_off.partition_point(|&o| o <= g) - 1;
        (c, g - self.mor_off[c])
    }

    fn obj_class(&mut self, c: usize, x: ObjId) -> usize {
        let i = self.obj_off[c] + x;
        self.objs.find(i)
    }

    fn letter(&mut self, g: usize) -> Option<usize> {
        let r = self.mors.find(g);
        (!self.trivial.contains(&r)).then_some(r)
    }

    fn ends(&self, w: &[usize]) -> Option<(usize, usize)> {
        Some((self.letter_ends[w.first()?].0, self.letter_ends[w.last()?].1))
    }

    /// All irreducible words reachable from `w` by rewriting.
    fn normal_forms(&self, w: Vec<usize>, memo: &mut BTreeMap<Vec<usize>, BTreeSet<Vec<usize>>>) -> BTreeSet<Vec<usize>> {
        if let Some(r) = memo.get(&w) {
            return r.clone();
        }
        let mut out = BTreeSet::new();
        let mut reducible = false;
        for i in 0..w.len().saturating_sub(1) {
            if let Some(results) = self.rules.get(&(w[i], w[i + 1])) {
                reducible = true;
                for r in results {
                    let mut v = w[..i].to_vec();
                    v.extend(r.iter().copied());
                    v.extend_from_slice(&w[i + 2..]);
                    out.extend(self.normal_forms(v, memo));
                }
            }
        }
        if !reducible {
            out.insert(w.clone());
        }
        memo.insert(w, out.clone());
        out
    }
}

/// The quotient of `components` by `object_relations` and `morphism_relations`.
pub fn glue_categories(
    components: &[Arc<FiniteCategory>],
    object_relations: &[(Place, Place)],
    morphism_relations: &[(Place, Place)],
    bound: usize,
) -> Result<Glued> {
    let mut obj_off = vec![0];
    let mut mor_off = vec![0];
    for c in components {
        obj_off.push(obj_off.last().unwrap() + c.num_objects());
        mor_off.push(mor_off.last().unwrap() + c.num_morphisms());
    }
    let (no, nm) = (*obj_off.last().unwrap(), *mor_off.last().unwrap());
    let mut gl = Gluer {
        obj_off: obj_off.clone(),
        mor_off: mor_off.clone(),
        objs: UnionFind::new(no),
        mors: UnionFind::new(nm),
        trivial: BTreeSet::new(),
        rules: BTreeMap::new(),
        letter_ends: BTreeMap::new(),
    };
    let mid = |p: Place| mor_off[p.0] + p.1;
    for &(a, b) in object_relations {
        gl.objs.union(obj_off[a.0] + a.1, obj_off[b.0] + b.1);
    }
    for &(a, b) in morphism_relations {
        gl.mors.union(mid(a), mid(b));
        for (pa, pb) in [(components[a.0].src(a.1), components[b.0].src(b.1)), (components[a.0].dst(a.1), components[b.0].dst(b.1))] {
            gl.objs.union(obj_off[a.0] + pa, obj_off[b.0] + pb);
        }
    }
    // identities of identified objects are identified
    let mut id_class: BTreeMap<usize, usize> = BTreeMap::new();
    for (c, cat) in components.iter().enumerate() {
        for x in 0..cat.num_objects() {
            let oc = gl.obj_class(c, x);
            let g = mid((c, cat.identity(x)));
            match id_class.get(&oc) {
                Some(&h) => {
                    gl.mors.union(g, h);
                }
                None => {
                    id_class.insert(oc, g);
                }
            }
        }
    }
    for g in 0..nm {
        let (c, m) = gl.mor_place(g);
        if components[c].is_identity(m) {
            let r = gl.mors.find(g);
            gl.trivial.insert(r);
        }
    }
    for g in 0..nm {
        if let Some(l) = gl.letter(g) {
            let (c, m) = gl.mor_place(g);
            let ends = (gl.obj_class(c, components[c].src(m)), gl.obj_class(c, components[c].dst(m)));
            if let Some(&prev) = gl.letter_ends.get(&l) {
                if prev != ends {
                    return Err(Error::Invalid("identified morphisms have different endpoints".into()));
                }
            }
            gl.letter_ends.insert(l, ends);
        }
    }
    for (c, cat) in components.iter().enumerate() {
        for f in 0..cat.num_morphisms() {
            for g in 0..cat.num_morphisms() {
                if cat.dst(f) != cat.src(g) {
                    continue;
                }
                let (lf, lg) = (gl.letter(mid((c, f))), gl.letter(mid((c, g))));
                if let (Some(lf), Some(lg)) = (lf, lg) {
                    let r = gl.letter(mid((c, cat.comp(g, f))));
                    gl.rules.entry((lf, lg)).or_default().insert(r);
                }
            }
        }
    }
    let letters: Vec<usize> = gl.letter_ends.keys().copied().collect();
    let obj_classes: BTreeSet<usize> = (0..no).map(|i| gl.objs.find(i)).collect();
    let obj_classes: Vec<usize> = obj_classes.into_iter().collect();

    // irreducible words, breadth-first
    let mut words: Vec<Word> = obj_classes.iter().map(|&o| (o, o, Vec::new())).collect();
    let mut frontier: Vec<Vec<usize>> = letters.iter().map(|&l| vec![l]).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in frontier {
            let (s, d) = gl.ends(&w).expect("non-empty");
            for &l in &letters {
                if gl.letter_ends[&l].0 == d && !gl.rules.contains_key(&(*w.last().unwrap(), l)) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            words.push((s, d, w));
            if words.len() > bound {
                return Err(Error::FinitenessExceeded { bound });
            }
        }
        frontier = next;
    }
    let index: BTreeMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut memo = BTreeMap::new();
    let mut classes = UnionFind::new(words.len());
    let lookup = |gl: &Gluer, s: usize, d: usize, w: Vec<usize>, memo: &mut BTreeMap<_, _>| -> Vec<usize> {
        gl.normal_forms(w, memo).into_iter().map(|nf| index[&(s, d, nf)]).collect()
    };
    // all normal forms of a word are equal
    let mut changed = true;
    while changed {
        changed = false;
        let mut by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..words.len() {
            by_class.entry(classes.find(i)).or_default().push(i);
        }
        for members in by_class.values() {
            for &l in &letters {
                let (ls, ld) = gl.letter_ends[&l];
                let mut right = Vec::new();
                let mut left = Vec::new();
                for &i in members {
                    let (s, d, w) = &words[i];
                    if *d == ls {
                        let mut v = w.clone();
                        v.push(l);
                        right.extend(lookup(&gl, *s, ld, v, &mut memo));
                    }
                    if *s == ld {
                        let mut v = vec![l];
                        v.extend(w.iter().copied());
                        left.extend(lookup(&gl, ls, *d, v, &mut memo));
                    }
                }
                for group in [right, left] {
                    for pair in group.windows(2) {
                        changed |= classes.union(pair[0], pair[1]);
                    }
                }
            }
        }
    }
    let mut reps: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..words.len() {
        let r = classes.find(i);
        reps.entry(r).or_insert(i);
    }
    let obj_pos: BTreeMap<usize, usize> = obj_classes.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let morphisms: Vec<(usize, ObjId, ObjId)> =
        reps.keys().map(|&r| (r, obj_pos[&words[r].0], obj_pos[&words[r].1])).collect();
    let empty_of: Vec<usize> = obj_classes.iter().map(|&o| classes.find(index[&(o, o, Vec::new())])).collect();
    let compose_memo = std::cell::RefCell::new(memo);
    let classes = std::cell::RefCell::new(classes);
    let built = build_category(
        obj_classes.clone(),
        morphisms,
        |x| empty_of[x],
        |g, f| {
            let (fs, _, fw) = &words[reps[f]];
            let (_, gd, gw) = &words[reps[g]];
            let mut v = fw.clone();
            v.extend(gw.iter().copied());
            let nf = lookup(&gl, *fs, *gd, v, &mut compose_memo.borrow_mut());
            classes.borrow_mut().find(nf[0])
        },
        |o| format!("[{o}]"),
        |m| format!("{:?}", words[reps[m]].2),
    )?;
    let mut classes = classes.into_inner();
    let mut compose_memo = compose_memo.into_inner();
    let object_of = components
        .iter()
        .enumerate()
        .map(|(c, cat)| (0..cat.num_objects()).map(|x| obj_pos[&gl.obj_class(c, x)]).collect())
        .collect();
    let mut morphism_of = Vec::with_capacity(components.len());
    for (c, cat) in components.iter().enumerate() {
        let mut row = Vec::with_capacity(cat.num_morphisms());
        for m in 0..cat.num_morphisms() {
            let (s, d) = (gl.obj_class(c, cat.src(m)), gl.obj_class(c, cat.dst(m)));
            let w = gl.letter(mid((c, m))).map(|l| vec![l]).unwrap_or_default();
            let nf = lookup(&gl, s, d, w, &mut compose_memo)[0];
            let key = classes.find(nf);
            row.push(built.morphism_of(&key).expect("class listed"));
        }
        morphism_of.push(row);
    }
    let words_out = built
        .morphisms
        .iter()
        .map(|&r| {
            words[reps[&r]]
                .2
                .iter()
                .map(|&l| gl.mor_place(l))
                .collect()
        })
        .collect();
    Ok(Glued { cat: built.cat, object_of, morphism_of, words: words_out })
}

impl Glued {
    /// A component place lying over each object.
    pub fn object_place(&self, x: ObjId) -> Place {
        self.object_of
            .iter()
            .enumerate()
            .find_map(|(c, row)| row.iter().position(|&y| y == x).map(|i| (c, i)))
            .expect("every glued object comes from a component")
    }

    /// The functor out of the glued category induced by compatible maps on
    /// the components; fails if the maps do not respect the gluing.
    pub fn functor_to(
        &self,
        target: &Arc<FiniteCategory>,
        obj: impl Fn(Place) -> ObjId,
        mor: impl Fn(Place) -> MorId,
    ) -> Result<super::FiniteFunctor> {
        let objects: Vec<ObjId> = (0..self.cat.num_objects()).map(|x| obj(self.object_place(x))).collect();
        let morphisms = (0..self.cat.num_morphisms())
            .map(|m| {
                self.words[m].iter().try_fold(target.identity(objects[self.cat.src(m)]), |acc, &p| {
                    let f = mor(p);
                    if target.dst(acc) != target.src(f) {
                        return Err(Error::Invalid("component maps do not respect the gluing".into()));
                    }
                    Ok(target.comp(f, acc))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let f = super::FiniteFunctor::new(self.cat.clone(), target.clone(), objects, morphisms)?;
        for (c, row) in self.object_of.iter().enumerate() {
            for (x, &y) in row.iter().enumerate() {
                if f.obj(y) != obj((c, x)) {
                    return Err(Error::Invalid("component maps do not respect the gluing".into()));
                }
            }
        }
        for (c, row) in self.morphism_of.iter().enumerate() {
            for (m, &y) in row.iter().enumerate() {
                if f.mor(y) != mor((c, m)) {
                    return Err(Error::Invalid("component maps do not respect the gluing".into()));
                }
            }
        }
        Ok(f)
    }
}
