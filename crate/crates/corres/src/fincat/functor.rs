//! Functors and natural transformations between finite categories.

use std::collections::{BTreeMap, BTreeSet};

use crate::fincat::{FinCategory, Violation};
use crate::ids::{MorId, ObjId};

/// A functor stored as total object and morphism tables. The source and
/// target categories travel with the functor so every value is
/// self-contained.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinFunctor {
    pub source: FinCategory,
    pub target: FinCategory,
    pub object_map: BTreeMap<ObjId, ObjId>,
    pub morphism_map: BTreeMap<MorId, MorId>,
}

impl FinFunctor {
    pub fn new(
        source: FinCategory,
        target: FinCategory,
        object_map: BTreeMap<ObjId, ObjId>,
        morphism_map: BTreeMap<MorId, MorId>,
    ) -> Self {
        FinFunctor { source, target, object_map, morphism_map }
    }

    pub fn obj(&self, x: &ObjId) -> Option<&ObjId> {
        self.object_map.get(x)
    }

    pub fn mor(&self, m: &MorId) -> Option<&MorId> {
        self.morphism_map.get(m)
    }

    /// Image of an object on a functor known to be total. Panics otherwise.
    pub fn obj_image(&self, x: &ObjId) -> ObjId {
        self.obj(x)
            .unwrap_or_else(|| panic!("object {x} unmapped"))
            .clone()
    }

    /// Image of a morphism on a functor known to be total. Panics otherwise.
    pub fn mor_image(&self, m: &MorId) -> MorId {
        self.mor(m)
            .unwrap_or_else(|| panic!("morphism {m} unmapped"))
            .clone()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        out.extend(self.source.validate());
        out.extend(self.target.validate());
        if !out.is_empty() {
            return out;
        }
        for x in &self.source.objects {
            match self.object_map.get(x) {
                None => out.push(Violation::Structural(format!("object {x} unmapped"))),
                Some(y) if !self.target.has_object(y) => out.push(Violation::Structural(
                    format!("object {x} maps to unknown {y}"),
                )),
                _ => {}
            }
        }
        for (x, _) in &self.object_map {
            if !self.source.has_object(x) {
                out.push(Violation::Structural(format!("object table mentions unknown {x}")));
            }
        }
        for m in &self.source.morphisms {
            match self.morphism_map.get(&m.id) {
                None => out.push(Violation::Structural(format!("morphism {} unmapped", m.id))),
                Some(n) => match self.target.ends(n) {
                    None => out.push(Violation::Structural(format!(
                        "morphism {} maps to unknown {n}",
                        m.id
                    ))),
                    Some((s, t)) => {
                        if self.object_map.get(&m.src) != Some(s)
                            || self.object_map.get(&m.tgt) != Some(t)
                        {
                            out.push(Violation::Structural(format!(
                                "morphism {}: image {n} has endpoints {s} -> {t}, not the images of {} -> {}",
                                m.id, m.src, m.tgt
                            )));
                        }
                    }
                },
            }
        }
        for (m, _) in &self.morphism_map {
            if !self.source.has_morphism(m) {
                out.push(Violation::Structural(format!(
                    "morphism table mentions unknown {m}"
                )));
            }
        }
        if out.iter().any(|v| matches!(v, Violation::Structural(_))) {
            return out;
        }
        for (x, i) in &self.source.identity {
            let fx = self.object_map.get(x).unwrap();
            let want = self.target.identity.get(fx).unwrap();
            let got = self.morphism_map.get(i).unwrap();
            if got != want {
                out.push(Violation::Axiom(format!(
                    "identity of {x} maps to {got}, expected {want}"
                )));
            }
        }
        for ((g, f), h) in &self.source.compose {
            let fg = self.morphism_map.get(g).unwrap();
            let ff = self.morphism_map.get(f).unwrap();
            let fh = self.morphism_map.get(h).unwrap();
            match self.target.composite(fg, ff) {
                Some(c) if c == fh => {}
                other => out.push(Violation::Axiom(format!(
                    "composition not preserved on ({g}, {f}): image composite is {other:?}, expected {fh}"
                ))),
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn is_identity_on_objects(&self) -> bool {
        self.source.objects == self.target.objects
            && self.source.objects.iter().all(|x| self.object_map.get(x) == Some(x))
    }

    pub fn is_surjective_on_objects(&self) -> bool {
        let image: BTreeSet<&ObjId> = self.object_map.values().collect();
        self.target.objects.iter().all(|y| image.contains(y))
    }

    pub fn is_bijective_on_objects(&self) -> bool {
        let image: BTreeSet<&ObjId> = self.object_map.values().collect();
        self.is_surjective_on_objects() && image.len() == self.source.objects.len()
    }

    /// Essential surjectivity: every target object is isomorphic to an image.
    pub fn is_essentially_surjective(&self) -> bool {
        self.target.objects.iter().all(|y| {
            self.object_map
                .values()
                .any(|fy| self.target.find_isomorphism(fy, y).is_some())
        })
    }

    /// Full and faithful: each hom-map is a bijection.
    pub fn is_fully_faithful(&self) -> bool {
        for x in &self.source.objects {
            for y in &self.source.objects {
                let fx = self.object_map.get(x).unwrap();
                let fy = self.object_map.get(y).unwrap();
                let dom = self.source.hom(x, y);
                let cod: BTreeSet<&MorId> = self.target.hom(fx, fy).into_iter().collect();
                let image: BTreeSet<&MorId> =
                    dom.iter().map(|m| self.morphism_map.get(m).unwrap()).collect();
                if image.len() != dom.len() || image != cod {
                    return false;
                }
            }
        }
        true
    }
}

/// The identity functor.
pub fn identity_functor(c: &FinCategory) -> FinFunctor {
    FinFunctor::new(
        c.clone(),
        c.clone(),
        c.objects.iter().map(|x| (x.clone(), x.clone())).collect(),
        c.morphisms.iter().map(|m| (m.id.clone(), m.id.clone())).collect(),
    )
}

/// Composite `g ∘ f`. The middle categories must be equal.
pub fn compose_functors(g: &FinFunctor, f: &FinFunctor) -> FinFunctor {
    assert_eq!(f.target, g.source, "compose_functors: middle categories differ");
    FinFunctor::new(
        f.source.clone(),
        g.target.clone(),
        f.object_map
            .iter()
            .map(|(x, y)| (x.clone(), g.object_map.get(y).expect("object escapes middle").clone()))
            .collect(),
        f.morphism_map
            .iter()
            .map(|(m, n)| {
                (m.clone(), g.morphism_map.get(n).expect("morphism escapes middle").clone())
            })
            .collect(),
    )
}

/// The constant functor at an object of `d`.
pub fn constant_functor(c: &FinCategory, d: &FinCategory, at: &ObjId) -> FinFunctor {
    let idm = d.identity.get(at).expect("constant_functor: unknown object").clone();
    FinFunctor::new(
        c.clone(),
        d.clone(),
        c.objects.iter().map(|x| (x.clone(), at.clone())).collect(),
        c.morphisms.iter().map(|m| (m.id.clone(), idm.clone())).collect(),
    )
}

/// A natural transformation between parallel functors, stored by components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NatTransf {
    pub components: BTreeMap<ObjId, MorId>,
}

impl NatTransf {
    /// Checks the component typing and the naturality squares against the
    /// given parallel pair.
    pub fn validate(&self, f: &FinFunctor, g: &FinFunctor) -> Vec<Violation> {
        let mut out = Vec::new();
        if f.source != g.source || f.target != g.target {
            out.push(Violation::Structural("functors are not parallel".into()));
            return out;
        }
        let c = &f.source;
        let d = &f.target;
        for x in &c.objects {
            match self.components.get(x) {
                None => out.push(Violation::Structural(format!("missing component at {x}"))),
                Some(a) => match d.ends(a) {
                    None => out.push(Violation::Structural(format!(
                        "component at {x} is unknown morphism {a}"
                    ))),
                    Some((s, t)) => {
                        if s != f.object_map.get(x).unwrap() || t != g.object_map.get(x).unwrap() {
                            out.push(Violation::Structural(format!(
                                "component at {x} has endpoints {s} -> {t}, expected F{x} -> G{x}"
                            )));
                        }
                    }
                },
            }
        }
        if !out.is_empty() {
            return out;
        }
        for m in &c.morphisms {
            let ax = self.components.get(&m.src).unwrap();
            let ay = self.components.get(&m.tgt).unwrap();
            let fm = f.morphism_map.get(&m.id).unwrap();
            let gm = g.morphism_map.get(&m.id).unwrap();
            let left = d.composite(ay, fm).expect("naturality: left composite");
            let right = d.composite(gm, ax).expect("naturality: right composite");
            if left != right {
                out.push(Violation::Axiom(format!(
                    "naturality square fails at {}: {ay} . {fm} = {left} but {gm} . {ax} = {right}",
                    m.id
                )));
            }
        }
        out
    }
}

/// All natural transformations `f ⇒ g`, found by exhaustive search over
/// component tuples. Intended for targets of desk scale (≤ 4 objects,
/// ≤ 12 morphisms), where the tuple space is tiny.
pub fn nat_set(f: &FinFunctor, g: &FinFunctor) -> Vec<NatTransf> {
    assert_eq!(f.source, g.source, "nat_set: sources differ");
    assert_eq!(f.target, g.target, "nat_set: targets differ");
    let c = &f.source;
    let d = &f.target;
    let mut out = Vec::new();
    let mut partial: BTreeMap<ObjId, MorId> = BTreeMap::new();
    search_components(c, d, f, g, 0, &mut partial, &mut out);
    out
}

fn search_components(
    c: &FinCategory,
    d: &FinCategory,
    f: &FinFunctor,
    g: &FinFunctor,
    idx: usize,
    partial: &mut BTreeMap<ObjId, MorId>,
    out: &mut Vec<NatTransf>,
) {
    if idx == c.objects.len() {
        out.push(NatTransf { components: partial.clone() });
        return;
    }
    let x = &c.objects[idx];
    let fx = f.object_map.get(x).unwrap();
    let gx = g.object_map.get(x).unwrap();
    for a in d.hom(fx, gx) {
        partial.insert(x.clone(), a.clone());
        // Check every naturality square whose two endpoints are already chosen.
        let ok = c.morphisms.iter().all(|m| {
            let (Some(ax), Some(ay)) = (partial.get(&m.src), partial.get(&m.tgt)) else {
                return true;
            };
            let fm = f.morphism_map.get(&m.id).unwrap();
            let gm = g.morphism_map.get(&m.id).unwrap();
            d.composite(ay, fm) == d.composite(gm, ax)
        });
        if ok {
            search_components(c, d, f, g, idx + 1, partial, out);
        }
        partial.remove(x);
    }
}

/// All functors `c -> d`, by backtracking over object then morphism
/// assignments. Exhaustive and deterministic; intended for desk-scale inputs.
pub fn enumerate_functors(c: &FinCategory, d: &FinCategory) -> Vec<FinFunctor> {
    let mut out = Vec::new();
    let mut object_map = BTreeMap::new();
    enum_objects(c, d, 0, &mut object_map, &mut out);
    out
}

fn enum_objects(
    c: &FinCategory,
    d: &FinCategory,
    idx: usize,
    object_map: &mut BTreeMap<ObjId, ObjId>,
    out: &mut Vec<FinFunctor>,
) {
    if idx == c.objects.len() {
        let mut morphism_map = BTreeMap::new();
        enum_morphisms(c, d, object_map, 0, &mut morphism_map, out);
        return;
    }
    let x = c.objects[idx].clone();
    for y in &d.objects {
        object_map.insert(x.clone(), y.clone());
        enum_objects(c, d, idx + 1, object_map, out);
    }
    object_map.remove(&x);
}

fn enum_morphisms(
    c: &FinCategory,
    d: &FinCategory,
    object_map: &BTreeMap<ObjId, ObjId>,
    idx: usize,
    morphism_map: &mut BTreeMap<MorId, MorId>,
    out: &mut Vec<FinFunctor>,
) {
    if idx == c.morphisms.len() {
        let cand = FinFunctor::new(c.clone(), d.clone(), object_map.clone(), morphism_map.clone());
        if cand.is_valid() {
            out.push(cand);
        }
        return;
    }
    let m = &c.morphisms[idx];
    // Identities are forced; skip the search dimension.
    if c.is_identity(&m.id) {
        let fx = object_map.get(&m.src).unwrap();
        morphism_map.insert(m.id.clone(), d.identity.get(fx).unwrap().clone());
        enum_morphisms(c, d, object_map, idx + 1, morphism_map, out);
        morphism_map.remove(&m.id);
        return;
    }
    let fs = object_map.get(&m.src).unwrap();
    let ft = object_map.get(&m.tgt).unwrap();
    for n in d.hom(fs, ft) {
        morphism_map.insert(m.id.clone(), n.clone());
        // Early pruning: any fully-assigned composition must already agree.
        let ok = c.compose.iter().all(|((g, f), h)| {
            let (Some(ig), Some(if_), Some(ih)) = (
                morphism_map.get(g),
                morphism_map.get(f),
                morphism_map.get(h),
            ) else {
                return true;
            };
            d.composite(ig, if_) == Some(ih)
        });
        if ok {
            enum_morphisms(c, d, object_map, idx + 1, morphism_map, out);
        }
        morphism_map.remove(&m.id);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{discrete, linear, terminal, walking_iso};

    #[test]
    fn identity_functor_is_valid() {
        let f = identity_functor(&walking_iso());
        assert!(f.validate().is_empty());
        assert!(f.is_identity_on_objects());
        assert!(f.is_fully_faithful());
    }

    #[test]
    fn composite_of_valid_functors_is_valid() {
        let c = linear(1);
        let point_at_0 = constant_functor(&terminal(), &c, &"0".into());
        let collapse = constant_functor(&c, &terminal(), &"*".into());
        let comp = compose_functors(&collapse, &point_at_0);
        assert!(comp.is_valid());
        assert_eq!(comp.source, terminal());
        assert_eq!(comp.target, terminal());
    }

    #[test]
    fn functor_must_preserve_composition() {
        // walking_iso -> bz2-like structure cannot send i, j arbitrarily.
        let c = walking_iso();
        let mut f = identity_functor(&c);
        // Swap the images of i and j: then f(j . i) = f(j) . f(i) = i . j = id_y != id_x.
        f.morphism_map.insert("i".into(), "j".into());
        f.morphism_map.insert("j".into(), "i".into());
        let report = f.validate();
        assert!(
            report.iter().any(|v| matches!(v, Violation::Structural(_) | Violation::Axiom(_))),
            "swapping i and j without swapping objects must fail, got {report:?}"
        );
    }

    #[test]
    fn nat_set_between_identity_functors_is_the_center() {
        // Each hom-set of the walking iso is a singleton, so the only
        // self-transformation of the identity is the identity.
        let c = walking_iso();
        let f = identity_functor(&c);
        let nats = nat_set(&f, &f);
        assert_eq!(nats.len(), 1, "walking iso has trivial center, got {nats:?}");
        for n in &nats {
            assert!(n.validate(&f, &f).is_empty());
        }
        // A genuine non-trivial center: the one-object group ℤ/2.
        let g = crate::fincat::bz2();
        let idg = identity_functor(&g);
        assert_eq!(nat_set(&idg, &idg).len(), 2, "ℤ/2 is abelian: both elements are central");
    }

    #[test]
    fn nat_set_counts_arrow_components() {
        // Functors terminal -> [1] picking 0 and 1; exactly one transformation
        // from const_0 to const_1 and none backwards.
        let t = terminal();
        let c = linear(1);
        let f0 = constant_functor(&t, &c, &"0".into());
        let f1 = constant_functor(&t, &c, &"1".into());
        assert_eq!(nat_set(&f0, &f1).len(), 1);
        assert_eq!(nat_set(&f1, &f0).len(), 0);
        assert_eq!(nat_set(&f0, &f0).len(), 1);
    }

    #[test]
    fn enumerate_functors_from_terminal_counts_objects() {
        let d = walking_iso();
        assert_eq!(enumerate_functors(&terminal(), &d).len(), 2);
    }

    #[test]
    fn enumerate_functors_arrow_to_arrow() {
        // Functors [1] -> [1] are order maps {0,1} -> {0,1}: 00, 01, 11.
        let c = linear(1);
        let fs = enumerate_functors(&c, &c);
        assert_eq!(fs.len(), 3, "got {}", fs.len());
        for f in &fs {
            assert!(f.is_valid());
        }
    }

    #[test]
    fn essential_surjectivity_sees_isomorphic_images() {
        let g = walking_iso();
        let f = constant_functor(&terminal(), &g, &"x".into());
        assert!(!f.is_surjective_on_objects());
        assert!(f.is_essentially_surjective(), "x is isomorphic to y");
        let d = discrete(&["a", "b"]);
        let h = constant_functor(&terminal(), &d, &"a".into());
        assert!(!h.is_essentially_surjective());
    }
}
