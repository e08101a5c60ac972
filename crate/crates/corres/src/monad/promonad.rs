//! Promonads: monoids among correspondences from a category to itself.
//! Equivalently — and this module constructs the equivalence in both
//! directions — identity-on-objects functors out of the base.
//!
//! The carrier of a promonad is a correspondence `base ↛ base`; the unit
//! embeds the identity correspondence and the multiplication contracts a
//! self-composite, satisfying monoid laws up to the canonical coherence
//! maps of correspondence composition.

use super::kleisli::kleisli;
use super::Monad;
use crate::fincat::functor::FinFunctor;
use crate::fincat::{FinCategory, MorInfo, Violation};
use crate::ids::{ElemId, MorId, ObjId};
use crate::prof::compose::{
    associator, compose_prof, left_unitor, right_unitor, whisker_left, whisker_right,
};
use crate::prof::module::{enumerate_modules, Module};
use crate::prof::nats::prof_nats;
use crate::prof::{identity_prof, ProfMorphism, Profunctor};
use std::collections::BTreeMap;

/// A monoid in correspondences over a fixed base category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Promonad {
    pub base: FinCategory,
    pub carrier: Profunctor,
    /// `identity_prof(base) → carrier`.
    pub unit: ProfMorphism,
    /// `compose(carrier, carrier) → carrier`.
    pub mult: ProfMorphism,
}

impl Promonad {
    /// Checks the data shape and the three monoid laws, each stated via
    /// the canonical unitor/associator maps of correspondence composition.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.carrier.source != self.base || self.carrier.target != self.base {
            out.push(Violation::Structural(
                "carrier is not a correspondence from the base to itself".into(),
            ));
            return out;
        }
        if let Err(v) = self.carrier.validate() {
            out.push(v);
            return out;
        }
        let i = identity_prof(&self.base);
        let cc = compose_prof(&self.carrier, &self.carrier);
        if self.unit.source != i || self.unit.target != self.carrier {
            out.push(Violation::Structural("unit endpoints are wrong".into()));
            return out;
        }
        if self.mult.source != cc.prof || self.mult.target != self.carrier {
            out.push(Violation::Structural(
                "multiplication endpoints are wrong".into(),
            ));
            return out;
        }
        if let Err(v) = self.unit.validate() {
            out.push(v);
            return out;
        }
        if let Err(v) = self.mult.validate() {
            out.push(v);
            return out;
        }
        let left_route = whisker_right(&self.unit, &self.carrier).then(&self.mult);
        if left_route != left_unitor(&self.carrier) {
            out.push(Violation::Axiom("left unit law fails".into()));
        }
        let right_route = whisker_left(&self.carrier, &self.unit).then(&self.mult);
        if right_route != right_unitor(&self.carrier) {
            out.push(Violation::Axiom("right unit law fails".into()));
        }
        let assoc_l = whisker_right(&self.mult, &self.carrier).then(&self.mult);
        let assoc_r = associator(&self.carrier, &self.carrier, &self.carrier)
            .then(&whisker_left(&self.carrier, &self.mult))
            .then(&self.mult);
        if assoc_l != assoc_r {
            out.push(Violation::Axiom("associativity fails".into()));
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

/// The identity promonad: carrier the identity correspondence, unit the
/// identity, multiplication the left unitor.
pub fn identity_promonad(c: &FinCategory) -> Promonad {
    let i = identity_prof(c);
    Promonad {
        base: c.clone(),
        carrier: i.clone(),
        unit: ProfMorphism::identity(&i),
        mult: left_unitor(&i),
    }
}

/// A promonad built from an identity-on-objects functor, together with the
/// table from target morphisms to carrier elements.
pub struct IofPromonad {
    pub promonad: Promonad,
    /// Morphism of the functor's target → carrier element.
    pub elem_for: BTreeMap<MorId, ElemId>,
}

/// Builds the promonad of an identity-on-objects (more generally,
/// bijective-on-objects) functor `j: C → Θ`: the carrier has one element
/// per morphism of `Θ`, with both actions by `Θ`-composition through `j`.
pub fn promonad_from_iof(j: &FinFunctor) -> Result<IofPromonad, Violation> {
    let c = &j.source;
    let theta = &j.target;
    let mut jinv: BTreeMap<ObjId, ObjId> = BTreeMap::new();
    for x in &c.objects {
        if jinv.insert(j.obj_image(x), x.clone()).is_some() {
            return Err(Violation::Structural(
                "functor is not injective on objects".into(),
            ));
        }
    }
    if jinv.len() != theta.objects.len() {
        return Err(Violation::Structural(
            "functor is not surjective on objects".into(),
        ));
    }
    let elem_name = |m: &MorId| ElemId::new(format!("p.{m}").as_str());
    let mut elements = Vec::new();
    let mut elem_for = BTreeMap::new();
    for m in &theta.morphisms {
        let id = elem_name(&m.id);
        elements.push(crate::prof::ElemInfo {
            id: id.clone(),
            under: jinv[&m.src].clone(),
            over: jinv[&m.tgt].clone(),
        });
        elem_for.insert(m.id.clone(), id);
    }
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for m in &theta.morphisms {
        let e = elem_name(&m.id);
        for f in c.morphisms_into(&jinv[&m.src]) {
            left.insert(
                (f.id.clone(), e.clone()),
                elem_name(&theta.comp(&m.id, &j.mor_image(&f.id))),
            );
        }
        for g in c.morphisms_out_of(&jinv[&m.tgt]) {
            right.insert(
                (e.clone(), g.id.clone()),
                elem_name(&theta.comp(&j.mor_image(&g.id), &m.id)),
            );
        }
    }
    let carrier = Profunctor::new(c.clone(), c.clone(), elements, left, right);
    let i = identity_prof(c);
    let unit_map: BTreeMap<ElemId, ElemId> = i
        .elements
        .iter()
        .map(|e| {
            let u = MorId::from(e.id.as_str());
            (e.id.clone(), elem_for[&j.mor_image(&u)].clone())
        })
        .collect();
    let unit = ProfMorphism::new(i, carrier.clone(), unit_map);
    let mor_of: BTreeMap<ElemId, MorId> = elem_for
        .iter()
        .map(|(m, e)| (e.clone(), m.clone()))
        .collect();
    let cc = compose_prof(&carrier, &carrier);
    let mult_map: BTreeMap<ElemId, ElemId> = cc
        .prof
        .elements
        .iter()
        .map(|cls| {
            let (e1, e2) = &cc.repr_of[&cls.id];
            let composite = theta.comp(&mor_of[e2], &mor_of[e1]);
            (cls.id.clone(), elem_name(&composite))
        })
        .collect();
    let mult = ProfMorphism::new(cc.prof, carrier.clone(), mult_map);
    Ok(IofPromonad {
        promonad: Promonad {
            base: c.clone(),
            carrier,
            unit,
            mult,
        },
        elem_for,
    })
}

/// A category rebuilt from a promonad, with the identity-on-objects
/// functor from the base and the table from carrier elements to morphisms.
pub struct PromonadIof {
    pub theta: FinCategory,
    pub j: FinFunctor,
    /// Carrier element → morphism of `theta`.
    pub mor_for: BTreeMap<ElemId, MorId>,
}

/// Rebuilds a category from a promonad: morphisms are carrier elements,
/// composition is the multiplication, identities are unit images of base
/// identities.
pub fn iof_from_promonad(p: &Promonad) -> PromonadIof {
    let c = &p.base;
    let mor_name = |e: &ElemId| MorId::from(format!("t({e})").as_str());
    let mor_for: BTreeMap<ElemId, MorId> = p
        .carrier
        .elements
        .iter()
        .map(|e| (e.id.clone(), mor_name(&e.id)))
        .collect();
    let morphisms: Vec<MorInfo> = p
        .carrier
        .elements
        .iter()
        .map(|e| MorInfo {
            id: mor_for[&e.id].clone(),
            src: e.under.clone(),
            tgt: e.over.clone(),
        })
        .collect();
    let identity: BTreeMap<ObjId, MorId> = c
        .objects
        .iter()
        .map(|x| {
            let unit_elem = p.unit.apply(&ElemId::new(c.ident(x).as_str()));
            (x.clone(), mor_for[&unit_elem].clone())
        })
        .collect();
    let cc = compose_prof(&p.carrier, &p.carrier);
    let mut compose = BTreeMap::new();
    for e1 in &p.carrier.elements {
        for e2 in &p.carrier.elements {
            if e1.over != e2.under {
                continue;
            }
            let product = p.mult.apply(&cc.class(&e1.id, &e2.id));
            compose.insert(
                (mor_for[&e2.id].clone(), mor_for[&e1.id].clone()),
                mor_for[&product].clone(),
            );
        }
    }
    let theta = FinCategory::new(c.objects.clone(), morphisms, identity, compose);
    let morphism_map: BTreeMap<MorId, MorId> = c
        .morphisms
        .iter()
        .map(|m| {
            let e = p.unit.apply(&ElemId::new(m.id.as_str()));
            (m.id.clone(), mor_for[&e].clone())
        })
        .collect();
    let j = FinFunctor {
        source: c.clone(),
        target: theta.clone(),
        object_map: c.objects.iter().map(|x| (x.clone(), x.clone())).collect(),
        morphism_map,
    };
    PromonadIof { theta, j, mor_for }
}

/// The Kleisli promonad of a monad: carrier fibers are `Hom(x, Ty)`,
/// obtained as the promonad of the Kleisli embedding.
pub fn kleisli_promonad(t: &Monad) -> IofPromonad {
    let k = kleisli(t);
    promonad_from_iof(&k.j).expect("the Kleisli embedding is identity-on-objects")
}

/// An algebra for a promonad: a module with an action of the carrier
/// satisfying the unit and associativity laws.
pub struct AlgebraCat {
    /// Objects `a{i}` in order of `algebras`; morphisms are equivariant
    /// module maps.
    pub category: FinCategory,
    pub algebras: Vec<(Module, ProfMorphism)>,
}

/// Whether `action: module_apply(p, f) → f` satisfies the monoid-action
/// laws for the promonad `p`.
pub fn is_module_algebra(p: &Promonad, f: &Module, action: &ProfMorphism) -> bool {
    // Unit: acting by the unit is the canonical unitor.
    let unit_route = whisker_left(f, &p.unit).then(action);
    if unit_route != right_unitor(f) {
        return false;
    }
    // Associativity: acting twice equals acting by the multiplication.
    let twice = whisker_right(action, &p.carrier).then(action);
    let contracted = associator(f, &p.carrier, &p.carrier)
        .then(&whisker_left(f, &p.mult))
        .then(action);
    twice == contracted
}

/// Enumerates all algebras over all modules with fibers of size at most
/// `value_cap`, as a category whose morphisms are the equivariant module
/// maps commuting with the actions.
pub fn promonad_module_algebras(p: &Promonad, value_cap: usize) -> AlgebraCat {
    let mut algebras: Vec<(Module, ProfMorphism)> = Vec::new();
    for f in enumerate_modules(&p.base, value_cap) {
        let pf = compose_prof(&f, &p.carrier);
        for action in prof_nats(&f, &pf.prof) {
            if is_module_algebra(p, &f, &action) {
                algebras.push((f.clone(), action));
            }
        }
    }
    let objects: Vec<ObjId> = (0..algebras.len())
        .map(|i| ObjId::from(format!("a{i}").as_str()))
        .collect();
    let mut morphisms = Vec::new();
    let mut identity = BTreeMap::new();
    let mut maps: BTreeMap<MorId, ProfMorphism> = BTreeMap::new();
    let mut homs: BTreeMap<(usize, usize), Vec<MorId>> = BTreeMap::new();
    for (i, (fi, ai)) in algebras.iter().enumerate() {
        for (j, (fj, aj)) in algebras.iter().enumerate() {
            let mut hom = Vec::new();
            for (n, h) in prof_nats(fj, fi).into_iter().enumerate() {
                // h: fi → fj must commute with the actions.
                if whisker_right(&h, &p.carrier).then(aj) != ai.then(&h) {
                    continue;
                }
                let id = MorId::from(format!("h{n}:a{i}->a{j}").as_str());
                morphisms.push(MorInfo {
                    id: id.clone(),
                    src: objects[i].clone(),
                    tgt: objects[j].clone(),
                });
                if i == j && h == ProfMorphism::identity(fi) {
                    identity.insert(objects[i].clone(), id.clone());
                }
                maps.insert(id.clone(), h);
                hom.push(id);
            }
            homs.insert((i, j), hom);
        }
    }
    let mut compose = BTreeMap::new();
    for (i, j) in homs.keys().cloned().collect::<Vec<_>>() {
        for (jj, k) in homs.keys().cloned().collect::<Vec<_>>() {
            if j != jj {
                continue;
            }
            for f_id in &homs[&(i, j)] {
                for g_id in &homs[&(j, k)] {
                    let composite = maps[f_id].then(&maps[g_id]);
                    let found = homs[&(i, k)]
                        .iter()
                        .find(|id| maps[*id] == composite)
                        .expect("composite of equivariant maps is equivariant");
                    compose.insert((g_id.clone(), f_id.clone()), found.clone());
                }
            }
        }
    }
    let category = FinCategory::new(objects, morphisms, identity, compose);
    AlgebraCat {
        category,
        algebras,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{bz2, find_category_iso, linear, terminal, walking_iso};
    use crate::monad::{constant_monad, identity_monad};
    use crate::prof::iso::find_prof_iso;
    use crate::prof::module::restrict_module;

    #[test]
    fn identity_promonads_are_valid() {
        for c in [terminal(), linear(1), bz2(), walking_iso()] {
            assert!(identity_promonad(&c).is_valid());
        }
    }

    #[test]
    fn promonad_of_identity_functor_is_valid_and_identity_like() {
        let c = bz2();
        let j = crate::fincat::functor::identity_functor(&c);
        let p = promonad_from_iof(&j).unwrap().promonad;
        assert!(p.is_valid());
        assert!(find_prof_iso(&p.carrier, &identity_prof(&c)).is_some());
    }

    #[test]
    fn iof_roundtrip_recovers_the_category() {
        // j: [1] → walking retraction: target has objects 0,1 and an extra
        // arrow back; here exercised on available corpora: identity
        // functors and Kleisli embeddings.
        let mut corpus: Vec<FinFunctor> = vec![
            crate::fincat::functor::identity_functor(&linear(2)),
            crate::fincat::functor::identity_functor(&bz2()),
        ];
        corpus.push(kleisli(&constant_monad(&linear(1), &ObjId::from("1"))).j);
        corpus.push(kleisli(&identity_monad(&walking_iso())).j);
        for j in corpus {
            let built = promonad_from_iof(&j).unwrap();
            assert!(built.promonad.is_valid());
            let back = iof_from_promonad(&built.promonad);
            assert!(back.theta.validate().is_empty());
            assert!(back.j.validate().is_empty());
            // The constructed comparison: m ↦ rebuilt name of its element.
            let functor = FinFunctor {
                source: j.target.clone(),
                target: back.theta.clone(),
                object_map: j
                    .target
                    .objects
                    .iter()
                    .map(|x| (x.clone(), x.clone()))
                    .collect(),
                morphism_map: j
                    .target
                    .morphisms
                    .iter()
                    .map(|m| (m.id.clone(), back.mor_for[&built.elem_for[&m.id]].clone()))
                    .collect(),
            };
            assert!(functor.validate().is_empty());
            assert!(find_category_iso(&j.target, &back.theta).is_some());
            // j is compatible: the triangle through the comparison commutes.
            for m in &j.source.morphisms {
                assert_eq!(
                    functor.mor_image(&j.mor_image(&m.id)),
                    back.j.mor_image(&m.id)
                );
            }
        }
    }

    #[test]
    fn promonad_roundtrip_recovers_the_carrier() {
        for p in [
            identity_promonad(&bz2()),
            kleisli_promonad(&constant_monad(&linear(1), &ObjId::from("1"))).promonad,
        ] {
            let back = iof_from_promonad(&p);
            let rebuilt = promonad_from_iof(&back.j).unwrap();
            let q = &rebuilt.promonad;
            // Carrier comparison e ↦ element of the rebuilt morphism.
            let map: BTreeMap<ElemId, ElemId> = p
                .carrier
                .elements
                .iter()
                .map(|e| (e.id.clone(), rebuilt.elem_for[&back.mor_for[&e.id]].clone()))
                .collect();
            let phi = ProfMorphism::new(p.carrier.clone(), q.carrier.clone(), map);
            assert!(phi.validate().is_ok());
            assert!(phi.is_iso());
            // Compatibility with unit and multiplication.
            assert_eq!(p.unit.then(&phi), q.unit);
            let on_composites = whisker_right(&phi, &p.carrier)
                .then(&whisker_left(&q.carrier, &phi));
            assert_eq!(p.mult.then(&phi), on_composites.then(&q.mult));
        }
    }

    #[test]
    fn kleisli_promonad_transport_is_restriction_along_t() {
        // module_apply(P_T, F) ≅ F∘T: the coend route against the direct
        // construction.
        let cases: Vec<Monad> = vec![
            identity_monad(&bz2()),
            constant_monad(&linear(1), &ObjId::from("1")),
            constant_monad(&linear(2), &ObjId::from("2")),
        ];
        for t in cases {
            let kp = kleisli_promonad(&t);
            assert!(kp.promonad.is_valid());
            for f in enumerate_modules(&t.base, 2) {
                let coend_route = compose_prof(&f, &kp.promonad.carrier).prof;
                let direct = restrict_module(&f, &t.t);
                assert!(
                    find_prof_iso(&coend_route, &direct).is_some(),
                    "transport along the Kleisli carrier must be restriction along T"
                );
            }
        }
    }

    #[test]
    fn identity_promonad_algebras_are_exactly_the_modules() {
        for c in [terminal(), linear(1)] {
            let p = identity_promonad(&c);
            let modules = enumerate_modules(&c, 2);
            let algs = promonad_module_algebras(&p, 2);
            assert!(algs.category.validate().is_empty());
            assert_eq!(algs.algebras.len(), modules.len());
        }
    }

    #[test]
    fn empty_module_has_exactly_one_algebra() {
        let p = identity_promonad(&bz2());
        let empty = Profunctor::empty(terminal(), bz2());
        let pf = compose_prof(&empty, &p.carrier);
        let actions: Vec<ProfMorphism> = prof_nats(&empty, &pf.prof)
            .into_iter()
            .filter(|a| is_module_algebra(&p, &empty, a))
            .collect();
        assert_eq!(actions.len(), 1);
    }
}
