//! Companions and conjoints of functors, and the adjunction between them.
//!
//! For `f: C -> D`, the companion `f_!: C ↛ D` has elements the morphisms
//! `f(c) -> d` of `D` tagged with their `C`-leg, and the conjoint
//! `f^*: D ↛ C` has the morphisms `d -> f(c)`. The companion is left
//! adjoint to the conjoint; `check_adjunction` constructs the unit and
//! counit explicitly and verifies both triangle identities by element
//! chase.

use super::compose::{
    associator, associator_inv, compose_prof, left_unitor_inv, right_unitor, right_unitor_inv,
    whisker_left, whisker_right,
};
use super::{ElemInfo, ProfMorphism, Profunctor};
use crate::fincat::functor::FinFunctor;
use crate::ids::{ElemId, MorId, ObjId};
use std::collections::BTreeMap;

/// A companion or conjoint together with lookups between element ids and
/// their (object leg, morphism) parts.
#[derive(Clone, Debug)]
pub struct TaggedProf {
    pub prof: Profunctor,
    /// Element id to (object of the functor's source category, morphism of
    /// its target category).
    pub parts: BTreeMap<ElemId, (ObjId, MorId)>,
    pub ids: BTreeMap<(ObjId, MorId), ElemId>,
}

impl TaggedProf {
    pub fn id_for(&self, c: &ObjId, m: &MorId) -> ElemId {
        self.ids
            .get(&(c.clone(), m.clone()))
            .unwrap_or_else(|| panic!("no element tagged ({c}, {m})"))
            .clone()
    }
}

/// The companion `f_!: C ↛ D`: elements `(c, φ: f(c) -> d)`, with `C`
/// acting by precomposition through `f` and `D` by postcomposition.
pub fn companion_data(f: &FinFunctor) -> TaggedProf {
    let c_cat = &f.source;
    let d_cat = &f.target;
    let mut elements = Vec::new();
    let mut parts = BTreeMap::new();
    let mut ids = BTreeMap::new();
    for c in &c_cat.objects {
        let fc = f.obj_image(c);
        for phi in &d_cat.morphisms {
            if phi.src != fc {
                continue;
            }
            let id = ElemId::new(format!("({c}|{})", phi.id));
            elements.push(ElemInfo::new(id.as_str(), c.as_str(), phi.tgt.as_str()));
            parts.insert(id.clone(), (c.clone(), phi.id.clone()));
            ids.insert((c.clone(), phi.id.clone()), id);
        }
    }
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for (id, (c, phi)) in &parts {
        for u in c_cat.morphisms_into(c) {
            let fu = f.mor_image(&u.id);
            let new_phi = d_cat.comp(phi, &fu);
            left.insert(
                (u.id.clone(), id.clone()),
                ids[&(u.src.clone(), new_phi)].clone(),
            );
        }
        let phi_tgt = d_cat.tgt(phi).unwrap().clone();
        for g in d_cat.morphisms_out_of(&phi_tgt) {
            let new_phi = d_cat.comp(&g.id, phi);
            right.insert(
                (id.clone(), g.id.clone()),
                ids[&(c.clone(), new_phi)].clone(),
            );
        }
    }
    TaggedProf {
        prof: Profunctor::new(c_cat.clone(), d_cat.clone(), elements, left, right),
        parts,
        ids,
    }
}

pub fn companion(f: &FinFunctor) -> Profunctor {
    companion_data(f).prof
}

/// The conjoint `f^*: D ↛ C`: elements `(ψ: d -> f(c), c)`, with `D`
/// acting by precomposition and `C` by postcomposition through `f`.
pub fn conjoint_data(f: &FinFunctor) -> TaggedProf {
    let c_cat = &f.source;
    let d_cat = &f.target;
    let mut elements = Vec::new();
    let mut parts = BTreeMap::new();
    let mut ids = BTreeMap::new();
    for c in &c_cat.objects {
        let fc = f.obj_image(c);
        for psi in &d_cat.morphisms {
            if psi.tgt != fc {
                continue;
            }
            let id = ElemId::new(format!("({}|{c})", psi.id));
            elements.push(ElemInfo::new(id.as_str(), psi.src.as_str(), c.as_str()));
            parts.insert(id.clone(), (c.clone(), psi.id.clone()));
            ids.insert((c.clone(), psi.id.clone()), id);
        }
    }
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for (id, (c, psi)) in &parts {
        let psi_src = d_cat.src(psi).unwrap().clone();
        for h in d_cat.morphisms_into(&psi_src) {
            let new_psi = d_cat.comp(psi, &h.id);
            left.insert(
                (h.id.clone(), id.clone()),
                ids[&(c.clone(), new_psi)].clone(),
            );
        }
        for u in c_cat.morphisms_out_of(c) {
            let fu = f.mor_image(&u.id);
            let new_psi = d_cat.comp(&fu, psi);
            right.insert(
                (id.clone(), u.id.clone()),
                ids[&(u.tgt.clone(), new_psi)].clone(),
            );
        }
    }
    TaggedProf {
        prof: Profunctor::new(d_cat.clone(), c_cat.clone(), elements, left, right),
        parts,
        ids,
    }
}

pub fn conjoint(f: &FinFunctor) -> Profunctor {
    conjoint_data(f).prof
}

/// The adjunction data for `f_! ⊣ f^*`: unit, counit, and the two triangle
/// verdicts, all constructed explicitly.
#[derive(Clone, Debug)]
pub struct AdjunctionWitness {
    pub unit: ProfMorphism,
    pub counit: ProfMorphism,
    pub left_triangle_holds: bool,
    pub right_triangle_holds: bool,
}

impl AdjunctionWitness {
    pub fn holds(&self) -> bool {
        self.unit.is_valid()
            && self.counit.is_valid()
            && self.left_triangle_holds
            && self.right_triangle_holds
    }
}

/// Builds the unit `id_C -> f_! ; f^*` and counit `f^* ; f_! -> id_D` and
/// checks both triangle identities by chasing every element.
pub fn check_adjunction(f: &FinFunctor) -> AdjunctionWitness {
    let comp = companion_data(f);
    let conj = conjoint_data(f);
    let c_cat = &f.source;
    let d_cat = &f.target;
    let id_c = super::identity_prof(c_cat);
    let id_d = super::identity_prof(d_cat);

    // Unit: u: x -> x' goes to the class of ((x, f(u)), (id_{f(x')}, x')).
    let unit_comp = compose_prof(&comp.prof, &conj.prof);
    let unit_map: BTreeMap<ElemId, ElemId> = id_c
        .elements
        .iter()
        .map(|e| {
            let u = MorId::new(e.id.as_str());
            let x = c_cat.src(&u).unwrap().clone();
            let xp = c_cat.tgt(&u).unwrap().clone();
            let fu = f.mor_image(&u);
            let first = comp.id_for(&x, &fu);
            let second = conj.id_for(&xp, &d_cat.ident(&f.obj_image(&xp)));
            (e.id.clone(), unit_comp.class(&first, &second))
        })
        .collect();
    let unit = ProfMorphism::new(id_c, unit_comp.prof.clone(), unit_map);

    // Counit: the class of ((ψ: d -> f(c), c), (c, φ: f(c) -> d')) goes to
    // φ ∘ ψ.
    let counit_comp = compose_prof(&conj.prof, &comp.prof);
    let counit_map: BTreeMap<ElemId, ElemId> = counit_comp
        .prof
        .elements
        .iter()
        .map(|e| {
            let (cj, cp) = &counit_comp.repr_of[&e.id];
            let (_, psi) = &conj.parts[cj];
            let (_, phi) = &comp.parts[cp];
            (e.id.clone(), ElemId::new(d_cat.comp(phi, psi).as_str()))
        })
        .collect();
    let counit = ProfMorphism::new(counit_comp.prof.clone(), id_d, counit_map);

    // Left triangle: f_! ≅ id_C ; f_! -> (f_! ; f^*) ; f_! ≅
    // f_! ; (f^* ; f_!) -> f_! ; id_D ≅ f_! equals the identity.
    let f_bang = &comp.prof;
    let f_star = &conj.prof;
    let left_chain = left_unitor_inv(f_bang)
        .then(&whisker_right(&unit, f_bang))
        .then(&associator(f_bang, f_star, f_bang))
        .then(&whisker_left(f_bang, &counit))
        .then(&right_unitor(f_bang));
    let left_triangle_holds = left_chain == ProfMorphism::identity(f_bang);

    // Right triangle: f^* ≅ f^* ; id_C -> f^* ; (f_! ; f^*) ≅
    // (f^* ; f_!) ; f^* -> id_D ; f^* ≅ f^* equals the identity.
    let lu = left_unitor_inv(f_star); // f^* -> id_D ; f^*  (inverted later)
    let right_chain = right_unitor_inv(f_star)
        .then(&whisker_left(f_star, &unit))
        .then(&associator_inv(f_star, f_bang, f_star))
        .then(&whisker_right(&counit, f_star))
        .then(&lu.inverse());
    let right_triangle_holds = right_chain == ProfMorphism::identity(f_star);

    AdjunctionWitness { unit, counit, left_triangle_holds, right_triangle_holds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::functor::{enumerate_functors, identity_functor, FinFunctor};
    use crate::fincat::{linear, terminal, walking_iso};
    use crate::prof::identity_prof;
    use crate::prof::iso::prof_isomorphic;

    #[test]
    fn companion_of_identity_is_the_identity_correspondence() {
        for c in [terminal(), linear(1), walking_iso()] {
            let f = identity_functor(&c);
            assert!(prof_isomorphic(&companion(&f), &identity_prof(&c)));
            assert!(prof_isomorphic(&conjoint(&f), &identity_prof(&c)));
        }
    }

    #[test]
    fn point_into_walking_arrow_at_zero() {
        // f: * -> [1] at 0: morphisms out of 0 are id_0 and the arrow, so
        // the companion has 2 elements; into 0 only id_0, so the conjoint
        // has 1.
        let f = FinFunctor::new(
            terminal(),
            linear(1),
            [("*", "0")].into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
            [("id_*", "id_0")].into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
        );
        assert!(f.validate().is_empty(), "{:?}", f.validate());
        let cp = companion(&f);
        let cj = conjoint(&f);
        assert!(cp.is_valid() && cj.is_valid());
        assert_eq!(cp.elements.len(), 2);
        assert_eq!(cj.elements.len(), 1);
    }

    #[test]
    fn companion_conjoint_composite_realizes_comma_elements() {
        // compose(f_!, f^*) for f: * -> [1] at 0 has classes the morphisms
        // f(*) -> f(*), i.e. the single identity on 0.
        let f = FinFunctor::new(
            terminal(),
            linear(1),
            [("*", "0")].into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
            [("id_*", "id_0")].into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
        );
        let composed = compose_prof(&companion(&f), &conjoint(&f));
        assert!(composed.prof.is_valid());
        assert_eq!(composed.prof.elements.len(), 1);
    }

    #[test]
    fn adjunction_holds_for_identity_and_all_small_functors() {
        let c = linear(1);
        assert!(check_adjunction(&identity_functor(&c)).holds());
        for f in enumerate_functors(&linear(1), &linear(2)) {
            assert!(check_adjunction(&f).holds(), "adjunction fails for {:?}", f.object_map);
        }
        for f in enumerate_functors(&linear(2), &terminal()) {
            assert!(check_adjunction(&f).holds());
        }
        for f in enumerate_functors(&walking_iso(), &walking_iso()) {
            assert!(check_adjunction(&f).holds());
        }
    }
}
