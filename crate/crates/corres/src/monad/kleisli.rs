//! The Kleisli category of a monad: morphisms `x → y` are base morphisms
//! `x → Ty`, composed by `μ ∘ Tg ∘ f`, with identities the unit
//! components.

use super::Monad;
use crate::fincat::functor::FinFunctor;
use crate::fincat::{FinCategory, MorInfo};
use crate::ids::{MorId, ObjId};
use std::collections::BTreeMap;

/// The Kleisli category together with the identity-on-objects embedding of
/// the base and the tables tying Kleisli morphisms to their underlying
/// base morphisms.
pub struct Kleisli {
    pub category: FinCategory,
    /// `j: base → K`, identity on objects, `f ↦ η ∘ f`.
    pub j: FinFunctor,
    /// Kleisli morphism id → (source object, underlying base morphism into
    /// `T` of the target).
    pub parts: BTreeMap<MorId, (ObjId, MorId)>,
    /// Inverse of `parts`.
    pub ids: BTreeMap<(ObjId, MorId), MorId>,
}

impl Kleisli {
    /// The Kleisli morphism `x → y` carried by the base morphism
    /// `f: x → Ty`.
    pub fn id_for(&self, x: &ObjId, f: &MorId) -> MorId {
        self.ids
            .get(&(x.clone(), f.clone()))
            .unwrap_or_else(|| panic!("no Kleisli morphism ({x}, {f})"))
            .clone()
    }
}

fn kleisli_name(x: &ObjId, f: &MorId) -> MorId {
    MorId::from(format!("k({x},{f})").as_str())
}

/// Builds the Kleisli category of a valid monad.
pub fn kleisli(t: &Monad) -> Kleisli {
    let c = &t.base;
    let mut morphisms = Vec::new();
    let mut parts = BTreeMap::new();
    let mut ids = BTreeMap::new();
    // K(x, y) = Hom_C(x, Ty): one Kleisli morphism per pair (target
    // object y, base morphism into Ty). The target object is part of the
    // data because T need not be injective on objects.
    for y in &c.objects {
        let ty = t.t.obj_image(y);
        for m in &c.morphisms {
            if m.tgt != ty {
                continue;
            }
            let id = kleisli_name(y, &m.id);
            morphisms.push(MorInfo {
                id: id.clone(),
                src: m.src.clone(),
                tgt: y.clone(),
            });
            parts.insert(id.clone(), (m.src.clone(), m.id.clone()));
            ids.insert((y.clone(), m.id.clone()), id);
        }
    }
    let identity_of: BTreeMap<ObjId, MorId> = c
        .objects
        .iter()
        .map(|x| (x.clone(), kleisli_name(x, &t.unit_at(x))))
        .collect();
    // Composition: (y, g: y→Tz) ∘ (x, f: x→Ty) = (x, μ_z ∘ Tg ∘ f).
    let mut compose = BTreeMap::new();
    for gm in &morphisms {
        for fm in &morphisms {
            if fm.tgt != gm.src {
                continue;
            }
            let (_, g_base) = &parts[&gm.id];
            let (_, f_base) = &parts[&fm.id];
            let z = &gm.tgt;
            let composite = c.comp(&c.comp(&t.mult_at(z), &t.t.mor_image(g_base)), f_base);
            compose.insert((gm.id.clone(), fm.id.clone()), ids[&(z.clone(), composite)].clone());
        }
    }
    let category = FinCategory::new(c.objects.clone(), morphisms, identity_of, compose);
    let morphism_map: BTreeMap<MorId, MorId> = c
        .morphisms
        .iter()
        .map(|m| {
            let under = c.comp(&t.unit_at(&m.tgt), &m.id);
            (m.id.clone(), ids[&(m.tgt.clone(), under)].clone())
        })
        .collect();
    let j = FinFunctor {
        source: c.clone(),
        target: category.clone(),
        object_map: c.objects.iter().map(|x| (x.clone(), x.clone())).collect(),
        morphism_map,
    };
    Kleisli {
        category,
        j,
        parts,
        ids,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{bz2, find_category_iso, linear, walking_iso};
    use crate::monad::{constant_monad, identity_monad};

    #[test]
    fn kleisli_of_identity_monad_is_the_base() {
        for c in [linear(1), bz2(), walking_iso()] {
            let k = kleisli(&identity_monad(&c));
            assert!(k.category.validate().is_empty());
            assert!(k.j.validate().is_empty());
            assert!(find_category_iso(&k.category, &c).is_some());
            assert!(k.j.is_surjective_on_objects());
        }
    }

    #[test]
    fn kleisli_hom_sizes_count_maps_into_t() {
        let c = linear(2);
        let m = constant_monad(&c, &crate::ids::ObjId::from("2"));
        let k = kleisli(&m);
        assert!(k.category.validate().is_empty());
        for x in &c.objects {
            for y in &c.objects {
                let ty = m.t.obj_image(y);
                let expected = c
                    .morphisms
                    .iter()
                    .filter(|f| &f.src == x && f.tgt == ty)
                    .count();
                let got = k
                    .category
                    .morphisms
                    .iter()
                    .filter(|f| &f.src == x && &f.tgt == y)
                    .count();
                assert_eq!(got, expected, "K({x},{y})");
            }
        }
    }

    #[test]
    fn kleisli_of_constant_monad_on_the_arrow() {
        // Base [1], T constant at 1: every Kleisli hom-set has exactly one
        // element, since Hom(x, 1) is a point.
        let c = linear(1);
        let m = constant_monad(&c, &crate::ids::ObjId::from("1"));
        let k = kleisli(&m);
        assert!(k.category.validate().is_empty());
        for x in &c.objects {
            for y in &c.objects {
                let count = k
                    .category
                    .morphisms
                    .iter()
                    .filter(|f| &f.src == x && &f.tgt == y)
                    .count();
                assert_eq!(count, 1, "K({x},{y})");
            }
        }
    }
}
