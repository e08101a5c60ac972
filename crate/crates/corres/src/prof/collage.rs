//! The collage of a correspondence `M: C ↛ D`: a single category over the
//! walking arrow whose 0-fiber is `C`, whose 1-fiber is `D`, and whose
//! cross-morphisms are the elements of `M`, composing through the actions.
//! The generating correspondence is recovered as (companion of the 0-leg)
//! then (conjoint of the 1-leg), with a constructed isomorphism.

use super::companion::{companion_data, conjoint_data};
use super::compose::compose_prof;
use super::{ProfMorphism, Profunctor};
use crate::fincat::functor::FinFunctor;
use crate::fincat::{linear, FinCategory, MorInfo};
use crate::ids::{ElemId, MorId, ObjId};
use std::collections::BTreeMap;

/// A collage: the glued category, its projection to `[1]`, the two fiber
/// inclusions, and the correspondence between cross-morphisms and elements.
#[derive(Clone, Debug)]
pub struct Collage {
    pub category: FinCategory,
    pub projection: FinFunctor,
    pub include_source: FinFunctor,
    pub include_target: FinFunctor,
    /// Cross-morphism id to the element it came from.
    pub element_of: BTreeMap<MorId, ElemId>,
    /// Element id to its cross-morphism.
    pub cross_of: BTreeMap<ElemId, MorId>,
}

fn tag0_obj(x: &ObjId) -> ObjId {
    ObjId::new(format!("0.{x}"))
}
fn tag1_obj(x: &ObjId) -> ObjId {
    ObjId::new(format!("1.{x}"))
}
fn tag0_mor(m: &MorId) -> MorId {
    MorId::new(format!("0.{m}"))
}
fn tag1_mor(m: &MorId) -> MorId {
    MorId::new(format!("1.{m}"))
}
fn tag_cross(e: &ElemId) -> MorId {
    MorId::new(format!("x.{e}"))
}

/// Glues a correspondence into a single category over `[1]`.
pub fn collage(m: &Profunctor) -> Collage {
    let c = &m.source;
    let d = &m.target;
    let mut objects: Vec<ObjId> = Vec::new();
    let mut morphisms: Vec<MorInfo> = Vec::new();
    let mut identity: BTreeMap<ObjId, MorId> = BTreeMap::new();
    let mut compose: BTreeMap<(MorId, MorId), MorId> = BTreeMap::new();
    // Fibers.
    for x in &c.objects {
        objects.push(tag0_obj(x));
        identity.insert(tag0_obj(x), tag0_mor(&c.ident(x)));
    }
    for y in &d.objects {
        objects.push(tag1_obj(y));
        identity.insert(tag1_obj(y), tag1_mor(&d.ident(y)));
    }
    for f in &c.morphisms {
        morphisms.push(MorInfo::new(
            tag0_mor(&f.id).as_str(),
            tag0_obj(&f.src).as_str(),
            tag0_obj(&f.tgt).as_str(),
        ));
    }
    for g in &d.morphisms {
        morphisms.push(MorInfo::new(
            tag1_mor(&g.id).as_str(),
            tag1_obj(&g.src).as_str(),
            tag1_obj(&g.tgt).as_str(),
        ));
    }
    for ((g, f), h) in &c.compose {
        compose.insert((tag0_mor(g), tag0_mor(f)), tag0_mor(h));
    }
    for ((g, f), h) in &d.compose {
        compose.insert((tag1_mor(g), tag1_mor(f)), tag1_mor(h));
    }
    // Cross-morphisms and their composites with the fibers.
    let mut element_of = BTreeMap::new();
    let mut cross_of = BTreeMap::new();
    for e in &m.elements {
        let cross = tag_cross(&e.id);
        morphisms.push(MorInfo::new(
            cross.as_str(),
            tag0_obj(&e.under).as_str(),
            tag1_obj(&e.over).as_str(),
        ));
        element_of.insert(cross.clone(), e.id.clone());
        cross_of.insert(e.id.clone(), cross);
    }
    for e in &m.elements {
        let cross = &cross_of[&e.id];
        // First a fiber morphism of C, then the cross: acts on the left.
        for f in c.morphisms_into(&e.under) {
            compose.insert(
                (cross.clone(), tag0_mor(&f.id)),
                cross_of[&m.left_act(&f.id, &e.id)].clone(),
            );
        }
        // First the cross, then a fiber morphism of D: acts on the right.
        for g in d.morphisms_out_of(&e.over) {
            compose.insert(
                (tag1_mor(&g.id), cross.clone()),
                cross_of[&m.right_act(&e.id, &g.id)].clone(),
            );
        }
    }
    let category = FinCategory::new(objects, morphisms, identity, compose);
    // Projection to [1].
    let arrow = linear(1);
    let mut pobj = BTreeMap::new();
    let mut pmor = BTreeMap::new();
    for x in &c.objects {
        pobj.insert(tag0_obj(x), ObjId::new("0"));
    }
    for y in &d.objects {
        pobj.insert(tag1_obj(y), ObjId::new("1"));
    }
    for f in &c.morphisms {
        pmor.insert(tag0_mor(&f.id), MorId::new("id_0"));
    }
    for g in &d.morphisms {
        pmor.insert(tag1_mor(&g.id), MorId::new("id_1"));
    }
    for e in &m.elements {
        pmor.insert(tag_cross(&e.id), MorId::new("a01"));
    }
    let projection = FinFunctor::new(category.clone(), arrow, pobj, pmor);
    // Fiber inclusions.
    let include_source = FinFunctor::new(
        c.clone(),
        category.clone(),
        c.objects.iter().map(|x| (x.clone(), tag0_obj(x))).collect(),
        c.morphisms.iter().map(|f| (f.id.clone(), tag0_mor(&f.id))).collect(),
    );
    let include_target = FinFunctor::new(
        d.clone(),
        category.clone(),
        d.objects.iter().map(|y| (y.clone(), tag1_obj(y))).collect(),
        d.morphisms.iter().map(|g| (g.id.clone(), tag1_mor(&g.id))).collect(),
    );
    Collage { category, projection, include_source, include_target, element_of, cross_of }
}

/// The factorization of a correspondence through its collage: an explicit
/// isomorphism from (companion of the source inclusion) ; (conjoint of the
/// target inclusion) back to `M`.
pub fn collage_factor(m: &Profunctor) -> (Collage, ProfMorphism) {
    let col = collage(m);
    let comp = companion_data(&col.include_source);
    let conj = conjoint_data(&col.include_target);
    let composite = compose_prof(&comp.prof, &conj.prof);
    let glued = &col.category;
    let map: BTreeMap<ElemId, ElemId> = composite
        .prof
        .elements
        .iter()
        .map(|e| {
            let (a, b) = &composite.repr_of[&e.id];
            let (_, phi) = &comp.parts[a]; // φ: i1(c) -> z in the collage
            let (_, psi) = &conj.parts[b]; // ψ: z -> i2(d) in the collage
            let through = glued.comp(psi, phi);
            let elem = col
                .element_of
                .get(&through)
                .unwrap_or_else(|| panic!("composite {through} is not a cross-morphism"))
                .clone();
            (e.id.clone(), elem)
        })
        .collect();
    let iso = ProfMorphism::new(composite.prof, m.clone(), map);
    (col, iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{disjoint_union, find_category_iso, linear, terminal, walking_iso};
    use crate::prof::identity_prof;

    #[test]
    fn collage_of_point_identity_is_the_walking_arrow() {
        let m = identity_prof(&terminal());
        let col = collage(&m);
        assert!(col.category.validate().is_empty(), "{:?}", col.category.validate());
        assert!(find_category_iso(&col.category, &linear(1)).is_some());
    }

    #[test]
    fn collage_of_empty_is_the_disjoint_union() {
        let c = linear(1);
        let d = walking_iso();
        let m = Profunctor::empty(c.clone(), d.clone());
        let col = collage(&m);
        assert!(col.category.validate().is_empty());
        assert!(find_category_iso(&col.category, &disjoint_union(&c, &d)).is_some());
    }

    #[test]
    fn collage_projection_and_inclusions_validate() {
        let m = identity_prof(&walking_iso());
        let col = collage(&m);
        assert!(col.category.validate().is_empty());
        assert!(col.projection.validate().is_empty());
        assert!(col.include_source.validate().is_empty());
        assert!(col.include_target.validate().is_empty());
        // No morphism runs from the 1-fiber back to the 0-fiber.
        for mi in &col.category.morphisms {
            assert!(!(mi.src.as_str().starts_with("1.") && mi.tgt.as_str().starts_with("0.")));
        }
    }

    #[test]
    fn factorization_recovers_the_correspondence() {
        for m in [
            identity_prof(&linear(1)),
            identity_prof(&walking_iso()),
            identity_prof(&crate::fincat::bz2()),
            Profunctor::empty(linear(1), terminal()),
        ] {
            let (_, iso) = collage_factor(&m);
            assert!(iso.validate().is_ok(), "{:?}", iso.validate());
            assert!(iso.is_iso());
        }
    }
}
