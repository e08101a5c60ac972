//! Cocartesian lifts, free cocartesian fibrations, and an exhaustive adjoint
//! search used as an independent oracle for the freeness property.

use std::collections::{BTreeMap, BTreeSet};

use crate::fincat::functor::{enumerate_functors, nat_set, FinFunctor, NatTransf};
use crate::fincat::{FinCategory, MorInfo};
use crate::ids::{MorId, ObjId};

/// Whether `p` has a cocartesian lift of every morphism starting at an image:
/// for each `e` and `f: p(e) -> y` there is `φ: e -> e'` over `f` such that
/// composition with `φ` bijects hom-sets over the compatible triangles.
pub fn has_cocartesian_lifts(p: &FinFunctor) -> bool {
    let e_cat = &p.source;
    let c_cat = &p.target;
    for e in &e_cat.objects {
        let pe = p.object_map.get(e).unwrap();
        for f in &c_cat.morphisms {
            if &f.src != pe {
                continue;
            }
            let found = e_cat.morphisms.iter().any(|phi| {
                phi.src == *e
                    && p.morphism_map.get(&phi.id) == Some(&f.id)
                    && is_cocartesian(p, &phi.id)
            });
            if !found {
                return false;
            }
        }
    }
    true
}

/// The universal property of a cocartesian morphism, checked exhaustively:
/// for every `ψ: src(φ) -> e''` and factorization `p(ψ) = g ∘ p(φ)`, there is
/// exactly one `χ: tgt(φ) -> e''` over `g` with `χ ∘ φ = ψ`.
pub fn is_cocartesian(p: &FinFunctor, phi: &MorId) -> bool {
    let e_cat = &p.source;
    let c_cat = &p.target;
    let Some((src, tgt)) = e_cat.ends(phi) else { return false };
    let (src, tgt) = (src.clone(), tgt.clone());
    let pphi = p.morphism_map.get(phi).unwrap();
    for psi in &e_cat.morphisms {
        if psi.src != src {
            continue;
        }
        let ppsi = p.morphism_map.get(&psi.id).unwrap();
        for g in &c_cat.morphisms {
            if c_cat.composite(&g.id, pphi) != Some(ppsi) {
                continue;
            }
            let mut count = 0;
            for chi in &e_cat.morphisms {
                if chi.src == tgt
                    && p.morphism_map.get(&chi.id) == Some(&g.id)
                    && e_cat.composite(&chi.id, phi) == Some(&psi.id)
                {
                    count += 1;
                }
            }
            if count != 1 {
                return false;
            }
        }
    }
    true
}

/// The free cocartesian fibration on `p: E -> C` relative to a class `d` of
/// morphisms of `C` (which should contain all identities).
///
/// Objects are pairs `(e, f)` with `f: p(e) -> y` in `d`; a morphism
/// `(e, f) -> (e', f')` is a pair `(α: e -> e', β: tgt f -> tgt f')` with
/// `f' ∘ p(α) = β ∘ f`. Returns the total category, its projection to `C`
/// (sending `(e, f)` to `tgt f`), and the unit embedding `E -> total` sending
/// `e` to `(e, id)`.
pub struct FreeCocart {
    pub total: FinCategory,
    pub projection: FinFunctor,
    pub unit: FinFunctor,
}

pub fn free_cocart_fibration(p: &FinFunctor, d: &BTreeSet<MorId>) -> FreeCocart {
    let e_cat = &p.source;
    let c_cat = &p.target;
    let obj_name = |e: &ObjId, f: &MorId| ObjId::from(format!("({e}|{f})"));
    let mor_name = |a: &MorId, b: &MorId| MorId::from(format!("({a}|{b})"));

    let mut objects = Vec::new();
    let mut obj_data: Vec<(ObjId, ObjId, MorId)> = Vec::new(); // (name, e, f)
    for e in &e_cat.objects {
        let pe = p.object_map.get(e).unwrap();
        for f in &c_cat.morphisms {
            if &f.src == pe && d.contains(&f.id) {
                let name = obj_name(e, &f.id);
                objects.push(name.clone());
                obj_data.push((name, e.clone(), f.id.clone()));
            }
        }
    }

    let mut morphisms = Vec::new();
    let mut mor_data: Vec<(MorId, usize, usize, MorId, MorId)> = Vec::new();
    for (i, (oi, e, f)) in obj_data.iter().enumerate() {
        for (j, (oj, e2, f2)) in obj_data.iter().enumerate() {
            for alpha in e_cat.hom(e, e2) {
                let palpha = p.morphism_map.get(alpha).unwrap();
                let y = c_cat.tgt(f).unwrap().clone();
                let y2 = c_cat.tgt(f2).unwrap().clone();
                for beta in c_cat.hom(&y, &y2) {
                    let lhs = c_cat.composite(f2, palpha);
                    let rhs = c_cat.composite(beta, f);
                    if lhs.is_some() && lhs == rhs {
                        let name = mor_name(alpha, beta);
                        morphisms.push(MorInfo {
                            id: name.clone(),
                            src: oi.clone(),
                            tgt: oj.clone(),
                        });
                        mor_data.push((name, i, j, alpha.clone(), beta.clone()));
                        let _ = (e2, f2);
                    }
                }
            }
        }
    }

    let identity: BTreeMap<ObjId, MorId> = obj_data
        .iter()
        .map(|(name, e, f)| {
            let ide = e_cat.identity.get(e).unwrap();
            let y = c_cat.tgt(f).unwrap();
            let idy = c_cat.identity.get(y).unwrap();
            (name.clone(), mor_name(ide, idy))
        })
        .collect();

    let mut compose = BTreeMap::new();
    for (n1, i1, j1, a1, b1) in &mor_data {
        for (n2, i2, _j2, a2, b2) in &mor_data {
            if j1 != i2 {
                continue;
            }
            let a = e_cat.composite(a2, a1).expect("composable first components");
            let b = c_cat.composite(b2, b1).expect("composable second components");
            compose.insert((n2.clone(), n1.clone()), mor_name(a, b));
            let _ = i1;
        }
    }

    let total = FinCategory::new(objects, morphisms, identity, compose);

    let projection = FinFunctor::new(
        total.clone(),
        c_cat.clone(),
        obj_data
            .iter()
            .map(|(name, _, f)| (name.clone(), c_cat.tgt(f).unwrap().clone()))
            .collect(),
        mor_data
            .iter()
            .map(|(name, _, _, _, b)| (name.clone(), b.clone()))
            .collect(),
    );

    let unit = FinFunctor::new(
        e_cat.clone(),
        total.clone(),
        e_cat
            .objects
            .iter()
            .map(|e| {
                let pe = p.object_map.get(e).unwrap();
                (e.clone(), obj_name(e, c_cat.identity.get(pe).unwrap()))
            })
            .collect(),
        e_cat
            .morphisms
            .iter()
            .map(|m| {
                (
                    m.id.clone(),
                    mor_name(&m.id, p.morphism_map.get(&m.id).unwrap()),
                )
            })
            .collect(),
    );

    FreeCocart { total, projection, unit }
}

/// An adjunction witness: `left ⊣ right` with unit and counit and verified
/// triangle identities plus the hom-set bijection.
pub struct Adjoint {
    pub left: FinFunctor,
    pub unit: NatTransf,
    pub counit: NatTransf,
}

/// Exhaustive search for a left adjoint to `g: D -> C`. Returns the first
/// candidate (in enumeration order) passing the full universal property.
/// Intended for desk scale; refuses inputs beyond 30 objects on either side.
pub fn find_left_adjoint(g: &FinFunctor) -> Option<Adjoint> {
    assert!(
        g.source.objects.len() <= 30 && g.target.objects.len() <= 30,
        "find_left_adjoint is an exhaustive oracle; inputs capped at 30 objects"
    );
    let c_cat = &g.target;
    let d_cat = &g.source;
    for f in enumerate_functors(c_cat, d_cat) {
        let gf = crate::fincat::functor::compose_functors(g, &f);
        let idc = crate::fincat::functor::identity_functor(c_cat);
        for unit in nat_set(&idc, &gf) {
            if !hom_bijection_holds(&f, g, &unit) {
                continue;
            }
            let fg = crate::fincat::functor::compose_functors(&f, g);
            let idd = crate::fincat::functor::identity_functor(d_cat);
            for counit in nat_set(&fg, &idd) {
                if triangles_hold(&f, g, &unit, &counit) {
                    return Some(Adjoint { left: f, unit, counit });
                }
            }
        }
    }
    None
}

/// `Hom_D(F c, d) -> Hom_C(c, G d)`, `φ ↦ G(φ) ∘ η_c`, must be a bijection.
fn hom_bijection_holds(f: &FinFunctor, g: &FinFunctor, unit: &NatTransf) -> bool {
    let c_cat = &g.target;
    let d_cat = &g.source;
    for c in &c_cat.objects {
        for d in &d_cat.objects {
            let fc = f.object_map.get(c).unwrap();
            let gd = g.object_map.get(d).unwrap();
            let dom = d_cat.hom(fc, d);
            let cod = c_cat.hom(c, gd);
            if dom.len() != cod.len() {
                return false;
            }
            let eta = unit.components.get(c).unwrap();
            let mut image = BTreeSet::new();
            for phi in dom {
                let gphi = g.morphism_map.get(phi).unwrap();
                let Some(transposed) = c_cat.composite(gphi, eta) else { return false };
                image.insert(transposed.clone());
            }
            if image.len() != cod.len() {
                return false;
            }
        }
    }
    true
}

fn triangles_hold(f: &FinFunctor, g: &FinFunctor, unit: &NatTransf, counit: &NatTransf) -> bool {
    let c_cat = &g.target;
    let d_cat = &g.source;
    // (ε F) ∘ (F η) = id_F
    for c in &c_cat.objects {
        let fc = f.object_map.get(c).unwrap();
        let feta = f.morphism_map.get(unit.components.get(c).unwrap()).unwrap();
        let eps = counit.components.get(fc).unwrap();
        if d_cat.composite(eps, feta) != Some(d_cat.identity.get(fc).unwrap()) {
            return false;
        }
    }
    // (G ε) ∘ (η G) = id_G
    for d in &d_cat.objects {
        let gd = g.object_map.get(d).unwrap();
        let eta = unit.components.get(gd).unwrap();
        let geps = g.morphism_map.get(counit.components.get(d).unwrap()).unwrap();
        if c_cat.composite(geps, eta) != Some(c_cat.identity.get(gd).unwrap()) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::functor::{constant_functor, identity_functor};
    use crate::fincat::{discrete, linear, terminal, walking_iso};

    fn all_morphisms(c: &FinCategory) -> BTreeSet<MorId> {
        c.morphisms.iter().map(|m| m.id.clone()).collect()
    }

    fn identities_only(c: &FinCategory) -> BTreeSet<MorId> {
        c.identity.values().cloned().collect()
    }

    #[test]
    fn free_cocart_on_identity_of_arrow_has_three_objects() {
        let c = linear(1);
        let p = identity_functor(&c);
        let free = free_cocart_fibration(&p, &all_morphisms(&c));
        assert!(free.total.is_valid(), "{:?}", free.total.validate());
        assert_eq!(free.total.objects.len(), 3, "(0,id), (0,a01), (1,id)");
        assert!(free.projection.is_valid());
        assert!(free.unit.is_valid());
    }

    #[test]
    fn free_cocart_on_identity_class_recovers_the_source() {
        let c = linear(1);
        let p = identity_functor(&c);
        let free = free_cocart_fibration(&p, &identities_only(&c));
        assert_eq!(free.total.objects.len(), 2);
        assert!(free.total.is_valid());
        assert!(free.unit.is_fully_faithful());
    }

    #[test]
    fn free_cocart_result_has_cocartesian_lifts() {
        let c = linear(1);
        let p = identity_functor(&c);
        let free = free_cocart_fibration(&p, &all_morphisms(&c));
        assert!(
            has_cocartesian_lifts(&free.projection),
            "the free construction must produce a cocartesian fibration"
        );
    }

    #[test]
    fn identity_projection_has_lifts_but_discrete_over_arrow_does_not() {
        let c = linear(1);
        assert!(has_cocartesian_lifts(&identity_functor(&c)));
        let e = discrete(&["a", "b"]);
        let p = FinFunctor::new(
            e.clone(),
            c.clone(),
            [("a".into(), "0".into()), ("b".into(), "1".into())].into(),
            [("id_a".into(), "id_0".into()), ("id_b".into(), "id_1".into())].into(),
        );
        assert!(p.is_valid());
        assert!(!has_cocartesian_lifts(&p), "a01 has no lift at a");
    }

    #[test]
    fn left_adjoint_to_point_in_walking_iso_exists() {
        let g = constant_functor(&terminal(), &walking_iso(), &"x".into());
        let adj = find_left_adjoint(&g);
        assert!(adj.is_some(), "terminal -> walking iso at x is a right adjoint");
    }

    #[test]
    fn left_adjoint_to_point_in_discrete_pair_does_not_exist() {
        let g = constant_functor(&terminal(), &discrete(&["a", "b"]), &"a".into());
        assert!(find_left_adjoint(&g).is_none(), "b cannot reflect onto a");
    }
}
