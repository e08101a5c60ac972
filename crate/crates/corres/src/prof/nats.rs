//! Transformations between parallel correspondences, enumerated
//! exhaustively, and their cylinder encoding: a transformation with carrier
//! `N -> M` is the same data as a single correspondence over `C × [1]`
//! restricting to `M` at 0 and `N` at 1, with the crossing morphisms acting
//! by the carrier.

use super::{ElemInfo, ProfMorphism, Profunctor};
use crate::fincat::{linear, product, FinCategory};
use crate::ids::{ElemId, MorId, ObjId};
use std::collections::BTreeMap;

/// All transformations of the hom-direction `mor(m, n)`: their carriers are
/// equivariant element maps `n -> m`. (A transformation between companions
/// `f_! -> g_!` corresponds to a natural transformation `f -> g` precisely
/// with this orientation: its carrier sends `ψ: g(c) -> d` to `ψ ∘ α_c`.)
pub fn prof_nats(m: &Profunctor, n: &Profunctor) -> Vec<ProfMorphism> {
    assert_eq!(m.source, n.source, "prof_nats requires parallel correspondences");
    assert_eq!(m.target, n.target, "prof_nats requires parallel correspondences");
    let mut out = Vec::new();
    let mut assignment: BTreeMap<ElemId, ElemId> = BTreeMap::new();
    search(n, m, 0, &mut assignment, &mut out);
    out.into_iter()
        .map(|map| ProfMorphism::new(n.clone(), m.clone(), map))
        .collect()
}

fn search(
    src: &Profunctor,
    tgt: &Profunctor,
    next: usize,
    assignment: &mut BTreeMap<ElemId, ElemId>,
    out: &mut Vec<BTreeMap<ElemId, ElemId>>,
) {
    if next == src.elements.len() {
        out.push(assignment.clone());
        return;
    }
    let e = &src.elements[next];
    let candidates: Vec<ElemId> = tgt
        .elements
        .iter()
        .filter(|f| f.under == e.under && f.over == e.over)
        .map(|f| f.id.clone())
        .collect();
    for cand in candidates {
        assignment.insert(e.id.clone(), cand);
        if consistent(src, tgt, &e.id, assignment) {
            search(src, tgt, next + 1, assignment, out);
        }
        assignment.remove(&e.id);
    }
}

fn consistent(
    src: &Profunctor,
    tgt: &Profunctor,
    just: &ElemId,
    assignment: &BTreeMap<ElemId, ElemId>,
) -> bool {
    let img = &assignment[just];
    let info = src.elem(just).unwrap();
    for f in src.source.morphisms_into(&info.under) {
        let fe = src.left_act(&f.id, just);
        if let Some(fe_img) = assignment.get(&fe) {
            if &tgt.left_act(&f.id, img) != fe_img {
                return false;
            }
        }
    }
    for g in src.target.morphisms_out_of(&info.over) {
        let eg = src.right_act(just, &g.id);
        if let Some(eg_img) = assignment.get(&eg) {
            if &tgt.right_act(img, &g.id) != eg_img {
                return false;
            }
        }
    }
    for (s, t) in assignment {
        if s == just {
            continue;
        }
        let s_info = src.elem(s).unwrap();
        for f in src.source.morphisms_into(&s_info.under) {
            if &src.left_act(&f.id, s) == just && &tgt.left_act(&f.id, t) != img {
                return false;
            }
        }
        for g in src.target.morphisms_out_of(&s_info.over) {
            if &src.right_act(s, &g.id) == just && &tgt.right_act(t, &g.id) != img {
                return false;
            }
        }
    }
    true
}

/// The base category of a cylinder on `C`: the product `C × [1]`.
pub fn cylinder_base(c: &FinCategory) -> FinCategory {
    product(c, &linear(1))
}

fn end_obj(c_obj: &ObjId, end: usize) -> ObjId {
    ObjId::new(format!("({c_obj},{end})"))
}

fn end_mor(c_mor: &MorId, end: usize) -> MorId {
    MorId::new(format!("({c_mor},id_{end})"))
}

fn cross_mor(c_mor: &MorId) -> MorId {
    MorId::new(format!("({c_mor},a01)"))
}

fn tagged(end: usize, e: &ElemId) -> ElemId {
    ElemId::new(format!("{end}.{e}"))
}

/// Encodes a transformation (carrier `α: N -> M`) as a correspondence
/// `(C × [1]) ↛ D` whose 0-fiber is `M`, whose 1-fiber is `N`, and where a
/// crossing morphism `(w: c' -> c, 0 -> 1)` acts on `e ∈ N` by `w · α(e)`.
pub fn cylinder_encode(alpha: &ProfMorphism) -> Profunctor {
    let n = &alpha.source;
    let m = &alpha.target;
    let c = &m.source;
    let d = &m.target;
    let base = cylinder_base(c);
    let mut elements = Vec::new();
    let mut left: BTreeMap<(MorId, ElemId), ElemId> = BTreeMap::new();
    let mut right: BTreeMap<(ElemId, MorId), ElemId> = BTreeMap::new();
    for (end, prof) in [(0usize, m), (1usize, n)] {
        for e in &prof.elements {
            elements.push(ElemInfo::new(
                tagged(end, &e.id).as_str(),
                end_obj(&e.under, end).as_str(),
                e.over.as_str(),
            ));
            // Fiber actions.
            for f in c.morphisms_into(&e.under) {
                left.insert(
                    (end_mor(&f.id, end), tagged(end, &e.id)),
                    tagged(end, &prof.left_act(&f.id, &e.id)),
                );
            }
            for g in d.morphisms_out_of(&e.over) {
                right.insert(
                    (tagged(end, &e.id), g.id.clone()),
                    tagged(end, &prof.right_act(&e.id, &g.id)),
                );
            }
        }
    }
    // Crossing actions: (w, 0 -> 1) moves 1-fiber elements to the 0-fiber
    // through the carrier.
    for e in &n.elements {
        for w in c.morphisms_into(&e.under) {
            left.insert(
                (cross_mor(&w.id), tagged(1, &e.id)),
                tagged(0, &m.left_act(&w.id, &alpha.apply(&e.id))),
            );
        }
    }
    Profunctor::new(base, d.clone(), elements, left, right)
}

/// Reads a transformation back off a cylinder: requires the fibers to be
/// exactly `M` (tagged `0.`) and `N` (tagged `1.`); the carrier is the
/// action of the crossing identities `(id_c, 0 -> 1)`.
pub fn cylinder_decode(k: &Profunctor, m: &Profunctor, n: &Profunctor) -> ProfMorphism {
    let c = &m.source;
    let map: BTreeMap<ElemId, ElemId> = n
        .elements
        .iter()
        .map(|e| {
            let image = k.left_act(&cross_mor(&c.ident(&e.under)), &tagged(1, &e.id));
            let stripped = image
                .as_str()
                .strip_prefix("0.")
                .unwrap_or_else(|| panic!("crossing action left the 0-fiber: {image}"));
            (e.id.clone(), ElemId::new(stripped))
        })
        .collect();
    ProfMorphism::new(n.clone(), m.clone(), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::functor::{enumerate_functors, nat_set};
    use crate::fincat::{bz2, linear, walking_iso};
    use crate::prof::companion::companion;
    use crate::prof::identity_prof;

    #[test]
    fn nats_of_identity_contain_the_identity() {
        let m = identity_prof(&linear(1));
        let nats = prof_nats(&m, &m);
        assert!(nats.iter().any(|a| a == &ProfMorphism::identity(&m)));
        for a in &nats {
            assert!(a.validate().is_ok());
        }
    }

    #[test]
    fn companion_transformations_count_natural_transformations() {
        // Over C = bz2 and D = walking iso there are functor pairs with
        // interesting transformation sets; check the count identity on all
        // pairs.
        let pairs = [
            (linear(1), linear(1)),
            (bz2(), bz2()),
            (linear(1), walking_iso()),
        ];
        for (c, d) in pairs {
            let fs = enumerate_functors(&c, &d);
            for f in &fs {
                for g in &fs {
                    let nats = nat_set(f, g);
                    let profs = prof_nats(&companion(f), &companion(g));
                    assert_eq!(
                        nats.len(),
                        profs.len(),
                        "transformation counts differ for a functor pair"
                    );
                }
            }
        }
    }

    #[test]
    fn cylinder_roundtrip_on_all_small_transformations() {
        let m = identity_prof(&linear(1));
        for alpha in prof_nats(&m, &m) {
            let cyl = cylinder_encode(&alpha);
            assert!(cyl.validate().is_ok(), "{:?}", cyl.validate());
            let back = cylinder_decode(&cyl, &m, &m);
            assert_eq!(back, alpha);
        }
        let w = identity_prof(&bz2());
        for alpha in prof_nats(&w, &w) {
            let cyl = cylinder_encode(&alpha);
            assert!(cyl.validate().is_ok());
            assert_eq!(cylinder_decode(&cyl, &w, &w), alpha);
        }
    }

    #[test]
    fn encode_is_injective_into_cylinders() {
        let m = identity_prof(&bz2());
        let nats = prof_nats(&m, &m);
        let encodings: Vec<Profunctor> = nats.iter().map(cylinder_encode).collect();
        for i in 0..encodings.len() {
            for j in (i + 1)..encodings.len() {
                assert_ne!(encodings[i], encodings[j]);
            }
        }
    }
}
