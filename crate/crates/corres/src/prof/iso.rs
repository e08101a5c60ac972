//! Isomorphism testing for parallel correspondences: exhaustive search for
//! an under/over-preserving, action-equivariant bijection, pruned by fiber
//! sizes. Instances at this scale are tiny, so the search is direct.

use super::{ProfMorphism, Profunctor};
use crate::ids::ElemId;
use std::collections::BTreeMap;

/// Finds an equivariant bijection `m -> n`, if one exists, as a
/// [`ProfMorphism`] that validates and is an isomorphism. Requires parallel
/// correspondences (same source and target categories).
pub fn find_prof_iso(m: &Profunctor, n: &Profunctor) -> Option<ProfMorphism> {
    if m.source != n.source || m.target != n.target {
        return None;
    }
    // Fiberwise cardinalities must agree.
    let mut fibers_m: BTreeMap<(&str, &str), Vec<&ElemId>> = BTreeMap::new();
    let mut fibers_n: BTreeMap<(&str, &str), Vec<&ElemId>> = BTreeMap::new();
    for e in &m.elements {
        fibers_m
            .entry((e.under.as_str(), e.over.as_str()))
            .or_default()
            .push(&e.id);
    }
    for e in &n.elements {
        fibers_n
            .entry((e.under.as_str(), e.over.as_str()))
            .or_default()
            .push(&e.id);
    }
    if fibers_m.len() != fibers_n.len() {
        return None;
    }
    for (k, v) in &fibers_m {
        if fibers_n.get(k).map(|w| w.len()) != Some(v.len()) {
            return None;
        }
    }
    let mut assignment: BTreeMap<ElemId, ElemId> = BTreeMap::new();
    let mut used: BTreeMap<ElemId, bool> =
        n.elements.iter().map(|e| (e.id.clone(), false)).collect();
    if search(m, n, 0, &mut assignment, &mut used) {
        let morphism = ProfMorphism::new(m.clone(), n.clone(), assignment);
        debug_assert!(morphism.validate().is_ok() && morphism.is_iso());
        Some(morphism)
    } else {
        None
    }
}

pub fn prof_isomorphic(m: &Profunctor, n: &Profunctor) -> bool {
    find_prof_iso(m, n).is_some()
}

fn search(
    m: &Profunctor,
    n: &Profunctor,
    next: usize,
    assignment: &mut BTreeMap<ElemId, ElemId>,
    used: &mut BTreeMap<ElemId, bool>,
) -> bool {
    if next == m.elements.len() {
        return true;
    }
    let e = &m.elements[next];
    let candidates: Vec<ElemId> = n
        .elements
        .iter()
        .filter(|f| f.under == e.under && f.over == e.over && !used[&f.id])
        .map(|f| f.id.clone())
        .collect();
    for cand in candidates {
        assignment.insert(e.id.clone(), cand.clone());
        used.insert(cand.clone(), true);
        if consistent_so_far(m, n, &e.id, assignment) && search(m, n, next + 1, assignment, used) {
            return true;
        }
        assignment.remove(&e.id);
        used.insert(cand, false);
    }
    false
}

/// Checks every action constraint touching the newly assigned element whose
/// other endpoint is already assigned.
fn consistent_so_far(
    m: &Profunctor,
    n: &Profunctor,
    just: &ElemId,
    assignment: &BTreeMap<ElemId, ElemId>,
) -> bool {
    let img = &assignment[just];
    let info = m.elem(just).unwrap();
    for f in m.source.morphisms_into(&info.under) {
        let fe = m.left_act(&f.id, just);
        if let Some(fe_img) = assignment.get(&fe) {
            if &n.left_act(&f.id, img) != fe_img {
                return false;
            }
        }
    }
    for g in m.target.morphisms_out_of(&info.over) {
        let eg = m.right_act(just, &g.id);
        if let Some(eg_img) = assignment.get(&eg) {
            if &n.right_act(img, &g.id) != eg_img {
                return false;
            }
        }
    }
    // Constraints where `just` is the value of an action on an earlier
    // element.
    for (src, tgt) in assignment {
        if src == just {
            continue;
        }
        let src_info = m.elem(src).unwrap();
        for f in m.source.morphisms_into(&src_info.under) {
            if &m.left_act(&f.id, src) == just && &n.left_act(&f.id, tgt) != img {
                return false;
            }
        }
        for g in m.target.morphisms_out_of(&src_info.over) {
            if &m.right_act(src, &g.id) == just && &n.right_act(tgt, &g.id) != img {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{bz2, linear};
    use crate::prof::{identity_prof, Profunctor};

    #[test]
    fn identity_prof_is_isomorphic_to_itself() {
        let p = identity_prof(&linear(1));
        let iso = find_prof_iso(&p, &p).expect("self-isomorphism");
        assert!(iso.validate().is_ok());
        assert!(iso.is_iso());
    }

    #[test]
    fn different_fiber_sizes_are_rejected_fast() {
        let p = identity_prof(&linear(1));
        let q = Profunctor::empty(linear(1), linear(1));
        assert!(!prof_isomorphic(&p, &q));
    }

    #[test]
    fn equivariance_matters_not_just_cardinality() {
        // Two correspondences over the group of order two with the same
        // fiber sizes: the regular one (action by multiplication) and the
        // trivial-action one. No equivariant bijection exists because the
        // trivial action fixes elements while multiplication by s does not.
        let c = bz2();
        let regular = identity_prof(&c);
        let mut trivial = regular.clone();
        let keys: Vec<_> = trivial.left.keys().cloned().collect();
        for (f, e) in keys {
            if !c.is_identity(&f) {
                trivial.left.insert((f, e.clone()), e);
            }
        }
        // The trivial left action still commutes with the right action only
        // if we also trivialize the right action.
        let rkeys: Vec<_> = trivial.right.keys().cloned().collect();
        for (e, g) in rkeys {
            if !c.is_identity(&g) {
                trivial.right.insert((e.clone(), g), e);
            }
        }
        assert!(trivial.is_valid(), "trivialized actions still form a bimodule");
        assert!(!prof_isomorphic(&regular, &trivial));
    }
}
