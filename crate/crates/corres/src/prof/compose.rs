//! Composition of correspondences by coend: elements of the composite are
//! equivalence classes of middle-matching pairs under the zig-zag relation
//! `(x·g, y) ~ (x, g·y)`, closed by union-find. The canonical coherence
//! cells — unitors, associator, and whiskering of morphisms — are built
//! here as explicit element maps.

use super::{ElemInfo, ProfMorphism, Profunctor};
use crate::ids::ElemId;
use std::collections::BTreeMap;

/// Union-find over `0..n` with path halving; smallest index becomes the
/// exemplar only after the final relabeling pass.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Attach the larger root under the smaller for determinism.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// A composite correspondence together with the quotient bookkeeping: which
/// class each middle-matching pair landed in, and the representative pair of
/// each class.
#[derive(Clone, Debug)]
pub struct ComposedProf {
    pub prof: Profunctor,
    /// Every valid pair `(x, y)` with `over(x) = under(y)` to its class.
    pub class_of: BTreeMap<(ElemId, ElemId), ElemId>,
    /// Each class to its least pair.
    pub repr_of: BTreeMap<ElemId, (ElemId, ElemId)>,
}

impl ComposedProf {
    pub fn class(&self, x: &ElemId, y: &ElemId) -> ElemId {
        self.class_of
            .get(&(x.clone(), y.clone()))
            .unwrap_or_else(|| panic!("pair ({x}, {y}) is not middle-matching"))
            .clone()
    }
}

/// Coend composition `m: C ↛ D` then `n: D ↛ E`, yielding `C ↛ E`.
pub fn compose_prof(m: &Profunctor, n: &Profunctor) -> ComposedProf {
    assert_eq!(
        m.target, n.source,
        "compose_prof: middle categories differ"
    );
    let d = &m.target;
    // All middle-matching pairs, in canonical order.
    let mut pairs: Vec<(ElemId, ElemId)> = Vec::new();
    for x in &m.elements {
        for y in &n.elements {
            if x.over == y.under {
                pairs.push((x.id.clone(), y.id.clone()));
            }
        }
    }
    pairs.sort();
    let index: BTreeMap<&(ElemId, ElemId), usize> =
        pairs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut uf = UnionFind::new(pairs.len());
    // Zig-zag generators: for x over d, g: d -> d', y' under d', the pairs
    // (x·g, y') and (x, g·y') coincide in the coend.
    for x in &m.elements {
        for g in d.morphisms_out_of(&x.over) {
            let xg = m.right_act(&x.id, &g.id);
            for yp in &n.elements {
                if yp.under != g.tgt {
                    continue;
                }
                let gy = n.left_act(&g.id, &yp.id);
                let a = index[&(xg.clone(), yp.id.clone())];
                let b = index[&(x.id.clone(), gy)];
                uf.union(a, b);
            }
        }
    }
    // Pick the least pair of each class as representative and name classes
    // by it.
    let mut root_repr: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..pairs.len() {
        let r = uf.find(i);
        let slot = root_repr.entry(r).or_insert(i);
        if pairs[i] < pairs[*slot] {
            *slot = i;
        }
    }
    let class_id = |repr: &(ElemId, ElemId)| ElemId::new(format!("({},{})", repr.0, repr.1));
    let mut class_of: BTreeMap<(ElemId, ElemId), ElemId> = BTreeMap::new();
    let mut repr_of: BTreeMap<ElemId, (ElemId, ElemId)> = BTreeMap::new();
    let mut elements: Vec<ElemInfo> = Vec::new();
    for i in 0..pairs.len() {
        let repr = &pairs[root_repr[&uf.find(i)]];
        class_of.insert(pairs[i].clone(), class_id(repr));
    }
    for (&_root, &ri) in &root_repr {
        let repr = &pairs[ri];
        let cid = class_id(repr);
        elements.push(ElemInfo::new(
            cid.as_str(),
            m.under(&repr.0).as_str(),
            n.over(&repr.1).as_str(),
        ));
        repr_of.insert(cid, repr.clone());
    }
    // Induced actions via representatives.
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for e in &elements {
        let (x, y) = repr_of[&e.id].clone();
        for f in m.source.morphisms_into(&e.under) {
            let fx = m.left_act(&f.id, &x);
            left.insert(
                (f.id.clone(), e.id.clone()),
                class_of[&(fx, y.clone())].clone(),
            );
        }
        for g in n.target.morphisms_out_of(&e.over) {
            let yg = n.right_act(&y, &g.id);
            right.insert(
                (e.id.clone(), g.id.clone()),
                class_of[&(x.clone(), yg)].clone(),
            );
        }
    }
    let prof = Profunctor::new(m.source.clone(), n.target.clone(), elements, left, right);
    ComposedProf { prof, class_of, repr_of }
}

/// Left unitor `identity_prof(C) ; M -> M`: a class `[(u, x)]` acts the
/// morphism element `u` on `x`.
pub fn left_unitor(m: &Profunctor) -> ProfMorphism {
    let id_c = super::identity_prof(&m.source);
    let composed = compose_prof(&id_c, m);
    let map = composed
        .prof
        .elements
        .iter()
        .map(|e| {
            let (u, x) = &composed.repr_of[&e.id];
            let u_mor = crate::ids::MorId::new(u.as_str());
            (e.id.clone(), m.left_act(&u_mor, x))
        })
        .collect();
    ProfMorphism::new(composed.prof, m.clone(), map)
}

/// Inverse of the left unitor: `x` becomes the class of `(id, x)`.
pub fn left_unitor_inv(m: &Profunctor) -> ProfMorphism {
    left_unitor(m).inverse()
}

/// Right unitor `M ; identity_prof(D) -> M`.
pub fn right_unitor(m: &Profunctor) -> ProfMorphism {
    let id_d = super::identity_prof(&m.target);
    let composed = compose_prof(m, &id_d);
    let map = composed
        .prof
        .elements
        .iter()
        .map(|e| {
            let (x, v) = &composed.repr_of[&e.id];
            let v_mor = crate::ids::MorId::new(v.as_str());
            (e.id.clone(), m.right_act(x, &v_mor))
        })
        .collect();
    ProfMorphism::new(composed.prof, m.clone(), map)
}

pub fn right_unitor_inv(m: &Profunctor) -> ProfMorphism {
    right_unitor(m).inverse()
}

/// Associator `(M ; N) ; P -> M ; (N ; P)` by re-bracketing representative
/// pairs. Always an isomorphism.
pub fn associator(m: &Profunctor, n: &Profunctor, p: &Profunctor) -> ProfMorphism {
    let mn = compose_prof(m, n);
    let np = compose_prof(n, p);
    let lhs = compose_prof(&mn.prof, p);
    let rhs = compose_prof(m, &np.prof);
    let map = lhs
        .prof
        .elements
        .iter()
        .map(|e| {
            let (xy, z) = &lhs.repr_of[&e.id];
            let (x, y) = &mn.repr_of[xy];
            let yz = np.class(y, z);
            (e.id.clone(), rhs.class(x, &yz))
        })
        .collect();
    ProfMorphism::new(lhs.prof, rhs.prof, map)
}

pub fn associator_inv(m: &Profunctor, n: &Profunctor, p: &Profunctor) -> ProfMorphism {
    associator(m, n, p).inverse()
}

/// Whisker a morphism on the right by a correspondence: `α: M -> N` between
/// `A ↛ B` yields `M ; K -> N ; K` for `K: B ↛ C`.
pub fn whisker_right(alpha: &ProfMorphism, k: &Profunctor) -> ProfMorphism {
    let src = compose_prof(&alpha.source, k);
    let tgt = compose_prof(&alpha.target, k);
    let map = src
        .prof
        .elements
        .iter()
        .map(|e| {
            let (x, y) = &src.repr_of[&e.id];
            (e.id.clone(), tgt.class(&alpha.apply(x), y))
        })
        .collect();
    ProfMorphism::new(src.prof, tgt.prof, map)
}

/// Whisker a morphism on the left: `K: A ↛ B` and `α: M -> N` between
/// `B ↛ C` yield `K ; M -> K ; N`.
pub fn whisker_left(k: &Profunctor, alpha: &ProfMorphism) -> ProfMorphism {
    let src = compose_prof(k, &alpha.source);
    let tgt = compose_prof(k, &alpha.target);
    let map = src
        .prof
        .elements
        .iter()
        .map(|e| {
            let (x, y) = &src.repr_of[&e.id];
            (e.id.clone(), tgt.class(x, &alpha.apply(y)))
        })
        .collect();
    ProfMorphism::new(src.prof, tgt.prof, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{linear, walking_iso};
    use crate::prof::identity_prof;
    use crate::prof::iso::find_prof_iso;

    #[test]
    fn self_composition_of_walking_arrow_identity_has_three_classes() {
        let c = linear(1);
        let id = identity_prof(&c);
        let composed = compose_prof(&id, &id);
        assert!(composed.prof.is_valid());
        assert_eq!(composed.prof.elements.len(), 3);
    }

    #[test]
    fn unit_laws_hold_with_constructed_witnesses() {
        for c in [linear(1), walking_iso()] {
            let m = identity_prof(&c);
            for cell in [left_unitor(&m), right_unitor(&m)] {
                assert!(cell.validate().is_ok(), "{:?}", cell.validate());
                assert!(cell.is_iso());
            }
        }
    }

    #[test]
    fn unitors_compose_with_their_inverses_to_identities() {
        let m = identity_prof(&walking_iso());
        let lu = left_unitor(&m);
        assert_eq!(lu.inverse().then(&lu), ProfMorphism::identity(&m));
        let ru = right_unitor(&m);
        assert_eq!(ru.inverse().then(&ru), ProfMorphism::identity(&m));
    }

    #[test]
    fn associator_is_a_valid_isomorphism() {
        let c = linear(1);
        let m = identity_prof(&c);
        let a = associator(&m, &m, &m);
        assert!(a.validate().is_ok(), "{:?}", a.validate());
        assert!(a.is_iso());
        let back = associator_inv(&m, &m, &m);
        assert_eq!(a.then(&back), ProfMorphism::identity(&a.source));
    }

    #[test]
    fn composite_with_identity_is_isomorphic_to_the_factor() {
        let c = linear(2);
        let m = identity_prof(&c);
        let composed = compose_prof(&identity_prof(&c), &m);
        assert!(find_prof_iso(&composed.prof, &m).is_some());
    }
}
