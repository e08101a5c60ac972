//! Correspondences between finite categories: two-sided bimodules of finite
//! sets, given by total action tables, together with their morphisms.
//!
//! A `Profunctor` from `C` to `D` assigns to each pair (object of `C`,
//! object of `D`) a finite set of elements; morphisms of `C` act on the
//! left (mapping an element under `c` along `f: c' -> c` to one under `c'`),
//! morphisms of `D` act on the right. Both actions are unital, associative,
//! and commute with each other; `validate` checks all of this exhaustively.

pub mod collage;
pub mod companion;
pub mod compose;
pub mod iso;
pub mod mate;
pub mod module;
pub mod monadicity;
pub mod nats;
pub mod span;

use crate::fincat::{FinCategory, Violation};
use crate::ids::{ElemId, MorId, ObjId};
use std::collections::BTreeMap;

/// One heteromorphism: an element sitting under an object of the source
/// category and over an object of the target category.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ElemInfo {
    pub id: ElemId,
    pub under: ObjId,
    pub over: ObjId,
}

impl ElemInfo {
    pub fn new(id: impl Into<ElemId>, under: impl Into<ObjId>, over: impl Into<ObjId>) -> Self {
        ElemInfo { id: id.into(), under: under.into(), over: over.into() }
    }
}

/// A correspondence `C ↛ D` with total left/right action tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Profunctor {
    pub source: FinCategory,
    pub target: FinCategory,
    pub elements: Vec<ElemInfo>,
    /// `(f: c' -> under(e), e) -> f·e`, with `under(f·e) = c'`.
    pub left: BTreeMap<(MorId, ElemId), ElemId>,
    /// `(e, g: over(e) -> d') -> e·g`, with `over(e·g) = d'`.
    pub right: BTreeMap<(ElemId, MorId), ElemId>,
}

impl Profunctor {
    pub fn new(
        source: FinCategory,
        target: FinCategory,
        mut elements: Vec<ElemInfo>,
        left: BTreeMap<(MorId, ElemId), ElemId>,
        right: BTreeMap<(ElemId, MorId), ElemId>,
    ) -> Self {
        elements.sort();
        elements.dedup();
        Profunctor { source, target, elements, left, right }
    }

    /// The profunctor with no elements at all.
    pub fn empty(source: FinCategory, target: FinCategory) -> Self {
        Profunctor::new(source, target, Vec::new(), BTreeMap::new(), BTreeMap::new())
    }

    pub fn elem(&self, e: &ElemId) -> Option<&ElemInfo> {
        self.elements
            .binary_search_by(|probe| probe.id.cmp(e))
            .ok()
            .map(|i| &self.elements[i])
    }

    pub fn under(&self, e: &ElemId) -> &ObjId {
        &self.elem(e).unwrap_or_else(|| panic!("unknown element {e}")).under
    }

    pub fn over(&self, e: &ElemId) -> &ObjId {
        &self.elem(e).unwrap_or_else(|| panic!("unknown element {e}")).over
    }

    /// Elements in the fiber over the pair `(c, d)`.
    pub fn fiber(&self, c: &ObjId, d: &ObjId) -> Vec<&ElemInfo> {
        self.elements
            .iter()
            .filter(|e| &e.under == c && &e.over == d)
            .collect()
    }

    pub fn left_act(&self, f: &MorId, e: &ElemId) -> ElemId {
        self.left
            .get(&(f.clone(), e.clone()))
            .unwrap_or_else(|| panic!("left action undefined on ({f}, {e})"))
            .clone()
    }

    pub fn right_act(&self, e: &ElemId, g: &MorId) -> ElemId {
        self.right
            .get(&(e.clone(), g.clone()))
            .unwrap_or_else(|| panic!("right action undefined on ({e}, {g})"))
            .clone()
    }

    /// Exhaustive well-formedness and bimodule-law check.
    pub fn validate(&self) -> Result<(), Violation> {
        if let Some(v) = self.source.validate().into_iter().next() {
            return Err(v);
        }
        if let Some(v) = self.target.validate().into_iter().next() {
            return Err(v);
        }
        for w in self.elements.windows(2) {
            if w[0].id == w[1].id {
                return Err(Violation::Structural(format!("duplicate element id {}", w[0].id)));
            }
        }
        for e in &self.elements {
            if !self.source.objects.contains(&e.under) {
                return Err(Violation::Structural(format!(
                    "element {} sits under unknown object {}",
                    e.id, e.under
                )));
            }
            if !self.target.objects.contains(&e.over) {
                return Err(Violation::Structural(format!(
                    "element {} sits over unknown object {}",
                    e.id, e.over
                )));
            }
        }
        // The left table must be defined exactly on pairs (f, e) with
        // tgt(f) = under(e), and must retarget the under-object to src(f).
        for e in &self.elements {
            for f in &self.source.morphisms {
                let key = (f.id.clone(), e.id.clone());
                match self.left.get(&key) {
                    None if f.tgt == e.under => {
                        return Err(Violation::Structural(format!(
                            "left action missing on ({}, {})",
                            f.id, e.id
                        )))
                    }
                    Some(_) if f.tgt != e.under => {
                        return Err(Violation::Structural(format!(
                            "left action defined on non-matching pair ({}, {})",
                            f.id, e.id
                        )))
                    }
                    Some(v) => {
                        let info = self.elem(v).ok_or_else(|| {
                            Violation::Structural(format!("left action value {v} unknown"))
                        })?;
                        if info.under != f.src || info.over != e.over {
                            return Err(Violation::Structural(format!(
                                "left action ({}, {}) lands at ({}, {}), expected ({}, {})",
                                f.id, e.id, info.under, info.over, f.src, e.over
                            )));
                        }
                    }
                    None => {}
                }
            }
            for g in &self.target.morphisms {
                let key = (e.id.clone(), g.id.clone());
                match self.right.get(&key) {
                    None if g.src == e.over => {
                        return Err(Violation::Structural(format!(
                            "right action missing on ({}, {})",
                            e.id, g.id
                        )))
                    }
                    Some(_) if g.src != e.over => {
                        return Err(Violation::Structural(format!(
                            "right action defined on non-matching pair ({}, {})",
                            e.id, g.id
                        )))
                    }
                    Some(v) => {
                        let info = self.elem(v).ok_or_else(|| {
                            Violation::Structural(format!("right action value {v} unknown"))
                        })?;
                        if info.over != g.tgt || info.under != e.under {
                            return Err(Violation::Structural(format!(
                                "right action ({}, {}) lands at ({}, {}), expected ({}, {})",
                                e.id, g.id, info.under, info.over, e.under, g.tgt
                            )));
                        }
                    }
                    None => {}
                }
            }
        }
        // No stray keys referring to unknown morphisms or elements.
        for (f, e) in self.left.keys() {
            if self.source.mor(f).is_none() || self.elem(e).is_none() {
                return Err(Violation::Structural(format!("stray left key ({f}, {e})")));
            }
        }
        for (e, g) in self.right.keys() {
            if self.target.mor(g).is_none() || self.elem(e).is_none() {
                return Err(Violation::Structural(format!("stray right key ({e}, {g})")));
            }
        }
        // Bimodule laws.
        for e in &self.elements {
            let idu = self.source.ident(&e.under);
            if self.left_act(&idu, &e.id) != e.id {
                return Err(Violation::Axiom(format!("left identity action moves {}", e.id)));
            }
            let ido = self.target.ident(&e.over);
            if self.right_act(&e.id, &ido) != e.id {
                return Err(Violation::Axiom(format!("right identity action moves {}", e.id)));
            }
        }
        for e in &self.elements {
            // Associativity of the left action: for f: c' -> under(e) and
            // f2: c'' -> c', acting by f then f2 equals acting by f∘f2.
            for f in self.source.morphisms_into(&e.under) {
                let fe = self.left_act(&f.id, &e.id);
                for f2 in self.source.morphisms_into(&f.src) {
                    let two_step = self.left_act(&f2.id, &fe);
                    let composite = self.source.comp(&f.id, &f2.id);
                    if self.left_act(&composite, &e.id) != two_step {
                        return Err(Violation::Axiom(format!(
                            "left action not associative at ({}, {}, {})",
                            f2.id, f.id, e.id
                        )));
                    }
                }
                // Commutation with the right action.
                for g in self.target.morphisms_out_of(&e.over) {
                    let eg = self.right_act(&e.id, &g.id);
                    if self.left_act(&f.id, &eg) != self.right_act(&fe, &g.id) {
                        return Err(Violation::Axiom(format!(
                            "actions do not commute at ({}, {}, {})",
                            f.id, e.id, g.id
                        )));
                    }
                }
            }
            for g in self.target.morphisms_out_of(&e.over) {
                let eg = self.right_act(&e.id, &g.id);
                for g2 in self.target.morphisms_out_of(&g.tgt) {
                    let two_step = self.right_act(&eg, &g2.id);
                    let composite = self.target.comp(&g2.id, &g.id);
                    if self.right_act(&e.id, &composite) != two_step {
                        return Err(Violation::Axiom(format!(
                            "right action not associative at ({}, {}, {})",
                            e.id, g.id, g2.id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }
}

/// The identity correspondence on `C`: elements are the morphisms of `C`,
/// with both actions given by composition.
pub fn identity_prof(c: &FinCategory) -> Profunctor {
    let elements: Vec<ElemInfo> = c
        .morphisms
        .iter()
        .map(|m| ElemInfo::new(m.id.as_str(), m.src.as_str(), m.tgt.as_str()))
        .collect();
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for m in &c.morphisms {
        let e = ElemId::new(m.id.as_str());
        for f in c.morphisms_into(&m.src) {
            left.insert(
                (f.id.clone(), e.clone()),
                ElemId::new(c.comp(&m.id, &f.id).as_str()),
            );
        }
        for g in c.morphisms_out_of(&m.tgt) {
            right.insert(
                (e.clone(), g.id.clone()),
                ElemId::new(c.comp(&g.id, &m.id).as_str()),
            );
        }
    }
    Profunctor::new(c.clone(), c.clone(), elements, left, right)
}

/// A morphism of parallel correspondences: an under/over-preserving,
/// action-equivariant map of elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProfMorphism {
    pub source: Profunctor,
    pub target: Profunctor,
    pub map: BTreeMap<ElemId, ElemId>,
}

impl ProfMorphism {
    pub fn new(source: Profunctor, target: Profunctor, map: BTreeMap<ElemId, ElemId>) -> Self {
        ProfMorphism { source, target, map }
    }

    pub fn identity(m: &Profunctor) -> Self {
        let map = m.elements.iter().map(|e| (e.id.clone(), e.id.clone())).collect();
        ProfMorphism::new(m.clone(), m.clone(), map)
    }

    pub fn apply(&self, e: &ElemId) -> ElemId {
        self.map
            .get(e)
            .unwrap_or_else(|| panic!("morphism undefined on element {e}"))
            .clone()
    }

    /// `self` then `other`.
    pub fn then(&self, other: &ProfMorphism) -> ProfMorphism {
        assert_eq!(
            self.target, other.source,
            "composing profunctor morphisms whose middle correspondences differ"
        );
        let map = self
            .map
            .iter()
            .map(|(e, v)| (e.clone(), other.apply(v)))
            .collect();
        ProfMorphism::new(self.source.clone(), other.target.clone(), map)
    }

    pub fn validate(&self) -> Result<(), Violation> {
        if self.source.source != self.target.source || self.source.target != self.target.target {
            return Err(Violation::Structural(
                "profunctor morphism between non-parallel correspondences".into(),
            ));
        }
        for e in &self.source.elements {
            let v = self.map.get(&e.id).ok_or_else(|| {
                Violation::Structural(format!("morphism undefined on element {}", e.id))
            })?;
            let info = self
                .target
                .elem(v)
                .ok_or_else(|| Violation::Structural(format!("image {v} not in target")))?;
            if info.under != e.under || info.over != e.over {
                return Err(Violation::Structural(format!(
                    "morphism moves {} from ({}, {}) to ({}, {})",
                    e.id, e.under, e.over, info.under, info.over
                )));
            }
        }
        for k in self.map.keys() {
            if self.source.elem(k).is_none() {
                return Err(Violation::Structural(format!("stray key {k}")));
            }
        }
        for e in &self.source.elements {
            let img = self.apply(&e.id);
            for f in self.source.source.morphisms_into(&e.under) {
                let lhs = self.apply(&self.source.left_act(&f.id, &e.id));
                let rhs = self.target.left_act(&f.id, &img);
                if lhs != rhs {
                    return Err(Violation::Axiom(format!(
                        "not equivariant for left action of {} on {}",
                        f.id, e.id
                    )));
                }
            }
            for g in self.source.target.morphisms_out_of(&e.over) {
                let lhs = self.apply(&self.source.right_act(&e.id, &g.id));
                let rhs = self.target.right_act(&img, &g.id);
                if lhs != rhs {
                    return Err(Violation::Axiom(format!(
                        "not equivariant for right action of {} on {}",
                        g.id, e.id
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Bijective on elements (validity assumed).
    pub fn is_iso(&self) -> bool {
        if self.source.elements.len() != self.target.elements.len() {
            return false;
        }
        let mut seen: Vec<&ElemId> = self.map.values().collect();
        seen.sort();
        seen.dedup();
        seen.len() == self.target.elements.len()
    }

    pub fn inverse(&self) -> ProfMorphism {
        assert!(self.is_iso(), "inverting a non-bijective profunctor morphism");
        let map = self.map.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
        ProfMorphism::new(self.target.clone(), self.source.clone(), map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{bz2, linear, terminal, walking_iso};

    #[test]
    fn identity_prof_on_point_has_one_element() {
        let p = identity_prof(&terminal());
        assert!(p.is_valid());
        assert_eq!(p.elements.len(), 1);
    }

    #[test]
    fn identity_prof_on_walking_arrow_has_three_elements() {
        let p = identity_prof(&linear(1));
        assert!(p.is_valid());
        assert_eq!(p.elements.len(), 3);
    }

    #[test]
    fn empty_profunctor_is_valid() {
        let p = Profunctor::empty(linear(1), walking_iso());
        assert!(p.is_valid());
    }

    #[test]
    fn broken_action_typing_is_structural() {
        let c = terminal();
        let mut p = identity_prof(&c);
        // Remove the only action entries to leave the table partial.
        p.left.clear();
        assert!(matches!(p.validate(), Err(Violation::Structural(_))));
    }

    #[test]
    fn broken_identity_action_is_axiom() {
        let c = bz2();
        let mut p = identity_prof(&c);
        // Redirect the identity action on element "e" to "s": typing still
        // holds (both are endomorphisms of the unique object), the unit law
        // does not.
        let e = ElemId::new("e");
        let s = ElemId::new("s");
        let id = c.ident(&c.objects[0]);
        p.left.insert((id, e), s);
        assert!(matches!(p.validate(), Err(Violation::Axiom(_))));
    }

    #[test]
    fn identity_morphism_validates_and_composes() {
        let p = identity_prof(&linear(1));
        let id = ProfMorphism::identity(&p);
        assert!(id.is_valid());
        assert!(id.is_iso());
        assert_eq!(id.then(&id), id);
        assert_eq!(id.inverse(), id);
    }
}
