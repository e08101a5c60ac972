//! Spans of finite sets as the discrete shadow of correspondences, and the
//! elements-span of an arbitrary correspondence.
//!
//! A span `A <- S -> B` between finite sets corresponds exactly to a
//! correspondence between the discrete categories on `A` and `B`; span
//! composition by pullback agrees with coend composition on that image.
//! For a general correspondence `M: C ↛ D`, the category of elements with
//! its two projections is a span of categories through which `M` factors:
//! `M ≅ (conjoint of p1) ; (companion of p2)`.

use super::companion::{companion_data, conjoint_data};
use super::compose::compose_prof;
use super::{ElemInfo, ProfMorphism, Profunctor};
use crate::fincat::functor::FinFunctor;
use crate::fincat::{discrete, FinCategory, MorInfo};
use crate::ids::{ElemId, MorId, ObjId};
use std::collections::BTreeMap;

/// A span of finite sets: legs from a common apex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Span {
    pub left_set: Vec<String>,
    pub right_set: Vec<String>,
    pub apex: Vec<String>,
    pub left_leg: BTreeMap<String, String>,
    pub right_leg: BTreeMap<String, String>,
}

impl Span {
    pub fn identity(set: &[String]) -> Span {
        Span {
            left_set: set.to_vec(),
            right_set: set.to_vec(),
            apex: set.to_vec(),
            left_leg: set.iter().map(|s| (s.clone(), s.clone())).collect(),
            right_leg: set.iter().map(|s| (s.clone(), s.clone())).collect(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.apex.iter().all(|s| {
            self.left_leg.get(s).is_some_and(|l| self.left_set.contains(l))
                && self.right_leg.get(s).is_some_and(|r| self.right_set.contains(r))
        }) && self.left_leg.len() == self.apex.len()
            && self.right_leg.len() == self.apex.len()
    }
}

/// Span composition by pullback: apex = pairs agreeing over the middle set.
pub fn compose_spans(s: &Span, t: &Span) -> Span {
    assert_eq!(s.right_set, t.left_set, "compose_spans: middle sets differ");
    let mut apex = Vec::new();
    let mut left_leg = BTreeMap::new();
    let mut right_leg = BTreeMap::new();
    for a in &s.apex {
        for b in &t.apex {
            if s.right_leg[a] == t.left_leg[b] {
                let name = format!("({a},{b})");
                apex.push(name.clone());
                left_leg.insert(name.clone(), s.left_leg[a].clone());
                right_leg.insert(name, t.right_leg[b].clone());
            }
        }
    }
    apex.sort();
    Span {
        left_set: s.left_set.clone(),
        right_set: t.right_set.clone(),
        apex,
        left_leg,
        right_leg,
    }
}

/// Reads a span as a correspondence between discrete categories.
pub fn prof_from_span(s: &Span) -> Profunctor {
    let left_names: Vec<&str> = s.left_set.iter().map(String::as_str).collect();
    let right_names: Vec<&str> = s.right_set.iter().map(String::as_str).collect();
    let c = discrete(&left_names);
    let d = discrete(&right_names);
    let elements: Vec<ElemInfo> = s
        .apex
        .iter()
        .map(|a| ElemInfo::new(a.as_str(), s.left_leg[a].as_str(), s.right_leg[a].as_str()))
        .collect();
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for a in &s.apex {
        let e = ElemId::new(a.as_str());
        left.insert(
            (MorId::new(format!("id_{}", s.left_leg[a])), e.clone()),
            e.clone(),
        );
        right.insert(
            (e.clone(), MorId::new(format!("id_{}", s.right_leg[a]))),
            e,
        );
    }
    Profunctor::new(c, d, elements, left, right)
}

/// Reads a correspondence between discrete categories back as a span.
/// Panics when either category has a non-identity morphism.
pub fn span_from_prof(m: &Profunctor) -> Span {
    assert!(
        m.source.morphisms.iter().all(|f| m.source.is_identity(&f.id))
            && m.target.morphisms.iter().all(|g| m.target.is_identity(&g.id)),
        "span_from_prof requires discrete categories"
    );
    Span {
        left_set: m.source.objects.iter().map(|o| o.as_str().to_string()).collect(),
        right_set: m.target.objects.iter().map(|o| o.as_str().to_string()).collect(),
        apex: m.elements.iter().map(|e| e.id.as_str().to_string()).collect(),
        left_leg: m
            .elements
            .iter()
            .map(|e| (e.id.as_str().to_string(), e.under.as_str().to_string()))
            .collect(),
        right_leg: m
            .elements
            .iter()
            .map(|e| (e.id.as_str().to_string(), e.over.as_str().to_string()))
            .collect(),
    }
}

/// The category of elements of a correspondence, with its projections: the
/// span of categories through which the correspondence factors.
#[derive(Clone, Debug)]
pub struct ElementsSpan {
    pub category: FinCategory,
    pub to_source: FinFunctor,
    pub to_target: FinFunctor,
    /// Constructed isomorphism `(conjoint of to_source) ; (companion of
    /// to_target) -> M`.
    pub factorization: ProfMorphism,
}

/// Builds the elements-span of `m`. Objects are the elements of `m`; a
/// morphism `e -> e'` is a pair `(u: under(e) -> under(e'),
/// v: over(e) -> over(e'))` with `e · v = u · e'`.
pub fn elements_span(m: &Profunctor) -> ElementsSpan {
    let c = &m.source;
    let d = &m.target;
    let obj = |e: &ElemId| ObjId::new(e.as_str());
    let mor_name = |u: &MorId, v: &MorId, e: &ElemId, ep: &ElemId| {
        MorId::new(format!("({u},{v}):{e}->{ep}"))
    };
    let mut objects = Vec::new();
    let mut morphisms = Vec::new();
    let mut identity = BTreeMap::new();
    // Record (e, e', u, v) for every morphism to drive composition.
    let mut table: Vec<(ElemId, ElemId, MorId, MorId)> = Vec::new();
    for e in &m.elements {
        objects.push(obj(&e.id));
    }
    for e in &m.elements {
        for ep in &m.elements {
            for u in c.hom(&e.under, &ep.under) {
                for v in d.hom(&e.over, &ep.over) {
                    if m.right_act(&e.id, v) == m.left_act(u, &ep.id) {
                        let id = mor_name(u, v, &e.id, &ep.id);
                        morphisms.push(MorInfo::new(
                            id.as_str(),
                            obj(&e.id).as_str(),
                            obj(&ep.id).as_str(),
                        ));
                        table.push((e.id.clone(), ep.id.clone(), u.clone(), v.clone()));
                        if e.id == ep.id && c.is_identity(u) && d.is_identity(v) {
                            identity.insert(obj(&e.id), id);
                        }
                    }
                }
            }
        }
    }
    let mut compose = BTreeMap::new();
    for (e1, e2, u1, v1) in &table {
        for (e2b, e3, u2, v2) in &table {
            if e2 != e2b {
                continue;
            }
            let u = c.comp(u2, u1);
            let v = d.comp(v2, v1);
            compose.insert(
                (mor_name(u2, v2, e2b, e3), mor_name(u1, v1, e1, e2)),
                mor_name(&u, &v, e1, e3),
            );
        }
    }
    let category = FinCategory::new(objects, morphisms, identity, compose);
    let to_source = FinFunctor::new(
        category.clone(),
        c.clone(),
        m.elements.iter().map(|e| (obj(&e.id), e.under.clone())).collect(),
        table
            .iter()
            .map(|(e, ep, u, v)| (mor_name(u, v, e, ep), u.clone()))
            .collect(),
    );
    let to_target = FinFunctor::new(
        category.clone(),
        d.clone(),
        m.elements.iter().map(|e| (obj(&e.id), e.over.clone())).collect(),
        table
            .iter()
            .map(|(e, ep, u, v)| (mor_name(u, v, e, ep), v.clone()))
            .collect(),
    );
    // Factorization: a class of ((ψ: c -> under(e), e), (e, φ: over(e) -> d))
    // goes to ψ · e · φ.
    let conj = conjoint_data(&to_source);
    let comp = companion_data(&to_target);
    let composite = compose_prof(&conj.prof, &comp.prof);
    let map: BTreeMap<ElemId, ElemId> = composite
        .prof
        .elements
        .iter()
        .map(|cl| {
            let (a, b) = &composite.repr_of[&cl.id];
            let (e_obj_a, psi) = &conj.parts[a];
            let (_e_obj_b, phi) = &comp.parts[b];
            let e = ElemId::new(e_obj_a.as_str());
            (
                cl.id.clone(),
                m.right_act(&m.left_act(psi, &e), phi),
            )
        })
        .collect();
    let factorization = ProfMorphism::new(composite.prof, m.clone(), map);
    ElementsSpan { category, to_source, to_target, factorization }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{linear, walking_iso};
    use crate::prof::identity_prof;
    use crate::prof::iso::prof_isomorphic;

    fn all_spans(left: &[String], right: &[String], apex_size: usize) -> Vec<Span> {
        // All spans with apex {p0..} and every assignment of legs.
        let apex: Vec<String> = (0..apex_size).map(|i| format!("p{i}")).collect();
        let mut out = vec![Span {
            left_set: left.to_vec(),
            right_set: right.to_vec(),
            apex: apex.clone(),
            left_leg: BTreeMap::new(),
            right_leg: BTreeMap::new(),
        }];
        for a in &apex {
            let mut next = Vec::new();
            for partial in out {
                for l in left {
                    for r in right {
                        let mut s = partial.clone();
                        s.left_leg.insert(a.clone(), l.clone());
                        s.right_leg.insert(a.clone(), r.clone());
                        next.push(s);
                    }
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn identity_span_gives_identity_profunctor() {
        let set: Vec<String> = vec!["a".into(), "b".into()];
        let s = Span::identity(&set);
        let p = prof_from_span(&s);
        assert!(p.is_valid());
        let names: Vec<&str> = set.iter().map(String::as_str).collect();
        assert!(prof_isomorphic(&p, &identity_prof(&discrete(&names))));
    }

    #[test]
    fn empty_span_gives_empty_profunctor() {
        let s = Span {
            left_set: vec!["a".into()],
            right_set: vec!["b".into()],
            apex: vec![],
            left_leg: BTreeMap::new(),
            right_leg: BTreeMap::new(),
        };
        let p = prof_from_span(&s);
        assert!(p.is_valid());
        assert!(p.elements.is_empty());
    }

    #[test]
    fn roundtrip_is_identity() {
        let set1: Vec<String> = vec!["a".into(), "b".into()];
        let set2: Vec<String> = vec!["u".into(), "v".into(), "w".into()];
        for s in all_spans(&set1, &set2, 2) {
            let back = span_from_prof(&prof_from_span(&s));
            assert_eq!(back.apex, s.apex);
            assert_eq!(back.left_leg, s.left_leg);
            assert_eq!(back.right_leg, s.right_leg);
        }
    }

    #[test]
    fn pullback_composition_agrees_with_coend_composition() {
        // All spans between sets of size <= 2 with apexes of size <= 2,
        // composed both ways.
        let a: Vec<String> = vec!["a0".into(), "a1".into()];
        let b: Vec<String> = vec!["b0".into(), "b1".into()];
        let c: Vec<String> = vec!["c0".into(), "c1".into()];
        for n in 0..=2usize {
            for m in 0..=2usize {
                for s in all_spans(&a, &b, n) {
                    for t in all_spans(&b, &c, m) {
                        let direct = prof_from_span(&compose_spans(&s, &t));
                        let via_coend =
                            compose_prof(&prof_from_span(&s), &prof_from_span(&t)).prof;
                        assert!(
                            prof_isomorphic(&direct, &via_coend),
                            "pullback and coend disagree"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn elements_span_factorization_holds() {
        for m in [
            identity_prof(&linear(1)),
            identity_prof(&walking_iso()),
            Profunctor::empty(linear(1), linear(1)),
        ] {
            let span = elements_span(&m);
            assert!(span.category.validate().is_empty(), "{:?}", span.category.validate());
            assert!(span.to_source.validate().is_empty());
            assert!(span.to_target.validate().is_empty());
            assert!(span.factorization.validate().is_ok(), "{:?}", span.factorization.validate());
            assert!(span.factorization.is_iso());
        }
    }
}
