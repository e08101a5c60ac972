//! Monads on finite categories: unit/multiplication data with exhaustive
//! componentwise law checks, Kleisli and Eilenberg–Moore constructions, and
//! promonads (monoids among correspondences) with the equivalence to
//! identity-on-objects functors.

pub mod em;
pub mod kleisli;
pub mod promonad;

use crate::fincat::functor::{compose_functors, identity_functor, FinFunctor, NatTransf};
use crate::fincat::{FinCategory, Violation};
use crate::ids::MorId;

/// A monad `(T, η, μ)` on a finite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monad {
    pub base: FinCategory,
    pub t: FinFunctor,
    /// Unit `η: id → T`, one component per object.
    pub unit: NatTransf,
    /// Multiplication `μ: T² → T`, one component per object.
    pub mult: NatTransf,
}

impl Monad {
    /// The component `η_x`.
    pub fn unit_at(&self, x: &crate::ids::ObjId) -> MorId {
        self.unit.components[x].clone()
    }

    /// The component `μ_x`.
    pub fn mult_at(&self, x: &crate::ids::ObjId) -> MorId {
        self.mult.components[x].clone()
    }
}

/// Exhaustive law check: functor and transformation well-formedness, then
/// the unit laws `μ ∘ ηT = id = μ ∘ Tη` and associativity
/// `μ ∘ Tμ = μ ∘ μT`, componentwise.
pub fn validate_monad(t: &Monad) -> Vec<Violation> {
    let mut out = Vec::new();
    if t.t.source != t.base || t.t.target != t.base {
        out.push(Violation::Structural(
            "endofunctor does not go from the base to itself".into(),
        ));
        return out;
    }
    out.extend(t.t.validate());
    let idf = identity_functor(&t.base);
    let tt = compose_functors(&t.t, &t.t);
    out.extend(t.unit.validate(&idf, &t.t));
    out.extend(t.mult.validate(&tt, &t.t));
    if !out.is_empty() {
        return out;
    }
    let c = &t.base;
    for x in &c.objects {
        let tx = t.t.obj_image(x);
        let mu = t.mult_at(x);
        let id_tx = c.ident(&tx);
        // μ_x ∘ η_{Tx} = id_{Tx}
        let left = c.comp(&mu, &t.unit_at(&tx));
        if left != id_tx {
            out.push(Violation::Axiom(format!(
                "unit law fails at {x}: mult after unit-at-T is {left}, not the identity"
            )));
        }
        // μ_x ∘ T(η_x) = id_{Tx}
        let right = c.comp(&mu, &t.t.mor_image(&t.unit_at(x)));
        if right != id_tx {
            out.push(Violation::Axiom(format!(
                "unit law fails at {x}: mult after T-of-unit is {right}, not the identity"
            )));
        }
        // μ_x ∘ T(μ_x) = μ_x ∘ μ_{Tx}
        let assoc_l = c.comp(&mu, &t.t.mor_image(&mu));
        let assoc_r = c.comp(&mu, &t.mult_at(&tx));
        if assoc_l != assoc_r {
            out.push(Violation::Axiom(format!(
                "associativity fails at {x}: {assoc_l} vs {assoc_r}"
            )));
        }
    }
    out
}

/// The identity monad on a category.
pub fn identity_monad(c: &FinCategory) -> Monad {
    let idf = identity_functor(c);
    let comps: std::collections::BTreeMap<_, _> = c
        .objects
        .iter()
        .map(|x| (x.clone(), c.ident(x)))
        .collect();
    Monad {
        base: c.clone(),
        t: idf,
        unit: NatTransf {
            components: comps.clone(),
        },
        mult: NatTransf { components: comps },
    }
}

/// The monad constant at a terminal object `z`: `Tx = z`, with unit the
/// unique map to `z` and multiplication the identity. Panics if `z` does
/// not receive exactly one morphism from every object.
pub fn constant_monad(c: &FinCategory, z: &crate::ids::ObjId) -> Monad {
    let mut object_map = std::collections::BTreeMap::new();
    let mut morphism_map = std::collections::BTreeMap::new();
    let mut unit = std::collections::BTreeMap::new();
    for x in &c.objects {
        object_map.insert(x.clone(), z.clone());
        let into: Vec<_> = c
            .morphisms
            .iter()
            .filter(|m| &m.src == x && &m.tgt == z)
            .collect();
        assert_eq!(into.len(), 1, "object {z} is not terminal (seen from {x})");
        unit.insert(x.clone(), into[0].id.clone());
    }
    for m in &c.morphisms {
        morphism_map.insert(m.id.clone(), c.ident(z));
    }
    let mult: std::collections::BTreeMap<_, _> = c
        .objects
        .iter()
        .map(|x| (x.clone(), c.ident(z)))
        .collect();
    Monad {
        base: c.clone(),
        t: FinFunctor {
            source: c.clone(),
            target: c.clone(),
            object_map,
            morphism_map,
        },
        unit: NatTransf { components: unit },
        mult: NatTransf { components: mult },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{bz2, linear, walking_iso};
    use crate::ids::ObjId;

    #[test]
    fn identity_monads_are_valid() {
        for c in [linear(2), bz2(), walking_iso()] {
            assert!(validate_monad(&identity_monad(&c)).is_empty());
        }
    }

    #[test]
    fn constant_monad_at_the_top_of_a_chain_is_valid() {
        let c = linear(1);
        let m = constant_monad(&c, &ObjId::from("1"));
        assert!(validate_monad(&m).is_empty());
    }

    #[test]
    fn broken_multiplication_is_reported() {
        // Redirect one multiplication component of the constant monad on
        // [1] to the wrong morphism.
        let c = linear(1);
        let mut m = constant_monad(&c, &ObjId::from("1"));
        m.mult
            .components
            .insert(ObjId::from("0"), MorId::from("a01"));
        assert!(!validate_monad(&m).is_empty());
        // A well-typed but unlawful multiplication on the two-element
        // group: s is natural for the identity endofunctor, but fails the
        // unit law.
        let mut g = identity_monad(&bz2());
        g.mult.components.insert(ObjId::from("x"), MorId::from("s"));
        assert!(validate_monad(&g)
            .iter()
            .any(|v| matches!(v, crate::fincat::Violation::Axiom(_))));
    }
}
