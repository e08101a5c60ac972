//! Mates of squares with companion verticals. A square consists of a top
//! correspondence `M: C ↛ D`, verticals given by functors `f: C -> E` and
//! `g: D -> A`, and a bottom correspondence `N: E ↛ A`. A filling
//! `α: M ; g_! -> f_! ; N` transposes to its mate
//! `α̃: M -> (f_! ; N) ; g^*`, and the transposition is a bijection — both
//! directions are implemented and mutually inverse.

use super::companion::{companion_data, conjoint_data, TaggedProf};
use super::compose::{compose_prof, ComposedProf};
use super::{ProfMorphism, Profunctor};
use crate::fincat::functor::FinFunctor;
use crate::ids::ElemId;
use std::collections::BTreeMap;

/// The frame of a square: top and bottom correspondences with companion
/// verticals.
#[derive(Clone, Debug)]
pub struct MateSquare {
    pub top: Profunctor,    // M: C ↛ D
    pub left: FinFunctor,   // f: C -> E
    pub right: FinFunctor,  // g: D -> A
    pub bottom: Profunctor, // N: E ↛ A
}

/// All composites a mate computation needs, built once.
pub struct MateFrame {
    pub square: MateSquare,
    pub g_companion: TaggedProf,
    pub g_conjoint: TaggedProf,
    /// `M ; g_!` — the source of a filling.
    pub top_then_right: ComposedProf,
    /// `f_! ; N` — the target of a filling.
    pub left_then_bottom: ComposedProf,
    /// `(f_! ; N) ; g^*` — the target of a mate.
    pub transposed: ComposedProf,
}

impl MateFrame {
    pub fn new(square: MateSquare) -> Self {
        assert_eq!(square.top.source, square.left.source, "top and left legs disagree on C");
        assert_eq!(square.top.target, square.right.source, "top and right legs disagree on D");
        assert_eq!(square.bottom.source, square.left.target, "bottom and left legs disagree on E");
        assert_eq!(square.bottom.target, square.right.target, "bottom and right legs disagree on A");
        let f_companion = companion_data(&square.left);
        let g_companion = companion_data(&square.right);
        let g_conjoint = conjoint_data(&square.right);
        let top_then_right = compose_prof(&square.top, &g_companion.prof);
        let left_then_bottom = compose_prof(&f_companion.prof, &square.bottom);
        let transposed = compose_prof(&left_then_bottom.prof, &g_conjoint.prof);
        MateFrame {
            square,
            g_companion,
            g_conjoint,
            top_then_right,
            left_then_bottom,
            transposed,
        }
    }

    /// Transposes a filling `α: M ; g_! -> f_! ; N` to its mate
    /// `α̃: M -> (f_! ; N) ; g^*`: an element `m` of `M` over `d` pairs with
    /// the identity companion element at `d`, goes through `α`, and picks up
    /// the identity conjoint element at `d`.
    pub fn mate(&self, alpha: &ProfMorphism) -> ProfMorphism {
        assert_eq!(alpha.source, self.top_then_right.prof, "filling must start at M ; g_!");
        assert_eq!(alpha.target, self.left_then_bottom.prof, "filling must land in f_! ; N");
        let m = &self.square.top;
        let g = &self.square.right;
        let a_cat = &g.target;
        let map: BTreeMap<ElemId, ElemId> = m
            .elements
            .iter()
            .map(|e| {
                let d = &e.over;
                let id_gd = a_cat.ident(&g.obj_image(d));
                let unit_elem = self.g_companion.id_for(d, &id_gd);
                let through = alpha.apply(&self.top_then_right.class(&e.id, &unit_elem));
                let counit_elem = self.g_conjoint.id_for(d, &id_gd);
                (e.id.clone(), self.transposed.class(&through, &counit_elem))
            })
            .collect();
        ProfMorphism::new(m.clone(), self.transposed.prof.clone(), map)
    }

    /// Inverse transposition: from `β: M -> (f_! ; N) ; g^*`, rebuild the
    /// filling on a class `[(m, (d, φ: g(d) -> a))]` by pushing `β(m)`'s
    /// conjoint leg `ψ` into its `f_! ; N` part along `φ ∘ ψ`.
    pub fn mate_inv(&self, beta: &ProfMorphism) -> ProfMorphism {
        assert_eq!(beta.source, self.square.top, "mate must start at M");
        assert_eq!(beta.target, self.transposed.prof, "mate must land in (f_! ; N) ; g^*");
        let a_cat = &self.square.right.target;
        let map: BTreeMap<ElemId, ElemId> = self
            .top_then_right
            .prof
            .elements
            .iter()
            .map(|e| {
                let (m_elem, comp_elem) = &self.top_then_right.repr_of[&e.id];
                let (_, phi) = &self.g_companion.parts[comp_elem];
                let b = beta.apply(m_elem);
                let (w, conj_elem) = &self.transposed.repr_of[&b];
                let (_, psi) = &self.g_conjoint.parts[conj_elem];
                let along = a_cat.comp(phi, psi);
                (
                    e.id.clone(),
                    self.left_then_bottom.prof.right_act(w, &along),
                )
            })
            .collect();
        ProfMorphism::new(
            self.top_then_right.prof.clone(),
            self.left_then_bottom.prof.clone(),
            map,
        )
    }

    /// Enumerates all fillings of the square.
    pub fn fillings(&self) -> Vec<ProfMorphism> {
        super::nats::prof_nats(&self.left_then_bottom.prof, &self.top_then_right.prof)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::functor::identity_functor;
    use crate::fincat::{bz2, linear, walking_iso};
    use crate::prof::identity_prof;
    use crate::prof::nats::prof_nats;

    fn identity_square(c: &crate::fincat::FinCategory) -> MateFrame {
        MateFrame::new(MateSquare {
            top: identity_prof(c),
            left: identity_functor(c),
            right: identity_functor(c),
            bottom: identity_prof(c),
        })
    }

    #[test]
    fn mates_are_valid_and_roundtrip_on_identity_squares() {
        for c in [linear(1), walking_iso(), bz2()] {
            let frame = identity_square(&c);
            let fillings = frame.fillings();
            assert!(!fillings.is_empty());
            for alpha in fillings {
                let beta = frame.mate(&alpha);
                assert!(beta.validate().is_ok(), "{:?}", beta.validate());
                let back = frame.mate_inv(&beta);
                assert_eq!(back, alpha, "transposition must be involutive");
            }
        }
    }

    #[test]
    fn mate_of_distinct_fillings_is_distinct() {
        // Transposition is a bijection, so distinct fillings get distinct
        // mates.
        let frame = identity_square(&bz2());
        let fillings = frame.fillings();
        let mates: Vec<ProfMorphism> = fillings.iter().map(|a| frame.mate(a)).collect();
        for i in 0..mates.len() {
            for j in (i + 1)..mates.len() {
                assert_ne!(mates[i], mates[j]);
            }
        }
    }

    #[test]
    fn mates_roundtrip_on_a_nonidentity_square() {
        // Square: top = identity on [1], verticals the unique functor
        // [1] -> *, bottom = identity on *.
        let c = linear(1);
        let t = crate::fincat::terminal();
        let collapse = crate::fincat::functor::constant_functor(&c, &t, &t.objects[0]);
        let frame = MateFrame::new(MateSquare {
            top: identity_prof(&c),
            left: collapse.clone(),
            right: collapse,
            bottom: identity_prof(&t),
        });
        let fillings = frame.fillings();
        assert!(!fillings.is_empty());
        for alpha in &fillings {
            let beta = frame.mate(alpha);
            assert!(beta.validate().is_ok());
            assert_eq!(frame.mate_inv(&beta), *alpha);
        }
        // And in the other direction: every mate candidate comes from a
        // filling.
        let mates: Vec<_> = fillings.iter().map(|a| frame.mate(a)).collect();
        let all_mates = prof_nats(&frame.transposed.prof, &frame.square.top);
        assert_eq!(mates.len(), all_mates.len());
    }
}
