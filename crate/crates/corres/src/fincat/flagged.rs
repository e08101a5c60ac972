//! Flagged categories: a category together with a groupoid of designated
//! identifications mapping into it.
//!
//! The flag always lands in the core (functors preserve invertibility), but it
//! may designate fewer identifications than the core carries. A flagged
//! category is *complete* when the flag exhausts the core up to equivalence.

use crate::fincat::functor::{identity_functor, FinFunctor};
use crate::fincat::{FinCategory, Violation};
use crate::ids::MorId;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlaggedCategory {
    pub base: FinCategory,
    pub flag: FinCategory,
    pub flag_map: FinFunctor,
}

impl FlaggedCategory {
    pub fn new(base: FinCategory, flag: FinCategory, flag_map: FinFunctor) -> Self {
        FlaggedCategory { base, flag, flag_map }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        out.extend(self.base.validate());
        out.extend(self.flag.validate());
        if self.flag_map.source != self.flag {
            out.push(Violation::Structural("flag map source is not the flag".into()));
        }
        if self.flag_map.target != self.base {
            out.push(Violation::Structural("flag map target is not the base".into()));
        }
        if !out.is_empty() {
            return out;
        }
        out.extend(self.flag_map.validate());
        if !self.flag.is_groupoid() {
            out.push(Violation::Axiom("flag is not a groupoid".into()));
        }
        if !self.flag_map.is_surjective_on_objects() {
            out.push(Violation::Axiom("flag does not cover the objects of the base".into()));
        }
        for m in &self.flag.morphisms {
            let image = self.flag_map.morphism_map.get(&m.id).unwrap();
            if !self.base.is_invertible(image) {
                out.push(Violation::Axiom(format!(
                    "flag morphism {} maps to non-invertible {image}",
                    m.id
                )));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Complete means the flag is an equivalence onto the core: essentially
    /// surjective (guaranteed by object coverage) and fully faithful into the
    /// invertible part of the base.
    pub fn is_complete(&self) -> bool {
        if !self.is_valid() {
            return false;
        }
        let core = self.base.core();
        for x in &self.flag.objects {
            for y in &self.flag.objects {
                let fx = self.flag_map.object_map.get(x).unwrap();
                let fy = self.flag_map.object_map.get(y).unwrap();
                let dom = self.flag.hom(x, y);
                let cod = core.hom(fx, fy);
                if dom.len() != cod.len() {
                    return false;
                }
                let image: std::collections::BTreeSet<&MorId> = dom
                    .iter()
                    .map(|m| self.flag_map.morphism_map.get(m).unwrap())
                    .collect();
                if image.len() != dom.len() {
                    return false;
                }
                for c in cod {
                    if !image.contains(c) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The discrete flag: only identities are designated.
pub fn discrete_flag(base: &FinCategory) -> FlaggedCategory {
    let names: Vec<&str> = base.objects.iter().map(|o| o.as_str()).collect();
    let flag = crate::fincat::discrete(&names);
    let object_map = base.objects.iter().map(|x| (x.clone(), x.clone())).collect();
    let morphism_map = base
        .objects
        .iter()
        .map(|x| {
            (
                MorId::from(format!("id_{x}")),
                base.identity.get(x).unwrap().clone(),
            )
        })
        .collect();
    let flag_map = FinFunctor::new(flag.clone(), base.clone(), object_map, morphism_map);
    FlaggedCategory::new(base.clone(), flag, flag_map)
}

/// The core flag: every invertible morphism is designated. This is the
/// completion of any flag on the same base.
pub fn core_flag(base: &FinCategory) -> FlaggedCategory {
    let core = base.core();
    let mut flag_map = identity_functor(&core);
    flag_map.target = base.clone();
    FlaggedCategory::new(base.clone(), core, flag_map)
}

/// Flagged completion: replace the flag by the core. The base category is
/// untouched.
pub fn complete_flagged(fc: &FlaggedCategory) -> FlaggedCategory {
    core_flag(&fc.base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{discrete, linear, walking_iso};

    #[test]
    fn discrete_flag_on_poset_is_complete() {
        let fc = discrete_flag(&linear(2));
        assert!(fc.is_valid(), "{:?}", fc.validate());
        assert!(fc.is_complete(), "a poset has trivial core");
    }

    #[test]
    fn discrete_flag_on_walking_iso_is_incomplete() {
        let fc = discrete_flag(&walking_iso());
        assert!(fc.is_valid());
        assert!(!fc.is_complete(), "the flag misses the isomorphism");
    }

    #[test]
    fn completion_restores_completeness_and_keeps_base() {
        let fc = discrete_flag(&walking_iso());
        let done = complete_flagged(&fc);
        assert!(done.is_valid(), "{:?}", done.validate());
        assert!(done.is_complete());
        assert_eq!(done.base, fc.base, "completion must not change the base");
        assert_eq!(complete_flagged(&done), done, "completion is idempotent");
    }

    #[test]
    fn non_groupoid_flag_is_rejected() {
        let base = linear(1);
        let flag = linear(1);
        let flag_map = identity_functor(&base);
        let fc = FlaggedCategory::new(base, flag, flag_map);
        let report = fc.validate();
        assert!(
            report.iter().any(|v| matches!(v, Violation::Axiom(m) if m.contains("groupoid"))),
            "got {report:?}"
        );
    }

    #[test]
    fn flag_must_cover_objects() {
        let base = discrete(&["a", "b"]);
        let flag = discrete(&["a"]);
        let flag_map = FinFunctor::new(
            flag.clone(),
            base.clone(),
            [("a".into(), "a".into())].into(),
            [("id_a".into(), "id_a".into())].into(),
        );
        let fc = FlaggedCategory::new(base, flag, flag_map);
        assert!(
            fc.validate()
                .iter()
                .any(|v| matches!(v, Violation::Axiom(m) if m.contains("cover"))),
        );
    }
}
