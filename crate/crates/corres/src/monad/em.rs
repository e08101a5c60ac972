//! The Eilenberg–Moore category of a monad: objects are algebras
//! `(x, a: Tx → x)` satisfying the unit and multiplication laws, morphisms
//! are base morphisms commuting with the structure maps.

use super::Monad;
use crate::fincat::{FinCategory, MorInfo};
use crate::ids::{MorId, ObjId};
use std::collections::BTreeMap;

/// An algebra `(x, a: Tx → x)` for a monad.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EMAlgebra {
    pub object: ObjId,
    pub structure: MorId,
}

impl EMAlgebra {
    /// `a ∘ η_x = id_x` and `a ∘ Ta = a ∘ μ_x`.
    pub fn satisfies_laws(&self, t: &Monad) -> bool {
        let c = &t.base;
        let unit_ok = c.comp(&self.structure, &t.unit_at(&self.object)) == c.ident(&self.object);
        let assoc_l = c.comp(&self.structure, &t.t.mor_image(&self.structure));
        let assoc_r = c.comp(&self.structure, &t.mult_at(&self.object));
        unit_ok && assoc_l == assoc_r
    }
}

/// Enumerates all algebras by exhaustive structure-map search.
pub fn algebras(t: &Monad) -> Vec<EMAlgebra> {
    let c = &t.base;
    let mut out = Vec::new();
    for x in &c.objects {
        let tx = t.t.obj_image(x);
        for m in &c.morphisms {
            if m.src != tx || &m.tgt != x {
                continue;
            }
            let alg = EMAlgebra {
                object: x.clone(),
                structure: m.id.clone(),
            };
            if alg.satisfies_laws(t) {
                out.push(alg);
            }
        }
    }
    out
}

/// The Eilenberg–Moore category, with the table tying its objects back to
/// the algebras.
pub struct EMCategory {
    pub category: FinCategory,
    pub algebra_of: BTreeMap<ObjId, EMAlgebra>,
}

fn alg_name(a: &EMAlgebra) -> ObjId {
    ObjId::from(format!("alg({},{})", a.object, a.structure).as_str())
}

/// Builds the category of algebras and algebra morphisms.
pub fn em_category(t: &Monad) -> EMCategory {
    let c = &t.base;
    let algs = algebras(t);
    let objects: Vec<ObjId> = algs.iter().map(alg_name).collect();
    let algebra_of: BTreeMap<ObjId, EMAlgebra> = algs
        .iter()
        .map(|a| (alg_name(a), a.clone()))
        .collect();
    let mor_name = |h: &MorId, s: &ObjId, g: &ObjId| -> MorId {
        MorId::from(format!("em[{h}]{s}->{g}").as_str())
    };
    let mut morphisms = Vec::new();
    let mut identity = BTreeMap::new();
    let mut parts: BTreeMap<MorId, MorId> = BTreeMap::new();
    // A morphism (x,a) → (y,b) is h: x → y with h ∘ a = b ∘ T(h).
    for src in &algs {
        for tgt in &algs {
            for h in &c.morphisms {
                if h.src != src.object || h.tgt != tgt.object {
                    continue;
                }
                let lhs = c.comp(&h.id, &src.structure);
                let rhs = c.comp(&tgt.structure, &t.t.mor_image(&h.id));
                if lhs != rhs {
                    continue;
                }
                let (sn, tn) = (alg_name(src), alg_name(tgt));
                let id = mor_name(&h.id, &sn, &tn);
                morphisms.push(MorInfo {
                    id: id.clone(),
                    src: sn.clone(),
                    tgt: tn.clone(),
                });
                parts.insert(id.clone(), h.id.clone());
                if sn == tn && h.id == c.ident(&src.object) {
                    identity.insert(sn, id);
                }
            }
        }
    }
    let mut compose = BTreeMap::new();
    for g in &morphisms {
        for f in &morphisms {
            if f.tgt != g.src {
                continue;
            }
            let comp = c.comp(&parts[&g.id], &parts[&f.id]);
            compose.insert(
                (g.id.clone(), f.id.clone()),
                mor_name(&comp, &f.src, &g.tgt),
            );
        }
    }
    let category = FinCategory::new(objects, morphisms, identity, compose);
    EMCategory {
        category,
        algebra_of,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{bz2, find_category_iso, linear, walking_iso};
    use crate::monad::{constant_monad, identity_monad};

    #[test]
    fn em_of_identity_monad_is_the_base() {
        for c in [linear(1), bz2(), walking_iso()] {
            let em = em_category(&identity_monad(&c));
            assert!(em.category.validate().is_empty());
            assert!(find_category_iso(&em.category, &c).is_some());
        }
    }

    #[test]
    fn constant_monad_algebras_live_only_at_the_terminal_object() {
        // Hom(1, 0) is empty in [1], so no algebra exists at 0; at 1 the
        // identity is the unique structure map.
        let c = linear(1);
        let t = constant_monad(&c, &crate::ids::ObjId::from("1"));
        let algs = algebras(&t);
        assert_eq!(algs.len(), 1);
        assert_eq!(algs[0].object.as_str(), "1");
        let em = em_category(&t);
        assert!(em.category.validate().is_empty());
        assert_eq!(em.category.objects.len(), 1);
        assert_eq!(em.category.morphisms.len(), 1);
    }

    #[test]
    fn structure_maps_failing_the_laws_are_rejected() {
        // For the identity monad every structure map must equal the
        // identity, so the count of algebras equals the count of objects.
        let c = bz2();
        let t = identity_monad(&c);
        assert_eq!(algebras(&t).len(), c.objects.len());
    }
}
