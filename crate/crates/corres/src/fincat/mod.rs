//! Finite categories as total composition tables.
//!
//! A [`FinCategory`] stores its objects, its morphisms with endpoints, an
//! identity assignment, and a total composition table keyed by composable
//! pairs. All data is immutable after construction; every operation returns a
//! fresh value. Constructors sort their inputs so that equal data always
//! produces identical values.
//!
//! Validation distinguishes structural defects (dangling references, missing
//! or extraneous table entries) from category-law failures (identity and
//! associativity violations).

pub mod fibration;
pub mod flagged;
pub mod functor;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::ids::{MorId, ObjId};

/// One morphism record: identifier plus endpoints.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MorInfo {
    pub id: MorId,
    pub src: ObjId,
    pub tgt: ObjId,
}

impl MorInfo {
    pub fn new(id: impl Into<MorId>, src: impl Into<ObjId>, tgt: impl Into<ObjId>) -> Self {
        MorInfo { id: id.into(), src: src.into(), tgt: tgt.into() }
    }
}

/// A validation finding. Structural defects make the data unreadable as a
/// category; axiom defects mean the tables are well-formed but the category
/// laws fail.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    Structural(String),
    Axiom(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Structural(m) => write!(f, "structural: {m}"),
            Violation::Axiom(m) => write!(f, "axiom: {m}"),
        }
    }
}

/// A finite category presented by total tables.
///
/// `compose` is keyed by `(g, f)` with `src(g) = tgt(f)` and holds `g ∘ f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinCategory {
    pub objects: Vec<ObjId>,
    pub morphisms: Vec<MorInfo>,
    pub identity: BTreeMap<ObjId, MorId>,
    pub compose: BTreeMap<(MorId, MorId), MorId>,
}

impl FinCategory {
    /// Builds a category value, sorting objects and morphisms into canonical
    /// order. Does not validate; call [`FinCategory::validate`] for that.
    pub fn new(
        mut objects: Vec<ObjId>,
        mut morphisms: Vec<MorInfo>,
        identity: BTreeMap<ObjId, MorId>,
        compose: BTreeMap<(MorId, MorId), MorId>,
    ) -> Self {
        objects.sort();
        objects.dedup();
        morphisms.sort();
        morphisms.dedup();
        FinCategory { objects, morphisms, identity, compose }
    }

    /// Endpoints of a morphism, if it exists.
    pub fn ends(&self, m: &MorId) -> Option<(&ObjId, &ObjId)> {
        self.morphisms
            .binary_search_by(|probe| probe.id.cmp(m))
            .ok()
            .map(|i| (&self.morphisms[i].src, &self.morphisms[i].tgt))
    }

    pub fn src(&self, m: &MorId) -> Option<&ObjId> {
        self.ends(m).map(|(s, _)| s)
    }

    pub fn tgt(&self, m: &MorId) -> Option<&ObjId> {
        self.ends(m).map(|(_, t)| t)
    }

    pub fn has_object(&self, x: &ObjId) -> bool {
        self.objects.binary_search(x).is_ok()
    }

    pub fn has_morphism(&self, m: &MorId) -> bool {
        self.ends(m).is_some()
    }

    /// The hom-set from `x` to `y`, in identifier order.
    pub fn hom(&self, x: &ObjId, y: &ObjId) -> Vec<&MorId> {
        self.morphisms
            .iter()
            .filter(|m| &m.src == x && &m.tgt == y)
            .map(|m| &m.id)
            .collect()
    }

    /// The composite `g ∘ f`, if the pair is composable and tabled.
    pub fn composite(&self, g: &MorId, f: &MorId) -> Option<&MorId> {
        self.compose.get(&(g.clone(), f.clone()))
    }

    /// The composite `g ∘ f` on a category known to be valid. Panics when the
    /// pair is not composable.
    pub fn comp(&self, g: &MorId, f: &MorId) -> MorId {
        self.composite(g, f)
            .unwrap_or_else(|| panic!("no composite for ({g}, {f})"))
            .clone()
    }

    pub fn identity_of(&self, x: &ObjId) -> Option<&MorId> {
        self.identity.get(x)
    }

    /// The identity on an object known to exist. Panics otherwise.
    pub fn ident(&self, x: &ObjId) -> MorId {
        self.identity_of(x)
            .unwrap_or_else(|| panic!("no identity on {x}"))
            .clone()
    }

    /// Full record of a morphism, if it exists.
    pub fn mor(&self, m: &MorId) -> Option<&MorInfo> {
        self.morphisms
            .binary_search_by(|probe| probe.id.cmp(m))
            .ok()
            .map(|i| &self.morphisms[i])
    }

    /// All morphisms with target `x`, in identifier order.
    pub fn morphisms_into(&self, x: &ObjId) -> Vec<&MorInfo> {
        self.morphisms.iter().filter(|m| &m.tgt == x).collect()
    }

    /// All morphisms with source `x`, in identifier order.
    pub fn morphisms_out_of(&self, x: &ObjId) -> Vec<&MorInfo> {
        self.morphisms.iter().filter(|m| &m.src == x).collect()
    }

    pub fn is_identity(&self, m: &MorId) -> bool {
        self.ends(m)
            .map(|(s, _)| self.identity.get(s) == Some(m))
            .unwrap_or(false)
    }

    /// Checks every structural and categorical requirement and reports all
    /// findings. An empty report means the value is a category.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let objset: BTreeSet<&ObjId> = self.objects.iter().collect();
        let mut morset: BTreeSet<&MorId> = BTreeSet::new();
        for m in &self.morphisms {
            if !morset.insert(&m.id) {
                out.push(Violation::Structural(format!("duplicate morphism id {}", m.id)));
            }
            if !objset.contains(&m.src) {
                out.push(Violation::Structural(format!(
                    "morphism {} has unknown source {}",
                    m.id, m.src
                )));
            }
            if !objset.contains(&m.tgt) {
                out.push(Violation::Structural(format!(
                    "morphism {} has unknown target {}",
                    m.id, m.tgt
                )));
            }
        }
        // Identity table: total on objects, valid references, correct endpoints.
        for x in &self.objects {
            match self.identity.get(x) {
                None => out.push(Violation::Structural(format!("object {x} has no identity"))),
                Some(i) => match self.ends(i) {
                    None => out.push(Violation::Structural(format!(
                        "identity of {x} refers to unknown morphism {i}"
                    ))),
                    Some((s, t)) => {
                        if s != x || t != x {
                            out.push(Violation::Structural(format!(
                                "identity of {x} is {i}: {s} -> {t}, not an endomorphism of {x}"
                            )));
                        }
                    }
                },
            }
        }
        for (x, _) in &self.identity {
            if !objset.contains(x) {
                out.push(Violation::Structural(format!(
                    "identity table mentions unknown object {x}"
                )));
            }
        }
        // Composition table: defined exactly on composable pairs, well-typed.
        for ((g, f), h) in &self.compose {
            let (Some((fs, ft)), Some((gs, gt))) = (self.ends(f), self.ends(g)) else {
                out.push(Violation::Structural(format!(
                    "composition entry ({g}, {f}) refers to unknown morphisms"
                )));
                continue;
            };
            if ft != gs {
                out.push(Violation::Structural(format!(
                    "composition entry ({g}, {f}) is not composable: tgt({f}) = {ft}, src({g}) = {gs}"
                )));
                continue;
            }
            match self.ends(h) {
                None => out.push(Violation::Structural(format!(
                    "composite of ({g}, {f}) is unknown morphism {h}"
                ))),
                Some((hs, ht)) => {
                    if hs != fs || ht != gt {
                        out.push(Violation::Structural(format!(
                            "composite {h} of ({g}, {f}) has endpoints {hs} -> {ht}, expected {fs} -> {gt}"
                        )));
                    }
                }
            }
        }
        for f in &self.morphisms {
            for g in &self.morphisms {
                if f.tgt == g.src && !self.compose.contains_key(&(g.id.clone(), f.id.clone())) {
                    out.push(Violation::Structural(format!(
                        "missing composite for composable pair ({}, {})",
                        g.id, f.id
                    )));
                }
            }
        }
        if out.iter().any(|v| matches!(v, Violation::Structural(_))) {
            return out;
        }
        // Laws. Tables are structurally sound from here on.
        for m in &self.morphisms {
            let ids = self.identity.get(&m.src).unwrap();
            let idt = self.identity.get(&m.tgt).unwrap();
            if self.composite(&m.id, ids) != Some(&m.id) {
                out.push(Violation::Axiom(format!(
                    "right identity fails: {} . {} != {}",
                    m.id, ids, m.id
                )));
            }
            if self.composite(idt, &m.id) != Some(&m.id) {
                out.push(Violation::Axiom(format!(
                    "left identity fails: {} . {} != {}",
                    idt, m.id, m.id
                )));
            }
        }
        for f in &self.morphisms {
            for g in &self.morphisms {
                if g.src != f.tgt {
                    continue;
                }
                for h in &self.morphisms {
                    if h.src != g.tgt {
                        continue;
                    }
                    let hg = self.composite(&h.id, &g.id).unwrap();
                    let gf = self.composite(&g.id, &f.id).unwrap();
                    let left = self.composite(hg, &f.id).unwrap();
                    let right = self.composite(&h.id, gf).unwrap();
                    if left != right {
                        out.push(Violation::Axiom(format!(
                            "associativity fails: ({} . {}) . {} = {} but {} . ({} . {}) = {}",
                            h.id, g.id, f.id, left, h.id, g.id, f.id, right
                        )));
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// A morphism is invertible when some morphism composes with it to
    /// identities on both sides.
    pub fn is_invertible(&self, m: &MorId) -> bool {
        self.inverse_of(m).is_some()
    }

    /// The two-sided inverse of `m`, if one exists.
    pub fn inverse_of(&self, m: &MorId) -> Option<MorId> {
        let (s, t) = self.ends(m)?;
        let id_s = self.identity.get(s)?;
        let id_t = self.identity.get(t)?;
        for w in self.hom(t, s) {
            if self.composite(w, m) == Some(id_s) && self.composite(m, w) == Some(id_t) {
                return Some(w.clone());
            }
        }
        None
    }

    /// The core: the wide subcategory of all invertible morphisms.
    pub fn core(&self) -> FinCategory {
        let keep: BTreeSet<MorId> = self
            .morphisms
            .iter()
            .filter(|m| self.is_invertible(&m.id))
            .map(|m| m.id.clone())
            .collect();
        let morphisms = self
            .morphisms
            .iter()
            .filter(|m| keep.contains(&m.id))
            .cloned()
            .collect();
        let compose = self
            .compose
            .iter()
            .filter(|((g, f), _)| keep.contains(g) && keep.contains(f))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        FinCategory::new(self.objects.clone(), morphisms, self.identity.clone(), compose)
    }

    /// True when every morphism is invertible.
    pub fn is_groupoid(&self) -> bool {
        self.morphisms.iter().all(|m| self.is_invertible(&m.id))
    }

    /// The full subcategory on the given objects, keeping all ids.
    pub fn full_subcategory(&self, objects: &[ObjId]) -> FinCategory {
        let keep: BTreeSet<&ObjId> = objects.iter().collect();
        let morphisms: Vec<MorInfo> = self
            .morphisms
            .iter()
            .filter(|m| keep.contains(&m.src) && keep.contains(&m.tgt))
            .cloned()
            .collect();
        let keep_mor: BTreeSet<&MorId> = morphisms.iter().map(|m| &m.id).collect();
        let identity = self
            .identity
            .iter()
            .filter(|(x, _)| keep.contains(x))
            .map(|(x, m)| (x.clone(), m.clone()))
            .collect();
        let compose = self
            .compose
            .iter()
            .filter(|((g, f), _)| keep_mor.contains(g) && keep_mor.contains(f))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        FinCategory::new(objects.to_vec(), morphisms, identity, compose)
    }

    /// A skeleton: the full subcategory on one representative (the least
    /// object id) per isomorphism class of objects.
    pub fn skeleton(&self) -> FinCategory {
        let mut rep: BTreeMap<ObjId, ObjId> = self
            .objects
            .iter()
            .map(|x| (x.clone(), x.clone()))
            .collect();
        for m in &self.morphisms {
            if self.is_invertible(&m.id) {
                let (a, b) = (rep[&m.src].clone(), rep[&m.tgt].clone());
                let least = a.clone().min(b.clone());
                for v in rep.values_mut() {
                    if *v == a || *v == b {
                        *v = least.clone();
                    }
                }
            }
        }
        let mut reps: Vec<ObjId> = rep.values().cloned().collect();
        reps.sort();
        reps.dedup();
        self.full_subcategory(&reps)
    }

    /// The opposite category. Morphism ids are preserved; endpoints and the
    /// composition table swap.
    pub fn opposite(&self) -> FinCategory {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| MorInfo { id: m.id.clone(), src: m.tgt.clone(), tgt: m.src.clone() })
            .collect();
        let compose = self
            .compose
            .iter()
            .map(|((g, f), h)| ((f.clone(), g.clone()), h.clone()))
            .collect();
        FinCategory::new(self.objects.clone(), morphisms, self.identity.clone(), compose)
    }

    /// Searches for an isomorphism between objects and returns a witness.
    pub fn find_isomorphism(&self, x: &ObjId, y: &ObjId) -> Option<MorId> {
        self.hom(x, y).into_iter().find(|m| self.is_invertible(m)).cloned()
    }

    /// Objects grouped into isomorphism classes (connected under invertible
    /// morphisms), each class sorted, classes sorted by first member.
    pub fn iso_classes(&self) -> Vec<Vec<ObjId>> {
        let mut classes: Vec<Vec<ObjId>> = Vec::new();
        let mut seen: BTreeSet<ObjId> = BTreeSet::new();
        for x in &self.objects {
            if seen.contains(x) {
                continue;
            }
            let mut class: Vec<ObjId> = self
                .objects
                .iter()
                .filter(|y| self.find_isomorphism(x, y).is_some())
                .cloned()
                .collect();
            class.sort();
            for y in &class {
                seen.insert(y.clone());
            }
            classes.push(class);
        }
        classes
    }
}

/// Searches for an isomorphism of categories: an invertible functor
/// `c -> d`, found by exhaustive backtracking over object and morphism
/// assignments with degree-profile pruning.
pub fn find_category_iso(c: &FinCategory, d: &FinCategory) -> Option<functor::FinFunctor> {
    if c.objects.len() != d.objects.len() || c.morphisms.len() != d.morphisms.len() {
        return None;
    }
    fn hom_profile(cat: &FinCategory, x: &ObjId) -> (usize, usize, usize) {
        (
            cat.hom(x, x).len(),
            cat.morphisms_out_of(x).len(),
            cat.morphisms_into(x).len(),
        )
    }
    fn assign_objects(
        c: &FinCategory,
        d: &FinCategory,
        next: usize,
        object_map: &mut BTreeMap<ObjId, ObjId>,
        used: &mut BTreeSet<ObjId>,
    ) -> Option<functor::FinFunctor> {
        if next == c.objects.len() {
            return assign_morphisms(c, d, object_map);
        }
        let x = &c.objects[next];
        let profile = hom_profile(c, x);
        let candidates: Vec<ObjId> = d
            .objects
            .iter()
            .filter(|y| !used.contains(*y) && hom_profile(d, y) == profile)
            .cloned()
            .collect();
        for y in candidates {
            // Hom-set sizes to and from already-assigned objects must match.
            let compatible = object_map.iter().all(|(a, fa)| {
                c.hom(a, x).len() == d.hom(fa, &y).len() && c.hom(x, a).len() == d.hom(&y, fa).len()
            });
            if !compatible {
                continue;
            }
            object_map.insert(x.clone(), y.clone());
            used.insert(y.clone());
            if let Some(found) = assign_objects(c, d, next + 1, object_map, used) {
                return Some(found);
            }
            object_map.remove(x);
            used.remove(&y);
        }
        None
    }
    fn assign_morphisms(
        c: &FinCategory,
        d: &FinCategory,
        object_map: &BTreeMap<ObjId, ObjId>,
    ) -> Option<functor::FinFunctor> {
        let mut morphism_map: BTreeMap<MorId, MorId> = BTreeMap::new();
        let mut used: BTreeSet<MorId> = BTreeSet::new();
        // Identities are forced.
        for (x, y) in object_map {
            let iy = d.ident(y);
            morphism_map.insert(c.ident(x), iy.clone());
            used.insert(iy);
        }
        let rest: Vec<&MorInfo> = c
            .morphisms
            .iter()
            .filter(|m| !c.is_identity(&m.id))
            .collect();
        fn go(
            c: &FinCategory,
            d: &FinCategory,
            object_map: &BTreeMap<ObjId, ObjId>,
            rest: &[&MorInfo],
            next: usize,
            morphism_map: &mut BTreeMap<MorId, MorId>,
            used: &mut BTreeSet<MorId>,
        ) -> bool {
            if next == rest.len() {
                return true;
            }
            let m = rest[next];
            let fsrc = &object_map[&m.src];
            let ftgt = &object_map[&m.tgt];
            let candidates: Vec<MorId> = d
                .hom(fsrc, ftgt)
                .into_iter()
                .filter(|n| !used.contains(*n) && !d.is_identity(n))
                .cloned()
                .collect();
            for cand in candidates {
                morphism_map.insert(m.id.clone(), cand.clone());
                used.insert(cand.clone());
                // Composition consistency on every fully-assigned pair.
                let ok = c.compose.iter().all(|((g, f), h)| {
                    match (morphism_map.get(g), morphism_map.get(f), morphism_map.get(h)) {
                        (Some(fg), Some(ff), Some(fh)) => d.composite(fg, ff) == Some(fh),
                        _ => true,
                    }
                });
                if ok && go(c, d, object_map, rest, next + 1, morphism_map, used) {
                    return true;
                }
                morphism_map.remove(&m.id);
                used.remove(&cand);
            }
            false
        }
        if go(c, d, object_map, &rest, 0, &mut morphism_map, &mut used) {
            Some(functor::FinFunctor::new(
                c.clone(),
                d.clone(),
                object_map.clone(),
                morphism_map,
            ))
        } else {
            None
        }
    }
    let mut object_map = BTreeMap::new();
    let mut used = BTreeSet::new();
    assign_objects(c, d, 0, &mut object_map, &mut used)
}

/// Equivalence of finite categories, decided as isomorphism of skeletons.
pub fn categories_equivalent(c: &FinCategory, d: &FinCategory) -> bool {
    find_category_iso(&c.skeleton(), &d.skeleton()).is_some()
}

/// The terminal category: one object `*`, one identity.
pub fn terminal() -> FinCategory {
    discrete(&["*"])
}

/// A discrete category on the given object names.
pub fn discrete(names: &[&str]) -> FinCategory {
    let objects: Vec<ObjId> = names.iter().map(|n| ObjId::from(*n)).collect();
    let morphisms: Vec<MorInfo> = names
        .iter()
        .map(|n| MorInfo::new(format!("id_{n}"), *n, *n))
        .collect();
    let identity = names
        .iter()
        .map(|n| (ObjId::from(*n), MorId::from(format!("id_{n}"))))
        .collect();
    let compose = names
        .iter()
        .map(|n| {
            let i = MorId::from(format!("id_{n}"));
            ((i.clone(), i.clone()), i)
        })
        .collect();
    FinCategory::new(objects, morphisms, identity, compose)
}

/// The linear order `[n]` as a category: objects `0..=n`, one morphism
/// `i -> j` for each `i <= j`.
pub fn linear(n: usize) -> FinCategory {
    let objects: Vec<ObjId> = (0..=n).map(|i| ObjId::from(i.to_string())).collect();
    let mut morphisms = Vec::new();
    let mut identity = BTreeMap::new();
    for i in 0..=n {
        for j in i..=n {
            let id = arrow_name(i, j);
            morphisms.push(MorInfo::new(id.clone(), i.to_string(), j.to_string()));
            if i == j {
                identity.insert(ObjId::from(i.to_string()), MorId::from(id));
            }
        }
    }
    let mut compose = BTreeMap::new();
    for i in 0..=n {
        for j in i..=n {
            for k in j..=n {
                compose.insert(
                    (MorId::from(arrow_name(j, k)), MorId::from(arrow_name(i, j))),
                    MorId::from(arrow_name(i, k)),
                );
            }
        }
    }
    FinCategory::new(objects, morphisms, identity, compose)
}

fn arrow_name(i: usize, j: usize) -> String {
    if i == j {
        format!("id_{i}")
    } else {
        format!("a{i}{j}")
    }
}

/// The walking isomorphism: objects `x`, `y` and mutually inverse `i`, `j`.
pub fn walking_iso() -> FinCategory {
    let objects = vec![ObjId::from("x"), ObjId::from("y")];
    let morphisms = vec![
        MorInfo::new("id_x", "x", "x"),
        MorInfo::new("id_y", "y", "y"),
        MorInfo::new("i", "x", "y"),
        MorInfo::new("j", "y", "x"),
    ];
    let identity = BTreeMap::from([
        (ObjId::from("x"), MorId::from("id_x")),
        (ObjId::from("y"), MorId::from("id_y")),
    ]);
    let m = |s: &str| MorId::from(s);
    let compose = BTreeMap::from([
        ((m("id_x"), m("id_x")), m("id_x")),
        ((m("id_y"), m("id_y")), m("id_y")),
        ((m("i"), m("id_x")), m("i")),
        ((m("id_y"), m("i")), m("i")),
        ((m("j"), m("id_y")), m("j")),
        ((m("id_x"), m("j")), m("j")),
        ((m("j"), m("i")), m("id_x")),
        ((m("i"), m("j")), m("id_y")),
    ]);
    FinCategory::new(objects, morphisms, identity, compose)
}

/// A one-object category from a monoid multiplication table.
/// `table[i][j]` is the index of `elems[i] ∘ elems[j]`; `elems[0]` must be the
/// unit and is used as the identity.
pub fn monoid(object: &str, elems: &[&str], table: &[Vec<usize>]) -> FinCategory {
    let objects = vec![ObjId::from(object)];
    let morphisms: Vec<MorInfo> = elems
        .iter()
        .map(|e| MorInfo::new(*e, object, object))
        .collect();
    let identity = BTreeMap::from([(ObjId::from(object), MorId::from(elems[0]))]);
    let mut compose = BTreeMap::new();
    for (i, row) in table.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            compose.insert(
                (MorId::from(elems[i]), MorId::from(elems[j])),
                MorId::from(elems[k]),
            );
        }
    }
    FinCategory::new(objects, morphisms, identity, compose)
}

/// The cyclic group of order 2 as a one-object groupoid.
pub fn bz2() -> FinCategory {
    monoid("x", &["e", "s"], &[vec![0, 1], vec![1, 0]])
}

/// The cyclic group of order 3 as a one-object groupoid.
pub fn bz3() -> FinCategory {
    monoid(
        "x",
        &["e", "r", "rr"],
        &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
    )
}

/// The walking idempotent: one object, one non-identity `e` with `e ∘ e = e`.
pub fn walking_idempotent() -> FinCategory {
    monoid("x", &["id", "e"], &[vec![0, 1], vec![1, 1]])
}

/// Product category. Objects and morphisms are pairs, named `(a,b)`.
pub fn product(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let pair = |a: &str, b: &str| format!("({a},{b})");
    let objects: Vec<ObjId> = c
        .objects
        .iter()
        .flat_map(|x| d.objects.iter().map(move |y| ObjId::from(pair(x.as_str(), y.as_str()))))
        .collect();
    let mut morphisms = Vec::new();
    for f in &c.morphisms {
        for g in &d.morphisms {
            morphisms.push(MorInfo::new(
                pair(f.id.as_str(), g.id.as_str()),
                pair(f.src.as_str(), g.src.as_str()),
                pair(f.tgt.as_str(), g.tgt.as_str()),
            ));
        }
    }
    let identity = c
        .objects
        .iter()
        .flat_map(|x| {
            d.objects.iter().map(move |y| {
                (
                    ObjId::from(pair(x.as_str(), y.as_str())),
                    MorId::from(pair(
                        c.identity.get(x).unwrap().as_str(),
                        d.identity.get(y).unwrap().as_str(),
                    )),
                )
            })
        })
        .collect();
    let mut compose = BTreeMap::new();
    for ((g1, f1), h1) in &c.compose {
        for ((g2, f2), h2) in &d.compose {
            compose.insert(
                (
                    MorId::from(pair(g1.as_str(), g2.as_str())),
                    MorId::from(pair(f1.as_str(), f2.as_str())),
                ),
                MorId::from(pair(h1.as_str(), h2.as_str())),
            );
        }
    }
    FinCategory::new(objects, morphisms, identity, compose)
}

/// Disjoint union. Names are prefixed `l.` / `r.` to keep ids distinct.
pub fn disjoint_union(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let mut objects = Vec::new();
    let mut morphisms = Vec::new();
    let mut identity = BTreeMap::new();
    let mut compose = BTreeMap::new();
    for (prefix, cat) in [("l", c), ("r", d)] {
        let tag_o = |x: &ObjId| ObjId::from(format!("{prefix}.{x}"));
        let tag_m = |m: &MorId| MorId::from(format!("{prefix}.{m}"));
        objects.extend(cat.objects.iter().map(tag_o));
        morphisms.extend(cat.morphisms.iter().map(|m| MorInfo {
            id: tag_m(&m.id),
            src: tag_o(&m.src),
            tgt: tag_o(&m.tgt),
        }));
        identity.extend(cat.identity.iter().map(|(x, i)| (tag_o(x), tag_m(i))));
        compose.extend(
            cat.compose
                .iter()
                .map(|((g, f), h)| ((tag_m(g), tag_m(f)), tag_m(h))),
        );
    }
    FinCategory::new(objects, morphisms, identity, compose)
}
