//! Length-bounded string quotients of a finite category.
//!
//! Given a category of letters, a labeling of its objects (the objects of
//! the quotient), and a set of contracted morphisms (to become identities),
//! this engine builds the category whose morphisms are classes of strings
//! of letters — consecutive letters need only share a label at the
//! junction — under three moves:
//!
//! * M1: adjacent letters that compose literally are merged.
//! * M2: adjacent letters bridged by a single contracted morphism are
//!   merged through it.
//! * M3: identity letters and contracted letters are deleted.
//!
//! The quotient may be infinite, so strings are explored only up to a
//! length bound, with a saturation certificate: the result counts as
//! saturated when no string class has minimal length within two of the
//! bound (new classes would have had to appear there first). Unsaturated
//! results carry no category.

use super::{FinCategory, MorInfo};
use crate::ids::{MorId, ObjId};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A string of letters; the empty string is handled separately, keyed by
/// its label.
type Word = Vec<MorId>;

/// The outcome of a bounded string-quotient computation.
pub struct StringQuotient {
    letters: FinCategory,
    label: BTreeMap<ObjId, ObjId>,
    contracted: BTreeSet<MorId>,
    /// Whether the bound certified saturation.
    pub saturated: bool,
    pub bound: usize,
    /// The quotient category; present only when saturated.
    pub category: Option<FinCategory>,
    /// Reduced word → quotient morphism id (words within the bound).
    class_name: BTreeMap<Word, MorId>,
    /// Label → quotient identity morphism id.
    empty_name: BTreeMap<ObjId, MorId>,
}

impl StringQuotient {
    /// The quotient object a base object lands on.
    pub fn label_of(&self, x: &ObjId) -> &ObjId {
        &self.label[x]
    }

    /// The class of an arbitrary word (reduced internally). `None` when
    /// the word's class was not certified within the bound.
    pub fn class_of_word(&self, word: &[MorId]) -> Option<MorId> {
        let (w, lbl) = reduce(
            &self.letters,
            &self.label,
            &self.contracted,
            word,
            self.boundary_label(word),
        );
        if w.is_empty() {
            self.empty_name.get(&lbl.expect("empty word needs a label")).cloned()
        } else {
            self.class_name.get(&w).cloned()
        }
    }

    /// The class of a single base morphism.
    pub fn class_of_morphism(&self, m: &MorId) -> Option<MorId> {
        self.class_of_word(std::slice::from_ref(m))
    }

    fn boundary_label(&self, word: &[MorId]) -> Option<ObjId> {
        word.first()
            .map(|m| self.label[&self.letters.mor(m).unwrap().src].clone())
    }
}

/// Labels objects by the connected components of the endpoint graph of the
/// given morphisms; the representative is the least object id in each
/// component. Objects touched by no generator label themselves.
pub fn orbit_labels(c: &FinCategory, generators: &[MorId]) -> BTreeMap<ObjId, ObjId> {
    let mut rep: BTreeMap<ObjId, ObjId> = c
        .objects
        .iter()
        .map(|x| (x.clone(), x.clone()))
        .collect();
    for g in generators {
        let info = c.mor(g).unwrap_or_else(|| panic!("unknown generator {g}"));
        let (a, b) = (rep[&info.src].clone(), rep[&info.tgt].clone());
        if a != b {
            let least = a.clone().min(b.clone());
            for v in rep.values_mut() {
                if *v == a || *v == b {
                    *v = least.clone();
                }
            }
        }
    }
    rep
}

/// Fully reduces a word by M1/M2/M3; returns the reduced word and, when it
/// is empty, the label it sits at (from `fallback` when the input was
/// already empty).
fn reduce(
    letters: &FinCategory,
    label: &BTreeMap<ObjId, ObjId>,
    contracted: &BTreeSet<MorId>,
    word: &[MorId],
    fallback: Option<ObjId>,
) -> (Word, Option<ObjId>) {
    let mut w: Word = word.to_vec();
    let mut lbl = fallback.or_else(|| {
        w.first()
            .map(|m| label[&letters.mor(m).unwrap().src].clone())
    });
    if let Some(m) = w.first() {
        lbl = Some(label[&letters.mor(m).unwrap().src].clone());
    }
    'outer: loop {
        for i in 0..w.len() {
            let mi = letters.mor(&w[i]).unwrap();
            // M3: delete identities and contracted letters.
            if letters.ident(&mi.src) == w[i] || contracted.contains(&w[i]) {
                w.remove(i);
                continue 'outer;
            }
            if i + 1 < w.len() {
                let mj = letters.mor(&w[i + 1]).unwrap();
                // M1: literal composition.
                if mi.tgt == mj.src {
                    let merged = letters.comp(&w[i + 1], &w[i]);
                    w[i] = merged;
                    w.remove(i + 1);
                    continue 'outer;
                }
                // M2: single contracted bridge, least bridge first.
                let bridge = contracted
                    .iter()
                    .find(|g| {
                        let gi = letters.mor(g).unwrap();
                        gi.src == mi.tgt && gi.tgt == mj.src
                    })
                    .cloned();
                if let Some(g) = bridge {
                    let merged = letters.comp(&w[i + 1], &letters.comp(&g, &w[i]));
                    w[i] = merged;
                    w.remove(i + 1);
                    continue 'outer;
                }
            }
        }
        break;
    }
    (w, lbl)
}

fn is_reduced(
    letters: &FinCategory,
    label: &BTreeMap<ObjId, ObjId>,
    contracted: &BTreeSet<MorId>,
    word: &[MorId],
) -> bool {
    reduce(letters, label, contracted, word, None).0 == word
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let low = ra.min(rb);
            self.parent[ra.max(rb)] = low;
        }
    }
}

/// Builds the bounded string quotient. `word_cap` aborts (as unsaturated)
/// if the reduced-word universe outgrows it.
pub fn string_quotient(
    letters: &FinCategory,
    label: &BTreeMap<ObjId, ObjId>,
    contracted: &BTreeSet<MorId>,
    bound: usize,
    word_cap: usize,
) -> StringQuotient {
    for x in &letters.objects {
        assert!(label.contains_key(x), "object {x} has no label");
    }
    for g in contracted {
        let info = letters.mor(g).unwrap_or_else(|| panic!("unknown contracted morphism {g}"));
        assert_eq!(
            label[&info.src], label[&info.tgt],
            "contracted morphism {g} must connect objects with the same label"
        );
    }
    let mut labels: Vec<ObjId> = label.values().cloned().collect();
    labels.sort();
    labels.dedup();
    let unsaturated = |quotient_labels: &BTreeMap<ObjId, ObjId>| StringQuotient {
        letters: letters.clone(),
        label: quotient_labels.clone(),
        contracted: contracted.clone(),
        saturated: false,
        bound,
        category: None,
        class_name: BTreeMap::new(),
        empty_name: BTreeMap::new(),
    };
    // Enumerate all reduced words up to the bound, breadth-first.
    let mut words: Vec<Word> = Vec::new();
    let mut index: BTreeMap<Word, usize> = BTreeMap::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    let non_identity: Vec<&MorInfo> = letters
        .morphisms
        .iter()
        .filter(|m| letters.ident(&m.src) != m.id && !contracted.contains(&m.id))
        .collect();
    for m in &non_identity {
        let w = vec![m.id.clone()];
        if is_reduced(letters, label, contracted, &w) && !index.contains_key(&w) {
            index.insert(w.clone(), words.len());
            queue.push_back(words.len());
            words.push(w);
        }
    }
    while let Some(i) = queue.pop_front() {
        if words[i].len() >= bound {
            continue;
        }
        if words.len() > word_cap {
            return unsaturated(label);
        }
        let last = letters.mor(words[i].last().unwrap()).unwrap().tgt.clone();
        for m in &non_identity {
            if label[&m.src] != label[&last] {
                continue;
            }
            let mut w = words[i].clone();
            w.push(m.id.clone());
            if is_reduced(letters, label, contracted, &w) && !index.contains_key(&w) {
                index.insert(w.clone(), words.len());
                queue.push_back(words.len());
                words.push(w);
            }
        }
    }
    // Union-find: indices 0..words.len() are words, then one slot per
    // label for the empty strings.
    let empty_slot: BTreeMap<ObjId, usize> = labels
        .iter()
        .enumerate()
        .map(|(k, l)| (l.clone(), words.len() + k))
        .collect();
    let mut uf = UnionFind::new(words.len() + labels.len());
    let slot_of = |w: &Word, lbl: &Option<ObjId>, index: &BTreeMap<Word, usize>| -> Option<usize> {
        if w.is_empty() {
            lbl.as_ref().map(|l| empty_slot[l])
        } else {
            index.get(w).copied()
        }
    };
    // Conjugation moves: replace one letter by its composite with a
    // contracted morphism on either side, reduce, and identify.
    for (i, w) in words.iter().enumerate() {
        for pos in 0..w.len() {
            let info = letters.mor(&w[pos]).unwrap();
            for g in contracted {
                let gi = letters.mor(g).unwrap();
                let mut variants: Vec<Word> = Vec::new();
                if gi.src == info.tgt {
                    let mut v = w.clone();
                    v[pos] = letters.comp(g, &w[pos]);
                    variants.push(v);
                }
                if gi.tgt == info.src {
                    let mut v = w.clone();
                    v[pos] = letters.comp(&w[pos], g);
                    variants.push(v);
                }
                for v in variants {
                    let (r, lbl) = reduce(letters, label, contracted, &v, None);
                    if r.len() > bound {
                        continue;
                    }
                    if let Some(j) = slot_of(&r, &lbl, &index) {
                        uf.union(i, j);
                    }
                }
            }
        }
    }
    // Certificate: no class may have its minimal representative at the
    // last two lengths — growth there means longer words could still merge
    // or create classes.
    let mut min_len: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, w) in words.iter().enumerate() {
        let root = uf.find(i);
        let entry = min_len.entry(root).or_insert(usize::MAX);
        *entry = (*entry).min(w.len());
    }
    for l in &labels {
        min_len.entry(uf.find(empty_slot[l])).or_insert(0);
    }
    if bound < 2 || min_len.values().any(|&l| l + 2 > bound) {
        return unsaturated(label);
    }
    // Canonical representative per class: the empty word if present, else
    // the least (length, word).
    let mut rep: BTreeMap<usize, Option<Word>> = BTreeMap::new();
    for l in &labels {
        rep.insert(uf.find(empty_slot[l]), None);
    }
    for (i, w) in words.iter().enumerate() {
        let root = uf.find(i);
        match rep.get(&root) {
            Some(None) => {}
            Some(Some(best)) if (best.len(), best) <= (w.len(), w) => {}
            _ => {
                rep.insert(root, Some(w.clone()));
            }
        }
    }
    let class_id = |root: usize, rep: &BTreeMap<usize, Option<Word>>, labels: &[ObjId], empty_slot: &BTreeMap<ObjId, usize>, uf_root_of_empty: &BTreeMap<usize, ObjId>| -> MorId {
        match &rep[&root] {
            None => {
                let l = &uf_root_of_empty[&root];
                let _ = (labels, empty_slot);
                MorId::from(format!("[{l}]").as_str())
            }
            Some(w) => {
                let names: Vec<&str> = w.iter().map(|m| m.as_str()).collect();
                MorId::from(format!("[{}]", names.join(";")).as_str())
            }
        }
    };
    let mut uf_root_of_empty: BTreeMap<usize, ObjId> = BTreeMap::new();
    for l in &labels {
        uf_root_of_empty.insert(uf.find(empty_slot[l]), l.clone());
    }
    // Name every class and record memberships.
    let mut class_name: BTreeMap<Word, MorId> = BTreeMap::new();
    let mut empty_name: BTreeMap<ObjId, MorId> = BTreeMap::new();
    let mut class_ends: BTreeMap<MorId, (ObjId, ObjId)> = BTreeMap::new();
    for l in &labels {
        let root = uf.find(empty_slot[l]);
        let id = class_id(root, &rep, &labels, &empty_slot, &uf_root_of_empty);
        empty_name.insert(l.clone(), id.clone());
        class_ends.insert(id, (l.clone(), l.clone()));
    }
    for (i, w) in words.iter().enumerate() {
        let root = uf.find(i);
        let id = class_id(root, &rep, &labels, &empty_slot, &uf_root_of_empty);
        class_name.insert(w.clone(), id.clone());
        let src = label[&letters.mor(&w[0]).unwrap().src].clone();
        let tgt = label[&letters.mor(w.last().unwrap()).unwrap().tgt].clone();
        class_ends.insert(id, (src, tgt));
    }
    // Build the quotient category: compose classes through representatives.
    let mut morphisms: Vec<MorInfo> = class_ends
        .iter()
        .map(|(id, (s, t))| MorInfo {
            id: id.clone(),
            src: s.clone(),
            tgt: t.clone(),
        })
        .collect();
    morphisms.sort();
    morphisms.dedup();
    let identity: BTreeMap<ObjId, MorId> = labels
        .iter()
        .map(|l| (l.clone(), empty_name[l].clone()))
        .collect();
    let rep_word_of: BTreeMap<MorId, Word> = {
        let mut out = BTreeMap::new();
        for l in &labels {
            out.insert(empty_name[l].clone(), Vec::new());
        }
        for (i, _) in words.iter().enumerate() {
            let root = uf.find(i);
            let id = class_id(root, &rep, &labels, &empty_slot, &uf_root_of_empty);
            if let Some(w) = &rep[&root] {
                out.insert(id, w.clone());
            }
        }
        out
    };
    let mut compose: BTreeMap<(MorId, MorId), MorId> = BTreeMap::new();
    for f in &morphisms {
        for g in &morphisms {
            if class_ends[&f.id].1 != class_ends[&g.id].0 {
                continue;
            }
            let mut concat = rep_word_of[&f.id].clone();
            concat.extend(rep_word_of[&g.id].iter().cloned());
            let lbl = if concat.is_empty() {
                Some(class_ends[&f.id].0.clone())
            } else {
                None
            };
            let (r, rl) = reduce(letters, label, contracted, &concat, lbl);
            let target = if r.is_empty() {
                empty_name.get(&rl.expect("reduced empty word has a label")).cloned()
            } else {
                class_name.get(&r).cloned()
            };
            match target {
                Some(t) => {
                    compose.insert((g.id.clone(), f.id.clone()), t);
                }
                None => return unsaturated(label),
            }
        }
    }
    let category = FinCategory::new(labels.clone(), morphisms, identity, compose);
    StringQuotient {
        letters: letters.clone(),
        label: label.clone(),
        contracted: contracted.clone(),
        saturated: true,
        bound,
        category: Some(category),
        class_name,
        empty_name,
    }
}

/// Contracts a set of morphisms of `c` to identities: objects merge along
/// the contracted morphisms' endpoints, and strings of remaining morphisms
/// are identified under the engine's moves.
pub fn contract(c: &FinCategory, contracted: &[MorId], bound: usize) -> StringQuotient {
    let label = orbit_labels(c, contracted);
    let set: BTreeSet<MorId> = contracted.iter().cloned().collect();
    string_quotient(c, &label, &set, bound, 100_000)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{bz2, categories_equivalent, linear, walking_iso};

    #[test]
    fn contracting_nothing_recovers_the_category() {
        for c in [linear(2), bz2(), walking_iso()] {
            let q = contract(&c, &[], 8);
            assert!(q.saturated);
            let cat = q.category.as_ref().unwrap();
            assert!(cat.validate().is_empty());
            assert!(crate::fincat::find_category_iso(cat, &c).is_some());
            // Each base morphism maps to its singleton class.
            for m in &c.morphisms {
                assert!(q.class_of_morphism(&m.id).is_some());
            }
        }
    }

    #[test]
    fn contracting_the_walking_iso_gives_the_point() {
        let c = walking_iso();
        let q = contract(&c, &[MorId::from("i"), MorId::from("j")], 8);
        assert!(q.saturated);
        let cat = q.category.as_ref().unwrap();
        assert!(cat.validate().is_empty());
        assert_eq!(cat.objects.len(), 1);
        assert_eq!(cat.morphisms.len(), 1);
    }

    #[test]
    fn contracting_one_leg_of_the_iso_still_collapses() {
        // Contracting only i: the inverse j becomes equal to an identity
        // string as well (j ~ j∘i∘j ... via conjugation), so the quotient
        // is again trivial.
        let c = walking_iso();
        let q = contract(&c, &[MorId::from("i")], 8);
        assert!(q.saturated);
        let cat = q.category.as_ref().unwrap();
        assert_eq!(cat.objects.len(), 1);
        assert_eq!(
            cat.morphisms.len(),
            1,
            "j·i = id and i·j = id force j into the identity class"
        );
    }

    #[test]
    fn group_quotient_by_generator() {
        // Contracting the generator of the 2-element group gives the
        // trivial group.
        let c = bz2();
        let q = contract(&c, &[MorId::from("s")], 8);
        assert!(q.saturated);
        assert_eq!(q.category.as_ref().unwrap().morphisms.len(), 1);
    }

    #[test]
    fn free_loop_never_saturates() {
        // Collapse the two objects of the walking arrow into one another
        // twice: the category with two parallel arrows 0 ⇉ 1 with one
        // contracted leaves the other as a free loop — ℤ.
        let objects = vec!["0".into(), "1".into()];
        let morphisms = vec![
            MorInfo::new("a", "0", "1"),
            MorInfo::new("b", "0", "1"),
            MorInfo::new("id_0", "0", "0"),
            MorInfo::new("id_1", "1", "1"),
        ];
        let identity: BTreeMap<crate::ids::ObjId, MorId> = [
            (crate::ids::ObjId::from("0"), MorId::from("id_0")),
            (crate::ids::ObjId::from("1"), MorId::from("id_1")),
        ]
        .into_iter()
        .collect();
        let mut compose = BTreeMap::new();
        for m in ["a", "b"] {
            compose.insert((MorId::from(m), MorId::from("id_0")), MorId::from(m));
            compose.insert((MorId::from("id_1"), MorId::from(m)), MorId::from(m));
        }
        compose.insert((MorId::from("id_0"), MorId::from("id_0")), MorId::from("id_0"));
        compose.insert((MorId::from("id_1"), MorId::from("id_1")), MorId::from("id_1"));
        let c = FinCategory::new(objects, morphisms, identity, compose);
        assert!(c.validate().is_empty());
        for bound in [2, 4, 8, 12] {
            let q = contract(&c, &[MorId::from("b")], bound);
            assert!(!q.saturated, "the free loop has strings of every length");
        }
    }

    #[test]
    fn degenerate_bounds_cannot_certify() {
        let q = contract(&linear(1), &[], 1);
        assert!(!q.saturated);
    }

    #[test]
    fn quotient_respects_composition_relations() {
        // Contract the connecting iso i in walking_iso ⊔ [1]; result is
        // equivalent to collapsing nothing else: [1] with the iso'd pair
        // merged — i.e. equivalent to [1] plus a collapsed point absorbed.
        let c = crate::fincat::disjoint_union(&walking_iso(), &linear(1));
        let q = contract(&c, &[MorId::from("l.i"), MorId::from("l.j")], 8);
        assert!(q.saturated);
        let cat = q.category.as_ref().unwrap();
        assert!(cat.validate().is_empty());
        assert!(categories_equivalent(
            cat,
            &crate::fincat::disjoint_union(&crate::fincat::terminal(), &linear(1))
        ));
    }
}
