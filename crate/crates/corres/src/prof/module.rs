//! Modules over a finite category: correspondences out of the point. A
//! module over `C` assigns a finite set to each object and a function to
//! each morphism, covariantly — exactly a correspondence `* ↛ C`.
//!
//! Modules transport along correspondences (`module_apply`, the coend
//! composite), and are enumerated completely up to isomorphism below a
//! fiber-size cap.

use super::compose::compose_prof;
use super::{ElemInfo, Profunctor};
use crate::fincat::{terminal, FinCategory};
use crate::ids::{ElemId, MorId, ObjId};
use std::collections::BTreeMap;

/// A module over `C` is a correspondence `* ↛ C`.
pub type Module = Profunctor;

/// Builds a module from fibers and a (covariant) action on non-identity
/// morphisms. `action[(g, e)]` for `g: c -> c'` and `e` in the fiber of `c`
/// gives the image in the fiber of `c'`; identity actions are filled in.
pub fn module_from_parts(
    c: &FinCategory,
    fibers: &BTreeMap<ObjId, Vec<ElemId>>,
    action: &BTreeMap<(MorId, ElemId), ElemId>,
) -> Module {
    let point = terminal();
    let star = point.objects[0].clone();
    let star_id = point.ident(&star);
    let mut elements = Vec::new();
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for (obj, elems) in fibers {
        for e in elems {
            elements.push(ElemInfo::new(e.as_str(), star.as_str(), obj.as_str()));
            left.insert((star_id.clone(), e.clone()), e.clone());
            for g in c.morphisms_out_of(obj) {
                let img = if c.is_identity(&g.id) {
                    e.clone()
                } else {
                    action
                        .get(&(g.id.clone(), e.clone()))
                        .unwrap_or_else(|| panic!("module action missing on ({}, {e})", g.id))
                        .clone()
                };
                right.insert((e.clone(), g.id.clone()), img);
            }
        }
    }
    Profunctor::new(point, c.clone(), elements, left, right)
}

/// The fiber of a module at an object, in identifier order.
pub fn module_fiber<'m>(f: &'m Module, c: &ObjId) -> Vec<&'m ElemId> {
    f.elements.iter().filter(|e| &e.over == c).map(|e| &e.id).collect()
}

/// Transports a module over `C` along `k: C ↛ D` to a module over `D`, by
/// the coend composite.
pub fn module_apply(k: &Profunctor, f: &Module) -> Module {
    assert_eq!(f.target, k.source, "module_apply: module is not over the source of k");
    compose_prof(f, k).prof
}

/// Restricts a module over `D` along a functor `t: C → D` directly:
/// the fiber at `x` is the fiber of `f` at `t(x)`, with actions through
/// `t`. Element ids are tagged with the new fiber's object.
pub fn restrict_module(f: &Module, t: &crate::fincat::functor::FinFunctor) -> Module {
    assert_eq!(f.target, t.target, "restrict_module: module is not over the target of t");
    let c = &t.source;
    let star = terminal();
    let tag = |x: &ObjId, e: &ElemId| ElemId::new(format!("{x}@{e}").as_str());
    let mut elements = Vec::new();
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    let point = star.ident(&star.objects[0]);
    for x in &c.objects {
        for e in module_fiber(f, &t.obj_image(x)) {
            let id = tag(x, e);
            elements.push(super::ElemInfo {
                id: id.clone(),
                under: star.objects[0].clone(),
                over: x.clone(),
            });
            left.insert((point.clone(), id.clone()), id.clone());
            for g in c.morphisms_out_of(x) {
                right.insert(
                    (id.clone(), g.id.clone()),
                    tag(&g.tgt, &f.right_act(e, &t.mor_image(&g.id))),
                );
            }
        }
    }
    Profunctor::new(star, c.clone(), elements, left, right)
}

/// All modules over `c` with every fiber of size at most `cap`, complete up
/// to isomorphism: exactly one canonical representative per isomorphism
/// class is returned.
pub fn enumerate_modules(c: &FinCategory, cap: usize) -> Vec<Module> {
    let mut out = Vec::new();
    let mut sizes: BTreeMap<ObjId, usize> = BTreeMap::new();
    enumerate_sizes(c, 0, cap, &mut sizes, &mut out);
    out
}

fn fiber_elem(obj: &ObjId, i: usize) -> ElemId {
    ElemId::new(format!("{obj}#{i}"))
}

fn enumerate_sizes(
    c: &FinCategory,
    next: usize,
    cap: usize,
    sizes: &mut BTreeMap<ObjId, usize>,
    out: &mut Vec<Module>,
) {
    if next == c.objects.len() {
        enumerate_actions(c, sizes, out);
        return;
    }
    for k in 0..=cap {
        sizes.insert(c.objects[next].clone(), k);
        enumerate_sizes(c, next + 1, cap, sizes, out);
    }
    sizes.remove(&c.objects[next]);
}

fn enumerate_actions(c: &FinCategory, sizes: &BTreeMap<ObjId, usize>, out: &mut Vec<Module>) {
    let fibers: BTreeMap<ObjId, Vec<ElemId>> = sizes
        .iter()
        .map(|(obj, &k)| (obj.clone(), (0..k).map(|i| fiber_elem(obj, i)).collect()))
        .collect();
    let non_identity: Vec<&crate::fincat::MorInfo> = c
        .morphisms
        .iter()
        .filter(|m| !c.is_identity(&m.id))
        .collect();
    // Backtrack over morphism action tables; composition closure is checked
    // on every fully-assigned triple.
    let mut action: BTreeMap<(MorId, ElemId), ElemId> = BTreeMap::new();
    let mut found = Vec::new();
    assign_mor(c, &fibers, &non_identity, 0, &mut action, &mut found);
    // Keep canonical representatives only.
    let mut seen: std::collections::BTreeSet<String> = std::collections::BTreeSet::new();
    for f in found {
        let key = canonical_key(&f, &fibers);
        if seen.insert(key) {
            out.push(f);
        }
    }
}

fn assign_mor(
    c: &FinCategory,
    fibers: &BTreeMap<ObjId, Vec<ElemId>>,
    rest: &[&crate::fincat::MorInfo],
    next: usize,
    action: &mut BTreeMap<(MorId, ElemId), ElemId>,
    out: &mut Vec<Module>,
) {
    if next == rest.len() {
        out.push(module_from_parts(c, fibers, action));
        return;
    }
    let m = rest[next];
    let dom = fibers[&m.src].clone();
    let cod = fibers[&m.tgt].clone();
    // All functions dom -> cod (empty domain: one function).
    let mut choices: Vec<Vec<ElemId>> = vec![Vec::new()];
    for _ in 0..dom.len() {
        let mut nxt = Vec::new();
        for partial in &choices {
            for target in &cod {
                let mut p = partial.clone();
                p.push(target.clone());
                nxt.push(p);
            }
        }
        choices = nxt;
    }
    'choice: for choice in choices {
        for (e, img) in dom.iter().zip(&choice) {
            action.insert((m.id.clone(), e.clone()), img.clone());
        }
        // Composition consistency over fully-assigned pairs.
        for ((g, f), h) in &c.compose {
            if c.is_identity(f) || c.is_identity(g) {
                continue;
            }
            let (Some(fsrc), Some(_)) = (c.src(f), c.src(g)) else { continue };
            for e in &fibers[fsrc] {
                let Some(fe) = action.get(&(f.clone(), e.clone())) else { continue };
                let Some(gfe) = action.get(&(g.clone(), fe.clone())) else { continue };
                let he = if c.is_identity(h) {
                    e.clone()
                } else {
                    match action.get(&(h.clone(), e.clone())) {
                        Some(v) => v.clone(),
                        None => continue,
                    }
                };
                if &he != gfe {
                    for e2 in &dom {
                        action.remove(&(m.id.clone(), e2.clone()));
                    }
                    continue 'choice;
                }
            }
        }
        assign_mor(c, fibers, rest, next + 1, action, out);
        for e in &dom {
            action.remove(&(m.id.clone(), e.clone()));
        }
    }
}

/// A canonical string for a module under fiberwise relabeling: the
/// lexicographically least action table over all products of fiber
/// permutations.
fn canonical_key(f: &Module, fibers: &BTreeMap<ObjId, Vec<ElemId>>) -> String {
    let objs: Vec<&ObjId> = fibers.keys().collect();
    let mut best: Option<String> = None;
    let perms_per_obj: Vec<Vec<Vec<usize>>> = objs
        .iter()
        .map(|o| permutations(fibers[*o].len()))
        .collect();
    let mut idx = vec![0usize; objs.len()];
    loop {
        // Relabeling under the current choice of permutations.
        let mut relabel: BTreeMap<&ElemId, String> = BTreeMap::new();
        for (oi, o) in objs.iter().enumerate() {
            let perm = &perms_per_obj[oi][idx[oi]];
            for (i, e) in fibers[*o].iter().enumerate() {
                relabel.insert(e, format!("{o}#{}", perm[i]));
            }
        }
        let mut lines: Vec<String> = Vec::new();
        for ((e, g), v) in &f.right {
            lines.push(format!("{}.{g}={}", relabel[e], relabel[v]));
        }
        lines.sort();
        let key = lines.join(";");
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
        // Advance the mixed-radix counter.
        let mut carry = 0;
        loop {
            if carry == idx.len() {
                let sizes: Vec<String> = objs
                    .iter()
                    .map(|o| format!("{o}:{}", fibers[*o].len()))
                    .collect();
                return format!("{}|{}", sizes.join(","), best.unwrap());
            }
            idx[carry] += 1;
            if idx[carry] < perms_per_obj[carry].len() {
                break;
            }
            idx[carry] = 0;
            carry += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Isomorphism of modules: an equivariant fiberwise bijection.
pub fn modules_isomorphic(f: &Module, g: &Module) -> bool {
    super::iso::prof_isomorphic(f, g)
}
