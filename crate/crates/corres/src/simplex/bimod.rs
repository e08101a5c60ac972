//! The bimodule bicategory on the linear order `0 < 1 < ... < n`: hom-cells
//! from `i` to `j` are subdivided interval decorations — an active injective
//! subdivision `[k] -> [j-i]` together with one interval (possibly empty,
//! encoded `-1`) at each of the `k+1` subdivision vertices. Endomorphism
//! cells at a single point are exactly intervals under join.
//!
//! Composition glues the subdivisions at the shared endpoint and joins the
//! two decorations that meet there; all other decorations carry over. The
//! hom-cells from `i` to `j` are empty when `i > j`, and infinite otherwise,
//! so enumeration is bounded by a maximum decoration size.

use super::{interval_join, SimplexMap};
use std::fmt;

/// A hom-cell from `src` to `tgt` in the bimodule bicategory on `0..=n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BimodHom {
    /// Ambient order size: cells live over `0..=n`.
    pub n: usize,
    pub src: usize,
    pub tgt: usize,
    /// Active injective `[k] -> [tgt - src]`: the subdivision vertices.
    pub subdivision: SimplexMap,
    /// One interval per subdivision vertex (`k+1` entries, each `>= -1`).
    pub decorations: Vec<i64>,
}

impl BimodHom {
    pub fn identity(n: usize, i: usize) -> Self {
        BimodHom {
            n,
            src: i,
            tgt: i,
            subdivision: SimplexMap::identity(0),
            decorations: vec![-1],
        }
    }

    pub fn is_valid(&self) -> bool {
        self.src <= self.tgt
            && self.tgt <= self.n
            && self.subdivision.is_valid()
            && self.subdivision.is_active()
            && self.subdivision.is_injective()
            && self.subdivision.codomain == self.tgt - self.src
            && self.decorations.len() == self.subdivision.domain + 1
            && self.decorations.iter().all(|&d| d >= -1)
    }
}

impl fmt::Display for BimodHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let decs: Vec<String> = self.decorations.iter().map(|d| d.to_string()).collect();
        write!(
            f,
            "{}->{} via {} dec ({})",
            self.src,
            self.tgt,
            self.subdivision,
            decs.join(",")
        )
    }
}

/// Glue active injective subdivisions end to start: `a: [k] -> [p]` followed
/// by `b: [l] -> [q]` yields `[k+l] -> [p+q]`, identifying `a`'s last vertex
/// with `b`'s first.
pub fn glue_active_injective(a: &SimplexMap, b: &SimplexMap) -> SimplexMap {
    assert!(a.is_active() && a.is_injective(), "glue expects active injective maps");
    assert!(b.is_active() && b.is_injective(), "glue expects active injective maps");
    let mut values = a.values.clone();
    values.extend(b.values.iter().skip(1).map(|&v| v + a.codomain));
    SimplexMap::new(a.domain + b.domain, a.codomain + b.codomain, values)
}

/// Horizontal composition of hom-cells `x: i -> j` and `y: j -> t`: glue the
/// subdivisions at `j` and join the decorations meeting there.
pub fn compose_bimod(x: &BimodHom, y: &BimodHom) -> BimodHom {
    assert_eq!(x.n, y.n, "compose_bimod: cells from different ambient orders");
    assert_eq!(x.tgt, y.src, "compose_bimod: endpoints do not meet");
    let subdivision = glue_active_injective(&x.subdivision, &y.subdivision);
    let mut decorations = x.decorations[..x.decorations.len() - 1].to_vec();
    decorations.push(interval_join(
        *x.decorations.last().unwrap(),
        y.decorations[0],
    ));
    decorations.extend_from_slice(&y.decorations[1..]);
    BimodHom {
        n: x.n,
        src: x.src,
        tgt: y.tgt,
        subdivision,
        decorations,
    }
}

/// All active injective maps `[k] -> [d]` over every `k`, i.e. all ways to
/// choose subdivision vertices: subsets of the interior `1..d`.
fn subdivisions(d: usize) -> Vec<SimplexMap> {
    if d == 0 {
        return vec![SimplexMap::identity(0)];
    }
    let interior: Vec<usize> = (1..d).collect();
    let mut out = Vec::new();
    for mask in 0..(1u32 << interior.len()) {
        let mut values = vec![0usize];
        for (bit, &v) in interior.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                values.push(v);
            }
        }
        values.push(d);
        out.push(SimplexMap::new(values.len() - 1, d, values));
    }
    out.sort();
    out
}

/// All hom-cells from `i` to `j` whose decorations all have size at most
/// `size_bound`. Empty when `i > j`. Complete relative to the bound (the full
/// hom-category is infinite).
pub fn bimod_hom(n: usize, i: usize, j: usize, size_bound: usize) -> Vec<BimodHom> {
    assert!(j <= n && i <= n, "bimod_hom endpoints must lie in 0..=n");
    if i > j {
        return Vec::new();
    }
    let mut out = Vec::new();
    for sub in subdivisions(j - i) {
        let slots = sub.domain + 1;
        let choices: Vec<i64> = (-1..=size_bound as i64).collect();
        let mut stack: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..slots {
            let mut next = Vec::new();
            for partial in &stack {
                for &c in &choices {
                    let mut p = partial.clone();
                    p.push(c);
                    next.push(p);
                }
            }
            stack = next;
        }
        for decorations in stack {
            out.push(BimodHom {
                n,
                src: i,
                tgt: j,
                subdivision: sub.clone(),
                decorations,
            });
        }
    }
    out.sort();
    out
}

/// The unital variant: endomorphism intervals are collapsed away, leaving
/// only the subdivisions themselves — all active injective maps
/// `[k] -> [j-i]`. Finite, enumerated completely. Empty when `i > j`.
pub fn unital_bimod_hom(n: usize, i: usize, j: usize) -> Vec<SimplexMap> {
    assert!(j <= n && i <= n, "unital_bimod_hom endpoints must lie in 0..=n");
    if i > j {
        return Vec::new();
    }
    subdivisions(j - i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoint_identity_cell_is_valid() {
        let id = BimodHom::identity(3, 1);
        assert!(id.is_valid());
        assert_eq!(id.decorations, vec![-1]);
    }

    #[test]
    fn hom_is_empty_below_the_diagonal() {
        assert!(bimod_hom(2, 2, 0, 3).is_empty());
        assert!(bimod_hom(2, 1, 0, 3).is_empty());
        assert!(unital_bimod_hom(2, 2, 1).is_empty());
    }

    #[test]
    fn unital_endomorphisms_are_unique() {
        for n in 0..=3usize {
            for i in 0..=n {
                let cells = unital_bimod_hom(n, i, i);
                assert_eq!(cells.len(), 1, "only the empty subdivision of [0]");
                assert_eq!(cells[0], SimplexMap::identity(0));
            }
        }
    }

    #[test]
    fn unital_cells_zero_to_two() {
        // Subdivisions of [2]: either the single step 0 -> 2 or the chain
        // through 1.
        let cells = unital_bimod_hom(2, 0, 2);
        assert_eq!(cells.len(), 2);
        assert!(cells.contains(&SimplexMap::new(1, 2, vec![0, 2])));
        assert!(cells.contains(&SimplexMap::identity(2)));
    }

    #[test]
    fn endomorphism_cells_compose_by_interval_join() {
        for a in -1..=3i64 {
            for b in -1..=3i64 {
                let x = BimodHom {
                    n: 2,
                    src: 1,
                    tgt: 1,
                    subdivision: SimplexMap::identity(0),
                    decorations: vec![a],
                };
                let y = BimodHom { decorations: vec![b], ..x.clone() };
                let z = compose_bimod(&x, &y);
                assert_eq!(z.decorations, vec![interval_join(a, b)]);
                assert_eq!(z.subdivision, SimplexMap::identity(0));
            }
        }
    }

    #[test]
    fn composition_glues_and_joins_at_the_seam() {
        let x = BimodHom {
            n: 2,
            src: 0,
            tgt: 1,
            subdivision: SimplexMap::identity(1),
            decorations: vec![0, 1],
        };
        let y = BimodHom {
            n: 2,
            src: 1,
            tgt: 2,
            subdivision: SimplexMap::identity(1),
            decorations: vec![2, -1],
        };
        let z = compose_bimod(&x, &y);
        assert!(z.is_valid());
        assert_eq!(z.subdivision, SimplexMap::identity(2));
        assert_eq!(z.decorations, vec![0, interval_join(1, 2), -1]);
        assert_eq!(z.decorations, vec![0, 4, -1]);
    }

    #[test]
    fn identities_are_units_for_composition() {
        for x in bimod_hom(2, 0, 2, 2) {
            let left = compose_bimod(&BimodHom::identity(2, 0), &x);
            let right = compose_bimod(&x, &BimodHom::identity(2, 2));
            assert_eq!(left, x);
            assert_eq!(right, x);
        }
    }

    #[test]
    fn composition_is_associative_within_bound_three() {
        // Every composable triple between endpoints drawn from 0..=2, with
        // all decorations of size at most 3.
        let n = 2usize;
        for i in 0..=n {
            for j in i..=n {
                for k in j..=n {
                    for l in k..=n {
                        let xs = bimod_hom(n, i, j, 3);
                        let ys = bimod_hom(n, j, k, 3);
                        let zs = bimod_hom(n, k, l, 3);
                        for x in &xs {
                            for y in &ys {
                                let xy = compose_bimod(x, y);
                                for z in &zs {
                                    let yz = compose_bimod(y, z);
                                    assert_eq!(
                                        compose_bimod(&xy, z),
                                        compose_bimod(x, &yz),
                                        "associativity for {x} ; {y} ; {z}"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_is_complete_and_valid_for_small_bounds() {
        // 0 -> 1 has one subdivision with two vertex slots; entries range
        // over {-1, 0, 1} at bound 1.
        let cells = bimod_hom(2, 0, 1, 1);
        assert_eq!(cells.len(), 9);
        assert!(cells.iter().all(|c| c.is_valid()));
        // 0 -> 2 has the one-step subdivision (2 slots) and the two-step
        // chain (3 slots): 3^2 + 3^3 at bound 1.
        let cells = bimod_hom(2, 0, 2, 1);
        assert_eq!(cells.len(), 9 + 27);
        assert!(cells.iter().all(|c| c.is_valid()));
        let mut dedup = cells.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), cells.len());
    }
}
