//! Combinatorics of the simplex category: monotone maps between finite
//! linear orders, the active/inert and surjective/injective factorization
//! systems, the cellular predicate, and the interval join monoid.
//!
//! Maps are stored by their value sequence, which is the canonical form.

pub mod bimod;

use std::fmt;

/// A monotone map `[n] -> [m]`, stored as the value sequence
/// `f(0) <= ... <= f(n)` with values in `0..=m`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SimplexMap {
    pub domain: usize,
    pub codomain: usize,
    pub values: Vec<usize>,
}

/// Which class of maps to enumerate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapClass {
    All,
    Active,
    Inert,
    Cellular,
    Surjective,
    Injective,
}

impl SimplexMap {
    pub fn new(domain: usize, codomain: usize, values: Vec<usize>) -> Self {
        SimplexMap { domain, codomain, values }
    }

    pub fn identity(n: usize) -> Self {
        SimplexMap::new(n, n, (0..=n).collect())
    }

    /// Structural well-formedness: right length, in-range, monotone.
    pub fn is_valid(&self) -> bool {
        self.values.len() == self.domain + 1
            && self.values.iter().all(|&v| v <= self.codomain)
            && self.values.windows(2).all(|w| w[0] <= w[1])
    }

    /// Endpoint-preserving: `f(0) = 0` and `f(n) = m`.
    pub fn is_active(&self) -> bool {
        self.values.first() == Some(&0) && self.values.last() == Some(&self.codomain)
    }

    /// A subinterval inclusion: consecutive values rise by exactly 1.
    pub fn is_inert(&self) -> bool {
        self.values.windows(2).all(|w| w[1] == w[0] + 1)
    }

    /// Cellular: consecutive values rise by at most 1.
    pub fn is_cellular(&self) -> bool {
        self.values.windows(2).all(|w| w[1] <= w[0] + 1)
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain + 1];
        for &v in &self.values {
            hit[v] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn in_class(&self, class: MapClass) -> bool {
        match class {
            MapClass::All => true,
            MapClass::Active => self.is_active(),
            MapClass::Inert => self.is_inert(),
            MapClass::Cellular => self.is_cellular(),
            MapClass::Surjective => self.is_surjective(),
            MapClass::Injective => self.is_injective(),
        }
    }

    /// Composite `g ∘ f` (`self` applied first). Panics when middles differ.
    pub fn then(&self, g: &SimplexMap) -> SimplexMap {
        assert_eq!(self.codomain, g.domain, "SimplexMap::then: middle sizes differ");
        SimplexMap::new(
            self.domain,
            g.codomain,
            self.values.iter().map(|&v| g.values[v]).collect(),
        )
    }
}

impl fmt::Display for SimplexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "[{}]->[{}]:({})",
            self.domain,
            self.codomain,
            vals.join(",")
        )
    }
}

/// Active/inert factorization `f = i ∘ a`: the active part squashes onto the
/// span `[0, f(n)-f(0)]`, the inert part includes `[f(0), f(n)]` into `[m]`.
/// The decomposition is unique (verified exhaustively in the tests).
pub fn factor_active_inert(f: &SimplexMap) -> (SimplexMap, SimplexMap) {
    let lo = *f.values.first().expect("maps have nonempty domains");
    let hi = *f.values.last().unwrap();
    let span = hi - lo;
    let active = SimplexMap::new(
        f.domain,
        span,
        f.values.iter().map(|&v| v - lo).collect(),
    );
    let inert = SimplexMap::new(span, f.codomain, (lo..=hi).collect());
    (active, inert)
}

/// Surjective/injective factorization `f = j ∘ s`: the surjection collapses
/// onto the distinct values, the injection picks them out. Unique.
pub fn factor_surj_inj(f: &SimplexMap) -> (SimplexMap, SimplexMap) {
    let mut distinct: Vec<usize> = f.values.clone();
    distinct.dedup();
    let surj = SimplexMap::new(
        f.domain,
        distinct.len() - 1,
        f.values
            .iter()
            .map(|v| distinct.iter().position(|d| d == v).unwrap())
            .collect(),
    );
    let inj = SimplexMap::new(distinct.len() - 1, f.codomain, distinct);
    (surj, inj)
}

/// Complete, duplicate-free enumeration of the monotone maps `[n] -> [m]` in
/// the given class, in lexicographic order of value sequences.
pub fn enumerate_maps(n: usize, m: usize, class: MapClass) -> Vec<SimplexMap> {
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(n + 1);
    enumerate_rec(n, m, 0, &mut values, &mut out);
    out.into_iter().filter(|f| f.in_class(class)).collect()
}

fn enumerate_rec(
    n: usize,
    m: usize,
    min: usize,
    values: &mut Vec<usize>,
    out: &mut Vec<SimplexMap>,
) {
    if values.len() == n + 1 {
        out.push(SimplexMap::new(n, m, values.clone()));
        return;
    }
    for v in min..=m {
        values.push(v);
        enumerate_rec(n, m, v, values, out);
        values.pop();
    }
}

/// The join of intervals: `[n] ⊕ [m] = [n+m+1]`, with the empty interval
/// `-1` as unit. Defined for arguments `>= -1`.
pub fn interval_join(n: i64, m: i64) -> i64 {
    assert!(n >= -1 && m >= -1, "interval_join arguments must be >= -1");
    n + m + 1
}
