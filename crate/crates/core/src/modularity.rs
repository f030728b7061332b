//! Modular pairs, left-modular and modular elements.
//!
//! `(x, y)` is a modular pair when `z ∨ (x ∧ y) = (z ∨ x) ∧ y` for every
//! `z < y`. An element is left-modular when it forms a modular pair with
//! every `y`, and modular when additionally every `(y, x)` is one.

use std::collections::HashMap;

use serde::Serialize;

use crate::lattice::FiniteLattice;

/// The four equivalent left-modularity tests for one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LMReport {
    pub element: usize,
    /// `(x, y)` is a modular pair for every `y`.
    pub by_definition: bool,
    /// For all `z < y`: `x ∧ z ≠ x ∧ y` or `x ∨ z ≠ x ∨ y`.
    pub by_cond_ii: bool,
    /// For all covers `z ≺ y`: exactly one of `x ∧ z = x ∧ y`, `x ∨ z = x ∨ y`.
    pub by_cond_iii: bool,
    /// No interval containing `x` has two comparable complements of `x`.
    pub by_cond_iv: bool,
}

impl LMReport {
    pub fn consistent(&self) -> bool {
        let v = self.by_definition;
        self.by_cond_ii == v && self.by_cond_iii == v && self.by_cond_iv == v
    }
}

/// First `z < y` breaking `z ∨ (x ∧ y) = (z ∨ x) ∧ y`, if any.
pub fn modular_pair_witness(l: &FiniteLattice, x: usize, y: usize) -> Option<usize> {
    let xy = l.meet(x, y);
    l.down_set(y)
        .iter()
        .filter(|&z| z != y)
        .find(|&z| l.join(z, xy) != l.meet(l.join(z, x), y))
}

pub fn is_modular_pair(l: &FiniteLattice, x: usize, y: usize) -> bool {
    modular_pair_witness(l, x, y).is_none()
}

pub fn is_left_modular(l: &FiniteLattice, x: usize) -> bool {
    (0..l.size()).all(|y| is_modular_pair(l, x, y))
}

pub fn is_modular_element(l: &FiniteLattice, x: usize) -> bool {
    (0..l.size()).all(|y| is_modular_pair(l, x, y) && is_modular_pair(l, y, x))
}

/// A `y` such that `(y, x)` is not a modular pair, found when `x` is
/// left-modular but not modular.
pub fn right_modular_failure(l: &FiniteLattice, x: usize) -> Option<(usize, usize)> {
    (0..l.size()).find_map(|y| modular_pair_witness(l, y, x).map(|z| (y, z)))
}

fn cond_ii(l: &FiniteLattice, x: usize) -> bool {
    (0..l.size()).all(|y| {
        let (my, jy) = (l.meet(x, y), l.join(x, y));
        l.down_set(y)
            .iter()
            .all(|z| z == y || l.meet(x, z) != my || l.join(x, z) != jy)
    })
}

fn cond_iii(l: &FiniteLattice, x: usize) -> bool {
    (0..l.size()).all(|y| {
        l.lower_covers(y).iter().all(|&z| {
            let same_meet = l.meet(x, z) == l.meet(x, y);
            let same_join = l.join(x, z) == l.join(x, y);
            same_meet != same_join
        })
    })
}

// Each z is a complement of x in exactly one interval containing x, namely
// [z ∧ x, z ∨ x]. Bucketing by that key enumerates every complement set.
fn cond_iv(l: &FiniteLattice, x: usize) -> bool {
    let mut buckets: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for z in 0..l.size() {
        buckets
            .entry((l.meet(x, z), l.join(x, z)))
            .or_default()
            .push(z);
    }
    buckets.values().all(|comps| {
        comps
            .iter()
            .enumerate()
            .all(|(i, &a)| comps[i + 1..].iter().all(|&b| !l.comparable(a, b)))
    })
}

pub fn lm_characterizations(l: &FiniteLattice, x: usize) -> LMReport {
    LMReport {
        element: x,
        by_definition: is_left_modular(l, x),
        by_cond_ii: cond_ii(l, x),
        by_cond_iii: cond_iii(l, x),
        by_cond_iv: cond_iv(l, x),
    }
}

pub fn left_modular_elements(l: &FiniteLattice) -> Vec<usize> {
    (0..l.size()).filter(|&x| is_left_modular(l, x)).collect()
}

pub fn modular_elements(l: &FiniteLattice) -> Vec<usize> {
    (0..l.size())
        .filter(|&x| is_modular_element(l, x))
        .collect()
}

/// Shortest and longest maximal chain length from the bottom to each element.
pub fn chain_heights(l: &FiniteLattice) -> Vec<(usize, usize)> {
    let mut h = vec![(0usize, 0usize); l.size()];
    for &y in l.topo_order() {
        let lower = l.lower_covers(y);
        if lower.is_empty() {
            continue;
        }
        let lo = lower.iter().map(|&z| h[z].0).min().unwrap() + 1;
        let hi = lower.iter().map(|&z| h[z].1).max().unwrap() + 1;
        h[y] = (lo, hi);
    }
    h
}

pub fn is_graded(l: &FiniteLattice) -> bool {
    chain_heights(l).iter().all(|(a, b)| a == b)
}

/// A pair with `ρ(x) + ρ(y) < ρ(x ∧ y) + ρ(x ∨ y)`. `None` also when the
/// lattice is not graded; check [`is_graded`] first.
pub fn semimodular_witness(l: &FiniteLattice) -> Option<(usize, usize)> {
    let h = chain_heights(l);
    let n = l.size();
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| h[x].0 + h[y].0 < h[l.meet(x, y)].0 + h[l.join(x, y)].0)
}

pub fn is_semimodular(l: &FiniteLattice) -> bool {
    is_graded(l) && semimodular_witness(l).is_none()
}

/// Maximal chains all of whose elements are left-modular, in lexicographic
/// order of element indices, at most `cap` of them.
pub fn left_modular_chains(l: &FiniteLattice, cap: usize) -> Vec<Vec<usize>> {
    let lm: Vec<bool> = (0..l.size()).map(|x| is_left_modular(l, x)).collect();
    chains_through(l, &lm, cap)
}

/// The lexicographically first maximal chain of left-modular elements.
pub fn find_left_modular_chain(l: &FiniteLattice) -> Option<Vec<usize>> {
    left_modular_chains(l, 1).pop()
}

/// Maximal chains using only elements with `allowed[x]`, lexicographic, up to `cap`.
pub fn chains_through(l: &FiniteLattice, allowed: &[bool], cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if cap > 0 {
        for_each_chain(l, allowed, |c| {
            out.push(c.to_vec());
            out.len() < cap
        });
    }
    out
}

/// Visits maximal chains through `allowed` elements in lexicographic order
/// until `visit` returns `false`.
pub fn for_each_chain(
    l: &FiniteLattice,
    allowed: &[bool],
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    if !allowed[l.bottom()] || !allowed[l.top()] {
        return;
    }
    // dead[x]: no allowed saturated path from x reaches the top
    let mut dead = vec![false; l.size()];
    let mut path = vec![l.bottom()];
    let mut stop = false;
    dfs_chains(l, allowed, &mut dead, &mut path, &mut visit, &mut stop);
}

fn dfs_chains(
    l: &FiniteLattice,
    allowed: &[bool],
    dead: &mut [bool],
    path: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
    stop: &mut bool,
) -> bool {
    let v = *path.last().unwrap();
    if v == l.top() {
        *stop = !visit(path);
        return true;
    }
    let mut found = false;
    for &w in l.upper_covers(v) {
        if *stop {
            return true;
        }
        if !allowed[w] || dead[w] {
            continue;
        }
        path.push(w);
        if dfs_chains(l, allowed, dead, path, visit, stop) {
            found = true;
        } else {
            dead[w] = true;
        }
        path.pop();
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 0 < a < b < 1 and 0 < c < 1.
    fn pentagon() -> FiniteLattice {
        FiniteLattice::build(
            ["0", "a", "b", "c", "1"].map(String::from).to_vec(),
            vec![(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        )
        .unwrap()
    }

    #[test]
    fn pentagon_c_fails_every_test() {
        let l = pentagon();
        let r = lm_characterizations(&l, 3);
        assert_eq!(
            r,
            LMReport {
                element: 3,
                by_definition: false,
                by_cond_ii: false,
                by_cond_iii: false,
                by_cond_iv: false
            }
        );
        // witness a ≺ b with equal meets and joins against c
        assert_eq!((l.meet(3, 1), l.meet(3, 2)), (0, 0));
        assert_eq!((l.join(3, 1), l.join(3, 2)), (4, 4));
    }

    #[test]
    fn pentagon_left_modular_set_and_chain() {
        let l = pentagon();
        assert_eq!(left_modular_elements(&l), vec![0, 1, 2, 4]);
        assert_eq!(find_left_modular_chain(&l), Some(vec![0, 1, 2, 4]));
        for x in 0..5 {
            assert!(lm_characterizations(&l, x).consistent());
        }
    }

    #[test]
    fn chain_everything_left_modular() {
        let l = FiniteLattice::from_order((0..4).map(|i| i.to_string()).collect(), |a, b| a <= b)
            .unwrap();
        for x in 0..4 {
            let r = lm_characterizations(&l, x);
            assert!(r.by_definition && r.consistent());
            assert!(is_modular_element(&l, x));
        }
        assert!(is_semimodular(&l));
    }

    #[test]
    fn comparable_pairs_are_modular() {
        let l = pentagon();
        for x in 0..5 {
            for y in 0..5 {
                if l.comparable(x, y) {
                    assert!(is_modular_pair(&l, x, y));
                }
            }
        }
    }

    #[test]
    fn hexagon_has_no_left_modular_chain() {
        let l = FiniteLattice::build(
            ["0", "a1", "a2", "b1", "b2", "1"]
                .map(String::from)
                .to_vec(),
            vec![(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)],
        )
        .unwrap();
        assert_eq!(left_modular_elements(&l), vec![0, 5]);
        assert_eq!(find_left_modular_chain(&l), None);
    }

    #[test]
    fn pentagon_is_not_graded() {
        let l = pentagon();
        assert!(!is_graded(&l));
        assert!(!is_semimodular(&l));
    }
}
