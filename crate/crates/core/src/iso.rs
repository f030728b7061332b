//! Lattice isomorphism by backtracking over cover-preserving bijections.

use crate::lattice::FiniteLattice;
use crate::modularity::chain_heights;

/// Per-element invariants preserved by any isomorphism.
fn signature(l: &FiniteLattice) -> Vec<[usize; 6]> {
    let h = chain_heights(l);
    (0..l.size())
        .map(|x| {
            [
                h[x].0,
                h[x].1,
                l.upper_covers(x).len(),
                l.lower_covers(x).len(),
                l.down_set(x).count(),
                l.up_set(x).count(),
            ]
        })
        .collect()
}

/// A bijection `f` with `x ≺ y ⟺ f(x) ≺ f(y)`, if one exists.
pub fn isomorphism(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() || a.covers().len() != b.covers().len() {
        return None;
    }
    let (sa, sb) = (signature(a), signature(b));
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort_unstable();
    kb.sort_unstable();
    if ka != kb {
        return None;
    }
    // bottom-up order: every lower cover is placed before its element
    let order = a.topo_order().to_vec();
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        a: &FiniteLattice,
        b: &FiniteLattice,
        sa: &[[usize; 6]],
        sb: &[[usize; 6]],
        order: &[usize],
        k: usize,
        f: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for y in 0..b.size() {
            if used[y] || sa[x] != sb[y] {
                continue;
            }
            if !a.lower_covers(x).iter().all(|&z| b.is_cover(f[z], y)) {
                continue;
            }
            f[x] = y;
            used[y] = true;
            if rec(a, b, sa, sb, order, k + 1, f, used) {
                return true;
            }
            used[y] = false;
        }
        f[x] = usize::MAX;
        false
    }
    rec(a, b, &sa, &sb, &order, 0, &mut f, &mut used).then_some(f)
}

pub fn is_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> bool {
    isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean_lattice, chain, divisor_lattice};

    #[test]
    fn divisor_of_squarefree_is_boolean() {
        assert!(is_isomorphic(
            &divisor_lattice(30).unwrap(),
            &boolean_lattice(3).unwrap()
        ));
        assert!(!is_isomorphic(
            &divisor_lattice(12).unwrap(),
            &chain(6).unwrap()
        ));
        let c3 = chain(3).unwrap();
        assert!(is_isomorphic(
            &divisor_lattice(12).unwrap(),
            &c3.product(&chain(2).unwrap())
        ));
    }

    #[test]
    fn self_dual_boolean() {
        let b = boolean_lattice(3).unwrap();
        let f = isomorphism(&b, &b.dual()).unwrap();
        for &(x, y) in b.covers() {
            assert!(b.is_cover(f[y], f[x]));
        }
    }
}
