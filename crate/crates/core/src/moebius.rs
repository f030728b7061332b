//! Möbius function of a finite lattice.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// One row `μ(x, ·)` restricted to the up-set of `x`.
#[derive(Debug)]
struct Row {
    // ascending element indices y >= x
    elements: Vec<usize>,
    values: Vec<BigInt>,
}

/// Möbius values of a lattice, computed one source row at a time and cached.
#[derive(Debug)]
pub struct MobiusTable<'a> {
    lattice: &'a FiniteLattice,
    rows: Vec<OnceLock<Row>>,
}

impl<'a> MobiusTable<'a> {
    pub fn new(lattice: &'a FiniteLattice) -> Self {
        Self {
            lattice,
            rows: (0..lattice.size()).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn lattice(&self) -> &'a FiniteLattice {
        self.lattice
    }

    fn row(&self, x: usize) -> &Row {
        self.rows[x].get_or_init(|| compute_row(self.lattice, x))
    }

    /// `μ(x, y)`; errors unless `x <= y`.
    pub fn mobius(&self, x: usize, y: usize) -> Result<BigInt> {
        self.get(x, y).cloned().ok_or(Error::NotComparable(x, y))
    }

    /// Borrowing form of [`mobius`](Self::mobius); `None` when `x` is not below `y`.
    pub fn get(&self, x: usize, y: usize) -> Option<&BigInt> {
        let row = self.row(x);
        row.elements.binary_search(&y).ok().map(|i| &row.values[i])
    }

    /// `μ(0̂, x)`.
    pub fn mobius_bottom(&self, x: usize) -> &BigInt {
        self.get(self.lattice.bottom(), x)
            .expect("bottom is below everything")
    }

    /// `μ(0̂, x)` for every element, indexed like the labels.
    pub fn bottom_vector(&self) -> Vec<BigInt> {
        (0..self.lattice.size())
            .map(|x| self.mobius_bottom(x).clone())
            .collect()
    }

    /// `μ(0̂, 1̂)`.
    pub fn mu_top(&self) -> BigInt {
        self.mobius_bottom(self.lattice.top()).clone()
    }

    pub fn zeta(&self, x: usize, y: usize) -> u8 {
        zeta(self.lattice, x, y)
    }

    /// The support `H(L)`: elements with nonzero `μ(0̂, x)`, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.support_from(self.lattice.bottom())
    }

    /// Support of the interval `[lo, 1̂]`'s Möbius function from `lo`.
    pub fn support_from(&self, lo: usize) -> Vec<usize> {
        let row = self.row(lo);
        row.elements
            .iter()
            .zip(&row.values)
            .filter(|(_, v)| !v.is_zero())
            .map(|(&e, _)| e)
            .collect()
    }

    /// Support of `μ` on the interval `[lo, hi]`.
    pub fn interval_support(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.support_from(lo)
            .into_iter()
            .filter(|&y| self.lattice.leq(y, hi))
            .collect()
    }

    /// Checks the complementation expansion of `μ(0̂, y)` with respect to
    /// `a <= y`: the sum over pairs `a′, a″` of complements of `a` in `[0̂, y]`
    /// of `μ(0̂, a′) ζ(a′, a″) μ(a″, y)` must equal `μ(0̂, y)`.
    pub fn crapo_expansion_check(&self, y: usize, a: usize) -> Result<bool> {
        let l = self.lattice;
        let comps = l.complements_in(a, l.bottom(), y)?;
        let mut sum = BigInt::zero();
        for &c1 in &comps {
            for &c2 in &comps {
                if zeta(l, c1, c2) == 1 {
                    sum += self.mobius_bottom(c1) * self.get(c2, y).expect("c2 <= y");
                }
            }
        }
        Ok(&sum == self.mobius_bottom(y))
    }
}

pub fn zeta(l: &FiniteLattice, x: usize, y: usize) -> u8 {
    u8::from(l.leq(x, y))
}

fn compute_row(l: &FiniteLattice, x: usize) -> Row {
    let up = l.up_set(x);
    let order: Vec<usize> = l
        .topo_order()
        .iter()
        .copied()
        .filter(|&y| up.contains(y))
        .collect();
    let mut pos = vec![usize::MAX; l.size()];
    for (i, &y) in order.iter().enumerate() {
        pos[y] = i;
    }
    let mut mu: Vec<BigInt> = Vec::with_capacity(order.len());
    for (i, &y) in order.iter().enumerate() {
        if i == 0 {
            mu.push(BigInt::one());
            continue;
        }
        let mut s = BigInt::zero();
        for z in up.intersection(l.down_set(y)).iter() {
            if z != y {
                s += &mu[pos[z]];
            }
        }
        mu.push(-s);
    }
    let mut pairs: Vec<(usize, BigInt)> = order.into_iter().zip(mu).collect();
    pairs.sort_unstable_by_key(|p| p.0);
    let (elements, values) = pairs.into_iter().unzip();
    Row { elements, values }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> FiniteLattice {
        FiniteLattice::build(
            vec!["0".into(), "m".into(), "1".into()],
            vec![(0, 1), (1, 2)],
        )
        .unwrap()
    }

    #[test]
    fn chain_values() {
        let l = chain3();
        let m = MobiusTable::new(&l);
        assert_eq!(
            m.bottom_vector(),
            vec![1.into(), BigInt::from(-1), 0.into()]
        );
        assert_eq!(m.mobius(1, 1).unwrap(), BigInt::one());
        assert!(m.mobius(2, 0).is_err());
        assert_eq!(m.support(), vec![0, 1]);
        assert_eq!(m.zeta(0, 2), 1);
        assert_eq!(m.zeta(2, 0), 0);
    }

    #[test]
    fn crapo_reduces_for_a_equal_y() {
        let l = chain3();
        let m = MobiusTable::new(&l);
        for y in 0..3 {
            for a in 0..3 {
                if l.leq(a, y) {
                    assert!(m.crapo_expansion_check(y, a).unwrap());
                }
            }
        }
        assert!(m.crapo_expansion_check(0, 2).is_err());
    }

    #[test]
    fn single_element() {
        let l = FiniteLattice::build(vec!["*".into()], vec![]).unwrap();
        assert_eq!(MobiusTable::new(&l).bottom_vector(), vec![BigInt::one()]);
    }
}
