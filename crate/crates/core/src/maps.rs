//! Maps between lattices and the transfer of `μ` and `χ` along them.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::charpoly::char_poly;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::moebius::MobiusTable;
use crate::rank::GeneralizedRank;

/// A total map `source → target` given by element images.
#[derive(Clone, Debug)]
pub struct LatticeMap {
    pub source: FiniteLattice,
    pub target: FiniteLattice,
    pub image: Vec<usize>,
}

impl LatticeMap {
    pub fn new(source: FiniteLattice, target: FiniteLattice, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.size() {
            return Err(Error::HypothesisFailed(format!(
                "map has {} images for {} elements",
                image.len(),
                source.size()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&y| y >= target.size()) {
            return Err(Error::InvalidIndex(0, bad, target.size()));
        }
        Ok(Self {
            source,
            target,
            image,
        })
    }

    pub fn identity(l: &FiniteLattice) -> Self {
        Self {
            source: l.clone(),
            target: l.clone(),
            image: (0..l.size()).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn fiber(&self, y: usize) -> Vec<usize> {
        (0..self.source.size())
            .filter(|&x| self.image[x] == y)
            .collect()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &y in &self.image {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// `τ(u ∨ v) = τ(u) ∨ τ(v)` for every pair.
    pub fn is_join_preserving(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        (0..s.size()).all(|u| {
            (u..s.size()).all(|v| self.image[s.join(u, v)] == t.join(self.image[u], self.image[v]))
        })
    }

    /// The maximum of `τ⁻¹(y)`.
    pub fn max_fiber(&self, y: usize) -> Result<usize> {
        let fiber = self.fiber(y);
        if fiber.is_empty() {
            return Err(Error::EmptyFiber(y));
        }
        fiber
            .iter()
            .copied()
            .find(|&m| fiber.iter().all(|&z| self.source.leq(z, m)))
            .ok_or(Error::NoUniqueMax(y))
    }

    /// `ρ(u, v) = ρ′(τ(u), τ(v))` for all `u <= v` in `subset`.
    pub fn is_rank_preserving(
        &self,
        subset: &[usize],
        rank_src: &GeneralizedRank,
        rank_tgt: &GeneralizedRank,
    ) -> bool {
        subset.iter().all(|&u| {
            subset.iter().all(|&v| {
                !self.source.leq(u, v)
                    || rank_src.between(u, v) == rank_tgt.between(self.image[u], self.image[v])
            })
        })
    }

    fn transfer_hypotheses(&self) -> Result<()> {
        if !self.is_join_preserving() {
            return Err(Error::HypothesisFailed("map is not join-preserving".into()));
        }
        if !self.is_surjective() {
            return Err(Error::HypothesisFailed("map is not surjective".into()));
        }
        if self.max_fiber(self.target.bottom())? != self.source.bottom() {
            return Err(Error::HypothesisFailed(
                "max of the fiber over 0̂′ is not 0̂".into(),
            ));
        }
        Ok(())
    }

    /// For a surjective join-preserving map whose fiber over `0̂′` tops out at
    /// `0̂`: `μ′(x′) = Σ_{y ∈ τ⁻¹(x′)} μ(y)` for every `x′`.
    pub fn mobius_transfer_check(&self) -> Result<bool> {
        self.transfer_hypotheses()?;
        let ms = MobiusTable::new(&self.source);
        let mt = MobiusTable::new(&self.target);
        let mut sums = vec![BigInt::zero(); self.target.size()];
        for x in 0..self.source.size() {
            sums[self.image[x]] += ms.mobius_bottom(x);
        }
        Ok(sums
            .iter()
            .enumerate()
            .all(|(y, s)| s == mt.mobius_bottom(y)))
    }

    /// Adds rank preservation on `H(source) ∪ {1̂}` and checks
    /// `χ(source) = χ(target)`.
    pub fn chi_transfer_check(
        &self,
        rank_src: &GeneralizedRank,
        rank_tgt: &GeneralizedRank,
    ) -> Result<bool> {
        self.transfer_hypotheses()?;
        let ms = MobiusTable::new(&self.source);
        let mut subset = ms.support();
        if !subset.contains(&self.source.top()) {
            subset.push(self.source.top());
        }
        if !self.is_rank_preserving(&subset, rank_src, rank_tgt) {
            return Err(Error::HypothesisFailed(
                "map is not rank-preserving on H ∪ {1̂}".into(),
            ));
        }
        let mt = MobiusTable::new(&self.target);
        Ok(char_poly(&ms, rank_src) == char_poly(&mt, rank_tgt))
    }
}

/// `τ_b : [a ∧ b, a] → [b, a ∨ b]`, `v ↦ v ∨ b`, on materialized intervals.
pub fn tau_join(l: &FiniteLattice, a: usize, b: usize) -> LatticeMap {
    let src = l.interval_view(l.meet(a, b), a).expect("a ∧ b <= a");
    let tgt = l.interval_view(b, l.join(a, b)).expect("b <= a ∨ b");
    let image = src
        .elements
        .iter()
        .map(|&v| tgt.local(l.join(v, b)).expect("in range"))
        .collect();
    LatticeMap {
        source: src.materialize(),
        target: tgt.materialize(),
        image,
    }
}

/// `σ_a : [b, a ∨ b] → [a ∧ b, a]`, `u ↦ u ∧ a`.
pub fn sigma_meet(l: &FiniteLattice, a: usize, b: usize) -> LatticeMap {
    let src = l.interval_view(b, l.join(a, b)).expect("b <= a ∨ b");
    let tgt = l.interval_view(l.meet(a, b), a).expect("a ∧ b <= a");
    let image = src
        .elements
        .iter()
        .map(|&u| tgt.local(l.meet(u, a)).expect("in range"))
        .collect();
    LatticeMap {
        source: src.materialize(),
        target: tgt.materialize(),
        image,
    }
}

/// Parent rank restricted to `[lo, hi]`, rebased at `lo`, in the local
/// indexing used by [`FiniteLattice::interval`].
pub fn interval_rank(
    l: &FiniteLattice,
    rank: &GeneralizedRank,
    lo: usize,
    hi: usize,
) -> GeneralizedRank {
    let elements = l.interval_elements(lo, hi);
    let local_bottom = elements.binary_search(&lo).expect("lo in interval");
    rank.restrict(&elements, local_bottom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FiniteLattice {
        FiniteLattice::from_order((0..n).map(|i| i.to_string()).collect(), |a, b| a <= b).unwrap()
    }

    fn b2() -> FiniteLattice {
        FiniteLattice::build(
            ["{}", "{1}", "{2}", "{1,2}"].map(String::from).to_vec(),
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn identity_map() {
        let l = b2();
        let m = LatticeMap::identity(&l);
        assert!(m.is_join_preserving() && m.is_surjective());
        for x in 0..4 {
            assert_eq!(m.max_fiber(x).unwrap(), x);
        }
        assert!(m.mobius_transfer_check().unwrap());
        let r = GeneralizedRank::ordinary(&l).unwrap();
        assert!(m.chi_transfer_check(&r, &r).unwrap());
    }

    #[test]
    fn constant_map_to_top() {
        let l = b2();
        let m = LatticeMap::new(l.clone(), l.clone(), vec![3; 4]).unwrap();
        assert!(m.is_join_preserving());
        assert_eq!(m.max_fiber(3).unwrap(), 3);
        assert_eq!(m.max_fiber(0).unwrap_err(), Error::EmptyFiber(0));
        assert!(matches!(
            m.mobius_transfer_check(),
            Err(Error::HypothesisFailed(_))
        ));
    }

    #[test]
    fn chain_quotient() {
        // 0 ↦ 0, {1, 2} ↦ 1
        let m = LatticeMap::new(chain(3), chain(2), vec![0, 1, 1]).unwrap();
        assert!(m.mobius_transfer_check().unwrap());
        assert_eq!(m.max_fiber(1).unwrap(), 2);
    }

    #[test]
    fn no_unique_max() {
        // everything above 0̂ collapses onto the top of a 2-chain
        let m = LatticeMap::new(b2(), chain(2), vec![0, 1, 1, 1]).unwrap();
        assert!(m.is_join_preserving());
        let m = LatticeMap::new(b2(), chain(3), vec![0, 1, 1, 1]).unwrap();
        assert_eq!(m.max_fiber(1).unwrap(), 3);
        let m = LatticeMap::new(b2(), chain(3), vec![0, 1, 1, 2]).unwrap();
        assert!(!m.is_join_preserving());
        assert_eq!(m.max_fiber(1).unwrap_err(), Error::NoUniqueMax(1));
    }

    #[test]
    fn tau_with_bottom_is_identity() {
        let l = b2();
        let m = tau_join(&l, 3, 0);
        assert_eq!(m.source.size(), 4);
        assert_eq!(m.image, vec![0, 1, 2, 3]);
    }

    #[test]
    fn sigma_inverts_tau_on_boolean() {
        let l = b2();
        let t = tau_join(&l, 1, 2);
        let s = sigma_meet(&l, 1, 2);
        for v in 0..t.source.size() {
            assert_eq!(s.apply(t.apply(v)), v);
        }
    }
}
