//! Generators for chains, boolean and divisor lattices, partition and
//! noncrossing partition lattices, Tamari lattices and shuffle posets.
//!
//! Elements are indexed by rank (bottom first, top last) and then by label.
//! Size caps apply per family; the `LF_CAP` environment variable replaces the
//! family cap with its value.

pub mod formulas;
pub mod partition;
pub mod shuffle;
pub mod tamari;

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

pub use partition::{all_partitions, SetPartition};
pub use shuffle::{crossed_letters, order_leq, shuffle_join, shuffle_meet, Letter, ShuffleWord};
pub use tamari::Tree;

pub const BOOLEAN_CAP: usize = 10;
pub const DIVISOR_CAP: usize = 1_000_000;
pub const PARTITION_CAP: usize = 6;
pub const NONCROSSING_CAP: usize = 8;
pub const SHUFFLE_CAP: usize = 7;
pub const TAMARI_CAP: usize = 6;
pub const CHAIN_CAP: usize = 10_000;

fn check_cap(family: &'static str, n: usize, default: usize) -> Result<()> {
    let cap = std::env::var("LF_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default);
    if n > cap {
        Err(Error::TooLarge { family, n, cap })
    } else {
        Ok(())
    }
}

/// A generated lattice together with the object behind each index.
#[derive(Clone, Debug)]
pub struct Family<T> {
    pub lattice: FiniteLattice,
    pub elements: Vec<T>,
    index: HashMap<T, usize>,
}

impl<T: Clone + Eq + Hash> Family<T> {
    /// `elements` must already be sorted bottom first; `up` lists the upper
    /// covers of an element.
    fn from_covers(
        elements: Vec<T>,
        label: impl Fn(&T) -> String,
        up: impl Fn(&T) -> Vec<T>,
    ) -> Result<Self> {
        let index: HashMap<T, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let mut covers = Vec::new();
        for (i, e) in elements.iter().enumerate() {
            let mut ups: Vec<usize> = up(e).iter().map(|u| index[u]).collect();
            ups.sort_unstable();
            ups.dedup();
            covers.extend(ups.into_iter().map(|j| (i, j)));
        }
        let lattice = FiniteLattice::build(elements.iter().map(label).collect(), covers)?;
        Ok(Self {
            lattice,
            elements,
            index,
        })
    }

    pub fn index_of(&self, e: &T) -> Option<usize> {
        self.index.get(e).copied()
    }
}

/// The chain `0 < 1 < … < n−1` with `n` elements.
pub fn chain(n: usize) -> Result<FiniteLattice> {
    check_cap("chain", n, CHAIN_CAP)?;
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteLattice::build(labels, (1..n).map(|i| (i - 1, i)).collect())
}

/// Subsets of `{1, …, n}` as bit masks.
pub fn boolean_family(n: usize) -> Result<Family<u32>> {
    check_cap("boolean", n, BOOLEAN_CAP)?;
    let mut sets: Vec<u32> = (0..1u32 << n).collect();
    sets.sort_by_cached_key(|s| {
        (
            s.count_ones(),
            (0..n).filter(|i| s >> i & 1 == 1).collect::<Vec<_>>(),
        )
    });
    Family::from_covers(
        sets,
        |&s| {
            if s == 0 {
                return "∅".into();
            }
            let items: Vec<String> = (0..n)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            format!("{{{}}}", items.join(","))
        },
        |&s| {
            (0..n)
                .filter(|i| s >> i & 1 == 0)
                .map(|i| s | 1 << i)
                .collect()
        },
    )
}

pub fn boolean_lattice(n: usize) -> Result<FiniteLattice> {
    Ok(boolean_family(n)?.lattice)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Divisors of `n` ordered by divisibility.
pub fn divisor_family(n: u64) -> Result<Family<u64>> {
    if n == 0 {
        return Err(Error::Parse("D_0 is undefined".into()));
    }
    check_cap("divisor", n as usize, DIVISOR_CAP)?;
    let mut primes = prime_factors(n);
    primes.dedup();
    let mut divs: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    divs.sort_by_key(|&d| (prime_factors(d).len(), d));
    Family::from_covers(
        divs,
        |d| d.to_string(),
        |&d| {
            primes
                .iter()
                .filter(|&&p| n.is_multiple_of(d * p))
                .map(|&p| d * p)
                .collect()
        },
    )
}

pub fn divisor_lattice(n: u64) -> Result<FiniteLattice> {
    Ok(divisor_family(n)?.lattice)
}

fn partition_family_of(
    n: usize,
    keep: impl Fn(&SetPartition) -> bool,
) -> Result<Family<SetPartition>> {
    let mut parts: Vec<SetPartition> = all_partitions(n).into_iter().filter(|p| keep(p)).collect();
    parts.sort_by_cached_key(|p| (p.rank(), p.to_string()));
    Family::from_covers(
        parts,
        |p| p.to_string(),
        |p| {
            let k = p.num_blocks();
            (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .map(|(i, j)| p.merge(i, j))
                .filter(|q| keep(q))
                .collect()
        },
    )
}

/// `Π_n` ordered by refinement; covers merge two blocks.
pub fn partition_family(n: usize) -> Result<Family<SetPartition>> {
    check_cap("partition", n, PARTITION_CAP)?;
    partition_family_of(n, |_| true)
}

pub fn partition_lattice(n: usize) -> Result<FiniteLattice> {
    Ok(partition_family(n)?.lattice)
}

/// `NC_n`: noncrossing partitions under refinement. Joins come from the
/// lattice tables and may differ from joins in `Π_n`.
pub fn noncrossing_family(n: usize) -> Result<Family<SetPartition>> {
    check_cap("noncrossing", n, NONCROSSING_CAP)?;
    partition_family_of(n, SetPartition::is_noncrossing)
}

pub fn noncrossing_lattice(n: usize) -> Result<FiniteLattice> {
    Ok(noncrossing_family(n)?.lattice)
}

/// The partition with one block `{1, …, k}` and singletons elsewhere.
pub fn initial_block(n: usize, k: usize) -> SetPartition {
    SetPartition::new(n, vec![(1..=k).collect()]).expect("valid block")
}

/// The chain `0̂ ≺ 12 ≺ 123 ≺ … ≺ 12…n` of initial blocks, as indices.
pub fn initial_block_chain(f: &Family<SetPartition>, n: usize) -> Vec<usize> {
    let mut c = vec![f.lattice.bottom()];
    c.extend((2..=n).map(|k| {
        f.index_of(&initial_block(n, k))
            .expect("initial blocks are noncrossing")
    }));
    c
}

/// Tamari lattice on binary trees with `n` internal nodes; covers are right
/// rotations.
pub fn tamari_family(n: usize) -> Result<Family<Tree>> {
    check_cap("tamari", n, TAMARI_CAP)?;
    let mut trees = tamari::all_trees(n);
    trees.sort_by_cached_key(|t| (std::cmp::Reverse(t.left_weight()), t.to_string()));
    Family::from_covers(trees, |t| t.to_string(), Tree::right_rotations)
}

pub fn tamari(n: usize) -> Result<FiniteLattice> {
    Ok(tamari_family(n)?.lattice)
}

/// The shuffle poset `W_{m,n}` with `0̂` the `x`-word and `1̂` the `y`-word.
pub fn shuffle_family(m: usize, n: usize) -> Result<Family<ShuffleWord>> {
    check_cap("shuffle", m + n, SHUFFLE_CAP)?;
    let mut words = shuffle::all_words(m, n);
    words.sort_by_cached_key(|w| (shuffle::rank(w), w.to_string()));
    Family::from_covers(words, |w| w.to_string(), shuffle::upper_covers)
}

pub fn shuffle_poset(m: usize, n: usize) -> Result<FiniteLattice> {
    Ok(shuffle_family(m, n)?.lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modularity::{is_graded, is_semimodular};
    use crate::moebius::MobiusTable;
    use num_bigint::BigInt;

    #[test]
    fn sizes() {
        assert_eq!(partition_lattice(4).unwrap().size(), 15);
        assert_eq!(noncrossing_lattice(4).unwrap().size(), 14);
        assert_eq!(tamari(3).unwrap().size(), 5);
        assert_eq!(divisor_lattice(12).unwrap().size(), 6);
        assert_eq!(boolean_lattice(3).unwrap().size(), 8);
        assert_eq!(chain(5).unwrap().size(), 5);
        assert_eq!(shuffle_poset(2, 1).unwrap().size(), 12);
    }

    #[test]
    fn caps() {
        assert!(matches!(
            partition_lattice(PARTITION_CAP + 1),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(shuffle_poset(4, 4), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn divisor_twelve() {
        let l = divisor_lattice(12).unwrap();
        assert_eq!(l.labels(), ["1", "2", "3", "4", "6", "12"]);
        assert_eq!(MobiusTable::new(&l).mu_top(), BigInt::from(0));
    }

    #[test]
    fn partition_four() {
        let f = partition_family(4).unwrap();
        let l = &f.lattice;
        assert_eq!(l.label(l.top()), "1234");
        assert_eq!(l.label(l.bottom()), "0̂");
        let i = |s: &str| l.index_of(s).unwrap();
        assert_eq!(l.join(i("12"), i("23")), i("123"));
        assert_eq!(l.join(i("13"), i("24")), i("13/24"));
    }

    #[test]
    fn noncrossing_join_differs() {
        let l = noncrossing_lattice(4).unwrap();
        let i = |s: &str| l.index_of(s).unwrap();
        assert_eq!(l.join(i("13"), i("24")), l.top());
        assert_eq!(l.meet(i("13"), i("24")), l.bottom());
        assert!(l.index_of("13/24").is_none());
    }

    #[test]
    fn shuffle_w21_shape() {
        let l = shuffle_poset(2, 1).unwrap();
        assert_eq!(l.label(l.bottom()), "de");
        assert_eq!(l.label(l.top()), "D");
        assert!(is_graded(&l));
        assert!(!is_semimodular(&l));
    }

    #[test]
    fn shuffle_order_matches_definition() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)] {
            let f = shuffle_family(m, n).unwrap();
            let l = &f.lattice;
            for a in 0..l.size() {
                for b in 0..l.size() {
                    let (u, v) = (&f.elements[a], &f.elements[b]);
                    assert_eq!(l.leq(a, b), order_leq(u, v), "{u} {v}");
                    assert_eq!(f.index_of(&shuffle_join(u, v).unwrap()), Some(l.join(a, b)));
                    assert_eq!(f.index_of(&shuffle_meet(u, v).unwrap()), Some(l.meet(a, b)));
                }
            }
        }
    }

    #[test]
    fn tamari_bottom_and_top() {
        let l = tamari(3).unwrap();
        assert_eq!(l.label(l.bottom()), "(((..).).)");
        assert_eq!(l.label(l.top()), "(.(.(..)))");
    }
}
