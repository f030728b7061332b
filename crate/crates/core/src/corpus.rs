//! The verification corpus: family members up to their caps, small
//! hand-built lattices, duals, products, and seeded random meet-closed
//! sublattices.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::{
    boolean_family, chain, divisor_family, initial_block_chain, noncrossing_family,
    partition_family, shuffle_family, tamari,
};
use crate::lattice::FiniteLattice;
use crate::modularity::{find_left_modular_chain, for_each_chain};
use crate::nbb::find_ll_chains;

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub name: String,
    pub lattice: FiniteLattice,
    /// A designated left-modular maximal chain.
    pub chain: Option<Vec<usize>>,
}

impl CorpusItem {
    fn new(name: impl Into<String>, lattice: FiniteLattice) -> Self {
        Self {
            name: name.into(),
            lattice,
            chain: None,
        }
    }

    fn with_chain(mut self, chain: Vec<usize>) -> Self {
        self.chain = Some(chain);
        self
    }

    /// The designated chain, else [`auto_chain`].
    pub fn working_chain(&self) -> Vec<usize> {
        self.chain
            .clone()
            .unwrap_or_else(|| auto_chain(&self.lattice))
    }
}

/// The first LL chain found, else the first left-modular chain, else the
/// lexicographically first maximal chain.
pub fn auto_chain(l: &FiniteLattice) -> Vec<usize> {
    find_ll_chains(l, 1)
        .pop()
        .or_else(|| find_left_modular_chain(l))
        .unwrap_or_else(|| first_maximal_chain(l))
}

pub fn first_maximal_chain(l: &FiniteLattice) -> Vec<usize> {
    let mut out = Vec::new();
    for_each_chain(l, &vec![true; l.size()], |c| {
        out = c.to_vec();
        false
    });
    out
}

/// Corpus construction parameters.
#[derive(Clone, Copy, Debug)]
pub struct CorpusConfig {
    pub seed: u64,
    pub random_count: usize,
    /// Largest `m + n` for shuffle posets.
    pub shuffle_max: usize,
    /// Skip items with more elements than this.
    pub max_size: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            random_count: 100,
            shuffle_max: 7,
            max_size: usize::MAX,
        }
    }
}

fn pentagon() -> FiniteLattice {
    FiniteLattice::build(
        ["0", "a", "b", "c", "1"].map(String::from).to_vec(),
        vec![(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
    )
    .expect("pentagon")
}

fn diamond() -> FiniteLattice {
    FiniteLattice::build(
        ["0", "a", "b", "c", "1"].map(String::from).to_vec(),
        vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
    .expect("diamond")
}

fn hexagon() -> FiniteLattice {
    FiniteLattice::build(
        ["0", "a1", "a2", "b1", "b2", "1"]
            .map(String::from)
            .to_vec(),
        vec![(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)],
    )
    .expect("hexagon")
}

/// Named small lattices: `N5` (pentagon), `M3` (diamond), `hexagon`.
pub fn named(name: &str) -> Option<FiniteLattice> {
    match name {
        "N5" | "pentagon" => Some(pentagon()),
        "M3" | "diamond" => Some(diamond()),
        "hexagon" => Some(hexagon()),
        _ => None,
    }
}

fn divisor_chain(n: u64) -> (FiniteLattice, Vec<usize>) {
    let f = divisor_family(n).expect("divisor lattice");
    let mut c = vec![f.index_of(&1).unwrap()];
    let mut d = 1;
    let mut rest = n;
    let mut p = 2;
    while rest > 1 {
        while rest.is_multiple_of(p) {
            d *= p;
            rest /= p;
            c.push(f.index_of(&d).unwrap());
        }
        p += 1;
    }
    (f.lattice, c)
}

/// A random meet-closed subset of `base` containing the top, as a lattice
/// under the induced order.
pub fn random_meet_sublattice(
    base: &FiniteLattice,
    rng: &mut impl Rng,
    density: f64,
) -> FiniteLattice {
    let n = base.size();
    let mut keep = vec![false; n];
    keep[base.top()] = true;
    for k in keep.iter_mut() {
        if rng.gen_bool(density) {
            *k = true;
        }
    }
    loop {
        let current: Vec<usize> = (0..n).filter(|&i| keep[i]).collect();
        let mut changed = false;
        for (i, &a) in current.iter().enumerate() {
            for &b in &current[i + 1..] {
                let m = base.meet(a, b);
                if !keep[m] {
                    keep[m] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let elems: Vec<usize> = (0..n).filter(|&i| keep[i]).collect();
    let labels = elems.iter().map(|&i| base.label(i).to_string()).collect();
    FiniteLattice::from_order(labels, |a, b| base.leq(elems[a], elems[b]))
        .expect("meet-closed subsets with a top are lattices")
}

pub fn build_corpus(cfg: &CorpusConfig) -> Vec<CorpusItem> {
    let mut items = Vec::new();
    for n in 1..=6 {
        let l = chain(n).unwrap();
        let c = (0..n).collect();
        items.push(CorpusItem::new(format!("chain({n})"), l).with_chain(c));
    }
    for n in 0..=5 {
        let f = boolean_family(n).unwrap();
        let c = (0..=n)
            .map(|k| f.index_of(&((1u32 << k) - 1)).unwrap())
            .collect();
        items.push(CorpusItem::new(format!("B_{n}"), f.lattice).with_chain(c));
    }
    for d in [1u64, 12, 30, 36, 60, 72, 210] {
        let (l, c) = divisor_chain(d);
        items.push(CorpusItem::new(format!("D_{d}"), l).with_chain(c));
    }
    for n in 1..=6 {
        let f = partition_family(n).unwrap();
        let c = initial_block_chain(&f, n);
        items.push(CorpusItem::new(format!("Pi_{n}"), f.lattice).with_chain(c));
    }
    for n in 1..=8 {
        let f = noncrossing_family(n).unwrap();
        let c = initial_block_chain(&f, n);
        items.push(CorpusItem::new(format!("NC_{n}"), f.lattice).with_chain(c));
    }
    for s in 0..=cfg.shuffle_max {
        for m in 0..=s {
            let l = shuffle_family(m, s - m).unwrap().lattice;
            items.push(CorpusItem::new(format!("W_{m},{}", s - m), l));
        }
    }
    for n in 0..=6 {
        items.push(CorpusItem::new(format!("Tamari_{n}"), tamari(n).unwrap()));
    }
    items.push(CorpusItem::new("N5", pentagon()).with_chain(vec![0, 1, 2, 4]));
    items.push(CorpusItem::new("M3", diamond()));
    items.push(CorpusItem::new("hexagon", hexagon()));

    let duals: Vec<CorpusItem> = [
        "NC_5", "W_2,1", "W_2,2", "Tamari_4", "N5", "D_12", "hexagon", "Pi_4",
    ]
    .iter()
    .filter_map(|name| items.iter().find(|it| it.name == *name))
    .map(|it| CorpusItem::new(format!("dual({})", it.name), it.lattice.dual()))
    .collect();
    items.extend(duals);

    let find = |items: &[CorpusItem], name: &str| {
        items
            .iter()
            .find(|it| it.name == name)
            .unwrap()
            .lattice
            .clone()
    };
    let products = [
        ("N5", "chain(2)"),
        ("B_1", "chain(3)"),
        ("Pi_3", "chain(3)"),
        ("NC_3", "NC_3"),
        ("W_1,1", "chain(2)"),
        ("M3", "B_1"),
        ("Tamari_3", "chain(2)"),
    ];
    for (a, b) in products {
        let l = find(&items, a).product(&find(&items, b));
        items.push(CorpusItem::new(format!("{a}x{b}"), l));
    }

    let pool: Vec<FiniteLattice> = [
        "B_4",
        "Pi_4",
        "NC_5",
        "D_60",
        "Tamari_4",
        "W_2,2",
        "N5xchain(2)",
        "B_5",
    ]
    .iter()
    .filter_map(|name| {
        items
            .iter()
            .find(|it| it.name == *name)
            .map(|it| it.lattice.clone())
    })
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..cfg.random_count {
        let base = pool.choose(&mut rng).unwrap();
        let density = rng.gen_range(0.15..0.6);
        let l = random_meet_sublattice(base, &mut rng, density);
        items.push(CorpusItem::new(format!("random#{i}"), l));
    }
    items.retain(|it| it.lattice.size() <= cfg.max_size);
    items
}
