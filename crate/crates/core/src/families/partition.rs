use std::fmt;

use crate::error::{Error, Result};

/// A set partition of `{1, …, n}` with blocks sorted by their minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &i in blocks.iter().flatten() {
            if i == 0 || i > n || seen[i] {
                return Err(Error::Parse(format!(
                    "bad element {i} in partition of [{n}]"
                )));
            }
            seen[i] = true;
        }
        let mut blocks: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        for i in (1..=n).filter(|&i| !seen[i]) {
            blocks.push(vec![i]);
        }
        Ok(Self::canonical(n, blocks))
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        Self { n, blocks }
    }

    /// Every element in its own block.
    pub fn discrete(n: usize) -> Self {
        Self {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    /// Parses the display form, e.g. `13/24` or `0̂`; omitted elements become
    /// singletons. Blocks of a partition of more than nine elements separate
    /// their members with commas.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0̂" || s.is_empty() {
            return Ok(Self::discrete(n));
        }
        let blocks = s
            .split('/')
            .map(|b| {
                if b.contains(',') {
                    b.split(',')
                        .map(|t| {
                            t.trim()
                                .parse::<usize>()
                                .map_err(|e| Error::Parse(e.to_string()))
                        })
                        .collect::<Result<Vec<_>>>()
                } else {
                    b.chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|d| d as usize)
                                .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
                        })
                        .collect()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `n − #blocks`
    pub fn rank(&self) -> usize {
        self.n - self.blocks.len()
    }

    /// `block_ids()[i − 1]` is the index of the block holding `i`.
    pub fn block_ids(&self) -> Vec<usize> {
        let mut id = vec![0; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &i in b {
                id[i - 1] = k;
            }
        }
        id
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        let id = other.block_ids();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&i| id[i - 1] == id[b[0] - 1]))
    }

    /// Blockwise intersections.
    pub fn meet(&self, other: &SetPartition) -> SetPartition {
        let (a, b) = (self.block_ids(), other.block_ids());
        let mut groups: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
        for i in 1..=self.n {
            groups.entry((a[i - 1], b[i - 1])).or_default().push(i);
        }
        Self::canonical(self.n, groups.into_values().collect())
    }

    /// Join in the full partition lattice: connected components of the union.
    pub fn join(&self, other: &SetPartition) -> SetPartition {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for b in self.blocks.iter().chain(&other.blocks) {
            for &i in &b[1..] {
                let (r1, r2) = (find(&mut parent, b[0]), find(&mut parent, i));
                parent[r1] = r2;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for i in 1..=self.n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        Self::canonical(self.n, groups.into_values().collect())
    }

    /// Merges blocks `i` and `j` (indices into [`blocks`](Self::blocks)).
    pub fn merge(&self, i: usize, j: usize) -> SetPartition {
        let mut blocks = self.blocks.clone();
        let hi = i.max(j);
        let moved = blocks.remove(hi);
        blocks[i.min(j)].extend(moved);
        Self::canonical(self.n, blocks)
    }

    /// No distinct blocks `B`, `C` and `i < j < k < l` with `i, k ∈ B` and
    /// `j, l ∈ C`.
    pub fn is_noncrossing(&self) -> bool {
        let id = self.block_ids();
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                if id[j] == id[i] {
                    continue;
                }
                for k in j + 1..n {
                    if id[k] != id[i] {
                        continue;
                    }
                    if (k + 1..n).any(|l| id[l] == id[j]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self
            .blocks
            .iter()
            .filter(|b| b.len() > 1)
            .map(|b| {
                let parts: Vec<String> = b.iter().map(|i| i.to_string()).collect();
                parts.join(if self.n > 9 { "," } else { "" })
            })
            .collect();
        if shown.is_empty() {
            f.write_str("0̂")
        } else {
            f.write_str(&shown.join("/"))
        }
    }
}

/// All set partitions of `[n]`, via restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<SetPartition>) {
        if rgs.len() == n {
            let mut blocks = vec![Vec::new(); max];
            for (i, &b) in rgs.iter().enumerate() {
                blocks[b].push(i + 1);
            }
            out.push(SetPartition::canonical(n, blocks));
            return;
        }
        for b in 0..=max {
            rgs.push(b);
            rec(n, rgs, max.max(b + 1), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_examples() {
        assert!(!SetPartition::parse(4, "13/24").unwrap().is_noncrossing());
        assert!(SetPartition::parse(4, "13").unwrap().is_noncrossing());
        assert_eq!(SetPartition::parse(4, "13").unwrap().to_string(), "13");
        assert_eq!(SetPartition::discrete(3).to_string(), "0̂");
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..=6).map(|n| all_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn catalan_many_noncrossing() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| {
                all_partitions(n)
                    .iter()
                    .filter(|p| p.is_noncrossing())
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn meet_join_refine() {
        let a = SetPartition::parse(4, "12").unwrap();
        let b = SetPartition::parse(4, "23").unwrap();
        assert_eq!(a.join(&b).to_string(), "123");
        assert_eq!(a.meet(&b).to_string(), "0̂");
        assert!(a.refines(&a.join(&b)));
        assert!(!a.refines(&b));
        let p = SetPartition::parse(4, "12/34").unwrap();
        assert_eq!(p.merge(0, 1).to_string(), "1234");
    }

    #[test]
    fn wide_display_round_trips() {
        let p = SetPartition::new(10, vec![vec![1, 10], vec![2, 3]]).unwrap();
        assert_eq!(p.to_string(), "1,10/2,3");
        assert_eq!(SetPartition::parse(10, &p.to_string()).unwrap(), p);
    }
}
