//! Finite lattices over dense element indices.
//!
//! A [`FiniteLattice`] is built once from a cover relation and is immutable
//! afterwards. Construction computes the order closure, rejects anything that
//! is not a lattice, and tabulates every meet and join so later queries are
//! plain lookups.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::bits::{BitMatrix, BitSet};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteLattice {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    cover_rel: BitMatrix,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    // up.row(x) = { y : x <= y }, down.row(y) = { x : x <= y }
    up: BitMatrix,
    down: BitMatrix,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
    topo: Vec<usize>,
}

impl FiniteLattice {
    /// Validates `covers` as the Hasse diagram of a lattice on `labels`.
    pub fn build(labels: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::with_capacity(n);
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut cover_rel = BitMatrix::new(n);
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(lo, hi) in &covers {
            if lo >= n || hi >= n {
                return Err(Error::InvalidIndex(lo, hi, n));
            }
            if lo == hi {
                return Err(Error::NotAcyclic);
            }
            if cover_rel.get(lo, hi) {
                return Err(Error::Parse(format!("duplicate cover ({lo}, {hi})")));
            }
            cover_rel.set(lo, hi);
            upper[lo].push(hi);
            lower[hi].push(lo);
        }
        for v in upper.iter_mut().chain(lower.iter_mut()) {
            v.sort_unstable();
        }

        // Kahn's algorithm; smallest index first keeps the order deterministic.
        let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            topo.push(v);
            for &w in &upper[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::NotAcyclic);
        }

        let mut up = BitMatrix::new(n);
        for &v in topo.iter().rev() {
            up.set(v, v);
            for &w in &upper[v] {
                let row = up.row(w).clone();
                up.row_mut(v).union_with(&row);
            }
        }
        let down = up.transpose();

        for &(lo, hi) in &covers {
            if up.row(lo).intersection_count(down.row(hi)) != 2 {
                return Err(Error::TransitiveCoverEdge(lo, hi));
            }
        }

        let minimal: Vec<usize> = (0..n).filter(|&i| lower[i].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| upper[i].is_empty()).collect();
        if minimal.len() != 1 {
            return Err(Error::NoUniqueBottom);
        }
        if maximal.len() != 1 {
            return Err(Error::NoUniqueTop);
        }

        let meet = bound_table(n, &up, &down).map_err(|(x, y)| Error::MeetFails(x, y))?;
        let join = bound_table(n, &down, &up).map_err(|(x, y)| Error::JoinFails(x, y))?;

        Ok(Self {
            labels,
            covers,
            cover_rel,
            upper,
            lower,
            up,
            down,
            meet,
            join,
            bottom: minimal[0],
            top: maximal[0],
            topo,
        })
    }

    /// Builds the lattice whose order is `leq` on `labels`, deriving covers by
    /// transitive reduction. Covers are emitted in lexicographic index order.
    pub fn from_order(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut lt = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                if i != j && leq(i, j) {
                    if leq(j, i) {
                        return Err(Error::NotAcyclic);
                    }
                    lt.set(i, j);
                }
            }
        }
        let gt = lt.transpose();
        let mut covers = Vec::new();
        for i in 0..n {
            for j in lt.row(i).iter() {
                if !lt.row(i).intersects(gt.row(j)) {
                    covers.push((i, j));
                }
            }
        }
        Self::build(labels, covers)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn label_index(&self) -> HashMap<&str, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }

    /// Cover pairs in the order they were supplied.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, lo: usize, hi: usize) -> bool {
        self.cover_rel.get(lo, hi)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up.get(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.up.get(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size() + y] as usize
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size() + y] as usize
    }

    /// Join of a set of elements; the bottom for the empty set.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn atoms(&self) -> &[usize] {
        &self.upper[self.bottom]
    }

    pub fn coatoms(&self) -> &[usize] {
        &self.lower[self.top]
    }

    /// Elements above or equal to `x`.
    pub fn up_set(&self, x: usize) -> &BitSet {
        self.up.row(x)
    }

    /// Elements below or equal to `x`.
    pub fn down_set(&self, x: usize) -> &BitSet {
        self.down.row(x)
    }

    /// A linear extension of the order: every element appears after all
    /// elements below it.
    pub fn topo_order(&self) -> &[usize] {
        &self.topo
    }

    /// Elements of `[lo, hi]` in increasing index order.
    pub fn interval_elements(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.up
            .row(lo)
            .intersection(self.down.row(hi))
            .iter()
            .collect()
    }

    pub fn interval_view(&self, lo: usize, hi: usize) -> Result<Interval<'_>> {
        if !self.leq(lo, hi) {
            return Err(Error::NotComparable(lo, hi));
        }
        Ok(Interval {
            parent: self,
            lo,
            hi,
            elements: self.interval_elements(lo, hi),
        })
    }

    /// The interval `[lo, hi]` as a lattice of its own.
    pub fn interval(&self, lo: usize, hi: usize) -> Result<FiniteLattice> {
        Ok(self.interval_view(lo, hi)?.materialize())
    }

    /// Order dual; element indices are preserved.
    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice {
            labels: self.labels.clone(),
            covers: self.covers.iter().map(|&(a, b)| (b, a)).collect(),
            cover_rel: self.cover_rel.transpose(),
            upper: self.lower.clone(),
            lower: self.upper.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
            topo: self.topo.iter().rev().copied().collect(),
        }
    }

    /// Cartesian product with componentwise order. Element `(i, j)` has index
    /// `i * other.size() + j`.
    pub fn product(&self, other: &FiniteLattice) -> FiniteLattice {
        let (n1, n2) = (self.size(), other.size());
        let mut labels = Vec::with_capacity(n1 * n2);
        for i in 0..n1 {
            for j in 0..n2 {
                labels.push(format!("({}, {})", self.labels[i], other.labels[j]));
            }
        }
        let mut covers = Vec::new();
        for i in 0..n1 {
            for j in 0..n2 {
                for &i2 in &self.upper[i] {
                    covers.push((i * n2 + j, i2 * n2 + j));
                }
                for &j2 in &other.upper[j] {
                    covers.push((i * n2 + j, i * n2 + j2));
                }
            }
        }
        covers.sort_unstable();
        FiniteLattice::build(labels, covers).expect("product of lattices is a lattice")
    }

    /// All `y` in `[lo, hi]` with `x ∧ y = lo` and `x ∨ y = hi`.
    pub fn complements_in(&self, x: usize, lo: usize, hi: usize) -> Result<Vec<usize>> {
        if !self.leq(lo, x) {
            return Err(Error::NotComparable(lo, x));
        }
        if !self.leq(x, hi) {
            return Err(Error::NotComparable(x, hi));
        }
        Ok(self
            .interval_elements(lo, hi)
            .into_iter()
            .filter(|&y| self.meet(x, y) == lo && self.join(x, y) == hi)
            .collect())
    }

    /// Is `chain` a saturated chain from the bottom to the top?
    pub fn is_maximal_chain(&self, chain: &[usize]) -> bool {
        chain.first() == Some(&self.bottom)
            && chain.last() == Some(&self.top)
            && chain.windows(2).all(|w| self.is_cover(w[0], w[1]))
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomic(&self) -> bool {
        (0..self.size()).all(|x| self.atomic_part(x) == x)
    }

    /// Join of the atoms below `x`.
    pub fn atomic_part(&self, x: usize) -> usize {
        self.join_all(self.atoms().iter().copied().filter(|&a| self.leq(a, x)))
    }
}

/// Greatest lower bounds using `up`/`down`; call with the roles swapped for
/// least upper bounds.
fn bound_table(
    n: usize,
    up: &BitMatrix,
    down: &BitMatrix,
) -> std::result::Result<Vec<u32>, (usize, usize)> {
    let counts: Vec<usize> = (0..n).map(|i| down.row(i).count()).collect();
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        table[x * n + x] = x as u32;
        for y in (x + 1)..n {
            let m = if up.get(x, y) {
                x
            } else if up.get(y, x) {
                y
            } else {
                let lb = down.row(x).intersection(down.row(y));
                let c = lb.count();
                // the glb is the lower bound whose own down-set is all of lb
                let glb = lb.iter().find(|&z| counts[z] == c);
                glb.ok_or((x, y))?
            };
            table[x * n + y] = m as u32;
            table[y * n + x] = m as u32;
        }
    }
    Ok(table)
}

/// The interval `[lo, hi]` of a parent lattice.
#[derive(Clone, Debug)]
pub struct Interval<'a> {
    pub parent: &'a FiniteLattice,
    pub lo: usize,
    pub hi: usize,
    /// Parent indices of the interval, ascending. Local index `i` is
    /// `elements[i]`.
    pub elements: Vec<usize>,
}

impl Interval<'_> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn local(&self, parent_index: usize) -> Option<usize> {
        self.elements.binary_search(&parent_index).ok()
    }

    /// Restricts the parent's tables. Intervals are convex sublattices, so
    /// covers, meets and joins carry over unchanged.
    pub fn materialize(&self) -> FiniteLattice {
        let p = self.parent;
        let k = self.elements.len();
        let local: HashMap<usize, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        let labels = self.elements.iter().map(|&e| p.labels[e].clone()).collect();
        let mut covers = Vec::new();
        let mut cover_rel = BitMatrix::new(k);
        let mut upper = vec![Vec::new(); k];
        let mut lower = vec![Vec::new(); k];
        let mut up = BitMatrix::new(k);
        let mut meet = vec![0u32; k * k];
        let mut join = vec![0u32; k * k];
        for (i, &e) in self.elements.iter().enumerate() {
            for &f in &p.upper[e] {
                if let Some(&j) = local.get(&f) {
                    covers.push((i, j));
                    cover_rel.set(i, j);
                    upper[i].push(j);
                    lower[j].push(i);
                }
            }
            for (j, &f) in self.elements.iter().enumerate() {
                if p.leq(e, f) {
                    up.set(i, j);
                }
                meet[i * k + j] = local[&p.meet(e, f)] as u32;
                join[i * k + j] = local[&p.join(e, f)] as u32;
            }
        }
        for v in lower.iter_mut() {
            v.sort_unstable();
        }
        let topo = p
            .topo
            .iter()
            .filter_map(|e| local.get(e).copied())
            .collect();
        FiniteLattice {
            labels,
            covers,
            cover_rel,
            upper,
            lower,
            down: up.transpose(),
            up,
            meet,
            join,
            bottom: local[&self.lo],
            top: local[&self.hi],
            topo,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(labels: &[&str], covers: &[(usize, usize)]) -> Result<FiniteLattice> {
        FiniteLattice::build(
            labels.iter().map(|s| s.to_string()).collect(),
            covers.to_vec(),
        )
    }

    fn b2() -> FiniteLattice {
        lat(
            &["{}", "{1}", "{2}", "{1,2}"],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn three_chain() {
        let l = lat(&["0", "a", "1"], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!((l.bottom(), l.top()), (0, 2));
        assert_eq!(l.meet(1, 2), 1);
        assert_eq!(l.join(0, 1), 1);
        assert_eq!(l.atoms(), &[1]);
    }

    #[test]
    fn boolean_two_meets_are_intersections() {
        let l = b2();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.atoms(), &[1, 2]);
    }

    #[test]
    fn bowtie_has_no_unique_top() {
        // two bottoms a, b and two tops c, d with a, b < c, d; add a bottom to
        // isolate the top failure
        let r = lat(
            &["0", "a", "b", "c", "d"],
            &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)],
        );
        assert_eq!(r.unwrap_err(), Error::NoUniqueTop);
    }

    #[test]
    fn bowtie_with_bounds_has_no_meet() {
        let r = lat(
            &["0", "a", "b", "c", "d", "1"],
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 5),
                (4, 5),
            ],
        );
        // c, d share the lower bounds a, b; a, b share the upper bounds c, d
        assert_eq!(r.unwrap_err(), Error::MeetFails(3, 4));
    }

    #[test]
    fn rejects_cycles_and_transitive_edges() {
        assert_eq!(
            lat(&["a", "b"], &[(0, 1), (1, 0)]).unwrap_err(),
            Error::NotAcyclic
        );
        assert_eq!(
            lat(&["0", "a", "1"], &[(0, 1), (1, 2), (0, 2)]).unwrap_err(),
            Error::TransitiveCoverEdge(0, 2)
        );
        assert!(matches!(
            lat(&["a"], &[(0, 3)]).unwrap_err(),
            Error::InvalidIndex(..)
        ));
        assert!(matches!(
            lat(&["a", "a"], &[]).unwrap_err(),
            Error::DuplicateLabel(_)
        ));
        assert_eq!(lat(&[], &[]).unwrap_err(), Error::NoUniqueBottom);
    }

    #[test]
    fn single_element_lattice() {
        let l = lat(&["*"], &[]).unwrap();
        assert_eq!((l.bottom(), l.top()), (0, 0));
        assert!(l.atoms().is_empty());
    }

    #[test]
    fn interval_and_dual() {
        let l = b2();
        let i = l.interval(1, 3).unwrap();
        assert_eq!(i.size(), 2);
        assert_eq!(i.labels(), &["{1}".to_string(), "{1,2}".to_string()]);
        assert!(l.interval(1, 2).is_err());
        let d = l.dual();
        assert_eq!((d.bottom(), d.top()), (3, 0));
        assert_eq!(d.meet(1, 2), 3);
        assert_eq!(d.dual().covers(), l.covers());
    }

    #[test]
    fn complements_in_boolean() {
        let l = b2();
        assert_eq!(l.complements_in(1, 0, 3).unwrap(), vec![2]);
        assert_eq!(l.complements_in(0, 0, 3).unwrap(), vec![3]);
        assert!(l.complements_in(1, 2, 3).is_err());
    }

    #[test]
    fn from_order_reduces() {
        let l = FiniteLattice::from_order((0..4).map(|i| i.to_string()).collect(), |a, b| a <= b)
            .unwrap();
        assert_eq!(l.covers(), &[(0, 1), (1, 2), (2, 3)]);
    }
}
