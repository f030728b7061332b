use std::fmt;
use std::rc::Rc;

/// A full binary tree; `Leaf` has no internal nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Node(Rc<Tree>, Rc<Tree>),
}

impl Tree {
    fn node(l: Tree, r: Tree) -> Tree {
        Tree::Node(Rc::new(l), Rc::new(r))
    }

    pub fn size(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Trees obtained by one right rotation `(A B) C → A (B C)` anywhere.
    pub fn right_rotations(&self) -> Vec<Tree> {
        let Tree::Node(l, r) = self else {
            return Vec::new();
        };
        let mut out = Vec::new();
        if let Tree::Node(a, b) = l.as_ref() {
            out.push(Tree::node(
                (**a).clone(),
                Tree::node((**b).clone(), (**r).clone()),
            ));
        }
        for t in l.right_rotations() {
            out.push(Tree::node(t, (**r).clone()));
        }
        for t in r.right_rotations() {
            out.push(Tree::node((**l).clone(), t));
        }
        out
    }

    /// Length of the left arm summed over nodes; strictly drops under a right
    /// rotation, so it orders the Tamari lattice bottom first.
    pub fn left_weight(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(l, r) => l.size() + l.left_weight() + r.left_weight(),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("."),
            Tree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// All full binary trees with `n` internal nodes.
pub fn all_trees(n: usize) -> Vec<Tree> {
    let mut by_size: Vec<Vec<Tree>> = vec![vec![Tree::Leaf]];
    for k in 1..=n {
        let mut v = Vec::new();
        for i in 0..k {
            for l in &by_size[i] {
                for r in &by_size[k - 1 - i] {
                    v.push(Tree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(v);
    }
    by_size.swap_remove(n)
}
