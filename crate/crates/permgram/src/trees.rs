//! Complete increasing binary trees with `a/x/y/z`-labeled leaves.
//!
//! A tree on `[n]` has internal vertices `1..=n`, each smaller than its
//! children, and every missing child replaced by a labeled leaf — `n + 1`
//! leaves in all.  The right spine (the maximal chain of right children from
//! the root) carries the cycle minima of a permutation: a spine vertex with a
//! left `z`-leaf is a singleton cycle, and any other spine vertex hangs the
//! rest of its cycle on the left as the classical min-rooted tree of the cycle
//! word, whose missing left children are `x`-leaves and missing right children
//! are `y`-leaves.  The lone `a`-leaf closes the spine.
//!
//! Growing a leaf into the next vertex mirrors a grammar step: an `a`-leaf
//! spawns `(z, a)` children and any other leaf spawns `(x, y)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::perms::CycleForm;
use crate::poly::{coeff, LaurentPolynomial, Monomial, Var};
use crate::Error;

/// A leaf label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Leaf {
    A,
    X,
    Y,
    Z,
}

impl Leaf {
    pub fn var(self) -> Var {
        match self {
            Leaf::A => Var::A,
            Leaf::X => Var::X,
            Leaf::Y => Var::Y,
            Leaf::Z => Var::Z,
        }
    }

    pub fn name(self) -> &'static str {
        self.var().name()
    }

    fn from_name(name: &str) -> Option<Leaf> {
        match name {
            "a" => Some(Leaf::A),
            "x" => Some(Leaf::X),
            "y" => Some(Leaf::Y),
            "z" => Some(Leaf::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Addresses one child slot: the `side` child of internal vertex `parent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeafPos {
    pub parent: usize,
    pub side: Side,
}

impl LeafPos {
    pub fn new(parent: usize, side: Side) -> LeafPos {
        LeafPos { parent, side }
    }
}

impl fmt::Display for LeafPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} child of {}", self.side, self.parent)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Child {
    Internal(usize),
    Leaf(Leaf),
}

/// A complete increasing binary tree with labeled leaves, rooted at 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    children: BTreeMap<usize, (Child, Child)>,
}

impl LabeledTree {
    /// The one-vertex tree `(1 z a)`.
    pub fn base() -> LabeledTree {
        LabeledTree {
            children: BTreeMap::from([(1, (Child::Leaf(Leaf::Z), Child::Leaf(Leaf::A)))]),
        }
    }

    pub fn n(&self) -> usize {
        self.children.len()
    }

    pub fn child(&self, pos: LeafPos) -> Child {
        let (left, right) = self.children[&pos.parent];
        match pos.side {
            Side::Left => left,
            Side::Right => right,
        }
    }

    /// The leaf in the given slot, if that slot holds a leaf.
    pub fn leaf_at(&self, pos: LeafPos) -> Option<Leaf> {
        match self.children.get(&pos.parent)? {
            (Child::Leaf(l), _) if pos.side == Side::Left => Some(*l),
            (_, Child::Leaf(l)) if pos.side == Side::Right => Some(*l),
            _ => None,
        }
    }

    /// All leaves in vertex order, left before right.
    pub fn leaves(&self) -> Vec<(LeafPos, Leaf)> {
        let mut out = Vec::with_capacity(self.n() + 1);
        for (&v, &(left, right)) in &self.children {
            if let Child::Leaf(l) = left {
                out.push((LeafPos::new(v, Side::Left), l));
            }
            if let Child::Leaf(l) = right {
                out.push((LeafPos::new(v, Side::Right), l));
            }
        }
        out
    }

    /// The slot of the unique `a`-leaf.
    pub fn a_leaf(&self) -> LeafPos {
        self.leaves()
            .into_iter()
            .find(|&(_, l)| l == Leaf::A)
            .map(|(pos, _)| pos)
            .expect("a valid tree has an a-leaf")
    }

    /// The leaf with the given label directly under `v`, if any.
    pub fn leaf_of_vertex(&self, v: usize, label: Leaf) -> Option<LeafPos> {
        let &(left, right) = self.children.get(&v)?;
        if left == Child::Leaf(label) {
            Some(LeafPos::new(v, Side::Left))
        } else if right == Child::Leaf(label) {
            Some(LeafPos::new(v, Side::Right))
        } else {
            None
        }
    }

    /// The slot a vertex occupies under its parent; `None` for the root.
    pub fn vertex_parent(&self, v: usize) -> Option<LeafPos> {
        for (&p, &(left, right)) in &self.children {
            if left == Child::Internal(v) {
                return Some(LeafPos::new(p, Side::Left));
            }
            if right == Child::Internal(v) {
                return Some(LeafPos::new(p, Side::Right));
            }
        }
        None
    }

    /// The right spine: the root and the chain of internal right children.
    pub fn spine(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut v = 1;
        loop {
            out.push(v);
            match self.children[&v].1 {
                Child::Internal(w) => v = w,
                Child::Leaf(_) => return out,
            }
        }
    }

    /// The product of all leaf labels.
    pub fn weight_monomial(&self) -> Monomial {
        Monomial::from_pairs(self.leaves().into_iter().map(|(_, l)| (l.var(), 1)))
    }

    pub fn weight(&self) -> LaurentPolynomial {
        LaurentPolynomial::term(coeff(1), self.weight_monomial())
    }

    /// Vertices owning an `x`-leaf.
    pub fn x_leaf_vertices(&self) -> BTreeSet<usize> {
        self.leaves()
            .into_iter()
            .filter(|&(_, l)| l == Leaf::X)
            .map(|(pos, _)| pos.parent)
            .collect()
    }

    /// Vertices owning a `z`-leaf.
    pub fn z_leaf_vertices(&self) -> BTreeSet<usize> {
        self.leaves()
            .into_iter()
            .filter(|&(_, l)| l == Leaf::Z)
            .map(|(pos, _)| pos.parent)
            .collect()
    }

    /// Replaces the leaf in `pos` by the next vertex `n + 1`, whose children
    /// are `(z, a)` when the grown leaf was the `a`-leaf and `(x, y)`
    /// otherwise.
    pub fn grow(&self, pos: LeafPos) -> Result<LabeledTree, Error> {
        let Some(label) = self.leaf_at(pos) else {
            return Err(Error::NoSuchLeaf {
                parent: pos.parent,
                side: pos.side,
            });
        };
        let v = self.n() + 1;
        let mut children = self.children.clone();
        let slot = children.get_mut(&pos.parent).expect("parent exists");
        match pos.side {
            Side::Left => slot.0 = Child::Internal(v),
            Side::Right => slot.1 = Child::Internal(v),
        }
        let new_children = match label {
            Leaf::A => (Child::Leaf(Leaf::Z), Child::Leaf(Leaf::A)),
            _ => (Child::Leaf(Leaf::X), Child::Leaf(Leaf::Y)),
        };
        children.insert(v, new_children);
        Ok(LabeledTree { children })
    }

    /// Checks every structural invariant: vertex set `1..=n`, each non-root
    /// vertex a child exactly once, children larger than parents, a unique
    /// `a`-leaf closing the right spine, and `z`-leaves only as left children
    /// of spine vertices.
    pub fn validate(&self) -> Result<(), Error> {
        let n = self.n();
        if n == 0 {
            return Err(Error::MalformedTree("no vertices".into()));
        }
        for &v in self.children.keys() {
            if v < 1 || v > n {
                return Err(Error::MalformedTree(format!("vertex {v} outside 1..={n}")));
            }
        }
        let mut seen_as_child = BTreeSet::new();
        for (&v, &(left, right)) in &self.children {
            for child in [left, right] {
                if let Child::Internal(w) = child {
                    if !self.children.contains_key(&w) {
                        return Err(Error::MalformedTree(format!(
                            "vertex {v} points at missing vertex {w}"
                        )));
                    }
                    if w <= v {
                        return Err(Error::MalformedTree(format!(
                            "child {w} of {v} is not larger than its parent"
                        )));
                    }
                    if !seen_as_child.insert(w) {
                        return Err(Error::MalformedTree(format!("vertex {w} has two parents")));
                    }
                }
            }
        }
        if seen_as_child.contains(&1) {
            return Err(Error::MalformedTree("the root 1 has a parent".into()));
        }
        if seen_as_child.len() != n - 1 {
            return Err(Error::MalformedTree(
                "not every vertex is reachable from the root".into(),
            ));
        }
        let a_leaves: Vec<LeafPos> = self
            .leaves()
            .into_iter()
            .filter(|&(_, l)| l == Leaf::A)
            .map(|(pos, _)| pos)
            .collect();
        let spine = self.spine();
        let spine_end = *spine.last().expect("spine is nonempty");
        if a_leaves.len() != 1 {
            return Err(Error::MalformedTree(format!(
                "expected exactly one a-leaf, found {}",
                a_leaves.len()
            )));
        }
        if a_leaves[0] != LeafPos::new(spine_end, Side::Right) {
            return Err(Error::MalformedTree(
                "the a-leaf must be the right child of the last spine vertex".into(),
            ));
        }
        let spine_set: BTreeSet<usize> = spine.iter().copied().collect();
        for (pos, label) in self.leaves() {
            if label == Leaf::Z && (pos.side != Side::Left || !spine_set.contains(&pos.parent)) {
                return Err(Error::MalformedTree(format!(
                    "z-leaf at {pos} is not the left child of a spine vertex"
                )));
            }
        }
        for &v in &spine {
            match self.children[&v].0 {
                Child::Leaf(Leaf::Z) | Child::Internal(_) => {}
                Child::Leaf(l) => {
                    return Err(Error::MalformedTree(format!(
                        "spine vertex {v} has a left {l}-leaf"
                    )))
                }
            }
        }
        Ok(())
    }

    /// Reads the cycle form back off the tree: one cycle per spine vertex,
    /// the in-order word of its left subtree trailing the minimum.
    pub fn decode(&self) -> Result<CycleForm, Error> {
        let mut cycles = Vec::new();
        for &v in &self.spine() {
            let (left, _) = self.children[&v];
            let cycle = match left {
                Child::Leaf(Leaf::Z) => vec![v],
                Child::Internal(w) => {
                    let mut cycle = vec![v];
                    self.inorder(w, &mut cycle);
                    cycle
                }
                Child::Leaf(l) => {
                    return Err(Error::MalformedTree(format!(
                        "spine vertex {v} has a left {l}-leaf"
                    )))
                }
            };
            cycles.push(cycle);
        }
        CycleForm::new(cycles)
    }

    fn inorder(&self, v: usize, out: &mut Vec<usize>) {
        let (left, right) = self.children[&v];
        if let Child::Internal(w) = left {
            self.inorder(w, out);
        }
        out.push(v);
        if let Child::Internal(w) = right {
            self.inorder(w, out);
        }
    }

    /// The nested text form `(1 z (2 z a))`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        self.serialize_vertex(1, &mut out);
        out
    }

    fn serialize_vertex(&self, v: usize, out: &mut String) {
        let (left, right) = self.children[&v];
        out.push('(');
        out.push_str(&v.to_string());
        for child in [left, right] {
            out.push(' ');
            match child {
                Child::Leaf(l) => out.push_str(l.name()),
                Child::Internal(w) => self.serialize_vertex(w, out),
            }
        }
        out.push(')');
    }

    /// Parses the output of [`LabeledTree::serialize`] and validates it.
    pub fn parse(src: &str) -> Result<LabeledTree, Error> {
        let tokens: Vec<String> = src
            .replace('(', " ( ")
            .replace(')', " ) ")
            .split_whitespace()
            .map(str::to_string)
            .collect();
        let mut children = BTreeMap::new();
        let mut pos = 0;
        let root = parse_vertex(&tokens, &mut pos, &mut children)?;
        if pos != tokens.len() {
            return Err(Error::MalformedTree("trailing tokens".into()));
        }
        let Child::Internal(1) = root else {
            return Err(Error::MalformedTree("the root must be vertex 1".into()));
        };
        let tree = LabeledTree { children };
        tree.validate()?;
        Ok(tree)
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.json_vertex(1)
    }

    fn json_vertex(&self, v: usize) -> serde_json::Value {
        let (left, right) = self.children[&v];
        let child_json = |c: Child| match c {
            Child::Leaf(l) => serde_json::json!(l.name()),
            Child::Internal(w) => self.json_vertex(w),
        };
        serde_json::json!({
            "vertex": v,
            "left": child_json(left),
            "right": child_json(right),
        })
    }
}

fn parse_vertex(
    tokens: &[String],
    pos: &mut usize,
    children: &mut BTreeMap<usize, (Child, Child)>,
) -> Result<Child, Error> {
    let next = |pos: &mut usize| -> Result<String, Error> {
        let t = tokens
            .get(*pos)
            .cloned()
            .ok_or_else(|| Error::MalformedTree("unexpected end of input".into()))?;
        *pos += 1;
        Ok(t)
    };
    let open = next(pos)?;
    if open != "(" {
        return Err(Error::MalformedTree(format!(
            "expected `(`, found `{open}`"
        )));
    }
    let vertex: usize = next(pos)?
        .parse()
        .map_err(|_| Error::MalformedTree("expected a vertex number".into()))?;
    let mut parsed = Vec::with_capacity(2);
    for _ in 0..2 {
        let t = tokens
            .get(*pos)
            .ok_or_else(|| Error::MalformedTree("unexpected end of input".into()))?;
        if t == "(" {
            parsed.push(parse_vertex(tokens, pos, children)?);
        } else {
            let t = next(pos)?;
            let leaf = Leaf::from_name(&t)
                .ok_or_else(|| Error::MalformedTree(format!("`{t}` is not a leaf label")))?;
            parsed.push(Child::Leaf(leaf));
        }
    }
    let close = next(pos)?;
    if close != ")" {
        return Err(Error::MalformedTree(format!(
            "expected `)`, found `{close}`"
        )));
    }
    if children.insert(vertex, (parsed[0], parsed[1])).is_some() {
        return Err(Error::MalformedTree(format!(
            "vertex {vertex} appears twice"
        )));
    }
    Ok(Child::Internal(vertex))
}

/// Builds the tree of a cycle form: spine vertices are the cycle minima in
/// order, singleton cycles hang a `z`-leaf, and longer cycles hang the
/// min-rooted tree of their remaining word.
pub fn encode(cycles: &CycleForm) -> Result<LabeledTree, Error> {
    if cycles.n() == 0 {
        return Err(Error::MalformedCycles(
            "cannot encode the empty permutation".into(),
        ));
    }
    let mut children = BTreeMap::new();
    let list = cycles.cycles();
    for (i, cycle) in list.iter().enumerate() {
        let left = if cycle.len() == 1 {
            Child::Leaf(Leaf::Z)
        } else {
            word_tree(&cycle[1..], &mut children)
        };
        let right = if i + 1 < list.len() {
            Child::Internal(list[i + 1][0])
        } else {
            Child::Leaf(Leaf::A)
        };
        children.insert(cycle[0], (left, right));
    }
    Ok(LabeledTree { children })
}

fn word_tree(word: &[usize], children: &mut BTreeMap<usize, (Child, Child)>) -> Child {
    if word.is_empty() {
        unreachable!("callers split on a nonempty word");
    }
    let min_pos = word
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .map(|(i, _)| i)
        .expect("word is nonempty");
    let root = word[min_pos];
    let left = if min_pos == 0 {
        Child::Leaf(Leaf::X)
    } else {
        word_tree(&word[..min_pos], children)
    };
    let right = if min_pos + 1 == word.len() {
        Child::Leaf(Leaf::Y)
    } else {
        word_tree(&word[min_pos + 1..], children)
    };
    children.insert(root, (left, right));
    Child::Internal(root)
}

/// Every tree on `[n]`, generated by all growth sequences from the base tree.
pub fn all_trees(n: usize) -> Result<Vec<LabeledTree>, Error> {
    crate::perms::guard(n)?;
    assert!(n >= 1, "trees have at least one vertex");
    let mut current = vec![LabeledTree::base()];
    for _ in 1..n {
        let mut next = Vec::new();
        for tree in &current {
            for (pos, _) in tree.leaves() {
                next.push(tree.grow(pos).expect("growing a listed leaf"));
            }
        }
        current = next;
    }
    Ok(current)
}
