//! Letters, non-associative words (binary trees), associative words, and the
//! weight order on trees.
//!
//! The order compares `(|u|, u₂, u₁)` lexicographically for `u = (u₁ u₂)`:
//! shorter words are smaller, equal-length words compare their right factors
//! first and then their left factors, and single letters compare by rank.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A generator, identified by its rank in the alphabet order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(pub u32);

impl Letter {
    pub fn rank(self) -> usize {
        self.0 as usize
    }
}

/// An ordered, finite set of named letters. Ranks are `0..len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Alphabet("alphabet is empty".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::Alphabet("empty letter name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::Alphabet(format!("duplicate letter {n:?}")));
            }
        }
        Ok(Self { names })
    }

    /// `x < y < z` for up to three letters, `x1 < x2 < …` beyond that.
    pub fn standard(size: usize) -> Self {
        assert!(size > 0, "alphabet must be nonempty");
        let names = if size <= 3 {
            ["x", "y", "z"][..size].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=size).map(|i| format!("x{i}")).collect()
        };
        Self { names }
    }

    /// `x1 < x2 < … < xn`.
    pub fn indexed(size: usize) -> Self {
        assert!(size > 0, "alphabet must be nonempty");
        Self {
            names: (1..=size).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Letter(i as u32))
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.rank()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len() as u32).map(Letter)
    }

    pub fn fmt_word(&self, w: &NaWord) -> String {
        let mut s = String::new();
        self.write_word(w, &mut s);
        s
    }

    fn write_word(&self, w: &NaWord, out: &mut String) {
        match w.shape() {
            Shape::Leaf(l) => out.push_str(self.name(*l)),
            Shape::Node { left, right, .. } => {
                out.push('(');
                self.write_word(left, out);
                out.push(' ');
                self.write_word(right, out);
                out.push(')');
            }
        }
    }

    pub fn fmt_aword(&self, w: &AWord) -> String {
        w.letters()
            .iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// One move from a node to a child.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    Left,
    Right,
}

/// Address of a subtree: the sequence of moves from the root.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TreePath(pub Vec<Step>);

impl TreePath {
    pub fn root() -> Self {
        Self(Vec::new())
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, step: Step) -> Self {
        let mut steps = self.0.clone();
        steps.push(step);
        Self(steps)
    }
}

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "root");
        }
        let parts: Vec<&str> = self
            .0
            .iter()
            .map(|s| match s {
                Step::Left => "left",
                Step::Right => "right",
            })
            .collect();
        write!(f, "{}", parts.join("/"))
    }
}

#[derive(PartialEq, Eq, Hash)]
pub(crate) enum Shape {
    Leaf(Letter),
    Node {
        len: usize,
        left: NaWord,
        right: NaWord,
    },
}

/// A non-associative word: a binary tree with letters at the leaves.
///
/// Cloning is cheap (shared structure). Equality and hashing are structural;
/// `Ord` is the weight order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NaWord(Arc<Shape>);

/// Bracketing direction for [`NaWord::bracket`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    /// `(((z₁z₂)z₃)…)zₘ`
    Left,
    /// `z₁(z₂(…zₘ))`
    Right,
}

impl NaWord {
    pub fn leaf(letter: Letter) -> Self {
        Self(Arc::new(Shape::Leaf(letter)))
    }

    pub fn node(left: NaWord, right: NaWord) -> Self {
        let len = left.len() + right.len();
        Self(Arc::new(Shape::Node { len, left, right }))
    }

    pub(crate) fn shape(&self) -> &Shape {
        &self.0
    }

    pub fn len(&self) -> usize {
        match &*self.0 {
            Shape::Leaf(_) => 1,
            Shape::Node { len, .. } => *len,
        }
    }

    /// Always false: words have at least one letter.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_leaf(&self) -> Option<Letter> {
        match &*self.0 {
            Shape::Leaf(l) => Some(*l),
            Shape::Node { .. } => None,
        }
    }

    pub fn split(&self) -> Option<(&NaWord, &NaWord)> {
        match &*self.0 {
            Shape::Leaf(_) => None,
            Shape::Node { left, right, .. } => Some((left, right)),
        }
    }

    /// Bracket a nonempty letter sequence into a comb.
    pub fn bracket(letters: &[Letter], direction: Direction) -> Result<Self> {
        let (first, rest) = letters.split_first().ok_or(Error::EmptyBracket)?;
        Ok(match direction {
            Direction::Left => rest.iter().fold(Self::leaf(*first), |acc, &l| {
                Self::node(acc, Self::leaf(l))
            }),
            Direction::Right => {
                let (last, init) = letters.split_last().expect("nonempty");
                init.iter()
                    .rev()
                    .fold(Self::leaf(*last), |acc, &l| Self::node(Self::leaf(l), acc))
            }
        })
    }

    /// The left comb `[z₁, …, zₘ]`.
    pub fn left_comb(letters: &[Letter]) -> Result<Self> {
        Self::bracket(letters, Direction::Left)
    }

    /// Leaves read left to right.
    pub fn leaves(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.len());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Letter>) {
        match &*self.0 {
            Shape::Leaf(l) => out.push(*l),
            Shape::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    /// True for `(((z₁z₂)z₃)…)zₘ`, including single letters.
    pub fn is_left_comb(&self) -> bool {
        let mut w = self;
        loop {
            match &*w.0 {
                Shape::Leaf(_) => return true,
                Shape::Node { left, right, .. } => {
                    if right.as_leaf().is_none() {
                        return false;
                    }
                    w = left;
                }
            }
        }
    }

    pub fn subtree(&self, path: &TreePath) -> Option<&NaWord> {
        let mut w = self;
        for step in &path.0 {
            let (l, r) = w.split()?;
            w = match step {
                Step::Left => l,
                Step::Right => r,
            };
        }
        Some(w)
    }

    /// Replace the subtree at `path` with `replacement`.
    pub fn replace(&self, path: &TreePath, replacement: &NaWord) -> Result<NaWord> {
        self.replace_from(&path.0, replacement)
            .ok_or_else(|| Error::InvalidPath { path: path.clone() })
    }

    fn replace_from(&self, steps: &[Step], replacement: &NaWord) -> Option<NaWord> {
        let Some((step, rest)) = steps.split_first() else {
            return Some(replacement.clone());
        };
        let (l, r) = self.split()?;
        Some(match step {
            Step::Left => NaWord::node(l.replace_from(rest, replacement)?, r.clone()),
            Step::Right => NaWord::node(l.clone(), r.replace_from(rest, replacement)?),
        })
    }

    /// All subtrees with their paths, root first, then left before right.
    pub fn subtrees(&self) -> Vec<(TreePath, &NaWord)> {
        let mut out = Vec::with_capacity(2 * self.len() - 1);
        let mut stack = vec![(TreePath::root(), self)];
        while let Some((p, w)) = stack.pop() {
            if let Some((l, r)) = w.split() {
                stack.push((p.child(Step::Right), r));
                stack.push((p.child(Step::Left), l));
            }
            out.push((p, w));
        }
        out
    }

    /// Every path at which `pattern` occurs as a subtree, in preorder.
    pub fn occurrences(&self, pattern: &NaWord) -> Vec<TreePath> {
        let mut out = Vec::new();
        self.find_occurrences(pattern, &mut TreePath::root(), &mut out);
        out
    }

    fn find_occurrences(&self, pattern: &NaWord, at: &mut TreePath, out: &mut Vec<TreePath>) {
        if self.len() < pattern.len() {
            return;
        }
        if self.len() == pattern.len() {
            if self == pattern {
                out.push(at.clone());
            }
            return;
        }
        if let Some((l, r)) = self.split() {
            at.0.push(Step::Left);
            l.find_occurrences(pattern, at, out);
            at.0.pop();
            at.0.push(Step::Right);
            r.find_occurrences(pattern, at, out);
            at.0.pop();
        }
    }
}

/// The weight order as a free function.
pub fn compare_words(u: &NaWord, v: &NaWord) -> Ordering {
    u.cmp(v)
}

impl Ord for NaWord {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        match (&*self.0, &*other.0) {
            (Shape::Leaf(a), Shape::Leaf(b)) => a.cmp(b),
            (Shape::Leaf(_), Shape::Node { .. }) => Ordering::Less,
            (Shape::Node { .. }, Shape::Leaf(_)) => Ordering::Greater,
            (
                Shape::Node {
                    len: n1,
                    left: l1,
                    right: r1,
                },
                Shape::Node {
                    len: n2,
                    left: l2,
                    right: r2,
                },
            ) => n1
                .cmp(n2)
                .then_with(|| r1.cmp(r2))
                .then_with(|| l1.cmp(l2)),
        }
    }
}

impl PartialOrd for NaWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for NaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Shape::Leaf(l) => write!(f, "#{}", l.0),
            Shape::Node { left, right, .. } => write!(f, "({left:?} {right:?})"),
        }
    }
}

/// All words of lengths `1..=max_len` over `alphabet_size` letters, one
/// ascending vector per length (index 0 holds length 1).
pub fn words_by_length(alphabet_size: usize, max_len: usize) -> Vec<Vec<NaWord>> {
    let mut by_len: Vec<Vec<NaWord>> = Vec::with_capacity(max_len);
    if max_len == 0 {
        return by_len;
    }
    by_len.push(
        (0..alphabet_size as u32)
            .map(|r| NaWord::leaf(Letter(r)))
            .collect(),
    );
    for n in 2..=max_len {
        let mut level = Vec::new();
        // right factors ascending (by length, then order), then left factors ascending
        for right_len in 1..n {
            let left_len = n - right_len;
            for r in &by_len[right_len - 1] {
                for l in &by_len[left_len - 1] {
                    level.push(NaWord::node(l.clone(), r.clone()));
                }
            }
        }
        debug_assert!(level.windows(2).all(|w| w[0] < w[1]));
        by_len.push(level);
    }
    by_len
}

/// All left combs of length `n`.
pub fn left_combs(alphabet_size: usize, n: usize) -> Vec<NaWord> {
    assert!(n >= 1);
    let mut out: Vec<NaWord> = (0..alphabet_size as u32)
        .map(|r| NaWord::leaf(Letter(r)))
        .collect();
    for _ in 1..n {
        out = out
            .iter()
            .flat_map(|w| {
                (0..alphabet_size as u32).map(move |r| NaWord::node(w.clone(), NaWord::leaf(Letter(r))))
            })
            .collect();
    }
    out.sort();
    out
}

/// A nonempty associative word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AWord(Vec<Letter>);

impl AWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self(letters))
    }

    pub fn letter(l: Letter) -> Self {
        Self(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last(&self) -> Letter {
        *self.0.last().expect("nonempty")
    }

    pub fn concat(&self, other: &AWord) -> AWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        AWord(v)
    }

    /// The corresponding left comb.
    pub fn to_left_comb(&self) -> NaWord {
        NaWord::left_comb(&self.0).expect("nonempty")
    }

    /// All words of length `n` over `alphabet_size` letters, lexicographically.
    pub fn all_of_length(alphabet_size: usize, n: usize) -> Vec<AWord> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w: Vec<Letter>| {
                    (0..alphabet_size as u32).map(move |r| {
                        let mut w = w.clone();
                        w.push(Letter(r));
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(AWord).collect()
    }
}

/// Degree first, then lexicographic.
impl Ord for AWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
