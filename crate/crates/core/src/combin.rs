//! Partitions, the cell poset `Lambda_n`, up-down tableaux, contents,
//! dimensions and branching: the index machinery for the cell modules of
//! `B_n`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::arith::{quantum_factorial, RationalFn};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("node ({0}, {1}) is not of the stated kind")]
    WrongNodeKind(u32, u32),
    #[error("({f}, {lambda}) is not a cell of Lambda_{n}")]
    InvalidCell { n: u32, f: u32, lambda: String },
    #[error("position {0} out of range")]
    BadPosition(usize),
    #[error("steps {0} and {1} pass through equal shapes; no swap is defined")]
    SwapUndefined(usize, usize),
}

/// A partition: weakly decreasing positive parts, no trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, CombinError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Row length with rows beyond the last counted as zero (1-indexed row).
    pub fn row(&self, row: u32) -> u32 {
        if row == 0 || row as usize > self.parts.len() {
            0
        } else {
            self.parts[row as usize - 1]
        }
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for row in 1..=(self.parts.len() as u32 + 1) {
            let col = self.row(row) + 1;
            if row == 1 || self.row(row - 1) >= col {
                out.push(Node { row, col });
            }
        }
        out
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for row in 1..=self.parts.len() as u32 {
            let col = self.row(row);
            if col >= 1 && self.row(row + 1) < col {
                out.push(Node { row, col });
            }
        }
        out
    }

    pub fn with_box_added(&self, p: Node) -> Result<Partition, CombinError> {
        if !self.addable_nodes().contains(&p) {
            return Err(CombinError::WrongNodeKind(p.row, p.col));
        }
        let mut parts = self.parts.clone();
        if p.row as usize > parts.len() {
            parts.push(1);
        } else {
            parts[p.row as usize - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn with_box_removed(&self, p: Node) -> Result<Partition, CombinError> {
        if !self.removable_nodes().contains(&p) {
            return Err(CombinError::WrongNodeKind(p.row, p.col));
        }
        let mut parts = self.parts.clone();
        parts[p.row as usize - 1] -= 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The single box by which two partitions of adjacent size differ.
    pub fn box_difference(&self, smaller: &Partition) -> Option<Node> {
        if self.size() != smaller.size() + 1 {
            return None;
        }
        let rows = self.parts.len().max(smaller.parts.len()) as u32;
        let mut found = None;
        for row in 1..=rows {
            let a = self.row(row);
            let b = smaller.row(row);
            if a == b {
                continue;
            }
            if a != b + 1 || found.is_some() {
                return None;
            }
            found = Some(Node { row, col: a });
        }
        found
    }

    /// Dominance: `self` dominates `other` (same size assumed by callers).
    pub fn dominates(&self, other: &Partition) -> bool {
        let rows = self.parts.len().max(other.parts.len()) as u32;
        let mut sa = 0u32;
        let mut sb = 0u32;
        for row in 1..=rows {
            sa += self.row(row);
            sb += other.row(row);
            if sa < sb {
                return false;
            }
        }
        true
    }

    /// Rowwise minimum, the largest partition contained in both.
    pub fn meet(&self, other: &Partition) -> Partition {
        let rows = self.parts.len().min(other.parts.len());
        let parts = (0..rows).map(|i| self.parts[i].min(other.parts[i])).collect();
        Partition { parts }
    }

    /// Product of hook lengths over the diagram.
    pub fn hook_product(&self) -> u128 {
        let conj = self.conjugate();
        let mut prod: u128 = 1;
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len {
                let hook = len as i64 + conj.row(j) as i64 - (i as i64 + 1) - j as i64 + 1;
                prod *= hook as u128;
            }
        }
        prod
    }

    /// `[lambda]!`.
    pub fn quantum_factorial(&self) -> RationalFn {
        quantum_factorial(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = CombinError;

    /// Comma-joined parts; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, CombinError> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|e| CombinError::InvalidPartition(format!("{s:?}: {e}")))?;
        Partition::new(parts)
    }
}

/// A box position in a Young diagram, rows and columns 1-indexed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Node {
    pub row: u32,
    pub col: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NodeKind {
    Addable,
    Removable,
}

/// `c_lambda(p)`: `col - row` for an addable node, `row - col` for a
/// removable one. The kind is always passed explicitly.
pub fn node_content(lambda: &Partition, p: Node, kind: NodeKind) -> Result<i64, CombinError> {
    let listed = match kind {
        NodeKind::Addable => lambda.addable_nodes(),
        NodeKind::Removable => lambda.removable_nodes(),
    };
    if !listed.contains(&p) {
        return Err(CombinError::WrongNodeKind(p.row, p.col));
    }
    Ok(match kind {
        NodeKind::Addable => p.col as i64 - p.row as i64,
        NodeKind::Removable => p.row as i64 - p.col as i64,
    })
}

/// A cell `(f, lambda)` of `Lambda_n` with `lambda` a partition of `n - 2f`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellLabel {
    pub f: u32,
    pub lambda: Partition,
}

impl CellLabel {
    pub fn new(n: u32, f: u32, lambda: Partition) -> Result<Self, CombinError> {
        if 2 * f > n || lambda.size() != n - 2 * f {
            return Err(CombinError::InvalidCell { n, f, lambda: lambda.to_string() });
        }
        Ok(CellLabel { f, lambda })
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, ({}))", self.f, self.lambda)
    }
}

impl fmt::Debug for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `m` in lexicographically descending order.
pub fn partitions_of(m: u32) -> Vec<Partition> {
    fn rec(m: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if m == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        let hi = max.min(m);
        for first in (1..=hi).rev() {
            prefix.push(first);
            rec(m - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// The cells of `Lambda_n`, listed by `f` ascending and within each `f` by
/// lexicographically descending partitions (a deterministic refinement of
/// dominance).
pub fn cell_labels(n: u32) -> Vec<CellLabel> {
    let mut out = Vec::new();
    for f in 0..=n / 2 {
        for lambda in partitions_of(n - 2 * f) {
            out.push(CellLabel { f, lambda });
        }
    }
    out
}

/// `rank Delta(f, lambda) = n! (2f-1)!! / ((2f)! prod hooks)`.
pub fn cell_dim(n: u32, f: u32, lambda: &Partition) -> Result<u64, CombinError> {
    CellLabel::new(n, f, lambda.clone())?;
    let mut num: u128 = 1;
    for k in 1..=n as u128 {
        num *= k;
    }
    let mut i = 1u128;
    while i <= 2 * f as u128 {
        if i % 2 == 1 {
            num *= i; // (2f-1)!!
        }
        i += 1;
    }
    let mut den: u128 = 1;
    for k in 1..=2 * f as u128 {
        den *= k;
    }
    den *= lambda.hook_product();
    assert_eq!(num % den, 0, "dimension formula must divide exactly");
    Ok((num / den) as u64)
}

/// The Jucys-Murphy eigenvalue attached to one tableau step, stored as the
/// monomial `r^{e_r} q^{e_q}` with `e_r` in `{+1, -1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Content {
    pub e_r: i8,
    pub e_q: i64,
}

impl Content {
    pub fn addition(p: Node) -> Content {
        Content { e_r: 1, e_q: 2 * (p.col as i64 - p.row as i64) }
    }

    pub fn removal(p: Node) -> Content {
        Content { e_r: -1, e_q: 2 * (p.row as i64 - p.col as i64) }
    }

    pub fn inv(&self) -> Content {
        Content { e_r: -self.e_r, e_q: -self.e_q }
    }

    pub fn to_rational(&self) -> RationalFn {
        RationalFn::monomial(1, self.e_q, self.e_r as i64)
    }
}

/// An up-down tableau: a path of partitions from the empty shape, each step
/// adding or removing exactly one box.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpDownTableau {
    steps: Vec<Partition>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StepDir {
    Added,
    Removed,
}

impl UpDownTableau {
    pub fn new(steps: Vec<Partition>) -> Result<Self, CombinError> {
        if steps.first() != Some(&Partition::empty()) {
            return Err(CombinError::InvalidPartition("tableau must start at the empty shape".into()));
        }
        for w in steps.windows(2) {
            let ok = w[1].box_difference(&w[0]).is_some() || w[0].box_difference(&w[1]).is_some();
            if !ok {
                return Err(CombinError::InvalidPartition(format!(
                    "consecutive shapes ({}) and ({}) do not differ by one box",
                    w[0], w[1]
                )));
            }
        }
        Ok(UpDownTableau { steps })
    }

    pub fn n(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn step(&self, i: usize) -> &Partition {
        &self.steps[i]
    }

    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    pub fn shape(&self) -> &Partition {
        self.steps.last().unwrap()
    }

    /// The box and direction of step `k` (1-indexed).
    pub fn step_box(&self, k: usize) -> (Node, StepDir) {
        let prev = &self.steps[k - 1];
        let next = &self.steps[k];
        if let Some(p) = next.box_difference(prev) {
            (p, StepDir::Added)
        } else {
            (prev.box_difference(next).expect("valid tableau"), StepDir::Removed)
        }
    }

    /// `c_t(k)` for `k = 1..=n`.
    pub fn contents(&self) -> Vec<Content> {
        (1..=self.n()).map(|k| self.content_at(k)).collect()
    }

    pub fn content_at(&self, k: usize) -> Content {
        let (p, dir) = self.step_box(k);
        match dir {
            StepDir::Added => Content::addition(p),
            StepDir::Removed => Content::removal(p),
        }
    }

    /// The first `m` steps as a tableau of length `m`.
    pub fn truncate(&self, m: usize) -> UpDownTableau {
        UpDownTableau { steps: self.steps[..=m].to_vec() }
    }

    pub fn with_step_replaced(&self, k: usize, shape: Partition) -> UpDownTableau {
        let mut steps = self.steps.clone();
        steps[k] = shape;
        UpDownTableau { steps }
    }
}

impl fmt::Display for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .steps
            .iter()
            .map(|p| if p.is_empty() { "∅".to_string() } else { p.to_string() })
            .collect();
        f.write_str(&s.join("|"))
    }
}

impl fmt::Debug for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for UpDownTableau {
    type Err = CombinError;

    fn from_str(s: &str) -> Result<Self, CombinError> {
        let steps: Result<Vec<Partition>, _> = s.split('|').map(Partition::from_str).collect();
        UpDownTableau::new(steps?)
    }
}

/// Minimal number of single-box steps from `a` to `b`.
fn step_distance(a: &Partition, b: &Partition) -> u32 {
    let meet = a.meet(b);
    (a.size() - meet.size()) + (b.size() - meet.size())
}

/// Neighbor shapes of `s` in enumeration order: removals (row ascending),
/// then additions (row ascending).
fn neighbors(s: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    for p in s.removable_nodes() {
        out.push(s.with_box_removed(p).unwrap());
    }
    for p in s.addable_nodes() {
        out.push(s.with_box_added(p).unwrap());
    }
    out
}

/// Complete, duplicate-free, deterministically ordered enumeration of the
/// up-down tableaux of the cell `(f, lambda)` in `Lambda_n`: depth-first over
/// steps with removals before additions, then by row index.
pub fn enum_updown(n: u32, f: u32, lambda: &Partition) -> Result<Vec<UpDownTableau>, CombinError> {
    CellLabel::new(n, f, lambda.clone())?;
    let mut out = Vec::new();
    let mut prefix = vec![Partition::empty()];
    fn dfs(
        prefix: &mut Vec<Partition>,
        n: u32,
        target: &Partition,
        out: &mut Vec<UpDownTableau>,
    ) {
        let i = prefix.len() as u32 - 1;
        let current = prefix.last().unwrap().clone();
        if i == n {
            if &current == target {
                out.push(UpDownTableau { steps: prefix.clone() });
            }
            return;
        }
        let remaining = n - i;
        for next in neighbors(&current) {
            let d = step_distance(&next, target);
            if d + 1 <= remaining && (remaining - 1 - d) % 2 == 0 {
                prefix.push(next);
                dfs(prefix, n, target, out);
                prefix.pop();
            }
        }
    }
    dfs(&mut prefix, n, lambda, &mut out);
    Ok(out)
}

/// The distinguished maximal tableau: `f` hops through `(1)` and back, then
/// `lambda` filled row by row.
pub fn t_lambda(n: u32, f: u32, lambda: &Partition) -> Result<UpDownTableau, CombinError> {
    CellLabel::new(n, f, lambda.clone())?;
    let mut steps = vec![Partition::empty()];
    let one = Partition::new(vec![1]).unwrap();
    for _ in 0..f {
        steps.push(one.clone());
        steps.push(Partition::empty());
    }
    let mut cur = Partition::empty();
    for (row, &len) in lambda.parts().iter().enumerate() {
        for col in 1..=len {
            cur = cur.with_box_added(Node { row: row as u32 + 1, col }).unwrap();
            steps.push(cur.clone());
        }
    }
    Ok(UpDownTableau { steps })
}

/// All tableaux of the same cell agreeing with `t` everywhere except
/// possibly at position `k` (`1 <= k <= n-1`); always contains `t`.
pub fn sim_class(t: &UpDownTableau, k: usize) -> Result<Vec<UpDownTableau>, CombinError> {
    if k == 0 || k >= t.n() {
        return Err(CombinError::BadPosition(k));
    }
    let before = t.step(k - 1);
    let after = t.step(k + 1);
    let mut out = Vec::new();
    for mid in neighbors(before) {
        if step_distance(&mid, after) == 1 {
            out.push(t.with_step_replaced(k, mid));
        }
    }
    Ok(out)
}

/// The unique tableau `t s_k` obtained by swapping the boxes of steps `k`
/// and `k+1`, when they lie in neither the same row nor the same column;
/// `None` when no such tableau exists. Requires `t_{k-1} != t_{k+1}`.
pub fn apply_s(t: &UpDownTableau, k: usize) -> Result<Option<UpDownTableau>, CombinError> {
    if k == 0 || k >= t.n() {
        return Err(CombinError::BadPosition(k));
    }
    if t.step(k - 1) == t.step(k + 1) {
        return Err(CombinError::SwapUndefined(k, k + 1));
    }
    let (a, _) = t.step_box(k);
    let (b, dir_b) = t.step_box(k + 1);
    if a.row == b.row || a.col == b.col {
        return Ok(None);
    }
    let mid = match dir_b {
        StepDir::Added => t.step(k - 1).with_box_added(b),
        StepDir::Removed => t.step(k - 1).with_box_removed(b),
    }
    .expect("swapped step must stay a partition when rows and columns differ");
    let s = t.with_step_replaced(k, mid);
    debug_assert_eq!(s.content_at(k), t.content_at(k + 1));
    debug_assert_eq!(s.content_at(k + 1), t.content_at(k));
    Ok(Some(s))
}

/// Cells `(l, mu)` of `Lambda_{n-1}` from which `(f, lambda)` is reached by
/// adding or removing one box: `l = f` with a box removed from `lambda`, or
/// `l = f - 1` with a box added.
pub fn branching_predecessors(n: u32, f: u32, lambda: &Partition) -> Result<Vec<CellLabel>, CombinError> {
    CellLabel::new(n, f, lambda.clone())?;
    let mut out = Vec::new();
    if n >= 1 {
        for p in lambda.removable_nodes() {
            out.push(CellLabel { f, lambda: lambda.with_box_removed(p).unwrap() });
        }
        if f >= 1 {
            for p in lambda.addable_nodes() {
                out.push(CellLabel { f: f - 1, lambda: lambda.with_box_added(p).unwrap() });
            }
        }
    }
    Ok(out)
}

/// Compare two levels `(f, shape)` in the cell order: larger `f` is larger;
/// equal `f` compares by dominance. `None` when incomparable.
pub fn cmp_cell_level(a: &Partition, b: &Partition) -> Option<std::cmp::Ordering> {
    use std::cmp::Ordering;
    if a == b {
        return Some(Ordering::Equal);
    }
    // At a fixed level i, |shape| determines f: smaller shape means more
    // removals, hence larger f, hence larger in the cell order.
    match b.size().cmp(&a.size()) {
        Ordering::Less => Some(Ordering::Less),
        Ordering::Greater => Some(Ordering::Greater),
        Ordering::Equal => {
            if a.dominates(b) {
                Some(Ordering::Greater)
            } else if b.dominates(a) {
                Some(Ordering::Less)
            } else {
                None
            }
        }
    }
}

/// `(2n-1)!!`, the empty product at `n = 0`.
pub fn double_factorial_odd(n: u32) -> u128 {
    (0..n as u128).map(|j| 2 * j + 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cell_labels_small() {
        let c2 = cell_labels(2);
        assert_eq!(
            c2,
            vec![
                CellLabel { f: 0, lambda: pt(&[2]) },
                CellLabel { f: 0, lambda: pt(&[1, 1]) },
                CellLabel { f: 1, lambda: Partition::empty() },
            ]
        );
        let c3 = cell_labels(3);
        assert_eq!(c3.len(), 4);
        assert_eq!(c3[0].lambda, pt(&[3]));
        assert_eq!(c3[1].lambda, pt(&[2, 1]));
        assert_eq!(c3[2].lambda, pt(&[1, 1, 1]));
        assert_eq!(c3[3], CellLabel { f: 1, lambda: pt(&[1]) });
        assert_eq!(cell_labels(4).len(), 8);
    }

    #[test]
    fn node_contents() {
        assert_eq!(node_content(&pt(&[2]), Node { row: 1, col: 3 }, NodeKind::Addable).unwrap(), 2);
        assert_eq!(node_content(&pt(&[2]), Node { row: 1, col: 2 }, NodeKind::Removable).unwrap(), -1);
        let lam = pt(&[2, 1]);
        let adds = lam.addable_nodes();
        assert_eq!(
            adds,
            vec![Node { row: 1, col: 3 }, Node { row: 2, col: 2 }, Node { row: 3, col: 1 }]
        );
        let contents: Vec<i64> = adds
            .iter()
            .map(|&p| node_content(&lam, p, NodeKind::Addable).unwrap())
            .collect();
        assert_eq!(contents, vec![2, 0, -2]);
        assert!(node_content(&pt(&[2]), Node { row: 1, col: 1 }, NodeKind::Addable).is_err());
    }

    #[test]
    fn dims() {
        assert_eq!(cell_dim(3, 1, &pt(&[1])).unwrap(), 3);
        assert_eq!(cell_dim(4, 2, &Partition::empty()).unwrap(), 3);
        let total: u128 = cell_labels(4)
            .iter()
            .map(|c| {
                let d = cell_dim(4, c.f, &c.lambda).unwrap() as u128;
                d * d
            })
            .sum();
        assert_eq!(total, 105);
    }

    #[test]
    fn enumeration_counts() {
        let ts = enum_updown(2, 1, &Partition::empty()).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].to_string(), "∅|1|∅");
        assert_eq!(enum_updown(3, 1, &pt(&[1])).unwrap().len(), 3);
        assert_eq!(enum_updown(5, 1, &pt(&[3])).unwrap().len(), 10);
        assert_eq!(cell_dim(5, 1, &pt(&[3])).unwrap(), 10);
    }

    #[test]
    fn enumeration_matches_dimension_formula_up_to_n6() {
        for n in 1..=6u32 {
            for cell in cell_labels(n) {
                let count = enum_updown(n, cell.f, &cell.lambda).unwrap().len() as u64;
                assert_eq!(count, cell_dim(n, cell.f, &cell.lambda).unwrap(), "cell {cell} at n={n}");
            }
        }
    }

    #[test]
    fn contents_examples() {
        let hop: UpDownTableau = "∅|1|∅".parse().unwrap();
        let cs = hop.contents();
        assert_eq!(cs, vec![Content { e_r: 1, e_q: 0 }, Content { e_r: -1, e_q: 0 }]);

        let t: UpDownTableau = "∅|1|2|1".parse().unwrap();
        assert_eq!(
            t.contents(),
            vec![
                Content { e_r: 1, e_q: 0 },
                Content { e_r: 1, e_q: 2 },
                Content { e_r: -1, e_q: -2 },
            ]
        );
    }

    #[test]
    fn content_strings_separate_tableaux() {
        for n in 1..=5u32 {
            for cell in cell_labels(n) {
                let ts = enum_updown(n, cell.f, &cell.lambda).unwrap();
                let mut seen = std::collections::HashSet::new();
                for t in &ts {
                    assert!(seen.insert(t.contents()), "duplicate content string in {cell}");
                }
            }
        }
    }

    #[test]
    fn t_lambda_examples() {
        assert_eq!(t_lambda(2, 1, &Partition::empty()).unwrap().to_string(), "∅|1|∅");
        assert_eq!(t_lambda(4, 1, &pt(&[2])).unwrap().to_string(), "∅|1|∅|1|2");
        assert_eq!(t_lambda(3, 0, &pt(&[2, 1])).unwrap().to_string(), "∅|1|2|2,1");
    }

    #[test]
    fn sim_class_examples() {
        let hop: UpDownTableau = "∅|1|∅".parse().unwrap();
        assert_eq!(sim_class(&hop, 1).unwrap(), vec![hop.clone()]);

        // Interior equal-shape class: size = #addable + #removable of (1).
        let t: UpDownTableau = "∅|1|∅|1|2".parse().unwrap();
        let class = sim_class(&t, 2).unwrap();
        assert_eq!(class.len(), 3);

        // Distinct-shape classes have one or two members.
        let u: UpDownTableau = "∅|1|2|2,1".parse().unwrap();
        assert_eq!(sim_class(&u, 2).unwrap().len(), 2);
        let v: UpDownTableau = "∅|1|2|3".parse().unwrap();
        assert_eq!(sim_class(&v, 2).unwrap().len(), 1);
    }

    #[test]
    fn apply_s_examples() {
        let same_row: UpDownTableau = "∅|1|2".parse().unwrap();
        assert_eq!(apply_s(&same_row, 1).unwrap(), None);
        let same_col: UpDownTableau = "∅|1|1,1".parse().unwrap();
        assert_eq!(apply_s(&same_col, 1).unwrap(), None);

        let t: UpDownTableau = "∅|1|2|2,1".parse().unwrap();
        let s = apply_s(&t, 2).unwrap().unwrap();
        assert_eq!(s.to_string(), "∅|1|1,1|2,1");
        assert_eq!(s.content_at(2), t.content_at(3));
        assert_eq!(s.content_at(3), t.content_at(2));

        let hop: UpDownTableau = "∅|1|∅".parse().unwrap();
        assert!(apply_s(&hop, 1).is_err());
    }

    #[test]
    fn branching_examples() {
        let preds = branching_predecessors(3, 1, &pt(&[1])).unwrap();
        assert_eq!(preds.len(), 3);
        assert!(preds.contains(&CellLabel { f: 1, lambda: Partition::empty() }));
        assert!(preds.contains(&CellLabel { f: 0, lambda: pt(&[2]) }));
        assert!(preds.contains(&CellLabel { f: 0, lambda: pt(&[1, 1]) }));
        let dim_sum: u64 = preds.iter().map(|c| cell_dim(2, c.f, &c.lambda).unwrap()).sum();
        assert_eq!(dim_sum, cell_dim(3, 1, &pt(&[1])).unwrap());

        assert_eq!(
            branching_predecessors(4, 0, &pt(&[4])).unwrap(),
            vec![CellLabel { f: 0, lambda: pt(&[3]) }]
        );
        assert_eq!(
            branching_predecessors(4, 2, &Partition::empty()).unwrap(),
            vec![CellLabel { f: 1, lambda: pt(&[1]) }]
        );
    }

    #[test]
    fn branching_dimension_identity_up_to_n6() {
        for n in 2..=6u32 {
            for cell in cell_labels(n) {
                let d = cell_dim(n, cell.f, &cell.lambda).unwrap();
                let sum: u64 = branching_predecessors(n, cell.f, &cell.lambda)
                    .unwrap()
                    .iter()
                    .map(|c| cell_dim(n - 1, c.f, &c.lambda).unwrap())
                    .sum();
                assert_eq!(d, sum, "branching sum at {cell}, n={n}");
            }
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(pt(&[3]).conjugate(), pt(&[1, 1, 1]));
        assert_eq!(pt(&[2, 1]).conjugate(), pt(&[2, 1]));
        assert_eq!(pt(&[3, 2]).conjugate(), pt(&[2, 2, 1]));
    }

    #[test]
    fn rank_sum_is_odd_double_factorial() {
        for n in 1..=6u32 {
            let total: u128 = cell_labels(n)
                .iter()
                .map(|c| {
                    let d = cell_dim(n, c.f, &c.lambda).unwrap() as u128;
                    d * d
                })
                .sum();
            assert_eq!(total, double_factorial_odd(n), "n = {n}");
        }
    }

    #[test]
    fn central_content_product_is_cell_invariant() {
        for n in 1..=5u32 {
            for cell in cell_labels(n) {
                let ts = enum_updown(n, cell.f, &cell.lambda).unwrap();
                let key = |t: &UpDownTableau| {
                    let mut e_r = 0i64;
                    let mut e_q = 0i64;
                    for c in t.contents() {
                        e_r += c.e_r as i64;
                        e_q += c.e_q;
                    }
                    (e_r, e_q)
                };
                let first = key(&ts[0]);
                for t in &ts {
                    assert_eq!(key(t), first, "central content differs in {cell}");
                }
                if n == 3 && cell.f == 1 {
                    // product = r for every tableau of (1, (1))
                    assert_eq!(first, (1, 0));
                }
            }
        }
    }

    #[test]
    fn equal_shape_step_contents_avoid_degenerate_values() {
        // For t_{k-1} = t_{k+1}: c_t(k) is never -q or q^{-1} as a monomial,
        // and c_t(k) != c_s(k)^{±1} for distinct class members.
        for n in 2..=6u32 {
            for cell in cell_labels(n) {
                for t in enum_updown(n, cell.f, &cell.lambda).unwrap() {
                    for k in 1..t.n() {
                        if t.step(k - 1) != t.step(k + 1) {
                            continue;
                        }
                        let c = t.content_at(k);
                        let minus_q = -&RationalFn::q();
                        let q_inv = RationalFn::q().inv().unwrap();
                        assert_ne!(c.to_rational(), minus_q);
                        assert_ne!(c.to_rational(), q_inv);
                        for s in sim_class(&t, k).unwrap() {
                            if s == t {
                                continue;
                            }
                            let cs = s.content_at(k);
                            assert_ne!(c, cs);
                            assert_ne!(c, cs.inv());
                        }
                    }
                }
            }
        }
    }
}
