//! h-strict partitions, residues, h-bars and bar cores.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanType, ContentVector, Residue};
use crate::error::{Error, Result};

/// A partition stored as its weakly decreasing list of positive parts.
///
/// Whether it is h-strict for a given `h` is a property checked by
/// [`is_h_strict`], not an invariant of the type.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates that `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zero rows.
    pub fn from_rows(mut rows: Vec<usize>) -> Self {
        rows.retain(|&p| p > 0);
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: rows }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_r` for a 1-based row index, `0` past the last row.
    pub fn row(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The degree `n = Σ λ_r`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains(&self, node: Node) -> bool {
        node.col <= self.row(node.row)
    }

    /// Adds `count` nodes at the end of `row` (1-based) if the outcome is
    /// still a Young diagram.
    pub(crate) fn grow_row(&self, row: usize, count: usize) -> Option<Partition> {
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(0);
        }
        let idx = row.checked_sub(1)?;
        if idx >= parts.len() {
            return None;
        }
        parts[idx] += count;
        if idx > 0 && parts[idx] > parts[idx - 1] {
            return None;
        }
        Some(Partition { parts })
    }

    /// Removes `count` nodes from the end of `row` if the outcome is still a
    /// Young diagram.
    pub(crate) fn shrink_row(&self, row: usize, count: usize) -> Option<Partition> {
        let idx = row.checked_sub(1)?;
        let mut parts = self.parts.clone();
        let len = *parts.get(idx)?;
        if len < count {
            return None;
        }
        parts[idx] = len - count;
        if parts.get(idx + 1).is_some_and(|&next| next > parts[idx]) {
            return None;
        }
        if parts[idx] == 0 {
            parts.truncate(idx);
        }
        Some(Partition { parts })
    }

    /// All nodes of the Young diagram, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |col| Node { row: r + 1, col }))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Compact JSON-style rendering, e.g. `[16,11,10,10,9,5,1]` or `[]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `16,11,10` as well as the JSON array form `[16,11,10]`.
/// The empty string and `[]` both give the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition {
                        parts: Vec::new(),
                        reason: format!("cannot parse part {:?} in {s:?}", t.trim()),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A box `(row, col)` of a Young diagram, 1-based matrix coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// `h | part`, with the convention that `∞` divides nothing positive.
pub(crate) fn divides(ct: CartanType, part: usize) -> bool {
    match ct.h() {
        Some(h) => part.is_multiple_of(h),
        None => part == 0,
    }
}

/// Equal adjacent parts must be divisible by `h`.
pub fn is_h_strict(lam: &Partition, ct: CartanType) -> bool {
    lam.parts
        .windows(2)
        .all(|w| w[0] != w[1] || divides(ct, w[0]))
}

/// `λ_r − λ_{r+1} < h` when `h | λ_r`, and `≤ h` otherwise.
pub fn is_restricted(lam: &Partition, ct: CartanType) -> bool {
    let Some(h) = ct.h() else {
        return true;
    };
    (0..lam.len()).all(|r| {
        let cur = lam.parts[r];
        let next = lam.parts.get(r + 1).copied().unwrap_or(0);
        let diff = cur - next;
        if cur.is_multiple_of(h) {
            diff < h
        } else {
            diff <= h
        }
    })
}

/// Residue of a column: the pattern `0,1,…,ℓ,…,1,0` repeated, or `col − 1`
/// when `h = ∞`.
pub fn residue(col: usize, ct: CartanType) -> Residue {
    debug_assert!(col >= 1);
    match ct.h() {
        Some(h) => {
            let t = (col - 1) % h;
            t.min(h - 1 - t)
        }
        None => col - 1,
    }
}

pub fn content(lam: &Partition, ct: CartanType) -> ContentVector {
    let mut gamma = ContentVector::new();
    let longest = lam.row(1);
    // columns with at least k rows reaching them
    for col in 1..=longest {
        let height = lam.parts.iter().take_while(|&&p| p >= col).count();
        gamma.add_count(residue(col, ct), height);
    }
    gamma
}

/// All h-strict partitions of `n`, sorted lexicographically.
pub fn enumerate_h_strict(n: usize, ct: CartanType) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    descend(n, n, ct, &mut cur, &mut out);
    out.sort();
    out
}

fn descend(
    remaining: usize,
    max_part: usize,
    ct: CartanType,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        if cur.last() == Some(&p) && !divides(ct, p) {
            continue;
        }
        cur.push(p);
        descend(remaining - p, p, ct, cur, out);
        cur.pop();
    }
}

/// All restricted h-strict partitions of `n`, sorted lexicographically.
pub fn enumerate_restricted(n: usize, ct: CartanType) -> Vec<Partition> {
    enumerate_h_strict(n, ct)
        .into_iter()
        .filter(|lam| is_restricted(lam, ct))
        .collect()
}

/// An h-bar. Rows are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Bar {
    /// The rightmost `h` nodes of one row.
    B1 { row: usize },
    /// Two whole rows whose lengths sum to `h`.
    B2 { rows: (usize, usize) },
}

/// Every h-bar of `lam`: first the B1 bars by row, then the B2 bars by row
/// pair. Bars whose removal would not leave an h-strict partition are
/// dropped. Empty for `h = ∞`.
pub fn h_bars(lam: &Partition, ct: CartanType) -> Vec<Bar> {
    let Some(h) = ct.h() else {
        return Vec::new();
    };
    let mut bars = Vec::new();
    for (idx, &len) in lam.parts.iter().enumerate() {
        if len < h {
            continue;
        }
        if len % h == 0 || !lam.parts.contains(&(len - h)) {
            bars.push(Bar::B1 { row: idx + 1 });
        }
    }
    for a in 0..lam.len() {
        for b in a + 1..lam.len() {
            if lam.parts[a] + lam.parts[b] == h {
                bars.push(Bar::B2 {
                    rows: (a + 1, b + 1),
                });
            }
        }
    }
    bars.retain(|&bar| is_h_strict(&remove_bar(lam, bar, ct), ct));
    bars
}

/// Removes a bar and re-sorts the rows.
pub fn remove_bar(lam: &Partition, bar: Bar, ct: CartanType) -> Partition {
    let h = ct.h().expect("bars only exist for finite h");
    let mut rows = lam.parts.clone();
    match bar {
        Bar::B1 { row } => rows[row - 1] -= h,
        Bar::B2 { rows: (a, b) } => {
            rows[a - 1] = 0;
            rows[b - 1] = 0;
        }
    }
    Partition::from_rows(rows)
}

/// Removes bars in canonical order until none remain; returns the core and
/// the number of bars removed.
pub fn bar_core_and_weight(lam: &Partition, ct: CartanType) -> (Partition, usize) {
    let mut cur = lam.clone();
    let mut weight = 0;
    while let Some(&bar) = h_bars(&cur, ct).first() {
        cur = remove_bar(&cur, bar, ct);
        weight += 1;
    }
    (cur, weight)
}

pub fn bar_core(lam: &Partition, ct: CartanType) -> Partition {
    bar_core_and_weight(lam, ct).0
}

pub fn bar_weight(lam: &Partition, ct: CartanType) -> usize {
    bar_core_and_weight(lam, ct).1
}

/// `b(λ)`: number of parts not divisible by `h`.
pub fn b_of(lam: &Partition, ct: CartanType) -> usize {
    lam.parts.iter().filter(|&&p| !divides(ct, p)).count()
}

/// `a(λ) = n − b(λ)`.
pub fn a_of(lam: &Partition, ct: CartanType) -> usize {
    lam.size() - b_of(lam, ct)
}
