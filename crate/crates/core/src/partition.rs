//! Partitions, Young diagrams, nodes, residues, and p-regularity.
//!
//! Row 1 is the top row; "above" always means strictly smaller row index.
//! Partitions are stored canonically: weakly decreasing positive parts, no
//! trailing zeros.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing sequence of positive integer parts.
/// The empty partition (of 0) is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!("{parts:?} not weakly decreasing")));
            }
        }
        if parts.iter().any(|&x| x == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} contains zero part")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn single(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|, the number being partitioned.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based row index; 0 beyond the last row.
    pub fn part(&self, row: usize) -> u32 {
        if row >= 1 && row <= self.parts.len() {
            self.parts[row - 1]
        } else {
            0
        }
    }

    /// λ_1, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(1)
    }

    /// The tail (λ_2, λ_3, ...).
    pub fn tail(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// True iff no part value occurs p or more times.
    pub fn is_p_regular(&self, p: &PrimeChar) -> bool {
        let mut run = 1u32;
        for w in self.parts.windows(2) {
            if w[0] == w[1] {
                run += 1;
                if run >= p.p() {
                    return false;
                }
            } else {
                run = 1;
            }
        }
        true
    }

    /// All removable and addable nodes with residues, in rim order from
    /// bottom left to top right. This is the signature order consumed by
    /// the crystal calculus.
    pub fn boundary_nodes(&self, p: &PrimeChar) -> Vec<BoundaryEntry> {
        let len = self.parts.len();
        let mut out = Vec::new();
        out.push(BoundaryEntry {
            node: Node::new(len as u32 + 1, 1),
            kind: NodeKind::Addable,
            residue: Node::new(len as u32 + 1, 1).residue(p),
        });
        for r in (1..=len).rev() {
            let cur = self.parts[r - 1];
            let below = if r < len { self.parts[r] } else { 0 };
            if cur > below {
                let node = Node::new(r as u32, cur);
                out.push(BoundaryEntry {
                    node,
                    kind: NodeKind::Removable,
                    residue: node.residue(p),
                });
            }
            let above = if r > 1 { self.parts[r - 2] } else { u32::MAX };
            if above > cur {
                let node = Node::new(r as u32, cur + 1);
                out.push(BoundaryEntry {
                    node,
                    kind: NodeKind::Addable,
                    residue: node.residue(p),
                });
            }
        }
        out
    }

    /// λ_A for a removable node A.
    pub fn remove_node(&self, a: Node) -> Result<Partition> {
        let r = a.row as usize;
        if r < 1 || r > self.parts.len() || self.part(r) != a.col || self.part(r + 1) >= a.col {
            return Err(Error::NotRemovable { node: a });
        }
        let mut parts = self.parts.clone();
        parts[r - 1] -= 1;
        if parts[r - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// λ^B for an addable node B (dual of `remove_node`).
    pub fn add_node(&self, b: Node) -> Result<Partition> {
        let r = b.row as usize;
        if r < 1 || r > self.parts.len() + 1 || self.part(r) + 1 != b.col {
            return Err(Error::NotAddable { node: b });
        }
        if r > 1 && self.part(r - 1) < b.col {
            return Err(Error::NotAddable { node: b });
        }
        let mut parts = self.parts.clone();
        if r == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// The partition (n−m, μ_1, μ_2, ...) of n, for μ = self of m.
    pub fn attach(n: u32, mu: &Partition) -> Result<Partition> {
        let m = mu.n();
        let first = n as i64 - m as i64;
        if first < mu.first() as i64 {
            return Err(Error::FirstPartTooSmall {
                first,
                mu1: mu.first(),
            });
        }
        if first == 0 {
            // only possible when mu is empty
            return Ok(Partition::empty());
        }
        let mut parts = Vec::with_capacity(mu.len() + 1);
        parts.push(first as u32);
        parts.extend_from_slice(mu.parts());
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let v: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(s.to_string()))?;
            parts.push(v);
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The characteristic: a prime p with δ_p = 1 iff p = 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct PrimeChar {
    p: u32,
}

impl PrimeChar {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeChar { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// δ_p: 1 if p = 2, else 0.
    pub fn delta(&self) -> u32 {
        if self.p == 2 {
            1
        } else {
            0
        }
    }

    pub fn residue(&self, v: i64) -> ResidueClass {
        ResidueClass::new(v, *self)
    }

    pub fn residues(&self) -> impl Iterator<Item = ResidueClass> + '_ {
        let p = *self;
        (0..self.p).map(move |v| ResidueClass::new(v as i64, p))
    }
}

/// A cell (row, col) of a Young diagram; both coordinates are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Node {
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1);
        Node { row, col }
    }

    /// res A := col − row (mod p).
    pub fn residue(&self, p: &PrimeChar) -> ResidueClass {
        ResidueClass::new(self.col as i64 - self.row as i64, *p)
    }
}

/// An element of ℤ/pℤ, canonicalized to [0, p−1].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct ResidueClass {
    value: u32,
    p: u32,
}

impl ResidueClass {
    pub fn new(v: i64, p: PrimeChar) -> Self {
        let m = p.p() as i64;
        ResidueClass {
            value: v.rem_euclid(m) as u32,
            p: p.p(),
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// −i, canonicalized. Used by the Mullineux recursion.
    pub fn neg(&self) -> ResidueClass {
        ResidueClass {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Removable,
    Addable,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct BoundaryEntry {
    pub node: Node,
    pub kind: NodeKind,
    pub residue: ResidueClass,
}

/// All partitions of n, ordered lexicographically on part sequences
/// ((1,1,...,1) first, (n) last).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            // prefix is built with the first part chosen first, ascending
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=remaining.min(max_part) {
            prefix.push(first);
            // re-sort not needed: parts are pushed in weakly decreasing order
            rec(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    // Generate with the *first* part ascending so the output is lex-ascending.
    // A partition is determined by its first part k and a partition of n-k
    // with parts ≤ k; recursing gives descending part sequences.
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::empty());
        return out;
    }
    let mut prefix = Vec::new();
    for first in 1..=n {
        prefix.push(first);
        rec(n - first, first, &mut prefix, &mut out);
        prefix.pop();
    }
    out
}

/// All p-regular partitions of n, same ordering as `partitions_of`.
pub fn p_regular_partitions_of(n: u32, p: &PrimeChar) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|la| la.is_p_regular(p))
        .collect()
}
