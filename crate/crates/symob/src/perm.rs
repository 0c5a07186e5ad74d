//! Exact permutation and partition combinatorics for symmetric groups.
//!
//! Permutations are stored in one-line notation with 1-based images.
//! The composition-order convention is not hardwired: it is selected once
//! at startup by a probe (see [`compose_order`]) that demands the identity
//! `tau_{k-1} (k-1 k) = tau_k` for the block cycles produced by
//! [`Partition::make_tau`]. All group-algebra computations inherit the
//! selected convention, and its tag is recorded in every report.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SymobError};

/// An element of S_k in one-line notation: `images[i]` is the image of `i+1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u8>,
}

/// Order in which `compose(a, b)` applies its arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComposeOrder {
    /// `compose(a, b)` applies `b` first, then `a` (right-to-left, functional).
    BFirst,
    /// `compose(a, b)` applies `a` first, then `b` (left-to-right).
    AFirst,
}

static COMPOSE_ORDER: OnceLock<ComposeOrder> = OnceLock::new();

/// The globally selected composition order.
///
/// Selected by probing `compose(tau_{k-1}, (k-1 k)) = tau_k` for k = 3..=5
/// with `tau` in its fixed one-line reading `[k, 1, 2, .., k-1]`. Exactly
/// one order satisfies the identity; the probe panics otherwise since every
/// later computation would be meaningless.
pub fn compose_order() -> ComposeOrder {
    *COMPOSE_ORDER.get_or_init(|| {
        let probe = |order: ComposeOrder| -> bool {
            (3..=5).all(|k| {
                let tau_km1 = Partition::new(vec![k - 1, 1]).unwrap().make_tau();
                let swap = Permutation::transposition(k, k - 1, k).unwrap();
                let tau_k = Partition::new(vec![k]).unwrap().make_tau();
                tau_km1.compose_with_order(&swap, order).unwrap() == tau_k
            })
        };
        match (probe(ComposeOrder::BFirst), probe(ComposeOrder::AFirst)) {
            (true, false) => ComposeOrder::BFirst,
            (false, true) => ComposeOrder::AFirst,
            other => panic!("composition-order probe must select exactly one order, got {other:?}"),
        }
    })
}

/// Convention tag embedded in reports and cache keys.
pub fn convention_tag() -> String {
    let order = match compose_order() {
        ComposeOrder::BFirst => "right-to-left",
        ComposeOrder::AFirst => "left-to-right",
    };
    format!("compose={order};tau=[k,1,..,k-1]")
}

impl Permutation {
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k + 1];
        for &v in &images {
            if v == 0 || v as usize > k || seen[v as usize] {
                return Err(SymobError::InvalidPermutation(format!("{images:?}")));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (1..=k as u8).collect(),
        }
    }

    /// The transposition (a b) in S_k.
    pub fn transposition(k: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > k || b > k || a == b {
            return Err(SymobError::InvalidPermutation(format!("({a} {b}) in S_{k}")));
        }
        let mut images: Vec<u8> = (1..=k as u8).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of the point `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    fn compose_with_order(&self, other: &Permutation, order: ComposeOrder) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(SymobError::DegreeMismatch(self.degree(), other.degree()));
        }
        let images = match order {
            ComposeOrder::BFirst => (1..=self.degree())
                .map(|i| self.apply(other.apply(i)) as u8)
                .collect(),
            ComposeOrder::AFirst => (1..=self.degree())
                .map(|i| other.apply(self.apply(i)) as u8)
                .collect(),
        };
        Ok(Permutation { images })
    }

    /// Group product `self . other` under the globally selected convention.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.compose_with_order(other, compose_order())
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { images }
    }

    /// `self . other . self^{-1}` under the selected convention.
    pub fn conjugate(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(SymobError::DegreeMismatch(self.degree(), other.degree()));
        }
        // Cycle relabeling: the conjugate sends self(i) to self(other(i)),
        // which is the same group element in either composition convention.
        let mut images = vec![0u8; self.degree()];
        for i in 1..=self.degree() {
            images[self.apply(i) - 1] = self.apply(other.apply(i)) as u8;
        }
        Permutation::from_images(images)
    }

    /// Multiplicative sign, `(-1)^inversions`.
    pub fn sign(&self) -> i32 {
        let mut inversions = 0usize;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Number of positions i with sigma(i) > sigma(i+1).
    pub fn descent_count(&self) -> usize {
        self.images.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Cycle decomposition; each cycle lists its points in traversal order
    /// `p, sigma(p), sigma^2(p), ..` starting from the smallest unvisited point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.degree();
        let mut seen = vec![false; k + 1];
        let mut cycles = Vec::new();
        for start in 1..=k {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Partition {
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `self` raised to the integer power `n` (negative allowed).
    pub fn power(&self, n: i64) -> Permutation {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut result = Permutation::identity(self.degree());
        for _ in 0..n.unsigned_abs() {
            result = result.compose(&base).unwrap();
        }
        result
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.images.cmp(&other.images)
    }
}

/// All elements of S_k in lexicographic one-line order.
pub fn all_permutations(k: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (1..=k as u8).collect();
    loop {
        out.push(Permutation {
            images: current.clone(),
        });
        if !next_permutation(&mut current) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymobError::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, often written |lambda|.
    pub fn parts_count(&self) -> usize {
        self.parts.len()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition { parts: vec![] };
        }
        let parts = (1..=self.parts[0])
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Multiplicity of each distinct part, as (part, multiplicity) pairs.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Size of the conjugacy class C_lambda in S_k: k! / prod(i^{m_i} m_i!).
    pub fn class_size(&self) -> u64 {
        let k = self.weight();
        let mut denom = 1u64;
        for (part, mult) in self.multiplicities() {
            denom *= (part as u64).pow(mult as u32) * factorial(mult);
        }
        factorial(k) / denom
    }

    /// The block-cycle product tau_lambda = tau_{lambda_1} tau_{lambda_2} ...
    /// on consecutive index blocks. The single-block cycle tau_m on offset b
    /// reads `b+1 -> b+m, b+j -> b+j-1`, i.e. one-line `[m,1,..,m-1]` shifted.
    pub fn make_tau(&self) -> Permutation {
        let k = self.weight();
        let mut images = vec![0u8; k];
        let mut offset = 0usize;
        for &m in &self.parts {
            images[offset] = (offset + m) as u8;
            for j in 2..=m {
                images[offset + j - 1] = (offset + j - 1) as u8;
            }
            offset += m;
        }
        Permutation { images }
    }

    /// All elements of S_k with this cycle type.
    pub fn enumerate_class(&self, bound: usize) -> Result<Vec<Permutation>> {
        let k = self.weight();
        if k > bound {
            return Err(SymobError::DegreeBound { degree: k, bound });
        }
        Ok(all_permutations(k)
            .into_iter()
            .filter(|p| &p.cycle_type() == self)
            .collect())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Reverse-lexicographic order: compare parts elementwise, missing parts
/// count as zero; (4) > (3,1) > (2,2) > (2,1,1) > (1,1,1,1).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.parts.len().max(other.parts.len());
        for i in 0..n {
            let a = self.parts.get(i).copied().unwrap_or(0);
            let b = other.parts.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// All partitions of k, largest first in reverse-lexicographic order.
pub fn list_partitions(k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(k, k, &mut stack, &mut out);
    out
}

fn gen_partitions(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        stack.push(part);
        gen_partitions(remaining - part, part, stack, out);
        stack.pop();
    }
}
