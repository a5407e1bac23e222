//! Integer partitions, the universal index type of the crate.

use crate::error::{Error, Result};
use num::BigInt;
use std::cmp::Ordering;
use std::fmt;

/// A weakly decreasing sequence of positive integers.  The empty sequence is
/// the empty partition `()`.
///
/// The derived ordering is graded lexicographic: partitions compare first by
/// size, then lexicographically on their parts.  This is the canonical term
/// order used everywhere in the crate (printing, serialization, enumeration).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Build from parts that are already weakly decreasing and positive.
    ///
    /// Panics when the invariant fails; use [`Partition::try_new`] for
    /// untrusted input.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive: {parts:?}"
        );
        Partition(parts)
    }

    /// Validating constructor for untrusted input.
    pub fn try_new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0) {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(format!("{parts:?}")))
        }
    }

    /// Build from arbitrary non-negative entries: zeros are dropped and the
    /// rest is sorted decreasingly.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// |λ| = Σ parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// ℓ(λ) = number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The part at `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// m_i(λ): multiplicity of the value `i` among the parts.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.0.iter().filter(|&&p| p == i).count() as u32
    }

    /// The multiset union of parts of `self` and `other`, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_unsorted(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Cellwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.0.iter().enumerate().all(|(i, &p)| self.part(i) >= p)
    }

    /// λ with its first part removed.
    pub fn without_first_part(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// The padded partition `(n − |λ|, λ)`.  Requires n − |λ| ≥ λ₁.
    pub fn padded(&self, n: u32) -> Partition {
        let first = n - self.size();
        assert!(first >= self.part(0), "padding {n} too small for {self}");
        if first == 0 {
            return Partition::empty();
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&self.0);
        Partition(parts)
    }

    /// λ/μ is a horizontal strip: μ ⊆ λ with at most one cell per column,
    /// i.e. the interlacing λ_{i+1} ≤ μ_i for all i.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (0..self.len()).all(|i| self.part(i + 1) <= inner.part(i))
    }

    /// λ/μ is a vertical strip: μ ⊆ λ with at most one cell per row.
    pub fn is_vertical_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (0..self.len()).all(|i| self.part(i) <= inner.part(i) + 1)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(parts: [u32; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// z_λ = Π_i m_i(λ)! · i^{m_i(λ)}, the centralizer order of a permutation of
/// cycle type λ.
pub fn z(lambda: &Partition) -> BigInt {
    let mut out = BigInt::from(1u32);
    let mut i = 0;
    let parts = lambda.parts();
    while i < parts.len() {
        let value = parts[i];
        let mut mult = 0u32;
        while i < parts.len() && parts[i] == value {
            mult += 1;
            i += 1;
        }
        for k in 1..=mult {
            out *= BigInt::from(k);
        }
        out *= BigInt::from(value).pow(mult);
    }
    out
}

/// All partitions of `n` in graded-lexicographic (here: lexicographic)
/// ascending order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for part in 1..=remaining.min(max) {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    // The recursion emits first parts in increasing order with weakly
    // decreasing tails, which is exactly lexicographic ascending.
    out
}

/// All partitions of size ≤ `n`, graded-lexicographic ascending.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt<const N: usize>(parts: [u32; N]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn sizes_and_multiplicities() {
        let p = pt([3, 2, 2, 1]);
        assert_eq!(p.size(), 8);
        assert_eq!(p.len(), 4);
        assert_eq!(p.multiplicity(2), 2);
        assert_eq!(p.multiplicity(4), 0);
        assert_eq!(Partition::empty().size(), 0);
    }

    #[test]
    fn rejects_invalid() {
        assert!(Partition::try_new(vec![1, 2]).is_err());
        assert!(Partition::try_new(vec![2, 0]).is_err());
        assert!(Partition::try_new(vec![3, 1, 1]).is_ok());
    }

    #[test]
    fn z_values() {
        assert_eq!(z(&Partition::empty()), BigInt::from(1));
        assert_eq!(z(&pt([2, 1])), BigInt::from(2));
        assert_eq!(z(&pt([1, 1, 1])), BigInt::from(6));
        assert_eq!(z(&pt([3, 3, 2, 2, 1, 1])), BigInt::from(288));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn graded_lex_order() {
        let mut ps = partitions_up_to(3);
        let sorted = {
            let mut s = ps.clone();
            s.sort();
            s
        };
        assert_eq!(ps, sorted);
        ps.sort();
        assert_eq!(
            ps,
            vec![
                Partition::empty(),
                pt([1]),
                pt([1, 1]),
                pt([2]),
                pt([1, 1, 1]),
                pt([2, 1]),
                pt([3]),
            ]
        );
    }

    #[test]
    fn strips() {
        assert!(pt([3, 1]).is_horizontal_strip_over(&pt([2])));
        assert!(!pt([2, 2]).is_horizontal_strip_over(&pt([1])));
        assert!(pt([2, 1]).is_vertical_strip_over(&pt([1, 1])));
        assert!(!pt([3, 1]).is_vertical_strip_over(&pt([1])));
    }

    #[test]
    fn padding() {
        assert_eq!(pt([2, 1]).padded(8), pt([5, 2, 1]));
        assert_eq!(Partition::empty().padded(3), pt([3]));
    }
}
