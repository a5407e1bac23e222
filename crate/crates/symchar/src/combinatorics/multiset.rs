//! Multisets over positive integers, multiset partitions, and set partitions
//! of a multiset.
//!
//! The total order on multisets is lexicographic on the ascending-sorted
//! entries; it is fixed once and reused for tableau strictness and canonical
//! forms.  Blocks of a multiset partition are kept in the canonical order
//! "higher multiplicity first, ties broken lexicographically".

use super::partition::Partition;
use std::collections::BTreeMap;
use std::fmt;

/// A multiset of positive integers, stored sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multiset(Vec<u32>);

impl Multiset {
    pub fn empty() -> Self {
        Multiset(Vec::new())
    }

    pub fn new(elements: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = elements.into_iter().collect();
        assert!(v.iter().all(|&e| e > 0), "multiset elements must be positive");
        v.sort_unstable();
        Multiset(v)
    }

    /// The content multiset `{{1^{μ₁}, 2^{μ₂}, …}}` of a partition.
    pub fn from_exponents(mu: &Partition) -> Self {
        let mut v = Vec::with_capacity(mu.size() as usize);
        for (i, &m) in mu.parts().iter().enumerate() {
            v.extend(std::iter::repeat(i as u32 + 1).take(m as usize));
        }
        v.sort_unstable();
        Multiset(v)
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when no element repeats.
    pub fn is_set(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Distinct values with their multiplicities, ascending by value.
    pub fn counts(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &e in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == e => *c += 1,
                _ => out.push((e, 1)),
            }
        }
        out
    }

    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        Multiset(v)
    }

    /// Remove `other` from `self`; `other` must be contained with
    /// multiplicity.
    pub fn difference(&self, other: &Multiset) -> Multiset {
        let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
        for &e in &self.0 {
            *counts.entry(e).or_insert(0) += 1;
        }
        for &e in &other.0 {
            let c = counts.get_mut(&e).expect("difference of non-subset");
            *c -= 1;
            assert!(*c >= 0, "difference of non-subset");
        }
        let mut v = Vec::new();
        for (e, c) in counts {
            v.extend(std::iter::repeat(e).take(c as usize));
        }
        Multiset(v)
    }
}

impl fmt::Debug for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}}}")
    }
}

/// A multiset partition π ⊢⊢ S: a multiset of non-empty blocks whose union is
/// the content S.  Blocks are stored in the canonical order: multiplicity
/// descending, ties lexicographic ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisetPartition {
    /// Distinct blocks with multiplicities, canonically ordered.
    blocks: Vec<(Multiset, u32)>,
}

impl MultisetPartition {
    /// Build from an arbitrary collection of non-empty blocks.
    pub fn new(blocks: impl IntoIterator<Item = Multiset>) -> Self {
        let mut counts: BTreeMap<Multiset, u32> = BTreeMap::new();
        for b in blocks {
            assert!(!b.is_empty(), "multiset partition blocks must be non-empty");
            *counts.entry(b).or_insert(0) += 1;
        }
        let mut blocks: Vec<(Multiset, u32)> = counts.into_iter().collect();
        blocks.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        MultisetPartition { blocks }
    }

    /// Distinct blocks with multiplicities in canonical order.
    pub fn blocks_with_multiplicity(&self) -> &[(Multiset, u32)] {
        &self.blocks
    }

    /// All blocks, repeated per multiplicity, in canonical order.
    pub fn blocks(&self) -> Vec<Multiset> {
        self.blocks
            .iter()
            .flat_map(|(b, c)| std::iter::repeat(b.clone()).take(*c as usize))
            .collect()
    }

    /// ℓ(π): the number of blocks counted with multiplicity.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|(_, c)| *c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The union of the blocks with multiplicity.
    pub fn content(&self) -> Multiset {
        let mut v = Vec::new();
        for (b, c) in &self.blocks {
            for _ in 0..*c {
                v.extend_from_slice(b.elements());
            }
        }
        v.sort_unstable();
        Multiset(v)
    }

    /// True when every block is a set.
    pub fn all_blocks_sets(&self) -> bool {
        self.blocks.iter().all(|(b, _)| b.is_set())
    }
}

impl fmt::Debug for MultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{{")?;
        let mut first = true;
        for (b, c) in self.blocks_with_multiplicity() {
            for _ in 0..*c {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{b:?}")?;
                first = false;
            }
        }
        write!(f, "}}}}")
    }
}

/// A set partition of a multiset: a multiset partition whose blocks are sets
/// (no repeated element inside a block); blocks themselves may repeat.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartitionOfMultiset(MultisetPartition);

impl SetPartitionOfMultiset {
    pub fn new(blocks: impl IntoIterator<Item = Multiset>) -> Self {
        let inner = MultisetPartition::new(blocks);
        assert!(inner.all_blocks_sets(), "blocks must have distinct elements");
        SetPartitionOfMultiset(inner)
    }

    pub fn as_multiset_partition(&self) -> &MultisetPartition {
        &self.0
    }

    pub fn blocks_with_multiplicity(&self) -> &[(Multiset, u32)] {
        self.0.blocks_with_multiplicity()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for SetPartitionOfMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// ~m(π): the partition of ℓ(π) listing block multiplicities.
pub fn multiplicity_partition(pi: &MultisetPartition) -> Partition {
    Partition::from_unsorted(pi.blocks.iter().map(|(_, c)| *c))
}

/// (~m_e(π), ~m_o(π)): multiplicities of the even-size blocks and of the
/// odd-size blocks.  Their multiset union is ~m(π).
pub fn parity_multiplicities(pi: &SetPartitionOfMultiset) -> (Partition, Partition) {
    let even = pi
        .blocks_with_multiplicity()
        .iter()
        .filter(|(b, _)| b.len() % 2 == 0)
        .map(|(_, c)| *c);
    let odd = pi
        .blocks_with_multiplicity()
        .iter()
        .filter(|(b, _)| b.len() % 2 == 1)
        .map(|(_, c)| *c);
    (Partition::from_unsorted(even), Partition::from_unsorted(odd))
}

/// All distinct non-empty sub-multisets of `content`, optionally restricted to
/// sets.
fn distinct_submultisets(content: &Multiset, sets_only: bool) -> Vec<Multiset> {
    let counts = content.counts();
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn rec(counts: &[(u32, u32)], idx: usize, sets_only: bool, chosen: &mut Vec<u32>, out: &mut Vec<Multiset>) {
        if idx == counts.len() {
            if !chosen.is_empty() {
                out.push(Multiset(chosen.clone()));
            }
            return;
        }
        let (value, mult) = counts[idx];
        let cap = if sets_only { mult.min(1) } else { mult };
        for take in 0..=cap {
            for _ in 0..take {
                chosen.push(value);
            }
            rec(counts, idx + 1, sets_only, chosen, out);
            for _ in 0..take {
                chosen.pop();
            }
        }
    }
    rec(&counts, 0, sets_only, &mut chosen, &mut out);
    out
}

fn enumerate_partitions(content: &Multiset, sets_only: bool) -> Vec<Vec<(Multiset, u32)>> {
    // Blocks are chosen as strictly decreasing distinct multisets, each with a
    // multiplicity, which makes every multiset of blocks appear exactly once.
    fn rec(
        remaining: &Multiset,
        bound: Option<&Multiset>,
        sets_only: bool,
        acc: &mut Vec<(Multiset, u32)>,
        out: &mut Vec<Vec<(Multiset, u32)>>,
    ) {
        if remaining.is_empty() {
            out.push(acc.clone());
            return;
        }
        let mut candidates = distinct_submultisets(remaining, sets_only);
        candidates.retain(|b| bound.map_or(true, |bd| b < bd));
        for block in candidates {
            let mut left = remaining.clone();
            let mut mult = 0;
            loop {
                // Take one more copy while it still fits.
                let fits = block
                    .counts()
                    .iter()
                    .all(|(v, c)| left.elements().iter().filter(|&&e| e == *v).count() as u32 >= *c);
                if !fits {
                    break;
                }
                left = left.difference(&block);
                mult += 1;
                acc.push((block.clone(), mult));
                rec(&left, Some(&block), sets_only, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec(content, None, sets_only, &mut acc, &mut out);
    out
}

/// All multiset partitions of `content`, complete and duplicate-free, in a
/// deterministic canonical order.
pub fn multiset_partitions(content: &Multiset) -> Vec<MultisetPartition> {
    let mut out: Vec<MultisetPartition> = enumerate_partitions(content, false)
        .into_iter()
        .map(|blocks| {
            MultisetPartition::new(
                blocks
                    .into_iter()
                    .flat_map(|(b, c)| std::iter::repeat(b).take(c as usize)),
            )
        })
        .collect();
    out.sort();
    out
}

/// All set partitions of the multiset `content`: blocks have distinct
/// elements, but blocks may repeat.
pub fn set_partitions_of_multiset(content: &Multiset) -> Vec<SetPartitionOfMultiset> {
    let mut out: Vec<SetPartitionOfMultiset> = enumerate_partitions(content, true)
        .into_iter()
        .map(|blocks| {
            SetPartitionOfMultiset::new(
                blocks
                    .into_iter()
                    .flat_map(|(b, c)| std::iter::repeat(b).take(c as usize)),
            )
        })
        .collect();
    out.sort();
    out
}
