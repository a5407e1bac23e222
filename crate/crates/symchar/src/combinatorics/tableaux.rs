//! Multiset-valued and set-valued skew tableaux.
//!
//! Both families live on skew shapes `λ/(λ₂)`: the first row starts with
//! exactly `λ₂` blank cells and every other cell carries a non-empty label.
//! Comparisons between labels use the fixed total order on multisets
//! (lexicographic on ascending-sorted entries).

use super::multiset::{multiset_partitions, set_partitions_of_multiset, Multiset};
use super::partition::Partition;
use std::collections::BTreeMap;

/// A partially-filled diagram whose cells hold multisets.  Blanks occur only
/// as a prefix of the first row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    /// `rows[0]` is the filled suffix of row 1; `rows[i]` for `i ≥ 1` is the
    /// complete row `i+1`.
    rows: Vec<Vec<Multiset>>,
}

impl SkewTableau {
    fn assemble(first_row: Vec<Multiset>, upper: Vec<Vec<Multiset>>) -> Self {
        let upper_first = upper.first().map_or(0, |r| r.len() as u32);
        let mut outer = vec![upper_first + first_row.len() as u32];
        outer.extend(upper.iter().map(|r| r.len() as u32));
        let outer = Partition::from_unsorted(outer);
        let inner = if upper_first == 0 {
            Partition::empty()
        } else {
            Partition::new(vec![upper_first])
        };
        let mut rows = vec![first_row];
        rows.extend(upper);
        SkewTableau { outer, inner, rows }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// The index `shape(T)` minus its first part: the subscript of the
    /// irreducible character term this tableau witnesses.
    pub fn index(&self) -> Partition {
        self.outer.without_first_part()
    }

    /// Filled cells as a map `(row, col) → label`, 0-based, row 0 at the
    /// bottom.
    pub fn cells(&self) -> BTreeMap<(u32, u32), Multiset> {
        let mut out = BTreeMap::new();
        let blanks = self.inner.part(0);
        for (j, label) in self.rows[0].iter().enumerate() {
            out.insert((0, blanks + j as u32), label.clone());
        }
        for (i, row) in self.rows.iter().enumerate().skip(1) {
            for (j, label) in row.iter().enumerate() {
                out.insert((i as u32, j as u32), label.clone());
            }
        }
        out
    }

    /// The multiset union of all labels.
    pub fn total_content(&self) -> Multiset {
        let mut acc = Multiset::empty();
        for row in &self.rows {
            for label in row {
                acc = acc.union(label);
            }
        }
        acc
    }

    /// Labels of the filled part of the first row, left to right.
    pub fn first_row(&self) -> &[Multiset] {
        &self.rows[0]
    }

    /// Rows 2 and above, bottom to top.
    pub fn upper_rows(&self) -> &[Vec<Multiset>] {
        &self.rows[1..]
    }
}

/// Shapes reachable from `shape` by adding a horizontal strip of `c` cells.
fn horizontal_extensions(shape: &[u32], c: u32) -> Vec<Vec<u32>> {
    let rows = shape.len() + 1;
    let mut out = Vec::new();
    let mut tau = vec![0u32; rows];
    fn rec(shape: &[u32], i: usize, left: u32, tau: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == tau.len() {
            if left == 0 {
                let mut t = tau.clone();
                while t.last() == Some(&0) {
                    t.pop();
                }
                out.push(t);
            }
            return;
        }
        let cur = shape.get(i).copied().unwrap_or(0);
        let mut hi = cur + left;
        if i > 0 {
            // At most one new cell per column and weak decrease.
            hi = hi.min(shape[i - 1]).min(tau[i - 1]);
        }
        for v in cur..=hi {
            tau[i] = v;
            rec(shape, i + 1, left - (v - cur), tau, out);
        }
        tau[i] = 0;
    }
    rec(shape, 0, c, &mut tau, &mut out);
    out
}

/// Shapes reachable from `shape` by adding a vertical strip of `c` cells.
fn vertical_extensions(shape: &[u32], c: u32) -> Vec<Vec<u32>> {
    let rows = shape.len() + c as usize;
    let mut out = Vec::new();
    let mut tau = vec![0u32; rows];
    fn rec(shape: &[u32], i: usize, left: u32, tau: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == tau.len() {
            if left == 0 {
                let mut t = tau.clone();
                while t.last() == Some(&0) {
                    t.pop();
                }
                out.push(t);
            }
            return;
        }
        let cur = shape.get(i).copied().unwrap_or(0);
        for add in 0..=left.min(1) {
            let v = cur + add;
            if i > 0 && v > tau[i - 1] {
                continue;
            }
            tau[i] = v;
            rec(shape, i + 1, left - add, tau, out);
        }
        tau[i] = 0;
    }
    rec(shape, 0, c, &mut tau, &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum StripKind {
    Horizontal,
    Vertical,
}

/// All fillings of the upper rows from `letters`, processed in ascending label
/// order; the cells of letter `j` form a strip of the prescribed kind.
fn strip_fillings(letters: &[(Multiset, u32, StripKind)]) -> Vec<Vec<Vec<Multiset>>> {
    let mut states: Vec<Vec<Vec<Multiset>>> = vec![Vec::new()];
    for (label, count, kind) in letters {
        if *count == 0 {
            continue;
        }
        let mut next = Vec::new();
        for rows in &states {
            let shape: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
            let extensions = match kind {
                StripKind::Horizontal => horizontal_extensions(&shape, *count),
                StripKind::Vertical => vertical_extensions(&shape, *count),
            };
            for tau in extensions {
                let mut grown = rows.clone();
                grown.resize(tau.len(), Vec::new());
                for (i, &width) in tau.iter().enumerate() {
                    while grown[i].len() < width as usize {
                        grown[i].push(label.clone());
                    }
                }
                next.push(grown);
            }
        }
        states = next;
    }
    states
}

/// Ways to pick `taken[i] ≤ available[i]` copies for the first row.
fn first_row_splits(available: &[u32], even_only_repeats: Option<&[bool]>) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for (i, &cap) in available.iter().enumerate() {
        let max = match even_only_repeats {
            // Odd sets may not repeat within the first row.
            Some(evens) if !evens[i] => cap.min(1),
            _ => cap,
        };
        let mut next = Vec::new();
        for prefix in &out {
            for take in 0..=max {
                let mut p = prefix.clone();
                p.push(take);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn sort_tableaux(mut out: Vec<SkewTableau>) -> Vec<SkewTableau> {
    out.sort_by(|a, b| {
        a.index()
            .cmp(&b.index())
            .then_with(|| a.outer.cmp(&b.outer))
            .then_with(|| a.rows.cmp(&b.rows))
    });
    out
}

/// All column strict tableaux of skew shape `λ/(λ₂)` whose cells hold
/// non-empty multisets with total content `{{1^{μ₁}, 2^{μ₂}, …}}`.
///
/// Cells weakly increase along rows and strictly increase up columns; the sum
/// of `st[index(T)]` over the result is the irreducible character expansion of
/// `h_μ`.
pub fn enumerate_h_tableaux(mu: &Partition) -> Vec<SkewTableau> {
    let content = Multiset::from_exponents(mu);
    let mut out = Vec::new();
    for pi in multiset_partitions(&content) {
        // Ascending label order for the strip chain.
        let mut letters: Vec<(Multiset, u32)> = pi.blocks_with_multiplicity().to_vec();
        letters.sort_by(|a, b| a.0.cmp(&b.0));
        let caps: Vec<u32> = letters.iter().map(|(_, c)| *c).collect();
        for split in first_row_splits(&caps, None) {
            let first_row: Vec<Multiset> = letters
                .iter()
                .zip(&split)
                .flat_map(|((b, _), take)| std::iter::repeat(b.clone()).take(*take as usize))
                .collect();
            let rest: Vec<(Multiset, u32, StripKind)> = letters
                .iter()
                .zip(&split)
                .map(|((b, c), take)| (b.clone(), c - take, StripKind::Horizontal))
                .collect();
            for upper in strip_fillings(&rest) {
                out.push(SkewTableau::assemble(first_row.clone(), upper));
            }
        }
    }
    sort_tableaux(out)
}

/// All set-valued tableaux of skew shape `λ/(λ₂)`, weakly increasing along
/// rows and columns, with total content `{{1^{μ₁}, 2^{μ₂}, …}}`.
///
/// A set may repeat in a column iff its cardinality is odd, and in a row iff
/// it is even; the sum of `st[index(T)]` over the result is the irreducible
/// character expansion of `e_μ`.
pub fn enumerate_e_tableaux(mu: &Partition) -> Vec<SkewTableau> {
    let content = Multiset::from_exponents(mu);
    let mut out = Vec::new();
    for pi in set_partitions_of_multiset(&content) {
        let mut letters: Vec<(Multiset, u32)> = pi.blocks_with_multiplicity().to_vec();
        letters.sort_by(|a, b| a.0.cmp(&b.0));
        let caps: Vec<u32> = letters.iter().map(|(_, c)| *c).collect();
        let evens: Vec<bool> = letters.iter().map(|(b, _)| b.len() % 2 == 0).collect();
        for split in first_row_splits(&caps, Some(&evens)) {
            let first_row: Vec<Multiset> = letters
                .iter()
                .zip(&split)
                .flat_map(|((b, _), take)| std::iter::repeat(b.clone()).take(*take as usize))
                .collect();
            let rest: Vec<(Multiset, u32, StripKind)> = letters
                .iter()
                .zip(&split)
                .map(|((b, c), take)| {
                    let kind = if b.len() % 2 == 0 {
                        StripKind::Horizontal
                    } else {
                        StripKind::Vertical
                    };
                    (b.clone(), c - take, kind)
                })
                .collect();
            for upper in strip_fillings(&rest) {
                out.push(SkewTableau::assemble(first_row.clone(), upper));
            }
        }
    }
    sort_tableaux(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt<const N: usize>(parts: [u32; N]) -> Partition {
        Partition::from(parts)
    }

    fn ms(elements: &[u32]) -> Multiset {
        Multiset::new(elements.iter().copied())
    }

    /// Direct check of the column strict conditions on the assembled cells.
    fn check_h_tableau(t: &SkewTableau, mu: &Partition) {
        assert_eq!(t.total_content(), Multiset::from_exponents(mu));
        assert_eq!(t.inner().part(0), t.outer().part(1), "blanks must equal λ₂");
        let cells = t.cells();
        for (&(r, c), label) in &cells {
            assert!(!label.is_empty());
            if let Some(right) = cells.get(&(r, c + 1)) {
                assert!(label <= right, "rows weakly increase");
            }
            if let Some(above) = cells.get(&(r + 1, c)) {
                assert!(label < above, "columns strictly increase");
            }
        }
    }

    fn check_e_tableau(t: &SkewTableau, mu: &Partition) {
        assert_eq!(t.total_content(), Multiset::from_exponents(mu));
        let cells = t.cells();
        for (&(r, c), label) in &cells {
            assert!(label.is_set());
            if let Some(right) = cells.get(&(r, c + 1)) {
                assert!(label <= right);
                if label == right {
                    assert_eq!(label.len() % 2, 0, "row repeats need even sets");
                }
            }
            if let Some(above) = cells.get(&(r + 1, c)) {
                assert!(label <= above);
                if label == above {
                    assert_eq!(label.len() % 2, 1, "column repeats need odd sets");
                }
            }
        }
    }

    #[test]
    fn h_tableaux_of_21_number_twenty() {
        let mu = pt([2, 1]);
        let ts = enumerate_h_tableaux(&mu);
        assert_eq!(ts.len(), 20);
        for t in &ts {
            check_h_tableau(t, &mu);
        }
    }

    #[test]
    fn h_tableaux_of_single_cell() {
        let ts = enumerate_h_tableaux(&pt([1]));
        assert_eq!(ts.len(), 2);
        let indices: Vec<Partition> = ts.iter().map(|t| t.index()).collect();
        assert!(indices.contains(&Partition::empty()));
        assert!(indices.contains(&pt([1])));
        // One tableau is the single cell in row 1, the other a cell above one blank.
        let shapes: Vec<(Partition, Partition)> =
            ts.iter().map(|t| (t.outer().clone(), t.inner().clone())).collect();
        assert!(shapes.contains(&(pt([1]), Partition::empty())));
        assert!(shapes.contains(&(pt([1, 1]), pt([1]))));
    }

    #[test]
    fn h_tableaux_of_empty() {
        let ts = enumerate_h_tableaux(&Partition::empty());
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].index(), Partition::empty());
    }

    #[test]
    fn e_tableaux_of_21_number_eleven() {
        let mu = pt([2, 1]);
        let ts = enumerate_e_tableaux(&mu);
        assert_eq!(ts.len(), 11);
        for t in &ts {
            check_e_tableau(t, &mu);
        }
    }

    #[test]
    fn e_tableaux_of_33_number_seventy_one() {
        let mu = pt([3, 3]);
        let ts = enumerate_e_tableaux(&mu);
        assert_eq!(ts.len(), 71);
        for t in &ts {
            check_e_tableau(t, &mu);
        }
        // Coefficient of st[2,1]: eight witnesses of shape (4,2,1)/(2) or (3,2,1)/(2).
        let count_21 = ts.iter().filter(|t| t.index() == pt([2, 1])).count();
        assert_eq!(count_21, 8);
    }

    #[test]
    fn e_tableaux_of_empty() {
        assert_eq!(enumerate_e_tableaux(&Partition::empty()).len(), 1);
    }

    #[test]
    fn h_tableaux_are_column_strict_for_small_contents() {
        for mu in crate::combinatorics::partition::partitions_up_to(4) {
            for t in enumerate_h_tableaux(&mu) {
                check_h_tableau(&t, &mu);
            }
        }
    }

    #[test]
    fn multiset_labels_appear() {
        // h tableaux for (2,1) include a single-cell tableau labeled {{1,1,2}}.
        let ts = enumerate_h_tableaux(&pt([2, 1]));
        assert!(ts
            .iter()
            .any(|t| t.outer() == &pt([1]) && t.first_row() == [ms(&[1, 1, 2])]));
    }
}
