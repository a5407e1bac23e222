//! Border strips: connected skew shapes with no 2×2 block.
//!
//! The stable variant works with the padded shapes `(r−|λ|, λ)` for large `r`:
//! besides the ordinary strips of `λ/ν` it contains exactly one extra
//! certificate with `ν = λ`, the strip that lies entirely in the first row and
//! has height 0.

use super::partition::Partition;
use crate::error::{Error, Result};

/// A witness that `λ/ν` (or its padded stable variant) is a `d`-border strip
/// of the recorded height.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BorderStripCertificate {
    pub lambda: Partition,
    pub nu: Partition,
    pub size: u32,
    pub height: u32,
}

impl BorderStripCertificate {
    /// The strip as explicit cells `(row, col)`, 0-based.  For the stable
    /// first-row certificate (`ν = λ`) the cells are reported in the padded
    /// first row, to the right of all cells of `λ`.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        if self.nu == self.lambda {
            let start = self.lambda.part(0);
            return (0..self.size).map(|k| (0, start + k)).collect();
        }
        let mut cells = Vec::new();
        for row in 0..self.lambda.len() {
            for col in self.nu.part(row)..self.lambda.part(row) {
                cells.push((row as u32, col));
            }
        }
        cells
    }
}

/// Is the cell set connected (edge adjacency) with no 2×2 sub-block?
pub fn is_border_strip_cells(cells: &[(u32, u32)]) -> bool {
    if cells.is_empty() {
        return false;
    }
    let has = |r: u32, c: u32| cells.contains(&(r, c));
    for &(r, c) in cells {
        if has(r, c + 1) && has(r + 1, c) && has(r + 1, c + 1) {
            return false;
        }
    }
    // Flood fill from the first cell.
    let mut seen = vec![cells[0]];
    let mut stack = vec![cells[0]];
    while let Some((r, c)) = stack.pop() {
        let mut neighbors = vec![(r, c + 1), (r + 1, c)];
        if c > 0 {
            neighbors.push((r, c - 1));
        }
        if r > 0 {
            neighbors.push((r - 1, c));
        }
        for n in neighbors {
            if cells.contains(&n) && !seen.contains(&n) {
                seen.push(n);
                stack.push(n);
            }
        }
    }
    seen.len() == cells.len()
}

/// All `ν ⊆ λ` such that `λ/ν` is an ordinary `d`-border strip, with heights.
///
/// A strip occupying rows `a..=b` forces `ν_i = λ_{i+1} − 1` for `a ≤ i < b`
/// and leaves `ν_b` determined by the size; every valid strip arises from
/// exactly one row interval.
pub fn border_strips(lambda: &Partition, d: u32) -> Result<Vec<BorderStripCertificate>> {
    if d == 0 {
        return Err(Error::ZeroStripSize);
    }
    let len = lambda.len();
    let mut out = Vec::new();
    for a in 0..len {
        for b in a..len {
            let mut candidate: Vec<u32> = lambda.parts().to_vec();
            for i in a..b {
                candidate[i] = lambda.part(i + 1).saturating_sub(1);
            }
            let span = (b - a) as u32;
            let last = lambda.part(a) as i64 - d as i64 + span as i64;
            if last < 0 {
                continue;
            }
            candidate[b] = last as u32;
            if !candidate.windows(2).all(|w| w[0] >= w[1]) {
                continue;
            }
            let nu = Partition::from_unsorted(candidate);
            if !lambda.contains(&nu) || lambda.size() - nu.size() != d {
                continue;
            }
            // Every row of the interval must lose at least one cell.
            if (a..=b).any(|i| nu.part(i) >= lambda.part(i)) {
                continue;
            }
            out.push(BorderStripCertificate {
                lambda: lambda.clone(),
                nu,
                size: d,
                height: span,
            });
        }
    }
    out.sort_by(|x, y| x.nu.cmp(&y.nu));
    Ok(out)
}

/// The stable strip set over `λ//ν`: the ordinary strips of `λ/ν` plus the
/// `ν = λ` first-row certificate with height 0.
pub fn stable_border_strips(lambda: &Partition, d: u32) -> Result<Vec<BorderStripCertificate>> {
    let mut out = vec![BorderStripCertificate {
        lambda: lambda.clone(),
        nu: lambda.clone(),
        size: d,
        height: 0,
    }];
    out.extend(border_strips(lambda, d)?);
    Ok(out)
}

/// All `ν ⊇ α` such that `ν/α` is an ordinary `d`-border strip, with heights.
pub fn added_border_strips(alpha: &Partition, d: u32) -> Result<Vec<(Partition, u32)>> {
    if d == 0 {
        return Err(Error::ZeroStripSize);
    }
    let max_rows = alpha.len() + d as usize;
    let mut out = Vec::new();
    for a in 0..max_rows {
        for b in a..max_rows {
            // Inverse of the removal formula: rows a..=b gain cells, with
            // ν_i = α_{i−1} + 1 below the top row of the strip.
            let span = (b - a) as u32;
            if span >= d {
                // d cells occupy at most d rows.
                continue;
            }
            let mut nu: Vec<u32> = (0..max_rows).map(|i| alpha.part(i)).collect();
            for i in (a + 1)..=b {
                nu[i] = alpha.part(i - 1) + 1;
            }
            nu[a] = alpha.part(b) + d - span;
            if !nu.windows(2).all(|w| w[0] >= w[1]) {
                continue;
            }
            let nu = Partition::from_unsorted(nu);
            if !nu.contains(alpha) || nu.size() != alpha.size() + d {
                continue;
            }
            if (a..=b).any(|i| nu.part(i) <= alpha.part(i)) {
                continue;
            }
            let cells: Vec<(u32, u32)> = (a..=b)
                .flat_map(|row| (alpha.part(row)..nu.part(row)).map(move |col| (row as u32, col)))
                .collect();
            if cells.len() as u32 != d || !is_border_strip_cells(&cells) {
                continue;
            }
            out.push((nu, span));
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::partitions_up_to;

    fn pt<const N: usize>(parts: [u32; N]) -> Partition {
        Partition::from(parts)
    }

    /// Oracle: scan all sub-partitions and keep those whose complement cells
    /// form a connected, 2×2-free set of exactly `d` cells.
    fn brute_force_strips(lambda: &Partition, d: u32) -> Vec<(Partition, u32)> {
        fn subpartitions(lambda: &Partition) -> Vec<Partition> {
            let mut out = vec![vec![]];
            for i in 0..lambda.len() {
                let mut next = Vec::new();
                for prefix in out {
                    let hi = lambda.part(i).min(*prefix.last().unwrap_or(&lambda.part(0)));
                    for v in 0..=hi {
                        let mut p = prefix.clone();
                        p.push(v);
                        next.push(p);
                    }
                }
                out = next;
            }
            out.into_iter().map(Partition::from_unsorted).collect()
        }
        let mut found = Vec::new();
        for nu in subpartitions(lambda) {
            if !lambda.contains(&nu) || lambda.size() - nu.size() != d {
                continue;
            }
            let cells: Vec<(u32, u32)> = (0..lambda.len())
                .flat_map(|r| (nu.part(r)..lambda.part(r)).map(move |c| (r as u32, c)))
                .collect();
            if is_border_strip_cells(&cells) {
                let rows: std::collections::HashSet<u32> = cells.iter().map(|&(r, _)| r).collect();
                found.push((nu, rows.len() as u32 - 1));
            }
        }
        found.sort();
        found.dedup();
        found
    }

    #[test]
    fn rejects_zero_size() {
        assert_eq!(border_strips(&pt([2, 1]), 0), Err(Error::ZeroStripSize));
    }

    #[test]
    fn full_hook_of_21() {
        let strips = border_strips(&pt([2, 1]), 3).unwrap();
        assert_eq!(strips.len(), 1);
        assert_eq!(strips[0].nu, Partition::empty());
        assert_eq!(strips[0].height, 1);
    }

    #[test]
    fn too_large_strip_is_empty() {
        assert!(border_strips(&pt([1]), 2).unwrap().is_empty());
    }

    #[test]
    fn stable_variant_adds_first_row_certificate() {
        let strips = stable_border_strips(&pt([1]), 1).unwrap();
        let pairs: Vec<(Partition, u32)> = strips.iter().map(|c| (c.nu.clone(), c.height)).collect();
        assert_eq!(pairs.len(), 2);
        assert!(pairs.contains(&(pt([1]), 0)));
        assert!(pairs.contains(&(Partition::empty(), 0)));
    }

    #[test]
    fn certificates_reconstruct_as_valid_strips() {
        for lambda in partitions_up_to(8) {
            for d in 1..=8u32 {
                for cert in stable_border_strips(&lambda, d).unwrap() {
                    let cells = cert.cells();
                    assert_eq!(cells.len() as u32, d);
                    assert!(is_border_strip_cells(&cells), "{cert:?}");
                    let rows: std::collections::HashSet<u32> = cells.iter().map(|&(r, _)| r).collect();
                    assert_eq!(rows.len() as u32 - 1, cert.height, "{cert:?}");
                }
            }
        }
    }

    #[test]
    fn interval_construction_matches_brute_force_scan() {
        for lambda in partitions_up_to(8) {
            for d in 1..=8u32 {
                let fast: Vec<(Partition, u32)> = border_strips(&lambda, d)
                    .unwrap()
                    .into_iter()
                    .map(|c| (c.nu, c.height))
                    .collect();
                let slow = brute_force_strips(&lambda, d);
                assert_eq!(fast, slow, "lambda {lambda} d {d}");
            }
        }
    }

    #[test]
    fn added_strips_invert_removal() {
        for alpha in partitions_up_to(5) {
            for d in 1..=4u32 {
                for (nu, ht) in added_border_strips(&alpha, d).unwrap() {
                    let back = border_strips(&nu, d).unwrap();
                    assert!(
                        back.iter().any(|c| c.nu == alpha && c.height == ht),
                        "alpha {alpha} nu {nu}"
                    );
                }
                // And conversely every removal shows up as an addition.
                for cert in border_strips(&alpha, d).unwrap() {
                    let ups = added_border_strips(&cert.nu, d).unwrap();
                    assert!(ups.iter().any(|(nu, ht)| *nu == alpha && *ht == cert.height));
                }
            }
        }
    }
}
