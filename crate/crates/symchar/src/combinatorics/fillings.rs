//! Row-constant fillings of Young diagrams.
//!
//! These count the evaluation coefficients `H_{λ,μ}` (label some rows of `μ`
//! with `1..ℓ(λ)`, constant per row, `λ_j` cells labeled `j` in total) and the
//! signed variant `HE_{(λ|τ),μ}` with additional primed labels weighted by
//! `(−1)^{primed cells + primed rows}`.

use super::partition::Partition;

/// A single filling: one optional label per row of `μ`.  `(j, false)` is the
/// unprimed label `j+1`, `(j, true)` the primed label `(j+1)'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowFilling {
    pub labels: Vec<Option<(u32, bool)>>,
}

impl RowFilling {
    /// (−1)^{primed cells + primed rows} for the diagram of `mu`.
    pub fn sign(&self, mu: &Partition) -> i64 {
        let mut parity = 0u32;
        for (row, label) in self.labels.iter().enumerate() {
            if let Some((_, true)) = label {
                parity += mu.part(row) + 1;
            }
        }
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

fn fill_rec(
    mu: &Partition,
    row: usize,
    unprimed: &mut Vec<u32>,
    primed: &mut Vec<u32>,
    current: &mut Vec<Option<(u32, bool)>>,
    out: &mut dyn FnMut(&[Option<(u32, bool)>]),
) {
    let needed: u32 = unprimed.iter().chain(primed.iter()).sum();
    if needed == 0 && row <= mu.len() {
        // Remaining rows stay unlabeled.
        let mut full = current.clone();
        full.resize(mu.len(), None);
        out(&full);
        return;
    }
    if row == mu.len() {
        return;
    }
    let remaining_cells: u32 = (row..mu.len()).map(|r| mu.part(r)).sum();
    if needed > remaining_cells {
        return;
    }
    let width = mu.part(row);
    current.push(None);
    fill_rec(mu, row + 1, unprimed, primed, current, out);
    current.pop();
    for j in 0..unprimed.len() {
        if unprimed[j] >= width {
            unprimed[j] -= width;
            current.push(Some((j as u32, false)));
            fill_rec(mu, row + 1, unprimed, primed, current, out);
            current.pop();
            unprimed[j] += width;
        }
    }
    for j in 0..primed.len() {
        if primed[j] >= width {
            primed[j] -= width;
            current.push(Some((j as u32, true)));
            fill_rec(mu, row + 1, unprimed, primed, current, out);
            current.pop();
            primed[j] += width;
        }
    }
}

/// All fillings of some rows of `μ` with labels `1..ℓ(λ)`, constant per row,
/// with `λ_j` cells labeled `j` in total.
pub fn row_fillings(lambda: &Partition, mu: &Partition) -> Vec<RowFilling> {
    signed_row_fillings(lambda, &Partition::empty(), mu)
        .into_iter()
        .map(|(f, _)| f)
        .collect()
}

/// |row_fillings(λ, μ)| without materializing witnesses; equals `H_{λ,μ}`.
pub fn count_row_fillings(lambda: &Partition, mu: &Partition) -> u64 {
    let mut count = 0u64;
    let mut unprimed: Vec<u32> = lambda.parts().to_vec();
    let mut primed = Vec::new();
    let mut current = Vec::new();
    fill_rec(mu, 0, &mut unprimed, &mut primed, &mut current, &mut |_| count += 1);
    count
}

/// All fillings with `λ_i` unprimed `i`-labels and `τ_j` primed `j'`-labels,
/// paired with their weights.
pub fn signed_row_fillings(lambda: &Partition, tau: &Partition, mu: &Partition) -> Vec<(RowFilling, i64)> {
    let mut out = Vec::new();
    let mut unprimed: Vec<u32> = lambda.parts().to_vec();
    let mut primed: Vec<u32> = tau.parts().to_vec();
    let mut current = Vec::new();
    fill_rec(mu, 0, &mut unprimed, &mut primed, &mut current, &mut |labels| {
        let filling = RowFilling { labels: labels.to_vec() };
        let sign = filling.sign(mu);
        out.push((filling, sign));
    });
    out
}

/// Σ wt(F) over the fillings; equals `HE_{(λ|τ),μ}`.
pub fn signed_row_filling_sum(lambda: &Partition, tau: &Partition, mu: &Partition) -> i64 {
    signed_row_fillings(lambda, tau, mu).iter().map(|(_, s)| s).sum()
}
