//! The induced trivial character basis `ht` and the irreducible character
//! basis `st`.
//!
//! `h_λ = Σ_{π ⊢⊢ {{1^{λ₁},…}}} ht[~m(π)]` defines `ht` recursively from the
//! complete basis; `ht[μ] = Σ_{|λ|≤|μ|} K̄_{λμ} st[λ]` with stable Kostka
//! coefficients defines `st`.  Evaluating `ht[λ]` at the eigenvalue multiset
//! `Ξ_μ` gives `H_{λ,μ} = ⟨h_{|μ|−|λ|}h_λ, p_μ⟩`, and `st[λ]` evaluates to the
//! irreducible character `χ^{(|μ|−|λ|,λ)}(μ)`.
//!
//! Every route to or from `ht`/`st` passes through the `h` basis; all the
//! per-shape expansions are memoized for reuse.

use crate::combinatorics::multiset::{
    multiplicity_partition, multiset_partitions, parity_multiplicities, set_partitions_of_multiset, Multiset,
    MultisetPartition,
};
use crate::combinatorics::partition::{partitions_of, partitions_up_to, z, Partition};
use crate::combinatorics::tableaux::{enumerate_e_tableaux, enumerate_h_tableaux};
use crate::symfunc::classical::stable_kostka;
use crate::symfunc::expr::{rat_big, BasisTag, Rational, SymExpr};
use crate::symfunc::transition::{convert, memoized, multiply_multiplicative};
use crate::symfunc::{hall_inner, outer};
use num::{BigInt, One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

type ShapeMemo = RwLock<HashMap<Partition, Arc<SymExpr>>>;

static H_TO_HT: LazyLock<ShapeMemo> = LazyLock::new(Default::default);
static HT_TO_H: LazyLock<ShapeMemo> = LazyLock::new(Default::default);
static HT_TO_ST: LazyLock<ShapeMemo> = LazyLock::new(Default::default);
static ST_TO_HT: LazyLock<ShapeMemo> = LazyLock::new(Default::default);

/// Expansion of `h_λ` in the `ht` basis: one term `ht[~m(π)]` per multiset
/// partition π of `{{1^{λ₁}, 2^{λ₂}, …}}`.
fn h_shape_to_ht(lambda: &Partition) -> Arc<SymExpr> {
    memoized(&H_TO_HT, lambda.clone(), || {
        let content = Multiset::from_exponents(lambda);
        let mut out = SymExpr::zero(BasisTag::Ht);
        for pi in multiset_partitions(&content) {
            out.add_term(multiplicity_partition(&pi), Rational::one());
        }
        out
    })
}

/// Expansion of `ht[λ]` in the `h` basis by the inverse recursion
/// `ht[λ] = h_λ − Σ_{~m(π) ≠ λ} ht[~m(π)]`; the only π with `|~m(π)| = |λ|`
/// is the all-singletons partition, so the recursion descends in size.
fn ht_shape_to_h(lambda: &Partition) -> Arc<SymExpr> {
    memoized(&HT_TO_H, lambda.clone(), || {
        let content = Multiset::from_exponents(lambda);
        let mut out = SymExpr::generator(BasisTag::H, lambda.clone());
        for pi in multiset_partitions(&content) {
            let m = multiplicity_partition(&pi);
            if m.size() < lambda.size() {
                out = &out - &ht_shape_to_h(&m);
            }
        }
        out
    })
}

/// Expansion of `ht[μ]` in the `st` basis via stable Kostka coefficients.
fn ht_shape_to_st(mu: &Partition) -> Arc<SymExpr> {
    memoized(&HT_TO_ST, mu.clone(), || {
        let mut out = SymExpr::zero(BasisTag::St);
        for lambda in partitions_up_to(mu.size()) {
            let k = stable_kostka(&lambda, mu).expect("|lambda| <= |mu|");
            if k != 0 {
                out.add_term(lambda, rat_big(BigInt::from(k)));
            }
        }
        out
    })
}

/// Expansion of `st[λ]` in the `ht` basis: inverting the stable Kostka
/// triangle, `st[λ] = ht[λ] − Σ_{ν ≠ λ} K̄_{νλ}·st[ν]` where the remaining ν
/// are smaller or strictly dominate λ.
fn st_shape_to_ht(lambda: &Partition) -> Arc<SymExpr> {
    memoized(&ST_TO_HT, lambda.clone(), || {
        let mut out = SymExpr::generator(BasisTag::Ht, lambda.clone());
        for nu in partitions_up_to(lambda.size()) {
            if nu == *lambda {
                continue;
            }
            let k = stable_kostka(&nu, lambda).expect("|nu| <= |lambda|");
            if k != 0 {
                out = &out - &st_shape_to_ht(&nu).scale(&rat_big(BigInt::from(k)));
            }
        }
        out
    })
}

fn expand_termwise(f: &SymExpr, target: BasisTag, shape: impl Fn(&Partition) -> Arc<SymExpr>) -> SymExpr {
    let mut out = SymExpr::zero(target);
    for (lambda, coeff) in f.terms() {
        out.add_assign(&shape(lambda).scale(coeff));
    }
    out
}

/// Apply `h_λ = Σ_π ht[~m(π)]` termwise to an `h`-basis expression.
pub fn h_to_ht(f: &SymExpr) -> SymExpr {
    assert_eq!(f.basis(), BasisTag::H, "h_to_ht expects the h basis");
    expand_termwise(f, BasisTag::Ht, h_shape_to_ht)
}

/// Inverse of [`h_to_ht`].
pub fn ht_to_h(f: &SymExpr) -> SymExpr {
    assert_eq!(f.basis(), BasisTag::Ht, "ht_to_h expects the ht basis");
    expand_termwise(f, BasisTag::H, ht_shape_to_h)
}

/// `ht[μ] = Σ_{|λ|≤|μ|} K̄_{λμ} st[λ]` termwise.
pub fn ht_to_st(f: &SymExpr) -> SymExpr {
    assert_eq!(f.basis(), BasisTag::Ht, "ht_to_st expects the ht basis");
    expand_termwise(f, BasisTag::St, ht_shape_to_st)
}

/// Inverse of [`ht_to_st`] (stable inverse Kostka).
pub fn st_to_ht(f: &SymExpr) -> SymExpr {
    assert_eq!(f.basis(), BasisTag::St, "st_to_ht expects the st basis");
    expand_termwise(f, BasisTag::Ht, st_shape_to_ht)
}

/// Universal converter among all seven basis tags; every route to or from
/// `ht`/`st` passes through `h`.
pub fn to_basis(f: &SymExpr, target: BasisTag) -> SymExpr {
    if f.basis() == target {
        return f.clone();
    }
    match (f.basis(), target) {
        (src, dst) if src.is_classical() && dst.is_classical() => {
            convert(f, dst).expect("classical conversion")
        }
        (src, BasisTag::Ht) if src.is_classical() => {
            h_to_ht(&convert(f, BasisTag::H).expect("classical conversion"))
        }
        (src, BasisTag::St) if src.is_classical() => {
            ht_to_st(&h_to_ht(&convert(f, BasisTag::H).expect("classical conversion")))
        }
        (BasisTag::Ht, BasisTag::St) => ht_to_st(f),
        (BasisTag::St, BasisTag::Ht) => st_to_ht(f),
        (BasisTag::Ht, dst) => convert(&ht_to_h(f), dst).expect("classical conversion"),
        (BasisTag::St, dst) => convert(&ht_to_h(&st_to_ht(f)), dst).expect("classical conversion"),
        _ => unreachable!(),
    }
}

/// `p_k[Ξ_μ] = Σ_{d|k} d·m_d(μ)`.
fn power_sum_at_roots(k: u32, mu: &Partition) -> BigInt {
    let mut out = BigInt::zero();
    for d in 1..=k {
        if k % d == 0 {
            out += BigInt::from(d) * BigInt::from(mu.multiplicity(d));
        }
    }
    out
}

/// Exact evaluation of `f` at the eigenvalue multiset `Ξ_μ` of a permutation
/// matrix of cycle type `μ`, via substitution in the power sum basis.
pub fn eval_at_permutation_roots(f: &SymExpr, mu: &Partition) -> Rational {
    let p = to_basis(f, BasisTag::P);
    let mut out = Rational::zero();
    for (gamma, coeff) in p.terms() {
        let mut factor = BigInt::one();
        for &part in gamma.parts() {
            factor *= power_sum_at_roots(part, mu);
            if factor.is_zero() {
                break;
            }
        }
        out += coeff * rat_big(factor);
    }
    out
}

/// `H_{λ,μ} = ⟨h_{|μ|−|λ|} h_λ, p_μ⟩`; zero when `|μ| < |λ|`.
pub fn h_coefficient(lambda: &Partition, mu: &Partition) -> BigInt {
    if mu.size() < lambda.size() {
        return BigInt::zero();
    }
    let mut index = lambda.parts().to_vec();
    index.push(mu.size() - lambda.size());
    let h = SymExpr::generator(BasisTag::H, Partition::from_unsorted(index));
    let p = SymExpr::generator(BasisTag::P, mu.clone());
    let value = hall_inner(&h, &p).expect("classical inner product");
    debug_assert!(value.is_integer());
    value.to_integer()
}

/// `HE_{(λ|τ),μ} = ⟨h_{|μ|−|λ|−|τ|} h_λ e_τ, p_μ⟩`; zero when
/// `|μ| < |λ| + |τ|`.
pub fn he_coefficient(lambda: &Partition, tau: &Partition, mu: &Partition) -> BigInt {
    if mu.size() < lambda.size() + tau.size() {
        return BigInt::zero();
    }
    let mut index = lambda.parts().to_vec();
    index.push(mu.size() - lambda.size() - tau.size());
    let h = SymExpr::generator(BasisTag::H, Partition::from_unsorted(index));
    let e = SymExpr::generator(BasisTag::E, tau.clone());
    let he = outer(&h, &e).expect("classical product");
    let p = SymExpr::generator(BasisTag::P, mu.clone());
    let value = hall_inner(&he, &p).expect("classical inner product");
    debug_assert!(value.is_integer());
    value.to_integer()
}

/// `e_λ[Ξ_μ]` by the set-partition decomposition
/// `Σ_{π ⊢ {{1^{λ₁},…}}} HE_{(~m_e(π)|~m_o(π)),μ}`.
pub fn e_eval_via_setpartitions(lambda: &Partition, mu: &Partition) -> BigInt {
    let content = Multiset::from_exponents(lambda);
    let mut out = BigInt::zero();
    for pi in set_partitions_of_multiset(&content) {
        let (even, odd) = parity_multiplicities(&pi);
        out += he_coefficient(&even, &odd, mu);
    }
    out
}

/// The degree-`n` Frobenius image `φ_n(f) = Σ_{μ⊢n} f[Ξ_μ] p_μ/z_μ`, returned
/// in the power sum basis.
pub fn frobenius_image(f: &SymExpr, n: u32) -> SymExpr {
    let mut out = SymExpr::zero(BasisTag::P);
    for mu in partitions_of(n) {
        let value = eval_at_permutation_roots(f, &mu);
        if !value.is_zero() {
            let coeff = value / rat_big(z(&mu));
            out.add_term(mu, coeff);
        }
    }
    out
}

/// Outer product of two `st` expressions; the structure constants are the
/// stable Kronecker coefficients ḡ.
pub fn st_product(f: &SymExpr, g: &SymExpr) -> SymExpr {
    assert_eq!(f.basis(), BasisTag::St);
    assert_eq!(g.basis(), BasisTag::St);
    let fh = ht_to_h(&st_to_ht(f));
    let gh = ht_to_h(&st_to_ht(g));
    ht_to_st(&h_to_ht(&multiply_multiplicative(&fh, &gh)))
}

/// Outer product of two `ht` expressions; the structure constants are the
/// stable Kronecker coefficients d̄.
pub fn ht_product(f: &SymExpr, g: &SymExpr) -> SymExpr {
    assert_eq!(f.basis(), BasisTag::Ht);
    assert_eq!(g.basis(), BasisTag::Ht);
    let fh = ht_to_h(f);
    let gh = ht_to_h(g);
    h_to_ht(&multiply_multiplicative(&fh, &gh))
}

/// ḡ^ν_{λμ}: the coefficient of `st[ν]` in `st[λ]·st[μ]` (stable Kronecker).
pub fn reduced_kronecker_g(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    let product = st_product(
        &SymExpr::generator(BasisTag::St, lambda.clone()),
        &SymExpr::generator(BasisTag::St, mu.clone()),
    );
    let c = product.coefficient(nu);
    debug_assert!(c.is_integer());
    c.to_integer()
}

/// d̄^ν_{λμ}: the coefficient of `ht[ν]` in `ht[λ]·ht[μ]`.
pub fn reduced_kronecker_d(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    let product = ht_product(
        &SymExpr::generator(BasisTag::Ht, lambda.clone()),
        &SymExpr::generator(BasisTag::Ht, mu.clone()),
    );
    let c = product.coefficient(nu);
    debug_assert!(c.is_integer());
    c.to_integer()
}

/// Outer product for any pair of basis tags; the result carries the basis of
/// `f`.  Character-basis inputs are multiplied through `h`.
pub fn outer_any(f: &SymExpr, g: &SymExpr) -> SymExpr {
    if f.basis().is_classical() && g.basis().is_classical() {
        return outer(f, g).expect("classical product");
    }
    let fh = to_basis(f, BasisTag::H);
    let gh = to_basis(g, BasisTag::H);
    to_basis(&multiply_multiplicative(&fh, &gh), f.basis())
}

/// Representative multiset partition with block multiplicities `shape` on the
/// alphabet starting at `offset + 1`: block `{{offset+i}}` repeats `shape_i`
/// times.
fn representative_partition(shape: &Partition, offset: u32) -> MultisetPartition {
    MultisetPartition::new(shape.parts().iter().enumerate().flat_map(|(i, &mult)| {
        std::iter::repeat(Multiset::new([offset + i as u32 + 1])).take(mult as usize)
    }))
}

/// `ht[~m(π)]·ht[~m(τ)] = Σ_{θ ∈ π#τ} ht[~m(θ)]`: enumerate the merges θ of
/// representative partitions π, τ on disjoint alphabets whose restrictions
/// recover π and τ.
pub fn ht_product_via_multisets(pi_shape: &Partition, tau_shape: &Partition) -> SymExpr {
    let pi = representative_partition(pi_shape, 0);
    let tau = representative_partition(tau_shape, pi_shape.len() as u32);
    let pi_blocks = pi.blocks();
    let tau_blocks = tau.blocks();

    // Assign each τ block either to an unused π block (merging) or to itself;
    // distinct assignments may produce the same θ, so collect a set.
    fn rec(
        pi_blocks: &[Multiset],
        tau_blocks: &[Multiset],
        j: usize,
        used: &mut Vec<bool>,
        assignment: &mut Vec<Option<usize>>,
        out: &mut std::collections::HashSet<MultisetPartition>,
    ) {
        if j == tau_blocks.len() {
            let mut blocks: Vec<Multiset> = Vec::new();
            for (i, block) in pi_blocks.iter().enumerate() {
                if !used[i] {
                    blocks.push(block.clone());
                }
            }
            for (jj, choice) in assignment.iter().enumerate() {
                match choice {
                    None => blocks.push(tau_blocks[jj].clone()),
                    Some(i) => blocks.push(pi_blocks[*i].union(&tau_blocks[jj])),
                }
            }
            out.insert(MultisetPartition::new(blocks));
            return;
        }
        assignment.push(None);
        rec(pi_blocks, tau_blocks, j + 1, used, assignment, out);
        assignment.pop();
        for i in 0..pi_blocks.len() {
            if !used[i] {
                used[i] = true;
                assignment.push(Some(i));
                rec(pi_blocks, tau_blocks, j + 1, used, assignment, out);
                assignment.pop();
                used[i] = false;
            }
        }
    }
    let mut merged: std::collections::HashSet<MultisetPartition> = Default::default();
    let mut used = vec![false; pi_blocks.len()];
    let mut assignment = Vec::new();
    rec(&pi_blocks, &tau_blocks, 0, &mut used, &mut assignment, &mut merged);

    let mut out = SymExpr::zero(BasisTag::Ht);
    for theta in merged {
        out.add_term(multiplicity_partition(&theta), Rational::one());
    }
    out
}

/// The same product through the non-negative integer matrix description of
/// `h_{(n−|λ|,λ)} ∗ h_{(n−|μ|,μ)}`: matrices with row sums `(n−|λ|, λ)` and
/// column sums `(n−|μ|, μ)`; each contributes `ht` at the partition of its
/// non-zero entries outside the top-left corner.
pub fn ht_product_via_matrices(pi_shape: &Partition, tau_shape: &Partition) -> SymExpr {
    let n = pi_shape.size() + tau_shape.size();
    let mut row_sums = vec![n - pi_shape.size()];
    row_sums.extend_from_slice(pi_shape.parts());
    let mut col_sums = vec![n - tau_shape.size()];
    col_sums.extend_from_slice(tau_shape.parts());

    fn rec(
        row_sums: &[u32],
        col_rem: &mut Vec<u32>,
        matrix: &mut Vec<Vec<u32>>,
        r: usize,
        c: usize,
        row_rem: u32,
        out: &mut SymExpr,
    ) {
        let rows = row_sums.len();
        let cols = col_rem.len();
        if r == rows {
            if col_rem.iter().all(|&x| x == 0) {
                let entries = matrix
                    .iter()
                    .enumerate()
                    .flat_map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .filter(move |&(j, _)| i != 0 || j != 0)
                            .map(|(_, &v)| v)
                    })
                    .filter(|&v| v > 0);
                out.add_term(Partition::from_unsorted(entries), Rational::one());
            }
            return;
        }
        if c == cols {
            if row_rem == 0 {
                let next = row_sums.get(r + 1).copied().unwrap_or(0);
                rec(row_sums, col_rem, matrix, r + 1, 0, next, out);
            }
            return;
        }
        let max = row_rem.min(col_rem[c]);
        for v in 0..=max {
            matrix[r][c] = v;
            col_rem[c] -= v;
            rec(row_sums, col_rem, matrix, r, c + 1, row_rem - v, out);
            col_rem[c] += v;
            matrix[r][c] = 0;
        }
    }
    let mut out = SymExpr::zero(BasisTag::Ht);
    let mut matrix = vec![vec![0u32; col_sums.len()]; row_sums.len()];
    let mut col_rem = col_sums.clone();
    let first_row = row_sums[0];
    rec(&row_sums, &mut col_rem, &mut matrix, 0, 0, first_row, &mut out);
    out
}

/// `h_μ = Σ_T st[shape(T) minus first part]` over the multiset-valued column
/// strict tableaux; independent oracle for [`to_basis`] to `st`.
pub fn h_to_st_via_tableaux(mu: &Partition) -> SymExpr {
    let mut out = SymExpr::zero(BasisTag::St);
    for t in enumerate_h_tableaux(mu) {
        out.add_term(t.index(), Rational::one());
    }
    out
}

/// `e_μ = Σ_T st[shape(T) minus first part]` over the parity-constrained
/// set-valued tableaux.
pub fn e_to_st_via_tableaux(mu: &Partition) -> SymExpr {
    let mut out = SymExpr::zero(BasisTag::St);
    for t in enumerate_e_tableaux(mu) {
        out.add_term(t.index(), Rational::one());
    }
    out
}

/// Stability-principle equality check: two expressions of degree ≤ `n` that
/// agree on every `Ξ_μ` with `|μ| ≤ n` are equal as symmetric functions.
pub fn agree_on_small_evaluations(f: &SymExpr, g: &SymExpr, n: u32) -> bool {
    (0..=n)
        .flat_map(partitions_of)
        .all(|mu| eval_at_permutation_roots(f, &mu) == eval_at_permutation_roots(g, &mu))
}

/// The expansion of a single `basis_λ` element in `target`.
pub fn generator_in(basis: BasisTag, lambda: Partition, target: BasisTag) -> SymExpr {
    to_basis(&SymExpr::generator(basis, lambda), target)
}
