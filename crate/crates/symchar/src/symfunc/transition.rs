//! Basis conversions among the classical bases, routed through the power sums
//! with per-degree dense transition matrices.
//!
//! Matrices are memoized in the global [`TransitionCache`]: entries are
//! immutable once computed, concurrent readers are cheap, and a duplicated
//! concurrent computation of the same key inserts an identical value.

use crate::combinatorics::partition::{partitions_of, z, Partition};
use crate::error::{Error, Result};
use crate::symfunc::expr::{rat_big, BasisTag, Rational, SymExpr};
use num::{One, Zero};
use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, LazyLock, RwLock};

/// Dense rational matrix over the graded-lexicographic partition list of one
/// degree; `m[src][dst]`.
pub type Matrix = Vec<Vec<Rational>>;

pub(crate) fn memoized<K, V>(
    lock: &RwLock<HashMap<K, Arc<V>>>,
    key: K,
    compute: impl FnOnce() -> V,
) -> Arc<V>
where
    K: Eq + Hash + Clone,
{
    if let Some(v) = lock.read().unwrap().get(&key) {
        return Arc::clone(v);
    }
    let value = Arc::new(compute());
    let mut map = lock.write().unwrap();
    Arc::clone(map.entry(key).or_insert(value))
}

/// Memo maps keyed by (source tag, target tag, degree); recomputation always
/// yields identical matrices, so the first insert wins.
pub struct TransitionCache {
    partitions: RwLock<HashMap<u32, Arc<Vec<Partition>>>>,
    generator_in_p: RwLock<HashMap<(BasisTag, u32), Arc<SymExpr>>>,
    p_in_generator: RwLock<HashMap<(BasisTag, u32), Arc<SymExpr>>>,
    jacobi_trudi: RwLock<HashMap<Partition, Arc<SymExpr>>>,
    to_p: RwLock<HashMap<(BasisTag, u32), Arc<Matrix>>>,
    from_p: RwLock<HashMap<(BasisTag, u32), Arc<Matrix>>>,
    kostka: RwLock<HashMap<(Partition, Partition), Arc<u64>>>,
}

static CACHE: LazyLock<TransitionCache> = LazyLock::new(|| TransitionCache {
    partitions: RwLock::new(HashMap::new()),
    generator_in_p: RwLock::new(HashMap::new()),
    p_in_generator: RwLock::new(HashMap::new()),
    jacobi_trudi: RwLock::new(HashMap::new()),
    to_p: RwLock::new(HashMap::new()),
    from_p: RwLock::new(HashMap::new()),
    kostka: RwLock::new(HashMap::new()),
});

impl TransitionCache {
    pub fn global() -> &'static TransitionCache {
        &CACHE
    }

    /// Partitions of `d` in graded-lexicographic order, shared.
    pub fn partitions(&self, d: u32) -> Arc<Vec<Partition>> {
        memoized(&self.partitions, d, || partitions_of(d))
    }

    pub(crate) fn kostka_memo(&self, key: (Partition, Partition), compute: impl FnOnce() -> u64) -> u64 {
        *memoized(&self.kostka, key, compute)
    }
}

/// Index of `lambda` in the sorted degree list.
fn index_of(list: &[Partition], lambda: &Partition) -> usize {
    list.binary_search(lambda).expect("partition of the wrong degree")
}

/// Multiply expressions in a multiplicative basis (`p`, `h`, `e`):
/// X_λ · X_μ = X_{λ∪μ}.
pub(crate) fn multiply_multiplicative(a: &SymExpr, b: &SymExpr) -> SymExpr {
    assert_eq!(a.basis(), b.basis());
    assert!(a.basis().is_multiplicative());
    let mut out = SymExpr::zero(a.basis());
    for (la, ca) in a.terms() {
        for (lb, cb) in b.terms() {
            out.add_term(la.union(lb), ca * cb);
        }
    }
    out
}

/// h_n or e_n expanded in the power sums: Σ_{γ⊢n} ±p_γ/z_γ with sign
/// (−1)^{n−ℓ(γ)} for `e`.
fn generator_in_p(tag: BasisTag, n: u32) -> Arc<SymExpr> {
    memoized(&CACHE.generator_in_p, (tag, n), || {
        let mut out = SymExpr::zero(BasisTag::P);
        for gamma in partitions_of(n) {
            let mut coeff = Rational::one() / rat_big(z(&gamma));
            if tag == BasisTag::E && (n as usize - gamma.len()) % 2 == 1 {
                coeff = -coeff;
            }
            out.add_term(gamma, coeff);
        }
        out
    })
}

/// p_n expanded in `h` (or `e`) via Newton's identity
/// n·h_n = Σ_{i=1}^{n} p_i·h_{n−i}.
fn p_in_generator(tag: BasisTag, n: u32) -> Arc<SymExpr> {
    memoized(&CACHE.p_in_generator, (tag, n), || {
        if n == 0 {
            return SymExpr::unit(tag);
        }
        let sign = |k: u32| if tag == BasisTag::E && k % 2 == 0 { -Rational::one() } else { Rational::one() };
        // For e the identity reads n·e_n = Σ (−1)^{i−1} e_{n−i}·p_i.
        let mut acc = SymExpr::generator(tag, Partition::new(vec![n])).scale(&crate::symfunc::expr::rat(n as i64));
        for i in 1..n {
            let rest = p_in_generator(tag, i);
            let gen = SymExpr::generator(tag, Partition::new(vec![n - i]));
            let term = multiply_multiplicative(&gen, &rest).scale(&sign(i));
            acc = &acc - &term;
        }
        acc.scale(&sign(n))
    })
}

/// Jacobi–Trudi expansion of `s_λ` in the complete basis:
/// `s_λ = det[h_{λ_i + j − i}]`.
pub(crate) fn jacobi_trudi(lambda: &Partition) -> Arc<SymExpr> {
    memoized(&CACHE.jacobi_trudi, lambda.clone(), || {
        let n = lambda.len();
        if n == 0 {
            return SymExpr::unit(BasisTag::H);
        }
        let mut out = SymExpr::zero(BasisTag::H);
        // Expand the determinant over permutations.
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let mut parts: Vec<u32> = Vec::with_capacity(n);
            let mut valid = true;
            for (i, &j) in perm.iter().enumerate() {
                let entry = lambda.part(i) as i64 + j as i64 - i as i64;
                if entry < 0 {
                    valid = false;
                    break;
                }
                if entry > 0 {
                    parts.push(entry as u32);
                }
            }
            if valid {
                let sign = permutation_sign(&perm);
                out.add_term(Partition::from_unsorted(parts), crate::symfunc::expr::rat(sign));
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    })
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Expand a basis element into the power sums.
fn shape_to_p(tag: BasisTag, lambda: &Partition) -> SymExpr {
    match tag {
        BasisTag::P => SymExpr::generator(BasisTag::P, lambda.clone()),
        BasisTag::H | BasisTag::E => {
            let mut acc = SymExpr::unit(BasisTag::P);
            for &part in lambda.parts() {
                acc = multiply_multiplicative(&acc, &generator_in_p(tag, part));
            }
            acc
        }
        BasisTag::S => {
            let mut acc = SymExpr::zero(BasisTag::P);
            for (mu, coeff) in jacobi_trudi(lambda).terms() {
                acc.add_assign(&shape_to_p(BasisTag::H, mu).scale(coeff));
            }
            acc
        }
        BasisTag::M | BasisTag::Ht | BasisTag::St => unreachable!("handled by matrix/charbases routes"),
    }
}

/// Expand `p_γ` into basis `tag` (for `h`/`e` via Newton; `s` uses the
/// transposed character matrix below).
fn p_shape_to_generator(tag: BasisTag, gamma: &Partition) -> SymExpr {
    let mut acc = SymExpr::unit(tag);
    for &part in gamma.parts() {
        acc = multiply_multiplicative(&acc, &p_in_generator(tag, part));
    }
    acc
}

pub(crate) fn to_p_matrix(tag: BasisTag, d: u32) -> Arc<Matrix> {
    memoized(&CACHE.to_p, (tag, d), || {
        let parts = CACHE.partitions(d);
        let n = parts.len();
        match tag {
            BasisTag::H | BasisTag::E | BasisTag::S => {
                let mut m = vec![vec![Rational::zero(); n]; n];
                for (i, lambda) in parts.iter().enumerate() {
                    for (gamma, c) in shape_to_p(tag, lambda).terms() {
                        m[i][index_of(&parts, gamma)] = c.clone();
                    }
                }
                m
            }
            BasisTag::M => invert(&from_p_matrix(BasisTag::M, d)),
            _ => unreachable!(),
        }
    })
}

pub(crate) fn from_p_matrix(tag: BasisTag, d: u32) -> Arc<Matrix> {
    memoized(&CACHE.from_p, (tag, d), || {
        let parts = CACHE.partitions(d);
        let n = parts.len();
        match tag {
            BasisTag::H | BasisTag::E => {
                let mut m = vec![vec![Rational::zero(); n]; n];
                for (j, gamma) in parts.iter().enumerate() {
                    for (lambda, c) in p_shape_to_generator(tag, gamma).terms() {
                        m[j][index_of(&parts, lambda)] = c.clone();
                    }
                }
                m
            }
            BasisTag::S => {
                // p_γ = Σ_λ χ^λ(γ) s_λ with χ^λ(γ) = z_γ · [p_γ](s_λ).
                let s_to_p = to_p_matrix(BasisTag::S, d);
                let mut m = vec![vec![Rational::zero(); n]; n];
                for (j, gamma) in parts.iter().enumerate() {
                    let zg = rat_big(z(gamma));
                    for i in 0..n {
                        m[j][i] = &s_to_p[i][j] * &zg;
                    }
                }
                m
            }
            BasisTag::M => {
                // p_γ = Σ_μ ⟨h_μ, p_γ⟩ m_μ by ⟨h, m⟩-duality.
                let h_to_p = to_p_matrix(BasisTag::H, d);
                let mut m = vec![vec![Rational::zero(); n]; n];
                for (j, gamma) in parts.iter().enumerate() {
                    let zg = rat_big(z(gamma));
                    for i in 0..n {
                        m[j][i] = &h_to_p[i][j] * &zg;
                    }
                }
                m
            }
            _ => unreachable!(),
        }
    })
}

/// Gaussian elimination over the rationals.
fn invert(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.clone();
    let mut inv: Matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular transition matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &scale;
            inv[col][j] = &inv[col][j] / &scale;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in 0..n {
                    let av = &a[col][j] * &factor;
                    a[r][j] = &a[r][j] - &av;
                    let iv = &inv[col][j] * &factor;
                    inv[r][j] = &inv[r][j] - &iv;
                }
            }
        }
    }
    inv
}

fn apply_matrix(matrix: &Matrix, parts: &[Partition], f: &SymExpr, result: BasisTag) -> SymExpr {
    let mut out = SymExpr::zero(result);
    for (lambda, coeff) in f.terms() {
        let row = &matrix[index_of(parts, lambda)];
        for (j, entry) in row.iter().enumerate() {
            if !entry.is_zero() {
                out.add_term(parts[j].clone(), coeff * entry);
            }
        }
    }
    out
}

/// Convert among the classical bases `m`, `p`, `h`, `e`, `s`.  Inhomogeneous
/// expressions convert degree by degree; round trips are the identity.
pub fn convert(f: &SymExpr, target: BasisTag) -> Result<SymExpr> {
    if !f.basis().is_classical() {
        return Err(Error::NonClassicalBasis(f.basis().name()));
    }
    if !target.is_classical() {
        return Err(Error::NonClassicalBasis(target.name()));
    }
    if f.basis() == target {
        return Ok(f.clone());
    }
    let mut out = SymExpr::zero(target);
    for d in f.support_sizes() {
        let parts = CACHE.partitions(d);
        let component = f.homogeneous_component(d);
        let in_p = if f.basis() == BasisTag::P {
            component.with_basis(BasisTag::P)
        } else {
            apply_matrix(&to_p_matrix(f.basis(), d), &parts, &component, BasisTag::P)
        };
        let converted = if target == BasisTag::P {
            in_p.with_basis(target)
        } else {
            apply_matrix(&from_p_matrix(target, d), &parts, &in_p, target)
        };
        out.add_assign(&converted);
    }
    Ok(out)
}
