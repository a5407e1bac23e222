//! Kostka numbers, inverse Kostka coefficients, stable Kostka coefficients,
//! and symmetric group character values.

use crate::combinatorics::partition::{z, Partition};
use crate::error::{Error, Result};
use crate::symfunc::expr::{rat_big, BasisTag, Rational, SymExpr};
use crate::symfunc::transition::{jacobi_trudi, TransitionCache};
use num::{BigInt, ToPrimitive};

/// Sub-shapes `ν ⊆ shape` with `shape/ν` a horizontal strip of size `c`.
fn horizontal_strip_subshapes(shape: &Partition, c: u32) -> Vec<Partition> {
    let rows = shape.len();
    let mut out = Vec::new();
    let mut nu = vec![0u32; rows];
    fn rec(shape: &Partition, i: usize, left: u32, nu: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == nu.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(nu.iter().copied()));
            }
            return;
        }
        // Interlacing: shape_{i+1} ≤ ν_i ≤ shape_i keeps one cell per column.
        let lo = shape.part(i + 1);
        let hi = shape.part(i);
        for v in lo..=hi {
            let removed = hi - v;
            if removed > left {
                continue;
            }
            nu[i] = v;
            rec(shape, i + 1, left - removed, nu, out);
        }
    }
    rec(shape, 0, c, &mut nu, &mut out);
    out
}

fn kostka_rec(shape: Partition, content: Partition) -> u64 {
    if content.is_empty() {
        return if shape.is_empty() { 1 } else { 0 };
    }
    TransitionCache::global().kostka_memo((shape.clone(), content.clone()), || {
        // Peel the largest letter: its cells form a horizontal strip.
        let c = content.part(content.len() - 1);
        let rest = Partition::new(content.parts()[..content.len() - 1].to_vec());
        horizontal_strip_subshapes(&shape, c)
            .into_iter()
            .map(|nu| kostka_rec(nu, rest.clone()))
            .sum()
    })
}

/// K_{λμ}: the number of column strict tableaux of shape λ and content μ.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { lhs: lambda.size(), rhs: mu.size() });
    }
    Ok(kostka_rec(lambda.clone(), mu.clone()))
}

/// K⁻¹_{λμ}: the coefficient of `h_λ` in the Jacobi–Trudi expansion of `s_μ`;
/// satisfies Σ_μ K_{λμ}·K⁻¹_{μν} = δ_{λν}.
pub fn inverse_kostka(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { lhs: lambda.size(), rhs: mu.size() });
    }
    let coeff = jacobi_trudi(mu).coefficient(lambda);
    Ok(coeff.to_integer().to_i64().expect("inverse Kostka overflow"))
}

/// The stable Kostka coefficient `K_{(n−|λ|,λ)(n−|μ|,μ)}` with `n = 2|μ|`,
/// which is independent of `n` for all sufficiently large `n`.
pub fn stable_kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() > mu.size() {
        return Err(Error::StableSizeOrder { lhs: lambda.size(), rhs: mu.size() });
    }
    stable_kostka_with_padding(lambda, mu, 2 * mu.size())
}

/// Same coefficient with an explicit padding; exposed so tests can check the
/// n-independence.
pub fn stable_kostka_with_padding(lambda: &Partition, mu: &Partition, n: u32) -> Result<u64> {
    if lambda.size() > mu.size() {
        return Err(Error::StableSizeOrder { lhs: lambda.size(), rhs: mu.size() });
    }
    kostka(&lambda.padded(n), &mu.padded(n))
}

/// χ^λ(γ): the irreducible symmetric group character, as ⟨s_λ, p_γ⟩.
pub fn character_value(lambda: &Partition, gamma: &Partition) -> Result<BigInt> {
    if lambda.size() != gamma.size() {
        return Err(Error::SizeMismatch { lhs: lambda.size(), rhs: gamma.size() });
    }
    let s = SymExpr::generator(BasisTag::S, lambda.clone());
    let p = crate::symfunc::transition::convert(&s, BasisTag::P)?;
    let value: Rational = p.coefficient(gamma) * rat_big(z(gamma));
    debug_assert!(value.is_integer());
    Ok(value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::partitions_of;

    fn pt<const N: usize>(parts: [u32; N]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn kostka_standard_values() {
        assert_eq!(kostka(&pt([2, 1]), &pt([1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&pt([2, 1]), &pt([2, 1])).unwrap(), 1);
        assert_eq!(kostka(&pt([3]), &pt([1, 1, 1])).unwrap(), 1);
        assert_eq!(kostka(&pt([1, 1]), &pt([2])).unwrap(), 0);
        assert!(kostka(&pt([2]), &pt([1])).is_err());
    }

    #[test]
    fn kostka_is_one_on_the_diagonal() {
        for d in 0..=6 {
            for lambda in partitions_of(d) {
                assert_eq!(kostka(&lambda, &lambda).unwrap(), 1);
            }
        }
    }

    #[test]
    fn kostka_and_inverse_are_mutually_inverse() {
        for d in 0..=6u32 {
            let parts = partitions_of(d);
            for lambda in &parts {
                for nu in &parts {
                    let total: i64 = parts
                        .iter()
                        .map(|mu| kostka(lambda, mu).unwrap() as i64 * inverse_kostka(mu, nu).unwrap())
                        .sum();
                    let expected = if lambda == nu { 1 } else { 0 };
                    assert_eq!(total, expected, "lambda {lambda} nu {nu}");
                }
            }
        }
    }

    #[test]
    fn stable_kostka_examples() {
        assert_eq!(stable_kostka(&Partition::empty(), &pt([1])).unwrap(), 1);
        assert_eq!(stable_kostka(&pt([2, 1]), &pt([2, 1])).unwrap(), 1);
        assert!(stable_kostka(&pt([2, 1]), &pt([1])).is_err());
    }

    #[test]
    fn stable_kostka_independent_of_padding() {
        use crate::combinatorics::partition::partitions_up_to;
        for lambda in partitions_up_to(5) {
            for mu in partitions_up_to(5) {
                if lambda.size() > mu.size() {
                    continue;
                }
                let base = stable_kostka(&lambda, &mu).unwrap();
                let larger = stable_kostka_with_padding(&lambda, &mu, 2 * mu.size() + 5).unwrap();
                assert_eq!(base, larger, "lambda {lambda} mu {mu}");
            }
        }
    }

    #[test]
    fn character_table_of_s3() {
        // Classes (1,1,1), (2,1), (3); rows s_3, s_21, s_111.
        let classes = [pt([1, 1, 1]), pt([2, 1]), pt([3])];
        let expect = [
            (pt([3]), [1i64, 1, 1]),
            (pt([2, 1]), [2, 0, -1]),
            (pt([1, 1, 1]), [1, -1, 1]),
        ];
        for (lambda, row) in expect {
            for (gamma, want) in classes.iter().zip(row) {
                assert_eq!(character_value(&lambda, gamma).unwrap(), BigInt::from(want));
            }
        }
    }

    #[test]
    fn character_orthogonality_matches_z() {
        use crate::combinatorics::partition::z;
        for d in 1..=6u32 {
            for gamma in partitions_of(d) {
                let total: BigInt = partitions_of(d)
                    .iter()
                    .map(|lambda| {
                        let v = character_value(lambda, &gamma).unwrap();
                        &v * &v
                    })
                    .sum();
                assert_eq!(total, z(&gamma), "gamma {gamma}");
            }
        }
    }
}
