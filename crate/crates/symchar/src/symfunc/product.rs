//! Outer product, Kronecker product, and the Hall inner product on the
//! classical bases.

use crate::combinatorics::partition::z;
use crate::error::Result;
use crate::symfunc::expr::{rat_big, BasisTag, Rational, SymExpr};
use crate::symfunc::transition::{convert, multiply_multiplicative};
use num::Zero;

/// Ring multiplication; the result is expressed in the basis of `f`.
pub fn outer(f: &SymExpr, g: &SymExpr) -> Result<SymExpr> {
    if f.basis() == g.basis() && f.basis().is_multiplicative() {
        return Ok(multiply_multiplicative(f, g));
    }
    let fp = convert(f, BasisTag::P)?;
    let gp = convert(g, BasisTag::P)?;
    convert(&multiply_multiplicative(&fp, &gp), f.basis())
}

/// Kronecker product: bilinear with `p_λ/z_λ ∗ p_μ/z_μ = δ_{λ=μ} p_λ/z_λ`,
/// i.e. `p_λ ∗ p_μ = δ_{λ=μ} z_λ p_λ`.  Components of different degrees
/// contribute zero; the result is in the basis of `f`.
pub fn kronecker(f: &SymExpr, g: &SymExpr) -> Result<SymExpr> {
    let fp = convert(f, BasisTag::P)?;
    let gp = convert(g, BasisTag::P)?;
    let mut out = SymExpr::zero(BasisTag::P);
    for (lambda, a) in fp.terms() {
        let b = gp.coefficient(lambda);
        if !b.is_zero() {
            out.add_term(lambda.clone(), a * b * rat_big(z(lambda)));
        }
    }
    convert(&out, f.basis())
}

/// The Hall inner product: ⟨p_λ/z_λ, p_μ⟩ = δ_{λ=μ}.
pub fn hall_inner(f: &SymExpr, g: &SymExpr) -> Result<Rational> {
    let fp = convert(f, BasisTag::P)?;
    let gp = convert(g, BasisTag::P)?;
    let mut out = Rational::zero();
    for (lambda, a) in fp.terms() {
        let b = gp.coefficient(lambda);
        if !b.is_zero() {
            out += a * b * rat_big(z(lambda));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::{partitions_of, Partition};
    use crate::symfunc::expr::rat;
    use num::One;

    fn pt<const N: usize>(parts: [u32; N]) -> Partition {
        Partition::from(parts)
    }

    fn gen(tag: BasisTag, parts: Vec<u32>) -> SymExpr {
        SymExpr::generator(tag, Partition::new(parts))
    }

    #[test]
    fn multiplicative_bases_join_indices() {
        assert_eq!(outer(&gen(BasisTag::H, vec![2]), &gen(BasisTag::H, vec![1])).unwrap(), gen(BasisTag::H, vec![2, 1]));
        assert_eq!(outer(&gen(BasisTag::E, vec![1]), &gen(BasisTag::E, vec![2])).unwrap(), gen(BasisTag::E, vec![2, 1]));
    }

    #[test]
    fn pieri_s1_squared() {
        let s1 = gen(BasisTag::S, vec![1]);
        let sq = outer(&s1, &s1).unwrap();
        assert_eq!(sq.coefficient(&pt([2])), rat(1));
        assert_eq!(sq.coefficient(&pt([1, 1])), rat(1));
        assert_eq!(sq.num_terms(), 2);
    }

    #[test]
    fn schur_functions_are_orthonormal() {
        for d in 0..=5u32 {
            for a in partitions_of(d) {
                for b in partitions_of(d) {
                    let inner = hall_inner(
                        &SymExpr::generator(BasisTag::S, a.clone()),
                        &SymExpr::generator(BasisTag::S, b.clone()),
                    )
                    .unwrap();
                    assert_eq!(inner, if a == b { rat(1) } else { rat(0) });
                }
            }
        }
    }

    #[test]
    fn hall_inner_of_power_sums() {
        let p21 = gen(BasisTag::P, vec![2, 1]);
        assert_eq!(hall_inner(&p21, &p21).unwrap(), rat(2));
    }

    #[test]
    fn h_m_duality() {
        for d in 0..=6u32 {
            for a in partitions_of(d) {
                for b in partitions_of(d) {
                    let inner = hall_inner(
                        &SymExpr::generator(BasisTag::H, a.clone()),
                        &SymExpr::generator(BasisTag::M, b.clone()),
                    )
                    .unwrap();
                    assert_eq!(inner, if a == b { rat(1) } else { rat(0) }, "a {a} b {b}");
                }
            }
        }
    }

    #[test]
    fn appendix_scalar_fixture() {
        let h = gen(BasisTag::H, vec![8, 3, 1]);
        let p = gen(BasisTag::P, vec![3, 3, 2, 2, 1, 1]);
        assert_eq!(hall_inner(&h, &p).unwrap(), rat(8));
    }

    #[test]
    fn kronecker_on_power_sums() {
        let p = gen(BasisTag::P, vec![2, 1]);
        let k = kronecker(&p, &p).unwrap();
        let mut expected = SymExpr::zero(BasisTag::P);
        expected.add_term(pt([2, 1]), rat(2));
        assert_eq!(k, expected);
    }

    #[test]
    fn kronecker_identity_element() {
        // s_(n) ∗ f = f for homogeneous f of degree n.
        let f = SymExpr::from_terms(BasisTag::S, vec![(pt([2, 1]), rat(3)), (pt([1, 1, 1]), rat(-1))]);
        let id = gen(BasisTag::S, vec![3]);
        assert_eq!(kronecker(&id, &f).unwrap(), f);
    }

    #[test]
    fn kronecker_degree_mismatch_is_zero() {
        let a = gen(BasisTag::P, vec![2]);
        let b = gen(BasisTag::P, vec![1]);
        assert!(kronecker(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn kronecker_is_multiplicative_on_scalars() {
        // ⟨f ∗ g, p_γ⟩ = ⟨f, p_γ⟩·⟨g, p_γ⟩.
        let f = SymExpr::from_terms(BasisTag::H, vec![(pt([2, 1]), rat(2)), (pt([3]), rat(1))]);
        let g = SymExpr::from_terms(BasisTag::E, vec![(pt([1, 1, 1]), rat(1)), (pt([2, 1]), rat(-3))]);
        let fg = kronecker(&f, &g).unwrap();
        for gamma in partitions_of(3) {
            let p = SymExpr::generator(BasisTag::P, gamma.clone());
            let lhs = hall_inner(&fg, &p).unwrap();
            let rhs = hall_inner(&f, &p).unwrap() * hall_inner(&g, &p).unwrap();
            assert_eq!(lhs, rhs, "gamma {gamma}");
        }
    }

    #[test]
    fn kronecker_commutes_and_associates() {
        let f = gen(BasisTag::S, vec![3, 1]);
        let g = gen(BasisTag::S, vec![2, 2]);
        let h = gen(BasisTag::S, vec![2, 1, 1]);
        let fg = kronecker(&f, &g).unwrap();
        let gf = kronecker(&g, &f).unwrap();
        assert_eq!(fg, gf);
        let left = kronecker(&fg, &h).unwrap();
        let right = kronecker(&f, &kronecker(&g, &h).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn unit_is_one() {
        let one = SymExpr::unit(BasisTag::P);
        let f = gen(BasisTag::P, vec![3, 2]);
        assert_eq!(outer(&one, &f).unwrap(), f);
        assert!(Rational::one().is_one());
    }
}
