//! Sparse symmetric function expressions: a basis tag plus a map from
//! partitions to exact rational coefficients.

use crate::combinatorics::partition::Partition;
use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

/// Exact rational coefficients; reduced form with positive denominator is
/// maintained by `num`.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// The seven bases.  `m`, `p`, `h`, `e`, `s` are the classical homogeneous
/// bases; `ht` (induced trivial character) and `st` (irreducible character)
/// are the inhomogeneous character bases handled by [`crate::charbases`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisTag {
    M,
    P,
    H,
    E,
    S,
    Ht,
    St,
}

impl BasisTag {
    pub const ALL: [BasisTag; 7] = [
        BasisTag::M,
        BasisTag::P,
        BasisTag::H,
        BasisTag::E,
        BasisTag::S,
        BasisTag::Ht,
        BasisTag::St,
    ];

    pub const CLASSICAL: [BasisTag; 5] =
        [BasisTag::M, BasisTag::P, BasisTag::H, BasisTag::E, BasisTag::S];

    pub fn name(self) -> &'static str {
        match self {
            BasisTag::M => "m",
            BasisTag::P => "p",
            BasisTag::H => "h",
            BasisTag::E => "e",
            BasisTag::S => "s",
            BasisTag::Ht => "ht",
            BasisTag::St => "st",
        }
    }

    pub fn is_classical(self) -> bool {
        !matches!(self, BasisTag::Ht | BasisTag::St)
    }

    /// `p`, `h`, `e` are multiplicative: X_λ · X_μ = X_{λ ∪ μ}.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, BasisTag::P | BasisTag::H | BasisTag::E)
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(BasisTag::M),
            "p" => Ok(BasisTag::P),
            "h" => Ok(BasisTag::H),
            "e" => Ok(BasisTag::E),
            "s" => Ok(BasisTag::S),
            "ht" => Ok(BasisTag::Ht),
            "st" => Ok(BasisTag::St),
            other => Err(Error::Parse {
                position: 0,
                message: format!("unknown basis tag `{other}`"),
            }),
        }
    }
}

/// A sparse element of Sym: `Σ terms[λ] · basis_λ`.  Zero coefficients are
/// never stored, so equality is structural; terms iterate in the canonical
/// graded-lexicographic order.
#[derive(Clone, PartialEq, Eq)]
pub struct SymExpr {
    basis: BasisTag,
    terms: BTreeMap<Partition, Rational>,
}

impl SymExpr {
    pub fn zero(basis: BasisTag) -> Self {
        SymExpr { basis, terms: BTreeMap::new() }
    }

    /// The unit element: coefficient 1 on the empty partition.
    pub fn unit(basis: BasisTag) -> Self {
        SymExpr::generator(basis, Partition::empty())
    }

    /// The single basis element `basis_λ`.
    pub fn generator(basis: BasisTag, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rational::one());
        SymExpr { basis, terms }
    }

    pub fn constant(basis: BasisTag, value: Rational) -> Self {
        let mut out = SymExpr::zero(basis);
        out.add_term(Partition::empty(), value);
        out
    }

    pub fn from_terms(basis: BasisTag, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = SymExpr::zero(basis);
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Max index size over the support (0 for the zero expression).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    /// Index sizes present in the support, ascending.
    pub fn support_sizes(&self) -> Vec<u32> {
        let mut sizes: Vec<u32> = self.terms.keys().map(Partition::size).collect();
        sizes.dedup();
        sizes
    }

    /// Terms whose index has size `d`.
    pub fn homogeneous_component(&self, d: u32) -> SymExpr {
        SymExpr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Add `coeff · basis_λ`, dropping the entry when it cancels.
    pub fn add_term(&mut self, lambda: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &SymExpr) {
        assert_eq!(self.basis, other.basis, "basis mismatch in add");
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c.clone());
        }
    }

    pub fn scale(&self, factor: &Rational) -> SymExpr {
        if factor.is_zero() {
            return SymExpr::zero(self.basis);
        }
        SymExpr {
            basis: self.basis,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * factor)).collect(),
        }
    }

    /// Reinterpret the same term map under a different tag (used by the
    /// transition routines, where the coefficients have just been rebased).
    pub(crate) fn with_basis(self, basis: BasisTag) -> SymExpr {
        SymExpr { basis, terms: self.terms }
    }
}

impl Add<&SymExpr> for &SymExpr {
    type Output = SymExpr;

    fn add(self, rhs: &SymExpr) -> SymExpr {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub<&SymExpr> for &SymExpr {
    type Output = SymExpr;

    fn sub(self, rhs: &SymExpr) -> SymExpr {
        assert_eq!(self.basis, rhs.basis, "basis mismatch in sub");
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SymExpr {
    type Output = SymExpr;

    fn neg(self) -> SymExpr {
        SymExpr {
            basis: self.basis,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c.clone())).collect(),
        }
    }
}

impl fmt::Display for SymExpr {
    /// Canonical text form: graded-lexicographic ascending term order,
    /// `coefficient*tag[parts]` with unit coefficients elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{}{}", self.basis, lambda)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt<const N: usize>(parts: [u32; N]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let mut f = SymExpr::zero(BasisTag::H);
        f.add_term(pt([2]), rat(3));
        f.add_term(pt([2]), rat(-3));
        assert!(f.is_zero());
        f.add_term(pt([1]), Rational::zero());
        assert!(f.is_zero());
    }

    #[test]
    fn display_canonical_order() {
        let f = SymExpr::from_terms(
            BasisTag::St,
            vec![
                (pt([2, 1]), rat(1)),
                (Partition::empty(), rat(4)),
                (pt([1, 1]), rat(3)),
                (pt([3]), rat(1)),
                (pt([1]), rat(7)),
                (pt([2]), rat(4)),
            ],
        );
        assert_eq!(f.to_string(), "4*st[] + 7*st[1] + 3*st[1,1] + 4*st[2] + st[2,1] + st[3]");
    }

    #[test]
    fn display_negative_and_rational() {
        let f = SymExpr::from_terms(
            BasisTag::P,
            vec![
                (pt([1]), rat(-1)),
                (pt([2]), Rational::new(BigInt::from(1), BigInt::from(2))),
            ],
        );
        assert_eq!(f.to_string(), "-p[1] + 1/2*p[2]");
        assert_eq!(SymExpr::zero(BasisTag::P).to_string(), "0");
    }

    #[test]
    fn degree_and_components() {
        let f = SymExpr::from_terms(BasisTag::Ht, vec![(pt([1]), rat(2)), (pt([2, 1]), rat(1))]);
        assert_eq!(f.degree(), 3);
        assert_eq!(f.homogeneous_component(1).num_terms(), 1);
        assert_eq!(f.support_sizes(), vec![1, 3]);
    }
}
