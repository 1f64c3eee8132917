//! Ribbon braids: the wreath product `B_n ≀ Z`.
//!
//! An element is a braid word together with one integer half-twist count per
//! strand, indexed by bottom position (the twists sit below the braid in the
//! diagram). The product permutes the left factor's twists through the right
//! factor's strand permutation before adding:
//!
//! ```text
//! (β, m) · (γ, l) = (βγ, k ↦ m[ρ(γ)(k)] + l[k])
//! ```
//!
//! so sliding a twist down along a strand of `γ` moves it from top position
//! `ρ(γ)(k)` to bottom position `k`. With this direction twists commute with
//! pure braid parts, and the single-strand expansion identity holds.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RibbonBraid {
    braid: BraidWord,
    twists: Vec<i64>,
}

impl RibbonBraid {
    pub fn new(braid: BraidWord, twists: Vec<i64>) -> Result<RibbonBraid> {
        if twists.len() != braid.n() {
            return Err(Error::Arity(format!(
                "{} twists for {} strands",
                twists.len(),
                braid.n()
            )));
        }
        Ok(RibbonBraid { braid, twists })
    }

    pub fn identity(n: usize) -> RibbonBraid {
        RibbonBraid {
            braid: BraidWord::identity(n),
            twists: vec![0; n],
        }
    }

    /// Untwisted ribbon braid from a plain braid word.
    pub fn from_braid(braid: BraidWord) -> RibbonBraid {
        let n = braid.n();
        RibbonBraid {
            braid,
            twists: vec![0; n],
        }
    }

    /// Twist-only ribbon braid over the trivial braid.
    pub fn from_twists(twists: Vec<i64>) -> RibbonBraid {
        let n = twists.len();
        RibbonBraid {
            braid: BraidWord::identity(n),
            twists,
        }
    }

    pub fn n(&self) -> usize {
        self.braid.n()
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn is_untwisted(&self) -> bool {
        self.twists.iter().all(|&m| m == 0)
    }

    pub fn mul(&self, other: &RibbonBraid) -> Result<RibbonBraid> {
        if self.n() != other.n() {
            return Err(Error::StrandMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let braid = self.braid.concat(&other.braid)?;
        let sigma = other.braid.rho();
        let twists = (1..=self.n())
            .map(|k| self.twists[sigma.apply(k) - 1] + other.twists[k - 1])
            .collect();
        Ok(RibbonBraid { braid, twists })
    }

    pub fn inverse(&self) -> RibbonBraid {
        let braid = self.braid.inverse();
        let sigma = braid.rho();
        let twists = (1..=self.n())
            .map(|k| -self.twists[sigma.apply(k) - 1])
            .collect();
        RibbonBraid { braid, twists }
    }

    pub fn equals(&self, other: &RibbonBraid) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::StrandMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(self.twists == other.twists && self.braid.equals(&other.braid)?)
    }
}

impl fmt::Display for RibbonBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.braid)?;
        if !self.is_untwisted() {
            write!(f, " (")?;
            for (i, m) in self.twists.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{m}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RibbonBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RibbonBraid[n={}, {}]", self.n(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rb(n: usize, pairs: &[(usize, i64)], twists: &[i64]) -> RibbonBraid {
        RibbonBraid::new(BraidWord::from_pairs(n, pairs).unwrap(), twists.to_vec()).unwrap()
    }

    #[test]
    fn identity_and_twist_addition() {
        let a = rb(1, &[], &[0]);
        let b = rb(1, &[], &[5]);
        assert_eq!(a.mul(&b).unwrap().twists(), &[5]);
        // Pure braid part: twists add componentwise.
        let p = rb(2, &[(1, 2)], &[1, 2]);
        let q = rb(2, &[], &[3, 4]);
        let prod = p.mul(&q).unwrap();
        assert_eq!(prod.twists(), &[4, 6]);
        assert!(prod.braid().equals(p.braid()).unwrap());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(rb(2, &[], &[2, -1]).inverse(), rb(2, &[], &[-2, 1]));
        assert_eq!(
            rb(2, &[(1, 1)], &[0, 0]).inverse(),
            rb(2, &[(1, -1)], &[0, 0])
        );
        let x = rb(3, &[(1, 1), (2, -1)], &[1, -2, 3]);
        assert!(x
            .mul(&x.inverse())
            .unwrap()
            .equals(&RibbonBraid::identity(3))
            .unwrap());
        assert!(x
            .inverse()
            .mul(&x)
            .unwrap()
            .equals(&RibbonBraid::identity(3))
            .unwrap());
        assert!(x.inverse().inverse().equals(&x).unwrap());
    }

    #[test]
    fn equality_examples() {
        assert!(rb(2, &[(1, 1), (1, -1)], &[0, 0])
            .equals(&RibbonBraid::identity(2))
            .unwrap());
        assert!(!rb(1, &[], &[1]).equals(&rb(1, &[], &[2])).unwrap());
        let a = rb(3, &[(1, 1), (2, 1), (1, 1)], &[0, 0, 0]);
        let b = rb(3, &[(2, 1), (1, 1), (2, 1)], &[0, 0, 0]);
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn twists_commute_with_pure_parts() {
        let m = RibbonBraid::from_twists(vec![1, -2, 0]);
        let gamma = RibbonBraid::from_braid(BraidWord::from_pairs(3, &[(1, 2)]).unwrap());
        assert!(gamma.braid().is_pure());
        let ab = m.mul(&gamma).unwrap();
        let ba = gamma.mul(&m).unwrap();
        assert!(ab.equals(&ba).unwrap());
    }

    #[test]
    fn twists_slide_through_crossings() {
        // A twist on the strand entering top slot 1 of s1 started at bottom 2.
        let m = RibbonBraid::from_twists(vec![5, 0]);
        let s1 = RibbonBraid::from_braid(BraidWord::from_pairs(2, &[(1, 1)]).unwrap());
        let prod = m.mul(&s1).unwrap();
        assert_eq!(prod.twists(), &[0, 5]);
    }
}
