//! Thompson's group V as tree pairs with permutations.
//!
//! A V element is a triple `(left, σ, right)` of trees with equal leaf count
//! and a permutation of the leaves. The fully reduced representative is
//! unique, which makes this the exact kernel test for `bP`: an rV element
//! with pure normal-form braid lies in `bP` iff its V projection reduces to
//! the identity triple.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::tree::Tree;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VElement {
    left: Tree,
    perm: Perm,
    right: Tree,
}

impl VElement {
    pub fn new(left: Tree, perm: Perm, right: Tree) -> Result<VElement> {
        if left.leaf_count() != perm.n() || right.leaf_count() != perm.n() {
            return Err(Error::Arity(format!(
                "trees with {} and {} leaves against a permutation of degree {}",
                left.leaf_count(),
                right.leaf_count(),
                perm.n()
            )));
        }
        Ok(VElement { left, perm, right })
    }

    pub fn identity() -> VElement {
        VElement {
            left: Tree::leaf(),
            perm: Perm::identity(1),
            right: Tree::leaf(),
        }
    }

    pub fn left(&self) -> &Tree {
        &self.left
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn right(&self) -> &Tree {
        &self.right
    }

    pub fn leaf_count(&self) -> usize {
        self.perm.n()
    }

    /// Expansion at leaf `k` of the right tree: carets are added at `k` on
    /// the right and at `σ(k)` on the left, and `σ` is doubled at `k`.
    fn expand(&self, k: usize) -> VElement {
        let j = self.perm.apply(k);
        VElement {
            left: self.left.add_caret(j).expect("expansion index in range"),
            perm: self.perm.doubled_at(k),
            right: self.right.add_caret(k).expect("expansion index in range"),
        }
    }

    /// A reduction site is a leaf `i` with `i, i+1` siblings in the right
    /// tree, `σ(i+1) = σ(i)+1`, and `σ(i), σ(i)+1` siblings in the left tree.
    fn reduction_sites(&self) -> Vec<usize> {
        let left_pairs = self.left.caret_pairs();
        self.right
            .caret_pairs()
            .into_iter()
            .filter(|&i| {
                let j = self.perm.apply(i);
                self.perm.apply(i + 1) == j + 1 && left_pairs.contains(&j)
            })
            .collect()
    }

    fn reduce_at(&self, i: usize) -> VElement {
        let j = self.perm.apply(i);
        let n = self.perm.n();
        let mut images = Vec::with_capacity(n - 1);
        for k in (1..=n).filter(|&k| k != i + 1) {
            let t = self.perm.apply(k);
            let t = if t > j { t - 1 } else { t };
            images.push(t);
        }
        VElement {
            left: self.left.remove_caret_pair(j).expect("valid site"),
            perm: Perm::from_images(images).expect("collapse preserves bijectivity"),
            right: self.right.remove_caret_pair(i).expect("valid site"),
        }
    }

    /// The unique fully reduced representative.
    pub fn reduce(&self) -> VElement {
        let mut cur = self.clone();
        while let Some(&i) = cur.reduction_sites().first() {
            cur = cur.reduce_at(i);
        }
        cur
    }

    pub fn mul(&self, other: &VElement) -> VElement {
        let mut a = self.clone();
        let mut b = other.clone();
        let middle = a.right.common_refinement(&b.left);
        while let Some(k) = a.right.first_expansion_toward(&middle) {
            a = a.expand(k);
        }
        while let Some(j) = b.left.first_expansion_toward(&middle) {
            let k = b.perm.inverse().apply(j);
            b = b.expand(k);
        }
        debug_assert_eq!(a.right, b.left);
        VElement {
            left: a.left,
            perm: a.perm.compose(&b.perm),
            right: b.right,
        }
        .reduce()
    }

    pub fn inverse(&self) -> VElement {
        VElement {
            left: self.right.clone(),
            perm: self.perm.inverse(),
            right: self.left.clone(),
        }
    }

    pub fn equals(&self, other: &VElement) -> bool {
        self.reduce() == other.reduce()
    }

    pub fn is_identity(&self) -> bool {
        let r = self.reduce();
        r.left.is_leaf() && r.right.is_leaf()
    }
}

impl fmt::Display for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {} | {}]", self.left, self.perm, self.right)
    }
}

impl fmt::Debug for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VElement{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        Tree::parse(s).unwrap()
    }

    fn v(l: &str, images: &[usize], r: &str) -> VElement {
        VElement::new(t(l), Perm::from_images(images.to_vec()).unwrap(), t(r)).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(v("100", &[1, 2], "100").reduce(), VElement::identity());
        assert_eq!(
            v("10100", &[1, 2, 3], "10100").reduce(),
            VElement::identity()
        );
        // The V image of x0 is already reduced.
        let x0v = v("10100", &[1, 2, 3], "11000");
        assert_eq!(x0v.reduce(), x0v);
    }

    #[test]
    fn arity_is_checked() {
        assert!(VElement::new(t("100"), Perm::identity(3), t("10100")).is_err());
    }

    #[test]
    fn mul_and_inverse() {
        let a = v("10100", &[1, 2, 3], "11000");
        assert!(a.mul(&a.inverse()).is_identity());
        assert!(a.inverse().mul(&a).is_identity());
        assert!(VElement::identity().mul(&a).equals(&a));
        assert!(a.mul(&VElement::identity()).equals(&a));
        assert_eq!(
            v("11000", &[1, 2, 3], "10100").inverse(),
            v("10100", &[1, 2, 3], "11000")
        );
    }

    #[test]
    fn identity_test_examples() {
        assert!(v("100", &[1, 2], "100").is_identity());
        assert!(!v("11000", &[1, 2, 3], "10100").is_identity());
        // Distinct trees with the identity permutation are never trivial.
        assert!(!v("11000", &[1, 2, 3], "10100").reduce().left.is_leaf());
    }

    #[test]
    fn permuted_reduction() {
        // Swapping two sibling leaves blocks the reduction.
        let g = v("100", &[2, 1], "100");
        assert_eq!(g.reduce(), g);
        assert!(!g.is_identity());
        assert!(g.mul(&g).is_identity());
    }

    #[test]
    fn reduce_is_idempotent() {
        let g = v("1100100", &[3, 4, 1, 2], "1101000");
        assert_eq!(g.reduce(), g.reduce().reduce());
    }

    #[test]
    fn reduction_order_does_not_matter() {
        // Expand a few elements in all directions, then reduce choosing
        // sites by a marching counter instead of smallest-first.
        let seeds = [
            v("10100", &[1, 2, 3], "11000"),
            v("100", &[2, 1], "100"),
            v("1100100", &[3, 4, 1, 2], "1101000"),
        ];
        for (round, g) in seeds.iter().enumerate() {
            let mut rep = g.clone();
            for step in 0..4 {
                let k = (round + step * 3) % rep.leaf_count() + 1;
                rep = rep.expand(k);
            }
            let mut pick = round;
            let mut shuffled = rep.clone();
            loop {
                let sites = shuffled.reduction_sites();
                if sites.is_empty() {
                    break;
                }
                shuffled = shuffled.reduce_at(sites[pick % sites.len()]);
                pick = pick.wrapping_mul(31).wrapping_add(7);
            }
            assert_eq!(shuffled, rep.reduce());
            assert_eq!(shuffled, g.reduce());
        }
    }
}
