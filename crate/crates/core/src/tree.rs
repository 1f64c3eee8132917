//! Finite rooted planar binary trees.
//!
//! A tree is stored as its preorder bit encoding: `1` for an internal vertex
//! (a caret), `0` for a leaf. The encoding is the canonical form; two trees
//! are equal iff their encodings are byte-identical. Leaves are numbered
//! `1..=n` from left to right.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    bits: Vec<u8>, // 1 = caret, 0 = leaf, preorder
}

impl Tree {
    /// The trivial tree: a single leaf.
    pub fn leaf() -> Tree {
        Tree { bits: vec![0] }
    }

    /// A caret with the two given subtrees.
    pub fn caret(left: Tree, right: Tree) -> Tree {
        let mut bits = Vec::with_capacity(1 + left.bits.len() + right.bits.len());
        bits.push(1);
        bits.extend_from_slice(&left.bits);
        bits.extend_from_slice(&right.bits);
        Tree { bits }
    }

    /// Parse a preorder bitstring such as `"10100"`.
    ///
    /// The string is valid iff scanning left to right the zero count first
    /// exceeds the one count exactly at the last symbol.
    pub fn parse(s: &str) -> Result<Tree> {
        if s.is_empty() {
            return Err(Error::InvalidTree(s.to_string()));
        }
        let mut bits = Vec::with_capacity(s.len());
        let mut balance: i64 = 1; // carets still awaiting children
        for (pos, ch) in s.chars().enumerate() {
            if balance <= 0 {
                return Err(Error::InvalidTree(s.to_string()));
            }
            match ch {
                '1' => {
                    bits.push(1);
                    balance += 1;
                }
                '0' => {
                    bits.push(0);
                    balance -= 1;
                }
                _ => return Err(Error::InvalidTree(s.to_string())),
            }
            if balance == 0 && pos + 1 != s.len() {
                return Err(Error::InvalidTree(s.to_string()));
            }
        }
        if balance != 0 {
            return Err(Error::InvalidTree(s.to_string()));
        }
        Ok(Tree { bits })
    }

    pub fn is_leaf(&self) -> bool {
        self.bits.len() == 1
    }

    /// Number of leaves, always at least 1.
    pub fn leaf_count(&self) -> usize {
        self.bits.len().div_ceil(2)
    }

    pub fn encoding(&self) -> String {
        self.bits
            .iter()
            .map(|b| if *b == 1 { '1' } else { '0' })
            .collect()
    }

    /// Index into `bits` of the `k`th leaf (1-based).
    fn leaf_pos(&self, k: usize) -> Result<usize> {
        let mut seen = 0usize;
        for (idx, b) in self.bits.iter().enumerate() {
            if *b == 0 {
                seen += 1;
                if seen == k {
                    return Ok(idx);
                }
            }
        }
        Err(Error::LeafIndex {
            index: k,
            count: self.leaf_count(),
        })
    }

    /// Split a leaf in two: add a caret to the `k`th leaf.
    pub fn add_caret(&self, k: usize) -> Result<Tree> {
        if k == 0 {
            return Err(Error::LeafIndex {
                index: k,
                count: self.leaf_count(),
            });
        }
        let pos = self.leaf_pos(k)?;
        let mut bits = Vec::with_capacity(self.bits.len() + 2);
        bits.extend_from_slice(&self.bits[..pos]);
        bits.extend_from_slice(&[1, 0, 0]);
        bits.extend_from_slice(&self.bits[pos + 1..]);
        Ok(Tree { bits })
    }

    /// Inverse of `add_caret`: leaves `i` and `i+1` must be siblings.
    pub fn remove_caret_pair(&self, i: usize) -> Result<Tree> {
        if i == 0 || i >= self.leaf_count() {
            return Err(Error::NotSiblings { index: i });
        }
        let pos = self.leaf_pos(i)?;
        let ok = pos >= 1
            && self.bits[pos - 1] == 1
            && pos + 1 < self.bits.len()
            && self.bits[pos + 1] == 0;
        if !ok {
            return Err(Error::NotSiblings { index: i });
        }
        let mut bits = Vec::with_capacity(self.bits.len() - 2);
        bits.extend_from_slice(&self.bits[..pos - 1]);
        bits.push(0);
        bits.extend_from_slice(&self.bits[pos + 2..]);
        Ok(Tree { bits })
    }

    /// Leaf indices `i` such that leaves `i`, `i+1` are children of a common
    /// caret. These are exactly the valid inputs to `remove_caret_pair`.
    pub fn caret_pairs(&self) -> Vec<usize> {
        let mut pairs = Vec::new();
        let mut leaf = 0usize;
        for idx in 0..self.bits.len() {
            if self.bits[idx] == 0 {
                leaf += 1;
            } else if idx + 2 < self.bits.len()
                && self.bits[idx + 1] == 0
                && self.bits[idx + 2] == 0
            {
                pairs.push(leaf + 1);
            }
        }
        pairs
    }

    /// Edge distance from the root to the rightmost leaf.
    pub fn right_depth(&self) -> usize {
        let mut depth = 0;
        let mut idx = 0;
        while self.bits[idx] == 1 {
            depth += 1;
            idx = self.subtree_end(idx + 1); // skip the left child
        }
        depth
    }

    /// End index (exclusive) of the subtree starting at `start`.
    fn subtree_end(&self, start: usize) -> usize {
        let mut balance: i64 = 1;
        let mut idx = start;
        while balance > 0 {
            if self.bits[idx] == 1 {
                balance += 1;
            } else {
                balance -= 1;
            }
            idx += 1;
        }
        idx
    }

    /// The two subtrees under the root, or `None` for the trivial tree.
    pub fn split_root(&self) -> Option<(Tree, Tree)> {
        if self.is_leaf() {
            return None;
        }
        let mid = self.subtree_end(1);
        let left = Tree {
            bits: self.bits[1..mid].to_vec(),
        };
        let right = Tree {
            bits: self.bits[mid..].to_vec(),
        };
        Some((left, right))
    }

    /// Smallest common expansion of `self` and `other`: contains both as
    /// rooted prefixes and is minimal with that property.
    pub fn common_refinement(&self, other: &Tree) -> Tree {
        if self.is_leaf() {
            return other.clone();
        }
        if other.is_leaf() {
            return self.clone();
        }
        let (al, ar) = self.split_root().expect("non-leaf");
        let (bl, br) = other.split_root().expect("non-leaf");
        Tree::caret(al.common_refinement(&bl), ar.common_refinement(&br))
    }

    /// Whether `self` is a rooted prefix of `target` (every caret of `self`
    /// is a caret of `target`).
    pub fn is_prefix_of(&self, target: &Tree) -> bool {
        self.common_refinement(target) == *target
    }

    /// First leaf of `self` (1-based) sitting on an internal vertex of
    /// `target`, or `None` when `self == target`. Requires `self` to be a
    /// rooted prefix of `target`.
    pub fn first_expansion_toward(&self, target: &Tree) -> Option<usize> {
        let mut si = 0usize;
        let mut ti = 0usize;
        let mut leaf = 0usize;
        while si < self.bits.len() {
            match (self.bits[si], target.bits[ti]) {
                (0, 0) => {
                    leaf += 1;
                    si += 1;
                    ti += 1;
                }
                (0, 1) => return Some(leaf + 1),
                (1, 1) => {
                    si += 1;
                    ti += 1;
                }
                _ => panic!("first_expansion_toward: not a rooted prefix"),
            }
        }
        None
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", self.encoding())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        Tree::parse(s).unwrap()
    }

    #[test]
    fn parse_rejects_bad_encodings() {
        for bad in ["", "1", "00", "100100", "10", "1000", "abc", "0100"] {
            assert!(Tree::parse(bad).is_err(), "{bad} should be invalid");
        }
        for good in ["0", "100", "11000", "10100", "1100100"] {
            assert_eq!(t(good).encoding(), good);
        }
    }

    #[test]
    fn add_caret_examples() {
        assert_eq!(t("0").add_caret(1).unwrap(), t("100"));
        assert_eq!(t("100").add_caret(1).unwrap(), t("11000")); // T1
        assert_eq!(t("100").add_caret(2).unwrap(), t("10100")); // T2
        assert!(t("100").add_caret(3).is_err());
        assert!(t("100").add_caret(0).is_err());
    }

    #[test]
    fn remove_caret_pair_examples() {
        assert_eq!(t("100").remove_caret_pair(1).unwrap(), t("0"));
        assert_eq!(t("11000").remove_caret_pair(1).unwrap(), t("100"));
        assert_eq!(t("10100").remove_caret_pair(2).unwrap(), t("100"));
        assert!(t("10100").remove_caret_pair(1).is_err());
        assert!(t("0").remove_caret_pair(1).is_err());
    }

    #[test]
    fn caret_pairs_examples() {
        assert_eq!(t("0").caret_pairs(), Vec::<usize>::new());
        assert_eq!(t("100").caret_pairs(), vec![1]);
        assert_eq!(t("1100100").caret_pairs(), vec![1, 3]);
        assert_eq!(t("11000").caret_pairs(), vec![1]);
        assert_eq!(t("10100").caret_pairs(), vec![2]);
    }

    #[test]
    fn right_depth_examples() {
        assert_eq!(t("0").right_depth(), 0);
        assert_eq!(t("11000").right_depth(), 1); // T1
        assert_eq!(t("10100").right_depth(), 2); // T2
        assert_eq!(t("100").right_depth(), 1);
    }

    #[test]
    fn common_refinement_examples() {
        assert_eq!(t("100").common_refinement(&t("0")), t("100"));
        assert_eq!(t("11000").common_refinement(&t("10100")), t("1100100"));
        for s in ["0", "100", "10100", "1100100"] {
            assert_eq!(t(s).common_refinement(&t(s)), t(s));
        }
    }

    #[test]
    fn expansion_walk() {
        let a = t("100");
        let m = t("1100100");
        assert_eq!(a.first_expansion_toward(&m), Some(1));
        assert_eq!(m.first_expansion_toward(&m), None);
        assert!(a.is_prefix_of(&m));
        assert!(!m.is_prefix_of(&a));
    }

    #[test]
    fn split_and_graft() {
        let (l, r) = t("11000").split_root().unwrap();
        assert_eq!(l, t("100"));
        assert_eq!(r, t("0"));
        assert_eq!(Tree::caret(t("100"), Tree::leaf()), t("11000"));
        assert!(t("0").split_root().is_none());
    }
}
