//! Permutations of `{1..n}`, used as the image of the braid projection and
//! as the middle component of V elements.
//!
//! All public indices are 1-based to match strand and leaf numbering.
//! `compose(a, b)` applies `b` first, matching the stacking convention for
//! braid words: the rightmost factor acts first on bottom positions.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>, // images[i] = image of i+1, values 1-based
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (1..=n).collect(),
        }
    }

    /// Build from the image list `[p(1), ..., p(n)]`, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Internal(format!("not a bijection: {images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    /// The transposition `(i, i+1)` in `S_n`.
    pub fn transposition(n: usize, i: usize) -> Perm {
        assert!(
            i >= 1 && i < n,
            "transposition ({i}, {}) out of range",
            i + 1
        );
        let mut p = Perm::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(
            self.n(),
            other.n(),
            "composing permutations of different degree"
        );
        Perm {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Whether this is a rotation `i ↦ i + c (mod n)`. These are the strand
    /// permutations allowed in the braided T subgroup.
    pub fn is_cyclic_rotation(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let c = self.images[0] + n - 1; // offset of position 1
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v == (i + c) % n + 1)
    }

    /// The permutation of `S_{n+1}` obtained by doubling position `k`: bottom
    /// slots `k`, `k+1` map to adjacent top slots `p(k)`, `p(k)+1`, all other
    /// slots follow `p` with the indices shifted past the doubled pair.
    pub fn doubled_at(&self, k: usize) -> Perm {
        let n = self.n();
        assert!(k >= 1 && k <= n, "doubled_at({k}) out of range for n={n}");
        let j = self.apply(k);
        let mut images = Vec::with_capacity(n + 1);
        for b in 1..=n + 1 {
            let img = if b == k {
                j
            } else if b == k + 1 {
                j + 1
            } else {
                let orig = if b < k { b } else { b - 1 };
                let t = self.apply(orig);
                if t < j {
                    t
                } else {
                    t + 1
                }
            };
            images.push(img);
        }
        Perm { images }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_rightmost_first() {
        // s1 then s2 read bottom-to-top: 1→2→3 cycle.
        let t1 = Perm::transposition(3, 1);
        let t2 = Perm::transposition(3, 2);
        let p = t1.compose(&t2);
        assert_eq!(p.images(), &[2, 3, 1]);
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn doubling() {
        // 3-cycle 1→2, 2→3, 3→1 doubled at 1 is the rotation by 1 in S_4.
        let p = Perm::from_images(vec![2, 3, 1]).unwrap();
        assert_eq!(p.doubled_at(1).images(), &[2, 3, 4, 1]);
        assert_eq!(p.doubled_at(3).images(), &[3, 4, 1, 2]);
        let id = Perm::identity(2);
        assert_eq!(id.doubled_at(2).images(), &[1, 2, 3]);
    }

    #[test]
    fn cyclic_rotations() {
        assert!(Perm::identity(4).is_cyclic_rotation());
        assert!(Perm::from_images(vec![3, 4, 1, 2])
            .unwrap()
            .is_cyclic_rotation());
        assert!(!Perm::from_images(vec![2, 1, 3])
            .unwrap()
            .is_cyclic_rotation());
        assert!(Perm::from_images(vec![2, 3, 1])
            .unwrap()
            .is_cyclic_rotation());
    }

    #[test]
    fn bijection_validation() {
        assert!(Perm::from_images(vec![1, 1]).is_err());
        assert!(Perm::from_images(vec![0]).is_err());
        assert!(Perm::from_images(vec![2, 3, 1]).is_ok());
    }
}
