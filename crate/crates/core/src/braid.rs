//! Braid words in `B_n` with a semantic equality oracle.
//!
//! Words are sequences of Artin generators `s_i^±1` with `1 ≤ i ≤ n−1`,
//! stored freely reduced. Letters read left to right correspond to top to
//! bottom in the strand diagram, so concatenation of words is the group
//! product and the rightmost letter acts first on bottom positions. The
//! crossing convention is that `s_k` crosses the `k`th strand (counting at
//! the bottom) under the `(k+1)`st.
//!
//! Equality is decided by the action on the free group `F_n`:
//! `s_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i`, all other generators
//! fixed. The action is faithful, so two words are equal in `B_n` iff the
//! images of all free generators agree after free reduction. Free words can
//! grow quickly, so the oracle carries a length budget and reports a
//! resource error when it is exceeded.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the length of any intermediate free word inside the
/// equality oracle.
pub const DEFAULT_BUDGET: usize = 4_000_000;

/// One Artin generator with its sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            positive: !self.positive,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.positive != other.positive
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}{}", self.index, if self.positive { "" } else { "'" })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>, // freely reduced
}

impl BraidWord {
    /// The empty word in `B_n`.
    pub fn identity(n: usize) -> BraidWord {
        assert!(n >= 1, "braid group needs at least one strand");
        BraidWord {
            n,
            letters: Vec::new(),
        }
    }

    /// The single generator `s_i^±1` in `B_n`.
    pub fn generator(n: usize, index: usize, positive: bool) -> Result<BraidWord> {
        if index == 0 || index + 1 > n {
            return Err(Error::GeneratorIndex { index, count: n });
        }
        Ok(BraidWord {
            n,
            letters: vec![Letter { index, positive }],
        })
    }

    pub fn from_letters(n: usize, letters: impl IntoIterator<Item = Letter>) -> Result<BraidWord> {
        assert!(n >= 1, "braid group needs at least one strand");
        let mut reduced: Vec<Letter> = Vec::new();
        for l in letters {
            if l.index == 0 || l.index + 1 > n {
                return Err(Error::GeneratorIndex {
                    index: l.index,
                    count: n,
                });
            }
            push_reduced(&mut reduced, l);
        }
        Ok(BraidWord {
            n,
            letters: reduced,
        })
    }

    /// Build from `(index, exponent)` pairs; exponents expand into runs.
    pub fn from_pairs(n: usize, pairs: &[(usize, i64)]) -> Result<BraidWord> {
        let letters = pairs.iter().flat_map(|&(index, exp)| {
            let positive = exp >= 0;
            (0..exp.unsigned_abs()).map(move |_| Letter { index, positive })
        });
        BraidWord::from_letters(n, letters)
    }

    /// Maximal runs of a single signed generator, as `(index, exponent)`.
    pub fn to_pairs(&self) -> Vec<(usize, i64)> {
        let mut pairs: Vec<(usize, i64)> = Vec::new();
        for l in &self.letters {
            let step = if l.positive { 1 } else { -1 };
            match pairs.last_mut() {
                Some((idx, exp)) if *idx == l.index && (*exp > 0) == l.positive => *exp += step,
                _ => pairs.push((l.index, step)),
            }
        }
        pairs
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group product: `self` stacked on top of `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Append `s_index^exp` at the bottom of the word.
    pub fn append_power(&self, index: usize, exp: i64) -> Result<BraidWord> {
        let tail = BraidWord::from_pairs(self.n, &[(index, exp)])?;
        self.concat(&tail)
    }

    /// The strand permutation: `rho(w)(k)` is the top position of the strand
    /// starting at bottom position `k`.
    pub fn rho(&self) -> Perm {
        let mut images: Vec<usize> = (1..=self.n).collect();
        for l in &self.letters {
            images.swap(l.index - 1, l.index);
        }
        Perm::from_images(images).expect("swaps preserve bijectivity")
    }

    pub fn is_pure(&self) -> bool {
        self.rho().is_identity()
    }

    /// Signed letter count; invariant under braid relations and cancellation.
    pub fn exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| if l.positive { 1 } else { -1 })
            .sum()
    }

    /// Signed crossing counts per pair of strands, indexed by bottom
    /// position. Entry `[a-1][b-1]` counts crossings between the strands
    /// starting at bottom positions `a` and `b`; for pure words this is twice
    /// the linking number, and the doubled count is stored to stay exact.
    pub fn linking_doubled(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.n]; self.n];
        let mut pos: Vec<usize> = (0..self.n).collect(); // slot -> strand (0-based)
        for l in self.letters.iter().rev() {
            let (a, b) = (pos[l.index - 1], pos[l.index]);
            let s = if l.positive { 1 } else { -1 };
            m[a][b] += s;
            m[b][a] += s;
            pos.swap(l.index - 1, l.index);
        }
        m
    }

    /// Bifurcate the strand starting at bottom position `k` into two parallel
    /// strands, giving a word over `n+1` strands.
    ///
    /// Letters are processed bottom to top while tracking the cable position
    /// `c`. A letter crossing the cable emits two consecutive letters of the
    /// same sign; the frozen emission order (in word order, topmost first) is
    /// `s_c s_{c+1}` when the cable moves right and `s_c s_{c−1}` when it
    /// moves left. This is the order under which `rho(cable(w, k))` is the
    /// doubling of `rho(w)` at `k` and the expansion identity holds.
    pub fn cable(&self, k: usize) -> Result<BraidWord> {
        if k == 0 || k > self.n {
            return Err(Error::StrandIndex {
                index: k,
                count: self.n,
            });
        }
        let mut c = k;
        let mut bottom_up: Vec<Letter> = Vec::with_capacity(self.letters.len() * 2);
        for l in self.letters.iter().rev() {
            let i = l.index;
            if i + 1 == c {
                bottom_up.push(Letter {
                    index: c - 1,
                    positive: l.positive,
                });
                bottom_up.push(Letter {
                    index: c,
                    positive: l.positive,
                });
                c -= 1;
            } else if i == c {
                bottom_up.push(Letter {
                    index: c + 1,
                    positive: l.positive,
                });
                bottom_up.push(Letter {
                    index: c,
                    positive: l.positive,
                });
                c += 1;
            } else if i < c {
                bottom_up.push(*l);
            } else {
                bottom_up.push(Letter {
                    index: i + 1,
                    positive: l.positive,
                });
            }
        }
        bottom_up.reverse();
        BraidWord::from_letters(self.n + 1, bottom_up)
    }

    /// Remove the strand starting at bottom position `k`, dropping every
    /// crossing it participates in and reindexing the rest.
    pub fn delete_strand(&self, k: usize) -> Result<BraidWord> {
        if self.n == 1 {
            return Err(Error::SingleStrand);
        }
        if k == 0 || k > self.n {
            return Err(Error::StrandIndex {
                index: k,
                count: self.n,
            });
        }
        let mut d = k;
        let mut bottom_up: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in self.letters.iter().rev() {
            let i = l.index;
            if i == d {
                d += 1;
            } else if i + 1 == d {
                d -= 1;
            } else if i > d {
                bottom_up.push(Letter {
                    index: i - 1,
                    positive: l.positive,
                });
            } else {
                bottom_up.push(*l);
            }
        }
        bottom_up.reverse();
        BraidWord::from_letters(self.n - 1, bottom_up)
    }

    /// Reread the word in `B_m` for `m ≥ n` (appended strands are unbraided).
    pub fn embed(&self, m: usize) -> Result<BraidWord> {
        if m < self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: m,
            });
        }
        Ok(BraidWord {
            n: m,
            letters: self.letters.clone(),
        })
    }

    /// Whether the word lies in `B̂_n`, the copy of `B_{n−1}` braiding only
    /// the first `n−1` strands: the last strand must come back to its place
    /// and the word must equal its own last-strand deletion.
    pub fn is_hat(&self) -> Result<bool> {
        if self.n == 1 {
            return Ok(true);
        }
        if self.rho().apply(self.n) != self.n {
            return Ok(false);
        }
        let stripped = self.delete_strand(self.n)?.embed(self.n)?;
        self.equals(&stripped)
    }

    /// A positive word whose strand permutation is `p`, built by a bubble
    /// sorting network.
    pub fn shuffle(p: &Perm) -> BraidWord {
        let n = p.n();
        let target: Vec<usize> = p.images().to_vec();
        let mut state: Vec<usize> = (1..=n).collect();
        let mut letters = Vec::new();
        for pos in 0..n {
            let q = state[pos..]
                .iter()
                .position(|&v| v == target[pos])
                .expect("target is a bijection")
                + pos;
            for j in (pos..q).rev() {
                state.swap(j, j + 1);
                letters.push(Letter {
                    index: j + 1,
                    positive: true,
                });
            }
        }
        BraidWord::from_letters(n, letters).expect("indices in range by construction")
    }

    /// Decide equality in `B_n` with the default free-word budget.
    pub fn equals(&self, other: &BraidWord) -> Result<bool> {
        self.equals_budgeted(other, DEFAULT_BUDGET)
    }

    /// Decide equality in `B_n`: apply the free-group action of both words to
    /// every generator and compare the freely reduced images.
    pub fn equals_budgeted(&self, other: &BraidWord, budget: usize) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.letters == other.letters {
            return Ok(true);
        }
        for g in 1..=self.n {
            let a = self.artin_image(g, budget)?;
            let b = other.artin_image(g, budget)?;
            if a != b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The image of the free generator `x_g` under the action of this word.
    /// Symbols are signed generator indices; the result is freely reduced.
    fn artin_image(&self, g: usize, budget: usize) -> Result<Vec<i32>> {
        let mut word: Vec<i32> = vec![g as i32];
        let mut next: Vec<i32> = Vec::new();
        for l in self.letters.iter().rev() {
            next.clear();
            let i = l.index as i32;
            for &sym in &word {
                let gen = sym.abs();
                if l.positive {
                    if gen == i {
                        if sym > 0 {
                            push_free(&mut next, &[i, i + 1, -i]);
                        } else {
                            push_free(&mut next, &[i, -(i + 1), -i]);
                        }
                    } else if gen == i + 1 {
                        push_free(&mut next, &[sym.signum() * i]);
                    } else {
                        push_free(&mut next, &[sym]);
                    }
                } else if gen == i {
                    push_free(&mut next, &[sym.signum() * (i + 1)]);
                } else if gen == i + 1 {
                    if sym > 0 {
                        push_free(&mut next, &[-(i + 1), i, i + 1]);
                    } else {
                        push_free(&mut next, &[-(i + 1), -i, i + 1]);
                    }
                } else {
                    push_free(&mut next, &[sym]);
                }
            }
            if next.len() > budget {
                return Err(Error::Budget { budget });
            }
            std::mem::swap(&mut word, &mut next);
        }
        Ok(word)
    }
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    match letters.last() {
        Some(last) if last.cancels(l) => {
            letters.pop();
        }
        _ => letters.push(l),
    }
}

fn push_free(word: &mut Vec<i32>, symbols: &[i32]) {
    for &s in symbols {
        match word.last() {
            Some(&last) if last == -s => {
                word.pop();
            }
            _ => word.push(s),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, (index, exp)) in self.to_pairs().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if exp == 1 {
                write!(f, "s{index}")?;
            } else {
                write!(f, "s{index}^{exp}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord[n={}, {}]", self.n, self)
    }
}
