//! The group kernel: rV elements as representative triples.
//!
//! An [`Element`] is a triple `[T₋, β(m₁,…,m_n), T₊]` of a range tree, a
//! ribbon braid and a domain tree, all of matching size. The `k`th expansion
//! adds a caret at leaf `k` of `T₊` and at leaf `ρ(β)(k)` of `T₋`, cables the
//! `k`th strand, appends `s_k^{m_k}` at the bottom of the braid and
//! duplicates the `k`th twist. Expansion generates the equivalence relation;
//! reduction (its inverse) terminates and is confluent on this model, so
//! iterated reduction yields a normal form and equality is decidable.
//!
//! Elements with all twists zero form bV; membership in the other named
//! subgroups is decided on normal forms. Multiplication expands both factors
//! to a common middle tree and concatenates the ribbon braids.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::ribbon::RibbonBraid;
use crate::tree::Tree;
use crate::vgroup::VElement;

/// The subgroups of rV distinguished by the calculator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubgroupTag {
    /// Thompson's group F: trivial braid, no twists.
    F,
    /// The braided Thompson group: no twists.
    BV,
    /// Pure braided Thompson group: pure braid, no twists.
    BF,
    /// Kernel of the projection to V: symmetric trees, pure braid.
    BP,
    /// Braided T: the strand permutation is a cyclic rotation.
    BT,
    /// Brin's b̂V: the last strand does not braid.
    BVhat,
    /// The copy of bV inside b̂V with both trees of right depth at most 1.
    BVhat1,
    /// The kernel of χ₁ in b̂V.
    Dhat,
}

impl fmt::Display for SubgroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubgroupTag::F => "F",
            SubgroupTag::BV => "bV",
            SubgroupTag::BF => "bF",
            SubgroupTag::BP => "bP",
            SubgroupTag::BT => "bT",
            SubgroupTag::BVhat => "bVhat",
            SubgroupTag::BVhat1 => "bVhat1",
            SubgroupTag::Dhat => "Dhat",
        })
    }
}

impl FromStr for SubgroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<SubgroupTag> {
        Ok(match s {
            "F" => SubgroupTag::F,
            "bV" => SubgroupTag::BV,
            "bF" => SubgroupTag::BF,
            "bP" => SubgroupTag::BP,
            "bT" => SubgroupTag::BT,
            "bVhat" => SubgroupTag::BVhat,
            "bVhat1" => SubgroupTag::BVhat1,
            "Dhat" => SubgroupTag::Dhat,
            _ => return Err(Error::UnknownTag(s.to_string())),
        })
    }
}

/// The named elements used throughout the constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedElement {
    /// `x₀ = [T₂, 1, T₁]`, the usual first generator of F.
    X0,
    /// The helper triple `[T₁, 1, T₁]` (the identity, kept for scripting).
    T1Caret,
    /// `[T₂, s₁, T₂]`: conjugation by it commutes b̂V(1) off itself.
    GComm,
    /// `ψ = [·, 1(1), ·]`, the single half-twist.
    Psi,
    /// `[·, 1(2), ·]`, the full twist generating the center of rV.
    ZCenter,
    /// `t₁ = [T₁, s₁⁻¹s₂⁻¹(0,0,−2), T₂]`.
    T1,
    /// `t₂ = ψ t₁ ψ⁻¹`.
    T2,
    /// `h₁ = t₁ t₂ t₁`.
    H1,
    /// `h₂ = ψ h₁⁻¹ ψ⁻¹`.
    H2,
}

impl NamedElement {
    pub const ALL: [NamedElement; 9] = [
        NamedElement::X0,
        NamedElement::T1Caret,
        NamedElement::GComm,
        NamedElement::Psi,
        NamedElement::ZCenter,
        NamedElement::T1,
        NamedElement::T2,
        NamedElement::H1,
        NamedElement::H2,
    ];
}

impl fmt::Display for NamedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedElement::X0 => "x0",
            NamedElement::T1Caret => "t1caret",
            NamedElement::GComm => "g_comm",
            NamedElement::Psi => "psi",
            NamedElement::ZCenter => "z_center",
            NamedElement::T1 => "t1",
            NamedElement::T2 => "t2",
            NamedElement::H1 => "h1",
            NamedElement::H2 => "h2",
        })
    }
}

impl FromStr for NamedElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<NamedElement> {
        Ok(match s {
            "x0" => NamedElement::X0,
            "t1caret" => NamedElement::T1Caret,
            "g_comm" => NamedElement::GComm,
            "psi" => NamedElement::Psi,
            "z_center" => NamedElement::ZCenter,
            "t1" => NamedElement::T1,
            "t2" => NamedElement::T2,
            "h1" => NamedElement::H1,
            "h2" => NamedElement::H2,
            _ => return Err(Error::UnknownNamed(s.to_string())),
        })
    }
}

/// A representative triple `[T₋, β(m), T₊]` of an rV element.
#[derive(Clone)]
pub struct Element {
    left: Tree,
    rb: RibbonBraid,
    right: Tree,
    reduced: bool,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.left == other.left && self.rb == other.rb && self.right == other.right
    }
}

impl Eq for Element {}

impl Element {
    pub fn new(left: Tree, rb: RibbonBraid, right: Tree) -> Result<Element> {
        let n = rb.n();
        if left.leaf_count() != n || right.leaf_count() != n {
            return Err(Error::Arity(format!(
                "trees with {} and {} leaves against a ribbon braid on {} strands",
                left.leaf_count(),
                right.leaf_count(),
                n
            )));
        }
        Ok(Element {
            left,
            rb,
            right,
            reduced: false,
        })
    }

    /// The canonical identity `[·, 1(0), ·]`.
    pub fn identity() -> Element {
        Element {
            left: Tree::leaf(),
            rb: RibbonBraid::identity(1),
            right: Tree::leaf(),
            reduced: true,
        }
    }

    pub fn left(&self) -> &Tree {
        &self.left
    }

    pub fn right(&self) -> &Tree {
        &self.right
    }

    pub fn ribbon(&self) -> &RibbonBraid {
        &self.rb
    }

    /// Strand count of this representative.
    pub fn n(&self) -> usize {
        self.rb.n()
    }

    /// The `k`th expansion of this representative.
    pub fn expand(&self, k: usize) -> Result<Element> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(Error::LeafIndex { index: k, count: n });
        }
        let m_k = self.rb.twists()[k - 1];
        let j = self.rb.braid().rho().apply(k);
        let braid = self.rb.braid().cable(k)?.append_power(k, m_k)?;
        let mut twists = self.rb.twists().to_vec();
        twists.insert(k, m_k);
        Element::new(
            self.left.add_caret(j)?,
            RibbonBraid::new(braid, twists)?,
            self.right.add_caret(k)?,
        )
    }

    /// Leaf indices of the right tree at which this representative is the
    /// expansion of a smaller one. A site `i` qualifies when the twists at
    /// `i, i+1` agree, stripping `s_i^{m_i}` from the bottom leaves a braid
    /// that carries `i, i+1` to adjacent positions `j, j+1` with `j` a caret
    /// pair of the left tree, and the stripped braid is the `i`th cable of
    /// its own strand deletion.
    pub fn reduction_sites(&self) -> Result<Vec<usize>> {
        let mut sites = Vec::new();
        let left_pairs = self.left.caret_pairs();
        for i in self.right.caret_pairs() {
            let mu = self.rb.twists()[i - 1];
            if self.rb.twists()[i] != mu {
                continue;
            }
            let stripped = self.rb.braid().append_power(i, -mu)?;
            let sigma = stripped.rho();
            let j = sigma.apply(i);
            if sigma.apply(i + 1) != j + 1 || !left_pairs.contains(&j) {
                continue;
            }
            let core = stripped.delete_strand(i + 1)?;
            if stripped.equals(&core.cable(i)?)? {
                sites.push(i);
            }
        }
        Ok(sites)
    }

    /// Undo the expansion at site `i`; the site must qualify.
    pub fn reduce_at(&self, i: usize) -> Result<Element> {
        if !self.reduction_sites()?.contains(&i) {
            return Err(Error::NotSiblings { index: i });
        }
        let mu = self.rb.twists()[i - 1];
        let stripped = self.rb.braid().append_power(i, -mu)?;
        let j = stripped.rho().apply(i);
        let core = stripped.delete_strand(i + 1)?;
        let mut twists = self.rb.twists().to_vec();
        twists.remove(i);
        Element::new(
            self.left.remove_caret_pair(j)?,
            RibbonBraid::new(core, twists)?,
            self.right.remove_caret_pair(i)?,
        )
    }

    /// One reduction at the smallest qualifying site, or `None` when the
    /// representative is irreducible.
    pub fn reduce_step(&self) -> Result<Option<Element>> {
        match self.reduction_sites()?.first() {
            Some(&i) => Ok(Some(self.reduce_at(i)?)),
            None => Ok(None),
        }
    }

    /// The normal form: reduce at the smallest site until irreducible.
    pub fn normalize(&self) -> Result<Element> {
        if self.reduced {
            return Ok(self.clone());
        }
        let mut cur = self.clone();
        while let Some(next) = cur.reduce_step()? {
            cur = next;
        }
        cur.reduced = true;
        Ok(cur)
    }

    /// Group product. Both factors are expanded to the common refinement of
    /// `self.right` and `other.left` (driving the right factor's expansions
    /// through `ρ(β)⁻¹` so its left tree grows at the required leaves), the
    /// ribbon braids are concatenated, and the result is normalized.
    pub fn mul(&self, other: &Element) -> Result<Element> {
        let mut a = self.clone();
        let mut b = other.clone();
        let middle = a.right.common_refinement(&b.left);
        while let Some(k) = a.right.first_expansion_toward(&middle) {
            a = a.expand(k)?;
        }
        while let Some(j) = b.left.first_expansion_toward(&middle) {
            let k = b.rb.braid().rho().inverse().apply(j);
            b = b.expand(k)?;
        }
        debug_assert_eq!(a.right, b.left);
        Element::new(a.left, a.rb.mul(&b.rb)?, b.right)?.normalize()
    }

    pub fn inverse(&self) -> Element {
        Element {
            left: self.right.clone(),
            rb: self.rb.inverse(),
            right: self.left.clone(),
            reduced: false,
        }
    }

    pub fn pow(&self, e: i64) -> Result<Element> {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Element::identity();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Decidable equality: normalize both sides, compare trees and twists
    /// syntactically and braids semantically.
    pub fn equals(&self, other: &Element) -> Result<bool> {
        let a = self.normalize()?;
        let b = other.normalize()?;
        Ok(a.left == b.left
            && a.right == b.right
            && a.rb.twists() == b.rb.twists()
            && a.rb.braid().equals(b.rb.braid())?)
    }

    pub fn is_identity(&self) -> Result<bool> {
        let nf = self.normalize()?;
        Ok(nf.left.is_leaf() && nf.right.is_leaf() && nf.rb.is_untwisted())
    }

    /// Image under the projection bV → V (forgetting the braiding).
    pub fn project_to_v(&self) -> Result<VElement> {
        let nf = self.normalize()?;
        if !nf.rb.is_untwisted() {
            return Err(Error::NotIn(SubgroupTag::BV));
        }
        Ok(VElement::new(nf.left.clone(), nf.rb.braid().rho(), nf.right.clone())?.reduce())
    }

    /// Subgroup membership, decided on the normal form.
    pub fn member(&self, tag: SubgroupTag) -> Result<bool> {
        let nf = self.normalize()?;
        let in_bv = nf.rb.is_untwisted();
        Ok(match tag {
            SubgroupTag::BV => in_bv,
            SubgroupTag::F => in_bv && nf.rb.braid().is_empty(),
            SubgroupTag::BF => in_bv && nf.rb.braid().is_pure(),
            SubgroupTag::BP => {
                in_bv
                    && VElement::new(nf.left.clone(), nf.rb.braid().rho(), nf.right.clone())?
                        .is_identity()
            }
            SubgroupTag::BT => in_bv && nf.rb.braid().rho().is_cyclic_rotation(),
            SubgroupTag::BVhat => in_bv && nf.rb.braid().is_hat()?,
            SubgroupTag::BVhat1 => {
                in_bv
                    && nf.rb.braid().is_hat()?
                    && nf.left.right_depth() <= 1
                    && nf.right.right_depth() <= 1
            }
            SubgroupTag::Dhat => {
                in_bv && nf.rb.braid().is_hat()? && nf.left.right_depth() == nf.right.right_depth()
            }
        })
    }

    /// The homomorphism χ₁: b̂V → Z, the right depth of the range tree minus
    /// the right depth of the domain tree. Well defined on any
    /// representative because expansions preserve the difference.
    pub fn chi1(&self) -> Result<i64> {
        if !self.member(SubgroupTag::BVhat)? {
            return Err(Error::NotIn(SubgroupTag::BVhat));
        }
        Ok(self.left.right_depth() as i64 - self.right.right_depth() as i64)
    }

    /// χ₀ on the ψ-conjugate copy of b̂V: sends `ψ⁻¹ g ψ` to `χ₁(g)`.
    pub fn chi0(&self) -> Result<i64> {
        let psi = Element::named(NamedElement::Psi);
        let conj = psi.mul(self)?.mul(&psi.inverse())?;
        if !conj.member(SubgroupTag::BVhat)? {
            return Err(Error::NotInPsiConjugate);
        }
        conj.chi1()
    }

    /// The isomorphism bV → b̂V(1): hang each tree on the left leaf of a new
    /// root caret and append one unbraided strand on the right.
    pub fn embed_hat1(&self) -> Result<Element> {
        if !self.member(SubgroupTag::BV)? {
            return Err(Error::NotIn(SubgroupTag::BV));
        }
        let nf = self.normalize()?;
        let n = nf.n();
        let mut twists = nf.rb.twists().to_vec();
        twists.push(0);
        Element::new(
            Tree::caret(nf.left.clone(), Tree::leaf()),
            RibbonBraid::new(nf.rb.braid().embed(n + 1)?, twists)?,
            Tree::caret(nf.right.clone(), Tree::leaf()),
        )?
        .normalize()
    }

    /// Inverse of [`Element::embed_hat1`] on b̂V(1): strip the root carets and the
    /// last strand.
    fn strip_hat1(&self) -> Result<Element> {
        if !self.member(SubgroupTag::BVhat1)? {
            return Err(Error::NotIn(SubgroupTag::BVhat1));
        }
        let nf = self.normalize()?;
        if nf.left.is_leaf() {
            return Ok(Element::identity());
        }
        let (ll, lr) = nf.left.split_root().expect("non-leaf");
        let (rl, rr) = nf.right.split_root().expect("non-leaf");
        if !lr.is_leaf() || !rr.is_leaf() {
            return Err(Error::Internal("right depth 1 normal form expected".into()));
        }
        let braid = nf.rb.braid().delete_strand(nf.n())?;
        Element::new(ll, RibbonBraid::from_braid(braid), rl)?.normalize()
    }

    /// The named elements, as normalized triples.
    pub fn named(tag: NamedElement) -> Element {
        fn make(left: &str, pairs: &[(usize, i64)], twists: &[i64], right: &str) -> Element {
            let braid = BraidWord::from_pairs(twists.len(), pairs).expect("valid word");
            Element::new(
                Tree::parse(left).expect("valid tree"),
                RibbonBraid::new(braid, twists.to_vec()).expect("matching arity"),
                Tree::parse(right).expect("valid tree"),
            )
            .expect("matching arity")
            .normalize()
            .expect("named elements are tiny")
        }
        let conj = |a: &Element, b: &Element| {
            a.mul(b)
                .and_then(|ab| ab.mul(&a.inverse()))
                .expect("named elements are tiny")
        };
        match tag {
            NamedElement::X0 => make("10100", &[], &[0, 0, 0], "11000"),
            NamedElement::T1Caret => make("11000", &[], &[0, 0, 0], "11000"),
            NamedElement::GComm => make("10100", &[(1, 1)], &[0, 0, 0], "10100"),
            NamedElement::Psi => make("0", &[], &[1], "0"),
            NamedElement::ZCenter => make("0", &[], &[2], "0"),
            NamedElement::T1 => make("11000", &[(1, -1), (2, -1)], &[0, 0, -2], "10100"),
            NamedElement::T2 => conj(
                &Element::named(NamedElement::Psi),
                &Element::named(NamedElement::T1),
            ),
            NamedElement::H1 => {
                let t1 = Element::named(NamedElement::T1);
                let t2 = Element::named(NamedElement::T2);
                t1.mul(&t2)
                    .and_then(|p| p.mul(&t1))
                    .expect("named elements are tiny")
            }
            NamedElement::H2 => conj(
                &Element::named(NamedElement::Psi),
                &Element::named(NamedElement::H1).inverse(),
            ),
        }
    }

    /// Write `g ∈ b̂V` as `x₀^k · embed_hat1(h) · x₀^{−k} · x₀^c` with
    /// `c = χ₁(g)` and `h ∈ bV`. The decomposition is recomposed and checked
    /// before returning.
    pub fn hnn_decompose(&self) -> Result<(i64, usize, Element)> {
        let c = self.chi1()?;
        let x0 = Element::named(NamedElement::X0);
        let d = self.mul(&x0.pow(-c)?)?;
        let k = d.normalize()?.left.right_depth().saturating_sub(1);
        let conj = x0.pow(-(k as i64))?.mul(&d)?.mul(&x0.pow(k as i64)?)?;
        let h = conj.strip_hat1()?;
        let recomposed = x0
            .pow(k as i64)?
            .mul(&h.embed_hat1()?)?
            .mul(&x0.pow(-(k as i64))?)?
            .mul(&x0.pow(c)?)?;
        if !self.equals(&recomposed)? {
            return Err(Error::Internal("HNN recomposition failed".into()));
        }
        Ok((c, k, h))
    }

    /// The left part of an element of b̂V ∩ bP: keep the subtree under the
    /// left child of the root and delete every strand under the right child.
    pub fn left_part(&self) -> Result<Element> {
        if !self.member(SubgroupTag::BVhat)? {
            return Err(Error::NotIn(SubgroupTag::BVhat));
        }
        if !self.member(SubgroupTag::BP)? {
            return Err(Error::NotIn(SubgroupTag::BP));
        }
        let nf = self.normalize()?;
        if nf.left != nf.right {
            return Err(Error::Internal("bP normal form must be symmetric".into()));
        }
        if nf.left.is_leaf() {
            return Ok(Element::identity());
        }
        let (sub, _) = nf.left.split_root().expect("non-leaf");
        let keep = sub.leaf_count();
        let mut braid = nf.rb.braid().clone();
        for _ in keep..nf.n() {
            braid = braid.delete_strand(braid.n())?;
        }
        Element::new(sub.clone(), RibbonBraid::from_braid(braid), sub)?.normalize()
    }

    /// A section of [`Element::left_part`]: hang the symmetric tree on a new root
    /// caret and append an unbraided strand. Lands in b̂V ∩ bP.
    pub fn bp_section(&self) -> Result<Element> {
        if !self.member(SubgroupTag::BP)? {
            return Err(Error::NotIn(SubgroupTag::BP));
        }
        self.embed_hat1()
    }

    /// Split into a braid factor and two twist factors over the domain tree:
    /// `[T₋,β,T₊] · [T₊,(m₁,0,…,0),T₊] · [T₊,(0,m₂,…,m_n),T₊]`.
    pub fn three_factor(&self) -> Result<(Element, Element, Element)> {
        let nf = self.normalize()?;
        let n = nf.n();
        let mut head = vec![0i64; n];
        head[0] = nf.rb.twists()[0];
        let mut tail = nf.rb.twists().to_vec();
        tail[0] = 0;
        let f1 = Element::new(
            nf.left.clone(),
            RibbonBraid::from_braid(nf.rb.braid().clone()),
            nf.right.clone(),
        )?
        .normalize()?;
        let f2 = Element::new(
            nf.right.clone(),
            RibbonBraid::from_twists(head),
            nf.right.clone(),
        )?
        .normalize()?;
        let f3 = Element::new(
            nf.right.clone(),
            RibbonBraid::from_twists(tail),
            nf.right.clone(),
        )?
        .normalize()?;
        Ok((f1, f2, f3))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {} | {}]", self.left, self.rb, self.right)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    left: String,
    word: Vec<(usize, i64)>,
    twists: Vec<i64>,
    right: String,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            left: self.left.encoding(),
            word: self.rb.braid().to_pairs(),
            twists: self.rb.twists().to_vec(),
            right: self.right.encoding(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(deserializer)?;
        let left = Tree::parse(&repr.left).map_err(D::Error::custom)?;
        let right = Tree::parse(&repr.right).map_err(D::Error::custom)?;
        let braid = BraidWord::from_pairs(repr.twists.len().max(1), &repr.word)
            .map_err(D::Error::custom)?;
        let rb = RibbonBraid::new(braid, repr.twists).map_err(D::Error::custom)?;
        Element::new(left, rb, right).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        Tree::parse(s).unwrap()
    }

    fn el(left: &str, pairs: &[(usize, i64)], twists: &[i64], right: &str) -> Element {
        let braid = BraidWord::from_pairs(twists.len(), pairs).unwrap();
        Element::new(
            t(left),
            RibbonBraid::new(braid, twists.to_vec()).unwrap(),
            t(right),
        )
        .unwrap()
    }

    #[test]
    fn expansion_examples() {
        // A single twisted strand expands into a crossing with two twists.
        let psi = el("0", &[], &[1], "0");
        let expanded = psi.expand(1).unwrap();
        assert_eq!(expanded, el("100", &[(1, 1)], &[1, 1], "100"));
        // The identity expands without acquiring letters or twists.
        let id2 = Element::identity().expand(1).unwrap();
        assert_eq!(id2, el("100", &[], &[0, 0], "100"));
        assert!(Element::identity().expand(2).is_err());
    }

    #[test]
    fn expansion_preserves_the_element() {
        let x0 = Element::named(NamedElement::X0);
        for k in 1..=3 {
            assert!(x0.expand(k).unwrap().equals(&x0).unwrap());
        }
        let t1 = Element::named(NamedElement::T1);
        for k in 1..=3 {
            assert!(t1.expand(k).unwrap().equals(&t1).unwrap());
        }
    }

    #[test]
    fn reduction_examples() {
        // The twist expansion read backwards.
        let g = el("100", &[(1, 1)], &[1, 1], "100");
        let red = g.reduce_step().unwrap().unwrap();
        assert_eq!(red, el("0", &[], &[1], "0"));
        // An expanded identity reduces to the identity triple.
        let h = el("100", &[], &[0, 0], "100");
        assert_eq!(h.normalize().unwrap(), Element::identity());
        // x0 is irreducible.
        assert!(Element::named(NamedElement::X0)
            .reduce_step()
            .unwrap()
            .is_none());
    }

    #[test]
    fn normalize_is_idempotent_and_undoes_expansion() {
        let x0 = Element::named(NamedElement::X0);
        let e = x0.expand(1).unwrap().expand(2).unwrap();
        assert_eq!(e.normalize().unwrap(), x0);
        let id_over_tree = el("10100", &[], &[0, 0, 0], "10100");
        assert_eq!(id_over_tree.normalize().unwrap(), Element::identity());
    }

    #[test]
    fn fig5_identity() {
        let lhs = el("0", &[], &[1], "0");
        let rhs = el("100", &[(1, 1)], &[1, 1], "100");
        assert!(lhs.equals(&rhs).unwrap());
        assert_eq!(rhs.normalize().unwrap(), lhs);
    }

    #[test]
    fn group_laws_on_named_elements() {
        let x0 = Element::named(NamedElement::X0);
        assert!(x0.mul(&x0.inverse()).unwrap().is_identity().unwrap());
        assert!(x0.inverse().mul(&x0).unwrap().is_identity().unwrap());
        assert!(Element::identity().mul(&x0).unwrap().equals(&x0).unwrap());
        assert!(!x0.equals(&x0.inverse()).unwrap());
        let g = Element::named(NamedElement::GComm);
        let prod = x0.mul(&g).unwrap();
        assert!(prod.mul(&g.inverse()).unwrap().equals(&x0).unwrap());
    }

    #[test]
    fn named_element_triples() {
        assert_eq!(
            Element::named(NamedElement::X0),
            el("10100", &[], &[0, 0, 0], "11000")
        );
        assert_eq!(
            Element::named(NamedElement::GComm),
            el("10100", &[(1, 1)], &[0, 0, 0], "10100")
        );
        assert_eq!(
            Element::named(NamedElement::T1),
            el("11000", &[(1, -1), (2, -1)], &[0, 0, -2], "10100")
        );
        assert_eq!(Element::named(NamedElement::Psi), el("0", &[], &[1], "0"));
        assert_eq!(
            Element::named(NamedElement::ZCenter),
            el("0", &[], &[2], "0")
        );
        assert!(Element::named(NamedElement::T1Caret).is_identity().unwrap());
        assert!(!Element::named(NamedElement::H1).is_identity().unwrap());
    }

    #[test]
    fn chi1_examples() {
        assert_eq!(Element::named(NamedElement::X0).chi1().unwrap(), 1);
        assert_eq!(Element::identity().chi1().unwrap(), 0);
        assert_eq!(Element::named(NamedElement::GComm).chi1().unwrap(), 0);
        // Twisted elements are outside bV, hence outside b̂V.
        assert!(Element::named(NamedElement::Psi).chi1().is_err());
        let x0 = Element::named(NamedElement::X0);
        assert_eq!(x0.mul(&x0).unwrap().chi1().unwrap(), 2);
    }

    #[test]
    fn chi0_examples() {
        let psi = Element::named(NamedElement::Psi);
        let x0 = Element::named(NamedElement::X0);
        let h = psi.inverse().mul(&x0).unwrap().mul(&psi).unwrap();
        assert_eq!(h.chi0().unwrap(), 1);
        assert_eq!(Element::identity().chi0().unwrap(), 0);
        let g = Element::named(NamedElement::GComm);
        let hg = psi.inverse().mul(&g).unwrap().mul(&psi).unwrap();
        assert_eq!(hg.chi0().unwrap(), 0);
    }

    #[test]
    fn membership_examples() {
        let x0 = Element::named(NamedElement::X0);
        assert!(x0.member(SubgroupTag::BVhat).unwrap());
        assert!(!x0.member(SubgroupTag::Dhat).unwrap());
        assert!(x0.member(SubgroupTag::F).unwrap());
        let sym = el("100", &[(1, 2)], &[0, 0], "100");
        assert!(sym.member(SubgroupTag::BP).unwrap());
        assert!(sym.member(SubgroupTag::BF).unwrap());
        let g = Element::named(NamedElement::GComm);
        assert!(g.member(SubgroupTag::Dhat).unwrap());
        assert!(!g.member(SubgroupTag::BP).unwrap());
        assert!(!g.member(SubgroupTag::F).unwrap());
        let psi = Element::named(NamedElement::Psi);
        assert!(!psi.member(SubgroupTag::BV).unwrap());
        for tag in [
            SubgroupTag::F,
            SubgroupTag::BV,
            SubgroupTag::BF,
            SubgroupTag::BP,
            SubgroupTag::BT,
            SubgroupTag::BVhat,
            SubgroupTag::BVhat1,
            SubgroupTag::Dhat,
        ] {
            assert!(
                Element::identity().member(tag).unwrap(),
                "identity in {tag}"
            );
        }
    }

    #[test]
    fn projection_examples() {
        let x0 = Element::named(NamedElement::X0);
        let v = x0.project_to_v().unwrap();
        assert_eq!(v.left().encoding(), "10100");
        assert!(v.perm().is_identity());
        assert_eq!(v.right().encoding(), "11000");
        assert!(Element::identity().project_to_v().unwrap().is_identity());
        // A symmetric pure triple projects to the V identity.
        let sym = el("100", &[(1, 2)], &[0, 0], "100");
        assert!(sym.project_to_v().unwrap().is_identity());
        assert!(Element::named(NamedElement::Psi).project_to_v().is_err());
    }

    #[test]
    fn embed_hat1_examples() {
        assert!(Element::identity()
            .embed_hat1()
            .unwrap()
            .is_identity()
            .unwrap());
        let g = el("100", &[(1, 1)], &[0, 0], "100");
        let e = g.embed_hat1().unwrap();
        assert_eq!(e, el("11000", &[(1, 1)], &[0, 0, 0], "11000"));
        assert!(e.member(SubgroupTag::BVhat1).unwrap());
        assert!(Element::named(NamedElement::Psi).embed_hat1().is_err());
        // Homomorphism spot check.
        let a = el("100", &[(1, 1)], &[0, 0], "100");
        let b = el("10100", &[(2, -1)], &[0, 0, 0], "11000");
        let lhs = a.mul(&b).unwrap().embed_hat1().unwrap();
        let rhs = a
            .embed_hat1()
            .unwrap()
            .mul(&b.embed_hat1().unwrap())
            .unwrap();
        assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn hnn_examples() {
        let x0 = Element::named(NamedElement::X0);
        let (c, k, h) = x0.hnn_decompose().unwrap();
        assert_eq!((c, k), (1, 0));
        assert!(h.is_identity().unwrap());
        let (c, k, h) = Element::identity().hnn_decompose().unwrap();
        assert_eq!((c, k), (0, 0));
        assert!(h.is_identity().unwrap());
        let g = Element::named(NamedElement::GComm);
        let (c, _k, _h) = g.hnn_decompose().unwrap();
        assert_eq!(c, 0);
        assert!(Element::named(NamedElement::Psi).hnn_decompose().is_err());
    }

    #[test]
    fn left_part_examples() {
        assert!(Element::identity()
            .left_part()
            .unwrap()
            .is_identity()
            .unwrap());
        let g = el("11000", &[(1, 2)], &[0, 0, 0], "11000");
        assert!(g.member(SubgroupTag::BVhat).unwrap());
        assert!(g.member(SubgroupTag::BP).unwrap());
        let lp = g.left_part().unwrap();
        assert!(lp.equals(&el("100", &[(1, 2)], &[0, 0], "100")).unwrap());
        // Not in bP: the braid is not pure.
        assert!(Element::named(NamedElement::GComm).left_part().is_err());
    }

    #[test]
    fn bp_section_examples() {
        assert!(Element::identity()
            .bp_section()
            .unwrap()
            .is_identity()
            .unwrap());
        let p = el("100", &[(1, 2)], &[0, 0], "100");
        let s = p.bp_section().unwrap();
        assert!(s.member(SubgroupTag::BVhat).unwrap());
        assert!(s.member(SubgroupTag::BP).unwrap());
        assert!(s.left_part().unwrap().equals(&p).unwrap());
        assert!(Element::named(NamedElement::GComm).bp_section().is_err());
    }

    #[test]
    fn three_factor_examples() {
        let x0 = Element::named(NamedElement::X0);
        let (f1, f2, f3) = x0.three_factor().unwrap();
        assert!(f1.equals(&x0).unwrap());
        assert!(f2.is_identity().unwrap());
        assert!(f3.is_identity().unwrap());
        for g in [
            Element::identity(),
            Element::named(NamedElement::T1),
            el("10100", &[(1, -1)], &[2, 0, -1], "11000"),
        ] {
            let (f1, f2, f3) = g.three_factor().unwrap();
            let prod = f1.mul(&f2).unwrap().mul(&f3).unwrap();
            assert!(prod.equals(&g).unwrap());
        }
    }

    #[test]
    fn named_h_family() {
        let psi = Element::named(NamedElement::Psi);
        let h1 = Element::named(NamedElement::H1);
        let h2 = Element::named(NamedElement::H2);
        let expect = psi.mul(&h1.inverse()).unwrap().mul(&psi.inverse()).unwrap();
        assert!(h2.equals(&expect).unwrap());
        assert!(!h1.is_identity().unwrap());
        assert!(!h2.is_identity().unwrap());
    }

    #[test]
    fn center_spot_checks() {
        let z = Element::named(NamedElement::ZCenter);
        for g in [
            Element::named(NamedElement::X0),
            Element::named(NamedElement::GComm),
            Element::named(NamedElement::T1),
            Element::named(NamedElement::Psi),
        ] {
            let zg = z.mul(&g).unwrap();
            let gz = g.mul(&z).unwrap();
            assert!(zg.equals(&gz).unwrap(), "z must commute with {g}");
        }
    }

    #[test]
    fn serde_round_trip() {
        let t1 = Element::named(NamedElement::T1);
        let json = serde_json::to_string(&t1).unwrap();
        assert!(json.contains("\"left\""));
        let back: Element = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t1);
        let id: Element =
            serde_json::from_str("{\"left\":\"0\",\"word\":[],\"twists\":[0],\"right\":\"0\"}")
                .unwrap();
        assert!(id.is_identity().unwrap());
    }

    #[test]
    fn display_format() {
        assert_eq!(Element::identity().to_string(), "[0 | e | 0]");
        assert_eq!(
            Element::named(NamedElement::Psi).to_string(),
            "[0 | e (1) | 0]"
        );
        assert_eq!(
            Element::named(NamedElement::T1).to_string(),
            "[11000 | s1^-1 s2^-1 (0,0,-2) | 10100]"
        );
    }
}
