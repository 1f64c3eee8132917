//! Seeded random generation of elements and the named property suites.
//!
//! Every suite is deterministic given `(suite, trials, seed)`: each trial
//! derives an independent generator state from the seed and its trial index,
//! so trials are order-independent and a failure reproduces from its
//! serialized counterexample. Suites never panic on a counterexample; they
//! collect it into the report.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::element::{Element, NamedElement, SubgroupTag};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::ribbon::RibbonBraid;
use crate::tree::Tree;

/// Bounds for random generation. Generation is deterministic given `seed`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GenConfig {
    pub seed: u64,
    pub max_leaves: usize,
    pub max_word_len: usize,
    pub twist_bound: i64,
    pub constrain: Option<SubgroupTag>,
}

impl Default for GenConfig {
    fn default() -> GenConfig {
        GenConfig {
            seed: 0,
            max_leaves: 12,
            max_word_len: 16,
            twist_bound: 3,
            constrain: None,
        }
    }
}

/// SplitMix64; small, stable across releases, good enough for sampling.
#[derive(Clone)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    /// Independent stream for one trial of a suite.
    pub fn for_trial(seed: u64, trial: u64) -> Rng {
        let mut r = Rng(seed
            ^ trial
                .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                .wrapping_add(0xD1B5_4A32_D192_ED03));
        r.next_u64();
        r
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (`bound ≥ 1`).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    /// Uniform in `-bound..=bound`.
    pub fn twist(&mut self, bound: i64) -> i64 {
        (self.next_u64() % (2 * bound as u64 + 1)) as i64 - bound
    }

    pub fn flip(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

/// The named property suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Suite {
    GroupAxioms,
    Confluence,
    BraidOracleCrosscheck,
    LemmaConjugate,
    LemmaPushInto1,
    LemmaCommconj,
    LemmaNormalBp,
    LemmaOntoBp,
    Chi1Hom,
    HnnRoundtrip,
    Center,
    ThreeFactor,
    Fig5Conventions,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::GroupAxioms,
        Suite::Confluence,
        Suite::BraidOracleCrosscheck,
        Suite::LemmaConjugate,
        Suite::LemmaPushInto1,
        Suite::LemmaCommconj,
        Suite::LemmaNormalBp,
        Suite::LemmaOntoBp,
        Suite::Chi1Hom,
        Suite::HnnRoundtrip,
        Suite::Center,
        Suite::ThreeFactor,
        Suite::Fig5Conventions,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::GroupAxioms => "group_axioms",
            Suite::Confluence => "confluence",
            Suite::BraidOracleCrosscheck => "braid_oracle_crosscheck",
            Suite::LemmaConjugate => "lemma_conjugate",
            Suite::LemmaPushInto1 => "lemma_push_into_1",
            Suite::LemmaCommconj => "lemma_commconj",
            Suite::LemmaNormalBp => "lemma_normal_bP",
            Suite::LemmaOntoBp => "lemma_onto_bP",
            Suite::Chi1Hom => "chi1_hom",
            Suite::HnnRoundtrip => "hnn_roundtrip",
            Suite::Center => "center",
            Suite::ThreeFactor => "three_factor",
            Suite::Fig5Conventions => "fig5_conventions",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// One counterexample: the trial that produced it, what failed, and the
/// serialized witnesses.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Failure {
    pub trial: usize,
    pub message: String,
    pub witnesses: Vec<String>,
}

/// Outcome of a suite run. Failures empty iff the suite passed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite={} trials={} failures={} elapsed_ms={} {}",
            self.suite,
            self.trials,
            self.failures.len(),
            self.elapsed_ms,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

fn gen_tree(rng: &mut Rng, leaves: usize) -> Tree {
    let mut t = Tree::leaf();
    for _ in 1..leaves {
        let k = rng.range(1, t.leaf_count());
        t = t.add_caret(k).expect("index in range");
    }
    t
}

/// Random word over `n` strands; generators up to `max_index` (inclusive).
fn gen_word_bounded(rng: &mut Rng, n: usize, max_index: usize, max_len: usize) -> BraidWord {
    if max_index == 0 {
        return BraidWord::identity(n);
    }
    let len = rng.range(0, max_len);
    let letters = (0..len).map(|_| Letter {
        index: rng.range(1, max_index),
        positive: rng.flip(),
    });
    BraidWord::from_letters(n, letters).expect("indices in range")
}

fn gen_word(rng: &mut Rng, n: usize, max_len: usize) -> BraidWord {
    gen_word_bounded(rng, n, n.saturating_sub(1), max_len)
}

/// Random pure word: a random word times a positive braid undoing its
/// permutation.
fn gen_pure_word(rng: &mut Rng, n: usize, max_len: usize) -> BraidWord {
    let w = gen_word(rng, n, max_len);
    let undo = BraidWord::shuffle(&w.rho().inverse());
    w.concat(&undo).expect("same strand count")
}

fn gen_twists(rng: &mut Rng, n: usize, bound: i64) -> Vec<i64> {
    (0..n).map(|_| rng.twist(bound)).collect()
}

fn gen_element(rng: &mut Rng, cfg: &GenConfig) -> Result<Element> {
    match cfg.constrain {
        None => {
            let n = rng.range(1, cfg.max_leaves);
            Element::new(
                gen_tree(rng, n),
                RibbonBraid::new(
                    gen_word(rng, n, cfg.max_word_len),
                    gen_twists(rng, n, cfg.twist_bound),
                )?,
                gen_tree(rng, n),
            )
        }
        Some(SubgroupTag::BV) => {
            let n = rng.range(1, cfg.max_leaves);
            Element::new(
                gen_tree(rng, n),
                RibbonBraid::from_braid(gen_word(rng, n, cfg.max_word_len)),
                gen_tree(rng, n),
            )
        }
        Some(SubgroupTag::F) => {
            let n = rng.range(1, cfg.max_leaves);
            Element::new(gen_tree(rng, n), RibbonBraid::identity(n), gen_tree(rng, n))
        }
        Some(SubgroupTag::BF) => {
            let n = rng.range(1, cfg.max_leaves);
            Element::new(
                gen_tree(rng, n),
                RibbonBraid::from_braid(gen_pure_word(rng, n, cfg.max_word_len)),
                gen_tree(rng, n),
            )
        }
        Some(SubgroupTag::BP) => {
            let n = rng.range(1, cfg.max_leaves);
            let t = gen_tree(rng, n);
            Element::new(
                t.clone(),
                RibbonBraid::from_braid(gen_pure_word(rng, n, cfg.max_word_len)),
                t,
            )
        }
        Some(SubgroupTag::BT) => {
            let n = rng.range(1, cfg.max_leaves);
            let w = gen_word(rng, n, cfg.max_word_len);
            let offset = rng.below(n);
            let rotation = Perm::from_images((0..n).map(|i| (i + offset) % n + 1).collect())?;
            let fix = BraidWord::shuffle(&w.rho().inverse().compose(&rotation));
            Element::new(
                gen_tree(rng, n),
                RibbonBraid::from_braid(w.concat(&fix)?),
                gen_tree(rng, n),
            )
        }
        Some(SubgroupTag::BVhat) => {
            let n = rng.range(1, cfg.max_leaves);
            let w = gen_word_bounded(rng, n, n.saturating_sub(2), cfg.max_word_len);
            Element::new(
                gen_tree(rng, n),
                RibbonBraid::from_braid(w),
                gen_tree(rng, n),
            )
        }
        Some(SubgroupTag::BVhat1) => {
            let inner = GenConfig {
                constrain: Some(SubgroupTag::BV),
                max_leaves: cfg.max_leaves.saturating_sub(1).max(1),
                ..cfg.clone()
            };
            gen_element(rng, &inner)?.embed_hat1()
        }
        Some(SubgroupTag::Dhat) => {
            let inner = GenConfig {
                constrain: Some(SubgroupTag::BVhat),
                ..cfg.clone()
            };
            let g = gen_element(rng, &inner)?;
            let x0 = Element::named(NamedElement::X0);
            g.mul(&x0.pow(-g.chi1()?)?)
        }
    }
}

/// Deterministic sample for the given configuration.
pub fn random_element(cfg: &GenConfig) -> Result<Element> {
    gen_element(&mut Rng::for_trial(cfg.seed, 0), cfg)
}

struct Ctx {
    x0: Element,
    g_comm: Element,
    psi: Element,
    z: Element,
}

impl Ctx {
    fn new() -> Ctx {
        Ctx {
            x0: Element::named(NamedElement::X0),
            g_comm: Element::named(NamedElement::GComm),
            psi: Element::named(NamedElement::Psi),
            z: Element::named(NamedElement::ZCenter),
        }
    }
}

fn conjugate(a: &Element, g: &Element) -> Result<Element> {
    a.mul(g)?.mul(&a.inverse())
}

fn fail(trial: usize, message: impl Into<String>, witnesses: &[&Element]) -> Failure {
    Failure {
        trial,
        message: message.into(),
        witnesses: witnesses.iter().map(|e| e.to_string()).collect(),
    }
}

/// Run one suite for `trials` seeded samples, collecting every
/// counterexample.
pub fn run_suite(suite: Suite, trials: usize, cfg: &GenConfig) -> SuiteReport {
    let start = Instant::now();
    let ctx = Ctx::new();
    let mut failures = Vec::new();
    let mut center_witness = false;
    for trial in 0..trials {
        let mut rng = Rng::for_trial(cfg.seed, trial as u64);
        let outcome = run_trial(suite, trial, &mut rng, cfg, &ctx, &mut center_witness);
        match outcome {
            Ok(Some(failure)) => failures.push(failure),
            Ok(None) => {}
            Err(e) => failures.push(Failure {
                trial,
                message: format!("trial aborted: {e}"),
                witnesses: Vec::new(),
            }),
        }
    }
    if suite == Suite::Center && trials > 0 && !center_witness {
        failures.push(Failure {
            trial: trials,
            message: "no sampled element failed to commute with psi".into(),
            witnesses: Vec::new(),
        });
    }
    SuiteReport {
        suite: suite.name().to_string(),
        trials,
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn run_trial(
    suite: Suite,
    trial: usize,
    rng: &mut Rng,
    cfg: &GenConfig,
    ctx: &Ctx,
    center_witness: &mut bool,
) -> Result<Option<Failure>> {
    match suite {
        Suite::GroupAxioms => trial_group_axioms(trial, rng, cfg),
        Suite::Confluence => trial_confluence(trial, rng, cfg),
        Suite::BraidOracleCrosscheck => trial_braid_oracle(trial, rng, cfg),
        Suite::LemmaConjugate => trial_lemma_conjugate(trial, rng, cfg, ctx),
        Suite::LemmaPushInto1 => trial_push_into_1(trial, rng, cfg, ctx),
        Suite::LemmaCommconj => trial_commconj(trial, rng, cfg, ctx),
        Suite::LemmaNormalBp => trial_normal_bp(trial, rng, cfg),
        Suite::LemmaOntoBp => trial_onto_bp(trial, rng, cfg),
        Suite::Chi1Hom => trial_chi1_hom(trial, rng, cfg, ctx),
        Suite::HnnRoundtrip => trial_hnn(trial, rng, cfg, ctx),
        Suite::Center => trial_center(trial, rng, cfg, ctx, center_witness),
        Suite::ThreeFactor => trial_three_factor(trial, rng, cfg),
        Suite::Fig5Conventions => trial_fig5(trial),
    }
}

fn trial_group_axioms(trial: usize, rng: &mut Rng, cfg: &GenConfig) -> Result<Option<Failure>> {
    let a = gen_element(rng, cfg)?;
    let b = gen_element(rng, cfg)?;
    let c = gen_element(rng, cfg)?;
    let assoc = a.mul(&b)?.mul(&c)?.equals(&a.mul(&b.mul(&c)?)?)?;
    if !assoc {
        return Ok(Some(fail(trial, "associativity failed", &[&a, &b, &c])));
    }
    let id = Element::identity();
    if !a.mul(&id)?.equals(&a)? || !id.mul(&a)?.equals(&a)? {
        return Ok(Some(fail(trial, "identity law failed", &[&a])));
    }
    if !a.mul(&a.inverse())?.is_identity()? || !a.inverse().mul(&a)?.is_identity()? {
        return Ok(Some(fail(trial, "inverse law failed", &[&a])));
    }
    // Equality must agree with the quotient test.
    let direct = a.equals(&b)?;
    let quotient = a.mul(&b.inverse())?.is_identity()?;
    if direct != quotient {
        return Ok(Some(fail(
            trial,
            "equality disagrees with a·b⁻¹ test",
            &[&a, &b],
        )));
    }
    Ok(None)
}

fn trial_confluence(trial: usize, rng: &mut Rng, cfg: &GenConfig) -> Result<Option<Failure>> {
    let g = gen_element(rng, cfg)?;
    // Fatten the representative with a few extra expansions.
    let mut rep = g.clone();
    for _ in 0..rng.range(0, 3) {
        let k = rng.range(1, rep.n());
        rep = rep.expand(k)?;
    }
    let deterministic = rep.normalize()?;
    let mut randomized = rep.clone();
    loop {
        let sites = randomized.reduction_sites()?;
        if sites.is_empty() {
            break;
        }
        randomized = randomized.reduce_at(sites[rng.below(sites.len())])?;
    }
    let same = deterministic.left() == randomized.left()
        && deterministic.right() == randomized.right()
        && deterministic.ribbon().twists() == randomized.ribbon().twists()
        && deterministic
            .ribbon()
            .braid()
            .equals(randomized.ribbon().braid())?;
    if !same {
        return Ok(Some(fail(
            trial,
            "normal forms disagree between reduction orders",
            &[&rep, &deterministic, &randomized],
        )));
    }
    if !rep.mul(&deterministic.inverse())?.is_identity()? {
        return Ok(Some(fail(
            trial,
            "normal form is not equivalent to input",
            &[&rep],
        )));
    }
    Ok(None)
}

fn trial_braid_oracle(trial: usize, rng: &mut Rng, cfg: &GenConfig) -> Result<Option<Failure>> {
    let n = rng.range(2, 6);
    let u = gen_word(rng, n, cfg.max_word_len);
    let v = gen_word(rng, n, cfg.max_word_len);
    if u.equals(&v)? {
        let consistent = u.rho() == v.rho()
            && u.exponent_sum() == v.exponent_sum()
            && u.linking_doubled() == v.linking_doubled();
        if !consistent {
            return Ok(Some(Failure {
                trial,
                message: "equal words with different invariants".into(),
                witnesses: vec![u.to_string(), v.to_string()],
            }));
        }
    }
    // Insert trivial relator instances; the word must stay equal and keep
    // its invariants.
    let mut letters: Vec<Letter> = u.letters().to_vec();
    for _ in 0..rng.range(1, 3) {
        let at = rng.below(letters.len() + 1);
        let insert: Vec<Letter> = match rng.below(3) {
            0 => {
                let i = rng.range(1, n - 1);
                let sign = rng.flip();
                vec![
                    Letter {
                        index: i,
                        positive: sign,
                    },
                    Letter {
                        index: i,
                        positive: !sign,
                    },
                ]
            }
            1 if n >= 3 => {
                let i = rng.range(1, n - 2);
                vec![
                    Letter {
                        index: i,
                        positive: true,
                    },
                    Letter {
                        index: i + 1,
                        positive: true,
                    },
                    Letter {
                        index: i,
                        positive: true,
                    },
                    Letter {
                        index: i + 1,
                        positive: false,
                    },
                    Letter {
                        index: i,
                        positive: false,
                    },
                    Letter {
                        index: i + 1,
                        positive: false,
                    },
                ]
            }
            _ if n >= 4 => {
                let i = rng.range(1, n - 3);
                let j = rng.range(i + 2, n - 1);
                vec![
                    Letter {
                        index: i,
                        positive: true,
                    },
                    Letter {
                        index: j,
                        positive: true,
                    },
                    Letter {
                        index: i,
                        positive: false,
                    },
                    Letter {
                        index: j,
                        positive: false,
                    },
                ]
            }
            _ => vec![],
        };
        letters.splice(at..at, insert);
    }
    let w = BraidWord::from_letters(n, letters)?;
    if !u.equals(&w)? {
        return Ok(Some(Failure {
            trial,
            message: "relator-inserted word not judged equal".into(),
            witnesses: vec![u.to_string(), w.to_string()],
        }));
    }
    let consistent = u.rho() == w.rho()
        && u.exponent_sum() == w.exponent_sum()
        && u.linking_doubled() == w.linking_doubled();
    if !consistent {
        return Ok(Some(Failure {
            trial,
            message: "relator insertion changed an invariant".into(),
            witnesses: vec![u.to_string(), w.to_string()],
        }));
    }
    Ok(None)
}

fn trial_lemma_conjugate(
    trial: usize,
    rng: &mut Rng,
    cfg: &GenConfig,
    ctx: &Ctx,
) -> Result<Option<Failure>> {
    let inner = GenConfig {
        constrain: Some(SubgroupTag::BVhat1),
        ..cfg.clone()
    };
    let h = gen_element(rng, &inner)?;
    let conj = ctx.x0.inverse().mul(&h)?.mul(&ctx.x0)?;
    if !conj.member(SubgroupTag::BVhat1)? {
        return Ok(Some(fail(trial, "x0-conjugate left bVhat1", &[&h, &conj])));
    }
    Ok(None)
}

fn trial_push_into_1(
    trial: usize,
    rng: &mut Rng,
    cfg: &GenConfig,
    ctx: &Ctx,
) -> Result<Option<Failure>> {
    let inner = GenConfig {
        constrain: Some(SubgroupTag::Dhat),
        ..cfg.clone()
    };
    let g = gen_element(rng, &inner)?;
    let k = g.normalize()?.left().right_depth().saturating_sub(1) as i64;
    let conj = ctx.x0.pow(-k)?.mul(&g)?.mul(&ctx.x0.pow(k)?)?;
    if !conj.member(SubgroupTag::BVhat1)? {
        return Ok(Some(fail(
            trial,
            "x0^-k conjugate left bVhat1",
            &[&g, &conj],
        )));
    }
    Ok(None)
}

fn trial_commconj(
    trial: usize,
    rng: &mut Rng,
    cfg: &GenConfig,
    ctx: &Ctx,
) -> Result<Option<Failure>> {
    let inner = GenConfig {
        constrain: Some(SubgroupTag::BVhat1),
        ..cfg.clone()
    };
    let a = gen_element(rng, &inner)?;
    let b = gen_element(rng, &inner)?;
    let moved = conjugate(&ctx.g_comm.inverse(), &b)?;
    if !a.mul(&moved)?.equals(&moved.mul(&a)?)? {
        return Ok(Some(fail(trial, "commuting conjugates failed", &[&a, &b])));
    }
    Ok(None)
}

fn trial_normal_bp(trial: usize, rng: &mut Rng, cfg: &GenConfig) -> Result<Option<Failure>> {
    let inner = GenConfig {
        constrain: Some(SubgroupTag::BP),
        ..cfg.clone()
    };
    let p = gen_element(rng, &inner)?;
    let r = gen_element(
        rng,
        &GenConfig {
            constrain: None,
            ..cfg.clone()
        },
    )?;
    let conj = conjugate(&r, &p)?;
    if !conj.member(SubgroupTag::BP)? {
        return Ok(Some(fail(
            trial,
            "conjugate of bP element left bP",
            &[&p, &r, &conj],
        )));
    }
    Ok(None)
}

/// A random element of b̂V ∩ bP: a symmetric triple over a pure braid that
/// leaves the last strand alone.
fn gen_hat_bp(rng: &mut Rng, cfg: &GenConfig) -> Result<Element> {
    let n = rng.range(1, cfg.max_leaves);
    let t = gen_tree(rng, n);
    let braid = if n >= 2 {
        gen_pure_word(rng, n - 1, cfg.max_word_len).embed(n)?
    } else {
        BraidWord::identity(1)
    };
    Element::new(t.clone(), RibbonBraid::from_braid(braid), t)
}

fn trial_onto_bp(trial: usize, rng: &mut Rng, cfg: &GenConfig) -> Result<Option<Failure>> {
    let g1 = gen_hat_bp(rng, cfg)?;
    let g2 = gen_hat_bp(rng, cfg)?;
    let lhs = g1.mul(&g2)?.left_part()?;
    let rhs = g1.left_part()?.mul(&g2.left_part()?)?;
    if !lhs.equals(&rhs)? {
        return Ok(Some(fail(
            trial,
            "left_part is not multiplicative",
            &[&g1, &g2],
        )));
    }
    let inner = GenConfig {
        constrain: Some(SubgroupTag::BP),
        ..cfg.clone()
    };
    let p = gen_element(rng, &inner)?;
    if !p.bp_section()?.left_part()?.equals(&p)? {
        return Ok(Some(fail(
            trial,
            "left_part ∘ bp_section is not the identity",
            &[&p],
        )));
    }
    Ok(None)
}

fn trial_chi1_hom(
    trial: usize,
    rng: &mut Rng,
    cfg: &GenConfig,
    ctx: &Ctx,
) -> Result<Option<Failure>> {
    if ctx.x0.chi1()? != 1 {
        return Ok(Some(fail(trial, "chi1(x0) != 1", &[&ctx.x0])));
    }
    let inner = GenConfig {
        constrain: Some(SubgroupTag::BVhat),
        ..cfg.clone()
    };
    let a = gen_element(rng, &inner)?;
    let b = gen_element(rng, &inner)?;
    if a.mul(&b)?.chi1()? != a.chi1()? + b.chi1()? {
        return Ok(Some(fail(trial, "chi1 is not additive", &[&a, &b])));
    }
    Ok(None)
}

fn trial_hnn(trial: usize, rng: &mut Rng, cfg: &GenConfig, ctx: &Ctx) -> Result<Option<Failure>> {
    let inner = GenConfig {
        constrain: Some(SubgroupTag::BVhat),
        ..cfg.clone()
    };
    let g = gen_element(rng, &inner)?;
    let (c, k, h) = g.hnn_decompose()?;
    if !h.member(SubgroupTag::BV)? {
        return Ok(Some(fail(
            trial,
            "HNN base element is not in bV",
            &[&g, &h],
        )));
    }
    let recomposed = ctx
        .x0
        .pow(k as i64)?
        .mul(&h.embed_hat1()?)?
        .mul(&ctx.x0.pow(-(k as i64))?)?
        .mul(&ctx.x0.pow(c)?)?;
    if !g.equals(&recomposed)? {
        return Ok(Some(fail(trial, "HNN recomposition failed", &[&g, &h])));
    }
    Ok(None)
}

fn trial_center(
    trial: usize,
    rng: &mut Rng,
    cfg: &GenConfig,
    ctx: &Ctx,
    center_witness: &mut bool,
) -> Result<Option<Failure>> {
    let r = gen_element(
        rng,
        &GenConfig {
            constrain: None,
            ..cfg.clone()
        },
    )?;
    if !ctx.z.mul(&r)?.equals(&r.mul(&ctx.z)?)? {
        return Ok(Some(fail(trial, "z_center failed to commute", &[&r])));
    }
    if !ctx.psi.mul(&r)?.equals(&r.mul(&ctx.psi)?)? {
        *center_witness = true;
    }
    Ok(None)
}

fn trial_three_factor(trial: usize, rng: &mut Rng, cfg: &GenConfig) -> Result<Option<Failure>> {
    let g = gen_element(rng, cfg)?;
    let (f1, f2, f3) = g.three_factor()?;
    if !f1.mul(&f2)?.mul(&f3)?.equals(&g)? {
        return Ok(Some(fail(trial, "three_factor does not recompose", &[&g])));
    }
    // Shuffle-conjugation: a twist-only symmetric element conjugates to the
    // interleaved twist vector over the fully bifurcated tree.
    let n = rng.range(2, cfg.max_leaves.max(2));
    let t = gen_tree(rng, n);
    let mut twists = vec![0i64];
    twists.extend((1..n).map(|_| rng.twist(cfg.twist_bound)));
    let gt = Element::new(
        t.clone(),
        RibbonBraid::from_twists(twists.clone()),
        t.clone(),
    )?;

    let mut t_left = t.clone();
    for _ in 1..n {
        t_left = t_left.add_caret(1)?;
    }
    let mut t_split = t.clone();
    for j in (2..=n).rev() {
        t_split = t_split.add_caret(j)?;
    }
    let m = 2 * n - 1;
    // v: n zeros then m₂..m_n, all at the bottom of T'.
    let mut v = vec![0i64; n];
    v.extend_from_slice(&twists[1..]);
    // w: zeros interleaved with m₂..m_n over T''.
    let mut wv = vec![0i64; m];
    for j in 2..=n {
        wv[2 * (j - 1) - 1] = twists[j - 1];
    }
    let gt_left = Element::new(
        t_left.clone(),
        RibbonBraid::from_twists(v.clone()),
        t_left.clone(),
    )?;
    if !gt.equals(&gt_left)? {
        return Ok(Some(fail(
            trial,
            "left-caret expansion form is wrong",
            &[&gt, &gt_left],
        )));
    }
    // Bottom position n+j-1 carries m_j and must land at top 2(j-1); the
    // zero strands fill the odd top positions in order.
    let mut images: Vec<usize> = (0..n).map(|i| 2 * i + 1).collect();
    images.extend((2..=n).map(|j| 2 * (j - 1)));
    let alpha = BraidWord::shuffle(&Perm::from_images(images)?);
    let a = Element::new(t_split.clone(), RibbonBraid::from_braid(alpha), t_left)?;
    let conj = conjugate(&a, &gt)?;
    let target = Element::new(t_split.clone(), RibbonBraid::from_twists(wv), t_split)?;
    if !conj.equals(&target)? {
        return Ok(Some(fail(
            trial,
            "shuffle conjugation identity failed",
            &[&gt, &a],
        )));
    }
    Ok(None)
}

fn trial_fig5(trial: usize) -> Result<Option<Failure>> {
    let lhs = Element::new(
        Tree::leaf(),
        RibbonBraid::from_twists(vec![1]),
        Tree::leaf(),
    )?;
    let caret = Tree::parse("100")?;
    let rhs = Element::new(
        caret.clone(),
        RibbonBraid::new(BraidWord::from_pairs(2, &[(1, 1)])?, vec![1, 1])?,
        caret,
    )?;
    if !lhs.equals(&rhs)? {
        return Ok(Some(fail(
            trial,
            "single-twist expansion identity failed",
            &[&lhs, &rhs],
        )));
    }
    if lhs.expand(1)? != rhs {
        return Ok(Some(fail(
            trial,
            "expansion of the single twist is not frozen",
            &[&lhs],
        )));
    }
    // Frozen cabling convention: the bifurcated positive crossing.
    let cabled = BraidWord::from_pairs(2, &[(1, 1)])?.cable(1)?;
    let expect = BraidWord::from_pairs(3, &[(1, 1), (2, 1)])?;
    let other = BraidWord::from_pairs(3, &[(2, 1), (1, 1)])?;
    if !cabled.equals(&expect)? || cabled.equals(&other)? {
        return Ok(Some(Failure {
            trial,
            message: "cabling convention drifted".into(),
            witnesses: vec![cabled.to_string()],
        }));
    }
    Ok(None)
}
