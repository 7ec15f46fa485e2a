//! Spun embeddings of planar open books.
//!
//! Embed the disk with `n` holes in `♮^n (S^2 x [0,1])` so that hole `q`
//! is a great circle of the `q`-th core sphere. A twist along a curve
//! enclosing holes `S` extends to the sphere twist along the tube of the core
//! spheres in `S`, and the twist group of the 3-dimensional page is
//! `(Z/2)^n`. The ambient open book therefore depends only on the parity
//! vector of the word, and splits as a connected sum of one sphere bundle
//! per hole.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourman::{evaluate_open_book, FourManifoldForm, MonodromyForm, PageForm};
use crate::planar_mcg::{Generator, TwistWord};
use crate::z2::Z2Vector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub inner_count: usize,
    pub exponents: Vec<i64>,
    pub parity: Z2Vector,
    /// `W_{i,j}` with `i` even and `j` odd parities.
    pub raw: FourManifoldForm,
    pub normalized: FourManifoldForm,
    pub spin: bool,
}

/// Target 4-manifold for the spun embedding of `OB(page, word)`.
pub fn embedding_target(word: &TwistWord) -> Result<EmbeddingReport> {
    if word.has_push() {
        return Err(Error::PushLettersPresent);
    }
    let n = word.page().inner_count();
    let exponents = word.exponent_vector();
    let parity = exponents.parity();
    let page = PageForm::spheres(2, n);
    let mono = MonodromyForm::twists(exponents.entries().to_vec());
    let raw = evaluate_open_book(&page, &mono)?;
    debug_assert_eq!(raw.trivial_bundle + raw.twisted_bundle, n);
    Ok(EmbeddingReport {
        inner_count: n,
        exponents: exponents.0,
        spin: raw.is_spin(),
        normalized: raw.normalize(),
        raw,
        parity,
    })
}

/// True when the word spun embeds in `#^n S^2 x S^2`.
pub fn spin_target(word: &TwistWord) -> Result<bool> {
    Ok(embedding_target(word)?.spin)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct S4Certificate {
    pub pairs: usize,
    /// `n_j`: total twist exponent on curves enclosing `a_j`.
    pub a_exponents: Vec<i64>,
    pub certified: bool,
    pub target: Option<FourManifoldForm>,
}

/// Checks the sufficient condition for a spun embedding in `S^4`.
///
/// The page has `2n` holes labelled `a_1, b_1, ..., a_n, b_n` (hole `2j-1` is
/// `a_j`, hole `2j` is `b_j`). The word must carry exactly one push of `b_j`
/// around `a_j` per pair, and every twist letter must be a curve enclosing
/// only `a` holes. Certified iff every `n_j` is odd.
pub fn s4_certificate(word: &TwistWord) -> Result<S4Certificate> {
    let holes = word.page().inner_count();
    if !holes.is_multiple_of(2) {
        return Err(Error::NotApplicable(format!(
            "page has {holes} holes; pairs (a_j, b_j) need an even count"
        )));
    }
    let pairs = holes / 2;
    let mut pushes = vec![0usize; pairs];
    let mut a_exponents = vec![0i64; pairs];
    for letter in word.letters() {
        match &letter.generator {
            Generator::PlanarPush { pushed, around } => {
                if pushed % 2 != 0
                    || around.enclosed().len() != 1
                    || !around.contains(pushed - 1)
                    || letter.exponent != 1
                {
                    return Err(Error::NotApplicable(format!(
                        "push {letter} is not rho(b_j, a_j)"
                    )));
                }
                pushes[pushed / 2 - 1] += 1;
            }
            Generator::DehnTwist(curve) => {
                if let Some(b) = curve.enclosed().iter().find(|i| *i % 2 == 0) {
                    return Err(Error::NotApplicable(format!(
                        "twist {letter} encloses b-hole {b}"
                    )));
                }
                for &i in curve.enclosed() {
                    a_exponents[i.div_ceil(2) - 1] += letter.exponent;
                }
            }
        }
    }
    if let Some(j) = pushes.iter().position(|&c| c != 1) {
        return Err(Error::NotApplicable(format!(
            "pair {} carries {} pushes; exactly one required",
            j + 1,
            pushes[j]
        )));
    }
    let certified = a_exponents.iter().all(|n| n.rem_euclid(2) == 1);
    Ok(S4Certificate {
        pairs,
        a_exponents,
        certified,
        target: certified.then(|| FourManifoldForm::sphere(2)),
    })
}
