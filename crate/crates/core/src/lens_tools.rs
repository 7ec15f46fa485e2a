//! Lens spaces `L(p,q)`: negative continued fractions, linear plumbings, the
//! handle-slid braided diagram, its planar open book, and the embedding target.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourman::FourManifoldForm;
use crate::intmat::{IntScalar, Matrix};
use crate::planar_mcg::{CurveClass, Letter, PlanarPage, TwistWord};
use crate::surgery_calc::{BraidLetter, FramedBraidDiagram, LinkingMatrix};
use crate::z2::Z2Vector;
use crate::Int;

/// `[a_1, ..., a_k]` with every `a_i <= -2`, read as
/// `a_1 - 1/(a_2 - 1/(... - 1/a_k))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ContinuedFraction<T = Int> {
    coefficients: Vec<T>,
}

impl<T: IntScalar> ContinuedFraction<T> {
    pub fn new(coefficients: Vec<T>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidLens("empty continued fraction".into()));
        }
        let minus_two = -(T::one() + T::one());
        if let Some(a) = coefficients.iter().find(|a| **a > minus_two) {
            return Err(Error::InvalidLens(format!("coefficient {a} is not <= -2")));
        }
        Ok(ContinuedFraction { coefficients })
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

impl<T: fmt::Display> fmt::Display for ContinuedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn check_pq<T: IntScalar>(p: &T, q: &T) -> Result<()> {
    if !(q >= &T::one() && q < p) {
        return Err(Error::InvalidLens(format!("need 0 < q < p, got p={p}, q={q}")));
    }
    if !p.gcd(q).is_one() {
        return Err(Error::InvalidLens(format!("p={p} and q={q} are not coprime")));
    }
    Ok(())
}

/// Expansion of `-p/q` with all coefficients `<= -2`.
pub fn cf_expand<T: IntScalar>(p: T, q: T) -> Result<ContinuedFraction<T>> {
    check_pq(&p, &q)?;
    let (mut num, mut den) = (p, q);
    let mut coefficients = Vec::new();
    loop {
        // num/den > 1 here; c = ceil(num/den) >= 2
        let c = num.div_ceil(&den);
        let rem = c.clone() * den.clone() - num;
        coefficients.push(-c);
        if rem.is_zero() {
            break;
        }
        num = den;
        den = rem;
    }
    ContinuedFraction::new(coefficients)
}

/// Right-to-left evaluation in exact rationals.
pub fn cf_eval<T: IntScalar>(c: &ContinuedFraction<T>) -> Ratio<T> {
    let mut acc: Option<Ratio<T>> = None;
    for a in c.coefficients.iter().rev() {
        let a = Ratio::from_integer(a.clone());
        acc = Some(match acc {
            None => a,
            Some(tail) => {
                assert!(!tail.is_zero(), "continued fraction tail vanished");
                a - tail.recip()
            }
        });
    }
    acc.expect("continued fraction is nonempty")
}

/// Linear plumbing: diagonal `a_i`, ones on the off-diagonals.
pub fn plumbing_matrix<T: IntScalar>(c: &ContinuedFraction<T>) -> Matrix<T> {
    let a = &c.coefficients;
    let k = a.len();
    let mut m = Matrix::zeros(k, k);
    for i in 0..k {
        m[(i, i)] = a[i].clone();
        if i + 1 < k {
            m[(i, i + 1)] = T::one();
            m[(i + 1, i)] = T::one();
        }
    }
    m
}

/// Closed k-braid obtained from the linear plumbing by sliding each unknot
/// over its predecessor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlidLensDiagram {
    /// `b_i = a_1 + ... + a_i + 2(i-1)`
    pub framings: Vec<Int>,
    /// `lk(i, j)` for `i < j`, one entry per strand `i`: the twist regions
    /// covering both strands, `(a_1 + 1) + (a_2 + 2) + ... + (a_i + 2) = b_i + 1`.
    pub linking_by_lower: Vec<Int>,
    /// Twist-region counts: `a_1 + 1` around all strands, then `a_i + 2`
    /// around strands `i..k`.
    pub twists: Vec<Int>,
}

impl SlidLensDiagram {
    pub fn strands(&self) -> usize {
        self.framings.len()
    }

    pub fn linking(&self, i: usize, j: usize) -> Int {
        assert!(i != j);
        self.linking_by_lower[i.min(j) - 1]
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let k = self.strands();
        let rows = (0..k)
            .map(|i| {
                let mut row: Vec<Int> = self.linking_by_lower[..i].to_vec();
                row.push(self.framings[i]);
                row.resize(k, self.linking_by_lower[i]);
                row
            })
            .collect();
        Matrix::from_rows(rows)
    }

    /// Same data as a framed pure-braid diagram (linkings realized by
    /// `|lk|` copies of `A_{i,j}^{sign}`).
    pub fn to_braid_diagram(&self) -> FramedBraidDiagram {
        let k = self.strands();
        let mut word = Vec::new();
        for i in 1..=k {
            for j in i + 1..=k {
                let lk = self.linking(i, j);
                let sign = if lk > 0 { 1 } else { -1 };
                for _ in 0..lk.unsigned_abs() {
                    word.push(BraidLetter::new(i, j, sign));
                }
            }
        }
        FramedBraidDiagram::new(k, word, self.framings.clone()).expect("slid diagram is valid")
    }
}

pub fn slid_diagram(c: &ContinuedFraction) -> SlidLensDiagram {
    let a = c.coefficients();
    let mut partial = 0;
    let framings = a
        .iter()
        .enumerate()
        .map(|(i, ai)| {
            partial += ai;
            partial + 2 * i as Int
        })
        .collect();
    let twists: Vec<Int> = a
        .iter()
        .enumerate()
        .map(|(i, ai)| if i == 0 { ai + 1 } else { ai + 2 })
        .collect();
    let mut covered = 0;
    let linking_by_lower = twists
        .iter()
        .map(|t| {
            covered += t;
            covered
        })
        .collect();
    SlidLensDiagram {
        framings,
        linking_by_lower,
        twists,
    }
}

/// Parity bookkeeping for the open book word against the sphere-twist product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reconciliation {
    pub word_parity: Z2Vector,
    pub psi_parity: Z2Vector,
    pub agree: bool,
}

/// Planar open book on the disk with `k` holes: `b_i` twists about hole `i`,
/// `a_1 + 1` twists about all holes, and `a_i + 2` twists about holes
/// `i..k` for `i >= 2`. Zero-exponent letters are kept so the word lines up
/// with the twist regions.
pub fn lens_open_book(c: &ContinuedFraction) -> (TwistWord, Reconciliation) {
    let k = c.len();
    let page = PlanarPage::new(k).expect("k >= 1");
    let slid = slid_diagram(c);
    let mut letters = Vec::with_capacity(2 * k);
    for (i, b) in slid.framings.iter().enumerate() {
        letters.push(Letter::twist(CurveClass::new([i + 1]).unwrap(), *b));
    }
    for (i, t) in slid.twists.iter().enumerate() {
        letters.push(Letter::twist(CurveClass::new(i + 1..=k).unwrap(), *t));
    }
    let word = TwistWord::new(page, letters).expect("curves lie on the page");
    let word_parity = word.parity_vector();
    let psi = psi_parity(c);
    let rec = Reconciliation {
        agree: word_parity == psi,
        word_parity,
        psi_parity: psi,
    };
    (word, rec)
}

/// Exponent parities of the sphere-twist product: entry `j` is
/// `a_1 + ... + a_j mod 2`.
pub fn psi_parity(c: &ContinuedFraction) -> Z2Vector {
    let mut partial = 0;
    let sums: Vec<Int> = c
        .coefficients()
        .iter()
        .map(|a| {
            partial += a;
            partial
        })
        .collect();
    Z2Vector::from_integers(&sums)
}

/// Raw `W_{i,j}` from the sphere-twist parities, before normalization.
pub fn psi_target(c: &ContinuedFraction) -> FourManifoldForm {
    let parity = psi_parity(c);
    FourManifoldForm::w(2, parity.count_zeros(), parity.count_ones())
}

/// Normalized 4-manifold receiving the spun embedding of `L(p,q)`.
pub fn lens_embedding_target(p: Int, q: Int) -> Result<FourManifoldForm> {
    let c = cf_expand(p, q)?;
    Ok(psi_target(&c).normalize())
}
