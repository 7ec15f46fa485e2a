//! Planar pages, curve classes, and Dehn twist words up to homology.
//!
//! A simple closed curve on the disk with `n` holes is recorded only by the set
//! of inner boundary components it encloses. Twist words are then abelianized
//! to exponent vectors in `Z^n` and parity vectors in `(Z/2)^n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::z2::Z2Vector;

/// Disk with `inner_count` holes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlanarPage {
    inner_count: usize,
}

impl PlanarPage {
    pub fn new(inner_count: usize) -> Result<Self> {
        if inner_count == 0 {
            return Err(Error::InvalidWord(
                "a planar page needs at least one inner boundary".into(),
            ));
        }
        Ok(PlanarPage { inner_count })
    }

    pub fn inner_count(&self) -> usize {
        self.inner_count
    }

    /// Curve parallel to the i-th inner boundary (1-based).
    pub fn boundary_curve(&self, i: usize) -> Result<CurveClass> {
        let c = CurveClass::new([i])?;
        c.check_on(self)?;
        Ok(c)
    }

    /// Curve parallel to the outer boundary: it encloses every hole.
    pub fn outer_curve(&self) -> CurveClass {
        CurveClass {
            enclosed: (1..=self.inner_count).collect(),
        }
    }
}

impl fmt::Display for PlanarPage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ_{{0,{}}}", self.inner_count + 1)
    }
}

/// Homology class of a curve on a planar page, as the nonempty set of inner
/// boundaries it encloses (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CurveClass {
    enclosed: BTreeSet<usize>,
}

impl CurveClass {
    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let enclosed: BTreeSet<usize> = indices.into_iter().collect();
        if enclosed.is_empty() {
            return Err(Error::InvalidWord("curve encloses no boundary".into()));
        }
        if enclosed.contains(&0) {
            return Err(Error::InvalidWord("boundary indices are 1-based".into()));
        }
        Ok(CurveClass { enclosed })
    }

    pub fn enclosed(&self) -> &BTreeSet<usize> {
        &self.enclosed
    }

    pub fn contains(&self, i: usize) -> bool {
        self.enclosed.contains(&i)
    }

    pub fn max_index(&self) -> usize {
        *self.enclosed.iter().next_back().expect("nonempty")
    }

    pub fn union_with(&self, extra: usize) -> CurveClass {
        let mut enclosed = self.enclosed.clone();
        enclosed.insert(extra);
        CurveClass { enclosed }
    }

    pub fn check_on(&self, page: &PlanarPage) -> Result<()> {
        if self.max_index() > page.inner_count {
            return Err(Error::InvalidWord(format!(
                "curve {self} leaves a page with {} inner boundaries",
                page.inner_count
            )));
        }
        Ok(())
    }

    /// Indicator vector of the enclosed set.
    pub fn indicator(&self, len: usize) -> Vec<i64> {
        let mut v = vec![0; len];
        for &i in &self.enclosed {
            v[i - 1] = 1;
        }
        v
    }
}

impl TryFrom<Vec<usize>> for CurveClass {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        CurveClass::new(v)
    }
}

impl From<CurveClass> for Vec<usize> {
    fn from(c: CurveClass) -> Self {
        c.enclosed.into_iter().collect()
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.enclosed.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    DehnTwist(CurveClass),
    /// Drag inner boundary `pushed` once around the curve `around`.
    PlanarPush { pushed: usize, around: CurveClass },
}

impl Generator {
    fn check_on(&self, page: &PlanarPage) -> Result<()> {
        match self {
            Generator::DehnTwist(c) => c.check_on(page),
            Generator::PlanarPush { pushed, around } => {
                around.check_on(page)?;
                if *pushed == 0 || *pushed > page.inner_count {
                    return Err(Error::InvalidWord(format!(
                        "pushed boundary {pushed} out of range 1..={}",
                        page.inner_count
                    )));
                }
                if around.contains(*pushed) {
                    return Err(Error::InvalidWord(format!(
                        "boundary {pushed} cannot be pushed around a curve enclosing it"
                    )));
                }
                Ok(())
            }
        }
    }

    pub fn is_push(&self) -> bool {
        matches!(self, Generator::PlanarPush { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub exponent: i64,
}

impl Letter {
    pub fn twist(curve: CurveClass, exponent: i64) -> Self {
        Letter {
            generator: Generator::DehnTwist(curve),
            exponent,
        }
    }

    pub fn push(pushed: usize, around: CurveClass) -> Self {
        Letter {
            generator: Generator::PlanarPush { pushed, around },
            exponent: 1,
        }
    }

    /// Twist-only rewriting. A push of `b` around `a` is `τ_a · τ_{a∪b}^{-1}`.
    pub fn expand(&self) -> Vec<(CurveClass, i64)> {
        match &self.generator {
            Generator::DehnTwist(c) => vec![(c.clone(), self.exponent)],
            Generator::PlanarPush { pushed, around } => vec![
                (around.clone(), self.exponent),
                (around.union_with(*pushed), -self.exponent),
            ],
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.generator {
            Generator::DehnTwist(c) => {
                let inner: Vec<String> = c.enclosed.iter().map(|i| i.to_string()).collect();
                write!(f, "T{{{}}}^{}", inner.join(","), self.exponent)
            }
            Generator::PlanarPush { pushed, around } => {
                let inner: Vec<String> = around.enclosed.iter().map(|i| i.to_string()).collect();
                write!(f, "P{{{}|{}}}", pushed, inner.join(","))?;
                if self.exponent != 1 {
                    write!(f, "^{}", self.exponent)?;
                }
                Ok(())
            }
        }
    }
}

/// JSON letter: `{"op":"twist","curve":[1,2],"exp":3}` or
/// `{"op":"push","boundary":4,"around":[1,2]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum LetterJson {
    Twist {
        curve: Vec<usize>,
        exp: i64,
    },
    Push {
        boundary: usize,
        around: Vec<usize>,
        #[serde(default = "one", skip_serializing_if = "is_one")]
        exp: i64,
    },
}

fn one() -> i64 {
    1
}

fn is_one(v: &i64) -> bool {
    *v == 1
}

impl From<&Letter> for LetterJson {
    fn from(l: &Letter) -> Self {
        match &l.generator {
            Generator::DehnTwist(c) => LetterJson::Twist {
                curve: c.clone().into(),
                exp: l.exponent,
            },
            Generator::PlanarPush { pushed, around } => LetterJson::Push {
                boundary: *pushed,
                around: around.clone().into(),
                exp: l.exponent,
            },
        }
    }
}

impl TryFrom<LetterJson> for Letter {
    type Error = Error;

    fn try_from(j: LetterJson) -> Result<Self> {
        Ok(match j {
            LetterJson::Twist { curve, exp } => Letter::twist(CurveClass::new(curve)?, exp),
            LetterJson::Push {
                boundary,
                around,
                exp,
            } => Letter {
                generator: Generator::PlanarPush {
                    pushed: boundary,
                    around: CurveClass::new(around)?,
                },
                exponent: exp,
            },
        })
    }
}

/// Abelianized image of a word: entry `j` is the total exponent of twists
/// along curves enclosing hole `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn parity(&self) -> Z2Vector {
        Z2Vector::from_integers(&self.0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

/// A monodromy word on a fixed planar page, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistWord {
    page: PlanarPage,
    letters: Vec<Letter>,
}

impl TwistWord {
    pub fn new(page: PlanarPage, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            l.generator.check_on(&page)?;
        }
        Ok(TwistWord { page, letters })
    }

    pub fn empty(page: PlanarPage) -> Self {
        TwistWord {
            page,
            letters: Vec::new(),
        }
    }

    /// Parses the text form against a page.
    pub fn parse(page: PlanarPage, text: &str) -> Result<Self> {
        TwistWord::new(page, parse_letters(text)?)
    }

    pub fn page(&self) -> PlanarPage {
        self.page
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_push(&self) -> bool {
        self.letters.iter().any(|l| l.generator.is_push())
    }

    pub fn exponent_vector(&self) -> ExponentVector {
        let n = self.page.inner_count;
        let mut v = vec![0i64; n];
        for letter in &self.letters {
            for (curve, e) in letter.expand() {
                for &j in curve.enclosed() {
                    v[j - 1] += e;
                }
            }
        }
        ExponentVector(v)
    }

    pub fn parity_vector(&self) -> Z2Vector {
        self.exponent_vector().parity()
    }

    pub fn compose(&self, other: &TwistWord) -> Result<TwistWord> {
        if self.page != other.page {
            return Err(Error::PageMismatch {
                left: self.page.inner_count,
                right: other.page.inner_count,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Ok(TwistWord {
            page: self.page,
            letters,
        })
    }

    /// Formal inverse: reversed order, negated exponents.
    pub fn invert(&self) -> TwistWord {
        TwistWord {
            page: self.page,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    generator: l.generator.clone(),
                    exponent: -l.exponent,
                })
                .collect(),
        }
    }

    /// Merges adjacent letters with equal generators and drops zero exponents,
    /// cascading until no adjacent pair merges.
    pub fn simplify(&self) -> TwistWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if l.exponent == 0 {
                continue;
            }
            match out.last_mut() {
                Some(top) if top.generator == l.generator => {
                    top.exponent += l.exponent;
                    if top.exponent == 0 {
                        out.pop();
                    }
                }
                _ => out.push(l.clone()),
            }
        }
        TwistWord {
            page: self.page,
            letters: out,
        }
    }

    /// Same word with push letters rewritten as twists.
    pub fn expand_pushes(&self) -> TwistWord {
        let letters = self
            .letters
            .iter()
            .flat_map(|l| l.expand())
            .map(|(c, e)| Letter::twist(c, e))
            .collect();
        TwistWord {
            page: self.page,
            letters,
        }
    }

    pub fn to_json(&self) -> Vec<LetterJson> {
        self.letters.iter().map(LetterJson::from).collect()
    }

    pub fn from_json(page: PlanarPage, letters: Vec<LetterJson>) -> Result<Self> {
        let letters = letters
            .into_iter()
            .map(Letter::try_from)
            .collect::<Result<Vec<_>>>()?;
        TwistWord::new(page, letters)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses whitespace-separated letters such as `T{1,2}^3`, `T{1}^-1`, `T{2}`
/// and `P{3|1,2}`. Anything after `#` on a line is ignored.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    let mut letters = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for token in line.split_whitespace() {
            letters.push(parse_letter(token).map_err(|msg| parse_err(lineno + 1, msg))?);
        }
    }
    Ok(letters)
}

fn parse_letter(token: &str) -> std::result::Result<Letter, String> {
    let (kind, rest) = token.split_at(1);
    let rest = rest
        .strip_prefix('{')
        .ok_or_else(|| format!("expected '{{' in {token:?}"))?;
    let close = rest
        .find('}')
        .ok_or_else(|| format!("unclosed brace in {token:?}"))?;
    let (body, tail) = (&rest[..close], &rest[close + 1..]);
    let exponent = match tail {
        "" => 1,
        t => t
            .strip_prefix('^')
            .ok_or_else(|| format!("unexpected {t:?} after curve"))?
            .parse::<i64>()
            .map_err(|e| format!("bad exponent in {token:?}: {e}"))?,
    };
    let indices = |s: &str| -> std::result::Result<Vec<usize>, String> {
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("bad index {x:?}: {e}"))
            })
            .collect()
    };
    match kind {
        "T" => {
            let curve = CurveClass::new(indices(body)?).map_err(|e| e.to_string())?;
            Ok(Letter::twist(curve, exponent))
        }
        "P" => {
            let (b, around) = body
                .split_once('|')
                .ok_or_else(|| format!("push needs 'b|curve' in {token:?}"))?;
            let pushed = b
                .trim()
                .parse::<usize>()
                .map_err(|e| format!("bad pushed boundary {b:?}: {e}"))?;
            let around = CurveClass::new(indices(around)?).map_err(|e| e.to_string())?;
            Ok(Letter {
                generator: Generator::PlanarPush { pushed, around },
                exponent,
            })
        }
        other => Err(format!("unknown letter kind {other:?}")),
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_letter(s.trim()).map_err(|msg| parse_err(1, msg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn page(n: usize) -> PlanarPage {
        PlanarPage::new(n).unwrap()
    }

    /// Independent summation: counts memberships directly from the text form.
    fn summation_oracle(n: usize, letters: &[(Vec<usize>, i64)]) -> Vec<i64> {
        let mut v = vec![0; n];
        for (set, e) in letters {
            for j in 1..=n {
                if set.contains(&j) {
                    v[j - 1] += e;
                }
            }
        }
        v
    }

    #[test]
    fn lens_family_word_exponents() {
        // a={1}, b={1,2}, c={2}; the L(pq-1,q) word with p=3, q=2
        let w = TwistWord::parse(page(2), "T{1}^3 T{1,2}^3 T{2}^2").unwrap();
        let oracle = summation_oracle(2, &[(vec![1], 3), (vec![1, 2], 3), (vec![2], 2)]);
        assert_eq!(oracle, vec![6, 5]);
        assert_eq!(w.exponent_vector().0, oracle);
    }

    #[test]
    fn empty_word_is_zero() {
        for n in 1..6 {
            assert_eq!(TwistWord::empty(page(n)).exponent_vector().0, vec![0; n]);
        }
    }

    #[test]
    fn commutator_vanishes() {
        let w = TwistWord::parse(page(4), "T{1,3}^-1 T{2,3,4}^-1 T{1,3} T{2,3,4}").unwrap();
        assert_eq!(w.exponent_vector().0, vec![0; 4]);
    }

    #[test]
    fn poincare_three_hole_parity() {
        // α, β enter only through a commutator; any valid subsets work
        let w = TwistWord::parse(
            page(3),
            "T{1,2}^-1 T{2,3}^-1 T{1,2} T{2,3} T{1}^-1 T{2} T{3}^-1",
        )
        .unwrap();
        assert_eq!(w.parity_vector().as_slice(), &[1, 1, 1]);
    }

    #[test]
    fn s4_family_word_parity() {
        // c is the outer curve around both holes
        for k in 0..5 {
            let text = format!("T{{1,2}}^{} T{{1}} T{{2}}^-1", 2 * k + 2);
            let w = TwistWord::parse(page(2), &text).unwrap();
            let oracle =
                summation_oracle(2, &[(vec![1, 2], 2 * k + 2), (vec![1], 1), (vec![2], -1)]);
            assert_eq!(w.exponent_vector().0, oracle);
            assert_eq!(w.parity_vector().as_slice(), &[1, 1]);

            let text = format!("T{{2}}^{} T{{1}} T{{1,2}}^-1", 2 * k + 2);
            let w = TwistWord::parse(page(2), &text).unwrap();
            let oracle =
                summation_oracle(2, &[(vec![2], 2 * k + 2), (vec![1], 1), (vec![1, 2], -1)]);
            assert_eq!(w.exponent_vector().0, oracle);
            assert_eq!(w.parity_vector().as_slice(), &[0, 1]);
        }
    }

    #[test]
    fn even_exponents_give_zero_parity() {
        let w = TwistWord::parse(page(3), "T{1}^2 T{1,2,3}^-4 T{2,3}^6").unwrap();
        assert!(w.parity_vector().is_zero());
    }

    #[test]
    fn compose_then_simplify_cancels() {
        let p = page(2);
        let a = TwistWord::parse(p, "T{1}^2").unwrap();
        let b = TwistWord::parse(p, "T{1}^-2").unwrap();
        assert!(a.compose(&b).unwrap().simplify().is_empty());
    }

    #[test]
    fn invert_reverses_and_negates() {
        let w = TwistWord::parse(page(2), "T{1} T{1,2}^3").unwrap();
        assert_eq!(w.invert().to_string(), "T{1,2}^-3 T{1}^-1");
    }

    #[test]
    fn simplify_cascades() {
        let w = TwistWord::parse(page(2), "T{1} T{2}^2 T{2}^-2 T{1}^-1 T{1,2}^0").unwrap();
        assert!(w.simplify().is_empty());
    }

    #[test]
    fn page_mismatch_is_an_error() {
        let a = TwistWord::empty(page(2));
        let b = TwistWord::empty(page(3));
        assert_eq!(
            a.compose(&b),
            Err(Error::PageMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn out_of_range_curve_rejected() {
        assert!(matches!(
            TwistWord::parse(page(2), "T{1,3}"),
            Err(Error::InvalidWord(_))
        ));
        assert!(TwistWord::parse(page(2), "P{3|1}").is_err());
        assert!(TwistWord::parse(page(2), "P{1|1}").is_err());
        assert!(TwistWord::parse(page(2), "T{}").is_err());
        assert!(TwistWord::parse(page(2), "T{0}").is_err());
    }

    #[test]
    fn push_parity_is_pushed_indicator() {
        let p = page(4);
        let w = TwistWord::parse(p, "P{4|1,2}").unwrap();
        assert_eq!(w.exponent_vector().0, vec![0, 0, 0, -1]);
        assert_eq!(w.parity_vector(), Z2Vector::unit(4, 3));
    }

    #[test]
    fn text_and_json_agree() {
        let p = page(4);
        let w = TwistWord::parse(p, "T{1,2}^3 P{4|1,2}").unwrap();
        let json = serde_json::to_string(&w.to_json()).unwrap();
        assert_eq!(
            json,
            r#"[{"op":"twist","curve":[1,2],"exp":3},{"op":"push","boundary":4,"around":[1,2]}]"#
        );
        let back: Vec<LetterJson> = serde_json::from_str(&json).unwrap();
        assert_eq!(TwistWord::from_json(p, back).unwrap(), w);
        assert_eq!(TwistWord::parse(p, &w.to_string()).unwrap(), w);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_letters("T{1}\nQ{2}").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        const N: usize = 6;

        fn arb_curve() -> impl Strategy<Value = Vec<usize>> {
            proptest::sample::subsequence((1..=N).collect::<Vec<_>>(), 1..=N)
        }

        fn arb_letters() -> impl Strategy<Value = Vec<(Vec<usize>, i64)>> {
            proptest::collection::vec((arb_curve(), -5i64..=5), 0..12)
        }

        fn build(letters: &[(Vec<usize>, i64)]) -> TwistWord {
            let ls = letters
                .iter()
                .map(|(s, e)| Letter::twist(CurveClass::new(s.iter().copied()).unwrap(), *e))
                .collect();
            TwistWord::new(PlanarPage::new(N).unwrap(), ls).unwrap()
        }

        proptest! {
            #[test]
            fn exponent_vector_matches_oracle(l in arb_letters()) {
                prop_assert_eq!(build(&l).exponent_vector().0, summation_oracle(N, &l));
            }

            #[test]
            fn compose_is_additive(l1 in arb_letters(), l2 in arb_letters()) {
                let (w1, w2) = (build(&l1), build(&l2));
                let sum: Vec<i64> = summation_oracle(N, &l1)
                    .iter()
                    .zip(summation_oracle(N, &l2))
                    .map(|(a, b)| a + b)
                    .collect();
                prop_assert_eq!(w1.compose(&w2).unwrap().exponent_vector().0, sum);
            }

            #[test]
            fn invert_negates(l in arb_letters()) {
                let w = build(&l);
                let neg: Vec<i64> = w.exponent_vector().0.iter().map(|x| -x).collect();
                prop_assert_eq!(w.invert().exponent_vector().0, neg);
            }

            #[test]
            fn commutators_vanish(l1 in arb_letters(), l2 in arb_letters()) {
                let (w, v) = (build(&l1), build(&l2));
                let comm = w.compose(&v).unwrap().compose(&w.invert()).unwrap().compose(&v.invert()).unwrap();
                prop_assert!(comm.exponent_vector().0.iter().all(|&x| x == 0));
            }

            #[test]
            fn parity_ignores_simplify_and_order(l in arb_letters(), seed in any::<u64>()) {
                let w = build(&l);
                prop_assert_eq!(w.simplify().parity_vector(), w.parity_vector());
                let mut shuffled = l.clone();
                let len = shuffled.len();
                if len > 1 {
                    shuffled.rotate_left((seed as usize) % len);
                    shuffled.swap(0, (seed as usize / 7) % len);
                }
                prop_assert_eq!(build(&shuffled).parity_vector(), w.parity_vector());
            }

            #[test]
            fn push_parity_is_indicator_of_pushed(around in proptest::sample::subsequence((1..N).collect::<Vec<_>>(), 1..N)) {
                let page = PlanarPage::new(N).unwrap();
                let a = CurveClass::new(around.iter().copied()).unwrap();
                let w = TwistWord::new(page, vec![Letter::push(N, a.clone())]).unwrap();
                let direct = &Z2Vector::from_integers(&a.indicator(N))
                    + &Z2Vector::from_integers(&a.union_with(N).indicator(N));
                prop_assert_eq!(w.parity_vector(), direct.clone());
                prop_assert_eq!(direct, Z2Vector::unit(N, N - 1));
            }
        }
    }
}
