//! Framed pure-braid surgery diagrams.
//!
//! A diagram is a pure braid on `n` strands closed up around an unknotted
//! axis, with an integer framing on every strand. The only data kept is the
//! word in the generators `A_{i,j}^{±1}` and the framings; this determines
//! the linking matrix and the planar open book built by twisting the braid
//! away one generator at a time.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::intmat::{H1Invariants, Matrix};
use crate::planar_mcg::{CurveClass, Letter, PlanarPage, TwistWord};
use crate::Int;

pub type LinkingMatrix = Matrix<Int>;

/// Pure braid generator `A_{i,j}^{sign}`, `1 <= i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidLetter {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

impl BraidLetter {
    pub fn new(a: usize, b: usize, sign: i8) -> Self {
        BraidLetter {
            i: a.min(b),
            j: a.max(b),
            sign,
        }
    }

    fn inverse(&self) -> Self {
        BraidLetter {
            sign: -self.sign,
            ..*self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FramedBraidDiagram {
    pub strands: usize,
    pub braid_word: Vec<BraidLetter>,
    pub framings: Vec<Int>,
}

/// Sign choices used when turning surgery data into Dehn twists. Page-framed
/// `-1` surgery is a positive twist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignConvention {
    pub framing: String,
    pub braid: String,
    pub blow_up: String,
}

impl Default for SignConvention {
    fn default() -> Self {
        SignConvention {
            framing: "framing f_i on strand i -> T{i}^(-f_i)".into(),
            braid: "A_{i,j}^eps -> T{i,j}^(-eps)".into(),
            blow_up: "new eps-framed strand links each region strand with +1; region framings and mutual linkings shift by eps".into(),
        }
    }
}

impl FramedBraidDiagram {
    pub fn new(strands: usize, braid_word: Vec<BraidLetter>, framings: Vec<Int>) -> Result<Self> {
        let d = FramedBraidDiagram {
            strands,
            braid_word,
            framings,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.framings.len() != self.strands {
            return Err(Error::InvalidDiagram(format!(
                "{} framings for {} strands",
                self.framings.len(),
                self.strands
            )));
        }
        for l in &self.braid_word {
            if l.i == 0 || l.i >= l.j || l.j > self.strands {
                return Err(Error::InvalidDiagram(format!(
                    "braid letter A_{{{},{}}} invalid on {} strands",
                    l.i, l.j, self.strands
                )));
            }
            if l.sign != 1 && l.sign != -1 {
                return Err(Error::InvalidDiagram(format!(
                    "braid letter sign {} is not ±1",
                    l.sign
                )));
            }
        }
        Ok(())
    }

    pub fn linking_number(&self, a: usize, b: usize) -> Int {
        let (i, j) = (a.min(b), a.max(b));
        self.braid_word
            .iter()
            .filter(|l| l.i == i && l.j == j)
            .map(|l| Int::from(l.sign))
            .sum()
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let mut m = Matrix::zeros(self.strands, self.strands);
        for (i, f) in self.framings.iter().enumerate() {
            m[(i, i)] = *f;
        }
        for l in &self.braid_word {
            let (a, b) = (l.i - 1, l.j - 1);
            m[(a, b)] += Int::from(l.sign);
            m[(b, a)] += Int::from(l.sign);
        }
        m
    }

    pub fn h1(&self) -> H1Invariants {
        h1_invariants(&self.linking_matrix())
    }

    /// Cancels adjacent inverse generators, as in the pure braid group.
    pub fn free_reduce_braid(&mut self) {
        let mut out: Vec<BraidLetter> = Vec::with_capacity(self.braid_word.len());
        for l in self.braid_word.drain(..) {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        self.braid_word = out;
    }

    /// Shift the linking of strands `a`, `b` by `delta`, appending letters.
    fn shift_linking(&mut self, a: usize, b: usize, delta: Int) {
        let sign = if delta > 0 { 1 } else { -1 };
        for _ in 0..delta.unsigned_abs() {
            self.braid_word.push(BraidLetter::new(a, b, sign));
        }
    }

    fn check_component(&self, c: usize) -> Result<()> {
        if c == 0 || c > self.strands {
            return Err(Error::InvalidMove(format!(
                "component {c} out of range 1..={}",
                self.strands
            )));
        }
        Ok(())
    }

    /// Adds an `eps`-framed unknot encircling the strands of `region` once
    /// each. Region framings and pairwise linkings shift by `eps`.
    pub fn blow_up(&self, region: &BTreeSet<usize>, eps: i8) -> Result<(Self, MoveRecord)> {
        if region.is_empty() {
            return Err(Error::InvalidMove("blow-up region is empty".into()));
        }
        if eps != 1 && eps != -1 {
            return Err(Error::InvalidMove(format!("blow-up sign {eps} is not ±1")));
        }
        for &c in region {
            self.check_component(c)?;
        }
        let e = Int::from(eps);
        let mut d = self.clone();
        let members: Vec<usize> = region.iter().copied().collect();
        for (x, &a) in members.iter().enumerate() {
            d.framings[a - 1] += e;
            for &b in &members[x + 1..] {
                d.shift_linking(a, b, e);
            }
        }
        d.strands += 1;
        d.framings.push(e);
        for &a in &members {
            d.braid_word.push(BraidLetter::new(a, d.strands, 1));
        }
        let rec = MoveRecord::new(
            format!("blow_up(region={members:?}, eps={eps})"),
            self,
            &d,
        );
        Ok((d, rec))
    }

    /// Removes a `±1`-framed component `c`. With `v` its linking vector,
    /// framings become `f_i - eps v_i^2` and linkings `lk_ij - eps v_i v_j`.
    pub fn blow_down(&self, c: usize) -> Result<(Self, MoveRecord)> {
        self.check_component(c)?;
        let eps = self.framings[c - 1];
        if eps != 1 && eps != -1 {
            return Err(Error::InvalidMove(format!(
                "component {c} has framing {eps}; blow-down needs ±1"
            )));
        }
        let v: Vec<Int> = (1..=self.strands)
            .map(|i| if i == c { 0 } else { self.linking_number(i, c) })
            .collect();

        let reindex = |i: usize| if i > c { i - 1 } else { i };
        let mut d = FramedBraidDiagram {
            strands: self.strands - 1,
            braid_word: self
                .braid_word
                .iter()
                .filter(|l| l.i != c && l.j != c)
                .map(|l| BraidLetter::new(reindex(l.i), reindex(l.j), l.sign))
                .collect(),
            framings: self
                .framings
                .iter()
                .enumerate()
                .filter(|(i, _)| i + 1 != c)
                .map(|(_, f)| *f)
                .collect(),
        };
        let others: Vec<usize> = (1..=self.strands).filter(|&i| i != c).collect();
        for &a in &others {
            d.framings[reindex(a) - 1] -= eps * v[a - 1] * v[a - 1];
        }
        // reverse pair order so a preceding blow-up cancels letter by letter
        let mut pairs = Vec::new();
        for (x, &a) in others.iter().enumerate() {
            for &b in &others[x + 1..] {
                pairs.push((a, b));
            }
        }
        for &(a, b) in pairs.iter().rev() {
            let delta = -eps * v[a - 1] * v[b - 1];
            if delta != 0 {
                d.shift_linking(reindex(a), reindex(b), delta);
            }
        }
        d.free_reduce_braid();
        let rec = MoveRecord::new(format!("blow_down(component={c})"), self, &d);
        Ok((d, rec))
    }

    /// `t` full twists of the strands passing through unknot component `c`.
    /// The new coefficient of `c` is `f / (1 + t f)`, so the move stays in
    /// integer framings only when `1 + t f = ±1`; other strands pick up
    /// `t lk_ic^2` on their framings and `t lk_ic lk_jc` on their linkings.
    pub fn rolfsen_twist(&self, c: usize, t: Int) -> Result<(Self, MoveRecord)> {
        self.check_component(c)?;
        let f = self.framings[c - 1];
        let denom = 1 + t * f;
        if denom != 1 && denom != -1 {
            return Err(Error::InvalidMove(format!(
                "Rolfsen twist by {t} on a {f}-framed component leaves integer framings"
            )));
        }
        let v: Vec<Int> = (1..=self.strands)
            .map(|i| if i == c { 0 } else { self.linking_number(i, c) })
            .collect();
        let mut d = self.clone();
        d.framings[c - 1] = f / denom;
        let others: Vec<usize> = (1..=self.strands).filter(|&i| i != c).collect();
        for (x, &a) in others.iter().enumerate() {
            d.framings[a - 1] += t * v[a - 1] * v[a - 1];
            for &b in &others[x + 1..] {
                let delta = t * v[a - 1] * v[b - 1];
                if delta != 0 {
                    d.shift_linking(a, b, delta);
                }
            }
        }
        d.free_reduce_braid();
        let rec = MoveRecord::new(format!("rolfsen_twist(component={c}, t={t})"), self, &d);
        Ok((d, rec))
    }

    /// Planar open book read off from the braid and framings.
    pub fn to_planar_open_book(&self) -> Result<PlanarOpenBook> {
        self.validate()?;
        if self.strands == 0 {
            return Ok(PlanarOpenBook::Disk);
        }
        let page = PlanarPage::new(self.strands)?;
        let mut letters = Vec::new();
        for l in &self.braid_word {
            letters.push(Letter::twist(
                CurveClass::new([l.i, l.j])?,
                -Int::from(l.sign),
            ));
        }
        for (i, f) in self.framings.iter().enumerate() {
            if *f != 0 {
                letters.push(Letter::twist(CurveClass::new([i + 1])?, -f));
            }
        }
        Ok(PlanarOpenBook::Planar(TwistWord::new(page, letters)?))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut strands: Option<usize> = None;
        let mut framings: Option<Vec<Int>> = None;
        let mut word = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = n + 1;
            let mut toks = line.split_whitespace();
            let head = toks.next().unwrap_or_default();
            let rest: Vec<&str> = toks.collect();
            match head {
                "strands" => {
                    let [s] = rest[..] else {
                        return Err(parse_err(lineno, "expected `strands n`"));
                    };
                    strands = Some(s.parse().map_err(|e| parse_err(lineno, format!("{e}")))?);
                }
                "framings" => {
                    framings = Some(
                        rest.iter()
                            .map(|t| t.parse::<Int>())
                            .collect::<std::result::Result<_, _>>()
                            .map_err(|e| parse_err(lineno, format!("{e}")))?,
                    );
                }
                "A" => {
                    let [i, j, s] = rest[..] else {
                        return Err(parse_err(lineno, "expected `A i j ±1`"));
                    };
                    let num = |t: &str| -> Result<i64> {
                        t.parse::<i64>().map_err(|e| parse_err(lineno, format!("{t:?}: {e}")))
                    };
                    let (i, j, s) = (num(i)?, num(j)?, num(s)?);
                    if i < 1 || j < 1 || (s != 1 && s != -1) {
                        return Err(parse_err(lineno, "indices must be positive and sign ±1"));
                    }
                    if i >= j {
                        return Err(parse_err(lineno, "braid letters need i < j"));
                    }
                    word.push(BraidLetter::new(i as usize, j as usize, s as i8));
                }
                other => return Err(parse_err(lineno, format!("unknown directive {other:?}"))),
            }
        }
        let strands = strands.ok_or_else(|| parse_err(1, "missing `strands` line"))?;
        let framings = framings.unwrap_or_default();
        FramedBraidDiagram::new(strands, word, framings)
    }
}

impl fmt::Display for FramedBraidDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "strands {}", self.strands)?;
        write!(f, "framings")?;
        for fr in &self.framings {
            write!(f, " {fr}")?;
        }
        writeln!(f)?;
        for l in &self.braid_word {
            writeln!(f, "A {} {} {}", l.i, l.j, l.sign)?;
        }
        Ok(())
    }
}

pub fn linking_matrix(d: &FramedBraidDiagram) -> LinkingMatrix {
    d.linking_matrix()
}

/// First homology of the surgered manifold, the cokernel of the linking matrix.
pub fn h1_invariants(m: &LinkingMatrix) -> H1Invariants {
    H1Invariants::of_matrix(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarOpenBook {
    /// Trivial open book of `S^3` with disk pages.
    Disk,
    Planar(TwistWord),
}

impl PlanarOpenBook {
    pub fn word(&self) -> Option<&TwistWord> {
        match self {
            PlanarOpenBook::Disk => None,
            PlanarOpenBook::Planar(w) => Some(w),
        }
    }
}

/// One audited move: what was applied and the homology on either side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    #[serde(rename = "move")]
    pub step: String,
    pub before: H1Invariants,
    pub after: H1Invariants,
}

impl MoveRecord {
    fn new(step: String, before: &FramedBraidDiagram, after: &FramedBraidDiagram) -> Self {
        MoveRecord {
            step,
            before: before.h1(),
            after: after.h1(),
        }
    }

    /// The move must not change the manifold, so at least its H1 must agree.
    pub fn holds(&self) -> bool {
        self.before == self.after
    }
}

/// A move requested from a moves file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    BlowUp { region: Vec<usize>, eps: i8 },
    BlowDown { component: usize },
    RolfsenTwist { component: usize, t: Int },
}

impl Move {
    pub fn apply(&self, d: &FramedBraidDiagram) -> Result<(FramedBraidDiagram, MoveRecord)> {
        match self {
            Move::BlowUp { region, eps } => d.blow_up(&region.iter().copied().collect(), *eps),
            Move::BlowDown { component } => d.blow_down(*component),
            Move::RolfsenTwist { component, t } => d.rolfsen_twist(*component, *t),
        }
    }

    /// Text form, one per line: `blowup EPS i j ...`, `blowdown c`,
    /// `rolfsen c t`.
    pub fn parse_list(text: &str) -> Result<Vec<Move>> {
        let mut out = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = n + 1;
            let toks: Vec<&str> = line.split_whitespace().collect();
            let int = |t: &str| -> Result<i64> {
                t.parse::<i64>()
                    .map_err(|e| parse_err(lineno, format!("{t:?}: {e}")))
            };
            let idx = |t: &str| -> Result<usize> {
                t.parse::<usize>()
                    .map_err(|e| parse_err(lineno, format!("{t:?}: {e}")))
            };
            let mv = match toks[0] {
                "blowup" if toks.len() >= 3 => Move::BlowUp {
                    eps: int(toks[1])? as i8,
                    region: toks[2..].iter().map(|t| idx(t)).collect::<Result<_>>()?,
                },
                "blowdown" if toks.len() == 2 => Move::BlowDown {
                    component: idx(toks[1])?,
                },
                "rolfsen" if toks.len() == 3 => Move::RolfsenTwist {
                    component: idx(toks[1])?,
                    t: int(toks[2])?,
                },
                _ => return Err(parse_err(lineno, format!("cannot parse move {line:?}"))),
            };
            out.push(mv);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(n: usize, word: &[(usize, usize, i8)], fr: &[Int]) -> FramedBraidDiagram {
        FramedBraidDiagram::new(
            n,
            word.iter().map(|&(i, j, s)| BraidLetter::new(i, j, s)).collect(),
            fr.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn linking_matrix_examples() {
        assert_eq!(diag(1, &[], &[-7]).linking_matrix().to_rows(), vec![vec![-7]]);
        assert_eq!(
            diag(2, &[(1, 2, 1)], &[-4, -4]).linking_matrix().to_rows(),
            vec![vec![-4, 1], vec![1, -4]]
        );
        let m = diag(3, &[(1, 2, -1), (1, 3, -1), (2, 3, -1)], &[-2, -2, -2]).linking_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m[(i, j)], if i == j { -2 } else { -1 });
            }
        }
        assert!(m.is_symmetric());
    }

    #[test]
    fn h1_examples() {
        let z7 = H1Invariants { torsion: vec![7], free_rank: 0 };
        assert_eq!(h1_invariants(&Matrix::from_rows(vec![vec![-7]])), z7);
        assert_eq!(
            h1_invariants(&Matrix::from_rows(vec![vec![-4, 1], vec![1, -2]])),
            z7
        );
        let zero = h1_invariants(&Matrix::zeros(1, 1));
        assert_eq!(zero, H1Invariants { torsion: vec![], free_rank: 1 });
        // slid diagram of [-2,-2,-2] presents Z/4
        let slid = diag(3, &[(1, 2, -1), (1, 3, -1), (2, 3, -1)], &[-2, -2, -2]);
        assert_eq!(slid.h1().order(), Some(4));
    }

    #[test]
    fn isolated_blow_down() {
        let d = diag(3, &[(1, 2, 1), (1, 2, 1)], &[-3, 5, 1]);
        let (e, rec) = d.blow_down(3).unwrap();
        assert_eq!(e, diag(2, &[(1, 2, 1), (1, 2, 1)], &[-3, 5]));
        assert!(rec.holds());
    }

    #[test]
    fn blow_up_then_down_is_identity() {
        let d = diag(3, &[(1, 2, 1), (2, 3, -1)], &[-3, 2, 0]);
        for eps in [1, -1] {
            let (up, r1) = d.blow_up(&BTreeSet::from([1, 3]), eps).unwrap();
            assert!(r1.holds());
            let (down, r2) = up.blow_down(4).unwrap();
            assert!(r2.holds());
            assert_eq!(down, d);
        }
    }

    #[test]
    fn move_errors() {
        let d = diag(2, &[], &[3, 0]);
        assert!(matches!(d.blow_down(1), Err(Error::InvalidMove(_))));
        assert!(matches!(d.blow_down(5), Err(Error::InvalidMove(_))));
        assert!(d.blow_up(&BTreeSet::new(), 1).is_err());
        assert!(d.blow_up(&BTreeSet::from([3]), 1).is_err());
        assert!(d.rolfsen_twist(1, 1).is_err());
    }

    #[test]
    fn rolfsen_on_zero_framed_unknot() {
        let d = diag(3, &[(1, 3, 1), (2, 3, 1), (2, 3, 1)], &[-2, 1, 0]);
        let (e, rec) = d.rolfsen_twist(3, 2).unwrap();
        assert!(rec.holds());
        assert_eq!(e.framings, vec![-2 + 2, 1 + 2 * 4, 0]);
        assert_eq!(e.linking_number(1, 2), 2 * 2);
    }

    #[test]
    fn rolfsen_flips_unit_framing() {
        let d = diag(2, &[(1, 2, 1)], &[3, 1]);
        let (e, rec) = d.rolfsen_twist(2, -2).unwrap();
        assert_eq!(e.framings, vec![1, -1]);
        assert!(rec.holds(), "{rec:?}");
    }

    #[test]
    fn open_book_examples() {
        let one = diag(1, &[], &[-7]).to_planar_open_book().unwrap();
        assert_eq!(one.word().unwrap().to_string(), "T{1}^7");

        let empty = diag(0, &[], &[]).to_planar_open_book().unwrap();
        assert_eq!(empty, PlanarOpenBook::Disk);

        let two = diag(2, &[(1, 2, 1)], &[0, 0]).to_planar_open_book().unwrap();
        let w = two.word().unwrap();
        assert_eq!(w.to_string(), "T{1,2}^-1");
        assert_eq!(w.exponent_vector().0, vec![-1, -1]);
        assert_eq!(w.parity_vector().as_slice(), &[1, 1]);
    }

    #[test]
    fn lens_p1_open_book_parity() {
        for p in 2..30 {
            let w = diag(1, &[], &[-p]).to_planar_open_book().unwrap();
            let spin = w.word().unwrap().parity_vector().is_zero();
            assert_eq!(spin, p % 2 == 0);
        }
    }

    #[test]
    fn text_format_round_trip() {
        let text = "strands 3\nframings -2 -2 -2\nA 1 2 -1\nA 1 3 -1\nA 2 3 -1\n";
        let d = FramedBraidDiagram::parse(text).unwrap();
        assert_eq!(d.to_string(), text);
        assert!(FramedBraidDiagram::parse("strands 2\nframings 1 1\nA 2 1 1").is_err());
        assert!(FramedBraidDiagram::parse("strands 2\nframings 1").is_err());
        assert!(FramedBraidDiagram::parse("framings 1").is_err());
        assert!(FramedBraidDiagram::parse("strands 2\nframings 0 0\nA 1 3 1").is_err());
    }

    #[test]
    fn moves_file() {
        let mv = Move::parse_list("blowup -1 1 2\nrolfsen 3 2\nblowdown 3\n").unwrap();
        assert_eq!(
            mv,
            vec![
                Move::BlowUp { region: vec![1, 2], eps: -1 },
                Move::RolfsenTwist { component: 3, t: 2 },
                Move::BlowDown { component: 3 },
            ]
        );
        assert!(Move::parse_list("twist 1").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_diagram() -> impl Strategy<Value = FramedBraidDiagram> {
            (1usize..=5).prop_flat_map(|n| {
                let letters = proptest::collection::vec(
                    (1..=n, 1..=n, prop_oneof![Just(1i8), Just(-1i8)]),
                    0..8,
                );
                (Just(n), letters, proptest::collection::vec(-9i64..=9, n)).prop_map(
                    |(n, ls, fr)| {
                        let word = ls
                            .into_iter()
                            .filter(|(a, b, _)| a != b)
                            .map(|(a, b, s)| BraidLetter::new(a, b, s))
                            .collect();
                        FramedBraidDiagram::new(n, word, fr).unwrap()
                    },
                )
            })
        }

        proptest! {
            #[test]
            fn linking_symmetric_and_order_free(d in arb_diagram(), seed in any::<usize>()) {
                let m = d.linking_matrix();
                prop_assert!(m.is_symmetric());
                let mut shuffled = d.clone();
                if !shuffled.braid_word.is_empty() {
                    let len = shuffled.braid_word.len();
                    shuffled.braid_word.rotate_left(seed % len);
                    shuffled.braid_word.reverse();
                }
                prop_assert_eq!(shuffled.linking_matrix(), m);
            }

            #[test]
            fn blow_up_preserves_h1(d in arb_diagram(), mask in 1u32..32, pos in any::<bool>()) {
                let region: BTreeSet<usize> = (1..=d.strands).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                prop_assume!(!region.is_empty());
                let (_, rec) = d.blow_up(&region, if pos { 1 } else { -1 }).unwrap();
                prop_assert!(rec.holds());
            }

            #[test]
            fn canceling_pair_keeps_parity(d in arb_diagram(), pos in any::<usize>(), a in 1usize..6, b in 1usize..6) {
                prop_assume!(a != b && a.max(b) <= d.strands);
                let mut e = d.clone();
                let at = pos % (e.braid_word.len() + 1);
                e.braid_word.insert(at, BraidLetter::new(a, b, 1));
                e.braid_word.insert(at + 1, BraidLetter::new(a, b, -1));
                let p = |x: &FramedBraidDiagram| x.to_planar_open_book().unwrap().word().unwrap().parity_vector();
                prop_assert_eq!(p(&e), p(&d));
            }

            #[test]
            fn parse_display_round_trip(d in arb_diagram()) {
                prop_assert_eq!(FramedBraidDiagram::parse(&d.to_string()).unwrap(), d);
            }
        }
    }
}
