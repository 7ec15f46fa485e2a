//! Four-dimensional open books with prescribed fundamental group.
//!
//! For `G = <x_1..x_g | r_1..r_k>` the page is `♮^g (S^1 x D^2) ♮^k (S^2 x [0,1])`
//! and the monodromy pushes the `j`-th sphere boundary around a curve
//! freely homotopic to `r_j`. The push is supported away from the core
//! circles, so those give no relations, and the arc to the `j`-th sphere
//! picks up exactly `r_j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Result};
use crate::intmat::{H1Invariants, Matrix};
use crate::Int;

/// Word in a free group. Letter `k > 0` is the `k`-th generator, `-k` its
/// inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeWord(pub Vec<i32>);

impl FreeWord {
    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn free_reduce(&self) -> FreeWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    /// Free reduction followed by stripping inverse pairs at the two ends.
    pub fn cyclic_reduce(&self) -> FreeWord {
        let w = self.free_reduce().0;
        let (mut lo, mut hi) = (0, w.len());
        while hi - lo >= 2 && w[lo] == -w[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        FreeWord(w[lo..hi].to_vec())
    }

    pub fn exponent_sums(&self, generators: usize) -> Vec<Int> {
        let mut v = vec![0; generators];
        for &l in &self.0 {
            v[l.unsigned_abs() as usize - 1] += Int::from(l.signum());
        }
        v
    }

    fn write_with(&self, f: &mut fmt::Formatter<'_>, symbol: char) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let upper = symbol.to_ascii_uppercase();
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let s = if *l > 0 { symbol } else { upper };
            write!(f, "{s}{}", l.unsigned_abs())?;
        }
        Ok(())
    }

    /// Parses `x1 x2 X1`, `x1x2X1`, or `1` for the empty word. Lowercase
    /// letters are generators, uppercase their inverses; the letter itself
    /// is otherwise ignored.
    pub fn parse(text: &str) -> std::result::Result<FreeWord, String> {
        let text = text.trim();
        if text == "1" {
            return Ok(FreeWord::default());
        }
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if !c.is_ascii_alphabetic() {
                return Err(format!("unexpected {c:?}"));
            }
            let start = i + 1;
            let mut end = start;
            while end < chars.len() && chars[end].is_ascii_digit() {
                end += 1;
            }
            if end == start {
                return Err(format!("generator letter {c:?} needs an index"));
            }
            let idx: String = chars[start..end].iter().collect();
            let idx: i32 = idx.parse().map_err(|e| format!("{e}"))?;
            if idx == 0 {
                return Err("generator indices are 1-based".into());
            }
            out.push(if c.is_ascii_uppercase() { -idx } else { idx });
            i = end;
        }
        Ok(FreeWord(out))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupPresentation {
    /// Display letter for generators (`x` for inputs, `a` for recovered groups).
    pub symbol: char,
    pub generators: usize,
    pub relators: Vec<FreeWord>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<FreeWord>) -> Self {
        GroupPresentation {
            symbol: 'x',
            generators,
            relators,
        }
    }

    pub fn free(generators: usize) -> Self {
        Self::new(generators, Vec::new())
    }

    /// Relators freely and cyclically reduced. Trivial relators are kept so
    /// the relator count is stable.
    pub fn simplify(&self) -> Self {
        GroupPresentation {
            relators: self.relators.iter().map(FreeWord::cyclic_reduce).collect(),
            ..self.clone()
        }
    }

    pub fn free_reduce(&self) -> Self {
        GroupPresentation {
            relators: self.relators.iter().map(FreeWord::free_reduce).collect(),
            ..self.clone()
        }
    }

    /// Equality up to renaming the generators.
    pub fn same_up_to_renaming(&self, other: &GroupPresentation) -> bool {
        self.generators == other.generators && self.relators == other.relators
    }

    pub fn relator_matrix(&self) -> Matrix<Int> {
        let rows = self
            .relators
            .iter()
            .map(|r| r.exponent_sums(self.generators))
            .collect::<Vec<_>>();
        if rows.is_empty() {
            Matrix::zeros(0, self.generators)
        } else {
            Matrix::from_rows(rows)
        }
    }

    /// `gens g` followed by one relator per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut generators: Option<usize> = None;
        let mut relators = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = n + 1;
            if generators.is_none() {
                let g = line
                    .strip_prefix("gens")
                    .ok_or_else(|| parse_err(lineno, "expected `gens g` first"))?
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| parse_err(lineno, format!("{e}")))?;
                generators = Some(g);
                continue;
            }
            let w = FreeWord::parse(line).map_err(|m| parse_err(lineno, m))?;
            if w.max_generator() > generators.unwrap() {
                return Err(parse_err(
                    lineno,
                    format!("relator uses generator {} of {}", w.max_generator(), generators.unwrap()),
                ));
            }
            relators.push(w);
        }
        let generators = generators.ok_or_else(|| parse_err(1, "missing `gens` line"))?;
        Ok(GroupPresentation::new(generators, relators))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("gens {}\n", self.generators);
        for r in &self.relators {
            s.push_str(&FreeWordDisplay(r, self.symbol).to_string());
            s.push('\n');
        }
        s
    }
}

struct FreeWordDisplay<'a>(&'a FreeWord, char);

impl fmt::Display for FreeWordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_with(f, self.1)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generators)
            .map(|i| format!("{}{i}", self.symbol))
            .collect();
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| FreeWordDisplay(r, self.symbol).to_string())
            .collect();
        write!(f, "<{} | {}>", gens.join(", "), rels.join(", "))
    }
}

/// `♮^g (S^1 x D^2) ♮^k (S^2 x [0,1])` with sphere `j` pushed along `γ_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PushPage {
    pub handle_count: usize,
    pub sphere_count: usize,
    pub push_curves: Vec<FreeWord>,
}

impl fmt::Display for PushPage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "page ♮^{}(S^1xD^2) ♮^{}(S^2x[0,1]), monodromy",
            self.handle_count, self.sphere_count
        )?;
        if self.push_curves.is_empty() {
            return write!(f, " id");
        }
        for (j, g) in self.push_curves.iter().enumerate() {
            write!(f, " rho(S{}, {})", j + 1, FreeWordDisplay(g, 'x'))?;
        }
        Ok(())
    }
}

pub fn page_for_presentation(g: &GroupPresentation) -> PushPage {
    PushPage {
        handle_count: g.generators,
        sphere_count: g.relators.len(),
        push_curves: g.relators.clone(),
    }
}

/// Presentation of `π_1(OB(page, φ))`: generator relations `a_j^{-1} φ_*(a_j)`
/// are trivial and each arc relation reduces to its push curve.
pub fn pi1_of_open_book(p: &PushPage) -> GroupPresentation {
    GroupPresentation {
        symbol: 'a',
        generators: p.handle_count,
        relators: p.push_curves.iter().map(FreeWord::free_reduce).collect(),
    }
}

pub fn abelianization(g: &GroupPresentation) -> H1Invariants {
    H1Invariants::of_matrix(&g.relator_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn page_examples() {
        let g = GroupPresentation::parse("gens 1\nx1 x1\n").unwrap();
        let p = page_for_presentation(&g);
        assert_eq!((p.handle_count, p.sphere_count), (1, 1));
        assert_eq!(p.push_curves, vec![FreeWord(vec![1, 1])]);

        let g = GroupPresentation::parse("gens 2\nx1 x2 X1 X2").unwrap();
        let p = page_for_presentation(&g);
        assert_eq!((p.handle_count, p.sphere_count), (2, 1));
        assert_eq!(p.push_curves[0], FreeWord(vec![1, 2, -1, -2]));

        let p = page_for_presentation(&GroupPresentation::free(0));
        assert_eq!((p.handle_count, p.sphere_count), (0, 0));
    }

    #[test]
    fn pi1_examples() {
        let p = PushPage {
            handle_count: 1,
            sphere_count: 1,
            push_curves: vec![w("x1x1")],
        };
        let g = pi1_of_open_book(&p);
        assert_eq!(g.to_string(), "<a1 | a1 a1>");

        let free = pi1_of_open_book(&PushPage {
            handle_count: 2,
            sphere_count: 0,
            push_curves: vec![],
        });
        assert_eq!(free.to_string(), "<a1, a2 | >");
        assert_eq!(abelianization(&free), H1Invariants { torsion: vec![], free_rank: 2 });
    }

    #[test]
    fn abelianization_examples() {
        let z2 = abelianization(&GroupPresentation::new(1, vec![w("x1 x1")]));
        assert_eq!(z2, H1Invariants { torsion: vec![2], free_rank: 0 });
        let z_sq = abelianization(&GroupPresentation::new(2, vec![w("x1 x2 X1 X2")]));
        assert_eq!(z_sq, H1Invariants { torsion: vec![], free_rank: 2 });
        let g = GroupPresentation::new(2, vec![w("x1x1 x2x2x2x2x2x2"), w("x1x1x1x1")]);
        assert_eq!(g.relator_matrix().to_rows(), vec![vec![2, 6], vec![4, 0]]);
        assert_eq!(abelianization(&g).torsion, vec![2, 12]);
    }

    #[test]
    fn reductions() {
        assert_eq!(w("x1 X1 x2").free_reduce(), w("x2"));
        assert_eq!(w("x1 x2 X1").cyclic_reduce(), w("x2"));
        assert_eq!(w("x1 x2 X2 X1").free_reduce(), FreeWord::default());
        for s in ["x1 x2", "x1 x1 X2", "x3"] {
            assert_eq!(w(s).free_reduce(), w(s));
            assert_eq!(w(s).cyclic_reduce(), w(s));
        }
    }

    #[test]
    fn parse_errors() {
        assert!(GroupPresentation::parse("x1 x1").is_err());
        assert!(GroupPresentation::parse("gens 1\nx2").is_err());
        assert!(GroupPresentation::parse("gens 1\nx").is_err());
        assert!(GroupPresentation::parse("gens 1\nx0").is_err());
        assert!(GroupPresentation::parse("").is_err());
        let g = GroupPresentation::parse("gens 2\n1\n").unwrap();
        assert!(g.relators[0].is_empty());
    }

    #[test]
    fn text_round_trip() {
        let g = GroupPresentation::new(3, vec![w("x1 X3 x2"), FreeWord::default()]);
        assert_eq!(GroupPresentation::parse(&g.to_text()).unwrap(), g);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_presentation() -> impl Strategy<Value = GroupPresentation> {
            (1usize..=5).prop_flat_map(|g| {
                let letter = (1..=g as i32, any::<bool>()).prop_map(|(i, inv)| if inv { -i } else { i });
                let word = proptest::collection::vec(letter, 0..=12).prop_map(FreeWord);
                (Just(g), proptest::collection::vec(word, 0..=5))
                    .prop_map(|(g, rels)| GroupPresentation::new(g, rels))
            })
        }

        proptest! {
            #[test]
            fn round_trip(g in arb_presentation()) {
                let back = pi1_of_open_book(&page_for_presentation(&g));
                prop_assert!(back.same_up_to_renaming(&g.free_reduce()));
            }

            #[test]
            fn reductions_idempotent(g in arb_presentation()) {
                for r in &g.relators {
                    prop_assert_eq!(r.free_reduce().free_reduce(), r.free_reduce());
                    prop_assert_eq!(r.cyclic_reduce().cyclic_reduce(), r.cyclic_reduce());
                }
            }

            #[test]
            fn abelianization_invariant(g in arb_presentation(), rot in any::<usize>()) {
                let base = abelianization(&g);
                prop_assert_eq!(&abelianization(&g.simplify()), &base);
                let mut shuffled = g.clone();
                if !shuffled.relators.is_empty() {
                    let len = shuffled.relators.len();
                    shuffled.relators.rotate_left(rot % len);
                }
                prop_assert_eq!(abelianization(&shuffled), base);
            }

            #[test]
            fn no_relators_is_free(g in 0usize..8) {
                let h = abelianization(&pi1_of_open_book(&page_for_presentation(&GroupPresentation::free(g))));
                prop_assert_eq!(h, H1Invariants { torsion: vec![], free_rank: g });
            }
        }
    }
}
