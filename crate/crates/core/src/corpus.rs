//! Regression corpus: JSON fixtures with expected results, one case per file.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourman::{evaluate_open_book, FourManifoldForm, MonodromyForm, PageForm};
use crate::intmat::H1Invariants;
use crate::lens_tools::{cf_expand, lens_embedding_target, psi_parity};
use crate::pi1_tools::{abelianization, page_for_presentation, pi1_of_open_book, GroupPresentation};
use crate::planar_mcg::{PlanarPage, TwistWord};
use crate::spun::{embedding_target, s4_certificate};
use crate::surgery_calc::{FramedBraidDiagram, Move, PlanarOpenBook};
use crate::Int;

pub const CORPUS_VERSION: u32 = 1;

/// Corpus shipped with the crate.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(format!("v{CORPUS_VERSION}"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    #[serde(flatten)]
    pub case: Case,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Case {
    Word {
        page: usize,
        word: String,
        expect_exponents: Vec<i64>,
    },
    Lens {
        p: Int,
        q: Int,
        #[serde(default)]
        expect_psi: Option<Vec<u8>>,
        expect: FourManifoldForm,
    },
    Embed {
        page: usize,
        word: String,
        #[serde(default)]
        expect_raw: Option<FourManifoldForm>,
        expect_normalized: FourManifoldForm,
        #[serde(default)]
        expect_spin: Option<bool>,
    },
    CertifyS4 {
        page: usize,
        word: String,
        expect_certified: bool,
    },
    Surgery {
        diagram: String,
        #[serde(default)]
        moves: Vec<Move>,
        expect_h1: H1Invariants,
        #[serde(default)]
        expect_open_book: Option<String>,
    },
    Pi1 {
        presentation: String,
        expect_abelianization: H1Invariants,
    },
    Evaluate {
        page: PageForm,
        monodromy: MonodromyForm,
        expect: FourManifoldForm,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn word(page: usize, text: &str) -> Result<TwistWord> {
    TwistWord::parse(PlanarPage::new(page)?, text)
}

fn check(ok: bool, got: impl std::fmt::Debug, want: impl std::fmt::Debug) -> (bool, String) {
    if ok {
        (true, format!("{got:?}"))
    } else {
        (false, format!("got {got:?}, expected {want:?}"))
    }
}

impl Case {
    /// Runs the case. `Err` means the fixture itself is malformed.
    pub fn run(&self) -> Result<(bool, String)> {
        Ok(match self {
            Case::Word { page, word: w, expect_exponents } => {
                let got = word(*page, w)?.exponent_vector().0;
                check(&got == expect_exponents, got, expect_exponents)
            }
            Case::Lens { p, q, expect_psi, expect } => {
                let got = lens_embedding_target(*p, *q)?;
                let psi = psi_parity(&cf_expand(*p, *q)?);
                let psi_ok = expect_psi.as_ref().is_none_or(|e| e.as_slice() == psi.as_slice());
                check(got == *expect && psi_ok, (got.to_string(), psi.to_string()), expect.to_string())
            }
            Case::Embed { page, word: w, expect_raw, expect_normalized, expect_spin } => {
                let r = embedding_target(&word(*page, w)?)?;
                let ok = expect_raw.is_none_or(|e| e == r.raw)
                    && r.normalized == *expect_normalized
                    && expect_spin.is_none_or(|s| s == r.spin);
                check(
                    ok,
                    (r.raw.to_string(), r.normalized.to_string(), r.spin),
                    (expect_raw.map(|e| e.to_string()), expect_normalized.to_string(), expect_spin),
                )
            }
            Case::CertifyS4 { page, word: w, expect_certified } => {
                let c = s4_certificate(&word(*page, w)?)?;
                check(c.certified == *expect_certified, c.a_exponents, expect_certified)
            }
            Case::Surgery { diagram, moves, expect_h1, expect_open_book } => {
                let mut d = FramedBraidDiagram::parse(diagram)?;
                let start = d.h1();
                let mut audit = true;
                for m in moves {
                    let (next, rec) = m.apply(&d)?;
                    audit &= rec.holds();
                    d = next;
                }
                let book = match FramedBraidDiagram::parse(diagram)?.to_planar_open_book()? {
                    PlanarOpenBook::Disk => "disk".to_string(),
                    PlanarOpenBook::Planar(w) => w.to_string(),
                };
                let ok = audit
                    && start == *expect_h1
                    && d.h1() == *expect_h1
                    && expect_open_book.as_ref().is_none_or(|e| *e == book);
                check(ok, (start.to_string(), d.h1().to_string(), book), (expect_h1.to_string(), expect_open_book))
            }
            Case::Pi1 { presentation, expect_abelianization } => {
                let g = GroupPresentation::parse(presentation)?;
                let back = pi1_of_open_book(&page_for_presentation(&g));
                let h = abelianization(&back);
                let ok = back.same_up_to_renaming(&g.free_reduce()) && h == *expect_abelianization;
                check(ok, h.to_string(), expect_abelianization.to_string())
            }
            Case::Evaluate { page, monodromy, expect } => {
                let got = evaluate_open_book(page, monodromy)?;
                check(got == *expect, got.to_string(), expect.to_string())
            }
        })
    }
}

impl Fixture {
    pub fn run(&self) -> Outcome {
        let (passed, detail) = if self.version != CORPUS_VERSION {
            (false, format!("fixture version {} unsupported", self.version))
        } else {
            self.case.run().unwrap_or_else(|e| (false, format!("error: {e}")))
        };
        Outcome {
            name: self.name.clone(),
            passed,
            detail,
        }
    }
}

/// Loads every `*.json` file in `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", dir.display()));
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = fs::read_to_string(p).map_err(io)?;
            serde_json::from_str(&text).map_err(|e| Error::Parse {
                line: e.line(),
                msg: format!("{}: {e}", p.display()),
            })
        })
        .collect()
}

pub fn run_dir(dir: &Path) -> Result<Vec<Outcome>> {
    Ok(load_dir(dir)?.iter().map(Fixture::run).collect())
}
