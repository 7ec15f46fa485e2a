//! Planar open books, spun embeddings and the surgery bookkeeping around them.
//!
//! Arithmetic is exact throughout. Integer routines are generic over
//! [`intmat::IntScalar`]; the aliases below fix the default scalar.

pub mod corpus;
pub mod error;
pub mod fourman;
pub mod intmat;
pub mod lens_tools;
pub mod pi1_tools;
pub mod planar_mcg;
pub mod spun;
pub mod surgery_calc;
pub mod z2;

pub type Int = i64;
pub type Rational = num_rational::Ratio<Int>;
pub type IntMatrix = intmat::Matrix<Int>;

pub use error::{Error, Result};
pub use fourman::{evaluate_open_book, FourManifoldForm, MonodromyForm, PageForm};
pub use intmat::{H1Invariants, Matrix};
pub use lens_tools::{cf_eval, cf_expand, lens_embedding_target, lens_open_book, slid_diagram, ContinuedFraction};
pub use pi1_tools::{abelianization, page_for_presentation, pi1_of_open_book, FreeWord, GroupPresentation, PushPage};
pub use planar_mcg::{CurveClass, PlanarPage, TwistWord};
pub use spun::{embedding_target, s4_certificate, spin_target};
pub use surgery_calc::{FramedBraidDiagram, LinkingMatrix, Move, MoveRecord};
pub use z2::Z2Vector;
