//! Open books whose pages are boundary connected sums of `S^m x [0,1]` and
//! `S^1 x D^m` pieces, evaluated to formal connected sums of sphere bundles.
//!
//! Evaluation is atom-wise: an untwisted sphere piece gives `S^2 x S^m`, an
//! odd twist gives the nontrivial bundle `S^2 ~x S^m`, a bare circle piece
//! gives `S^1 x S^{m+1}`, and a circle piece whose partner sphere is pushed
//! around its core contributes a sphere, which is dropped.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::z2::Z2Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "m")]
pub enum Atom {
    /// `S^m x [0,1]`
    SphereCyl(u32),
    /// `S^1 x D^m`
    CircleDisk(u32),
}

impl Atom {
    pub fn m(&self) -> u32 {
        match *self {
            Atom::SphereCyl(m) | Atom::CircleDisk(m) => m,
        }
    }
}

/// Boundary connected sum of atoms, all of dimension `dim + 1`. The empty
/// page is a disk.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PageForm {
    pub dim: u32,
    pub atoms: Vec<Atom>,
}

impl PageForm {
    pub fn new(dim: u32, atoms: Vec<Atom>) -> Result<Self> {
        let page = PageForm { dim, atoms };
        page.validate()?;
        Ok(page)
    }

    /// `♮^k (S^m x [0,1])`
    pub fn spheres(dim: u32, k: usize) -> Self {
        PageForm {
            dim,
            atoms: vec![Atom::SphereCyl(dim); k],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::Dimension("atoms need m >= 1".into()));
        }
        if let Some(a) = self.atoms.iter().find(|a| a.m() != self.dim) {
            return Err(Error::Dimension(format!(
                "atom {a:?} does not have m = {}",
                self.dim
            )));
        }
        Ok(())
    }

    pub fn sphere_count(&self) -> usize {
        self.atoms.iter().filter(|a| matches!(a, Atom::SphereCyl(_))).count()
    }

    pub fn circle_count(&self) -> usize {
        self.atoms.iter().filter(|a| matches!(a, Atom::CircleDisk(_))).count()
    }
}

/// Monodromy built from sphere twists and pushes. Twist exponents are listed
/// per sphere atom in page order; a push `(c, s)` drags sphere atom `s`
/// around the core of circle atom `c`. Both indices are 1-based within their
/// atom kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct MonodromyForm {
    pub twist_exponents: Vec<i64>,
    #[serde(default)]
    pub pushes: Vec<(usize, usize)>,
}

impl MonodromyForm {
    pub fn identity(spheres: usize) -> Self {
        MonodromyForm {
            twist_exponents: vec![0; spheres],
            pushes: Vec::new(),
        }
    }

    pub fn twists(exponents: Vec<i64>) -> Self {
        MonodromyForm {
            twist_exponents: exponents,
            pushes: Vec::new(),
        }
    }

    pub fn validate_on(&self, page: &PageForm) -> Result<()> {
        let (spheres, circles) = (page.sphere_count(), page.circle_count());
        if self.twist_exponents.len() != spheres {
            return Err(Error::InvalidMonodromy(format!(
                "{} twist exponents for {spheres} sphere atoms",
                self.twist_exponents.len()
            )));
        }
        let mut used_c = BTreeSet::new();
        let mut used_s = BTreeSet::new();
        for &(c, s) in &self.pushes {
            if c == 0 || c > circles || s == 0 || s > spheres {
                return Err(Error::InvalidMonodromy(format!(
                    "dangling push ({c}, {s}) on a page with {circles} circle and {spheres} sphere atoms"
                )));
            }
            if !used_c.insert(c) || !used_s.insert(s) {
                return Err(Error::InvalidMonodromy(format!(
                    "push ({c}, {s}) reuses an atom"
                )));
            }
        }
        Ok(())
    }
}

/// `(#^a S^1 x S^{m+1}) # (#^b S^2 x S^m) # (#^c S^2 ~x S^m)`. The empty
/// form is `S^{m+2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourManifoldForm {
    pub dim: u32,
    #[serde(rename = "s1xs")]
    pub s1_cross_sphere: usize,
    #[serde(rename = "trivial")]
    pub trivial_bundle: usize,
    #[serde(rename = "twisted")]
    pub twisted_bundle: usize,
}

impl FourManifoldForm {
    pub fn sphere(dim: u32) -> Self {
        FourManifoldForm {
            dim,
            s1_cross_sphere: 0,
            trivial_bundle: 0,
            twisted_bundle: 0,
        }
    }

    /// `W_{i,j}` in dimension `m + 2`.
    pub fn w(dim: u32, trivial: usize, twisted: usize) -> Self {
        FourManifoldForm {
            dim,
            s1_cross_sphere: 0,
            trivial_bundle: trivial,
            twisted_bundle: twisted,
        }
    }

    pub fn is_sphere(&self) -> bool {
        self.s1_cross_sphere == 0 && self.trivial_bundle == 0 && self.twisted_bundle == 0
    }

    pub fn is_spin(&self) -> bool {
        self.twisted_bundle == 0
    }

    pub fn summands(&self) -> usize {
        self.s1_cross_sphere + self.trivial_bundle + self.twisted_bundle
    }

    pub fn connect_sum(&self, other: &FourManifoldForm) -> Result<FourManifoldForm> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!(
                "cannot connect-sum dimensions {} and {}",
                self.dim + 2,
                other.dim + 2
            )));
        }
        Ok(FourManifoldForm {
            dim: self.dim,
            s1_cross_sphere: self.s1_cross_sphere + other.s1_cross_sphere,
            trivial_bundle: self.trivial_bundle + other.trivial_bundle,
            twisted_bundle: self.twisted_bundle + other.twisted_bundle,
        })
    }

    /// Canonical form. `S^2 ~x S^m # S^2 x S^m = S^2 ~x S^m # S^2 ~x S^m`, so
    /// once a twisted summand is present every trivial one is absorbed. No
    /// rule is applied when `S^1 x S^{m+1}` summands are present.
    pub fn normalize(&self) -> FourManifoldForm {
        let mut f = *self;
        if f.twisted_bundle >= 1 && f.s1_cross_sphere == 0 {
            f.twisted_bundle += f.trivial_bundle;
            f.trivial_bundle = 0;
        }
        f
    }

    pub fn equal(&self, other: &FourManifoldForm) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!(
                "forms of dimensions {} and {} are not comparable",
                self.dim + 2,
                other.dim + 2
            )));
        }
        Ok(self.normalize() == other.normalize())
    }
}

impl fmt::Display for FourManifoldForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.dim;
        if self.is_sphere() {
            return write!(f, "S^{}", m + 2);
        }
        let mut parts = Vec::new();
        let mut push = |count: usize, name: String| match count {
            0 => {}
            1 => parts.push(name),
            c => parts.push(format!("#^{c} {name}")),
        };
        push(self.s1_cross_sphere, format!("S^1xS^{}", m + 1));
        push(self.trivial_bundle, format!("S^2xS^{m}"));
        push(self.twisted_bundle, format!("S^2~xS^{m}"));
        write!(f, "{}", parts.join(" # "))
    }
}

/// Evaluates `OB(page, mono)` by splitting the page into its atoms.
pub fn evaluate_open_book(page: &PageForm, mono: &MonodromyForm) -> Result<FourManifoldForm> {
    page.validate()?;
    mono.validate_on(page)?;
    let pushed_spheres: BTreeSet<usize> = mono.pushes.iter().map(|&(_, s)| s).collect();
    let pushed_circles: BTreeSet<usize> = mono.pushes.iter().map(|&(c, _)| c).collect();

    let mut out = FourManifoldForm::sphere(page.dim);
    let (mut s_idx, mut c_idx) = (0usize, 0usize);
    for atom in &page.atoms {
        match atom {
            Atom::SphereCyl(_) => {
                s_idx += 1;
                if pushed_spheres.contains(&s_idx) {
                    continue;
                }
                if mono.twist_exponents[s_idx - 1].rem_euclid(2) == 0 {
                    out.trivial_bundle += 1;
                } else {
                    out.twisted_bundle += 1;
                }
            }
            Atom::CircleDisk(_) => {
                c_idx += 1;
                if !pushed_circles.contains(&c_idx) {
                    out.s1_cross_sphere += 1;
                }
            }
        }
    }
    Ok(out)
}

/// Class in `Twist(♮^k S^2 x [0,1]) = (Z/2)^k` of the twist along the sphere
/// obtained by tubing together the core spheres indexed by `sphere`.
pub fn twist_image(sphere: &BTreeSet<usize>, k: usize) -> Result<Z2Vector> {
    if sphere.is_empty() {
        return Err(Error::InvalidMonodromy("empty tubing set".into()));
    }
    let mut v = Z2Vector::zeros(k);
    for &i in sphere {
        if i == 0 || i > k {
            return Err(Error::InvalidMonodromy(format!(
                "sphere index {i} out of range 1..={k}"
            )));
        }
        v.flip(i - 1);
    }
    Ok(v)
}

/// Images of the `k + 1` boundary spheres of `D^3_k`: the `k` inner spheres
/// and the outer one, which is tubed from all of them.
pub fn boundary_sphere_images(k: usize) -> Result<Vec<Z2Vector>> {
    let mut out = (1..=k)
        .map(|i| twist_image(&BTreeSet::from([i]), k))
        .collect::<Result<Vec<_>>>()?;
    out.push(twist_image(&(1..=k).collect(), k)?);
    Ok(out)
}
