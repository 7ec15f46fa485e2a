//! Vectors over the field with two elements.

use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

/// A vector in (Z/2)^k. Entries are stored as `0`/`1` bytes so the JSON form
/// reads as a plain bit list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Z2Vector(Vec<u8>);

impl Z2Vector {
    pub fn zeros(len: usize) -> Self {
        Z2Vector(vec![0; len])
    }

    pub fn ones(len: usize) -> Self {
        Z2Vector(vec![1; len])
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = 1;
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        Z2Vector(bits.into_iter().map(u8::from).collect())
    }

    /// Reduces each integer entry mod 2 (negative entries included).
    pub fn from_integers(values: &[i64]) -> Self {
        Z2Vector(values.iter().map(|v| (v.rem_euclid(2)) as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> bool {
        self.0[index] == 1
    }

    pub fn flip(&mut self, index: usize) {
        self.0[index] ^= 1;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn count_zeros(&self) -> usize {
        self.len() - self.count_ones()
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().map(|&b| b == 1)
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }
}

impl AddAssign<&Z2Vector> for Z2Vector {
    fn add_assign(&mut self, rhs: &Z2Vector) {
        assert_eq!(self.len(), rhs.len(), "Z2 vector length mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a ^= *b;
        }
    }
}

impl Add<&Z2Vector> for &Z2Vector {
    type Output = Z2Vector;

    fn add(self, rhs: &Z2Vector) -> Z2Vector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl fmt::Display for Z2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_entries_reduce() {
        let v = Z2Vector::from_integers(&[-3, -2, 0, 7]);
        assert_eq!(v.as_slice(), &[1, 0, 0, 1]);
    }

    #[test]
    fn addition_is_xor() {
        let a = Z2Vector::from_bits([true, false, true]);
        let b = Z2Vector::from_bits([true, true, false]);
        assert_eq!((&a + &b).as_slice(), &[0, 1, 1]);
        assert!((&a + &a).is_zero());
    }
}
