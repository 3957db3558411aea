//! Finite words over a system's digit alphabet and their multiplicative
//! statistics (contraction product, orientation product, tail endpoint).

use crate::error::Error;
use crate::exact::to_f64;
use crate::ifs::{AffineCantorSystem, Orientation, SumSystem};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A finite word of 1-based map indices. The empty word is the identity
/// composition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    digits: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Word { digits: Vec::new() }
    }

    pub fn new(digits: Vec<u8>) -> Self {
        Word { digits }
    }

    pub fn repeated(digit: u8, n: usize) -> Self {
        Word { digits: vec![digit; n] }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(&other.digits);
        Word { digits }
    }

    pub fn push(&mut self, digit: u8) {
        self.digits.push(digit);
    }

    pub fn validate(&self, system: &AffineCantorSystem) -> Result<(), Error> {
        let n = system.map_count();
        for &d in &self.digits {
            if d == 0 || d as usize > n {
                return Err(Error::InvalidDigit { digit: d, map_count: n });
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.digits.is_empty() {
            return write!(f, "ε");
        }
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 && self.digits.len() > 9 {
                write!(f, ".")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// The affine composition of a word: `x ↦ scale·x + offset` with
/// `scale = O_u · ratio_u` signed.
#[derive(Clone, Debug, PartialEq)]
pub struct WordAffine {
    pub scale: BigRational,
    pub offset: BigRational,
}

impl WordAffine {
    pub fn identity() -> Self {
        WordAffine { scale: BigRational::one(), offset: BigRational::zero() }
    }

    pub fn apply(&self, x: &BigRational) -> BigRational {
        &self.scale * x + &self.offset
    }

    /// Extend on the right by one digit's map.
    pub fn then_digit(&self, system: &AffineCantorSystem, digit: u8) -> Result<Self, Error> {
        let m = system.map(digit)?;
        Ok(WordAffine {
            scale: &self.scale * m.scale(),
            offset: &self.scale * &m.offset + &self.offset,
        })
    }
}

/// Multiplicative statistics of a word.
#[derive(Clone, Debug, PartialEq)]
pub struct WordStats {
    pub ratio_product: BigRational,
    pub orientation_product: Orientation,
    /// Image of the tail point under the word's composition: the point
    /// addressed by the word followed by the all-ones tail.
    pub endpoint: BigRational,
}

impl WordStats {
    pub fn ratio_f64(&self) -> f64 {
        to_f64(&self.ratio_product)
    }

    pub fn endpoint_f64(&self) -> f64 {
        to_f64(&self.endpoint)
    }
}

pub fn word_affine(system: &AffineCantorSystem, word: &Word) -> Result<WordAffine, Error> {
    let mut acc = WordAffine::identity();
    for &d in word.digits() {
        acc = acc.then_digit(system, d)?;
    }
    Ok(acc)
}

/// `word_stats`: exact products and the `u·1̄` endpoint.
pub fn word_stats(system: &AffineCantorSystem, word: &Word) -> Result<WordStats, Error> {
    let affine = word_affine(system, word)?;
    let ratio_product = affine.scale.abs();
    let orientation_product = if affine.scale.is_negative() {
        Orientation::Reversing
    } else {
        Orientation::Preserving
    };
    let endpoint = affine.apply(&system.tail_point());
    Ok(WordStats { ratio_product, orientation_product, endpoint })
}

/// `L_η(u1̄, v1̄)`: endpoint of the λ word plus η times the γ endpoint.
pub fn sum_endpoint(sum: &SumSystem, u: &Word, v: &Word) -> Result<BigRational, Error> {
    let su = word_stats(&sum.lambda, u)?;
    let sv = word_stats(&sum.gamma, v)?;
    Ok(su.endpoint + sum.eta() * sv.endpoint)
}
