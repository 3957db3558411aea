//! Word-pair squares and the closeness predicates decided exactly.
//!
//! A square `u × v` carries one word per side with cached products and
//! the endpoint of its tail address. Scale comparisons use physical
//! extents (`D_λ·λ_u` against `η·D_γ·γ_v`), which reduces to the plain
//! product ratio when η = 1 and the diameters agree.

use crate::error::Error;
use crate::exact::{rational_from_f64, ratio_within_exp_band, to_f64};
use crate::ifs::{Orientation, SumSystem};
use crate::words::{word_stats, Word};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// A word pair with cached side statistics.
#[derive(Clone, Debug, PartialEq)]
pub struct CylinderSquare {
    pub u: Word,
    pub v: Word,
    pub lambda_u: BigRational,
    pub gamma_v: BigRational,
    pub o_lambda: Orientation,
    pub o_gamma: Orientation,
    /// `L_η(u1̄, v1̄)`.
    pub endpoint: BigRational,
}

impl CylinderSquare {
    pub fn build(sum: &SumSystem, u: Word, v: Word) -> Result<Self, Error> {
        let su = word_stats(&sum.lambda, &u)?;
        let sv = word_stats(&sum.gamma, &v)?;
        let endpoint = &su.endpoint + sum.eta() * &sv.endpoint;
        Ok(CylinderSquare {
            u,
            v,
            lambda_u: su.ratio_product,
            gamma_v: sv.ratio_product,
            o_lambda: su.orientation_product,
            o_gamma: sv.orientation_product,
            endpoint,
        })
    }

    pub fn same_words(&self, other: &CylinderSquare) -> bool {
        self.u == other.u && self.v == other.v
    }

    /// Physical λ-side extent `D_λ · λ_u`.
    pub fn phys_lambda(&self, sum: &SumSystem) -> BigRational {
        sum.lambda.diameter() * &self.lambda_u
    }

    /// Physical γ-side extent `η · D_γ · γ_v`.
    pub fn phys_gamma(&self, sum: &SumSystem) -> BigRational {
        sum.eta() * sum.gamma.diameter() * &self.gamma_v
    }

    /// Ordering key used for deterministic witness selection.
    pub fn word_key(&self) -> (Vec<u8>, Vec<u8>) {
        (self.u.digits().to_vec(), self.v.digits().to_vec())
    }
}

/// Exact decision of the δ-square predicate.
pub fn is_delta_square(sum: &SumSystem, sq: &CylinderSquare, delta: f64) -> Result<bool, Error> {
    let delta = positive_rational(delta, "delta")?;
    Ok(is_delta_square_exact(sum, sq, &delta))
}

pub fn is_delta_square_exact(sum: &SumSystem, sq: &CylinderSquare, delta: &BigRational) -> bool {
    let pl = sq.phys_lambda(sum);
    let pg = sq.phys_gamma(sum);
    if pl.is_zero() || pg.is_zero() {
        // Degenerate (point) attractor on one side: compare bare products.
        return ratio_within_exp_band(&(&sq.lambda_u / &sq.gamma_v), delta);
    }
    ratio_within_exp_band(&(pl / pg), delta)
}

/// Per-condition outcome of the closeness predicate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosenessVerdict {
    /// Condition (i): both side products within the ε band.
    pub ratio_ok: bool,
    /// Condition (ii): orientation products agree on both sides.
    pub orientation_ok: bool,
    /// Condition (iii): endpoint gap below ε·D·min(products).
    pub endpoint_ok: bool,
    /// Relative slack in condition (iii).
    pub margin: f64,
}

impl ClosenessVerdict {
    pub fn is_close(&self) -> bool {
        self.ratio_ok && self.orientation_ok && self.endpoint_ok
    }
}

/// Exact evaluation of ε-relative closeness for two squares over the
/// same sum system.
pub fn relative_closeness(
    sum: &SumSystem,
    a: &CylinderSquare,
    b: &CylinderSquare,
    eps: f64,
) -> Result<ClosenessVerdict, Error> {
    let eps = positive_rational(eps, "eps")?;
    Ok(relative_closeness_exact(sum, a, b, &eps))
}

pub fn relative_closeness_exact(
    sum: &SumSystem,
    a: &CylinderSquare,
    b: &CylinderSquare,
    eps: &BigRational,
) -> ClosenessVerdict {
    let ratio_ok = ratio_within_exp_band(&(&a.lambda_u / &b.lambda_u), eps)
        && ratio_within_exp_band(&(&a.gamma_v / &b.gamma_v), eps);
    let orientation_ok = a.o_lambda == b.o_lambda && a.o_gamma == b.o_gamma;
    let min_scale = [&a.lambda_u, &b.lambda_u, &a.gamma_v, &b.gamma_v]
        .into_iter()
        .min()
        .cloned()
        .expect("four candidates");
    let threshold = eps * sum.big_d() * &min_scale;
    let gap = (&a.endpoint - &b.endpoint).abs();
    let endpoint_ok = gap < threshold;
    let margin = if threshold.is_zero() {
        f64::NEG_INFINITY
    } else {
        to_f64(&((&threshold - &gap) / &threshold))
    };
    ClosenessVerdict { ratio_ok, orientation_ok, endpoint_ok, margin }
}

/// Two distinct squares with a closeness label and its audit record.
#[derive(Clone, Debug)]
pub struct WitnessPair {
    pub first: CylinderSquare,
    pub second: CylinderSquare,
    /// Closeness parameter (display value).
    pub epsilon: f64,
    /// Exact closeness label; the pair passes the predicate at this value.
    pub epsilon_exact: BigRational,
    /// Exact square-band label; both squares pass the δ-square test here.
    pub delta_exact: BigRational,
    pub verdict: ClosenessVerdict,
    pub verified_exact: bool,
}

impl WitnessPair {
    /// Build and exactly certify a pair at a single ε (squares and
    /// closeness both at ε, the Theorem form).
    pub fn certify(
        sum: &SumSystem,
        first: CylinderSquare,
        second: CylinderSquare,
        eps: &BigRational,
    ) -> WitnessPair {
        let verdict = relative_closeness_exact(sum, &first, &second, eps);
        let distinct = !first.same_words(&second);
        let squares_ok = is_delta_square_exact(sum, &first, eps)
            && is_delta_square_exact(sum, &second, eps);
        WitnessPair {
            first,
            second,
            epsilon: to_f64(eps),
            epsilon_exact: eps.clone(),
            delta_exact: eps.clone(),
            verified_exact: distinct && squares_ok && verdict.is_close(),
            verdict,
        }
    }

    /// Re-derive every cached quantity from the words alone and re-run
    /// the exact checks. Reports never rely on caches.
    pub fn reverify(&self, sum: &SumSystem) -> Result<bool, Error> {
        let first = CylinderSquare::build(sum, self.first.u.clone(), self.first.v.clone())?;
        let second = CylinderSquare::build(sum, self.second.u.clone(), self.second.v.clone())?;
        if first != self.first || second != self.second {
            return Ok(false);
        }
        let distinct = !first.same_words(&second);
        let squares_ok = is_delta_square_exact(sum, &first, &self.delta_exact)
            && is_delta_square_exact(sum, &second, &self.delta_exact);
        let verdict = relative_closeness_exact(sum, &first, &second, &self.epsilon_exact);
        Ok(distinct && squares_ok && verdict.is_close())
    }

    pub fn word_key(&self) -> (Vec<u8>, Vec<u8>, Vec<u8>, Vec<u8>) {
        (
            self.first.u.digits().to_vec(),
            self.first.v.digits().to_vec(),
            self.second.u.digits().to_vec(),
            self.second.v.digits().to_vec(),
        )
    }
}

pub(crate) fn positive_rational(x: f64, what: &str) -> Result<BigRational, Error> {
    let r = rational_from_f64(x).ok_or_else(|| Error::DomainError {
        what: format!("{what} must be finite, got {x}"),
    })?;
    if !r.is_positive() {
        return Err(Error::DomainError { what: format!("{what} must be positive, got {x}") });
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ifs::{validate_system, AffineCantorSystem, ContractionMap};
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn map(o: i8, r: BigRational, b: BigRational) -> ContractionMap {
        ContractionMap::new(Orientation::from_sign(o).unwrap(), r, b).unwrap()
    }

    fn middle(lam: (i64, i64)) -> AffineCantorSystem {
        let r = rat(lam.0, lam.1);
        let b = BigRational::from_integer(BigInt::from(1)) - &r;
        validate_system(vec![map(1, r.clone(), rat(0, 1)), map(1, r, b)]).unwrap()
    }

    fn self_sum(lam: (i64, i64)) -> SumSystem {
        SumSystem::new(middle(lam), middle(lam))
    }

    #[test]
    fn delta_square_examples() {
        let s = self_sum((1, 3));
        let sq = CylinderSquare::build(&s, Word::new(vec![1]), Word::new(vec![2])).unwrap();
        // Equal products: a δ-square for every δ.
        assert!(is_delta_square(&s, &sq, 1e-9).unwrap());

        // λ_u = 1/9 against γ_v = 1/5: |ln(5/9)| ≈ 0.5878.
        let mixed = SumSystem::new(middle((1, 3)), middle((1, 5)));
        let sq = CylinderSquare::build(&mixed, Word::new(vec![1, 1]), Word::new(vec![1])).unwrap();
        assert!(!is_delta_square(&mixed, &sq, 0.5).unwrap());
        assert!(is_delta_square(&mixed, &sq, 0.6).unwrap());
    }

    #[test]
    fn closeness_of_swap_pair() {
        let s = self_sum((1, 3));
        let a = CylinderSquare::build(&s, Word::new(vec![2]), Word::new(vec![1])).unwrap();
        let b = CylinderSquare::build(&s, Word::new(vec![1]), Word::new(vec![2])).unwrap();
        assert_eq!(a.endpoint, rat(2, 3));
        assert_eq!(b.endpoint, rat(2, 3));
        for eps in [0.5, 0.05, 1e-6] {
            let v = relative_closeness(&s, &a, &b, eps).unwrap();
            assert!(v.is_close());
            assert_eq!(v.margin, 1.0);
        }
        let pair = WitnessPair::certify(&s, a, b, &rat(1, 20));
        assert!(pair.verified_exact);
        assert!(pair.reverify(&s).unwrap());
    }

    #[test]
    fn identical_squares_are_close_but_not_distinct() {
        let s = self_sum((1, 3));
        let a = CylinderSquare::build(&s, Word::new(vec![2]), Word::new(vec![1])).unwrap();
        let v = relative_closeness(&s, &a, &a.clone(), 0.3).unwrap();
        assert!(v.is_close());
        assert_eq!(v.margin, 1.0);
        let pair = WitnessPair::certify(&s, a.clone(), a, &rat(3, 10));
        assert!(!pair.verified_exact, "identical word pairs never witness");
    }

    #[test]
    fn orientation_mismatch_fails_condition_two() {
        // Same words but with map 2 reversing in one system.
        let lam = middle((1, 3));
        let gam = validate_system(vec![
            map(1, rat(1, 3), rat(0, 1)),
            map(-1, rat(1, 3), rat(1, 1)),
        ])
        .unwrap();
        let s = SumSystem::new(lam, gam);
        let a = CylinderSquare::build(&s, Word::new(vec![2]), Word::new(vec![1])).unwrap();
        let b = CylinderSquare::build(&s, Word::new(vec![1]), Word::new(vec![2])).unwrap();
        let v = relative_closeness(&s, &a, &b, 0.3).unwrap();
        assert!(!v.orientation_ok);
        assert!(!v.is_close());
    }

    #[test]
    fn endpoint_condition_is_strict() {
        let s = self_sum((1, 3));
        // Squares (1,1) and (2,2): endpoints 0 and 4/3, gap 4/3,
        // threshold eps·1·(1/3) — fails for small eps.
        let a = CylinderSquare::build(&s, Word::new(vec![1]), Word::new(vec![1])).unwrap();
        let b = CylinderSquare::build(&s, Word::new(vec![2]), Word::new(vec![2])).unwrap();
        let v = relative_closeness(&s, &a, &b, 0.5).unwrap();
        assert!(!v.endpoint_ok);
        assert!(v.margin < 0.0);
    }
}
