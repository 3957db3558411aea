//! Affine iterated function systems on the line and their derived data:
//! similarity dimension, attractor hull, diameters, and the minimum
//! contraction ratio of a pair of systems.

use crate::error::Error;
use crate::exact::{rational_from_f64, to_f64};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const DEFAULT_DIM_TOL: f64 = 1e-12;

/// Orientation of an affine contraction: the sign of its linear part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Preserving,
    Reversing,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Preserving => 1,
            Orientation::Reversing => -1,
        }
    }

    pub fn from_sign(s: i8) -> Option<Self> {
        match s {
            1 => Some(Orientation::Preserving),
            -1 => Some(Orientation::Reversing),
            _ => None,
        }
    }

    pub fn compose(self, other: Self) -> Self {
        if self == other {
            Orientation::Preserving
        } else {
            Orientation::Reversing
        }
    }
}

/// One affine contraction `x ↦ o·r·x + b` with `o ∈ {±1}` and `r ∈ (0,1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ContractionMap {
    pub orientation: Orientation,
    pub ratio: BigRational,
    pub offset: BigRational,
}

impl ContractionMap {
    pub fn new(
        orientation: Orientation,
        ratio: BigRational,
        offset: BigRational,
    ) -> Result<Self, Error> {
        if !ratio.is_positive() || ratio >= BigRational::one() {
            return Err(Error::RatioOutOfRange {
                context: format!("ratio {}", ratio),
            });
        }
        Ok(ContractionMap { orientation, ratio, offset })
    }

    /// Signed linear coefficient `o·r`.
    pub fn scale(&self) -> BigRational {
        match self.orientation {
            Orientation::Preserving => self.ratio.clone(),
            Orientation::Reversing => -self.ratio.clone(),
        }
    }

    pub fn apply(&self, x: &BigRational) -> BigRational {
        self.scale() * x + &self.offset
    }

    /// The unique fixed point `b / (1 - o·r)`.
    pub fn fixed_point(&self) -> BigRational {
        &self.offset / (BigRational::one() - self.scale())
    }
}

/// An affine IFS with its cached derived quantities.
#[derive(Clone, Debug)]
pub struct AffineCantorSystem {
    maps: Vec<ContractionMap>,
    dimension: f64,
    hull: (BigRational, BigRational),
    diameter: BigRational,
    exact_weights: Option<Vec<BigRational>>,
}

impl AffineCantorSystem {
    pub fn new(maps: Vec<ContractionMap>) -> Result<Self, Error> {
        Self::with_tol(maps, DEFAULT_DIM_TOL)
    }

    pub fn with_tol(maps: Vec<ContractionMap>, dim_tol: f64) -> Result<Self, Error> {
        if maps.is_empty() {
            return Err(Error::EmptySystem);
        }
        let ratios: Vec<f64> = maps.iter().map(|m| to_f64(&m.ratio)).collect();
        let dimension = similarity_dimension(&ratios, dim_tol)?;
        let hull = exact_hull(&maps)?;
        let diameter = &hull.1 - &hull.0;
        let exact_weights = exact_weights(&maps.iter().map(|m| m.ratio.clone()).collect::<Vec<_>>());
        Ok(AffineCantorSystem { maps, dimension, hull, diameter, exact_weights })
    }

    pub fn maps(&self) -> &[ContractionMap] {
        &self.maps
    }

    pub fn map_count(&self) -> usize {
        self.maps.len()
    }

    /// Map for a 1-based digit.
    pub fn map(&self, digit: u8) -> Result<&ContractionMap, Error> {
        self.maps
            .get(digit as usize - 1)
            .ok_or(Error::InvalidDigit { digit, map_count: self.maps.len() })
    }

    pub fn dimension(&self) -> f64 {
        self.dimension
    }

    pub fn hull(&self) -> &(BigRational, BigRational) {
        &self.hull
    }

    pub fn diameter(&self) -> &BigRational {
        &self.diameter
    }

    /// Fixed point of map 1: the point addressed by the all-ones tail.
    pub fn tail_point(&self) -> BigRational {
        self.maps[0].fixed_point()
    }

    /// Per-map measure weights `ratio_i^dimension` as exact rationals,
    /// when the ratio list admits them (all ratios powers of a common
    /// rational base whose weight equation has a rational root).
    pub fn exact_weights(&self) -> Option<&[BigRational]> {
        self.exact_weights.as_deref()
    }

    /// Per-map measure weights in floating point, renormalized so they
    /// sum to 1 as exactly as binary64 allows.
    pub fn float_weights(&self) -> Vec<f64> {
        let mut w: Vec<f64> = self
            .maps
            .iter()
            .map(|m| to_f64(&m.ratio).powf(self.dimension))
            .collect();
        let total: f64 = w.iter().sum();
        for x in &mut w {
            *x /= total;
        }
        w
    }

    pub fn is_homogeneous(&self) -> bool {
        self.maps.iter().all(|m| m.ratio == self.maps[0].ratio)
    }

    pub fn all_orientation_preserving(&self) -> bool {
        self.maps.iter().all(|m| m.orientation == Orientation::Preserving)
    }

    /// Index (1-based) of a map fixing the hull's left endpoint, if any.
    pub fn left_anchor(&self) -> Option<u8> {
        let a = &self.hull.0;
        self.maps.iter().position(|m| {
            m.orientation == Orientation::Preserving && m.apply(a) == *a
        }).map(|i| i as u8 + 1)
    }

    /// Index (1-based) of a map fixing the hull's right endpoint, if any.
    pub fn right_anchor(&self) -> Option<u8> {
        let b = &self.hull.1;
        self.maps.iter().position(|m| {
            m.orientation == Orientation::Preserving && m.apply(b) == *b
        }).map(|i| i as u8 + 1)
    }
}

/// `validate_system`: construct with all cached fields populated.
pub fn validate_system(maps: Vec<ContractionMap>) -> Result<AffineCantorSystem, Error> {
    AffineCantorSystem::new(maps)
}

/// Solve `Σ r_i^d = 1` for `d >= 0`. Bisection (the sum is strictly
/// decreasing in `d`) followed by a Newton polish.
pub fn similarity_dimension(ratios: &[f64], tol: f64) -> Result<f64, Error> {
    if ratios.is_empty() {
        return Err(Error::EmptySystem);
    }
    if tol <= 0.0 {
        return Err(Error::DomainError { what: "tol must be positive".into() });
    }
    for &r in ratios {
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::RatioOutOfRange { context: format!("ratio {r}") });
        }
    }
    let n = ratios.len();
    if n == 1 {
        return Ok(0.0);
    }
    if ratios.iter().all(|&r| r == ratios[0]) {
        let d = (n as f64).ln() / (1.0 / ratios[0]).ln();
        return Ok(d);
    }
    let f = |d: f64| ratios.iter().map(|&r| r.powf(d)).sum::<f64>() - 1.0;
    let fp = |d: f64| ratios.iter().map(|&r| r.powf(d) * r.ln()).sum::<f64>();
    let r_max = ratios.iter().cloned().fold(f64::MIN, f64::max);
    let mut lo = 0.0f64;
    let mut hi = (n as f64).ln() / (1.0 / r_max).ln();
    debug_assert!(f(lo) > 0.0 && f(hi) <= 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-14 * (1.0 + hi) {
            break;
        }
    }
    let mut d = 0.5 * (lo + hi);
    for _ in 0..8 {
        let fd = f(d);
        if fd == 0.0 {
            break;
        }
        let step = fd / fp(d);
        let next = d - step;
        if !next.is_finite() {
            break;
        }
        d = next;
    }
    if f(d).abs() < tol {
        Ok(d.max(0.0))
    } else {
        Err(Error::NoConvergence { what: "similarity dimension" })
    }
}

/// Exact attractor hull `[a, b]`: the unique minimal closed interval with
/// `F_i([a,b]) ⊆ [a,b]` for every map.
///
/// Each endpoint is attained by some map applied to one of the endpoints,
/// so `(a, b)` solves a 2x2 linear system picked out by the attaining map
/// pair; we try the pair suggested by a short floating iteration first,
/// then fall back to all pairs, and verify the winner exactly.
fn exact_hull(maps: &[ContractionMap]) -> Result<(BigRational, BigRational), Error> {
    let guess = float_hull_pattern(maps);
    let n = maps.len();
    let mut patterns: Vec<(usize, usize)> = Vec::with_capacity(n * n + 1);
    if let Some(p) = guess {
        patterns.push(p);
    }
    for i in 0..n {
        for j in 0..n {
            if Some((i, j)) != guess {
                patterns.push((i, j));
            }
        }
    }
    for (i, j) in patterns {
        if let Some((a, b)) = solve_hull_pattern(maps, i, j) {
            if verify_hull(maps, &a, &b) {
                return Ok((a, b));
            }
        }
    }
    Err(Error::NoConvergence { what: "hull" })
}

/// Iterate the interval endpoint map in f64 from the fixed-point bounds
/// and report which maps attain the final endpoints.
fn float_hull_pattern(maps: &[ContractionMap]) -> Option<(usize, usize)> {
    let scales: Vec<f64> = maps.iter().map(|m| to_f64(&m.scale())).collect();
    let offsets: Vec<f64> = maps.iter().map(|m| to_f64(&m.offset)).collect();
    let fixed: Vec<f64> = maps.iter().map(|m| to_f64(&m.fixed_point())).collect();
    let mut a = fixed.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut b = fixed.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut arg = (0usize, 0usize);
    for _ in 0..5000 {
        let mut na = f64::INFINITY;
        let mut nb = f64::NEG_INFINITY;
        let mut next_arg = (0usize, 0usize);
        for k in 0..maps.len() {
            let (ia, ib) = (scales[k] * a + offsets[k], scales[k] * b + offsets[k]);
            let (lo, hi) = if ia <= ib { (ia, ib) } else { (ib, ia) };
            if lo < na {
                na = lo;
                next_arg.0 = k;
            }
            if hi > nb {
                nb = hi;
                next_arg.1 = k;
            }
        }
        let moved = (na - a).abs().max((nb - b).abs());
        arg = next_arg;
        let stop = moved < 1e-14 * (1.0 + a.abs().max(b.abs()));
        a = na;
        b = nb;
        if stop {
            return Some(arg);
        }
    }
    Some(arg)
}

/// Solve `a = F_i(x_a), b = F_j(x_b)` where each map uses the endpoint
/// that minimizes/maximizes its image given its orientation.
fn solve_hull_pattern(
    maps: &[ContractionMap],
    i: usize,
    j: usize,
) -> Option<(BigRational, BigRational)> {
    let (si, bi) = (maps[i].scale(), maps[i].offset.clone());
    let (sj, bj) = (maps[j].scale(), maps[j].offset.clone());
    let one = BigRational::one;
    let (a, b) = match (maps[i].orientation, maps[j].orientation) {
        (Orientation::Preserving, Orientation::Preserving) => {
            (bi.clone() / (one() - &si), bj.clone() / (one() - &sj))
        }
        (Orientation::Preserving, Orientation::Reversing) => {
            let a = bi.clone() / (one() - &si);
            let b = &sj * &a + &bj;
            (a, b)
        }
        (Orientation::Reversing, Orientation::Preserving) => {
            let b = bj.clone() / (one() - &sj);
            let a = &si * &b + &bi;
            (a, b)
        }
        (Orientation::Reversing, Orientation::Reversing) => {
            // a = si*b + bi, b = sj*a + bj.
            let det = one() - &si * &sj;
            if det.is_zero() {
                return None;
            }
            let a = (&si * &bj + &bi) / det.clone();
            let b = &sj * &a + &bj;
            (a, b)
        }
    };
    if a <= b {
        Some((a, b))
    } else {
        None
    }
}

fn verify_hull(maps: &[ContractionMap], a: &BigRational, b: &BigRational) -> bool {
    let mut min_img: Option<BigRational> = None;
    let mut max_img: Option<BigRational> = None;
    for m in maps {
        let (ia, ib) = (m.apply(a), m.apply(b));
        let (lo, hi) = if ia <= ib { (ia, ib) } else { (ib, ia) };
        if lo < *a || hi > *b {
            return false;
        }
        min_img = Some(match min_img {
            Some(v) => v.min(lo),
            None => lo,
        });
        max_img = Some(match max_img {
            Some(v) => v.max(hi),
            None => hi,
        });
    }
    min_img.as_ref() == Some(a) && max_img.as_ref() == Some(b)
}

/// `convex_hull` as a standalone operation (tolerance kept in the
/// signature for interface stability; the result is exact).
pub fn convex_hull(
    maps: &[ContractionMap],
    _tol: f64,
) -> Result<(BigRational, BigRational), Error> {
    if maps.is_empty() {
        return Err(Error::EmptySystem);
    }
    exact_hull(maps)
}

fn kth_root_exact(x: &BigRational, k: u32) -> Option<BigRational> {
    if k == 1 {
        return Some(x.clone());
    }
    let num = x.numer();
    let den = x.denom();
    if num.is_negative() {
        return None;
    }
    let rn = num.nth_root(k);
    let rd = den.nth_root(k);
    if &rn.pow(k) == num && &rd.pow(k) == den {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// Detects exact measure weights: if every ratio is an integer power of a
/// common rational base `ρ` and the weight equation `Σ x^{m_i} = 1` has a
/// rational root `x = ρ^d`, the cylinder measure is exactly rational.
fn exact_weights(ratios: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = ratios.len();
    if n == 1 {
        // Dimension 0: the empty product weight is 1.
        return Some(vec![BigRational::one()]);
    }
    let r_min = ratios.iter().min().unwrap().clone();
    for k in 1..=64u32 {
        let base = match kth_root_exact(&r_min, k) {
            Some(b) => b,
            None => continue,
        };
        if let Some(exponents) = exponents_in_base(ratios, &base) {
            if let Some(x) = rational_weight_root(&exponents) {
                let weights: Vec<BigRational> = exponents
                    .iter()
                    .map(|&m| pow_rat(&x, m))
                    .collect();
                debug_assert!(weights.iter().sum::<BigRational>().is_one());
                return Some(weights);
            }
        }
    }
    None
}

fn pow_rat(x: &BigRational, m: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..m {
        out *= x;
    }
    out
}

fn exponents_in_base(ratios: &[BigRational], base: &BigRational) -> Option<Vec<u32>> {
    let lb = to_f64(base).ln();
    let mut out = Vec::with_capacity(ratios.len());
    for r in ratios {
        let m = (to_f64(r).ln() / lb).round();
        if !(m >= 1.0 && m <= 512.0) {
            return None;
        }
        let m = m as u32;
        if pow_rat(base, m) != *r {
            return None;
        }
        out.push(m);
    }
    Some(out)
}

/// Rational root in (0,1) of `Σ_i x^{m_i} - 1`, by the rational root
/// theorem: candidates are `1/q` with `q` dividing the leading count.
fn rational_weight_root(exponents: &[u32]) -> Option<BigRational> {
    let m_max = *exponents.iter().max().unwrap();
    let leading = exponents.iter().filter(|&&m| m == m_max).count() as u64;
    let mut q = 2u64;
    while q <= leading.max(1) * 64 {
        // Only divisors of the leading coefficient can be denominators,
        // but testing a few extra candidates is harmless and exact.
        if leading % q == 0 || q <= 64 {
            let x = BigRational::new(BigInt::one(), BigInt::from(q));
            let sum: BigRational = exponents.iter().map(|&m| pow_rat(&x, m)).sum();
            if sum.is_one() {
                return Some(x);
            }
        }
        q += 1;
    }
    None
}

/// A pair of systems summed as `C_λ + η·C_γ`.
#[derive(Clone, Debug)]
pub struct SumSystem {
    pub lambda: AffineCantorSystem,
    pub gamma: AffineCantorSystem,
    eta: BigRational,
    r_min: BigRational,
    big_d: BigRational,
    sum_dimension: f64,
}

impl SumSystem {
    pub fn new(lambda: AffineCantorSystem, gamma: AffineCantorSystem) -> Self {
        Self::with_eta(lambda, gamma, BigRational::one()).expect("eta = 1 is positive")
    }

    pub fn with_eta(
        lambda: AffineCantorSystem,
        gamma: AffineCantorSystem,
        eta: BigRational,
    ) -> Result<Self, Error> {
        if !eta.is_positive() {
            return Err(Error::NonpositiveEta);
        }
        let r_min = lambda
            .maps()
            .iter()
            .chain(gamma.maps().iter())
            .map(|m| m.ratio.clone())
            .min()
            .expect("systems are nonempty");
        let scaled_gamma_diam = &eta * gamma.diameter();
        let big_d = if *lambda.diameter() >= scaled_gamma_diam {
            lambda.diameter().clone()
        } else {
            scaled_gamma_diam
        };
        let sum_dimension = lambda.dimension() + gamma.dimension();
        Ok(SumSystem { lambda, gamma, eta, r_min, big_d, sum_dimension })
    }

    pub fn eta(&self) -> &BigRational {
        &self.eta
    }

    pub fn eta_f64(&self) -> f64 {
        to_f64(&self.eta)
    }

    pub fn r_min(&self) -> &BigRational {
        &self.r_min
    }

    /// `D`: the larger of the two physical diameters (the γ side scaled
    /// by η).
    pub fn big_d(&self) -> &BigRational {
        &self.big_d
    }

    pub fn sum_dimension(&self) -> f64 {
        self.sum_dimension
    }

    /// Replace η, keeping both systems (contraction ratios are untouched;
    /// only physical sizes and endpoint sums change).
    pub fn rescaled(&self, eta: BigRational) -> Result<Self, Error> {
        Self::with_eta(self.lambda.clone(), self.gamma.clone(), eta)
    }

    pub fn rescaled_f64(&self, eta: f64) -> Result<Self, Error> {
        let eta = rational_from_f64(eta).ok_or(Error::NonpositiveEta)?;
        self.rescaled(eta)
    }

    /// True when both map lists and η = 1 make the two sides literally
    /// interchangeable.
    pub fn is_self_sum(&self) -> bool {
        self.eta.is_one()
            && self.lambda.maps().len() == self.gamma.maps().len()
            && self
                .lambda
                .maps()
                .iter()
                .zip(self.gamma.maps().iter())
                .all(|(a, b)| a == b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn map(o: i8, r: BigRational, b: BigRational) -> ContractionMap {
        ContractionMap::new(Orientation::from_sign(o).unwrap(), r, b).unwrap()
    }

    fn middle_third() -> AffineCantorSystem {
        validate_system(vec![
            map(1, rat(1, 3), rat(0, 1)),
            map(1, rat(1, 3), rat(2, 3)),
        ])
        .unwrap()
    }

    #[test]
    fn validates_basic_systems() {
        let halves = validate_system(vec![
            map(1, rat(1, 2), rat(0, 1)),
            map(1, rat(1, 2), rat(1, 2)),
        ])
        .unwrap();
        assert!((halves.dimension() - 1.0).abs() < 1e-14);
        assert_eq!(halves.hull(), &(rat(0, 1), rat(1, 1)));

        let thirds = middle_third();
        assert!((thirds.dimension() - 2f64.ln() / 3f64.ln()).abs() < 1e-14);
        assert_eq!(thirds.hull(), &(rat(0, 1), rat(1, 1)));

        let single = validate_system(vec![map(1, rat(1, 2), rat(0, 1))]).unwrap();
        assert_eq!(single.dimension(), 0.0);
        assert_eq!(single.hull(), &(rat(0, 1), rat(0, 1)));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(validate_system(vec![]).unwrap_err(), Error::EmptySystem);
        assert!(matches!(
            ContractionMap::new(Orientation::Preserving, rat(6, 5), rat(0, 1)),
            Err(Error::RatioOutOfRange { .. })
        ));
        assert!(matches!(
            ContractionMap::new(Orientation::Preserving, rat(0, 1), rat(0, 1)),
            Err(Error::RatioOutOfRange { .. })
        ));
    }

    #[test]
    fn dimension_examples() {
        assert!((similarity_dimension(&[0.25, 0.25], 1e-12).unwrap() - 0.5).abs() < 1e-13);
        let d = similarity_dimension(&[1.0 / 3.0, 1.0 / 3.0], 1e-12).unwrap();
        assert!((d - 2f64.ln() / 3f64.ln()).abs() < 1e-13);
        // Root of (1/2)^d + (1/4)^d = 1: with x = (1/2)^d, x + x^2 = 1.
        let x = (5f64.sqrt() - 1.0) / 2.0;
        let expected = -x.ln() / 2f64.ln();
        let d = similarity_dimension(&[0.5, 0.25], 1e-12).unwrap();
        assert!((d - expected).abs() < 1e-12);
        let residual = (0.5f64.powf(d) + 0.25f64.powf(d) - 1.0).abs();
        assert!(residual < 1e-12);
    }

    #[test]
    fn hull_handles_reversing_maps() {
        // F1(x) = -x/3 + 1, F2(x) = -x/3 + 1/3: hull [0, 1].
        let sys = validate_system(vec![
            map(-1, rat(1, 3), rat(1, 1)),
            map(-1, rat(1, 3), rat(1, 3)),
        ])
        .unwrap();
        assert_eq!(sys.hull(), &(rat(0, 1), rat(1, 1)));
        assert_eq!(sys.diameter(), &rat(1, 1));
    }

    #[test]
    fn anchors_found_on_normalized_systems() {
        let t = middle_third();
        assert_eq!(t.left_anchor(), Some(1));
        assert_eq!(t.right_anchor(), Some(2));
    }

    #[test]
    fn exact_weights_detection() {
        let homog = middle_third();
        assert_eq!(homog.exact_weights().unwrap(), &[rat(1, 2), rat(1, 2)]);

        // {1/4, 1/4, 1/2}: dimension 1, weights are the ratios themselves.
        let mixed = validate_system(vec![
            map(1, rat(1, 4), rat(0, 1)),
            map(1, rat(1, 4), rat(1, 4)),
            map(1, rat(1, 2), rat(1, 2)),
        ])
        .unwrap();
        assert_eq!(
            mixed.exact_weights().unwrap(),
            &[rat(1, 4), rat(1, 4), rat(1, 2)]
        );

        // {1/2, 1/4}: golden-ratio weight, not rational.
        let golden = validate_system(vec![
            map(1, rat(1, 2), rat(0, 1)),
            map(1, rat(1, 4), rat(3, 4)),
        ])
        .unwrap();
        assert!(golden.exact_weights().is_none());

        // {1/4, 1/8}: common base 1/2 but irrational weight root.
        let irr = validate_system(vec![
            map(1, rat(1, 4), rat(0, 1)),
            map(1, rat(1, 8), rat(7, 8)),
        ])
        .unwrap();
        assert!(irr.exact_weights().is_none());
    }

    #[test]
    fn sum_system_derived_data() {
        let s = SumSystem::new(middle_third(), middle_third());
        assert_eq!(s.r_min(), &rat(1, 3));
        assert_eq!(s.big_d(), &rat(1, 1));
        assert!((s.sum_dimension() - 2.0 * 2f64.ln() / 3f64.ln()).abs() < 1e-13);
        assert!(s.is_self_sum());

        let scaled = s.rescaled(rat(2, 1)).unwrap();
        assert_eq!(scaled.big_d(), &rat(2, 1));
        assert!(!scaled.is_self_sum());
        assert_eq!(scaled.lambda.maps(), s.lambda.maps());

        assert_eq!(
            s.rescaled(rat(0, 1)).unwrap_err(),
            Error::NonpositiveEta
        );
    }

    #[test]
    fn float_weights_sum_to_one() {
        let golden = validate_system(vec![
            map(1, rat(1, 2), rat(0, 1)),
            map(1, rat(1, 4), rat(3, 4)),
        ])
        .unwrap();
        let w = golden.float_weights();
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }
}
