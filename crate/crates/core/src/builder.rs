//! Random polynomials with only real, distinct roots, built level by level.
//!
//! Start from `x^2 + c` with `c < 0`. Given an all-real `P_{i-1}`, every
//! `P_i = i * integral(P_{i-1}) + a_0` with `a_0` strictly inside the
//! admissible interval is again all-real with distinct roots. That interval
//! can be empty, in which case the sampler backtracks one level.
//!
//! The sampling measure is whatever this construction induces; it is not
//! uniform over the real-rooted region. Randomness comes from `ChaCha8Rng`
//! seeded with the caller's `u64`, so a seed fully determines the output.

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebraic::DEFAULT_BUDGET;
use crate::interlace::{a0_interval, Bound, InterlaceError, Interval, Membership};
use crate::poly::Polynomial;
use crate::rational::{int, rat, simplest_between, Rational};
use crate::roots::isolate_squarefree;

/// Default width of the range `[-G, 0)` for the degree-2 gate.
pub const DEFAULT_GATE_RANGE: i64 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("degree must be at least 2")]
    DegreeTooSmall,
    #[error("the degree-2 constant must be negative")]
    NonNegativeGate,
    #[error("margin must lie in (0, 1/2]")]
    InvalidMargin,
    #[error("constant is not strictly inside its admissible interval")]
    OutsideInterval,
    #[error("no real-rooted extension found")]
    Exhausted,
    #[error(transparent)]
    Interlace(#[from] InterlaceError),
}

/// A constant chosen at one level and the interval it was drawn from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Choice {
    pub level: usize,
    pub constant: Rational,
    pub interval: Option<Interval>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildState {
    pub level: usize,
    pub poly: Polynomial,
    pub history: Vec<Choice>,
}

impl BuildState {
    /// `P_2 = x^2 + c` with `c < 0`.
    pub fn new(c: Rational) -> Result<Self, BuildError> {
        if !c.is_negative() {
            return Err(BuildError::NonNegativeGate);
        }
        Ok(BuildState {
            level: 2,
            poly: Polynomial::new(vec![c.clone(), int(0), int(1)]),
            history: vec![Choice {
                level: 2,
                constant: c,
                interval: None,
            }],
        })
    }

    /// `(i+1) * integral(P_i)`, the next level without its constant.
    pub fn next_without_constant(&self) -> Polynomial {
        self.poly
            .antiderivative()
            .scale(&int(self.level as i64 + 1))
    }

    /// Admissible open interval for the constant of the next level.
    pub fn next_interval(&self, budget: usize) -> Result<Interval, BuildError> {
        let n = self.level + 1;
        let base = self.next_without_constant();
        // R^0 = x P_i - (P_{i+1} without constant)
        let r0 = &(&Polynomial::x() * &self.poly) - &base;
        let roots = isolate_squarefree(&self.poly);
        Ok(a0_interval(&r0, &roots, n, budget)?)
    }

    /// Moves to the next level with the given constant.
    pub fn push(&mut self, a0: Rational, budget: usize) -> Result<(), BuildError> {
        let interval = self.next_interval(budget)?;
        if interval.membership(&a0, budget)? != Membership::Inside {
            return Err(BuildError::OutsideInterval);
        }
        self.poly = &self.next_without_constant() + &Polynomial::constant(a0.clone());
        self.level += 1;
        self.history.push(Choice {
            level: self.level,
            constant: a0,
            interval: Some(interval),
        });
        Ok(())
    }
}

/// A rational in the middle `(1 - 2 margin)` fraction of `]lo, hi[`, at a
/// pseudorandom position.
pub fn pick_inside(
    interval: &Interval,
    margin: &Rational,
    rng: &mut impl Rng,
    budget: usize,
) -> Result<Rational, BuildError> {
    let (Bound::Value(lo), Bound::Value(hi)) = (&interval.lo, &interval.hi) else {
        return Err(BuildError::Interlace(InterlaceError::UnresolvableOrder(0)));
    };
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    // Refine both ends until their enclosures are small next to the gap.
    for _ in 0..budget {
        let (_, lo_top) = lo.bounds();
        let (hi_bot, _) = hi.bounds();
        let gap = &hi_bot - &lo_top;
        if gap.is_positive() {
            let tol = &gap * margin / int(4);
            if lo.width() <= tol && hi.width() <= tol {
                let a = &lo_top + &gap * margin;
                let b = &hi_bot - &gap * margin;
                let t = rat(rng.gen_range(0..=1_000_000), 1_000_000);
                let x = &a + (&b - &a) * t;
                let slack = (&b - &a) / int(1 << 12);
                let pick_lo = if &x - &slack < a {
                    a.clone()
                } else {
                    &x - &slack
                };
                let pick_hi = if &x + &slack > b {
                    b.clone()
                } else {
                    &x + &slack
                };
                return Ok(simplest_between(&pick_lo, &pick_hi));
            }
        }
        lo.refine();
        hi.refine();
    }
    Err(BuildError::Interlace(InterlaceError::UnresolvableOrder(
        budget,
    )))
}

/// Options for [`sample_real_rooted_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleOptions {
    pub margin: Rational,
    /// The `x^{n-2}` coefficient is drawn from `[-gate_range, 0)`.
    pub gate_range: Rational,
    pub budget: usize,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            margin: rat(1, 10),
            gate_range: int(DEFAULT_GATE_RANGE),
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Deterministic random monic depressed polynomial of degree `n` with `n`
/// distinct real roots.
pub fn sample_real_rooted(
    n: usize,
    seed: u64,
    margin: &Rational,
) -> Result<Polynomial, BuildError> {
    let opts = SampleOptions {
        margin: margin.clone(),
        ..SampleOptions::default()
    };
    Ok(sample_real_rooted_with(n, seed, &opts)?.poly)
}

pub fn sample_real_rooted_with(
    n: usize,
    seed: u64,
    opts: &SampleOptions,
) -> Result<BuildState, BuildError> {
    if n < 2 {
        return Err(BuildError::DegreeTooSmall);
    }
    if !opts.margin.is_positive() || opts.margin > rat(1, 2) {
        return Err(BuildError::InvalidMargin);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RESTARTS {
        let state = fresh_gate(n, opts, &mut rng)?;
        if let Some(done) = climb(state, n, opts, &mut rng)? {
            return Ok(done);
        }
    }
    Err(BuildError::Exhausted)
}

/// Maximum restarts from a new gate value.
const MAX_RESTARTS: usize = 64;
/// Maximum re-picks of constants within one attempt.
const MAX_BACKTRACKS: usize = 64;
/// Re-picks at one level before backing up further.
const RETRIES_PER_LEVEL: usize = 3;

fn fresh_gate(
    n: usize,
    opts: &SampleOptions,
    rng: &mut ChaCha8Rng,
) -> Result<BuildState, BuildError> {
    // a_{n-2} in [-G, 0) on a grid of 1/1000 steps
    let k: i64 = rng.gen_range(1..=1000);
    let a = -(&opts.gate_range * rat(k, 1000));
    BuildState::new(&a * int(2) / int((n * (n - 1)) as i64))
}

/// Walks up to degree `n`. A real-rooted `P_i` does not always extend to
/// degree `i + 1`: the admissible interval can be empty. Then the previous
/// constant is drawn again, and after repeated failures the one before it.
/// `None` means this gate should be abandoned.
fn climb(
    state: BuildState,
    n: usize,
    opts: &SampleOptions,
    rng: &mut ChaCha8Rng,
) -> Result<Option<BuildState>, BuildError> {
    let mut stack = vec![state];
    let mut retries = vec![0usize; n + 1];
    let mut backtracks = 0;
    while let Some(top) = stack.last() {
        if top.level == n {
            return Ok(stack.pop());
        }
        let interval = top.next_interval(opts.budget)?;
        if interval.is_empty(opts.budget)? {
            backtracks += 1;
            if backtracks > MAX_BACKTRACKS {
                return Ok(None);
            }
            let mut level = top.level;
            stack.pop();
            retries[level] += 1;
            while retries[level] > RETRIES_PER_LEVEL && stack.len() > 1 {
                retries[level] = 0;
                level -= 1;
                stack.pop();
                retries[level] += 1;
            }
            if retries[level] > RETRIES_PER_LEVEL {
                return Ok(None);
            }
            continue;
        }
        let a0 = pick_inside(&interval, &opts.margin, rng, opts.budget)?;
        let mut next = top.clone();
        next.push(a0, opts.budget)?;
        stack.push(next);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interlace::{certify_all_real, Verdict};
    use crate::poly::discriminant;
    use crate::sturm::all_real_rooted_sturm;
    use num_traits::Zero;

    #[test]
    fn cubic_interval_from_degree_two() {
        // x^2 + p/3 with p = -3 -> q in ]-2, 2[
        let st = BuildState::new(int(-1)).unwrap();
        let iv = st.next_interval(64).unwrap();
        let Bound::Value(v) = &iv.lo else { panic!() };
        assert_eq!(
            v.cmp_rational(&int(-2), 64).unwrap(),
            std::cmp::Ordering::Equal
        );
        let Bound::Value(v) = &iv.hi else { panic!() };
        assert_eq!(
            v.cmp_rational(&int(2), 64).unwrap(),
            std::cmp::Ordering::Equal
        );
    }

    #[test]
    fn zero_constant_is_a_boundary_for_the_quartic() {
        // P3 = x^3 - 3x: P4 = x^4 - 6x^2 + a0, a0 = 0 gives a double root
        let mut st = BuildState::new(int(-1)).unwrap();
        st.push(int(0), 64).unwrap();
        let iv = st.next_interval(64).unwrap();
        assert_eq!(iv.membership(&int(0), 64).unwrap(), Membership::OnBoundary);
        assert_eq!(st.push(int(0), 64), Err(BuildError::OutsideInterval));
    }

    #[test]
    fn sampled_polynomials_certify() {
        for n in 2..=6 {
            for seed in 0..8 {
                let p = sample_real_rooted(n, seed, &rat(1, 10)).unwrap();
                assert_eq!(p.degree(), Some(n));
                assert!(p.is_depressed() && p.is_monic());
                assert!(all_real_rooted_sturm(&p), "{p}");
                assert_eq!(certify_all_real(&p).verdict, Verdict::AllRealDistinct);
            }
        }
        let p = sample_real_rooted(3, 5, &rat(1, 4)).unwrap();
        assert!(discriminant(&p).unwrap().is_positive());
    }

    #[test]
    fn gate_coefficient_is_in_range() {
        for seed in 0..6 {
            let p = sample_real_rooted(6, seed, &rat(1, 10)).unwrap();
            let a = p.coeff(4);
            assert!(a.is_negative() && a >= int(-10));
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = sample_real_rooted(5, 42, &rat(1, 10)).unwrap();
        let b = sample_real_rooted(5, 42, &rat(1, 10)).unwrap();
        assert_eq!(a, b);
        assert!(!a.coeff(0).is_zero() || a != sample_real_rooted(5, 43, &rat(1, 10)).unwrap());
    }

    #[test]
    fn margin_is_validated() {
        assert_eq!(
            sample_real_rooted(3, 0, &int(0)),
            Err(BuildError::InvalidMargin)
        );
        assert_eq!(
            sample_real_rooted(3, 0, &int(1)),
            Err(BuildError::InvalidMargin)
        );
        assert_eq!(
            sample_real_rooted(1, 0, &rat(1, 10)),
            Err(BuildError::DegreeTooSmall)
        );
    }
}
