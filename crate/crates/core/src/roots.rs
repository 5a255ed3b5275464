//! Certified real-root isolation by Sturm bisection.
//!
//! Multiplicities come from the squarefree decomposition, so every factor is
//! isolated separately with its own exact chain. Roots of distinct factors
//! are distinct, which lets the merge step refine overlapping intervals
//! until they separate.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::algebraic::RealRoot;
use crate::poly::Polynomial;
use crate::rational::{from_f64_dyadic, int, midpoint, simplest_between, Rational, Sign};
use crate::sturm::{cauchy_bound, sturm_chain, ExtendedRational, SturmChain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootsError {
    #[error("interval does not isolate exactly one root")]
    NotIsolating,
    #[error("tolerance must be positive")]
    InvalidTolerance,
    #[error("x^3 + px + q does not have three distinct real roots")]
    NotThreeRealRoots,
}

/// One distinct real root with its multiplicity in the source polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub root: RealRoot,
    pub multiplicity: usize,
}

/// All distinct real roots of a polynomial, ascending, with pairwise
/// disjoint enclosures.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootSet {
    roots: Vec<IsolatedRoot>,
}

impl RootSet {
    pub fn roots(&self) -> &[IsolatedRoot] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// The enclosures as plain real roots, ascending.
    pub fn real_roots(&self) -> Vec<RealRoot> {
        self.roots.iter().map(|r| r.root.clone()).collect()
    }

    /// Open isolating intervals of the irrational (or not yet hit) roots.
    pub fn intervals(&self) -> Vec<(Rational, Rational)> {
        self.roots
            .iter()
            .filter(|r| r.root.exact_value().is_none())
            .map(|r| r.root.bounds())
            .collect()
    }

    /// Roots found exactly.
    pub fn exact_roots(&self) -> Vec<Rational> {
        self.roots
            .iter()
            .filter_map(|r| r.root.exact_value().cloned())
            .collect()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.roots.iter().map(|r| r.multiplicity).collect()
    }

    /// Whether every root is simple.
    pub fn all_simple(&self) -> bool {
        self.roots.iter().all(|r| r.multiplicity == 1)
    }

    /// Refines every enclosure to width at most `tol`.
    pub fn refine_all(&mut self, tol: &Rational) {
        for r in &mut self.roots {
            r.root.refine_to(tol);
        }
    }
}

/// Isolates every distinct real root of `p`.
pub fn isolate_real_roots(p: &Polynomial) -> RootSet {
    if p.degree().unwrap_or(0) == 0 {
        return RootSet::default();
    }
    let mut all: Vec<IsolatedRoot> = Vec::new();
    for (factor, m) in p.squarefree_decomposition() {
        if factor.is_constant() {
            continue;
        }
        let tol = rational_root_tolerance(&factor.monic());
        for mut root in isolate_squarefree(&factor) {
            if let Some(tol) = &tol {
                pin_rational(&mut root, tol);
            }
            all.push(IsolatedRoot {
                root,
                multiplicity: m,
            });
        }
    }
    separate(&mut all);
    RootSet { roots: all }
}

/// Ascending isolating enclosures for the roots of a squarefree polynomial.
/// Unlike [`isolate_real_roots`], rational roots are not pinned down.
pub fn isolate_squarefree(f: &Polynomial) -> Vec<RealRoot> {
    let f = f.monic();
    if f.degree() == Some(1) {
        return vec![RealRoot::exact(-f.coeff(0))];
    }
    let chain = sturm_chain(&f).expect("degree >= 1");
    let b = cauchy_bound(&f);
    let mut out = Vec::new();
    let count = count_in(&chain, &-b.clone(), &b);
    bisect_isolate(&f, &chain, -b.clone(), b, count, &mut out);
    out
}

/// Largest clearing denominator for which rational roots are pinned.
const PIN_DENOMINATOR_BITS: u64 = 32;

/// `1 / L^2` where `L` clears the denominators of the monic `f`. Two
/// distinct fractions with denominators dividing `L` are at least `1 / L^2`
/// apart, so an enclosure narrower than that holds at most one candidate.
fn rational_root_tolerance(f: &Polynomial) -> Option<Rational> {
    let l = f
        .coeffs()
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        });
    if l.bits() > PIN_DENOMINATOR_BITS {
        return None;
    }
    Some(Rational::new(1.into(), &l * &l))
}

/// Replaces an open enclosure by the exact root when that root is rational.
fn pin_rational(root: &mut RealRoot, tol: &Rational) {
    let mut r = root.clone();
    while r.exact_value().is_none() && r.width() >= *tol {
        r.bisect();
    }
    if r.exact_value().is_none() {
        let (lo, hi) = r.bounds();
        let c = simplest_between(&lo, &hi);
        if r.poly().evaluate(&c).is_zero() {
            r = RealRoot::exact(c);
        }
    }
    *root = r;
}

fn count_in(chain: &SturmChain, lo: &Rational, hi: &Rational) -> usize {
    chain
        .count_between(
            &ExtendedRational::Finite(lo.clone()),
            &ExtendedRational::Finite(hi.clone()),
        )
        .expect("lo < hi")
}

/// Roots in `(lo, hi]`, appended in ascending order.
fn bisect_isolate(
    f: &Polynomial,
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    count: usize,
    out: &mut Vec<RealRoot>,
) {
    if count == 0 {
        return;
    }
    let f_hi = Sign::of(&f.evaluate(&hi));
    if count == 1 {
        if f_hi.is_zero() {
            out.push(RealRoot::exact(hi));
            return;
        }
        let f_lo = Sign::of(&f.evaluate(&lo));
        if !f_lo.is_zero() {
            out.push(RealRoot::from_sign_change(f.clone(), lo, hi, f_lo));
            return;
        }
    }
    let mid = midpoint(&lo, &hi);
    let left = count_in(chain, &lo, &mid);
    bisect_isolate(f, chain, lo, mid.clone(), left, out);
    bisect_isolate(f, chain, mid, hi, count - left, out);
}

/// Sorts roots of different factors and refines until enclosures are
/// pairwise disjoint. Terminates because the roots are distinct.
fn separate(roots: &mut [IsolatedRoot]) {
    loop {
        roots.sort_by(|a, b| {
            a.root
                .lo()
                .cmp(&b.root.lo())
                .then(a.root.hi().cmp(&b.root.hi()))
        });
        let mut clean = true;
        for i in 1..roots.len() {
            let (left, right) = roots.split_at_mut(i);
            let a = &mut left[i - 1].root;
            let b = &mut right[0].root;
            if overlap(a, b) {
                clean = false;
                a.bisect();
                b.bisect();
            }
        }
        if clean {
            return;
        }
    }
}

fn overlap(a: &RealRoot, b: &RealRoot) -> bool {
    let (al, ah) = a.bounds();
    let (bl, bh) = b.bounds();
    // Open intervals (or points) overlap unless one lies entirely left of
    // the other. An exact point on the open boundary of the other does not
    // overlap it.
    let strictly_left = |xh: &Rational, x_exact: bool, yl: &Rational, y_exact: bool| {
        if x_exact && y_exact {
            xh < yl
        } else {
            xh <= yl
        }
    };
    let ae = a.exact_value().is_some();
    let be = b.exact_value().is_some();
    !(strictly_left(&ah, ae, &bl, be) || strictly_left(&bh, be, &al, ae))
}

/// Refines an interval isolating a single root of `p` to width at most
/// `tol`. A zero-width result means the root was hit exactly.
pub fn refine_root(
    p: &Polynomial,
    iv: (&Rational, &Rational),
    tol: &Rational,
) -> Result<(Rational, Rational), RootsError> {
    if !tol.is_positive() {
        return Err(RootsError::InvalidTolerance);
    }
    let (lo, hi) = (iv.0.clone(), iv.1.clone());
    if p.is_zero() || lo > hi {
        return Err(RootsError::NotIsolating);
    }
    let f = p.squarefree_part();
    if lo == hi {
        return if f.evaluate(&lo).is_zero() {
            Ok((lo.clone(), lo))
        } else {
            Err(RootsError::NotIsolating)
        };
    }
    let chain = sturm_chain(&f).map_err(|_| RootsError::NotIsolating)?;
    let at_lo = f.evaluate(&lo).is_zero() as usize;
    if count_in(&chain, &lo, &hi) + at_lo != 1 {
        return Err(RootsError::NotIsolating);
    }
    if at_lo == 1 {
        return Ok((lo.clone(), lo));
    }
    if f.evaluate(&hi).is_zero() {
        return Ok((hi.clone(), hi));
    }
    let s = Sign::of(&f.evaluate(&lo));
    let mut root = RealRoot::from_sign_change(f.monic(), lo, hi, s);
    root.refine_to(tol);
    Ok(root.bounds())
}

/// The three ordered roots of `x^3 + px + q` as enclosures. Viete's
/// trigonometric formula supplies floating-point seeds; each seed is turned
/// into a certified enclosure by an exact sign change, falling back to Sturm
/// isolation if the seeds cannot be certified.
pub fn cubic_roots_ordered(p: &Rational, q: &Rational) -> Result<[RealRoot; 3], RootsError> {
    let disc = -int(4) * p * p * p - int(27) * q * q;
    if !p.is_negative() || !disc.is_positive() {
        return Err(RootsError::NotThreeRealRoots);
    }
    let f = Polynomial::new(vec![q.clone(), p.clone(), int(0), int(1)]);
    if let Some(roots) = viete_enclosures(&f, p, q) {
        return Ok(roots);
    }
    let roots = isolate_squarefree(&f);
    Ok([roots[0].clone(), roots[1].clone(), roots[2].clone()])
}

fn viete_seeds(p: f64, q: f64) -> [f64; 3] {
    let m = 2.0 * (-p / 3.0).sqrt();
    let arg = ((3.0 * q) / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
    let theta = arg.acos() / 3.0;
    let mut t: Vec<f64> = (0..3)
        .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos())
        .collect();
    t.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    [t[0], t[1], t[2]]
}

fn viete_enclosures(f: &Polynomial, p: &Rational, q: &Rational) -> Option<[RealRoot; 3]> {
    let seeds = viete_seeds(crate::rational::to_f64(p), crate::rational::to_f64(q));
    if seeds.iter().any(|s| !s.is_finite()) {
        return None;
    }
    let gap = (seeds[1] - seeds[0]).min(seeds[2] - seeds[1]);
    let radius = (gap / 4.0).min(1e-9 * (1.0 + seeds[2].abs()));
    if radius <= 0.0 || !radius.is_finite() {
        return None;
    }
    let mut out = Vec::with_capacity(3);
    for s in seeds {
        let lo = from_f64_dyadic(s - radius, 60);
        let hi = from_f64_dyadic(s + radius, 60);
        if lo >= hi {
            return None;
        }
        let sl = Sign::of(&f.evaluate(&lo));
        let sh = Sign::of(&f.evaluate(&hi));
        if sl.is_zero() {
            out.push(RealRoot::exact(lo));
        } else if sh.is_zero() {
            out.push(RealRoot::exact(hi));
        } else if sl != sh {
            out.push(RealRoot::from_sign_change(f.clone(), lo, hi, sl));
        } else {
            return None;
        }
    }
    // Three sign changes on disjoint intervals of a cubic certify all three
    // roots, one per interval.
    for w in out.windows(2) {
        if w[0].hi() >= w[1].lo() {
            return None;
        }
    }
    Some([out[0].clone(), out[1].clone(), out[2].clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::pow;
    use crate::rational::rat;

    #[test]
    fn sqrt_two_pair() {
        let rs = isolate_real_roots(&Polynomial::from_ints(&[-2, 0, 1]));
        assert_eq!(rs.len(), 2);
        assert!(rs.intervals().iter().all(|(lo, hi)| lo < hi));
        let v: Vec<f64> = rs
            .real_roots()
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.refine_to(&rat(1, 1 << 30));
                r.to_f64()
            })
            .collect();
        assert!((v[0] + 2f64.sqrt()).abs() < 1e-8 && (v[1] - 2f64.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn multiplicities_from_squarefree_decomposition() {
        let rs = isolate_real_roots(&Polynomial::from_ints(&[2, -3, 0, 1]));
        assert_eq!(rs.exact_roots(), vec![int(-2), int(1)]);
        assert_eq!(rs.multiplicities(), vec![1, 2]);

        let p =
            &pow(&Polynomial::from_ints(&[-2, 1]), 3) * &pow(&Polynomial::from_ints(&[3, 1]), 2);
        let rs = isolate_real_roots(&p);
        assert_eq!(rs.exact_roots(), vec![int(-3), int(2)]);
        assert_eq!(rs.multiplicities(), vec![2, 3]);
    }

    #[test]
    fn distinct_factors_are_separated() {
        // (x^2 - 2)(x^2 - 2 - 1/10^6) has nearby roots from different factors.
        let a = Polynomial::from_ints(&[-2, 0, 1]);
        let b = Polynomial::new(vec![-int(2) - rat(1, 1_000_000), int(0), int(1)]);
        let p = &(&a * &a) * &b;
        let rs = isolate_real_roots(&p);
        assert_eq!(rs.len(), 4);
        let r = rs.real_roots();
        for w in r.windows(2) {
            assert!(w[0].hi() <= w[1].lo());
        }
    }

    #[test]
    fn refine_contract() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        let tol = rat(1, 10_000_000_000);
        let (lo, hi) = refine_root(&p, (&int(1), &int(2)), &tol).unwrap();
        assert!(&hi - &lo <= tol);
        assert!(&lo * &lo < int(2) && &hi * &hi > int(2));
        let (lo, hi) =
            refine_root(&Polynomial::from_ints(&[-1, 1]), (&int(0), &int(4)), &tol).unwrap();
        assert_eq!((lo, hi), (int(1), int(1)));
        assert_eq!(
            refine_root(&p, (&int(-2), &int(2)), &tol),
            Err(RootsError::NotIsolating)
        );
    }

    #[test]
    fn cubic_roots() {
        let r = cubic_roots_ordered(&int(-1), &int(0)).unwrap();
        assert_eq!(r[0].cmp_rational(&int(-1)), Ordering::Equal);
        assert_eq!(r[1].cmp_rational(&int(0)), Ordering::Equal);
        assert_eq!(r[2].cmp_rational(&int(1)), Ordering::Equal);
        let r = cubic_roots_ordered(&int(-3), &int(1)).unwrap();
        let iso = isolate_real_roots(&Polynomial::from_ints(&[1, -3, 0, 1])).real_roots();
        for (a, b) in r.iter().zip(&iso) {
            let mut b = b.clone();
            b.refine_to(&rat(1, 1 << 30));
            assert!((a.to_f64() - b.to_f64()).abs() < 1e-6);
        }
        assert_eq!(
            cubic_roots_ordered(&int(-3), &int(2)).err(),
            Some(RootsError::NotThreeRealRoots)
        );
    }
}
