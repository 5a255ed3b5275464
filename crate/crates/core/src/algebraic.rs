//! Real algebraic numbers as certified enclosures.
//!
//! A [`RealRoot`] is a root of a squarefree rational polynomial together with
//! an open isolating interval (or the root itself when it is rational). An
//! [`Algebraic`] is a polynomial expression evaluated at such a root, which is
//! enough to represent every threshold in the crate: critical values
//! `R(alpha_k)`, square roots, `x1..x4`, the extreme-root product `X`.
//!
//! Signs are decided exactly. `sign_of(g)` first checks whether `g` shares
//! the root through a gcd, and only then refines the interval until an
//! interval evaluation of `g` excludes zero, which must happen because
//! `g(alpha) != 0`. Comparisons between values at different roots refine
//! both sides until their ranges separate; equality is certified when the
//! product of their annihilating polynomials has a single distinct real root
//! in the hull of the two ranges.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::matrix::Matrix;
use crate::poly::{gcd, Polynomial};
use crate::rational::{exact_sqrt, int, midpoint, to_f64, Rational, Sign};
use crate::sturm::{sturm_chain, ExtendedRational};

/// Default number of bisection rounds allowed for a single decision.
const EQUALITY_FIRST_ROUND: usize = 16;

const F64_REFINE_STEPS: usize = 200;

fn f64_tol(x: &Rational) -> Rational {
    let scale = if x.abs() > Rational::one() {
        x.abs()
    } else {
        Rational::one()
    };
    scale / Rational::from_integer(num_bigint::BigInt::from(1u64 << 53))
}

pub const DEFAULT_BUDGET: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraicError {
    #[error("interval does not isolate exactly one root")]
    NotIsolating,
    #[error("refinement budget of {0} rounds exhausted")]
    Unresolved(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Loc {
    Exact(Rational),
    /// `poly(lo)` and `poly(hi)` are nonzero with opposite signs and the
    /// open interval holds exactly one root.
    Open {
        lo: Rational,
        hi: Rational,
        lo_sign: Sign,
    },
}

#[derive(Clone, PartialEq, Eq)]
pub struct RealRoot {
    poly: Polynomial,
    loc: Loc,
}

impl RealRoot {
    pub fn exact(x: Rational) -> RealRoot {
        RealRoot {
            poly: Polynomial::linear_factor(&x),
            loc: Loc::Exact(x),
        }
    }

    /// Root of the squarefree `poly` isolated by the open interval
    /// `(lo, hi)`. Endpoints that are themselves roots are rejected.
    pub fn isolated(
        poly: &Polynomial,
        lo: Rational,
        hi: Rational,
    ) -> Result<RealRoot, AlgebraicError> {
        if lo >= hi || poly.degree().unwrap_or(0) == 0 {
            return Err(AlgebraicError::NotIsolating);
        }
        let poly = poly.monic();
        let sl = Sign::of(&poly.evaluate(&lo));
        let sh = Sign::of(&poly.evaluate(&hi));
        if sl.is_zero() || sh.is_zero() || sl == sh {
            return Err(AlgebraicError::NotIsolating);
        }
        let chain = sturm_chain(&poly).map_err(|_| AlgebraicError::NotIsolating)?;
        let count = chain
            .count_between(
                &ExtendedRational::Finite(lo.clone()),
                &ExtendedRational::Finite(hi.clone()),
            )
            .map_err(|_| AlgebraicError::NotIsolating)?;
        if count != 1 {
            return Err(AlgebraicError::NotIsolating);
        }
        Ok(Self::from_sign_change(poly, lo, hi, sl))
    }

    /// Trusted constructor: the caller guarantees the isolation invariant.
    pub(crate) fn from_sign_change(
        poly: Polynomial,
        lo: Rational,
        hi: Rational,
        lo_sign: Sign,
    ) -> RealRoot {
        if poly.degree() == Some(1) {
            let c = poly.coeffs();
            return RealRoot::exact(-&c[0] / &c[1]);
        }
        // Small rational roots are common in practice; one probe catches them.
        let quarter = (&hi - &lo) / Rational::from_integer(4.into());
        let probe = crate::rational::simplest_between(&(&lo + &quarter), &(&hi - &quarter));
        if probe > lo && probe < hi && poly.evaluate(&probe).is_zero() {
            return RealRoot::exact(probe);
        }
        RealRoot {
            poly,
            loc: Loc::Open { lo, hi, lo_sign },
        }
    }

    /// The defining squarefree polynomial (monic).
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn exact_value(&self) -> Option<&Rational> {
        match &self.loc {
            Loc::Exact(x) => Some(x),
            Loc::Open { .. } => None,
        }
    }

    /// Closed bounds; equal for an exact root.
    pub fn bounds(&self) -> (Rational, Rational) {
        match &self.loc {
            Loc::Exact(x) => (x.clone(), x.clone()),
            Loc::Open { lo, hi, .. } => (lo.clone(), hi.clone()),
        }
    }

    pub fn lo(&self) -> Rational {
        self.bounds().0
    }

    pub fn hi(&self) -> Rational {
        self.bounds().1
    }

    pub fn width(&self) -> Rational {
        let (lo, hi) = self.bounds();
        hi - lo
    }

    /// One bisection step. May land on the root exactly.
    pub fn bisect(&mut self) {
        let Loc::Open { lo, hi, lo_sign } = &mut self.loc else {
            return;
        };
        let mid = midpoint(lo, hi);
        let s = Sign::of(&self.poly.evaluate(&mid));
        if s.is_zero() {
            self.loc = Loc::Exact(mid);
        } else if s == *lo_sign {
            *lo = mid;
        } else {
            *hi = mid;
        }
    }

    /// Bisects until the width is at most `tol`.
    pub fn refine_to(&mut self, tol: &Rational) {
        while self.width() > *tol {
            self.bisect();
        }
    }

    /// Shrinks the interval to one with the given endpoints if it still
    /// brackets the root. Used to tighten with a floating-point guess.
    pub fn try_narrow(&mut self, lo: &Rational, hi: &Rational) -> bool {
        let Loc::Open {
            lo: l0,
            hi: h0,
            lo_sign,
        } = &self.loc
        else {
            return false;
        };
        if lo >= hi || lo < l0 || hi > h0 {
            return false;
        }
        let sl = Sign::of(&self.poly.evaluate(lo));
        let sh = Sign::of(&self.poly.evaluate(hi));
        if sl.is_zero() {
            self.loc = Loc::Exact(lo.clone());
            return true;
        }
        if sh.is_zero() {
            self.loc = Loc::Exact(hi.clone());
            return true;
        }
        if sl == *lo_sign && sh != *lo_sign {
            let lo_sign = *lo_sign;
            self.loc = Loc::Open {
                lo: lo.clone(),
                hi: hi.clone(),
                lo_sign,
            };
            return true;
        }
        false
    }

    /// Nearest double, after refining a copy to double precision.
    pub fn to_f64(&self) -> f64 {
        let mut r = self.clone();
        for _ in 0..F64_REFINE_STEPS {
            if r.width() <= f64_tol(&r.bounds().0) {
                break;
            }
            r.bisect();
        }
        let (lo, hi) = r.bounds();
        to_f64(&midpoint(&lo, &hi))
    }

    /// Exact sign of `g` at this root.
    pub fn sign_of(&self, g: &Polynomial, budget: usize) -> Result<Sign, AlgebraicError> {
        if let Loc::Exact(x) = &self.loc {
            return Ok(Sign::of(&g.evaluate(x)));
        }
        let g = g.rem(&self.poly).expect("nonzero");
        if g.is_constant() {
            return Ok(Sign::of(&g.coeff(0)));
        }
        let h = gcd(&self.poly, &g);
        if !h.is_constant() {
            let (lo, hi) = self.bounds();
            let a = Sign::of(&h.evaluate(&lo));
            let b = Sign::of(&h.evaluate(&hi));
            if a != b {
                return Ok(Sign::Zero);
            }
        }
        let mut r = self.clone();
        for _ in 0..budget {
            if let Loc::Exact(x) = &r.loc {
                return Ok(Sign::of(&g.evaluate(x)));
            }
            let (lo, hi) = r.bounds();
            let (mn, mx) = poly_range(&g, &lo, &hi);
            if mn.is_positive() {
                return Ok(Sign::Positive);
            }
            if mx.is_negative() {
                return Ok(Sign::Negative);
            }
            r.bisect();
        }
        Err(AlgebraicError::Unresolved(budget))
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, c: &Rational) -> Ordering {
        match &self.loc {
            Loc::Exact(x) => x.cmp(c),
            Loc::Open { lo, hi, lo_sign } => {
                if c <= lo {
                    Ordering::Greater
                } else if c >= hi {
                    Ordering::Less
                } else {
                    let s = Sign::of(&self.poly.evaluate(c));
                    if s.is_zero() {
                        Ordering::Equal
                    } else if s == *lo_sign {
                        // root lies in (c, hi)
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    }
                }
            }
        }
    }
}

impl fmt::Debug for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.loc {
            Loc::Exact(x) => write!(f, "RealRoot({x})"),
            Loc::Open { lo, hi, .. } => write!(f, "RealRoot({} in ({lo}, {hi}))", self.poly),
        }
    }
}

/// Interval Horner evaluation: a closed range containing `g([lo, hi])`.
pub fn poly_range(g: &Polynomial, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    if lo == hi {
        let v = g.evaluate(lo);
        return (v.clone(), v);
    }
    let mut a = Rational::zero();
    let mut b = Rational::zero();
    for c in g.coeffs().iter().rev() {
        let prods = [&a * lo, &a * hi, &b * lo, &b * hi];
        let mn = prods.iter().min().unwrap().clone();
        let mx = prods.iter().max().unwrap().clone();
        a = mn + c;
        b = mx + c;
    }
    (a, b)
}

/// A real algebraic value `expr(alpha)`.
#[derive(Clone, PartialEq, Eq)]
pub enum Algebraic {
    Rational(Rational),
    Expr { root: RealRoot, expr: Polynomial },
}

impl Algebraic {
    pub fn rational(x: Rational) -> Algebraic {
        Algebraic::Rational(x)
    }

    /// The root itself.
    pub fn from_root(root: RealRoot) -> Algebraic {
        Self::eval_at(&Polynomial::x(), root)
    }

    /// `expr(root)`, collapsed to a rational when possible.
    pub fn eval_at(expr: &Polynomial, root: RealRoot) -> Algebraic {
        if let Some(x) = root.exact_value() {
            return Algebraic::Rational(expr.evaluate(x));
        }
        let expr = expr.rem(root.poly()).expect("nonzero");
        if expr.is_constant() {
            return Algebraic::Rational(expr.coeff(0));
        }
        Algebraic::Expr { root, expr }
    }

    /// Positive square root of a non-negative rational.
    pub fn sqrt(d: &Rational) -> Algebraic {
        assert!(!d.is_negative(), "sqrt of a negative rational");
        if let Some(s) = exact_sqrt(d) {
            return Algebraic::Rational(s);
        }
        let hi = if *d > Rational::one() {
            d.clone()
        } else {
            Rational::one()
        };
        let poly = Polynomial::new(vec![-d.clone(), int(0), int(1)]);
        let root = RealRoot::from_sign_change(poly, Rational::zero(), hi, Sign::Negative);
        Algebraic::from_root(root)
    }

    /// `g(self)`.
    pub fn map(&self, g: &Polynomial) -> Algebraic {
        match self {
            Algebraic::Rational(x) => Algebraic::Rational(g.evaluate(x)),
            Algebraic::Expr { root, expr } => {
                // compose g(expr(x)) by Horner over polynomials
                let mut acc = Polynomial::zero();
                for c in g.coeffs().iter().rev() {
                    acc = &(&acc * expr) + &Polynomial::constant(c.clone());
                    acc = acc.rem(root.poly()).expect("nonzero");
                }
                Algebraic::eval_at(&acc, root.clone())
            }
        }
    }

    /// `a * self + b`.
    pub fn affine(&self, a: &Rational, b: &Rational) -> Algebraic {
        self.map(&Polynomial::new(vec![b.clone(), a.clone()]))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Algebraic::Rational(x) => Some(x),
            Algebraic::Expr { .. } => None,
        }
    }

    pub fn bounds(&self) -> (Rational, Rational) {
        match self {
            Algebraic::Rational(x) => (x.clone(), x.clone()),
            Algebraic::Expr { root, expr } => {
                let (lo, hi) = root.bounds();
                poly_range(expr, &lo, &hi)
            }
        }
    }

    pub fn width(&self) -> Rational {
        let (lo, hi) = self.bounds();
        hi - lo
    }

    pub fn refine(&mut self) {
        if let Algebraic::Expr { root, expr } = self {
            root.bisect();
            if let Some(x) = root.exact_value() {
                *self = Algebraic::Rational(expr.evaluate(x));
            }
        }
    }

    /// Refines until the enclosure width is at most `tol`.
    pub fn refine_to(&mut self, tol: &Rational, budget: usize) -> Result<(), AlgebraicError> {
        // Enclosures are costly next to bisection, so bisect in growing
        // batches between width checks.
        let mut spent = 0;
        let mut batch = 1;
        while spent < budget {
            if self.width() <= *tol {
                return Ok(());
            }
            let Algebraic::Expr { root, .. } = self else {
                return Ok(());
            };
            for _ in 0..batch.min(budget - spent) {
                root.bisect();
            }
            spent += batch;
            batch = (batch * 2).min(32);
            if let Algebraic::Expr { root, expr } = self {
                if let Some(x) = root.exact_value() {
                    *self = Algebraic::Rational(expr.evaluate(x));
                }
            }
        }
        if self.width() <= *tol {
            Ok(())
        } else {
            Err(AlgebraicError::Unresolved(budget))
        }
    }

    /// Nearest double, after refining a copy to double precision.
    pub fn to_f64(&self) -> f64 {
        let mut v = self.clone();
        for _ in 0..F64_REFINE_STEPS {
            if v.width() <= f64_tol(&v.bounds().0) {
                break;
            }
            v.refine();
        }
        let (lo, hi) = v.bounds();
        to_f64(&midpoint(&lo, &hi))
    }

    /// Monic polynomial vanishing at the value: the characteristic
    /// polynomial of multiplication by `expr` in `Q[x]/(f)`.
    pub fn annihilator(&self) -> Polynomial {
        match self {
            Algebraic::Rational(x) => Polynomial::linear_factor(x),
            Algebraic::Expr { root, expr } => {
                let f = root.poly();
                let d = f.degree().unwrap();
                let mut m = Matrix::zeros(d);
                let mut col = expr.clone();
                for j in 0..d {
                    for i in 0..d {
                        m[(i, j)] = col.coeff(i);
                    }
                    col = (&col * &Polynomial::x()).rem(f).expect("nonzero");
                }
                m.charpoly()
            }
        }
    }

    /// Exact sign.
    pub fn sign(&self, budget: usize) -> Result<Sign, AlgebraicError> {
        match self {
            Algebraic::Rational(x) => Ok(Sign::of(x)),
            Algebraic::Expr { root, expr } => root.sign_of(expr, budget),
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, c: &Rational, budget: usize) -> Result<Ordering, AlgebraicError> {
        match self {
            Algebraic::Rational(x) => Ok(x.cmp(c)),
            Algebraic::Expr { root, expr } => {
                let shifted = expr - &Polynomial::constant(c.clone());
                Ok(match root.sign_of(&shifted, budget)? {
                    Sign::Negative => Ordering::Less,
                    Sign::Zero => Ordering::Equal,
                    Sign::Positive => Ordering::Greater,
                })
            }
        }
    }

    /// Exact comparison of two algebraic values.
    pub fn compare(&self, other: &Algebraic, budget: usize) -> Result<Ordering, AlgebraicError> {
        match (self, other) {
            (Algebraic::Rational(a), Algebraic::Rational(b)) => return Ok(a.cmp(b)),
            (a, Algebraic::Rational(c)) => return a.cmp_rational(c, budget),
            (Algebraic::Rational(c), b) => return Ok(b.cmp_rational(c, budget)?.reverse()),
            (Algebraic::Expr { root: ra, expr: ea }, Algebraic::Expr { root: rb, expr: eb })
                if ra == rb =>
            {
                let diff = ea - eb;
                return Ok(Sign::into_ordering(ra.sign_of(&diff, budget)?));
            }
            _ => {}
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut chain = None;
        for round in 0..budget {
            let (al, ah) = a.bounds();
            let (bl, bh) = b.bounds();
            if ah < bl {
                return Ok(Ordering::Less);
            }
            if bh < al {
                return Ok(Ordering::Greater);
            }
            // Distinct values separate by refinement alone; the exact
            // equality test is costly, so try it only at widening intervals.
            if round >= EQUALITY_FIRST_ROUND && round.is_power_of_two() {
                let chain = chain.get_or_insert_with(|| {
                    let ann = &a.annihilator() * &b.annihilator();
                    sturm_chain(&ann).expect("degree >= 2")
                });
                let lo = if al < bl { al } else { bl };
                let hi = if ah > bh { ah } else { bh };
                if lo == hi {
                    return Ok(Ordering::Equal);
                }
                let inside = chain
                    .count_between(
                        &ExtendedRational::Finite(lo.clone()),
                        &ExtendedRational::Finite(hi),
                    )
                    .expect("lo < hi");
                let at_lo = chain.source().evaluate(&lo).is_zero() as usize;
                if inside + at_lo == 1 {
                    return Ok(Ordering::Equal);
                }
            }
            // Only one side may be rational by now; `refine` is a no-op on it.
            a.refine();
            b.refine();
            if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
                return Ok(x.cmp(y));
            }
        }
        Err(AlgebraicError::Unresolved(budget))
    }
}

impl Sign {
    pub fn into_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl From<Rational> for Algebraic {
    fn from(x: Rational) -> Self {
        Algebraic::Rational(x)
    }
}

impl fmt::Debug for Algebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebraic::Rational(x) => write!(f, "Algebraic({x})"),
            Algebraic::Expr { root, expr } => write!(f, "Algebraic({expr} at {root:?})"),
        }
    }
}

impl fmt::Display for Algebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebraic::Rational(x) => f.write_str(&crate::rational::format_rational(x)),
            Algebraic::Expr { .. } => {
                let (lo, hi) = self.bounds();
                let x = self.to_f64();
                let half = (to_f64(&hi) - to_f64(&lo)) / 2.0;
                write!(f, "~{x:.12}")?;
                // only report the enclosure when it is coarser than the printed digits
                if half > 1e-12 * x.abs().max(1.0) {
                    write!(f, " +/- {half:.1e}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn sqrt_two_bounds_and_sign() {
        let s = Algebraic::sqrt(&int(2));
        let mut t = s.clone();
        t.refine_to(&rat(1, 1 << 20), DEFAULT_BUDGET).unwrap();
        assert!((t.to_f64() - 2f64.sqrt()).abs() < 1e-6);
        assert_eq!(
            s.cmp_rational(&rat(141, 100), 64).unwrap(),
            Ordering::Greater
        );
        assert_eq!(s.cmp_rational(&rat(142, 100), 64).unwrap(), Ordering::Less);
        // (sqrt 2)^2 - 2 == 0 exactly
        let sq = s.map(&Polynomial::from_ints(&[-2, 0, 1]));
        assert_eq!(sq, Algebraic::Rational(int(0)));
        assert_eq!(Algebraic::sqrt(&rat(9, 4)), Algebraic::Rational(rat(3, 2)));
    }

    #[test]
    fn equal_values_at_different_roots() {
        // x^2 at +-sqrt(3) are both 3, but through different roots the
        // expression is reduced to a rational anyway; use x^3 - 3x instead
        // at roots of x^2 - 3: both give 0.
        let f = Polynomial::from_ints(&[-3, 0, 1]);
        let neg = RealRoot::isolated(&f, int(-2), int(-1)).unwrap();
        let pos = RealRoot::isolated(&f, int(1), int(2)).unwrap();
        let g = Polynomial::from_ints(&[0, 1, 0, 0, 1]); // x + x^4 -> 9 +- sqrt 3
        let a = Algebraic::eval_at(&g, neg);
        let b = Algebraic::eval_at(&g, pos);
        assert_eq!(a.compare(&b, 256).unwrap(), Ordering::Less);
        // sqrt(12)/2 == sqrt(3)
        let s12 = Algebraic::sqrt(&int(12)).affine(&rat(1, 2), &int(0));
        let s3 = Algebraic::sqrt(&int(3));
        assert_eq!(s12.compare(&s3, 256).unwrap(), Ordering::Equal);
    }

    #[test]
    fn sign_through_shared_factor() {
        let f = Polynomial::from_ints(&[-2, 0, 1]);
        let r = RealRoot::isolated(&f, int(1), int(2)).unwrap();
        // g = (x^2 - 2)(x + 5) vanishes at sqrt 2
        let g = &f * &Polynomial::from_ints(&[5, 1]);
        assert_eq!(r.sign_of(&g, 8).unwrap(), Sign::Zero);
        assert_eq!(
            r.sign_of(&Polynomial::from_ints(&[-1, 0, 0, 1]), 64)
                .unwrap(),
            Sign::Positive
        );
    }

    #[test]
    fn isolation_checks() {
        let f = Polynomial::from_ints(&[0, -1, 0, 1]);
        assert!(RealRoot::isolated(&f, int(-2), int(2)).is_err());
        assert!(RealRoot::isolated(&f, int(0), int(2)).is_err());
        assert!(RealRoot::isolated(&f, rat(1, 2), int(2)).is_ok());
    }

    #[test]
    fn annihilator_of_expression() {
        let s = Algebraic::sqrt(&int(2)).affine(&int(3), &int(1)); // 1 + 3 sqrt2
        let ann = s.annihilator();
        // (y - 1)^2 = 18
        assert_eq!(ann, Polynomial::from_ints(&[-17, -2, 1]));
    }
}
