//! Explicit conditions for depressed quartics and quintics.
//!
//! Quintics are parametrized as `x^5 + (10p/3)x^3 + 10qx^2 + 20rx + 20s`,
//! so that `P_5'/5 = x^4 + 2px^2 + 4qx + 4r` and `P_4'/4 = x^3 + px + q`
//! reuse the same letters. With this choice `R_2^0 = -px^2 - 3qx` and
//! `R_3^0 = -(4/3)px^3 - 6qx^2 - 16rx`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebraic::{Algebraic, AlgebraicError, RealRoot};
use crate::interlace::{multiplicity_profile, Bound, Interval};
use crate::poly::{discriminant, Polynomial};
use crate::rational::{exact_sqrt, int, rat, Rational, Sign};
use crate::roots::{cubic_roots_ordered, isolate_real_roots, isolate_squarefree};
use crate::sturm::{Condition, ConditionReport, Tri};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuinticError {
    #[error("polynomial is not a monic depressed polynomial of degree {0}")]
    NotDepressed(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),
    #[error("hypothesis (1) does not hold: no admissible s")]
    HypothesisFailed,
    #[error("9q^2 - 16pr must be positive")]
    NegativeDelta2,
    #[error("parameters outside the family's range: {0}")]
    OutOfRange(&'static str),
    #[error("enclosures could not be resolved within {0} refinement rounds")]
    Unresolved(usize),
}

impl From<AlgebraicError> for QuinticError {
    fn from(e: AlgebraicError) -> Self {
        match e {
            AlgebraicError::Unresolved(b) => QuinticError::Unresolved(b),
            AlgebraicError::NotIsolating => QuinticError::Unresolved(0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuinticParams {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub s: Rational,
}

impl QuinticParams {
    pub fn new(p: Rational, q: Rational, r: Rational, s: Rational) -> Self {
        QuinticParams { p, q, r, s }
    }

    /// `x^5 + (10p/3)x^3 + 10qx^2 + 20rx + 20s`.
    pub fn assemble(&self) -> Polynomial {
        Polynomial::new(vec![
            &self.s * int(20),
            &self.r * int(20),
            &self.q * int(10),
            &self.p * rat(10, 3),
            int(0),
            int(1),
        ])
    }

    pub fn disassemble(poly: &Polynomial) -> Result<Self, QuinticError> {
        if poly.degree() != Some(5) || !poly.is_monic() || !poly.is_depressed() {
            return Err(QuinticError::NotDepressed(5));
        }
        Ok(QuinticParams {
            p: poly.coeff(3) * rat(3, 10),
            q: poly.coeff(2) / int(10),
            r: poly.coeff(1) / int(20),
            s: poly.coeff(0) / int(20),
        })
    }

    /// Parameters of `P_5' / 5`.
    pub fn quartic(&self) -> QuarticParams {
        QuarticParams::new(self.p.clone(), self.q.clone(), self.r.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticParams {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
}

impl QuarticParams {
    pub fn new(p: Rational, q: Rational, r: Rational) -> Self {
        QuarticParams { p, q, r }
    }

    /// `x^4 + 2px^2 + 4qx + 4r`.
    pub fn assemble(&self) -> Polynomial {
        Polynomial::new(vec![
            &self.r * int(4),
            &self.q * int(4),
            &self.p * int(2),
            int(0),
            int(1),
        ])
    }

    pub fn disassemble(poly: &Polynomial) -> Result<Self, QuinticError> {
        if poly.degree() != Some(4) || !poly.is_monic() || !poly.is_depressed() {
            return Err(QuinticError::NotDepressed(4));
        }
        Ok(QuarticParams {
            p: poly.coeff(2) / int(2),
            q: poly.coeff(1) / int(4),
            r: poly.coeff(0) / int(4),
        })
    }

    /// `R_2^0 = -px^2 - 3qx`.
    pub fn r2_0(&self) -> Polynomial {
        Polynomial::new(vec![int(0), -(&self.q * int(3)), -self.p.clone()])
    }

    /// `R_2 = -px^2 - 3qx - 4r`.
    pub fn r2(&self) -> Polynomial {
        Polynomial::new(vec![
            -(&self.r * int(4)),
            -(&self.q * int(3)),
            -self.p.clone(),
        ])
    }

    /// `R_3^0 = -(4/3)px^3 - 6qx^2 - 16rx`.
    pub fn r3_0(&self) -> Polynomial {
        Polynomial::new(vec![
            int(0),
            -(&self.r * int(16)),
            -(&self.q * int(6)),
            -(&self.p * rat(4, 3)),
        ])
    }

    /// `x^5 + (10p/3)x^3 + 10qx^2 + 20rx + 20s` for the given `s`.
    pub fn with_s(&self, s: Rational) -> QuinticParams {
        QuinticParams::new(self.p.clone(), self.q.clone(), self.r.clone(), s)
    }
}

fn tri_of(o: Ordering, want: Ordering) -> Tri {
    if o == want {
        Tri::Yes
    } else if o == Ordering::Equal {
        Tri::Boundary
    } else {
        Tri::No
    }
}

fn tri_or_boundary(r: Result<Tri, AlgebraicError>) -> Tri {
    r.unwrap_or(Tri::Boundary)
}

/// Conditions for `x^4 + 2px^2 + 4qx + 4r` to have four distinct real
/// roots: `p < 0`, `|q| < 2(-p/3)^{3/2}` and
/// `4r in ]R_2^0(alpha_2), min(R_2^0(alpha_1), R_2^0(alpha_3))[`, with
/// `alpha_k` the ordered roots of `x^3 + px + q`.
pub fn quartic_conditions(qp: &QuarticParams, budget: usize) -> ConditionReport {
    let (p, q) = (&qp.p, &qp.q);
    let cubic_disc = -int(4) * p * p * p - int(27) * q * q;
    let c1 = Tri::negative(p);
    // |q| < 2(-p/3)^{3/2}  <=>  27q^2 < -4p^3 (given p < 0)
    let c2 = if c1 == Tri::Yes {
        Tri::positive(&cubic_disc)
    } else {
        Tri::No
    };
    let c3 = if c1 == Tri::Yes && c2 == Tri::Yes {
        let four_r = &qp.r * int(4);
        let alphas = cubic_roots_ordered(p, q).expect("checked above");
        let r2_0 = qp.r2_0();
        let v: Vec<Algebraic> = alphas
            .iter()
            .map(|a| Algebraic::eval_at(&r2_0, a.clone()))
            .collect();
        tri_or_boundary((|| {
            let lo = tri_of(v[1].cmp_rational(&four_r, budget)?, Ordering::Less);
            let hi1 = tri_of(v[0].cmp_rational(&four_r, budget)?, Ordering::Greater);
            let hi3 = tri_of(v[2].cmp_rational(&four_r, budget)?, Ordering::Greater);
            Ok(Tri::all([lo, hi1, hi3]))
        })())
    } else if c1 == Tri::No || c2 == Tri::No {
        Tri::No
    } else {
        Tri::Boundary
    };
    ConditionReport::from_conditions(vec![
        Condition {
            name: "p<0",
            value: Some(p.clone()),
            holds: c1,
        },
        Condition {
            name: "-4p^3-27q^2>0",
            value: Some(cubic_disc),
            holds: c2,
        },
        Condition {
            name: "4r in ]R2^0(a2), min R2^0(a1,a3)[",
            value: Some(&qp.r * int(4)),
            holds: c3,
        },
    ])
}

/// Branch of the sufficient conditions on `r` and `X = alpha_1 alpha_4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RRange {
    /// `r < p^2/9`: the hypothesis always holds.
    Low,
    /// `p^2/9 <= r <= 5p^2/36`: holds when `X < x1`.
    Middle,
    /// `5p^2/36 <= r <= 4p^2/27`: holds when `x2 < X < x1`.
    Upper,
    /// `r > 4p^2/27`: no five-real-rooted extension.
    Excluded,
}

impl fmt::Display for RRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RRange::Low => "r<p^2/9",
            RRange::Middle => "p^2/9<=r<=5p^2/36, X<x1",
            RRange::Upper => "5p^2/36<=r<=4p^2/27, x2<X<x1",
            RRange::Excluded => "r>4p^2/27",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    /// Final answer (the direct evaluation).
    pub holds: Tri,
    /// `sup_{k in {1,3}} R_3^0(alpha_k) < inf_{k in {2,4}} R_3^0(alpha_k)`
    /// evaluated at the four roots of `P_4`.
    pub direct: Tri,
    /// Sign of `(6r/p - p)X(X^2 - 4r) + (9q^2/p + 2r)X^2 - 8r^2 < 0` at the
    /// extreme-root product `X`.
    pub via_x: Tri,
    /// Prediction of the `r`/`X` branches (sufficient conditions; `Boundary`
    /// marks bands they leave open).
    pub branch_prediction: Tri,
    pub case: RRange,
    pub x: Algebraic,
    /// `x1, x2, x3, x4`; `None` when the square root is not real.
    pub thresholds: [Option<Algebraic>; 4],
    /// `R_3^0` at the ordered roots of `P_4`.
    pub r3_values: Vec<Algebraic>,
}

impl HypothesisReport {
    /// Both routes give the same yes/no answer.
    pub fn routes_agree(&self) -> bool {
        (self.direct == Tri::Yes) == (self.via_x == Tri::Yes)
    }
}

/// `(6r/p - p)X(X^2 - 4r) + (9q^2/p + 2r)X^2 - 8r^2`.
pub fn eq2_polynomial(qp: &QuarticParams) -> Polynomial {
    let (p, q, r) = (&qp.p, &qp.q, &qp.r);
    let a = int(6) * r / p - p;
    let b = int(9) * q * q / p + int(2) * r;
    // a X^3 + b X^2 - 4ar X - 8r^2
    Polynomial::new(vec![-int(8) * r * r, -int(4) * &a * r, b, a])
}

/// `(4r - X^2)^2 (X^2 - 2pX + 4r) - 16q^2 X^3`, vanishing at every product
/// of two roots of `P_4`.
pub fn product_resolvent(qp: &QuarticParams) -> Polynomial {
    let (p, q, r) = (&qp.p, &qp.q, &qp.r);
    let a = Polynomial::new(vec![r * int(4), int(0), int(-1)]);
    let b = Polynomial::new(vec![r * int(4), -(p * int(2)), int(1)]);
    let c = Polynomial::monomial(int(16) * q * q, 3);
    &(&(&a * &a) * &b) - &c
}

/// `X = alpha_1 alpha_4` as an algebraic number, isolated as a root of the
/// product resolvent inside the product of the two root enclosures.
fn extreme_product(
    qp: &QuarticParams,
    roots: &[RealRoot],
    budget: usize,
) -> Result<Algebraic, QuinticError> {
    let e = product_resolvent(qp).squarefree_part();
    let mut a = roots[0].clone();
    let mut d = roots[3].clone();
    for _ in 0..budget {
        let (al, ah) = a.bounds();
        let (dl, dh) = d.bounds();
        let prods = [&al * &dl, &al * &dh, &ah * &dl, &ah * &dh];
        let lo = prods.iter().min().unwrap().clone();
        let hi = prods.iter().max().unwrap().clone();
        if lo == hi {
            return Ok(Algebraic::Rational(lo));
        }
        if let Ok(x) = RealRoot::isolated(&e, lo.clone(), hi.clone()) {
            return Ok(Algebraic::from_root(x));
        }
        a.bisect();
        d.bisect();
    }
    Err(QuinticError::Unresolved(budget))
}

/// Thresholds `x1, x2 = (4p +- 2 sqrt(4p^2 - 27r))/3` and
/// `x3, x4 = (-p +- sqrt(p^2 + 12r))/3`.
pub fn r_thresholds(qp: &QuarticParams) -> [Option<Algebraic>; 4] {
    let (p, r) = (&qp.p, &qp.r);
    let d12 = int(4) * p * p - int(27) * r;
    let d34 = p * p + int(12) * r;
    let third = rat(1, 3);
    let pair = |d: &Rational, center: Rational, coef: Rational| -> [Option<Algebraic>; 2] {
        if d.is_negative() {
            return [None, None];
        }
        let s = Algebraic::sqrt(d);
        [
            Some(s.affine(&coef, &center)),
            Some(s.affine(&-coef.clone(), &center)),
        ]
    };
    let [x1, x2] = pair(&d12, p * int(4) * &third, int(2) * &third);
    let [x3, x4] = pair(&d34, -p * &third, third.clone());
    [x1, x2, x3, x4]
}

/// Decides hypothesis (1) of the quintic theorem for the quartic `P_4`.
pub fn hypothesis_check(
    qp: &QuarticParams,
    budget: usize,
) -> Result<HypothesisReport, QuinticError> {
    if quartic_conditions(qp, budget).verdict != Tri::Yes {
        return Err(QuinticError::PreconditionFailed(
            "P4 must have four distinct real roots",
        ));
    }
    let roots = isolate_squarefree(&qp.assemble());
    debug_assert_eq!(roots.len(), 4);
    let r3_0 = qp.r3_0();
    let v: Vec<Algebraic> = roots
        .iter()
        .map(|a| Algebraic::eval_at(&r3_0, a.clone()))
        .collect();

    // direct: every lower bound (k = 1, 3) below every upper bound (k = 2, 4)
    let mut direct = Tri::Yes;
    for lo in [&v[0], &v[2]] {
        for hi in [&v[1], &v[3]] {
            let t = tri_or_boundary(lo.compare(hi, budget).map(|o| tri_of(o, Ordering::Less)));
            direct = Tri::all([direct, t]);
        }
    }

    let x = extreme_product(qp, &roots, budget)?;
    let f = eq2_polynomial(qp);
    let via_x = tri_or_boundary(x.map(&f).sign(budget).map(|s| match s {
        Sign::Negative => Tri::Yes,
        Sign::Zero => Tri::Boundary,
        Sign::Positive => Tri::No,
    }));

    let (p, r) = (&qp.p, &qp.r);
    let p2 = p * p;
    let case = if *r < &p2 / int(9) {
        RRange::Low
    } else if *r <= &p2 * rat(5, 36) {
        RRange::Middle
    } else if *r <= &p2 * rat(4, 27) {
        RRange::Upper
    } else {
        RRange::Excluded
    };
    let thresholds = r_thresholds(qp);
    let below = |t: &Option<Algebraic>| -> Tri {
        match t {
            Some(t) => tri_or_boundary(x.compare(t, budget).map(|o| tri_of(o, Ordering::Less))),
            None => Tri::Boundary,
        }
    };
    let above = |t: &Option<Algebraic>| -> Tri {
        match t {
            Some(t) => tri_or_boundary(x.compare(t, budget).map(|o| tri_of(o, Ordering::Greater))),
            None => Tri::Boundary,
        }
    };
    let branch_prediction = match case {
        RRange::Low => Tri::Yes,
        RRange::Middle => match below(&thresholds[0]) {
            Tri::Yes => Tri::Yes,
            _ => Tri::Boundary,
        },
        RRange::Upper => match Tri::all([below(&thresholds[0]), above(&thresholds[1])]) {
            Tri::Yes => Tri::Yes,
            _ => Tri::Boundary,
        },
        RRange::Excluded => Tri::No,
    };

    Ok(HypothesisReport {
        holds: direct,
        direct,
        via_x,
        branch_prediction,
        case,
        x,
        thresholds,
        r3_values: v,
    })
}

/// Open interval of `s` making the quintic all-real with distinct roots:
/// `20s in ]max(R_3^0(alpha_1), R_3^0(alpha_3)), min(R_3^0(alpha_2), R_3^0(alpha_4))[`.
pub fn admissible_s_interval(qp: &QuarticParams, budget: usize) -> Result<Interval, QuinticError> {
    let rep = hypothesis_check(qp, budget)?;
    if rep.holds != Tri::Yes {
        return Err(QuinticError::HypothesisFailed);
    }
    let v = &rep.r3_values;
    let pick = |a: &Algebraic, b: &Algebraic, want: Ordering| -> Result<Algebraic, QuinticError> {
        Ok(if a.compare(b, budget)? == want {
            a.clone()
        } else {
            b.clone()
        })
    };
    let lo = pick(&v[0], &v[2], Ordering::Greater)?;
    let hi = pick(&v[1], &v[3], Ordering::Less)?;
    Ok(Interval::new(Bound::Value(lo), Bound::Value(hi)).scale(&rat(1, 20)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SublevelInterval {
    /// Bounds for `s` (already divided by 20).
    pub interval: Interval,
    /// `9q^2 - 16pr`.
    pub delta2: Rational,
    /// The closed form `-9q^3/p^2 + 24qr/p -+ delta2^{3/2}/(3p^2)` equals
    /// `R_3^0` at the roots of `R_2` exactly.
    pub closed_form_agrees: bool,
}

/// Wider interval on which `R_3` has three distinct real roots interlacing
/// the roots of `R_2`.
pub fn sublevel_s_interval_via_r2_roots(
    qp: &QuarticParams,
    budget: usize,
) -> Result<SublevelInterval, QuinticError> {
    let (p, q, r) = (&qp.p, &qp.q, &qp.r);
    let delta2 = int(9) * q * q - int(16) * p * r;
    if !delta2.is_positive() || p.is_zero() {
        return Err(QuinticError::NegativeDelta2);
    }
    // roots of R_2 = -px^2 - 3qx - 4r: x = (3q -+ sqrt(delta2)) / (-2p)
    let sq = Algebraic::sqrt(&delta2);
    let inv = -Rational::one() / (p * int(2));
    let betas = [
        sq.affine(&-inv.clone(), &(q * int(3) * &inv)),
        sq.affine(&inv, &(q * int(3) * &inv)),
    ];
    let r3_0 = qp.r3_0();
    let vals: Vec<Algebraic> = betas.iter().map(|b| b.map(&r3_0)).collect();
    let (lo, hi) = if vals[0].compare(&vals[1], budget)? == Ordering::Greater {
        (vals[1].clone(), vals[0].clone())
    } else {
        (vals[0].clone(), vals[1].clone())
    };
    let p2 = p * p;
    let center = -int(9) * q * q * q / &p2 + int(24) * q * r / p;
    let half = &delta2 / (int(3) * &p2);
    let cf_lo = sq.affine(&-half.clone(), &center);
    let cf_hi = sq.affine(&half, &center);
    let closed_form_agrees = lo.compare(&cf_lo, budget)? == Ordering::Equal
        && hi.compare(&cf_hi, budget)? == Ordering::Equal;
    Ok(SublevelInterval {
        interval: Interval::new(Bound::Value(lo), Bound::Value(hi)).scale(&rat(1, 20)),
        delta2,
        closed_form_agrees,
    })
}

/// Root of the linear remainder `T_1 = -rem(R_3, R_3')`:
/// `3(-10sp + 4qr) / (16pr - 9q^2)`; `None` when the denominator vanishes.
pub fn t1_root(qp: &QuinticParams) -> Option<Rational> {
    let (p, q, r, s) = (&qp.p, &qp.q, &qp.r, &qp.s);
    let den = int(16) * p * r - int(9) * q * q;
    if den.is_zero() {
        return None;
    }
    Some(int(3) * (-int(10) * s * p + int(4) * q * r) / den)
}

/// A member of a degenerate family: `(q, s)` for fixed `(p, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub q: Algebraic,
    pub s: Algebraic,
    /// The double-root factor is `x^2 - Yx + X` and the simple root `-2Y`.
    pub x: Algebraic,
    pub y: Algebraic,
    /// Exact parameters when `q` and `s` are rational.
    pub params: Option<QuinticParams>,
    /// Polynomial in `Y` that must vanish for the factorization
    /// `P_5 = (x^2 - Yx + X)^2 (x + 2Y)` to match `r`; reduced modulo the
    /// defining polynomial of `Y` it is identically zero.
    pub residual: Polynomial,
    /// Defining polynomial of `Y`.
    pub y_poly: Polynomial,
}

impl FamilyMember {
    /// Exact check that the factorization reproduces `r`.
    pub fn residual_vanishes(&self) -> bool {
        self.residual
            .rem(&self.y_poly)
            .map(|r| r.is_zero())
            .unwrap_or(false)
    }

    /// Exact check of `729 q^2 = 8 [11p^3 - 81pr + sign 2 D^{3/2}]` with
    /// `D = 4p^2 - 27r` and `sign` = +1 for the consecutive family, -1 for
    /// the separated one.
    pub fn q_squared_condition(
        &self,
        p: &Rational,
        r: &Rational,
        sign: i64,
        budget: usize,
    ) -> Result<bool, QuinticError> {
        let d = int(4) * p * p - int(27) * r;
        let sd = Algebraic::sqrt(&d);
        let rhs = sd.affine(
            &(int(16) * int(sign) * &d / int(729)),
            &(int(8) * (int(11) * p * p * p - int(81) * p * r) / int(729)),
        );
        let q2 = self.q.map(&Polynomial::monomial(int(1), 2));
        Ok(q2.compare(&rhs, budget)? == Ordering::Equal)
    }

    /// Whether `x^2 - Yx + X` has two distinct real roots different from
    /// `-2Y`, i.e. the multiplicity profile is `{2, 2, 1}`.
    pub fn is_two_doubles(&self, budget: usize) -> Result<bool, QuinticError> {
        let y = &self.y;
        let disc = y.map(&Polynomial::new(vec![int(0), int(0), int(1)]));
        let x = &self.x;
        let disc = alg_sub(&disc, &x.affine(&int(4), &int(0)), budget)?;
        let collide = alg_add(&y.map(&Polynomial::monomial(int(6), 2)), x, budget)?;
        Ok(disc.sign(budget)? == Sign::Positive && collide.sign(budget)? != Sign::Zero)
    }
}

/// `a - b` for values sharing the same root (or rational).
fn alg_sub(a: &Algebraic, b: &Algebraic, budget: usize) -> Result<Algebraic, QuinticError> {
    alg_add(a, &b.affine(&int(-1), &int(0)), budget)
}

fn alg_add(a: &Algebraic, b: &Algebraic, _budget: usize) -> Result<Algebraic, QuinticError> {
    match (a, b) {
        (Algebraic::Rational(x), other) | (other, Algebraic::Rational(x)) => {
            Ok(other.affine(&int(1), x))
        }
        (Algebraic::Expr { root: ra, expr: ea }, Algebraic::Expr { root: rb, expr: eb })
            if ra == rb =>
        {
            Ok(Algebraic::eval_at(&(ea + eb), ra.clone()))
        }
        _ => Err(QuinticError::Unresolved(0)),
    }
}

/// Which double-root family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Two consecutive double roots (`X = x1`).
    Consecutive,
    /// Two double roots around the simple one (`X = x2`).
    Separated,
}

/// `Y` satisfies `(Y^2 + 2p/9)^2 = (16/81)(4p^2 - 27r)`; the family fixes
/// `X = (3/2)Y^2 + 5p/3`, `q = Y^3/2 + pY/3`, `s = X^2 Y / 10`.
fn family_members(
    p: &Rational,
    r: &Rational,
    family: Family,
    budget: usize,
) -> Result<Vec<FamilyMember>, QuinticError> {
    let d = int(4) * p * p - int(27) * r;
    let c = p * rat(2, 9);
    // (y^2 + c)^2 - (16/81) d
    let y_poly = Polynomial::new(vec![
        &c * &c - rat(16, 81) * &d,
        int(0),
        &c * int(2),
        int(0),
        int(1),
    ]);
    let roots = isolate_real_roots(&y_poly).real_roots();
    // |Y| largest for the consecutive family, smallest for the separated one
    let chosen: Vec<RealRoot> = match family {
        Family::Consecutive => {
            let mut v = vec![roots[0].clone()];
            if roots.len() > 1 {
                v.push(roots[roots.len() - 1].clone());
            }
            v
        }
        Family::Separated => match roots.len() {
            4 => vec![roots[1].clone(), roots[2].clone()],
            3 => vec![roots[1].clone()],
            2 if d.is_zero() => roots.clone(),
            _ => {
                return Err(QuinticError::OutOfRange(
                    "Y^2 = -2p/9 - (4/9)sqrt(D) is negative",
                ))
            }
        },
    };
    let x_poly = Polynomial::new(vec![p * rat(5, 3), int(0), rat(3, 2)]);
    let q_poly = Polynomial::new(vec![int(0), p / int(3), int(0), rat(1, 2)]);
    let s_poly = &(&x_poly * &x_poly) * &Polynomial::new(vec![int(0), rat(1, 10)]);
    // X^2 - 4XY^2 - 20r
    let residual = &(&(&x_poly * &x_poly) - &(&x_poly * &Polynomial::monomial(int(4), 2)))
        - &Polynomial::constant(r * int(20));
    let mut out = Vec::new();
    for root in chosen {
        let y = Algebraic::from_root(root.clone());
        let q = Algebraic::eval_at(&q_poly, root.clone());
        let s = Algebraic::eval_at(&s_poly, root.clone());
        let x = Algebraic::eval_at(&x_poly, root);
        let params = match (q.as_rational(), s.as_rational()) {
            (Some(q), Some(s)) => Some(QuinticParams::new(
                p.clone(),
                q.clone(),
                r.clone(),
                s.clone(),
            )),
            _ => None,
        };
        out.push(FamilyMember {
            q,
            s,
            x,
            y,
            params,
            residual: residual.clone(),
            y_poly: y_poly.clone(),
        });
    }
    // q >= 0 first
    let mut keyed = Vec::new();
    for m in out {
        let sgn = m.q.sign(budget)?;
        keyed.push((sgn, m));
    }
    keyed.sort_by_key(|(s, _)| match s {
        Sign::Positive | Sign::Zero => 0,
        Sign::Negative => 1,
    });
    Ok(keyed.into_iter().map(|(_, m)| m).collect())
}

/// Parameters giving two consecutive double roots.
/// Requires `p < 0`, `-p^2/12 <= r <= 4p^2/27` and `x1 <= -p/3`.
pub fn degenerate_consecutive(
    p: &Rational,
    r: &Rational,
    budget: usize,
) -> Result<Vec<FamilyMember>, QuinticError> {
    if !p.is_negative() {
        return Err(QuinticError::OutOfRange("p must be negative"));
    }
    let p2 = p * p;
    if *r < -&p2 / int(12) || *r > &p2 * rat(4, 27) {
        return Err(QuinticError::OutOfRange("r must lie in [-p^2/12, 4p^2/27]"));
    }
    let x1 = r_thresholds(&QuarticParams::new(p.clone(), int(0), r.clone()))[0]
        .clone()
        .expect("D >= 0 in range");
    if x1.cmp_rational(&(-p / int(3)), budget)? == Ordering::Greater {
        return Err(QuinticError::OutOfRange("x1 must not exceed -p/3"));
    }
    family_members(p, r, Family::Consecutive, budget)
}

/// Parameters giving double roots `a < c < b` around a simple root `c`.
/// Requires `p < 0` and `5p^2/36 <= r <= 4p^2/27`.
pub fn degenerate_separated(
    p: &Rational,
    r: &Rational,
    budget: usize,
) -> Result<Vec<FamilyMember>, QuinticError> {
    if !p.is_negative() {
        return Err(QuinticError::OutOfRange("p must be negative"));
    }
    let p2 = p * p;
    if *r < &p2 * rat(5, 36) || *r > &p2 * rat(4, 27) {
        return Err(QuinticError::OutOfRange("r must lie in [5p^2/36, 4p^2/27]"));
    }
    family_members(p, r, Family::Separated, budget)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleDouble {
    pub q: Algebraic,
    pub r: Rational,
    pub s: Algebraic,
    /// Present when `-8p^3/729` is a rational square.
    pub params: Option<QuinticParams>,
}

/// `r = 4p^2/27`, `q^2 = -8p^3/729`, `s = 4pq/5`: a triple root and a
/// double root. Both signs of `q` are returned, `q >= 0` first.
pub fn triple_double_point(p: &Rational) -> Result<Vec<TripleDouble>, QuinticError> {
    if !p.is_negative() {
        return Err(QuinticError::OutOfRange("p must be negative"));
    }
    let r = p * p * rat(4, 27);
    let q2 = -int(8) * p * p * p / int(729);
    let qpos = match exact_sqrt(&q2) {
        Some(v) => Algebraic::Rational(v),
        None => Algebraic::sqrt(&q2),
    };
    let four_p_5 = p * rat(4, 5);
    let mut out = Vec::new();
    for sign in [1, -1] {
        let q = qpos.affine(&int(sign), &int(0));
        let s = q.affine(&four_p_5, &int(0));
        let params = match (q.as_rational(), s.as_rational()) {
            (Some(q), Some(s)) => Some(QuinticParams::new(
                p.clone(),
                q.clone(),
                r.clone(),
                s.clone(),
            )),
            _ => None,
        };
        out.push(TripleDouble {
            q,
            r: r.clone(),
            s,
            params,
        });
    }
    Ok(out)
}

/// Discriminant and multiplicity profile of an exact member, for checks.
pub fn exact_profile(qp: &QuinticParams) -> (Rational, Vec<usize>) {
    let p5 = qp.assemble();
    (
        discriminant(&p5).expect("degree 5"),
        multiplicity_profile(&p5),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interlace::{certify_all_real, Membership};
    use crate::sturm::all_real_rooted_sturm;

    const B: usize = 256;

    fn qa(p: Rational, q: Rational, r: Rational) -> QuarticParams {
        QuarticParams::new(p, q, r)
    }

    #[test]
    fn assemble_round_trip() {
        let qp = QuinticParams::new(rat(-9, 2), int(1), int(3), rat(-18, 5));
        let p5 = qp.assemble();
        assert_eq!(p5, Polynomial::from_ints(&[-72, 60, 10, -15, 0, 1]));
        assert_eq!(QuinticParams::disassemble(&p5).unwrap(), qp);
        let z = QuinticParams::new(int(0), int(0), int(0), int(0));
        assert_eq!(z.assemble(), Polynomial::monomial(int(1), 5));
        assert!(QuinticParams::disassemble(&Polynomial::from_ints(&[0, 0, 0, 0, 1, 1])).is_err());
        // P5' / 5 is the quartic with the same letters
        let d = p5.derivative().scale(&rat(1, 5));
        assert_eq!(d, qp.quartic().assemble());
    }

    #[test]
    fn quartic_condition_examples() {
        let rep = quartic_conditions(&qa(int(-2), int(0), rat(1, 4)), B);
        assert_eq!(rep.verdict, Tri::Yes);
        let rep = quartic_conditions(&qa(int(-2), int(0), int(1)), B);
        assert_eq!(rep.verdict, Tri::Boundary);
        let rep = quartic_conditions(&qa(int(1), int(0), int(0)), B);
        assert_eq!(rep.verdict, Tri::No);
        // r-interval for p = -2, q = 0 is ]0, 1[
        assert_eq!(
            quartic_conditions(&qa(int(-2), int(0), int(0)), B).verdict,
            Tri::Boundary
        );
        assert_eq!(
            quartic_conditions(&qa(int(-2), int(0), rat(-1, 2)), B).verdict,
            Tri::No
        );
    }

    #[test]
    fn product_resolvent_vanishes_at_products() {
        // roots 1, 2, -1, -2 -> x^4 - 5x^2 + 4: p = -5/2, q = 0, r = 1
        let qp = qa(rat(-5, 2), int(0), int(1));
        let e = product_resolvent(&qp);
        for x in [2, -1, -2, -4] {
            assert!(e.evaluate(&int(x)).is_zero());
        }
    }

    #[test]
    fn hypothesis_low_branch_holds() {
        let qp = qa(int(-3), rat(1, 3), rat(1, 2));
        let rep = hypothesis_check(&qp, B).unwrap();
        assert_eq!(rep.case, RRange::Low);
        assert_eq!(rep.holds, Tri::Yes);
        assert!(rep.routes_agree());
    }

    #[test]
    fn hypothesis_excluded_band_fails() {
        // p = -3: 4p^2/27 = 4/3 < r < p^2/4 = 9/4
        let qp = qa(int(-3), rat(1, 10), rat(3, 2));
        assert_eq!(quartic_conditions(&qp, B).verdict, Tri::Yes);
        let rep = hypothesis_check(&qp, B).unwrap();
        assert_eq!(rep.case, RRange::Excluded);
        assert_eq!(rep.holds, Tri::No);
        assert!(rep.routes_agree());
    }

    #[test]
    fn s_interval_yields_real_rooted_quintics() {
        let qp = qa(int(-3), rat(1, 3), rat(1, 2));
        let iv = admissible_s_interval(&qp, B).unwrap();
        let (lo, hi) = iv.to_f64();
        assert!(lo < hi);
        let mid = crate::rational::from_f64_dyadic((lo + hi) / 2.0, 40);
        assert_eq!(iv.membership(&mid, B).unwrap(), Membership::Inside);
        assert!(all_real_rooted_sturm(&qp.with_s(mid).assemble()));
        let sub = sublevel_s_interval_via_r2_roots(&qp, B).unwrap();
        assert!(sub.closed_form_agrees);
        let (slo, shi) = sub.interval.to_f64();
        assert!(slo <= lo && hi <= shi);
    }

    #[test]
    fn s_interval_errors() {
        assert!(matches!(
            admissible_s_interval(&qa(rat(-9, 2), int(1), int(3)), B),
            Err(QuinticError::PreconditionFailed(_))
        ));
        assert!(matches!(
            admissible_s_interval(&qa(int(-3), int(0), int(0)), B),
            Err(QuinticError::PreconditionFailed(_))
        ));
        assert_eq!(
            sublevel_s_interval_via_r2_roots(&qa(int(-3), int(0), int(0)), B).unwrap_err(),
            QuinticError::NegativeDelta2
        );
        // 9q^2 - 16pr = 9 - 48 < 0 here; r = 1 gives 9 + 48 = 57
        assert_eq!(
            sublevel_s_interval_via_r2_roots(&qa(int(-3), int(1), int(-1)), B).unwrap_err(),
            QuinticError::NegativeDelta2
        );
        let sub = sublevel_s_interval_via_r2_roots(&qa(int(-3), int(1), int(1)), B).unwrap();
        assert_eq!(sub.delta2, int(57));
        assert!(sub.closed_form_agrees);
    }

    #[test]
    fn t1_root_matches_remainder() {
        let qp = QuinticParams::new(int(-3), rat(1, 2), rat(1, 5), rat(-1, 7));
        let r3 = &qp.quartic().r3_0() - &Polynomial::constant(&qp.s * int(20));
        let t1 = -r3.rem(&r3.derivative()).unwrap();
        let g = t1_root(&qp).unwrap();
        assert!(t1.evaluate(&g).is_zero());
    }

    #[test]
    fn triple_double_golden() {
        let v = triple_double_point(&rat(-9, 2)).unwrap();
        let first = v[0].params.clone().unwrap();
        assert_eq!(
            first,
            QuinticParams::new(rat(-9, 2), int(1), int(3), rat(-18, 5))
        );
        assert_eq!(
            first.assemble(),
            Polynomial::from_ints(&[-72, 60, 10, -15, 0, 1])
        );
        let second = v[1].params.clone().unwrap();
        assert_eq!((second.q, second.s), (int(-1), rat(18, 5)));
        let (disc, profile) = exact_profile(&first);
        assert!(disc.is_zero());
        assert_eq!(profile, vec![3, 2]);
        // p = -9k^2/2 gives q = +-k^3
        let v = triple_double_point(&rat(-9 * 4, 2)).unwrap();
        assert_eq!(v[0].q, Algebraic::Rational(int(8)));
        assert!(triple_double_point(&int(-1)).unwrap()[0].params.is_none());
    }

    #[test]
    fn consecutive_family_exact_point() {
        // d = 1, m = 3: p = 2 - 9/2 = -5/2, r = (4p^2 - 1)/27 = 24/27
        let p = rat(-5, 2);
        let r = (int(4) * &p * &p - int(1)) / int(27);
        let fam = degenerate_consecutive(&p, &r, B).unwrap();
        assert_eq!(fam.len(), 2);
        for m in &fam {
            let qp = m.params.clone().expect("rational point");
            let (disc, profile) = exact_profile(&qp);
            assert!(disc.is_zero());
            assert_eq!(profile, vec![2, 2, 1]);
            assert!(m.residual_vanishes());
            assert!(m.q_squared_condition(&p, &r, 1, B).unwrap());
            assert!(&qp.q * &qp.q < -int(4) * &p * &p * &p / int(27));
        }
        assert!(fam[0].q.sign(B).unwrap() != Sign::Negative);
        let c = certify_all_real(&fam[0].params.clone().unwrap().assemble());
        assert_eq!(
            c.verdict,
            crate::interlace::Verdict::Degenerate(crate::interlace::DegenerateKind::TwoDoubles)
        );
    }

    #[test]
    fn separated_family_enclosed_point() {
        let p = int(-6);
        let r = &p * &p * rat(7, 50); // between 5/36 and 4/27
        let fam = degenerate_separated(&p, &r, B).unwrap();
        assert_eq!(fam.len(), 2);
        for m in &fam {
            assert!(m.residual_vanishes());
            assert!(m.q_squared_condition(&p, &r, -1, B).unwrap());
            assert!(m.is_two_doubles(B).unwrap());
        }
        assert!(degenerate_separated(&p, &int(1), B).is_err());
    }

    #[test]
    fn shared_point_gives_triple_double() {
        let fam = degenerate_consecutive(&rat(-9, 2), &int(3), B).unwrap();
        let qp = fam[0].params.clone().unwrap();
        assert_eq!((qp.q.clone(), qp.s.clone()), (int(1), rat(-18, 5)));
        assert_eq!(exact_profile(&qp).1, vec![3, 2]);
    }
}
