//! Certification by interlacing.
//!
//! For a monic depressed `P_n` put `P_{n-1} = P_n' / n` and write
//! `P_n = x P_{n-1} - R_{n-2}`. At a root `alpha` of `P_{n-1}` we get
//! `P_n(alpha) = -R_{n-2}(alpha)`, so `P_n` has `n` distinct real roots
//! exactly when `P_{n-1}` does and `R_{n-2}` alternates in sign along the
//! ordered roots `alpha_1 < ... < alpha_{n-1}`, ending positive at the
//! largest one. Writing `R = R^0 - a_0` turns the alternation into an open
//! interval for the constant term `a_0`. Applying this to every level of
//! the derivative tower down to `x^2 + c` gives the full certificate.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::algebraic::{Algebraic, AlgebraicError, RealRoot, DEFAULT_BUDGET};
use crate::poly::{gcd, Polynomial};
use crate::rational::{format_rational, int, Rational, Sign};
use crate::roots::{isolate_real_roots, isolate_squarefree, RootSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterlaceError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not depressed")]
    NotDepressed,
    #[error("polynomial must have degree at least {0}")]
    DegreeTooSmall(usize),
    #[error("expected {expected} inner roots, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("root order could not be resolved within {0} refinement rounds")]
    UnresolvableOrder(usize),
}

impl From<AlgebraicError> for InterlaceError {
    fn from(e: AlgebraicError) -> Self {
        match e {
            AlgebraicError::Unresolved(b) => InterlaceError::UnresolvableOrder(b),
            AlgebraicError::NotIsolating => InterlaceError::UnresolvableOrder(0),
        }
    }
}

/// `P_n = x P_{n-1} - R`, with `R^0 = R + a_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemainderDecomposition {
    pub p_n: Polynomial,
    pub p_nminus1: Polynomial,
    pub r: Polynomial,
    pub r0: Polynomial,
    pub a0: Rational,
}

pub fn decompose(p: &Polynomial) -> Result<RemainderDecomposition, InterlaceError> {
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        _ => return Err(InterlaceError::DegreeTooSmall(2)),
    };
    if !p.is_monic() {
        return Err(InterlaceError::NotMonic);
    }
    if !p.is_depressed() {
        return Err(InterlaceError::NotDepressed);
    }
    let p_nminus1 = p
        .derivative()
        .scale(&Rational::new(1.into(), (n as i64).into()));
    let r = &(&Polynomial::x() * &p_nminus1) - p;
    let a0 = p.coeff(0);
    let r0 = &r + &Polynomial::constant(a0.clone());
    Ok(RemainderDecomposition {
        p_n: p.clone(),
        p_nminus1,
        r,
        r0,
        a0,
    })
}

/// Required sign of `R_{n-2}` at the `k`-th (1-based) root of `P_{n-1}`.
pub fn required_sign(n: usize, k: usize) -> Sign {
    if (n - 1 - k).is_multiple_of(2) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Outcome of a strict test that may land exactly on its boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alternation {
    Holds,
    Fails,
    /// `R` vanishes at some root of `P_{n-1}` and no sign is wrong.
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternationReport {
    pub signs: Vec<Sign>,
    pub outcome: Alternation,
}

/// Checks that `R` takes the sign `(-1)^{n-1-k}` at the `k`-th root of
/// `P_{n-1}` (equivalently `R(alpha_k) R(alpha_{k+1}) < 0` with
/// `R(alpha_{n-1}) > 0`).
pub fn sign_alternation_check(
    r: &Polynomial,
    deriv_roots: &[RealRoot],
    n: usize,
    budget: usize,
) -> Result<AlternationReport, InterlaceError> {
    if deriv_roots.len() + 1 != n {
        return Err(InterlaceError::SizeMismatch {
            expected: n - 1,
            found: deriv_roots.len(),
        });
    }
    let mut signs = Vec::with_capacity(deriv_roots.len());
    for root in deriv_roots {
        signs.push(root.sign_of(r, budget)?);
    }
    let mut outcome = Alternation::Holds;
    for (k, s) in signs.iter().enumerate() {
        if s.is_zero() {
            outcome = Alternation::Boundary;
        } else if *s != required_sign(n, k + 1) {
            return Ok(AlternationReport {
                signs,
                outcome: Alternation::Fails,
            });
        }
    }
    Ok(AlternationReport { signs, outcome })
}

/// Endpoint of an open interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    PosInf,
    Value(Algebraic),
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::PosInf => f.write_str("+inf"),
            Bound::Value(v) => write!(f, "{v}"),
        }
    }
}

/// Open interval `]lo, hi[` with algebraic endpoints; empty when
/// `lo >= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

/// Where a point sits relative to an open interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Inside,
    OnBoundary,
    Outside,
}

impl Interval {
    pub fn new(lo: Bound, hi: Bound) -> Self {
        Interval { lo, hi }
    }

    pub fn is_empty(&self, budget: usize) -> Result<bool, InterlaceError> {
        match (&self.lo, &self.hi) {
            (Bound::Value(a), Bound::Value(b)) => Ok(a.compare(b, budget)? != Ordering::Less),
            (Bound::PosInf, _) | (_, Bound::NegInf) => Ok(true),
            _ => Ok(false),
        }
    }

    pub fn membership(&self, x: &Rational, budget: usize) -> Result<Membership, InterlaceError> {
        let above_lo = match &self.lo {
            Bound::NegInf => Ordering::Greater,
            Bound::PosInf => Ordering::Less,
            Bound::Value(v) => v.cmp_rational(x, budget)?.reverse(),
        };
        let below_hi = match &self.hi {
            Bound::PosInf => Ordering::Less,
            Bound::NegInf => Ordering::Greater,
            Bound::Value(v) => v.cmp_rational(x, budget)?.reverse(),
        };
        Ok(match (above_lo, below_hi) {
            (Ordering::Greater, Ordering::Less) => Membership::Inside,
            (Ordering::Less, _) | (_, Ordering::Greater) => Membership::Outside,
            _ => Membership::OnBoundary,
        })
    }

    /// Scales both endpoints by a positive rational.
    pub fn scale(&self, c: &Rational) -> Interval {
        let f = |b: &Bound| match b {
            Bound::Value(v) => Bound::Value(v.affine(c, &Rational::zero())),
            other => other.clone(),
        };
        Interval {
            lo: f(&self.lo),
            hi: f(&self.hi),
        }
    }

    /// Floating-point view of the endpoints.
    pub fn to_f64(&self) -> (f64, f64) {
        let f = |b: &Bound| match b {
            Bound::NegInf => f64::NEG_INFINITY,
            Bound::PosInf => f64::INFINITY,
            Bound::Value(v) => v.to_f64(),
        };
        (f(&self.lo), f(&self.hi))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "]{}, {}[", self.lo, self.hi)
    }
}

/// Maximum (or minimum) of algebraic candidates, deciding every comparison
/// exactly.
fn extreme(
    values: Vec<Algebraic>,
    want: Ordering,
    budget: usize,
) -> Result<Option<Algebraic>, InterlaceError> {
    let mut best: Option<Algebraic> = None;
    for v in values {
        best = Some(match best {
            None => v,
            Some(b) => {
                if v.compare(&b, budget)? == want {
                    v
                } else {
                    b
                }
            }
        });
    }
    Ok(best)
}

/// Admissible open interval for `a_0`: `P_n(alpha_k) = a_0 - R^0(alpha_k)`
/// must carry the sign `-(-1)^{n-1-k}`, so roots with `n-1-k` even give
/// upper bounds and the others lower bounds.
pub fn a0_interval(
    r0: &Polynomial,
    deriv_roots: &[RealRoot],
    n: usize,
    budget: usize,
) -> Result<Interval, InterlaceError> {
    if deriv_roots.len() + 1 != n {
        return Err(InterlaceError::SizeMismatch {
            expected: n - 1,
            found: deriv_roots.len(),
        });
    }
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for (k, root) in deriv_roots.iter().enumerate() {
        let v = Algebraic::eval_at(r0, root.clone());
        if required_sign(n, k + 1) == Sign::Positive {
            upper.push(v);
        } else {
            lower.push(v);
        }
    }
    let lo = extreme(lower, Ordering::Greater, budget)?.map_or(Bound::NegInf, Bound::Value);
    let hi = extreme(upper, Ordering::Less, budget)?.map_or(Bound::PosInf, Bound::Value);
    Ok(Interval { lo, hi })
}

/// Result of comparing two ordered root lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interlacing {
    /// `alpha_1 <= beta_1 <= alpha_2 <= ... <= beta_{n-1} <= alpha_n`.
    pub weak: bool,
    /// The same with strict inequalities.
    pub strict: bool,
}

pub fn is_interlaced(
    outer: &[RealRoot],
    inner: &[RealRoot],
    budget: usize,
) -> Result<Interlacing, InterlaceError> {
    if outer.len() != inner.len() + 1 {
        return Err(InterlaceError::SizeMismatch {
            expected: outer.len().saturating_sub(1),
            found: inner.len(),
        });
    }
    let mut merged = Vec::with_capacity(outer.len() + inner.len());
    for (i, a) in outer.iter().enumerate() {
        merged.push(Algebraic::from_root(a.clone()));
        if let Some(b) = inner.get(i) {
            merged.push(Algebraic::from_root(b.clone()));
        }
    }
    let mut weak = true;
    let mut strict = true;
    for w in merged.windows(2) {
        match w[0].compare(&w[1], budget)? {
            Ordering::Less => {}
            Ordering::Equal => strict = false,
            Ordering::Greater => {
                weak = false;
                strict = false;
            }
        }
    }
    Ok(Interlacing { weak, strict })
}

/// Multiplicity pattern of a polynomial's roots over the complex numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegenerateKind {
    Simple,
    OneDouble,
    TwoDoubles,
    Triple,
    TripleAndDouble,
    /// Multiplicities, largest first.
    Other(Vec<usize>),
}

impl DegenerateKind {
    pub fn from_profile(profile: &[usize]) -> DegenerateKind {
        let multiple: Vec<usize> = profile.iter().copied().filter(|&m| m > 1).collect();
        match multiple.as_slice() {
            [] => DegenerateKind::Simple,
            [2] => DegenerateKind::OneDouble,
            [2, 2] => DegenerateKind::TwoDoubles,
            [3] => DegenerateKind::Triple,
            [3, 2] => DegenerateKind::TripleAndDouble,
            _ => DegenerateKind::Other(profile.to_vec()),
        }
    }
}

impl fmt::Display for DegenerateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegenerateKind::Simple => f.write_str("simple"),
            DegenerateKind::OneDouble => f.write_str("one double root"),
            DegenerateKind::TwoDoubles => f.write_str("two double roots"),
            DegenerateKind::Triple => f.write_str("triple root"),
            DegenerateKind::TripleAndDouble => f.write_str("triple and double root"),
            DegenerateKind::Other(p) => {
                let s: Vec<String> = p.iter().map(|m| m.to_string()).collect();
                write!(f, "multiplicities {{{}}}", s.join(","))
            }
        }
    }
}

/// Root multiplicities of `p` over the complex numbers, largest first.
pub fn multiplicity_profile(p: &Polynomial) -> Vec<usize> {
    let mut profile = Vec::new();
    for (f, m) in p.squarefree_decomposition() {
        for _ in 0..f.degree().unwrap_or(0) {
            profile.push(m);
        }
    }
    profile.sort_unstable_by(|a, b| b.cmp(a));
    profile
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerateReport {
    pub kind: DegenerateKind,
    pub profile: Vec<usize>,
    /// Real roots with their multiplicities.
    pub real_roots: RootSet,
    /// `gcd(P_{n-1}, R_{n-2})` of the depressed form, mapped back to the
    /// original variable: the common roots where the boundary equality of
    /// the admissible interval is attained.
    pub witness: Polynomial,
    /// Whether the witness equals `gcd(P, P')`, i.e. every multiple root is
    /// a common root of `P_{n-1}` and `R_{n-2}`.
    pub witness_consistent: bool,
}

pub fn detect_degenerate(p: &Polynomial) -> Result<DegenerateReport, InterlaceError> {
    match p.degree() {
        Some(n) if n >= 2 => {}
        _ => return Err(InterlaceError::DegreeTooSmall(2)),
    }
    let profile = multiplicity_profile(p);
    let dep = p.depress().expect("degree >= 2");
    let d = decompose(&dep.poly).expect("monic depressed");
    let w = gcd(&d.p_nminus1, &d.r);
    // depressed variable y relates to x by x = y - shift
    let witness = w.shift(&dep.shift).monic();
    let g = gcd(p, &p.derivative());
    Ok(DegenerateReport {
        kind: DegenerateKind::from_profile(&profile),
        profile,
        real_roots: isolate_real_roots(p),
        witness_consistent: witness == g,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    AllRealDistinct,
    NotAllReal,
    Degenerate(DegenerateKind),
    HypothesisUnresolved { level: usize },
}

impl Verdict {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::AllRealDistinct => 0,
            Verdict::NotAllReal => 1,
            Verdict::Degenerate(_) => 2,
            Verdict::HypothesisUnresolved { .. } => 3,
        }
    }

    pub fn is_all_real(&self) -> bool {
        *self == Verdict::AllRealDistinct
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::AllRealDistinct => f.write_str("all-real-distinct"),
            Verdict::NotAllReal => f.write_str("not-all-real"),
            Verdict::Degenerate(k) => write!(f, "degenerate ({k})"),
            Verdict::HypothesisUnresolved { level } => write!(f, "unresolved at degree {level}"),
        }
    }
}

/// Record of one level of the derivative tower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelRecord {
    pub degree: usize,
    pub poly: Polynomial,
    /// Constant term of this level (`c` for `x^2 + c`, `a_0` above).
    pub constant: Rational,
    /// Ordered roots of the level below (empty at degree 2).
    pub deriv_roots: Vec<RealRoot>,
    /// Signs of `R` at those roots.
    pub signs: Vec<Sign>,
    /// Admissible interval for `constant`; `None` at degree 2 or when the
    /// endpoints could not be ordered.
    pub interval: Option<Interval>,
    pub outcome: Alternation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    /// Levels from degree 2 upward, stopping at the first failure.
    pub trail: Vec<LevelRecord>,
    /// The input equals `trail.last().poly` evaluated at `x + shift`, up to
    /// a positive scalar.
    pub shift: Rational,
    /// Present when the verdict is degenerate.
    pub degenerate: Option<DegenerateReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Bisection rounds allowed for a single sign or order decision.
    pub max_refine: usize,
    /// Whether to order interval endpoints for the trail (not needed for
    /// the verdict).
    pub intervals: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            max_refine: DEFAULT_BUDGET,
            intervals: true,
        }
    }
}

pub fn certify_all_real(p: &Polynomial) -> Certificate {
    certify_all_real_with(p, &CertifyOptions::default())
}

/// Walks the derivative tower from degree 2 up to `deg p`.
pub fn certify_all_real_with(p: &Polynomial, opts: &CertifyOptions) -> Certificate {
    let n = p.degree();
    let (n, dep) = match n {
        None => {
            return Certificate {
                verdict: Verdict::NotAllReal,
                trail: Vec::new(),
                shift: Rational::zero(),
                degenerate: None,
            }
        }
        Some(n) if n < 2 => {
            return Certificate {
                verdict: Verdict::AllRealDistinct,
                trail: Vec::new(),
                shift: Rational::zero(),
                degenerate: None,
            }
        }
        Some(n) => (n, p.depress().expect("degree >= 2")),
    };
    let degenerate = if gcd(p, &p.derivative()).is_constant() {
        None
    } else {
        Some(detect_degenerate(p).expect("degree >= 2"))
    };

    // tower[k] is the normalized derivative of degree k
    let mut tower: Vec<Polynomial> = vec![Polynomial::zero(); n + 1];
    tower[n] = dep.poly.clone();
    for k in (2..n).rev() {
        tower[k] = tower[k + 1]
            .derivative()
            .scale(&Rational::new(1.into(), ((k + 1) as i64).into()));
    }

    let mut trail = Vec::new();
    let mut outcome = walk(&tower, n, opts, &mut trail);
    if let Some(d) = &degenerate {
        outcome = Verdict::Degenerate(d.kind.clone());
    }
    Certificate {
        verdict: outcome,
        trail,
        shift: dep.shift,
        degenerate,
    }
}

fn walk(
    tower: &[Polynomial],
    n: usize,
    opts: &CertifyOptions,
    trail: &mut Vec<LevelRecord>,
) -> Verdict {
    let budget = opts.max_refine;
    let p2 = &tower[2];
    let c = p2.coeff(0);
    let gate = match Sign::of(&c) {
        Sign::Negative => Alternation::Holds,
        Sign::Zero => Alternation::Boundary,
        Sign::Positive => Alternation::Fails,
    };
    trail.push(LevelRecord {
        degree: 2,
        poly: p2.clone(),
        constant: c,
        deriv_roots: Vec::new(),
        signs: Vec::new(),
        interval: None,
        outcome: gate,
    });
    if gate != Alternation::Holds {
        return Verdict::NotAllReal;
    }
    for (k, level) in tower.iter().enumerate().take(n + 1).skip(3) {
        let d = decompose(level).expect("tower levels are monic and depressed");
        let roots = isolate_squarefree(&d.p_nminus1);
        let report = match sign_alternation_check(&d.r, &roots, k, budget) {
            Ok(r) => r,
            Err(_) => return Verdict::HypothesisUnresolved { level: k },
        };
        let interval = if opts.intervals {
            a0_interval(&d.r0, &roots, k, budget).ok()
        } else {
            None
        };
        let outcome = report.outcome;
        trail.push(LevelRecord {
            degree: k,
            poly: level.clone(),
            constant: d.a0,
            deriv_roots: roots,
            signs: report.signs,
            interval,
            outcome,
        });
        if outcome != Alternation::Holds {
            return Verdict::NotAllReal;
        }
    }
    Verdict::AllRealDistinct
}

/// Human-readable multiplicity listing such as `{1:2, -2:1}`.
pub fn format_profile(roots: &RootSet) -> String {
    let parts: Vec<String> = roots
        .roots()
        .iter()
        .rev()
        .map(|r| {
            let v = match r.root.exact_value() {
                Some(x) => format_rational(x),
                None => format!("{:.6}", r.root.to_f64()),
            };
            format!("{v}:{}", r.multiplicity)
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

impl Certificate {
    /// Multiplicity listing of the real roots when degenerate.
    pub fn profile_text(&self) -> Option<String> {
        self.degenerate
            .as_ref()
            .map(|d| format_profile(&d.real_roots))
    }
}

/// `x^2 + c` with `c = 2 a_{n-2} / (n(n-1))`, the degree-2 level for a
/// depressed polynomial of degree `n` with `x^{n-2}` coefficient `a`.
pub fn level_two(n: usize, a: &Rational) -> Polynomial {
    let c = a * int(2) / int((n * (n - 1)) as i64);
    Polynomial::new(vec![c, int(0), int(1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::pow;
    use crate::rational::rat;

    fn cubic(p: i64, q: i64) -> Polynomial {
        Polynomial::from_ints(&[q, p, 0, 1])
    }

    #[test]
    fn decomposition_matches_closed_forms() {
        let d = decompose(&cubic(-3, 5)).unwrap();
        assert_eq!(d.r, Polynomial::from_ints(&[-5, 2]));
        assert_eq!(d.r0, Polynomial::from_ints(&[0, 2]));
        // P4 = x^4 + 2px^2 + 4qx + 4r with p = -2, q = 1, r = 3
        let d = decompose(&Polynomial::from_ints(&[12, 4, -4, 0, 1])).unwrap();
        assert_eq!(d.r, Polynomial::from_ints(&[-12, -3, 2]));
        assert_eq!(d.r0, Polynomial::from_ints(&[0, -3, 2]));
        assert!(matches!(
            decompose(&Polynomial::from_ints(&[1, 1, 1])),
            Err(InterlaceError::NotDepressed)
        ));
        assert!(matches!(
            decompose(&Polynomial::from_ints(&[1, 0, 2])),
            Err(InterlaceError::NotMonic)
        ));
    }

    #[test]
    fn leading_coefficient_of_remainder() {
        // lc(R) = -(2/n) a_{n-2}
        let p = Polynomial::new(vec![int(1), int(2), int(0), rat(-7, 3), int(0), int(1)]);
        let d = decompose(&p).unwrap();
        assert_eq!(d.r.degree(), Some(3));
        assert_eq!(d.r.leading_coeff().unwrap(), &(rat(-2, 5) * rat(-7, 3)));
    }

    #[test]
    fn alternation_on_cubics() {
        let d = decompose(&cubic(-3, 0)).unwrap();
        let roots = isolate_squarefree(&d.p_nminus1);
        let rep = sign_alternation_check(&d.r, &roots, 3, 64).unwrap();
        assert_eq!(rep.signs, vec![Sign::Negative, Sign::Positive]);
        assert_eq!(rep.outcome, Alternation::Holds);
        let d = decompose(&cubic(-3, 2)).unwrap();
        let roots = isolate_squarefree(&d.p_nminus1);
        let rep = sign_alternation_check(&d.r, &roots, 3, 64).unwrap();
        assert_eq!(rep.outcome, Alternation::Boundary);
    }

    fn assert_bound(b: &Bound, v: Rational) {
        let Bound::Value(a) = b else {
            panic!("unbounded")
        };
        assert_eq!(
            a.cmp_rational(&v, 256).unwrap(),
            Ordering::Equal,
            "{a} vs {v}"
        );
    }

    #[test]
    fn cubic_constant_interval() {
        let d = decompose(&cubic(-3, 0)).unwrap();
        let roots = isolate_squarefree(&d.p_nminus1);
        let iv = a0_interval(&d.r0, &roots, 3, 64).unwrap();
        assert_bound(&iv.lo, int(-2));
        assert_bound(&iv.hi, int(2));
        assert_eq!(iv.membership(&int(2), 64).unwrap(), Membership::OnBoundary);
        assert_eq!(iv.membership(&int(1), 64).unwrap(), Membership::Inside);
    }

    #[test]
    fn symmetric_quartic_bounds_are_certified_equal() {
        // P3 = x^3 - 2x: R2^0 = 2x^2 takes the same value 4 at +-sqrt 2.
        let p4 = Polynomial::from_ints(&[1, 0, -4, 0, 1]);
        let d = decompose(&p4).unwrap();
        let roots = isolate_squarefree(&d.p_nminus1);
        let iv = a0_interval(&d.r0, &roots, 4, 256).unwrap();
        assert_bound(&iv.hi, int(4));
        assert_bound(&iv.lo, int(0));
    }

    #[test]
    fn interlacing() {
        let outer = isolate_squarefree(&Polynomial::from_ints(&[0, -1, 0, 1]));
        let inner = isolate_squarefree(&Polynomial::from_ints(&[-1, 0, 3]));
        assert_eq!(
            is_interlaced(&outer, &inner, 64).unwrap(),
            Interlacing {
                weak: true,
                strict: true
            }
        );
        let outer = vec![RealRoot::exact(int(-1)), RealRoot::exact(int(1))];
        let inner = vec![RealRoot::exact(int(2))];
        assert!(!is_interlaced(&outer, &inner, 64).unwrap().weak);
        assert!(is_interlaced(&outer, &outer, 64).is_err());
    }

    #[test]
    fn certify_examples() {
        assert_eq!(
            certify_all_real(&cubic(-3, 1)).verdict,
            Verdict::AllRealDistinct
        );
        let c = certify_all_real(&cubic(-3, 2));
        assert_eq!(c.verdict, Verdict::Degenerate(DegenerateKind::OneDouble));
        assert_eq!(c.profile_text().unwrap(), "{1:2, -2:1}");
        assert_eq!(certify_all_real(&cubic(0, 1)).verdict, Verdict::NotAllReal);
        // x^4 - 4x^2 + 1 and x^4 - 4x^2 + 4 = (x^2 - 2)^2
        assert_eq!(
            certify_all_real(&Polynomial::from_ints(&[1, 0, -4, 0, 1])).verdict,
            Verdict::AllRealDistinct
        );
        assert_eq!(
            certify_all_real(&Polynomial::from_ints(&[4, 0, -4, 0, 1])).verdict,
            Verdict::Degenerate(DegenerateKind::TwoDoubles)
        );
    }

    #[test]
    fn certify_normalizes_input() {
        // 2(x - 1)(x - 2)(x - 4): not monic, not depressed
        let p = Polynomial::from_roots(&[int(1), int(2), int(4)]).scale(&int(2));
        let c = certify_all_real(&p);
        assert_eq!(c.verdict, Verdict::AllRealDistinct);
        assert_eq!(c.shift, rat(-7, 3));
        assert_eq!(c.trail.last().unwrap().poly.shift(&c.shift), p.monic());
    }

    #[test]
    fn degenerate_witness() {
        let r = detect_degenerate(&cubic(-3, 2)).unwrap();
        assert_eq!(r.kind, DegenerateKind::OneDouble);
        assert_eq!(r.witness, Polynomial::from_ints(&[-1, 1]));
        assert!(r.witness_consistent);
        let p =
            &pow(&Polynomial::from_ints(&[-2, 1]), 3) * &pow(&Polynomial::from_ints(&[3, 1]), 2);
        let r = detect_degenerate(&p).unwrap();
        assert_eq!(r.kind, DegenerateKind::TripleAndDouble);
        assert!(r.witness_consistent);
        // complex double roots: (x^2 + 1)^2 (x - 1)
        let p = &pow(&Polynomial::from_ints(&[1, 0, 1]), 2) * &Polynomial::from_ints(&[-1, 1]);
        let r = detect_degenerate(&p).unwrap();
        assert_eq!(r.kind, DegenerateKind::TwoDoubles);
        assert_eq!(r.real_roots.len(), 1);
    }

    #[test]
    fn quartic_triple_root() {
        // p = -3: r = -p^2/12 = -3/4, q^2 = -4p^3/27 = 4 -> x^4 - 6x^2 + 8x - 3 = (x-1)^3(x+3)
        let p = Polynomial::from_ints(&[-3, 8, -6, 0, 1]);
        let r = detect_degenerate(&p).unwrap();
        assert_eq!(r.kind, DegenerateKind::Triple);
        assert_eq!(r.real_roots.exact_roots(), vec![int(-3), int(1)]);
    }
}
