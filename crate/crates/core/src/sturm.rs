//! Sturm chains, sign variations and real-root counting, plus the explicit
//! chain formulas for depressed cubics, quartics and quintics.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{discriminant, Polynomial};
use crate::quintic::QuinticParams;
use crate::rational::{int, rat, Rational, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SturmError {
    #[error("polynomial must have degree at least 1")]
    DegreeTooSmall,
    #[error("interval endpoints out of order")]
    InvalidInterval,
    #[error("printed chain pivot {pivot} vanishes")]
    DegenerateChain {
        pivot: Pivot,
        report: Box<ConditionReport>,
    },
}

/// A point of the extended real line with rational finite part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedRational {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtendedRational {
    fn rank(&self) -> u8 {
        match self {
            ExtendedRational::NegInf => 0,
            ExtendedRational::Finite(_) => 1,
            ExtendedRational::PosInf => 2,
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        match (self, other) {
            (ExtendedRational::Finite(a), ExtendedRational::Finite(b)) => a.partial_cmp(b),
            _ => self.rank().partial_cmp(&other.rank()),
        }
    }
}

impl From<Rational> for ExtendedRational {
    fn from(x: Rational) -> Self {
        ExtendedRational::Finite(x)
    }
}

/// Sign of `p` at a point of the extended line.
pub fn sign_at(p: &Polynomial, x: &ExtendedRational) -> Sign {
    match (x, p.degree()) {
        (_, None) => Sign::Zero,
        (ExtendedRational::Finite(v), _) => Sign::of(&p.evaluate(v)),
        (ExtendedRational::PosInf, Some(_)) => Sign::of(p.leading_coeff().unwrap()),
        (ExtendedRational::NegInf, Some(d)) => {
            let s = Sign::of(p.leading_coeff().unwrap());
            if d % 2 == 1 {
                s.negate()
            } else {
                s
            }
        }
    }
}

/// `S_n = P`, `S_{n-1} = P'`, then negated Euclidean remainders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    seq: Vec<Polynomial>,
    source: Polynomial,
    /// Chain divided through by its last element when that element is not
    /// constant; used for counting so that multiple roots do not disturb
    /// sign variations.
    reduced: Option<Vec<Polynomial>>,
}

impl SturmChain {
    pub fn elements(&self) -> &[Polynomial] {
        &self.seq
    }

    pub fn source(&self) -> &Polynomial {
        &self.source
    }

    /// Last element: `S_0` when the chain runs to a constant, otherwise
    /// `gcd(P, P')` up to scaling.
    pub fn last(&self) -> &Polynomial {
        self.seq.last().expect("chain is never empty")
    }

    /// False when the chain stopped early at a non-constant gcd.
    pub fn is_squarefree(&self) -> bool {
        self.reduced.is_none()
    }

    /// Degrees drop by exactly one at each step down to a nonzero constant.
    pub fn is_normal(&self) -> bool {
        let n = self.source.degree().unwrap_or(0);
        self.seq.len() == n + 1
            && self
                .seq
                .iter()
                .enumerate()
                .all(|(i, s)| s.degree() == Some(n - i))
    }

    pub fn leading_signs(&self) -> Vec<Sign> {
        self.seq
            .iter()
            .map(|s| s.leading_coeff().map(Sign::of).unwrap_or(Sign::Zero))
            .collect()
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_between(
        &self,
        a: &ExtendedRational,
        b: &ExtendedRational,
    ) -> Result<usize, SturmError> {
        if a >= b {
            return Err(SturmError::InvalidInterval);
        }
        let seq = self.reduced.as_deref().unwrap_or(&self.seq);
        let va = variations_of(seq, a);
        let vb = variations_of(seq, b);
        Ok(va.saturating_sub(vb))
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.count_between(&ExtendedRational::NegInf, &ExtendedRational::PosInf)
            .expect("-inf < +inf")
    }
}

fn variations_of(seq: &[Polynomial], x: &ExtendedRational) -> usize {
    count_variations(seq.iter().map(|s| sign_at(s, x)))
}

fn count_variations(signs: impl IntoIterator<Item = Sign>) -> usize {
    let mut last = Sign::Zero;
    let mut v = 0;
    for s in signs {
        if s.is_zero() {
            continue;
        }
        if !last.is_zero() && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

pub fn sturm_chain(p: &Polynomial) -> Result<SturmChain, SturmError> {
    match p.degree() {
        Some(d) if d >= 1 => {}
        _ => return Err(SturmError::DegreeTooSmall),
    }
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_constant() {
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    let last = seq.last().unwrap();
    let reduced = if last.is_constant() {
        None
    } else {
        Some(seq.iter().map(|s| s.exact_div(last)).collect())
    };
    Ok(SturmChain {
        seq,
        source: p.clone(),
        reduced,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSequence {
    pub signs: Vec<Sign>,
    pub variations: usize,
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{s}")?;
        }
        write!(f, " ({} variations)", self.variations)
    }
}

/// Signs of the raw chain at `x` (leading-coefficient signs with degree
/// parity at infinities).
pub fn sign_variations(chain: &SturmChain, x: &ExtendedRational) -> SignSequence {
    let signs: Vec<Sign> = chain.seq.iter().map(|s| sign_at(s, x)).collect();
    let variations = count_variations(signs.iter().copied());
    SignSequence { signs, variations }
}

/// Distinct real roots of `p` in `(a, b]`.
pub fn count_real_roots(
    p: &Polynomial,
    a: &ExtendedRational,
    b: &ExtendedRational,
) -> Result<usize, SturmError> {
    sturm_chain(p)?.count_between(a, b)
}

/// Whether `p` has `deg p` distinct real roots, decided by the leading
/// coefficient test: the chain must be normal with every leading
/// coefficient positive.
pub fn all_real_rooted_sturm(p: &Polynomial) -> bool {
    let Ok(chain) = sturm_chain(&p.monic()) else {
        return false;
    };
    chain.is_normal() && chain.leading_signs().iter().all(|s| *s == Sign::Positive)
}

/// Chain `[x^3+px+q, 3x^2+p, -(2/3)px - q, (-4p^3-27q^2)/(4p^2)]`; `None`
/// when `p = 0`.
pub fn cubic_chain_closed_form(p: &Rational, q: &Rational) -> Option<Vec<Polynomial>> {
    if p.is_zero() {
        return None;
    }
    let p3 = p * p * p;
    Some(vec![
        Polynomial::new(vec![q.clone(), p.clone(), int(0), int(1)]),
        Polynomial::new(vec![p.clone(), int(0), int(3)]),
        Polynomial::new(vec![-q.clone(), -(p * rat(2, 3))]),
        Polynomial::constant((-int(4) * &p3 - int(27) * q * q) / (int(4) * p * p)),
    ])
}

/// `-4pr + p^3 + 9q^2`, the quartic `S_1` pivot.
pub fn quartic_pivot(p: &Rational, q: &Rational, r: &Rational) -> Rational {
    -int(4) * p * r + p * p * p + int(9) * q * q
}

/// Printed chain of `x^4 + 2px^2 + 4qx + 4r`; `None` when `p` or the pivot
/// vanishes.
pub fn quartic_chain_closed_form(
    p: &Rational,
    q: &Rational,
    r: &Rational,
) -> Option<Vec<Polynomial>> {
    let pivot = quartic_pivot(p, q, r);
    if p.is_zero() || pivot.is_zero() {
        return None;
    }
    let p4 = Polynomial::new(vec![r * int(4), q * int(4), p * int(2), int(0), int(1)]);
    let disc = discriminant(&p4).expect("degree 4");
    let p2 = p * p;
    let s1_scale = -int(4) / &p2;
    Some(vec![
        p4,
        Polynomial::new(vec![q * int(4), p * int(4), int(0), int(4)]),
        Polynomial::new(vec![-(r * int(4)), -(q * int(3)), -p.clone()]),
        Polynomial::new(vec![
            &s1_scale * q * (r * int(12) + &p2),
            &s1_scale * &pivot,
        ]),
        Polynomial::constant(&p2 * disc / (int(256) * &pivot * &pivot)),
    ])
}

/// Named pivots of the printed quintic chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivot {
    /// `p` (leading coefficient of `S_3`).
    P,
    /// `8p^3 - 48pr + 81q^2` (leading coefficient of `S_2`).
    S2Lead,
    /// `a_{S_1}` (leading coefficient of `S_1`).
    S1Lead,
}

impl fmt::Display for Pivot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pivot::P => "p",
            Pivot::S2Lead => "8p^3-48pr+81q^2",
            Pivot::S1Lead => "a_S1",
        })
    }
}

pub fn quintic_s2_pivot(qp: &QuinticParams) -> Rational {
    let (p, q, r) = (&qp.p, &qp.q, &qp.r);
    int(8) * p * p * p - int(48) * p * r + int(81) * q * q
}

/// `a_{S_1}` and `b_{S_1}` of the quintic chain.
pub fn quintic_s1_coeffs(qp: &QuinticParams) -> (Rational, Rational) {
    let (p, q, r, s) = (&qp.p, &qp.q, &qp.r, &qp.s);
    let p2 = p * p;
    let p3 = &p2 * p;
    let p4 = &p3 * p;
    let q2 = q * q;
    let r2 = r * r;
    let a = -int(80) * &p4 * r - int(2106) * &q2 * p * r + int(1056) * &p2 * &r2
        - int(3456) * &r2 * r
        + int(240) * &p2 * q * s
        + int(3240) * q * s * r
        + int(40) * &p3 * &q2
        + int(729) * &q2 * &q2
        - int(450) * p * s * s;
    let b = -int(120) * &p4 * s - int(1755) * s * p * &q2 + int(1560) * &p2 * r * s
        - int(4320) * &r2 * s
        + int(40) * &p3 * q * r
        + int(729) * &q2 * q * r
        - int(864) * q * p * &r2
        + int(2025) * s * s * q;
    (a, b)
}

/// Chain of the parametrized quintic from the explicit formulas; `None` when
/// a pivot vanishes. `S_0` uses the constant `81/640000` obtained by
/// expanding the Euclidean chain symbolically.
pub fn quintic_chain_closed_form(qp: &QuinticParams) -> Option<Vec<Polynomial>> {
    let (p, q, r, s) = (&qp.p, &qp.q, &qp.r, &qp.s);
    let piv = quintic_s2_pivot(qp);
    let (a_s1, b_s1) = quintic_s1_coeffs(qp);
    if p.is_zero() || piv.is_zero() || a_s1.is_zero() {
        return None;
    }
    let p5 = qp.assemble();
    let disc = discriminant(&p5).expect("degree 5");
    let p2 = p * p;
    let s4 = p5.derivative();
    let s3 = Polynomial::new(vec![
        -(s * int(20)),
        -(r * int(16)),
        -(q * int(6)),
        -(p * rat(4, 3)),
    ]);
    let s2 = Polynomial::new(vec![
        int(4) * r + int(135) * q * s / (int(2) * &p2),
        (-int(15) * p * s + int(4) * &p2 * q + int(54) * q * r) / &p2,
        piv.clone() / (int(4) * &p2),
    ])
    .scale(&int(-5));
    let s1_scale = -int(32) * &p2 / (int(3) * &piv * &piv);
    let s1 = Polynomial::new(vec![&s1_scale * &b_s1, &s1_scale * &a_s1]);
    let ratio = &piv / (p * &a_s1);
    let s0 = Polynomial::constant(rat(81, 640000) * &ratio * &ratio * disc);
    Some(vec![p5, s4, s3, s2, s1, s0])
}

/// Truth state of a single inequality or of a combined verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tri {
    Yes,
    No,
    /// An equality was certified at the boundary of a strict inequality, or
    /// enclosures could not separate the two sides.
    Boundary,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    /// `x < 0` as a tristate.
    pub fn negative(x: &Rational) -> Tri {
        match Sign::of(x) {
            Sign::Negative => Tri::Yes,
            Sign::Zero => Tri::Boundary,
            Sign::Positive => Tri::No,
        }
    }

    /// `x > 0` as a tristate.
    pub fn positive(x: &Rational) -> Tri {
        Tri::negative(&-x.clone())
    }

    /// Conjunction: any `No` wins, then any `Boundary`.
    pub fn all(items: impl IntoIterator<Item = Tri>) -> Tri {
        let mut out = Tri::Yes;
        for t in items {
            match t {
                Tri::No => return Tri::No,
                Tri::Boundary => out = Tri::Boundary,
                Tri::Yes => {}
            }
        }
        out
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Boundary => "boundary",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    /// The quantity whose sign decides the condition, when it is rational.
    pub value: Option<Rational>,
    pub holds: Tri,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub conditions: Vec<Condition>,
    pub verdict: Tri,
}

impl ConditionReport {
    pub fn from_conditions(conditions: Vec<Condition>) -> Self {
        let verdict = Tri::all(conditions.iter().map(|c| c.holds));
        ConditionReport {
            conditions,
            verdict,
        }
    }

    /// All-real verdict as a plain boolean (`Boundary` counts as not all
    /// real and distinct).
    pub fn all_real(&self) -> bool {
        self.verdict == Tri::Yes
    }
}

/// Sturm conditions for `x^4 + 2px^2 + 4qx + 4r`:
/// `p < 0`, `-4pr + p^3 + 9q^2 < 0`, `disc > 0`.
pub fn quartic_sturm_conditions(p: &Rational, q: &Rational, r: &Rational) -> ConditionReport {
    let p4 = Polynomial::new(vec![r * int(4), q * int(4), p * int(2), int(0), int(1)]);
    let pivot = quartic_pivot(p, q, r);
    let disc = discriminant(&p4).expect("degree 4");
    ConditionReport::from_conditions(vec![
        Condition {
            name: "p<0",
            value: Some(p.clone()),
            holds: strict(Tri::negative(p)),
        },
        Condition {
            name: "-4pr+p^3+9q^2<0",
            value: Some(pivot.clone()),
            holds: strict(Tri::negative(&pivot)),
        },
        Condition {
            name: "disc>0",
            value: Some(disc.clone()),
            holds: strict(Tri::positive(&disc)),
        },
    ])
}

/// Sturm conditions collapse equalities to "no": a vanishing leading
/// coefficient shortens the chain.
fn strict(t: Tri) -> Tri {
    match t {
        Tri::Yes => Tri::Yes,
        _ => Tri::No,
    }
}

/// Evaluates `p < 0`, `8p^3 + 81q^2 - 48pr < 0`, `a_S1 < 0`, `disc > 0`
/// without regard to pivot degeneracy.
pub fn quintic_sturm_condition_values(qp: &QuinticParams) -> ConditionReport {
    let piv = quintic_s2_pivot(qp);
    let (a_s1, _) = quintic_s1_coeffs(qp);
    let disc = discriminant(&qp.assemble()).expect("degree 5");
    ConditionReport::from_conditions(vec![
        Condition {
            name: "p<0",
            value: Some(qp.p.clone()),
            holds: strict(Tri::negative(&qp.p)),
        },
        Condition {
            name: "8p^3+81q^2-48pr<0",
            value: Some(piv.clone()),
            holds: strict(Tri::negative(&piv)),
        },
        Condition {
            name: "a_S1<0",
            value: Some(a_s1.clone()),
            holds: strict(Tri::negative(&a_s1)),
        },
        Condition {
            name: "disc>0",
            value: Some(disc.clone()),
            holds: strict(Tri::positive(&disc)),
        },
    ])
}

/// The quintic condition set. Fails with `DegenerateChain` (carrying the
/// evaluated report) when one of the printed pivots vanishes.
pub fn quintic_sturm_conditions(qp: &QuinticParams) -> Result<ConditionReport, SturmError> {
    let report = quintic_sturm_condition_values(qp);
    let pivot = if qp.p.is_zero() {
        Some(Pivot::P)
    } else if quintic_s2_pivot(qp).is_zero() {
        Some(Pivot::S2Lead)
    } else if quintic_s1_coeffs(qp).0.is_zero() {
        Some(Pivot::S1Lead)
    } else {
        None
    };
    match pivot {
        Some(pivot) => Err(SturmError::DegenerateChain {
            pivot,
            report: Box::new(report),
        }),
        None => Ok(report),
    }
}

/// Cauchy bound `1 + max |a_i / a_n|`; every real root lies strictly inside
/// `(-B, B)`.
pub fn cauchy_bound(p: &Polynomial) -> Rational {
    let lc = p.leading_coeff().cloned().unwrap_or_else(Rational::one);
    let n = p.coeffs().len();
    let m = p.coeffs()[..n.saturating_sub(1)]
        .iter()
        .map(|c| (c / &lc).abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::pow;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn fin(v: Rational) -> ExtendedRational {
        ExtendedRational::Finite(v)
    }

    #[test]
    fn cubic_chain_matches_closed_form() {
        let (pp, q) = (rat(-7, 3), rat(5, 4));
        let cubic = Polynomial::new(vec![q.clone(), pp.clone(), int(0), int(1)]);
        let chain = sturm_chain(&cubic).unwrap();
        assert_eq!(
            chain.elements(),
            cubic_chain_closed_form(&pp, &q).unwrap().as_slice()
        );
        assert!(cubic_chain_closed_form(&int(0), &q).is_none());
    }

    #[test]
    fn quartic_chain_matches_closed_form() {
        let (pp, q, r) = (rat(-2, 1), rat(1, 3), rat(-1, 5));
        let quartic = Polynomial::new(vec![
            r.clone() * int(4),
            q.clone() * int(4),
            pp.clone() * int(2),
            int(0),
            int(1),
        ]);
        let chain = sturm_chain(&quartic).unwrap();
        assert_eq!(
            chain.elements(),
            quartic_chain_closed_form(&pp, &q, &r).unwrap().as_slice()
        );
    }

    #[test]
    fn chain_stops_early_on_multiple_root() {
        let chain = sturm_chain(&p(&[2, -3, 0, 1])).unwrap();
        assert!(!chain.is_squarefree());
        let last = chain.last();
        assert_eq!(last.degree(), Some(1));
        assert_eq!(last.evaluate(&int(1)), int(0));
    }

    #[test]
    fn variations_of_x2_minus_1() {
        let chain = sturm_chain(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(
            sign_variations(&chain, &ExtendedRational::NegInf).variations,
            2
        );
        assert_eq!(
            sign_variations(&chain, &ExtendedRational::PosInf).variations,
            0
        );
        let at_half = sign_variations(&chain, &fin(rat(1, 2)));
        assert!(at_half.signs.iter().all(|s| !s.is_zero()));
    }

    #[test]
    fn variations_of_x3_minus_x_at_zero() {
        let chain = sturm_chain(&p(&[0, -1, 0, 1])).unwrap();
        let at0 = sign_variations(&chain, &fin(int(0)));
        assert_eq!(at0.signs[0], Sign::Zero);
        let left = sign_variations(&chain, &fin(rat(-1, 2))).variations;
        let right = sign_variations(&chain, &fin(rat(1, 2))).variations;
        assert_eq!(left - right, 1);
        assert_eq!(left - at0.variations, 1);
    }

    #[test]
    fn root_counts() {
        let all = (ExtendedRational::NegInf, ExtendedRational::PosInf);
        assert_eq!(
            count_real_roots(&p(&[2, -3, 0, 1]), &all.0, &all.1).unwrap(),
            2
        );
        assert_eq!(count_real_roots(&p(&[1, 0, 1]), &all.0, &all.1).unwrap(), 0);
        let planted = &pow(&p(&[-2, 1]), 3) * &pow(&p(&[3, 1]), 2);
        assert_eq!(count_real_roots(&planted, &all.0, &all.1).unwrap(), 2);
        assert_eq!(
            count_real_roots(&p(&[1, 1]), &fin(int(1)), &fin(int(0))),
            Err(SturmError::InvalidInterval)
        );
    }

    #[test]
    fn half_open_endpoint_convention() {
        // roots -1, 0, 1
        let c = p(&[0, -1, 0, 1]);
        assert_eq!(count_real_roots(&c, &fin(int(0)), &fin(int(1))).unwrap(), 1);
        assert_eq!(
            count_real_roots(&c, &fin(int(-1)), &fin(int(0))).unwrap(),
            1
        );
        assert_eq!(
            count_real_roots(&c, &fin(int(-1)), &fin(int(1))).unwrap(),
            2
        );
        // multiple root at the right endpoint is still counted once
        let planted = &pow(&p(&[-1, 1]), 2) * &p(&[2, 1]);
        assert_eq!(
            count_real_roots(&planted, &fin(int(0)), &fin(int(1))).unwrap(),
            1
        );
        assert_eq!(
            count_real_roots(&planted, &fin(int(1)), &fin(int(2))).unwrap(),
            0
        );
    }

    #[test]
    fn corollary_examples() {
        assert!(all_real_rooted_sturm(&p(&[1, -3, 0, 1])));
        assert!(!all_real_rooted_sturm(&p(&[0, 1, 0, 1])));
        assert!(!all_real_rooted_sturm(&p(&[2, -3, 0, 1])));
        assert!(all_real_rooted_sturm(&p(&[-1, 1])));
    }

    #[test]
    fn quintic_conditions_golden_degenerate() {
        let qp = QuinticParams::new(rat(-9, 2), int(1), int(3), rat(-18, 5));
        let values = quintic_sturm_condition_values(&qp);
        assert_eq!(values.conditions[3].value, Some(int(0)));
        assert_eq!(values.conditions[3].holds, Tri::No);
        assert!(!values.all_real());
        match quintic_sturm_conditions(&qp) {
            Err(SturmError::DegenerateChain { pivot, .. }) => assert_eq!(pivot, Pivot::S2Lead),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn quintic_conditions_nonnegative_p() {
        let qp = QuinticParams::new(int(1), int(1), int(1), int(1));
        let report = quintic_sturm_conditions(&qp).unwrap();
        assert_eq!(report.conditions[0].holds, Tri::No);
        assert_eq!(report.verdict, Tri::No);
    }

    #[test]
    fn quintic_closed_form_matches_generic_chain() {
        let qp = QuinticParams::new(rat(-3, 1), rat(1, 2), rat(1, 3), rat(-1, 7));
        let chain = sturm_chain(&qp.assemble()).unwrap();
        assert_eq!(
            chain.elements(),
            quintic_chain_closed_form(&qp).unwrap().as_slice()
        );
    }
}
