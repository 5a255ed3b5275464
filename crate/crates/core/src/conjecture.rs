//! Harness for the conjectured relation `S_0 = K_n disc(P_n)` with `K_n > 0`
//! between the last Sturm term and the discriminant.
//!
//! The relation is tested, never assumed: nothing else in the crate uses
//! the sign of `S_0` in place of the discriminant. Chains whose degrees
//! skip a step (a vanishing leading coefficient mid-chain) are reported
//! separately, since the closed forms change branch there.

use std::fmt;
use std::io::{self, Write};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebraic::{Algebraic, DEFAULT_BUDGET};
use crate::batch::par_map;
use crate::poly::{discriminant, Polynomial};
use crate::rational::{format_rational, int, rat, Rational, Sign};
use crate::roots::isolate_squarefree;
use crate::sturm::sturm_chain;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjectureError {
    #[error("polynomial must have degree at least 3")]
    DegreeTooSmall,
    #[error("polynomial must be monic and depressed")]
    NotDepressed,
    #[error("polynomial has a multiple root")]
    DegenerateInput,
}

/// Enclosure of `(-1)^{n(n-1)/2} n^n prod P(alpha_i)` over the roots of
/// `P'`, available when they are all real and distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCheck {
    pub lo: Rational,
    pub hi: Rational,
    /// `lo <= disc <= hi`.
    pub contains_disc: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRecord {
    pub poly: Polynomial,
    pub s0: Rational,
    pub disc: Rational,
    /// `S_0 / disc`.
    pub k: Rational,
    /// The chain has every degree from `n` down to 0.
    pub normal_chain: bool,
    pub product: Option<ProductCheck>,
}

impl ConjectureRecord {
    pub fn signs_agree(&self) -> bool {
        Sign::of(&self.s0) == Sign::of(&self.disc)
    }
}

pub fn conjecture_check(p: &Polynomial) -> Result<ConjectureRecord, ConjectureError> {
    let n = match p.degree() {
        Some(n) if n >= 3 => n,
        _ => return Err(ConjectureError::DegreeTooSmall),
    };
    if !p.is_monic() || !p.is_depressed() {
        return Err(ConjectureError::NotDepressed);
    }
    let chain = sturm_chain(p).expect("degree >= 3");
    if !chain.is_squarefree() {
        return Err(ConjectureError::DegenerateInput);
    }
    let s0 = chain.last().coeff(0);
    let disc = discriminant(p).expect("degree >= 3");
    let k = &s0 / &disc;
    Ok(ConjectureRecord {
        poly: p.clone(),
        normal_chain: chain.is_normal(),
        product: product_check(p, n, &disc),
        s0,
        disc,
        k,
    })
}

fn product_check(p: &Polynomial, n: usize, disc: &Rational) -> Option<ProductCheck> {
    let dp = p.derivative();
    if !dp.is_squarefree() {
        return None;
    }
    let roots = isolate_squarefree(&dp);
    if roots.len() != n - 1 {
        return None;
    }
    let sign = if (n * (n - 1) / 2).is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    };
    let scale = sign * num_traits::pow(int(n as i64), n);
    let tol = rat(1, 1 << 30);
    let mut lo = scale.clone();
    let mut hi = scale;
    for root in roots {
        let mut v = Algebraic::eval_at(p, root);
        v.refine_to(&tol, DEFAULT_BUDGET).ok()?;
        let (a, b) = v.bounds();
        let prods = [&lo * &a, &lo * &b, &hi * &a, &hi * &b];
        lo = prods.iter().min().unwrap().clone();
        hi = prods.iter().max().unwrap().clone();
    }
    Some(ProductCheck {
        contains_disc: lo <= *disc && *disc <= hi,
        lo,
        hi,
    })
}

/// Aggregate of a batch run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub total: usize,
    /// Nondegenerate inputs with a normal chain and `sign S_0 = sign disc`.
    pub agreements: usize,
    /// Nondegenerate inputs with a normal chain where the signs differ.
    pub disagreements: usize,
    pub degenerate_skips: usize,
    pub pivot_skips: usize,
    /// Inputs rejected for degree or normalization.
    pub invalid: usize,
    /// Records with `K = 0` (never expected: both sides vanish together
    /// only for degenerate input).
    pub zero_k: usize,
    /// Product enclosures that failed to contain the discriminant.
    pub product_failures: usize,
    pub counterexamples: Vec<ConjectureRecord>,
}

impl BatchSummary {
    /// One machine-readable line.
    pub fn to_json(&self) -> String {
        format!(
            "{{\"total\":{},\"agreements\":{},\"disagreements\":{},\"degenerate_skips\":{},\"pivot_skips\":{},\"invalid\":{},\"zero_k\":{},\"product_failures\":{}}}",
            self.total,
            self.agreements,
            self.disagreements,
            self.degenerate_skips,
            self.pivot_skips,
            self.invalid,
            self.zero_k,
            self.product_failures
        )
    }
}

impl fmt::Display for BatchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "total            {}", self.total)?;
        writeln!(f, "agreements       {}", self.agreements)?;
        writeln!(f, "disagreements    {}", self.disagreements)?;
        writeln!(f, "degenerate skips {}", self.degenerate_skips)?;
        writeln!(f, "pivot skips      {}", self.pivot_skips)?;
        writeln!(f, "invalid          {}", self.invalid)?;
        writeln!(f, "zero K           {}", self.zero_k)?;
        write!(f, "product failures {}", self.product_failures)
    }
}

/// Checks every polynomial (in parallel when enabled) and tallies results.
pub fn batch_report(polys: &[Polynomial]) -> BatchSummary {
    let results = par_map(polys, conjecture_check);
    summarize(results)
}

pub fn summarize(results: Vec<Result<ConjectureRecord, ConjectureError>>) -> BatchSummary {
    let mut s = BatchSummary {
        total: results.len(),
        ..BatchSummary::default()
    };
    for r in results {
        match r {
            Err(ConjectureError::DegenerateInput) => s.degenerate_skips += 1,
            Err(_) => s.invalid += 1,
            Ok(rec) => {
                if let Some(pc) = &rec.product {
                    if !pc.contains_disc {
                        s.product_failures += 1;
                    }
                }
                if !rec.normal_chain {
                    s.pivot_skips += 1;
                    continue;
                }
                if rec.k.is_zero() {
                    s.zero_k += 1;
                }
                if rec.signs_agree() && rec.k.is_positive() {
                    s.agreements += 1;
                } else {
                    s.disagreements += 1;
                    s.counterexamples.push(rec);
                }
            }
        }
    }
    s
}

/// Writes each record as a polynomial line followed by a comment line with
/// `S_0` and the discriminant.
pub fn write_counterexamples<W: Write>(mut w: W, records: &[ConjectureRecord]) -> io::Result<()> {
    for r in records {
        writeln!(w, "{}", r.poly.to_text())?;
        writeln!(
            w,
            "# S0={} disc={}",
            format_rational(&r.s0),
            format_rational(&r.disc)
        )?;
    }
    Ok(())
}

/// `count` pseudorandom monic depressed polynomials of degree `n` with
/// coefficients `a/b`, `|a/b| <= 10`, `1 <= b <= 9`.
pub fn random_depressed(n: usize, count: usize, seed: u64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut c: Vec<Rational> = (0..n.saturating_sub(1))
                .map(|_| {
                    let d = rng.gen_range(1..=9);
                    rat(rng.gen_range(-10 * d..=10 * d), d)
                })
                .collect();
            c.push(int(0));
            c.push(int(1));
            Polynomial::new(c)
        })
        .collect()
}

/// `1 / (4p^2)` for `x^3 + px + q`.
pub fn cubic_k(p: &Rational) -> Rational {
    Rational::one() / (int(4) * p * p)
}

/// `p^2 / (256 (-4pr + p^3 + 9q^2)^2)` for `x^4 + 2px^2 + 4qx + 4r`.
pub fn quartic_k(p: &Rational, q: &Rational, r: &Rational) -> Rational {
    let piv = crate::sturm::quartic_pivot(p, q, r);
    p * p / (int(256) * &piv * &piv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quintic::QuinticParams;

    #[test]
    fn cubic_constant() {
        let p = Polynomial::new(vec![rat(1, 3), rat(-7, 2), int(0), int(1)]);
        let rec = conjecture_check(&p).unwrap();
        assert_eq!(rec.k, cubic_k(&rat(-7, 2)));
        assert!(rec.product.unwrap().contains_disc);
    }

    #[test]
    fn quartic_constant() {
        let (p, q, r) = (int(-2), rat(1, 5), rat(1, 7));
        let poly = crate::quintic::QuarticParams::new(p.clone(), q.clone(), r.clone()).assemble();
        let rec = conjecture_check(&poly).unwrap();
        assert_eq!(rec.k, quartic_k(&p, &q, &r));
    }

    #[test]
    fn degenerate_inputs_are_skipped() {
        let p = QuinticParams::new(rat(-9, 2), int(1), int(3), rat(-18, 5)).assemble();
        assert_eq!(conjecture_check(&p), Err(ConjectureError::DegenerateInput));
        let s = batch_report(&[p, Polynomial::from_ints(&[1, -3, 0, 1])]);
        assert_eq!(s.degenerate_skips, 1);
        assert_eq!(s.agreements, 1);
        assert_eq!(batch_report(&[]), BatchSummary::default());
    }

    #[test]
    fn random_inputs_are_depressed_and_reproducible() {
        let a = random_depressed(5, 20, 3);
        assert_eq!(a, random_depressed(5, 20, 3));
        assert!(a
            .iter()
            .all(|p| p.degree() == Some(5) && p.is_monic() && p.is_depressed()));
    }

    #[test]
    fn counterexample_format() {
        let rec = conjecture_check(&Polynomial::from_ints(&[1, -3, 0, 1])).unwrap();
        let mut out = Vec::new();
        write_counterexamples(&mut out, &[rec]).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "1 -3 0 1\n# S0=9/4 disc=81\n"
        );
    }
}
