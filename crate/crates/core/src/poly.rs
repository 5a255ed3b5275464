//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored low-to-high (`coeffs[i]` multiplies `x^i`) with no
//! trailing zeros, so structural equality is mathematical equality. The zero
//! polynomial is the empty vector and has no degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::matrix::Matrix;
use crate::rational::{format_rational, int, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("degree {degree:?} is below the required minimum {required}")]
    DegreeTooSmall {
        degree: Option<usize>,
        required: usize,
    },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x - root`.
    pub fn linear_factor(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_factor(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Monic and with zero `x^{n-1}` coefficient.
    pub fn is_depressed(&self) -> bool {
        match self.degree() {
            Some(n) if n >= 1 => self.is_monic() && self.coeffs[n - 1].is_zero(),
            _ => false,
        }
    }

    /// Exact value at `x` (Horner order).
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Polynomial {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(i as i64 + 1));
        }
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// `P(x + t)` by repeated synthetic division (Taylor shift).
    pub fn shift(&self, t: &Rational) -> Polynomial {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let v = &c[j + 1] * t;
                c[j] += v;
            }
        }
        Polynomial::new(c)
    }

    /// `P(-x)`.
    pub fn reflect(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn euclid_div(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        let db = divisor
            .degree()
            .ok_or(PolyError::DivisionByZeroPolynomial)?;
        let lc = divisor.coeffs[db].clone();
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let factor = &r[k + db] / &lc;
            if factor.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let v = &factor * b;
                r[k + j] -= v;
            }
            q[k] = factor;
        }
        r.truncate(db);
        Ok((Polynomial::new(q), Polynomial::new(r)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        Ok(self.euclid_div(divisor)?.1)
    }

    /// Exact quotient; panics in debug builds if the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self
            .euclid_div(divisor)
            .expect("exact_div by zero polynomial");
        debug_assert!(r.is_zero(), "exact_div left a remainder");
        q
    }

    /// Monic shift to zero `x^{n-1}` coefficient.
    pub fn depress(&self) -> Result<DepressedForm, PolyError> {
        let n = match self.degree() {
            Some(n) if n >= 2 => n,
            degree => {
                return Err(PolyError::DegreeTooSmall {
                    degree,
                    required: 2,
                })
            }
        };
        let monic = self.monic();
        let shift = &monic.coeffs[n - 1] / int(n as i64);
        let poly = monic.shift(&-shift.clone());
        debug_assert!(poly.coeffs[n - 1].is_zero());
        Ok(DepressedForm { poly, shift })
    }

    /// `P(x) = lc * prod f_k^k` with squarefree, pairwise coprime, monic
    /// `f_k` (Yun). Returns `(f_k, k)` for the non-constant factors.
    pub fn squarefree_decomposition(&self) -> Vec<(Polynomial, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = gcd(&f, &df);
        let mut b = f.exact_div(&a0);
        let mut c = df.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut k = 1;
        loop {
            let a = gcd(&b, &d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.exact_div(&a);
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.exact_div(&a);
            d = &c - &b.derivative();
            k += 1;
        }
        out
    }

    /// Monic squarefree part `P / gcd(P, P')`.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.is_constant() {
            return self.monic();
        }
        let g = gcd(self, &self.derivative());
        self.monic().exact_div(&g)
    }

    pub fn is_squarefree(&self) -> bool {
        gcd(self, &self.derivative()).is_constant()
    }

    /// Text form: low-to-high coefficients separated by single spaces.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses a whitespace-separated low-to-high coefficient list. Anything
    /// after `#` is ignored.
    pub fn parse_text(line: &str) -> Result<Polynomial, PolyError> {
        let body = line.split('#').next().unwrap_or("");
        let mut coeffs = Vec::new();
        let mut column = 0;
        for token in body.split(|c: char| c.is_whitespace()) {
            if !token.is_empty() {
                let c = parse_rational(token).map_err(|e| PolyError::Parse {
                    column: column + 1,
                    message: e.message,
                })?;
                coeffs.push(c);
            }
            column += token.chars().count() + 1;
        }
        if coeffs.is_empty() {
            return Err(PolyError::Parse {
                column: 1,
                message: "no coefficients".to_string(),
            });
        }
        Ok(Polynomial::new(coeffs))
    }
}

/// Monic polynomial plus the offset that removed the `x^{n-1}` term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepressedForm {
    /// Monic, zero coefficient at `x^{n-1}`.
    pub poly: Polynomial,
    /// Original variable = depressed variable - `shift`, i.e.
    /// `poly(x + shift) = P(x) / lc(P)`.
    pub shift: Rational,
}

impl DepressedForm {
    /// Undo the substitution, returning the monic original.
    pub fn restore(&self) -> Polynomial {
        self.poly.shift(&self.shift)
    }
}

/// Monic gcd. `gcd(0, 0)` is zero.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.rem(&b).expect("nonzero divisor");
        a = b;
        b = r.monic();
    }
    a.monic()
}

/// Resultant through the Euclidean remainder sequence.
pub fn resultant(a: &Polynomial, b: &Polynomial) -> Rational {
    let (Some(mut m), Some(mut n)) = (a.degree(), b.degree()) else {
        return Rational::zero();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = Rational::one();
    loop {
        if n == 0 {
            return acc * crate::rational::pow(&b.coeffs[0], m as u32);
        }
        let r = a.rem(&b).expect("nonzero divisor");
        let Some(k) = r.degree() else {
            return Rational::zero();
        };
        // Res(a, b) = (-1)^{mn} lc(b)^{m-k} Res(b, r)
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= crate::rational::pow(&b.coeffs[n], (m - k) as u32);
        a = b;
        b = r;
        m = n;
        n = k;
    }
}

/// Sylvester matrix of `a` (degree m) and `b` (degree n), size m + n.
pub fn sylvester_matrix(a: &Polynomial, b: &Polynomial) -> Matrix {
    let m = a.degree().unwrap_or(0);
    let n = b.degree().unwrap_or(0);
    let size = m + n;
    let mut s = Matrix::zeros(size);
    for row in 0..n {
        for (j, c) in a.coeffs.iter().rev().enumerate() {
            s[(row, row + j)] = c.clone();
        }
    }
    for row in 0..m {
        for (j, c) in b.coeffs.iter().rev().enumerate() {
            s[(n + row, row + j)] = c.clone();
        }
    }
    s
}

/// Resultant as the Sylvester determinant.
pub fn resultant_sylvester(a: &Polynomial, b: &Polynomial) -> Rational {
    if a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    sylvester_matrix(a, b).determinant()
}

/// `(-1)^{n(n-1)/2} Res(P, P') / lc(P)`.
pub fn discriminant(p: &Polynomial) -> Result<Rational, PolyError> {
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        degree => {
            return Err(PolyError::DegreeTooSmall {
                degree,
                required: 2,
            })
        }
    };
    let res = resultant(p, &p.derivative());
    let d = res / p.leading_coeff().expect("nonzero");
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                let s = format_rational(&mag);
                if i > 0 && s.contains('/') {
                    write!(f, "({s})")?;
                } else {
                    f.write_str(&s)?;
                }
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Polynomial::parse_text(s)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// `P^k`.
pub fn pow(p: &Polynomial, k: usize) -> Polynomial {
    (0..k).fold(Polynomial::one(), |acc, _| &acc * p)
}
