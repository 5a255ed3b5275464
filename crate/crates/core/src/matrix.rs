//! Small dense exact matrices: determinants (for Sylvester resultants) and
//! characteristic polynomials (for annihilating polynomials of algebraic
//! values).

use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Determinant by Gaussian elimination with exact pivots.
    pub fn determinant(&self) -> Rational {
        let n = self.n;
        if n == 0 {
            return Rational::one();
        }
        let mut a = self.data.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] / &p;
                for k in col..n {
                    let v = &factor * &a[col * n + k];
                    a[r * n + k] -= v;
                }
            }
        }
        det
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = a * &other[(k, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self[(i, i)].clone()).sum()
    }

    /// Monic characteristic polynomial `det(xI - A)` (Faddeev-LeVerrier).
    pub fn charpoly(&self) -> Polynomial {
        let n = self.n;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Matrix::zeros(n);
        let id = Matrix::identity(n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m);
            let c_prev = &coeffs[n - k + 1];
            for i in 0..n {
                next[(i, i)] += c_prev * &id[(i, i)];
            }
            m = next;
            let am = self.mul(&m);
            coeffs[n - k] = -am.trace() / int(k as i64);
        }
        Polynomial::new(coeffs)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.n + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn determinant_small() {
        let mut m = Matrix::zeros(3);
        let vals = [2, -1, 0, -1, 2, -1, 0, -1, 2];
        for (k, v) in vals.iter().enumerate() {
            m[(k / 3, k % 3)] = int(*v);
        }
        assert_eq!(m.determinant(), int(4));
        assert_eq!(Matrix::identity(4).determinant(), int(1));
    }

    #[test]
    fn determinant_needs_row_swap() {
        let mut m = Matrix::zeros(2);
        m[(0, 1)] = int(1);
        m[(1, 0)] = int(1);
        assert_eq!(m.determinant(), int(-1));
    }

    #[test]
    fn charpoly_of_companion() {
        // companion matrix of x^2 - 3x + 2
        let mut m = Matrix::zeros(2);
        m[(1, 0)] = int(1);
        m[(0, 1)] = int(-2);
        m[(1, 1)] = int(3);
        assert_eq!(m.charpoly(), Polynomial::from_ints(&[2, -3, 1]));
        let mut d = Matrix::zeros(2);
        d[(0, 0)] = rat(1, 2);
        d[(1, 1)] = rat(1, 3);
        assert_eq!(
            d.charpoly(),
            Polynomial::new(vec![rat(1, 6), rat(-5, 6), int(1)])
        );
    }
}
