//! Dense square complex matrices.
//!
//! The matrices here are small (rank of a category, at most a few dozen),
//! so a flat row-major `Vec` with straightforward loops is all that is
//! needed.

use num_complex::Complex;

use crate::scalar::Real;

/// Square complex matrix in row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat<F> {
    n: usize,
    a: Vec<Complex<F>>,
}

impl<F: Real> CMat<F> {
    pub fn zeros(n: usize) -> Self {
        CMat { n, a: vec![Complex::new(F::zero(), F::zero()); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex::new(F::one(), F::zero());
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex<F>) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Permutation matrix with `P[perm[i]][i] = 1`, i.e. `P e_i = e_{perm(i)}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zeros(perm.len());
        for (i, &pi) in perm.iter().enumerate() {
            m[(pi, i)] = Complex::new(F::one(), F::zero());
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.a[i * n + k];
                if aik.norm_sqr() == F::zero() {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] = out.a[i * n + j] + aik * other.a[k * n + j];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.a[j * self.n + i])
    }

    pub fn conj(&self) -> Self {
        CMat { n: self.n, a: self.a.iter().map(|z| z.conj()).collect() }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        self.transpose().conj()
    }

    /// Scales every entry.
    pub fn scale(&self, c: Complex<F>) -> Self {
        CMat { n: self.n, a: self.a.iter().map(|z| z * c).collect() }
    }

    /// Right-multiplies by a diagonal matrix given as its diagonal.
    pub fn mul_diag(&self, d: &[Complex<F>]) -> Self {
        assert_eq!(self.n, d.len(), "dimension mismatch");
        Self::from_fn(self.n, |i, j| self.a[i * self.n + j] * d[j])
    }

    /// Left-multiplies by a diagonal matrix given as its diagonal.
    pub fn diag_mul(d: &[Complex<F>], m: &Self) -> Self {
        assert_eq!(m.n, d.len(), "dimension mismatch");
        Self::from_fn(m.n, |i, j| d[i] * m.a[i * m.n + j])
    }

    /// Largest entrywise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> F {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut worst = F::zero();
        for (x, y) in self.a.iter().zip(&other.a) {
            worst = worst.max((x - y).norm());
        }
        worst
    }

    /// Largest deviation from the identity of `self * self^dagger`.
    pub fn unitarity_residual(&self) -> F {
        self.mul(&self.dagger()).max_abs_diff(&Self::identity(self.n))
    }

    /// Largest deviation from symmetry.
    pub fn symmetry_residual(&self) -> F {
        let mut worst = F::zero();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max((self.a[i * self.n + j] - self.a[j * self.n + i]).norm());
            }
        }
        worst
    }
}

impl<F> std::ops::Index<(usize, usize)> for CMat<F> {
    type Output = Complex<F>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<F> {
        &self.a[i * self.n + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for CMat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<F> {
        &mut self.a[i * self.n + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn permutation_composes_like_the_permutation() {
        // perm = (0 1 2) cycle: e0 -> e1 -> e2 -> e0.
        let p: CMat<f64> = CMat::permutation(&[1, 2, 0]);
        let p2 = p.mul(&p);
        let p3 = p2.mul(&p);
        assert_eq!(p3.max_abs_diff(&CMat::identity(3)), 0.0);
        assert_eq!(p2[(0, 1)], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn unitarity_residual_detects_scaling() {
        let mut m: CMat<f64> = CMat::identity(2);
        m[(0, 0)] = Complex64::new(2.0, 0.0);
        assert!(m.unitarity_residual() > 1.0);
        assert_eq!(CMat::<f64>::identity(5).unitarity_residual(), 0.0);
    }
}
