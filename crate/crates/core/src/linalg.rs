//! Dense complex vectors and matrices.
//!
//! Row-major storage, dimensions capped at 64: every object in scope is at
//! most 5x5, general dimensions exist as a convenience. All values are
//! immutable after construction and all operations are pure.

use crate::error::{Error, Result};
use crate::scalar::{Complex, Real};

/// Smallest supported dimension.
pub const MIN_DIM: usize = 2;
/// Largest supported dimension.
pub const MAX_DIM: usize = 64;

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if !(MIN_DIM..=MAX_DIM).contains(&dim) {
        return Err(Error::DimensionOutOfRange {
            dim,
            min: MIN_DIM,
            max: MAX_DIM,
        });
    }
    Ok(())
}

/// A complex column vector.
#[derive(Clone, Debug, PartialEq)]
pub struct CVector {
    dim: usize,
    entries: Vec<Complex>,
}

impl CVector {
    pub fn new(entries: Vec<Complex>) -> Result<Self> {
        check_dim(entries.len())?;
        if entries.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFinite { context: "vector entry" });
        }
        Ok(CVector {
            dim: entries.len(),
            entries,
        })
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize) -> Complex) -> Result<Self> {
        check_dim(dim)?;
        CVector::new((0..dim).map(f).collect())
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::from_fn(dim, |_| Complex::zero())
    }

    /// Euclidean basis vector e_k.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        check_dim(dim)?;
        if k >= dim {
            return Err(Error::IndexOutOfRange { index: k, dim });
        }
        Self::from_fn(dim, |j| {
            if j == k {
                Complex::one()
            } else {
                Complex::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, k: usize) -> &Complex {
        &self.entries[k]
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    fn same_dim(&self, other: &CVector) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CVector) -> Result<CVector> {
        self.same_dim(other)?;
        CVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &CVector) -> Result<CVector> {
        self.same_dim(other)?;
        CVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, s: &Complex) -> CVector {
        CVector {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn scale_real(&self, s: &Real) -> CVector {
        CVector {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    pub fn neg(&self) -> CVector {
        CVector {
            dim: self.dim,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Inner product conjugating the first argument: (u, v) = sum conj(u_k) v_k.
    pub fn inner_product(&self, other: &CVector) -> Result<Complex> {
        self.same_dim(other)?;
        let mut acc = Complex::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = &acc + &(&a.conj() * b);
        }
        Ok(acc)
    }

    pub fn norm_sqr(&self) -> Real {
        let mut acc = Real::zero();
        for e in &self.entries {
            acc = &acc + &e.norm_sqr();
        }
        acc
    }

    pub fn norm(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn normalize(&self) -> Result<CVector> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.scale_real(&(&Real::from(1.0) / &n)))
    }

    /// Rank-one matrix u v^dagger.
    pub fn outer(&self, other: &CVector) -> Result<CMatrix> {
        self.same_dim(other)?;
        CMatrix::from_fn(self.dim, |r, c| {
            &self.entries[r] * &other.entries[c].conj()
        })
    }

    /// Largest entry modulus, as f64.
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.modulus().to_f64())
            .fold(0.0, f64::max)
    }
}

/// A dense complex square matrix in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    dim: usize,
    entries: Vec<Complex>,
}

impl CMatrix {
    pub fn new(dim: usize, entries: Vec<Complex>) -> Result<Self> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: entries.len(),
                right: dim * dim,
            });
        }
        if entries.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFinite { context: "matrix entry" });
        }
        Ok(CMatrix { dim, entries })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex) -> Result<Self> {
        check_dim(dim)?;
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        CMatrix::new(dim, entries)
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::from_fn(dim, |_, _| Complex::zero())
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::from_fn(dim, |r, c| {
            if r == c {
                Complex::one()
            } else {
                Complex::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, row: usize, col: usize) -> &Complex {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    fn same_dim(&self, other: &CMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CMatrix) -> Result<CMatrix> {
        self.same_dim(other)?;
        CMatrix::new(
            self.dim,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &CMatrix) -> Result<CMatrix> {
        self.same_dim(other)?;
        CMatrix::new(
            self.dim,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, s: &Complex) -> CMatrix {
        CMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn scale_real(&self, s: &Real) -> CMatrix {
        CMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    pub fn neg(&self) -> CMatrix {
        CMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn multiply(&self, other: &CMatrix) -> Result<CMatrix> {
        self.same_dim(other)?;
        let n = self.dim;
        CMatrix::from_fn(n, |r, c| {
            let mut acc = Complex::zero();
            for k in 0..n {
                acc = &acc + &(self.at(r, k) * other.at(k, c));
            }
            acc
        })
    }

    pub fn apply(&self, v: &CVector) -> Result<CVector> {
        if self.dim != v.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        CVector::from_fn(self.dim, |r| {
            let mut acc = Complex::zero();
            for k in 0..self.dim {
                acc = &acc + &(self.at(r, k) * v.at(k));
            }
            acc
        })
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.dim, |r, c| self.at(c, r).clone()).expect("same dimension")
    }

    pub fn conjugate_transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.dim, |r, c| self.at(c, r).conj()).expect("same dimension")
    }

    pub fn trace(&self) -> Complex {
        let mut acc = Complex::zero();
        for k in 0..self.dim {
            acc = &acc + self.at(k, k);
        }
        acc
    }

    /// Matrix power by repeated multiplication; exponents here are tiny.
    pub fn pow(&self, k: usize) -> Result<CMatrix> {
        let mut acc = CMatrix::identity(self.dim)?;
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    pub fn frobenius_norm(&self) -> Real {
        let mut acc = Real::zero();
        for e in &self.entries {
            acc = &acc + &e.norm_sqr();
        }
        acc.sqrt()
    }

    /// Largest entry modulus, as f64.
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.modulus().to_f64())
            .fold(0.0, f64::max)
    }

    /// Maximum modulus of the Hermitian defect M - M^dagger.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in 0..self.dim {
                let d = (self.at(r, c) - &self.at(c, r).conj()).modulus().to_f64();
                worst = worst.max(d);
            }
        }
        worst
    }
}

/// AB - BA.
pub fn commutator(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    a.multiply(b)?.sub(&b.multiply(a)?)
}

/// AB + BA.
pub fn anticommutator(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    a.multiply(b)?.add(&b.multiply(a)?)
}

/// Frobenius norm of AB - BA; panics on dimension mismatch.
pub fn commutator_norm(a: &CMatrix, b: &CMatrix) -> f64 {
    commutator(a, b)
        .expect("conformable dimensions")
        .frobenius_norm()
        .to_f64()
}

/// Frobenius norm of AB + BA; panics on dimension mismatch.
pub fn anticommutator_norm(a: &CMatrix, b: &CMatrix) -> f64 {
    anticommutator(a, b)
        .expect("conformable dimensions")
        .frobenius_norm()
        .to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_checks() {
        assert!(matches!(
            CVector::new(vec![Complex::one()]),
            Err(Error::DimensionOutOfRange { dim: 1, .. })
        ));
        assert!(CMatrix::identity(65).is_err());
        let a = CMatrix::identity(3).unwrap();
        let b = CMatrix::identity(4).unwrap();
        assert!(matches!(
            a.multiply(&b),
            Err(Error::DimensionMismatch { left: 3, right: 4 })
        ));
        let v = CVector::zeros(5).unwrap();
        assert!(a.apply(&v).is_err());
    }

    #[test]
    fn nonfinite_rejected() {
        let bad = vec![Complex::one(), Complex::from_f64s(f64::NAN, 0.0)];
        assert!(matches!(
            CVector::new(bad),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn inner_product_conjugates_first_argument() {
        let u = CVector::new(vec![Complex::i(), Complex::zero()]).unwrap();
        let v = CVector::new(vec![Complex::one(), Complex::zero()]).unwrap();
        // (iu, v) = conj(i) * 1 = -i
        assert_eq!(u.inner_product(&v).unwrap().to_pair(), (0.0, -1.0));
        let e0 = CVector::basis(5, 0).unwrap();
        assert_eq!(e0.inner_product(&e0).unwrap().to_pair(), (1.0, 0.0));
    }

    #[test]
    fn commutator_of_identity_vanishes() {
        let a = CMatrix::identity(4).unwrap();
        let b = CMatrix::from_fn(4, |r, c| Complex::from_f64s((r * c) as f64, r as f64)).unwrap();
        let comm = commutator(&a, &b).unwrap();
        assert_eq!(comm.frobenius_norm().to_f64(), 0.0);
    }

    #[test]
    fn outer_and_trace() {
        let v = CVector::basis(3, 1).unwrap();
        let m = v.outer(&v).unwrap();
        assert_eq!(m.at(1, 1).to_pair(), (1.0, 0.0));
        assert_eq!(m.at(0, 0).to_pair(), (0.0, 0.0));
        assert_eq!(m.trace().to_pair(), (1.0, 0.0));
    }

    #[test]
    fn normalize_rejects_zero() {
        let v = CVector::zeros(3).unwrap();
        assert!(matches!(v.normalize(), Err(Error::ZeroVector)));
    }
}
