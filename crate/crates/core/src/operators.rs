//! The named operator family: the DFT matrix, the circulant shift and
//! reflection permutations, the position/derivative/momentum trio, the
//! lowering and raising pair, and the two number operators built from them.
//!
//! Everything is constructed for a general dimension n; n = 5 is the
//! principal case used by the rest of the crate.

use std::fmt;
use std::str::FromStr;

use crate::constants::{trig_tables_vec, unit_roots};
use crate::error::{Error, Result};
use crate::linalg::{check_dim, CMatrix, CVector};
use crate::scalar::{Complex, Precision, Real};

/// Reflection parity of a vector: invariant or sign-flipped under index
/// negation mod n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Symmetric,
    Antisymmetric,
}

impl Parity {
    /// Parity of the n-th eigenvector: even indices are symmetric.
    pub fn of_index(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Symmetric
        } else {
            Parity::Antisymmetric
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Symmetric => write!(f, "symmetric"),
            Parity::Antisymmetric => write!(f, "antisymmetric"),
        }
    }
}

/// Selector for [`build_named_matrix`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    /// Basic circulant permutation C with entries delta_{k, l-1 mod n}.
    Circulant,
    /// Backward identity J: ones on the secondary diagonal.
    BackwardIdentity,
    /// Discrete reflection P = C^T J = J C, acting as (Pv)_k = v_{-k mod n}.
    Reflection,
    /// Position X = diag(2 sin(2 pi k/n)).
    Position,
    /// Derivative D = C - C^T.
    Derivative,
    /// Momentum Y = -i D.
    Momentum,
    /// Lowering A = (X + D)/sqrt 2.
    Lowering,
    /// Raising A^T = (X - D)/sqrt 2.
    Raising,
    /// Number operator A^T A.
    Number,
    /// Partner number operator A A^T.
    PartnerNumber,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 10] = [
        MatrixKind::Circulant,
        MatrixKind::BackwardIdentity,
        MatrixKind::Reflection,
        MatrixKind::Position,
        MatrixKind::Derivative,
        MatrixKind::Momentum,
        MatrixKind::Lowering,
        MatrixKind::Raising,
        MatrixKind::Number,
        MatrixKind::PartnerNumber,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MatrixKind::Circulant => "circulant",
            MatrixKind::BackwardIdentity => "backward-identity",
            MatrixKind::Reflection => "reflection",
            MatrixKind::Position => "position",
            MatrixKind::Derivative => "derivative",
            MatrixKind::Momentum => "momentum",
            MatrixKind::Lowering => "lowering",
            MatrixKind::Raising => "raising",
            MatrixKind::Number => "number",
            MatrixKind::PartnerNumber => "partner-number",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for MatrixKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        MatrixKind::ALL
            .iter()
            .find(|k| k.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown matrix kind `{s}`"))
    }
}

/// The unitary symmetric DFT matrix with entries n^{-1/2} q^{kl},
/// q = exp(2 pi i/n).
pub fn dft_matrix(n: usize, prec: &Precision) -> Result<CMatrix> {
    check_dim(n)?;
    let roots = unit_roots(n, prec);
    let inv_sqrt_n = &prec.real(1.0) / &prec.real(n as f64).sqrt();
    CMatrix::from_fn(n, |k, l| roots[(k * l) % n].scale(&inv_sqrt_n))
}

/// Builds one of the named operator matrices at dimension n.
pub fn build_named_matrix(kind: MatrixKind, n: usize, prec: &Precision) -> Result<CMatrix> {
    check_dim(n)?;
    match kind {
        MatrixKind::Circulant => CMatrix::from_fn(n, |k, l| {
            if l == (k + 1) % n {
                Complex::one()
            } else {
                Complex::zero()
            }
        }),
        MatrixKind::BackwardIdentity => CMatrix::from_fn(n, |k, l| {
            if k + l == n - 1 {
                Complex::one()
            } else {
                Complex::zero()
            }
        }),
        MatrixKind::Reflection => CMatrix::from_fn(n, |k, l| {
            if l == (n - k) % n {
                Complex::one()
            } else {
                Complex::zero()
            }
        }),
        MatrixKind::Position => {
            let (s, _) = trig_tables_vec(n, prec);
            CMatrix::from_fn(n, |k, l| {
                if k == l {
                    Complex::new(s[k].clone(), Real::zero())
                } else {
                    Complex::zero()
                }
            })
        }
        MatrixKind::Derivative => {
            let c = build_named_matrix(MatrixKind::Circulant, n, prec)?;
            c.sub(&c.transpose())
        }
        MatrixKind::Momentum => {
            let d = build_named_matrix(MatrixKind::Derivative, n, prec)?;
            Ok(d.scale(&Complex::from_f64s(0.0, -1.0)))
        }
        MatrixKind::Lowering => {
            let x = build_named_matrix(MatrixKind::Position, n, prec)?;
            let d = build_named_matrix(MatrixKind::Derivative, n, prec)?;
            let inv_sqrt2 = &prec.real(1.0) / &prec.real(2.0).sqrt();
            Ok(x.add(&d)?.scale_real(&inv_sqrt2))
        }
        MatrixKind::Raising => {
            Ok(build_named_matrix(MatrixKind::Lowering, n, prec)?.transpose())
        }
        MatrixKind::Number => {
            let a = build_named_matrix(MatrixKind::Lowering, n, prec)?;
            a.transpose().multiply(&a)
        }
        MatrixKind::PartnerNumber => {
            let a = build_named_matrix(MatrixKind::Lowering, n, prec)?;
            a.multiply(&a.transpose())
        }
    }
}

/// The k-th DFT eigencolumn eps_k = n^{-1/2} (1, q^k, q^{2k}, ...)^T, an
/// eigenvector of the momentum operator with eigenvalue 2 sin(2 pi k/n).
pub fn fourier_basis_vector(n: usize, k: usize, prec: &Precision) -> Result<CVector> {
    check_dim(n)?;
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, dim: n });
    }
    let roots = unit_roots(n, prec);
    let inv_sqrt_n = &prec.real(1.0) / &prec.real(n as f64).sqrt();
    CVector::from_fn(n, |j| roots[(j * k) % n].scale(&inv_sqrt_n))
}

/// Splits a vector into its reflection-symmetric and antisymmetric parts,
/// v = (v + Pv)/2 + (v - Pv)/2.
pub fn parity_decompose(v: &CVector) -> (CVector, CVector) {
    let n = v.dim();
    let half = Real::from(0.5);
    let sym = CVector::from_fn(n, |j| {
        (v.at(j) + v.at((n - j) % n)).scale(&half)
    })
    .expect("same dimension");
    let anti = CVector::from_fn(n, |j| {
        (v.at(j) - v.at((n - j) % n)).scale(&half)
    })
    .expect("same dimension");
    (sym, anti)
}

/// How far a vector sits from the given parity class, as the norm of the
/// offending parity component relative to the vector norm.
pub fn parity_defect(v: &CVector, parity: Parity) -> f64 {
    let (sym, anti) = parity_decompose(v);
    let offending = match parity {
        Parity::Symmetric => anti,
        Parity::Antisymmetric => sym,
    };
    let n = v.norm().to_f64();
    if n == 0.0 {
        0.0
    } else {
        offending.norm().to_f64() / n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> Precision {
        Precision::binary64()
    }

    #[test]
    fn dft_frozen_entries() {
        let phi = dft_matrix(5, &prec()).unwrap();
        let (re, im) = phi.at(0, 0).to_pair();
        assert!((re - 0.4472135954999579).abs() < 1e-15 && im == 0.0);
        let (re, im) = phi.at(1, 1).to_pair();
        assert!((re - 0.13819660112501053).abs() < 1e-15);
        assert!((im - 0.42532540417601994).abs() < 1e-15);
    }

    #[test]
    fn dft_two_point() {
        let phi = dft_matrix(2, &prec()).unwrap();
        let h = 0.5f64.sqrt();
        for (k, l, want) in [(0, 0, h), (0, 1, h), (1, 0, h), (1, 1, -h)] {
            let (re, im) = phi.at(k, l).to_pair();
            assert!((re - want).abs() < 1e-15 && im == 0.0);
        }
    }

    #[test]
    fn dft_unitary_and_fourth_power() {
        for n in [2, 3, 5, 8, 13] {
            let phi = dft_matrix(n, &prec()).unwrap();
            let id = CMatrix::identity(n).unwrap();
            let u = phi.multiply(&phi.conjugate_transpose()).unwrap();
            assert!(u.sub(&id).unwrap().frobenius_norm().to_f64() < 1e-11);
            let p4 = phi.pow(4).unwrap();
            assert!(p4.sub(&id).unwrap().frobenius_norm().to_f64() < 1e-11);
            assert!(phi.sub(&phi.transpose()).unwrap().frobenius_norm().to_f64() == 0.0);
        }
    }

    #[test]
    fn dimension_errors() {
        assert!(dft_matrix(1, &prec()).is_err());
        assert!(dft_matrix(65, &prec()).is_err());
        assert!(build_named_matrix(MatrixKind::Number, 0, &prec()).is_err());
        assert!(fourier_basis_vector(5, 5, &prec()).is_err());
    }

    #[test]
    fn reflection_permutes_basis() {
        let p = build_named_matrix(MatrixKind::Reflection, 5, &prec()).unwrap();
        let e1 = CVector::basis(5, 1).unwrap();
        let e4 = CVector::basis(5, 4).unwrap();
        let image = p.apply(&e1).unwrap();
        assert_eq!(image.sub(&e4).unwrap().norm().to_f64(), 0.0);
    }

    #[test]
    fn position_diagonal_frozen() {
        let x = build_named_matrix(MatrixKind::Position, 5, &prec()).unwrap();
        let want = [
            0.0,
            1.902113032590307,
            1.1755705045849463,
            -1.1755705045849463,
            -1.902113032590307,
        ];
        for (k, w) in want.iter().enumerate() {
            assert!((x.at(k, k).re.to_f64() - w).abs() < 5e-15);
        }
    }

    #[test]
    fn structure_of_derived_operators() {
        let p = prec();
        let d = build_named_matrix(MatrixKind::Derivative, 5, &p).unwrap();
        let dt = d.transpose();
        assert_eq!(d.add(&dt).unwrap().frobenius_norm().to_f64(), 0.0);
        let y = build_named_matrix(MatrixKind::Momentum, 5, &p).unwrap();
        assert_eq!(y.hermitian_defect(), 0.0);
        let a = build_named_matrix(MatrixKind::Lowering, 5, &p).unwrap();
        let at = build_named_matrix(MatrixKind::Raising, 5, &p).unwrap();
        assert_eq!(a.transpose().sub(&at).unwrap().frobenius_norm().to_f64(), 0.0);
        for kind in [MatrixKind::Number, MatrixKind::PartnerNumber] {
            let m = build_named_matrix(kind, 5, &p).unwrap();
            assert!(m.hermitian_defect() < 1e-15);
        }
    }

    // Independent oracle: the number operator assembled from scratch in
    // plain f64, bypassing the library's scalar and matrix types.
    #[test]
    fn number_trace_matches_brute_force() {
        let p = prec();
        let nop = build_named_matrix(MatrixKind::Number, 5, &p).unwrap();
        assert!((nop.trace().re.to_f64() - 10.0).abs() < 1e-13);

        let mut a = [[0.0f64; 5]; 5];
        for k in 0..5 {
            a[k][k] = 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 5.0).sin();
            a[k][(k + 1) % 5] += 1.0;
            a[k][(k + 4) % 5] -= 1.0;
        }
        let mut trace = 0.0;
        for row in &a {
            for x in row {
                trace += x * x / 2.0;
            }
        }
        assert!((trace - 10.0).abs() < 1e-13);
        assert!((nop.trace().re.to_f64() - trace).abs() < 1e-13);
    }

    #[test]
    fn fourier_basis_examples() {
        let p = prec();
        let eps0 = fourier_basis_vector(5, 0, &p).unwrap();
        for j in 0..5 {
            let (re, im) = eps0.at(j).to_pair();
            assert!((re - 0.4472135954999579).abs() < 1e-15 && im == 0.0);
        }
        let eps1 = fourier_basis_vector(5, 1, &p).unwrap();
        let (re, im) = eps1.at(2).to_pair();
        assert!((re + 0.3618033988749894).abs() < 1e-15);
        assert!((im - 0.2628655560595668).abs() < 1e-15);
        assert!((eps1.norm().to_f64() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn momentum_eigencolumns() {
        let p = prec();
        let y = build_named_matrix(MatrixKind::Momentum, 5, &p).unwrap();
        let x = build_named_matrix(MatrixKind::Position, 5, &p).unwrap();
        for k in 0..5 {
            let eps = fourier_basis_vector(5, k, &p).unwrap();
            let lhs = y.apply(&eps).unwrap();
            let rhs = eps.scale_real(&x.at(k, k).re);
            assert!(lhs.sub(&rhs).unwrap().norm().to_f64() < 1e-12);
        }
    }

    #[test]
    fn position_two_diagonal_in_fourier_basis() {
        let p = prec();
        let x = build_named_matrix(MatrixKind::Position, 5, &p).unwrap();
        for k in 0..5 {
            let eps = fourier_basis_vector(5, k, &p).unwrap();
            let prev = fourier_basis_vector(5, (k + 4) % 5, &p).unwrap();
            let next = fourier_basis_vector(5, (k + 1) % 5, &p).unwrap();
            let lhs = x.apply(&eps).unwrap();
            let rhs = prev.sub(&next).unwrap().scale(&Complex::i());
            assert!(lhs.sub(&rhs).unwrap().norm().to_f64() < 1e-12);
        }
    }

    #[test]
    fn parity_examples() {
        let v = CVector::new(
            [1.0, 2.0, 3.0, 3.0, 2.0]
                .iter()
                .map(|&x| Complex::from_f64s(x, 0.0))
                .collect(),
        )
        .unwrap();
        let (sym, anti) = parity_decompose(&v);
        assert_eq!(sym.sub(&v).unwrap().norm().to_f64(), 0.0);
        assert_eq!(anti.norm().to_f64(), 0.0);

        let w = CVector::new(
            [0.0, 2.0, 3.0, -3.0, -2.0]
                .iter()
                .map(|&x| Complex::from_f64s(x, 0.0))
                .collect(),
        )
        .unwrap();
        let (sym, anti) = parity_decompose(&w);
        assert_eq!(anti.sub(&w).unwrap().norm().to_f64(), 0.0);
        assert_eq!(sym.norm().to_f64(), 0.0);

        let u = CVector::new(
            [1.0, 1.0, 0.0, 0.0, 0.0]
                .iter()
                .map(|&x| Complex::from_f64s(x, 0.0))
                .collect(),
        )
        .unwrap();
        let (sym, anti) = parity_decompose(&u);
        let sym_want = [1.0, 0.5, 0.0, 0.0, 0.5];
        let anti_want = [0.0, 0.5, 0.0, 0.0, -0.5];
        for j in 0..5 {
            assert_eq!(sym.at(j).to_pair(), (sym_want[j], 0.0));
            assert_eq!(anti.at(j).to_pair(), (anti_want[j], 0.0));
        }
        // recomposition and the Pythagorean norm split
        let back = sym.add(&anti).unwrap();
        assert_eq!(back.sub(&u).unwrap().norm().to_f64(), 0.0);
        let lhs = u.norm_sqr().to_f64();
        let rhs = sym.norm_sqr().to_f64() + anti.norm_sqr().to_f64();
        assert!((lhs - rhs).abs() < 1e-14);
    }

    #[test]
    fn matrix_kind_names_round_trip() {
        for kind in MatrixKind::ALL {
            assert_eq!(kind.name().parse::<MatrixKind>().unwrap(), kind);
        }
        assert!("unknown-thing".parse::<MatrixKind>().is_err());
    }
}
