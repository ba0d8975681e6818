//! Independent eigensolver oracle: classical cyclic Jacobi rotations for
//! Hermitian matrices, plus phase-invariant eigenvector comparison.
//!
//! This path shares nothing with the ladder construction (no splits, no
//! closed forms), which is what makes it usable as a cross-check.

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector};
use crate::scalar::{Complex, Mode, Precision, Real};

/// Eigendecomposition with eigenvalues in caller-friendly ascending order.
#[derive(Clone, Debug)]
pub struct OracleEigenResult {
    pub eigenvalues: Vec<Real>,
    pub eigenvectors: Vec<CVector>,
}

/// Off-diagonal Frobenius norm at which the sweep loop stops.
///
/// Binary64 uses the fixed 1e-14 target; extended mode scales the target
/// with the configured digits so residuals keep shrinking with precision.
fn convergence_threshold(prec: &Precision) -> f64 {
    match prec.mode() {
        Mode::Binary64 => 1e-14,
        Mode::Extended { digits } => 10f64.powi(-((digits as i32) + 6)).max(1e-300),
    }
}

const MAX_SWEEPS: usize = 100;

/// Hermiticity tolerance on the input matrix.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Diagonalizes a Hermitian matrix by cyclic Jacobi rotations.
///
/// Deterministic for a fixed input: rotations run in row-major pair order
/// and the result is sorted ascending by eigenvalue.
pub fn hermitian_eigensolver(m: &CMatrix, prec: &Precision) -> Result<OracleEigenResult> {
    let defect = m.hermitian_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian { asymmetry: defect });
    }

    let n = m.dim();
    let threshold = convergence_threshold(prec);
    let cutoff = threshold / (2.0 * (n * n) as f64);
    let half = Real::from(0.5);
    let one = Real::from(1.0);

    // exactly Hermitian working copy: W = (M + M^dagger)/2
    let mut w: Vec<Complex> = {
        let mt = m.conjugate_transpose();
        m.entries()
            .iter()
            .zip(mt.entries())
            .map(|(a, b)| (a + b).scale(&half))
            .collect()
    };
    let mut v: Vec<Complex> = CMatrix::identity(n)?.entries().to_vec();

    let idx = |r: usize, c: usize| r * n + c;
    let off_norm = |w: &[Complex]| -> f64 {
        let mut acc = Real::zero();
        for r in 0..n {
            for c in 0..n {
                if r != c {
                    acc = &acc + &w[idx(r, c)].norm_sqr();
                }
            }
        }
        acc.sqrt().to_f64()
    };

    let mut sweeps = 0;
    while off_norm(&w) > threshold {
        if sweeps >= MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off: off_norm(&w),
            });
        }
        sweeps += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = w[idx(p, q)].clone();
                let beta = apq.modulus();
                if beta.to_f64() <= cutoff {
                    continue;
                }
                let app = w[idx(p, p)].re.clone();
                let aqq = w[idx(q, q)].re.clone();
                // unit phase of the pivot and the rotation angle
                let u = apq.scale(&(&one / &beta));
                let tau = &(&aqq - &app) / &(&Real::from(2.0) * &beta);
                // smaller-magnitude root of t^2 - 2 tau t - 1 = 0, which
                // zeroes the transformed pivot exactly
                let denom = &tau.abs() + &(&one + &(&tau * &tau)).sqrt();
                let t = if tau.is_negative() {
                    &one / &denom
                } else {
                    -&(&one / &denom)
                };
                let c = &one / &(&one + &(&t * &t)).sqrt();
                let s = &t * &c;

                let su_conj = u.conj().scale(&s);
                let neg_su = -&u.scale(&s);
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let wrp = w[idx(r, p)].clone();
                    let wrq = w[idx(r, q)].clone();
                    let new_rp = &wrp.scale(&c) + &(&wrq * &su_conj);
                    let new_rq = &(&wrp * &neg_su) + &wrq.scale(&c);
                    w[idx(p, r)] = new_rp.conj();
                    w[idx(q, r)] = new_rq.conj();
                    w[idx(r, p)] = new_rp;
                    w[idx(r, q)] = new_rq;
                }
                let cs2beta = &(&Real::from(2.0) * &(&c * &s)) * &beta;
                let c2 = &c * &c;
                let s2 = &s * &s;
                let new_pp = &(&(&c2 * &app) + &cs2beta) + &(&s2 * &aqq);
                let new_qq = &(&(&s2 * &app) - &cs2beta) + &(&c2 * &aqq);
                w[idx(p, p)] = Complex::new(new_pp, Real::zero());
                w[idx(q, q)] = Complex::new(new_qq, Real::zero());
                w[idx(p, q)] = Complex::zero();
                w[idx(q, p)] = Complex::zero();

                for r in 0..n {
                    let vrp = v[idx(r, p)].clone();
                    let vrq = v[idx(r, q)].clone();
                    v[idx(r, p)] = &vrp.scale(&c) + &(&vrq * &su_conj);
                    v[idx(r, q)] = &(&vrp * &neg_su) + &vrq.scale(&c);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        w[idx(a, a)]
            .re
            .partial_cmp(&w[idx(b, b)].re)
            .expect("finite eigenvalues")
    });

    let eigenvalues = order.iter().map(|&j| w[idx(j, j)].re.clone()).collect();
    let eigenvectors: Vec<CVector> = order
        .iter()
        .map(|&j| CVector::from_fn(n, |r| v[idx(r, j)].clone()).expect("square system"))
        .collect();

    Ok(OracleEigenResult {
        eigenvalues,
        eigenvectors,
    })
}

impl OracleEigenResult {
    /// Max residual norm |M v - mu v| over all pairs.
    pub fn max_pair_residual(&self, m: &CMatrix) -> f64 {
        self.eigenvalues
            .iter()
            .zip(&self.eigenvectors)
            .map(|(mu, v)| {
                m.apply(v)
                    .and_then(|mv| mv.sub(&v.scale_real(mu)))
                    .map(|d| d.norm().to_f64())
                    .unwrap_or(f64::INFINITY)
            })
            .fold(0.0, f64::max)
    }

    /// Frobenius distance of the eigenvector Gram matrix from the identity.
    pub fn gram_defect(&self) -> f64 {
        let n = self.eigenvectors.len();
        let mut acc = Real::zero();
        for k in 0..n {
            for l in 0..n {
                let g = self.eigenvectors[k]
                    .inner_product(&self.eigenvectors[l])
                    .expect("equal dimensions");
                let want = if k == l { Real::from(1.0) } else { Real::zero() };
                let defect = Complex::new(&g.re - &want, g.im);
                acc = &acc + &defect.norm_sqr();
            }
        }
        acc.sqrt().to_f64()
    }
}

/// Distance between two vectors minimized over a unit-modulus phase on the
/// second: min_|p|=1 |a - p b|, attained at p = conj((a, b))/|(a, b)|.
///
/// The difference vector is formed explicitly at the optimal phase, so tiny
/// distances are resolved down to entry-level rounding rather than being
/// drowned by cancellation in |a|^2 + |b|^2 - 2 |(a, b)|.
pub fn eigenvector_match(a: &CVector, b: &CVector) -> Result<Real> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    if a.norm().is_zero() || b.norm().is_zero() {
        return Err(Error::ZeroVector);
    }
    let overlap = a.inner_product(b)?;
    let modulus = overlap.modulus();
    if modulus.is_zero() {
        // orthogonal: the phase is immaterial
        let d2 = &a.norm_sqr() + &b.norm_sqr();
        return Ok(d2.sqrt());
    }
    let phase = overlap.conj().scale(&(&Real::from(1.0) / &modulus));
    Ok(a.sub(&b.scale(&phase))?.norm())
}

/// The phase that best aligns `b` to `a`, i.e. the argmin of
/// [`eigenvector_match`]: conj((a,b))/|(a,b)|.
pub fn alignment_phase(a: &CVector, b: &CVector) -> Result<Complex> {
    let overlap = a.inner_product(b)?;
    let modulus = overlap.modulus();
    if modulus.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(overlap.conj().scale(&(&Real::from(1.0) / &modulus)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::LadderSolver;
    use crate::operators::{build_named_matrix, MatrixKind};
    use crate::rng::Lcg;

    fn prec() -> Precision {
        Precision::binary64()
    }

    #[test]
    fn identity_spectrum() {
        let m = CMatrix::identity(5).unwrap();
        let r = hermitian_eigensolver(&m, &prec()).unwrap();
        for mu in &r.eigenvalues {
            assert_eq!(mu.to_f64(), 1.0);
        }
        assert!(r.gram_defect() <= 1e-12);
    }

    #[test]
    fn diagonal_matrix_sorts_ascending() {
        let d = [3.0, 1.0, 2.0, 0.0, 4.0];
        let m = CMatrix::from_fn(5, |r, c| {
            if r == c {
                Complex::from_f64s(d[r], 0.0)
            } else {
                Complex::zero()
            }
        })
        .unwrap();
        let r = hermitian_eigensolver(&m, &prec()).unwrap();
        let got: Vec<f64> = r.eigenvalues.iter().map(|x| x.to_f64()).collect();
        assert_eq!(got, vec![0.0, 1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn number_operator_spectrum() {
        let p = prec();
        let nop = build_named_matrix(MatrixKind::Number, 5, &p).unwrap();
        let r = hermitian_eigensolver(&nop, &p).unwrap();
        let want = [
            0.0,
            0.2701752257873208,
            2.827711741622372,
            3.3478587629625736,
            3.5542542696277333,
        ];
        for (got, w) in r.eigenvalues.iter().zip(want) {
            assert!((got.to_f64() - w).abs() <= 1e-11, "{got} vs {w}");
        }
        assert!(r.max_pair_residual(&nop) <= 1e-11);
        assert!(r.gram_defect() <= 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::from_fn(3, |r, c| Complex::from_f64s((r + 2 * c) as f64, 0.0)).unwrap();
        match hermitian_eigensolver(&m, &prec()) {
            Err(Error::NotHermitian { asymmetry }) => assert!(asymmetry > 0.5),
            other => panic!("expected NotHermitian, got {other:?}"),
        }
    }

    #[test]
    fn random_hermitian_matrices() {
        let p = prec();
        let mut rng = Lcg::new(2024);
        for n in [2usize, 3, 6, 8] {
            let mut entries = vec![Complex::zero(); n * n];
            for r in 0..n {
                for c in r..n {
                    if r == c {
                        entries[r * n + c] = Complex::from_f64s(rng.next_unit(), 0.0);
                    } else {
                        let z = Complex::from_f64s(rng.next_unit(), rng.next_unit());
                        entries[r * n + c] = z.clone();
                        entries[c * n + r] = z.conj();
                    }
                }
            }
            let m = CMatrix::new(n, entries).unwrap();
            let r = hermitian_eigensolver(&m, &p).unwrap();
            assert!(r.max_pair_residual(&m) <= 1e-11, "n={n}");
            assert!(r.gram_defect() <= 1e-12, "n={n}");
            for w in r.eigenvalues.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn deterministic_runs() {
        let p = prec();
        let nop = build_named_matrix(MatrixKind::Number, 5, &p).unwrap();
        let a = hermitian_eigensolver(&nop, &p).unwrap();
        let b = hermitian_eigensolver(&nop, &p).unwrap();
        for (x, y) in a.eigenvalues.iter().zip(&b.eigenvalues) {
            assert_eq!(x.to_f64().to_bits(), y.to_f64().to_bits());
        }
        for (u, v) in a.eigenvectors.iter().zip(&b.eigenvectors) {
            for j in 0..5 {
                let (xr, xi) = u.at(j).to_pair();
                let (yr, yi) = v.at(j).to_pair();
                assert_eq!((xr.to_bits(), xi.to_bits()), (yr.to_bits(), yi.to_bits()));
            }
        }
    }

    #[test]
    fn match_examples() {
        let e0 = CVector::basis(5, 0).unwrap();
        assert!(eigenvector_match(&e0, &e0).unwrap().to_f64() <= 1e-15);
        assert!(eigenvector_match(&e0, &e0.neg()).unwrap().to_f64() <= 1e-15);
        let theta = 0.77f64;
        let phase = Complex::from_f64s(theta.cos(), theta.sin());
        let rotated = e0.scale(&phase);
        assert!(eigenvector_match(&e0, &rotated).unwrap().to_f64() <= 1e-15);
        let zero = CVector::zeros(5).unwrap();
        assert!(matches!(
            eigenvector_match(&e0, &zero),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn ladder_matches_oracle_eigenvectors() {
        let p = prec();
        let solver = LadderSolver::new(&p);
        let r = hermitian_eigensolver(solver.number_matrix(), &p).unwrap();
        let sorted = solver.eigensystem().spectrum.sorted();
        for (j, mu) in r.eigenvalues.iter().enumerate() {
            assert!((mu.to_f64() - sorted[j].to_f64()).abs() <= 1e-11);
            // find the ladder index with this eigenvalue (all are distinct)
            let n = (0..5)
                .find(|&n| {
                    (solver.eigensystem().spectrum.lambda(n).to_f64() - mu.to_f64()).abs() < 1e-6
                })
                .unwrap();
            let d = eigenvector_match(solver.eigensystem().vector(n), &r.eigenvectors[j])
                .unwrap()
                .to_f64();
            assert!(d <= 1e-10, "n={n}: {d}");
        }
    }

    #[test]
    fn extended_mode_tightens_residuals() {
        let p = Precision::extended(40).unwrap();
        let nop = build_named_matrix(MatrixKind::Number, 5, &p).unwrap();
        let r = hermitian_eigensolver(&nop, &p).unwrap();
        assert!(r.max_pair_residual(&nop) <= 1e-35);
        assert!(r.eigenvalues[0].abs().to_f64() <= 1e-35);
    }
}
