//! The two decompositions of Phi X into a parity annihilator plus a sparse
//! matrix, and the sparse application rules for the lowering and raising
//! operators that they make possible.
//!
//! On a vector of definite parity the annihilator term vanishes, so the
//! action of A or A^T collapses to the diagonal position matrix plus an
//! 8- or 10-entry sparse correction. The dispatch depends only on the DFT
//! eigenvalue exponent k of the vector (Phi f = i^k f):
//!
//! ```text
//! k    A^T f                            A f
//! 0    (X + B_s) f / sqrt2              (X - B_s) f / sqrt2
//! 1    (X - B_a/s2) f / sqrt2           (X + B_a/s2) f / sqrt2
//! 2    (X - B_s) f / sqrt2              (X + B_s) f / sqrt2
//! 3    (X + B_a/s2) f / sqrt2           (X - B_a/s2) f / sqrt2
//! ```

use crate::constants::{unit_roots, FifthRootConstants};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector};
use crate::operators::{self, MatrixKind, Parity};
use crate::scalar::{Complex, Precision, Real};

/// Which of the two decompositions of Phi X is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitVariant {
    /// Annihilator kills reflection-symmetric vectors; the sparse part
    /// enters with a factor i and has 8 nonzero entries.
    Symmetric,
    /// Annihilator kills reflection-antisymmetric vectors; the sparse part
    /// shares the 1/s2 prefactor and has 10 nonzero entries.
    Antisymmetric,
}

/// Coordinate-list sparse matrix. Only nonzero values are stored; order is
/// row-major for determinism.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    dim: usize,
    entries: Vec<(usize, usize, Complex)>,
}

impl SparseMatrix {
    pub fn new(dim: usize, entries: Vec<(usize, usize, Complex)>) -> Result<Self> {
        crate::linalg::check_dim(dim)?;
        let mut seen = std::collections::HashSet::new();
        for (r, c, v) in &entries {
            if *r >= dim || *c >= dim {
                return Err(Error::InvalidSparseEntry {
                    row: *r,
                    col: *c,
                    reason: "index out of range",
                });
            }
            if v.norm_sqr().is_zero() {
                return Err(Error::InvalidSparseEntry {
                    row: *r,
                    col: *c,
                    reason: "stored value is zero",
                });
            }
            if !seen.insert((*r, *c)) {
                return Err(Error::InvalidSparseEntry {
                    row: *r,
                    col: *c,
                    reason: "duplicate position",
                });
            }
        }
        Ok(SparseMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, Complex)] {
        &self.entries
    }

    pub fn to_dense(&self) -> CMatrix {
        let mut dense = vec![Complex::zero(); self.dim * self.dim];
        for (r, c, v) in &self.entries {
            dense[r * self.dim + c] = v.clone();
        }
        CMatrix::new(self.dim, dense).expect("validated entries")
    }

    pub fn apply(&self, v: &CVector) -> Result<CVector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        let mut out = vec![Complex::zero(); self.dim];
        for (r, c, value) in &self.entries {
            out[*r] = &out[*r] + &(value * v.at(*c));
        }
        CVector::new(out)
    }
}

/// One decomposition of Phi X: an annihilator matrix plus a sparse matrix.
#[derive(Clone, Debug)]
pub struct SplitPair {
    pub variant: SplitVariant,
    pub annihilator: CMatrix,
    pub sparse: SparseMatrix,
}

impl SplitPair {
    /// Reassembles Phi X from the pair, for verification.
    pub fn reconstruct(&self, prec: &Precision) -> CMatrix {
        let fr = FifthRootConstants::new(prec);
        let inv_s2 = &prec.real(1.0) / fr.s2();
        match self.variant {
            SplitVariant::Symmetric => {
                let a = self.annihilator.scale_real(&inv_s2);
                let b = self.sparse.to_dense().scale(&Complex::i());
                a.add(&b).expect("5x5")
            }
            SplitVariant::Antisymmetric => self
                .annihilator
                .add(&self.sparse.to_dense())
                .expect("5x5")
                .scale_real(&inv_s2),
        }
    }
}

/// The dense product Phi X at dimension five: traceless, first column zero.
pub fn phi_x_product(prec: &Precision) -> CMatrix {
    let phi = operators::dft_matrix(5, prec).expect("dimension five");
    let x = operators::build_named_matrix(MatrixKind::Position, 5, prec).expect("dimension five");
    phi.multiply(&x).expect("dimension five")
}

/// Builds the closed-form decomposition of the requested variant.
pub fn split(variant: SplitVariant, prec: &Precision) -> SplitPair {
    let fr = FifthRootConstants::new(prec);
    let roots = unit_roots(5, prec);
    let c1 = fr.c1().clone();
    let c2 = fr.c2().clone();
    let one = Real::from(1.0);

    let q = |m: usize| roots[m % 5].clone();
    let cq = |m: usize| q(m).scale(&c1);
    let re = |x: &Real| Complex::new(x.clone(), Real::zero());

    match variant {
        SplitVariant::Symmetric => {
            // row pattern: (0, q^m, c1 q^j, -c1 q^j, -q^m) for rows 0,1,2,2,1
            let rows: [(usize, usize); 3] = [(0, 0), (4, 3), (3, 1)];
            let annihilator = CMatrix::from_fn(5, |r, c| {
                let (m, j) = rows[[0usize, 1, 2, 2, 1][r]];
                match c {
                    1 => q(m),
                    2 => cq(j),
                    3 => -&cq(j),
                    4 => -&q(m),
                    _ => Complex::zero(),
                }
            })
            .expect("dimension five");
            let neg_c2 = -&c2;
            let neg_c1 = -&c1;
            let sparse = SparseMatrix::new(
                5,
                vec![
                    (1, 1, re(&neg_c2)),
                    (1, 2, re(&c1)),
                    (2, 1, re(&one)),
                    (2, 2, re(&-&one)),
                    (3, 3, re(&one)),
                    (3, 4, re(&-&one)),
                    (4, 3, re(&neg_c1)),
                    (4, 4, re(&c2)),
                ],
            )
            .expect("eight entries");
            SplitPair {
                variant,
                annihilator,
                sparse,
            }
        }
        SplitVariant::Antisymmetric => {
            // row pattern: sign * (0, q^m, c1 q^j, c1 q^j, q^m),
            // sign -1 for rows 0..2 and +1 for rows 3..4
            let rows: [(f64, usize, usize); 5] = [
                (-1.0, 0, 0),
                (-1.0, 4, 3),
                (-1.0, 3, 1),
                (1.0, 3, 1),
                (1.0, 4, 3),
            ];
            let annihilator = CMatrix::from_fn(5, |r, c| {
                let (sign, m, j) = rows[r];
                let v = match c {
                    1 => q(m),
                    2 | 3 => cq(j),
                    4 => q(m),
                    _ => return Complex::zero(),
                };
                if sign < 0.0 {
                    -&v
                } else {
                    v
                }
            })
            .expect("dimension five");
            let c1sq = &c1 * &c1;
            let two = Real::from(2.0);
            let sparse = SparseMatrix::new(
                5,
                vec![
                    (0, 1, re(&two)),
                    (0, 2, re(&(&two * &c1))),
                    (1, 1, re(&c1)),
                    (1, 2, re(&-&one)),
                    (2, 1, re(&c2)),
                    (2, 2, re(&c1sq)),
                    (3, 3, re(&-&c1sq)),
                    (3, 4, re(&-&c2)),
                    (4, 3, re(&one)),
                    (4, 4, re(&-&c1)),
                ],
            )
            .expect("ten entries");
            SplitPair {
                variant,
                annihilator,
                sparse,
            }
        }
    }
}

/// DFT eigenvalue exponent k (Phi f = i^k f) with the parity it implies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityClass {
    k: u8,
}

impl ParityClass {
    pub fn new(k: usize) -> Self {
        ParityClass { k: (k % 4) as u8 }
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn parity(&self) -> Parity {
        Parity::of_index(self.k as usize)
    }
}

/// Ladder direction for [`sparse_apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderStep {
    Lowering,
    Raising,
}

/// Tolerance for the eigenvector preconditions of [`sparse_apply`].
pub const SPARSE_APPLY_PRECONDITION_TOL: f64 = 1e-10;

/// Applies A or A^T to a DFT eigenvector through the sparse rule table.
///
/// The rules are only valid on vectors with Phi f = i^k f; both that
/// condition and the implied parity are checked to
/// [`SPARSE_APPLY_PRECONDITION_TOL`] and violations are rejected with the
/// measured residual. Use [`sparse_apply_unchecked`] to skip the checks.
pub fn sparse_apply(
    f: &CVector,
    cls: ParityClass,
    step: LadderStep,
    prec: &Precision,
) -> Result<CVector> {
    if f.dim() != 5 {
        return Err(Error::DimensionMismatch {
            left: 5,
            right: f.dim(),
        });
    }
    let norm = f.norm().to_f64();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }

    let phi = operators::dft_matrix(5, prec).expect("dimension five");
    let tagged = f.scale(&Complex::i_pow(cls.k()));
    let dft_residual = phi
        .apply(f)
        .expect("dimension five")
        .sub(&tagged)
        .expect("dimension five")
        .norm()
        .to_f64()
        / norm;
    if dft_residual > SPARSE_APPLY_PRECONDITION_TOL {
        return Err(Error::PreconditionViolated {
            expected: "DFT eigenvector",
            residual: dft_residual,
            tolerance: SPARSE_APPLY_PRECONDITION_TOL,
        });
    }
    let parity_residual = operators::parity_defect(f, cls.parity());
    if parity_residual > SPARSE_APPLY_PRECONDITION_TOL {
        return Err(Error::PreconditionViolated {
            expected: "parity class",
            residual: parity_residual,
            tolerance: SPARSE_APPLY_PRECONDITION_TOL,
        });
    }

    Ok(sparse_apply_unchecked(f, cls, step, prec))
}

/// [`sparse_apply`] without the eigenvector precondition checks. The result
/// is meaningless on vectors outside the stated eigenspace.
pub fn sparse_apply_unchecked(
    f: &CVector,
    cls: ParityClass,
    step: LadderStep,
    prec: &Precision,
) -> CVector {
    let fr = FifthRootConstants::new(prec);

    // sign of the sparse term for raising, indexed by k
    let raise_sign = [1.0, -1.0, -1.0, 1.0][cls.k()];
    let sign = match step {
        LadderStep::Raising => raise_sign,
        LadderStep::Lowering => -raise_sign,
    };

    let (pair, scale) = match cls.parity() {
        Parity::Symmetric => (split(SplitVariant::Symmetric, prec), prec.real(1.0)),
        Parity::Antisymmetric => (
            split(SplitVariant::Antisymmetric, prec),
            &prec.real(1.0) / fr.s2(),
        ),
    };

    let xf = CVector::from_fn(5, |j| f.at(j).scale(&fr.s[j])).expect("dimension five");
    let bf = pair.sparse.apply(f).expect("dimension five").scale_real(&scale);
    let combined = if sign > 0.0 {
        xf.add(&bf).expect("dimension five")
    } else {
        xf.sub(&bf).expect("dimension five")
    };
    combined.scale_real(&(&prec.real(1.0) / &prec.real(2.0).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Lcg;

    fn prec() -> Precision {
        Precision::binary64()
    }

    fn real_vec(xs: [f64; 5]) -> CVector {
        CVector::new(xs.iter().map(|&x| Complex::from_f64s(x, 0.0)).collect()).unwrap()
    }

    /// Closed-form unit eigenvectors, assembled here independently of the
    /// ladder module.
    fn eigenvectors() -> [CVector; 5] {
        let p = prec();
        let fr = FifthRootConstants::new(&p);
        let (s1, s2) = (fr.s1().to_f64(), fr.s2().to_f64());
        let (c1, c2) = (fr.c1().to_f64(), fr.c2().to_f64());
        let (xi0, xi1) = (fr.xi0.to_f64(), fr.xi1.to_f64());
        let lam2 = s1 * (s1 - c2) / 2.0;
        let lam4 = (7.0 - c1 * (1.0 + s2)) / 2.0;
        let n0 = (xi0 * xi0 + 2.0 * xi1 * xi1 + 2.0).sqrt();
        let f0 = real_vec([xi0 / n0, xi1 / n0, 1.0 / n0, 1.0 / n0, xi1 / n0]);
        let n1 = 2.0 * (s2 * xi1).sqrt();
        let f1 = real_vec([0.0, xi1 / n1, c1 / n1, -c1 / n1, -xi1 / n1]);
        let f2 = real_vec([
            -c1 / s2,
            0.5 / s2,
            0.5 / s2,
            0.5 / s2,
            0.5 / s2,
        ]);
        let n3 = 2.0 * (s2 * (s2 - 1.0)).sqrt();
        let f3 = real_vec([0.0, (1.0 - s2) / n3, c1 / n3, -c1 / n3, (s2 - 1.0) / n3]);
        let n4 = 4.0 * (lam2 * lam4).sqrt();
        let a = c2 - 2.0 * s1;
        let b = 2.0 * s1 - c2 + 2.0 * c1;
        let f4 = real_vec([2.0 / n4, a / n4, b / n4, b / n4, a / n4]);
        [f0, f1, f2, f3, f4]
    }

    #[test]
    fn phi_x_shape() {
        let p = prec();
        let m = phi_x_product(&p);
        let fr = FifthRootConstants::new(&p);
        let (re, im) = m.at(0, 1).to_pair();
        assert!((re - 1.0 / fr.s2().to_f64()).abs() < 1e-15);
        assert!(im.abs() < 1e-16);
        for k in 0..5 {
            assert_eq!(m.at(k, 0).modulus().to_f64(), 0.0);
        }
        assert!(m.trace().modulus().to_f64() <= 1e-13);
    }

    #[test]
    fn sparse_entry_values_and_counts() {
        let p = prec();
        let sym = split(SplitVariant::Symmetric, &p);
        assert_eq!(sym.sparse.nnz(), 8);
        let dense = sym.sparse.to_dense();
        assert!((dense.at(1, 1).re.to_f64() - 1.618033988749895).abs() < 5e-15);
        let anti = split(SplitVariant::Antisymmetric, &p);
        assert_eq!(anti.sparse.nnz(), 10);
        assert_eq!(anti.sparse.to_dense().at(0, 1).re.to_f64(), 2.0);
    }

    #[test]
    fn reconstruction_entrywise() {
        let p = prec();
        let target = phi_x_product(&p);
        for variant in [SplitVariant::Symmetric, SplitVariant::Antisymmetric] {
            let pair = split(variant, &p);
            let rebuilt = pair.reconstruct(&p);
            let defect = rebuilt.sub(&target).unwrap().max_abs();
            assert!(defect <= 1e-14, "{variant:?}: {defect}");
        }
    }

    #[test]
    fn annihilators_kill_matching_parity() {
        let p = prec();
        let sym = split(SplitVariant::Symmetric, &p);
        let anti = split(SplitVariant::Antisymmetric, &p);
        let mut rng = Lcg::new(42);
        for _ in 0..100 {
            let (a, b, c) = (rng.next_unit(), rng.next_unit(), rng.next_unit());
            let fs = real_vec([a, b, c, c, b]);
            let r = sym.annihilator.apply(&fs).unwrap().norm().to_f64();
            assert!(r <= 1e-13 * fs.norm().to_f64().max(1e-300), "residual {r}");

            let fa = real_vec([0.0, b, c, -c, -b]);
            let r = anti.annihilator.apply(&fa).unwrap().norm().to_f64();
            assert!(r <= 1e-13 * fa.norm().to_f64().max(1e-300), "residual {r}");
        }
    }

    #[test]
    fn rule_table_matches_dense_operators() {
        let p = prec();
        let lower = operators::build_named_matrix(MatrixKind::Lowering, 5, &p).unwrap();
        let raise = operators::build_named_matrix(MatrixKind::Raising, 5, &p).unwrap();
        for (k, f) in eigenvectors().iter().enumerate() {
            let cls = ParityClass::new(k);
            for (step, dense) in [(LadderStep::Lowering, &lower), (LadderStep::Raising, &raise)] {
                let via_rule = sparse_apply(f, cls, step, &p).unwrap();
                let via_dense = dense.apply(f).unwrap();
                let diff = via_rule.sub(&via_dense).unwrap().norm().to_f64();
                let scale = via_dense.norm().to_f64().max(1.0);
                assert!(diff / scale <= 1e-12, "k={k} {step:?}: {diff}");
            }
        }
    }

    #[test]
    fn raising_ground_state_direction() {
        let p = prec();
        let fr = FifthRootConstants::new(&p);
        let [f0, ..] = eigenvectors();
        let raised = sparse_apply(&f0, ParityClass::new(0), LadderStep::Raising, &p).unwrap();
        // proportional to (0, xi1, c1, -c1, -xi1)
        let direction = real_vec([
            0.0,
            fr.xi1.to_f64(),
            fr.c1().to_f64(),
            -fr.c1().to_f64(),
            -fr.xi1.to_f64(),
        ])
        .normalize()
        .unwrap();
        let unit = raised.normalize().unwrap();
        assert!(unit.sub(&direction).unwrap().norm().to_f64() < 1e-13);
    }

    #[test]
    fn lowering_f2_reaches_f1() {
        let p = prec();
        let fr = FifthRootConstants::new(&p);
        let [_, f1, f2, ..] = eigenvectors();
        let lowered = sparse_apply(&f2, ParityClass::new(2), LadderStep::Lowering, &p).unwrap();
        let s1 = fr.s1().to_f64();
        let c2 = fr.c2().to_f64();
        let factor = (s1 * (s1 - c2) / 2.0).sqrt();
        let expected = f1.scale_real(&Real::from(factor));
        assert!(lowered.sub(&expected).unwrap().norm().to_f64() < 1e-13);
    }

    #[test]
    fn preconditions_are_enforced() {
        let p = prec();
        // symmetric parity but not a DFT eigenvector
        let not_eigen = real_vec([1.0, 0.0, 0.0, 0.0, 0.0]);
        let err = sparse_apply(&not_eigen, ParityClass::new(0), LadderStep::Raising, &p);
        assert!(matches!(
            err,
            Err(Error::PreconditionViolated {
                expected: "DFT eigenvector",
                ..
            })
        ));
        // wrong parity claim
        let [f0, ..] = eigenvectors();
        let err = sparse_apply(&f0, ParityClass::new(1), LadderStep::Raising, &p);
        assert!(matches!(err, Err(Error::PreconditionViolated { .. })));
        // unchecked variant always answers
        let out = sparse_apply_unchecked(&not_eigen, ParityClass::new(0), LadderStep::Raising, &p);
        assert_eq!(out.dim(), 5);
    }
}
