//! Ladder construction of the number-operator eigensystem.
//!
//! The ground state solves A f0 = 0 in closed form; each further
//! eigenvector is one sparse raising step up. Alongside the ladder live the
//! closed-form spectrum, the partner-operator mixing data, the power
//! formula, the recurrence identities, and the Newtonian polynomial basis
//! that reproduces every eigenvector from f0.

use crate::constants::FifthRootConstants;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector};
use crate::operators::{build_named_matrix, dft_matrix, MatrixKind, Parity};
use crate::scalar::{Complex, Precision, Real};
use crate::split::{split, sparse_apply, LadderStep, ParityClass, SplitVariant};

/// One eigenpair of the number operator, tagged with its DFT eigenvalue
/// exponent (Phi f = i^k f, k = n) and reflection parity.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub n: usize,
    pub lambda: Real,
    pub vector: CVector,
    pub dft_exponent: usize,
    pub parity: Parity,
}

/// The five closed-form eigenvalues, indexed by the DFT exponent n —
/// deliberately not sorted by magnitude (they are not monotone in n).
#[derive(Clone, Debug)]
pub struct Spectrum5 {
    values: [Real; 5],
}

impl Spectrum5 {
    pub fn lambda(&self, n: usize) -> &Real {
        &self.values[n]
    }

    pub fn values(&self) -> &[Real; 5] {
        &self.values
    }

    pub fn sum(&self) -> Real {
        let mut acc = Real::zero();
        for v in &self.values {
            acc = &acc + v;
        }
        acc
    }

    /// Values in ascending order, for comparison with a sorted eigensolver.
    pub fn sorted(&self) -> [Real; 5] {
        let mut v = self.values.clone();
        v.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
        v
    }
}

/// The complete eigensystem: five orthonormal pairs plus the spectrum.
#[derive(Clone, Debug)]
pub struct EigenSystem5 {
    pub pairs: [EigenPair; 5],
    pub spectrum: Spectrum5,
}

impl EigenSystem5 {
    pub fn vector(&self, n: usize) -> &CVector {
        &self.pairs[n].vector
    }

    /// Frobenius distance of the Gram matrix from the identity.
    pub fn gram_defect(&self) -> f64 {
        let mut acc = Real::zero();
        for k in 0..5 {
            for l in 0..5 {
                let g = self.pairs[k]
                    .vector
                    .inner_product(&self.pairs[l].vector)
                    .expect("dimension five");
                let want = if k == l { Real::from(1.0) } else { Real::zero() };
                let defect = Complex::new(&g.re - &want, g.im);
                acc = &acc + &defect.norm_sqr();
            }
        }
        acc.sqrt().to_f64()
    }
}

/// Mixing data relating the eigenvectors of A A^T to those of A^T A: the
/// rotation angle phi in the degenerate (f0, f4) plane and the parameter
/// eta = cos(phi).
#[derive(Clone, Debug)]
pub struct MixingData {
    pub eta: Real,
    pub phi: Real,
    pub g: [CVector; 5],
}

/// Newtonian basis: interpolation-node matrices, the polynomial matrices
/// P_n(X), and the normalization constants d_n with
/// f_n = d_n^{-1} P_n(X) f0.
#[derive(Clone, Debug)]
pub struct NewtonLadder {
    pub nodes: [CMatrix; 4],
    pub polynomials: [CMatrix; 5],
    pub d: [Real; 5],
}

/// Residual norms of the recurrence identities among the eigenvectors.
#[derive(Clone, Debug)]
pub struct RecurrenceResiduals {
    /// sqrt(2 l4) f4 + sqrt(2 l3) f2 - 2 X f3
    pub three_term_n3: Real,
    /// sqrt(2 l3) f3 + sqrt(2 l2) f1 - 2 X f2
    pub three_term_n2: Real,
    /// sqrt(2 l2) f2 + sqrt(2 l1) eta (f0 + (sqrt5 c2/4) f4) - 2 X f1
    pub four_term: Real,
    /// A f1 - sqrt(l1) eta (f0 + (sqrt5 c2/4) f4)
    pub lowering_f1_mixture: Real,
}

impl RecurrenceResiduals {
    pub fn named(&self) -> [(&'static str, &Real); 4] {
        [
            ("three_term_n3", &self.three_term_n3),
            ("three_term_n2", &self.three_term_n2),
            ("four_term", &self.four_term),
            ("lowering_f1_mixture", &self.lowering_f1_mixture),
        ]
    }
}

/// Eigensolver for the five-point number operator. The eigensystem is
/// computed eagerly at construction and shared immutably afterwards.
#[derive(Clone, Debug)]
pub struct LadderSolver {
    prec: Precision,
    constants: FifthRootConstants,
    dft: CMatrix,
    position: CMatrix,
    lowering: CMatrix,
    raising: CMatrix,
    number: CMatrix,
    partner: CMatrix,
    system: EigenSystem5,
}

impl LadderSolver {
    pub fn new(prec: &Precision) -> Self {
        let constants = FifthRootConstants::new(prec);
        let dft = dft_matrix(5, prec).expect("dimension five");
        let position = build_named_matrix(MatrixKind::Position, 5, prec).expect("dimension five");
        let lowering = build_named_matrix(MatrixKind::Lowering, 5, prec).expect("dimension five");
        let raising = lowering.transpose();
        let number = raising.multiply(&lowering).expect("dimension five");
        let partner = lowering.multiply(&raising).expect("dimension five");

        let spectrum = closed_form_spectrum(&constants, prec);
        let ground = ground_state_pair(&constants, &spectrum, prec);
        let mut pairs = vec![ground];
        for n in 0..4 {
            let w = sparse_apply(
                &pairs[n].vector,
                ParityClass::new(n),
                LadderStep::Raising,
                prec,
            )
            .expect("ladder eigenvectors satisfy the sparse preconditions");
            let vector = w.normalize().expect("raising never annihilates below the top");
            pairs.push(EigenPair {
                n: n + 1,
                lambda: spectrum.lambda(n + 1).clone(),
                vector,
                dft_exponent: n + 1,
                parity: Parity::of_index(n + 1),
            });
        }
        let system = EigenSystem5 {
            pairs: pairs.try_into().expect("five pairs"),
            spectrum,
        };

        LadderSolver {
            prec: prec.clone(),
            constants,
            dft,
            position,
            lowering,
            raising,
            number,
            partner,
            system,
        }
    }

    pub fn precision(&self) -> &Precision {
        &self.prec
    }

    pub fn constants(&self) -> &FifthRootConstants {
        &self.constants
    }

    pub fn dft(&self) -> &CMatrix {
        &self.dft
    }

    pub fn position(&self) -> &CMatrix {
        &self.position
    }

    pub fn lowering_matrix(&self) -> &CMatrix {
        &self.lowering
    }

    pub fn raising_matrix(&self) -> &CMatrix {
        &self.raising
    }

    pub fn number_matrix(&self) -> &CMatrix {
        &self.number
    }

    pub fn partner_matrix(&self) -> &CMatrix {
        &self.partner
    }

    /// The lowest eigenpair: lambda = 0 and A f0 = 0.
    pub fn ground_state(&self) -> EigenPair {
        self.system.pairs[0].clone()
    }

    pub fn closed_form_spectrum(&self) -> Spectrum5 {
        self.system.spectrum.clone()
    }

    pub fn eigensystem(&self) -> &EigenSystem5 {
        &self.system
    }

    /// One sparse raising step. Returns the next eigenpair and the norm of
    /// the raw image: sqrt(lambda_{n+1}) for n >= 1, eta sqrt(lambda_1) for
    /// the ground state.
    pub fn raise(&self, pair: &EigenPair) -> Result<(EigenPair, Real)> {
        if pair.n >= 4 {
            return Err(Error::LadderTop);
        }
        let w = sparse_apply(
            &pair.vector,
            ParityClass::new(pair.n),
            LadderStep::Raising,
            &self.prec,
        )?;
        let norm_factor = w.norm();
        let vector = w.normalize()?;
        let n = pair.n + 1;
        Ok((
            EigenPair {
                n,
                lambda: self.system.spectrum.lambda(n).clone(),
                vector,
                dft_exponent: n,
                parity: Parity::of_index(n),
            },
            norm_factor,
        ))
    }

    /// f_n through repeated dense raising:
    /// (eta prod_{k<=n} sqrt(lambda_k))^{-1} (A^T)^n f0.
    pub fn power_formula(&self, n: usize) -> Result<CVector> {
        if !(1..=4).contains(&n) {
            return Err(Error::IndexOutOfRange { index: n, dim: 5 });
        }
        let mut v = self.system.pairs[0].vector.clone();
        let mut prefactor = self.eta();
        for k in 1..=n {
            v = self.raising.apply(&v)?;
            prefactor = &prefactor * &self.system.spectrum.lambda(k).sqrt();
        }
        Ok(v.scale_real(&(&self.prec.real(1.0) / &prefactor)))
    }

    /// eta = 4/sqrt(21 - 5 c2).
    pub fn eta(&self) -> Real {
        let p = &self.prec;
        let c2 = self.constants.c2();
        let inside = &p.real(21.0) - &(&p.real(5.0) * c2);
        &p.real(4.0) / &inside.sqrt()
    }

    /// Partner-operator eigendata: angle, eta, and the g_n eigenvectors of
    /// A A^T sharing the spectrum of A^T A.
    pub fn mixing(&self) -> MixingData {
        let p = &self.prec;
        let s1 = self.constants.s1();
        let phi = (&(s1 * s1) / &p.real(4.0)).atan();
        let eta = self.eta();
        let (sin_phi, cos_phi) = (phi.sin(), phi.cos());
        let f0 = &self.system.pairs[0].vector;
        let f4 = &self.system.pairs[4].vector;
        let g0 = f0
            .scale_real(&sin_phi)
            .add(&f4.scale_real(&cos_phi))
            .expect("dimension five");
        let g1 = f0
            .scale_real(&cos_phi)
            .sub(&f4.scale_real(&sin_phi))
            .expect("dimension five");
        MixingData {
            eta,
            phi,
            g: [
                g0,
                g1,
                self.system.pairs[1].vector.clone(),
                self.system.pairs[2].vector.clone(),
                self.system.pairs[3].vector.clone(),
            ],
        }
    }

    /// Residuals of the three- and four-term recurrences and of the
    /// lowering identity on f1.
    pub fn recurrence_residuals(&self) -> RecurrenceResiduals {
        let p = &self.prec;
        let f = |n: usize| &self.system.pairs[n].vector;
        let lam = |n: usize| self.system.spectrum.lambda(n);
        let two = p.real(2.0);
        let sq2l = |n: usize| (&two * lam(n)).sqrt();

        let two_x = |v: &CVector| {
            self.position
                .apply(v)
                .expect("dimension five")
                .scale_real(&two)
        };

        let r3 = f(4)
            .scale_real(&sq2l(4))
            .add(&f(2).scale_real(&sq2l(3)))
            .and_then(|s| s.sub(&two_x(f(3))))
            .expect("dimension five")
            .norm();
        let r2 = f(3)
            .scale_real(&sq2l(3))
            .add(&f(1).scale_real(&sq2l(2)))
            .and_then(|s| s.sub(&two_x(f(2))))
            .expect("dimension five")
            .norm();

        // the (f0, f4) mixture eta (f0 + (sqrt5 c2 / 4) f4)
        let eta = self.eta();
        let coeff = &(&p.real(5.0).sqrt() * self.constants.c2()) / &p.real(4.0);
        let mixture = f(0)
            .add(&f(4).scale_real(&coeff))
            .expect("dimension five")
            .scale_real(&eta);

        let r1 = f(2)
            .scale_real(&sq2l(2))
            .add(&mixture.scale_real(&sq2l(1)))
            .and_then(|s| s.sub(&two_x(f(1))))
            .expect("dimension five")
            .norm();

        let lowered = self.lowering.apply(f(1)).expect("dimension five");
        let re = lowered
            .sub(&mixture.scale_real(&lam(1).sqrt()))
            .expect("dimension five")
            .norm();

        RecurrenceResiduals {
            three_term_n3: r3,
            three_term_n2: r2,
            four_term: r1,
            lowering_f1_mixture: re,
        }
    }

    /// The Newtonian polynomial ladder: nodes, P_n(X), and d_n.
    pub fn newton_ladder(&self) -> NewtonLadder {
        let p = &self.prec;
        let bs = split(SplitVariant::Symmetric, p).sparse.to_dense();
        let ba = split(SplitVariant::Antisymmetric, p).sparse.to_dense();
        let ba_scaled = ba.scale_real(&(&p.real(1.0) / self.constants.s2()));
        let nodes = [bs.neg(), ba_scaled.clone(), bs, ba_scaled.neg()];

        let mut polynomials = vec![CMatrix::identity(5).expect("dimension five")];
        for n in 1..5 {
            let factor = self.position.sub(&nodes[n - 1]).expect("dimension five");
            polynomials.push(factor.multiply(&polynomials[n - 1]).expect("dimension five"));
        }

        let eta = self.eta();
        let two = p.real(2.0);
        let mut d = vec![p.real(1.0)];
        let mut acc = eta;
        for n in 1..5 {
            acc = &acc * &(&two * self.system.spectrum.lambda(n)).sqrt();
            d.push(acc.clone());
        }

        NewtonLadder {
            nodes,
            polynomials: polynomials.try_into().expect("five polynomials"),
            d: d.try_into().expect("five constants"),
        }
    }
}

fn closed_form_spectrum(fr: &FifthRootConstants, prec: &Precision) -> Spectrum5 {
    let p = prec;
    let (s1, s2) = (fr.s1(), fr.s2());
    let (c1, c2) = (fr.c1(), fr.c2());
    let (one, two, seven) = (p.real(1.0), p.real(2.0), p.real(7.0));
    let lam1 = &(&(c1 * &(s2 - &one)) + &seven) / &two;
    let lam2 = &(s1 * &(s1 - c2)) / &two;
    let lam3 = &(s1 * &(s1 + c2)) / &two;
    let lam4 = &(&seven - &(c1 * &(&one + s2))) / &two;
    Spectrum5 {
        values: [p.real(0.0), lam1, lam2, lam3, lam4],
    }
}

fn ground_state_pair(
    fr: &FifthRootConstants,
    spectrum: &Spectrum5,
    prec: &Precision,
) -> EigenPair {
    let one = Complex::new(prec.real(1.0), Real::zero());
    let xi0 = Complex::new(fr.xi0.clone(), Real::zero());
    let xi1 = Complex::new(fr.xi1.clone(), Real::zero());
    let raw = CVector::new(vec![xi0, xi1.clone(), one.clone(), one, xi1]).expect("five entries");
    EigenPair {
        n: 0,
        lambda: spectrum.lambda(0).clone(),
        vector: raw.normalize().expect("nonzero closed form"),
        dft_exponent: 0,
        parity: Parity::Symmetric,
    }
}
