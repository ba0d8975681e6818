//! Machine-checkable catalog of every identity the library implements.
//!
//! Each claim evaluates to a residual; statuses follow three rules. A
//! residual at or below the claim's threshold is a PASS. Claims of kind
//! [`ClaimKind::KnownMisprint`] carry a published closed form whose stated
//! coefficients do not hold numerically; when the corrected form (documented
//! in the note) passes instead, the claim reports PASS_WITH_CORRECTION.
//! Anything else is a FAIL.
//!
//! The registry is fixed and ordered; reports list claims in registry order
//! and are byte-deterministic for a given (precision, trials, seed,
//! tolerance floor) tuple.

use crate::constants::FifthRootConstants;
use crate::error::Result;
use crate::ladder::{LadderSolver, MixingData, NewtonLadder, RecurrenceResiduals};
use crate::linalg::{anticommutator, commutator, CMatrix, CVector};
use crate::operators::{build_named_matrix, dft_matrix, fourier_basis_vector, MatrixKind};
use crate::oracle::{eigenvector_match, hermitian_eigensolver, OracleEigenResult};
use crate::rng::Lcg;
use crate::scalar::{Complex, Precision, Real};
use crate::split::{split, sparse_apply_unchecked, LadderStep, ParityClass, SplitPair, SplitVariant};

/// Registry schema version; bump when claims are added, removed or change
/// meaning.
pub const REGISTRY_VERSION: u32 = 1;

/// Claim ids expected to report PASS_WITH_CORRECTION: the four published
/// closed forms whose printed coefficients fail numerically.
pub const EXPECTED_CORRECTIONS: [&str; 4] = [
    "eta_printed_form",
    "uniform_prefactor_norms",
    "f4_prefactor_norm",
    "lowering_top_prefactor",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    PassWithCorrection,
}

impl ClaimStatus {
    pub fn label(&self) -> &'static str {
        match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::PassWithCorrection => "PASS_WITH_CORRECTION",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    /// An algebraic identity; its residual is a pure rounding artifact and
    /// must shrink when the working precision grows.
    Identity,
    /// Integer-valued structure (counts); residual is exactly zero or large.
    Structural,
    /// Comparison against a low-precision printed decimal; the residual is
    /// dominated by the printed rounding and does not shrink with working
    /// precision.
    PrintedValue,
    /// A published closed form with a coefficient misprint; the corrected
    /// form documented in the note is expected to pass instead.
    KnownMisprint,
}

impl ClaimKind {
    pub fn label(&self) -> &'static str {
        match self {
            ClaimKind::Identity => "identity",
            ClaimKind::Structural => "structural",
            ClaimKind::PrintedValue => "printed-value",
            ClaimKind::KnownMisprint => "known-misprint",
        }
    }
}

/// Static description of one claim.
#[derive(Clone, Copy, Debug)]
pub struct ClaimDef {
    pub id: &'static str,
    pub statement: &'static str,
    pub kind: ClaimKind,
    pub threshold: f64,
}

/// One evaluated claim.
#[derive(Clone, Debug, PartialEq)]
pub struct ClaimEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub kind: ClaimKind,
    pub status: ClaimStatus,
    /// For KnownMisprint claims that were corrected this is the corrected
    /// form's residual; the printed form's residual is in the note.
    pub residual: f64,
    pub threshold: f64,
    pub note: Option<String>,
}

/// Full evaluation of the registry.
#[derive(Clone, Debug, PartialEq)]
pub struct ClaimsReport {
    pub registry_version: u32,
    pub precision_label: String,
    pub trials: usize,
    pub seed: u64,
    pub tolerance_floor: f64,
    pub entries: Vec<ClaimEntry>,
}

impl ClaimsReport {
    pub fn count(&self, status: ClaimStatus) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn entry(&self, id: &str) -> Option<&ClaimEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Exit contract: no FAIL anywhere, and every registered misprint claim
    /// settled as PASS_WITH_CORRECTION.
    pub fn verification_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != ClaimStatus::Fail)
            && EXPECTED_CORRECTIONS.iter().all(|id| {
                self.entry(id)
                    .map(|e| e.status == ClaimStatus::PassWithCorrection)
                    .unwrap_or(false)
            })
    }
}

enum Outcome {
    Simple(f64),
    WithCorrection {
        printed: f64,
        corrected: f64,
        note: String,
    },
}

/// Everything the evaluators share, computed once per run.
struct Ctx {
    prec: Precision,
    trials: usize,
    seed: u64,
    fr: FifthRootConstants,
    phi: CMatrix,
    reflection: CMatrix,
    position: CMatrix,
    derivative: CMatrix,
    momentum: CMatrix,
    lowering: CMatrix,
    raising: CMatrix,
    number: CMatrix,
    partner: CMatrix,
    phi_x: CMatrix,
    split_s: SplitPair,
    split_a: SplitPair,
    solver: LadderSolver,
    mixing: MixingData,
    newton: NewtonLadder,
    recurrences: RecurrenceResiduals,
    oracle_number: OracleEigenResult,
    oracle_partner: OracleEigenResult,
}

impl Ctx {
    fn build(prec: &Precision, trials: usize, seed: u64) -> Result<Self> {
        let fr = FifthRootConstants::new(prec);
        let phi = dft_matrix(5, prec)?;
        let reflection = build_named_matrix(MatrixKind::Reflection, 5, prec)?;
        let position = build_named_matrix(MatrixKind::Position, 5, prec)?;
        let derivative = build_named_matrix(MatrixKind::Derivative, 5, prec)?;
        let momentum = build_named_matrix(MatrixKind::Momentum, 5, prec)?;
        let lowering = build_named_matrix(MatrixKind::Lowering, 5, prec)?;
        let raising = lowering.transpose();
        let number = raising.multiply(&lowering)?;
        let partner = lowering.multiply(&raising)?;
        let phi_x = phi.multiply(&position)?;
        let solver = LadderSolver::new(prec);
        let mixing = solver.mixing();
        let newton = solver.newton_ladder();
        let recurrences = solver.recurrence_residuals();
        let oracle_number = hermitian_eigensolver(&number, prec)?;
        let oracle_partner = hermitian_eigensolver(&partner, prec)?;
        Ok(Ctx {
            prec: prec.clone(),
            trials,
            seed,
            fr,
            phi,
            reflection,
            position,
            derivative,
            momentum,
            lowering,
            raising,
            number,
            partner,
            phi_x,
            split_s: split(SplitVariant::Symmetric, prec),
            split_a: split(SplitVariant::Antisymmetric, prec),
            solver,
            mixing,
            newton,
            recurrences,
            oracle_number,
            oracle_partner,
        })
    }

    fn f(&self, n: usize) -> &CVector {
        self.solver.eigensystem().vector(n)
    }

    fn lambda(&self, n: usize) -> &Real {
        self.solver.eigensystem().spectrum.lambda(n)
    }

    fn fro(&self, m: Result<CMatrix>) -> f64 {
        m.expect("conformable dimensions").frobenius_norm().to_f64()
    }
}

// ---------------------------------------------------------------------------
// evaluators
// ---------------------------------------------------------------------------

fn identity5() -> CMatrix {
    CMatrix::identity(5).expect("dimension five")
}

fn c_root_identities(ctx: &Ctx) -> Outcome {
    let r = ctx.fr.identity_residuals(&ctx.prec);
    Outcome::Simple(r[..5].iter().cloned().fold(0.0, f64::max))
}

fn c_xi_identity(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.fr.identity_residuals(&ctx.prec)[5])
}

fn c_dft_unitary(ctx: &Ctx) -> Outcome {
    let u = ctx.phi.multiply(&ctx.phi.conjugate_transpose());
    Outcome::Simple(ctx.fro(u.and_then(|u| u.sub(&identity5()))))
}

fn c_dft_symmetric(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.fro(ctx.phi.sub(&ctx.phi.transpose())))
}

fn c_dft_fourth_power(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.fro(ctx.phi.pow(4).and_then(|p| p.sub(&identity5()))))
}

fn c_reflection_commutes(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.fro(commutator(&ctx.phi, &ctx.reflection)))
}

fn c_intertwining_lowering(ctx: &Ctx) -> Outcome {
    let lhs = ctx.lowering.multiply(&ctx.phi).expect("dimension five");
    let rhs = ctx
        .phi
        .multiply(&ctx.lowering)
        .expect("dimension five")
        .scale(&Complex::i());
    Outcome::Simple(ctx.fro(lhs.sub(&rhs)))
}

fn c_intertwining_raising(ctx: &Ctx) -> Outcome {
    let lhs = ctx.raising.multiply(&ctx.phi).expect("dimension five");
    let rhs = ctx
        .phi
        .multiply(&ctx.raising)
        .expect("dimension five")
        .scale(&Complex::i());
    Outcome::Simple(ctx.fro(lhs.add(&rhs)))
}

fn c_number_commutes(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.fro(commutator(&ctx.number, &ctx.phi)))
}

fn c_position_anticommute(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.fro(anticommutator(&ctx.reflection, &ctx.position)))
}

fn c_derivative_anticommute(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.fro(anticommutator(&ctx.reflection, &ctx.derivative)))
}

fn c_unitary_equivalence(ctx: &Ctx) -> Outcome {
    let conj = ctx
        .phi
        .multiply(&ctx.position)
        .and_then(|m| m.multiply(&ctx.phi.conjugate_transpose()));
    Outcome::Simple(ctx.fro(conj.and_then(|m| ctx.momentum.sub(&m))))
}

fn c_position_two_diagonal(ctx: &Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for n in 0..5usize {
        let eps = fourier_basis_vector(5, n, &ctx.prec).expect("index in range");
        let prev = fourier_basis_vector(5, (n + 4) % 5, &ctx.prec).expect("index in range");
        let next = fourier_basis_vector(5, (n + 1) % 5, &ctx.prec).expect("index in range");
        let lhs = ctx.position.apply(&eps).expect("dimension five");
        let rhs = prev.sub(&next).expect("dimension five").scale(&Complex::i());
        worst = worst.max(lhs.sub(&rhs).expect("dimension five").norm().to_f64());
    }
    Outcome::Simple(worst)
}

fn c_momentum_two_diagonal(ctx: &Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for n in 0..5usize {
        let e = CVector::basis(5, n).expect("index in range");
        let next = CVector::basis(5, (n + 1) % 5, ).expect("index in range");
        let prev = CVector::basis(5, (n + 4) % 5).expect("index in range");
        let lhs = ctx.momentum.apply(&e).expect("dimension five");
        let rhs = next.sub(&prev).expect("dimension five").scale(&Complex::i());
        worst = worst.max(lhs.sub(&rhs).expect("dimension five").norm().to_f64());
    }
    Outcome::Simple(worst)
}

fn c_phi_x_traceless(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.phi_x.trace().modulus().to_f64())
}

fn c_phi_x_first_column(ctx: &Ctx) -> Outcome {
    let worst = (0..5)
        .map(|k| ctx.phi_x.at(k, 0).modulus().to_f64())
        .fold(0.0, f64::max);
    Outcome::Simple(worst)
}

fn c_split_sym_reconstruction(ctx: &Ctx) -> Outcome {
    let rebuilt = ctx.split_s.reconstruct(&ctx.prec);
    Outcome::Simple(rebuilt.sub(&ctx.phi_x).expect("dimension five").max_abs())
}

fn c_split_anti_reconstruction(ctx: &Ctx) -> Outcome {
    let rebuilt = ctx.split_a.reconstruct(&ctx.prec);
    Outcome::Simple(rebuilt.sub(&ctx.phi_x).expect("dimension five").max_abs())
}

fn annihilation_residual(ctx: &Ctx, variant: SplitVariant) -> f64 {
    let (pair, seed_offset) = match variant {
        SplitVariant::Symmetric => (&ctx.split_s, 0u64),
        SplitVariant::Antisymmetric => (&ctx.split_a, 1u64),
    };
    let mut rng = Lcg::new(ctx.seed.wrapping_add(seed_offset));
    let mut worst = 0.0f64;
    for _ in 0..ctx.trials {
        let entries: Vec<Complex> = match variant {
            SplitVariant::Symmetric => {
                let (a, b, c) = (rng.next_unit(), rng.next_unit(), rng.next_unit());
                [a, b, c, c, b]
                    .iter()
                    .map(|&x| Complex::new(ctx.prec.real(x), Real::zero()))
                    .collect()
            }
            SplitVariant::Antisymmetric => {
                let (b, c) = (rng.next_unit(), rng.next_unit());
                [0.0, b, c, -c, -b]
                    .iter()
                    .map(|&x| Complex::new(ctx.prec.real(x), Real::zero()))
                    .collect()
            }
        };
        let f = CVector::new(entries).expect("five entries");
        let norm = f.norm().to_f64();
        if norm == 0.0 {
            continue;
        }
        let image = pair.annihilator.apply(&f).expect("dimension five");
        worst = worst.max(image.norm().to_f64() / norm);
    }
    worst
}

fn c_annihilator_symmetric(ctx: &Ctx) -> Outcome {
    Outcome::Simple(annihilation_residual(ctx, SplitVariant::Symmetric))
}

fn c_annihilator_antisymmetric(ctx: &Ctx) -> Outcome {
    Outcome::Simple(annihilation_residual(ctx, SplitVariant::Antisymmetric))
}

fn c_sparsity_symmetric(ctx: &Ctx) -> Outcome {
    Outcome::Simple((ctx.split_s.sparse.nnz() as f64 - 8.0).abs())
}

fn c_sparsity_antisymmetric(ctx: &Ctx) -> Outcome {
    Outcome::Simple((ctx.split_a.sparse.nnz() as f64 - 10.0).abs())
}

fn c_sparse_rule_table(ctx: &Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for k in 0..4usize {
        let f = ctx.f(k);
        for (step, dense) in [
            (LadderStep::Lowering, &ctx.lowering),
            (LadderStep::Raising, &ctx.raising),
        ] {
            let via_rule = sparse_apply_unchecked(f, ParityClass::new(k), step, &ctx.prec);
            let via_dense = dense.apply(f).expect("dimension five");
            let scale = via_dense.norm().to_f64().max(1.0);
            let diff = via_rule.sub(&via_dense).expect("dimension five").norm().to_f64();
            worst = worst.max(diff / scale);
        }
    }
    Outcome::Simple(worst)
}

fn c_ground_state_annihilated(ctx: &Ctx) -> Outcome {
    let image = ctx.lowering.apply(ctx.f(0)).expect("dimension five");
    Outcome::Simple(image.norm().to_f64())
}

fn c_ground_state_conditions(ctx: &Ctx) -> Outcome {
    let f0 = ctx.f(0);
    let (x0, x1, x2) = (&f0.at(0).re, &f0.at(1).re, &f0.at(2).re);
    let one = ctx.prec.real(1.0);
    let r1 = (&(x0 - &(ctx.fr.s1() * x1)) - x2).abs();
    let r2 = (x1 - &(&(&one + ctx.fr.s2()) * x2)).abs();
    Outcome::Simple(r1.to_f64().max(r2.to_f64()))
}

fn c_dft_eigenvalue_tags(ctx: &Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for n in 0..5usize {
        let lhs = ctx.phi.apply(ctx.f(n)).expect("dimension five");
        let rhs = ctx.f(n).scale(&Complex::i_pow(n));
        worst = worst.max(lhs.sub(&rhs).expect("dimension five").norm().to_f64());
    }
    Outcome::Simple(worst)
}

fn c_spectrum_sum_trace(ctx: &Ctx) -> Outcome {
    let sum = ctx.solver.eigensystem().spectrum.sum();
    let trace = ctx.number.trace().re.clone();
    let r1 = (&sum - &trace).abs().to_f64();
    let r2 = (&sum - &ctx.prec.real(10.0)).abs().to_f64();
    Outcome::Simple(r1.max(r2))
}

fn c_spectrum_pair_sums(ctx: &Ctx) -> Outcome {
    let s1 = ctx.fr.s1();
    let c1 = ctx.fr.c1();
    let r1 = (&(ctx.lambda(2) + ctx.lambda(3)) - &(s1 * s1)).abs().to_f64();
    let want = &ctx.prec.real(7.0) - c1;
    let r2 = (&(ctx.lambda(1) + ctx.lambda(4)) - &want).abs().to_f64();
    Outcome::Simple(r1.max(r2))
}

fn c_spectrum_vs_oracle(ctx: &Ctx) -> Outcome {
    let sorted = ctx.solver.eigensystem().spectrum.sorted();
    let worst = sorted
        .iter()
        .zip(&ctx.oracle_number.eigenvalues)
        .map(|(a, b)| (a - b).abs().to_f64())
        .fold(0.0, f64::max);
    Outcome::Simple(worst)
}

/// Ladder index with the eigenvalue closest to mu; the spectrum is simple,
/// so the assignment is unambiguous.
fn index_of_eigenvalue(ctx: &Ctx, mu: &Real) -> usize {
    (0..5)
        .min_by(|&a, &b| {
            let da = (ctx.lambda(a) - mu).abs();
            let db = (ctx.lambda(b) - mu).abs();
            da.partial_cmp(&db).expect("finite")
        })
        .expect("five candidates")
}

fn c_eigenvectors_vs_oracle(ctx: &Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for (mu, v) in ctx
        .oracle_number
        .eigenvalues
        .iter()
        .zip(&ctx.oracle_number.eigenvectors)
    {
        let n = index_of_eigenvalue(ctx, mu);
        let d = eigenvector_match(ctx.f(n), v).expect("unit vectors");
        worst = worst.max(d.to_f64());
    }
    Outcome::Simple(worst)
}

fn c_orthonormality(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.solver.eigensystem().gram_defect())
}

fn c_number_reconstruction(ctx: &Ctx) -> Outcome {
    let mut acc = CMatrix::zeros(5).expect("dimension five");
    for n in 0..5usize {
        let proj = ctx.f(n).outer(ctx.f(n)).expect("dimension five");
        acc = acc.add(&proj.scale_real(ctx.lambda(n))).expect("dimension five");
    }
    Outcome::Simple(ctx.fro(acc.sub(&ctx.number)))
}

fn c_dft_reconstruction(ctx: &Ctx) -> Outcome {
    let mut acc = CMatrix::zeros(5).expect("dimension five");
    for n in 0..5usize {
        let proj = ctx.f(n).outer(ctx.f(n)).expect("dimension five");
        acc = acc.add(&proj.scale(&Complex::i_pow(n))).expect("dimension five");
    }
    Outcome::Simple(ctx.fro(acc.sub(&ctx.phi)))
}

fn c_eta_phi_defining(ctx: &Ctx) -> Outcome {
    let p = &ctx.prec;
    let eta = &ctx.mixing.eta;
    let phi = &ctx.mixing.phi;
    let s1 = ctx.fr.s1();
    let r1 = (eta - &phi.cos()).abs().to_f64();
    let quarter_s1sq = &(s1 * s1) / &p.real(4.0);
    let r2 = (&phi.sin() - &(eta * &quarter_s1sq)).abs().to_f64();
    // alternative closed form of the angle: arctan((5 + sqrt 5)/8)
    let alt = (&(&p.real(5.0) + &p.real(5.0).sqrt()) / &p.real(8.0)).atan();
    let r3 = (phi - &alt).abs().to_f64();
    Outcome::Simple(r1.max(r2).max(r3))
}

fn c_phi_printed_degrees(ctx: &Ctx) -> Outcome {
    let deg = ctx.mixing.phi.to_f64().to_degrees();
    Outcome::Simple((deg - 42.13).abs())
}

fn c_eta_printed_form(ctx: &Ctx) -> Outcome {
    let p = &ctx.prec;
    let prod = (ctx.lambda(1) * ctx.lambda(4)).sqrt();
    let printed = (&(&(&p.real(8.0) * ctx.fr.s2()) / &prod) - &ctx.mixing.eta)
        .abs()
        .to_f64();
    let corrected = (&(&(&p.real(2.0) * ctx.fr.s2()) / &prod) - &ctx.mixing.eta)
        .abs()
        .to_f64();
    Outcome::WithCorrection {
        printed,
        corrected,
        note: format!(
            "printed 8 s2/sqrt(lambda1 lambda4) misses eta by a factor of 4 \
             (residual {printed:.3e}); 2 s2/sqrt(lambda1 lambda4) matches"
        ),
    }
}

fn c_partner_spectrum(ctx: &Ctx) -> Outcome {
    let sorted = ctx.solver.eigensystem().spectrum.sorted();
    let worst = sorted
        .iter()
        .zip(&ctx.oracle_partner.eigenvalues)
        .map(|(a, b)| (a - b).abs().to_f64())
        .fold(0.0, f64::max);
    Outcome::Simple(worst)
}

fn c_partner_eigenvectors(ctx: &Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for (n, g) in ctx.mixing.g.iter().enumerate() {
        let lhs = ctx.partner.apply(g).expect("dimension five");
        let rhs = g.scale_real(ctx.lambda(n));
        worst = worst.max(lhs.sub(&rhs).expect("dimension five").norm().to_f64());
    }
    Outcome::Simple(worst)
}

fn c_partner_vs_oracle(ctx: &Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for (mu, v) in ctx
        .oracle_partner
        .eigenvalues
        .iter()
        .zip(&ctx.oracle_partner.eigenvectors)
    {
        let n = index_of_eigenvalue(ctx, mu);
        let d = eigenvector_match(&ctx.mixing.g[n], v).expect("unit vectors");
        worst = worst.max(d.to_f64());
    }
    Outcome::Simple(worst)
}

fn c_power_formula(ctx: &Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for n in 1..=4usize {
        let via_power = ctx.solver.power_formula(n).expect("index in range");
        let diff = via_power.sub(ctx.f(n)).expect("dimension five").max_abs();
        worst = worst.max(diff);
    }
    Outcome::Simple(worst)
}

fn c_lowering_chain(ctx: &Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for n in 2..=4usize {
        let lhs = ctx.lowering.apply(ctx.f(n)).expect("dimension five");
        let rhs = ctx.f(n - 1).scale_real(&ctx.lambda(n).sqrt());
        worst = worst.max(lhs.sub(&rhs).expect("dimension five").norm().to_f64());
    }
    Outcome::Simple(worst)
}

fn c_lowering_f1_mixture(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.recurrences.lowering_f1_mixture.to_f64())
}

fn c_recurrence_n3(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.recurrences.three_term_n3.to_f64())
}

fn c_recurrence_n2(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.recurrences.three_term_n2.to_f64())
}

fn c_recurrence_four_term(ctx: &Ctx) -> Outcome {
    Outcome::Simple(ctx.recurrences.four_term.to_f64())
}

fn c_raising_norm_factors(ctx: &Ctx) -> Outcome {
    let mut worst = 0.0f64;
    for n in 0..4usize {
        let image = ctx.raising.apply(ctx.f(n)).expect("dimension five");
        let got = image.norm();
        let want = if n == 0 {
            &ctx.mixing.eta * &ctx.lambda(1).sqrt()
        } else {
            ctx.lambda(n + 1).sqrt()
        };
        worst = worst.max((&got - &want).abs().to_f64());
    }
    Outcome::Simple(worst)
}

fn c_newton_polynomial_match(ctx: &Ctx) -> Outcome {
    let f0 = ctx.f(0);
    let mut worst = 0.0f64;
    for n in 1..5usize {
        let image = ctx.newton.polynomials[n].apply(f0).expect("dimension five");
        let rebuilt = image.scale_real(&(&ctx.prec.real(1.0) / &ctx.newton.d[n]));
        worst = worst.max(rebuilt.sub(ctx.f(n)).expect("dimension five").max_abs());
    }
    Outcome::Simple(worst)
}

fn c_newton_orthogonality(ctx: &Ctx) -> Outcome {
    let f0 = ctx.f(0);
    let images: Vec<CVector> = ctx
        .newton
        .polynomials
        .iter()
        .map(|p| p.apply(f0).expect("dimension five"))
        .collect();
    let mut worst = 0.0f64;
    for k in 0..5 {
        for l in 0..5 {
            let ip = images[k].inner_product(&images[l]).expect("dimension five");
            let dk = &ctx.newton.d[k];
            let dl = &ctx.newton.d[l];
            let want = if k == l { dk * dk } else { Real::zero() };
            let defect = Complex::new(&ip.re - &want, ip.im.clone());
            let resid = &defect.modulus() / &(dk * dl);
            worst = worst.max(resid.to_f64());
        }
    }
    Outcome::Simple(worst)
}

/// The uniform closed forms for f0..f3 as printed, with their stated
/// prefactors.
fn printed_uniform_forms(ctx: &Ctx) -> [(CVector, f64); 4] {
    let p = &ctx.prec;
    let fr = &ctx.fr;
    let s1 = fr.s1();
    let (c2, one) = (fr.c2(), p.real(1.0));
    let lam = |n: usize| ctx.lambda(n);
    let rv = |xs: [Real; 5]| {
        CVector::new(xs.into_iter().map(|x| Complex::new(x, Real::zero())).collect())
            .expect("five entries")
    };

    let pref0 = &p.real(2.0) / &(lam(2) * lam(4)).sqrt();
    let u0 = rv([
        fr.xi0.clone(),
        fr.xi1.clone(),
        one.clone(),
        one.clone(),
        fr.xi1.clone(),
    ])
    .scale_real(&pref0);

    let pref1 = &one / &(&p.real(2.0) * lam(2)).sqrt();
    let s1mc2 = s1 - c2;
    let u1 = rv([
        p.real(0.0),
        s1mc2.clone(),
        one.clone(),
        -&one,
        -&s1mc2,
    ])
    .scale_real(&pref1);

    let pref2 = &one / &(lam(2) * lam(3)).sqrt();
    let u2 = rv([
        p.real(2.0),
        c2.clone(),
        c2.clone(),
        c2.clone(),
        c2.clone(),
    ])
    .scale_real(&pref2);

    let pref3 = &one / &(&p.real(2.0) * lam(3)).sqrt();
    let s1pc2 = s1 + c2;
    let u3 = rv([
        p.real(0.0),
        -&s1pc2,
        one.clone(),
        -&one,
        s1pc2.clone(),
    ])
    .scale_real(&pref3);

    // norms the printed prefactors actually produce
    [(u0, 4.0), (u1, 2.0), (u2, 4.0), (u3, 2.0)]
}

fn c_uniform_prefactor_norms(ctx: &Ctx) -> Outcome {
    let forms = printed_uniform_forms(ctx);
    let mut printed = 0.0f64;
    let mut corrected = 0.0f64;
    for (n, (u, factor)) in forms.iter().enumerate() {
        printed = printed.max((u.norm().to_f64() - 1.0).abs());
        let fixed = u.scale_real(&Real::from(1.0 / factor));
        corrected = corrected.max((fixed.norm().to_f64() - 1.0).abs());
        let dist = eigenvector_match(&fixed, ctx.f(n)).expect("unit vectors");
        corrected = corrected.max(dist.to_f64());
    }
    Outcome::WithCorrection {
        printed,
        corrected,
        note: format!(
            "printed prefactors give norms 4, 2, 4, 2 instead of 1 \
             (worst unit defect {printed:.3e}); directions are correct and \
             dividing by those norms reproduces the unit eigenvectors"
        ),
    }
}

fn c_f4_prefactor_norm(ctx: &Ctx) -> Outcome {
    let p = &ctx.prec;
    let fr = &ctx.fr;
    let (s1, c1, c2) = (fr.s1(), fr.c1(), fr.c2());
    let two = p.real(2.0);
    let a = c2 - &(&two * s1);
    let b = &(&(&two * s1) - c2) + &(&two * c1);
    let pref = &p.real(1.0) / &(ctx.lambda(2) * ctx.lambda(4)).sqrt();
    let u4 = CVector::new(
        [two.clone(), a.clone(), b.clone(), b, a]
            .into_iter()
            .map(|x| Complex::new(x, Real::zero()))
            .collect(),
    )
    .expect("five entries")
    .scale_real(&pref);
    let printed = (u4.norm().to_f64() - 1.0).abs();
    let fixed = u4.scale_real(&Real::from(0.25));
    let mut corrected = (fixed.norm().to_f64() - 1.0).abs();
    corrected = corrected.max(
        eigenvector_match(&fixed, ctx.f(4))
            .expect("unit vectors")
            .to_f64(),
    );
    Outcome::WithCorrection {
        printed,
        corrected,
        note: format!(
            "printed prefactor gives norm 4 instead of 1 (unit defect \
             {printed:.3e}); the direction is correct and dividing by 4 \
             reproduces the unit eigenvector"
        ),
    }
}

fn c_lowering_top_prefactor(ctx: &Ctx) -> Outcome {
    let p = &ctx.prec;
    let fr = &ctx.fr;
    let (c1, s2) = (fr.c1(), fr.s2());
    // stated coefficient 2^{-1/2} (7 - c1 - c1 s2) for A acting on the raw
    // raised image of f3; the ladder value is lambda4
    let stated = &(&(&p.real(7.0) - c1) - &(c1 * s2)) / &p.real(2.0).sqrt();
    let lam4 = ctx.lambda(4);
    let printed = (&stated - lam4).abs().to_f64();
    let sqrt2_lam4 = &p.real(2.0).sqrt() * lam4;
    let corrected = (&stated - &sqrt2_lam4).abs().to_f64();
    Outcome::WithCorrection {
        printed,
        corrected,
        note: format!(
            "stated coefficient equals sqrt(2) lambda4, not lambda4 \
             (defect {printed:.3e}); the ladder relation uses lambda4"
        ),
    }
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

type Evaluator = fn(&Ctx) -> Outcome;

struct ClaimSpec {
    def: ClaimDef,
    eval: Evaluator,
}

macro_rules! claim {
    ($id:literal, $kind:ident, $thr:expr, $stmt:literal, $eval:path) => {
        ClaimSpec {
            def: ClaimDef {
                id: $id,
                statement: $stmt,
                kind: ClaimKind::$kind,
                threshold: $thr,
            },
            eval: $eval,
        }
    };
}

static CLAIMS: &[ClaimSpec] = &[
    claim!("root_identities", Identity, 1e-14,
        "s1 s2 = sqrt5, c1 - c2 = sqrt5, c1 c2 = -1, c1 + c2 = -1, q^5 = 1",
        c_root_identities),
    claim!("xi_identity", Identity, 1e-14,
        "c2 xi1^2 = c1 - 2 s1 xi1",
        c_xi_identity),
    claim!("dft_unitary", Identity, 1e-12,
        "Phi Phi^dagger = I",
        c_dft_unitary),
    claim!("dft_symmetric", Identity, 1e-12,
        "Phi = Phi^T",
        c_dft_symmetric),
    claim!("dft_fourth_power", Identity, 1e-12,
        "Phi^4 = I",
        c_dft_fourth_power),
    claim!("reflection_commutes_dft", Identity, 1e-12,
        "[Phi, P] = 0",
        c_reflection_commutes),
    claim!("intertwining_lowering", Identity, 1e-12,
        "A Phi = i Phi A",
        c_intertwining_lowering),
    claim!("intertwining_raising", Identity, 1e-12,
        "A^T Phi = -i Phi A^T",
        c_intertwining_raising),
    claim!("number_commutes_dft", Identity, 1e-12,
        "[A^T A, Phi] = 0",
        c_number_commutes),
    claim!("position_reflection_anticommute", Identity, 1e-12,
        "P X + X P = 0",
        c_position_anticommute),
    claim!("derivative_reflection_anticommute", Identity, 1e-12,
        "P D + D P = 0",
        c_derivative_anticommute),
    claim!("unitary_equivalence", Identity, 1e-12,
        "Y = Phi X Phi^dagger",
        c_unitary_equivalence),
    claim!("position_two_diagonal", Identity, 1e-11,
        "X eps_n = i (eps_{n-1} - eps_{n+1}) in the DFT eigencolumn basis",
        c_position_two_diagonal),
    claim!("momentum_two_diagonal", Identity, 1e-11,
        "Y e_n = i (e_{n+1} - e_{n-1}) in the Euclidean basis",
        c_momentum_two_diagonal),
    claim!("phi_x_traceless", Identity, 1e-13,
        "trace(Phi X) = 0",
        c_phi_x_traceless),
    claim!("phi_x_first_column_zero", Identity, 1e-14,
        "the first column of Phi X vanishes",
        c_phi_x_first_column),
    claim!("split_symmetric_reconstruction", Identity, 1e-14,
        "Phi X = s2^{-1} A_sym + i B_sym entrywise",
        c_split_sym_reconstruction),
    claim!("split_antisymmetric_reconstruction", Identity, 1e-14,
        "Phi X = s2^{-1} (A_anti + B_anti) entrywise",
        c_split_anti_reconstruction),
    claim!("annihilator_symmetric", Identity, 1e-13,
        "A_sym annuls every reflection-symmetric vector (seeded random trials)",
        c_annihilator_symmetric),
    claim!("annihilator_antisymmetric", Identity, 1e-13,
        "A_anti annuls every reflection-antisymmetric vector (seeded random trials)",
        c_annihilator_antisymmetric),
    claim!("sparsity_count_symmetric", Structural, 0.5,
        "B_sym has exactly 8 nonzero entries",
        c_sparsity_symmetric),
    claim!("sparsity_count_antisymmetric", Structural, 0.5,
        "B_anti has exactly 10 nonzero entries",
        c_sparsity_antisymmetric),
    claim!("sparse_rule_table", Identity, 1e-12,
        "the parity dispatch for A and A^T matches the dense operators on each eigenvector",
        c_sparse_rule_table),
    claim!("ground_state_annihilated", Identity, 1e-12,
        "A f0 = 0",
        c_ground_state_annihilated),
    claim!("ground_state_conditions", Identity, 1e-12,
        "x0 = s1 x1 + x2 and x1 = (1 + s2) x2 on the ground state",
        c_ground_state_conditions),
    claim!("dft_eigenvalue_tags", Identity, 1e-11,
        "Phi f_n = i^n f_n for all n",
        c_dft_eigenvalue_tags),
    claim!("spectrum_sum_trace", Identity, 1e-12,
        "lambda1 + lambda2 + lambda3 + lambda4 = 10 = trace(A^T A)",
        c_spectrum_sum_trace),
    claim!("spectrum_pair_sums", Identity, 1e-12,
        "lambda2 + lambda3 = s1^2 and lambda1 + lambda4 = 7 - c1",
        c_spectrum_pair_sums),
    claim!("spectrum_vs_oracle", Identity, 1e-11,
        "closed-form eigenvalues match the Jacobi eigensolver on A^T A",
        c_spectrum_vs_oracle),
    claim!("eigenvectors_vs_oracle", Identity, 1e-10,
        "ladder eigenvectors match Jacobi eigenvectors up to phase",
        c_eigenvectors_vs_oracle),
    claim!("orthonormality", Identity, 1e-12,
        "(f_k, f_l) = delta_{kl}",
        c_orthonormality),
    claim!("number_reconstruction", Identity, 1e-11,
        "sum_n lambda_n f_n f_n^dagger = A^T A",
        c_number_reconstruction),
    claim!("dft_reconstruction", Identity, 1e-11,
        "sum_n i^n f_n f_n^dagger = Phi",
        c_dft_reconstruction),
    claim!("eta_phi_defining", Identity, 1e-12,
        "eta = cos(phi) = 4/sqrt(21 - 5 c2), sin(phi) = eta s1^2/4, phi = arctan((5 + sqrt5)/8)",
        c_eta_phi_defining),
    claim!("phi_printed_degrees", PrintedValue, 0.005,
        "phi agrees with the printed two-decimal value 42.13 degrees",
        c_phi_printed_degrees),
    claim!("eta_printed_form", KnownMisprint, 1e-12,
        "printed closed form 8 s2/sqrt(lambda1 lambda4) for eta",
        c_eta_printed_form),
    claim!("partner_spectrum", Identity, 1e-11,
        "A A^T has the same spectrum as A^T A (Jacobi cross-check)",
        c_partner_spectrum),
    claim!("partner_eigenvectors", Identity, 1e-11,
        "the rotated pairs g_n are eigenvectors of A A^T with eigenvalues lambda_n",
        c_partner_eigenvectors),
    claim!("partner_vs_oracle", Identity, 1e-10,
        "the g_n match Jacobi eigenvectors of A A^T up to phase",
        c_partner_vs_oracle),
    claim!("power_formula", Identity, 1e-10,
        "f_n = (eta prod_{k<=n} sqrt(lambda_k))^{-1} (A^T)^n f0 componentwise",
        c_power_formula),
    claim!("lowering_chain", Identity, 1e-11,
        "A f_n = sqrt(lambda_n) f_{n-1} for n = 2, 3, 4",
        c_lowering_chain),
    claim!("lowering_f1_mixture", Identity, 1e-11,
        "A f1 = sqrt(lambda1) eta (f0 + (sqrt5 c2/4) f4)",
        c_lowering_f1_mixture),
    claim!("recurrence_three_term_n3", Identity, 1e-12,
        "sqrt(2 lambda4) f4 + sqrt(2 lambda3) f2 = 2 X f3",
        c_recurrence_n3),
    claim!("recurrence_three_term_n2", Identity, 1e-12,
        "sqrt(2 lambda3) f3 + sqrt(2 lambda2) f1 = 2 X f2",
        c_recurrence_n2),
    claim!("recurrence_four_term", Identity, 1e-12,
        "sqrt(2 lambda2) f2 + sqrt(2 lambda1) eta (f0 + (sqrt5 c2/4) f4) = 2 X f1",
        c_recurrence_four_term),
    claim!("raising_norm_factors", Identity, 1e-11,
        "|A^T f_n| = sqrt(lambda_{n+1}) for n >= 1 and eta sqrt(lambda1) for n = 0",
        c_raising_norm_factors),
    claim!("newton_polynomial_match", Identity, 1e-10,
        "f_n = d_n^{-1} P_n(X) f0 for the Newtonian basis polynomials",
        c_newton_polynomial_match),
    claim!("newton_orthogonality", Identity, 1e-10,
        "(P_k f0, P_l f0) = d_k^2 delta_{kl}, relative to d_k d_l",
        c_newton_orthogonality),
    claim!("uniform_prefactor_norms", KnownMisprint, 1e-10,
        "the printed uniform closed forms for f0..f3 are unit vectors",
        c_uniform_prefactor_norms),
    claim!("f4_prefactor_norm", KnownMisprint, 1e-10,
        "the printed closed form for f4 is a unit vector",
        c_f4_prefactor_norm),
    claim!("lowering_top_prefactor", KnownMisprint, 1e-11,
        "the stated coefficient of A on the raw raised image of f3 equals lambda4",
        c_lowering_top_prefactor),
];

/// Immutable view of the registry definitions, in evaluation order.
pub fn registry() -> impl Iterator<Item = &'static ClaimDef> {
    CLAIMS.iter().map(|c| &c.def)
}

/// Evaluates every registry claim at the given precision.
///
/// `trials` controls the seeded randomized annihilation checks;
/// `tolerance_floor` relaxes every per-claim threshold to at least that
/// value (0 keeps the pinned defaults). Reports are deterministic: identical
/// inputs produce identical reports.
pub fn run_claims(
    prec: &Precision,
    trials: usize,
    seed: u64,
    tolerance_floor: f64,
) -> Result<ClaimsReport> {
    let ctx = Ctx::build(prec, trials, seed)?;
    let mut entries = Vec::with_capacity(CLAIMS.len());
    for spec in CLAIMS {
        let threshold = spec.def.threshold.max(tolerance_floor);
        let entry = match (spec.eval)(&ctx) {
            Outcome::Simple(residual) => {
                let status = if residual <= threshold {
                    ClaimStatus::Pass
                } else {
                    ClaimStatus::Fail
                };
                ClaimEntry {
                    id: spec.def.id,
                    statement: spec.def.statement,
                    kind: spec.def.kind,
                    status,
                    residual,
                    threshold,
                    note: None,
                }
            }
            Outcome::WithCorrection {
                printed,
                corrected,
                note,
            } => {
                let (status, residual, note) = if printed <= threshold {
                    (ClaimStatus::Pass, printed,
                     Some("printed form holds as stated".to_string()))
                } else if corrected <= threshold {
                    (ClaimStatus::PassWithCorrection, corrected, Some(note))
                } else {
                    (ClaimStatus::Fail, printed, Some(note))
                };
                ClaimEntry {
                    id: spec.def.id,
                    statement: spec.def.statement,
                    kind: spec.def.kind,
                    status,
                    residual,
                    threshold,
                    note,
                }
            }
        };
        entries.push(entry);
    }
    Ok(ClaimsReport {
        registry_version: REGISTRY_VERSION,
        precision_label: prec.label(),
        trials,
        seed,
        tolerance_floor,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_unique_and_expected_corrections_present() {
        let ids: Vec<&str> = registry().map(|d| d.id).collect();
        let mut dedup = ids.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(ids.len(), dedup.len(), "duplicate claim id");
        assert!(ids.len() >= 30);
        for id in EXPECTED_CORRECTIONS {
            assert!(ids.contains(&id), "{id} missing from registry");
        }
    }

    #[test]
    fn binary64_run_passes() {
        let report = run_claims(&Precision::binary64(), 1000, 42, 0.0).unwrap();
        assert_eq!(report.entries.len(), CLAIMS.len());
        for e in &report.entries {
            assert_ne!(
                e.status,
                ClaimStatus::Fail,
                "{} failed with residual {:.3e} (threshold {:.1e})",
                e.id,
                e.residual,
                e.threshold
            );
        }
        assert_eq!(report.count(ClaimStatus::PassWithCorrection), 4);
        for id in EXPECTED_CORRECTIONS {
            assert_eq!(
                report.entry(id).unwrap().status,
                ClaimStatus::PassWithCorrection,
                "{id}"
            );
        }
        assert!(report.verification_passed());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_claims(&Precision::binary64(), 200, 7, 0.0).unwrap();
        let b = run_claims(&Precision::binary64(), 200, 7, 0.0).unwrap();
        assert_eq!(a, b);
        let c = run_claims(&Precision::binary64(), 200, 8, 0.0).unwrap();
        assert_eq!(a.entries.len(), c.entries.len());
    }

    #[test]
    fn tolerance_floor_only_loosens() {
        let strict = run_claims(&Precision::binary64(), 100, 42, 0.0).unwrap();
        let loose = run_claims(&Precision::binary64(), 100, 42, 1e-6).unwrap();
        for (s, l) in strict.entries.iter().zip(&loose.entries) {
            assert!(l.threshold >= s.threshold);
            if s.status == ClaimStatus::Pass {
                assert_eq!(l.status, ClaimStatus::Pass);
            }
        }
        assert!(loose.verification_passed());
    }

    #[test]
    fn extended_mode_shrinks_identity_residuals() {
        let base = run_claims(&Precision::binary64(), 100, 42, 0.0).unwrap();
        let ext = run_claims(&Precision::extended(30).unwrap(), 100, 42, 0.0).unwrap();
        for (b, e) in base.entries.iter().zip(&ext.entries) {
            assert_eq!(b.id, e.id);
            if b.status == ClaimStatus::Pass && b.kind == ClaimKind::Identity {
                assert!(
                    e.residual * 10.0 <= b.residual || e.residual <= 1e-25,
                    "{}: {:.3e} -> {:.3e}",
                    b.id,
                    b.residual,
                    e.residual
                );
            }
        }
    }
}
