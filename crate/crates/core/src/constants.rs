//! Trigonometric constants of the fifth root of unity.
//!
//! Everything downstream is algebra over s_n = 2 sin(2 pi n/5) and
//! c_n = 2 cos(2 pi n/5). The tables are built from a single evaluation of
//! 2 pi/5 with the reflection symmetries s_{N-k} = -s_k and c_{N-k} = c_k
//! imposed exactly rather than re-evaluated, so identities that rely on
//! those symmetries cancel to exactly zero in every precision mode.

use crate::scalar::{Complex, Precision, Real};

/// q = exp(2 pi i/5) together with the s_n, c_n tables and the ground-state
/// constants xi0 = s_1 - 2 c_2, xi1 = 1 + s_2.
#[derive(Clone, Debug)]
pub struct FifthRootConstants {
    pub q: Complex,
    pub s: [Real; 5],
    pub c: [Real; 5],
    pub xi0: Real,
    pub xi1: Real,
}

impl FifthRootConstants {
    pub fn new(prec: &Precision) -> Self {
        let (s, c) = trig_tables(5, prec);
        let q = Complex::new(&c[1] * &prec.real(0.5), &s[1] * &prec.real(0.5));
        let xi0 = &s[1] - &(&prec.real(2.0) * &c[2]);
        let xi1 = &prec.real(1.0) + &s[2];
        let fr = FifthRootConstants { q, s, c, xi0, xi1 };
        debug_assert!(fr.validate(prec).is_ok());
        fr
    }

    pub fn s1(&self) -> &Real {
        &self.s[1]
    }

    pub fn s2(&self) -> &Real {
        &self.s[2]
    }

    pub fn c1(&self) -> &Real {
        &self.c[1]
    }

    pub fn c2(&self) -> &Real {
        &self.c[2]
    }

    /// Checks the defining algebraic identities against the configured
    /// tolerance.
    pub fn validate(&self, prec: &Precision) -> crate::error::Result<()> {
        const NAMES: [&str; 6] = [
            "q^5 = 1",
            "s1 s2 = sqrt 5",
            "c1 - c2 = sqrt 5",
            "c1 c2 = -1",
            "c1 + c2 = -1",
            "c2 xi1^2 = c1 - 2 s1 xi1",
        ];
        let tolerance = prec.epsilon();
        for (residual, what) in self.identity_residuals(prec).into_iter().zip(NAMES) {
            if residual > tolerance {
                return Err(crate::error::Error::InvariantViolated {
                    what,
                    residual,
                    tolerance,
                });
            }
        }
        Ok(())
    }

    /// Residuals of the defining algebraic identities, for invariant checks:
    /// |q^5 - 1|, |s1 s2 - sqrt 5|, |c1 - c2 - sqrt 5|, |c1 c2 + 1|,
    /// |c1 + c2 + 1| and the ground-state identity
    /// |c2 xi1^2 - (c1 - 2 s1 xi1)|.
    pub fn identity_residuals(&self, prec: &Precision) -> [f64; 6] {
        let one = prec.real(1.0);
        let sqrt5 = prec.real(5.0).sqrt();
        let q5 = {
            let mut acc = Complex::one();
            for _ in 0..5 {
                acc = &acc * &self.q;
            }
            acc
        };
        let q5_res = (&q5 - &Complex::one()).modulus();
        let s1s2 = &(&self.s[1] * &self.s[2]) - &sqrt5;
        let c1mc2 = &(&self.c[1] - &self.c[2]) - &sqrt5;
        let c1c2 = &(&self.c[1] * &self.c[2]) + &one;
        let c1pc2 = &(&self.c[1] + &self.c[2]) + &one;
        let xi = {
            let lhs = &self.c[2] * &(&self.xi1 * &self.xi1);
            let rhs = &self.c[1] - &(&(&prec.real(2.0) * &self.s[1]) * &self.xi1);
            &lhs - &rhs
        };
        [
            q5_res.to_f64(),
            s1s2.abs().to_f64(),
            c1mc2.abs().to_f64(),
            c1c2.abs().to_f64(),
            c1pc2.abs().to_f64(),
            xi.abs().to_f64(),
        ]
    }
}

/// Fixed-size n = 5 tables.
fn trig_tables(n: usize, prec: &Precision) -> ([Real; 5], [Real; 5]) {
    let (s, c) = trig_tables_vec(n, prec);
    (
        s.try_into().expect("five entries"),
        c.try_into().expect("five entries"),
    )
}

/// Tables of 2 sin(2 pi k/n) and 2 cos(2 pi k/n) for k in 0..n, with the
/// k <-> n-k symmetry imposed exactly.
pub fn trig_tables_vec(n: usize, prec: &Precision) -> (Vec<Real>, Vec<Real>) {
    let two = prec.real(2.0);
    let theta = &(&two * &prec.pi()) / &prec.real(n as f64);
    let mut s = vec![prec.real(0.0); n];
    let mut c = vec![prec.real(2.0); n];
    for k in 1..=n / 2 {
        let angle = &theta * &prec.real(k as f64);
        let sk = &two * &angle.sin();
        let ck = &two * &angle.cos();
        if n - k != k {
            s[n - k] = -&sk;
            c[n - k] = ck.clone();
        } else {
            // k = n/2: the angle is pi, where the sine is exactly zero
            s[k] = prec.real(0.0);
            c[k] = prec.real(-2.0);
            continue;
        }
        s[k] = sk;
        c[k] = ck;
    }
    (s, c)
}

/// Powers of the primitive n-th root of unity, q^k for k in 0..n, with the
/// conjugation symmetry q^{n-k} = conj(q^k) imposed exactly.
pub fn unit_roots(n: usize, prec: &Precision) -> Vec<Complex> {
    let theta = &(&prec.real(2.0) * &prec.pi()) / &prec.real(n as f64);
    let mut roots = vec![Complex::one(); n];
    for k in 1..=n / 2 {
        let angle = &theta * &prec.real(k as f64);
        let root = Complex::new(angle.cos(), angle.sin());
        if n - k != k {
            roots[n - k] = root.conj();
        } else {
            roots[k] = Complex::from_f64s(-1.0, 0.0);
            continue;
        }
        roots[k] = root;
    }
    roots
}
