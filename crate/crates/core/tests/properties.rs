//! Property tests for the invariants that hold over randomized inputs and
//! across general dimensions.

use dft5::scalar::{Complex, Precision};
use dft5::{
    build_named_matrix, dft_matrix, eigenvector_match, hermitian_eigensolver, parity_decompose,
    sparse_apply, CMatrix, CVector, LadderStep, MatrixKind, Parity, ParityClass,
};
use proptest::prelude::*;

fn prec() -> Precision {
    Precision::binary64()
}

fn complex_vec(dim: usize) -> impl Strategy<Value = CVector> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim).prop_map(|parts| {
        CVector::new(
            parts
                .into_iter()
                .map(|(re, im)| Complex::from_f64s(re, im))
                .collect(),
        )
        .expect("finite entries")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // 10 * epsilon with the default epsilon = 1e-12, over the whole
    // supported dimension range
    #[test]
    fn dft_unitary_and_involutive_for_all_dims(n in 2usize..=64) {
        let p = prec();
        let phi = dft_matrix(n, &p).unwrap();
        let id = CMatrix::identity(n).unwrap();
        let unitary = phi
            .multiply(&phi.conjugate_transpose()).unwrap()
            .sub(&id).unwrap()
            .frobenius_norm().to_f64();
        prop_assert!(unitary <= 1e-11);
        let fourth = phi.pow(4).unwrap().sub(&id).unwrap().frobenius_norm().to_f64();
        prop_assert!(fourth <= 1e-11);
    }

    #[test]
    fn parity_decomposition_properties(v in complex_vec(5)) {
        let p = prec();
        let (sym, anti) = parity_decompose(&v);
        let scale = v.norm().to_f64().max(1.0);
        // recomposition up to entry rounding
        let back = sym.add(&anti).unwrap();
        prop_assert!(back.sub(&v).unwrap().norm().to_f64() <= 1e-15 * scale);
        // each part has its parity
        let refl = build_named_matrix(MatrixKind::Reflection, 5, &p).unwrap();
        let rs = refl.apply(&sym).unwrap().sub(&sym).unwrap().norm().to_f64();
        prop_assert!(rs <= 1e-15 * scale);
        let ra = refl.apply(&anti).unwrap().add(&anti).unwrap().norm().to_f64();
        prop_assert!(ra <= 1e-15 * scale);
        // idempotence
        let (ss, sa) = parity_decompose(&sym);
        prop_assert!(ss.sub(&sym).unwrap().norm().to_f64() <= 1e-15 * scale);
        prop_assert!(sa.norm().to_f64() <= 1e-15 * scale);
        // Pythagorean norm split
        let lhs = v.norm_sqr().to_f64();
        let rhs = sym.norm_sqr().to_f64() + anti.norm_sqr().to_f64();
        prop_assert!((lhs - rhs).abs() <= 1e-11);
    }

    #[test]
    fn inner_product_is_sesquilinear(u in complex_vec(5), v in complex_vec(5),
                                     re in -1.0f64..1.0, im in -1.0f64..1.0) {
        let s = Complex::from_f64s(re, im);
        // conjugate symmetry
        let uv = u.inner_product(&v).unwrap();
        let vu = v.inner_product(&u).unwrap();
        let sym = (&uv - &vu.conj()).modulus().to_f64();
        prop_assert!(sym <= 1e-13);
        // linearity in the second slot
        let lhs = u.inner_product(&v.scale(&s)).unwrap();
        let rhs = &uv * &s;
        prop_assert!((&lhs - &rhs).modulus().to_f64() <= 1e-13);
        // norm consistency
        let nn = u.inner_product(&u).unwrap();
        prop_assert!((nn.re.to_f64() - u.norm_sqr().to_f64()).abs() <= 1e-13);
        prop_assert!(nn.im.to_f64().abs() <= 1e-15);
    }

    #[test]
    fn eigenvector_match_is_phase_invariant(v in complex_vec(5), theta in 0.0f64..std::f64::consts::TAU) {
        prop_assume!(v.norm().to_f64() > 1e-6);
        let phase = Complex::from_f64s(theta.cos(), theta.sin());
        let rotated = v.scale(&phase);
        let d = eigenvector_match(&v, &rotated).unwrap().to_f64();
        prop_assert!(d <= 1e-13 * v.norm().to_f64().max(1.0));
        // symmetry
        let u = v.scale(&Complex::from_f64s(0.3, -0.4));
        let dab = eigenvector_match(&v, &u).unwrap().to_f64();
        let dba = eigenvector_match(&u, &v).unwrap().to_f64();
        prop_assert!((dab - dba).abs() <= 1e-12);
    }

    #[test]
    fn jacobi_diagonalizes_random_hermitian(n in 2usize..=8, seed in 0u64..5000) {
        let p = prec();
        let mut rng = dft5::rng::Lcg::new(seed);
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
        prop_assert!(r.max_pair_residual(&m) <= 1e-11);
        prop_assert!(r.gram_defect() <= 1e-12);
        for w in r.eigenvalues.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
    }

    // the sparse rules reject vectors outside the eigenspaces they assume
    #[test]
    fn sparse_apply_rejects_generic_vectors(v in complex_vec(5), k in 0usize..4) {
        prop_assume!(v.norm().to_f64() > 1e-3);
        // a generic random vector is neither parity-pure nor a DFT eigenvector
        let p = prec();
        let (sym, anti) = parity_decompose(&v);
        prop_assume!(sym.norm().to_f64() > 1e-2 && anti.norm().to_f64() > 1e-2);
        let out = sparse_apply(&v, ParityClass::new(k), LadderStep::Raising, &p);
        prop_assert!(out.is_err());
    }
}

#[test]
fn parity_of_index_alternates() {
    for n in 0..10 {
        let want = if n % 2 == 0 {
            Parity::Symmetric
        } else {
            Parity::Antisymmetric
        };
        assert_eq!(Parity::of_index(n), want);
    }
}
