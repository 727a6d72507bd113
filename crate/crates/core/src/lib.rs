pub mod linalg;

#[cfg(test)]
mod probe {
    use nalgebra::{DMatrix, DVector};
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 { Complex64::new(re, im) }

    #[test]
    fn nalgebra_eigen_degenerate_stress() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for trial in 0..20 {
            let n = 17;
            // random unitary via QR of random complex matrix
            let g = DMatrix::from_fn(n, n, |_, _| c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5));
            let qr = g.qr();
            let q = qr.q();
            // degenerate spectrum: 16 eigenvalues at -1, one at 0
            let mut d = DMatrix::zeros(n, n);
            for i in 0..16 { d[(i, i)] = c(-1.0, 0.0); }
            let m = &q * d * q.adjoint();
            let se = m.clone().symmetric_eigen();
            for j in 0..n {
                let v: DVector<Complex64> = se.eigenvectors.column(j).into();
                let r = &m * &v - &v * c(se.eigenvalues[j], 0.0);
                assert!(r.norm() < 1e-12, "trial {trial} residual {:e}", r.norm());
            }
            let vtv = se.eigenvectors.adjoint() * &se.eigenvectors;
            let mut dev: f64 = 0.0;
            for i in 0..n { for j in 0..n {
                let expect = if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) };
                dev = dev.max((vtv[(i, j)] - expect).norm());
            }}
            assert!(dev < 1e-12, "trial {trial} unitarity dev {:e}", dev);
        }
    }

    #[test]
    fn nalgebra_complex_singular_values() {
        let m = DMatrix::from_row_slice(2, 2, &[
            c(0.0, 0.0), c(0.3, 0.4),
            c(0.0, 0.0), c(0.0, 0.0),
        ]);
        let sv = m.singular_values();
        assert!((sv[0] - 0.5).abs() < 1e-14, "sv {:?}", sv);
    }
}
