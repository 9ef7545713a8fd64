//! Expanding a form in its eigenvector powers.
//!
//! The d powers vᵢᵈ of the eigenvectors span a space containing f, so
//! f = Σ cᵢvᵢᵈ — a spectral-theorem analogue where d = 2 recovers the
//! matrix case exactly. Run with `cargo run --example spectral_expansion`.

use binform::{spectral_decompose, BinaryForm};

fn show(label: &str, f: &BinaryForm) {
    let s = spectral_decompose(f).unwrap();
    println!("{label}: residual {:.1e}", s.residual);
    for (c, b) in s.coeffs.iter().zip(&s.basis) {
        let dir = b.coeffs().last().unwrap();
        println!(
            "  c = {:+.6}  v^d with leading coefficient {:+.6}",
            c, dir
        );
    }
}

fn main() {
    // x^5 + y^5 is already a sum of two eigen powers: the expansion has
    // coefficients (1, 1, 0, 0, 0)
    show("x^5 + y^5", &BinaryForm::real(&[1.0, 0.0, 0.0, 0.0, 0.0, 1.0]));

    // a generic quintic still reproduces f exactly
    show("random quintic", &BinaryForm::real(&[0.7, -1.3, 0.2, 0.9, -0.5, 1.1]));

    // d = 2: the two coefficients are the eigenvalues of the symmetric
    // matrix [[3,1],[1,2]]
    let q = BinaryForm::real(&[2.0, 2.0, 3.0]);
    let s = spectral_decompose(&q).unwrap();
    println!(
        "matrix [[3,1],[1,2]]: spectral coefficients {:.6} and {:.6}",
        s.coeffs[0].re, s.coeffs[1].re
    );

    // repeated eigen directions are flagged instead of failing
    let cube = BinaryForm::real(&[0.0, 0.0, 0.0, 1.0]);
    let s = spectral_decompose(&cube).unwrap();
    println!(
        "x^3: repeated directions flagged = {}, residual {:.1e}",
        s.multiple_roots, s.residual
    );
}
