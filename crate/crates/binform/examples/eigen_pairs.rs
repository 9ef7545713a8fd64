//! Eigenvector tensors of a binary form.
//!
//! A degree-d form generically has d eigenvectors — the root directions
//! of its rotational derivative — each carrying an eigenvalue λ = f
//! paired against the d-th power of the direction. Run with
//! `cargo run --example eigen_pairs`.

use binform::{bombieri_dot_bilinear, eigen_pairs, power, BinaryForm, EigenDecomposition};

fn show(label: &str, f: &BinaryForm) {
    println!("{label}:");
    match eigen_pairs(f).unwrap() {
        EigenDecomposition::Discrete(pairs) => {
            for p in &pairs {
                // the eigenvalue is the pairing of f with v^d
                let check = bombieri_dot_bilinear(f, &power(&p.v, f.degree())).unwrap();
                println!(
                    "  v = ({:+.6}, {:+.6})  lambda = {:+.6}  |lambda - <f, v^d>| = {:.1e}  {}",
                    p.v.a,
                    p.v.b,
                    p.lambda,
                    (p.lambda - check).norm(),
                    if p.is_real { "real" } else { "complex" }
                );
            }
        }
        EigenDecomposition::Circle { coefficient } => {
            println!("  every unit vector is an eigenvector, lambda = {coefficient}");
        }
    }
}

fn main() {
    // the quartic x^4 + y^4: the axes carry lambda = 1, the two
    // diagonal directions lambda = 1/2
    show("x^4 + y^4", &BinaryForm::real(&[1.0, 0.0, 0.0, 0.0, 1.0]));

    // a hyperbolic quartic: all roots real forces all eigenvectors real
    let hyperbolic = BinaryForm::real(&[24.0, -50.0, 35.0, -10.0, 1.0]);
    show("(x-y)(x-2y)(x-3y)(x-4y)", &hyperbolic);

    // circle powers degenerate: the whole unit circle is critical
    show("(x^2 + y^2)^2", &BinaryForm::real(&[1.0, 0.0, 2.0, 0.0, 1.0]));
}
