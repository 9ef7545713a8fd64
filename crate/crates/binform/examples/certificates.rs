//! Certifying criticality without re-running the search.
//!
//! A rank-k point g = Σ μᵢlᵢᵈ is critical for the distance from f
//! exactly when the residual f − g is h·Π(lᵢ^⊥)² for some cofactor h.
//! The certificate solves for h by least squares; its residual is a
//! checkable proof that does not depend on how the point was found.
//! Run with `cargo run --example certificates`.

use binform::{certify, power, BinaryForm, LinearForm, Scalar, Summand};

fn main() {
    // forward-construct a critical configuration for d = 6, k = 2:
    // f = mu1 l1^6 + mu2 l2^6 + h (l1^perp)^2 (l2^perp)^2
    let l1 = LinearForm::real(1.0, 0.5).normalized();
    let l2 = LinearForm::real(-0.3, 1.0).normalized();
    let summands = vec![
        Summand { mu: Scalar::new(1.3, 0.0), l: l1.clone() },
        Summand { mu: Scalar::new(-0.7, 0.0), l: l2.clone() },
    ];
    let h = BinaryForm::real(&[0.4, -0.2, 0.9]);
    let perp = |l: &LinearForm| power(&binform::perp(l), 2);
    let f = power(&l1, 6)
        .scale(summands[0].mu)
        .add(&power(&l2, 6).scale(summands[1].mu))
        .unwrap()
        .add(&perp(&l1).mul(&perp(&l2)).mul(&h))
        .unwrap();

    let (cofactor, residual) = certify(&f, &summands).unwrap();
    println!("forward instance: certificate residual {residual:.1e} (critical)");
    println!(
        "recovered cofactor matches: {:.1e}",
        cofactor.sub(&h).map(|d| d.norm()).unwrap_or(f64::NAN)
    );

    // perturbing the weights breaks criticality and the residual jumps
    let off = vec![
        Summand { mu: Scalar::new(1.3 + 0.05, 0.0), l: l1 },
        Summand { mu: Scalar::new(-0.7, 0.0), l: l2 },
    ];
    let (_, bad) = certify(&f, &off).unwrap();
    println!("perturbed weights: certificate residual {bad:.1e} (not critical)");
    assert!(residual < 1e-10 && bad > 1e-4);
}
