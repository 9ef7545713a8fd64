//! Census of critical rank-2 points for a real quartic.
//!
//! The distance from a generic quartic to the variety of rank-2 sums
//! μ₁l₁⁴ + μ₂l₂⁴ has exactly seven complex critical points. The census
//! finds them by multi-start Newton, certifies each one, and closes the
//! list under conjugation. Run with `cargo run --example rank_two_census`.

use binform::{critical_rank_k, BinaryForm, ScalarField, SearchBudget};

fn main() {
    let f = BinaryForm::real(&[0.3, -1.2, 0.8, 0.5, -0.9]);
    let budget = SearchBudget::for_rank(2).with_seed(7);
    let pts = critical_rank_k(&f, 2, ScalarField::Complex, &budget).unwrap();

    println!("quartic {:?}", f.coeffs().iter().map(|c| c.re).collect::<Vec<_>>());
    println!("{} critical points (7 expected for a generic quartic):", pts.len());
    for (i, p) in pts.iter().enumerate() {
        println!(
            "  #{i}: distance {:.6}  grad residual {:.1e}  cert residual {:.1e}  {}",
            p.distance,
            p.grad_residual,
            p.cert_residual.unwrap_or(f64::NAN),
            if p.is_real { "real" } else { "complex" }
        );
    }

    let real = pts.iter().filter(|p| p.is_real).count();
    println!("real points: {real} (the census is conjugation-closed, so the rest pair up)");

    // restricting the field keeps only the real points
    let real_pts = critical_rank_k(&f, 2, ScalarField::Real, &budget).unwrap();
    assert_eq!(real_pts.len(), real);

    // the best real rank-2 approximation is the closest real point
    let best = &real_pts[0];
    println!(
        "best real rank-2 approximation at distance {:.6}, tensor residual {:.1e}",
        best.distance,
        f.sub(&best.approximation().into_real()).unwrap().norm()
            - best.distance
    );
}
