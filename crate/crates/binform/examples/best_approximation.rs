//! Best low-rank approximation, and the d = 2 sanity check.
//!
//! For quadratics the best rank-1 approximation is the classical
//! Eckart–Young answer: the spectral term with the larger eigenvalue
//! modulus. For higher degree the same machinery returns the certified
//! critical point closest to f. Run with
//! `cargo run --example best_approximation`.

use binform::{best_rank_k, spectral_decompose, BinaryForm, SearchBudget};

fn main() {
    // the symmetric matrix [[3,1],[1,2]] as the quadratic 3x^2+2xy+2y^2
    let q = BinaryForm::real(&[2.0, 2.0, 3.0]);
    let best = best_rank_k(&q, 1, &SearchBudget::for_rank(1).with_seed(3)).unwrap();
    let spec = spectral_decompose(&q).unwrap();
    println!(
        "quadratic: best rank-1 distance {:.6}, top spectral coefficient {:.6}",
        best.distance, spec.coeffs[0].re
    );
    let top = spec.basis[0].scale(spec.coeffs[0]).into_real();
    let gap = best.approximation().into_real().sub(&top).unwrap().norm();
    println!("best rank-1 tensor equals the top spectral term: |difference| = {gap:.1e}");
    assert!(gap <= 1e-8 * q.norm());

    // a generic sextic, approximated by two sixth powers; the sextic
    // census is larger than the quartic one, so give it more starts
    let f = BinaryForm::real(&[0.9, -0.4, 1.7, 0.3, -1.1, 0.6, 0.2]);
    let budget = SearchBudget::for_rank(2).with_seed(3).with_starts(2000);
    let best2 = best_rank_k(&f, 2, &budget).unwrap();
    println!(
        "sextic: best rank-2 at distance {:.6} ({:.1}% of |f|), grad residual {:.1e}",
        best2.distance,
        100.0 * best2.distance / f.norm(),
        best2.grad_residual
    );
    for s in &best2.summands {
        println!("  mu = {:.6}  l = ({:.6}, {:.6})", s.mu, s.l.a, s.l.b);
    }
}
