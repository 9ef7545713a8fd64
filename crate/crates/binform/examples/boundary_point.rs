//! A critical point on the boundary of the rank-2 locus.
//!
//! For f = x³y + 2y⁴ one of the seven critical points is not a sum of
//! two fourth powers but the limit point x³y, which lies on the tangent
//! scroll μl⁴ + νl³l^⊥. The census recovers it in the tangential chart
//! and reports it with a boundary flag. Run with
//! `cargo run --example boundary_point`.

use binform::{critical_rank_k, BinaryForm, ScalarField, SearchBudget};

fn main() {
    // coefficients c_0..c_4 of f = x^3 y + 2 y^4
    let f = BinaryForm::real(&[2.0, 0.0, 0.0, 1.0, 0.0]);
    let budget = SearchBudget::for_rank(2).with_seed(0).with_starts(1200);
    let pts = critical_rank_k(&f, 2, ScalarField::Complex, &budget).unwrap();

    let honest = pts.iter().filter(|p| !p.boundary).count();
    let boundary: Vec<_> = pts.iter().filter(|p| p.boundary).collect();
    println!("{honest} honest rank-2 points and {} boundary point(s)", boundary.len());

    for p in &boundary {
        let t = p.tangent.as_ref().expect("boundary points carry the tangential chart");
        println!(
            "boundary point: mu = {:.6}, nu = {:.6}, l = ({:.6}, {:.6})",
            t.mu, t.nu, t.l.a, t.l.b
        );
        // nu·l³·l^⊥ with mu ≈ 0 and l = x is exactly x³y
        let tensor = p.approximation().into_real();
        let expected = BinaryForm::real(&[0.0, 0.0, 0.0, 1.0, 0.0]);
        println!(
            "tensor = {:?}, |tensor - x^3 y| = {:.1e}",
            tensor.coeffs().iter().map(|c| c.re).collect::<Vec<_>>(),
            tensor.sub(&expected).unwrap().norm()
        );
        println!("distance to f = {:.6} (= |2 y^4|)", p.distance);
    }
}
