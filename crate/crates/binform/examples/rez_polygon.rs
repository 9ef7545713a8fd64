//! Circle powers as sums of d/2 + 1 real d-th powers.
//!
//! (x²+y²)^(d/2) = c_d Σ lₖᵈ where the lₖ sit at consecutive vertices
//! of a regular (d+2)-gon; the weight c_d is independent of the
//! polygon's rotation. Run with `cargo run --example rez_polygon`.

use binform::rez;

fn main() {
    println!("degree  summands  c_d        residual");
    for d in [2usize, 4, 6, 8, 10] {
        let r = rez(d, 0.0).unwrap();
        println!(
            "{:>6}  {:>8}  {:<9.6}  {:.1e}",
            d,
            r.summands.len(),
            r.c_d,
            r.residual
        );
    }

    // the weight does not depend on the rotation offset
    let a = rez(6, 0.0).unwrap();
    let b = rez(6, 0.8361).unwrap();
    println!(
        "rotation invariance at d = 6: |c_d(0) - c_d(phi)| = {:.1e}",
        (a.c_d - b.c_d).abs()
    );

    // d = 4 has the closed-form weight 8/9
    let r = rez(4, 0.0).unwrap();
    println!("d = 4 closed form: c_4 = {:.12} (8/9 = {:.12})", r.c_d, 8.0 / 9.0);

    // odd degrees cannot be circle powers
    println!("d = 3 -> {:?}", rez(3, 0.0).err().map(|e| e.to_string()));
}
