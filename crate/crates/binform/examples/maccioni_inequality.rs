//! Real roots never outnumber real eigenvector tensors.
//!
//! Sampling random forms checks the inequality #real roots ≤ #real
//! eigen tensors and the parity statement (both counts share the
//! degree's parity when f and its rotational derivative have simple
//! roots). Run with `cargo run --release --example maccioni_inequality`.

use binform::maccioni_sweep;

fn main() {
    for d in [3usize, 4, 5] {
        let rep = maccioni_sweep(d, 400, 2).unwrap();
        let bins: Vec<String> = rep
            .crit1_histogram
            .iter()
            .enumerate()
            .filter(|(_, n)| **n > 0)
            .map(|(i, n)| format!("{i}: {n}"))
            .collect();
        println!(
            "degree {d}: {} samples, {} skipped, {} violations; real eigen counts {{{}}}",
            rep.samples,
            rep.skipped,
            rep.violations.len(),
            bins.join(", ")
        );
        assert!(rep.clean(), "the inequality is a theorem; a violation is a solver bug");
    }

    // hyperbolic forms (all roots real) sit at the top of the range:
    // every eigenvector is forced real
    let hyperbolic = binform::BinaryForm::real(&[24.0, -50.0, 35.0, -10.0, 1.0]);
    let counts = binform::count_real(&hyperbolic, &binform::SearchBudget::for_rank(2)).unwrap();
    println!(
        "(x-y)(x-2y)(x-3y)(x-4y): {} real roots, {} real eigen tensors",
        counts.roots, counts.crit1
    );
}
