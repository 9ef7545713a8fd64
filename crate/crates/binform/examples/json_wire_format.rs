//! The JSON wire format used by the CLI.
//!
//! Forms serialize as {"degree", "coeffs", "field"} with complex
//! scalars as [re, im] pairs; every float carries 17 significant
//! digits, so parsing back is bit-exact. Run with
//! `cargo run --example json_wire_format`.

use binform::{
    critical_list_to_json, critical_rank_k, eigen_pairs, eigen_to_json, form_from_json,
    form_to_json, BinaryForm, ScalarField, SearchBudget,
};

fn main() {
    let f = BinaryForm::real(&[0.3, -1.2, 0.8, 0.5, -0.9]);
    let text = form_to_json(&f);
    println!("form: {text}");

    let back = form_from_json(&text).unwrap();
    assert_eq!(back.coeffs(), f.coeffs(), "round-trip is bit-exact");
    println!("round-trip exact: true");

    println!("\neigen pairs:\n{}", eigen_to_json(&eigen_pairs(&f).unwrap()));

    let pts =
        critical_rank_k(&f, 2, ScalarField::Complex, &SearchBudget::for_rank(2).with_seed(7))
            .unwrap();
    let census = critical_list_to_json(&pts);
    println!("\ncensus (first 200 bytes):\n{}...", &census[..200.min(census.len())]);

    // malformed documents fail with a parse error, not a panic
    let err = form_from_json("{\"degree\":2,\"coeffs\":[1,2],\"field\":\"real\"}").unwrap_err();
    println!("\nshort coefficient vector -> {err}");
}
