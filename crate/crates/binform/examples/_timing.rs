//! Scratch timing probe; not part of the example set.

use binform::{critical_rank_k, gaussian_form, Error, ScalarField, SearchBudget};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let t0 = Instant::now();
    let mut ok = 0;
    let mut exhausted = 0;
    for i in 0..100 {
        let f = gaussian_form(4, &mut rng);
        let budget = SearchBudget::for_rank(2).with_seed(1000 + i);
        match critical_rank_k(&f, 2, ScalarField::Complex, &budget) {
            Ok(pts) => {
                assert_eq!(pts.len(), 7);
                ok += 1;
            }
            Err(Error::BudgetExhausted { found }) => {
                exhausted += 1;
                println!("  form {i}: exhausted with {}", found.len());
            }
            Err(e) => panic!("unexpected: {e}"),
        }
    }
    let dt = t0.elapsed().as_secs_f64();
    println!("100 censuses: {:.2}s total, {:.3}s each; ok {ok}, exhausted {exhausted}", dt, dt / 100.0);
}
