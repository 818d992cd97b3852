mod common;

use common::checks::{markov_vs_oracle, planted_check, presentation, Outcome};
use common::oracle::{self, planted};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semidec::linalg::is_pointed;

#[test]
fn markov_matches_fiber_graph_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut checked, mut skipped) = (0, Vec::new());
    while checked < 60 {
        let n = rng.gen_range(2..=5);
        let m = rng.gen_range(1..n);
        let rows = oracle::random_matrix(&mut rng, m, n, -3, 3);
        if !is_pointed(&presentation(&rows, n)).unwrap().is_pointed() {
            continue;
        }
        match markov_vs_oracle(&rows, n) {
            Ok(Outcome::Checked) => checked += 1,
            Ok(Outcome::Skipped(why)) => skipped.push(why),
            Err(msg) => panic!("{msg}"),
        }
    }
    eprintln!("checked {checked}, skipped {}: {skipped:?}", skipped.len());
    assert!(skipped.len() < checked, "skipped {skipped:?}");
}

#[test]
fn planted_decompositions_are_recovered() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..40 {
        let count = rng.gen_range(2..=3);
        let sizes: Vec<usize> = (0..count).map(|_| rng.gen_range(1..=3)).collect();
        let inst = planted(&mut rng, &sizes);
        if let Err(msg) = planted_check(&inst, inst.n <= 7) {
            panic!("round {round}: {msg}");
        }
    }
}
