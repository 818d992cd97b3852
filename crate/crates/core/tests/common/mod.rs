#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use semidec::{IntMatrix, SemigroupPresentation};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

/// Reads a corpus `.mat` file: "rows cols" followed by the entries.
pub fn load_mat(name: &str) -> IntMatrix {
    let text = std::fs::read_to_string(data_path(name)).expect("corpus file");
    let tokens: Vec<i64> = text
        .split_whitespace()
        .map(|t| t.parse().expect("integer"))
        .collect();
    let (m, n) = (tokens[0] as usize, tokens[1] as usize);
    let data: Vec<BigInt> = tokens[2..].iter().map(|&v| BigInt::from(v)).collect();
    IntMatrix::from_vec(m, n, data).expect("entry count")
}

pub fn pres(rows: &[&[i64]]) -> SemigroupPresentation {
    SemigroupPresentation::torsion_free(IntMatrix::from_i64(rows)).unwrap()
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn matrix(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(cols, rows).unwrap()
}
pub mod checks;
pub mod oracle;

/// Property-test settings with a fixed seed so runs are reproducible.
pub fn config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x5e_d1ce),
        ..Default::default()
    }
}
