//! The JSON report. Every integer is serialized as a decimal string.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use semidec::IntMatrix;
use serde::{Deserialize, Serialize};

/// An exact integer carried as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Dec(pub BigInt);

impl From<Dec> for String {
    fn from(d: Dec) -> String {
        d.0.to_string()
    }
}

impl TryFrom<String> for Dec {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        BigInt::from_str(&s)
            .map(Dec)
            .map_err(|_| format!("`{s}` is not a decimal integer"))
    }
}

impl fmt::Display for Dec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

macro_rules! dec_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Dec {
            fn from(v: $t) -> Dec {
                Dec(BigInt::from(v))
            }
        }
    )*};
}
dec_from!(i64, i128, u64, u128, usize);

impl From<&BigInt> for Dec {
    fn from(v: &BigInt) -> Dec {
        Dec(v.clone())
    }
}

pub fn decs<T: Copy + Into<Dec>>(v: &[T]) -> Vec<Dec> {
    v.iter().map(|&x| x.into()).collect()
}

/// 0-based indices shown 1-based.
pub fn one_based(v: &[usize]) -> Vec<Dec> {
    v.iter().map(|&j| Dec::from(j + 1)).collect()
}

pub fn matrix(m: &IntMatrix) -> Vec<Vec<Dec>> {
    m.row_iter()
        .map(|r| r.iter().map(Dec::from).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub presentation: PresentationEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub markov: Option<MarkovReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Verdicts>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fiber: Option<FiberReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parametrization: Option<ParametrizationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bench: Option<BenchReport>,
    #[serde(default)]
    pub notes: Vec<String>,
    /// Wall time per phase in microseconds; absent under `--no-timings`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, Dec>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationEcho {
    pub rows: Dec,
    pub cols: Dec,
    pub matrix: Vec<Vec<Dec>>,
    pub moduli: Vec<Dec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub mode: String,
    pub decomposable: bool,
    pub summands: Dec,
    /// `Q` as a list: column `k` of the diagonal form is original column `column_order[k]` (1-based).
    pub column_order: Vec<Dec>,
    /// `P`.
    pub row_transform: Vec<Vec<Dec>>,
    pub diagonal: Vec<Vec<Dec>>,
    pub blocks: Vec<BlockReport>,
    pub free_generators: Vec<Dec>,
    /// Generator sets of all summands, 1-based.
    pub partition: Vec<Vec<Dec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<CrossCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub generators: Vec<Dec>,
    pub matrix: Vec<Vec<Dec>>,
}

/// Kernel and direct mode run side by side on a torsion-free input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub kernel_decomposable: bool,
    pub direct_decomposable: bool,
    pub kernel_partition: Vec<Vec<Dec>>,
    pub direct_partition: Vec<Vec<Dec>>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkovReport {
    pub strategy: String,
    pub minimal: bool,
    pub elements: Vec<MarkovElement>,
    pub degree_counts: Vec<DegreeCount>,
    pub betti_degrees: Vec<Vec<Dec>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkovElement {
    pub text: String,
    pub vector: Vec<Dec>,
    pub degree: Vec<Dec>,
    /// 1-based block of the kernel decomposition, when computed per block.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block: Option<Dec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCount {
    pub degree: Vec<Dec>,
    pub count: Dec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub blocks: Vec<BlockVerdict>,
    /// Generators in no relation; each is a summand with zero ideal.
    pub free_generators: Vec<Dec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unique: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complete_intersection: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gluing: Option<GluingReport>,
    /// The generators are taken to be a minimal generating set.
    pub minimality_assumed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockVerdict {
    pub block: Dec,
    pub generators: Vec<Dec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unique: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complete_intersection: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gluing: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingReport {
    pub is_gluing: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub block: Dec,
    pub block_first: Vec<Dec>,
    pub block_second: Vec<Dec>,
    pub first: Vec<Dec>,
    pub second: Vec<Dec>,
    pub degree: Vec<Dec>,
    pub first_witness: Vec<Dec>,
    pub second_witness: Vec<Dec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub degree: Vec<Dec>,
    pub complex: String,
    /// Fiber elements in lexicographic order.
    pub elements: Vec<Vec<Dec>>,
    /// `delta`: generators `i` with `m - a_i` in `S`, 1-based.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Dec>>,
    /// `nabla`: pairs of 1-based element indices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[Dec; 2]>>,
    /// `delta`: maximal faces over 1-based generators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<Dec>>>,
    /// 1-based element indices (`nabla`) or generators (`delta`).
    pub components: Vec<Vec<Dec>>,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParametrizationReport {
    pub text: String,
    pub parameters: Dec,
    /// `parameters x generators` exponent matrix.
    pub exponents: Vec<Vec<Dec>>,
    pub blocks: Vec<ParameterBlockReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterBlockReport {
    pub generators: Vec<Dec>,
    pub parameters: Vec<Dec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchReport {
    pub repeat: Dec,
    pub timeout_us: Dec,
    pub decomposed: BenchOutcome,
    pub whole: BenchOutcome,
    /// Whole time over decomposed time, as a decimal with two places.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub speedup: Option<String>,
    pub decomposed_faster: bool,
    /// Both paths return the same basis up to sign.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bases_agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BenchOutcome {
    Completed { best_us: Dec },
    TimedOut { timeout_us: Dec },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
    pub exit_code: Dec,
}
