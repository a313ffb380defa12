//! JSON reports, one top-level object per invocation.

use serde::Serialize;

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// Names of the flattened exponent coordinates.
pub fn coordinate_names(e_len: usize, rank: usize) -> Vec<String> {
    let mut out = vec!["y".to_string()];
    out.extend((1..=e_len).map(|i| format!("e{i}")));
    out.extend((1..=rank).map(|i| format!("x{i}")));
    out
}

#[derive(Debug, Serialize)]
pub struct NormalFormReport {
    pub command: &'static str,
    pub q_mode: String,
    pub input: String,
    pub result: String,
}

#[derive(Debug, Serialize)]
pub struct BracketReport {
    pub command: &'static str,
    pub q_mode: String,
    pub left: String,
    pub right: String,
    pub result: String,
}

#[derive(Debug, Serialize)]
pub struct IsoReport {
    pub command: &'static str,
    pub p1: Vec<i64>,
    pub p2: Vec<i64>,
    pub content_p1: u64,
    pub content_p2: u64,
    pub answer: &'static str,
    pub isomorphic: bool,
    /// Rows of `σ` with `σ(p1) = ±p2`.
    pub witness: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Serialize)]
pub struct AutReport {
    pub command: &'static str,
    pub coordinates: Vec<String>,
    pub torus: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
    pub input: String,
    pub result: String,
}

#[derive(Debug, Serialize)]
pub struct GaloisReport {
    pub command: &'static str,
    pub layer: String,
    pub input: String,
    pub image: String,
    pub projection: String,
    pub fixed: bool,
}

#[derive(Debug, Serialize)]
pub struct CenterReport {
    pub command: &'static str,
    pub q_mode: String,
    pub degree: u64,
    pub dimension: usize,
    pub basis: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct IdealReport {
    pub command: &'static str,
    pub q_mode: String,
    pub generator: String,
    pub degree: u64,
    pub contains_one: bool,
    /// Dimension after each saturation round.
    pub profile: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct VermaDim {
    pub weight: Vec<i64>,
    pub dim: u128,
}

#[derive(Debug, Serialize)]
pub struct VermaReport {
    pub command: &'static str,
    pub negative: Vec<Vec<i64>>,
    pub counting: &'static str,
    pub dims: Vec<VermaDim>,
}

#[derive(Debug, Serialize)]
pub struct WeightDim {
    pub weight: i64,
    pub dim: u64,
}

#[derive(Debug, Serialize)]
pub struct BggReport {
    pub command: &'static str,
    pub n: u64,
    pub depth: u64,
    pub top: Vec<WeightDim>,
    pub sub: Vec<WeightDim>,
    pub character: Vec<WeightDim>,
    pub total: u64,
    pub dual: Vec<WeightDim>,
}

#[derive(Debug, Serialize)]
pub struct SupportReport {
    pub command: &'static str,
    pub chi: String,
    pub embeddings: Vec<String>,
    pub support: &'static str,
}

#[derive(Debug, Serialize)]
pub struct TraceReport {
    pub command: &'static str,
    pub dimension: u64,
    pub lhs: String,
    pub rhs: String,
    pub obstructed: bool,
}
