//! Serialized forms. Field order is the order printed.

use minorrel_core::partitions::{BiShape, Partition, Tableau};
use minorrel_core::regbounds::Regularity;
use minorrel_core::symfunc::SchurExpansion;
use minorrel_core::verify::{MinimalityStatus, MinimalityVerdict, VerdictMethod};
use serde::{Deserialize, Serialize};

pub fn partition(p: &Partition) -> Vec<u32> {
    p.parts().to_vec()
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct BiShapeJson {
    pub row: Vec<u32>,
    pub col: Vec<u32>,
}

impl From<&BiShape> for BiShapeJson {
    fn from(b: &BiShape) -> Self {
        BiShapeJson { row: partition(&b.row), col: partition(&b.col) }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct TermJson {
    pub partition: Vec<u32>,
    pub mult: u64,
}

pub fn expansion(e: &SchurExpansion) -> Vec<TermJson> {
    e.terms()
        .iter()
        .map(|(p, m)| TermJson { partition: partition(p), mult: *m })
        .collect()
}

#[derive(Serialize, Debug)]
pub struct RegularityJson {
    pub case: String,
    pub k0: Option<i64>,
    pub reg: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<u64>,
}

impl From<&Regularity> for RegularityJson {
    fn from(r: &Regularity) -> Self {
        RegularityJson { case: r.case.to_string(), k0: r.k0, reg: r.reg, degree_bound: None }
    }
}

pub fn status_name(s: MinimalityStatus) -> &'static str {
    match s {
        MinimalityStatus::Minimal => "minimal",
        MinimalityStatus::NonMinimal => "non_minimal",
        MinimalityStatus::Inconclusive => "inconclusive",
    }
}

pub fn method_name(m: VerdictMethod) -> &'static str {
    match m {
        VerdictMethod::Degree => "degree",
        VerdictMethod::Derivation => "derivation",
        VerdictMethod::Exhaustive => "exhaustive",
        VerdictMethod::Budget => "budget",
    }
}

#[derive(Serialize, Debug)]
pub struct WitnessJson {
    pub source: BiShapeJson,
    pub row_tableau: Vec<Vec<u32>>,
    pub col_tableau: Vec<Vec<u32>>,
    pub terms: usize,
}

#[derive(Serialize, Debug)]
pub struct VerdictJson {
    pub bishape: BiShapeJson,
    pub t: u32,
    pub degree: u32,
    pub status: &'static str,
    pub method: &'static str,
    pub rank_found: u64,
    pub rank_needed: u64,
    pub witnesses: Vec<WitnessJson>,
}

fn tableau(t: &Tableau) -> Vec<Vec<u32>> {
    t.rows().to_vec()
}

impl VerdictJson {
    pub fn new(v: &MinimalityVerdict, t: u32) -> Self {
        VerdictJson {
            bishape: (&v.bishape).into(),
            t,
            degree: v.degree,
            status: status_name(v.status),
            method: method_name(v.method),
            rank_found: v.rank_found,
            rank_needed: v.rank_needed,
            witnesses: v
                .witnesses
                .iter()
                .map(|w| WitnessJson {
                    source: (&w.source).into(),
                    row_tableau: tableau(&w.row_tableau),
                    col_tableau: tableau(&w.col_tableau),
                    terms: w.terms,
                })
                .collect(),
        }
    }
}

/// One memoized plethysm in the on-disk cache.
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct PlethysmEntry {
    pub mu: Vec<u32>,
    pub t: u32,
    pub terms: Vec<TermJson>,
}

/// Compact single-line JSON.
pub fn line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}
