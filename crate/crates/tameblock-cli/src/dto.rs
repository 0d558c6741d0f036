//! Serialisable views of results for `--format machine` output.  Degrees
//! travel as decimal strings so arbitrarily large values survive any JSON
//! consumer.

use serde::Serialize;
use tameblock::classify::{HeightSource, TemplateSolution};
use tameblock::clifford::Candidate;
use tameblock::matrix::DecompMatrix;

#[derive(Serialize)]
pub struct RowOut {
    pub degree: String,
    pub coeffs: Vec<u32>,
    pub mult: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub height: Option<u32>,
}

#[derive(Serialize)]
pub struct MatrixOut {
    pub rows: Vec<RowOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brauer: Option<Vec<String>>,
}

impl MatrixOut {
    pub fn from(m: &DecompMatrix) -> Self {
        MatrixOut {
            rows: m
                .rows()
                .iter()
                .map(|r| RowOut {
                    degree: r.degree.to_string(),
                    coeffs: r.coeffs.clone(),
                    mult: r.mult,
                    height: r.height,
                })
                .collect(),
            brauer: m
                .brauer()
                .map(|b| b.iter().map(|d| d.to_string()).collect()),
        }
    }
}

#[derive(Serialize)]
pub struct SolutionOut {
    pub family: &'static str,
    pub tags: Vec<&'static str>,
    pub n: u32,
    pub phi: Vec<String>,
    pub realizable: bool,
    pub matrix: MatrixOut,
}

impl SolutionOut {
    pub fn from(s: &TemplateSolution) -> Self {
        SolutionOut {
            family: s.entry.family.name(),
            tags: s.entry.tags.to_vec(),
            n: s.n,
            phi: s.phi.iter().map(|p| p.to_string()).collect(),
            realizable: s.entry.is_realizable(s.n),
            matrix: MatrixOut::from(&s.matrix),
        }
    }
}

pub fn height_source_name(s: Option<HeightSource>) -> &'static str {
    match s {
        Some(HeightSource::Explicit) => "explicit",
        Some(HeightSource::GroupOrder) => "group-order",
        Some(HeightSource::MinValuation) => "min-valuation",
        None => "degrees-only",
    }
}

#[derive(Serialize)]
pub struct ClassifyOut {
    pub block: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<&'static str>,
    pub n: u32,
    pub k: u64,
    pub height_source: &'static str,
    pub solutions: Vec<SolutionOut>,
}

#[derive(Serialize)]
pub struct BatchOut {
    pub block: String,
    pub matched: Vec<String>,
    pub expected: Vec<String>,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Serialize)]
pub struct CandidateOut {
    pub pattern: String,
    pub matrix: MatrixOut,
}

impl CandidateOut {
    pub fn from(c: &Candidate) -> Self {
        CandidateOut {
            pattern: c.pattern.to_string(),
            matrix: MatrixOut::from(&c.matrix),
        }
    }
}
