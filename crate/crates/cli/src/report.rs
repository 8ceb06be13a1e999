//! Per-code report records for the pipeline runs.
//!
//! One record per line, `key=value` pairs separated by single spaces, keys
//! always in the order `code_index sym_order orbit_reps s2_solutions
//! s3_solutions nodes exhausted seconds`. A stage-s2 run has no quad-stage
//! count and writes `s3_solutions=-`. Everything except `seconds` is
//! deterministic for fixed inputs and budgets, so reports from sharded runs
//! can be concatenated and compared field-by-field.

use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Clone, PartialEq, Debug)]
pub struct PipelineRecord {
    /// Zero-based index of the code in the input file.
    pub code_index: usize,
    /// Order of the code's coordinate symmetry group.
    pub sym_order: u128,
    /// Number of seed orbit representatives actually searched.
    pub orbit_reps: usize,
    /// Pair-stage solutions summed over the representatives.
    pub s2_solutions: u64,
    /// Quad-stage solutions, when the run went that deep.
    pub s3_solutions: Option<u64>,
    /// Search nodes summed over every stage and representative.
    pub nodes: u64,
    /// Whether every search ran to completion within its budget.
    pub exhausted: bool,
    /// Wall-clock seconds spent on this code (informational only).
    pub seconds: f64,
}

impl fmt::Display for PipelineRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "code_index={} sym_order={} orbit_reps={} s2_solutions={} s3_solutions=",
            self.code_index, self.sym_order, self.orbit_reps, self.s2_solutions
        )?;
        match self.s3_solutions {
            Some(count) => write!(f, "{count}")?,
            None => write!(f, "-")?,
        }
        write!(
            f,
            " nodes={} exhausted={} seconds={:.3}",
            self.nodes, self.exhausted, self.seconds
        )
    }
}

#[derive(Debug, Error)]
pub enum RecordError {
    #[error("expected field `{expected}`, found `{found}`")]
    Field { expected: &'static str, found: String },
    #[error("field {field}: bad value `{value}`")]
    Value { field: &'static str, value: String },
}

impl FromStr for PipelineRecord {
    type Err = RecordError;

    fn from_str(line: &str) -> Result<Self, RecordError> {
        const KEYS: [&str; 8] = [
            "code_index",
            "sym_order",
            "orbit_reps",
            "s2_solutions",
            "s3_solutions",
            "nodes",
            "exhausted",
            "seconds",
        ];
        let mut values = [""; 8];
        let mut tokens = line.split_whitespace();
        for (key, slot) in KEYS.iter().zip(values.iter_mut()) {
            let token = tokens.next().unwrap_or("");
            *slot = token
                .strip_prefix(key)
                .and_then(|rest| rest.strip_prefix('='))
                .ok_or(RecordError::Field {
                    expected: key,
                    found: token.to_string(),
                })?;
        }
        if let Some(extra) = tokens.next() {
            return Err(RecordError::Field {
                expected: "end of record",
                found: extra.to_string(),
            });
        }
        fn parse<T: FromStr>(field: &'static str, value: &str) -> Result<T, RecordError> {
            value.parse().map_err(|_| RecordError::Value {
                field,
                value: value.to_string(),
            })
        }
        Ok(PipelineRecord {
            code_index: parse("code_index", values[0])?,
            sym_order: parse("sym_order", values[1])?,
            orbit_reps: parse("orbit_reps", values[2])?,
            s2_solutions: parse("s2_solutions", values[3])?,
            s3_solutions: match values[4] {
                "-" => None,
                v => Some(parse("s3_solutions", v)?),
            },
            nodes: parse("nodes", values[5])?,
            exhausted: parse("exhausted", values[6])?,
            seconds: parse("seconds", values[7])?,
        })
    }
}
