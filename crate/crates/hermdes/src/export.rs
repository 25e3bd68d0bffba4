//! File formats: incidence matrices as CSV or run-length text, design
//! summaries, weight enumerators and generator matrices.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use hermdes_core::design::{Design, DesignParams};
use hermdes_core::{FpVector, GenMatrixCode};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub enum ExportError {
    Io(io::Error),
    Json(serde_json::Error),
    Parse { line: usize, message: String },
}

impl std::fmt::Display for ExportError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExportError::Io(e) => write!(f, "{e}"),
            ExportError::Json(e) => write!(f, "{e}"),
            ExportError::Parse { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl std::error::Error for ExportError {}

impl From<io::Error> for ExportError {
    fn from(e: io::Error) -> Self {
        ExportError::Io(e)
    }
}

impl From<serde_json::Error> for ExportError {
    fn from(e: serde_json::Error) -> Self {
        ExportError::Json(e)
    }
}

/// One line per block, `v` comma-separated 0/1 entries.
pub fn incidence_csv(design: &Design) -> String {
    let mut out = String::with_capacity(design.blocks.len() * (2 * design.v + 1));
    let mut row = vec![b'0'; design.v];
    for block in &design.blocks {
        row.fill(b'0');
        for &pt in block {
            row[pt as usize] = b'1';
        }
        for (i, &c) in row.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push(c as char);
        }
        out.push('\n');
    }
    out
}

/// Header `v b`, then per block the alternating run lengths of its incidence
/// row, starting with a (possibly empty) run of zeros.
pub fn incidence_run_length(design: &Design) -> String {
    let mut out = format!("{} {}\n", design.v, design.blocks.len());
    for block in &design.blocks {
        let mut runs = Vec::new();
        let mut pos = 0usize;
        let mut i = 0;
        while i < block.len() {
            let start = block[i] as usize;
            let mut end = start + 1;
            while i + 1 < block.len() && block[i + 1] as usize == end {
                i += 1;
                end += 1;
            }
            runs.push(start - pos);
            runs.push(end - start);
            pos = end;
            i += 1;
        }
        if pos < design.v {
            runs.push(design.v - pos);
        }
        let line: Vec<String> = runs.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Inverse of [`incidence_run_length`].
pub fn parse_run_length(text: &str) -> Result<Design, ExportError> {
    let bad = |line: usize, message: &str| ExportError::Parse {
        line,
        message: message.to_string(),
    };
    let mut lines = text.lines();
    let header: Vec<usize> = lines
        .next()
        .ok_or_else(|| bad(1, "missing header"))?
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| bad(1, "header must be `v b`"))?;
    let [v, b] = header[..] else {
        return Err(bad(1, "header must be `v b`"));
    };
    let mut blocks = Vec::with_capacity(b);
    for (i, line) in lines.enumerate() {
        let runs: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| bad(i + 2, "run lengths must be integers"))?;
        let mut block = Vec::new();
        let mut pos = 0;
        for (r, &len) in runs.iter().enumerate() {
            if r % 2 == 1 {
                block.extend((pos..pos + len).map(|x| x as u32));
            }
            pos += len;
        }
        if pos != v {
            return Err(bad(i + 2, "runs do not add up to v"));
        }
        blocks.push(block);
    }
    if blocks.len() != b {
        return Err(bad(1, "block count does not match header"));
    }
    Design::new(v, blocks).map_err(|e| bad(0, &e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignSummary {
    pub v: usize,
    pub b: usize,
    pub k: usize,
    pub r: usize,
    pub lambda: usize,
    pub t_verified: usize,
}

impl DesignSummary {
    pub fn new(params: DesignParams, t_verified: usize) -> Self {
        DesignSummary {
            v: params.v,
            b: params.b,
            k: params.k,
            r: params.r,
            lambda: params.lambda,
            t_verified,
        }
    }
}

/// Generator matrix rows as digit strings, one per line.
pub fn matrix_digits<V: FpVector>(code: &GenMatrixCode<V>) -> String {
    code.to_digit_rows().into_iter().map(|r| r + "\n").collect()
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, ExportError> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

pub fn write_text(path: &Path, text: &str) -> Result<(), ExportError> {
    fs::write(path, text)?;
    Ok(())
}
