//! JSONL and CSV census files.
//!
//! One JSON object per line, keys in the order of [`CensusRow`]. The CSV
//! form has the same columns in the same order ([`CSV_COLUMNS`]); lists are
//! space-separated inside a cell and absent values are empty cells.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use flagsym_core::survey::CensusRecord;
use flagsym_core::{CanonicalCode, ParseError};
use serde::{Deserialize, Serialize};

pub const CSV_COLUMNS: [&str; 10] = [
    "code",
    "score",
    "integrable",
    "parabolic",
    "hamiltonian",
    "forbidden4",
    "witness",
    "admits12s",
    "dimension",
    "family",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusRow {
    pub code: String,
    pub score: Vec<usize>,
    pub integrable: bool,
    pub parabolic: bool,
    pub hamiltonian: bool,
    pub forbidden4: bool,
    pub witness: Option<[usize; 4]>,
    pub admits12s: bool,
    pub dimension: usize,
    pub family: Option<(usize, usize)>,
}

#[derive(Debug, thiserror::Error)]
pub enum CensusFileError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("line {line}: {source}")]
    Code { line: usize, source: ParseError },
    #[error("line {line}: code {code} is not in canonical form")]
    NotCanonical { line: usize, code: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl From<&CensusRecord> for CensusRow {
    fn from(r: &CensusRecord) -> Self {
        CensusRow {
            code: r.code.to_string(),
            score: r.score.clone(),
            integrable: r.integrable,
            parabolic: r.parabolic,
            hamiltonian: r.hamiltonian,
            forbidden4: r.forbidden4,
            witness: r.witness,
            admits12s: r.admits12s,
            dimension: r.dimension,
            family: r.family,
        }
    }
}

impl CensusRow {
    /// Converts back, insisting that the stored code is canonical.
    pub fn to_record(&self, line: usize) -> Result<CensusRecord, CensusFileError> {
        let code: CanonicalCode = self.code.parse().map_err(|source| CensusFileError::Code { line, source })?;
        if code.to_string() != self.code {
            return Err(CensusFileError::NotCanonical { line, code: self.code.clone() });
        }
        Ok(CensusRecord {
            code,
            score: self.score.clone(),
            integrable: self.integrable,
            parabolic: self.parabolic,
            hamiltonian: self.hamiltonian,
            forbidden4: self.forbidden4,
            witness: self.witness,
            admits12s: self.admits12s,
            dimension: self.dimension,
            family: self.family,
        })
    }

    fn csv_cells(&self) -> [String; 10] {
        fn join(v: &[usize]) -> String {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        }
        [
            self.code.clone(),
            join(&self.score),
            self.integrable.to_string(),
            self.parabolic.to_string(),
            self.hamiltonian.to_string(),
            self.forbidden4.to_string(),
            self.witness.map(|w| join(&w)).unwrap_or_default(),
            self.admits12s.to_string(),
            self.dimension.to_string(),
            self.family.map(|(n, k)| join(&[n, k])).unwrap_or_default(),
        ]
    }
}

pub fn write_jsonl<W: Write>(records: &[CensusRecord], mut out: W) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, &CensusRow::from(r))?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn to_jsonl_string(records: &[CensusRecord]) -> String {
    let mut buf = Vec::new();
    write_jsonl(records, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<CensusRecord>, CensusFileError> {
    let mut records = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|source| CensusFileError::Io { path: PathBuf::from("<input>"), source })?;
        if line.trim().is_empty() {
            continue;
        }
        let row: CensusRow =
            serde_json::from_str(&line).map_err(|source| CensusFileError::Json { line: line_no, source })?;
        records.push(row.to_record(line_no)?);
    }
    Ok(records)
}

pub fn save_jsonl(records: &[CensusRecord], path: &Path) -> Result<(), CensusFileError> {
    let io_err = |source| CensusFileError::Io { path: path.to_path_buf(), source };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(io_err)?;
    }
    let file = File::create(path).map_err(io_err)?;
    write_jsonl(records, BufWriter::new(file)).map_err(io_err)
}

pub fn load_jsonl(path: &Path) -> Result<Vec<CensusRecord>, CensusFileError> {
    let file = File::open(path).map_err(|source| CensusFileError::Io { path: path.to_path_buf(), source })?;
    read_jsonl(BufReader::new(file)).map_err(|e| match e {
        CensusFileError::Io { source, .. } => CensusFileError::Io { path: path.to_path_buf(), source },
        other => other,
    })
}

pub fn write_csv<W: Write>(records: &[CensusRecord], out: W) -> Result<(), CensusFileError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in records {
        w.write_record(CensusRow::from(r).csv_cells())?;
    }
    w.flush().map_err(|source| CensusFileError::Io { path: PathBuf::from("<output>"), source })?;
    Ok(())
}
