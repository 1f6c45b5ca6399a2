//! Grid files: a JSON header `<name>.json` next to a raw payload
//! `<name>.f64` of little-endian doubles, plus CSV import.

use monodir_core::RealGrid;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Fs { path: PathBuf, source: std::io::Error },
    #[error("{path}: malformed header: {source}")]
    Header { path: PathBuf, source: serde_json::Error },
    #[error("{path}: unsupported {field} {value:?}")]
    Unsupported { path: PathBuf, field: &'static str, value: String },
    #[error("{path}: payload of {bytes} bytes is not a whole number of doubles")]
    Ragged { path: PathBuf, bytes: usize },
    #[error("{path}: {source}")]
    Csv { path: PathBuf, source: csv::Error },
    #[error("{path}: row {row} has {got} fields, expected {expected}")]
    CsvShape { path: PathBuf, row: usize, got: usize, expected: usize },
    #[error("{path}: row {row}, field {col}: {text:?} is not a number")]
    CsvNumber { path: PathBuf, row: usize, col: usize, text: String },
    #[error("{path}: {source}")]
    Grid { path: PathBuf, source: monodir_core::Error },
}

pub const DTYPE: &str = "f64le";
pub const LAYOUT: &str = "row-major";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridHeader {
    pub n: usize,
    pub dtype: String,
    pub layout: String,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

fn fs_err(path: &Path) -> impl FnOnce(std::io::Error) -> IoError + '_ {
    move |source| IoError::Fs { path: path.to_path_buf(), source }
}

/// Payload path for a header path (`x.json` -> `x.f64`).
pub fn payload_path(header: &Path) -> PathBuf {
    header.with_extension("f64")
}

pub fn save_grid(grid: &RealGrid, header_path: &Path, meta: BTreeMap<String, String>) -> Result<(), IoError> {
    let header = GridHeader { n: grid.n(), dtype: DTYPE.into(), layout: LAYOUT.into(), meta };
    let mut text = serde_json::to_string_pretty(&header).expect("header serializes");
    text.push('\n');
    fs::write(header_path, text).map_err(fs_err(header_path))?;
    let bytes: Vec<u8> = grid.data().iter().flat_map(|v| v.to_le_bytes()).collect();
    let payload = payload_path(header_path);
    fs::write(&payload, bytes).map_err(fs_err(&payload))
}

/// Loads a header/payload pair, or a CSV file when the extension is `.csv`.
pub fn load_grid(path: &Path) -> Result<RealGrid, IoError> {
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        return load_csv(path);
    }
    let text = fs::read_to_string(path).map_err(fs_err(path))?;
    let header: GridHeader =
        serde_json::from_str(&text).map_err(|source| IoError::Header { path: path.to_path_buf(), source })?;
    if header.dtype != DTYPE {
        return Err(IoError::Unsupported { path: path.into(), field: "dtype", value: header.dtype });
    }
    if header.layout != LAYOUT {
        return Err(IoError::Unsupported { path: path.into(), field: "layout", value: header.layout });
    }
    let payload = payload_path(path);
    let bytes = fs::read(&payload).map_err(fs_err(&payload))?;
    if bytes.len() % 8 != 0 {
        return Err(IoError::Ragged { path: payload, bytes: bytes.len() });
    }
    let data = bytes.chunks_exact(8).map(|c| f64::from_le_bytes(c.try_into().expect("8-byte chunk"))).collect();
    RealGrid::new(header.n, data).map_err(|source| IoError::Grid { path: payload, source })
}

/// `n` rows of `n` comma-separated numbers, no header line.
pub fn load_csv(path: &Path) -> Result<RealGrid, IoError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|source| IoError::Csv { path: path.into(), source })?;
    let mut data = Vec::new();
    let mut width = None;
    let mut rows = 0;
    for (row, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|source| IoError::Csv { path: path.into(), source })?;
        let expected = *width.get_or_insert(rec.len());
        if rec.len() != expected {
            return Err(IoError::CsvShape { path: path.into(), row, got: rec.len(), expected });
        }
        for (col, field) in rec.iter().enumerate() {
            let v = field
                .parse::<f64>()
                .map_err(|_| IoError::CsvNumber { path: path.into(), row, col, text: field.into() })?;
            data.push(v);
        }
        rows += 1;
    }
    if width.is_some_and(|w| w != rows) {
        return Err(IoError::CsvShape { path: path.into(), row: rows, got: rows, expected: width.unwrap_or(0) });
    }
    RealGrid::new(rows, data).map_err(|source| IoError::Grid { path: path.into(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.json");
        let g = RealGrid::from_fn(4, |r, c| (r as f64 + 0.1).powf(c as f64 + 0.3) - 1e-300).unwrap();
        save_grid(&g, &p, BTreeMap::new()).unwrap();
        let back = load_grid(&p).unwrap();
        for (a, b) in g.data().iter().zip(back.data()) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn payload_size_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.json");
        save_grid(&RealGrid::zeros(4).unwrap(), &p, BTreeMap::new()).unwrap();
        let bytes: Vec<u8> = (0..17).flat_map(|i| (i as f64).to_le_bytes()).collect();
        fs::write(payload_path(&p), bytes).unwrap();
        match load_grid(&p) {
            Err(IoError::Grid { source: monodir_core::Error::SizeMismatch { expected: 16, got: 17 }, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_odd_side_and_bad_dtype() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.json");
        fs::write(&p, r#"{"n": 3, "dtype": "f64le", "layout": "row-major"}"#).unwrap();
        fs::write(payload_path(&p), vec![0u8; 72]).unwrap();
        assert!(matches!(load_grid(&p), Err(IoError::Grid { source: monodir_core::Error::OddSide(3), .. })));
        fs::write(&p, r#"{"n": 2, "dtype": "f32le", "layout": "row-major"}"#).unwrap();
        assert!(matches!(load_grid(&p), Err(IoError::Unsupported { field: "dtype", .. })));
    }

    #[test]
    fn csv_import() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.csv");
        let mut text = String::new();
        for r in 0..64 {
            let row: Vec<String> = (0..64).map(|c| format!("{}", (r * 64 + c) as f64 * 0.5)).collect();
            text.push_str(&row.join(","));
            text.push('\n');
        }
        fs::write(&p, text).unwrap();
        let g = load_grid(&p).unwrap();
        assert_eq!(g.n(), 64);
        assert_eq!(g.get(2, 3), (2 * 64 + 3) as f64 * 0.5);
        fs::write(&p, "1,2\n3\n").unwrap();
        assert!(matches!(load_grid(&p), Err(IoError::CsvShape { .. })));
        fs::write(&p, "1,x\n3,4\n").unwrap();
        assert!(matches!(load_grid(&p), Err(IoError::CsvNumber { .. })));
    }
}
