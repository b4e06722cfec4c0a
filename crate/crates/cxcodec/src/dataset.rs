//! CSV dataset transformation: complex-literal columns to representation
//! columns and back.
//!
//! Dialect: comma separator, double-quote escaping, first row is the header.
//! Target columns are replaced in place (`<col>` becomes `<col>__<method>` on
//! encode, and the suffix is stripped again on decode); every other column
//! passes through unmodified.

use std::io::{Read, Write};

use thiserror::Error;

use crate::literal::{parse_complex, render_complex};
use crate::representation::{decode, encode, normalize, Method, Representation};

/// Transformation direction. Decoding normalized columns is unsupported —
/// normalization is one-way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Encode,
    Decode,
}

/// One target column: a header name (or zero-based index, tried when no
/// header matches), the method, and whether encode output is normalized.
#[derive(Debug, Clone)]
pub struct ColumnSpec {
    pub column: String,
    pub method: Method,
    pub normalize: bool,
}

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("column `{0}` not found in header")]
    ColumnNotFound(String),
    #[error("column `{0}` targeted more than once")]
    DuplicateColumn(String),
    #[error("row {row}, column `{column}`: {message}")]
    Cell { row: u64, column: String, message: String },
    #[error("decoding normalized columns is not supported")]
    NormalizeDecode,
}

fn transform_cell(field: &str, spec: &ColumnSpec, direction: Direction) -> Result<String, String> {
    match direction {
        Direction::Encode => {
            let c = parse_complex(field).map_err(|e| e.to_string())?;
            let rep = encode(c, spec.method).map_err(|e| e.to_string())?;
            if spec.normalize {
                Ok(format!("{:e}", normalize(rep)))
            } else {
                Ok(rep.value.to_string())
            }
        }
        Direction::Decode => {
            let value: u128 = field
                .parse()
                .map_err(|_| format!("`{field}` is not a decimal 128-bit natural"))?;
            let c = decode(Representation { method: spec.method, value }).map_err(|e| e.to_string())?;
            Ok(render_complex(c))
        }
    }
}

/// Streams `input` to `output`, transforming the cells of the selected columns
/// and copying everything else through.
///
/// Cell failures report the 1-based data row and the (input) column name.
pub fn transform_csv<R: Read, W: Write>(
    input: R,
    output: W,
    specs: &[ColumnSpec],
    direction: Direction,
) -> Result<(), DatasetError> {
    if direction == Direction::Decode && specs.iter().any(|s| s.normalize) {
        return Err(DatasetError::NormalizeDecode);
    }

    let mut reader = csv::Reader::from_reader(input);
    let headers = reader.headers()?.clone();

    let mut targets: Vec<Option<&ColumnSpec>> = vec![None; headers.len()];
    for spec in specs {
        let index = headers
            .iter()
            .position(|h| h == spec.column)
            .or_else(|| spec.column.parse::<usize>().ok().filter(|&i| i < headers.len()))
            .ok_or_else(|| DatasetError::ColumnNotFound(spec.column.clone()))?;
        if targets[index].is_some() {
            return Err(DatasetError::DuplicateColumn(spec.column.clone()));
        }
        targets[index] = Some(spec);
    }

    let mut writer = csv::Writer::from_writer(output);
    let out_headers: Vec<String> = headers
        .iter()
        .enumerate()
        .map(|(i, name)| match targets[i] {
            None => name.to_string(),
            Some(spec) => match direction {
                Direction::Encode => format!("{name}__{}", spec.method),
                Direction::Decode => {
                    let suffix = format!("__{}", spec.method);
                    name.strip_suffix(&suffix).unwrap_or(name).to_string()
                }
            },
        })
        .collect();
    writer.write_record(&out_headers)?;

    for (row_index, record) in reader.records().enumerate() {
        let record = record?;
        let mut out: Vec<String> = Vec::with_capacity(record.len());
        for (i, field) in record.iter().enumerate() {
            match targets.get(i).copied().flatten() {
                None => out.push(field.to_string()),
                Some(spec) => {
                    let cell = transform_cell(field, spec, direction).map_err(|message| {
                        DatasetError::Cell {
                            row: row_index as u64 + 1,
                            column: headers[i].to_string(),
                            message,
                        }
                    })?;
                    out.push(cell);
                }
            }
        }
        writer.write_record(&out)?;
    }
    writer.flush()?;
    Ok(())
}
