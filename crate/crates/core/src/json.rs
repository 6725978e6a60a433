//! JSON interchange for states, matrices and complexity tables.
//!
//! Complex numbers are written as `[re, im]` pairs. Doubles go through
//! `serde_json`'s shortest round-trip formatting, so parsing a written value
//! gives back the identical bits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::DenseUnitary;
use crate::state::{Amplitude, StateVector};

#[derive(Debug, Serialize, Deserialize)]
struct StateJson {
    n: usize,
    amplitudes: Vec<[f64; 2]>,
}

fn pair(a: &Amplitude) -> [f64; 2] {
    [a.re, a.im]
}

pub fn state_to_json(state: &StateVector) -> String {
    serde_json::to_string(&StateJson {
        n: state.n_qubits(),
        amplitudes: state.amplitudes().iter().map(pair).collect(),
    })
    .expect("plain numeric data serializes")
}

/// Parses `{"n": N, "amplitudes": [[re, im], ...]}`. The amplitude count
/// must equal `2^N` and the state must be normalized.
pub fn state_from_json(text: &str) -> Result<StateVector> {
    let raw: StateJson = serde_json::from_str(text)?;
    let expected = 1usize.checked_shl(raw.n as u32).unwrap_or(0);
    if raw.amplitudes.len() != expected {
        return Err(Error::Json(format!(
            "n = {} needs {} amplitudes, found {}",
            raw.n,
            expected,
            raw.amplitudes.len()
        )));
    }
    let amplitudes = raw
        .amplitudes
        .into_iter()
        .map(|[re, im]| Amplitude::new(re, im))
        .collect();
    StateVector::from_amplitudes(amplitudes)
}

#[derive(Debug, Serialize)]
struct MatrixJson {
    n: usize,
    matrix: Vec<Vec<[f64; 2]>>,
}

/// `{"n": N, "matrix": [[[re, im], ...], ...]}`, rows outermost.
pub fn matrix_to_json(matrix: &DenseUnitary) -> String {
    serde_json::to_string(&MatrixJson {
        n: matrix.n_qubits(),
        matrix: matrix
            .rows()
            .map(|r| r.iter().map(pair).collect())
            .collect(),
    })
    .expect("plain numeric data serializes")
}
