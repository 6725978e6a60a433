use serde::Serialize;

use fourier_adder::metrics::complexity_table;
use fourier_adder::oracle::{circuit_to_matrix, dft_matrix};
use fourier_adder::{
    const_adder_circuit, count_gates, qft_circuit, Amplitude, ConstAdderSpec, StateVector,
};

/// Widest register the page offers; keeps the bar chart legible.
pub const MAX_DEMO_QUBITS: usize = 8;
pub const MAX_MATRIX_QUBITS: usize = 6;

#[derive(Serialize)]
struct AddResult {
    n: usize,
    constant: i64,
    canonical_constant: u64,
    before: Vec<[f64; 2]>,
    after: Vec<[f64; 2]>,
    gate_total: usize,
}

fn check_width(n: usize) -> Result<(), String> {
    if n == 0 || n > MAX_DEMO_QUBITS {
        return Err(format!(
            "register width must be 1..={MAX_DEMO_QUBITS}, got {n}"
        ));
    }
    Ok(())
}

fn parse_values(values: &str) -> Result<Vec<u64>, String> {
    let parsed = values
        .split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(|v| {
            v.parse::<u64>()
                .map_err(|_| format!("not a basis value: {v:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if parsed.is_empty() {
        return Err("give at least one basis value".into());
    }
    Ok(parsed)
}

fn pairs(state: &StateVector) -> Vec<[f64; 2]> {
    state.amplitudes().iter().map(|a| [a.re, a.im]).collect()
}

pub fn const_add(n: usize, constant: i64, values: &str) -> Result<String, String> {
    check_width(n)?;
    let values = parse_values(values)?;
    let weight = Amplitude::new(1.0 / (values.len() as f64).sqrt(), 0.0);
    let terms: Vec<_> = values.iter().map(|&v| (v, weight)).collect();
    let before = StateVector::superposition(n, &terms).map_err(|e| e.to_string())?;

    let spec = ConstAdderSpec::new(n, constant).map_err(|e| e.to_string())?;
    let circuit = const_adder_circuit(&spec);
    let mut after = before.clone();
    circuit.run(&mut after).map_err(|e| e.to_string())?;

    let result = AddResult {
        n,
        constant,
        canonical_constant: spec.canonical_constant(),
        before: pairs(&before),
        after: pairs(&after),
        gate_total: count_gates(&circuit).total,
    };
    Ok(serde_json::to_string(&result).expect("plain data serializes"))
}

#[derive(Serialize)]
struct MatrixView {
    n: usize,
    /// `arg` of each entry, rows outermost.
    phases: Vec<Vec<f64>>,
    magnitudes: Vec<Vec<f64>>,
    max_error: f64,
}

pub fn qft_matrix(n: usize) -> Result<String, String> {
    if n == 0 || n > MAX_MATRIX_QUBITS {
        return Err(format!(
            "matrix view needs 1..={MAX_MATRIX_QUBITS} qubits, got {n}"
        ));
    }
    let circuit = qft_circuit(n).map_err(|e| e.to_string())?;
    let realized = circuit_to_matrix(&circuit).map_err(|e| e.to_string())?;
    let oracle = dft_matrix(n).map_err(|e| e.to_string())?;
    let view = MatrixView {
        n,
        phases: realized
            .rows()
            .map(|r| r.iter().map(|a| a.arg()).collect())
            .collect(),
        magnitudes: realized
            .rows()
            .map(|r| r.iter().map(|a| a.norm()).collect())
            .collect(),
        max_error: realized.max_abs_diff(&oracle),
    };
    Ok(serde_json::to_string(&view).expect("plain data serializes"))
}

pub fn gate_counts(n_max: usize) -> Result<String, String> {
    if n_max == 0 || n_max > 32 {
        return Err(format!("n_max must be 1..=32, got {n_max}"));
    }
    let rows = complexity_table(n_max).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&rows).expect("plain data serializes"))
}
