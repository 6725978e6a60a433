//! Quantum Fourier transform circuits.
//!
//! [`qft_circuit`] realizes the unitary `(1/√2^N)[ω^{jk}]`, `ω = e^{2πi/2^N}`,
//! including the closing bit-reversal swaps, so its matrix is the DFT matrix
//! itself and not a bit-reversed variant.

use std::f64::consts::PI;

use crate::circuit::{Circuit, Gate};
use crate::error::Result;

/// Angle of the rotation `R_l = diag(1, e^{2πi/2^l})`.
pub fn rotation_angle(l: u32) -> f64 {
    2.0 * PI / 2f64.powi(l as i32)
}

/// QFT over all `n_qubits` qubits.
///
/// Working from the most significant qubit down, each qubit gets a Hadamard
/// followed by controlled `R_l` rotations from every less significant qubit,
/// `l = 2` for the nearest. `⌊N/2⌋` swaps then reverse the qubit order.
pub fn qft_circuit(n_qubits: usize) -> Result<Circuit> {
    let mut circuit = Circuit::new(n_qubits)?;
    for target in (1..=n_qubits).rev() {
        circuit.push(Gate::Hadamard { target })?;
        for control in (1..target).rev() {
            circuit.push(Gate::ControlledPhase {
                control,
                target,
                angle: rotation_angle((target - control + 1) as u32),
            })?;
        }
    }
    for q in 1..=n_qubits / 2 {
        circuit.push(Gate::Swap {
            target: q,
            other: n_qubits + 1 - q,
        })?;
    }
    Ok(circuit)
}

/// Adjoint of [`qft_circuit`].
pub fn inverse_qft_circuit(n_qubits: usize) -> Result<Circuit> {
    Ok(qft_circuit(n_qubits)?.inverse())
}
