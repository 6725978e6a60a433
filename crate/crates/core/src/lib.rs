//! Statevector simulation of QFT-based modular adders.
//!
//! The crate builds two adders as plain gate lists and runs them on a dense
//! statevector:
//!
//! * a register-by-constant adder, `|a⟩ ↦ |a + c mod 2^N⟩`, which needs only
//!   `N` single-qubit phase gates between a QFT and its inverse;
//! * Draper's register-by-register adder, `|a, b⟩ ↦ |a, a + b mod 2^N⟩`, with
//!   `N(N+1)/2` controlled rotations between the transforms.
//!
//! [`oracle`] rebuilds the same operators as dense matrices from closed forms
//! (DFT matrix, diagonal phase matrix, permutation matrices) so the circuits
//! can be checked against an independent route.
//!
//! ```
//! use fourier_adder::{apply_const_add, StateVector};
//!
//! let mut state = StateVector::basis(3, 5).unwrap();
//! apply_const_add(&mut state, 6).unwrap();
//! let expected = StateVector::basis(3, 3).unwrap();
//! assert!(state.fidelity(&expected).unwrap() > 1.0 - 1e-10);
//! ```

pub mod arithmetic;
pub mod circuit;
pub mod error;
pub mod json;
pub mod metrics;
pub mod oracle;
pub mod qft;
pub mod state;

pub use arithmetic::{
    apply_const_add, const_adder_circuit, const_adder_stages, draper_adder_circuit,
    draper_adder_stages, phase_adder_circuit, AdderStages, ConstAdderSpec, DraperAdderSpec,
};
pub use circuit::{Circuit, Gate, GateKind};
pub use error::{Error, Result};
pub use metrics::{complexity_table, count_gates, ComplexityRow, GateCountReport, GateCounts};
pub use oracle::{CheckReport, DenseUnitary};
pub use qft::{inverse_qft_circuit, qft_circuit};
pub use state::{Amplitude, StateVector};
