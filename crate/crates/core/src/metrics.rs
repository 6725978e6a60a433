//! Gate tallies and the operation-count comparison between the two adders.
//!
//! The headline count `T(N) = N² + 2N` for the constant adder counts
//! Hadamards and rotations only: each transform contributes `N(N+1)/2`, the
//! Fourier stage `N`. Bit-reversal swaps are reported on their own.

use serde::Serialize;

use crate::arithmetic::{const_adder_stages, draper_adder_stages, ConstAdderSpec, DraperAdderSpec};
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GateCounts {
    pub hadamard: usize,
    pub phase: usize,
    pub controlled_phase: usize,
    pub swap: usize,
}

impl GateCounts {
    pub fn total(&self) -> usize {
        self.hadamard + self.phase + self.controlled_phase + self.swap
    }

    /// Hadamards plus rotations, the convention behind `T(N)`.
    pub fn without_swaps(&self) -> usize {
        self.hadamard + self.phase + self.controlled_phase
    }
}

impl<'a> FromIterator<&'a Gate> for GateCounts {
    fn from_iter<I: IntoIterator<Item = &'a Gate>>(iter: I) -> Self {
        let mut counts = GateCounts::default();
        for gate in iter {
            match gate {
                Gate::Hadamard { .. } => counts.hadamard += 1,
                Gate::Phase { .. } => counts.phase += 1,
                Gate::ControlledPhase { .. } => counts.controlled_phase += 1,
                Gate::Swap { .. } => counts.swap += 1,
            }
        }
        counts
    }
}

/// Tallies for one circuit alongside the closed-form figures for a register
/// of the circuit's width.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateCountReport {
    pub n_qubits: usize,
    pub counts: GateCounts,
    pub total: usize,
    pub closed_form_qft: usize,
    pub closed_form_total: usize,
    pub draper_controlled_count: usize,
    pub swap_count: usize,
}

/// `N(N+1)/2`: Hadamards plus controlled rotations in one transform.
pub fn qft_operation_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// `T(N) = N² + 2N`.
pub fn const_adder_operation_count(n: usize) -> usize {
    n * n + 2 * n
}

/// `N(N+1)/2` controlled rotations between Draper's transforms.
pub fn draper_inner_count(n: usize) -> usize {
    n * (n + 1) / 2
}

pub fn count_gates(circuit: &Circuit) -> GateCountReport {
    let counts: GateCounts = circuit.gates().iter().collect();
    let n = circuit.n_qubits();
    GateCountReport {
        n_qubits: n,
        counts,
        total: counts.total(),
        closed_form_qft: qft_operation_count(n),
        closed_form_total: const_adder_operation_count(n),
        draper_controlled_count: draper_inner_count(n),
        swap_count: counts.swap,
    }
}

/// One row of the complexity table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComplexityRow {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "T_const")]
    pub t_const: usize,
    #[serde(rename = "T_draper_inner")]
    pub t_draper_inner: usize,
    /// Swaps in one transform, `⌊N/2⌋`. Not part of `T_const`.
    #[serde(rename = "swaps")]
    pub qft_swaps: usize,
}

/// Rows `N = 1..=n_max`, each read off constructed circuits and checked
/// against the closed forms.
pub fn complexity_table(n_max: usize) -> Result<Vec<ComplexityRow>> {
    (1..=n_max).map(complexity_row).collect()
}

fn complexity_row(n: usize) -> Result<ComplexityRow> {
    let constant = const_adder_stages(&ConstAdderSpec::new(n, 1)?);
    let draper = draper_adder_stages(&DraperAdderSpec::new(n)?);

    let full = count_gates(&constant.compose()).counts;
    let qft = count_gates(&constant.transform).counts;
    let inner = count_gates(&draper.fourier_stage).counts;

    let checks = [
        (
            "constant adder operations",
            full.without_swaps(),
            const_adder_operation_count(n),
        ),
        (
            "QFT operations",
            qft.without_swaps(),
            qft_operation_count(n),
        ),
        (
            "Draper inner controlled rotations",
            inner.controlled_phase,
            draper_inner_count(n),
        ),
        ("QFT swaps", qft.swap, n / 2),
    ];
    for (what, built, expected) in checks {
        if built != expected {
            return Err(Error::CountMismatch {
                n,
                what,
                built,
                expected,
            });
        }
    }
    Ok(ComplexityRow {
        n,
        t_const: full.without_swaps(),
        t_draper_inner: inner.controlled_phase,
        qft_swaps: qft.swap,
    })
}
