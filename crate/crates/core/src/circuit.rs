//! Gate lists and their interpreter.
//!
//! A [`Circuit`] is applied left to right: `gates[0]` acts on the state first.
//! In matrix terms the circuit `[g0, g1, g2]` is the product `G2·G1·G0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::StateVector;

/// Largest register width a circuit may address. Circuits are only gate
/// lists, so this is far above what a [`StateVector`] can hold.
pub const MAX_CIRCUIT_QUBITS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Gate {
    #[serde(rename = "h")]
    Hadamard {
        target: usize,
    },
    /// `diag(1, e^{i·angle})`.
    Phase {
        target: usize,
        angle: f64,
    },
    /// Phase `e^{i·angle}` on the subspace where both qubits are 1.
    #[serde(rename = "cphase")]
    ControlledPhase {
        control: usize,
        target: usize,
        angle: f64,
    },
    Swap {
        target: usize,
        other: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Hadamard,
    Phase,
    ControlledPhase,
    Swap,
}

impl Gate {
    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Hadamard { .. } => GateKind::Hadamard,
            Gate::Phase { .. } => GateKind::Phase,
            Gate::ControlledPhase { .. } => GateKind::ControlledPhase,
            Gate::Swap { .. } => GateKind::Swap,
        }
    }

    pub fn is_entangling(&self) -> bool {
        matches!(self, Gate::ControlledPhase { .. } | Gate::Swap { .. })
    }

    pub fn angle(&self) -> Option<f64> {
        match *self {
            Gate::Phase { angle, .. } | Gate::ControlledPhase { angle, .. } => Some(angle),
            _ => None,
        }
    }

    /// The adjoint gate. Hadamard and swap are their own inverses.
    pub fn inverse(&self) -> Gate {
        match *self {
            Gate::Phase { target, angle } => Gate::Phase {
                target,
                angle: -angle,
            },
            Gate::ControlledPhase {
                control,
                target,
                angle,
            } => Gate::ControlledPhase {
                control,
                target,
                angle: -angle,
            },
            g => g,
        }
    }

    /// Same gate with every qubit index moved up by `offset`.
    pub fn shifted(&self, offset: usize) -> Gate {
        match *self {
            Gate::Hadamard { target } => Gate::Hadamard {
                target: target + offset,
            },
            Gate::Phase { target, angle } => Gate::Phase {
                target: target + offset,
                angle,
            },
            Gate::ControlledPhase {
                control,
                target,
                angle,
            } => Gate::ControlledPhase {
                control: control + offset,
                target: target + offset,
                angle,
            },
            Gate::Swap { target, other } => Gate::Swap {
                target: target + offset,
                other: other + offset,
            },
        }
    }

    fn validate(&self, n_qubits: usize) -> Result<()> {
        let in_range = |q: usize| {
            if q == 0 || q > n_qubits {
                Err(Error::QubitOutOfRange { qubit: q, n_qubits })
            } else {
                Ok(())
            }
        };
        match *self {
            Gate::Hadamard { target } => in_range(target),
            Gate::Phase { target, angle } => {
                in_range(target)?;
                finite(angle)
            }
            Gate::ControlledPhase {
                control,
                target,
                angle,
            } => {
                in_range(control)?;
                in_range(target)?;
                if control == target {
                    return Err(Error::RepeatedQubit(target));
                }
                finite(angle)
            }
            Gate::Swap { target, other } => {
                in_range(target)?;
                in_range(other)?;
                if target == other {
                    return Err(Error::RepeatedQubit(target));
                }
                Ok(())
            }
        }
    }

    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        match *self {
            Gate::Hadamard { target } => state.apply_hadamard(target),
            Gate::Phase { target, angle } => state.apply_phase(target, angle),
            Gate::ControlledPhase {
                control,
                target,
                angle,
            } => state.apply_controlled_phase(control, target, angle),
            Gate::Swap { target, other } => state.apply_swap(target, other),
        }
    }
}

fn finite(angle: f64) -> Result<()> {
    if angle.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite("gate angle"))
    }
}

/// An ordered gate list over `n_qubits` qubits. Every gate is validated
/// against the width when it is added, so a built circuit is always runnable
/// on a state of the same width.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Circuit {
    #[serde(rename = "n")]
    n_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Result<Self> {
        crate::state::check_qubit_count(n_qubits, MAX_CIRCUIT_QUBITS)?;
        Ok(Self {
            n_qubits,
            gates: Vec::new(),
        })
    }

    pub fn from_gates(n_qubits: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self> {
        let mut circuit = Self::new(n_qubits)?;
        for gate in gates {
            circuit.push(gate)?;
        }
        Ok(circuit)
    }

    pub fn push(&mut self, gate: Gate) -> Result<&mut Self> {
        gate.validate(self.n_qubits)?;
        self.gates.push(gate);
        Ok(self)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    fn same_width(&self, other: usize) -> Result<()> {
        if self.n_qubits != other {
            return Err(Error::SizeMismatch {
                left: self.n_qubits,
                right: other,
            });
        }
        Ok(())
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Circuit) -> Result<Circuit> {
        self.same_width(other.n_qubits)?;
        let mut gates = Vec::with_capacity(self.len() + other.len());
        gates.extend_from_slice(&self.gates);
        gates.extend_from_slice(&other.gates);
        Ok(Circuit {
            n_qubits: self.n_qubits,
            gates,
        })
    }

    /// Gate order reversed and every angle negated.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }

    /// Places `sub` onto qubits `offset + 1 ..= offset + sub.n_qubits()`.
    pub fn append_shifted(&mut self, sub: &Circuit, offset: usize) -> Result<&mut Self> {
        for gate in &sub.gates {
            self.push(gate.shifted(offset))?;
        }
        Ok(self)
    }

    /// Applies the gates to `state` in list order.
    pub fn run(&self, state: &mut StateVector) -> Result<()> {
        self.same_width(state.n_qubits())?;
        for gate in &self.gates {
            gate.apply(state)?;
        }
        Ok(())
    }
}

#[derive(Deserialize)]
struct RawCircuit {
    n: usize,
    gates: Vec<Gate>,
}

impl<'de> Deserialize<'de> for Circuit {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCircuit::deserialize(de)?;
        Circuit::from_gates(raw.n, raw.gates).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn empty_circuit_is_identity() {
        let c = Circuit::new(3).unwrap();
        let mut s = StateVector::basis(3, 6).unwrap();
        c.run(&mut s).unwrap();
        assert_eq!(s, StateVector::basis(3, 6).unwrap());
    }

    #[test]
    fn single_hadamard() {
        let c = Circuit::from_gates(1, [Gate::Hadamard { target: 1 }]).unwrap();
        let mut s = StateVector::basis(1, 0).unwrap();
        c.run(&mut s).unwrap();
        for a in s.amplitudes() {
            assert!((a.re - FRAC_1_SQRT_2).abs() < 1e-15 && a.im == 0.0);
        }
    }

    #[test]
    fn validation() {
        let mut c = Circuit::new(2).unwrap();
        assert!(c.push(Gate::Hadamard { target: 3 }).is_err());
        assert!(c
            .push(Gate::ControlledPhase {
                control: 1,
                target: 1,
                angle: 1.0
            })
            .is_err());
        assert!(c
            .push(Gate::Swap {
                target: 2,
                other: 2
            })
            .is_err());
        assert!(c
            .push(Gate::Phase {
                target: 1,
                angle: f64::INFINITY
            })
            .is_err());
        assert!(c.is_empty());
        assert!(Circuit::new(0).is_err());

        let mut s = StateVector::basis(3, 0).unwrap();
        assert_eq!(
            c.run(&mut s),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn concat_and_inverse() {
        let empty = Circuit::new(2).unwrap();
        let x = Circuit::from_gates(
            2,
            [
                Gate::Hadamard { target: 2 },
                Gate::ControlledPhase {
                    control: 1,
                    target: 2,
                    angle: 0.3,
                },
            ],
        )
        .unwrap();
        assert_eq!(empty.concat(&x).unwrap(), x);
        assert!(x.concat(&Circuit::new(3).unwrap()).is_err());

        let p = Circuit::from_gates(
            1,
            [Gate::Phase {
                target: 1,
                angle: PI / 3.0,
            }],
        )
        .unwrap();
        assert_eq!(
            p.inverse().gates(),
            &[Gate::Phase {
                target: 1,
                angle: -PI / 3.0
            }]
        );
    }

    #[test]
    fn json_shape() {
        let c = Circuit::from_gates(
            2,
            [
                Gate::Hadamard { target: 1 },
                Gate::ControlledPhase {
                    control: 2,
                    target: 1,
                    angle: std::f64::consts::FRAC_PI_2,
                },
                Gate::Swap {
                    target: 1,
                    other: 2,
                },
                Gate::Phase {
                    target: 2,
                    angle: 0.5,
                },
            ],
        )
        .unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(
            text,
            r#"{"n":2,"gates":[{"kind":"h","target":1},{"kind":"cphase","control":2,"target":1,"angle":1.5707963267948966},{"kind":"swap","target":1,"other":2},{"kind":"phase","target":2,"angle":0.5}]}"#
        );
        let back: Circuit = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);

        let bad = r#"{"n":1,"gates":[{"kind":"swap","target":1,"other":2}]}"#;
        assert!(serde_json::from_str::<Circuit>(bad).is_err());
    }
}
