//! QFT-based adders.
//!
//! * Register-by-constant: `U₊(c) = QFT† · U_φ(c) · QFT` on a single `N`-qubit
//!   register. The Fourier-domain stage is `N` independent phase gates, with
//!   qubit `q_t` rotated by `c·π/2^(N−t)`. No ancilla holds `c`.
//! * Register-by-register (Draper): `|a, b⟩ ↦ |a, a + b mod 2^N⟩` on `2N`
//!   qubits, register `a` on qubits `1..=N` and `b` on `N+1..=2N`. Between the
//!   transforms sit `N(N+1)/2` controlled rotations.
//!
//! Both are modular: there is no carry-out qubit.

use std::f64::consts::PI;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::qft::{qft_circuit, rotation_angle};
use crate::state::StateVector;

/// Widest register an adder can be built for. Constants are reduced modulo
/// `2^N` into a `u64`.
pub const MAX_ADDER_QUBITS: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstAdderSpec {
    n_qubits: usize,
    constant: i64,
    canonical: u64,
}

impl ConstAdderSpec {
    pub fn new(n_qubits: usize, constant: i64) -> Result<Self> {
        crate::state::check_qubit_count(n_qubits, MAX_ADDER_QUBITS)?;
        let modulus = 1i128 << n_qubits;
        let canonical = (constant as i128).rem_euclid(modulus) as u64;
        Ok(Self {
            n_qubits,
            constant,
            canonical,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn constant(&self) -> i64 {
        self.constant
    }

    /// `c mod 2^N` in `[0, 2^N)`.
    pub fn canonical_constant(&self) -> u64 {
        self.canonical
    }

    /// Angle for the phase gate on qubit `t`, reduced into `[0, 2π)`.
    ///
    /// `c·π/2^(N−t)` only matters modulo `2π`, i.e. only `c mod 2^(N−t+1)`
    /// contributes. Reducing the integer first keeps the angle exact to one
    /// rounding instead of carrying `2^N·π`-sized values.
    pub fn phase_angle(&self, t: usize) -> f64 {
        let shift = (self.n_qubits - t) as u32;
        let window = self.canonical & ((2u64 << shift) - 1);
        PI * window as f64 / 2f64.powi(shift as i32)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DraperAdderSpec {
    n_per_operand: usize,
}

impl DraperAdderSpec {
    pub fn new(n_per_operand: usize) -> Result<Self> {
        crate::state::check_qubit_count(n_per_operand, MAX_ADDER_QUBITS / 2)?;
        Ok(Self { n_per_operand })
    }

    pub fn n_per_operand(&self) -> usize {
        self.n_per_operand
    }

    pub fn total_qubits(&self) -> usize {
        2 * self.n_per_operand
    }

    /// Basis index of `|a, b⟩`: `a` in the low bits, `b` above it.
    pub fn encode(&self, a: u64, b: u64) -> Result<u64> {
        let bound = 1u64 << self.n_per_operand;
        for value in [a, b] {
            if value >= bound {
                return Err(Error::ValueOutOfRange { value, bound });
            }
        }
        Ok(a | (b << self.n_per_operand))
    }

    pub fn decode(&self, index: u64) -> (u64, u64) {
        let mask = (1u64 << self.n_per_operand) - 1;
        (index & mask, index >> self.n_per_operand)
    }
}

/// An adder split into its transform, Fourier-domain and inverse-transform
/// stages. All three share the adder's full width.
#[derive(Debug, Clone, PartialEq)]
pub struct AdderStages {
    pub transform: Circuit,
    pub fourier_stage: Circuit,
    pub inverse_transform: Circuit,
}

impl AdderStages {
    pub fn compose(&self) -> Circuit {
        self.transform
            .concat(&self.fourier_stage)
            .and_then(|c| c.concat(&self.inverse_transform))
            .expect("stages share one width")
    }
}

/// `U_φ(c)`: one phase gate per qubit, `q_t` rotated by `c·π/2^(N−t)`.
///
/// Gates are emitted for every qubit even when the angle is zero.
pub fn phase_adder_circuit(spec: &ConstAdderSpec) -> Circuit {
    let n = spec.n_qubits();
    let gates = (1..=n).map(|t| Gate::Phase {
        target: t,
        angle: spec.phase_angle(t),
    });
    Circuit::from_gates(n, gates).expect("targets lie in 1..=N")
}

pub fn const_adder_stages(spec: &ConstAdderSpec) -> AdderStages {
    let n = spec.n_qubits();
    let transform = qft_circuit(n).expect("width validated by spec");
    AdderStages {
        inverse_transform: transform.inverse(),
        transform,
        fourier_stage: phase_adder_circuit(spec),
    }
}

/// `U₊(c)`, mapping `|a⟩` to `|a + c mod 2^N⟩`.
pub fn const_adder_circuit(spec: &ConstAdderSpec) -> Circuit {
    const_adder_stages(spec).compose()
}

/// Adds `c` to the register held by `state` by running [`const_adder_circuit`].
pub fn apply_const_add(state: &mut StateVector, c: i64) -> Result<()> {
    let spec = ConstAdderSpec::new(state.n_qubits(), c)?;
    const_adder_circuit(&spec).run(state)
}

pub fn draper_adder_stages(spec: &DraperAdderSpec) -> AdderStages {
    let n = spec.n_per_operand();
    let width = spec.total_qubits();
    let local_qft = qft_circuit(n).expect("width validated by spec");

    let mut transform = Circuit::new(width).expect("width validated by spec");
    transform
        .append_shifted(&local_qft, n)
        .expect("register b lies in N+1..=2N");

    // After the transform, b's local qubit t' carries phase ω^{b·2^(t'-1)·k}.
    // Adding a contributes 2π·2^(s-1)·2^(t'-1)/2^N per pair of set bits, which
    // is a whole turn once s + t' > N + 1, so those rotations are dropped.
    let mut fourier_stage = Circuit::new(width).expect("width validated by spec");
    for local_target in 1..=n {
        for control in 1..=(n + 1 - local_target) {
            let l = (n + 2 - control - local_target) as u32;
            fourier_stage
                .push(Gate::ControlledPhase {
                    control,
                    target: n + local_target,
                    angle: rotation_angle(l),
                })
                .expect("indices lie in 1..=2N");
        }
    }

    AdderStages {
        inverse_transform: transform.inverse(),
        transform,
        fourier_stage,
    }
}

/// Draper's adder `|a, b⟩ ↦ |a, a + b mod 2^N⟩`.
pub fn draper_adder_circuit(spec: &DraperAdderSpec) -> Circuit {
    draper_adder_stages(spec).compose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::GateKind;

    fn assert_basis(state: &StateVector, value: u64) {
        let expected = StateVector::basis(state.n_qubits(), value).unwrap();
        let f = state.fidelity(&expected).unwrap();
        assert!(f >= 1.0 - 1e-10, "fidelity {f} with |{value}⟩");
    }

    #[test]
    fn canonical_constant() {
        let cases = [(1, 1, 1), (3, -2, 6), (2, 5, 1), (4, 16, 0), (4, -17, 15)];
        for (n, c, canon) in cases {
            let spec = ConstAdderSpec::new(n, c).unwrap();
            assert_eq!(spec.canonical_constant(), canon, "n={n} c={c}");
            let m = 1i64 << n;
            assert_eq!(spec.canonical_constant() as i64, ((c % m) + m) % m);
        }
        assert!(ConstAdderSpec::new(0, 1).is_err());
        let wide = ConstAdderSpec::new(62, i64::MIN).unwrap();
        assert_eq!(wide.canonical_constant(), 0);
    }

    #[test]
    fn phase_stage_gates() {
        let one = phase_adder_circuit(&ConstAdderSpec::new(1, 1).unwrap());
        assert_eq!(
            one.gates(),
            &[Gate::Phase {
                target: 1,
                angle: PI
            }]
        );

        let two = phase_adder_circuit(&ConstAdderSpec::new(2, 1).unwrap());
        assert_eq!(
            two.gates(),
            &[
                Gate::Phase {
                    target: 1,
                    angle: PI / 2.0
                },
                Gate::Phase {
                    target: 2,
                    angle: PI
                },
            ]
        );

        let five = phase_adder_circuit(&ConstAdderSpec::new(5, 7).unwrap());
        assert_eq!(five.len(), 5);
        assert!(five.gates().iter().all(|g| g.kind() == GateKind::Phase));
    }

    #[test]
    fn phase_angle_is_reduced_literal_angle() {
        for n in 1..=10 {
            for c in [0i64, 1, 3, 5, 41, 255, 1023] {
                let spec = ConstAdderSpec::new(n, c).unwrap();
                for t in 1..=n {
                    let literal = spec.canonical_constant() as f64 * PI / 2f64.powi((n - t) as i32);
                    let turns = (literal - spec.phase_angle(t)) / (2.0 * PI);
                    assert!((turns - turns.round()).abs() < 1e-12);
                    assert!((0.0..2.0 * PI).contains(&spec.phase_angle(t)));
                }
            }
        }
    }

    #[test]
    fn const_adder_examples() {
        let mut s = StateVector::basis(2, 3).unwrap();
        apply_const_add(&mut s, 1).unwrap();
        assert_basis(&s, 0);

        for a in 0..8 {
            let mut s = StateVector::basis(3, a).unwrap();
            apply_const_add(&mut s, 0).unwrap();
            assert_basis(&s, a);
        }

        let mut s = StateVector::basis(4, 11).unwrap();
        apply_const_add(&mut s, 5).unwrap();
        assert_basis(&s, 0);

        let mut s = StateVector::basis(3, 5).unwrap();
        apply_const_add(&mut s, -2).unwrap();
        assert_basis(&s, 3);
    }

    #[test]
    fn const_adder_shifts_superposition() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut s = StateVector::superposition(
            2,
            &[
                (1, num_complex::Complex64::new(h, 0.0)),
                (2, num_complex::Complex64::new(h, 0.0)),
            ],
        )
        .unwrap();
        apply_const_add(&mut s, 1).unwrap();
        for (j, expected) in [0.0, 0.0, 0.5, 0.5].iter().enumerate() {
            assert!((s.probabilities()[j] - expected).abs() < 1e-12);
        }
        assert!((s.amplitudes()[2].re - h).abs() < 1e-10);
        assert!((s.amplitudes()[3].re - h).abs() < 1e-10);

        let dim = 8;
        let u = 1.0 / (dim as f64).sqrt();
        let mut s =
            StateVector::from_amplitudes(vec![num_complex::Complex64::new(u, 0.0); dim]).unwrap();
        apply_const_add(&mut s, 3).unwrap();
        for a in s.amplitudes() {
            assert!((a - num_complex::Complex64::new(u, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn draper_examples() {
        let spec = DraperAdderSpec::new(2).unwrap();
        let circuit = draper_adder_circuit(&spec);
        for ((a, b), (ea, eb)) in [((1, 2), (1, 3)), ((3, 3), (3, 2))] {
            let mut s = StateVector::basis(4, spec.encode(a, b).unwrap()).unwrap();
            circuit.run(&mut s).unwrap();
            assert_basis(&s, spec.encode(ea, eb).unwrap());
        }
        assert_eq!(spec.decode(spec.encode(3, 1).unwrap()), (3, 1));
        assert!(spec.encode(4, 0).is_err());
    }

    #[test]
    fn draper_fourier_stage_counts() {
        for n in 1..=16 {
            let stages = draper_adder_stages(&DraperAdderSpec::new(n).unwrap());
            assert_eq!(stages.fourier_stage.len(), n * (n + 1) / 2);
            for g in stages.fourier_stage.gates() {
                let Gate::ControlledPhase {
                    control, target, ..
                } = *g
                else {
                    panic!("unexpected gate {g:?}");
                };
                assert!(control <= n && target > n);
            }
        }
        assert_eq!(
            draper_adder_stages(&DraperAdderSpec::new(4).unwrap())
                .fourier_stage
                .len(),
            10
        );
    }
}
