//! Dense statevector and the in-place gate kernels.
//!
//! Qubits are numbered from 1. Qubit `q_k` is bit `k - 1` of the basis index,
//! so a register holding `|a⟩` has `a = Σ 2^(k-1) a_k` with `q_1` least
//! significant. Every kernel walks the amplitude array once, touching only the
//! index strata selected by the gate's bit masks.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A single complex amplitude.
pub type Amplitude = Complex64;

/// Largest register a [`StateVector`] will allocate.
pub const MAX_QUBITS: usize = 26;

/// Tolerance used when checking that caller-supplied states are normalized.
pub const NORM_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Amplitude>,
}

/// Opens a zero bit at the position of `mask` (a single set bit), shifting
/// the higher bits of `x` up by one.
#[inline]
fn insert_zero_bit(x: usize, mask: usize) -> usize {
    let low = mask - 1;
    ((x & !low) << 1) | (x & low)
}

pub(crate) fn check_qubit_count(n_qubits: usize, max: usize) -> Result<()> {
    if n_qubits == 0 || n_qubits > max {
        return Err(Error::InvalidQubitCount { got: n_qubits, max });
    }
    Ok(())
}

impl StateVector {
    /// The computational basis state `|value⟩` on `n_qubits` qubits.
    pub fn basis(n_qubits: usize, value: u64) -> Result<Self> {
        check_qubit_count(n_qubits, MAX_QUBITS)?;
        let dim = 1u64 << n_qubits;
        if value >= dim {
            return Err(Error::ValueOutOfRange { value, bound: dim });
        }
        let mut amplitudes = vec![Amplitude::new(0.0, 0.0); dim as usize];
        amplitudes[value as usize] = Amplitude::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Builds `Σ w_k |x_k⟩` from `(x_k, w_k)` pairs. Weights are used as given
    /// and must already be normalized.
    pub fn superposition(n_qubits: usize, terms: &[(u64, Amplitude)]) -> Result<Self> {
        check_qubit_count(n_qubits, MAX_QUBITS)?;
        let dim = 1u64 << n_qubits;
        let mut amplitudes = vec![Amplitude::new(0.0, 0.0); dim as usize];
        let mut seen = vec![false; dim as usize];
        for &(value, weight) in terms {
            if value >= dim {
                return Err(Error::ValueOutOfRange { value, bound: dim });
            }
            if !(weight.re.is_finite() && weight.im.is_finite()) {
                return Err(Error::NonFinite("superposition weight"));
            }
            if std::mem::replace(&mut seen[value as usize], true) {
                return Err(Error::DuplicateValue(value));
            }
            amplitudes[value as usize] = weight;
        }
        Self::from_amplitudes(amplitudes)
    }

    /// Wraps a full amplitude vector. The length must be `2^N` and the vector
    /// normalized within [`NORM_TOLERANCE`].
    pub fn from_amplitudes(amplitudes: Vec<Amplitude>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::BadLength(len));
        }
        let n_qubits = len.trailing_zeros() as usize;
        check_qubit_count(n_qubits, MAX_QUBITS)?;
        if amplitudes
            .iter()
            .any(|a| !(a.re.is_finite() && a.im.is_finite()))
        {
            return Err(Error::NonFinite("amplitudes"));
        }
        let state = Self {
            n_qubits,
            amplitudes,
        };
        let norm_sqr = state.norm_sqr();
        if (norm_sqr - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(state)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Amplitude> {
        self.amplitudes
    }

    pub fn amplitude(&self, index: u64) -> Option<Amplitude> {
        self.amplitudes.get(index as usize).copied()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    fn mask(&self, qubit: usize) -> Result<usize> {
        if qubit == 0 || qubit > self.n_qubits {
            return Err(Error::QubitOutOfRange {
                qubit,
                n_qubits: self.n_qubits,
            });
        }
        Ok(1 << (qubit - 1))
    }

    fn pair_masks(&self, a: usize, b: usize) -> Result<(usize, usize)> {
        let (ma, mb) = (self.mask(a)?, self.mask(b)?);
        if a == b {
            return Err(Error::RepeatedQubit(a));
        }
        Ok((ma, mb))
    }

    /// Hadamard on `target`.
    pub fn apply_hadamard(&mut self, target: usize) -> Result<()> {
        let stride = self.mask(target)?;
        let scale = std::f64::consts::FRAC_1_SQRT_2;
        for block in self.amplitudes.chunks_exact_mut(2 * stride) {
            let (low, high) = block.split_at_mut(stride);
            for (a0, a1) in low.iter_mut().zip(high.iter_mut()) {
                let (x, y) = (*a0, *a1);
                *a0 = (x + y) * scale;
                *a1 = (x - y) * scale;
            }
        }
        Ok(())
    }

    /// `diag(1, e^{iθ})` on `target`.
    pub fn apply_phase(&mut self, target: usize, theta: f64) -> Result<()> {
        let stride = self.mask(target)?;
        if !theta.is_finite() {
            return Err(Error::NonFinite("phase angle"));
        }
        let factor = Amplitude::from_polar(1.0, theta);
        for block in self.amplitudes.chunks_exact_mut(2 * stride) {
            for a in &mut block[stride..] {
                *a *= factor;
            }
        }
        Ok(())
    }

    /// Multiplies every amplitude whose index has both the `control` and
    /// `target` bits set by `e^{iθ}`. The gate is symmetric in its two qubits.
    pub fn apply_controlled_phase(
        &mut self,
        control: usize,
        target: usize,
        theta: f64,
    ) -> Result<()> {
        let (mc, mt) = self.pair_masks(control, target)?;
        if !theta.is_finite() {
            return Err(Error::NonFinite("phase angle"));
        }
        let factor = Amplitude::from_polar(1.0, theta);
        let both = mc | mt;
        let (lo, hi) = (mc.min(mt), mc.max(mt));
        for rest in 0..self.amplitudes.len() >> 2 {
            let idx = insert_zero_bit(insert_zero_bit(rest, lo), hi);
            self.amplitudes[idx | both] *= factor;
        }
        Ok(())
    }

    /// Exchanges qubits `a` and `b`.
    pub fn apply_swap(&mut self, a: usize, b: usize) -> Result<()> {
        let (ma, mb) = self.pair_masks(a, b)?;
        for j in 0..self.amplitudes.len() {
            if j & ma != 0 && j & mb == 0 {
                self.amplitudes.swap(j, j ^ ma ^ mb);
            }
        }
        Ok(())
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::SizeMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        let overlap: Amplitude = self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(overlap.norm_sqr())
    }
}
