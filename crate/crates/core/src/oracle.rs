//! Dense-matrix ground truth.
//!
//! Everything here is built straight from closed forms (DFT entries, diagonal
//! phase matrices, permutation matrices, Kronecker products of `2×2` factors)
//! and never from the circuit builders, so it can be used to check them.
//! Matrices are capped at [`MAX_DENSE_QUBITS`].

use std::f64::consts::PI;

use serde::Serialize;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::state::{Amplitude, StateVector};

pub const MAX_DENSE_QUBITS: usize = 12;

/// Default pass threshold for the checks in this module.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

fn zero() -> Amplitude {
    Amplitude::new(0.0, 0.0)
}

fn one() -> Amplitude {
    Amplitude::new(1.0, 0.0)
}

fn check_dense(n_qubits: usize) -> Result<()> {
    if n_qubits == 0 || n_qubits > MAX_DENSE_QUBITS {
        return Err(Error::DenseLimit {
            got: n_qubits,
            max: MAX_DENSE_QUBITS,
        });
    }
    Ok(())
}

/// `ω^exponent` with `ω = e^{2πi/2^N}`. The exponent is reduced modulo `2^N`
/// before the exponential is taken.
pub fn omega_pow(n_qubits: usize, exponent: i128) -> Amplitude {
    let modulus = 1i128 << n_qubits;
    let reduced = exponent.rem_euclid(modulus);
    Amplitude::from_polar(1.0, 2.0 * PI * reduced as f64 / modulus as f64)
}

/// Row-major square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseUnitary {
    dim: usize,
    entries: Vec<Amplitude>,
}

impl DenseUnitary {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Amplitude) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for j in 0..dim {
            for k in 0..dim {
                entries.push(f(j, k));
            }
        }
        Self { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |j, k| if j == k { one() } else { zero() })
    }

    pub fn diagonal(diag: &[Amplitude]) -> Self {
        Self::from_fn(diag.len(), |j, k| if j == k { diag[j] } else { zero() })
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(columns: Vec<Vec<Amplitude>>) -> Self {
        let dim = columns.len();
        Self::from_fn(dim, |j, k| columns[k][j])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn get(&self, row: usize, col: usize) -> Amplitude {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Amplitude] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Amplitude]> {
        self.entries.chunks_exact(self.dim)
    }

    pub fn column(&self, col: usize) -> Vec<Amplitude> {
        (0..self.dim).map(|j| self.get(j, col)).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |j, k| self.get(k, j).conj())
    }

    pub fn scale(&self, factor: Amplitude) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// `self · rhs`.
    pub fn matmul(&self, rhs: &DenseUnitary) -> Self {
        assert_eq!(self.dim, rhs.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = vec![zero(); n * n];
        for (row, out_row) in self.rows().zip(out.chunks_exact_mut(n)) {
            for (&a, rhs_row) in row.iter().zip(rhs.rows()) {
                if a == zero() {
                    continue;
                }
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Self {
            dim: n,
            entries: out,
        }
    }

    pub fn apply(&self, v: &[Amplitude]) -> Vec<Amplitude> {
        assert_eq!(self.dim, v.len(), "apply dimension mismatch");
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Kronecker product `self ⊗ rhs`. The left factor owns the high bits of
    /// the combined index.
    pub fn kron(&self, rhs: &DenseUnitary) -> Self {
        let dim = self.dim * rhs.dim;
        Self::from_fn(dim, |j, k| {
            self.get(j / rhs.dim, k / rhs.dim) * rhs.get(j % rhs.dim, k % rhs.dim)
        })
    }

    /// Square sub-block of size `size` starting at `(row, col)`.
    pub fn block(&self, row: usize, col: usize, size: usize) -> Self {
        Self::from_fn(size, |j, k| self.get(row + j, col + k))
    }

    /// `max |self − other|` over all entries.
    pub fn max_abs_diff(&self, other: &DenseUnitary) -> f64 {
        assert_eq!(self.dim, other.dim, "comparison dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `‖U·U† − I‖_max`.
    pub fn unitarity_error(&self) -> f64 {
        self.matmul(&self.adjoint())
            .max_abs_diff(&Self::identity(self.dim))
    }
}

/// `(1/√2^N)[ω^{jk}]`.
pub fn dft_matrix(n_qubits: usize) -> Result<DenseUnitary> {
    check_dense(n_qubits)?;
    let dim = 1usize << n_qubits;
    let norm = 1.0 / (dim as f64).sqrt();
    Ok(DenseUnitary::from_fn(dim, |j, k| {
        omega_pow(n_qubits, (j * k) as i128) * norm
    }))
}

/// `diag(ω^{jc})`, the Fourier-domain adder in diagonal form.
pub fn phase_adder_matrix(n_qubits: usize, c: i64) -> Result<DenseUnitary> {
    check_dense(n_qubits)?;
    let diag: Vec<_> = (0..1i128 << n_qubits)
        .map(|j| omega_pow(n_qubits, j * c as i128))
        .collect();
    Ok(DenseUnitary::diagonal(&diag))
}

/// Classical ground truth: entry `(j, k)` is 1 iff `j = (k + c) mod 2^N`.
pub fn permutation_add_matrix(n_qubits: usize, c: i64) -> Result<DenseUnitary> {
    check_dense(n_qubits)?;
    let dim = 1usize << n_qubits;
    let shift = (c as i128).rem_euclid(dim as i128) as usize;
    Ok(DenseUnitary::from_fn(dim, |j, k| {
        if j == (k + shift) % dim {
            one()
        } else {
            zero()
        }
    }))
}

/// Permutation `|a, b⟩ ↦ |a, a + b mod 2^N⟩` on `2N` qubits, `a` in the low
/// `N` bits.
pub fn draper_permutation_matrix(n_per_operand: usize) -> Result<DenseUnitary> {
    check_dense(2 * n_per_operand)?;
    let n = n_per_operand;
    let mask = (1usize << n) - 1;
    Ok(DenseUnitary::from_fn(1 << (2 * n), |j, k| {
        let (a, b) = (k & mask, k >> n);
        if j == a | (((a + b) & mask) << n) {
            one()
        } else {
            zero()
        }
    }))
}

/// `diag(1, e^{iθ})`.
pub fn rz_matrix(theta: f64) -> DenseUnitary {
    DenseUnitary::diagonal(&[one(), Amplitude::from_polar(1.0, theta)])
}

/// Column `k` is the circuit applied to `|k⟩`.
pub fn circuit_to_matrix(circuit: &Circuit) -> Result<DenseUnitary> {
    let n = circuit.n_qubits();
    check_dense(n)?;
    let columns = (0..1u64 << n)
        .map(|k| {
            let mut state = StateVector::basis(n, k)?;
            circuit.run(&mut state)?;
            Ok(state.into_amplitudes())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DenseUnitary::from_columns(columns))
}

/// Outcome of one numerical check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    /// The constant under test. Modularity checks record the folded value `x`.
    pub c: i64,
    pub max_error: f64,
    pub pass: bool,
}

impl CheckReport {
    fn new(check: &str, n: usize, c: i64, max_error: f64, tolerance: f64) -> Self {
        Self {
            check: check.to_string(),
            n,
            c,
            max_error,
            pass: max_error < tolerance,
        }
    }
}

/// `⊗_{t=m..1} R_z(c·π/2^(N−t))` for the low `m` qubits of an `N`-qubit
/// register, leftmost factor on the highest qubit.
fn rz_tensor_prefix(n_qubits: usize, c: u64, m: usize) -> DenseUnitary {
    (1..=m).fold(DenseUnitary::identity(1), |acc, t| {
        let theta = c as f64 * PI / 2f64.powi((n_qubits - t) as i32);
        rz_matrix(theta).kron(&acc)
    })
}

/// Checks that the tensor product of per-qubit rotations equals
/// `diag(ω^{jc})`, together with the doubling step behind it: adding qubit
/// `m` to the product of the lower `m − 1` factors produces a block diagonal
/// whose upper block is the previous product and whose lower block is that
/// product times `ω^{c·2^(m−1)}`.
///
/// `c` is reduced modulo `2^N` first; periodicity itself is covered by
/// [`check_modularity`].
pub fn check_phase_adder_equivalence(n_qubits: usize, c: i64) -> Result<CheckReport> {
    check_phase_adder_equivalence_with(n_qubits, c, DEFAULT_TOLERANCE)
}

pub fn check_phase_adder_equivalence_with(
    n_qubits: usize,
    c: i64,
    tolerance: f64,
) -> Result<CheckReport> {
    check_dense(n_qubits)?;
    let canonical = (c as i128).rem_euclid(1i128 << n_qubits) as u64;
    let diagonal = phase_adder_matrix(n_qubits, c)?;

    let mut max_error = 0.0f64;
    let mut previous = DenseUnitary::identity(1);
    for m in 1..=n_qubits {
        let current = rz_tensor_prefix(n_qubits, canonical, m);
        let half = current.dim() / 2;
        let step = omega_pow(n_qubits, canonical as i128 * (1i128 << (m - 1)));
        max_error = max_error
            .max(current.block(0, 0, half).max_abs_diff(&previous))
            .max(
                current
                    .block(half, half, half)
                    .max_abs_diff(&previous.scale(step)),
            )
            .max(
                current
                    .block(0, half, half)
                    .max_abs_diff(&DenseUnitary::from_fn(half, |_, _| zero())),
            )
            .max(
                current
                    .block(half, 0, half)
                    .max_abs_diff(&DenseUnitary::from_fn(half, |_, _| zero())),
            );
        // Partial product agrees with the leading 2^m diagonal entries.
        max_error = max_error.max(current.max_abs_diff(&diagonal.block(0, 0, current.dim())));
        previous = current;
    }
    max_error = max_error.max(previous.max_abs_diff(&diagonal));
    Ok(CheckReport::new(
        "equivalence",
        n_qubits,
        c,
        max_error,
        tolerance,
    ))
}

/// Applies the inverse DFT to the Fourier column `(1/√2^N)[ω^{jx}]` for an
/// arbitrary `x ≥ 0` and checks that the result is `|x mod 2^N⟩`.
pub fn check_modularity(n_qubits: usize, x: u64) -> Result<CheckReport> {
    check_modularity_with(n_qubits, x, DEFAULT_TOLERANCE)
}

pub fn check_modularity_with(n_qubits: usize, x: u64, tolerance: f64) -> Result<CheckReport> {
    let (result, expected) = modularity_images(n_qubits, x)?;
    let elementwise = result
        .iter()
        .zip(expected.amplitudes())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    let overlap: Amplitude = expected
        .amplitudes()
        .iter()
        .zip(&result)
        .map(|(a, b)| a.conj() * b)
        .sum();
    let fidelity_gap = (1.0 - overlap.norm_sqr()).abs();
    Ok(CheckReport::new(
        "modularity",
        n_qubits,
        x as i64,
        elementwise.max(fidelity_gap),
        tolerance,
    ))
}

/// `(QFT† · φ(x), |x mod 2^N⟩)`.
pub fn modularity_images(n_qubits: usize, x: u64) -> Result<(Vec<Amplitude>, StateVector)> {
    let dft = dft_matrix(n_qubits)?;
    let dim = dft.dim();
    let norm = 1.0 / (dim as f64).sqrt();
    // The column is formed from the unreduced product j·x.
    let column: Vec<_> = (0..dim)
        .map(|j| {
            let angle = 2.0 * PI * (j as f64 * x as f64) / dim as f64;
            Amplitude::from_polar(norm, angle)
        })
        .collect();
    let result = dft.adjoint().apply(&column);
    let expected = StateVector::basis(n_qubits, x % dim as u64)?;
    Ok((result, expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Amplitude {
        Amplitude::new(re, im)
    }

    fn literal(rows: &[&[Amplitude]]) -> DenseUnitary {
        DenseUnitary::from_fn(rows.len(), |j, k| rows[j][k])
    }

    #[test]
    fn dft_small() {
        let h = FRAC_1_SQRT_2;
        let one = dft_matrix(1).unwrap();
        assert!(
            one.max_abs_diff(&literal(&[&[c(h, 0.), c(h, 0.)], &[c(h, 0.), c(-h, 0.)]])) < 1e-15
        );

        let two = dft_matrix(2).unwrap();
        assert!((two.get(1, 1) - c(0., 0.5)).norm() < 1e-15);
        let col = two.column(1);
        let expected = [c(0.5, 0.), c(0., 0.5), c(-0.5, 0.), c(0., -0.5)];
        for (a, e) in col.iter().zip(expected) {
            assert!((a - e).norm() < 1e-15);
        }
        assert!(dft_matrix(0).is_err());
        assert!(dft_matrix(13).is_err());
    }

    #[test]
    fn phase_adder_matrix_forms() {
        let m = phase_adder_matrix(2, 1).unwrap();
        let expected = DenseUnitary::diagonal(&[c(1., 0.), c(0., 1.), c(-1., 0.), c(0., -1.)]);
        assert!(m.max_abs_diff(&expected) < 1e-15);

        let m = phase_adder_matrix(1, 1).unwrap();
        assert!(m.max_abs_diff(&DenseUnitary::diagonal(&[c(1., 0.), c(-1., 0.)])) < 1e-15);

        for n in 1..=4 {
            assert_eq!(
                phase_adder_matrix(n, 0)
                    .unwrap()
                    .max_abs_diff(&DenseUnitary::identity(1 << n)),
                0.0
            );
        }
    }

    #[test]
    fn permutations() {
        assert_eq!(
            permutation_add_matrix(2, 0).unwrap(),
            DenseUnitary::identity(4)
        );
        let not = literal(&[&[c(0., 0.), c(1., 0.)], &[c(1., 0.), c(0., 0.)]]);
        assert_eq!(permutation_add_matrix(1, 1).unwrap(), not);
        assert_eq!(
            permutation_add_matrix(2, 3).unwrap(),
            permutation_add_matrix(2, -1).unwrap()
        );
    }

    #[test]
    fn kron_owns_high_bits_on_the_left() {
        // X ⊗ I flips bit 1 (the high bit of a 2-qubit index).
        let x = permutation_add_matrix(1, 1).unwrap();
        let k = x.kron(&DenseUnitary::identity(2));
        assert_eq!(k.apply(&[one(), zero(), zero(), zero()])[2], one());
    }

    #[test]
    fn circuit_matrices() {
        let empty = Circuit::new(3).unwrap();
        assert_eq!(
            circuit_to_matrix(&empty).unwrap(),
            DenseUnitary::identity(8)
        );

        let p = Circuit::from_gates(
            1,
            [Gate::Phase {
                target: 1,
                angle: PI,
            }],
        )
        .unwrap();
        let m = circuit_to_matrix(&p).unwrap();
        assert!(m.max_abs_diff(&DenseUnitary::diagonal(&[c(1., 0.), c(-1., 0.)])) < 1e-15);

        assert!(circuit_to_matrix(&Circuit::new(13).unwrap()).is_err());
    }

    #[test]
    fn equivalence_reports() {
        for cc in [0, 1, 2, 3, 7, -5] {
            assert!(check_phase_adder_equivalence(1, cc).unwrap().pass);
            assert!(check_phase_adder_equivalence(2, cc).unwrap().pass);
        }
        let r = check_phase_adder_equivalence(6, 41).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!((r.check.as_str(), r.n, r.c), ("equivalence", 6, 41));
    }

    #[test]
    fn modularity_reports() {
        for (n, x, folded) in [(2, 5, 1), (3, 8, 0), (2, 2, 2)] {
            let (result, expected) = modularity_images(n, x).unwrap();
            assert_eq!(expected, StateVector::basis(n, folded).unwrap());
            assert!((result[folded as usize] - one()).norm() < 1e-12);
            assert!(check_modularity(n, x).unwrap().pass);
        }
    }

    #[test]
    fn report_json_shape() {
        let r = CheckReport::new("equivalence", 2, 3, 0.0, 1e-10);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"check":"equivalence","n":2,"c":3,"max_error":0.0,"pass":true}"#
        );
    }
}
