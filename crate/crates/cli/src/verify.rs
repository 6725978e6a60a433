//! Verification sweeps behind `fourier-adder verify`.

use fourier_adder::oracle::{
    check_modularity_with, check_phase_adder_equivalence_with, circuit_to_matrix,
};
use fourier_adder::{
    const_adder_circuit, draper_adder_circuit, CheckReport, ConstAdderSpec, DraperAdderSpec,
    Result, StateVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Suite;

/// The Draper sweep runs on `2N` qubits, so it stops earlier.
const DRAPER_N_MAX: usize = 6;
/// Widest register for the per-`x` modularity sweep.
const MODULARITY_N_MAX: usize = 8;
const RANDOM_CONSTANTS: usize = 20;

pub fn run(suite: Suite, n_max: usize, seed: u64, tolerance: f64) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Const) {
        for n in 1..=n_max {
            reports.push(const_sweep(n, tolerance)?);
        }
    }
    if wants(Suite::Draper) {
        for n in 1..=n_max.min(DRAPER_N_MAX) {
            reports.push(draper_sweep(n, tolerance)?);
        }
    }
    if wants(Suite::Equivalence) {
        for n in 1..=n_max {
            for _ in 0..RANDOM_CONSTANTS {
                let c = rng.gen_range(0..1i64 << n);
                reports.push(check_phase_adder_equivalence_with(n, c, tolerance)?);
            }
        }
    }
    if wants(Suite::Modularity) {
        for n in 1..=n_max.min(MODULARITY_N_MAX) {
            reports.push(modularity_sweep(n, tolerance)?);
            let c = rng.gen_range(0..1i64 << n);
            reports.push(constant_period(n, c, tolerance)?);
        }
    }
    Ok(reports)
}

fn summary(check: &str, n: usize, worst: (f64, i64), tolerance: f64) -> CheckReport {
    CheckReport {
        check: check.to_string(),
        n,
        c: worst.1,
        max_error: worst.0,
        pass: worst.0 < tolerance,
    }
}

/// Every `(a, c)` pair; the report carries the worst constant.
fn const_sweep(n: usize, tolerance: f64) -> Result<CheckReport> {
    let dim = 1u64 << n;
    let mut worst = (0.0f64, 0i64);
    for c in 0..dim {
        let circuit = const_adder_circuit(&ConstAdderSpec::new(n, c as i64)?);
        for a in 0..dim {
            let mut s = StateVector::basis(n, a)?;
            circuit.run(&mut s)?;
            let target = StateVector::basis(n, (a + c) % dim)?;
            let err = 1.0 - s.fidelity(&target)?;
            if err > worst.0 {
                worst = (err, c as i64);
            }
        }
    }
    Ok(summary("const", n, worst, tolerance))
}

fn draper_sweep(n: usize, tolerance: f64) -> Result<CheckReport> {
    let spec = DraperAdderSpec::new(n)?;
    let circuit = draper_adder_circuit(&spec);
    let dim = 1u64 << n;
    let mut worst = (0.0f64, 0i64);
    for a in 0..dim {
        for b in 0..dim {
            let mut s = StateVector::basis(2 * n, spec.encode(a, b)?)?;
            circuit.run(&mut s)?;
            let target = StateVector::basis(2 * n, spec.encode(a, (a + b) % dim)?)?;
            let err = 1.0 - s.fidelity(&target)?;
            if err > worst.0 {
                worst = (err, a as i64);
            }
        }
    }
    Ok(summary("draper", n, worst, tolerance))
}

/// `x` over `0..=4·2^N`; the report carries the worst `x`.
fn modularity_sweep(n: usize, tolerance: f64) -> Result<CheckReport> {
    let mut worst = (0.0f64, 0i64);
    for x in 0..=4u64 << n {
        let r = check_modularity_with(n, x, tolerance)?;
        if r.max_error > worst.0 {
            worst = (r.max_error, x as i64);
        }
    }
    Ok(summary("modularity", n, worst, tolerance))
}

/// Dense matrices of the adders for `c` and `c + 2^N` coincide.
fn constant_period(n: usize, c: i64, tolerance: f64) -> Result<CheckReport> {
    let a = circuit_to_matrix(&const_adder_circuit(&ConstAdderSpec::new(n, c)?))?;
    let b = circuit_to_matrix(&const_adder_circuit(&ConstAdderSpec::new(
        n,
        c + (1i64 << n),
    )?))?;
    Ok(summary("period", n, (a.max_abs_diff(&b), c), tolerance))
}
