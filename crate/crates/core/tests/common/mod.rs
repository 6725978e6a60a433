#![allow(dead_code)]

use fourier_adder::{Amplitude, StateVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-10;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random complex vector, normalized.
pub fn random_state(rng: &mut impl Rng, n_qubits: usize) -> StateVector {
    let dim = 1usize << n_qubits;
    let mut amps: Vec<Amplitude> = (0..dim)
        .map(|_| Amplitude::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    StateVector::from_amplitudes(amps).unwrap()
}

/// Random superposition over `terms` distinct basis values.
pub fn random_sparse_terms(
    rng: &mut impl Rng,
    n_qubits: usize,
    terms: usize,
) -> Vec<(u64, Amplitude)> {
    let dim = 1u64 << n_qubits;
    let mut values: Vec<u64> = Vec::new();
    while values.len() < terms {
        let v = rng.gen_range(0..dim);
        if !values.contains(&v) {
            values.push(v);
        }
    }
    let mut weights: Vec<Amplitude> = (0..terms)
        .map(|_| {
            Amplitude::from_polar(
                rng.gen_range(0.2..1.0),
                rng.gen_range(0.0..std::f64::consts::TAU),
            )
        })
        .collect();
    let norm = weights.iter().map(|w| w.norm_sqr()).sum::<f64>().sqrt();
    for w in &mut weights {
        *w /= norm;
    }
    values.into_iter().zip(weights).collect()
}

pub fn max_diff(a: &[Amplitude], b: &[Amplitude]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Classical cyclic shift: amplitude at `x` moves to `(x + c) mod 2^N`.
pub fn shifted(state: &StateVector, c: i64) -> Vec<Amplitude> {
    let dim = state.dim() as i64;
    let mut out = vec![Amplitude::new(0.0, 0.0); state.dim()];
    for (x, a) in state.amplitudes().iter().enumerate() {
        out[(x as i64 + c).rem_euclid(dim) as usize] = *a;
    }
    out
}
