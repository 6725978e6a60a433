use fourier_adder::{CheckReport, DraperAdderSpec, StateVector};

/// Rows with probability below this are left out of tables.
const DISPLAY_CUTOFF: f64 = 1e-12;

/// Rounds away float noise below the display precision; `+ 0.0` folds `-0.0`.
fn number(x: f64) -> String {
    let rounded = (x * 1e12).round() / 1e12 + 0.0;
    format!("{rounded:?}")
}

/// `index  re  im  prob` for every amplitude worth showing.
pub fn amplitude_table(state: &StateVector) -> String {
    let mut out = String::new();
    for (j, a) in state.amplitudes().iter().enumerate() {
        let p = a.norm_sqr();
        if p < DISPLAY_CUTOFF {
            continue;
        }
        out.push_str(&format!(
            "{j}  {}  {}  {}\n",
            number(a.re),
            number(a.im),
            number(p)
        ));
    }
    out
}

/// `a=.. b=..` when the two registers hold one basis value, otherwise a table
/// of `a  b  re  im  prob` rows.
pub fn register_pair(spec: &DraperAdderSpec, state: &StateVector, tolerance: f64) -> String {
    let probs = state.probabilities();
    if let Some(j) = probs.iter().position(|&p| p >= 1.0 - tolerance) {
        let (a, b) = spec.decode(j as u64);
        return format!("a={a} b={b}\n");
    }
    let mut out = String::new();
    for (j, a) in state.amplitudes().iter().enumerate() {
        if probs[j] < DISPLAY_CUTOFF {
            continue;
        }
        let (ra, rb) = spec.decode(j as u64);
        out.push_str(&format!(
            "{ra}  {rb}  {}  {}  {}\n",
            number(a.re),
            number(a.im),
            number(probs[j])
        ));
    }
    out
}

pub fn report_line(r: &CheckReport) -> String {
    format!(
        "{:<12} n={:<2} c={:<6} max_error={:.3e}  {}",
        r.check,
        r.n,
        r.c,
        r.max_error,
        if r.pass { "PASS" } else { "FAIL" }
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers() {
        assert_eq!(number(0.9999999999999998), "1.0");
        assert_eq!(number(-1e-17), "0.0");
        assert_eq!(number(std::f64::consts::FRAC_1_SQRT_2), "0.707106781187");
        assert_eq!(number(-0.5), "-0.5");
    }

    #[test]
    fn table_skips_empty_rows() {
        let s = StateVector::basis(3, 7).unwrap();
        assert_eq!(amplitude_table(&s), "7  1.0  0.0  1.0\n");
    }
}
