//! The padded CAT history state: a CX ladder padded with identity layers to
//! n² steps, in uniform superposition with a binary clock register.

use super::state::DenseState;
use crate::circuit::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Clock qubits for n² steps, values 1..n² stored as i-1 in binary.
pub fn clock_qubits(n: usize) -> usize {
    usize::BITS as usize - (n * n - 1).leading_zeros() as usize
}

fn checked_total(n: usize) -> Result<(usize, usize)> {
    if n < 2 {
        return Err(Error::precondition("history state needs n ≥ 2"));
    }
    let clock = clock_qubits(n);
    let total = n + clock;
    if total > super::state::MAX_QUBITS {
        return Err(Error::precondition(format!(
            "history state on {total} qubits exceeds the dense limit"
        )));
    }
    Ok((clock, total))
}

/// The ladder circuit preparing |CAT⁺⟩ from |+⟩|0…0⟩: layer i applies
/// CX(i-1, i) for i < n, identity afterwards.
pub fn cat_ladder_step(n: usize, step: usize) -> Option<Gate> {
    if (1..n).contains(&step) {
        Some(Gate::new(GateKind::CX, vec![step - 1, step]))
    } else {
        None
    }
}

/// |CAT⁺⟩ on n system qubits as a dense state.
pub fn cat_plus(n: usize) -> Result<DenseState> {
    let mut gates = vec![Gate::new(GateKind::H, vec![0])];
    for i in 1..n {
        gates.push(Gate::new(GateKind::CX, vec![i - 1, i]));
    }
    DenseState::run_circuit(&Circuit::from_gates(n, gates))
}

/// |φ_n⟩ = (1/n) Σ_{i=1}^{n²} (U_n^i |init⟩) ⊗ |i⟩, with |init⟩ = |+⟩|0…0⟩,
/// U_n^i the first i ladder steps, and the clock in binary on the high
/// qubits.
pub fn history_state(n: usize) -> Result<DenseState> {
    let (clock, total) = checked_total(n)?;
    let steps = n * n;
    let mut sys = DenseState::zero_state(n)?;
    sys.apply_gate(&Gate::new(GateKind::H, vec![0]));

    let mut amps = vec![Complex64::ZERO; 1 << total];
    let weight = Complex64::new(1.0 / n as f64, 0.0);
    for i in 1..=steps {
        if let Some(gate) = cat_ladder_step(n, i) {
            sys.apply_gate(&gate);
        }
        let clock_bits = i - 1;
        debug_assert!(clock_bits < (1 << clock));
        let base = clock_bits << n;
        for (b, a) in sys.amplitudes().iter().enumerate() {
            amps[base | b] += weight * a;
        }
    }
    DenseState::from_amplitudes(total, amps)
}

/// The comparison state |C̃AT⁺⟩ = |CAT⁺⟩ ⊗ |θ_n⟩ with θ_n uniform over clock
/// values n+1..n².
pub fn extended_cat(n: usize) -> Result<DenseState> {
    let (clock, total) = checked_total(n)?;
    let cat = cat_plus(n)?;
    let count = n * n - n;
    let weight = Complex64::new(1.0 / (count as f64).sqrt(), 0.0);
    let mut amps = vec![Complex64::ZERO; 1 << total];
    for i in (n + 1)..=(n * n) {
        let base = (i - 1) << n;
        debug_assert!(i - 1 < (1 << clock));
        for (b, a) in cat.amplitudes().iter().enumerate() {
            amps[base | b] += weight * a;
        }
    }
    DenseState::from_amplitudes(total, amps)
}

/// The closed-form overlap √(n²−n)/n the construction attains.
pub fn expected_history_overlap(n: usize) -> f64 {
    ((n * n - n) as f64).sqrt() / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_norms() {
        let s = history_state(2).unwrap();
        assert_eq!(s.qubits(), 2 + 2);
        assert!((s.norm() - 1.0).abs() < 1e-12);
        assert!(history_state(9).is_err());
    }

    #[test]
    fn overlap_matches_closed_form() {
        for n in 2..=6 {
            let phi = history_state(n).unwrap();
            let cat = extended_cat(n).unwrap();
            let overlap = phi.overlap(&cat).unwrap().norm();
            let expected = expected_history_overlap(n);
            assert!(
                (overlap - expected).abs() < 1e-10,
                "n={n}: {overlap} vs {expected}"
            );
        }
    }

    #[test]
    fn overlap_trend_increases_toward_one() {
        let vals: Vec<f64> = (2..=6).map(expected_history_overlap).collect();
        for w in vals.windows(2) {
            assert!(w[1] > w[0]);
        }
        assert!((expected_history_overlap(4) - 12f64.sqrt() / 4.0).abs() < 1e-15);
    }
}
