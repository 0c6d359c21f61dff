//! Layered quantum circuits over edge-indexed qubits, their induced DAG
//! reachability (light cones), geometric locality, and the effective
//! supports A and B of a homology class.

mod geometry;
mod io;
mod lightcone;
mod random;
mod support;

pub use geometry::{geometric_spread, is_geometric};
pub use io::{load_circuit, save_circuit};
pub use lightcone::{light_cone, Direction};
pub use random::{random_circuit, random_geometric_circuit};
pub use support::{
    brute_force_effective_support_a, conjugated_support, effective_support_a,
    effective_support_b,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Clifford gate tags. Light-cone analysis ignores the tag; the stabilizer
/// engine gives each one its exact conjugation action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GateKind {
    H,
    S,
    /// Inverse phase gate.
    Sdg,
    X,
    Y,
    Z,
    CX,
    CZ,
    SWAP,
}

impl GateKind {
    pub fn arity(self) -> usize {
        match self {
            GateKind::H | GateKind::S | GateKind::Sdg | GateKind::X | GateKind::Y | GateKind::Z => 1,
            GateKind::CX | GateKind::CZ | GateKind::SWAP => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::S => "S",
            GateKind::Sdg => "SDG",
            GateKind::X => "X",
            GateKind::Y => "Y",
            GateKind::Z => "Z",
            GateKind::CX => "CX",
            GateKind::CZ => "CZ",
            GateKind::SWAP => "SWAP",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name.to_ascii_uppercase().as_str() {
            "H" => GateKind::H,
            "S" => GateKind::S,
            "SDG" | "SDAG" => GateKind::Sdg,
            "X" => GateKind::X,
            "Y" => GateKind::Y,
            "Z" => GateKind::Z,
            "CX" | "CNOT" => GateKind::CX,
            "CZ" => GateKind::CZ,
            "SWAP" => GateKind::SWAP,
            other => {
                return Err(Error::parse(
                    "gate",
                    format!("unknown or non-Clifford gate {other:?}"),
                ))
            }
        })
    }
}

/// One gate: a tag plus the qubits it acts on, in tag-significant order
/// (control first for CX/CZ).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gate {
    pub kind: GateKind,
    pub qubits: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, qubits: Vec<usize>) -> Self {
        Gate { kind, qubits }
    }
}

/// A circuit: an ordered list of layers, each a set of gates with pairwise
/// disjoint supports. Depth is the number of layers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Circuit {
    pub qubit_count: usize,
    pub layers: Vec<Vec<Gate>>,
}

impl Circuit {
    pub fn new(qubit_count: usize, layers: Vec<Vec<Gate>>) -> Result<Self> {
        let c = Circuit {
            qubit_count,
            layers,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn identity(qubit_count: usize) -> Self {
        Circuit {
            qubit_count,
            layers: Vec::new(),
        }
    }

    /// Packs a gate sequence into layers greedily, starting a new layer
    /// whenever a gate overlaps the current one. Preserves gate order, hence
    /// the unitary.
    pub fn from_gates(qubit_count: usize, gates: impl IntoIterator<Item = Gate>) -> Self {
        let mut layers: Vec<Vec<Gate>> = Vec::new();
        let mut used = crate::bits::BitSet::new(qubit_count);
        for gate in gates {
            let overlaps = gate.qubits.iter().any(|&q| used.get(q));
            if overlaps || layers.is_empty() {
                layers.push(Vec::new());
                used = crate::bits::BitSet::new(qubit_count);
            }
            for &q in &gate.qubits {
                used.insert(q);
            }
            layers.last_mut().unwrap().push(gate);
        }
        Circuit {
            qubit_count,
            layers,
        }
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn gate_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Maximum gate arity; the paper's gate locality c. Zero-depth circuits
    /// report 1 so that c^d bounds stay meaningful.
    pub fn locality(&self) -> usize {
        self.layers
            .iter()
            .flatten()
            .map(|g| g.qubits.len())
            .max()
            .unwrap_or(1)
    }

    pub fn gates(&self) -> impl Iterator<Item = &Gate> {
        self.layers.iter().flatten()
    }

    /// Concatenation: `self` then `other`.
    pub fn then(&self, other: &Circuit) -> Result<Circuit> {
        if self.qubit_count != other.qubit_count {
            return Err(Error::precondition("qubit count mismatch"));
        }
        let mut layers = self.layers.clone();
        layers.extend(other.layers.iter().cloned());
        Circuit::new(self.qubit_count, layers)
    }

    pub fn validate(&self) -> Result<()> {
        for (li, layer) in self.layers.iter().enumerate() {
            let mut used = crate::bits::BitSet::new(self.qubit_count);
            for gate in layer {
                if gate.qubits.len() != gate.kind.arity() {
                    return Err(Error::parse(
                        format!("layer {li}"),
                        format!(
                            "gate {} takes {} qubits, got {}",
                            gate.kind.name(),
                            gate.kind.arity(),
                            gate.qubits.len()
                        ),
                    ));
                }
                let mut in_gate = std::collections::HashSet::new();
                for &q in &gate.qubits {
                    if q >= self.qubit_count {
                        return Err(Error::parse(
                            format!("layer {li}"),
                            format!("qubit {q} out of range"),
                        ));
                    }
                    if !in_gate.insert(q) {
                        return Err(Error::parse(
                            format!("layer {li}"),
                            "gate lists a qubit twice",
                        ));
                    }
                    if used.get(q) {
                        return Err(Error::parse(
                            format!("layer {li}"),
                            format!("overlapping gate supports at qubit {q}"),
                        ));
                    }
                    used.insert(q);
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overlapping_layer_rejected() {
        let err = Circuit::new(
            3,
            vec![vec![
                Gate::new(GateKind::CX, vec![0, 1]),
                Gate::new(GateKind::H, vec![1]),
            ]],
        )
        .unwrap_err();
        assert!(err.to_string().contains("overlapping"));
    }

    #[test]
    fn packing_preserves_order_and_disjointness() {
        let gates = vec![
            Gate::new(GateKind::H, vec![0]),
            Gate::new(GateKind::CX, vec![1, 2]),
            Gate::new(GateKind::CX, vec![0, 1]),
            Gate::new(GateKind::S, vec![2]),
        ];
        let c = Circuit::from_gates(3, gates);
        assert!(c.validate().is_ok());
        assert_eq!(c.depth(), 2);
        assert_eq!(c.gate_count(), 4);
        assert_eq!(c.locality(), 2);
    }
}
