//! Circuit file format: `{"qubits": N, "layers": [[{"gate": "CX",
//! "qubits": [i,j]}, ...], ...]}`. The parser rejects overlapping supports
//! within a layer and unknown gate names.

use super::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Serialize, Deserialize)]
struct GateFile {
    gate: String,
    qubits: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CircuitFile {
    qubits: usize,
    layers: Vec<Vec<GateFile>>,
}

impl Circuit {
    pub fn to_json(&self) -> String {
        let file = CircuitFile {
            qubits: self.qubit_count,
            layers: self
                .layers
                .iter()
                .map(|layer| {
                    layer
                        .iter()
                        .map(|g| GateFile {
                            gate: g.kind.name().to_string(),
                            qubits: g.qubits.clone(),
                        })
                        .collect()
                })
                .collect(),
        };
        let mut s = serde_json::to_string(&file).expect("circuit serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CircuitFile = serde_json::from_str(text)
            .map_err(|e| Error::parse("circuit file", e.to_string()))?;
        let mut layers = Vec::with_capacity(file.layers.len());
        for layer in file.layers {
            let mut gates = Vec::with_capacity(layer.len());
            for g in layer {
                gates.push(Gate::new(GateKind::parse(&g.gate)?, g.qubits));
            }
            layers.push(gates);
        }
        Circuit::new(file.qubits, layers)
    }
}

pub fn save_circuit(u: &Circuit, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, u.to_json())?;
    Ok(())
}

pub fn load_circuit(path: impl AsRef<Path>) -> Result<Circuit> {
    let text = std::fs::read_to_string(&path)?;
    Circuit::from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let u = Circuit::new(
            3,
            vec![
                vec![Gate::new(GateKind::H, vec![0])],
                vec![
                    Gate::new(GateKind::CX, vec![0, 1]),
                    Gate::new(GateKind::S, vec![2]),
                ],
            ],
        )
        .unwrap();
        assert_eq!(Circuit::from_json(&u.to_json()).unwrap(), u);
    }

    #[test]
    fn rejects_overlap_and_unknown_gate() {
        let overlap = r#"{"qubits":2,"layers":[[{"gate":"CX","qubits":[0,1]},{"gate":"H","qubits":[0]}]]}"#;
        assert!(Circuit::from_json(overlap).is_err());
        let unknown = r#"{"qubits":1,"layers":[[{"gate":"T","qubits":[0]}]]}"#;
        let err = Circuit::from_json(unknown).unwrap_err();
        assert!(err.to_string().contains("non-Clifford"));
    }
}
