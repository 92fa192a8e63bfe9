//! Preparation-circuit synthesis for decorated-graph states.

use crate::circuit::{CliffordCircuit, Gate};
use crate::decorate::DecoratedGraph;

/// Circuit preparing the decorated-graph state from `|+>^n`, exactly
/// (global phase included): one CZ per decorated edge, then H on every
/// edge-qubit. Gate count is `2|E| + |E|`.
pub fn synthesize_prep_circuit(dg: &DecoratedGraph) -> CliffordCircuit {
    let mut c = CliffordCircuit::new(dg.num_qubits());
    for (k, &(a, b)) in dg.source().edges().iter().enumerate() {
        let e = dg.edge_qubit(k);
        c.push(Gate::Cz(a, e));
        c.push(Gate::Cz(b, e));
    }
    for k in 0..dg.num_edge_qubits() {
        c.push(Gate::H(dg.edge_qubit(k)));
    }
    c
}
