//! Clifford preparation circuits over the gate set {H, S, CZ, SWAP}.

/// One gate of a preparation circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    H(usize),
    S(usize),
    Cz(usize, usize),
    Swap(usize, usize),
}

impl Gate {
    pub fn wires(&self) -> (usize, Option<usize>) {
        match *self {
            Gate::H(a) | Gate::S(a) => (a, None),
            Gate::Cz(a, b) | Gate::Swap(a, b) => (a, Some(b)),
        }
    }
}

/// An ordered gate list on `n` wires, applied to `|+>^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordCircuit {
    pub wires: usize,
    pub gates: Vec<Gate>,
}

impl CliffordCircuit {
    pub fn new(wires: usize) -> Self {
        Self { wires, gates: Vec::new() }
    }

    pub fn push(&mut self, g: Gate) {
        let (a, b) = g.wires();
        assert!(a < self.wires);
        if let Some(b) = b {
            assert!(b < self.wires);
            assert_ne!(a, b);
        }
        self.gates.push(g);
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// The state this circuit prepares from `|+>^n`, as a stabilizer tableau.
    pub fn output_tableau(&self) -> crate::tableau::StabilizerTableau {
        use crate::tableau::CliffordGate;
        let mut t = crate::tableau::StabilizerTableau::plus_state(self.wires);
        for g in &self.gates {
            match *g {
                Gate::H(q) => t.apply(CliffordGate::H(q)),
                Gate::S(q) => t.apply(CliffordGate::S(q)),
                Gate::Cz(a, b) => t.apply(CliffordGate::Cz(a, b)),
                Gate::Swap(a, b) => t.apply(CliffordGate::Swap(a, b)),
            }
        }
        t
    }
}
