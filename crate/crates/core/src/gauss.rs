//! Exact exponential sums over GF(2):
//! `Σ_x i^{Σ a_j x_j} (−1)^{Σ_{j<k} Q_{jk} x_j x_k}` evaluated in polynomial
//! time by variable elimination, plus single-amplitude queries on
//! locally-rotated graph states built on top of them.

use crate::bits::BitRow;
use crate::cliff::Cliff1;
use crate::ring::Cyclo8;

/// A sum `Σ_{x ∈ {0,1}^n, pins respected} i^{a·x} (−1)^{x^T Q x}`.
pub struct ExpSum {
    n: usize,
    alive: Vec<bool>,
    a: Vec<u8>,
    adj: Vec<BitRow>,
    scalar: Cyclo8,
    zero: bool,
}

impl ExpSum {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            alive: vec![true; n],
            a: vec![0; n],
            adj: (0..n).map(|_| BitRow::new(n)).collect(),
            scalar: Cyclo8::ONE,
            zero: false,
        }
    }

    /// Add `c` to the i-exponent of `x_j`.
    pub fn add_linear(&mut self, j: usize, c: u8) {
        self.a[j] = (self.a[j] + c) % 4;
    }

    /// Toggle the quadratic coupling between two distinct variables.
    pub fn toggle_pair(&mut self, i: usize, j: usize) {
        assert_ne!(i, j);
        self.adj[i].flip(j);
        self.adj[j].flip(i);
    }

    /// Fix `x_j` to a constant and fold its contributions.
    pub fn pin(&mut self, j: usize, value: bool) {
        assert!(self.alive[j]);
        if value {
            self.scalar = self.scalar.mul(&Cyclo8::i_pow(self.a[j] as i64));
            let row = self.adj[j].clone();
            for w in row.ones() {
                self.add_linear(w, 2);
            }
        }
        self.kill(j);
    }

    fn kill(&mut self, j: usize) {
        self.alive[j] = false;
        let row = std::mem::replace(&mut self.adj[j], BitRow::new(self.n));
        for w in row.ones() {
            self.adj[w].set(j, false);
        }
        self.a[j] = 0;
    }

    /// `i^{b·parity(x_S)}` folded into linear and quadratic terms.
    fn fold_parity(&mut self, b: u8, set: &BitRow) {
        let b = b % 4;
        if b == 0 {
            return;
        }
        let members: Vec<usize> = set.ones().collect();
        for &u in &members {
            self.add_linear(u, b);
        }
        if b % 2 == 1 {
            for i in 0..members.len() {
                for j in i + 1..members.len() {
                    self.toggle_pair(members[i], members[j]);
                }
            }
        }
    }

    /// Evaluate the sum exactly.
    pub fn eval(mut self) -> Cyclo8 {
        if self.zero {
            return Cyclo8::ZERO;
        }
        loop {
            let Some(j) = (0..self.n).find(|&j| self.alive[j]) else {
                return self.scalar;
            };
            let l = self.a[j];
            let row = self.adj[j].clone();
            if l % 2 == 1 {
                // (1 + i^{±1}(−1)^p) = √2 ζ^{±1} i^{∓p}
                let (dz, b) = if l == 1 { (1i64, 3u8) } else { (7, 1) };
                self.scalar = self.scalar.mul(&Cyclo8::monomial(dz, 1));
                self.kill(j);
                self.fold_parity(b, &row);
            } else {
                let c = l / 2;
                let Some(v) = row.first_one() else {
                    if c == 0 {
                        self.scalar = self.scalar.double();
                        self.kill(j);
                        continue;
                    }
                    return Cyclo8::ZERO;
                };
                // constraint parity(x_row) = c; substitute x_v
                self.kill(j);
                self.scalar = self.scalar.double();
                let mut rest = row.clone();
                rest.set(v, false);
                let av = self.a[v];
                let w_row = self.adj[v].clone();
                self.kill(v);
                if c == 1 {
                    self.scalar = self.scalar.mul(&Cyclo8::i_pow(av as i64));
                }
                let b_lin = if c == 1 { (4 - av % 4) % 4 } else { av % 4 };
                self.fold_parity(b_lin, &rest);
                // quadratic terms x_v x_w for each prior neighbor w of v
                for w in w_row.ones() {
                    if c == 1 {
                        self.add_linear(w, 2);
                    }
                    for u in rest.ones() {
                        if u == w {
                            self.add_linear(w, 2);
                        } else {
                            self.toggle_pair(u, w);
                        }
                    }
                }
            }
        }
    }
}

/// Single amplitude `<y| (⊗_j U_j) |G>` of a locally rotated graph state
/// (`|G>` the canonical graph state of `adj` on `n` qubits), exact.
pub fn framed_graph_amplitude(adj: &[BitRow], frames: &[Cliff1], y: &BitRow) -> Cyclo8 {
    let n = adj.len();
    assert_eq!(frames.len(), n);
    assert_eq!(y.len(), n);
    let mut sum = ExpSum::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if adj[i].get(j) {
                sum.toggle_pair(i, j);
            }
        }
    }
    let mut scalar = Cyclo8::monomial(0, -(n as i64)); // 2^{-n/2}
    let mut pins: Vec<(usize, bool)> = Vec::new();
    for j in 0..n {
        let row = y.get(j) as usize;
        let c0 = frames[j].m[row][0];
        let c1 = frames[j].m[row][1];
        if c0.is_zero() {
            scalar = scalar.mul(&c1);
            pins.push((j, true));
        } else if c1.is_zero() {
            scalar = scalar.mul(&c0);
            pins.push((j, false));
        } else {
            scalar = scalar.mul(&c0);
            let ratio = c1.mul(&c0.monomial_inverse().expect("Clifford entry is monomial"));
            let (zeta, half) = ratio.to_monomial().expect("Clifford entry ratio is monomial");
            assert_eq!(half, 0, "Clifford row entries have equal magnitude");
            assert_eq!(zeta % 2, 0, "Clifford row ratio is a power of i");
            sum.add_linear(j, zeta / 2);
        }
    }
    for (j, v) in pins {
        sum.pin(j, v);
    }
    sum.scalar = sum.scalar.mul(&scalar);
    sum.eval()
}
