//! Phase-exact graph-state simulation.
//!
//! The state is maintained as `ω · (⊗_j U_j) |G>` where `|G>` is the
//! canonical graph state of the current adjacency (amplitudes
//! `2^{-m/2} (-1)^{#11-edges}`), the `U_j` are exact single-qubit Cliffords
//! and `ω ∈ Z[ζ8, 1/√2]`. Measuring a single-qubit Pauli contracts the
//! corresponding eigenbra exactly, so after a full pattern the simulator
//! yields the partially-contracted vector including its global scalar,
//! not just the post-measurement stabilizer group.

use crate::bits::BitRow;
use crate::cliff::{bra_through_frame, Cliff1};
use crate::pauli::Axis;
use crate::ring::Cyclo8;

#[derive(Clone, Debug)]
pub struct GraphSim {
    n: usize,
    adj: Vec<BitRow>,
    alive: Vec<bool>,
    frames: Vec<Cliff1>,
    omega: Cyclo8,
    rand_count: usize,
}

/// Result of contracting one measurement bra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeasureOutcome {
    pub outcome: i8,
    pub was_random: bool,
}

impl GraphSim {
    /// Plain graph state on `n` qubits with the given edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj: Vec<BitRow> = (0..n).map(|_| BitRow::new(n)).collect();
        for &(a, b) in edges {
            assert_ne!(a, b);
            adj[a].set(b, true);
            adj[b].set(a, true);
        }
        Self {
            n,
            adj,
            alive: vec![true; n],
            frames: vec![Cliff1::IDENTITY; n],
            omega: Cyclo8::ONE,
            rand_count: 0,
        }
    }

    /// Apply `op` outside the existing frame on `q` (`U_q := op · U_q`).
    pub fn push_frame(&mut self, q: usize, op: &Cliff1) {
        self.frames[q] = op.mul(&self.frames[q]);
    }

    pub fn num_random(&self) -> usize {
        self.rand_count
    }

    pub fn omega(&self) -> Cyclo8 {
        self.omega
    }

    pub fn is_alive(&self, q: usize) -> bool {
        self.alive[q]
    }

    pub fn alive_qubits(&self) -> Vec<usize> {
        (0..self.n).filter(|&q| self.alive[q]).collect()
    }

    pub fn neighbors(&self, q: usize) -> Vec<usize> {
        self.adj[q].ones().collect()
    }

    pub fn frame(&self, q: usize) -> &Cliff1 {
        &self.frames[q]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].get(b)
    }

    fn local_complement(&mut self, q: usize) {
        let mask = self.adj[q].clone();
        for v in mask.ones() {
            self.adj[v].xor_assign(&mask);
            self.adj[v].set(v, false);
        }
    }

    fn delete(&mut self, q: usize) {
        let row = std::mem::replace(&mut self.adj[q], BitRow::new(self.n));
        for v in row.ones() {
            self.adj[v].set(q, false);
        }
        self.alive[q] = false;
        self.frames[q] = Cliff1::IDENTITY;
    }

    /// Contract the eigenbra of `axis` on `q`. The outcome is `preferred`
    /// whenever the measurement is random; deterministic outcomes are
    /// reported as-is.
    pub fn measure(&mut self, q: usize, axis: Axis, preferred: i8) -> MeasureOutcome {
        assert!(self.alive[q], "qubit {q} already measured");
        assert!(preferred == 1 || preferred == -1);
        let frame = self.frames[q];
        let (eff_axis, sign) = frame.conj_axis_through(axis);
        let isolated = !self.adj[q].any();
        let (outcome, was_random) = if eff_axis == Axis::X && isolated {
            (sign, false)
        } else {
            (preferred, true)
        };
        if was_random {
            self.rand_count += 1;
        }
        let (eta, ax2, eff_outcome) = bra_through_frame(&frame, axis, outcome);
        debug_assert_eq!(ax2, eff_axis);
        debug_assert_eq!(eff_outcome, outcome * sign);
        self.omega = self.omega.mul(&eta);
        match eff_axis {
            Axis::Z => {
                self.omega = self.omega.mul(&Cyclo8::monomial(0, -1));
                if eff_outcome < 0 {
                    let nbrs = self.neighbors(q);
                    for v in nbrs {
                        self.frames[v] = self.frames[v].mul(&Cliff1::z());
                    }
                }
                self.delete(q);
            }
            Axis::Y => {
                // 2^{-1/2} e^{-i ε π/4}, local complementation, S^ε on the
                // neighborhood
                self.omega = self.omega.mul(&Cyclo8::monomial(-(eff_outcome as i64), -1));
                let nbrs = self.neighbors(q);
                self.local_complement(q);
                let s_op = if eff_outcome > 0 { Cliff1::s() } else { Cliff1::sdg() };
                for v in nbrs {
                    self.frames[v] = self.frames[v].mul(&s_op);
                }
                self.delete(q);
            }
            Axis::X => {
                if isolated {
                    // forced branch, amplitude 1
                    self.delete(q);
                    return MeasureOutcome { outcome, was_random };
                }
                self.omega = self.omega.mul(&Cyclo8::monomial(0, -1));
                let nbrs = self.neighbors(q);
                let b = *nbrs.iter().min().expect("non-isolated");
                let nb = self.adj[b].clone();
                // Z-dressing sets, computed in the pre-pivot graph
                let dress: Vec<usize> = if eff_outcome > 0 {
                    nbrs.iter().copied().filter(|&w| w != b && !nb.get(w)).collect()
                } else {
                    nb.ones().filter(|&w| w != q && !self.adj[q].get(w)).collect()
                };
                self.local_complement(b);
                self.local_complement(q);
                self.local_complement(b);
                self.delete(q);
                self.frames[b] = self.frames[b].mul(&Cliff1::rot_y(eff_outcome));
                for w in dress {
                    self.frames[w] = self.frames[w].mul(&Cliff1::z());
                }
            }
        }
        MeasureOutcome { outcome, was_random }
    }

    /// Extract the surviving subsystem as `(adjacency, frames, ω, labels)`
    /// with qubits renumbered in ascending original order.
    pub fn into_parts(self) -> (Vec<BitRow>, Vec<Cliff1>, Cyclo8, Vec<usize>) {
        let labels = self.alive_qubits();
        let m = labels.len();
        let pos: std::collections::HashMap<usize, usize> =
            labels.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let mut adj = (0..m).map(|_| BitRow::new(m)).collect::<Vec<_>>();
        for (i, &q) in labels.iter().enumerate() {
            for w in self.adj[q].ones() {
                adj[i].set(pos[&w], true);
            }
        }
        let frames = labels.iter().map(|&q| self.frames[q]).collect();
        (adj, frames, self.omega, labels)
    }

    /// Dense amplitudes of the current (unnormalized) state over the alive
    /// qubits in ascending order, including ω. Test oracle for small systems.
    pub fn dense_state(&self) -> Vec<num_complex::Complex64> {
        let labels = self.alive_qubits();
        let m = labels.len();
        assert!(m <= 16, "dense_state oracle bound");
        let dim = 1usize << m;
        let norm = 2.0f64.powf(-(m as f64) / 2.0);
        let mut v = vec![num_complex::Complex64::new(0.0, 0.0); dim];
        for (x, out) in v.iter_mut().enumerate() {
            let bit = |i: usize| x >> (m - 1 - i) & 1;
            let mut edges = 0usize;
            for i in 0..m {
                for j in i + 1..m {
                    if self.adj[labels[i]].get(labels[j]) && bit(i) == 1 && bit(j) == 1 {
                        edges += 1;
                    }
                }
            }
            *out =
                num_complex::Complex64::new(if edges % 2 == 0 { norm } else { -norm }, 0.0);
        }
        for (i, &q) in labels.iter().enumerate() {
            let mat = self.frames[q].to_complex_matrix::<f64>();
            let stride = 1usize << (m - 1 - i);
            let mut w = vec![num_complex::Complex64::new(0.0, 0.0); dim];
            for (x, out) in w.iter_mut().enumerate() {
                let bit = x >> (m - 1 - i) & 1;
                let x0 = x & !stride;
                let x1 = x | stride;
                *out = mat[bit][0] * v[x0] + mat[bit][1] * v[x1];
            }
            v = w;
        }
        let om = self.omega.to_complex::<f64>();
        for a in &mut v {
            *a *= om;
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    /// Contract the eigenbra on qubit `q` of the dense before-state and
    /// compare against the simulator's after-state.
    fn check_measurement(
        n: usize,
        edges: &[(usize, usize)],
        init_frames: &[Cliff1],
        q: usize,
        axis: Axis,
        preferred: i8,
    ) {
        let mut sim = GraphSim::new(n, edges);
        for (j, f) in init_frames.iter().enumerate() {
            sim.push_frame(j, f);
        }
        let before = sim.dense_state();
        let res = sim.measure(q, axis, preferred);
        let after = sim.dense_state();
        let bra = crate::cliff::eigenbra_row(axis, res.outcome);
        let b0 = bra[0].to_complex::<f64>();
        let b1 = bra[1].to_complex::<f64>();
        let m = n;
        let dim_after = 1usize << (m - 1);
        let mut want = vec![Complex64::new(0.0, 0.0); dim_after];
        let low_bits = m - 1 - q;
        for (y, out) in want.iter_mut().enumerate() {
            let high = y >> low_bits;
            let low = y & ((1 << low_bits) - 1);
            let x0 = (high << (low_bits + 1)) | low;
            let x1 = x0 | (1 << low_bits);
            *out = b0 * before[x0] + b1 * before[x1];
        }
        assert_eq!(after.len(), want.len());
        for (a, b) in after.iter().zip(&want) {
            assert!(
                (a - b).norm() < 1e-12,
                "mismatch: axis {axis:?} preferred {preferred} outcome {} edges {edges:?}",
                res.outcome
            );
        }
    }

    fn all_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                pairs.push((a, b));
            }
        }
        (0..1usize << pairs.len())
            .map(|mask| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rules_match_dense_projection_exhaustively() {
        for n in 1..=4usize {
            for edges in all_graphs(n) {
                for q in 0..n {
                    for axis in [Axis::X, Axis::Y, Axis::Z] {
                        for preferred in [1i8, -1] {
                            check_measurement(
                                n,
                                &edges,
                                &vec![Cliff1::IDENTITY; n],
                                q,
                                axis,
                                preferred,
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rules_match_dense_projection_with_frames() {
        let pool = [
            Cliff1::IDENTITY,
            Cliff1::h(),
            Cliff1::s(),
            Cliff1::sdg(),
            Cliff1::z(),
            Cliff1::x(),
            Cliff1::rot_y(1),
            Cliff1::rot_y(-1),
            Cliff1::h().mul(&Cliff1::s()),
            Cliff1::s().mul(&Cliff1::h()),
        ];
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let n = rng.gen_range(1..=4usize);
            let graphs = all_graphs(n);
            let edges = &graphs[rng.gen_range(0..graphs.len())];
            let frames: Vec<Cliff1> =
                (0..n).map(|_| pool[rng.gen_range(0..pool.len())]).collect();
            let q = rng.gen_range(0..n);
            let axis = [Axis::X, Axis::Y, Axis::Z][rng.gen_range(0..3)];
            let preferred = if rng.gen() { 1 } else { -1 };
            check_measurement(n, edges, &frames, q, axis, preferred);
        }
    }

    #[test]
    fn measurement_order_does_not_change_the_branch_vector() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let n = 5;
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((a, b));
                    }
                }
            }
            let bases: Vec<Axis> =
                (0..3).map(|_| [Axis::X, Axis::Y, Axis::Z][rng.gen_range(0..3)]).collect();
            let run = |order: &[usize]| {
                let mut sim = GraphSim::new(n, &edges);
                let mut outs = vec![0i8; 3];
                for &i in order {
                    outs[i] = sim.measure(i, bases[i], 1).outcome;
                }
                (sim.dense_state(), outs)
            };
            let (v1, o1) = run(&[0, 1, 2]);
            let (v2, o2) = run(&[2, 0, 1]);
            // With all-+1 preferences the recorded outcomes can only differ
            // when a forced value appears in one order; restrict to the
            // identical-branch case, where the vectors must agree exactly.
            if o1 == o2 {
                for (a, b) in v1.iter().zip(&v2) {
                    assert!((a - b).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn omega_magnitude_tracks_random_count() {
        let mut sim = GraphSim::new(4, &[(0, 1), (1, 2), (2, 3)]);
        sim.measure(1, Axis::Y, 1);
        sim.measure(2, Axis::X, -1);
        sim.measure(0, Axis::Z, 1);
        let r = sim.num_random() as i64;
        let (_, half) = sim.omega().to_monomial().expect("omega stays monomial");
        assert_eq!(half, -r);
    }

    #[test]
    fn bridge_contraction_produces_cz_dressed_pair() {
        // measuring Y on the middle of a 3-path adds the outer edge with
        // S-frames: <Y_+|_b |path> = 2^{-1/2} ζ8^{-1} (S⊗S)|edge-state>
        let mut sim = GraphSim::new(3, &[(0, 1), (1, 2)]);
        let res = sim.measure(1, Axis::Y, 1);
        assert!(res.was_random);
        assert!(sim.has_edge(0, 2));
        assert_eq!(*sim.frame(0), Cliff1::s());
        assert_eq!(*sim.frame(2), Cliff1::s());
        assert_eq!(sim.omega().to_monomial(), Some((7, -1)));
    }
}
