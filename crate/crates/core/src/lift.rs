//! Lifting a certified branch from the plain cluster to the decorated
//! cluster: every cluster edge is split by an edge-qubit measured in the Y
//! basis, and the resulting local correction is composed into the site bras.

use crate::bra::{eigenbra, LocalBra, ProductBra};
use crate::branch::BranchCertificate;
use crate::cliff::Cliff1;
use crate::decorate::decorate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graphsim::GraphSim;
use crate::layout::SiteRole;
use crate::model::IsingModel;
use crate::pauli::Axis;
use crate::ring::Cyclo8;
use crate::scalar::Scalar;
use crate::scaled::ScaledComplex;

/// Decoration data for a W x H cluster: the measured edge-qubits leave the
/// diagonal correction `V_a` on every site, with scalar `ω'`.
pub struct DecorationLift {
    pub corrections: Vec<Cliff1>,
    pub omega: Cyclo8,
    pub r_prime: usize,
    pub num_edge_qubits: usize,
}

/// Y-measure all edge-qubits of the decorated cluster (preferred outcome +1)
/// and return the induced local correction, computed by the graph-state
/// engine and cross-checked against the closed form
/// `V_a = diag(1, (-i)^{deg a})`.
pub fn decoration_lift(width: usize, height: usize) -> Result<DecorationLift> {
    let grid = Graph::grid(width, height);
    let cdg = decorate(&grid);
    let m = grid.num_vertices();
    let ne = grid.num_edges();
    let mut sim = GraphSim::new(cdg.num_qubits(), &cdg.edges());
    for k in 0..ne {
        sim.push_frame(cdg.edge_qubit(k), &Cliff1::h());
    }
    let mut r_prime = 0;
    for k in 0..ne {
        let res = sim.measure(cdg.edge_qubit(k), Axis::Y, 1);
        if res.was_random {
            r_prime += 1;
        }
        if res.outcome != 1 {
            return Err(Error::PatternMismatch("decoration outcome forced negative".into()));
        }
    }
    if r_prime != ne {
        return Err(Error::PatternMismatch("decoration measurements must all be random".into()));
    }
    let (adj, frames, omega, labels) = sim.into_parts();
    debug_assert_eq!(labels, (0..m).collect::<Vec<_>>());
    // the surviving graph must be exactly the cluster grid
    for (a, row) in adj.iter().enumerate() {
        for b in 0..m {
            let want = grid.edges().iter().any(|&(x, y)| (x, y) == (a.min(b), a.max(b)));
            if row.get(b) != want {
                return Err(Error::PatternMismatch(format!(
                    "decorated lift graph mismatch at ({a},{b})"
                )));
            }
        }
    }
    // closed form: diag(1, (-i)^{deg}), no residual global phase per site
    let degs: Vec<i64> = (0..m).map(|a| adj[a].count_ones() as i64).collect();
    for (a, f) in frames.iter().enumerate() {
        let want = Cliff1::phase_gate(-degs[a]);
        if *f != want {
            return Err(Error::PatternMismatch(format!(
                "site correction at {a} is not diag(1, (-i)^deg)"
            )));
        }
    }
    Ok(DecorationLift { corrections: frames, omega, r_prime, num_edge_qubits: ne })
}

/// Assemble the full product bra over the decorated cluster for a certified
/// branch and a model: output sites carry the model's coupling bras composed
/// with the branch correction, measured sites carry their outcome eigenbras,
/// all sites composed with the decoration correction, and every edge-qubit
/// carries the Y+ eigenbra. Returns the bra together with the accumulated
/// power-of-two prefactor `2^{(|V| + r + r')/2}`.
pub fn lift_to_decorated_cluster<T: Scalar>(
    cert: &BranchCertificate,
    model: &IsingModel<T>,
) -> Result<(ProductBra<T>, ScaledComplex<T>)> {
    let layout = &cert.layout;
    let lift = decoration_lift(layout.width, layout.height)?;
    let nv = model.graph.num_vertices();
    let m = layout.num_sites();

    let alpha = |qubit: usize| -> LocalBra<T> {
        if qubit < nv {
            let g = model.vertex_fields[qubit];
            LocalBra::new(g.exp(), (-g).exp())
        } else {
            let k = model.edge_couplings[qubit - nv];
            LocalBra::new(k.exp(), (-k).exp())
        }
    };

    let mut factors: Vec<LocalBra<T>> = Vec::with_capacity(m + lift.num_edge_qubits);
    for site in 0..m {
        let base = match layout.roles[site] {
            SiteRole::Output(qubit) => {
                // <α_q| · (X^x Z^z) picked from the branch correction
                let mut b = alpha(qubit);
                if cert.correction.x.get(qubit) {
                    b = LocalBra::new(b.w1, b.w0);
                }
                if cert.correction.z.get(qubit) {
                    b = LocalBra::new(b.w0, -b.w1);
                }
                b
            }
            SiteRole::Measured(basis) => {
                let outcome = cert.outcome_at(site).expect("measured site has an outcome");
                eigenbra(basis, outcome)
            }
        };
        let vdg = lift.corrections[site].adjoint().to_complex_matrix::<T>();
        factors.push(base.apply_matrix(&vdg));
    }
    for _ in 0..lift.num_edge_qubits {
        factors.push(eigenbra(Axis::Y, 1));
    }

    // unit scale: i^{phase(P)} · μ ω^{-1} ω'^{-1} with the 2-powers split off
    let unit = Cyclo8::i_pow(cert.correction.phase as i64)
        .mul(&cert.mu)
        .mul(&cert.omega.monomial_inverse().expect("omega is a unit monomial"))
        .mul(&lift.omega.monomial_inverse().expect("omega' is a unit monomial"));
    let (zeta, halves) = unit.to_monomial().expect("branch scale is a monomial");
    if halves != (cert.r + lift.r_prime) as i64 {
        return Err(Error::PatternMismatch(format!(
            "scale magnitude 2^{halves}/2 does not match r + r' = {}",
            cert.r + lift.r_prime
        )));
    }
    let mut gamma = ProductBra::new(factors);
    gamma.scale = Cyclo8::zeta(zeta as i64).to_scaled();
    let prefactor =
        ScaledComplex::two_pow_half((nv + cert.r + lift.r_prime) as i64);
    Ok((gamma, prefactor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    /// Dense check of the decoration identity on small clusters:
    /// `(I ⊗ <Y+|^{edge-qubits}) |φ_decorated> = ω' (⊗ V_a) |C>`.
    fn check_lift_dense(width: usize, height: usize) {
        let grid = Graph::grid(width, height);
        let cdg = decorate(&grid);
        let n = cdg.num_qubits();
        let m = grid.num_vertices();
        assert!(n <= 14, "dense check bound");
        // left side from the amplitude formula of the decorated state
        let phi = crate::overlap::amplitude_vector::<f64>(&cdg);
        let ne = cdg.num_edge_qubits();
        let mut lhs = phi;
        for k in (0..ne).rev() {
            // contract <Y+| on edge-qubit m + k (lowest-significance qubits last)
            let qubits_left = m + k + 1;
            let dim = 1usize << (qubits_left - 1);
            let mut next = vec![Complex64::new(0.0, 0.0); dim];
            let b = crate::cliff::eigenbra_row(Axis::Y, 1);
            let b0 = b[0].to_complex::<f64>();
            let b1 = b[1].to_complex::<f64>();
            for (y, out) in next.iter_mut().enumerate() {
                *out = b0 * lhs[y << 1] + b1 * lhs[(y << 1) | 1];
            }
            lhs = next;
        }
        // right side from the computed corrections
        let lift = decoration_lift(width, height).unwrap();
        let mut rhs = vec![Complex64::new(0.0, 0.0); 1 << m];
        let norm = 2.0f64.powf(-(m as f64) / 2.0);
        for (x, out) in rhs.iter_mut().enumerate() {
            let bit = |s: usize| x >> (m - 1 - s) & 1;
            let mut edges = 0;
            for &(a, b) in grid.edges() {
                if bit(a) == 1 && bit(b) == 1 {
                    edges += 1;
                }
            }
            *out = Complex64::new(if edges % 2 == 0 { norm } else { -norm }, 0.0);
        }
        for (s, v) in lift.corrections.iter().enumerate() {
            let mat = v.to_complex_matrix::<f64>();
            // diagonal, so apply pointwise
            for (x, amp) in rhs.iter_mut().enumerate() {
                let bit = x >> (m - 1 - s) & 1;
                *amp *= mat[bit][bit];
            }
        }
        let om = lift.omega.to_complex::<f64>();
        for amp in &mut rhs {
            *amp *= om;
        }
        assert_eq!(lhs.len(), rhs.len());
        for (a, b) in lhs.iter().zip(&rhs) {
            assert!((a - b).norm() < 1e-12, "{width}x{height}: {a} vs {b}");
        }
    }

    #[test]
    fn decoration_identity_1x2() {
        check_lift_dense(2, 1);
    }

    #[test]
    fn decoration_identity_2x2() {
        check_lift_dense(2, 2);
    }

    #[test]
    fn decoration_identity_2x3() {
        check_lift_dense(3, 2);
    }

    #[test]
    fn corrections_follow_degree() {
        let lift = decoration_lift(3, 2).unwrap();
        assert_eq!(lift.r_prime, 7);
        // corner sites of a 3x2 grid have degree 2: diag(1, -1) = Z
        assert_eq!(lift.corrections[0], Cliff1::phase_gate(-2));
    }
}
