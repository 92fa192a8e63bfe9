//! Executing a measurement pattern on the cluster and certifying the branch:
//! the pattern must prepare the decorated-graph state up to a Pauli frame,
//! with the frame and the branch's exact scalar solved rather than assumed.

use crate::bits::BitRow;
use crate::cliff::Cliff1;
use crate::decorate::DecoratedGraph;
use crate::error::{Error, Result};
use crate::gauss::framed_graph_amplitude;
use crate::graphsim::GraphSim;
use crate::layout::{ClusterLayout, SiteRole};
use crate::pauli::{Axis, PauliOperator};
use crate::ring::Cyclo8;
use crate::tableau::{find_pauli_correction, graph_state_tableau, states_equal, StabilizerTableau};

/// Which outcome to prefer at each measured site.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutcomePolicy {
    AllPlus,
    /// Prefer −1 at one site, +1 elsewhere.
    FlipSite(usize),
}

impl OutcomePolicy {
    fn preferred(&self, site: usize) -> i8 {
        match *self {
            OutcomePolicy::AllPlus => 1,
            OutcomePolicy::FlipSite(s) if s == site => -1,
            OutcomePolicy::FlipSite(_) => 1,
        }
    }
}

/// A certified measurement branch.
///
/// The defining identity is `Σ |φ> = 2^{r/2} (I ⊗ <β|) |C>` with
/// `Σ = ζ8^{phase_octant} · sigma`, `|φ>` the decorated-graph state and
/// `<β|` the product of outcome eigenbras over the measured sites.
#[derive(Clone, Debug)]
pub struct BranchCertificate {
    pub layout: ClusterLayout,
    /// Outcome per measured site, aligned with `layout.order`.
    pub outcomes: Vec<i8>,
    /// Number of random (non-forced) measurement outcomes.
    pub r: usize,
    /// Pauli part of the correction Σ.
    pub sigma: PauliOperator,
    /// Residual eighth-root exponent of Σ (0 or 1 after normalization).
    pub phase_octant: u8,
    /// `P` with `P |got> = μ |φ>`; `Σ = 2^{r/2} ω μ^{-1} P†`.
    pub correction: PauliOperator,
    pub mu: Cyclo8,
    pub omega: Cyclo8,
}

impl BranchCertificate {
    /// Basis and outcome for each measured site, in measurement order.
    pub fn measured(&self) -> Vec<(usize, Axis, i8)> {
        self.layout
            .order
            .iter()
            .zip(&self.outcomes)
            .map(|(&site, &o)| match self.layout.roles[site] {
                SiteRole::Measured(b) => (site, b, o),
                SiteRole::Output(_) => unreachable!("order only lists measured sites"),
            })
            .collect()
    }

    pub fn outcome_at(&self, site: usize) -> Option<i8> {
        self.layout.order.iter().position(|&s| s == site).map(|i| self.outcomes[i])
    }
}

/// Run the pattern against the cluster state and certify it.
///
/// Fails with [`Error::PatternMismatch`] only on a compiler bug: a conforming
/// layout always prepares the target up to a Pauli frame.
pub fn execute_branch(
    layout: &ClusterLayout,
    dg: &DecoratedGraph,
    policy: OutcomePolicy,
) -> Result<BranchCertificate> {
    let n = dg.num_qubits();
    if layout.num_outputs() != n {
        return Err(Error::PatternMismatch(format!(
            "{} outputs for {} qubits",
            layout.num_outputs(),
            n
        )));
    }
    let m = layout.num_sites();
    let mut sim = GraphSim::new(m, &layout.cluster_edges());
    let mut outcomes = Vec::with_capacity(layout.order.len());
    for &site in &layout.order {
        let SiteRole::Measured(basis) = layout.roles[site] else {
            unreachable!("order lists only measured sites")
        };
        let res = sim.measure(site, basis, policy.preferred(site));
        outcomes.push(res.outcome);
    }
    let r = sim.num_random();
    let (adj_sites, frames_sites, omega, labels) = sim.into_parts();
    // permute the surviving subsystem into decorated-graph qubit order
    let qubit_of_site: std::collections::HashMap<usize, usize> =
        layout.outputs().into_iter().collect();
    let mut pos_of_qubit = vec![usize::MAX; n];
    for (pos, &site) in labels.iter().enumerate() {
        let Some(&q) = qubit_of_site.get(&site) else {
            return Err(Error::PatternMismatch(format!("unmeasured non-output site {site}")));
        };
        pos_of_qubit[q] = pos;
    }
    let mut got_adj: Vec<BitRow> = (0..n).map(|_| BitRow::new(n)).collect();
    for qa in 0..n {
        for qb in 0..n {
            if qa != qb && adj_sites[pos_of_qubit[qa]].get(pos_of_qubit[qb]) {
                got_adj[qa].set(qb, true);
            }
        }
    }
    let got_frames: Vec<Cliff1> = (0..n).map(|q| frames_sites[pos_of_qubit[q]]).collect();

    // group-level correction: P · got = target
    let t_got = framed_graph_tableau(&got_adj, &got_frames);
    let hadamard: Vec<bool> = (0..n).map(|q| dg.is_edge_qubit(q)).collect();
    let t_tgt = graph_state_tableau(&dg.adjacency(), &hadamard);
    let p = find_pauli_correction(&t_got, &t_tgt)
        .map_err(|_| Error::PatternMismatch("pattern does not prepare target".into()))?;

    // exact phase: compare one amplitude of P|got> against the target state,
    // whose amplitude at the all-zero basis state is 2^{-|V|/2}
    let (shifted, k) = p.bra_action(&BitRow::new(n));
    let amp = framed_graph_amplitude(&got_adj, &got_frames, &shifted);
    if amp.is_zero() {
        return Err(Error::PatternMismatch("correction misses the target support".into()));
    }
    let nv = dg.num_vertex_qubits() as i64;
    let mu = amp.mul(&Cyclo8::i_pow(k as i64)).mul(&Cyclo8::monomial(0, nv));
    let Some((_, mu_half)) = mu.to_monomial() else {
        return Err(Error::PatternMismatch("branch phase is not unimodular".into()));
    };
    if mu_half != 0 {
        return Err(Error::PatternMismatch(format!(
            "branch amplitude has magnitude 2^{}/2",
            mu_half
        )));
    }
    // ω magnitude must be 2^{-r/2}
    let (_, om_half) = omega.to_monomial().ok_or_else(|| {
        Error::PatternMismatch("branch scalar is not a monomial".into())
    })?;
    if om_half != -(r as i64) {
        return Err(Error::PatternMismatch(format!(
            "branch scalar 2^{om_half}/2 does not match r = {r}"
        )));
    }
    // Σ = 2^{r/2} ω μ^{-1} P†
    let eta = Cyclo8::monomial(0, r as i64)
        .mul(&omega)
        .mul(&mu.monomial_inverse().expect("mu is a unit"));
    let (eta_zeta, eta_half) = eta.to_monomial().expect("eta is a monomial");
    debug_assert_eq!(eta_half, 0);
    let mut sigma = p.adjoint();
    let octant = eta_zeta % 2;
    sigma.phase = (sigma.phase + (eta_zeta - octant) / 2) % 4;

    // stabilizer-level certificate check
    let mut after = t_got.clone();
    after.apply_pauli(&sigma);
    if !states_equal(&after, &t_tgt) {
        return Err(Error::PatternMismatch("stabilizer check failed".into()));
    }

    Ok(BranchCertificate {
        layout: layout.clone(),
        outcomes,
        r,
        sigma,
        phase_octant: octant,
        correction: p,
        mu,
        omega,
    })
}

/// Tableau of `(⊗ frames) |graph state of adj>`.
pub fn framed_graph_tableau(adj: &[BitRow], frames: &[Cliff1]) -> StabilizerTableau {
    let n = adj.len();
    let lists: Vec<Vec<usize>> = adj.iter().map(|row| row.ones().collect()).collect();
    let mut t = graph_state_tableau(&lists, &vec![false; n]);
    t.apply_local_cliffords(frames);
    t
}
