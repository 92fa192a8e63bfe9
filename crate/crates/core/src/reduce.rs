//! The end-to-end reduction: an Ising model on an arbitrary graph becomes a
//! 2D-lattice instance with homogeneous imaginary-ratio edge weights whose
//! weighted sum reproduces the original partition function up to the emitted
//! constant.

use crate::bra::ProductBra;
use crate::branch::{execute_branch, BranchCertificate, OutcomePolicy};
use crate::decorate::decorate;
use crate::error::{Error, Result};
use crate::lattice::{Ising2DInstance, WeightPair};
use crate::layout::{layout_on_cluster, SiteRole};
use crate::lift::lift_to_decorated_cluster;
use crate::model::IsingModel;
use crate::pauli::Axis;
use crate::scalar::Scalar;
use crate::scaled::ScaledComplex;
use crate::synth::synthesize_prep_circuit;
use num_complex::Complex;
use num_traits::Zero;

/// Where an instance site came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiteProvenance {
    /// Carries the given decorated-graph qubit of the source model.
    OutputQubit(usize),
    /// A measured pattern site with its basis and chosen outcome.
    Pattern(Axis, i8),
}

/// Per-stage metrics of a reduction.
#[derive(Clone, Copy, Debug, Default)]
pub struct ReductionDiagnostics {
    pub width: usize,
    pub height: usize,
    pub sites: usize,
    pub random_outcomes: usize,
    pub decoration_outcomes: usize,
    pub gate_count: usize,
    pub swap_count: usize,
    pub bridge_count: usize,
    pub phase_octant: u8,
}

/// The emitted instance plus everything needed to audit it.
#[derive(Clone, Debug)]
pub struct ReductionResult<T> {
    pub instance: Ising2DInstance<T>,
    pub a_total: ScaledComplex<T>,
    /// Row-major per-site provenance.
    pub site_provenance: Vec<SiteProvenance>,
    /// Per lattice edge (canonical order): the decoration edge-qubit index.
    pub edge_provenance: Vec<usize>,
    pub diagnostics: ReductionDiagnostics,
}

/// Turn a lifted product bra into the lattice instance, folding the scale
/// factors and the decorated-cluster normalization into `A_total`.
pub fn extract_instance<T: Scalar>(
    gamma: &ProductBra<T>,
    prefactor: ScaledComplex<T>,
    width: usize,
    height: usize,
) -> Result<(Ising2DInstance<T>, ScaledComplex<T>)> {
    let m = width * height;
    let ne = width * (height - 1) + height * (width - 1);
    if gamma.num_qubits() != m + ne {
        return Err(Error::CoverageMismatch { got: gamma.num_qubits(), want: m + ne });
    }
    let site_weights: Vec<WeightPair<T>> =
        (0..m).map(|s| WeightPair(gamma.factors[s].w0, gamma.factors[s].w1)).collect();
    let edge_weights: Vec<WeightPair<T>> = (0..ne)
        .map(|k| WeightPair(gamma.factors[m + k].w0, gamma.factors[m + k].w1))
        .collect();
    let instance =
        Ising2DInstance::new(width, height, edge_weights, site_weights, ScaledComplex::one())?;
    let a_total = prefactor * gamma.scale * ScaledComplex::two_pow_half(-(m as i64));
    Ok((instance, a_total))
}

/// Compile a model down to the lattice. The contract is
/// `Z_G = A_total · Z_2D(instance)`, checked end to end by
/// [`crate::lattice::verify_reduction`] whenever both sides are small enough
/// to evaluate.
pub fn reduce<T: Scalar>(model: &IsingModel<T>) -> Result<ReductionResult<T>> {
    reduce_with_policy(model, OutcomePolicy::AllPlus)
}

pub fn reduce_with_policy<T: Scalar>(
    model: &IsingModel<T>,
    policy: OutcomePolicy,
) -> Result<ReductionResult<T>> {
    if model.graph.num_vertices() == 0 {
        // Z of the empty model is 1; emit the trivial pinned instance.
        let instance = Ising2DInstance::new(
            1,
            1,
            vec![],
            vec![WeightPair(Complex::new(T::one(), T::zero()), Complex::zero())],
            ScaledComplex::one(),
        )?;
        return Ok(ReductionResult {
            instance,
            a_total: ScaledComplex::one(),
            site_provenance: vec![SiteProvenance::Pattern(Axis::Z, 1)],
            edge_provenance: vec![],
            diagnostics: ReductionDiagnostics {
                width: 1,
                height: 1,
                sites: 1,
                ..Default::default()
            },
        });
    }
    let dg = decorate(&model.graph);
    let circuit = synthesize_prep_circuit(&dg);
    let layout = layout_on_cluster(&circuit);
    let cert = execute_branch(&layout, &dg, policy)?;
    let (gamma, prefactor) = lift_to_decorated_cluster(&cert, model)?;
    let (instance, a_total) =
        extract_instance(&gamma, prefactor, layout.width, layout.height)?;
    check_homogeneity(&instance)?;
    Ok(assemble(model, cert, instance, a_total))
}

/// Every emitted edge-weight ratio must be ±i: all coupling information lives
/// in the site weights.
fn check_homogeneity<T: Scalar>(instance: &Ising2DInstance<T>) -> Result<()> {
    let tol = T::of(1e-12);
    for (k, w) in instance.edge_weights().iter().enumerate() {
        let r = w.1 / w.0;
        let plus = (r - Complex::new(T::zero(), T::one())).norm();
        let minus = (r + Complex::new(T::zero(), T::one())).norm();
        if plus.min(minus) > tol {
            return Err(Error::PatternMismatch(format!(
                "edge {k} ratio is not ±i"
            )));
        }
    }
    Ok(())
}

fn assemble<T: Scalar>(
    _model: &IsingModel<T>,
    cert: BranchCertificate,
    instance: Ising2DInstance<T>,
    a_total: ScaledComplex<T>,
) -> ReductionResult<T> {
    let layout = &cert.layout;
    let site_provenance: Vec<SiteProvenance> = (0..layout.num_sites())
        .map(|s| match layout.roles[s] {
            SiteRole::Output(q) => SiteProvenance::OutputQubit(q),
            SiteRole::Measured(b) => {
                SiteProvenance::Pattern(b, cert.outcome_at(s).expect("measured"))
            }
        })
        .collect();
    let edge_provenance: Vec<usize> = (0..instance.edge_list().len()).collect();
    let diagnostics = ReductionDiagnostics {
        width: layout.width,
        height: layout.height,
        sites: layout.num_sites(),
        random_outcomes: cert.r,
        decoration_outcomes: instance.edge_list().len(),
        gate_count: layout.stats.gate_count,
        swap_count: layout.stats.swaps,
        bridge_count: layout.stats.bridges,
        phase_octant: cert.phase_octant,
    };
    ReductionResult { instance, a_total, site_provenance, edge_provenance, diagnostics }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::brute_force_z_ising;
    use crate::graph::Graph;
    use crate::lattice::{eval_transfer_matrix, verify_reduction};
    use num_complex::Complex64;

    fn check_model(model: &IsingModel<f64>, tol: f64) {
        let red = reduce(model).expect("reduction succeeds");
        let rep = verify_reduction(model, &red).expect("verifiable sizes");
        assert!(
            rep.rel_err <= tol,
            "rel err {} for graph |V|={} |E|={} ({}x{})",
            rep.rel_err,
            model.graph.num_vertices(),
            model.graph.num_edges(),
            red.diagnostics.width,
            red.diagnostics.height,
        );
    }

    #[test]
    fn single_edge_reduction() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let m = IsingModel::<f64>::uniform(g, 1.0);
        let red = reduce(&m).unwrap();
        // Z = 2e + 2/e
        let z = eval_transfer_matrix(&red.instance).unwrap().value * red.a_total;
        let expect = 2.0 * 1.0f64.exp() + 2.0 * (-1.0f64).exp();
        assert!((z.to_complex().re - expect).abs() <= 1e-8 * expect);
        assert!((z.to_complex().im).abs() <= 1e-8 * expect);
    }

    #[test]
    fn zero_coupling_counts_configurations() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let m = IsingModel::<f64>::uniform(g, 0.0);
        let red = reduce(&m).unwrap();
        let z = eval_transfer_matrix(&red.instance).unwrap().value * red.a_total;
        assert!((z.to_complex() - Complex64::new(8.0, 0.0)).norm() < 1e-8 * 8.0);
    }

    #[test]
    fn triangle_with_fields() {
        let g = Graph::cycle(3);
        let m = IsingModel::new(
            g,
            vec![Complex64::new(1.0, 0.0); 3],
            vec![Complex64::new(0.3, 0.0); 3],
        )
        .unwrap();
        check_model(&m, 1e-8);
    }

    #[test]
    fn empty_model_reduces_to_pinned_site() {
        let m = IsingModel::<f64>::uniform(Graph::empty(0), 0.0);
        let red = reduce(&m).unwrap();
        let z = crate::lattice::eval_brute(&red.instance).unwrap() * red.a_total;
        assert!((z.to_complex() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn isolated_vertices_reduce() {
        let m = IsingModel::new(
            Graph::empty(2),
            vec![],
            vec![Complex64::new(0.2, 0.1), Complex64::new(-0.4, 0.5)],
        )
        .unwrap();
        check_model(&m, 1e-9);
        let b = brute_force_z_ising(&m).unwrap();
        let red = reduce(&m).unwrap();
        let z = eval_transfer_matrix(&red.instance).unwrap().value * red.a_total;
        assert!(b.rel_err(&z) < 1e-9);
    }

    #[test]
    fn branch_independence() {
        let g = Graph::cycle(3);
        let m = IsingModel::new(
            g,
            vec![
                Complex64::new(0.4, 0.2),
                Complex64::new(-0.3, 0.6),
                Complex64::new(0.8, -0.1),
            ],
            vec![Complex64::new(0.1, 0.3); 3],
        )
        .unwrap();
        let base = reduce(&m).unwrap();
        let zb = eval_transfer_matrix(&base.instance).unwrap().value * base.a_total;
        let mut distinct = 0;
        for site in [0usize, 3, 7, 11] {
            let alt = reduce_with_policy(&m, OutcomePolicy::FlipSite(site)).unwrap();
            let za = eval_transfer_matrix(&alt.instance).unwrap().value * alt.a_total;
            assert!(zb.rel_err(&za) <= 1e-8, "site {site}");
            if alt.instance != base.instance {
                distinct += 1;
            }
        }
        assert!(distinct > 0, "flipping outcomes should change the instance");
    }

    #[test]
    fn determinism() {
        let g = Graph::cycle(4);
        let m = IsingModel::<f64>::uniform(g, 0.7);
        let a = reduce(&m).unwrap();
        let b = reduce(&m).unwrap();
        assert_eq!(a.instance, b.instance);
        assert_eq!(a.a_total, b.a_total);
    }
}
