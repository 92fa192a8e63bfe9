//! The quantum-overlap form of the partition function: Z as the pairing of a
//! product bra with the decorated-graph stabilizer state, evaluated by the
//! explicit incidence-matrix sum, for both Ising (qubit) and clock (qudit)
//! models.

use crate::bra::{alpha_from_model, ProductBra};
use crate::brute::MAX_ENUM_BITS;
use crate::decorate::{decorate, DecoratedGraph};
use crate::error::{Error, Result};
use crate::model::{ClockModel, IsingModel};
use crate::scalar::Scalar;
use crate::scaled::ScaledComplex;
use num_complex::Complex;

/// `<bra|φ_decorated>`: the bra pairs bilinearly with the state
/// `2^{-|V|/2} Σ_t |t>_vertices |parities>_edges`.
pub fn overlap_decorated<T: Scalar>(
    dg: &DecoratedGraph,
    bra: &ProductBra<T>,
) -> Result<ScaledComplex<T>> {
    let nv = dg.num_vertex_qubits();
    if bra.num_qubits() != dg.num_qubits() {
        return Err(Error::CoverageMismatch { got: bra.num_qubits(), want: dg.num_qubits() });
    }
    if nv as u32 > MAX_ENUM_BITS {
        return Err(Error::TooLarge { what: "overlap sum", got: nv as u64, limit: MAX_ENUM_BITS as u64 });
    }
    let edges = dg.source().edges();
    let mut total = ScaledComplex::zero();
    for t in 0..(1usize << nv) {
        let bit = |v: usize| t >> (nv - 1 - v) & 1;
        let mut term = Complex::new(T::one(), T::zero());
        let mut scale = ScaledComplex::one();
        for v in 0..nv {
            term = term * bra.factors[dg.vertex_qubit(v)].coeff(bit(v));
            // keep the running product in range for strongly-coupled models
            if v % 16 == 15 {
                scale = scale * term;
                term = Complex::new(T::one(), T::zero());
            }
        }
        for (k, &(a, b)) in edges.iter().enumerate() {
            term = term * bra.factors[dg.edge_qubit(k)].coeff(bit(a) ^ bit(b));
            if k % 16 == 15 {
                scale = scale * term;
                term = Complex::new(T::one(), T::zero());
            }
        }
        total += scale * term;
    }
    Ok(total * bra.scale * ScaledComplex::two_pow_half(-(nv as i64)))
}

/// Z via the overlap identity: `Z = 2^{|V|/2} <α|φ_decorated>`.
pub fn z_via_overlap<T: Scalar>(model: &IsingModel<T>) -> Result<ScaledComplex<T>> {
    let dg = decorate(&model.graph);
    let alpha = alpha_from_model(model);
    let ov = overlap_decorated(&dg, &alpha)?;
    Ok(ov * ScaledComplex::two_pow_half(model.graph.num_vertices() as i64))
}

/// The qudit analogue for clock models: Z as `q^{|V|/2}` times the pairing of
/// the weight-table bras with the difference-form qudit state
/// `q^{-|V|/2} Σ_t |t>|differences>`.
pub fn z_clock_via_overlap<T: Scalar>(model: &ClockModel<T>) -> Result<ScaledComplex<T>> {
    let dg = decorate(&model.graph);
    let nv = dg.num_vertex_qubits();
    let q = model.q;
    let states = (q as u64)
        .checked_pow(nv as u32)
        .filter(|&s| s <= 1u64 << MAX_ENUM_BITS)
        .ok_or(Error::TooLarge {
            what: "clock overlap sum",
            got: nv as u64,
            limit: MAX_ENUM_BITS as u64,
        })?;
    let edges = dg.source().edges();
    let mut t = vec![0usize; nv];
    let mut total = ScaledComplex::zero();
    for _ in 0..states {
        // qudit basis point of the state: vertex registers carry t, edge
        // registers carry the oriented difference
        let mut term = ScaledComplex::one();
        for v in 0..nv {
            term = term * model.vertex_tables[v][t[v]];
        }
        for (k, &(a, b)) in edges.iter().enumerate() {
            let d = (t[a] + q - t[b]) % q;
            term = term * model.edge_tables[k][d];
        }
        total += term;
        for v in (0..nv).rev() {
            t[v] += 1;
            if t[v] == q {
                t[v] = 0;
            } else {
                break;
            }
        }
    }
    // q^{-|V|/2} from the state, q^{+|V|/2} from the identity: they cancel.
    Ok(total)
}

/// Dense amplitudes of the decorated-graph state (vertex-qubits first, then
/// edge-qubits): `2^{-|V|/2}` exactly on the incidence-consistent basis
/// states, 0 elsewhere. Used as the reference for stabilizer cross-checks.
pub fn amplitude_vector<T: Scalar>(dg: &DecoratedGraph) -> Vec<Complex<T>> {
    let nv = dg.num_vertex_qubits();
    let ne = dg.num_edge_qubits();
    let n = nv + ne;
    assert!(n <= 26, "amplitude vector too large");
    let mut v = vec![Complex::new(T::zero(), T::zero()); 1 << n];
    let amp = T::of(2.0).powf(-T::of(nv as f64) / T::of(2.0));
    for t in 0..(1usize << nv) {
        let bit = |x: usize| t >> (nv - 1 - x) & 1;
        let mut idx = t << ne;
        for (k, &(a, b)) in dg.source().edges().iter().enumerate() {
            if bit(a) ^ bit(b) == 1 {
                idx |= 1 << (ne - 1 - k);
            }
        }
        v[idx] = Complex::new(amp, T::zero());
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bra::LocalBra;
    use crate::brute::{brute_force_z_clock, brute_force_z_ising};
    use crate::graph::Graph;
    use crate::model::{random_model, RandomShape};
    use crate::tableau::graph_state_tableau;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};

    #[test]
    fn all_unit_factors() {
        let g = Graph::cycle(4);
        let dg = decorate(&g);
        let one = Complex64::new(1.0, 0.0);
        let bra = ProductBra::new(vec![LocalBra::new(one, one); dg.num_qubits()]);
        let got = overlap_decorated(&dg, &bra).unwrap();
        // 2^{|V|} terms of weight 1, scaled by 2^{-|V|/2}
        assert!(got.rel_err(&ScaledComplex::two_pow_half(4)) < 1e-14);
    }

    #[test]
    fn coverage_mismatch_detected() {
        let g = Graph::path(2);
        let dg = decorate(&g);
        let one = Complex64::new(1.0, 0.0);
        let bra = ProductBra::new(vec![LocalBra::new(one, one); 2]);
        assert!(matches!(
            overlap_decorated(&dg, &bra),
            Err(Error::CoverageMismatch { .. })
        ));
    }

    #[test]
    fn one_vertex_field() {
        let g = Graph::empty(1);
        let gv = Complex64::new(0.3, -0.7);
        let m = IsingModel::new(g, vec![], vec![gv]).unwrap();
        let z = z_via_overlap(&m).unwrap();
        let expect = ScaledComplex::from_complex(gv.exp() + (-gv).exp());
        assert!(z.rel_err(&expect) < 1e-14);
    }

    #[test]
    fn triangle_matches_enumeration() {
        let m = IsingModel::<f64>::uniform(Graph::cycle(3), 1.0);
        let z = z_via_overlap(&m).unwrap();
        let expect = brute_force_z_ising(&m).unwrap();
        assert!(z.rel_err(&expect) < 1e-12);
        // and the closed form 2e^3 + 6e^{-1}
        let cf = 2.0 * 3.0f64.exp() + 6.0 * (-1.0f64).exp();
        assert!((z.to_complex().re - cf).abs() < 1e-10);
    }

    #[test]
    fn random_models_match_enumeration() {
        for seed in 0..25u64 {
            let m: IsingModel<f64> =
                random_model(seed, RandomShape { max_vertices: 5, max_edges: 7 });
            let a = z_via_overlap(&m).unwrap();
            let b = brute_force_z_ising(&m).unwrap();
            assert!(a.rel_err(&b) <= 1e-10, "seed {seed}: {a} vs {b}");
        }
    }

    #[test]
    fn random_bra_matches_dense_stabilizer_state() {
        let g = Graph::cycle(3);
        let dg = decorate(&g);
        let n = dg.num_qubits();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut cx = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let bra = ProductBra::new((0..n).map(|_| LocalBra::new(cx(), cx())).collect());
        let via_sum = overlap_decorated(&dg, &bra).unwrap();
        // dense route through the stabilizer tableau
        let hadamard: Vec<bool> = (0..n).map(|q| dg.is_edge_qubit(q)).collect();
        let t = graph_state_tableau(&dg.adjacency(), &hadamard);
        let psi = t.dense_vector::<f64>().unwrap();
        let mut acc = Complex64::new(0.0, 0.0);
        for (x, a) in psi.iter().enumerate() {
            let mut w = Complex64::new(1.0, 0.0);
            for (q, f) in bra.factors.iter().enumerate() {
                w *= f.coeff(x >> (n - 1 - q) & 1);
            }
            acc += w * a;
        }
        assert!(via_sum.rel_err(&ScaledComplex::from_complex(acc)) < 1e-10);
    }

    #[test]
    fn stabilizer_fixed_point_small_graphs() {
        // dense tableau vector == amplitude-formula vector
        for g in [Graph::path(3), Graph::cycle(3), Graph::grid(2, 2), Graph::empty(2)] {
            let dg = decorate(&g);
            let n = dg.num_qubits();
            if n > 12 {
                continue;
            }
            let hadamard: Vec<bool> = (0..n).map(|q| dg.is_edge_qubit(q)).collect();
            let t = graph_state_tableau(&dg.adjacency(), &hadamard);
            let dense = t.dense_vector::<f64>().unwrap();
            let amp = amplitude_vector::<f64>(&dg);
            for (a, b) in dense.iter().zip(&amp) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn clock_overlap_matches_brute() {
        let g = Graph::cycle(3);
        for q in 2..=4usize {
            let m = ClockModel::<f64>::potts(g.clone(), q, Complex64::new(0.8, 0.3)).unwrap();
            let a = z_clock_via_overlap(&m).unwrap();
            let b = brute_force_z_clock(&m).unwrap();
            assert!(a.rel_err(&b) < 1e-12);
        }
    }

    #[test]
    fn q2_clock_matches_ising_overlap() {
        for seed in 40..46u64 {
            let m: IsingModel<f64> =
                random_model(seed, RandomShape { max_vertices: 4, max_edges: 6 });
            let c = crate::model::ClockModel::from_ising(&m);
            let a = z_clock_via_overlap(&c).unwrap();
            let b = z_via_overlap(&m).unwrap();
            assert!(a.rel_err(&b) < 1e-10, "seed {seed}");
        }
    }

    #[test]
    fn potts_single_edge_value() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let m = ClockModel::<f64>::potts(g, 3, Complex64::new(1.0, 0.0)).unwrap();
        let z = z_clock_via_overlap(&m).unwrap();
        let expect = 3.0 * 1.0f64.exp() + 6.0;
        assert!((z.to_complex().re - expect).abs() < 1e-12);
    }

    #[test]
    fn all_ones_gives_q_pow_v() {
        let g = Graph::path(3);
        let ones = vec![Complex64::new(1.0, 0.0); 3];
        let m = ClockModel::new(g, 3, vec![ones.clone(); 2], vec![ones; 3]).unwrap();
        let z = z_clock_via_overlap(&m).unwrap();
        assert!((z.to_complex().re - 27.0).abs() < 1e-12);
    }
}
