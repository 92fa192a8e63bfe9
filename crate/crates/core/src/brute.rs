//! Exhaustive-enumeration partition-function oracles. Everything else in the
//! crate is ultimately checked against these sums.

use crate::error::{Error, Result};
use crate::model::{ClockModel, IsingModel};
use crate::scalar::Scalar;
use crate::scaled::ScaledComplex;
use num_complex::Complex;

/// Default enumeration bound: at most `2^26` configurations.
pub const MAX_ENUM_BITS: u32 = 26;

/// Z of an Ising model by summing all `2^|V|` configurations.
///
/// Configurations are enumerated with vertex 0 as the most significant bit;
/// bit 0 means spin +1. The per-configuration weight is computed in scaled
/// form, so large couplings cannot overflow.
pub fn brute_force_z_ising<T: Scalar>(model: &IsingModel<T>) -> Result<ScaledComplex<T>> {
    brute_force_z_ising_bounded(model, MAX_ENUM_BITS)
}

pub fn brute_force_z_ising_bounded<T: Scalar>(
    model: &IsingModel<T>,
    max_bits: u32,
) -> Result<ScaledComplex<T>> {
    let nv = model.graph.num_vertices();
    if nv as u32 > max_bits {
        return Err(Error::TooLarge {
            what: "Ising enumeration",
            got: nv as u64,
            limit: max_bits as u64,
        });
    }
    let spin = |cfg: usize, v: usize| -> T {
        // vertex 0 = most significant bit; bit 0 -> spin +1
        if cfg >> (nv - 1 - v) & 1 == 0 {
            T::one()
        } else {
            -T::one()
        }
    };
    let mut z = ScaledComplex::zero();
    for cfg in 0..(1usize << nv) {
        let mut arg = Complex::new(T::zero(), T::zero());
        for (k, &(a, b)) in model.graph.edges().iter().enumerate() {
            arg = arg + model.edge_couplings[k] * (spin(cfg, a) * spin(cfg, b));
        }
        for (v, g) in model.vertex_fields.iter().enumerate() {
            arg = arg + *g * spin(cfg, v);
        }
        z += ScaledComplex::exp(arg);
    }
    Ok(z)
}

/// Z of a clock model by summing all `q^|V|` configurations. Differences are
/// taken along the stored edge orientation.
pub fn brute_force_z_clock<T: Scalar>(model: &ClockModel<T>) -> Result<ScaledComplex<T>> {
    brute_force_z_clock_bounded(model, MAX_ENUM_BITS)
}

pub fn brute_force_z_clock_bounded<T: Scalar>(
    model: &ClockModel<T>,
    max_bits: u32,
) -> Result<ScaledComplex<T>> {
    let nv = model.graph.num_vertices();
    let q = model.q;
    let states = (q as u64).checked_pow(nv as u32).filter(|&s| s <= 1u64 << max_bits);
    let Some(states) = states else {
        return Err(Error::TooLarge {
            what: "clock enumeration",
            got: nv as u64,
            limit: max_bits as u64,
        });
    };
    let mut t = vec![0usize; nv];
    let mut z = ScaledComplex::zero();
    for _ in 0..states {
        let mut w = ScaledComplex::one();
        for (k, &(a, b)) in model.graph.edges().iter().enumerate() {
            let d = (t[a] + q - t[b]) % q;
            w = w * model.edge_tables[k][d];
        }
        for (v, table) in model.vertex_tables.iter().enumerate() {
            w = w * table[t[v]];
        }
        z += w;
        // odometer increment, least significant at the last vertex
        for v in (0..nv).rev() {
            t[v] += 1;
            if t[v] == q {
                t[v] = 0;
            } else {
                break;
            }
        }
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::model::{random_model, RandomShape};
    use num_complex::Complex64;

    fn close(z: &ScaledComplex<f64>, expect: Complex64, tol: f64) {
        let got = z.to_complex();
        assert!(
            (got - expect).norm() <= tol * expect.norm().max(1.0),
            "got {got}, expected {expect}"
        );
    }

    #[test]
    fn single_free_spin() {
        let m = IsingModel::<f64>::uniform(Graph::empty(1), 0.0);
        close(&brute_force_z_ising(&m).unwrap(), Complex64::new(2.0, 0.0), 1e-14);
    }

    #[test]
    fn single_edge_closed_form() {
        // Z = 2e^K + 2e^{-K}
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let m = IsingModel::<f64>::uniform(g, 1.0);
        let expect = 2.0 * 1.0f64.exp() + 2.0 * (-1.0f64).exp();
        close(&brute_force_z_ising(&m).unwrap(), Complex64::new(expect, 0.0), 1e-14);
    }

    #[test]
    fn imaginary_coupling_zero() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let k = Complex64::new(0.0, std::f64::consts::FRAC_PI_2);
        let m = IsingModel::new(g, vec![k], vec![Complex64::new(0.0, 0.0); 2]).unwrap();
        let z = brute_force_z_ising(&m).unwrap();
        assert!(z.to_complex().norm() < 1e-14);
    }

    #[test]
    fn triangle_closed_form() {
        // Z = 2e^3 + 6e^{-1}
        let m = IsingModel::<f64>::uniform(Graph::cycle(3), 1.0);
        let expect = 2.0 * 3.0f64.exp() + 6.0 * (-1.0f64).exp();
        close(&brute_force_z_ising(&m).unwrap(), Complex64::new(expect, 0.0), 1e-13);
    }

    #[test]
    fn size_bound_enforced() {
        let m = IsingModel::<f64>::uniform(Graph::empty(27), 0.0);
        assert!(matches!(
            brute_force_z_ising(&m),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn potts_single_edge() {
        // q=3, K=1: 3 agreeing configs of weight e, 6 of weight 1
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let m = ClockModel::<f64>::potts(g, 3, Complex64::new(1.0, 0.0)).unwrap();
        let expect = 3.0 * 1.0f64.exp() + 6.0;
        close(&brute_force_z_clock(&m).unwrap(), Complex64::new(expect, 0.0), 1e-14);
    }

    #[test]
    fn all_ones_tables_count_configurations() {
        for q in 2..=4usize {
            let g = Graph::cycle(3);
            let ones = vec![Complex64::new(1.0, 0.0); q];
            let m =
                ClockModel::new(g, q, vec![ones.clone(); 3], vec![ones.clone(); 3]).unwrap();
            let z = brute_force_z_clock(&m).unwrap();
            close(&z, Complex64::new((q as f64).powi(3), 0.0), 1e-14);
        }
    }

    #[test]
    fn potts_triangle_enumeration() {
        // Independent count: 27 configs on the triangle; weight e^{K * #agreeing edges}.
        // all-equal: 3 configs, 3 edges agree; two-equal: 18 configs, 1 edge; all-diff: 6, 0.
        let m = ClockModel::<f64>::potts(Graph::cycle(3), 3, Complex64::new(1.0, 0.0)).unwrap();
        let e = 1.0f64.exp();
        let expect = 3.0 * e.powi(3) + 18.0 * e + 6.0;
        close(&brute_force_z_clock(&m).unwrap(), Complex64::new(expect, 0.0), 1e-13);
    }

    #[test]
    fn q2_clock_matches_ising() {
        for seed in 0..10u64 {
            let m: IsingModel<f64> =
                random_model(seed, RandomShape { max_vertices: 4, max_edges: 5 });
            let c = ClockModel::from_ising(&m);
            let zi = brute_force_z_ising(&m).unwrap();
            let zc = brute_force_z_clock(&c).unwrap();
            assert!(zi.rel_err(&zc) < 1e-12, "seed {seed}: {zi} vs {zc}");
        }
    }

    #[test]
    fn global_flip_symmetry_zero_field() {
        // With g = 0, restricting to spin_0 = +1 and doubling reproduces Z.
        for seed in 0..8u64 {
            let mut m: IsingModel<f64> =
                random_model(seed, RandomShape { max_vertices: 5, max_edges: 7 });
            for g in &mut m.vertex_fields {
                *g = Complex64::new(0.0, 0.0);
            }
            let nv = m.graph.num_vertices();
            let full = brute_force_z_ising(&m).unwrap();
            // restricted sum: enumerate half the configurations directly
            let mut half = ScaledComplex::zero();
            for cfg in 0..(1usize << (nv - 1)) {
                let spin = |v: usize| -> f64 {
                    if v == 0 {
                        return 1.0;
                    }
                    if cfg >> (nv - 1 - v) & 1 == 0 {
                        1.0
                    } else {
                        -1.0
                    }
                };
                let mut arg = Complex64::new(0.0, 0.0);
                for (k, &(a, b)) in m.graph.edges().iter().enumerate() {
                    arg += m.edge_couplings[k] * spin(a) * spin(b);
                }
                half += ScaledComplex::exp(arg);
            }
            let doubled = half.mul_pow2(1);
            assert!(full.rel_err(&doubled) < 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn disconnected_graph_factorizes() {
        for seed in 0..6u64 {
            let a: IsingModel<f64> =
                random_model(seed * 2 + 100, RandomShape { max_vertices: 3, max_edges: 3 });
            let b: IsingModel<f64> =
                random_model(seed * 2 + 101, RandomShape { max_vertices: 3, max_edges: 3 });
            let na = a.graph.num_vertices();
            let mut edges: Vec<(usize, usize)> = a.graph.edges().to_vec();
            edges.extend(b.graph.edges().iter().map(|&(x, y)| (x + na, y + na)));
            let g = Graph::new(na + b.graph.num_vertices(), edges).unwrap();
            let joint = IsingModel::new(
                g,
                [a.edge_couplings.clone(), b.edge_couplings.clone()].concat(),
                [a.vertex_fields.clone(), b.vertex_fields.clone()].concat(),
            )
            .unwrap();
            let za = brute_force_z_ising(&a).unwrap();
            let zb = brute_force_z_ising(&b).unwrap();
            let zj = brute_force_z_ising(&joint).unwrap();
            assert!(zj.rel_err(&(za * zb)) < 1e-12, "seed {seed}");
        }
    }
}
