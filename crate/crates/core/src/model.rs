//! Spin models: Ising with complex couplings/fields, and q-state clock models
//! whose weights depend on spin differences mod q.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Ising model with dimensionless complex couplings `K_e` and fields `g_v`
/// (the inverse temperature is absorbed into both).
#[derive(Clone, Debug, PartialEq)]
pub struct IsingModel<T> {
    pub graph: Graph,
    pub edge_couplings: Vec<Complex<T>>,
    pub vertex_fields: Vec<Complex<T>>,
}

impl<T: Scalar> IsingModel<T> {
    pub fn new(
        graph: Graph,
        edge_couplings: Vec<Complex<T>>,
        vertex_fields: Vec<Complex<T>>,
    ) -> Result<Self> {
        if edge_couplings.len() != graph.num_edges() {
            return Err(Error::InvalidModel(format!(
                "{} couplings for {} edges",
                edge_couplings.len(),
                graph.num_edges()
            )));
        }
        if vertex_fields.len() != graph.num_vertices() {
            return Err(Error::InvalidModel(format!(
                "{} fields for {} vertices",
                vertex_fields.len(),
                graph.num_vertices()
            )));
        }
        let finite = |c: &Complex<T>| c.re.is_finite() && c.im.is_finite();
        if !edge_couplings.iter().all(finite) || !vertex_fields.iter().all(finite) {
            return Err(Error::InvalidModel("non-finite coupling or field".into()));
        }
        Ok(Self { graph, edge_couplings, vertex_fields })
    }

    /// Uniform real coupling, zero fields.
    pub fn uniform(graph: Graph, k: T) -> Self {
        let e = graph.num_edges();
        let v = graph.num_vertices();
        Self {
            graph,
            edge_couplings: vec![Complex::new(k, T::zero()); e],
            vertex_fields: vec![Complex::zero(); v],
        }
    }
}

use num_traits::Zero;

/// q-state clock model: per-edge weight tables indexed by the spin difference
/// `(t_a - t_b) mod q` along the stored edge orientation, and per-vertex
/// weight tables.
#[derive(Clone, Debug, PartialEq)]
pub struct ClockModel<T> {
    pub graph: Graph,
    pub q: usize,
    pub edge_tables: Vec<Vec<Complex<T>>>,
    pub vertex_tables: Vec<Vec<Complex<T>>>,
}

impl<T: Scalar> ClockModel<T> {
    pub fn new(
        graph: Graph,
        q: usize,
        edge_tables: Vec<Vec<Complex<T>>>,
        vertex_tables: Vec<Vec<Complex<T>>>,
    ) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidModel(format!("q = {q} must be at least 2")));
        }
        if edge_tables.len() != graph.num_edges() || vertex_tables.len() != graph.num_vertices() {
            return Err(Error::InvalidModel("table count mismatch".into()));
        }
        if edge_tables.iter().chain(vertex_tables.iter()).any(|t| t.len() != q) {
            return Err(Error::InvalidModel(format!("every table must have length q = {q}")));
        }
        Ok(Self { graph, q, edge_tables, vertex_tables })
    }

    /// Potts model: edge weight `e^K` on agreement, 1 otherwise; trivial
    /// vertex weights.
    pub fn potts(graph: Graph, q: usize, k: Complex<T>) -> Result<Self> {
        let mut edge = vec![Complex::new(T::one(), T::zero()); q];
        edge[0] = k.exp();
        let vertex = vec![Complex::new(T::one(), T::zero()); q];
        let ne = graph.num_edges();
        let nv = graph.num_vertices();
        Self::new(graph, q, vec![edge; ne], vec![vertex; nv])
    }

    /// Encode an Ising model as the q = 2 clock model with the same Z.
    pub fn from_ising(model: &IsingModel<T>) -> Self {
        let edge_tables = model
            .edge_couplings
            .iter()
            .map(|k| vec![k.exp(), (-k).exp()])
            .collect();
        let vertex_tables = model
            .vertex_fields
            .iter()
            .map(|g| vec![g.exp(), (-g).exp()])
            .collect();
        Self { graph: model.graph.clone(), q: 2, edge_tables, vertex_tables }
    }
}

/// Size bounds for [`random_model`].
#[derive(Clone, Copy, Debug)]
pub struct RandomShape {
    pub max_vertices: usize,
    pub max_edges: usize,
}

/// Deterministic pseudo-random Ising model: same seed, same model. Couplings
/// and fields have |Re|, |Im| <= 2.
pub fn random_model<T: Scalar>(seed: u64, shape: RandomShape) -> IsingModel<T> {
    assert!(shape.max_vertices >= 1, "bounds must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nv = rng.gen_range(1..=shape.max_vertices);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for a in 0..nv {
        for b in a + 1..nv {
            pairs.push((a, b));
        }
    }
    // Fisher-Yates using the seeded stream, then take a prefix.
    for i in (1..pairs.len()).rev() {
        let j = rng.gen_range(0..=i);
        pairs.swap(i, j);
    }
    let ne = if pairs.is_empty() { 0 } else { rng.gen_range(0..=pairs.len().min(shape.max_edges)) };
    let mut edges: Vec<(usize, usize)> = pairs.into_iter().take(ne).collect();
    edges.sort_unstable();
    let graph = Graph::new(nv, edges).expect("generated edges are valid");
    let cx = |rng: &mut ChaCha8Rng| {
        Complex::new(T::of(rng.gen_range(-2.0..2.0)), T::of(rng.gen_range(-2.0..2.0)))
    };
    let edge_couplings = (0..graph.num_edges()).map(|_| cx(&mut rng)).collect();
    let vertex_fields = (0..graph.num_vertices()).map(|_| cx(&mut rng)).collect();
    IsingModel { graph, edge_couplings, vertex_fields }
}
