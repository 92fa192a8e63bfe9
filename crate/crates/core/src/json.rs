//! JSON wire formats. Complex numbers are `[re, im]` pairs everywhere.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::{Ising2DInstance, WeightPair};
use crate::model::{ClockModel, IsingModel};
use crate::scalar::Scalar;
use crate::scaled::ScaledComplex;
use num_complex::Complex;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct IsingJson {
    graph: GraphJson,
    #[serde(rename = "K")]
    k: Vec<[f64; 2]>,
    g: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ClockJson {
    graph: GraphJson,
    q: usize,
    edge_tables: Vec<Vec<[f64; 2]>>,
    vertex_tables: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize, Deserialize)]
struct ScaleJson {
    m: [f64; 2],
    e: i64,
}

#[derive(Serialize, Deserialize)]
struct InstanceEdgeJson {
    a: usize,
    b: usize,
    u: [[f64; 2]; 2],
}

#[derive(Serialize, Deserialize)]
struct InstanceJson {
    #[serde(rename = "W")]
    w: usize,
    #[serde(rename = "H")]
    h: usize,
    edges: Vec<InstanceEdgeJson>,
    sites: Vec<[[f64; 2]; 2]>,
    scale: ScaleJson,
    #[serde(rename = "A_total", default, skip_serializing_if = "Option::is_none")]
    a_total: Option<ScaleJson>,
}

fn cx<T: Scalar>(p: [f64; 2]) -> Complex<T> {
    Complex::new(T::of(p[0]), T::of(p[1]))
}

fn cx_out<T: Scalar>(c: Complex<T>) -> [f64; 2] {
    [c.re.to_f64().unwrap_or(f64::NAN), c.im.to_f64().unwrap_or(f64::NAN)]
}

fn graph_from(j: GraphJson) -> Result<Graph> {
    Graph::new(j.n, j.edges.into_iter().map(|[a, b]| (a, b)).collect())
}

fn graph_to(g: &Graph) -> GraphJson {
    GraphJson { n: g.num_vertices(), edges: g.edges().iter().map(|&(a, b)| [a, b]).collect() }
}

pub fn model_to_json<T: Scalar>(m: &IsingModel<T>) -> Value {
    serde_json::to_value(IsingJson {
        graph: graph_to(&m.graph),
        k: m.edge_couplings.iter().map(|&c| cx_out(c)).collect(),
        g: m.vertex_fields.iter().map(|&c| cx_out(c)).collect(),
    })
    .expect("model serializes")
}

pub fn model_from_json<T: Scalar>(v: &Value) -> Result<IsingModel<T>> {
    let j: IsingJson = serde_json::from_value(v.clone())
        .map_err(|e| Error::InvalidModel(format!("ising model: {e}")))?;
    IsingModel::new(
        graph_from(j.graph)?,
        j.k.into_iter().map(cx).collect(),
        j.g.into_iter().map(cx).collect(),
    )
}

pub fn clock_to_json<T: Scalar>(m: &ClockModel<T>) -> Value {
    serde_json::to_value(ClockJson {
        graph: graph_to(&m.graph),
        q: m.q,
        edge_tables: m
            .edge_tables
            .iter()
            .map(|t| t.iter().map(|&c| cx_out(c)).collect())
            .collect(),
        vertex_tables: m
            .vertex_tables
            .iter()
            .map(|t| t.iter().map(|&c| cx_out(c)).collect())
            .collect(),
    })
    .expect("clock model serializes")
}

pub fn clock_from_json<T: Scalar>(v: &Value) -> Result<ClockModel<T>> {
    let j: ClockJson = serde_json::from_value(v.clone())
        .map_err(|e| Error::InvalidModel(format!("clock model: {e}")))?;
    ClockModel::new(
        graph_from(j.graph)?,
        j.q,
        j.edge_tables.into_iter().map(|t| t.into_iter().map(cx).collect()).collect(),
        j.vertex_tables.into_iter().map(|t| t.into_iter().map(cx).collect()).collect(),
    )
}

/// `true` when the value looks like a clock model (`"q"` present).
pub fn is_clock_json(v: &Value) -> bool {
    v.get("q").is_some()
}

fn scale_to<T: Scalar>(s: &ScaledComplex<T>) -> ScaleJson {
    ScaleJson { m: cx_out(s.mantissa()), e: s.exponent2() }
}

fn scale_from<T: Scalar>(s: &ScaleJson) -> ScaledComplex<T> {
    ScaledComplex::new(cx(s.m), s.e)
}

/// Serialize an instance; `a_total` is carried as an extra top-level field
/// when emitted by the reducer.
pub fn instance_to_json<T: Scalar>(
    inst: &Ising2DInstance<T>,
    a_total: Option<&ScaledComplex<T>>,
) -> Value {
    serde_json::to_value(InstanceJson {
        w: inst.width(),
        h: inst.height(),
        edges: inst
            .edge_list()
            .iter()
            .zip(inst.edge_weights())
            .map(|(&(a, b), u)| InstanceEdgeJson { a, b, u: [cx_out(u.0), cx_out(u.1)] })
            .collect(),
        sites: inst.site_weights().iter().map(|w| [cx_out(w.0), cx_out(w.1)]).collect(),
        scale: scale_to(&inst.global_scale()),
        a_total: a_total.map(scale_to),
    })
    .expect("instance serializes")
}

pub fn instance_from_json<T: Scalar>(
    v: &Value,
) -> Result<(Ising2DInstance<T>, Option<ScaledComplex<T>>)> {
    let j: InstanceJson = serde_json::from_value(v.clone())
        .map_err(|e| Error::InvalidInstance(format!("instance: {e}")))?;
    let edges: Vec<((usize, usize), WeightPair<T>)> = j
        .edges
        .iter()
        .map(|e| ((e.a, e.b), WeightPair(cx(e.u[0]), cx(e.u[1]))))
        .collect();
    let sites: Vec<WeightPair<T>> =
        j.sites.iter().map(|s| WeightPair(cx(s[0]), cx(s[1]))).collect();
    let inst =
        Ising2DInstance::from_parts(j.w, j.h, edges, sites, scale_from(&j.scale))?;
    Ok((inst, j.a_total.as_ref().map(scale_from)))
}
