use ising_complete::decorate::decorate;
use ising_complete::graph::Graph;
use ising_complete::graphsim::GraphSim;
use ising_complete::layout::{layout_on_cluster, SiteRole};
use ising_complete::overlap::amplitude_vector;
use ising_complete::synth::synthesize_prep_circuit;

fn main() {
    let g = Graph::new(2, vec![(0, 1)]).unwrap();
    let dg = decorate(&g);
    let c = synthesize_prep_circuit(&dg);
    println!("circuit: {:?}", c.gates);
    let l = layout_on_cluster(&c);
    println!("layout {}x{} sites {}", l.width, l.height, l.num_sites());
    for row in 0..l.height {
        let mut line = String::new();
        for col in 0..l.width {
            let s = l.site(row, col);
            line.push(match l.roles[s] {
                SiteRole::Output(q) => char::from_digit(q as u32, 10).unwrap(),
                SiteRole::Measured(ising_complete::pauli::Axis::X) => 'X',
                SiteRole::Measured(ising_complete::pauli::Axis::Y) => 'Y',
                SiteRole::Measured(ising_complete::pauli::Axis::Z) => '.',
            });
        }
        println!("  {line}");
    }
    // execute
    let mut sim = GraphSim::new(l.num_sites(), &l.cluster_edges());
    for &site in &l.order {
        let SiteRole::Measured(b) = l.roles[site] else { unreachable!() };
        let res = sim.measure(site, b, 1);
        println!("measure site {site} ({:?}): outcome {} random {}", b, res.outcome, res.was_random);
    }
    println!("omega = {:?}", sim.omega());
    let alive = sim.alive_qubits();
    println!("alive = {alive:?}, outputs = {:?}", l.outputs());
    // dense comparison
    let got = sim.dense_state();
    // order alive ascending; map to qubits
    let qubit_of: std::collections::HashMap<usize, usize> = l.outputs().into_iter().collect();
    let qubits: Vec<usize> = alive.iter().map(|s| qubit_of[s]).collect();
    println!("qubit order of alive sites: {qubits:?}");
    let phi = amplitude_vector::<f64>(&dg);
    // got indices are over alive-site order; permute phi accordingly
    let n = 3;
    let perm_index = |x: usize| -> usize {
        // x indexes alive-site order (bit i = site alive[i]); build φ index by qubit
        let mut y = 0usize;
        for (i, &q) in qubits.iter().enumerate() {
            if x >> (n - 1 - i) & 1 == 1 {
                y |= 1 << (n - 1 - q);
            }
        }
        y
    };
    println!("{:>4} {:>24} {:>24}", "x", "got", "phi(perm)");
    for x in 0..8 {
        println!("{:>4} {:>24.4?} {:>24.4?}", x, got[x], phi[perm_index(x)]);
    }
}
