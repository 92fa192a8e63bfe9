//! Placement of a preparation circuit onto a rectangular cluster as a
//! single-qubit measurement pattern.
//!
//! Wires live on even rows (one per circuit wire); odd rows host CZ bridge
//! sites and isolation sites. A bridge site measured in Y entangles the two
//! wire frontiers above and below it and leaves an S-type frame on each,
//! which the wire compensates later. Bookkeeping happens in the quotient of
//! the single-qubit Clifford group by the Pauli group (isomorphic to S3):
//! each wire carries a "deficit" that must be diagonal when it is bridged
//! and trivial when it terminates, so the compiled pattern prepares the
//! circuit's output state exactly up to a Pauli frame.

use crate::circuit::{CliffordCircuit, Gate};
use crate::pauli::Axis;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Role of one cluster site.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiteRole {
    /// Unmeasured; carries the given output qubit after the pattern runs.
    Output(usize),
    Measured(Axis),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LayoutStats {
    pub bridges: usize,
    pub swaps: usize,
    pub gate_count: usize,
}

/// A compiled measurement pattern on a `width x height` cluster.
#[derive(Clone, Debug)]
pub struct ClusterLayout {
    pub width: usize,
    pub height: usize,
    /// Row-major site roles.
    pub roles: Vec<SiteRole>,
    /// Measurement order: row-major over measured sites.
    pub order: Vec<usize>,
    pub stats: LayoutStats,
}

impl ClusterLayout {
    pub fn num_sites(&self) -> usize {
        self.width * self.height
    }

    pub fn site(&self, row: usize, col: usize) -> usize {
        debug_assert!(row < self.height && col < self.width);
        row * self.width + col
    }

    /// Grid edges of the underlying cluster graph.
    pub fn cluster_edges(&self) -> Vec<(usize, usize)> {
        crate::lattice::Ising2DInstance::<f64>::canonical_edges(self.width, self.height)
    }

    /// `(site, output qubit)` pairs.
    pub fn outputs(&self) -> Vec<(usize, usize)> {
        self.roles
            .iter()
            .enumerate()
            .filter_map(|(s, r)| match r {
                SiteRole::Output(q) => Some((s, *q)),
                _ => None,
            })
            .collect()
    }

    pub fn num_outputs(&self) -> usize {
        self.outputs().len()
    }
}

// --- S3 calculus -----------------------------------------------------------

/// Single-qubit Cliffords modulo Paulis, as permutations of the three axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Perm3([u8; 3]);

const ID3: Perm3 = Perm3([0, 1, 2]);
const HP: Perm3 = Perm3([1, 0, 2]);
const SP: Perm3 = Perm3([0, 2, 1]);

/// `a ∘ b` (apply `b` first).
fn comp(a: Perm3, b: Perm3) -> Perm3 {
    Perm3([a.0[b.0[0] as usize], a.0[b.0[1] as usize], a.0[b.0[2] as usize]])
}

/// A wire advance: measuring the frontier site with logical effect H (an
/// X-type advance) or HS (a Y-type advance), both modulo Pauli.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Letter {
    Xadv,
    Yadv,
}

fn letter_perm(l: Letter) -> Perm3 {
    match l {
        Letter::Xadv => HP,
        Letter::Yadv => comp(HP, SP),
    }
}

/// Shortest letter word taking `start` into `targets` with the requested
/// length parity; X-advances are preferred, so the result is deterministic.
fn flush_word(start: Perm3, targets: &[Perm3], parity: Option<u8>) -> Option<Vec<Letter>> {
    let mut seen = BTreeSet::new();
    let mut queue: VecDeque<(Perm3, u8, Vec<Letter>)> = VecDeque::new();
    queue.push_back((start, 0, Vec::new()));
    while let Some((p, len_parity, word)) = queue.pop_front() {
        if targets.contains(&p) && parity.map_or(true, |want| want == len_parity) {
            return Some(word);
        }
        if word.len() > 8 {
            continue;
        }
        let key = (p.0, len_parity, word.len());
        if !seen.insert(key) {
            continue;
        }
        for l in [Letter::Xadv, Letter::Yadv] {
            let mut w = word.clone();
            w.push(l);
            queue.push_back((comp(letter_perm(l), p), len_parity ^ 1, w));
        }
    }
    None
}

fn min_len(start: Perm3, targets: &[Perm3], parity: u8) -> Option<usize> {
    flush_word(start, targets, Some(parity)).map(|w| w.len())
}

// --- builder ---------------------------------------------------------------

struct WireState {
    cur: usize,
    deficit: Perm3,
    frame_parity: bool,
}

struct Builder {
    tracks: usize,
    wires: Vec<WireState>,
    logical_at_track: Vec<usize>,
    track_of_logical: Vec<usize>,
    painted: BTreeMap<(usize, usize), Axis>,
    bridges: BTreeSet<(usize, usize)>,
    stats: LayoutStats,
}

impl Builder {
    fn new(logical_at_track: Vec<usize>) -> Self {
        let n = logical_at_track.len();
        let mut track_of_logical = vec![0; n];
        for (t, &l) in logical_at_track.iter().enumerate() {
            track_of_logical[l] = t;
        }
        Self {
            tracks: n,
            wires: (0..n)
                .map(|_| WireState { cur: 0, deficit: ID3, frame_parity: false })
                .collect(),
            logical_at_track,
            track_of_logical,
            painted: BTreeMap::new(),
            bridges: BTreeSet::new(),
            stats: LayoutStats::default(),
        }
    }

    fn emit(&mut self, track: usize, letter: Letter) {
        let w = &mut self.wires[track];
        let basis = match (letter, w.frame_parity) {
            (Letter::Xadv, false) | (Letter::Yadv, true) => Axis::X,
            (Letter::Xadv, true) | (Letter::Yadv, false) => Axis::Y,
        };
        let site = (2 * track, w.cur);
        let prev = self.painted.insert(site, basis);
        debug_assert!(prev.is_none(), "double paint at {site:?}");
        w.cur += 1;
        w.frame_parity = false;
        w.deficit = comp(letter_perm(letter), w.deficit);
    }

    fn emit_word_to(&mut self, track: usize, targets: &[Perm3], exact_len: usize) {
        let start = self.wires[track].deficit;
        let word = flush_word(start, targets, Some((exact_len % 2) as u8))
            .expect("flush word exists");
        assert!(word.len() <= exact_len && (exact_len - word.len()) % 2 == 0);
        for _ in 0..(exact_len - word.len()) / 2 {
            self.emit(track, Letter::Xadv);
            self.emit(track, Letter::Xadv);
        }
        for l in word {
            self.emit(track, l);
        }
        debug_assert!(targets.contains(&self.wires[track].deficit));
    }

    fn right_mul(&mut self, logical: usize, p: Perm3) {
        let t = self.track_of_logical[logical];
        self.wires[t].deficit = comp(self.wires[t].deficit, p);
    }

    /// Bridge two adjacent tracks: flush both deficits to the diagonal
    /// subgroup at a common column, then place the Y-measured bridge site.
    fn bridge(&mut self, ta: usize, tb: usize) {
        assert_eq!(ta.abs_diff(tb), 1, "bridge requires adjacent tracks");
        let hall = 2 * ta.min(tb) + 1;
        let diag = [ID3, SP];
        let lo = self.wires[ta].cur.max(self.wires[tb].cur);
        let mut chosen = None;
        for c in lo..lo + 64 {
            let fits = [ta, tb].iter().all(|&t| {
                let need = c - self.wires[t].cur;
                min_len(self.wires[t].deficit, &diag, (need % 2) as u8)
                    .is_some_and(|l| l <= need)
            });
            let gap_ok = !(self.bridges.contains(&(hall, c))
                || self.bridges.contains(&(hall, c + 1))
                || (c > 0 && self.bridges.contains(&(hall, c - 1))));
            if fits && gap_ok {
                chosen = Some(c);
                break;
            }
        }
        let c = chosen.expect("bridge column allocation");
        for t in [ta, tb] {
            let need = c - self.wires[t].cur;
            self.emit_word_to(t, &diag, need);
            debug_assert_eq!(self.wires[t].cur, c);
        }
        self.painted.insert((hall, c), Axis::Y);
        self.bridges.insert((hall, c));
        self.stats.bridges += 1;
        for t in [ta, tb] {
            let w = &mut self.wires[t];
            w.deficit = comp(SP, w.deficit);
            w.frame_parity = !w.frame_parity;
        }
    }

    /// Swap the physical states on two adjacent tracks via three CNOTs.
    fn physical_swap(&mut self, ta: usize, tb: usize) {
        let h = |b: &mut Builder, t: usize| {
            b.wires[t].deficit = comp(b.wires[t].deficit, HP);
        };
        // CNOT(ta -> tb), CNOT(tb -> ta), CNOT(ta -> tb)
        h(self, tb);
        self.bridge(ta, tb);
        h(self, tb);
        h(self, ta);
        self.bridge(ta, tb);
        h(self, ta);
        h(self, tb);
        self.bridge(ta, tb);
        h(self, tb);
        let (la, lb) = (self.logical_at_track[ta], self.logical_at_track[tb]);
        self.logical_at_track[ta] = lb;
        self.logical_at_track[tb] = la;
        self.track_of_logical[lb] = ta;
        self.track_of_logical[la] = tb;
        self.stats.swaps += 1;
    }

    /// Bring the two logicals onto adjacent tracks, moving `mover`.
    fn route(&mut self, stay: usize, mover: usize) {
        loop {
            let ts = self.track_of_logical[stay];
            let tm = self.track_of_logical[mover];
            if ts.abs_diff(tm) <= 1 {
                return;
            }
            let step = if tm > ts { tm - 1 } else { tm + 1 };
            self.physical_swap(tm, step);
        }
    }

    fn finish(mut self) -> ClusterLayout {
        // terminal flush: deficits to the identity; a framed frontier site
        // must be consumed even when the deficit is already trivial
        for t in 0..self.tracks {
            let w = &self.wires[t];
            let word = flush_word(w.deficit, &[ID3], None).expect("terminal flush");
            if word.is_empty() && w.frame_parity {
                self.emit(t, Letter::Xadv);
                self.emit(t, Letter::Xadv);
            } else {
                for l in word {
                    self.emit(t, l);
                }
            }
            debug_assert_eq!(self.wires[t].deficit, ID3);
            debug_assert!(!self.wires[t].frame_parity);
        }
        let width = self.wires.iter().map(|w| w.cur).max().unwrap_or(0) + 1;
        let height = 2 * self.tracks - 1;
        let mut roles = vec![SiteRole::Measured(Axis::Z); width * height];
        for ((row, col), basis) in &self.painted {
            roles[row * width + col] = SiteRole::Measured(*basis);
        }
        for t in 0..self.tracks {
            let site = 2 * t * width + self.wires[t].cur;
            roles[site] = SiteRole::Output(self.logical_at_track[t]);
        }
        let order = roles
            .iter()
            .enumerate()
            .filter(|(_, r)| matches!(r, SiteRole::Measured(_)))
            .map(|(s, _)| s)
            .collect();
        ClusterLayout { width, height, roles, order, stats: self.stats }
    }
}

/// Initial wire-to-track placement: depth-first over the CZ interaction
/// graph (ascending neighbors) so entangling partners start close together.
fn initial_tracks(circuit: &CliffordCircuit) -> Vec<usize> {
    let n = circuit.wires;
    let mut adj = vec![BTreeSet::new(); n];
    for g in &circuit.gates {
        if let Gate::Cz(u, v) = *g {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        while let Some(w) = stack.pop() {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            order.push(w);
            for &nb in adj[w].iter().rev() {
                if !seen[nb] {
                    stack.push(nb);
                }
            }
        }
    }
    order
}

/// Compile a circuit into a cluster-measurement pattern. Total function: any
/// circuit over {H, S, CZ, SWAP} yields a conforming layout.
pub fn layout_on_cluster(circuit: &CliffordCircuit) -> ClusterLayout {
    assert!(circuit.wires >= 1, "layout requires at least one wire");
    let mut b = Builder::new(initial_tracks(circuit));
    b.stats.gate_count = circuit.len();
    // remaining CZ counts steer which endpoint moves during routing
    let mut remaining_cz = vec![0usize; circuit.wires];
    for g in &circuit.gates {
        if let Gate::Cz(u, v) = *g {
            remaining_cz[u] += 1;
            remaining_cz[v] += 1;
        }
    }
    for g in &circuit.gates {
        match *g {
            Gate::H(w) => b.right_mul(w, HP),
            Gate::S(w) => b.right_mul(w, SP),
            Gate::Swap(u, v) => {
                // pure relabeling: subsequent gates and the output map follow
                let (tu, tv) = (b.track_of_logical[u], b.track_of_logical[v]);
                b.track_of_logical.swap(u, v);
                b.logical_at_track[tu] = v;
                b.logical_at_track[tv] = u;
            }
            Gate::Cz(u, v) => {
                remaining_cz[u] -= 1;
                remaining_cz[v] -= 1;
                let (stay, mover) = if remaining_cz[u] >= remaining_cz[v] {
                    (u, v)
                } else {
                    (v, u)
                };
                b.route(stay, mover);
                let (ts, tm) = (b.track_of_logical[stay], b.track_of_logical[mover]);
                b.bridge(ts, tm);
            }
        }
    }
    b.finish()
}
