//! Stabilizer tableaus: n commuting, independent Pauli generators fixing a
//! unique pure state, with the update rules needed here (Clifford
//! conjugation, single-qubit measurement with preferred outcomes, state
//! equality, Pauli-correction solving, dense extraction).

use crate::bits::{solve_gf2, BitRow};
use crate::cliff::Cliff1;
use crate::error::{Error, Result};
use crate::pauli::{Axis, PauliOperator};
use crate::scalar::Scalar;
use num_complex::Complex;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerTableau {
    pub n: usize,
    pub gens: Vec<PauliOperator>,
}

/// Clifford gates with direct tableau update rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliffordGate {
    H(usize),
    S(usize),
    Sdg(usize),
    Cz(usize, usize),
    Swap(usize, usize),
    X(usize),
    Y(usize),
    Z(usize),
}

impl StabilizerTableau {
    /// `|0...0>`.
    pub fn zero_state(n: usize) -> Self {
        let gens = (0..n).map(|q| PauliOperator::single(n, q, Axis::Z, 1)).collect();
        Self { n, gens }
    }

    /// `|+...+>`.
    pub fn plus_state(n: usize) -> Self {
        let gens = (0..n).map(|q| PauliOperator::single(n, q, Axis::X, 1)).collect();
        Self { n, gens }
    }

    pub fn debug_validate(&self) {
        debug_assert!(self.gens.len() == self.n);
        debug_assert!(self.gens.iter().all(|g| g.is_hermitian()), "non-Hermitian generator");
        debug_assert!(
            !self.gens.iter().any(|g| g.is_identity_bits()),
            "identity (or -identity) generator"
        );
        for i in 0..self.n {
            for j in i + 1..self.n {
                debug_assert!(
                    self.gens[i].commutes_with(&self.gens[j]),
                    "generators {i} and {j} anticommute"
                );
            }
        }
        debug_assert_eq!(
            crate::bits::rank_gf2(&self.gens.iter().map(gen_bits).collect::<Vec<_>>()),
            self.n,
            "generators not independent"
        );
    }

    pub fn apply(&mut self, gate: CliffordGate) {
        for g in &mut self.gens {
            match gate {
                CliffordGate::H(q) => g.conj_h(q),
                CliffordGate::S(q) => g.conj_s(q),
                CliffordGate::Sdg(q) => g.conj_sdg(q),
                CliffordGate::Cz(a, b) => g.conj_cz(a, b),
                CliffordGate::Swap(a, b) => g.conj_swap(a, b),
                CliffordGate::X(q) => g.conj_pauli(q, Axis::X),
                CliffordGate::Y(q) => g.conj_pauli(q, Axis::Y),
                CliffordGate::Z(q) => g.conj_pauli(q, Axis::Z),
            }
        }
        self.debug_validate();
    }

    /// Conjugate the state by one single-qubit Clifford per qubit.
    pub fn apply_local_cliffords(&mut self, frames: &[Cliff1]) {
        assert_eq!(frames.len(), self.n);
        let images: Vec<_> = frames
            .iter()
            .map(|f| (f.image_of(Axis::X), f.image_of(Axis::Z)))
            .collect();
        for g in &mut self.gens {
            let mut out = PauliOperator::identity(self.n);
            out.phase = g.phase;
            for q in 0..self.n {
                if g.x.get(q) {
                    let (ax, s) = images[q].0;
                    out.mul_assign(&PauliOperator::single(self.n, q, ax, s));
                }
                if g.z.get(q) {
                    let (ax, s) = images[q].1;
                    out.mul_assign(&PauliOperator::single(self.n, q, ax, s));
                }
            }
            *g = out;
        }
        self.debug_validate();
    }

    /// Conjugate by an n-qubit Pauli: generator signs flip where they
    /// anticommute with it.
    pub fn apply_pauli(&mut self, p: &PauliOperator) {
        for g in &mut self.gens {
            if !g.commutes_with(p) {
                g.phase = (g.phase + 2) % 4;
            }
        }
    }

    /// Measure the single-qubit Pauli `axis` on `qubit`.
    ///
    /// If the observable anticommutes with some generator the outcome is
    /// `preferred` (`was_random = true`) and the state is projected onto that
    /// branch. Otherwise the outcome is forced by the group and the state is
    /// unchanged; the forced value is reported even when it disagrees with
    /// `preferred`.
    pub fn measure_pauli(
        &mut self,
        qubit: usize,
        axis: Axis,
        preferred: i8,
    ) -> (i8, bool) {
        assert!(qubit < self.n);
        assert!(preferred == 1 || preferred == -1);
        let obs = PauliOperator::single(self.n, qubit, axis, 1);
        let anti: Vec<usize> =
            (0..self.n).filter(|&i| !self.gens[i].commutes_with(&obs)).collect();
        if let Some((&k, rest)) = anti.split_first() {
            let pivot = self.gens[k].clone();
            for &j in rest {
                self.gens[j].mul_assign(&pivot);
            }
            self.gens[k] = PauliOperator::single(self.n, qubit, axis, preferred);
            self.debug_validate();
            (preferred, true)
        } else {
            // Forced: ±obs is in the group; find which sign.
            let rows: Vec<BitRow> = self.gens.iter().map(gen_bits).collect();
            let sel = solve_gf2(&rows, &gen_bits(&obs))
                .expect("commuting single-qubit Pauli must lie in the stabilizer group");
            let mut prod = PauliOperator::identity(self.n);
            for (j, &take) in sel.iter().enumerate() {
                if take {
                    prod.mul_assign(&self.gens[j]);
                }
            }
            debug_assert_eq!(prod.x, obs.x);
            debug_assert_eq!(prod.z, obs.z);
            let dp = (4 + prod.phase as i32 - obs.phase as i32) % 4;
            debug_assert!(dp % 2 == 0);
            let outcome = if dp == 0 { 1 } else { -1 };
            (outcome, false)
        }
    }

    /// Dense amplitudes of the stabilized state, global phase fixed by making
    /// the first nonzero amplitude real positive.
    pub fn dense_vector<T: Scalar>(&self) -> Result<Vec<Complex<T>>> {
        if self.n > 20 {
            return Err(Error::TooLarge { what: "dense tableau", got: self.n as u64, limit: 20 });
        }
        let dim = 1usize << self.n;
        for seed in 0..dim {
            let mut v = vec![Complex::<T>::zero(); dim];
            v[seed] = Complex::new(T::one(), T::zero());
            for g in &self.gens {
                project_dense(&mut v, g, self.n);
            }
            let norm = v.iter().map(|c| c.norm_sqr()).fold(T::zero(), |a, b| a + b).sqrt();
            if norm > T::of(1e-6) {
                let inv = T::one() / norm;
                for c in &mut v {
                    *c = *c * inv;
                }
                if let Some(first) = v.iter().find(|c| c.norm() > T::of(1e-6)) {
                    let ph = first / first.norm();
                    let fix = ph.conj();
                    for c in &mut v {
                        *c = *c * fix;
                    }
                }
                return Ok(v);
            }
        }
        unreachable!("a stabilizer state has a nonzero amplitude somewhere")
    }
}

fn gen_bits(g: &PauliOperator) -> BitRow {
    let n = g.n;
    let mut row = BitRow::new(2 * n);
    for q in 0..n {
        if g.x.get(q) {
            row.set(q, true);
        }
        if g.z.get(q) {
            row.set(n + q, true);
        }
    }
    row
}

/// Apply `(I + g)/2` to a dense vector.
fn project_dense<T: Scalar>(v: &mut [Complex<T>], g: &PauliOperator, n: usize) {
    let dim = v.len();
    let mut xa = 0usize;
    for q in 0..n {
        if g.x.get(q) {
            xa |= 1 << (n - 1 - q);
        }
    }
    let half = T::of(0.5);
    let old = v.to_vec();
    for (x, out) in v.iter_mut().enumerate() {
        // <x|g|w> = i^phase (-1)^{z·(x^xa)} w(x^xa)
        let y = x ^ xa;
        let mut sign = 0usize;
        for q in 0..n {
            if g.z.get(q) && (y >> (n - 1 - q)) & 1 == 1 {
                sign ^= 1;
            }
        }
        let mut k = g.phase as usize;
        if sign == 1 {
            k = (k + 2) % 4;
        }
        let i_pow = match k {
            0 => Complex::new(T::one(), T::zero()),
            1 => Complex::new(T::zero(), T::one()),
            2 => Complex::new(-T::one(), T::zero()),
            _ => Complex::new(T::zero(), -T::one()),
        };
        *out = (old[x] + i_pow * old[y]) * half;
    }
    debug_assert_eq!(dim, v.len());
}

/// Graph-state tableau `X_v Π_{w∈N(v)} Z_w`, conjugated by H on each qubit in
/// `hadamard`. With `hadamard` = the edge-qubits of a decorated graph this is
/// exactly the twisted stabilizer family of the overlap construction.
pub fn graph_state_tableau(adjacency: &[Vec<usize>], hadamard: &[bool]) -> StabilizerTableau {
    let n = adjacency.len();
    assert_eq!(hadamard.len(), n);
    let mut gens = Vec::with_capacity(n);
    for v in 0..n {
        let mut g = PauliOperator::single(n, v, Axis::X, 1);
        for &w in &adjacency[v] {
            assert_ne!(v, w, "graph must be simple");
            g.mul_assign(&PauliOperator::single(n, w, Axis::Z, 1));
        }
        gens.push(g);
    }
    let mut t = StabilizerTableau { n, gens };
    for (q, &h) in hadamard.iter().enumerate() {
        if h {
            t.apply(CliffordGate::H(q));
        }
    }
    t
}

/// True iff the two tableaus generate the same signed stabilizer group.
pub fn states_equal(a: &StabilizerTableau, b: &StabilizerTableau) -> bool {
    if a.n != b.n {
        return false;
    }
    let rows: Vec<BitRow> = b.gens.iter().map(gen_bits).collect();
    for g in &a.gens {
        let Some(sel) = solve_gf2(&rows, &gen_bits(g)) else {
            return false;
        };
        let mut prod = PauliOperator::identity(b.n);
        for (j, &take) in sel.iter().enumerate() {
            if take {
                prod.mul_assign(&b.gens[j]);
            }
        }
        if prod.phase != g.phase {
            return false;
        }
    }
    true
}

/// Find a Pauli `P` with `P · |got> = |target>` as states (stabilizer groups
/// mapped exactly, signs included). The returned operator is Hermitian.
pub fn find_pauli_correction(
    got: &StabilizerTableau,
    target: &StabilizerTableau,
) -> Result<PauliOperator> {
    assert_eq!(got.n, target.n);
    let n = got.n;
    let rows: Vec<BitRow> = got.gens.iter().map(gen_bits).collect();
    // For each target generator: express its bits over got's generators and
    // compare signs; P must anticommute with exactly the mismatched ones.
    let mut eqs: Vec<(BitRow, bool)> = Vec::with_capacity(n);
    for t in &target.gens {
        let Some(sel) = solve_gf2(&rows, &gen_bits(t)) else {
            return Err(Error::NotPauliEquivalent);
        };
        let mut u = PauliOperator::identity(n);
        for (j, &take) in sel.iter().enumerate() {
            if take {
                u.mul_assign(&got.gens[j]);
            }
        }
        debug_assert!(u.x == t.x && u.z == t.z);
        let dp = (4 + t.phase as i32 - u.phase as i32) % 4;
        if dp % 2 != 0 {
            return Err(Error::NotPauliEquivalent);
        }
        // equation row: x_P·z_u + z_P·x_u = [dp == 2]
        let mut row = BitRow::new(2 * n);
        for q in 0..n {
            if u.z.get(q) {
                row.set(q, true);
            }
            if u.x.get(q) {
                row.set(n + q, true);
            }
        }
        eqs.push((row, dp == 2));
    }
    let sol = solve_linear_system(&mut eqs, 2 * n).ok_or(Error::NotPauliEquivalent)?;
    let mut p = PauliOperator::identity(n);
    for q in 0..n {
        if sol.get(q) {
            p.x.set(q, true);
        }
        if sol.get(n + q) {
            p.z.set(q, true);
        }
    }
    p.phase = (p.x.and_count(&p.z) % 2) as u8;
    debug_assert!(p.is_hermitian());
    // Verify the correction actually maps the states.
    let mut check = got.clone();
    check.apply_pauli(&p);
    if !states_equal(&check, target) {
        return Err(Error::NotPauliEquivalent);
    }
    Ok(p)
}

/// Solve `A x = b` over GF(2) (rows given as (coeffs, rhs)); free variables
/// are set to zero. Returns None when inconsistent.
fn solve_linear_system(eqs: &mut [(BitRow, bool)], width: usize) -> Option<BitRow> {
    let m = eqs.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0usize;
    for col in 0..width {
        let Some(pi) = (next..m).find(|&i| eqs[i].0.get(col)) else {
            continue;
        };
        eqs.swap(next, pi);
        for i in 0..m {
            if i != next && eqs[i].0.get(col) {
                let (a, b) = split_two(eqs, next, i);
                b.0.xor_assign(&a.0);
                b.1 ^= a.1;
            }
        }
        pivots.push((col, next));
        next += 1;
        if next == m {
            break;
        }
    }
    if eqs.iter().any(|(row, rhs)| !row.any() && *rhs) {
        return None;
    }
    let mut x = BitRow::new(width);
    for &(col, row) in &pivots {
        if eqs[row].1 {
            x.set(col, true);
        }
    }
    Some(x)
}

fn split_two<T>(v: &mut [T], a: usize, b: usize) -> (&T, &mut T) {
    debug_assert_ne!(a, b);
    if a < b {
        let (l, r) = v.split_at_mut(b);
        (&l[a], &mut r[0])
    } else {
        let (l, r) = v.split_at_mut(a);
        (&r[0], &mut l[b])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn dense(t: &StabilizerTableau) -> Vec<Complex64> {
        t.dense_vector::<f64>().unwrap()
    }

    fn close(a: &[Complex64], b: &[Complex64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-12)
    }

    #[test]
    fn plus_and_zero_states() {
        let t = StabilizerTableau::plus_state(1);
        let s = 1.0 / 2.0f64.sqrt();
        assert!(close(&dense(&t), &[Complex64::new(s, 0.0), Complex64::new(s, 0.0)]));
        let z = StabilizerTableau::zero_state(1);
        assert!(close(&dense(&z), &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]));
    }

    #[test]
    fn h_maps_plus_to_zero() {
        let mut t = StabilizerTableau::plus_state(1);
        t.apply(CliffordGate::H(0));
        assert!(states_equal(&t, &StabilizerTableau::zero_state(1)));
    }

    #[test]
    fn s_on_plus_gives_y_eigenstate() {
        let mut t = StabilizerTableau::plus_state(1);
        t.apply(CliffordGate::S(0));
        // stabilizer should be +Y
        assert_eq!(t.gens[0], PauliOperator::single(1, 0, Axis::Y, 1));
    }

    #[test]
    fn cz_on_plus_plus_gives_graph_state_gens() {
        let mut t = StabilizerTableau::plus_state(2);
        t.apply(CliffordGate::Cz(0, 1));
        let mut xz = PauliOperator::single(2, 0, Axis::X, 1);
        xz.mul_assign(&PauliOperator::single(2, 1, Axis::Z, 1));
        let mut zx = PauliOperator::single(2, 0, Axis::Z, 1);
        zx.mul_assign(&PauliOperator::single(2, 1, Axis::X, 1));
        assert!(states_equal(&t, &StabilizerTableau { n: 2, gens: vec![xz, zx] }));
    }

    #[test]
    fn measure_z_on_plus_is_random() {
        let mut t = StabilizerTableau::plus_state(1);
        let (o, random) = t.measure_pauli(0, Axis::Z, 1);
        assert!(random);
        assert_eq!(o, 1);
        assert!(states_equal(&t, &StabilizerTableau::zero_state(1)));
    }

    #[test]
    fn measure_x_on_plus_is_forced() {
        let mut t = StabilizerTableau::plus_state(1);
        let (o, random) = t.measure_pauli(0, Axis::X, -1);
        assert!(!random);
        assert_eq!(o, 1, "forced outcome reported even against preference");
    }

    #[test]
    fn forced_negative_outcome() {
        // |1>: Z forced to -1
        let mut t = StabilizerTableau::zero_state(1);
        t.gens[0] = PauliOperator::single(1, 0, Axis::Z, -1);
        let (o, random) = t.measure_pauli(0, Axis::Z, 1);
        assert!(!random);
        assert_eq!(o, -1);
    }

    #[test]
    fn states_equal_distinguishes_signs() {
        let zero = StabilizerTableau::zero_state(1);
        let mut one = StabilizerTableau::zero_state(1);
        one.gens[0] = PauliOperator::single(1, 0, Axis::Z, -1);
        assert!(!states_equal(&zero, &one));
        assert!(states_equal(&zero, &zero));
    }

    #[test]
    fn equal_states_from_different_presentations() {
        // the two-qubit graph state via a circuit...
        let mut a = StabilizerTableau::plus_state(2);
        a.apply(CliffordGate::Cz(0, 1));
        // ...and via a hand-picked generating set {X⊗Z, Y⊗Y}
        let mut g1 = PauliOperator::single(2, 0, Axis::X, 1);
        g1.mul_assign(&PauliOperator::single(2, 1, Axis::Z, 1));
        let mut g2 = PauliOperator::single(2, 0, Axis::Y, 1);
        g2.mul_assign(&PauliOperator::single(2, 1, Axis::Y, 1));
        let b = StabilizerTableau { n: 2, gens: vec![g1.clone(), g2.clone()] };
        assert!(states_equal(&a, &b));
        // flipping a sign distinguishes the states
        g2.phase = (g2.phase + 2) % 4;
        let c = StabilizerTableau { n: 2, gens: vec![g1, g2] };
        assert!(!states_equal(&a, &c));
    }

    #[test]
    fn correction_zero_vs_one() {
        let zero = StabilizerTableau::zero_state(1);
        let mut one = StabilizerTableau::zero_state(1);
        one.gens[0] = PauliOperator::single(1, 0, Axis::Z, -1);
        let p = find_pauli_correction(&zero, &one).unwrap();
        assert_eq!((p.x.get(0), p.z.get(0)), (true, false));
        let same = find_pauli_correction(&zero, &zero).unwrap();
        assert!(same.is_identity_bits());
    }

    #[test]
    fn correction_not_found_for_nonequivalent() {
        let zero = StabilizerTableau::zero_state(1);
        let plus = StabilizerTableau::plus_state(1);
        assert!(find_pauli_correction(&zero, &plus).is_err());
    }

    #[test]
    fn correction_roundtrip_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for trial in 0..100 {
            let n = rng.gen_range(1..6);
            // random Clifford circuit state
            let mut t = StabilizerTableau::plus_state(n);
            for _ in 0..20 {
                match rng.gen_range(0..4) {
                    0 => t.apply(CliffordGate::H(rng.gen_range(0..n))),
                    1 => t.apply(CliffordGate::S(rng.gen_range(0..n))),
                    2 => {
                        if n > 1 {
                            let a = rng.gen_range(0..n);
                            let b = (a + rng.gen_range(1..n)) % n;
                            t.apply(CliffordGate::Cz(a, b));
                        }
                    }
                    _ => t.apply(CliffordGate::Z(rng.gen_range(0..n))),
                }
            }
            // random Pauli applied to it
            let mut p = PauliOperator::identity(n);
            for q in 0..n {
                if rng.gen() {
                    p.x.set(q, true);
                }
                if rng.gen() {
                    p.z.set(q, true);
                }
            }
            p.phase = (p.x.and_count(&p.z) % 2) as u8;
            let mut moved = t.clone();
            moved.apply_pauli(&p);
            let sol = find_pauli_correction(&t, &moved).unwrap();
            let mut back = t.clone();
            back.apply_pauli(&sol);
            assert!(states_equal(&back, &moved), "trial {trial}");
        }
    }

    #[test]
    fn decorated_edge_generators_match_twisted_form() {
        // vertices 0,1; edge-qubit 2; hadamard on 2
        let adj = vec![vec![2], vec![2], vec![0, 1]];
        let t = graph_state_tableau(&adj, &[false, false, true]);
        let mut k0 = PauliOperator::single(3, 0, Axis::X, 1);
        k0.mul_assign(&PauliOperator::single(3, 2, Axis::X, 1));
        let mut k1 = PauliOperator::single(3, 1, Axis::X, 1);
        k1.mul_assign(&PauliOperator::single(3, 2, Axis::X, 1));
        let mut k01 = PauliOperator::single(3, 2, Axis::Z, 1);
        k01.mul_assign(&PauliOperator::single(3, 0, Axis::Z, 1));
        k01.mul_assign(&PauliOperator::single(3, 1, Axis::Z, 1));
        let want = StabilizerTableau { n: 3, gens: vec![k0, k1, k01] };
        assert!(states_equal(&t, &want));
    }
}
