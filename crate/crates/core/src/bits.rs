//! Word-packed GF(2) row vectors and the little linear algebra the stabilizer
//! layer needs.

/// Fixed-width bit vector packed into `u64` words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if v {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn any(&self) -> bool {
        self.words.iter().any(|&w| w != 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of `popcount(self & other)` — the GF(2) inner product.
    pub fn dot(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    /// Number of set bits shared with `other`.
    pub fn and_count(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                let i = wi * 64 + w.trailing_zeros() as usize;
                if i < self.len {
                    return Some(i);
                }
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }
}

/// Solve `sum_j x_j rows[j] = target` over GF(2).
///
/// Returns any solution as a selector over `rows`, or `None` if the target is
/// outside the span. Row order is deterministic.
pub fn solve_gf2(rows: &[BitRow], target: &BitRow) -> Option<Vec<bool>> {
    let m = rows.len();
    if m == 0 {
        return if target.any() { None } else { Some(vec![]) };
    }
    let width = rows[0].len();
    // Work matrix: each row augmented with the selector bookkeeping.
    let mut work: Vec<(BitRow, BitRow)> = rows
        .iter()
        .enumerate()
        .map(|(j, r)| {
            let mut sel = BitRow::new(m);
            sel.set(j, true);
            (r.clone(), sel)
        })
        .collect();
    let mut tgt = target.clone();
    let mut tsel = BitRow::new(m);
    let mut rank_rows: Vec<(usize, usize)> = Vec::new(); // (pivot column, row idx)
    let mut next = 0usize;
    for col in 0..width {
        let Some(pi) = (next..m).find(|&i| work[i].0.get(col)) else {
            continue;
        };
        work.swap(next, pi);
        for i in 0..m {
            if i != next && work[i].0.get(col) {
                let (head, tail) = work.split_at_mut(next.max(i));
                let (src, dst) = if i > next {
                    (&head[next], &mut tail[0])
                } else {
                    (&tail[0], &mut head[i])
                };
                dst.0.xor_assign(&src.0);
                dst.1.xor_assign(&src.1);
            }
        }
        if tgt.get(col) {
            tgt.xor_assign(&work[next].0);
            tsel.xor_assign(&work[next].1);
        }
        rank_rows.push((col, next));
        next += 1;
        if next == m {
            break;
        }
    }
    // Any leftover target bits in already-processed columns were eliminated;
    // remaining set bits mean "not in span".
    if tgt.any() {
        return None;
    }
    Some((0..m).map(|j| tsel.get(j)).collect())
}

/// Rank of a set of GF(2) rows (destroys nothing; clones internally).
pub fn rank_gf2(rows: &[BitRow]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut work: Vec<BitRow> = rows.to_vec();
    let mut rank = 0;
    for col in 0..width {
        let Some(pi) = (rank..work.len()).find(|&i| work[i].get(col)) else {
            continue;
        };
        work.swap(rank, pi);
        for i in 0..work.len() {
            if i != rank && work[i].get(col) {
                let (a, b) = work.split_at_mut(rank.max(i));
                if i > rank {
                    b[0].xor_assign(&a[rank]);
                } else {
                    a[i].xor_assign(&b[0]);
                }
            }
        }
        rank += 1;
        if rank == work.len() {
            break;
        }
    }
    rank
}
