//! Word-packed GF(2) vectors and elimination, shared by the symplectic and
//! binary-matrix code. Bit `i` lives in word `i / 64` at position `i % 64`.

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

pub(crate) fn zeros(bits: usize) -> Vec<u64> {
    vec![0; words_for(bits)]
}

pub(crate) fn get(words: &[u64], i: usize) -> bool {
    (words[i / 64] >> (i % 64)) & 1 == 1
}

pub(crate) fn set(words: &mut [u64], i: usize, value: bool) {
    if value {
        words[i / 64] |= 1 << (i % 64);
    } else {
        words[i / 64] &= !(1 << (i % 64));
    }
}

pub(crate) fn xor_in(dst: &mut [u64], src: &[u64]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Parity of the AND of two vectors (the Boolean inner product).
pub(crate) fn dot_parity(a: &[u64], b: &[u64]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones())
        & 1
        == 1
}

pub(crate) fn is_zero(words: &[u64]) -> bool {
    words.iter().all(|w| *w == 0)
}

/// Index of the lowest set bit, if any.
pub(crate) fn first_set(words: &[u64]) -> Option<usize> {
    for (i, w) in words.iter().enumerate() {
        if *w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

/// A GF(2) row space kept in reduced row echelon form. Pivots are the lowest
/// set bit of each stored row, and every pivot column is cleared in all other
/// rows, so membership tests are a single reduction pass.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    ncols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub(crate) fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn reduce(&self, row: &mut [u64]) {
        for (basis, &pivot) in self.rows.iter().zip(&self.pivots) {
            if get(row, pivot) {
                xor_in(row, basis);
            }
        }
    }

    pub(crate) fn contains(&self, row: &[u64]) -> bool {
        let mut tmp = row.to_vec();
        self.reduce(&mut tmp);
        is_zero(&tmp)
    }

    /// Inserts a row, returning `true` if it was independent of the span.
    pub(crate) fn insert(&mut self, row: &[u64]) -> bool {
        debug_assert_eq!(row.len(), words_for(self.ncols));
        let mut row = row.to_vec();
        self.reduce(&mut row);
        let Some(pivot) = first_set(&row) else {
            return false;
        };
        // Keep the basis fully reduced: clear the new pivot everywhere else.
        for basis in &mut self.rows {
            if get(basis, pivot) {
                xor_in(basis, &row);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, row);
        true
    }

    pub(crate) fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub(crate) fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

/// Solves `A x = b` over GF(2) where each row of `a` holds the coefficients
/// of one equation. Returns the particular solution with every free variable
/// set to zero, or `None` if the system is inconsistent.
pub(crate) fn solve(a: &[Vec<u64>], ncols: usize, rhs: &[bool]) -> Option<Vec<u64>> {
    assert_eq!(a.len(), rhs.len());
    // Augment each row with its right-hand side at column `ncols`.
    let aug_cols = ncols + 1;
    let mut ech = Echelon::new(aug_cols);
    for (row, &b) in a.iter().zip(rhs) {
        let mut aug = zeros(aug_cols);
        aug[..row.len()].copy_from_slice(row);
        // The coefficient rows may be shorter than the augmented width.
        if aug.len() > row.len() {
            for w in &mut aug[row.len()..] {
                *w = 0;
            }
        }
        set(&mut aug, ncols, b);
        ech.insert(&aug);
    }
    // A pivot in the rhs column means 0 = 1.
    if ech.pivots().contains(&ncols) {
        return None;
    }
    let mut x = zeros(ncols);
    for (row, &pivot) in ech.rows().iter().zip(ech.pivots()) {
        // Free variables are zero, so each pivot variable equals its rhs bit.
        set(&mut x, pivot, get(row, ncols));
    }
    Some(x)
}

/// First nullspace basis vector of `A x = 0`: the one associated with the
/// lowest-index free variable. `None` when the kernel is trivial.
pub(crate) fn nullspace_first(a: &[Vec<u64>], ncols: usize) -> Option<Vec<u64>> {
    let mut ech = Echelon::new(ncols);
    for row in a {
        ech.insert(row);
    }
    let free = (0..ncols).find(|c| !ech.pivots().contains(c))?;
    let mut x = zeros(ncols);
    set(&mut x, free, true);
    for (row, &pivot) in ech.rows().iter().zip(ech.pivots()) {
        if get(row, free) {
            set(&mut x, pivot, true);
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(bits: &[usize], ncols: usize) -> Vec<u64> {
        let mut r = zeros(ncols);
        for &b in bits {
            set(&mut r, b, true);
        }
        r
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut ech = Echelon::new(4);
        assert!(ech.insert(&row(&[0, 1], 4)));
        assert!(ech.insert(&row(&[1, 2], 4)));
        assert!(!ech.insert(&row(&[0, 2], 4))); // sum of the first two
        assert_eq!(ech.rank(), 2);
        assert!(ech.contains(&row(&[0, 2], 4)));
        assert!(!ech.contains(&row(&[3], 4)));
        assert!(ech.contains(&row(&[], 4)));
    }

    #[test]
    fn solve_simple_system() {
        // x0 + x1 = 1, x1 = 1  =>  x0 = 0, x1 = 1
        let a = vec![row(&[0, 1], 2), row(&[1], 2)];
        let x = solve(&a, 2, &[true, true]).unwrap();
        assert!(!get(&x, 0));
        assert!(get(&x, 1));
    }

    #[test]
    fn solve_inconsistent() {
        let a = vec![row(&[0], 2), row(&[0], 2)];
        assert!(solve(&a, 2, &[true, false]).is_none());
    }

    #[test]
    fn solve_prefers_zero_free_vars() {
        // Single equation x0 + x1 = 1: pivot x0 = 1, free x1 = 0.
        let a = vec![row(&[0, 1], 2)];
        let x = solve(&a, 2, &[true]).unwrap();
        assert!(get(&x, 0));
        assert!(!get(&x, 1));
    }

    #[test]
    fn nullspace_first_picks_lowest_free_var() {
        // No constraints: kernel basis vector for variable 0.
        let x = nullspace_first(&[], 3).unwrap();
        assert_eq!(first_set(&x), Some(0));

        // x0 = 0 pins variable 0; the first free variable is 1.
        let a = vec![row(&[0], 3)];
        let x = nullspace_first(&a, 3).unwrap();
        assert_eq!(first_set(&x), Some(1));

        // Full-rank system has a trivial kernel.
        let a = vec![row(&[0], 2), row(&[1], 2)];
        assert!(nullspace_first(&a, 2).is_none());
    }
}
