//! Arithmetic over GF(4) = {0, 1, ω, ω̄} and its correspondence with Pauli
//! operators: 0 ↔ I, ω̄ ↔ X, 1 ↔ Y, ω ↔ Z.
//!
//! Elements are stored as the 2-bit pair `(x, z)` of their symplectic image,
//! so addition is XOR and the GF(4)-to-symplectic conversion is a
//! re-interpretation of the same bits rather than a lookup. Conjugation
//! (ω ↔ ω̄) is the swap of the two bits.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::pauli::{errors_of_weight, BinMatrix, CheckMatrix, SympVector};
use crate::{DistanceResult, Error, Result};

/// An element of the four-element field.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0b00);
    /// The multiplicative identity; its Pauli image is Y.
    pub const ONE: Gf4 = Gf4(0b11);
    /// ω, a primitive cube root of unity; its Pauli image is Z.
    pub const OMEGA: Gf4 = Gf4(0b01);
    /// ω̄ = ω², the conjugate of ω; its Pauli image is X.
    pub const OMEGA_BAR: Gf4 = Gf4(0b10);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// X bit of the symplectic image.
    pub fn x_bit(self) -> bool {
        self.0 & 0b10 != 0
    }

    /// Z bit of the symplectic image.
    pub fn z_bit(self) -> bool {
        self.0 & 0b01 != 0
    }

    /// Conjugation ω ↔ ω̄ (the Frobenius map x ↦ x²).
    pub fn conj(self) -> Gf4 {
        Gf4(((self.0 << 1) | (self.0 >> 1)) & 0b11)
    }

    /// Multiplicative inverse; `None` for zero. For nonzero x, x⁻¹ = x².
    pub fn inv(self) -> Option<Gf4> {
        if self.is_zero() {
            None
        } else {
            Some(self.conj())
        }
    }

    pub fn from_char(ch: char) -> Option<Gf4> {
        match ch {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::OMEGA),
            'W' => Some(Gf4::OMEGA_BAR),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Gf4::ZERO => '0',
            Gf4::ONE => '1',
            Gf4::OMEGA => 'w',
            _ => 'W',
        }
    }

    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR];
    pub const NONZERO: [Gf4; 3] = [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR];
}

impl Add for Gf4 {
    type Output = Gf4;

    // Characteristic 2: field addition is XOR of the bit pairs.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;

    fn mul(self, rhs: Gf4) -> Gf4 {
        if self.is_zero() || rhs.is_zero() {
            return Gf4::ZERO;
        }
        // Discrete logs base ω: one ↦ 0, ω ↦ 1, ω̄ ↦ 2 (indexed by encoding).
        const LOG: [u8; 4] = [u8::MAX, 1, 2, 0];
        const EXP: [Gf4; 3] = [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR];
        EXP[((LOG[self.0 as usize] + LOG[rhs.0 as usize]) % 3) as usize]
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf4({})", self.to_char())
    }
}

/// A rectangular matrix over GF(4), the classical-code input of the
/// quaternary construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf4Matrix {
    nrows: usize,
    ncols: usize,
    entries: Vec<Gf4>,
}

impl Gf4Matrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Gf4Matrix {
            nrows,
            ncols,
            entries: vec![Gf4::ZERO; nrows * ncols],
        }
    }

    pub fn from_rows(rows: &[Vec<Gf4>]) -> Result<Self> {
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
        }
        Ok(Gf4Matrix {
            nrows: rows.len(),
            ncols,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    /// An empty (zero-row) matrix over `ncols` columns.
    pub fn empty(ncols: usize) -> Self {
        Gf4Matrix::zero(0, ncols)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        self.entries[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Gf4) {
        self.entries[i * self.ncols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Gf4] {
        &self.entries[i * self.ncols..(i + 1) * self.ncols]
    }

    /// Every entry multiplied by `scalar`.
    pub fn scaled(&self, scalar: Gf4) -> Gf4Matrix {
        Gf4Matrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(|&e| e * scalar).collect(),
        }
    }

    /// The stacked matrix `(ω·H ; ω̄·H)` with twice the rows. As a quaternary
    /// code it has the same null space as `H`; its rows map onto the quantum
    /// stabilizer generators.
    pub fn expand_ctq(&self) -> Gf4Matrix {
        let top = self.scaled(Gf4::OMEGA);
        let bottom = self.scaled(Gf4::OMEGA_BAR);
        let mut entries = top.entries;
        entries.extend(bottom.entries);
        Gf4Matrix {
            nrows: 2 * self.nrows,
            ncols: self.ncols,
            entries,
        }
    }

    /// Conjugate transpose: transpose and swap ω ↔ ω̄.
    pub fn dagger(&self) -> Gf4Matrix {
        let mut out = Gf4Matrix::zero(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn matmul(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.ncols != other.nrows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut out = Gf4Matrix::zero(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for j in 0..other.ncols {
                let mut acc = Gf4::ZERO;
                for l in 0..self.ncols {
                    acc += self.get(i, l) * other.get(l, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Rank over GF(4) by Gaussian elimination; every nonzero element has an
    /// inverse, so pivoting never stalls.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row echelon form plus the pivot column list.
    fn rref(&self) -> (Gf4Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.ncols {
            if r == m.nrows {
                break;
            }
            let Some(p) = (r..m.nrows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            for j in 0..m.ncols {
                let tmp = m.get(r, j);
                m.set(r, j, m.get(p, j));
                m.set(p, j, tmp);
            }
            let inv = m.get(r, col).inv().expect("pivot is nonzero");
            for j in 0..m.ncols {
                m.set(r, j, m.get(r, j) * inv);
            }
            for i in 0..m.nrows {
                if i != r && !m.get(i, col).is_zero() {
                    let factor = m.get(i, col);
                    for j in 0..m.ncols {
                        let v = m.get(i, j) + factor * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    /// A basis of the null space {v : H·v = 0}, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<Gf4>> {
        let (rref, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Gf4::ZERO; self.ncols];
            v[free] = Gf4::ONE;
            for (row, &pivot) in pivots.iter().enumerate() {
                // In characteristic 2, -x = x.
                v[pivot] = rref.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Whether `v` is a codeword: orthogonal to every check row.
    pub fn in_null_space(&self, v: &[Gf4]) -> Result<bool> {
        if v.len() != self.ncols {
            return Err(Error::Dimension(format!(
                "vector has {} entries, expected {}",
                v.len(),
                self.ncols
            )));
        }
        Ok((0..self.nrows).all(|i| {
            let mut acc = Gf4::ZERO;
            for (j, &e) in v.iter().enumerate() {
                acc += self.get(i, j) * e;
            }
            acc.is_zero()
        }))
    }

    /// Per-entry map to the symplectic representation: 0→(0|0), ω̄→(1|0),
    /// 1→(1|1), ω→(0|1); one output row per input row.
    pub fn to_symplectic(&self) -> CheckMatrix {
        let rows = (0..self.nrows)
            .map(|i| {
                let mut v = SympVector::identity(self.ncols);
                for j in 0..self.ncols {
                    let e = self.get(i, j);
                    v.set_x(j, e.x_bit());
                    v.set_z(j, e.z_bit());
                }
                v
            })
            .collect();
        CheckMatrix::from_rows(self.ncols, rows).expect("rows share n by construction")
    }

    /// Minimum Hamming weight over nonzero codewords of the null space,
    /// searched exhaustively up to `max_weight`. A miss is reported as
    /// [`DistanceResult::ExceedsMaxWeight`], never silently.
    pub fn min_distance(&self, max_weight: usize) -> DistanceResult {
        let n = self.ncols;
        let max_w = max_weight.min(n);
        let basis = self.null_space();
        let k = basis.len();
        if k == 0 {
            return DistanceResult::ExceedsMaxWeight(max_weight);
        }
        // Two equivalent searches; pick the cheaper enumeration.
        let codeword_cost = 4u128.checked_pow(k as u32);
        let weight_cost = crate::pauli::enumeration_cost(n, max_w);
        match codeword_cost {
            Some(cost) if cost <= weight_cost => {
                let mut best = usize::MAX;
                for mask in 1..cost {
                    let mut word = vec![Gf4::ZERO; n];
                    for (i, b) in basis.iter().enumerate() {
                        let coeff = Gf4((mask >> (2 * i) & 0b11) as u8);
                        if !coeff.is_zero() {
                            for (w, &e) in word.iter_mut().zip(b) {
                                *w += coeff * e;
                            }
                        }
                    }
                    let weight = word.iter().filter(|e| !e.is_zero()).count();
                    if weight > 0 {
                        best = best.min(weight);
                    }
                }
                if best <= max_w {
                    DistanceResult::Found(best)
                } else {
                    DistanceResult::ExceedsMaxWeight(max_weight)
                }
            }
            _ => {
                // Weight classes in ascending order; first hit is minimal.
                for w in 1..=max_w {
                    for pattern in errors_of_weight(n, w) {
                        let word: Vec<Gf4> = (0..n)
                            .map(|j| {
                                Gf4((u8::from(pattern.x_bit(j)) << 1) | u8::from(pattern.z_bit(j)))
                            })
                            .collect();
                        if self.in_null_space(&word).expect("lengths match") {
                            return DistanceResult::Found(w);
                        }
                    }
                }
                DistanceResult::ExceedsMaxWeight(max_weight)
            }
        }
    }

    /// Parses the GF(4) matrix text format: one row per line, entries from
    /// {0, 1, w, W} separated by whitespace, `#` comments and blank lines
    /// ignored.
    pub fn parse(text: &str) -> Result<Gf4Matrix> {
        let mut rows: Vec<Vec<Gf4>> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for token in line.split_whitespace() {
                for ch in token.chars() {
                    match Gf4::from_char(ch) {
                        Some(e) => row.push(e),
                        None => {
                            return Err(Error::Parse {
                                line: idx + 1,
                                message: format!(
                                    "invalid GF(4) entry {ch:?} (expected one of 0, 1, w, W)"
                                ),
                            })
                        }
                    }
                }
            }
            if let Some(first) = rows.first() {
                if row.len() != first.len() {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: format!(
                            "row has {} entries but earlier rows have {}",
                            row.len(),
                            first.len()
                        ),
                    });
                }
            }
            rows.push(row);
        }
        Gf4Matrix::from_rows(&rows)
    }
}

impl fmt::Display for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.ncols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf4Matrix({}x{})[", self.nrows, self.ncols)?;
        for i in 0..self.nrows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.ncols {
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Ebits needed by the quaternary construction: `rank(H·H†)` over GF(4).
/// Zero exactly when `H` is self-orthogonal (dual-containing), the standard
/// stabilizer case; the maximum is the number of independent checks.
pub fn ebit_count_gf4(h: &Gf4Matrix) -> usize {
    h.matmul(&h.dagger()).expect("H·H† shapes agree").rank()
}

/// Ebits needed by the two-matrix CSS construction: GF(2) rank of `H₁·H₂ᵀ`.
pub fn ebit_count_css(h1: &BinMatrix, h2: &BinMatrix) -> Result<usize> {
    Ok(h1.mul_transpose(h2)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The check matrix of the worked-example [4,2,3] quaternary code.
    pub(crate) fn h4() -> Gf4Matrix {
        Gf4Matrix::parse("1 w 1 0\n1 1 0 1").unwrap()
    }

    #[test]
    fn addition_rules() {
        for a in Gf4::ALL {
            assert_eq!(a + a, Gf4::ZERO);
            assert_eq!(a + Gf4::ZERO, a);
        }
        assert_eq!(Gf4::OMEGA_BAR + Gf4::ONE, Gf4::OMEGA);
        assert_eq!(Gf4::ONE + Gf4::OMEGA, Gf4::OMEGA_BAR);
        assert_eq!(Gf4::OMEGA + Gf4::OMEGA_BAR, Gf4::ONE);
    }

    #[test]
    fn multiplication_rules() {
        assert_eq!(Gf4::OMEGA * Gf4::OMEGA, Gf4::OMEGA_BAR);
        assert_eq!(Gf4::OMEGA_BAR * Gf4::OMEGA_BAR, Gf4::OMEGA);
        assert_eq!(Gf4::OMEGA * Gf4::OMEGA_BAR, Gf4::ONE);
        for a in Gf4::ALL {
            assert_eq!(a * Gf4::ONE, a);
            assert_eq!(a * Gf4::ZERO, Gf4::ZERO);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for a in Gf4::ALL {
            for b in Gf4::ALL {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in Gf4::ALL {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), Gf4::ONE);
            }
        }
        assert!(Gf4::ZERO.inv().is_none());
    }

    #[test]
    fn conjugation() {
        assert_eq!(Gf4::OMEGA.conj(), Gf4::OMEGA_BAR);
        assert_eq!(Gf4::OMEGA_BAR.conj(), Gf4::OMEGA);
        assert_eq!(Gf4::ZERO.conj(), Gf4::ZERO);
        assert_eq!(Gf4::ONE.conj(), Gf4::ONE);
        for a in Gf4::ALL {
            assert_eq!(a.conj(), a * a); // Frobenius
        }
    }

    #[test]
    fn expand_ctq_worked_example() {
        let expanded = h4().expand_ctq();
        let expected = Gf4Matrix::parse("w W w 0\nw w 0 w\nW 1 W 0\nW W 0 W").unwrap();
        assert_eq!(expanded, expected);

        let z = Gf4Matrix::zero(2, 3);
        assert_eq!(z.expand_ctq(), Gf4Matrix::zero(4, 3));

        let single = Gf4Matrix::parse("1").unwrap();
        assert_eq!(single.expand_ctq(), Gf4Matrix::parse("w\nW").unwrap());
    }

    #[test]
    fn dagger_rules() {
        let h = h4();
        assert_eq!(h.dagger().dagger(), h);
        let m = Gf4Matrix::parse("0 w\n0 0").unwrap();
        let d = m.dagger();
        assert_eq!(d.get(1, 0), Gf4::OMEGA_BAR);
        assert_eq!(d.get(0, 1), Gf4::ZERO);
        // A 0/1 matrix just transposes.
        let b = Gf4Matrix::parse("1 0 1\n0 1 1").unwrap();
        let bt = b.dagger();
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(b.get(i, j), bt.get(j, i));
            }
        }
    }

    #[test]
    fn rank_examples() {
        let id = Gf4Matrix::parse("1 0 0\n0 1 0\n0 0 1").unwrap();
        assert_eq!(id.rank(), 3);
        assert_eq!(Gf4Matrix::zero(3, 4).rank(), 0);

        // H₄·H₄† worked by hand: [[1, ω̄], [ω, 1]], a rank-1 matrix.
        let product = h4().matmul(&h4().dagger()).unwrap();
        assert_eq!(product, Gf4Matrix::parse("1 W\nw 1").unwrap());
        assert_eq!(product.rank(), 1);
    }

    #[test]
    fn ebit_counts() {
        assert_eq!(ebit_count_gf4(&h4()), 1);
        // A binary dual-containing matrix is Hermitian self-orthogonal.
        let hamming = Gf4Matrix::parse("0 0 0 1 1 1 1\n0 1 1 0 0 1 1\n1 0 1 0 1 0 1").unwrap();
        assert_eq!(ebit_count_gf4(&hamming), 0);
        // rank(H·H†) is at most the number of independent checks.
        assert!(ebit_count_gf4(&h4()) <= h4().rank());
    }

    #[test]
    fn ebit_count_css_examples() {
        let hamming = BinMatrix::parse("0 0 0 1 1 1 1\n0 1 1 0 0 1 1\n1 0 1 0 1 0 1").unwrap();
        assert_eq!(ebit_count_css(&hamming, &hamming).unwrap(), 0);
        let zero = BinMatrix::zero(2, 7);
        assert_eq!(ebit_count_css(&hamming, &zero).unwrap(), 0);
        let pair = BinMatrix::parse("1 1 0\n0 1 1").unwrap();
        assert_eq!(ebit_count_css(&pair, &pair).unwrap(), 2);
        assert!(ebit_count_css(&pair, &zero).is_err());
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(h4().min_distance(4), DistanceResult::Found(3));

        let id = Gf4Matrix::parse("1 0\n0 1").unwrap();
        assert_eq!(id.min_distance(2), DistanceResult::ExceedsMaxWeight(2));

        let rep = Gf4Matrix::parse("1 1").unwrap();
        assert_eq!(rep.min_distance(2), DistanceResult::Found(2));

        // Distance 3 exceeds a weight-2 search bound.
        assert_eq!(h4().min_distance(2), DistanceResult::ExceedsMaxWeight(2));
    }

    #[test]
    fn min_distance_strategies_agree() {
        // [1 1] over 12 columns: null space dimension 11 forces the
        // weight-class search; compare with the codeword search on a
        // smaller matrix of the same structure.
        let wide = Gf4Matrix::parse("1 1 1 1 1 1 1 1 1 1 1 1").unwrap();
        assert_eq!(wide.min_distance(2), DistanceResult::Found(2));
        let narrow = Gf4Matrix::parse("1 1 1").unwrap();
        assert_eq!(narrow.min_distance(3), DistanceResult::Found(2));
    }

    #[test]
    fn to_symplectic_examples() {
        let row = Gf4Matrix::from_rows(&[vec![Gf4::ONE, Gf4::OMEGA, Gf4::ONE, Gf4::ZERO]]).unwrap();
        let m = row.to_symplectic();
        assert_eq!(m.rows()[0].to_binary_row(), "1 0 1 0 | 1 1 1 0");

        assert!(Gf4Matrix::zero(2, 3)
            .to_symplectic()
            .rows()
            .iter()
            .all(SympVector::is_identity));

        // The image of the expanded H₄ is exactly the generator set M₁..M₄.
        let m = h4().expand_ctq().to_symplectic();
        let labels: Vec<String> = m.rows().iter().map(|r| r.to_string()).collect();
        assert_eq!(labels, ["ZXZI", "ZZIZ", "XYXI", "XXIX"]);
    }

    /// Trace of x over GF(2): Tr(x) = x + x², i.e. 1 exactly for ω and ω̄.
    fn trace(e: Gf4) -> bool {
        !(e + e.conj()).is_zero()
    }

    #[test]
    fn symplectic_product_matches_trace_hermitian_form() {
        // Independent oracle for the GF(4)↔Pauli correspondence: the
        // commutation bit of the mapped operators equals Tr(u·v̄) summed
        // over entries. Exhaustive over all pairs of length-2 vectors.
        for a0 in Gf4::ALL {
            for a1 in Gf4::ALL {
                for b0 in Gf4::ALL {
                    for b1 in Gf4::ALL {
                        let u = Gf4Matrix::from_rows(&[vec![a0, a1]]).unwrap();
                        let v = Gf4Matrix::from_rows(&[vec![b0, b1]]).unwrap();
                        let su = u.to_symplectic().rows()[0].clone();
                        let sv = v.to_symplectic().rows()[0].clone();
                        let herm = trace(a0 * b0.conj()) ^ trace(a1 * b1.conj());
                        assert_eq!(su.symplectic_product(&sv).unwrap(), herm);
                    }
                }
            }
        }
    }

    #[test]
    fn map_is_additive() {
        // gf4_to_symplectic of a sum equals the product of the images.
        for a0 in Gf4::ALL {
            for a1 in Gf4::ALL {
                for b0 in Gf4::ALL {
                    for b1 in Gf4::ALL {
                        let sum = Gf4Matrix::from_rows(&[vec![a0 + b0, a1 + b1]]).unwrap();
                        let u = Gf4Matrix::from_rows(&[vec![a0, a1]]).unwrap();
                        let v = Gf4Matrix::from_rows(&[vec![b0, b1]]).unwrap();
                        let product = u.to_symplectic().rows()[0]
                            .multiply(&v.to_symplectic().rows()[0])
                            .unwrap();
                        assert_eq!(sum.to_symplectic().rows()[0], product);
                    }
                }
            }
        }
    }

    #[test]
    fn expand_ctq_preserves_null_space() {
        for m in [
            h4(),
            Gf4Matrix::parse("1 1 0\n0 w W").unwrap(),
            Gf4Matrix::parse("w W\n1 1").unwrap(),
        ] {
            let expanded = m.expand_ctq();
            for basis_vec in m.null_space() {
                assert!(expanded.in_null_space(&basis_vec).unwrap());
            }
            for basis_vec in expanded.null_space() {
                assert!(m.in_null_space(&basis_vec).unwrap());
            }
            assert_eq!(m.rank(), expanded.rank());
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Gf4Matrix::parse("1 w\n# ok\n1 q").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = Gf4Matrix::parse("1 w\n1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn display_round_trip() {
        let h = h4();
        assert_eq!(Gf4Matrix::parse(&h.to_string()).unwrap(), h);
    }
}
